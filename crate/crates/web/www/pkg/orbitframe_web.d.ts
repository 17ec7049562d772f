/* tslint:disable */
/* eslint-disable */

/**
 * Riesz/frame analysis of `a delta_{g1} + b delta_{g2}` on `Z_n`.
 */
export function comb_explorer(n: number, g1: number, g2: number, a_re: number, a_im: number, b_re: number, b_im: number): string;

/**
 * Self-brackets of the fixed, boundary and interior vectors of the D3
 * model, plus the certified demo report.
 */
export function d3_brackets(): string;

/**
 * `values` is `random` or comma-separated `re` / `re:im` entries.
 */
export function fiberization(n: number, values: string, seed: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly comb_explorer: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly d3_brackets: () => [number, number];
    readonly fiberization: (a: number, b: number, c: number, d: bigint) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
