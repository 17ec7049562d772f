//! Seeded pseudo-random sampling for verifiers and test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{CMat, CVec, C64};
use crate::vnalg::{fourier_transform, AlgOperator, GroupRef, SeqVector};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform on the square `[-1, 1] x [-1, 1]`.
    pub fn complex(&mut self) -> C64 {
        C64::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0))
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }

    pub fn cvec(&mut self, d: usize) -> CVec {
        CVec::from_iterator(d, (0..d).map(|_| self.complex()))
    }

    pub fn cmat(&mut self, rows: usize, cols: usize) -> CMat {
        CMat::from_fn(rows, cols, |_, _| self.complex())
    }

    pub fn seq_vector(&mut self, group: &GroupRef) -> SeqVector {
        let v = self.cvec(group.order());
        SeqVector::new(group.clone(), v).expect("length matches group order")
    }

    pub fn algebra_element(&mut self, group: &GroupRef) -> AlgOperator {
        fourier_transform(&self.seq_vector(group))
    }

    /// `F* F` for a random algebra element.
    pub fn psd_algebra_element(&mut self, group: &GroupRef) -> AlgOperator {
        let f = self.algebra_element(group);
        f.adjoint() * f
    }

    /// Hermitian algebra element `(F + F*)/2`.
    pub fn hermitian_algebra_element(&mut self, group: &GroupRef) -> AlgOperator {
        let f = self.algebra_element(group);
        (f.adjoint() + f).scale(C64::new(0.5, 0.0))
    }

    /// Haar-ish unitary from the QR factor of a random complex matrix.
    pub fn unitary(&mut self, d: usize) -> CMat {
        let m = self.cmat(d, d);
        let qr = m.qr();
        let (q, r) = (qr.q(), qr.r());
        let mut q = q;
        for j in 0..d {
            let diag = r[(j, j)];
            if diag.norm() > 0.0 {
                let phase = diag / diag.norm();
                for i in 0..d {
                    q[(i, j)] *= phase;
                }
            }
        }
        q
    }
}
