//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..n` in construction order. For the dihedral group
//! `D_m` the order is `e, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Groups compare by multiplication table; labels are cosmetic.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cayley == other.cayley
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table (`table[i][j]` is the index of `g_i * g_j`)
    /// and derives the identity and inverse tables.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {} (expected {n})",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("row {i} has out-of-range entry {bad}")));
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::NotAGroup(format!("{} labels for {n} elements", labels.len())));
            }
        }

        for (i, row) in table.iter().enumerate() {
            if !is_permutation(row.iter().copied(), n) {
                return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
            }
            if !is_permutation((0..n).map(|j| table[j][i]), n) {
                return Err(Error::NotAGroup(format!("column {i} is not a permutation")));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;

        let mut inverses = vec![0; n];
        for i in 0..n {
            inverses[i] = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))?;
        }

        for i in 0..n {
            for j in 0..n {
                let ij = table[i][j];
                for k in 0..n {
                    if table[ij][k] != table[i][table[j][k]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({i}, {j}, {k})")));
                    }
                }
            }
        }

        Ok(Self {
            order: n,
            cayley: table.into_iter().flatten().collect(),
            identity,
            inverses,
            labels,
        })
    }

    /// `Z_n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_cayley_table(table, Some(labels)).expect("cyclic table is a group")
    }

    /// `D_m` of order `2m`, presented as `a^m = b^2 = e`, `ba = a^{m-1}b`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 3, "dihedral group needs m >= 3");
        let n = 2 * m;
        // element a^i b^j sits at index i + m*j
        let table = (0..n)
            .map(|x| {
                let (i, j) = (x % m, x / m);
                (0..n)
                    .map(|y| {
                        let (k, l) = (y % m, y / m);
                        // b^j a^k = a^{(-1)^j k} b^j
                        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                        rot + m * ((j + l) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| {
                let (i, j) = (x % m, x / m);
                let rot = match i {
                    0 => String::new(),
                    1 => "a".to_string(),
                    _ => format!("a^{i}"),
                };
                match (rot.is_empty(), j) {
                    (true, 0) => "e".to_string(),
                    (true, _) => "b".to_string(),
                    (false, 0) => rot,
                    (false, _) => format!("{rot}b"),
                }
            })
            .collect();
        Self::from_cayley_table(table, Some(labels)).expect("dihedral table is a group")
    }

    /// `G x H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (ng, nh) = (g.order, h.order);
        let n = ng * nh;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh))
                    .collect()
            })
            .collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", g.label(x / nh), h.label(x % nh)))
            .collect();
        Self::from_cayley_table(table, Some(labels)).expect("direct product is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn cayley_row(&self, i: usize) -> &[usize] {
        &self.cayley[i * self.order..(i + 1) * self.order]
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| self.cayley_row(i).to_vec()).collect()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn element(&self, index: usize) -> Result<GroupElement<'_>> {
        if index >= self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: index,
            });
        }
        Ok(GroupElement { group: self, index })
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement<'_>> {
        (0..self.order).map(move |index| GroupElement { group: self, index })
    }

    /// Smallest `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// True when the table is exactly `build_cyclic(n)`'s table.
    pub fn is_canonical_cyclic(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (0..n).all(|j| self.mul(i, j) == (i + j) % n))
    }
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Handle for an element bound to its parent group.
#[derive(Clone, Copy)]
pub struct GroupElement<'g> {
    group: &'g FiniteGroup,
    index: usize,
}

impl<'g> GroupElement<'g> {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn multiply(&self, other: &GroupElement<'_>) -> Result<GroupElement<'g>> {
        if !std::ptr::eq(self.group, other.group) && self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupElement {
            group: self.group,
            index: self.group.mul(self.index, other.index),
        })
    }

    pub fn inverse(&self) -> GroupElement<'g> {
        GroupElement {
            group: self.group,
            index: self.group.inv(self.index),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.index == self.group.identity
    }
}

impl PartialEq for GroupElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.group == other.group
    }
}

impl fmt::Debug for GroupElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group.label(self.index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &FiniteGroup) {
        let n = g.order();
        let e = g.identity();
        for i in 0..n {
            assert_eq!(g.mul(e, i), i);
            assert_eq!(g.mul(i, e), i);
            assert_eq!(g.mul(i, g.inv(i)), e);
            assert_eq!(g.mul(g.inv(i), i), e);
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
                }
            }
        }
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_cayley_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverses(), &[0, 1]);
        assert_eq!(g, FiniteGroup::cyclic(2));
    }

    #[test]
    fn z3_from_table() {
        let g = FiniteGroup::from_cayley_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]], None).unwrap();
        assert_eq!(g, FiniteGroup::cyclic(3));
        assert_eq!(g.inverses(), &[0, 2, 1]);
    }

    #[test]
    fn rejects_non_latin_row() {
        let err = FiniteGroup::from_cayley_table(vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("row 1")));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // a Latin square with identity 0 that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_cayley_table(t, None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn rejects_ragged_and_out_of_range() {
        assert!(FiniteGroup::from_cayley_table(vec![vec![0, 1], vec![1]], None).is_err());
        assert!(FiniteGroup::from_cayley_table(vec![vec![0, 2], vec![1, 0]], None).is_err());
        assert!(FiniteGroup::from_cayley_table(vec![], None).is_err());
    }

    #[test]
    fn cyclic_small_cases() {
        let trivial = FiniteGroup::cyclic(1);
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.identity(), 0);
        let z12 = FiniteGroup::cyclic(12);
        assert_eq!(z12.element_order(1), 12);
        assert_eq!(z12.element_order(4), 3);
        assert!(z12.is_abelian());
    }

    #[test]
    fn dihedral_relations() {
        let d3 = FiniteGroup::dihedral(3);
        let (e, a, a2, b, ab, a2b) = (0, 1, 2, 3, 4, 5);
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.mul(b, a), a2b);
        assert_eq!(d3.mul(a, b), ab);
        assert_eq!(d3.mul(b, b), e);
        assert_eq!(d3.mul(a, d3.mul(a, a)), e);
        assert_eq!(d3.inv(a), a2);
        assert_eq!(d3.label(a2b), "a^2b");
        assert!(!d3.is_abelian());

        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.element_order(1), 4);
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        for x in 1..4 {
            assert_eq!(v4.element_order(x), 2);
        }
        let z2z3 = FiniteGroup::direct_product(&z2, &FiniteGroup::cyclic(3));
        assert_eq!(z2z3.order(), 6);
        assert!(z2z3.is_abelian());

        let d3 = FiniteGroup::dihedral(3);
        let copy = FiniteGroup::direct_product(&FiniteGroup::cyclic(1), &d3);
        assert_eq!(copy, d3);
    }

    #[test]
    fn element_handles() {
        let z3 = FiniteGroup::cyclic(3);
        let one = z3.element(1).unwrap();
        let two = z3.element(2).unwrap();
        assert_eq!(one.multiply(&two).unwrap().index(), 0);
        assert!(z3.element(3).is_err());

        let d3 = FiniteGroup::dihedral(3);
        assert_eq!(d3.element(1).unwrap().inverse().index(), 2);
        for g in [&z3, &d3] {
            let e = g.element(g.identity()).unwrap();
            assert!(e.inverse().is_identity());
        }

        let z6 = FiniteGroup::cyclic(6);
        let x = z6.element(1).unwrap();
        let y = d3.element(1).unwrap();
        assert_eq!(x.multiply(&y).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn constructed_groups_satisfy_axioms() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let mut groups = vec![FiniteGroup::cyclic(1)];
        groups.extend((2..=16).map(FiniteGroup::cyclic));
        groups.extend((3..=8).map(FiniteGroup::dihedral));
        groups.push(FiniteGroup::direct_product(&z2, &FiniteGroup::dihedral(4)));
        groups.push(FiniteGroup::direct_product(&z4, &z4));
        groups.push(FiniteGroup::direct_product(
            &FiniteGroup::dihedral(3),
            &FiniteGroup::cyclic(8),
        ));
        for g in &groups {
            assert!(g.order() <= 64);
            check_axioms(g);
            for x in 0..g.order() {
                assert_eq!(g.inv(g.inv(x)), x);
            }
        }
    }
}
