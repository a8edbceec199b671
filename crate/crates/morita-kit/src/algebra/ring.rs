//! Finite rings (and rngs) as structure-constant tables over a finite
//! abelian group.
//!
//! The multiplication table stores the product of each pair of additive
//! generators; bilinearity extends it to all elements, so the axioms only
//! need checking on generator tuples. A ring without a unity element is an
//! rng and is flagged by `one: None`.

use crate::abelian::{gcd, Elem, FinAbGroup, IntMat};
use crate::caps::caps;
use crate::error::{Error, Result, ValidationReport};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinRing {
    group: FinAbGroup,
    /// `mult[i][j]` = product of generator `i` by generator `j`.
    mult: Vec<Vec<Elem>>,
    one: Option<Elem>,
}

impl FinRing {
    /// Shape-checked constructor; axioms are checked by [`FinRing::validate`].
    pub fn new(group: FinAbGroup, mult: Vec<Vec<Elem>>, one: Option<Elem>) -> Result<Self> {
        let k = group.rank();
        if mult.len() != k || mult.iter().any(|row| row.len() != k) {
            return Err(Error::Shape(format!("multiplication table must be {k}x{k}")));
        }
        for row in &mult {
            for e in row {
                if !group.contains(e) {
                    return Err(Error::Shape(format!("table entry {e:?} out of range")));
                }
            }
        }
        if let Some(e) = &one {
            if !group.contains(e) {
                return Err(Error::Shape("unity element out of range".into()));
            }
        }
        Ok(Self { group, mult, one })
    }

    /// Constructor that also runs full axiom validation.
    pub fn validated(group: FinAbGroup, mult: Vec<Vec<Elem>>, one: Option<Elem>) -> Result<Self> {
        let ring = Self::new(group, mult, one)?;
        ring.validate().into_result()?;
        Ok(ring)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn one(&self) -> Option<&Elem> {
        self.one.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    pub fn zero(&self) -> Elem {
        self.group.zero()
    }

    pub fn gen_product(&self, i: usize, j: usize) -> &Elem {
        &self.mult[i][j]
    }

    pub fn mult_table(&self) -> &[Vec<Elem>] {
        &self.mult
    }

    /// Bilinear extension of the generator table.
    pub fn mul(&self, a: &[i64], b: &[i64]) -> Elem {
        let k = self.rank();
        let mut acc = vec![0i128; k];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = i128::from(ai) * i128::from(bj);
                for (slot, &x) in acc.iter_mut().zip(&self.mult[i][j]) {
                    *slot += c * i128::from(x);
                }
            }
        }
        self.group.reduce(&acc)
    }

    /// Matrix of `x ↦ a·x` on group coordinates.
    pub fn left_mult_matrix(&self, a: &[i64]) -> IntMat {
        let k = self.rank();
        IntMat::from_fn(k, k, |row, col| i128::from(self.mul(a, &self.group.generator(col))[row]))
    }

    /// Matrix of `x ↦ x·a` on group coordinates.
    pub fn right_mult_matrix(&self, a: &[i64]) -> IntMat {
        let k = self.rank();
        IntMat::from_fn(k, k, |row, col| i128::from(self.mul(&self.group.generator(col), a)[row]))
    }

    /// Check well-definedness, associativity and (if present) unitality on
    /// generators; bilinearity makes the generator check sufficient.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("ring");
        let k = self.rank();
        let d = self.group.moduli();
        for i in 0..k {
            for j in 0..k {
                let ord = self.group.element_order(&self.mult[i][j]);
                let bound = gcd(d[i], d[j]);
                if bound % ord != 0 {
                    report.push(
                        "well-definedness",
                        vec![i, j],
                        format!("product has additive order {ord}, must divide gcd = {bound}"),
                    );
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let lhs = self.mul(&self.mult[i][j], &self.group.generator(l));
                    let rhs = self.mul(&self.group.generator(i), &self.mult[j][l]);
                    if lhs != rhs {
                        report.push(
                            "associativity",
                            vec![i, j, l],
                            format!("(g{i}·g{j})·g{l} = {lhs:?} but g{i}·(g{j}·g{l}) = {rhs:?}"),
                        );
                    }
                }
            }
        }
        if let Some(one) = &self.one {
            for i in 0..k {
                let g = self.group.generator(i);
                let left = self.mul(one, &g);
                let right = self.mul(&g, one);
                if left != g || right != g {
                    report.push(
                        "unity",
                        vec![i],
                        format!("1·g{i} = {left:?}, g{i}·1 = {right:?}"),
                    );
                }
            }
        }
        report
    }

    /// Same additive group, transposed multiplication.
    pub fn opposite(&self) -> FinRing {
        let k = self.rank();
        let mult = (0..k).map(|i| (0..k).map(|j| self.mult[j][i].clone()).collect()).collect();
        FinRing { group: self.group.clone(), mult, one: self.one.clone() }
    }

    /// All idempotent elements, in element-enumeration order.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.group.elements().filter(|e| self.mul(e, e) == *e).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    // --- constructors -----------------------------------------------------

    /// The ring of integers modulo `n`.
    pub fn cyclic(n: i64) -> Result<FinRing> {
        let group = FinAbGroup::new(vec![n])?;
        FinRing::new(group, vec![vec![vec![1]]], Some(vec![1]))
    }

    /// `n×n` matrices over `Z_m`, generators `E_{ij}` in row-major order.
    pub fn matrix_ring(n: usize, m: i64) -> Result<FinRing> {
        if n < 1 || m < 2 {
            return Err(Error::Shape("matrix_ring requires n ≥ 1, m ≥ 2".into()));
        }
        let order = (m as u128).checked_pow((n * n) as u32);
        if order.is_none_or(|o| o > caps().max_group_order) {
            return Err(Error::Capacity(format!(
                "matrix ring of order m^(n²) = {m}^{} exceeds the group-order cap",
                n * n
            )));
        }
        let k = n * n;
        let group = FinAbGroup::new(vec![m; k])?;
        let idx = |r: usize, c: usize| r * n + c;
        let mut mult = vec![vec![group.zero(); k]; k];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_{ij} · E_{jl} = E_{il}
                    mult[idx(i, j)][idx(j, l)] = group.generator(idx(i, l));
                }
            }
        }
        let mut one = group.zero();
        for i in 0..n {
            one[idx(i, i)] = 1;
        }
        FinRing::new(group, mult, Some(one))
    }

    /// Direct product of two rings (componentwise operations).
    pub fn product(a: &FinRing, b: &FinRing) -> Result<FinRing> {
        let group = a.group.direct_sum(&b.group);
        let (ka, kb) = (a.rank(), b.rank());
        let k = ka + kb;
        let embed_a = |e: &Elem| -> Elem {
            let mut v = vec![0; k];
            v[..ka].copy_from_slice(e);
            v
        };
        let embed_b = |e: &Elem| -> Elem {
            let mut v = vec![0; k];
            v[ka..].copy_from_slice(e);
            v
        };
        let mut mult = vec![vec![vec![0; k]; k]; k];
        for i in 0..ka {
            for j in 0..ka {
                mult[i][j] = embed_a(&a.mult[i][j]);
            }
        }
        for i in 0..kb {
            for j in 0..kb {
                mult[ka + i][ka + j] = embed_b(&b.mult[i][j]);
            }
        }
        let one = match (&a.one, &b.one) {
            (Some(x), Some(y)) => {
                let mut v = embed_a(x);
                v[ka..].copy_from_slice(y);
                Some(v)
            }
            _ => None,
        };
        FinRing::new(group, mult, one)
    }

    /// Upper-triangular 2×2 matrices over `Z_m`; generators E11, E12, E22.
    pub fn upper_triangular(m: i64) -> Result<FinRing> {
        let group = FinAbGroup::new(vec![m, m, m])?;
        let e11 = group.generator(0);
        let e12 = group.generator(1);
        let e22 = group.generator(2);
        let z = group.zero();
        let mult = vec![
            vec![e11.clone(), e12.clone(), z.clone()],
            vec![z.clone(), z.clone(), e12.clone()],
            vec![z.clone(), z.clone(), e22.clone()],
        ];
        let one = group.add(&e11, &e22);
        FinRing::new(group, mult, Some(one))
    }

    /// `Z_m[x]/(x²)`; generators 1, x.
    pub fn dual_numbers(m: i64) -> Result<FinRing> {
        let group = FinAbGroup::new(vec![m, m])?;
        let one = group.generator(0);
        let x = group.generator(1);
        let z = group.zero();
        let mult = vec![vec![one.clone(), x.clone()], vec![x.clone(), z]];
        FinRing::new(group, mult, Some(one))
    }

    /// The rng with given additive group and all products zero.
    pub fn zero_mult_rng(group: FinAbGroup) -> FinRing {
        let k = group.rank();
        let mult = vec![vec![group.zero(); k]; k];
        FinRing { group, mult, one: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_is_a_valid_ring() {
        let r = FinRing::cyclic(4).unwrap();
        assert!(r.validate().is_valid());
        assert_eq!(r.mul(&[2], &[3]), vec![2]);
        assert_eq!(r.mul(&[2], &[2]), vec![0]);
    }

    #[test]
    fn zero_multiplication_rng_is_valid_but_not_unital() {
        let g = FinAbGroup::new(vec![2, 2]).unwrap();
        let r = FinRing::zero_mult_rng(g);
        assert!(r.validate().is_valid());
        assert!(!r.is_unital());
    }

    #[test]
    fn wrong_unity_is_reported_with_witness() {
        let g = FinAbGroup::new(vec![2]).unwrap();
        let r = FinRing::new(g.clone(), vec![vec![vec![1]]], Some(vec![0])).unwrap();
        let report = r.validate();
        assert!(!report.is_valid());
        assert_eq!(report.failures[0].axiom, "unity");
        assert_eq!(report.failures[0].witness, vec![0]);
    }

    #[test]
    fn matrix_ring_small_cases() {
        let r = FinRing::matrix_ring(1, 4).unwrap();
        let z4 = FinRing::cyclic(4).unwrap();
        assert_eq!(r.mult_table(), z4.mult_table());
        assert_eq!(r.one(), z4.one());

        let m2 = FinRing::matrix_ring(2, 2).unwrap();
        assert_eq!(m2.order(), 16);
        assert!(m2.validate().is_valid());
        // E12 · E21 = E11 but E21 · E12 = E22.
        assert_eq!(m2.mul(&[0, 1, 0, 0], &[0, 0, 1, 0]), vec![1, 0, 0, 0]);
        assert_eq!(m2.mul(&[0, 0, 1, 0], &[0, 1, 0, 0]), vec![0, 0, 0, 1]);

        let m2z3 = FinRing::matrix_ring(2, 3).unwrap();
        assert_eq!(m2z3.order(), 81);
        assert!(m2z3.validate().is_valid());
        assert_eq!(m2z3.one(), Some(&vec![1, 0, 0, 1]));
    }

    #[test]
    fn opposite_is_an_involution() {
        let z4 = FinRing::cyclic(4).unwrap();
        assert_eq!(z4.opposite(), z4);
        let m2 = FinRing::matrix_ring(2, 2).unwrap();
        let op = m2.opposite();
        assert!(op.validate().is_valid());
        assert_ne!(op.mult_table(), m2.mult_table());
        assert_eq!(op.opposite(), m2);
    }

    #[test]
    fn associativity_on_all_elements_matches_generator_check() {
        for ring in [
            FinRing::cyclic(6).unwrap(),
            FinRing::matrix_ring(2, 2).unwrap(),
            FinRing::upper_triangular(2).unwrap(),
            FinRing::dual_numbers(4).unwrap(),
        ] {
            assert!(ring.validate().is_valid());
            let elems: Vec<Elem> = ring.group().elements().collect();
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        assert_eq!(ring.mul(&ring.mul(a, b), c), ring.mul(a, &ring.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn idempotents_of_z6() {
        let z6 = FinRing::cyclic(6).unwrap();
        assert_eq!(z6.idempotents(), vec![vec![0], vec![1], vec![3], vec![4]]);
    }

    #[test]
    fn product_ring() {
        let r = FinRing::product(&FinRing::cyclic(2).unwrap(), &FinRing::cyclic(2).unwrap()).unwrap();
        assert!(r.validate().is_valid());
        assert_eq!(r.one(), Some(&vec![1, 1]));
        assert_eq!(r.mul(&[1, 0], &[0, 1]), vec![0, 0]);
    }
}
