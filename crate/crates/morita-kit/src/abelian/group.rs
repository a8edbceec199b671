//! Finite abelian groups presented by moduli lists.
//!
//! A group is `Z_{d_1} × … × Z_{d_k}` with every `d_i ≥ 2`; the empty list is
//! the trivial group. Elements are dense coordinate tuples reduced into
//! `[0, d_i)`. A group whose moduli form a divisibility chain `d_1 | … | d_k`
//! is in canonical (invariant-factor) form; non-canonical presentations are
//! legal and arise from direct sums and structure tables.

use crate::error::{Error, Result};

/// A group element: one coordinate per modulus, always kept reduced.
pub type Elem = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinAbGroup {
    moduli: Vec<i64>,
}

impl FinAbGroup {
    /// Build from moduli, all of which must be at least 2.
    pub fn new(moduli: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = moduli.iter().find(|&&d| d < 2) {
            return Err(Error::Shape(format!("modulus {bad} < 2")));
        }
        Ok(Self { moduli })
    }

    /// Build from raw moduli that may contain 1-entries (dropped as trivial
    /// coordinates). Entries below 1 are rejected.
    pub fn from_raw_moduli(raw: &[i64]) -> Result<Self> {
        if let Some(&bad) = raw.iter().find(|&&d| d < 1) {
            return Err(Error::Shape(format!("modulus {bad} < 1")));
        }
        Ok(Self { moduli: raw.iter().copied().filter(|&d| d > 1).collect() })
    }

    pub fn trivial() -> Self {
        Self { moduli: Vec::new() }
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    /// Number of generators (coordinates).
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128))
    }

    /// Whether the moduli form a divisibility chain.
    pub fn is_canonical(&self) -> bool {
        self.moduli.windows(2).all(|w| w[1] % w[0] == 0)
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = 1;
        e
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.rank() && v.iter().zip(&self.moduli).all(|(&x, &d)| 0 <= x && x < d)
    }

    /// Reduce wide coordinates into range.
    pub fn reduce(&self, v: &[i128]) -> Elem {
        debug_assert_eq!(v.len(), self.rank());
        v.iter().zip(&self.moduli).map(|(&x, &d)| x.rem_euclid(i128::from(d)) as i64).collect()
    }

    pub fn reduce_i64(&self, v: &[i64]) -> Elem {
        v.iter().zip(&self.moduli).map(|(&x, &d)| x.rem_euclid(d)).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &d)| (x + y).rem_euclid(d))
            .collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Elem {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &d)| (x - y).rem_euclid(d))
            .collect()
    }

    pub fn neg(&self, a: &[i64]) -> Elem {
        a.iter().zip(&self.moduli).map(|(&x, &d)| (-x).rem_euclid(d)).collect()
    }

    pub fn scale(&self, k: i128, a: &[i64]) -> Elem {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &d)| (k * i128::from(x)).rem_euclid(i128::from(d)) as i64)
            .collect()
    }

    /// `Σ coeffs[i]·elems[i]` reduced into the group.
    pub fn combine(&self, coeffs: &[i128], elems: &[Elem]) -> Elem {
        debug_assert_eq!(coeffs.len(), elems.len());
        let mut acc = vec![0i128; self.rank()];
        for (&c, e) in coeffs.iter().zip(elems) {
            for (slot, &x) in acc.iter_mut().zip(e) {
                *slot += c * i128::from(x);
            }
        }
        self.reduce(&acc)
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: &[i64]) -> i64 {
        let mut order: i64 = 1;
        for (&x, &d) in a.iter().zip(&self.moduli) {
            let coord_order = d / gcd(d, x);
            order = lcm(order, coord_order);
        }
        order
    }

    /// Iterate every element in mixed-radix order. The caller is responsible
    /// for keeping the order within capacity.
    pub fn elements(&self) -> Elements<'_> {
        Elements { group: self, next: Some(self.zero()) }
    }

    /// Direct sum (concatenated moduli).
    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        FinAbGroup { moduli }
    }
}

pub struct Elements<'a> {
    group: &'a FinAbGroup,
    next: Option<Elem>,
}

impl Iterator for Elements<'_> {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (x, &d) in succ.iter_mut().zip(self.group.moduli.iter()) {
            *x += 1;
            if *x < d {
                carried = false;
                break;
            }
            *x = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
