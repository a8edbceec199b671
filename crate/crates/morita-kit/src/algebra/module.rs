//! One-sided modules and bimodules as action tables.

use crate::abelian::{gcd, AbHom, Elem, FinAbGroup, IntMat, SubgroupEmbedding};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result, ValidationReport};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A one-sided module: `action[u][j]` is the ring generator `u` applied to
/// the module generator `j` (on the declared side).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleStructure {
    ring: FinRing,
    group: FinAbGroup,
    side: Side,
    action: Vec<Vec<Elem>>,
}

impl ModuleStructure {
    pub fn new(
        ring: FinRing,
        group: FinAbGroup,
        side: Side,
        action: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let kr = ring.rank();
        let km = group.rank();
        if action.len() != kr || action.iter().any(|row| row.len() != km) {
            return Err(Error::Shape(format!("action table must be {kr}x{km}")));
        }
        for row in &action {
            for e in row {
                if !group.contains(e) {
                    return Err(Error::Shape(format!("action entry {e:?} out of range")));
                }
            }
        }
        Ok(Self { ring, group, side, action })
    }

    pub fn validated(
        ring: FinRing,
        group: FinAbGroup,
        side: Side,
        action: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let m = Self::new(ring, group, side, action)?;
        m.validate().into_result()?;
        Ok(m)
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn action_table(&self) -> &[Vec<Elem>] {
        &self.action
    }

    /// Apply a ring element to a module element (bilinear extension).
    /// For a right module this computes `m·r`.
    pub fn act(&self, r: &[i64], m: &[i64]) -> Elem {
        let km = self.group.rank();
        let mut acc = vec![0i128; km];
        for (u, &ru) in r.iter().enumerate() {
            if ru == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate() {
                if mj == 0 {
                    continue;
                }
                let c = i128::from(ru) * i128::from(mj);
                for (slot, &x) in acc.iter_mut().zip(&self.action[u][j]) {
                    *slot += c * i128::from(x);
                }
            }
        }
        self.group.reduce(&acc)
    }

    /// Matrix of the action of one ring element on module coordinates.
    pub fn action_matrix(&self, r: &[i64]) -> IntMat {
        let km = self.group.rank();
        IntMat::from_fn(km, km, |row, col| i128::from(self.act(r, &self.group.generator(col))[row]))
    }

    pub fn validate(&self) -> ValidationReport {
        let subject = match self.side {
            Side::Left => "left module",
            Side::Right => "right module",
        };
        let mut report = ValidationReport::new(subject);
        let dr = self.ring.group().moduli();
        let dm = self.group.moduli();
        for (u, row) in self.action.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let ord = self.group.element_order(e);
                let bound = gcd(dr[u], dm[j]);
                if bound % ord != 0 {
                    report.push(
                        "well-definedness",
                        vec![u, j],
                        format!("action value has additive order {ord}, must divide gcd = {bound}"),
                    );
                }
            }
        }
        for u in 0..dr.len() {
            for v in 0..dr.len() {
                let uv = self.ring.gen_product(u, v).clone();
                for j in 0..dm.len() {
                    let m = self.group.generator(j);
                    // Left: (uv)·m = u·(v·m). Right: m·(uv) = (m·u)·v.
                    let lhs = self.act(&uv, &m);
                    let rhs = match self.side {
                        Side::Left => {
                            let inner = self.act(&self.ring.group().generator(v), &m);
                            self.act(&self.ring.group().generator(u), &inner)
                        }
                        Side::Right => {
                            let inner = self.act(&self.ring.group().generator(u), &m);
                            self.act(&self.ring.group().generator(v), &inner)
                        }
                    };
                    if lhs != rhs {
                        report.push(
                            "associativity",
                            vec![u, v, j],
                            format!("action of g{u}·g{v} on m{j} disagrees: {lhs:?} vs {rhs:?}"),
                        );
                    }
                }
            }
        }
        if let Some(one) = self.ring.one() {
            for j in 0..dm.len() {
                let m = self.group.generator(j);
                let acted = self.act(one, &m);
                if acted != m {
                    report.push("unitality", vec![j], format!("1·m{j} = {acted:?}"));
                }
            }
        }
        report
    }

    /// The ring as a module over itself.
    pub fn regular(ring: &FinRing, side: Side) -> ModuleStructure {
        let k = ring.rank();
        let group = ring.group().clone();
        let action = (0..k)
            .map(|u| {
                (0..k)
                    .map(|j| match side {
                        Side::Left => ring.gen_product(u, j).clone(),
                        Side::Right => ring.gen_product(j, u).clone(),
                    })
                    .collect()
            })
            .collect();
        ModuleStructure { ring: ring.clone(), group, side, action }
    }

    pub fn zero_module(ring: &FinRing, side: Side) -> ModuleStructure {
        ModuleStructure {
            ring: ring.clone(),
            group: FinAbGroup::trivial(),
            side,
            action: vec![Vec::new(); ring.rank()],
        }
    }

    /// A stable subgroup of the regular module as a module; fails if the
    /// subgroup is not closed under the ring action.
    pub fn from_ring_subgroup(
        ring: &FinRing,
        side: Side,
        sub: &SubgroupEmbedding,
    ) -> Result<ModuleStructure> {
        if sub.ambient() != ring.group() {
            return Err(Error::Shape("subgroup not inside the ring's additive group".into()));
        }
        let kr = ring.rank();
        let ks = sub.subgroup().rank();
        let mut action = vec![vec![sub.subgroup().zero(); ks]; kr];
        for u in 0..kr {
            let g = ring.group().generator(u);
            for j in 0..ks {
                let emb = sub.embedding().apply(&sub.subgroup().generator(j));
                let acted = match side {
                    Side::Left => ring.mul(&g, &emb),
                    Side::Right => ring.mul(&emb, &g),
                };
                let back = sub.preimage(&acted).ok_or_else(|| {
                    Error::Precondition(format!(
                        "subgroup is not stable: g{u} moves generator {j} outside"
                    ))
                })?;
                action[u][j] = back;
            }
        }
        ModuleStructure::new(ring.clone(), sub.subgroup().clone(), side, action)
    }

    /// The quotient of the regular module by a stable subgroup (one-sided
    /// ideal), together with the projection.
    pub fn quotient_by_ideal(
        ring: &FinRing,
        side: Side,
        sub: &SubgroupEmbedding,
    ) -> Result<(ModuleStructure, AbHom)> {
        if sub.ambient() != ring.group() {
            return Err(Error::Shape("subgroup not inside the ring's additive group".into()));
        }
        let proj = sub.embedding().cokernel()?;
        let q = proj.target().clone();
        let kr = ring.rank();
        let kq = q.rank();
        let mut action = vec![vec![q.zero(); kq]; kr];
        for b in 0..kq {
            let rep = proj.preimage(&q.generator(b))?.ok_or_else(|| {
                Error::Internal("cokernel projection must be surjective".into())
            })?;
            for u in 0..kr {
                let g = ring.group().generator(u);
                let acted = match side {
                    Side::Left => ring.mul(&g, &rep),
                    Side::Right => ring.mul(&rep, &g),
                };
                action[u][b] = proj.apply(&acted);
            }
        }
        let module = ModuleStructure::new(ring.clone(), q, side, action)?;
        Ok((module, proj))
    }

    pub fn direct_sum(a: &ModuleStructure, b: &ModuleStructure) -> Result<ModuleStructure> {
        if a.ring != b.ring || a.side != b.side {
            return Err(Error::Shape("direct sum of modules over different rings/sides".into()));
        }
        let group = a.group.direct_sum(&b.group);
        let (ka, kb) = (a.group.rank(), b.group.rank());
        let kr = a.ring.rank();
        let mut action = vec![vec![group.zero(); ka + kb]; kr];
        for u in 0..kr {
            for j in 0..ka {
                action[u][j][..ka].copy_from_slice(&a.action[u][j]);
            }
            for j in 0..kb {
                action[u][ka + j][ka..].copy_from_slice(&b.action[u][j]);
            }
        }
        ModuleStructure::new(a.ring.clone(), group, a.side, action)
    }

    /// n-fold direct sum of a module with itself; `n = 0` is the zero module.
    pub fn power(&self, n: usize) -> Result<ModuleStructure> {
        let mut acc = ModuleStructure::zero_module(&self.ring, self.side);
        for _ in 0..n {
            acc = ModuleStructure::direct_sum(&acc, self)?;
        }
        Ok(acc)
    }
}

/// A (T,S)-bimodule: commuting left and right structures on one group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimodule {
    left: ModuleStructure,
    right: ModuleStructure,
}

impl Bimodule {
    pub fn new(left: ModuleStructure, right: ModuleStructure) -> Result<Self> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::Shape("bimodule needs a left and a right structure".into()));
        }
        if left.group != right.group {
            return Err(Error::Shape("bimodule structures act on different groups".into()));
        }
        Ok(Self { left, right })
    }

    pub fn validated(left: ModuleStructure, right: ModuleStructure) -> Result<Self> {
        let b = Self::new(left, right)?;
        b.validate().into_result()?;
        Ok(b)
    }

    pub fn left(&self) -> &ModuleStructure {
        &self.left
    }

    pub fn right(&self) -> &ModuleStructure {
        &self.right
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.left.group
    }

    pub fn left_ring(&self) -> &FinRing {
        &self.left.ring
    }

    pub fn right_ring(&self) -> &FinRing {
        &self.right.ring
    }

    pub fn act_left(&self, t: &[i64], m: &[i64]) -> Elem {
        self.left.act(t, m)
    }

    pub fn act_right(&self, m: &[i64], s: &[i64]) -> Elem {
        self.right.act(s, m)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("bimodule");
        for f in self.left.validate().failures {
            report.failures.push(f);
        }
        for f in self.right.validate().failures {
            report.failures.push(f);
        }
        let t = self.left.ring.group();
        let s = self.right.ring.group();
        for u in 0..t.rank() {
            for j in 0..self.group().rank() {
                for v in 0..s.rank() {
                    let m = self.group().generator(j);
                    let lhs = self.act_right(&self.act_left(&t.generator(u), &m), &s.generator(v));
                    let rhs = self.act_left(&t.generator(u), &self.act_right(&m, &s.generator(v)));
                    if lhs != rhs {
                        report.push(
                            "commuting-actions",
                            vec![u, j, v],
                            format!("(t·m)·s = {lhs:?} but t·(m·s) = {rhs:?}"),
                        );
                    }
                }
            }
        }
        report
    }

    /// A ring as the regular (T,T)-bimodule over itself.
    pub fn regular(ring: &FinRing) -> Bimodule {
        Bimodule {
            left: ModuleStructure::regular(ring, Side::Left),
            right: ModuleStructure::regular(ring, Side::Right),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_module_is_valid() {
        let t = FinRing::matrix_ring(2, 2).unwrap();
        let m = ModuleStructure::regular(&t, Side::Left);
        assert!(m.validate().is_valid());
        let b = Bimodule::regular(&t);
        assert!(b.validate().is_valid());
    }

    #[test]
    fn z2_as_z4_module() {
        // 2 acts as 0 on Z2; the action table sends the generator of Z4 to 1.
        let z4 = FinRing::cyclic(4).unwrap();
        let z2 = FinAbGroup::new(vec![2]).unwrap();
        let m = ModuleStructure::new(z4, z2, Side::Left, vec![vec![vec![1]]]).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.act(&[2], &[1]), vec![0]);
    }

    #[test]
    fn ill_defined_action_is_reported() {
        // Z2 "acting" on Z4 by 1·m = m violates well-definedness:
        // the action value has order 4, but gcd(2, 4) = 2.
        let z2 = FinRing::cyclic(2).unwrap();
        let z4 = FinAbGroup::new(vec![4]).unwrap();
        let m = ModuleStructure::new(z2, z4, Side::Left, vec![vec![vec![1]]]).unwrap();
        let report = m.validate();
        assert!(!report.is_valid());
        assert_eq!(report.failures[0].axiom, "well-definedness");
    }

    #[test]
    fn direct_sum_and_power() {
        let z4 = FinRing::cyclic(4).unwrap();
        let reg = ModuleStructure::regular(&z4, Side::Left);
        let sq = ModuleStructure::direct_sum(&reg, &reg).unwrap();
        assert!(sq.validate().is_valid());
        assert_eq!(sq.order(), 16);
        assert_eq!(reg.power(0).unwrap().order(), 1);
        assert_eq!(reg.power(3).unwrap().order(), 64);
    }

    #[test]
    fn quotient_of_z4_by_even_ideal() {
        let z4 = FinRing::cyclic(4).unwrap();
        let sub = crate::abelian::subgroup_generated(z4.group(), &[vec![2]]).unwrap();
        let (m, proj) = ModuleStructure::quotient_by_ideal(&z4, Side::Left, &sub).unwrap();
        assert_eq!(m.group().moduli(), &[2]);
        assert!(m.validate().is_valid());
        assert_eq!(proj.apply(&[2]), vec![0]);
        assert_eq!(proj.apply(&[3]), vec![1]);
    }
}
