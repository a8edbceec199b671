//! Tensor products over a (noncommutative) finite base ring.
//!
//! `M ⊗_T N` is presented on generator pairs: the free group on pairs
//! modulo the coordinate order relations and one balancing relation
//! `(m_i·t_u) ⊗ n_j − m_i ⊗ (t_u·n_j)` per generator triple. Trilinearity
//! makes the generator triples sufficient. The quotient is computed by one
//! Smith reduction whose transform doubles as the projection and whose
//! inverse provides representatives.

use crate::abelian::{gcd, AbHom, Elem, FinAbGroup, IntMat};
use crate::algebra::module::{ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::caps::caps;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TensorProduct {
    /// The tensor group in canonical form.
    group: FinAbGroup,
    /// `M ⊗_Z N`: one coordinate per generator pair of nontrivial order.
    pair_group: FinAbGroup,
    /// Row-major pair `(i, j) → i·k_n + j` to pair-group coordinate.
    pair_index: Vec<Option<usize>>,
    k_m: usize,
    k_n: usize,
    /// Projection `M ⊗_Z N → M ⊗_T N`.
    projection: AbHom,
    /// Representative of each tensor generator in pair coordinates.
    sections: Vec<Vec<i64>>,
}

/// `m ⊗_T n` for a right module `m` and a left module `n` over `ring`.
pub fn tensor_over(
    ring: &FinRing,
    m: &ModuleStructure,
    n: &ModuleStructure,
) -> Result<TensorProduct> {
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::Shape("tensor_over needs a right and a left module".into()));
    }
    if m.ring() != ring || n.ring() != ring {
        return Err(Error::Shape("tensor factors act over different rings".into()));
    }
    let k_m = m.group().rank();
    let k_n = n.group().rank();
    let k_t = ring.rank();
    let n_pairs = k_m * k_n;
    if n_pairs > caps().max_pair_count {
        return Err(Error::Capacity(format!(
            "tensor system with {n_pairs} generator pairs exceeds the pair cap"
        )));
    }

    let pair = |i: usize, j: usize| i * k_n + j;

    // Relation columns: order relations for both factors, then balancing
    // relations per (module gen, ring gen, module gen) triple.
    let mut relations: Vec<Vec<i128>> = Vec::new();
    for i in 0..k_m {
        for j in 0..k_n {
            let mut col = vec![0i128; n_pairs];
            col[pair(i, j)] = i128::from(m.group().moduli()[i]);
            relations.push(col);
            let mut col = vec![0i128; n_pairs];
            col[pair(i, j)] = i128::from(n.group().moduli()[j]);
            relations.push(col);
        }
    }
    for i in 0..k_m {
        for u in 0..k_t {
            let mt = m.act(&ring.group().generator(u), &m.group().generator(i));
            for j in 0..k_n {
                let tn = n.act(&ring.group().generator(u), &n.group().generator(j));
                let mut col = vec![0i128; n_pairs];
                for (a, &c) in mt.iter().enumerate() {
                    col[pair(a, j)] += i128::from(c);
                }
                for (b, &c) in tn.iter().enumerate() {
                    col[pair(i, b)] -= i128::from(c);
                }
                if col.iter().any(|&x| x != 0) {
                    relations.push(col);
                }
            }
        }
    }

    let rel = IntMat::from_fn(n_pairs, relations.len(), |r, c| relations[c][r]);
    let snf = crate::abelian::smith(&rel)?;
    if snf.rank != n_pairs {
        return Err(Error::Internal("tensor relation lattice must have full rank".into()));
    }

    let mut kept = Vec::new();
    let mut moduli = Vec::new();
    for i in 0..n_pairs {
        let dii = snf.d.get(i, i);
        if dii >= 2 {
            kept.push(i);
            moduli.push(dii as i64);
        }
    }
    let group = FinAbGroup::new(moduli)?;

    // The plain Z-tensor of the groups, dropping trivial pairs.
    let mut pair_index = vec![None; n_pairs];
    let mut pair_moduli = Vec::new();
    for i in 0..k_m {
        for j in 0..k_n {
            let g = gcd(m.group().moduli()[i], n.group().moduli()[j]);
            if g > 1 {
                pair_index[pair(i, j)] = Some(pair_moduli.len());
                pair_moduli.push(g);
            }
        }
    }
    let pair_group = FinAbGroup::new(pair_moduli)?;

    let proj_matrix = IntMat::from_fn(kept.len(), pair_group.rank(), |r, c| {
        let full = (0..n_pairs).find(|&p| pair_index[p] == Some(c)).expect("index is onto");
        snf.u.get(kept[r], full)
    });
    let projection = AbHom::new(pair_group.clone(), group.clone(), proj_matrix)?;

    let sections = kept
        .iter()
        .map(|&a| {
            let col = snf.u_inv.col(a);
            let wide: Vec<i128> =
                (0..n_pairs).filter(|&p| pair_index[p].is_some()).map(|p| col[p]).collect();
            pair_group.reduce(&wide)
        })
        .collect();

    Ok(TensorProduct { group, pair_group, pair_index, k_m, k_n, projection, sections })
}

impl TensorProduct {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn pair_group(&self) -> &FinAbGroup {
        &self.pair_group
    }

    pub fn projection(&self) -> &AbHom {
        &self.projection
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// The universal balanced map on elements.
    pub fn pure(&self, m: &[i64], n: &[i64]) -> Elem {
        debug_assert_eq!(m.len(), self.k_m);
        debug_assert_eq!(n.len(), self.k_n);
        let mut coords = vec![0i128; self.pair_group.rank()];
        for (i, &mi) in m.iter().enumerate() {
            if mi == 0 {
                continue;
            }
            for (j, &nj) in n.iter().enumerate() {
                if nj == 0 {
                    continue;
                }
                if let Some(c) = self.pair_index[i * self.k_n + j] {
                    coords[c] += i128::from(mi) * i128::from(nj);
                }
            }
        }
        self.projection.apply(&self.pair_group.reduce(&coords))
    }

    /// Representative of tensor generator `a` as a list of
    /// `(m_gen, n_gen, coefficient)` triples with nonzero coefficients.
    pub fn generator_rep(&self, a: usize) -> Vec<(usize, usize, i64)> {
        self.rep_from_pair_coords(&self.sections[a])
    }

    /// A pure-tensor decomposition of an arbitrary element, as
    /// `(m_gen, n_gen, coefficient)` triples.
    pub fn generator_rep_of(&self, x: &[i64]) -> Vec<(usize, usize, i64)> {
        let mut acc = vec![0i128; self.pair_group.rank()];
        for (a, &c) in x.iter().enumerate() {
            for (slot, &s) in acc.iter_mut().zip(&self.sections[a]) {
                *slot += i128::from(c) * i128::from(s);
            }
        }
        self.rep_from_pair_coords(&self.pair_group.reduce(&acc))
    }

    fn rep_from_pair_coords(&self, sec: &[i64]) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.k_m {
            for j in 0..self.k_n {
                if let Some(c) = self.pair_index[i * self.k_n + j] {
                    if sec[c] != 0 {
                        out.push((i, j, sec[c]));
                    }
                }
            }
        }
        out
    }

    /// Build the hom induced by a bilinear assignment on generator pairs.
    /// `phi(i, j)` must be the image of the pure tensor `m_i ⊗ n_j`; the
    /// assignment must be balanced or the result will not be well defined.
    pub fn map_to(
        &self,
        target: &FinAbGroup,
        mut phi: impl FnMut(usize, usize) -> Elem,
    ) -> Result<AbHom> {
        let mut cache: Vec<Option<Elem>> = vec![None; self.k_m * self.k_n];
        let mut cols = Vec::with_capacity(self.group.rank());
        for a in 0..self.group.rank() {
            let mut acc = vec![0i128; target.rank()];
            for (i, j, c) in self.generator_rep(a) {
                let img = cache[i * self.k_n + j].get_or_insert_with(|| phi(i, j));
                for (slot, &x) in acc.iter_mut().zip(img.iter()) {
                    *slot += i128::from(c) * i128::from(x);
                }
            }
            cols.push(target.reduce(&acc));
        }
        AbHom::from_columns(self.group.clone(), target.clone(), &cols)
    }

    /// Map induced on tensors by a hom `f` of the left factor:
    /// `f ⊗ id : M ⊗ N → M' ⊗ N` where `self` is `M ⊗ N` and `other` is
    /// `M' ⊗ N`.
    pub fn map_left_factor(&self, other: &TensorProduct, f: &AbHom) -> Result<AbHom> {
        let m_prime_gens: Vec<Elem> =
            (0..self.k_m).map(|i| f.apply(&f.source().generator(i))).collect();
        self.map_to(other.group(), |i, j| {
            other.pure(&m_prime_gens[i], &f_target_gen(other.k_n, j))
        })
    }

    /// Map induced on tensors by a hom `g` of the right factor:
    /// `id ⊗ g : M ⊗ N → M ⊗ N'` where `other` is `M ⊗ N'`.
    pub fn map_right_factor(&self, other: &TensorProduct, g: &AbHom) -> Result<AbHom> {
        let n_prime_gens: Vec<Elem> =
            (0..self.k_n).map(|j| g.apply(&g.source().generator(j))).collect();
        self.map_to(other.group(), |i, j| {
            other.pure(&f_target_gen(other.k_m, i), &n_prime_gens[j])
        })
    }

    /// An induced module structure on the tensor group: `act(u, i)` is the
    /// image in the left factor of outer-ring generator `u` applied to the
    /// left-factor generator `i`; the action extends along representatives.
    pub fn induced_on_left_factor(
        &self,
        outer: &FinRing,
        side: Side,
        mut act: impl FnMut(usize, usize) -> Elem,
    ) -> Result<ModuleStructure> {
        let kr = outer.rank();
        let mut table = vec![vec![self.group.zero(); self.group.rank()]; kr];
        for (u, row) in table.iter_mut().enumerate() {
            for (a, slot) in row.iter_mut().enumerate() {
                let mut acc = vec![0i128; self.group.rank()];
                for (i, j, c) in self.generator_rep(a) {
                    let moved = act(u, i);
                    let img = self.pure(&moved, &f_target_gen(self.k_n, j));
                    for (s, &x) in acc.iter_mut().zip(&img) {
                        *s += i128::from(c) * i128::from(x);
                    }
                }
                *slot = self.group.reduce(&acc);
            }
        }
        ModuleStructure::new(outer.clone(), self.group.clone(), side, table)
    }

    /// Same for the right factor.
    pub fn induced_on_right_factor(
        &self,
        outer: &FinRing,
        side: Side,
        mut act: impl FnMut(usize, usize) -> Elem,
    ) -> Result<ModuleStructure> {
        let kr = outer.rank();
        let mut table = vec![vec![self.group.zero(); self.group.rank()]; kr];
        for (u, row) in table.iter_mut().enumerate() {
            for (a, slot) in row.iter_mut().enumerate() {
                let mut acc = vec![0i128; self.group.rank()];
                for (i, j, c) in self.generator_rep(a) {
                    let moved = act(u, j);
                    let img = self.pure(&f_target_gen(self.k_m, i), &moved);
                    for (s, &x) in acc.iter_mut().zip(&img) {
                        *s += i128::from(c) * i128::from(x);
                    }
                }
                *slot = self.group.reduce(&acc);
            }
        }
        ModuleStructure::new(outer.clone(), self.group.clone(), side, table)
    }
}

fn f_target_gen(rank: usize, i: usize) -> Elem {
    let mut e = vec![0; rank];
    e[i] = 1;
    e
}
