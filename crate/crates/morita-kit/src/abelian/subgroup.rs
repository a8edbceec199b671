//! Subgroups, generated subgroups, canonical forms and subgroup enumeration.

use std::collections::{BTreeSet, VecDeque};

use crate::abelian::group::{Elem, FinAbGroup};
use crate::abelian::hom::AbHom;
use crate::abelian::snf::{smith, IntMat};
use crate::error::{Error, Result};

/// A subgroup in canonical form together with its embedding into the ambient
/// group. The embedding is always injective.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupEmbedding {
    ambient: FinAbGroup,
    subgroup: FinAbGroup,
    embedding: AbHom,
}

impl SubgroupEmbedding {
    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn subgroup(&self) -> &FinAbGroup {
        &self.subgroup
    }

    pub fn embedding(&self) -> &AbHom {
        &self.embedding
    }

    pub fn order(&self) -> u128 {
        self.subgroup.order()
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(g: &FinAbGroup) -> Self {
        Self { ambient: g.clone(), subgroup: g.clone(), embedding: AbHom::identity(g) }
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    /// Coordinates of an ambient element inside the subgroup, if it lies in
    /// the image.
    pub fn preimage(&self, v: &[i64]) -> Option<Elem> {
        self.embedding.preimage(v).expect("embedding arithmetic cannot overflow")
    }

    pub fn contains_element(&self, v: &[i64]) -> bool {
        self.preimage(v).is_some()
    }

    /// The image as an explicit element set (ambient coordinates).
    pub fn element_set(&self) -> BTreeSet<Elem> {
        self.subgroup.elements().map(|x| self.embedding.apply(&x)).collect()
    }
}

/// Smallest subgroup of `g` containing `elems`, in canonical form.
pub fn subgroup_generated(g: &FinAbGroup, elems: &[Elem]) -> Result<SubgroupEmbedding> {
    let k = g.rank();
    for e in elems {
        if !g.contains(e) {
            return Err(Error::Shape(format!("element {e:?} out of range for {:?}", g.moduli())));
        }
    }
    if k == 0 {
        return Ok(SubgroupEmbedding::whole(g));
    }

    // Lattice spanned by the generators and the relation lattice diag(d).
    let n = elems.len();
    let gens = IntMat::from_fn(k, n + k, |i, j| {
        if j < n {
            i128::from(elems[j][i])
        } else if i + n == j {
            i128::from(g.moduli()[i])
        } else {
            0
        }
    });
    let snf0 = smith(&gens)?;
    if snf0.rank != k {
        return Err(Error::Internal("generated lattice lost full rank".into()));
    }

    // Basis of the lattice: b_i = d0_ii * u_inv[:, i]. Express diag(d) in
    // that basis and read the quotient off a second Smith form.
    let rel = IntMat::from_fn(k, k, |i, j| {
        let num = snf0.u.get(i, j) * i128::from(g.moduli()[j]);
        let den = snf0.d.get(i, i);
        debug_assert_eq!(num.rem_euclid(den), 0, "relation lattice must factor integrally");
        num / den
    });
    let snf1 = smith(&rel)?;

    let mut kept = Vec::new();
    let mut moduli = Vec::new();
    for i in 0..k {
        let dii = snf1.d.get(i, i);
        if dii == 0 {
            return Err(Error::Internal("subgroup presentation not finite".into()));
        }
        if dii >= 2 {
            kept.push(i);
            moduli.push(dii as i64);
        }
    }
    let subgroup = FinAbGroup::new(moduli)?;

    // Generator i of the quotient corresponds to the lattice element
    // basis · u1_inv[:, i], reduced into the ambient group.
    let mut cols = Vec::with_capacity(kept.len());
    for &i in &kept {
        let coeffs = snf1.u_inv.col(i);
        let mut amb = vec![0i128; k];
        for (row, slot) in amb.iter_mut().enumerate() {
            for (t, &c) in coeffs.iter().enumerate() {
                let basis_rt = snf0.u_inv.get(row, t) * snf0.d.get(t, t);
                *slot += basis_rt * c;
            }
        }
        cols.push(g.reduce(&amb));
    }
    let embedding = AbHom::from_columns(subgroup.clone(), g.clone(), &cols)?;
    Ok(SubgroupEmbedding { ambient: g.clone(), subgroup, embedding })
}

/// Canonical (invariant-factor) form of a group with conversion isomorphisms
/// `(canonical, to_canonical, from_canonical)`.
pub fn canonicalize(g: &FinAbGroup) -> Result<(FinAbGroup, AbHom, AbHom)> {
    let k = g.rank();
    let diag = IntMat::from_fn(k, k, |i, j| if i == j { i128::from(g.moduli()[i]) } else { 0 });
    let snf = smith(&diag)?;
    let mut kept = Vec::new();
    let mut moduli = Vec::new();
    for i in 0..k {
        let dii = snf.d.get(i, i);
        if dii >= 2 {
            kept.push(i);
            moduli.push(dii as i64);
        }
    }
    let canon = FinAbGroup::new(moduli)?;
    let fwd_matrix = IntMat::from_fn(kept.len(), k, |i, j| snf.u.get(kept[i], j));
    let fwd = AbHom::new(g.clone(), canon.clone(), fwd_matrix)?;
    let bwd_matrix = IntMat::from_fn(k, kept.len(), |i, j| snf.u_inv.get(i, kept[j]));
    let bwd = AbHom::new(canon.clone(), g.clone(), bwd_matrix)?;
    Ok((canon, fwd, bwd))
}

/// All subgroups of `g`, each in canonical form, sorted by order and then by
/// element set. Complete and duplicate-free; requires `|g| ≤ cap`.
pub fn enumerate_subgroups(g: &FinAbGroup, cap: u128) -> Result<Vec<SubgroupEmbedding>> {
    if g.order() > cap {
        return Err(Error::Capacity(format!("group order {} exceeds cap {cap}", g.order())));
    }
    let elems: Vec<Elem> = g.elements().collect();
    let trivial: BTreeSet<Elem> = std::iter::once(g.zero()).collect();
    let mut seen: BTreeSet<BTreeSet<Elem>> = BTreeSet::new();
    seen.insert(trivial.clone());
    let mut queue: VecDeque<BTreeSet<Elem>> = VecDeque::new();
    queue.push_back(trivial);
    while let Some(sub) = queue.pop_front() {
        for e in &elems {
            if sub.contains(e) {
                continue;
            }
            // sub + <e>: the join of a subgroup with a cyclic subgroup.
            let mut bigger = BTreeSet::new();
            let order = g.element_order(e);
            for s in &sub {
                let mut shifted = s.clone();
                for _ in 0..order {
                    bigger.insert(shifted.clone());
                    shifted = g.add(&shifted, e);
                }
            }
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    let mut sets: Vec<BTreeSet<Elem>> = seen.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    sets.into_iter()
        .map(|s| {
            let gens: Vec<Elem> = s.into_iter().collect();
            subgroup_generated(g, &gens)
        })
        .collect()
}
