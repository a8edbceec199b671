//! Self-injectivity of a finite unital ring by the Baer criterion.
//!
//! A finite ring is quasi-Frobenius iff it is self-injective, and the Baer
//! criterion reduces injectivity of the regular right module to extension of
//! maps from right ideals: every right-linear `f: L → R` must be left
//! multiplication by some ring element.

use crate::abelian::{enumerate_subgroups, solve_congruence, Elem, IntMat, SubgroupEmbedding};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SelfInjectivity {
    pub self_injective: bool,
    /// On failure: the right ideal and the map values on its generators that
    /// admit no extension to all of the ring.
    pub counterexample: Option<BaerCounterexample>,
    pub ideals_checked: usize,
    pub maps_checked: usize,
}

#[derive(Debug, Clone)]
pub struct BaerCounterexample {
    pub ideal: SubgroupEmbedding,
    pub values_on_generators: Vec<Elem>,
}

/// Decide self-injectivity of a finite unital ring.
pub fn is_self_injective(ring: &FinRing, cap: u128) -> Result<SelfInjectivity> {
    if !ring.is_unital() {
        return Err(Error::Precondition("Baer criterion needs a unital ring".into()));
    }
    if ring.order() > cap {
        return Err(Error::Capacity(format!("ring order {} exceeds cap {cap}", ring.order())));
    }
    let group = ring.group();
    let mut ideals_checked = 0usize;
    let mut maps_checked = 0usize;

    for sub in enumerate_subgroups(group, cap)? {
        if !is_right_ideal(ring, &sub) {
            continue;
        }
        ideals_checked += 1;
        let ks = sub.subgroup().rank();
        if ks == 0 {
            continue;
        }
        // Ambient images of the ideal generators.
        let gens: Vec<Elem> =
            (0..ks).map(|j| sub.embedding().apply(&sub.subgroup().generator(j))).collect();

        // Right-linear maps L → R are the kernel of the linearity system in
        // the entries of the value matrix; enumerate that solution group.
        let homs = right_linear_maps(ring, &sub)?;
        for values in &homs {
            maps_checked += 1;
            // Extension: find a ∈ R with a·gens[j] = values[j] for all j.
            // Left multiplication by a is linear in a, so stack the right
            // multiplication matrices of the generators.
            let k = ring.rank();
            let rows = ks * k;
            let mut sys = IntMat::zeros(rows, k);
            let mut rhs = vec![0i128; rows];
            let mut moduli = vec![0i64; rows];
            for (j, g) in gens.iter().enumerate() {
                let m = ring.right_mult_matrix(g); // a ↦ a·g
                for r in 0..k {
                    for c in 0..k {
                        sys.set(j * k + r, c, m.get(r, c));
                    }
                    rhs[j * k + r] = i128::from(values[j][r]);
                    moduli[j * k + r] = ring.group().moduli()[r];
                }
            }
            if solve_congruence(&sys, &rhs, &moduli)?.is_none() {
                return Ok(SelfInjectivity {
                    self_injective: false,
                    counterexample: Some(BaerCounterexample {
                        ideal: sub.clone(),
                        values_on_generators: values.clone(),
                    }),
                    ideals_checked,
                    maps_checked,
                });
            }
        }
    }
    Ok(SelfInjectivity { self_injective: true, counterexample: None, ideals_checked, maps_checked })
}

/// Whether a subgroup of the additive group is closed under right
/// multiplication by the ring.
pub fn is_right_ideal(ring: &FinRing, sub: &SubgroupEmbedding) -> bool {
    is_stable(ring, sub, false)
}

pub fn is_left_ideal(ring: &FinRing, sub: &SubgroupEmbedding) -> bool {
    is_stable(ring, sub, true)
}

pub fn is_two_sided_ideal(ring: &FinRing, sub: &SubgroupEmbedding) -> bool {
    is_stable(ring, sub, true) && is_stable(ring, sub, false)
}

fn is_stable(ring: &FinRing, sub: &SubgroupEmbedding, left: bool) -> bool {
    let ks = sub.subgroup().rank();
    let kr = ring.rank();
    for j in 0..ks {
        let x = sub.embedding().apply(&sub.subgroup().generator(j));
        for u in 0..kr {
            let g = ring.group().generator(u);
            let moved = if left { ring.mul(&g, &x) } else { ring.mul(&x, &g) };
            if !sub.contains_element(&moved) {
                return false;
            }
        }
    }
    true
}

/// All right-linear maps from an ideal into the ring, as value tuples on the
/// ideal's canonical generators. Solved elementwise: a map is determined by
/// its generator values, constrained by well-definedness and linearity over
/// every (generator, ring generator) pair.
fn right_linear_maps(ring: &FinRing, sub: &SubgroupEmbedding) -> Result<Vec<Vec<Elem>>> {
    let module = crate::algebra::module::ModuleStructure::from_ring_subgroup(
        ring,
        crate::algebra::module::Side::Right,
        sub,
    )?;
    let regular = crate::algebra::module::ModuleStructure::regular(
        ring,
        crate::algebra::module::Side::Right,
    );
    let homs = crate::tensor_hom::hom_module(ring, &module, &regular)?;
    let ks = sub.subgroup().rank();
    let mut out = Vec::new();
    for h in homs.group().elements() {
        let f = homs.to_hom(&h)?;
        out.push((0..ks).map(|j| f.apply(&sub.subgroup().generator(j))).collect());
    }
    Ok(out)
}
