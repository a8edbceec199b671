//! Bounded enumeration of finite modules over a finite ring: cyclic modules
//! by one-sided ideals plus direct sums of pairs, deduplicated up to module
//! isomorphism (fingerprint first, explicit isomorphism search within a
//! fingerprint class).

use std::collections::BTreeMap;

use crate::abelian::{canonicalize, enumerate_subgroups, AbHom, Elem};
use crate::algebra::baer::{is_left_ideal, is_right_ideal};
use crate::algebra::module::{ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::caps::caps;
use crate::error::{Error, Result};
use crate::tensor_hom::hom_module;

/// All modules of the given side over `ring` of order at most `bound`, up to
/// isomorphism: the cyclic modules (quotients of the regular module by
/// one-sided ideals) and direct sums of two of them.
pub fn enumerate_modules(
    ring: &FinRing,
    side: Side,
    bound: u128,
) -> Result<Vec<ModuleStructure>> {
    if ring.order() > caps().max_group_order {
        return Err(Error::Capacity(format!(
            "ring order {} exceeds the group-order cap",
            ring.order()
        )));
    }
    let stable = |sub: &crate::abelian::SubgroupEmbedding| match side {
        Side::Left => is_left_ideal(ring, sub),
        Side::Right => is_right_ideal(ring, sub),
    };
    let mut cyclics = Vec::new();
    for sub in enumerate_subgroups(ring.group(), caps().max_group_order)? {
        if !stable(&sub) {
            continue;
        }
        let (module, _) = ModuleStructure::quotient_by_ideal(ring, side, &sub)?;
        if module.order() <= bound {
            cyclics.push(module);
        }
    }

    let mut all = cyclics.clone();
    for (i, a) in cyclics.iter().enumerate() {
        for b in cyclics.iter().skip(i) {
            if a.order().saturating_mul(b.order()) <= bound {
                all.push(ModuleStructure::direct_sum(a, b)?);
            }
        }
    }

    dedupe_modules(all)
}

/// Deduplicate a list of modules up to isomorphism, preserving first-seen
/// order within each fingerprint class.
pub fn dedupe_modules(modules: Vec<ModuleStructure>) -> Result<Vec<ModuleStructure>> {
    let mut classes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    let mut kept: Vec<ModuleStructure> = Vec::new();
    for module in modules {
        let fp = fingerprint(&module)?;
        let class = classes.entry(fp).or_default();
        let mut duplicate = false;
        for &idx in class.iter() {
            if modules_isomorphic(&kept[idx], &module)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            class.push(kept.len());
            kept.push(module);
        }
    }
    Ok(kept)
}

/// Invariant factors of the group plus per-element action statistics: for
/// each element, its additive order and the sorted orders of the generator
/// actions on it. Isomorphic modules share fingerprints.
fn fingerprint(m: &ModuleStructure) -> Result<Vec<u8>> {
    let (canon, _, _) = canonicalize(m.group())?;
    let mut stats: Vec<Vec<i64>> = Vec::new();
    for e in m.group().elements() {
        let mut row = vec![m.group().element_order(&e)];
        let mut acted: Vec<i64> = (0..m.ring().rank())
            .map(|u| m.group().element_order(&m.act(&m.ring().group().generator(u), &e)))
            .collect();
        acted.sort_unstable();
        row.extend(acted);
        stats.push(row);
    }
    stats.sort_unstable();
    let mut out = format!("{:?}|", canon.moduli()).into_bytes();
    out.extend(format!("{stats:?}").into_bytes());
    Ok(out)
}

/// Explicit module-isomorphism search: iterate the Hom-group and test for a
/// bijective member. Desk scale only.
pub fn modules_isomorphic(a: &ModuleStructure, b: &ModuleStructure) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    let (ca, _, _) = canonicalize(a.group())?;
    let (cb, _, _) = canonicalize(b.group())?;
    if ca != cb {
        return Ok(false);
    }
    if a.order() == 1 {
        return Ok(true);
    }
    let homs = hom_module(a.ring(), a, b)?;
    for h in homs.group().elements() {
        let f = homs.to_hom(&h)?;
        if f.is_isomorphism()? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A module isomorphism, if one exists.
pub fn find_module_isomorphism(
    a: &ModuleStructure,
    b: &ModuleStructure,
) -> Result<Option<AbHom>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let homs = hom_module(a.ring(), a, b)?;
    for h in homs.group().elements() {
        let f = homs.to_hom(&h)?;
        if f.is_isomorphism()? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// The annihilator-style faithfulness of a tensor factor: whether
/// `x ↦ (v_i ⊗ x)_i` is injective, i.e. no nonzero element of the second
/// factor is killed by tensoring with the whole first factor.
pub fn tensor_faithful(
    ring: &FinRing,
    v: &ModuleStructure,
    l: &ModuleStructure,
) -> Result<bool> {
    let tensor = crate::tensor_hom::tensor_over(ring, v, l)?;
    let kv = v.group().rank();
    let kl = l.group().rank();
    let block = tensor.group().rank();
    let mut stacked = crate::abelian::FinAbGroup::trivial();
    for _ in 0..kv {
        stacked = stacked.direct_sum(tensor.group());
    }
    let cols: Vec<Elem> = (0..kl)
        .map(|j| {
            let mut col = vec![0i64; block * kv];
            for i in 0..kv {
                let img = tensor.pure(&v.group().generator(i), &l.group().generator(j));
                col[i * block..(i + 1) * block].copy_from_slice(&img);
            }
            col
        })
        .collect();
    let h = AbHom::from_columns(l.group().clone(), stacked, &cols)?;
    h.is_injective()
}
