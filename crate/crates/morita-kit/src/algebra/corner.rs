//! The corner construction: an idempotent e of a ring T yields the corner
//! ring S = eTe with unity e, the bimodules P = Te and Q = eT, and the two
//! connecting maps given by multiplication in T. Associativity of T makes
//! the resulting datum a Morita context by construction (still verified).

use crate::abelian::{subgroup_generated, Elem, SubgroupEmbedding};
use crate::algebra::module::{Bimodule, ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result};
use crate::morita::{build_datum, build_semi_context, BalancedMap, MoritaDatum};

/// Build the Morita context of an idempotent corner.
pub fn corner_context(t: &FinRing, e: &Elem) -> Result<MoritaDatum> {
    if !t.group().contains(e) {
        return Err(Error::Shape("idempotent out of range".into()));
    }
    if &t.mul(e, e) != e {
        return Err(Error::Precondition(format!("element {e:?} is not idempotent")));
    }
    let k = t.rank();
    let gens: Vec<Elem> = (0..k).map(|i| t.group().generator(i)).collect();

    // Additive spans of eTe, Te and eT.
    let ete: Vec<Elem> = gens.iter().map(|g| t.mul(e, &t.mul(g, e))).collect();
    let te: Vec<Elem> = gens.iter().map(|g| t.mul(g, e)).collect();
    let et: Vec<Elem> = gens.iter().map(|g| t.mul(e, g)).collect();
    let s_sub = subgroup_generated(t.group(), &ete)?;
    let p_sub = subgroup_generated(t.group(), &te)?;
    let q_sub = subgroup_generated(t.group(), &et)?;

    let s = corner_ring(t, &s_sub, e)?;

    // P = Te as a (T, S)-bimodule.
    let p_left = module_on_subgroup(t, &p_sub, t, Side::Left, |t_ring, g, x| t_ring.mul(g, x))?;
    let p_right = module_via_embedding(&s, &s_sub, t, &p_sub, Side::Right)?;
    let p = Bimodule::new(p_left, p_right)?;

    // Q = eT as an (S, T)-bimodule.
    let q_left = module_via_embedding(&s, &s_sub, t, &q_sub, Side::Left)?;
    let q_right = module_on_subgroup(t, &q_sub, t, Side::Right, |t_ring, g, x| t_ring.mul(x, g))?;
    let q = Bimodule::new(q_left, q_right)?;

    // ⟨p, q⟩_T = p·q in T.
    let beta_t_table: Vec<Vec<Elem>> = (0..p_sub.subgroup().rank())
        .map(|i| {
            let pe = p_sub.embedding().apply(&p_sub.subgroup().generator(i));
            (0..q_sub.subgroup().rank())
                .map(|j| {
                    let qe = q_sub.embedding().apply(&q_sub.subgroup().generator(j));
                    t.mul(&pe, &qe)
                })
                .collect()
        })
        .collect();
    let beta_t = BalancedMap::new(p.clone(), q.clone(), beta_t_table)?;
    let m_t = build_semi_context(beta_t)?;

    // ⟨q, p⟩_S = q·p, landing in eTe ≅ S.
    let beta_s_table: Result<Vec<Vec<Elem>>> = (0..q_sub.subgroup().rank())
        .map(|j| {
            let qe = q_sub.embedding().apply(&q_sub.subgroup().generator(j));
            (0..p_sub.subgroup().rank())
                .map(|i| {
                    let pe = p_sub.embedding().apply(&p_sub.subgroup().generator(i));
                    s_sub.preimage(&t.mul(&qe, &pe)).ok_or_else(|| {
                        Error::Internal("eT·Te must land in eTe".into())
                    })
                })
                .collect()
        })
        .collect();
    let beta_s = BalancedMap::new(q.clone(), p.clone(), beta_s_table?)?;
    let m_s = build_semi_context(beta_s)?;

    let datum = build_datum(m_t, m_s)?;
    if !datum.is_context() {
        return Err(Error::Internal("corner datum must satisfy compatibility".into()));
    }
    Ok(datum)
}

/// The identity context of a unital ring: the corner at e = 1.
pub fn identity_context(t: &FinRing) -> Result<MoritaDatum> {
    let one = t
        .one()
        .ok_or_else(|| Error::Precondition("identity context needs a unital ring".into()))?
        .clone();
    corner_context(t, &one)
}

/// The ring eTe on the canonical form of its additive subgroup, with unity e.
fn corner_ring(t: &FinRing, s_sub: &SubgroupEmbedding, e: &Elem) -> Result<FinRing> {
    let ks = s_sub.subgroup().rank();
    let mut mult = vec![vec![s_sub.subgroup().zero(); ks]; ks];
    for a in 0..ks {
        let xa = s_sub.embedding().apply(&s_sub.subgroup().generator(a));
        for (b, slot) in mult[a].iter_mut().enumerate() {
            let xb = s_sub.embedding().apply(&s_sub.subgroup().generator(b));
            *slot = s_sub
                .preimage(&t.mul(&xa, &xb))
                .ok_or_else(|| Error::Internal("corner not closed under multiplication".into()))?;
        }
    }
    let one = s_sub
        .preimage(e)
        .ok_or_else(|| Error::Internal("idempotent must lie in its own corner".into()))?;
    FinRing::validated(s_sub.subgroup().clone(), mult, Some(one))
}

/// Module structure on a multiplicatively stable subgroup of T, with the
/// ambient ring acting through multiplication.
fn module_on_subgroup(
    t: &FinRing,
    sub: &SubgroupEmbedding,
    acting: &FinRing,
    side: Side,
    act: impl Fn(&FinRing, &Elem, &Elem) -> Elem,
) -> Result<ModuleStructure> {
    let km = sub.subgroup().rank();
    let kr = acting.rank();
    let mut table = vec![vec![sub.subgroup().zero(); km]; kr];
    for (u, row) in table.iter_mut().enumerate() {
        let g = acting.group().generator(u);
        for (j, slot) in row.iter_mut().enumerate() {
            let x = sub.embedding().apply(&sub.subgroup().generator(j));
            let moved = act(t, &g, &x);
            *slot = sub
                .preimage(&moved)
                .ok_or_else(|| Error::Internal("subgroup not stable under the action".into()))?;
        }
    }
    ModuleStructure::new(acting.clone(), sub.subgroup().clone(), side, table)
}

/// Module structure where the acting ring is itself a corner subring: the
/// corner generators act through their ambient images.
fn module_via_embedding(
    s: &FinRing,
    s_sub: &SubgroupEmbedding,
    t: &FinRing,
    m_sub: &SubgroupEmbedding,
    side: Side,
) -> Result<ModuleStructure> {
    let km = m_sub.subgroup().rank();
    let ks = s.rank();
    let mut table = vec![vec![m_sub.subgroup().zero(); km]; ks];
    for (u, row) in table.iter_mut().enumerate() {
        let s_amb = s_sub.embedding().apply(&s.group().generator(u));
        for (j, slot) in row.iter_mut().enumerate() {
            let x = m_sub.embedding().apply(&m_sub.subgroup().generator(j));
            let moved = match side {
                Side::Left => t.mul(&s_amb, &x),
                Side::Right => t.mul(&x, &s_amb),
            };
            *slot = m_sub
                .preimage(&moved)
                .ok_or_else(|| Error::Internal("subgroup not stable under corner action".into()))?;
        }
    }
    ModuleStructure::new(s.clone(), m_sub.subgroup().clone(), side, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_of_matrix_ring() {
        let t = FinRing::matrix_ring(2, 2).unwrap();
        let e = vec![1, 0, 0, 0]; // E11
        let datum = corner_context(&t, &e).unwrap();
        assert!(datum.is_context());
        assert_eq!(datum.s().order(), 2);
        assert_eq!(datum.p().group().order(), 4);
        assert_eq!(datum.q().group().order(), 4);
    }

    #[test]
    fn corner_of_z6_at_three() {
        let t = FinRing::cyclic(6).unwrap();
        let datum = corner_context(&t, &vec![3]).unwrap();
        assert_eq!(datum.s().order(), 2);
        assert_eq!(datum.p().group().order(), 2);
        // Trace ideal of the T-side map is {0, 3}.
        assert_eq!(datum.m_t().trace().order(), 2);
        assert!(datum.m_t().trace().contains_element(&[3]));
        // The S-side trace is all of S = eTe.
        assert!(datum.m_s().trace().is_whole());
    }

    #[test]
    fn corner_at_one_is_the_identity_context() {
        let t = FinRing::cyclic(4).unwrap();
        let datum = identity_context(&t).unwrap();
        assert!(datum.is_context());
        assert_eq!(datum.s().order(), 4);
        assert!(datum.m_t().trace().is_whole());
        assert!(datum.m_s().trace().is_whole());
    }

    #[test]
    fn non_idempotent_is_rejected() {
        let t = FinRing::cyclic(4).unwrap();
        assert!(corner_context(&t, &vec![2]).is_err());
    }

    #[test]
    fn corner_at_zero_degenerates() {
        let t = FinRing::cyclic(4).unwrap();
        let datum = corner_context(&t, &vec![0]).unwrap();
        assert!(datum.s().group().is_trivial());
        assert!(datum.p().group().is_trivial());
        assert!(datum.is_context());
    }
}
