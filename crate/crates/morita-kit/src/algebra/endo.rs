//! Endomorphism rings of modules, with the canonical scalar morphisms of a
//! bimodule into them.
//!
//! `endo_ring` returns the plain composition ring `End(M)` with product
//! `f·g := f∘g`; on the left regular module this is isomorphic to the
//! opposite ring, on the right regular module to the ring itself. Where a
//! construction needs the opposite convention for left modules, it takes
//! `opposite()` of the result; the scalar morphisms below do exactly that.

use crate::abelian::IntMat;
use crate::algebra::module::{Bimodule, ModuleStructure};
use crate::algebra::morphism::RngMorphism;
use crate::algebra::ring::FinRing;
use crate::error::Result;
use crate::tensor_hom::{hom_module, HomModule};

#[derive(Clone, Debug)]
pub struct EndRing {
    /// `End(M)` with composition product on the Hom group.
    pub ring: FinRing,
    /// The underlying Hom-module (basis maps and coordinate conversion).
    pub hom: HomModule,
}

/// The endomorphism ring of a module under composition.
pub fn endo_ring(m: &ModuleStructure) -> Result<EndRing> {
    let hom = hom_module(m.ring(), m, m)?;
    let k = hom.group().rank();
    let mut mult = vec![vec![hom.group().zero(); k]; k];
    for a in 0..k {
        let fa = hom.basis()[a].matrix();
        for (b, slot) in mult[a].iter_mut().enumerate().take(k) {
            let fb = hom.basis()[b].matrix();
            let composed = fa.mul(fb)?;
            *slot = hom.to_element_matrix(&composed)?;
        }
    }
    let one = hom.to_element_matrix(&IntMat::identity(m.group().rank()))?;
    let ring = FinRing::new(hom.group().clone(), mult, Some(one))?;
    Ok(EndRing { ring, hom })
}

/// For a (T,S)-bimodule P: the canonical unital morphism
/// `S → End(T-side of P)^op`, `s ↦ [p ↦ p·s]`, with the End ring it lands in.
pub fn rho_morphism(p: &Bimodule) -> Result<(EndRing, RngMorphism)> {
    let end = endo_ring(p.left())?;
    let s = p.right_ring();
    let cols: Result<Vec<_>> = (0..s.rank())
        .map(|u| {
            let action = p.right().action_matrix(&s.group().generator(u));
            end.hom.to_element_matrix(&action)
        })
        .collect();
    let hom =
        crate::abelian::AbHom::from_columns(s.group().clone(), end.ring.group().clone(), &cols?)?;
    let target = end.ring.opposite();
    let morphism = RngMorphism::new(s.clone(), target, hom, s.is_unital())?;
    Ok((end, morphism))
}

/// For an (S,T)-bimodule Q: the canonical unital morphism
/// `S → End(T-side of Q)`, `s ↦ [q ↦ s·q]`.
pub fn lambda_morphism(q: &Bimodule) -> Result<(EndRing, RngMorphism)> {
    let end = endo_ring(q.right())?;
    let s = q.left_ring();
    let cols: Result<Vec<_>> = (0..s.rank())
        .map(|u| {
            let action = q.left().action_matrix(&s.group().generator(u));
            end.hom.to_element_matrix(&action)
        })
        .collect();
    let hom =
        crate::abelian::AbHom::from_columns(s.group().clone(), end.ring.group().clone(), &cols?)?;
    let morphism = RngMorphism::new(s.clone(), end.ring.clone(), hom, s.is_unital())?;
    Ok((end, morphism))
}

/// Brute-force search for a ring isomorphism (desk scale only; used by tests
/// and by module-enumeration deduplication).
pub fn find_ring_isomorphism(a: &FinRing, b: &FinRing) -> Result<Option<crate::abelian::AbHom>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let (canon_a, _, _) = crate::abelian::canonicalize(a.group())?;
    let (canon_b, _, _) = crate::abelian::canonicalize(b.group())?;
    if canon_a != canon_b {
        return Ok(None);
    }
    let ka = a.rank();
    if ka == 0 {
        return Ok(Some(crate::abelian::AbHom::identity(a.group())));
    }
    // Candidate images per generator: elements whose order divides the
    // generator's modulus.
    let mut col_choices: Vec<Vec<crate::abelian::Elem>> = Vec::with_capacity(ka);
    for j in 0..ka {
        let dj = a.group().moduli()[j];
        let choices: Vec<_> =
            b.group().elements().filter(|e| dj % b.group().element_order(e) == 0).collect();
        col_choices.push(choices);
    }
    let mut idx = vec![0usize; ka];
    'outer: loop {
        let cols: Vec<crate::abelian::Elem> =
            (0..ka).map(|j| col_choices[j][idx[j]].clone()).collect();
        let hom = crate::abelian::AbHom::from_columns(a.group().clone(), b.group().clone(), &cols)?;
        let multiplicative = (0..ka).all(|i| {
            (0..ka).all(|j| {
                hom.apply(a.gen_product(i, j))
                    == b.mul(&hom.apply(&a.group().generator(i)), &hom.apply(&a.group().generator(j)))
            })
        });
        let unital = match (a.one(), b.one()) {
            (Some(x), Some(y)) => &hom.apply(x) == y,
            (None, None) => true,
            _ => false,
        };
        if multiplicative && unital && hom.is_isomorphism()? {
            return Ok(Some(hom));
        }
        for j in 0..ka {
            idx[j] += 1;
            if idx[j] < col_choices[j].len() {
                continue 'outer;
            }
            idx[j] = 0;
        }
        return Ok(None);
    }
}
