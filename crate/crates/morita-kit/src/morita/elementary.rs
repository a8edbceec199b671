//! Elementary rngs of a connecting map: the tensor carriers `P ⊗_S Q` and
//! `Q ⊗_T P` each carry an rng structure induced by a connecting map, with
//! canonical morphisms into endomorphism rings.

use crate::abelian::{AbHom, Elem, IntMat};
use crate::algebra::endo::endo_ring;
use crate::algebra::morphism::RngMorphism;
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result, ValidationReport};
use crate::morita::{MoritaDatum, MoritaSemiContext};
use crate::tensor_hom::{tensor_over, TensorProduct};

/// Which carrier and which connecting map induced the multiplication,
/// relative to the semi-context `(T, S, P, Q, β)` it was built from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementaryKind {
    /// `P ⊗_S Q` with `(p⊗q)·(p'⊗q') = β(p,q)·p' ⊗ q'`.
    PqViaT,
    /// `Q ⊗_T P` with `(q⊗p)·(q'⊗p') = q·β(p,q') ⊗ p'`.
    QpViaT,
    /// `Q ⊗_T P` with the S-side map: `(q⊗p)·(q'⊗p') = β_S(q,p)·q' ⊗ p'`.
    QpViaS,
    /// `P ⊗_S Q` with the S-side map: `(p⊗q)·(p'⊗q') = p·β_S(q,p') ⊗ q'`.
    PqViaS,
}

/// A named morphism out of an elementary rng.
#[derive(Clone, Debug)]
pub struct NamedMorphism {
    /// Role of the morphism: "connecting", "into-end-p", "into-end-q", etc.
    pub role: &'static str,
    pub morphism: RngMorphism,
}

#[derive(Clone, Debug)]
pub struct ElementaryRng {
    pub kind: ElementaryKind,
    pub carrier: TensorProduct,
    /// The rng structure on the carrier (no unity flag by default).
    pub rng: FinRing,
    /// Canonical morphisms, each validated multiplicative.
    pub morphisms: Vec<NamedMorphism>,
}

/// The two elementary rngs of one semi-context: the `P ⊗_S Q` rng together
/// with its morphisms into `End(P_S)` and `End(_S Q)^op` and the connecting
/// morphism into T, and the `Q ⊗_T P` rng with its morphisms into
/// `End(_T P)^op` and `End(Q_T)`.
pub fn elementary_rngs(m: &MoritaSemiContext) -> Result<Vec<ElementaryRng>> {
    let t = m.t().clone();
    let s = m.s().clone();
    let p = m.p().clone();
    let q = m.q().clone();
    let beta = m.beta();

    // --- P ⊗_S Q with (p⊗q)(p'⊗q') = β(p,q)p' ⊗ q' ------------------------
    let pq = tensor_over(&s, p.right(), q.left())?;
    let pq_rng = {
        let k = pq.group().rank();
        let mut mult = vec![vec![pq.group().zero(); k]; k];
        for a in 0..k {
            let rep_a = pq.generator_rep(a);
            for (b, slot) in mult[a].iter_mut().enumerate() {
                let rep_b = pq.generator_rep(b);
                let mut acc = vec![0i128; k];
                for &(i, j, c) in &rep_a {
                    let tij = &beta.table()[i][j];
                    for &(x, y, c2) in &rep_b {
                        let moved = p.act_left(tij, &p.group().generator(x));
                        let img = pq.pure(&moved, &q.group().generator(y));
                        for (s_acc, &v) in acc.iter_mut().zip(&img) {
                            *s_acc += i128::from(c) * i128::from(c2) * i128::from(v);
                        }
                    }
                }
                *slot = pq.group().reduce(&acc);
            }
        }
        FinRing::new(pq.group().clone(), mult, None)?
    };

    let mut pq_morphisms = Vec::new();
    // Connecting morphism into T.
    let (_, conn) = m.connecting()?;
    pq_morphisms.push(NamedMorphism {
        role: "connecting",
        morphism: RngMorphism::new(pq_rng.clone(), t.clone(), conn.clone(), false)?,
    });
    // ψ : P⊗Q → End(P_S), p⊗q ↦ [p̃ ↦ β(p,q)·p̃].
    {
        let end_ps = endo_ring(p.right())?;
        let cols: Result<Vec<Elem>> = (0..pq.group().rank())
            .map(|a| {
                let mut acc = IntMat::zeros(p.group().rank(), p.group().rank());
                for (i, j, c) in pq.generator_rep(a) {
                    let l = t_left_action_matrix(&p, &beta.table()[i][j]);
                    for r in 0..acc.rows() {
                        for cidx in 0..acc.cols() {
                            acc.set(r, cidx, acc.get(r, cidx) + i128::from(c) * l.get(r, cidx));
                        }
                    }
                }
                end_ps.hom.to_element_matrix(&acc)
            })
            .collect();
        let hom = AbHom::from_columns(pq.group().clone(), end_ps.ring.group().clone(), &cols?)?;
        pq_morphisms.push(NamedMorphism {
            role: "into-end-p",
            morphism: RngMorphism::new(pq_rng.clone(), end_ps.ring.clone(), hom, false)?,
        });
    }
    // φ : P⊗Q → End(_S Q)^op, p⊗q ↦ [q̃ ↦ q̃·β(p,q)].
    {
        let end_q = endo_ring(q.left())?;
        let cols: Result<Vec<Elem>> = (0..pq.group().rank())
            .map(|a| {
                let mut acc = IntMat::zeros(q.group().rank(), q.group().rank());
                for (i, j, c) in pq.generator_rep(a) {
                    let r_mat = t_right_action_matrix(&q, &beta.table()[i][j]);
                    for r in 0..acc.rows() {
                        for cidx in 0..acc.cols() {
                            acc.set(r, cidx, acc.get(r, cidx) + i128::from(c) * r_mat.get(r, cidx));
                        }
                    }
                }
                end_q.hom.to_element_matrix(&acc)
            })
            .collect();
        let hom = AbHom::from_columns(pq.group().clone(), end_q.ring.group().clone(), &cols?)?;
        pq_morphisms.push(NamedMorphism {
            role: "into-end-q-op",
            morphism: RngMorphism::new(pq_rng.clone(), end_q.ring.opposite(), hom, false)?,
        });
    }

    // --- Q ⊗_T P with (q⊗p)(q'⊗p') = q·β(p,q') ⊗ p' ------------------------
    let qp = tensor_over(&t, q.right(), p.left())?;
    let qp_rng = {
        let k = qp.group().rank();
        let mut mult = vec![vec![qp.group().zero(); k]; k];
        for a in 0..k {
            let rep_a = qp.generator_rep(a);
            for (b, slot) in mult[a].iter_mut().enumerate() {
                let rep_b = qp.generator_rep(b);
                let mut acc = vec![0i128; k];
                for &(i, j, c) in &rep_a {
                    for &(x, y, c2) in &rep_b {
                        let moved = q.act_right(&q.group().generator(i), &beta.table()[j][x]);
                        let img = qp.pure(&moved, &p.group().generator(y));
                        for (s_acc, &v) in acc.iter_mut().zip(&img) {
                            *s_acc += i128::from(c) * i128::from(c2) * i128::from(v);
                        }
                    }
                }
                *slot = qp.group().reduce(&acc);
            }
        }
        FinRing::new(qp.group().clone(), mult, None)?
    };

    let mut qp_morphisms = Vec::new();
    // Ψ : Q⊗P → End(_T P)^op, q⊗p ↦ [p̃ ↦ β(p̃,q)·p].
    {
        let end_p = endo_ring(p.left())?;
        let kp = p.group().rank();
        let cols: Result<Vec<Elem>> = (0..qp.group().rank())
            .map(|a| {
                let mut acc = IntMat::zeros(kp, kp);
                for (i, j, c) in qp.generator_rep(a) {
                    for l in 0..kp {
                        let val = p.act_left(&beta.table()[l][i], &p.group().generator(j));
                        for (r, &v) in val.iter().enumerate() {
                            acc.set(r, l, acc.get(r, l) + i128::from(c) * i128::from(v));
                        }
                    }
                }
                end_p.hom.to_element_matrix(&acc)
            })
            .collect();
        let hom = AbHom::from_columns(qp.group().clone(), end_p.ring.group().clone(), &cols?)?;
        qp_morphisms.push(NamedMorphism {
            role: "into-end-p-op",
            morphism: RngMorphism::new(qp_rng.clone(), end_p.ring.opposite(), hom, false)?,
        });
    }
    // Φ : Q⊗P → End(Q_T), q⊗p ↦ [q̃ ↦ q·β(p,q̃)].
    {
        let end_q = endo_ring(q.right())?;
        let kq = q.group().rank();
        let cols: Result<Vec<Elem>> = (0..qp.group().rank())
            .map(|a| {
                let mut acc = IntMat::zeros(kq, kq);
                for (i, j, c) in qp.generator_rep(a) {
                    for l in 0..kq {
                        let val = q.act_right(&q.group().generator(i), &beta.table()[j][l]);
                        for (r, &v) in val.iter().enumerate() {
                            acc.set(r, l, acc.get(r, l) + i128::from(c) * i128::from(v));
                        }
                    }
                }
                end_q.hom.to_element_matrix(&acc)
            })
            .collect();
        let hom = AbHom::from_columns(qp.group().clone(), end_q.ring.group().clone(), &cols?)?;
        qp_morphisms.push(NamedMorphism {
            role: "into-end-q",
            morphism: RngMorphism::new(qp_rng.clone(), end_q.ring.clone(), hom, false)?,
        });
    }

    let out = vec![
        ElementaryRng {
            kind: ElementaryKind::PqViaT,
            carrier: pq,
            rng: pq_rng,
            morphisms: pq_morphisms,
        },
        ElementaryRng {
            kind: ElementaryKind::QpViaT,
            carrier: qp,
            rng: qp_rng,
            morphisms: qp_morphisms,
        },
    ];
    for e in &out {
        let report = e.validate();
        if !report.is_valid() {
            return Err(Error::Validation(report));
        }
    }
    Ok(out)
}

/// All four elementary rngs of a datum: the two of the T-side map plus the
/// two of the S-side map (carriers swapped, kinds relabelled).
pub fn elementary_rngs_of_datum(d: &MoritaDatum) -> Result<Vec<ElementaryRng>> {
    let mut out = elementary_rngs(d.m_t())?;
    let mut from_s = elementary_rngs(d.m_s())?;
    for e in &mut from_s {
        e.kind = match e.kind {
            ElementaryKind::PqViaT => ElementaryKind::QpViaS,
            ElementaryKind::QpViaT => ElementaryKind::PqViaS,
            other => other,
        };
    }
    out.append(&mut from_s);
    Ok(out)
}

impl ElementaryRng {
    /// Associativity of the induced multiplication plus multiplicativity of
    /// every attached morphism.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.rng.validate();
        report.subject = format!("elementary rng {:?}", self.kind);
        for nm in &self.morphisms {
            for f in nm.morphism.validate().failures {
                report.failures.push(crate::error::AxiomFailure {
                    axiom: nm.role,
                    witness: f.witness,
                    detail: f.detail,
                });
            }
        }
        report
    }
}

fn t_left_action_matrix(b: &crate::algebra::module::Bimodule, t_elem: &Elem) -> IntMat {
    let k = b.group().rank();
    IntMat::from_fn(k, k, |r, c| i128::from(b.act_left(t_elem, &b.group().generator(c))[r]))
}

fn t_right_action_matrix(b: &crate::algebra::module::Bimodule, t_elem: &Elem) -> IntMat {
    let k = b.group().rank();
    IntMat::from_fn(k, k, |r, c| i128::from(b.act_right(&b.group().generator(c), t_elem)[r]))
}

/// Report of the unity analysis of an elementary rng.
#[derive(Clone, Debug)]
pub struct UnityReport {
    /// A two-sided unity of the carrier rng, if one exists.
    pub unity: Option<Elem>,
    /// Whether the connecting map sends the unity to the unity of T.
    pub respects_unity: Option<bool>,
    /// When unity respected: the connecting map must be surjective.
    pub connecting_surjective: Option<bool>,
    /// When additionally injective: the connecting map must be bijective.
    pub connecting_bijective: Option<bool>,
    /// True when every conclusion whose hypotheses held was verified.
    pub conclusions_verified: bool,
}

/// Search the carrier for a two-sided unity and, when the connecting map
/// respects it, verify the forced surjectivity (and bijectivity, when the
/// semi-context is injective).
pub fn unity_analysis(e: &ElementaryRng, m: &MoritaSemiContext) -> Result<UnityReport> {
    let rng = &e.rng;
    let k = rng.rank();
    let unity = find_unity(rng)?;

    let Some(u) = unity else {
        return Ok(UnityReport {
            unity: None,
            respects_unity: None,
            connecting_surjective: None,
            connecting_bijective: None,
            conclusions_verified: true,
        });
    };
    // Sanity: u really is a unity.
    for i in 0..k {
        let g = rng.group().generator(i);
        debug_assert_eq!(rng.mul(&u, &g), g);
        debug_assert_eq!(rng.mul(&g, &u), g);
    }

    let conn = e
        .morphisms
        .iter()
        .find(|nm| nm.role == "connecting")
        .map(|nm| nm.morphism.hom().clone());
    let Some(conn) = conn else {
        return Ok(UnityReport {
            unity: Some(u),
            respects_unity: None,
            connecting_surjective: None,
            connecting_bijective: None,
            conclusions_verified: true,
        });
    };

    let respects = match m.t().one() {
        Some(one_t) => conn.apply(&u) == *one_t,
        None => false,
    };
    if !respects {
        return Ok(UnityReport {
            unity: Some(u),
            respects_unity: Some(false),
            connecting_surjective: None,
            connecting_bijective: None,
            conclusions_verified: true,
        });
    }
    let (inj, surj) = conn.is_bijective()?;
    let mut verified = surj;
    let mut bijective = None;
    let m_injective = inj; // same map; injectivity of the semi-context
    if m_injective {
        bijective = Some(inj && surj);
        verified = verified && inj && surj;
    }
    Ok(UnityReport {
        unity: Some(u),
        respects_unity: Some(true),
        connecting_surjective: Some(surj),
        connecting_bijective: bijective,
        conclusions_verified: verified,
    })
}

/// Solve `u·g_i = g_i·u = g_i` for all generators.
fn find_unity(rng: &FinRing) -> Result<Option<Elem>> {
    let k = rng.rank();
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let rows = 2 * k * k;
    let mut sys = IntMat::zeros(rows, k);
    let mut rhs = vec![0i128; rows];
    let mut moduli = vec![0i64; rows];
    for i in 0..k {
        let g = rng.group().generator(i);
        let right = rng.right_mult_matrix(&g); // u ↦ u·g_i
        let left = rng.left_mult_matrix(&g); // u ↦ g_i·u
        for r in 0..k {
            for c in 0..k {
                sys.set(i * k + r, c, right.get(r, c));
                sys.set((k + i) * k + r, c, left.get(r, c));
            }
            rhs[i * k + r] = i128::from(g[r]);
            rhs[(k + i) * k + r] = i128::from(g[r]);
            moduli[i * k + r] = rng.group().moduli()[r];
            moduli[(k + i) * k + r] = rng.group().moduli()[r];
        }
    }
    let sol = crate::abelian::solve_congruence(&sys, &rhs, &moduli)?;
    Ok(sol.map(|x| rng.group().reduce(&x)))
}

/// Report of the context-vs-multiplication comparison on a datum.
#[derive(Clone, Debug)]
pub struct TtReport {
    pub is_context: bool,
    /// The two multiplications on `P ⊗_S Q` agree on generator pairs.
    pub pq_tables_agree: bool,
    /// The two multiplications on `Q ⊗_T P` agree on generator pairs.
    pub qp_tables_agree: bool,
    /// First disagreeing generator pair, if any.
    pub witness: Option<(ElementaryKind, usize, usize)>,
    /// `{q ∈ Q : q ⊗_T P = 0} = 0`.
    pub p_faithful_over_q: bool,
    /// `{p ∈ P : Q ⊗_T p = 0} = 0`.
    pub q_faithful_over_p: bool,
    /// Context implies matching multiplications (checked unconditionally).
    pub forward_ok: bool,
    /// Under both faithfulness hypotheses: matching multiplications imply
    /// compatibility. `None` when the hypotheses fail.
    pub converse_ok: Option<bool>,
}

/// Compare the four elementary multiplications of a datum and evaluate both
/// directions of the context criterion.
pub fn proposition_tt_check(d: &MoritaDatum) -> Result<TtReport> {
    let rngs = elementary_rngs_of_datum(d)?;
    let find = |kind: ElementaryKind| {
        rngs.iter().find(|e| e.kind == kind).expect("all four kinds are produced")
    };
    let pq_t = find(ElementaryKind::PqViaT);
    let pq_s = find(ElementaryKind::PqViaS);
    let qp_t = find(ElementaryKind::QpViaT);
    let qp_s = find(ElementaryKind::QpViaS);

    let mut witness = None;
    let mut compare = |a: &ElementaryRng, b: &ElementaryRng, kind: ElementaryKind| -> Result<bool> {
        if a.rng.group() != b.rng.group() {
            return Err(Error::Internal("elementary carriers must coincide".into()));
        }
        let k = a.rng.rank();
        for i in 0..k {
            for j in 0..k {
                if a.rng.gen_product(i, j) != b.rng.gen_product(i, j) {
                    if witness.is_none() {
                        witness = Some((kind, i, j));
                    }
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    let pq_agree = compare(pq_t, pq_s, ElementaryKind::PqViaT)?;
    let qp_agree = compare(qp_t, qp_s, ElementaryKind::QpViaT)?;

    // Faithfulness: kernels of q ↦ (q ⊗ p_j)_j and p ↦ (q_i ⊗ p)_i.
    let t = d.t();
    let p = d.p();
    let q = d.q();
    let qp = tensor_over(t, q.right(), p.left())?;
    let p_faithful_over_q = {
        let kq = q.group().rank();
        let kp = p.group().rank();
        let mut stacked_target = crate::abelian::FinAbGroup::trivial();
        for _ in 0..kp {
            stacked_target = stacked_target.direct_sum(qp.group());
        }
        let block = qp.group().rank();
        let cols: Vec<Elem> = (0..kq)
            .map(|i| {
                let mut col = vec![0i64; block * kp];
                for j in 0..kp {
                    let img = qp.pure(&q.group().generator(i), &p.group().generator(j));
                    col[j * block..(j + 1) * block].copy_from_slice(&img);
                }
                col
            })
            .collect();
        let h = AbHom::from_columns(q.group().clone(), stacked_target, &cols)?;
        h.is_injective()?
    };
    let q_faithful_over_p = {
        let kq = q.group().rank();
        let kp = p.group().rank();
        let mut stacked_target = crate::abelian::FinAbGroup::trivial();
        for _ in 0..kq {
            stacked_target = stacked_target.direct_sum(qp.group());
        }
        let block = qp.group().rank();
        let cols: Vec<Elem> = (0..kp)
            .map(|j| {
                let mut col = vec![0i64; block * kq];
                for i in 0..kq {
                    let img = qp.pure(&q.group().generator(i), &p.group().generator(j));
                    col[i * block..(i + 1) * block].copy_from_slice(&img);
                }
                col
            })
            .collect();
        let h = AbHom::from_columns(p.group().clone(), stacked_target, &cols)?;
        h.is_injective()?
    };

    let is_context = d.is_context();
    let tables_agree = pq_agree && qp_agree;
    let forward_ok = !is_context || tables_agree;
    let converse_ok = if p_faithful_over_q && q_faithful_over_p {
        Some(tables_agree == is_context)
    } else {
        None
    };

    Ok(TtReport {
        is_context,
        pq_tables_agree: pq_agree,
        qp_tables_agree: qp_agree,
        witness,
        p_faithful_over_q,
        q_faithful_over_p,
        forward_ok,
        converse_ok,
    })
}
