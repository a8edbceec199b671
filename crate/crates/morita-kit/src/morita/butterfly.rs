//! Diagram-level checks on a Morita context: the butterfly of canonical maps
//! out of `Q ⊗_T P`, and the strong-faithfulness route to injectivity of the
//! alpha maps.

use crate::abelian::{AbHom, Elem, IntMat};
use crate::algebra::endo::{lambda_morphism, rho_morphism};
use crate::algebra::module::{ModuleStructure, Side};
use crate::error::{Error, Result};
use crate::morita::MoritaDatum;
use crate::tensor_hom::{alpha_map, bracket_map, tensor_over};

/// One conditional conclusion: hypothesis flags plus the verified conclusion
/// (absent when the hypothesis fails).
#[derive(Clone, Debug)]
pub struct Conditional {
    pub name: &'static str,
    pub hypothesis_holds: bool,
    pub conclusion_holds: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct ButterflyReport {
    /// `α_P = ρ_P ∘ ⟨,⟩_S` as maps `Q ⊗_T P → End(P)`.
    pub alpha_p_factors: bool,
    /// `[,]_P ∘ (κ ⊗ id_P) = ρ_P ∘ ⟨,⟩_S`.
    pub bracket_p_factors: bool,
    /// `α_Q = λ_Q ∘ ⟨,⟩_S` as maps `Q ⊗_T P → End(Q)`.
    pub alpha_q_factors: bool,
    /// `[,]_Q ∘ (id_Q ⊗ κ) = λ_Q ∘ ⟨,⟩_S`.
    pub bracket_q_factors: bool,
    /// The four conditional conclusions, evaluated on this instance.
    pub conclusions: Vec<Conditional>,
}

impl ButterflyReport {
    pub fn identities_hold(&self) -> bool {
        self.alpha_p_factors
            && self.bracket_p_factors
            && self.alpha_q_factors
            && self.bracket_q_factors
    }

    pub fn all_verified(&self) -> bool {
        self.identities_hold()
            && self.conclusions.iter().all(|c| c.conclusion_holds.unwrap_or(true))
    }
}

/// Build the butterfly of canonical maps out of `Q ⊗_T P` and check the four
/// factorization identities exactly, then evaluate the conditional
/// conclusions they support.
pub fn butterfly_check(d: &MoritaDatum) -> Result<ButterflyReport> {
    if !d.is_context() {
        return Err(Error::Precondition("butterfly check needs a Morita context".into()));
    }
    let p = d.p();
    let q = d.q();
    let t = d.t();

    // Shared carrier Q ⊗_T P with the S-side connecting map out of it.
    let carrier = tensor_over(t, q.right(), p.left())?;
    let conn_s = carrier.map_to(d.s().group(), |i, j| d.m_s().beta().table()[i][j].clone())?;

    // Scalar morphisms ρ_P : S → End(P), λ_Q : S → End(Q).
    let (end_p, rho) = rho_morphism(p)?;
    let (end_q, lambda) = lambda_morphism(q)?;
    let rho_conn = rho.hom().compose(&conn_s)?;
    let lambda_conn = lambda.hom().compose(&conn_s)?;

    // Route 1: the alpha map of the right pairing (P, Q) at U = P.
    let alpha_p = alpha_map(&d.m_t().pairing_right()?, p.left())?;
    if alpha_p.tensor.group() != carrier.group() || alpha_p.homs.group() != end_p.ring.group() {
        return Err(Error::Internal("alpha route landed on a different presentation".into()));
    }
    let alpha_p_factors = alpha_p.map.hom == rho_conn;

    // Route 2: κ ⊗ id_P into Hom(P,T) ⊗_T P, then the evaluation bracket.
    let bracket_p = bracket_map(p.left())?;
    let (kappa_pl_hom, kappa_pl) = d.m_t().pairing_left()?.kappa()?;
    if kappa_pl_hom.group() != bracket_p.dual.group() {
        return Err(Error::Internal("dual presentations diverged".into()));
    }
    let kappa_tensor = {
        let kq = q.group().rank();
        let grid: Vec<Elem> = (0..kq).map(|i| kappa_pl.apply(&q.group().generator(i))).collect();
        carrier.map_to(bracket_p.tensor.group(), |i, j| {
            bracket_p.tensor.pure(&grid[i], &p.group().generator(j))
        })?
    };
    let bracket_p_factors = bracket_p.map.hom.compose(&kappa_tensor)? == rho_conn;

    // Route 3: the alpha map of the left pairing (Q, P) at U = Q.
    let alpha_q = alpha_map(&d.m_t().pairing_left()?, q.right())?;
    if alpha_q.tensor.group() != carrier.group() || alpha_q.homs.group() != end_q.ring.group() {
        return Err(Error::Internal("alpha route landed on a different presentation".into()));
    }
    let alpha_q_factors = alpha_q.map.hom == lambda_conn;

    // Route 4: id_Q ⊗ κ into Q ⊗_T Hom(Q,T), then the evaluation bracket.
    let bracket_q = bracket_map(q.right())?;
    let (kappa_qr_hom, kappa_qr) = d.m_t().pairing_right()?.kappa()?;
    if kappa_qr_hom.group() != bracket_q.dual.group() {
        return Err(Error::Internal("dual presentations diverged".into()));
    }
    let kappa_tensor_q = {
        let kp = p.group().rank();
        let grid: Vec<Elem> = (0..kp).map(|j| kappa_qr.apply(&p.group().generator(j))).collect();
        carrier.map_to(bracket_q.tensor.group(), |i, j| {
            bracket_q.tensor.pure(&q.group().generator(i), &grid[j])
        })?
    };
    let bracket_q_factors = bracket_q.map.hom.compose(&kappa_tensor_q)? == lambda_conn;

    // Conditional conclusions.
    let (alpha_p_inj, alpha_p_surj) = alpha_p.map.hom.is_bijective()?;
    let (alpha_q_inj, alpha_q_surj) = alpha_q.map.hom.is_bijective()?;
    let (conn_s_inj, conn_s_surj) = conn_s.is_bijective()?;
    let rho_inj = rho.hom().is_injective()?;
    let rho_surj = rho.hom().is_surjective()?;
    let lambda_inj = lambda.hom().is_injective()?;
    let lambda_surj = lambda.hom().is_surjective()?;

    let conclusions = vec![
        Conditional {
            name: "right-pairing-injective-forces-injective-connecting",
            hypothesis_holds: alpha_p_inj,
            conclusion_holds: alpha_p_inj.then_some(conn_s_inj),
        },
        Conditional {
            name: "right-pairing-semi-strict-forces-scalar-surjection",
            hypothesis_holds: alpha_p_surj,
            conclusion_holds: alpha_p_surj.then_some(rho_surj),
        },
        Conditional {
            name: "faithful-and-semi-strict-force-scalar-isomorphism",
            hypothesis_holds: rho_inj && alpha_p_surj,
            conclusion_holds: (rho_inj && alpha_p_surj)
                .then_some(rho_surj && conn_s_inj && conn_s_surj),
        },
        Conditional {
            name: "left-pairing-injective-forces-injective-connecting",
            hypothesis_holds: alpha_q_inj,
            conclusion_holds: alpha_q_inj.then_some(conn_s_inj),
        },
        Conditional {
            name: "left-pairing-semi-strict-forces-scalar-surjection",
            hypothesis_holds: alpha_q_surj,
            conclusion_holds: alpha_q_surj.then_some(lambda_surj),
        },
        Conditional {
            name: "faithful-and-semi-strict-force-scalar-isomorphism-q-side",
            hypothesis_holds: lambda_inj && alpha_q_surj,
            conclusion_holds: (lambda_inj && alpha_q_surj)
                .then_some(lambda_surj && conn_s_inj && conn_s_surj),
        },
    ];

    Ok(ButterflyReport {
        alpha_p_factors,
        bracket_p_factors,
        alpha_q_factors,
        bracket_q_factors,
        conclusions,
    })
}

#[derive(Clone, Debug)]
pub struct StronglyFaithfulReport {
    /// `ψ ∘ α_U = ζ` as maps `Q ⊗_T U → Hom_S(J, Q ⊗_T U)`.
    pub diagram_commutes: bool,
    /// Strong faithfulness of J at `Q ⊗_T U`.
    pub zeta_injective: bool,
    pub alpha_injective: bool,
    /// `ζ injective ⇒ α injective` on this instance (vacuous when the
    /// hypothesis fails).
    pub implication_holds: bool,
}

/// The factorization of the alpha map of the right pairing through the trace
/// ideal J of the S-side connecting map, for one left T-module.
pub fn strongly_faithful_check(
    d: &MoritaDatum,
    u: &ModuleStructure,
) -> Result<StronglyFaithfulReport> {
    if u.side() != Side::Left || u.ring() != d.t() {
        return Err(Error::Shape("strong-faithfulness check needs a left T-module".into()));
    }
    let (qp_tensor, conn_s) = d.m_s().connecting()?;
    if !conn_s.is_injective()? {
        return Err(Error::Precondition(
            "strong-faithfulness route needs an injective S-side connecting map".into(),
        ));
    }
    let s = d.s();
    let q = d.q();
    let j_ideal = d.m_s().trace();

    // Q ⊗_T U as a left S-module.
    let qu_tensor = tensor_over(d.t(), q.right(), u)?;
    let qu_module = qu_tensor.induced_on_left_factor(s, Side::Left, |su, qi| {
        q.act_left(&s.group().generator(su), &q.group().generator(qi))
    })?;

    // ζ_{J, Q⊗U}.
    let loc = crate::tensor_hom::localization_maps(s, j_ideal, &qu_module)?;

    // α_U of the right pairing; same tensor presentation as qu_tensor.
    let alpha = alpha_map(&d.m_t().pairing_right()?, u)?;
    if alpha.tensor.group() != qu_tensor.group() {
        return Err(Error::Internal("alpha tensor presentation diverged".into()));
    }

    // ψ : Hom_T(P, U) → Hom_S(J, Q ⊗_T U), f ↦ [j ↦ (id ⊗ f)(⟨,⟩_S⁻¹ j)].
    let hom_pu = &alpha.homs;
    let kj = j_ideal.subgroup().rank();
    let qu_rank = qu_tensor.group().rank();
    let preimages: Result<Vec<Elem>> = (0..kj)
        .map(|b| {
            let amb = j_ideal.embedding().apply(&j_ideal.subgroup().generator(b));
            conn_s.preimage(&amb)?.ok_or_else(|| {
                Error::Internal("trace element must lift through the connecting map".into())
            })
        })
        .collect();
    let preimages = preimages?;
    let psi_cols: Result<Vec<Elem>> = (0..hom_pu.group().rank())
        .map(|a| {
            let f = &hom_pu.basis()[a];
            let id_tensor_f = qp_tensor.map_right_factor(&qu_tensor, f)?;
            let m = IntMat::from_fn(qu_rank, kj, |row, b| {
                i128::from(id_tensor_f.apply(&preimages[b])[row])
            });
            loc.hom_iu.to_element_matrix(&m)
        })
        .collect();
    let psi =
        AbHom::from_columns(hom_pu.group().clone(), loc.hom_iu.group().clone(), &psi_cols?)?;

    let composite = psi.compose(&alpha.map.hom)?;
    let diagram_commutes = composite == loc.zeta.hom;
    let zeta_injective = loc.zeta.hom.is_injective()?;
    let alpha_injective = alpha.map.hom.is_injective()?;

    Ok(StronglyFaithfulReport {
        diagram_commutes,
        zeta_injective,
        alpha_injective,
        implication_holds: !zeta_injective || alpha_injective,
    })
}
