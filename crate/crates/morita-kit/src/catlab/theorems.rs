//! Bounded-exhaustive regression over the equivalence and inclusion
//! statements attached to a Morita datum. Every suite first evaluates its
//! hypotheses on the instance and reports a skip when they fail; a failure
//! of a conclusion under satisfied hypotheses is loud.

use crate::abelian::{AbHom, Elem, IntMat, SubgroupEmbedding};
use crate::algebra::endo::endo_ring;
use crate::algebra::module::{Bimodule, ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result};
use crate::morita::{MoritaDatum, MoritaSemiContext};
use crate::pairing::{alpha_sufficient, AlphaSufficiency};
use crate::tensor_hom::{
    alpha_map, eta_map, hom_module, localization_maps, omega_map, tensor_over,
};

use super::enumerate::enumerate_modules;
use super::predicates::{
    flip_datum, in_alpha_iso_class, in_class, is_adstatic, is_cogenerated_sharp, is_colocalized,
    is_copure_ideal, is_divisible, is_generated, is_localized, is_presented_bounded,
    is_pure_ideal, is_static, is_strongly_faithful, ClassName,
};
use super::witness::{equivalence_witness, WitnessMode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct TheoremOutcome {
    pub name: String,
    pub status: Status,
    /// How many individual assertions the suite evaluated.
    pub checks: usize,
}

#[derive(Clone, Debug, Default)]
pub struct RegressionReport {
    pub outcomes: Vec<TheoremOutcome>,
}

impl RegressionReport {
    pub fn all_good(&self) -> bool {
        self.outcomes.iter().all(|o| !matches!(o.status, Status::Failed(_)))
    }

    pub fn failed(&self) -> Vec<&TheoremOutcome> {
        self.outcomes.iter().filter(|o| matches!(o.status, Status::Failed(_))).collect()
    }

    fn push(&mut self, name: impl Into<String>, status: Status, checks: usize) {
        self.outcomes.push(TheoremOutcome { name: name.into(), status, checks });
    }
}

struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failure: None }
    }

    fn expect(&mut self, ok: bool, detail: impl Fn() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn status(self) -> (Status, usize) {
        match self.failure {
            None => (Status::Passed, self.checks),
            Some(d) => (Status::Failed(d), self.checks),
        }
    }
}

/// Run the full suite on a datum, quantifying modules up to `bound`.
pub fn theorem_regression(d: &MoritaDatum, bound: u128) -> Result<RegressionReport> {
    let mut report = RegressionReport::default();
    run_one_side(d, bound, "left", &mut report)?;
    let flipped = flip_datum(d)?;
    run_one_side(&flipped, bound, "right", &mut report)?;
    Ok(report)
}

fn run_one_side(
    d: &MoritaDatum,
    bound: u128,
    side_label: &str,
    report: &mut RegressionReport,
) -> Result<()> {
    let t = d.t().clone();
    let s = d.s().clone();
    let left_t: Vec<ModuleStructure> = enumerate_modules(&t, Side::Left, bound)?;
    let left_s: Vec<ModuleStructure> = enumerate_modules(&s, Side::Left, bound)?;

    let unital = t.is_unital() && s.is_unital();
    let (_, conn_t) = d.m_t().connecting()?;
    let (_, conn_s) = d.m_s().connecting()?;
    let t_injective = conn_t.is_injective()?;
    let s_injective = conn_s.is_injective()?;

    // Alpha certifications used as hypotheses. The right pairing of the
    // S-side map is (Q, P) over S; the right pairing of the T-side map is
    // (P, Q) over T.
    let pr_certified = unital
        && matches!(alpha_sufficient(&d.m_s().pairing_right()?)?, AlphaSufficiency::Certified);
    let qr_certified = unital
        && matches!(alpha_sufficient(&d.m_t().pairing_right()?)?, AlphaSufficiency::Certified);

    // --- intersecting-class equalities for the injective semi-context -----
    {
        let name = format!("class-equalities-{side_label}");
        if !(unital && t_injective) {
            report.push(name, Status::Skipped("needs an injective unital semi-context".into()), 0);
        } else {
            let m = d.m_t();
            let mut tally = Tally::new();
            for u in &left_t {
                let v = in_class(m, ClassName::V, u)?;
                let vd = in_class(m, ClassName::VDouble, u)?;
                tally.expect(v == vd, || format!("static/colocalized split at {:?}", u.group().moduli()));
                let w = in_class(m, ClassName::W, u)?;
                let wd = in_class(m, ClassName::WDouble, u)?;
                tally.expect(w == wd, || format!("adstatic/localized split at {:?}", u.group().moduli()));
                let vh = in_class(m, ClassName::VHat, u)?;
                let wh = in_class(m, ClassName::WHat, u)?;
                let x = in_class(m, ClassName::X, u)?;
                let xd = in_class(m, ClassName::XDouble, u)?;
                tally.expect(
                    vh == wh && wh == x && x == xd,
                    || format!("hat classes split at {:?}", u.group().moduli()),
                );
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- the two comparison squares (unconditional) ------------------------
    {
        let name = format!("tensor-square-{side_label}");
        let mut tally = Tally::new();
        for u in &left_t {
            let ok = tensor_square_commutes(d, u)?;
            tally.expect(ok, || format!("tensor square broke at {:?}", u.group().moduli()));
        }
        let (status, checks) = tally.status();
        report.push(name, status, checks);
    }
    {
        let name = format!("hom-square-{side_label}");
        let mut tally = Tally::new();
        for u in &left_t {
            let ok = hom_square_commutes(d, u)?;
            tally.expect(ok, || format!("hom square broke at {:?}", u.group().moduli()));
        }
        let (status, checks) = tally.status();
        report.push(name, status, checks);
    }

    // --- generation chain ---------------------------------------------------
    {
        let name = format!("generated-chain-{side_label}");
        if !unital {
            report.push(name, Status::Skipped("needs unital rings".into()), 0);
        } else {
            let mut tally = Tally::new();
            for u in &left_t {
                let coloc = is_colocalized(&t, d.m_t().trace(), u)?.0;
                let divisible = is_divisible(&t, d.m_t().trace(), u)?;
                let generated = is_generated(d.p(), u)?.0;
                tally.expect(!coloc || divisible, || {
                    format!("colocalized but not divisible at {:?}", u.group().moduli())
                });
                tally.expect(!divisible || generated, || {
                    format!("divisible but not generated at {:?}", u.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- generation equals staticness under the alpha hypothesis ------------
    {
        let name = format!("generated-equals-static-{side_label}");
        if !pr_certified {
            report.push(name, Status::Skipped("inner right pairing not alpha-certified".into()), 0);
        } else {
            let mut tally = Tally::new();
            for u in &left_t {
                let generated = is_generated(d.p(), u)?.0;
                let static_u = is_static(d.p(), u)?.0;
                tally.expect(generated == static_u, || {
                    format!("generated/static split at {:?}", u.group().moduli())
                });
                if static_u {
                    let sf = is_strongly_faithful(&t, d.m_t().trace(), u)?;
                    tally.expect(sf, || {
                        format!("static module not trace-faithful at {:?}", u.group().moduli())
                    });
                }
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- purity of the trace ideal under both alpha hypotheses --------------
    {
        let name = format!("trace-purity-{side_label}");
        if !(pr_certified && qr_certified) {
            report.push(name, Status::Skipped("needs both alpha certifications".into()), 0);
        } else {
            let mut tally = Tally::new();
            for u in &left_t {
                let pure = is_pure_ideal(&t, d.m_t().trace(), u)?;
                tally.expect(pure, || {
                    format!("trace ideal not pure at {:?}", u.group().moduli())
                });
                let coloc = is_colocalized(&t, d.m_t().trace(), u)?.0;
                let divisible = is_divisible(&t, d.m_t().trace(), u)?;
                tally.expect(coloc == divisible, || {
                    format!("colocalized/divisible split at {:?}", u.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- cogeneration chain over the inner ring ------------------------------
    {
        let name = format!("cogenerated-chain-{side_label}");
        if !unital {
            report.push(name, Status::Skipped("needs unital rings".into()), 0);
        } else {
            let mut tally = Tally::new();
            for l in &left_s {
                let localized = is_localized(&s, d.m_s().trace(), l)?.0;
                let sf = is_strongly_faithful(&s, d.m_s().trace(), l)?;
                let cogen = is_cogenerated_sharp(d.p(), l)?.0;
                let adstat = is_adstatic(d.p(), l)?.0;
                tally.expect(!localized || sf, || {
                    format!("localized but kernel nonzero at {:?}", l.group().moduli())
                });
                tally.expect(!sf || cogen, || {
                    format!("faithful but not cogenerated at {:?}", l.group().moduli())
                });
                tally.expect(!adstat || cogen, || {
                    format!("adstatic but not cogenerated at {:?}", l.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- cogeneration under the outer alpha hypothesis -----------------------
    {
        let name = format!("cogenerated-alpha-{side_label}");
        if !qr_certified {
            report.push(name, Status::Skipped("outer right pairing not alpha-certified".into()), 0);
        } else {
            let mut tally = Tally::new();
            for l in &left_s {
                let pure = is_pure_ideal(&s, d.m_s().trace(), l)?;
                tally.expect(pure, || {
                    format!("inner trace ideal not pure at {:?}", l.group().moduli())
                });
                let coloc = is_colocalized(&s, d.m_s().trace(), l)?.0;
                let cogen = is_cogenerated_sharp(d.p(), l)?.0;
                tally.expect(!coloc || cogen, || {
                    format!("colocalized but not cogenerated at {:?}", l.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- localized modules are adstatic under both hypotheses ----------------
    {
        let name = format!("cogenerated-localized-{side_label}");
        if !(pr_certified && qr_certified) {
            report.push(name, Status::Skipped("needs both alpha certifications".into()), 0);
        } else {
            let mut tally = Tally::new();
            for l in &left_s {
                let localized = is_localized(&s, d.m_s().trace(), l)?.0;
                if localized {
                    let adstat = is_adstatic(d.p(), l)?.0;
                    tally.expect(adstat, || {
                        format!("localized but not adstatic at {:?}", l.group().moduli())
                    });
                }
                let cogen = is_cogenerated_sharp(d.p(), l)?.0;
                let sf = is_strongly_faithful(&s, d.m_s().trace(), l)?;
                tally.expect(!cogen || sf, || {
                    format!("cogenerated but kernel nonzero at {:?}", l.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- static/adstatic equivalence at the trace bimodule -------------------
    {
        let name = format!("trace-static-adstatic-{side_label}");
        if !(t_injective && s_injective && unital) {
            report.push(name, Status::Skipped("needs an injective unital datum".into()), 0);
        } else {
            let mut tally = Tally::new();
            for (ring, ideal, modules) in [
                (&t, d.m_t().trace(), &left_t),
                (&s, d.m_s().trace(), &left_s),
            ] {
                let ideal_bimodule = ideal_bimodule(ring, ideal)?;
                for u in modules.iter() {
                    let (stat, _) = is_static(&ideal_bimodule, u)?;
                    if !stat {
                        continue;
                    }
                    // The Hom image must be adstatic with an isomorphic
                    // round trip.
                    let omega = omega_map(&ideal_bimodule, u)?;
                    let w = omega.hom_pk_module.clone();
                    let (adst, _) = is_adstatic(&ideal_bimodule, &w)?;
                    tally.expect(adst, || {
                        format!("Hom image not adstatic at {:?}", u.group().moduli())
                    });
                    tally.expect(omega.map.hom.is_isomorphism()?, || {
                        format!("round trip not an isomorphism at {:?}", u.group().moduli())
                    });
                }
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- the eight-term chain with cross-context witnesses -------------------
    {
        let name = format!("eight-term-chain-{side_label}");
        if !(t_injective && s_injective && unital) {
            report.push(name, Status::Skipped("needs an injective unital datum".into()), 0);
        } else {
            let mut tally = Tally::new();
            for u in &left_t {
                if in_class(d.m_t(), ClassName::X, u)? {
                    let witness = equivalence_witness(d, u, WitnessMode::HomFunctor)?;
                    tally.expect(witness.verified(), || {
                        format!("hom witness failed at {:?}", u.group().moduli())
                    });
                }
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- colocalized-class witnesses under the density gating ----------------
    {
        let name = format!("colocalized-witnesses-{side_label}");
        if !(t_injective && s_injective && unital) {
            report.push(name, Status::Skipped("needs an injective unital datum".into()), 0);
        } else {
            // Gate: every colocalized module (both sides) lies in the
            // alpha-isomorphism class.
            let mut gate = true;
            for u in &left_t {
                if is_colocalized(&t, d.m_t().trace(), u)?.0 && !in_alpha_iso_class(d.m_t(), u)?.0 {
                    gate = false;
                }
            }
            for l in &left_s {
                if is_colocalized(&s, d.m_s().trace(), l)?.0 && !in_alpha_iso_class(d.m_s(), l)?.0 {
                    gate = false;
                }
            }
            if !gate {
                report.push(
                    name,
                    Status::Skipped("colocalized classes not inside the alpha-iso class".into()),
                    0,
                );
            } else {
                let mut tally = Tally::new();
                for u in &left_t {
                    if is_colocalized(&t, d.m_t().trace(), u)?.0 {
                        let witness = equivalence_witness(d, u, WitnessMode::TensorFunctor)?;
                        tally.expect(witness.verified(), || {
                            format!("tensor witness failed at {:?}", u.group().moduli())
                        });
                    }
                }
                let (status, checks) = tally.status();
                report.push(name, status, checks);
            }
        }
    }

    // --- properties of a generator-like module under the alpha hypothesis ----
    {
        let name = format!("generated-static-properties-{side_label}");
        if !pr_certified {
            report.push(name, Status::Skipped("inner right pairing not alpha-certified".into()), 0);
        } else {
            let mut tally = Tally::new();
            // Bounded sums of P are P-static.
            for n in 0..=3usize {
                let pn = d.p().left().power(n)?;
                if pn.order() <= bound.saturating_mul(bound) {
                    let (stat, _) = is_static(d.p(), &pn)?;
                    tally.expect(stat, || format!("sum of {n} copies not static"));
                }
            }
            // Generated coincides with (bounded) presented.
            for u in &left_t {
                if u.order() > 16 {
                    continue;
                }
                let generated = is_generated(d.p(), u)?.0;
                let presented = is_presented_bounded(d.p().left(), u, 3)?;
                tally.expect(generated == presented, || {
                    format!("generated/presented split at {:?}", u.group().moduli())
                });
            }
            let (status, checks) = tally.status();
            report.push(name, status, checks);
        }
    }

    // --- localization consistency --------------------------------------------
    {
        let name = format!("localization-consistency-{side_label}");
        let mut tally = Tally::new();
        localization_consistency(&t, d.m_t().trace(), &left_t, &mut tally)?;
        localization_consistency(&s, d.m_s().trace(), &left_s, &mut tally)?;
        let (status, checks) = tally.status();
        report.push(name, status, checks);
    }

    Ok(())
}

/// Localized ⟺ strongly faithful ∧ copure; colocalized ⟺ divisible (as a
/// set identity) ∧ pure. The left sides come from the canonical maps, the
/// right sides from independent computations.
fn localization_consistency(
    ring: &FinRing,
    ideal: &SubgroupEmbedding,
    modules: &[ModuleStructure],
    tally: &mut Tally,
) -> Result<()> {
    for u in modules {
        let localized = is_localized(ring, ideal, u)?.0;
        let sf = is_strongly_faithful(ring, ideal, u)?;
        let copure = is_copure_ideal(ring, ideal, u)?;
        tally.expect(localized == (sf && copure), || {
            format!("localization characterization split at {:?}", u.group().moduli())
        });
        let colocalized = is_colocalized(ring, ideal, u)?.0;
        let divisible = is_divisible(ring, ideal, u)?;
        let pure = is_pure_ideal(ring, ideal, u)?;
        tally.expect(colocalized == (divisible && pure), || {
            format!("colocalization characterization split at {:?}", u.group().moduli())
        });
    }
    Ok(())
}

/// The trace ideal of a semi-context as a (T,T)-bimodule.
fn ideal_bimodule(ring: &FinRing, ideal: &SubgroupEmbedding) -> Result<Bimodule> {
    Bimodule::new(
        ModuleStructure::from_ring_subgroup(ring, Side::Left, ideal)?,
        ModuleStructure::from_ring_subgroup(ring, Side::Right, ideal)?,
    )
}

/// Commutativity of the square relating the counit to the colocalization
/// map: `ω ∘ (id_P ⊗ α_U) = ξ ∘ (β|_I ⊗ id_U) ∘ assoc` on
/// `P ⊗_S (Q ⊗_T U)`.
pub fn tensor_square_commutes(d: &MoritaDatum, u: &ModuleStructure) -> Result<bool> {
    let t = d.t();
    let s = d.s();
    let p = d.p();
    let q = d.q();

    let inner = tensor_over(t, q.right(), u)?;
    let inner_module = inner.induced_on_left_factor(s, Side::Left, |su, qi| {
        q.act_left(&s.group().generator(su), &q.group().generator(qi))
    })?;
    let outer = tensor_over(s, p.right(), &inner_module)?;

    // Route one: through the alpha map and the counit.
    let alpha = alpha_map(&d.m_t().pairing_right()?, u)?;
    if alpha.tensor.group() != inner.group() {
        return Err(Error::Internal("tensor presentations diverged".into()));
    }
    let omega = omega_map(p, u)?;
    let id_alpha = outer.map_right_factor(&omega.tensor, &alpha.map.hom)?;
    let route_one = omega.map.hom.compose(&id_alpha)?;

    // Route two: associate, corestrict the connecting map to the trace
    // ideal, and apply the colocalization map.
    let (pq, conn) = d.m_t().connecting()?;
    let trace = d.m_t().trace();
    let loc = localization_maps(t, trace, u)?;
    let pq_right_module = pq.induced_on_right_factor(t, Side::Right, |tu, qj| {
        q.act_right(&q.group().generator(qj), &t.group().generator(tu))
    })?;
    let big = tensor_over(t, &pq_right_module, u)?;
    // Associator outer → big.
    let assoc_cols: Result<Vec<Elem>> = (0..outer.group().rank())
        .map(|g| {
            let mut acc = vec![0i128; big.group().rank()];
            for (i, a, c1) in outer.generator_rep(g) {
                for (k, l, c2) in inner.generator_rep(a) {
                    let pq_elem = pq.pure(&p.group().generator(i), &q.group().generator(k));
                    let img = big.pure(&pq_elem, &u.group().generator(l));
                    for (slot, &x) in acc.iter_mut().zip(&img) {
                        *slot += i128::from(c1) * i128::from(c2) * i128::from(x);
                    }
                }
            }
            Ok(big.group().reduce(&acc))
        })
        .collect();
    let assoc = AbHom::from_columns(outer.group().clone(), big.group().clone(), &assoc_cols?)?;
    // Corestriction of the connecting map to its trace ideal.
    let cor_cols: Result<Vec<Elem>> = (0..pq.group().rank())
        .map(|a| {
            let img = conn.apply(&pq.group().generator(a));
            trace.preimage(&img).ok_or_else(|| {
                Error::Internal("connecting image must lie in the trace ideal".into())
            })
        })
        .collect();
    let cor = AbHom::from_columns(pq.group().clone(), trace.subgroup().clone(), &cor_cols?)?;
    let cor_tensor = big.map_left_factor(&loc.tensor_iu, &cor)?;
    let route_two = loc.xi.hom.compose(&cor_tensor)?.compose(&assoc)?;

    Ok(route_one == route_two)
}

/// Commutativity of the square relating the unit to the localization map:
/// `can ∘ Hom(Q, α_U) ∘ η = (β|_I)^* ∘ ζ` as maps
/// `U → Hom_T(P ⊗_S Q, U)`.
pub fn hom_square_commutes(d: &MoritaDatum, u: &ModuleStructure) -> Result<bool> {
    let t = d.t();
    let s = d.s();
    let p = d.p();
    let q = d.q();

    let eta = eta_map(q, u)?;
    let alpha = alpha_map(&d.m_t().pairing_right()?, u)?;
    if alpha.tensor.group() != eta.tensor.group() {
        return Err(Error::Internal("tensor presentations diverged".into()));
    }
    let omega = omega_map(p, u)?; // supplies Hom(P, U) with its S-structure
    let hom_q_w = hom_module(s, q.left(), &omega.hom_pk_module)?;
    let post = super::witness::hom_post(&eta.homs, &alpha.map.hom, &hom_q_w)?;

    // P ⊗_S Q as a left T-module, and Hom_T(P ⊗ Q, U).
    let (pq, conn) = d.m_t().connecting()?;
    let pq_left_module = pq.induced_on_left_factor(t, Side::Left, |tu, pi| {
        p.act_left(&t.group().generator(tu), &p.group().generator(pi))
    })?;
    let hom_pq_u = hom_module(t, &pq_left_module, u)?;

    // can : Hom_S(Q, Hom_T(P,U)) → Hom_T(P ⊗ Q, U), F ↦ [p⊗q ↦ F(q)(p)].
    let can_cols: Result<Vec<Elem>> = (0..hom_q_w.group().rank())
        .map(|a| {
            let f = &hom_q_w.basis()[a];
            let m = IntMat::from_fn(u.group().rank(), pq.group().rank(), |row, c| {
                let mut acc: i128 = 0;
                for (i, j, coeff) in pq.generator_rep(c) {
                    let w_coords = f.apply(&q.group().generator(j));
                    let inner_map = omega.hom_pk.to_hom(&w_coords)
                        .expect("image lies in the hom group");
                    acc += i128::from(coeff)
                        * i128::from(inner_map.apply(&p.group().generator(i))[row]);
                }
                acc
            });
            hom_pq_u.to_element_matrix(&m)
        })
        .collect();
    let can = AbHom::from_columns(hom_q_w.group().clone(), hom_pq_u.group().clone(), &can_cols?)?;
    let route_one = can.compose(&post)?.compose(&eta.map.hom)?;

    // Route two: ζ then precomposition with the corestricted connecting map.
    let trace = d.m_t().trace();
    let loc = localization_maps(t, trace, u)?;
    let cor_cols: Result<Vec<Elem>> = (0..pq.group().rank())
        .map(|a| {
            let img = conn.apply(&pq.group().generator(a));
            trace.preimage(&img).ok_or_else(|| {
                Error::Internal("connecting image must lie in the trace ideal".into())
            })
        })
        .collect();
    let cor = AbHom::from_columns(pq.group().clone(), trace.subgroup().clone(), &cor_cols?)?;
    let precomp_cols: Result<Vec<Elem>> = (0..loc.hom_iu.group().rank())
        .map(|a| {
            let composed = loc.hom_iu.basis()[a].matrix().mul(cor.matrix())?;
            hom_pq_u.to_element_matrix(&composed)
        })
        .collect();
    let precomp =
        AbHom::from_columns(loc.hom_iu.group().clone(), hom_pq_u.group().clone(), &precomp_cols?)?;
    let route_two = precomp.compose(&loc.zeta.hom)?;

    Ok(route_one == route_two)
}

// --- star modules -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct StarReport {
    pub bound: u128,
    /// Static = generated over the outer ring, module by module.
    pub static_equals_generated: bool,
    /// Adstatic = η-cogenerated over the endomorphism ring.
    pub adstatic_equals_cogenerated: bool,
    pub mismatches: Vec<String>,
}

impl StarReport {
    /// The bounded star-module verdict.
    pub fn is_star_bounded(&self) -> bool {
        self.static_equals_generated && self.adstatic_equals_cogenerated
    }
}

/// Bounded star-module test: `S := End(P)^op` is computed, P made a
/// (T,S)-bimodule via evaluation, and both class equalities are enumerated
/// up to the bound.
pub fn star_module_bounded(p_left: &ModuleStructure, bound: u128) -> Result<StarReport> {
    if p_left.side() != Side::Left {
        return Err(Error::Shape("star-module test expects a left module".into()));
    }
    let t = p_left.ring().clone();
    let end = endo_ring(p_left)?;
    let s = end.ring.opposite();
    // Right action of S on P: p·f := f(p).
    let kp = p_left.group().rank();
    let action: Vec<Vec<Elem>> = (0..s.rank())
        .map(|u| {
            (0..kp)
                .map(|j| end.hom.basis()[u].apply(&p_left.group().generator(j)))
                .collect()
        })
        .collect();
    let p_right = ModuleStructure::new(s.clone(), p_left.group().clone(), Side::Right, action)?;
    let p = Bimodule::validated(p_left.clone(), p_right)?;

    let mut mismatches = Vec::new();
    let mut static_equals_generated = true;
    for k in enumerate_modules(&t, Side::Left, bound)? {
        let stat = is_static(&p, &k)?.0;
        let gen = is_generated(&p, &k)?.0;
        if stat != gen {
            static_equals_generated = false;
            mismatches.push(format!(
                "outer module {:?}: static={stat}, generated={gen}",
                k.group().moduli()
            ));
        }
    }
    let mut adstatic_equals_cogenerated = true;
    for l in enumerate_modules(&s, Side::Left, bound)? {
        let adst = is_adstatic(&p, &l)?.0;
        let cogen = is_cogenerated_sharp(&p, &l)?.0;
        if adst != cogen {
            adstatic_equals_cogenerated = false;
            mismatches.push(format!(
                "inner module {:?}: adstatic={adst}, cogenerated={cogen}",
                l.group().moduli()
            ));
        }
    }
    Ok(StarReport { bound, static_equals_generated, adstatic_equals_cogenerated, mismatches })
}

// --- wide Morita contexts ----------------------------------------------------

#[derive(Clone, Debug)]
pub struct WideReport {
    /// `P ⊗_S (Q ⊗_T V) → V` injective.
    pub counit_v_injective: bool,
    /// `Q ⊗_T (P ⊗_S W) → W` injective.
    pub counit_w_injective: bool,
    /// Both right-side pairings alpha-certified.
    pub alpha_certified: bool,
    /// When certified, injectivity is forced; report whether it held.
    pub forced_conclusion_holds: Option<bool>,
}

/// The two composite counit maps of the induced wide context, evaluated at
/// one left T-module and one left S-module.
pub fn wide_morita_maps(
    d: &MoritaDatum,
    v: &ModuleStructure,
    w: &ModuleStructure,
) -> Result<WideReport> {
    if !d.is_context() {
        return Err(Error::Precondition("wide context maps need a Morita context".into()));
    }
    let t = d.t();
    let s = d.s();
    let p = d.p();
    let q = d.q();
    if v.side() != Side::Left || v.ring() != t {
        return Err(Error::Shape("first module must be a left module over T".into()));
    }
    if w.side() != Side::Left || w.ring() != s {
        return Err(Error::Shape("second module must be a left module over S".into()));
    }

    // η_V : P ⊗_S (Q ⊗_T V) → V, p⊗(q⊗v) ↦ β_T(p,q)·v.
    let qv = tensor_over(t, q.right(), v)?;
    let qv_module = qv.induced_on_left_factor(s, Side::Left, |su, qi| {
        q.act_left(&s.group().generator(su), &q.group().generator(qi))
    })?;
    let outer_v = tensor_over(s, p.right(), &qv_module)?;
    let beta_t = d.m_t().beta();
    let eta_v = outer_v.map_to(v.group(), |i, a| {
        let mut acc = vec![0i128; v.group().rank()];
        for (k, l, c) in qv.generator_rep(a) {
            let img = v.act(&beta_t.table()[i][k], &v.group().generator(l));
            for (slot, &x) in acc.iter_mut().zip(&img) {
                *slot += i128::from(c) * i128::from(x);
            }
        }
        v.group().reduce(&acc)
    })?;

    // ρ_W : Q ⊗_T (P ⊗_S W) → W, q⊗(p⊗w) ↦ β_S(q,p)·w.
    let pw = tensor_over(s, p.right(), w)?;
    let pw_module = pw.induced_on_left_factor(t, Side::Left, |tu, pi| {
        p.act_left(&t.group().generator(tu), &p.group().generator(pi))
    })?;
    let outer_w = tensor_over(t, q.right(), &pw_module)?;
    let beta_s = d.m_s().beta();
    let rho_w = outer_w.map_to(w.group(), |j, b| {
        let mut acc = vec![0i128; w.group().rank()];
        for (i, l, c) in pw.generator_rep(b) {
            let img = w.act(&beta_s.table()[j][i], &w.group().generator(l));
            for (slot, &x) in acc.iter_mut().zip(&img) {
                *slot += i128::from(c) * i128::from(x);
            }
        }
        w.group().reduce(&acc)
    })?;

    let counit_v_injective = eta_v.is_injective()?;
    let counit_w_injective = rho_w.is_injective()?;

    let unital = t.is_unital() && s.is_unital();
    let alpha_certified = unital
        && matches!(alpha_sufficient(&d.m_t().pairing_right()?)?, AlphaSufficiency::Certified)
        && matches!(alpha_sufficient(&d.m_s().pairing_right()?)?, AlphaSufficiency::Certified);
    let forced_conclusion_holds =
        alpha_certified.then_some(counit_v_injective && counit_w_injective);

    Ok(WideReport {
        counit_v_injective,
        counit_w_injective,
        alpha_certified,
        forced_conclusion_holds,
    })
}

/// Convenience: run one membership + flipped membership pair to answer a
/// right-module question by a left-module computation.
pub fn right_membership_via_flip(
    m: &MoritaSemiContext,
    class: ClassName,
    u_right: &ModuleStructure,
) -> Result<bool> {
    let flipped = super::predicates::flip_semi_context(m)?;
    let u_flipped = super::predicates::flip_module(u_right)?;
    in_class(&flipped, class, &u_flipped)
}
