//! Dual pairings and their classification.
//!
//! A dual left T-pairing is a right module V, a left module W and a bilinear
//! form `V × W → T` with `⟨v·t, w⟩ = ⟨v,w⟩·t` and `⟨v, t·w⟩ = t·⟨v,w⟩`; a
//! dual right pairing mirrors the sides. Classification runs through the
//! canonical map `α_V : V ⊗_T W → End(V)` and the adjuncts κ, χ.
//!
//! Since every module here is finite, a subset of a Hom-group is dense in
//! the finite topology iff it is the whole group, so density is implemented
//! as surjectivity of κ; likewise the finite dual-basis criterion for local
//! projectivity collapses to solvability of the identity in the image of the
//! evaluation bracket, which coincides with finitely generated projectivity.
//! The alpha verdict is tri-state: certification needs the sufficiency
//! criterion (locally projective + dense); bounded enumeration alone can
//! only refute, never certify.

use crate::abelian::{gcd, AbHom, Elem};
use crate::algebra::module::{ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result, ValidationReport};
use crate::tensor_hom::{alpha_map, bracket_map, hom_module, AlphaData, HomModule};

#[derive(Clone, Debug)]
pub struct DualPairing {
    ring: FinRing,
    v: ModuleStructure,
    w: ModuleStructure,
    /// `table[a][b]` = ⟨v_a, w_b⟩ in T.
    table: Vec<Vec<Elem>>,
    side: Side,
}

impl DualPairing {
    /// For `Side::Left`: `v` right, `w` left. For `Side::Right`: `v` left,
    /// `w` right.
    pub fn new(
        ring: FinRing,
        v: ModuleStructure,
        w: ModuleStructure,
        table: Vec<Vec<Elem>>,
        side: Side,
    ) -> Result<Self> {
        let (v_side, w_side) = match side {
            Side::Left => (Side::Right, Side::Left),
            Side::Right => (Side::Left, Side::Right),
        };
        if v.side() != v_side || w.side() != w_side {
            return Err(Error::Shape("pairing modules on the wrong sides".into()));
        }
        if v.ring() != &ring || w.ring() != &ring {
            return Err(Error::Shape("pairing modules over the wrong ring".into()));
        }
        let (kv, kw) = (v.group().rank(), w.group().rank());
        if table.len() != kv || table.iter().any(|row| row.len() != kw) {
            return Err(Error::Shape(format!("pairing table must be {kv}x{kw}")));
        }
        Ok(Self { ring, v, w, table, side })
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    pub fn v(&self) -> &ModuleStructure {
        &self.v
    }

    pub fn w(&self) -> &ModuleStructure {
        &self.w
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    /// Bilinear extension of the form.
    pub fn value(&self, ve: &[i64], we: &[i64]) -> Elem {
        let t = self.ring.group();
        let mut acc = vec![0i128; t.rank()];
        for (a, &x) in ve.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in we.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = i128::from(x) * i128::from(y);
                for (slot, &z) in acc.iter_mut().zip(&self.table[a][b]) {
                    *slot += c * i128::from(z);
                }
            }
        }
        t.reduce(&acc)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("dual pairing");
        let t = &self.ring;
        let dv = self.v.group().moduli();
        let dw = self.w.group().moduli();
        for (a, row) in self.table.iter().enumerate() {
            for (b, e) in row.iter().enumerate() {
                let ord = t.group().element_order(e);
                let bound = gcd(dv[a], dw[b]);
                if bound % ord != 0 {
                    report.push(
                        "well-definedness",
                        vec![a, b],
                        format!("value has additive order {ord}, must divide gcd = {bound}"),
                    );
                }
            }
        }
        for a in 0..dv.len() {
            let ve = self.v.group().generator(a);
            for b in 0..dw.len() {
                let we = self.w.group().generator(b);
                for u in 0..t.rank() {
                    let tu = t.group().generator(u);
                    // V-side linearity.
                    let lhs = self.value(&self.v.act(&tu, &ve), &we);
                    let rhs = match self.side {
                        Side::Left => t.mul(&self.table[a][b], &tu),
                        Side::Right => t.mul(&tu, &self.table[a][b]),
                    };
                    if lhs != rhs {
                        report.push(
                            "v-linearity",
                            vec![a, u, b],
                            format!("pairing not T-linear in V: {lhs:?} vs {rhs:?}"),
                        );
                    }
                    // W-side linearity.
                    let lhs = self.value(&ve, &self.w.act(&tu, &we));
                    let rhs = match self.side {
                        Side::Left => t.mul(&tu, &self.table[a][b]),
                        Side::Right => t.mul(&self.table[a][b], &tu),
                    };
                    if lhs != rhs {
                        report.push(
                            "w-linearity",
                            vec![a, u, b],
                            format!("pairing not T-linear in W: {lhs:?} vs {rhs:?}"),
                        );
                    }
                }
            }
        }
        report
    }

    /// The regular pairing `(T, T)` with form `⟨v, w⟩ = w·v`; the V factor
    /// plays the role of the dual of the W factor.
    pub fn regular(ring: &FinRing) -> Result<DualPairing> {
        let k = ring.rank();
        let table = (0..k)
            .map(|a| (0..k).map(|b| ring.mul(&ring.group().generator(b), &ring.group().generator(a))).collect())
            .collect();
        DualPairing::new(
            ring.clone(),
            ModuleStructure::regular(ring, Side::Right),
            ModuleStructure::regular(ring, Side::Left),
            table,
            Side::Left,
        )
    }

    /// The zero pairing on given modules.
    pub fn zero(ring: &FinRing, v: ModuleStructure, w: ModuleStructure, side: Side) -> Result<DualPairing> {
        let table = vec![vec![ring.zero(); w.group().rank()]; v.group().rank()];
        DualPairing::new(ring.clone(), v, w, table, side)
    }

    /// The adjunct `κ : V → Hom(W, T)` (into *W for left pairings, W* for
    /// right pairings), with the Hom-module it lands in.
    pub fn kappa(&self) -> Result<(HomModule, AbHom)> {
        let regular = ModuleStructure::regular(&self.ring, self.w.side());
        let homs = hom_module(&self.ring, &self.w, &regular)?;
        let kv = self.v.group().rank();
        let kw = self.w.group().rank();
        let kt = self.ring.rank();
        let cols: Result<Vec<Elem>> = (0..kv)
            .map(|a| {
                let m = crate::abelian::IntMat::from_fn(kt, kw, |r, b| {
                    i128::from(self.table[a][b][r])
                });
                homs.to_element_matrix(&m)
            })
            .collect();
        let hom = AbHom::from_columns(self.v.group().clone(), homs.group().clone(), &cols?)?;
        Ok((homs, hom))
    }

    /// The other adjunct `χ : W → Hom(V, T)`.
    pub fn chi(&self) -> Result<(HomModule, AbHom)> {
        let regular = ModuleStructure::regular(&self.ring, self.v.side());
        let homs = hom_module(&self.ring, &self.v, &regular)?;
        let kv = self.v.group().rank();
        let kw = self.w.group().rank();
        let kt = self.ring.rank();
        let cols: Result<Vec<Elem>> = (0..kw)
            .map(|b| {
                let m = crate::abelian::IntMat::from_fn(kt, kv, |r, a| {
                    i128::from(self.table[a][b][r])
                });
                homs.to_element_matrix(&m)
            })
            .collect();
        let hom = AbHom::from_columns(self.w.group().clone(), homs.group().clone(), &cols?)?;
        Ok((homs, hom))
    }
}

/// Local projectivity of a finite module via the dual-basis criterion, with
/// the finitely-generated-projectivity flag computed independently (for a
/// finite module the two coincide; both are reported and cross-checked by
/// the test suite).
#[derive(Clone, Debug)]
pub struct LocalProjectivity {
    /// The identity lies in the image of the evaluation bracket.
    pub locally_projective: bool,
    /// The evaluation bracket is surjective.
    pub finitely_generated_projective: bool,
    /// A dual basis: pairs (f_i, w̃_i) with `Σ f_i(w)·w̃_i = w` for all w.
    pub certificate: Option<Vec<(AbHom, Elem)>>,
}

/// Dual-basis test for a one-sided module.
pub fn is_locally_projective(w: &ModuleStructure) -> Result<LocalProjectivity> {
    let bracket = bracket_map(w)?;
    let id_coords =
        bracket.endo.to_element_matrix(&crate::abelian::IntMat::identity(w.group().rank()))?;
    let wide: Vec<i128> = id_coords.iter().map(|&x| i128::from(x)).collect();
    let preimage = crate::abelian::solve_congruence(
        bracket.map.hom.matrix(),
        &wide,
        bracket.endo.group().moduli(),
    )?;
    let fgp = bracket.map.hom.is_surjective()?;
    let certificate = match preimage {
        None => None,
        Some(x) => {
            let x = bracket.tensor.group().reduce(&x);
            let mut pairs = Vec::new();
            for (first, second, c) in bracket.tensor.generator_rep_of(&x) {
                // The tensor factors are (dual, W) for left modules and
                // (W, dual) for right modules.
                let (dual_gen, w_gen) = match w.side() {
                    Side::Left => (first, second),
                    Side::Right => (second, first),
                };
                let f = bracket.dual.to_hom(
                    &bracket
                        .dual
                        .group()
                        .scale(i128::from(c), &bracket.dual.group().generator(dual_gen)),
                )?;
                pairs.push((f, w.group().generator(w_gen)));
            }
            Some(pairs)
        }
    };
    Ok(LocalProjectivity {
        locally_projective: certificate.is_some(),
        finitely_generated_projective: fgp,
        certificate,
    })
}

/// Verdict on the alpha-condition for a pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaVerdict {
    /// Certified by the sufficiency criterion: W locally projective and
    /// κ(V) dense (surjective, under the finite collapse).
    Certified,
    /// Refuted, either structurally or by an explicit module.
    Refuted(AlphaRefutation),
    /// Neither certified nor refuted; carries the bound cleared by
    /// enumeration, if any.
    Unknown { cleared_bound: Option<u128> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaRefutation {
    /// W is not locally projective, so the alpha-condition cannot hold
    /// (over a unital ring).
    NotLocallyProjective,
    /// An explicit module on which the alpha map has a kernel.
    Counterexample { module_moduli: Vec<i64> },
}

impl AlphaVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, AlphaVerdict::Certified)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, AlphaVerdict::Refuted(_))
    }
}

/// Outcome of the sufficiency test alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSufficiency {
    Certified,
    RefutedNotLocallyProjective,
    Inconclusive,
}

/// Sufficiency test: certified iff W is locally projective and κ is
/// surjective; refuted if W is not locally projective (valid over unital
/// rings); inconclusive otherwise.
pub fn alpha_sufficient(p: &DualPairing) -> Result<AlphaSufficiency> {
    if !p.ring().is_unital() {
        return Ok(AlphaSufficiency::Inconclusive);
    }
    let lp = is_locally_projective(p.w())?;
    if !lp.locally_projective {
        return Ok(AlphaSufficiency::RefutedNotLocallyProjective);
    }
    let dense = p.kappa()?.1.is_surjective()?;
    if dense {
        Ok(AlphaSufficiency::Certified)
    } else {
        Ok(AlphaSufficiency::Inconclusive)
    }
}

/// Outcome of the bounded search.
#[derive(Clone, Debug)]
pub enum BoundedAlpha {
    Refuted { module: ModuleStructure, alpha: Box<AlphaData> },
    NoCounterexample { bound: u128 },
}

/// Test injectivity of the alpha map against every enumerated module of
/// order at most `bound` (a semi-decision: clearance never certifies).
pub fn alpha_bounded(p: &DualPairing, bound: u128) -> Result<BoundedAlpha> {
    // Left pairings quantify over right modules and vice versa.
    let side = match p.side() {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    for module in crate::catlab::enumerate_modules(p.ring(), side, bound)? {
        let alpha = alpha_map(p, &module)?;
        if !alpha.map.hom.is_injective()? {
            return Ok(BoundedAlpha::Refuted { module, alpha: Box::new(alpha) });
        }
    }
    Ok(BoundedAlpha::NoCounterexample { bound })
}

/// Classification flags of a dual pairing.
#[derive(Clone, Debug)]
pub struct PairingVerdict {
    /// κ(V) dense in Hom(W, T) — surjectivity under the finite collapse.
    pub dense: bool,
    /// α_V injective.
    pub injective: bool,
    /// α_V surjective.
    pub semi_strict: bool,
    /// α_V bijective.
    pub strict: bool,
    /// κ and χ both injective.
    pub non_degenerate: bool,
    pub local_projectivity: LocalProjectivity,
    pub alpha: AlphaVerdict,
}

/// Classify a pairing; `alpha_bound` controls the bounded search used when
/// the sufficiency test is inconclusive.
pub fn classify_pairing(p: &DualPairing, alpha_bound: Option<u128>) -> Result<PairingVerdict> {
    p.validate().into_result()?;
    let alpha_self = alpha_map(p, p.v())?;
    let (injective, semi_strict) = alpha_self.map.hom.is_bijective()?;
    let dense = p.kappa()?.1.is_surjective()?;
    let non_degenerate = p.kappa()?.1.is_injective()? && p.chi()?.1.is_injective()?;
    let local_projectivity = is_locally_projective(p.w())?;

    let alpha = match alpha_sufficient(p)? {
        AlphaSufficiency::Certified => AlphaVerdict::Certified,
        AlphaSufficiency::RefutedNotLocallyProjective => {
            AlphaVerdict::Refuted(AlphaRefutation::NotLocallyProjective)
        }
        AlphaSufficiency::Inconclusive => match alpha_bound {
            None => AlphaVerdict::Unknown { cleared_bound: None },
            Some(bound) => match alpha_bounded(p, bound)? {
                BoundedAlpha::Refuted { module, .. } => {
                    AlphaVerdict::Refuted(AlphaRefutation::Counterexample {
                        module_moduli: module.group().moduli().to_vec(),
                    })
                }
                BoundedAlpha::NoCounterexample { bound } => {
                    AlphaVerdict::Unknown { cleared_bound: Some(bound) }
                }
            },
        },
    };

    Ok(PairingVerdict {
        dense,
        injective,
        semi_strict,
        strict: injective && semi_strict,
        non_degenerate,
        local_projectivity,
        alpha,
    })
}
