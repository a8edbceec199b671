//! Morita semi-contexts, data and contexts over finite rings: the connecting
//! balanced map, its trace ideal, classification, and the diagram-level
//! checks.

pub mod butterfly;
pub mod elementary;
pub mod random;

use std::collections::BTreeSet;

use crate::abelian::{gcd, AbHom, Elem, SubgroupEmbedding};
use crate::algebra::baer::is_two_sided_ideal;
use crate::algebra::module::{Bimodule, Side};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result, ValidationReport};
use crate::pairing::{classify_pairing, AlphaVerdict, DualPairing};
use crate::tensor_hom::{tensor_over, TensorProduct};

pub use butterfly::{
    butterfly_check, strongly_faithful_check, ButterflyReport, StronglyFaithfulReport,
};
pub use elementary::{
    elementary_rngs, elementary_rngs_of_datum, proposition_tt_check, unity_analysis,
    ElementaryKind, ElementaryRng, TtReport, UnityReport,
};
pub use random::{random_data, random_semi_contexts, ring_pool, Rng};

/// The connecting bilinear data of a semi-context: a table of ring elements
/// indexed by generator pairs of the two bimodules.
#[derive(Clone, Debug)]
pub struct BalancedMap {
    p: Bimodule,
    q: Bimodule,
    /// `table[i][j]` = value on (P generator i, Q generator j), in T.
    table: Vec<Vec<Elem>>,
}

impl BalancedMap {
    /// `p` must be a (T,S)-bimodule and `q` an (S,T)-bimodule.
    pub fn new(p: Bimodule, q: Bimodule, table: Vec<Vec<Elem>>) -> Result<Self> {
        let t = p.left_ring();
        let s = p.right_ring();
        if q.left_ring() != s || q.right_ring() != t {
            return Err(Error::Shape("bimodule rings do not pair up as (T,S) and (S,T)".into()));
        }
        let (kp, kq) = (p.group().rank(), q.group().rank());
        if table.len() != kp || table.iter().any(|row| row.len() != kq) {
            return Err(Error::Shape(format!("balanced map table must be {kp}x{kq}")));
        }
        for row in &table {
            for e in row {
                if !t.group().contains(e) {
                    return Err(Error::Shape(format!("balanced map value {e:?} not in T")));
                }
            }
        }
        Ok(Self { p, q, table })
    }

    pub fn p(&self) -> &Bimodule {
        &self.p
    }

    pub fn q(&self) -> &Bimodule {
        &self.q
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    pub fn outer_ring(&self) -> &FinRing {
        self.p.left_ring()
    }

    pub fn inner_ring(&self) -> &FinRing {
        self.p.right_ring()
    }

    /// Bilinear extension of the table.
    pub fn value(&self, pe: &[i64], qe: &[i64]) -> Elem {
        let t = self.outer_ring().group();
        let mut acc = vec![0i128; t.rank()];
        for (i, &pi) in pe.iter().enumerate() {
            if pi == 0 {
                continue;
            }
            for (j, &qj) in qe.iter().enumerate() {
                if qj == 0 {
                    continue;
                }
                let c = i128::from(pi) * i128::from(qj);
                for (slot, &x) in acc.iter_mut().zip(&self.table[i][j]) {
                    *slot += c * i128::from(x);
                }
            }
        }
        t.reduce(&acc)
    }

    /// Z-bilinear well-definedness, S-balance, and (T,T)-bilinearity, all on
    /// generator tuples.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("balanced map");
        let t = self.outer_ring();
        let s = self.inner_ring();
        let dp = self.p.group().moduli();
        let dq = self.q.group().moduli();
        for (i, row) in self.table.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let ord = t.group().element_order(e);
                let bound = gcd(dp[i], dq[j]);
                if bound % ord != 0 {
                    report.push(
                        "well-definedness",
                        vec![i, j],
                        format!("value has additive order {ord}, must divide gcd = {bound}"),
                    );
                }
            }
        }
        for i in 0..dp.len() {
            let pe = self.p.group().generator(i);
            for j in 0..dq.len() {
                let qe = self.q.group().generator(j);
                for u in 0..s.rank() {
                    let su = s.group().generator(u);
                    let lhs = self.value(&self.p.act_right(&pe, &su), &qe);
                    let rhs = self.value(&pe, &self.q.act_left(&su, &qe));
                    if lhs != rhs {
                        report.push(
                            "balance",
                            vec![i, u, j],
                            format!("β(p·s, q) = {lhs:?} but β(p, s·q) = {rhs:?}"),
                        );
                    }
                }
                for u in 0..t.rank() {
                    let tu = t.group().generator(u);
                    let lhs = self.value(&self.p.act_left(&tu, &pe), &qe);
                    let rhs = t.mul(&tu, &self.table[i][j]);
                    if lhs != rhs {
                        report.push(
                            "left-linearity",
                            vec![u, i, j],
                            format!("β(t·p, q) = {lhs:?} but t·β(p, q) = {rhs:?}"),
                        );
                    }
                    let lhs = self.value(&pe, &self.q.act_right(&qe, &tu));
                    let rhs = t.mul(&self.table[i][j], &tu);
                    if lhs != rhs {
                        report.push(
                            "right-linearity",
                            vec![i, j, u],
                            format!("β(p, q·t) = {lhs:?} but β(p, q)·t = {rhs:?}"),
                        );
                    }
                }
            }
        }
        report
    }
}

/// A Morita semi-context `(T, S, P, Q, β, I)` with its trace ideal.
#[derive(Clone, Debug)]
pub struct MoritaSemiContext {
    beta: BalancedMap,
    trace: SubgroupEmbedding,
}

/// Validate every component and the balanced-map axioms, compute the trace
/// ideal and verify it is two-sided.
pub fn build_semi_context(beta: BalancedMap) -> Result<MoritaSemiContext> {
    beta.outer_ring().validate().into_result()?;
    beta.inner_ring().validate().into_result()?;
    beta.p.validate().into_result()?;
    beta.q.validate().into_result()?;
    beta.validate().into_result()?;

    let t = beta.outer_ring().clone();
    let values: Vec<Elem> = beta.table.iter().flatten().cloned().collect();
    let trace = crate::abelian::subgroup_generated(t.group(), &values)?;
    if !is_two_sided_ideal(&t, &trace) {
        return Err(Error::Internal("trace ideal is not two-sided".into()));
    }
    Ok(MoritaSemiContext { beta, trace })
}

impl MoritaSemiContext {
    pub fn t(&self) -> &FinRing {
        self.beta.outer_ring()
    }

    pub fn s(&self) -> &FinRing {
        self.beta.inner_ring()
    }

    pub fn p(&self) -> &Bimodule {
        &self.beta.p
    }

    pub fn q(&self) -> &Bimodule {
        &self.beta.q
    }

    pub fn beta(&self) -> &BalancedMap {
        &self.beta
    }

    /// The trace ideal `I = Im(β) ⊆ T`.
    pub fn trace(&self) -> &SubgroupEmbedding {
        &self.trace
    }

    /// The tensor-level connecting map `P ⊗_S Q → T`.
    pub fn connecting(&self) -> Result<(TensorProduct, AbHom)> {
        let tensor = tensor_over(self.s(), self.beta.p.right(), self.beta.q.left())?;
        let map = tensor.map_to(self.t().group(), |i, j| self.beta.table[i][j].clone())?;
        Ok((tensor, map))
    }

    /// The dual left T-pairing `(Q, P)` induced by β (form swaps arguments).
    pub fn pairing_left(&self) -> Result<DualPairing> {
        let kq = self.q().group().rank();
        let kp = self.p().group().rank();
        let table =
            (0..kq).map(|b| (0..kp).map(|a| self.beta.table[a][b].clone()).collect()).collect();
        DualPairing::new(
            self.t().clone(),
            self.q().right().clone(),
            self.p().left().clone(),
            table,
            Side::Left,
        )
    }

    /// The dual right T-pairing `(P, Q)` induced by β.
    pub fn pairing_right(&self) -> Result<DualPairing> {
        DualPairing::new(
            self.t().clone(),
            self.p().left().clone(),
            self.q().right().clone(),
            self.beta.table.clone(),
            Side::Right,
        )
    }

    /// Full classification of the semi-context.
    pub fn classify(&self, alpha_bound: Option<u128>) -> Result<SemiContextClassification> {
        let (_, conn) = self.connecting()?;
        let (injective, semi_strict) = conn.is_bijective()?;

        let kappa_pl = self.pairing_left()?.kappa()?.1;
        let kappa_qr = self.pairing_right()?.kappa()?.1;
        let non_degenerate = kappa_pl.is_injective()? && kappa_qr.is_injective()?;

        let alpha_left = classify_pairing(&self.pairing_left()?, alpha_bound)?.alpha;
        let alpha_right = classify_pairing(&self.pairing_right()?, alpha_bound)?.alpha;

        // The set of values on elementary pairs, as opposed to the additive
        // image (the trace ideal). The two can differ; both are reported.
        let mut decomposable_values = BTreeSet::new();
        for pe in self.p().group().elements() {
            for qe in self.q().group().elements() {
                decomposable_values.insert(self.beta.value(&pe, &qe));
            }
        }
        let trace_elems = self.trace.element_set();
        let decomposable_equals_trace = decomposable_values.len() == trace_elems.len()
            && decomposable_values.iter().all(|v| trace_elems.contains(v));

        Ok(SemiContextClassification {
            injective,
            semi_strict,
            strict: injective && semi_strict,
            non_degenerate,
            trace: self.trace.clone(),
            decomposable_values,
            decomposable_equals_trace,
            alpha_left,
            alpha_right,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SemiContextClassification {
    /// Tensor-level connecting map injective.
    pub injective: bool,
    /// Tensor-level connecting map surjective.
    pub semi_strict: bool,
    pub strict: bool,
    /// Both adjuncts `Q → *P` and `P → Q*` injective.
    pub non_degenerate: bool,
    /// The trace ideal (additive image of β).
    pub trace: SubgroupEmbedding,
    /// Values of β on elementary pairs; a subset of the trace ideal that
    /// need not be closed under addition.
    pub decomposable_values: BTreeSet<Elem>,
    /// Whether the decomposable value set already equals the trace ideal.
    pub decomposable_equals_trace: bool,
    pub alpha_left: AlphaVerdict,
    pub alpha_right: AlphaVerdict,
}

/// Two semi-contexts sharing (T, S, P, Q); a Morita context when the
/// connecting maps are compatible.
#[derive(Clone, Debug)]
pub struct MoritaDatum {
    m_t: MoritaSemiContext,
    m_s: MoritaSemiContext,
    compat: ValidationReport,
}

/// Pair two semi-contexts into a datum, checking that they share components
/// and evaluating the compatibility identities on generator triples.
pub fn build_datum(m_t: MoritaSemiContext, m_s: MoritaSemiContext) -> Result<MoritaDatum> {
    if m_s.t() != m_t.s() || m_s.s() != m_t.t() {
        return Err(Error::Shape("semi-context rings do not match up".into()));
    }
    if m_s.p() != m_t.q() || m_s.q() != m_t.p() {
        return Err(Error::Shape("semi-context bimodules do not match up".into()));
    }
    let compat = compatibility_report(&m_t, &m_s);
    Ok(MoritaDatum { m_t, m_s, compat })
}

fn compatibility_report(m_t: &MoritaSemiContext, m_s: &MoritaSemiContext) -> ValidationReport {
    let mut report = ValidationReport::new("compatibility");
    let p = m_t.p();
    let q = m_t.q();
    let beta_t = m_t.beta();
    let beta_s = m_s.beta();
    let (kp, kq) = (p.group().rank(), q.group().rank());
    for j in 0..kq {
        let qe = q.group().generator(j);
        for i in 0..kp {
            let pe = p.group().generator(i);
            // β_S(q, p)·q' = q·β_T(p, q')
            for l in 0..kq {
                let qe2 = q.group().generator(l);
                let lhs = q.act_left(&beta_s.value(&qe, &pe), &qe2);
                let rhs = q.act_right(&qe, &beta_t.value(&pe, &qe2));
                if lhs != rhs {
                    report.push(
                        "compatibility-q",
                        vec![j, i, l],
                        format!("⟨q,p⟩_S·q' = {lhs:?} but q·⟨p,q'⟩_T = {rhs:?}"),
                    );
                }
            }
            // p·β_S(q, p') = β_T(p, q)·p'
            for l in 0..kp {
                let pe2 = p.group().generator(l);
                let lhs = p.act_right(&pe, &beta_s.value(&qe, &pe2));
                let rhs = p.act_left(&beta_t.value(&pe, &qe), &pe2);
                if lhs != rhs {
                    report.push(
                        "compatibility-p",
                        vec![i, j, l],
                        format!("p·⟨q,p'⟩_S = {lhs:?} but ⟨p,q⟩_T·p' = {rhs:?}"),
                    );
                }
            }
        }
    }
    report
}

impl MoritaDatum {
    pub fn m_t(&self) -> &MoritaSemiContext {
        &self.m_t
    }

    pub fn m_s(&self) -> &MoritaSemiContext {
        &self.m_s
    }

    pub fn t(&self) -> &FinRing {
        self.m_t.t()
    }

    pub fn s(&self) -> &FinRing {
        self.m_t.s()
    }

    pub fn p(&self) -> &Bimodule {
        self.m_t.p()
    }

    pub fn q(&self) -> &Bimodule {
        self.m_t.q()
    }

    /// Whether both compatibility identities hold (Morita context).
    pub fn is_context(&self) -> bool {
        self.compat.is_valid()
    }

    /// Witnessing failures when the datum is not a context.
    pub fn compatibility(&self) -> &ValidationReport {
        &self.compat
    }

    /// Non-degeneracy of the datum: all four adjuncts injective.
    pub fn is_non_degenerate(&self) -> Result<bool> {
        let a = self.m_t.pairing_left()?.kappa()?.1.is_injective()?;
        let b = self.m_t.pairing_right()?.kappa()?.1.is_injective()?;
        let c = self.m_s.pairing_left()?.kappa()?.1.is_injective()?;
        let d = self.m_s.pairing_right()?.kappa()?.1.is_injective()?;
        Ok(a && b && c && d)
    }
}
