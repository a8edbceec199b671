//! Semi-context construction and classification, elementary rngs, the
//! diagram checks, and the seeded random-corpus properties.

mod common;

use morita_kit::algebra::{corner_context, identity_context, FinRing};
use morita_kit::morita::{
    build_datum, build_semi_context, butterfly_check, elementary_rngs, elementary_rngs_of_datum,
    proposition_tt_check, random_data, random_semi_contexts, strongly_faithful_check,
    unity_analysis, BalancedMap, ElementaryKind,
};
use morita_kit::pairing::AlphaVerdict;

fn corner_m2z2() -> morita_kit::morita::MoritaDatum {
    let t = FinRing::matrix_ring(2, 2).unwrap();
    corner_context(&t, &vec![1, 0, 0, 0]).unwrap()
}

#[test]
fn corner_classification_exposes_both_image_readings() {
    let datum = corner_m2z2();
    let class = datum.m_t().classify(Some(16)).unwrap();
    // The tensor-level connecting map is bijective between groups of order
    // sixteen.
    assert!(class.injective);
    assert!(class.semi_strict);
    assert!(class.strict);
    assert!(class.non_degenerate);
    assert!(class.trace.is_whole());
    // The decomposable value set is strictly smaller: ten values, missing
    // the invertible matrix [[1,1],[1,0]].
    assert_eq!(class.decomposable_values.len(), 10);
    assert!(!class.decomposable_values.contains(&vec![1, 1, 1, 0]));
    assert!(!class.decomposable_equals_trace);
    // Every decomposable value lies in the trace ideal, and the values span
    // it additively.
    let trace_elems = class.trace.element_set();
    for v in &class.decomposable_values {
        assert!(trace_elems.contains(v));
    }
    let span = morita_kit::abelian::subgroup_generated(
        datum.t().group(),
        &class.decomposable_values.iter().cloned().collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(span.order(), class.trace.order());
    // Both pairings certify the alpha condition.
    assert_eq!(class.alpha_left, AlphaVerdict::Certified);
    assert_eq!(class.alpha_right, AlphaVerdict::Certified);

    // The S-side connecting map is an isomorphism.
    let class_s = datum.m_s().classify(Some(16)).unwrap();
    assert!(class_s.strict);
    assert!(class_s.decomposable_equals_trace);
}

#[test]
fn flip_context_over_commutative_ring() {
    // Over a commutative ring, one connecting map plus its flip is always
    // compatible: check with the multiplication pairing on the even ideal of
    // Z4 (the module is Z2 on both sides).
    let z4 = FinRing::cyclic(4).unwrap();
    let ideal = morita_kit::abelian::subgroup_generated(z4.group(), &[vec![2]]).unwrap();
    let left = morita_kit::algebra::ModuleStructure::from_ring_subgroup(
        &z4,
        morita_kit::algebra::Side::Left,
        &ideal,
    )
    .unwrap();
    let right = morita_kit::algebra::ModuleStructure::from_ring_subgroup(
        &z4,
        morita_kit::algebra::Side::Right,
        &ideal,
    )
    .unwrap();
    let bimodule = morita_kit::algebra::Bimodule::new(left, right).unwrap();
    assert_eq!(bimodule.group().moduli(), &[2]);
    // β(x, y) = x·y = 0 for x, y in (2) ⊆ Z4 — the pairing degenerates, and
    // compatibility holds trivially.
    let table = vec![vec![z4.mul(&[2], &[2])]];
    assert_eq!(table[0][0], vec![0]);
    let beta_t = BalancedMap::new(bimodule.clone(), bimodule.clone(), table.clone()).unwrap();
    let beta_s = BalancedMap::new(bimodule.clone(), bimodule, table).unwrap();
    let datum =
        build_datum(build_semi_context(beta_t).unwrap(), build_semi_context(beta_s).unwrap())
            .unwrap();
    assert!(datum.is_context());
}

#[test]
fn flip_context_with_a_nonzero_pairing() {
    // Over Z4 with P = Q = Z2 (the unique faithful torsion module), the only
    // nonzero bilinear form sends (1,1) to 2; with its flip it is a context.
    let z4 = FinRing::cyclic(4).unwrap();
    let g = morita_kit::abelian::FinAbGroup::new(vec![2]).unwrap();
    let left = morita_kit::algebra::ModuleStructure::new(
        z4.clone(),
        g.clone(),
        morita_kit::algebra::Side::Left,
        vec![vec![vec![1]]],
    )
    .unwrap();
    let right = morita_kit::algebra::ModuleStructure::new(
        z4.clone(),
        g,
        morita_kit::algebra::Side::Right,
        vec![vec![vec![1]]],
    )
    .unwrap();
    let bimodule = morita_kit::algebra::Bimodule::validated(left, right).unwrap();
    let table = vec![vec![vec![2]]];
    let beta_t = BalancedMap::new(bimodule.clone(), bimodule.clone(), table.clone()).unwrap();
    let beta_s = BalancedMap::new(bimodule.clone(), bimodule, table).unwrap();
    let datum =
        build_datum(build_semi_context(beta_t).unwrap(), build_semi_context(beta_s).unwrap())
            .unwrap();
    assert!(datum.is_context());
    assert_eq!(datum.m_t().trace().order(), 2);
    // The butterfly identities hold on the one-generator carriers.
    let report = butterfly_check(&datum).unwrap();
    assert!(report.identities_hold());
}

#[test]
fn vacuous_strong_faithfulness_when_the_trace_vanishes() {
    // Coprime torsion forces Q ⊗_T P = 0, so the zero connecting map into S
    // is injective and the trace is zero; at U = T the module Q ⊗_T U is
    // nonzero, the localization map has a kernel, and the implication is
    // vacuous.
    let z6 = FinRing::cyclic(6).unwrap();
    let make = |modulus: i64| {
        let g = morita_kit::abelian::FinAbGroup::new(vec![modulus]).unwrap();
        let left = morita_kit::algebra::ModuleStructure::new(
            z6.clone(),
            g.clone(),
            morita_kit::algebra::Side::Left,
            vec![vec![vec![1]]],
        )
        .unwrap();
        let right = morita_kit::algebra::ModuleStructure::new(
            z6.clone(),
            g,
            morita_kit::algebra::Side::Right,
            vec![vec![vec![1]]],
        )
        .unwrap();
        morita_kit::algebra::Bimodule::validated(left, right).unwrap()
    };
    let p = make(3);
    let q = make(2);
    let zero_t = vec![vec![z6.zero()]];
    let zero_s = vec![vec![z6.zero()]];
    let beta_t = BalancedMap::new(p.clone(), q.clone(), zero_t).unwrap();
    let beta_s = BalancedMap::new(q, p, zero_s).unwrap();
    let datum =
        build_datum(build_semi_context(beta_t).unwrap(), build_semi_context(beta_s).unwrap())
            .unwrap();
    assert!(datum.is_context());
    assert!(datum.m_s().trace().subgroup().is_trivial());
    let u = morita_kit::algebra::ModuleStructure::regular(&z6, morita_kit::algebra::Side::Left);
    let report = strongly_faithful_check(&datum, &u).unwrap();
    assert!(report.diagram_commutes);
    assert!(!report.zeta_injective, "the zero ideal cannot be strongly faithful here");
    assert!(report.implication_holds, "the implication is vacuous");
}

#[test]
fn incompatible_datum_reports_a_witness() {
    let datum = corner_m2z2();
    let broken = morita_kit::morita::random::half_zeroed_datum(&datum).unwrap();
    assert!(!broken.is_context());
    let failure = &broken.compatibility().failures[0];
    assert!(failure.axiom.starts_with("compatibility"));
    assert_eq!(failure.witness.len(), 3);
}

#[test]
fn elementary_rngs_of_the_identity_context_recover_the_ring() {
    let z4 = FinRing::cyclic(4).unwrap();
    let datum = identity_context(&z4).unwrap();
    for rng in elementary_rngs(datum.m_t()).unwrap() {
        assert!(rng.validate().is_valid());
        assert_eq!(rng.rng.order(), 4);
        // The connecting morphism is an isomorphism of rngs onto T.
        if let Some(conn) = rng.morphisms.iter().find(|m| m.role == "connecting") {
            assert!(conn.morphism.hom().is_isomorphism().unwrap());
        }
    }
}

#[test]
fn elementary_rng_of_the_corner_has_a_unity() {
    let datum = corner_m2z2();
    let rngs = elementary_rngs(datum.m_t()).unwrap();
    let pq = rngs.iter().find(|r| r.kind == ElementaryKind::PqViaT).unwrap();
    assert_eq!(pq.rng.order(), 16);
    let report = unity_analysis(pq, datum.m_t()).unwrap();
    assert!(report.unity.is_some());
    assert_eq!(report.respects_unity, Some(true));
    assert_eq!(report.connecting_surjective, Some(true));
    assert_eq!(report.connecting_bijective, Some(true));
    assert!(report.conclusions_verified);
}

#[test]
fn zero_connecting_map_gives_zero_multiplication_and_no_unity() {
    let datum = corner_m2z2();
    let zeroed = morita_kit::morita::random::half_zeroed_datum(&datum).unwrap();
    // The S-side map is zero, so both of its elementary rngs multiply to 0.
    let rngs = elementary_rngs(zeroed.m_s()).unwrap();
    for rng in &rngs {
        for i in 0..rng.rng.rank() {
            for j in 0..rng.rng.rank() {
                assert_eq!(rng.rng.gen_product(i, j), &rng.rng.zero());
            }
        }
        let report = unity_analysis(rng, zeroed.m_s()).unwrap();
        assert!(report.unity.is_none(), "a nonzero rng with zero products has no unity");
        assert!(report.conclusions_verified);
    }
}

#[test]
fn elementary_suite_over_one_hundred_random_semi_contexts() {
    let contexts = random_semi_contexts(0xC0FFEE, 100).unwrap();
    assert_eq!(contexts.len(), 100);
    for (idx, m) in contexts.iter().enumerate() {
        let rngs = elementary_rngs(m).unwrap();
        assert_eq!(rngs.len(), 2);
        for rng in &rngs {
            let report = rng.validate();
            assert!(
                report.is_valid(),
                "instance {idx}: elementary rng {:?} failed: {report}",
                rng.kind
            );
        }
    }
}

#[test]
fn context_criterion_on_one_hundred_random_data() {
    let data = random_data(0xDADA, 140).unwrap();
    let compatible: Vec<_> = data.iter().filter(|d| d.is_context()).collect();
    assert!(compatible.len() >= 100, "corpus must contain 100 compatible data");
    let mut with_faithfulness = 0;
    for (idx, d) in compatible.iter().take(100).enumerate() {
        let report = proposition_tt_check(d).unwrap();
        assert!(report.forward_ok, "instance {idx}: context with disagreeing multiplications");
        assert!(report.pq_tables_agree && report.qp_tables_agree, "instance {idx}");
        if let Some(converse) = report.converse_ok {
            with_faithfulness += 1;
            assert!(converse, "instance {idx}: converse direction failed");
        }
    }
    assert!(
        with_faithfulness >= 10,
        "need at least ten instances with both faithfulness hypotheses, got {with_faithfulness}"
    );
}

#[test]
fn tt_converse_detects_incompatibility_under_faithfulness() {
    // The corner datum is faithful on both sides; zeroing one map makes the
    // multiplications disagree, which the converse direction must detect.
    let datum = corner_m2z2();
    let report = proposition_tt_check(&datum).unwrap();
    assert!(report.p_faithful_over_q && report.q_faithful_over_p);
    assert_eq!(report.converse_ok, Some(true));

    let broken = morita_kit::morita::random::half_zeroed_datum(&datum).unwrap();
    let report = proposition_tt_check(&broken).unwrap();
    assert!(!report.is_context);
    assert!(!report.pq_tables_agree || !report.qp_tables_agree);
    assert!(report.witness.is_some());
    assert_eq!(report.converse_ok, Some(true)); // tables ≠ matches non-context
}

#[test]
fn butterfly_identities_on_corner_identity_and_flip() {
    for datum in [
        corner_m2z2(),
        identity_context(&FinRing::cyclic(4).unwrap()).unwrap(),
        identity_context(&FinRing::matrix_ring(2, 2).unwrap()).unwrap(),
        corner_context(&FinRing::cyclic(6).unwrap(), &vec![3]).unwrap(),
    ] {
        let report = butterfly_check(&datum).unwrap();
        assert!(report.identities_hold(), "butterfly identities must hold on a context");
        assert!(report.all_verified(), "all applicable conclusions must verify");
    }
}

#[test]
fn butterfly_conclusions_on_the_corner() {
    let datum = corner_m2z2();
    let report = butterfly_check(&datum).unwrap();
    // The corner has a bijective alpha at P, so the scalar map must be an
    // isomorphism and the S-side connecting map strict.
    let iso = report
        .conclusions
        .iter()
        .find(|c| c.name == "faithful-and-semi-strict-force-scalar-isomorphism")
        .unwrap();
    assert!(iso.hypothesis_holds);
    assert_eq!(iso.conclusion_holds, Some(true));
}

#[test]
fn butterfly_on_the_random_corpus() {
    let data = random_data(0xBEEF, 60).unwrap();
    for (idx, d) in data.iter().filter(|d| d.is_context()).enumerate() {
        let report = butterfly_check(d).unwrap();
        assert!(report.identities_hold(), "instance {idx}: butterfly identity broke");
        assert!(report.all_verified(), "instance {idx}: a forced conclusion failed");
    }
}

#[test]
fn strongly_faithful_route_on_corner_and_identity() {
    let datum = corner_m2z2();
    let regular = morita_kit::algebra::ModuleStructure::regular(
        datum.t(),
        morita_kit::algebra::Side::Left,
    );
    let report = strongly_faithful_check(&datum, &regular).unwrap();
    assert!(report.diagram_commutes);
    assert!(report.zeta_injective);
    assert!(report.alpha_injective);
    assert!(report.implication_holds);

    let id_datum = identity_context(&FinRing::cyclic(4).unwrap()).unwrap();
    for u in morita_kit::catlab::enumerate_modules(id_datum.t(), morita_kit::algebra::Side::Left, 8)
        .unwrap()
    {
        let report = strongly_faithful_check(&id_datum, &u).unwrap();
        assert!(report.diagram_commutes);
        assert!(report.implication_holds);
    }
}

#[test]
fn alpha_certification_forces_injectivity_across_the_corpus() {
    // Whenever both pairings of a semi-context certify, the connecting map
    // must be injective; evaluated over random + corner + identity corpus.
    let mut data = random_data(0xFACE, 60).unwrap();
    data.push(corner_m2z2());
    data.push(identity_context(&FinRing::cyclic(4).unwrap()).unwrap());
    let mut certified_count = 0;
    for d in &data {
        for m in [d.m_t(), d.m_s()] {
            let class = m.classify(None).unwrap();
            if class.alpha_left.is_certified() && class.alpha_right.is_certified() {
                certified_count += 1;
                assert!(
                    class.injective,
                    "certified pairings with a non-injective connecting map"
                );
            }
        }
    }
    assert!(certified_count >= 20, "corpus exercised too few certified instances");
}

#[test]
fn trace_ideals_are_always_two_sided() {
    for d in random_data(0x7777, 40).unwrap() {
        for m in [d.m_t(), d.m_s()] {
            assert!(morita_kit::algebra::is_two_sided_ideal(m.t(), m.trace()));
        }
    }
}

#[test]
fn decomposable_values_sit_inside_and_span_the_trace() {
    for d in random_data(0x9999, 30).unwrap() {
        for m in [d.m_t(), d.m_s()] {
            if m.t().order() > 64 {
                continue;
            }
            let class = m.classify(None).unwrap();
            let trace_elems = class.trace.element_set();
            for value in &class.decomposable_values {
                assert!(trace_elems.contains(value), "a value escaped the trace ideal");
            }
            let span = morita_kit::abelian::subgroup_generated(
                m.t().group(),
                &class.decomposable_values.iter().cloned().collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(span.order(), class.trace.order(), "values must span the trace");
        }
    }
}

#[test]
fn four_elementary_rngs_of_a_datum() {
    let datum = corner_m2z2();
    let rngs = elementary_rngs_of_datum(&datum).unwrap();
    assert_eq!(rngs.len(), 4);
    let kinds: Vec<ElementaryKind> = rngs.iter().map(|r| r.kind).collect();
    for kind in [
        ElementaryKind::PqViaT,
        ElementaryKind::QpViaT,
        ElementaryKind::QpViaS,
        ElementaryKind::PqViaS,
    ] {
        assert!(kinds.contains(&kind));
    }
}
