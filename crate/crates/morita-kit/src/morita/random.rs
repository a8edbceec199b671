//! Seeded generation of valid Morita data for property suites.
//!
//! Raw random structure tables almost never satisfy associativity, so
//! contexts are sampled from structured families: corners of pool rings at
//! random idempotents, multiplication pairings on ideals of commutative pool
//! rings, and zeroed variants. Everything is driven by an explicit splitmix
//! state, so a seed pins the corpus exactly.

use crate::abelian::subgroup_generated;
use crate::algebra::corner::corner_context;
use crate::algebra::module::{Bimodule, ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::error::Result;
use crate::morita::{build_datum, build_semi_context, BalancedMap, MoritaDatum, MoritaSemiContext};

/// Minimal splitmix64 state; deterministic across platforms and versions.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

/// The base rings sampled by the generator; every order is at most 16.
pub fn ring_pool() -> Vec<FinRing> {
    let z2 = FinRing::cyclic(2).expect("pool ring");
    let z3 = FinRing::cyclic(3).expect("pool ring");
    let z4 = FinRing::cyclic(4).expect("pool ring");
    vec![
        z2.clone(),
        z3.clone(),
        z4.clone(),
        FinRing::cyclic(6).expect("pool ring"),
        FinRing::cyclic(8).expect("pool ring"),
        FinRing::cyclic(9).expect("pool ring"),
        FinRing::cyclic(12).expect("pool ring"),
        FinRing::cyclic(16).expect("pool ring"),
        FinRing::product(&z2, &z2).expect("pool ring"),
        FinRing::product(&z2, &z4).expect("pool ring"),
        FinRing::product(&z2, &z3).expect("pool ring"),
        FinRing::product(&z3, &z3).expect("pool ring"),
        FinRing::matrix_ring(2, 2).expect("pool ring"),
        FinRing::upper_triangular(2).expect("pool ring"),
        FinRing::dual_numbers(2).expect("pool ring"),
        FinRing::dual_numbers(4).expect("pool ring"),
    ]
}

/// `count` seeded random Morita data (all valid; most but not all are
/// contexts: zeroed variants keep compatibility, one-sided zeroing breaks
/// it and is included deliberately).
pub fn random_data(seed: u64, count: usize) -> Result<Vec<MoritaDatum>> {
    let pool = ring_pool();
    let mut rng = Rng::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let datum = match rng.below(5) {
            // Corner at a random idempotent (includes 0 and 1).
            0 | 1 => {
                let ring = rng.pick(&pool);
                let idems = ring.idempotents();
                let e = rng.pick(&idems).clone();
                corner_context(ring, &e)?
            }
            // Identity context of a random pool ring.
            2 => {
                let ring = rng.pick(&pool);
                crate::algebra::corner::identity_context(ring)?
            }
            // Multiplication pairing on an ideal of a commutative ring.
            3 => {
                let commutative: Vec<&FinRing> =
                    pool.iter().filter(|r| r.is_commutative()).collect();
                let ring = *rng.pick(&commutative);
                ideal_pairing_datum(ring, &mut rng)?
            }
            // Zero connecting maps on a corner's modules.
            _ => {
                let ring = rng.pick(&pool);
                let idems = ring.idempotents();
                let e = rng.pick(&idems).clone();
                zeroed_datum(&corner_context(ring, &e)?)?
            }
        };
        out.push(datum);
    }
    Ok(out)
}

/// `count` seeded random semi-contexts (the T-sides of [`random_data`]).
pub fn random_semi_contexts(seed: u64, count: usize) -> Result<Vec<MoritaSemiContext>> {
    Ok(random_data(seed, count)?.iter().map(|d| d.m_t().clone()).collect())
}

/// For a commutative ring R and an ideal J: the datum (R, R, J, J, mult,
/// mult), compatible by associativity and commutativity.
fn ideal_pairing_datum(ring: &FinRing, rng: &mut Rng) -> Result<MoritaDatum> {
    // Sample an ideal as the span of one or two random elements.
    let order = ring.order() as u64;
    let mut gens = Vec::new();
    for _ in 0..=rng.below(2) {
        let idx = rng.below(order) as usize;
        let elem = ring.group().elements().nth(idx).expect("index below order");
        gens.push(elem);
    }
    let span = subgroup_generated(ring.group(), &gens)?;
    // The span of arbitrary elements is automatically an ideal over a
    // commutative ring generated in degree one? Not in general: close it.
    let mut closure = span;
    loop {
        let mut extra = Vec::new();
        for j in 0..closure.subgroup().rank() {
            let x = closure.embedding().apply(&closure.subgroup().generator(j));
            for u in 0..ring.rank() {
                let moved = ring.mul(&ring.group().generator(u), &x);
                if !closure.contains_element(&moved) {
                    extra.push(moved);
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        let mut all: Vec<_> = (0..closure.subgroup().rank())
            .map(|j| closure.embedding().apply(&closure.subgroup().generator(j)))
            .collect();
        all.extend(extra);
        closure = subgroup_generated(ring.group(), &all)?;
    }
    let ideal = closure;

    let module_left = ModuleStructure::from_ring_subgroup(ring, Side::Left, &ideal)?;
    let module_right = ModuleStructure::from_ring_subgroup(ring, Side::Right, &ideal)?;
    let bimodule = Bimodule::new(module_left, module_right)?;
    let k = ideal.subgroup().rank();
    let table: Vec<Vec<crate::abelian::Elem>> = (0..k)
        .map(|i| {
            let xi = ideal.embedding().apply(&ideal.subgroup().generator(i));
            (0..k)
                .map(|j| {
                    let xj = ideal.embedding().apply(&ideal.subgroup().generator(j));
                    ring.mul(&xi, &xj)
                })
                .collect()
        })
        .collect();
    let beta_t = BalancedMap::new(bimodule.clone(), bimodule.clone(), table.clone())?;
    let beta_s = BalancedMap::new(bimodule.clone(), bimodule, table)?;
    build_datum(build_semi_context(beta_t)?, build_semi_context(beta_s)?)
}

/// Replace both connecting maps of a datum by zero (still compatible).
fn zeroed_datum(d: &MoritaDatum) -> Result<MoritaDatum> {
    let zero_t = vec![
        vec![d.t().zero(); d.q().group().rank()];
        d.p().group().rank()
    ];
    let zero_s = vec![
        vec![d.s().zero(); d.p().group().rank()];
        d.q().group().rank()
    ];
    let beta_t = BalancedMap::new(d.p().clone(), d.q().clone(), zero_t)?;
    let beta_s = BalancedMap::new(d.q().clone(), d.p().clone(), zero_s)?;
    build_datum(build_semi_context(beta_t)?, build_semi_context(beta_s)?)
}

/// A datum whose S-side map is zeroed while the T-side stays; incompatible
/// whenever the original pairing is nonzero on acting elements. Used by
/// tests that need an explicit non-context.
pub fn half_zeroed_datum(d: &MoritaDatum) -> Result<MoritaDatum> {
    let zero_s = vec![
        vec![d.s().zero(); d.p().group().rank()];
        d.q().group().rank()
    ];
    let beta_s = BalancedMap::new(d.q().clone(), d.p().clone(), zero_s)?;
    build_datum(d.m_t().clone(), build_semi_context(beta_s)?)
}
