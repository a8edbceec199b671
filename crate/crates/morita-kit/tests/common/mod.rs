//! Brute-force reference oracles shared by the integration suites. These
//! deliberately avoid the library's linear-algebra paths: they enumerate
//! elements, subsets and maps directly, so agreement is meaningful.

#![allow(dead_code)]

use std::collections::BTreeSet;

use morita_kit::abelian::{AbHom, Elem, FinAbGroup};
use morita_kit::algebra::{ModuleStructure, Side};
use morita_kit::morita::Rng;
use morita_kit::tensor_hom::hom_module;

/// Kernel, image and cokernel orders of a hom by exhaustive element
/// enumeration.
pub fn subquotient_orders_by_enumeration(h: &AbHom) -> (u128, u128, u128) {
    let mut kernel = 0u128;
    let mut image: BTreeSet<Elem> = BTreeSet::new();
    for x in h.source().elements() {
        let y = h.apply(&x);
        if y.iter().all(|&c| c == 0) {
            kernel += 1;
        }
        image.insert(y);
    }
    let image_order = image.len() as u128;
    let coker = h.target().order() / image_order;
    (kernel, image_order, coker)
}

/// All canonical-form groups of order at most `max`, ordered. Enumerates
/// divisibility chains `d_1 | d_2 | …` directly.
pub fn all_canonical_groups_up_to(max: u128) -> Vec<FinAbGroup> {
    fn extend(moduli: &mut Vec<i64>, product: u128, max: u128, out: &mut Vec<FinAbGroup>) {
        let last = *moduli.last().unwrap_or(&1);
        let mut d = last.max(2);
        while product.saturating_mul(d as u128) <= max {
            if last < 2 || d % last == 0 {
                moduli.push(d);
                out.push(FinAbGroup::new(moduli.clone()).unwrap());
                extend(moduli, product * d as u128, max, out);
                moduli.pop();
            }
            d += 1;
        }
    }
    let mut out = vec![FinAbGroup::trivial()];
    extend(&mut Vec::new(), 1, max, &mut out);
    out.sort_by_key(|g| (g.order(), g.moduli().to_vec()));
    out
}

/// A seeded random well-defined hom between two groups: each entry is a
/// random multiple of the minimal admissible step.
pub fn random_hom(rng: &mut Rng, source: &FinAbGroup, target: &FinAbGroup) -> AbHom {
    let cols: Vec<Elem> = (0..source.rank())
        .map(|j| {
            let dj = source.moduli()[j];
            (0..target.rank())
                .map(|i| {
                    let ei = target.moduli()[i];
                    // entry · dj ≡ 0 (mod ei) ⟺ entry is a multiple of
                    // ei / gcd(ei, dj).
                    let step = ei / morita_kit::abelian::gcd(ei, dj);
                    let k = rng.below((ei / step) as u64) as i64;
                    k * step
                })
                .collect()
        })
        .collect();
    AbHom::from_columns(source.clone(), target.clone(), &cols).expect("entries chosen admissible")
}

/// Number of subgroups of an elementary abelian p-group of rank n, by the
/// Gaussian binomial formula (an independent counting oracle).
pub fn elementary_abelian_subgroup_count(p: u128, n: u32) -> u128 {
    let mut total = 0u128;
    for k in 0..=n {
        // Gaussian binomial [n choose k]_p.
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= p.pow(n - i) - 1;
            den *= p.pow(k - i) - 1;
        }
        total += num / den;
    }
    total
}

/// Whether some surjection `U^n → K` exists for n at most `max_exp`, by
/// exhaustive enumeration of tuples of U-linear maps. The image of a tuple
/// is the subgroup spanned by all component images.
pub fn surjection_exists_bounded(
    u: &ModuleStructure,
    k: &ModuleStructure,
    max_exp: usize,
) -> bool {
    if k.group().is_trivial() {
        return true;
    }
    let homs = hom_module(u.ring(), u, k).expect("hom system in range");
    let maps: Vec<AbHom> = homs
        .group()
        .elements()
        .map(|h| homs.to_hom(&h).expect("coordinates decode"))
        .collect();
    let image_gens: Vec<Vec<Elem>> = maps
        .iter()
        .map(|f| (0..u.group().rank()).map(|j| f.apply(&u.group().generator(j))).collect())
        .collect();
    // A tuple of maps surjects iff the union of their image generators spans.
    let mut chosen: Vec<usize> = Vec::new();
    fn search(
        depth: usize,
        max_exp: usize,
        maps: usize,
        chosen: &mut Vec<usize>,
        image_gens: &[Vec<Elem>],
        k: &ModuleStructure,
    ) -> bool {
        if depth > 0 {
            let gens: Vec<Elem> =
                chosen.iter().flat_map(|&i| image_gens[i].iter().cloned()).collect();
            let span = morita_kit::abelian::subgroup_generated(k.group(), &gens)
                .expect("span in range");
            if span.order() == k.group().order() {
                return true;
            }
        }
        if depth == max_exp {
            return false;
        }
        let start = chosen.last().copied().unwrap_or(0);
        for i in start..maps {
            chosen.push(i);
            if search(depth + 1, max_exp, maps, chosen, image_gens, k) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    search(0, max_exp, maps.len(), &mut chosen, &image_gens, k)
}

/// Whether a module is a direct summand of a free module of rank at most
/// `max_rank`: search a surjection from a power of the regular module and a
/// splitting for it.
pub fn summand_of_free_bounded(m: &ModuleStructure, max_rank: usize) -> bool {
    if m.group().is_trivial() {
        return true;
    }
    let ring = m.ring();
    for n in 1..=max_rank {
        let free = ModuleStructure::regular(ring, m.side()).power(n).expect("power in range");
        let surjections = hom_module(ring, &free, m).expect("hom system in range");
        let sections = hom_module(ring, m, &free).expect("hom system in range");
        let section_maps: Vec<AbHom> = sections
            .group()
            .elements()
            .map(|h| sections.to_hom(&h).expect("coordinates decode"))
            .collect();
        for hp in surjections.group().elements() {
            let pi = surjections.to_hom(&hp).expect("coordinates decode");
            if !pi.is_surjective().expect("finite check") {
                continue;
            }
            for iota in &section_maps {
                let round = pi.compose(iota).expect("composable");
                if round.matrix().is_identity() {
                    return true;
                }
            }
        }
    }
    false
}

/// Tensor-product order by explicit coset enumeration: the pair group modulo
/// the closure of the balancing relators, computed with nothing but group
/// addition.
pub fn tensor_order_by_cosets(
    ring: &morita_kit::algebra::FinRing,
    m: &ModuleStructure,
    n: &ModuleStructure,
) -> u128 {
    assert_eq!(m.side(), Side::Right);
    assert_eq!(n.side(), Side::Left);
    // The pair group of the plain Z-tensor.
    let mut pair_moduli = Vec::new();
    let mut index = Vec::new();
    for i in 0..m.group().rank() {
        for j in 0..n.group().rank() {
            let g = morita_kit::abelian::gcd(m.group().moduli()[i], n.group().moduli()[j]);
            if g > 1 {
                index.push(Some(pair_moduli.len()));
                pair_moduli.push(g);
            } else {
                index.push(None);
            }
        }
    }
    let pair_group = FinAbGroup::new(pair_moduli).unwrap();
    let kn = n.group().rank();
    let embed = |me: &Elem, ne: &Elem| -> Elem {
        let mut wide = vec![0i128; pair_group.rank()];
        for (i, &a) in me.iter().enumerate() {
            for (j, &b) in ne.iter().enumerate() {
                if let Some(c) = index[i * kn + j] {
                    wide[c] += i128::from(a) * i128::from(b);
                }
            }
        }
        pair_group.reduce(&wide)
    };
    // Relators: (m·t) ⊗ n − m ⊗ (t·n) over generator triples.
    let mut relators = Vec::new();
    for i in 0..m.group().rank() {
        for u in 0..ring.rank() {
            let mt = m.act(&ring.group().generator(u), &m.group().generator(i));
            for j in 0..kn {
                let tn = n.act(&ring.group().generator(u), &n.group().generator(j));
                let lhs = embed(&mt, &n.group().generator(j));
                let rhs = embed(&m.group().generator(i), &tn);
                relators.push(pair_group.sub(&lhs, &rhs));
            }
        }
    }
    // Closure of the relator subgroup by repeated addition.
    let mut subgroup: BTreeSet<Elem> = BTreeSet::new();
    subgroup.insert(pair_group.zero());
    let mut frontier: Vec<Elem> = vec![pair_group.zero()];
    while let Some(x) = frontier.pop() {
        for r in &relators {
            let y = pair_group.add(&x, r);
            if subgroup.insert(y.clone()) {
                frontier.push(y);
            }
            let z = pair_group.sub(&x, r);
            if subgroup.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    pair_group.order() / subgroup.len() as u128
}
