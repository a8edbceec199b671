//! Constructors for the canonical maps of the theory: the alpha map of a
//! pairing, the evaluation bracket, the adjunction unit and counit, the
//! localization maps of an ideal, and the adjuncts of a connecting map.
//! Each constructor returns the map together with the tensor/Hom scaffolding
//! it was built on, so callers can compose and compare routes.

use crate::abelian::{AbHom, Elem, IntMat, SubgroupEmbedding};
use crate::algebra::baer::is_two_sided_ideal;
use crate::algebra::module::{Bimodule, ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result};
use crate::morita::MoritaSemiContext;
use crate::pairing::DualPairing;
use crate::tensor_hom::hom::{hom_module, HomModule};
use crate::tensor_hom::tensor::{tensor_over, TensorProduct};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapName {
    Alpha,
    Kappa,
    Chi,
    Bracket,
    Omega,
    Eta,
    Zeta,
    Xi,
    Rho,
    Lambda,
}

/// A named canonical homomorphism.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub name: MapName,
    pub hom: AbHom,
}

impl CanonicalMap {
    pub fn new(name: MapName, hom: AbHom) -> Self {
        Self { name, hom }
    }
}

/// The alpha map of a pairing at a module, with its scaffolding.
#[derive(Clone, Debug)]
pub struct AlphaData {
    pub map: CanonicalMap,
    /// `U ⊗ W` (left pairing) or `W ⊗ U` (right pairing).
    pub tensor: TensorProduct,
    /// `Hom(V, U)` on the appropriate side.
    pub homs: HomModule,
}

/// `α_U : U ⊗_T W → Hom(V, U)`, `u ⊗ w ↦ [v ↦ u·⟨v,w⟩]` for a left pairing;
/// the mirrored `W ⊗_T U → Hom(V, U)`, `w ⊗ u ↦ [v ↦ ⟨v,w⟩·u]` for a right
/// pairing.
pub fn alpha_map(p: &DualPairing, u: &ModuleStructure) -> Result<AlphaData> {
    let ring = p.ring();
    if u.ring() != ring {
        return Err(Error::Shape("alpha module over the wrong ring".into()));
    }
    let expected = match p.side() {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    if u.side() != expected {
        return Err(Error::Shape("alpha module on the wrong side for this pairing".into()));
    }
    let homs = hom_module(ring, p.v(), u)?;
    let kv = p.v().group().rank();
    let ku = u.group().rank();
    let value_matrix = |u_gen: usize, w_gen: usize| -> IntMat {
        IntMat::from_fn(ku, kv, |row, a| {
            i128::from(u.act(&p.table()[a][w_gen], &u.group().generator(u_gen))[row])
        })
    };
    let (tensor, map_hom) = match p.side() {
        Side::Left => {
            let tensor = tensor_over(ring, u, p.w())?;
            let mut grid: Vec<Vec<Option<Elem>>> = vec![vec![None; p.w().group().rank()]; ku];
            for (i, row) in grid.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = Some(homs.to_element_matrix(&value_matrix(i, j))?);
                }
            }
            let hom = tensor
                .map_to(homs.group(), |i, j| grid[i][j].clone().expect("grid is total"))?;
            (tensor, hom)
        }
        Side::Right => {
            let tensor = tensor_over(ring, p.w(), u)?;
            let mut grid: Vec<Vec<Option<Elem>>> = vec![vec![None; ku]; p.w().group().rank()];
            for (j, row) in grid.iter_mut().enumerate() {
                for (i, slot) in row.iter_mut().enumerate() {
                    *slot = Some(homs.to_element_matrix(&value_matrix(i, j))?);
                }
            }
            let hom = tensor
                .map_to(homs.group(), |j, i| grid[j][i].clone().expect("grid is total"))?;
            (tensor, hom)
        }
    };
    Ok(AlphaData { map: CanonicalMap::new(MapName::Alpha, map_hom), tensor, homs })
}

/// The evaluation bracket of a module, with its scaffolding.
#[derive(Clone, Debug)]
pub struct BracketData {
    pub map: CanonicalMap,
    /// `Hom(W,T) ⊗ W` (left) or `W ⊗ Hom(W,T)` (right).
    pub tensor: TensorProduct,
    /// The dual `Hom(W, T)`.
    pub dual: HomModule,
    /// `End(W)` as a Hom-module.
    pub endo: HomModule,
}

/// `[,]_W : Hom(W,T) ⊗_T W → End(W)`, `f ⊗ w ↦ [w̃ ↦ f(w̃)⋆w]` (the ring
/// value acting on `w` on the module's side).
pub fn bracket_map(w: &ModuleStructure) -> Result<BracketData> {
    let ring = w.ring().clone();
    let regular = ModuleStructure::regular(&ring, w.side());
    let dual = hom_module(&ring, w, &regular)?;
    let endo = hom_module(&ring, w, w)?;
    let kw = w.group().rank();

    let endo_matrix = |f: &AbHom, w_gen: usize| -> IntMat {
        IntMat::from_fn(kw, kw, |row, l| {
            let t_val = f.apply(&w.group().generator(l));
            i128::from(w.act(&t_val, &w.group().generator(w_gen))[row])
        })
    };

    match w.side() {
        Side::Left => {
            // Right T-structure on the dual: (f·t)(x) = f(x)·t.
            let dual_module = dual.induced(&ring, Side::Right, |u, f| {
                ring.right_mult_matrix(&ring.group().generator(u)).mul(f.matrix())
            })?;
            let tensor = tensor_over(&ring, &dual_module, w)?;
            let mut grid: Vec<Vec<Option<Elem>>> = vec![vec![None; kw]; dual.group().rank()];
            for (a, row) in grid.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = Some(endo.to_element_matrix(&endo_matrix(&dual.basis()[a], j))?);
                }
            }
            let hom =
                tensor.map_to(endo.group(), |a, j| grid[a][j].clone().expect("grid is total"))?;
            Ok(BracketData { map: CanonicalMap::new(MapName::Bracket, hom), tensor, dual, endo })
        }
        Side::Right => {
            // Left T-structure on the dual: (t·f)(x) = t·f(x).
            let dual_module = dual.induced(&ring, Side::Left, |u, f| {
                ring.left_mult_matrix(&ring.group().generator(u)).mul(f.matrix())
            })?;
            let tensor = tensor_over(&ring, w, &dual_module)?;
            let mut grid: Vec<Vec<Option<Elem>>> = vec![vec![None; dual.group().rank()]; kw];
            for (i, row) in grid.iter_mut().enumerate() {
                for (a, slot) in row.iter_mut().enumerate() {
                    *slot = Some(endo.to_element_matrix(&endo_matrix(&dual.basis()[a], i))?);
                }
            }
            let hom =
                tensor.map_to(endo.group(), |i, a| grid[i][a].clone().expect("grid is total"))?;
            Ok(BracketData { map: CanonicalMap::new(MapName::Bracket, hom), tensor, dual, endo })
        }
    }
}

/// The counit of the tensor–Hom adjunction at one module, with its
/// scaffolding.
#[derive(Clone, Debug)]
pub struct OmegaData {
    /// `ω : P ⊗_S Hom(P, K) → K`, `p ⊗ f ↦ f(p)`.
    pub map: CanonicalMap,
    pub hom_pk: HomModule,
    /// `Hom(P, K)` as a left S-module via `(s·f)(x) = f(x·s)`.
    pub hom_pk_module: ModuleStructure,
    pub tensor: TensorProduct,
}

/// For a (T,S)-bimodule `p` and a left T-module `k`: the counit at `k`.
pub fn omega_map(p: &Bimodule, k: &ModuleStructure) -> Result<OmegaData> {
    let t = p.left_ring().clone();
    let s = p.right_ring().clone();
    if k.side() != Side::Left || k.ring() != &t {
        return Err(Error::Shape("counit argument must be a left module over the outer ring".into()));
    }
    let hom_pk = hom_module(&t, p.left(), k)?;
    let hom_pk_module = hom_pk.induced(&s, Side::Left, |u, f| {
        f.matrix().mul(&p.right().action_matrix(&s.group().generator(u)))
    })?;
    let tensor = tensor_over(&s, p.right(), &hom_pk_module)?;
    let grid: Vec<Vec<Elem>> = (0..p.group().rank())
        .map(|i| {
            (0..hom_pk.group().rank())
                .map(|a| hom_pk.basis()[a].apply(&p.group().generator(i)))
                .collect()
        })
        .collect();
    let omega_hom = tensor.map_to(k.group(), |i, a| grid[i][a].clone())?;
    Ok(OmegaData {
        map: CanonicalMap::new(MapName::Omega, omega_hom),
        hom_pk,
        hom_pk_module,
        tensor,
    })
}

/// The unit of the tensor–Hom adjunction at one module, with its
/// scaffolding.
#[derive(Clone, Debug)]
pub struct EtaData {
    /// `η : L → Hom(P, P ⊗_S L)`, `l ↦ [p ↦ p ⊗ l]`.
    pub map: CanonicalMap,
    pub tensor: TensorProduct,
    /// `P ⊗_S L` as a left T-module.
    pub tensor_module: ModuleStructure,
    pub homs: HomModule,
}

/// For a (T,S)-bimodule `p` and a left S-module `l`: the unit at `l`.
pub fn eta_map(p: &Bimodule, l: &ModuleStructure) -> Result<EtaData> {
    let t = p.left_ring().clone();
    let s = p.right_ring().clone();
    if l.side() != Side::Left || l.ring() != &s {
        return Err(Error::Shape("unit argument must be a left module over the inner ring".into()));
    }
    let tensor = tensor_over(&s, p.right(), l)?;
    let tensor_module = tensor.induced_on_left_factor(&t, Side::Left, |u, i| {
        p.act_left(&t.group().generator(u), &p.group().generator(i))
    })?;
    let homs = hom_module(&t, p.left(), &tensor_module)?;
    let eta_cols: Result<Vec<Elem>> = (0..l.group().rank())
        .map(|b| {
            let m = IntMat::from_fn(tensor.group().rank(), p.group().rank(), |row, i| {
                i128::from(tensor.pure(&p.group().generator(i), &l.group().generator(b))[row])
            });
            homs.to_element_matrix(&m)
        })
        .collect();
    let eta_hom = AbHom::from_columns(l.group().clone(), homs.group().clone(), &eta_cols?)?;
    Ok(EtaData { map: CanonicalMap::new(MapName::Eta, eta_hom), tensor, tensor_module, homs })
}

/// Unit and counit together, after validating the bimodule.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub omega: OmegaData,
    pub eta: EtaData,
}

/// For a (T,S)-bimodule `p`, a left T-module `k` and a left S-module `l`:
/// the counit at `k` and the unit at `l`. The bimodule axioms are validated
/// here; invalid inputs are errors, not maps.
pub fn adjunction_maps(
    p: &Bimodule,
    k: &ModuleStructure,
    l: &ModuleStructure,
) -> Result<AdjunctionData> {
    p.validate().into_result()?;
    Ok(AdjunctionData { omega: omega_map(p, k)?, eta: eta_map(p, l)? })
}

/// Localization maps of a two-sided ideal at a left module.
#[derive(Clone, Debug)]
pub struct LocalizationData {
    /// `ζ : U → Hom(I, U)`, `u ↦ [t ↦ t·u]`.
    pub zeta: CanonicalMap,
    /// `ξ : I ⊗_T U → U`, `t ⊗ u ↦ t·u`.
    pub xi: CanonicalMap,
    pub ideal_left: ModuleStructure,
    pub ideal_right: ModuleStructure,
    pub hom_iu: HomModule,
    pub tensor_iu: TensorProduct,
}

pub fn localization_maps(
    ring: &FinRing,
    ideal: &SubgroupEmbedding,
    u: &ModuleStructure,
) -> Result<LocalizationData> {
    if ideal.ambient() != ring.group() {
        return Err(Error::Shape("ideal does not live in the ring".into()));
    }
    if !is_two_sided_ideal(ring, ideal) {
        return Err(Error::Precondition("subgroup is not a two-sided ideal".into()));
    }
    if u.side() != Side::Left || u.ring() != ring {
        return Err(Error::Shape("localization argument must be a left module".into()));
    }
    let ideal_left = ModuleStructure::from_ring_subgroup(ring, Side::Left, ideal)?;
    let ideal_right = ModuleStructure::from_ring_subgroup(ring, Side::Right, ideal)?;

    let hom_iu = hom_module(ring, &ideal_left, u)?;
    let ki = ideal.subgroup().rank();
    let ku = u.group().rank();
    let zeta_cols: Result<Vec<Elem>> = (0..ku)
        .map(|b| {
            let m = IntMat::from_fn(ku, ki, |row, a| {
                let t_elem = ideal.embedding().apply(&ideal.subgroup().generator(a));
                i128::from(u.act(&t_elem, &u.group().generator(b))[row])
            });
            hom_iu.to_element_matrix(&m)
        })
        .collect();
    let zeta_hom = AbHom::from_columns(u.group().clone(), hom_iu.group().clone(), &zeta_cols?)?;

    let tensor_iu = tensor_over(ring, &ideal_right, u)?;
    let xi_hom = tensor_iu.map_to(u.group(), |a, j| {
        let t_elem = ideal.embedding().apply(&ideal.subgroup().generator(a));
        u.act(&t_elem, &u.group().generator(j))
    })?;

    Ok(LocalizationData {
        zeta: CanonicalMap::new(MapName::Zeta, zeta_hom),
        xi: CanonicalMap::new(MapName::Xi, xi_hom),
        ideal_left,
        ideal_right,
        hom_iu,
        tensor_iu,
    })
}

/// The two adjuncts of a connecting map: `κ : Q → Hom(P, T)` (left pairing)
/// and `κ : P → Hom(Q, T)` (right pairing). Injectivity of both is
/// non-degeneracy.
pub struct PairingAdjuncts {
    pub into_dual_p: (HomModule, CanonicalMap),
    pub into_dual_q: (HomModule, CanonicalMap),
}

pub fn pairing_maps(m: &MoritaSemiContext) -> Result<PairingAdjuncts> {
    let (homs_p, kappa_pl) = m.pairing_left()?.kappa()?;
    let (homs_q, kappa_qr) = m.pairing_right()?.kappa()?;
    Ok(PairingAdjuncts {
        into_dual_p: (homs_p, CanonicalMap::new(MapName::Kappa, kappa_pl)),
        into_dual_q: (homs_q, CanonicalMap::new(MapName::Kappa, kappa_qr)),
    })
}
