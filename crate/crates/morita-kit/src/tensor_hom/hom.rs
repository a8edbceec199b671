//! Hom-modules: the group of module-linear maps between two one-sided
//! modules, solved as the kernel of a linear congruence system.
//!
//! A candidate map is its value matrix; well-definedness and linearity over
//! each (ring generator, source generator) pair are homogeneous congruences
//! in the matrix entries, so the solution set is the kernel of one explicit
//! homomorphism between coordinate groups. Its canonical form supplies both
//! the Hom-group and a deterministic basis of actual maps.

use crate::abelian::{AbHom, Elem, FinAbGroup, IntMat, SubgroupEmbedding};
use crate::algebra::module::{ModuleStructure, Side};
use crate::algebra::ring::FinRing;
use crate::caps::caps;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HomModule {
    source: ModuleStructure,
    target: ModuleStructure,
    /// Hom group in canonical form.
    group: FinAbGroup,
    /// One linear map per canonical generator.
    basis: Vec<AbHom>,
    /// Solution subgroup inside the coordinate group (one coordinate per
    /// value-matrix entry), used to convert maps back to coordinates.
    solutions: SubgroupEmbedding,
}

/// The group of `ring`-linear maps `source → target` (same side).
pub fn hom_module(
    ring: &FinRing,
    source: &ModuleStructure,
    target: &ModuleStructure,
) -> Result<HomModule> {
    if source.side() != target.side() {
        return Err(Error::Shape("hom between modules on different sides".into()));
    }
    if source.ring() != ring || target.ring() != ring {
        return Err(Error::Shape("hom between modules over different rings".into()));
    }
    let k_src = source.group().rank();
    let k_tgt = target.group().rank();
    let k_ring = ring.rank();
    let unknowns = k_src * k_tgt;
    if unknowns > caps().max_pair_count {
        return Err(Error::Capacity(format!(
            "hom system with {unknowns} unknowns exceeds the pair cap"
        )));
    }

    // Unknown layout: entry (i, j) of the value matrix (target row i, source
    // column j) lives at coordinate i·k_src + j, modulo the target modulus
    // of row i. Well-definedness of that convention: shifting an unknown by
    // its modulus never changes any constraint row modulo its row modulus.
    let coord = |i: usize, j: usize| i * k_src + j;
    let mut coord_moduli = vec![0i64; unknowns];
    for i in 0..k_tgt {
        for j in 0..k_src {
            coord_moduli[coord(i, j)] = target.group().moduli()[i];
        }
    }
    let coord_group = FinAbGroup::from_raw_moduli(&coord_moduli)?;
    // from_raw_moduli cannot drop coordinates here: target moduli are ≥ 2.

    let mut rows: Vec<Vec<i128>> = Vec::new();
    let mut row_moduli: Vec<i64> = Vec::new();

    // Well-definedness: d_j · x_{ij} ≡ 0 (mod e_i).
    for i in 0..k_tgt {
        for j in 0..k_src {
            let mut row = vec![0i128; unknowns];
            row[coord(i, j)] = i128::from(source.group().moduli()[j]);
            rows.push(row);
            row_moduli.push(target.group().moduli()[i]);
        }
    }

    // Linearity on generators: f(g_u ⋆ m_j) = g_u ⋆ f(m_j), one row per
    // target coordinate b.
    for u in 0..k_ring {
        let g = ring.group().generator(u);
        let acted_target: Vec<Elem> =
            (0..k_tgt).map(|i| target.act(&g, &target.group().generator(i))).collect();
        for j in 0..k_src {
            let moved = source.act(&g, &source.group().generator(j));
            for b in 0..k_tgt {
                let mut row = vec![0i128; unknowns];
                for (a, &c) in moved.iter().enumerate() {
                    row[coord(b, a)] += i128::from(c);
                }
                for (i, acted) in acted_target.iter().enumerate() {
                    row[coord(i, j)] -= i128::from(acted[b]);
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                    row_moduli.push(target.group().moduli()[b]);
                }
            }
        }
    }

    let row_group = FinAbGroup::from_raw_moduli(&row_moduli)?;
    let constraint_matrix = IntMat::from_fn(rows.len(), unknowns, |r, c| rows[r][c]);
    let constraints = AbHom::new(coord_group.clone(), row_group, constraint_matrix)?;
    let solutions = constraints.kernel()?;

    let group = solutions.subgroup().clone();
    let mut basis = Vec::with_capacity(group.rank());
    for a in 0..group.rank() {
        let flat = solutions.embedding().apply(&group.generator(a));
        let matrix = IntMat::from_fn(k_tgt, k_src, |i, j| i128::from(flat[coord(i, j)]));
        basis.push(AbHom::new(source.group().clone(), target.group().clone(), matrix)?);
    }

    Ok(HomModule { source: source.clone(), target: target.clone(), group, basis, solutions })
}

impl HomModule {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn basis(&self) -> &[AbHom] {
        &self.basis
    }

    pub fn source(&self) -> &ModuleStructure {
        &self.source
    }

    pub fn target(&self) -> &ModuleStructure {
        &self.target
    }

    /// The linear map corresponding to a Hom-group element.
    pub fn to_hom(&self, h: &[i64]) -> Result<AbHom> {
        let k_src = self.source.group().rank();
        let k_tgt = self.target.group().rank();
        let mut acc = IntMat::zeros(k_tgt, k_src);
        for (a, &c) in h.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let m = self.basis[a].matrix();
            for i in 0..k_tgt {
                for j in 0..k_src {
                    acc.set(i, j, acc.get(i, j) + i128::from(c) * m.get(i, j));
                }
            }
        }
        AbHom::new(self.source.group().clone(), self.target.group().clone(), acc)
    }

    /// Coordinates of a linear map in the Hom group. Fails with
    /// [`Error::NoPreimage`] when the map is not module-linear.
    pub fn to_element(&self, f: &AbHom) -> Result<Elem> {
        self.to_element_matrix(f.matrix())
    }

    /// Same, from a raw value matrix.
    pub fn to_element_matrix(&self, m: &IntMat) -> Result<Elem> {
        let k_src = self.source.group().rank();
        let k_tgt = self.target.group().rank();
        if m.rows() != k_tgt || m.cols() != k_src {
            return Err(Error::Shape("value matrix has the wrong shape for this Hom".into()));
        }
        let mut flat = vec![0i128; k_src * k_tgt];
        for i in 0..k_tgt {
            for j in 0..k_src {
                flat[i * k_src + j] = m.get(i, j);
            }
        }
        let coord_elem = self.solutions.ambient().reduce(&flat);
        self.solutions
            .preimage(&coord_elem)
            .ok_or_else(|| Error::NoPreimage("matrix is not a module-linear map".into()))
    }

    /// Whether a raw additive hom is module-linear.
    pub fn contains(&self, f: &AbHom) -> bool {
        self.to_element(f).is_ok()
    }

    /// An induced module structure on the Hom group. `transform(u, f)` must
    /// return the value matrix of outer-ring generator `u` applied to the
    /// basis map `f` under the desired outer action.
    pub fn induced(
        &self,
        outer: &FinRing,
        side: Side,
        mut transform: impl FnMut(usize, &AbHom) -> Result<IntMat>,
    ) -> Result<ModuleStructure> {
        let kr = outer.rank();
        let mut table = vec![vec![self.group.zero(); self.group.rank()]; kr];
        for (u, row) in table.iter_mut().enumerate() {
            for (a, slot) in row.iter_mut().enumerate() {
                let m = transform(u, &self.basis[a])?;
                *slot = self.to_element_matrix(&m)?;
            }
        }
        ModuleStructure::new(outer.clone(), self.group.clone(), side, table)
    }
}
