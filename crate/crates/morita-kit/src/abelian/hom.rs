//! Homomorphisms of finite abelian groups.
//!
//! A hom is an integer matrix, one column per source generator and one row
//! per target generator, with entries reduced modulo the row's target
//! modulus. Well-definedness on generators is the congruence
//! `matrix[i][j] · d_j ≡ 0 (mod e_i)`.

use crate::abelian::group::{Elem, FinAbGroup};
use crate::abelian::snf::{smith, solve_congruence, IntMat};
use crate::abelian::subgroup::{subgroup_generated, SubgroupEmbedding};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbHom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMat,
}

impl AbHom {
    /// Validated constructor; entries are reduced into range first.
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMat) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::Shape(format!(
                "hom matrix {}x{} against target rank {} and source rank {}",
                matrix.rows(),
                matrix.cols(),
                target.rank(),
                source.rank()
            )));
        }
        let reduced = IntMat::from_fn(matrix.rows(), matrix.cols(), |i, j| {
            matrix.get(i, j).rem_euclid(i128::from(target.moduli()[i]))
        });
        for j in 0..source.rank() {
            let dj = i128::from(source.moduli()[j]);
            for i in 0..target.rank() {
                let ei = i128::from(target.moduli()[i]);
                if (reduced.get(i, j) * dj).rem_euclid(ei) != 0 {
                    return Err(Error::Shape(format!(
                        "entry ({i},{j})={} is not well-defined: {}·{dj} ≢ 0 (mod {ei})",
                        reduced.get(i, j),
                        reduced.get(i, j),
                    )));
                }
            }
        }
        Ok(Self { source, target, matrix: reduced })
    }

    /// Build from columns given as target elements.
    pub fn from_columns(source: FinAbGroup, target: FinAbGroup, cols: &[Elem]) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::Shape("one column per source generator required".into()));
        }
        let matrix = IntMat::from_fn(target.rank(), source.rank(), |i, j| i128::from(cols[j][i]));
        Self::new(source, target, matrix)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMat::identity(g.rank()),
        }
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let matrix = IntMat::zeros(target.rank(), source.rank());
        Self { source, target, matrix }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        debug_assert!(self.source.contains(x), "element out of range");
        let wide: Vec<i128> = x.iter().map(|&v| i128::from(v)).collect();
        let image = self.matrix.apply(&wide).expect("hom entries are reduced; no overflow");
        self.target.reduce(&image)
    }

    /// `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &AbHom) -> Result<AbHom> {
        if inner.target != self.source {
            return Err(Error::Shape("composition through mismatched middle group".into()));
        }
        let product = self.matrix.mul(&inner.matrix)?;
        AbHom::new(inner.source.clone(), self.target.clone(), product)
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("sum of homs with different signatures".into()));
        }
        let m = IntMat::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            self.matrix.get(i, j) + other.matrix.get(i, j)
        });
        AbHom::new(self.source.clone(), self.target.clone(), m)
    }

    /// Kernel, image and cokernel in one pass.
    pub fn subquotients(&self) -> Result<SubQuotients> {
        let k = self.source.rank();
        let m = self.target.rank();
        let target_diag =
            IntMat::from_fn(m, m, |i, j| if i == j { i128::from(self.target.moduli()[i]) } else { 0 });
        let stacked = self.matrix.hstack(&target_diag)?;
        let snf = smith(&stacked)?;

        // Kernel: columns of v beyond the rank span the relation lattice of
        // the stacked system; their first k coordinates generate
        // {x : M·x ≡ 0 (mod target)}.
        let mut kernel_gens: Vec<Elem> = Vec::new();
        for j in snf.rank..stacked.cols() {
            let col = snf.v.col(j);
            kernel_gens.push(self.source.reduce(&col[..k]));
        }
        let kernel = subgroup_generated(&self.source, &kernel_gens)?;

        // Image: generated by the matrix columns.
        let image_gens: Vec<Elem> =
            (0..k).map(|j| self.target.reduce(&self.matrix.col(j))).collect();
        let image = subgroup_generated(&self.target, &image_gens)?;

        // Cokernel: the stacked SNF also presents target/image.
        let mut kept = Vec::new();
        let mut coker_moduli = Vec::new();
        for i in 0..m {
            let dii = snf.d.get(i, i);
            if dii == 0 {
                return Err(Error::Internal("cokernel presentation not finite".into()));
            }
            if dii >= 2 {
                kept.push(i);
                coker_moduli.push(dii as i64);
            }
        }
        let coker_group = FinAbGroup::new(coker_moduli)?;
        let proj_matrix =
            IntMat::from_fn(kept.len(), m, |i, j| snf.u.get(kept[i], j));
        let cokernel = AbHom::new(self.target.clone(), coker_group, proj_matrix)?;

        Ok(SubQuotients { kernel, image, cokernel })
    }

    pub fn kernel(&self) -> Result<SubgroupEmbedding> {
        Ok(self.subquotients()?.kernel)
    }

    pub fn image(&self) -> Result<SubgroupEmbedding> {
        Ok(self.subquotients()?.image)
    }

    pub fn cokernel(&self) -> Result<AbHom> {
        Ok(self.subquotients()?.cokernel)
    }

    /// `(injective, surjective)`: kernel trivial / cokernel trivial.
    pub fn is_bijective(&self) -> Result<(bool, bool)> {
        let sq = self.subquotients()?;
        Ok((sq.kernel.subgroup().is_trivial(), sq.cokernel.target().is_trivial()))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.is_bijective()?.0)
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.is_bijective()?.1)
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        let (inj, surj) = self.is_bijective()?;
        Ok(inj && surj)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// A preimage of `y`, if any.
    pub fn preimage(&self, y: &[i64]) -> Result<Option<Elem>> {
        debug_assert!(self.target.contains(y));
        let b: Vec<i128> = y.iter().map(|&v| i128::from(v)).collect();
        let sol = solve_congruence(&self.matrix, &b, self.target.moduli())?;
        Ok(sol.map(|x| self.source.reduce(&x)))
    }

    /// Inverse of a bijective hom.
    pub fn inverse(&self) -> Result<AbHom> {
        let cols: Result<Vec<Elem>> = (0..self.target.rank())
            .map(|i| {
                self.preimage(&self.target.generator(i))?.ok_or_else(|| {
                    Error::Precondition("inverse of a non-surjective hom".into())
                })
            })
            .collect();
        AbHom::from_columns(self.target.clone(), self.source.clone(), &cols?)
    }
}

pub struct SubQuotients {
    pub kernel: SubgroupEmbedding,
    pub image: SubgroupEmbedding,
    pub cokernel: AbHom,
}
