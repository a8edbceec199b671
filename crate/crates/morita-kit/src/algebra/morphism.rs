//! Morphisms of rngs: an additive hom that is multiplicative on generator
//! pairs, optionally respecting unities.

use crate::abelian::AbHom;
use crate::algebra::ring::FinRing;
use crate::error::{Error, Result, ValidationReport};

#[derive(Clone, Debug)]
pub struct RngMorphism {
    source: FinRing,
    target: FinRing,
    hom: AbHom,
    /// Whether this morphism is declared (and checked) to send 1 to 1.
    unital: bool,
}

impl RngMorphism {
    pub fn new(source: FinRing, target: FinRing, hom: AbHom, unital: bool) -> Result<Self> {
        if hom.source() != source.group() || hom.target() != target.group() {
            return Err(Error::Shape("morphism hom does not match the ring groups".into()));
        }
        Ok(Self { source, target, hom, unital })
    }

    pub fn validated(source: FinRing, target: FinRing, hom: AbHom, unital: bool) -> Result<Self> {
        let m = Self::new(source, target, hom, unital)?;
        m.validate().into_result()?;
        Ok(m)
    }

    pub fn source(&self) -> &FinRing {
        &self.source
    }

    pub fn target(&self) -> &FinRing {
        &self.target
    }

    pub fn hom(&self) -> &AbHom {
        &self.hom
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("rng morphism");
        let k = self.source.rank();
        for i in 0..k {
            for j in 0..k {
                let lhs = self.hom.apply(self.source.gen_product(i, j));
                let rhs = self.target.mul(
                    &self.hom.apply(&self.source.group().generator(i)),
                    &self.hom.apply(&self.source.group().generator(j)),
                );
                if lhs != rhs {
                    report.push(
                        "multiplicativity",
                        vec![i, j],
                        format!("f(g{i}·g{j}) = {lhs:?} but f(g{i})·f(g{j}) = {rhs:?}"),
                    );
                }
            }
        }
        if self.unital {
            match (self.source.one(), self.target.one()) {
                (Some(a), Some(b)) => {
                    let fa = self.hom.apply(a);
                    if &fa != b {
                        report.push("unity", vec![], format!("f(1) = {fa:?} ≠ 1"));
                    }
                }
                _ => report.push("unity", vec![], "declared unital but a ring has no unity"),
            }
        }
        report
    }
}
