use crate::error::{Error, Result, Violation};
use crate::hopf::FinHopfAlgebra;
use crate::linalg::{Mat, QuotientSpace, Subspace};

/// A right ideal `R ⊂ ker ε` invariant under `Ad_R`; it determines a
/// bicovariant first-order calculus with `L¹ = ker ε / R`.
#[derive(Clone, Debug)]
pub struct CalculusIdeal {
    basis: Subspace,
}

impl CalculusIdeal {
    /// `R = 0`: the universal bicovariant calculus.
    pub fn zero(p: &FinHopfAlgebra) -> CalculusIdeal {
        CalculusIdeal { basis: Subspace::zero(p.field(), p.dim()) }
    }

    /// `R = ker ε`: the zero calculus, `Ω^1 = 0`.
    pub fn augmentation(p: &FinHopfAlgebra) -> CalculusIdeal {
        CalculusIdeal { basis: Subspace::span(&p.counit().kernel()) }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Validate `span(vectors)` as a calculus ideal; every failed condition is
/// reported with a witness.
pub fn check_ideal(p: &FinHopfAlgebra, vectors: &Mat) -> Result<CalculusIdeal> {
    if vectors.rows() != p.dim() || vectors.field() != p.field() {
        return Err(Error::Shape(format!("ideal vectors must be columns of length {}", p.dim())));
    }
    let r = Subspace::span(vectors);
    let rb = r.basis();
    let labels = p.labels();
    let n = p.dim();
    let mut v = Vec::new();

    let eps = p.counit().mul(rb);
    if let Some((_, j)) = eps.first_difference(&Mat::zeros(p.field(), 1, rb.cols())) {
        v.push(Violation::new("contained in ker ε", format!("basis vector {j}")));
    }
    let q = QuotientSpace::new(&r);
    let right = q.projection().mul(&p.mult().mul(&rb.kron(&p.id())));
    if let Some((_, c)) = right.first_difference(&Mat::zeros(p.field(), right.rows(), right.cols())) {
        v.push(Violation::new("right ideal", format!("basis vector {} times {}", c / n, labels[c % n])));
    }
    let ad = q.projection().kron(&p.id()).mul(&p.ad_right()).mul(rb);
    if let Some((_, j)) = ad.first_difference(&Mat::zeros(p.field(), ad.rows(), ad.cols())) {
        v.push(Violation::new("Ad_R-invariant", format!("basis vector {j}")));
    }
    if v.is_empty() {
        Ok(CalculusIdeal { basis: r })
    } else {
        Err(Error::InvalidIdeal(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn zero_ideal_is_valid() {
        let p = sweedler(Q).unwrap();
        check_ideal(&p, &Mat::zeros(Q, 4, 0)).unwrap();
    }

    #[test]
    fn span_x_is_not_a_right_ideal() {
        let p = sweedler(Q).unwrap();
        let err = check_ideal(&p, &p.basis(1)).unwrap_err();
        match err {
            Error::InvalidIdeal(v) => assert!(v.iter().any(|x| x.check == "right ideal" && x.witness.ends_with("times g"))),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn augmentation_ideal_is_valid() {
        let p = function_algebra(&FiniteGroup::cyclic(3), Q).unwrap();
        let a = CalculusIdeal::augmentation(&p);
        check_ideal(&p, a.subspace().basis()).unwrap();
    }
}
