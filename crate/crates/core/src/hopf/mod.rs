//! Finite-dimensional Hopf algebras as structure-constant matrices.
//!
//! With `n = dim P`: `mult` is `n x n²`, `unit` is `n x 1`, `comult` is
//! `n² x n`, `counit` is `1 x n` and `antipode` is `n x n`.

pub mod builtin;
pub mod cleft;
pub mod comodule;
pub mod integral;

use crate::error::{Error, Result, Violation};
use crate::field::FieldSpec;
use crate::linalg::Mat;

pub use builtin::FiniteGroup;
pub use cleft::{cleft_extension, CleftData, ComoduleAlgebra};
pub use comodule::{coinvariants, yd_braiding, yd_braiding_inverse, yd_dual, Comodule, ModuleAction, Side, YDModule};
pub use integral::{left_integral, IntegralResult};

/// Unvalidated structure tensors.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub mult: Mat,
    pub unit: Mat,
    pub comult: Mat,
    pub counit: Mat,
    pub antipode: Mat,
}

#[derive(Clone, Debug)]
pub struct FinHopfAlgebra {
    data: HopfData,
    antipode_inverse: Option<Mat>,
}

fn check_shape(name: &str, m: &Mat, shape: (usize, usize), field: FieldSpec) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field.name(), m.field().name()));
    }
    if m.shape() != shape {
        return Err(Error::Shape(format!("{name} is {:?}, expected {:?}", m.shape(), shape)));
    }
    Ok(())
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        check_shape("mult", &self.mult, (n, n * n), f)?;
        check_shape("unit", &self.unit, (n, 1), f)?;
        check_shape("comult", &self.comult, (n * n, n), f)?;
        check_shape("counit", &self.counit, (1, n), f)?;
        check_shape("antipode", &self.antipode, (n, n), f)
    }

    fn witness(&self, col: usize, legs: usize) -> String {
        let n = self.dim();
        let mut idx = Vec::with_capacity(legs);
        let mut c = col;
        for _ in 0..legs {
            idx.push(c % n);
            c /= n;
        }
        idx.reverse();
        idx.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join("⊗")
    }

    /// Every violated axiom, each with the first basis element where it fails.
    pub fn violations(&self) -> Result<Vec<Violation>> {
        self.check_shapes()?;
        let f = self.field;
        let n = self.dim();
        let i = Mat::identity(f, n);
        let (m, u, d, e, s) = (&self.mult, &self.unit, &self.comult, &self.counit, &self.antipode);
        let mut out = Vec::new();
        let mut check = |name: &str, a: Mat, b: Mat, legs: usize| {
            if let Some((_, c)) = a.first_difference(&b) {
                out.push(Violation::new(name, self.witness(c, legs)));
            }
        };
        check("associativity", m.mul(&m.kron(&i)), m.mul(&i.kron(m)), 3);
        check("left unit", m.mul(&u.kron(&i)), i.clone(), 1);
        check("right unit", m.mul(&i.kron(u)), i.clone(), 1);
        check("coassociativity", d.kron(&i).mul(d), i.kron(d).mul(d), 1);
        check("left counit", e.kron(&i).mul(d), i.clone(), 1);
        check("right counit", i.kron(e).mul(d), i.clone(), 1);
        let mm = m.kron(m).mul(&Mat::perm_legs(f, &[n; 4], &[0, 2, 1, 3]));
        check("comultiplicativity", d.mul(m), mm.mul(&d.kron(d)), 2);
        check("comultiplication unital", d.mul(u), u.kron(u), 0);
        check("counit multiplicative", e.mul(m), e.kron(e), 2);
        check("counit unital", e.mul(u), Mat::identity(f, 1), 0);
        let ue = u.mul(e);
        check("left antipode", m.mul(&s.kron(&i)).mul(d), ue.clone(), 1);
        check("right antipode", m.mul(&i.kron(s)).mul(d), ue, 1);
        Ok(out)
    }
}

/// Validate raw tensors; on success the antipode inverse is computed when it exists.
pub fn validate_hopf(data: HopfData) -> Result<FinHopfAlgebra> {
    let v = data.violations()?;
    if !v.is_empty() {
        return Err(Error::HopfAxioms(v));
    }
    let antipode_inverse = data.antipode.inverse();
    Ok(FinHopfAlgebra { data, antipode_inverse })
}

impl FinHopfAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.data.field
    }
    pub fn dim(&self) -> usize {
        self.data.dim()
    }
    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }
    pub fn mult(&self) -> &Mat {
        &self.data.mult
    }
    pub fn unit(&self) -> &Mat {
        &self.data.unit
    }
    pub fn comult(&self) -> &Mat {
        &self.data.comult
    }
    pub fn counit(&self) -> &Mat {
        &self.data.counit
    }
    pub fn antipode(&self) -> &Mat {
        &self.data.antipode
    }
    pub fn antipode_inverse(&self) -> Option<&Mat> {
        self.antipode_inverse.as_ref()
    }
    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn s_inv(&self, what: &'static str) -> Result<&Mat> {
        self.antipode_inverse.as_ref().ok_or(Error::MissingAntipodeInverse(what))
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.field(), self.dim())
    }

    /// Identity on `P^{⊗k}`.
    pub fn id_pow(&self, k: u32) -> Mat {
        Mat::identity(self.field(), self.dim().pow(k))
    }

    /// Basis vector `e_i` as an `n x 1` column.
    pub fn basis(&self, i: usize) -> Mat {
        Mat::unit_vector(self.field(), self.dim(), i)
    }

    /// `m^{(k)}: P^{⊗k} → P`; `k = 0` is the unit.
    pub fn mult_n(&self, k: u32) -> Mat {
        match k {
            0 => self.unit().clone(),
            1 => self.id(),
            _ => {
                let mut acc = self.mult().clone();
                for _ in 2..k {
                    acc = self.mult().mul(&acc.kron(&self.id()));
                }
                acc
            }
        }
    }

    /// Left-nested `Δ^{(k)}: P → P^{⊗k}`; `k = 0` is the counit.
    pub fn comult_n(&self, k: u32) -> Mat {
        match k {
            0 => self.counit().clone(),
            1 => self.id(),
            _ => {
                let mut acc = self.comult().clone();
                for j in 2..k {
                    acc = self.comult().kron(&self.id_pow(j - 1)).mul(&acc);
                }
                acc
            }
        }
    }

    /// Multiplication on `P ⊗ P` as an algebra: `(m⊗m)∘(id⊗flip⊗id)`.
    pub fn mult_tensor_square(&self) -> Mat {
        let n = self.dim();
        self.mult().kron(self.mult()).mul(&Mat::perm_legs(self.field(), &[n; 4], &[0, 2, 1, 3]))
    }

    /// Product of two elements given as columns.
    pub fn product(&self, a: &Mat, b: &Mat) -> Mat {
        self.mult().mul(&a.kron(b))
    }

    /// Commutative iff `m∘flip = m`.
    pub fn is_commutative(&self) -> bool {
        self.mult().mul(&Mat::flip(self.field(), self.dim(), self.dim())) == *self.mult()
    }

    pub fn is_cocommutative(&self) -> bool {
        Mat::flip(self.field(), self.dim(), self.dim()).mul(self.comult()) == *self.comult()
    }

    /// The right adjoint coaction `Ad_R(p) = p₂ ⊗ S(p₁)p₃`.
    pub fn ad_right(&self) -> Mat {
        let n = self.dim();
        let f = self.field();
        let i = self.id();
        // [p1,p2,p3] -> [p2,p1,p3] -> p2 ⊗ m(S p1 ⊗ p3)
        let reorder = Mat::perm_legs(f, &[n; 3], &[1, 0, 2]);
        i.kron(&self.mult().mul(&self.antipode().kron(&i))).mul(&reorder).mul(&self.comult_n(3))
    }

    /// The left adjoint coaction `Ad^L(p) = p₁S(p₃) ⊗ p₂`.
    pub fn ad_left(&self) -> Mat {
        let n = self.dim();
        let f = self.field();
        let i = self.id();
        let reorder = Mat::perm_legs(f, &[n; 3], &[0, 2, 1]);
        self.mult().mul(&i.kron(self.antipode())).kron(&i).mul(&reorder).mul(&self.comult_n(3))
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;

    #[test]
    fn flipped_sweedler_antipode_fails_at_x() {
        let h = sweedler(FieldSpec::Rationals).unwrap();
        let mut data = h.data().clone();
        let f = data.field;
        // S(x) = gx instead of -gx
        let mut dense = data.antipode.to_dense();
        dense[3][1] = f.one();
        data.antipode = Mat::from_dense(f, 4, 4, dense.into_iter().flatten().collect()).unwrap();
        let v = data.violations().unwrap();
        assert!(v.iter().any(|x| x.check.contains("antipode") && x.witness == "x"), "{v:?}");
        assert!(matches!(validate_hopf(data), Err(Error::HopfAxioms(_))));
    }

    #[test]
    fn zero_counit_breaks_counitality() {
        let h = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rationals).unwrap();
        let mut data = h.data().clone();
        data.counit = Mat::zeros(data.field, 1, 2);
        let v = data.violations().unwrap();
        assert!(v.iter().any(|x| x.check == "left counit"));
    }

    #[test]
    fn iterated_comult_is_coassociative() {
        let h = sweedler(FieldSpec::Rationals).unwrap();
        let d3 = h.comult_n(3);
        let alt = h.id().kron(h.comult()).mul(h.comult());
        let alt3 = h.id().kron(&alt).mul(h.comult());
        assert_eq!(h.comult_n(4), alt3);
        assert_eq!(d3.rows(), 64);
    }
}
