//! Differential calculi: bicovariant exterior algebras `Ω = P⊗Λ`, universal
//! calculi, tensor products of calculi, and extension of coactions to forms.

pub mod coaction;
pub mod exterior;
pub mod ideal;
pub mod tensor;
pub mod universal;

use std::collections::BTreeMap;

use crate::cohomology::{CochainComplex, CohomologyResult};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::FinHopfAlgebra;
use crate::linalg::Mat;

pub use coaction::{extend_coaction, ExtendedCoaction};
pub use exterior::{build_exterior, build_omega, ExteriorCalculus};
pub use ideal::{check_ideal, CalculusIdeal};
pub use tensor::{tensor_dga, TensorDga};
pub use universal::universal_calculus;

/// A unital finite-dimensional algebra.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Mat,
    pub unit: Mat,
}

impl FinHopfAlgebra {
    pub fn algebra(&self) -> Algebra {
        Algebra { field: self.field(), dim: self.dim(), mult: self.mult().clone(), unit: self.unit().clone() }
    }
}

/// A differential graded algebra truncated at `cap`: spaces `Ω^0..=Ω^cap`,
/// differentials `d[n]: Ω^n → Ω^{n+1}` for `n < cap`, and products
/// `Ω^r⊗Ω^s → Ω^{r+s}` for `r + s ≤ product_cap`.
#[derive(Clone, Debug)]
pub struct Dga {
    field: FieldSpec,
    dims: Vec<usize>,
    d: Vec<Mat>,
    products: BTreeMap<(usize, usize), Mat>,
    product_cap: usize,
    unit: Mat,
}

impl Dga {
    pub fn new(
        field: FieldSpec,
        dims: Vec<usize>,
        d: Vec<Mat>,
        products: BTreeMap<(usize, usize), Mat>,
        product_cap: usize,
        unit: Mat,
    ) -> Result<Dga> {
        let cap = dims.len().checked_sub(1).ok_or_else(|| Error::Shape("empty DGA".into()))?;
        if d.len() != cap || product_cap > cap || unit.shape() != (dims[0], 1) {
            return Err(Error::Shape("DGA data inconsistent with its cap".into()));
        }
        for r in 0..=product_cap {
            for s in 0..=product_cap - r {
                match products.get(&(r, s)) {
                    Some(m) if m.shape() == (dims[r + s], dims[r] * dims[s]) => {}
                    _ => return Err(Error::Shape(format!("missing or malformed product ({r}, {s})"))),
                }
            }
        }
        Ok(Dga { field, dims, d, products, product_cap, unit })
    }

    /// The ground field as a DGA concentrated in degree 0.
    pub fn trivial(field: FieldSpec, cap: usize) -> Dga {
        let mut dims = vec![0; cap + 1];
        dims[0] = 1;
        let d = (0..cap).map(|n| Mat::zeros(field, dims[n + 1], dims[n])).collect();
        let mut products = BTreeMap::new();
        for r in 0..=cap {
            for s in 0..=cap - r {
                let m = if r + s == 0 { Mat::identity(field, 1) } else { Mat::zeros(field, dims[r + s], dims[r] * dims[s]) };
                products.insert((r, s), m);
            }
        }
        Dga { field, dims, d, products, product_cap: cap, unit: Mat::identity(field, 1) }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn cap(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn product_cap(&self) -> usize {
        self.product_cap
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }
    pub fn d(&self, n: usize) -> &Mat {
        &self.d[n]
    }
    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn product(&self, r: usize, s: usize) -> &Mat {
        self.products.get(&(r, s)).unwrap_or_else(|| panic!("product ({r}, {s}) beyond product cap {}", self.product_cap))
    }

    pub fn algebra(&self) -> Algebra {
        Algebra { field: self.field, dim: self.dims[0], mult: self.product(0, 0).clone(), unit: self.unit.clone() }
    }

    /// Same DGA cut down to a smaller cap.
    pub fn truncate(&self, cap: usize) -> Dga {
        let cap = cap.min(self.cap());
        let pc = self.product_cap.min(cap);
        let products = self.products.iter().filter(|((r, s), _)| r + s <= pc).map(|(k, v)| (*k, v.clone())).collect();
        Dga {
            field: self.field,
            dims: self.dims[..=cap].to_vec(),
            d: self.d[..cap].to_vec(),
            products,
            product_cap: pc,
            unit: self.unit.clone(),
        }
    }

    pub fn complex(&self) -> CochainComplex {
        CochainComplex::new(self.field, self.dims.clone(), self.d.clone()).expect("DGA differentials square to zero")
    }

    pub fn de_rham(&self) -> CohomologyResult {
        self.complex().cohomology()
    }

    /// `d(ab) = (da)b + (-1)^r a(db)` on all basis pairs with `r + s < product_cap`.
    pub fn check_leibniz(&self) -> Result<()> {
        let f = self.field;
        for r in 0..self.product_cap {
            for s in 0..self.product_cap - r {
                let ir = Mat::identity(f, self.dims[r]);
                let is = Mat::identity(f, self.dims[s]);
                let lhs = self.d[r + s].mul(self.product(r, s));
                let a = self.product(r + 1, s).mul(&self.d[r].kron(&is));
                let b = self.product(r, s + 1).mul(&ir.kron(&self.d[s]));
                let rhs = if r % 2 == 0 { a.add(&b) } else { a.sub(&b) };
                if let Some((_, c)) = lhs.first_difference(&rhs) {
                    return Err(Error::identity(
                        format!("graded Leibniz rule in bidegree ({r}, {s})"),
                        format!("basis pair ({}, {})", c / self.dims[s].max(1), c % self.dims[s].max(1)),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `(ab)c = a(bc)` within the product cap.
    pub fn check_associativity(&self) -> Result<()> {
        let f = self.field;
        let pc = self.product_cap;
        for r in 0..=pc {
            for s in 0..=pc - r {
                for t in 0..=pc - r - s {
                    let lhs = self.product(r + s, t).mul(&self.product(r, s).kron(&Mat::identity(f, self.dims[t])));
                    let rhs = self.product(r, s + t).mul(&Mat::identity(f, self.dims[r]).kron(self.product(s, t)));
                    if lhs != rhs {
                        return Err(Error::identity(format!("associativity in degrees ({r}, {s}, {t})"), "product"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Ω^1` is spanned by `a·db`.
    pub fn check_density(&self) -> Result<()> {
        if self.cap() == 0 || self.product_cap == 0 {
            return Ok(());
        }
        let f = self.field;
        let adb = self.product(0, 1).mul(&Mat::identity(f, self.dims[0]).kron(&self.d[0]));
        if adb.rank() != self.dims[1] {
            return Err(Error::identity("density of Ω^1", format!("a·db spans {} of {}", adb.rank(), self.dims[1])));
        }
        Ok(())
    }

    /// `d∘d = 0`, Leibniz, associativity, `d(1) = 0` and density.
    pub fn check(&self) -> Result<()> {
        CochainComplex::new(self.field, self.dims.clone(), self.d.clone())?;
        if self.cap() > 0 && !self.d[0].mul(&self.unit).is_zero() {
            return Err(Error::identity("d(1) = 0", "unit"));
        }
        self.check_leibniz()?;
        self.check_associativity()?;
        self.check_density()
    }

    /// `dim H^0 = 1`.
    pub fn is_connected(&self) -> bool {
        self.cap() == 0 && self.dims[0] == 1 || self.cap() > 0 && self.d[0].kernel().cols() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_dga_checks() {
        let k = Dga::trivial(FieldSpec::Rationals, 3);
        k.check().unwrap();
        assert_eq!(k.de_rham().dims, vec![1, 0, 0, 0]);
    }
}
