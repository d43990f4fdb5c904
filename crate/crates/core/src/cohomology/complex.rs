use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Mat, QuotientSpace, Subspace};

/// `C^0 → C^1 → … → C^top`; `d[n]: C^n → C^{n+1}` for `n < top`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    field: FieldSpec,
    dims: Vec<usize>,
    d: Vec<Mat>,
}

impl CochainComplex {
    /// Checks shapes and `d∘d = 0`.
    pub fn new(field: FieldSpec, dims: Vec<usize>, d: Vec<Mat>) -> Result<CochainComplex> {
        if dims.is_empty() || d.len() + 1 != dims.len() {
            return Err(Error::Shape(format!("{} spaces need {} differentials, got {}", dims.len(), dims.len().saturating_sub(1), d.len())));
        }
        for (n, m) in d.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch(field.name(), m.field().name()));
            }
            if m.shape() != (dims[n + 1], dims[n]) {
                return Err(Error::Shape(format!("d^{n} is {:?}, expected {:?}", m.shape(), (dims[n + 1], dims[n]))));
            }
        }
        for n in 1..d.len() {
            if let Some((i, j)) = d[n].mul(&d[n - 1]).first_difference(&Mat::zeros(field, dims[n + 1], dims[n - 1])) {
                return Err(Error::identity(format!("d^{n}∘d^{} = 0", n - 1), format!("entry ({i}, {j})")));
            }
        }
        Ok(CochainComplex { field, dims, d })
    }

    pub fn zero(field: FieldSpec, top: usize) -> CochainComplex {
        let dims = vec![0; top + 1];
        let d = (0..top).map(|_| Mat::zeros(field, 0, 0)).collect();
        CochainComplex { field, dims, d }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }
    pub fn d(&self, n: usize) -> &Mat {
        &self.d[n]
    }

    /// Keep degrees `0..=top`.
    pub fn truncate(&self, top: usize) -> CochainComplex {
        let top = top.min(self.top());
        CochainComplex { field: self.field, dims: self.dims[..=top].to_vec(), d: self.d[..top].to_vec() }
    }

    pub fn cohomology(&self) -> CohomologyResult {
        let f = self.field;
        let top = self.top();
        let mut out = CohomologyResult { dims: Vec::new(), exact_below: top, representatives: Vec::new(), boundaries: Vec::new(), cocycles: Vec::new(), classify: Vec::new() };
        for n in 0..=top {
            let z = if n < top {
                Subspace::span(&self.d[n].kernel())
            } else {
                Subspace::full(f, self.dims[n])
            };
            let b = if n == 0 {
                Subspace::zero(f, self.dims[0])
            } else {
                Subspace::span(&self.d[n - 1])
            };
            let zl = z.coordinate_map();
            let b_in_z = zl.mul(b.basis());
            let q = QuotientSpace::from_spanning(f, z.dim(), &b_in_z);
            out.dims.push(q.dim());
            out.representatives.push(z.basis().mul(q.section()));
            out.classify.push(q.projection().mul(&zl));
            out.boundaries.push(b);
            out.cocycles.push(z);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub dims: Vec<usize>,
    /// Degrees `< exact_below` are exact; the top degree is only an upper
    /// bound since the next differential is unknown.
    pub exact_below: usize,
    /// Columns are cocycles whose classes form a basis.
    pub representatives: Vec<Mat>,
    pub boundaries: Vec<Subspace>,
    pub cocycles: Vec<Subspace>,
    classify: Vec<Mat>,
}

impl CohomologyResult {
    /// Class coordinates of cocycles (columns of `v`); meaningless off the cocycles.
    pub fn classify(&self, n: usize, v: &Mat) -> Mat {
        self.classify[n].mul(v)
    }

    pub fn classify_map(&self, n: usize) -> &Mat {
        &self.classify[n]
    }

    /// Dimensions of the exact degrees only.
    pub fn exact_dims(&self) -> &[usize] {
        &self.dims[..self.exact_below]
    }
}

/// Per-degree maps between complexes.
#[derive(Clone, Debug)]
pub struct ComplexMap {
    pub components: Vec<Mat>,
}

impl ComplexMap {
    /// Checks `d_T f^n = f^{n+1} d_S` wherever both sides are defined.
    pub fn new(source: &CochainComplex, target: &CochainComplex, components: Vec<Mat>) -> Result<ComplexMap> {
        for (n, c) in components.iter().enumerate() {
            if c.shape() != (target.dim(n), source.dim(n)) {
                return Err(Error::Shape(format!("component {n} is {:?}", c.shape())));
            }
        }
        let top = (components.len().saturating_sub(1)).min(source.top()).min(target.top());
        for n in 0..top {
            let lhs = target.d(n).mul(&components[n]);
            let rhs = components[n + 1].mul(source.d(n));
            if let Some((i, j)) = lhs.first_difference(&rhs) {
                return Err(Error::identity(format!("cochain map in degree {n}"), format!("entry ({i}, {j})")));
            }
        }
        Ok(ComplexMap { components })
    }

    /// Matrix of the induced map `H^n(S) → H^n(T)` in representative bases.
    pub fn on_cohomology(&self, n: usize, hs: &CohomologyResult, ht: &CohomologyResult) -> Mat {
        ht.classify(n, &self.components[n].mul(&hs.representatives[n]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn zero_complex() {
        let h = CochainComplex::zero(Q, 3).cohomology();
        assert_eq!(h.dims, vec![0, 0, 0, 0]);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d0 = Mat::from_ints(Q, &[vec![1]]);
        let d1 = Mat::from_ints(Q, &[vec![1]]);
        assert!(CochainComplex::new(Q, vec![1, 1, 1], vec![d0, d1]).is_err());
    }

    #[test]
    fn circle_like_complex() {
        // k^2 → k^2, (a, b) ↦ (a - b, b - a): H^0 = k, H^1 = k
        let d0 = Mat::from_ints(Q, &[vec![1, -1], vec![-1, 1]]);
        let c = CochainComplex::new(Q, vec![2, 2, 0], vec![d0, Mat::zeros(Q, 0, 2)]).unwrap();
        let h = c.cohomology();
        assert_eq!(h.dims, vec![1, 1, 0]);
        let rep = &h.representatives[1];
        assert!(c.d(1).mul(rep).is_zero());
        assert!(!h.boundaries[1].contains(rep));
        assert!(h.classify(1, rep).is_identity());
    }
}
