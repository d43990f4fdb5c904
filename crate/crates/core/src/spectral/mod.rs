//! First-quadrant double complexes, their total complexes, the spectral
//! sequences of the row and column filtrations, and the van Est double
//! complex of a complex of Hopf modules.

mod pages;
pub mod random;
pub mod van_est;

pub use pages::{convergence_check, e2_iterated, spectral_pages, ConvergenceReport, Filtration, SpectralPage};
pub use random::random_double_complex;
pub use van_est::{van_est, van_est_check, HopfModuleComplex, VanEstReport};

use crate::cohomology::CochainComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Mat;

/// `C^{n,m}` for `n ≤ n_cap`, `m ≤ m_cap` with `d'` of bidegree (1,0) and
/// `d''` of bidegree (0,1). Maps leaving the grid are zero.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    field: FieldSpec,
    dims: Vec<Vec<usize>>,
    d_h: Vec<Vec<Mat>>,
    d_v: Vec<Vec<Mat>>,
    truncated: (bool, bool),
}

impl DoubleComplex {
    /// `d_h[n][m]: C^{n,m} → C^{n+1,m}` for `n < n_cap`, `d_v[n][m]: C^{n,m} →
    /// C^{n,m+1}` for `m < m_cap`. `truncated` marks directions in which the
    /// grid cuts off a longer complex.
    pub fn new(field: FieldSpec, dims: Vec<Vec<usize>>, d_h: Vec<Vec<Mat>>, d_v: Vec<Vec<Mat>>, truncated: (bool, bool)) -> Result<DoubleComplex> {
        let nc = dims.len();
        if nc == 0 || dims.iter().any(|c| c.len() != dims[0].len()) || dims[0].is_empty() {
            return Err(Error::Shape("double complex needs a rectangular non-empty grid".into()));
        }
        let mc = dims[0].len();
        if d_h.len() + 1 != nc || d_h.iter().any(|c| c.len() != mc) || d_v.len() != nc || d_v.iter().any(|c| c.len() + 1 != mc) {
            return Err(Error::Shape("differential grid does not match the spaces".into()));
        }
        let dc = DoubleComplex { field, dims, d_h, d_v, truncated };
        for n in 0..nc {
            for m in 0..mc {
                if n + 1 < nc && dc.d_h[n][m].shape() != (dc.dims[n + 1][m], dc.dims[n][m]) {
                    return Err(Error::Shape(format!("d' at ({n},{m}) is {:?}", dc.d_h[n][m].shape())));
                }
                if m + 1 < mc && dc.d_v[n][m].shape() != (dc.dims[n][m + 1], dc.dims[n][m]) {
                    return Err(Error::Shape(format!("d'' at ({n},{m}) is {:?}", dc.d_v[n][m].shape())));
                }
            }
        }
        for n in 0..nc {
            for m in 0..mc {
                if n + 2 < nc && !dc.d_h[n + 1][m].mul(&dc.d_h[n][m]).is_zero() {
                    return Err(Error::identity("d'∘d' = 0", format!("at ({n},{m})")));
                }
                if m + 2 < mc && !dc.d_v[n][m + 1].mul(&dc.d_v[n][m]).is_zero() {
                    return Err(Error::identity("d''∘d'' = 0", format!("at ({n},{m})")));
                }
                if n + 1 < nc && m + 1 < mc {
                    let a = dc.d_v[n + 1][m].mul(&dc.d_h[n][m]);
                    let b = dc.d_h[n][m + 1].mul(&dc.d_v[n][m]);
                    if !a.add(&b).is_zero() {
                        return Err(Error::identity("d''d' + d'd'' = 0", format!("at ({n},{m})")));
                    }
                }
            }
        }
        Ok(dc)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn n_cap(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn m_cap(&self) -> usize {
        self.dims[0].len() - 1
    }
    pub fn dim(&self, n: usize, m: usize) -> usize {
        self.dims.get(n).and_then(|c| c.get(m)).copied().unwrap_or(0)
    }
    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    /// `d': C^{n,m} → C^{n+1,m}` (zero off the grid).
    pub fn d_h(&self, n: usize, m: usize) -> Mat {
        if n < self.n_cap() {
            self.d_h[n][m].clone()
        } else {
            Mat::zeros(self.field, 0, self.dim(n, m))
        }
    }

    /// `d'': C^{n,m} → C^{n,m+1}` (zero off the grid).
    pub fn d_v(&self, n: usize, m: usize) -> Mat {
        if m < self.m_cap() {
            self.d_v[n][m].clone()
        } else {
            Mat::zeros(self.field, 0, self.dim(n, m))
        }
    }

    /// Total degrees `s < exact_below()` agree with the untruncated complex.
    pub fn exact_below(&self) -> usize {
        match self.truncated {
            (false, false) => self.n_cap() + self.m_cap() + 1,
            (true, false) => self.n_cap(),
            (false, true) => self.m_cap(),
            (true, true) => self.n_cap().min(self.m_cap()),
        }
    }

    pub fn top_degree(&self) -> usize {
        self.n_cap() + self.m_cap()
    }

    /// Column indices `n` present in total degree `s`, ascending.
    pub(crate) fn columns(&self, s: usize) -> std::ops::RangeInclusive<usize> {
        s.saturating_sub(self.m_cap())..=s.min(self.n_cap())
    }

    /// Offset of the `(n, s-n)` block in `T^s`.
    pub(crate) fn offset(&self, s: usize, n: usize) -> usize {
        self.columns(s).take_while(|&i| i < n).map(|i| self.dim(i, s - i)).sum()
    }

    pub fn total_dim(&self, s: usize) -> usize {
        if s > self.top_degree() {
            return 0;
        }
        self.columns(s).map(|i| self.dim(i, s - i)).sum()
    }

    /// `d = d' + d'': T^s → T^{s+1}`.
    pub(crate) fn total_d(&self, s: usize) -> Mat {
        let f = self.field;
        let (rows, cols) = (self.total_dim(s + 1), self.total_dim(s));
        let mut acc = Mat::zeros(f, rows, cols);
        if s > self.top_degree() {
            return acc;
        }
        for n in self.columns(s) {
            let m = s - n;
            let c0 = self.offset(s, n);
            if n < self.n_cap() {
                acc = acc.add(&self.d_h[n][m].embed(rows, cols, self.offset(s + 1, n + 1), c0));
            }
            if m < self.m_cap() {
                acc = acc.add(&self.d_v[n][m].embed(rows, cols, self.offset(s + 1, n), c0));
            }
        }
        acc
    }
}

/// `T^s = ⊕_i C^{i,s-i}` with `d = d' + d''`, through degree `n_cap + m_cap`
/// followed by a zero space so that every listed degree is exact.
pub fn total_complex(dc: &DoubleComplex) -> CochainComplex {
    let top = dc.top_degree() + 1;
    let dims = (0..=top).map(|s| dc.total_dim(s)).collect();
    let d = (0..top).map(|s| dc.total_d(s)).collect();
    CochainComplex::new(dc.field, dims, d).expect("total differential squares to zero")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    pub(crate) fn single_entry() -> DoubleComplex {
        DoubleComplex::new(Q, vec![vec![1]], vec![], vec![vec![]], (false, false)).unwrap()
    }

    #[test]
    fn single_entry_total() {
        let t = total_complex(&single_entry());
        assert_eq!(t.dims(), &[1, 0]);
        assert_eq!(t.cohomology().dims, vec![1, 0]);
    }

    #[test]
    fn rejects_commuting_square() {
        let one = Mat::identity(Q, 1);
        let dims = vec![vec![1, 1], vec![1, 1]];
        let d_h = vec![vec![one.clone(), one.clone()]];
        let d_v = vec![vec![one.clone()], vec![one.clone()]];
        assert!(DoubleComplex::new(Q, dims.clone(), d_h.clone(), d_v.clone(), (false, false)).is_err());
        let d_v = vec![vec![one.clone()], vec![one.scale_int(-1)]];
        let dc = DoubleComplex::new(Q, dims, d_h, d_v, (false, false)).unwrap();
        assert_eq!(total_complex(&dc).dims(), &[1, 2, 1, 0]);
        assert_eq!(total_complex(&dc).cohomology().dims, vec![0, 0, 0, 0]);
    }
}
