use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohomology::{CochainComplex, CohomologyResult};
use crate::error::{Error, Result};
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::report::Check;

use super::DoubleComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Filtration {
    /// By rows (`m ≥ p`): `E_1 = H_{d'}`, `E_2 = H_{d''}H_{d'}`.
    I,
    /// By columns (`n ≥ p`): `E_1 = H_{d''}`, `E_2 = H_{d'}H_{d''}`.
    II,
}

impl Filtration {
    fn weight(self, n: usize, m: usize) -> usize {
        match self {
            Filtration::I => m,
            Filtration::II => n,
        }
    }

    /// Bidegree `(n, m)` of the piece of weight `p` in total degree `s`.
    fn bidegree(self, p: usize, s: usize) -> Option<(usize, usize)> {
        let q = s.checked_sub(p)?;
        Some(match self {
            Filtration::I => (q, p),
            Filtration::II => (p, q),
        })
    }

    /// Bidegree shift of `D_r` in `(n, m)` coordinates.
    pub fn d_r_shift(self, r: usize) -> (isize, isize) {
        let r = r as isize;
        match self {
            Filtration::I => (1 - r, r),
            Filtration::II => (r, 1 - r),
        }
    }
}

/// `E_r^{n,m}` with `D_r: E_r^{n,m} → E_r` at `(n,m) + d_r_shift(r)`.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralPage {
    pub r: usize,
    pub filtration: Filtration,
    /// `dims[n][m]`.
    pub dims: Vec<Vec<usize>>,
    /// Nonzero-shaped `D_r` keyed by source bidegree.
    #[serde(skip)]
    pub differentials: BTreeMap<(usize, usize), Mat>,
}

impl SpectralPage {
    pub fn dim(&self, n: usize, m: usize) -> usize {
        self.dims.get(n).and_then(|c| c.get(m)).copied().unwrap_or(0)
    }

    /// `Σ_i E^{i,s-i}`.
    pub fn antidiagonal(&self, s: usize) -> usize {
        (0..=s).map(|i| self.dim(i, s - i)).sum()
    }
}

struct Entry {
    numerator: Subspace,
    quotient: QuotientSpace,
}

impl Entry {
    fn rep(&self) -> Mat {
        self.numerator.basis().mul(self.quotient.section())
    }
    fn classify(&self, v: &Mat) -> Mat {
        self.quotient.projection().mul(&self.numerator.coordinate_map()).mul(v)
    }
}

struct Filtered<'a> {
    dc: &'a DoubleComplex,
    filt: Filtration,
    d: Vec<Mat>,
}

impl Filtered<'_> {
    fn max_weight(&self) -> usize {
        match self.filt {
            Filtration::I => self.dc.m_cap(),
            Filtration::II => self.dc.n_cap(),
        }
    }

    /// Coordinates of `T^s` lying in blocks of weight `≥ p` (`keep`) or `< p`.
    fn coords(&self, s: usize, p: usize, keep: bool) -> Vec<usize> {
        let mut out = Vec::new();
        if s > self.dc.top_degree() {
            return out;
        }
        for n in self.dc.columns(s) {
            let m = s - n;
            if (self.filt.weight(n, m) >= p) == keep {
                let o = self.dc.offset(s, n);
                out.extend(o..o + self.dc.dim(n, m));
            }
        }
        out
    }

    fn select(&self, dim: usize, idx: &[usize]) -> Mat {
        let f = self.dc.field();
        Mat::from_triplets(f, dim, idx.len(), idx.iter().enumerate().map(|(j, &i)| (i, j, f.one())).collect::<Vec<_>>())
    }

    /// `F^p T^s`.
    fn f_p(&self, s: usize, p: usize) -> Mat {
        let dim = self.dc.total_dim(s);
        self.select(dim, &self.coords(s, p, true))
    }

    /// `Z_r^p(s) = {x ∈ F^p T^s : dx ∈ F^{p+r}}`, with `Z_r = F^p` for `r ≤ 0`.
    fn z(&self, s: usize, p: isize, r: isize) -> Subspace {
        let fp = self.f_p(s, p.max(0) as usize);
        if r <= 0 {
            return Subspace::span(&fp);
        }
        let low = self.coords(s + 1, (p + r).max(0) as usize, false);
        let proj = self.select(self.dc.total_dim(s + 1), &low).transpose();
        let cond = proj.mul(&self.d[s]).mul(&fp);
        Subspace::span(&fp.mul(&cond.kernel()))
    }

    /// `E_r^p(s) = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1})`.
    fn entry(&self, s: usize, p: usize, r: usize) -> Entry {
        let f = self.dc.field();
        let (pi, ri) = (p as isize, r as isize);
        let num = self.z(s, pi, ri);
        let mut den = self.z(s, pi + 1, ri - 1);
        if s > 0 {
            let src = self.z(s - 1, pi - ri + 1, ri - 1);
            den = den.sum(&Subspace::span(&self.d[s - 1].mul(src.basis())));
        }
        let rel = num.coordinate_map().mul(den.basis());
        let quotient = QuotientSpace::from_spanning(f, num.dim(), &rel);
        Entry { numerator: num, quotient }
    }
}

fn weight_range(fl: &Filtered, s: usize) -> Vec<(usize, usize, usize)> {
    (0..=fl.max_weight())
        .filter_map(|p| fl.filt.bidegree(p, s).map(|(n, m)| (p, n, m)))
        .filter(|&(_, n, m)| n <= fl.dc.n_cap() && m <= fl.dc.m_cap())
        .collect()
}

/// Pages `E_2 … E_{r_max}` from the filtration of the total complex, each
/// checked for `D_r∘D_r = 0`, `E_{r+1} ≅ H(E_r, D_r)` and monotonicity.
pub fn spectral_pages(dc: &DoubleComplex, filt: Filtration, r_max: usize) -> Result<Vec<SpectralPage>> {
    let top = dc.top_degree();
    let fl = Filtered { dc, filt, d: (0..=top + 1).map(|s| dc.total_d(s)).collect() };
    let mut pages: Vec<SpectralPage> = Vec::new();
    for r in 1..=r_max.max(2) {
        let mut entries: BTreeMap<(usize, usize), Entry> = BTreeMap::new();
        for s in 0..=top {
            for (p, n, m) in weight_range(&fl, s) {
                entries.insert((n, m), fl.entry(s, p, r));
            }
        }
        let mut dims = vec![vec![0; dc.m_cap() + 1]; dc.n_cap() + 1];
        for (&(n, m), e) in &entries {
            dims[n][m] = e.quotient.dim();
        }
        let (dn, dm) = filt.d_r_shift(r);
        let mut differentials = BTreeMap::new();
        for (&(n, m), e) in &entries {
            let (tn, tm) = (n as isize + dn, m as isize + dm);
            let s = n + m;
            let image = fl.d[s].mul(&e.rep());
            let matrix = if tn < 0 || tm < 0 {
                Mat::zeros(dc.field(), 0, e.quotient.dim())
            } else {
                match entries.get(&(tn as usize, tm as usize)) {
                    Some(t) => t.classify(&image),
                    None => Mat::zeros(dc.field(), 0, e.quotient.dim()),
                }
            };
            differentials.insert((n, m), matrix);
        }
        for (&(n, m), dr) in &differentials {
            let (tn, tm) = (n as isize + dn, m as isize + dm);
            if tn >= 0 && tm >= 0 {
                if let Some(next) = differentials.get(&(tn as usize, tm as usize)) {
                    if next.cols() == dr.rows() && !next.mul(dr).is_zero() {
                        return Err(Error::identity(format!("D_{r}∘D_{r} = 0"), format!("from ({n},{m})")));
                    }
                }
            }
        }
        let page = SpectralPage { r, filtration: filt, dims, differentials };
        if let Some(prev) = pages.last() {
            check_successor(prev, &page)?;
        }
        pages.push(page);
    }
    Ok(pages.into_iter().filter(|pg| pg.r >= 2).collect())
}

/// `dim E_{r+1} = dim ker D_r − rank D_r(incoming)` and `E_{r+1} ≤ E_r`.
fn check_successor(prev: &SpectralPage, next: &SpectralPage) -> Result<()> {
    let (dn, dm) = prev.filtration.d_r_shift(prev.r);
    for (n, col) in prev.dims.iter().enumerate() {
        for (m, &d) in col.iter().enumerate() {
            let out = &prev.differentials[&(n, m)];
            let kernel = d - out.rank();
            let (sn, sm) = (n as isize - dn, m as isize - dm);
            let incoming = if sn >= 0 && sm >= 0 {
                prev.differentials.get(&(sn as usize, sm as usize)).map(|x| if x.rows() == d { x.rank() } else { 0 }).unwrap_or(0)
            } else {
                0
            };
            let expected = kernel - incoming;
            if next.dims[n][m] != expected {
                return Err(Error::identity(format!("E_{} = H(E_{}, D_{})", next.r, prev.r, prev.r), format!("at ({n},{m}): {} vs {expected}", next.dims[n][m])));
            }
            if next.dims[n][m] > d {
                return Err(Error::identity("subquotient monotonicity", format!("at ({n},{m})")));
            }
        }
    }
    Ok(())
}

/// Cohomology of a complex padded with a trailing zero space, so every
/// listed degree is exact.
fn closed(field: crate::field::FieldSpec, dims: Vec<usize>, d: Vec<Mat>) -> CohomologyResult {
    let mut dims = dims;
    let mut d = d;
    let last = *dims.last().expect("non-empty");
    dims.push(0);
    d.push(Mat::zeros(field, 0, last));
    CochainComplex::new(field, dims, d).expect("complex").cohomology()
}

/// `E_2` from the iterated cohomology: `H_{d''}(H_{d'})` for I and
/// `H_{d'}(H_{d''})` for II, as `dims[n][m]`.
pub fn e2_iterated(dc: &DoubleComplex, filt: Filtration) -> Vec<Vec<usize>> {
    let f = dc.field();
    let (nc, mc) = (dc.n_cap(), dc.m_cap());
    let mut out = vec![vec![0; mc + 1]; nc + 1];
    match filt {
        Filtration::I => {
            let rows: Vec<CohomologyResult> = (0..=mc)
                .map(|m| closed(f, (0..=nc).map(|n| dc.dim(n, m)).collect(), (0..nc).map(|n| dc.d_h(n, m)).collect()))
                .collect();
            for n in 0..=nc {
                let dims = (0..=mc).map(|m| rows[m].dims[n]).collect();
                let d = (0..mc).map(|m| rows[m + 1].classify(n, &dc.d_v(n, m).mul(&rows[m].representatives[n]))).collect();
                let h = closed(f, dims, d);
                for m in 0..=mc {
                    out[n][m] = h.dims[m];
                }
            }
        }
        Filtration::II => {
            let cols: Vec<CohomologyResult> = (0..=nc)
                .map(|n| closed(f, (0..=mc).map(|m| dc.dim(n, m)).collect(), (0..mc).map(|m| dc.d_v(n, m)).collect()))
                .collect();
            for m in 0..=mc {
                let dims = (0..=nc).map(|n| cols[n].dims[m]).collect();
                let d = (0..nc).map(|n| cols[n + 1].classify(m, &dc.d_h(n, m).mul(&cols[n].representatives[m]))).collect();
                let h = closed(f, dims, d);
                for n in 0..=nc {
                    out[n][m] = h.dims[n];
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub filtration: Filtration,
    pub limit_page: usize,
    pub antidiagonals: Vec<usize>,
    pub total: Vec<usize>,
    pub exact_below: usize,
    pub checks: Vec<Check>,
}

/// `Σ_i E_∞^{i,s-i} = dim H^s(T)` for every exact total degree; a mismatch
/// is an error naming the degree.
pub fn convergence_check(dc: &DoubleComplex, pages: &[SpectralPage], total: &CohomologyResult) -> Result<ConvergenceReport> {
    let limit = pages.last().ok_or_else(|| Error::Shape("no pages".into()))?;
    let k = dc.exact_below().min(dc.top_degree() + 1);
    let antidiagonals: Vec<usize> = (0..=dc.top_degree()).map(|s| limit.antidiagonal(s)).collect();
    let mut checks = Vec::new();
    for s in 0..k {
        if antidiagonals[s] != total.dims[s] {
            return Err(Error::identity(
                format!("{:?}: Σ E_∞ = dim H(T)", limit.filtration),
                format!("degree {s}: {} vs {}", antidiagonals[s], total.dims[s]),
            ));
        }
        checks.push(Check::pass(format!("{:?}: degree {s} converges ({})", limit.filtration, total.dims[s])));
    }
    Ok(ConvergenceReport {
        filtration: limit.filtration,
        limit_page: limit.r,
        antidiagonals,
        total: total.dims[..=dc.top_degree()].to_vec(),
        exact_below: k,
        checks,
    })
}
