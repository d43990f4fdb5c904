use serde::Serialize;

use crate::calculus::Dga;
use crate::cohomology::amitsur::{amitsur_g, d_bar, hopf_module_law};
use crate::cohomology::{coinvariant_subcomplex, CochainComplex};
use crate::error::{Error, Result};
use crate::hopf::{Comodule, FinHopfAlgebra, Side};
use crate::linalg::Mat;
use crate::report::Check;

use super::{convergence_check, e2_iterated, spectral_pages, total_complex, ConvergenceReport, DoubleComplex, Filtration};

/// A cochain complex `(F^m, d̄)` of left Hopf modules: coactions `λ_m`,
/// actions `μ_m: P⊗F^m → F^m`, colinear `d̄`.
#[derive(Clone, Debug)]
pub struct HopfModuleComplex {
    pub dims: Vec<usize>,
    pub coactions: Vec<Mat>,
    pub actions: Vec<Mat>,
    pub d: Vec<Mat>,
    /// `F^m = 0` beyond the listed degrees.
    pub finite: bool,
}

impl HopfModuleComplex {
    /// Forms on `P` with `λ̄` and left multiplication.
    pub fn from_dga(dga: &Dga, lambda_bar: &[Mat]) -> Result<HopfModuleComplex> {
        let top = dga.cap().min(dga.product_cap()).min(lambda_bar.len().saturating_sub(1));
        Ok(HopfModuleComplex {
            dims: dga.dims()[..=top].to_vec(),
            coactions: lambda_bar[..=top].to_vec(),
            actions: (0..=top).map(|n| dga.product(0, n).clone()).collect(),
            d: (0..top).map(|n| dga.d(n).clone()).collect(),
            finite: dga.dims()[top] == 0,
        })
    }

    /// A single Hopf module in degree 0.
    pub fn concentrated(f: &Comodule, action: &Mat) -> HopfModuleComplex {
        HopfModuleComplex { dims: vec![f.dim], coactions: vec![f.coaction.clone()], actions: vec![action.clone()], d: vec![], finite: true }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn comodule(&self, m: usize) -> Comodule {
        Comodule { dim: self.dims[m], coaction: self.coactions[m].clone(), side: Side::Left }
    }

    pub fn complex(&self, field: crate::field::FieldSpec) -> Result<CochainComplex> {
        CochainComplex::new(field, self.dims.clone(), self.d.clone())
    }
}

/// `C^{n,m} = P^{⊗n}⊗F^m`, `d'` the Hopf cochain differential `d̄` and
/// `d'' = (-1)^n id⊗d̄`, for `n ≤ n_cap`.
pub fn van_est(p: &FinHopfAlgebra, fc: &HopfModuleComplex, n_cap: usize) -> Result<DoubleComplex> {
    let f = p.field();
    let k = p.dim();
    for m in 0..=fc.top() {
        hopf_module_law(p, &fc.comodule(m), &fc.actions[m]).map_err(|e| Error::identity(format!("F^{m} is a left Hopf module"), e.to_string()))?;
    }
    for m in 0..fc.top() {
        let lhs = fc.coactions[m + 1].mul(&fc.d[m]);
        let rhs = p.id().kron(&fc.d[m]).mul(&fc.coactions[m]);
        if let Some((_, j)) = lhs.first_difference(&rhs) {
            return Err(Error::identity(format!("d̄: F^{m} → F^{} is colinear", m + 1), format!("basis vector {j}")));
        }
    }
    let mut size = fc.dims.iter().copied().max().unwrap_or(0);
    for n in 0..=n_cap {
        if size > crate::cohomology::AMITSUR_CAP {
            return Err(Error::CapExceeded(format!("C^({n},·) has dimension {size}")));
        }
        size = size.saturating_mul(k);
    }
    let dims = (0..=n_cap).map(|n| fc.dims.iter().map(|&d| k.pow(n as u32) * d).collect()).collect();
    let d_h = (0..n_cap).map(|n| (0..=fc.top()).map(|m| d_bar(p, &fc.comodule(m), n)).collect()).collect();
    let d_v = (0..=n_cap)
        .map(|n| {
            (0..fc.top())
                .map(|m| {
                    let v = Mat::identity(f, k.pow(n as u32)).kron(&fc.d[m]);
                    if n % 2 == 0 {
                        v
                    } else {
                        v.scale_int(-1)
                    }
                })
                .collect()
        })
        .collect();
    DoubleComplex::new(f, dims, d_h, d_v, (true, !fc.finite))
}

#[derive(Clone, Debug, Serialize)]
pub struct VanEstReport {
    /// `H_c^n(P; H^m(F))` computed directly, `[n][m]`.
    pub e2_direct: Vec<Vec<usize>>,
    pub e2_i: Vec<Vec<usize>>,
    pub e2_ii: Vec<Vec<usize>>,
    pub limit_i: Vec<Vec<usize>>,
    pub limit_ii: Vec<Vec<usize>>,
    /// `H^s(ᶜᵒᴾF, d̄)` computed directly.
    pub invariant_dims: Vec<usize>,
    pub convergence: Vec<ConvergenceReport>,
    /// Entries with `n + m` below this are unaffected by truncation.
    pub exact_below: usize,
    pub checks: Vec<Check>,
}

/// Build the van Est double complex and cross-check both spectral
/// sequences against `H_c(P; H(F))` and `H(ᶜᵒᴾF)` computed directly.
pub fn van_est_check(p: &FinHopfAlgebra, fc: &HopfModuleComplex, n_cap: usize) -> Result<VanEstReport> {
    let f = p.field();
    let dc = van_est(p, fc, n_cap)?;
    let r_max = dc.n_cap().max(dc.m_cap()) + 2;
    let tot = total_complex(&dc).cohomology();
    let pages_i = spectral_pages(&dc, Filtration::I, r_max)?;
    let pages_ii = spectral_pages(&dc, Filtration::II, r_max)?;
    let conv_i = convergence_check(&dc, &pages_i, &tot)?;
    let conv_ii = convergence_check(&dc, &pages_ii, &tot)?;
    let k = dc.exact_below().min(dc.top_degree() + 1);
    let mut checks = Vec::new();
    checks.extend(conv_i.checks.iter().cloned());
    checks.extend(conv_ii.checks.iter().cloned());
    checks.push(Check::expect("E₂ (I) equals the iterated cohomology", pages_i[0].dims == e2_iterated(&dc, Filtration::I), "page differs"));
    checks.push(Check::expect("E₂ (II) equals the iterated cohomology", pages_ii[0].dims == e2_iterated(&dc, Filtration::II), "page differs"));

    let fcx = fc.complex(f)?;
    let hf = fcx.cohomology();
    let mut e2_direct = vec![vec![0; fc.top() + 1]; n_cap + 1];
    for m in 0..=fc.top() {
        let reps = &hf.representatives[m];
        let tilde = p.id().kron(hf.classify_map(m)).mul(&fc.coactions[m].mul(reps));
        let hm = Comodule::new(p, hf.dims[m], tilde, Side::Left)?;
        let hc = amitsur_g(p, &hm, n_cap)?.cohomology();
        for n in 0..=n_cap {
            e2_direct[n][m] = hc.dims[n];
        }
    }
    let (inv, _) = coinvariant_subcomplex(p, &fcx, &fc.coactions)?;
    let invariant_dims = inv.cohomology().dims;

    let valid = |n: usize, m: usize| n < n_cap && (fc.finite || m < fc.top()) && n + m < k;
    let mut e2_ok = true;
    let mut column0 = true;
    for n in 0..=n_cap {
        for m in 0..=fc.top() {
            if !valid(n, m) {
                continue;
            }
            e2_ok &= pages_ii[0].dims[n][m] == e2_direct[n][m];
            let expect = if n == 0 { invariant_dims[m] } else { 0 };
            column0 &= pages_i[0].dims[n][m] == expect;
        }
    }
    checks.push(Check::expect("E₂ (II) = H_c^n(P; H^m(F)) entrywise", e2_ok, format!("{:?} vs {:?}", pages_ii[0].dims, e2_direct)));
    checks.push(Check::expect("E₂ (I) is concentrated in column 0 and equals H(ᶜᵒᴾF)", column0, format!("{:?}", pages_i[0].dims)));
    let limits_ok = (0..k).all(|s| s >= invariant_dims.len() || conv_i.antidiagonals[s] == invariant_dims[s]);
    checks.push(Check::expect("limit equals H(ᶜᵒᴾF)", limits_ok, format!("{:?} vs {:?}", conv_i.antidiagonals, invariant_dims)));

    Ok(VanEstReport {
        e2_direct,
        e2_i: pages_i[0].dims.clone(),
        e2_ii: pages_ii[0].dims.clone(),
        limit_i: pages_i.last().expect("pages").dims.clone(),
        limit_ii: pages_ii.last().expect("pages").dims.clone(),
        invariant_dims,
        convergence: vec![conv_i, conv_ii],
        exact_below: k,
        checks,
    })
}
