use serde::Serialize;

use crate::calculus::{tensor_dga, Dga};
use crate::error::Result;
use crate::linalg::Mat;
use crate::report::Check;

#[derive(Clone, Debug, Serialize)]
pub struct KunnethReport {
    pub left_dims: Vec<usize>,
    pub right_dims: Vec<usize>,
    pub tensor_dims: Vec<usize>,
    pub convolution: Vec<usize>,
    /// Degrees below this are exact and asserted.
    pub exact_below: usize,
    pub checks: Vec<Check>,
}

/// `dim H^n(N⊗M) = Σ_r dim H^r(N)·dim H^{n-r}(M)` and `[ω]⊗[ξ] ↦ [ω⊗ξ]` is
/// bijective, for every exact degree.
pub fn kunneth_check(n_dga: &Dga, m_dga: &Dga) -> Result<KunnethReport> {
    let t = tensor_dga(n_dga, m_dga)?;
    let cap = t.dga.cap();
    let f = t.dga.field();
    let hn = n_dga.complex().truncate(cap).cohomology();
    let hm = m_dga.complex().truncate(cap).cohomology();
    let ht = t.dga.de_rham();
    let convolution: Vec<usize> = (0..=cap).map(|n| (0..=n).map(|r| hn.dims[r] * hm.dims[n - r]).sum()).collect();
    let mut checks = Vec::new();
    for n in 0..cap {
        checks.push(Check::expect(
            format!("degree {n}: dim H(N⊗M) = convolution"),
            ht.dims[n] == convolution[n],
            format!("{} vs {}", ht.dims[n], convolution[n]),
        ));
        let cols: Vec<Mat> = (0..=n)
            .map(|r| ht.classify(n, &t.inclusion(n, r).mul(&hn.representatives[r].kron(&hm.representatives[n - r]))))
            .collect();
        let refs: Vec<&Mat> = cols.iter().collect();
        let k = Mat::hstack(f, ht.dims[n], &refs);
        let iso = k.rows() == k.cols() && k.rank() == k.rows();
        checks.push(Check::expect(format!("degree {n}: [ω]⊗[ξ] ↦ [ω⊗ξ] is bijective"), iso, format!("rank {} of {}×{}", k.rank(), k.rows(), k.cols())));
    }
    Ok(KunnethReport {
        left_dims: hn.dims.clone(),
        right_dims: hm.dims.clone(),
        tensor_dims: ht.dims.clone(),
        convolution,
        exact_below: cap,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;
    use crate::report::all_passed;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn fz2() -> Dga {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 3).unwrap();
        build_omega(&p, &ext).unwrap()
    }

    #[test]
    fn base_field_factor() {
        let r = kunneth_check(&Dga::trivial(Q, 3), &fz2()).unwrap();
        assert!(all_passed(&r.checks));
        assert_eq!(r.tensor_dims, r.right_dims);
    }

    #[test]
    fn fz2_squared() {
        let r = kunneth_check(&fz2(), &fz2()).unwrap();
        assert!(all_passed(&r.checks), "{:?}", r.checks);
        assert_eq!(&r.tensor_dims[..3], &[1, 2, 1]);
    }

    #[test]
    fn universal_times_bicovariant() {
        let a = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap().algebra();
        let u = universal_calculus(&a, 3, 1).unwrap();
        let r = kunneth_check(&u, &fz2()).unwrap();
        assert!(all_passed(&r.checks), "{:?}", r.checks);
        assert_eq!(&r.tensor_dims[..3], &[1, 1, 0]);
    }
}
