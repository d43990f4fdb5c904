use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Mat;

use super::Dga;

/// `Ω^n(N⊗M) = ⊕_r Ω^r N ⊗ Ω^{n-r} M`, blocks ordered by `r` ascending.
#[derive(Clone, Debug)]
pub struct TensorDga {
    pub dga: Dga,
    /// `offsets[n][r]`: start of the `(r, n-r)` block inside `Ω^n`.
    offsets: Vec<Vec<usize>>,
    left_dims: Vec<usize>,
    right_dims: Vec<usize>,
    dims: Vec<usize>,
}

impl TensorDga {
    fn block_dim(&self, r: usize, s: usize) -> usize {
        self.left_dims[r] * self.right_dims[s]
    }

    /// Projection `Π_r: Ω^n(N⊗M) → Ω^r N⊗Ω^{n-r} M`.
    pub fn projection(&self, n: usize, r: usize) -> Mat {
        let f = self.dga.field();
        let b = self.block_dim(r, n - r);
        Mat::identity(f, b).embed(b, self.dims[n], 0, self.offsets[n][r])
    }

    /// Inclusion of the `(r, n-r)` block.
    pub fn inclusion(&self, n: usize, r: usize) -> Mat {
        self.projection(n, r).transpose()
    }
}

/// Tensor product of DGAs with `d = d⊗id + (-1)^r id⊗d` and the Koszul sign
/// `(ω⊗ξ)(ω'⊗ξ') = (-1)^{|ξ||ω'|} ωω'⊗ξξ'`. Caps are reduced to the minimum.
pub fn tensor_dga(n_dga: &Dga, m_dga: &Dga) -> Result<TensorDga> {
    if n_dga.field() != m_dga.field() {
        return Err(Error::FieldMismatch(n_dga.field().name(), m_dga.field().name()));
    }
    let f = n_dga.field();
    let cap = n_dga.cap().min(m_dga.cap());
    let pc = n_dga.product_cap().min(m_dga.product_cap()).min(cap);
    let ld: Vec<usize> = n_dga.dims()[..=cap].to_vec();
    let rd: Vec<usize> = m_dga.dims()[..=cap].to_vec();
    let mut offsets = Vec::with_capacity(cap + 1);
    let mut dims = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut off = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for r in 0..=n {
            off.push(acc);
            acc += ld[r] * rd[n - r];
        }
        offsets.push(off);
        dims.push(acc);
    }
    let t = TensorDga { dga: Dga::trivial(f, 0), offsets, left_dims: ld.clone(), right_dims: rd.clone(), dims: dims.clone() };
    let place = |m: &Mat, n_out: usize, r_out: usize, n_in: usize, r_in: usize| {
        m.embed(dims[n_out], dims[n_in], t.offsets[n_out][r_out], t.offsets[n_in][r_in])
    };
    let mut d = Vec::with_capacity(cap);
    for n in 0..cap {
        let mut acc = Mat::zeros(f, dims[n + 1], dims[n]);
        for r in 0..=n {
            let s = n - r;
            let left = n_dga.d(r).kron(&Mat::identity(f, rd[s]));
            acc = acc.add(&place(&left, n + 1, r + 1, n, r));
            let right = Mat::identity(f, ld[r]).kron(m_dga.d(s));
            let right = if r % 2 == 0 { right } else { right.scale_int(-1) };
            acc = acc.add(&place(&right, n + 1, r, n, r));
        }
        d.push(acc);
    }
    let mut products = BTreeMap::new();
    for a in 0..=pc {
        for b in 0..=pc - a {
            let mut acc = Mat::zeros(f, dims[a + b], dims[a] * dims[b]);
            for r1 in 0..=a {
                let s1 = a - r1;
                for r2 in 0..=b {
                    let s2 = b - r2;
                    // ω⊗ξ⊗ω'⊗ξ' → ω⊗ω'⊗ξ⊗ξ' → ωω'⊗ξξ'
                    let perm = Mat::perm_legs(f, &[ld[r1], rd[s1], ld[r2], rd[s2]], &[0, 2, 1, 3]);
                    let core = n_dga.product(r1, r2).kron(m_dga.product(s1, s2)).mul(&perm);
                    let core = if (s1 * r2) % 2 == 0 { core } else { core.scale_int(-1) };
                    let src = t.projection(a, r1).kron(&t.projection(b, r2));
                    let dst = t.inclusion(a + b, r1 + r2);
                    acc = acc.add(&dst.mul(&core).mul(&src));
                }
            }
            products.insert((a, b), acc);
        }
    }
    let unit = n_dga.unit().kron(m_dga.unit());
    let dga = Dga::new(f, dims, d, products, pc, unit)?;
    Ok(TensorDga { dga, ..t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::universal_calculus;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn trivial_factor_is_identity() {
        let a = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap().algebra();
        let m = universal_calculus(&a, 2, 2).unwrap();
        let t = tensor_dga(&Dga::trivial(Q, 2), &m).unwrap();
        assert_eq!(t.dga.dims(), m.dims());
        for n in 0..2 {
            assert_eq!(t.dga.d(n), m.d(n));
        }
    }

    #[test]
    fn universal_fz2_squared() {
        let a = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap().algebra();
        let m = universal_calculus(&a, 2, 2).unwrap();
        let t = tensor_dga(&m, &m).unwrap();
        // (2,2,2) * (2,2,2) truncated: 4, 8, 12
        assert_eq!(t.dga.dims(), &[4, 8, 12]);
        t.dga.check().unwrap();
    }

    #[test]
    fn bicovariant_fz2_squared() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let ext = crate::calculus::build_exterior(&p, &crate::calculus::CalculusIdeal::zero(&p), 2).unwrap();
        let om = crate::calculus::build_omega(&p, &ext).unwrap();
        assert_eq!(om.dims(), &[2, 2, 0]);
        let t = tensor_dga(&om, &om).unwrap();
        assert_eq!(t.dga.dims(), &[4, 8, 4]);
        t.dga.check().unwrap();
    }
}
