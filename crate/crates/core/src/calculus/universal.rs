use std::collections::BTreeMap;

use crate::error::Result;
use crate::linalg::{Mat, QuotientSpace};

use super::{Algebra, Dga};

/// `Ω_u^n = A⊗Ā^{⊗n}` with `Ā = A/k·1`, `d(a₀⊗ā₁…) = 1⊗ā₀⊗ā₁…`, and products
/// for `r + s ≤ product_cap`.
pub fn universal_calculus(a: &Algebra, cap: usize, product_cap: usize) -> Result<Dga> {
    let f = a.field;
    let n = a.dim;
    let bar = QuotientSpace::from_spanning(f, n, &a.unit);
    let pi = bar.projection();
    let sec = bar.section();
    let nb = bar.dim();
    let dims: Vec<usize> = (0..=cap).map(|k| n * nb.pow(k as u32)).collect();
    let d: Vec<Mat> = (0..cap)
        .map(|k| a.unit.kron(pi).kron(&Mat::identity(f, nb.pow(k as u32))))
        .collect();
    let pc = product_cap.min(cap);
    // right multiplication ρ_r: Ω^r⊗A → Ω^r via (ω dā)b = ω d(ab) - (ωa) db
    let mut rho = vec![a.mult.clone()];
    for r in 1..=pc {
        let prev_dim = dims[r - 1];
        let first = Mat::identity(f, prev_dim).kron(&pi.mul(&a.mult).mul(&sec.kron(&Mat::identity(f, n))));
        let second = rho[r - 1].mul(&Mat::identity(f, prev_dim).kron(sec)).kron(pi);
        rho.push(first.sub(&second));
    }
    let mut products = BTreeMap::new();
    for r in 0..=pc {
        for s in 0..=pc - r {
            products.insert((r, s), rho[r].kron(&Mat::identity(f, nb.pow(s as u32))));
        }
    }
    Dga::new(f, dims, d, products, pc, a.unit.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn dim_two_algebra() {
        let a = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap().algebra();
        let u = universal_calculus(&a, 3, 3).unwrap();
        assert_eq!(u.dims(), &[2, 2, 2, 2]);
        u.check().unwrap();
        assert!(u.d(0).mul(&a.unit).is_zero());
        assert_eq!(u.de_rham().exact_dims(), &[1, 0, 0]);
    }

    #[test]
    fn sweedler_universal_is_a_dga() {
        let a = sweedler(Q).unwrap().algebra();
        let u = universal_calculus(&a, 3, 3).unwrap();
        u.check().unwrap();
        assert_eq!(u.de_rham().exact_dims(), &[1, 0, 0]);
    }
}
