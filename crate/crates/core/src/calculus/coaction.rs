use crate::error::{Error, Result};
use crate::hopf::FinHopfAlgebra;
use crate::linalg::{Mat, QuotientSpace};

use super::{Dga, TensorDga};

/// `λ_*: Ω^n M → Ω^n(P⊗M)` and `λ̄ = Π_0∘λ_*: Ω^n M → P⊗Ω^n M`.
#[derive(Clone, Debug)]
pub struct ExtendedCoaction {
    pub lambda_star: Vec<Mat>,
    pub lambda_bar: Vec<Mat>,
}

/// Extend an algebra coaction `λ: M → P⊗M` to forms by
/// `a₀da₁…daₙ ↦ λ(a₀)dλ(a₁)…dλ(aₙ)`, checking that the kernel of the
/// presentation is respected and that `λ_*` is a cochain map.
pub fn extend_coaction(p: &FinHopfAlgebra, lambda: &Mat, omega_m: &Dga, omega_pm: &TensorDga) -> Result<ExtendedCoaction> {
    let f = p.field();
    let pm = &omega_pm.dga;
    let dm = omega_m.dim(0);
    let cap = omega_m.cap().min(pm.cap()).min(omega_m.product_cap()).min(pm.product_cap());
    if lambda.shape() != (p.dim() * dm, dm) || pm.dim(0) != p.dim() * dm {
        return Err(Error::Shape("coaction does not match the calculi".into()));
    }
    if lambda.mul(omega_m.product(0, 0)) != pm.product(0, 0).mul(&lambda.kron(lambda)) {
        return Err(Error::NotDifferentiable("λ is not an algebra map".into()));
    }
    let bar = QuotientSpace::from_spanning(f, dm, omega_m.unit());
    let sec = bar.section();
    let da_m = omega_m.d(0).mul(sec);
    let da_pm = if cap > 0 { Some(pm.d(0).mul(lambda).mul(sec)) } else { None };

    let mut phi = Mat::identity(f, dm);
    let mut g = lambda.clone();
    let mut lambda_star = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        if n > 0 {
            phi = omega_m.product(n - 1, 1).mul(&phi.kron(&da_m));
            g = pm.product(n - 1, 1).mul(&g.kron(da_pm.as_ref().expect("cap > 0")));
        }
        let right_inv = phi
            .solve(&Mat::identity(f, omega_m.dim(n)))
            .ok_or_else(|| Error::identity(format!("density in degree {n}"), "a₀da₁…daₙ do not span"))?;
        let kernel = phi.kernel();
        let leak = g.mul(&kernel);
        if let Some((_, j)) = leak.first_difference(&Mat::zeros(f, leak.rows(), leak.cols())) {
            return Err(Error::NotDifferentiable(format!("degree {n}, relation {j} of the presentation is not preserved")));
        }
        lambda_star.push(g.mul(&right_inv));
    }
    for n in 0..cap {
        if pm.d(n).mul(&lambda_star[n]) != lambda_star[n + 1].mul(omega_m.d(n)) {
            return Err(Error::identity(format!("λ_* is a cochain map in degree {n}"), "λ_*∘d = d∘λ_*"));
        }
    }
    let lambda_bar = lambda_star.iter().enumerate().map(|(n, l)| omega_pm.projection(n, 0).mul(l)).collect();
    Ok(ExtendedCoaction { lambda_star, lambda_bar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::exterior::omega_coaction;
    use crate::calculus::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_coaction_on_bicovariant_forms() {
        for order in [2, 3] {
            let p = function_algebra(&FiniteGroup::cyclic(order), Q).unwrap();
            let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 2).unwrap();
            let om = build_omega(&p, &ext).unwrap();
            let t = tensor_dga(&om, &om).unwrap();
            let ec = extend_coaction(&p, p.comult(), &om, &t).unwrap();
            for n in 0..=2 {
                assert_eq!(ec.lambda_bar[n], omega_coaction(&p, &ext, n));
            }
        }
    }

    #[test]
    fn universal_calculi_always_extend() {
        let p = sweedler(Q).unwrap();
        let u = universal_calculus(&p.algebra(), 2, 2).unwrap();
        let t = tensor_dga(&u, &u).unwrap();
        extend_coaction(&p, p.comult(), &u, &t).unwrap();
    }
}
