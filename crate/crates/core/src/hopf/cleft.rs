//! Cleft extensions `F ≅ P ⊗ M` with `M` the coinvariants.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

use super::comodule::{coinvariants, Comodule, Side};
use super::FinHopfAlgebra;

/// An algebra `F` with a left coaction `λ: F → P⊗F` by algebra maps.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub dim: usize,
    pub mult: Mat,
    pub unit: Mat,
    pub coaction: Mat,
}

impl ComoduleAlgebra {
    pub fn new(p: &FinHopfAlgebra, dim: usize, mult: Mat, unit: Mat, coaction: Mat) -> Result<ComoduleAlgebra> {
        let f = p.field();
        let n = p.dim();
        let c = Comodule::new(p, dim, coaction.clone(), Side::Left)?;
        let i = Mat::identity(f, dim);
        if mult.shape() != (dim, dim * dim) || unit.shape() != (dim, 1) {
            return Err(Error::Shape("comodule algebra structure maps".into()));
        }
        if mult.mul(&mult.kron(&i)) != mult.mul(&i.kron(&mult))
            || mult.mul(&unit.kron(&i)) != i
            || mult.mul(&i.kron(&unit)) != i
        {
            return Err(Error::identity("comodule algebra", "F is not a unital associative algebra"));
        }
        let perm = Mat::perm_legs(f, &[n, dim, n, dim], &[0, 2, 1, 3]);
        let lhs = c.coaction.mul(&mult);
        let rhs = p.mult().kron(&mult).mul(&perm).mul(&c.coaction.kron(&c.coaction));
        if lhs != rhs || c.coaction.mul(&unit) != p.unit().kron(&unit) {
            return Err(Error::identity("comodule algebra", "λ is not an algebra map"));
        }
        Ok(ComoduleAlgebra { dim, mult, unit, coaction })
    }

    /// `P` over itself via `Δ`.
    pub fn regular(p: &FinHopfAlgebra) -> ComoduleAlgebra {
        ComoduleAlgebra { dim: p.dim(), mult: p.mult().clone(), unit: p.unit().clone(), coaction: p.comult().clone() }
    }

    pub fn comodule(&self) -> Comodule {
        Comodule { dim: self.dim, coaction: self.coaction.clone(), side: Side::Left }
    }
}

#[derive(Clone, Debug)]
pub struct CleftData {
    pub total: ComoduleAlgebra,
    pub phi: Mat,
    pub phi_inverse: Mat,
    /// Coinvariant subalgebra `M`.
    pub coinvariants: Subspace,
    /// `F → P⊗M`.
    pub theta: Mat,
    /// `P⊗M → F`.
    pub theta_inverse: Mat,
    /// `μ: P⊗F → F`, `μ(p⊗f) = Φ(pf₋₂)Φ⁻¹(f₋₁)f₀`.
    pub action: Mat,
}

/// Build `Φ⁻¹`, `Θ`, `Θ⁻¹` and the Hopf-module action, and verify the identities.
pub fn cleft_extension(p: &FinHopfAlgebra, total: &ComoduleAlgebra, phi: &Mat) -> Result<CleftData> {
    let fld = p.field();
    let (n, d) = (p.dim(), total.dim);
    if phi.shape() != (d, n) {
        return Err(Error::Shape(format!("Φ is {:?}, expected {:?}", phi.shape(), (d, n))));
    }
    if phi.mul(p.unit()) != total.unit {
        return Err(Error::identity("Φ(1) = 1", "unit"));
    }
    if total.coaction.mul(phi) != p.id().kron(phi).mul(p.comult()) {
        return Err(Error::identity("Φ left colinear", "colinearity"));
    }
    let mf = &total.mult;
    let target = total.unit.mul(p.counit());
    // unknown Ψ (d x n): m(Φ⊗Ψ)Δ = uε and m(Ψ⊗Φ)Δ = uε, linear in the entries of Ψ
    let mut cols = Vec::with_capacity(d * n);
    for a in 0..d {
        for b in 0..n {
            let e = Mat::from_triplets(fld, d, n, [(a, b, fld.one())]);
            let left = mf.mul(&phi.kron(&e)).mul(p.comult());
            let right = mf.mul(&e.kron(phi)).mul(p.comult());
            cols.push(vectorise(&left).into_iter().chain(vectorise(&right).into_iter().map(|(i, s)| (i + d * n, s))).collect());
        }
    }
    let system = Mat::from_columns(fld, 2 * d * n, cols);
    let rhs_vec: Vec<_> = vectorise(&target).into_iter().chain(vectorise(&target).into_iter().map(|(i, s)| (i + d * n, s))).collect();
    let rhs = Mat::from_columns(fld, 2 * d * n, vec![rhs_vec]);
    let sol = system.solve(&rhs).ok_or_else(|| Error::NotCleft("Φ has no convolution inverse".into()))?;
    let phi_inverse = Mat::from_triplets(fld, d, n, sol.col(0).iter().map(|(k, s)| (k / n, k % n, s.clone())));

    let lam = &total.coaction;
    let id_f = Mat::identity(fld, d);
    let lam2 = p.comult().kron(&id_f).mul(lam);
    let m_coinv = coinvariants(p, &total.comodule());
    let mb = m_coinv.basis().clone();
    let coords = m_coinv.coordinate_map();
    // f ↦ f₋₂ ⊗ Φ⁻¹(f₋₁)f₀
    let raw_theta = p.id().kron(&mf.mul(&phi_inverse.kron(&id_f))).mul(&lam2);
    let proj = p.id().kron(&mb.mul(&coords));
    if proj.mul(&raw_theta) != raw_theta {
        return Err(Error::identity("Θ lands in P⊗M", "theta image"));
    }
    let theta = p.id().kron(&coords).mul(&raw_theta);
    let theta_inverse = mf.mul(&phi.kron(&mb));
    if !theta.mul(&theta_inverse).is_identity() || !theta_inverse.mul(&theta).is_identity() {
        return Err(Error::identity("Θ∘Θ⁻¹ = id and Θ⁻¹∘Θ = id", "theta"));
    }

    // μ(p⊗f) = Φ(p f₋₂) Φ⁻¹(f₋₁) f₀
    let spread = p.id().kron(&lam2);
    let mul_first = p.mult().kron(&Mat::identity(fld, n * d));
    let mf3 = mf.mul(&mf.kron(&id_f));
    let action = mf3.mul(&phi.kron(&phi_inverse).kron(&id_f)).mul(&mul_first).mul(&spread);
    let rhs = p.mult().kron(&action).mul(&Mat::perm_legs(fld, &[n, n, n, d], &[0, 2, 1, 3])).mul(&p.comult().kron(lam));
    if lam.mul(&action) != rhs {
        return Err(Error::identity("λ(μ(p⊗f)) = p₁f₋₁⊗μ(p₂⊗f₀)", "Hopf module action"));
    }

    let data = CleftData { total: total.clone(), phi: phi.clone(), phi_inverse, coinvariants: m_coinv, theta, theta_inverse, action };
    data.check_product(p)?;
    Ok(data)
}

fn vectorise(m: &Mat) -> Vec<(usize, crate::field::Scalar)> {
    let c = m.cols();
    let mut out: Vec<_> = (0..c).flat_map(|j| m.col(j).iter().map(move |(i, s)| (i * c + j, s.clone()))).collect();
    out.sort_by_key(|e| e.0);
    out
}

impl CleftData {
    /// `(p⊗x)(q⊗y) = p₁q₁ ⊗ Φ⁻¹(p₂q₂)Φ(p₃)xΦ(q₃)y` matches the product of `F` through `Θ`.
    fn check_product(&self, p: &FinHopfAlgebra) -> Result<()> {
        let fld = p.field();
        let (n, d) = (p.dim(), self.total.dim);
        let mb = self.coinvariants.basis();
        let id_f = Mat::identity(fld, d);
        let d3 = p.comult_n(3);
        let spread = Mat::kron_all(fld, &[&d3, mb, &d3, mb]);
        // [p1,p2,p3,x,q1,q2,q3,y] -> [p1,q1,p2,q2,p3,x,q3,y]
        let perm = Mat::perm_legs(fld, &[n, n, n, d, n, n, n, d], &[0, 4, 1, 5, 2, 3, 6, 7]);
        let legs = Mat::kron_all(
            fld,
            &[p.mult(), &self.phi_inverse.mul(p.mult()), &self.phi, &id_f, &self.phi, &id_f],
        );
        let mut mf5 = self.total.mult.clone();
        for _ in 2..5 {
            mf5 = self.total.mult.mul(&mf5.kron(&id_f));
        }
        let formula = p.id().kron(&mf5).mul(&legs).mul(&perm).mul(&spread);
        let coords = self.coinvariants.coordinate_map();
        let through = self.theta.mul(&self.total.mult).mul(&self.theta_inverse.kron(&self.theta_inverse));
        let lifted = p.id().kron(&mb.mul(&coords)).mul(&formula);
        if lifted != formula {
            return Err(Error::identity("transported product lands in P⊗M", "product"));
        }
        if p.id().kron(&coords).mul(&formula) != through {
            return Err(Error::identity("transported product", "product of F through Θ"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    pub(crate) fn z4_over_z2() -> (FinHopfAlgebra, ComoduleAlgebra) {
        let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let z4 = group_algebra(&FiniteGroup::cyclic(4), Q).unwrap();
        let lam = Mat::from_triplets(Q, 8, 4, (0..4).map(|i| ((i % 2) * 4 + i, i, Q.one())));
        let f = ComoduleAlgebra::new(&p, 4, z4.mult().clone(), z4.unit().clone(), lam).unwrap();
        (p, f)
    }

    #[test]
    fn z4_over_z2_is_cleft() {
        let (p, f) = z4_over_z2();
        let phi = Mat::from_ints(Q, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]);
        let c = cleft_extension(&p, &f, &phi).unwrap();
        assert_eq!(c.coinvariants.dim(), 2);
        let expected = Mat::from_ints(Q, &[vec![1, 0], vec![0, 0], vec![0, 1], vec![0, 0]]);
        assert!(c.coinvariants.same_as(&Subspace::span(&expected)));
    }

    #[test]
    fn identity_section_on_regular() {
        let p = sweedler(Q).unwrap();
        let c = cleft_extension(&p, &ComoduleAlgebra::regular(&p), &p.id()).unwrap();
        assert_eq!(c.coinvariants.dim(), 1);
    }

    #[test]
    fn zero_section_is_not_cleft() {
        let (p, f) = z4_over_z2();
        let phi = Mat::from_ints(Q, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 0]]);
        assert!(matches!(cleft_extension(&p, &f, &phi), Err(Error::NotCleft(_))));
    }
}
