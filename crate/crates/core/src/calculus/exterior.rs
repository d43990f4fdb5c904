//! The braided exterior algebra on `L¹` and the forms `Ω^n = P⊗Λ^n`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{yd_braiding, Comodule, FinHopfAlgebra, ModuleAction, Side, YDModule};
use crate::linalg::{Mat, QuotientSpace, Subspace};

use super::ideal::CalculusIdeal;
use super::Dga;

#[derive(Clone, Debug)]
pub struct ExteriorCalculus {
    ideal: CalculusIdeal,
    cap: usize,
    l1_quotient: QuotientSpace,
    l1: YDModule,
    sigma: Mat,
    symmetric: Subspace,
    lambda: Vec<QuotientSpace>,
    actions: Vec<Mat>,
    coactions: Vec<Mat>,
    d: Vec<Mat>,
    generalized_defect: usize,
}

fn zero_check(what: &str, m: &Mat) -> Result<()> {
    match m.first_difference(&Mat::zeros(m.field(), m.rows(), m.cols())) {
        None => Ok(()),
        Some((i, j)) => Err(Error::IllDefined { what: what.into(), witness: format!("relation {j}, component {i}") }),
    }
}

/// Spanning set of `Σ_i V^{⊗i}⊗S⊗V^{⊗k-2-i}` in `V^{⊗k}`, `dim V = l`.
pub(crate) fn wedge_relations(f: FieldSpec, l: usize, symmetric: &Mat, k: usize) -> Mat {
    let dim = l.pow(k as u32);
    if k < 2 {
        return Mat::zeros(f, dim, 0);
    }
    let blocks: Vec<Mat> = (0..k - 1)
        .map(|i| Mat::kron_all(f, &[&Mat::identity(f, l.pow(i as u32)), symmetric, &Mat::identity(f, l.pow((k - 2 - i) as u32))]))
        .collect();
    Mat::hstack(f, dim, &blocks.iter().collect::<Vec<_>>())
}

/// `L¹`, `σ`, `Λ^0..=Λ^cap` and `d: Λ^n → Λ^{n+1}` for `n < cap`.
pub fn build_exterior(p: &FinHopfAlgebra, ideal: &CalculusIdeal, cap: usize) -> Result<ExteriorCalculus> {
    let f = p.field();
    let n = p.dim();
    let rb = ideal.subspace().basis();
    let l1_quotient = QuotientSpace::from_spanning(f, n, &Mat::hstack(f, n, &[p.unit(), rb]));
    let pi = l1_quotient.projection();
    let sec = l1_quotient.section();
    let l = l1_quotient.dim();

    // v◁q = π((s - ε(s))q) for a representative s of v
    let act = pi.mul(p.mult()).mul(&sec.kron(&p.id())).sub(&p.counit().mul(sec).kron(pi));
    let rho = pi.kron(&p.id()).mul(&p.ad_right()).mul(sec);
    let l1 = YDModule::new(
        p,
        Comodule::new(p, l, rho, Side::Right)?,
        ModuleAction::new(p, l, act, Side::Right)?,
    )?;
    let sigma = yd_braiding(p, &l1, &l1);
    let id2 = Mat::identity(f, l * l);
    let shifted = sigma.sub(&id2);
    let symmetric = Subspace::span(&shifted.kernel());
    let generalized_defect = shifted.mul(&shifted).kernel().cols() - symmetric.dim();

    let mut lambda = Vec::with_capacity(cap + 1);
    let mut actions = Vec::with_capacity(cap + 1);
    let mut coactions = Vec::with_capacity(cap + 1);
    let mut power = YDModule::trivial(p, 1);
    for k in 0..=cap {
        let dim = l.pow(k as u32);
        let q = QuotientSpace::from_spanning(f, dim, &wedge_relations(f, l, symmetric.basis(), k));
        let qrel = q.relations().basis();
        let tact = &power.action.action;
        let trho = &power.coaction.coaction;
        zero_check(&format!("right action on Λ^{k}"), &q.projection().mul(tact).mul(&qrel.kron(&p.id())))?;
        zero_check(&format!("right coaction on Λ^{k}"), &q.projection().kron(&p.id()).mul(trho).mul(qrel))?;
        actions.push(q.projection().mul(tact).mul(&q.section().kron(&p.id())));
        coactions.push(q.projection().kron(&p.id()).mul(trho).mul(q.section()));
        lambda.push(q);
        if k < cap {
            power = power.tensor(&l1, p);
        }
    }

    let mut ext = ExteriorCalculus { ideal: ideal.clone(), cap, l1_quotient, l1, sigma, symmetric, lambda, actions, coactions, d: Vec::new(), generalized_defect };
    if cap >= 1 {
        ext.d.push(Mat::zeros(f, l, 1));
    }
    if cap >= 2 {
        // d(ϖ(p)) = -ϖ(p₁)∧ϖ(p₂) on the presentation P → L¹
        let pi = ext.l1_quotient.projection();
        let q2 = ext.lambda[2].projection();
        let pres = q2.mul(&pi.kron(pi)).mul(p.comult()).scale_int(-1);
        zero_check("d on L¹ (presentation kills k·1 + R)", &pres.mul(&Mat::hstack(f, n, &[p.unit(), rb])))?;
        let d1 = pres.mul(ext.l1_quotient.section());
        if ext.coactions[2].mul(&d1) != d1.kron(&p.id()).mul(&ext.coactions[1]) {
            return Err(Error::identity("d: L¹ → Λ² is a right comodule map", "left-invariant forms"));
        }
        let lift = ext.lambda[2].section().mul(&d1);
        ext.d.push(d1);
        for k in 2..cap {
            let terms: Vec<Mat> = (0..k)
                .map(|i| {
                    let t = Mat::kron_all(f, &[&Mat::identity(f, l.pow(i as u32)), &lift, &Mat::identity(f, l.pow((k - 1 - i) as u32))]);
                    if i % 2 == 0 {
                        t
                    } else {
                        t.scale_int(-1)
                    }
                })
                .collect();
            let lifted = terms.iter().skip(1).fold(terms[0].clone(), |a, b| a.add(b));
            let qn = &ext.lambda[k];
            let qn1 = ext.lambda[k + 1].projection();
            zero_check(&format!("d on Λ^{k}"), &qn1.mul(&lifted).mul(qn.relations().basis()))?;
            ext.d.push(qn1.mul(&lifted).mul(qn.section()));
        }
    }
    Ok(ext)
}

impl ExteriorCalculus {
    pub fn field(&self) -> FieldSpec {
        self.sigma.field()
    }
    pub fn cap(&self) -> usize {
        self.cap
    }
    pub fn ideal(&self) -> &CalculusIdeal {
        &self.ideal
    }
    /// `P → L¹` (killing `k·1 + R`) and its section.
    pub fn l1_quotient(&self) -> &QuotientSpace {
        &self.l1_quotient
    }
    pub fn l1(&self) -> &YDModule {
        &self.l1
    }
    pub fn l1_dim(&self) -> usize {
        self.l1.dim()
    }
    pub fn sigma(&self) -> &Mat {
        &self.sigma
    }
    /// `ker(σ - id)` in `L¹⊗L¹`.
    pub fn symmetric(&self) -> &Subspace {
        &self.symmetric
    }
    /// `dim ker(σ - id)² - dim ker(σ - id)`.
    pub fn generalized_eigen_defect(&self) -> usize {
        self.generalized_defect
    }
    /// `Λ^k` as a quotient of `(L¹)^{⊗k}`.
    pub fn lambda(&self, k: usize) -> &QuotientSpace {
        &self.lambda[k]
    }
    pub fn lambda_dims(&self) -> Vec<usize> {
        self.lambda.iter().map(|q| q.dim()).collect()
    }
    /// Right action `Λ^k⊗P → Λ^k`.
    pub fn action(&self, k: usize) -> &Mat {
        &self.actions[k]
    }
    /// Right coaction `Λ^k → Λ^k⊗P`.
    pub fn coaction(&self, k: usize) -> &Mat {
        &self.coactions[k]
    }
    /// `d: Λ^k → Λ^{k+1}`.
    pub fn d(&self, k: usize) -> &Mat {
        &self.d[k]
    }

    /// `Λ^r⊗Λ^s → Λ^{r+s}` through the chosen sections.
    pub fn wedge(&self, r: usize, s: usize) -> Mat {
        self.lambda[r + s].projection().mul(&self.lambda[r].section().kron(self.lambda[s].section()))
    }

    /// The invariant forms `(Λ^•, d)` as a complex.
    pub fn invariant_complex(&self) -> Result<crate::cohomology::CochainComplex> {
        crate::cohomology::CochainComplex::new(self.field(), self.lambda_dims(), self.d.clone())
    }
}

/// `Ω^n = P⊗Λ^n` with `d(p⊗v) = p₁⊗ϖ(p₂)∧v + p⊗dv` and
/// `(p⊗v)(q⊗w) = pq₁ ⊗ (v◁q₂)∧w`. The result is checked.
pub fn build_omega(p: &FinHopfAlgebra, ext: &ExteriorCalculus) -> Result<Dga> {
    let f = p.field();
    let n = p.dim();
    let cap = ext.cap();
    let lam = ext.lambda_dims();
    let dims: Vec<usize> = lam.iter().map(|k| n * k).collect();
    let pi = ext.l1_quotient().projection();
    let mut d = Vec::with_capacity(cap);
    for k in 0..cap {
        let ik = Mat::identity(f, lam[k]);
        let left = p.id().kron(&ext.wedge(1, k)).mul(&p.id().kron(pi).kron(&ik)).mul(&p.comult().kron(&ik));
        d.push(left.add(&p.id().kron(ext.d(k))));
    }
    let mut products = BTreeMap::new();
    for r in 0..=cap {
        for s in 0..=cap - r {
            let (a, b) = (lam[r], lam[s]);
            let spread = Mat::kron_all(f, &[&p.id(), &Mat::identity(f, a), p.comult(), &Mat::identity(f, b)]);
            let perm = Mat::perm_legs(f, &[n, a, n, n, b], &[0, 2, 1, 3, 4]);
            let apply = Mat::kron_all(f, &[p.mult(), ext.action(r), &Mat::identity(f, b)]);
            let prod = p.id().kron(&ext.wedge(r, s)).mul(&apply).mul(&perm).mul(&spread);
            products.insert((r, s), prod);
        }
    }
    let unit = p.unit().kron(&Mat::identity(f, 1));
    let dga = Dga::new(f, dims, d, products, cap, unit)?;
    dga.check()?;
    if cap >= 1 {
        y_map(p, ext)?;
    }
    Ok(dga)
}

/// Left coaction `Δ⊗id` on `Ω^k = P⊗Λ^k`.
pub fn omega_coaction(p: &FinHopfAlgebra, ext: &ExteriorCalculus, k: usize) -> Mat {
    p.comult().kron(&Mat::identity(p.field(), ext.lambda(k).dim()))
}

/// `Y(ξ) = ξ₋₂ ⊗ S(ξ₋₁)·ξ₀`, `Ω^1 → P⊗L¹`; checked to be bijective with
/// `S(ξ₋₁)·ξ₀` left-invariant.
pub fn y_map(p: &FinHopfAlgebra, ext: &ExteriorCalculus) -> Result<Mat> {
    let f = p.field();
    let l = ext.l1_dim();
    let il = Mat::identity(f, l);
    let lam = omega_coaction(p, ext, 1);
    let left_action = p.mult().kron(&il);
    // ξ ↦ ξ₋₂ ⊗ ξ₋₁ ⊗ ξ₀ ↦ ξ₋₂ ⊗ S(ξ₋₁)·ξ₀
    let lam2 = p.comult().kron(&p.id()).kron(&il).mul(&lam);
    let inner = p.id().kron(&left_action.mul(&p.antipode().kron(&p.id()).kron(&il))).mul(&lam2);
    // S(ξ₋₁)·ξ₀ must be 1⊗v
    let invariant = p.id().kron(&p.unit().mul(p.counit()).kron(&il)).mul(&inner);
    if invariant != inner {
        return Err(Error::identity("S(ξ₋₁)·ξ₀ is left-invariant", "Y map"));
    }
    let y = p.id().kron(&p.counit().kron(&il)).mul(&inner);
    if y.rank() != y.rows() || y.rows() != y.cols() {
        return Err(Error::identity("Y is a bijection Ω^1 → P⊗L¹", "rank"));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn fz2_exterior_dims() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 2).unwrap();
        assert_eq!(ext.lambda_dims(), vec![1, 1, 0]);
        assert!(ext.d(1).is_zero());
        let om = build_omega(&p, &ext).unwrap();
        assert_eq!(om.dims(), &[2, 2, 0]);
        assert!(om.d(0).mul(p.unit()).is_zero());
    }

    #[test]
    fn fz3_is_classical_exterior_algebra() {
        let p = function_algebra(&FiniteGroup::cyclic(3), Q).unwrap();
        let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 3).unwrap();
        assert_eq!(ext.lambda_dims(), vec![1, 2, 1, 0]);
        assert_eq!(ext.sigma(), &Mat::flip(Q, 2, 2));
        assert_eq!(ext.symmetric().dim(), 3);
        build_omega(&p, &ext).unwrap();
    }

    #[test]
    fn sweedler_zero_ideal_is_not_closed_under_d() {
        let p = sweedler(Q).unwrap();
        let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 2).unwrap();
        assert_eq!(ext.lambda_dims(), vec![1, 3, 6]);
        let s = ext.sigma();
        let i = Mat::identity(Q, ext.l1_dim());
        let (a, b) = (s.kron(&i), i.kron(s));
        assert_eq!(a.mul(&b).mul(&a), b.mul(&a).mul(&b));
        match build_exterior(&p, &CalculusIdeal::zero(&p), 3) {
            Err(Error::IllDefined { .. }) => {}
            other => panic!("expected IllDefined, got {other:?}"),
        }
    }

    fn sweedler_ideal(p: &FinHopfAlgebra, cols: &[[i64; 4]]) -> CalculusIdeal {
        let rows: Vec<Vec<i64>> = (0..4).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        crate::calculus::check_ideal(p, &Mat::from_ints(Q, &rows)).unwrap()
    }

    #[test]
    fn sweedler_nonzero_ideals() {
        let p = sweedler(Q).unwrap();
        // labels 1, x, g, gx
        let r = sweedler_ideal(&p, &[[0, 1, 0, 1]]);
        let ext = build_exterior(&p, &r, 3).unwrap();
        assert_eq!(ext.lambda_dims(), vec![1, 2, 1, 0]);
        assert_eq!(ext.generalized_eigen_defect(), 1);
        for k in 1..3 {
            assert!(ext.d(k).mul(ext.d(k - 1)).is_zero());
        }
        build_omega(&p, &ext).unwrap().check().unwrap();

        let r = sweedler_ideal(&p, &[[1, 0, -1, 0], [0, 1, 0, -1]]);
        let ext = build_exterior(&p, &r, 3).unwrap();
        assert_eq!(ext.lambda_dims(), vec![1, 1, 1, 1]);
        build_omega(&p, &ext).unwrap().check().unwrap();
    }
}
