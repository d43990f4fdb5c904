//! The Hopf-Lie algebra `𝔤 = (L¹)*` of a bicovariant calculus, its bracket,
//! the map `T` on `𝔤∧𝔤`, and the Hopf-Lie cochain complex.
//!
//! One-forms are modelled as `Ω¹ = P⊗L¹`. A right-linear functional
//! `ψ: Ω¹ → k` is determined by `α = ψ|_{L¹}` through
//! `ψ(q⊗v) = α(v◁S⁻¹(q))`. Pairings between `𝔤^{⊗n}` and `(L¹)^{⊗n}` are
//! inside-out: `α_1⊗…⊗α_n` against `ξ_1⊗…⊗ξ_n` is `Π α_{n+1-i}(ξ_i)`.

mod complex;

pub use complex::{hl_cohomology_iso_check, hl_complex, Construction, HLComplex, HlIsoReport};

use crate::calculus::exterior::wedge_relations;
use crate::calculus::ExteriorCalculus;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{yd_braiding, yd_dual, FinHopfAlgebra, YDModule};
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct HopfLieAlgebra {
    field: FieldSpec,
    g: YDModule,
    sigma_g: Mat,
    bracket: Mat,
    wedge: Vec<QuotientSpace>,
    paired: Vec<bool>,
    t: Option<Mat>,
    checks: Vec<Check>,
}

/// Gram matrix of the inside-out pairing on `n`-fold tensors of an
/// `l`-dimensional space and its dual.
pub fn inside_pairing(f: FieldSpec, l: usize, n: usize) -> Mat {
    let order: Vec<usize> = (0..n).rev().collect();
    Mat::perm_legs(f, &vec![l; n], &order)
}

/// `J(q⊗v) = v◁S⁻¹(q)`, `Ω¹ → L¹`.
fn restriction(p: &FinHopfAlgebra, ext: &ExteriorCalculus) -> Result<Mat> {
    let f = p.field();
    let l = ext.l1_dim();
    let s_inv = p.s_inv("the Hopf-Lie algebra")?;
    let act = &ext.l1().action.action;
    Ok(act.mul(&Mat::identity(f, l).kron(s_inv)).mul(&Mat::perm_legs(f, &[p.dim(), l], &[1, 0])))
}

/// The bracket as a tensor `M: Ω¹ → L¹⊗L¹` with
/// `[α,β](ξ) = (α⊗β)(Mξ)`.
fn bracket_tensor(p: &FinHopfAlgebra, ext: &ExteriorCalculus, j: &Mat) -> Mat {
    let f = p.field();
    let (n, l) = (p.dim(), ext.l1_dim());
    let il = Mat::identity(f, l);
    let pi = ext.l1_quotient().projection();
    let d0 = p.id().kron(pi).mul(p.comult());
    let lambda = p.comult().kron(&il);
    // α(d(ξ₋₁)) β(ξ₀)
    let first = j.mul(&d0).kron(j).mul(&lambda);
    // ρ(q⊗v) = q₁⊗v₀⊗q₂v₁
    let rho_l = &ext.l1().coaction.coaction;
    let rho = Mat::identity(f, n * l)
        .kron(p.mult())
        .mul(&Mat::perm_legs(f, &[n, n, l, n], &[0, 2, 1, 3]))
        .mul(&p.comult().kron(rho_l));
    // ξ₋₁ ⊗ ξ₀ ⊗ ξ₁ ⊗ ξ₂, reordered to ξ₋₁ ⊗ ξ₁ ⊗ ξ₂ ⊗ ξ₀
    let spread = lambda.kron(p.comult()).mul(&rho);
    let reorder = Mat::perm_legs(f, &[n, n * l, n, n], &[0, 2, 3, 1]);
    // α(ξ₋₁S(ξ₁)·dξ₂) β(ξ₀)
    let left_action = p.mult().kron(&il);
    let inner = j.mul(&left_action).mul(&p.mult().mul(&p.id().kron(p.antipode())).kron(&d0));
    let second = inner.kron(j).mul(&reorder).mul(&spread);
    first.sub(&second)
}

/// `−(π⊗π)Δ`, a lift of `d: L¹ → Λ²` to `L¹⊗L¹`.
fn d_lift(p: &FinHopfAlgebra, ext: &ExteriorCalculus) -> Mat {
    let q = ext.l1_quotient();
    q.projection().kron(q.projection()).mul(p.comult()).mul(q.section()).scale_int(-1)
}

/// Build `𝔤`, its bracket and braiding, and `Λ^n𝔤` for `n ≤ ext.cap()`.
///
/// Checks right `P`-linearity of every bracket, the braided-evaluation form
/// of the bracket, and duality of the braidings on `𝔤` and `L¹`; a failure
/// is an error.
pub fn build_hopf_lie(p: &FinHopfAlgebra, ext: &ExteriorCalculus) -> Result<HopfLieAlgebra> {
    let f = p.field();
    let l = ext.l1_dim();
    let g = yd_dual(p, ext.l1())?;
    let sigma_g = yd_braiding(p, &g, &g);
    let j = restriction(p, ext)?;
    let mut checks = Vec::new();

    let m = bracket_tensor(p, ext, &j);
    let omega_action = {
        let (n, act) = (p.dim(), &ext.l1().action.action);
        p.mult().kron(act).mul(&Mat::perm_legs(f, &[n, l, n, n], &[0, 2, 1, 3])).mul(&Mat::identity(f, n * l).kron(p.comult()))
    };
    if let Some((r, c)) = m.mul(&omega_action).first_difference(&m.kron(p.counit())) {
        return Err(Error::identity("[α,β](ξ·p) = [α,β](ξ)ε(p)", format!("α⊗β index {r}, ξ⊗p index {c}")));
    }
    checks.push(Check::pass("brackets are right P-linear"));

    let on_l1 = m.mul(&p.unit().kron(&Mat::identity(f, l)));
    let f2 = inside_pairing(f, l, 2);
    let sigma_l = ext.sigma();
    let braided = f2.mul(&Mat::identity(f, l * l).sub(sigma_l)).mul(&d_lift(p, ext));
    if let Some((r, c)) = on_l1.first_difference(&braided) {
        return Err(Error::identity("[α,β](ξ) = ev((α⊗β)⊗(id−σ)dξ)", format!("α⊗β index {r}, ξ index {c}")));
    }
    checks.push(Check::pass("bracket equals the braided evaluation of d"));

    if f2.mul(sigma_l) != sigma_g.transpose().mul(&f2) {
        return Err(Error::identity("ev(α⊗β⊗σ(v⊗w)) = ev(σ(α⊗β)⊗v⊗w)", "braidings on 𝔤 and L¹"));
    }
    checks.push(Check::pass("braidings on 𝔤 and L¹ are dual"));

    let id2 = Mat::identity(f, l * l);
    let sym_g = Subspace::span(&sigma_g.sub(&id2).kernel());
    checks.push(Check::expect(
        "dim ker(σ_𝔤 − id) = dim ker(σ_L¹ − id)",
        sym_g.dim() == ext.symmetric().dim(),
        format!("{} vs {}", sym_g.dim(), ext.symmetric().dim()),
    ));

    let mut wedge = Vec::with_capacity(ext.cap() + 1);
    let mut paired = Vec::with_capacity(ext.cap() + 1);
    for k in 0..=ext.cap() {
        let rel = Subspace::span(&wedge_relations(f, l, sym_g.basis(), k));
        let fk = inside_pairing(f, l, k);
        let annihilator = ext.lambda(k).relations().basis().transpose().mul(&fk).kernel();
        match QuotientSpace::with_complement(&rel, annihilator) {
            Ok(q) => {
                wedge.push(q);
                paired.push(true);
            }
            Err(_) => {
                wedge.push(QuotientSpace::new(&rel));
                paired.push(false);
            }
        }
    }

    let bracket = on_l1.transpose();
    let mut hl = HopfLieAlgebra { field: f, g, sigma_g, bracket, wedge, paired, t: None, checks };
    if let Some(t) = hl.compute_t() {
        if !hl.paired[2] {
            return Err(Error::IllDefined { what: "section of 𝔤∧𝔤".into(), witness: "annihilator is not a complement".into() });
        }
        // T(α∧β)(ξ) = ev((α∧β)⊗dξ) on section representatives
        let rhs = d_lift(p, ext).transpose().mul(&f2).mul(hl.wedge[2].section());
        if let Some((r, c)) = t.first_difference(&rhs) {
            return Err(Error::identity("T(α∧β)(ξ) = ev((α∧β)⊗dξ)", format!("ξ index {r}, α∧β index {c}")));
        }
        hl.checks.push(Check::pass("T is dual to d on L¹"));
        hl.t = Some(t);
    }
    Ok(hl)
}

impl HopfLieAlgebra {
    fn compute_t(&self) -> Option<Mat> {
        if self.wedge.len() < 3 {
            return None;
        }
        let q = &self.wedge[2];
        let shifted = Mat::identity(self.field, self.dim() * self.dim()).sub(&self.sigma_g);
        let induced = q.projection().mul(&shifted).mul(q.section());
        let inverse = induced.inverse()?;
        Some(self.bracket.mul(q.section()).mul(&inverse))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn g(&self) -> &YDModule {
        &self.g
    }
    pub fn dim(&self) -> usize {
        self.g.dim()
    }
    /// `𝔤⊗𝔤 → 𝔤` in the basis dual to `L¹`.
    pub fn bracket(&self) -> &Mat {
        &self.bracket
    }
    /// `σ` on `𝔤⊗𝔤`.
    pub fn sigma(&self) -> &Mat {
        &self.sigma_g
    }
    /// `Λ^n𝔤`, with section the annihilator of the `L¹` relations when that
    /// is a complement.
    pub fn wedge(&self, n: usize) -> &QuotientSpace {
        &self.wedge[n]
    }
    pub fn wedge_dims(&self) -> Vec<usize> {
        self.wedge.iter().map(|q| q.dim()).collect()
    }
    /// Whether the inside pairing identifies `Λ^n𝔤` with `(Λ^n L¹)*`.
    pub fn is_paired(&self, n: usize) -> bool {
        self.paired[n]
    }
    pub fn checks(&self) -> &[Check] {
        &self.checks
    }
}

/// `T = [,]∘(id−σ)⁻¹: 𝔤∧𝔤 → 𝔤`.
pub fn t_map(hl: &HopfLieAlgebra) -> Result<Mat> {
    hl.t.clone().ok_or(Error::BraidingDefect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{build_exterior, check_ideal, CalculusIdeal};
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn universal(p: &FinHopfAlgebra, cap: usize) -> ExteriorCalculus {
        build_exterior(p, &CalculusIdeal::zero(p), cap).unwrap()
    }

    #[test]
    fn fz2_bracket_vanishes() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let ext = universal(&p, 2);
        let hl = build_hopf_lie(&p, &ext).unwrap();
        assert_eq!(hl.dim(), 1);
        assert!(hl.bracket().is_zero());
        assert_eq!(hl.wedge_dims(), vec![1, 1, 0]);
        assert_eq!(t_map(&hl).unwrap().shape(), (1, 0));
    }

    #[test]
    fn fz3_t_is_half_the_bracket() {
        let p = function_algebra(&FiniteGroup::cyclic(3), Q).unwrap();
        let ext = universal(&p, 3);
        let hl = build_hopf_lie(&p, &ext).unwrap();
        assert_eq!(hl.dim(), 2);
        let flip = Mat::flip(Q, 2, 2);
        assert_eq!(hl.sigma(), &flip);
        let t = t_map(&hl).unwrap();
        let half = Q.int(2).inv().unwrap();
        assert_eq!(t.mul(hl.wedge(2).projection()), hl.bracket().scale(&half));
    }

    #[test]
    fn char_two_flip_is_a_braiding_defect() {
        let f2 = FieldSpec::prime(2).unwrap();
        let p = function_algebra(&FiniteGroup::cyclic(3), f2).unwrap();
        let hl = build_hopf_lie(&p, &universal(&p, 2)).unwrap();
        assert!(matches!(t_map(&hl), Err(Error::BraidingDefect)));
        assert!(!hl.is_paired(2));
    }

    #[test]
    fn sweedler_brackets() {
        let p = sweedler(Q).unwrap();
        for cols in [vec![[1, 0, -1, 0], [0, 1, 0, -1]], vec![[0, 1, 0, 1]]] {
            let rows: Vec<Vec<i64>> = (0..4).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
            let ideal = check_ideal(&p, &Mat::from_ints(Q, &rows)).unwrap();
            let ext = build_exterior(&p, &ideal, 3).unwrap();
            let hl = build_hopf_lie(&p, &ext).unwrap();
            assert!(crate::report::all_passed(hl.checks()), "{:?}", hl.checks());
            assert_eq!(t_map(&hl).is_ok(), ext.generalized_eigen_defect() == 0);
        }
    }

    #[test]
    fn inside_pairing_reverses_legs() {
        let e = inside_pairing(Q, 2, 2);
        // α_1⊗α_2 against ξ_2⊗ξ_1
        assert_eq!(e.get(1, 2), Q.one());
        assert_eq!(e.get(1, 1), Q.zero());
    }
}
