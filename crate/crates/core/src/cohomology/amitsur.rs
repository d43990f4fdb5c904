use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{coinvariants, Comodule, FinHopfAlgebra, Side};
use crate::linalg::{Mat, Subspace};
use crate::report::Check;

use super::{invariant::coinvariant_subcomplex, CochainComplex, ComplexMap};

/// Largest admissible `dim(P)^{n+1}·dim(F)` in any degree.
pub const AMITSUR_CAP: usize = 20000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Coinvariants of `D^n = P^{⊗n+1}⊗F`.
    D,
    /// `G^n = P^{⊗n}⊗F` with `d̄`.
    G,
}

fn check_cap(p: &FinHopfAlgebra, f_dim: usize, top: usize) -> Result<()> {
    let mut size = f_dim;
    for n in 0..=top {
        size = size.saturating_mul(p.dim());
        if size > AMITSUR_CAP {
            return Err(Error::CapExceeded(format!("degree {n}: dim P^{} ⊗ F = {size} > {AMITSUR_CAP}", n + 1)));
        }
    }
    Ok(())
}

fn left(f: &Comodule) -> Result<()> {
    if f.side != Side::Left {
        return Err(Error::Shape("Hopf cochain coefficients must be a left comodule".into()));
    }
    Ok(())
}

/// `P^{⊗k}⊗F` with the tensor product left coaction.
fn tensor_coaction(p: &FinHopfAlgebra, k: usize, f: &Comodule) -> Comodule {
    let reg = Comodule::regular(p, Side::Left);
    let mut c = f.clone();
    for _ in 0..k {
        c = reg.tensor(&c, p);
    }
    c
}

/// `d = Σ_i (-1)^i` (insert `1` in slot `i`) on `D^n`.
fn d_full(p: &FinHopfAlgebra, f_dim: usize, n: usize) -> Mat {
    let fl = p.field();
    let k = p.dim();
    let mut acc = Mat::zeros(fl, k.pow(n as u32 + 2) * f_dim, k.pow(n as u32 + 1) * f_dim);
    for i in 0..=n + 1 {
        let ins = Mat::identity(fl, k.pow(i as u32))
            .kron(p.unit())
            .kron(&Mat::identity(fl, k.pow((n + 1 - i) as u32) * f_dim));
        acc = if i % 2 == 0 { acc.add(&ins) } else { acc.sub(&ins) };
    }
    acc
}

/// The full (non-invariant) complex `D^0 → … → D^top`.
pub fn amitsur_full(p: &FinHopfAlgebra, f: &Comodule, top: usize) -> Result<(CochainComplex, Vec<Mat>)> {
    left(f)?;
    check_cap(p, f.dim, top)?;
    let k = p.dim();
    let dims = (0..=top).map(|n| k.pow(n as u32 + 1) * f.dim).collect();
    let d = (0..top).map(|n| d_full(p, f.dim, n)).collect();
    let c = CochainComplex::new(p.field(), dims, d)?;
    let coactions = (0..=top).map(|n| tensor_coaction(p, n + 1, f).coaction).collect();
    Ok((c, coactions))
}

/// `d̄` on `G^n`: `1⊗x − Δ(p₁)… + … ± p₁…⊗λ(f)` with alternating signs.
pub(crate) fn d_bar(p: &FinHopfAlgebra, f: &Comodule, n: usize) -> Mat {
    let fl = p.field();
    let k = p.dim();
    let fd = f.dim;
    let mut acc = p.unit().kron(&Mat::identity(fl, k.pow(n as u32) * fd));
    for i in 1..=n {
        let delta = Mat::identity(fl, k.pow(i as u32 - 1))
            .kron(p.comult())
            .kron(&Mat::identity(fl, k.pow((n - i) as u32) * fd));
        acc = if i % 2 == 0 { acc.add(&delta) } else { acc.sub(&delta) };
    }
    let last = Mat::identity(fl, k.pow(n as u32)).kron(&f.coaction);
    if (n + 1) % 2 == 0 {
        acc.add(&last)
    } else {
        acc.sub(&last)
    }
}

/// `G^0 → … → G^top`.
pub fn amitsur_g(p: &FinHopfAlgebra, f: &Comodule, top: usize) -> Result<CochainComplex> {
    left(f)?;
    check_cap(p, f.dim, top)?;
    let k = p.dim();
    let dims = (0..=top).map(|n| k.pow(n as u32) * f.dim).collect();
    let d = (0..top).map(|n| d_bar(p, f, n)).collect();
    CochainComplex::new(p.field(), dims, d)
}

/// Hopf cochain complex of `P` with coefficients in `F`, either variant.
pub fn amitsur_complex(p: &FinHopfAlgebra, f: &Comodule, variant: Variant, top: usize) -> Result<CochainComplex> {
    match variant {
        Variant::D => {
            let (c, co) = amitsur_full(p, f, top)?;
            Ok(coinvariant_subcomplex(p, &c, &co)?.0)
        }
        Variant::G => amitsur_g(p, f, top),
    }
}

/// `θ_0 = (S⊗id)λ`, `θ_n = (S⊗m⊗id)(Δ⊗θ_{n-1})`.
fn theta_components(p: &FinHopfAlgebra, f: &Comodule, top: usize) -> Vec<Mat> {
    let fl = p.field();
    let k = p.dim();
    let mut out = vec![p.antipode().kron(&Mat::identity(fl, f.dim)).mul(&f.coaction)];
    for n in 1..=top {
        let rest = k.pow(n as u32 - 1) * f.dim;
        let outer = p.antipode().kron(p.mult()).kron(&Mat::identity(fl, rest));
        out.push(outer.mul(&p.comult().kron(&out[n - 1])));
    }
    out
}

/// `θ^{-1}_n = ε⊗Ψ_n`, `Ψ_0 = id`, `Ψ_n(p⊗y) = p·y₋₁ ⊗ Ψ_{n-1}(y₀)` for the
/// tensor coaction on `G^{n-1}`.
fn theta_inverse_components(p: &FinHopfAlgebra, f: &Comodule, top: usize) -> Vec<Mat> {
    let fl = p.field();
    let k = p.dim();
    let mut psi = vec![Mat::identity(fl, f.dim)];
    for n in 1..=top {
        let lam = tensor_coaction(p, n - 1, f).coaction;
        let inner = p.id().kron(&psi[n - 1]).mul(&lam);
        let rest = k.pow(n as u32 - 1) * f.dim;
        psi.push(p.mult().kron(&Mat::identity(fl, rest)).mul(&p.id().kron(&inner)));
    }
    psi.iter().map(|m| p.counit().kron(m)).collect()
}

/// `θ: (G, d̄) → (ᶜᵒᴾD, d)` with its inverse, all identities verified.
#[derive(Clone, Debug)]
pub struct ThetaIso {
    pub g: CochainComplex,
    pub invariant_d: CochainComplex,
    /// Components in coordinates of the coinvariant basis.
    pub theta: ComplexMap,
    /// `θ_n: G^n → D^n` in ambient coordinates.
    pub theta_full: Vec<Mat>,
    /// `θ^{-1}_n: D^n → G^n` (inverse on the coinvariants).
    pub theta_inverse: Vec<Mat>,
}

pub fn theta_iso(p: &FinHopfAlgebra, f: &Comodule, top: usize) -> Result<ThetaIso> {
    let (full, co) = amitsur_full(p, f, top)?;
    let g = amitsur_g(p, f, top)?;
    let (sub, incl) = coinvariant_subcomplex(p, &full, &co)?;
    let th = theta_components(p, f, top);
    let thi = theta_inverse_components(p, f, top);
    let mut coords = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let triv = p.unit().kron(&th[n]);
        if let Some((_, j)) = co[n].mul(&th[n]).first_difference(&triv) {
            return Err(Error::identity(format!("θ lands in coinvariants, degree {n}"), format!("basis vector {j}")));
        }
        if n < top {
            if let Some((_, j)) = full.d(n).mul(&th[n]).first_difference(&th[n + 1].mul(g.d(n))) {
                return Err(Error::identity(format!("θ∘d̄ = d∘θ, degree {n}"), format!("basis vector {j}")));
            }
        }
        if let Some((i, j)) = thi[n].mul(&th[n]).first_difference(&Mat::identity(p.field(), g.dim(n))) {
            return Err(Error::identity(format!("θ^-1∘θ = id, degree {n}"), format!("entry ({i}, {j})")));
        }
        let b = &incl.components[n];
        if let Some((i, j)) = th[n].mul(&thi[n]).mul(b).first_difference(b) {
            return Err(Error::identity(format!("θ∘θ^-1 = id on coinvariants, degree {n}"), format!("entry ({i}, {j})")));
        }
        let basis = Subspace::from_basis(b.clone())?;
        coords.push(basis.coordinate_map().mul(&th[n]));
    }
    let theta = ComplexMap::new(&g, &sub, coords)?;
    Ok(ThetaIso { g, invariant_d: sub, theta, theta_full: th, theta_inverse: thi })
}

/// `μ: P⊗F → F` is a left action with `λ(μ(p⊗f)) = p₁f₋₁ ⊗ μ(p₂⊗f₀)`.
pub fn hopf_module_law(p: &FinHopfAlgebra, f: &Comodule, mu: &Mat) -> Result<()> {
    let (k, fd) = (p.dim(), f.dim);
    crate::hopf::ModuleAction::new(p, fd, mu.clone(), Side::Left)?;
    let perm = Mat::perm_legs(p.field(), &[k, k, k, fd], &[0, 2, 1, 3]);
    let lhs = f.coaction.mul(mu);
    let rhs = p.mult().kron(mu).mul(&perm).mul(&p.comult().kron(&f.coaction));
    match lhs.first_difference(&rhs) {
        Some((_, j)) => Err(Error::identity("λμ = p₁f₋₁⊗μ(p₂⊗f₀)", format!("at {}⊗{}", p.labels()[j / fd], j % fd))),
        None => Ok(()),
    }
}

/// Outcome of the contracting-homotopy argument for a left Hopf module.
#[derive(Clone, Debug, Serialize)]
pub struct HomotopyReport {
    /// `H_c^n(P;F)` for `n ≤ top` (top degree is an upper bound).
    pub hc_dims: Vec<usize>,
    pub coinvariant_dim: usize,
    pub checks: Vec<Check>,
}

impl HomotopyReport {
    pub fn hopf_module(&self) -> bool {
        self.checks.first().map(|c| c.passed()).unwrap_or(false)
    }
}

/// For a left comodule `F` with left action `μ: P⊗F → F`: check the Hopf
/// module law, `dh + hd = id` on `D^0..D^top` with
/// `h(p₀…p_{n+1}⊗f) = (-1)^{n+1} p₀…p_n⊗p_{n+1}·f`, colinearity of `h`, and
/// the resulting `H_c = (dim ᶜᵒᴾF, 0, …)`.
pub fn homotopy_check(p: &FinHopfAlgebra, f: &Comodule, mu: &Mat, top: usize) -> Result<HomotopyReport> {
    left(f)?;
    let fl = p.field();
    let k = p.dim();
    let fd = f.dim;
    if mu.shape() != (fd, k * fd) {
        return Err(Error::Shape(format!("action must be {fd}×{}", k * fd)));
    }
    let mut checks = Vec::new();
    let law = Check::from_result("Hopf module: μ is a colinear action", &hopf_module_law(p, f, mu));
    let is_module = law.passed();
    checks.push(law);
    let (full, co) = amitsur_full(p, f, top + 1)?;
    let coinv = coinvariants(p, f);
    let sub = coinvariant_subcomplex(p, &full, &co)?.0.truncate(top);
    let h = sub.cohomology();
    if !is_module {
        checks.push(Check::skipped("vanishing of H_c", "no compatible action; no vanishing claimed"));
        return Ok(HomotopyReport { hc_dims: h.dims, coinvariant_dim: coinv.dim(), checks });
    }
    // h_n: D^{n+1} → D^n for n ≥ -1; index n+1.
    let hom: Vec<Mat> = (0..=top + 1)
        .map(|i| {
            let m = Mat::identity(fl, k.pow(i as u32)).kron(mu);
            if i % 2 == 0 {
                m
            } else {
                m.scale_int(-1)
            }
        })
        .collect();
    let aug = p.unit().kron(&Mat::identity(fl, fd));
    for n in 0..=top {
        let dh = if n == 0 { aug.mul(&hom[0]) } else { full.d(n - 1).mul(&hom[n]) };
        let total = dh.add(&hom[n + 1].mul(full.d(n)));
        let ok = total.is_identity();
        checks.push(Check::expect(format!("dh + hd = id on D^{n}"), ok, "homotopy identity fails"));
    }
    for n in 0..=top {
        let ok = co[n].mul(&hom[n + 1]) == p.id().kron(&hom[n + 1]).mul(&co[n + 1]);
        checks.push(Check::expect(format!("h: D^{} → D^{n} is colinear", n + 1), ok, "h does not commute with the coaction"));
    }
    let mut expect = vec![0; top];
    expect.insert(0, coinv.dim());
    let vanish = h.dims[..top] == expect[..top];
    checks.push(Check::expect("H_c = (dim ᶜᵒᴾF, 0, …)", vanish, format!("{:?}", h.dims)));
    let image = Subspace::span(&aug.mul(coinv.basis()));
    let z0 = Subspace::span(&full.d(0).kernel()).intersection(&Subspace::span(&co[0].sub(&p.unit().kron(&Mat::identity(fl, k * fd))).kernel()));
    checks.push(Check::expect("f ↦ 1⊗f identifies ᶜᵒᴾF with H_c^0", image.same_as(&z0), "images differ"));
    Ok(HomotopyReport { hc_dims: h.dims, coinvariant_dim: coinv.dim(), checks })
}
