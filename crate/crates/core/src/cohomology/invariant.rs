use serde::Serialize;

use crate::calculus::{Dga, ExtendedCoaction};
use crate::error::{Error, Result};
use crate::hopf::{left_integral, FinHopfAlgebra};
use crate::linalg::{Mat, Subspace};
use crate::report::Check;

use super::{CochainComplex, CohomologyResult, ComplexMap};

/// `dim H^0_dR = 1` for the given calculus.
pub fn connectedness(dga: &Dga) -> bool {
    dga.de_rham().dims[0] == 1
}

/// Degreewise coinvariants `{ω : λ(ω) = 1⊗ω}` of a complex of left
/// comodules, with the restricted differential and the inclusion `i`.
pub fn coinvariant_subcomplex(p: &FinHopfAlgebra, c: &CochainComplex, coactions: &[Mat]) -> Result<(CochainComplex, ComplexMap)> {
    let f = p.field();
    let top = c.top();
    if coactions.len() <= top {
        return Err(Error::Shape(format!("need {} coactions, got {}", top + 1, coactions.len())));
    }
    for n in 0..=top {
        if coactions[n].shape() != (p.dim() * c.dim(n), c.dim(n)) {
            return Err(Error::Shape(format!("coaction {n} is {:?}", coactions[n].shape())));
        }
    }
    for n in 0..top {
        let lhs = p.id().kron(c.d(n)).mul(&coactions[n]);
        let rhs = coactions[n + 1].mul(c.d(n));
        if let Some((_, j)) = lhs.first_difference(&rhs) {
            return Err(Error::identity(format!("d^{n} is colinear"), format!("basis vector {j}")));
        }
    }
    let bases: Vec<Subspace> = (0..=top)
        .map(|n| {
            let triv = p.unit().kron(&Mat::identity(f, c.dim(n)));
            Subspace::span(&coactions[n].sub(&triv).kernel())
        })
        .collect();
    let d = (0..top)
        .map(|n| bases[n + 1].coordinate_map().mul(c.d(n)).mul(bases[n].basis()))
        .collect();
    let sub = CochainComplex::new(f, bases.iter().map(|b| b.dim()).collect(), d)?;
    let inclusion = ComplexMap::new(&sub, c, bases.iter().map(|b| b.basis().clone()).collect())?;
    Ok((sub, inclusion))
}

/// `λ̃ = (id⊗[·])∘λ̄` on class representatives, as a map `H^n → P⊗H^n`.
/// Fails if `λ̄` does not send cocycles to `P⊗cocycles`.
fn coaction_on_classes(p: &FinHopfAlgebra, c: &CochainComplex, h: &CohomologyResult, lambda_bar: &Mat, n: usize) -> Result<Mat> {
    let reps = &h.representatives[n];
    let image = lambda_bar.mul(reps);
    if n < c.top() && !p.id().kron(c.d(n)).mul(&image).is_zero() {
        return Err(Error::identity(format!("λ̄ maps cocycles to P⊗cocycles in degree {n}"), "class representative"));
    }
    Ok(p.id().kron(h.classify_map(n)).mul(&image))
}

/// `{[ω] : λ̃[ω] = 1⊗[ω]}` inside `H^n`, in class coordinates.
fn coinvariant_classes(p: &FinHopfAlgebra, tilde: &Mat, dim_h: usize) -> Subspace {
    let triv = p.unit().kron(&Mat::identity(p.field(), dim_h));
    Subspace::span(&tilde.sub(&triv).kernel())
}

/// Outcome of the invariant-forms comparison for a coacting algebra `M`.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantFormsReport {
    pub de_rham_dims: Vec<usize>,
    pub invariant_dims: Vec<usize>,
    pub coinvariant_class_dims: Vec<usize>,
    /// Degrees below this are exact; otherwise the top degree is an upper bound.
    pub exact_below: usize,
    pub normalised_integral: bool,
    pub p_connected: bool,
    pub checks: Vec<Check>,
}

/// Compare `H_dR(M)`, its coinvariant classes, and the cohomology of the
/// invariant forms. `lambda_bar[n]: Ω^n M → P⊗Ω^n M`; `p_calculus` is the
/// calculus on `P` used to decide connectedness.
pub fn invariant_forms_check(p: &FinHopfAlgebra, p_calculus: &Dga, m: &Dga, lambda_bar: &[Mat]) -> Result<InvariantFormsReport> {
    let f = p.field();
    let top = m.cap().min(lambda_bar.len().saturating_sub(1));
    let c = m.complex().truncate(top);
    let (sub, incl) = coinvariant_subcomplex(p, &c, lambda_bar)?;
    let h = c.cohomology();
    let hs = sub.cohomology();
    let integral = left_integral(p);
    let p_connected = connectedness(p_calculus);
    let mut checks = Vec::new();

    let mut h_i = Vec::new();
    let mut co_classes = Vec::new();
    for n in 0..=top {
        let tilde = coaction_on_classes(p, &c, &h, &lambda_bar[n], n)?;
        co_classes.push(coinvariant_classes(p, &tilde, h.dims[n]));
        h_i.push(incl.on_cohomology(n, &hs, &h));
    }

    match integral.normalised.as_ref() {
        Some(int) => {
            let mut ii = Vec::new();
            let mut lands = true;
            for n in 0..=top {
                let avg = int.kron(&Mat::identity(f, c.dim(n))).mul(&lambda_bar[n]);
                let coords = sub_coords(&incl, n, &avg);
                lands &= incl.components[n].mul(&coords) == avg;
                ii.push(coords);
            }
            checks.push(Check::expect("𝕀 lands in the invariant forms", lands, "(∫⊗id)λ̄ is not coinvariant"));
            let retract = (0..=top).all(|n| ii[n].mul(&incl.components[n]).is_identity());
            checks.push(Check::expect("𝕀∘i = id", retract, "averaging does not fix invariant forms"));
            match ComplexMap::new(&c, &sub, ii) {
                Ok(avg) => {
                    checks.push(Check::pass("𝕀 is a cochain map"));
                    let mut left_inv = true;
                    let mut injective = true;
                    for n in 0..=top {
                        let h_avg = avg.on_cohomology(n, &h, &hs);
                        left_inv &= h_avg.mul(&h_i[n]).is_identity();
                        injective &= h_i[n].rank() == hs.dims[n];
                    }
                    checks.push(Check::expect("H(𝕀)∘H(i) = id", left_inv, "composite is not the identity"));
                    checks.push(Check::expect("H(i) is injective", injective, "rank deficit"));
                }
                Err(e) => checks.push(Check::fail("𝕀 is a cochain map", e.to_string())),
            }
            let image_ok = (0..=top).all(|n| Subspace::span(&h_i[n]).same_as(&co_classes[n]));
            checks.push(Check::expect("part 1: im H(i) = coinvariant classes", image_ok, "image differs from the coinvariant classes"));
        }
        None => {
            let image_ok = (0..=top).all(|n| Subspace::span(&h_i[n]).same_as(&co_classes[n]));
            let holds = if image_ok { "holds anyway" } else { "does not hold here" };
            checks.push(Check::skipped("part 1: im H(i) = coinvariant classes", format!("no normalised integral ({holds})")));
        }
    }

    // part 2 needs the homotopy of the full calculus, so the top degree only counts when Ω^top = 0
    let exact = if c.dim(top) == 0 { top + 1 } else { top };
    if p_connected {
        let all_fixed = (0..exact).all(|n| co_classes[n].dim() == h.dims[n]);
        checks.push(Check::expect("part 2: every class is coinvariant", all_fixed, "a class is moved by the coaction"));
    } else {
        checks.push(Check::skipped("part 2: every class is coinvariant", "P is not connected for this calculus"));
    }
    if p_connected && integral.is_normalised() {
        let eq = h.dims[..exact] == hs.dims[..exact];
        checks.push(Check::expect("part 3: dims H_dR(M) = dims H(invariant forms)", eq, format!("{:?} vs {:?} below degree {exact}", h.dims, hs.dims)));
    } else {
        checks.push(Check::skipped("part 3: dims H_dR(M) = dims H(invariant forms)", "needs a connected P with a normalised integral"));
    }

    Ok(InvariantFormsReport {
        de_rham_dims: h.dims.clone(),
        invariant_dims: hs.dims.clone(),
        coinvariant_class_dims: co_classes.iter().map(|s| s.dim()).collect(),
        exact_below: exact,
        normalised_integral: integral.is_normalised(),
        p_connected,
        checks,
    })
}

/// Coordinates in the subcomplex of vectors assumed to lie in it.
fn sub_coords(incl: &ComplexMap, n: usize, v: &Mat) -> Mat {
    Subspace::from_basis(incl.components[n].clone()).expect("independent basis").coordinate_map().mul(v)
}

/// Outcome of the coaction-on-cohomology check.
#[derive(Clone, Debug, Serialize)]
pub struct CoactionReport {
    pub de_rham_dims: Vec<usize>,
    pub p_connected: bool,
    pub checks: Vec<Check>,
}

/// `λ̃[ω] = (id⊗[·])λ̄(ω)` lands in `(ker d: P→Ω¹P)⊗H^n_dR(M)`, and is
/// `1⊗[ω]` when `P` is connected.
pub fn coaction_on_cohomology(p: &FinHopfAlgebra, p_calculus: &Dga, ext: &ExtendedCoaction, m: &Dga) -> Result<CoactionReport> {
    let f = p.field();
    let top = m.cap().min(ext.lambda_bar.len() - 1);
    let c = m.complex().truncate(top);
    let h = c.cohomology();
    let p_connected = connectedness(p_calculus);
    let mut checks = Vec::new();
    for n in 0..=top {
        let tilde = coaction_on_classes(p, &c, &h, &ext.lambda_bar[n], n)?;
        if p_calculus.cap() > 0 {
            let d0 = p_calculus.d(0).kron(&Mat::identity(f, h.dims[n]));
            checks.push(Check::expect(format!("degree {n}: λ̃ lands in ker(d)⊗H"), d0.mul(&tilde).is_zero(), "P-leg is not closed"));
        }
        if p_connected {
            let triv = p.unit().kron(&Mat::identity(f, h.dims[n]));
            checks.push(Check::expect(format!("degree {n}: classes fixed by the coaction"), tilde == triv, "λ̃ ≠ 1⊗id"));
        }
    }
    Ok(CoactionReport { de_rham_dims: h.dims.clone(), p_connected, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::exterior::omega_coaction;
    use crate::calculus::*;
    use crate::field::FieldSpec;
    use crate::hopf::builtin::*;
    use crate::report::{all_passed, Status};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn bicovariant(p: &FinHopfAlgebra, cap: usize) -> (ExteriorCalculus, Dga) {
        let ext = build_exterior(p, &CalculusIdeal::zero(p), cap).unwrap();
        let om = build_omega(p, &ext).unwrap();
        (ext, om)
    }

    #[test]
    fn connectedness_examples() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        assert!(connectedness(&bicovariant(&p, 2).1));
        let zero = build_exterior(&p, &CalculusIdeal::augmentation(&p), 1).unwrap();
        let om = build_omega(&p, &zero).unwrap();
        assert!(!connectedness(&om));
        assert_eq!(om.de_rham().dims[0], 2);
    }

    #[test]
    fn fz3_invariant_forms() {
        let p = function_algebra(&FiniteGroup::cyclic(3), Q).unwrap();
        let (ext, om) = bicovariant(&p, 3);
        let lb: Vec<Mat> = (0..=3).map(|n| omega_coaction(&p, &ext, n)).collect();
        let (sub, _) = coinvariant_subcomplex(&p, &om.complex(), &lb).unwrap();
        assert_eq!(sub.dims(), &[1, 2, 1, 0]);
        let r = invariant_forms_check(&p, &om, &om, &lb).unwrap();
        assert!(all_passed(&r.checks), "{:?}", r.checks);
        assert_eq!(&r.de_rham_dims[..3], &[1, 2, 1]);
        assert_eq!(r.invariant_dims, r.de_rham_dims);
    }

    #[test]
    fn trivial_coactions_give_the_whole_complex() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let c = CochainComplex::new(Q, vec![2, 1], vec![Mat::from_ints(Q, &[vec![1, -1]])]).unwrap();
        let triv: Vec<Mat> = c.dims().iter().map(|&d| p.unit().kron(&Mat::identity(Q, d))).collect();
        let (sub, i) = coinvariant_subcomplex(&p, &c, &triv).unwrap();
        assert_eq!(sub.dims(), c.dims());
        assert!(i.components.iter().all(|m| m.is_identity()));
    }

    #[test]
    fn sweedler_skips_part_one() {
        let p = sweedler(Q).unwrap();
        let r = crate::calculus::check_ideal(&p, &Mat::from_ints(Q, &[vec![0], vec![1], vec![0], vec![1]])).unwrap();
        let ext = build_exterior(&p, &r, 2).unwrap();
        let om = build_omega(&p, &ext).unwrap();
        let lb: Vec<Mat> = (0..=2).map(|n| omega_coaction(&p, &ext, n)).collect();
        let rep = invariant_forms_check(&p, &om, &om, &lb).unwrap();
        let part1 = rep.checks.iter().find(|c| c.name.starts_with("part 1")).unwrap();
        assert_eq!(part1.status, Status::Skipped);
        assert!(part1.detail.starts_with("no normalised integral"));
    }

    #[test]
    fn connected_p_fixes_classes() {
        let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let (_, om) = bicovariant(&p, 2);
        let t = tensor_dga(&om, &om).unwrap();
        let ec = extend_coaction(&p, p.comult(), &om, &t).unwrap();
        let r = coaction_on_cohomology(&p, &om, &ec, &om).unwrap();
        assert!(r.p_connected);
        assert!(all_passed(&r.checks), "{:?}", r.checks);
    }
}
