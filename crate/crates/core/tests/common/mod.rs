//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use hopfcoh::calculus::exterior::omega_coaction;
use hopfcoh::calculus::{build_exterior, build_omega, check_ideal, CalculusIdeal, Dga, ExteriorCalculus};
use hopfcoh::hopf::builtin::*;
use hopfcoh::hopf::{ComoduleAlgebra, FinHopfAlgebra};
use hopfcoh::{FieldSpec, Mat, Subspace};

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn f(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Every builtin with a display name.
pub fn builtins() -> Vec<(&'static str, FinHopfAlgebra)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let g = FiniteGroup::cyclic(n);
        out.push((["kZ2", "kZ3", "kZ4"][n - 2], group_algebra(&g, Q).unwrap()));
        out.push((["fZ2", "fZ3", "fZ4"][n - 2], function_algebra(&g, Q).unwrap()));
    }
    out.push(("sweedler", sweedler(Q).unwrap()));
    out.push(("taft3/F7", taft_auto(3, f(7)).unwrap()));
    out
}

/// Sweedler's algebra with basis `1, x, g, gx` and its two named ideals.
pub fn sweedler_ideal(p: &FinHopfAlgebra, name: &str) -> CalculusIdeal {
    let fl = p.field();
    let m = match name {
        "one_minus_g" => Mat::from_ints(fl, &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]),
        "x_plus_gx" => Mat::from_ints(fl, &[vec![0], vec![1], vec![0], vec![1]]),
        _ => panic!("unknown ideal {name}"),
    };
    check_ideal(p, &m).unwrap()
}

/// `Ω^•P` with `Δ⊗id` for the calculus of `ideal`, through degree `cap`.
pub fn forms(p: &FinHopfAlgebra, ideal: &CalculusIdeal, cap: usize) -> (ExteriorCalculus, Dga, Vec<Mat>) {
    let ext = build_exterior(p, ideal, cap).unwrap();
    let om = build_omega(p, &ext).unwrap();
    let lb = (0..=cap).map(|k| omega_coaction(p, &ext, k)).collect();
    (ext, om, lb)
}

pub fn zero_forms(p: &FinHopfAlgebra, cap: usize) -> (ExteriorCalculus, Dga, Vec<Mat>) {
    forms(p, &CalculusIdeal::zero(p), cap)
}

/// `kZ4` as a `kZ2`-comodule algebra through `Z4 → Z2`.
pub fn z4_over_z2() -> (FinHopfAlgebra, ComoduleAlgebra, Mat) {
    let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
    let z4 = group_algebra(&FiniteGroup::cyclic(4), Q).unwrap();
    let lam = Mat::from_triplets(Q, 8, 4, (0..4).map(|i| ((i % 2) * 4 + i, i, Q.one())));
    let total = ComoduleAlgebra::new(&p, 4, z4.mult().clone(), z4.unit().clone(), lam).unwrap();
    let phi = Mat::from_ints(Q, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]);
    (p, total, phi)
}

/// `dim H^n = dim C^n − rank d_n − rank d_{n−1}` for `n < top`.
pub fn dims_from_ranks(dims: &[usize], d: &[Mat]) -> Vec<usize> {
    (0..d.len())
        .map(|n| dims[n] - d[n].rank() - if n > 0 { d[n - 1].rank() } else { 0 })
        .collect()
}

/// Inhomogeneous cochains of `Z/2` with trivial coefficients in `F2`:
/// `C^n = maps (Z/2)^n → F2`, classical coboundary. Returns `H^0..H^{top-1}`.
pub fn z2_group_cohomology_f2(top: usize) -> Vec<usize> {
    let fl = f(2);
    let word = |idx: usize, n: usize| -> Vec<usize> { (0..n).map(|i| (idx >> (n - 1 - i)) & 1).collect() };
    let index = |w: &[usize]| w.iter().fold(0, |a, &b| 2 * a + b);
    let mut d = Vec::new();
    for n in 0..top {
        let mut trip = Vec::new();
        for row in 0..1usize << (n + 1) {
            let g = word(row, n + 1);
            // f(g2..) + Σ f(..g_i g_{i+1}..) + f(g1..g_n), signs vanish mod 2
            trip.push((row, index(&g[1..]), fl.one()));
            for i in 0..n {
                let mut h = g.clone();
                h[i] = (g[i] + g[i + 1]) % 2;
                h.remove(i + 1);
                trip.push((row, index(&h), fl.one()));
            }
            trip.push((row, index(&g[..n]), fl.one()));
        }
        d.push(Mat::from_triplets(fl, 1 << (n + 1), 1 << n, trip));
    }
    let dims: Vec<usize> = (0..=top).map(|n| 1 << n).collect();
    dims_from_ranks(&dims, &d)
}

/// Universal forms realised as `Ω^k = ∩_i ker(m_i) ⊂ A^{⊗k+1}` with
/// `d = Σ_i (−1)^i δ_i` (insert 1 at slot `i`), and the contraction
/// `h(a₀⊗…⊗a_k) = ε(a₀) a₁⊗…⊗a_k`.
pub struct UniversalOracle {
    /// Kernel bases in ambient coordinates.
    pub bases: Vec<Mat>,
    /// `H^0`.
    pub h0: usize,
    /// `d`, `h` preserve the kernels and `(dh + hd)|_{Ω^k} = id`, `k = 1..=top`.
    pub homotopy: Vec<bool>,
}

pub fn universal_oracle(p: &FinHopfAlgebra, top: usize) -> UniversalOracle {
    let fl = p.field();
    let n = p.dim();
    let id = |k: usize| Mat::identity(fl, n.pow(k as u32));
    let coface = |k: usize| -> Mat {
        let mut acc = Mat::zeros(fl, n.pow(k as u32 + 2), n.pow(k as u32 + 1));
        for i in 0..=k + 1 {
            let t = Mat::kron_all(fl, &[&id(i), p.unit(), &id(k + 1 - i)]);
            acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    };
    let contraction = |k: usize| p.counit().kron(&id(k));
    let mut bases = vec![id(1)];
    for k in 1..=top {
        let blocks: Vec<Mat> = (0..k).map(|i| Mat::kron_all(fl, &[&id(i), p.mult(), &id(k - 1 - i)])).collect();
        let stacked = Mat::vstack(fl, n.pow(k as u32 + 1), &blocks.iter().collect::<Vec<_>>());
        bases.push(stacked.kernel());
    }
    let h0 = coface(0).kernel().cols();
    let homotopy = (1..=top)
        .map(|k| {
            let b = &bases[k];
            let dh = coface(k - 1).mul(&contraction(k)).mul(b);
            let hd = contraction(k + 1).mul(&coface(k)).mul(b);
            // d and h preserve the kernels, so the identity holds on the subcomplex
            let sub = Subspace::span(b);
            let closed = sub.contains(&coface(k - 1).mul(&bases[k - 1])) && Subspace::span(&bases[k - 1]).contains(&contraction(k).mul(b));
            closed && dh.add(&hd) == *b
        })
        .collect();
    UniversalOracle { bases, h0, homotopy }
}
