//! Spectral sequences of double complexes: random ones and van Est.

use hopfcoh::calculus::exterior::omega_coaction;
use hopfcoh::calculus::{build_exterior, build_omega, CalculusIdeal};
use hopfcoh::hopf::builtin::*;
use hopfcoh::spectral::{convergence_check, random_double_complex, spectral_pages, total_complex, van_est_check, Filtration, HopfModuleComplex};
use hopfcoh::FieldSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hopfcoh::Result<()> {
    let f5 = FieldSpec::prime(5)?;
    let dc = random_double_complex(f5, 3, 3, &mut ChaCha8Rng::seed_from_u64(11));
    let tot = total_complex(&dc).cohomology();
    println!("random double complex, dims {:?}, H(Tot) {:?}", dc.dims(), tot.dims);
    for filt in [Filtration::I, Filtration::II] {
        let pages = spectral_pages(&dc, filt, 5)?;
        for page in &pages {
            println!("  {filt:?} E_{} {:?}", page.r, page.dims);
        }
        let conv = convergence_check(&dc, &pages, &tot)?;
        println!("  {filt:?} antidiagonals {:?}", conv.antidiagonals);
    }

    let q = FieldSpec::Rationals;
    let p = function_algebra(&FiniteGroup::cyclic(3), q)?;
    let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 3)?;
    let om = build_omega(&p, &ext)?;
    let lb: Vec<_> = (0..=3).map(|k| omega_coaction(&p, &ext, k)).collect();
    let r = van_est_check(&p, &HopfModuleComplex::from_dga(&om, &lb)?, 3)?;
    println!("van Est for fZ3: E₂ {:?}, invariant forms {:?}", r.e2_ii, r.invariant_dims);
    for c in &r.checks {
        println!("  {c}");
    }
    Ok(())
}
