//! De Rham cohomology against the cohomology of left-invariant forms.

use hopfcoh::calculus::exterior::omega_coaction;
use hopfcoh::calculus::{build_exterior, build_omega, extend_coaction, tensor_dga, universal_calculus, CalculusIdeal};
use hopfcoh::cohomology::invariant_forms_check;
use hopfcoh::hopf::builtin::*;
use hopfcoh::FieldSpec;

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    for n in [2, 3] {
        let p = function_algebra(&FiniteGroup::cyclic(n), q)?;
        let ext = build_exterior(&p, &CalculusIdeal::zero(&p), n)?;
        let om = build_omega(&p, &ext)?;
        let lb: Vec<_> = (0..=n).map(|k| omega_coaction(&p, &ext, k)).collect();
        let r = invariant_forms_check(&p, &om, &om, &lb)?;
        println!("fZ{n}: de Rham {:?}, invariant forms {:?}", r.de_rham_dims, r.invariant_dims);
        for c in &r.checks {
            println!("  {c}");
        }
    }
    // the universal calculus is acyclic, and its coaction is induced from Δ
    let p = group_algebra(&FiniteGroup::cyclic(3), q)?;
    let u = universal_calculus(&p.algebra(), 2, 2)?;
    let t = tensor_dga(&u, &u)?;
    let lambda = extend_coaction(&p, p.comult(), &u, &t)?;
    let r = invariant_forms_check(&p, &u, &u, &lambda.lambda_bar)?;
    println!("kZ3 universal: de Rham {:?} (exact below {})", r.de_rham_dims, r.exact_below);
    Ok(())
}
