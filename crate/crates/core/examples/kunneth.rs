//! Tensor products of calculi and the Künneth formula.

use hopfcoh::calculus::{build_exterior, build_omega, tensor_dga, universal_calculus, CalculusIdeal};
use hopfcoh::cohomology::kunneth_check;
use hopfcoh::hopf::builtin::*;
use hopfcoh::FieldSpec;

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    let fz2 = function_algebra(&FiniteGroup::cyclic(2), q)?;
    let fz3 = function_algebra(&FiniteGroup::cyclic(3), q)?;
    let a = build_omega(&fz2, &build_exterior(&fz2, &CalculusIdeal::zero(&fz2), 3)?)?;
    let b = build_omega(&fz3, &build_exterior(&fz3, &CalculusIdeal::zero(&fz3), 3)?)?;
    let t = tensor_dga(&a, &b)?;
    println!("Ω(fZ2)⊗Ω(fZ3) dims {:?}", t.dga.dims());
    let r = kunneth_check(&a, &b)?;
    println!("  H {:?} = convolution {:?}", r.tensor_dims, r.convolution);
    let u = universal_calculus(&group_algebra(&FiniteGroup::cyclic(2), q)?.algebra(), 3, 3)?;
    let r = kunneth_check(&b, &u)?;
    println!("Ω(fZ3)⊗Ω_u(kZ2): H {:?}", r.tensor_dims);
    for c in &r.checks {
        println!("  {c}");
    }
    Ok(())
}
