//! Bicovariant calculi from ideals: L¹, the braiding, Λ and its differential.

use hopfcoh::calculus::{build_exterior, build_omega, check_ideal, CalculusIdeal};
use hopfcoh::hopf::builtin::*;
use hopfcoh::{FieldSpec, Mat};

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    let fz3 = function_algebra(&FiniteGroup::cyclic(3), q)?;
    let ext = build_exterior(&fz3, &CalculusIdeal::zero(&fz3), 3)?;
    println!("fZ3, R = 0: dim L¹ {}, Λ dims {:?}", ext.l1_dim(), ext.lambda_dims());
    println!("  σ is the flip: {}", *ext.sigma() == Mat::flip(q, 2, 2));
    let om = build_omega(&fz3, &ext)?;
    println!("  Ω dims {:?}, de Rham {:?}", om.dims(), om.de_rham().dims);

    let sw = sweedler(q)?;
    // basis 1, x, g, gx
    for (name, vectors) in [
        ("span{1-g, x-gx}", Mat::from_ints(q, &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]])),
        ("span{x+gx}", Mat::from_ints(q, &[vec![0], vec![1], vec![0], vec![1]])),
    ] {
        let ideal = check_ideal(&sw, &vectors)?;
        let ext = build_exterior(&sw, &ideal, 3)?;
        println!("sweedler, R = {name}: Λ dims {:?}, defect of σ at 1: {}", ext.lambda_dims(), ext.generalized_eigen_defect());
    }
    match check_ideal(&sw, &Mat::from_ints(q, &[vec![1], vec![0], vec![0], vec![0]])) {
        Err(e) => println!("R = span{{1}} rejected: {e}"),
        Ok(_) => unreachable!("1 is not in the augmentation ideal"),
    }
    Ok(())
}
