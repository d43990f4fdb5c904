//! The Hopf-Lie algebra of a calculus, its bracket, T and its cohomology.

use hopfcoh::calculus::{build_exterior, check_ideal, CalculusIdeal};
use hopfcoh::hopf::builtin::*;
use hopfcoh::hopf_lie::{build_hopf_lie, hl_cohomology_iso_check, hl_complex, t_map, Construction};
use hopfcoh::{FieldSpec, Mat};

fn show(m: &Mat) -> String {
    let rows: Vec<String> = m.to_dense().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    let p = function_algebra(&FiniteGroup::cyclic(3), q)?;
    let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 3)?;
    let hl = build_hopf_lie(&p, &ext)?;
    println!("fZ3: dim 𝔤 {}, Λ𝔤 dims {:?}", hl.dim(), hl.wedge_dims());
    println!("  bracket {}", show(hl.bracket()));
    println!("  T {}", show(&t_map(&hl)?));
    let k = hl_complex(&hl, &ext, Construction::ExplicitT)?;
    println!("  H_HL {:?}", k.complex.cohomology().dims);

    let sw = sweedler(q)?;
    let ideal = check_ideal(&sw, &Mat::from_ints(q, &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]]))?;
    let ext = build_exterior(&sw, &ideal, 3)?;
    let hl = build_hopf_lie(&sw, &ext)?;
    println!("sweedler: dim 𝔤 {}, bracket {}", hl.dim(), show(hl.bracket()));
    let r = hl_cohomology_iso_check(&sw, &hl, &ext)?;
    println!("  H_HL {:?}, invariant forms {:?}", r.hl_dims, r.invariant_dims);

    let f2 = FieldSpec::prime(2)?;
    let p = function_algebra(&FiniteGroup::cyclic(3), f2)?;
    let ext = build_exterior(&p, &CalculusIdeal::zero(&p), 2)?;
    let hl = build_hopf_lie(&p, &ext)?;
    println!("fZ3 over F2: {}", t_map(&hl).unwrap_err());
    Ok(())
}
