//! Builtin Hopf algebras, their axioms, integrals and duals.

use hopfcoh::hopf::builtin::*;
use hopfcoh::hopf::left_integral;
use hopfcoh::FieldSpec;

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7)?;
    let algebras = [
        ("kZ3", group_algebra(&FiniteGroup::cyclic(3), q)?),
        ("fZ3", function_algebra(&FiniteGroup::cyclic(3), q)?),
        ("sweedler", sweedler(q)?),
        ("dual of sweedler", dual_of(&sweedler(q)?)?),
        ("taft3 over F7", taft_auto(3, f7)?),
    ];
    for (name, p) in &algebras {
        let integral = left_integral(p);
        println!(
            "{name:>16}: dim {}, commutative {}, cocommutative {}, S invertible {}, normalised integral {}",
            p.dim(),
            p.is_commutative(),
            p.is_cocommutative(),
            p.antipode_inverse().is_some(),
            integral.is_normalised(),
        );
    }
    // the counting measure on Z2 is not normalisable in characteristic 2
    let p = function_algebra(&FiniteGroup::cyclic(2), FieldSpec::prime(2)?)?;
    println!("fZ2 over F2: integral exists {}, normalised {}", left_integral(&p).exists(), left_integral(&p).is_normalised());
    Ok(())
}
