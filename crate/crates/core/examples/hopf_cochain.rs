//! Hopf cochain cohomology: vanishing on Hopf modules, θ, and group cohomology.

use hopfcoh::cohomology::amitsur::amitsur_g;
use hopfcoh::cohomology::{homotopy_check, theta_iso};
use hopfcoh::hopf::builtin::*;
use hopfcoh::hopf::{cleft_extension, Comodule, ComoduleAlgebra, ModuleAction, Side};
use hopfcoh::{FieldSpec, Mat};

fn main() -> hopfcoh::Result<()> {
    let q = FieldSpec::Rationals;
    let sw = sweedler(q)?;
    let regular = Comodule::regular(&sw, Side::Left);
    let r = homotopy_check(&sw, &regular, &ModuleAction::regular_left(&sw).action, 3)?;
    println!("sweedler acting on itself: H_c {:?}", r.hc_dims);

    // kZ4 over kZ2 through Z4 → Z2, cleft by the section 1 ↦ 1, t ↦ t
    let p = group_algebra(&FiniteGroup::cyclic(2), q)?;
    let z4 = group_algebra(&FiniteGroup::cyclic(4), q)?;
    let lam = Mat::from_triplets(q, 8, 4, (0..4).map(|i| ((i % 2) * 4 + i, i, q.one())));
    let total = ComoduleAlgebra::new(&p, 4, z4.mult().clone(), z4.unit().clone(), lam)?;
    let phi = Mat::from_ints(q, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]);
    let cleft = cleft_extension(&p, &total, &phi)?;
    let r = homotopy_check(&p, &total.comodule(), &cleft.action, 3)?;
    println!("kZ4 over kZ2: coinvariants {}, H_c {:?}", r.coinvariant_dim, r.hc_dims);

    let t = theta_iso(&sw, &regular, 3)?;
    println!("θ: G dims {:?} ≅ coinvariant D dims {:?}", t.g.dims(), t.invariant_d.dims());

    let f2 = FieldSpec::prime(2)?;
    let fz2 = function_algebra(&FiniteGroup::cyclic(2), f2)?;
    let h = amitsur_g(&fz2, &Comodule::trivial(&fz2, 1, Side::Left), 4)?.cohomology();
    println!("fZ2 over F2 with trivial coefficients: H_c {:?} (top degree is an upper bound)", h.dims);
    Ok(())
}
