mod common;

use common::*;
use hopfcoh::cohomology::{homotopy_check, theta_iso};
use hopfcoh::hopf::builtin::*;
use hopfcoh::hopf::{cleft_extension, Comodule, Side};
use hopfcoh::report::all_passed;
use hopfcoh::spectral::{convergence_check, random_double_complex, spectral_pages, total_complex, Filtration};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn cleft_z4_over_z2_is_a_hopf_module() {
    let (p, total, phi) = z4_over_z2();
    let c = cleft_extension(&p, &total, &phi).unwrap();
    let r = homotopy_check(&p, &total.comodule(), &c.action, 3).unwrap();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    assert_eq!(r.coinvariant_dim, 2);
    assert_eq!(r.hc_dims[..3], [2, 0, 0]);
}

#[test]
fn forms_of_fz3_vanish_in_positive_degree() {
    let p = function_algebra(&FiniteGroup::cyclic(3), Q).unwrap();
    let (ext, om, lb) = zero_forms(&p, 2);
    for k in 0..=2 {
        let c = Comodule::new(&p, om.dim(k), lb[k].clone(), Side::Left).unwrap();
        let r = homotopy_check(&p, &c, om.product(0, k), 2).unwrap();
        assert!(all_passed(&r.checks), "{:?}", r.checks);
        // left-invariant forms are Λ^k
        assert_eq!(r.coinvariant_dim, ext.lambda(k).dim());
        assert_eq!(r.hc_dims[1], 0);
    }
}

#[test]
fn theta_on_forms() {
    let p = function_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
    let (_, om, lb) = zero_forms(&p, 1);
    let c = Comodule::new(&p, om.dim(1), lb[1].clone(), Side::Left).unwrap();
    let t = theta_iso(&p, &c, 3).unwrap();
    assert_eq!(t.g.cohomology().dims, t.invariant_d.cohomology().dims);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_double_complexes_converge(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7]), caps in (1usize..4, 1usize..4)) {
        let dc = random_double_complex(f(p), caps.0, caps.1, &mut ChaCha8Rng::seed_from_u64(seed));
        let tot = total_complex(&dc).cohomology();
        for filt in [Filtration::I, Filtration::II] {
            let pages = spectral_pages(&dc, filt, caps.0.max(caps.1) + 2).unwrap();
            let r = convergence_check(&dc, &pages, &tot).unwrap();
            prop_assert!(all_passed(&r.checks));
            prop_assert_eq!(r.antidiagonals, tot.dims[..=dc.top_degree()].to_vec());
        }
    }

    #[test]
    fn regular_modules_are_acyclic(n in 2usize..5, functions in any::<bool>()) {
        let g = FiniteGroup::cyclic(n);
        let p = if functions { function_algebra(&g, Q).unwrap() } else { group_algebra(&g, Q).unwrap() };
        let mu = hopfcoh::hopf::ModuleAction::regular_left(&p).action;
        let r = homotopy_check(&p, &Comodule::regular(&p, Side::Left), &mu, 2).unwrap();
        prop_assert!(all_passed(&r.checks));
        prop_assert_eq!(&r.hc_dims[..2], &[1, 0]);
    }
}
