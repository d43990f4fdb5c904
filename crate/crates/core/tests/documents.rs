mod common;

use common::*;
use hopfcoh::document::AlgebraDocument;
use hopfcoh::hopf::builtin::*;
use hopfcoh::Mat;
use proptest::prelude::*;

#[test]
fn every_builtin_round_trips() {
    for (name, p) in builtins() {
        let doc = AlgebraDocument::from_hopf(&p);
        let back = AlgebraDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc, "{name}");
        let q = back.hopf().unwrap();
        assert_eq!(q.data(), p.data(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // an ideal block holds arbitrary exact scalars, including ones that need reduction
    #[test]
    fn ideal_vectors_survive_serialisation(entries in prop::collection::vec((-50i64..50, 1i64..20), 8)) {
        let p = sweedler(Q).unwrap();
        let scalars: Vec<_> = entries.iter().map(|&(a, b)| Q.parse(&a.to_string(), &b.to_string()).unwrap()).collect();
        let m = Mat::from_dense(Q, 4, 2, scalars).unwrap();
        let doc = AlgebraDocument::from_hopf(&p).with_ideal("r", &m);
        let back = AlgebraDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back.ideal_vectors("r").unwrap(), m);
    }

    #[test]
    fn prime_field_documents_round_trip(p in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
        let h = function_algebra(&FiniteGroup::cyclic(3), f(p)).unwrap();
        let doc = AlgebraDocument::from_hopf(&h);
        let back = AlgebraDocument::from_json(&doc.to_json()).unwrap().hopf().unwrap();
        prop_assert_eq!(back.data(), h.data());
    }
}
