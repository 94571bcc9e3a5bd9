//! Library-level pipeline properties: serialization round trips and the
//! invariants distinguishing the four products.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use hopf_bicross::bicrossed::{theorem_report, BicrossedProduct};
use hopf_bicross::pairing::{find_matched_pairs, Factors, MatchedPair, MatchedPairJson};
use hopf_bicross::{tensor_product, HopfAlgebraData, SolveOptions};

fn fixture() -> &'static (Factors, Vec<MatchedPair>, Vec<BicrossedProduct>) {
    static CELL: OnceLock<(Factors, Vec<MatchedPair>, Vec<BicrossedProduct>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let f = Factors::new();
        let pairs = find_matched_pairs(&f, SolveOptions::default()).unwrap().pairs;
        let (products, _) = theorem_report(&f, &pairs).unwrap();
        (f, pairs, products)
    })
}

#[test]
fn invariant_reports_separate_the_products() {
    let (f, _, products) = fixture();
    let reports: Vec<_> = products
        .iter()
        .map(|p| p.invariant_report(f, SolveOptions::default()).unwrap())
        .collect();
    assert_eq!(reports.len(), 4);
    for r in &reports {
        assert_eq!(r.dim, 32);
        assert_eq!(r.grouplike_count, 8);
        assert!(!r.commutative && !r.cocommutative);
    }
    let zx: BTreeSet<&str> = reports.iter().map(|r| r.zx.as_str()).collect();
    assert_eq!(zx.len(), 4, "{zx:?}");
}

#[test]
fn products_round_trip_through_json() {
    let (_, _, products) = fixture();
    for p in products {
        let json = serde_json::to_string(&p.algebra.to_json()).unwrap();
        let back = HopfAlgebraData::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert!(back.same_structure(&p.algebra), "{}", p.algebra.name);
    }
}

#[test]
fn matched_pairs_round_trip_through_json() {
    let (f, pairs, _) = fixture();
    for pair in pairs {
        let json = serde_json::to_string_pretty(&pair.to_json(f)).unwrap();
        let data: MatchedPairJson = serde_json::from_str(&json).unwrap();
        let back = MatchedPair::from_json(&data, f).unwrap();
        assert_eq!(&back, pair);
        assert!(back.is_valid());
    }
}

#[test]
fn trivial_product_is_the_tensor_product_in_that_order() {
    let (f, _, products) = fixture();
    let tensor = tensor_product(&f.h4, &f.h8);
    let matching: Vec<&str> = products
        .iter()
        .filter(|p| p.algebra.same_structure(&tensor))
        .map(|p| p.algebra.name.as_str())
        .collect();
    assert_eq!(matching, ["H8⊗H4"]);
}
