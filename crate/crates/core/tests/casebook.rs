use lexrdp::casebook::{run_all, run_case, CASE_IDS};
use lexrdp::{Error, SearchBudget};

#[test]
fn every_case_passes() {
    let reports = run_all(&SearchBudget::default());
    assert_eq!(reports.len(), CASE_IDS.len());
    for r in &reports {
        let failed: Vec<&str> = r.claims.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert!(r.pass && failed.is_empty(), "{}: {failed:?}", r.id);
        assert!(!r.claims.is_empty(), "{}", r.id);
    }
}

#[test]
fn reports_are_deterministic() {
    let b = SearchBudget::default();
    for id in ["strict-square-lex-rdp1-failure", "ncdp-matrix-lex", "antilattice-offdiagonal"] {
        let x = serde_json::to_string(&run_case(id, &b).unwrap()).unwrap();
        let y = serde_json::to_string(&run_case(id, &b).unwrap()).unwrap();
        assert_eq!(x, y, "{id}");
    }
}

#[test]
fn strict_square_case_claims() {
    let r = run_case("strict-square-lex-rdp1-failure", &SearchBudget::default()).unwrap();
    let rdp1 = r.claims.iter().find(|c| c.name.contains("RDP1")).expect("an RDP1 claim");
    assert!(rdp1.pass);
    assert!(r.claims.iter().any(|c| c.bound.is_some()), "oracle claim states its bound");
}

#[test]
fn bounded_claims_state_their_bound() {
    for id in ["free-valuation-no-wrdp", "free-commutator-no-rdp"] {
        let r = run_case(id, &SearchBudget::default()).unwrap();
        let bound = r.claims.iter().filter_map(|c| c.bound.as_deref()).next().expect("bounded claim");
        assert!(bound.contains("6"), "{id}: {bound}");
    }
}

#[test]
fn unknown_case() {
    assert!(matches!(run_case("nope", &SearchBudget::default()), Err(Error::UnknownCase(_))));
}
