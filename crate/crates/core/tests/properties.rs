use proptest::prelude::*;

use lexrdp::encode::{element_from_json, element_to_json};
use lexrdp::oracle::brute_force_table;
use lexrdp::parse::{parse_descriptor, parse_element};
use lexrdp::props::{is_wrdp_witness, wrdp_witnesses};
use lexrdp::random::{random_element, random_positive, random_positive_equation, rng};
use lexrdp::rdp::{check_rdp1_com, rdp0_decompose, sums_ok, verify_table};
use lexrdp::solvers::{antilattice_strengthen, solve_table, wrdp_corner_table};
use lexrdp::word::{Letter, Word};
use lexrdp::{Element, GroupDescriptor, RdpTable, SearchBudget};

const CARRIERS: [&str; 10] = [
    "Z",
    "Q",
    "Matrix",
    "Free(2; 1, 1/2)",
    "AbFree(3; 1, 1, 1/2)",
    "Prod(Z,Q)",
    "Strict(Q,Q)",
    "Lex(Z,Matrix)",
    "Lex(Strict(Q,Q),Free(2; 1, 1))",
    "Trivial(Free(2; 1, 1))",
];

const SOLVABLE: [&str; 8] = [
    "Z",
    "Q",
    "Matrix",
    "Prod(Z,Z)",
    "Strict(Q,Q)",
    "Lex(Z,Z)",
    "Lex(Prod(Z,Z),Z)",
    "Lex(Strict(Q,Q),Matrix)",
];

fn d(s: &str) -> GroupDescriptor {
    parse_descriptor(s).unwrap()
}

fn carrier() -> impl Strategy<Value = GroupDescriptor> {
    prop::sample::select(CARRIERS.to_vec()).prop_map(d)
}

fn three(desc: &GroupDescriptor, seed: u64) -> (Element, Element, Element) {
    let mut r = rng(seed);
    (random_element(desc, &mut r, 5), random_element(desc, &mut r, 5), random_element(desc, &mut r, 5))
}

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1u32..4, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn group_laws(desc in carrier(), seed in any::<u64>()) {
        let (x, y, z) = three(&desc, seed);
        let g = &desc;
        prop_assert_eq!(g.add(&g.add(&x, &y)?, &z)?, g.add(&x, &g.add(&y, &z)?)?);
        prop_assert_eq!(g.add(&x, &g.zero())?, x.clone());
        prop_assert_eq!(g.add(&g.zero(), &x)?, x.clone());
        prop_assert!(g.is_zero(&g.add(&x, &g.neg(&x)?)?));
        prop_assert!(g.is_zero(&g.add(&g.neg(&x)?, &x)?));
        prop_assert_eq!(g.commute(&x, &y)?, g.add(&x, &y)? == g.add(&y, &x)?);
    }

    #[test]
    fn order_is_partial_and_translation_invariant(desc in carrier(), seed in any::<u64>()) {
        let (x, y, z) = three(&desc, seed);
        let g = &desc;
        prop_assert!(g.leq(&x, &x)?);
        if g.leq(&x, &y)? && g.leq(&y, &x)? {
            prop_assert_eq!(&x, &y);
        }
        let w = g.add(&x, &random_positive(g, &mut rng(seed ^ 1), 3))?;
        prop_assert!(g.leq(&x, &w)?);
        if g.leq(&w, &y)? {
            prop_assert!(g.leq(&x, &y)?);
        }
        let le = g.leq(&x, &y)?;
        prop_assert_eq!(g.leq(&g.add(&z, &x)?, &g.add(&z, &y)?)?, le);
        prop_assert_eq!(g.leq(&g.add(&x, &z)?, &g.add(&y, &z)?)?, le);
        prop_assert_eq!(g.compare(&x, &y)?.is_some(), g.comparable(&x, &y)?);
    }

    #[test]
    fn reduced_words_are_canonical(a in letters(), b in letters()) {
        let w = Word::reduce(a.clone());
        prop_assert_eq!(Word::reduce(w.letters().to_vec()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[1] != p[0].inv()));
        let v = Word::reduce(b);
        let wv = w.concat(&v);
        prop_assert_eq!(wv.concat(&v.inverse()), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn valuation_is_additive(seed in any::<u64>(), free in any::<bool>()) {
        let g = if free { d("Free(3; 1, 1/2, 1/4)") } else { d("AbFree(3; 1, 1/2, 1/4)") };
        let (x, y, _) = three(&g, seed);
        prop_assert_eq!(g.valuation(&g.add(&x, &y)?)?, g.valuation(&x)? + g.valuation(&y)?);
        prop_assert_eq!(g.valuation(&g.neg(&x)?)?, -g.valuation(&x)?);
    }

    #[test]
    fn elements_round_trip(desc in carrier(), seed in any::<u64>()) {
        let (x, _, _) = three(&desc, seed);
        let text = x.to_string();
        let back = parse_element(&desc, &text)?;
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(element_from_json(&desc, &element_to_json(&x))?, x);
        prop_assert_eq!(parse_descriptor(&desc.to_string())?, desc);
    }

    #[test]
    fn solver_tables_verify(name in prop::sample::select(SOLVABLE.to_vec()), seed in any::<u64>()) {
        let desc = d(name);
        let eq = random_positive_equation(&desc, &mut rng(seed), 6).unwrap();
        let t = solve_table(&desc, &eq)?;
        let rep = verify_table(&desc, &t)?;
        prop_assert!(rep.sums_ok && rep.all_positive(), "{:?}", t);
    }

    #[test]
    fn solver_agrees_with_oracle_on_boxes(c in prop::collection::vec(0i64..4, 6)) {
        let desc = d("Prod(Z,Z)");
        let a1 = Element::ints(&c[0..2]);
        let a2 = Element::ints(&c[2..4]);
        let b1 = Element::ints(&c[4..6]);
        let b2 = desc.lsub(&b1, &desc.add(&a1, &a2)?)?;
        prop_assume!(desc.is_positive(&b2)?);
        let eq = lexrdp::Equation::new(a1, a2, b1, b2);
        let oracle = brute_force_table(&desc, &eq, &SearchBudget::default())?;
        prop_assert_eq!(solve_table(&desc, &eq).is_ok(), oracle.found().is_some());
    }

    #[test]
    fn rdp1_exact_on_abelian_carriers(name in prop::sample::select(vec!["Z", "Q", "Prod(Z,Z)", "Strict(Q,Q)", "Lex(Prod(Z,Z),Z)"]), seed in any::<u64>()) {
        let desc = d(name);
        let mut r = rng(seed);
        let eq = random_positive_equation(&desc, &mut r, 5).unwrap();
        // Any four elements will do: the verdict must not look at the table.
        let t = RdpTable::new(
            &eq,
            random_element(&desc, &mut r, 3),
            random_element(&desc, &mut r, 3),
            random_element(&desc, &mut r, 3),
            random_element(&desc, &mut r, 3),
        );
        prop_assert!(check_rdp1_com(&desc, &t, &SearchBudget::quick())?.is_exact_holds());
    }

    #[test]
    fn single_entry_change_breaks_sums(name in prop::sample::select(vec!["Z", "Prod(Z,Z)", "Lex(Z,Z)"]), seed in any::<u64>(), which in 0usize..4) {
        let desc = d(name);
        let eq = random_positive_equation(&desc, &mut rng(seed), 5).unwrap();
        let t = solve_table(&desc, &eq)?;
        prop_assert!(sums_ok(&desc, &t)?);
        let one = match &desc {
            GroupDescriptor::Int => Element::int(1),
            _ => Element::ints(&[1, 0]),
        };
        let mut m = t.clone();
        let slot = [&mut m.c11, &mut m.c12, &mut m.c21, &mut m.c22].into_iter().nth(which).unwrap();
        *slot = desc.add(slot, &one)?;
        prop_assert!(!sums_ok(&desc, &m)?);
    }

    #[test]
    fn rdp0_splits_satisfy_bounds(name in prop::sample::select(vec!["Z", "Prod(Z,Z)", "Strict(Q,Q)", "Lex(Z,Z)"]), seed in any::<u64>()) {
        let desc = d(name);
        let eq = random_positive_equation(&desc, &mut rng(seed), 5).unwrap();
        // a1 <= a1 + a2 = b1 + b2.
        let (a, b, c) = (eq.a1, eq.b1, eq.b2);
        let (b1, c1) = rdp0_decompose(&desc, &a, &b, &c, &solve_table)?;
        prop_assert_eq!(desc.add(&b1, &c1)?, a);
        prop_assert!(desc.is_positive(&b1)? && desc.is_positive(&c1)?);
        prop_assert!(desc.leq(&b1, &b)? && desc.leq(&c1, &c)?);
    }

    #[test]
    fn strengthening_is_strict(c in prop::collection::vec(1i64..20, 6)) {
        let desc = d("Strict(Q,Q)");
        let q = |n: i64| Element::rat(n, 4);
        // b1 moves right of a1 in the first coordinate and left in the second.
        let a1 = Element::pair(q(c[0]), q(c[1] + c[3]));
        let b1 = Element::pair(q(c[0] + c[2]), q(c[1]));
        let a2 = Element::pair(q(c[2] + c[4]), q(c[5]));
        let b2 = desc.lsub(&b1, &desc.add(&a1, &a2)?)?;
        let eq = lexrdp::Equation::new(a1, a2, b1, b2);
        eq.check_positive(&desc)?;
        let t = antilattice_strengthen(&desc, &eq)?;
        prop_assert!(verify_table(&desc, &t)?.is_rdp_table());
        for x in t.entries() {
            prop_assert!(desc.is_strictly_positive(x)?);
        }
        prop_assert!(!desc.comparable(&t.c12, &t.c21)?);
    }

    #[test]
    fn corner_tables_on_abelian_carriers(name in prop::sample::select(vec!["Z", "Q", "Prod(Z,Z)", "Prod(Q,Z)"]), seed in any::<u64>()) {
        let desc = d(name);
        let (u1, u2, v1) = three(&desc, seed);
        let v2 = desc.lsub(&v1, &desc.add(&u1, &u2)?)?;
        let (d1, d2) = wrdp_witnesses(&desc, &u1, &u2, &v1, &v2, &SearchBudget::default())?;
        prop_assert!(is_wrdp_witness(&desc, &u1, &u2, &v1, &v2, &d1, &d2)?);
        let t = wrdp_corner_table(&desc, &u1, &u2, &v1, &v2, &d1, &d2)?;
        prop_assert!(sums_ok(&desc, &t)?);
        prop_assert!(desc.is_positive(&t.c11)? && desc.is_positive(&t.c22)?);
    }
}
