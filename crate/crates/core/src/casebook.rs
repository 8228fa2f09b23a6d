//! Reproductions of the worked examples, each as a list of checked claims.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::budget::{SearchBudget, SearchOutcome};
use crate::error::{Error, Result};
use crate::group::{Element, GroupDescriptor};
use crate::num::rat;
use crate::oracle::{brute_force_table, brute_force_tables, search_wrdp_k};
use crate::parse::{parse_descriptor, parse_element};
use crate::props::{
    antilattice_status, com_directed_witness, directed_witness, is_central, is_ncdp_witness, ncdp_witness,
    wrdp_witnesses,
};
use crate::rdp::{check_rdp1_com, interpolate, rdp0_decompose, verify_table, Equation, RdpTable};
use crate::sample::sample_elements;
use crate::solvers::{antilattice_strengthen, solve, solve_lex_ncdp_with_heads, solve_table};

pub const CASE_IDS: [&str; 12] = [
    "valuation-forces-abelian",
    "trivial-first-factor",
    "strict-square-lex-rdp1-failure",
    "rdp0-rip-interpolation",
    "antilattice-offdiagonal",
    "strict-product-rdp1-failure",
    "ncdp-matrix-lex",
    "matrix-center-not-comdirected",
    "ncdp-lex-rationals",
    "antidiagonal-not-directed",
    "free-valuation-no-wrdp",
    "free-commutator-no-rdp",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
    /// Set for claims that only cover a finite search space.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub summary: String,
    pub inputs: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub pass: bool,
}

impl CaseReport {
    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }
}

struct Book(CaseReport);

impl Book {
    fn new(id: &str, summary: &str) -> Self {
        Book(CaseReport {
            id: id.into(),
            summary: summary.into(),
            inputs: BTreeMap::new(),
            claims: Vec::new(),
            pass: true,
        })
    }

    fn input(&mut self, k: &str, v: impl Display) {
        self.0.inputs.insert(k.into(), v.to_string());
    }

    fn claim(&mut self, name: &str, pass: bool, evidence: Vec<String>) {
        self.push(name, pass, None, evidence);
    }

    fn bounded(&mut self, name: &str, pass: bool, bound: String, evidence: Vec<String>) {
        self.push(name, pass, Some(bound), evidence);
    }

    fn push(&mut self, name: &str, pass: bool, bound: Option<String>, evidence: Vec<String>) {
        self.0.pass &= pass;
        self.0.claims.push(Claim { name: name.into(), pass, bound, evidence });
    }

    /// Records a failed claim for a step that errored instead of aborting.
    fn attempt<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.claim(name, false, vec![format!("error: {e}")]);
                None
            }
        }
    }

    fn done(self) -> CaseReport {
        self.0
    }
}

fn d(text: &str) -> GroupDescriptor {
    parse_descriptor(text).expect("pinned descriptor")
}

fn e(desc: &GroupDescriptor, text: &str) -> Element {
    parse_element(desc, text).expect("pinned element")
}

fn eq4(desc: &GroupDescriptor, xs: [&str; 4]) -> Equation {
    let [a1, a2, b1, b2] = xs.map(|x| e(desc, x));
    Equation::new(a1, a2, b1, b2)
}

fn show_table(t: &RdpTable) -> String {
    format!("[{}, {}; {}, {}]", t.c11, t.c12, t.c21, t.c22)
}

fn show(v: &[Element]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Budget for word searches: every reduced word up to length 6.
pub fn word_budget() -> SearchBudget {
    SearchBudget::default().with_word_len(6).with_candidates(1_000_000)
}

fn bound_text(b: &SearchBudget, examined: usize) -> String {
    format!(
        "reduced words up to length {} ({} candidates examined, cap {})",
        b.max_word_len, examined, b.max_candidates
    )
}

pub fn run_case(id: &str, budget: &SearchBudget) -> Result<CaseReport> {
    Ok(match id {
        "valuation-forces-abelian" => valuation_forces_abelian(),
        "trivial-first-factor" => trivial_first_factor(budget),
        "strict-square-lex-rdp1-failure" => strict_square_lex(budget),
        "rdp0-rip-interpolation" => rdp0_rip(),
        "antilattice-offdiagonal" => antilattice_offdiagonal(budget),
        "strict-product-rdp1-failure" => strict_product_rdp1(budget),
        "ncdp-matrix-lex" => ncdp_matrix_lex(),
        "matrix-center-not-comdirected" => matrix_center(),
        "ncdp-lex-rationals" => ncdp_lex_rationals(),
        "antidiagonal-not-directed" => antidiagonal(budget),
        "free-valuation-no-wrdp" => free_valuation_no_wrdp(),
        "free-commutator-no-rdp" => free_commutator_no_rdp(),
        other => return Err(Error::UnknownCase(other.into())),
    })
}

pub fn run_all(budget: &SearchBudget) -> Vec<CaseReport> {
    CASE_IDS.iter().map(|id| run_case(id, budget).expect("listed case")).collect()
}

fn valuation_forces_abelian() -> CaseReport {
    let mut b = Book::new(
        "valuation-forces-abelian",
        "If zero-valuation elements are central, the generators commute: the group collapses to its abelianization.",
    );
    let f = d("Free(2; 1, 1/2)");
    let af = d("AbFree(2; 1, 1/2)");
    b.input("free", &f);
    b.input("abelianized", &af);
    let w = e(&f, "g1 -g2 -g2");
    let g1 = e(&f, "g1");
    let g2 = e(&f, "g2");
    b.input("w", &w);
    let vw = f.valuation(&w).unwrap();
    let wa = e(&af, "(1, -2)");
    let vwa = af.valuation(&wa).unwrap();
    b.claim(
        "valuation of g1 - 2 g2 is 0",
        vw == rat(0, 1) && vwa == rat(0, 1),
        vec![format!("v(w) = {vw} in the free group, {vwa} in the abelianization")],
    );
    let g2g2 = f.add(&g2, &g2).unwrap();
    b.claim("g1 = w + 2 g2", f.add(&w, &g2g2).unwrap() == g1, vec![]);
    let free_commute = f.commute(&w, &g2).unwrap();
    b.claim(
        "w and g2 do not commute in the free group",
        !free_commute,
        vec![format!("w + g2 = {}", f.add(&w, &g2).unwrap()), format!("g2 + w = {}", f.add(&g2, &w).unwrap())],
    );
    // [g1, g2] = -2g2 + [w, g2] + 2g2, so a central w kills [g1, g2].
    let comm = |x: &Element, y: &Element| f.sum(&[&f.neg(x).unwrap(), &f.neg(y).unwrap(), x, y]).unwrap();
    let c12 = comm(&g1, &g2);
    let conj = f.sum(&[&f.neg(&g2g2).unwrap(), &comm(&w, &g2), &g2g2]).unwrap();
    b.claim(
        "[g1, g2] is a conjugate of [w, g2]",
        c12 == conj,
        vec![format!("[g1, g2] = {c12}"), format!("-2g2 + [w, g2] + 2g2 = {conj}")],
    );
    let a1 = e(&af, "(1, 0)");
    let a2 = e(&af, "(0, 1)");
    let forced = af.commute(&wa, &a2).unwrap() && af.commute(&a1, &a2).unwrap();
    b.claim(
        "in the abelianized model w is central and g1 + g2 = g2 + g1",
        forced,
        vec![format!("g1 + g2 = {}", af.add(&a1, &a2).unwrap())],
    );
    b.done()
}

fn trivial_first_factor(budget: &SearchBudget) -> CaseReport {
    let mut b = Book::new(
        "trivial-first-factor",
        "A trivially ordered non-abelian first factor: positive elements have zero heads, so tables come from the second factor.",
    );
    let desc = d("Lex(Trivial(Free(2; 1, 1)), Z)");
    b.input("carrier", &desc);
    let x = e(&desc, "(g1, 0)");
    let y = e(&desc, "(g2, 0)");
    b.claim(
        "carrier is non-abelian",
        !desc.commute(&x, &y).unwrap(),
        vec![format!("{} != {}", desc.add(&x, &y).unwrap(), desc.add(&y, &x).unwrap())],
    );
    let sample = sample_elements(&desc, budget);
    let positive: Vec<&Element> = sample.iter().filter(|s| desc.is_positive(s).unwrap()).collect();
    let heads_zero = positive.iter().all(|p| p.split2().unwrap().0 == &Element::Word(Default::default()));
    b.bounded(
        "positive elements have zero first component",
        heads_zero,
        format!("{} sampled elements, {} positive", sample.len(), positive.len()),
        vec![],
    );
    let eq = eq4(&desc, ["(0, 2)", "(0, 3)", "(0, 1)", "(0, 4)"]);
    b.input("equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    if let Some((t, tr)) = b.attempt("solver returns a table", solve(&desc, &eq, budget)) {
        let rep = verify_table(&desc, &t).unwrap();
        b.claim(
            "table comes from the second factor",
            rep.is_rdp_table() && tr.tag == "trivial-first-factor",
            vec![show_table(&t), format!("trace {}", tr.tag)],
        );
        let v = check_rdp1_com(&desc, &t, budget).unwrap();
        b.claim("table satisfies RDP1", v.is_holds(), show(v.evidence()));
    }
    b.done()
}

fn square_lex_equation(desc: &GroupDescriptor) -> Equation {
    eq4(desc, ["((1, 4), M(2,0))", "((3, 7), M(1,1))", "((2, 3), M(2,2))", "((2, 8), M(1,0))"])
}

fn strict_square_lex(budget: &SearchBudget) -> CaseReport {
    let mut b = Book::new(
        "strict-square-lex-rdp1-failure",
        "Strict square of the rationals, lexicographically over 2x2 affine matrices: RDP holds, RDP1 fails.",
    );
    let desc = d("Lex(Strict(Q, Q), Matrix)");
    let g = GroupDescriptor::Matrix;
    b.input("carrier", &desc);
    let [x, y, a, bb] = ["M(2,0)", "M(1,1)", "M(2,2)", "M(1,0)"].map(|s| e(&g, s));
    b.input("x, y, a, b", format!("{x}, {y}, {a}, {bb}"));
    b.claim(
        "x + y != y + x",
        !g.commute(&x, &y).unwrap(),
        vec![format!("x + y = {}", g.add(&x, &y).unwrap()), format!("y + x = {}", g.add(&y, &x).unwrap())],
    );
    b.claim("x + y = a + b", g.add(&x, &y).unwrap() == g.add(&a, &bb).unwrap(), vec![]);
    let eq = square_lex_equation(&desc);
    b.input("equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    let strict_pos_head = |t: &RdpTable| {
        let a = GroupDescriptor::strict(vec![GroupDescriptor::Rat, GroupDescriptor::Rat]);
        a.is_strictly_positive(t.c12.split2().unwrap().0).unwrap() && a.is_strictly_positive(t.c21.split2().unwrap().0).unwrap()
    };
    if let Some((t, tr)) = b.attempt("solver returns a table", solve(&desc, &eq, budget)) {
        let rep = verify_table(&desc, &t).unwrap();
        b.claim("solver table verifies", rep.is_rdp_table(), vec![show_table(&t), format!("trace {}", tr.tag)]);
        b.claim("off-diagonal first components strictly positive", strict_pos_head(&t), vec![]);
        let v = check_rdp1_com(&desc, &t, budget).unwrap();
        b.claim("RDP1 fails on the solver table", v.is_fails(), show(v.evidence()));
    }
    let obudget = SearchBudget::default();
    if let Some((tables, examined, _)) =
        b.attempt("oracle tables", brute_force_tables(&desc, &eq, &obudget, 40))
    {
        let all_fail = tables.iter().all(|t| check_rdp1_com(&desc, t, budget).unwrap().is_fails());
        let heads = tables.iter().all(strict_pos_head);
        let bound = format!("first {} tables among {examined} corner candidates", tables.len());
        b.bounded("at least 20 oracle tables", tables.len() >= 20, bound.clone(), vec![]);
        b.bounded("every oracle table fails RDP1", all_fail && !tables.is_empty(), bound.clone(), vec![]);
        b.bounded("every oracle table has strictly positive off-diagonal heads", heads, bound, vec![]);
    }
    b.done()
}

fn rdp0_rip() -> CaseReport {
    let mut b = Book::new(
        "rdp0-rip-interpolation",
        "RDP0 yields interpolation in any po-group, directed or not.",
    );
    let solver = |desc: &GroupDescriptor, eq: &Equation| solve_table(desc, eq);
    let p = d("Prod(Z, Z)");
    b.input("product", &p);
    let [a1, a2, b1, b2] = ["(0, 1)", "(1, 0)", "(2, 2)", "(3, 1)"].map(|s| e(&p, s));
    if let Some(c) = b.attempt("interpolant in Prod(Z, Z)", interpolate(&p, &a1, &a2, &b1, &b2, &solver)) {
        let ok = [(&a1, &c), (&a2, &c), (&c, &b1), (&c, &b2)].iter().all(|(x, y)| p.leq(x, y).unwrap());
        b.claim("interpolant in Prod(Z, Z)", ok, vec![format!("c = {c}")]);
    }
    let m = GroupDescriptor::Matrix;
    let [a, x, y] = ["M(2,1)", "M(3/2,0)", "M(3/2,1)"].map(|s| e(&m, s));
    if let Some((x1, y1)) = b.attempt("RDP0 split in Matrix", rdp0_decompose(&m, &a, &x, &y, &solver)) {
        let ok = m.add(&x1, &y1).unwrap() == a && m.leq(&x1, &x).unwrap() && m.leq(&y1, &y).unwrap();
        b.claim("RDP0 split in Matrix", ok, vec![format!("{a} = {x1} + {y1}")]);
    }
    let [a1, a2, b1, b2] = ["M(1,0)", "M(1,1)", "M(2,0)", "M(3/2,-1)"].map(|s| e(&m, s));
    if let Some(c) = b.attempt("interpolant in Matrix", interpolate(&m, &a1, &a2, &b1, &b2, &solver)) {
        let ok = [(&a1, &c), (&a2, &c), (&c, &b1), (&c, &b2)].iter().all(|(x, y)| m.leq(x, y).unwrap());
        b.claim("interpolant in Matrix", ok, vec![format!("c = {c}")]);
    }
    let t = d("Trivial(Q)");
    let q = e(&t, "3/2");
    b.claim("Trivial(Q) is not directed", directed_witness(&t, &e(&t, "1"), &q).is_err(), vec![]);
    if let Some(c) = b.attempt("interpolant in Trivial(Q)", interpolate(&t, &q, &q, &q, &q, &solver)) {
        b.claim("interpolant in Trivial(Q)", c == q, vec![format!("c = {c}")]);
    }
    b.done()
}

fn antilattice_offdiagonal(budget: &SearchBudget) -> CaseReport {
    let mut b = Book::new(
        "antilattice-offdiagonal",
        "In an antilattice, incomparable a1, b1 force strictly positive, incomparable off-diagonal entries.",
    );
    let desc = d("Strict(Q, Q)");
    b.input("carrier", &desc);
    let eq = eq4(&desc, ["(1, 4)", "(3, 7)", "(2, 3)", "(2, 8)"]);
    b.input("equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    b.claim("carrier is an antilattice", antilattice_status(&desc, budget).is_holds(), vec![]);
    if let Some(t) = b.attempt("strengthened table", antilattice_strengthen(&desc, &eq)) {
        let sp = t.entries().iter().all(|x| desc.is_strictly_positive(x).unwrap());
        let inc = !desc.comparable(&t.c12, &t.c21).unwrap();
        b.claim(
            "strengthened table is strictly positive with incomparable off-diagonal",
            sp && inc && verify_table(&desc, &t).unwrap().is_rdp_table(),
            vec![show_table(&t)],
        );
    }
    let obudget = SearchBudget::default();
    if let Some((tables, examined, _)) = b.attempt("oracle tables", brute_force_tables(&desc, &eq, &obudget, 200)) {
        let ok = tables
            .iter()
            .all(|t| desc.is_strictly_positive(&t.c12).unwrap() && desc.is_strictly_positive(&t.c21).unwrap());
        b.bounded(
            "every oracle table has m12 > 0 and m21 > 0",
            ok && !tables.is_empty(),
            format!("{} tables among {examined} corner candidates", tables.len()),
            vec![],
        );
    }
    b.done()
}

fn strict_product_rdp1(budget: &SearchBudget) -> CaseReport {
    let mut b = Book::new(
        "strict-product-rdp1-failure",
        "A strict product of dense chains lex a non-abelian RDP1 group has RDP; RDP1 fails once there are two or more coordinates.",
    );
    let desc = d("Lex(Strict(Q, Q, Q), Matrix)");
    b.input("carrier", &desc);
    let eq = eq4(&desc, ["((1, 4, 2), M(2,0))", "((3, 7, 5), M(1,1))", "((2, 3, 4), M(2,2))", "((2, 8, 3), M(1,0))"]);
    b.input("equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    if let Some((t, tr)) = b.attempt("solver returns a table", solve(&desc, &eq, budget)) {
        b.claim(
            "solver table verifies",
            verify_table(&desc, &t).unwrap().is_rdp_table(),
            vec![show_table(&t), format!("trace {}", tr.tag)],
        );
        let v = check_rdp1_com(&desc, &t, budget).unwrap();
        b.claim("RDP1 fails with three coordinates", v.is_fails(), show(v.evidence()));
    }
    let s = d("Strict(Q, Q, Q)");
    let se = eq4(&s, ["(1, 4, 2)", "(3, 7, 5)", "(2, 3, 4)", "(2, 8, 3)"]);
    if let Some(t) = b.attempt("strict product has RDP", solve_table(&s, &se)) {
        let sp = t.entries().iter().all(|x| s.is_strictly_positive(x).unwrap());
        b.claim("strict product table is strictly positive", sp, vec![show_table(&t)]);
    }
    let one = d("Lex(Q, Matrix)");
    let oe = eq4(&one, ["(1, M(2,0))", "(3, M(1,1))", "(2, M(2,2))", "(2, M(1,0))"]);
    if let Some((t, _)) = b.attempt("one coordinate", solve(&one, &oe, budget)) {
        let v = check_rdp1_com(&one, &t, budget).unwrap();
        b.claim("with one coordinate the solver table satisfies RDP1", v.is_holds(), vec![show_table(&t)]);
    }
    b.done()
}

fn ncdp_matrix_lex() -> CaseReport {
    let mut b = Book::new(
        "ncdp-matrix-lex",
        "Affine matrices lex the strict rational square: NCDP witnesses exist, so tables over it lex Z come from a conjugate shift.",
    );
    let a = d("Lex(Matrix, Strict(Q, Q))");
    b.input("first factor", &a);
    for (name, x, y) in [
        ("NCDP witness with nonzero heads", "(M(2,0), (1, 3))", "(M(2,0), (3, 1))"),
        ("NCDP witness with zero heads", "(M(1,0), (1, 3))", "(M(1,0), (3, 1))"),
    ] {
        let (x, y) = (e(&a, x), e(&a, y));
        if let Some(w) = b.attempt(name, ncdp_witness(&a, &x, &y)) {
            b.claim(name, is_ncdp_witness(&a, &x, &y, &w).unwrap(), vec![format!("{x}, {y} -> {w}")]);
        }
    }
    let ae = eq4(&a, ["(M(2,0), (1, 2))", "(M(2,0), (2, 1))", "(M(2,0), (2, 1))", "(M(2,0), (1, 2))"]);
    if let Some(t) = b.attempt("first factor has RDP", solve_table(&a, &ae)) {
        b.claim("first factor has RDP", verify_table(&a, &t).unwrap().is_rdp_table(), vec![show_table(&t)]);
    }
    let desc = GroupDescriptor::lex(a.clone(), GroupDescriptor::Int);
    b.input("carrier", &desc);
    let eq = eq4(
        &desc,
        ["((M(2,0), (1, 2)), 1)", "((M(2,0), (2, 1)), 2)", "((M(2,0), (2, 1)), 2)", "((M(2,0), (1, 2)), 1)"],
    );
    b.input("equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    let heads = RdpTable::new(
        &Equation::new(ae.a1.clone(), ae.a2.clone(), ae.b1.clone(), ae.b2.clone()),
        a.zero(),
        ae.a1.clone(),
        ae.b1.clone(),
        a.zero(),
    );
    b.input("head table", show_table(&heads));
    if let Some((t, tr)) = b.attempt("conjugate shift", solve_lex_ncdp_with_heads(&a, &GroupDescriptor::Int, &eq, &heads)) {
        let ok = verify_table(&desc, &t).unwrap().is_rdp_table()
            && tr.checks.get("conjugation") == Some(&true)
            && tr.checks.get("row2-recombination") == Some(&true);
        b.claim(
            "conjugate shift gives a verified table",
            ok,
            vec![show_table(&t), format!("d' = {}", tr.aux.get("d'").map(|x| x.to_string()).unwrap_or_default())],
        );
    }
    b.done()
}

fn matrix_center() -> CaseReport {
    let mut b = Book::new(
        "matrix-center-not-comdirected",
        "The affine matrix group has trivial center, so the lexicographic product over it is not com-directed, yet keeps NCDP.",
    );
    let m = GroupDescriptor::Matrix;
    let mut grid = Vec::new();
    for a in [rat(1, 3), rat(1, 2), rat(1, 1), rat(2, 1), rat(3, 1)] {
        for n in -4..=4 {
            grid.push(Element::Matrix(a.clone(), rat(n, 2)));
        }
    }
    let ok = grid
        .iter()
        .all(|x| is_central(&m, x).unwrap() == (*x == Element::Matrix(rat(1, 1), rat(0, 1))));
    b.bounded(
        "M(a,b) is central iff (a,b) = (1,0)",
        ok,
        format!("{} grid points a in {{1/3,1/2,1,2,3}}, b in [-2,2] step 1/2", grid.len()),
        vec![],
    );
    let (x, y) = (e(&m, "M(1/2,0)"), e(&m, "M(1/3,0)"));
    let r = com_directed_witness(&m, &x, &y);
    b.claim(
        "no central lower bound for M(1/2,0), M(1/3,0)",
        matches!(r, Err(Error::NotComDirected(_))),
        vec![format!("{r:?}")],
    );
    let a = d("Lex(Matrix, Strict(Q, Q))");
    b.input("carrier", &a);
    let c1 = is_central(&a, &e(&a, "(M(1,0), (1, 2))")).unwrap();
    let c2 = is_central(&a, &e(&a, "(M(2,0), (0, 0))")).unwrap();
    b.claim("center of the product is the identity times the second factor", c1 && !c2, vec![]);
    let (x, y) = (e(&a, "(M(1/2,0), (0, 0))"), e(&a, "(M(1/3,0), (0, 0))"));
    let r = com_directed_witness(&a, &x, &y);
    b.claim(
        "product is not com-directed",
        matches!(r, Err(Error::NotComDirected(_))),
        vec![format!("{x}, {y}")],
    );
    let (x, y) = (e(&a, "(M(2,0), (1, 3))"), e(&a, "(M(2,0), (3, 1))"));
    let w = ncdp_witness(&a, &x, &y);
    b.claim(
        "product still has an NCDP witness",
        w.as_ref().map(|w| is_ncdp_witness(&a, &x, &y, w).unwrap()).unwrap_or(false),
        vec![format!("{w:?}")],
    );
    b.done()
}

fn ncdp_lex_rationals() -> CaseReport {
    let mut b = Book::new(
        "ncdp-lex-rationals",
        "A directed RDP group lex the rationals has NCDP on commuting pairs, with explicit witnesses per head pattern.",
    );
    let desc = d("Lex(Prod(Z, Z), Q)");
    b.input("carrier", &desc);
    let cases = [
        ("both heads positive", "((1, 0), 1)", "((0, 1), 2)", "((0, 0), 1)"),
        ("both heads zero", "((0, 0), 1)", "((0, 0), 2)", "((0, 0), 1/2)"),
        ("first head zero", "((0, 0), 1)", "((1, 0), -5)", "((0, 0), 1/2)"),
        ("second head zero", "((1, 0), -5)", "((0, 0), 1)", "((0, 0), 1/2)"),
    ];
    for (name, x, y, w) in cases {
        let (x, y, w) = (e(&desc, x), e(&desc, y), e(&desc, w));
        b.claim(
            &format!("witness for {name}"),
            is_ncdp_witness(&desc, &x, &y, &w).unwrap(),
            vec![format!("{x}, {y} -> {w}")],
        );
    }
    let (x, y) = (e(&desc, "((1, 0), 1)"), e(&desc, "((0, 1), 2)"));
    if let Some(w) = b.attempt("witness search", ncdp_witness(&desc, &x, &y)) {
        b.claim("witness search agrees", is_ncdp_witness(&desc, &x, &y, &w).unwrap(), vec![w.to_string()]);
    }
    let eq = eq4(&desc, ["((1, 0), 1)", "((0, 1), 2)", "((0, 1), 2)", "((1, 0), 1)"]);
    if let Some(t) = b.attempt("carrier has RDP", solve_table(&desc, &eq)) {
        b.claim("carrier has RDP", verify_table(&desc, &t).unwrap().is_rdp_table(), vec![show_table(&t)]);
    }
    b.done()
}

fn antidiagonal(budget: &SearchBudget) -> CaseReport {
    let mut b = Book::new(
        "antidiagonal-not-directed",
        "The anti-diagonal of the rational plane has only 0 positive: RDP holds, it is not directed, and wRDP fails.",
    );
    let t = d("Trivial(Q)");
    b.input("carrier", &t);
    b.input("model", "x in Trivial(Q) stands for (x, -x) in Prod(Q, Q)");
    let plane = d("Prod(Q, Q)");
    let emb = |x: &Element| Element::Tuple(vec![x.clone(), t.neg(x).unwrap()]);
    let sample = sample_elements(&t, &SearchBudget::quick());
    let same = sample
        .iter()
        .all(|x| sample.iter().all(|y| t.leq(x, y).unwrap() == plane.leq(&emb(x), &emb(y)).unwrap()));
    b.bounded(
        "order matches the anti-diagonal of Prod(Q, Q)",
        same,
        format!("{} sampled pairs", sample.len() * sample.len()),
        vec![],
    );
    let pos = sample.iter().filter(|x| t.is_positive(x).unwrap()).count();
    b.bounded("positive cone is {0}", pos == 1, format!("{} samples", sample.len()), vec![]);
    let r = directed_witness(&t, &e(&t, "1"), &e(&t, "2"));
    b.claim("not directed", matches!(r, Err(Error::NotDirected(_))), vec![]);
    let [u1, u2, v1, v2] = ["0", "3", "1", "2"].map(|s| e(&t, s));
    b.input("wRDP equation", format!("{u1} + {u2} = {v1} + {v2}"));
    let r = wrdp_witnesses(&t, &u1, &u2, &v1, &v2, budget);
    b.claim("wRDP witnesses fail with NotDirected", matches!(r, Err(Error::NotDirected(_))), vec![]);
    let s = search_wrdp_k(&t, &u1, &u2, &v1, &v2, budget).unwrap();
    b.claim("no k satisfies the k-conditions", s.found().is_none(), vec![format!("{} candidates", s.examined())]);
    let z = e(&t, "0");
    let eq = Equation::new(z.clone(), z.clone(), z.clone(), z);
    if let Some(tab) = b.attempt("RDP holds", solve_table(&t, &eq)) {
        b.claim("RDP holds", verify_table(&t, &tab).unwrap().is_rdp_table(), vec![]);
    }
    b.done()
}

fn free_valuation_no_wrdp() -> CaseReport {
    let mut b = Book::new(
        "free-valuation-no-wrdp",
        "A free group ordered by a valuation: directed with RDP0, but RDP and wRDP fail; the abelianization keeps wRDP.",
    );
    let f = d("Free(3; 1, 1, 1/2)");
    let af = d("AbFree(3; 1, 1, 1/2)");
    let budget = word_budget();
    b.input("carrier", &f);
    b.input("abelianized", &af);
    b.input("budget", format!("max_word_len {}, max_candidates {}", budget.max_word_len, budget.max_candidates));
    let [u1, u2, v1, v2] = ["g3 -g1", "g1", "g3 -g2", "g2"].map(|s| e(&f, s));
    b.input("wRDP equation", format!("{u1} + {u2} = {v1} + {v2}"));
    let s = search_wrdp_k(&f, &u1, &u2, &v1, &v2, &budget).unwrap();
    b.bounded(
        "no k satisfies the k-conditions",
        matches!(s, SearchOutcome::NotFoundWithinBudget { .. }),
        bound_text(&budget, s.examined()),
        vec![],
    );
    let [au1, au2, av1, av2] = ["(-1, 0, 1)", "(1, 0, 0)", "(0, -1, 1)", "(0, 1, 0)"].map(|s| e(&af, s));
    let s = search_wrdp_k(&af, &au1, &au2, &av1, &av2, &budget).unwrap();
    let want = e(&af, "(2, 0, 0)");
    b.claim(
        "abelianized control finds k = 2 g1",
        s.found() == Some(&want),
        vec![format!("{:?}", s.found().map(|k| k.to_string()))],
    );
    let [w1, w2, x2] = ["-g3", "g1 g2", "g2 g1"].map(|s| e(&f, s));
    let x1 = f.sub(&f.add(&w1, &w2).unwrap(), &x2).unwrap();
    b.input("second wRDP equation", format!("{w1} + {w2} = {x1} + {x2}"));
    let s = search_wrdp_k(&f, &w1, &w2, &x1, &x2, &budget).unwrap();
    b.bounded(
        "no k for the commuted-sum instance",
        matches!(s, SearchOutcome::NotFoundWithinBudget { .. }),
        bound_text(&budget, s.examined()),
        vec![],
    );
    let comm = e(&f, "g1 g2 -g1 -g2");
    let a1 = e(&f, "g3");
    let b1 = f.add(&a1, &comm).unwrap();
    let b2 = f.lsub(&comm, &a1).unwrap();
    let eq = Equation::new(a1.clone(), a1.clone(), b1, b2);
    b.input("RDP equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    let o = brute_force_table(&f, &eq, &budget).unwrap();
    b.bounded(
        "no RDP table",
        matches!(o, SearchOutcome::NotFoundWithinBudget { .. }),
        bound_text(&budget, o.examined()),
        vec![],
    );
    b.done()
}

fn free_commutator_no_rdp() -> CaseReport {
    let mut b = Book::new(
        "free-commutator-no-rdp",
        "Valuations tending to 0 on free generators: a commutator of valuation 0 blocks every RDP table.",
    );
    let f = d("Free(4; 1, 1, 1/2, 1/2)");
    let budget = word_budget();
    b.input("carrier", &f);
    b.input("budget", format!("max_word_len {}, max_candidates {}", budget.max_word_len, budget.max_candidates));
    let comm = e(&f, "g1 g2 -g1 -g2");
    let v = f.valuation(&comm).unwrap();
    b.claim("commutator has valuation 0", v == rat(0, 1) && !f.is_zero(&comm), vec![comm.to_string()]);
    let eq = free_commutator_equation(&f);
    b.input("RDP equation", format!("{} + {} = {} + {}", eq.a1, eq.a2, eq.b1, eq.b2));
    b.claim("equation is positive", eq.check_positive(&f).is_ok(), vec![]);
    let o = brute_force_table(&f, &eq, &budget).unwrap();
    b.bounded(
        "no RDP table",
        matches!(o, SearchOutcome::NotFoundWithinBudget { .. }),
        bound_text(&budget, o.examined()),
        vec![],
    );
    let short = SearchBudget::default().with_word_len(5).with_candidates(1_000_000);
    let words: Vec<Element> = crate::oracle::reduced_words(4, short.max_word_len).collect();
    let commuting: Vec<&Element> = words.iter().filter(|k| f.commute(k, &comm).unwrap()).collect();
    let powers = [f.zero(), comm.clone(), f.neg(&comm).unwrap()];
    b.bounded(
        "only powers of the commutator commute with it",
        commuting.len() == 3 && commuting.iter().all(|k| powers.contains(k)),
        format!("reduced words up to length {} ({} words)", short.max_word_len, words.len()),
        commuting.iter().map(|k| k.to_string()).collect(),
    );
    b.done()
}

/// g3 + g4 = (g3 + [g1, g2]) + (-[g1, g2] + g4).
pub fn free_commutator_equation(f: &GroupDescriptor) -> Equation {
    let comm = e(f, "g1 g2 -g1 -g2");
    let a1 = e(f, "g3");
    let a2 = e(f, "g4");
    let b1 = f.add(&a1, &comm).unwrap();
    let b2 = f.lsub(&comm, &a2).unwrap();
    Equation::new(a1, a2, b1, b2)
}

/// The pinned data of the strict-square case, for reuse in tests.
pub fn strict_square_case() -> (GroupDescriptor, Equation) {
    let desc = d("Lex(Strict(Q, Q), Matrix)");
    let eq = square_lex_equation(&desc);
    (desc, eq)
}
