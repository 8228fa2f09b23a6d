use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lexrdp::casebook::{run_all, run_case, CaseReport, CASE_IDS};
use lexrdp::encode::{descriptor_from_json, descriptor_to_json, versioned};
use lexrdp::oracle::{brute_force_table, reduced_words, search_wrdp_k};
use lexrdp::parse::{parse_descriptor, parse_element};
use lexrdp::props::{
    antilattice_status, com_directed_witness, directed_witness, ncdp_witness_with, p1p2_from_wrdp, wrdp_witnesses,
    Verdict,
};
use lexrdp::rdp::{interpolate, rdp0_decompose, verify_table_with};
use lexrdp::solvers::{solve, solve_table};
use lexrdp::{Element, Equation, Error, GroupDescriptor, RdpTable, SearchBudget, SearchOutcome};

mod schema;

#[derive(Parser, Debug)]
#[command(name = "lexrdp", version, about = "Riesz decomposition tables for partially ordered groups")]
struct Cli {
    /// Emit versioned JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_name = "N")]
    budget_coord: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    budget_wordlen: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    budget_candidates: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Descriptor in the DSL, or @FILE holding DSL text or JSON.
    #[arg(long)]
    group: String,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build an RDP table for a1 + a2 = b1 + b2.
    Solve {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, required = true, num_args = 4, value_names = ["A1", "A2", "B1", "B2"], allow_hyphen_values = true)]
        eq: Vec<String>,
    },
    /// Check a given table: sums, positivity, RDP1 and RDP2 verdicts.
    Verify {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, required = true, num_args = 4, value_names = ["A1", "A2", "B1", "B2"], allow_hyphen_values = true)]
        eq: Vec<String>,
        #[arg(long, required = true, num_args = 4, value_names = ["C11", "C12", "C21", "C22"], allow_hyphen_values = true)]
        table: Vec<String>,
    },
    /// Decide an order property, producing a witness where one applies.
    Check {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, value_enum)]
        property: Property,
        /// Takes every remaining argument, so give global flags before the subcommand.
        #[arg(long, num_args = 0.., allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Brute-force searches: RDP tables, k-condition witnesses, reduced words.
    Oracle {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, num_args = 4, value_names = ["A1", "A2", "B1", "B2"], allow_hyphen_values = true)]
        eq: Vec<String>,
        /// Search k for u1 + u2 = v1 + v2.
        #[arg(long, num_args = 4, value_names = ["U1", "U2", "V1", "V2"], allow_hyphen_values = true)]
        wrdp: Vec<String>,
        /// List reduced words over K generators up to the word-length budget.
        #[arg(long, value_name = "K")]
        words: Option<u32>,
    },
    /// Run a worked example from the casebook.
    Case {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// List the case ids.
        #[arg(long)]
        list: bool,
    },
    /// Print the JSON schemas of every output document.
    Schema,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Directed,
    ComDirected,
    Antilattice,
    Ncdp,
    Wrdp,
    Rdp0,
    Rip,
}

/// Successful run: the document and whether the answer was positive.
struct Out {
    doc: Value,
    text: String,
    ok: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ShapeMismatch { .. } | Error::InvalidDescriptor(_) | Error::Json(_) => 4,
        Error::ConstructionFailed(_) | Error::DensityRequired(_) | Error::AbelianRequired(_) | Error::SolverFailed(_) => 3,
        e if e.is_not_found() => 2,
        Error::UnknownCase(_) => 1,
        _ => 1,
    }
}

fn error_name(e: &Error) -> &'static str {
    match e {
        Error::ShapeMismatch { .. } => "ShapeMismatch",
        Error::InvalidDescriptor(_) => "InvalidDescriptor",
        Error::InvalidEquation(_) => "InvalidEquation",
        Error::NotDirected(_) => "NotDirected",
        Error::NotComDirected(_) => "NotComDirected",
        Error::Unsupported(_) => "Unsupported",
        Error::NotApplicable(_) => "NotApplicable",
        Error::NotFound(_) => "NotFound",
        Error::NotFoundWithinBudget { .. } => "NotFoundWithinBudget",
        Error::InvalidWitness(_) => "InvalidWitness",
        Error::SolverFailed(_) => "SolverFailed",
        Error::NoRuleApplies(_) => "NoRuleApplies",
        Error::ConstructionFailed(_) => "ConstructionFailed",
        Error::DensityRequired(_) => "DensityRequired",
        Error::AbelianRequired(_) => "AbelianRequired",
        Error::NcdpWitnessUnavailable(_) => "NcdpWitnessUnavailable",
        Error::WrdpWitnessUnavailable(_) => "WrdpWitnessUnavailable",
        Error::UnknownCase(_) => "UnknownCase",
        Error::Parse(_) => "ParseError",
        Error::Json(_) => "Json",
    }
}

fn error_doc(e: &Error) -> Value {
    let mut body = json!({ "error": error_name(e), "message": e.to_string() });
    if let Error::Parse(p) = e {
        body["offset"] = json!(p.offset);
        body["expected"] = json!(p.expected);
        body["found"] = json!(p.found);
    }
    if let Error::NotFoundWithinBudget { budget, examined } = e {
        body["budget"] = json!(budget);
        body["examined"] = json!(examined);
    }
    versioned("error", body)
}

fn load_group(arg: &str) -> lexrdp::Result<GroupDescriptor> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::InvalidDescriptor(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Json(e.to_string()))?;
        descriptor_from_json(&v)
    } else {
        parse_descriptor(t)
    }
}

fn elems(desc: &GroupDescriptor, xs: &[String]) -> lexrdp::Result<Vec<Element>> {
    xs.iter().map(|x| parse_element(desc, x)).collect()
}

fn equation(desc: &GroupDescriptor, xs: &[String]) -> lexrdp::Result<Equation> {
    let v = elems(desc, xs)?;
    let eq = Equation::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    eq.check(desc)?;
    Ok(eq)
}

fn need(xs: &[String], n: usize, what: &str) -> lexrdp::Result<()> {
    if xs.len() == n {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!("{what} takes {n} elements, got {}", xs.len())))
    }
}

fn table_text(t: &RdpTable) -> String {
    let e = &t.equation;
    format!(
        "{} + {} = {} + {}\n  c11 = {}\n  c12 = {}\n  c21 = {}\n  c22 = {}\n",
        e.a1, e.a2, e.b1, e.b2, t.c11, t.c12, t.c21, t.c22
    )
}

fn verdict_ok(v: &Verdict) -> bool {
    v.is_holds()
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Holds { exact, note, .. } => format!("holds{} ({note})", if *exact { "" } else { " on the sample" }),
        Verdict::Fails { evidence, note } => {
            let ev: Vec<String> = evidence.iter().map(|x| x.to_string()).collect();
            format!("fails ({note}): {}", ev.join(", "))
        }
        Verdict::Unknown { note, .. } => format!("unknown ({note})"),
    }
}

fn cmd_solve(g: &GroupArg, eq: &[String], budget: &SearchBudget) -> lexrdp::Result<Out> {
    let desc = load_group(&g.group)?;
    let eq = equation(&desc, eq)?;
    let (t, trace) = solve(&desc, &eq, budget)?;
    let report = verify_table_with(&desc, &t, &SearchBudget::quick())?;
    let doc = versioned(
        "solve",
        json!({ "group": descriptor_to_json(&desc), "table": t, "trace": trace, "report": report }),
    );
    let text = format!("{}  construction: {}\n", table_text(&t), trace.tag);
    Ok(Out { doc, text, ok: true })
}

fn cmd_verify(g: &GroupArg, eq: &[String], table: &[String], budget: &SearchBudget) -> lexrdp::Result<Out> {
    let desc = load_group(&g.group)?;
    let eq = equation(&desc, eq)?;
    let c = elems(&desc, table)?;
    let t = RdpTable::new(&eq, c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
    let report = verify_table_with(&desc, &t, budget)?;
    let ok = report.is_rdp_table();
    let mut text = table_text(&t);
    let _ = writeln!(text, "  sums: {}", if report.sums_ok { "ok" } else { "violated" });
    let _ = writeln!(text, "  positive: {:?}", report.positivity);
    let _ = writeln!(text, "  RDP1: {}", verdict_text(&report.rdp1_verdict));
    let _ = writeln!(text, "  RDP2: {}", verdict_text(&report.rdp2_verdict));
    Ok(Out { doc: versioned("verify", json!({ "table": t, "report": report })), text, ok })
}

fn witness_out(property: &str, inputs: &[Element], w: Value, text: String) -> Out {
    let doc = versioned("check", json!({ "property": property, "inputs": inputs, "holds": true, "witness": w }));
    Out { doc, text, ok: true }
}

fn cmd_check(g: &GroupArg, property: Property, xs: &[String], budget: &SearchBudget) -> lexrdp::Result<Out> {
    let desc = load_group(&g.group)?;
    let v = elems(&desc, xs)?;
    let solver = |d: &GroupDescriptor, e: &Equation| solve_table(d, e);
    Ok(match property {
        Property::Directed if v.is_empty() => {
            let holds = desc.is_directed();
            let doc = versioned("check", json!({ "property": "directed", "holds": holds }));
            Out { doc, text: format!("directed: {holds}\n"), ok: holds }
        }
        Property::Directed => {
            need(xs, 2, "directed")?;
            let w = directed_witness(&desc, &v[0], &v[1])?;
            witness_out("directed", &v, json!(w), format!("common lower bound: {w}\n"))
        }
        Property::ComDirected => {
            need(xs, 2, "com-directed")?;
            let w = com_directed_witness(&desc, &v[0], &v[1])?;
            witness_out("com-directed", &v, json!(w), format!("central common lower bound: {w}\n"))
        }
        Property::Antilattice => {
            let verdict = antilattice_status(&desc, budget);
            let ok = verdict_ok(&verdict);
            let text = format!("antilattice: {}\n", verdict_text(&verdict));
            Out { doc: versioned("check", json!({ "property": "antilattice", "verdict": verdict })), text, ok }
        }
        Property::Ncdp => {
            need(xs, 2, "ncdp")?;
            let w = ncdp_witness_with(&desc, &v[0], &v[1], budget)?;
            witness_out("ncdp", &v, json!(w), format!("NCDP witness: {w}\n"))
        }
        Property::Wrdp => {
            need(xs, 4, "wrdp")?;
            let (d1, d2) = wrdp_witnesses(&desc, &v[0], &v[1], &v[2], &v[3], budget)?;
            let k = p1p2_from_wrdp(&desc, &v[0], &v[1], &v[2], &v[3], &d1, &d2)?;
            let text = format!("d1 = {d1}\nd2 = {d2}\nk = {k}\n");
            witness_out("wrdp", &v, json!({ "d1": d1, "d2": d2, "k": k }), text)
        }
        Property::Rdp0 => {
            need(xs, 3, "rdp0")?;
            let (b1, c1) = rdp0_decompose(&desc, &v[0], &v[1], &v[2], &solver)?;
            witness_out("rdp0", &v, json!({ "b1": b1, "c1": c1 }), format!("{} = {b1} + {c1}\n", v[0]))
        }
        Property::Rip => {
            need(xs, 4, "rip")?;
            let c = interpolate(&desc, &v[0], &v[1], &v[2], &v[3], &solver)?;
            witness_out("rip", &v, json!(c), format!("interpolant: {c}\n"))
        }
    })
}

fn outcome_doc(what: &str, result: Value, found: bool, budget: &SearchBudget) -> Value {
    let mut doc = versioned("oracle", json!({ "search": what, "result": result }));
    if !found {
        doc["budget"] = json!(budget);
    }
    doc
}

fn outcome_text<T: std::fmt::Display>(o: &SearchOutcome<T>) -> String {
    match o {
        SearchOutcome::Found { value, examined } => format!("found after {examined} candidates: {value}\n"),
        SearchOutcome::NotFoundExhaustive { examined } => format!("none: all {examined} candidates examined\n"),
        SearchOutcome::NotFoundWithinBudget { examined, budget } => format!(
            "none within budget: {examined} candidates (word length {}, coordinates {}, cap {})\n",
            budget.max_word_len, budget.max_abs_coord, budget.max_candidates
        ),
    }
}

struct TableShow(RdpTable);

impl std::fmt::Display for TableShow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t = &self.0;
        write!(f, "[{}, {}; {}, {}]", t.c11, t.c12, t.c21, t.c22)
    }
}

fn cmd_oracle(
    group: &Option<String>,
    eq: &[String],
    wrdp: &[String],
    words: Option<u32>,
    budget: &SearchBudget,
) -> lexrdp::Result<Out> {
    if let Some(k) = words {
        if k == 0 {
            return Err(Error::NotApplicable("need at least one generator".into()));
        }
        let ws: Vec<Element> = reduced_words(k, budget.max_word_len).collect();
        let text: String = ws.iter().map(|w| format!("{w}\n")).collect();
        let doc = versioned("words", json!({ "generators": k, "max_len": budget.max_word_len, "count": ws.len(), "words": ws }));
        return Ok(Out { doc, text, ok: true });
    }
    let Some(group) = group else {
        return Err(Error::NotApplicable("oracle needs --group with --eq or --wrdp, or --words".into()));
    };
    let desc = load_group(group)?;
    if !eq.is_empty() {
        let e = equation(&desc, eq)?;
        let o = brute_force_table(&desc, &e, budget)?;
        let ok = o.found().is_some();
        let text = match &o {
            SearchOutcome::Found { value, examined } => outcome_text(&SearchOutcome::Found {
                value: TableShow(value.clone()),
                examined: *examined,
            }),
            SearchOutcome::NotFoundExhaustive { examined } => {
                outcome_text::<String>(&SearchOutcome::NotFoundExhaustive { examined: *examined })
            }
            SearchOutcome::NotFoundWithinBudget { budget, examined } => outcome_text::<String>(
                &SearchOutcome::NotFoundWithinBudget { budget: *budget, examined: *examined },
            ),
        };
        return Ok(Out { doc: outcome_doc("table", json!(o), ok, budget), text, ok });
    }
    if !wrdp.is_empty() {
        let v = elems(&desc, wrdp)?;
        let o = search_wrdp_k(&desc, &v[0], &v[1], &v[2], &v[3], budget)?;
        let ok = o.found().is_some();
        return Ok(Out { doc: outcome_doc("wrdp-k", json!(o), ok, budget), text: outcome_text(&o), ok });
    }
    Err(Error::NotApplicable("oracle needs --eq, --wrdp or --words".into()))
}

fn case_text(r: &CaseReport) -> String {
    let mut s = format!("{} [{}]\n  {}\n", r.id, if r.pass { "PASS" } else { "FAIL" }, r.summary);
    for c in &r.claims {
        let bound = c.bound.as_ref().map(|b| format!(" (bounded: {b})")).unwrap_or_default();
        let _ = writeln!(s, "  {} {}{}", if c.pass { "ok  " } else { "FAIL" }, c.name, bound);
    }
    s
}

fn cmd_case(id: &Option<String>, all: bool, list: bool, budget: &SearchBudget) -> lexrdp::Result<Out> {
    if list {
        let text: String = CASE_IDS.iter().map(|c| format!("{c}\n")).collect();
        return Ok(Out { doc: versioned("case-list", json!({ "cases": CASE_IDS })), text, ok: true });
    }
    let reports = match (id, all) {
        (_, true) => run_all(budget),
        (Some(id), false) => vec![run_case(id, budget)?],
        (None, false) => return Err(Error::NotApplicable("give a case id, --all or --list".into())),
    };
    let ok = reports.iter().all(|r| r.pass);
    let mut text: String = reports.iter().map(case_text).collect();
    if reports.len() > 1 {
        let _ = writeln!(text, "\n{:<34} result", "case");
        for r in &reports {
            let _ = writeln!(text, "{:<34} {}", r.id, if r.pass { "PASS" } else { "FAIL" });
        }
    }
    let doc = if reports.len() == 1 && !all {
        versioned("case", json!({ "report": reports[0] }))
    } else {
        versioned("case-book", json!({ "reports": reports }))
    };
    Ok(Out { doc, text, ok })
}

fn run(cli: &Cli) -> lexrdp::Result<Out> {
    let mut budget = SearchBudget::default();
    if let Some(c) = cli.budget_coord {
        budget.max_abs_coord = c;
    }
    if let Some(w) = cli.budget_wordlen {
        budget.max_word_len = w;
    }
    if let Some(n) = cli.budget_candidates {
        budget.max_candidates = n;
    }
    if let Some(s) = cli.seed {
        budget.seed = s;
    }
    match &cli.cmd {
        Cmd::Solve { g, eq } => cmd_solve(g, eq, &budget),
        Cmd::Verify { g, eq, table } => cmd_verify(g, eq, table, &budget),
        Cmd::Check { g, property, elems } => cmd_check(g, *property, elems, &budget),
        Cmd::Oracle { group, eq, wrdp, words } => cmd_oracle(group, eq, wrdp, *words, &budget),
        Cmd::Case { id, all, list } => cmd_case(id, *all, *list, &budget),
        Cmd::Schema => Ok(Out { doc: schema::all(), text: String::new(), ok: true }),
    }
}

// A closed pipe is not an error worth reporting.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json_mode = cli.json || matches!(cli.cmd, Cmd::Schema);
    match run(&cli) {
        Ok(out) => {
            if json_mode {
                emit(&format!("{}\n", serde_json::to_string_pretty(&out.doc).expect("json")));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 2 })
        }
        Err(e) => {
            if cli.json {
                emit(&format!("{}\n", serde_json::to_string_pretty(&error_doc(&e)).expect("json")));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
