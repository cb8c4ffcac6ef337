use std::fmt::Write as _;

use serde::Serialize;

use sympbranch::hibi::{chain_to_pattern, count_patterns};
use sympbranch::straighten::{default_weight_base, lattice_weight};
use sympbranch::verify::{self, Suite, VerifyConfig};
use sympbranch::{FormalPolynomial, LatticeWeight, Monomial, PatternMap, Result, StandardMonomial, WeightPair, YoungDiagram};

const SCHEMA: &str = "1";

pub struct Output {
    pub text: String,
    /// False only for a verification run that found failures.
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn pair(d: &str, f: &str, n: usize) -> Result<WeightPair> {
    WeightPair::new(d.parse()?, f.parse()?, n)
}

fn joined(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct MultReport<'a> {
    schema: &'static str,
    op: &'static str,
    n: usize,
    d: &'a YoungDiagram,
    f: &'a YoungDiagram,
    multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    middle: Option<Vec<YoungDiagram>>,
}

pub fn mult(d: &str, f: &str, n: usize, list: bool, as_json: bool) -> Result<Output> {
    let p = pair(d, f, n)?;
    let middle = list.then(|| p.enumerate_middle());
    if as_json {
        let report = MultReport { schema: SCHEMA, op: "mult", n, d: p.d(), f: p.f(), multiplicity: p.multiplicity(), middle };
        return Ok(Output::ok(json(&report)));
    }
    let mut text = format!("{}\n", p.multiplicity());
    for e in middle.iter().flatten() {
        writeln!(text, "{e}").unwrap();
    }
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct BasisEntry {
    monomial: Vec<String>,
    middle: YoungDiagram,
    order_type: String,
    tl_weight: Vec<i64>,
    tableau: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct BasisReport<'a> {
    schema: &'static str,
    op: &'static str,
    n: usize,
    d: &'a YoungDiagram,
    f: &'a YoungDiagram,
    multiplicity: u64,
    basis: Vec<BasisEntry>,
}

pub fn basis(d: &str, f: &str, n: usize, as_json: bool) -> Result<Output> {
    let p = pair(d, f, n)?;
    let entries: Vec<BasisEntry> = StandardMonomial::enumerate(&p)
        .iter()
        .map(|m| BasisEntry {
            monomial: m.monomial().tokens(),
            middle: m.middle_diagram(),
            order_type: m.order_type().to_string(),
            tl_weight: m.tl_weight(),
            tableau: m.to_tableau().rows,
        })
        .collect();
    if as_json {
        let report = BasisReport { schema: SCHEMA, op: "basis", n, d: p.d(), f: p.f(), multiplicity: p.multiplicity(), basis: entries };
        return Ok(Output::ok(json(&report)));
    }
    let mut text = format!("F/D = {p}, n = {n}: {} standard monomials\n", entries.len());
    for (k, e) in entries.iter().enumerate() {
        let tableau = sympbranch::Tableau { rows: e.tableau.clone() };
        writeln!(
            text,
            "{:>3}. [{}]  E={}  type {}  weight ({})  tableau {}",
            k + 1,
            e.monomial.join(","),
            e.middle,
            e.order_type,
            joined(&e.tl_weight),
            if tableau.rows.is_empty() { "empty".to_string() } else { tableau.to_string() },
        )
        .unwrap();
    }
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct WeightedTerm {
    coeff: String,
    monomial: Vec<String>,
    weight: LatticeWeight,
}

#[derive(Serialize)]
struct StraightenReport {
    schema: &'static str,
    op: &'static str,
    n: usize,
    mode: &'static str,
    input: String,
    result: String,
    terms: Vec<WeightedTerm>,
}

pub fn straighten(expr: &str, n: usize, hibi: bool, as_json: bool) -> Result<Output> {
    let input = FormalPolynomial::parse(expr, n)?;
    let out = if hibi { input.hibi_normal_form() } else { input.straighten() };
    let base = default_weight_base(n);
    let weight = |m: &Monomial| lattice_weight(m, base).expect("default base is legal");
    let terms: Vec<WeightedTerm> = out
        .to_json_terms()
        .into_iter()
        .zip(out.sorted_terms())
        .map(|(t, (m, _))| WeightedTerm { coeff: t.coeff, monomial: t.monomial, weight: weight(m) })
        .collect();
    if as_json {
        let report = StraightenReport {
            schema: SCHEMA,
            op: "straighten",
            n,
            mode: if hibi { "hibi" } else { "standard" },
            input: input.to_string(),
            result: out.to_string(),
            terms,
        };
        return Ok(Output::ok(json(&report)));
    }
    let mut text = format!("{out}\n");
    for t in &terms {
        writeln!(text, "  wt {}  [{}]", t.weight, t.monomial.join(",")).unwrap();
    }
    Ok(Output::ok(text))
}

pub fn verify(suites: &[Suite], n: usize, seed: u64, trials: usize, shape: Option<(&str, &str)>, max_part: u32) -> Result<Output> {
    let pair = shape.map(|(d, f)| pair(d, f, n)).transpose()?;
    let config = VerifyConfig { n, seed, trials, pair, max_part };
    let report = verify::run(suites, &config)?;
    Ok(Output { text: json(&report), passed: report.passed() })
}

#[derive(Serialize)]
struct PatternEntry {
    monomial: Vec<String>,
    pattern: PatternMap,
}

#[derive(Serialize)]
struct DegenerateReport<'a> {
    schema: &'static str,
    op: &'static str,
    n: usize,
    d: &'a YoungDiagram,
    f: &'a YoungDiagram,
    count: u64,
    patterns: Vec<PatternEntry>,
}

pub fn degenerate(d: &str, f: &str, n: usize, as_json: bool) -> Result<Output> {
    let p = pair(d, f, n)?;
    let count = count_patterns(&p);
    let entries: Vec<PatternEntry> = StandardMonomial::enumerate(&p)
        .iter()
        .map(|m| PatternEntry { monomial: m.monomial().tokens(), pattern: chain_to_pattern(m) })
        .collect();
    if as_json {
        let report = DegenerateReport { schema: SCHEMA, op: "degenerate", n, d: p.d(), f: p.f(), count, patterns: entries };
        return Ok(Output::ok(json(&report)));
    }
    let mut text = format!("F/D = {p}, n = {n}: {count} patterns\n");
    for e in &entries {
        write!(text, "\n[{}]\n{}\n", e.monomial.join(","), e.pattern.pretty()).unwrap();
    }
    Ok(Output::ok(text))
}
