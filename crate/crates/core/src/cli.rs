//! Command-line entry point: reports, parameter scans, isotypic
//! decompositions, and one-command reproduction of the bundled examples.
//!
//! Exit codes: 0 success, 2 validation error, 3 mathematical
//! inconsistency (or a failed example assertion).

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::family::{
    build_family, classify_point, n3_resultant_value, scan_parameters, FamilyParams, GridSpec,
    PointClass,
};
use crate::invariants::{
    degree_one_generated_hf, default_intersection_bound, ideal_intersection_equality,
    invariant_hilbert_function, invariant_slp_check, minimal_generator_degrees,
    vandermonde_generators, YoungSubgroup,
};
use crate::lefschetz::{lefschetz_report, GradedSubspaceFamily, LefschetzReport};
use crate::polycore::{parse_polynomial, parse_rational, Polynomial};
use crate::quotient::{build_quotient, GradedIdealPresentation, GradedQuotient};
use crate::symmetry::{isotypic_multiplicities, CharacterTable};
use crate::{Error, Result};

const CUBES_INPUT: &str = include_str!("../data/cubes.json");

/// Largest dim R_d for which the Vandermonde intersection check runs by
/// default; larger instances skip it (reported as null) unless a bound is
/// given explicitly.
const VANDERMONDE_AUTO_LIMIT: usize = 3000;

#[derive(Parser)]
#[command(
    name = "lefforge",
    version,
    about = "Exact engine for equivariant quadratic complete intersections, \
             Lefschetz properties, and Young-subgroup invariant rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one algebra: Hilbert function, CI test, Lefschetz checks,
    /// and (with --blocks) the invariant-ring report.
    Report {
        /// Number of variables (family input)
        #[arg(long)]
        n: Option<usize>,
        /// Family parameters p0,p1,p2,p3 (rationals)
        #[arg(long)]
        params: Option<String>,
        /// Algebra input JSON: {"n": int, "generators": ["…", …]}
        #[arg(long, conflicts_with_all = ["n", "params"])]
        input: Option<PathBuf>,
        /// Young subgroup block sizes, e.g. 2,3
        #[arg(long)]
        blocks: Option<String>,
        /// Degree bound for the Vandermonde ideal-intersection check
        #[arg(long)]
        vandermonde_bound: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every point of a parameter grid.
    Scan {
        #[arg(long)]
        n: usize,
        /// Young subgroup block sizes, e.g. 2,3
        #[arg(long)]
        blocks: String,
        /// Grid spec `lo..hi[/den]` per coordinate (1 or 4 comma-separated
        /// ranges); default 0..8 for all four
        #[arg(long)]
        grid: Option<String>,
        /// Output JSON file
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reproduce a bundled example suite and print pass/fail lines.
    Examples {
        /// One of: n5-young, n6-cubes, n3-resultant, monomial-fibers, facts-3-1
        name: String,
    },
    /// Isotypic decomposition of each graded piece.
    Decompose {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        params: Option<String>,
        #[arg(long, conflicts_with_all = ["n", "params"])]
        input: Option<PathBuf>,
        /// Top degree (defaults to the built socle bound)
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    init_thread_pool();
    let outcome = match cli.command {
        Command::Report {
            n,
            params,
            input,
            blocks,
            vandermonde_bound,
            format,
            out,
        } => run_report(n, params, input, blocks, vandermonde_bound, format, out),
        Command::Scan {
            n,
            blocks,
            grid,
            out,
            format,
        } => run_scan(n, &blocks, grid.as_deref(), &out, format),
        Command::Examples { name } => return run_examples(&name),
        Command::Decompose {
            n,
            params,
            input,
            top,
            format,
            out,
        } => run_decompose(n, params, input, top, format, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NonIntegerMultiplicity { .. } | Error::NonStableIdeal(_) => 3,
        _ => 2,
    }
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("LEFFORGE_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
}

fn parse_params(text: &str) -> Result<FamilyParams> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidArgument(format!(
            "--params needs 4 comma-separated rationals, got {}",
            parts.len()
        )));
    }
    FamilyParams::new(
        parse_rational(parts[0])?,
        parse_rational(parts[1])?,
        parse_rational(parts[2])?,
        parse_rational(parts[3])?,
    )
}

fn parse_blocks(text: &str) -> Result<YoungSubgroup> {
    let blocks: Vec<usize> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad block size `{s}`")))
        })
        .collect::<Result<_>>()?;
    YoungSubgroup::new(blocks)
}

#[derive(Deserialize)]
struct AlgebraInput {
    n: usize,
    generators: Vec<String>,
}

fn load_algebra(text: &str) -> Result<GradedIdealPresentation> {
    let parsed: AlgebraInput = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("bad algebra JSON: {e}")))?;
    let gens = parsed
        .generators
        .iter()
        .map(|g| parse_polynomial(g, parsed.n))
        .collect::<Result<Vec<_>>>()?;
    GradedIdealPresentation::new(parsed.n, gens)
}

fn e1(n: usize) -> Polynomial {
    crate::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())
        .expect("e1 always exists")
}

#[derive(Serialize)]
struct InvariantReport {
    blocks: Vec<usize>,
    invariant_hilbert: Vec<usize>,
    degree_one_hilbert: Vec<usize>,
    standard_grading: bool,
    min_generator_degrees: Vec<usize>,
    slp_e1: bool,
    vandermonde_ideal_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vandermonde_note: Option<String>,
}

#[derive(Serialize)]
struct Report {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<Vec<String>>,
    generators: Vec<String>,
    hilbert: Vec<usize>,
    is_ci: bool,
    socle_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    e1sq_in_ideal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lefschetz_e1: Option<LefschetzReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    invariant: Option<InvariantReport>,
}

fn build_invariant_report(
    q: &GradedQuotient,
    group: &YoungSubgroup,
    vandermonde_bound: Option<usize>,
) -> Result<InvariantReport> {
    let inv = invariant_hilbert_function(q, group)?;
    let gen1 = degree_one_generated_hf(q, group)?;
    let standard = inv == gen1;
    let min_gens = minimal_generator_degrees(q, group)?;
    let slp = invariant_slp_check(q, group, &e1(q.n_vars()))?;
    let bound = vandermonde_bound.unwrap_or_else(|| default_intersection_bound(q));
    let feasible = crate::polycore::monomials_of_degree(q.n_vars(), bound).len()
        <= VANDERMONDE_AUTO_LIMIT
        || vandermonde_bound.is_some();
    let (vde, note) = if !feasible {
        (
            None,
            Some(format!(
                "intersection check skipped: dim R_{bound} exceeds the auto limit; \
                 pass --vandermonde-bound to force"
            )),
        )
    } else {
        match vandermonde_generators(q.presentation().generators(), group) {
            Ok(vg) => {
                let report = ideal_intersection_equality(q, group, &vg, bound)?;
                (Some(report.equal), report.warning)
            }
            Err(e) => (None, Some(format!("Vandermonde generators unavailable: {e}"))),
        }
    };
    Ok(InvariantReport {
        blocks: group.blocks().to_vec(),
        invariant_hilbert: inv.values().to_vec(),
        degree_one_hilbert: gen1.values().to_vec(),
        standard_grading: standard,
        min_generator_degrees: min_gens,
        slp_e1: slp.strong,
        vandermonde_ideal_equal: vde,
        vandermonde_note: note,
    })
}

fn run_report(
    n: Option<usize>,
    params: Option<String>,
    input: Option<PathBuf>,
    blocks: Option<String>,
    vandermonde_bound: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<()> {
    let (quotient, params_render, e1sq): (GradedQuotient, Option<Vec<String>>, Option<bool>) =
        match (input, n, params) {
            (Some(path), None, None) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                })?;
                let pres = load_algebra(&text)?;
                let top = pres.ci_socle_degree() + 1;
                (build_quotient(pres, top)?, None, None)
            }
            (None, Some(n), Some(params)) => {
                let p = parse_params(&params)?;
                let inst = build_family(n, p.clone())?;
                (
                    inst.quotient().clone(),
                    Some(p.render()),
                    Some(inst.e1sq_in_ideal()),
                )
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "pass either --input FILE or both --n and --params".into(),
                ))
            }
        };

    let nvars = quotient.n_vars();
    let socle = quotient.presentation().ci_socle_degree();
    // both construction paths build to socle degree + 1, where a CI must vanish
    let is_ci = quotient.presentation().generators().len() == nvars
        && quotient.top_degree() > socle
        && quotient.dim(socle + 1)? == 0;
    let lefschetz_e1 = if is_ci {
        let family = GradedSubspaceFamily::full(&quotient);
        Some(lefschetz_report(&family, &e1(nvars))?)
    } else {
        None
    };
    let invariant = match blocks {
        Some(b) => {
            let group = parse_blocks(&b)?;
            if group.n() != nvars {
                return Err(Error::InvalidArgument(format!(
                    "blocks sum to {}, expected {nvars}",
                    group.n()
                )));
            }
            Some(build_invariant_report(&quotient, &group, vandermonde_bound)?)
        }
        None => None,
    };
    let report = Report {
        n: nvars,
        params: params_render,
        generators: quotient
            .presentation()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
        hilbert: quotient.hilbert_function().values().to_vec(),
        is_ci,
        socle_degree: socle,
        e1sq_in_ideal: e1sq,
        lefschetz_e1,
        invariant,
    };
    emit(&report, format, out.as_deref(), render_report_text)
}

fn render_report_text(r: &Report) -> String {
    let mut s = String::new();
    s.push_str(&format!("n: {}\n", r.n));
    if let Some(p) = &r.params {
        s.push_str(&format!("params: ({})\n", p.join(", ")));
    }
    s.push_str(&format!("hilbert: {:?}\n", r.hilbert));
    s.push_str(&format!("is_ci: {}\n", r.is_ci));
    s.push_str(&format!("socle_degree: {}\n", r.socle_degree));
    if let Some(v) = r.e1sq_in_ideal {
        s.push_str(&format!("e1sq_in_ideal: {v}\n"));
    }
    if let Some(l) = &r.lefschetz_e1 {
        s.push_str(&format!(
            "lefschetz(e1): weak={} strong={} c={}\n",
            l.weak, l.strong, l.c
        ));
    }
    if let Some(inv) = &r.invariant {
        s.push_str(&format!("blocks: {:?}\n", inv.blocks));
        s.push_str(&format!("invariant_hilbert: {:?}\n", inv.invariant_hilbert));
        s.push_str(&format!(
            "degree_one_hilbert: {:?}\n",
            inv.degree_one_hilbert
        ));
        s.push_str(&format!("standard_grading: {}\n", inv.standard_grading));
        s.push_str(&format!(
            "min_generator_degrees: {:?}\n",
            inv.min_generator_degrees
        ));
        s.push_str(&format!("slp_e1: {}\n", inv.slp_e1));
        match inv.vandermonde_ideal_equal {
            Some(v) => s.push_str(&format!("vandermonde_ideal_equal: {v}\n")),
            None => s.push_str("vandermonde_ideal_equal: skipped\n"),
        }
        if let Some(note) = &inv.vandermonde_note {
            s.push_str(&format!("note: {note}\n"));
        }
    }
    s
}

fn run_scan(
    n: usize,
    blocks: &str,
    grid: Option<&str>,
    out: &std::path::Path,
    format: Format,
) -> Result<()> {
    let group = parse_blocks(blocks)?;
    if group.n() != n {
        return Err(Error::InvalidArgument(format!(
            "blocks sum to {}, expected {n}",
            group.n()
        )));
    }
    let grid = match grid {
        Some(g) => GridSpec::parse(g)?,
        None => GridSpec::default_grid(),
    };
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty grid".into()));
    }
    let report = scan_parameters(n, &group, &grid)?;
    let json = serde_json::to_string_pretty(&report.rows).expect("serializable rows");
    std::fs::write(out, json + "\n")
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", out.display())))?;
    match format {
        Format::Json => {
            let summary = serde_json::json!({
                "counts": report.counts,
                "degenerate": report.degenerate,
                "out": out.display().to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&summary).expect("json"));
        }
        Format::Text => {
            println!(
                "scanned {} points: {} not-ci, {} e1sq-in-ideal, {} standard, {} non-standard",
                report.counts.total,
                report.counts.not_ci,
                report.counts.e1sq_in_ideal,
                report.counts.standard_grading,
                report.counts.non_standard_grading
            );
            if !report.degenerate.is_empty() {
                println!("degenerate (non-standard grading) representatives:");
                for d in &report.degenerate {
                    println!("  ({})", d.join(", "));
                }
            }
            println!("rows written to {}", out.display());
        }
    }
    Ok(())
}

fn run_decompose(
    n: Option<usize>,
    params: Option<String>,
    input: Option<PathBuf>,
    top: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
) -> Result<()> {
    let quotient: GradedQuotient = match (input, n, params) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            let pres = load_algebra(&text)?;
            let bound = top.unwrap_or(pres.ci_socle_degree() + 1);
            build_quotient(pres, bound)?
        }
        (None, Some(n), Some(params)) => {
            let inst = build_family(n, parse_params(&params)?)?;
            match top {
                Some(t) => build_quotient(inst.quotient().presentation().clone(), t)?,
                None => inst.quotient().clone(),
            }
        }
        _ => {
            return Err(Error::InvalidArgument(
                "pass either --input FILE or both --n and --params".into(),
            ))
        }
    };
    let table = CharacterTable::new(quotient.n_vars());
    let mut degrees = Vec::new();
    for d in 0..=quotient.top_degree() {
        let mults = isotypic_multiplicities(&quotient, &table, d)?;
        let map: BTreeMap<String, usize> = mults
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|(l, m)| (l.to_string(), m))
            .collect();
        degrees.push(serde_json::json!({ "degree": d, "multiplicities": map }));
    }
    let doc = serde_json::json!({ "n": quotient.n_vars(), "degrees": degrees });
    let rendering = |_: &serde_json::Value| {
        let mut s = String::new();
        for entry in &degrees {
            s.push_str(&format!(
                "degree {}: {}\n",
                entry["degree"],
                serde_json::to_string(&entry["multiplicities"]).expect("json")
            ));
        }
        s
    };
    emit(&doc, format, out.as_deref(), rendering)
}

fn emit<T: Serialize>(
    value: &T,
    format: Format,
    out: Option<&std::path::Path>,
    text_renderer: impl Fn(&T) -> String,
) -> Result<()> {
    let rendered = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => text_renderer(value),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------
// bundled example suites
// ---------------------------------------------------------------------

struct Assertions {
    results: Vec<(String, bool)>,
}

impl Assertions {
    fn new() -> Self {
        Assertions { results: vec![] }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.results.push((name.to_string(), ok));
    }

    fn finish(self, label: &str) -> i32 {
        let mut failed = 0;
        for (name, ok) in &self.results {
            println!("[{}] {name}", if *ok { "PASS" } else { "FAIL" });
            if !ok {
                failed += 1;
            }
        }
        println!(
            "{label}: {}/{} assertions passed",
            self.results.len() - failed,
            self.results.len()
        );
        if failed == 0 {
            0
        } else {
            3
        }
    }
}

pub fn run_examples(name: &str) -> i32 {
    let outcome = match name {
        "n5-young" => example_n5_young(),
        "n6-cubes" => example_n6_cubes(),
        "n3-resultant" => example_n3_resultant(),
        "monomial-fibers" => example_monomial_fibers(),
        "facts-3-1" => example_facts_3_1(),
        other => {
            eprintln!(
                "error: unknown example `{other}`; expected one of n5-young, n6-cubes, \
                 n3-resultant, monomial-fibers, facts-3-1"
            );
            return 2;
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn example_n5_young() -> Result<i32> {
    let mut a = Assertions::new();
    let blocks = YoungSubgroup::new(vec![2, 3])?;

    let inst = build_family(5, FamilyParams::from_integers([1, 0, 0, 0])?)?;
    let inv = invariant_hilbert_function(inst.quotient(), &blocks)?;
    a.check(
        "params (1,0,0,0): invariant Hilbert function is (1,2,3,3,2,1)",
        inv.values() == [1, 2, 3, 3, 2, 1],
    );

    let inst = build_family(5, FamilyParams::from_integers([5, 2, 0, 2])?)?;
    let inv = invariant_hilbert_function(inst.quotient(), &blocks)?;
    let gen1 = degree_one_generated_hf(inst.quotient(), &blocks)?;
    a.check(
        "params (5,2,0,2): invariant Hilbert function is (1,2,3,3,2,1)",
        inv.values() == [1, 2, 3, 3, 2, 1],
    );
    a.check(
        "params (5,2,0,2): degree-one generated Hilbert function is (1,2,2,2,2,1)",
        gen1.values() == [1, 2, 2, 2, 2, 1],
    );
    a.check("params (5,2,0,2): grading is not standard", inv != gen1);

    for p in [
        [0i64, 0, 3, 8],
        [7, 7, 3, 8],
        [4, 3, 2, 6],
        [6, 0, 0, 4],
        [6, 3, 0, 2],
        [1, 1, 3, 8],
    ] {
        let row = classify_point(5, &FamilyParams::from_integers(p)?, &blocks)?;
        a.check(
            &format!("params {p:?} classify as non-standard-grading"),
            row.class == PointClass::NonStandardGrading,
        );
    }
    Ok(a.finish("n5-young"))
}

fn example_n6_cubes() -> Result<i32> {
    let mut a = Assertions::new();
    let pres = load_algebra(CUBES_INPUT)?;
    let q = build_quotient(pres, 13)?;
    let blocks = YoungSubgroup::new(vec![3, 3])?;

    a.check("cubes quotient is a complete intersection", q.dim(13)? == 0);

    let inv = invariant_hilbert_function(&q, &blocks)?;
    let expected = [1, 2, 5, 8, 12, 14, 16, 14, 12, 8, 5, 2, 1];
    a.check(
        "invariant Hilbert function is (1,2,5,8,12,14,16,14,12,8,5,2,1)",
        inv.values() == expected,
    );
    // ((1+T^2)(1+T+T^2+T^3+T^4))^2 expanded
    let factor = poly_series_mul(&[1, 0, 1], &[1, 1, 1, 1, 1]);
    let series = poly_series_mul(&factor, &factor);
    a.check(
        "series equals ((1+T^2)(1+T+T^2+T^3+T^4))^2",
        inv.values() == series,
    );

    // the six relations among r,s,t,u,v,w reduce to zero in A
    let e = |d: usize, vars: &[usize]| {
        crate::polycore::elementary_symmetric(6, d, vars).expect("valid subset")
    };
    let (b1, b2): (&[usize], &[usize]) = (&[1, 2, 3], &[4, 5, 6]);
    let (r, s, t) = (e(1, b1), e(2, b1), e(3, b1));
    let (u, v, w) = (e(1, b2), e(2, b2), e(3, b2));
    let three = crate::polycore::rat(3);
    let two = crate::polycore::rat(2);
    let relations: Vec<(&str, Polynomial)> = vec![
        (
            "u^3 - 3uv + 3w = 0",
            u.pow(3).sub(&u.mul(&v)?.scale(&three))?.add(&w.scale(&three))?,
        ),
        (
            "r^3 - 3rs + 3t = 0",
            r.pow(3).sub(&r.mul(&s)?.scale(&three))?.add(&t.scale(&three))?,
        ),
        (
            "u^2 v - 2v^2 - uw = 0",
            u.pow(2).mul(&v)?.sub(&v.pow(2).scale(&two))?.sub(&u.mul(&w)?)?,
        ),
        (
            "r^2 s - 2s^2 - rt = 0",
            r.pow(2).mul(&s)?.sub(&s.pow(2).scale(&two))?.sub(&r.mul(&t)?)?,
        ),
        (
            "u^2 w - 2vw = 0",
            u.pow(2).mul(&w)?.sub(&v.mul(&w)?.scale(&two))?,
        ),
        (
            "r^2 t - 2st = 0",
            r.pow(2).mul(&t)?.sub(&s.mul(&t)?.scale(&two))?,
        ),
    ];
    for (name, rel) in relations {
        let (_, nf) = q.normal_form(&rel)?;
        a.check(
            &format!("relation {name} reduces to zero"),
            nf.iter().all(num_traits::Zero::is_zero),
        );
    }

    let min_gens = minimal_generator_degrees(&q, &blocks)?;
    a.check(
        "minimal generator degrees are {1,1,2,2}",
        min_gens == [1, 1, 2, 2],
    );
    Ok(a.finish("n6-cubes"))
}

fn poly_series_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn example_n3_resultant() -> Result<i32> {
    let mut a = Assertions::new();
    let mut disagreements = 0usize;
    let mut checked = 0usize;
    for av in -3..=8i64 {
        for bv in -3..=8i64 {
            let probe = n3_resultant_value(&crate::polycore::rat(av), &crate::polycore::rat(bv))?;
            let nonzero = !num_traits::Zero::is_zero(&probe.value);
            if nonzero != probe.is_ci {
                disagreements += 1;
            }
            checked += 1;
        }
    }
    a.check(
        &format!("formula != 0 iff complete intersection on all {checked} grid points"),
        disagreements == 0,
    );
    let probe = n3_resultant_value(&crate::polycore::rat(1), &crate::polycore::rat(2))?;
    a.check(
        "(a,b) = (1,2) gives value 24 and a complete intersection",
        probe.value == crate::polycore::rat(24) && probe.is_ci,
    );
    Ok(a.finish("n3-resultant"))
}

fn example_monomial_fibers() -> Result<i32> {
    let mut a = Assertions::new();
    let cases: Vec<Vec<usize>> = vec![vec![2, 2], vec![2, 3], vec![3, 3], vec![1, 2, 3]];
    for blocks_sizes in cases {
        let n: usize = blocks_sizes.iter().sum();
        let blocks = YoungSubgroup::new(blocks_sizes.clone())?;
        let inst = build_family(n, FamilyParams::from_integers([1, 0, 0, 0])?)?;
        let inv = invariant_hilbert_function(inst.quotient(), &blocks)?;
        let expected = crate::quotient::ci_hilbert_series(
            &blocks_sizes.iter().map(|b| b + 1).collect::<Vec<_>>(),
            n,
        );
        a.check(
            &format!("blocks {blocks_sizes:?}: invariant HF matches the product series"),
            inv.values() == &expected[..=n],
        );
        let gen1 = degree_one_generated_hf(inst.quotient(), &blocks)?;
        a.check(
            &format!("blocks {blocks_sizes:?}: grading is standard"),
            inv == gen1,
        );
        let slp = invariant_slp_check(inst.quotient(), &blocks, &e1(n))?;
        a.check(
            &format!("blocks {blocks_sizes:?}: e1 is a strong Lefschetz element on the slice"),
            slp.strong,
        );
    }
    Ok(a.finish("monomial-fibers"))
}

fn example_facts_3_1() -> Result<i32> {
    let mut a = Assertions::new();
    for n in 3..=6usize {
        let q = build_quotient(GradedIdealPresentation::new(n, vec![])?, 2)?;
        let table = CharacterTable::new(n);
        let m1 = isotypic_multiplicities(&q, &table, 1)?;
        let trivial = crate::symmetry::PartitionOfN::new(vec![n])?;
        let standard = crate::symmetry::PartitionOfN::two_row(n, 1)?;
        let ok1 = m1.iter().all(|(l, m)| {
            let expect = usize::from(*l == trivial || *l == standard);
            *m == expect
        });
        a.check(&format!("n={n}: R_1 decomposes as trivial + standard"), ok1);

        let m2 = isotypic_multiplicities(&q, &table, 2)?;
        let ok2 = m2.iter().all(|(l, m)| {
            let expect = if *l == trivial || *l == standard {
                2
            } else if n > 3 && *l == crate::symmetry::PartitionOfN::two_row(n, 2).unwrap() {
                1
            } else {
                0
            };
            *m == expect
        });
        a.check(
            &format!("n={n}: R_2 decomposes as 2·trivial + 2·standard (+ the (n-2,2) part)"),
            ok2,
        );
    }
    for n in 4..=7usize {
        let polys = crate::polycore::specht_basis(n)?;
        let q = build_quotient(GradedIdealPresentation::new(n, vec![])?, 2)?;
        let rank = crate::quotient::rref::rank_of(
            polys
                .iter()
                .map(|p| q.to_row(2, p))
                .collect::<Result<Vec<_>>>()?,
            q.dim(2)?,
        );
        a.check(
            &format!("n={n}: the n(n-3)/2 Specht polynomials are linearly independent"),
            polys.len() == n * (n - 3) / 2 && rank == polys.len(),
        );
    }
    for n in 2..=6usize {
        let report = crate::symmetry::fixed_line_check(n)?;
        a.check(
            &format!("n={n}: the fixed line of R_1·e_1 is spanned by e_1^2"),
            report.ok,
        );
    }
    Ok(a.finish("facts-3-1"))
}
