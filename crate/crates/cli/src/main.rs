use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dialg_core::expansion::{collapsed_rows, expand, render_collapsed_row, Pattern};
use dialg_core::golden;
use dialg_core::linalg::{lattice_contains, same_lattice, Modulus, ZMatrix};
use dialg_core::parse::{parse_monomial, parse_multilinear};
use dialg_core::pipeline::{
    degree6_generators, degree6_nonlinear, degree6_nullspace, degree7_table, format_degree7_table,
    identity_from_text, multilinear_search, nullspace_character, orbit_rank, reconstruct_rows, BasisTag,
    Degree7Data, IdentityVector, TableFormat,
};
use dialg_core::symrep::{decompose, format_decomposition};
use dialg_core::DEFAULT_PRIME;

#[derive(Parser, Debug)]
#[command(name = "dialg", version, about = "Identities of the symmetrized Jordan diproduct in dialgebras")]
struct Cli {
    /// Prime for modular linear algebra.
    #[arg(long, global = true, env = "DIALG_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Skip the comparison with the published values.
    #[arg(long, global = true)]
    no_golden: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a commutative monomial such as `(ab)c` into diassociative
    /// normal forms.
    Expand {
        monomial: String,
        /// Reject repeated variables.
        #[arg(long)]
        multilinear: bool,
    },
    /// Rank of the multilinear expansion matrix.
    Rank {
        #[arg(long)]
        degree: usize,
    },
    /// Degree 6 identities: the multilinear nullspace, or the identities in
    /// `x^6` or `x^5 y`.
    Degree6 {
        #[arg(long, value_enum)]
        pattern: Option<PatternArg>,
    },
    /// Degree 7 ranks per irreducible representation of S_7.
    Degree7,
    /// Run every reproduction and compare with the published values.
    Selftest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    X6,
    X5y,
}

impl From<PatternArg> for Pattern {
    fn from(p: PatternArg) -> Pattern {
        match p {
            PatternArg::X6 => Pattern::X6,
            PatternArg::X5y => Pattern::X5Y,
        }
    }
}

/// One comparison against a published value.
struct Check {
    name: String,
    expected: String,
    got: String,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl ToString, got: impl ToString) -> Check {
        Check { name: name.into(), expected: expected.to_string(), got: got.to_string() }
    }

    fn passed(&self) -> bool {
        self.expected == self.got
    }
}

struct Output {
    text: String,
    csv: String,
    json: Value,
    checks: Vec<Check>,
}

type CmdResult = Result<Output, String>;

fn modulus(prime: u64, degree: usize) -> Result<Modulus, String> {
    if prime <= degree as u64 {
        return Err(format!("prime {prime} must exceed the degree {degree}"));
    }
    Modulus::new(prime).map_err(|e| e.to_string())
}

fn cmd_expand(src: &str, multilinear: bool) -> CmdResult {
    let m = if multilinear { parse_multilinear(src) } else { parse_monomial(src) }.map_err(|e| e.to_string())?;
    let poly = expand(&m.tree);
    let name = |l: u8| m.name(l);
    let mut csv = String::from("coefficient,monomial\n");
    let mut terms = Vec::new();
    for (d, c) in poly.iter() {
        let w = d.render(&name);
        let _ = writeln!(csv, "{c},{w}");
        terms.push(json!({ "monomial": w, "coefficient": c }));
    }
    Ok(Output {
        text: format!("{}\n", poly.render(&name)),
        csv,
        json: json!({ "input": src, "terms": terms }),
        checks: Vec::new(),
    })
}

fn expected_rank(n: usize) -> usize {
    match n {
        3 => 3,
        4 => 15,
        5 => 105,
        _ => golden::DEGREE6_RANK,
    }
}

fn cmd_rank(degree: usize, prime: u64) -> CmdResult {
    let m = modulus(prime, degree)?;
    let s = multilinear_search(degree, m).map_err(|e| e.to_string())?;
    let text = format!(
        "degree {degree}: {} x {}, rank {} / {} columns, nullity {}\n",
        s.rows,
        s.cols,
        s.rank,
        s.cols,
        s.nullity()
    );
    Ok(Output {
        text,
        csv: format!("degree,rows,cols,rank,nullity\n{degree},{},{},{},{}\n", s.rows, s.cols, s.rank, s.nullity()),
        json: json!({ "degree": degree, "rows": s.rows, "cols": s.cols, "rank": s.rank, "nullity": s.nullity(), "prime": prime }),
        checks: vec![Check::new(format!("rank in degree {degree}"), expected_rank(degree), s.rank)],
    })
}

fn set_string(s: &BTreeSet<i64>) -> String {
    s.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn list_string<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_degree6(prime: u64) -> CmdResult {
    let m = modulus(prime, 6)?;
    let s = degree6_nullspace(m).map_err(|e| e.to_string())?;
    let rows = reconstruct_rows(&s.nullspace, golden::DEGREE6_SCALE);
    let mut lifted = true;
    for r in &rows {
        let v = IdentityVector::new(BasisTag::Multilinear(6), r.clone());
        lifted &= v.is_identity().map_err(|e| e.to_string())?;
    }
    // a failed lift spans a different module; report it instead of decomposing
    let (chi, dec) = if lifted {
        let chi = nullspace_character(&rows).map_err(|e| e.to_string())?;
        let dec = format_decomposition(&decompose(6, &chi).map_err(|e| e.to_string())?);
        (chi, dec)
    } else {
        log::warn!("reconstructed rows do not expand to zero; the prime is too small for scale {}", golden::DEGREE6_SCALE);
        (Vec::new(), "unavailable".to_string())
    };
    let mut text = format!("degree 6: {} x {}, rank {}, nullity {}\n", s.rows, s.cols, s.rank, s.nullity());
    let mut csv = String::from("row,nonzero,entries\n");
    let mut json_rows = Vec::new();
    let mut checks = vec![
        Check::new("degree 6 rank", golden::DEGREE6_RANK, s.rank),
        Check::new("degree 6 nullity", golden::DEGREE6_NULLITY, s.nullity()),
        Check::new("reconstructed rows expand to zero", true, lifted),
    ];
    let want = golden::degree6_reconstruction();
    for (i, r) in rows.iter().enumerate() {
        let nonzero = r.iter().filter(|&&x| x != 0).count();
        let entries: BTreeSet<i64> = r.iter().copied().collect();
        let _ = writeln!(text, "row {}: {nonzero} nonzero, entries {}", i + 1, set_string(&entries));
        let _ = writeln!(csv, "{},{nonzero},{}", i + 1, set_string(&entries));
        json_rows.push(json!({ "nonzero": nonzero, "entries": entries }));
        if let Some(w) = want.get(i) {
            checks.push(Check::new(format!("row {} nonzero", i + 1), w.nonzero, nonzero));
            checks.push(Check::new(format!("row {} entries", i + 1), set_string(&w.entries), set_string(&entries)));
        }
    }
    let _ = writeln!(text, "character: {}", list_string(&chi));
    let _ = writeln!(text, "decomposition: {dec}");
    checks.push(Check::new("character", list_string(&golden::degree6_character()), list_string(&chi)));
    checks.push(Check::new("decomposition", golden::degree6_decomposition(), &dec));
    Ok(Output {
        text,
        csv,
        json: json!({
            "prime": prime, "rank": s.rank, "nullity": s.nullity(), "rows": json_rows,
            "character": chi, "decomposition": dec,
        }),
        checks,
    })
}

fn matrix_text(m: &ZMatrix, labels: &[String]) -> String {
    let width = labels.iter().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (i, l) in labels.iter().enumerate() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, "{l:<width$} {}", row.join(" "));
    }
    out
}

fn cmd_nonlinear(pattern: Pattern) -> CmdResult {
    let r = degree6_nonlinear(pattern).map_err(|e| e.to_string())?;
    let ids: Vec<IdentityVector> = r
        .identities
        .row_vecs()
        .into_iter()
        .map(|row| {
            let coeffs = row.iter().map(|x| i64::try_from(x).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
            Ok(IdentityVector::new(BasisTag::Nonlinear(pattern), coeffs))
        })
        .collect::<Result<_, String>>()?;
    for v in &ids {
        if !v.is_identity().map_err(|e| e.to_string())? {
            return Err(format!("{v} does not expand to zero"));
        }
    }
    let labels: Vec<String> = collapsed_rows(pattern).iter().map(render_collapsed_row).collect();
    let mut text = format!("{pattern}: expansion matrix {} x {}\n", r.matrix.rows(), r.matrix.cols());
    text.push_str(&matrix_text(&r.matrix, &labels));
    let _ = writeln!(text, "rank {}, nullity {}", r.rank, r.nullity());
    let mut csv = String::from("identity,polynomial\n");
    for (i, v) in ids.iter().enumerate() {
        let _ = writeln!(text, "({}) {v}", i + 1);
        let _ = writeln!(csv, "{},{v}", i + 1);
    }
    let (published, expected_matrix, nullity) = match pattern {
        Pattern::X6 => (golden::x6_identities(), golden::x6_expansion(), 3),
        Pattern::X5Y => (golden::x5y_identities(), golden::x5y_expansion(), 4),
    };
    let rows: Vec<Vec<i64>> =
        published.iter().map(|s| identity_from_text(pattern, s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let published = ZMatrix::from_i64(&rows);
    let mut checks = vec![
        Check::new(format!("{pattern} expansion matrix"), "published", if r.matrix == expected_matrix { "published" } else { "different" }),
        Check::new(format!("{pattern} nullity"), nullity, r.nullity()),
        Check::new(
            "published identities in the nullspace lattice",
            true,
            lattice_contains(&r.identities, &published),
        ),
    ];
    if pattern == Pattern::X6 {
        checks.push(Check::new("published identities span the lattice", true, same_lattice(&r.identities, &published)));
    }
    Ok(Output {
        text,
        csv,
        json: json!({
            "pattern": pattern.name(), "rank": r.rank, "nullity": r.nullity(),
            "identities": ids.iter().map(|v| json!({ "polynomial": v.to_string(), "coefficients": v.coeffs })).collect::<Vec<_>>(),
        }),
        checks,
    })
}

fn cmd_degree7(prime: u64) -> CmdResult {
    let m = modulus(prime, 7)?;
    let gens = degree6_generators().map_err(|e| e.to_string())?;
    let orbit = orbit_rank(&gens, m).map_err(|e| e.to_string())?;
    let data = Degree7Data::new(&gens).map_err(|e| e.to_string())?;
    let table = degree7_table(&data, m).map_err(|e| e.to_string())?;
    if let Some(bad) = table.reports.iter().find(|r| !r.consistent) {
        return Err(format!("known identities do not vanish in [{}]", bad.partition));
    }
    let want = golden::degree7_table();
    let row = |f: fn(&dialg_core::pipeline::PartitionReport) -> usize| -> Vec<usize> { table.reports.iter().map(f).collect() };
    let mut text = format_degree7_table(&table, TableFormat::Text);
    let _ = writeln!(text, "total {}", table.total());
    let _ = writeln!(text, "decomposition: {}", table.decomposition());
    let checks = vec![
        Check::new("degree 6 orbit rank", golden::DEGREE6_NULLITY, orbit),
        Check::new("partitions", want.partitions.join(" "), table.reports.iter().map(|r| r.partition.compact()).collect::<Vec<_>>().join(" ")),
        Check::new("S", list_string(&want.rank_s), list_string(&row(|r| r.rank_s))),
        Check::new("SC", list_string(&want.rank_sc), list_string(&row(|r| r.rank_sc))),
        Check::new("N", list_string(&want.rank_n), list_string(&row(|r| r.rank_n))),
        Check::new("new", list_string(&want.new), list_string(&row(|r| r.new_identities()))),
        Check::new("total", want.total, table.total()),
        Check::new("decomposition", &want.decomposition, table.decomposition()),
    ];
    let reports: Vec<Value> = table
        .reports
        .iter()
        .map(|r| {
            json!({
                "partition": r.partition.compact(), "dim": r.dim, "S": r.rank_s, "SC": r.rank_sc,
                "N": r.rank_n, "new": r.new_identities(),
            })
        })
        .collect();
    Ok(Output {
        text,
        csv: format_degree7_table(&table, TableFormat::Csv),
        json: json!({ "prime": prime, "reports": reports, "total": table.total(), "decomposition": table.decomposition() }),
        checks,
    })
}

fn cmd_selftest(prime: u64) -> CmdResult {
    let mut parts: Vec<(String, Output)> = Vec::new();
    for n in 3..=6 {
        parts.push((format!("rank {n}"), cmd_rank(n, prime)?));
    }
    parts.push(("degree6".into(), cmd_degree6(prime)?));
    parts.push(("x6".into(), cmd_nonlinear(Pattern::X6)?));
    parts.push(("x5y".into(), cmd_nonlinear(Pattern::X5Y)?));
    parts.push(("degree7".into(), cmd_degree7(prime)?));
    let mut text = String::new();
    let mut csv = String::from("section,check,status\n");
    let mut sections = Vec::new();
    let mut checks = Vec::new();
    for (name, out) in parts {
        let ok = out.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(text, "{name}: {ok}/{} checks", out.checks.len());
        for c in &out.checks {
            let _ = writeln!(csv, "{name},{},{}", c.name, if c.passed() { "ok" } else { "mismatch" });
        }
        sections.push(json!({ "section": name, "checks": out.checks.len(), "passed": ok }));
        checks.extend(out.checks.into_iter().map(|c| Check { name: format!("{name}: {}", c.name), ..c }));
    }
    Ok(Output { text, csv, json: json!({ "prime": prime, "sections": sections }), checks })
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Expand { monomial, multilinear } => cmd_expand(monomial, *multilinear),
        Command::Rank { degree } => cmd_rank(*degree, cli.prime),
        Command::Degree6 { pattern: None } => cmd_degree6(cli.prime),
        Command::Degree6 { pattern: Some(p) } => cmd_nonlinear((*p).into()),
        Command::Degree7 => cmd_degree7(cli.prime),
        Command::Selftest => cmd_selftest(cli.prime),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    log::info!("finished in {:.2?}", start.elapsed());
    match cli.format {
        Format::Text => print!("{}", out.text),
        Format::Csv => print!("{}", out.csv),
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json serializes")),
    }
    if cli.no_golden {
        return ExitCode::SUCCESS;
    }
    let failed: Vec<&Check> = out.checks.iter().filter(|c| !c.passed()).collect();
    if failed.is_empty() {
        return ExitCode::SUCCESS;
    }
    for c in failed {
        eprintln!("mismatch: {}\n- expected: {}\n+ got:      {}", c.name, c.expected, c.got);
    }
    ExitCode::from(1)
}
