use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use subword_core::complexes::{f_vector, is_flag, is_spherical};
use subword_core::coxeter::{
    build_root_system, longest_element, reverse_word, sorting_word, CoxeterSpec, RootSystem, Word, DEFAULT_WORD_CAP,
};
use subword_core::labeling::{lr_labeling, stable_set};
use subword_core::par::Execution;
use subword_core::scan::{run_scan, ScanConfig, ScanReport};
use subword_core::theorems::{
    cw_complex, verify_corollary1, verify_theorem1, verify_theorem2i, verify_theorem2ii, Claim, VerificationReport,
    Verdict, VerifyOptions, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "subword", version, about = "Subword complexes of finite Coxeter groups")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the roots of a root system
    Roots { r#type: String },
    /// Build Δ(c·wo; w_o)
    Complex(WordArgs),
    /// Stable positive roots for (c, wo)
    Stable(WordArgs),
    /// Check one claim on explicit inputs
    Verify(VerifyArgs),
    /// Check claims over all Coxeter elements and reduced words of w_o
    Scan(ScanArgs),
}

#[derive(Args)]
struct WordArgs {
    r#type: String,
    /// Coxeter element word, e.g. "1 2 3"
    #[arg(long)]
    c: String,
    /// Word for w_o: explicit letters, `sorting:<word>`, or `rev`
    #[arg(long, default_value = "sorting")]
    wo: String,
}

#[derive(Args)]
struct SearchArgs {
    /// Node budget for subdivision searches
    #[arg(long, env = "SUBWORD_BUDGET", default_value_t = DEFAULT_BUDGET, value_parser = positive)]
    budget: usize,
    /// Per-claim time limit in seconds
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
}

impl SearchArgs {
    fn options(&self) -> Result<VerifyOptions, String> {
        let time_limit = match self.time_limit {
            Some(t) if t > 0.0 && t.is_finite() => Some(Duration::from_secs_f64(t)),
            Some(t) => return Err(format!("time limit must be positive, got {t}")),
            None => None,
        };
        Ok(VerifyOptions { budget: self.budget, time_limit })
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// thm1 | thm2i | thm2ii | cor1
    claim: Claim,
    r#type: String,
    #[arg(long)]
    c: String,
    /// Second Coxeter element word (thm1)
    #[arg(long)]
    c2: Option<String>,
    #[arg(long, default_value = "sorting")]
    wo: String,
    /// Target word for w_o (thm2ii)
    #[arg(long)]
    wo2: Option<String>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct ScanArgs {
    r#type: String,
    /// Check every claim
    #[arg(long, conflicts_with = "claims")]
    all: bool,
    /// Comma-separated claims to check
    #[arg(long, value_delimiter = ',')]
    claims: Vec<Claim>,
    /// Cap on enumerated reduced words of w_o
    #[arg(long, default_value_t = DEFAULT_WORD_CAP, value_parser = positive)]
    cap: usize,
    #[command(flatten)]
    search: SearchArgs,
    /// Run jobs on one thread
    #[arg(long)]
    sequential: bool,
    /// Leave per-job reports out of JSON output
    #[arg(long)]
    summary_only: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

type Failure = String;

fn root_system(t: &str) -> Result<RootSystem, Failure> {
    let spec: CoxeterSpec = t.parse().map_err(|e| format!("{e}"))?;
    build_root_system(spec).map_err(|e| e.to_string())
}

fn word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(|e| format!("bad word `{s}`: {e}"))
}

/// Resolves a `--wo` value against the Coxeter word `c`.
fn wo_word(rs: &RootSystem, c: &Word, spec: &str) -> Result<Word, Failure> {
    let w0 = longest_element(rs);
    let sorting = |by: &Word| sorting_word(rs, by, &w0).map_err(|e| e.to_string());
    match spec.trim() {
        "sorting" => sorting(c),
        "rev" => sorting(&reverse_word(c)),
        s => match s.strip_prefix("sorting:") {
            Some(rest) => sorting(&word(rest)?),
            None => word(s),
        },
    }
}

struct Output {
    text: String,
    json: Value,
    code: ExitCode,
}

fn exit_for(v: Verdict) -> ExitCode {
    match v {
        Verdict::Holds | Verdict::NotApplicable => ExitCode::SUCCESS,
        Verdict::Unknown => ExitCode::from(2),
        Verdict::Fails => ExitCode::from(1),
    }
}

fn cmd_roots(t: &str) -> Result<Output, Failure> {
    let rs = root_system(t)?;
    let mut text = format!("{} roots of {} ({} positive)\n", rs.root_count(), rs.spec().name(), rs.positive_count());
    let mut roots = Vec::new();
    for r in 0..rs.root_count() {
        let sign = if rs.is_positive(r) { "+" } else { "-" };
        text.push_str(&format!("{:>4}  {}  {}\n", r + 1, sign, rs.display(r)));
        roots.push(json!({ "index": r + 1, "root": rs.display_json(r), "positive": rs.is_positive(r) }));
    }
    Ok(Output { text, json: json!({ "type": rs.spec().name(), "roots": roots }), code: ExitCode::SUCCESS })
}

fn cmd_complex(a: &WordArgs) -> Result<Output, Failure> {
    let rs = root_system(&a.r#type)?;
    let c = word(&a.c)?;
    let wo = wo_word(&rs, &c, &a.wo)?;
    let k = cw_complex(&rs, &c, &wo).map_err(|e| e.to_string())?;
    let q = c.concat(&wo);
    let spherical = is_spherical(&rs, &q, &longest_element(&rs)).map_err(|e| e.to_string())?;
    let flag = is_flag(&k.complex);
    let fv = f_vector(&k.complex);
    let unused = k.unused_positions();
    let mut text = format!("{} word \"{}\"\n", rs.spec().name(), q);
    let verts: Vec<String> = k.complex.vertices().iter().map(|v| v.to_string()).collect();
    text.push_str(&format!("vertices ({}): {}\n", verts.len(), verts.join(" ")));
    text.push_str(&format!("facets ({}):\n", k.complex.facet_count()));
    for f in k.complex.facets() {
        let f: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        text.push_str(&format!("  {}\n", f.join(" ")));
    }
    text.push_str(&format!("f-vector: {fv:?}\nspherical: {spherical}\nflag: {flag}\n"));
    if !unused.is_empty() {
        text.push_str(&format!("positions in no facet: {unused:?}\n"));
    }
    let json = json!({
        "type": rs.spec().name(),
        "c": c.to_string(),
        "wo": wo.to_string(),
        "word": q.to_string(),
        "complex": k.complex,
        "f_vector": fv,
        "spherical": spherical,
        "flag": flag,
        "unused_positions": unused,
    });
    Ok(Output { text, json, code: ExitCode::SUCCESS })
}

fn cmd_stable(a: &WordArgs) -> Result<Output, Failure> {
    let rs = root_system(&a.r#type)?;
    let c = word(&a.c)?;
    let wo = wo_word(&rs, &c, &a.wo)?;
    let stab = stable_set(&rs, &c, &wo).map_err(|e| e.to_string())?;
    let lr = lr_labeling(&rs, &c, &wo).map_err(|e| e.to_string())?;
    let roots: Vec<String> = stab.roots.iter().map(|&r| rs.display(r)).collect();
    let mut text = format!(
        "{} c=\"{}\" wo=\"{}\": {} of {} positive roots stable\n",
        rs.spec().name(),
        c,
        wo,
        roots.len(),
        rs.positive_count()
    );
    for &r in &stab.roots {
        let pos = lr.position_of(r).expect("Lr is onto");
        text.push_str(&format!("  {}  (position {})\n", rs.display(r), pos));
    }
    let json = json!({
        "type": rs.spec().name(),
        "c": c.to_string(),
        "wo": wo.to_string(),
        "stable": stab.roots.iter().map(|&r| rs.display_json(r)).collect::<Vec<_>>(),
        "unstable": rs.positive_roots().filter(|r| !stab.roots.contains(r)).map(|r| rs.display_json(r)).collect::<Vec<_>>(),
    });
    Ok(Output { text, json, code: ExitCode::SUCCESS })
}

fn report_output(r: VerificationReport) -> Output {
    Output {
        text: format!("{}\n", r.summary()),
        code: exit_for(r.verdict),
        json: serde_json::to_value(&r).expect("reports serialize"),
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output, Failure> {
    let rs = root_system(&a.r#type)?;
    let c = word(&a.c)?;
    let opts = a.search.options()?;
    let e = |e: subword_core::Error| e.to_string();
    let report = match a.claim {
        Claim::Theorem1 => {
            let c2 = a.c2.as_deref().ok_or("thm1 needs --c2")?;
            verify_theorem1(&rs, &c, &word(c2)?).map_err(e)?
        }
        Claim::Theorem2i => verify_theorem2i(&rs, &c, &wo_word(&rs, &c, &a.wo)?).map_err(e)?,
        Claim::Theorem2ii => {
            let wo2 = a.wo2.as_deref().ok_or("thm2ii needs --wo2")?;
            verify_theorem2ii(&rs, &c, &wo_word(&rs, &c, &a.wo)?, &wo_word(&rs, &c, wo2)?, opts).map_err(e)?
        }
        Claim::Corollary1 => verify_corollary1(&rs, &c, &wo_word(&rs, &c, &a.wo)?, opts).map_err(e)?,
    };
    Ok(report_output(report))
}

fn scan_text(r: &ScanReport) -> String {
    let mut s = format!(
        "{}: {} Coxeter elements x {} reduced words of w_o{}\n",
        r.type_name,
        r.coxeter_elements,
        r.reduced_words,
        if r.words_complete { "" } else { " (cap reached)" }
    );
    for (claim, n) in &r.counts {
        s.push_str(&format!(
            "  {:<7} holds {:>5}  fails {:>3}  unknown {:>3}  not-applicable {:>5}\n",
            claim.id(),
            n.holds,
            n.fails,
            n.unknown,
            n.not_applicable
        ));
    }
    let fails: Vec<_> = r.failures().collect();
    if !fails.is_empty() {
        s.push_str("failures:\n");
        for f in fails {
            s.push_str(&format!("  {}\n", f.summary()));
        }
    }
    let unknown: Vec<_> = r.unknowns().collect();
    if !unknown.is_empty() {
        s.push_str("unknown:\n");
        for u in unknown {
            s.push_str(&format!("  {}\n", u.summary()));
        }
    }
    for st in &r.rev_stab {
        s.push_str(&format!(
            "  c=\"{}\": |Stab(c, w_o(c_rev))| = {} (min {}), minimal {}, least {}\n",
            st.c, st.rev_size, st.min_size, st.minimal, st.least
        ));
    }
    s.push_str(&format!("overall: {} in {:.0} ms\n", r.overall(), r.elapsed_ms));
    s
}

fn cmd_scan(a: &ScanArgs) -> Result<Output, Failure> {
    let rs = root_system(&a.r#type)?;
    let claims = if a.all || a.claims.is_empty() { Claim::ALL.to_vec() } else { a.claims.clone() };
    let cfg = ScanConfig {
        claims,
        cap: a.cap,
        options: a.search.options()?,
        execution: if a.sequential { Execution::Sequential } else { Execution::default() },
    };
    let mut report = run_scan(&rs, &cfg).map_err(|e| e.to_string())?;
    let text = scan_text(&report);
    let code = exit_for(report.overall());
    if a.summary_only {
        report.reports.clear();
    }
    let json = serde_json::to_value(&report).expect("scan reports serialize");
    Ok(Output { text, json, code })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the input-error code; 2 is reserved for unknown verdicts
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.cmd {
        Cmd::Roots { r#type } => cmd_roots(r#type),
        Cmd::Complex(a) => cmd_complex(a),
        Cmd::Stable(a) => cmd_stable(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Scan(a) => cmd_scan(a),
    };
    let out = match result {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let body = if cli.json {
        let mut s = serde_json::to_string_pretty(&out.json).expect("json");
        s.push('\n');
        s
    } else {
        out.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{body}"),
    }
    out.code
}
