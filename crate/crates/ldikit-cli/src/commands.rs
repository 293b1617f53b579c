//! Command implementations. Each returns `Ok(())` or a `CliError` carrying
//! the process exit code: 2 for validation failures, 3 for exhausted search
//! budgets, 4 for parse errors.

use crate::codefile::{self, CodeFile, LoadError};
use ldikit::bounds::{
    general_cutoff, max_entry_bound, quantum_hamming_bound, within_css_promise,
    within_general_promise, CssCutoff,
};
use ldikit::distance::{
    classify_error, css_distance, distance_exact, Distance, DistanceError, DistanceResult,
    ErrorClass,
};
use ldikit::hamming::{self, FamilyError};
use ldikit::ldi::{LdiCode, SignSearchError};
use ldikit::phi::PhiVector;
use ldikit::random::SampleError;
use ldikit::ring::{is_prime, next_prime_above, ResidueSystem};
use ldikit::stab::StabilizerCode;
use ldikit::strategy::{self, LdiOptions, MethodError};
use std::fmt::Write as _;
use std::path::Path;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    fn budget(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_BUDGET,
            message: message.into(),
        }
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> CliError {
        match e {
            LoadError::Parse(p) => CliError {
                code: EXIT_PARSE,
                message: p.to_string(),
            },
            other => CliError::validation(other.to_string()),
        }
    }
}

impl From<MethodError> for CliError {
    fn from(e: MethodError) -> CliError {
        match e {
            MethodError::SignSearch(SignSearchError::BudgetExceeded { .. }) => {
                CliError::budget(e.to_string())
            }
            MethodError::SignSearch(SignSearchError::Unsat) => CliError::validation(e.to_string()),
        }
    }
}

impl From<SampleError> for CliError {
    fn from(e: SampleError) -> CliError {
        match e {
            SampleError::Exhausted { .. } => CliError::budget(e.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

impl From<DistanceError> for CliError {
    fn from(e: DistanceError) -> CliError {
        match e {
            DistanceError::BudgetExceeded { .. } => CliError::budget(e.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        match e {
            FamilyError::RepairFailed { .. } => CliError::budget(e.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<CodeFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(codefile::parse(&text)?)
}

fn write_output(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::validation(format!("cannot write {}: {e}", path.display())))
}

fn format_witness(v: &PhiVector) -> String {
    let xs: Vec<String> = v.x().iter().map(i64::to_string).collect();
    let zs: Vec<String> = v.z().iter().map(i64::to_string).collect();
    format!("({} | {})", xs.join(" "), zs.join(" "))
}

pub fn inspect(path: &Path) -> Result<(), CliError> {
    // Inspect audits rather than rejects: an uncertified integer matrix
    // still gets its report printed before the nonzero exit.
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    let raw = codefile::parse_raw(&text).map_err(|p| CliError {
        code: EXIT_PARSE,
        message: p.to_string(),
    })?;

    if raw.is_ldi {
        let report = ldikit::verify_rows(&raw.rows);
        let k = raw.n as i64 - raw.rows.len() as i64;
        println!("n={} k={} q={} css={}", raw.n, k, raw.q, report.css);
        println!(
            "mod=inf B={} violations={}",
            report.b,
            report.violations.len()
        );
        let nonzero: Vec<String> = report
            .violations
            .iter()
            .map(|(i, j, v)| format!("rows {i},{j} -> {v}"))
            .collect();
        if nonzero.is_empty() {
            println!("gram: {0}x{0}, all pairwise products zero", raw.rows.len());
        } else {
            println!(
                "gram: {0}x{0}, nonzero pairs: {1}",
                raw.rows.len(),
                nonzero.join("; ")
            );
            return Err(CliError::validation("matrix is not certified".to_string()));
        }
        // Also confirm the mod-q reduction is a valid code.
        let _ = LdiCode::new(raw.rows, raw.n, raw.q)
            .map_err(|e| CliError::validation(e.to_string()))?;
        Ok(())
    } else {
        let code = StabilizerCode::new(raw.rows, raw.n, raw.q)
            .map_err(|e| CliError::validation(e.to_string()))?;
        println!(
            "n={} k={} q={} css={}",
            code.n(),
            code.k(),
            code.q(),
            code.css_structure().is_some()
        );
        Ok(())
    }
}

/// Exact distance of a certified form at its origin, for the promise
/// report. CSS codes use the block search, everything else the generic one.
fn origin_distance(ldi: &LdiCode, budget: u64) -> Result<Distance, CliError> {
    let wmax = ldi.n();
    if let Some(css) = ldi.css_structure() {
        let d = css_distance(&css, ldi.origin_q(), wmax, budget)?;
        Ok(d.overall())
    } else {
        let code = ldi
            .reduce_mod(ldi.origin_q())
            .map_err(|e| CliError::validation(e.to_string()))?;
        Ok(distance_exact(&code, wmax, budget).distance)
    }
}

fn print_promise_report(ldi: &LdiCode, budget: u64) -> Result<(), CliError> {
    let b = ldi.max_entry();
    if ldi.generators().is_empty() || b == 0 {
        println!("B={b} (no promise cutoffs for an empty generator set)");
        return Ok(());
    }
    match origin_distance(ldi, budget)? {
        Distance::Exact(d) if d >= 2 => {
            let b = b as u64;
            let d = d as u64;
            let general = general_cutoff(b, d);
            let css = CssCutoff::new(b, d);
            println!("B={b} d={d}");
            println!(
                "p_star={general} next_safe_prime={}",
                next_prime_above(u64::try_from(&general).unwrap_or(u64::MAX - 1))
            );
            println!(
                "p_star_css={css} next_safe_prime_css={}",
                css.next_safe_prime()
            );
        }
        Distance::Exact(d) => {
            println!("B={b} d={d}");
            println!("promise cutoffs need distance >= 2");
        }
        Distance::AtLeast(w) => {
            println!("B={b} d>={w}");
            println!("distance not settled within budget; promise cutoffs need the exact distance");
        }
    }
    Ok(())
}

pub fn ldi(
    path: &Path,
    method_name: &str,
    out: &Path,
    residues: ResidueSystem,
) -> Result<(), CliError> {
    let budget = ldikit::distance::candidate_budget();
    match load(path)? {
        CodeFile::Ldi(ldi) => {
            // Already certified: pass through unchanged.
            write_output(out, &codefile::render_ldi(&ldi))?;
            println!("already certified; copied unchanged");
            print_promise_report(&ldi, budget)
        }
        CodeFile::Stabilizer(code) => {
            let method = strategy::lookup(method_name).ok_or_else(|| {
                let names: Vec<&str> = strategy::methods().iter().map(|m| m.name()).collect();
                CliError::validation(format!(
                    "unknown method `{method_name}`; available: {}",
                    names.join(", ")
                ))
            })?;
            let options = LdiOptions {
                residues,
                budget: ldikit::ldi::default_budget(),
            };
            let built = method.build(&code, &options)?;
            write_output(out, &codefile::render_ldi(&built))?;
            println!("method={}", method.name());
            print_promise_report(&built, budget)
        }
    }
}

fn format_class(class: &ErrorClass) -> String {
    match class {
        ErrorClass::Detectable => "detectable".to_string(),
        ErrorClass::InGroup => "in-group".to_string(),
        ErrorClass::Unavoidable => "unavoidable".to_string(),
        ErrorClass::Artifact { index, value } => {
            format!("artifact(syndrome {index} = {value})")
        }
    }
}

/// Prints a distance line; for integer-form inputs the witness is also
/// classified as unavoidable vs an artifact of this local dimension.
fn print_distance_result(
    label: &str,
    result: &DistanceResult,
    ldi: Option<&LdiCode>,
) -> Result<(), CliError> {
    match (&result.distance, &result.witness) {
        (d @ Distance::Exact(_), Some(w)) => match ldi {
            Some(ldi) => {
                let class = classify_error(ldi, result.prime, w)?;
                println!(
                    "{label}={d} witness={} class={}",
                    format_witness(w),
                    format_class(&class)
                );
            }
            None => println!("{label}={d} witness={}", format_witness(w)),
        },
        (d, _) => println!("{label}={d}"),
    }
    Ok(())
}

pub fn distance(path: &Path, p: u64, wmax: Option<usize>, css_flag: bool) -> Result<(), CliError> {
    if !is_prime(p) {
        return Err(CliError::validation(format!("{p} is not prime")));
    }
    let budget = ldikit::distance::candidate_budget();
    let file = load(path)?;
    let (code, css, ldi) = match &file {
        CodeFile::Stabilizer(code) => {
            if code.q() != p {
                return Err(CliError::validation(format!(
                    "file is a mod-{} code; certify an LDI form to use it at p={p}",
                    code.q()
                )));
            }
            (code.clone(), code.css_structure(), None)
        }
        CodeFile::Ldi(ldi) => {
            let reduced = ldi
                .reduce_mod(p)
                .map_err(|e| CliError::validation(format!("reduction mod {p} failed: {e}")))?;
            (reduced, ldi.css_structure(), Some(ldi))
        }
    };
    let wmax = wmax.unwrap_or(code.n());
    if css_flag {
        let css = css.ok_or_else(|| {
            CliError::validation("--css requires a block-structured (CSS) code".to_string())
        })?;
        let d = css_distance(&css, p, wmax, budget)?;
        print_distance_result("dX", &d.x, ldi)?;
        print_distance_result("dZ", &d.z, ldi)?;
        println!("d={}", d.overall());
    } else {
        let result = distance_exact(&code, wmax, budget);
        print_distance_result("d", &result, ldi)?;
    }
    Ok(())
}

#[derive(Debug, Default, Clone, Copy)]
pub struct BoundArgs {
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub d: Option<u64>,
    pub q: Option<u64>,
    pub max_entry: Option<u64>,
}

pub fn bounds(args: BoundArgs) -> Result<(), CliError> {
    let mut printed = false;

    if let (Some(n), Some(k), Some(d), Some(q)) = (args.n, args.k, args.d, args.q) {
        if !is_prime(q) {
            return Err(CliError::validation(format!("{q} is not prime")));
        }
        if k > n || d == 0 {
            return Err(CliError::validation("need n >= k and d >= 1".to_string()));
        }
        let verdict = quantum_hamming_bound(n, k, d, q);
        println!(
            "gqhb: {} lhs={} rhs={}",
            if verdict.holds { "holds" } else { "fails" },
            verdict.lhs,
            verdict.rhs
        );
        printed = true;
    }

    if let (Some(b), Some(d)) = (args.max_entry, args.d) {
        if b < 1 || d < 2 {
            return Err(CliError::validation(
                "promise cutoffs need B >= 1 and d >= 2".to_string(),
            ));
        }
        let general = general_cutoff(b, d);
        let css = CssCutoff::new(b, d);
        println!(
            "p_star={general} next_safe_prime={}",
            next_prime_above(u64::try_from(&general).unwrap_or(u64::MAX - 1))
        );
        println!(
            "p_star_css={css} next_safe_prime_css={}",
            css.next_safe_prime()
        );
        printed = true;
    }

    if let (Some(k), Some(q)) = (args.k, args.q) {
        if !is_prime(q) {
            return Err(CliError::validation(format!("{q} is not prime")));
        }
        println!("b_bound={}", max_entry_bound(k, q));
        printed = true;
    }

    if !printed {
        return Err(CliError::validation(
            "missing arguments: --n --k --d --q (packing bound), --B --d (promise cutoffs), or --k --q (entry bound)"
                .to_string(),
        ));
    }
    Ok(())
}

pub fn hamming_cmd(bits: usize, as_ldi: bool, out: Option<&Path>) -> Result<(), CliError> {
    if bits < 3 {
        return Err(CliError::validation(format!(
            "the family starts at 3 parity bits (got {bits})"
        )));
    }
    let content = if as_ldi {
        let member = hamming::hamming_ldi(bits)?;
        for level in &member.levels {
            println!(
                "bits={} pattern={:?} repaired_rows={:?}",
                level.bits, level.pattern, level.repaired_rows
            );
        }
        println!(
            "n={} k={} generators={} B={}",
            member.code.n(),
            member.code.k(),
            member.code.generators().len(),
            member.code.max_entry()
        );
        codefile::render_ldi(&member.code)
    } else {
        let code = hamming::hamming_css(bits)?;
        println!(
            "n={} k={} generators={} q=2",
            code.n(),
            code.k(),
            code.generators().len()
        );
        codefile::render_stabilizer(&code)
    };
    match out {
        Some(path) => write_output(path, &content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn sweep(
    path: &Path,
    primes: &[u64],
    wmax: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let budget = ldikit::distance::candidate_budget();
    let CodeFile::Ldi(ldi) = load(path)? else {
        return Err(CliError::validation(
            "sweep requires an LDI (mod inf) input; certify the code first".to_string(),
        ));
    };
    let css = ldi.css_structure().ok_or_else(|| {
        CliError::validation("sweep requires a block-structured (CSS) LDI code".to_string())
    })?;
    for &p in primes {
        if !is_prime(p) {
            return Err(CliError::validation(format!("{p} is not prime")));
        }
    }
    let wmax = wmax.unwrap_or(ldi.n());
    let b = ldi.max_entry();
    let origin = ldi.origin_q();

    let d_origin = match origin_distance(&ldi, budget)? {
        Distance::Exact(d) => d as u64,
        Distance::AtLeast(w) => {
            return Err(CliError::budget(format!(
                "origin distance not settled within budget (>= {w}); cannot evaluate promises"
            )))
        }
    };

    let mut csv = String::from("p,dX,dZ,d,within_css_promise,within_general_promise\n");
    if d_origin >= 2 && b >= 1 {
        let b = b as u64;
        let css_cutoff = CssCutoff::new(b, d_origin);
        let general = general_cutoff(b, d_origin);
        eprintln!("B={b} d={d_origin} p_star={general} p_star_css={css_cutoff}");
        for &p in primes {
            let d = css_distance(&css, p, wmax, budget)?;
            let _ = writeln!(
                csv,
                "{p},{},{},{},{},{}",
                d.x.distance,
                d.z.distance,
                d.overall(),
                within_css_promise(&css_cutoff, p, origin),
                within_general_promise(&general, p, origin)
            );
        }
    } else if !primes.is_empty() {
        return Err(CliError::validation(format!(
            "promise flags need B >= 1 and origin distance >= 2 (got B={b}, d={d_origin})"
        )));
    }

    match out {
        Some(path) => write_output(path, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RandomArgs {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u64,
    pub trials: u64,
    pub seed: u64,
    pub strict_gqhb: bool,
}

pub fn random(args: RandomArgs, out: Option<&Path>) -> Result<(), CliError> {
    if args.strict_gqhb {
        let verdict = quantum_hamming_bound(args.n as u64, args.k as u64, args.d as u64, args.q);
        if !verdict.holds {
            return Err(CliError::validation(format!(
                "refused: packing bound fails for [[{},{},{}]]_{} (lhs={} > rhs={})",
                args.n, args.k, args.d, args.q, verdict.lhs, verdict.rhs
            )));
        }
    }
    let budget = ldikit::distance::candidate_budget();
    let code = ldikit::random::random_code(
        args.n,
        args.k,
        args.d,
        args.q,
        args.trials,
        args.seed,
        budget,
    )?;
    println!(
        "found [[{},{},>={}]]_{} with seed {}",
        code.n(),
        code.k(),
        args.d,
        args.q,
        args.seed
    );
    let content = codefile::render_stabilizer(&code);
    match out {
        Some(path) => write_output(path, &content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Comma-separated prime list; empty and blank both mean "no primes".
pub fn parse_primes(list: &str) -> Result<Vec<u64>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| CliError::validation(format!("`{s}` is not an integer prime")))
        })
        .collect()
}

pub fn parse_residues(name: &str) -> Result<ResidueSystem, CliError> {
    match name {
        "symmetric" => Ok(ResidueSystem::Symmetric),
        "nonnegative" => Ok(ResidueSystem::NonNegative),
        other => Err(CliError::validation(format!(
            "unknown residue system `{other}` (symmetric, nonnegative)"
        ))),
    }
}
