use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::Context;
use serde_json::{json, Value};
use ybx_core::canon::{
    canonical_solution, compare_with_canonical, jordan_type, nilpotency_index,
    probe_integral_jordan_form, CanonError, JordanType, Nilpotency,
};
use ybx_core::hunt::output::{census_lines, census_summary, linear_lines, linear_summary};
use ybx_core::hunt::{cross_validate as run_cross_validation, enumerate_linear, enumerate_set_theoretic, HuntError, SearchConfig};
use ybx_core::modmat::literal::{parse_matrix, parse_vector, ring_to_json};
use ybx_core::modmat::{is_prime, GroupSpec, Matrix, Ring};
use ybx_core::ybkernel::format::{
    parse_pair, parse_permutation, parse_solution, permutation_to_value, render_solution, FormatError,
};
use ybx_core::ybkernel::{
    check_eq13, complete_affine, complete_solution, verify_algebraic, verify_set_level, KernelError,
    PermutationMap, DEFAULT_CAP,
};

use crate::{ClassifyArgs, ConstructArgs, EnumerateArgs, GroupArgs, SearchSetArgs, VerifyArgs};

pub enum Status {
    Pass,
    Fail,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn math(e: impl Display) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

fn from_kernel(e: KernelError) -> Failure {
    match e {
        KernelError::NotInvertible(_) | KernelError::Eq13Violation | KernelError::NotBijective => math(e),
        other => usage(other),
    }
}

fn from_format(e: FormatError) -> Failure {
    match e {
        FormatError::Incomplete(_) => math(e),
        FormatError::Malformed(_) => usage(e),
    }
}

fn from_hunt(e: HuntError) -> Failure {
    match e {
        HuntError::Kernel(k) => from_kernel(k),
        other => usage(other),
    }
}

fn from_canon(e: CanonError) -> Failure {
    match e {
        CanonError::NotInvertible | CanonError::CommutantViolation(_) | CanonError::NotNilpotent => math(e),
        other => usage(other),
    }
}

/// `YBX_WORKERS`, when set, fixes the number of search threads.
pub fn workers_from_env() -> Result<usize, Failure> {
    match std::env::var("YBX_WORKERS") {
        Err(_) => Ok(0),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&w| w > 0)
            .ok_or_else(|| usage(format!("YBX_WORKERS must be a positive integer, got \"{v}\""))),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))
}

fn emit(lines: &[String], out: Option<&Path>) -> Result<(), Failure> {
    let mut text = lines.join("\n");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))
            .map_err(|e| usage(format!("{e:#}"))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("stdout: {e}"))),
    }
}

fn print(v: &Value) {
    println!("{v}");
}

pub fn verify(args: VerifyArgs) -> Result<Status, Failure> {
    let text = read(&args.file)?;
    let report = if text.trim_start().starts_with('{') {
        let s = parse_solution(&text).map_err(from_format)?;
        if args.set_level {
            let r = s.to_permutation(DEFAULT_CAP).map_err(from_kernel)?;
            verify_set_level(&r, args.checks, DEFAULT_CAP)
        } else {
            verify_algebraic(&s, args.checks)
        }
    } else {
        let group = match (args.modulus, args.rank) {
            (Some(m), Some(n)) => Some(GroupSpec::new(m, n).map_err(usage)?),
            _ => None,
        };
        let r = parse_permutation(&text, group).map_err(from_format)?;
        verify_set_level(&r, args.checks, DEFAULT_CAP)
    }
    .map_err(from_kernel)?;
    print(&serde_json::to_value(&report).expect("report serializes"));
    Ok(if report.any_fail() { Status::Fail } else { Status::Pass })
}

fn matrix_arg(ring: Ring, text: &str, n: usize, name: &str) -> Result<Matrix, Failure> {
    let m = parse_matrix(ring, text).map_err(|e| usage(format!("--{name}: {e}")))?;
    if (m.rows(), m.cols()) != (n, n) {
        return Err(usage(format!("--{name} must be {n}x{n}")));
    }
    Ok(m)
}

pub fn construct(args: ConstructArgs, affine: bool) -> Result<Status, Failure> {
    if affine && args.z.is_none() {
        return Err(usage("construct-affine needs --z"));
    }
    let ring = Ring::zmod(args.modulus).map_err(usage)?;
    let (a, b) = match (&args.a, &args.b, &args.jordan_type) {
        (Some(a), Some(b), _) => {
            let n = args.rank.ok_or_else(|| usage("--a and --b need --rank"))?;
            (matrix_arg(ring, a, n, "a")?, matrix_arg(ring, b, n, "b")?)
        }
        (_, _, Some(parts)) => {
            let ty = JordanType::new(parts.clone()).map_err(usage)?;
            if args.rank.is_some_and(|n| n != ty.size()) {
                return Err(usage(format!("--rank does not match a type of size {}", ty.size())));
            }
            let commutant = match &args.commutant {
                Some(text) => matrix_arg(ring, text, ty.size(), "commutant")?,
                None => Matrix::identity(ring, ty.size()).map_err(usage)?,
            };
            canonical_solution(&ty, &commutant).map_err(from_canon)?
        }
        _ => return Err(usage("give --a and --b, or --type")),
    };
    let group = GroupSpec::new(args.modulus, a.rows()).map_err(usage)?;
    let solution = match &args.z {
        Some(z) => {
            let z = parse_vector(z).map_err(|e| usage(format!("--z: {e}")))?;
            complete_affine(group, &a, &b, &z)
        }
        None => complete_solution(group, &a, &b).map(|s| s.into_affine()),
    }
    .map_err(from_kernel)?;
    println!("{}", render_solution(&solution));
    Ok(Status::Pass)
}

fn elapsed(start: Instant, hide: bool) -> Option<f64> {
    (!hide).then(|| start.elapsed().as_secs_f64())
}

pub fn enumerate(args: EnumerateArgs, workers: usize) -> Result<Status, Failure> {
    let start = Instant::now();
    let group = GroupSpec::new(args.group.modulus, args.group.rank).map_err(usage)?;
    let mut cfg = SearchConfig::default().with_workers(workers);
    if let Some(b) = args.budget {
        cfg.budget = b;
    }
    let pairs = enumerate_linear(group.modulus(), group.rank(), &cfg).map_err(from_hunt)?;
    let mut lines = linear_lines(group, &pairs).map_err(from_hunt)?;
    lines.push(linear_summary(&pairs, elapsed(start, args.no_elapsed)).to_line());
    emit(&lines, args.out.as_deref())?;
    Ok(Status::Pass)
}

pub fn search_set(args: SearchSetArgs, workers: usize) -> Result<Status, Failure> {
    let start = Instant::now();
    let cfg = SearchConfig::default().with_checks(args.checks).with_workers(workers);
    let census = enumerate_set_theoretic(args.n, &cfg).map_err(from_hunt)?;
    let mut lines = census_lines(&census);
    lines.push(census_summary(&census, elapsed(start, args.no_elapsed)).to_line());
    emit(&lines, args.out.as_deref())?;
    Ok(Status::Pass)
}

pub fn classify(args: ClassifyArgs) -> Result<Status, Failure> {
    let (a, b) = parse_pair(&read(&args.file)?).map_err(from_format)?;
    let nilpotency = nilpotency_index(&a).map_err(usage)?;
    let mut report = json!({
        "ring": ring_to_json(a.ring()),
        "nilpotency": nilpotency,
    });
    let mut status = Status::Pass;
    if let Some(b) = &b {
        let holds = check_eq13(&a, b).map_err(usage)?;
        report["eq13"] = Value::from(holds);
        if !holds {
            status = Status::Fail;
        }
    }
    let prime_field = matches!(a.ring(), Ring::Mod(p) if is_prime(p));
    if prime_field && nilpotency != Nilpotency::NotNilpotent {
        report["jordan_type"] = json!(jordan_type(&a).map_err(from_canon)?);
        if let Some(b) = &b {
            report["canonical"] = json!(compare_with_canonical(&a, b).map_err(from_canon)?);
        }
    }
    if args.probe_prop5 {
        if a.ring() != Ring::Integers {
            return Err(usage("--probe-prop5 needs an integer matrix ({\"ring\": \"Z\"})"));
        }
        report["probe"] = json!(probe_integral_jordan_form(&a).map_err(from_canon)?);
    }
    print(&report);
    Ok(status)
}

fn tables(list: &[PermutationMap]) -> Value {
    Value::from(list.iter().map(permutation_to_value).collect::<Vec<_>>())
}

pub fn cross_validate(args: GroupArgs, workers: usize) -> Result<Status, Failure> {
    let cfg = SearchConfig::default().with_workers(workers);
    let rep = run_cross_validation(args.modulus, args.rank, &cfg).map_err(from_hunt)?;
    let report = json!({
        "group": {"mod": rep.group.modulus(), "rank": rep.group.rank()},
        "linear_count": rep.linear_count,
        "affine_count": rep.affine_count,
        "census_raw": rep.census_raw,
        "census_canonical": rep.census_canonical,
        "inclusion_holds": rep.inclusion_holds(),
        "affine_inclusion_holds": rep.affine_inclusion_holds(),
        "missing": tables(&rep.missing),
        "affine_missing": tables(&rep.affine_missing),
        "residue_affine": tables(&rep.residue_affine),
        "residue_other": tables(&rep.residue_other),
    });
    print(&report);
    Ok(if rep.inclusion_holds() && rep.affine_inclusion_holds() {
        Status::Pass
    } else {
        Status::Fail
    })
}
