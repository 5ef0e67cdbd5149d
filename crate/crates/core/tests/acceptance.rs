//! Acceptance criteria, one PASS/FAIL line each. Runtime limits are part of
//! each criterion and are checked against wall-clock time.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use ybx_core::canon::{binomial_matrix, nilpotency_index, shift_matrix, Nilpotency};
use ybx_core::hunt::output::{census_lines, linear_lines};
use ybx_core::hunt::{enumerate_linear, enumerate_set_theoretic, LinearPair, SearchConfig};
use ybx_core::modmat::{GroupSpec, Matrix, Ring};
use ybx_core::ybkernel::{
    check_eq13, complete_affine, verify_crossing_linear, verify_crossing_matrix, verify_qybe_set,
    verify_set_level, verify_unitarity_set, CheckSet, LinearSolution, PermutationMap, DEFAULT_CAP,
};

use common::{all_matrices, block_identities_hold, closed_form_holds, gcd, mat, random_invertible, random_matrix, rng};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(1);
const LIMIT_3: Duration = Duration::from_secs(5);
const LIMIT_4: Duration = Duration::from_secs(60);
const LIMIT_5: Duration = Duration::from_secs(120);
const LIMIT_6: Duration = Duration::from_secs(60);
const LIMIT_7: Duration = Duration::from_secs(600);
const LIMIT_8_SMALL: Duration = Duration::from_secs(1);
const LIMIT_8_LARGE: Duration = Duration::from_secs(600);

/// Random quadruples per modulus in criterion 4 (at least 10^4 in total).
const RANDOM_QUADRUPLES: usize = 6000;
const MIN_AFFINE_COMPLETIONS: usize = 100;
const BASELINE_Z3_RANK2: usize = 96;
const BASELINE_Z5_RANK2: usize = 960;
const MANY_WORKERS: usize = 8;

const GROUPS: [(u64, usize); 5] = [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    let within = took <= limit;
    verdict(
        v.ok && within,
        format!("{}; {:.3}s (limit {}s)", v.detail, took.as_secs_f64(), limit.as_secs()),
    )
}

fn solutions(m: u64, n: usize, workers: usize) -> Vec<LinearSolution> {
    let g = GroupSpec::new(m, n).unwrap();
    enumerate_linear(m, n, &SearchConfig::default().with_workers(workers))
        .unwrap()
        .iter()
        .map(|p| p.complete(g).unwrap())
        .collect()
}

fn criterion_1() -> Verdict {
    timed(LIMIT_1, || {
        let failing: Vec<usize> = (1..=16)
            .filter(|&n| {
                let j = shift_matrix(n, Ring::Integers).unwrap();
                let b = binomial_matrix(n, Ring::Integers).unwrap();
                let lhs = j.mul(&b).unwrap();
                let rhs = b.mul(&j).unwrap().add(&j.mul(&b).unwrap().mul(&j).unwrap()).unwrap();
                lhs != rhs
            })
            .collect();
        verdict(failing.is_empty(), format!("J_N B_N = B_N J_N + J_N B_N J_N over Z for N<=16, failing N: {failing:?}"))
    })
}

fn criterion_2() -> Verdict {
    timed(LIMIT_2, || {
        let a = mat(2, vec![vec![1, 1], vec![1, 0]]);
        let b = mat(2, vec![vec![0, 1], vec![1, 0]]);
        let eq13 = check_eq13(&a, &b).unwrap();
        let nil = nilpotency_index(&a).unwrap();
        let emitted = enumerate_linear(2, 2, &SearchConfig::default())
            .unwrap()
            .contains(&LinearPair { a, b });
        verdict(
            eq13 && nil == Nilpotency::NotNilpotent && emitted,
            format!("eq13={eq13}, nilpotency={nil:?}, emitted={emitted}"),
        )
    })
}

fn criterion_3() -> Verdict {
    timed(LIMIT_3, || {
        let mut mismatched = Vec::new();
        for n in 2..=30u64 {
            let found: Vec<(i64, i64)> = enumerate_linear(n, 1, &SearchConfig::default())
                .unwrap()
                .iter()
                .map(|p| (p.a.get(0, 0), p.b.get(0, 0)))
                .collect();
            let mut expected = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if (a * a) % n == 0 && gcd(b, n) == 1 {
                        expected.push((a as i64, b as i64));
                    }
                }
            }
            if found != expected {
                mismatched.push(n);
            }
        }
        verdict(mismatched.is_empty(), format!("Z/n, n=2..30, mismatched n: {mismatched:?}"))
    })
}

fn criterion_4() -> Verdict {
    timed(LIMIT_4, || {
        let mut checked = 0usize;
        let mut discrepancies = 0usize;
        let mut tally = |s: &LinearSolution, checked: &mut usize| {
            *checked += 1;
            if block_identities_hold(s) != closed_form_holds(&s.a, &s.b, &s.c, &s.d) {
                discrepancies += 1;
            }
        };
        for n in 1..=2 {
            let g = GroupSpec::new(2, n).unwrap();
            let inv: Vec<Matrix> = all_matrices(2, n).filter(|x| x.is_invertible().unwrap()).collect();
            for a in all_matrices(2, n) {
                for b in &inv {
                    for c in &inv {
                        for d in all_matrices(2, n) {
                            tally(&LinearSolution::new(g, a.clone(), b.clone(), c.clone(), d).unwrap(), &mut checked);
                        }
                    }
                }
            }
        }
        let exhaustive = checked;
        let mut r = rng(2024);
        for m in [3u64, 5] {
            let g = GroupSpec::new(m, 2).unwrap();
            let known = solutions(m, 2, 0);
            let mut drawn = 0;
            while drawn < RANDOM_QUADRUPLES {
                // a third uniform, a third solutions, a third perturbed solutions
                let s = match drawn % 3 {
                    0 => LinearSolution::new(
                        g,
                        random_matrix(&mut r, m, 2),
                        random_invertible(&mut r, m, 2),
                        random_invertible(&mut r, m, 2),
                        random_matrix(&mut r, m, 2),
                    )
                    .unwrap(),
                    1 => known[r.gen_range(0..known.len())].clone(),
                    _ => {
                        let mut s = known[r.gen_range(0..known.len())].clone();
                        s.d = s.d.add(&random_matrix(&mut r, m, 2)).unwrap();
                        s
                    }
                };
                if s.c.is_invertible().unwrap() {
                    tally(&s, &mut checked);
                    drawn += 1;
                }
            }
        }
        verdict(
            discrepancies == 0,
            format!(
                "block identities <=> closed form: {exhaustive} exhaustive over Z/2 + {} random over Z/3, Z/5, {discrepancies} discrepancies",
                checked - exhaustive
            ),
        )
    })
}

fn criterion_5() -> Verdict {
    timed(LIMIT_5, || {
        let (mut total, mut failed, mut disagree) = (0, 0, 0);
        for (m, n) in GROUPS {
            for s in solutions(m, n, 0) {
                total += 1;
                let r = s.to_permutation(DEFAULT_CAP).unwrap();
                let matrix = verify_crossing_matrix(&r, DEFAULT_CAP).unwrap().is_pass();
                let linear = verify_crossing_linear(&s).unwrap().is_pass();
                let all = verify_qybe_set(&r).is_pass() && verify_unitarity_set(&r).is_pass() && matrix && linear;
                failed += usize::from(!all);
                disagree += usize::from(matrix != linear);
            }
        }
        verdict(
            failed == 0 && disagree == 0 && total > 0,
            format!("{total} completed solutions, {failed} failing a check, crossing checkers disagree on {disagree}"),
        )
    })
}

fn criterion_6() -> Verdict {
    timed(LIMIT_6, || {
        let (mut completions, mut failing_completions) = (0, 0);
        let (mut perturbed, mut qybe_fails, mut unitarity_fails) = (0, 0, 0);
        for (m, n) in GROUPS {
            let g = GroupSpec::new(m, n).unwrap();
            for s in solutions(m, n, 0) {
                for z in g.elements() {
                    let good = complete_affine(g, &s.a, &s.b, &z).unwrap();
                    completions += 1;
                    let r = good.to_permutation(DEFAULT_CAP).unwrap();
                    if verify_set_level(&r, CheckSet::ALL, DEFAULT_CAP).unwrap().any_fail() {
                        failing_completions += 1;
                    }
                    for delta in g.elements().filter(|v| v.iter().any(|&x| x != 0)) {
                        let t: Vec<i64> = good.t.iter().zip(&delta).map(|(&x, &y)| (x + y) % m as i64).collect();
                        let bad = s.clone().with_translation(&z, &t).unwrap();
                        let r = bad.to_permutation(DEFAULT_CAP).unwrap();
                        perturbed += 1;
                        if verify_qybe_set(&r).witness().is_some() {
                            qybe_fails += 1;
                        }
                        if verify_unitarity_set(&r).is_fail() {
                            unitarity_fails += 1;
                        }
                    }
                }
            }
        }
        verdict(
            completions >= MIN_AFFINE_COMPLETIONS && failing_completions == 0 && qybe_fails == perturbed,
            format!(
                "{completions} affine completions ({failing_completions} failing); perturbed t fails qybe in {qybe_fails}/{perturbed} (unitarity in {unitarity_fails}/{perturbed})"
            ),
        )
    })
}

fn criterion_7() -> Verdict {
    timed(LIMIT_7, || {
        let mut notes = Vec::new();
        let mut ok = true;
        for (p, baseline) in [(3u64, BASELINE_Z3_RANK2), (5, BASELINE_Z5_RANK2)] {
            let runs: Vec<Vec<LinearPair>> = [1, 0, MANY_WORKERS]
                .iter()
                .map(|&w| enumerate_linear(p, 2, &SearchConfig::default().with_workers(w)).unwrap())
                .collect();
            let stable = runs.windows(2).all(|w| w[0] == w[1]);
            let nilpotent = runs[0]
                .iter()
                .all(|pair| matches!(nilpotency_index(&pair.a).unwrap(), Nilpotency::Index(_)));
            let count = runs[0].len();
            ok &= stable && nilpotent && count == baseline;
            notes.push(format!("Z/{p}: {count} pairs (baseline {baseline}), all a nilpotent={nilpotent}, stable={stable}"));
        }
        verdict(ok, notes.join("; "))
    })
}

fn criterion_8() -> Verdict {
    let small = timed(LIMIT_8_SMALL, || {
        let everything = enumerate_set_theoretic(2, &SearchConfig::default().with_checks("".parse().unwrap()))
            .unwrap()
            .raw;
        let census: Vec<&PermutationMap> = everything
            .iter()
            .filter(|r| !verify_set_level(r, CheckSet::ALL, DEFAULT_CAP).unwrap().any_fail())
            .collect();
        let searched = enumerate_set_theoretic(2, &SearchConfig::default()).unwrap().raw;
        let same = census.iter().map(|r| r.table()).eq(searched.iter().map(|r| r.table()));
        let linear_in = solutions(2, 1, 0).iter().all(|s| {
            let t = s.to_permutation(DEFAULT_CAP).unwrap();
            census.iter().any(|r| r.table() == t.table())
        });
        let id = verify_set_level(&PermutationMap::identity(2), CheckSet::ALL, DEFAULT_CAP).unwrap();
        let flip = verify_set_level(&PermutationMap::flip(2), CheckSet::ALL, DEFAULT_CAP).unwrap();
        let flip_ok = flip.qybe.is_pass() && flip.unitarity.is_pass() && flip.crossing.is_fail();
        verdict(
            everything.len() == 24 && same && linear_in && !id.any_fail() && flip_ok,
            format!(
                "n=2: {} permutations, census {} (search agrees={same}), linear included={linear_in}, identity passes={}, flip passes qybe and unitarity but fails crossing={flip_ok}",
                everything.len(),
                census.len(),
                !id.any_fail()
            ),
        )
    });
    let large = timed(LIMIT_8_LARGE, || {
        let c = enumerate_set_theoretic(3, &SearchConfig::default()).unwrap();
        verdict(true, format!("n=3: census {} raw / {} up to relabeling", c.raw.len(), c.canonical.len()))
    });
    verdict(small.ok && large.ok, format!("{}; {}", small.detail, large.detail))
}

fn criterion_9() -> Verdict {
    let render = |workers: usize| -> String {
        let cfg = SearchConfig::default().with_workers(workers);
        let mut out = String::new();
        for p in [3u64, 5] {
            let g = GroupSpec::new(p, 2).unwrap();
            out += &linear_lines(g, &enumerate_linear(p, 2, &cfg).unwrap()).unwrap().join("\n");
        }
        for n in [2, 3] {
            for checks in ["qybe,unitarity,crossing", "qybe,unitarity"] {
                let c = enumerate_set_theoretic(n, &cfg.with_checks(checks.parse().unwrap())).unwrap();
                out += &census_lines(&c).join("\n");
            }
        }
        out
    };
    let one = render(1);
    let many = render(MANY_WORKERS);
    verdict(
        one == many,
        format!("{} bytes with 1 worker, {} with {MANY_WORKERS}, identical={}", one.len(), many.len(), one == many),
    )
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("pascal identity", criterion_1),
        ("p=N=2 fixture", criterion_2),
        ("Z/n reproduction", criterion_3),
        ("closed-form equivalence", criterion_4),
        ("completed solutions", criterion_5),
        ("affine translations", criterion_6),
        ("nilpotency over Z/p", criterion_7),
        ("set-theoretic census", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = BTreeSet::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("criterion {} {} {name}: {}", i + 1, if v.ok { "PASS" } else { "FAIL" }, v.detail);
        if !v.ok {
            failed.insert(i + 1);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
