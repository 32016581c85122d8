//! Acceptance suite: one line per criterion, exact comparisons throughout.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use affschur::verify::{run_check, CheckParams, Status};

struct Criterion {
    id: usize,
    title: &'static str,
    checks: &'static [&'static str],
    params: fn() -> CheckParams,
    budget: Duration,
}

fn defaults() -> CheckParams {
    CheckParams::default()
}

fn n2() -> CheckParams {
    CheckParams { n: Some(2), ..Default::default() }
}

const MIN: u64 = 60;

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "Hecke presentation, r = 2..4", checks: &["hecke-relations"], params: defaults, budget: Duration::from_secs(MIN) },
    Criterion { id: 2, title: "T_rho identities, r = 1..5", checks: &["trho"], params: defaults, budget: Duration::from_secs(MIN) },
    Criterion {
        id: 3,
        title: "module axioms, zeta_r relations and H-linearity, n = 2,3, r = 1..3",
        checks: &["module-axioms", "zeta-relations"],
        params: defaults,
        budget: Duration::from_secs(5 * MIN),
    },
    Criterion {
        id: 4,
        title: "coproduct of shift elements, r'+r'' <= 4, |m| <= 2, n = 2,3",
        checks: &["coproduct-lemma"],
        params: defaults,
        budget: Duration::from_secs(5 * MIN),
    },
    Criterion {
        id: 5,
        title: "canonical basis, n = 2, r <= 3, spread <= 2, rank-two example",
        checks: &["canonical-basis"],
        params: n2,
        budget: Duration::from_secs(10 * MIN),
    },
    Criterion { id: 6, title: "eta_m shift by theta^{rho^{mr}}, |m| <= 2", checks: &["ke-shift"], params: n2, budget: Duration::from_secs(10 * MIN) },
    Criterion { id: 7, title: "iota_{2,3}(theta_A) = theta_A~, r <= 3, spread <= 1", checks: &["iota-cb"], params: n2, budget: Duration::from_secs(15 * MIN) },
    Criterion { id: 8, title: "coproduct of theta_{A+diag} via f, sampled, n = 2, r <= 3", checks: &["ke3"], params: n2, budget: Duration::from_secs(15 * MIN) },
    Criterion { id: 9, title: "eta~_k transport of g, n = 2, N = 3, r <= 3, |k| <= 2", checks: &["thm-A1"], params: n2, budget: Duration::from_secs(15 * MIN) },
    Criterion {
        id: 10,
        title: "g = v^<d,co> f~ for k <= k0, f = v^(..) f~, positivity of f and g",
        checks: &["thm-A2", "cor-39", "positivity"],
        params: n2,
        budget: Duration::from_secs(15 * MIN),
    },
    Criterion {
        id: 11,
        title: "f independent of the auxiliary diagonal, fixed values 1 and v",
        checks: &["f-consistency"],
        params: n2,
        budget: Duration::from_secs(5 * MIN),
    },
    Criterion {
        id: 12,
        title: "h against divided powers (i, a <= 2, sigma <= 4, n = 2) and the g/f chain",
        checks: &["thm-42"],
        params: n2,
        budget: Duration::from_secs(10 * MIN),
    },
];

fn main() -> ExitCode {
    let mut all = true;
    for c in CRITERIA {
        let start = Instant::now();
        let mut ok = true;
        let mut notes = Vec::new();
        for name in c.checks {
            match run_check(name, &(c.params)()) {
                Ok(rep) => {
                    let cases = rep.witnesses.first().and_then(|w| w.get("cases")).and_then(|x| x.as_u64());
                    if rep.status != Status::Pass {
                        ok = false;
                        notes.push(format!("{name}: {:?} {}", rep.status, serde_json::to_string(&rep.witnesses).unwrap_or_default()));
                    } else {
                        notes.push(format!("{name}: {} cases", cases.unwrap_or(0)));
                    }
                }
                Err(e) => {
                    ok = false;
                    notes.push(format!("{name}: error {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            ok = false;
            notes.push(format!("over budget {:?}", c.budget));
        }
        all &= ok;
        println!(
            "criterion {:>2} {}: {} [{}; {:.2}s]",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            notes.join(", "),
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
