//! Acceptance gate: every criterion prints one PASS/FAIL line, and the test
//! fails if any criterion fails. Comparisons are exact; the only tolerances
//! are the wall-clock budgets below.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ybe_core::actions::{bijectivity_report, degree_row, identity_suite, Cocycle, SamplePolicy};
use ybe_core::atlas::fixtures;
use ybe_core::atlas::{campaign_cocycle, campaign_growth, campaign_main_irr, campaign_rump};
use ybe_core::cancellative::{
    eta_window, injective_solution, is_left_cancellative_within, r_bar, semi_truss_checks, QuotientMonoid,
};
use ybe_core::words::{relations, GradedQuotient, PresentationKind, Word};

const BUDGET_SKEW: Duration = Duration::from_secs(1);
const BUDGET_CONSTANT: Duration = Duration::from_secs(1);
const BUDGET_SYM3: Duration = Duration::from_secs(10);
const BUDGET_NAT: Duration = Duration::from_secs(1);
const BUDGET_MAIN_IRR: Duration = Duration::from_secs(60);
const BUDGET_RUMP: Duration = Duration::from_secs(300);
const BUDGET_COCYCLE: Duration = Duration::from_secs(30);
const BUDGET_IDENTITIES: Duration = Duration::from_secs(60);
const BUDGET_GROWTH: Duration = Duration::from_secs(60);

const IDENTITY_SAMPLES: usize = 1_000;
const IDENTITY_SEED: u64 = 0;

fn w(v: &[usize]) -> Word {
    Word::new(v.to_vec())
}

fn pairs(list: &[(&[usize], &[usize])]) -> BTreeSet<(Word, Word)> {
    list.iter()
        .map(|(a, b)| {
            let (a, b) = (w(a), w(b));
            if a < b { (a, b) } else { (b, a) }
        })
        .collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(cond: bool, what: &str, failures: &mut Vec<String>) {
    if !cond {
        failures.push(what.to_string());
    }
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail: summary }
    } else {
        Outcome {
            ok: false,
            detail: format!("{summary}; failed: {}", failures.join(", ")),
        }
    }
}

/// Unordered pair of M-classes.
fn class_pair(q: &GradedQuotient, pair: &(Word, Word)) -> BTreeSet<usize> {
    [q.class_id(&pair.0).unwrap(), q.class_id(&pair.1).unwrap()].into()
}

fn criterion_skew_lattice() -> Outcome {
    let s = fixtures::skew_lattice();
    let mut f = Vec::new();
    let rel = |k| relations(k, &s).pairs.into_iter().collect::<BTreeSet<_>>();
    check(
        rel(PresentationKind::M) == pairs(&[(&[1, 0], &[0, 1]), (&[2, 0], &[0, 2]), (&[1, 2], &[2, 2]), (&[2, 1], &[1, 1])]),
        "M relations",
        &mut f,
    );
    check(
        rel(PresentationKind::A) == pairs(&[(&[1, 0], &[0, 0]), (&[2, 0], &[0, 0]), (&[1, 2], &[2, 2]), (&[2, 1], &[1, 1])]),
        "A relations",
        &mut f,
    );
    check(
        rel(PresentationKind::APrime) == pairs(&[(&[1, 0], &[1, 1]), (&[2, 0], &[2, 2])]),
        "A' relations",
        &mut f,
    );
    let q_m = GradedQuotient::build(PresentationKind::M, &s, 2).unwrap();
    let q_a = GradedQuotient::build(PresentationKind::A, &s, 2).unwrap();
    let q_ap = GradedQuotient::build(PresentationKind::APrime, &s, 2).unwrap();
    let pi = degree_row(Cocycle::Pi, &q_m, &q_a, 2).unwrap();
    let pp = degree_row(Cocycle::PiPrime, &q_m, &q_ap, 2).unwrap();
    check(!pi.injective, "pi injective at degree 2", &mut f);
    check(!pp.injective, "pi' injective at degree 2", &mut f);
    check(
        pi.injectivity_witness.as_ref().map(|p| class_pair(&q_m, p)) == Some(class_pair(&q_m, &(w(&[1, 0]), w(&[0, 0])))),
        "pi witness (1o0, 0o0)",
        &mut f,
    );
    check(
        pp.injectivity_witness.as_ref().map(|p| class_pair(&q_m, p)) == Some(class_pair(&q_m, &(w(&[1, 0]), w(&[1, 1])))),
        "pi' witness (1o0, 1o1)",
        &mut f,
    );
    // 0+1 and 0(+)1 are outside the images
    let hit_a: BTreeSet<usize> = (0..q_m.class_count(2))
        .map(|c| q_a.class_id(&ybe_core::actions::pi(&s, &q_m.rep(2, c))).unwrap())
        .collect();
    let hit_ap: BTreeSet<usize> = (0..q_m.class_count(2))
        .map(|c| q_ap.class_id(&ybe_core::actions::pi_prime(&s, &q_m.rep(2, c))).unwrap())
        .collect();
    check(!hit_a.contains(&q_a.class_id(&w(&[0, 1])).unwrap()), "0+1 outside Im(pi)", &mut f);
    check(!hit_ap.contains(&q_ap.class_id(&w(&[0, 1])).unwrap()), "0(+)1 outside Im(pi')", &mut f);
    outcome(
        f,
        format!(
            "skew lattice: 4/4/2 relations, witnesses {:?} and {:?}",
            pi.injectivity_witness, pp.injectivity_witness
        ),
    )
}

fn criterion_constant() -> Outcome {
    let mut f = Vec::new();
    for n in [2, 3] {
        let r = bijectivity_report(&fixtures::constant(n), 6).unwrap();
        check(r.pi.injective_all(), &format!("constant{n}: pi injective"), &mut f);
        check(
            r.pi.rows[2..].iter().all(|row| !row.surjective),
            &format!("constant{n}: pi not surjective for 2<=d<=6"),
            &mut f,
        );
        check(r.pi_prime.bijective_all(), &format!("constant{n}: pi' bijective"), &mut f);
        let d = bijectivity_report(&fixtures::constant_dual(n), 6).unwrap();
        check(d.pi_prime.injective_all(), &format!("constant_dual{n}: pi' injective"), &mut f);
        check(
            d.pi_prime.rows[2..].iter().all(|row| !row.surjective),
            &format!("constant_dual{n}: pi' not surjective for 2<=d<=6"),
            &mut f,
        );
        check(d.pi.bijective_all(), &format!("constant_dual{n}: pi bijective"), &mut f);
    }
    outcome(f, "constant and dual fixtures, n = 2, 3, degrees <= 6".into())
}

fn criterion_sym3() -> Outcome {
    let s = fixtures::sym3_conj();
    let mut f = Vec::new();
    let q = GradedQuotient::build(PresentationKind::M, &s, 4).unwrap();
    check(q.equal(&w(&[1, 4, 4, 4]), &w(&[1, 5, 5, 5])).unwrap(), "(12)(123)^3 = (12)(132)^3", &mut f);
    check(!q.equal(&w(&[4, 4, 4]), &w(&[5, 5, 5])).unwrap(), "(123)^3 != (132)^3", &mut f);
    let ew = eta_window(&s, 4, 1).unwrap();
    check(ew.related(&w(&[4, 4, 4]), &w(&[5, 5, 5])).unwrap(), "eta merges the cubes", &mut f);
    check(injective_solution(&ew), "X embeds in the quotient", &mut f);
    let merges = ew.merges().len();
    let qm = QuotientMonoid::new(ew);
    check(is_left_cancellative_within(&qm), "left cancellative within window", &mut f);
    let mut restriction = true;
    for x in 0..6 {
        for y in 0..6 {
            let (u, v) = s.r(x, y);
            let got = r_bar(&qm, qm.letter(x).unwrap(), qm.letter(y).unwrap());
            restriction &= matches!(got, Ok(p) if p == (qm.letter(u).unwrap(), qm.letter(v).unwrap()));
        }
    }
    check(restriction, "r-bar on generators equals r", &mut f);
    outcome(f, format!("Sym3: window D=4 W=1, {merges} merges"))
}

fn criterion_nat_trunc() -> Outcome {
    let s = fixtures::nat_trunc(4);
    let mut f = Vec::new();
    let expected = vec![1, 5, 1, 1, 1, 1];
    let mut seen = Vec::new();
    for kind in PresentationKind::ALL {
        let g = GradedQuotient::build(kind, &s, 5).unwrap().growth();
        check(g == expected, &format!("{kind} growth {g:?}"), &mut f);
        seen.push(format!("{kind}{g:?}"));
    }
    let r = bijectivity_report(&s, 5).unwrap();
    check(r.pi.bijective_all(), &format!("pi {}", r.pi.classification()), &mut f);
    check(r.pi_prime.bijective_all(), &format!("pi' {}", r.pi_prime.classification()), &mut f);
    outcome(f, format!("nat_trunc_4 growth {}", seen.join(" ")))
}

fn criterion_main_irr() -> Outcome {
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for n in [2, 3] {
        let r = campaign_main_irr(n).unwrap();
        check(r.passed(), &format!("n={n}: {} violations", r.violations.len()), &mut f);
        check(
            r.tally_of("h_inverted_by_gamma_diagonal") == r.tally_of("irretractable"),
            &format!("n={n}: h inverted by the gamma diagonal"),
            &mut f,
        );
        summary.push(format!(
            "n={n}: {} candidates, {} solutions, {} irretractable",
            r.candidates,
            r.solutions,
            r.tally_of("irretractable")
        ));
    }
    outcome(f, summary.join("; "))
}

fn criterion_rump() -> Outcome {
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for (n, count) in [(2usize, 64u64), (3, 4_251_528)] {
        let r = campaign_rump(n).unwrap();
        check(r.candidates == count, &format!("n={n}: {} candidates", r.candidates), &mut f);
        check(r.passed(), &format!("n={n}: {} violations", r.violations.len()), &mut f);
        summary.push(format!("n={n}: {} candidates, {} solutions", r.candidates, r.solutions));
    }
    outcome(f, summary.join("; "))
}

fn criterion_cocycle() -> Outcome {
    let mut f = Vec::new();
    let r = campaign_cocycle(2, 4, 0).unwrap();
    check(r.candidates == 256, "256 map pairs", &mut f);
    check(r.passed(), &format!("{} violations", r.violations.len()), &mut f);
    outcome(f, format!("n=2 D=4: {} solutions among {} map pairs", r.solutions, r.candidates))
}

fn criterion_identities() -> Outcome {
    let mut f = Vec::new();
    let policy = SamplePolicy::random_only(IDENTITY_SAMPLES, IDENTITY_SEED);
    let mut checked = 0;
    for fx in fixtures::builtin_examples() {
        let s = &fx.solution;
        let d = if s.n() > 4 { 4 } else { 6 };
        let rep = identity_suite(s, d, &policy).unwrap();
        for (name, t) in rep.tallies() {
            checked += t.checked;
            check(t.failed == 0, &format!("{}: {name}", fx.name), &mut f);
        }
        if s.is_left_nondegenerate() {
            check(rep.lambda_prime_inverse.checked == IDENTITY_SAMPLES, &format!("{}: inversion sampled", fx.name), &mut f);
            let qm = QuotientMonoid::new(eta_window(s, d.min(4), d.min(4) - 1).unwrap());
            let st = semi_truss_checks(&qm, &policy).unwrap();
            checked += st.axiom.checked;
            check(st.axiom.failed == 0, &format!("{}: semi-truss axiom", fx.name), &mut f);
            check(st.normality.failed == 0, &format!("{}: normality", fx.name), &mut f);
        }
    }
    outcome(f, format!("{checked} identity evaluations over {} fixtures", fixtures::builtin_examples().len()))
}

fn criterion_growth() -> Outcome {
    let mut f = Vec::new();
    let mut summary = Vec::new();
    for n in 1..=3 {
        let r = campaign_growth(n, 5).unwrap();
        check(r.passed(), &format!("n={n}: {} violations", r.violations.len()), &mut f);
        summary.push(format!("n={n}: {} solutions, {} involutive", r.solutions, r.tally_of("involutive")));
    }
    outcome(f, summary.join("; "))
}

#[test]
fn acceptance_criteria() {
    type Criterion = (usize, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (1, "skew-lattice relations and cocycle witnesses", BUDGET_SKEW, criterion_skew_lattice),
        (2, "constant solutions and their duals", BUDGET_CONSTANT, criterion_constant),
        (3, "Sym3 monoid and left cancellative quotient", BUDGET_SYM3, criterion_sym3),
        (4, "truncated naturals growth and cocycles", BUDGET_NAT, criterion_nat_trunc),
        (5, "irretractable non-degenerate solutions are bijective", BUDGET_MAIN_IRR, criterion_main_irr),
        (6, "braid relation equals the three Rump conditions", BUDGET_RUMP, criterion_rump),
        (7, "non-degeneracy equals cocycle bijectivity", BUDGET_COCYCLE, criterion_cocycle),
        (8, "structural identities on random words", BUDGET_IDENTITIES, criterion_identities),
        (9, "free abelian growth of A", BUDGET_GROWTH, criterion_growth),
    ];
    let mut failed = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = out.ok && in_time;
        println!(
            "criterion {id} [{}] {name}: {} ({:.2}s, budget {}s{})",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" }
        );
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
