//! The extended solution `(M, r_M)`, the diagonal actions `λ'` and `ρ'`, the
//! 1-cocycles `π: M → A` and `π': M → A'`, and the per-degree bijectivity
//! analysis of the cocycles.
//!
//! Every map here acts letter by letter on words and preserves degree, so it
//! is evaluated on raw words; class questions go through a
//! [`GradedQuotient`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solution::FiniteSolution;
use crate::transform::Transformation;
use crate::words::{GradedQuotient, PresentationKind, Word};

/// `λ_x` on a word: `λ_x(y₁⋯y_n) = σ_x(y₁) λ_{γ_{y₁}(x)}(y₂⋯y_n)`.
fn lambda_letter(s: &FiniteSolution, x: usize, b: &[usize]) -> Vec<usize> {
    let mut cur = x;
    b.iter()
        .map(|&y| {
            let out = s.sigma(cur, y);
            cur = s.gamma(y, cur);
            out
        })
        .collect()
}

/// `ρ_x` on a word: `ρ_x(y₁⋯y_n) = ρ_{σ_{y_n}(x)}(y₁⋯y_{n-1}) γ_x(y_n)`.
fn rho_letter(s: &FiniteSolution, x: usize, b: &[usize]) -> Vec<usize> {
    let mut cur = x;
    let mut out: Vec<usize> = b
        .iter()
        .rev()
        .map(|&y| {
            let v = s.gamma(cur, y);
            cur = s.sigma(y, cur);
            v
        })
        .collect();
    out.reverse();
    out
}

/// `λ_a(b)` with `λ_{x₁⋯x_m} = λ_{x₁} ∘ ⋯ ∘ λ_{x_m}`.
pub fn lambda_m(s: &FiniteSolution, a: &Word, b: &Word) -> Word {
    let mut cur = b.letters().to_vec();
    for &x in a.letters().iter().rev() {
        cur = lambda_letter(s, x, &cur);
    }
    Word::new(cur)
}

/// `ρ_b(a)` with `ρ_{x₁⋯x_m} = ρ_{x_m} ∘ ⋯ ∘ ρ_{x₁}`.
pub fn rho_m(s: &FiniteSolution, b: &Word, a: &Word) -> Word {
    let mut cur = a.letters().to_vec();
    for &x in b.letters() {
        cur = rho_letter(s, x, &cur);
    }
    Word::new(cur)
}

/// `r_M(a, b) = (λ_a(b), ρ_b(a))`
pub fn r_m(s: &FiniteSolution, a: &Word, b: &Word) -> (Word, Word) {
    (lambda_m(s, a, b), rho_m(s, b, a))
}

/// Which of the structural identities of `(M, r_M)` hold for one triple.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct RmIdentities {
    /// `a∘b = λ_a(b)∘ρ_b(a)`
    pub product: bool,
    /// `ρ_b(c∘a) = ρ_{λ_a(b)}(c)∘ρ_b(a)`
    pub rho_of_product: bool,
    /// `λ_b(a∘c) = λ_b(a)∘λ_{ρ_a(b)}(c)`
    pub lambda_of_product: bool,
    pub braid: bool,
}

impl RmIdentities {
    pub fn all(&self) -> bool {
        self.product && self.rho_of_product && self.lambda_of_product && self.braid
    }
}

/// Evaluates the identities of `(M, r_M)` on `(a, b, c)` inside an M-quotient.
pub fn r_m_identities(q: &GradedQuotient, a: &Word, b: &Word, c: &Word) -> Result<RmIdentities> {
    let s = q.solution();
    let product = q.equal(&a.concat(b), &lambda_m(s, a, b).concat(&rho_m(s, b, a)))?;
    let rho_of_product = q.equal(
        &rho_m(s, b, &c.concat(a)),
        &rho_m(s, &lambda_m(s, a, b), c).concat(&rho_m(s, b, a)),
    )?;
    let lambda_of_product = q.equal(
        &lambda_m(s, b, &a.concat(c)),
        &lambda_m(s, b, a).concat(&lambda_m(s, &rho_m(s, a, b), c)),
    )?;

    // (r × id)(id × r)(r × id) against (id × r)(r × id)(id × r)
    let (u1, v1) = r_m(s, a, b);
    let (v2, w2) = r_m(s, &v1, c);
    let (u3, v3) = r_m(s, &u1, &v2);
    let left = [u3, v3, w2];
    let (b1, c1) = r_m(s, b, c);
    let (a2, b2) = r_m(s, a, &b1);
    let (b3, c3) = r_m(s, &b2, &c1);
    let right = [a2, b3, c3];
    let mut braid = true;
    for (l, r) in left.iter().zip(&right) {
        braid &= q.equal(l, r)?;
    }
    Ok(RmIdentities {
        product,
        rho_of_product,
        lambda_of_product,
        braid,
    })
}

pub fn r_m_check(q: &GradedQuotient, a: &Word, b: &Word, c: &Word) -> Result<bool> {
    Ok(r_m_identities(q, a, b, c)?.all())
}

/// `λ'_a = σ_{x₁} ∘ ⋯ ∘ σ_{x_m}` for `a = x₁⋯x_m`.
pub fn sigma_composite(s: &FiniteSolution, a: &Word) -> Transformation {
    a.letters()
        .iter()
        .fold(Transformation::identity(s.n()), |t, &x| t.compose(&s.sigma_map(x)))
}

/// `ρ'_a = γ_{x_m} ∘ ⋯ ∘ γ_{x₁}` for `a = x₁⋯x_m`.
pub fn gamma_composite(s: &FiniteSolution, a: &Word) -> Transformation {
    a.letters()
        .iter()
        .fold(Transformation::identity(s.n()), |t, &x| s.gamma_map(x).compose(&t))
}

fn apply_letterwise(t: &Transformation, w: &Word) -> Word {
    Word::new(w.letters().iter().map(|&y| t.apply(y)).collect())
}

pub fn lambda_prime(s: &FiniteSolution, a: &Word, w: &Word) -> Word {
    apply_letterwise(&sigma_composite(s, a), w)
}

pub fn rho_prime(s: &FiniteSolution, a: &Word, w: &Word) -> Word {
    apply_letterwise(&gamma_composite(s, a), w)
}

/// `π(x₁⋯x_m) = x₁ + σ_{x₁}(x₂) + ⋯ + σ_{x₁}⋯σ_{x_{m-1}}(x_m)`
pub fn pi(s: &FiniteSolution, w: &Word) -> Word {
    let mut t = Transformation::identity(s.n());
    let out = w
        .letters()
        .iter()
        .map(|&x| {
            let v = t.apply(x);
            t = t.compose(&s.sigma_map(x));
            v
        })
        .collect();
    Word::new(out)
}

/// `π'(x₁⋯x_m) = γ_{x_m}⋯γ_{x₂}(x₁) ⊕ ⋯ ⊕ γ_{x_m}(x_{m-1}) ⊕ x_m`
pub fn pi_prime(s: &FiniteSolution, w: &Word) -> Word {
    let mut t = Transformation::identity(s.n());
    let mut out: Vec<usize> = w
        .letters()
        .iter()
        .rev()
        .map(|&x| {
            let v = t.apply(x);
            t = t.compose(&s.gamma_map(x));
            v
        })
        .collect();
    out.reverse();
    Word::new(out)
}

/// Inverse of `π` on words; requires left non-degeneracy.
pub fn pi_inverse(s: &FiniteSolution, u: &Word) -> Result<Word> {
    s.require_left_nondegenerate()?;
    let n = s.n();
    let mut t = Transformation::identity(n);
    let out = u
        .letters()
        .iter()
        .map(|&v| {
            let x = t.inverse().expect("composite of bijections").apply(v);
            t = t.compose(&s.sigma_map(x));
            x
        })
        .collect();
    Ok(Word::new(out))
}

/// Inverse of `π'` on words; requires right non-degeneracy.
pub fn pi_prime_inverse(s: &FiniteSolution, u: &Word) -> Result<Word> {
    let n = s.n();
    if let Some(y) = (0..n).find(|&y| !s.gamma_map(y).is_bijective()) {
        return Err(Error::GammaNotBijective(y));
    }
    let mut t = Transformation::identity(n);
    let mut out: Vec<usize> = u
        .letters()
        .iter()
        .rev()
        .map(|&v| {
            let x = t.inverse().expect("composite of bijections").apply(v);
            t = t.compose(&s.gamma_map(x));
            x
        })
        .collect();
    out.reverse();
    Ok(Word::new(out))
}

/// An element `(π(a), λ'_a)` of `A ⋊ Im(λ')`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SemidirectElement {
    /// Normal form in `A`.
    pub add_part: Word,
    pub act_part: Transformation,
}

impl SemidirectElement {
    /// `(a, t)(b, u) = (a + t(b), t ∘ u)`
    pub fn mul(&self, other: &SemidirectElement, q_a: &GradedQuotient) -> Result<SemidirectElement> {
        let moved = apply_letterwise(&self.act_part, &other.add_part);
        Ok(SemidirectElement {
            add_part: q_a.normal_form(&self.add_part.concat(&moved))?,
            act_part: self.act_part.compose(&other.act_part),
        })
    }
}

/// `f(w) = (π(w), λ'_w)` computed in the A-quotient `q_a`.
pub fn f_semidirect(q_a: &GradedQuotient, w: &Word) -> Result<SemidirectElement> {
    debug_assert_eq!(q_a.kind(), PresentationKind::A);
    let s = q_a.solution();
    Ok(SemidirectElement {
        add_part: q_a.normal_form(&pi(s, w))?,
        act_part: sigma_composite(s, w),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cocycle {
    Pi,
    PiPrime,
}

impl Cocycle {
    pub fn target(self) -> PresentationKind {
        match self {
            Cocycle::Pi => PresentationKind::A,
            Cocycle::PiPrime => PresentationKind::APrime,
        }
    }

    pub fn apply(self, s: &FiniteSolution, w: &Word) -> Word {
        match self {
            Cocycle::Pi => pi(s, w),
            Cocycle::PiPrime => pi_prime(s, w),
        }
    }
}

/// Class-level image of the cocycle at degree `d`: entry `i` is the target
/// class of `π(rep_i)`.
pub fn class_map(cocycle: Cocycle, q_m: &GradedQuotient, q_t: &GradedQuotient, d: usize) -> Result<Vec<usize>> {
    let max = q_m.max_degree().min(q_t.max_degree());
    if d > max {
        return Err(Error::DegreeOutOfRange { degree: d, max });
    }
    let s = q_m.solution();
    Ok((0..q_m.class_count(d))
        .map(|c| q_t.class_id_unchecked(cocycle.apply(s, &q_m.rep(d, c)).letters()))
        .collect())
}

/// Injectivity and surjectivity of a cocycle at one degree, with canonical
/// witnesses: the first M-class (in representative order) colliding with an
/// earlier one, and the least target class that is not hit.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub source_classes: usize,
    pub target_classes: usize,
    pub injective: bool,
    pub surjective: bool,
    pub injectivity_witness: Option<(Word, Word)>,
    pub surjectivity_witness: Option<Word>,
}

impl DegreeRow {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn degree_row(cocycle: Cocycle, q_m: &GradedQuotient, q_t: &GradedQuotient, d: usize) -> Result<DegreeRow> {
    let image = class_map(cocycle, q_m, q_t, d)?;
    let target_classes = q_t.class_count(d);
    let mut first_hit: Vec<Option<usize>> = vec![None; target_classes];
    let mut injectivity_witness = None;
    for (c, &t) in image.iter().enumerate() {
        match first_hit[t] {
            Some(earlier) => {
                if injectivity_witness.is_none() {
                    injectivity_witness = Some((q_m.rep(d, c), q_m.rep(d, earlier)));
                }
            }
            None => first_hit[t] = Some(c),
        }
    }
    let surjectivity_witness = first_hit.iter().position(Option::is_none).map(|t| q_t.rep(d, t));
    Ok(DegreeRow {
        degree: d,
        source_classes: image.len(),
        target_classes,
        injective: injectivity_witness.is_none(),
        surjective: surjectivity_witness.is_none(),
        injectivity_witness,
        surjectivity_witness,
    })
}

pub fn pi_surjective_at(q_m: &GradedQuotient, q_a: &GradedQuotient, d: usize) -> Result<(bool, Option<Word>)> {
    let row = degree_row(Cocycle::Pi, q_m, q_a, d)?;
    Ok((row.surjective, row.surjectivity_witness))
}

pub fn pi_injective_at(q_m: &GradedQuotient, q_a: &GradedQuotient, d: usize) -> Result<(bool, Option<(Word, Word)>)> {
    let row = degree_row(Cocycle::Pi, q_m, q_a, d)?;
    Ok((row.injective, row.injectivity_witness))
}

pub fn pi_prime_surjective_at(q_m: &GradedQuotient, q_ap: &GradedQuotient, d: usize) -> Result<(bool, Option<Word>)> {
    let row = degree_row(Cocycle::PiPrime, q_m, q_ap, d)?;
    Ok((row.surjective, row.surjectivity_witness))
}

pub fn pi_prime_injective_at(
    q_m: &GradedQuotient,
    q_ap: &GradedQuotient,
    d: usize,
) -> Result<(bool, Option<(Word, Word)>)> {
    let row = degree_row(Cocycle::PiPrime, q_m, q_ap, d)?;
    Ok((row.injective, row.injectivity_witness))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CocycleTable {
    pub cocycle: Cocycle,
    pub rows: Vec<DegreeRow>,
}

impl CocycleTable {
    pub fn injective_all(&self) -> bool {
        self.rows.iter().all(|r| r.injective)
    }

    pub fn surjective_all(&self) -> bool {
        self.rows.iter().all(|r| r.surjective)
    }

    pub fn bijective_all(&self) -> bool {
        self.injective_all() && self.surjective_all()
    }

    pub fn row(&self, d: usize) -> Option<&DegreeRow> {
        self.rows.get(d)
    }

    /// Short verdict such as `injective, not surjective`.
    pub fn classification(&self) -> String {
        match (self.injective_all(), self.surjective_all()) {
            (true, true) => "bijective".into(),
            (true, false) => "injective, not surjective".into(),
            (false, true) => "surjective, not injective".into(),
            (false, false) => "neither injective nor surjective".into(),
        }
    }
}

/// Per-degree bijectivity of `π` and `π'` together with the pointwise
/// criteria on `σ` and `γ` and a consistency verdict tying them together.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BijectivityReport {
    pub max_degree: usize,
    pub pi: CocycleTable,
    pub pi_prime: CocycleTable,
    pub sigma_all_injective: bool,
    pub sigma_all_surjective: bool,
    pub gamma_all_injective: bool,
    pub gamma_all_surjective: bool,
    pub inconsistencies: Vec<String>,
}

impl BijectivityReport {
    pub fn consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }

    pub fn left_nondegenerate(&self) -> bool {
        self.sigma_all_injective && self.sigma_all_surjective
    }

    pub fn right_nondegenerate(&self) -> bool {
        self.gamma_all_injective && self.gamma_all_surjective
    }
}

pub fn cocycle_table(cocycle: Cocycle, q_m: &GradedQuotient, q_t: &GradedQuotient) -> Result<CocycleTable> {
    let max = q_m.max_degree().min(q_t.max_degree());
    let rows = (0..=max)
        .map(|d| degree_row(cocycle, q_m, q_t, d))
        .collect::<Result<_>>()?;
    Ok(CocycleTable { cocycle, rows })
}

/// Builds the three quotients up to `max_degree` and tabulates both cocycles.
pub fn bijectivity_report(s: &FiniteSolution, max_degree: usize) -> Result<BijectivityReport> {
    let q_m = GradedQuotient::build(PresentationKind::M, s, max_degree)?;
    let q_a = GradedQuotient::build(PresentationKind::A, s, max_degree)?;
    let q_ap = GradedQuotient::build(PresentationKind::APrime, s, max_degree)?;
    bijectivity_report_with(&q_m, &q_a, &q_ap)
}

pub fn bijectivity_report_with(
    q_m: &GradedQuotient,
    q_a: &GradedQuotient,
    q_ap: &GradedQuotient,
) -> Result<BijectivityReport> {
    let s = q_m.solution();
    let n = s.n();
    let pi = cocycle_table(Cocycle::Pi, q_m, q_a)?;
    let pi_prime = cocycle_table(Cocycle::PiPrime, q_m, q_ap)?;
    // on a finite set a self-map is injective iff it is surjective
    let bij = |t: &Transformation| t.is_bijective();
    let sigmas: Vec<_> = (0..n).map(|x| s.sigma_map(x)).collect();
    let gammas: Vec<_> = (0..n).map(|x| s.gamma_map(x)).collect();
    let mut report = BijectivityReport {
        max_degree: pi.rows.len() - 1,
        sigma_all_injective: sigmas.iter().all(bij),
        sigma_all_surjective: sigmas.iter().all(bij),
        gamma_all_injective: gammas.iter().all(bij),
        gamma_all_surjective: gammas.iter().all(bij),
        pi,
        pi_prime,
        inconsistencies: Vec::new(),
    };
    let mut issues = Vec::new();
    for (name, table, all_inj, all_surj) in [
        ("pi", &report.pi, report.sigma_all_injective, report.sigma_all_surjective),
        ("pi'", &report.pi_prime, report.gamma_all_injective, report.gamma_all_surjective),
    ] {
        if let Some(row) = table.row(2) {
            if row.surjective != all_surj {
                issues.push(format!("{name}: surjectivity at degree 2 is {} but the maps are {}surjective", row.surjective, if all_surj { "" } else { "not all " }));
            }
        }
        if all_inj && !table.injective_all() {
            issues.push(format!("{name}: maps injective but the cocycle is not injective"));
        }
        if all_inj && all_surj && !table.bijective_all() {
            issues.push(format!("{name}: non-degenerate but the cocycle is not bijective"));
        }
        if table.rows.len() > 2 && table.bijective_all() && !(all_inj && all_surj) {
            issues.push(format!("{name}: bijective through degree {} but degenerate", table.rows.len() - 1));
        }
    }
    report.inconsistencies = issues;
    Ok(report)
}

/// How word tuples for identity checks are chosen: every tuple up to a small
/// total degree when there are few enough, otherwise seeded random tuples.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SamplePolicy {
    pub exhaustive_degree: usize,
    pub exhaustive_limit: u64,
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        Self {
            exhaustive_degree: 4,
            exhaustive_limit: 100_000,
            random_samples: 1_000,
            seed: 0,
        }
    }
}

impl SamplePolicy {
    pub fn random_only(samples: usize, seed: u64) -> Self {
        Self {
            exhaustive_degree: 0,
            exhaustive_limit: 0,
            random_samples: samples,
            seed,
        }
    }

    /// Tuples of `arity` words whose total degree is at most `max_total`.
    pub fn tuples(&self, n: usize, arity: usize, max_total: usize) -> Vec<Vec<Word>> {
        if max_total <= self.exhaustive_degree && tuple_count(n, arity, max_total) <= self.exhaustive_limit as u128 {
            let mut out = Vec::new();
            all_tuples(n, arity, max_total, &mut Vec::new(), &mut out);
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.random_samples)
            .map(|_| {
                let mut budget = max_total;
                let mut degrees: Vec<usize> = (0..arity)
                    .map(|_| {
                        let d = rng.gen_range(0..=budget);
                        budget -= d;
                        d
                    })
                    .collect();
                // spread the budget evenly across positions
                let k = rng.gen_range(0..arity.max(1));
                degrees.rotate_left(k);
                degrees
                    .into_iter()
                    .map(|d| Word::new((0..d).map(|_| rng.gen_range(0..n)).collect()))
                    .collect()
            })
            .collect()
    }
}

fn tuple_count(n: usize, arity: usize, max_total: usize) -> u128 {
    // number of tuples with degree sum exactly t is n^t * C(t + arity - 1, arity - 1)
    (0..=max_total)
        .map(|t| {
            let mut binom: u128 = 1;
            for i in 0..arity.saturating_sub(1) {
                binom = binom * (t + i + 1) as u128 / (i + 1) as u128;
            }
            crate::words::word_count(n, t).saturating_mul(binom)
        })
        .fold(0u128, u128::saturating_add)
}

fn all_tuples(n: usize, arity: usize, budget: usize, prefix: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
    if prefix.len() == arity {
        out.push(prefix.clone());
        return;
    }
    for d in 0..=budget {
        let total = crate::words::word_count(n, d) as u64;
        for idx in 0..total {
            let mut letters = vec![0; d];
            let mut rest = idx;
            for slot in letters.iter_mut().rev() {
                *slot = (rest % n as u64) as usize;
                rest /= n as u64;
            }
            prefix.push(Word::new(letters));
            all_tuples(n, arity, budget - d, prefix, out);
            prefix.pop();
        }
    }
}

/// Tally for one identity over a sample.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct IdentityTally {
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<Vec<Word>>,
}

impl IdentityTally {
    pub(crate) fn record(&mut self, ok: bool, tuple: &[Word]) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(tuple.to_vec());
            }
        }
    }
}

/// Structural identities of `M`, `A`, `A'` and the cocycles, checked on
/// sampled word triples `(a, b, c)`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct IdentityReport {
    pub max_degree: usize,
    pub product: IdentityTally,
    pub rho_of_product: IdentityTally,
    pub lambda_of_product: IdentityTally,
    pub braid: IdentityTally,
    pub lambda_well_defined: IdentityTally,
    pub rho_well_defined: IdentityTally,
    pub pi_cocycle: IdentityTally,
    pub pi_prime_cocycle: IdentityTally,
    pub pi_well_defined: IdentityTally,
    pub pi_prime_well_defined: IdentityTally,
    pub lambda_prime_well_defined: IdentityTally,
    pub lambda_prime_inverse: IdentityTally,
    pub semidirect_homomorphism: IdentityTally,
}

impl IdentityReport {
    pub fn tallies(&self) -> Vec<(&'static str, &IdentityTally)> {
        vec![
            ("product", &self.product),
            ("rho_of_product", &self.rho_of_product),
            ("lambda_of_product", &self.lambda_of_product),
            ("braid", &self.braid),
            ("lambda_well_defined", &self.lambda_well_defined),
            ("rho_well_defined", &self.rho_well_defined),
            ("pi_cocycle", &self.pi_cocycle),
            ("pi_prime_cocycle", &self.pi_prime_cocycle),
            ("pi_well_defined", &self.pi_well_defined),
            ("pi_prime_well_defined", &self.pi_prime_well_defined),
            ("lambda_prime_well_defined", &self.lambda_prime_well_defined),
            ("lambda_prime_inverse", &self.lambda_prime_inverse),
            ("semidirect_homomorphism", &self.semidirect_homomorphism),
        ]
    }

    pub fn failures(&self) -> usize {
        self.tallies().iter().map(|(_, t)| t.failed).sum()
    }
}

/// Runs the identity suite on triples of total degree at most `max_degree`.
pub fn identity_suite(s: &FiniteSolution, max_degree: usize, policy: &SamplePolicy) -> Result<IdentityReport> {
    let q_m = GradedQuotient::build(PresentationKind::M, s, max_degree)?;
    let q_a = GradedQuotient::build(PresentationKind::A, s, max_degree)?;
    let q_ap = GradedQuotient::build(PresentationKind::APrime, s, max_degree)?;
    let left_nd = s.is_left_nondegenerate();
    let mut rep = IdentityReport {
        max_degree,
        ..Default::default()
    };
    for t in policy.tuples(s.n(), 3, max_degree) {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        let ids = r_m_identities(&q_m, a, b, c)?;
        rep.product.record(ids.product, &t);
        rep.rho_of_product.record(ids.rho_of_product, &t);
        rep.lambda_of_product.record(ids.lambda_of_product, &t);
        rep.braid.record(ids.braid, &t);

        let (na, nb) = (q_m.normal_form(a)?, q_m.normal_form(b)?);
        rep.lambda_well_defined
            .record(q_m.equal(&lambda_m(s, a, b), &lambda_m(s, &na, &nb))?, &t);
        rep.rho_well_defined
            .record(q_m.equal(&rho_m(s, b, a), &rho_m(s, &nb, &na))?, &t);

        let ab = a.concat(b);
        rep.pi_cocycle.record(
            q_a.equal(&pi(s, &ab), &pi(s, a).concat(&lambda_prime(s, a, &pi(s, b))))?,
            &t,
        );
        rep.pi_prime_cocycle.record(
            q_ap.equal(&pi_prime(s, &ab), &rho_prime(s, b, &pi_prime(s, a)).concat(&pi_prime(s, b)))?,
            &t,
        );
        rep.pi_well_defined.record(q_a.equal(&pi(s, &ab), &pi(s, &q_m.normal_form(&ab)?))?, &t);
        rep.pi_prime_well_defined
            .record(q_ap.equal(&pi_prime(s, &ab), &pi_prime(s, &q_m.normal_form(&ab)?))?, &t);

        // a acts, b is read in A
        let nb_a = q_a.normal_form(b)?;
        rep.lambda_prime_well_defined.record(
            q_a.equal(&lambda_prime(s, a, b), &lambda_prime(s, &na, &nb_a))?,
            &t,
        );
        if left_nd {
            let inv = sigma_composite(s, a).inverse().expect("left non-degenerate");
            let pre = apply_letterwise(&inv, b);
            let ok = q_a.equal(&lambda_prime(s, a, &pre), b)?
                && q_a.equal(&pre, &apply_letterwise(&inv, &nb_a))?;
            rep.lambda_prime_inverse.record(ok, &t);
        }

        let fa = f_semidirect(&q_a, a)?;
        let fb = f_semidirect(&q_a, b)?;
        rep.semidirect_homomorphism
            .record(f_semidirect(&q_a, &ab)? == fa.mul(&fb, &q_a)?, &t);
    }
    Ok(rep)
}
