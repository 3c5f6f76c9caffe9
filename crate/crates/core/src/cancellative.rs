//! The left cancellative congruence `η` on `(M, +)`, computed inside a finite
//! window of degrees, and the structures induced on the quotient `M̄`.
//!
//! `(M, +)` is handled in its additive coordinates: for a left non-degenerate
//! solution `π` identifies it with `A(X, r)`, so `η` is stored as a coarsening
//! of the A-class partition at every degree. All results are lower
//! approximations of the true `η`: pairs merged here are merged in `M̄`, but a
//! window never certifies that nothing else merges.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::actions::{lambda_prime, pi, pi_inverse, sigma_composite, IdentityTally, SamplePolicy};
use crate::error::{Error, Result};
use crate::solution::FiniteSolution;
use crate::words::{GradedQuotient, PresentationKind, Word};

pub const DEFAULT_MAX_SWEEPS: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MergeReason {
    /// `c + a` and `c + b` were already identified.
    Cancel { witness: Word },
    /// `z + a` and `z + b` for an earlier merged pair `(a, b)`.
    LeftAdd { generator: usize },
    /// `a + z` and `b + z` for an earlier merged pair `(a, b)`.
    RightAdd { generator: usize },
}

/// One union performed while saturating the window; `a` and `b` are the
/// canonical A-words of the two classes joined.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MergeEvent {
    pub sweep: usize,
    pub degree: usize,
    pub a: Word,
    pub b: Word,
    pub reason: MergeReason,
}

/// `η` restricted to degrees `≤ max_degree`, saturated using cancellation
/// witnesses of degree `≤ witness_bound`.
pub struct EtaWindow {
    q_a: GradedQuotient,
    witness_bound: usize,
    max_sweeps: usize,
    sweeps: usize,
    stable_within_window: bool,
    /// per degree, A-class id -> η-class id (ordered by least member)
    eta_of: Vec<Vec<u32>>,
    /// per degree, η-class id -> least A-class id in it
    eta_rep: Vec<Vec<u32>>,
    merges: Vec<MergeEvent>,
}

impl std::fmt::Debug for EtaWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EtaWindow")
            .field("max_degree", &self.max_degree())
            .field("witness_bound", &self.witness_bound)
            .field("sweeps", &self.sweeps)
            .field("stable", &self.stable_within_window)
            .field("growth", &self.growth())
            .finish()
    }
}

pub fn eta_window(s: &FiniteSolution, max_degree: usize, witness_bound: usize) -> Result<EtaWindow> {
    EtaWindow::build(s, max_degree, witness_bound, DEFAULT_MAX_SWEEPS)
}

impl EtaWindow {
    pub fn build(s: &FiniteSolution, max_degree: usize, witness_bound: usize, max_sweeps: usize) -> Result<Self> {
        s.require_left_nondegenerate()?;
        let q_a = GradedQuotient::build(PresentationKind::A, s, max_degree)?;
        let n = s.n();
        let counts: Vec<usize> = q_a.growth();
        let mut uf: Vec<UnionFind<u32>> = counts.iter().map(|&c| UnionFind::new(c)).collect();
        let mut merges = Vec::new();
        let mut sweeps = 0;
        let mut stable = false;

        while sweeps < max_sweeps {
            let mut changed = false;

            for k in 1..=witness_bound.min(max_degree) {
                for c in 0..counts[k] {
                    for d in 1..=max_degree - k {
                        let mut first: HashMap<u32, usize> = HashMap::new();
                        for a in 0..counts[d] {
                            let key = uf[k + d].find(q_a.concat_class(k, c, d, a) as u32);
                            match first.get(&key) {
                                Some(&a0) => {
                                    if uf[d].union(a0 as u32, a as u32) {
                                        changed = true;
                                        merges.push(MergeEvent {
                                            sweep: sweeps,
                                            degree: d,
                                            a: q_a.rep(d, a0),
                                            b: q_a.rep(d, a),
                                            reason: MergeReason::Cancel { witness: q_a.rep(k, c) },
                                        });
                                    }
                                }
                                None => {
                                    first.insert(key, a);
                                }
                            }
                        }
                    }
                }
            }

            for d in 1..max_degree {
                for a in 0..counts[d] {
                    let root = uf[d].find(a as u32) as usize;
                    if root == a {
                        continue;
                    }
                    for z in 0..n {
                        let (u, v) = (q_a.concat_class(1, z, d, a), q_a.concat_class(1, z, d, root));
                        if uf[d + 1].union(u as u32, v as u32) {
                            changed = true;
                            merges.push(MergeEvent {
                                sweep: sweeps,
                                degree: d + 1,
                                a: q_a.rep(d + 1, u),
                                b: q_a.rep(d + 1, v),
                                reason: MergeReason::LeftAdd { generator: z },
                            });
                        }
                        let (u, v) = (q_a.concat_class(d, a, 1, z), q_a.concat_class(d, root, 1, z));
                        if uf[d + 1].union(u as u32, v as u32) {
                            changed = true;
                            merges.push(MergeEvent {
                                sweep: sweeps,
                                degree: d + 1,
                                a: q_a.rep(d + 1, u),
                                b: q_a.rep(d + 1, v),
                                reason: MergeReason::RightAdd { generator: z },
                            });
                        }
                    }
                }
            }

            sweeps += 1;
            if !changed {
                stable = true;
                break;
            }
        }

        let mut eta_of = Vec::with_capacity(counts.len());
        let mut eta_rep = Vec::with_capacity(counts.len());
        for (d, u) in uf.iter().enumerate() {
            let mut root_id: HashMap<u32, u32> = HashMap::new();
            let mut reps = Vec::new();
            let of: Vec<u32> = (0..counts[d] as u32)
                .map(|a| {
                    *root_id.entry(u.find(a)).or_insert_with(|| {
                        reps.push(a);
                        reps.len() as u32 - 1
                    })
                })
                .collect();
            eta_of.push(of);
            eta_rep.push(reps);
        }

        Ok(Self {
            q_a,
            witness_bound,
            max_sweeps,
            sweeps,
            stable_within_window: stable,
            eta_of,
            eta_rep,
            merges,
        })
    }

    pub fn solution(&self) -> &FiniteSolution {
        self.q_a.solution()
    }

    pub fn a_quotient(&self) -> &GradedQuotient {
        &self.q_a
    }

    pub fn max_degree(&self) -> usize {
        self.q_a.max_degree()
    }

    pub fn witness_bound(&self) -> usize {
        self.witness_bound
    }

    pub fn max_sweeps(&self) -> usize {
        self.max_sweeps
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// The last sweep changed nothing.
    pub fn stable_within_window(&self) -> bool {
        self.stable_within_window
    }

    pub fn merges(&self) -> &[MergeEvent] {
        &self.merges
    }

    /// Number of η-classes per degree.
    pub fn growth(&self) -> Vec<usize> {
        self.eta_rep.iter().map(Vec::len).collect()
    }

    /// η-class of an A-class.
    pub fn eta_of_a_class(&self, degree: usize, a_class: usize) -> usize {
        self.eta_of[degree][a_class] as usize
    }

    /// Lists each η-class of `degree` that contains more than one A-class,
    /// by the canonical A-words of its members.
    pub fn merged_blocks(&self, degree: usize) -> Vec<Vec<Word>> {
        let mut blocks: Vec<Vec<Word>> = vec![Vec::new(); self.eta_rep[degree].len()];
        for (a, &e) in self.eta_of[degree].iter().enumerate() {
            blocks[e as usize].push(self.q_a.rep(degree, a));
        }
        blocks.retain(|b| b.len() > 1);
        blocks
    }

    /// Whether two A-words are η-related.
    pub fn related(&self, u: &Word, v: &Word) -> Result<bool> {
        if u.degree() != v.degree() {
            return Ok(false);
        }
        let (cu, cv) = (self.q_a.class_id(u)?, self.q_a.class_id(v)?);
        Ok(self.eta_of[u.degree()][cu] == self.eta_of[v.degree()][cv])
    }
}

/// An element of the truncated quotient `M̄`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct EtaClass {
    pub degree: usize,
    pub id: usize,
}

/// `M̄ = (M, +)/η` within the window, with `+`, `∘` and `λ̄`.
#[derive(Debug)]
pub struct QuotientMonoid {
    window: EtaWindow,
}

impl QuotientMonoid {
    pub fn new(window: EtaWindow) -> Self {
        Self { window }
    }

    pub fn window(&self) -> &EtaWindow {
        &self.window
    }

    pub fn solution(&self) -> &FiniteSolution {
        self.window.solution()
    }

    pub fn max_degree(&self) -> usize {
        self.window.max_degree()
    }

    pub fn class_count(&self, degree: usize) -> usize {
        self.window.eta_rep[degree].len()
    }

    pub fn classes(&self, degree: usize) -> impl Iterator<Item = EtaClass> {
        (0..self.class_count(degree)).map(move |id| EtaClass { degree, id })
    }

    fn check(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree() {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    /// Class of an A-word.
    pub fn class_of(&self, w: &Word) -> Result<EtaClass> {
        let a = self.window.q_a.class_id(w)?;
        Ok(EtaClass {
            degree: w.degree(),
            id: self.window.eta_of[w.degree()][a] as usize,
        })
    }

    /// Class of an M-word, through `π`.
    pub fn class_of_m(&self, w: &Word) -> Result<EtaClass> {
        self.class_of(&pi(self.solution(), w))
    }

    pub fn letter(&self, x: usize) -> Result<EtaClass> {
        self.class_of(&Word::letter(x))
    }

    /// Lex-least A-word of the class.
    pub fn rep(&self, c: EtaClass) -> Word {
        let a = self.window.eta_rep[c.degree][c.id] as usize;
        self.window.q_a.rep(c.degree, a)
    }

    /// The same element written as an M-word.
    pub fn rep_m(&self, c: EtaClass) -> Word {
        pi_inverse(self.solution(), &self.rep(c)).expect("window requires left non-degeneracy")
    }

    pub fn add(&self, a: EtaClass, b: EtaClass) -> Result<EtaClass> {
        self.check(a.degree + b.degree)?;
        self.class_of(&self.rep(a).concat(&self.rep(b)))
    }

    /// `λ̄_a(b)`
    pub fn lambda_bar(&self, a: EtaClass, b: EtaClass) -> Result<EtaClass> {
        let t = sigma_composite(self.solution(), &self.rep_m(a));
        self.class_of(&Word::new(self.rep(b).letters().iter().map(|&y| t.apply(y)).collect()))
    }

    /// `λ̄_a⁻¹(b)`
    pub fn lambda_bar_inv(&self, a: EtaClass, b: EtaClass) -> Result<EtaClass> {
        let t = sigma_composite(self.solution(), &self.rep_m(a))
            .inverse()
            .expect("window requires left non-degeneracy");
        self.class_of(&Word::new(self.rep(b).letters().iter().map(|&y| t.apply(y)).collect()))
    }

    /// `a ∘ b = a + λ̄_a(b)`
    pub fn circ(&self, a: EtaClass, b: EtaClass) -> Result<EtaClass> {
        let l = self.lambda_bar(a, b)?;
        self.add(a, l)
    }
}

/// `c + a = c + b ⇒ a = b` for every triple whose degrees fit in the window,
/// checked independently of the saturation loop, and the loop reached its
/// fixpoint.
pub fn is_left_cancellative_within(qm: &QuotientMonoid) -> bool {
    qm.window.stable_within_window && cancellation_violation(qm).is_none()
}

/// First `(c, a, b)` with `c + a = c + b` but `a ≠ b`, if any.
pub fn cancellation_violation(qm: &QuotientMonoid) -> Option<(EtaClass, EtaClass, EtaClass)> {
    let dmax = qm.max_degree();
    for k in 1..=dmax {
        for c in qm.classes(k) {
            for d in 1..=dmax - k {
                let mut seen: HashMap<EtaClass, EtaClass> = HashMap::new();
                for a in qm.classes(d) {
                    let sum = qm.add(c, a).expect("degrees fit");
                    if let Some(&prev) = seen.get(&sum) {
                        return Some((c, prev, a));
                    }
                    seen.insert(sum, a);
                }
            }
        }
    }
    None
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct CongruenceReport {
    /// A-classes compared with the least member of their η-class.
    pub pairs_checked: usize,
    /// Merged pairs whose `σ`-composites differ.
    pub lambda_prime_mismatches: usize,
    /// Failures of `λ'_z` or `λ'_z⁻¹` to respect η.
    pub action_failures: usize,
    /// Failures of `z∘a η z∘b` or `a∘z η b∘z`.
    pub circ_failures: usize,
}

impl CongruenceReport {
    pub fn ok(&self) -> bool {
        self.lambda_prime_mismatches == 0 && self.action_failures == 0 && self.circ_failures == 0
    }
}

/// Checks that η is `λ'`-stable and a congruence for `∘` inside the window.
pub fn congruence_checks(ew: &EtaWindow) -> CongruenceReport {
    let s = ew.solution();
    let q = &ew.q_a;
    let n = s.n();
    let mut rep = CongruenceReport::default();
    let inv = |w: &Word| pi_inverse(s, w).expect("left non-degenerate");
    let circ = |a: &Word, b: &Word| -> Word { a.concat(&lambda_prime(s, &inv(a), b)) };
    let apply = |t: &crate::Transformation, w: &Word| Word::new(w.letters().iter().map(|&y| t.apply(y)).collect());
    for d in 1..=ew.max_degree() {
        for a in 0..q.class_count(d) {
            let root = ew.eta_rep[d][ew.eta_of[d][a] as usize] as usize;
            if root == a {
                continue;
            }
            rep.pairs_checked += 1;
            let (u, v) = (q.rep(d, a), q.rep(d, root));
            if sigma_composite(s, &inv(&u)) != sigma_composite(s, &inv(&v)) {
                rep.lambda_prime_mismatches += 1;
            }
            for z in 0..n {
                let t = s.sigma_map(z);
                let t_inv = t.inverse().expect("left non-degenerate");
                let related = |x: &Word, y: &Word| ew.related(x, y).expect("in window");
                if !related(&apply(&t, &u), &apply(&t, &v)) || !related(&apply(&t_inv, &u), &apply(&t_inv, &v)) {
                    rep.action_failures += 1;
                }
                if d < ew.max_degree() {
                    let zw = Word::letter(z);
                    if !related(&circ(&zw, &u), &circ(&zw, &v)) || !related(&circ(&u, &zw), &circ(&v, &zw)) {
                        rep.circ_failures += 1;
                    }
                }
            }
        }
    }
    rep
}

/// The unique `c̄` of degree `deg(a)` with `b̄ + c̄ = ā + b̄`.
pub fn c_of(qm: &QuotientMonoid, a: EtaClass, b: EtaClass) -> Result<EtaClass> {
    let target = qm.add(a, b)?;
    let mut hits = Vec::new();
    for c in qm.classes(a.degree) {
        if qm.add(b, c)? == target {
            hits.push(c);
        }
    }
    match hits.len() {
        0 => Err(Error::NoDifference { degree: a.degree }),
        1 => Ok(hits[0]),
        count => Err(Error::AmbiguousDifference { count }),
    }
}

/// `r'(a, b) = (b, c(a, b))`
pub fn r_prime_bar(qm: &QuotientMonoid, a: EtaClass, b: EtaClass) -> Result<(EtaClass, EtaClass)> {
    Ok((b, c_of(qm, a, b)?))
}

/// `r̄(a, b) = (λ̄_a(b), λ̄⁻¹_{λ̄_a(b)}(c(a, λ̄_a(b))))`
pub fn r_bar(qm: &QuotientMonoid, a: EtaClass, b: EtaClass) -> Result<(EtaClass, EtaClass)> {
    let l = qm.lambda_bar(a, b)?;
    let c = c_of(qm, a, l)?;
    Ok((l, qm.lambda_bar_inv(l, c)?))
}

/// No two distinct generators are η-related within the window.
pub fn injective_solution(ew: &EtaWindow) -> bool {
    ew.max_degree() >= 1 && ew.growth()[1] == ew.solution().n()
}

/// `c` with `a + b = b + c` in `A`, by the induction on `deg(a) + deg(b)`.
pub fn normal_witness(s: &FiniteSolution, a: &[usize], b: &[usize]) -> Result<Vec<usize>> {
    s.require_left_nondegenerate()?;
    Ok(normal_rec(s, a, b))
}

fn normal_rec(s: &FiniteSolution, a: &[usize], b: &[usize]) -> Vec<usize> {
    match (a, b) {
        ([], _) => vec![],
        (_, []) => a.to_vec(),
        ([x], [y]) => {
            let pre = s.sigma_inverse(*x).expect("left non-degenerate").apply(*y);
            vec![s.sigma(*y, s.gamma(pre, *x))]
        }
        ([x], [y, rest @ ..]) => {
            let z = normal_rec(s, &[*x], &[*y]);
            normal_rec(s, &z, rest)
        }
        ([x, tail @ ..], _) => {
            let c1 = normal_rec(s, tail, b);
            let mut c2 = normal_rec(s, &[*x], b);
            c2.extend(c1);
            c2
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct SemiTrussReport {
    /// `a∘(b+c) = (a∘b) + λ'_a(c)`, evaluated through `M`.
    pub axiom: IdentityTally,
    /// `b + a = a + c` for the constructed `c`.
    pub normality: IdentityTally,
    /// `a + b ∈ M + a`, checked only when `r` is bijective.
    pub reverse_normality: Option<IdentityTally>,
}

impl SemiTrussReport {
    pub fn failures(&self) -> usize {
        self.axiom.failed + self.normality.failed + self.reverse_normality.as_ref().map_or(0, |t| t.failed)
    }
}

/// Semi-truss axiom and normality on sampled triples of A-words.
pub fn semi_truss_checks(qm: &QuotientMonoid, policy: &SamplePolicy) -> Result<SemiTrussReport> {
    let s = qm.solution();
    let q = &qm.window.q_a;
    let dmax = qm.max_degree();
    let bijective = s.properties().r_bijective;
    let mut rep = SemiTrussReport {
        reverse_normality: bijective.then(IdentityTally::default),
        ..Default::default()
    };
    for t in policy.tuples(s.n(), 3, dmax) {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        let (am, bm) = (pi_inverse(s, a)?, pi_inverse(s, b)?);
        let bc_m = pi_inverse(s, &b.concat(c))?;
        let lhs = pi(s, &am.concat(&bc_m));
        let rhs = pi(s, &am.concat(&bm)).concat(&lambda_prime(s, &am, c));
        rep.axiom.record(q.equal(&lhs, &rhs)?, &t);

        let cw = Word::new(normal_witness(s, b.letters(), a.letters())?);
        rep.normality.record(
            cw.degree() == b.degree() && q.equal(&b.concat(a), &a.concat(&cw))?,
            &t,
        );

        if let Some(tally) = rep.reverse_normality.as_mut() {
            let target = q.class_id(&a.concat(b))?;
            let d = b.degree();
            let found = (0..q.class_count(d)).any(|c| q.concat_class(d, c, a.degree(), q.class_id_unchecked(a.letters())) == target);
            tally.record(found, &t);
        }
    }
    Ok(rep)
}

/// Braid identity and left non-degeneracy of `r̄` inside the window.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct RBarReport {
    pub braid: IdentityTally,
    /// Triples where a difference `c(a, b)` could not be decided in the window.
    pub undecided: usize,
    /// Per degree, `b̄ ↦ λ̄_ā(b̄)` is a bijection for every `ā` of degree 1.
    pub lambda_bijective: Vec<bool>,
    /// `r̄` on generator classes agrees with `r`; `None` when `X` does not embed.
    pub restriction_matches_r: Option<bool>,
}

pub fn r_bar_checks(qm: &QuotientMonoid, policy: &SamplePolicy) -> Result<RBarReport> {
    let s = qm.solution();
    let n = s.n();
    let dmax = qm.max_degree();
    let mut rep = RBarReport::default();

    for t in policy.tuples(n, 3, dmax) {
        let [a, b, c] = [qm.class_of(&t[0])?, qm.class_of(&t[1])?, qm.class_of(&t[2])?];
        let run = || -> Result<bool> {
            let (u1, v1) = r_bar(qm, a, b)?;
            let (v2, w2) = r_bar(qm, v1, c)?;
            let (u3, v3) = r_bar(qm, u1, v2)?;
            let (b1, c1) = r_bar(qm, b, c)?;
            let (a2, b2) = r_bar(qm, a, b1)?;
            let (b3, c3) = r_bar(qm, b2, c1)?;
            Ok((u3, v3, w2) == (a2, b3, c3))
        };
        match run() {
            Ok(ok) => rep.braid.record(ok, &t),
            Err(Error::NoDifference { .. } | Error::AmbiguousDifference { .. }) => rep.undecided += 1,
            Err(e) => return Err(e),
        }
    }

    for d in 0..=dmax {
        let ok = (0..n).all(|x| {
            let a = qm.letter(x).expect("letter");
            let mut hit = vec![false; qm.class_count(d)];
            qm.classes(d).all(|b| {
                let l = qm.lambda_bar(a, b).expect("in window");
                !std::mem::replace(&mut hit[l.id], true)
            })
        });
        rep.lambda_bijective.push(ok);
    }

    if injective_solution(&qm.window) && dmax >= 2 {
        let mut ok = true;
        for x in 0..n {
            for y in 0..n {
                let (u, v) = s.r(x, y);
                let got = r_bar(qm, qm.letter(x)?, qm.letter(y)?);
                ok &= matches!(got, Ok(p) if p == (qm.letter(u)?, qm.letter(v)?));
            }
        }
        rep.restriction_matches_r = Some(ok);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::fixtures::{self, sym3_inv, sym3_mul};

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn flip_eta_is_trivial() {
        let ew = eta_window(&fixtures::flip(3), 4, 3).unwrap();
        assert!(ew.merges().is_empty());
        assert!(ew.stable_within_window());
        assert_eq!(ew.growth(), vec![1, 3, 6, 10, 15]);
        assert!(injective_solution(&ew));
        assert!(congruence_checks(&ew).ok());
        let qm = QuotientMonoid::new(ew);
        assert!(is_left_cancellative_within(&qm));
        let (a, b) = (qm.class_of(&w(&[0, 2])).unwrap(), qm.class_of(&w(&[1])).unwrap());
        assert_eq!(c_of(&qm, a, b).unwrap(), a);
        assert_eq!(r_prime_bar(&qm, a, b).unwrap(), (b, a));
        assert_eq!(r_bar(&qm, a, b).unwrap(), (b, a));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        assert_eq!(eta_window(&fixtures::constant(2), 3, 1).unwrap_err(), Error::NotLeftNondegenerate(0));
        assert!(eta_window(&fixtures::skew_lattice(), 3, 1).is_err());
        assert!(eta_window(&fixtures::nat_trunc(4), 3, 1).is_err());
    }

    #[test]
    fn sym3_window_merges_the_cubes() {
        let ew = eta_window(&fixtures::sym3_conj(), 4, 1).unwrap();
        assert!(ew.related(&w(&[4, 4, 4]), &w(&[5, 5, 5])).unwrap());
        assert!(ew.stable_within_window());
        assert!(injective_solution(&ew));
        let cr = congruence_checks(&ew);
        assert!(cr.ok(), "{cr:?}");
        assert!(cr.pairs_checked > 0);
        let cube = ew
            .merges()
            .iter()
            .find(|m| m.degree == 3 && ew.related(&m.a, &w(&[4, 4, 4])).unwrap())
            .unwrap();
        assert!(matches!(cube.reason, MergeReason::Cancel { .. }));
        let qm = QuotientMonoid::new(ew);
        assert!(is_left_cancellative_within(&qm));
    }

    #[test]
    fn sym3_cube_composites_agree() {
        let s = fixtures::sym3_conj();
        let t4 = sigma_composite(&s, &w(&[4, 4, 4]));
        assert!(t4.is_identity());
        assert_eq!(t4, sigma_composite(&s, &w(&[5, 5, 5])));
    }

    #[test]
    fn sym3_differences_and_r_bar() {
        let s = fixtures::sym3_conj();
        let qm = QuotientMonoid::new(eta_window(&s, 4, 3).unwrap());
        for x in 0..6 {
            for z in 0..6 {
                let zxz = sym3_mul(sym3_mul(z, x), sym3_inv(z));
                let (a, b) = (qm.letter(x).unwrap(), qm.letter(z).unwrap());
                assert_eq!(c_of(&qm, a, b).unwrap(), qm.letter(zxz).unwrap());
                assert_eq!(r_prime_bar(&qm, a, b).unwrap(), (b, qm.letter(zxz).unwrap()));
                let (u, v) = s.r(x, z);
                assert_eq!(r_bar(&qm, a, b).unwrap(), (qm.letter(u).unwrap(), qm.letter(v).unwrap()));
            }
        }
        let e = qm.class_of(&Word::empty()).unwrap();
        let b = qm.class_of(&w(&[2, 3])).unwrap();
        assert_eq!(r_prime_bar(&qm, e, b).unwrap(), (b, e));
    }

    #[test]
    fn c_of_reports_degree_overflow() {
        let qm = QuotientMonoid::new(eta_window(&fixtures::flip(2), 2, 1).unwrap());
        let a = qm.class_of(&w(&[0, 1])).unwrap();
        let b = qm.class_of(&w(&[1])).unwrap();
        assert_eq!(c_of(&qm, a, b).unwrap_err(), Error::DegreeOutOfRange { degree: 3, max: 2 });
    }

    #[test]
    fn monotone_in_window() {
        let s = fixtures::sym3_conj();
        let small = eta_window(&s, 4, 1).unwrap();
        let large = eta_window(&s, 4, 3).unwrap();
        for d in 0..=4 {
            for block in small.merged_blocks(d) {
                for pair in block.windows(2) {
                    assert!(large.related(&pair[0], &pair[1]).unwrap());
                }
            }
        }
    }

    #[test]
    fn quotient_operations() {
        let s = fixtures::sym3_conj();
        let qm = QuotientMonoid::new(eta_window(&s, 4, 1).unwrap());
        let a = qm.letter(1).unwrap();
        let b = qm.class_of(&w(&[4, 4, 4])).unwrap();
        assert_eq!(qm.lambda_bar(a, b).unwrap(), qm.class_of(&w(&[5, 5, 5])).unwrap());
        assert_eq!(qm.lambda_bar_inv(a, qm.lambda_bar(a, b).unwrap()).unwrap(), b);
        // a∘b as M-words corresponds to a + λ̄_a(b)
        let am = w(&[1]);
        let bm = pi_inverse(&s, &w(&[4, 4, 4])).unwrap();
        assert_eq!(qm.circ(a, b).unwrap(), qm.class_of_m(&am.concat(&bm)).unwrap());
        assert_eq!(qm.rep(qm.class_of(&w(&[5, 5, 5])).unwrap()), w(&[4, 4, 4]));
    }

    #[test]
    fn normal_witness_examples() {
        let s = fixtures::sym3_conj();
        // x + z = z + zxz⁻¹ on generators
        assert_eq!(normal_witness(&s, &[1], &[4]).unwrap(), vec![sym3_mul(sym3_mul(4, 1), sym3_inv(4))]);
        assert_eq!(normal_witness(&s, &[], &[4]).unwrap(), Vec::<usize>::new());
        assert_eq!(normal_witness(&s, &[2, 3], &[]).unwrap(), vec![2, 3]);
        assert!(normal_witness(&fixtures::skew_lattice(), &[0], &[1]).is_err());
    }

    #[test]
    fn semi_truss_and_r_bar_on_sym3() {
        let s = fixtures::sym3_conj();
        let qm = QuotientMonoid::new(eta_window(&s, 4, 3).unwrap());
        let st = semi_truss_checks(&qm, &SamplePolicy::random_only(200, 2)).unwrap();
        assert_eq!(st.failures(), 0, "{st:?}");
        assert!(st.reverse_normality.is_some());
        let rb = r_bar_checks(&qm, &SamplePolicy::random_only(100, 2)).unwrap();
        assert_eq!(rb.braid.failed, 0, "{rb:?}");
        assert!(rb.lambda_bijective.iter().all(|&b| b));
        assert_eq!(rb.restriction_matches_r, Some(true));
    }

    #[test]
    fn semi_truss_axiom_on_generator_triples() {
        let s = fixtures::sym3_conj();
        let qm = QuotientMonoid::new(eta_window(&s, 3, 2).unwrap());
        let q = qm.window().a_quotient();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    let (am, bm) = (w(&[a]), w(&[b]));
                    let bc = pi_inverse(&s, &w(&[b, c])).unwrap();
                    let lhs = pi(&s, &am.concat(&bc));
                    let rhs = pi(&s, &am.concat(&bm)).concat(&lambda_prime(&s, &am, &w(&[c])));
                    assert!(q.equal(&lhs, &rhs).unwrap());
                }
            }
        }
    }
}
