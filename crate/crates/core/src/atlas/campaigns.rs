//! Verification campaigns over exhaustive candidate spaces.
//!
//! Each campaign folds per-candidate reports in parallel and merges them by
//! summation; violations are sorted afterwards so the result does not depend
//! on scheduling.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::bijectivity_report;
use crate::atlas::enumerate::{enumerate_nondegenerate, enumerate_nondegenerate_pruned, CandidateSpace};
use crate::atlas::fixtures;
use crate::error::{Error, Result};
use crate::solution::{braid_holds, FiniteSolution};
use crate::words::{growth, relations, PresentationKind};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Violation {
    /// Position in the enumeration, or `None` for injected fixtures.
    pub index: Option<u64>,
    pub reason: String,
    pub sigma: Vec<Vec<usize>>,
    pub gamma: Vec<Vec<usize>>,
}

impl Violation {
    fn new(index: Option<u64>, s: &FiniteSolution, reason: impl Into<String>) -> Self {
        Self {
            index,
            reason: reason.into(),
            sigma: s.sigma_rows(),
            gamma: s.gamma_rows(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub n: usize,
    pub max_degree: Option<usize>,
    pub mode: String,
    pub candidates: u64,
    pub solutions: u64,
    pub tallies: BTreeMap<String, u64>,
    pub classifications: BTreeMap<String, u64>,
    /// Classification of named fixtures of matching size.
    pub fixtures: BTreeMap<String, String>,
    pub violations: Vec<Violation>,
    pub elapsed_ms: Option<u64>,
}

impl CampaignReport {
    fn new(campaign: &str, n: usize, max_degree: Option<usize>, mode: &str) -> Self {
        Self {
            campaign: campaign.into(),
            n,
            max_degree,
            mode: mode.into(),
            ..Default::default()
        }
    }

    fn tally(&mut self, key: &str) {
        *self.tallies.entry(key.into()).or_default() += 1;
    }

    fn classify(&mut self, key: String) {
        *self.classifications.entry(key).or_default() += 1;
    }

    fn absorb(mut self, other: CampaignReport) -> Self {
        self.candidates += other.candidates;
        self.solutions += other.solutions;
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        for (k, v) in other.classifications {
            *self.classifications.entry(k).or_default() += v;
        }
        self.fixtures.extend(other.fixtures);
        self.violations.extend(other.violations);
        self
    }

    fn finish(mut self, start: Instant) -> Self {
        self.violations.sort();
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally_of(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }
}

fn fold_par<T, F>(items: &[T], proto: &CampaignReport, f: F) -> CampaignReport
where
    T: Sync,
    F: Fn(&mut CampaignReport, u64, &T) + Sync,
{
    let blank = || CampaignReport::new(&proto.campaign, proto.n, proto.max_degree, &proto.mode);
    items
        .par_iter()
        .enumerate()
        .fold(blank, |mut acc, (i, item)| {
            f(&mut acc, i as u64, item);
            acc
        })
        .reduce(blank, CampaignReport::absorb)
}

fn nondegenerate_family(n: usize) -> Result<(Vec<FiniteSolution>, &'static str)> {
    match n {
        1..=3 => Ok((enumerate_nondegenerate(n)?, "exhaustive")),
        4 => Ok((enumerate_nondegenerate_pruned(4)?, "pruned")),
        0 => Err(Error::EmptySet),
        _ => Err(Error::UnsupportedSize {
            n,
            supported: "1 <= n <= 3 (n = 4 pruned)",
        }),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every irretractable non-degenerate solution is bijective, has
/// `h(x) = σ_x⁻¹(x)` inverted by `x ↦ γ_x⁻¹(x)` and unique fixed pairs, and
/// its structure monoid has at least `C(n, 2)` defining relations (exactly
/// that many when involutive).
pub fn campaign_main_irr(n: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let (sols, mode) = nondegenerate_family(n)?;
    let candidates = match mode {
        "exhaustive" => CandidateSpace::nondegenerate(n)?.len(),
        _ => sols.len() as u64,
    };
    let proto = CampaignReport::new("main_irr", n, None, mode);
    let pairs = binomial(n as u64, 2) as usize;
    let mut rep = fold_par(&sols, &proto, |acc, i, s| {
        acc.solutions += 1;
        let p = s.properties();
        if p.involutive {
            acc.tally("involutive");
        }
        if p.r_bijective {
            acc.tally("r_bijective");
        }
        if !p.irretractable_sigma {
            return;
        }
        acc.tally("irretractable");
        if !p.r_bijective {
            acc.violations.push(Violation::new(Some(i), s, "irretractable but r is not bijective"));
        }
        let h = s.h_map().expect("non-degenerate");
        let g = s.gamma_diagonal_inverse().expect("non-degenerate");
        match h.inverse() {
            Some(inv) if inv == g => acc.tally("h_inverted_by_gamma_diagonal"),
            Some(_) => acc.violations.push(Violation::new(Some(i), s, "h^-1 differs from x -> gamma_x^-1(x)")),
            None => acc.violations.push(Violation::new(Some(i), s, "h is not bijective")),
        }
        if s.fixed_pair_report().unique {
            acc.tally("fixed_pairs_unique");
        } else {
            acc.violations.push(Violation::new(Some(i), s, "fixed pairs are not unique"));
        }
        let rels = relations(PresentationKind::M, s).len();
        if rels < pairs || (p.involutive && rels != pairs) {
            acc.violations.push(Violation::new(Some(i), s, format!("{rels} defining relations")));
        }
    });
    rep.candidates = candidates;
    Ok(rep.finish(start))
}

/// The braid relation against Rump's three conditions, over all candidates
/// with bijective `γ_y`. Also checks that bijectivity of every `z ↦ x:z`
/// makes `r` bijective.
pub fn campaign_rump(n: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let space = CandidateSpace::gamma_bijective(n)?;
    let blank = || CampaignReport::new("rump", n, None, "exhaustive");
    let rep = (0..space.len())
        .into_par_iter()
        .fold(blank, |mut acc, i| {
            let (mut sigma, mut gamma) = (vec![0; n * n], vec![0; n * n]);
            space.fill(i, &mut sigma, &mut gamma);
            acc.candidates += 1;
            let braid = braid_holds(n, &sigma, &gamma);
            let s = FiniteSolution::from_flat(n, sigma, gamma);
            let (r1, r2, r3) = s.rump_conditions().expect("gamma bijective");
            if braid {
                acc.solutions += 1;
            }
            if braid != (r1 && r2 && r3) {
                acc.violations.push(Violation::new(Some(i), &s, format!("braid {braid} but R1 {r1} R2 {r2} R3 {r3}")));
            }
            if braid && colon_bijective(&s) {
                acc.tally("colon_bijective");
                if !s.properties().r_bijective {
                    acc.violations.push(Violation::new(Some(i), &s, "z -> x:z bijective but r is not"));
                }
            }
            acc
        })
        .reduce(blank, CampaignReport::absorb);
    Ok(rep.finish(start))
}

/// Every `z ↦ x:z = σ_{γ_z⁻¹(x)}(z)` is a bijection.
fn colon_bijective(s: &FiniteSolution) -> bool {
    let n = s.n();
    let inv: Vec<_> = (0..n).map(|z| s.gamma_inverse(z).expect("gamma bijective")).collect();
    (0..n).all(|x| {
        let mut hit = vec![false; n];
        (0..n).all(|z| !std::mem::replace(&mut hit[s.sigma(inv[z].apply(x), z)], true))
    })
}

/// Number of random candidates drawn from the full map space at `n = 3`.
pub const COCYCLE_RANDOM_SAMPLES: usize = 10_000;

/// Left non-degeneracy against bijectivity of `π` through degree
/// `max_degree`, and the mirror statement for `π'`.
///
/// At `n ≤ 2` every pair of maps is tried; at `n = 3` the non-degenerate
/// family is exhaustive and the rest of the map space is sampled with a
/// seeded generator. Named fixtures of size `n` are always included.
pub fn campaign_cocycle(n: usize, max_degree: usize, seed: u64) -> Result<CampaignReport> {
    let start = Instant::now();
    let (mode, candidates, mut sols): (&str, u64, Vec<FiniteSolution>) = match n {
        1 | 2 => {
            let space = CandidateSpace::all_map_pairs(n)?;
            (
                "exhaustive",
                space.len(),
                space.iter().filter(FiniteSolution::check_braid_direct).collect(),
            )
        }
        3 => {
            let family = enumerate_nondegenerate(3)?;
            let space = CandidateSpace::all_map_pairs(3)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut sols = family;
            let mut sampled = 0u64;
            for _ in 0..COCYCLE_RANDOM_SAMPLES {
                let s = space.candidate(rng.gen_range(0..space.len()));
                sampled += 1;
                if s.check_braid_direct() {
                    sols.push(s);
                }
            }
            ("nondegenerate exhaustive + sampled", CandidateSpace::nondegenerate(3)?.len() + sampled, sols)
        }
        0 => return Err(Error::EmptySet),
        _ => {
            return Err(Error::UnsupportedSize {
                n,
                supported: "1 <= n <= 3",
            })
        }
    };
    let named: Vec<_> = fixtures::builtin_examples()
        .into_iter()
        .filter(|f| f.solution.n() == n)
        .collect();
    let first_named = sols.len();
    sols.extend(named.iter().map(|f| f.solution.clone()));

    let proto = CampaignReport::new("cocycle", n, Some(max_degree), mode);
    let evaluated: Vec<Result<(CampaignReport, String)>> = sols
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut acc = CampaignReport::new(&proto.campaign, n, proto.max_degree, mode);
            let index = (i < first_named).then_some(i as u64);
            let r = bijectivity_report(s, max_degree)?;
            acc.solutions += 1;
            let class = format!("pi {}; pi' {}", r.pi.classification(), r.pi_prime.classification());
            acc.classify(class.clone());
            if r.left_nondegenerate() {
                acc.tally("left_nondegenerate");
            }
            if r.right_nondegenerate() {
                acc.tally("right_nondegenerate");
            }
            if r.left_nondegenerate() != r.pi.bijective_all() {
                acc.violations.push(Violation::new(index, s, "left non-degeneracy differs from bijectivity of pi"));
            }
            if r.right_nondegenerate() != r.pi_prime.bijective_all() {
                acc.violations.push(Violation::new(index, s, "right non-degeneracy differs from bijectivity of pi'"));
            }
            for issue in &r.inconsistencies {
                acc.violations.push(Violation::new(index, s, issue.clone()));
            }
            Ok((acc, class))
        })
        .collect();
    let mut rep = proto;
    for (i, item) in evaluated.into_iter().enumerate() {
        let (acc, class) = item?;
        if i >= first_named {
            rep.fixtures.insert(named[i - first_named].name.to_string(), class);
            // fixtures are reported but not counted twice
            rep.violations.extend(acc.violations);
        } else {
            rep = rep.absorb(acc);
        }
    }
    rep.candidates = candidates;
    Ok(rep.finish(start))
}

/// Growth of `A` is `C(n+d-1, d)` for involutive non-degenerate solutions, and
/// growth of `M` equals growth of `A` for all of them.
pub fn campaign_growth(n: usize, max_degree: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let (sols, mode) = nondegenerate_family(n)?;
    let proto = CampaignReport::new("growth", n, Some(max_degree), mode);
    let free: Vec<usize> = (0..=max_degree as u64)
        .map(|d| binomial(n as u64 + d - 1, d) as usize)
        .collect();
    let results: Vec<Result<CampaignReport>> = sols
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut acc = CampaignReport::new(&proto.campaign, n, proto.max_degree, mode);
            acc.solutions += 1;
            let ga = growth(PresentationKind::A, s, max_degree)?;
            let gm = growth(PresentationKind::M, s, max_degree)?;
            if s.properties().involutive {
                acc.tally("involutive");
                if ga != free {
                    acc.violations.push(Violation::new(Some(i as u64), s, format!("A growth {ga:?}, expected {free:?}")));
                }
            }
            if gm != ga {
                acc.violations.push(Violation::new(Some(i as u64), s, format!("M growth {gm:?} but A growth {ga:?}")));
            }
            acc.classify(format!("{ga:?}"));
            Ok(acc)
        })
        .collect();
    let mut rep = proto;
    for r in results {
        rep = rep.absorb(r?);
    }
    rep.candidates = sols.len() as u64;
    Ok(rep.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_irr_small() {
        let r1 = campaign_main_irr(1).unwrap();
        assert!(r1.passed());
        assert_eq!(r1.solutions, 1);
        let r2 = campaign_main_irr(2).unwrap();
        assert!(r2.passed(), "{:?}", r2.violations);
        assert_eq!((r2.candidates, r2.solutions), (16, 4));
    }

    #[test]
    fn main_irr_three_points() {
        let r = campaign_main_irr(3).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!((r.candidates, r.solutions), (46656, 66));
        assert_eq!(r.tally_of("irretractable"), 6);
        assert_eq!(r.tally_of("h_inverted_by_gamma_diagonal"), 6);
    }

    #[test]
    fn rump_small() {
        let r = campaign_rump(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.candidates, 1);
        let r = campaign_rump(2).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!((r.candidates, r.solutions), (64, 14));
        assert!(matches!(campaign_rump(5), Err(Error::UnsupportedSize { n: 5, .. })));
    }

    #[test]
    fn cocycle_two_points() {
        let r = campaign_cocycle(2, 4, 0).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!((r.candidates, r.solutions), (256, 43));
        assert_eq!(r.fixtures["constant2"], "pi injective, not surjective; pi' bijective");
        assert_eq!(r.fixtures["constant_dual2"], "pi bijective; pi' injective, not surjective");
        assert_eq!(r.fixtures["flip2"], "pi bijective; pi' bijective");
    }

    #[test]
    fn growth_small() {
        let r = campaign_growth(2, 5).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.tally_of("involutive") > 0);
    }

    #[test]
    fn reports_are_reproducible() {
        let mut a = campaign_main_irr(3).unwrap();
        let mut b = campaign_main_irr(3).unwrap();
        a.elapsed_ms = None;
        b.elapsed_ms = None;
        assert_eq!(a, b);
    }
}
