//! Exhaustive candidate spaces on small sets.
//!
//! A space is the product of a list of allowed σ-rows and a list of allowed
//! γ-rows. Candidate `i` is decoded in mixed radix with the σ-table as the
//! outer loop and row 0 most significant, so every enumeration order is fixed.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solution::{braid_holds, FiniteSolution};

/// All self-maps of `{0, ..., n-1}`, in lexicographic order of their images.
pub fn all_maps(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|_| 0..n).multi_cartesian_product().collect()
}

/// All permutations of `{0, ..., n-1}`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

#[derive(Clone, Debug)]
pub struct CandidateSpace {
    n: usize,
    sigma_rows: Vec<Vec<usize>>,
    gamma_rows: Vec<Vec<usize>>,
}

fn require(n: usize, max: usize, supported: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > max {
        return Err(Error::UnsupportedSize { n, supported });
    }
    Ok(())
}

impl CandidateSpace {
    /// Every `σ_x` and `γ_y` a permutation.
    pub fn nondegenerate(n: usize) -> Result<Self> {
        require(n, 3, "1 <= n <= 3")?;
        Ok(Self {
            n,
            sigma_rows: all_permutations(n),
            gamma_rows: all_permutations(n),
        })
    }

    /// Arbitrary `σ`, every `γ_y` a permutation.
    pub fn gamma_bijective(n: usize) -> Result<Self> {
        require(n, 3, "1 <= n <= 3")?;
        Ok(Self {
            n,
            sigma_rows: all_maps(n),
            gamma_rows: all_permutations(n),
        })
    }

    /// Arbitrary `σ` and `γ`.
    pub fn all_map_pairs(n: usize) -> Result<Self> {
        require(n, 3, "1 <= n <= 3")?;
        Ok(Self {
            n,
            sigma_rows: all_maps(n),
            gamma_rows: all_maps(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn sigma_count(&self) -> u64 {
        (self.sigma_rows.len() as u64).pow(self.n as u32)
    }

    fn gamma_count(&self) -> u64 {
        (self.gamma_rows.len() as u64).pow(self.n as u32)
    }

    pub fn len(&self) -> u64 {
        self.sigma_count() * self.gamma_count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn decode(rows: &[Vec<usize>], n: usize, mut idx: u64, out: &mut [usize]) {
        let base = rows.len() as u64;
        for x in (0..n).rev() {
            let row = &rows[(idx % base) as usize];
            out[x * n..(x + 1) * n].copy_from_slice(row);
            idx /= base;
        }
    }

    /// Fills flat `σ` and `γ` tables for candidate `idx`.
    pub(crate) fn fill(&self, idx: u64, sigma: &mut [usize], gamma: &mut [usize]) {
        let g = self.gamma_count();
        Self::decode(&self.sigma_rows, self.n, idx / g, sigma);
        Self::decode(&self.gamma_rows, self.n, idx % g, gamma);
    }

    pub fn candidate(&self, idx: u64) -> FiniteSolution {
        let n = self.n;
        let (mut sigma, mut gamma) = (vec![0; n * n], vec![0; n * n]);
        self.fill(idx, &mut sigma, &mut gamma);
        FiniteSolution::from_flat(n, sigma, gamma)
    }

    pub fn iter(&self) -> impl Iterator<Item = FiniteSolution> + '_ {
        (0..self.len()).map(|i| self.candidate(i))
    }

    /// Braid-filtered candidates in enumeration order.
    pub fn solutions(&self) -> Vec<FiniteSolution> {
        let n = self.n;
        (0..self.len())
            .into_par_iter()
            .filter_map(|i| {
                let (mut sigma, mut gamma) = (vec![0; n * n], vec![0; n * n]);
                self.fill(i, &mut sigma, &mut gamma);
                braid_holds(n, &sigma, &gamma).then(|| FiniteSolution::from_flat(n, sigma, gamma))
            })
            .collect()
    }
}

/// All non-degenerate solutions on `n ≤ 3` points.
pub fn enumerate_nondegenerate(n: usize) -> Result<Vec<FiniteSolution>> {
    Ok(CandidateSpace::nondegenerate(n)?.solutions())
}

/// All candidates with arbitrary `σ` and bijective `γ_y`, not braid-filtered.
pub fn enumerate_gamma_bijective(n: usize) -> Result<CandidateSpace> {
    CandidateSpace::gamma_bijective(n)
}

/// Non-degenerate solutions on `n ≤ 4` points whose σ-table is the least in
/// its relabeling orbit. Every isomorphism class appears at least once.
///
/// For a fixed σ-family, the first component of the braid relation forces
/// `σ_{σ_x(y)} σ_{γ_y(x)} = σ_x σ_y`, which leaves few choices for each
/// `γ_y(x)`; the remaining γ-tables are searched by backtracking.
pub fn enumerate_nondegenerate_pruned(n: usize) -> Result<Vec<FiniteSolution>> {
    require(n, 4, "1 <= n <= 4")?;
    let perms = all_permutations(n);
    let relabelings = perms.clone();
    let families = (perms.len() as u64).pow(n as u32);
    let mut out: Vec<(u64, Vec<FiniteSolution>)> = (0..families)
        .into_par_iter()
        .filter_map(|idx| {
            let mut sigma = vec![0; n * n];
            CandidateSpace::decode(&perms, n, idx, &mut sigma);
            if !sigma_is_canonical(n, &sigma, &relabelings) {
                return None;
            }
            let found = solve_gamma(n, &sigma);
            (!found.is_empty()).then_some((idx, found))
        })
        .collect();
    out.sort_by_key(|(idx, _)| *idx);
    Ok(out.into_iter().flat_map(|(_, v)| v).collect())
}

fn sigma_is_canonical(n: usize, sigma: &[usize], relabelings: &[Vec<usize>]) -> bool {
    let mut other = vec![0; n * n];
    relabelings.iter().all(|p| {
        for x in 0..n {
            for y in 0..n {
                other[p[x] * n + p[y]] = p[sigma[x * n + y]];
            }
        }
        other.as_slice() >= sigma
    })
}

fn solve_gamma(n: usize, sigma: &[usize]) -> Vec<FiniteSolution> {
    let compose = |a: usize, b: usize| -> Vec<usize> { (0..n).map(|z| sigma[a * n + sigma[b * n + z]]).collect() };
    // allowed[y * n + x] = values permitted for γ_y(x)
    let mut allowed = vec![Vec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            let target = compose(x, y);
            let s = sigma[x * n + y];
            let opts: Vec<usize> = (0..n).filter(|&z| compose(s, z) == target).collect();
            if opts.is_empty() {
                return Vec::new();
            }
            allowed[y * n + x] = opts;
        }
    }
    let mut gamma = vec![0; n * n];
    let mut used = vec![false; n * n];
    let mut found = Vec::new();
    backtrack(n, sigma, &allowed, 0, &mut gamma, &mut used, &mut found);
    found
}

fn backtrack(
    n: usize,
    sigma: &[usize],
    allowed: &[Vec<usize>],
    pos: usize,
    gamma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<FiniteSolution>,
) {
    if pos == n * n {
        if braid_holds(n, sigma, gamma) {
            found.push(FiniteSolution::from_flat(n, sigma.to_vec(), gamma.clone()));
        }
        return;
    }
    let y = pos / n;
    for &v in &allowed[pos] {
        // γ_y must be injective
        if used[y * n + v] {
            continue;
        }
        used[y * n + v] = true;
        gamma[pos] = v;
        backtrack(n, sigma, allowed, pos + 1, gamma, used, found);
        used[y * n + v] = false;
    }
}
