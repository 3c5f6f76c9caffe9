//! Finite set-theoretic solution candidates and their pointwise predicates.
//!
//! A candidate on `X = {0, ..., n-1}` is stored as two `n × n` tables with the
//! actor-first convention `sigma[x][y] = σ_x(y)` and `gamma[x][y] = γ_x(y)`, so
//! that `r(x, y) = (σ_x(y), γ_y(x)) = (sigma[x][y], gamma[y][x])`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transform::Transformation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteSolution {
    n: usize,
    sigma: Vec<usize>,
    gamma: Vec<usize>,
}

impl FiniteSolution {
    /// Checks the tables and builds a candidate. The braid relation is not
    /// required; use [`FiniteSolution::check_braid_direct`] for that.
    pub fn validate(n: usize, sigma: &[Vec<usize>], gamma: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySet);
        }
        let sigma = flatten("sigma", n, sigma)?;
        let gamma = flatten("gamma", n, gamma)?;
        Ok(Self { n, sigma, gamma })
    }

    /// Builds a candidate from `σ_x(y) = sigma(x, y)` and `γ_y(x) = gamma(y, x)`.
    pub fn from_fn(
        n: usize,
        sigma: impl Fn(usize, usize) -> usize,
        gamma: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let s: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| sigma(x, y)).collect()).collect();
        let g: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| gamma(x, y)).collect()).collect();
        Self::validate(n, &s, &g)
    }

    /// Row-major flat tables; entries must already be in range.
    pub(crate) fn from_flat(n: usize, sigma: Vec<usize>, gamma: Vec<usize>) -> Self {
        debug_assert!(n > 0 && sigma.len() == n * n && gamma.len() == n * n);
        debug_assert!(sigma.iter().chain(&gamma).all(|&v| v < n));
        Self { n, sigma, gamma }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `σ_x(y)`
    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n + y]
    }

    /// `γ_x(y)`
    #[inline]
    pub fn gamma(&self, x: usize, y: usize) -> usize {
        self.gamma[x * self.n + y]
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.gamma(y, x))
    }

    pub fn sigma_map(&self, x: usize) -> Transformation {
        Transformation::from_image(self.sigma[x * self.n..(x + 1) * self.n].to_vec())
    }

    pub fn gamma_map(&self, x: usize) -> Transformation {
        Transformation::from_image(self.gamma[x * self.n..(x + 1) * self.n].to_vec())
    }

    pub fn sigma_rows(&self) -> Vec<Vec<usize>> {
        self.sigma.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn gamma_rows(&self) -> Vec<Vec<usize>> {
        self.gamma.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat_tables(&self) -> (&[usize], &[usize]) {
        (&self.sigma, &self.gamma)
    }

    fn row_is_bijective(table: &[usize], n: usize, x: usize) -> bool {
        row_missing_value(table, n, x).is_none()
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        (0..self.n).all(|x| Self::row_is_bijective(&self.sigma, self.n, x))
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        (0..self.n).all(|x| Self::row_is_bijective(&self.gamma, self.n, x))
    }

    pub fn require_left_nondegenerate(&self) -> Result<()> {
        match (0..self.n).find(|&x| !Self::row_is_bijective(&self.sigma, self.n, x)) {
            Some(x) => Err(Error::NotLeftNondegenerate(x)),
            None => Ok(()),
        }
    }

    pub fn sigma_inverse(&self, x: usize) -> Option<Transformation> {
        self.sigma_map(x).inverse()
    }

    pub fn gamma_inverse(&self, x: usize) -> Option<Transformation> {
        self.gamma_map(x).inverse()
    }

    /// The three component identities equivalent to the braid relation.
    pub fn ybe_conditions(&self) -> (bool, bool, bool) {
        (
            first_failing_triple(self.n, |x, y, z| ybe1_at(self, x, y, z)).is_none(),
            first_failing_triple(self.n, |x, y, z| ybe2_at(self, x, y, z)).is_none(),
            first_failing_triple(self.n, |x, y, z| ybe3_at(self, x, y, z)).is_none(),
        )
    }

    /// `(r × id)(id × r)(r × id) = (id × r)(r × id)(id × r)` on all of `X³`,
    /// evaluated by composing applications of `r`.
    pub fn check_braid_direct(&self) -> bool {
        braid_holds(self.n, &self.sigma, &self.gamma)
    }

    pub fn properties(&self) -> PropertyReport {
        let n = self.n;
        let triple = |c: Check, f: &dyn Fn(usize, usize, usize) -> bool| {
            first_failing_triple(n, f).map(|(x, y, z)| Counterexample::new(c, vec![x, y, z]))
        };
        let failures: Vec<Option<Counterexample>> = vec![
            triple(Check::Ybe1, &|x, y, z| ybe1_at(self, x, y, z)),
            triple(Check::Ybe2, &|x, y, z| ybe2_at(self, x, y, z)),
            triple(Check::Ybe3, &|x, y, z| ybe3_at(self, x, y, z)),
            (0..n)
                .find_map(|x| row_missing_value(&self.sigma, n, x).map(|v| (x, v)))
                .map(|(x, v)| Counterexample::new(Check::LeftNondegenerate, vec![x, v])),
            (0..n)
                .find_map(|x| row_missing_value(&self.gamma, n, x).map(|v| (x, v)))
                .map(|(x, v)| Counterexample::new(Check::RightNondegenerate, vec![x, v])),
            first_failing_pair(n, |x, y| Check::Involutive.holds_at(self, &[x, y]))
                .map(|(x, y)| Counterexample::new(Check::Involutive, vec![x, y])),
            first_failing_pair(n, |u, v| Check::RBijective.holds_at(self, &[u, v]))
                .map(|(u, v)| Counterexample::new(Check::RBijective, vec![u, v])),
            first_failing_pair(n, |x, y| Check::IrretractableSigma.holds_at(self, &[x, y]))
                .map(|(x, y)| Counterexample::new(Check::IrretractableSigma, vec![x, y])),
            first_failing_pair(n, |x, y| Check::IrretractableGamma.holds_at(self, &[x, y]))
                .map(|(x, y)| Counterexample::new(Check::IrretractableGamma, vec![x, y])),
        ];
        let ok = |i: usize| failures[i].is_none();
        let (ybe1, ybe2, ybe3) = (ok(0), ok(1), ok(2));
        PropertyReport {
            is_ybe: ybe1 && ybe2 && ybe3,
            ybe1,
            ybe2,
            ybe3,
            left_nondegenerate: ok(3),
            right_nondegenerate: ok(4),
            involutive: ok(5),
            r_bijective: ok(6),
            irretractable_sigma: ok(7),
            irretractable_gamma: ok(8),
            counterexample: failures.into_iter().flatten().next(),
        }
    }

    /// `r'(x, y) = (y, σ_y γ_{σ_x⁻¹(y)}(x))`.
    pub fn derived_left(&self) -> Result<FiniteSolution> {
        self.require_left_nondegenerate()?;
        let n = self.n;
        let inv: Vec<Transformation> = (0..n).map(|x| self.sigma_inverse(x).unwrap()).collect();
        let mut sigma = Vec::with_capacity(n * n);
        let mut gamma = vec![0; n * n];
        for x in 0..n {
            sigma.extend(0..n);
            for y in 0..n {
                gamma[y * n + x] = self.sigma(y, self.gamma(inv[x].apply(y), x));
            }
        }
        Ok(Self::from_flat(n, sigma, gamma))
    }

    /// `r'(y, x) = (γ_y(x), σ_x(y))`, i.e. the tables swapped.
    pub fn dual(&self) -> FiniteSolution {
        Self::from_flat(self.n, self.gamma.clone(), self.sigma.clone())
    }

    /// Evaluates (R1), (R2), (R3) with `x·y = γ_x⁻¹(y)` and `x:y = σ_{γ_y⁻¹(x)}(y)`.
    pub fn rump_conditions(&self) -> Result<(bool, bool, bool)> {
        let n = self.n;
        let inv = self.gamma_inverses()?;
        let dot = |x: usize, y: usize| inv[x * n + y];
        let colon = |x: usize, y: usize| self.sigma(inv[y * n + x], y);
        let mut out = (true, true, true);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    out.0 &= dot(dot(x, y), dot(x, z)) == dot(colon(y, x), dot(y, z));
                    out.1 &= colon(colon(x, y), colon(x, z)) == colon(dot(y, x), colon(y, z));
                    out.2 &= colon(dot(x, y), dot(x, z)) == dot(colon(y, x), colon(y, z));
                }
            }
        }
        Ok(out)
    }

    fn gamma_inverses(&self) -> Result<Vec<usize>> {
        let n = self.n;
        let mut inv = vec![0; n * n];
        for x in 0..n {
            let g = self.gamma_inverse(x).ok_or(Error::GammaNotBijective(x))?;
            inv[x * n..(x + 1) * n].copy_from_slice(g.image());
        }
        Ok(inv)
    }

    /// `h(x) = σ_x⁻¹(x)`.
    pub fn h_map(&self) -> Result<Transformation> {
        self.require_left_nondegenerate()?;
        Ok(Transformation::from_image(
            (0..self.n).map(|x| self.sigma_inverse(x).unwrap().apply(x)).collect(),
        ))
    }

    /// `x ↦ γ_x⁻¹(x)`, when every `γ_x` is bijective.
    pub fn gamma_diagonal_inverse(&self) -> Result<Transformation> {
        let n = self.n;
        let inv = self.gamma_inverses()?;
        Ok(Transformation::from_image((0..n).map(|x| inv[x * n + x]).collect()))
    }

    /// All `(x, y)` with `r(x, y) = (x, y)`, lexicographically ordered.
    pub fn fixed_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.r(x, y) == (x, y))
            .collect()
    }

    pub fn fixed_pair_report(&self) -> FixedPairReport {
        let pairs = self.fixed_pairs();
        let mut as_first = vec![0; self.n];
        let mut as_second = vec![0; self.n];
        for &(x, y) in &pairs {
            as_first[x] += 1;
            as_second[y] += 1;
        }
        let unique = as_first.iter().chain(&as_second).all(|&c| c == 1);
        FixedPairReport {
            pairs,
            as_first,
            as_second,
            unique,
        }
    }

    /// The relabelled solution `p·s` with `σ'_{p(x)}(p(y)) = p(σ_x(y))` and
    /// likewise for `γ`. `p` must be a permutation of `X`.
    pub fn relabel(&self, p: &[usize]) -> FiniteSolution {
        let n = self.n;
        let mut sigma = vec![0; n * n];
        let mut gamma = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                sigma[p[x] * n + p[y]] = p[self.sigma(x, y)];
                gamma[p[x] * n + p[y]] = p[self.gamma(x, y)];
            }
        }
        Self::from_flat(n, sigma, gamma)
    }
}

fn flatten(table: &'static str, n: usize, rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    if rows.len() != n {
        return Err(Error::DimensionMismatch {
            table,
            expected: format!("{n} rows"),
            found: format!("{} rows", rows.len()),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::DimensionMismatch {
                table,
                expected: format!("{n} entries in row {row}"),
                found: format!("{}", entries.len()),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(Error::EntryOutOfRange {
                    table,
                    row,
                    col,
                    value,
                    n,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

/// Least value not hit by row `x`, if any.
fn row_missing_value(table: &[usize], n: usize, x: usize) -> Option<usize> {
    let mut hit = vec![false; n];
    for &v in &table[x * n..(x + 1) * n] {
        hit[v] = true;
    }
    hit.iter().position(|&h| !h)
}

pub(crate) fn braid_holds(n: usize, sigma: &[usize], gamma: &[usize]) -> bool {
    let r = |x: usize, y: usize| (sigma[x * n + y], gamma[y * n + x]);
    for x in 0..n {
        for y in 0..n {
            let (a1, b1) = r(x, y);
            for z in 0..n {
                // (r × id)(id × r)(r × id)
                let (b2, c2) = r(b1, z);
                let (a3, b3) = r(a1, b2);
                // (id × r)(r × id)(id × r)
                let (q1, w1) = r(y, z);
                let (p2, q2) = r(x, q1);
                let (q3, w3) = r(q2, w1);
                if (a3, b3, c2) != (p2, q3, w3) {
                    return false;
                }
            }
        }
    }
    true
}

fn first_failing_triple(
    n: usize,
    holds: impl Fn(usize, usize, usize) -> bool,
) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn first_failing_pair(n: usize, holds: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| !holds(x, y))
}

/// `σ_x σ_y (z) = σ_{σ_x(y)} σ_{γ_y(x)} (z)`
fn ybe1_at(s: &FiniteSolution, x: usize, y: usize, z: usize) -> bool {
    s.sigma(x, s.sigma(y, z)) == s.sigma(s.sigma(x, y), s.sigma(s.gamma(y, x), z))
}

/// `σ_{γ_{σ_x(y)}(z)}(γ_y(x)) = γ_{σ_{γ_x(z)}(y)}(σ_z(x))`
fn ybe2_at(s: &FiniteSolution, x: usize, y: usize, z: usize) -> bool {
    s.sigma(s.gamma(s.sigma(x, y), z), s.gamma(y, x))
        == s.gamma(s.sigma(s.gamma(x, z), y), s.sigma(z, x))
}

/// `γ_x γ_y (z) = γ_{γ_x(y)} γ_{σ_y(x)} (z)`
fn ybe3_at(s: &FiniteSolution, x: usize, y: usize, z: usize) -> bool {
    s.gamma(x, s.gamma(y, z)) == s.gamma(s.gamma(x, y), s.gamma(s.sigma(y, x), z))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Ybe1,
    Ybe2,
    Ybe3,
    LeftNondegenerate,
    RightNondegenerate,
    Involutive,
    RBijective,
    IrretractableSigma,
    IrretractableGamma,
}

impl Check {
    /// Evaluates this condition at one point. Triples for the YBE components,
    /// `(x, v)` meaning "`v` is in the image of the x-th map" for the
    /// non-degeneracy checks, and pairs otherwise.
    pub fn holds_at(self, s: &FiniteSolution, idx: &[usize]) -> bool {
        let n = s.n();
        match self {
            Check::Ybe1 => ybe1_at(s, idx[0], idx[1], idx[2]),
            Check::Ybe2 => ybe2_at(s, idx[0], idx[1], idx[2]),
            Check::Ybe3 => ybe3_at(s, idx[0], idx[1], idx[2]),
            Check::LeftNondegenerate => (0..n).any(|y| s.sigma(idx[0], y) == idx[1]),
            Check::RightNondegenerate => (0..n).any(|y| s.gamma(idx[0], y) == idx[1]),
            Check::Involutive => {
                let (u, v) = s.r(idx[0], idx[1]);
                s.r(u, v) == (idx[0], idx[1])
            }
            Check::RBijective => (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .any(|(x, y)| s.r(x, y) == (idx[0], idx[1])),
            Check::IrretractableSigma => {
                idx[0] == idx[1] || (0..n).any(|z| s.sigma(idx[0], z) != s.sigma(idx[1], z))
            }
            Check::IrretractableGamma => {
                idx[0] == idx[1] || (0..n).any(|z| s.gamma(idx[0], z) != s.gamma(idx[1], z))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: Check,
    pub indices: Vec<usize>,
}

impl Counterexample {
    fn new(check: Check, indices: Vec<usize>) -> Self {
        Self { check, indices }
    }

    pub fn fails_on(&self, s: &FiniteSolution) -> bool {
        !self.check.holds_at(s, &self.indices)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PropertyReport {
    pub is_ybe: bool,
    pub ybe1: bool,
    pub ybe2: bool,
    pub ybe3: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub involutive: bool,
    pub r_bijective: bool,
    pub irretractable_sigma: bool,
    pub irretractable_gamma: bool,
    /// Witness for the first failed check, in field order.
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    pub fn nondegenerate(&self) -> bool {
        self.left_nondegenerate && self.right_nondegenerate
    }
}

/// Fixed points of `r` together with how often each element occurs in each
/// coordinate. For irretractable non-degenerate solutions every count is 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FixedPairReport {
    pub pairs: Vec<(usize, usize)>,
    pub as_first: Vec<usize>,
    pub as_second: Vec<usize>,
    pub unique: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::fixtures;

    fn flip(n: usize) -> FiniteSolution {
        FiniteSolution::from_fn(n, |_, y| y, |_, x| x).unwrap()
    }

    #[test]
    fn validate_accepts_singleton_and_rejects_bad_tables() {
        let s = FiniteSolution::validate(1, &[vec![0]], &[vec![0]]).unwrap();
        assert!(s.check_braid_direct());
        assert_eq!(s.ybe_conditions(), (true, true, true));

        assert!(FiniteSolution::validate(2, &[vec![0, 0], vec![1, 1]], &[vec![0, 0], vec![1, 1]]).is_ok());

        let err = FiniteSolution::validate(2, &[vec![0, 2], vec![1, 1]], &[vec![0, 0], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { row: 0, col: 1, value: 2, .. }));
        assert!(err.to_string().contains("entry out of range"));

        assert_eq!(FiniteSolution::validate(0, &[], &[]).unwrap_err(), Error::EmptySet);
        assert!(matches!(
            FiniteSolution::validate(2, &[vec![0, 0]], &[vec![0, 0], vec![1, 1]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            FiniteSolution::validate(2, &[vec![0, 0], vec![1]], &[vec![0, 0], vec![1, 1]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn identity_map_tables_encode_r_equals_id() {
        // sigma = gamma = [[0,0],[1,1]] under the actor-first convention.
        let s = FiniteSolution::validate(2, &[vec![0, 0], vec![1, 1]], &[vec![0, 0], vec![1, 1]]).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(s.r(x, y), (x, y));
            }
        }
    }

    #[test]
    fn flip_and_skew_lattice_satisfy_all_components() {
        assert_eq!(flip(3).ybe_conditions(), (true, true, true));
        let skew = fixtures::skew_lattice();
        assert_eq!(skew.ybe_conditions(), (true, true, true));
        assert!(skew.check_braid_direct());
    }

    #[test]
    fn non_solution_fails_a_component() {
        let s = FiniteSolution::validate(2, &[vec![1, 0], vec![0, 0]], &[vec![0, 1], vec![1, 0]]).unwrap();
        let (a, b, c) = s.ybe_conditions();
        assert!(!(a && b && c));
        assert!(!s.check_braid_direct());
        let report = s.properties();
        let cx = report.counterexample.expect("counterexample");
        assert!(matches!(cx.check, Check::Ybe1 | Check::Ybe2 | Check::Ybe3));
        assert!(cx.fails_on(&s));
    }

    #[test]
    fn constant_solutions_pass_direct_braid_check() {
        assert!(fixtures::constant(2).check_braid_direct());
        assert!(fixtures::constant_dual(2).check_braid_direct());
    }

    #[test]
    fn sym3_properties() {
        let p = fixtures::sym3_conj().properties();
        assert!(p.is_ybe);
        assert!(p.left_nondegenerate && p.right_nondegenerate);
        assert!(!p.involutive);
        assert!(p.irretractable_sigma);
        assert!(p.r_bijective);
        // γ = id, so γ is retractable.
        assert!(!p.irretractable_gamma);
    }

    #[test]
    fn skew_lattice_properties_read_off_the_tables() {
        let s = fixtures::skew_lattice();
        let p = s.properties();
        assert!(!p.left_nondegenerate);
        assert!(!p.irretractable_sigma);
        assert!(s.sigma_map(0).image().iter().all(|&v| v == 0));
        assert_eq!(s.sigma_map(1), s.sigma_map(2));
        assert!(s.sigma_map(1).is_identity());
        // first failed check is left non-degeneracy: sigma_0 misses 1
        let cx = p.counterexample.unwrap();
        assert_eq!(cx.check, Check::LeftNondegenerate);
        assert_eq!(cx.indices, vec![0, 1]);
        assert!(cx.fails_on(&s));
    }

    #[test]
    fn flip_properties() {
        let p = flip(3).properties();
        assert!(p.involutive && p.left_nondegenerate && p.right_nondegenerate && p.r_bijective);
    }

    #[test]
    fn derived_left_examples() {
        let f = flip(3);
        assert_eq!(f.derived_left().unwrap(), f);

        let sym = fixtures::sym3_conj();
        let d = sym.derived_left().unwrap();
        assert!(d.check_braid_direct());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(d.sigma(x, y), y);
                assert_eq!(d.gamma(y, x), sym.sigma(y, x));
            }
        }

        assert_eq!(
            fixtures::constant(2).derived_left().unwrap_err(),
            Error::NotLeftNondegenerate(0)
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(fixtures::constant(2).dual(), fixtures::constant_dual(2));
        assert_eq!(flip(3).dual(), flip(3));
        let skew = fixtures::skew_lattice();
        assert!(skew.dual().check_braid_direct());
        assert_eq!(skew.dual().dual(), skew);
    }

    #[test]
    fn rump_examples() {
        assert_eq!(flip(3).rump_conditions().unwrap(), (true, true, true));
        assert_eq!(fixtures::sym3_conj().rump_conditions().unwrap(), (true, true, true));
        assert_eq!(
            fixtures::identity_map(2).rump_conditions().unwrap_err(),
            Error::GammaNotBijective(0)
        );
    }

    #[test]
    fn h_map_examples() {
        assert!(flip(3).h_map().unwrap().is_identity());
        let sym = fixtures::sym3_conj();
        assert!(sym.h_map().unwrap().is_identity());
        assert!(sym.gamma_diagonal_inverse().unwrap().is_identity());
        assert!(fixtures::constant(2).h_map().is_err());
    }

    #[test]
    fn fixed_pairs_examples() {
        assert_eq!(flip(2).fixed_pairs(), vec![(0, 0), (1, 1)]);
        assert_eq!(fixtures::constant(2).fixed_pairs(), vec![(0, 0), (1, 1)]);
        // r(a, b) = (aba⁻¹, a) is fixed iff b = a.
        let report = fixtures::sym3_conj().fixed_pair_report();
        assert_eq!(report.pairs, (0..6).map(|a| (a, a)).collect::<Vec<_>>());
        assert!(report.unique);
        // the identity map fixes everything: multiplicities are visible
        let id = fixtures::identity_map(2).fixed_pair_report();
        assert_eq!(id.as_first, vec![2, 2]);
        assert!(!id.unique);
    }

    #[test]
    fn relabel_preserves_braid_and_properties() {
        let sym = fixtures::sym3_conj();
        let p = [3, 5, 0, 1, 4, 2];
        let t = sym.relabel(&p);
        assert!(t.check_braid_direct());
        assert_eq!(t.properties().is_ybe, true);
        assert_eq!(t.properties().irretractable_sigma, true);
    }
}
