//! Exact degree-truncated word problem for the structure monoid `M(X,r)` and
//! the derived monoids `A(X,r)` and `A'(X,r)`.
//!
//! Every defining relation identifies two words of length 2, so word length is
//! an invariant and the congruence restricted to `X^d` is the equivalence
//! generated by single-position rewrites inside `X^d`. Each degree is closed
//! independently with a union-find over the `n^d` words, and the
//! lexicographically least word of a class serves as its normal form.

use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solution::FiniteSolution;

pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Hard limit on the number of words closed at a single degree.
pub const WORD_LIMIT: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Self(vec![x])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.degree() + other.degree());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(v: [usize; N]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Digits run together when every letter is below 10, otherwise
/// comma-separated; the empty word prints as `ε`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PresentationKind {
    /// `x∘y = σ_x(y)∘γ_y(x)`
    M,
    /// `x + σ_x(y) = σ_x(y) + σ_{σ_x(y)}γ_y(x)`
    A,
    /// `γ_y(x) ⊕ y = γ_{γ_y(x)}σ_x(y) ⊕ γ_y(x)`
    #[serde(rename = "Ap")]
    APrime,
}

impl PresentationKind {
    pub const ALL: [PresentationKind; 3] = [Self::M, Self::A, Self::APrime];

    /// The relation contributed by the pair `(x, y)`.
    pub fn relation_at(self, s: &FiniteSolution, x: usize, y: usize) -> ([usize; 2], [usize; 2]) {
        match self {
            Self::M => ([x, y], [s.sigma(x, y), s.gamma(y, x)]),
            Self::A => {
                let u = s.sigma(x, y);
                ([x, u], [u, s.sigma(u, s.gamma(y, x))])
            }
            Self::APrime => {
                let v = s.gamma(y, x);
                ([v, y], [s.gamma(v, s.sigma(x, y)), v])
            }
        }
    }
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::M => "M",
            Self::A => "A",
            Self::APrime => "Ap",
        })
    }
}

impl FromStr for PresentationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "M" | "m" => Ok(Self::M),
            "A" | "a" => Ok(Self::A),
            "Ap" | "ap" | "A'" | "AP" => Ok(Self::APrime),
            other => Err(format!("unknown presentation `{other}` (expected M, A or Ap)")),
        }
    }
}

/// Non-trivial defining relations, each stored with the lexicographically
/// smaller side first, sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationSet {
    pub kind: PresentationKind,
    pub pairs: Vec<(Word, Word)>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: &Word, v: &Word) -> bool {
        let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        self.pairs.binary_search(&key).is_ok()
    }
}

pub fn relations(kind: PresentationKind, s: &FiniteSolution) -> RelationSet {
    let n = s.n();
    let mut pairs: Vec<(Word, Word)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter_map(|(x, y)| {
            let (u, v) = kind.relation_at(s, x, y);
            match u.cmp(&v) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some((Word::from(u), Word::from(v))),
                std::cmp::Ordering::Greater => Some((Word::from(v), Word::from(u))),
            }
        })
        .collect();
    pairs.sort();
    pairs.dedup();
    RelationSet { kind, pairs }
}

struct Level {
    /// word index (mixed radix, first letter most significant) -> class id
    class_of: Vec<u32>,
    /// class id -> index of the lex-least member
    reps: Vec<u64>,
}

/// Per-degree congruence classes of one of the three monoids, up to a fixed
/// maximum degree. Class ids at each degree are ordered by their canonical
/// representatives.
pub struct GradedQuotient {
    kind: PresentationKind,
    solution: FiniteSolution,
    max_degree: usize,
    levels: Vec<Level>,
}

impl fmt::Debug for GradedQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedQuotient")
            .field("kind", &self.kind)
            .field("n", &self.solution.n())
            .field("growth", &self.growth())
            .finish()
    }
}

pub(crate) fn word_count(n: usize, degree: usize) -> u128 {
    (n as u128).saturating_pow(degree as u32)
}

fn guard(n: usize, degree: usize) -> Result<u64> {
    let words = word_count(n, degree);
    if words > WORD_LIMIT as u128 {
        return Err(Error::ResourceGuard {
            degree,
            words,
            limit: WORD_LIMIT,
        });
    }
    Ok(words as u64)
}

impl GradedQuotient {
    pub fn build(kind: PresentationKind, s: &FiniteSolution, max_degree: usize) -> Result<Self> {
        let n = s.n();
        for d in 0..=max_degree {
            guard(n, d)?;
        }
        let rel = relations(kind, s);
        // neighbours of every length-2 word, both orientations
        let mut partners: Vec<Vec<u64>> = vec![Vec::new(); n * n];
        for (u, v) in &rel.pairs {
            let cu = (u.letters()[0] * n + u.letters()[1]) as u64;
            let cv = (v.letters()[0] * n + v.letters()[1]) as u64;
            partners[cu as usize].push(cv);
            partners[cv as usize].push(cu);
        }
        let levels = (0..=max_degree)
            .into_par_iter()
            .map(|d| close_degree(n, d, &partners))
            .collect();
        Ok(Self {
            kind,
            solution: s.clone(),
            max_degree,
            levels,
        })
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn solution(&self) -> &FiniteSolution {
        &self.solution
    }

    pub fn n(&self) -> usize {
        self.solution.n()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        self.check_degree(w.degree())?;
        let n = self.n();
        match w.letters().iter().find(|&&x| x >= n) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }

    pub fn index_of(&self, letters: &[usize]) -> u64 {
        let n = self.n() as u64;
        letters.iter().fold(0, |acc, &x| acc * n + x as u64)
    }

    pub fn word_at(&self, degree: usize, mut index: u64) -> Word {
        let n = self.n() as u64;
        let mut v = vec![0; degree];
        for slot in v.iter_mut().rev() {
            *slot = (index % n) as usize;
            index /= n;
        }
        Word(v)
    }

    pub fn class_count(&self, degree: usize) -> usize {
        self.levels[degree].reps.len()
    }

    pub fn class_id(&self, w: &Word) -> Result<usize> {
        self.check_word(w)?;
        Ok(self.class_id_unchecked(w.letters()))
    }

    pub(crate) fn class_id_unchecked(&self, letters: &[usize]) -> usize {
        self.levels[letters.len()].class_of[self.index_of(letters) as usize] as usize
    }

    /// Canonical (lex-least) word of a class.
    pub fn rep(&self, degree: usize, class: usize) -> Word {
        self.word_at(degree, self.levels[degree].reps[class])
    }

    pub fn rep_index(&self, degree: usize, class: usize) -> u64 {
        self.levels[degree].reps[class]
    }

    /// Class of the concatenation of two class representatives.
    pub(crate) fn concat_class(&self, da: usize, a: usize, db: usize, b: usize) -> usize {
        let shift = (self.n() as u64).pow(db as u32);
        let idx = self.levels[da].reps[a] * shift + self.levels[db].reps[b];
        self.levels[da + db].class_of[idx as usize] as usize
    }

    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        let c = self.class_id(w)?;
        Ok(self.rep(w.degree(), c))
    }

    pub fn equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        Ok(w1.degree() == w2.degree()
            && self.class_id_unchecked(w1.letters()) == self.class_id_unchecked(w2.letters()))
    }

    pub fn multiply(&self, w1: &Word, w2: &Word) -> Result<Word> {
        self.normal_form(&w1.concat(w2))
    }

    pub fn growth(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.reps.len()).collect()
    }

    /// All classes at `degree`, each listed in lexicographic order.
    pub fn classes(&self, degree: usize) -> Result<Vec<Vec<Word>>> {
        self.check_degree(degree)?;
        let level = &self.levels[degree];
        let mut out = vec![Vec::new(); level.reps.len()];
        for (idx, &c) in level.class_of.iter().enumerate() {
            out[c as usize].push(self.word_at(degree, idx as u64));
        }
        Ok(out)
    }
}

fn close_degree(n: usize, d: usize, partners: &[Vec<u64>]) -> Level {
    let total = word_count(n, d) as usize;
    let mut uf = UnionFind::<u32>::new(total);
    if d >= 2 {
        let nn = (n * n) as u64;
        for w in 0..total as u64 {
            let mut place = 1u64;
            for _ in 0..d - 1 {
                let code = (w / place) % nn;
                for &q in &partners[code as usize] {
                    let other = w - code * place + q * place;
                    uf.union(w as u32, other as u32);
                }
                place *= n as u64;
            }
        }
    }
    let labels = uf.into_labeling();
    let mut class_of = vec![u32::MAX; total];
    let mut reps = Vec::new();
    let mut root_class = vec![u32::MAX; total];
    for (idx, &root) in labels.iter().enumerate() {
        let slot = &mut root_class[root as usize];
        if *slot == u32::MAX {
            *slot = reps.len() as u32;
            reps.push(idx as u64);
        }
        class_of[idx] = *slot;
    }
    Level { class_of, reps }
}

/// Class partition of `X^d` for one presentation.
pub fn classes(kind: PresentationKind, s: &FiniteSolution, d: usize) -> Result<Vec<Vec<Word>>> {
    GradedQuotient::build(kind, s, d)?.classes(d)
}

/// Number of classes in each degree `0..=max_degree`.
pub fn growth(kind: PresentationKind, s: &FiniteSolution, max_degree: usize) -> Result<Vec<usize>> {
    Ok(GradedQuotient::build(kind, s, max_degree)?.growth())
}
