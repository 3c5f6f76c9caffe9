//! Named solutions used throughout the tests and by the CLI.
//!
//! `sym3_conj` uses the labeling 0 = e, 1 = (1,2), 2 = (1,3), 3 = (2,3),
//! 4 = (1,2,3), 5 = (1,3,2), with permutations composed right to left.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solution::{FiniteSolution, PropertyReport};

/// `r(x, y) = (x, x)`
pub fn constant(n: usize) -> FiniteSolution {
    FiniteSolution::from_fn(n, |x, _| x, |_, arg| arg).unwrap()
}

/// `r(x, y) = (y, y)`
pub fn constant_dual(n: usize) -> FiniteSolution {
    FiniteSolution::from_fn(n, |_, y| y, |actor, _| actor).unwrap()
}

/// `r(x, y) = (x, y)`; its structure monoid is free.
pub fn identity_map(n: usize) -> FiniteSolution {
    FiniteSolution::from_fn(n, |x, _| x, |actor, _| actor).unwrap()
}

/// `r(x, y) = (y, x)`
pub fn flip(n: usize) -> FiniteSolution {
    FiniteSolution::from_fn(n, |_, y| y, |_, arg| arg).unwrap()
}

const MEET: [[usize; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 1, 2]];
const JOIN: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 1], [2, 2, 2]];

/// `r(x, y) = (x ∧ y, y ∨ x)` on the three-element skew lattice.
pub fn skew_lattice() -> FiniteSolution {
    FiniteSolution::from_fn(3, |x, y| MEET[x][y], |y, x| JOIN[y][x]).unwrap()
}

/// `σ_x = γ_x = ξ` with `ξ(x) = max(0, x - 1)` on `{0, ..., top}`.
pub fn nat_trunc(top: usize) -> FiniteSolution {
    let xi = |x: usize| x.saturating_sub(1);
    FiniteSolution::from_fn(top + 1, |_, y| xi(y), |_, x| xi(x)).unwrap()
}

/// Elements of Sym₃ in fixture order, as images of `{0, 1, 2}`.
pub const SYM3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

fn sym3_index(p: [usize; 3]) -> usize {
    SYM3.iter().position(|&q| q == p).unwrap()
}

/// `a ∘ b`, applying `b` first.
pub fn sym3_mul(a: usize, b: usize) -> usize {
    let (a, b) = (SYM3[a], SYM3[b]);
    sym3_index([a[b[0]], a[b[1]], a[b[2]]])
}

pub fn sym3_inv(a: usize) -> usize {
    (0..6).find(|&b| sym3_mul(a, b) == 0).unwrap()
}

/// `r(a, b) = (aba⁻¹, a)` on Sym₃.
pub fn sym3_conj() -> FiniteSolution {
    FiniteSolution::from_fn(
        6,
        |a, b| sym3_mul(sym3_mul(a, b), sym3_inv(a)),
        |_, a| a,
    )
    .unwrap()
}

/// Expected property flags of a fixture.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ExpectedFlags {
    pub is_ybe: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub involutive: bool,
    pub r_bijective: bool,
    pub irretractable_sigma: bool,
}

impl ExpectedFlags {
    pub fn matches(&self, p: &PropertyReport) -> bool {
        self.is_ybe == p.is_ybe
            && self.left_nondegenerate == p.left_nondegenerate
            && self.right_nondegenerate == p.right_nondegenerate
            && self.involutive == p.involutive
            && self.r_bijective == p.r_bijective
            && self.irretractable_sigma == p.irretractable_sigma
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub solution: FiniteSolution,
    pub expected: ExpectedFlags,
    /// Facts about the monoids and cocycles that the acceptance suite checks.
    pub facts: &'static [&'static str],
}

const fn flags(ln: bool, rn: bool, inv: bool, bij: bool, irr: bool) -> ExpectedFlags {
    ExpectedFlags {
        is_ybe: true,
        left_nondegenerate: ln,
        right_nondegenerate: rn,
        involutive: inv,
        r_bijective: bij,
        irretractable_sigma: irr,
    }
}

pub fn builtin_examples() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "constant2",
            summary: "r(x,y) = (x,x) on 2 points",
            solution: constant(2),
            expected: flags(false, true, false, false, true),
            facts: &["pi injective, not surjective in degrees >= 2", "pi' bijective"],
        },
        Fixture {
            name: "constant3",
            summary: "r(x,y) = (x,x) on 3 points",
            solution: constant(3),
            expected: flags(false, true, false, false, true),
            facts: &["pi injective, not surjective in degrees >= 2", "pi' bijective"],
        },
        Fixture {
            name: "constant_dual2",
            summary: "r(x,y) = (y,y) on 2 points",
            solution: constant_dual(2),
            expected: flags(true, false, false, false, false),
            facts: &["pi bijective", "pi' injective, not surjective in degrees >= 2"],
        },
        Fixture {
            name: "constant_dual3",
            summary: "r(x,y) = (y,y) on 3 points",
            solution: constant_dual(3),
            expected: flags(true, false, false, false, false),
            facts: &["pi bijective", "pi' injective, not surjective in degrees >= 2"],
        },
        Fixture {
            name: "identity_map",
            summary: "r(x,y) = (x,y) on 2 points; M is free",
            solution: identity_map(2),
            expected: flags(false, false, true, true, true),
            facts: &["growth of M is 2^d"],
        },
        Fixture {
            name: "flip2",
            summary: "r(x,y) = (y,x) on 2 points",
            solution: flip(2),
            expected: flags(true, true, true, true, false),
            facts: &["A free abelian"],
        },
        Fixture {
            name: "flip3",
            summary: "r(x,y) = (y,x) on 3 points",
            solution: flip(3),
            expected: flags(true, true, true, true, false),
            facts: &["A free abelian"],
        },
        Fixture {
            name: "skew_lattice",
            summary: "r(x,y) = (x meet y, y join x) on the skew lattice {0,1,2}",
            solution: skew_lattice(),
            expected: flags(false, false, false, false, false),
            facts: &[
                "M: 1o0=0o1, 2o0=0o2, 1o2=2o2, 2o1=1o1",
                "A: 1+0=0+0, 2+0=0+0, 1+2=2+2, 2+1=1+1",
                "A': 1(+)0=1(+)1, 2(+)0=2(+)2",
                "pi(1o0)=pi(0o0), pi'(1o0)=pi'(1o1)",
                "0+1 and 0(+)1 not in the images",
            ],
        },
        Fixture {
            name: "nat_trunc_4",
            summary: "sigma_x = gamma_x = xi, xi(x) = max(0, x-1), on {0,...,4}",
            solution: nat_trunc(4),
            expected: flags(false, false, false, false, false),
            facts: &["one element of M in every degree >= 2"],
        },
        Fixture {
            name: "sym3_conj",
            summary: "r(a,b) = (aba^-1, a) on Sym3 (0=e, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132))",
            solution: sym3_conj(),
            expected: flags(true, true, false, true, true),
            facts: &[
                "(12)(123)(123)(123) = (12)(132)(132)(132) in M",
                "(123)(123)(123) != (132)(132)(132) in M",
                "X embeds in the left cancellative quotient",
            ],
        },
    ]
}

pub fn fixture(name: &str) -> Result<Fixture> {
    builtin_examples()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}
