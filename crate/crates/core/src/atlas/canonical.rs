use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::solution::FiniteSolution;

/// Largest set size accepted by [`canonical_label`].
pub const MAX_CANONICAL_N: usize = 6;

/// Isomorphism class of a solution, represented by the relabeling whose
/// concatenated `(σ, γ)` tables are lexicographically least.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SolutionClass {
    #[serde(serialize_with = "ser_solution")]
    pub canonical: FiniteSolution,
    /// Number of distinct relabelings of the solution.
    pub orbit_size: usize,
}

fn ser_solution<S: serde::Serializer>(s: &FiniteSolution, ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = ser.serialize_struct("FiniteSolution", 3)?;
    st.serialize_field("n", &s.n())?;
    st.serialize_field("sigma", &s.sigma_rows())?;
    st.serialize_field("gamma", &s.gamma_rows())?;
    st.end()
}

pub fn canonical_label(s: &FiniteSolution) -> Result<SolutionClass> {
    let n = s.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::UnsupportedSize {
            n,
            supported: "n <= 6",
        });
    }
    let mut best: Option<FiniteSolution> = None;
    let mut stabilizer = 0;
    let mut total = 0;
    for p in (0..n).permutations(n) {
        let t = s.relabel(&p);
        total += 1;
        if &t == s {
            stabilizer += 1;
        }
        if best.as_ref().map_or(true, |b| t.flat_tables() < b.flat_tables()) {
            best = Some(t);
        }
    }
    Ok(SolutionClass {
        canonical: best.expect("at least the identity relabeling"),
        orbit_size: total / stabilizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::enumerate::enumerate_nondegenerate;
    use crate::atlas::fixtures;
    use proptest::prelude::*;

    fn isomorphic_brute(a: &FiniteSolution, b: &FiniteSolution) -> bool {
        (0..a.n()).permutations(a.n()).any(|p| &a.relabel(&p) == b)
    }

    #[test]
    fn flip_is_already_canonical() {
        let f = fixtures::flip(2);
        let c = canonical_label(&f).unwrap();
        assert_eq!(c.canonical, f);
        assert_eq!(c.orbit_size, 1);
    }

    #[test]
    fn distinct_classes_at_two_points() {
        let sols = enumerate_nondegenerate(2).unwrap();
        for a in &sols {
            for b in &sols {
                let same = canonical_label(a).unwrap() == canonical_label(b).unwrap();
                assert_eq!(same, isomorphic_brute(a, b));
            }
        }
    }

    #[test]
    fn orbit_sizes_partition_the_enumeration() {
        let sols = enumerate_nondegenerate(3).unwrap();
        let mut classes = std::collections::BTreeMap::new();
        for s in &sols {
            let c = canonical_label(s).unwrap();
            classes.insert(c.canonical, c.orbit_size);
        }
        assert_eq!(classes.values().sum::<usize>(), sols.len());
    }

    #[test]
    fn too_large_is_refused() {
        let s = fixtures::identity_map(7);
        assert!(matches!(canonical_label(&s), Err(Error::UnsupportedSize { n: 7, .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn relabeling_invariant(idx in 0usize..66, p in Just(vec![0usize, 1, 2]).prop_shuffle()) {
            let sols = enumerate_nondegenerate(3).unwrap();
            let s = &sols[idx];
            prop_assert_eq!(canonical_label(s).unwrap(), canonical_label(&s.relabel(&p)).unwrap());
        }
    }
}
