use std::fmt;

use serde::{Deserialize, Serialize};

/// A self-map of `{0, ..., n-1}` stored as its image vector.
///
/// Composition follows function notation: `f.compose(&g)` is `f ∘ g`,
/// i.e. `g` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Panics if an entry is out of range; use only with trusted images.
    pub fn from_image(image: Vec<usize>) -> Self {
        let n = image.len();
        assert!(image.iter().all(|&v| v < n), "image entry out of range");
        Self(image)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn compose(&self, inner: &Transformation) -> Transformation {
        debug_assert_eq!(self.len(), inner.len());
        Transformation(inner.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.len()];
        for &v in &self.0 {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> Option<Transformation> {
        let mut inv = vec![usize::MAX; self.len()];
        for (x, &v) in self.0.iter().enumerate() {
            if inv[v] != usize::MAX {
                return None;
            }
            inv[v] = x;
        }
        Some(Transformation(inv))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_map(n: usize) -> impl Strategy<Value = Transformation> {
        proptest::collection::vec(0..n, n).prop_map(Transformation)
    }

    #[test]
    fn inverse_of_non_bijection_is_none() {
        assert!(Transformation(vec![0, 0]).inverse().is_none());
        assert!(!Transformation(vec![1, 1, 0]).is_bijective());
    }

    proptest! {
        #[test]
        fn composition_is_associative(f in arb_map(4), g in arb_map(4), h in arb_map(4)) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
            let id = Transformation::identity(4);
            prop_assert_eq!(f.compose(&id), f.clone());
            prop_assert_eq!(id.compose(&f), f);
        }

        #[test]
        fn inverse_undoes(p in Just((0..5).collect::<Vec<_>>()).prop_shuffle()) {
            let t = Transformation(p);
            let inv = t.inverse().unwrap();
            prop_assert!(t.compose(&inv).is_identity());
            prop_assert!(inv.compose(&t).is_identity());
        }
    }
}
