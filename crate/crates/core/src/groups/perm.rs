use std::fmt;

use super::{GroupElement, GroupError};

/// A bijection of `{0, .., n-1}` stored as its image array.
///
/// Products compose as functions: `(p * q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Build from disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (i, &from) in cycle.iter().enumerate() {
                let to = cycle[(i + 1) % cycle.len()];
                if from as usize >= n || to as usize >= n {
                    return Err(GroupError::InvalidPermutation(format!(
                        "cycle {cycle:?} leaves 0..{n}"
                    )));
                }
                images[from as usize] = to;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut cur = self.images[start] as usize;
            while cur != start {
                seen[cur] = true;
                cycle.push(cur as u32);
                cur = self.images[cur] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl GroupElement for Permutation {
    fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "permutation degrees differ");
        Permutation {
            images: rhs
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_function_composition() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.compose(&b);
        // (a∘b)(1) = a(2) = 2, (a∘b)(2) = a(1) = 0
        assert_eq!(ab.images(), &[1, 2, 0]);
        assert!(a.compose(&a).is_identity());
        assert_eq!(ab.compose(&ab.inverse()), Permutation::identity(3));
        assert_eq!(ab.element_order(), 3);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }
}
