//! Permutations of {1..n} in one-line notation (0-based internally).

use std::fmt;

/// A permutation; `images[i]` is the 0-based image of i.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u8).collect() }
    }

    /// The transposition swapping i and j (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && i <= n && j >= 1 && j <= n && i != j);
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i - 1, j - 1);
        Perm { images }
    }

    pub fn from_images_zero_based(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!((v as usize) < images.len() && !seen[v as usize], "not a bijection");
            seen[v as usize] = true;
        }
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// (self * other)(i) = self(other(i)): apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        let images = other.images.iter().map(|&v| self.images[v as usize]).collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// All n! permutations, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = Vec::new();
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if current.len() == n {
                out.push(Perm { images: current.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current.push(v as u8);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}
