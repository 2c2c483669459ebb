//! Permutations of tensor positions, reduced words and shuffle sets.

use std::fmt;

/// A permutation `s` of `{0, …, n-1}` acting on tensor positions: the factor at
/// position `k` is sent to position `s(k)`.
///
/// Generators `τ_i` (`i ≥ 1`) swap positions `i-1` and `i` (1-based `i` and `i+1`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|x| x + 1).collect();
        write!(f, "Permutation{one_based:?}")
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    /// From 1-based images, e.g. `[3, 2, 1]` for the order reversal of three letters.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        Self::from_images(images.iter().map(|x| x - 1).collect())
    }

    /// The transposition `τ_i` of `S_n`, `1 ≤ i < n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// `τ_{w_1} ∘ τ_{w_2} ∘ … ∘ τ_{w_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(n), |acc, &g| acc.compose(&Self::transposition(n, g)))
    }

    /// The order reversal `Δ_n`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    /// Moves position `i` (1-based) to position 1, keeping the others in order.
    pub fn pull_left(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let images = (0..n)
            .map(|k| match k + 1 {
                x if x == i => 0,
                x if x < i => k + 1,
                _ => k,
            })
            .collect();
        Permutation { images }
    }

    /// Moves position `i` (1-based) to position `n`, keeping the others in order.
    pub fn pull_right(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let images = (0..n)
            .map(|k| match k + 1 {
                x if x == i => n - 1,
                x if x < i => k,
                _ => k - 1,
            })
            .collect();
        Permutation { images }
    }

    /// Sends the first `left` positions past the last `right` ones.
    pub fn block_swap(left: usize, right: usize) -> Self {
        let images = (0..left + right)
            .map(|k| if k < left { k + right } else { k - left })
            .collect();
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of the 0-based position `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, x)| k == *x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutations of different sizes");
        Permutation { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x] = k;
        }
        Permutation { images }
    }

    /// Extends by fixed points up to `n` letters.
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.len());
        let mut images = self.images.clone();
        images.extend(self.len()..n);
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Canonical reduced word `[w_1, …, w_k]` with `self = τ_{w_1} ∘ … ∘ τ_{w_k}`.
    ///
    /// Sorts the one-line notation by bubbling the smallest out-of-place value
    /// leftward; the adjacent swaps, read in reverse, form the word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut line = self.images.clone();
        let mut swaps = Vec::with_capacity(self.inversions());
        for target in 0..line.len() {
            let mut pos = line.iter().position(|&x| x == target).expect("bijection");
            while pos > target {
                line.swap(pos - 1, pos);
                swaps.push(pos);
                pos -= 1;
            }
        }
        swaps.reverse();
        swaps
    }
}

/// All `(p, q)`-shuffles, ordered lexicographically by the image of the first `p` positions.
pub fn shuffle_set(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..p).collect();
    loop {
        let mut images = subset.clone();
        images.extend((0..n).filter(|x| !subset.contains(x)));
        out.push(Permutation { images });
        // Next p-subset in lexicographic order.
        let mut k = p;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if subset[k] < n - p + k {
                break;
            }
        }
        subset[k] += 1;
        for j in k + 1..p {
            subset[j] = subset[j - 1] + 1;
        }
    }
}
