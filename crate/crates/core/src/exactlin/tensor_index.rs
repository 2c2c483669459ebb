//! Big-endian flattening of tensor-product basis indices.

/// A basis vector of `R^{d_1} ⊗ … ⊗ R^{d_k}`; the leftmost factor is most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    dims: Vec<usize>,
    flat: usize,
}

impl TensorIndex {
    pub fn from_digits(dims: &[usize], digits: &[usize]) -> Option<Self> {
        if dims.len() != digits.len() || digits.iter().zip(dims).any(|(x, d)| x >= d) {
            return None;
        }
        let flat = digits.iter().zip(dims).fold(0, |acc, (x, d)| acc * d + x);
        Some(TensorIndex { dims: dims.to_vec(), flat })
    }

    pub fn from_flat(dims: &[usize], flat: usize) -> Option<Self> {
        (flat < dims.iter().product()).then(|| TensorIndex { dims: dims.to_vec(), flat })
    }

    pub fn flat(&self) -> usize {
        self.flat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn digits(&self) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        let mut rest = self.flat;
        for (k, d) in self.dims.iter().enumerate().rev() {
            out[k] = rest % d;
            rest /= d;
        }
        out
    }
}

/// Digits of `flat` in `(R^d)^{⊗n}`.
pub fn digits(flat: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    let mut rest = flat;
    for k in (0..n).rev() {
        out[k] = rest % d;
        rest /= d;
    }
    out
}

/// Flat index of a word in `(R^d)^{⊗n}`.
pub fn flatten(word: &[usize], d: usize) -> usize {
    word.iter().fold(0, |acc, x| acc * d + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = TensorIndex::from_digits(&[2, 3, 4], &[1, 2, 3]).unwrap();
        assert_eq!(t.flat(), 12 + 8 + 3);
        assert_eq!(t.digits(), vec![1, 2, 3]);
        assert!(TensorIndex::from_digits(&[2, 3], &[2, 0]).is_none());
        assert!(TensorIndex::from_flat(&[2, 3], 6).is_none());
        assert_eq!(digits(flatten(&[2, 0, 1], 3), 3, 3), vec![2, 0, 1]);
    }
}
