use crate::braiding::PreBraidedSpace;
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};

/// The flip `v⊗w ↦ w⊗v` on `V = R^d`.
pub fn flip_braiding<R: Scalar>(d: usize) -> PreBraidedSpace<R> {
    PreBraidedSpace::new(d, SparseLinearMap::block_flip(d, d)).expect("square flip")
}

/// `v⊗w ↦ −w⊗v`.
pub fn signed_flip_braiding<R: Scalar>(d: usize) -> PreBraidedSpace<R> {
    PreBraidedSpace::new(d, SparseLinearMap::block_flip(d, d).neg()).expect("square flip")
}

/// The Koszul flip `v⊗w ↦ (−1)^{|v||w|} w⊗v` for homogeneous basis vectors.
pub fn koszul_braiding<R: Scalar>(grading: &[i64]) -> PreBraidedSpace<R> {
    let d = grading.len();
    let entries = (0..d).flat_map(|i| {
        (0..d).map(move |j| {
            let odd = (grading[i] * grading[j]).rem_euclid(2) == 1;
            (j * d + i, i * d + j, if odd { -R::one() } else { R::one() })
        })
    });
    let sigma = SparseLinearMap::from_triplets(d * d, d * d, entries).expect("indices in range");
    let mut space = PreBraidedSpace::new(d, sigma).expect("square braiding");
    space.set_grading(grading.to_vec()).expect("grading length");
    space
}

/// The one-variable q-flip `x⊗x ↦ q·x⊗x`.
pub fn q_flip_braiding<R: Scalar>(q: R) -> Result<PreBraidedSpace<R>> {
    q_flip_diagonal(1, &[q])
}

/// Diagonal braidings `e_i⊗e_j ↦ q_{ij} e_j⊗e_i`, with `q` row-major of length `d²`.
pub fn q_flip_diagonal<R: Scalar>(d: usize, q: &[R]) -> Result<PreBraidedSpace<R>> {
    if q.len() != d * d {
        return Err(Error::Shape(format!("expected {} parameters, got {}", d * d, q.len())));
    }
    if q.iter().any(|x| x.is_zero()) {
        return Err(Error::Structure("q-flip parameters must be nonzero".into()));
    }
    let entries = (0..d).flat_map(|i| (0..d).map(move |j| (j * d + i, i * d + j, q[i * d + j].clone())));
    let sigma = SparseLinearMap::from_triplets(d * d, d * d, entries)?;
    PreBraidedSpace::new(d, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::check_ybe;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    #[test]
    fn flip_matrix() {
        let f = flip_braiding::<Q>(2);
        assert_eq!(f.sigma().get(2, 1), q(1));
        assert_eq!(f.sigma().get(1, 2), q(1));
        assert_eq!(f.sigma().get(0, 0), q(1));
        assert_eq!(f.sigma().nnz(), 4);
    }

    #[test]
    fn koszul_signs() {
        let mut k = koszul_braiding::<Q>(&[1, 1]);
        assert_eq!(k.sigma(), &SparseLinearMap::block_flip(2, 2).neg());
        assert!(check_ybe(&mut k).passed);
        let mixed = koszul_braiding::<Q>(&[0, 1]);
        assert_eq!(mixed.sigma().get(1, 2), q(1));
        assert_eq!(mixed.sigma().get(3, 3), q(-1));
    }

    #[test]
    fn q_flip_square() {
        let s = q_flip_braiding(q(3)).unwrap();
        let sq = s.sigma().compose(s.sigma()).unwrap();
        assert_eq!(sq, SparseLinearMap::scalar(1, q(9)));
        assert!(q_flip_braiding(q(0)).is_err());
    }
}
