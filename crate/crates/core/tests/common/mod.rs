#![allow(dead_code)]
//! Fixtures and formula-level oracles shared by the integration tests. The oracles
//! work on digit words and never touch the braiding machinery.

use braidhom::braiding::{check_braided_character, check_ybe};
use braidhom::exactlin::SparseVec;
use braidhom::structures::{
    adjoin_unit, assoc_braiding, coalgebra_extend, coassoc_braiding, cyclic_group_algebra, dual_coalgebra, koszul_braiding,
    leibniz_braiding, shelf_braiding, sl2, truncated_polynomial, AlgebraData, AlgebraKind, ShelfTable, COUNIT,
};
use braidhom::{Integer, Rational, Scalar, SparseLinearMap, ZSpace};

pub fn z(v: i64) -> Integer {
    Integer::from(v)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Runs the YBE check and verifies every installed character, insisting that all pass.
pub fn ready<R: Scalar>(mut space: braidhom::PreBraidedSpace<R>) -> braidhom::PreBraidedSpace<R> {
    assert!(check_ybe(&mut space).passed, "fixture fails YBE");
    for name in space.character_names() {
        assert!(check_braided_character(&mut space, &name).unwrap().passed, "character {name} is not braided");
    }
    space
}

pub fn r3() -> ZSpace {
    ready(shelf_braiding(&ShelfTable::dihedral(3)))
}

pub fn trivial(m: usize) -> ZSpace {
    ready(shelf_braiding(&ShelfTable::trivial(m)))
}

/// `kℤ/2` on `{1, g}`, with the trivial character `g ↦ 1`.
pub fn z2_algebra() -> AlgebraData<Integer> {
    cyclic_group_algebra(2).with_character("aug", vec![z(1), z(1)]).unwrap()
}

pub fn z2() -> ZSpace {
    ready(assoc_braiding(&z2_algebra()).unwrap())
}

/// `k[x]/(x^k)` with the augmentation `x ↦ 0`.
pub fn truncated(k: usize) -> AlgebraData<Integer> {
    let mut aug = vec![z(0); k];
    aug[0] = z(1);
    truncated_polynomial(k).with_character("aug", aug).unwrap()
}

pub fn dual_numbers() -> ZSpace {
    ready(assoc_braiding(&truncated(2)).unwrap())
}

pub fn sl2_unital() -> ZSpace {
    ready(leibniz_braiding(&adjoin_unit(&sl2::<Integer>()).unwrap()).unwrap())
}

/// The 2-dimensional non-Lie Leibniz algebra `[y,y] = x` (basis `x, y`), unit adjoined.
pub fn leibniz_xy() -> AlgebraData<Integer> {
    let a = AlgebraData::from_constants(AlgebraKind::Leibniz, 2, None, vec![(1, 1, 0, z(1))]).unwrap();
    adjoin_unit(&a).unwrap()
}

pub fn leibniz_xy_space() -> ZSpace {
    ready(leibniz_braiding(&leibniz_xy()).unwrap())
}

/// The dual coalgebra of `k[x]/(x^k)` with its counit installed.
pub fn truncated_coalgebra(k: usize) -> AlgebraData<Integer> {
    let mut eps = vec![z(0); k];
    eps[0] = z(1);
    dual_coalgebra(&truncated_polynomial::<Integer>(k)).unwrap().with_character(COUNIT, eps).unwrap()
}

pub fn coalgebra_space(k: usize) -> ZSpace {
    ready(coassoc_braiding(&truncated_coalgebra(k)).unwrap())
}

/// A counit-free coalgebra on `{a, b}` with `δ(b) = a⊗a`, extended by a group-like.
pub fn extended_coalgebra() -> ZSpace {
    let delta = SparseLinearMap::from_triplets(4, 2, vec![(0, 1, z(1))]).unwrap();
    let c = AlgebraData::new(AlgebraKind::Coalgebra, 2, delta, None).unwrap();
    ready(coassoc_braiding(&coalgebra_extend(&c).unwrap()).unwrap())
}

/// The flip on `k²` with the character `(1, 2)`.
pub fn flip2() -> ZSpace {
    let mut s = koszul_braiding(&[0, 0]);
    s.add_character("eps", vec![z(1), z(2)]).unwrap();
    ready(s)
}

// ---------------------------------------------------------------------------
// Digit helpers

pub fn digits(mut flat: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = flat % d;
        flat /= d;
    }
    out
}

pub fn flatten(word: &[usize], d: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * d + x)
}

/// A matrix assembled column by column from `(row word, coefficient)` images of each
/// basis word of length `n` over `d` letters.
pub fn from_words<R: Scalar>(d: usize, n: usize, out_len: usize, image: impl Fn(&[usize]) -> Vec<(Vec<usize>, R)>) -> SparseLinearMap<R> {
    let rows = d.pow(out_len as u32);
    let mut triplets = Vec::new();
    for col in 0..d.pow(n as u32) {
        for (word, c) in image(&digits(col, d, n)) {
            assert_eq!(word.len(), out_len);
            triplets.push((flatten(&word, d), col, c));
        }
    }
    SparseLinearMap::from_triplets(rows, d.pow(n as u32), triplets).unwrap()
}

/// Words over the letters `letters` of length `n`, in lexicographic order.
pub fn words(letters: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// The matrix of a map between spans of words over `letters`, words indexed in
/// lexicographic order; image terms outside the target span are dropped.
pub fn on_words<R: Scalar>(
    letters: &[usize],
    n: usize,
    out_len: usize,
    image: impl Fn(&[usize]) -> Vec<(Vec<usize>, R)>,
) -> SparseLinearMap<R> {
    let src = words(letters, n);
    let dst = words(letters, out_len);
    let pos = |w: &[usize]| dst.iter().position(|x| x.as_slice() == w);
    let mut triplets = Vec::new();
    for (col, w) in src.iter().enumerate() {
        for (word, c) in image(w) {
            if let Some(row) = pos(&word) {
                triplets.push((row, col, c));
            }
        }
    }
    SparseLinearMap::from_triplets(dst.len(), src.len(), triplets).unwrap()
}

pub fn sign<R: Scalar>(odd: bool) -> R {
    if odd {
        -R::one()
    } else {
        R::one()
    }
}

// ---------------------------------------------------------------------------
// Shelf formulas

/// `Σ(−1)^{i−1} ε(a_i) (a₁⊲a_i, …, a_{i−1}⊲a_i, a_{i+1}, …, a_n)`.
pub fn shelf_left(t: &ShelfTable, eps: &[Integer], n: usize) -> SparseLinearMap<Integer> {
    from_words(t.size(), n, n - 1, |a| {
        (0..n)
            .map(|i| {
                let mut w: Vec<usize> = a[..i].iter().map(|&x| t.op(x, a[i])).collect();
                w.extend_from_slice(&a[i + 1..]);
                (w, sign::<Integer>(i % 2 == 1) * eps[a[i]].clone())
            })
            .collect()
    })
}

/// `Σ(−1)^{i−1} ζ(a_i) (a₁, …, â_i, …, a_n)`.
pub fn shelf_right(t: &ShelfTable, zeta: &[Integer], n: usize) -> SparseLinearMap<Integer> {
    from_words(t.size(), n, n - 1, |a| {
        (0..n)
            .map(|i| {
                let mut w = a[..i].to_vec();
                w.extend_from_slice(&a[i + 1..]);
                (w, sign::<Integer>(i % 2 == 1) * zeta[a[i]].clone())
            })
            .collect()
    })
}

pub fn rack_boundary(t: &ShelfTable, n: usize) -> SparseLinearMap<Integer> {
    let one = vec![z(1); t.size()];
    shelf_left(t, &one, n).sub(&shelf_right(t, &one, n)).unwrap()
}

// ---------------------------------------------------------------------------
// Algebra formulas

pub fn product_terms<R: Scalar>(a: &AlgebraData<R>, x: usize, y: usize) -> Vec<(usize, R)> {
    a.product(x, y).to_vec()
}

/// `ε(v₁)v₂…vₙ + Σ_{i<n}(−1)^i v₁…(v_i v_{i+1})…vₙ + (−1)ⁿ ζ(vₙ)v₁…v_{n−1}` on words
/// over the non-unit letters, dropping terms that contain the unit.
pub fn group_boundary(a: &AlgebraData<Integer>, eps: &[Integer], zeta: &[Integer], n: usize) -> SparseLinearMap<Integer> {
    let letters = a.non_unit_indices();
    on_words(&letters, n, n - 1, |v| {
        let mut out = vec![(v[1..].to_vec(), eps[v[0]].clone())];
        for i in 0..n - 1 {
            for (p, c) in product_terms(a, v[i], v[i + 1]) {
                let mut w = v[..i].to_vec();
                w.push(p);
                w.extend_from_slice(&v[i + 2..]);
                out.push((w, sign::<Integer>(i % 2 == 0) * c));
            }
        }
        out.push((v[..n - 1].to_vec(), sign::<Integer>(n % 2 == 1) * zeta[v[n - 1]].clone()));
        out
    })
}

/// `Σ_{i<n}(−1)^i v₁…(v_i v_{i+1})…vₙ` on words over the non-unit letters.
pub fn bar_boundary(a: &AlgebraData<Integer>, n: usize) -> SparseLinearMap<Integer> {
    let letters = a.non_unit_indices();
    on_words(&letters, n, n - 1, |v| {
        let mut out = Vec::new();
        for i in 0..n - 1 {
            for (p, c) in product_terms(a, v[i], v[i + 1]) {
                let mut w = v[..i].to_vec();
                w.push(p);
                w.extend_from_slice(&v[i + 2..]);
                out.push((w, sign::<Integer>(i % 2 == 0) * c));
            }
        }
        out
    })
}

/// The bracket sum `Σ_{i<j}(−1)^{j−1+α_{ij}} v₁…[v_i,v_j]…v̂_j…vₙ` on words over the
/// non-unit letters, `α_{ij} = |v_j|Σ_{i<k<j}|v_k|`.
pub fn leibniz_boundary(a: &AlgebraData<Integer>, grading: &[i64], n: usize) -> SparseLinearMap<Integer> {
    let letters = a.non_unit_indices();
    on_words(&letters, n, n - 1, |v| {
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..j {
                let alpha: i64 = grading[v[j]] * v[i + 1..j].iter().map(|&k| grading[k]).sum::<i64>();
                let s = sign::<Integer>((j as i64 + alpha).rem_euclid(2) == 1);
                for (p, c) in product_terms(a, v[i], v[j]) {
                    let mut w = v[..i].to_vec();
                    w.push(p);
                    w.extend(v[i + 1..j].iter().copied());
                    w.extend_from_slice(&v[j + 1..]);
                    out.push((w, s.clone() * c));
                }
            }
        }
        out
    })
}

/// Textbook Hochschild boundary of `A` with coefficients in itself on `A⊗Ā^{⊗n}`,
/// `Ā` spanned by the non-unit basis vectors:
/// `a₀a₁⊗… + Σ(−1)^i a₀⊗…a_i a_{i+1}… + (−1)ⁿ aₙa₀⊗…`.
pub fn hochschild_boundary(a: &AlgebraData<Integer>, n: usize) -> SparseLinearMap<Integer> {
    let bar = a.non_unit_indices();
    let all: Vec<usize> = (0..a.dim()).collect();
    let src: Vec<Vec<usize>> =
        all.iter().flat_map(|&m| words(&bar, n).into_iter().map(move |mut w| {
            w.insert(0, m);
            w
        })).collect();
    let dst: Vec<Vec<usize>> =
        all.iter().flat_map(|&m| words(&bar, n - 1).into_iter().map(move |mut w| {
            w.insert(0, m);
            w
        })).collect();
    let mut triplets = Vec::new();
    for (col, v) in src.iter().enumerate() {
        let mut push = |w: Vec<usize>, c: Integer| {
            if let Some(row) = dst.iter().position(|x| *x == w) {
                triplets.push((row, col, c));
            }
        };
        for i in 0..n {
            for (p, c) in product_terms(a, v[i], v[i + 1]) {
                let mut w = v[..i].to_vec();
                w.push(p);
                w.extend_from_slice(&v[i + 2..]);
                push(w, sign::<Integer>(i % 2 == 1) * c);
            }
        }
        for (p, c) in product_terms(a, v[n], v[0]) {
            let mut w = vec![p];
            w.extend_from_slice(&v[1..n]);
            push(w, sign::<Integer>(n % 2 == 1) * c);
        }
    }
    SparseLinearMap::from_triplets(dst.len(), src.len(), triplets).unwrap()
}

/// `Σ_{i=1}^n (−1)^i v₁…Δ(v_i)…vₙ` on words over the non-counit letters, dropping
/// terms that contain the group-like.
pub fn cobar_coboundary(c: &AlgebraData<Integer>, n: usize) -> SparseLinearMap<Integer> {
    let letters = c.non_unit_indices();
    let d = c.dim();
    let delta = c.structure();
    on_words(&letters, n, n + 1, |v| {
        let mut out = Vec::new();
        for i in 0..n {
            for (row, x) in delta.column(v[i]) {
                let mut w = v[..i].to_vec();
                w.push(row / d);
                w.push(row % d);
                w.extend_from_slice(&v[i + 1..]);
                out.push((w, sign::<Integer>(i % 2 == 0) * x.clone()));
            }
        }
        out
    })
}

pub fn basis_vector<R: Scalar>(i: usize, dim: usize) -> SparseLinearMap<R> {
    let v: SparseVec<R> = [(i, R::one())].into_iter().collect();
    SparseLinearMap::vector(&v, dim)
}
