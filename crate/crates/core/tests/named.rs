mod common;

use braidhom::complexes::{left_diff_with, named_complex, NamedComplex, NamedParams};
use braidhom::structures::{
    assoc_braiding, dirac_character, dual_algebra, leibniz_braiding, sl2, adjoin_unit, AlgebraData, AlgebraKind, ShelfTable,
};
use braidhom::{Integer, ZComplex, ZSpace};
use common::*;

fn build(space: &ZSpace, name: NamedComplex, n_max: usize) -> ZComplex {
    named_complex(space, name, n_max, &NamedParams::default()).unwrap()
}

fn assert_boundaries(c: &ZComplex, oracle: impl Fn(usize) -> braidhom::ZMap, degrees: std::ops::RangeInclusive<usize>) {
    for n in degrees {
        let got = c.map_from(n).unwrap_or_else(|| panic!("no map out of degree {n}"));
        let want = oracle(n);
        assert_eq!(got.shape(), want.shape(), "shape in degree {n}");
        assert!(got.first_mismatch(&want).is_none(), "degree {n}: {:?}", got.first_mismatch(&want));
    }
}

#[test]
fn names_round_trip() {
    for c in NamedComplex::ALL {
        assert_eq!(c.name().parse::<NamedComplex>().unwrap(), c);
    }
    assert!("homfly".parse::<NamedComplex>().is_err());
}

#[test]
fn rack_and_shelf_of_r3_match_formulas() {
    let t = ShelfTable::dihedral(3);
    let s = r3();
    let one = vec![z(1); 3];
    assert_boundaries(&build(&s, NamedComplex::Rack, 4), |n| rack_boundary(&t, n), 1..=4);
    assert_boundaries(&build(&s, NamedComplex::Shelf, 4), |n| shelf_left(&t, &one, n), 1..=4);
}

#[test]
fn rack_boundary_in_degree_two() {
    let c = build(&r3(), NamedComplex::Rack, 2);
    let d2 = c.map_from(2).unwrap();
    // (0,1) ↦ (0) − (0⊲1) = e₀ − e₂
    let col = flatten(&[0, 1], 3);
    assert_eq!(d2.get(0, col), z(1));
    assert_eq!(d2.get(2, col), z(-1));
    assert_eq!(d2.get(1, col), z(0));
}

#[test]
fn quandle_complex_is_rack_modulo_degenerate_words() {
    let t = ShelfTable::dihedral(3);
    let c = build(&r3(), NamedComplex::Quandle, 4);
    let letters = [0, 1, 2];
    let nondeg = |n: usize| -> Vec<Vec<usize>> { words(&letters, n).into_iter().filter(|w| w.windows(2).all(|p| p[0] != p[1])).collect() };
    for n in 1..=4 {
        let src = nondeg(n);
        let dst = nondeg(n - 1);
        let full = rack_boundary(&t, n);
        let mut triplets = Vec::new();
        for (col, w) in src.iter().enumerate() {
            for (row, v) in dst.iter().enumerate() {
                let x = full.get(flatten(v, 3), flatten(w, 3));
                if x != z(0) {
                    triplets.push((row, col, x));
                }
            }
        }
        let want = braidhom::ZMap::from_triplets(dst.len(), src.len(), triplets).unwrap();
        assert!(c.map_from(n).unwrap().first_mismatch(&want).is_none(), "degree {n}");
    }
}

#[test]
fn quandle_complex_requires_idempotence() {
    let s = ready(braidhom::structures::shelf_braiding::<Integer>(&ShelfTable::cyclic_rack(3)));
    assert!(named_complex(&s, NamedComplex::Quandle, 2, &NamedParams::default()).is_err());
    assert!(named_complex(&s, NamedComplex::Rack, 2, &NamedParams::default()).is_ok());
}

#[test]
fn twisted_rack_specializes_the_right_term() {
    let t = ShelfTable::dihedral(3);
    let params = NamedParams { twist: Some(z(-1)), ..NamedParams::default() };
    let c = named_complex(&r3(), NamedComplex::TwistedRack, 4, &params).unwrap();
    let one = vec![z(1); 3];
    let minus = vec![z(-1); 3];
    assert_boundaries(&c, |n| shelf_left(&t, &one, n).sub(&shelf_right(&t, &minus, n)).unwrap(), 1..=4);
    let bad = NamedParams { twist: Some(z(2)), ..NamedParams::default() };
    assert!(named_complex(&r3(), NamedComplex::TwistedRack, 2, &bad).is_err());
}

#[test]
fn partial_derivative_uses_the_dirac_covector() {
    let t = ShelfTable::dihedral(3);
    let params = NamedParams { dirac: Some(1), ..NamedParams::default() };
    let c = named_complex(&r3(), NamedComplex::PartialDerivative, 4, &params).unwrap();
    let phi: Vec<Integer> = dirac_character(&t, 1).unwrap();
    assert_eq!(phi, vec![z(0), z(1), z(0)]);
    assert_boundaries(&c, |n| shelf_left(&t, &phi, n), 1..=4);
}

#[test]
fn koszul_complex_on_the_flip() {
    let c = build(&flip2(), NamedComplex::Koszul, 4);
    let eps = [z(1), z(2)];
    let oracle = |n: usize| {
        from_words(2, n, n - 1, |v| {
            (0..n)
                .map(|i| {
                    let mut w = v[..i].to_vec();
                    w.extend_from_slice(&v[i + 1..]);
                    (w, sign::<Integer>(i % 2 == 1) * eps[v[i]].clone())
                })
                .collect()
        })
    };
    assert_boundaries(&c, oracle, 1..=4);
    assert!(named_complex(&r3(), NamedComplex::Koszul, 2, &NamedParams::default()).is_err());
}

#[test]
fn group_complex_of_z2() {
    let a = z2_algebra();
    let c = build(&z2(), NamedComplex::Group, 4);
    let aug = a.characters()["aug"].clone();
    assert_boundaries(&c, |n| group_boundary(&a, &aug, &aug, n), 1..=4);
}

#[test]
fn bar_complex_of_dual_numbers_vanishes() {
    let c = build(&dual_numbers(), NamedComplex::Bar, 4);
    for n in 1..=4 {
        assert_eq!(c.rank(n), 1);
        let d = c.map_from(n).unwrap();
        assert!(d.is_zero(), "x⊗…⊗x has zero boundary since x² = 0");
    }
}

#[test]
fn bar_complex_matches_formula() {
    for k in [2, 3, 4] {
        let a = truncated(k);
        let s = ready(assoc_braiding(&a).unwrap());
        let c = build(&s, NamedComplex::Bar, 4);
        assert_boundaries(&c, |n| bar_boundary(&a, n), 2..=4);
    }
}

#[test]
fn bar_complex_of_an_adjoined_unit() {
    // A non-unital algebra with one generator x, x·x = x (so V' = span{x}).
    let base = AlgebraData::from_constants(AlgebraKind::Associative, 1, None, vec![(0, 0, 0, z(1))]).unwrap();
    let a = adjoin_unit(&base).unwrap();
    let s = ready(assoc_braiding(&a).unwrap());
    let c = build(&s, NamedComplex::Bar, 4);
    assert_boundaries(&c, |n| bar_boundary(&a, n), 2..=4);
}

#[test]
fn leibniz_complexes_match_the_bracket_formula() {
    let a = adjoin_unit(&sl2::<Integer>()).unwrap();
    let s = ready(leibniz_braiding(&a).unwrap());
    let zeros = vec![0; 4];
    assert_boundaries(&build(&s, NamedComplex::Leibniz, 3), |n| leibniz_boundary(&a, &zeros, n), 1..=3);

    let b = leibniz_xy();
    assert_boundaries(&build(&leibniz_xy_space(), NamedComplex::Leibniz, 4), |n| leibniz_boundary(&b, &[0, 0, 0], n), 1..=4);
}

#[test]
fn graded_leibniz_signs() {
    // x even, y and w odd; [y,w] = x, [w,y] = 2x, [y,y] = x. Every double bracket vanishes.
    let base = AlgebraData::from_constants(
        AlgebraKind::Leibniz,
        3,
        None,
        vec![(1, 2, 0, z(1)), (2, 1, 0, z(2)), (1, 1, 0, z(1))],
    )
    .unwrap()
    .with_grading(vec![0, 1, 1])
    .unwrap();
    let a = adjoin_unit(&base).unwrap();
    let s = ready(leibniz_braiding(&a).unwrap());
    let grading = a.grading().unwrap().to_vec();
    let c = build(&s, NamedComplex::GradedLeibniz, 4);
    assert_boundaries(&c, |n| leibniz_boundary(&a, &grading, n), 1..=4);
    let ungraded = leibniz_boundary(&a, &[0; 4], 3);
    assert_ne!(c.map_from(3).unwrap(), &ungraded, "the α signs must matter on this fixture");
}

#[test]
fn graded_leibniz_without_degrees_is_leibniz() {
    let s = leibniz_xy_space();
    let g = build(&s, NamedComplex::GradedLeibniz, 4);
    let l = build(&s, NamedComplex::Leibniz, 4);
    for n in 1..=4 {
        assert_eq!(g.map_from(n), l.map_from(n));
    }
}

#[test]
fn cobar_matches_formula() {
    for k in [2, 3, 4] {
        let c = truncated_coalgebra(k);
        let s = coalgebra_space(k);
        let cx = build(&s, NamedComplex::Cobar, 4);
        assert!(cx.is_cochain());
        assert_boundaries(&cx, |n| cobar_coboundary(&c, n), 1..=3);
    }
}

#[test]
fn cobar_is_the_transposed_bar_complex() {
    for k in [2, 3] {
        let cobar = build(&coalgebra_space(k), NamedComplex::Cobar, 4);
        let a = dual_algebra(&truncated_coalgebra(k)).unwrap().with_character("aug", truncated(k).characters()["aug"].clone()).unwrap();
        let bar = build(&ready(assoc_braiding(&a).unwrap()), NamedComplex::Bar, 4);
        for n in 1..=4 {
            assert_eq!(cobar.map_from(n - 1).unwrap(), &bar.map_from(n).unwrap().transpose(), "degree {n}");
        }
    }
}

#[test]
fn hochschild_matches_textbook_boundary() {
    for (a, s) in [(z2_algebra(), z2()), (truncated(2), dual_numbers()), (truncated(3), ready(assoc_braiding(&truncated(3)).unwrap()))] {
        let c = build(&s, NamedComplex::Hochschild, 4);
        assert_boundaries(&c, |n| hochschild_boundary(&a, n), 1..=4);
    }
}

#[test]
fn cartier_is_the_transposed_hochschild_complex_of_the_dual() {
    let cart = build(&coalgebra_space(3), NamedComplex::Cartier, 3);
    assert!(cart.is_cochain());
    let a = dual_algebra(&truncated_coalgebra(3)).unwrap();
    for n in 1..=3 {
        assert_eq!(cart.map_from(n - 1).unwrap(), &hochschild_boundary(&a, n).transpose(), "degree {n}");
    }
}

#[test]
fn structural_mismatches_are_rejected() {
    let p = NamedParams::default();
    assert!(named_complex(&z2(), NamedComplex::Rack, 2, &p).is_err());
    assert!(named_complex(&r3(), NamedComplex::Bar, 2, &p).is_err());
    assert!(named_complex(&r3(), NamedComplex::Cobar, 2, &p).is_err());
    assert!(named_complex(&z2(), NamedComplex::Leibniz, 2, &p).is_err());
    // Unit covector of kℤ/2 is not multiplicative, so the reduced bar complex is undefined.
    assert!(named_complex(&z2(), NamedComplex::Bar, 2, &p).is_err());
}

#[test]
fn degree_cap_is_enforced() {
    let p = NamedParams { degree_cap: 50, ..NamedParams::default() };
    let err = named_complex(&r3(), NamedComplex::Rack, 4, &p).unwrap_err();
    assert!(matches!(err, braidhom::Error::ResourceCap { degree: 4, .. }), "{err}");
}

#[test]
fn leibniz_named_complex_agrees_with_restricted_left_differential() {
    let s = leibniz_xy_space();
    let c = build(&s, NamedComplex::Leibniz, 3);
    let unit = leibniz_xy().unit().unwrap();
    let mut eps = vec![z(0); 3];
    eps[unit] = z(1);
    for n in 1..=3 {
        let full = left_diff_with(&s, &eps, n).unwrap();
        let keep = |m: usize| -> Vec<usize> { (0..3usize.pow(m as u32)).filter(|&i| !digits(i, 3, m).contains(&unit)).collect() };
        assert_eq!(c.map_from(n).unwrap(), &full.submatrix(&keep(n - 1), &keep(n)));
    }
}
