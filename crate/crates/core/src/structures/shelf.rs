use crate::braiding::PreBraidedSpace;
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap};

use super::StructurePayload;

/// Name of the constant character `ε ≡ 1` installed on shelf braidings.
pub const SHELF_COUNIT: &str = "one";

/// A binary operation on `{0, …, m-1}`, `table[a][b] = a ⊲ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShelfTable {
    table: Vec<Vec<usize>>,
}

impl ShelfTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let m = table.len();
        for (a, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidInput(format!("row {a} of the shelf table has {} entries, expected {m}", row.len())));
            }
            if let Some((b, v)) = row.iter().enumerate().find(|(_, v)| **v >= m) {
                return Err(Error::InvalidInput(format!("table[{a}][{b}] = {v} is outside 0..{m}")));
            }
        }
        Ok(ShelfTable { table })
    }

    /// Builds the table of `op` on `m` elements.
    pub fn from_fn(m: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        ShelfTable { table: (0..m).map(|a| (0..m).map(|b| op(a, b) % m).collect()).collect() }
    }

    /// The trivial shelf `a ⊲ b = a`.
    pub fn trivial(m: usize) -> Self {
        Self::from_fn(m, |a, _| a)
    }

    /// The dihedral quandle `a ⊲ b = 2b − a mod m`.
    pub fn dihedral(m: usize) -> Self {
        Self::from_fn(m, |a, b| (2 * b + m - a) % m)
    }

    /// The cyclic rack `a ⊲ b = a + 1 mod m`.
    pub fn cyclic_rack(m: usize) -> Self {
        Self::from_fn(m, |a, _| (a + 1) % m)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `a ⊲̃ b`, the inverse of the right translation by `b`, if it is bijective.
    pub fn inverse_op(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.size()).find(|x| self.op(*x, b) == a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShelfReport {
    pub self_distributive: bool,
    pub rack: bool,
    pub idempotent: bool,
    pub quandle: bool,
    pub spindle: bool,
    /// First `(a, b, c)` with `(a⊲b)⊲c ≠ (a⊲c)⊲(b⊲c)`.
    pub sd_violation: Option<(usize, usize, usize)>,
    /// First `b` whose right translation is not bijective.
    pub rack_violation: Option<usize>,
    /// First `a` with `a⊲a ≠ a`.
    pub idempotence_violation: Option<usize>,
}

pub fn check_shelf(t: &ShelfTable) -> ShelfReport {
    let m = t.size();
    let mut sd_violation = None;
    'outer: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if t.op(t.op(a, b), c) != t.op(t.op(a, c), t.op(b, c)) {
                    sd_violation = Some((a, b, c));
                    break 'outer;
                }
            }
        }
    }
    let rack_violation = (0..m).find(|&b| {
        let mut seen = vec![false; m];
        (0..m).any(|a| std::mem::replace(&mut seen[t.op(a, b)], true))
    });
    let idempotence_violation = (0..m).find(|&a| t.op(a, a) != a);
    let self_distributive = sd_violation.is_none();
    let rack = self_distributive && rack_violation.is_none();
    let idempotent = idempotence_violation.is_none();
    ShelfReport {
        self_distributive,
        rack,
        idempotent,
        quandle: rack && idempotent,
        spindle: self_distributive && idempotent,
        sd_violation,
        rack_violation,
        idempotence_violation,
    }
}

/// `σ(a⊗b) = b⊗(a⊲b)`, with the character `ε ≡ 1` and the diagonal `Δ(a) = a⊗a`.
pub fn shelf_braiding<R: Scalar>(t: &ShelfTable) -> PreBraidedSpace<R> {
    let m = t.size();
    let entries = (0..m).flat_map(|a| (0..m).map(move |b| (b * m + t.op(a, b), a * m + b, R::one())));
    let sigma = SparseLinearMap::from_triplets(m * m, m * m, entries).expect("indices in range");
    let mut space = PreBraidedSpace::new(m, sigma).expect("square braiding");
    space.add_character(SHELF_COUNIT, vec![R::one(); m]).expect("length m");
    space.set_comultiplication(diagonal_comultiplication(m)).expect("shape");
    space.set_payload(StructurePayload::Shelf(t.clone()));
    space
}

/// `Δ_D(a) = a⊗a`.
pub fn diagonal_comultiplication<R: Scalar>(m: usize) -> SparseLinearMap<R> {
    SparseLinearMap::from_triplets(m * m, m, (0..m).map(|a| (a * m + a, a, R::one()))).expect("indices in range")
}

/// The Dirac covector `δ_{a,·}`; needs `a⊲a = a` and `b⊲a ≠ a` for `b ≠ a`.
pub fn dirac_character<R: Scalar>(t: &ShelfTable, a: usize) -> Result<Vec<R>> {
    let m = t.size();
    if a >= m {
        return Err(Error::InvalidInput(format!("element {a} outside a shelf of size {m}")));
    }
    if t.op(a, a) != a {
        return Err(Error::Structure(format!("{a} is not idempotent: {a}⊲{a} = {}", t.op(a, a))));
    }
    if let Some(b) = (0..m).find(|&b| b != a && t.op(b, a) == a) {
        return Err(Error::Structure(format!("{b}⊲{a} = {a} with {b} ≠ {a}")));
    }
    let mut v = vec![R::zero(); m];
    v[a] = R::one();
    Ok(v)
}

/// The constant covector with value `value` (a twist parameter specialized to a scalar).
pub fn twist_character<R: Scalar>(m: usize, value: R) -> Result<Vec<R>> {
    if !value.is_unit() {
        return Err(Error::Structure(format!("twist parameter {value} is not invertible")));
    }
    Ok(vec![value; m])
}

/// The 4-element tetrahedral quandle `a⊲b = ωa + ω²b` over `F_4 = {0, 1, ω, ω²}`.
pub fn tetrahedral_quandle() -> ShelfTable {
    // Elements encoded as 2-bit polynomials in ω over F_2: 0, 1, ω = 2, ω² = ω + 1 = 3.
    fn mul(x: usize, y: usize) -> usize {
        let mut r = 0usize;
        for k in 0..2 {
            if y >> k & 1 == 1 {
                r ^= x << k;
            }
        }
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    }
    ShelfTable::from_fn(4, |a, b| mul(2, a) ^ mul(3, b))
}
