//! Chain complexes with verified `d² = 0`, their homology over fields and over the
//! integers, contracting-homotopy certificates and subquotients by coordinate spans.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::braiding::PreBraidedSpace;
use crate::complexes::{named_complex, DifferentialSpec};
use crate::error::{Error, Result};
use crate::exactlin::{rank_over_fp, smith_normal_form, Scalar, SparseLinearMap};
use crate::report::IdentityCheck;

/// Largest chain group assembled by default.
pub const DEFAULT_DEGREE_CAP: usize = 200_000;

/// Refuses chain groups above `cap`.
pub fn check_degree_cap(ranks: &[usize], cap: usize) -> Result<()> {
    match ranks.iter().enumerate().find(|(_, r)| **r > cap) {
        Some((degree, size)) => Err(Error::ResourceCap { degree, size: *size, cap }),
        None => Ok(()),
    }
}

/// Graded free modules of ranks `ranks[0..=n_max]` with maps changing degree by `step`
/// (`−1` for chain complexes, `+1` for cochain complexes, `−k` for hyper-boundaries).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<R: Scalar> {
    ranks: Vec<usize>,
    maps: BTreeMap<usize, SparseLinearMap<R>>,
    step: isize,
    provenance: String,
}

impl<R: Scalar> ChainComplex<R> {
    /// Checks shapes and `d∘d = 0`; `maps` is keyed by source degree.
    pub fn new(ranks: Vec<usize>, maps: BTreeMap<usize, SparseLinearMap<R>>, step: isize, provenance: impl Into<String>) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidInput("a differential must change the degree".into()));
        }
        for (&n, map) in &maps {
            let target = n as isize + step;
            if target < 0 || target as usize >= ranks.len() || n >= ranks.len() {
                return Err(Error::Shape(format!("map from degree {n} leaves the range 0..={}", ranks.len().saturating_sub(1))));
            }
            if map.shape() != (ranks[target as usize], ranks[n]) {
                return Err(Error::Shape(format!(
                    "map from degree {n} is {}x{}, expected {}x{}",
                    map.rows(),
                    map.cols(),
                    ranks[target as usize],
                    ranks[n]
                )));
            }
        }
        let c = ChainComplex { ranks, maps, step, provenance: provenance.into() };
        c.verify_square_zero()?;
        Ok(c)
    }

    /// A chain complex from `∂_1, …, ∂_N`, where `∂_n` leaves degree `n`.
    pub fn chain(ranks: Vec<usize>, boundaries: Vec<SparseLinearMap<R>>, provenance: impl Into<String>) -> Result<Self> {
        let maps = boundaries.into_iter().enumerate().map(|(i, m)| (i + 1, m)).collect();
        Self::new(ranks, maps, -1, provenance)
    }

    /// A cochain complex from `δ^0, …, δ^{N−1}`, where `δ^n` leaves degree `n`.
    pub fn cochain(ranks: Vec<usize>, coboundaries: Vec<SparseLinearMap<R>>, provenance: impl Into<String>) -> Result<Self> {
        let maps = coboundaries.into_iter().enumerate().collect();
        Self::new(ranks, maps, 1, provenance)
    }

    fn verify_square_zero(&self) -> Result<()> {
        for (&n, map) in &self.maps {
            let target = (n as isize + self.step) as usize;
            if let Some(next) = self.maps.get(&target) {
                let sq = next.compose(map)?;
                if let Some((row, col, value)) = sq.first_nonzero() {
                    return Err(Error::NonZeroSquare { degree: n, row, col, value: value.to_string() });
                }
            }
        }
        Ok(())
    }

    pub fn n_max(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn step(&self) -> isize {
        self.step
    }

    pub fn is_cochain(&self) -> bool {
        self.step > 0
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    /// The map leaving degree `n`, if stored.
    pub fn map_from(&self, n: usize) -> Option<&SparseLinearMap<R>> {
        self.maps.get(&n)
    }

    /// The map arriving in degree `n`, if stored.
    pub fn map_into(&self, n: usize) -> Option<&SparseLinearMap<R>> {
        let source = n as isize - self.step;
        if source < 0 {
            None
        } else {
            self.maps.get(&(source as usize))
        }
    }

    /// `∂_n` of a chain complex, or `δ^n` of a cochain complex.
    pub fn maps(&self) -> impl Iterator<Item = (usize, &SparseLinearMap<R>)> {
        self.maps.iter().map(|(n, m)| (*n, m))
    }

    /// Whether homology in degree `n` depends on a map beyond the stored range.
    pub fn is_truncated(&self, n: usize) -> bool {
        n + self.step.unsigned_abs() > self.n_max()
    }

    pub fn map_scalars<S: Scalar>(&self, f: impl Fn(&R) -> S + Copy) -> ChainComplex<S> {
        ChainComplex {
            ranks: self.ranks.clone(),
            maps: self.maps.iter().map(|(n, m)| (*n, m.map_scalars(f))).collect(),
            step: self.step,
            provenance: self.provenance.clone(),
        }
    }

    /// The dual complex: every map transposed, degree change reversed.
    pub fn transpose(&self) -> Result<Self> {
        let maps = self.maps.iter().map(|(n, m)| (((*n as isize) + self.step) as usize, m.transpose())).collect();
        ChainComplex::new(self.ranks.clone(), maps, -self.step, format!("dual of {}", self.provenance))
    }

    /// Keeps degrees `0..=n`.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.n_max());
        ChainComplex {
            ranks: self.ranks[..=n].to_vec(),
            maps: self
                .maps
                .iter()
                .filter(|(s, _)| {
                    let t = **s as isize + self.step;
                    **s <= n && t >= 0 && t as usize <= n
                })
                .map(|(s, m)| (*s, m.clone()))
                .collect(),
            step: self.step,
            provenance: self.provenance.clone(),
        }
    }
}

impl<R: Scalar> ChainComplex<R> {
    /// Over the integers, for rings whose entries are integral.
    pub fn to_integer(&self) -> Result<ChainComplex<BigInt>> {
        let mut maps = BTreeMap::new();
        for (n, m) in &self.maps {
            let z = m
                .try_map_scalars(|v| {
                    let r = v.to_rational();
                    r.is_integer().then(|| r.numer().clone())
                })
                .ok_or_else(|| Error::InvalidInput(format!("map from degree {n} has non-integral entries")))?;
            maps.insert(*n, z);
        }
        Ok(ChainComplex { ranks: self.ranks.clone(), maps, step: self.step, provenance: self.provenance.clone() })
    }
}

/// Builds boundaries for degrees up to `n_max` and verifies `d² = 0`.
pub fn assemble<R: Scalar>(space: &PreBraidedSpace<R>, spec: &DifferentialSpec<R>, n_max: usize) -> Result<ChainComplex<R>> {
    assemble_with_cap(space, spec, n_max, DEFAULT_DEGREE_CAP)
}

pub fn assemble_with_cap<R: Scalar>(
    space: &PreBraidedSpace<R>,
    spec: &DifferentialSpec<R>,
    n_max: usize,
    cap: usize,
) -> Result<ChainComplex<R>> {
    if n_max == 0 {
        return Err(Error::InvalidInput("the maximal degree must be at least 1".into()));
    }
    if let DifferentialSpec::Named { name, params } = spec {
        let mut params = params.clone();
        params.degree_cap = cap;
        return named_complex(space, *name, n_max, &params);
    }
    let ranks: Vec<usize> = (0..=n_max).map(|n| spec.rank(space, n)).collect();
    check_degree_cap(&ranks, cap)?;
    let k = spec.degree_drop();
    let maps: Vec<(usize, SparseLinearMap<R>)> =
        (k.max(1)..=n_max).into_par_iter().map(|n| spec.boundary(space, n).map(|m| (n, m))).collect::<Result<_>>()?;
    ChainComplex::new(ranks, maps.into_iter().collect(), -(k as isize), spec.describe())
}

/// Homology of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: usize,
    /// Rank of the chain group.
    pub chain_rank: usize,
    pub betti: usize,
    /// Invariant factors `> 1`, sorted by divisibility (integral homology only).
    pub torsion: Vec<BigInt>,
    pub map_out: Option<(usize, usize)>,
    pub map_in: Option<(usize, usize)>,
    pub rank_out: usize,
    pub rank_in: usize,
    /// Homology here needs a map beyond the assembled range; only cycles are exact.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// `"Z"`, `"Q"` or `"F_p"`.
    pub ring: String,
    pub provenance: String,
    pub cochain: bool,
    pub degrees: Vec<DegreeHomology>,
    pub elapsed: Duration,
}

impl HomologyReport {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn degree(&self, n: usize) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == n)
    }

    /// Degrees whose homology is fully determined by the assembled maps.
    pub fn exact_degrees(&self) -> impl Iterator<Item = &DegreeHomology> {
        self.degrees.iter().filter(|d| !d.truncated)
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.cochain { "H^" } else { "H_" };
        writeln!(f, "{} over {}", self.provenance, self.ring)?;
        for d in &self.degrees {
            write!(f, "  {letter}{} = ", d.degree)?;
            let mut parts = Vec::new();
            match d.betti {
                0 => {}
                1 => parts.push(self.ring.clone()),
                b => parts.push(format!("{}^{b}", self.ring)),
            }
            for t in &d.torsion {
                parts.push(format!("Z/{t}"));
            }
            if parts.is_empty() {
                parts.push("0".into());
            }
            write!(f, "{}", parts.join(" + "))?;
            if d.truncated {
                write!(f, "  (cycles only: the next map is beyond the assembled range)")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn report_from_ranks<R: Scalar>(
    c: &ChainComplex<R>,
    ring: String,
    ranks: &BTreeMap<usize, usize>,
    torsion: &BTreeMap<usize, Vec<BigInt>>,
    started: Instant,
) -> HomologyReport {
    let degrees = (0..=c.n_max())
        .map(|n| {
            let out_src = c.map_from(n).map(|_| n);
            let in_src = ((n as isize) - c.step()).try_into().ok().filter(|s: &usize| c.map_from(*s).is_some());
            let rank_out = out_src.map_or(0, |s| ranks[&s]);
            let rank_in = in_src.map_or(0, |s| ranks[&s]);
            DegreeHomology {
                degree: n,
                chain_rank: c.rank(n),
                betti: c.rank(n) - rank_out - rank_in,
                torsion: in_src.and_then(|s| torsion.get(&s).cloned()).unwrap_or_default(),
                map_out: c.map_from(n).map(|m| m.shape()),
                map_in: c.map_into(n).map(|m| m.shape()),
                rank_out,
                rank_in,
                truncated: c.is_truncated(n),
            }
        })
        .collect();
    HomologyReport { ring, provenance: c.provenance().to_string(), cochain: c.is_cochain(), degrees, elapsed: started.elapsed() }
}

/// Betti numbers over the fraction field of the coefficient ring.
pub fn betti<R: Scalar>(c: &ChainComplex<R>) -> HomologyReport {
    let started = Instant::now();
    let ranks: BTreeMap<usize, usize> = c.maps.par_iter().map(|(n, m)| (*n, m.rank())).collect();
    let ring = if R::characteristic() == 0 { "Q".to_string() } else { R::ring_name() };
    report_from_ranks(c, ring, &ranks, &BTreeMap::new(), started)
}

/// Betti numbers over `F_p` of a rational complex, reducing entries mod `p`.
pub fn betti_mod_p(c: &ChainComplex<BigRational>, p: u64) -> Result<HomologyReport> {
    let started = Instant::now();
    let ranks: BTreeMap<usize, usize> = c
        .maps
        .par_iter()
        .map(|(n, m)| rank_over_fp(m, p).map(|r| (*n, r)).map_err(Error::from))
        .collect::<Result<_>>()?;
    Ok(report_from_ranks(c, format!("F_{p}"), &ranks, &BTreeMap::new(), started))
}

/// `H_n ≅ ℤ^{b_n} ⊕ ⊕ ℤ/t_i` from the Smith normal forms of the maps.
pub fn integral_homology(c: &ChainComplex<BigInt>) -> HomologyReport {
    let started = Instant::now();
    let factors: BTreeMap<usize, Vec<BigInt>> = c.maps.par_iter().map(|(n, m)| (*n, smith_normal_form(m))).collect();
    let ranks = factors.iter().map(|(n, f)| (*n, f.len())).collect();
    let torsion = factors.into_iter().map(|(n, f)| (n, f.into_iter().filter(|t| !t.is_one()).collect())).collect();
    report_from_ranks(c, "Z".into(), &ranks, &torsion, started)
}

/// Per-degree outcome of `h∂ + ∂h = Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicityReport<R> {
    pub checks: Vec<(usize, IdentityCheck<R>)>,
}

impl<R: Scalar> AcyclicityReport<R> {
    pub fn degree_zero(&self) -> Option<&IdentityCheck<R>> {
        self.checks.iter().find(|(n, _)| *n == 0).map(|(_, c)| c)
    }

    pub fn positive_degrees_passed(&self) -> bool {
        self.checks.iter().filter(|(n, _)| *n > 0).all(|(_, c)| c.passed)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, c)| c.passed)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.checks.iter().map(|(n, _)| *n).collect()
    }
}

/// Verifies `h_{n−1}∂_n + ∂_{n+1}h_n = Id` for every degree `n` whose maps are stored,
/// where `homotopy[n]` goes against the differential out of degree `n`.
pub fn certify_acyclic<R: Scalar>(c: &ChainComplex<R>, homotopy: &[SparseLinearMap<R>]) -> Result<AcyclicityReport<R>> {
    if c.step().unsigned_abs() != 1 {
        return Err(Error::InvalidInput("homotopies are certified for degree changes of one".into()));
    }
    let back = |n: usize| -> Option<usize> { (n as isize - c.step()).try_into().ok() };
    for (n, h) in homotopy.iter().enumerate() {
        let Some(t) = back(n).filter(|t| *t <= c.n_max()) else { continue };
        if n <= c.n_max() && h.shape() != (c.rank(t), c.rank(n)) {
            return Err(Error::Shape(format!(
                "homotopy at degree {n} is {}x{}, expected {}x{}",
                h.rows(),
                h.cols(),
                c.rank(t),
                c.rank(n)
            )));
        }
    }
    let mut checks = Vec::new();
    for n in 0..=c.n_max() {
        let Some(up) = back(n).filter(|t| *t <= c.n_max()) else { continue };
        let Some(h_n) = homotopy.get(n) else { continue };
        let Some(d_up) = c.map_from(up) else { continue };
        let mut total = d_up.compose(h_n)?;
        if let Some(d_n) = c.map_from(n) {
            let down = (n as isize + c.step()) as usize;
            let h_down = homotopy
                .get(down)
                .ok_or_else(|| Error::Shape(format!("missing homotopy at degree {down}")))?;
            total = total.add(&h_down.compose(d_n)?)?;
        }
        checks.push((n, IdentityCheck::compare(format!("h∂ + ∂h = Id on degree {n}"), &total, &SparseLinearMap::identity(c.rank(n)))));
    }
    Ok(AcyclicityReport { checks })
}

/// A coordinate subcomplex and the quotient by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient<R: Scalar> {
    pub sub: ChainComplex<R>,
    pub quotient: ChainComplex<R>,
    /// Basis indices of the span, per degree.
    pub sub_basis: Vec<Vec<usize>>,
    /// Basis indices of the complement, per degree.
    pub quotient_basis: Vec<Vec<usize>>,
}

/// Splits `c` along the span of the basis vectors selected by `in_span(degree, index)`,
/// after checking that the span is stable under every map.
pub fn subquotient<R: Scalar>(c: &ChainComplex<R>, in_span: impl Fn(usize, usize) -> bool + Sync) -> Result<Subquotient<R>> {
    let (sub_basis, quotient_basis): (Vec<Vec<usize>>, Vec<Vec<usize>>) =
        (0..=c.n_max()).map(|n| (0..c.rank(n)).partition(|&i| in_span(n, i))).unzip();
    let mut sub_maps = BTreeMap::new();
    let mut quot_maps = BTreeMap::new();
    for (n, m) in c.maps() {
        let t = (n as isize + c.step()) as usize;
        for &j in &sub_basis[n] {
            if let Some((row, _)) = m.column(j).iter().find(|(r, _)| !in_span(t, *r)) {
                return Err(Error::UnstableSpan { degree: n, basis: j, escaped: *row });
            }
        }
        sub_maps.insert(n, m.submatrix(&sub_basis[t], &sub_basis[n]));
        quot_maps.insert(n, m.submatrix(&quotient_basis[t], &quotient_basis[n]));
    }
    let sub_ranks = sub_basis.iter().map(Vec::len).collect();
    let quot_ranks = quotient_basis.iter().map(Vec::len).collect();
    Ok(Subquotient {
        sub: ChainComplex::new(sub_ranks, sub_maps, c.step(), format!("subcomplex of {}", c.provenance()))?,
        quotient: ChainComplex::new(quot_ranks, quot_maps, c.step(), format!("quotient of {}", c.provenance()))?,
        sub_basis,
        quotient_basis,
    })
}
