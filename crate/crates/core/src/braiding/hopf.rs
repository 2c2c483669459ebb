//! Hopf-algebra identities of the quantum shuffle algebra, checked degree by degree
//! on the truncation `⊕_{n ≤ N} V^{⊗n}`.

use crate::error::Result;
use crate::exactlin::{Scalar, SparseLinearMap};
use crate::report::IdentityCheck;

use super::{antipode, extended_braiding, qcoshuffle, qshuffle, PreBraidedSpace, Sign};

/// `⧢^{p+q,r}(⧢^{p,q}⊗Id) = ⧢^{p,q+r}(Id⊗⧢^{q,r})` for `p+q+r ≤ max`.
pub fn shuffle_associativity<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    let mut out = Vec::new();
    for total in 0..=max {
        for p in 0..=total {
            for q in 0..=total - p {
                let r = total - p - q;
                let lhs = qshuffle(space, p + q, r, sign)?.compose(&qshuffle(space, p, q, sign)?.placed(1, space.power_dim(r)))?;
                let rhs = qshuffle(space, p, q + r, sign)?.compose(&qshuffle(space, q, r, sign)?.placed(space.power_dim(p), 1))?;
                out.push(IdentityCheck::compare(format!("shuffle associativity ({p},{q},{r})"), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// `(cosh^{p,q}⊗Id)cosh^{p+q,r} = (Id⊗cosh^{q,r})cosh^{p,q+r}` for `p+q+r ≤ max`.
pub fn coshuffle_coassociativity<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    let mut out = Vec::new();
    for total in 0..=max {
        for p in 0..=total {
            for q in 0..=total - p {
                let r = total - p - q;
                let lhs = qcoshuffle(space, p, q, sign)?.placed(1, space.power_dim(r)).compose(&qcoshuffle(space, p + q, r, sign)?)?;
                let rhs = qcoshuffle(space, q, r, sign)?.placed(space.power_dim(p), 1).compose(&qcoshuffle(space, p, q + r, sign)?)?;
                out.push(IdentityCheck::compare(format!("coshuffle coassociativity ({p},{q},{r})"), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// `⧢^{p,q} = ⧢^{q,p} ∘ 𝛔` for `p+q ≤ max`; expected only when `σ² = Id`.
pub fn shuffle_commutativity<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    let mut out = Vec::new();
    for total in 0..=max {
        for p in 0..=total {
            let q = total - p;
            let mut crossing = extended_braiding(space, p, q)?;
            if sign == Sign::Minus && (p * q) % 2 == 1 {
                crossing = crossing.neg();
            }
            let lhs = qshuffle(space, p, q, sign)?;
            let rhs = qshuffle(space, q, p, sign)?.compose(&crossing)?;
            out.push(IdentityCheck::compare(format!("shuffle commutativity ({p},{q})"), &lhs, &rhs));
        }
    }
    Ok(out)
}

/// Deconcatenation against the shuffle product:
/// `Δ∘⧢ = (⧢⊗⧢)∘(Id⊗𝛔⊗Id)∘(Δ⊗Δ)` on `V^{⊗p}⊗V^{⊗q}`, component `V^{⊗a}⊗V^{⊗b}`.
pub fn bialgebra_compatibility<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    let mut out = Vec::new();
    let pd = |k: usize| space.power_dim(k);
    for total in 0..=max {
        for p in 0..=total {
            let q = total - p;
            let lhs = qshuffle(space, p, q, sign)?;
            let dim = pd(total);
            for a in 0..=total {
                let mut rhs = SparseLinearMap::zero(dim, dim);
                for p1 in 0..=p.min(a) {
                    let q1 = a - p1;
                    if q1 > q {
                        continue;
                    }
                    let (p2, q2) = (p - p1, q - q1);
                    let mut crossing = extended_braiding(space, p2, q1)?;
                    if sign == Sign::Minus && (p2 * q1) % 2 == 1 {
                        crossing = crossing.neg();
                    }
                    let middle = crossing.placed(pd(p1), pd(q2));
                    let products = qshuffle(space, p1, q1, sign)?.tensor(&qshuffle(space, p2, q2, sign)?);
                    rhs = rhs.add(&products.compose(&middle)?)?;
                }
                out.push(IdentityCheck::compare(format!("bialgebra compatibility ({p},{q}) -> ({a},{})", total - a), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// `Σ_p ⧢^{p,n−p}(S_p⊗Id)` equals `Id` on degree 0 and vanishes above, for `n ≤ max`.
pub fn antipode_axiom<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    antipode_sides(space, max, sign, true)
}

/// The mirrored axiom `Σ_p ⧢^{p,n−p}(Id⊗S_{n−p})`.
pub fn antipode_axiom_right<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign) -> Result<Vec<IdentityCheck<R>>> {
    antipode_sides(space, max, sign, false)
}

fn antipode_sides<R: Scalar>(space: &PreBraidedSpace<R>, max: usize, sign: Sign, left: bool) -> Result<Vec<IdentityCheck<R>>> {
    let signed_space;
    let acting = if sign == Sign::Minus {
        let mut s = PreBraidedSpace::new(space.dim(), space.sigma().neg())?;
        s.allow_unverified(true);
        signed_space = s;
        &signed_space
    } else {
        space
    };
    let mut out = Vec::new();
    for n in 0..=max {
        let dim = space.power_dim(n);
        let mut total = SparseLinearMap::zero(dim, dim);
        for p in 0..=n {
            let inner = if left {
                antipode(acting, p)?.placed(1, space.power_dim(n - p))
            } else {
                antipode(acting, n - p)?.placed(space.power_dim(p), 1)
            };
            total = total.add(&qshuffle(space, p, n - p, sign)?.compose(&inner)?)?;
        }
        let expected = if n == 0 { SparseLinearMap::identity(1) } else { SparseLinearMap::zero(dim, dim) };
        let side = if left { "left" } else { "right" };
        out.push(IdentityCheck::compare(format!("antipode ({side}) degree {n}"), &total, &expected));
    }
    Ok(out)
}
