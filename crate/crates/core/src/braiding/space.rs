use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactlin::{Scalar, SparseLinearMap, SparseVec};
use crate::structures::StructurePayload;

use super::permutation::Permutation;

type LiftCache<R> = HashMap<(Vec<usize>, usize), Arc<SparseLinearMap<R>>>;

/// A finite-dimensional space `V` with a linear endomorphism `σ` of `V⊗V`,
/// named covectors (characters) and optional companion data.
pub struct PreBraidedSpace<R: Scalar> {
    dim: usize,
    sigma: SparseLinearMap<R>,
    sigma_inverse: Option<SparseLinearMap<R>>,
    grading: Option<Vec<i64>>,
    characters: BTreeMap<String, Vec<R>>,
    comultiplication: Option<SparseLinearMap<R>>,
    payload: Option<StructurePayload<R>>,
    ybe_verified: bool,
    verified_characters: BTreeSet<String>,
    unchecked: bool,
    lifts: Mutex<LiftCache<R>>,
}

impl<R: Scalar> Clone for PreBraidedSpace<R> {
    fn clone(&self) -> Self {
        PreBraidedSpace {
            dim: self.dim,
            sigma: self.sigma.clone(),
            sigma_inverse: self.sigma_inverse.clone(),
            grading: self.grading.clone(),
            characters: self.characters.clone(),
            comultiplication: self.comultiplication.clone(),
            payload: self.payload.clone(),
            ybe_verified: self.ybe_verified,
            verified_characters: self.verified_characters.clone(),
            unchecked: self.unchecked,
            lifts: Mutex::new(self.lifts.lock().expect("lift cache").clone()),
        }
    }
}

impl<R: Scalar> std::fmt::Debug for PreBraidedSpace<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PreBraidedSpace")
            .field("dim", &self.dim)
            .field("sigma", &self.sigma)
            .field("characters", &self.characters.keys().collect::<Vec<_>>())
            .field("ybe_verified", &self.ybe_verified)
            .finish()
    }
}

impl<R: Scalar> PreBraidedSpace<R> {
    /// Wraps a `d² × d²` matrix; fails on a shape mismatch.
    pub fn new(dim: usize, sigma: SparseLinearMap<R>) -> Result<Self> {
        if sigma.shape() != (dim * dim, dim * dim) {
            return Err(Error::Shape(format!(
                "braiding on dimension {dim} must be {0}x{0}, got {1}x{2}",
                dim * dim,
                sigma.rows(),
                sigma.cols()
            )));
        }
        Ok(PreBraidedSpace {
            dim,
            sigma,
            sigma_inverse: None,
            grading: None,
            characters: BTreeMap::new(),
            comultiplication: None,
            payload: None,
            ybe_verified: false,
            verified_characters: BTreeSet::new(),
            unchecked: false,
            lifts: Mutex::new(HashMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &SparseLinearMap<R> {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> Option<&SparseLinearMap<R>> {
        self.sigma_inverse.as_ref()
    }

    /// Installs `σ⁻¹` after checking both compositions.
    pub fn set_sigma_inverse(&mut self, inv: SparseLinearMap<R>) -> Result<()> {
        let id = SparseLinearMap::identity(self.dim * self.dim);
        if self.sigma.compose(&inv)? != id || inv.compose(&self.sigma)? != id {
            return Err(Error::Structure("proposed inverse does not invert the braiding".into()));
        }
        self.sigma_inverse = Some(inv);
        Ok(())
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn set_grading(&mut self, grading: Vec<i64>) -> Result<()> {
        if grading.len() != self.dim {
            return Err(Error::Shape(format!("grading has {} entries for dimension {}", grading.len(), self.dim)));
        }
        self.grading = Some(grading);
        Ok(())
    }

    pub fn comultiplication(&self) -> Option<&SparseLinearMap<R>> {
        self.comultiplication.as_ref()
    }

    /// Installs a comultiplication `Δ: V → V⊗V` (a `d² × d` matrix).
    pub fn set_comultiplication(&mut self, delta: SparseLinearMap<R>) -> Result<()> {
        if delta.shape() != (self.dim * self.dim, self.dim) {
            return Err(Error::Shape(format!("comultiplication must be {}x{}", self.dim * self.dim, self.dim)));
        }
        self.comultiplication = Some(delta);
        Ok(())
    }

    pub fn payload(&self) -> Option<&StructurePayload<R>> {
        self.payload.as_ref()
    }

    pub fn set_payload(&mut self, payload: StructurePayload<R>) {
        self.payload = Some(payload);
    }

    /// Adds or replaces a named covector; its verification status is reset.
    pub fn add_character(&mut self, name: &str, values: Vec<R>) -> Result<()> {
        if values.len() != self.dim {
            return Err(Error::Shape(format!("character `{name}` has {} entries for dimension {}", values.len(), self.dim)));
        }
        self.verified_characters.remove(name);
        self.characters.insert(name.to_string(), values);
        Ok(())
    }

    pub fn character(&self, name: &str) -> Result<&[R]> {
        self.characters
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownCharacter(name.to_string()))
    }

    pub fn character_names(&self) -> Vec<String> {
        self.characters.keys().cloned().collect()
    }

    pub fn characters(&self) -> &BTreeMap<String, Vec<R>> {
        &self.characters
    }

    pub fn is_ybe_verified(&self) -> bool {
        self.ybe_verified
    }

    pub(crate) fn mark_ybe(&mut self, passed: bool) {
        self.ybe_verified = passed;
    }

    pub(crate) fn mark_character(&mut self, name: &str, passed: bool) {
        if passed {
            self.verified_characters.insert(name.to_string());
        } else {
            self.verified_characters.remove(name);
        }
    }

    pub fn is_character_verified(&self, name: &str) -> bool {
        self.verified_characters.contains(name)
    }

    /// Lets builders run on unverified braidings and characters.
    pub fn allow_unverified(&mut self, allow: bool) {
        self.unchecked = allow;
    }

    pub fn is_unchecked(&self) -> bool {
        self.unchecked
    }

    pub fn require_ybe(&self) -> Result<()> {
        if self.ybe_verified || self.unchecked {
            Ok(())
        } else {
            Err(Error::YbeNotVerified)
        }
    }

    /// The named character, provided it is verified (or checks are overridden).
    pub fn verified_character(&self, name: &str) -> Result<&[R]> {
        let c = self.character(name)?;
        if self.unchecked || self.verified_characters.contains(name) {
            Ok(c)
        } else {
            Err(Error::CharacterNotVerified(name.to_string()))
        }
    }

    /// `d^n`.
    pub fn power_dim(&self, n: usize) -> usize {
        self.dim.pow(n as u32)
    }

    /// `σ_i = Id_{i-1} ⊗ σ ⊗ Id_{n-i-1}` on `V^{⊗n}`.
    pub fn sigma_at(&self, n: usize, i: usize) -> SparseLinearMap<R> {
        assert!(i >= 1 && i < n);
        self.sigma.placed(self.power_dim(i - 1), self.power_dim(n - i - 1))
    }

    /// Applies `σ_i` to a vector of `V^{⊗n}`.
    pub fn apply_sigma_at(&self, v: &SparseVec<R>, n: usize, i: usize) -> SparseVec<R> {
        apply_placed(&self.sigma, self.dim * self.dim, self.power_dim(n - i - 1), v)
    }

    /// Image of `T_s^σ` on a vector, following the given word (composition order).
    pub(crate) fn apply_word(&self, word: &[usize], n: usize, v: &SparseVec<R>) -> SparseVec<R> {
        let mut cur = v.clone();
        for &g in word.iter().rev() {
            cur = self.apply_sigma_at(&cur, n, g);
        }
        cur
    }

    /// `T_s^σ` via the canonical reduced word, memoized.
    pub(crate) fn cached_lift(&self, s: &Permutation, n: usize) -> Arc<SparseLinearMap<R>> {
        let key = (s.images().to_vec(), n);
        if let Some(m) = self.lifts.lock().expect("lift cache").get(&key) {
            return Arc::clone(m);
        }
        let word = s.reduced_word();
        let m = Arc::new(self.lift_with_word(&word, n));
        self.lifts.lock().expect("lift cache").insert(key, Arc::clone(&m));
        m
    }

    /// `σ_{w_1} ∘ … ∘ σ_{w_k}` on `V^{⊗n}` for an arbitrary word.
    pub fn lift_with_word(&self, word: &[usize], n: usize) -> SparseLinearMap<R> {
        let total = self.power_dim(n);
        let cols = (0..total)
            .map(|j| {
                let mut v = SparseVec::new();
                v.insert(j, R::one());
                self.apply_word(word, n, &v)
            })
            .collect();
        SparseLinearMap::from_sparse_columns(total, cols)
    }
}

/// Applies `Id ⊗ op ⊗ Id_right` to `v`, where `op: R^{in_block} → R^{rows}` and the
/// right identity has size `right`. The left identity size is implicit.
pub fn apply_placed<R: Scalar>(
    op: &SparseLinearMap<R>,
    in_block: usize,
    right: usize,
    v: &SparseVec<R>,
) -> SparseVec<R> {
    debug_assert_eq!(op.cols(), in_block);
    let out_block = op.rows();
    let mut out = SparseVec::new();
    for (idx, x) in v {
        let b = idx % right;
        let mid = (idx / right) % in_block;
        let a = idx / (right * in_block);
        for (row, y) in op.column(mid) {
            let j = (a * out_block + row) * right + b;
            crate::exactlin::sparse::add_entry(&mut out, j, y.clone() * x.clone());
        }
    }
    out
}
