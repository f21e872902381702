//! Ring invariants of `K[Δ]` and `S/I` read off from simplicial homology via Hochster's formulas:
//! local cohomology from links, graded Betti numbers from induced subcomplexes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, reduced_betti_all};
use crate::linalg::PrimeField;
use crate::monomial::{complex_of_ideal, SquarefreeIdeal};
use crate::outcome::Outcome;

/// Largest variable count for which the full `2^n` Betti sweep is attempted.
pub const MAX_BETTI_VARS: usize = 24;

/// `h_i = dim H^i_m(K[Δ]) = Σ_{σ ∈ Δ} dim H̃_{i−|σ|−1}(lk σ)` for `0 ≤ i ≤ dim K[Δ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyTable {
    pub h: Vec<usize>,
    pub field: PrimeField,
}

impl LocalCohomologyTable {
    pub fn get(&self, i: usize) -> usize {
        self.h.get(i).copied().unwrap_or(0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.h.iter().position(|&x| x != 0)
    }
}

pub fn local_cohomology(complex: &SimplicialComplex, field: PrimeField) -> Result<LocalCohomologyTable> {
    let krull = complex.krull_dim().ok_or(Error::VoidComplex)?;
    let mut h = vec![0usize; krull + 1];
    for sigma in complex.all_faces() {
        let link = complex.link(sigma)?;
        for (k, b) in reduced_betti_all(&link, field).nonzero() {
            h[(k + sigma.len() as isize + 1) as usize] += b;
        }
    }
    Ok(LocalCohomologyTable { h, field })
}

/// First `(σ, k)` with `H̃_k(lk σ) ≠ 0` contributing to some `h_i`, `i < bound`. `None` means
/// `depth ≥ bound`. Only the homology in degrees below the bound is computed.
pub fn local_cohomology_violation(
    complex: &SimplicialComplex,
    bound: usize,
    field: PrimeField,
) -> Result<Option<(Face, isize)>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for sigma in complex.all_faces().into_iter().filter(|s| s.len() < bound) {
        let link = complex.link(sigma)?;
        for k in -1..=(bound as isize - sigma.len() as isize - 2) {
            if reduced_betti(&link, k, field) != 0 {
                return Ok(Some((sigma, k)));
            }
        }
    }
    Ok(None)
}

/// `depth K[Δ] = min{i : h_i ≠ 0}`.
pub fn depth(complex: &SimplicialComplex, field: PrimeField) -> Result<usize> {
    let table = local_cohomology(complex, field)?;
    table.first_nonzero().ok_or_else(|| Error::Invariant("top local cohomology vanished".into()))
}

/// Reisner's criterion: `H̃_i(lk F) = 0` for every face `F` and every `i < dim lk F`. The witness is
/// the first failing `(F, i)`.
pub fn is_cm(complex: &SimplicialComplex, field: PrimeField) -> Result<Outcome<(Face, isize)>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in complex.all_faces() {
        let link = complex.link(face)?;
        let dim = link.dim().unwrap_or(-1);
        for i in -1..dim {
            if reduced_betti(&link, i, field) != 0 {
                return Ok(Outcome::fail((face, i)));
            }
        }
    }
    Ok(Outcome::pass())
}

/// `1 + max{b : Δ^(b) Cohen-Macaulay}`.
pub fn depth_via_skeleton(complex: &SimplicialComplex, field: PrimeField) -> Result<usize> {
    let dim = complex.dim().ok_or(Error::VoidComplex)?;
    let mut best = -1isize;
    for b in -1..=dim {
        if is_cm(&complex.skeleton(b), field)?.holds {
            best = b;
        }
    }
    Ok((best + 1) as usize)
}

/// Multigraded Betti numbers `β_{i,σ}` of a squarefree ideal (`β_0` counts generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field: PrimeField,
    entries: BTreeMap<(usize, Face), usize>,
}

impl BettiTable {
    pub fn from_entries(n: usize, field: PrimeField, entries: BTreeMap<(usize, Face), usize>) -> Self {
        let entries = entries.into_iter().filter(|(_, v)| *v != 0).collect();
        BettiTable { n, field, entries }
    }

    pub fn get(&self, i: usize, sigma: Face) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, Face), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// `β_{i,b} = Σ_{|σ| = b} β_{i,σ}`, keyed by `(i, b)`.
    pub fn by_degree(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (&(i, sigma), &v) in &self.entries {
            *out.entry((i, sigma.len())).or_insert(0) += v;
        }
        out
    }

    pub fn total(&self, i: usize, b: usize) -> usize {
        self.by_degree().get(&(i, b)).copied().unwrap_or(0)
    }

    /// Rows `"i b dim"` sorted by `(i, b)`, one per nonzero graded Betti number.
    pub fn to_rows(&self) -> String {
        let mut out = String::new();
        for ((i, b), v) in self.by_degree() {
            writeln!(out, "{i} {b} {v}").expect("write to string");
        }
        out
    }

    /// `pd(S/I) = 1 + max{i : β_i ≠ 0}`.
    pub fn pd_quotient(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| i + 1).max()
    }

    /// `reg(I) = max{|σ| − i : β_{i,σ} ≠ 0}`.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|(i, s)| s.len() - i).max()
    }

    /// Linear resolution: generators in one degree `c'` and `β_{i,b} = 0` unless `b = i + c'`.
    pub fn is_linear(&self) -> bool {
        let Some(c) = self.entries.keys().filter(|(i, _)| *i == 0).map(|(_, s)| s.len()).min() else {
            return false;
        };
        self.entries.keys().all(|(i, s)| s.len() == i + c)
    }

    /// `[Tor_γ]_β = 0` for all `γ < ℓ` and `c + j + γ < β ≤ n`; the witness is the first
    /// violating `(γ, β)`.
    pub fn satisfies_n(&self, c: usize, ell: usize, j: usize) -> Outcome<(usize, usize)> {
        let violation =
            self.by_degree().into_iter().find(|&((g, b), v)| v != 0 && g < ell && b > c + j + g && b <= self.n);
        Outcome::from_violation(violation.map(|(k, _)| k))
    }
}

/// Hochster's formula `β_{i,σ}(I_Δ) = dim H̃_{|σ|−i−2}(Δ|_σ)` over every `σ ⊆ V`.
pub fn graded_betti(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    if n > MAX_BETTI_VARS {
        return Err(Error::CapExceeded(format!("Betti sweep over {n} variables (max {MAX_BETTI_VARS})")));
    }
    let complex = complex_of_ideal(ideal);
    let entries: BTreeMap<(usize, Face), usize> = (0..(1u64 << n))
        .into_par_iter()
        .flat_map_iter(|bits| {
            let sigma = Face::from_bits(bits);
            let restricted = complex.induced(sigma);
            let size = sigma.len() as isize;
            reduced_betti_all(&restricted, field)
                .nonzero()
                .filter(|(k, _)| size - k - 2 >= 0)
                .map(|(k, b)| (((size - k - 2) as usize, sigma), b))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(BettiTable::from_entries(n, field, entries))
}

/// `pd(S/I)`, or `None` for the zero and unit ideals.
pub fn pd(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<Option<usize>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(None);
    }
    Ok(graded_betti(ideal, field)?.pd_quotient())
}

/// `reg(I)`, or `None` for the zero and unit ideals.
pub fn reg(ideal: &SquarefreeIdeal, field: PrimeField) -> Result<Option<usize>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(None);
    }
    Ok(graded_betti(ideal, field)?.reg())
}

pub fn satisfies_n(
    idual: &SquarefreeIdeal,
    c: usize,
    ell: usize,
    j: usize,
    field: PrimeField,
) -> Result<Outcome<(usize, usize)>> {
    Ok(graded_betti(idual, field)?.satisfies_n(c, ell, j))
}
