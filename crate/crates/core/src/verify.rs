//! Corpus generators and the property harness that runs the Serre criteria, the bound
//! inequalities and the classical identities against each other.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{boundary_matrix, reduced_betti_all};
use crate::invariants::{depth, depth_via_skeleton, graded_betti, is_cm, pd};
use crate::linalg::PrimeField;
use crate::monomial::{
    alexander_dual_ideal, codim, complex_of_ideal, polarize, radical, stanley_reisner_ideal, Monomial, MonomialIdeal,
};
use crate::serre::{
    alexander_data, s2j_dual_graph, slj_alexander_with, slj_definition, slj_lemma63, slj_reisner, terai,
};

/// Largest ground set for exhaustive enumeration.
pub const EXHAUSTIVE_MAX_N: usize = 8;
/// Largest ground set for random sampling.
pub const RANDOM_MAX_N: usize = 12;
/// Exhaustive enumeration visits `2^m − 1` facet sets for `m` candidate facets.
pub const EXHAUSTIVE_MAX_CANDIDATES: usize = 20;
/// Keeps polarizations of random ideals inside the Betti sweep.
pub const MONOMIAL_MAX_VARS: usize = 24;
/// Ground sets up to this size get the two-field Betti comparison.
pub const FIELD_SANITY_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

/// Parameters of a complex corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Ground-set size, or the upper end of the sampled range when `n_min < n`.
    pub n: usize,
    pub n_min: usize,
    pub pure: bool,
    /// Fixed facet size of pure corpora; drawn per sample when `None`.
    pub facet_size: Option<usize>,
    pub mode: Mode,
    pub samples: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive(n: usize, k: usize) -> Self {
        CorpusSpec { n, n_min: n, pure: true, facet_size: Some(k), mode: Mode::Exhaustive, samples: 0, seed: 0 }
    }

    /// Pure complexes on `n_min..=n` vertices; the facet size is drawn per sample.
    pub fn random_pure(n_min: usize, n: usize, samples: usize, seed: u64) -> Self {
        CorpusSpec { n, n_min, pure: true, facet_size: None, mode: Mode::Random, samples, seed }
    }

    pub fn random_nonpure(n_min: usize, n: usize, samples: usize, seed: u64) -> Self {
        CorpusSpec { n, n_min, pure: false, facet_size: None, mode: Mode::Random, samples, seed }
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Exhaustive => {
                let k = self.facet_size.filter(|_| self.pure).ok_or_else(|| {
                    Error::InvalidArgument("exhaustive enumeration needs a fixed facet size k".into())
                })?;
                if self.n > EXHAUSTIVE_MAX_N {
                    return Err(Error::CapExceeded(format!(
                        "exhaustive enumeration on n={} vertices (max {EXHAUSTIVE_MAX_N}); use mode = random",
                        self.n
                    )));
                }
                if k == 0 || k > self.n {
                    return Err(Error::InvalidArgument(format!("facet size k={k} must lie in 1..={}", self.n)));
                }
                let m = binomial(self.n, k);
                if m > EXHAUSTIVE_MAX_CANDIDATES {
                    return Err(Error::CapExceeded(format!(
                        "C({},{k}) = {m} candidate facets gives 2^{m} facet sets (max 2^{EXHAUSTIVE_MAX_CANDIDATES}); \
                         use mode = random",
                        self.n
                    )));
                }
            }
            Mode::Random => {
                if self.n > RANDOM_MAX_N {
                    return Err(Error::CapExceeded(format!(
                        "random sampling on n={} vertices (max {RANDOM_MAX_N})",
                        self.n
                    )));
                }
                if self.n_min == 0 || self.n_min > self.n {
                    return Err(Error::InvalidArgument(format!("vertex range {}..={} is empty", self.n_min, self.n)));
                }
                if let Some(k) = self.facet_size {
                    if k == 0 || k > self.n_min {
                        return Err(Error::InvalidArgument(format!("facet size {k} exceeds n={}", self.n_min)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Vec<SimplicialComplex>> {
        self.validate()?;
        match (self.mode, self.pure) {
            (Mode::Exhaustive, _) => enumerate_pure(self.n, self.facet_size.expect("checked by validate")),
            (Mode::Random, true) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut out = Vec::with_capacity(self.samples);
                for _ in 0..self.samples {
                    let n = rng.gen_range(self.n_min..=self.n);
                    let k = if let Some(k) = self.facet_size {
                        k
                    } else if n >= 3 {
                        rng.gen_range(2..n)
                    } else {
                        1
                    };
                    out.push(random_pure(&mut rng, n, k));
                }
                Ok(out)
            }
            (Mode::Random, false) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                Ok((0..self.samples).map(|_| {
                    let n = rng.gen_range(self.n_min..=self.n);
                    random_complex(&mut rng, n)
                }).collect())
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Every nonempty set of `k`-subsets of `[n]`, each giving a pure complex, without duplicates.
pub fn enumerate_pure(n: usize, k: usize) -> Result<Vec<SimplicialComplex>> {
    CorpusSpec::exhaustive(n, k).validate()?;
    let candidates = Face::full(n).subsets_of_size(k);
    let m = candidates.len();
    (1u64..(1u64 << m))
        .map(|mask| {
            let facets = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| candidates[b]);
            SimplicialComplex::from_facets(facets, n)
        })
        .collect()
}

/// Each `k`-subset of `[n]` independently with probability ½, redrawn while empty.
pub fn random_pure(rng: &mut ChaCha8Rng, n: usize, k: usize) -> SimplicialComplex {
    let candidates = Face::full(n).subsets_of_size(k);
    loop {
        let chosen: Vec<Face> = candidates.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !chosen.is_empty() {
            return SimplicialComplex::from_facets(chosen, n).expect("subsets of the ground set");
        }
    }
}

/// One to five random faces of random sizes in `1..n`; usually not pure.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=5);
    let mut vertices: Vec<usize> = (0..n).collect();
    let faces: Vec<Face> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n.saturating_sub(1).max(1));
            vertices.shuffle(rng);
            Face::from_indices(vertices[..size].iter().copied())
        })
        .collect();
    SimplicialComplex::from_facets(faces, n).expect("subsets of the ground set")
}

/// A random proper nonzero monomial ideal with `gen_count` drawn generators (before
/// minimalization), exponents uniform in `0..=max_deg`.
pub fn random_monomial_ideal(n: usize, max_deg: u32, gen_count: usize, seed: u64) -> Result<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_monomial_ideal_with(&mut rng, n, max_deg, gen_count)
}

fn random_monomial_ideal_with(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, gen_count: usize) -> Result<MonomialIdeal> {
    if n == 0 || max_deg == 0 || gen_count == 0 {
        return Err(Error::InvalidArgument("need n, max_deg and gen_count all at least 1".into()));
    }
    if n * max_deg as usize > MONOMIAL_MAX_VARS {
        return Err(Error::CapExceeded(format!(
            "n·max_deg = {} exceeds {MONOMIAL_MAX_VARS}",
            n * max_deg as usize
        )));
    }
    let gens = (0..gen_count)
        .map(|_| loop {
            let m = Monomial::new((0..n).map(|_| rng.gen_range(0..=max_deg)).collect());
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Random ideals with `n` and generator count drawn per sample.
pub fn random_ideal_corpus(n_max: usize, max_deg: u32, samples: usize, seed: u64) -> Result<Vec<MonomialIdeal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            let count = rng.gen_range(1..=4);
            random_monomial_ideal_with(&mut rng, n, max_deg, count)
        })
        .collect()
}

/// The `(ℓ, j)` cells a suite iterates over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub ells: Vec<usize>,
    pub js: Vec<usize>,
}

impl Grid {
    pub fn new(ells: Vec<usize>, js: Vec<usize>) -> Result<Self> {
        if ells.is_empty() || js.is_empty() {
            return Err(Error::VacuousSuite("the (ell, j) grid is empty".into()));
        }
        Ok(Grid { ells, js })
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ells.iter().flat_map(|&l| self.js.iter().map(move |&j| (l, j)))
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid { ells: vec![2, 3, 4], js: vec![0, 1, 2, 3] }
    }
}

/// Fields used by a suite: the main one and the cross-check field for field independence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fields {
    pub main: PrimeField,
    pub cross: PrimeField,
}

impl Default for Fields {
    fn default() -> Self {
        Fields { main: PrimeField::gf2(), cross: PrimeField::large() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    ReisnerEquivalence,
    DualGraphEquivalence,
    AlexanderEquivalence,
    Lemma63Necessity,
    Degenerations,
    PdBound,
    RegBound,
    Skeleton,
    Classical,
    RadicalTransfer,
}

impl Property {
    pub const COMPLEX: [Property; 9] = [
        Property::ReisnerEquivalence,
        Property::DualGraphEquivalence,
        Property::AlexanderEquivalence,
        Property::Lemma63Necessity,
        Property::Degenerations,
        Property::PdBound,
        Property::RegBound,
        Property::Skeleton,
        Property::Classical,
    ];

    /// Properties that do not require purity.
    pub const UNRESTRICTED: [Property; 4] =
        [Property::Lemma63Necessity, Property::Degenerations, Property::Skeleton, Property::Classical];

    pub fn name(self) -> &'static str {
        match self {
            Property::ReisnerEquivalence => "reisner-equivalence",
            Property::DualGraphEquivalence => "dual-graph-equivalence",
            Property::AlexanderEquivalence => "alexander-equivalence",
            Property::Lemma63Necessity => "lemma63-necessity",
            Property::Degenerations => "degenerations",
            Property::PdBound => "pd-bound",
            Property::RegBound => "reg-bound",
            Property::Skeleton => "skeleton",
            Property::Classical => "classical",
            Property::RadicalTransfer => "radical-transfer",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::COMPLEX
            .into_iter()
            .chain([Property::RadicalTransfer])
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property '{s}'")))
    }
}

/// A counterexample serialized in the facet (or ideal) file format.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    /// Observations that are not assertion failures.
    pub informational: Vec<Failure>,
    /// `bound − value` counts for the bound suites.
    pub slack: BTreeMap<i64, usize>,
    pub runtime_ms: u128,
}

impl PartialEq for PropertyReport {
    fn eq(&self, other: &Self) -> bool {
        self.property == other.property
            && self.checked == other.checked
            && self.skipped == other.skipped
            && self.failures == other.failures
            && self.informational == other.informational
            && self.slack == other.slack
    }
}

impl PropertyReport {
    fn empty(property: &str) -> Self {
        PropertyReport {
            property: property.to_string(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            informational: Vec::new(),
            slack: BTreeMap::new(),
            runtime_ms: 0,
        }
    }

    /// No failures and at least one instance actually checked.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && !self.is_vacuous()
    }

    pub fn is_vacuous(&self) -> bool {
        self.checked == 0
    }

    fn absorb(&mut self, check: InstanceCheck, instance: impl Fn() -> String) {
        if check.checked {
            self.checked += 1;
        } else {
            self.skipped += 1;
        }
        for s in check.slack {
            *self.slack.entry(s).or_insert(0) += 1;
        }
        for detail in check.info {
            self.informational.push(Failure { instance: instance(), detail });
        }
        if let Some(detail) = check.failure {
            self.failures.push(Failure { instance: instance(), detail });
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.failures.sort();
        self.informational.sort();
        self.runtime_ms = start.elapsed().as_millis();
        self
    }

    /// Sums several reports into one under a new name.
    pub fn merge(property: &str, parts: &[PropertyReport]) -> PropertyReport {
        let mut out = PropertyReport::empty(property);
        for p in parts {
            out.checked += p.checked;
            out.skipped += p.skipped;
            out.failures.extend(p.failures.iter().cloned());
            out.informational.extend(p.informational.iter().cloned());
            for (&k, &v) in &p.slack {
                *out.slack.entry(k).or_insert(0) += v;
            }
            out.runtime_ms += p.runtime_ms;
        }
        out.failures.sort();
        out.informational.sort();
        out
    }
}

/// Outcome of one property on one instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceCheck {
    /// False when the hypotheses filtered the instance out.
    pub checked: bool,
    pub failure: Option<String>,
    pub info: Vec<String>,
    pub slack: Vec<i64>,
}

impl InstanceCheck {
    fn skipped() -> Self {
        InstanceCheck::default()
    }

    fn checked() -> Self {
        InstanceCheck { checked: true, ..Default::default() }
    }

    fn fail(&mut self, detail: String) {
        if self.failure.is_none() {
            self.failure = Some(detail);
        }
    }

    fn is_failure(&self) -> bool {
        self.failure.is_some()
    }
}

fn truth(c: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<bool> {
    Ok(slj_definition(c, ell, j, field)?.satisfied)
}

/// `⌊a / b⌋` for possibly negative `a`.
fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// One clause of a bound inequality on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundClause {
    pub clause: u8,
    pub j: usize,
    pub value: usize,
    pub bound: i64,
    /// The hypotheses of the proof hold and the inequality is asserted.
    pub asserted: bool,
}

impl BoundClause {
    pub fn holds(&self) -> bool {
        self.value as i64 <= self.bound
    }
}

fn pd_bound(n: usize, c: usize, j: usize, clause: u8) -> i64 {
    let (n, c, j) = (n as i64, c as i64, j as i64);
    match clause {
        1 => n - 1 - floor_div(n - 2 - j, c),
        _ => n - 2 - floor_div(n - 3 - j, c),
    }
}

/// `pd S/I_Δ ≤ n − 1 − ⌊(n − 2 − j)/c⌋` under `(S_2^j)` and `dim ≥ 1 + j`, and
/// `pd S/I_Δ ≤ n − 2 − ⌊(n − 3 − j)/c⌋` under `(S_3^j)` and `dim ≥ 2 + j`. Returns the clauses
/// whose hypotheses hold; `None` when Δ is not pure or `I_Δ` is zero.
pub fn check_pd_bound(c: &SimplicialComplex, j: usize, field: PrimeField) -> Result<Option<Vec<BoundClause>>> {
    let ideal = stanley_reisner_ideal(c);
    if !c.is_pure() || ideal.is_zero() || c.is_void() {
        return Ok(None);
    }
    let n = c.n();
    let height = codim(&ideal)?;
    let dim = c.krull_dim().expect("not void");
    let value = pd(&ideal, field)?.expect("proper nonzero ideal");
    let mut out = Vec::new();
    for (clause, ell) in [(1u8, 2usize), (2, 3)] {
        if dim >= ell - 1 + j && truth(c, ell, j, field)? {
            out.push(BoundClause { clause, j, value, bound: pd_bound(n, height, j, clause), asserted: true });
        }
    }
    Ok(Some(out))
}

/// `reg 𝔞 ≤ n − 1 − ⌊(n − 2 − j)/c⌋` under `(N_{c,2}^j)` and `c ≤ n − 1`, and
/// `reg 𝔞 ≤ n − 2 − ⌊(n − 3 − j)/c⌋` under `(N_{c,3}^j)` and `c ≤ n − 2`, for `𝔞 = I_Δ^∨`.
///
/// A clause is asserted only when additionally `dim S/𝔞^∨ ≥ 1 + j` (resp. `2 + j`), the
/// hypothesis under which the pd bound it is derived from holds; the remaining clauses are
/// returned with `asserted = false`.
pub fn check_reg_bound(c: &SimplicialComplex, j: usize, field: PrimeField) -> Result<Option<Vec<BoundClause>>> {
    if !c.is_pure() || c.is_void() || c.is_full_simplex() {
        return Ok(None);
    }
    let Some(data) = alexander_data(c, field)? else {
        return Ok(None);
    };
    let n = c.n();
    let dim = n - data.codim;
    let value = data.table.reg().expect("nonzero dual ideal");
    let mut out = Vec::new();
    for (clause, ell) in [(1u8, 2usize), (2, 3)] {
        if data.codim + ell - 1 <= n && data.table.satisfies_n(data.codim, ell, j).holds {
            let asserted = dim >= ell - 1 + j;
            out.push(BoundClause { clause, j, value, bound: pd_bound(n, data.codim, j, clause), asserted });
        }
    }
    Ok(Some(out))
}

fn record_bounds(check: &mut InstanceCheck, what: &str, clauses: Vec<BoundClause>) {
    for cl in clauses {
        let detail = || format!("{what} clause ({}) at j={}: value {} > bound {}", cl.clause, cl.j, cl.value, cl.bound);
        if cl.asserted {
            check.slack.push(cl.bound - cl.value as i64);
            if !cl.holds() {
                check.fail(detail());
            }
        } else if !cl.holds() {
            check.info.push(format!("{} (literal hypotheses only)", detail()));
        }
    }
}

/// Evaluates `property` on one complex.
pub fn check_complex(
    property: Property,
    c: &SimplicialComplex,
    grid: &Grid,
    fields: Fields,
) -> Result<InstanceCheck> {
    let field = fields.main;
    if c.is_void() {
        return Ok(InstanceCheck::skipped());
    }
    let pure = c.is_pure();
    let mut check = InstanceCheck::checked();
    match property {
        Property::ReisnerEquivalence => {
            if !pure {
                return Ok(InstanceCheck::skipped());
            }
            for (ell, j) in grid.cells().filter(|&(l, _)| l >= 2) {
                let def = truth(c, ell, j, field)?;
                let v = slj_reisner(c, ell, j, field)?;
                if v.satisfied != def {
                    check.fail(format!("(S_{ell}^{j}): definition {def}, reisner {}", v.satisfied));
                }
            }
        }
        Property::DualGraphEquivalence => {
            if !pure {
                // not asserted off the pure case; mismatches are kept as artifacts
                let mut skipped = InstanceCheck::skipped();
                for &j in &grid.js {
                    let graph = c.is_j_locally_connected(j + 1)?;
                    let def = truth(c, 2, j, field)?;
                    if graph != def {
                        skipped.info.push(format!("non-pure (S_2^{j}): facet graphs {graph}, definition {def}"));
                    }
                }
                return Ok(skipped);
            }
            for &j in &grid.js {
                let v = s2j_dual_graph(c, j)?;
                let main = truth(c, 2, j, field)?;
                let cross = truth(c, 2, j, fields.cross)?;
                if v.satisfied != main || main != cross {
                    check.fail(format!(
                        "(S_2^{j}): dual graph {}, definition over GF({}) {main}, over GF({}) {cross}",
                        v.satisfied,
                        field.p(),
                        fields.cross.p()
                    ));
                }
            }
        }
        Property::AlexanderEquivalence => {
            if !pure || c.is_full_simplex() {
                return Ok(InstanceCheck::skipped());
            }
            let data = alexander_data(c, field)?;
            for (ell, j) in grid.cells().filter(|&(l, _)| l >= 2) {
                let def = truth(c, ell, j, field)?;
                let v = slj_alexander_with(c, data.as_ref(), ell, j, field);
                if v.satisfied != def {
                    check.fail(format!("(S_{ell}^{j}): definition {def}, alexander {} ({:?})", v.satisfied, v.witness));
                }
            }
        }
        Property::Lemma63Necessity => {
            for (ell, j) in grid.cells().filter(|&(l, _)| l >= 2) {
                let def = truth(c, ell, j, field)?;
                let v = slj_lemma63(c, ell, j, field)?;
                if def && !v.satisfied {
                    check.fail(format!("(S_{ell}^{j}) holds but the necessary condition fails at {:?}", v.witness));
                }
                if pure && v.satisfied != def {
                    check.fail(format!("(S_{ell}^{j}): pure complex, definition {def}, lemma63 {}", v.satisfied));
                }
            }
        }
        Property::Degenerations => {
            for &ell in grid.ells.iter().filter(|&&l| l >= 2) {
                let def = truth(c, ell, 0, field)?;
                let t = terai(c, ell, field)?;
                if t.holds != def {
                    check.fail(format!("(S_{ell}): definition {def}, terai {} ({:?})", t.holds, t.witness));
                }
            }
            if pure {
                let d = c.krull_dim().expect("not void");
                let def = truth(c, d.max(1), 0, field)?;
                let cm = is_cm(c, field)?.holds;
                if def != cm {
                    check.fail(format!("(S_{d}): definition {def}, cohen-macaulay {cm}"));
                }
            }
        }
        Property::PdBound => match check_bound_family(c, grid, field, check_pd_bound)? {
            Some(clauses) => record_bounds(&mut check, "pd", clauses),
            None => return Ok(InstanceCheck::skipped()),
        },
        Property::RegBound => match check_bound_family(c, grid, field, check_reg_bound)? {
            Some(clauses) => record_bounds(&mut check, "reg", clauses),
            None => return Ok(InstanceCheck::skipped()),
        },
        Property::Skeleton => {
            let dim = c.dim().expect("not void");
            let d = c.krull_dim().expect("not void") as isize;
            let mut any = false;
            for (ell, j) in grid.cells().filter(|&(l, _)| l >= 2) {
                if (ell as isize - 1) > dim || !truth(c, ell, j, field)? {
                    continue;
                }
                any = true;
                for i in (ell as isize - 1)..=dim {
                    let skel = c.skeleton(i);
                    if !truth(&skel, ell, j, field)? {
                        check.fail(format!("(S_{ell}^{j}) holds but the {i}-skeleton fails it"));
                    }
                    if pure {
                        let sharp = (j as isize + i + 1 - d).max(0) as usize;
                        if !skel.is_pure() {
                            check.fail(format!("{i}-skeleton of a pure complex is not pure"));
                        }
                        if !truth(&skel, ell, sharp, field)? {
                            check.fail(format!("(S_{ell}^{j}) holds but the {i}-skeleton fails (S_{ell}^{sharp})"));
                        }
                    }
                }
            }
            if !any {
                return Ok(InstanceCheck::skipped());
            }
        }
        Property::Classical => classical(c, fields, &mut check)?,
        Property::RadicalTransfer => {
            return Err(Error::InvalidArgument("radical transfer runs on ideals, not complexes".into()))
        }
    }
    Ok(check)
}

fn check_bound_family(
    c: &SimplicialComplex,
    grid: &Grid,
    field: PrimeField,
    f: fn(&SimplicialComplex, usize, PrimeField) -> Result<Option<Vec<BoundClause>>>,
) -> Result<Option<Vec<BoundClause>>> {
    let mut all = Vec::new();
    for &j in &grid.js {
        match f(c, j, field)? {
            Some(cl) => all.extend(cl),
            None => return Ok(None),
        }
    }
    Ok(Some(all))
}

/// Auslander-Buchsbaum, depth through skeleta, Eagon-Reiner, Euler-Poincaré and `∂∘∂ = 0`.
fn classical(c: &SimplicialComplex, fields: Fields, check: &mut InstanceCheck) -> Result<()> {
    let field = fields.main;
    let n = c.n();
    let ideal = stanley_reisner_ideal(c);
    let dep = depth(c, field)?;
    let projdim = pd(&ideal, field)?.unwrap_or(0);
    if projdim + dep != n {
        check.fail(format!("pd {projdim} + depth {dep} != {n}"));
    }
    let via = depth_via_skeleton(c, field)?;
    if via != dep {
        check.fail(format!("depth {dep} but depth via skeleta {via}"));
    }
    if !ideal.is_zero() {
        let cm = is_cm(c, field)?.holds;
        let linear = graded_betti(&alexander_dual_ideal(&ideal), field)?.is_linear();
        if cm != linear {
            check.fail(format!("cohen-macaulay {cm} but dual resolution linear {linear}"));
        }
        // characteristic dependence is possible in principle, so it is reported, not failed
        if n <= FIELD_SANITY_MAX_N && !ideal.is_unit() {
            let main = graded_betti(&ideal, field)?.by_degree();
            let cross = graded_betti(&ideal, fields.cross)?.by_degree();
            if main != cross {
                check.info.push(format!(
                    "field-sensitive: Betti numbers differ over GF({}) and GF({})",
                    field.p(),
                    fields.cross.p()
                ));
            }
        }
    }
    let f = c.f_vector();
    let chi: i64 = f.iter().enumerate().map(|(k, &v)| if k % 2 == 0 { -(v as i64) } else { v as i64 }).sum();
    let betti = reduced_betti_all(c, field);
    if chi != betti.euler_characteristic() {
        check.fail(format!("reduced euler characteristic {chi} from f-vector, {} from homology", betti.euler_characteristic()));
    }
    let top = c.dim().expect("not void");
    for i in 1..=top {
        let d1 = boundary_matrix(c, i, field)?;
        let d2 = boundary_matrix(c, i + 1, field)?;
        if !d1.mul(&d2, field).is_zero() {
            check.fail(format!("boundary maps in degrees {i} and {} do not compose to zero", i + 1));
        }
    }
    Ok(())
}

fn evaluate(property: Property, c: &SimplicialComplex, grid: &Grid, fields: Fields) -> InstanceCheck {
    check_complex(property, c, grid, fields).unwrap_or_else(|e| InstanceCheck {
        checked: true,
        failure: Some(format!("error: {e}")),
        ..Default::default()
    })
}

/// Greedy facet removal while `fails` keeps holding.
pub fn minimize(c: &SimplicialComplex, fails: impl Fn(&SimplicialComplex) -> bool) -> SimplicialComplex {
    let mut current = c.clone();
    'outer: loop {
        if current.facets().len() <= 1 {
            return current;
        }
        for skip in 0..current.facets().len() {
            let facets = current.facets().iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &f)| f);
            let smaller = SimplicialComplex::from_facets(facets, current.n()).expect("same ground set");
            let smaller = match current.names() {
                Some(names) => smaller.with_names(names.to_vec()).expect("same ground set"),
                None => smaller,
            };
            if fails(&smaller) {
                current = smaller;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Runs one property over a corpus, instance-parallel; failures are minimized.
pub fn run_property(property: Property, corpus: &[SimplicialComplex], grid: &Grid, fields: Fields) -> PropertyReport {
    let start = Instant::now();
    let results: Vec<InstanceCheck> = corpus.par_iter().map(|c| evaluate(property, c, grid, fields)).collect();
    let mut report = PropertyReport::empty(property.name());
    for (c, check) in corpus.iter().zip(results) {
        let failing = check.is_failure();
        let instance = || {
            if failing {
                minimize(c, |s| evaluate(property, s, grid, fields).is_failure()).to_string()
            } else {
                c.to_string()
            }
        };
        report.absorb(check, instance);
    }
    report.finish(start)
}

/// Reisner, dual-graph, Alexander-dual and necessity checks merged into one report.
pub fn run_equivalence_suite(spec: &CorpusSpec, grid: &Grid, fields: Fields) -> Result<PropertyReport> {
    let corpus = spec.generate()?;
    let parts: Vec<PropertyReport> = [
        Property::ReisnerEquivalence,
        Property::DualGraphEquivalence,
        Property::AlexanderEquivalence,
        Property::Lemma63Necessity,
    ]
    .into_iter()
    .map(|p| run_property(p, &corpus, grid, fields))
    .collect();
    let mut merged = PropertyReport::merge("equivalence", &parts);
    merged.checked = parts.iter().map(|p| p.checked).max().unwrap_or(0);
    merged.skipped = corpus.len() - merged.checked;
    Ok(merged)
}

/// `complex_of_ideal(pol(I))` satisfying `(S_ℓ^j)` implies `complex_of_ideal(√I)` does.
pub fn check_radical_transfer(ideal: &MonomialIdeal, ell: usize, j: usize, field: PrimeField) -> Result<InstanceCheck> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(InstanceCheck::skipped());
    }
    let (pol, _) = polarize(ideal)?.restrict_to_used();
    let antecedent = complex_of_ideal(&pol);
    let mut check = InstanceCheck::checked();
    if truth(&antecedent, ell, j, field)? {
        let consequent = complex_of_ideal(&radical(ideal));
        if !truth(&consequent, ell, j, field)? {
            check.fail(format!("polarization satisfies (S_{ell}^{j}) but the radical does not"));
        }
    } else {
        check.checked = false;
    }
    Ok(check)
}

pub fn run_radical_transfer(ideals: &[MonomialIdeal], grid: &Grid, field: PrimeField) -> PropertyReport {
    let start = Instant::now();
    let results: Vec<InstanceCheck> = ideals
        .par_iter()
        .map(|ideal| {
            let mut merged = InstanceCheck::default();
            for (ell, j) in grid.cells().filter(|&(l, _)| l >= 2) {
                match check_radical_transfer(ideal, ell, j, field) {
                    Ok(c) => {
                        merged.checked |= c.checked;
                        if let Some(f) = c.failure {
                            merged.fail(f);
                        }
                    }
                    Err(e) => {
                        merged.checked = true;
                        merged.fail(format!("error: {e}"));
                    }
                }
            }
            merged
        })
        .collect();
    let mut report = PropertyReport::empty(Property::RadicalTransfer.name());
    for (ideal, check) in ideals.iter().zip(results) {
        report.absorb(check, || ideal.to_string());
    }
    report.finish(start)
}

/// What a suite section samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SectionCorpus {
    Complexes(CorpusSpec),
    Monomial { n_max: usize, max_deg: u32, samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub corpus: SectionCorpus,
    pub properties: Vec<Property>,
    /// Override the global grid when set.
    pub ells: Option<Vec<usize>>,
    pub js: Option<Vec<usize>>,
}

impl Section {
    pub fn grid(&self, global: &Grid) -> Grid {
        Grid {
            ells: self.ells.clone().unwrap_or_else(|| global.ells.clone()),
            js: self.js.clone().unwrap_or_else(|| global.js.clone()),
        }
    }
}

/// A parsed suite configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub fields: Fields,
    pub grid: Grid,
    pub output: Option<String>,
    pub sections: Vec<Section>,
}

fn parse_list(value: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in value.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad range '{part}'")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad range '{part}'")))?;
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| Error::InvalidArgument(format!("bad integer '{part}'")))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses `a`, `a,b,c` or inclusive ranges `a..b`.
pub fn parse_range_list(value: &str) -> Result<Vec<usize>> {
    parse_list(value)
}

fn parse_num<T: FromStr>(line: usize, key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Parse { line, message: format!("bad value '{value}' for {key}") })
}

impl SuiteConfig {
    /// `key = value` lines; `[name]` opens a section; `#` comments.
    ///
    /// Global keys: `field`, `cross_field`, `ell`, `j`, `output`. Section keys: `kind`
    /// (`pure`, `nonpure`, `monomial`), `mode`, `n`, `n_min`, `n_max`, `k`, `samples`, `seed`,
    /// `max_deg`, `properties`.
    pub fn parse(text: &str) -> Result<SuiteConfig> {
        let mut fields = Fields::default();
        let mut ells = vec![2, 3, 4];
        let mut js = vec![0, 1, 2, 3];
        let mut output = None;
        let mut raw: Vec<(usize, String, BTreeMap<String, (usize, String)>)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let no = idx + 1;
            let line = line.split_once('#').map_or(line, |(l, _)| l).trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                raw.push((no, name.trim().to_string(), BTreeMap::new()));
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse { line: no, message: format!("expected 'key = value', got '{line}'") })?;
            if let Some((_, _, map)) = raw.last_mut() {
                map.insert(key.to_string(), (no, value.to_string()));
                continue;
            }
            let bad = |e: Error| Error::Parse { line: no, message: e.to_string() };
            match key {
                "field" => fields.main = PrimeField::new(parse_num(no, key, value)?).map_err(bad)?,
                "cross_field" => fields.cross = PrimeField::new(parse_num(no, key, value)?).map_err(bad)?,
                "ell" => ells = parse_list(value).map_err(bad)?,
                "j" => js = parse_list(value).map_err(bad)?,
                "output" => output = Some(value.to_string()),
                _ => return Err(Error::Parse { line: no, message: format!("unknown key '{key}'") }),
            }
        }
        let grid = Grid::new(ells, js)?;
        let sections = raw.into_iter().map(|(no, name, map)| parse_section(no, name, map)).collect::<Result<Vec<_>>>()?;
        if sections.is_empty() {
            return Err(Error::VacuousSuite("no sections configured".into()));
        }
        Ok(SuiteConfig { fields, grid, output, sections })
    }
}

fn parse_section(no: usize, name: String, map: BTreeMap<String, (usize, String)>) -> Result<Section> {
    let get = |k: &str| map.get(k).map(|(l, v)| (*l, v.as_str()));
    let num = |k: &str| -> Result<Option<u64>> { get(k).map(|(l, v)| parse_num::<u64>(l, k, v)).transpose() };
    const KEYS: [&str; 12] =
        ["kind", "mode", "n", "n_min", "n_max", "k", "samples", "seed", "max_deg", "properties", "ell", "j"];
    if let Some((key, (l, _))) = map.iter().find(|(k, _)| !KEYS.contains(&k.as_str())) {
        return Err(Error::Parse { line: *l, message: format!("unknown key '{key}' in section [{name}]") });
    }
    let kind = get("kind").map(|(_, v)| v).unwrap_or("pure");
    let seed = num("seed")?.unwrap_or(0);
    let samples = num("samples")?.unwrap_or(100) as usize;
    let n = num("n")?.map(|v| v as usize);
    let n_max = num("n_max")?.map(|v| v as usize);
    let missing = |k: &str| Error::Parse { line: no, message: format!("section [{name}] needs '{k}'") };
    let (corpus, defaults): (SectionCorpus, &[Property]) = match kind {
        "monomial" => {
            let n_max = n_max.or(n).ok_or_else(|| missing("n_max"))?;
            let max_deg = num("max_deg")?.unwrap_or(2) as u32;
            if n_max * max_deg as usize > MONOMIAL_MAX_VARS {
                return Err(Error::CapExceeded(format!(
                    "section [{name}]: n_max·max_deg = {} exceeds {MONOMIAL_MAX_VARS}",
                    n_max * max_deg as usize
                )));
            }
            (SectionCorpus::Monomial { n_max, max_deg, samples, seed }, &[Property::RadicalTransfer])
        }
        "pure" | "nonpure" => {
            let mode = match get("mode").map(|(_, v)| v).unwrap_or("random") {
                "exhaustive" => Mode::Exhaustive,
                "random" => Mode::Random,
                other => return Err(Error::Parse { line: no, message: format!("unknown mode '{other}'") }),
            };
            let top = n.or(n_max).ok_or_else(|| missing("n"))?;
            let n_min = num("n_min")?.map(|v| v as usize).unwrap_or(if n.is_some() { top } else { 2 });
            let k = num("k")?.map(|v| v as usize);
            let spec = match (kind, mode) {
                ("pure", Mode::Exhaustive) => CorpusSpec::exhaustive(top, k.ok_or_else(|| missing("k"))?),
                ("pure", Mode::Random) => CorpusSpec { facet_size: k, ..CorpusSpec::random_pure(n_min, top, samples, seed) },
                ("nonpure", Mode::Random) => CorpusSpec::random_nonpure(n_min, top, samples, seed),
                _ => return Err(Error::Parse { line: no, message: "nonpure corpora are random only".into() }),
            };
            spec.validate().map_err(|e| match e {
                Error::CapExceeded(m) => Error::CapExceeded(format!("section [{name}]: {m}")),
                other => other,
            })?;
            (SectionCorpus::Complexes(spec), if kind == "pure" { &Property::COMPLEX[..] } else { &Property::UNRESTRICTED[..] })
        }
        other => return Err(Error::Parse { line: no, message: format!("unknown kind '{other}'") }),
    };
    let properties = match get("properties") {
        Some((l, v)) => v
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|e: Error| Error::Parse { line: l, message: e.to_string() }))
            .collect::<Result<Vec<Property>>>()?,
        None => defaults.to_vec(),
    };
    if properties.is_empty() {
        return Err(Error::VacuousSuite(format!("section [{name}] has no properties")));
    }
    let list = |k: &str| -> Result<Option<Vec<usize>>> {
        get(k).map(|(l, v)| parse_list(v).map_err(|e| Error::Parse { line: l, message: e.to_string() })).transpose()
    };
    let (ells, js) = (list("ell")?, list("j")?);
    if ells.as_ref().is_some_and(Vec::is_empty) || js.as_ref().is_some_and(Vec::is_empty) {
        return Err(Error::VacuousSuite(format!("section [{name}]: the (ell, j) grid is empty")));
    }
    Ok(Section { name, corpus, properties, ells, js })
}

/// Reports of one section.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionReport {
    pub name: String,
    pub instances: usize,
    pub reports: Vec<PropertyReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub sections: Vec<SectionReport>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.reports().map(|r| r.failures.len()).sum()
    }

    pub fn vacuous(&self) -> impl Iterator<Item = (&str, &PropertyReport)> {
        self.sections.iter().flat_map(|s| s.reports.iter().filter(|r| r.is_vacuous()).map(move |r| (s.name.as_str(), r)))
    }

    pub fn reports(&self) -> impl Iterator<Item = &PropertyReport> {
        self.sections.iter().flat_map(|s| s.reports.iter())
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0 && self.vacuous().next().is_none()
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut sections = Vec::new();
    for section in &config.sections {
        let grid = section.grid(&config.grid);
        let (instances, reports) = match &section.corpus {
            SectionCorpus::Complexes(spec) => {
                let corpus = spec.generate()?;
                let reports = section
                    .properties
                    .iter()
                    .map(|&p| {
                        if p == Property::RadicalTransfer {
                            Err(Error::InvalidArgument(format!("section [{}]: {p} needs kind = monomial", section.name)))
                        } else {
                            Ok(run_property(p, &corpus, &grid, config.fields))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                (corpus.len(), reports)
            }
            SectionCorpus::Monomial { n_max, max_deg, samples, seed } => {
                if section.properties.iter().any(|&p| p != Property::RadicalTransfer) {
                    return Err(Error::InvalidArgument(format!(
                        "section [{}]: monomial corpora support radical-transfer only",
                        section.name
                    )));
                }
                let ideals = random_ideal_corpus(*n_max, *max_deg, *samples, *seed)?;
                (ideals.len(), vec![run_radical_transfer(&ideals, &grid, config.fields.main)])
            }
        };
        sections.push(SectionReport { name: section.name.clone(), instances, reports });
    }
    Ok(SuiteReport { sections })
}
