//! Monomial ideals, the Stanley-Reisner dictionary, Alexander duality at the ideal level,
//! polarization and radicals.

use std::cmp::Ordering;
use std::fmt;

use crate::complex::{maximalize, minimalize, Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_face(face: Face, n: usize) -> Self {
        Monomial { exps: (0..n).map(|v| face.contains(v) as u32).collect() }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Face {
        Face::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v))
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Colex order: compare from the highest variable down. On squarefree monomials this is the
/// ascending bit-pattern order of faces.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.iter().rev().cmp(other.exps.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|v| format!("x{v}")).collect()
}

/// A monomial ideal given by its minimal generators. The zero ideal has no generators and the
/// unit ideal has the single generator `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    names: Vec<String>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        Self::with_names(default_names(n), gens)
    }

    pub fn with_names(names: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        let n = names.len();
        if let Some(g) = gens.iter().find(|g| g.arity() != n) {
            return Err(Error::ArityMismatch { expected: n, got: g.arity() });
        }
        let mut sorted = gens;
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        sorted.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for g in sorted {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Ok(MonomialIdeal { n, gens: kept, names })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The global exponent bound `N = max a_j` used to size the polarized ring.
    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    pub fn to_squarefree(&self) -> Result<SquarefreeIdeal> {
        if let Some(g) = self.gens.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(format!("{g:?}")));
        }
        Ok(SquarefreeIdeal {
            n: self.n,
            gens: self.gens.iter().map(Monomial::support).collect(),
            names: self.names.clone(),
        })
    }
}

/// A squarefree monomial ideal; generators are stored as their supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<Face>,
    names: Vec<String>,
}

impl SquarefreeIdeal {
    pub fn new(n: usize, gens: Vec<Face>) -> Result<Self> {
        Self::with_names(default_names(n), gens)
    }

    pub fn with_names(names: Vec<String>, gens: Vec<Face>) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge(n));
        }
        if let Some(g) = gens.iter().find(|g| !g.is_subset(Face::full(n))) {
            let index = g.difference(Face::full(n)).iter().next().unwrap_or(n);
            return Err(Error::VertexOutOfRange { index, n });
        }
        Ok(SquarefreeIdeal { n, gens: minimalize(gens), names })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Face] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_empty())
    }

    /// All generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn to_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: self.gens.iter().map(|g| Monomial::from_face(*g, self.n)).collect(),
            names: self.names.clone(),
        }
    }
}

/// `I_Δ`: generated by the minimal non-faces. VOID gives the unit ideal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> SquarefreeIdeal {
    let names = match complex.names() {
        Some(names) => names.to_vec(),
        None => default_names(complex.n()),
    };
    SquarefreeIdeal { n: complex.n(), gens: complex.minimal_nonfaces(), names }
}

/// Minimal vertex covers of the generators (minimal transversals), computed incrementally.
fn minimal_transversals(gens: &[Face]) -> Vec<Face> {
    let mut covers = vec![Face::EMPTY];
    for &g in gens {
        let mut next = Vec::with_capacity(covers.len() * 2);
        for &t in &covers {
            if !t.intersection(g).is_empty() {
                next.push(t);
            } else {
                next.extend(g.iter().map(|v| t.with(v)));
            }
        }
        covers = minimalize(next);
    }
    covers
}

/// Supports of the minimal primes. The zero ideal gives `[∅]`; the unit ideal gives none.
pub fn minimal_primes(ideal: &SquarefreeIdeal) -> Vec<Face> {
    minimal_transversals(&ideal.gens)
}

/// The complex `{σ : no generator divides x^σ}`; its facets are the complements of the minimal
/// primes.
pub fn complex_of_ideal(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let ground = Face::full(ideal.n);
    let facets: Vec<Face> = minimal_primes(ideal).into_iter().map(|p| ground.difference(p)).collect();
    let complex = SimplicialComplex::from_facets(maximalize(facets), ideal.n).expect("facets inside ground set");
    complex.with_names(ideal.names.clone()).expect("name count matches")
}

/// `I^∨ = (x^P : P minimal prime of I)`. The zero ideal dualizes to the unit ideal and vice
/// versa; callers check [`SquarefreeIdeal::is_unit`] / [`SquarefreeIdeal::is_zero`].
pub fn alexander_dual_ideal(ideal: &SquarefreeIdeal) -> SquarefreeIdeal {
    SquarefreeIdeal { n: ideal.n, gens: minimal_primes(ideal), names: ideal.names.clone() }
}

/// `c = n − dim K[Δ]` for `Δ` the complex of `ideal`.
pub fn codim(ideal: &SquarefreeIdeal) -> Result<usize> {
    let krull = complex_of_ideal(ideal).krull_dim().ok_or(Error::UnitIdeal)?;
    Ok(ideal.n - krull)
}

/// Supports of the generators, minimalized.
pub fn radical(ideal: &MonomialIdeal) -> SquarefreeIdeal {
    SquarefreeIdeal {
        n: ideal.n,
        gens: minimalize(ideal.gens.iter().map(Monomial::support).collect()),
        names: ideal.names.clone(),
    }
}

/// Result of polarizing a monomial ideal in `n` variables with exponent bound `N`.
///
/// Polarized variable `x_{k,l}` (`1 ≤ l ≤ N`) has index `k·N + (l − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: SquarefreeIdeal,
    pub original_vars: usize,
    pub width: usize,
}

impl Polarization {
    pub fn index(&self, k: usize, l: usize) -> usize {
        k * self.width + (l - 1)
    }

    /// Variables dividing some generator.
    pub fn used(&self) -> Face {
        self.ideal.gens.iter().fold(Face::EMPTY, |acc, g| acc.union(*g))
    }

    /// The polarization restricted to the variables that occur in a generator, together with the
    /// names of the dropped variables.
    pub fn restrict_to_used(&self) -> (SquarefreeIdeal, Vec<String>) {
        let used = self.used();
        let keep: Vec<usize> = used.iter().collect();
        let dropped = (0..self.ideal.n).filter(|v| !used.contains(*v)).map(|v| self.ideal.names[v].clone()).collect();
        let relabel = |g: Face| Face::from_indices(g.iter().map(|v| keep.binary_search(&v).expect("used variable")));
        let names = keep.iter().map(|&v| self.ideal.names[v].clone()).collect();
        let gens = self.ideal.gens.iter().map(|&g| relabel(g)).collect();
        (SquarefreeIdeal::with_names(names, gens).expect("restriction stays within bounds"), dropped)
    }

    /// Substitutes `x_{k,l} ↦ x_k` in every generator, giving an ideal in the original ring.
    pub fn depolarize(&self) -> MonomialIdeal {
        let n = self.original_vars;
        let gens = self
            .ideal
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; n];
                for v in g.iter() {
                    exps[v / self.width] += 1;
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(n, gens).expect("arity matches")
    }
}

/// `pol(u) = ∏_{k : a_k ≠ 0} x_{k,1} ⋯ x_{k,a_k}` applied to every minimal generator, in the ring
/// with `n·N` variables listed blockwise `x_{0,1}, …, x_{0,N}, x_{1,1}, …`.
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let width = ideal.max_exponent() as usize;
    let total = ideal.n * width;
    if total > MAX_VERTICES {
        return Err(Error::GroundSetTooLarge(total));
    }
    let names: Vec<String> =
        (0..ideal.n).flat_map(|k| (1..=width).map(move |l| (k, l))).map(|(k, l)| format!("{}_{l}", ideal.names[k])).collect();
    let gens = ideal
        .gens
        .iter()
        .map(|u| {
            Face::from_indices(
                u.exps.iter().enumerate().flat_map(|(k, &a)| (0..a as usize).map(move |l| k * width + l)),
            )
        })
        .collect();
    Ok(Polarization { ideal: SquarefreeIdeal::with_names(names, gens)?, original_vars: ideal.n, width })
}
