//! Deciders for the generalized Serre condition `(S_ℓ^j)`:
//! `depth R_p ≥ min{ℓ, dim R_p − j}` for every prime `p` of the Stanley-Reisner ring `R = K[Δ]`.
//!
//! The definitional check localizes only at monomial primes, i.e. it walks the links of all faces.
//! The other criteria are independent characterizations:
//!
//! * [`slj_reisner`]: vanishing of `H̃_i(lk F)` for `|F| ≤ d − i − j − 2`, `−1 ≤ i ≤ ℓ − 2` (pure Δ).
//! * [`slj_lemma63`]: the same with `d` replaced by the size of the largest facet over `F`; a
//!   necessary condition for arbitrary Δ.
//! * [`s2j_dual_graph`]: connectivity of links, both through the facet graph `G^{j+1}` of every link
//!   and through "every link of dimension ≥ 1 + j is connected" (pure Δ, `ℓ = 2`).
//! * [`slj_alexander`]: vanishing of graded Betti numbers of the Alexander dual ideal (pure Δ).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::reduced_betti;
use crate::invariants::{graded_betti, local_cohomology_violation, BettiTable};
use crate::linalg::PrimeField;
use crate::monomial::{alexander_dual_ideal, codim, stanley_reisner_ideal};
use crate::outcome::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "definition")]
    Definition,
    #[serde(rename = "reisner")]
    ReisnerGen,
    #[serde(rename = "lemma63")]
    Lemma63Necessary,
    #[serde(rename = "dual-graph")]
    DualGraph,
    #[serde(rename = "alexander")]
    AlexanderDual,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::Definition,
        Criterion::ReisnerGen,
        Criterion::Lemma63Necessary,
        Criterion::DualGraph,
        Criterion::AlexanderDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Definition => "definition",
            Criterion::ReisnerGen => "reisner",
            Criterion::Lemma63Necessary => "lemma63",
            Criterion::DualGraph => "dual-graph",
            Criterion::AlexanderDual => "alexander",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown criterion '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A face whose link violates the condition.
    Face { face: Face },
    /// A face `F` and index `i` with `H̃_i(lk F) ≠ 0`.
    Homology { face: Face, index: isize },
    /// A nonvanishing `[Tor_γ(I^∨, K)]_β`.
    Tor { gamma: usize, beta: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Face { face } => write!(f, "face {face:?}"),
            Witness::Homology { face, index } => write!(f, "face {face:?}, H~_{index} != 0"),
            Witness::Tor { gamma, beta } => write!(f, "Tor_{gamma} in degree {beta} != 0"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Satisfied,
    NotSatisfied,
    NotApplicable,
}

/// One criterion's answer for one `(ℓ, j)`. When `applicable` is false, `satisfied` means nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreVerdict {
    pub criterion: Criterion,
    pub ell: usize,
    pub j: usize,
    /// `None` for field-independent criteria.
    pub field: Option<PrimeField>,
    pub applicable: bool,
    pub satisfied: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl SerreVerdict {
    fn decided(criterion: Criterion, ell: usize, j: usize, field: Option<PrimeField>, witness: Option<Witness>) -> Self {
        SerreVerdict { criterion, ell, j, field, applicable: true, satisfied: witness.is_none(), witness, note: None }
    }

    fn not_applicable(criterion: Criterion, ell: usize, j: usize, field: Option<PrimeField>, note: &str) -> Self {
        SerreVerdict {
            criterion,
            ell,
            j,
            field,
            applicable: false,
            satisfied: false,
            witness: None,
            note: Some(note.to_string()),
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn status(&self) -> Status {
        match (self.applicable, self.satisfied) {
            (false, _) => Status::NotApplicable,
            (true, true) => Status::Satisfied,
            (true, false) => Status::NotSatisfied,
        }
    }
}

pub const NOTE_VOID: &str = "void complex (unit ideal): vacuously true";
pub const NOTE_NON_PURE: &str = "requires pure complex";
pub const NOTE_SMALL_ELL: &str = "requires ell >= 2";
pub const NOTE_ELL_TWO: &str = "requires ell = 2";

/// First face `σ` with `depth K[lk σ] < min{ℓ, dim K[lk σ] − j}`, with no short-circuits.
pub fn definition_violation(complex: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<Option<Face>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for sigma in complex.all_faces() {
        let link = complex.link(sigma)?;
        let krull = link.krull_dim().unwrap_or(0) as isize;
        let target = (ell as isize).min(krull - j as isize);
        if target <= 0 {
            continue;
        }
        if local_cohomology_violation(&link, target as usize, field)?.is_some() {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// The definitional oracle. `ℓ = 1` and `j ≥ dim K[Δ]` are decided without homology.
pub fn slj_definition(complex: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<SerreVerdict> {
    let crit = Criterion::Definition;
    let Some(d) = complex.krull_dim() else {
        let mut v = SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_VOID);
        v.satisfied = true;
        return Ok(v);
    };
    if ell <= 1 || j >= d {
        return Ok(SerreVerdict::decided(crit, ell, j, Some(field), None));
    }
    let witness = definition_violation(complex, ell, j, field)?.map(|face| Witness::Face { face });
    Ok(SerreVerdict::decided(crit, ell, j, Some(field), witness))
}

/// First `(F, i)` with `−1 ≤ i ≤ ℓ − 2`, `|F| ≤ bound(F) − i − j − 2` and `H̃_i(lk F) ≠ 0`.
fn link_homology_violation(
    complex: &SimplicialComplex,
    ell: usize,
    j: usize,
    field: PrimeField,
    bound: impl Fn(Face) -> usize,
) -> Result<Option<(Face, isize)>> {
    for face in complex.all_faces() {
        let d = bound(face) as isize;
        let size = face.len() as isize;
        let indices: Vec<isize> =
            (-1..=ell as isize - 2).filter(|&i| size <= d - i - j as isize - 2).collect();
        if indices.is_empty() {
            continue;
        }
        let link = complex.link(face)?;
        for i in indices {
            if reduced_betti(&link, i, field) != 0 {
                return Ok(Some((face, i)));
            }
        }
    }
    Ok(None)
}

/// Terai's `(S_ℓ)` criterion with the global `d`, for any complex.
pub fn terai(complex: &SimplicialComplex, ell: usize, field: PrimeField) -> Result<Outcome<(Face, isize)>> {
    let d = complex.krull_dim().ok_or(Error::VoidComplex)?;
    Ok(Outcome::from_violation(link_homology_violation(complex, ell, 0, field, |_| d)?))
}

pub fn slj_reisner(complex: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<SerreVerdict> {
    let crit = Criterion::ReisnerGen;
    let Some(d) = complex.krull_dim() else {
        return Ok(SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_VOID));
    };
    if !complex.is_pure() {
        return Ok(SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_NON_PURE));
    }
    if ell < 2 {
        return Ok(SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_SMALL_ELL));
    }
    let violation = link_homology_violation(complex, ell, j, field, |_| d)?;
    Ok(SerreVerdict::decided(crit, ell, j, Some(field), violation.map(|(face, index)| Witness::Homology { face, index })))
}

/// Necessary condition for any complex: a `false` verdict certifies that `(S_ℓ^j)` fails.
pub fn slj_lemma63(complex: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<SerreVerdict> {
    let crit = Criterion::Lemma63Necessary;
    if complex.is_void() {
        return Ok(SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_VOID));
    }
    if ell < 2 {
        return Ok(SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_SMALL_ELL));
    }
    let violation = link_homology_violation(complex, ell, j, field, |face| {
        complex.max_facet_size_over(face).expect("face of the complex")
    })?;
    let v = SerreVerdict::decided(crit, ell, j, Some(field), violation.map(|(face, index)| Witness::Homology { face, index }));
    Ok(if complex.is_pure() { v } else { v.with_note("necessary only: true is inconclusive for non-pure complexes") })
}

/// `(S_2^j)` through connectivity, field-free. Both formulations are evaluated; if they disagree
/// an [`Error::Invariant`] is returned.
pub fn s2j_dual_graph(complex: &SimplicialComplex, j: usize) -> Result<SerreVerdict> {
    let crit = Criterion::DualGraph;
    if complex.is_void() {
        return Ok(SerreVerdict::not_applicable(crit, 2, j, None, NOTE_VOID));
    }
    if !complex.is_pure() {
        return Ok(SerreVerdict::not_applicable(crit, 2, j, None, NOTE_NON_PURE));
    }
    let by_graph = complex.j_locally_connected_witness(j + 1)?;
    let mut by_links = None;
    for face in complex.all_faces() {
        let link = complex.link(face)?;
        if link.dim().unwrap_or(-1) > j as isize && !link.is_connected() {
            by_links = Some(face);
            break;
        }
    }
    if by_graph.is_some() != by_links.is_some() {
        return Err(Error::Invariant(format!(
            "dual-graph formulations disagree on {complex:?} at j={j}: facet graphs {by_graph:?}, links {by_links:?}"
        )));
    }
    Ok(SerreVerdict::decided(crit, 2, j, None, by_links.map(|face| Witness::Face { face })))
}

/// Betti table of `I_Δ^∨` and the codimension of `I_Δ`, computed once per complex.
#[derive(Clone, Debug)]
pub struct AlexanderData {
    pub table: BettiTable,
    pub codim: usize,
}

/// `None` when `I_Δ` is the zero ideal (Δ is the full simplex).
pub fn alexander_data(complex: &SimplicialComplex, field: PrimeField) -> Result<Option<AlexanderData>> {
    let ideal = stanley_reisner_ideal(complex);
    if ideal.is_zero() {
        return Ok(None);
    }
    let c = codim(&ideal)?;
    let table = graded_betti(&alexander_dual_ideal(&ideal), field)?;
    Ok(Some(AlexanderData { table, codim: c }))
}

/// Evaluates the Alexander-dual criterion against precomputed data.
pub fn slj_alexander_with(
    complex: &SimplicialComplex,
    data: Option<&AlexanderData>,
    ell: usize,
    j: usize,
    field: PrimeField,
) -> SerreVerdict {
    let crit = Criterion::AlexanderDual;
    if complex.is_void() {
        return SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_VOID);
    }
    if !complex.is_pure() {
        return SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_NON_PURE);
    }
    if ell < 2 {
        return SerreVerdict::not_applicable(crit, ell, j, Some(field), NOTE_SMALL_ELL);
    }
    let Some(data) = data else {
        return SerreVerdict::decided(crit, ell, j, Some(field), None).with_note("zero ideal: trivially satisfied");
    };
    let outcome = data.table.satisfies_n(data.codim, ell, j);
    SerreVerdict::decided(crit, ell, j, Some(field), outcome.witness.map(|(gamma, beta)| Witness::Tor { gamma, beta }))
}

pub fn slj_alexander(complex: &SimplicialComplex, ell: usize, j: usize, field: PrimeField) -> Result<SerreVerdict> {
    if complex.is_void() || !complex.is_pure() {
        return Ok(slj_alexander_with(complex, None, ell, j, field));
    }
    let data = alexander_data(complex, field)?;
    Ok(slj_alexander_with(complex, data.as_ref(), ell, j, field))
}

/// Whether `verdict` contradicts the definitional ground truth `truth`.
pub fn contradicts(verdict: &SerreVerdict, truth: bool, pure: bool) -> bool {
    if !verdict.applicable {
        return false;
    }
    match verdict.criterion {
        // necessary only, unless the complex is pure
        Criterion::Lemma63Necessary if !pure => truth && !verdict.satisfied,
        _ => verdict.satisfied != truth,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCell {
    pub ell: usize,
    pub j: usize,
    pub satisfied: bool,
    /// Applicable criteria whose verdict matches the definition.
    pub agreeing: Vec<Criterion>,
    pub verdicts: Vec<SerreVerdict>,
    pub disagreement: bool,
}

/// `(S_ℓ^j)` over `ℓ ∈ [1, d]`, `j ∈ [0, d]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreProfile {
    pub complex: String,
    pub field: PrimeField,
    pub krull_dim: usize,
    pub cells: Vec<ProfileCell>,
}

impl SerreProfile {
    pub fn get(&self, ell: usize, j: usize) -> Option<bool> {
        self.cells.iter().find(|c| c.ell == ell && c.j == j).map(|c| c.satisfied)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &ProfileCell> {
        self.cells.iter().filter(|c| c.disagreement)
    }
}

/// Runs every requested criterion on one grid cell; the definition is always evaluated.
pub fn evaluate_cell(
    complex: &SimplicialComplex,
    ell: usize,
    j: usize,
    field: PrimeField,
    criteria: &[Criterion],
    alexander: Option<&AlexanderData>,
) -> Result<ProfileCell> {
    let truth = slj_definition(complex, ell, j, field)?;
    let pure = complex.is_pure();
    let mut verdicts = vec![truth.clone()];
    for &crit in criteria {
        let v = match crit {
            Criterion::Definition => continue,
            Criterion::ReisnerGen => slj_reisner(complex, ell, j, field)?,
            Criterion::Lemma63Necessary => slj_lemma63(complex, ell, j, field)?,
            Criterion::DualGraph if ell == 2 => s2j_dual_graph(complex, j)?,
            Criterion::DualGraph => SerreVerdict::not_applicable(crit, ell, j, None, NOTE_ELL_TWO),
            Criterion::AlexanderDual => slj_alexander_with(complex, alexander, ell, j, field),
        };
        verdicts.push(v);
    }
    let agreeing = verdicts.iter().filter(|v| v.applicable && v.satisfied == truth.satisfied).map(|v| v.criterion).collect();
    let disagreement = verdicts.iter().any(|v| contradicts(v, truth.satisfied, pure));
    Ok(ProfileCell { ell, j, satisfied: truth.satisfied, agreeing, verdicts, disagreement })
}

pub fn serre_profile(complex: &SimplicialComplex, field: PrimeField, criteria: &[Criterion]) -> Result<SerreProfile> {
    let d = complex.krull_dim().ok_or(Error::VoidComplex)?;
    let alexander = if criteria.contains(&Criterion::AlexanderDual) && complex.is_pure() {
        alexander_data(complex, field)?
    } else {
        None
    };
    let mut cells = Vec::new();
    for ell in 1..=d {
        for j in 0..=d {
            cells.push(evaluate_cell(complex, ell, j, field, criteria, alexander.as_ref())?);
        }
    }
    Ok(SerreProfile { complex: complex.to_string(), field, krull_dim: d, cells })
}

/// Least `j` with `(S_ℓ^j)`; always at most `dim K[Δ]`.
pub fn min_j(complex: &SimplicialComplex, ell: usize, field: PrimeField) -> Result<usize> {
    let d = complex.krull_dim().ok_or(Error::VoidComplex)?;
    for j in 0..=d {
        if slj_definition(complex, ell, j, field)?.satisfied {
            return Ok(j);
        }
    }
    Err(Error::Invariant(format!("(S_{ell}^{d}) failed on {complex:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_cm;

    const F2: PrimeField = PrimeField::gf2();

    fn cx(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_index_lists(lists, n).unwrap()
    }

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    fn bowtie() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[2, 3, 4]], 5)
    }

    fn two_triangles() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[3, 4, 5]], 6)
    }

    fn sphere2() -> SimplicialComplex {
        SimplicialComplex::from_facets(Face::full(4).subsets_of_size(3), 4).unwrap()
    }

    fn cycle() -> SimplicialComplex {
        cx(&[&[0, 1], &[1, 2], &[0, 2]], 3)
    }

    #[test]
    fn definition_fixtures() {
        let v = slj_definition(&bowtie(), 2, 0, F2).unwrap();
        assert_eq!(v.witness, Some(Witness::Face { face: f(&[2]) }));
        assert!(slj_definition(&bowtie(), 2, 1, F2).unwrap().satisfied);
        for ell in 1..4 {
            for j in 0..3 {
                assert!(slj_definition(&sphere2(), ell, j, F2).unwrap().satisfied);
            }
        }
        let v = slj_definition(&two_triangles(), 2, 1, F2).unwrap();
        assert_eq!(v.witness, Some(Witness::Face { face: Face::EMPTY }));
        assert!(slj_definition(&two_triangles(), 2, 2, F2).unwrap().satisfied);
        let void = slj_definition(&SimplicialComplex::void(3), 2, 0, F2).unwrap();
        assert_eq!(void.status(), Status::NotApplicable);
    }

    #[test]
    fn reisner_fixtures() {
        assert!(slj_reisner(&bowtie(), 2, 1, F2).unwrap().satisfied);
        let v = slj_reisner(&bowtie(), 2, 0, F2).unwrap();
        assert_eq!(v.witness, Some(Witness::Homology { face: f(&[2]), index: 0 }));
        assert!(slj_reisner(&sphere2(), 3, 0, F2).unwrap().satisfied);
        let np = slj_reisner(&cx(&[&[0, 1, 2], &[2, 3]], 4), 2, 0, F2).unwrap();
        assert_eq!(np.status(), Status::NotApplicable);
        assert_eq!(np.note.as_deref(), Some(NOTE_NON_PURE));
    }

    #[test]
    fn lemma63_fixtures() {
        assert!(!slj_lemma63(&bowtie(), 2, 0, F2).unwrap().satisfied);
        for ell in 2..5 {
            assert!(slj_lemma63(&SimplicialComplex::simplex(4), ell, 0, F2).unwrap().satisfied);
        }
        // non-pure: compare against the definition as ground truth
        let np = cx(&[&[0, 1, 2], &[2, 3]], 4);
        let lemma = slj_lemma63(&np, 2, 0, F2).unwrap();
        let truth = slj_definition(&np, 2, 0, F2).unwrap();
        assert!(!truth.satisfied);
        assert!(!(truth.satisfied && !lemma.satisfied));
    }

    #[test]
    fn dual_graph_fixtures() {
        assert!(s2j_dual_graph(&bowtie(), 1).unwrap().satisfied);
        assert!(!s2j_dual_graph(&bowtie(), 0).unwrap().satisfied);
        assert!(!s2j_dual_graph(&two_triangles(), 1).unwrap().satisfied);
        for j in 0..4 {
            assert!(s2j_dual_graph(&SimplicialComplex::simplex(4), j).unwrap().satisfied);
        }
        assert_eq!(s2j_dual_graph(&bowtie(), 1).unwrap().field, None);
    }

    #[test]
    fn alexander_fixtures() {
        assert!(slj_alexander(&bowtie(), 2, 1, F2).unwrap().satisfied);
        let v = slj_alexander(&bowtie(), 2, 0, F2).unwrap();
        assert_eq!(v.witness, Some(Witness::Tor { gamma: 1, beta: 4 }));
        assert!(slj_alexander(&cycle(), 2, 0, F2).unwrap().satisfied);
        for ell in 2..=4 {
            assert!(slj_alexander(&sphere2(), ell, 0, F2).unwrap().satisfied);
        }
        let full = slj_alexander(&SimplicialComplex::simplex(3), 2, 0, F2).unwrap();
        assert!(full.satisfied && full.applicable);
    }

    #[test]
    fn profiles() {
        let p = serre_profile(&bowtie(), F2, &Criterion::ALL).unwrap();
        assert_eq!(p.get(2, 0), Some(false));
        assert_eq!(p.get(2, 1), Some(true));
        assert_eq!(p.disagreements().count(), 0);
        let simplex = serre_profile(&SimplicialComplex::simplex(3), F2, &Criterion::ALL).unwrap();
        assert!(simplex.cells.iter().all(|c| c.satisfied));
        let tt = serre_profile(&two_triangles(), F2, &Criterion::ALL).unwrap();
        assert_eq!((tt.get(2, 2), tt.get(2, 1)), (Some(true), Some(false)));
        for prof in [&p, &tt] {
            for c in &prof.cells {
                if c.satisfied && c.j < prof.krull_dim {
                    assert_eq!(prof.get(c.ell, c.j + 1), Some(true));
                }
                if c.satisfied && c.ell > 1 {
                    assert_eq!(prof.get(c.ell - 1, c.j), Some(true));
                }
                if c.ell == 1 {
                    assert!(c.satisfied);
                }
            }
        }
    }

    #[test]
    fn min_j_fixtures() {
        assert_eq!(min_j(&bowtie(), 2, F2).unwrap(), 1);
        assert_eq!(min_j(&sphere2(), 3, F2).unwrap(), 0);
        assert_eq!(min_j(&two_triangles(), 2, F2).unwrap(), 2);
    }

    #[test]
    fn terai_matches_reisner_at_top() {
        for c in [bowtie(), cycle(), sphere2(), two_triangles()] {
            let d = c.krull_dim().unwrap();
            let cm = is_cm(&c, F2).unwrap().holds;
            assert_eq!(slj_definition(&c, d, 0, F2).unwrap().satisfied, cm);
            assert_eq!(terai(&c, d.max(2), F2).unwrap().holds, slj_definition(&c, d.max(2), 0, F2).unwrap().satisfied);
        }
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.name().parse::<Criterion>().unwrap(), c);
        }
        assert!("nope".parse::<Criterion>().is_err());
    }
}
