//! The machine-readable report, schema `serre-report/1`.
//!
//! Every numeric or boolean field that can be undefined is a [`Na`]: either the value or the
//! string `"not applicable"`.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::invariants::{depth, graded_betti, is_cm, MAX_BETTI_VARS};
use crate::linalg::PrimeField;
use crate::monomial::stanley_reisner_ideal;
use crate::serre::{Criterion, ProfileCell, SerreProfile, SerreVerdict, Status, Witness};
use crate::verify::PropertyReport;

pub const SCHEMA: &str = "serre-report/1";
pub const NOT_APPLICABLE: &str = "not applicable";

/// A value or an explicit "not applicable".
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Na<T>(pub Option<T>);

impl<T> Na<T> {
    pub fn some(v: T) -> Self {
        Na(Some(v))
    }

    pub fn none() -> Self {
        Na(None)
    }
}

impl<T> From<Option<T>> for Na<T> {
    fn from(v: Option<T>) -> Self {
        Na(v)
    }
}

impl<T: Serialize> Serialize for Na<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.0 {
            Some(v) => v.serialize(s),
            None => s.serialize_str(NOT_APPLICABLE),
        }
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Na<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw<T> {
            Marker(String),
            Value(T),
        }
        match Raw::<T>::deserialize(d)? {
            Raw::Value(v) => Ok(Na(Some(v))),
            Raw::Marker(m) if m == NOT_APPLICABLE => Ok(Na(None)),
            Raw::Marker(m) => Err(de::Error::custom(format!("expected a value or \"{NOT_APPLICABLE}\", got \"{m}\""))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub source: String,
    /// `complex` or `ideal`.
    pub kind: String,
    pub n: usize,
    pub vertex_names: Vec<String>,
    /// Facets of the complex, or generators of the ideal, in the text format.
    pub canonical: String,
}

impl InputDescriptor {
    pub fn complex(source: &str, c: &SimplicialComplex) -> Self {
        InputDescriptor {
            source: source.to_string(),
            kind: "complex".into(),
            n: c.n(),
            vertex_names: (0..c.n()).map(|v| c.name(v)).collect(),
            canonical: c.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBlock {
    pub kind: String,
    pub dim: Na<i64>,
    pub krull_dim: Na<usize>,
    pub pure: Na<bool>,
    pub depth: Na<usize>,
    /// `pd S/I_Δ`.
    pub pd: Na<usize>,
    /// `reg I_Δ`.
    pub reg: Na<usize>,
    pub f_vector: Na<Vec<usize>>,
    pub cohen_macaulay: Na<bool>,
}

impl InvariantBlock {
    /// Invariants of `K[Δ]`; `reg` is only computed up to the Betti sweep cap.
    pub fn compute(c: &SimplicialComplex, field: PrimeField) -> Result<Self> {
        let kind = format!("{:?}", c.kind()).to_lowercase();
        if c.is_void() {
            return Ok(InvariantBlock {
                kind,
                dim: Na::none(),
                krull_dim: Na::none(),
                pure: Na::none(),
                depth: Na::none(),
                pd: Na::none(),
                reg: Na::none(),
                f_vector: Na::none(),
                cohen_macaulay: Na::none(),
            });
        }
        let dep = depth(c, field)?;
        let ideal = stanley_reisner_ideal(c);
        let reg = if ideal.is_zero() || c.n() > MAX_BETTI_VARS { None } else { graded_betti(&ideal, field)?.reg() };
        Ok(InvariantBlock {
            kind,
            dim: Na::some(c.dim().expect("not void") as i64),
            krull_dim: c.krull_dim().into(),
            pure: Na::some(c.is_pure()),
            depth: Na::some(dep),
            pd: Na::some(c.n() - dep),
            reg: reg.into(),
            f_vector: Na::some(c.f_vector()),
            cohen_macaulay: Na::some(is_cm(c, field)?.holds),
        })
    }
}

/// A verdict as reported: `satisfied` is "not applicable" whenever the criterion does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub criterion: Criterion,
    pub ell: usize,
    pub j: usize,
    pub field: Na<u64>,
    pub status: Status,
    pub satisfied: Na<bool>,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl From<&SerreVerdict> for VerdictRecord {
    fn from(v: &SerreVerdict) -> Self {
        VerdictRecord {
            criterion: v.criterion,
            ell: v.ell,
            j: v.j,
            field: v.field.map(u64::from).into(),
            status: v.status(),
            satisfied: if v.applicable { Na::some(v.satisfied) } else { Na::none() },
            witness: v.witness.clone(),
            note: v.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub ell: usize,
    pub j: usize,
    pub satisfied: bool,
    pub agreeing: Vec<Criterion>,
    pub disagreement: bool,
    pub verdicts: Vec<VerdictRecord>,
}

impl From<&ProfileCell> for CellRecord {
    fn from(c: &ProfileCell) -> Self {
        CellRecord {
            ell: c.ell,
            j: c.j,
            satisfied: c.satisfied,
            agreeing: c.agreeing.clone(),
            disagreement: c.disagreement,
            verdicts: c.verdicts.iter().map(VerdictRecord::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub krull_dim: usize,
    pub cells: Vec<CellRecord>,
}

impl From<&SerreProfile> for ProfileRecord {
    fn from(p: &SerreProfile) -> Self {
        ProfileRecord { krull_dim: p.krull_dim, cells: p.cells.iter().map(CellRecord::from).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input: Option<InputDescriptor>,
    pub field: u64,
    pub invariants: Option<InvariantBlock>,
    pub verdicts: Vec<VerdictRecord>,
    pub profile: Option<ProfileRecord>,
    pub properties: Vec<PropertyReport>,
    /// Serialized command output (Betti rows, facet or ideal files).
    pub output: Option<String>,
    pub messages: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, field: PrimeField) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input: None,
            field: field.into(),
            invariants: None,
            verdicts: Vec::new(),
            profile: None,
            properties: Vec::new(),
            output: None,
            messages: Vec::new(),
            exit_code: 0,
        }
    }
}
