//! Text formats for complexes and ideals.
//!
//! Facet file: one facet per line, vertices separated by whitespace or commas. Labels are mapped
//! to indices in order of first appearance unless a `vertices:` header fixes the ground set.
//! The line `empty` is the empty face; a file without facet lines is the void complex.
//!
//! Ideal file: a `vars:` header followed by one generator per line, written as a `*`-product of
//! `name` or `name^e` factors. The line `1` is the unit ideal.
//!
//! In both formats `#` starts a comment line.

use std::collections::HashMap;
use std::fmt;

use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, SquarefreeIdeal};

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_once('#').map_or(l, |(kept, _)| kept).trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?;
    rest.strip_prefix(':').map(str::trim)
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty())
}

/// Reads either format; a `vars:` header selects the ideal format.
pub fn parse_input(text: &str) -> Result<Input> {
    match content_lines(text).next() {
        Some((_, first)) if header(first, "vars").is_some() => Ok(Input::Ideal(parse_ideal(text)?)),
        _ => Ok(Input::Complex(parse_facets(text)?)),
    }
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut fixed = false;
    let mut faces = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = header(line, "vertices") {
            if fixed || !faces.is_empty() {
                return Err(parse_err(no, "'vertices:' header must come first and only once"));
            }
            for t in tokens(rest) {
                if index.insert(t.to_string(), names.len()).is_some() {
                    return Err(parse_err(no, format!("duplicate vertex '{t}'")));
                }
                names.push(t.to_string());
            }
            if names.len() > MAX_VERTICES {
                return Err(parse_err(no, format!("{} vertices exceed the maximum of {MAX_VERTICES}", names.len())));
            }
            fixed = true;
            continue;
        }
        if line == "empty" {
            faces.push(Face::EMPTY);
            continue;
        }
        let mut face = Face::EMPTY;
        for t in tokens(line) {
            let v = match index.get(t) {
                Some(&v) => v,
                None if fixed => return Err(parse_err(no, format!("vertex '{t}' not declared in header"))),
                None => {
                    if names.len() == MAX_VERTICES {
                        return Err(parse_err(no, format!("more than {MAX_VERTICES} distinct vertices")));
                    }
                    index.insert(t.to_string(), names.len());
                    names.push(t.to_string());
                    names.len() - 1
                }
            };
            face = face.with(v);
        }
        faces.push(face);
    }
    let n = names.len();
    SimplicialComplex::from_facets(faces, n)?.with_names(names)
}

/// Canonical facet file: header, then facets in ascending bit order with sorted vertices.
pub fn write_facets(complex: &SimplicialComplex) -> String {
    complex.to_string()
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.n()).map(|v| self.name(v)).collect();
        writeln!(f, "vertices: {}", names.join(" "))?;
        for facet in self.facets() {
            if facet.is_empty() {
                writeln!(f, "empty")?;
            } else {
                let labels: Vec<&str> = facet.iter().map(|v| names[v].as_str()).collect();
                writeln!(f, "{}", labels.join(" "))?;
            }
        }
        Ok(())
    }
}

fn parse_monomial(no: usize, line: &str, index: &HashMap<&str, usize>, n: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    for factor in line.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(parse_err(no, "empty factor"));
        }
        let (name, e) = match factor.split_once('^') {
            Some((name, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| parse_err(no, format!("bad exponent in '{factor}'")))?;
                (name.trim(), e)
            }
            None => (factor, 1),
        };
        let v = *index.get(name).ok_or_else(|| parse_err(no, format!("unknown variable '{name}'")))?;
        exps[v] += e;
    }
    Ok(Monomial::new(exps))
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let Some((no, first)) = lines.next() else {
        return Err(parse_err(1, "missing 'vars:' header"));
    };
    let vars: Vec<&str> = header(first, "vars").ok_or_else(|| parse_err(no, "expected 'vars:' header"))?.split_whitespace().collect();
    let mut index = HashMap::new();
    for (i, &v) in vars.iter().enumerate() {
        if v.contains(['*', '^']) {
            return Err(parse_err(no, format!("invalid variable name '{v}'")));
        }
        if index.insert(v, i).is_some() {
            return Err(parse_err(no, format!("duplicate variable '{v}'")));
        }
    }
    let n = vars.len();
    let mut gens = Vec::new();
    for (no, line) in lines {
        if line == "1" && !index.contains_key("1") {
            gens.push(Monomial::one(n));
        } else {
            gens.push(parse_monomial(no, line, &index, n)?);
        }
    }
    MonomialIdeal::with_names(vars.into_iter().map(String::from).collect(), gens)
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.names().join(" "))?;
        for g in self.gens() {
            if g.is_one() {
                writeln!(f, "1")?;
                continue;
            }
            let factors: Vec<String> = g
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { self.names()[v].clone() } else { format!("{}^{e}", self.names()[v]) })
                .collect();
            writeln!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_monomial_ideal().fmt(f)
    }
}
