//! Reduced simplicial homology over prime fields.
//!
//! Ranks of boundary maps are memoized in a process-wide cache keyed by the complex value, so
//! links reached along different routes (`lk_{lk σ} τ` versus `lk_Δ (σ ∪ τ)`) share work.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, ExactMatrix, PrimeField};

/// Matrix of `∂_i : C_i → C_{i-1}` in canonical face order. `∂_0` is the augmentation onto the
/// single `∅` cell.
pub fn boundary_matrix(complex: &SimplicialComplex, i: isize, field: PrimeField) -> Result<ExactMatrix> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let rows = complex.faces_of_dim(i - 1);
    let cols = complex.faces_of_dim(i);
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (c, sigma) in cols.iter().enumerate() {
        for (k, v) in sigma.iter().enumerate() {
            let tau = sigma.without(v);
            let r = rows.binary_search(&tau).expect("boundary face present");
            m.set(r, c, field.sign(k));
        }
    }
    Ok(m)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct RankKey {
    n: usize,
    facets: Vec<Face>,
    i: isize,
    p: u32,
}

const CACHE_LIMIT: usize = 1 << 20;

static RANK_CACHE: LazyLock<RwLock<HashMap<RankKey, usize>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn boundary_rank(complex: &SimplicialComplex, i: isize, field: PrimeField) -> usize {
    let dim = complex.dim().unwrap_or(-2);
    if i < 0 || i > dim {
        return 0;
    }
    let key = RankKey { n: complex.n(), facets: complex.facets().to_vec(), i, p: field.p() };
    if let Some(&r) = RANK_CACHE.read().expect("rank cache poisoned").get(&key) {
        return r;
    }
    let m = boundary_matrix(complex, i, field).expect("non-void complex");
    let r = rank(&m, field);
    let mut cache = RANK_CACHE.write().expect("rank cache poisoned");
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    cache.insert(key, r);
    r
}

/// `dim H̃_i(Δ; GF(p))` with the augmented convention: `H̃_{-1}(EMPTY) = 1` and every group of
/// VOID vanishes.
pub fn reduced_betti(complex: &SimplicialComplex, i: isize, field: PrimeField) -> usize {
    let Some(dim) = complex.dim() else {
        return 0;
    };
    if i < -1 || i > dim {
        return 0;
    }
    let chains = complex.faces_of_dim(i).len();
    let cycles = chains - boundary_rank(complex, i, field);
    cycles - boundary_rank(complex, i + 1, field)
}

/// Reduced Betti numbers indexed from `i = -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    pub fn from_values(values: Vec<usize>) -> Self {
        let mut v = BettiVector { values };
        while v.values.last() == Some(&0) {
            v.values.pop();
        }
        v
    }

    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.values.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `(i, dim H̃_i)` for the nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().filter(|(_, &b)| b != 0).map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero().map(|(i, b)| if i.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

pub fn reduced_betti_all(complex: &SimplicialComplex, field: PrimeField) -> BettiVector {
    let Some(dim) = complex.dim() else {
        return BettiVector::default();
    };
    BettiVector::from_values((-1..=dim).map(|i| reduced_betti(complex, i, field)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_index_lists(lists, n).unwrap()
    }

    fn cycle() -> SimplicialComplex {
        cx(&[&[0, 1], &[1, 2], &[0, 2]], 3)
    }

    fn sphere2() -> SimplicialComplex {
        SimplicialComplex::from_facets(Face::full(4).subsets_of_size(3), 4).unwrap()
    }

    #[test]
    fn boundary_matrix_fixtures() {
        let f2 = PrimeField::gf2();
        let d1 = boundary_matrix(&cycle(), 1, f2).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for c in 0..3 {
            assert_eq!((0..3).filter(|&r| d1.get(r, c) == 1).count(), 2);
        }
        let d0 = boundary_matrix(&cycle(), 0, PrimeField::new(7).unwrap()).unwrap();
        assert_eq!((d0.rows(), d0.cols()), (1, 3));
        assert!((0..3).all(|c| d0.get(0, c) == 1));
        // edge {0,1}: removing vertex 0 (k = 0) gives +1 on {1}, removing 1 gives -1 on {0}
        let f3 = PrimeField::new(3).unwrap();
        let edge = boundary_matrix(&SimplicialComplex::simplex(2), 1, f3).unwrap();
        assert_eq!((edge.rows(), edge.cols()), (2, 1));
        assert_eq!((edge.get(0, 0), edge.get(1, 0)), (2, 1));
        assert!(matches!(boundary_matrix(&SimplicialComplex::void(2), 0, f2), Err(Error::VoidComplex)));
    }

    #[test]
    fn betti_fixtures() {
        let f2 = PrimeField::gf2();
        assert_eq!(reduced_betti(&cycle(), 1, f2), 1);
        assert_eq!(reduced_betti(&cycle(), 0, f2), 0);
        assert_eq!(reduced_betti(&SimplicialComplex::empty(3), -1, f2), 1);
        assert_eq!(reduced_betti(&cx(&[&[0], &[1]], 2), 0, f2), 1);
        assert_eq!(reduced_betti(&sphere2(), 2, f2), 1);
        assert_eq!(reduced_betti(&cycle(), -1, f2), 0);
        for i in -1..3 {
            assert_eq!(reduced_betti(&SimplicialComplex::void(3), i, f2), 0);
        }
    }

    #[test]
    fn betti_vectors() {
        let f2 = PrimeField::gf2();
        let bowtie = cx(&[&[0, 1, 2], &[2, 3, 4]], 5);
        assert!(reduced_betti_all(&bowtie, f2).is_zero());
        let c = reduced_betti_all(&cycle(), f2);
        assert_eq!(c.nonzero().collect::<Vec<_>>(), vec![(1, 1)]);
        assert!(reduced_betti_all(&SimplicialComplex::simplex(4), f2).is_zero());
        assert_eq!(reduced_betti_all(&SimplicialComplex::empty(2), f2).get(-1), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let f = PrimeField::new(5).unwrap();
        let c = sphere2();
        for i in 1..=2 {
            let lower = boundary_matrix(&c, i - 1, f).unwrap();
            let upper = boundary_matrix(&c, i, f).unwrap();
            assert!(lower.mul(&upper, f).is_zero());
        }
    }
}
