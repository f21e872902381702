//! Independent reference computations checked against the library.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serre_core::invariants::graded_betti;
use serre_core::{rank, ExactMatrix, Face, PrimeField, SquarefreeIdeal};

/// Fraction-free Gaussian elimination over the integers, i.e. the rank over Q.
fn bareiss_rank(rows: usize, cols: usize, values: &[i64]) -> usize {
    let mut m: Vec<Vec<i128>> = values.chunks(cols).map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for k in c + 1..cols {
                m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Plain row reduction modulo a small prime.
fn naive_rank_mod(rows: usize, cols: usize, values: &[i64], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = values.chunks(cols).map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let s = inv(m[r][c]);
        for k in 0..cols {
            m[r][k] = m[r][k] * s % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] - f * m[r][k]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

fn random_matrix(rng: &mut ChaCha8Rng) -> (usize, usize, Vec<i64>) {
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=7);
    // low-rank products show up often enough to exercise dependent rows
    let values = if rng.gen_bool(0.3) {
        let k = rng.gen_range(1..=3);
        let a: Vec<i64> = (0..rows * k).map(|_| rng.gen_range(-3..=3)).collect();
        let b: Vec<i64> = (0..k * cols).map(|_| rng.gen_range(-3..=3)).collect();
        (0..rows * cols).map(|x| (0..k).map(|t| a[(x / cols) * k + t] * b[t * cols + x % cols]).sum()).collect()
    } else {
        (0..rows * cols).map(|_| rng.gen_range(-4..=4)).collect()
    };
    (rows, cols, values)
}

#[test]
fn rank_matches_rational_rank_in_large_characteristic() {
    let field = PrimeField::large();
    let mut rng = ChaCha8Rng::seed_from_u64(0xba2e155);
    for _ in 0..2000 {
        let (rows, cols, values) = random_matrix(&mut rng);
        let m = ExactMatrix::from_i64(rows, cols, &values, field).unwrap();
        assert_eq!(rank(&m, field), bareiss_rank(rows, cols, &values), "{rows}x{cols} {values:?}");
    }
}

#[test]
fn rank_matches_naive_reduction_in_small_characteristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a11);
    for p in [2i64, 3, 5, 7] {
        let field = PrimeField::new(p as u64).unwrap();
        for _ in 0..1000 {
            let (rows, cols, values) = random_matrix(&mut rng);
            let m = ExactMatrix::from_i64(rows, cols, &values, field).unwrap();
            let want = naive_rank_mod(rows, cols, &values, p);
            assert_eq!(rank(&m, field), want, "GF({p}) {rows}x{cols} {values:?}");
            assert!(want <= bareiss_rank(rows, cols, &values));
        }
    }
}

/// Betti numbers read off the Taylor resolution. Tensored with k, only the terms of the
/// differential that keep the lcm survive, so each multidegree gives a small chain complex
/// on the subsets of generators with that lcm.
fn taylor_betti(gens: &[Face]) -> BTreeMap<(usize, Face), usize> {
    let g = gens.len();
    let mut by_lcm: BTreeMap<Face, Vec<u32>> = BTreeMap::new();
    for s in 1u32..(1 << g) {
        let lcm = (0..g).filter(|k| s >> k & 1 == 1).fold(Face::EMPTY, |acc, k| acc.union(gens[k]));
        by_lcm.entry(lcm).or_default().push(s);
    }
    let p = 2;
    let mut out = BTreeMap::new();
    for (lcm, subsets) in by_lcm {
        let max = subsets.iter().map(|s| s.count_ones() as usize).max().unwrap();
        // chain groups C_i = subsets of size i + 1
        let group = |i: usize| -> Vec<u32> { subsets.iter().copied().filter(|s| s.count_ones() as usize == i + 1).collect() };
        // rank of d_i : C_i -> C_{i-1}
        let d_rank = |i: usize| -> usize {
            if i == 0 {
                return 0;
            }
            let src = group(i);
            let dst = group(i - 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let mut values = vec![0i64; dst.len() * src.len()];
            for (c, s) in src.iter().enumerate() {
                for (r, t) in dst.iter().enumerate() {
                    if t & s == *t {
                        values[r * src.len() + c] = 1;
                    }
                }
            }
            naive_rank_mod(dst.len(), src.len(), &values, p)
        };
        for i in 0..max {
            let b = group(i).len() - d_rank(i) - d_rank(i + 1);
            if b > 0 {
                out.insert((i, lcm), b);
            }
        }
    }
    out
}

#[test]
fn graded_betti_matches_taylor_resolution() {
    let field = PrimeField::gf2();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a7102);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(2..=6);
        let count = rng.gen_range(1..=6);
        let gens: Vec<Face> =
            (0..count).map(|_| Face::from_bits(rng.gen_range(1u64..(1 << n)))).filter(|f| f.len() >= 2).collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = SquarefreeIdeal::new(n, gens).unwrap();
        let table = graded_betti(&ideal, field).unwrap();
        let got: BTreeMap<(usize, Face), usize> = table.entries().filter(|(_, v)| *v != 0).collect();
        assert_eq!(got, taylor_betti(ideal.gens()), "{ideal}");
        checked += 1;
    }
}

#[test]
fn taylor_oracle_fixture() {
    // (x0x1, x1x2): one syzygy in degree 3
    let gens = [Face::from_indices([0, 1]), Face::from_indices([1, 2])];
    let b = taylor_betti(&gens);
    assert_eq!(b.len(), 3);
    assert_eq!(b[&(1, Face::from_indices([0, 1, 2]))], 1);
}
