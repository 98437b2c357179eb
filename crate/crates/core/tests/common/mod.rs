//! Generators and independent oracles shared by the property and acceptance
//! suites. Nothing here calls into the library's linear algebra.

#![allow(dead_code, clippy::needless_range_loop)]

use besse::{Int, Rational, SeifertData};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Random normalized data: `2 ≤ α ≤ max_alpha`, `1 ≤ β < α`.
pub fn random_normalized<R: Rng>(rng: &mut R, max_alpha: i64, max_k: usize, max_g: i64, max_b: i64) -> SeifertData {
    let k = rng.gen_range(0..=max_k);
    let mut pairs = Vec::with_capacity(k);
    while pairs.len() < k {
        let alpha = rng.gen_range(2..=max_alpha);
        let beta = rng.gen_range(1..alpha);
        if alpha.gcd(&beta) == 1 {
            pairs.push((alpha, beta));
        }
    }
    let g = rng.gen_range(0..=max_g);
    let b = rng.gen_range(-max_b..=max_b);
    SeifertData::new(b, g, pairs).unwrap().normalize()
}

/// Random unnormalized data: `1 ≤ α ≤ max_alpha`, `|β| ≤ max_beta`.
pub fn random_raw<R: Rng>(
    rng: &mut R,
    max_alpha: i64,
    max_beta: i64,
    max_k: usize,
    max_g: i64,
    max_b: i64,
) -> SeifertData {
    let k = rng.gen_range(0..=max_k);
    let mut pairs = Vec::with_capacity(k);
    while pairs.len() < k {
        let alpha = rng.gen_range(1..=max_alpha);
        let beta = rng.gen_range(-max_beta..=max_beta);
        if alpha.gcd(&beta) == 1 {
            pairs.push((alpha, beta));
        }
    }
    SeifertData::new(rng.gen_range(-max_b..=max_b), rng.gen_range(0..=max_g), pairs).unwrap()
}

pub fn euler(d: &SeifertData) -> Rational {
    d.pairs().iter().fold(qi(d.b()), |acc, p| acc + q(p.beta, p.alpha))
}

pub fn chi(d: &SeifertData) -> Rational {
    d.pairs().iter().fold(qi(2 - 2 * i64::from(d.genus())), |acc, p| acc - (qi(1) - q(1, p.alpha)))
}

/// Closed-form test, written out directly.
pub fn criterion_oracle(d: &SeifertData) -> bool {
    let e = euler(d);
    assert!(!e.is_zero());
    let c = chi(d) / e;
    if !c.is_integer() {
        return false;
    }
    let c = c.to_integer();
    d.normalize().pairs().iter().all(|p| (Int::from(p.beta) * &c - Int::one()).is_multiple_of(&Int::from(p.alpha)))
}

/// `b = 0` pairs: `b` absorbed into the last normalized pair.
pub fn zero_b_pairs(d: &SeifertData) -> Vec<(i64, i64)> {
    let n = d.normalize();
    let mut pairs: Vec<(i64, i64)> = n.pairs().iter().map(|p| (p.alpha, p.beta)).collect();
    match pairs.last_mut() {
        Some(last) => last.1 += n.b() * last.0,
        None => pairs.push((1, n.b())),
    }
    pairs
}

pub fn a_m_oracle(pairs: &[(i64, i64)]) -> Vec<Vec<Rational>> {
    let n = pairs.len();
    let mut a = vec![vec![qi(0); n + 1]; n + 1];
    for (j, &(alpha, beta)) in pairs.iter().enumerate() {
        a[j][j] = qi(alpha);
        a[j][n] = qi(beta);
        a[n][j] = qi(-1);
    }
    a
}

pub fn c1_oracle(pairs: &[(i64, i64)], g: i64) -> Vec<Rational> {
    let n = pairs.len();
    let mut v: Vec<Rational> = pairs[..n - 1].iter().map(|&(a, _)| qi(a - 1)).collect();
    v.push(qi((2 * g - 1) * pairs[n - 1].0 - 1));
    v.push(qi(0));
    v
}

/// Unique solution of a square system by Gauss-Jordan elimination over the
/// rationals, or `None` when singular.
pub fn rational_solve(mut a: Vec<Vec<Rational>>, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        v.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        v[col] *= &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &v[col];
                v[r] -= t;
            }
        }
    }
    Some(v)
}

pub fn det_oracle(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = qi(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return qi(0);
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Lattice test via a rational solve of the nonsingular system.
pub fn lattice_oracle(d: &SeifertData) -> bool {
    let pairs = zero_b_pairs(d);
    let x = rational_solve(a_m_oracle(&pairs), c1_oracle(&pairs, i64::from(d.genus())))
        .expect("A_M is nonsingular when e != 0");
    x.iter().all(|t| t.is_integer())
}

/// Rank over `Z/2` by plain elimination on a byte matrix.
pub fn rank_mod2_oracle(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                for k in 0..cols {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Robbin-Salamon index of `t ↦ exp(2π i (n/d) t)` by counting crossings on
/// the grid `t = j/N`: the path meets the Maslov cycle exactly when
/// `(n/d) t ∈ Z`, each crossing form has signature `2 sgn(n/d)`, and the
/// endpoints count half.
pub fn crossing_index(n: i64, d: i64) -> i64 {
    assert!(d > 0);
    if n == 0 {
        return 0;
    }
    let sig = 2 * n.signum();
    let grid = 24 * n.abs() * d;
    let mut twice = 0;
    for j in 0..=grid {
        // (n/d)(j/grid) ∈ Z
        if (n * j) % (d * grid) == 0 {
            let weight = if j == 0 || j == grid { 1 } else { 2 };
            twice += weight * sig;
        }
    }
    twice / 2
}

/// Every normalized datum with `g = 0`, at most three pairs, `α ≤ max_alpha`
/// and `|b| ≤ max_b`.
pub fn all_genus_zero(max_alpha: i64, max_b: i64) -> Vec<SeifertData> {
    let mut pool = Vec::new();
    for a in 2..=max_alpha {
        for b in 1..a {
            if a.gcd(&b) == 1 {
                pool.push((a, b));
            }
        }
    }
    let mut sets: Vec<Vec<(i64, i64)>> = vec![vec![]];
    for i in 0..pool.len() {
        sets.push(vec![pool[i]]);
        for j in i..pool.len() {
            sets.push(vec![pool[i], pool[j]]);
            for k in j..pool.len() {
                sets.push(vec![pool[i], pool[j], pool[k]]);
            }
        }
    }
    let mut out = Vec::new();
    for s in sets {
        for b in -max_b..=max_b {
            out.push(SeifertData::new(b, 0, s.clone()).unwrap());
        }
    }
    out
}
