//! Besse data with vanishing first Chern class.
//!
//! For `χ > 0` the base is a sphere with at most three cone points and the
//! search below is exhaustive within the given bound on `α`. Positivity of
//! `χ` and `e` with `χ/e ∈ Z` forces `0 < e ≤ χ ≤ 2`, hence
//! `-k ≤ b ≤ 2` for normalized data with `k` pairs, so the search over `b`
//! is finite as well.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::chern::{chern_report, ChernReport};
use crate::error::{Error, Result};
use crate::seifert::{AdeType, Pair, SeifertData, ZeroBForm};
use crate::{Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `L(p, p - 1)`, including `S^3 = L(1, 0)`.
    LensSpace(i64),
    Ade(AdeType),
    /// Zoll data over the torus with Euler number `b`.
    BoothbyWangTorus(i64),
    NegativeChiExample,
    Sporadic,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::LensSpace(p) => write!(f, "L({p},{})", p - 1),
            Family::Ade(t) => write!(f, "{t}"),
            Family::BoothbyWangTorus(b) => write!(f, "BW(T^2,{b})"),
            Family::NegativeChiExample => f.write_str("negative-chi"),
            Family::Sporadic => f.write_str("sporadic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub family: Family,
    /// Normalized data.
    pub data: SeifertData,
    pub certificate: ChernReport,
}

/// Lens space order `p` of a presentation with one or two pairs when the
/// divisibility conditions for `c1 = 0` hold:
/// `β | α + 1` for one pair, and `α_1 β_2 + α_2 β_1` dividing both
/// `α_1 + α_2` and `β_1 - β_2` for two.
pub fn lens_condition(form: &ZeroBForm) -> Option<i64> {
    match form.pairs() {
        [p] => (p.beta != 0 && (p.alpha + 1) % p.beta == 0).then_some(p.beta.abs()),
        [p1, p2] => {
            let n = p1.alpha * p2.beta + p2.alpha * p1.beta;
            (n != 0 && (p1.alpha + p2.alpha) % n == 0 && (p1.beta - p2.beta) % n == 0).then_some(n.abs())
        }
        _ => None,
    }
}

fn three_fiber_family(d: &SeifertData) -> Family {
    let key: Vec<(i64, i64)> = d.pairs().iter().map(|p| (p.alpha, p.beta)).collect();
    if d.b() != -1 || d.genus() != 0 {
        return Family::Sporadic;
    }
    match key.as_slice() {
        [(2, 1), (2, 1), (a, 1)] if *a >= 2 => Family::Ade(AdeType::D(*a as u32 + 2)),
        [(2, 1), (3, 1), (3, 1)] => Family::Ade(AdeType::E6),
        [(2, 1), (3, 1), (4, 1)] => Family::Ade(AdeType::E7),
        [(2, 1), (3, 1), (5, 1)] => Family::Ade(AdeType::E8),
        _ => Family::Sporadic,
    }
}

fn positive_family(d: &SeifertData) -> Family {
    if d.pairs().len() <= 2 {
        match lens_condition(&d.zero_b_form()) {
            Some(p) => Family::LensSpace(p),
            None => Family::Sporadic,
        }
    } else {
        three_fiber_family(d)
    }
}

/// All normalized pairs `(α, β)` with `2 ≤ α ≤ max_alpha`.
pub fn normalized_pairs(max_alpha: i64) -> Vec<Pair> {
    let mut out = Vec::new();
    for alpha in 2..=max_alpha {
        for beta in 1..alpha {
            if alpha.gcd(&beta) == 1 {
                out.push(Pair { alpha, beta });
            }
        }
    }
    out
}

/// Sorted multisets of at most `max_k` pairs drawn from `pool`.
fn multisets(pool: &[Pair], max_k: usize) -> Vec<Vec<Pair>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Pair>)> = vec![(0, Vec::new())];
    for _ in 0..max_k {
        let mut next = Vec::new();
        for (start, prefix) in &frontier {
            for (i, p) in pool.iter().enumerate().skip(*start) {
                let mut v = prefix.clone();
                v.push(*p);
                out.push(v.clone());
                next.push((i, v));
            }
        }
        frontier = next;
    }
    out
}

fn order_key(d: &SeifertData) -> (usize, Vec<Pair>, i64) {
    (d.pairs().len(), d.pairs().to_vec(), d.b())
}

/// Every normalized `c1 = 0` datum with `g = 0`, at most three pairs,
/// `α ≤ max_alpha`, `χ > 0` and `e > 0`, ordered by number of pairs, then
/// pairs, then `b`.
pub fn classify_positive_chi(max_alpha: i64) -> Result<Vec<ClassificationResult>> {
    if max_alpha < 2 {
        return Err(Error::Precondition(format!("max_alpha must be at least 2, got {max_alpha}")));
    }
    let mut out = Vec::new();
    for pairs in multisets(&normalized_pairs(max_alpha), 3) {
        let k = pairs.len() as i64;
        let raw: Vec<(i64, i64)> = pairs.iter().map(|p| (p.alpha, p.beta)).collect();
        for b in -k..=2 {
            let d = SeifertData::new(b, 0, raw.clone())?;
            if !d.orbifold_euler_char().is_positive() || !d.euler_number().is_positive() {
                continue;
            }
            let report = chern_report(&d)?;
            if report.trivial {
                out.push(ClassificationResult { family: positive_family(&d), data: d, certificate: report });
            }
        }
    }
    out.sort_by_key(|r| order_key(&r.data));
    Ok(out)
}

/// Zoll data with `χ = 0` and `1 ≤ b ≤ max_b`. Vanishing `χ` with no cone
/// points forces genus one.
pub fn classify_zero_chi(max_b: i64) -> Result<Vec<ClassificationResult>> {
    if max_b < 1 {
        return Err(Error::Precondition(format!("max_b must be at least 1, got {max_b}")));
    }
    (1..=max_b)
        .map(|b| {
            let d = SeifertData::pairless(b, 1);
            let certificate = chern_report(&d)?;
            Ok(ClassificationResult { family: Family::BoothbyWangTorus(b), data: d, certificate })
        })
        .collect()
}

/// `(2g - 2, g; (α_1, α_1 - 1), ..., (α_k, α_k - 1))`, which has `χ/e = -1`
/// and `c1 = 0` whenever `χ < 0`.
pub fn negative_chi_family(g: i64, alphas: &[i64]) -> Result<ClassificationResult> {
    if g < 0 {
        return Err(Error::NegativeGenus(g));
    }
    if let Some(a) = alphas.iter().find(|&&a| a < 2) {
        return Err(Error::Precondition(format!("multiplicities must be at least 2, got {a}")));
    }
    let d = SeifertData::new(2 * g - 2, g, alphas.iter().map(|&a| (a, a - 1)).collect())?;
    if !d.orbifold_euler_char().is_negative() {
        return Err(Error::Precondition(format!("{d} has χ = {} ≥ 0", d.orbifold_euler_char())));
    }
    let certificate = chern_report(&d)?;
    if !certificate.trivial || certificate.criterion.chi_over_e != Rational::from_integer(Int::from(-1)) {
        return Err(Error::Inconsistent(format!("{d} should have χ/e = -1 and c1 = 0")));
    }
    Ok(ClassificationResult { family: Family::NegativeChiExample, data: d.normalize(), certificate })
}

/// Whether the result's data has no exceptional fibers.
pub fn is_zoll(r: &ClassificationResult) -> bool {
    r.data.pairs().is_empty()
}

/// Whether every result in `rs` has trivial `c1` and matches its family's
/// defining condition.
pub fn certify(rs: &[ClassificationResult]) -> bool {
    rs.iter().all(|r| {
        r.certificate.trivial
            && match r.family {
                Family::LensSpace(p) => lens_condition(&r.data.zero_b_form()) == Some(p),
                Family::BoothbyWangTorus(b) => r.data.genus() == 1 && r.data.b() == b && is_zoll(r),
                Family::Ade(_) | Family::NegativeChiExample | Family::Sporadic => {
                    !r.certificate.criterion.chi_over_e.is_zero()
                }
            }
    })
}
