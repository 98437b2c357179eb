//! Robbin-Salamon indices of closed Reeb orbits.
//!
//! In the global trivialization of a `c1 = 0` Besse structure the
//! linearized flow along an orbit is a rotation path, and its index is
//!
//! ```text
//! μ(T) = 2T             T ∈ Z
//!        2⌊T⌋ + 1       otherwise
//! ```
//!
//! where `T` counts full turns. The `m`-fold cover of a principal orbit turns
//! `m χ/e` times; the `m`-fold cover of the exceptional orbit of a pair
//! `(α, β)` turns `(m/α) χ/e` times.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::chern::c1_trivial_criterion;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;
use crate::seifert::SeifertData;
use crate::{Int, Rational};

/// Index of the rotation path `t ↦ exp(2π i T t)`, `t ∈ [0, 1]`.
pub fn rs_index_rotation<T: ExactInt>(turns: &Ratio<T>) -> T {
    let two = T::one() + T::one();
    if turns.is_integer() {
        two * turns.to_integer()
    } else {
        two * turns.floor().to_integer() + T::one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitKind {
    Principal,
    /// Exceptional fiber of the `j`-th normalized pair, counted from 1.
    Exceptional(usize),
}

/// The `m`-fold cover of a principal or exceptional orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitId {
    pub kind: OrbitKind,
    pub multiplicity: u64,
}

impl OrbitId {
    pub fn principal(m: u64) -> Self {
        OrbitId { kind: OrbitKind::Principal, multiplicity: m }
    }

    pub fn exceptional(j: usize, m: u64) -> Self {
        OrbitId { kind: OrbitKind::Exceptional(j), multiplicity: m }
    }
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrbitKind::Principal => write!(f, "x_{}", self.multiplicity),
            OrbitKind::Exceptional(j) => write!(f, "x_{{{j},{}}}", self.multiplicity),
        }
    }
}

/// Data with `χ = 0`: every orbit has index 0 and no grading information is
/// carried by the orbits.
pub fn is_degenerate(d: &SeifertData) -> bool {
    d.orbifold_euler_char().is_zero()
}

/// Number of full turns made along `orbit`.
pub fn rotation_turns(d: &SeifertData, orbit: OrbitId) -> Result<Rational> {
    if orbit.multiplicity == 0 {
        return Err(Error::InvalidOrbit("multiplicity must be at least 1".into()));
    }
    let criterion = c1_trivial_criterion(d)?;
    if !criterion.trivial() {
        return Err(Error::NonTrivialChern);
    }
    let m = Rational::from_integer(Int::from(orbit.multiplicity));
    let c = criterion.chi_over_e;
    match orbit.kind {
        OrbitKind::Principal => Ok(m * c),
        OrbitKind::Exceptional(j) => {
            let n = d.normalize();
            let pair = j
                .checked_sub(1)
                .and_then(|i| n.pairs().get(i))
                .ok_or_else(|| Error::InvalidOrbit(format!("no exceptional fiber {j} in {n}")))?;
            Ok(m * c / Rational::from_integer(Int::from(pair.alpha)))
        }
    }
}

pub fn rs_index(d: &SeifertData, orbit: OrbitId) -> Result<Int> {
    Ok(rs_index_rotation(&rotation_turns(d, orbit)?))
}

/// `2 - μ` for principal orbits and `-μ` for exceptional ones.
pub fn grading(d: &SeifertData, orbit: OrbitId) -> Result<Int> {
    let mu = rs_index(d, orbit)?;
    Ok(match orbit.kind {
        OrbitKind::Principal => Int::from(2) - mu,
        OrbitKind::Exceptional(_) => -mu,
    })
}

/// One row of an index table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRow {
    pub orbit: OrbitId,
    /// Period in units of the principal period.
    pub period: Rational,
    pub index: Int,
    pub grading: Int,
}

/// All orbits of period at most `max_period` principal periods, ordered by
/// period and then by orbit.
pub fn index_table(d: &SeifertData, max_period: u64) -> Result<Vec<IndexRow>> {
    let n = d.normalize();
    let mut orbits: Vec<(Rational, OrbitId)> = Vec::new();
    for m in 1..=max_period {
        orbits.push((Rational::from_integer(Int::from(m)), OrbitId::principal(m)));
    }
    for (i, p) in n.pairs().iter().enumerate() {
        let alpha = p.alpha as u64;
        for m in 1..=max_period * alpha {
            if m % alpha != 0 {
                orbits.push((Rational::new(Int::from(m), Int::from(alpha)), OrbitId::exceptional(i + 1, m)));
            }
        }
    }
    orbits.sort();
    orbits
        .into_iter()
        .map(|(period, orbit)| {
            Ok(IndexRow { orbit, period, index: rs_index(&n, orbit)?, grading: grading(&n, orbit)? })
        })
        .collect()
}
