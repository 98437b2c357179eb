//! Seifert data of standard examples: links of simple singularities and
//! ellipsoids in `C^2`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

use super::{mod_inverse, SeifertData};
use crate::error::{Error, Result};
use crate::{Int, Rational};

/// Simple (ADE) singularity type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeType {
    pub fn validate(self) -> Result<Self> {
        match self {
            AdeType::A(l) if l < 1 => Err(Error::InvalidAde(format!("A_{l} needs l >= 1"))),
            AdeType::D(l) if l < 4 => Err(Error::InvalidAde(format!("D_{l} needs l >= 4"))),
            t => Ok(t),
        }
    }

    /// Weights `(w0, w1, w2)` and degree `N` of the defining polynomial.
    pub fn weights(self) -> (i64, i64, i64, i64) {
        match self {
            AdeType::A(l) if l % 2 == 1 => {
                let h = (i64::from(l) + 1) / 2;
                (h, h, 1, i64::from(l) + 1)
            }
            AdeType::A(l) => {
                let l = i64::from(l);
                (l + 1, l + 1, 2, 2 * (l + 1))
            }
            AdeType::D(l) => {
                let l = i64::from(l);
                (l - 1, l - 2, 2, 2 * (l - 1))
            }
            AdeType::E6 => (6, 4, 3, 12),
            AdeType::E7 => (9, 6, 4, 18),
            AdeType::E8 => (15, 10, 6, 30),
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(l) => write!(f, "A{l}"),
            AdeType::D(l) => write!(f, "D{l}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::E7 => write!(f, "E7"),
            AdeType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        let (head, tail) = upper.split_at(upper.len().min(1));
        let tail = tail.trim_start_matches('_');
        let index: u32 = tail.parse().map_err(|_| Error::InvalidAde(format!("cannot parse '{t}'")))?;
        let ty = match (head, index) {
            ("A", l) => AdeType::A(l),
            ("D", l) => AdeType::D(l),
            ("E", 6) => AdeType::E6,
            ("E", 7) => AdeType::E7,
            ("E", 8) => AdeType::E8,
            _ => return Err(Error::InvalidAde(format!("unknown type '{t}'"))),
        };
        ty.validate()
    }
}

/// Seifert invariants of the link of a simple singularity, as tabulated.
/// The `A_l` rows have negative Euler number.
pub fn ade_link(ty: AdeType) -> Result<SeifertData> {
    let ty = ty.validate()?;
    let (b, pairs) = match ty {
        AdeType::A(l) if l % 2 == 1 => {
            let l = i64::from(l);
            let pair = ((l + 1) / 2, (l - 1) / 2);
            (-2, vec![pair, pair])
        }
        AdeType::A(l) => {
            let l = i64::from(l);
            let pair = (l + 1, l / 2);
            (-1, vec![pair, pair])
        }
        AdeType::D(l) => (-1, vec![(2, 1), (2, 1), (i64::from(l) - 2, 1)]),
        AdeType::E6 => (-1, vec![(2, 1), (3, 1), (3, 1)]),
        AdeType::E7 => (-1, vec![(2, 1), (3, 1), (4, 1)]),
        AdeType::E8 => (-1, vec![(2, 1), (3, 1), (5, 1)]),
    };
    SeifertData::new(b, 0, pairs)
}

/// An ellipsoid `E(a, b)` with its Besse form.
///
/// The tabulated invariants are `((1 - a*a - b*b)/(ab), 0; (a, a*), (b, b*))`
/// with `a* a ≡ 1 (mod b)` and `b* b ≡ 1 (mod a)`. Taken literally with least
/// positive residues this pairing is not always coprime and its Euler number
/// differs from `1/(ab)` (e.g. `(2, 3)` yields the pair `(2, 2)` and `e = 1/3`).
/// `data` uses the pairing `(a, b*), (b, a*)`, which is always valid and has
/// `e = 1/(ab)`; the literal reading is kept alongside for comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ellipsoid {
    pub a: i64,
    pub b: i64,
    pub a_star: i64,
    pub b_star: i64,
    /// `(1 - a* a - b* b) / (ab)`
    pub b_seifert: i64,
    /// Valid Seifert data, normalized.
    pub data: SeifertData,
    /// Pairs exactly as `(a, a*), (b, b*)`.
    pub literal_pairs: [(i64, i64); 2],
    /// Euler number of the literal pairing.
    pub literal_euler: Rational,
    /// Whether both literal pairs are coprime.
    pub literal_coprime: bool,
}

impl Ellipsoid {
    /// True when the literal pairing gives valid data with `|e| = 1/(ab)`.
    pub fn literal_is_consistent(&self) -> bool {
        self.literal_coprime && self.literal_euler.abs() == Rational::new(Int::from(1), Int::from(self.a * self.b))
    }
}

pub fn ellipsoid(a: i64, b: i64) -> Result<Ellipsoid> {
    if a < 1 || b < 1 || a.gcd(&b) != 1 {
        return Err(Error::EllipsoidWeights(a, b));
    }
    let least_positive = |x: i64, m: i64| -> i64 {
        if m == 1 {
            1
        } else {
            mod_inverse(x, m).expect("coprime weights")
        }
    };
    let a_star = least_positive(a, b);
    let b_star = least_positive(b, a);
    let numerator = 1 - a_star * a - b_star * b;
    if numerator % (a * b) != 0 {
        return Err(Error::Inconsistent(format!("ellipsoid ({a},{b}): {numerator} not divisible by {}", a * b)));
    }
    let b_seifert = numerator / (a * b);
    let data = SeifertData::new(b_seifert, 0, vec![(a, b_star), (b, a_star)])?.normalize();

    let literal_pairs = [(a, a_star), (b, b_star)];
    let literal_coprime = literal_pairs.iter().all(|(x, y)| x.gcd(y) == 1);
    let literal_euler = literal_pairs.iter().fold(Rational::from_integer(Int::from(b_seifert)), |acc, &(x, y)| {
        acc + Rational::new(Int::from(y), Int::from(x))
    });
    Ok(Ellipsoid { a, b, a_star, b_star, b_seifert, data, literal_pairs, literal_euler, literal_coprime })
}
