//! Seifert invariants `(b, g; (α_1, β_1), ..., (α_k, β_k))` of a Besse
//! 3-manifold and their basic rational invariants.

mod links;
mod parse;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rational};

pub use links::{ade_link, ellipsoid, AdeType, Ellipsoid};
pub use parse::parse_seifert;

/// One exceptional-fiber pair `(α, β)` with `α ≥ 1` and `gcd(α, β) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub alpha: i64,
    pub beta: i64,
}

impl Pair {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha <= 0 {
            return Err(Error::NonPositiveAlpha(alpha));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::NonCoprime { alpha, beta });
        }
        Ok(Pair { alpha, beta })
    }

    /// `β / α` as an exact rational.
    pub fn slope(&self) -> Rational {
        Rational::new(Int::from(self.beta), Int::from(self.alpha))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// Seifert invariants of a closed Seifert fibration.
///
/// Construction validates coprimality, `α ≥ 1` and `g ≥ 0` but does not
/// normalize; see [`SeifertData::normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    b: i64,
    genus: u32,
    pairs: Vec<Pair>,
}

impl SeifertData {
    pub fn new(b: i64, genus: i64, pairs: Vec<(i64, i64)>) -> Result<Self> {
        if genus < 0 {
            return Err(Error::NegativeGenus(genus));
        }
        let genus = u32::try_from(genus).map_err(|_| Error::Precondition(format!("genus {genus} too large")))?;
        let pairs = pairs.into_iter().map(|(a, b)| Pair::new(a, b)).collect::<Result<Vec<_>>>()?;
        Ok(SeifertData { b, genus, pairs })
    }

    /// Zoll (Boothby-Wang) data without exceptional fibers.
    pub fn pairless(b: i64, genus: u32) -> Self {
        SeifertData { b, genus, pairs: Vec::new() }
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Canonical representative: every `(1, β)` pair is absorbed into `b`,
    /// every remaining `β` is shifted into `0 < β < α` (with the shift
    /// absorbed into `b`), and pairs are sorted lexicographically.
    pub fn normalize(&self) -> SeifertData {
        let mut b = self.b;
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for p in &self.pairs {
            if p.alpha == 1 {
                b += p.beta;
                continue;
            }
            let shift = Integer::div_floor(&(p.beta - 1), &p.alpha);
            b += shift;
            pairs.push(Pair { alpha: p.alpha, beta: p.beta - shift * p.alpha });
        }
        pairs.sort();
        SeifertData { b, genus: self.genus, pairs }
    }

    pub fn is_normalized(&self) -> bool {
        self.pairs.iter().all(|p| p.alpha >= 2 && 0 < p.beta && p.beta < p.alpha)
            && self.pairs.windows(2).all(|w| w[0] <= w[1])
    }

    /// True iff both data describe the same Besse manifold.
    pub fn equivalent(&self, other: &SeifertData) -> bool {
        self.normalize() == other.normalize()
    }

    /// `e = b + Σ β_j / α_j`
    pub fn euler_number(&self) -> Rational {
        self.pairs.iter().fold(Rational::from_integer(Int::from(self.b)), |acc, p| acc + p.slope())
    }

    /// `χ = 2 - 2g - Σ (1 - 1/α_j)`
    pub fn orbifold_euler_char(&self) -> Rational {
        let base = Rational::from_integer(Int::from(2 - 2 * i64::from(self.genus)));
        self.pairs.iter().fold(base, |acc, p| acc - Rational::one() + Rational::new(Int::one(), Int::from(p.alpha)))
    }

    /// `χ / e`; fails when `e = 0`.
    pub fn chi_over_e(&self) -> Result<Rational> {
        let e = self.euler_number();
        if e.is_zero() {
            return Err(Error::ZeroEuler);
        }
        Ok(self.orbifold_euler_char() / e)
    }

    /// True when the Euler number is negative, i.e. the data describes a
    /// Besse manifold only after reversing orientation.
    pub fn has_negative_euler(&self) -> bool {
        self.euler_number().is_negative()
    }

    /// The same Seifert fibration with the opposite orientation:
    /// `(-k - b, g; (α_j, α_j - β_j))` computed from the normal form.
    /// The Euler number changes sign.
    pub fn reverse_orientation(&self) -> SeifertData {
        let n = self.normalize();
        let k = n.pairs.len() as i64;
        let pairs = n.pairs.iter().map(|p| Pair { alpha: p.alpha, beta: p.alpha - p.beta }).collect();
        SeifertData { b: -k - n.b, genus: n.genus, pairs }.normalize()
    }

    /// Least common multiple of the multiplicities (1 when there are none).
    pub fn lcm_alpha(&self) -> i64 {
        self.pairs.iter().fold(1, |acc, p| acc.lcm(&p.alpha))
    }

    /// The `b = 0` presentation used by the cell structure. See [`ZeroBForm`].
    pub fn zero_b_form(&self) -> ZeroBForm {
        ZeroBForm::canonical(self)
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}", self.b, self.genus)?;
        if !self.pairs.is_empty() {
            write!(f, ";")?;
            for (i, p) in self.pairs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for SeifertData {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_seifert(s)
    }
}

/// Presentation `(0, g; (α_1, β_1), ..., (α_{k+1}, β_{k+1}))` with at least
/// one pair and `b` folded into the pairs.
///
/// [`ZeroBForm::canonical`] normalizes first and then absorbs `b` into the
/// final pair (`β_{k+1} += b α_{k+1}`); pairless data `(b, g)` becomes
/// `(0, g; (1, b))`. The `(k+1)`-th pair plays a distinguished role in the
/// first Chern class representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroBForm {
    genus: u32,
    pairs: Vec<Pair>,
}

impl ZeroBForm {
    pub fn canonical(d: &SeifertData) -> Self {
        let n = d.normalize();
        let mut pairs = n.pairs;
        match pairs.last_mut() {
            Some(last) => last.beta += n.b * last.alpha,
            None => pairs.push(Pair { alpha: 1, beta: n.b }),
        }
        ZeroBForm { genus: n.genus, pairs }
    }

    /// Uses the given pairs verbatim, in order. At least one pair is required.
    pub fn from_raw(genus: u32, pairs: Vec<(i64, i64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Precondition("b = 0 form needs at least one pair".into()));
        }
        let pairs = pairs.into_iter().map(|(a, b)| Pair::new(a, b)).collect::<Result<Vec<_>>>()?;
        Ok(ZeroBForm { genus, pairs })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The `k + 1` pairs.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn to_seifert(&self) -> SeifertData {
        SeifertData { b: 0, genus: self.genus, pairs: self.pairs.clone() }
    }

    pub fn euler_number(&self) -> Rational {
        self.to_seifert().euler_number()
    }

    pub fn orbifold_euler_char(&self) -> Rational {
        self.to_seifert().orbifold_euler_char()
    }

    pub fn alpha_product(&self) -> Int {
        self.pairs.iter().map(|p| Int::from(p.alpha)).product()
    }
}

impl fmt::Display for ZeroBForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_seifert().fmt(f)
    }
}

/// `(α, p; β, q)` with `αq - βp = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluingMatrix {
    pub alpha: i64,
    pub p: i64,
    pub beta: i64,
    pub q: i64,
}

impl GluingMatrix {
    pub fn determinant(&self) -> i64 {
        self.alpha * self.q - self.beta * self.p
    }

    pub fn to_rows(&self) -> [[i64; 2]; 2] {
        [[self.alpha, self.p], [self.beta, self.q]]
    }
}

/// Solid-torus gluing matrix in `SL(2, Z)`, with `p` the least residue in
/// `[0, α)` satisfying `β p ≡ -1 (mod α)`.
pub fn gluing_matrix(alpha: i64, beta: i64) -> Result<GluingMatrix> {
    let pair = Pair::new(alpha, beta)?;
    let p = if pair.alpha == 1 {
        0
    } else {
        // β p ≡ -1 (mod α)
        let inv = mod_inverse(pair.beta, pair.alpha).expect("coprime");
        (-inv).rem_euclid(pair.alpha)
    };
    let q = (1 + beta * p) / alpha;
    debug_assert_eq!(alpha * q - beta * p, 1);
    Ok(GluingMatrix { alpha, p, beta, q })
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`.
pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let ext = a.rem_euclid(m).extended_gcd(&m);
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m))
}
