//! Morse-Bott spectral sequence for positive symplectic homology of a
//! `c1 = 0` Besse manifold, with `Z/2` coefficients.
//!
//! Let `L = lcm(α_j)`. Orbits of period `p T/L` form the whole manifold when
//! `L | p` and one circle per exceptional fiber with `(L/α_j) | p` otherwise.
//! Each stratum `B` at level `p` contributes `H_i(B; Z/2)` at
//! `(p, s(B) - p + i)` where `s(B) = μ(B) - dim(B/S^1)/2`. Differentials
//! `d^r` go from `(p, q)` to `(p - r, q + r - 1)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::homology::mod2_betti;
use crate::index::{rs_index, OrbitId};
use crate::seifert::SeifertData;
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StratumKind {
    FullManifold,
    /// Exceptional fiber of the `j`-th normalized pair, counted from 1.
    ExceptionalCircle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseBottStratum {
    /// Filtration level.
    pub p: i64,
    pub kind: StratumKind,
    /// Covering multiplicity of the underlying simple orbit.
    pub multiplicity: i64,
    pub mu: i64,
    pub s: i64,
    /// Ranks of `H_i(B; Z/2)`.
    pub homology_ranks: Vec<usize>,
}

/// Checked data and the quantities shared by all columns.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Setup {
    data: SeifertData,
    chi_over_e: i64,
    lcm: i64,
}

fn setup(d: &SeifertData) -> Result<Setup> {
    let n = d.normalize();
    let e = n.euler_number();
    if e.is_zero() {
        return Err(Error::ZeroEuler);
    }
    if e.is_negative() {
        return Err(Error::NonPositiveEuler(e.to_string()));
    }
    if n.orbifold_euler_char().is_zero() {
        return Err(Error::DegenerateChi);
    }
    let c = n.chi_over_e()?;
    if !c.is_integer() {
        return Err(Error::NonTrivialChern);
    }
    let chi_over_e = small(&c.to_integer())?;
    Ok(Setup { lcm: n.lcm_alpha(), data: n, chi_over_e })
}

fn small(x: &Int) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Precondition(format!("{x} does not fit in 64 bits")))
}

/// Strata at every level `1 ≤ p ≤ p_max`.
pub fn orbit_spectrum(d: &SeifertData, p_max: i64) -> Result<Vec<MorseBottStratum>> {
    let st = setup(d)?;
    strata(&st, p_max)
}

fn strata(st: &Setup, p_max: i64) -> Result<Vec<MorseBottStratum>> {
    let betti = mod2_betti(&st.data).to_vec();
    let l = st.lcm;
    let mut out = Vec::new();
    for p in 1..=p_max {
        if p % l == 0 {
            let m = p / l;
            let mu = small(&rs_index(&st.data, OrbitId::principal(m as u64))?)?;
            out.push(MorseBottStratum {
                p,
                kind: StratumKind::FullManifold,
                multiplicity: m,
                mu,
                s: mu - 1,
                homology_ranks: betti.clone(),
            });
            continue;
        }
        for (i, pair) in st.data.pairs().iter().enumerate() {
            if p % (l / pair.alpha) != 0 {
                continue;
            }
            let m = p * pair.alpha / l;
            let mu = small(&rs_index(&st.data, OrbitId::exceptional(i + 1, m as u64))?)?;
            out.push(MorseBottStratum {
                p,
                kind: StratumKind::ExceptionalCircle(i + 1),
                multiplicity: m,
                mu,
                s: mu,
                homology_ranks: vec![1, 1],
            });
        }
    }
    Ok(out)
}

/// Sparse `E^1` page over `Z/2`; only nonzero ranks are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E1Page {
    pub entries: BTreeMap<(i64, i64), usize>,
    pub p_max: i64,
    /// Normalized data.
    pub data: SeifertData,
    pub chi_over_e: i64,
    pub lcm: i64,
}

pub fn e1_page(d: &SeifertData, p_max: i64) -> Result<E1Page> {
    let st = setup(d)?;
    let mut entries = BTreeMap::new();
    for b in strata(&st, p_max)? {
        for (i, &r) in b.homology_ranks.iter().enumerate() {
            if r > 0 {
                *entries.entry((b.p, b.s - b.p + i as i64)).or_insert(0) += r;
            }
        }
    }
    Ok(E1Page { entries, p_max, data: st.data, chi_over_e: st.chi_over_e, lcm: st.lcm })
}

impl E1Page {
    pub fn rank(&self, p: i64, q: i64) -> usize {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn column_total(&self, p: i64) -> usize {
        self.entries.range((p, i64::MIN)..=(p, i64::MAX)).map(|(_, r)| r).sum()
    }

    /// Total degrees `p + q` with their summed ranks.
    pub fn total_degrees(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(p, q), &r) in &self.entries {
            *out.entry(p + q).or_insert(0) += r;
        }
        out
    }

    /// Bound on the total degrees of all columns beyond `p_max`: an upper
    /// bound when `χ/e < 0`, a lower bound when `χ/e > 0`.
    pub fn outside_bound(&self) -> i64 {
        // every stratum at level p sits in total degrees [2pc/L - 1, 2pc/L + 2]
        let num = 2 * (self.p_max + 1) * self.chi_over_e;
        if self.chi_over_e < 0 {
            Integer::div_floor(&num, &self.lcm) + 2
        } else {
            Integer::div_ceil(&num, &self.lcm) - 1
        }
    }

    /// Text chart with `p` to the right and `q` upward.
    pub fn render_grid(&self) -> String {
        let mut s = String::new();
        let Some(q_min) = self.entries.keys().map(|k| k.1).min() else {
            return "(empty)\n".into();
        };
        let q_max = self.entries.keys().map(|k| k.1).max().unwrap_or(q_min);
        let width = 5;
        for q in (q_min..=q_max).rev() {
            let _ = write!(s, "{q:>width$} |");
            for p in 1..=self.p_max {
                match self.rank(p, q) {
                    0 => {
                        let _ = write!(s, "{:>width$}", ".");
                    }
                    r => {
                        let _ = write!(s, "{r:>width$}");
                    }
                }
            }
            s.push('\n');
        }
        let _ = write!(s, "{:>width$} +", "");
        s.push_str(&"-".repeat(width * self.p_max.max(0) as usize));
        s.push('\n');
        let _ = write!(s, "{:>width$}  ", "q/p");
        for p in 1..=self.p_max {
            let _ = write!(s, "{p:>width$}");
        }
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Lacunary,
    /// No differential is possible inside the window, but a column beyond
    /// `p_max` could hit an entry.
    WindowIncomplete,
    NonLacunary,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Lacunary => "lacunary",
            Verdict::WindowIncomplete => "window-incomplete",
            Verdict::NonLacunary => "non-lacunary",
        })
    }
}

pub type Position = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShResult {
    /// Nonzero ranks by degree; degrees outside `stable_window` may still
    /// receive classes from columns beyond `p_max`.
    pub ranks: BTreeMap<i64, usize>,
    pub lacunary: bool,
    pub verdict: Verdict,
    /// `(source, target)` pairs of nonzero entries joined by some `d^r`.
    pub potential_differentials: Vec<(Position, Position)>,
    /// Degrees whose rank no column beyond `p_max` can change.
    pub stable_window: Option<(i64, i64)>,
    pub detected_period: Option<i64>,
    pub p_max: i64,
}

fn potential_differentials(page: &E1Page) -> Vec<(Position, Position)> {
    let mut out = Vec::new();
    for &(p, q) in page.entries.keys() {
        for r in 1..p {
            let target = (p - r, q + r - 1);
            if page.entries.contains_key(&target) {
                out.push(((p, q), target));
            }
        }
    }
    out
}

fn window_complete(page: &E1Page) -> bool {
    let bound = page.outside_bound();
    page.total_degrees().keys().all(|&n| if page.chi_over_e < 0 { n + 1 > bound } else { n + 1 < bound })
}

fn stable_window(page: &E1Page) -> Option<(i64, i64)> {
    let degrees = page.total_degrees();
    let (&lo, _) = degrees.first_key_value()?;
    let (&hi, _) = degrees.last_key_value()?;
    let bound = page.outside_bound();
    let (lo, hi) = if page.chi_over_e < 0 { (bound + 1, hi) } else { (lo, bound - 1) };
    (lo <= hi).then_some((lo, hi))
}

/// Flags only: `ranks`, `stable_window` and `detected_period` are left empty.
pub fn lacunarity_check(page: &E1Page) -> ShResult {
    let potential = potential_differentials(page);
    let lacunary = potential.is_empty();
    let verdict = if !lacunary {
        Verdict::NonLacunary
    } else if window_complete(page) {
        Verdict::Lacunary
    } else {
        Verdict::WindowIncomplete
    };
    ShResult {
        ranks: BTreeMap::new(),
        lacunary,
        verdict,
        potential_differentials: potential,
        stable_window: None,
        detected_period: None,
        p_max: page.p_max,
    }
}

/// Smallest `Δ ≤ max_shift` with `rank(n) = rank(n - Δ)` for every pair of
/// degrees in `[lo, hi]`.
pub fn detect_period(ranks: &BTreeMap<i64, usize>, (lo, hi): (i64, i64), max_shift: i64) -> Option<i64> {
    let rank = |n: i64| ranks.get(&n).copied().unwrap_or(0);
    (1..=max_shift).find(|&delta| hi - lo >= delta && (lo + delta..=hi).all(|n| rank(n) == rank(n - delta)))
}

/// Anti-diagonal sums of a lacunary page.
pub fn sh_ranks(page: &E1Page) -> Result<ShResult> {
    let mut result = lacunarity_check(page);
    if !result.lacunary {
        return Err(Error::NonLacunary);
    }
    result.ranks = page.total_degrees();
    result.stable_window = stable_window(page);
    result.detected_period =
        result.stable_window.and_then(|w| detect_period(&result.ranks, w, 2 * page.chi_over_e.abs()));
    Ok(result)
}
