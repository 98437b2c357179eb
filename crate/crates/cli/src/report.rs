//! Serializable command outputs with their text renderings.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use besse::chern::{chern_report, trivialization_data};
use besse::classify::ClassificationResult;
use besse::homology::{chain_complex, h2_presentation, homology_groups};
use besse::index::{index_table, is_degenerate, OrbitKind};
use besse::morse_bott::{E1Page, MorseBottStratum, ShResult, StratumKind};
use besse::seifert::Ellipsoid;
use besse::{AdeType, Coefficients, Error, Int, IntMatrix, Rational, Result, SeifertData};

/// Integers are emitted as JSON numbers when they fit in 64 bits.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum Num {
    Small(i64),
    Big(String),
}

impl From<&Int> for Num {
    fn from(x: &Int) -> Self {
        x.to_i64().map(Num::Small).unwrap_or_else(|| Num::Big(x.to_string()))
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Num::Small(x) => f.pad(&x.to_string()),
            Num::Big(s) => f.pad(s),
        }
    }
}

fn nums(v: &[Int]) -> Vec<Num> {
    v.iter().map(Num::from).collect()
}

fn matrix(m: &IntMatrix) -> Vec<Vec<Num>> {
    m.to_rows().iter().map(|r| nums(r)).collect()
}

fn tuple<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn rat(r: &Rational) -> String {
    r.to_string()
}

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("serializable report");
            s.push('\n');
            s
        } else {
            self.text()
        }
    }
}

macro_rules! line {
    ($out:expr, $key:expr, $($arg:tt)*) => {
        let _ = writeln!($out, "{:<14}{}", $key, format_args!($($arg)*));
    };
}

#[derive(Serialize)]
pub struct Invariants {
    data: String,
    normalized: String,
    genus: u32,
    exceptional_fibers: usize,
    euler_number: String,
    orbifold_euler_char: String,
    chi_over_e: Option<String>,
    c1_trivial: Option<bool>,
    h1: String,
    lcm_alpha: i64,
}

pub fn invariants(d: &SeifertData) -> Result<Invariants> {
    let n = d.normalize();
    let (chi_over_e, c1_trivial) = match chern_report(d) {
        Ok(r) => (Some(rat(&r.criterion.chi_over_e)), Some(r.trivial)),
        Err(Error::ZeroEuler) => (None, None),
        Err(e) => return Err(e),
    };
    let h = homology_groups(&chain_complex(&d.zero_b_form()), Coefficients::Integers);
    Ok(Invariants {
        data: d.to_string(),
        normalized: n.to_string(),
        genus: n.genus(),
        exceptional_fibers: n.pairs().len(),
        euler_number: rat(&n.euler_number()),
        orbifold_euler_char: rat(&n.orbifold_euler_char()),
        chi_over_e,
        c1_trivial,
        h1: h.describe(1),
        lcm_alpha: n.lcm_alpha(),
    })
}

impl Render for Invariants {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "data", "{}", self.data);
        line!(s, "normalized", "{}", self.normalized);
        line!(s, "e", "{}", self.euler_number);
        line!(s, "chi", "{}", self.orbifold_euler_char);
        line!(s, "chi/e", "{}", self.chi_over_e.as_deref().unwrap_or("undefined (e = 0)"));
        line!(s, "c1 trivial", "{}", self.c1_trivial.map(yes).unwrap_or("n/a"));
        line!(s, "H1", "{}", self.h1);
        s
    }
}

#[derive(Serialize)]
pub struct HomologyReport {
    data: String,
    cells: [usize; 4],
    groups: Vec<String>,
    ranks: [usize; 4],
    torsion: Vec<Vec<Num>>,
    mod2_ranks: [usize; 4],
}

pub fn homology(d: &SeifertData) -> HomologyReport {
    let c = chain_complex(&d.zero_b_form());
    let z = homology_groups(&c, Coefficients::Integers);
    let m = homology_groups(&c, Coefficients::Mod2);
    HomologyReport {
        data: d.normalize().to_string(),
        cells: c.cell_counts(),
        groups: (0..4).map(|i| z.describe(i)).collect(),
        ranks: z.ranks,
        torsion: z.torsion.iter().map(|t| nums(t)).collect(),
        mod2_ranks: m.ranks,
    }
}

impl Render for HomologyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "data", "{}", self.data);
        line!(s, "cells", "{}", tuple(&self.cells));
        for (i, g) in self.groups.iter().enumerate() {
            line!(s, format!("H{i}"), "{g}");
        }
        line!(s, "H_*(Z/2)", "{}", tuple(&self.mod2_ranks));
        s
    }
}

#[derive(Serialize)]
pub struct PairLedger {
    alpha: i64,
    beta: i64,
    a: Num,
    p: i64,
    q: i64,
    d_rotation: Num,
}

#[derive(Serialize)]
pub struct Ledger {
    b_corr: Num,
    pairs: Vec<PairLedger>,
}

#[derive(Serialize)]
pub struct ChernOut {
    data: String,
    zero_b_form: String,
    a_m: Vec<Vec<Num>>,
    h2_torsion: Vec<Num>,
    c1_vector: Vec<Num>,
    chi_over_e: String,
    integer_flag: bool,
    divisibility_flags: Vec<bool>,
    lattice_witness: Option<Vec<Num>>,
    trivial: bool,
    trivialization: Option<Ledger>,
}

pub fn chern(d: &SeifertData) -> Result<ChernOut> {
    let r = chern_report(d)?;
    let trivialization = if r.trivial {
        let t = trivialization_data(d)?;
        Some(Ledger {
            b_corr: Num::from(&t.b_corr),
            pairs: t
                .pairs
                .iter()
                .map(|c| PairLedger {
                    alpha: c.pair.alpha,
                    beta: c.pair.beta,
                    a: Num::from(&c.a),
                    p: c.p,
                    q: c.q,
                    d_rotation: Num::from(&c.d_rotation),
                })
                .collect(),
        })
    } else {
        None
    };
    Ok(ChernOut {
        data: r.data.to_string(),
        zero_b_form: r.form.to_string(),
        a_m: matrix(&besse::homology::a_m_matrix(&r.form)),
        h2_torsion: nums(&h2_presentation(&r.form).torsion),
        c1_vector: nums(&r.c1_vector),
        chi_over_e: rat(&r.criterion.chi_over_e),
        integer_flag: r.criterion.integer_flag,
        divisibility_flags: r.criterion.divisibility_flags.clone(),
        lattice_witness: r.lattice_witness.as_deref().map(nums),
        trivial: r.trivial,
        trivialization,
    })
}

impl Render for ChernOut {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "data", "{}", self.data);
        line!(s, "b=0 form", "{}", self.zero_b_form);
        let rows: Vec<String> = self.a_m.iter().map(|r| tuple(r)).collect();
        line!(s, "A_M", "{}", rows.join(" "));
        line!(s, "c1", "{}", tuple(&self.c1_vector));
        line!(s, "chi/e", "{}", self.chi_over_e);
        line!(s, "chi/e in Z", "{}", yes(self.integer_flag));
        let flags: Vec<&str> = self.divisibility_flags.iter().map(|&f| yes(f)).collect();
        line!(s, "divisibility", "{}", if flags.is_empty() { "-".to_string() } else { flags.join(" ") });
        match &self.lattice_witness {
            Some(w) => {
                line!(s, "lattice", "witness {}", tuple(w));
            }
            None => {
                line!(s, "lattice", "no integer solution");
            }
        }
        line!(s, "c1 trivial", "{}", yes(self.trivial));
        if let Some(t) = &self.trivialization {
            line!(s, "b_corr", "{}", t.b_corr);
            for p in &t.pairs {
                line!(
                    s,
                    format!("pair ({},{})", p.alpha, p.beta),
                    "a={} p={} q={} d_rot={}",
                    p.a,
                    p.p,
                    p.q,
                    p.d_rotation
                );
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct ClassEntry {
    family: String,
    data: String,
    euler_number: String,
    orbifold_euler_char: String,
    chi_over_e: String,
    trivial: bool,
}

#[derive(Serialize)]
#[serde(transparent)]
pub struct Classification(Vec<ClassEntry>);

pub fn classification(rs: &[ClassificationResult]) -> Classification {
    Classification(
        rs.iter()
            .map(|r| ClassEntry {
                family: r.family.to_string(),
                data: r.data.to_string(),
                euler_number: rat(&r.data.euler_number()),
                orbifold_euler_char: rat(&r.data.orbifold_euler_char()),
                chi_over_e: rat(&r.certificate.criterion.chi_over_e),
                trivial: r.certificate.trivial,
            })
            .collect(),
    )
}

impl Render for Classification {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<10} {:<32} {:>8} {:>8} {:>6}", "family", "data", "e", "chi", "chi/e");
        for e in &self.0 {
            let _ = writeln!(
                s,
                "{:<10} {:<32} {:>8} {:>8} {:>6}",
                e.family, e.data, e.euler_number, e.orbifold_euler_char, e.chi_over_e
            );
        }
        s
    }
}

#[derive(Serialize)]
pub struct OrbitRow {
    orbit: String,
    kind: &'static str,
    j: Option<usize>,
    multiplicity: u64,
    period: String,
    index: Num,
    grading: Num,
}

#[derive(Serialize)]
pub struct Indices {
    data: String,
    chi_over_e: String,
    degenerate: bool,
    orbits: Vec<OrbitRow>,
}

pub fn indices(d: &SeifertData, max_period: u64) -> Result<Indices> {
    let n = d.normalize();
    let rows = index_table(&n, max_period)?;
    Ok(Indices {
        data: n.to_string(),
        chi_over_e: rat(&n.chi_over_e()?),
        degenerate: is_degenerate(&n),
        orbits: rows
            .iter()
            .map(|r| OrbitRow {
                orbit: r.orbit.to_string(),
                kind: match r.orbit.kind {
                    OrbitKind::Principal => "principal",
                    OrbitKind::Exceptional(_) => "exceptional",
                },
                j: match r.orbit.kind {
                    OrbitKind::Principal => None,
                    OrbitKind::Exceptional(j) => Some(j),
                },
                multiplicity: r.orbit.multiplicity,
                period: rat(&r.period),
                index: Num::from(&r.index),
                grading: Num::from(&r.grading),
            })
            .collect(),
    })
}

impl Render for Indices {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "data", "{}", self.data);
        line!(s, "chi/e", "{}{}", self.chi_over_e, if self.degenerate { " (degenerate)" } else { "" });
        let _ = writeln!(s, "{:<10} {:>4} {:>8} {:>7} {:>8}", "orbit", "m", "period", "index", "grading");
        for r in &self.orbits {
            let _ =
                writeln!(s, "{:<10} {:>4} {:>8} {:>7} {:>8}", r.orbit, r.multiplicity, r.period, r.index, r.grading);
        }
        s
    }
}

#[derive(Serialize)]
pub struct StratumOut {
    p: i64,
    kind: &'static str,
    j: Option<usize>,
    multiplicity: i64,
    mu: i64,
    s: i64,
    homology_ranks: Vec<usize>,
}

#[derive(Serialize)]
pub struct EntryOut {
    p: i64,
    q: i64,
    rank: usize,
}

#[derive(Serialize)]
pub struct E1Out {
    data: String,
    p_max: i64,
    lcm: i64,
    chi_over_e: i64,
    strata: Vec<StratumOut>,
    entries: Vec<EntryOut>,
}

pub fn e1(page: &E1Page, strata: &[MorseBottStratum]) -> E1Out {
    E1Out {
        data: page.data.to_string(),
        p_max: page.p_max,
        lcm: page.lcm,
        chi_over_e: page.chi_over_e,
        strata: strata
            .iter()
            .map(|b| StratumOut {
                p: b.p,
                kind: match b.kind {
                    StratumKind::FullManifold => "manifold",
                    StratumKind::ExceptionalCircle(_) => "circle",
                },
                j: match b.kind {
                    StratumKind::FullManifold => None,
                    StratumKind::ExceptionalCircle(j) => Some(j),
                },
                multiplicity: b.multiplicity,
                mu: b.mu,
                s: b.s,
                homology_ranks: b.homology_ranks.clone(),
            })
            .collect(),
        entries: page.entries.iter().map(|(&(p, q), &rank)| EntryOut { p, q, rank }).collect(),
    }
}

impl Render for E1Out {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "data", "{}", self.data);
        line!(s, "L", "{}", self.lcm);
        line!(s, "chi/e", "{}", self.chi_over_e);
        for b in &self.strata {
            let what = match b.j {
                Some(j) => format!("circle {j}"),
                None => "manifold".into(),
            };
            let _ = writeln!(
                s,
                "p={:<4} {:<10} m={:<4} s={:<6} H={}",
                b.p,
                what,
                b.multiplicity,
                b.s,
                tuple(&b.homology_ranks)
            );
        }
        for e in &self.entries {
            let _ = writeln!(s, "({},{}) {}", e.p, e.q, e.rank);
        }
        s
    }
}

#[derive(Serialize)]
pub struct DegreeRank {
    degree: i64,
    rank: usize,
}

#[derive(Serialize)]
pub struct ShOut {
    data: String,
    p_max: i64,
    verdict: String,
    stable_window: Option<[i64; 2]>,
    detected_period: Option<i64>,
    ranks: Vec<DegreeRank>,
}

pub fn sh(r: &ShResult, page: &E1Page) -> ShOut {
    ShOut {
        data: page.data.to_string(),
        p_max: r.p_max,
        verdict: r.verdict.to_string(),
        stable_window: r.stable_window.map(|(a, b)| [a, b]),
        detected_period: r.detected_period,
        ranks: r.ranks.iter().rev().map(|(&degree, &rank)| DegreeRank { degree, rank }).collect(),
    }
}

impl Render for ShOut {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.ranks {
            let _ = writeln!(s, "{}:{}", r.degree, r.rank);
        }
        let _ = writeln!(s, "verdict: {} (window p≤{})", self.verdict, self.p_max);
        if let Some([lo, hi]) = self.stable_window {
            let _ = writeln!(s, "stable degrees: {lo}..{hi}");
        }
        match self.detected_period {
            Some(p) => {
                let _ = writeln!(s, "period: {p}");
            }
            None => {
                let _ = writeln!(s, "period: none detected");
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct AdeOut {
    r#type: String,
    weights: [i64; 4],
    data: String,
    euler_number: String,
    orbifold_euler_char: String,
    chi_over_e: Option<String>,
    c1_trivial: Option<bool>,
}

pub fn ade(t: AdeType, d: &SeifertData) -> AdeOut {
    let (w0, w1, w2, n) = t.weights();
    let report = chern_report(d).ok();
    AdeOut {
        r#type: t.to_string(),
        weights: [w0, w1, w2, n],
        data: d.normalize().to_string(),
        euler_number: rat(&d.euler_number()),
        orbifold_euler_char: rat(&d.orbifold_euler_char()),
        chi_over_e: report.as_ref().map(|r| rat(&r.criterion.chi_over_e)),
        c1_trivial: report.as_ref().map(|r| r.trivial),
    }
}

impl Render for AdeOut {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "type", "{}", self.r#type);
        line!(s, "weights", "{} (degree {})", tuple(&self.weights[..3]), self.weights[3]);
        line!(s, "data", "{}", self.data);
        line!(s, "e", "{}", self.euler_number);
        line!(s, "chi", "{}", self.orbifold_euler_char);
        line!(s, "chi/e", "{}", self.chi_over_e.as_deref().unwrap_or("undefined"));
        line!(s, "c1 trivial", "{}", self.c1_trivial.map(yes).unwrap_or("n/a"));
        s
    }
}

#[derive(Serialize)]
pub struct EllipsoidOut {
    a: i64,
    b: i64,
    a_star: i64,
    b_star: i64,
    b_seifert: i64,
    data: String,
    euler_number: String,
    literal_pairs: [[i64; 2]; 2],
    literal_euler: String,
    literal_consistent: bool,
}

pub fn ellipsoid(e: &Ellipsoid) -> EllipsoidOut {
    EllipsoidOut {
        a: e.a,
        b: e.b,
        a_star: e.a_star,
        b_star: e.b_star,
        b_seifert: e.b_seifert,
        data: e.data.to_string(),
        euler_number: rat(&e.data.euler_number()),
        literal_pairs: e.literal_pairs.map(|(x, y)| [x, y]),
        literal_euler: rat(&e.literal_euler),
        literal_consistent: e.literal_is_consistent(),
    }
}

impl Render for EllipsoidOut {
    fn text(&self) -> String {
        let mut s = String::new();
        line!(s, "E(a,b)", "E({},{})", self.a, self.b);
        line!(s, "a*, b*", "{}, {}", self.a_star, self.b_star);
        line!(s, "data", "{}", self.data);
        line!(s, "e", "{}", self.euler_number);
        let [p1, p2] = self.literal_pairs;
        line!(
            s,
            "literal",
            "({},0;({},{}),({},{})) e={} {}",
            self.b_seifert,
            p1[0],
            p1[1],
            p2[0],
            p2[1],
            self.literal_euler,
            if self.literal_consistent { "consistent" } else { "inconsistent" }
        );
        s
    }
}
