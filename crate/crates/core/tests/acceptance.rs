//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use besse::chern::{c1_trivial_criterion, c1_trivial_lattice, rotation_corrections, trivialization_data};
use besse::classify::{classify_positive_chi, Family};
use besse::homology::{a_m_matrix, chain_complex, homology_groups};
use besse::index::rs_index_rotation;
use besse::morse_bott::{e1_page, lacunarity_check, sh_ranks, Verdict};
use besse::seifert::ade_link;
use besse::{AdeType, Coefficients, Rational, SeifertData};
use common::*;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

fn corpus() -> Vec<SeifertData> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_e127);
    let mut out = Vec::new();
    while out.len() < 10_000 {
        let d = random_normalized(&mut rng, 12, 5, 3, 5);
        if !d.euler_number().is_zero() {
            out.push(d);
        }
    }
    out
}

fn table_rows() -> Outcome {
    let rows = [
        (AdeType::E6, q(1, 6), q(1, 6)),
        (AdeType::E7, q(1, 12), q(1, 12)),
        (AdeType::E8, q(1, 30), q(1, 30)),
        (AdeType::D(4), q(1, 2), q(1, 2)),
        (AdeType::D(5), q(1, 3), q(1, 3)),
        (AdeType::D(6), q(1, 4), q(1, 4)),
        (AdeType::D(7), q(1, 5), q(1, 5)),
        (AdeType::D(8), q(1, 6), q(1, 6)),
    ];
    for (t, chi, e) in rows {
        let d = ade_link(t).unwrap();
        if d.orbifold_euler_char() != chi || d.euler_number() != e {
            return fail(format!("{t}: chi={} e={}", d.orbifold_euler_char(), d.euler_number()));
        }
        if !c1_trivial_criterion(&d).unwrap().trivial() || !criterion_oracle(&d) {
            return fail(format!("{t}: c1 not trivial"));
        }
    }
    pass("E6, E7, E8, D4..D8: chi and e exact, c1 trivial")
}

fn criterion_vs_lattice(corpus: &[SeifertData]) -> Outcome {
    let start = Instant::now();
    let mut trivial = 0;
    for d in corpus {
        let criterion = c1_trivial_criterion(d).unwrap().trivial();
        let lattice = c1_trivial_lattice(d).unwrap().witness.is_some();
        if criterion != lattice || criterion != lattice_oracle(d) {
            return fail(format!("{d}: criterion {criterion}, lattice {lattice}"));
        }
        trivial += usize::from(criterion);
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        return fail(format!("took {secs:.1}s"));
    }
    pass(format!("{} data agree ({trivial} trivial) in {secs:.1}s", corpus.len()))
}

fn determinant_identity(corpus: &[SeifertData]) -> Outcome {
    for d in corpus {
        let f = d.zero_b_form();
        let det = Rational::from_integer(a_m_matrix(&f).determinant().unwrap().abs());
        let expected = Rational::from_integer(f.alpha_product()) * d.euler_number().abs();
        if det != expected {
            return fail(format!("{d}: |det A_M| = {det}, expected {expected}"));
        }
    }
    let e8 = ade_link(AdeType::E8).unwrap().zero_b_form();
    let det = a_m_matrix(&e8).determinant().unwrap().abs();
    let product_of_alphas = e8.alpha_product();
    if det == product_of_alphas {
        return fail("alpha product unexpectedly equals |det A_M| on E8");
    }
    pass(format!(
        "{} data satisfy |det A_M| = prod(alpha)|e|; E8: |det A_M| = {det}, alpha product = {product_of_alphas} (differs, as expected)",
        corpus.len()
    ))
}

fn classification() -> Outcome {
    let brute: BTreeSet<String> = all_genus_zero(8, 5)
        .into_iter()
        .filter(|d| d.orbifold_euler_char().is_positive() && d.euler_number().is_positive())
        .filter(lattice_oracle)
        .map(|d| d.normalize().to_string())
        .collect();
    let result = classify_positive_chi(8).unwrap();
    let found: BTreeSet<String> = result.iter().map(|r| r.data.to_string()).collect();
    if brute != found {
        let missing: Vec<_> = brute.difference(&found).collect();
        let extra: Vec<_> = found.difference(&brute).collect();
        return fail(format!("missing {missing:?}, extra {extra:?}"));
    }

    let three: BTreeSet<String> =
        result.iter().filter(|r| r.data.pairs().len() == 3).map(|r| r.data.to_string()).collect();
    let mut expected: BTreeSet<String> = (3..=8).map(|a| format!("(-1,0;(2,1),(2,1),({a},1))")).collect();
    expected
        .extend(["(-1,0;(2,1),(3,1),(3,1))", "(-1,0;(2,1),(3,1),(4,1))", "(-1,0;(2,1),(3,1),(5,1))"].map(String::from));
    // (2,2,2) satisfies chi = 1/2 > 0, e = 1/2, chi/e = 1 and 2 | (1 - 1) by hand
    let d4 = "(-1,0;(2,1),(2,1),(2,1))";
    let d4_data: SeifertData = d4.parse().unwrap();
    if chi(&d4_data) != q(1, 2) || euler(&d4_data) != q(1, 2) || !criterion_oracle(&d4_data) {
        return fail("D4 hand check failed");
    }
    let extra: Vec<&String> = three.difference(&expected).collect();
    let missing: Vec<&String> = expected.difference(&three).collect();
    if !missing.is_empty() || extra != [d4] {
        return fail(format!("three-fiber entries: missing {missing:?}, extra {extra:?}"));
    }
    let d4_tag = result.iter().find(|r| r.data.to_string() == d4).map(|r| r.family);
    if d4_tag != Some(Family::Ade(AdeType::D(4))) {
        return fail("D4 entry mistagged");
    }
    pass(format!(
        "{} entries match brute force; three-fiber entries are D5..D10, E6, E7, E8 plus {d4} (D4, alpha = 2)",
        found.len()
    ))
}

struct Golden {
    entries: Vec<(i64, i64, usize)>,
    ranks: Vec<(i64, usize)>,
    period: i64,
}

fn read_golden() -> Golden {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/e1_genus2.txt");
    let text = std::fs::read_to_string(path).unwrap();
    let mut section = "";
    let (mut entries, mut ranks, mut period) = (Vec::new(), Vec::new(), 0);
    for line in text.lines() {
        if let Some(h) = line.strip_prefix("# ") {
            section = h.split(':').next().unwrap();
            continue;
        }
        let f: Vec<i64> = line.split_whitespace().map(|x| x.parse().unwrap()).collect();
        match section {
            "entries" => entries.push((f[0], f[1], f[2] as usize)),
            "ranks" => ranks.push((f[0], f[1] as usize)),
            "period" => period = f[0],
            _ => {}
        }
    }
    Golden { entries, ranks, period }
}

fn chart() -> Outcome {
    let Golden { entries, ranks, period } = read_golden();
    let d: SeifertData = "(0,2;(2,1))".parse().unwrap();
    let page = e1_page(&d, 3).unwrap();
    let got: Vec<(i64, i64, usize)> = page.entries.iter().map(|(&(p, q), &r)| (p, q, r)).collect();
    if got != entries {
        return fail(format!("E1 entries {got:?}"));
    }
    if lacunarity_check(&page).verdict != Verdict::Lacunary {
        return fail("page not lacunary");
    }
    let sh = sh_ranks(&page).unwrap();
    let got: Vec<(i64, usize)> = sh.ranks.iter().rev().map(|(&n, &r)| (n, r)).collect();
    if got != ranks {
        return fail(format!("SH ranks {got:?}"));
    }
    if sh.detected_period != Some(period) {
        return fail(format!("period {:?}", sh.detected_period));
    }
    let total: usize = entries.iter().map(|e| e.2).sum();
    pass(format!(
        "{} positions (total rank {total}) match golden file; lacunary; 8 degree ranks; period {period}",
        entries.len()
    ))
}

fn index_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut samples = vec![(0, 1), (5, 2), (-5, 2), (10, 1), (-10, 1)];
    while samples.len() < 200 {
        let den = rng.gen_range(1..=24);
        samples.push((rng.gen_range(-10 * den..=10 * den), den));
    }
    for &(n, den) in &samples {
        let mu = rs_index_rotation(&Ratio::new(n, den));
        let oracle = crossing_index(n, den);
        if mu != oracle {
            return fail(format!("T = {n}/{den}: formula {mu}, crossings {oracle}"));
        }
    }
    pass(format!("{} rotations agree with crossing count", samples.len()))
}

fn homology_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    while n < 1000 {
        let d = random_raw(&mut rng, 12, 30, 5, 3, 5);
        if d.euler_number().is_zero() {
            continue;
        }
        n += 1;
        let c = chain_complex(&d.zero_b_form());
        if !(&c.boundary2 * &c.boundary3).is_zero() {
            return fail(format!("{d}: boundary of boundary nonzero"));
        }
        let m = homology_groups(&c, Coefficients::Mod2).ranks;
        if m[0] != 1 || m[3] != 1 || m[1] != m[2] {
            return fail(format!("{d}: mod 2 ranks {m:?}"));
        }
        let z = homology_groups(&c, Coefficients::Integers);
        if z.ranks[1] != 2 * d.genus() as usize {
            return fail(format!("{d}: free rank of H1 is {}", z.ranks[1]));
        }
    }
    pass(format!("{n} data: d2 d3 = 0, mod 2 duality, rank H1 = 2g"))
}

fn integrality(corpus: &[SeifertData]) -> Outcome {
    let mut all: Vec<SeifertData> = corpus.to_vec();
    all.extend(classify_positive_chi(8).unwrap().into_iter().map(|r| r.data));
    let (mut trivial, mut nontrivial) = (0, 0);
    for d in &all {
        let r = rotation_corrections(d).unwrap();
        let c = chi(d) / euler(d);
        // a_j = 1 - 1/α + (β/α) χ/e,  d_j = (p_j + χ/e)/α
        for (pair, a, p, _, rot) in &r.pairs {
            let alpha = qi(pair.alpha);
            let a_hand = qi(1) - q(1, pair.alpha) + q(pair.beta, pair.alpha) * &c;
            let rot_hand = (qi(*p) + &c) / &alpha;
            if *a != a_hand || *rot != rot_hand || (pair.beta * p + 1) % pair.alpha != 0 {
                return fail(format!("{d}: corrections disagree with hand formulas"));
            }
        }
        if r.b_corr != -c.clone() {
            return fail(format!("{d}: b_corr {}", r.b_corr));
        }
        if criterion_oracle(d) {
            trivial += 1;
            if !r.all_integral() || trivialization_data(d).is_err() {
                return fail(format!("{d}: trivial but not integral"));
            }
        } else {
            nontrivial += 1;
            if c.is_integer() && r.all_integral() {
                return fail(format!("{d}: nontrivial but integral"));
            }
        }
    }
    pass(format!("{trivial} trivial data integral; {nontrivial} nontrivial data fail integrality"))
}

fn main() {
    let corpus = corpus();
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: [(&str, Check); 8] = [
        ("table rows", Box::new(table_rows)),
        ("criterion vs lattice", Box::new(|| criterion_vs_lattice(&corpus))),
        ("determinant identity", Box::new(|| determinant_identity(&corpus))),
        ("classification exhaustiveness", Box::new(classification)),
        ("E1 chart", Box::new(chart)),
        ("index vs crossing oracle", Box::new(index_oracle)),
        ("homology properties", Box::new(homology_properties)),
        ("trivialization integrality", Box::new(|| integrality(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!("{} {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
