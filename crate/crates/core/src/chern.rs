//! First Chern class of the Besse contact structure.
//!
//! On a `b = 0` presentation `(0, g; (α_1, β_1), ..., (α_{k+1}, β_{k+1}))`
//! the class is represented by
//!
//! ```text
//! (α_1 - 1, ..., α_k - 1, (2g - 1) α_{k+1} - 1, 0)  in  Z^{k+2} / im A_M
//! ```
//!
//! Triviality is decided twice: by integer lattice membership of that
//! vector, and by the closed-form test `χ/e ∈ Z` and `α_j | (β_j χ/e - 1)`.
//! The two must agree.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::solve_integer;
use crate::homology::a_m_matrix;
use crate::seifert::{gluing_matrix, Pair, SeifertData, ZeroBForm};
use crate::{Int, IntMatrix, Rational};

/// The representative vector of length `k + 2`.
pub fn c1_vector(form: &ZeroBForm) -> Vec<Int> {
    let pairs = form.pairs();
    let (last, rest) = pairs.split_last().expect("b = 0 form has at least one pair");
    let g = i64::from(form.genus());
    let mut v: Vec<Int> = rest.iter().map(|p| Int::from(p.alpha - 1)).collect();
    v.push(Int::from((2 * g - 1) * last.alpha - 1));
    v.push(Int::zero());
    v
}

/// Closed-form part of the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionDetail {
    pub chi_over_e: Rational,
    /// `χ/e ∈ Z`
    pub integer_flag: bool,
    /// `α_j | (β_j χ/e - 1)` per normalized pair; all false when `χ/e ∉ Z`.
    pub divisibility_flags: Vec<bool>,
}

impl CriterionDetail {
    pub fn trivial(&self) -> bool {
        self.integer_flag && self.divisibility_flags.iter().all(|&f| f)
    }
}

pub fn c1_trivial_criterion(d: &SeifertData) -> Result<CriterionDetail> {
    let chi_over_e = d.chi_over_e()?;
    let n = d.normalize();
    let integer_flag = chi_over_e.is_integer();
    let c: Int = chi_over_e.to_integer();
    let divisibility_flags = n
        .pairs()
        .iter()
        .map(|p| {
            let r: Int = Int::from(p.beta) * &c - 1;
            integer_flag && r.is_multiple_of(&Int::from(p.alpha))
        })
        .collect();
    Ok(CriterionDetail { chi_over_e, integer_flag, divisibility_flags })
}

/// Lattice part of the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDetail {
    pub form: ZeroBForm,
    pub c1_vector: Vec<Int>,
    pub a_m: IntMatrix,
    /// `x` with `A_M x = c1_vector`, when one exists over the integers.
    pub witness: Option<Vec<Int>>,
}

pub fn c1_trivial_lattice(d: &SeifertData) -> Result<LatticeDetail> {
    if d.euler_number().is_zero() {
        return Err(Error::ZeroEuler);
    }
    let form = d.zero_b_form();
    lattice_on_form(&form)
}

/// Lattice test on a given `b = 0` presentation.
pub fn lattice_on_form(form: &ZeroBForm) -> Result<LatticeDetail> {
    let a_m = a_m_matrix(form);
    let c1 = c1_vector(form);
    let witness = solve_integer(&a_m, &c1)?;
    Ok(LatticeDetail { form: form.clone(), c1_vector: c1, a_m, witness })
}

/// The unique rational solution of `A_M x = c1_vector`:
/// `t_j = (1 - 1/α_j) + (β_j/α_j)(χ/e)` for `j ≤ k`, the same expression
/// plus `2g - 2` for `j = k + 1`, and `s = -χ/e` last.
pub fn rational_solution(form: &ZeroBForm) -> Result<Vec<Rational>> {
    let e = form.euler_number();
    if e.is_zero() {
        return Err(Error::ZeroEuler);
    }
    let c = form.orbifold_euler_char() / e;
    let n = form.pairs().len();
    let mut x: Vec<Rational> = form.pairs().iter().map(|p| meridian_correction(p, &c)).collect();
    x[n - 1] += Rational::from_integer(Int::from(2 * i64::from(form.genus()) - 2));
    x.push(-c);
    Ok(x)
}

/// `(1 - 1/α) + (β/α)(χ/e)`
fn meridian_correction(p: &Pair, chi_over_e: &Rational) -> Rational {
    let alpha = Int::from(p.alpha);
    Rational::one() - Rational::new(Int::one(), alpha) + p.slope() * chi_over_e
}

/// Both triviality tests with their certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernReport {
    /// Normalized data.
    pub data: SeifertData,
    pub form: ZeroBForm,
    pub c1_vector: Vec<Int>,
    pub trivial: bool,
    pub criterion: CriterionDetail,
    pub lattice_witness: Option<Vec<Int>>,
}

/// Runs both tests; a disagreement is reported as [`Error::Inconsistent`].
pub fn chern_report(d: &SeifertData) -> Result<ChernReport> {
    let criterion = c1_trivial_criterion(d)?;
    let lattice = c1_trivial_lattice(d)?;
    if criterion.trivial() != lattice.witness.is_some() {
        return Err(Error::Inconsistent(format!(
            "criterion says {} but lattice test says {} for {d}",
            criterion.trivial(),
            lattice.witness.is_some()
        )));
    }
    Ok(ChernReport {
        data: d.normalize(),
        form: lattice.form,
        c1_vector: lattice.c1_vector,
        trivial: criterion.trivial(),
        criterion,
        lattice_witness: lattice.witness,
    })
}

/// Rotation corrections for one normalized pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCorrection {
    pub pair: Pair,
    /// Meridian rotation correction `a_j`.
    pub a: Int,
    pub p: i64,
    pub q: i64,
    /// Rotation number `(p_j + χ/e) / α_j` of the change of trivialization
    /// over `D_j`.
    pub d_rotation: Int,
}

/// Integer rotation corrections fixing the global trivialization of a
/// `c1 = 0` Besse structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivializationLedger {
    pub chi_over_e: Int,
    /// Fiberwise correction `-χ/e`.
    pub b_corr: Int,
    pub pairs: Vec<PairCorrection>,
}

/// The same quantities before any integrality is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCorrections {
    pub chi_over_e: Rational,
    pub b_corr: Rational,
    /// `(pair, a_j, p_j, q_j, d_rotation_j)`
    pub pairs: Vec<(Pair, Rational, i64, i64, Rational)>,
}

impl RationalCorrections {
    pub fn all_integral(&self) -> bool {
        self.b_corr.is_integer() && self.pairs.iter().all(|(_, a, _, _, r)| a.is_integer() && r.is_integer())
    }
}

pub fn rotation_corrections(d: &SeifertData) -> Result<RationalCorrections> {
    let c = d.chi_over_e()?;
    let n = d.normalize();
    let pairs = n
        .pairs()
        .iter()
        .map(|pair| {
            let gm = gluing_matrix(pair.alpha, pair.beta).expect("validated pair");
            let a = meridian_correction(pair, &c);
            let alpha = Rational::from_integer(Int::from(pair.alpha));
            let rot = (Rational::from_integer(Int::from(gm.p)) + &c) / alpha;
            (*pair, a, gm.p, gm.q, rot)
        })
        .collect();
    Ok(RationalCorrections { b_corr: -c.clone(), chi_over_e: c, pairs })
}

pub fn trivialization_data(d: &SeifertData) -> Result<TrivializationLedger> {
    if !chern_report(d)?.trivial {
        return Err(Error::NonTrivialChern);
    }
    let r = rotation_corrections(d)?;
    if !r.all_integral() {
        return Err(Error::Inconsistent(format!("non-integral rotation corrections for {d}")));
    }
    Ok(TrivializationLedger {
        chi_over_e: r.chi_over_e.to_integer(),
        b_corr: r.b_corr.to_integer(),
        pairs: r
            .pairs
            .into_iter()
            .map(|(pair, a, p, q, rot)| PairCorrection { pair, a: a.to_integer(), p, q, d_rotation: rot.to_integer() })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(s: &str) -> SeifertData {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn c1_vectors() {
        let e8 = ZeroBForm::from_raw(0, vec![(2, 1), (3, 1), (5, -4)]).unwrap();
        assert_eq!(c1_vector(&e8), ints(&[1, 2, -6, 0]));
        let hopf = ZeroBForm::from_raw(0, vec![(1, 1)]).unwrap();
        assert_eq!(c1_vector(&hopf), ints(&[-2, 0]));
        assert_eq!(c1_vector(&sd("(0,2;(2,1))").zero_b_form()), ints(&[5, 0]));
    }

    #[test]
    fn criterion_examples() {
        let e8 = c1_trivial_criterion(&sd("(-1,0;(2,1),(3,1),(5,1))")).unwrap();
        assert_eq!(e8.chi_over_e, q(1, 1));
        assert!(e8.trivial());

        let g2 = c1_trivial_criterion(&sd("(0,2;(2,1))")).unwrap();
        assert_eq!(g2.chi_over_e, q(-5, 1));
        assert!(g2.trivial());

        let lens = c1_trivial_criterion(&sd("(1,0;(3,2))")).unwrap();
        assert_eq!(lens.chi_over_e, q(4, 5));
        assert!(!lens.integer_flag);
        assert!(!lens.trivial());

        assert_eq!(c1_trivial_criterion(&sd("(-1,0;(2,1),(2,1))")), Err(Error::ZeroEuler));
    }

    #[test]
    fn lattice_examples() {
        let e8 = c1_trivial_lattice(&sd("(-1,0;(2,1),(3,1),(5,1))")).unwrap();
        let w = e8.witness.unwrap();
        // t = (1, 1, 0 + (2g - 2)), s = -1
        assert_eq!(w, ints(&[1, 1, -2, -1]));

        let g2 = c1_trivial_lattice(&sd("(0,2;(2,1))")).unwrap();
        assert_eq!(g2.witness.unwrap(), ints(&[0, 5]));

        assert_eq!(c1_trivial_lattice(&sd("(1,0;(3,2))")).unwrap().witness, None);
        assert_eq!(c1_trivial_lattice(&sd("(0,1)")), Err(Error::ZeroEuler));
    }

    #[test]
    fn rational_solution_solves_system() {
        for s in ["(0,2;(2,1))", "(1,0;(3,2))", "(-1,0;(2,1),(3,1),(5,1))", "(3,3;(4,3),(7,2))", "(1,0)"] {
            let form = sd(s).zero_b_form();
            let x = rational_solution(&form).unwrap();
            let a = a_m_matrix(&form);
            let c1 = c1_vector(&form);
            for i in 0..a.rows() {
                let lhs = (0..a.cols())
                    .fold(Rational::zero(), |acc, j| acc + Rational::from_integer(a[(i, j)].clone()) * &x[j]);
                assert_eq!(lhs, Rational::from_integer(c1[i].clone()), "{s} row {i}");
            }
        }
    }

    #[test]
    fn report_agrees() {
        let r = chern_report(&sd("(0,2;(2,1))")).unwrap();
        assert!(r.trivial);
        assert_eq!(r.lattice_witness, Some(ints(&[0, 5])));
        assert!(!chern_report(&sd("(1,0;(3,2))")).unwrap().trivial);
    }

    #[test]
    fn ledger_examples() {
        let e8 = trivialization_data(&sd("(-1,0;(2,1),(3,1),(5,1))")).unwrap();
        let last = &e8.pairs[2];
        assert_eq!((last.pair.alpha, last.pair.beta, last.p, last.q), (5, 1, 4, 1));
        assert_eq!(last.d_rotation, Int::from(1));
        assert_eq!(e8.b_corr, Int::from(-1));

        let g2 = trivialization_data(&sd("(0,2;(2,1))")).unwrap();
        assert_eq!(g2.b_corr, Int::from(5));
        assert_eq!(g2.pairs[0].a, Int::from(-2));

        let hopf = trivialization_data(&sd("(1,0)")).unwrap();
        assert_eq!(hopf.b_corr, Int::from(-2));
        assert!(hopf.pairs.is_empty());

        assert_eq!(trivialization_data(&sd("(1,0;(3,2))")), Err(Error::NonTrivialChern));
    }

    #[test]
    fn d_rotation_two_routes() {
        // p - (p a + q b) against (p + χ/e)/α
        for s in ["(0,2;(2,1))", "(-1,0;(2,1),(3,1),(5,1))", "(1,0;(3,2))", "(2,1;(5,3),(7,4))"] {
            let r = rotation_corrections(&sd(s)).unwrap();
            for (_, a, p, q, rot) in &r.pairs {
                let p = Rational::from_integer(Int::from(*p));
                let qq = Rational::from_integer(Int::from(*q));
                assert_eq!(&p - (&p * a + qq * &r.b_corr), *rot, "{s}");
            }
        }
    }

    #[test]
    fn meridian_system_with_last_row_weighted() {
        // rows j ≤ k: α_j a_j + β_j b = α_j - 1
        // row k+1: -α_{k+1} Σ a_j + β_{k+1} b = (2g - 1) α_{k+1} - 1
        for s in ["(0,2;(2,1),(3,1))", "(-1,0;(2,1),(3,1),(5,1))", "(3,3;(4,3),(7,2),(5,1))"] {
            let form = sd(s).zero_b_form();
            let c = form.orbifold_euler_char() / form.euler_number();
            let b = -c.clone();
            let pairs = form.pairs();
            let (last, rest) = pairs.split_last().unwrap();
            let a: Vec<Rational> = rest.iter().map(|p| meridian_correction(p, &c)).collect();
            for (p, aj) in rest.iter().zip(&a) {
                let lhs =
                    Rational::from_integer(Int::from(p.alpha)) * aj + Rational::from_integer(Int::from(p.beta)) * &b;
                assert_eq!(lhs, Rational::from_integer(Int::from(p.alpha - 1)));
            }
            let sum: Rational = a.iter().cloned().fold(Rational::zero(), |x, y| x + y);
            let lhs = -Rational::from_integer(Int::from(last.alpha)) * sum
                + Rational::from_integer(Int::from(last.beta)) * &b;
            let g = i64::from(form.genus());
            assert_eq!(lhs, Rational::from_integer(Int::from((2 * g - 1) * last.alpha - 1)), "{s}");
        }
    }
}
