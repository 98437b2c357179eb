//! Cellular chain complex of a Seifert-fibered Besse manifold and its
//! homology.
//!
//! The cell structure starts from the trivial circle bundle over a genus-`g`
//! surface with `k + 1` boundary circles and fills each boundary torus with a
//! meridian disc `C_j` and a ball `D_j`:
//!
//! | degree | cells |
//! |--------|-------|
//! | 0 | `e0` |
//! | 1 | `μ_1..μ_{k+1}, λ, σ_1, τ_1, .., σ_g, τ_g` |
//! | 2 | `C_1..C_{k+1}, M_1..M_{k+1}, B, S_1, T_1, .., S_g, T_g` |
//! | 3 | `D_1..D_{k+1}, e3` |
//!
//! with `∂C_j = α_j μ_j + β_j λ`, `∂B = -Σ μ_j`, `∂D_j = M_j`,
//! `∂e3 = -Σ M_j`, and every other boundary zero.

use crate::exactalg::{rank_mod2, smith_normal_form};
use crate::seifert::{SeifertData, ZeroBForm};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Mod2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwComplex {
    form: ZeroBForm,
    /// Cell labels per degree 0..=3, in basis order.
    pub labels: [Vec<String>; 4],
    /// `∂_2 : C_2 → C_1`, rows indexed by 1-cells.
    pub boundary2: IntMatrix,
    /// `∂_3 : C_3 → C_2`, rows indexed by 2-cells.
    pub boundary3: IntMatrix,
}

impl CwComplex {
    pub fn form(&self) -> &ZeroBForm {
        &self.form
    }

    pub fn cell_counts(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|d| self.labels[d].len())
    }

    /// `∂_d` for `d` in `1..=4` (zero maps outside `2..=3`).
    pub fn boundary(&self, d: usize) -> IntMatrix {
        let counts = self.cell_counts();
        match d {
            2 => self.boundary2.clone(),
            3 => self.boundary3.clone(),
            1 => IntMatrix::zeros(counts[0], counts[1]),
            4 => IntMatrix::zeros(counts[3], 0),
            _ => panic!("no boundary map in degree {d}"),
        }
    }
}

/// Builds the chain complex on a `b = 0` presentation.
pub fn chain_complex(form: &ZeroBForm) -> CwComplex {
    let pairs = form.pairs();
    let n = pairs.len(); // k + 1
    let g = form.genus() as usize;

    let mut l1: Vec<String> = (1..=n).map(|j| format!("mu{j}")).collect();
    l1.push("lambda".into());
    for l in 1..=g {
        l1.push(format!("sigma{l}"));
        l1.push(format!("tau{l}"));
    }

    let mut l2: Vec<String> = (1..=n).map(|j| format!("C{j}")).collect();
    l2.extend((1..=n).map(|j| format!("M{j}")));
    l2.push("B".into());
    for l in 1..=g {
        l2.push(format!("S{l}"));
        l2.push(format!("T{l}"));
    }

    let mut l3: Vec<String> = (1..=n).map(|j| format!("D{j}")).collect();
    l3.push("e3".into());

    let lambda = n;
    let b_cell = 2 * n;
    let mut d2 = IntMatrix::zeros(l1.len(), l2.len());
    for (j, p) in pairs.iter().enumerate() {
        d2[(j, j)] = Int::from(p.alpha);
        d2[(lambda, j)] = Int::from(p.beta);
        d2[(j, b_cell)] = Int::from(-1);
    }

    let e3 = n;
    let mut d3 = IntMatrix::zeros(l2.len(), l3.len());
    for j in 0..n {
        d3[(n + j, j)] = Int::from(1);
        d3[(n + j, e3)] = Int::from(-1);
    }

    CwComplex { form: form.clone(), labels: [vec!["e0".into()], l1, l2, l3], boundary2: d2, boundary3: d3 }
}

/// Homology in degrees 0..=3. Torsion is only recorded over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroups {
    pub coefficients: Coefficients,
    /// Free rank over `Z`, or dimension over `Z/2`.
    pub ranks: [usize; 4],
    /// Invariant factors `> 1`, divisibility-chained.
    pub torsion: [Vec<Int>; 4],
}

impl HomologyGroups {
    pub fn betti_sum(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Renders `H_d` as e.g. `Z^2+Z/3`, or `0`.
    pub fn describe(&self, d: usize) -> String {
        let mut parts = Vec::new();
        let base = match self.coefficients {
            Coefficients::Integers => "Z",
            Coefficients::Mod2 => "Z/2",
        };
        match self.ranks[d] {
            0 => {}
            1 => parts.push(base.to_string()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(self.torsion[d].iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

pub fn homology_groups(c: &CwComplex, coefficients: Coefficients) -> HomologyGroups {
    let counts = c.cell_counts();
    let mut ranks = [0usize; 4];
    let mut torsion: [Vec<Int>; 4] = Default::default();
    match coefficients {
        Coefficients::Integers => {
            let smith: Vec<_> = (1..=4).map(|d| smith_normal_form(&c.boundary(d))).collect();
            let rank = |d: usize| smith[d - 1].rank();
            for d in 0..4 {
                let incoming = if d == 0 { 0 } else { rank(d) };
                ranks[d] = counts[d] - incoming - rank(d + 1);
                torsion[d] = smith[d].torsion();
            }
        }
        Coefficients::Mod2 => {
            let rank = |d: usize| rank_mod2(&c.boundary(d));
            for d in 0..4 {
                let incoming = if d == 0 { 0 } else { rank(d) };
                ranks[d] = counts[d] - incoming - rank(d + 1);
            }
        }
    }
    HomologyGroups { coefficients, ranks, torsion }
}

/// Homology of the manifold described by `d`.
pub fn homology_of(d: &SeifertData, coefficients: Coefficients) -> HomologyGroups {
    homology_groups(&chain_complex(&d.zero_b_form()), coefficients)
}

/// Mod-2 Betti numbers `(b0, b1, b2, b3)`.
pub fn mod2_betti(d: &SeifertData) -> [usize; 4] {
    homology_of(d, Coefficients::Mod2).ranks
}

/// `H^2(M) ≅ Z^{2g} ⊕ Z^{k+2} / im A_M`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Presentation {
    pub a_m: IntMatrix,
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

/// The relation matrix
///
/// ```text
/// [ α_1          β_1     ]
/// [     ...      ...     ]
/// [       α_{k+1} β_{k+1} ]
/// [ -1 ... -1     0      ]
/// ```
pub fn a_m_matrix(form: &ZeroBForm) -> IntMatrix {
    let n = form.pairs().len();
    let mut a = IntMatrix::zeros(n + 1, n + 1);
    for (j, p) in form.pairs().iter().enumerate() {
        a[(j, j)] = Int::from(p.alpha);
        a[(j, n)] = Int::from(p.beta);
        a[(n, j)] = Int::from(-1);
    }
    a
}

pub fn h2_presentation(form: &ZeroBForm) -> H2Presentation {
    let a_m = a_m_matrix(form);
    let torsion = smith_normal_form(&a_m).torsion();
    H2Presentation { a_m, free_rank: 2 * form.genus() as usize, torsion }
}
