//! One-parameter group actions, alpha/lambda-degrees of top exterior
//! powers, isotropy orders, and intersection numbers of the tautological
//! bundles with orbit and family closures.

mod action;
mod wedge;

pub use action::OneParamAction;
pub use wedge::{
    split_blocks, wedge_alpha_degree, wedge_diagonal_greedy, wedge_exhaustive, wedge_projection,
};

use crate::ideal::{DegreePiece, GradedIdeal};
use crate::ring::{rat, rat_frac, IntPolynomial, Rat};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Order of the inertia subgroup of a parameter-free subspace inside the
/// one-dimensional torus acting with the given weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotropyOrder {
    Finite(u64),
    /// The subspace is a direct sum of its exact weight components, i.e.
    /// fixed by the whole torus.
    Infinite,
}

/// Largest `e` such that the subspace decomposes as the direct sum of its
/// weight-classes-mod-`e` parts (tested by projections), `Infinite` when
/// the decomposition is exact.
pub fn isotropy_order(piece: &DegreePiece, weights: &[i64]) -> IsotropyOrder {
    let cols = piece.columns();
    let dim = piece.dim();
    if dim == 0 {
        return IsotropyOrder::Infinite;
    }
    let col_weight: Vec<i64> = (0..cols.len()).map(|j| cols.monomial(j).weight(weights)).collect();
    let support: Vec<usize> = {
        let mut s: Vec<usize> = piece.rows().iter().flat_map(|r| r.columns()).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let wmin = support.iter().map(|&j| col_weight[j]).min().unwrap();
    let wmax = support.iter().map(|&j| col_weight[j]).max().unwrap();
    let spread = (wmax - wmin) as u64;

    let decomposes = |class_of: &dyn Fn(i64) -> i64| -> bool {
        // Sum over classes of dim(projection) equals dim iff the subspace
        // splits as the direct sum of its class components.
        let mut classes: BTreeMap<i64, Vec<crate::linalg::SparseRow>> = BTreeMap::new();
        for r in piece.rows() {
            let mut parts: BTreeMap<i64, Vec<(usize, crate::ring::ParamScalar)>> = BTreeMap::new();
            for (j, c) in r.entries() {
                parts.entry(class_of(col_weight[*j])).or_default().push((*j, c.clone()));
            }
            for (cl, entries) in parts {
                classes.entry(cl).or_default().push(crate::linalg::SparseRow::new(entries));
            }
        }
        let total: usize = classes
            .into_values()
            .map(|rows| crate::linalg::Echelon::from_rows(rows).dim())
            .sum();
        total == dim
    };

    if decomposes(&|w| w) {
        return IsotropyOrder::Infinite;
    }
    for e in (2..=spread.max(1)).rev() {
        let ee = e as i64;
        if decomposes(&|w| w.rem_euclid(ee)) {
            return IsotropyOrder::Finite(e);
        }
    }
    IsotropyOrder::Finite(1)
}

/// How a one-parameter family of ideals is presented.
#[derive(Debug, Clone)]
pub enum FamilyKind {
    /// Generators already involve the parameter (a pencil / unipotent
    /// orbit written out); the parametrization is injective and the
    /// isotropy order is 1.
    Pencil {
        /// Affine chart(s): one ideal per chart.  Two charts must agree in
        /// every computation that consumes them.
        charts: Vec<GradedIdeal>,
    },
    /// The orbit of a parameter-free ideal under a diagonal action; the
    /// wedge degree is divided by the per-slice isotropy order.
    DiagonalOrbit { ideal: GradedIdeal, weights: Vec<i64> },
}

/// A one-parameter family of ideals together with the degree bookkeeping
/// needed to evaluate tautological intersection numbers against it.
#[derive(Debug, Clone)]
pub struct CycleFamily {
    pub name: String,
    pub kind: FamilyKind,
    /// Expected slice dimension (the ideal Hilbert polynomial); slice
    /// dimensions are checked against it in the direct range.
    pub expected_q: IntPolynomial,
    /// Degrees >= this use the direct Plücker computation.
    pub direct_start: u32,
    /// Degrees >= this are meaningful (the tautological bundle is a line
    /// bundle there); between `regular_start` and `direct_start` values
    /// come from the verified polynomial extension of the direct window.
    pub regular_start: u32,
    /// Saturation exponent cap for slice computations.
    pub saturation_cap: u32,
}

impl CycleFamily {
    /// Build a pencil family (single affine chart).
    pub fn pencil(
        name: &str,
        ideal: GradedIdeal,
        expected_q: IntPolynomial,
        regular_start: u32,
        direct_start: u32,
    ) -> Self {
        CycleFamily {
            name: name.to_string(),
            kind: FamilyKind::Pencil { charts: vec![ideal] },
            expected_q,
            direct_start,
            regular_start,
            saturation_cap: direct_start + 6,
        }
    }

    pub fn with_second_chart(mut self, chart: GradedIdeal) -> Self {
        match &mut self.kind {
            FamilyKind::Pencil { charts } => charts.push(chart),
            _ => panic!("charts only apply to pencil families"),
        }
        self
    }

    /// Orbit of a parameter-free ideal under a unipotent action, realized
    /// as the pencil of substituted generators.
    pub fn unipotent_orbit(
        name: &str,
        ideal: &GradedIdeal,
        action: &OneParamAction,
        expected_q: IntPolynomial,
        regular_start: u32,
        direct_start: u32,
    ) -> Result<Self> {
        let moved = action.apply_ideal(ideal)?;
        Ok(Self::pencil(name, moved, expected_q, regular_start, direct_start))
    }

    pub fn diagonal_orbit(
        name: &str,
        ideal: GradedIdeal,
        weights: Vec<i64>,
        expected_q: IntPolynomial,
        regular_start: u32,
        direct_start: u32,
    ) -> Self {
        CycleFamily {
            name: name.to_string(),
            kind: FamilyKind::DiagonalOrbit { ideal, weights },
            expected_q,
            direct_start,
            regular_start,
            saturation_cap: direct_start + 6,
        }
    }

    /// Intersection number of the tautological bundle `M_n` with the
    /// closure of the family.
    pub fn orbit_degree(&self, n: u32, seed: u64) -> Result<Rat> {
        if n >= self.direct_start {
            return self.direct_degree(n, seed);
        }
        if n < self.regular_start {
            return Err(Error::FamilyDomain(format!(
                "degree {n} below the regular range start {} of family {}",
                self.regular_start, self.name
            )));
        }
        // Verified polynomial extension of the direct window: the degree
        // function of an orbit closure is a polynomial of degree <= 2 in n
        // on the regular range.
        let p = self.degree_polynomial(seed)?;
        Ok(p.eval(n as i64))
    }

    /// Quadratic (or lower) polynomial through the direct window, with two
    /// extra verification points.
    pub fn degree_polynomial(&self, seed: u64) -> Result<IntPolynomial> {
        let lo = self.direct_start;
        let samples: Vec<(i64, Rat)> = (lo..=lo + 5)
            .map(|n| Ok((n as i64, self.direct_degree(n, seed)?)))
            .collect::<Result<Vec<_>>>()?;
        crate::ring::fit_int_poly(&samples, 2).map_err(|e| {
            Error::NonzeroResidual(format!(
                "family {} degree function is not a quadratic in n: {e}",
                self.name
            ))
        })
    }

    fn direct_degree(&self, n: u32, seed: u64) -> Result<Rat> {
        match &self.kind {
            FamilyKind::Pencil { charts } => {
                let mut values = Vec::new();
                for chart in charts {
                    let piece = chart.degree_piece(n);
                    self.check_dim(n, piece.dim())?;
                    values.push(wedge_alpha_degree(piece.rows(), seed)?);
                }
                if values.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::NonzeroResidual(format!(
                        "charts of {} disagree at degree {n}: {values:?}",
                        self.name
                    )));
                }
                Ok(rat(values[0] as i64))
            }
            FamilyKind::DiagonalOrbit { ideal, weights } => {
                let piece = ideal.saturated_piece(n, self.saturation_cap);
                self.check_dim(n, piece.dim())?;
                let ell = match isotropy_order(&piece, weights) {
                    IsotropyOrder::Infinite => {
                        // Fixed slice: the orbit does not move in this
                        // embedding degree.
                        return Ok(rat(0));
                    }
                    IsotropyOrder::Finite(e) => e,
                };
                let cols = piece.columns();
                let spread = wedge_diagonal_greedy(piece.rows(), |j| {
                    cols.monomial(j).weight(weights)
                })?;
                let value = rat_frac(spread as i64, ell as i64);
                if value.denom() != &1.into() {
                    return Err(Error::NonIntegralDegree(format!(
                        "family {}: spread {spread} not divisible by isotropy order {ell} at degree {n}",
                        self.name
                    )));
                }
                Ok(value)
            }
        }
    }

    fn check_dim(&self, n: u32, dim: usize) -> Result<()> {
        let expected = self.expected_q.eval(n as i64);
        if rat(dim as i64) != expected {
            return Err(Error::RankDeficient(format!(
                "family {}: slice dimension {dim} at degree {n}, expected {expected}",
                self.name
            )));
        }
        Ok(())
    }
}

/// A formal product of tautological bundles `M_n^(e_n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TautCombo {
    exponents: BTreeMap<u32, i64>,
}

impl TautCombo {
    pub fn new() -> Self {
        TautCombo::default()
    }

    pub fn single(n: u32) -> Self {
        TautCombo::new().with(n, 1)
    }

    pub fn with(mut self, n: u32, e: i64) -> Self {
        if e != 0 {
            *self.exponents.entry(n).or_insert(0) += e;
            if self.exponents[&n] == 0 {
                self.exponents.remove(&n);
            }
        }
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.exponents.iter().map(|(n, e)| (*n, *e))
    }
}

/// `sum e_n * (M_n . F)` over the combo.
pub fn combo_degree(family: &CycleFamily, combo: &TautCombo, seed: u64) -> Result<Rat> {
    let mut acc = rat(0);
    for (n, e) in combo.iter() {
        acc += family.orbit_degree(n, seed)? * rat(e);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ParamForm, RingSpec};

    fn piece_of(ring: &RingSpec, degree: u32, forms: &[&str]) -> DegreePiece {
        let fs: Vec<ParamForm> =
            forms.iter().map(|s| ParamForm::parse(s, ring).unwrap()).collect();
        DegreePiece::from_forms(ring, degree, &fs)
    }

    #[test]
    fn isotropy_monomial_span_is_infinite() {
        let r = RingSpec::p3();
        let v = piece_of(&r, 2, &["t^2", "z^2"]);
        assert_eq!(isotropy_order(&v, &[0, 0, 0, 1]), IsotropyOrder::Infinite);
    }

    #[test]
    fn isotropy_mod_two() {
        let r = RingSpec::p3();
        let v = piece_of(&r, 2, &["t^2 + z^2", "z*t"]);
        assert_eq!(isotropy_order(&v, &[0, 0, 0, 1]), IsotropyOrder::Finite(2));
    }

    #[test]
    fn isotropy_generic_is_one() {
        let r = RingSpec::p3();
        let v = piece_of(&r, 2, &["t^2 + z*t + z^2"]);
        assert_eq!(isotropy_order(&v, &[0, 0, 0, 1]), IsotropyOrder::Finite(1));
    }
}
