//! Exact arithmetic foundations: monomials, parameter scalars, homogeneous
//! forms, integer-valued polynomials and the form parser.

mod form;
mod intpoly;
mod monomial;
mod parse;
mod scalar;

pub use form::ParamForm;
pub use intpoly::{fit_int_poly, IntPolynomial};
pub use monomial::Monomial;
pub use scalar::ParamScalar;

use crate::{Error, Result};
use num_rational::BigRational;

/// Exact rational scalar used everywhere.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Polynomial binomial coefficient: `binom(m, k) = m(m-1)...(m-k+1)/k!`
/// for any integer `m`, including negative arguments.
pub fn binom(m: i64, k: u32) -> Rat {
    let mut num = rat(1);
    for i in 0..k as i64 {
        num *= rat(m - i);
    }
    for i in 1..=k as i64 {
        num /= rat(i);
    }
    num
}

/// Ambient polynomial ring: an ordered list of 3 or 4 variables plus the
/// name of the formal parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct RingSpec {
    vars: Vec<String>,
    param: String,
}

impl RingSpec {
    pub fn new(vars: &[&str], param: &str) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()) .collect();
        if vars.len() != 3 && vars.len() != 4 {
            return Err(Error::BadRing(format!("{} variables, want 3 or 4", vars.len())));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || v == param {
                return Err(Error::BadRing(format!("variable `{v}` clashes with parameter")));
            }
            if vars[..i].contains(v) {
                return Err(Error::BadRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(RingSpec { vars, param: param.to_string() })
    }

    /// `k[x,y,z,t]` with parameter `A`, the ambient ring of space curves.
    pub fn p3() -> Self {
        Self::new(&["x", "y", "z", "t"], "A").unwrap()
    }

    /// `k[x,y,z]` with parameter `A`, the ambient ring of plane points.
    pub fn p2() -> Self {
        Self::new(&["x", "y", "z"], "A").unwrap()
    }

    /// `k[x,y,t]` with parameter `A`: the plane with `t` as the last
    /// (weighted) variable, used by the projection checks.
    pub fn p2t() -> Self {
        Self::new(&["x", "y", "t"], "A").unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Number of monomials of the given degree.
    pub fn dim_degree(&self, degree: u32) -> usize {
        let n = (self.nvars() - 1) as i64;
        let b = binom(degree as i64 + n, n as u32);
        b.to_integer().try_into().unwrap()
    }

    /// All monomials of the given degree, in decreasing graded-lex order
    /// (first variable largest).  This is the fixed column order of every
    /// degree slice.
    pub fn monomials(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim_degree(degree));
        let mut cur = vec![0u32; self.nvars()];
        fill_monomials(self.nvars(), 0, degree, &mut cur, &mut out);
        out
    }
}

fn fill_monomials(nvars: usize, at: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if at + 1 == nvars {
        cur[at] = rem;
        out.push(Monomial::new(cur.clone()));
        return;
    }
    for e in (0..=rem).rev() {
        cur[at] = e;
        fill_monomials(nvars, at + 1, rem - e, cur, out);
    }
    cur[at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_polynomial_at_negative_arguments() {
        assert_eq!(binom(-1, 2), rat(1)); // (-1)(-2)/2
        assert_eq!(binom(0, 1), rat(0));
        assert_eq!(binom(-3, 1), rat(-3));
        assert_eq!(binom(10, 3), rat(120));
        assert_eq!(binom(5, 0), rat(1));
    }

    #[test]
    fn ring_rejects_clashes() {
        assert!(RingSpec::new(&["x", "y", "x"], "A").is_err());
        assert!(RingSpec::new(&["x", "y", "A"], "A").is_err());
        assert!(RingSpec::new(&["x", "y"], "A").is_err());
    }

    #[test]
    fn monomial_enumeration_is_graded_lex_descending() {
        let r = RingSpec::p2();
        let ms = r.monomials(2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].exponents(), &[2, 0, 0]);
        assert_eq!(ms[1].exponents(), &[1, 1, 0]);
        assert_eq!(ms[5].exponents(), &[0, 0, 2]);
        let r4 = RingSpec::p3();
        assert_eq!(r4.monomials(5).len(), r4.dim_degree(5));
        assert_eq!(r4.dim_degree(5), 56);
    }
}
