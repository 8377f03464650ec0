//! Conversions between the Macaulay coefficients `(a, b)`, the pair
//! `(degree, genus)`, and Hilbert polynomials; admissibility and regime
//! classification.

use crate::ring::{rat, rat_frac, IntPolynomial, Rat};
use crate::{Error, Result};
use num_traits::Zero;

/// Macaulay coefficients of a space-curve Hilbert polynomial together with
/// all derived quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct MacaulayData {
    pub a: u32,
    pub b: u32,
    /// degree `d = a - 1`
    pub d: u32,
    /// genus `g = (a^2 - 3a + 4)/2 - b`
    pub g: i64,
    /// `c = b - a + 1`
    pub c: u32,
    /// `r = b - a`
    pub r: u32,
    /// `rho = r(r+1)/2`
    pub rho: u32,
}

impl MacaulayData {
    fn derive(a: u32, b: u32) -> Self {
        let r = b - a;
        MacaulayData {
            a,
            b,
            d: a - 1,
            g: (a as i64 * a as i64 - 3 * a as i64 + 4) / 2 - b as i64,
            c: r + 1,
            r,
            rho: r * (r + 1) / 2,
        }
    }
}

/// Build the data from the Macaulay coefficients; requires `2 <= a <= b`.
pub fn ab_to_dg(a: u32, b: u32) -> Result<MacaulayData> {
    if a < 2 || b < a {
        return Err(Error::Inadmissible(format!("(a, b) = ({a}, {b}) needs 2 <= a <= b")));
    }
    Ok(MacaulayData::derive(a, b))
}

/// Inverse of [`ab_to_dg`]: from degree and genus.  Errors on the plane
/// case `g = (d-1)(d-2)/2` and on inadmissible pairs.
pub fn dg_to_ab(d: u32, g: i64) -> Result<MacaulayData> {
    let a = d as i64 + 1;
    let g_plane = (d as i64 - 1) * (d as i64 - 2) / 2;
    if g >= g_plane {
        return Err(Error::Inadmissible(format!(
            "(d, g) = ({d}, {g}): plane-curve range g >= (d-1)(d-2)/2 = {g_plane}"
        )));
    }
    let b = (a * a - 3 * a + 4) / 2 - g;
    if a < 2 || b < a {
        return Err(Error::Inadmissible(format!("(d, g) = ({d}, {g}) gives (a, b) = ({a}, {b})")));
    }
    Ok(MacaulayData::derive(a as u32, b as u32))
}

/// The complementary Hilbert polynomial
/// `Q(n) = binom(n+2, 3) + binom(n-a+2, 2) + (n-b+1)`.
pub fn q_polynomial(m: &MacaulayData) -> IntPolynomial {
    IntPolynomial::binomial_term(2, 3)
        .add(&IntPolynomial::binomial_term(-(m.a as i64) + 2, 2))
        .add(&IntPolynomial::binomial_term(-(m.b as i64) + 1, 1))
}

/// The curve Hilbert polynomial `P(n) = binom(n+3, 3) - Q(n) = dn - g + 1`.
pub fn p_polynomial(m: &MacaulayData) -> IntPolynomial {
    IntPolynomial::binomial_term(3, 3).sub(&q_polynomial(m))
}

/// Result of matching a polynomial against the two Macaulay normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissible {
    /// Three-term form: a genuine space-curve polynomial.
    Curve(MacaulayData),
    /// Two-term form `binom(n+2,3) + binom(n-a+2,2)`: plane curves of
    /// degree `a`.
    Plane { a: u32 },
}

/// Recover `(a, b)` from a cubic `Q`, or recognize the plane-curve form.
pub fn admissible(q: &IntPolynomial) -> Result<Admissible> {
    let r = q.sub(&IntPolynomial::binomial_term(2, 3));
    let fail = || Error::Inadmissible(format!("Q = {} has no Macaulay form", q.render()));
    if r.degree() != Some(2) {
        return Err(fail());
    }
    let pw = r.power_coeffs();
    // r(n) = 1/2 n^2 + p n + q0.
    if pw[2] != rat_frac(1, 2) {
        return Err(fail());
    }
    let as_int = |x: &Rat| -> Option<i64> {
        if x.denom() == &1.into() {
            i64::try_from(x.numer().clone()).ok()
        } else {
            None
        }
    };
    // Plane form: binom(n-a+2, 2) has n-coefficient (3-2a)/2.
    // Curve form adds (n-b+1): n-coefficient (3-2a)/2 + 1.
    let p2 = &pw[1] * rat(2); // = 3 - 2a  (plane)  or  5 - 2a (curve)
    let p2 = as_int(&p2).ok_or_else(fail)?;
    for (is_plane, a2) in [(true, 3 - p2), (false, 5 - p2)] {
        if a2 % 2 != 0 {
            continue;
        }
        let a = a2 / 2;
        if a < if is_plane { 1 } else { 2 } {
            continue;
        }
        if is_plane {
            let expect = IntPolynomial::binomial_term(2, 3).add(&IntPolynomial::binomial_term(-a + 2, 2));
            if expect == *q {
                return Ok(Admissible::Plane { a: a as u32 });
            }
        } else {
            // constant term: (a-1)(a-2)/2 + 1 - b.
            let c0 = pw.first().cloned().unwrap_or_else(Rat::zero);
            let b = rat((a - 1) * (a - 2) / 2 + 1) - c0;
            let Some(b) = as_int(&b) else { continue };
            if b < a {
                continue;
            }
            let m = MacaulayData::derive(a as u32, b as u32);
            if q_polynomial(&m) == *q {
                return Ok(Admissible::Curve(m));
            }
        }
    }
    Err(fail())
}

/// Which regime of the genus classification a pair `(d, g)` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum GenusRegime {
    /// `g > gamma(d)`
    AboveGamma,
    /// `g(d) < g <= gamma(d)`
    Middle,
    /// `g <= g(d)`: the range where the three-cycle basis applies.
    AtMostGd,
}

/// Genus bounds for degree `d >= 3`:
/// `g(d) = (d-2)^2/4` (exact rational), `gamma(d) = binom(d-2, 2)`, and the
/// plane bound `(d-1)(d-2)/2`.
pub struct GenusBounds {
    pub g_of_d: Rat,
    pub gamma_of_d: i64,
    pub g_plane: i64,
}

pub fn genus_bounds(d: u32) -> GenusBounds {
    assert!(d >= 3, "genus bounds defined for d >= 3");
    let dd = d as i64;
    GenusBounds {
        g_of_d: rat_frac((dd - 2) * (dd - 2), 4),
        gamma_of_d: (dd - 2) * (dd - 3) / 2,
        g_plane: (dd - 1) * (dd - 2) / 2,
    }
}

pub fn classify_genus(d: u32, g: i64) -> GenusRegime {
    let b = genus_bounds(d);
    if rat(g) <= b.g_of_d {
        GenusRegime::AtMostGd
    } else if g <= b.gamma_of_d {
        GenusRegime::Middle
    } else {
        GenusRegime::AboveGamma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ab_to_dg_examples() {
        let m = ab_to_dg(4, 4).unwrap();
        assert_eq!((m.d, m.g), (3, 0));
        assert_eq!((m.c, m.r, m.rho), (1, 0, 0));
        let m = ab_to_dg(5, 8).unwrap();
        assert_eq!((m.d, m.g), (4, -1));
        assert_eq!((m.c, m.rho), (4, 6));
        let m = ab_to_dg(2, 2).unwrap();
        assert_eq!((m.d, m.g), (1, -1));
        assert!(ab_to_dg(1, 5).is_err());
        assert!(ab_to_dg(5, 4).is_err());
    }

    #[test]
    fn dg_to_ab_examples() {
        let m = dg_to_ab(3, 0).unwrap();
        assert_eq!((m.a, m.b), (4, 4));
        let m = dg_to_ab(6, 4).unwrap();
        assert_eq!((m.a, m.b), (7, 12));
        // g = (d-1)(d-2)/2 is the plane case.
        assert!(dg_to_ab(3, 1).is_err());
    }

    #[test]
    fn roundtrips_up_to_14() {
        for a in 2..=14u32 {
            for b in a..=14u32 {
                let m = ab_to_dg(a, b).unwrap();
                let back = dg_to_ab(m.d, m.g).unwrap();
                assert_eq!((back.a, back.b), (a, b));
                match admissible(&q_polynomial(&m)).unwrap() {
                    Admissible::Curve(r) => assert_eq!((r.a, r.b), (a, b)),
                    _ => panic!("expected curve form"),
                }
            }
        }
    }

    #[test]
    fn q_polynomial_values() {
        let m = ab_to_dg(4, 4).unwrap();
        assert_eq!(q_polynomial(&m).eval(4), rat(22));
        assert_eq!(p_polynomial(&m).eval(4), rat(13));
        // P(n) = d n - g + 1 identically.
        for (a, b) in [(4u32, 4u32), (5, 8), (6, 9), (7, 12)] {
            let m = ab_to_dg(a, b).unwrap();
            let p = p_polynomial(&m);
            let expect = IntPolynomial::from_power_basis(&[rat(1 - m.g), rat(m.d as i64)]);
            assert_eq!(p, expect);
        }
        // (a,b) = (5,8): P(n) = 4n + 2.
        let m = ab_to_dg(5, 8).unwrap();
        assert_eq!(p_polynomial(&m).eval(10), rat(42));
    }

    #[test]
    fn p_increment_stabilizes_to_d() {
        let m = ab_to_dg(6, 9).unwrap();
        let p = p_polynomial(&m);
        for n in 2..10 {
            assert_eq!(p.eval(n) - p.eval(n - 1), rat(m.d as i64));
        }
    }

    #[test]
    fn admissible_plane_marker_and_error() {
        let q = IntPolynomial::binomial_term(2, 3).add(&IntPolynomial::binomial_term(-4 + 2, 2));
        assert_eq!(admissible(&q).unwrap(), Admissible::Plane { a: 4 });
        let cubic = IntPolynomial::from_power_basis(&[rat(0), rat(0), rat(0), rat(1)]);
        assert!(admissible(&cubic).is_err());
    }

    #[test]
    fn genus_bounds_values() {
        let b = genus_bounds(6);
        assert_eq!(b.g_of_d, rat(4));
        assert_eq!(b.gamma_of_d, 6);
        assert_eq!(b.g_plane, 10);
        assert_eq!(genus_bounds(3).g_of_d, rat_frac(1, 4));
        assert_eq!(classify_genus(5, 2), GenusRegime::AtMostGd);
        assert_eq!(classify_genus(6, 5), GenusRegime::Middle);
        assert_eq!(classify_genus(6, 7), GenusRegime::AboveGamma);
    }

    #[test]
    fn g_at_most_gd_iff_a_squared_bound() {
        // g <= g(d)  <=>  a^2 - 1 <= 4b.
        for a in 4..=12u32 {
            for b in a..=(2 * a * a) {
                let Ok(m) = ab_to_dg(a, b) else { continue };
                let lhs = classify_genus(m.d, m.g) == GenusRegime::AtMostGd;
                let rhs = (a as i64) * (a as i64) - 1 <= 4 * b as i64;
                assert_eq!(lhs, rhs, "(a,b)=({a},{b})");
            }
        }
    }
}
