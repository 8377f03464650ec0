use super::{binom, rat, Rat};
use crate::{Error, Result};
use num_traits::Zero;

/// A polynomial in the degree variable `n`, stored in the basis of
/// polynomial binomial coefficients `binom(n+k, k)`.  Houses Hilbert
/// polynomials and intersection-number functions.  Evaluation is exact at
/// every integer, including where the binomial arguments go negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    // coeffs[k] multiplies binom(n+k, k).
    coeffs: Vec<Rat>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        IntPolynomial::from_binomial_basis(vec![c])
    }

    pub fn from_binomial_basis(coeffs: Vec<Rat>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    /// Build from power-basis coefficients `c_0 + c_1 n + c_2 n^2 + ...`.
    pub fn from_power_basis(power: &[Rat]) -> Self {
        let d = power.len();
        let eval = |n: i64| -> Rat {
            let mut acc = rat(0);
            let mut pw = rat(1);
            for c in power {
                acc += c * &pw;
                pw *= rat(n);
            }
            acc
        };
        Self::from_values_fn(d, eval)
    }

    /// The single term `binom(n + shift, k)`, e.g. `shift = -a + 2, k = 2`.
    pub fn binomial_term(shift: i64, k: u32) -> Self {
        Self::from_values_fn(k as usize + 1, |n| binom(n + shift, k))
    }

    // Binomial-basis coefficients of a polynomial of degree < d with the
    // given values.  The backward difference maps binom(n+k, k) to
    // binom(n+k-1, k-1) and binom(n+k, k) vanishes at n = -1 for k >= 1,
    // so c_k is the k-th backward difference at n = -1; vals[i] holds the
    // current differences at n = -1-i.
    fn from_values_fn(d: usize, f: impl Fn(i64) -> Rat) -> Self {
        if d == 0 {
            return IntPolynomial::zero();
        }
        let mut vals: Vec<Rat> = (0..d as i64).map(|i| f(-1 - i)).collect();
        let mut coeffs = Vec::with_capacity(d);
        coeffs.push(vals[0].clone());
        while vals.len() > 1 {
            for i in 0..vals.len() - 1 {
                vals[i] = &vals[i] - &vals[i + 1];
            }
            vals.pop();
            coeffs.push(vals[0].clone());
        }
        IntPolynomial::from_binomial_basis(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn binomial_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient in the power basis: the `binom(n+d,d)` basis
    /// element has leading power coefficient `1/d!`.
    pub fn leading_power_coeff(&self) -> Rat {
        match self.degree() {
            None => rat(0),
            Some(d) => {
                let mut fact = rat(1);
                for i in 1..=d as i64 {
                    fact *= rat(i);
                }
                self.coeffs[d].clone() / fact
            }
        }
    }

    pub fn eval(&self, n: i64) -> Rat {
        let mut acc = rat(0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * binom(n + k as i64, k as u32);
            }
        }
        acc
    }

    /// Power-basis coefficients, constant term first.
    pub fn power_coeffs(&self) -> Vec<Rat> {
        // Finite differences at 0: Newton forward form gives the power
        // expansion through the falling-factorial basis; easier: solve a
        // small Vandermonde system exactly.
        let d = self.coeffs.len();
        if d == 0 {
            return Vec::new();
        }
        let pts: Vec<(i64, Rat)> = (0..d as i64).map(|n| (n, self.eval(n))).collect();
        newton_power_coeffs(&pts)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0));
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| rat(0));
            coeffs.push(a + b);
        }
        IntPolynomial::from_binomial_basis(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> IntPolynomial {
        IntPolynomial::from_binomial_basis(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(n + shift)` as an IntPolynomial.
    pub fn shift(&self, shift: i64) -> IntPolynomial {
        let d = self.coeffs.len();
        if d == 0 {
            return IntPolynomial::zero();
        }
        let samples: Vec<(i64, Rat)> =
            (0..d as i64 + 1).map(|n| (n, self.eval(n + shift))).collect();
        Self::interpolate(&samples)
    }

    /// Exact interpolation through samples with distinct `n`.
    pub fn interpolate(samples: &[(i64, Rat)]) -> IntPolynomial {
        let power = newton_power_coeffs(samples);
        IntPolynomial::from_power_basis(&trim(power, samples))
    }

    pub fn render(&self) -> String {
        use num_traits::{One, Signed};
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if k == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                format!("binom(n+{k},{k})")
            } else {
                format!("{mag}*binom(n+{k},{k})")
            };
            if first {
                out.push_str(&format!("{}{body}", if c.is_negative() { "-" } else { "" }));
                first = false;
            } else {
                out.push_str(&format!(" {} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        out
    }
}

// Power-basis coefficients of the Newton interpolation polynomial through
// the given points (distinct abscissas).
fn newton_power_coeffs(samples: &[(i64, Rat)]) -> Vec<Rat> {
    let n = samples.len();
    assert!(n > 0);
    // Divided differences.
    let mut dd: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = rat(samples[i].0 - samples[i - level].0);
            dd[i] = num / den;
        }
    }
    // Expand Newton form into power coefficients.
    let mut power = vec![rat(0); n];
    let mut basis = vec![rat(0); n]; // coefficients of prod (x - x_j), starts as 1
    basis[0] = rat(1);
    let mut basis_len = 1;
    for (i, c) in dd.iter().enumerate() {
        for j in 0..basis_len {
            power[j] += c * &basis[j];
        }
        if i + 1 < n {
            // basis *= (x - x_i)
            let xi = rat(samples[i].0);
            for j in (0..basis_len).rev() {
                let b = basis[j].clone();
                basis[j + 1] += &b;
                basis[j] = -(b * &xi);
            }
            basis_len += 1;
        }
    }
    power
}

fn trim(mut v: Vec<Rat>, _samples: &[(i64, Rat)]) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Interpolate an `IntPolynomial` of degree at most `degree_bound` through
/// the samples; surplus samples are verification points and must match
/// exactly.
pub fn fit_int_poly(samples: &[(i64, Rat)], degree_bound: u32) -> Result<IntPolynomial> {
    let need = degree_bound as usize + 2;
    let mut seen = std::collections::BTreeSet::new();
    for (n, _) in samples {
        seen.insert(*n);
    }
    if seen.len() < need || seen.len() != samples.len() {
        return Err(Error::FitTooFewSamples { need, got: seen.len() });
    }
    let fit_on = &samples[..degree_bound as usize + 1];
    let p = IntPolynomial::interpolate(fit_on);
    if p.degree().unwrap_or(0) > degree_bound as usize {
        return Err(Error::FitMismatch {
            n: fit_on[0].0,
            expected: format!("degree <= {degree_bound}"),
            got: format!("degree {}", p.degree().unwrap_or(0)),
        });
    }
    for (n, v) in &samples[degree_bound as usize + 1..] {
        let got = p.eval(*n);
        if got != *v {
            return Err(Error::FitMismatch { n: *n, expected: v.to_string(), got: got.to_string() });
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Q(n) for Macaulay coefficients (a, b).
    fn q_poly(a: i64, b: i64) -> IntPolynomial {
        IntPolynomial::binomial_term(2, 3)
            .add(&IntPolynomial::binomial_term(-a + 2, 2))
            .add(&IntPolynomial::binomial_term(-b + 1, 1))
    }

    #[test]
    fn q_at_8_for_5_8() {
        // binom(10,3) + binom(5,2) + binom(1,1) = 120 + 10 + 1
        assert_eq!(q_poly(5, 8).eval(8), rat(131));
    }

    #[test]
    fn m_n_c2_at_a_minus_3() {
        // binom(n-a+2,2) + (n-b+1) at n = a-3 equals a-b-1; (a,b) = (5,8).
        let p = IntPolynomial::binomial_term(-5 + 2, 2)
            .add(&IntPolynomial::binomial_term(-8 + 1, 1));
        assert_eq!(p.eval(2), rat(-4));
    }

    #[test]
    fn zero_polynomial() {
        assert_eq!(IntPolynomial::zero().eval(17), rat(0));
    }

    #[test]
    fn binomial_vs_power_basis() {
        let p = q_poly(4, 4);
        let pw = p.power_coeffs();
        for n in -5..10 {
            let mut acc = rat(0);
            let mut x = rat(1);
            for c in &pw {
                acc += c * &x;
                x *= rat(n);
            }
            assert_eq!(acc, p.eval(n), "power/binomial mismatch at n={n}");
        }
    }

    #[test]
    fn fit_linear_n_minus_b_plus_1() {
        let b = 8i64;
        let samples: Vec<(i64, Rat)> = (b..b + 4).map(|n| (n, rat(n - b + 1))).collect();
        let p = fit_int_poly(&samples, 1).unwrap();
        assert_eq!(p.eval(20), rat(13));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn fit_constant() {
        let samples: Vec<(i64, Rat)> = (0..5).map(|n| (n, rat(7))).collect();
        let p = fit_int_poly(&samples, 0).unwrap();
        assert_eq!(p, IntPolynomial::constant(rat(7)));
    }

    #[test]
    fn fit_quadratic_with_verification_point() {
        // binom(n-a+2,2) + (n-b+1) for (a,b) = (5,8), sampled at 5 points
        // with bound 2, then independently checked at a 6th point.
        let closed = |n: i64| binom(n - 5 + 2, 2) + rat(n - 8 + 1);
        let samples: Vec<(i64, Rat)> = (2..8).map(|n| (n, closed(n))).collect();
        let p = fit_int_poly(&samples, 2).unwrap();
        assert_eq!(p.eval(9), closed(9));
    }

    #[test]
    fn fit_detects_non_polynomial_data() {
        let mut samples: Vec<(i64, Rat)> = (0..5).map(|n| (n, rat(n))).collect();
        samples.push((5, rat(99)));
        assert!(matches!(fit_int_poly(&samples, 1), Err(Error::FitMismatch { .. })));
    }

    #[test]
    fn shift_matches_eval() {
        let p = q_poly(5, 8);
        let s = p.shift(-1);
        for n in 0..12 {
            assert_eq!(s.eval(n), p.eval(n - 1));
        }
    }
}
