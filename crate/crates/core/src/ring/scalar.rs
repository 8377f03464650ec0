use super::{rat, Rat};
use num_traits::{One, Signed, Zero};

/// A polynomial in the formal parameter with exact rational coefficients.
/// Canonical form: no trailing zeros; zero is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar {
    coeffs: Vec<Rat>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ParamScalar::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut s = ParamScalar { coeffs: vec![c] };
        s.normalize();
        s
    }

    pub fn int(c: i64) -> Self {
        ParamScalar::constant(rat(c))
    }

    /// The parameter itself.
    pub fn param() -> Self {
        ParamScalar { coeffs: vec![rat(0), rat(1)] }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut s = ParamScalar { coeffs };
        s.normalize();
        s
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in the parameter; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at parameter 0; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(|| rat(0))
    }

    pub fn constant_coeff(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, other: &ParamScalar) -> ParamScalar {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0));
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| rat(0));
            coeffs.push(a + b);
        }
        ParamScalar::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &ParamScalar) -> ParamScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ParamScalar {
        ParamScalar { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &ParamScalar) -> ParamScalar {
        if self.is_zero() || other.is_zero() {
            return ParamScalar::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ParamScalar::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> ParamScalar {
        ParamScalar::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &ParamScalar) -> Option<ParamScalar> {
        assert!(!divisor.is_zero(), "division by zero scalar");
        if self.is_zero() {
            return Some(ParamScalar::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading_coeff();
        let dd = divisor.coeffs.len() - 1;
        let mut quot = vec![rat(0); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() / &dlead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    let sub = &c * b;
                    rem[idx] -= sub;
                }
            }
            quot[k - dd] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ParamScalar::from_coeffs(quot))
    }

    /// Monic gcd over the rational function field.
    pub fn gcd(&self, other: &ParamScalar) -> ParamScalar {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff();
        a.scale(&(Rat::one() / lead))
    }

    fn rem(&self, divisor: &ParamScalar) -> ParamScalar {
        if self.coeffs.len() < divisor.coeffs.len() {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading_coeff();
        let dd = divisor.coeffs.len() - 1;
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() / &dlead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let sub = &c * b;
                    rem[k - dd + j] -= sub;
                }
            }
        }
        ParamScalar::from_coeffs(rem[..dd].to_vec())
    }

    /// Rational content: the positive rational `c` such that `self / c`
    /// has coprime integer coefficients.  Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return rat(0);
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    pub fn render(&self, param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => format!("{mag}"),
                1 if mag.is_one() => param.to_string(),
                1 => format!("{mag}*{param}"),
                _ if mag.is_one() => format!("{param}^{i}"),
                _ => format!("{mag}*{param}^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{}{body}", if c.is_negative() { " - " } else { " + " }));
            }
        }
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat_frac;

    fn p(cs: &[i64]) -> ParamScalar {
        ParamScalar::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]); // 1 + A
        let b = p(&[-1, 1]); // -1 + A
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), ParamScalar::zero());
        assert_eq!(a.evaluate(&rat(3)), rat(4));
    }

    #[test]
    fn exact_division_and_gcd() {
        let prod = p(&[-1, 0, 1]); // A^2 - 1
        assert_eq!(prod.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(prod.div_exact(&p(&[1, 2])), None);
        let g = prod.gcd(&p(&[1, 2, 1])); // gcd(A^2-1, (A+1)^2) = A+1 (monic)
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(p(&[2]).gcd(&p(&[0, 3])), ParamScalar::one());
    }

    #[test]
    fn valuation_and_content() {
        let s = ParamScalar::from_coeffs(vec![rat(0), rat_frac(2, 3), rat(4)]);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.degree(), Some(2));
        assert_eq!(s.rational_content(), rat_frac(2, 3));
        assert_eq!(ParamScalar::zero().valuation(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 1]).render("A"), "A");
        assert_eq!(p(&[-1, 0, 2]).render("A"), "2*A^2 - 1");
        assert_eq!(ParamScalar::zero().render("A"), "0");
    }
}
