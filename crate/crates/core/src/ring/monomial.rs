use std::cmp::Ordering;

/// A monomial: one exponent per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// Monomial with a single variable raised to a power.
    pub fn var_pow(nvars: usize, var: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = e;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient monomial; `None` unless `divisor` divides `self`.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial::new(self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    /// Weight under a diagonal action with one integer weight per variable.
    pub fn weight(&self, weights: &[i64]) -> i64 {
        self.exps.iter().zip(weights).map(|(e, w)| *e as i64 * w).sum()
    }

    /// Graded-lex comparison with the first variable largest: higher degree
    /// wins, ties broken lexicographically on the exponent vector.
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }

    /// Graded reverse-lex comparison with the first variable largest.
    /// For equal degrees, `self > other` iff the last nonzero entry of
    /// `exps(self) - exps(other)` is negative.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        for i in (0..self.exps.len()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.degree() == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, v) in self.exps.iter().zip(vars) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degree_is_exponent_sum() {
        assert_eq!(m(&[1, 0, 6, 0]).degree(), 7);
    }

    #[test]
    fn divide_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Some(m(&[1, 0, 0])));
        assert_eq!(a.div(&m(&[0, 2, 0])), None);
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert_eq!(a.gcd(&m(&[1, 3, 0])), m(&[1, 1, 0]));
    }

    #[test]
    fn grevlex_prefers_small_last_exponent() {
        // In k[x,y,z]: x*z < y^2 in grevlex? exps (1,0,1) vs (0,2,0):
        // last nonzero of difference = z-entry 1-0 = +1 -> xz < y^2.
        assert_eq!(m(&[1, 0, 1]).cmp_grevlex(&m(&[0, 2, 0])), Ordering::Less);
        // grlex instead compares lexicographically: xz > y^2.
        assert_eq!(m(&[1, 0, 1]).cmp_grlex(&m(&[0, 2, 0])), Ordering::Greater);
    }
}
