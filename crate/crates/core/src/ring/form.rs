use super::{Monomial, ParamScalar, Rat, RingSpec};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A homogeneous form with `ParamScalar` coefficients.  Terms are keyed by
/// monomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamForm {
    ring: RingSpec,
    degree: u32,
    // BTreeMap over exponent vectors; rendering sorts in grlex order.
    terms: BTreeMap<Vec<u32>, ParamScalar>,
}

impl ParamForm {
    pub fn zero(ring: &RingSpec, degree: u32) -> Self {
        ParamForm { ring: ring.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &RingSpec, m: &Monomial) -> Self {
        Self::term(ring, m, ParamScalar::one())
    }

    pub fn term(ring: &RingSpec, m: &Monomial, c: ParamScalar) -> Self {
        let mut f = ParamForm::zero(ring, m.degree());
        f.add_term(m, c);
        f
    }

    /// Build from a list of terms, which must all have equal degree.
    pub fn from_terms(ring: &RingSpec, terms: Vec<(Monomial, ParamScalar)>) -> Result<Self> {
        let mut degree = None;
        for (m, _) in &terms {
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::Inhomogeneous { expected: d, found: m.degree() })
                }
                _ => {}
            }
        }
        let mut f = ParamForm::zero(ring, degree.unwrap_or(0));
        for (m, c) in terms {
            f.add_term(&m, c);
        }
        Ok(f)
    }

    /// Parse a form from the ASCII grammar.
    pub fn parse(text: &str, ring: &RingSpec) -> crate::Result<ParamForm> {
        super::parse::parse_form(text, ring)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &ParamScalar)> {
        self.terms.iter().map(|(e, c)| (Monomial::new(e.clone()), c))
    }

    pub fn coeff(&self, m: &Monomial) -> ParamScalar {
        self.terms.get(m.exponents()).cloned().unwrap_or_else(ParamScalar::zero)
    }

    /// True when the form is a single monomial with coefficient free of the
    /// parameter.
    pub fn as_monomial(&self) -> Option<(Monomial, Rat)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !c.is_constant() {
            return None;
        }
        Some((Monomial::new(e.clone()), c.constant_coeff()))
    }

    pub fn involves_param(&self) -> bool {
        self.terms.values().any(|c| !c.is_constant())
    }

    fn add_term(&mut self, m: &Monomial, c: ParamScalar) {
        debug_assert_eq!(m.degree(), self.degree);
        debug_assert_eq!(m.nvars(), self.ring.nvars());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.exponents().to_vec()).or_insert_with(ParamScalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(m.exponents());
        }
    }

    pub fn add(&self, other: &ParamForm) -> Result<ParamForm> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::Inhomogeneous { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(&m, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ParamScalar) -> ParamForm {
        let mut out = ParamForm::zero(&self.ring, self.degree);
        for (m, a) in self.terms() {
            out.add_term(&m, a.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> ParamForm {
        let mut out = ParamForm::zero(&self.ring, self.degree + m.degree());
        for (mm, c) in self.terms() {
            out.add_term(&mm.mul(m), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ParamForm) -> ParamForm {
        let mut out = ParamForm::zero(&self.ring, self.degree + other.degree);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(&m1.mul(&m2), c1.mul(c2));
            }
        }
        out
    }

    /// Substitute a rational value for the parameter.
    pub fn eval_param(&self, x: &Rat) -> ParamForm {
        let mut out = ParamForm::zero(&self.ring, self.degree);
        for (m, c) in self.terms() {
            out.add_term(&m, ParamScalar::constant(c.evaluate(x)));
        }
        out
    }

    /// Substitute each variable by a linear form; images are given as rows
    /// of `ParamScalar` coefficients over the variables.  Used by the
    /// one-parameter group actions and coordinate changes.
    pub fn substitute_linear(&self, images: &[Vec<ParamScalar>]) -> ParamForm {
        assert_eq!(images.len(), self.ring.nvars());
        let nv = self.ring.nvars();
        let mut out = ParamForm::zero(&self.ring, self.degree);
        for (m, c) in self.terms() {
            // Expand prod_i image_i^{e_i} term by term.
            let mut acc: Vec<(Vec<u32>, ParamScalar)> =
                vec![(vec![0; nv], c.clone())];
            for (var, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    let mut next: BTreeMap<Vec<u32>, ParamScalar> = BTreeMap::new();
                    for (exps, coef) in &acc {
                        for (j, cj) in images[var].iter().enumerate() {
                            if cj.is_zero() {
                                continue;
                            }
                            let mut ne = exps.clone();
                            ne[j] += 1;
                            let add = coef.mul(cj);
                            let slot = next.entry(ne).or_insert_with(ParamScalar::zero);
                            *slot = slot.add(&add);
                        }
                    }
                    acc = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                }
            }
            for (exps, coef) in acc {
                out.add_term(&Monomial::new(exps), coef);
            }
        }
        out
    }

    /// Render in the canonical text order: grlex-descending monomials, the
    /// parameter powers of each coefficient in ascending order.  The output
    /// re-parses under the form grammar (no parentheses).
    pub fn render(&self) -> String {
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| Monomial::new((*b).clone()).cmp_grlex(&Monomial::new((*a).clone())));
        let mut out = String::new();
        let mut first = true;
        for k in keys {
            let m = Monomial::new(k.clone());
            for (v, r) in self.terms[k].coeffs().iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let mut factors: Vec<String> = Vec::new();
                let mag = r.abs();
                if !mag.is_one() {
                    factors.push(format!("{mag}"));
                }
                match v {
                    0 => {}
                    1 => factors.push(self.ring.param().to_string()),
                    _ => factors.push(format!("{}^{v}", self.ring.param())),
                }
                if m.degree() > 0 {
                    factors.push(m.render(self.ring.vars()));
                }
                if factors.is_empty() {
                    factors.push("1".to_string());
                }
                let body = factors.join("*");
                if first {
                    out.push_str(&format!("{}{body}", if r.is_negative() { "-" } else { "" }));
                    first = false;
                } else {
                    out.push_str(&format!(" {} {body}", if r.is_negative() { "-" } else { "+" }));
                }
            }
        }
        out
    }
}
