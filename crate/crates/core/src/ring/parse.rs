use super::{Monomial, ParamForm, ParamScalar, Rat, RingSpec};
use crate::{Error, Result};
use num_bigint::BigInt;

/// Parse a homogeneous form.
///
/// Grammar (ASCII, whitespace insignificant, no parentheses):
///
/// ```text
/// form  := term (('+'|'-') term)*
/// term  := coeff? ('*'? atom)*
/// atom  := var ('^' nat)?
/// coeff := int ('/' nat)?
/// var   := ring variable or the parameter name
/// ```
pub fn parse_form(text: &str, ring: &RingSpec) -> Result<ParamForm> {
    Parser { ring, bytes: text.as_bytes(), pos: 0 }.form()
}

struct Parser<'a> {
    ring: &'a RingSpec,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn form(&mut self) -> Result<ParamForm> {
        let mut terms: Vec<(Monomial, ParamScalar)> = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1i64
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (m, c) = self.term(sign)?;
            terms.push((m, c));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => return Err(self.err(format!("expected '+' or '-', found '{}'", c as char))),
            }
        }
        // Homogeneity check with a position-free error.
        let mut degree: Option<u32> = None;
        for (m, _) in &terms {
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::Inhomogeneous { expected: d, found: m.degree() })
                }
                _ => {}
            }
        }
        ParamForm::from_terms(self.ring, terms)
    }

    fn term(&mut self, sign: i64) -> Result<(Monomial, ParamScalar)> {
        let mut coeff = Rat::from_integer(sign.into());
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut param_pow = 0u32;
        let mut saw_anything = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff *= self.rational()?;
            saw_anything = true;
        }
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
                _ => break,
            }
            let name = self.ident()?;
            let pow = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.natural()?
            } else {
                1
            };
            if name == self.ring.param() {
                param_pow += pow;
            } else if let Some(i) = self.ring.var_index(&name) {
                exps[i] += pow;
            } else {
                return Err(Error::UnknownVariable { name });
            }
            saw_anything = true;
        }
        if !saw_anything {
            return Err(self.err("expected a term"));
        }
        let mut coeffs = vec![Rat::from_integer(0.into()); param_pow as usize + 1];
        coeffs[param_pow as usize] = coeff;
        Ok((Monomial::new(exps), ParamScalar::from_coeffs(coeffs)))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().to_string())
    }

    fn natural(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn rational(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let numer: BigInt = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.natural()?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(numer, BigInt::from(d)))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn two_term_form_with_parameter() {
        let r = RingSpec::p3();
        let f = parse_form("x*t^6 + A*y^5*z^2", &r).unwrap();
        assert_eq!(f.degree(), 7);
        assert_eq!(f.num_terms(), 2);
        let m = Monomial::new(vec![0, 5, 2, 0]);
        assert_eq!(f.coeff(&m), ParamScalar::param());
        // The parameter carries no degree, so mixing monomial degrees under
        // it is rejected.
        assert!(matches!(
            parse_form("x*t^6 + A*y^3*z^2", &r),
            Err(Error::Inhomogeneous { .. })
        ));
    }

    #[test]
    fn single_monomial() {
        let r = RingSpec::p3();
        let f = parse_form("x^2", &r).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.num_terms(), 1);
    }

    #[test]
    fn no_parentheses_in_grammar() {
        let r = RingSpec::p3();
        assert!(matches!(parse_form("y^3*z*(z+t)", &r), Err(Error::Syntax { .. })));
        let f = parse_form("y^3*z^2 + y^3*z*t", &r).unwrap();
        assert_eq!(f.degree(), 5);
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = RingSpec::p3();
        assert!(matches!(parse_form("x + y^2", &r), Err(Error::Inhomogeneous { .. })));
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = RingSpec::p3();
        assert!(matches!(parse_form("x*w", &r), Err(Error::UnknownVariable { .. })));
    }

    #[test]
    fn rational_coefficients_and_implicit_star() {
        let r = RingSpec::p3();
        let f = parse_form("3/2 x y - t^2", &r).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![1, 1, 0, 0])).constant_coeff(), crate::ring::rat_frac(3, 2));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 0, 0, 2])).constant_coeff(), rat(-1));
    }

    #[test]
    fn like_terms_collect_and_cancel() {
        let r = RingSpec::p3();
        let f = parse_form("x*y - x*y + z^2", &r).unwrap();
        assert_eq!(f.num_terms(), 1);
        let g = parse_form("A*x + x", &r).unwrap();
        assert_eq!(g.num_terms(), 1);
        assert_eq!(g.coeff(&Monomial::new(vec![1, 0, 0, 0])).coeffs().len(), 2);
    }

    #[test]
    fn parse_render_parse_is_fixed_point() {
        let r = RingSpec::p3();
        for text in [
            "x*t^6 + A*y^5*z^2",
            "x^2",
            "y^3*z^2 + y^3*z*t",
            "3/2*x*y - t^2 + A^2*z*y",
            "-x^2 + 2*A*x*y",
        ] {
            let f = parse_form(text, &r).unwrap();
            let rendered = f.render();
            let g = parse_form(&rendered, &r).unwrap();
            assert_eq!(f, g, "reparse of `{rendered}`");
            assert_eq!(g.render(), rendered, "canonical form of `{rendered}`");
        }
    }
}
