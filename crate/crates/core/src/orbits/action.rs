use crate::ideal::{DegreePiece, GradedIdeal};
use crate::ring::{ParamForm, ParamScalar, RingSpec};
use crate::{Error, Result};

/// A one-parameter group action on the ambient ring: either a unipotent
/// substitution with parameter-linear images or a diagonal action with one
/// integer weight per variable.
#[derive(Debug, Clone)]
pub enum OneParamAction {
    /// Variable images, linear in the variables with `ParamScalar`
    /// coefficients; the matrix of images must be invertible over the
    /// parameter field.
    Substitution { name: String, images: Vec<Vec<ParamScalar>> },
    /// `x_i -> lambda^(w_i) x_i`.
    Diagonal { weights: Vec<i64> },
}

impl OneParamAction {
    /// Elementary unipotent: `target -> alpha * source + target`.
    pub fn shear(name: &str, ring: &RingSpec, target: usize, source: usize) -> Self {
        let nv = ring.nvars();
        let mut images: Vec<Vec<ParamScalar>> = (0..nv)
            .map(|i| {
                (0..nv)
                    .map(|j| if i == j { ParamScalar::one() } else { ParamScalar::zero() })
                    .collect()
            })
            .collect();
        images[target][source] = ParamScalar::param();
        OneParamAction::Substitution { name: name.to_string(), images }
    }

    /// psi^1: `t -> alpha z + t` on the 4-variable ring.
    pub fn psi1(ring: &RingSpec) -> Self {
        assert_eq!(ring.nvars(), 4);
        Self::shear("psi1", ring, 3, 2)
    }

    /// psi^2: `z -> alpha y + z` on the 4-variable ring.
    pub fn psi2(ring: &RingSpec) -> Self {
        assert_eq!(ring.nvars(), 4);
        Self::shear("psi2", ring, 2, 1)
    }

    /// psi^3: `y -> alpha x + y` on the 4-variable ring.
    pub fn psi3(ring: &RingSpec) -> Self {
        assert_eq!(ring.nvars(), 4);
        Self::shear("psi3", ring, 1, 0)
    }

    /// The plane unipotents: last variable shifted by the middle one, and
    /// middle shifted by the first.
    pub fn plane_psi1(ring: &RingSpec) -> Self {
        assert_eq!(ring.nvars(), 3);
        Self::shear("plane-psi1", ring, 2, 1)
    }

    pub fn plane_psi2(ring: &RingSpec) -> Self {
        assert_eq!(ring.nvars(), 3);
        Self::shear("plane-psi2", ring, 1, 0)
    }

    /// The six elementary unipotents, stored exactly as the printed
    /// matrices and applied on the right to the variable row:
    /// delta^1: t -> ax+t, delta^2: t -> ay+t, delta^3: z -> ax+z,
    /// delta^4: y -> ax+y, delta^5: z -> ay+z, delta^6: t -> az+t.
    pub fn delta(ring: &RingSpec, i: usize) -> Self {
        assert_eq!(ring.nvars(), 4);
        let (target, source) = match i {
            1 => (3, 0),
            2 => (3, 1),
            3 => (2, 0),
            4 => (1, 0),
            5 => (2, 1),
            6 => (3, 2),
            _ => panic!("delta index must be 1..=6"),
        };
        Self::shear(&format!("delta{i}"), ring, target, source)
    }

    /// sigma: weight 1 on the last variable, 0 elsewhere.
    pub fn sigma(ring: &RingSpec) -> Self {
        let mut weights = vec![0i64; ring.nvars()];
        weights[ring.nvars() - 1] = 1;
        OneParamAction::Diagonal { weights }
    }

    pub fn diagonal(weights: Vec<i64>) -> Self {
        OneParamAction::Diagonal { weights }
    }

    pub fn weights(&self) -> Option<&[i64]> {
        match self {
            OneParamAction::Diagonal { weights } => Some(weights),
            _ => None,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, OneParamAction::Diagonal { .. })
    }

    /// Apply to a form, introducing the parameter.  Fails when the input
    /// already involves the parameter (substitution actions only).
    pub fn apply_form(&self, f: &ParamForm) -> Result<ParamForm> {
        match self {
            OneParamAction::Substitution { images, .. } => {
                if f.involves_param() {
                    return Err(Error::ParameterClash(f.ring().param().to_string()));
                }
                Ok(f.substitute_linear(images))
            }
            OneParamAction::Diagonal { weights } => {
                // lambda^w scaling, with the parameter playing lambda.  A
                // negative minimum weight is factored out (the projective
                // representative), otherwise the scaling is literal.
                if f.involves_param() {
                    return Err(Error::ParameterClash(f.ring().param().to_string()));
                }
                let min = f.terms().map(|(m, _)| m.weight(weights)).min().unwrap_or(0);
                let shift = min.min(0);
                let terms = f
                    .terms()
                    .map(|(m, c)| {
                        let w = (m.weight(weights) - shift) as usize;
                        let mut coeffs = vec![crate::ring::rat(0); w + 1];
                        coeffs[w] = c.constant_coeff();
                        (m, ParamScalar::from_coeffs(coeffs))
                    })
                    .collect();
                ParamForm::from_terms(f.ring(), terms)
            }
        }
    }

    pub fn apply_ideal(&self, ideal: &GradedIdeal) -> Result<GradedIdeal> {
        match self {
            OneParamAction::Substitution { images, .. } => {
                if ideal.involves_param() {
                    return Err(Error::ParameterClash(ideal.ring().param().to_string()));
                }
                Ok(ideal.substituted(images))
            }
            OneParamAction::Diagonal { .. } => {
                let gens = ideal
                    .generators()
                    .iter()
                    .map(|g| self.apply_form(g))
                    .collect::<Result<Vec<_>>>()?;
                Ok(GradedIdeal::new(ideal.ring(), gens))
            }
        }
    }

    pub fn apply_piece(&self, piece: &DegreePiece) -> Result<DegreePiece> {
        match self {
            OneParamAction::Substitution { images, .. } => Ok(piece.substituted(images)),
            OneParamAction::Diagonal { weights } => {
                let cols = piece.columns();
                let rows = piece
                    .rows()
                    .iter()
                    .map(|r| {
                        // Scale each entry by A^(weight - rowmin); the row
                        // is a projective representative so the common
                        // power drops out.
                        let min = r
                            .columns()
                            .map(|j| cols.monomial(j).weight(weights))
                            .min()
                            .unwrap_or(0);
                        crate::linalg::SparseRow::new(
                            r.entries()
                                .iter()
                                .map(|(j, c)| {
                                    let w = (cols.monomial(*j).weight(weights) - min) as usize;
                                    let mut shift = vec![crate::ring::rat(0); w + 1];
                                    shift[w] = crate::ring::rat(1);
                                    (*j, c.mul(&ParamScalar::from_coeffs(shift)))
                                })
                                .collect(),
                        )
                    })
                    .collect();
                Ok(DegreePiece::from_echelon(
                    piece.ring(),
                    piece.degree(),
                    crate::linalg::Echelon::from_rows(rows),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, RingSpec};

    #[test]
    fn psi2_on_y2z() {
        let r = RingSpec::p3();
        let f = ParamForm::parse("y^2*z", &r).unwrap();
        let g = OneParamAction::psi2(&r).apply_form(&f).unwrap();
        assert_eq!(g, ParamForm::parse("A*y^3 + y^2*z", &r).unwrap());
    }

    #[test]
    fn sigma_scales_by_t_weight() {
        let r = RingSpec::p3();
        let f = ParamForm::parse("x*t^2", &r).unwrap();
        let g = OneParamAction::sigma(&r).apply_form(&f).unwrap();
        assert_eq!(g, ParamForm::parse("A^2*x*t^2", &r).unwrap());
        let f2 = ParamForm::parse("x*t^2 + z^3", &r).unwrap();
        let g2 = OneParamAction::sigma(&r).apply_form(&f2).unwrap();
        assert_eq!(g2, ParamForm::parse("A^2*x*t^2 + z^3", &r).unwrap());
    }

    #[test]
    fn delta_matrices_verbatim() {
        // The six matrices, applied on the right to the variable row
        // (x, y, z, t), move exactly one variable by alpha times an
        // earlier one.
        let r = RingSpec::p3();
        let expect = [
            (1, "A*x + t", 3),
            (2, "A*y + t", 3),
            (3, "A*x + z", 2),
            (4, "A*x + y", 1),
            (5, "A*y + z", 2),
            (6, "A*z + t", 3),
        ];
        for (i, image, var) in expect {
            let a = OneParamAction::delta(&r, i);
            let v = ParamForm::monomial(&r, &Monomial::var_pow(4, var, 1));
            assert_eq!(a.apply_form(&v).unwrap(), ParamForm::parse(image, &r).unwrap(), "delta{i}");
            // All other variables stay fixed.
            for other in 0..4 {
                if other != var {
                    let w = ParamForm::monomial(&r, &Monomial::var_pow(4, other, 1));
                    assert_eq!(a.apply_form(&w).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn parameter_clash_detected() {
        let r = RingSpec::p3();
        let f = ParamForm::parse("A*x + y", &r).unwrap();
        assert!(matches!(
            OneParamAction::psi2(&r).apply_form(&f),
            Err(Error::ParameterClash(_))
        ));
    }
}
