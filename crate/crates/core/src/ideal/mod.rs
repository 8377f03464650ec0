//! Degree-slice linear algebra for graded ideals: degree pieces,
//! saturation, Hilbert functions and polynomials, Borel-fixedness,
//! lexicographic ideals, weight-initial subspaces, generic initial ideals
//! and regularity.

mod gin;
mod monomial_ops;
mod piece;

pub use gin::{gin, regularity, GinResult};

#[doc(hidden)]
pub fn random_coordinates_for_test(nv: usize, seed: u64) -> Vec<Vec<crate::ring::ParamScalar>> {
    gin::random_coordinates(nv, seed)
}
pub use piece::DegreePiece;

use crate::linalg::{Echelon, SparseRow};
use crate::macaulay::MacaulayData;
use crate::ring::{fit_int_poly, IntPolynomial, Monomial, ParamForm, ParamScalar, Rat, RingSpec};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A projective point, given by homogeneous rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub Vec<Rat>);

impl Point {
    pub fn normalized(&self) -> Point {
        use num_traits::Zero;
        let Some(lead) = self.0.iter().find(|c| !c.is_zero()) else {
            return self.clone();
        };
        Point(self.0.iter().map(|c| c / lead).collect())
    }
}

/// What a structured constructor recorded about an ideal.
#[derive(Debug, Clone)]
pub enum Provenance {
    /// The ideal is an intersection of the listed parts.
    Intersection(Vec<StructuredPart>),
    /// The ideal is `sub` applied to `base`, for a linear substitution.
    Transformed { images: Vec<Vec<ParamScalar>>, base: Box<GradedIdeal> },
    /// Shape `(linear, f * K)`: a pencil-style curve ideal.
    GShape { linear: ParamForm, factor: ParamForm, cofactor: Box<GradedIdeal> },
    /// Free-form tag from a constructor.
    Tag(String),
}

impl Provenance {
    fn eval_param(&self, x: &Rat) -> Provenance {
        match self {
            Provenance::Intersection(parts) => Provenance::Intersection(
                parts
                    .iter()
                    .map(|p| StructuredPart { ideal: p.ideal.eval_param(x), kind: p.kind.clone() })
                    .collect(),
            ),
            Provenance::Transformed { images, base } => Provenance::Transformed {
                images: images
                    .iter()
                    .map(|row| {
                        row.iter().map(|c| ParamScalar::constant(c.evaluate(x))).collect()
                    })
                    .collect(),
                base: base.clone(),
            },
            Provenance::GShape { linear, factor, cofactor } => Provenance::GShape {
                linear: linear.eval_param(x),
                factor: factor.eval_param(x),
                cofactor: Box::new(cofactor.eval_param(x)),
            },
            Provenance::Tag(t) => Provenance::Tag(t.clone()),
        }
    }
}

/// One part of a structured intersection.
#[derive(Debug, Clone)]
pub struct StructuredPart {
    pub ideal: GradedIdeal,
    pub kind: PartKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartKind {
    /// A purely 1-dimensional (curve) part.
    Cm,
    /// Primary to the given point.
    PointPrimary(Point),
}

/// A graded ideal, given by homogeneous generators.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    ring: RingSpec,
    gens: Vec<ParamForm>,
    provenance: Option<Provenance>,
}

impl GradedIdeal {
    pub fn new(ring: &RingSpec, gens: Vec<ParamForm>) -> Self {
        let gens: Vec<ParamForm> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(!gens.is_empty(), "generator list must be nonempty");
        GradedIdeal { ring: ring.clone(), gens, provenance: None }
    }

    pub fn parse(ring: &RingSpec, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| crate::ring::ParamForm::parse(g, ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedIdeal::new(ring, gens))
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[ParamForm] {
        &self.gens
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// True when every generator is a single monomial with parameter-free
    /// coefficient.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.as_monomial().is_some())
    }

    pub fn involves_param(&self) -> bool {
        self.gens.iter().any(|g| g.involves_param())
    }

    /// Monomial generators, minimalized (divisible ones dropped).
    pub fn monomial_generators(&self) -> Result<Vec<Monomial>> {
        let mut ms = Vec::new();
        for g in &self.gens {
            let Some((m, _)) = g.as_monomial() else {
                return Err(Error::NonMonomial(format!("generator {}", g.render())));
            };
            ms.push(m);
        }
        Ok(monomial_ops::minimalize(ms))
    }

    /// Substitute a rational value for the parameter in every generator,
    /// carrying structured provenance through the evaluation.
    pub fn eval_param(&self, x: &Rat) -> GradedIdeal {
        let gens = self.gens.iter().map(|g| g.eval_param(x)).collect();
        let provenance = self.provenance.as_ref().map(|p| p.eval_param(x));
        GradedIdeal { ring: self.ring.clone(), gens, provenance }
    }

    /// Apply a linear substitution (one image row per variable).  The
    /// returned ideal remembers its base so slice computations can work on
    /// the cheaper untransformed ideal and transform the result.
    pub fn substituted(&self, images: &[Vec<ParamScalar>]) -> GradedIdeal {
        let gens = self.gens.iter().map(|g| g.substitute_linear(images)).collect();
        GradedIdeal {
            ring: self.ring.clone(),
            gens,
            provenance: Some(Provenance::Transformed {
                images: images.to_vec(),
                base: Box::new(self.clone()),
            }),
        }
    }

    /// The plain degree-`n` slice spanned by all `monomial * generator`
    /// products of the right degree.
    pub fn degree_piece(&self, n: u32) -> DegreePiece {
        match &self.provenance {
            Some(Provenance::Transformed { images, base }) => {
                base.degree_piece(n).substituted(images)
            }
            Some(Provenance::Intersection(parts)) if parts.len() > 1 => {
                let pieces: Vec<DegreePiece> =
                    parts.iter().map(|p| p.ideal.degree_piece(n)).collect();
                DegreePiece::intersect_all(&pieces)
            }
            _ => self.degree_piece_from_gens(n),
        }
    }

    fn degree_piece_from_gens(&self, n: u32) -> DegreePiece {
        if self.is_monomial() {
            let gens = self.monomial_generators().unwrap();
            let monos = self
                .ring
                .monomials(n)
                .into_iter()
                .filter(|m| gens.iter().any(|g| g.divides(m)))
                .collect();
            return DegreePiece::from_monomials(&self.ring, n, monos);
        }
        let mut ech = Echelon::new();
        let cols = piece::ColumnIndex::new(&self.ring, n);
        for g in &self.gens {
            if g.degree() > n {
                continue;
            }
            for m in self.ring.monomials(n - g.degree()) {
                ech.insert(cols.row_of_form(&g.mul_monomial(&m)));
            }
        }
        DegreePiece::from_echelon(&self.ring, n, ech)
    }

    /// The degree-`n` slice of the saturation: elements `f` of the ambient
    /// degree-`n` space with `x_i^k f` in the ideal for every variable and
    /// some `k <= cap`, computed by increasing `k` until stable.
    /// Returns the piece and the flag whether stabilization was certified
    /// (false means the slice still grew at `k = cap`).
    pub fn saturated_piece_checked(&self, n: u32, cap: u32) -> (DegreePiece, bool) {
        match &self.provenance {
            Some(Provenance::Transformed { images, base }) => {
                let (p, ok) = base.saturated_piece_checked(n, cap);
                (p.substituted(images), ok)
            }
            Some(Provenance::Intersection(parts)) if parts.len() > 1 => {
                let mut ok = true;
                let pieces: Vec<DegreePiece> = parts
                    .iter()
                    .map(|p| {
                        let (piece, o) = p.ideal.saturated_piece_checked(n, cap);
                        ok &= o;
                        piece
                    })
                    .collect();
                (DegreePiece::intersect_all(&pieces), ok)
            }
            _ => self.saturated_piece_from_gens(n, cap),
        }
    }

    pub fn saturated_piece(&self, n: u32, cap: u32) -> DegreePiece {
        self.saturated_piece_checked(n, cap).0
    }

    fn saturated_piece_from_gens(&self, n: u32, cap: u32) -> (DegreePiece, bool) {
        if self.is_monomial() {
            return self.saturated_piece_monomial(n, cap);
        }
        self.saturated_piece_generic(n, cap)
    }

    // The k-th member of the chain N_k = { f : (irrelevant ideal)^k f
    // inside the ideal } stabilizes certifiably: N_k = N_(k+1) implies
    // N_(k+m) = N_k for all m, because w f in N_(k+1) = N_k for every
    // variable w pushes f from N_(k+2) into N_(k+1).
    //
    // Membership of all shifts at once is solved by stacking exact rows:
    // one concatenated row of unit entries per candidate monomial (its
    // shifts w*m across per-shift blocks), plus the target basis embedded
    // in every block.  A linear relation among these rows restricts, on
    // the candidate part, to an element of N_k; the target rows are
    // independent across blocks, so the candidate parts of the relations
    // form a basis.
    fn saturated_piece_generic(&self, n: u32, cap: u32) -> (DegreePiece, bool) {
        let mut prev = self.degree_piece(n);
        for k in 1..=cap {
            let target = self.degree_piece(n + k);
            let tcols = piece::ColumnIndex::new(&self.ring, n + k);
            let monos = self.ring.monomials(n);
            let shifts = self.ring.monomials(k);
            let stride = tcols.len();
            let mut rows: Vec<SparseRow> = Vec::with_capacity(monos.len() + shifts.len() * target.dim());
            for m in &monos {
                let entries = shifts
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (i * stride + tcols.index_of(&m.mul(w)), ParamScalar::one()))
                    .collect();
                rows.push(SparseRow::new(entries));
            }
            for (i, _) in shifts.iter().enumerate() {
                for r in target.rows() {
                    rows.push(r.map_columns(|j| i * stride + j));
                }
            }
            let kernel = Echelon::kernel_of_rows(&rows, shifts.len() * stride);
            let mut ech = Echelon::new();
            for kv in kernel {
                let entries = kv
                    .entries()
                    .iter()
                    .filter(|(j, _)| *j < monos.len())
                    .map(|(j, c)| (*j, c.clone()))
                    .collect();
                ech.insert(SparseRow::new(entries));
            }
            let cur = DegreePiece::from_echelon(&self.ring, n, ech);
            if cur.dim() == prev.dim() {
                return (cur, true);
            }
            prev = cur;
        }
        (prev, false)
    }

    /// Test hook: force the kernel-based saturation path even for inputs
    /// that would take the monomial fast path.
    #[doc(hidden)]
    pub fn saturated_piece_from_gens_generic_for_test(&self, n: u32, cap: u32) -> DegreePiece {
        let copy = GradedIdeal::new(
            &self.ring,
            self.gens
                .iter()
                .map(|g| g.scale(&ParamScalar::one()))
                .collect(),
        );
        // Pretend the ideal is not monomial by going through the generic
        // kernel route directly.
        copy.saturated_piece_generic(n, cap).0
    }

    // Monomial saturation is exact: the saturation is the intersection
    // over the variables of the colon ideals (I : x_i^inf), and each colon
    // just strips the variable from every generator.
    fn saturated_piece_monomial(&self, n: u32, _cap: u32) -> (DegreePiece, bool) {
        let sat = self.saturation_monomial().unwrap();
        let monos = self
            .ring
            .monomials(n)
            .into_iter()
            .filter(|m| sat.iter().any(|g| g.divides(m)))
            .collect();
        (DegreePiece::from_monomials(&self.ring, n, monos), true)
    }

    /// Generators of the saturation of a monomial ideal.
    pub fn saturation_monomial(&self) -> Result<Vec<Monomial>> {
        let gens = self.monomial_generators()?;
        let nv = self.ring.nvars();
        let mut acc: Option<Vec<Monomial>> = None;
        for i in 0..nv {
            let stripped: Vec<Monomial> = gens
                .iter()
                .map(|g| {
                    let mut e = g.exponents().to_vec();
                    e[i] = 0;
                    Monomial::new(e)
                })
                .collect();
            let stripped = monomial_ops::minimalize(stripped);
            acc = Some(match acc {
                None => stripped,
                Some(prev) => monomial_ops::intersect_monomial(&prev, &stripped),
            });
        }
        Ok(acc.unwrap())
    }
}

/// Which way a one-parameter limit is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Direction {
    /// Keep the minimal-weight part (limit at parameter 0).
    ToZero,
    /// Keep the maximal-weight part (limit at infinity).
    ToInfinity,
}

/// The span of weight-initial forms of a parameter-free slice: the flat
/// limit of the slice under the diagonal action with the given weights.
/// The dimension is preserved.
pub fn initial_subspace(piece: &DegreePiece, weights: &[i64], direction: Direction) -> DegreePiece {
    let cols = piece.columns();
    let n = cols.len();
    let weight_of = |j: usize| cols.monomial(j).weight(weights);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| match direction {
        Direction::ToZero => weight_of(j),
        Direction::ToInfinity => -weight_of(j),
    });
    let mut perm = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let rows: Vec<SparseRow> =
        piece.rows().iter().map(|r| r.map_columns(|j| perm[j])).collect();
    let ech = Echelon::from_rows(rows);
    // Each fully reduced row keeps only the terms sharing its pivot's
    // weight; pivots are private to their rows, so the initial forms stay
    // independent.
    let mut initial_rows = Vec::with_capacity(ech.dim());
    for r in ech.rows() {
        let pw = weight_of(order[r.pivot().unwrap()]);
        let entries = r
            .entries()
            .iter()
            .filter(|(j, _)| weight_of(order[*j]) == pw)
            .map(|(j, c)| (order[*j], c.clone()))
            .collect();
        initial_rows.push(SparseRow::new(entries));
    }
    DegreePiece::from_echelon(piece.ring(), piece.degree(), Echelon::from_rows(initial_rows))
}

/// Hilbert function table over a contiguous degree range, computed from
/// saturated slices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFTable {
    values: BTreeMap<u32, usize>,
}

impl HFTable {
    pub fn get(&self, n: u32) -> Option<usize> {
        self.values.get(&n).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.values.iter().map(|(n, v)| (*n, *v))
    }

    /// Degreewise domination: `self(n) >= other(n)` on the common range.
    pub fn dominates(&self, other: &HFTable) -> bool {
        self.values
            .iter()
            .all(|(n, v)| other.values.get(n).is_none_or(|w| v >= w))
    }
}

/// Hilbert function of the saturation of `ideal` over `range`, with
/// saturation exponent cutoff `cap` per degree.
pub fn hilbert_function(
    ideal: &GradedIdeal,
    range: std::ops::RangeInclusive<u32>,
    cap: u32,
) -> HFTable {
    let mut values = BTreeMap::new();
    for n in range {
        values.insert(n, ideal.saturated_piece(n, cap).dim());
    }
    HFTable { values }
}

/// Hilbert polynomial of the ideal, sampled at `cutoff .. cutoff+deg+2`
/// with one extra verification point.  `cutoff` must be at least the
/// regularity for the fit to verify.
pub fn hilbert_polynomial(ideal: &GradedIdeal, cutoff: u32) -> Result<IntPolynomial> {
    let deg_bound = ideal.ring().nvars() as u32 - 1;
    let cap = cutoff + 4;
    let samples: Vec<(i64, Rat)> = (cutoff..=cutoff + deg_bound + 1)
        .map(|n| {
            (n as i64, crate::ring::rat(ideal.saturated_piece(n, cap).dim() as i64))
        })
        .collect();
    fit_int_poly(&samples, deg_bound).map_err(|e| match e {
        Error::FitMismatch { n, expected, got } => Error::CutoffTooSmall(format!(
            "hilbert polynomial fit failed at n={n}: expected {expected}, got {got}; cutoff {cutoff} too small"
        )),
        other => other,
    })
}

/// Hilbert polynomial with the cutoff taken from Macaulay data (curve
/// ideals are `b`-regular).
pub fn hilbert_polynomial_curve(ideal: &GradedIdeal, m: &MacaulayData) -> Result<IntPolynomial> {
    hilbert_polynomial(ideal, m.b)
}

/// Borel-fixedness of a monomial ideal, by the characteristic-zero
/// exchange test: for every minimal generator `m`, every variable dividing
/// `m`, and every earlier variable, the exchanged monomial lies in the
/// ideal.
pub fn is_borel_fixed(ideal: &GradedIdeal) -> Result<bool> {
    let gens = ideal.monomial_generators()?;
    let nv = ideal.ring().nvars();
    let in_ideal = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    for m in &gens {
        for i in 0..nv {
            if m.exponents()[i] == 0 {
                continue;
            }
            for j in 0..i {
                let mut e = m.exponents().to_vec();
                e[i] -= 1;
                e[j] += 1;
                if !in_ideal(&Monomial::new(e)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The lexicographic ideal `(x, y^a, y^(a-1) z^(b-a+1))` in the space ring.
pub fn lex_ideal(m: &MacaulayData) -> GradedIdeal {
    let ring = RingSpec::p3();
    let gens = vec![
        ParamForm::monomial(&ring, &Monomial::var_pow(4, 0, 1)),
        ParamForm::monomial(&ring, &Monomial::var_pow(4, 1, m.a)),
        ParamForm::monomial(&ring, &Monomial::new(vec![0, m.a - 1, m.c, 0])),
    ];
    GradedIdeal::new(&ring, gens).with_provenance(Provenance::Tag(format!("lex({},{})", m.a, m.b)))
}

/// The lexicographic point ideal `(x, y^d)` in the given 3-variable ring.
pub fn lex_point_ideal(ring: &RingSpec, d: u32) -> GradedIdeal {
    assert_eq!(ring.nvars(), 3);
    let gens = vec![
        ParamForm::monomial(ring, &Monomial::var_pow(3, 0, 1)),
        ParamForm::monomial(ring, &Monomial::var_pow(3, 1, d)),
    ];
    GradedIdeal::new(ring, gens).with_provenance(Provenance::Tag(format!("lex-point({d})")))
}

pub use monomial_ops::{intersect_monomial, minimalize as minimalize_monomials, quotient_monomial};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::ab_to_dg;
    use crate::ring::rat;

    fn p3() -> RingSpec {
        RingSpec::p3()
    }

    #[test]
    fn degree_piece_of_principal_ideal() {
        let i = GradedIdeal::parse(&p3(), &["x"]).unwrap();
        assert_eq!(i.degree_piece(2).dim(), 4);
    }

    #[test]
    fn degree_piece_of_lex_4_5() {
        // (a,b) = (4,5): z^(b-a+1) = z^2.
        let i = GradedIdeal::parse(&p3(), &["x", "y^4", "y^3*z^2"]).unwrap();
        assert_eq!(i.degree_piece(4).dim(), 21); // binom(6,3) + 1
    }

    #[test]
    fn degree_piece_with_parameter() {
        // Span count: x*S_4 (35) + {y^5, y^4 z, y^4 t} + the parameter row.
        let i = GradedIdeal::parse(&p3(), &["x", "y^4", "A*y^3*z^2 + y^3*z*t"]).unwrap();
        assert_eq!(i.degree_piece(5).dim(), 39);
        // Cross-check: rank at specialized parameter values agrees.
        for v in [1i64, 2, 7] {
            assert_eq!(i.eval_param(&rat(v)).degree_piece(5).dim(), 39);
        }
    }

    #[test]
    fn saturated_piece_examples() {
        let i = GradedIdeal::parse(&p3(), &["x^2", "x*y", "x*z", "x*t"]).unwrap();
        let s = i.saturated_piece(1, 4);
        assert_eq!(s.dim(), 1); // saturation is (x)
        // Already saturated: piece = degree piece.
        let j = GradedIdeal::parse(&p3(), &["x", "y"]).unwrap();
        assert!(j.saturated_piece(3, 4).same_space(&j.degree_piece(3)));
        // (y, xz, xt) = (x,y) cap (y,z,t): the point component is real.
        let k = GradedIdeal::parse(&p3(), &["y", "x*z", "x*t"]).unwrap();
        let s1 = k.saturated_piece(1, 4);
        assert_eq!(s1.dim(), 1);
        let cols = piece::ColumnIndex::new(&p3(), 1);
        let yrow = SparseRow::unit(cols.index_of(&Monomial::var_pow(4, 1, 1)));
        assert!(s1.contains_row(&yrow));
    }

    #[test]
    fn saturated_piece_monomial_matches_generic_path() {
        // The monomial fast path and the kernel-based generic path must
        // agree; strip provenance and monomial-ness by re-parsing scaled
        // generators (2*x is still monomial, so force the generic route by
        // adding a two-term generator equal to x + x).
        let m = GradedIdeal::parse(&p3(), &["y", "x*z", "x*t"]).unwrap();
        for n in 0..=4u32 {
            let fast = m.saturated_piece(n, 5);
            let slow = m.saturated_piece_from_gens_generic_for_test(n, 5);
            assert!(fast.same_space(&slow), "degree {n}");
        }
    }

    #[test]
    fn hilbert_function_of_lex_5_8() {
        let m = ab_to_dg(5, 8).unwrap();
        let lex = lex_ideal(&m);
        let hf = hilbert_function(&lex, 5..=10, 8);
        // h(5) = binom(7,3) + 1 = 36.
        assert_eq!(hf.get(5), Some(36));
        let q = crate::macaulay::q_polynomial(&m);
        for n in 8..=10 {
            assert_eq!(rat(hf.get(n).unwrap() as i64), q.eval(n as i64), "n={n}");
        }
        // The lex ideal has maximal Hilbert function: it beats Q before the
        // regularity (Q(5) = 34 but h(5) = 36).
        assert!(rat(hf.get(5).unwrap() as i64) > q.eval(5));
    }

    #[test]
    fn hilbert_polynomial_of_line() {
        let i = GradedIdeal::parse(&p3(), &["x", "y"]).unwrap();
        let q = hilbert_polynomial(&i, 1).unwrap();
        // Complement P(n) = n + 1.
        let amb = IntPolynomial::binomial_term(3, 3);
        let p = amb.sub(&q);
        assert_eq!(p, IntPolynomial::from_power_basis(&[rat(1), rat(1)]));
    }

    #[test]
    fn borel_fixed_examples() {
        let t = GradedIdeal::parse(&p3(), &["x^2", "x*y", "x*z", "y^3"]).unwrap();
        assert!(is_borel_fixed(&t).unwrap());
        let m = ab_to_dg(5, 8).unwrap();
        assert!(is_borel_fixed(&lex_ideal(&m)).unwrap());
        let f = GradedIdeal::parse(&RingSpec::p2(), &["y^2"]).unwrap();
        assert!(!is_borel_fixed(&f).unwrap());
        let nm = GradedIdeal::parse(&p3(), &["x + y"]).unwrap();
        assert!(is_borel_fixed(&nm).is_err());
    }

    #[test]
    fn lex_ideal_shapes() {
        let m = ab_to_dg(4, 4).unwrap();
        let gens: Vec<String> = lex_ideal(&m).generators().iter().map(|g| g.render()).collect();
        assert_eq!(gens, vec!["x", "y^4", "y^3*z"]);
        let m = ab_to_dg(5, 8).unwrap();
        let gens: Vec<String> = lex_ideal(&m).generators().iter().map(|g| g.render()).collect();
        assert_eq!(gens, vec!["x", "y^5", "y^4*z^4"]);
        let p = lex_point_ideal(&RingSpec::p2(), 5);
        let gens: Vec<String> = p.generators().iter().map(|g| g.render()).collect();
        assert_eq!(gens, vec!["x", "y^5"]);
    }

    #[test]
    fn slice_growth_invariant() {
        // S_1 * piece(n) inside piece(n+1).
        let i = GradedIdeal::parse(&p3(), &["x*y + A*z^2", "y^3"]).unwrap();
        for n in 2..=5u32 {
            let pn = i.degree_piece(n);
            let pn1 = i.degree_piece(n + 1);
            assert!(pn.multiplied_by_variables().iter().all(|r| pn1.contains_row(r)));
        }
    }
}
