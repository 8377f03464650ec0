//! Primary decomposition of monomial ideals, CM/punctual splitting,
//! Hilbert–Chow cycles, and the fiber predicates of the tautological and
//! maximal-regularity morphisms.

use crate::ideal::{
    hilbert_polynomial, intersect_monomial, lex_ideal, minimalize_monomials, quotient_monomial,
    GradedIdeal, PartKind, Point, Provenance, StructuredPart,
};
use crate::macaulay::MacaulayData;
use crate::ring::{rat, Monomial, ParamForm, ParamScalar, Rat, RingSpec};
use crate::{Error, Result};
use num_traits::Zero;

/// One primary component of a monomial ideal.
#[derive(Debug, Clone)]
pub struct PrimaryComponent {
    /// Generators of the component.
    pub gens: Vec<Monomial>,
    /// Indices of the variables generating the associated prime.
    pub prime_vars: Vec<usize>,
    /// Projective dimension of the component: nvars - #prime_vars - 1.
    pub dimension: i64,
}

impl PrimaryComponent {
    pub fn ideal(&self, ring: &RingSpec) -> GradedIdeal {
        GradedIdeal::new(ring, self.gens.iter().map(|m| ParamForm::monomial(ring, m)).collect())
    }
}

/// Irredundant primary decomposition of a monomial ideal, verified by
/// re-intersection.
pub fn monomial_primary_split(ideal: &GradedIdeal) -> Result<Vec<PrimaryComponent>> {
    let gens = ideal.monomial_generators()?;
    let nv = ideal.ring().nvars();
    // Step 1: irreducible components, by splitting mixed generators.
    let mut stack = vec![gens.clone()];
    let mut irreducible: Vec<Vec<Monomial>> = Vec::new();
    while let Some(current) = stack.pop() {
        match current.iter().position(|m| m.exponents().iter().filter(|&&e| e > 0).count() > 1) {
            None => irreducible.push(current),
            Some(idx) => {
                let m = &current[idx];
                let i = m.exponents().iter().position(|&e| e > 0).unwrap();
                let power = Monomial::var_pow(nv, i, m.exponents()[i]);
                let rest = m.div(&power).unwrap();
                for half in [power, rest] {
                    let mut next = current.clone();
                    next[idx] = half;
                    stack.push(minimalize_monomials(next));
                }
            }
        }
    }
    // Step 2: group by associated prime (the support of the pure powers).
    let mut by_prime: std::collections::BTreeMap<Vec<usize>, Vec<Monomial>> =
        std::collections::BTreeMap::new();
    for comp in irreducible {
        let vars: Vec<usize> = comp.iter().map(|m| m.exponents().iter().position(|&e| e > 0).unwrap()).collect();
        let mut key = vars.clone();
        key.sort_unstable();
        key.dedup();
        match by_prime.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(comp);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let merged = intersect_monomial(o.get(), &comp);
                *o.get_mut() = merged;
            }
        }
    }
    // Step 3: drop redundant components.
    let keys: Vec<Vec<usize>> = by_prime.keys().cloned().collect();
    let mut keep: Vec<PrimaryComponent> = Vec::new();
    for key in &keys {
        let others: Vec<&Vec<Monomial>> =
            keys.iter().filter(|k| *k != key).map(|k| &by_prime[k]).collect();
        if others.is_empty() {
            keep.push(component(by_prime[key].clone(), key, nv));
            continue;
        }
        let mut inter: Option<Vec<Monomial>> = None;
        for o in others {
            inter = Some(match inter {
                None => o.clone(),
                Some(acc) => intersect_monomial(&acc, o),
            });
        }
        let inter = inter.unwrap();
        let this = &by_prime[key];
        let contains = inter.iter().all(|m| this.iter().any(|g| g.divides(m)));
        if !contains {
            keep.push(component(this.clone(), key, nv));
        }
    }
    // Verification: the components re-intersect to the input.
    let mut re: Option<Vec<Monomial>> = None;
    for c in &keep {
        re = Some(match re {
            None => c.gens.clone(),
            Some(acc) => intersect_monomial(&acc, &c.gens),
        });
    }
    let re = re.unwrap_or_default();
    let orig = minimalize_monomials(gens);
    let same = re.len() == orig.len() && re.iter().all(|m| orig.contains(m));
    if !same {
        return Err(Error::Unsupported(
            "primary decomposition failed re-intersection verification".into(),
        ));
    }
    Ok(keep)
}

fn component(gens: Vec<Monomial>, prime: &[usize], nv: usize) -> PrimaryComponent {
    PrimaryComponent {
        gens,
        prime_vars: prime.to_vec(),
        dimension: nv as i64 - prime.len() as i64 - 1,
    }
}

/// The coordinate point cut out by a monomial point prime.
fn coordinate_point(prime_vars: &[usize], nv: usize) -> Point {
    let free = (0..nv).find(|i| !prime_vars.contains(i)).expect("point prime");
    let mut coords = vec![rat(0); nv];
    coords[free] = rat(1);
    Point(coords)
}

/// The CM part and the punctual components of an ideal.
#[derive(Debug)]
pub struct SplitIdeal {
    pub cm_part: GradedIdeal,
    /// (supporting point, primary part, length of cm/(cm meet part)).
    pub punctual: Vec<(Point, GradedIdeal, usize)>,
}

/// A weighted 0-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCycle {
    pub points: Vec<(Point, usize)>,
}

impl PointCycle {
    fn normalized(mut self) -> Self {
        for (p, _) in &mut self.points {
            *p = p.normalized();
        }
        self.points.sort_by(|(p, m), (q, n)| {
            format!("{:?}", p.0).cmp(&format!("{:?}", q.0)).then(m.cmp(n))
        });
        self
    }
}

/// A weighted 1-cycle: reduced line components with multiplicities.  The
/// primes are stored as canonical generator strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCycle {
    pub components: Vec<(Vec<String>, u64)>,
}

// Internal view of a primary piece of the input.
enum Piece {
    Monomial(PrimaryComponent),
    Structured(StructuredPart),
}

fn componentize(ideal: &GradedIdeal, only_isolated: bool) -> Result<Vec<Piece>> {
    match ideal.provenance() {
        Some(Provenance::Intersection(parts)) => {
            let mut out = Vec::new();
            for part in parts {
                match part.kind {
                    PartKind::PointPrimary(_) => out.push(Piece::Structured(part.clone())),
                    PartKind::Cm => {
                        if part.ideal.is_monomial() {
                            for c in split_filtered(&part.ideal, only_isolated)? {
                                out.push(Piece::Monomial(c));
                            }
                        } else {
                            out.push(Piece::Structured(part.clone()));
                        }
                    }
                }
            }
            Ok(out)
        }
        Some(Provenance::Transformed { images, base }) => {
            if images.iter().flatten().any(|c| !c.is_constant()) {
                return Err(Error::Unsupported(
                    "cannot split a family with moving coordinates".into(),
                ));
            }
            let rows: Vec<Vec<Rat>> = images
                .iter()
                .map(|r| r.iter().map(|c| c.constant_coeff()).collect())
                .collect();
            let parts = componentize(base, only_isolated)?;
            parts
                .into_iter()
                .map(|p| transform_piece(p, images, &rows, base.ring()))
                .collect()
        }
        _ if ideal.is_monomial() => {
            Ok(split_filtered(ideal, only_isolated)?.into_iter().map(Piece::Monomial).collect())
        }
        _ => Err(Error::Unsupported(
            "splitting needs a monomial ideal or constructor-built parts".into(),
        )),
    }
}

// Primary components, optionally dropping embedded ones (those whose
// prime strictly contains another component prime).
fn split_filtered(ideal: &GradedIdeal, only_isolated: bool) -> Result<Vec<PrimaryComponent>> {
    let comps = monomial_primary_split(ideal)?;
    if !only_isolated {
        return Ok(comps);
    }
    let primes: Vec<Vec<usize>> = comps.iter().map(|c| c.prime_vars.clone()).collect();
    Ok(comps
        .into_iter()
        .filter(|c| {
            !primes.iter().any(|p| {
                p.len() < c.prime_vars.len() && p.iter().all(|v| c.prime_vars.contains(v))
            })
        })
        .collect())
}

fn transform_piece(
    piece: Piece,
    images: &[Vec<ParamScalar>],
    rows: &[Vec<Rat>],
    ring: &RingSpec,
) -> Result<Piece> {
    let move_point = |p: &Point| -> Result<Point> {
        // Substitution f -> f(M q) moves the vanishing locus by M^{-1}.
        let minv = invert(rows).ok_or_else(|| {
            Error::Unsupported("singular coordinate change in provenance".into())
        })?;
        Ok(Point(
            minv.iter()
                .map(|row| {
                    row.iter().zip(&p.0).map(|(a, b)| a * b).fold(rat(0), |x, y| x + y)
                })
                .collect(),
        )
        .normalized())
    };
    match piece {
        Piece::Monomial(c) => {
            let ideal = c.ideal(ring).substituted(images);
            let kind = if c.dimension == 0 {
                PartKind::PointPrimary(move_point(&coordinate_point(&c.prime_vars, ring.nvars()))?)
            } else {
                PartKind::Cm
            };
            Ok(Piece::Structured(StructuredPart { ideal, kind }))
        }
        Piece::Structured(part) => {
            let kind = match &part.kind {
                PartKind::Cm => PartKind::Cm,
                PartKind::PointPrimary(p) => PartKind::PointPrimary(move_point(p)?),
            };
            Ok(Piece::Structured(StructuredPart { ideal: part.ideal.substituted(images), kind }))
        }
    }
}

fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for i in 0..n {
        let p = (i..n).find(|&r| !a[r][i].is_zero())?;
        a.swap(i, p);
        inv.swap(i, p);
        let d = a[i][i].clone();
        for c in 0..n {
            a[i][c] /= &d;
            inv[i][c] /= &d;
        }
        for r in 0..n {
            if r != i && !a[r][i].is_zero() {
                let f = a[r][i].clone();
                for c in 0..n {
                    let s = &f * &a[i][c];
                    a[r][c] -= s;
                    let s = &f * &inv[i][c];
                    inv[r][c] -= s;
                }
            }
        }
    }
    Some(inv)
}

/// Split an ideal into its CM part (intersection of the components of
/// dimension >= 1) and its punctual components with their lengths.
/// Lengths come from slice dimensions at two consecutive stable degrees
/// plus one verification degree.
pub fn cm_split(ideal: &GradedIdeal, cutoff: u32) -> Result<SplitIdeal> {
    let pieces = componentize(ideal, false)?;
    let ring = ideal.ring().clone();
    let mut cm_parts: Vec<StructuredPart> = Vec::new();
    let mut punctual_parts: Vec<(Point, GradedIdeal)> = Vec::new();
    for piece in pieces {
        match piece {
            Piece::Monomial(c) => {
                if c.dimension >= 1 {
                    cm_parts.push(StructuredPart { ideal: c.ideal(&ring), kind: PartKind::Cm });
                } else if c.dimension == 0 {
                    let p = coordinate_point(&c.prime_vars, ring.nvars());
                    punctual_parts.push((p, c.ideal(&ring)));
                }
                // dimension -1: the irrelevant component, dropped by
                // saturation.
            }
            Piece::Structured(part) => match &part.kind {
                PartKind::Cm => cm_parts.push(part),
                PartKind::PointPrimary(p) => punctual_parts.push((p.clone(), part.ideal)),
            },
        }
    }
    if cm_parts.is_empty() {
        return Err(Error::Unsupported("no 1-dimensional component found".into()));
    }
    let cm_part = intersect_ideals(&ring, &cm_parts)?;
    // Lengths: dim(cm_n) - dim((cm meet q)_n) at stable degrees.
    let cap = cutoff + 4;
    let mut punctual = Vec::new();
    for (p, q) in punctual_parts {
        let meet_parts = vec![
            StructuredPart { ideal: cm_part.clone(), kind: PartKind::Cm },
            StructuredPart { ideal: q.clone(), kind: PartKind::PointPrimary(p.clone()) },
        ];
        let meet = GradedIdeal::new(&ring, cm_part.generators().to_vec())
            .with_provenance(Provenance::Intersection(meet_parts));
        let lens: Vec<usize> = (cutoff - 2..=cutoff)
            .map(|n| {
                cm_part.saturated_piece(n, cap).dim() - meet.saturated_piece(n, cap).dim()
            })
            .collect();
        if lens[0] != lens[1] || lens[1] != lens[2] {
            return Err(Error::CutoffTooSmall(format!(
                "punctual length did not stabilize by degree {cutoff}: {lens:?}"
            )));
        }
        punctual.push((p.normalized(), q, lens[0]));
    }
    Ok(SplitIdeal { cm_part, punctual })
}

fn intersect_ideals(ring: &RingSpec, parts: &[StructuredPart]) -> Result<GradedIdeal> {
    if parts.len() == 1 {
        return Ok(parts[0].ideal.clone());
    }
    // Monomial components intersect exactly; otherwise keep the structured
    // intersection with the first part's generators as representatives
    // (slice computations go through the provenance).
    if parts.iter().all(|p| p.ideal.is_monomial()) {
        let mut acc: Option<Vec<Monomial>> = None;
        for p in parts {
            let gens = p.ideal.monomial_generators()?;
            acc = Some(match acc {
                None => gens,
                Some(prev) => intersect_monomial(&prev, &gens),
            });
        }
        let gens = acc.unwrap();
        Ok(GradedIdeal::new(
            ring,
            gens.iter().map(|m| ParamForm::monomial(ring, m)).collect(),
        ))
    } else {
        Ok(GradedIdeal::new(ring, parts[0].ideal.generators().to_vec())
            .with_provenance(Provenance::Intersection(parts.to_vec())))
    }
}

/// The point cycle of the punctual part: support points with their
/// lengths.
pub fn point_cycle(split: &SplitIdeal) -> PointCycle {
    PointCycle {
        points: split.punctual.iter().map(|(p, _, l)| (p.clone(), *l)).collect(),
    }
    .normalized()
}

/// The Hilbert–Chow cycle: each 1-dimensional component contributes its
/// reduced prime with multiplicity the leading Hilbert coefficient divided
/// by the degree of the prime.  Embedded and punctual components do not
/// appear.
pub fn hilbert_chow(ideal: &GradedIdeal, cutoff: u32) -> Result<CurveCycle> {
    let pieces = componentize(ideal, true)?;
    let ring = ideal.ring().clone();
    let mut components: Vec<(Vec<String>, u64)> = Vec::new();
    for piece in pieces {
        let (part_ideal, is_cm) = match &piece {
            Piece::Monomial(c) => (c.ideal(&ring), c.dimension >= 1),
            Piece::Structured(p) => (p.ideal.clone(), matches!(p.kind, PartKind::Cm)),
        };
        if !is_cm {
            continue;
        }
        // The component may itself be a primary monomial piece or a
        // transformed one; recover its reduced prime, and divide the
        // leading quotient Hilbert coefficient by the prime's.
        let (prime_gens, prime_lead) = reduced_prime(&part_ideal, cutoff)?;
        let nv = ring.nvars() as u32;
        let ambient = crate::ring::IntPolynomial::binomial_term(nv as i64 - 1, nv - 1);
        let hp_quot = ambient.sub(&hilbert_polynomial(&part_ideal, cutoff)?);
        let mult = hp_quot.leading_power_coeff() / prime_lead;
        if mult.denom() != &1.into() {
            return Err(Error::Unsupported(format!(
                "non-integral multiplicity {mult} for a curve component"
            )));
        }
        let mult: i64 = mult
            .numer()
            .try_into()
            .map_err(|_| Error::Unsupported("multiplicity overflow".into()))?;
        components.push((prime_gens, mult as u64));
    }
    // Merge identical primes.
    components.sort();
    let mut merged: Vec<(Vec<String>, u64)> = Vec::new();
    for (p, m) in components {
        match merged.last_mut() {
            Some((q, n)) if *q == p => *n += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(CurveCycle { components: merged })
}

// Recover the reduced prime of a positive-dimensional primary component:
// for monomial components it is the coordinate prime on the supporting
// variables, for transformed ones the transform of that.  Returns the
// canonical generators and the leading Hilbert coefficient of the prime's
// quotient (1/dim! for a linear subspace of that dimension).
fn reduced_prime(ideal: &GradedIdeal, cutoff: u32) -> Result<(Vec<String>, Rat)> {
    match ideal.provenance() {
        Some(Provenance::Transformed { images, base }) => {
            let (gens, lead) = reduced_prime(base, cutoff)?;
            let ring = ideal.ring();
            let forms = gens
                .iter()
                .map(|g| ParamForm::parse(g, ring).map(|f| f.substitute_linear(images)))
                .collect::<Result<Vec<_>>>()?;
            Ok((canonical_linear_span(ring, &forms), lead))
        }
        _ => {
            let gens = ideal.monomial_generators()?;
            let nv = ideal.ring().nvars();
            let mut vars: Vec<usize> = gens
                .iter()
                .flat_map(|m| {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, _)| i)
                })
                .collect();
            vars.sort_unstable();
            vars.dedup();
            let dim = nv as i64 - vars.len() as i64 - 1;
            if dim < 1 {
                return Err(Error::Unsupported(
                    "component is not positive-dimensional".into(),
                ));
            }
            let mut lead = rat(1);
            for i in 1..=dim {
                lead /= rat(i);
            }
            let ring = ideal.ring();
            let forms: Vec<ParamForm> = vars
                .iter()
                .map(|&i| ParamForm::monomial(ring, &Monomial::var_pow(nv, i, 1)))
                .collect();
            Ok((canonical_linear_span(ring, &forms), lead))
        }
    }
}

fn canonical_linear_span(ring: &RingSpec, forms: &[ParamForm]) -> Vec<String> {
    let piece = crate::ideal::DegreePiece::from_forms(ring, 1, forms);
    piece.basis_forms().iter().map(|f| f.render()).collect()
}

/// The tautological fiber predicate: two ideals map to the same point of
/// the tautological morphism iff their CM parts agree and their weighted
/// point cycles agree.
pub fn f_equiv(a: &GradedIdeal, b: &GradedIdeal, cutoff: u32) -> Result<bool> {
    let sa = cm_split(a, cutoff)?;
    let sb = cm_split(b, cutoff)?;
    let cap = cutoff + 4;
    for n in 0..=cutoff {
        if !sa
            .cm_part
            .saturated_piece(n, cap)
            .same_space(&sb.cm_part.saturated_piece(n, cap))
        {
            return Ok(false);
        }
    }
    Ok(point_cycle(&sa) == point_cycle(&sb))
}

/// How a form of degree `d` is handed to the fiber counter: a monomial
/// (its variables are the linear factors) or an explicit factored list.
pub enum FactoredForm {
    Monomial(Monomial),
    Factors(Vec<(ParamForm, u32)>),
}

/// Number of essentially different (pairwise non-proportional) linear
/// divisors: the fiber of the maximal-regularity morphism over `(l, f...)`
/// is a disjoint union of that many projective spaces.
pub fn g_fiber_count(f: &FactoredForm) -> Result<usize> {
    match f {
        FactoredForm::Monomial(m) => {
            Ok(m.exponents().iter().filter(|&&e| e > 0).count())
        }
        FactoredForm::Factors(list) => {
            let mut kept: Vec<&ParamForm> = Vec::new();
            for (form, mult) in list {
                if form.degree() != 1 {
                    return Err(Error::Unsupported(format!(
                        "non-linear factor {}",
                        form.render()
                    )));
                }
                if *mult == 0 {
                    continue;
                }
                if !kept.iter().any(|k| proportional(k, form)) {
                    kept.push(form);
                }
            }
            Ok(kept.len())
        }
    }
}

fn proportional(a: &ParamForm, b: &ParamForm) -> bool {
    let nv = a.ring().nvars();
    let ca: Vec<Rat> = (0..nv).map(|i| a.coeff(&Monomial::var_pow(nv, i, 1)).constant_coeff()).collect();
    let cb: Vec<Rat> = (0..nv).map(|i| b.coeff(&Monomial::var_pow(nv, i, 1)).constant_coeff()).collect();
    for i in 0..nv {
        for j in 0..nv {
            if &ca[i] * &cb[j] != &ca[j] * &cb[i] {
                return false;
            }
        }
    }
    true
}

/// Membership in the maximal-regularity locus: the Hilbert function equals
/// the lexicographic one degreewise up to `b + 1`.
pub fn is_hm(ideal: &GradedIdeal, m: &MacaulayData) -> Result<bool> {
    let lex = lex_ideal(m);
    let hf_i = crate::ideal::hilbert_function(ideal, 0..=m.b + 1, m.b + 4);
    let hf_l = crate::ideal::hilbert_function(&lex, 0..=m.b + 1, m.b + 4);
    Ok(hf_i == hf_l)
}

/// Membership in the pencil locus: a linear form in the ideal, and modulo
/// it the ideal factors as `f * K` with `deg f = d` and `colength K = c`.
/// Supported for monomial ideals and for constructor-built shapes.
pub fn is_g(ideal: &GradedIdeal, m: &MacaulayData) -> Result<bool> {
    if ideal.saturated_piece(1, 5).dim() < 1 {
        return Ok(false);
    }
    if let Some(Provenance::GShape { factor, cofactor, .. }) = ideal.provenance() {
        if factor.degree() != m.d {
            return Ok(false);
        }
        return Ok(cofactor_colength_is(cofactor, m.c));
    }
    let gens = ideal.monomial_generators().map_err(|_| {
        Error::Unsupported("pencil-locus test needs a monomial or constructor-built ideal".into())
    })?;
    let nv = ideal.ring().nvars();
    // Find the linear monomial generator and reduce modulo it.
    let Some(lin) = gens.iter().find(|g| g.degree() == 1) else {
        return Ok(false);
    };
    let var = lin.exponents().iter().position(|&e| e > 0).unwrap();
    let rest: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponents()[var] == 0)
        .cloned()
        .collect();
    if rest.is_empty() {
        return Ok(false);
    }
    // Common factor f = gcd of the generators.
    let mut f = rest[0].clone();
    for g in &rest[1..] {
        f = f.gcd(g);
    }
    if f.degree() != m.d {
        return Ok(false);
    }
    let k_gens = quotient_monomial(&rest, &f);
    // Colength of K in the plane ring modulo the linear form: the reduced
    // quotient misses c monomials per degree, eventually.
    let names: Vec<&str> = ideal
        .ring()
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != var)
        .map(|(_, s)| s.as_str())
        .collect();
    let plane = RingSpec::new(&names, ideal.ring().param())?;
    let k_plane: Vec<Monomial> = k_gens
        .iter()
        .map(|g| {
            Monomial::new(
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != var)
                    .map(|(_, &e)| e)
                    .collect(),
            )
        })
        .collect();
    let k_ideal = GradedIdeal::new(
        &plane,
        k_plane.iter().map(|g| ParamForm::monomial(&plane, g)).collect(),
    );
    let _ = nv;
    Ok(cofactor_colength_is(&k_ideal, m.c))
}

fn cofactor_colength_is(k: &GradedIdeal, c: u32) -> bool {
    let probe = c + k.generators().iter().map(|g| g.degree()).max().unwrap_or(0) + 2;
    let full = k.ring().dim_degree(probe);
    let dims: Vec<usize> = (probe..=probe + 1)
        .map(|n| k.ring().dim_degree(n) - k.saturated_piece(n, probe + 4).dim())
        .collect();
    let _ = full;
    dims[0] == c as usize && dims[1] == c as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::ab_to_dg;
    use crate::orbits::OneParamAction;

    fn p3() -> RingSpec {
        RingSpec::p3()
    }

    #[test]
    fn primary_split_examples() {
        let r = p3();
        // (y, xz, xt) = (x, y) cap (y, z, t).
        let i = GradedIdeal::parse(&r, &["y", "x*z", "x*t"]).unwrap();
        let comps = monomial_primary_split(&i).unwrap();
        assert_eq!(comps.len(), 2);
        let dims: Vec<i64> = comps.iter().map(|c| c.dimension).collect();
        assert!(dims.contains(&1) && dims.contains(&0));
        // A prime input splits as itself.
        let p = GradedIdeal::parse(&r, &["x", "y"]).unwrap();
        let comps = monomial_primary_split(&p).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].prime_vars, vec![0, 1]);
        // (x^2, xy) = (x) cap (x^2, y).
        let q = GradedIdeal::parse(&r, &["x^2", "x*y"]).unwrap();
        let comps = monomial_primary_split(&q).unwrap();
        assert_eq!(comps.len(), 2);
        let primes: Vec<Vec<usize>> = comps.iter().map(|c| c.prime_vars.clone()).collect();
        assert!(primes.contains(&vec![0]));
        assert!(primes.contains(&vec![0, 1]));
    }

    #[test]
    fn cm_split_line_with_point() {
        let r = p3();
        let i = GradedIdeal::parse(&r, &["y", "x*z", "x*t"]).unwrap();
        let split = cm_split(&i, 6).unwrap();
        let line = GradedIdeal::parse(&r, &["x", "y"]).unwrap();
        assert!(split.cm_part.degree_piece(3).same_space(&line.degree_piece(3)));
        assert_eq!(split.punctual.len(), 1);
        let (p, _, len) = &split.punctual[0];
        assert_eq!(p.0, vec![rat(1), rat(0), rat(0), rat(0)]);
        assert_eq!(*len, 1);
        // CM input: punctual list empty.
        let cm = cm_split(&line, 6).unwrap();
        assert!(cm.punctual.is_empty());
    }

    #[test]
    fn cm_split_reintersects_to_saturation() {
        let r = p3();
        // Build star(x, y^2) cap (x, y^3, z) with known length 1.
        let i = GradedIdeal::parse(&r, &["x", "y^3", "y^2*z"]).unwrap();
        let split = cm_split(&i, 8).unwrap();
        assert_eq!(split.punctual.len(), 1);
        assert_eq!(split.punctual[0].2, 1);
        // cm cap punctual agrees with the saturation of the input.
        let meet_parts = vec![
            StructuredPart { ideal: split.cm_part.clone(), kind: PartKind::Cm },
            StructuredPart {
                ideal: split.punctual[0].1.clone(),
                kind: PartKind::PointPrimary(split.punctual[0].0.clone()),
            },
        ];
        let meet = GradedIdeal::new(&r, split.cm_part.generators().to_vec())
            .with_provenance(Provenance::Intersection(meet_parts));
        for n in 0..=6u32 {
            assert!(
                meet.saturated_piece(n, 10).same_space(&i.saturated_piece(n, 10)),
                "n={n}"
            );
        }
    }

    #[test]
    fn hilbert_chow_examples() {
        let r = p3();
        // (x,y) cap (z,t): two reduced lines.
        let i = GradedIdeal::parse(&r, &["x*z", "x*t", "y*z", "y*t"]).unwrap();
        let chow = hilbert_chow(&i, 6).unwrap();
        assert_eq!(chow.components.len(), 2);
        assert!(chow.components.iter().all(|(_, m)| *m == 1));
        // The double line (x, y^2) has multiplicity 2 on the reduced line;
        // the full square (x, y)^2 has multiplicity 3.
        let dbl = GradedIdeal::parse(&r, &["x", "y^2"]).unwrap();
        let chow = hilbert_chow(&dbl, 6).unwrap();
        assert_eq!(chow.components, vec![(vec!["x".to_string(), "y".to_string()], 2)]);
        let square = GradedIdeal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let chow = hilbert_chow(&square, 6).unwrap();
        assert_eq!(chow.components[0].1, 3);
        // (x^2, xy) = (x) cap (x^2, y): the embedded point is discarded
        // and the plane component (x) carries multiplicity 1.
        let plane = GradedIdeal::parse(&r, &["x^2", "x*y"]).unwrap();
        let chow = hilbert_chow(&plane, 6).unwrap();
        assert_eq!(chow.components, vec![(vec!["x".to_string()], 1)]);
    }

    #[test]
    fn hilbert_chow_equivariance() {
        let r = p3();
        let i = GradedIdeal::parse(&r, &["x*z", "x*t", "y*z", "y*t"]).unwrap();
        // psi2 at a rational parameter value moves z by 2y.
        let action = OneParamAction::psi2(&r);
        let moved = action.apply_ideal(&i).unwrap().eval_param(&rat(2));
        let chow_moved = hilbert_chow(&moved, 6).unwrap();
        let chow = hilbert_chow(&i, 6).unwrap();
        // The line (x, y) is fixed; (z, t) moves to (2y + z, t).
        assert_ne!(chow_moved, chow);
        let names: Vec<Vec<String>> =
            chow_moved.components.iter().map(|(p, _)| p.clone()).collect();
        assert!(names.iter().any(|gens| gens.iter().any(|g| g.contains("2*y + z")
            || g.contains("y + 1/2*z"))));
    }

    #[test]
    fn f_equiv_examples() {
        let r = p3();
        let i = GradedIdeal::parse(&r, &["y", "x*z", "x*t"]).unwrap();
        assert!(f_equiv(&i, &i, 6).unwrap());
        // Same CM part (x, y^2), same point (0:0:0:1), equal length 1,
        // different primary ideals: (x,y^2) cap (x,y^3,z) versus
        // (x,y^2) cap (x^2,y,z).
        let star = GradedIdeal::parse(&r, &["x", "y^3", "y^2*z"]).unwrap();
        let star2 = GradedIdeal::parse(&r, &["x^2", "x*y", "x*z", "y^2"]).unwrap();
        assert!(f_equiv(&star, &star2, 8).unwrap());
        // Same CM part and point but length 2 on one side.
        let deeper = GradedIdeal::parse(&r, &["x", "y^3", "y^2*z^2"]).unwrap();
        assert!(!f_equiv(&star, &deeper, 8).unwrap());
        // Same shape at a different point is not equivalent.
        let other_point = GradedIdeal::parse(&r, &["x", "y^3", "y^2*t"]).unwrap();
        assert!(!f_equiv(&star, &other_point, 8).unwrap());
    }

    #[test]
    fn g_fiber_count_examples() {
        let ydd = FactoredForm::Monomial(Monomial::new(vec![0, 5, 0]));
        assert_eq!(g_fiber_count(&ydd).unwrap(), 1);
        let r = RingSpec::p2();
        let two = FactoredForm::Factors(vec![
            (ParamForm::parse("y", &r).unwrap(), 4),
            (ParamForm::parse("y + z", &r).unwrap(), 1),
        ]);
        assert_eq!(g_fiber_count(&two).unwrap(), 2);
        let mono = FactoredForm::Monomial(Monomial::new(vec![0, 2, 3]));
        assert_eq!(g_fiber_count(&mono).unwrap(), 2);
        // Proportional factors collapse.
        let prop = FactoredForm::Factors(vec![
            (ParamForm::parse("y + z", &r).unwrap(), 1),
            (ParamForm::parse("2*y + 2*z", &r).unwrap(), 1),
        ]);
        assert_eq!(g_fiber_count(&prop).unwrap(), 1);
    }

    #[test]
    fn is_hm_and_is_g_examples() {
        let m = ab_to_dg(5, 8).unwrap();
        let lex = lex_ideal(&m);
        assert!(is_hm(&lex, &m).unwrap());
        assert!(is_g(&lex, &m).unwrap());
        // A different maximal shape: (x, y^4 (y, z^3 t)).
        let r = p3();
        let other = GradedIdeal::parse(&r, &["x", "y^5", "y^4*z^3*t"]).unwrap();
        assert!(is_hm(&other, &m).unwrap());
        assert!(is_g(&other, &m).unwrap());
        // A non-maximal ideal: the smooth-type Borel-fixed one.
        let smooth = GradedIdeal::parse(&r, &["x^2", "x*y", "x*z", "y^3", "y^2*z^2"]).unwrap();
        let m44 = ab_to_dg(4, 4).unwrap();
        let _ = m44;
        assert!(!is_hm(&smooth, &m).unwrap());
    }
}
