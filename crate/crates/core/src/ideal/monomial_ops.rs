//! Small helpers on monomial ideals, used by slices, saturation and the
//! primary decomposition.

use crate::ring::Monomial;

/// Drop generators divisible by another generator.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()));
    for g in sorted {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.cmp_grlex(b).reverse());
    out
}

/// Generators of the intersection of two monomial ideals: pairwise lcms,
/// minimalized.
pub fn intersect_monomial(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimalize(out)
}

/// Generators of the quotient `(I : m)` of a monomial ideal by a monomial.
pub fn quotient_monomial(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    let out = gens
        .iter()
        .map(|g| {
            // g / gcd(g, m)
            let gcd = g.gcd(m);
            g.div(&gcd).unwrap()
        })
        .collect();
    minimalize(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let out = minimalize(vec![m(&[1, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(out.len(), 2);
        assert!(out.contains(&m(&[1, 0])));
        assert!(out.contains(&m(&[0, 2])));
    }

    #[test]
    fn intersection_via_lcm() {
        // (x) cap (y) = (xy)
        let out = intersect_monomial(&[m(&[1, 0])], &[m(&[0, 1])]);
        assert_eq!(out, vec![m(&[1, 1])]);
    }

    #[test]
    fn colon_by_monomial() {
        // (x^2, xy) : x = (x, y)
        let out = quotient_monomial(&[m(&[2, 0]), m(&[1, 1])], &m(&[1, 0]));
        assert_eq!(out.len(), 2);
    }
}
