//! Property tests for the structural invariants.

use proptest::prelude::*;
use tautocycle::ideal::{
    self, initial_subspace, is_borel_fixed, Direction, GradedIdeal,
};
use tautocycle::orbits::OneParamAction;
use tautocycle::ring::{rat, IntPolynomial, Monomial, ParamForm, Rat, RingSpec};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn arb_int_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(arb_rat(), 0..5).prop_map(IntPolynomial::from_binomial_basis)
}

// A small random monomial ideal in the 4-variable ring.
fn arb_monomial_ideal() -> impl Strategy<Value = GradedIdeal> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3), 1..5).prop_map(|exps| {
        let ring = RingSpec::p3();
        let gens: Vec<ParamForm> = exps
            .into_iter()
            .map(|(a, b, c, d)| {
                let m = Monomial::new(vec![a, b, c.min(2), d.min(2)]);
                if m.degree() == 0 {
                    ParamForm::monomial(&ring, &Monomial::var_pow(4, 0, 1))
                } else {
                    ParamForm::monomial(&ring, &m)
                }
            })
            .collect();
        GradedIdeal::new(&ring, gens)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Evaluation in the binomial basis agrees with evaluation after
    // conversion to the power basis, at every integer.
    #[test]
    fn binomial_vs_power_basis(p in arb_int_poly(), n in -15i64..15) {
        let power = p.power_coeffs();
        let mut acc = rat(0);
        let mut x = rat(1);
        for c in &power {
            acc += c * &x;
            x *= rat(n);
        }
        prop_assert_eq!(acc, p.eval(n));
    }

    // Interpolation through samples of a known polynomial of bounded
    // degree recovers exactly that polynomial.
    #[test]
    fn fit_recovers_known_polynomial(p in arb_int_poly()) {
        let bound = p.degree().unwrap_or(0) as u32;
        let samples: Vec<(i64, Rat)> =
            (0..bound as i64 + 3).map(|n| (n, p.eval(n))).collect();
        let fitted = tautocycle::ring::fit_int_poly(&samples, bound).unwrap();
        prop_assert_eq!(fitted, p);
    }

    // Parse -> render -> parse is the identity, and render is canonical.
    #[test]
    fn parse_render_fixed_point(
        terms in prop::collection::vec(
            ((0u32..3, 0u32..3, 0u32..3), -5i64..=5, 0u32..3),
            1..5,
        )
    ) {
        let ring = RingSpec::p3();
        // Build a homogeneous input by padding with the last variable.
        let degree = 6;
        let mut text_terms = Vec::new();
        for ((a, b, c), coeff, ppow) in terms {
            if coeff == 0 {
                continue;
            }
            let pad = degree - (a + b + c).min(degree);
            let mono = Monomial::new(vec![a.min(degree), b.min(degree - a.min(degree)),
                c.min(degree - (a + b).min(degree)), 0]);
            let total: u32 = mono.degree();
            let mut e = mono.exponents().to_vec();
            e[3] = degree - total;
            let mono = Monomial::new(e);
            let _ = pad;
            let param = match ppow {
                0 => String::new(),
                1 => "A*".to_string(),
                k => format!("A^{k}*"),
            };
            let sign = if coeff < 0 { "-" } else { "+" };
            text_terms.push(format!("{sign} {}*{param}{}", coeff.abs(), mono.render(ring.vars())));
        }
        prop_assume!(!text_terms.is_empty());
        let text = text_terms.join(" ");
        let f = ParamForm::parse(&text, &ring).unwrap();
        prop_assume!(!f.is_zero());
        let rendered = f.render();
        let g = ParamForm::parse(&rendered, &ring).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(g.render(), rendered);
    }

    // Slices grow: S_1 * piece(n) lies inside piece(n+1).
    #[test]
    fn slice_growth(ideal in arb_monomial_ideal(), n in 0u32..5) {
        let piece = ideal.degree_piece(n);
        let up = ideal.degree_piece(n + 1);
        for row in piece.multiplied_by_variables() {
            prop_assert!(up.contains_row(&row));
        }
    }

    // Weight-initial subspaces preserve dimension and are idempotent.
    #[test]
    fn initial_subspace_dimension_and_idempotence(
        ideal in arb_monomial_ideal(),
        n in 2u32..6,
        shear in 0usize..3,
    ) {
        let ring = ideal.ring().clone();
        // Twist by a unipotent so the slice is not already monomial.
        let actions = [
            OneParamAction::psi1(&ring),
            OneParamAction::psi2(&ring),
            OneParamAction::psi3(&ring),
        ];
        let moved = actions[shear].apply_ideal(&ideal).unwrap().eval_param(&rat(2));
        let piece = moved.degree_piece(n);
        let weights = [0i64, 0, 0, 1];
        for dir in [Direction::ToZero, Direction::ToInfinity] {
            let init = initial_subspace(&piece, &weights, dir);
            prop_assert_eq!(init.dim(), piece.dim());
            let again = initial_subspace(&init, &weights, dir);
            prop_assert!(again.same_space(&init));
        }
    }

    // Borel-fixed monomial ideals have shear-invariant degree pieces.
    #[test]
    fn borel_fixed_pieces_are_shear_invariant(raw in arb_monomial_ideal(), n in 2u32..5) {
        let ideal = borel_closure(&raw);
        prop_assert!(is_borel_fixed(&ideal).unwrap());
        let ring = ideal.ring().clone();
        for action in [
            OneParamAction::psi1(&ring),
            OneParamAction::psi2(&ring),
            OneParamAction::psi3(&ring),
        ] {
            let moved = action.apply_ideal(&ideal).unwrap().eval_param(&rat(3));
            prop_assert!(moved.degree_piece(n).same_space(&ideal.degree_piece(n)));
        }
    }

    // Hilbert functions of saturations are invariant under coordinate
    // changes.
    #[test]
    fn saturated_dims_invariant_under_coordinates(ideal in arb_monomial_ideal(), n in 0u32..5) {
        let images = tautocycle::ideal::random_coordinates_for_test(4, 99);
        let moved = ideal.substituted(&images);
        prop_assert_eq!(
            moved.saturated_piece(n, 6).dim(),
            ideal.saturated_piece(n, 6).dim()
        );
    }
}

// Close a monomial ideal under the exchange moves: for a generator m with
// x_i | m and j < i, add x_j * m / x_i.
fn borel_closure(ideal: &GradedIdeal) -> GradedIdeal {
    let ring = ideal.ring().clone();
    let nv = ring.nvars();
    let mut gens = ideal.monomial_generators().unwrap();
    loop {
        let mut added = false;
        let snapshot = gens.clone();
        for m in &snapshot {
            for i in 0..nv {
                if m.exponents()[i] == 0 {
                    continue;
                }
                for j in 0..i {
                    let mut e = m.exponents().to_vec();
                    e[i] -= 1;
                    e[j] += 1;
                    let moved = Monomial::new(e);
                    if !gens.iter().any(|g| g.divides(&moved)) {
                        gens.push(moved);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    let gens = tautocycle::ideal::minimalize_monomials(gens);
    GradedIdeal::new(&ring, gens.iter().map(|m| ParamForm::monomial(&ring, m)).collect())
}

// The fiber predicate is an equivalence relation on a small structured set.
#[test]
fn f_equiv_is_an_equivalence() {
    let ring = RingSpec::p3();
    let ideals: Vec<GradedIdeal> = [
        vec!["x", "y^3", "y^2*z"],
        vec!["x^2", "x*y", "x*z", "y^2"],
        vec!["x", "y^3", "y^2*z^2"],
        vec!["x", "y^2"],
    ]
    .iter()
    .map(|gens| GradedIdeal::parse(&ring, gens).unwrap())
    .collect();
    let n = ideals.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = tautocycle::structure::f_equiv(&ideals[i], &ideals[j], 8).unwrap();
        }
    }
    for i in 0..n {
        assert!(rel[i][i], "reflexive at {i}");
        for j in 0..n {
            assert_eq!(rel[i][j], rel[j][i], "symmetric at {i},{j}");
            for k in 0..n {
                if rel[i][j] && rel[j][k] {
                    assert!(rel[i][k], "transitive at {i},{j},{k}");
                }
            }
        }
    }
}

// Roundtrip across the whole admissible (a, b) table up to 14.
#[test]
fn macaulay_roundtrips_exhaustive() {
    use tautocycle::macaulay::{ab_to_dg, admissible, dg_to_ab, q_polynomial, Admissible};
    for a in 2..=14u32 {
        for b in a..=14u32 {
            let m = ab_to_dg(a, b).unwrap();
            assert_eq!(dg_to_ab(m.d, m.g).unwrap(), m);
            match admissible(&q_polynomial(&m)).unwrap() {
                Admissible::Curve(back) => assert_eq!(back, m),
                other => panic!("(a,b)=({a},{b}) classified as {other:?}"),
            }
        }
    }
}

// The maximal-Hilbert-function property of the lexicographic ideal over
// random monomial ideals sharing its Hilbert polynomial.
#[test]
fn lex_dominates_random_monomial_ideals() {
    let m = tautocycle::macaulay::ab_to_dg(4, 5).unwrap();
    let lex = ideal::lex_ideal(&m);
    let lex_hf = ideal::hilbert_function(&lex, 0..=m.b + 2, m.b + 4);
    for seed in 0..8 {
        let random = tautocycle::verify::random_monomial_curve_ideal(&m, seed).unwrap();
        let hf = ideal::hilbert_function(&random, 0..=m.b + 2, m.b + 4);
        assert!(lex_hf.dominates(&hf), "seed {seed}");
    }
}
