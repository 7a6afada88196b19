use num_traits::Zero;
use proptest::prelude::*;

use galcar_core::fields::PolyForm;
use galcar_core::verify::{random_invertible, random_polynomial, rng_from_seed};
use galcar_core::{
    format_form, levi_civita, parse_form, pullback_structure, star_oracle, Form, Matrix,
    MultiIndex, Polynomial, Rational, SpacetimeKind, SpacetimeStructure, StarVariant,
};

type R = Rational;

fn rat(num: i64, den: i64) -> R {
    R::new(num.into(), den.into())
}

/// A form of degree `p` in dimension `d` with coefficients drawn from
/// `coeffs` (zeros leave a component empty).
fn form_from(d: usize, p: usize, coeffs: &[(i64, i64)]) -> Form<R> {
    let terms = MultiIndex::all_of_degree(d, p)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .map(|(m, &(n, q))| (m, rat(n, q)));
    Form::from_terms(d, p, terms).unwrap()
}

fn arb_form() -> impl Strategy<Value = Form<R>> {
    (1usize..=6)
        .prop_flat_map(|d| (Just(d), 0..=d, prop::collection::vec((-9i64..=9, 1i64..=4), 1..40)))
        .prop_map(|(d, p, c)| form_from(d, p, &c))
}

fn arb_pair() -> impl Strategy<Value = (Form<R>, Form<R>)> {
    (1usize..=6).prop_flat_map(|d| {
        let coeffs = || prop::collection::vec((-9i64..=9, 1i64..=4), 1..30);
        (0..=d, 0..=d, coeffs(), coeffs()).prop_map(move |(p, q, a, b)| {
            (form_from(d, p, &a), form_from(d, q, &b))
        })
    })
}

fn sign_of(p: usize, q: usize) -> R {
    if (p * q).is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

#[test]
fn wedge_graded_commutativity_on_all_basis_pairs() {
    for d in 1..=6 {
        for i in MultiIndex::all(d) {
            for j in MultiIndex::all(d) {
                let (a, b) = (Form::<R>::basis(d, i), Form::<R>::basis(d, j));
                let ab = a.wedge(&b).unwrap();
                let ba = b.wedge(&a).unwrap();
                assert_eq!(ab, ba * sign_of(i.degree(), j.degree()), "{i:?} {j:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn wedge_graded_commutativity((a, b) in arb_pair()) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        prop_assert_eq!(ab, ba * sign_of(a.degree(), b.degree()));
    }

    #[test]
    fn wedge_is_associative((a, b) in arb_pair(), seed in any::<u64>()) {
        let d = a.dim();
        let p = (seed as usize) % (d + 1);
        let c = form_from(d, p, &[(1, 1), (-2, 3), (5, 2)]);
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn decompose_round_trip(a in arb_form()) {
        let (s, r) = a.decompose();
        prop_assert!(s.as_form().is_spatial() && r.as_form().is_spatial());
        prop_assert_eq!(Form::recompose(&s, &r).unwrap(), a);
    }

    #[test]
    fn eta_is_an_involution(a in arb_form()) {
        prop_assert_eq!(a.eta().eta(), a.clone());
        let expected = if a.degree() % 2 == 0 { a.clone() } else { -a.clone() };
        prop_assert_eq!(a.eta(), expected);
    }

    #[test]
    fn levi_civita_composes_multiplicatively(
        p in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
        q in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let composed: Vec<usize> = q.iter().map(|&i| p[i]).collect();
        let lhs = levi_civita(&composed).unwrap();
        prop_assert_eq!(lhs, levi_civita(&p).unwrap() * levi_civita(&q).unwrap());
        prop_assert!(lhs == 1 || lhs == -1);
    }

    #[test]
    fn literal_round_trip(a in arb_form()) {
        let text = format_form(&a);
        let back = parse_form::<R>(&text, a.dim()).unwrap();
        if a.is_zero() {
            // "0" carries no degree
            prop_assert!(back.is_zero());
        } else {
            prop_assert_eq!(back, a);
        }
    }

    #[test]
    fn exterior_derivative_squares_to_zero(d in 1usize..=4, p in 0usize..=4, seed in any::<u64>()) {
        let p = p.min(d);
        let mut rng = rng_from_seed(seed);
        let terms: Vec<(MultiIndex, Polynomial<R>)> = MultiIndex::all_of_degree(d, p)
            .into_iter()
            .map(|m| (m, random_polynomial(&mut rng, d, 4)))
            .collect();
        let a = PolyForm::from_terms(d, p, terms).unwrap();
        prop_assert!(a.exterior_derivative().exterior_derivative().is_zero());
    }
}

/// All ordered `k`-tuples over `0..d`, repetitions included.
fn tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn component(a: &Form<R>, idx: &[usize]) -> R {
    match MultiIndex::from_indices(idx) {
        Some((s, m)) => {
            let c = a.coeff(m);
            if s < 0 {
                -c
            } else {
                c
            }
        }
        None => R::zero(),
    }
}

fn factorial(n: usize) -> R {
    rat((1..=n as i64).product(), 1)
}

fn eps(left: &[usize], right: &[usize]) -> R {
    let joined: Vec<usize> = left.iter().chain(right).copied().collect();
    rat(levi_civita(&joined).unwrap().into(), 1)
}

/// Star by summing over ordered index tuples with the symmetric factorials,
/// written against the textbook definition rather than sorted multi-indices.
fn brute_force_star(a: &Form<R>, s: &SpacetimeStructure<R>, variant: StarVariant) -> Form<R> {
    let d = s.dim();
    let p = a.degree();
    let q = d - p;
    let raising: Option<Matrix<R>> = match variant {
        StarVariant::MinkowskiMetric => Some(s.inverse_metric().unwrap()),
        StarVariant::GalileanH => Some(s.h().entries.clone()),
        StarVariant::CarrollianK => Some(s.k().unwrap().entries.clone()),
        _ => None,
    };
    let lowering: Option<Matrix<R>> = match variant {
        StarVariant::CarrollianH => Some(s.h().entries.clone()),
        StarVariant::GalileanK => Some(s.k().unwrap().entries.clone()),
        _ => None,
    };
    let vol = s.vol().coeff(MultiIndex::full(d));
    let polyvol = s.polyvol().top_coefficient().clone();
    let mut out = Form::zero(d, q);
    for b in tuples(d, q) {
        if MultiIndex::from_indices(&b).is_none() {
            continue;
        }
        let mut comp = R::zero();
        for i in tuples(d, p) {
            let ai = component(a, &i);
            if ai.is_zero() {
                continue;
            }
            for c in tuples(d, if raising.is_some() { p } else { q }) {
                let term = if let Some(r) = &raising {
                    // α_i R^{i1 c1}…R^{ip cp} vol ε_{c b}
                    let mut t = ai.clone() * vol.clone() * eps(&c, &b);
                    for k in 0..p {
                        t *= r[(i[k], c[k])].clone();
                    }
                    t
                } else {
                    // α_i polyvol ε^{i c} L_{c1 b1}…L_{cq bq}
                    let l = lowering.as_ref().unwrap();
                    let mut t = ai.clone() * polyvol.clone() * eps(&i, &c);
                    for k in 0..q {
                        t *= l[(c[k], b[k])].clone();
                    }
                    t
                };
                comp += term;
            }
        }
        comp /= factorial(p);
        // ∗α = 1/(d−p)! Σ_b (∗α)_b e^{b1} ∧ … ∧ e^{bq}
        out = out + Form::monomial(d, comp / factorial(q), &b).unwrap();
    }
    out
}

#[test]
fn brute_force_oracle_agrees_in_three_dimensions() {
    let mut rng = rng_from_seed(17);
    for kind in [
        SpacetimeKind::Minkowski,
        SpacetimeKind::Galilean,
        SpacetimeKind::Carrollian,
    ] {
        let canonical = SpacetimeStructure::canonical(kind, 2).unwrap();
        let mut structures = vec![canonical.clone()];
        for _ in 0..3 {
            let change = random_invertible(&mut rng, 3);
            structures.push(pullback_structure(&canonical, &change).unwrap());
        }
        for s in &structures {
            for variant in StarVariant::for_kind(kind, 3) {
                for p in 0..=3 {
                    let a = form_from(3, p, &[(2, 1), (-1, 3), (0, 1), (5, 4)]);
                    let expected = brute_force_star(&a, s, variant);
                    assert_eq!(star_oracle(&a, s, variant).unwrap(), expected, "{variant} p = {p}");
                }
            }
        }
    }
}
