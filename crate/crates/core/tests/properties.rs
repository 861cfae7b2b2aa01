//! Randomized laws for every layer, from rational arithmetic up to the
//! optimizer's bookkeeping.

use num_traits::{One, Signed, Zero};
use pinchcert::elimination::{discriminant, resultant};
use pinchcert::exactnum::{frac, int, parse_int, parse_rational, Rational};
use pinchcert::lemmas::{certify_lemma, ineqef_p, ineqks_p, Certificate, LemmaId};
use pinchcert::multipoly::{parse_poly, poly, Monomial, MultiPoly, UniPoly, VarTable};
use pinchcert::pinching::{
    bracket_at, certify_negative, final_coefficients, optimize_eta, PinchingParams, SearchConfig,
};
use pinchcert::realroots::{certify_positive, count_real_roots, sturm_sequence, DomainSpec};
use pinchcert::symmetric::{
    cubic_discriminant, cubic_discriminant_tau_closed_form, power_sum_in_elementary, same_polynomial,
    tau_substitute, to_elementary, ElemSymExpr,
};
use proptest::prelude::*;

const VARS: [&str; 4] = ["w", "x", "y", "z"];

fn table() -> VarTable {
    VarTable::new(VARS).unwrap()
}

fn big_rational() -> impl Strategy<Value = Rational> {
    ("-?[1-9][0-9]{0,63}", "[1-9][0-9]{0,63}")
        .prop_map(|(n, d)| Rational::new(parse_int(&n).unwrap(), parse_int(&d).unwrap()))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

/// Sparse, at most 4 variables, total degree at most 6.
fn sparse_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((small_rational(), prop::array::uniform4(0u32..=3)), 0..6).prop_map(|terms| {
        let vars = table();
        let terms = terms
            .into_iter()
            .filter(|(_, e)| e.iter().sum::<u32>() <= 6)
            .map(|(c, e)| (Monomial::new(e.to_vec()), c));
        MultiPoly::from_terms(&vars, terms)
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 4)
}

fn eval(p: &MultiPoly, pt: &[Rational]) -> Rational {
    let named: Vec<(&str, Rational)> = VARS.iter().copied().zip(pt.iter().cloned()).collect();
    p.evaluate(&named).unwrap()
}

/// Univariate in `x` with integer coefficients and nonzero leading term.
fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(-9i64..=9, 1..=max_deg), prop_oneof![-9i64..=-1, 1i64..=9]).prop_map(|(mut c, lead)| {
        c.push(lead);
        UniPoly::from_ints(&c)
    })
}

fn linear(r: &Rational) -> UniPoly {
    UniPoly::new(vec![-r.clone(), Rational::one()])
}

fn res(p: &UniPoly, q: &UniPoly) -> Rational {
    resultant(&p.to_multi("x"), &q.to_multi("x"), "x").unwrap().value.as_constant().unwrap()
}

fn distinct(rs: Vec<Rational>) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for r in rs {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_distributivity(a in big_rational(), b in big_rational(), c in big_rational()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn rational_print_parse(a in big_rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_distributivity(p in sparse_poly(), q in sparse_poly(), r in sparse_poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
    }

    #[test]
    fn evaluation_is_multiplicative(p in sparse_poly(), q in sparse_poly(), pt in point()) {
        prop_assert_eq!(eval(&(&p * &q), &pt), eval(&p, &pt) * eval(&q, &pt));
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in sparse_poly(), q in sparse_poly(), pt in point()) {
        let lhs = eval(&p.substitute("x", &q).unwrap(), &pt);
        let mut moved = pt.clone();
        moved[1] = eval(&q, &pt);
        prop_assert_eq!(lhs, eval(&p, &moved));
    }

    #[test]
    fn leibniz_rule(p in sparse_poly(), q in sparse_poly()) {
        let d = |f: &MultiPoly| f.partial_derivative("y").unwrap();
        prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
    }

    #[test]
    fn poly_print_parse(p in sparse_poly()) {
        let text = p.to_string();
        let back = parse_poly(&text, &table()).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_swap_sign(p in uni(4), q in uni(4)) {
        let (m, k) = (p.degree().unwrap(), q.degree().unwrap());
        let sign = if (m * k) % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(res(&p, &q), sign * res(&q, &p));
    }

    #[test]
    fn resultant_product_formula(
        lead in 1i64..=5,
        roots in prop::collection::vec(small_rational(), 1..4),
        q in uni(4),
    ) {
        // Res(lc * prod (x - r_i), Q) = lc^deg Q * prod Q(r_i)
        let mut p = UniPoly::constant(int(lead));
        for r in &roots {
            p = p.mul(&linear(r));
        }
        let k = q.degree().unwrap();
        let expected = num_traits::pow(int(lead), k) * roots.iter().map(|r| q.eval(r)).product::<Rational>();
        prop_assert_eq!(res(&p, &q), expected);
    }

    #[test]
    fn multiple_root_kills_discriminant(p in uni(3), c in small_rational()) {
        let q = p.mul(&linear(&c)).mul(&linear(&c));
        let d = discriminant(&q.to_multi("x"), "x").unwrap().value;
        prop_assert!(d.is_zero());
    }

    #[test]
    fn squarefree_has_nonzero_discriminant(roots in prop::collection::vec(small_rational(), 2..6)) {
        let roots = distinct(roots);
        prop_assume!(roots.len() >= 2);
        let p = roots.iter().fold(UniPoly::constant(int(1)), |acc, r| acc.mul(&linear(r)));
        let mp = p.to_multi("x");
        let d = discriminant(&mp, "x").unwrap().value.as_constant().unwrap();
        prop_assert!(d.is_positive());
        let seq = sturm_sequence(&mp, "x").unwrap();
        prop_assert!(seq.is_squarefree());
        prop_assert!(seq.polys.last().unwrap().as_constant().is_some_and(|c| !c.is_zero()));
    }

    #[test]
    fn one_conjugate_pair_flips_discriminant(roots in prop::collection::vec(small_rational(), 1..5)) {
        let roots = distinct(roots);
        let p = roots
            .iter()
            .fold(UniPoly::from_ints(&[1, 0, 1]), |acc, r| acc.mul(&linear(r)));
        let d = discriminant(&p.to_multi("x"), "x").unwrap().value.as_constant().unwrap();
        prop_assert!(d.is_negative());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sturm_matches_known_roots(
        roots in prop::collection::vec(small_rational(), 1..9),
        a in small_rational(),
        width in small_rational(),
    ) {
        let roots = distinct(roots);
        let p = roots.iter().fold(UniPoly::constant(int(1)), |acc, r| acc.mul(&linear(r))).to_multi("x");
        prop_assert_eq!(count_real_roots(&p, "x", &DomainSpec::WholeLine).unwrap(), roots.len());
        let b = &a + width.abs();
        let dom = DomainSpec::segment(a.clone(), b.clone()).unwrap();
        let want = roots.iter().filter(|r| **r >= a && **r <= b).count();
        prop_assert_eq!(count_real_roots(&p, "x", &dom).unwrap(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sturm_counts_are_additive(
        roots in prop::collection::vec(small_rational(), 1..7),
        a in small_rational(),
        w1 in small_rational(),
        w2 in small_rational(),
    ) {
        let roots = distinct(roots);
        let p = roots.iter().fold(UniPoly::constant(int(1)), |acc, r| acc.mul(&linear(r))).to_multi("x");
        let b = &a + w1.abs();
        prop_assume!(!roots.contains(&b));
        let c = &b + w2.abs();
        let count = |lo: &Rational, hi: &Rational| {
            count_real_roots(&p, "x", &DomainSpec::segment(lo.clone(), hi.clone()).unwrap()).unwrap()
        };
        prop_assert_eq!(count(&a, &c), count(&a, &b) + count(&b, &c));
    }

    #[test]
    fn positivity_pass_is_sound(
        roots in prop::collection::vec(small_rational(), 0..4),
        shift in small_rational(),
        lo in small_rational(),
        samples in prop::collection::vec(small_rational(), 100),
    ) {
        // prod (x - r)^2 + shift: positive exactly when shift > 0 or no root is hit.
        let sq = roots.iter().fold(UniPoly::constant(int(1)), |acc, r| acc.mul(&linear(r)).mul(&linear(r)));
        let p = sq.add(&UniPoly::constant(shift)).to_multi("x");
        prop_assume!(!p.is_zero());
        let dom = DomainSpec::RayGeq(lo.clone());
        let cert = certify_positive(&p, "x", &dom).unwrap();
        if cert.passed() {
            for t in samples {
                let t = &lo + t.abs();
                prop_assert!(p.evaluate(&[("x", t)]).unwrap().is_positive());
            }
        }
    }
}

#[test]
fn newton_power_sums_up_to_eight() {
    let xyz = ["x", "y", "z"];
    let vars = VarTable::new(xyz).unwrap();
    for m in 1..=8u32 {
        let e = power_sum_in_elementary(m as usize, 3).unwrap();
        let direct = xyz
            .iter()
            .map(|v| MultiPoly::var(&vars, v).unwrap().pow(m))
            .fold(MultiPoly::zero(&vars), |acc, t| &acc + &t);
        assert!(same_polynomial(&e.expand(&xyz).unwrap(), &direct).unwrap(), "m = {m}");
    }
}

#[test]
fn tau_round_trip_and_cubic_discriminant() {
    let xyz = ["x", "y", "z"];
    let samples = [
        "x^2*y^2*z^2 + x^4 + y^4 + z^4",
        "(x + y + z)^4 - 3*(x*y + y*z + z*x)^2",
        "x*y*z*(x + y + z) + x^2 + y^2 + z^2 + 7",
    ];
    for text in samples {
        let e = to_elementary(&poly(text, &xyz), &xyz).unwrap();
        let tau = tau_substitute(&e).unwrap();
        let back: ElemSymExpr = tau.to_elementary().unwrap();
        assert!(same_polynomial(&back.poly, &e.poly).unwrap(), "{text}");
    }
    let d = cubic_discriminant().unwrap();
    let tau = tau_substitute(&ElemSymExpr { poly: d, arity: 3, source_vars: vec![] }).unwrap();
    assert!(same_polynomial(&tau.poly, &cubic_discriminant_tau_closed_form()).unwrap());
}

#[test]
fn bivariate_certificates_are_sound_on_samples() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut r = |span: i64| frac(rng.gen_range(-span..=span), rng.gen_range(1..=9));
    assert!(certify_lemma(LemmaId::Ineqef).unwrap().passed());
    let p = ineqef_p();
    for _ in 0..100 {
        let v = p.evaluate(&[("sigma", r(40)), ("tau", r(40))]).unwrap();
        assert!(v.is_positive());
    }
    assert!(certify_lemma(LemmaId::Ineqks).unwrap().passed());
    let q = ineqks_p();
    for _ in 0..100 {
        let rr = r(60).abs();
        let v = q.evaluate(&[("r", rr), ("k", r(60))]).unwrap();
        assert!(v.is_positive());
    }
}

#[test]
fn certificates_are_deterministic_and_round_trip() {
    for id in LemmaId::ALL {
        let a = certify_lemma(id).unwrap();
        let b = certify_lemma(id).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let back: Certificate = serde_json::from_value(a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}

fn random_params(seed: u64) -> PinchingParams {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    PinchingParams::new(
        frac(rng.gen_range(1..=200), 2000),
        frac(rng.gen_range(200..=600), 1000),
        frac(rng.gen_range(1..=100), 1000),
        frac(rng.gen_range(1000..=4000), 100),
    )
    .unwrap()
}

#[test]
fn pinching_coefficients_match_the_bracket() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for trial in 0..100u64 {
        let p = if trial == 0 { PinchingParams::reference() } else { random_params(trial) };
        let (sn, cc) = final_coefficients(&p);
        let n = int(rng.gen_range(6..=1000));
        let s = &n + frac(rng.gen_range(0..=1000), 997);
        let closed = sn.eval(&n).unwrap() * (&s - &n) + cc.eval(&n).unwrap();
        assert_eq!(closed, bracket_at(&p, &n, &s), "trial {trial}");
    }
}

#[test]
fn negativity_pass_implies_negative_values() {
    let mut passes = 0;
    for seed in 0..40u64 {
        let p = if seed == 0 { PinchingParams::reference() } else { random_params(seed) };
        let cert = certify_negative(&p).unwrap();
        if !cert.passed() {
            continue;
        }
        passes += 1;
        for n in [6, 7, 10, 100] {
            assert!(cert.coef_sn.eval(&int(n)).unwrap().is_negative());
            assert!(cert.coef_const.eval(&int(n)).unwrap().is_negative());
        }
    }
    assert!(passes >= 1);
}

#[test]
fn optimizer_results_reverify_and_widths_decrease() {
    let res = optimize_eta(&SearchConfig::default()).unwrap();
    assert!(certify_negative(&res.params).unwrap().passed());
    assert_eq!(res.params.eta, res.best_eta);
    for pair in res.accepted.windows(2) {
        let ((e0, w0), (e1, w1)) = (&pair[0], &pair[1]);
        assert!(e1 < e0);
        assert!(w1 > w0);
    }
}
