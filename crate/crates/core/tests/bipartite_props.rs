use bicheb::bipartite::{build_solution, classify_shape, compose_outer, verify_identity, Branch, Normalization, Shape};
use bicheb::poly::Poly;
use bicheb::quartic::QuarticCoeffs;
use bicheb::rational::{int, ratio, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

fn quartic_of(p: &Poly) -> QuarticCoeffs {
    QuarticCoeffs::new(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0))
}

/// A cubic with one nonzero critical point `r` at level `m = k − r³/2` and
/// its exceptional extremum `u(0) = k`; returns `(u, m², p)` with
/// `p = 9x²(u² − m²)/u′²`.
fn cubic_instance(r: &Rational, k: &Rational) -> (Poly, Rational, Poly) {
    let u = Poly::new(vec![k.clone(), int(0), -(ratio(3, 2) * r), int(1)]);
    let m = k - r * r * r / int(2);
    let m2 = &m * &m;
    let num = &(&u * &u) - &Poly::constant(m2.clone());
    let xr = Poly::new(vec![-r.clone(), int(1)]);
    let p = num.exact_div(&(&xr * &xr)).expect("double root at r");
    (u, m2, p)
}

fn cubic_family() -> impl Strategy<Value = (Rational, Rational)> {
    (nonzero_rational(), nonzero_rational()).prop_filter("exceptional value off the band", |(r, k)| {
        let m = k - r * r * r / int(2);
        k.abs() > m.abs() && !m.is_zero()
    })
}

/// `c` with `c1 = c3 = 0`: every such quartic admits a degree-2 solution.
fn even_family() -> impl Strategy<Value = QuarticCoeffs> {
    (nonzero_rational(), nonzero_rational()).prop_filter_map("m nonzero", |(c2, c4)| {
        let c = QuarticCoeffs::new(int(0), c2, int(0), c4);
        build_solution(2, &c, Normalization::UnitLeading).ok().map(|_| c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_cubics_are_recovered((r, k) in cubic_family()) {
        let (u, m2, p) = cubic_instance(&r, &k);
        let sol = build_solution(3, &quartic_of(&p), Normalization::UnitLeading).unwrap();
        prop_assert_eq!(sol.unit_leading_u(), &u);
        prop_assert_eq!(sol.unit_leading_m2(), m2);
        prop_assert_eq!(sol.branch(), Branch::Circular);
    }

    #[test]
    fn identity_and_degree_multiplicativity(c in even_family(), big_n in 1u32..=5) {
        let sol = build_solution(2, &c, Normalization::UnitLeading).unwrap();
        prop_assume!(sol.branch() != Branch::Hyperbolic || big_n % 2 == 1);
        let (g, conv) = compose_outer(&sol, big_n).unwrap();
        prop_assert_eq!(g.degree(), Some(2 * big_n as usize));
        let residual = verify_identity(&g, conv, &c.poly(), 2 * big_n, &sol.unit_leading_m2(), sol.branch());
        prop_assert!(residual.is_zero());
    }

    #[test]
    fn scaling_covariance((r, k) in cubic_family(), lambda in nonzero_rational()) {
        let (_, _, p) = cubic_instance(&r, &k);
        let c = quartic_of(&p);
        let sol = build_solution(3, &c, Normalization::UnitLeading).unwrap();
        let scaled = build_solution(3, &c.rescaled(&lambda), Normalization::UnitLeading).unwrap();
        let lx = Poly::new(vec![int(0), lambda.clone()]);
        let l3 = &lambda * &lambda * &lambda;
        let expected = sol.unit_leading_u().compose(&lx).scale(&l3.recip());
        prop_assert_eq!(scaled.unit_leading_u(), &expected);
        prop_assert_eq!(scaled.unit_leading_m2() * &l3 * &l3, sol.unit_leading_m2());
    }

    #[test]
    fn hyperbolic_never_occurs_for_odd_s(
        (r, k) in cubic_family(),
        c1 in nonzero_rational(),
        c4 in nonzero_rational(),
        big_n in prop::sample::select(vec![1u32, 3, 5]),
    ) {
        // Constructed instances, lifted to s = 3N by composition.
        let (_, _, p) = cubic_instance(&r, &k);
        let sol = build_solution(3 * big_n, &quartic_of(&p), Normalization::UnitLeading).unwrap();
        prop_assert!(!sol.d().is_negative());

        // Instances obtained by solving the two conditions for c2 and c3.
        let c2 = -(ratio(3, 4) * &c1 * &c1);
        let probe = QuarticCoeffs::new(c1.clone(), c2.clone(), int(0), c4.clone());
        let a = bicheb::bipartite::coefficients_from_recurrence(3, &probe).unwrap().a;
        prop_assume!(!a[2].is_zero());
        let c = QuarticCoeffs::new(c1, c2, -(int(3) * &c4) / &a[2], c4);
        let sol = build_solution(3, &c, Normalization::UnitLeading).unwrap();
        prop_assert!(!sol.d().is_negative());
    }

    #[test]
    fn four_real_roots_give_bipartite_shape((r, k) in cubic_family(), big_n in 1u32..=3) {
        let (_, _, p) = cubic_instance(&r, &k);
        let roots = bicheb::roots::real_roots_default(&p).unwrap();
        prop_assume!(roots.len() == 4 && roots.iter().all(|x| x.multiplicity == 1));
        let sol = build_solution(3, &quartic_of(&p), Normalization::UnitLeading).unwrap();
        prop_assert!(sol.d().is_positive());
        let (g, conv) = compose_outer(&sol, big_n).unwrap();
        let shape = classify_shape(&g, conv, &sol.unit_leading_m2());
        prop_assert!(matches!(shape, Shape::Bipartite(ref e) if e.location.is_zero()), "{:?}", shape);
    }
}

#[test]
fn unit_amplitude_matches_unit_leading() {
    let c = QuarticCoeffs::from_ints([0, -5, 0, 4]);
    let lead = build_solution(2, &c, Normalization::UnitLeading).unwrap();
    let amp = build_solution(2, &c, Normalization::UnitAmplitude).unwrap();
    assert!(amp.m2().is_one());
    let u = amp.u_rational().unwrap();
    assert_eq!(u.scale(&ratio(3, 2)), *lead.unit_leading_u());
}
