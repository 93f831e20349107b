use monres_core::classification::{d_window_structure, quadratic_tensor_decomposition, Verdict};
use monres_core::homology::indecomposable_generators;
use monres_core::polarization::{exponent_profile, poincare_depolarize, polarize};
use monres_core::series::{
    poincare_complete_intersection, poincare_formula, poincare_trivially_golod,
};
use monres_core::taylor::{subset_from_one_based, Subset, DEFAULT_MAX_T};
use monres_core::{
    homology_hilbert_series, is_taylor_minimal, BigradedPolynomial, Execution, IntPolynomial,
    MonomialIdeal, RationalSeries,
};
use num_bigint::BigInt;
use num_integer::binomial;

fn ideal(s: &str) -> MonomialIdeal {
    s.parse().unwrap()
}

fn series(n: &[i64], d: &[i64]) -> RationalSeries {
    RationalSeries::new(IntPolynomial::from_i64(n), IntPolynomial::from_i64(d)).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn band5() -> MonomialIdeal {
    ideal("vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2")
}

#[test]
fn three_generator_ring_end_to_end() {
    let i = ideal("vars: x,y,z; x^2*y, y^2*z, z^2");
    let h = homology_hilbert_series(&i).unwrap();
    assert_eq!(h.to_string(), "1 + 3*X*Y + 2*X*Y^2 + X^2*Y^2 + X*Y^3");
    let f = poincare_formula(&i, DEFAULT_MAX_T, Execution::default()).unwrap();
    assert_eq!(f.to_string(), "(1+z)^3 / (1 - 3*z^2 - 2*z^3)");
    let p = f.reduced().unwrap();
    assert_eq!(p, series(&[1, 3, 3, 1], &[1, 0, -3, -2]));
    assert_eq!(p.expand(6).unwrap(), ints(&[1, 3, 6, 12, 24, 48, 96]));
}

#[test]
fn principal_rings() {
    let p = monres_core::series::poincare_minimal_taylor(&ideal("vars: x; x")).unwrap();
    assert_eq!(p, RationalSeries::one());
    let p = monres_core::series::poincare_minimal_taylor(&ideal("vars: x; x^2")).unwrap();
    assert_eq!(p.to_string(), "1 / (1 - z)");
    assert_eq!(p.expand(8).unwrap(), ints(&[1; 9]));
}

#[test]
fn polarization_of_three_generators() {
    let i = ideal("vars: x1,x2,x3; x1^3, x2^2*x3, x1*x2*x3");
    let pol = polarize(&i);
    assert_eq!(exponent_profile(&i).total, 6);
    assert_eq!(
        pol.target.to_string(),
        "vars: y1,y2,y3,y4,y5,y6; y1*y2*y3, y4*y5*y6, y1*y4*y6"
    );
    assert_eq!(pol.slots, vec![0..3, 3..5, 5..6]);
    assert_eq!(pol.added_variables(), 3);
}

#[test]
fn depolarized_series_matches_direct() {
    let i = ideal("vars: x,y,z; x^2*y, y^2*z, z^2");
    let pol = polarize(&i);
    let direct = monres_core::series::poincare_minimal_taylor(&i).unwrap();
    let squarefree = monres_core::series::poincare_minimal_taylor(&pol.target).unwrap();
    assert_eq!(
        poincare_depolarize(&squarefree, pol.target.n(), i.n()).unwrap(),
        direct
    );
}

#[test]
fn five_generator_band_homology() {
    let i = band5();
    let expected: Vec<Subset> = {
        let skip: Vec<Subset> = [&[1, 4][..], &[1, 5], &[2, 5], &[1, 2, 5], &[1, 4, 5]]
            .iter()
            .map(|s| subset_from_one_based(s))
            .collect();
        (1..32).filter(|s| !skip.contains(s)).collect()
    };
    assert_eq!(indecomposable_generators(&i).unwrap(), expected);

    let h = homology_hilbert_series(&i).unwrap();
    for m in 1..=5u32 {
        assert_eq!(h.y_slice_sum(m), BigInt::from(binomial(5u64, m as u64)));
    }
    // the coprime pairs {1,4}, {1,5}, {2,5} are the only two-element
    // subsets with two components
    assert_eq!(
        (h.coeff(1, 2), h.coeff(2, 2)),
        (BigInt::from(7), BigInt::from(3))
    );
    assert_eq!(
        (h.coeff(1, 3), h.coeff(2, 3)),
        (BigInt::from(8), BigInt::from(2))
    );

    let w = d_window_structure(&i, Some(&[0, 1, 2, 3, 4]))
        .unwrap()
        .unwrap();
    assert_eq!(w.d, 3);
    assert!(w.window_gcd_d);
    assert!(!w.window_gcd_d_plus_1);
}

#[test]
fn quadratic_decomposition_and_product() {
    let i = ideal("vars: x1,x2,x3,x4,x5; x1^2, x1*x2, x1*x4, x3^2, x5^2");
    assert!(is_taylor_minimal(&i).is_ok());
    let f = quadratic_tensor_decomposition(&i).unwrap();
    let shown: Vec<(String, Verdict)> =
        f.iter().map(|x| (x.ideal.to_string(), x.verdict)).collect();
    assert_eq!(
        shown,
        vec![
            (
                "vars: x1,x2,x4; x1^2, x1*x2, x1*x4".to_string(),
                Verdict::TriviallyGolod
            ),
            ("vars: x3; x3^2".to_string(), Verdict::CompleteIntersection),
            ("vars: x5; x5^2".to_string(), Verdict::CompleteIntersection),
        ]
    );
    let r1 = poincare_trivially_golod(3, 3).unwrap();
    assert_eq!(r1, series(&[1, 3, 3, 1], &[1, 0, -3, -3, -1]));
    let product = r1
        .multiply(&poincare_complete_intersection(1, 1).unwrap())
        .multiply(&poincare_complete_intersection(1, 1).unwrap());
    assert_eq!(
        product,
        monres_core::series::poincare_minimal_taylor(&i).unwrap()
    );
}

#[test]
fn bigraded_display() {
    let h = BigradedPolynomial::from_terms([(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    assert_eq!(h.to_string(), "1 + 2*X*Y + X^2*Y^2");
    assert_eq!(h.eval_at_ones(), BigInt::from(4));
}
