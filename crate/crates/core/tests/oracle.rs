use monres_core::corpus::{band_ideal, random_minimal_taylor};
use monres_core::oracle::{
    internal_degree_bound, tor_dimensions, tor_dimensions_with, verify_poincare, GradedRing,
    DEFAULT_PRIME, SECOND_PRIME,
};
use monres_core::series::poincare_minimal_taylor;
use monres_core::{Execution, IntPolynomial, MonomialIdeal, RationalSeries};
use num_bigint::BigInt;
use num_integer::binomial;

fn ideal(s: &str) -> MonomialIdeal {
    s.parse().unwrap()
}

#[test]
fn five_generator_band_is_arbitrated() {
    let i = ideal("vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2");
    let table = tor_dimensions(&i, 3, 12, DEFAULT_PRIME).unwrap();
    assert!(table.all_exact());
    assert_eq!(table.totals(), [1, 5, 15, 42]);

    // the computed split 7XY^2 + 3X^2Y^2 against the alternative 8/2
    let computed = RationalSeries::new(
        IntPolynomial::one_plus_z_pow(5),
        IntPolynomial::from_i64(&[1, 0, -5, -7, -5, -3, -1]),
    )
    .unwrap();
    let alternative = RationalSeries::new(
        IntPolynomial::one_plus_z_pow(5),
        IntPolynomial::from_i64(&[1, 0, -5, -8, -6, -3, -1]),
    )
    .unwrap();
    assert_eq!(poincare_minimal_taylor(&i).unwrap(), computed);
    assert_eq!(computed.expand(3).unwrap()[3], BigInt::from(42));
    assert_eq!(alternative.expand(3).unwrap()[3], BigInt::from(43));
}

#[test]
fn standard_monomial_counts() {
    let r = GradedRing::new(&ideal("vars: x,y,z; x^2*y, y^2*z, z^2"), 6);
    let counts: Vec<usize> = (0..=4)
        .map(|d| r.standard_monomials(d).unwrap().len())
        .collect();
    // Hilbert function of k[x,y,z]/(x^2y, y^2z, z^2)
    // degree 4: x^4, x*y^3, y^4, x^3*z
    assert_eq!(counts, [1, 3, 5, 5, 4]);
}

#[test]
fn low_betti_numbers_on_corpus() {
    for i in random_minimal_taylor(11, 15) {
        let (n, t) = (i.n() as u64, i.t() as u64);
        let table = tor_dimensions(&i, 2, 4, DEFAULT_PRIME).unwrap();
        assert_eq!(table.totals(), [1, n, binomial(n, 2) + t], "{i}");
    }
}

#[test]
fn primes_and_strategies_agree() {
    for i in random_minimal_taylor(5, 6) {
        let d = internal_degree_bound(&i, 3).max(3);
        let a = tor_dimensions_with(&i, 3, d, DEFAULT_PRIME, Execution::Sequential).unwrap();
        let b = tor_dimensions_with(&i, 3, d, SECOND_PRIME, Execution::Parallel).unwrap();
        assert_eq!(a.graded, b.graded, "{i}");
    }
}

#[test]
fn generators_stay_within_degree_bound() {
    // with a generous internal degree nothing appears above the bound
    for i in random_minimal_taylor(3, 8) {
        let table = tor_dimensions(&i, 3, internal_degree_bound(&i, 3) + 3, DEFAULT_PRIME).unwrap();
        for (k, row) in table.graded.iter().enumerate() {
            let bound = internal_degree_bound(&i, k) as usize;
            assert!(row.iter().skip(bound + 1).all(|&x| x == 0), "{i} at {k}");
        }
    }
}

#[test]
fn verification_on_band_and_corpus() {
    let r = verify_poincare(&band_ideal(4, 2).unwrap(), 3, 7, DEFAULT_PRIME).unwrap();
    assert!(r.all_match());
    for i in random_minimal_taylor(21, 10) {
        let d = internal_degree_bound(&i, 3).max(3);
        let r = verify_poincare(&i, 3, d, DEFAULT_PRIME).unwrap();
        assert!(r.all_match(), "{i}");
        assert!(!r.truncated());
    }
}

#[test]
fn complete_intersections_match_closed_form() {
    let mut seen = 0;
    for i in random_minimal_taylor(31, 40) {
        if !monres_core::classification::is_complete_intersection(&i) {
            continue;
        }
        seen += 1;
        let h = 4;
        let table = tor_dimensions(
            &i,
            h,
            internal_degree_bound(&i, h).max(h as u32),
            DEFAULT_PRIME,
        )
        .unwrap();
        let closed = monres_core::series::poincare_complete_intersection(i.n(), i.t()).unwrap();
        let expected: Vec<BigInt> = table.totals().iter().map(|&b| BigInt::from(b)).collect();
        assert_eq!(closed.expand(h).unwrap(), expected, "{i}");
    }
    assert!(seen > 5);
}
