use hilbkit_core::border_basis::{
    border_relation, chart_equations, is_border_basis, multiplication_matrices, normal_form, reduce_monomial,
    BorderCoefficients,
};
use hilbkit_core::exactpoly::{int, Polynomial, Rational, RationalMatrix};
use hilbkit_core::fixtures::{
    border_coeffs_from_points, plucker_fixture, plucker_from_chart, vanishing_subspace, PointConfiguration, PointEntry,
};
use hilbkit_core::monomial::{monomials_of_degree, Exponent, MonomialBasis};
use hilbkit_core::pluecker::{check_plucker, cramer_residual, quotient_from_subspace};
use num_traits::Zero;
use proptest::prelude::*;

fn pt(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn coord() -> impl Strategy<Value = i64> {
    -5i64..=5
}

fn affine_points(n: usize, mu: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(coord(), n), mu)
}

fn chart_point(basis: &MonomialBasis, pts: &[Vec<i64>]) -> Option<BorderCoefficients> {
    let c = PointConfiguration::from_affine(basis.n(), pts.iter().map(|p| pt(p)).collect()).ok()?;
    border_coeffs_from_points(basis, &c).ok()
}

/// `σ(m)` by applying the multiplication matrices in the given variable order.
fn along(z: &BorderCoefficients, order: &[usize]) -> Vec<Rational> {
    let mats = multiplication_matrices(z);
    let mut v = vec![Rational::zero(); z.basis().mu()];
    v[z.basis().index_of(&Exponent::zero(z.basis().n())).unwrap()] = int(1);
    for &i in order {
        v = mats[i].mul_vec(&v);
    }
    v
}

fn bases() -> Vec<MonomialBasis> {
    vec![
        MonomialBasis::parse("1,x", 2).unwrap(),
        MonomialBasis::parse("1,y", 2).unwrap(),
        MonomialBasis::parse("1,x,y", 2).unwrap(),
        MonomialBasis::parse("1,x,x^2", 2).unwrap(),
        MonomialBasis::parse("1,y,y^2", 2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn interpolated_points_lie_on_the_chart(which in 0usize..5, pts in affine_points(2, 3)) {
        let basis = &bases()[which];
        let z = chart_point(basis, &pts[..basis.mu()]);
        prop_assume!(z.is_some());
        let z = z.unwrap();
        prop_assert!(is_border_basis(&z));
        let values = z.as_var_map();
        for eq in chart_equations(basis).equations {
            prop_assert!(eq.substitute(&values).is_zero(), "{}", eq);
        }
    }

    #[test]
    fn normal_form_is_independent_of_factorization(
        which in 0usize..5,
        pts in affine_points(2, 3),
        vars in proptest::collection::vec(0usize..2, 0..=6),
        rot in 0usize..6,
    ) {
        let basis = &bases()[which];
        let z = chart_point(basis, &pts[..basis.mu()]);
        prop_assume!(z.is_some());
        let z = z.unwrap();
        let mut m = Exponent::zero(2);
        for &i in &vars {
            m = m.times_var(i);
        }
        let greedy = reduce_monomial(&z, &m);
        let mut order = vars.clone();
        prop_assert_eq!(&along(&z, &order), &greedy);
        order.reverse();
        prop_assert_eq!(&along(&z, &order), &greedy);
        if !order.is_empty() {
            let k = rot % order.len();
            order.rotate_left(k);
            prop_assert_eq!(&along(&z, &order), &greedy);
        }
        prop_assert_eq!(normal_form(&z, &Polynomial::monomial(m)).unwrap(), greedy);
    }

    #[test]
    fn normal_form_is_a_projection_on_b_plus(which in 0usize..5, pts in affine_points(2, 3), cs in proptest::collection::vec(coord(), 12)) {
        let basis = &bases()[which];
        let z = chart_point(basis, &pts[..basis.mu()]);
        prop_assume!(z.is_some());
        let z = z.unwrap();
        let plus = z.border().plus();
        let p = Polynomial::from_terms(2, plus.iter().cloned().zip(cs.iter().cycle().map(|&c| int(c))));
        let v = normal_form(&z, &p).unwrap();
        let back = Polynomial::from_coefficients(2, basis.elements(), &v);
        prop_assert_eq!(normal_form(&z, &back).unwrap(), v);
        for alpha in z.border().boundary() {
            prop_assert!(normal_form(&z, &border_relation(&z, alpha)).unwrap().iter().all(Zero::is_zero));
        }
    }
}

fn configuration(n: usize, points: &[Vec<i64>], double: Option<(usize, Vec<i64>)>) -> Option<PointConfiguration> {
    let entries = points
        .iter()
        .enumerate()
        .map(|(k, p)| match &double {
            Some((j, dir)) if *j == k => PointEntry::Double {
                point: pt(p),
                direction: pt(dir),
            },
            _ => PointEntry::Simple(pt(p)),
        })
        .collect();
    PointConfiguration::new(n, entries).ok()
}

fn rank_of(rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    RationalMatrix::from_rows(rows, cols).unwrap().rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ideal_pieces_persist_and_are_generated_in_degree_d(
        points in proptest::collection::vec(proptest::collection::vec(coord(), 3), 1..=3),
        dir in proptest::collection::vec(coord(), 3),
        with_double in any::<bool>(),
    ) {
        let double = if with_double { Some((0, dir)) } else { None };
        let c = configuration(2, &points, double);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let mu = c.length();
        prop_assume!(mu <= 3);
        let d = mu as u32;
        let low = vanishing_subspace(&c, d);
        prop_assume!(low.is_ok());
        let low = low.unwrap();
        let high = vanishing_subspace(&c, d + 1).unwrap();
        let sd = monomials_of_degree(3, d);
        let sd1 = monomials_of_degree(3, d + 1);
        prop_assert_eq!(low.rows(), sd.len() - mu);
        prop_assert_eq!(high.rows(), sd1.len() - mu);
        let mut shifted = Vec::new();
        for k in 0..3 {
            for row in low.row_vectors() {
                let p = Polynomial::from_coefficients(3, &sd, &row).mul_monomial(&Exponent::unit(3, k));
                shifted.push(p.coefficients(&sd1));
            }
        }
        let generated = rank_of(shifted.clone(), sd1.len());
        prop_assert_eq!(generated, high.rows());
        shifted.extend(high.row_vectors());
        prop_assert_eq!(rank_of(shifted, sd1.len()), high.rows());
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cramer_residual_vanishes_on_fixtures(
        points in proptest::collection::vec(proptest::collection::vec(coord(), 3), 2..=3),
        family in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 10), 3),
        a in proptest::collection::vec(-3i64..=3, 10),
    ) {
        let c = configuration(2, &points, None);
        prop_assume!(c.is_some());
        let c = c.unwrap();
        let mu = c.length();
        let d = mu as u32;
        let sd = monomials_of_degree(3, d);
        let rows = vanishing_subspace(&c, d).unwrap();
        let q = quotient_from_subspace(2, d, mu, &rows).unwrap();
        let poly = |cs: &[i64]| {
            let coeffs: Vec<Rational> = cs.iter().cycle().take(sd.len()).map(|&x| int(x)).collect();
            Polynomial::from_coefficients(3, &sd, &coeffs)
        };
        let fam: Vec<Polynomial> = family[..mu].iter().map(|f| poly(f)).collect();
        let residual = cramer_residual(&q, &fam, &poly(&a)).unwrap();
        prop_assert!(residual.iter().all(Zero::is_zero));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn chart_and_ideal_give_the_same_plucker_point(which in 0usize..5, pts in affine_points(2, 3), extra in 0u32..2) {
        let basis = &bases()[which];
        let pts = &pts[..basis.mu()];
        let z = chart_point(basis, pts);
        prop_assume!(z.is_some());
        let z = z.unwrap();
        let c = PointConfiguration::from_affine(2, pts.iter().map(|p| pt(p)).collect()).unwrap();
        let d = basis.mu() as u32 + extra;
        let from_ideal = plucker_fixture(&c, d).unwrap();
        prop_assert!(check_plucker(&from_ideal));
        prop_assert_eq!(plucker_from_chart(&z, d).unwrap(), from_ideal);
    }
}

#[test]
fn two_point_substitution_relations() {
    let basis = MonomialBasis::parse("1,x", 2).unwrap();
    let c = PointConfiguration::simple(2, vec![pt(&[1, 0, 0]), pt(&[1, 1, 1])]).unwrap();
    let z = border_coeffs_from_points(&basis, &c).unwrap();
    let x = Exponent::new(vec![1, 0]);
    let y = Exponent::new(vec![0, 1]);
    let one = Exponent::zero(2);
    let xx = Exponent::new(vec![2, 0]);
    let xy = Exponent::new(vec![1, 1]);
    assert_eq!(z.get(&xy, &one), &(z.get(&xx, &one) * z.get(&y, &x)));
    assert_eq!(z.get(&xy, &x), &(z.get(&y, &one) + z.get(&y, &x) * z.get(&xx, &x)));
}
