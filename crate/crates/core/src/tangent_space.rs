//! Zariski tangent space of the Hilbert scheme at a point of a border basis
//! chart, as the kernel of the linearized commutation relations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::border_basis::{is_border_basis, multiplication_matrices, normal_form, BorderCoefficients};
use crate::error::{Error, Result};
use crate::exactpoly::{Polynomial, Rational, RationalMatrix};
use crate::fixtures::{evaluation_matrix, monomial_derivative, PointConfiguration};
use crate::monomial::{Exponent, MonomialBasis};

/// Linear system in the unknowns `h1[α|β]`, ordered `α`-major as in
/// [`BorderCoefficients::to_vector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentSystem {
    pub basis: MonomialBasis,
    pub base_point: BorderCoefficients,
    /// One row per entry of each linearized commutator (`i < j`, row-major),
    /// one column per unknown.
    pub matrix: RationalMatrix,
}

impl TangentSystem {
    pub fn unknowns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.matrix.kernel()
    }

    pub fn dimension(&self) -> usize {
        self.unknowns() - self.matrix.rank()
    }

    pub fn contains(&self, h1: &[Rational]) -> bool {
        h1.len() == self.unknowns() && self.matrix.mul_vec(h1).iter().all(Zero::is_zero)
    }
}

fn check_point(basis: &MonomialBasis, z0: &BorderCoefficients) -> Result<()> {
    if z0.basis() != basis {
        return Err(Error::InvalidArgument("coefficients belong to a different basis".into()));
    }
    if !is_border_basis(z0) {
        return Err(Error::NotCommuting);
    }
    Ok(())
}

/// `M¹_{x_i}` for the unit vector at unknown `(α, β)`.
fn unit_perturbation(basis: &MonomialBasis, i: usize, alpha: &Exponent, beta: usize) -> RationalMatrix {
    let mu = basis.mu();
    let mut m = RationalMatrix::zeros(mu, mu);
    for (col, gamma) in basis.elements().iter().enumerate() {
        if &gamma.times_var(i) == alpha {
            m[(beta, col)] = Rational::one();
        }
    }
    m
}

/// Matrix of the linearized relations at `z`, commuting or not.
pub(crate) fn linearized_matrix(z: &BorderCoefficients) -> RationalMatrix {
    let basis = z.basis();
    let mu = basis.mu();
    let n = basis.n();
    let m0 = multiplication_matrices(z);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let unknowns: Vec<(Exponent, usize)> = z
        .border()
        .boundary()
        .iter()
        .flat_map(|a| (0..mu).map(move |b| (a.clone(), b)))
        .collect();
    let mut out = RationalMatrix::zeros(pairs.len() * mu * mu, unknowns.len());
    for (col, (alpha, beta)) in unknowns.iter().enumerate() {
        let m1: Vec<RationalMatrix> = (0..n).map(|i| unit_perturbation(basis, i, alpha, *beta)).collect();
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if m1[i].is_zero() && m1[j].is_zero() {
                continue;
            }
            let prod = |a: &RationalMatrix, b: &RationalMatrix| a.mul(b).expect("square matrices");
            let lin = prod(&m1[i], &m0[j])
                .sub(&prod(&m0[j], &m1[i]))
                .sub(&prod(&m1[j], &m0[i]).sub(&prod(&m0[i], &m1[j])));
            for r in 0..mu {
                for c in 0..mu {
                    out[(p * mu * mu + r * mu + c, col)] = lin[(r, c)].clone();
                }
            }
        }
    }
    out
}

pub fn tangent_system(basis: &MonomialBasis, z0: &BorderCoefficients) -> Result<TangentSystem> {
    check_point(basis, z0)?;
    Ok(TangentSystem {
        basis: basis.clone(),
        base_point: z0.clone(),
        matrix: linearized_matrix(z0),
    })
}

pub fn tangent_dimension(basis: &MonomialBasis, z0: &BorderCoefficients) -> Result<usize> {
    Ok(tangent_system(basis, z0)?.dimension())
}

/// `N⁰` and `H⁰` on `⟨B⁺⟩`, as matrices over the monomials `plus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionMaps {
    pub plus: Vec<Exponent>,
    pub n0: RationalMatrix,
    pub h0: RationalMatrix,
}

pub fn projection_maps(z0: &BorderCoefficients) -> ProjectionMaps {
    let plus = z0.border().plus();
    let basis = z0.basis();
    let k = plus.len();
    let pos = |e: &Exponent| plus.binary_search(e).expect("B is contained in B+");
    let mut n0 = RationalMatrix::zeros(k, k);
    for (col, m) in plus.iter().enumerate() {
        if basis.contains(m) {
            n0[(col, col)] = Rational::one();
        } else {
            for beta in basis.elements() {
                n0[(pos(beta), col)] = z0.get(m, beta).clone();
            }
        }
    }
    let h0 = RationalMatrix::identity(k).sub(&n0);
    ProjectionMaps { plus, n0, h0 }
}

/// `h1` applied to a polynomial supported on `B⁺`.
fn apply_h1(h1: &BorderCoefficients, p: &Polynomial) -> Polynomial {
    let basis = h1.basis();
    let mut out = Polynomial::zero(basis.n());
    for (m, c) in p.terms() {
        if basis.contains(m) {
            continue;
        }
        debug_assert!(h1.border().boundary_index(m).is_some());
        for beta in basis.elements() {
            out.add_term(beta.clone(), c * h1.get(m, beta));
        }
    }
    out
}

fn n0_of(z0: &BorderCoefficients, m: &Exponent) -> Polynomial {
    let basis = z0.basis();
    if basis.contains(m) {
        return Polynomial::monomial(m.clone());
    }
    Polynomial::from_coefficients(basis.n(), basis.elements(), &z0.column(m))
}

/// Whether every generating syzygy of the border basis `z0` is sent to zero
/// modulo the ideal when `H⁰` is replaced by `H¹ = h1`.
pub fn syzygy_images_vanish(basis: &MonomialBasis, z0: &BorderCoefficients, h1: &[Rational]) -> Result<bool> {
    check_point(basis, z0)?;
    let h1 = BorderCoefficients::from_vector(z0.border().clone(), h1)?;
    let n = basis.n();
    let var = |i: usize| Exponent::unit(n, i);
    for m in basis.elements() {
        for i in 0..n {
            for k in i + 1..n {
                let xi_m = Polynomial::monomial(m.times_var(i));
                let xk_m = Polynomial::monomial(m.times_var(k));
                let e = &(&apply_h1(&h1, &xk_m).mul_monomial(&var(i)) - &apply_h1(&h1, &xi_m).mul_monomial(&var(k)))
                    + &(&apply_h1(&h1, &n0_of(z0, &m.times_var(k)).mul_monomial(&var(i)))
                        - &apply_h1(&h1, &n0_of(z0, &m.times_var(i)).mul_monomial(&var(k))));
                if normal_form(z0, &e)?.iter().any(|c| !c.is_zero()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Derivatives of the interpolated border coefficients as each point moves
/// along each coordinate axis of the chart `x0 = 1`; `n·μ` vectors, point-major.
pub fn point_motion_directions(basis: &MonomialBasis, points: &PointConfiguration) -> Result<Vec<Vec<Rational>>> {
    if points.n() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: points.n(),
        });
    }
    let pts = points.affine_points()?;
    if pts.len() != basis.mu() {
        return Err(Error::SizeMismatch(format!(
            "{} points for a basis of {} monomials",
            pts.len(),
            basis.mu()
        )));
    }
    let inv = evaluation_matrix(basis, &pts)
        .inverse()
        .ok_or(Error::SingularEvaluation)?;
    let border = basis.border();
    let z: Vec<Vec<Rational>> = border
        .boundary()
        .iter()
        .map(|a| inv.mul_vec(&pts.iter().map(|p| a.eval(p)).collect::<Vec<_>>()))
        .collect();
    let mut out = Vec::with_capacity(pts.len() * basis.n());
    for (k, p) in pts.iter().enumerate() {
        for i in 0..basis.n() {
            let dv: Vec<Rational> = basis.elements().iter().map(|b| monomial_derivative(b, i, p)).collect();
            let mut h = Vec::with_capacity(border.len() * basis.mu());
            for (alpha, za) in border.boundary().iter().zip(&z) {
                // only row k of dw - dV·z is nonzero
                let r = monomial_derivative(alpha, i, p)
                    - dv.iter().zip(za).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                let mut rhs = vec![Rational::zero(); basis.mu()];
                rhs[k] = r;
                h.extend(inv.mul_vec(&rhs));
            }
            out.push(h);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border_basis::{border_relation, chart_equations};
    use crate::exactpoly::{int, MultiPoly, VarName};
    use crate::fixtures::border_coeffs_from_points;
    use proptest::prelude::*;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn two_point() -> (MonomialBasis, BorderCoefficients) {
        let basis = MonomialBasis::parse("1,x", 2).unwrap();
        let c = PointConfiguration::from_affine(2, vec![pt(&[0, 0]), pt(&[1, 1])]).unwrap();
        let z = border_coeffs_from_points(&basis, &c).unwrap();
        (basis, z)
    }

    fn span_rank(vs: &[Vec<Rational>]) -> usize {
        if vs.is_empty() {
            return 0;
        }
        RationalMatrix::from_rows(vs.to_vec(), vs[0].len()).unwrap().rank()
    }

    #[test]
    fn dimension_at_origin_chart_point() {
        let basis = MonomialBasis::parse("1,x", 2).unwrap();
        let z0 = BorderCoefficients::zero(basis.border());
        let t = tangent_system(&basis, &z0).unwrap();
        assert_eq!(t.unknowns(), 6);
        assert_eq!(t.dimension(), 4);
    }

    #[test]
    fn dimension_at_two_points() {
        let (basis, z) = two_point();
        assert_eq!(tangent_dimension(&basis, &z), Ok(4));
    }

    #[test]
    fn matches_jacobian_of_chart_equations() {
        let (basis, z) = two_point();
        let eqs = chart_equations(&basis).equations;
        let values = z.as_var_map();
        let unknowns: Vec<VarName> = z.values().keys().map(|(a, b)| VarName::Z(a.clone(), b.clone())).collect();
        let jac: Vec<Vec<Rational>> = eqs
            .iter()
            .map(|e| {
                unknowns
                    .iter()
                    .map(|v| {
                        // exact partial derivative through a perturbation in a second variable
                        let eps = VarName::U(0);
                        let shifted = e.compose(|w| {
                            let base = MultiPoly::constant(values[w].clone());
                            Some(if w == v { &base + &MultiPoly::var(eps.clone()) } else { base })
                        });
                        shifted.coeff(&crate::exactpoly::Term::var(eps))
                    })
                    .collect()
            })
            .collect();
        let jac = RationalMatrix::from_rows(jac, unknowns.len()).unwrap();
        let t = tangent_system(&basis, &z).unwrap();
        assert_eq!(jac.rank(), t.matrix.rank());
        assert_eq!(jac.stack(&t.matrix).unwrap().rank(), t.matrix.rank());
    }

    #[test]
    fn p1_has_no_relations() {
        let basis = MonomialBasis::initial_segment(1, 3);
        let z0 = BorderCoefficients::zero(basis.border());
        let t = tangent_system(&basis, &z0).unwrap();
        assert_eq!(t.matrix.rows(), 0);
        assert_eq!(t.dimension(), 3);
    }

    #[test]
    fn rejects_non_commuting() {
        let basis = MonomialBasis::parse("1,x", 2).unwrap();
        let z = BorderCoefficients::zero(basis.border());
        let z = z
            .with_value(&Exponent::new(vec![0, 1]), &Exponent::zero(2), int(1))
            .unwrap()
            .with_value(&Exponent::new(vec![1, 1]), &Exponent::new(vec![1, 0]), int(5))
            .unwrap();
        assert!(!is_border_basis(&z));
        assert_eq!(tangent_dimension(&basis, &z), Err(Error::NotCommuting));
    }

    #[test]
    fn projections_split_identity() {
        let (_, z) = two_point();
        let p = projection_maps(&z);
        let sum = RationalMatrix::identity(p.plus.len()).sub(&p.n0).sub(&p.h0);
        assert!(sum.is_zero());
        for (j, m) in p.plus.iter().enumerate() {
            if z.basis().contains(m) {
                assert!(p.h0.column(j).iter().all(Zero::is_zero));
            } else {
                let rel = border_relation(&z, m);
                let col: Vec<Rational> = p.plus.iter().map(|e| rel.coeff(e)).collect();
                assert_eq!(p.h0.column(j), col);
            }
        }
    }

    #[test]
    fn oracle_dimensions() {
        let cases: [(usize, &str, Vec<Vec<i64>>); 3] = [
            (2, "1,x", vec![vec![0, 0], vec![1, 1]]),
            (3, "1,x", vec![vec![0, 2, 1], vec![1, 0, 3]]),
            (2, "1,x,y", vec![vec![0, 0], vec![1, 2], vec![3, 1]]),
        ];
        for (n, b, points) in cases {
            let basis = MonomialBasis::parse(b, n).unwrap();
            let c = PointConfiguration::from_affine(n, points.iter().map(|p| pt(p)).collect()).unwrap();
            let z = border_coeffs_from_points(&basis, &c).unwrap();
            let t = tangent_system(&basis, &z).unwrap();
            let dirs = point_motion_directions(&basis, &c).unwrap();
            assert_eq!(dirs.len(), n * basis.mu());
            assert!(dirs.iter().all(|h| t.contains(h)));
            assert_eq!(span_rank(&dirs), n * basis.mu());
            assert_eq!(t.dimension(), n * basis.mu(), "{b} in n={n}");
        }
    }

    #[test]
    fn motion_matches_finite_difference() {
        let basis = MonomialBasis::parse("1,x,y", 2).unwrap();
        let base = vec![pt(&[0, 0]), pt(&[1, 2]), pt(&[3, 1])];
        let c = PointConfiguration::from_affine(2, base.clone()).unwrap();
        let dirs = point_motion_directions(&basis, &c).unwrap();
        // interpolation is rational in t; compare the t-derivative through a quadratic fit
        let z_at = |t: &Rational| {
            let mut moved = base.clone();
            moved[1][0] = &moved[1][0] + t;
            let c = PointConfiguration::from_affine(2, moved).unwrap();
            border_coeffs_from_points(&basis, &c).unwrap().to_vector()
        };
        let h = Rational::new(1.into(), 1_000_000.into());
        let plus = z_at(&h);
        let minus = z_at(&-h.clone());
        for (k, d) in dirs[2].iter().enumerate() {
            let central = (&plus[k] - &minus[k]) / (int(2) * &h);
            let err = num_traits::Signed::abs(&(&central - d));
            assert!(err < Rational::new(1.into(), 1000.into()), "{k}: {central} vs {d}");
        }
    }

    #[test]
    fn zero_vector_passes_syzygy_check() {
        let (basis, z) = two_point();
        assert_eq!(syzygy_images_vanish(&basis, &z, &vec![int(0); 6]), Ok(true));
    }

    fn small() -> impl Strategy<Value = i64> {
        -4i64..=4
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn kernel_iff_syzygies(
            pts in proptest::collection::vec(proptest::collection::vec(small(), 2), 3),
            coeffs in proptest::collection::vec(small(), 12),
            pick in proptest::collection::vec(small(), 12),
        ) {
            let basis = MonomialBasis::parse("1,x,y", 2).unwrap();
            let c = PointConfiguration::from_affine(2, pts.iter().map(|p| pt(p)).collect());
            prop_assume!(c.is_ok());
            let c = c.unwrap();
            let z = border_coeffs_from_points(&basis, &c);
            prop_assume!(z.is_ok());
            let z = z.unwrap();
            let t = tangent_system(&basis, &z).unwrap();
            let k = t.kernel();
            let unknowns = t.unknowns();
            let mut inside = vec![int(0); unknowns];
            for (v, c) in k.iter().zip(coeffs.iter().cycle()) {
                for (a, b) in inside.iter_mut().zip(v) {
                    *a += int(*c) * b;
                }
            }
            prop_assert!(syzygy_images_vanish(&basis, &z, &inside).unwrap());
            let arbitrary: Vec<Rational> = pick.iter().cycle().take(unknowns).map(|&x| int(x)).collect();
            prop_assert_eq!(syzygy_images_vanish(&basis, &z, &arbitrary).unwrap(), t.contains(&arbitrary));
        }

        #[test]
        fn linear_in_base_point(a in proptest::collection::vec(small(), 6), b in proptest::collection::vec(small(), 6)) {
            let basis = MonomialBasis::parse("1,x", 2).unwrap();
            let border = basis.border();
            let za: Vec<Rational> = a.iter().map(|&x| int(x)).collect();
            let zb: Vec<Rational> = b.iter().map(|&x| int(x)).collect();
            let zs: Vec<Rational> = za.iter().zip(&zb).map(|(x, y)| x + y).collect();
            let m = |v: &[Rational]| linearized_matrix(&BorderCoefficients::from_vector(border.clone(), v).unwrap());
            let zero = m(&vec![int(0); 6]);
            let lhs = m(&zs).sub(&m(&za)).sub(&m(&zb).sub(&zero));
            prop_assert!(lhs.is_zero());
        }
    }
}
