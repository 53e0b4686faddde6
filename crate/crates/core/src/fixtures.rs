//! Ground-truth objects built from rational point configurations: degree-`d`
//! pieces of vanishing ideals, border coefficients by interpolation, and the
//! Plücker points they define.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::border_basis::{reduce_monomial, BorderCoefficients};
use crate::error::{Error, Result};
use crate::exactpoly::{Rational, RationalMatrix};
use crate::monomial::{dehomogenize, monomials_of_degree, Exponent, MonomialBasis};
use crate::pluecker::{plucker_from_quotient, quotient_from_subspace, minors_of, PlueckerPoint};

/// A point of `P^n`, possibly with a first-order tangent direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointEntry {
    Simple(Vec<Rational>),
    Double {
        point: Vec<Rational>,
        direction: Vec<Rational>,
    },
}

impl PointEntry {
    pub fn point(&self) -> &[Rational] {
        match self {
            PointEntry::Simple(p) => p,
            PointEntry::Double { point, .. } => point,
        }
    }

    pub fn length(&self) -> usize {
        match self {
            PointEntry::Simple(_) => 1,
            PointEntry::Double { .. } => 2,
        }
    }
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// Distinct points of `P^n` of total length `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    n: usize,
    points: Vec<PointEntry>,
}

impl PointConfiguration {
    /// Directions of length `n` are read as affine and padded with a leading 0.
    pub fn new(n: usize, points: Vec<PointEntry>) -> Result<Self> {
        let mut checked = Vec::with_capacity(points.len());
        for entry in points {
            let p = entry.point();
            if p.len() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    found: p.len(),
                });
            }
            if p.iter().all(Zero::is_zero) {
                return Err(Error::DegenerateConfiguration("zero point".into()));
            }
            let entry = match entry {
                PointEntry::Double { point, direction } => {
                    let direction = match direction.len() {
                        l if l == n + 1 => direction,
                        l if l == n => core::iter::once(Rational::zero()).chain(direction).collect(),
                        l => {
                            return Err(Error::DimensionMismatch {
                                expected: n + 1,
                                found: l,
                            })
                        }
                    };
                    if proportional(&point, &direction) {
                        return Err(Error::DegenerateConfiguration(
                            "direction is zero or proportional to its point".into(),
                        ));
                    }
                    PointEntry::Double { point, direction }
                }
                simple => simple,
            };
            checked.push(entry);
        }
        for (i, a) in checked.iter().enumerate() {
            for b in &checked[i + 1..] {
                if proportional(a.point(), b.point()) {
                    return Err(Error::DegenerateConfiguration("repeated point".into()));
                }
            }
        }
        Ok(PointConfiguration { n, points: checked })
    }

    pub fn simple(n: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(n, points.into_iter().map(PointEntry::Simple).collect())
    }

    /// Affine points of `A^n`, placed in the chart `x0 = 1`.
    pub fn from_affine(n: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::simple(
            n,
            points
                .into_iter()
                .map(|p| core::iter::once(Rational::one()).chain(p).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[PointEntry] {
        &self.points
    }

    /// Total length `μ`.
    pub fn length(&self) -> usize {
        self.points.iter().map(PointEntry::length).sum()
    }

    /// Points dehomogenized by `x0`; all must be simple with `x0 != 0`.
    pub fn affine_points(&self) -> Result<Vec<Vec<Rational>>> {
        self.points
            .iter()
            .map(|e| match e {
                PointEntry::Simple(p) if !p[0].is_zero() => {
                    Ok(p[1..].iter().map(|c| c / &p[0]).collect())
                }
                PointEntry::Simple(_) => Err(Error::DegenerateConfiguration(
                    "point at infinity of the chart x0 = 1".into(),
                )),
                PointEntry::Double { .. } => Err(Error::DegenerateConfiguration(
                    "interpolation needs simple points".into(),
                )),
            })
            .collect()
    }
}

/// `∂(x^e)/∂x_i` at `p`.
pub fn monomial_derivative(e: &Exponent, i: usize, p: &[Rational]) -> Rational {
    match e.div_var(i) {
        None => Rational::zero(),
        Some(rest) => Rational::from_integer(e.get(i).into()) * rest.eval(p),
    }
}

/// One evaluation row per point and one directional-derivative row per
/// double point, over the degree-`d` monomials.
pub fn conditions_matrix(c: &PointConfiguration, d: u32) -> RationalMatrix {
    let sd = monomials_of_degree(c.n + 1, d);
    let mut rows = Vec::new();
    for entry in &c.points {
        let p = entry.point();
        rows.push(sd.iter().map(|m| m.eval(p)).collect::<Vec<_>>());
        if let PointEntry::Double { direction, .. } = entry {
            rows.push(
                sd.iter()
                    .map(|m| {
                        (0..=c.n)
                            .filter(|&i| !direction[i].is_zero())
                            .fold(Rational::zero(), |acc, i| acc + &direction[i] * monomial_derivative(m, i, p))
                    })
                    .collect(),
            );
        }
    }
    RationalMatrix::from_rows(rows, sd.len()).expect("rows have s_d entries")
}

/// Rows spanning the degree-`d` piece of the ideal of `c`.
pub fn vanishing_subspace(c: &PointConfiguration, d: u32) -> Result<RationalMatrix> {
    let mu = c.length();
    if (d as usize) < mu {
        return Err(Error::DegreeBelowLength { d, mu });
    }
    let cond = conditions_matrix(c, d);
    let rank = cond.rank();
    if rank != mu {
        return Err(Error::DegenerateConfiguration(format!(
            "conditions have rank {rank}, expected {mu}"
        )));
    }
    RationalMatrix::from_rows(cond.kernel(), cond.cols())
}

/// `μ × μ` matrix of basis monomials at the affine points.
pub fn evaluation_matrix(basis: &MonomialBasis, points: &[Vec<Rational>]) -> RationalMatrix {
    RationalMatrix::from_fn(points.len(), basis.mu(), |k, j| basis.elements()[j].eval(&points[k]))
}

/// Border coefficients of the ideal of `μ` simple points in the chart `x0 = 1`.
pub fn border_coeffs_from_points(basis: &MonomialBasis, c: &PointConfiguration) -> Result<BorderCoefficients> {
    if c.n != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: c.n,
        });
    }
    let pts = c.affine_points()?;
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
    let mut cols = Vec::new();
    for alpha in border.boundary() {
        let w: Vec<Rational> = pts.iter().map(|p| alpha.eval(p)).collect();
        cols.extend(inv.mul_vec(&w));
    }
    BorderCoefficients::from_vector(border, &cols)
}

/// True iff the linear form with coefficients `u` vanishes at none of the points.
pub fn nonzerodivisor_check(u: &[Rational], c: &PointConfiguration) -> bool {
    c.points.iter().all(|e| {
        !u.iter()
            .zip(e.point())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

/// Plücker point of the degree-`d` piece of the ideal of `c`.
pub fn plucker_fixture(c: &PointConfiguration, d: u32) -> Result<PlueckerPoint> {
    let rows = vanishing_subspace(c, d)?;
    let q = quotient_from_subspace(c.n, d, c.length(), &rows)?;
    Ok(plucker_from_quotient(&q))
}

/// Plücker point of `σ: S_d → A`, `x^m ↦` coordinates of the dehomogenized
/// monomial on `B`, reduced through the multiplication matrices of `z`.
pub fn plucker_from_chart(z: &BorderCoefficients, d: u32) -> Result<PlueckerPoint> {
    let basis = z.basis();
    let sd = monomials_of_degree(basis.n() + 1, d);
    let cols: Vec<Vec<Rational>> = sd.iter().map(|m| reduce_monomial(z, &dehomogenize(m))).collect();
    let sigma = RationalMatrix::from_fn(basis.mu(), sd.len(), |i, j| cols[j][i].clone());
    minors_of(&sigma, basis.n(), d)
}
