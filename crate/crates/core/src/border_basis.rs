//! Multiplication matrices of a border basis, the commutation equations of
//! the chart, normal forms and ideal membership.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{canonical_equation_set, MultiPoly, Polynomial, Rational, RationalMatrix, VarName};
use crate::monomial::{BorderSet, Exponent, MonomialBasis};

/// Numeric border coefficients `z[α|β]` for `α ∈ ∂B`, `β ∈ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderCoefficients {
    border: BorderSet,
    values: BTreeMap<(Exponent, Exponent), Rational>,
}

impl BorderCoefficients {
    /// Requires exactly one value per pair `(α, β)`.
    pub fn new(border: BorderSet, values: BTreeMap<(Exponent, Exponent), Rational>) -> Result<Self> {
        for alpha in border.boundary() {
            for beta in border.basis().elements() {
                if !values.contains_key(&(alpha.clone(), beta.clone())) {
                    return Err(Error::IncompleteCoefficients(format!(
                        "{}",
                        VarName::Z(alpha.clone(), beta.clone())
                    )));
                }
            }
        }
        let expected = border.len() * border.basis().mu();
        if values.len() != expected {
            return Err(Error::InvalidArgument(
                "coefficient outside the border index set".into(),
            ));
        }
        Ok(BorderCoefficients { border, values })
    }

    pub fn zero(border: BorderSet) -> Self {
        Self::from_fn(border, |_, _| Rational::zero())
    }

    pub fn from_fn(border: BorderSet, mut f: impl FnMut(&Exponent, &Exponent) -> Rational) -> Self {
        let mut values = BTreeMap::new();
        for alpha in border.boundary() {
            for beta in border.basis().elements() {
                values.insert((alpha.clone(), beta.clone()), f(alpha, beta));
            }
        }
        BorderCoefficients { border, values }
    }

    /// Inverse of [`BorderCoefficients::to_vector`].
    pub fn from_vector(border: BorderSet, v: &[Rational]) -> Result<Self> {
        let mu = border.basis().mu();
        if v.len() != mu * border.len() {
            return Err(Error::SizeMismatch(format!(
                "expected {} coefficients, found {}",
                mu * border.len(),
                v.len()
            )));
        }
        let index: BTreeMap<&Exponent, usize> =
            border.boundary().iter().enumerate().map(|(i, a)| (a, i)).collect();
        let basis_index: BTreeMap<Exponent, usize> = border
            .basis()
            .elements()
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();
        let values = border
            .boundary()
            .iter()
            .flat_map(|a| border.basis().elements().iter().map(move |b| (a.clone(), b.clone())))
            .map(|(a, b)| {
                let k = index[&a] * mu + basis_index[&b];
                ((a, b), v[k].clone())
            })
            .collect();
        Ok(BorderCoefficients {
            border: border.clone(),
            values,
        })
    }

    pub fn border(&self) -> &BorderSet {
        &self.border
    }

    pub fn basis(&self) -> &MonomialBasis {
        self.border.basis()
    }

    pub fn get(&self, alpha: &Exponent, beta: &Exponent) -> &Rational {
        &self.values[&(alpha.clone(), beta.clone())]
    }

    pub fn values(&self) -> &BTreeMap<(Exponent, Exponent), Rational> {
        &self.values
    }

    /// `(z[α|β])_β` in basis order.
    pub fn column(&self, alpha: &Exponent) -> Vec<Rational> {
        self.basis()
            .elements()
            .iter()
            .map(|b| self.get(alpha, b).clone())
            .collect()
    }

    /// Values ordered by `α` (border order) then `β` (basis order).
    pub fn to_vector(&self) -> Vec<Rational> {
        self.border
            .boundary()
            .iter()
            .flat_map(|a| self.column(a))
            .collect()
    }

    pub fn with_value(&self, alpha: &Exponent, beta: &Exponent, v: Rational) -> Result<Self> {
        let key = (alpha.clone(), beta.clone());
        if !self.values.contains_key(&key) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a border coefficient",
                VarName::Z(alpha.clone(), beta.clone())
            )));
        }
        let mut out = self.clone();
        out.values.insert(key, v);
        Ok(out)
    }

    pub fn as_var_map(&self) -> BTreeMap<VarName, Rational> {
        self.values
            .iter()
            .map(|((a, b), v)| (VarName::Z(a.clone(), b.clone()), v.clone()))
            .collect()
    }
}

/// The matrices `M_{x_i}(z)` with entries linear in the `z` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalMultMatrices {
    border: BorderSet,
    /// `mats[i][row][col]`, rows and columns indexed by `B`.
    mats: Vec<Vec<Vec<MultiPoly>>>,
}

impl FormalMultMatrices {
    pub fn border(&self) -> &BorderSet {
        &self.border
    }

    pub fn matrix(&self, i: usize) -> &[Vec<MultiPoly>] {
        &self.mats[i]
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }
}

pub fn formal_mult_matrices(basis: &MonomialBasis) -> FormalMultMatrices {
    let border = basis.border();
    let mu = basis.mu();
    let mats = (0..basis.n())
        .map(|i| {
            let mut m = vec![vec![MultiPoly::zero(); mu]; mu];
            for (col, beta) in basis.elements().iter().enumerate() {
                let target = beta.times_var(i);
                match basis.index_of(&target) {
                    Some(row) => m[row][col] = MultiPoly::one(),
                    None => {
                        for (row, gamma) in basis.elements().iter().enumerate() {
                            m[row][col] = MultiPoly::var(VarName::Z(target.clone(), gamma.clone()));
                        }
                    }
                }
            }
            m
        })
        .collect();
    FormalMultMatrices { border, mats }
}

fn poly_matmul(a: &[Vec<MultiPoly>], b: &[Vec<MultiPoly>]) -> Vec<Vec<MultiPoly>> {
    let n = a.len();
    let mut out = vec![vec![MultiPoly::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    *cell = &*cell + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// All entries of `M_i M_j - M_j M_i` for `i < j`, row-major per pair.
pub fn commutator_entries(f: &FormalMultMatrices) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for i in 0..f.mats.len() {
        for j in i + 1..f.mats.len() {
            let ij = poly_matmul(&f.mats[i], &f.mats[j]);
            let ji = poly_matmul(&f.mats[j], &f.mats[i]);
            for (r1, r2) in ij.iter().zip(&ji) {
                for (a, b) in r1.iter().zip(r2) {
                    out.push(a - b);
                }
            }
        }
    }
    out
}

/// Defining equations of the chart of border bases on `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartEquations {
    pub border: BorderSet,
    /// Monic, deduplicated up to sign, zero entries dropped.
    pub equations: Vec<MultiPoly>,
}

pub fn chart_equations(basis: &MonomialBasis) -> ChartEquations {
    let f = formal_mult_matrices(basis);
    let (equations, _) = canonical_equation_set(commutator_entries(&f));
    ChartEquations {
        border: f.border,
        equations,
    }
}

/// Substitutes `z` into the formal matrices.
pub fn instantiate(f: &FormalMultMatrices, z: &BorderCoefficients) -> Result<Vec<RationalMatrix>> {
    if f.border != z.border {
        return Err(Error::InvalidArgument("coefficients belong to a different basis".into()));
    }
    let values = z.as_var_map();
    f.mats
        .iter()
        .map(|m| {
            let mu = m.len();
            let mut out = RationalMatrix::zeros(mu, mu);
            for (r, row) in m.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let v = entry.substitute(&values);
                    out[(r, c)] = v.constant_value().ok_or_else(|| {
                        let missing = v.variables().into_iter().next().expect("non-constant");
                        Error::IncompleteCoefficients(format!("{missing}"))
                    })?;
                }
            }
            Ok(out)
        })
        .collect()
}

/// Numeric multiplication matrices, built directly from the column rule.
pub fn multiplication_matrices(z: &BorderCoefficients) -> Vec<RationalMatrix> {
    let basis = z.basis();
    let mu = basis.mu();
    (0..basis.n())
        .map(|i| {
            let mut m = RationalMatrix::zeros(mu, mu);
            for (col, beta) in basis.elements().iter().enumerate() {
                let target = beta.times_var(i);
                match basis.index_of(&target) {
                    Some(row) => m[(row, col)] = Rational::one(),
                    None => {
                        for (row, v) in z.column(&target).into_iter().enumerate() {
                            m[(row, col)] = v;
                        }
                    }
                }
            }
            m
        })
        .collect()
}

fn commute(mats: &[RationalMatrix]) -> bool {
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let ij = mats[i].mul(&mats[j]).expect("square matrices");
            let ji = mats[j].mul(&mats[i]).expect("square matrices");
            if ij != ji {
                return false;
            }
        }
    }
    true
}

pub fn is_border_basis(z: &BorderCoefficients) -> bool {
    commute(&multiplication_matrices(z))
}

/// Coordinates over `B` of a monomial, dividing out the lowest-index
/// variable first. Agrees with [`normal_form`] on the chart; off the chart
/// it is still defined, but depends on the factorization rule.
pub fn reduce_monomial(z: &BorderCoefficients, m: &Exponent) -> Vec<Rational> {
    reduce_with(z, &multiplication_matrices(z), m)
}

fn reduce_with(z: &BorderCoefficients, mats: &[RationalMatrix], m: &Exponent) -> Vec<Rational> {
    let basis = z.basis();
    if let Some(k) = basis.index_of(m) {
        let mut v = vec![Rational::zero(); basis.mu()];
        v[k] = Rational::one();
        return v;
    }
    if z.border().boundary_index(m).is_some() {
        return z.column(m);
    }
    let i = m.lowest_var().expect("1 always lies in B");
    let rest = m.div_var(i).expect("variable divides");
    mats[i].mul_vec(&reduce_with(z, mats, &rest))
}

/// Coordinates over `B` of the normal form of `p`; refuses non-commuting `z`.
pub fn normal_form(z: &BorderCoefficients, p: &Polynomial) -> Result<Vec<Rational>> {
    let basis = z.basis();
    if p.nvars() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: p.nvars(),
        });
    }
    let mats = multiplication_matrices(z);
    if !commute(&mats) {
        return Err(Error::NotCommuting);
    }
    let mut acc = vec![Rational::zero(); basis.mu()];
    for (m, c) in p.terms() {
        for (a, v) in acc.iter_mut().zip(reduce_with(z, &mats, m)) {
            *a += c * v;
        }
    }
    Ok(acc)
}

pub fn ideal_membership(z: &BorderCoefficients, p: &Polynomial) -> Result<bool> {
    Ok(normal_form(z, p)?.iter().all(Zero::is_zero))
}

/// The border relation `x^α - Σ_β z[α|β] x^β`.
pub fn border_relation(z: &BorderCoefficients, alpha: &Exponent) -> Polynomial {
    let mut p = Polynomial::monomial(alpha.clone());
    for beta in z.basis().elements() {
        p.add_term(beta.clone(), -z.get(alpha, beta).clone());
    }
    p
}
