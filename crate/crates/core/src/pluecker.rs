//! Plücker coordinates of quotients `S_d / I_d`, signed index normalization,
//! multilinear expansion of `Δ` over polynomial families, and the quadratic
//! Plücker relations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinat::combinations;
use crate::error::{Error, Result};
use crate::exactpoly::{canonical_equation_set, MultiPoly, Polynomial, Rational, RationalMatrix, Term, VarName};
use crate::monomial::{monomials_of_degree, Exponent};

/// Strictly increasing tuple of degree-`d` projective monomials.
pub type PlueckerKey = Vec<Exponent>;

/// A point of the Grassmannian of `μ`-dimensional quotients of `S_d`,
/// normalized so that its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerPoint {
    n: usize,
    d: u32,
    mu: usize,
    coords: BTreeMap<PlueckerKey, Rational>,
}

impl PlueckerPoint {
    /// Validates keys, drops zeros and normalizes.
    pub fn new(
        n: usize,
        d: u32,
        mu: usize,
        coords: impl IntoIterator<Item = (PlueckerKey, Rational)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (key, v) in coords {
            check_key(n, d, mu, &key)?;
            if map.insert(key, v).is_some() {
                return Err(Error::InvalidArgument("repeated Plücker key".into()));
            }
        }
        map.retain(|_, v: &mut Rational| !v.is_zero());
        let Some(first) = map.values().next().cloned() else {
            return Err(Error::InvalidArgument("all Plücker coordinates vanish".into()));
        };
        let inv = first.recip();
        for v in map.values_mut() {
            *v *= &inv;
        }
        Ok(PlueckerPoint {
            n,
            d,
            mu,
            coords: map,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Nonzero coordinates in canonical key order.
    pub fn coords(&self) -> &BTreeMap<PlueckerKey, Rational> {
        &self.coords
    }

    pub fn coordinate(&self, key: &[Exponent]) -> Rational {
        self.coords.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value of a polynomial in `Delta` variables at this point; other
    /// variables are left symbolic.
    pub fn evaluate(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute_with(|v| match v {
            VarName::Delta(key) => Some(self.coordinate(key)),
            _ => None,
        })
    }

    /// Value of a polynomial in `Delta` and `DeltaPrime` variables, reading
    /// the primed ones from `next` (the same scheme in degree `d+1`).
    pub fn evaluate_pair(&self, next: &PlueckerPoint, p: &MultiPoly) -> MultiPoly {
        p.substitute_with(|v| match v {
            VarName::Delta(key) => Some(self.coordinate(key)),
            VarName::DeltaPrime(key) => Some(next.coordinate(key)),
            _ => None,
        })
    }
}

fn check_key(n: usize, d: u32, mu: usize, key: &[Exponent]) -> Result<()> {
    if key.len() != mu {
        return Err(Error::SizeMismatch(format!(
            "Plücker key of length {} for mu = {mu}",
            key.len()
        )));
    }
    for m in key {
        if m.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: m.len(),
            });
        }
        if m.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: m.degree(),
            });
        }
    }
    if key.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "Plücker key is not strictly increasing".into(),
        ));
    }
    Ok(())
}

/// All keys, in canonical order.
pub fn plucker_keys(n: usize, d: u32, mu: usize) -> Vec<PlueckerKey> {
    let sd = monomials_of_degree(n + 1, d);
    combinations(sd.len(), mu)
        .into_iter()
        .map(|c| c.into_iter().map(|i| sd[i].clone()).collect())
        .collect()
}

/// A quotient `S_d / I_d` of dimension `μ`: a basis of `I_d` and a basis of
/// its annihilator, both as coefficient rows over the degree-`d` monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    pub monomials: Vec<Exponent>,
    pub subspace_basis: RationalMatrix,
    pub functionals: RationalMatrix,
}

impl QuotientPresentation {
    /// Builds the presentation from a `μ × s_d` matrix of functionals.
    pub fn from_functionals(n: usize, d: u32, mu: usize, functionals: RationalMatrix) -> Result<Self> {
        let monomials = monomials_of_degree(n + 1, d);
        if functionals.cols() != monomials.len() || functionals.rows() != mu {
            return Err(Error::SizeMismatch(format!(
                "functionals must be {mu}x{}",
                monomials.len()
            )));
        }
        let rank = functionals.rank();
        if rank != mu {
            return Err(Error::Codimension {
                expected: mu,
                found: rank,
            });
        }
        let subspace_basis = RationalMatrix::from_rows(functionals.kernel(), monomials.len())?;
        Ok(QuotientPresentation {
            n,
            d,
            mu,
            monomials,
            subspace_basis,
            functionals,
        })
    }

    /// `δ(p)` for each functional `δ`.
    pub fn apply(&self, p: &Polynomial) -> Vec<Rational> {
        self.functionals.mul_vec(&p.coefficients(&self.monomials))
    }

    /// `det(δ_i(p_j))`.
    pub fn delta(&self, family: &[Polynomial]) -> Rational {
        let cols: Vec<Vec<Rational>> = family.iter().map(|p| self.apply(p)).collect();
        let m = RationalMatrix::from_fn(self.mu, family.len(), |i, j| cols[j][i].clone());
        m.determinant().expect("square")
    }
}

/// Rows spanning `I_d` over the degree-`d` monomials in canonical order.
pub fn quotient_from_subspace(n: usize, d: u32, mu: usize, rows: &RationalMatrix) -> Result<QuotientPresentation> {
    let monomials = monomials_of_degree(n + 1, d);
    let sd = monomials.len();
    if rows.cols() != sd {
        return Err(Error::SizeMismatch(format!(
            "subspace rows have {} entries, expected {sd}",
            rows.cols()
        )));
    }
    if mu == 0 || mu > sd {
        return Err(Error::InvalidArgument(format!("length {mu} out of range 1..={sd}")));
    }
    let rank = rows.rank();
    if rank != sd - mu {
        return Err(Error::Codimension {
            expected: sd - mu,
            found: rank,
        });
    }
    let functionals = RationalMatrix::from_rows(rows.kernel(), sd)?;
    Ok(QuotientPresentation {
        n,
        d,
        mu,
        monomials,
        subspace_basis: rows.clone(),
        functionals,
    })
}

pub fn plucker_from_quotient(q: &QuotientPresentation) -> PlueckerPoint {
    let rows: Vec<usize> = (0..q.mu).collect();
    let coords = combinations(q.monomials.len(), q.mu).into_iter().map(|cols| {
        let v = q.functionals.minor(&rows, &cols).expect("valid minor");
        let key = cols.iter().map(|&c| q.monomials[c].clone()).collect();
        (key, v)
    });
    PlueckerPoint::new(q.n, q.d, q.mu, coords).expect("functionals have full rank")
}

/// Sign of the sorting permutation (0 on a repeat) and the sorted tuple.
pub fn normalize_index(family: &[Exponent]) -> (i8, Vec<Exponent>) {
    let mut key = family.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..key.len() {
        let mut j = i;
        while j > 0 && key[j - 1] > key[j] {
            key.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if key.windows(2).any(|w| w[0] == w[1]) {
        sign = 0;
    }
    (sign, key)
}

/// Coefficients that can be multiplied through a determinant expansion.
pub trait Coefficient: Clone {
    fn vanishes(&self) -> bool;
    fn times(&self, other: &Self) -> Self;
    fn accumulate(&mut self, other: &Self);
    fn negated(&self) -> Self;
}

impl Coefficient for Rational {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
}

impl Coefficient for MultiPoly {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn accumulate(&mut self, other: &Self) {
        self.add_scaled(other, &Rational::from_integer(1.into()));
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Expands `Δ_{p_1,…,p_μ}` multilinearly, each `p_j` given as
/// `(monomial, coefficient)` pairs, into signed sorted Plücker keys.
pub fn expand_family<C: Coefficient>(slots: &[Vec<(Exponent, C)>]) -> BTreeMap<PlueckerKey, C> {
    fn walk<C: Coefficient>(
        slots: &[Vec<(Exponent, C)>],
        chosen: &mut Vec<Exponent>,
        coeff: Option<C>,
        out: &mut BTreeMap<PlueckerKey, C>,
    ) {
        let depth = chosen.len();
        if depth == slots.len() {
            let (sign, key) = normalize_index(chosen);
            let c = coeff.expect("nonempty family");
            let c = if sign < 0 { c.negated() } else { c };
            match out.get_mut(&key) {
                Some(acc) => acc.accumulate(&c),
                None => {
                    out.insert(key, c);
                }
            }
            return;
        }
        for (m, c) in &slots[depth] {
            if chosen.contains(m) || c.vanishes() {
                continue;
            }
            let next = match &coeff {
                None => c.clone(),
                Some(acc) => acc.times(c),
            };
            chosen.push(m.clone());
            walk(slots, chosen, Some(next), out);
            chosen.pop();
        }
    }
    let mut out = BTreeMap::new();
    if slots.is_empty() {
        return out;
    }
    walk(slots, &mut Vec::new(), None, &mut out);
    out.retain(|_, c| !c.vanishes());
    out
}

fn family_slots(p: &PlueckerPoint, family: &[Polynomial]) -> Result<Vec<Vec<(Exponent, Rational)>>> {
    if family.len() != p.mu {
        return Err(Error::SizeMismatch(format!(
            "family of {} polynomials for mu = {}",
            family.len(),
            p.mu
        )));
    }
    family
        .iter()
        .map(|f| {
            if f.nvars() != p.n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: p.n + 1,
                    found: f.nvars(),
                });
            }
            if let Some(bad) = f.terms().map(|(m, _)| m.degree()).find(|&g| g != p.d) {
                return Err(Error::DegreeMismatch {
                    expected: p.d,
                    found: bad,
                });
            }
            Ok(f.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
        })
        .collect()
}

/// `Δ_F` at `P` for a family of degree-`d` forms.
pub fn delta_of_family(p: &PlueckerPoint, family: &[Polynomial]) -> Result<Rational> {
    let slots = family_slots(p, family)?;
    Ok(expand_family(&slots)
        .into_iter()
        .fold(Rational::zero(), |acc, (key, c)| acc + c * p.coordinate(&key)))
}

/// Coordinates under the functionals of `Δ_B a - Σ_i Δ_{B[b_i|a]} b_i`.
pub fn cramer_residual(q: &QuotientPresentation, family: &[Polynomial], a: &Polynomial) -> Result<Vec<Rational>> {
    if family.len() != q.mu {
        return Err(Error::SizeMismatch(format!(
            "family of {} polynomials for mu = {}",
            family.len(),
            q.mu
        )));
    }
    for f in family.iter().chain(core::iter::once(a)) {
        if f.nvars() != q.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: q.n + 1,
                found: f.nvars(),
            });
        }
        if let Some(bad) = f.terms().map(|(m, _)| m.degree()).find(|&g| g != q.d) {
            return Err(Error::DegreeMismatch {
                expected: q.d,
                found: bad,
            });
        }
    }
    let mut residual = a.scale(&q.delta(family));
    for i in 0..family.len() {
        let mut replaced = family.to_vec();
        replaced[i] = a.clone();
        residual = &residual - &family[i].scale(&q.delta(&replaced));
    }
    Ok(q.apply(&residual))
}

fn exchange_terms(i_set: &[Exponent], j_set: &[Exponent]) -> Vec<(i8, PlueckerKey, PlueckerKey)> {
    let mut out = Vec::new();
    for (lambda, j) in j_set.iter().enumerate() {
        let mut left = i_set.to_vec();
        left.push(j.clone());
        let (sign, left) = normalize_index(&left);
        if sign == 0 {
            continue;
        }
        let mut right = j_set.to_vec();
        right.remove(lambda);
        // (-1)^λ with λ counted from 1
        let parity = if lambda % 2 == 0 { -1 } else { 1 };
        out.push((sign * parity, left, right));
    }
    out
}

fn exchange_index_sets(n: usize, d: u32, mu: usize) -> (Vec<Vec<Exponent>>, Vec<Vec<Exponent>>) {
    let sd = monomials_of_degree(n + 1, d);
    let pick = |k: usize| -> Vec<Vec<Exponent>> {
        combinations(sd.len(), k)
            .into_iter()
            .map(|c| c.into_iter().map(|i| sd[i].clone()).collect())
            .collect()
    };
    if mu == 0 {
        return (Vec::new(), Vec::new());
    }
    (pick(mu - 1), pick(mu + 1))
}

/// Quadratic exchange relations
/// `Σ_λ (-1)^λ p_{I ∪ j_λ} p_{J ∖ j_λ}` over `|I| = μ - 1`, `|J| = μ + 1`.
pub fn plucker_relations(n: usize, d: u32, mu: usize) -> Vec<MultiPoly> {
    let (is, js) = exchange_index_sets(n, d, mu);
    let mut polys = Vec::new();
    for i_set in &is {
        for j_set in &js {
            let mut p = MultiPoly::zero();
            for (sign, left, right) in exchange_terms(i_set, j_set) {
                let t = Term::from_pairs([(VarName::Delta(left), 1), (VarName::Delta(right), 1)]);
                p.add_term(t, Rational::from_integer(sign.into()));
            }
            polys.push(p);
        }
    }
    canonical_equation_set(polys).0
}

pub fn check_plucker(p: &PlueckerPoint) -> bool {
    let (is, js) = exchange_index_sets(p.n, p.d, p.mu);
    for i_set in &is {
        for j_set in &js {
            let mut acc = Rational::zero();
            for (sign, left, right) in exchange_terms(i_set, j_set) {
                let (Some(a), Some(b)) = (p.coords.get(&left), p.coords.get(&right)) else {
                    continue;
                };
                let v = a * b;
                if sign > 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Minors of a `μ × s_d` matrix, without the rank check.
pub fn minors_of(functionals: &RationalMatrix, n: usize, d: u32) -> Result<PlueckerPoint> {
    let q = QuotientPresentation::from_functionals(n, d, functionals.rows(), functionals.clone())?;
    Ok(plucker_from_quotient(&q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use crate::monomial::{parse_monomial, Space};
    use alloc::vec;
    use proptest::prelude::*;

    fn pm(s: &str, n: usize) -> Exponent {
        parse_monomial(s, n + 1, Space::Projective).unwrap()
    }

    fn poly(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n + 1, Space::Projective).unwrap()
    }

    fn rows(r: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            r.iter().map(|x| x.iter().map(|&v| int(v)).collect()).collect(),
            r[0].len(),
        )
        .unwrap()
    }

    fn p1_example() -> QuotientPresentation {
        // I_2 = span{x0*x1} in P^1
        quotient_from_subspace(1, 2, 2, &rows(&[&[0, 1, 0]])).unwrap()
    }

    #[test]
    fn quotient_of_coordinate_points() {
        let q = p1_example();
        let expected = rows(&[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(q.functionals.stack(&expected).unwrap().rank(), 2);
        assert!(q.functionals.mul(&q.subspace_basis.transpose()).unwrap().is_zero());
        let p = plucker_from_quotient(&q);
        let keys = plucker_keys(1, 2, 2);
        let values: Vec<Rational> = keys.iter().map(|k| p.coordinate(k)).collect();
        assert_eq!(values, vec![int(0), int(1), int(0)]);
        assert_eq!(keys[1], vec![pm("x0^2", 1), pm("x1^2", 1)]);
    }

    #[test]
    fn functionals_of_points_are_evaluations() {
        // points (1:1:0), (1:2:3), (1:0:1) in P^2, d = 3
        let pts = [[1, 1, 0], [1, 2, 3], [1, 0, 1]];
        let sd = monomials_of_degree(3, 3);
        let ev = RationalMatrix::from_fn(3, sd.len(), |i, j| {
            sd[j].eval(&pts[i].map(int))
        });
        let ideal = RationalMatrix::from_rows(ev.kernel(), sd.len()).unwrap();
        let q = quotient_from_subspace(2, 3, 3, &ideal).unwrap();
        assert_eq!(q.functionals.stack(&ev).unwrap().rank(), 3);
    }

    #[test]
    fn wrong_codimension_rejected() {
        let r = rows(&[&[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(
            quotient_from_subspace(1, 2, 2, &r),
            Err(Error::Codimension { expected: 1, found: 2 })
        );
    }

    #[test]
    fn full_exterior_power() {
        let q = quotient_from_subspace(1, 2, 3, &RationalMatrix::zeros(0, 3)).unwrap();
        let p = plucker_from_quotient(&q);
        assert_eq!(p.coords().len(), 1);
        assert_eq!(p.coords().values().next(), Some(&int(1)));
    }

    #[test]
    fn shuffled_functionals_give_same_point() {
        let f = rows(&[&[1, 2, 0, 1], &[0, 1, 1, 3]]);
        let g = rows(&[&[0, 1, 1, 3], &[1, 2, 0, 1]]);
        assert_eq!(minors_of(&f, 1, 3).unwrap(), minors_of(&g, 1, 3).unwrap());
    }

    #[test]
    fn index_normalization() {
        assert_eq!(
            normalize_index(&[pm("x0*x1", 1), pm("x0^2", 1)]),
            (-1, vec![pm("x0^2", 1), pm("x0*x1", 1)])
        );
        assert_eq!(normalize_index(&[pm("x0^2", 1), pm("x0^2", 1)]).0, 0);
        let sorted = vec![pm("x0^2", 2), pm("x1^2", 2), pm("x2^2", 2)];
        assert_eq!(normalize_index(&sorted), (1, sorted.clone()));
        let cyc = vec![pm("x1^2", 2), pm("x2^2", 2), pm("x0^2", 2)];
        assert_eq!(normalize_index(&cyc), (1, sorted));
    }

    #[test]
    fn delta_examples() {
        let p = plucker_from_quotient(&p1_example());
        let f = [poly("x0^2", 1), poly("x1^2", 1)];
        assert_eq!(delta_of_family(&p, &f).unwrap(), int(1));
        let g = [poly("x0^2", 1), poly("x0^2", 1)];
        assert_eq!(delta_of_family(&p, &g).unwrap(), int(0));
        let h = [poly("x0^2 + x0*x1", 1), poly("x1^2", 1)];
        assert_eq!(delta_of_family(&p, &h).unwrap(), int(1));
        let bad = [poly("x0", 1), poly("x1^2", 1)];
        assert!(matches!(delta_of_family(&p, &bad), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn cramer_examples() {
        let q = p1_example();
        let b = [poly("x0^2", 1), poly("x0*x1", 1)];
        // a in B
        let r = cramer_residual(&q, &b, &poly("x0^2", 1)).unwrap();
        assert!(r.iter().all(Zero::is_zero));
        // Δ_B = 0 here since x0*x1 lies in I_2
        assert!(q.delta(&b).is_zero());
        let r = cramer_residual(&q, &b, &poly("x1^2 - 2*x0*x1", 1)).unwrap();
        assert!(r.iter().all(Zero::is_zero));
    }

    #[test]
    fn plucker_relation_sets() {
        assert!(plucker_relations(2, 2, 1).is_empty());
        let rel = plucker_relations(2, 2, 2);
        assert!(!rel.is_empty());
        for r in &rel {
            assert!(r.is_homogeneous_in(VarName::is_plucker, 2));
        }
        let p = PlueckerPoint::new(2, 1, 1, [(vec![pm("x1", 2)], int(3))]).unwrap();
        assert!(check_plucker(&p));
        assert_eq!(p.coordinate(&[pm("x1", 2)]), int(1));
    }

    #[test]
    fn violated_relation_detected() {
        // two points (1:0:0), (1:1:2) in P^2, d = 2
        let sd = monomials_of_degree(3, 2);
        let pts = [[1, 0, 0], [1, 1, 2]];
        let ev = RationalMatrix::from_fn(2, sd.len(), |i, j| sd[j].eval(&pts[i].map(int)));
        let p = minors_of(&ev, 2, 2).unwrap();
        assert!(check_plucker(&p));
        let rel = plucker_relations(2, 2, 2);
        for r in &rel {
            assert!(p.evaluate(r).is_zero());
        }
        let key = vec![pm("x1^2", 2), pm("x2^2", 2)];
        let bumped = p.coordinate(&key) + int(1);
        let mut coords = p.coords().clone();
        coords.insert(key, bumped);
        let q = PlueckerPoint::new(2, 2, 2, coords).unwrap();
        assert!(!check_plucker(&q));
        assert!(rel.iter().any(|r| !q.evaluate(r).is_zero()));
    }

    #[test]
    fn point_validation() {
        assert!(PlueckerPoint::new(1, 2, 2, [(vec![pm("x0*x1", 1), pm("x0^2", 1)], int(1))]).is_err());
        assert!(PlueckerPoint::new(1, 2, 2, [(vec![pm("x0^2", 1)], int(1))]).is_err());
        assert!(PlueckerPoint::new(1, 2, 1, [(vec![pm("x0^2", 1)], int(0))]).is_err());
        assert!(PlueckerPoint::new(1, 2, 1, [(vec![pm("x0", 1)], int(1))]).is_err());
    }

    fn arb_functionals() -> impl Strategy<Value = (usize, u32, RationalMatrix)> {
        (1usize..3, 1u32..3, 1usize..4).prop_flat_map(|(n, d, mu)| {
            let sd = monomials_of_degree(n + 1, d).len();
            let mu = mu.min(sd);
            proptest::collection::vec(-3i64..4, mu * sd).prop_map(move |v| {
                (n, d, RationalMatrix::from_fn(mu, sd, |i, j| int(v[i * sd + j])))
            })
        })
    }

    proptest! {
        #[test]
        fn minors_satisfy_relations((n, d, f) in arb_functionals()) {
            prop_assume!(f.rank() == f.rows());
            let p = minors_of(&f, n, d).unwrap();
            prop_assert!(check_plucker(&p));
        }

        #[test]
        fn invariant_under_row_operations((n, d, f) in arb_functionals(), g in proptest::collection::vec(-3i64..4, 9)) {
            prop_assume!(f.rank() == f.rows());
            let mu = f.rows();
            let t = RationalMatrix::from_fn(mu, mu, |i, j| int(g[i * 3 + j]));
            prop_assume!(!t.determinant().unwrap().is_zero());
            let tf = t.mul(&f).unwrap();
            prop_assert_eq!(minors_of(&f, n, d).unwrap(), minors_of(&tf, n, d).unwrap());
        }

        #[test]
        fn delta_is_antisymmetric((n, d, f) in arb_functionals(), c in proptest::collection::vec(-2i64..3, 12), swap in 0usize..3) {
            prop_assume!(f.rank() == f.rows() && f.rows() >= 2);
            let p = minors_of(&f, n, d).unwrap();
            let sd = monomials_of_degree(n + 1, d);
            let family: Vec<Polynomial> = (0..p.mu()).map(|j| {
                Polynomial::from_terms(n + 1, sd.iter().enumerate().map(|(k, m)| (m.clone(), int(c[(j * 5 + k) % 12]))))
            }).collect();
            let a = swap % (p.mu() - 1);
            let mut swapped = family.clone();
            swapped.swap(a, a + 1);
            prop_assert_eq!(
                delta_of_family(&p, &swapped).unwrap(),
                -delta_of_family(&p, &family).unwrap()
            );
            // the expansion agrees with the determinant of the functionals
            let q = QuotientPresentation::from_functionals(n, d, p.mu(), f.clone()).unwrap();
            let scale = q.delta(&p.coords().keys().next().unwrap().iter().map(|m| Polynomial::monomial(m.clone())).collect::<Vec<_>>());
            prop_assert_eq!(delta_of_family(&p, &family).unwrap() * scale, q.delta(&family));
        }
    }
}
