use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{is_one, Rational};
use crate::error::{Error, Result};
use crate::monomial::{parse_monomial, Exponent, Space};

/// Name of a symbolic variable.
///
/// `Z` and `H1` are indexed by a pair `(α ∈ ∂B, β ∈ B)` of affine exponents,
/// `Delta` and `DeltaPrime` by a strictly increasing tuple of projective
/// exponents, `U` by a coordinate index `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarName {
    Z(Exponent, Exponent),
    Delta(Vec<Exponent>),
    DeltaPrime(Vec<Exponent>),
    U(usize),
    H1(Exponent, Exponent),
}

impl VarName {
    pub fn is_u(&self) -> bool {
        matches!(self, VarName::U(_))
    }

    pub fn is_plucker(&self) -> bool {
        matches!(self, VarName::Delta(_) | VarName::DeltaPrime(_))
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let key = |ms: &[Exponent]| {
            ms.iter()
                .map(|m| m.render(Space::Projective))
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            VarName::Z(a, b) => write!(
                f,
                "z[{}|{}]",
                a.render(Space::Affine),
                b.render(Space::Affine)
            ),
            VarName::H1(a, b) => write!(
                f,
                "h1[{}|{}]",
                a.render(Space::Affine),
                b.render(Space::Affine)
            ),
            VarName::Delta(ms) => write!(f, "D[{}]", key(ms)),
            VarName::DeltaPrime(ms) => write!(f, "D'[{}]", key(ms)),
            VarName::U(i) => write!(f, "u[{i}]"),
        }
    }
}

/// Parses the text form produced by `Display`; `n` is the affine variable count.
pub fn parse_varname(s: &str, n: usize) -> Result<VarName> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad variable name {s:?}"));
    let open = s.find('[').ok_or_else(bad)?;
    if !s.ends_with(']') {
        return Err(bad());
    }
    let (tag, inner) = (&s[..open], &s[open + 1..s.len() - 1]);
    let pair = |inner: &str| -> Result<(Exponent, Exponent)> {
        let (a, b) = inner.split_once('|').ok_or_else(bad)?;
        Ok((
            parse_monomial(a, n, Space::Affine)?,
            parse_monomial(b, n, Space::Affine)?,
        ))
    };
    let key = |inner: &str| -> Result<Vec<Exponent>> {
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        let ms = inner
            .split(',')
            .map(|m| parse_monomial(m, n + 1, Space::Projective))
            .collect::<Result<Vec<_>>>()?;
        if ms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("Plücker key not strictly increasing in {s:?}")));
        }
        Ok(ms)
    };
    match tag {
        "z" => pair(inner).map(|(a, b)| VarName::Z(a, b)),
        "h1" => pair(inner).map(|(a, b)| VarName::H1(a, b)),
        "D" => key(inner).map(VarName::Delta),
        "D'" => key(inner).map(VarName::DeltaPrime),
        "u" => {
            let i: usize = inner.trim().parse().map_err(|_| bad())?;
            if i > n {
                return Err(bad());
            }
            Ok(VarName::U(i))
        }
        _ => Err(bad()),
    }
}

/// A monomial in named variables: sorted `(variable, positive power)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(Vec<(VarName, u32)>);

impl Term {
    pub fn one() -> Self {
        Term(Vec::new())
    }

    pub fn var(v: VarName) -> Self {
        Term(alloc::vec![(v, 1)])
    }

    /// Builds a term from arbitrary pairs, merging repeats and dropping zero powers.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarName, u32)>) -> Self {
        let mut map: BTreeMap<VarName, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Term(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn factors(&self) -> &[(VarName, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Term) -> Term {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Term(out)
    }

    /// Splits into the factors selected by `pred` and the rest.
    pub fn split(&self, pred: impl Fn(&VarName) -> bool) -> (Term, Term) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().cloned().partition(|(v, _)| pred(v));
        (Term(a), Term(b))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients in named variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Term, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Term::one(), c)
    }

    pub fn var(v: VarName) -> Self {
        Self::term(Term::var(v), Rational::one())
    }

    pub fn term(t: Term, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(t, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Term, Rational)>) -> Self {
        let mut p = Self::zero();
        for (t, c) in terms {
            p.add_term(t, c);
        }
        p
    }

    pub fn add_term(&mut self, t: Term, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Term) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial has no variables.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Term::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        for (t, a) in &other.terms {
            self.add_term(t.clone(), a * c);
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Term::degree).max().unwrap_or(0)
    }

    /// Degree counting only variables selected by `pred`.
    pub fn degree_in(&self, pred: impl Fn(&VarName) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|t| t.0.iter().filter(|(v, _)| pred(v)).map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    /// True iff every term has degree exactly `deg` in the selected variables.
    pub fn is_homogeneous_in(&self, pred: impl Fn(&VarName) -> bool, deg: u32) -> bool {
        self.terms.keys().all(|t| {
            t.0.iter()
                .filter(|(v, _)| pred(v))
                .map(|(_, e)| e)
                .sum::<u32>()
                == deg
        })
    }

    pub fn variables(&self) -> BTreeSet<VarName> {
        self.terms
            .keys()
            .flat_map(|t| t.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Replaces each variable for which `f` returns a polynomial.
    pub fn compose(&self, f: impl Fn(&VarName) -> Option<MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (t, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            let mut kept = Vec::new();
            for (v, e) in &t.0 {
                match f(v) {
                    Some(p) => {
                        for _ in 0..*e {
                            acc = &acc * &p;
                        }
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            let rest = Term(kept);
            for (t2, c2) in acc.terms {
                out.add_term(t2.mul(&rest), c2);
            }
        }
        out
    }

    /// Evaluates the listed variables, keeping the others symbolic.
    pub fn substitute(&self, values: &BTreeMap<VarName, Rational>) -> MultiPoly {
        self.substitute_with(|v| values.get(v).cloned())
    }

    pub fn substitute_with(&self, f: impl Fn(&VarName) -> Option<Rational>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (t, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for (v, e) in &t.0 {
                match f(v) {
                    Some(x) => {
                        for _ in 0..*e {
                            coeff *= &x;
                        }
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            out.add_term(Term(kept), coeff);
        }
        out
    }

    /// Groups terms by their factor in the selected variables:
    /// `self = Σ key · value` with values free of selected variables.
    pub fn coefficients_in(&self, pred: impl Fn(&VarName) -> bool) -> BTreeMap<Term, MultiPoly> {
        let mut out: BTreeMap<Term, MultiPoly> = BTreeMap::new();
        for (t, c) in &self.terms {
            let (sel, rest) = t.split(&pred);
            out.entry(sel).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// The first term in canonical term order.
    pub fn leading(&self) -> Option<(&Term, &Rational)> {
        self.terms.iter().next()
    }

    /// Divides by the leading coefficient; `None` for the zero polynomial.
    pub fn normalized(&self) -> Option<MultiPoly> {
        let (_, lc) = self.leading()?;
        if is_one(lc) {
            return Some(self.clone());
        }
        let inv = lc.recip();
        Some(self.scale(&inv))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| is_one(c))
    }
}

/// Normalizes, drops zero polynomials and duplicates (including negations),
/// keeping first occurrences in order. Returns the set and the number of
/// zero polynomials dropped.
pub fn canonical_equation_set(polys: impl IntoIterator<Item = MultiPoly>) -> (Vec<MultiPoly>, usize) {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut dropped = 0;
    for p in polys {
        match p.normalized() {
            None => dropped += 1,
            Some(q) => {
                let key: Vec<(Term, Rational)> = q.terms.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
                if seen.insert(key) {
                    out.push(q);
                }
            }
        }
    }
    (out, dropped)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.is_one() {
                write!(f, "{a}")?;
            } else if is_one(&a) {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}*{t}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &rhs.terms {
                out.add_term(t1.mul(t2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}
