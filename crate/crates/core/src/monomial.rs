//! Exponent vectors, the canonical monomial order, bases connected to 1 and
//! their borders, and the affine/projective dictionary.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// Which variables an exponent vector refers to.
///
/// Affine vectors of length `n` index `x1..xn`; projective vectors of length
/// `n + 1` index `x0..xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Affine,
    Projective,
}

/// An exponent vector.
///
/// `Ord` is the canonical order: lower degree first, and within one degree
/// the degree reverse lexicographic order with `x0 > x1 > ... > xn`, larger
/// monomials first. So `x^2 < x*y < y^2 < x*z < y*z < z^2` in this sense.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent {
    exps: Vec<u32>,
}

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponent { exps }
    }

    pub fn zero(len: usize) -> Self {
        Exponent { exps: vec![0; len] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = Self::zero(len);
        e.exps[i] = 1;
        e
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exps
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials of the same length.
    pub fn mul(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Exponent { exps }
    }

    pub fn times_var(&self, i: usize) -> Exponent {
        let mut e = self.clone();
        e.exps[i] = e.exps[i].checked_add(1).expect("exponent overflow");
        e
    }

    pub fn div_var(&self, i: usize) -> Option<Exponent> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut e = self.clone();
        e.exps[i] -= 1;
        Some(e)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.len() == other.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Index of the first variable occurring in the monomial.
    pub fn lowest_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Value of the monomial at a point.
    pub fn eval<T>(&self, point: &[T]) -> T
    where
        T: Clone + num_traits::One + core::ops::Mul<Output = T>,
    {
        assert_eq!(self.len(), point.len(), "point length mismatch");
        let mut acc = T::one();
        for (e, p) in self.exps.iter().zip(point) {
            for _ in 0..*e {
                acc = acc * p.clone();
            }
        }
        acc
    }

    /// Text form such as `x0^2*x1` (projective) or `x*y^2` (affine).
    pub fn render(&self, space: Space) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = var_name(i, self.len(), space);
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    if a != b {
                        // smaller power of the last differing variable is the larger monomial
                        return a.cmp(b);
                    }
                }
                Ordering::Equal
            })
    }
}

/// Name of variable slot `i` in an exponent vector of length `len`.
pub fn var_name(i: usize, len: usize, space: Space) -> String {
    match space {
        Space::Projective => format!("x{i}"),
        Space::Affine if len <= 3 => ["x", "y", "z"][i].to_string(),
        Space::Affine => format!("x{}", i + 1),
    }
}

/// Parses a monomial such as `x0^2*x1`, `x*y`, `xy^2` or `1`.
///
/// `x`, `y`, `z` stand for `x1`, `x2`, `x3` in both spaces. `len` is the
/// length of the resulting exponent vector.
pub fn parse_monomial(s: &str, len: usize, space: Space) -> Result<Exponent> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut e = Exponent::zero(len);
    if text == "1" {
        return Ok(e);
    }
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let index = match chars[pos] {
            'x' => {
                pos += 1;
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    1
                } else {
                    let digits: String = chars[start..pos].iter().collect();
                    digits
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad variable index in {s:?}")))?
                }
            }
            'y' => {
                pos += 1;
                2
            }
            'z' => {
                pos += 1;
                3
            }
            c => return Err(Error::Parse(format!("unexpected {c:?} in monomial {s:?}"))),
        };
        let slot = match space {
            Space::Projective => index,
            Space::Affine if index == 0 => {
                return Err(Error::Parse(format!("x0 is not an affine variable in {s:?}")))
            }
            Space::Affine => index - 1,
        };
        if slot >= len {
            return Err(Error::Parse(format!(
                "variable index {index} out of range in {s:?}"
            )));
        }
        let mut power = 1u32;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[start..pos].iter().collect();
            power = digits
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        }
        e.exps[slot] += power;
        if pos < chars.len() && chars[pos] == '*' {
            pos += 1;
            if pos == chars.len() {
                return Err(Error::Parse(format!("trailing '*' in {s:?}")));
            }
        }
    }
    Ok(e)
}

/// True iff `0 ∈ set` and every nonzero element has a predecessor
/// `β - e_i` in the set.
pub fn is_connected_to_one(set: &[Exponent]) -> Result<bool> {
    let Some(first) = set.first() else {
        return Ok(false);
    };
    let len = first.len();
    if let Some(bad) = set.iter().find(|e| e.len() != len) {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: bad.len(),
        });
    }
    let members: BTreeSet<&Exponent> = set.iter().collect();
    if !members.contains(&Exponent::zero(len)) {
        return Ok(false);
    }
    Ok(set.iter().all(|beta| {
        beta.is_one()
            || (0..len).any(|i| beta.div_var(i).is_some_and(|p| members.contains(&p)))
    }))
}

/// A monomial basis `B` connected to 1, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialBasis {
    n: usize,
    elements: Vec<Exponent>,
}

impl MonomialBasis {
    pub fn new(n: usize, elements: Vec<Exponent>) -> Result<Self> {
        if let Some(bad) = elements.iter().find(|e| e.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let mut sorted = elements;
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBasis("repeated monomial".into()));
        }
        if !is_connected_to_one(&sorted)? {
            return Err(Error::InvalidBasis("not connected to 1".into()));
        }
        Ok(MonomialBasis {
            n,
            elements: sorted,
        })
    }

    /// Parses a comma separated list of affine monomials, e.g. `"1,x"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|m| parse_monomial(m, n, Space::Affine))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, elements)
    }

    /// The first `mu` affine monomials in canonical order.
    pub fn initial_segment(n: usize, mu: usize) -> Self {
        let mut elements = Vec::new();
        let mut d = 0;
        while elements.len() < mu {
            for m in monomials_of_degree(n, d) {
                if elements.len() == mu {
                    break;
                }
                elements.push(m);
            }
            d += 1;
        }
        MonomialBasis { n, elements }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Exponent] {
        &self.elements
    }

    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.index_of(e).is_some()
    }

    pub fn border(&self) -> BorderSet {
        border(self)
    }

    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.render(Space::Affine)).collect()
    }
}

/// A basis together with its border `∂B = B⁺ - B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderSet {
    basis: MonomialBasis,
    boundary: Vec<Exponent>,
}

impl BorderSet {
    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn boundary(&self) -> &[Exponent] {
        &self.boundary
    }

    /// Number of border monomials.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn boundary_index(&self, e: &Exponent) -> Option<usize> {
        self.boundary.binary_search(e).ok()
    }

    /// `B⁺ = B ∪ ∂B` in canonical order.
    pub fn plus(&self) -> Vec<Exponent> {
        let mut all: Vec<Exponent> = self
            .basis
            .elements
            .iter()
            .chain(&self.boundary)
            .cloned()
            .collect();
        all.sort();
        all
    }
}

pub fn border(basis: &MonomialBasis) -> BorderSet {
    let mut boundary = BTreeSet::new();
    for beta in &basis.elements {
        for i in 0..basis.n {
            let m = beta.times_var(i);
            if !basis.contains(&m) {
                boundary.insert(m);
            }
        }
    }
    BorderSet {
        basis: basis.clone(),
        boundary: boundary.into_iter().collect(),
    }
}

/// All exponents of length `nvars` and total degree `d`, in canonical order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Exponent> {
    fn fill(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Exponent>) {
        if left == 1 {
            prefix.push(d);
            out.push(Exponent::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            fill(prefix, left - 1, d - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Exponent::zero(0));
        }
        return out;
    }
    fill(&mut Vec::new(), nvars, d, &mut out);
    out.sort();
    out
}

/// Prepends the `x0` power `d - deg(e)`.
pub fn homogenize(e: &Exponent, d: u32) -> Result<Exponent> {
    let deg = e.degree();
    if deg > d {
        return Err(Error::DegreeOverflow { degree: deg, target: d });
    }
    let mut exps = Vec::with_capacity(e.len() + 1);
    exps.push(d - deg);
    exps.extend_from_slice(e.as_slice());
    Ok(Exponent::new(exps))
}

/// Drops the `x0` entry.
pub fn dehomogenize(e: &Exponent) -> Exponent {
    Exponent::new(e.as_slice()[1..].to_vec())
}
