use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{is_one, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::monomial::{parse_monomial, Exponent, Space};

/// Sparse polynomial in the coordinate variables, keyed by exponent vectors
/// of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    len: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero(len: usize) -> Self {
        Polynomial {
            len,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(e: Exponent) -> Self {
        Self::term(e, Rational::one())
    }

    pub fn term(e: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    pub fn from_terms(len: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(len);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `Σ coeffs[k] · monomials[k]`.
    pub fn from_coefficients(len: usize, monomials: &[Exponent], coeffs: &[Rational]) -> Self {
        Self::from_terms(len, monomials.iter().cloned().zip(coeffs.iter().cloned()))
    }

    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        assert_eq!(e.len(), self.len, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        self.len
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients over a list of monomials; other terms are ignored.
    pub fn coefficients(&self, monomials: &[Exponent]) -> Vec<Rational> {
        monomials.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// The common degree of all terms, if any.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Exponent::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_terms(self.len, self.terms.iter().map(|(e, a)| (e.clone(), a * c)))
    }

    pub fn mul_monomial(&self, m: &Exponent) -> Polynomial {
        Polynomial::from_terms(self.len, self.terms.iter().map(|(e, a)| (e.mul(m), a.clone())))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * e.eval(point))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Parses text like `x0^2 + 2*x0*x1 - 1/2*x1^2` or `y^3 - x`.
    pub fn parse(s: &str, len: usize, space: Space) -> Result<Polynomial> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        let mut prev = None;
        for (i, ch) in text.chars().enumerate() {
            let after_caret = prev == Some('^');
            prev = Some(ch);
            if (ch == '+' || ch == '-') && !after_caret {
                if !current.is_empty() {
                    chunks.push((negative, core::mem::take(&mut current)));
                } else if i > 0 {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        chunks.push((negative, current));
        let mut p = Polynomial::zero(len);
        for (neg, chunk) in chunks {
            let split = chunk
                .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                .unwrap_or(chunk.len());
            let (num, rest) = chunk.split_at(split);
            let coeff = if num.is_empty() {
                Rational::one()
            } else {
                parse_rational(num)?
            };
            let rest = rest.strip_prefix('*').unwrap_or(rest);
            let mono = if rest.is_empty() {
                Exponent::zero(len)
            } else {
                parse_monomial(rest, len, space)?
            };
            p.add_term(mono, if neg { -coeff } else { coeff });
        }
        Ok(p)
    }

    pub fn render(&self, space: Space) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let a = c.abs();
            if c.is_negative() {
                out.push_str(if k == 0 { "-" } else { " - " });
            } else if k > 0 {
                out.push_str(" + ");
            }
            if e.is_one() {
                out.push_str(&format!("{a}"));
            } else if is_one(&a) {
                out.push_str(&e.render(space));
            } else {
                out.push_str(&format!("{a}*{}", e.render(space)));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.len);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}
