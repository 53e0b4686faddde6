//! Seeded random fixtures. All draws are small integers so that outputs stay
//! readable and reproducible across platforms.

use hilbkit_core::border_basis::BorderCoefficients;
use hilbkit_core::exactpoly::{int, Rational, RationalMatrix};
use hilbkit_core::fixtures::{border_coeffs_from_points, vanishing_subspace, PointConfiguration, PointEntry};
use hilbkit_core::monomial::{monomials_of_degree, MonomialBasis};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: usize = 10_000;

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Entries are drawn from `[-range, range]`.
    pub range: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range: 5,
        }
    }

    pub fn with_range(mut self, range: i64) -> Self {
        self.range = range.max(1);
        self
    }

    pub fn integer(&mut self) -> i64 {
        self.rng.gen_range(-self.range..=self.range)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// `k` distinct indices in `0..bound`, in draw order.
    pub fn distinct(&mut self, bound: usize, k: usize) -> Vec<usize> {
        rand::seq::index::sample(&mut self.rng, bound, k).into_vec()
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| int(self.integer())).collect()
    }

    /// A point of `P^n` in the chart `x0 = 1`.
    pub fn affine_point(&mut self, n: usize) -> Vec<Rational> {
        std::iter::once(int(1)).chain(self.vector(n)).collect()
    }

    /// A nonzero rational with small numerator and denominator.
    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let p = self.integer();
            if p != 0 {
                return Rational::new(p.into(), self.rng.gen_range(1..=self.range).into());
            }
        }
    }

    /// `mu` distinct simple points in the chart `x0 = 1`, or `mu - 2` simple
    /// points and one double point when `double` is set; the conditions in
    /// degree `d` have full rank.
    pub fn configuration(&mut self, n: usize, mu: usize, d: u32, double: bool) -> Option<PointConfiguration> {
        if double && mu < 2 {
            return None;
        }
        for _ in 0..MAX_ATTEMPTS {
            let mut entries = Vec::new();
            if double {
                entries.push(PointEntry::Double {
                    point: self.affine_point(n),
                    direction: self.vector(n),
                });
            }
            while entries.iter().map(PointEntry::length).sum::<usize>() < mu {
                entries.push(PointEntry::Simple(self.affine_point(n)));
            }
            if let Ok(c) = PointConfiguration::new(n, entries) {
                if vanishing_subspace(&c, d).is_ok() {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Simple points on which `basis` is an interpolation basis, with the
    /// resulting border coefficients.
    pub fn chart_fixture(&mut self, basis: &MonomialBasis) -> Option<(PointConfiguration, BorderCoefficients)> {
        for _ in 0..MAX_ATTEMPTS {
            let pts = (0..basis.mu()).map(|_| self.vector(basis.n())).collect();
            if let Ok(c) = PointConfiguration::from_affine(basis.n(), pts) {
                if let Ok(z) = border_coeffs_from_points(basis, &c) {
                    return Some((c, z));
                }
            }
        }
        None
    }

    /// Rows spanning a random subspace of `S_d` of codimension `mu`.
    pub fn subspace(&mut self, n: usize, d: u32, mu: usize) -> Option<RationalMatrix> {
        let s = monomials_of_degree(n + 1, d).len();
        let k = s.checked_sub(mu)?;
        for _ in 0..MAX_ATTEMPTS {
            let rows = (0..k).map(|_| self.vector(s)).collect();
            let m = RationalMatrix::from_rows(rows, s).ok()?;
            if m.rank() == k {
                return Some(m);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hilbkit_core::border_basis::is_border_basis;

    #[test]
    fn seeds_are_reproducible() {
        let a = Sampler::new(42).configuration(2, 3, 3, false).unwrap();
        let b = Sampler::new(42).configuration(2, 3, 3, false).unwrap();
        assert_eq!(a, b);
        let c = Sampler::new(43).configuration(2, 3, 3, false).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn draws_respect_requested_shapes() {
        let mut s = Sampler::new(1).with_range(3);
        let c = s.configuration(2, 3, 3, true).unwrap();
        assert_eq!(c.length(), 3);
        assert_eq!(c.points().len(), 2);
        let basis = MonomialBasis::parse("1,x,y", 2).unwrap();
        let (_, z) = s.chart_fixture(&basis).unwrap();
        assert!(is_border_basis(&z));
        let m = s.subspace(2, 2, 2).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank()), (4, 6, 4));
        assert!(s.configuration(2, 1, 1, true).is_none());
    }
}
