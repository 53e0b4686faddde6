//! Quadratic equations of the punctual Hilbert scheme in Plücker
//! coordinates, and the pointwise membership test.
//!
//! Commutation and generation equations are built from families `u·B` of
//! degree-`d` forms, where `B` is a family of `μ` monomials of degree `d-1`
//! and `u = u0*x0 + ... + un*xn`. With `u` fixed the generators are
//! quadratic forms in the `Delta` variables; with `u` symbolic each
//! generator is a polynomial in the `U` variables whose coefficients are the
//! full set of equations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinat::{combinations, multisets};
use crate::error::{Error, Result};
use crate::exactpoly::{canonical_equation_set, MultiPoly, Polynomial, Rational, Term, VarName};
use crate::monomial::{monomials_of_degree, Exponent, Space};
use crate::pluecker::{check_plucker, expand_family, PlueckerKey, PlueckerPoint};

/// A nonzero linear form `c0*x0 + ... + cn*xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("linear form is zero".into()));
        }
        Ok(LinearForm(coeffs))
    }

    /// The coordinate `x_i` among `x0..xn`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[i] = Rational::one();
        LinearForm(c)
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let p = Polynomial::parse(s, n + 1, Space::Projective)?;
        if p.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidArgument(format!("{s:?} is not a nonzero linear form")));
        }
        Self::new((0..=n).map(|i| p.coeff(&Exponent::unit(n + 1, i))).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn render(&self) -> String {
        let n1 = self.0.len();
        Polynomial::from_terms(
            n1,
            self.0.iter().enumerate().map(|(i, c)| (Exponent::unit(n1, i), c.clone())),
        )
        .render(Space::Projective)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0.iter().zip(point).fold(Rational::zero(), |acc, (c, p)| acc + c * p)
    }
}

/// How `u` enters the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UMode {
    Symbolic,
    Fixed(LinearForm),
}

/// Which generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    TwoGrassmannian,
    Commutation,
    Generation,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TwoGrassmannian => "two-grassmannian",
            Kind::Commutation => "commutation",
            Kind::Generation => "generation",
        }
    }
}

/// Equation set mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// Union over the listed forms of the `u`-fixed generators.
    UFixed(Vec<LinearForm>),
    /// All coefficients of the `u`-parametric generators.
    FullK,
}

/// Sizes and family restriction shared by all generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    /// Families of `μ` projective monomials of degree `d-1`; all multisets when `None`.
    pub families: Option<Vec<Vec<Exponent>>>,
}

impl Scope {
    pub fn new(n: usize, d: u32, mu: usize) -> Result<Self> {
        if mu == 0 {
            return Err(Error::InvalidArgument("length must be positive".into()));
        }
        if (d as usize) < mu {
            return Err(Error::DegreeBelowLength { d, mu });
        }
        Ok(Scope {
            n,
            d,
            mu,
            families: None,
        })
    }

    pub fn with_families(mut self, families: Vec<Vec<Exponent>>) -> Result<Self> {
        for f in &families {
            if f.len() != self.mu {
                return Err(Error::SizeMismatch(format!(
                    "family of {} monomials for mu = {}",
                    f.len(),
                    self.mu
                )));
            }
            for m in f {
                if m.len() != self.n + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: self.n + 1,
                        found: m.len(),
                    });
                }
                if m.degree() + 1 != self.d {
                    return Err(Error::DegreeMismatch {
                        expected: self.d - 1,
                        found: m.degree(),
                    });
                }
            }
        }
        self.families = Some(families);
        Ok(self)
    }

    pub fn families(&self) -> Vec<Vec<Exponent>> {
        if let Some(f) = &self.families {
            return f.clone();
        }
        let s = monomials_of_degree(self.n + 1, self.d - 1);
        multisets(s.len(), self.mu)
            .into_iter()
            .map(|idx| idx.into_iter().map(|i| s[i].clone()).collect())
            .collect()
    }
}

/// One entry of an index family: a fixed monomial of degree `d`, or `u·m`
/// for a monomial `m` of degree `d-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Mono(Exponent),
    U(Exponent),
}

/// A signed product `Δ_F · Δ_G`.
pub type Product = (i8, Vec<Slot>, Vec<Slot>);

/// One generator, before expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `Σ_{b'} Δ_{uB[ub'|x_i b]} Δ_{uB[ub''|x_j b']} - Δ_{uB[ub'|x_j b]} Δ_{uB[ub''|x_i b']}`
    /// with `b`, `b''` positions in `B` and `1 <= i < j <= n`.
    Commutation {
        family: Vec<Exponent>,
        b: usize,
        b2: usize,
        i: usize,
        j: usize,
    },
    /// `Δ_{uB[ub|x_k a]} Δ_{uB} - Σ_{b'} Δ_{uB[ub|x_k b']} Δ_{uB[ub'|ua]}`.
    Generation {
        family: Vec<Exponent>,
        b: usize,
        a: Exponent,
        k: usize,
    },
    /// `Δ_B Δ'_{B',x_k a} - Σ_{b ∈ B} Δ_{B[b|a]} Δ'_{B',x_k b}`.
    TwoGrassmannian {
        family: Vec<Exponent>,
        prime: Vec<Exponent>,
        a: Exponent,
        k: usize,
    },
}

fn u_family(family: &[Exponent]) -> Vec<Slot> {
    family.iter().cloned().map(Slot::U).collect()
}

fn replaced(mut slots: Vec<Slot>, pos: usize, s: Slot) -> Vec<Slot> {
    slots[pos] = s;
    slots
}

impl Generator {
    pub fn kind(&self) -> Kind {
        match self {
            Generator::Commutation { .. } => Kind::Commutation,
            Generator::Generation { .. } => Kind::Generation,
            Generator::TwoGrassmannian { .. } => Kind::TwoGrassmannian,
        }
    }

    /// Signed products for the single-Grassmannian generators.
    pub fn products(&self) -> Vec<Product> {
        match self {
            Generator::Commutation { family, b, b2, i, j } => {
                let ub = u_family(family);
                let mut out = Vec::new();
                for (bp, mbp) in family.iter().enumerate() {
                    let xb = |v: usize| Slot::Mono(family[*b].times_var(v));
                    let xbp = |v: usize| Slot::Mono(mbp.times_var(v));
                    out.push((1, replaced(ub.clone(), bp, xb(*i)), replaced(ub.clone(), *b2, xbp(*j))));
                    out.push((-1, replaced(ub.clone(), bp, xb(*j)), replaced(ub.clone(), *b2, xbp(*i))));
                }
                out
            }
            Generator::Generation { family, b, a, k } => {
                let ub = u_family(family);
                let mut out = vec![(1, replaced(ub.clone(), *b, Slot::Mono(a.times_var(*k))), ub.clone())];
                for (bp, mbp) in family.iter().enumerate() {
                    out.push((
                        -1,
                        replaced(ub.clone(), *b, Slot::Mono(mbp.times_var(*k))),
                        replaced(ub.clone(), bp, Slot::U(a.clone())),
                    ));
                }
                out
            }
            Generator::TwoGrassmannian { .. } => Vec::new(),
        }
    }

    /// The generator as a polynomial in `Delta` (and `DeltaPrime`) variables,
    /// with `U` variables when `u` is symbolic.
    pub fn polynomial(&self, u: &UMode) -> MultiPoly {
        if let Generator::TwoGrassmannian { family, prime, a, k } = self {
            return two_grassmannian_polynomial(family, prime, a, *k);
        }
        let mut out = MultiPoly::zero();
        for (sign, f, g) in self.products() {
            let ef = slot_expansion(&f, u);
            if ef.is_empty() {
                continue;
            }
            let eg = slot_expansion(&g, u);
            let sign = Rational::from_integer(sign.into());
            for (kf, cf) in &ef {
                for (kg, cg) in &eg {
                    let delta = Term::from_pairs([(VarName::Delta(kf.clone()), 1), (VarName::Delta(kg.clone()), 1)]);
                    for (t, c) in (cf * cg).terms() {
                        out.add_term(t.mul(&delta), c * &sign);
                    }
                }
            }
        }
        out
    }
}

fn two_grassmannian_polynomial(family: &[Exponent], prime: &[Exponent], a: &Exponent, k: usize) -> MultiPoly {
    let mono = |ms: &[Exponent]| -> BTreeMap<PlueckerKey, Rational> {
        let slots: Vec<Vec<(Exponent, Rational)>> =
            ms.iter().map(|m| vec![(m.clone(), Rational::one())]).collect();
        expand_family(&slots)
    };
    let with_last = |m: Exponent| {
        let mut v = prime.to_vec();
        v.push(m);
        v
    };
    let mut terms: Vec<(Rational, Vec<Exponent>, Vec<Exponent>)> =
        vec![(Rational::one(), family.to_vec(), with_last(a.times_var(k)))];
    for (pos, b) in family.iter().enumerate() {
        let mut fam = family.to_vec();
        fam[pos] = a.clone();
        terms.push((-Rational::one(), fam, with_last(b.times_var(k))));
    }
    let mut out = MultiPoly::zero();
    for (c, f, g) in terms {
        for (kf, cf) in mono(&f) {
            for (kg, cg) in mono(&g) {
                let t = Term::from_pairs([(VarName::Delta(kf.clone()), 1), (VarName::DeltaPrime(kg), 1)]);
                out.add_term(t, &c * &cf * cg);
            }
        }
    }
    out
}

/// Multilinear expansion of `Δ` over a slot family; coefficients are
/// polynomials in the `U` variables (constants when `u` is fixed).
pub fn slot_expansion(slots: &[Slot], u: &UMode) -> BTreeMap<PlueckerKey, MultiPoly> {
    let expanded: Vec<Vec<(Exponent, MultiPoly)>> = slots
        .iter()
        .map(|s| match s {
            Slot::Mono(m) => vec![(m.clone(), MultiPoly::one())],
            Slot::U(m) => match u {
                UMode::Symbolic => (0..m.len())
                    .map(|i| (m.times_var(i), MultiPoly::var(VarName::U(i))))
                    .collect(),
                UMode::Fixed(form) => form
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (m.times_var(i), MultiPoly::constant(c.clone())))
                    .collect(),
            },
        })
        .collect();
    expand_family(&expanded)
}

/// Generators of one kind, in enumeration order.
///
/// Commutation pairs are `1 <= i < j <= n` for symbolic `u`. For a fixed
/// form they are `0 <= i < j <= n`: when the form is not `x0` the pairs
/// involving `x0` are needed, and when it is `x0` they vanish identically.
pub fn generators(scope: &Scope, kind: Kind, u: &UMode) -> Vec<Generator> {
    let (n, mu) = (scope.n, scope.mu);
    let first = match u {
        UMode::Symbolic => 1,
        UMode::Fixed(_) => 0,
    };
    let mut out = Vec::new();
    match kind {
        Kind::Commutation => {
            for family in scope.families() {
                for b in 0..mu {
                    for b2 in 0..mu {
                        for i in first..=n {
                            for j in i + 1..=n {
                                out.push(Generator::Commutation {
                                    family: family.clone(),
                                    b,
                                    b2,
                                    i,
                                    j,
                                });
                            }
                        }
                    }
                }
            }
        }
        Kind::Generation => {
            let s = monomials_of_degree(n + 1, scope.d - 1);
            for family in scope.families() {
                for b in 0..mu {
                    for a in &s {
                        for k in 0..=n {
                            out.push(Generator::Generation {
                                family: family.clone(),
                                b,
                                a: a.clone(),
                                k,
                            });
                        }
                    }
                }
            }
        }
        Kind::TwoGrassmannian => {
            let sd = monomials_of_degree(n + 1, scope.d);
            let sd1 = monomials_of_degree(n + 1, scope.d + 1);
            let pick = |pool: &[Exponent], k: usize| -> Vec<Vec<Exponent>> {
                combinations(pool.len(), k)
                    .into_iter()
                    .map(|c| c.into_iter().map(|i| pool[i].clone()).collect())
                    .collect()
            };
            let primes = pick(&sd1, mu - 1);
            for family in pick(&sd, mu) {
                for prime in &primes {
                    for a in &sd {
                        for k in 0..=n {
                            out.push(Generator::TwoGrassmannian {
                                family: family.clone(),
                                prime: prime.clone(),
                                a: a.clone(),
                                k,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// A generated set of equations with its context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSet {
    pub scope: Scope,
    pub kinds: Vec<Kind>,
    pub mode: Mode,
    pub equations: Vec<MultiPoly>,
    /// Generators whose expansion vanished identically.
    pub dropped_trivial: usize,
}

/// Turns expanded generator polynomials into equations for `mode`:
/// in `FullK` mode each is split into its coefficients in the `U` variables.
pub fn assemble(scope: &Scope, kinds: &[Kind], mode: &Mode, polys: Vec<MultiPoly>) -> EquationSet {
    let dropped_trivial = polys.iter().filter(|p| p.is_zero()).count();
    let equations = match mode {
        Mode::UFixed(_) => canonical_equation_set(polys).0,
        Mode::FullK => {
            let coeffs = polys
                .into_iter()
                .flat_map(|p| p.coefficients_in(VarName::is_u).into_values().collect::<Vec<_>>());
            canonical_equation_set(coeffs).0
        }
    };
    EquationSet {
        scope: scope.clone(),
        kinds: kinds.to_vec(),
        mode: mode.clone(),
        equations,
        dropped_trivial,
    }
}

/// Expanded generator polynomials for `kinds` under `mode`, in enumeration order.
pub fn generator_polynomials(scope: &Scope, kinds: &[Kind], mode: &Mode) -> Vec<MultiPoly> {
    let mut polys = Vec::new();
    for &kind in kinds {
        match mode {
            Mode::FullK => {
                let u = UMode::Symbolic;
                polys.extend(generators(scope, kind, &u).iter().map(|g| g.polynomial(&u)));
            }
            Mode::UFixed(forms) => {
                for form in forms {
                    let u = UMode::Fixed(form.clone());
                    polys.extend(generators(scope, kind, &u).iter().map(|g| g.polynomial(&u)));
                }
            }
        }
    }
    polys
}

pub fn generate(scope: &Scope, kinds: &[Kind], mode: &Mode) -> EquationSet {
    assemble(scope, kinds, mode, generator_polynomials(scope, kinds, mode))
}

fn check_form(n: usize, u: &LinearForm) -> Result<()> {
    if u.coeffs().len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: u.coeffs().len(),
        });
    }
    Ok(())
}

pub fn two_grassmannian_equations(n: usize, d: u32, mu: usize) -> Result<EquationSet> {
    let scope = Scope::new(n, d, mu)?;
    Ok(generate(&scope, &[Kind::TwoGrassmannian], &Mode::FullK))
}

pub fn commutation_equations_u(n: usize, d: u32, mu: usize, u: &LinearForm) -> Result<EquationSet> {
    check_form(n, u)?;
    let scope = Scope::new(n, d, mu)?;
    Ok(generate(&scope, &[Kind::Commutation], &Mode::UFixed(vec![u.clone()])))
}

pub fn generation_equations_u(n: usize, d: u32, mu: usize, u: &LinearForm) -> Result<EquationSet> {
    check_form(n, u)?;
    let scope = Scope::new(n, d, mu)?;
    Ok(generate(&scope, &[Kind::Generation], &Mode::UFixed(vec![u.clone()])))
}

pub fn commutation_equations_full(n: usize, d: u32, mu: usize) -> Result<EquationSet> {
    let scope = Scope::new(n, d, mu)?;
    Ok(generate(&scope, &[Kind::Commutation], &Mode::FullK))
}

pub fn generation_equations_full(n: usize, d: u32, mu: usize) -> Result<EquationSet> {
    let scope = Scope::new(n, d, mu)?;
    Ok(generate(&scope, &[Kind::Generation], &Mode::FullK))
}

/// Substitutes `u = form` into symbolic generator polynomials.
pub fn specialize(poly: &MultiPoly, form: &LinearForm) -> MultiPoly {
    poly.substitute_with(|v| match v {
        VarName::U(i) => Some(form.coeffs()[*i].clone()),
        _ => None,
    })
}

/// Result of the membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// A full-mode equation that does not vanish at the point.
    pub witness: Option<MultiPoly>,
}

/// Evaluates generators at a point, as polynomials in the `U` variables,
/// caching `Δ_{uF}(P)` per family.
pub struct PointEvaluator<'a> {
    point: &'a PlueckerPoint,
    cache: BTreeMap<Vec<Slot>, MultiPoly>,
}

impl<'a> PointEvaluator<'a> {
    pub fn new(point: &'a PlueckerPoint) -> Self {
        PointEvaluator {
            point,
            cache: BTreeMap::new(),
        }
    }

    fn family_value(&mut self, slots: &[Slot]) -> MultiPoly {
        if let Some(v) = self.cache.get(slots) {
            return v.clone();
        }
        let mut v = MultiPoly::zero();
        for (key, c) in slot_expansion(slots, &UMode::Symbolic) {
            let x = self.point.coordinate(&key);
            if !x.is_zero() {
                v.add_scaled(&c, &x);
            }
        }
        self.cache.insert(slots.to_vec(), v.clone());
        v
    }

    /// The generator at the point; zero iff all its coefficient equations vanish.
    pub fn evaluate(&mut self, g: &Generator) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (sign, f, h) in g.products() {
            let vf = self.family_value(&f);
            if vf.is_zero() {
                continue;
            }
            let vh = self.family_value(&h);
            out.add_scaled(&(&vf * &vh), &Rational::from_integer(sign.into()));
        }
        out
    }
}

/// A full-mode coefficient equation of `g` that does not vanish at `p`.
pub fn witness_for(g: &Generator, p: &PlueckerPoint) -> Option<MultiPoly> {
    g.polynomial(&UMode::Symbolic)
        .coefficients_in(VarName::is_u)
        .into_values()
        .find(|eq| !p.evaluate(eq).is_zero())
        .and_then(|eq| eq.normalized())
}

fn membership_checks(p: &PlueckerPoint) -> Result<Scope> {
    let scope = Scope::new(p.n(), p.d(), p.mu())?;
    if !check_plucker(p) {
        return Err(Error::NotGrassmannianPoint);
    }
    Ok(scope)
}

/// All commutation and generation generators for the point's sizes.
pub fn membership_generators(p: &PlueckerPoint) -> Result<Vec<Generator>> {
    let scope = membership_checks(p)?;
    let mut gens = generators(&scope, Kind::Commutation, &UMode::Symbolic);
    gens.extend(generators(&scope, Kind::Generation, &UMode::Symbolic));
    Ok(gens)
}

/// True iff every commutation and generation equation vanishes at `p`.
pub fn membership(p: &PlueckerPoint) -> Result<Membership> {
    let gens = membership_generators(p)?;
    let mut eval = PointEvaluator::new(p);
    for g in &gens {
        if !eval.evaluate(g).is_zero() {
            return Ok(Membership {
                member: false,
                witness: witness_for(g, p),
            });
        }
    }
    Ok(Membership {
        member: true,
        witness: None,
    })
}
