//! JSON wire formats. Every writer here has a matching reader.

use std::collections::BTreeMap;

use hilbkit_core::border_basis::{BorderCoefficients, ChartEquations};
use hilbkit_core::exactpoly::{format_rational, parse_rational, parse_varname, MultiPoly, Rational, Term};
use hilbkit_core::fixtures::{PointConfiguration, PointEntry};
use hilbkit_core::hilbert_equations::{EquationSet, Kind, Mode};
use hilbkit_core::monomial::{parse_monomial, Exponent, MonomialBasis, Space};
use hilbkit_core::pluecker::PlueckerPoint;
use hilbkit_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: BTreeMap<String, u32>,
}

pub type PolyJson = Vec<TermJson>;

pub fn poly_to_json(p: &MultiPoly) -> PolyJson {
    p.terms()
        .map(|(t, c)| TermJson {
            coeff: format_rational(c),
            monomial: t.factors().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
        })
        .collect()
}

/// `n` is the affine variable count used by `z[..]` and `h1[..]` names.
pub fn poly_from_json(p: &[TermJson], n: usize) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for t in p {
        let c = parse_rational(&t.coeff)?;
        let factors = t
            .monomial
            .iter()
            .map(|(v, e)| Ok((parse_varname(v, n)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        out.add_term(Term::from_pairs(factors), c);
    }
    Ok(out)
}

/// An exponent as an array of naturals, or as text such as `"x*y^2"` on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentJson {
    Array(Vec<u32>),
    Text(String),
}

impl ExponentJson {
    pub fn from_exponent(e: &Exponent) -> Self {
        ExponentJson::Array(e.as_slice().to_vec())
    }

    pub fn to_exponent(&self, len: usize, space: Space) -> Result<Exponent> {
        match self {
            ExponentJson::Array(v) if v.len() == len => Ok(Exponent::new(v.clone())),
            ExponentJson::Array(v) => Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            }),
            ExponentJson::Text(s) => parse_monomial(s, len, space),
        }
    }
}

fn space_name(space: Space) -> String {
    match space {
        Space::Affine => "affine".into(),
        Space::Projective => "projective".into(),
    }
}

fn expect_space(found: &str, want: Space) -> Result<()> {
    if found == space_name(want) {
        Ok(())
    } else {
        Err(Error::Parse(format!("expected space {:?}, found {found:?}", space_name(want))))
    }
}

fn exponents(es: &[Exponent]) -> Vec<ExponentJson> {
    es.iter().map(ExponentJson::from_exponent).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartEquationsJson {
    pub space: String,
    pub n: usize,
    pub basis: Vec<ExponentJson>,
    pub border: Vec<ExponentJson>,
    pub equations: Vec<PolyJson>,
}

impl ChartEquationsJson {
    pub fn from_chart(c: &ChartEquations) -> Self {
        ChartEquationsJson {
            space: space_name(Space::Affine),
            n: c.border.basis().n(),
            basis: exponents(c.border.basis().elements()),
            border: exponents(c.border.boundary()),
            equations: c.equations.iter().map(poly_to_json).collect(),
        }
    }

    pub fn to_chart(&self) -> Result<ChartEquations> {
        expect_space(&self.space, Space::Affine)?;
        let basis = read_basis(self.n, &self.basis)?;
        let border = basis.border();
        let listed = self
            .border
            .iter()
            .map(|e| e.to_exponent(self.n, Space::Affine))
            .collect::<Result<Vec<_>>>()?;
        if listed != border.boundary() {
            return Err(Error::InvalidBasis("border does not match the basis".into()));
        }
        let equations = self
            .equations
            .iter()
            .map(|p| poly_from_json(p, self.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChartEquations { border, equations })
    }
}

fn read_basis(n: usize, es: &[ExponentJson]) -> Result<MonomialBasis> {
    let elements = es
        .iter()
        .map(|e| e.to_exponent(n, Space::Affine))
        .collect::<Result<Vec<_>>>()?;
    MonomialBasis::new(n, elements)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub alpha: ExponentJson,
    pub beta: ExponentJson,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorderCoefficientsJson {
    pub space: String,
    pub n: usize,
    pub basis: Vec<ExponentJson>,
    pub values: Vec<CoefficientJson>,
}

impl BorderCoefficientsJson {
    pub fn from_coefficients(z: &BorderCoefficients) -> Self {
        BorderCoefficientsJson {
            space: space_name(Space::Affine),
            n: z.basis().n(),
            basis: exponents(z.basis().elements()),
            values: z
                .values()
                .iter()
                .map(|((a, b), v)| CoefficientJson {
                    alpha: ExponentJson::from_exponent(a),
                    beta: ExponentJson::from_exponent(b),
                    value: format_rational(v),
                })
                .collect(),
        }
    }

    pub fn to_coefficients(&self) -> Result<BorderCoefficients> {
        expect_space(&self.space, Space::Affine)?;
        let basis = read_basis(self.n, &self.basis)?;
        let mut values = BTreeMap::new();
        for c in &self.values {
            let key = (
                c.alpha.to_exponent(self.n, Space::Affine)?,
                c.beta.to_exponent(self.n, Space::Affine)?,
            );
            if values.insert(key, parse_rational(&c.value)?).is_some() {
                return Err(Error::Parse("repeated border coefficient".into()));
            }
        }
        BorderCoefficients::new(basis.border(), values)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordJson {
    pub key: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlueckerPointJson {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    pub coords: Vec<CoordJson>,
}

impl PlueckerPointJson {
    pub fn from_point(p: &PlueckerPoint) -> Self {
        PlueckerPointJson {
            n: p.n(),
            d: p.d(),
            mu: p.mu(),
            coords: p
                .coords()
                .iter()
                .map(|(k, v)| CoordJson {
                    key: k.iter().map(|m| m.render(Space::Projective)).collect(),
                    value: format_rational(v),
                })
                .collect(),
        }
    }

    pub fn to_point(&self) -> Result<PlueckerPoint> {
        let coords = self
            .coords
            .iter()
            .map(|c| {
                let key = c
                    .key
                    .iter()
                    .map(|m| parse_monomial(m, self.n + 1, Space::Projective))
                    .collect::<Result<Vec<_>>>()?;
                Ok((key, parse_rational(&c.value)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PlueckerPoint::new(self.n, self.d, self.mu, coords)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PointJson {
    Simple { coords: Vec<String> },
    Double { coords: Vec<String>, direction: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub n: usize,
    pub points: Vec<PointJson>,
    pub d: u32,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl FixtureJson {
    pub fn from_configuration(c: &PointConfiguration, d: u32, seed: Option<u64>) -> Self {
        FixtureJson {
            seed,
            n: c.n(),
            points: c
                .points()
                .iter()
                .map(|p| match p {
                    PointEntry::Simple(x) => PointJson::Simple { coords: strings(x) },
                    PointEntry::Double { point, direction } => PointJson::Double {
                        coords: strings(point),
                        direction: strings(direction),
                    },
                })
                .collect(),
            d,
        }
    }

    pub fn to_configuration(&self) -> Result<PointConfiguration> {
        let entries = self
            .points
            .iter()
            .map(|p| {
                Ok(match p {
                    PointJson::Simple { coords } => PointEntry::Simple(rationals(coords)?),
                    PointJson::Double { coords, direction } => PointEntry::Double {
                        point: rationals(coords)?,
                        direction: rationals(direction)?,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(self.n, entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextJson {
    pub n: usize,
    pub d: u32,
    pub mu: usize,
    pub kinds: Vec<String>,
    /// `"u-fixed"` or `"full-k"`.
    pub mode: String,
    /// Forms for `u-fixed`, rendered in `x0..xn`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSetJson {
    pub context: ContextJson,
    pub equations: Vec<PolyJson>,
    pub dropped_trivial: usize,
}

pub fn kind_from_name(s: &str) -> Result<Kind> {
    [Kind::TwoGrassmannian, Kind::Commutation, Kind::Generation]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown equation kind {s:?}")))
}

impl EquationSetJson {
    pub fn from_set(s: &EquationSet) -> Self {
        let (mode, u) = match &s.mode {
            Mode::FullK => ("full-k", None),
            Mode::UFixed(forms) => ("u-fixed", Some(forms.iter().map(|f| f.render()).collect())),
        };
        EquationSetJson {
            context: ContextJson {
                n: s.scope.n,
                d: s.scope.d,
                mu: s.scope.mu,
                kinds: s.kinds.iter().map(|k| k.name().to_string()).collect(),
                mode: mode.into(),
                u,
                families: s.scope.families.as_ref().map(|fs| {
                    fs.iter()
                        .map(|f| f.iter().map(|m| m.render(Space::Projective)).collect())
                        .collect()
                }),
            },
            equations: s.equations.iter().map(poly_to_json).collect(),
            dropped_trivial: s.dropped_trivial,
        }
    }

    pub fn to_set(&self) -> Result<EquationSet> {
        use hilbkit_core::hilbert_equations::{LinearForm, Scope};
        let c = &self.context;
        let mut scope = Scope::new(c.n, c.d, c.mu)?;
        if let Some(fs) = &c.families {
            let families = fs
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|m| parse_monomial(m, c.n + 1, Space::Projective))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            scope = scope.with_families(families)?;
        }
        let kinds = c.kinds.iter().map(|k| kind_from_name(k)).collect::<Result<Vec<_>>>()?;
        let mode = match (c.mode.as_str(), &c.u) {
            ("full-k", None) => Mode::FullK,
            ("u-fixed", Some(forms)) => Mode::UFixed(
                forms
                    .iter()
                    .map(|f| LinearForm::parse(f, c.n))
                    .collect::<Result<Vec<_>>>()?,
            ),
            (m, _) => return Err(Error::Parse(format!("bad mode {m:?} or missing u"))),
        };
        let equations = self
            .equations
            .iter()
            .map(|p| poly_from_json(p, c.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(EquationSet {
            scope,
            kinds,
            mode,
            equations,
            dropped_trivial: self.dropped_trivial,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hilbkit_core::border_basis::chart_equations;
    use hilbkit_core::exactpoly::int;
    use hilbkit_core::fixtures::{border_coeffs_from_points, plucker_fixture};
    use hilbkit_core::hilbert_equations::{commutation_equations_u, LinearForm};

    #[test]
    fn chart_equations_round_trip() {
        let c = chart_equations(&MonomialBasis::parse("1,x", 2).unwrap());
        let j = ChartEquationsJson::from_chart(&c);
        let text = serde_json::to_string(&j).unwrap();
        let back: ChartEquationsJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_chart().unwrap(), c);
        assert!(text.contains("z[y|x]"));
        assert!(text.contains("\"space\":\"affine\""));
    }

    #[test]
    fn coefficients_accept_text_exponents() {
        let text = r#"{"space":"affine","n":2,"basis":["1","x"],"values":[
            {"alpha":"y","beta":"1","value":"0/1"},{"alpha":"y","beta":"x","value":"1"},
            {"alpha":"x^2","beta":"1","value":"0"},{"alpha":"x^2","beta":"x","value":"1"},
            {"alpha":"x*y","beta":"1","value":"0"},{"alpha":[1,1],"beta":[1,0],"value":"1/1"}]}"#;
        let z: BorderCoefficientsJson = serde_json::from_str(text).unwrap();
        let z = z.to_coefficients().unwrap();
        let basis = MonomialBasis::parse("1,x", 2).unwrap();
        let c = PointConfiguration::from_affine(2, vec![vec![int(0), int(0)], vec![int(1), int(1)]]).unwrap();
        assert_eq!(z, border_coeffs_from_points(&basis, &c).unwrap());
        let again = BorderCoefficientsJson::from_coefficients(&z);
        assert_eq!(again.to_coefficients().unwrap(), z);
    }

    #[test]
    fn point_and_fixture_round_trip() {
        let c = PointConfiguration::new(
            2,
            vec![PointEntry::Double {
                point: vec![int(1), int(2), int(3)],
                direction: vec![int(0), int(1), int(-1)],
            }],
        )
        .unwrap();
        let f = FixtureJson::from_configuration(&c, 2, Some(7));
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.contains("\"type\":\"double\""));
        let back: FixtureJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_configuration().unwrap(), c);
        let p = plucker_fixture(&c, 2).unwrap();
        let pj = PlueckerPointJson::from_point(&p);
        let back: PlueckerPointJson = serde_json::from_str(&serde_json::to_string(&pj).unwrap()).unwrap();
        assert_eq!(back.to_point().unwrap(), p);
    }

    #[test]
    fn equation_set_round_trip() {
        let s = commutation_equations_u(2, 2, 2, &LinearForm::parse("x0 + 2*x1", 2).unwrap()).unwrap();
        let j = EquationSetJson::from_set(&s);
        let back: EquationSetJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_set().unwrap(), s);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let bad = PlueckerPointJson {
            n: 1,
            d: 2,
            mu: 2,
            coords: vec![CoordJson {
                key: vec!["x1^2".into(), "x0^2".into()],
                value: "1".into(),
            }],
        };
        assert!(bad.to_point().is_err());
        let poly = vec![TermJson {
            coeff: "0.5".into(),
            monomial: BTreeMap::new(),
        }];
        assert!(poly_from_json(&poly, 2).is_err());
    }
}
