//! Data-parallel evaluation, capped by `HILBKIT_THREADS`.

use hilbkit_core::exactpoly::MultiPoly;
use hilbkit_core::hilbert_equations::{assemble, generators, EquationSet, Kind, Mode, Scope, UMode};
use hilbkit_core::pluecker::PlueckerPoint;
use rayon::prelude::*;

pub const THREADS_VAR: &str = "HILBKIT_THREADS";

/// Runs `f` on a pool sized by `HILBKIT_THREADS`, or rayon's default when unset.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_VAR)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Same output as [`hilbkit_core::hilbert_equations::generate`]; generator
/// expansion runs in parallel, ordering is preserved.
pub fn generate(scope: &Scope, kinds: &[Kind], mode: &Mode) -> EquationSet {
    let mut jobs: Vec<(Kind, UMode)> = Vec::new();
    for &kind in kinds {
        match mode {
            Mode::FullK => jobs.push((kind, UMode::Symbolic)),
            Mode::UFixed(forms) => jobs.extend(forms.iter().map(|f| (kind, UMode::Fixed(f.clone())))),
        }
    }
    let polys: Vec<MultiPoly> = with_pool(|| {
        jobs.iter()
            .flat_map(|(kind, u)| {
                generators(scope, *kind, u)
                    .into_par_iter()
                    .map(|g| g.polynomial(u))
                    .collect::<Vec<_>>()
            })
            .collect()
    });
    assemble(scope, kinds, mode, polys)
}

/// Index of the first equation that does not vanish at `p`.
pub fn first_nonvanishing(equations: &[MultiPoly], p: &PlueckerPoint) -> Option<usize> {
    with_pool(|| equations.par_iter().position_first(|e| !p.evaluate(e).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hilbkit_core::hilbert_equations::{generate as serial, LinearForm};

    #[test]
    fn matches_serial_generation() {
        let scope = Scope::new(2, 2, 2).unwrap();
        let kinds = [Kind::Commutation, Kind::Generation];
        for mode in [
            Mode::FullK,
            Mode::UFixed(vec![LinearForm::variable(2, 0), LinearForm::variable(2, 1)]),
        ] {
            assert_eq!(generate(&scope, &kinds, &mode), serial(&scope, &kinds, &mode));
        }
    }
}
