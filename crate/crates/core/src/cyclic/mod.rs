//! Equivariant periodic cyclic cohomology of algebras with a finite group action.

mod algebra;
mod forms;
mod hkr;
mod hodge;
mod hp;
mod trace;

use thiserror::Error;

pub use algebra::GAlgebra;
pub use forms::{OmegaForms, ParamixedReport, ProjectorReport, DEFAULT_FORM_BUDGET};
pub use hkr::{hkr_alpha, hkr_check, HkrReport};
pub use hodge::{HodgeBlock, HodgeLevel};
pub use hp::{hom_homology, hp_at_level, HpOptions, HpResult, HpStrategy};
pub use trace::{TraceMap, TraceReport};

use crate::gcomplex::GComplexError;
use crate::homalg::HomalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("cyclic: forms need {needed} basis vectors, budget is {budget}")]
    Budget { needed: usize, budget: usize },
    #[error("cyclic: unstabilized computation needs unital algebras")]
    NotUnital,
    #[error("cyclic: level {level} needs forms up to degree {}, only {top} built", level + 1)]
    LevelOutOfRange { level: usize, top: usize },
    #[error("cyclic: invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("cyclic: expected a 0-dimensional complex, got dimension {0}")]
    NotZeroDimensional(i64),
    #[error("cyclic: verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Complex(#[from] GComplexError),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{cyclic, klein_four, trivial_group};
    use crate::Q;

    fn swap2() -> GAlgebra<Q> {
        GAlgebra::functions(&cyclic(2), &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn base_field_dims() {
        let g = trivial_group();
        let f = OmegaForms::new(&GAlgebra::<Q>::base_field(&g), 2, 1000).unwrap();
        assert_eq!(f.dims(), &[1, 2, 2]);
        let g = cyclic(2);
        let f = OmegaForms::new(&swap2(), 2, 1000).unwrap();
        assert_eq!(f.dims(), &[4, 12, 24]);
        assert_eq!(f.algebra().group(), &g);
    }

    #[test]
    fn paramixed_and_projector() {
        for a in [
            swap2(),
            GAlgebra::compact_operators(&cyclic(2)),
            GAlgebra::base_field(&klein_four()),
        ] {
            let f = OmegaForms::new(&a, 3, 20_000).unwrap();
            assert!(f.check_paramixed().holds(), "{}: {:?}", a.name(), f.check_paramixed());
            assert!(f.check_projector().holds(), "{}", a.name());
        }
    }

    #[test]
    fn hodge_level_of_base_field() {
        let g = trivial_group();
        let f = OmegaForms::new(&GAlgebra::<Q>::base_field(&g), 2, 1000).unwrap();
        let h = HodgeLevel::new(&f, 1).unwrap();
        assert_eq!(h.dims(), (1, 0));
    }

    #[test]
    fn hp_of_base_field() {
        for (g, want) in [(trivial_group(), 1), (cyclic(2), 2)] {
            let k = GAlgebra::<Q>::base_field(&g);
            for strategy in [HpStrategy::Literal, HpStrategy::Reduced] {
                let r = hp_at_level(
                    &k,
                    &k,
                    &HpOptions {
                        strategy,
                        ..HpOptions::default()
                    },
                )
                .unwrap();
                assert_eq!((r.even, r.odd), (want, 0));
            }
        }
    }

    #[test]
    fn strategies_agree_on_two_points() {
        let a = swap2();
        let lit = hp_at_level(&a, &a, &HpOptions::default()).unwrap();
        let red = hp_at_level(
            &a,
            &a,
            &HpOptions {
                strategy: HpStrategy::Reduced,
                ..HpOptions::default()
            },
        )
        .unwrap();
        assert_eq!(lit, red);
        // X̂ is the free orbit over the identity class; End_G of the regular representation
        assert_eq!((lit.even, lit.odd), (2, 0));
    }

    #[test]
    fn trace_commutes() {
        for a in [GAlgebra::<Q>::base_field(&cyclic(2)), swap2()] {
            let tr = TraceMap::new(&a, 2, 20_000).unwrap();
            let r = tr.check();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn k_g_is_simple() {
        let k = GAlgebra::<Q>::compact_operators(&cyclic(3));
        k.validate().unwrap();
        assert!(k.is_semisimple());
        assert_eq!(k.center_dim(), 1);
        assert_eq!(swap2().center_dim(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let k = GAlgebra::<Q>::compact_operators(&cyclic(3));
        assert!(matches!(OmegaForms::new(&k, 3, 1000), Err(CyclicError::Budget { .. })));
    }
}
