//! Shared setup for the benchmark targets.

use rankone_core::catalog::AlgebraId;
use rankone_core::chevalley::ChevalleyAlgebra;

pub fn algebra(s: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(AlgebraId::parse(s).expect("valid id")).expect("catalog entry")
}
