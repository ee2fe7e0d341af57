//! Shared inputs for the criterion benchmarks.

use zerobound::zerocount::Subject;
use zerobound::{derive_params, enumerate_characters, BoundParameters, DirichletCharacter, PRule};

/// `eta = 1/4`, `p = -eta/7`, `T0 = 1`.
pub fn headline_params() -> BoundParameters {
    derive_params(0.25, PRule::EtaOver7, 1.0).expect("valid parameters")
}

/// The first primitive nonprincipal character mod `k`.
pub fn primitive_character(k: u64) -> DirichletCharacter {
    enumerate_characters(k)
        .expect("k >= 3")
        .into_iter()
        .find(|c| c.is_primitive() && !c.is_principal())
        .expect("k admits a primitive character")
}

pub fn dirichlet_subject(k: u64) -> Subject {
    Subject::dirichlet(primitive_character(k)).expect("primitive nonprincipal")
}
