use thiserror::Error;

/// Failures of the generic algebra: composition, the annihilator calculus,
/// kernels and factorizations, and enumeration budgets.
///
/// Every variant that signals a structural failure of the instance carries a
/// rendered witness so reports can quote it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compose {f} after {g}: codomain of {g} is {g_cod}, domain of {f} is {f_dom}")]
    DomainMismatch {
        f: String,
        g: String,
        f_dom: String,
        g_cod: String,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    #[error("{0} is not a projection")]
    NotAProjection(String),

    #[error("instance has no zero object")]
    NoZeroObject,

    #[error("no inverse for {morphism}")]
    NoInverse { morphism: String },

    #[error("{morphism} has {} inverses: {}", candidates.len(), candidates.join(", "))]
    AmbiguousInverse {
        morphism: String,
        candidates: Vec<String>,
    },

    #[error("no annihilator projection for {morphism}: {witness}")]
    NoAnnihilator { morphism: String, witness: String },

    #[error("annihilator of {morphism} is not unique: {}", candidates.join(", "))]
    AmbiguousAnnihilator {
        morphism: String,
        candidates: Vec<String>,
    },

    #[error("no kernel for {morphism}")]
    NoKernel { morphism: String },

    #[error("no cokernel for {morphism}")]
    NoCokernel { morphism: String },

    #[error("no mono-epi factorization for {morphism}")]
    NoFactorization { morphism: String },

    #[error("projection {projection} has no monomorphism u with u u* equal to it")]
    NoSubobject { projection: String },

    #[error("{0} is not a monomorphism")]
    NotMono(String),

    #[error("square does not commute: {0}")]
    NonCommutingSquare(String),

    #[error("projections on {object} do not form a meet semilattice: {witness}")]
    NotSemilattice { object: String, witness: String },

    #[error("{0} is not an element of the projection lattice it was applied to")]
    OutsideLattice(String),

    #[error(
        "enumeration budget exceeded: Hom({dom}, {cod}) has {size} morphisms, limit is {limit}"
    )]
    BudgetExceeded {
        dom: String,
        cod: String,
        size: u128,
        limit: usize,
    },

    #[error("malformed table category: {0}")]
    MalformedTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
