use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("poset has {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("empty poset")]
    EmptyPoset,
    #[error("`{0}` and `{1}` have no unique meet")]
    NotMeetSemilattice(String, String),
    #[error("meet of the empty set")]
    EmptySet,
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("not a poset ideal: {0}")]
    NotPosetIdeal(String),
    #[error("not a poset coideal: {0}")]
    NotPosetCoideal(String),
    #[error("semilattice is not meet-distributive")]
    NotMeetDistributive,
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("not a lattice")]
    NotLattice,
    #[error("order is not a permutation of the minimal generators")]
    NotMinimal,
    #[error("search exceeded its step budget of {0}")]
    Timeout(u64),
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("lift failed for {0}; the partial complex is not exact")]
    LiftFailed(String),
    #[error("not a complex: d_{degree} * d_{} is nonzero at row {row}, column {col}", degree + 1)]
    NotAComplex { degree: usize, row: usize, col: usize },
    #[error("entry of d_{degree} at row {row}, column {col} is not multihomogeneous")]
    NotHomogeneous { degree: usize, row: usize, col: usize },
    #[error("strand at multidegree {multidegree} is not exact in homological degree {degree}")]
    NotExact { multidegree: String, degree: usize },
    #[error("strand at multidegree {0} has the wrong zeroth homology")]
    WrongH0(String),
    #[error("augmentation does not generate the target ideal")]
    WrongAugmentation,
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("unit ideal")]
    UnitIdeal,
    #[error("poset ideal is empty")]
    EmptyIdeal,
    #[error("simplicial complex has no facets")]
    NoFacets,
    #[error("hypothesis ({0}) does not hold: {1}")]
    HypothesisViolated(u8, String),
    #[error("bipartite graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
