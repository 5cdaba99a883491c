use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a generalized theta graph needs at least one branch")]
    EmptyTheta,
    #[error("a cycle of theta graphs needs at least 3 thetas, got {0}")]
    TooFewThetas(usize),
    #[error("thetas {first} and {second} are adjacent and both have a single branch")]
    AdjacentSingleBranches { first: usize, second: usize },
    #[error("theta {theta} has two unsubdivided branches, which are parallel edges")]
    MultiEdge { theta: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HatError {
    #[error("cover degree {0} is odd")]
    OddDegree(u64),
    #[error("cover degree must be at least 2")]
    ZeroDegree,
    #[error("orbifold with {0} reflection edges is degenerate (need at least 3)")]
    DegenerateOrbifold(u64),
    #[error("jester hat with {0} cone points has no torsion-free chamber (need at least 3)")]
    DegenerateHat(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid cover: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("cover has {cover} labels but the graph has {graph} thetas")]
    LabelCountMismatch { cover: usize, graph: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("witness ({i}, {k}) is not strongly repetitive (K = {big_k}, L = {big_l})")]
    NotStronglyRepetitive { i: usize, k: usize, big_k: u64, big_l: u64 },
    #[error("witness cannot be normalized: {0}")]
    WitnessNotNormalizable(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("graph has no strongly repetitive witness")]
    NoWitness,
    #[error("not a permuted pair: {0}")]
    NotPermutedPair(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error("class-S base arc must contain between 1 and N - 1 labels")]
    EmptyArc,
    #[error("expansion site ({u}, {w}) is missing labels {missing:?}")]
    SiteMissingLabels { u: usize, w: usize, missing: Vec<usize> },
    #[error("invalid expansion move: {0}")]
    InvalidMove(String),
    #[error("cycle count vectors differ")]
    CycleVectorMismatch,
    #[error("certificate does not reproduce its cover")]
    CertificateMismatch,
    #[error("inductive reconstruction disagrees with direct isomorphism search (library defect)")]
    OracleDisagreement,
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// Crate-wide error, used by the CLI and the C interface.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hat(#[from] HatError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Rigidity(#[from] RigidityError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{0}")]
    BadInput(String),
}

impl Error {
    /// Stable machine-readable kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Graph(GraphError::EmptyTheta) => "empty_theta",
            Error::Graph(GraphError::TooFewThetas(_)) => "too_few_thetas",
            Error::Graph(GraphError::AdjacentSingleBranches { .. }) => "adjacent_single_branches",
            Error::Graph(GraphError::MultiEdge { .. }) => "multi_edge",
            Error::Hat(HatError::OddDegree(_)) => "odd_degree",
            Error::Hat(HatError::ZeroDegree) => "zero_degree",
            Error::Hat(HatError::DegenerateOrbifold(_)) => "degenerate_orbifold",
            Error::Hat(HatError::DegenerateHat(_)) => "degenerate_hat",
            Error::Cover(CoverError::Invalid(_))
            | Error::Generator(GeneratorError::Cover(CoverError::Invalid(_)))
            | Error::Rigidity(RigidityError::Cover(CoverError::Invalid(_))) => "invalid_cover",
            Error::Cover(CoverError::LabelCountMismatch { .. })
            | Error::Generator(GeneratorError::Cover(CoverError::LabelCountMismatch { .. }))
            | Error::Rigidity(RigidityError::Cover(CoverError::LabelCountMismatch { .. })) => {
                "label_count_mismatch"
            }
            Error::Generator(GeneratorError::NotStronglyRepetitive { .. }) => "not_strongly_repetitive",
            Error::Generator(GeneratorError::WitnessNotNormalizable(_)) => "witness_not_normalizable",
            Error::Generator(GeneratorError::InvalidWitness(_)) => "invalid_witness",
            Error::Generator(GeneratorError::NoWitness) => "no_witness",
            Error::Generator(GeneratorError::NotPermutedPair(_)) => "not_permuted_pair",
            Error::Rigidity(RigidityError::EmptyArc) => "empty_arc",
            Error::Rigidity(RigidityError::SiteMissingLabels { .. }) => "site_missing_labels",
            Error::Rigidity(RigidityError::InvalidMove(_)) => "invalid_move",
            Error::Rigidity(RigidityError::CycleVectorMismatch) => "cycle_vector_mismatch",
            Error::Rigidity(RigidityError::CertificateMismatch) => "certificate_mismatch",
            Error::Rigidity(RigidityError::OracleDisagreement) => "oracle_disagreement",
            Error::Io { .. } => "io",
            Error::Json { .. } => "json",
            Error::BadInput(_) => "bad_input",
        }
    }

    /// Whether the failure is a validation failure of otherwise well-formed input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Graph(_)
                | Error::Cover(_)
                | Error::Generator(GeneratorError::Cover(_))
                | Error::Rigidity(RigidityError::Cover(_))
                | Error::Rigidity(RigidityError::CertificateMismatch)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
