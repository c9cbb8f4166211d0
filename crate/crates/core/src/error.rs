use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a group needs at least one cyclic factor (use [1] for the trivial group)")]
    EmptyPresentation,
    #[error("cyclic factor orders must be at least 1, got {0}")]
    BadOrder(usize),
    #[error("element {element:?} does not belong to a group with factor orders {orders:?}")]
    ForeignElement { element: Vec<usize>, orders: Vec<usize> },
    #[error("group of size {size} is too large for exhaustive automorphism enumeration (bound {bound})")]
    AutTooLarge { size: usize, bound: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("repeated edge {{{0}, {1}}}")]
    MultiEdge(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("connection set {set} is not closed under inverses: {element:?} has no inverse in it")]
    NotInverseClosed { set: &'static str, element: Vec<usize> },
    #[error("connection set {set} contains the identity")]
    IdentityInConnectionSet { set: &'static str },
    #[error("expected a 0-type bi-Cayley graph (R = L = empty)")]
    NotZeroType,
    #[error("permutation is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("generalized Petersen parameters out of range: n = {n}, k = {k}")]
    PetersenRange { n: usize, k: usize },
    #[error("non-simple quotient: {0}")]
    NonSimpleQuotient(String),
    #[error("spec parse error: {0}")]
    SpecParse(String),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("graph on {n} vertices exceeds the automorphism search bound {bound}")]
    GraphTooLarge { n: usize, bound: usize },
    #[error("group of order {order} exceeds the element enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },
    #[error("expected a cubic graph")]
    NotCubic,
    #[error("normal subgroup is transitive; there is no proper block system")]
    TransitiveNormalSubgroup,

    #[error("graph is disconnected")]
    Disconnected,
    #[error("cotree voltages do not generate the voltage group; the cover is disconnected")]
    DisconnectedCover,
    #[error("voltage assignment is not T-reduced: tree arc ({0}, {1}) carries a non-identity voltage")]
    NotTReduced(usize, usize),
    #[error("edge set is not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("not a walk: vertices {0} and {1} are not adjacent")]
    NotAWalk(usize, usize),
    #[error("permutation does not normalize the voltage group action")]
    DoesNotNormalize,

    #[error("BCI oracle bound exceeded: |H| = {0} > 16")]
    OracleTooLarge(usize),
    #[error("BCI criterion and oracle disagree: {0}")]
    BciDisagreement(String),
}
