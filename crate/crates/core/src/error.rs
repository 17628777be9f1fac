use std::fmt;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Validation failures raised while building a [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A graph must have at least one vertex.
    ZeroVertices,
    /// Edge endpoint is not in `[0, n)`.
    VertexOutOfRange { index: usize, n: usize },
    /// Edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair appears twice.
    DuplicateEdge { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroVertices => write!(f, "graph must have at least one vertex"),
            GraphError::VertexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {u}-{v}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// What went wrong on a particular line of a graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// First line is not `<n> <m>` with decimal integers.
    MalformedHeader,
    /// Edge line is not `<u> <v>` with decimal integers.
    MalformedEdge,
    /// The edge list violates a simple-graph invariant.
    Graph(GraphError),
    /// Fewer edge lines than the header promised.
    EdgeCountMismatch { expected: usize, found: usize },
    /// Non-blank content after the declared edges.
    TrailingContent,
}

/// Graph-file parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MalformedHeader => {
                write!(f, "malformed header, expected \"<n> <m>\"")
            }
            ParseErrorKind::MalformedEdge => write!(f, "malformed edge, expected \"<u> <v>\""),
            ParseErrorKind::Graph(e) => write!(f, "{e}"),
            ParseErrorKind::EdgeCountMismatch { expected, found } => {
                write!(f, "header declared {expected} edges but found {found}")
            }
            ParseErrorKind::TrailingContent => write!(f, "unexpected content after edge list"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Any failure this crate can report.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Graph-file text did not parse.
    Parse(ParseError),
    /// Direct graph construction failed.
    Graph(GraphError),
    /// Family parameter below the family's minimum vertex count.
    InvalidParameter {
        family: &'static str,
        value: usize,
        min: usize,
    },
    /// Some vertex pair has no connecting path.
    Disconnected,
    /// Eigensolver input is not a square matrix.
    NotSquare { rows: usize, row: usize, len: usize },
    /// Eigensolver input is not symmetric within tolerance.
    NotSymmetric { i: usize, j: usize, delta: f64 },
    /// Off-diagonal mass did not fall below the convergence threshold.
    NoConvergence { sweeps: usize },
    /// Bound formula argument must be nonnegative.
    NegativeArgument { x: f64 },
    /// Wiener index and geometric mean violate `4W² ≥ M²n`.
    InconsistentProfile { wiener: f64, geo_mean: f64, n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "parse error: {e}"),
            Error::Graph(e) => write!(f, "invalid graph: {e}"),
            Error::InvalidParameter { family, value, min } => {
                write!(f, "{family} requires at least {min} vertices, got {value}")
            }
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::NotSquare { rows, row, len } => {
                write!(f, "matrix with {rows} rows has row {row} of length {len}")
            }
            Error::NotSymmetric { i, j, delta } => {
                write!(f, "matrix not symmetric at ({i},{j}), |a_ij - a_ji| = {delta:e}")
            }
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge within {sweeps} sweeps")
            }
            Error::NegativeArgument { x } => {
                write!(f, "argument must be nonnegative, got {x}")
            }
            Error::InconsistentProfile { wiener, geo_mean, n } => {
                write!(
                    f,
                    "inconsistent profile: 4W² < M²n for W = {wiener}, M = {geo_mean}, n = {n}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

impl From<GraphError> for Error {
    fn from(e: GraphError) -> Self {
        Error::Graph(e)
    }
}
