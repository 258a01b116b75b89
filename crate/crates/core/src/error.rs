use thiserror::Error;

pub type Result<T> = std::result::Result<T, NetInfError>;

#[derive(Debug, Error)]
pub enum NetInfError {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An event time was not strictly after the time it is measured from.
    #[error("time ordering violated: t_i = {t_i} is not after t_k = {t_k}")]
    Ordering { t_i: f64, t_k: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("node index {index} out of range for {num_nodes} nodes")]
    Index { index: usize, num_nodes: usize },

    #[error("format error: {0}")]
    Format(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("objective is infinite at the initial point")]
    Initialization,

    #[error("non-finite value encountered: {0}")]
    Numeric(String),

    #[error("likelihood is not differentiable here: {0}")]
    NonDifferentiable(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("invalid experiment: {0}")]
    InvalidExperiment(String),

    #[error("node {node}: {source}")]
    Node {
        node: usize,
        #[source]
        source: Box<NetInfError>,
    },

    #[error("trial {trial} at point {point}: {source}")]
    Trial {
        point: usize,
        trial: usize,
        #[source]
        source: Box<NetInfError>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl NetInfError {
    pub(crate) fn at_node(self, node: usize) -> Self {
        NetInfError::Node { node, source: Box::new(self) }
    }
}
