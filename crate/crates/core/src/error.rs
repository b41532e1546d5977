use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {requested} exceeds the supported maximum of {max}")]
    TooLarge { requested: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),

    #[error("edge {0}-{1} is already present")]
    EdgePresent(usize, usize),

    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is disconnected; {0} is only defined for connected graphs")]
    Disconnected(&'static str),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

pub(crate) fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidArgument(msg.into())
}
