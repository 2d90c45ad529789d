use crate::dynkin::{Family, NodeSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{family}{rank} is not a finite Dynkin type")]
    InvalidType { family: Family, rank: usize },
    #[error("no twisted affinization is available for family {0}")]
    UnsupportedTwist(Family),
    #[error("expected a diagram of finite type")]
    NotFinite,
    #[error("expected an affine diagram")]
    NotAffine,
    #[error("node {0} is not part of the diagram")]
    InvalidNode(usize),
    #[error("nilradicals are taken with respect to node 0 or node {expected}, not {found}")]
    InvalidRemovedNode { expected: usize, found: usize },
    #[error("{0} generates an infinite parabolic subgroup")]
    InfiniteParabolic(NodeSet),
    #[error("{inner} is not contained in {outer}")]
    NotSubset { inner: NodeSet, outer: NodeSet },
    #[error("element is not a minimal length representative modulo {0}")]
    NotMinimal(NodeSet),
    #[error("malformed Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("group has more than {0} elements")]
    TooLarge(usize),
    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
