use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point index {0} is out of range")]
    InvalidPoint(usize),
    #[error("wall index {0} is out of range")]
    InvalidWall(usize),
    #[error("operation is not defined on the trivial wall")]
    TrivialWallQuery,
    #[error("orientation is not an ultrafilter")]
    NotUltrafilter,
    #[error("wall {0} is not minimal in this ultrafilter; flipping it breaks coherence")]
    NotMinimal(usize),
    #[error("the trivial wall cannot be flipped")]
    TrivialFlip,
    #[error("orientations belong to different wall spaces")]
    SpaceMismatch,
    #[error("vertex index {0} is out of range")]
    InvalidVertex(usize),
    #[error("wall space failed validation")]
    InvalidSpace,
    #[error("too many walls for exhaustive enumeration: {walls} > {limit}")]
    TooManyWalls { walls: usize, limit: usize },
    #[error("graph too large: {size} vertices exceeds limit {limit}")]
    GraphTooLarge { size: usize, limit: usize },
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("graph has a loop or multiple edge")]
    NonSimplicialGraph,
    #[error("graph is not median")]
    NotMedian,
    #[error("point map is not a morphism of wall spaces (offending target wall {wall}, side {side})")]
    InvalidMorphism { wall: usize, side: u8 },
    #[error("generator {generator} does not permute the walls (image of wall {wall} is not a wall)")]
    NotWallPermuting { generator: usize, wall: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
