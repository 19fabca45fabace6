use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty instance")]
    EmptyInstance,

    #[error("non-finite coordinate in segment {index}")]
    NonFinite { index: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("point ({x}, {y}) is not on the reference polyline")]
    OffPolyline { x: f64, y: f64 },

    #[error("instance has {n} segments, brute-force limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
