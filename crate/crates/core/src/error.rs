use thiserror::Error;

/// Errors produced by graph construction, the exact solvers and the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop ({label}, {label}) is not allowed in a simple graph")]
    SelfLoop { label: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex index {index} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    #[error("instance too large for exact {solver}: {vertices} vertices exceeds cap of {cap}")]
    TooLarge {
        solver: &'static str,
        vertices: usize,
        cap: usize,
    },

    #[error("{0} is undefined for the empty graph")]
    EmptyGraph(&'static str),

    #[error("({a}, {b}, {c}) is not a Pythagorean triple: {a}^2 + {b}^2 != {c}^2")]
    NotPythagorean { a: u128, b: u128, c: u128 },

    #[error("triple entries must be positive, got ({a}, {b}, {c})")]
    NonPositive { a: u128, b: u128, c: u128 },

    #[error("hypotenuse bound {bound} would overflow the integer type (max {max})")]
    Overflow { bound: String, max: String },

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("({0}, {1}, {2}) is not a triangle of the graph")]
    NotATriangle(usize, usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
