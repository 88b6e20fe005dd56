use super::SignatureError;
use crate::float::Scalar;

/// A `dim`-dimensional piecewise-linear path given by its ordered vertices,
/// stored row-major. A single-point path is valid (its signature is trivial).
#[derive(Debug, Clone, PartialEq)]
pub struct Path<T> {
    dim: usize,
    points: Vec<T>,
}

impl<T: Scalar> Path<T> {
    pub fn new(dim: usize, points: Vec<T>) -> Result<Self, SignatureError> {
        if dim == 0 {
            return Err(SignatureError::ZeroDimension);
        }
        if points.is_empty() {
            return Err(SignatureError::EmptyPath);
        }
        if points.len() % dim != 0 {
            return Err(SignatureError::RaggedPoints {
                len: points.len(),
                dim,
            });
        }
        Ok(Path { dim, points })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, SignatureError> {
        let dim = rows.first().map(Vec::len).ok_or(SignatureError::EmptyPath)?;
        if rows.iter().any(|r| r.len() != dim) {
            return Err(SignatureError::RaggedPoints {
                len: rows.iter().map(Vec::len).sum(),
                dim,
            });
        }
        Path::new(dim, rows.concat())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_points(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    /// Increments between consecutive vertices, in path order.
    pub fn increments(&self) -> impl Iterator<Item = Vec<T>> + '_ {
        (1..self.n_points()).map(move |i| {
            let prev = self.point(i - 1);
            let next = self.point(i);
            next.iter().zip(prev).map(|(&a, &b)| a - b).collect()
        })
    }

    /// Endpoint minus start point.
    pub fn total_increment(&self) -> Vec<T> {
        let first = self.point(0);
        let last = self.point(self.n_points() - 1);
        last.iter().zip(first).map(|(&a, &b)| a - b).collect()
    }
}
