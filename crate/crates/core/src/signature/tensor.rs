//! Truncated tensor-algebra signatures.
//!
//! A depth-`L` signature stores the iterated-integral coefficients of all
//! words of length 1..=L (the level-0 constant 1 is implicit). The signature
//! of a straight segment is the truncated tensor exponential of its
//! increment; signatures of concatenated paths combine through the Chen
//! product. Both facts together give exact signatures of piecewise-linear
//! paths without any quadrature.

use serde::{Deserialize, Serialize};

use super::word::{feature_count, Word};
use super::{Path, SignatureError};
use crate::float::Scalar;

/// Truncated signature: coefficients for every word of length 1..=depth over
/// `{1..dim}`, level-major and lexicographic within a level (see
/// [`Word::index`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Signature<T> {
    dim: usize,
    depth: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Signature<T> {
    /// The identity element: empty-word coefficient 1, everything stored 0.
    pub fn trivial(dim: usize, depth: usize) -> Result<Self, SignatureError> {
        let len = feature_count(dim, depth)?;
        Ok(Signature {
            dim,
            depth,
            coeffs: vec![T::zero(); len],
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient block for all words of length `level` (1-based).
    pub fn level(&self, level: usize) -> &[T] {
        let (start, len) = self.level_bounds(level);
        &self.coeffs[start..start + len]
    }

    fn level_bounds(&self, level: usize) -> (usize, usize) {
        assert!(level >= 1 && level <= self.depth, "level out of range");
        let mut start = 0usize;
        let mut block = 1usize;
        for _ in 1..level {
            block *= self.dim;
            start += block;
        }
        (start, block * self.dim)
    }

    pub fn coeff(&self, word: &Word) -> Result<T, SignatureError> {
        if word.len() > self.depth {
            return Err(SignatureError::InvalidWordLength);
        }
        for &letter in word.letters() {
            if letter == 0 || letter as usize > self.dim {
                return Err(SignatureError::InvalidLetter {
                    letter,
                    dim: self.dim,
                });
            }
        }
        Ok(self.coeffs[word.index(self.dim)])
    }

    /// Word/value listing in storage order, e.g. for the JSON debug dump.
    pub fn dump(&self) -> SignatureDump {
        let words = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, &value)| WordValue {
                word: Word::from_index(idx, self.dim)
                    .expect("stored index is a valid word")
                    .to_string(),
                value: value.as_f64(),
            })
            .collect();
        SignatureDump {
            dim: self.dim,
            depth: self.depth,
            words,
        }
    }
}

/// Serializable word/value view of a signature.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignatureDump {
    pub dim: usize,
    pub depth: usize,
    pub words: Vec<WordValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordValue {
    pub word: String,
    pub value: f64,
}

/// Signature of a single straight segment with increment `delta`: the
/// coefficient of word `(a_1 .. a_k)` is `delta[a_1] * ... * delta[a_k] / k!`.
pub fn segment_signature<T: Scalar>(
    delta: &[T],
    depth: usize,
) -> Result<Signature<T>, SignatureError> {
    let dim = delta.len();
    let mut sig = Signature::trivial(dim, depth)?;
    sig.coeffs[..dim].copy_from_slice(delta);
    // Level k is the outer product of level k-1 with delta, divided by k.
    for k in 2..=depth {
        let (prev_s, prev_l) = level_bounds(dim, k - 1);
        let (cur_s, _) = level_bounds(dim, k);
        let inv_k = T::one() / T::from_count(k);
        for u in 0..prev_l {
            let base = sig.coeffs[prev_s + u];
            for (i, &d_i) in delta.iter().enumerate() {
                sig.coeffs[cur_s + u * dim + i] = base * d_i * inv_k;
            }
        }
    }
    Ok(sig)
}

fn level_bounds(dim: usize, level: usize) -> (usize, usize) {
    let mut start = 0usize;
    let mut block = dim;
    for _ in 1..level {
        start += block;
        block *= dim;
    }
    (start, block)
}

/// Chen product of two signatures over the same alphabet and depth: the
/// coefficient of word `w` in the result is the sum of `a(u) * b(v)` over all
/// splits `w = u . v`, empty factors contributing the implicit coefficient 1,
/// truncated at the common depth. Splits are accumulated in ascending prefix
/// length so results are bit-reproducible.
pub fn chen_product<T: Scalar>(
    a: &Signature<T>,
    b: &Signature<T>,
) -> Result<Signature<T>, SignatureError> {
    if a.dim != b.dim {
        return Err(SignatureError::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    if a.depth != b.depth {
        return Err(SignatureError::DepthMismatch {
            left: a.depth,
            right: b.depth,
        });
    }
    let dim = a.dim;
    let mut out = Signature::trivial(dim, a.depth)?;
    for k in 1..=a.depth {
        let (k_start, k_len) = level_bounds(dim, k);
        for w in 0..k_len {
            // Split prefix length 0 (empty u), then 1..k-1, then k (empty v).
            let mut acc = b.coeffs[k_start + w];
            let mut suffix_block = k_len / dim; // dim^(k-1)
            for j in 1..k {
                let (u_start, _) = level_bounds(dim, j);
                let (v_start, _) = level_bounds(dim, k - j);
                let u = w / suffix_block;
                let v = w % suffix_block;
                acc += a.coeffs[u_start + u] * b.coeffs[v_start + v];
                suffix_block /= dim;
            }
            acc += a.coeffs[k_start + w];
            out.coeffs[k_start + w] = acc;
        }
    }
    Ok(out)
}

/// Exact truncated signature of a piecewise-linear path: the left-to-right
/// Chen product of the segment signatures of consecutive-point increments.
/// A single-point path has the trivial signature.
pub fn signature<T: Scalar>(path: &Path<T>, depth: usize) -> Result<Signature<T>, SignatureError> {
    let mut acc: Option<Signature<T>> = None;
    for delta in path.increments() {
        let seg = segment_signature(&delta, depth)?;
        acc = Some(match acc {
            None => seg,
            Some(prev) => chen_product(&prev, &seg)?,
        });
    }
    match acc {
        Some(sig) => Ok(sig),
        None => Signature::trivial(path.dim(), depth),
    }
}
