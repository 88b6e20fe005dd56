//! Word indexing for truncated tensor coefficients.
//!
//! Coefficients are stored level-major: all length-1 words first, then
//! length-2 and so on, lexicographically within a level over the alphabet
//! `{1..d}`. A word `(a_1 .. a_k)` therefore sits at
//!
//! ```text
//! index = d + d^2 + ... + d^(k-1)  +  sum_j (a_j - 1) * d^(k-j)
//! ```
//!
//! i.e. the within-level part reads the letters as a k-digit base-`d`
//! numeral. The level-0 constant term is always 1 and is not stored.

use super::SignatureError;

/// Number of stored coefficients of a depth-`depth` signature in `dim`
/// dimensions: `dim + dim^2 + ... + dim^depth`.
pub fn feature_count(dim: usize, depth: usize) -> Result<usize, SignatureError> {
    if dim == 0 {
        return Err(SignatureError::ZeroDimension);
    }
    if depth == 0 {
        return Err(SignatureError::ZeroDepth);
    }
    let mut total = 0usize;
    let mut level = 1usize;
    for _ in 0..depth {
        level *= dim;
        total += level;
    }
    Ok(total)
}

/// A word over the alphabet `{1..d}`, naming one iterated-integral term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>, dim: usize) -> Result<Self, SignatureError> {
        if letters.is_empty() {
            return Err(SignatureError::InvalidWordLength);
        }
        for &letter in &letters {
            if letter == 0 || letter as usize > dim {
                return Err(SignatureError::InvalidLetter { letter, dim });
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of this word in the stored coefficient vector.
    pub fn index(&self, dim: usize) -> usize {
        let k = self.letters.len();
        let mut offset = 0usize;
        let mut block = 1usize;
        for _ in 1..k {
            block *= dim;
            offset += block;
        }
        let mut within = 0usize;
        for &letter in &self.letters {
            within = within * dim + (letter as usize - 1);
        }
        offset + within
    }

    /// Inverse of [`Word::index`].
    pub fn from_index(mut index: usize, dim: usize) -> Result<Self, SignatureError> {
        if dim == 0 {
            return Err(SignatureError::ZeroDimension);
        }
        let mut block = dim;
        let mut k = 1usize;
        while index >= block {
            index -= block;
            block *= dim;
            k += 1;
        }
        let mut letters = vec![0u8; k];
        for slot in letters.iter_mut().rev() {
            *slot = (index % dim) as u8 + 1;
            index /= dim;
        }
        Ok(Word { letters })
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feature_count_matches_geometric_sum() {
        assert_eq!(feature_count(1, 2).unwrap(), 2);
        assert_eq!(feature_count(4, 2).unwrap(), 20);
        assert_eq!(feature_count(2, 3).unwrap(), 14);
        assert_eq!(feature_count(3, 3).unwrap(), 39);
    }

    #[test]
    fn feature_count_rejects_zero_arguments() {
        assert_eq!(feature_count(0, 2), Err(SignatureError::ZeroDimension));
        assert_eq!(feature_count(3, 0), Err(SignatureError::ZeroDepth));
    }

    #[test]
    fn word_index_is_level_major_lexicographic() {
        // d = 2: 1, 2, 11, 12, 21, 22, 111, ...
        let d = 2;
        assert_eq!(Word::new(vec![1], d).unwrap().index(d), 0);
        assert_eq!(Word::new(vec![2], d).unwrap().index(d), 1);
        assert_eq!(Word::new(vec![1, 1], d).unwrap().index(d), 2);
        assert_eq!(Word::new(vec![1, 2], d).unwrap().index(d), 3);
        assert_eq!(Word::new(vec![2, 1], d).unwrap().index(d), 4);
        assert_eq!(Word::new(vec![2, 2], d).unwrap().index(d), 5);
        assert_eq!(Word::new(vec![1, 1, 1], d).unwrap().index(d), 6);
    }

    #[test]
    fn word_index_roundtrip_is_bijective() {
        for d in 1..=4usize {
            let total = feature_count(d, 3).unwrap();
            for idx in 0..total {
                let word = Word::from_index(idx, d).unwrap();
                assert_eq!(word.index(d), idx, "d={d} idx={idx} word={word}");
            }
        }
    }

    #[test]
    fn invalid_letters_rejected() {
        assert!(Word::new(vec![0], 2).is_err());
        assert!(Word::new(vec![3], 2).is_err());
        assert!(Word::new(vec![], 2).is_err());
    }
}
