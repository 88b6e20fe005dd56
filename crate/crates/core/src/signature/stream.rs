//! Transforms lifting a discrete observation stream into a path.

use super::{Path, SignatureError};
use crate::float::Scalar;

/// Lead-lag embedding of a `dim`-dimensional stream of `n >= 2` observations
/// (flattened row-major) into a `2*dim`-dimensional path with `2n - 1`
/// vertices. The lead copy updates first:
///
/// ```text
/// (x_i, x_i) -> (x_{i+1}, x_i) -> (x_{i+1}, x_{i+1}) -> ...
/// ```
///
/// Lead coordinates occupy dimensions `1..=dim`, lag coordinates
/// `dim+1..=2*dim`. With this construction the level-2 Lévy term of a 1-D
/// stream satisfies `S(12) - S(21) = +sum_i (x_{i+1} - x_i)^2` (lead first,
/// so the loop runs counterclockwise for an up-down excursion).
pub fn lead_lag<T: Scalar>(dim: usize, stream: &[T]) -> Result<Path<T>, SignatureError> {
    if dim == 0 {
        return Err(SignatureError::ZeroDimension);
    }
    if stream.len() % dim != 0 {
        return Err(SignatureError::RaggedPoints {
            len: stream.len(),
            dim,
        });
    }
    let n = stream.len() / dim;
    if n < 2 {
        return Err(SignatureError::StreamTooShort { got: n });
    }
    let obs = |i: usize| &stream[i * dim..(i + 1) * dim];
    let mut points = Vec::with_capacity((2 * n - 1) * 2 * dim);
    for i in 0..n - 1 {
        points.extend_from_slice(obs(i));
        points.extend_from_slice(obs(i));
        points.extend_from_slice(obs(i + 1));
        points.extend_from_slice(obs(i));
    }
    points.extend_from_slice(obs(n - 1));
    points.extend_from_slice(obs(n - 1));
    Path::new(2 * dim, points)
}

/// Pair a series containing missing entries with a missingness indicator,
/// producing a flattened 2-dimensional stream: coordinate 1 is the value,
/// with missing entries filled by last observation carried forward (leading
/// missings backfilled from the first observed value); coordinate 2 is 1
/// where the entry was missing and 0 where it was present.
pub fn augment_with_indicator<T: Scalar>(
    values: &[Option<T>],
) -> Result<Vec<T>, SignatureError> {
    let first_observed = values
        .iter()
        .flatten()
        .next()
        .copied()
        .ok_or(SignatureError::AllMissing)?;
    let mut out = Vec::with_capacity(values.len() * 2);
    let mut last = first_observed;
    for value in values {
        match value {
            Some(v) => {
                last = *v;
                out.push(*v);
                out.push(T::zero());
            }
            None => {
                out.push(last);
                out.push(T::one());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lead_lag_rejects_single_observation() {
        assert_eq!(
            lead_lag(1, &[5.0f64]),
            Err(SignatureError::StreamTooShort { got: 1 })
        );
    }

    #[test]
    fn lead_lag_two_observations() {
        let path = lead_lag(1, &[1.0f64, 2.0]).unwrap();
        assert_eq!(path.dim(), 2);
        assert_eq!(path.n_points(), 3);
        assert_eq!(path.point(0), &[1.0, 1.0]);
        assert_eq!(path.point(1), &[2.0, 1.0]);
        assert_eq!(path.point(2), &[2.0, 2.0]);
    }

    #[test]
    fn lead_lag_length_and_projections() {
        let stream = [0.0f64, 1.0, 0.5, 2.0];
        let path = lead_lag(1, &stream).unwrap();
        assert_eq!(path.n_points(), 2 * stream.len() - 1);
        // Lead projection visits every value in order; so does the lag one.
        let lead: Vec<f64> = (0..path.n_points()).map(|i| path.point(i)[0]).collect();
        let lag: Vec<f64> = (0..path.n_points()).map(|i| path.point(i)[1]).collect();
        for value in stream {
            assert!(lead.contains(&value));
            assert!(lag.contains(&value));
        }
        assert_eq!(lead.first(), lag.first());
        assert_eq!(lead.last(), lag.last());
    }

    #[test]
    fn lead_lag_excursion_levy_area() {
        use crate::signature::{signature, Word};
        // Stream (0, 1, 0): the lead-lag path is the unit square loop, so
        // S(12) - S(21) = sum of squared increments = 2 with our lead-first
        // orientation.
        let path = lead_lag(1, &[0.0f64, 1.0, 0.0]).unwrap();
        let sig = signature(&path, 2).unwrap();
        let s12 = sig.coeff(&Word::new(vec![1, 2], 2).unwrap()).unwrap();
        let s21 = sig.coeff(&Word::new(vec![2, 1], 2).unwrap()).unwrap();
        assert!((s12 - s21 - 2.0).abs() < 1e-12, "got {}", s12 - s21);
    }

    #[test]
    fn indicator_fills_interior_missing_with_locf() {
        let out = augment_with_indicator(&[Some(3.0f64), None, Some(5.0)]).unwrap();
        assert_eq!(out, vec![3.0, 0.0, 3.0, 1.0, 5.0, 0.0]);
    }

    #[test]
    fn indicator_backfills_leading_missing() {
        let out = augment_with_indicator(&[None, Some(4.0f64), Some(4.0)]).unwrap();
        assert_eq!(out, vec![4.0, 1.0, 4.0, 0.0, 4.0, 0.0]);
    }

    #[test]
    fn indicator_all_present_is_zero() {
        let out = augment_with_indicator(&[Some(2.0f64), Some(2.0), Some(2.0)]).unwrap();
        assert_eq!(out, vec![2.0, 0.0, 2.0, 0.0, 2.0, 0.0]);
    }

    #[test]
    fn indicator_rejects_all_missing() {
        assert_eq!(
            augment_with_indicator::<f64>(&[None, None]),
            Err(SignatureError::AllMissing)
        );
    }
}
