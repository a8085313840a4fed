use crate::scalar::Real;

const LEAF: usize = 8;

/// Pairwise (cascade) summation with a fixed split, so the rounding pattern
/// depends only on the length of the input.
pub fn pairwise_sum<T: Real>(v: &[T]) -> T {
    if v.len() <= LEAF {
        return v.iter().fold(T::zero(), |a, &b| a + b);
    }
    let mid = v.len() / 2;
    pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
}
