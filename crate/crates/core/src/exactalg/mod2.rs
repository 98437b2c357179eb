use super::Matrix;
use crate::scalar::ExactInt;

/// Rank over the two-element field.
pub fn rank_mod2<T: ExactInt>(a: &Matrix<T>) -> usize {
    let words = a.cols().div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..a.rows())
        .map(|i| {
            let mut bits = vec![0u64; words];
            for (j, v) in a.row(i).iter().enumerate() {
                if v.is_odd() {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();

    let mut rank = 0;
    for col in 0..a.cols() {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}
