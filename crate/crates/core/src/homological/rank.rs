//! Matrix rank over prime fields.

use super::FieldChar;

/// Rank over GF(p) of the matrix whose rows are given as sparse
/// `(column, coefficient)` lists. Coefficients are signed and reduced mod p.
pub fn rank_sparse(rows: &[Vec<(usize, i64)>], ncols: usize, field: FieldChar) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    if field.p() == 2 {
        rank_gf2(rows, ncols)
    } else {
        rank_gfp(rows, ncols, field.p() as u64)
    }
}

fn rank_gf2(rows: &[Vec<(usize, i64)>], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    // basis[c] holds a reduced row whose highest set column is c
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1u64 << (c % 64);
            }
        }
        while let Some(lead) = highest_bit(&bits) {
            match &basis[lead] {
                Some(b) => {
                    for (x, y) in bits.iter_mut().zip(b) {
                        *x ^= *y;
                    }
                }
                None => {
                    basis[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn rank_gfp(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> usize {
    // basis[c] is a row with leading (highest) column c normalized to 1
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut dense = vec![0u64; ncols];
        for &(c, v) in row {
            dense[c] = (dense[c] + v.rem_euclid(p as i64) as u64) % p;
        }
        while let Some(lead) = dense.iter().rposition(|&x| x != 0) {
            match &basis[lead] {
                Some(b) => {
                    let f = dense[lead];
                    for c in 0..=lead {
                        if b[c] != 0 {
                            dense[c] = (dense[c] + p - f * b[c] % p) % p;
                        }
                    }
                }
                None => {
                    let inv = mod_inverse(dense[lead], p);
                    for x in dense.iter_mut() {
                        *x = *x * inv % p;
                    }
                    basis[lead] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldChar {
        FieldChar::new(p).unwrap()
    }

    #[test]
    fn identity_and_dependent_rows() {
        let rows = vec![vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]];
        assert_eq!(rank_sparse(&rows, 2, f(2)), 2);
        assert_eq!(rank_sparse(&rows, 2, f(3)), 2);
    }

    #[test]
    fn characteristic_matters() {
        // [[1,1],[1,-1]] has determinant -2
        let rows = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, -1)]];
        assert_eq!(rank_sparse(&rows, 2, f(2)), 1);
        assert_eq!(rank_sparse(&rows, 2, f(3)), 2);
        assert_eq!(rank_sparse(&rows, 2, f(32003)), 2);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let rows: Vec<_> = (0..130).map(|c| vec![(c, 1), ((c + 1) % 130, 1)]).collect();
        // unsigned incidence rows of an even cycle: rank n - 1 in every characteristic
        assert_eq!(rank_sparse(&rows, 130, f(2)), 129);
        assert_eq!(rank_sparse(&rows, 130, f(5)), 129);
    }
}
