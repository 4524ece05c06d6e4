//! Exact integer matrix algebra: Smith normal form over Z.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Diagonal of the Smith normal form (nonzero entries only, each dividing
/// the next). The input is consumed as a dense row-major matrix.
pub fn smith_normal_form(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut t = 0usize;
    let mut diag = Vec::new();
    while t < rows && t < cols {
        let Some((pi, pj)) = pivot(&m, t) else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // clear column t
            let mut again = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&m[i][t], &m[t][t]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let sub = &q * &m[t][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    again = true;
                }
            }
            if again {
                continue;
            }
            // clear row t
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&m[t][j], &m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    again = true;
                    break;
                }
            }
            if !again {
                break;
            }
        }
        // enforce the divisibility chain: fold any non-multiple into column t
        let mut redo = false;
        for i in t + 1..rows {
            for j in t + 1..cols {
                if (&m[i][j] % &m[t][t]).is_zero() {
                    continue;
                }
                for jj in 0..cols {
                    let add = m[i][jj].clone();
                    m[t][jj] += add;
                }
                redo = true;
                break;
            }
            if redo {
                break;
            }
        }
        if redo {
            continue;
        }
        let mut d = m[t][t].clone();
        if d.is_negative() {
            d = -d;
        }
        diag.push(d);
        t += 1;
    }
    diag
}

fn pivot(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match &best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < m[*bi][*bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Quotient rounded toward the nearest integer, so remainders shrink fast.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn diagonal_divisibility() {
        let m = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let d = smith_normal_form(m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn rank_deficient() {
        let m = big(&[&[1, 1], &[1, 1]]);
        let d = smith_normal_form(m);
        assert_eq!(d, vec![BigInt::from(1)]);
    }

    #[test]
    fn zero_matrix() {
        let m = big(&[&[0, 0], &[0, 0]]);
        assert!(smith_normal_form(m).is_empty());
    }
}
