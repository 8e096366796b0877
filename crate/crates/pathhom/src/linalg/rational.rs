use super::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank over the rationals by fraction-free Bareiss elimination.
///
/// Pivots are chosen by minimal absolute value to limit entry growth; every
/// division in the update step is exact.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    bareiss_echelon(&mut m.clone()).0
}

/// Determinant of a square matrix, fraction-free.
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = m.clone();
    let (rank, sign) = bareiss_echelon(&mut a);
    if rank < n {
        return BigInt::zero();
    }
    // After full elimination the last pivot is det(M) up to the swap sign.
    let d = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

// In-place fraction-free elimination; returns (rank, swap sign).
fn bareiss_echelon(a: &mut IntMatrix) -> (usize, i32) {
    let rows = a.rows();
    let cols = a.cols();
    let mut prev = BigInt::from(1);
    let mut sign = 1i32;
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut pivot_row = None;
        for i in r..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            pivot_row = match pivot_row {
                None => Some(i),
                Some(p) => {
                    if a[(i, c)].abs() < a[(p, c)].abs() {
                        Some(i)
                    } else {
                        Some(p)
                    }
                }
            };
        }
        let Some(p) = pivot_row else { continue };
        if p != r {
            for j in 0..cols {
                let x = a[(p, j)].clone();
                a[(p, j)] = std::mem::replace(&mut a[(r, j)], x);
            }
            sign = -sign;
        }
        let pivot = a[(r, c)].clone();
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &a[(i, j)] * &pivot - &a[(i, c)] * &a[(r, j)];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "bareiss division must be exact");
                a[(i, j)] = q;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    (r, sign)
}

/// Null-space basis over the rationals, returned as primitive integer
/// vectors (denominators cleared, content divided out), as columns.
///
/// This is the oracle route: plain rational row reduction, entirely
/// independent of the Hermite-form kernel in this crate.
pub fn rational_kernel(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigRational::from(m[(i, j)].clone())).collect())
        .collect();
    // Reduced row echelon form.
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in c..cols {
            let scaled = &a[r][j] * &inv;
            a[r][j] = scaled;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let t = &a[r][j] * &f;
                let updated = &a[i][j] - t;
                a[i][j] = updated;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![BigRational::zero(); cols];
        v[fc] = BigRational::from(BigInt::from(1));
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[row][fc].clone();
        }
        basis.push(clear_denominators(&v));
    }
    IntMatrix::from_columns(cols, basis)
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if g.is_zero() || g == BigInt::from(1) {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer_kernel;
    use proptest::prelude::*;

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(bareiss_rank(&IntMatrix::identity(5)), 5);
        assert_eq!(bareiss_rank(&IntMatrix::zero(3, 4)), 0);
    }

    #[test]
    fn det_small_cases() {
        let m = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(bareiss_det(&m), BigInt::from(1));
        let s = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_det(&s), BigInt::from(-1));
    }

    #[test]
    fn kernel_of_ones_row() {
        let k = rational_kernel(&IntMatrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0).iter().sum::<BigInt>(), BigInt::zero());
    }

    #[test]
    fn cube_route_differential_has_rank_five() {
        // Columns: the six 0-to-7 routes of the 3-cube; rows: their interior
        // faces (e037, e017, e027, e057, e047, e067). One alternating kernel
        // vector.
        let m = IntMatrix::from_i64_rows(&[
            &[1, 1, 0, 0, 0, 0],
            &[-1, 0, -1, 0, 0, 0],
            &[0, -1, 0, 0, 0, -1],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, -1, -1, 0],
            &[0, 0, 0, 0, 1, 1],
        ]);
        assert_eq!(bareiss_rank(&m), 5);
        assert_eq!(rational_kernel(&m).cols(), 1);
    }

    proptest! {
        #[test]
        fn two_kernel_routes_agree_on_rank(rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut m = IntMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m[(i, j)] = BigInt::from(rng.gen_range(-9i64..=9));
                }
            }
            let hermite = integer_kernel(&m);
            let rational = rational_kernel(&m);
            prop_assert_eq!(hermite.cols(), rational.cols());
            prop_assert_eq!(hermite.cols() + bareiss_rank(&m), cols);
            for j in 0..rational.cols() {
                let image = m.mul_vec(&rational.column(j));
                prop_assert!(image.iter().all(|v| v.is_zero()));
            }
        }
    }
}
