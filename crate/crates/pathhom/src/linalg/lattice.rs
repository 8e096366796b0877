use super::{hnf, integer_kernel, integer_solve_many, IntMatrix};
use num_bigint::BigInt;
use num_traits::Zero;

/// Canonical form of the lattice spanned by the columns of `m`: the column
/// Hermite normal form with zero columns dropped. Two generating sets span
/// the same sublattice of `Z^rows` iff their canonical forms are equal.
pub fn lattice_canonical(m: &IntMatrix) -> IntMatrix {
    let d = hnf(m);
    IntMatrix::from_columns(m.rows(), (0..d.rank).map(|j| d.h.column(j)).collect())
}

pub fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    assert_eq!(a.rows(), b.rows(), "lattices live in different ambient spaces");
    lattice_canonical(a) == lattice_canonical(b)
}

/// Whether `v` lies in the lattice spanned by the columns of `m`.
pub fn lattice_contains(m: &IntMatrix, v: &[BigInt]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    integer_solve_many(m, std::slice::from_ref(&v.to_vec())).pop().unwrap().is_some()
}

/// Basis of the intersection of the column lattices of `a` and `b`.
///
/// Both inputs must have linearly independent columns. Pairs `(x, y)` with
/// `a x = b y` form the kernel of `[a | -b]`; the intersection is the image
/// of the `x` block, and it is the full intersection because the pairing is
/// bijective on it.
pub fn lattice_intersect(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows(), b.rows());
    let rows = a.rows();
    let mut joined = IntMatrix::zero(rows, a.cols() + b.cols());
    for i in 0..rows {
        for j in 0..a.cols() {
            joined[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols() {
            joined[(i, a.cols() + j)] = -b[(i, j)].clone();
        }
    }
    let ker = integer_kernel(&joined);
    let mut cols = Vec::new();
    for j in 0..ker.cols() {
        let x: Vec<BigInt> = (0..a.cols()).map(|i| ker[(i, j)].clone()).collect();
        cols.push(a.mul_vec(&x));
    }
    lattice_canonical(&IntMatrix::from_columns(rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_identifies_equal_lattices() {
        let a = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]);
        let b = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(lattice_eq(&a, &b));
        let half = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert!(!lattice_eq(&a, &half));
    }

    #[test]
    fn intersection_of_skew_lines() {
        // <(1,1)> and <(1,-1)> intersect in <(2,0)>... over Z: x(1,1)=y(1,-1)
        // forces x=y and x=-y, so only 0.
        let a = IntMatrix::from_i64_rows(&[&[1], &[1]]);
        let b = IntMatrix::from_i64_rows(&[&[1], &[-1]]);
        let int = lattice_intersect(&a, &b);
        assert_eq!(int.cols(), 0);
    }

    #[test]
    fn intersection_of_sublattices() {
        // 2Z^2 and the diagonal <(1,1)> meet in <(2,2)>.
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]);
        let b = IntMatrix::from_i64_rows(&[&[1], &[1]]);
        let int = lattice_intersect(&a, &b);
        assert_eq!(int.cols(), 1);
        let v = int.column(0);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn membership() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert!(lattice_contains(&a, &[BigInt::from(4), BigInt::from(3)]));
        assert!(!lattice_contains(&a, &[BigInt::from(1), BigInt::from(0)]));
    }
}
