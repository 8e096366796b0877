use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Column-style Hermite normal form `H = M * U` with unimodular `U`.
///
/// `H` is in canonical column echelon form: pivot columns come first, each
/// pivot is the first nonzero entry of its column, pivots sit in strictly
/// increasing rows and are positive, and every entry to the left of a pivot
/// in the pivot's row is reduced into `[0, pivot)`. Columns of `U` that land
/// on zero columns of `H` form a basis of the kernel of `M`, and that basis
/// spans the kernel as a saturated lattice because `U` is unimodular.
#[derive(Debug, Clone)]
pub struct HnfDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
}

impl HnfDecomposition {
    /// Kernel basis of the original matrix, as columns.
    pub fn kernel_columns(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.u.cols()).map(|j| self.u.column(j)).collect()
    }
}

// Column-major workspace: cols[j] is the j-th column.
struct ColWork {
    rows: usize,
    cols: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
}

impl ColWork {
    fn new(m: &IntMatrix) -> Self {
        let n = m.cols();
        let mut u = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::from(1);
            u.push(e);
        }
        ColWork { rows: m.rows(), cols: m.columns(), u }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.cols.swap(a, b);
        self.u.swap(a, b);
    }

    fn negate(&mut self, j: usize) {
        for v in self.cols[j].iter_mut() {
            *v = -std::mem::take(v);
        }
        for v in self.u[j].iter_mut() {
            *v = -std::mem::take(v);
        }
    }

    // col[dst] -= q * col[src]
    fn axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (d, s) = index_two(&mut self.cols, dst, src);
        for (dv, sv) in d.iter_mut().zip(s.iter()) {
            if !sv.is_zero() {
                *dv -= q * sv;
            }
        }
        let (d, s) = index_two(&mut self.u, dst, src);
        for (dv, sv) in d.iter_mut().zip(s.iter()) {
            if !sv.is_zero() {
                *dv -= q * sv;
            }
        }
    }
}

fn index_two<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

pub fn hnf(m: &IntMatrix) -> HnfDecomposition {
    let n = m.cols();
    let mut w = ColWork::new(m);
    let mut next = 0usize; // next pivot column slot
    for row in 0..w.rows {
        // Clear row `row` across the active columns down to a single pivot.
        loop {
            let mut best: Option<usize> = None;
            for j in next..n {
                if w.cols[j][row].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(j),
                    Some(b) => {
                        if w.cols[j][row].abs() < w.cols[b][row].abs() {
                            Some(j)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(pivot) = best else { break };
            let mut done = true;
            for j in next..n {
                if j == pivot || w.cols[j][row].is_zero() {
                    continue;
                }
                let q = div_round(&w.cols[j][row], &w.cols[pivot][row]);
                w.axpy(j, pivot, &q);
                if !w.cols[j][row].is_zero() {
                    done = false;
                }
            }
            if done {
                if pivot != next {
                    w.swap(next, pivot);
                }
                if w.cols[next][row].is_negative() {
                    w.negate(next);
                }
                // Canonical reduction of earlier pivot columns at this row.
                let p = w.cols[next][row].clone();
                for j in 0..next {
                    let q = w.cols[j][row].div_floor(&p);
                    w.axpy(j, next, &q);
                }
                next += 1;
                break;
            }
        }
        if next == n {
            break;
        }
    }
    let h = IntMatrix::from_columns(w.rows, w.cols);
    let u = IntMatrix::from_columns(n, w.u);
    HnfDecomposition { h, u, rank: next }
}

// Nearest-integer quotient; keeps remainders small during elimination.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = r.abs() * 2;
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Saturated integer kernel basis of `m`, as columns of the returned matrix.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let d = hnf(m);
    IntMatrix::from_columns(m.cols(), d.kernel_columns())
}

/// Solves `B x = y` over the integers. Returns `None` when no integer
/// solution exists. The solution is unique when `B` has full column rank,
/// which is the only case the homology pipeline relies on.
pub fn integer_solve(b: &IntMatrix, y: &[BigInt]) -> Option<Vec<BigInt>> {
    integer_solve_many(b, std::slice::from_ref(&y.to_vec())).pop().unwrap()
}

/// Batched [`integer_solve`] sharing one Hermite decomposition of `B`.
pub fn integer_solve_many(b: &IntMatrix, ys: &[Vec<BigInt>]) -> Vec<Option<Vec<BigInt>>> {
    let d = hnf(b);
    ys.iter().map(|y| solve_in_hnf(&d, b.rows(), y)).collect()
}

fn solve_in_hnf(d: &HnfDecomposition, rows: usize, y: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(rows, y.len(), "shape mismatch in integer solve");
    // Forward substitution over the echelon columns of H.
    let mut z = vec![BigInt::zero(); d.h.cols()];
    let mut resid: Vec<BigInt> = y.to_vec();
    for j in 0..d.rank {
        let pivot_row = (0..rows).find(|&i| !d.h[(i, j)].is_zero()).expect("pivot in rank column");
        let p = &d.h[(pivot_row, j)];
        let (q, r) = resid[pivot_row].div_rem(p);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for i in 0..rows {
                if !d.h[(i, j)].is_zero() {
                    let t = &q * &d.h[(i, j)];
                    resid[i] -= t;
                }
            }
        }
        z[j] = q;
    }
    if resid.iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(d.u.mul_vec(&z))
}
