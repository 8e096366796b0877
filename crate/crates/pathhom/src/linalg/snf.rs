use super::{record_snf_check, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Smith normal form `U * M * V = S` with unimodular `U`, `V`.
///
/// `S` is diagonal with nonnegative invariant factors forming a divisibility
/// chain `d_1 | d_2 | ... | d_r`. Every decomposition is verified by
/// multiplying back before it is returned; a mismatch is an internal bug and
/// panics.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub factors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rows: usize,
    pub cols: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors strictly greater than one, i.e. the torsion part.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut s = IntMatrix::zero(self.rows, self.cols);
        for (i, d) in self.factors.iter().enumerate() {
            s[(i, i)] = d.clone();
        }
        s
    }
}

struct SnfWork {
    m: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl SnfWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols() {
            let x = self.m[(a, j)].clone();
            self.m[(a, j)] = std::mem::replace(&mut self.m[(b, j)], x);
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                let x = u[(a, j)].clone();
                u[(a, j)] = std::mem::replace(&mut u[(b, j)], x);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows() {
            let x = self.m[(i, a)].clone();
            self.m[(i, a)] = std::mem::replace(&mut self.m[(i, b)], x);
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows() {
                let x = v[(i, a)].clone();
                v[(i, a)] = std::mem::replace(&mut v[(i, b)], x);
            }
        }
    }

    // row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.m.cols() {
            if !self.m[(src, j)].is_zero() {
                let t = q * &self.m[(src, j)];
                self.m[(dst, j)] -= t;
            }
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                if !u[(src, j)].is_zero() {
                    let t = q * &u[(src, j)];
                    u[(dst, j)] -= t;
                }
            }
        }
    }

    // col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.m.rows() {
            if !self.m[(i, src)].is_zero() {
                let t = q * &self.m[(i, src)];
                self.m[(i, dst)] -= t;
            }
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows() {
                if !v[(i, src)].is_zero() {
                    let t = q * &v[(i, src)];
                    v[(i, dst)] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.m.cols() {
            let x = -std::mem::take(&mut self.m[(r, j)]);
            self.m[(r, j)] = x;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                let x = -std::mem::take(&mut u[(r, j)]);
                u[(r, j)] = x;
            }
        }
    }
}

fn smith_core(m: &IntMatrix, with_transforms: bool) -> SnfWork {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = SnfWork {
        m: m.clone(),
        u: with_transforms.then(|| IntMatrix::identity(rows)),
        v: with_transforms.then(|| IntMatrix::identity(cols)),
    };
    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // Minimal-absolute-value pivot in the trailing block limits growth.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if w.m[(i, j)].is_zero() {
                    continue;
                }
                pivot = match pivot {
                    None => Some((i, j)),
                    Some(p) => {
                        if w.m[(i, j)].abs() < w.m[p].abs() {
                            Some((i, j))
                        } else {
                            Some(p)
                        }
                    }
                };
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        // Clear row and column k; the pivot may need several passes.
        loop {
            let mut clean = true;
            for i in (k + 1)..rows {
                if w.m[(i, k)].is_zero() {
                    continue;
                }
                let q = w.m[(i, k)].div_floor(&w.m[(k, k)]);
                w.row_axpy(i, k, &q);
                if !w.m[(i, k)].is_zero() {
                    // Remainder is smaller than the pivot; promote it.
                    w.swap_rows(k, i);
                    clean = false;
                }
            }
            for j in (k + 1)..cols {
                if w.m[(k, j)].is_zero() {
                    continue;
                }
                let q = w.m[(k, j)].div_floor(&w.m[(k, k)]);
                w.col_axpy(j, k, &q);
                if !w.m[(k, j)].is_zero() {
                    w.swap_cols(k, j);
                    clean = false;
                }
            }
            let row_clear = ((k + 1)..rows).all(|i| w.m[(i, k)].is_zero());
            let col_clear = ((k + 1)..cols).all(|j| w.m[(k, j)].is_zero());
            if clean && row_clear && col_clear {
                break;
            }
        }
        if w.m[(k, k)].is_negative() {
            w.negate_row(k);
        }
        // Divisibility: fold any non-multiple into the pivot's column.
        let d = w.m[(k, k)].clone();
        let mut offender = None;
        'search: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if !w.m[(i, j)].is_rem_zero(&d) {
                    offender = Some(i);
                    break 'search;
                }
            }
        }
        if let Some(i) = offender {
            let minus_one = BigInt::from(-1);
            w.row_axpy(k, i, &minus_one); // row k += row i
            continue; // redo elimination at k with the enlarged row
        }
        k += 1;
    }
    w
}

trait RemZero {
    fn is_rem_zero(&self, d: &BigInt) -> bool;
}

impl RemZero for BigInt {
    fn is_rem_zero(&self, d: &BigInt) -> bool {
        if d.is_zero() {
            self.is_zero()
        } else {
            self.mod_floor(d).is_zero()
        }
    }
}

/// Full Smith decomposition with verified unimodular certificates.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let w = smith_core(m, true);
    let mut factors = Vec::new();
    for k in 0..m.rows().min(m.cols()) {
        if w.m[(k, k)].is_zero() {
            break;
        }
        factors.push(w.m[(k, k)].clone());
    }
    let dec = SmithDecomposition {
        factors,
        u: w.u.unwrap(),
        v: w.v.unwrap(),
        rows: m.rows(),
        cols: m.cols(),
    };
    let ok = verify(&dec, m);
    record_snf_check(ok);
    assert!(ok, "smith decomposition certificate failed; this is a bug");
    dec
}

/// Invariant factors only, skipping certificate bookkeeping. Used for cheap
/// saturation checks where the factors are the whole answer.
pub fn snf_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let w = smith_core(m, false);
    let mut factors = Vec::new();
    for k in 0..m.rows().min(m.cols()) {
        if w.m[(k, k)].is_zero() {
            break;
        }
        factors.push(w.m[(k, k)].clone());
    }
    factors
}

fn verify(dec: &SmithDecomposition, m: &IntMatrix) -> bool {
    if dec.u.mul(m).mul(&dec.v) != dec.diagonal_matrix() {
        return false;
    }
    for i in 0..dec.factors.len().saturating_sub(1) {
        if !dec.factors[i + 1].is_rem_zero(&dec.factors[i]) {
            return false;
        }
    }
    dec.factors.iter().all(|d| !d.is_negative())
}
