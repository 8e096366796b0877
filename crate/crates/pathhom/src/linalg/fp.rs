use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Dense matrix over the prime field Z/p, with Gaussian elimination for
/// ranks, kernels, and solves. Entries are stored reduced into `[0, p)`.
#[derive(Debug, Clone)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FpMatrix {
    pub fn prime_ok(p: u64) -> bool {
        is_prime(p)
    }

    /// Builds a matrix from explicit rows (entries already in `[0, p)`).
    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<u64>>, p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        assert_eq!(data.len(), rows);
        assert!(data.iter().all(|r| r.len() == cols));
        FpMatrix { p, rows, cols, data: data.into_iter().flatten().map(|x| x % p).collect() }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: Vec<Vec<u64>>, p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        let c = cols.len();
        assert!(cols.iter().all(|col| col.len() == rows));
        let mut m = FpMatrix { p, rows, cols: c, data: vec![0; rows * c] };
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = v % p;
            }
        }
        m
    }

    /// Matrix-vector product mod p.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + mulmod(self.at(i, j), v[j], self.p)) % self.p;
                }
                acc
            })
            .collect()
    }

    /// Reduces an integer matrix mod p. Panics if `p` is not prime.
    pub fn from_int(m: &IntMatrix, p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        let big_p = BigInt::from(p);
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                data.push(m[(i, j)].mod_floor(&big_p).to_u64().unwrap());
            }
        }
        FpMatrix { p, rows: m.rows(), cols: m.cols(), data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }

    // Reduced row echelon form; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p_row) = (r..self.rows).find(|&i| self.at(i, c) != 0) else { continue };
            for j in 0..self.cols {
                let tmp = self.at(r, j);
                *self.at_mut(r, j) = self.at(p_row, j);
                *self.at_mut(p_row, j) = tmp;
            }
            let inv = self.inv(self.at(r, c));
            for j in c..self.cols {
                *self.at_mut(r, j) = mulmod(self.at(r, j), inv, self.p);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c) == 0 {
                    continue;
                }
                let f = self.at(i, c);
                for j in c..self.cols {
                    let sub = mulmod(f, self.at(r, j), self.p);
                    *self.at_mut(i, j) = (self.at(i, j) + self.p - sub) % self.p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Kernel basis as columns (vectors over Z/p).
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (self.p - a.at(row, fc)) % self.p;
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = y` over Z/p; `None` if inconsistent.
    pub fn solve(&self, y: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(y.len(), self.rows);
        let mut aug = FpMatrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols + 1,
            data: vec![0; self.rows * (self.cols + 1)],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j);
            }
            *aug.at_mut(i, self.cols) = y[i] % self.p;
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(row, self.cols);
        }
        Some(x)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}
