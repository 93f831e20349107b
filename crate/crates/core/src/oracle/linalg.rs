//! Dense linear algebra over a prime field `GF(p)`, `p < 2^31`.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Option<Self> {
        (is_prime(p) && p < 1 << 31).then_some(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn reduce_signed(self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    /// `v -= c * w`, entrywise.
    fn axpy(self, v: &mut [u64], c: u64, w: &[u64]) {
        for (x, &y) in v.iter_mut().zip(w) {
            if y != 0 {
                *x = (*x + self.p - c * y % self.p) % self.p;
            }
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row space kept in echelon form; every stored row has a leading 1 at
/// its pivot and zeros at the pivots of earlier rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns false if it was already in it.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                self.field.axpy(&mut v, c, row);
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[piv]);
        for x in &mut v {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `ncols`.
///
/// Pivots are chosen as the first nonzero column, so the basis is
/// deterministic: one vector per free column, with a 1 there.
pub fn kernel_basis(field: PrimeField, mut rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = field.inv(rows[r][c]);
        for x in &mut rows[r] {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                field.axpy(row, f, &pivot_row);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = field.sub(0, rows[row][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn apply(field: PrimeField, rows: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + field.mul(a, b)) % field.modulus())
            })
            .collect()
    }

    #[test]
    fn primes() {
        assert!(PrimeField::new(32003).is_some());
        assert!(PrimeField::new(65537).is_some());
        assert!(PrimeField::new(32004).is_none());
        assert_eq!(f().mul(f().inv(12345), 12345), 1);
    }

    #[test]
    fn kernel_of_small_matrix() {
        let field = f();
        let m = field.reduce_signed(-1);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, m]];
        let k = kernel_basis(field, rows.clone(), 3);
        assert_eq!(k.len(), 1);
        assert!(apply(field, &rows, &k[0]).iter().all(|&x| x == 0));
        assert_eq!(kernel_basis(field, vec![], 2).len(), 2);
        assert_eq!(
            kernel_basis(field, vec![vec![1, 0], vec![0, 1]], 2).len(),
            0
        );
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new(f());
        assert!(e.insert(vec![1, 2, 0]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(!e.insert(vec![2, 5, 1]));
        assert!(!e.insert(vec![0, 0, 0]));
        assert!(e.insert(vec![0, 0, 1]));
        assert_eq!(e.rank(), 3);
    }
}
