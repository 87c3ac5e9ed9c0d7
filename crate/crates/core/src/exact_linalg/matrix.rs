use super::field::PrimeField;

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    /// Empty matrix with a fixed column count, filled with `push_row`.
    pub fn with_cols(field: PrimeField, cols: usize) -> Self {
        Self::zeros(field, 0, cols)
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::with_cols(field, cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row.iter().map(|&v| self.field.reduce(v)));
        self.rows += 1;
    }

    pub fn append(&mut self, other: &FieldMatrix) {
        assert_eq!(self.cols, other.cols, "column mismatch");
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let f = self.field;
        let p = f.modulus() as u128;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u128; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a as u128 * other.get(k, j) as u128) % p;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * other.cols + j] = v as u64;
            }
        }
        out
    }

    /// Product `self * other^T`, i.e. pairings of rows.
    pub fn mul_transpose(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols, "shape mismatch");
        let p = self.field.modulus() as u128;
        let mut out = Self::zeros(self.field, self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.rows {
                let b = other.row(j);
                let mut acc = 0u128;
                for (x, y) in a.iter().zip(b) {
                    acc = (acc + *x as u128 * *y as u128) % p;
                }
                out.data[i * other.rows + j] = acc as u64;
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is non-zero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor != 0 {
                    self.sub_scaled_row(i, r, factor, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv)
    }

    /// Rank by forward elimination over rows.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let f = self.field;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is non-zero");
            for i in r + 1..m.rows {
                let factor = m.get(i, c);
                if factor != 0 {
                    m.sub_scaled_row(i, r, f.mul(factor, inv), c);
                }
            }
            r += 1;
        }
        r
    }

    /// Rank computed on the transpose, scanning pivots from the last column.
    ///
    /// A second elimination order used to cross-check `rank`.
    pub fn rank_transposed(&self) -> usize {
        let t = self.transpose();
        let n = t.cols;
        let mut rev = Self::zeros(self.field, t.rows, n);
        for i in 0..t.rows {
            for j in 0..n {
                rev.data[i * n + j] = t.get(i, n - 1 - j);
            }
        }
        rev.rank()
    }

    /// Basis of the row space, as the non-zero rows of the RREF.
    pub fn row_space(&self) -> FieldMatrix {
        let (m, piv) = self.rref();
        let mut out = Self::with_cols(self.field, self.cols);
        for r in 0..piv.len() {
            out.push_row(m.row(r));
        }
        out
    }

    /// Basis (as rows) of `{x : self * x = 0}`.
    pub fn kernel(&self) -> FieldMatrix {
        let f = self.field;
        let (m, piv) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &piv {
            is_pivot[c] = true;
        }
        let mut out = Self::with_cols(f, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            out.push_row(&v);
        }
        out
    }

    /// Basis of the intersection of the row spaces of `self` and `other`.
    pub fn intersect_row_spaces(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols, "ambient dimension mismatch");
        let a = self.row_space();
        // Vectors of span(a) orthogonal to the annihilator of `other`.
        let ann = other.kernel();
        if ann.rows == 0 {
            return a;
        }
        let coeffs = ann.mul_transpose(&a).kernel();
        coeffs.mul(&a).row_space()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[i] -= factor * row[src], for columns from `start`.
    fn sub_scaled_row(&mut self, i: usize, src: usize, factor: u64, start: usize) {
        let f = self.field;
        for j in start..self.cols {
            let s = self.data[src * self.cols + j];
            if s != 0 {
                let idx = i * self.cols + j;
                self.data[idx] = f.sub(self.data[idx], f.mul(factor, s));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random(f: PrimeField, rows: usize, cols: usize, seed: u64) -> FieldMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = FieldMatrix::zeros(f, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f.random(&mut rng));
            }
        }
        m
    }

    #[test]
    fn rank_of_product_of_thin_factors() {
        let f = PrimeField::default();
        let a = random(f, 9, 3, 1);
        let b = random(f, 3, 7, 2);
        let p = a.mul(&b);
        assert_eq!(p.rank(), 3);
        assert_eq!(p.rank_transposed(), 3);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = PrimeField::new(101).unwrap();
        let a = random(f, 4, 9, 3);
        let k = a.kernel();
        assert_eq!(k.rows(), 9 - a.rank());
        let z = a.mul_transpose(&k);
        assert!((0..z.rows()).all(|r| z.row(r).iter().all(|&v| v == 0)));
    }

    #[test]
    fn intersection_dimension_is_generic() {
        let f = PrimeField::default();
        let a = random(f, 5, 8, 4);
        let b = random(f, 6, 8, 5);
        // dim A + dim B - n = 3 for generic subspaces.
        assert_eq!(a.intersect_row_spaces(&b).rows(), 3);
        let mut both = a.clone();
        both.append(&b);
        assert_eq!(a.intersect_row_spaces(&a).rows(), 5);
        assert_eq!(both.rank(), 8);
    }

    #[test]
    fn rank_of_empty_and_zero() {
        let f = PrimeField::default();
        assert_eq!(FieldMatrix::with_cols(f, 4).rank(), 0);
        assert_eq!(FieldMatrix::zeros(f, 3, 3).rank(), 0);
        assert_eq!(FieldMatrix::identity(f, 5).rank(), 5);
        assert_eq!(FieldMatrix::identity(f, 5).kernel().rows(), 0);
    }
}
