/// What an [`IntMatrix`] was built as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixRole {
    /// 0/1 adjacency `A`.
    Adjacency,
    /// The skew part `A − Aᵀ`.
    Skew,
    /// `S² = −(A − Aᵀ)²`.
    SeidelSquared,
    Other,
}

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    role: MatrixRole,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(n: usize, role: MatrixRole, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, role, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn role(&self) -> MatrixRole {
        self.role
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(<[i64]>::to_vec).take(self.n).collect()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, MatrixRole::Other, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        IntMatrix::from_fn(n, MatrixRole::Other, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Integer matrix-vector product.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `true` iff this is `c · I` for some `c`.
    pub fn is_scalar(&self, c: i64) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { c } else { 0 }))
    }
}
