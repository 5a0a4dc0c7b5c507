use std::collections::HashMap;
use std::fmt;

use num::Zero;

use super::poly::{Mono, Poly, Q, Ring};

/// Dense matrix with polynomial entries over the left ring `S`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring, rows, cols, entries: vec![Poly::zero(ring); rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::scalar(ring, n, &Poly::one(ring))
    }

    pub fn scalar(ring: Ring, n: usize, p: &Poly) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        assert_eq!(entries.len(), r * c);
        PolyMatrix { ring, rows: r, cols: c, entries }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = PolyMatrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        PolyMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Q) -> PolyMatrix {
        let entries = self.entries.iter().map(|a| a.scale(c)).collect();
        PolyMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.ring, rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                out.set(a, b, self.get(r, c).clone());
            }
        }
        out
    }

    /// Block placement: writes `block` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// True if every entry is a scalar.
    pub fn scalar_entries(&self) -> Option<Vec<Vec<Q>>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[i][j] = self.get(i, j).as_scalar()?;
            }
        }
        Some(out)
    }

    pub fn from_scalars(ring: Ring, m: &[Vec<Q>], cols: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(ring, m.len(), cols);
        for (i, row) in m.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.set(i, j, Poly::constant(ring, c.clone()));
            }
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Evaluates left polynomials at a family of pairwise commuting matrices
/// `mats[s]` substituted for the free variable `x_{s+1}`. Powers are cached.
pub struct MatrixEvaluator<'a> {
    mats: &'a [PolyMatrix],
    size: usize,
    ring: Ring,
    powers: HashMap<(usize, u16), PolyMatrix>,
}

impl<'a> MatrixEvaluator<'a> {
    pub fn new(ring: Ring, size: usize, mats: &'a [PolyMatrix]) -> Self {
        MatrixEvaluator { mats, size, ring, powers: HashMap::new() }
    }

    fn power(&mut self, s: usize, e: u16) -> PolyMatrix {
        if e == 0 {
            return PolyMatrix::identity(self.ring, self.size);
        }
        if let Some(m) = self.powers.get(&(s, e)) {
            return m.clone();
        }
        let m = self.power(s, e - 1).mul(&self.mats[s]);
        self.powers.insert((s, e), m.clone());
        m
    }

    pub fn monomial(&mut self, m: &Mono) -> PolyMatrix {
        let mut acc: Option<PolyMatrix> = None;
        for (s, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = self.power(s, e);
            acc = Some(match acc {
                None => p,
                Some(a) => a.mul(&p),
            });
        }
        acc.unwrap_or_else(|| PolyMatrix::identity(self.ring, self.size))
    }

    pub fn eval(&mut self, p: &Poly) -> PolyMatrix {
        if let Some(c) = p.as_scalar() {
            return PolyMatrix::scalar(self.ring, self.size, &Poly::constant(self.ring, c));
        }
        let mut acc = PolyMatrix::zeros(self.ring, self.size, self.size);
        for (m, c) in p.terms() {
            acc = acc.add(&self.monomial(m).scale(c));
        }
        acc
    }

    /// Evaluates a two-sided polynomial `Σ c x^α y^β` as the left-linear
    /// operator `v ↦ Σ c x^α (v · y^β)`, where the right action is given by
    /// the matrices.
    pub fn eval_two_sided(&mut self, p: &Poly) -> PolyMatrix {
        let mut acc = PolyMatrix::zeros(self.ring, self.size, self.size);
        for (xm, ym, c) in p.split_two_sided() {
            let left = Poly::monomial(self.ring, xm, c);
            let right = self.monomial(&ym);
            let scaled = PolyMatrix::scalar(self.ring, self.size, &left).mul(&right);
            acc = acc.add(&scaled);
        }
        acc
    }
}
