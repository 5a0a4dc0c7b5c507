//! Exact sparse linear algebra over Q: echelon forms with coefficient
//! tracking, kernels, preimages and homology bases with projections.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use crate::algebra::Q;
use crate::error::{Error, Result};

/// Sorted `(index, coefficient)` pairs without zeros.
pub type SparseVec = Vec<(usize, Q)>;

pub fn unit(i: usize) -> SparseVec {
    vec![(i, Q::one())]
}

pub fn scale(v: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a + c·b`.
pub fn axpy(a: &SparseVec, c: &Q, b: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Q> = a.iter().cloned().collect();
    add_into(&mut acc, c, b);
    acc.into_iter().collect()
}

fn add_into(acc: &mut BTreeMap<usize, Q>, c: &Q, b: &SparseVec) {
    use std::collections::btree_map::Entry;
    for (i, x) in b {
        let v = c * x;
        match acc.entry(*i) {
            Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

pub fn from_map(m: BTreeMap<usize, Q>) -> SparseVec {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            add_into(&mut acc, c, &self.cols[*j]);
        }
        from_map(acc)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), other.rows, "composition shape mismatch");
        SparseMatrix { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        let one = Q::one();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(a, &one, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| scale(v, c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                out[*i][j] = c.clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        self.cols.iter().filter(|c| e.insert(c, &Vec::new()).is_ok()).count()
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    tag: SparseVec,
}

/// Row echelon basis of a subspace where every stored row carries a tag: a
/// formal combination recording how the row was obtained from inserted
/// vectors. Pivots are leading (smallest) indices, normalized to one.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Writes `v = Σ c_r row_r + residual`; returns the residual and `Σ c_r tag_r`.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut work: BTreeMap<usize, Q> = v.iter().cloned().collect();
        let mut tag = BTreeMap::new();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).next().map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            if let Some(&r) = self.pivot_of.get(&k) {
                let row = &self.rows[r];
                add_into(&mut work, &-c.clone(), &row.vec);
                add_into(&mut tag, &c, &row.tag);
            }
            cursor = k + 1;
        }
        (from_map(work), from_map(tag))
    }

    /// Inserts `v` carrying `tag`. Returns the new pivot, or on dependence the
    /// relation tag `tag - Σ c_r tag_r` (whose combination of inserted
    /// vectors vanishes).
    pub fn insert(&mut self, v: &SparseVec, tag: &SparseVec) -> std::result::Result<usize, SparseVec> {
        let (res, comb) = self.reduce(v);
        let rel = axpy(tag, &-Q::one(), &comb);
        if res.is_empty() {
            return Err(rel);
        }
        let (pivot, lead) = res[0].clone();
        let inv = lead.recip();
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(Row { vec: scale(&res, &inv), tag: scale(&rel, &inv) });
        Ok(pivot)
    }
}

/// Kernel basis of the linear map whose columns are `cols`, as vectors in the
/// source coordinates.
pub fn nullspace(cols: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    cols.iter()
        .enumerate()
        .filter_map(|(i, c)| e.insert(c, &unit(i)).err())
        .collect()
}

/// Solves `M x = b` for a fixed matrix `M` given by columns.
#[derive(Clone, Debug)]
pub struct ColumnSolver {
    ech: Echelon,
}

impl ColumnSolver {
    pub fn new(m: &SparseMatrix) -> Self {
        let mut ech = Echelon::new();
        for (i, c) in m.cols.iter().enumerate() {
            let _ = ech.insert(c, &unit(i));
        }
        ColumnSolver { ech }
    }

    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let (res, comb) = self.ech.reduce(b);
        res.is_empty().then_some(comb)
    }
}

/// Homology `ker(outgoing) / im(incoming)` of a space with a chosen basis of
/// cycle representatives and a projection from cycles to coordinates.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    ambient: usize,
    reps: Vec<SparseVec>,
    ech: Echelon,
}

impl HomologyBasis {
    pub fn new(ambient: usize, incoming: &SparseMatrix, outgoing: &SparseMatrix) -> Self {
        debug_assert_eq!(incoming.rows, ambient);
        debug_assert_eq!(outgoing.ncols(), ambient);
        let kernel = nullspace(&outgoing.cols);
        let mut ech = Echelon::new();
        for c in &incoming.cols {
            let _ = ech.insert(c, &Vec::new());
        }
        let mut reps = Vec::new();
        for v in kernel {
            if ech.insert(&v, &unit(reps.len())).is_ok() {
                reps.push(v);
            }
        }
        HomologyBasis { ambient, reps, ech }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reps(&self) -> &[SparseVec] {
        &self.reps
    }

    /// Coordinates of the class of a cycle `z`.
    pub fn project(&self, z: &SparseVec) -> Result<SparseVec> {
        let (res, tag) = self.ech.reduce(z);
        if !res.is_empty() {
            return Err(Error::Invariant("projected vector is not a cycle".into()));
        }
        Ok(tag)
    }

    /// Matrix of the map induced by a chain-level map `f` into `target`.
    pub fn induced(&self, f: &SparseMatrix, target: &HomologyBasis) -> Result<SparseMatrix> {
        let cols = self
            .reps
            .iter()
            .map(|r| target.project(&f.apply(r)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { rows: target.dim(), cols })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_int;

    fn col(v: &[i64]) -> SparseVec {
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, q_int(c))).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![col(&[1, 2]), col(&[2, 4]), col(&[0, 0])];
        let k = nullspace(&m);
        assert_eq!(k.len(), 2);
        let sm = SparseMatrix { rows: 2, cols: m };
        for v in &k {
            assert!(sm.apply(v).is_empty());
        }
    }

    #[test]
    fn solver_finds_preimages() {
        let m = SparseMatrix { rows: 3, cols: vec![col(&[1, 1, 0]), col(&[0, 1, 1])] };
        let s = ColumnSolver::new(&m);
        let b = col(&[2, 5, 3]);
        let x = s.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert!(s.solve(&col(&[1, 0, 0])).is_none());
    }

    #[test]
    fn homology_of_short_complex() {
        // Q --(1,1)--> Q^2 --(1,-1)--> Q : homology zero in the middle
        let inc = SparseMatrix { rows: 2, cols: vec![col(&[1, 1])] };
        let out = SparseMatrix { rows: 1, cols: vec![col(&[1]), col(&[-1])] };
        assert_eq!(HomologyBasis::new(2, &inc, &out).dim(), 0);
        let out0 = SparseMatrix::zero(0, 2);
        let h = HomologyBasis::new(2, &inc, &out0);
        assert_eq!(h.dim(), 1);
        assert!(h.project(&col(&[3, 3])).unwrap().is_empty());
        assert_eq!(h.project(&h.reps()[0].clone()).unwrap(), unit(0));
    }
}
