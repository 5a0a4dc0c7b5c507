//! Bounded complexes of bimodules: Rouquier complexes, tensor products with
//! Koszul signs, shifts, cones and graded Euler characteristics.

mod simplify;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::algebra::{enumerate_graded_piece, q_int, PolyMatrix, Ring};
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::soergel::{
    identity_bimodule, iota_map, map_tensor, mult_map, tensor_over_s, Bimodule, BimoduleMap,
};

pub use simplify::{eliminate_left, gaussian_eliminate, FreeComplex};

/// Homological degrees of the tensor factors a generator came from.
pub type Label = SmallVec<[i32; 8]>;

/// Bounded cochain complex `C^start → C^{start+1} → ...` of bimodules with
/// internal-degree-zero differentials.
#[derive(Clone)]
pub struct BComplex {
    strands: usize,
    start: i32,
    terms: Vec<Arc<Bimodule>>,
    diffs: Vec<BimoduleMap>,
    labels: Vec<Vec<Label>>,
}

impl fmt::Debug for BComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BComplex(n={}, ", self.strands)?;
        for (t, m) in self.terms.iter().enumerate() {
            write!(f, "[{}]{:?} ", self.start + t as i32, m.gens())?;
        }
        write!(f, ")")
    }
}

impl BComplex {
    pub fn new(strands: usize, start: i32, terms: Vec<Arc<Bimodule>>, diffs: Vec<BimoduleMap>) -> Result<Self> {
        let labels = terms
            .iter()
            .enumerate()
            .map(|(t, m)| vec![smallvec![start + t as i32]; m.rank()])
            .collect();
        let c = BComplex { strands, start, terms, diffs, labels };
        c.validate()?;
        Ok(c)
    }

    pub fn zero(strands: usize) -> Self {
        BComplex { strands, start: 0, terms: Vec::new(), diffs: Vec::new(), labels: Vec::new() }
    }

    /// A single bimodule in homological degree `k`.
    pub fn single(m: Bimodule, k: i32) -> Self {
        let n = m.strands();
        BComplex::new(n, k, vec![Arc::new(m)], Vec::new()).expect("one-term complex")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    /// One past the last homological degree.
    pub fn end(&self) -> i32 {
        self.start + self.terms.len() as i32
    }

    pub fn degrees(&self) -> std::ops::Range<i32> {
        self.start..self.end()
    }

    pub fn term(&self, k: i32) -> Arc<Bimodule> {
        if self.degrees().contains(&k) {
            self.terms[(k - self.start) as usize].clone()
        } else {
            Arc::new(Bimodule::zero(self.strands))
        }
    }

    pub fn labels(&self, k: i32) -> &[Label] {
        if self.degrees().contains(&k) {
            &self.labels[(k - self.start) as usize]
        } else {
            &[]
        }
    }

    /// `d^k : C^k → C^{k+1}`.
    pub fn diff(&self, k: i32) -> BimoduleMap {
        if k >= self.start && k + 1 < self.end() {
            self.diffs[(k - self.start) as usize].clone()
        } else {
            BimoduleMap::zero(self.term(k), self.term(k + 1), 0)
        }
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(|m| m.rank()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_rank() == 0
    }

    /// Bimodule invariants of every term, differential invariants and `d∘d = 0`.
    pub fn validate(&self) -> Result<()> {
        if self.diffs.len() != self.terms.len().saturating_sub(1) {
            return Err(Error::Invariant("differential count".into()));
        }
        for m in &self.terms {
            m.validate()?;
        }
        for k in self.degrees() {
            let d = self.diff(k);
            if d.degree != 0 {
                return Err(Error::Invariant(format!("d^{k} has internal degree {}", d.degree)));
            }
            d.validate()?;
        }
        self.check_d_squared()
    }

    pub fn check_d_squared(&self) -> Result<()> {
        for k in self.degrees() {
            let dd = self.diff(k + 1).matrix.mul(&self.diff(k).matrix);
            if !dd.is_zero() {
                return Err(Error::Invariant(format!("d^{} ∘ d^{k} ≠ 0", k + 1)));
            }
        }
        Ok(())
    }

    /// `C[j]`: `(C[j])^k = C^{k+j}` with differential `(-1)^j d`.
    pub fn shift(&self, j: i32) -> BComplex {
        let sign = if j.rem_euclid(2) == 0 { q_int(1) } else { q_int(-1) };
        BComplex {
            strands: self.strands,
            start: self.start - j,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scaled(&sign)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Every term shifted by `{a}` in internal degree.
    pub fn internal_shift(&self, a: i32) -> BComplex {
        let terms: Vec<Arc<Bimodule>> = self.terms.iter().map(|m| Arc::new(m.shifted(a))).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(t, d)| BimoduleMap { source: terms[t].clone(), target: terms[t + 1].clone(), ..d.clone() })
            .collect();
        BComplex { terms, diffs, ..self.clone() }
    }

    /// Offsets of the summands `C^a ⊗ D^b` (a ascending) inside `(C ⊗ D)^k`.
    fn summands(c: &BComplex, d: &BComplex, k: i32) -> Vec<(i32, i32, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for a in c.degrees() {
            let b = k - a;
            if d.degrees().contains(&b) {
                let r = c.term(a).rank() * d.term(b).rank();
                out.push((a, b, off));
                off += r;
            }
        }
        out
    }

    /// Tensor product over `S`; on `C^a ⊗ D^b` the differential is
    /// `d_C ⊗ id + (-1)^a id ⊗ d_D`.
    pub fn tensor(&self, other: &BComplex) -> Result<BComplex> {
        if self.strands != other.strands {
            return Err(Error::Incompatible("tensor of complexes on different strand counts".into()));
        }
        let n = self.strands;
        if self.terms.is_empty() || other.terms.is_empty() {
            return Ok(BComplex::zero(n));
        }
        let start = self.start + other.start;
        let end = self.end() + other.end() - 1;
        let mut terms = Vec::new();
        let mut labels = Vec::new();
        for k in start..end {
            let mut parts = Vec::new();
            let mut lab = Vec::new();
            for (a, b, _) in Self::summands(self, other, k) {
                parts.push(tensor_over_s(&self.term(a), &other.term(b))?);
                for la in self.labels(a) {
                    for lb in other.labels(b) {
                        let mut l = la.clone();
                        l.extend(lb.iter().copied());
                        lab.push(l);
                    }
                }
            }
            let refs: Vec<&Bimodule> = parts.iter().collect();
            terms.push(Arc::new(Bimodule::direct_sum(n, &refs)));
            labels.push(lab);
        }
        let ring = Ring::left(n);
        let mut diffs = Vec::new();
        for k in start..end - 1 {
            let (src, tgt) = (&terms[(k - start) as usize], &terms[(k + 1 - start) as usize]);
            let mut mat = PolyMatrix::zeros(ring, tgt.rank(), src.rank());
            let tgt_sum = Self::summands(self, other, k + 1);
            let find = |a: i32| tgt_sum.iter().find(|s| s.0 == a).map(|s| s.2);
            for (a, b, off) in Self::summands(self, other, k) {
                let (ca, db) = (self.term(a), other.term(b));
                if let Some(toff) = find(a + 1) {
                    let m = map_tensor(&self.diff(a), &BimoduleMap::identity(db.clone()))?;
                    mat.place(toff, off, &m.matrix);
                }
                if let Some(toff) = find(a) {
                    let sign = if a.rem_euclid(2) == 0 { q_int(1) } else { q_int(-1) };
                    let m = map_tensor(&BimoduleMap::identity(ca.clone()), &other.diff(b))?;
                    mat.place(toff, off, &m.matrix.scale(&sign));
                }
            }
            diffs.push(BimoduleMap::unchecked(src.clone(), tgt.clone(), 0, mat));
        }
        let out = BComplex { strands: n, start, terms, diffs, labels };
        debug_assert!(out.check_d_squared().is_ok());
        Ok(out)
    }

    /// Restricts to degrees with nonzero terms at the two ends.
    pub(crate) fn trimmed(self) -> BComplex {
        let nz: Vec<usize> = (0..self.terms.len()).filter(|&t| self.terms[t].rank() > 0).collect();
        let (Some(&lo), Some(&hi)) = (nz.first(), nz.last()) else {
            return BComplex::zero(self.strands);
        };
        BComplex {
            strands: self.strands,
            start: self.start + lo as i32,
            terms: self.terms[lo..=hi].to_vec(),
            diffs: self.diffs[lo..hi].to_vec(),
            labels: self.labels[lo..=hi].to_vec(),
        }
    }
}

/// Degree-preserving family of bimodule maps `f^k : X^k → Y^{k+offset}`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub offset: i32,
    maps: BTreeMap<i32, BimoduleMap>,
}

impl ChainMap {
    /// `maps` is indexed by the source degree; missing degrees are zero.
    pub fn new(offset: i32, maps: BTreeMap<i32, BimoduleMap>) -> Self {
        ChainMap { offset, maps }
    }

    pub fn identity(x: &BComplex) -> Self {
        let maps = x.degrees().map(|k| (k, BimoduleMap::identity(x.term(k)))).collect();
        ChainMap { offset: 0, maps }
    }

    pub fn component(&self, x: &BComplex, y: &BComplex, k: i32) -> BimoduleMap {
        self.maps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| BimoduleMap::zero(x.term(k), y.term(k + self.offset), 0))
    }

    pub fn scaled(&self, c: &crate::algebra::Q) -> ChainMap {
        ChainMap { offset: self.offset, maps: self.maps.iter().map(|(k, m)| (*k, m.scaled(c))).collect() }
    }

    /// Checks `d_Y ∘ f = f ∘ d_X` and internal degree zero.
    pub fn validate(&self, x: &BComplex, y: &BComplex) -> Result<()> {
        let lo = x.start().min(y.start() - self.offset) - 1;
        let hi = x.end().max(y.end() - self.offset) + 1;
        for k in lo..hi {
            let f = self.component(x, y, k);
            if f.degree != 0 {
                return Err(Error::NotAChainMap(format!("component {k} has internal degree {}", f.degree)));
            }
            if f.matrix.rows() != y.term(k + self.offset).rank() || f.matrix.cols() != x.term(k).rank() {
                return Err(Error::NotAChainMap(format!("component {k} has the wrong shape")));
            }
            let lhs = y.diff(k + self.offset).matrix.mul(&f.matrix);
            let rhs = self.component(x, y, k + 1).matrix.mul(&x.diff(k).matrix);
            if lhs != rhs {
                return Err(Error::NotAChainMap(format!("square at degree {k} does not commute")));
            }
        }
        Ok(())
    }

    /// `f ⊗ g` for degree-zero chain maps; no signs arise.
    pub fn tensor(&self, x: &BComplex, y: &BComplex, g: &ChainMap, u: &BComplex, v: &BComplex) -> Result<ChainMap> {
        if self.offset != 0 || g.offset != 0 {
            return Err(Error::Incompatible("tensor of chain maps needs offset zero".into()));
        }
        let xu = x.tensor(u)?;
        let yv = y.tensor(v)?;
        let ring = Ring::left(x.strands());
        let mut maps = BTreeMap::new();
        for k in xu.degrees() {
            let (src, tgt) = (xu.term(k), yv.term(k));
            let mut mat = PolyMatrix::zeros(ring, tgt.rank(), src.rank());
            let tsum = BComplex::summands(y, v, k);
            for (a, b, off) in BComplex::summands(x, u, k) {
                if let Some(&(_, _, toff)) = tsum.iter().find(|s| s.0 == a) {
                    let m = map_tensor(&self.component(x, y, a), &g.component(u, v, b))?;
                    mat.place(toff, off, &m.matrix);
                }
            }
            maps.insert(k, BimoduleMap::unchecked(src, tgt, 0, mat));
        }
        Ok(ChainMap { offset: 0, maps })
    }
}

/// Cone of a degree-zero chain map: `C^k = X^{k+1} ⊕ Y^k`,
/// `d(x, y) = (-d_X x, f(x) + d_Y y)`. With `-d_Y` the square of the
/// differential would be `-2 f d_X`.
pub fn cone(f: &ChainMap, x: &BComplex, y: &BComplex) -> Result<BComplex> {
    if f.offset != 0 {
        return Err(Error::NotAChainMap("cones take offset-zero chain maps".into()));
    }
    f.validate(x, y)?;
    let n = x.strands();
    let ring = Ring::left(n);
    let lo = (x.start() - 1).min(y.start());
    let hi = (x.end() - 1).max(y.end());
    let mut terms = Vec::new();
    for k in lo..hi {
        terms.push(Arc::new(Bimodule::direct_sum(n, &[&x.term(k + 1), &y.term(k)])));
    }
    let minus = q_int(-1);
    let mut diffs = Vec::new();
    for k in lo..hi - 1 {
        let (src, tgt) = (&terms[(k - lo) as usize], &terms[(k + 1 - lo) as usize]);
        let rx = x.term(k + 1).rank();
        let rx2 = x.term(k + 2).rank();
        let mut mat = PolyMatrix::zeros(ring, tgt.rank(), src.rank());
        mat.place(0, 0, &x.diff(k + 1).matrix.scale(&minus));
        mat.place(rx2, 0, &f.component(x, y, k + 1).matrix);
        mat.place(rx2, rx, &y.diff(k).matrix);
        diffs.push(BimoduleMap::unchecked(src.clone(), tgt.clone(), 0, mat));
    }
    Ok(BComplex::new(n, lo, terms, diffs)?.trimmed())
}

/// `F(σ_i)`: `S{2}` in degree -1, `S_i{1}` in degree 0, differential `ι_i`.
pub fn rouquier_positive(n: usize, i: usize) -> Result<BComplex> {
    let d = iota_map(n, i)?.with_shifts(2, 1);
    BComplex::new(n, -1, vec![d.source.clone(), d.target.clone()], vec![d])
}

/// `F(σ_i^{-1})`: `S_i{-1}` in degree 0, `S{-2}` in degree 1, differential `m_i`.
pub fn rouquier_negative(n: usize, i: usize) -> Result<BComplex> {
    let d = mult_map(n, i)?.with_shifts(-1, -2);
    BComplex::new(n, 0, vec![d.source.clone(), d.target.clone()], vec![d])
}

pub fn rouquier_letter(n: usize, letter: Letter) -> Result<BComplex> {
    if letter.positive {
        rouquier_positive(n, letter.index)
    } else {
        rouquier_negative(n, letter.index)
    }
}

/// Tensor product of the letter complexes of a braid word; the empty word
/// gives `S` in degree zero.
pub fn rouquier(word: &BraidWord) -> Result<BComplex> {
    let n = word.strands();
    let mut acc = BComplex::single(identity_bimodule(n), 0);
    let mut first = true;
    for &l in word.letters() {
        let c = rouquier_letter(n, l)?;
        acc = if first { c } else { acc.tensor(&c)? };
        first = false;
    }
    Ok(acc)
}

/// Laurent polynomial in `q` (internal degree) with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedEuler(pub BTreeMap<i32, i64>);

impl GradedEuler {
    pub fn add_term(&mut self, e: i32, c: i64) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn sub(&self, other: &GradedEuler) -> GradedEuler {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// `Σ_k (-1)^k Σ_j dim (C^k)_j q^j` over internal degrees `j ≤ j_max`.
pub fn euler_characteristic(c: &BComplex, j_max: i32) -> GradedEuler {
    let mut out = GradedEuler::default();
    let ring = Ring::left(c.strands());
    for k in c.degrees() {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        for &g in c.term(k).gens() {
            let mut j = g;
            while j <= j_max {
                let dim = enumerate_graded_piece(ring, j - g).map(|p| p.dim()).unwrap_or(0);
                if dim > 0 {
                    out.add_term(j, sign * dim as i64);
                }
                j += 2;
            }
        }
    }
    out
}

/// Graded ranks: homological degree → generator degree → multiplicity.
pub fn graded_ranks(c: &BComplex) -> BTreeMap<i32, BTreeMap<i32, usize>> {
    let mut out = BTreeMap::new();
    for k in c.degrees() {
        let mut m = BTreeMap::new();
        for &g in c.term(k).gens() {
            *m.entry(g).or_insert(0) += 1;
        }
        if !m.is_empty() {
            out.insert(k, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn letter_complexes() {
        let p = rouquier_positive(2, 1).unwrap();
        assert_eq!(p.degrees(), -1..1);
        assert_eq!(p.term(-1).gens(), &[2]);
        assert_eq!(p.term(0).gens(), &[0, 2]);
        assert_eq!(p.diff(-1).degree, 0);
        let m = rouquier_negative(2, 1).unwrap();
        assert_eq!(m.degrees(), 0..2);
        assert_eq!(m.term(0).gens(), &[-2, 0]);
        assert_eq!(m.term(1).gens(), &[-2]);
        assert!(rouquier_positive(2, 2).is_err());
    }

    #[test]
    fn words() {
        let e = rouquier(&BraidWord::parse("2:").unwrap()).unwrap();
        assert_eq!(e.degrees(), 0..1);
        assert_eq!(e.total_rank(), 1);
        let s = rouquier(&BraidWord::parse("2: 1").unwrap()).unwrap();
        assert_eq!(s.total_rank(), 3);
        let t = rouquier(&BraidWord::parse("2: 1 1 1").unwrap()).unwrap();
        assert_eq!(t.terms.len(), 4);
        t.validate().unwrap();
    }

    #[test]
    fn three_fold_association() {
        let a = rouquier_positive(3, 1).unwrap();
        let b = rouquier_negative(3, 2).unwrap();
        let c = rouquier_positive(3, 1).unwrap();
        let l = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let r = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        l.validate().unwrap();
        r.validate().unwrap();
        assert_eq!(graded_ranks(&l), graded_ranks(&r));
    }

    #[test]
    fn cone_of_zero_and_identity() {
        let x = rouquier_positive(2, 1).unwrap();
        let y = rouquier_negative(2, 1).unwrap();
        let zero = ChainMap::new(0, BTreeMap::new());
        let c = cone(&zero, &x, &y).unwrap();
        assert_eq!(c.total_rank(), x.total_rank() + y.total_rank());
        c.validate().unwrap();
        let id = ChainMap::identity(&x);
        let cx = cone(&id, &x, &x).unwrap();
        cx.validate().unwrap();
        assert_eq!(euler_characteristic(&cx, 12), GradedEuler::default());
    }

    #[test]
    fn cone_rejects_non_chain_maps() {
        let x = rouquier_positive(2, 1).unwrap();
        let mut maps = BTreeMap::new();
        maps.insert(-1, BimoduleMap::identity(x.term(-1)));
        let f = ChainMap::new(0, maps);
        assert!(matches!(cone(&f, &x, &x), Err(Error::NotAChainMap(_))));
    }

    #[test]
    fn euler_of_identity_bimodule() {
        let s = BComplex::single(identity_bimodule(2), 0);
        let e = euler_characteristic(&s, 8);
        assert_eq!(e.0, [(0, 1), (2, 1), (4, 1), (6, 1), (8, 1)].into_iter().collect());
        assert!(euler_characteristic(&BComplex::zero(2), 8).is_zero());
    }

    #[test]
    fn cone_euler_additivity() {
        let x = rouquier(&BraidWord::parse("2: 1 1").unwrap()).unwrap();
        let y = rouquier(&BraidWord::parse("2: -1").unwrap()).unwrap();
        let zero = ChainMap::new(0, BTreeMap::new());
        let c = cone(&zero, &x, &y).unwrap();
        let expect = euler_characteristic(&y, 10).sub(&euler_characteristic(&x, 10));
        // C^k = X^{k+1} ⊕ Y^k, so χ(C) = χ(Y) - χ(X)
        assert_eq!(euler_characteristic(&c, 10), expect);
    }
}
