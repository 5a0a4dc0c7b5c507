//! Bimodules over `S` that are free of finite rank as left modules, stored as
//! generator degrees plus matrices for the right action of each `x_k`.
//!
//! An element is a column of left coefficients; the right action of `x_k`
//! sends the coefficient column `v` to `A_k v`. Grading shifts `{a}` add `a` to
//! every generator degree.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{MatrixEvaluator, Poly, PolyMatrix, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bimodule {
    strands: usize,
    gens: Vec<i32>,
    actions: Vec<PolyMatrix>,
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimodule(n={}, gens={:?})", self.strands, self.gens)
    }
}

impl Bimodule {
    /// Raw constructor; `actions` holds `A_1, ..., A_n`.
    pub fn new(strands: usize, gens: Vec<i32>, actions: Vec<PolyMatrix>) -> Result<Self> {
        let m = Bimodule { strands, gens, actions };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn unchecked(strands: usize, gens: Vec<i32>, actions: Vec<PolyMatrix>) -> Self {
        let m = Bimodule { strands, gens, actions };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    pub fn ring(&self) -> Ring {
        Ring::left(self.strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[i32] {
        &self.gens
    }

    /// Right action matrix of `x_k`, 1-based.
    pub fn action(&self, k: usize) -> &PolyMatrix {
        &self.actions[k - 1]
    }

    pub fn actions(&self) -> &[PolyMatrix] {
        &self.actions
    }

    /// Right actions of the free variables `x_1, ..., x_{n-1}`.
    pub fn free_actions(&self) -> &[PolyMatrix] {
        &self.actions[..self.strands - 1]
    }

    pub fn shifted(&self, a: i32) -> Bimodule {
        Bimodule {
            strands: self.strands,
            gens: self.gens.iter().map(|g| g + a).collect(),
            actions: self.actions.clone(),
        }
    }

    pub fn zero(strands: usize) -> Bimodule {
        let ring = Ring::left(strands);
        Bimodule { strands, gens: Vec::new(), actions: vec![PolyMatrix::zeros(ring, 0, 0); strands] }
    }

    /// Commutation, the quotient relation and homogeneity of the right action.
    pub fn validate(&self) -> Result<()> {
        let n = self.strands;
        let r = self.rank();
        let ring = self.ring();
        if self.actions.len() != n {
            return Err(Error::Invariant(format!("expected {n} action matrices")));
        }
        for (k, a) in self.actions.iter().enumerate() {
            if a.rows() != r || a.cols() != r {
                return Err(Error::Invariant(format!("action {} has wrong shape", k + 1)));
            }
            for i in 0..r {
                for j in 0..r {
                    let d = 2 + self.gens[j] - self.gens[i];
                    if !a.get(i, j).is_homogeneous_of(d) {
                        return Err(Error::Invariant(format!(
                            "action x_{} entry ({i},{j}) = {} is not of degree {d}",
                            k + 1,
                            a.get(i, j)
                        )));
                    }
                }
            }
        }
        for k in 0..n {
            for l in k + 1..n {
                if self.actions[k].mul(&self.actions[l]) != self.actions[l].mul(&self.actions[k]) {
                    return Err(Error::Invariant(format!("actions x_{} and x_{} do not commute", k + 1, l + 1)));
                }
            }
        }
        let sum = self.actions.iter().fold(PolyMatrix::zeros(ring, r, r), |acc, a| acc.add(a));
        if !sum.is_zero() {
            return Err(Error::Invariant("right actions do not sum to zero".into()));
        }
        Ok(())
    }

    /// Right action of a left polynomial `p` as a matrix.
    pub fn right_action_of(&self, p: &Poly) -> PolyMatrix {
        MatrixEvaluator::new(self.ring(), self.rank(), self.free_actions()).eval(p)
    }

    /// Direct sum with block-diagonal right actions.
    pub fn direct_sum(strands: usize, parts: &[&Bimodule]) -> Bimodule {
        let ring = Ring::left(strands);
        let gens: Vec<i32> = parts.iter().flat_map(|p| p.gens.iter().copied()).collect();
        let r = gens.len();
        let mut actions = vec![PolyMatrix::zeros(ring, r, r); strands];
        let mut off = 0;
        for p in parts {
            assert_eq!(p.strands, strands);
            for (k, a) in p.actions.iter().enumerate() {
                actions[k].place(off, off, a);
            }
            off += p.rank();
        }
        Bimodule { strands, gens, actions }
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if n < 2 || i < 1 || i > n - 1 {
        return Err(Error::IndexOutOfRange { index: i as i64, strands: n });
    }
    Ok(())
}

/// `S` as a bimodule over itself.
pub fn identity_bimodule(n: usize) -> Bimodule {
    assert!(n >= 1);
    let ring = Ring::left(n);
    let actions = (1..=n).map(|k| PolyMatrix::scalar(ring, 1, &Poly::x(ring, k))).collect();
    Bimodule::unchecked(n, vec![0], actions)
}

/// `S_i = S ⊗_{S^{s_i}} S {-1}` on the left basis `{1⊗1, 1⊗x_{i+1}}`.
pub fn bs_bimodule(n: usize, i: usize) -> Result<Bimodule> {
    check_index(n, i)?;
    let ring = Ring::left(n);
    let (xi, xj) = (Poly::x(ring, i), Poly::x(ring, i + 1));
    let e1 = &xi + &xj;
    let e2 = &xi * &xj;
    let a_next = PolyMatrix::from_rows(
        ring,
        vec![vec![Poly::zero(ring), -&e2], vec![Poly::one(ring), e1.clone()]],
    );
    let a_i = PolyMatrix::scalar(ring, 2, &e1).sub(&a_next);
    let actions = (1..=n)
        .map(|k| {
            if k == i {
                a_i.clone()
            } else if k == i + 1 {
                a_next.clone()
            } else {
                PolyMatrix::scalar(ring, 2, &Poly::x(ring, k))
            }
        })
        .collect();
    Ok(Bimodule::unchecked(n, vec![-1, 1], actions))
}

/// `S' = S̃ / (x_i⊗1 - 1⊗x_i)^2 (x_i⊗1 - 1⊗x_{i+1})` on the left basis
/// `{1, ȳ, ȳ^2}` with `ȳ` the image of `y_i = 1⊗x_i`; generator degrees `0, 2, 4`.
pub fn s_prime_bimodule(n: usize, i: usize) -> Result<Bimodule> {
    check_index(n, i)?;
    let ring = Ring::left(n);
    let (xi, xj) = (Poly::x(ring, i), Poly::x(ring, i + 1));
    let z = Poly::zero(ring);
    let one = Poly::one(ring);
    // y^3 = (2x_i + x_{i+1}) y^2 - (x_i^2 + 2 x_i x_{i+1}) y + x_i^2 x_{i+1}
    let c2 = &xi.scale(&crate::algebra::q_int(2)) + &xj;
    let c1 = &xi.pow(2) + &(&xi * &xj).scale(&crate::algebra::q_int(2));
    let c0 = &xi.pow(2) * &xj;
    let a_i = PolyMatrix::from_rows(
        ring,
        vec![
            vec![z.clone(), z.clone(), c0],
            vec![one.clone(), z.clone(), -&c1],
            vec![z.clone(), one, c2],
        ],
    );
    let e1 = &xi + &xj;
    let a_next = PolyMatrix::scalar(ring, 3, &e1).sub(&a_i);
    let actions = (1..=n)
        .map(|k| {
            if k == i {
                a_i.clone()
            } else if k == i + 1 {
                a_next.clone()
            } else {
                PolyMatrix::scalar(ring, 3, &Poly::x(ring, k))
            }
        })
        .collect();
    Ok(Bimodule::unchecked(n, vec![0, 2, 4], actions))
}

/// Tensor product over `S`: basis `m_a ⊗ n_c` at index `a * rank(N) + c`.
pub fn tensor_over_s(m: &Bimodule, n: &Bimodule) -> Result<Bimodule> {
    if m.strands != n.strands {
        return Err(Error::Incompatible("tensor of bimodules on different strand counts".into()));
    }
    let ring = m.ring();
    let gens = m.gens.iter().flat_map(|g| n.gens.iter().map(move |h| g + h)).collect();
    let id_m = PolyMatrix::identity(ring, m.rank());
    let mut ev = MatrixEvaluator::new(ring, m.rank(), m.free_actions());
    let actions = n.actions.iter().map(|a| kron_subst(&mut ev, &id_m, a, n.rank())).collect();
    Ok(Bimodule { strands: m.strands, gens, actions })
}

/// Matrix of `f ⊗ g : M ⊗ N → M' ⊗ N'` given `f` (matrix `F`), `g` (matrix
/// `G`) and an evaluator for the right action of `M'`: block `(e, c)` is
/// `G[e][c](A^{M'}) · F`.
fn kron_subst(ev: &mut MatrixEvaluator<'_>, f: &PolyMatrix, g: &PolyMatrix, g_src_rank: usize) -> PolyMatrix {
    let ring = f.ring();
    let (rm2, rm) = (f.rows(), f.cols());
    let (rn2, rn) = (g.rows(), g_src_rank);
    let mut out = PolyMatrix::zeros(ring, rm2 * rn2, rm * rn);
    for e in 0..rn2 {
        for c in 0..rn {
            let p = g.get(e, c);
            if p.is_zero() {
                continue;
            }
            let block = ev.eval(p).mul(f);
            for fi in 0..rm2 {
                for a in 0..rm {
                    let v = block.get(fi, a);
                    if !v.is_zero() {
                        out.set(fi * rn2 + e, a * rn + c, v.clone());
                    }
                }
            }
        }
    }
    out
}

/// Left-linear map between bimodules commuting with the right action.
#[derive(Clone, PartialEq, Eq)]
pub struct BimoduleMap {
    pub source: Arc<Bimodule>,
    pub target: Arc<Bimodule>,
    pub degree: i32,
    pub matrix: PolyMatrix,
}

impl fmt::Debug for BimoduleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BimoduleMap(deg {}, {:?})", self.degree, self.matrix)
    }
}

impl BimoduleMap {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, degree: i32, matrix: PolyMatrix) -> Result<Self> {
        let f = BimoduleMap { source, target, degree, matrix };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn unchecked(source: Arc<Bimodule>, target: Arc<Bimodule>, degree: i32, matrix: PolyMatrix) -> Self {
        let f = BimoduleMap { source, target, degree, matrix };
        debug_assert!(f.validate().is_ok(), "{:?}", f.validate());
        f
    }

    pub fn zero(source: Arc<Bimodule>, target: Arc<Bimodule>, degree: i32) -> Self {
        let m = PolyMatrix::zeros(source.ring(), target.rank(), source.rank());
        BimoduleMap { source, target, degree, matrix: m }
    }

    pub fn identity(m: Arc<Bimodule>) -> Self {
        let mat = PolyMatrix::identity(m.ring(), m.rank());
        BimoduleMap { source: m.clone(), target: m, degree: 0, matrix: mat }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.matrix.rows() != t.rank() || self.matrix.cols() != s.rank() {
            return Err(Error::Incompatible("map matrix shape".into()));
        }
        for a in 0..t.rank() {
            for b in 0..s.rank() {
                let d = self.degree + s.gens[b] - t.gens[a];
                if !self.matrix.get(a, b).is_homogeneous_of(d) {
                    return Err(Error::Invariant(format!(
                        "map entry ({a},{b}) = {} is not of degree {d}",
                        self.matrix.get(a, b)
                    )));
                }
            }
        }
        for k in 1..=s.strands {
            if self.matrix.mul(s.action(k)) != t.action(k).mul(&self.matrix) {
                return Err(Error::Invariant(format!("map does not intertwine the right action of x_{k}")));
            }
        }
        Ok(())
    }

    /// The same matrix viewed between shifted modules `source{a} → target{b}`.
    pub fn with_shifts(&self, a: i32, b: i32) -> BimoduleMap {
        BimoduleMap {
            source: Arc::new(self.source.shifted(a)),
            target: Arc::new(self.target.shifted(b)),
            degree: self.degree - a + b,
            matrix: self.matrix.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BimoduleMap) -> Result<BimoduleMap> {
        if other.target.gens != self.source.gens || other.target.rank() != self.source.rank() {
            return Err(Error::Incompatible("composition of non-adjacent maps".into()));
        }
        Ok(BimoduleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            degree: self.degree + other.degree,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn scaled(&self, c: &crate::algebra::Q) -> BimoduleMap {
        BimoduleMap { matrix: self.matrix.scale(c), ..self.clone() }
    }

    pub fn add(&self, other: &BimoduleMap) -> Result<BimoduleMap> {
        if self.degree != other.degree || self.matrix.rows() != other.matrix.rows() || self.matrix.cols() != other.matrix.cols() {
            return Err(Error::Incompatible("sum of maps with different shapes".into()));
        }
        Ok(BimoduleMap { matrix: self.matrix.add(&other.matrix), ..self.clone() })
    }
}

/// `m_i : S_i → S`, `1⊗1 ↦ 1`, `1⊗x_{i+1} ↦ x_{i+1}`; internal degree `+1`.
pub fn mult_map(n: usize, i: usize) -> Result<BimoduleMap> {
    let src = Arc::new(bs_bimodule(n, i)?);
    let tgt = Arc::new(identity_bimodule(n));
    let ring = Ring::left(n);
    let m = PolyMatrix::from_rows(ring, vec![vec![Poly::one(ring), Poly::x(ring, i + 1)]]);
    BimoduleMap::new(src, tgt, 1, m)
}

/// `ι_i : S → S_i`, `1 ↦ x_i⊗1 - 1⊗x_{i+1}`; internal degree `+1`.
pub fn iota_map(n: usize, i: usize) -> Result<BimoduleMap> {
    let src = Arc::new(identity_bimodule(n));
    let tgt = Arc::new(bs_bimodule(n, i)?);
    let ring = Ring::left(n);
    let m = PolyMatrix::from_rows(ring, vec![vec![Poly::x(ring, i)], vec![-Poly::one(ring)]]);
    BimoduleMap::new(src, tgt, 1, m)
}

/// `f ⊗ g`, with `g`'s coefficients pushed through the right action of
/// `f`'s target.
pub fn map_tensor(f: &BimoduleMap, g: &BimoduleMap) -> Result<BimoduleMap> {
    if f.source.strands != g.source.strands {
        return Err(Error::Incompatible("tensor of maps on different strand counts".into()));
    }
    let src = Arc::new(tensor_over_s(&f.source, &g.source)?);
    let tgt = Arc::new(tensor_over_s(&f.target, &g.target)?);
    let mut ev = MatrixEvaluator::new(f.target.ring(), f.target.rank(), f.target.free_actions());
    let matrix = kron_subst(&mut ev, &f.matrix, &g.matrix, g.source.rank());
    Ok(BimoduleMap { source: src, target: tgt, degree: f.degree + g.degree, matrix })
}

/// The bimodules and maps realizing the wall-crossing extension class through
/// `S'`, each between unshifted modules:
///
/// ```text
///   bottom row:  S --a--> S' --b--> S_i        (a: 1 ↦ (ȳ-x_i)(ȳ-x_{i+1}), b: quotient)
///   top row:     S_i --c--> S' --e--> S        (c: 1⊗1 ↦ ȳ-x_i,            e: ȳ ↦ x_i)
/// ```
///
/// With the shifts `S{2} → S'{-2} → S_i{-1}` and `S_i{1} → S'{-2} → S{-2}`
/// all four maps have internal degree zero, and `c∘ι = a`, `e = m∘b`.
#[derive(Clone, Debug)]
pub struct AuxMaps {
    pub s_prime: Arc<Bimodule>,
    pub a: BimoduleMap,
    pub b: BimoduleMap,
    pub c: BimoduleMap,
    pub e: BimoduleMap,
}

pub fn aux_bimodules(n: usize, i: usize) -> Result<AuxMaps> {
    let ring = Ring::left(n);
    let sp = Arc::new(s_prime_bimodule(n, i)?);
    let s = Arc::new(identity_bimodule(n));
    let si = Arc::new(bs_bimodule(n, i)?);
    let (xi, xj) = (Poly::x(ring, i), Poly::x(ring, i + 1));
    let e1 = &xi + &xj;
    let e2 = &xi * &xj;
    let one = Poly::one(ring);
    let z = Poly::zero(ring);
    let a = PolyMatrix::from_rows(ring, vec![vec![e2.clone()], vec![-&e1], vec![one.clone()]]);
    let b = PolyMatrix::from_rows(
        ring,
        vec![
            vec![one.clone(), e1.clone(), &e1.pow(2) - &e2],
            vec![z.clone(), -one.clone(), -&e1],
        ],
    );
    let c = PolyMatrix::from_rows(
        ring,
        vec![
            vec![-&xi, -(&e1 * &xi)],
            vec![one.clone(), &e1 + &xi],
            vec![z, -one.clone()],
        ],
    );
    let e = PolyMatrix::from_rows(ring, vec![vec![one, xi.clone(), xi.pow(2)]]);
    Ok(AuxMaps {
        a: BimoduleMap::new(s.clone(), sp.clone(), 4, a)?,
        b: BimoduleMap::new(sp.clone(), si.clone(), -1, b)?,
        c: BimoduleMap::new(si, sp.clone(), 3, c)?,
        e: BimoduleMap::new(sp.clone(), s, 0, e)?,
        s_prime: sp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_int;

    #[test]
    fn identity_examples() {
        let r1 = Ring::left(1);
        assert_eq!(identity_bimodule(1).action(1).get(0, 0), &Poly::zero(r1));
        let r2 = Ring::left(2);
        let s2 = identity_bimodule(2);
        assert_eq!(s2.action(1).get(0, 0), &Poly::x(r2, 1));
        assert_eq!(s2.action(2).get(0, 0), &-Poly::x(r2, 1));
        let r3 = Ring::left(3);
        let s3 = identity_bimodule(3);
        assert_eq!(s3.action(3).get(0, 0), &(-Poly::x(r3, 1) - Poly::x(r3, 2)));
        for m in [identity_bimodule(1), s2, s3] {
            m.validate().unwrap();
        }
    }

    #[test]
    fn bs_two_strands() {
        let r = Ring::left(2);
        let b = bs_bimodule(2, 1).unwrap();
        let x1 = Poly::x(r, 1);
        let expect = PolyMatrix::from_rows(
            r,
            vec![vec![Poly::zero(r), x1.pow(2)], vec![Poly::one(r), Poly::zero(r)]],
        );
        assert_eq!(b.action(2), &expect);
        b.validate().unwrap();
        // symmetric polynomials act the same on both sides
        let e2 = &x1 * &Poly::x(r, 2);
        assert_eq!(b.right_action_of(&e2), PolyMatrix::scalar(r, 2, &e2));
    }

    #[test]
    fn bs_symmetric_balancing() {
        for n in 2..=4 {
            for i in 1..n {
                let r = Ring::left(n);
                let b = bs_bimodule(n, i).unwrap();
                b.validate().unwrap();
                let e1 = Poly::x(r, i) + Poly::x(r, i + 1);
                let e2 = &Poly::x(r, i) * &Poly::x(r, i + 1);
                assert_eq!(b.action(i).add(b.action(i + 1)), PolyMatrix::scalar(r, 2, &e1));
                assert_eq!(b.action(i).mul(b.action(i + 1)), PolyMatrix::scalar(r, 2, &e2));
            }
        }
        assert!(bs_bimodule(3, 3).is_err());
        assert!(bs_bimodule(3, 0).is_err());
    }

    #[test]
    fn mult_and_iota() {
        let n = 3;
        let r = Ring::left(n);
        let m = mult_map(n, 1).unwrap();
        let i = iota_map(n, 1).unwrap();
        assert_eq!(m.matrix.get(0, 0), &Poly::one(r));
        assert_eq!(m.matrix.get(0, 1), &Poly::x(r, 2));
        assert_eq!(i.matrix.get(0, 0), &Poly::x(r, 1));
        assert_eq!(i.matrix.get(1, 0), &-Poly::one(r));
        let mi = m.compose(&i).unwrap();
        assert_eq!(mi.matrix.get(0, 0), &(Poly::x(r, 1) - Poly::x(r, 2)));
        assert_eq!(mi.degree, 2);
        // the differential shifts
        assert_eq!(i.with_shifts(2, 1).degree, 0);
        assert_eq!(m.with_shifts(-1, -2).degree, 0);
    }

    #[test]
    fn s_prime_structure() {
        for (n, i) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let aux = aux_bimodules(n, i).unwrap();
            aux.s_prime.validate().unwrap();
            assert_eq!(aux.s_prime.rank(), 3);
            let r = Ring::left(n);
            // (y - x_i)^2 (y - x_{i+1}) acts as zero
            let y = aux.s_prime.action(i).clone();
            let xi = PolyMatrix::scalar(r, 3, &Poly::x(r, i));
            let xj = PolyMatrix::scalar(r, 3, &Poly::x(r, i + 1));
            let t = y.sub(&xi);
            assert!(t.mul(&t).mul(&y.sub(&xj)).is_zero());
            // both squares of the extension diagram commute
            let iota = iota_map(n, i).unwrap();
            let m = mult_map(n, i).unwrap();
            assert_eq!(aux.c.compose(&iota).unwrap().matrix, aux.a.matrix);
            assert_eq!(m.compose(&aux.b).unwrap().matrix, aux.e.matrix);
            // rows are complexes
            assert!(aux.b.compose(&aux.a).unwrap().is_zero());
            assert!(aux.e.compose(&aux.c).unwrap().is_zero());
            // shifted degrees
            assert_eq!(aux.a.with_shifts(2, -2).degree, 0);
            assert_eq!(aux.b.with_shifts(-2, -1).degree, 0);
            assert_eq!(aux.c.with_shifts(1, -2).degree, 0);
            assert_eq!(aux.e.with_shifts(-2, -2).degree, 0);
        }
    }

    #[test]
    fn tensor_units() {
        let s = identity_bimodule(3);
        let b = bs_bimodule(3, 2).unwrap();
        assert_eq!(tensor_over_s(&s, &b).unwrap(), b);
        assert_eq!(tensor_over_s(&b, &s).unwrap(), b);
    }

    #[test]
    fn bs_squared() {
        let b = bs_bimodule(2, 1).unwrap();
        let bb = tensor_over_s(&b, &b).unwrap();
        assert_eq!(bb.rank(), 4);
        bb.validate().unwrap();
        let mut g = bb.gens().to_vec();
        g.sort();
        // S_1 ⊗ S_1 ≅ S_1{-1} ⊕ S_1{1}
        assert_eq!(g, vec![-2, 0, 0, 2]);
    }

    #[test]
    fn tensor_associative_up_to_reindexing() {
        let a = bs_bimodule(3, 1).unwrap();
        let b = bs_bimodule(3, 2).unwrap();
        let c = s_prime_bimodule(3, 1).unwrap();
        let l = tensor_over_s(&tensor_over_s(&a, &b).unwrap(), &c).unwrap();
        let r = tensor_over_s(&a, &tensor_over_s(&b, &c).unwrap()).unwrap();
        // both use the index (i*rb + j)*rc + k = i*(rb*rc) + j*rc + k
        assert_eq!(l, r);
        l.validate().unwrap();
    }

    #[test]
    fn map_tensor_identities() {
        let n = 3;
        let b = Arc::new(bs_bimodule(n, 1).unwrap());
        let s = Arc::new(identity_bimodule(n));
        let id = map_tensor(&BimoduleMap::identity(b.clone()), &BimoduleMap::identity(b.clone())).unwrap();
        assert_eq!(id.matrix, PolyMatrix::identity(Ring::left(n), 4));
        let m = mult_map(n, 1).unwrap();
        let ms = map_tensor(&m, &BimoduleMap::identity(s)).unwrap();
        assert_eq!(ms.matrix, m.matrix);
        ms.validate().unwrap();
    }

    #[test]
    fn interchange_law() {
        let n = 3;
        let f = iota_map(n, 1).unwrap();
        let g = mult_map(n, 2).unwrap().scaled(&q_int(3));
        let f_id = map_tensor(&f, &BimoduleMap::identity(g.source.clone())).unwrap();
        let id_g = map_tensor(&BimoduleMap::identity(f.target.clone()), &g).unwrap();
        let id_g2 = map_tensor(&BimoduleMap::identity(f.source.clone()), &g).unwrap();
        let f_id2 = map_tensor(&f, &BimoduleMap::identity(g.target.clone())).unwrap();
        let fg = map_tensor(&f, &g).unwrap();
        fg.validate().unwrap();
        assert_eq!(id_g.compose(&f_id).unwrap().matrix, fg.matrix);
        assert_eq!(f_id2.compose(&id_g2).unwrap().matrix, fg.matrix);
    }
}
