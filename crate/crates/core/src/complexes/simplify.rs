//! Gaussian elimination of invertible scalar differential blocks.
//!
//! Two flavours: `gaussian_eliminate` keeps the bimodule structure and only
//! cancels blocks that are direct summands for the right action, while
//! `eliminate_left` cancels every invertible scalar entry and forgets the
//! right action (a homotopy equivalence of complexes of free left modules).

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};

use super::{BComplex, GradedEuler, Label};
use crate::algebra::{enumerate_graded_piece, PolyMatrix, Q, Ring};
use crate::soergel::{Bimodule, BimoduleMap};

struct Work {
    ring: Ring,
    start: i32,
    gens: Vec<Vec<i32>>,
    diffs: Vec<PolyMatrix>,
    actions: Option<Vec<Vec<PolyMatrix>>>,
    labels: Vec<Vec<Label>>,
}

fn complement(len: usize, drop: &[usize]) -> Vec<usize> {
    (0..len).filter(|i| !drop.contains(i)).collect()
}

fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &s;
            inv[col][j] = &inv[col][j] * &s;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

impl Work {
    fn len(&self) -> usize {
        self.gens.len()
    }

    /// Connected components of the right-action support graph of term `t`,
    /// ordered by smallest member.
    fn components(&self, t: usize) -> Vec<Vec<usize>> {
        let r = self.gens[t].len();
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        if let Some(acts) = &self.actions {
            for a in &acts[t] {
                for i in 0..r {
                    for j in 0..r {
                        if i != j && !a.get(i, j).is_zero() {
                            let (x, y) = (find(&mut parent, i), find(&mut parent, j));
                            if x != y {
                                parent[x.max(y)] = x.min(y);
                            }
                        }
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..r {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// First eligible pivot `(t, P, Q, Φ^{-1})` in lexicographic order.
    fn find_pivot(&self) -> Option<(usize, Vec<usize>, Vec<usize>, Vec<Vec<Q>>)> {
        for t in 0..self.diffs.len() {
            let d = &self.diffs[t];
            if self.actions.is_none() {
                for b in 0..d.cols() {
                    for c in 0..d.rows() {
                        if let Some(s) = d.get(c, b).as_scalar() {
                            if !s.is_zero() {
                                return Some((t, vec![b], vec![c], vec![vec![s.recip()]]));
                            }
                        }
                    }
                }
                continue;
            }
            let (src, tgt) = (self.components(t), self.components(t + 1));
            for p in &src {
                for q in &tgt {
                    if p.len() != q.len() {
                        continue;
                    }
                    let Some(block) = d.select(q, p).scalar_entries() else { continue };
                    if let Some(inv) = invert(&block) {
                        return Some((t, p.clone(), q.clone(), inv));
                    }
                }
            }
        }
        None
    }

    /// Cancels `P ⊂ C^t` against `Q ⊂ C^{t+1}` where `D[Q][P] = Φ` is invertible.
    fn eliminate(&mut self, t: usize, p: &[usize], q: &[usize], phi_inv: &[Vec<Q>]) {
        let d = &self.diffs[t];
        let r_keep = complement(d.cols(), p);
        let q_keep = complement(d.rows(), q);
        let x = PolyMatrix::from_scalars(self.ring, phi_inv, q.len()).mul(&d.select(q, &r_keep));
        let new_d = d.select(&q_keep, &r_keep).sub(&d.select(&q_keep, p).mul(&x));
        self.diffs[t] = new_d;
        if t > 0 {
            let prev = &self.diffs[t - 1];
            let all: Vec<usize> = (0..prev.cols()).collect();
            self.diffs[t - 1] = prev.select(&r_keep, &all);
        }
        if t + 1 < self.diffs.len() {
            let next = &self.diffs[t + 1];
            let all: Vec<usize> = (0..next.rows()).collect();
            self.diffs[t + 1] = next.select(&all, &q_keep);
        }
        for (term, keep) in [(t, &r_keep), (t + 1, &q_keep)] {
            self.gens[term] = keep.iter().map(|&i| self.gens[term][i]).collect();
            self.labels[term] = keep.iter().map(|&i| self.labels[term][i].clone()).collect();
            if let Some(acts) = &mut self.actions {
                acts[term] = acts[term].iter().map(|a| a.select(keep, keep)).collect();
            }
        }
    }

    fn run(&mut self) {
        while let Some((t, p, q, inv)) = self.find_pivot() {
            self.eliminate(t, &p, &q, &inv);
        }
    }

    fn from_complex(c: &BComplex, keep_actions: bool) -> Work {
        let ring = Ring::left(c.strands());
        let gens = c.degrees().map(|k| c.term(k).gens().to_vec()).collect();
        let diffs = (c.start()..c.end() - 1).map(|k| c.diff(k).matrix).collect();
        let actions = keep_actions.then(|| c.degrees().map(|k| c.term(k).actions().to_vec()).collect());
        let labels = c.degrees().map(|k| c.labels(k).to_vec()).collect();
        Work { ring, start: c.start(), gens, diffs, actions, labels }
    }
}

/// Block Gaussian elimination that stays inside the category of bimodules:
/// a pivot block must be a union of right-action components on both sides,
/// square, scalar and invertible. Pivots are taken in lexicographic order of
/// (homological degree, source component, target component).
pub fn gaussian_eliminate(c: &BComplex) -> BComplex {
    if c.is_zero() {
        return BComplex::zero(c.strands());
    }
    let mut w = Work::from_complex(c, true);
    w.run();
    let n = c.strands();
    let acts = w.actions.take().expect("bimodule elimination keeps actions");
    let terms: Vec<Arc<Bimodule>> = (0..w.len())
        .map(|t| Arc::new(Bimodule::unchecked(n, w.gens[t].clone(), acts[t].clone())))
        .collect();
    let diffs = w
        .diffs
        .iter()
        .enumerate()
        .map(|(t, m)| BimoduleMap::unchecked(terms[t].clone(), terms[t + 1].clone(), 0, m.clone()))
        .collect();
    let out = BComplex { strands: n, start: w.start, terms, diffs, labels: w.labels };
    debug_assert!(out.check_d_squared().is_ok());
    out.trimmed()
}

/// Complex of free graded left `S`-modules (no right action).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    pub strands: usize,
    pub start: i32,
    pub gens: Vec<Vec<i32>>,
    pub diffs: Vec<PolyMatrix>,
}

impl FreeComplex {
    pub fn from_bcomplex(c: &BComplex) -> FreeComplex {
        let w = Work::from_complex(c, false);
        FreeComplex { strands: c.strands(), start: w.start, gens: w.gens, diffs: w.diffs }
    }

    pub fn total_rank(&self) -> usize {
        self.gens.iter().map(Vec::len).sum()
    }

    pub fn is_d_squared_zero(&self) -> bool {
        self.diffs.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    /// Homological degree → generator degree → multiplicity.
    pub fn graded_ranks(&self) -> BTreeMap<i32, BTreeMap<i32, usize>> {
        let mut out = BTreeMap::new();
        for (t, g) in self.gens.iter().enumerate() {
            let mut m = BTreeMap::new();
            for &d in g {
                *m.entry(d).or_insert(0) += 1;
            }
            if !m.is_empty() {
                out.insert(self.start + t as i32, m);
            }
        }
        out
    }

    pub fn euler_characteristic(&self, j_max: i32) -> GradedEuler {
        let ring = Ring::left(self.strands);
        let mut out = GradedEuler::default();
        for (t, g) in self.gens.iter().enumerate() {
            let sign = if (self.start + t as i32).rem_euclid(2) == 0 { 1 } else { -1 };
            for &d in g {
                let mut j = d;
                while j <= j_max {
                    let dim = enumerate_graded_piece(ring, j - d).map(|p| p.dim()).unwrap_or(0);
                    if dim > 0 {
                        out.add_term(j, sign * dim as i64);
                    }
                    j += 2;
                }
            }
        }
        out
    }
}

/// Cancels every invertible scalar differential entry, pivoting on the first
/// such entry in (homological degree, column, row) order. Afterwards no
/// differential entry between same-degree generators is a nonzero scalar.
pub fn eliminate_left(c: &BComplex) -> FreeComplex {
    let mut w = Work::from_complex(c, false);
    w.run();
    FreeComplex { strands: c.strands(), start: w.start, gens: w.gens, diffs: w.diffs }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::algebra::q_int;
    use crate::braid::BraidWord;
    use crate::soergel::identity_bimodule;

    fn iso_complex() -> BComplex {
        let s = Arc::new(identity_bimodule(2));
        let d = BimoduleMap::identity(s.clone());
        BComplex::new(2, 0, vec![s.clone(), s], vec![d]).unwrap()
    }

    #[test]
    fn identity_differential_cancels() {
        assert!(gaussian_eliminate(&iso_complex()).is_zero());
        assert_eq!(eliminate_left(&iso_complex()).total_rank(), 0);
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let x = rouquier(&BraidWord::parse("2: 1 1").unwrap()).unwrap();
        let c = cone(&ChainMap::identity(&x), &x, &x).unwrap();
        assert!(gaussian_eliminate(&c).is_zero());
    }

    #[test]
    fn reidemeister_two() {
        let c = rouquier(&BraidWord::parse("2: 1 -1").unwrap()).unwrap();
        c.validate().unwrap();
        let f = eliminate_left(&c);
        assert!(f.is_d_squared_zero());
        let s = FreeComplex::from_bcomplex(&BComplex::single(identity_bimodule(2), 0));
        assert_eq!(f.graded_ranks(), s.graded_ranks());
        let g = gaussian_eliminate(&c);
        g.validate().unwrap();
        assert_eq!(euler_characteristic(&g, 14), euler_characteristic(&c, 14));
    }

    #[test]
    fn idempotent() {
        let c = rouquier(&BraidWord::parse("3: 1 -2 1").unwrap()).unwrap();
        let g = gaussian_eliminate(&c);
        let gg = gaussian_eliminate(&g);
        assert_eq!(graded_ranks(&g), graded_ranks(&gg));
        let f = eliminate_left(&c);
        let ff = eliminate_left(&BComplex::zero(3));
        assert_eq!(ff.total_rank(), 0);
        for d in &f.diffs {
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    assert!(d.get(i, j).as_scalar().is_none_or(|s| s.is_zero()));
                }
            }
        }
    }

    #[test]
    fn braid_relation_ranks() {
        let a = rouquier(&BraidWord::parse("3: 1 2 1").unwrap()).unwrap();
        let b = rouquier(&BraidWord::parse("3: 2 1 2").unwrap()).unwrap();
        let (fa, fb) = (eliminate_left(&a), eliminate_left(&b));
        assert_eq!(fa.graded_ranks(), fb.graded_ranks());
        assert_eq!(fa.euler_characteristic(12), fb.euler_characteristic(12));
    }

    #[test]
    fn scalar_inverse() {
        let m = vec![vec![q_int(2), q_int(1)], vec![q_int(1), q_int(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q_int(1), q_int(-1)], vec![q_int(-1), q_int(2)]]);
        assert!(invert(&[vec![q_int(1), q_int(2)], vec![q_int(2), q_int(4)]]).is_none());
    }
}
