//! Degreewise linear algebra of `Λ(e_1..e_m) ⊗ M` for a bimodule `M`, with
//! the Koszul differential `d_-` (contraction against `φ_t = x_t - y_t`)
//! and, for sl(N), the factorization differential `d_+` (wedge with the
//! divided differences `ψ'_t` of the potential).

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::algebra::{enumerate_graded_piece, mono_mul, MatrixEvaluator, Mono, Poly, PolyMatrix, Q, Ring};
use crate::linalg::{from_map, SparseMatrix};
use crate::soergel::Bimodule;

/// Which homology functor is applied to each bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functor {
    /// Hochschild homology; keys are `(p, j)` with `p` the exterior degree.
    Homfly,
    /// sl(N) factorization; keys are `(g, parity of p)` with
    /// `g = internal - (N+1) p`.
    Sl(u32),
}

pub type Key = (i32, i32);

impl Functor {
    /// Key receiving the total differential out of `key`.
    pub fn next(self, key: Key) -> Key {
        match self {
            Functor::Homfly => (key.0 - 1, key.1),
            Functor::Sl(n) => (key.0 + n as i32 + 1, 1 - key.1),
        }
    }

    pub fn prev(self, key: Key) -> Key {
        match self {
            Functor::Homfly => (key.0 + 1, key.1),
            Functor::Sl(n) => (key.0 - n as i32 - 1, 1 - key.1),
        }
    }

    /// `(p, internal degree)` pieces making up the space at `key`.
    pub fn parts(self, key: Key, m: usize) -> Vec<(usize, i32)> {
        match self {
            Functor::Homfly => {
                if key.0 < 0 || key.0 as usize > m {
                    Vec::new()
                } else {
                    vec![(key.0 as usize, key.1)]
                }
            }
            Functor::Sl(n) => (0..=m)
                .filter(|p| (*p as i32 - key.1).rem_euclid(2) == 0)
                .map(|p| (p, key.0 + (n as i32 + 1) * p as i32))
                .collect(),
        }
    }
}

/// `Σ_{i=1}^n x_i^{N+1}` in canonical coordinates.
pub fn potential_polynomial(strands: usize, big_n: u32) -> Poly {
    let ring = Ring::left(strands);
    (1..=strands).fold(Poly::zero(ring), |acc, i| acc + Poly::x(ring, i).pow(big_n + 1))
}

fn poly_rem(mut a: Vec<i64>, b: &[i64]) -> Vec<i64> {
    // `b` is monic
    while a.len() >= b.len() {
        let c = *a.last().unwrap();
        let shift = a.len() - b.len();
        for (k, &bk) in b.iter().enumerate() {
            a[shift + k] -= c * bk;
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() + 1 - b.len()];
    while r.len() >= b.len() {
        let c = *r.last().unwrap();
        let shift = r.len() - b.len();
        q[shift] = c;
        for (k, &bk) in b.iter().enumerate() {
            r[shift + k] -= c * bk;
        }
        r.pop();
    }
    q
}

/// Coefficients of the `N`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic(big_n: usize) -> Vec<i64> {
    let mut p = vec![0; big_n + 1];
    p[0] = -1;
    p[big_n] = 1;
    for d in 1..big_n {
        if big_n % d == 0 {
            p = poly_div(&p, &cyclotomic(d));
        }
    }
    p
}

/// Whether some `n` (not necessarily distinct) `N`-th roots of unity sum to
/// zero: `Σ c_k t^k` with `Σ c_k = n` divisible by the cyclotomic polynomial.
pub fn roots_of_unity_vanish(n: usize, big_n: usize) -> bool {
    if n == 0 || big_n == 0 {
        return false;
    }
    let phi = cyclotomic(big_n);
    fn go(counts: &mut Vec<i64>, left: usize, k: usize, phi: &[i64]) -> bool {
        if k + 1 == counts.len() {
            counts[k] = left as i64;
            return poly_rem(counts.clone(), phi).is_empty();
        }
        for c in (0..=left).rev() {
            counts[k] = c as i64;
            if go(counts, left - c, k + 1, phi) {
                return true;
            }
        }
        counts[k] = 0;
        false
    }
    go(&mut vec![0; big_n], n, 0, &phi)
}

/// Two-sided `ψ'_t` with `Σ_t φ_t ψ'_t = W(x) - W(y)`.
pub fn psi_prime(strands: usize, big_n: u32) -> Vec<Poly> {
    let w = potential_polynomial(strands, big_n);
    (1..strands).map(|t| w.divided_difference(t)).collect()
}

/// Basis of one slice: `(exterior mask, generator, monomial)` triples.
#[derive(Clone, Debug, Default)]
pub struct Slice {
    pub elems: Vec<(u32, usize, Mono)>,
    index: HashMap<(u32, usize, Mono), usize>,
}

impl Slice {
    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, mask: u32, gen: usize, mono: &Mono) -> Option<usize> {
        self.index.get(&(mask, gen, mono.clone())).copied()
    }
}

fn sign_before(mask: u32, t: usize) -> bool {
    (mask & ((1u32 << t) - 1)).count_ones() % 2 == 1
}

/// `Λ ⊗ M` for one bimodule with its operators precomputed.
pub struct KoszulModule {
    functor: Functor,
    ring: Ring,
    m: usize,
    gens: Vec<i32>,
    minus_ops: Vec<PolyMatrix>,
    plus_ops: Vec<PolyMatrix>,
}

impl KoszulModule {
    pub fn new(module: &Bimodule, functor: Functor) -> Self {
        let n = module.strands();
        let ring = Ring::left(n);
        let m = n - 1;
        let r = module.rank();
        let minus_ops = (1..=m)
            .map(|t| PolyMatrix::scalar(ring, r, &Poly::x(ring, t)).sub(module.action(t)))
            .collect();
        let plus_ops = match functor {
            Functor::Homfly => Vec::new(),
            Functor::Sl(big_n) => {
                let mut ev = MatrixEvaluator::new(ring, r, module.free_actions());
                psi_prime(n, big_n).iter().map(|p| ev.eval_two_sided(p)).collect()
            }
        };
        KoszulModule { functor, ring, m, gens: module.gens().to_vec(), minus_ops, plus_ops }
    }

    pub fn functor(&self) -> Functor {
        self.functor
    }

    pub fn exterior_rank(&self) -> usize {
        self.m
    }

    pub fn min_gen(&self) -> Option<i32> {
        self.gens.iter().copied().min()
    }

    pub fn max_gen(&self) -> Option<i32> {
        self.gens.iter().copied().max()
    }

    pub fn slice(&self, key: Key) -> Slice {
        let mut s = Slice::default();
        for (p, internal) in self.functor.parts(key, self.m) {
            for mask in 0u32..(1 << self.m) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                for (b, &g) in self.gens.iter().enumerate() {
                    let d = internal - 2 * p as i32 - g;
                    if d < 0 || d % 2 != 0 {
                        continue;
                    }
                    let piece = enumerate_graded_piece(self.ring, d).expect("even degree");
                    for mono in piece.basis {
                        s.index.insert((mask, b, mono.clone()), s.elems.len());
                        s.elems.push((mask, b, mono));
                    }
                }
            }
        }
        s
    }

    /// Adds `sign · op[:, b] · mono` placed on exterior mask `mask` into `acc`.
    fn push(&self, op: &PolyMatrix, b: usize, mono: &Mono, mask: u32, neg: bool, tgt: &Slice, acc: &mut BTreeMap<usize, Q>) {
        for a in 0..op.rows() {
            for (m2, c) in op.get(a, b).terms() {
                let mm = mono_mul(m2, mono);
                let idx = tgt
                    .index_of(mask, a, &mm)
                    .unwrap_or_else(|| panic!("image outside target slice: mask {mask} gen {a} {mm:?}"));
                let e = acc.entry(idx).or_insert_with(Q::zero);
                if neg {
                    *e -= c;
                } else {
                    *e += c;
                }
            }
        }
    }

    /// Total differential from the slice at `key` to the slice at `next(key)`.
    pub fn diff(&self, src: &Slice, tgt: &Slice) -> SparseMatrix {
        let cols = src
            .elems
            .iter()
            .map(|(mask, b, mono)| {
                let mut acc = BTreeMap::new();
                for t in 0..self.m {
                    let bit = 1u32 << t;
                    let neg = sign_before(*mask, t);
                    if mask & bit != 0 {
                        self.push(&self.minus_ops[t], *b, mono, mask & !bit, neg, tgt, &mut acc);
                    } else if !self.plus_ops.is_empty() {
                        self.push(&self.plus_ops[t], *b, mono, mask | bit, neg, tgt, &mut acc);
                    }
                }
                from_map(acc)
            })
            .collect();
        SparseMatrix { rows: tgt.dim(), cols }
    }

    /// `id_Λ ⊗ F` for a degree-zero bimodule map with matrix `f` into the
    /// module whose slice is `tgt`.
    pub fn apply_map(&self, f: &PolyMatrix, src: &Slice, tgt: &Slice) -> SparseMatrix {
        let cols = src
            .elems
            .iter()
            .map(|(mask, b, mono)| {
                let mut acc = BTreeMap::new();
                self.push(f, *b, mono, *mask, false, tgt, &mut acc);
                from_map(acc)
            })
            .collect();
        SparseMatrix { rows: tgt.dim(), cols }
    }
}
