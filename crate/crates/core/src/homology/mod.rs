//! HOMFLY and sl(N) homology of Rouquier complexes, computed one graded
//! piece at a time.

pub mod factorization;
pub mod koszul;
mod trigraded;

use std::collections::BTreeMap;

use crate::braid::BraidWord;
use crate::complexes::{gaussian_eliminate, rouquier, BComplex};
use crate::error::{Error, Result};
use crate::exec::par_map;
use crate::linalg::{HomologyBasis, SparseMatrix};
use crate::soergel::Bimodule;

pub use factorization::{KoszulComplex, MatrixFactorization};
pub use koszul::{Functor, Key, KoszulModule, Slice};
pub use trigraded::{Grading, TriGradedSpace};

/// Internal-degree window: scan upward until `margin` consecutive degree
/// steps carry no homology, or until `max_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeWindow {
    pub max_degree: i32,
    pub margin: u32,
}

impl Default for DegreeWindow {
    fn default() -> Self {
        DegreeWindow { max_degree: 24, margin: 6 }
    }
}

impl DegreeWindow {
    pub fn new(max_degree: i32, margin: u32) -> Result<Self> {
        if max_degree < 0 || max_degree % 2 != 0 {
            return Err(Error::OddDegree(max_degree));
        }
        Ok(DegreeWindow { max_degree, margin: margin.max(1) })
    }
}

/// `Λ ⊗ C^k` for every term of a complex, with the bimodule differentials.
pub struct FunctorComplex {
    functor: Functor,
    start: i32,
    modules: Vec<KoszulModule>,
    diffs: Vec<crate::algebra::PolyMatrix>,
}

/// One key of the functor applied termwise: chain-level slices, homology
/// bases and the induced maps `H(C^k) → H(C^{k+1})`.
pub struct LevelComplex {
    pub key: Key,
    pub start: i32,
    pub slices: Vec<Slice>,
    pub bases: Vec<HomologyBasis>,
    pub maps: Vec<SparseMatrix>,
}

impl LevelComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(HomologyBasis::dim).collect()
    }

    /// Homology of the induced complex, as `(k, dim)` with `dim > 0`.
    pub fn homology(&self) -> Vec<(i32, usize)> {
        let ranks: Vec<usize> = self.maps.iter().map(SparseMatrix::rank).collect();
        let mut out = Vec::new();
        for (t, b) in self.bases.iter().enumerate() {
            let out_rank = ranks.get(t).copied().unwrap_or(0);
            let in_rank = if t > 0 { ranks[t - 1] } else { 0 };
            let d = b.dim() - out_rank - in_rank;
            if d > 0 {
                out.push((self.start + t as i32, d));
            }
        }
        out
    }

    /// Checks that consecutive induced maps compose to zero.
    pub fn check_d_squared(&self) -> Result<()> {
        for w in self.maps.windows(2) {
            if !w[1].compose(&w[0]).is_zero() {
                return Err(Error::Invariant(format!("induced d^2 ≠ 0 at key {:?}", self.key)));
            }
        }
        Ok(())
    }
}

impl FunctorComplex {
    pub fn new(c: &BComplex, functor: Functor) -> Self {
        let terms: Vec<i32> = c.degrees().collect();
        let modules = par_map(terms.clone(), |k| KoszulModule::new(&c.term(k), functor));
        let diffs = terms.iter().take(terms.len().saturating_sub(1)).map(|&k| c.diff(k).matrix).collect();
        FunctorComplex { functor, start: c.start(), modules, diffs }
    }

    pub fn functor(&self) -> Functor {
        self.functor
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module(&self, t: usize) -> &KoszulModule {
        &self.modules[t]
    }

    pub fn diff_matrix(&self, t: usize) -> &crate::algebra::PolyMatrix {
        &self.diffs[t]
    }

    /// Lowest internal degree carried by any generator.
    pub fn min_internal(&self) -> Option<i32> {
        self.modules.iter().filter_map(KoszulModule::min_gen).min()
    }

    pub fn max_internal(&self) -> Option<i32> {
        self.modules.iter().filter_map(KoszulModule::max_gen).max()
    }

    /// Scan coordinate (`j` for HOMFLY, `g` for sl(N)) past which empty
    /// degrees start counting toward the margin. For sl(N) nothing survives
    /// past it: the Jacobian ring of the potential tops out in degree
    /// `2(N-1)m` above the highest generator.
    pub fn settle_degree(&self) -> Option<i32> {
        let m = self.modules.first()?.exterior_rank() as i32;
        let top = self.max_internal()?;
        Some(match self.functor {
            Functor::Homfly => top + 2 * m,
            Functor::Sl(n) => top + 2 * (n as i32 - 1) * m,
        })
    }

    /// Homology of `Λ ⊗ C^t` at `key`, with the slice it lives in.
    pub fn term_homology(&self, t: usize, key: Key) -> (Slice, HomologyBasis) {
        let m = &self.modules[t];
        let f = self.functor;
        let (sp, s, sn) = (m.slice(f.prev(key)), m.slice(key), m.slice(f.next(key)));
        let basis = HomologyBasis::new(s.dim(), &m.diff(&sp, &s), &m.diff(&s, &sn));
        (s, basis)
    }

    pub fn level(&self, key: Key) -> Result<LevelComplex> {
        let mut slices = Vec::new();
        let mut bases = Vec::new();
        for t in 0..self.modules.len() {
            let (s, b) = self.term_homology(t, key);
            slices.push(s);
            bases.push(b);
        }
        let mut maps = Vec::new();
        for t in 0..self.diffs.len() {
            let chain = self.modules[t].apply_map(&self.diffs[t], &slices[t], &slices[t + 1]);
            maps.push(bases[t].induced(&chain, &bases[t + 1])?);
        }
        Ok(LevelComplex { key, start: self.start, slices, bases, maps })
    }
}

/// Result of scanning a window: per-degree outputs in order, the last degree
/// examined and whether the margin was never met.
pub(crate) struct Scan<R> {
    pub results: Vec<(i32, R)>,
    pub last: i32,
    pub truncated: bool,
}

/// Evaluates `f` on `start, start + step, ...` in parallel chunks, stopping
/// after `margin` consecutive empty results at or above `settle`, or past
/// `max`. The outcome does not depend on the chunking.
pub(crate) fn scan_degrees<R, F>(start: i32, step: i32, max: i32, margin: u32, settle: i32, f: F) -> Result<Scan<R>>
where
    R: Send,
    F: Fn(i32) -> Result<(R, bool)> + Sync + Send,
{
    let chunk = margin.max(2) as i32;
    let mut results = Vec::new();
    let mut empty_run = 0u32;
    let mut d = start;
    let mut last = start;
    while d <= max {
        let batch: Vec<i32> = (0..chunk).map(|c| d + c * step).filter(|&x| x <= max).collect();
        d += chunk * step;
        for (deg, r) in batch.clone().into_iter().zip(par_map(batch, &f)) {
            let (val, empty) = r?;
            last = deg;
            results.push((deg, val));
            empty_run = if !empty { 0 } else if deg >= settle { empty_run + 1 } else { empty_run };
            if empty_run >= margin {
                return Ok(Scan { results, last, truncated: false });
            }
        }
    }
    Ok(Scan { results, last, truncated: true })
}

/// Homology of `functor` applied termwise to `c`, assembled into a table.
pub fn functor_homology(c: &BComplex, functor: Functor, alpha_floor: i32, window: DegreeWindow) -> Result<TriGradedSpace> {
    let m = c.strands() - 1;
    let fc = FunctorComplex::new(c, functor);
    let grading = match functor {
        Functor::Homfly => Grading::Homfly { offset: alpha_floor },
        Functor::Sl(n) => Grading::Sl { n },
    };
    let mut out = TriGradedSpace::new(grading);
    let Some(jmin) = fc.min_internal() else {
        return Ok(out);
    };
    let (start, step, margin) = match functor {
        Functor::Homfly => (jmin, 2, window.margin),
        Functor::Sl(n) => (jmin - (n as i32 + 1) * m as i32, 1, 2 * window.margin),
    };
    let settle = fc.settle_degree().unwrap_or(start);
    let scan = scan_degrees(start, step, window.max_degree, margin, settle, |d| {
        let mut rows = Vec::new();
        let subkeys: Vec<i32> = match functor {
            Functor::Homfly => (0..=m as i32).collect(),
            Functor::Sl(_) => vec![0, 1],
        };
        for s in subkeys {
            let key = match functor {
                Functor::Homfly => (s, d),
                Functor::Sl(_) => (d, s),
            };
            let level = fc.level(key)?;
            level.check_d_squared()?;
            for (k, dim) in level.homology() {
                rows.push(match functor {
                    Functor::Homfly => (k, alpha_floor - s, d, dim),
                    Functor::Sl(n) => (k, d + (n as i32 + 1) * alpha_floor, s, dim),
                });
            }
        }
        let empty = rows.is_empty();
        Ok((rows, empty))
    })?;
    for (_, rows) in scan.results {
        for (k, i, j, dim) in rows {
            out.add(k, i, j, dim);
        }
    }
    out.last_degree = scan.last;
    out.truncated = scan.truncated;
    Ok(out)
}

fn prepared(word: &BraidWord, simplify: bool) -> Result<BComplex> {
    if !word.is_knot() {
        log::warn!("closure of {word} has {} components; the window may truncate infinite homology", word.components());
    }
    let c = rouquier(word)?;
    Ok(if simplify { gaussian_eliminate(&c) } else { c })
}

/// Reduced triply graded homology of the closure of `word`.
pub fn homfly_homology(word: &BraidWord, window: DegreeWindow, simplify: bool) -> Result<TriGradedSpace> {
    let c = prepared(word, simplify)?;
    functor_homology(&c, Functor::Homfly, word.alpha_floor(), window)
}

/// The potential `Σ x_i^{N+1}` restricted to `Σ x_i = 0` has a critical
/// point away from the origin exactly when `n` of the `N`-th roots of unity
/// sum to zero (on two strands: `x_2 = -x_1`, so every even `N`). The
/// factorization then has infinite-dimensional homology and the answer is
/// wrong. Positive Markov stabilizations (same closure) move `n` until
/// the potential is nondegenerate.
pub fn sl_degenerate(strands: usize, big_n: u32) -> bool {
    koszul::roots_of_unity_vanish(strands, big_n as usize)
}

/// Strand count the sl(N) computation actually runs on.
pub fn sl_strands(strands: usize, big_n: u32) -> usize {
    let mut n = strands;
    while sl_degenerate(n, big_n) {
        n += 1;
    }
    n
}

pub fn sl_presentation(word: &BraidWord, big_n: u32) -> BraidWord {
    let n = sl_strands(word.strands(), big_n);
    let mut letters = word.letters().to_vec();
    letters.extend((word.strands()..n).map(crate::braid::Letter::pos));
    BraidWord::new(n, letters).expect("stabilized word")
}

/// sl(N) homology of the closure of `word`.
pub fn sln_homology(word: &BraidWord, big_n: u32, window: DegreeWindow, simplify: bool) -> Result<TriGradedSpace> {
    if big_n < 1 {
        return Err(Error::Incompatible("N must be at least 1".into()));
    }
    let word = &sl_presentation(word, big_n);
    let c = prepared(word, simplify)?;
    functor_homology(&c, Functor::Sl(big_n), word.alpha_floor(), window)
}

/// `dim HH_p(M)_j` for all `p` and even `j ≤ max_degree`.
pub fn hochschild_bimodule(module: &Bimodule, window: DegreeWindow) -> Result<BTreeMap<(i32, i32), usize>> {
    if window.max_degree % 2 != 0 {
        return Err(Error::OddDegree(window.max_degree));
    }
    let c = BComplex::single(module.clone(), 0);
    let fc = FunctorComplex::new(&c, Functor::Homfly);
    let mut out = BTreeMap::new();
    let Some(jmin) = fc.min_internal() else {
        return Ok(out);
    };
    let lo = jmin - jmin.rem_euclid(2);
    for j in (lo..=window.max_degree).step_by(2) {
        for p in 0..module.strands() as i32 {
            let d = fc.term_homology(0, (p, j)).1.dim();
            if d > 0 {
                out.insert((p, j), d);
            }
        }
    }
    Ok(out)
}
