//! The extension `0 → F(σ_i) → E → F(σ_i^{-1})[1] → 0`, its connecting map
//! on homology and the cube of resolutions built from those maps.

mod cube;

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::algebra::{PolyMatrix, Q};
use crate::braid::{BraidWord, Letter, SingularBraidWord};
use crate::complexes::{rouquier, rouquier_positive, BComplex, ChainMap};
use crate::error::{Error, Result};
use crate::homology::{DegreeWindow, Functor, FunctorComplex, Key, KoszulModule, LevelComplex};
use crate::linalg::{ColumnSolver, SparseMatrix, SparseVec};
use crate::soergel::{aux_bimodules, mult_map, BimoduleMap};

pub use cube::{finite_dimensionality_check, vassiliev_homology, CubeOptions, FiniteCheck, VkrResult};

/// Local realization of the extension at one crossing `σ_i` on `n` strands.
#[derive(Clone, Debug)]
pub struct ExtensionRealization {
    pub strands: usize,
    pub index: usize,
    /// `F(σ_i)`.
    pub sub: BComplex,
    /// `S'{-2} --id--> S'{-2}` in degrees -1, 0.
    pub middle: BComplex,
    /// `F(σ_i^{-1})[1]`: `S_i{-1} --(-m)--> S{-2}` in degrees -1, 0.
    pub quotient: BComplex,
    pub incl: ChainMap,
    pub proj: ChainMap,
    pub scale: Q,
}

impl ExtensionRealization {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        let aux = aux_bimodules(n, i)?;
        let sub = rouquier_positive(n, i)?;
        let sp = Arc::new(aux.s_prime.shifted(-2));
        let middle = BComplex::new(n, -1, vec![sp.clone(), sp.clone()], vec![BimoduleMap::identity(sp)])?;
        let m = mult_map(n, i)?.with_shifts(-1, -2).scaled(&-Q::one());
        let quotient = BComplex::new(n, -1, vec![m.source.clone(), m.target.clone()], vec![m])?;
        let incl = ChainMap::new(0, BTreeMap::from([(-1, aux.a.with_shifts(2, -2)), (0, aux.c.with_shifts(1, -2))]));
        let proj = ChainMap::new(
            0,
            BTreeMap::from([(-1, aux.b.with_shifts(-2, -1).scaled(&-Q::one())), (0, aux.e.with_shifts(-2, -2))]),
        );
        incl.validate(&sub, &middle)?;
        proj.validate(&middle, &quotient)?;
        Ok(ExtensionRealization { strands: n, index: i, sub, middle, quotient, incl, proj, scale: Q::one() })
    }

    /// The extension class multiplied by `c ≠ 0`: the inclusion is divided
    /// by `c`, so the connecting map picks up a factor `c`.
    pub fn scaled(&self, c: &Q) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Incompatible("extension scale must be nonzero".into()));
        }
        Ok(ExtensionRealization { incl: self.incl.scaled(&c.recip()), scale: &self.scale * c, ..self.clone() })
    }

    /// Chain-map property of both maps and exactness of every term in
    /// internal degrees up to `j_max`.
    pub fn check(&self, j_max: i32) -> Result<()> {
        self.incl.validate(&self.sub, &self.middle)?;
        self.proj.validate(&self.middle, &self.quotient)?;
        for k in -1..=0 {
            let (a, e, b) = (self.sub.term(k), self.middle.term(k), self.quotient.term(k));
            let f = self.incl.component(&self.sub, &self.middle, k).matrix;
            let g = self.proj.component(&self.middle, &self.quotient, k).matrix;
            if !g.mul(&f).is_zero() {
                return Err(Error::Invariant(format!("proj ∘ incl ≠ 0 in degree {k}")));
            }
            let (ka, ke, kb) = (
                KoszulModule::new(&a, Functor::Homfly),
                KoszulModule::new(&e, Functor::Homfly),
                KoszulModule::new(&b, Functor::Homfly),
            );
            let lo = e.gens().iter().copied().min().unwrap_or(0).min(0);
            for j in (lo - lo.rem_euclid(2)..=j_max).step_by(2) {
                let (sa, se, sb) = (ka.slice((0, j)), ke.slice((0, j)), kb.slice((0, j)));
                let fi = ke.apply_map(&f, &sa, &se);
                let pr = ke.apply_map(&g, &se, &sb);
                if se.dim() != sa.dim() + sb.dim() || fi.rank() != sa.dim() || pr.rank() != sb.dim() {
                    return Err(Error::Invariant(format!("extension not exact in degree ({k}, {j})")));
                }
            }
        }
        Ok(())
    }
}

/// The extension tensored in place into a resolved braid word: `sub` is the
/// complex of the word with `σ_i` at `pos`, and `quotient` is the complex
/// of the word with `σ_i^{-1}` there, shifted by one.
pub struct TensoredExtension {
    pub pos: usize,
    pub sub: BComplex,
    pub middle: BComplex,
    pub quotient: BComplex,
    pub incl: ChainMap,
    pub proj: ChainMap,
}

impl TensoredExtension {
    pub fn new(letters: &[Letter], pos: usize, ext: &ExtensionRealization) -> Result<Self> {
        let n = ext.strands;
        if pos >= letters.len() || letters[pos].index != ext.index {
            return Err(Error::Incompatible(format!("no σ_{} at position {pos}", ext.index)));
        }
        let (mut a, mut e, mut b) = (ext.sub.clone(), ext.middle.clone(), ext.quotient.clone());
        let (mut incl, mut proj) = (ext.incl.clone(), ext.proj.clone());
        if pos > 0 {
            let l = rouquier(&BraidWord::new(n, letters[..pos].to_vec())?)?;
            let id = ChainMap::identity(&l);
            incl = id.tensor(&l, &l, &incl, &a, &e)?;
            proj = id.tensor(&l, &l, &proj, &e, &b)?;
            (a, e, b) = (l.tensor(&a)?, l.tensor(&e)?, l.tensor(&b)?);
        }
        for &letter in &letters[pos + 1..] {
            let f = crate::complexes::rouquier_letter(n, letter)?;
            let id = ChainMap::identity(&f);
            let ae = incl.tensor(&a, &e, &id, &f, &f)?;
            let eb = proj.tensor(&e, &b, &id, &f, &f)?;
            (incl, proj) = (ae, eb);
            (a, e, b) = (a.tensor(&f)?, e.tensor(&f)?, b.tensor(&f)?);
        }
        Ok(TensoredExtension { pos, sub: a, middle: e, quotient: b, incl, proj })
    }

    /// `sub` must be the positive resolution and `quotient` the negative one
    /// shifted down by one, generator for generator.
    pub fn check_alignment(&self, minus: &BComplex, plus: &BComplex) -> Result<()> {
        for k in self.middle.degrees() {
            let ok = self.sub.term(k).gens() == plus.term(k).gens()
                && self.quotient.term(k).gens() == minus.term(k + 1).gens()
                && self.sub.term(k).actions() == plus.term(k).actions();
            if !ok {
                return Err(Error::Invariant(format!("tensored extension differs from the resolutions in degree {k}")));
            }
        }
        Ok(())
    }

    /// Sign of each generator of `quotient^k` under the identification with
    /// the negatively resolved complex in degree `k+1`: the parity of the
    /// factor degrees before the crossing.
    pub fn theta_signs(&self, k: i32) -> Vec<bool> {
        self.quotient
            .labels(k)
            .iter()
            .map(|l| l[..self.pos].iter().sum::<i32>().rem_euclid(2) == 1)
            .collect()
    }
}

/// Connecting map of one tensored extension, ready to be evaluated at keys.
pub struct WallCrossing {
    functor: Functor,
    start: i32,
    middle: FunctorComplex,
    incl: Vec<PolyMatrix>,
    proj: Vec<PolyMatrix>,
    theta: Vec<Vec<bool>>,
}

/// A map of induced complexes, one matrix per source degree.
pub type LevelMap = BTreeMap<i32, SparseMatrix>;

fn level_dim(l: &LevelComplex, k: i32) -> usize {
    usize::try_from(k - l.start).ok().and_then(|t| l.bases.get(t)).map_or(0, |b| b.dim())
}

fn level_diff(l: &LevelComplex, k: i32) -> SparseMatrix {
    usize::try_from(k - l.start)
        .ok()
        .and_then(|t| l.maps.get(t).cloned())
        .unwrap_or_else(|| SparseMatrix::zero(level_dim(l, k + 1), level_dim(l, k)))
}

/// The matrix of `f` at source degree `k`, zero when absent.
pub fn map_at(f: &LevelMap, src: &LevelComplex, tgt: &LevelComplex, k: i32, offset: i32) -> SparseMatrix {
    f.get(&k).cloned().unwrap_or_else(|| SparseMatrix::zero(level_dim(tgt, k + offset), level_dim(src, k)))
}

pub(crate) fn same(a: &SparseMatrix, b: &SparseMatrix) -> bool {
    a.rows == b.rows && a.ncols() == b.ncols() && a.add(&b.scale(&-Q::one())).is_zero()
}

/// `d ∘ f = f ∘ d` for a map lowering the homological degree by one.
pub fn check_chain_map(f: &LevelMap, src: &LevelComplex, tgt: &LevelComplex) -> Result<()> {
    let lo = src.start.min(tgt.start + 1) - 1;
    let hi = (src.start + src.bases.len() as i32).max(tgt.start + tgt.bases.len() as i32 + 1) + 1;
    for k in lo..hi {
        let lhs = level_diff(tgt, k - 1).compose(&map_at(f, src, tgt, k, -1));
        let rhs = map_at(f, src, tgt, k + 1, -1).compose(&level_diff(src, k));
        if !same(&lhs, &rhs) {
            return Err(Error::NotAChainMap(format!("wall-crossing map at degree {k}, key {:?}", src.key)));
        }
    }
    Ok(())
}

impl WallCrossing {
    pub fn new(t: &TensoredExtension, functor: Functor) -> Result<Self> {
        if t.sub.start() != t.middle.start() || t.quotient.start() != t.middle.start() {
            return Err(Error::Invariant("tensored extension terms are misaligned".into()));
        }
        let degrees: Vec<i32> = t.middle.degrees().collect();
        let incl = degrees.iter().map(|&k| t.incl.component(&t.sub, &t.middle, k).matrix).collect();
        let proj = degrees.iter().map(|&k| t.proj.component(&t.middle, &t.quotient, k).matrix).collect();
        let theta = degrees.iter().map(|&k| t.theta_signs(k)).collect();
        Ok(WallCrossing { functor, start: t.middle.start(), middle: FunctorComplex::new(&t.middle, functor), incl, proj, theta })
    }

    /// `W : H(C_-)_key → H(C_+)_{next(key)}` lowering `k` by one. `src` is
    /// the negatively resolved complex at `key`, `tgt` the positively
    /// resolved one at `next(key)`. Snake lemma through the middle term,
    /// then `(-1)^k` on source degree `k` to make it commute with `d`.
    pub fn map(&self, src: &LevelComplex, tgt: &LevelComplex) -> Result<LevelMap> {
        let key = src.key;
        let next = self.functor.next(key);
        if tgt.key != next {
            return Err(Error::Incompatible(format!("target key {:?} is not next({key:?})", tgt.key)));
        }
        let mut out = BTreeMap::new();
        for t in 0..self.middle.len() {
            let k = self.start + t as i32;
            let (ks, kt) = (k + 1, k);
            let (ds, dt) = (level_dim(src, ks), level_dim(tgt, kt));
            if ds == 0 || dt == 0 {
                continue;
            }
            let si = (ks - src.start) as usize;
            let ti = (kt - tgt.start) as usize;
            let module = self.middle.module(t);
            let (ek, en) = (module.slice(key), module.slice(next));
            let bslice = &src.slices[si];
            let aslice = &tgt.slices[ti];
            let lift = ColumnSolver::new(&module.apply_map(&self.proj[t], &ek, bslice));
            let back = ColumnSolver::new(&module.apply_map(&self.incl[t], aslice, &en));
            let d = module.diff(&ek, &en);
            let sign = if ks.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
            let mut cols = Vec::with_capacity(ds);
            for r in src.bases[si].reps() {
                let z: SparseVec = r
                    .iter()
                    .map(|(idx, c)| {
                        let g = bslice.elems[*idx].1;
                        (*idx, if self.theta[t][g] { -c } else { c.clone() })
                    })
                    .collect();
                let x = lift.solve(&z).ok_or_else(|| Error::Invariant("cycle does not lift through the extension".into()))?;
                let y = back
                    .solve(&d.apply(&x))
                    .ok_or_else(|| Error::Invariant("boundary of a lift is not in the subcomplex".into()))?;
                let col = tgt.bases[ti].project(&y)?;
                cols.push(col.into_iter().map(|(i, c)| (i, c * &sign)).collect());
            }
            out.insert(ks, SparseMatrix { rows: dt, cols });
        }
        check_chain_map(&out, src, tgt)?;
        Ok(out)
    }
}

/// The wall-crossing map of a word with exactly one singular letter,
/// evaluated at every key where the negative resolution has homology.
pub struct WallCrossingMap {
    pub functor: Functor,
    pub maps: BTreeMap<Key, LevelMap>,
}

pub fn wall_crossing_map(word: &SingularBraidWord, functor: Functor, window: DegreeWindow, scale: &Q) -> Result<WallCrossingMap> {
    let pos = word.singular_positions();
    if pos.len() != 1 {
        return Err(Error::Incompatible(format!("expected one singular letter, found {}", pos.len())));
    }
    let n = word.strands();
    let (minus, plus) = (word.resolve(&[false]), word.resolve(&[true]));
    let ext = ExtensionRealization::new(n, word.letters()[pos[0]].index)?.scaled(scale)?;
    let te = TensoredExtension::new(minus.letters(), pos[0], &ext)?;
    let (cm, cp) = (rouquier(&minus)?, rouquier(&plus)?);
    te.check_alignment(&cm, &cp)?;
    let wc = WallCrossing::new(&te, functor)?;
    let (fm, fp) = (FunctorComplex::new(&cm, functor), FunctorComplex::new(&cp, functor));
    let mut maps = BTreeMap::new();
    let jmin = fm.min_internal().unwrap_or(0);
    let m = (n - 1) as i32;
    let keys: Vec<Key> = match functor {
        Functor::Homfly => (jmin..=window.max_degree).step_by(2).flat_map(|j| (0..=m).map(move |p| (p, j))).collect(),
        Functor::Sl(big_n) => (jmin - (big_n as i32 + 1) * m..=window.max_degree)
            .flat_map(|g| [(g, 0), (g, 1)])
            .collect(),
    };
    for key in keys {
        let src = fm.level(key)?;
        if src.dims().iter().all(|&d| d == 0) {
            continue;
        }
        let tgt = fp.level(functor.next(key))?;
        maps.insert(key, wc.map(&src, &tgt)?);
    }
    Ok(WallCrossingMap { functor, maps })
}
