//! Cube of resolutions of a singular braid word. Vertex `ε` carries the
//! induced complex of its resolution at homological degree `T = k - 2c`
//! (`c` = number of negative resolutions), edges carry signed
//! wall-crossing maps, and the table is the homology of the total complex.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{map_at, same, ExtensionRealization, LevelMap, TensoredExtension, WallCrossing};
use crate::algebra::Q;
use crate::braid::{LetterKind, SingularBraidWord, SingularLetter};
use crate::complexes::rouquier;
use crate::error::{Error, Result};
use crate::homology::{scan_degrees, sl_strands, DegreeWindow, Functor, FunctorComplex, Grading, Key, LevelComplex, TriGradedSpace};
use crate::linalg::{from_map, SparseMatrix};

#[derive(Clone, Debug, Default)]
pub struct CubeOptions {
    pub window: DegreeWindow,
    /// Order in which the singular letters enter the sign convention.
    pub order: Option<Vec<usize>>,
    /// Extension scale per singular letter (default 1).
    pub scales: BTreeMap<usize, Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VkrResult {
    /// Word actually resolved (stabilized for degenerate sl(N) potentials).
    pub word: String,
    pub table: TriGradedSpace,
    pub vertices: usize,
    pub edges: usize,
    pub faces_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCheck {
    pub stabilized: bool,
    pub total_dim: usize,
    pub last_degree: i32,
}

struct Vertex {
    mask: usize,
    c: usize,
    alpha: i32,
    fc: FunctorComplex,
}

struct Edge {
    src: usize,
    tgt: usize,
    dir: usize,
    wc: WallCrossing,
}

fn presentation(word: &SingularBraidWord, functor: Functor) -> Result<SingularBraidWord> {
    let Functor::Sl(big_n) = functor else {
        return Ok(word.clone());
    };
    let n = sl_strands(word.strands(), big_n);
    let mut letters = word.letters().to_vec();
    letters.extend((word.strands()..n).map(|index| SingularLetter { index, kind: LetterKind::Positive }));
    SingularBraidWord::new(n, letters)
}

fn checked_order(order: &Option<Vec<usize>>, k: usize) -> Result<Vec<usize>> {
    let o = order.clone().unwrap_or_else(|| (0..k).collect());
    let mut sorted = o.clone();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return Err(Error::Incompatible(format!("order {o:?} is not a permutation of 0..{k}")));
    }
    Ok(o)
}

struct Cube {
    functor: Functor,
    m: i32,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    /// `rank[t]` = position of direction `t` in the chosen order.
    rank: Vec<usize>,
}

struct Piece {
    rows: Vec<(i32, i32, i32, usize)>,
    faces: usize,
}

fn sign(neg: bool) -> Q {
    if neg {
        -Q::one()
    } else {
        Q::one()
    }
}

impl Cube {
    fn build(word: &SingularBraidWord, functor: Functor, options: &CubeOptions) -> Result<Self> {
        let k = word.singular_count();
        let n = word.strands();
        let positions = word.singular_positions();
        let order = checked_order(&options.order, k)?;
        let mut rank = vec![0; k];
        for (r, &t) in order.iter().enumerate() {
            rank[t] = r;
        }
        let resolve = |mask: usize| word.resolve(&(0..k).map(|t| mask & (1 << t) == 0).collect::<Vec<_>>());
        let mut complexes = Vec::new();
        let mut vertices = Vec::new();
        for mask in 0..1usize << k {
            let w = resolve(mask);
            let c = rouquier(&w)?;
            vertices.push(Vertex { mask, c: mask.count_ones() as usize, alpha: w.alpha_floor(), fc: FunctorComplex::new(&c, functor) });
            complexes.push(c);
        }
        let mut exts = Vec::new();
        for (t, &p) in positions.iter().enumerate() {
            let s = options.scales.get(&t).cloned().unwrap_or_else(Q::one);
            exts.push(ExtensionRealization::new(n, word.letters()[p].index)?.scaled(&s)?);
        }
        let mut edges = Vec::new();
        for src in 0..1usize << k {
            for dir in 0..k {
                if src & (1 << dir) == 0 {
                    continue;
                }
                let tgt = src & !(1 << dir);
                let te = TensoredExtension::new(resolve(src).letters(), positions[dir], &exts[dir])?;
                te.check_alignment(&complexes[src], &complexes[tgt])?;
                edges.push(Edge { src, tgt, dir, wc: WallCrossing::new(&te, functor)? });
            }
        }
        Ok(Cube { functor, m: n as i32 - 1, vertices, edges, rank })
    }

    fn vertex_key(&self, v: &Vertex, d: i32, sub: i32) -> Key {
        match self.functor {
            Functor::Homfly => (v.alpha - sub, d),
            Functor::Sl(n) => (d - (n as i32 + 1) * v.alpha, (sub - v.c as i32).rem_euclid(2)),
        }
    }

    fn subkeys(&self) -> Vec<i32> {
        match self.functor {
            Functor::Homfly => {
                let lo = self.vertices.iter().map(|v| v.alpha).min().unwrap_or(0) - self.m;
                let hi = self.vertices.iter().map(|v| v.alpha).max().unwrap_or(0);
                (lo..=hi).collect()
            }
            Functor::Sl(_) => vec![0, 1],
        }
    }

    fn scan_start(&self) -> Option<(i32, i32, u32)> {
        let mins = self.vertices.iter().filter_map(|v| v.fc.min_internal().map(|j| (v, j)));
        match self.functor {
            Functor::Homfly => mins.map(|(_, j)| j).min().map(|j| (j, 2, 1)),
            Functor::Sl(n) => {
                let s = n as i32 + 1;
                mins.map(|(v, j)| j - s * self.m + s * v.alpha).min().map(|j| (j, 1, 2))
            }
        }
    }

    fn settle(&self) -> i32 {
        let s = match self.functor {
            Functor::Homfly => 0,
            Functor::Sl(n) => n as i32 + 1,
        };
        self.vertices.iter().filter_map(|v| v.fc.settle_degree().map(|d| d + s * v.alpha)).max().unwrap_or(0)
    }

    /// `s(ε, t) = (-1)^{#{s before t in the order : ε_s = +}}`.
    fn edge_sign(&self, mask: usize, dir: usize) -> Q {
        let before = (0..self.rank.len()).filter(|&s| self.rank[s] < self.rank[dir] && mask & (1 << s) == 0).count();
        sign(before % 2 == 1)
    }

    fn piece(&self, d: i32, sub: i32) -> Result<Piece> {
        let levels: Vec<LevelComplex> = self
            .vertices
            .iter()
            .map(|v| self.vertex_key(v, d, sub))
            .zip(&self.vertices)
            .map(|(key, v)| {
                let l = v.fc.level(key)?;
                l.check_d_squared()?;
                Ok(l)
            })
            .collect::<Result<_>>()?;
        if levels.iter().all(|l| l.dims().iter().all(|&x| x == 0)) {
            return Ok(Piece { rows: Vec::new(), faces: 0 });
        }
        let mut ws: HashMap<(usize, usize), LevelMap> = HashMap::new();
        for e in &self.edges {
            ws.insert((e.src, e.dir), e.wc.map(&levels[e.src], &levels[e.tgt])?);
        }
        let faces = self.check_faces(&levels, &ws)?;
        Ok(Piece { rows: self.total_homology(d, sub, &levels, &ws)?, faces })
    }

    fn check_faces(&self, levels: &[LevelComplex], ws: &HashMap<(usize, usize), LevelMap>) -> Result<usize> {
        let k = self.rank.len();
        let mut count = 0;
        for mask in 0..1usize << k {
            for s in 0..k {
                for t in s + 1..k {
                    if mask & (1 << s) == 0 || mask & (1 << t) == 0 {
                        continue;
                    }
                    let (ms, mt, mst) = (mask & !(1 << s), mask & !(1 << t), mask & !(1 << s) & !(1 << t));
                    let (src, l) = (&levels[mask], &levels[mst]);
                    for deg in src.start..src.start + src.bases.len() as i32 {
                        let via_s = map_at(&ws[&(ms, t)], &levels[ms], l, deg - 1, -1).compose(&map_at(&ws[&(mask, s)], src, &levels[ms], deg, -1));
                        let via_t = map_at(&ws[&(mt, s)], &levels[mt], l, deg - 1, -1).compose(&map_at(&ws[&(mask, t)], src, &levels[mt], deg, -1));
                        if !same(&via_s, &via_t) {
                            return Err(Error::Invariant(format!("cube face ({s}, {t}) at vertex {mask} does not commute in degree {deg}")));
                        }
                    }
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    fn total_homology(
        &self,
        d: i32,
        sub: i32,
        levels: &[LevelComplex],
        ws: &HashMap<(usize, usize), LevelMap>,
    ) -> Result<Vec<(i32, i32, i32, usize)>> {
        // blocks[T] = (vertex, k, offset, dim)
        let mut blocks: BTreeMap<i32, Vec<(usize, i32, usize, usize)>> = BTreeMap::new();
        for (v, l) in self.vertices.iter().zip(levels) {
            for (t, b) in l.bases.iter().enumerate() {
                let k = l.start + t as i32;
                let tt = k - 2 * v.c as i32;
                let e = blocks.entry(tt).or_default();
                let off = e.last().map_or(0, |x| x.2 + x.3);
                e.push((v.mask, k, off, b.dim()));
            }
        }
        let dim = |tt: i32| blocks.get(&tt).and_then(|b| b.last()).map_or(0, |x| x.2 + x.3);
        let find = |tt: i32, mask: usize, k: i32| {
            blocks.get(&tt).and_then(|b| b.iter().find(|x| x.0 == mask && x.1 == k)).map(|x| x.2)
        };
        let mut diffs: BTreeMap<i32, SparseMatrix> = BTreeMap::new();
        for (&tt, bl) in &blocks {
            let mut cols: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); dim(tt)];
            let mut place = |m: &SparseMatrix, src_off: usize, tgt_off: usize, s: &Q| {
                for (j, col) in m.cols.iter().enumerate() {
                    for (i, c) in col {
                        let e = cols[src_off + j].entry(tgt_off + i).or_insert_with(Q::zero);
                        *e += c * s;
                    }
                }
            };
            for &(mask, k, off, dm) in bl {
                if dm == 0 {
                    continue;
                }
                let v = &self.vertices[mask];
                let l = &levels[mask];
                if let (Some(t), Some(to)) = (usize::try_from(k - l.start).ok(), find(tt + 1, mask, k + 1)) {
                    if let Some(m) = l.maps.get(t) {
                        place(m, off, to, &sign(v.c % 2 == 1));
                    }
                }
                for dir in 0..self.rank.len() {
                    if mask & (1 << dir) == 0 {
                        continue;
                    }
                    let tgt = mask & !(1 << dir);
                    if let Some(to) = find(tt + 1, tgt, k - 1) {
                        let m = map_at(&ws[&(mask, dir)], l, &levels[tgt], k, -1);
                        place(&m, off, to, &self.edge_sign(mask, dir));
                    }
                }
            }
            let cols = cols.into_iter().map(from_map).collect();
            diffs.insert(tt, SparseMatrix { rows: dim(tt + 1), cols });
        }
        for (&tt, dm) in &diffs {
            if let Some(next) = diffs.get(&(tt + 1)) {
                if !next.compose(dm).is_zero() {
                    return Err(Error::Invariant(format!("total differential squares to nonzero at T = {tt}")));
                }
            }
        }
        let ranks: BTreeMap<i32, usize> = diffs.iter().map(|(&t, m)| (t, m.rank())).collect();
        let mut rows = Vec::new();
        for &tt in blocks.keys() {
            let h = dim(tt) - ranks.get(&tt).copied().unwrap_or(0) - ranks.get(&(tt - 1)).copied().unwrap_or(0);
            if h > 0 {
                rows.push(match self.functor {
                    Functor::Homfly => (tt, sub, d, h),
                    Functor::Sl(_) => (tt, d, sub, h),
                });
            }
        }
        Ok(rows)
    }
}

/// Homology of the cube of resolutions of `word` for the given functor.
pub fn vassiliev_homology(word: &SingularBraidWord, functor: Functor, options: &CubeOptions) -> Result<VkrResult> {
    if let Functor::Sl(0) = functor {
        return Err(Error::Incompatible("N must be at least 1".into()));
    }
    let word = presentation(word, functor)?;
    let cube = Cube::build(&word, functor, options)?;
    let grading = match functor {
        Functor::Homfly => Grading::Homfly { offset: cube.vertices[0].alpha },
        Functor::Sl(n) => Grading::Sl { n },
    };
    let mut table = TriGradedSpace::new(grading);
    let mut faces = 0;
    if let Some((start, step, mult)) = cube.scan_start() {
        let window = options.window;
        let subs = cube.subkeys();
        let scan = scan_degrees(start, step, window.max_degree, mult * window.margin, cube.settle(), |d| {
            let mut rows = Vec::new();
            let mut f = 0;
            for &s in &subs {
                let p = cube.piece(d, s)?;
                rows.extend(p.rows);
                f += p.faces;
            }
            let empty = rows.is_empty();
            Ok(((rows, f), empty))
        })?;
        for (_, (rows, f)) in scan.results {
            faces += f;
            for (k, i, j, dim) in rows {
                table.add(k, i, j, dim);
            }
        }
        table.last_degree = scan.last;
        table.truncated = scan.truncated;
    }
    Ok(VkrResult {
        word: word.to_string(),
        table,
        vertices: cube.vertices.len(),
        edges: cube.edges.len(),
        faces_checked: faces,
    })
}

/// Whether the homology stabilizes inside the window, and its total size.
pub fn finite_dimensionality_check(word: &SingularBraidWord, functor: Functor, window: DegreeWindow) -> Result<FiniteCheck> {
    let r = vassiliev_homology(word, functor, &CubeOptions { window, ..Default::default() })?;
    Ok(FiniteCheck { stabilized: !r.table.truncated, total_dim: r.table.total_dim(), last_degree: r.table.last_degree })
}
