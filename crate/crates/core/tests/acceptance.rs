//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

use std::time::{Duration, Instant};

use vkr::algebra::{enumerate_graded_piece, q_int, PolyMatrix, Ring};
use vkr::braid::{BraidWord, SingularBraidWord};
use vkr::complexes::{cone, eliminate_left, gaussian_eliminate, rouquier, BComplex};
use vkr::conventions::{homfly_to_oracle, sl_expected};
use vkr::error::{Error, Result};
use vkr::homology::{
    hochschild_bimodule, homfly_homology, sln_homology, DegreeWindow, Functor, KoszulComplex, MatrixFactorization,
};
use vkr::linalg::{HomologyBasis, SparseMatrix};
use vkr::oracle::{homfly_oracle, vassiliev_oracle};
use vkr::soergel::identity_bimodule;
use vkr::wallcross::{finite_dimensionality_check, vassiliev_homology, wall_crossing_map, CubeOptions, ExtensionRealization};

fn bw(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap()
}

fn sw(s: &str) -> SingularBraidWord {
    SingularBraidWord::parse(s).unwrap()
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn unknot() -> Result<String> {
    let t = homfly_homology(&bw("1:"), DegreeWindow::default(), true)?;
    ensure(t.table() == vec![[0, 0, 0, 1]], || format!("table {:?}", t.table()))?;
    Ok("one generator at (0,0,0)".into())
}

fn homfly_check(word: &str) -> Result<String> {
    let b = bw(word);
    let t = homfly_homology(&b, DegreeWindow::new(24, 6)?, true)?;
    let chi = homfly_to_oracle(&t.euler());
    let o = homfly_oracle(&b);
    ensure(!t.truncated, || "did not stabilize".into())?;
    ensure(chi == o, || format!("euler {chi} vs oracle {o}"))?;
    Ok(format!("euler = {o}, dim {}", t.total_dim()))
}

fn sl2_trefoil() -> Result<String> {
    let b = bw("2: 1 1 1");
    let t = sln_homology(&b, 2, DegreeWindow::default(), true)?;
    let specialized = homfly_oracle(&b).specialize_a(2);
    let m = t.euler().monomial_ratio(&specialized).ok_or_else(|| fail(format!("{} is not a monomial times {specialized}", t.euler())))?;
    ensure(t.euler() == sl_expected(&b, 2)?, || "monomial differs from the recorded normalization".into())?;
    Ok(format!("euler = {} = {} q^{} * P(a=q^2)", t.euler(), m.0, m.2))
}

fn vassiliev_k1() -> Result<String> {
    let w = sw("2: 1! 1 1");
    let r = vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default())?;
    let chi = homfly_to_oracle(&r.table.euler());
    ensure(chi == vassiliev_oracle(&w), || format!("euler {chi} vs {}", vassiliev_oracle(&w)))?;
    let z = vassiliev_homology(&sw("2: 1!"), Functor::Homfly, &CubeOptions::default())?;
    ensure(z.table.euler().is_zero(), || format!("2: 1! has euler {}", z.table.euler()))?;
    Ok(format!("euler = {chi}; \"2: 1!\" euler 0 (dim {})", z.table.total_dim()))
}

fn orders() -> Result<String> {
    let w = sw("2: 1! 1! 1");
    let run = |order: Vec<usize>| -> Result<String> {
        let r = vassiliev_homology(&w, Functor::Homfly, &CubeOptions { order: Some(order), ..Default::default() })?;
        Ok(serde_json::to_string(&r.table.table()).unwrap())
    };
    let (a, b) = (run(vec![0, 1])?, run(vec![1, 0])?);
    ensure(a == b, || format!("{a} vs {b}"))?;
    Ok(format!("tables byte-identical: {a}"))
}

fn scale7() -> Result<String> {
    let w = sw("2: 1! 1! 1");
    let plain = vassiliev_homology(&w, Functor::Homfly, &CubeOptions::default())?;
    for t in 0..2 {
        let opts = CubeOptions { scales: [(t, q_int(7))].into_iter().collect(), ..Default::default() };
        let r = vassiliev_homology(&w, Functor::Homfly, &opts)?;
        ensure(r.table.table() == plain.table.table(), || format!("letter {t} rescaled changes the table"))?;
    }
    Ok(format!("{} generators unchanged", plain.table.total_dim()))
}

fn markov() -> Result<String> {
    let win = DegreeWindow::default();
    let base = homfly_homology(&bw("2: 1 1 1"), win, true)?.table();
    let conj = homfly_homology(&bw("2: -1 1 1 1 1"), win, true)?.table();
    let stab = homfly_homology(&bw("3: 1 1 1 2"), win, true)?.table();
    ensure(base == conj, || format!("conjugate {conj:?}"))?;
    ensure(base == stab, || format!("stabilized {stab:?}"))?;
    Ok("conjugate and stabilized tables identical (trivial monomial)".into())
}

fn d_squared() -> Result<()> {
    for s in ["2: 1 1 1", "3: 1 -2 1 -2", "3: 1 2 -1 2", "4: 1 -2 3"] {
        let c = rouquier(&bw(s))?;
        c.check_d_squared()?;
        gaussian_eliminate(&c).check_d_squared()?;
        ensure(eliminate_left(&c).is_d_squared_zero(), || format!("elimination of {s}"))?;
    }
    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        let e = ExtensionRealization::new(n, i)?;
        for (f, x, y) in [(&e.incl, &e.sub, &e.middle), (&e.proj, &e.middle, &e.quotient)] {
            let c: BComplex = cone(f, x, y)?;
            c.check_d_squared()?;
            gaussian_eliminate(&c).check_d_squared()?;
        }
    }
    Ok(())
}

fn ses_exactness() -> Result<()> {
    for (n, i) in [(2, 1), (3, 1), (3, 2)] {
        ExtensionRealization::new(n, i)?.check(12)?;
    }
    Ok(())
}

fn wall_crossing_and_faces() -> Result<usize> {
    for s in ["2: 1! 1 1", "3: 1! 2 1 2"] {
        let m = wall_crossing_map(&sw(s), Functor::Homfly, DegreeWindow::default(), &q_int(1))?;
        ensure(!m.maps.is_empty(), || format!("{s}: empty map"))?;
    }
    wall_crossing_map(&sw("2: 1! 1 1"), Functor::Sl(3), DegreeWindow::default(), &q_int(1))?;
    let r = vassiliev_homology(&sw("2: 1! 1! 1"), Functor::Homfly, &CubeOptions::default())?;
    ensure(r.faces_checked > 0, || "no faces checked".into())?;
    Ok(r.faces_checked)
}

fn potential_identity() -> Result<()> {
    for n in 1..=3 {
        for big_n in 1..=4 {
            MatrixFactorization::z(n, big_n).check_potential()?;
        }
    }
    Ok(())
}

/// Degree `j` part of `d_-` from exterior degree `p` to `p - 1`.
fn koszul_piece(k: &KoszulComplex, basis: &[u32], p: u32, j: i32) -> Result<(usize, usize, SparseMatrix)> {
    let ring = Ring::two_sided(k.strands);
    let layout = |p: u32| -> Result<Vec<(usize, vkr::algebra::GradedPiece, usize)>> {
        let mut out = Vec::new();
        let mut off = 0;
        for (idx, &mask) in basis.iter().enumerate() {
            if mask.count_ones() == p {
                let piece = enumerate_graded_piece(ring, j - 2 * p as i32)?;
                let d = piece.dim();
                out.push((idx, piece, off));
                off += d;
            }
        }
        Ok(out)
    };
    let src = layout(p)?;
    let src_dim = src.iter().map(|s| s.1.dim()).sum();
    if p == 0 {
        return Ok((src_dim, 0, SparseMatrix::zero(0, src_dim)));
    }
    let tgt = layout(p - 1)?;
    let tgt_dim = tgt.iter().map(|t| t.1.dim()).sum();
    let d: &PolyMatrix = &k.d_minus;
    let mut m = SparseMatrix::zero(tgt_dim, src_dim);
    for (c, piece, off) in &src {
        for (b, mono) in piece.basis.iter().enumerate() {
            let mut col = std::collections::BTreeMap::new();
            for (r, tp, toff) in &tgt {
                for (mm, coef) in d.get(*r, *c).mul_mono(mono).terms() {
                    let at = tp.index_of(mm).ok_or_else(|| fail("monomial outside the target piece"))?;
                    *col.entry(toff + at).or_insert_with(|| q_int(0)) += coef;
                }
            }
            m.cols[off + b] = vkr::linalg::from_map(col);
        }
    }
    Ok((src_dim, tgt_dim, m))
}

/// The Koszul complex over `S ⊗ S` has homology `S` in degree 0 and nothing else.
fn koszul_resolution() -> Result<()> {
    for n in 1..=3usize {
        let k = KoszulComplex::new(n);
        let m = (n - 1) as u32;
        let mut basis: Vec<u32> = (0..1u32 << m).collect();
        basis.sort_by_key(|x| (x.count_ones(), *x));
        for j in (0..=12).step_by(2) {
            let pieces: Vec<_> = (0..=m).map(|p| koszul_piece(&k, &basis, p, j)).collect::<Result<_>>()?;
            for p in 0..=m {
                let (dim, _, out) = &pieces[p as usize];
                let inc = if p == m { SparseMatrix::zero(*dim, 0) } else { pieces[p as usize + 1].2.clone() };
                ensure(out.compose(&inc).is_zero(), || format!("d^2 != 0 at n={n} p={p} j={j}"))?;
                let h = HomologyBasis::new(*dim, &inc, out).dim();
                let expect = if p == 0 { enumerate_graded_piece(Ring::left(n), j)?.dim() } else { 0 };
                ensure(h == expect, || format!("H_{p} at n={n} j={j}: {h}, expected {expect}"))?;
            }
        }
    }
    Ok(())
}

fn binomial(m: usize, p: usize) -> usize {
    (0..p).fold(1, |acc, t| acc * (m - t) / (t + 1))
}

/// `HH_p(S)_j = Λ^p(degree 2)^{⊕(n-1)} ⊗ S`, counted by stars and bars.
fn hochschild_brute_force() -> Result<()> {
    for n in 2..=3usize {
        let win = DegreeWindow::new(12, 2)?;
        let hh = hochschild_bimodule(&identity_bimodule(n), win)?;
        for p in 0..n {
            for j in (0..=12).step_by(2) {
                let s = enumerate_graded_piece(Ring::left(n), j - 2 * p as i32)?.dim();
                let expect = binomial(n - 1, p) * s;
                let got = hh.get(&(p as i32, j)).copied().unwrap_or(0);
                ensure(got == expect, || format!("HH_{p}(S)_{j} at n={n}: {got}, expected {expect}"))?;
            }
        }
    }
    Ok(())
}

fn invariants() -> Result<String> {
    d_squared()?;
    ses_exactness()?;
    let faces = wall_crossing_and_faces()?;
    potential_identity()?;
    koszul_resolution()?;
    hochschild_brute_force()?;
    Ok(format!("d^2, SES, W chain maps, {faces} faces, potential, Koszul, Hochschild"))
}

fn finite() -> Result<String> {
    let mut out = Vec::new();
    for s in ["2: 1! 1 1", "2: 1!"] {
        let f = finite_dimensionality_check(&sw(s), Functor::Homfly, DegreeWindow::default())?;
        ensure(f.stabilized, || format!("{s} did not stabilize by {}", f.last_degree))?;
        out.push(format!("{s}: dim {}", f.total_dim));
    }
    Ok(out.join(", "))
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<String>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "unknot", Duration::from_secs(1), unknot),
        (2, "trefoil HOMFLY", Duration::from_secs(30), || homfly_check("2: 1 1 1")),
        (3, "figure-eight HOMFLY", Duration::from_secs(600), || homfly_check("3: 1 -2 1 -2")),
        (4, "sl_2 trefoil", Duration::from_secs(120), sl2_trefoil),
        (5, "Vassiliev k=1", Duration::from_secs(120), vassiliev_k1),
        (6, "cone order independence", Duration::from_secs(300), orders),
        (7, "extension rescaled by 7", Duration::from_secs(300), scale7),
        (8, "Markov stability", Duration::from_secs(300), markov),
        (9, "invariant suite", Duration::from_secs(300), invariants),
        (10, "finite dimensionality", Duration::from_secs(300), finite),
    ];
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let t0 = Instant::now();
        let r = f();
        let dt = t0.elapsed();
        let verdict = match &r {
            Ok(msg) if dt <= limit => format!("PASS {msg}"),
            Ok(msg) => format!("FAIL over time limit {limit:?}: {msg}"),
            Err(e) => format!("FAIL {e}"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {n:>2} {name}: {verdict} [{:.2?}]", dt);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
