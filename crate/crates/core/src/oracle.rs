//! HOMFLY polynomial of braid closures from the Hecke algebra and its
//! Ocneanu trace, independent of the homology code.
//!
//! Convention: `a·P(L+) - a^{-1}·P(L-) = z·P(L0)` with `z = q - q^{-1}` and
//! `P(unknot) = 1`.

use std::collections::{BTreeMap, HashMap};

use crate::braid::{BraidWord, SingularBraidWord};
use crate::error::{Error, Result};
use crate::laurent::Laurent2;

type Perm = Vec<u8>;

/// Element of the Hecke algebra `H_n` in the basis `T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, Laurent2>,
}

impl HeckeElement {
    pub fn identity(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0..n as u8).collect(), Laurent2::one());
        HeckeElement { n, terms }
    }

    fn add(&mut self, w: Perm, c: &Laurent2) {
        let e = self.terms.entry(w.clone()).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// Right multiplication by `T_i` (1-based), using `T_i^2 = 1 + z T_i`.
    pub fn mul_t(&self, i: usize) -> Self {
        let z = Laurent2::z();
        let mut out = HeckeElement { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                out.add(ws, c);
            } else {
                out.add(ws, c);
                out.add(w.clone(), &(c * &z));
            }
        }
        out
    }

    /// Right multiplication by `T_i^{-1} = T_i - z`.
    pub fn mul_t_inv(&self, i: usize) -> Self {
        let mut out = self.mul_t(i);
        let minus_z = Laurent2::z().scale(-1);
        for (w, c) in &self.terms {
            out.add(w.clone(), &(c * &minus_z));
        }
        out
    }
}

/// Ocneanu trace with values in `Z[q^±][τ]`: coefficient of `τ^k` at index `k`.
struct Trace {
    memo: HashMap<Perm, Vec<Laurent2>>,
}

fn poly_add(acc: &mut Vec<Laurent2>, p: &[Laurent2], c: &Laurent2, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, Laurent2::zero());
    }
    for (k, v) in p.iter().enumerate() {
        acc[k + shift] = &acc[k + shift] + &(v * c);
    }
}

impl Trace {
    fn new() -> Self {
        Trace { memo: HashMap::new() }
    }

    fn of_element(&mut self, h: &HeckeElement) -> Vec<Laurent2> {
        let mut acc = Vec::new();
        for (w, c) in &h.terms {
            let t = self.of_basis(w);
            poly_add(&mut acc, &t, c, 0);
        }
        acc
    }

    /// `tr(T_w)`: peel off the largest letter. If `w(j) = n` then
    /// `T_w = T_{w'} T_{n-1} ⋯ T_j` with `w' ∈ S_{n-1}`, and
    /// `tr(x T_{n-1} y) = τ tr(x y)`.
    fn of_basis(&mut self, w: &Perm) -> Vec<Laurent2> {
        let n = w.len();
        if n <= 1 {
            return vec![Laurent2::one()];
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let top = (n - 1) as u8;
        let out = if w[n - 1] == top {
            self.of_basis(&w[..n - 1].to_vec())
        } else {
            let j = w.iter().position(|&x| x == top).unwrap() + 1;
            let mut wp = w.clone();
            for k in j..n {
                wp.swap(k - 1, k);
            }
            let mut h = HeckeElement { n: n - 1, terms: BTreeMap::new() };
            h.add(wp[..n - 1].to_vec(), &Laurent2::one());
            for k in (j..n - 1).rev() {
                h = h.mul_t(k);
            }
            let inner = self.of_element(&h);
            let mut shifted = Vec::new();
            poly_add(&mut shifted, &inner, &Laurent2::one(), 1);
            shifted
        };
        self.memo.insert(w.clone(), out.clone());
        out
    }
}

/// `z^{n-1} P = (a - a^{-1})^{n-1} a^{-writhe} tr(β)` with
/// `τ = a z / (a - a^{-1})`; a Laurent polynomial for links as well.
pub fn homfly_scaled(word: &BraidWord) -> Laurent2 {
    let n = word.strands();
    let mut h = HeckeElement::identity(n);
    for l in word.letters() {
        h = if l.positive { h.mul_t(l.index) } else { h.mul_t_inv(l.index) };
    }
    let tr = Trace::new().of_element(&h);
    let a_minus = Laurent2::a() - Laurent2::monomial(-1, 0, 1);
    let az = &Laurent2::a() * &Laurent2::z();
    let mut num = Laurent2::zero();
    for (k, c) in tr.iter().enumerate() {
        if n - 1 < k {
            debug_assert!(c.is_zero());
            continue;
        }
        num = &num + &(&(c * &az.pow(k as u32)) * &a_minus.pow((n - 1 - k) as u32));
    }
    num.shift(-word.writhe(), 0)
}

/// `P = ((a - a^{-1})/z)^{n-1} a^{-writhe} tr(β)`. For a link with `c`
/// components `P` carries `z^{1-c}`, so this fails unless the closure is a knot
/// (or a link whose polynomial happens to be Laurent).
pub fn homfly_try(word: &BraidWord) -> Result<Laurent2> {
    let mut p = homfly_scaled(word);
    for _ in 0..word.strands() - 1 {
        p = p
            .div_z()
            .ok_or_else(|| Error::Incompatible(format!("HOMFLY of the closure of {word} is not a Laurent polynomial")))?;
    }
    Ok(p)
}

/// HOMFLY polynomial of a knot closure.
pub fn homfly_oracle(word: &BraidWord) -> Laurent2 {
    homfly_try(word).expect("closure is a knot")
}

/// `Σ_ε (-1)^{#negative} P(β_ε)` over all resolutions of the singular
/// letters; fails when some resolution is not a knot.
pub fn vassiliev_try(word: &SingularBraidWord) -> Result<Laurent2> {
    let k = word.singular_count();
    let mut out = Laurent2::zero();
    for mask in 0u32..1 << k {
        let signs: Vec<bool> = (0..k).map(|t| mask & (1 << t) == 0).collect();
        let neg = signs.iter().filter(|s| !**s).count();
        let p = homfly_try(&word.resolve(&signs))?;
        out = if neg % 2 == 0 { &out + &p } else { &out - &p };
    }
    Ok(out)
}

pub fn vassiliev_oracle(word: &SingularBraidWord) -> Laurent2 {
    vassiliev_try(word).expect("every resolution is a knot")
}
