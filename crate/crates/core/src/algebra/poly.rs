//! Sparse polynomials over Q in the free coordinates of
//! `S = Q[x_1, ..., x_n] / (x_1 + ... + x_n)` and of `S ⊗ S`.
//!
//! The last variable is eliminated (`x_n = -(x_1 + ... + x_{n-1})`, likewise
//! `y_n`), so every polynomial has exactly one representation. Each variable
//! carries internal degree 2.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Q = num::BigRational;

/// Exponent vector over the free variables of a [`Ring`].
pub type Mono = SmallVec<[u16; 8]>;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Polynomials in `x_1, ..., x_{n-1}` (the ring `S`).
    Left,
    /// Polynomials in `x_1, ..., x_{n-1}, y_1, ..., y_{n-1}` (the ring `S ⊗ S`,
    /// `y_k = 1 ⊗ x_k`).
    TwoSided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    pub strands: usize,
    pub side: Side,
}

impl Ring {
    pub fn left(strands: usize) -> Self {
        Ring { strands, side: Side::Left }
    }

    pub fn two_sided(strands: usize) -> Self {
        Ring { strands, side: Side::TwoSided }
    }

    /// Number of free variables on one side.
    pub fn free(&self) -> usize {
        self.strands.saturating_sub(1)
    }

    pub fn nvars(&self) -> usize {
        match self.side {
            Side::Left => self.free(),
            Side::TwoSided => 2 * self.free(),
        }
    }

    pub fn unit_mono(&self) -> Mono {
        SmallVec::from_elem(0, self.nvars())
    }

    fn check(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}

pub fn mono_degree(m: &Mono) -> i32 {
    2 * m.iter().map(|&e| e as i32).sum::<i32>()
}

pub fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero(ring: Ring) -> Self {
        Poly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Q) -> Self {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(ring.unit_mono(), c);
        }
        p
    }

    pub fn one(ring: Ring) -> Self {
        Poly::constant(ring, Q::one())
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Poly::constant(ring, q_int(c))
    }

    pub fn monomial(ring: Ring, mono: Mono, c: Q) -> Self {
        debug_assert_eq!(mono.len(), ring.nvars());
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Free variable with zero-based slot `slot` (`slot < ring.nvars()`).
    fn slot_var(ring: Ring, slot: usize) -> Self {
        let mut m = ring.unit_mono();
        m[slot] = 1;
        Poly::monomial(ring, m, Q::one())
    }

    /// `x_k` (1-based, `k <= n`), canonicalized.
    pub fn x(ring: Ring, k: usize) -> Self {
        Self::var_on(ring, k, 0)
    }

    /// `y_k = 1 ⊗ x_k` (1-based, `k <= n`), canonicalized. Two-sided rings only.
    pub fn y(ring: Ring, k: usize) -> Self {
        assert_eq!(ring.side, Side::TwoSided, "y variables need a two-sided ring");
        Self::var_on(ring, k, ring.free())
    }

    fn var_on(ring: Ring, k: usize, offset: usize) -> Self {
        let n = ring.strands;
        assert!(k >= 1 && k <= n, "variable index {k} out of range for {n} strands");
        if k < n {
            Poly::slot_var(ring, offset + k - 1)
        } else {
            let mut p = Poly::zero(ring);
            for s in 0..ring.free() {
                p = p - Poly::slot_var(ring, offset + s);
            }
            p
        }
    }

    /// Builds a polynomial from exponent vectors over *all* `n` variables per
    /// side (`x_1..x_n` then `y_1..y_n` for two-sided rings), eliminating the
    /// last variable of each side.
    pub fn from_full_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u16>, Q)>,
    {
        let n = ring.strands;
        let sides = if ring.side == Side::TwoSided { 2 } else { 1 };
        let mut out = Poly::zero(ring);
        for (exps, c) in terms {
            assert_eq!(exps.len(), sides * n);
            let mut t = Poly::constant(ring, c);
            for s in 0..sides {
                for k in 1..=n {
                    let e = exps[s * n + k - 1];
                    if e == 0 {
                        continue;
                    }
                    let v = if s == 0 { Poly::x(ring, k) } else { Poly::y(ring, k) };
                    t = &t * &v.pow(e as u32);
                }
            }
            out = out + t;
        }
        out
    }

    /// Exponent vectors over all variables (last variable of each side with
    /// exponent zero); inverse of [`Poly::from_full_terms`] on canonical input.
    pub fn to_full_terms(&self) -> Vec<(Vec<u16>, Q)> {
        let n = self.ring.strands;
        let f = self.ring.free();
        let sides = if self.ring.side == Side::TwoSided { 2 } else { 1 };
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = vec![0u16; sides * n];
                for s in 0..sides {
                    for k in 0..f {
                        v[s * n + k] = m[s * f + k];
                    }
                }
                (v, c.clone())
            })
            .collect()
    }

    pub fn canonicalize(&self) -> Self {
        Poly::from_full_terms(self.ring, self.to_full_terms())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant term if the polynomial is a scalar.
    pub fn as_scalar(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Internal degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(mono_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_of(&self, d: i32) -> bool {
        self.terms.keys().all(|m| mono_degree(m) == d)
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.ring.check(&other.ring)?;
        let mut out = Poly::zero(self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|(k, v)| (mono_mul(k, m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Embeds a left polynomial into `S ⊗ S` as `p ⊗ 1`.
    pub fn to_two_sided_left(&self) -> Poly {
        assert_eq!(self.ring.side, Side::Left);
        let ring = Ring::two_sided(self.ring.strands);
        let f = self.ring.free();
        let mut out = Poly::zero(ring);
        for (m, c) in &self.terms {
            let mut mm = ring.unit_mono();
            mm[..f].copy_from_slice(&m[..f]);
            out.add_term(mm, c.clone());
        }
        out
    }

    /// Embeds a left polynomial into `S ⊗ S` as `1 ⊗ p`.
    pub fn to_two_sided_right(&self) -> Poly {
        assert_eq!(self.ring.side, Side::Left);
        let ring = Ring::two_sided(self.ring.strands);
        let f = self.ring.free();
        let mut out = Poly::zero(ring);
        for (m, c) in &self.terms {
            let mut mm = ring.unit_mono();
            mm[f..].copy_from_slice(&m[..f]);
            out.add_term(mm, c.clone());
        }
        out
    }

    /// Splits a two-sided polynomial into `(x-monomial, y-monomial, coeff)`
    /// triples with left-ring monomials.
    pub fn split_two_sided(&self) -> Vec<(Mono, Mono, Q)> {
        assert_eq!(self.ring.side, Side::TwoSided);
        let f = self.ring.free();
        self.terms
            .iter()
            .map(|(m, c)| (Mono::from_slice(&m[..f]), Mono::from_slice(&m[f..]), c.clone()))
            .collect()
    }

    /// Sets every `y_k` equal to `x_k`, giving a left polynomial.
    pub fn collapse_diagonal(&self) -> Poly {
        let ring = Ring::left(self.ring.strands);
        let mut out = Poly::zero(ring);
        for (xm, ym, c) in self.split_two_sided() {
            out.add_term(mono_mul(&xm, &ym), c);
        }
        out
    }

    /// `(f(.., y_1..y_{j-1}, x_j, x_{j+1}, ..) - f(.., y_1..y_j, x_{j+1}, ..)) / (x_j - y_j)`
    /// for a left polynomial `f`, returned as a two-sided polynomial. Summing
    /// `(x_j - y_j)` times these over all free `j` telescopes to
    /// `f(x) - f(y)`.
    pub fn divided_difference(&self, j: usize) -> Poly {
        assert_eq!(self.ring.side, Side::Left);
        let f = self.ring.free();
        assert!(j >= 1 && j <= f);
        let ring = Ring::two_sided(self.ring.strands);
        let t = j - 1;
        let mut out = Poly::zero(ring);
        for (m, c) in &self.terms {
            let a = m[t];
            if a == 0 {
                continue;
            }
            let mut base = ring.unit_mono();
            for s in 0..f {
                if s < t {
                    base[f + s] = m[s];
                } else if s > t {
                    base[s] = m[s];
                }
            }
            for e in 0..a {
                let mut mm = base.clone();
                mm[t] = e;
                mm[f + t] = a - 1 - e;
                out.add_term(mm, c.clone());
            }
        }
        out
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("poly add")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("poly sub")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("poly mul")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let free = self.ring.free();
        let mut first = true;
        // highest degree first reads more naturally
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(s, &e)| {
                    let name = if s < free { format!("x{}", s + 1) } else { format!("y{}", s - free + 1) };
                    if e == 1 { name } else { format!("{name}^{e}") }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `ψ_i = (x_i^N ⊗ 1 - 1 ⊗ x_i^N) / (x_i ⊗ 1 - 1 ⊗ x_i) = Σ_{a+b=N-1} x_i^a y_i^b`.
pub fn psi_quotient(strands: usize, i: usize, big_n: u32) -> Result<Poly> {
    if i < 1 || i > strands {
        return Err(Error::IndexOutOfRange { index: i as i64, strands });
    }
    if big_n < 1 {
        return Err(Error::Incompatible("N must be at least 1".into()));
    }
    let ring = Ring::two_sided(strands);
    let (x, y) = (Poly::x(ring, i), Poly::y(ring, i));
    let mut out = Poly::zero(ring);
    for a in 0..big_n {
        out = out + &x.pow(a) * &y.pow(big_n - 1 - a);
    }
    Ok(out)
}

/// `φ_i = x_i ⊗ 1 - 1 ⊗ x_i`.
pub fn phi(strands: usize, i: usize) -> Poly {
    let ring = Ring::two_sided(strands);
    Poly::x(ring, i) - Poly::y(ring, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse() {
        let r = Ring::left(3);
        let x1 = Poly::x(r, 1);
        assert!((&x1 + &(-&x1)).is_zero());
    }

    #[test]
    fn relation_is_enforced() {
        let r = Ring::left(2);
        let prod = &Poly::x(r, 1) * &Poly::x(r, 2);
        assert_eq!(prod, -Poly::x(r, 1).pow(2));
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::two_sided(3);
        let (x, y) = (Poly::x(r, 1), Poly::y(r, 1));
        assert_eq!(&(&x + &y) * &(&x - &y), &x.pow(2) - &y.pow(2));
    }

    #[test]
    fn mismatched_rings_error() {
        let a = Poly::x(Ring::left(2), 1);
        let b = Poly::x(Ring::left(3), 1);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch(_))));
        let c = Poly::x(Ring::two_sided(2), 1);
        assert!(a.checked_mul(&c).is_err());
    }

    #[test]
    fn psi_small_cases() {
        let r = Ring::two_sided(2);
        assert_eq!(psi_quotient(2, 1, 1).unwrap(), Poly::one(r));
        assert_eq!(psi_quotient(2, 1, 2).unwrap(), Poly::x(r, 1) + Poly::y(r, 1));
        let (x, y) = (Poly::x(r, 1), Poly::y(r, 1));
        assert_eq!(psi_quotient(2, 1, 3).unwrap(), x.pow(2) + &x * &y + y.pow(2));
        assert!(psi_quotient(2, 3, 2).is_err());
    }

    #[test]
    fn psi_times_phi_exhaustive() {
        for n in 1..=4usize {
            let r = Ring::two_sided(n);
            for i in 1..=n {
                for big_n in 1..=8u32 {
                    let lhs = &phi(n, i) * &psi_quotient(n, i, big_n).unwrap();
                    let rhs = Poly::x(r, i).pow(big_n) - Poly::y(r, i).pow(big_n);
                    assert_eq!(lhs, rhs, "n={n} i={i} N={big_n}");
                }
            }
        }
    }

    #[test]
    fn divided_differences_telescope() {
        let l = Ring::left(4);
        let f = Poly::x(l, 1).pow(3) + &Poly::x(l, 2) * &Poly::x(l, 4).pow(2) + Poly::x(l, 3);
        let mut acc = Poly::zero(Ring::two_sided(4));
        for j in 1..=3 {
            acc = acc + &phi(4, j) * &f.divided_difference(j);
        }
        assert_eq!(acc, f.to_two_sided_left() - f.to_two_sided_right());
    }

    #[test]
    fn display_reads_well() {
        let r = Ring::two_sided(3);
        let p = Poly::x(r, 1).pow(2) - Poly::y(r, 2).scale(&q_int(3)) + Poly::one(r);
        assert_eq!(p.to_string(), "x1^2 - 3*y2 + 1");
    }
}
