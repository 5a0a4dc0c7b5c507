//! Integer Laurent polynomials in two variables `a`, `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent2(BTreeMap<(i32, i32), i64>);

impl Laurent2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(a: i32, q: i32, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(a, q, c);
        out
    }

    pub fn a() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `z = q - q^{-1}`.
    pub fn z() -> Self {
        Self::monomial(0, 1, 1) - Self::monomial(0, -1, 1)
    }

    pub fn add_term(&mut self, a: i32, q: i32, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry((a, q)).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&(a, q));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &i64)> {
        self.0.iter()
    }

    pub fn coeff(&self, a: i32, q: i32) -> i64 {
        self.0.get(&(a, q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (&(a, q), &v) in &self.0 {
            out.add_term(a, q, v * c);
        }
        out
    }

    pub fn shift(&self, da: i32, dq: i32) -> Self {
        Laurent2(self.0.iter().map(|(&(a, q), &c)| ((a + da, q + dq), c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `a ↦ c·a^{ua} q^{uq}`, `q ↦ q^{vq}` style linear exponent maps:
    /// the monomial `a^i q^j` goes to `a^{ma.0 i + ma.1 j} q^{mq.0 i + mq.1 j}`.
    pub fn remap(&self, ma: (i32, i32), mq: (i32, i32)) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.0 {
            out.add_term(ma.0 * i + ma.1 * j, mq.0 * i + mq.1 * j, c);
        }
        out
    }

    /// Replaces `a^i` by `(-1)^i a^i` style sign twists: multiplies the
    /// coefficient of `a^i q^j` by `(-1)^{s.0 i + s.1 j}`.
    pub fn sign_twist(&self, s: (i32, i32)) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in &self.0 {
            let e = (s.0 * i + s.1 * j).rem_euclid(2);
            out.add_term(i, j, if e == 0 { c } else { -c });
        }
        out
    }

    /// Exact division by `q - q^{-1}`; `None` if not divisible.
    pub fn div_z(&self) -> Option<Self> {
        let mut quot = Self::zero();
        let mut rem = self.clone();
        while let Some((&(a, e), &c)) = rem.0.iter().next_back() {
            let low = rem.0.range((a, i32::MIN)..=(a, i32::MAX)).next().map(|(k, _)| k.1)?;
            if e - 2 < low {
                return None;
            }
            // c q^e = c q^{e-1} (q - q^{-1}) + c q^{e-2}
            quot.add_term(a, e - 1, c);
            rem.add_term(a, e, -c);
            rem.add_term(a, e - 2, c);
        }
        Some(quot)
    }

    /// `(a, q) ↦ (a^{-1}, q^{-1})`.
    pub fn invert_vars(&self) -> Self {
        self.remap((-1, 0), (0, -1))
    }

    /// Specializes `a = q^k`, leaving a polynomial in `q` alone.
    pub fn specialize_a(&self, k: i32) -> Self {
        self.remap((0, 0), (k, 1))
    }

    /// If `self = c · a^da q^dq · other` with `c = ±1`, returns `(c, da, dq)`.
    pub fn monomial_ratio(&self, other: &Laurent2) -> Option<(i64, i32, i32)> {
        let (&(a1, q1), &c1) = self.0.iter().next()?;
        let (&(a2, q2), &c2) = other.0.iter().next()?;
        for c in [1i64, -1] {
            if c1 == c * c2 && *self == other.shift(a1 - a2, q1 - q2).scale(c) {
                return Some((c, a1 - a2, q1 - q2));
            }
        }
        None
    }

    /// Coefficient map keyed by `"i,j"` exponent strings.
    pub fn to_string_map(&self) -> BTreeMap<String, i64> {
        self.0.iter().map(|(&(a, q), &c)| (format!("{a},{q}"), c)).collect()
    }

    pub fn from_string_map(m: &BTreeMap<String, i64>) -> Option<Self> {
        let mut out = Self::zero();
        for (k, &c) in m {
            let (a, q) = k.split_once(',')?;
            out.add_term(a.trim().parse().ok()?, q.trim().parse().ok()?, c);
        }
        Some(out)
    }
}

impl Serialize for Laurent2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = BTreeMap::<String, i64>::deserialize(d)?;
        Laurent2::from_string_map(&m).ok_or_else(|| serde::de::Error::custom("bad exponent key"))
    }
}

impl Add for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(a, q), &c) in &rhs.0 {
            out.add_term(a, q, c);
        }
        out
    }
}

impl Sub for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        self + &rhs.scale(-1)
    }
}

impl Mul for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(a1, q1), &c1) in &self.0 {
            for (&(a2, q2), &c2) in &rhs.0 {
                out.add_term(a1 + a2, q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Add for Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: Laurent2) -> Laurent2 {
        &self + &rhs
    }
}

impl Sub for Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: Laurent2) -> Laurent2 {
        &self - &rhs
    }
}

impl Mul for Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: Laurent2) -> Laurent2 {
        &self * &rhs
    }
}

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        self.scale(-1)
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, q), &c) in &self.0 {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                write!(f, " ")?;
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if a != 0 {
                parts.push(if a == 1 { "a".to_string() } else { format!("a^{a}") });
            }
            if q != 0 {
                parts.push(if q == 1 { "q".to_string() } else { format!("q^{q}") });
            }
            let body = match (abs, parts.is_empty()) {
                (_, true) => abs.to_string(),
                (1, false) => parts.join("*"),
                _ => format!("{abs}*{}", parts.join("*")),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
