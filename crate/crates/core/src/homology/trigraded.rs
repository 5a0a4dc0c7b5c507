use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::laurent::Laurent2;

mod table_rows {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(i32, i32, i32), usize>, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 4]> = m.iter().map(|(&(k, i, j), &d)| [k as i64, i as i64, j as i64, d as i64]).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(i32, i32, i32), usize>, D::Error> {
        let rows = Vec::<[i64; 4]>::deserialize(d)?;
        Ok(rows.into_iter().map(|r| ((r[0] as i32, r[1] as i32, r[2] as i32), r[3] as usize)).collect())
    }
}

/// How a table's gradings are read when forming Euler characteristics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Grading {
    /// `(k, i, j)` = (homological, Hochschild with the α shift, internal);
    /// the exterior degree is `p = offset - i`.
    Homfly { offset: i32 },
    /// `(k, i, j)` = (homological, collapsed grading, parity of `p`).
    Sl { n: u32 },
}

/// Finitely supported dimension table over `(k, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriGradedSpace {
    pub grading: Grading,
    #[serde(with = "table_rows")]
    pub dims: BTreeMap<(i32, i32, i32), usize>,
    /// Highest internal (or collapsed) degree examined.
    pub last_degree: i32,
    /// True when the window ran out before the stabilization margin was met.
    pub truncated: bool,
}

impl TriGradedSpace {
    pub fn new(grading: Grading) -> Self {
        TriGradedSpace { grading, dims: BTreeMap::new(), last_degree: 0, truncated: false }
    }

    pub fn add(&mut self, k: i32, i: i32, j: i32, dim: usize) {
        if dim > 0 {
            *self.dims.entry((k, i, j)).or_insert(0) += dim;
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn table(&self) -> Vec<[i64; 4]> {
        self.dims.iter().map(|(&(k, i, j), &d)| [k as i64, i as i64, j as i64, d as i64]).collect()
    }

    /// HOMFLY: `Σ (-1)^{k+p} a^i q^j dim`. sl(N): `Σ (-1)^{k+j} q^i dim`.
    pub fn euler(&self) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(k, i, j), &d) in &self.dims {
            let (sign_exp, a, q) = match self.grading {
                Grading::Homfly { offset } => (k + offset - i, i, j),
                Grading::Sl { .. } => (k + j, 0, i),
            };
            let s = if sign_exp.rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(a, q, s * d as i64);
        }
        out
    }

    /// Same support shifted in homological degree.
    pub fn shift_k(&self, dk: i32) -> Self {
        let dims = self.dims.iter().map(|(&(k, i, j), &d)| ((k + dk, i, j), d)).collect();
        TriGradedSpace { dims, ..self.clone() }
    }

    /// Table with every grading negated.
    pub fn negated(&self) -> Self {
        let dims = self.dims.iter().map(|(&(k, i, j), &d)| ((-k, -i, -j), d)).collect();
        TriGradedSpace { dims, ..self.clone() }
    }

    /// Plain-text rendering, one `k i j dim` row per line.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (&(k, i, j), &d) in &self.dims {
            s.push_str(&format!("{k:>4} {i:>4} {j:>4} {d:>4}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_signs() {
        let mut t = TriGradedSpace::new(Grading::Homfly { offset: 1 });
        t.add(0, 1, 2, 1);
        t.add(1, 0, 0, 2);
        assert_eq!(t.euler(), Laurent2::monomial(1, 2, 1) + Laurent2::monomial(0, 0, 2));
        let mut s = TriGradedSpace::new(Grading::Sl { n: 2 });
        s.add(0, 3, 1, 1);
        assert_eq!(s.euler(), Laurent2::monomial(0, 3, -1));
        assert!(TriGradedSpace::new(Grading::Sl { n: 2 }).euler().is_zero());
        let back: TriGradedSpace = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
