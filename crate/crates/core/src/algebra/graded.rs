use std::collections::HashMap;

use super::poly::{Mono, Ring};
use crate::error::{Error, Result};

/// Monomial basis of one internal degree of a polynomial ring.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub ring: Ring,
    pub degree: i32,
    pub basis: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Enumerates the monomials of internal degree `j` in lexicographically
/// decreasing order (`x_1` dominant). Negative degrees give an empty piece.
pub fn enumerate_graded_piece(ring: Ring, j: i32) -> Result<GradedPiece> {
    if j % 2 != 0 {
        return Err(Error::OddDegree(j));
    }
    let mut basis = Vec::new();
    if j >= 0 {
        let total = (j / 2) as u16;
        let mut cur = ring.unit_mono();
        fill(&mut cur, 0, total, &mut basis);
    }
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(GradedPiece { ring, degree: j, basis, index })
}

fn fill(cur: &mut Mono, slot: usize, remaining: u16, out: &mut Vec<Mono>) {
    let nv = cur.len();
    if nv == 0 {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if slot == nv - 1 {
        cur[slot] = remaining;
        out.push(cur.clone());
        cur[slot] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[slot] = e;
        fill(cur, slot + 1, remaining - e, out);
    }
    cur[slot] = 0;
}

/// Lazily populated cache of graded pieces for one ring.
#[derive(Debug)]
pub struct PieceCache {
    ring: Ring,
    pieces: HashMap<i32, GradedPiece>,
}

impl PieceCache {
    pub fn new(ring: Ring) -> Self {
        PieceCache { ring, pieces: HashMap::new() }
    }

    pub fn get(&mut self, j: i32) -> &GradedPiece {
        let ring = self.ring;
        self.pieces
            .entry(j)
            .or_insert_with(|| enumerate_graded_piece(ring, j).expect("even degree"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn spec_examples() {
        let p = enumerate_graded_piece(Ring::left(2), 0).unwrap();
        assert_eq!(p.basis, vec![Mono::from_slice(&[0])]);
        let p = enumerate_graded_piece(Ring::left(2), 4).unwrap();
        assert_eq!(p.basis, vec![Mono::from_slice(&[2])]);
        let p = enumerate_graded_piece(Ring::two_sided(3), 2).unwrap();
        let expect: Vec<Mono> = vec![
            smallvec![1, 0, 0, 0],
            smallvec![0, 1, 0, 0],
            smallvec![0, 0, 1, 0],
            smallvec![0, 0, 0, 1],
        ];
        assert_eq!(p.basis, expect);
    }

    #[test]
    fn odd_degree_rejected() {
        assert_eq!(enumerate_graded_piece(Ring::left(3), 3).unwrap_err(), Error::OddDegree(3));
    }

    #[test]
    fn stars_and_bars() {
        for n in 1..=4usize {
            for side in [Ring::left(n), Ring::two_sided(n)] {
                let m = side.nvars() as u64;
                for j in (0..=20).step_by(2) {
                    let p = enumerate_graded_piece(side, j).unwrap();
                    let expect = if m == 0 {
                        u64::from(j == 0)
                    } else {
                        binom(j as u64 / 2 + m - 1, m - 1)
                    };
                    assert_eq!(p.dim() as u64, expect, "{side:?} j={j}");
                }
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_graded_piece(Ring::two_sided(3), 6).unwrap();
        let b = enumerate_graded_piece(Ring::two_sided(3), 6).unwrap();
        assert_eq!(a.basis, b.basis);
        let mut sorted = a.basis.clone();
        sorted.sort();
        sorted.reverse();
        assert_eq!(a.basis, sorted);
    }
}
