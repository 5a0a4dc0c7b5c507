//! Symbolic Koszul complex and the factorization `Z` over `S ⊗ S`, on the
//! exterior algebra of the `n - 1` free coordinates.

use crate::algebra::{phi, Poly, PolyMatrix, Ring};
use crate::error::{Error, Result};

use super::koszul::{potential_polynomial, psi_prime};

fn exterior_basis(m: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << m).collect();
    masks.sort_by_key(|x| (x.count_ones(), *x));
    masks
}

fn wedge_matrix(m: usize, coeffs: &[Poly], contract: bool, ring: Ring) -> PolyMatrix {
    let basis = exterior_basis(m);
    let pos = |mask: u32| basis.iter().position(|&b| b == mask).unwrap();
    let mut out = PolyMatrix::zeros(ring, basis.len(), basis.len());
    for (col, &mask) in basis.iter().enumerate() {
        for (t, c) in coeffs.iter().enumerate() {
            let bit = 1u32 << t;
            if (mask & bit != 0) != contract {
                continue;
            }
            let neg = (mask & (bit - 1)).count_ones() % 2 == 1;
            let row = pos(mask ^ bit);
            let v = if neg { -c } else { c.clone() };
            let cur = out.get(row, col) + &v;
            out.set(row, col, cur);
        }
    }
    out
}

/// Koszul resolution of `S` over `S ⊗ S`: `Λ^p` of rank `C(n-1, p)`, each
/// `e_t` in internal degree 2, `d_-` contraction with `φ_t`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    pub strands: usize,
    pub ranks: Vec<usize>,
    pub d_minus: PolyMatrix,
}

impl KoszulComplex {
    pub fn new(strands: usize) -> Self {
        let m = strands - 1;
        let ring = Ring::two_sided(strands);
        let phis: Vec<Poly> = (1..=m).map(|t| phi(strands, t)).collect();
        let mut ranks = vec![0; m + 1];
        for mask in 0u32..1 << m {
            ranks[mask.count_ones() as usize] += 1;
        }
        KoszulComplex { strands, ranks, d_minus: wedge_matrix(m, &phis, true, ring) }
    }

    pub fn is_d_squared_zero(&self) -> bool {
        self.d_minus.mul(&self.d_minus).is_zero()
    }
}

/// `Z = ⊗_t Z_t` with `d_-` contraction against `φ_t` and `d_+` wedge with
/// `ψ'_t`; `(d_+ + d_-)^2 = potential · Id`.
#[derive(Clone, Debug)]
pub struct MatrixFactorization {
    pub strands: usize,
    pub big_n: u32,
    pub d_plus: PolyMatrix,
    pub d_minus: PolyMatrix,
    pub potential: Poly,
}

impl MatrixFactorization {
    pub fn z(strands: usize, big_n: u32) -> Self {
        let m = strands - 1;
        let ring = Ring::two_sided(strands);
        let phis: Vec<Poly> = (1..=m).map(|t| phi(strands, t)).collect();
        let w = potential_polynomial(strands, big_n);
        MatrixFactorization {
            strands,
            big_n,
            d_plus: wedge_matrix(m, &psi_prime(strands, big_n), false, ring),
            d_minus: wedge_matrix(m, &phis, true, ring),
            potential: w.to_two_sided_left() - w.to_two_sided_right(),
        }
    }

    pub fn check_potential(&self) -> Result<()> {
        let d = self.d_plus.add(&self.d_minus);
        let ring = Ring::two_sided(self.strands);
        let expect = PolyMatrix::scalar(ring, d.rows(), &self.potential);
        if d.mul(&d) != expect {
            return Err(Error::Invariant(format!(
                "(d_+ + d_-)^2 differs from the potential for n={} N={}",
                self.strands, self.big_n
            )));
        }
        Ok(())
    }
}
