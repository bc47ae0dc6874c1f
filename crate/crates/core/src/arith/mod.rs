//! Exact arithmetic: finite fields, Galois rings and cyclotomic fields.

pub mod cyc_linalg;
pub mod cyclotomic;
pub mod galois_ring;
pub mod gf;
pub mod matrix;
pub mod prime;

pub use cyc_linalg::{cyc_mat_vec, cyc_rank, cyc_solve, cyc_solve_many};
pub use cyclotomic::{CycNumber, CycValue};
pub use galois_ring::{GaloisRing, GaloisRingElem};
pub use gf::{FiniteField, FiniteFieldElem, Fq};
pub use matrix::{Mat, Subspace};

/// Teichmüller lift of a finite-field element to a root of unity: `0 ↦ 0`
/// and `generator^k ↦ ζ_{q-1}^k`, written over the smallest conductor
/// dividing `q - 1` that contains it.
pub fn teichmueller_lift(field: &FiniteField, a: Fq) -> CycNumber {
    match field.log(a) {
        None => CycNumber::zero(),
        Some(k) => {
            let n = field.order() as u64 - 1;
            let g = prime::gcd(n, k as u64);
            CycNumber::zeta(n / g, (k as u64 / g) as i64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn teichmueller_in_gf4() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(teichmueller_lift(&f, 1), CycNumber::one());
        assert_eq!(teichmueller_lift(&f, 0), CycNumber::zero());
        let w = f.generator();
        let lw = teichmueller_lift(&f, w);
        assert_eq!(lw.mul(&teichmueller_lift(&f, f.mul(w, w))), CycNumber::one());
        assert_eq!(lw.pow(3), CycNumber::one());
        assert_ne!(lw, CycNumber::one());
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(
                    teichmueller_lift(&f, a).mul(&teichmueller_lift(&f, b)),
                    teichmueller_lift(&f, f.mul(a, b))
                );
            }
        }
    }
}
