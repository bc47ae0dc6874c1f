//! MeatAxe-style submodule search and chopping into composition factors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_dim;
use super::matrep::{spin_with, MatRep};
use crate::arith::matrix::poly_eval;
use crate::arith::{Fq, Mat, Subspace};
use crate::error::{Error, Result};

pub const DEFAULT_CHOP_BUDGET: usize = 2000;

/// Outcome of one irreducibility test.
#[derive(Debug, Clone)]
pub enum Split {
    Irreducible,
    Proper(Subspace),
}

/// Searches for a proper nonzero submodule with random algebra elements and
/// Norton's criterion. Only eigenvalues lying in the coefficient field are
/// used, so certification requires absolutely irreducible factors.
pub fn find_submodule(v: &MatRep, rng: &mut ChaCha8Rng, budget: usize) -> Result<Split> {
    let n = v.dim();
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    let f = v.field().clone();
    let gens = v.generator_images();
    let transposed: Vec<Mat> = gens.iter().map(Mat::transpose).collect();
    let mut words: Vec<Mat> = vec![Mat::identity(n)];
    words.extend(gens.iter().cloned());
    let q = f.order();
    for _ in 0..budget {
        if words.len() >= 2 {
            let i = rng.gen_range(0..words.len());
            let j = rng.gen_range(0..words.len());
            let w = words[i].mul(&words[j], &f);
            if words.len() < 12 {
                words.push(w);
            } else {
                let k = rng.gen_range(1..words.len());
                words[k] = w;
            }
        }
        let mut a = Mat::zeros(n, n);
        for w in &words {
            let c = rng.gen_range(0..q);
            if c != 0 {
                a = a.add(&w.scale(c, &f), &f);
            }
        }
        let cp = a.charpoly(&f);
        let roots: Vec<Fq> = f.elements().filter(|&x| poly_eval(&cp, x, &f) == 0).collect();
        for lambda in roots {
            let shifted = a.sub(&Mat::scalar(n, lambda), &f);
            let kernel = shifted.left_kernel(&f);
            for vec in &kernel {
                let s = spin_with(gens, n, std::slice::from_ref(vec), &f);
                if s.dim() < n {
                    return Ok(Split::Proper(s));
                }
            }
            if kernel.len() == 1 {
                let w = shifted.right_kernel(&f);
                let s = spin_with(&transposed, n, &w[..1], &f);
                if s.dim() < n {
                    return Ok(Split::Proper(annihilator(&s, &f)));
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::ChopBudgetExceeded { budget })
}

/// `{v : v · u = 0 for all u in s}`.
fn annihilator(s: &Subspace, f: &crate::arith::FiniteField) -> Subspace {
    let m = s.to_mat();
    let mut out = Subspace::new(s.n);
    for v in m.right_kernel(f) {
        out.insert(&v, f);
    }
    out
}

pub fn is_irreducible(v: &MatRep, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(matches!(
        find_submodule(v, &mut rng, DEFAULT_CHOP_BUDGET)?,
        Split::Irreducible
    ))
}

/// Composition factors in the order a composition series produces them.
pub fn composition_factors(v: &MatRep, rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<MatRep>> {
    if v.dim() == 0 {
        return Ok(Vec::new());
    }
    match find_submodule(v, rng, budget)? {
        Split::Irreducible => Ok(vec![v.clone()]),
        Split::Proper(s) => {
            let mut out = composition_factors(&v.submodule(&s), rng, budget)?;
            out.extend(composition_factors(&v.quotient(&s), rng, budget)?);
            Ok(out)
        }
    }
}

/// Composition factors up to isomorphism with multiplicities, listed by
/// first appearance. Deterministic for a fixed seed.
pub fn chop(v: &MatRep, seed: u64) -> Result<Vec<(MatRep, usize)>> {
    chop_with_budget(v, seed, DEFAULT_CHOP_BUDGET)
}

pub fn chop_with_budget(v: &MatRep, seed: u64, budget: usize) -> Result<Vec<(MatRep, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = composition_factors(v, &mut rng, budget)?;
    let mut out: Vec<(MatRep, usize)> = Vec::new();
    for s in factors {
        match out
            .iter_mut()
            .find(|(t, _)| t.dim() == s.dim() && hom_dim(t, &s) > 0)
        {
            Some(entry) => entry.1 += 1,
            None => out.push((s, 1)),
        }
    }
    Ok(out)
}
