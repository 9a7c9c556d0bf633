//! The integer-valued functions `C(n, h)`, `C(k0, n, f)` and `C(k0, n, b)`.
//!
//! For symmetric `h` (or Betti) vectors every variant is an affine function
//! of the independent half `(x_0, ..., x_m)`, `m = floor(n/2)`. With
//! `N = n (k0 + 1)` the coefficients are
//!
//! * `n = 2m`:   `A_i = 12 (m-i)^2 - N` for `i < m`, `A_m = -m (k0 + 1)`
//! * `n = 2m+1`: `A_i = 12 k (k+1) + 3 - N` with `k = m - i` for `i < m`,
//!   `A_m = -(N - 3)`
//!
//! and the index-free `C(n, h)` is the same expression at `k0 = 0`.

use num_traits::Zero;

use crate::bounds::BettiVector;
use crate::error::{Error, Result};
use crate::exact::Integer;
use crate::polytope::{FVector, HVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CVector {
    F(FVector),
    H(HVector),
    Betti(BettiVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CParams {
    pub n: usize,
    /// `None` selects the index-free variant.
    pub k0: Option<Integer>,
    pub vector: CVector,
}

impl CParams {
    pub fn new(n: usize, k0: Option<Integer>, vector: CVector) -> Self {
        Self { n, k0, vector }
    }
}

/// Coefficients `(A_0, ..., A_m)` of the half-vector form.
pub fn coefficients(n: usize, k0: Option<&Integer>) -> Vec<Integer> {
    let k1 = k0.cloned().unwrap_or_else(Integer::zero) + 1;
    let big_n = Integer::from(n) * &k1;
    let m = n / 2;
    (0..=m)
        .map(|i| {
            let k = Integer::from(m - i);
            match (n.is_multiple_of(2), i == m) {
                (true, false) => Integer::from(12) * &k * &k - &big_n,
                (true, true) => -Integer::from(m) * &k1,
                (false, false) => Integer::from(12) * &k * (&k + 1) + 3 - &big_n,
                (false, true) => Integer::from(3) - &big_n,
            }
        })
        .collect()
}

fn check_symmetric(v: &[Integer], n: usize) -> Result<()> {
    if v.len() != n + 1 {
        return Err(Error::MalformedVector(format!(
            "expected {} entries for n = {n}, found {}",
            n + 1,
            v.len()
        )));
    }
    if (0..=n).any(|j| v[j] != v[n - j]) {
        return Err(Error::MalformedVector("vector is not symmetric".into()));
    }
    Ok(())
}

/// `sum A_i x_i` over the first half of a symmetric vector.
pub fn eval_half(n: usize, k0: Option<&Integer>, half: &[Integer]) -> Integer {
    coefficients(n, k0)
        .iter()
        .zip(half)
        .map(|(a, x)| a * x)
        .sum()
}

pub fn eval_c(params: &CParams) -> Result<Integer> {
    let n = params.n;
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let k0 = params.k0.as_ref();
    match &params.vector {
        CVector::F(f) => {
            if f.0.len() != n + 1 {
                return Err(Error::MalformedVector(format!(
                    "expected {} entries for n = {n}, found {}",
                    n + 1,
                    f.0.len()
                )));
            }
            let k = k0.cloned().unwrap_or_else(Integer::zero);
            let c1 = Integer::from(5) - Integer::from(3 * n) - k;
            Ok(Integer::from(12) * &f.0[2] + c1 * &f.0[1])
        }
        CVector::H(h) => {
            check_symmetric(&h.0, n)?;
            Ok(eval_half(n, k0, &h.0[..=n / 2]))
        }
        CVector::Betti(b) => {
            check_symmetric(b.as_slice(), n)?;
            Ok(eval_half(n, k0, &b.as_slice()[..=n / 2]))
        }
    }
}
