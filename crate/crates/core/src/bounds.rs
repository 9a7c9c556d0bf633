//! Admissible Betti vectors under the index constraints: `C(k0, n, b)` must
//! be a non-negative multiple of `k0`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cfunc::{coefficients, eval_half};
use crate::error::{Error, Result};
use crate::exact::{Integer, Rational};

/// Even Betti numbers `(b_0, b_2, ..., b_2n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<Integer>);

impl BettiVector {
    pub fn new(b: Vec<Integer>) -> Result<Self> {
        if b.first() != Some(&Integer::one()) {
            return Err(Error::MalformedVector("b_0 must be 1".into()));
        }
        if b.iter().any(|x| !x.is_positive()) {
            return Err(Error::MalformedVector("Betti numbers must be positive".into()));
        }
        let n = b.len() - 1;
        if (0..=n).any(|j| b[j] != b[n - j]) {
            return Err(Error::MalformedVector("Betti vector is not symmetric".into()));
        }
        Ok(Self(b))
    }

    /// Expands `(b_2, ..., b_2m)` with `m = floor(n/2)` by symmetry.
    pub fn from_half(n: usize, half: &[Integer]) -> Result<Self> {
        if half.len() != n / 2 {
            return Err(Error::MalformedVector(format!(
                "expected {} free entries for n = {n}, found {}",
                n / 2,
                half.len()
            )));
        }
        let mut lower = vec![Integer::one()];
        lower.extend_from_slice(half);
        Self::new((0..=n).map(|j| lower[j.min(n - j)].clone()).collect())
    }

    pub fn as_slice(&self) -> &[Integer] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn euler_characteristic(&self) -> Integer {
        self.0.iter().sum()
    }

    pub fn is_unimodal(&self) -> bool {
        let n = self.n();
        (0..n / 2).all(|i| self.0[i] <= self.0[i + 1])
    }
}

fn check_range(n: usize, k0: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    if k0 < 1 || k0 > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "index k0 = {k0} outside 1..={} for n = {n}",
            n + 1
        )));
    }
    Ok(())
}

fn coeffs(n: usize, k0: usize) -> Vec<Integer> {
    coefficients(n, Some(&Integer::from(k0)))
}

/// Smallest half-index whose coefficient in `C(k0, n, b)` is negative.
pub fn lambda_threshold(n: usize, k0: usize) -> usize {
    coeffs(n, k0)
        .iter()
        .position(Signed::is_negative)
        .expect("last coefficient is always negative")
}

/// The floor-of-square-root expressions for the threshold. They locate the
/// first non-positive coefficient, so they can sit one below
/// `lambda_threshold` when some coefficient vanishes.
pub fn lambda_closed_form(n: usize, k0: usize) -> usize {
    let big_n = (n * (k0 + 1)) as u64;
    let fits = |q: u64| {
        if n.is_multiple_of(2) {
            // q <= sqrt(N/12)
            12 * q * q <= big_n
        } else {
            // q <= -1/2 + sqrt(N/12)
            3 * (2 * q + 1) * (2 * q + 1) <= big_n
        }
    };
    let q = (0..).take_while(|&q| fits(q)).last().unwrap_or(0);
    (n / 2).saturating_sub(q as usize)
}

/// `A_0 = n (3n - k0 - 1)` and `S = n (n - 1)(n - k0 - 3) / 2`.
pub fn a0_and_s(n: usize, k0: usize) -> (Integer, Integer) {
    let (n, k) = (Integer::from(n), Integer::from(k0));
    let a0 = &n * (Integer::from(3) * &n - &k - 1);
    let s = &n * (&n - 1) * (&n - &k - 3) / 2;
    (a0, s)
}

/// `-A_0 / S`, the bound on the largest Betti number under unimodality.
pub fn max_betti_bound(n: usize, k0: usize) -> Result<Rational> {
    check_range(n, k0)?;
    let (a0, s) = a0_and_s(n, k0);
    if !s.is_negative() {
        return Err(Error::NonNegativeS { n, k0 });
    }
    Ok(Rational::new(-a0, s))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub n: usize,
    pub k0: usize,
    pub require_unimodal: bool,
    /// Per-coordinate upper bound that was searched.
    pub bound: Integer,
    /// True when `bound` is implied by the constraints rather than by a cap.
    pub complete: bool,
    /// Half-vectors `(b_2, ..., b_2m)`, sorted.
    pub vectors: Vec<Vec<Integer>>,
}

/// Bound on every free coordinate implied by `C >= 0`, if the constraints
/// force one.
fn derived_bound(coef: &[Integer], require_unimodal: bool) -> Option<Integer> {
    let m = coef.len() - 1;
    if m == 0 {
        return Some(Integer::zero());
    }
    if !require_unimodal {
        if !coef[1..].iter().all(Signed::is_negative) {
            return None;
        }
        // each x_i >= 1, so |A_i| x_i <= A_0 - sum_{j != i} |A_j|
        let base: Integer = coef.iter().sum();
        let bound = coef[1..]
            .iter()
            .map(|a| {
                let slack = &base - a;
                if slack.is_negative() {
                    Integer::zero()
                } else {
                    slack.div_floor(&-a)
                }
            })
            .max()
            .unwrap();
        return Some(bound);
    }
    // Unimodal: x_i = 1 + d_1 + ... + d_i with d_j >= 0, and
    // C = T_0 + sum_j d_j T_j with tail sums T_j = sum_{i >= j} A_i.
    let tails: Vec<Integer> = (0..=m).map(|j| coef[j..].iter().sum()).collect();
    if !tails[1..].iter().all(Signed::is_negative) {
        return None;
    }
    if tails[0].is_negative() {
        return Some(Integer::zero());
    }
    let min_step = tails[1..].iter().map(|t| -t).min().unwrap();
    Some(Integer::one() + tails[0].div_floor(&min_step))
}

/// Exhaustive search over symmetric positive Betti vectors with `b_0 = 1`
/// for which `C(k0, n, b)` is a non-negative multiple of `k0`.
pub fn enumerate_admissible(
    n: usize,
    k0: usize,
    require_unimodal: bool,
    cap: Option<u64>,
) -> Result<AdmissibleSet> {
    check_range(n, k0)?;
    let coef = coeffs(n, k0);
    let m = n / 2;
    let derived = derived_bound(&coef, require_unimodal);
    let (bound, complete) = match (derived, cap) {
        (None, None) => return Err(Error::UnboundedSearch { n, k0 }),
        (None, Some(c)) => (Integer::from(c), false),
        (Some(d), None) => (d, true),
        (Some(d), Some(c)) => {
            let c = Integer::from(c);
            if c < d {
                (c, false)
            } else {
                (d, true)
            }
        }
    };
    let k = Integer::from(k0);
    let mut vectors = Vec::new();
    let top = bound.to_u64().unwrap_or(u64::MAX);
    if m == 0 || top >= 1 {
        let mut x = vec![1u64; m];
        loop {
            let unimodal = !require_unimodal || x.windows(2).all(|w| w[0] <= w[1]);
            if unimodal {
                let mut half = vec![Integer::one()];
                half.extend(x.iter().map(|&v| Integer::from(v)));
                let c = eval_half(n, Some(&k), &half);
                if !c.is_negative() && c.is_multiple_of(&k) {
                    vectors.push(half[1..].to_vec());
                }
            }
            let Some(i) = (0..m).rev().find(|&i| x[i] < top) else {
                break;
            };
            x[i] += 1;
            for v in &mut x[i + 1..] {
                *v = 1;
            }
        }
    }
    vectors.sort();
    Ok(AdmissibleSet {
        n,
        k0,
        require_unimodal,
        bound,
        complete,
        vectors,
    })
}

/// One cell of the table of `C(k0, n, b)` as an affine form in
/// `(1, b_2, ..., b_2m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub n: usize,
    pub k0: usize,
    pub coefficients: Vec<Integer>,
}

impl TableCell {
    pub fn expression(&self) -> String {
        render_affine(&self.coefficients)
    }
}

impl fmt::Display for TableCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression())
    }
}

/// Cells for every `n` in `ns` and every admissible `k0` in `k0s`.
pub fn table_c(
    ns: impl IntoIterator<Item = usize>,
    k0s: impl IntoIterator<Item = usize> + Clone,
) -> Vec<TableCell> {
    let mut out = Vec::new();
    for n in ns {
        for k0 in k0s.clone() {
            if n >= 2 && (1..=n + 1).contains(&k0) {
                out.push(TableCell {
                    n,
                    k0,
                    coefficients: coeffs(n, k0),
                });
            }
        }
    }
    out
}

/// Renders `c_0 + c_1 b2 + c_2 b4 + ...`, pulling out a positive common
/// factor, e.g. `2(4-b2)` or `65+17b2-7b4`.
pub fn render_affine(coef: &[Integer]) -> String {
    let g = coef.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    let (g, reduced): (Integer, Vec<Integer>) = if g > Integer::one() {
        (g.clone(), coef.iter().map(|c| c / &g).collect())
    } else {
        (Integer::one(), coef.to_vec())
    };
    let mut body = String::new();
    for (i, c) in reduced.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if neg {
            body.push('-');
        } else if !body.is_empty() {
            body.push('+');
        }
        if i == 0 {
            body.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                body.push_str(&mag.to_string());
            }
            body.push_str(&format!("b{}", 2 * i));
        }
    }
    if body.is_empty() {
        body.push('0');
    }
    if g.is_one() {
        body
    } else {
        format!("{g}({body})")
    }
}
