//! Exact integer and rational linear algebra.
//!
//! Everything downstream (hulls, weights, lengths, reflections) is built on
//! the handful of primitives here. Nothing in the crate touches floating
//! point.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Integer coordinate tuple in the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Integer>);

/// Rational coordinate tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl LatticeVector {
    pub fn new(coords: Vec<Integer>) -> Self {
        Self(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Integer::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Integer::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Integer] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Integer> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> Integer {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &Integer) -> LatticeVector {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_point(&self) -> RationalPoint {
        RationalPoint(self.0.iter().cloned().map(Rational::from_integer).collect())
    }
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The point as a lattice vector, if every coordinate is an integer.
    pub fn to_lattice(&self) -> Option<LatticeVector> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn dot(&self, other: &RationalPoint) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_lattice(&self, l: &LatticeVector) -> Rational {
        self.0
            .iter()
            .zip(l.coords())
            .map(|(a, b)| a * Rational::from_integer(b.clone()))
            .sum()
    }

    pub fn scale(&self, k: &Rational) -> RationalPoint {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> Integer {
        self.0.iter().fold(Integer::one(), |acc, c| acc.lcm(c.denom()))
    }
}

macro_rules! impl_vector_arith {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                debug_assert_eq!(self.dim(), rhs.dim());
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                debug_assert_eq!(self.dim(), rhs.dim());
                $ty(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.iter().map(|a| -a).collect())
            }
        }
    };
}

impl_vector_arith!(LatticeVector);
impl_vector_arith!(RationalPoint);

impl Index<usize> for LatticeVector {
    type Output = Integer;
    fn index(&self, i: usize) -> &Integer {
        &self.0[i]
    }
}

impl Index<usize> for RationalPoint {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// gcd of the absolute values of the coordinates; zero only for the zero vector.
pub fn content(v: &LatticeVector) -> Integer {
    v.coords().iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
}

/// Splits `v` as `m * w` with `w` primitive and `m = content(v)`.
pub fn primitive(v: &LatticeVector) -> Result<(LatticeVector, Integer)> {
    let m = content(v);
    if m.is_zero() {
        return Err(Error::ZeroVector);
    }
    let w = LatticeVector(v.coords().iter().map(|c| c / &m).collect());
    Ok((w, m))
}

/// Splits a nonzero rational vector `d` as `t * w` with `w` primitive in the
/// lattice and `t > 0` rational.
pub fn primitive_direction(d: &RationalPoint) -> Result<(LatticeVector, Rational)> {
    let l = d.denominator_lcm();
    let scaled = LatticeVector(
        d.coords()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
    );
    let (w, m) = primitive(&scaled)?;
    Ok((w, Rational::new(m, l)))
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &[Vec<Integer>]) -> Result<Integer> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n == 0 {
        return Ok(Integer::one());
    }
    let mut a: Vec<Vec<Integer>> = m.to_vec();
    let mut negate = false;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Integer::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// True iff the `n` vectors form a basis of the lattice `Z^n`.
pub fn is_lattice_basis(vectors: &[LatticeVector]) -> Result<bool> {
    let n = vectors.len();
    if let Some(v) = vectors.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.dim(),
        });
    }
    let rows: Vec<Vec<Integer>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    Ok(det(&rows)?.abs().is_one())
}

/// Returns `t` with `b = t * a`.
pub fn solve_scalar(a: &LatticeVector, b: &LatticeVector) -> Result<Rational> {
    solve_scalar_rational(&a.to_point(), &b.to_point())
}

pub fn solve_scalar_rational(a: &RationalPoint, b: &RationalPoint) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let pivot = a
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    let t = &b[pivot] / &a[pivot];
    let parallel = a
        .coords()
        .iter()
        .zip(b.coords())
        .all(|(x, y)| &(x * &t) == y);
    if parallel {
        Ok(t)
    } else {
        Err(Error::NotParallel)
    }
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Dimension of the affine hull of a nonempty point set (-1 is never
/// returned; an empty set has affine dimension 0 by convention here).
pub fn affine_dim<'a, I>(points: I) -> usize
where
    I: IntoIterator<Item = &'a RationalPoint>,
{
    let mut it = points.into_iter();
    let Some(base) = it.next() else {
        return 0;
    };
    let rows: Vec<Vec<Rational>> = it.map(|p| (p - base).0).collect();
    if rows.is_empty() {
        0
    } else {
        rank(&rows)
    }
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..=n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Integer normal to the hyperplane spanned by `n - 1` integer vectors in
/// `Z^n` (generalized cross product). Zero iff the vectors are dependent.
pub fn cofactor_normal(rows: &[Vec<Integer>]) -> LatticeVector {
    let n = rows.len() + 1;
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<Integer>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det(&minor).expect("minor is square");
        normal.push(if skip % 2 == 0 { d } else { -d });
    }
    LatticeVector(normal)
}

pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Parses `"p/q"`, `"-p/q"` or a bare integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<Integer>()
            .map_err(|_| Error::Parse(format!("not an exact number: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}
