//! Classical root systems in simple-root coordinates, Weyl orbits and the
//! GKM graphs of coadjoint orbits.
//!
//! Coordinates are taken in the basis of simple roots, so the lattice is
//! `Z^d` and every reflection is exact rational arithmetic with the
//! symmetrized form below.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Integer, LatticeVector, Rational, RationalPoint};
use crate::gkm::{GkmGraph, GkmVertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    G,
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            "D" | "d" => Ok(Self::D),
            "G" | "g" | "G2" | "g2" => Ok(Self::G),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::G => "G",
        };
        f.write_str(s)
    }
}

pub const MAX_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// `cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)`.
    pub cartan: Vec<Vec<Integer>>,
    /// Symmetrized bilinear form on the simple roots.
    pub form: Vec<Vec<Rational>>,
    pub positive_roots: Vec<LatticeVector>,
}

fn symmetric_form(t: RootType, d: usize) -> Vec<Vec<Rational>> {
    let mut f = vec![vec![Rational::zero(); d]; d];
    let link = |f: &mut Vec<Vec<Rational>>, i: usize, j: usize, x: Rational| {
        f[i][j] = x.clone();
        f[j][i] = x;
    };
    match t {
        RootType::A | RootType::D => {
            for i in 0..d {
                f[i][i] = rat(2, 1);
            }
            let chain = if t == RootType::D { d - 1 } else { d };
            for i in 0..chain.saturating_sub(1) {
                link(&mut f, i, i + 1, rat(-1, 1));
            }
            if t == RootType::D {
                link(&mut f, d - 3, d - 1, rat(-1, 1));
            }
        }
        RootType::B => {
            for i in 0..d - 1 {
                f[i][i] = rat(2, 1);
            }
            f[d - 1][d - 1] = rat(1, 1);
            for i in 0..d - 1 {
                link(&mut f, i, i + 1, rat(-1, 1));
            }
        }
        RootType::C => {
            for i in 0..d - 1 {
                f[i][i] = rat(1, 1);
            }
            f[d - 1][d - 1] = rat(2, 1);
            for i in 0..d.saturating_sub(2) {
                link(&mut f, i, i + 1, rat(-1, 2));
            }
            link(&mut f, d - 2, d - 1, rat(-1, 1));
        }
        RootType::G => {
            f[0][0] = rat(2, 3);
            f[1][1] = rat(2, 1);
            link(&mut f, 0, 1, rat(-1, 1));
        }
    }
    f
}

fn supported(t: RootType, d: usize) -> bool {
    match t {
        RootType::A => (1..=MAX_RANK).contains(&d),
        RootType::B | RootType::C => (2..=MAX_RANK).contains(&d),
        RootType::D => (4..=MAX_RANK).contains(&d),
        RootType::G => d == 2,
    }
}

fn factorial(n: usize) -> Integer {
    (1..=n).map(Integer::from).product()
}

impl RootSystem {
    pub fn build(root_type: RootType, rank: usize) -> Result<Self> {
        if !supported(root_type, rank) {
            return Err(Error::UnsupportedType(format!("{root_type}{rank}")));
        }
        let form = symmetric_form(root_type, rank);
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| (rat(2, 1) * &form[i][j] / &form[j][j]).to_integer())
                    .collect()
            })
            .collect();
        let mut rs = Self {
            root_type,
            rank,
            cartan,
            form,
            positive_roots: Vec::new(),
        };
        let simple: Vec<RationalPoint> = (0..rank)
            .map(|i| LatticeVector::unit(rank, i).to_point())
            .collect();
        let mut roots = BTreeSet::new();
        for s in &simple {
            for p in rs.orbit_under(s, &(0..rank).collect::<Vec<_>>()) {
                roots.insert(p);
            }
        }
        rs.positive_roots = roots
            .into_iter()
            .filter(|r| r.coords().iter().all(|c| !c.is_negative()))
            .map(|r| r.to_lattice().expect("roots are integral"))
            .collect();
        rs.positive_roots
            .sort_by(|a, b| (height(a), a).cmp(&(height(b), b)));
        Ok(rs)
    }

    pub fn inner(&self, x: &RationalPoint, y: &RationalPoint) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                acc += &x[i] * &self.form[i][j] * &y[j];
            }
        }
        acc
    }

    pub fn simple_root(&self, i: usize) -> LatticeVector {
        LatticeVector::unit(self.rank, i)
    }

    pub fn is_root(&self, beta: &LatticeVector) -> bool {
        self.positive_roots.contains(beta) || self.positive_roots.contains(&-beta)
    }

    fn reflect_unchecked(&self, beta: &RationalPoint, x: &RationalPoint) -> RationalPoint {
        let t = rat(2, 1) * self.inner(x, beta) / self.inner(beta, beta);
        x - &beta.scale(&t)
    }

    /// `s_beta(x) = x - 2 (x, beta) / (beta, beta) beta`.
    pub fn reflect(&self, beta: &LatticeVector, x: &RationalPoint) -> Result<RationalPoint> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot);
        }
        Ok(self.reflect_unchecked(&beta.to_point(), x))
    }

    fn orbit_under(&self, p0: &RationalPoint, gens: &[usize]) -> Vec<RationalPoint> {
        let gens: Vec<RationalPoint> = gens
            .iter()
            .map(|&i| self.simple_root(i).to_point())
            .collect();
        let mut seen = BTreeSet::from([p0.clone()]);
        let mut order = vec![p0.clone()];
        let mut queue = VecDeque::from([p0.clone()]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = self.reflect_unchecked(g, &p);
                if seen.insert(q.clone()) {
                    order.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        order
    }

    /// Breadth-first closure of `{p0}` under the simple reflections.
    pub fn weyl_orbit(&self, p0: &RationalPoint) -> Vec<RationalPoint> {
        self.orbit_under(p0, &(0..self.rank).collect::<Vec<_>>())
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        match subset.iter().find(|&&i| i >= self.rank) {
            Some(i) => Err(Error::InvalidArgument(format!(
                "simple root index {i} out of range for rank {}",
                self.rank
            ))),
            None => Ok(()),
        }
    }

    /// Positive roots supported on the simple roots in `subset`.
    pub fn span(&self, subset: &[usize]) -> Vec<LatticeVector> {
        self.positive_roots
            .iter()
            .filter(|r| (0..self.rank).all(|i| subset.contains(&i) || r[i].is_zero()))
            .cloned()
            .collect()
    }

    /// `R+` minus the span of `subset`.
    pub fn complement(&self, subset: &[usize]) -> Vec<LatticeVector> {
        let span = self.span(subset);
        self.positive_roots
            .iter()
            .filter(|r| !span.contains(r))
            .cloned()
            .collect()
    }

    /// `p0 = -sum of R+ outside the span of subset`, with its defining
    /// properties checked.
    pub fn base_point(&self, subset: &[usize]) -> Result<RationalPoint> {
        self.check_subset(subset)?;
        let rest = self.complement(subset);
        let p0 = -&rest
            .iter()
            .fold(RationalPoint::origin(self.rank), |acc, r| &acc + &r.to_point());
        for &i in subset {
            if self.reflect_unchecked(&self.simple_root(i).to_point(), &p0) != p0 {
                return Err(Error::DegenerateBasePoint(format!(
                    "moved by simple reflection {i}"
                )));
            }
        }
        for r in &rest {
            if !self.inner(&p0, &r.to_point()).is_negative() {
                return Err(Error::DegenerateBasePoint(format!(
                    "pairing with {r} is not negative"
                )));
            }
        }
        Ok(p0)
    }

    pub fn weyl_group_order(&self) -> Integer {
        component_order(self.root_type_of(&(0..self.rank).collect::<Vec<_>>()))
    }

    /// Order of the parabolic subgroup generated by the reflections in
    /// `subset`, as a product over connected components of its diagram.
    pub fn parabolic_order(&self, subset: &[usize]) -> Integer {
        let nodes: BTreeSet<usize> = subset.iter().copied().collect();
        let mut left = nodes.clone();
        let mut total = Integer::one();
        while let Some(&start) = left.iter().next() {
            let mut comp = vec![start];
            left.remove(&start);
            let mut i = 0;
            while i < comp.len() {
                let a = comp[i];
                let next: Vec<usize> = left
                    .iter()
                    .copied()
                    .filter(|&b| !self.cartan[a][b].is_zero())
                    .collect();
                for b in next {
                    left.remove(&b);
                    comp.push(b);
                }
                i += 1;
            }
            total *= component_order(self.root_type_of(&comp));
        }
        total
    }

    /// Classifies a connected set of simple roots by its Cartan entries.
    fn root_type_of(&self, comp: &[usize]) -> (RootType, usize) {
        let k = comp.len();
        let mut max_bond = 0;
        let mut branch = false;
        for &a in comp {
            let mut degree = 0;
            for &b in comp {
                if a != b && !self.cartan[a][b].is_zero() {
                    degree += 1;
                    let bond = (&self.cartan[a][b] * &self.cartan[b][a])
                        .to_u32()
                        .unwrap_or(0);
                    max_bond = max_bond.max(bond);
                }
            }
            branch |= degree >= 3;
        }
        match (max_bond, branch) {
            (3, _) => (RootType::G, 2),
            (2, _) => (RootType::B, k),
            (_, true) => (RootType::D, k),
            _ => (RootType::A, k),
        }
    }

    /// Vertices `W p0`, edges `{p, s_beta p}` for every positive `beta`
    /// moving `p`.
    pub fn coadjoint_graph(&self, subset: &[usize]) -> Result<GkmGraph> {
        let p0 = self.base_point(subset)?;
        self.orbit_graph(&p0)
    }

    /// Same construction from an arbitrary point; the degree is the number
    /// of positive roots not orthogonal to `p0`.
    pub fn orbit_graph(&self, p0: &RationalPoint) -> Result<GkmGraph> {
        if p0.dim() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: p0.dim(),
            });
        }
        if p0.is_zero() {
            return Err(Error::DegenerateBasePoint("zero point".into()));
        }
        let orbit = self.weyl_orbit(p0);
        let index: BTreeMap<&RationalPoint, usize> =
            orbit.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut edges = BTreeSet::new();
        for (i, p) in orbit.iter().enumerate() {
            for beta in &self.positive_roots {
                let q = self.reflect_unchecked(&beta.to_point(), p);
                if q != *p {
                    let j = index[&q];
                    edges.insert((i.min(j), i.max(j)));
                }
            }
        }
        let vertices = orbit
            .iter()
            .enumerate()
            .map(|(i, p)| GkmVertex {
                id: format!("p{i}"),
                coords: p.clone(),
            })
            .collect();
        let degree = self
            .positive_roots
            .iter()
            .filter(|b| !self.inner(p0, &b.to_point()).is_zero())
            .count();
        GkmGraph::new(self.rank, degree, vertices, edges.into_iter().collect())
    }
}

fn height(r: &LatticeVector) -> Integer {
    r.coords().iter().sum()
}

fn component_order((t, k): (RootType, usize)) -> Integer {
    match t {
        RootType::A => factorial(k + 1),
        RootType::B | RootType::C => (Integer::one() << k) * factorial(k),
        RootType::D => (Integer::one() << (k - 1)) * factorial(k),
        RootType::G => Integer::from(12),
    }
}
