//! Finite root systems in explicit integer coordinates.
//!
//! Classical families use the usual `e_i` coordinates. `E6` and `E7` are cut
//! out of `E8` and stored with every coordinate doubled, so that the
//! half-integer roots stay integral.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("unsupported root system {family} of rank {rank}")]
    Unsupported { family: Family, rank: usize },
    #[error("vector {0} is not a root of this system")]
    NotARoot(Root),
}

/// An integer coordinate vector in the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    pub fn dot(&self, other: &Root) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| i64::from(*a) * i64::from(*b))
            .sum()
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Root {
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

/// A root system together with the lexicographic order that defines positivity.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Root>,
    ordered_basis: Vec<usize>,
    members: HashSet<Root>,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem, RootSystemError> {
        let unsupported = Err(RootSystemError::Unsupported { family, rank });
        let (ambient_dim, roots) = match family {
            Family::A if (1..=MAX_CLASSICAL_RANK).contains(&rank) => (rank + 1, type_a(rank)),
            Family::B if (1..=MAX_CLASSICAL_RANK).contains(&rank) => {
                (rank, classical(rank, true, false))
            }
            Family::C if (1..=MAX_CLASSICAL_RANK).contains(&rank) => {
                (rank, classical(rank, false, true))
            }
            Family::D if (2..=MAX_CLASSICAL_RANK).contains(&rank) => {
                (rank, classical(rank, false, false))
            }
            Family::BC if (1..=MAX_CLASSICAL_RANK).contains(&rank) => {
                (rank, classical(rank, true, true))
            }
            Family::E6 if rank == 6 => (
                8,
                exceptional(&[[0, 0, 0, 0, 0, 0, 2, 2], [0, 0, 0, 0, 0, 2, 0, 2]]),
            ),
            Family::E7 if rank == 7 => (8, exceptional(&[[0, 0, 0, 0, 0, 0, 2, 2]])),
            _ => return unsupported,
        };
        let members = roots.iter().cloned().collect();
        let mut sys = RootSystem {
            family,
            rank,
            ambient_dim,
            roots,
            ordered_basis: (0..ambient_dim).collect(),
            members,
        };
        let mut roots = std::mem::take(&mut sys.roots);
        roots.sort_by(|a, b| sys.compare(a, b));
        sys.roots = roots;
        Ok(sys)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn ordered_basis(&self) -> &[usize] {
        &self.ordered_basis
    }

    /// All roots, ascending in the lexicographic order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn contains(&self, v: &Root) -> bool {
        self.members.contains(v)
    }

    /// Lexicographic comparison along `ordered_basis`.
    pub fn compare(&self, a: &Root, b: &Root) -> Ordering {
        for &i in &self.ordered_basis {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// A vector is positive when its first nonzero coordinate is positive.
    pub fn is_positive(&self, v: &Root) -> bool {
        self.ordered_basis
            .iter()
            .map(|&i| v.0[i])
            .find(|&c| c != 0)
            .is_some_and(|c| c > 0)
    }

    /// Positive roots, ascending.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| self.is_positive(r)).cloned().collect()
    }

    /// Positive roots that are not the sum of two positive roots, ascending.
    pub fn simple_roots(&self) -> Vec<Root> {
        let pos = self.positive_roots();
        let pos_set: HashSet<&Root> = pos.iter().collect();
        pos.iter()
            .filter(|r| {
                !pos.iter().any(|a| {
                    let rest = r.sub(a);
                    !rest.is_zero() && pos_set.contains(&rest)
                })
            })
            .cloned()
            .collect()
    }

    /// Coefficients of every positive root in the basis of simple roots.
    ///
    /// Built upward from the simple roots by adding one simple root at a time.
    pub fn simple_root_expansions(&self) -> HashMap<Root, Vec<u32>> {
        let simple = self.simple_roots();
        let mut out: HashMap<Root, Vec<u32>> = HashMap::new();
        let mut frontier = Vec::new();
        for (i, s) in simple.iter().enumerate() {
            let mut c = vec![0; simple.len()];
            c[i] = 1;
            out.insert(s.clone(), c);
            frontier.push(s.clone());
        }
        while let Some(r) = frontier.pop() {
            for (i, s) in simple.iter().enumerate() {
                let next = r.add(s);
                if self.contains(&next) && !out.contains_key(&next) {
                    let mut c = out[&r].clone();
                    c[i] += 1;
                    out.insert(next.clone(), c);
                    frontier.push(next);
                }
            }
        }
        out
    }

    /// The largest root in the lexicographic order.
    pub fn highest_root(&self) -> Root {
        self.roots.last().cloned().expect("root systems are nonempty")
    }

    /// `a ≠ ±b` and neither `a + b` nor `a − b` is a root.
    pub fn is_strongly_orthogonal(&self, a: &Root, b: &Root) -> Result<bool, RootSystemError> {
        for v in [a, b] {
            if !self.contains(v) {
                return Err(RootSystemError::NotARoot(v.clone()));
            }
        }
        if a == b || *a == b.neg() {
            return Ok(false);
        }
        Ok(!self.contains(&a.add(b)) && !self.contains(&a.sub(b)))
    }
}

fn unit(n: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn type_a(rank: usize) -> Vec<Root> {
    let n = rank + 1;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                out.push(Root(v));
            }
        }
    }
    out
}

/// `±e_i ± e_j` always; `±e_i` when `short`; `±2e_i` when `long`.
fn classical(n: usize, short: bool, long: bool) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for sign in [1, -1] {
            if short {
                out.push(Root(unit(n, i, sign)));
            }
            if long {
                out.push(Root(unit(n, i, 2 * sign)));
            }
        }
        for j in (i + 1)..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = si;
                v[j] = sj;
                out.push(Root(v));
            }
        }
    }
    out
}

/// Doubled `E8` roots.
fn e8_doubled() -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in (i + 1)..8 {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; 8];
                v[i] = si;
                v[j] = sj;
                out.push(Root(v));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(Root((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()));
        }
    }
    out
}

/// `E8` roots orthogonal to every vector in `perp`.
fn exceptional(perp: &[[i32; 8]]) -> Vec<Root> {
    e8_doubled()
        .into_iter()
        .filter(|r| perp.iter().all(|p| r.dot(&Root(p.to_vec())) == 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_simple_roots() {
        let c3 = RootSystem::build(Family::C, 3).unwrap();
        let simple: HashSet<Root> = c3.simple_roots().into_iter().collect();
        let expected: HashSet<Root> =
            [vec![1, -1, 0], vec![0, 1, -1], vec![0, 0, 2]].into_iter().map(Root).collect();
        assert_eq!(simple, expected);
    }

    #[test]
    fn c2_positive_order() {
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        let pos: Vec<Vec<i32>> = c2.positive_roots().into_iter().map(|r| r.0).collect();
        assert_eq!(pos, vec![vec![0, 2], vec![1, -1], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn strong_orthogonality_in_c2() {
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        let r = |v: Vec<i32>| Root(v);
        assert!(c2.is_strongly_orthogonal(&r(vec![2, 0]), &r(vec![0, 2])).unwrap());
        assert!(!c2.is_strongly_orthogonal(&r(vec![1, 1]), &r(vec![1, -1])).unwrap());
        assert!(c2.is_strongly_orthogonal(&r(vec![1, 0]), &r(vec![0, 1])).is_err());
    }

    #[test]
    fn unsupported_ranks() {
        assert!(RootSystem::build(Family::D, 1).is_err());
        assert!(RootSystem::build(Family::E6, 7).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn e7_highest_root_expansion() {
        let e7 = RootSystem::build(Family::E7, 7).unwrap();
        let exp = e7.simple_root_expansions();
        let mut coeffs = exp[&e7.highest_root()].clone();
        coeffs.sort_unstable();
        assert_eq!(coeffs, vec![1, 2, 2, 2, 3, 3, 4]);
    }
}
