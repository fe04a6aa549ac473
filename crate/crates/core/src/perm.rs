//! Exact permutation algebra on the point set `0..degree`.
//!
//! Everything downstream (graphs, groups, the classifier) is built from
//! [`Perm`]. A permutation is stored as its image list, so composition and
//! inversion are table lookups and the canonical ordering used for
//! deterministic output is just the lexicographic order on image lists.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a bijection of 0..{degree} (problem near value {value})")]
    NotABijection { degree: usize, value: u16 },
}

/// A permutation of `0..degree`, stored as its image list: `p` maps point
/// `i` to `images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from an explicit image list, verifying that it
    /// is a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Perm, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &v in &images {
            if (v as usize) >= degree || seen[v as usize] {
                return Err(PermError::NotABijection { degree, value: v });
            }
            seen[v as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of `0..degree` from disjoint cycles given as
    /// point lists. Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Perm, PermError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= degree || touched[a as usize] {
                    return Err(PermError::NotABijection { degree, value: a });
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition for internal hot paths; degrees must agree.
    pub(crate) fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&v| self.images[v as usize])
            .collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u16;
        }
        Perm { images }
    }

    /// `self` raised to an integer power (negative powers go through the
    /// inverse).
    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `other . self . other^-1`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.mul(self).mul(&other.inverse())
    }

    /// The cycles of length at least 2, each rotated to start at its
    /// smallest point, sorted by starting point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u16 {
            if seen[start as usize] || self.images[start as usize] == start {
                seen[start as usize] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut cur = self.images[start as usize];
            while cur != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.images[cur as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, fixed points included as 1-cycles.
    pub fn cycle_type(&self) -> CycleType {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        let mut moved = 0u32;
        for cycle in self.cycles() {
            *counts.entry(cycle.len() as u32).or_insert(0) += 1;
            moved += cycle.len() as u32;
        }
        let fixed = self.degree() as u32 - moved;
        if fixed > 0 {
            *counts.entry(1).or_insert(0) += fixed;
        }
        CycleType(counts)
    }

    /// Least m >= 1 with self^m = identity; the lcm of the cycle lengths.
    pub fn order(&self) -> u32 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64)) as u32
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Multiset of cycle lengths: length -> count. Fixed points count as
/// 1-cycles, so the weighted sum of a permutation's cycle type is its
/// degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType(pub BTreeMap<u32, u32>);

impl CycleType {
    pub fn of_pairs(pairs: &[(u32, u32)]) -> CycleType {
        CycleType(pairs.iter().copied().collect())
    }

    pub fn count_of(&self, length: u32) -> u32 {
        self.0.get(&length).copied().unwrap_or(0)
    }

    /// Sum of length * count, i.e. the degree of the permutation.
    pub fn total_points(&self) -> u32 {
        self.0.iter().map(|(l, c)| l * c).sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (len, count) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{len}^{count}")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[u16]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // q sends 0 -> 1, p sends 1 -> 2, so (p . q)(0) = 2.
        let q = p(&[1, 0, 2]);
        let pp = p(&[0, 2, 1]);
        assert_eq!(pp.compose(&q).unwrap().apply(0), 2);
    }

    #[test]
    fn identity_composes_trivially() {
        let r = p(&[1, 2, 3, 0]);
        let id = Perm::identity(4);
        assert_eq!(id.compose(&r).unwrap(), r);
        assert_eq!(r.compose(&id).unwrap(), r);
        assert!(r.compose(&r.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(4);
        let b = Perm::identity(6);
        assert_eq!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { left: 4, right: 6 })
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let r = Perm::from_cycles(6, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        let t = r.cycle_type();
        assert_eq!(t.count_of(1), 1);
        assert_eq!(t.count_of(2), 1);
        assert_eq!(t.count_of(3), 1);
        assert_eq!(t.total_points(), 6);
        assert_eq!(r.order(), 6);
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let r = Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(r.pow(3), r.mul(&r).mul(&r));
        assert_eq!(r.pow(-1), r.inverse());
        assert!(r.pow(5).is_identity());
        assert_eq!(r.pow(0), Perm::identity(5));
    }
}
