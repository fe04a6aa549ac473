//! Finite permutation groups as explicit element lists, plus the dense
//! multiplication table that powers subgroup enumeration and isomorphism
//! testing.
//!
//! Everything here targets groups of order at most a few hundred, so an
//! element list and an O(m^2) table are the right tools: simple, exact,
//! and fast enough that the heavy consumers (subgroup closure, conjugacy
//! classes) run in milliseconds.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::perm::Perm;

pub const DEFAULT_CLOSURE_CAP: usize = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the size cap of {cap} elements")]
    SizeLimit { cap: usize },
    #[error("generator degrees disagree: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("a group needs at least the degree; no generators and no degree given")]
    Empty,
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("group order {order} exceeds the table cap of {cap}")]
    TableTooLarge { order: usize, cap: usize },
}

/// A concrete permutation group: a sorted, deduplicated element list
/// together with a (small) generating set. The identity is always
/// elements[0] because the identity's image list (0,1,2,...) is
/// lexicographically minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of the generators under composition.
    /// Fails with `SizeLimit` if more than `cap` elements appear.
    pub fn closure(generators: &[Perm], cap: usize) -> Result<PermGroup, GroupError> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(GroupError::Empty),
        };
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::new();
        queue.push_back(identity);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = p.mul(g);
                if !seen.contains_key(&q) {
                    if seen.len() >= cap {
                        return Err(GroupError::SizeLimit { cap });
                    }
                    seen.insert(q.clone(), ());
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort_unstable();
        let generators = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: vec![Perm::identity(degree)],
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Wraps an element list that is already a group, verifying closure
    /// and finding a small generating set greedily (each new generator is
    /// the element that grows the generated subgroup the most).
    pub fn from_elements(elements: Vec<Perm>) -> Result<PermGroup, GroupError> {
        let degree = match elements.first() {
            Some(e) => e.degree(),
            None => return Err(GroupError::Empty),
        };
        let mut sorted = elements;
        sorted.sort_unstable();
        sorted.dedup();
        for e in &sorted {
            if e.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                });
            }
        }
        // closure check: products stay inside
        let index: HashMap<&Perm, ()> = sorted.iter().map(|p| (p, ())).collect();
        for a in &sorted {
            for b in &sorted {
                if !index.contains_key(&a.mul(b)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        let generators = greedy_generators(&sorted);
        Ok(PermGroup {
            degree,
            generators,
            elements: sorted,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> &Perm {
        &self.elements[0]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// The subgroup of elements satisfying `keep`, or an error if the
    /// surviving set is not closed (i.e. `keep` was not subgroup-shaped).
    pub fn filter_subgroup(&self, keep: impl Fn(&Perm) -> bool) -> Result<PermGroup, GroupError> {
        let elements: Vec<Perm> = self.elements.iter().filter(|p| keep(p)).cloned().collect();
        PermGroup::from_elements(elements)
    }
}

fn greedy_generators(elements: &[Perm]) -> Vec<Perm> {
    let degree = elements[0].degree();
    if elements.len() == 1 {
        // the trivial group keeps the identity as its generator so that
        // closure(generators()) reproduces every group, trivial included
        return vec![Perm::identity(degree)];
    }
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    while span.len() < elements.len() {
        let mut best: Option<(usize, &Perm)> = None;
        for cand in elements {
            if span.binary_search(cand).is_ok() {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(cand.clone());
            let grown = PermGroup::closure(&trial, elements.len())
                .map(|g| g.order())
                .unwrap_or(0);
            match best {
                Some((sz, _)) if grown <= sz => {}
                _ => best = Some((grown, cand)),
            }
            if grown == elements.len() {
                break;
            }
        }
        let (_, chosen) = best.expect("non-trivial group always has a next generator");
        gens.push(chosen.clone());
        span = PermGroup::closure(&gens, elements.len())
            .expect("span stays within the target group")
            .elements()
            .to_vec();
    }
    gens
}

pub const TABLE_ORDER_CAP: usize = 480;

/// Dense multiplication table over element indices. Index 0 is the
/// identity. `mult[a * order + b]` is the index of elements[a] *
/// elements[b] (apply b first), `conj[g * order + x]` is g x g^-1.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u32>,
    conj: Vec<u16>,
}

impl GroupTable {
    pub fn from_group(group: &PermGroup) -> Result<GroupTable, GroupError> {
        let order = group.order();
        if order > TABLE_ORDER_CAP {
            return Err(GroupError::TableTooLarge {
                order,
                cap: TABLE_ORDER_CAP,
            });
        }
        let elements = group.elements();
        assert!(
            elements[0].is_identity(),
            "sorted element lists start at the identity"
        );
        let index: HashMap<&Perm, u16> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u16))
            .collect();
        let mut mult = vec![0u16; order * order];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mult[a * order + b] = index[&pa.mul(pb)];
            }
        }
        let mut inv = vec![0u16; order];
        for (a, pa) in elements.iter().enumerate() {
            inv[a] = index[&pa.inverse()];
        }
        let elem_order: Vec<u32> = elements.iter().map(|p| p.order()).collect();
        let mut conj = vec![0u16; order * order];
        for g in 0..order {
            let gi = inv[g] as usize;
            for x in 0..order {
                let gx = mult[g * order + x] as usize;
                conj[g * order + x] = mult[gx * order + gi];
            }
        }
        Ok(GroupTable {
            order,
            mult,
            inv,
            elem_order,
            conj,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * self.order + b as usize]
    }

    pub fn inv_of(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn order_of(&self, a: u16) -> u32 {
        self.elem_order[a as usize]
    }

    /// g x g^-1 by table lookup.
    pub fn conj_of(&self, g: u16, x: u16) -> u16 {
        self.conj[g as usize * self.order + x as usize]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u16).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u32 {
        self.elem_order
            .iter()
            .fold(1u64, |acc, &o| crate::perm::lcm(acc, o as u64)) as u32
    }

    pub fn center(&self) -> Vec<u16> {
        (0..self.order as u16)
            .filter(|&x| (0..self.order as u16).all(|g| self.conj_of(g, x) == x))
            .collect()
    }

    /// Element conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order as u16 {
            if seen[x as usize] {
                continue;
            }
            let mut class: Vec<u16> = (0..self.order as u16)
                .map(|g| self.conj_of(g, x))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Indices of the commutator subgroup, computed as the closure of all
    /// commutators [a,b] = a b a^-1 b^-1.
    pub fn derived_subgroup(&self) -> Vec<u16> {
        let mut gens = Vec::new();
        for a in 0..self.order as u16 {
            for b in 0..self.order as u16 {
                let ab = self.mul(a, b);
                let comm = self.mul(ab, self.mul(self.inv_of(a), self.inv_of(b)));
                gens.push(comm);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.closure_of(&gens)
    }

    /// Orders along the derived series G > G' > G'' > ... until it
    /// stabilizes; starts at |G|.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut orders = vec![self.order];
        let mut current: Vec<u16> = (0..self.order as u16).collect();
        loop {
            let sub = self.subset_table(&current);
            let derived_local = sub.derived_subgroup();
            let derived: Vec<u16> = derived_local.iter().map(|&i| current[i as usize]).collect();
            if derived.len() == current.len() {
                break;
            }
            orders.push(derived.len());
            if derived.len() == 1 {
                break;
            }
            current = derived;
        }
        orders
    }

    /// BFS closure of a set of indices under the table product.
    pub fn closure_of(&self, gens: &[u16]) -> Vec<u16> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut queue: VecDeque<u16> = VecDeque::new();
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order as u16)
            .filter(|&i| in_set[i as usize])
            .collect()
    }

    /// The multiplication table of the subgroup given by `indices`
    /// (sorted, containing 0), with local indices 0..indices.len().
    pub fn subset_table(&self, indices: &[u16]) -> GroupTable {
        let m = indices.len();
        let mut local = vec![u16::MAX; self.order];
        for (i, &g) in indices.iter().enumerate() {
            local[g as usize] = i as u16;
        }
        let mut mult = vec![0u16; m * m];
        for (a, &ga) in indices.iter().enumerate() {
            for (b, &gb) in indices.iter().enumerate() {
                let prod = local[self.mul(ga, gb) as usize];
                assert_ne!(prod, u16::MAX, "subset must be closed");
                mult[a * m + b] = prod;
            }
        }
        let inv: Vec<u16> = indices
            .iter()
            .map(|&g| local[self.inv_of(g) as usize])
            .collect();
        let elem_order: Vec<u32> = indices.iter().map(|&g| self.order_of(g)).collect();
        let mut conj = vec![0u16; m * m];
        for a in 0..m {
            let ai = inv[a] as usize;
            for x in 0..m {
                let ax = mult[a * m + x] as usize;
                conj[a * m + x] = mult[ax * m + ai];
            }
        }
        GroupTable {
            order: m,
            mult,
            inv,
            elem_order,
            conj,
        }
    }

    /// Histogram of element orders: order -> count.
    pub fn order_histogram(&self) -> BTreeMap<u32, u32> {
        let mut hist = BTreeMap::new();
        for &o in &self.elem_order {
            *hist.entry(o).or_insert(0) += 1;
        }
        hist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::petersen::{rho_map, sigma_map};

    #[test]
    fn closure_of_rotation_and_reflection_is_dihedral() {
        let g = PermGroup::closure(&[rho_map(7), sigma_map(7)], 1000).unwrap();
        assert_eq!(g.order(), 14);
        assert!(g.contains(&rho_map(7).pow(3)));
    }

    #[test]
    fn closure_respects_the_cap() {
        let err = PermGroup::closure(&[rho_map(9), sigma_map(9)], 10).unwrap_err();
        assert_eq!(err, GroupError::SizeLimit { cap: 10 });
    }

    #[test]
    fn from_elements_rejects_non_groups() {
        let rho = rho_map(5);
        let err = PermGroup::from_elements(vec![Perm::identity(10), rho.clone(), rho.pow(2)])
            .unwrap_err();
        assert_eq!(err, GroupError::NotClosed);
    }

    #[test]
    fn from_elements_recovers_small_generating_sets() {
        let full = PermGroup::closure(&[rho_map(6), sigma_map(6)], 1000).unwrap();
        let rebuilt = PermGroup::from_elements(full.elements().to_vec()).unwrap();
        assert_eq!(rebuilt.order(), 12);
        assert!(rebuilt.generators().len() <= 3);
        let span = PermGroup::closure(rebuilt.generators(), 1000).unwrap();
        assert_eq!(span.order(), 12);
    }

    #[test]
    fn table_matches_direct_composition() {
        let g = PermGroup::closure(&[rho_map(5), sigma_map(5)], 1000).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        let els = g.elements();
        for a in 0..g.order() as u16 {
            for b in 0..g.order() as u16 {
                let via_table = &els[t.mul(a, b) as usize];
                let direct = els[a as usize].mul(&els[b as usize]);
                assert_eq!(*via_table, direct);
            }
        }
        assert_eq!(t.order_of(0), 1);
    }

    #[test]
    fn dihedral_invariants() {
        let g = PermGroup::closure(&[rho_map(6), sigma_map(6)], 1000).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        assert!(!t.is_abelian());
        assert_eq!(t.center().len(), 2);
        assert_eq!(t.conjugacy_classes().len(), 6);
        assert_eq!(t.derived_series_orders(), vec![12, 3, 1]);
        // element orders are 1, 2, 3, 6, so the exponent is 6
        assert_eq!(t.exponent(), 6);
    }

    #[test]
    fn cyclic_group_is_abelian_with_full_center() {
        let g = PermGroup::closure(&[rho_map(8)], 1000).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        assert!(t.is_abelian());
        assert_eq!(t.center().len(), 8);
        assert_eq!(t.derived_series_orders(), vec![8, 1]);
    }

    #[test]
    fn closure_of_indices_matches_group_closure() {
        let g = PermGroup::closure(&[rho_map(6), sigma_map(6)], 1000).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        // find the index of rho^2
        let rho2 = rho_map(6).pow(2);
        let idx = g.elements().binary_search(&rho2).unwrap() as u16;
        let sub = t.closure_of(&[idx]);
        assert_eq!(sub.len(), 3);
    }

    #[test]
    fn subset_table_preserves_orders() {
        let g = PermGroup::closure(&[rho_map(6), sigma_map(6)], 1000).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        let rho = rho_map(6);
        let idx = g.elements().binary_search(&rho).unwrap() as u16;
        let indices = t.closure_of(&[idx]);
        let sub = t.subset_table(&indices);
        assert_eq!(sub.order(), 6);
        assert!(sub.is_abelian());
        assert_eq!(sub.order_histogram()[&6], 2);
    }
}
