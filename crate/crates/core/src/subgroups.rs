//! Complete subgroup enumeration, conjugacy classes of subgroups,
//! normalizers, and maximality, all over the dense multiplication table.
//!
//! Enumeration is by cyclic extension: seed with every cyclic subgroup,
//! then repeatedly adjoin one cyclic subgroup of prime-power order to a
//! known subgroup and close. This finds every subgroup: each element is a
//! product of its own prime-power powers, so the prime-power cyclic
//! subgroups inside any subgroup K generate K, and the chain of closures
//! leading to K stays inside K and strictly grows at each step.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::group::{GroupError, GroupTable, PermGroup};
use crate::identify::identify_table;
use crate::labels::GroupLabel;

#[derive(Debug, Error)]
pub enum SubgroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the first group is not contained in the second")]
    NotASubgroup,
}

/// One subgroup, as sorted element indices into the ambient table plus a
/// small generating set (indices again).
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub indices: Vec<u16>,
    pub gens: Vec<u16>,
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub rep_indices: Vec<u16>,
    pub class_size: usize,
    pub iso_label: GroupLabel,
    pub element_order_histogram: BTreeMap<u32, u32>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep_indices.len()
    }
}

pub struct SubgroupLattice {
    group: PermGroup,
    table: GroupTable,
    subgroups: Vec<Subgroup>,
    key_index: HashMap<Vec<u16>, usize>,
}

impl SubgroupLattice {
    pub fn build(group: &PermGroup) -> Result<SubgroupLattice, GroupError> {
        let table = GroupTable::from_group(group)?;
        let subgroups = enumerate_subgroups(&table);
        let key_index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.indices.clone(), i))
            .collect();
        Ok(SubgroupLattice {
            group: group.clone(),
            table,
            subgroups,
            key_index,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn as_perm_group(&self, sub: &Subgroup) -> PermGroup {
        let elements: Vec<_> = sub
            .indices
            .iter()
            .map(|&i| self.group.elements()[i as usize].clone())
            .collect();
        PermGroup::from_elements(elements).expect("closed index sets are groups")
    }

    /// Locates a subgroup given as a PermGroup; error if its elements are
    /// not all in the ambient group.
    pub fn locate(&self, sub: &PermGroup) -> Result<&Subgroup, SubgroupError> {
        let mut indices = Vec::with_capacity(sub.order());
        for p in sub.elements() {
            match self.group.elements().binary_search(p) {
                Ok(i) => indices.push(i as u16),
                Err(_) => return Err(SubgroupError::NotASubgroup),
            }
        }
        indices.sort_unstable();
        let at = self
            .key_index
            .get(&indices)
            .expect("every subgroup of the ambient group is enumerated");
        Ok(&self.subgroups[*at])
    }

    /// Elements normalizing the subgroup, by direct scan.
    pub fn normalizer(&self, sub: &Subgroup) -> Vec<u16> {
        (0..self.table.order() as u16)
            .filter(|&g| {
                sub.indices
                    .iter()
                    .all(|&x| sub.indices.binary_search(&self.table.conj_of(g, x)).is_ok())
            })
            .collect()
    }

    /// All subgroups strictly between sub and the whole group would
    /// contradict maximality; true iff none exists and sub is proper.
    pub fn is_maximal(&self, sub: &Subgroup) -> bool {
        let h = &sub.indices;
        if h.len() == self.table.order() {
            return false;
        }
        !self.subgroups.iter().any(|k| {
            k.indices.len() > h.len()
                && k.indices.len() < self.table.order()
                && is_subset(h, &k.indices)
        })
    }

    /// Conjugacy classes of all subgroups, canonically ordered: largest
    /// representatives first, ties broken by label text then elements.
    pub fn conjugacy_classes(&self) -> Vec<SubgroupClass> {
        let m = self.table.order();
        let mut seen = vec![false; self.subgroups.len()];
        let mut classes = Vec::new();
        for (i, sub) in self.subgroups.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut orbit = Vec::new();
            for g in 0..m as u16 {
                let mut image: Vec<u16> = sub
                    .indices
                    .iter()
                    .map(|&x| self.table.conj_of(g, x))
                    .collect();
                image.sort_unstable();
                let at = *self
                    .key_index
                    .get(&image)
                    .expect("conjugates of subgroups are subgroups and were enumerated");
                if !seen[at] {
                    seen[at] = true;
                    orbit.push(at);
                }
            }
            let sub_table = self.table.subset_table(&sub.indices);
            let iso_label = identify_table(&sub_table);
            classes.push(SubgroupClass {
                representative: self.as_perm_group(sub),
                rep_indices: sub.indices.clone(),
                class_size: orbit.len(),
                iso_label,
                element_order_histogram: sub_table.order_histogram(),
            });
        }
        classes.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| a.iso_label.to_string().cmp(&b.iso_label.to_string()))
                .then_with(|| a.rep_indices.cmp(&b.rep_indices))
        });
        classes
    }
}

fn is_subset(small: &[u16], large: &[u16]) -> bool {
    // both sorted
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn is_prime_power(mut o: u32) -> bool {
    if o < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= o {
        if o % p == 0 {
            while o % p == 0 {
                o /= p;
            }
            return o == 1;
        }
        p += 1;
    }
    true
}

fn enumerate_subgroups(table: &GroupTable) -> Vec<Subgroup> {
    let m = table.order();
    let mut list: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<Vec<u16>, ()> = HashMap::new();
    let push = |list: &mut Vec<Subgroup>,
                    seen: &mut HashMap<Vec<u16>, ()>,
                    indices: Vec<u16>,
                    gens: Vec<u16>| {
        if !seen.contains_key(&indices) {
            seen.insert(indices.clone(), ());
            list.push(Subgroup { indices, gens });
        }
    };
    push(&mut list, &mut seen, vec![0], Vec::new());
    for g in 1..m as u16 {
        let indices = table.closure_of(&[g]);
        push(&mut list, &mut seen, indices, vec![g]);
    }
    // extension candidates: one generator per distinct prime-power cyclic
    // subgroup; adjoining composite-order or duplicate generators adds
    // nothing the prime-power ones cannot reach
    let mut cand_seen: HashMap<Vec<u16>, ()> = HashMap::new();
    let mut candidates: Vec<u16> = Vec::new();
    for g in 1..m as u16 {
        if !is_prime_power(table.order_of(g)) {
            continue;
        }
        let key = table.closure_of(&[g]);
        if !cand_seen.contains_key(&key) {
            cand_seen.insert(key, ());
            candidates.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let (base_indices, base_gens) = (list[i].indices.clone(), list[i].gens.clone());
        if base_indices.len() < m {
            for &g in &candidates {
                if base_indices.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = base_gens.clone();
                gens.push(g);
                let indices = table.closure_of(&gens);
                push(&mut list, &mut seen, indices, gens);
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| {
        a.indices
            .len()
            .cmp(&b.indices.len())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    list
}

/// Every subgroup of G, as concrete groups, canonically ordered by
/// (order, element list).
pub fn all_subgroups(group: &PermGroup) -> Result<Vec<PermGroup>, GroupError> {
    let lattice = SubgroupLattice::build(group)?;
    Ok(lattice
        .subgroups()
        .iter()
        .map(|s| lattice.as_perm_group(s))
        .collect())
}

/// Conjugacy classes of subgroups, optionally only those with a given
/// isomorphism label (matched after canonicalization).
pub fn conjugacy_classes_of_subgroups(
    group: &PermGroup,
    filter: Option<&GroupLabel>,
) -> Result<Vec<SubgroupClass>, GroupError> {
    let lattice = SubgroupLattice::build(group)?;
    let mut classes = lattice.conjugacy_classes();
    if let Some(label) = filter {
        let wanted = label.clone().canonicalized();
        classes.retain(|c| c.iso_label == wanted);
    }
    Ok(classes)
}

/// True iff H is a proper subgroup of G with nothing strictly between.
pub fn is_maximal_subgroup(h: &PermGroup, g: &PermGroup) -> Result<bool, SubgroupError> {
    if !h.is_subgroup_of(g) {
        return Err(SubgroupError::NotASubgroup);
    }
    let lattice = SubgroupLattice::build(g)?;
    let sub = lattice.locate(h)?;
    Ok(lattice.is_maximal(sub))
}

/// Isomorphism labels of all subgroups with the number of conjugacy
/// classes carrying each label, ordered by increasing group order.
pub fn isomorphism_classes(group: &PermGroup) -> Result<Vec<(GroupLabel, usize)>, GroupError> {
    let lattice = SubgroupLattice::build(group)?;
    let mut counts: BTreeMap<(u64, String), (GroupLabel, usize)> = BTreeMap::new();
    for class in lattice.conjugacy_classes() {
        let key = (class.iso_label.order(), class.iso_label.to_string());
        counts
            .entry(key)
            .and_modify(|e| e.1 += 1)
            .or_insert((class.iso_label.clone(), 1));
    }
    Ok(counts.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::petersen::{exchange_map, rho_map, sigma_map};

    fn closure(gens: &[crate::perm::Perm]) -> PermGroup {
        PermGroup::closure(gens, 1000).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_four_has_three_subgroups() {
        let z4 = closure(&[rho_map(4)]);
        let subs = all_subgroups(&z4).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn dihedral_seven_has_ten_subgroups() {
        let d7 = closure(&[rho_map(7), sigma_map(7)]);
        let subs = all_subgroups(&d7).unwrap();
        assert_eq!(subs.len(), 10);
        let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &subs {
            *by_order.entry(s.order()).or_insert(0) += 1;
        }
        assert_eq!(by_order, BTreeMap::from([(1, 1), (2, 7), (7, 1), (14, 1)]));
    }

    #[test]
    fn lagrange_holds_for_every_subgroup() {
        let b83 = closure(&[rho_map(8), sigma_map(8), exchange_map(8, 3)]);
        for sub in all_subgroups(&b83).unwrap() {
            assert_eq!(b83.order() % sub.order(), 0);
            assert!(sub.is_subgroup_of(&b83));
        }
    }

    #[test]
    fn conjugacy_classes_partition_the_subgroups() {
        let d6 = closure(&[rho_map(6), sigma_map(6)]);
        let lattice = SubgroupLattice::build(&d6).unwrap();
        let classes = lattice.conjugacy_classes();
        let total: usize = classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total, lattice.count());
        // D_6 has 16 subgroups in 10 conjugacy classes
        assert_eq!(lattice.count(), 16);
        assert_eq!(classes.len(), 10);
    }

    #[test]
    fn normalizer_index_equals_class_size() {
        let b83 = closure(&[rho_map(8), sigma_map(8), exchange_map(8, 3)]);
        let lattice = SubgroupLattice::build(&b83).unwrap();
        let classes = lattice.conjugacy_classes();
        for class in &classes {
            let sub = lattice.locate(&class.representative).unwrap();
            let norm = lattice.normalizer(sub);
            assert_eq!(
                class.class_size * norm.len(),
                b83.order(),
                "orbit-stabilizer failed for a subgroup of order {}",
                class.order()
            );
        }
    }

    #[test]
    fn maximality_in_a_cyclic_group() {
        let z12 = closure(&[rho_map(12)]);
        let z6 = closure(&[rho_map(12).pow(2)]);
        let z4 = closure(&[rho_map(12).pow(3)]);
        let z2 = closure(&[rho_map(12).pow(6)]);
        assert!(is_maximal_subgroup(&z6, &z12).unwrap());
        assert!(is_maximal_subgroup(&z4, &z12).unwrap());
        assert!(!is_maximal_subgroup(&z2, &z12).unwrap());
        assert!(!is_maximal_subgroup(&z12, &z12).unwrap());
        let d7 = closure(&[rho_map(7), sigma_map(7)]);
        assert!(is_maximal_subgroup(&z6, &d7).is_err());
    }

    #[test]
    fn isomorphism_classes_of_z2() {
        let z2 = closure(&[sigma_map(3)]);
        let classes = isomorphism_classes(&z2).unwrap();
        assert_eq!(
            classes,
            vec![
                (GroupLabel::Trivial, 1),
                (GroupLabel::Abelian(vec![2]), 1)
            ]
        );
    }

    #[test]
    fn filter_by_label_selects_matching_classes() {
        let d6 = closure(&[rho_map(6), sigma_map(6)]);
        let z2_classes =
            conjugacy_classes_of_subgroups(&d6, Some(&GroupLabel::Abelian(vec![2]))).unwrap();
        // involutions: rho^3 (central), three reflections of one kind,
        // three of the other: 7 subgroups in 3 classes
        assert_eq!(z2_classes.len(), 3);
        let total: usize = z2_classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total, 7);
        for class in &z2_classes {
            assert_eq!(class.iso_label, GroupLabel::Abelian(vec![2]));
            assert_eq!(class.element_order_histogram[&2], 1);
        }
    }

    #[test]
    fn conjugates_share_label_and_histogram() {
        let b83 = closure(&[rho_map(8), sigma_map(8), exchange_map(8, 3)]);
        let lattice = SubgroupLattice::build(&b83).unwrap();
        let table = lattice.table();
        for sub in lattice.subgroups() {
            // conjugate by a fixed non-member and compare invariants
            let g = 5u16;
            let mut image: Vec<u16> = sub.indices.iter().map(|&x| table.conj_of(g, x)).collect();
            image.sort_unstable();
            let a = identify_table(&table.subset_table(&sub.indices));
            let b = identify_table(&table.subset_table(&image));
            assert_eq!(a, b);
        }
    }
}
