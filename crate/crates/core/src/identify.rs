//! Isomorphism identification against the catalog models.
//!
//! Two stages: a cheap abstract fingerprint rules out almost every
//! candidate, then an explicit generator-mapping search produces a real
//! isomorphism onto the catalog model. A label is therefore a certificate,
//! never a guess; when nothing matches, the group is reported as
//! Unrecognized with a stable digest of its fingerprint.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::catalog::model_group;
use crate::group::{GroupTable, PermGroup};
use crate::labels::GroupLabel;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u32,
    pub center_order: usize,
    pub derived_orders: Vec<usize>,
    pub order_histogram: BTreeMap<u32, u32>,
    pub class_count: usize,
}

impl Fingerprint {
    pub fn of_table(t: &GroupTable) -> Fingerprint {
        Fingerprint {
            order: t.order(),
            abelian: t.is_abelian(),
            exponent: t.exponent(),
            center_order: t.center().len(),
            derived_orders: t.derived_series_orders(),
            order_histogram: t.order_histogram(),
            class_count: t.conjugacy_classes().len(),
        }
    }

    /// FNV-1a hash of the fingerprint contents; deterministic across runs
    /// and platforms.
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |v: u64| {
            for byte in v.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
        };
        eat(self.order as u64);
        eat(self.abelian as u64);
        eat(self.exponent as u64);
        eat(self.center_order as u64);
        eat(self.derived_orders.len() as u64);
        for &d in &self.derived_orders {
            eat(d as u64);
        }
        for (&o, &c) in &self.order_histogram {
            eat(o as u64);
            eat(c as u64);
        }
        eat(self.class_count as u64);
        h
    }
}

/// Identify the isomorphism type of a fully enumerated group.
pub fn identify_group(group: &PermGroup) -> GroupLabel {
    if group.order() == 1 {
        return GroupLabel::Trivial;
    }
    match GroupTable::from_group(group) {
        Ok(table) => identify_table(&table),
        Err(_) => GroupLabel::Unrecognized {
            order: group.order() as u32,
            digest: 0,
        },
    }
}

/// Table-level identification, so callers holding sub-tables avoid
/// rebuilding permutation lists.
pub fn identify_table(table: &GroupTable) -> GroupLabel {
    if table.order() == 1 {
        return GroupLabel::Trivial;
    }
    let fp = Fingerprint::of_table(table);
    if fp.abelian {
        let label = GroupLabel::Abelian(abelian_primaries(table)).canonicalized();
        if let Some(data) = model_data(&label) {
            if data.fingerprint == fp && is_isomorphic(&data, table) {
                return label;
            }
        }
        // unreachable when the order-count arithmetic is right; fall
        // through to Unrecognized rather than mislabel
    } else {
        for cand in candidate_labels(fp.order) {
            let Some(data) = model_data(&cand) else { continue };
            if data.fingerprint != fp {
                continue;
            }
            if is_isomorphic(&data, table) {
                return cand;
            }
        }
    }
    GroupLabel::Unrecognized {
        order: fp.order as u32,
        digest: fp.digest(),
    }
}

/// Prime-power cyclic factors of an abelian group, recovered from the
/// counts of elements killed by each prime power: if f(j) counts x with
/// x^(p^j) = 1 then log_p f(j) - log_p f(j-1) is the number of cyclic
/// factors of p-exponent at least j.
fn abelian_primaries(table: &GroupTable) -> Vec<u32> {
    let m = table.order();
    let mut primaries = Vec::new();
    let mut rest = m;
    let mut p = 2usize;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            primaries.extend(primaries_for(table, p as u32));
        }
        p += 1;
    }
    if rest > 1 {
        primaries.extend(primaries_for(table, rest as u32));
    }
    primaries
}

fn primaries_for(table: &GroupTable, p: u32) -> Vec<u32> {
    let log_p = |count: usize| -> u32 {
        let mut e = 0;
        let mut c = count;
        while c > 1 {
            debug_assert_eq!(c % p as usize, 0, "element counts in an abelian p-part are powers of p");
            c /= p as usize;
            e += 1;
        }
        e
    };
    // parts_ge[j] = number of cyclic factors with exponent >= j+1
    let mut parts_ge = Vec::new();
    let mut prev = 0u32;
    let mut pj = 1u64;
    loop {
        pj *= p as u64;
        let f = (0..table.order() as u16)
            .filter(|&x| pj % table.order_of(x) as u64 == 0)
            .count();
        let e = log_p(f);
        if e == prev {
            break;
        }
        parts_ge.push(e - prev);
        prev = e;
    }
    let depth = parts_ge.len();
    let mut out = Vec::new();
    for i in 0.. {
        let exponent = (0..depth).filter(|&j| parts_ge[j] > i).count();
        if exponent == 0 {
            break;
        }
        out.push(p.pow(exponent as u32));
    }
    out
}

/// Candidate labels for a non-abelian group of the given order, most
/// specific first; canonicalized and deduplicated.
fn candidate_labels(m: usize) -> Vec<GroupLabel> {
    let mut raw = Vec::new();
    for t in 4..=8u32 {
        if GroupLabel::Alt(t).order() == m as u64 {
            raw.push(GroupLabel::Alt(t));
        }
        if GroupLabel::Sym(t).order() == m as u64 {
            raw.push(GroupLabel::Sym(t));
        }
    }
    if m == 24 {
        raw.push(GroupLabel::Sl23);
    }
    if m == 48 {
        raw.push(GroupLabel::Gl23);
        raw.push(GroupLabel::Sl23Z2);
    }
    if m == 96 {
        raw.push(GroupLabel::Gl23Z2);
    }
    if m % 2 == 0 && m / 2 >= 3 {
        raw.push(GroupLabel::Dihedral((m / 2) as u32));
    }
    if m % 4 == 0 {
        let r = (m / 4) as u32;
        if r >= 2 {
            for t in 1..=r / 2 {
                if (t * t + 1) % r == 0 {
                    raw.push(GroupLabel::ZrZ4 { r, t });
                }
            }
        }
        let n = (m / 4) as u32;
        if n >= 3 {
            for kc in 2..=n / 2 {
                if (kc * kc) % n == 1 {
                    raw.push(GroupLabel::DnZ2 { n, kc });
                }
            }
        }
    }
    if m % 2 == 0 {
        for inner in candidate_labels(m / 2) {
            raw.push(GroupLabel::DirectZ2(Box::new(inner)));
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for label in raw {
        let canonical = label.canonicalized();
        if seen.insert(canonical.clone()) {
            out.push(canonical);
        }
    }
    out
}

struct ModelData {
    table: GroupTable,
    fingerprint: Fingerprint,
    gens: Vec<u16>,
    partial_orders: Vec<usize>,
    gen_orders: Vec<u32>,
    gen_class_sizes: Vec<usize>,
}

type ModelCache = Mutex<HashMap<GroupLabel, Option<Arc<ModelData>>>>;

fn model_data(label: &GroupLabel) -> Option<Arc<ModelData>> {
    static CACHE: OnceLock<ModelCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(label) {
        return hit.clone();
    }
    let built = build_model_data(label).map(Arc::new);
    cache
        .lock()
        .unwrap()
        .insert(label.clone(), built.clone());
    built
}

fn build_model_data(label: &GroupLabel) -> Option<ModelData> {
    let group = model_group(label)?;
    let table = GroupTable::from_group(&group).ok()?;
    let fingerprint = Fingerprint::of_table(&table);
    let (gens, partial_orders) = greedy_table_generators(&table);
    let gen_orders = gens.iter().map(|&g| table.order_of(g)).collect();
    let class_sizes = element_class_sizes(&table);
    let gen_class_sizes = gens.iter().map(|&g| class_sizes[g as usize]).collect();
    Some(ModelData {
        table,
        fingerprint,
        gens,
        partial_orders,
        gen_orders,
        gen_class_sizes,
    })
}

/// Small generating sequence found greedily: each step adds the element
/// (smallest index on ties) whose addition grows the generated subgroup
/// the most.
fn greedy_table_generators(table: &GroupTable) -> (Vec<u16>, Vec<usize>) {
    let m = table.order();
    let mut gens: Vec<u16> = Vec::new();
    let mut partial: Vec<usize> = Vec::new();
    let mut span = vec![0u16];
    while span.len() < m {
        let mut best: Option<(usize, u16, Vec<u16>)> = None;
        for g in 1..m as u16 {
            if span.binary_search(&g).is_ok() {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(g);
            let grown = table.closure_of(&trial);
            let better = match &best {
                Some((sz, _, _)) => grown.len() > *sz,
                None => true,
            };
            if better {
                let full = grown.len() == m;
                best = Some((grown.len(), g, grown));
                if full {
                    break;
                }
            }
        }
        let (size, g, grown) = best.expect("a proper subgroup always has an outside element");
        gens.push(g);
        partial.push(size);
        span = grown;
    }
    (gens, partial)
}

fn element_class_sizes(table: &GroupTable) -> Vec<usize> {
    let m = table.order();
    let mut sizes = vec![0usize; m];
    for class in table.conjugacy_classes() {
        for &x in &class {
            sizes[x as usize] = class.len();
        }
    }
    sizes
}

/// Explicit isomorphism search from the model onto the target. True iff
/// some assignment of generator images extends to a bijective
/// homomorphism (verified, not assumed).
fn is_isomorphic(model: &ModelData, target: &GroupTable) -> bool {
    if model.table.order() != target.order() {
        return false;
    }
    let target_class_sizes = element_class_sizes(target);
    let mut images: Vec<u16> = Vec::with_capacity(model.gens.len());
    assign(model, target, &target_class_sizes, &mut images)
}

fn assign(
    model: &ModelData,
    target: &GroupTable,
    target_class_sizes: &[usize],
    images: &mut Vec<u16>,
) -> bool {
    let i = images.len();
    if i == model.gens.len() {
        return verify_word_map(model, target, images);
    }
    for y in 0..target.order() as u16 {
        if target.order_of(y) != model.gen_orders[i]
            || target_class_sizes[y as usize] != model.gen_class_sizes[i]
        {
            continue;
        }
        images.push(y);
        if target.closure_of(images).len() == model.partial_orders[i] {
            if assign(model, target, target_class_sizes, images) {
                return true;
            }
        }
        images.pop();
    }
    false
}

/// Extends generator images to the whole model by breadth-first word
/// construction, then checks the homomorphism property on every
/// (element, generator) pair and bijectivity on the image set. Passing
/// both makes the map a genuine isomorphism: the pairwise check implies
/// multiplicativity by induction on word length, and a surjective map
/// between equal finite orders is bijective.
fn verify_word_map(model: &ModelData, target: &GroupTable, images: &[u16]) -> bool {
    let m = model.table.order();
    let unset = u16::MAX;
    let mut phi = vec![unset; m];
    phi[0] = 0;
    let mut queue = vec![0u16];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (j, &g) in model.gens.iter().enumerate() {
            let y = model.table.mul(x, g);
            if phi[y as usize] == unset {
                phi[y as usize] = target.mul(phi[x as usize], images[j]);
                queue.push(y);
            }
        }
    }
    if phi.contains(&unset) {
        return false;
    }
    for x in 0..m as u16 {
        for (j, &g) in model.gens.iter().enumerate() {
            let lhs = phi[model.table.mul(x, g) as usize];
            let rhs = target.mul(phi[x as usize], images[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    let distinct: HashSet<u16> = phi.iter().copied().collect();
    distinct.len() == m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::petersen::{exchange_map, rho_map, sigma_map};
    use crate::registry::registry;

    fn closure(gens: &[crate::perm::Perm]) -> PermGroup {
        PermGroup::closure(gens, 1000).unwrap()
    }

    #[test]
    fn identifies_cyclic_and_dihedral_groups() {
        let z8 = closure(&[rho_map(8)]);
        assert_eq!(identify_group(&z8), GroupLabel::Abelian(vec![8]));
        let d7 = closure(&[rho_map(7), sigma_map(7)]);
        assert_eq!(identify_group(&d7), GroupLabel::Dihedral(7));
    }

    #[test]
    fn identifies_abelian_invariant_factors() {
        // Z_6 x Z_2 as a subgroup of symmetries of two disjoint rings
        let model = model_group(&GroupLabel::Abelian(vec![6, 2])).unwrap();
        assert_eq!(
            identify_group(&model),
            GroupLabel::Abelian(vec![6, 2])
        );
        let z2cube = model_group(&GroupLabel::Abelian(vec![2, 2, 2])).unwrap();
        assert_eq!(
            identify_group(&z2cube),
            GroupLabel::Abelian(vec![2, 2, 2])
        );
    }

    #[test]
    fn identifies_spoke_stabilizer_types() {
        let b83 = closure(&[rho_map(8), sigma_map(8), exchange_map(8, 3)]);
        assert_eq!(identify_group(&b83), GroupLabel::DnZ2 { n: 8, kc: 3 });
        let b81 = closure(&[rho_map(8), sigma_map(8), exchange_map(8, 1)]);
        assert_eq!(
            identify_group(&b81),
            GroupLabel::DirectZ2(Box::new(GroupLabel::Dihedral(8)))
        );
        let b135 = closure(&[rho_map(13), sigma_map(13), exchange_map(13, 5)]);
        assert_eq!(identify_group(&b135), GroupLabel::ZrZ4 { r: 13, t: 5 });
    }

    #[test]
    fn identifies_matrix_groups_and_their_extension() {
        let sl = model_group(&GroupLabel::Sl23).unwrap();
        assert_eq!(identify_group(&sl), GroupLabel::Sl23);
        let gl = model_group(&GroupLabel::Gl23).unwrap();
        assert_eq!(identify_group(&gl), GroupLabel::Gl23);
        let full83 = closure(&registry().full_group_generators(8, 3).unwrap());
        assert_eq!(full83.order(), 96);
        assert_eq!(identify_group(&full83), GroupLabel::Gl23Z2);
    }

    #[test]
    fn quaternion_group_is_unrecognized() {
        let sl = model_group(&GroupLabel::Sl23).unwrap();
        // the elements of order dividing 4 form the unique Sylow
        // 2-subgroup, the quaternion group
        let q8 = sl
            .filter_subgroup(|p| 4 % p.order() == 0)
            .expect("Sylow 2-subgroup of SL(2,3) is normal, hence closed");
        assert_eq!(q8.order(), 8);
        let label = identify_group(&q8);
        match label {
            GroupLabel::Unrecognized { order: 8, .. } => {}
            other => panic!("expected Unrecognized, got {other}"),
        }
        assert!(label.to_string().starts_with("?G8#"));
    }

    #[test]
    fn distinct_order_48_groups_get_distinct_labels() {
        let labels: Vec<GroupLabel> = [
            GroupLabel::Gl23,
            GroupLabel::Sl23Z2,
            GroupLabel::DirectZ2(Box::new(GroupLabel::Sym(4))),
            GroupLabel::DirectZ2(Box::new(GroupLabel::Sl23)),
            GroupLabel::Dihedral(24),
        ]
        .iter()
        .map(|l| identify_group(&model_group(l).unwrap()))
        .collect();
        assert_eq!(labels[0], GroupLabel::Gl23);
        assert_eq!(labels[1], GroupLabel::Sl23Z2);
        assert_eq!(
            labels[2],
            GroupLabel::DirectZ2(Box::new(GroupLabel::Sym(4)))
        );
        assert_eq!(
            labels[3],
            GroupLabel::DirectZ2(Box::new(GroupLabel::Sl23))
        );
        assert_eq!(labels[4], GroupLabel::Dihedral(24));
    }

    #[test]
    fn relabeling_does_not_change_identification() {
        // D_6 built two ways: on a hexagon, and as D_3 x Z_2 blocks
        let hexagon = model_group(&GroupLabel::Dihedral(6)).unwrap();
        let blocks =
            model_group(&GroupLabel::DirectZ2(Box::new(GroupLabel::Dihedral(3)))).unwrap();
        assert_eq!(identify_group(&hexagon), GroupLabel::Dihedral(6));
        assert_eq!(identify_group(&blocks), GroupLabel::Dihedral(6));
    }

    #[test]
    fn fingerprint_digest_is_stable() {
        let d7 = closure(&[rho_map(7), sigma_map(7)]);
        let t = GroupTable::from_group(&d7).unwrap();
        let fp1 = Fingerprint::of_table(&t);
        let fp2 = Fingerprint::of_table(&t);
        assert_eq!(fp1.digest(), fp2.digest());
        assert_eq!(fp1, fp2);
    }
}
