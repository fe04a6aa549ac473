//! Concrete permutation models for every recognizable group label.
//!
//! Identification elsewhere reduces "is G isomorphic to X?" to an explicit
//! generator-mapping search against these models, so each construction
//! here is chosen to be obviously correct: cycles for abelian groups,
//! polygon symmetries for dihedral groups, matrices over F_3 acting on
//! the eight nonzero vectors for the linear groups, and closures of the
//! registry's audited generators for the two extension types that have no
//! familiar small model.

use crate::group::PermGroup;
use crate::labels::GroupLabel;
use crate::perm::Perm;
use crate::petersen::{exchange_map, rho_map, sigma_map};
use crate::registry::registry;

/// A permutation group isomorphic to the label's abstract type, or None
/// for Unrecognized and for labels with impossible parameters.
pub fn model_group(label: &GroupLabel) -> Option<PermGroup> {
    match label {
        GroupLabel::Trivial => Some(PermGroup::trivial(1)),
        GroupLabel::Abelian(fs) => abelian_model(fs),
        GroupLabel::Dihedral(m) => dihedral_model(*m),
        GroupLabel::Alt(m) => alternating_model(*m),
        GroupLabel::Sym(m) => symmetric_model(*m),
        GroupLabel::Sl23 => matrix_model(true),
        GroupLabel::Gl23 => matrix_model(false),
        GroupLabel::Sl23Z2 => {
            let reg = registry();
            let gens: Vec<Perm> = ["rho1@sl23z2", "rho2@sl23z2", "rho3@sl23z2"]
                .iter()
                .map(|name| reg.named(8, 3, name).ok().map(|a| a.perm.clone()))
                .collect::<Option<_>>()?;
            sized_closure(&gens, 48)
        }
        GroupLabel::Gl23Z2 => {
            let gens = registry().full_group_generators(8, 3).ok()?;
            sized_closure(&gens, 96)
        }
        GroupLabel::ZrZ4 { r, t } => {
            let (r, t) = (*r as usize, *t as usize);
            if r < 2 || (t * t + 1) % r != 0 {
                return None;
            }
            sized_closure(&[rho_map(r), exchange_map(r, t)], 4 * r)
        }
        GroupLabel::DnZ2 { n, kc } => {
            let (n, kc) = (*n as usize, *kc as usize);
            if n < 3 || (kc * kc) % n != 1 {
                return None;
            }
            sized_closure(&[rho_map(n), sigma_map(n), exchange_map(n, kc)], 4 * n)
        }
        GroupLabel::DirectZ2(inner) => {
            let inner_model = model_group(inner)?;
            let d = inner_model.degree();
            let mut gens: Vec<Perm> = inner_model
                .generators()
                .iter()
                .map(|g| doubled(g, d))
                .collect();
            let swap: Vec<u16> = (0..2 * d as u16)
                .map(|i| if (i as usize) < d { i + d as u16 } else { i - d as u16 })
                .collect();
            gens.push(Perm::from_images(swap).expect("block swap is a bijection"));
            sized_closure(&gens, 2 * inner_model.order())
        }
        GroupLabel::Unrecognized { .. } => None,
    }
}

fn sized_closure(gens: &[Perm], expected: usize) -> Option<PermGroup> {
    let group = PermGroup::closure(gens, expected).ok()?;
    (group.order() == expected).then_some(group)
}

fn abelian_model(factors: &[u32]) -> Option<PermGroup> {
    let real: Vec<u32> = factors.iter().copied().filter(|&f| f > 1).collect();
    if real.is_empty() {
        return Some(PermGroup::trivial(1));
    }
    let degree: usize = real.iter().map(|&f| f as usize).sum();
    let mut gens = Vec::with_capacity(real.len());
    let mut offset = 0u16;
    for &f in &real {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 0..f as u16 {
            images[(offset + i) as usize] = offset + (i + 1) % f as u16;
        }
        gens.push(Perm::from_images(images).expect("cycle is a bijection"));
        offset += f as u16;
    }
    let expected: usize = real.iter().map(|&f| f as usize).product();
    sized_closure(&gens, expected)
}

fn dihedral_model(m: u32) -> Option<PermGroup> {
    if m < 3 {
        return None;
    }
    let m = m as usize;
    let rot: Vec<u16> = (0..m as u16).map(|i| (i + 1) % m as u16).collect();
    let refl: Vec<u16> = (0..m as u16).map(|i| (m as u16 - i) % m as u16).collect();
    sized_closure(
        &[
            Perm::from_images(rot).expect("rotation is a bijection"),
            Perm::from_images(refl).expect("reflection is a bijection"),
        ],
        2 * m,
    )
}

fn alternating_model(m: u32) -> Option<PermGroup> {
    if m < 3 {
        return None;
    }
    let degree = m as usize;
    let gens: Vec<Perm> = (2..m as u16)
        .map(|i| Perm::from_cycles(degree, &[vec![0, 1, i]]).expect("3-cycle is valid"))
        .collect();
    let expected = (GroupLabel::Alt(m).order()).try_into().ok()?;
    sized_closure(&gens, expected)
}

fn symmetric_model(m: u32) -> Option<PermGroup> {
    if m < 2 {
        return None;
    }
    let degree = m as usize;
    let cycle: Vec<u16> = (0..m as u16).map(|i| (i + 1) % m as u16).collect();
    let gens = vec![
        Perm::from_images(cycle).expect("cycle is a bijection"),
        Perm::from_cycles(degree, &[vec![0, 1]]).expect("transposition is valid"),
    ];
    let expected = (GroupLabel::Sym(m).order()).try_into().ok()?;
    sized_closure(&gens, expected)
}

/// SL(2,3) or GL(2,3) acting on the eight nonzero vectors of F_3^2,
/// with vector (a,b) at index 3a+b-1.
fn matrix_model(det_one: bool) -> Option<PermGroup> {
    let mut elements = Vec::new();
    for m00 in 0..3u16 {
        for m01 in 0..3u16 {
            for m10 in 0..3u16 {
                for m11 in 0..3u16 {
                    let det = (3 + (m00 * m11) % 3 + 3 - (m01 * m10) % 3) % 3;
                    if det == 0 || (det_one && det != 1) {
                        continue;
                    }
                    let mut images = vec![0u16; 8];
                    for a in 0..3u16 {
                        for b in 0..3u16 {
                            if a == 0 && b == 0 {
                                continue;
                            }
                            let x = (m00 * a + m01 * b) % 3;
                            let y = (m10 * a + m11 * b) % 3;
                            images[(3 * a + b - 1) as usize] = 3 * x + y - 1;
                        }
                    }
                    elements.push(Perm::from_images(images).expect("invertible matrix acts bijectively"));
                }
            }
        }
    }
    PermGroup::from_elements(elements).ok()
}

fn doubled(g: &Perm, d: usize) -> Perm {
    let mut images = Vec::with_capacity(2 * d);
    for i in 0..d as u16 {
        images.push(g.apply(i));
    }
    for i in 0..d as u16 {
        images.push(g.apply(i) + d as u16);
    }
    Perm::from_images(images).expect("block doubling preserves bijectivity")
}
