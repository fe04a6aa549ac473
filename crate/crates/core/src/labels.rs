//! Names for the isomorphism types the engine can recognize, with a
//! canonical form so that distinct constructions of the same abstract
//! group compare equal (for example D_5 x Z_2 and D_10, or
//! (Z_5 : Z_4) x Z_2 and Z_10 : Z_4).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelParseError {
    #[error("empty label")]
    Empty,
    #[error("unknown group name: {0}")]
    UnknownName(String),
    #[error("bad parameter in label: {0}")]
    BadParameter(String),
    #[error("unsupported product shape: {0}")]
    Unsupported(String),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupLabel {
    Trivial,
    /// Finite abelian group given by invariant factors, largest first,
    /// each dividing the previous.
    Abelian(Vec<u32>),
    /// Dihedral group of order 2m (symmetries of an m-gon), m >= 3.
    Dihedral(u32),
    Alt(u32),
    Sym(u32),
    Sl23,
    Gl23,
    /// SL(2,3) extended by an outer involution, order 48; distinct from
    /// both GL(2,3) and SL(2,3) x Z_2.
    Sl23Z2,
    /// GL(2,3) extended by an outer involution, order 96.
    Gl23Z2,
    /// Z_r : Z_4 with the order-4 generator inverting-squared: presented
    /// by a^r = b^4 = 1, b a b^-1 = a^t where t^2 = -1 (mod r).
    ZrZ4 { r: u32, t: u32 },
    /// D_n : Z_2 where the extra involution conjugates the rotation to
    /// its kc-th power, kc^2 = 1 (mod n) and kc != +-1.
    DnZ2 { n: u32, kc: u32 },
    /// Direct product with a central Z_2.
    DirectZ2(Box<GroupLabel>),
    /// A group the catalog has no model for; the digest is a stable hash
    /// of its abstract fingerprint so distinct unknown types stay apart.
    Unrecognized { order: u32, digest: u64 },
}

impl GroupLabel {
    pub fn order(&self) -> u64 {
        match self {
            GroupLabel::Trivial => 1,
            GroupLabel::Abelian(fs) => fs.iter().map(|&f| f as u64).product(),
            GroupLabel::Dihedral(m) => 2 * *m as u64,
            GroupLabel::Alt(m) => (factorial(*m) / 2).max(1),
            GroupLabel::Sym(m) => factorial(*m),
            GroupLabel::Sl23 => 24,
            GroupLabel::Gl23 => 48,
            GroupLabel::Sl23Z2 => 48,
            GroupLabel::Gl23Z2 => 96,
            GroupLabel::ZrZ4 { r, .. } => 4 * *r as u64,
            GroupLabel::DnZ2 { n, .. } => 4 * *n as u64,
            GroupLabel::DirectZ2(inner) => 2 * inner.order(),
            GroupLabel::Unrecognized { order, .. } => *order as u64,
        }
    }

    /// Rewrites the label into the canonical representative of its
    /// isomorphism class. Idempotent.
    pub fn canonicalized(self) -> GroupLabel {
        use GroupLabel::*;
        match self {
            Trivial | Sl23 | Gl23 | Sl23Z2 | Gl23Z2 | Unrecognized { .. } => self,
            Abelian(fs) => {
                let factors = invariant_factors(&fs);
                if factors.is_empty() {
                    Trivial
                } else {
                    Abelian(factors)
                }
            }
            Dihedral(0) | Dihedral(1) => Abelian(vec![2]),
            Dihedral(2) => Abelian(vec![2, 2]),
            Dihedral(m) => Dihedral(m),
            Alt(0..=2) => Trivial,
            Alt(3) => Abelian(vec![3]),
            Alt(m) => Alt(m),
            Sym(0) | Sym(1) => Trivial,
            Sym(2) => Abelian(vec![2]),
            Sym(3) => Dihedral(3),
            Sym(m) => Sym(m),
            ZrZ4 { r, t } => {
                let t = t % r;
                ZrZ4 { r, t: t.min(r - t) }
            }
            DnZ2 { n, kc } => {
                let kc = kc % n;
                if kc == 1 || kc == n - 1 {
                    DirectZ2(Box::new(Dihedral(n))).canonicalized()
                } else {
                    DnZ2 { n, kc: kc.min(n - kc) }
                }
            }
            DirectZ2(inner) => {
                let inner = inner.canonicalized();
                match inner {
                    Trivial => Abelian(vec![2]),
                    Abelian(mut fs) => {
                        fs.push(2);
                        Abelian(fs).canonicalized()
                    }
                    // D_m x Z_2 = D_2m when m is odd: the product of the
                    // rotation with the central involution has order 2m.
                    Dihedral(m) if m % 2 == 1 => Dihedral(2 * m),
                    // (Z_r : Z_4) x Z_2 = Z_2r : Z_4 for odd r: rho z has
                    // order 2r and b conjugates it to an odd power e with
                    // e = t (mod r), e^2 = -1 (mod 2r).
                    ZrZ4 { r, t } if r % 2 == 1 => {
                        let e = if t % 2 == 1 { t } else { t + r };
                        ZrZ4 { r: 2 * r, t: e }.canonicalized()
                    }
                    other => DirectZ2(Box::new(other)),
                }
            }
        }
    }
}

fn factorial(m: u32) -> u64 {
    (2..=m as u64).product::<u64>().max(1)
}

/// Rebuilds an invariant-factor chain from an arbitrary multiset of
/// cyclic orders: split everything into prime powers, then take the
/// largest remaining power of each prime for successive factors.
fn invariant_factors(factors: &[u32]) -> Vec<u32> {
    let mut primaries: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &f in factors {
        let mut rest = f;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                let mut power = 1;
                while rest % p == 0 {
                    power *= p;
                    rest /= p;
                }
                primaries.entry(p).or_default().push(power);
            }
            p += 1;
        }
        if rest > 1 {
            primaries.entry(rest).or_default().push(rest);
        }
    }
    for powers in primaries.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
    }
    let depth = primaries.values().map(Vec::len).max().unwrap_or(0);
    (0..depth)
        .map(|i| {
            primaries
                .values()
                .filter_map(|powers| powers.get(i))
                .product()
        })
        .collect()
}

fn write_abelian(f: &mut fmt::Formatter<'_>, factors: &[u32]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        if !first {
            write!(f, " x ")?;
        }
        first = false;
        if j - i > 1 {
            write!(f, "Z_{}^{}", factors[i], j - i)?;
        } else {
            write!(f, "Z_{}", factors[i])?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "1"),
            GroupLabel::Abelian(fs) => write_abelian(f, fs),
            GroupLabel::Dihedral(3) => write!(f, "S_3"),
            GroupLabel::Dihedral(m) => write!(f, "D_{m}"),
            GroupLabel::Alt(m) => write!(f, "A_{m}"),
            GroupLabel::Sym(m) => write!(f, "S_{m}"),
            GroupLabel::Sl23 => write!(f, "SL(2,3)"),
            GroupLabel::Gl23 => write!(f, "GL(2,3)"),
            GroupLabel::Sl23Z2 => write!(f, "SL(2,3) : Z_2"),
            GroupLabel::Gl23Z2 => write!(f, "GL(2,3) : Z_2"),
            GroupLabel::ZrZ4 { r, .. } => write!(f, "Z_{r} : Z_4"),
            GroupLabel::DnZ2 { n, .. } => write!(f, "D_{n} : Z_2"),
            GroupLabel::DirectZ2(inner) => write!(f, "{inner} x Z_2"),
            GroupLabel::Unrecognized { order, digest } => {
                write!(f, "?G{order}#{:08x}", digest)
            }
        }
    }
}

fn parse_sub(token: &str, full: &str) -> Result<u32, LabelParseError> {
    token
        .parse::<u32>()
        .map_err(|_| LabelParseError::BadParameter(full.to_string()))
}

fn parse_atom(s: &str) -> Result<GroupLabel, LabelParseError> {
    let s = s.trim();
    // tolerate the underscore-free shorthand Z4, D8, A5, S4
    if s.len() >= 2
        && matches!(s.as_bytes()[0], b'Z' | b'D' | b'A' | b'S')
        && s.as_bytes()[1..].iter().all(u8::is_ascii_digit)
    {
        return parse_atom(&format!("{}_{}", &s[..1], &s[1..]));
    }
    match s {
        "" => return Err(LabelParseError::Empty),
        "1" => return Ok(GroupLabel::Trivial),
        "SL(2,3)" => return Ok(GroupLabel::Sl23),
        "GL(2,3)" => return Ok(GroupLabel::Gl23),
        "SL(2,3) : Z_2" => return Ok(GroupLabel::Sl23Z2),
        "GL(2,3) : Z_2" => return Ok(GroupLabel::Gl23Z2),
        _ => {}
    }
    if let Some(rest) = s.strip_suffix(" : Z_4") {
        let r = parse_sub(
            rest.strip_prefix("Z_")
                .ok_or_else(|| LabelParseError::UnknownName(s.to_string()))?,
            s,
        )?;
        let t = (2..r)
            .find(|t| (t * t) % r == r - 1)
            .ok_or_else(|| LabelParseError::BadParameter(s.to_string()))?;
        return Ok(GroupLabel::ZrZ4 { r, t }.canonicalized());
    }
    if let Some(rest) = s.strip_suffix(" : Z_2") {
        let n = parse_sub(
            rest.strip_prefix("D_")
                .ok_or_else(|| LabelParseError::UnknownName(s.to_string()))?,
            s,
        )?;
        let kc = (2..n.saturating_sub(1))
            .find(|kc| (kc * kc) % n == 1)
            .ok_or_else(|| LabelParseError::BadParameter(s.to_string()))?;
        return Ok(GroupLabel::DnZ2 { n, kc }.canonicalized());
    }
    if let Some((base, exp)) = s.split_once('^') {
        let atom = parse_atom(base)?;
        let e = parse_sub(exp, s)?;
        if let GroupLabel::Abelian(fs) = &atom {
            if fs.len() == 1 {
                return Ok(GroupLabel::Abelian(vec![fs[0]; e as usize]).canonicalized());
            }
        }
        return Err(LabelParseError::Unsupported(s.to_string()));
    }
    if let Some(m) = s.strip_prefix("Z_") {
        return Ok(GroupLabel::Abelian(vec![parse_sub(m, s)?]).canonicalized());
    }
    if let Some(m) = s.strip_prefix("D_") {
        return Ok(GroupLabel::Dihedral(parse_sub(m, s)?).canonicalized());
    }
    if let Some(m) = s.strip_prefix("A_") {
        return Ok(GroupLabel::Alt(parse_sub(m, s)?).canonicalized());
    }
    if let Some(m) = s.strip_prefix("S_") {
        return Ok(GroupLabel::Sym(parse_sub(m, s)?).canonicalized());
    }
    Err(LabelParseError::UnknownName(s.to_string()))
}

impl FromStr for GroupLabel {
    type Err = LabelParseError;

    /// Accepts the display syntax plus the usual aliases (D_3 for S_3,
    /// D_2 for Z_2^2). Products parse left-associated; every factor after
    /// the first must be a power of Z_2 or an abelian factor.
    fn from_str(s: &str) -> Result<GroupLabel, LabelParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(LabelParseError::Empty);
        }
        // the special ": Z_2" names contain no " x ", so try atoms first
        if let Ok(atom) = parse_atom(s) {
            return Ok(atom);
        }
        let parts: Vec<&str> = s.split(" x ").collect();
        let mut label = parse_atom(parts[0])?;
        for part in &parts[1..] {
            let factor = parse_atom(part)?;
            label = match (label, factor) {
                (GroupLabel::Abelian(mut a), GroupLabel::Abelian(b)) => {
                    a.extend(b);
                    GroupLabel::Abelian(a)
                }
                (l, GroupLabel::Abelian(b)) if b == vec![2] => {
                    GroupLabel::DirectZ2(Box::new(l))
                }
                (l, GroupLabel::Abelian(b)) if b == vec![2, 2] => GroupLabel::DirectZ2(
                    Box::new(GroupLabel::DirectZ2(Box::new(l))),
                ),
                _ => return Err(LabelParseError::Unsupported(s.to_string())),
            };
        }
        Ok(label.canonicalized())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_times_z2_collapses_for_odd_m() {
        let l = GroupLabel::DirectZ2(Box::new(GroupLabel::Dihedral(5))).canonicalized();
        assert_eq!(l, GroupLabel::Dihedral(10));
        let even = GroupLabel::DirectZ2(Box::new(GroupLabel::Dihedral(6))).canonicalized();
        assert_eq!(even.to_string(), "D_6 x Z_2");
    }

    #[test]
    fn z5z4_times_z2_is_z10z4() {
        let l = GroupLabel::DirectZ2(Box::new(GroupLabel::ZrZ4 { r: 5, t: 2 })).canonicalized();
        assert_eq!(l, GroupLabel::ZrZ4 { r: 10, t: 3 });
        assert_eq!(l.to_string(), "Z_10 : Z_4");
        assert_eq!(l.order(), 40);
    }

    #[test]
    fn dnz2_with_trivial_twist_is_a_direct_product() {
        let l = GroupLabel::DnZ2 { n: 4, kc: 3 }.canonicalized();
        assert_eq!(
            l,
            GroupLabel::DirectZ2(Box::new(GroupLabel::Dihedral(4)))
        );
        let real = GroupLabel::DnZ2 { n: 8, kc: 3 }.canonicalized();
        assert_eq!(real.to_string(), "D_8 : Z_2");
        assert_eq!(real.order(), 32);
    }

    #[test]
    fn abelian_factors_normalize() {
        let l = GroupLabel::Abelian(vec![3, 2]).canonicalized();
        assert_eq!(l, GroupLabel::Abelian(vec![6]));
        let merged =
            GroupLabel::DirectZ2(Box::new(GroupLabel::Abelian(vec![3]))).canonicalized();
        assert_eq!(merged, GroupLabel::Abelian(vec![6]));
        let l2 = GroupLabel::Abelian(vec![2, 4]).canonicalized();
        assert_eq!(l2, GroupLabel::Abelian(vec![4, 2]));
        assert_eq!(l2.to_string(), "Z_4 x Z_2");
        assert_eq!(
            GroupLabel::Abelian(vec![2, 2, 2]).canonicalized().to_string(),
            "Z_2^3"
        );
    }

    #[test]
    fn small_name_collapses() {
        assert_eq!(
            GroupLabel::Sym(3).canonicalized(),
            GroupLabel::Dihedral(3)
        );
        assert_eq!(GroupLabel::Dihedral(3).to_string(), "S_3");
        assert_eq!(
            GroupLabel::Dihedral(2).canonicalized(),
            GroupLabel::Abelian(vec![2, 2])
        );
        assert_eq!(GroupLabel::Alt(3).canonicalized(), GroupLabel::Abelian(vec![3]));
    }

    #[test]
    fn orders_are_consistent() {
        assert_eq!(GroupLabel::Sym(5).order(), 120);
        assert_eq!(GroupLabel::Alt(5).order(), 60);
        assert_eq!(GroupLabel::Gl23Z2.order(), 96);
        assert_eq!(
            GroupLabel::DirectZ2(Box::new(GroupLabel::Sym(5))).order(),
            240
        );
    }

    #[test]
    fn labels_round_trip_through_strings() {
        let samples = [
            "1",
            "Z_10",
            "Z_4 x Z_2",
            "Z_2^3",
            "S_3",
            "D_10",
            "A_5",
            "S_5",
            "A_5 x Z_2",
            "SL(2,3)",
            "GL(2,3) : Z_2",
            "Z_10 : Z_4",
            "D_8 : Z_2",
            "D_6 x Z_2",
        ];
        for s in samples {
            let label: GroupLabel = s.parse().unwrap();
            assert_eq!(label.to_string(), s, "round trip failed for {s}");
            assert_eq!(label.clone().canonicalized(), label);
        }
    }

    #[test]
    fn aliases_parse_to_canonical_forms() {
        assert_eq!(
            "D_3".parse::<GroupLabel>().unwrap(),
            GroupLabel::Dihedral(3)
        );
        assert_eq!(
            "D_2".parse::<GroupLabel>().unwrap(),
            GroupLabel::Abelian(vec![2, 2])
        );
        assert_eq!(
            "D_5 x Z_2".parse::<GroupLabel>().unwrap(),
            GroupLabel::Dihedral(10)
        );
        assert_eq!(
            "Z_5 : Z_4 x Z_2".parse::<GroupLabel>().unwrap(),
            GroupLabel::ZrZ4 { r: 10, t: 3 }
        );
        assert_eq!(
            "Z_2 x Z_2".parse::<GroupLabel>().unwrap(),
            GroupLabel::Abelian(vec![2, 2])
        );
    }

    #[test]
    fn bad_labels_are_rejected() {
        assert!("".parse::<GroupLabel>().is_err());
        assert!("Q_8".parse::<GroupLabel>().is_err());
        assert!("Z_x".parse::<GroupLabel>().is_err());
        assert!("Z_7 : Z_4".parse::<GroupLabel>().is_err());
        assert!("A_5 x S_4".parse::<GroupLabel>().is_err());
    }
}
