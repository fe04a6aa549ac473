//! Vertex labels for the P(n,k) vertex set and the cycle-notation reader
//! and writer that uses them.
//!
//! Internally indices are residues mod n (so arithmetic never special-cases
//! the wrap), while the display convention is 1-based with residue 0 shown
//! as n: `u1..un` on the outer ring, `v1..vn` on the inner one. The outer
//! vertex u_i maps to point `i mod n` and v_i to `n + (i mod n)`, giving a
//! fixed enumeration of the 2n points that all permutations act on.

use std::fmt;

use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VertexParseError {
    #[error("empty vertex token")]
    Empty,
    #[error("vertex token must start with 'u' or 'v', got {0:?}")]
    BadRing(String),
    #[error("bad vertex index in {0:?}")]
    BadIndex(String),
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("unbalanced parentheses in cycle notation")]
    Unbalanced,
    #[error("unexpected character {0:?} in cycle notation")]
    UnexpectedChar(char),
    #[error("point {0} appears twice in cycle notation")]
    RepeatedPoint(String),
    #[error("cycle of length 1 around {0} (fixed points are implicit)")]
    TrivialCycle(String),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Ring {
    Outer,
    Inner,
}

/// A labeled vertex of P(n,k): u_index or v_index with the index a residue
/// mod n (0 displays as n).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub ring: Ring,
    pub index: u16,
}

impl Vertex {
    pub fn outer(index: u16) -> Vertex {
        Vertex {
            ring: Ring::Outer,
            index,
        }
    }

    pub fn inner(index: u16) -> Vertex {
        Vertex {
            ring: Ring::Inner,
            index,
        }
    }

    /// Position of this vertex in the canonical enumeration of the 2n
    /// points: outer vertices by residue, then inner vertices by residue.
    pub fn to_point(self, n: usize) -> u16 {
        debug_assert!((self.index as usize) < n);
        match self.ring {
            Ring::Outer => self.index,
            Ring::Inner => n as u16 + self.index,
        }
    }

    pub fn from_point(point: u16, n: usize) -> Vertex {
        debug_assert!((point as usize) < 2 * n);
        if (point as usize) < n {
            Vertex::outer(point)
        } else {
            Vertex::inner(point - n as u16)
        }
    }

    /// Paper-style label: residue 0 prints as n.
    pub fn display(self, n: usize) -> String {
        let shown = if self.index == 0 { n } else { self.index as usize };
        match self.ring {
            Ring::Outer => format!("u{shown}"),
            Ring::Inner => format!("v{shown}"),
        }
    }

    /// Parses "u7", "v10", also tolerating an underscore as in "u_7".
    pub fn parse(token: &str, n: usize) -> Result<Vertex, VertexParseError> {
        let token = token.trim();
        let mut chars = token.chars();
        let ring = match chars.next() {
            Some('u') | Some('U') => Ring::Outer,
            Some('v') | Some('V') => Ring::Inner,
            Some(_) => return Err(VertexParseError::BadRing(token.to_string())),
            None => return Err(VertexParseError::Empty),
        };
        let rest: String = chars.collect();
        let digits = rest.trim_start_matches('_');
        let index: usize = digits
            .parse()
            .map_err(|_| VertexParseError::BadIndex(token.to_string()))?;
        if index < 1 || index > n {
            return Err(VertexParseError::IndexOutOfRange { index, n });
        }
        Ok(Vertex {
            ring,
            index: (index % n) as u16,
        })
    }
}

pub fn vertex_count(n: usize) -> usize {
    2 * n
}

/// Reads a permutation of the 2n vertices from cycle notation such as
/// "(u1 u7)(u2 u6)(v1 v7)". Separators inside a cycle may be spaces or
/// commas, vertices not mentioned are fixed, and "()" is the identity.
/// Repeated vertices are rejected so transcription slips surface loudly.
pub fn perm_from_cycles(notation: &str, n: usize) -> Result<Perm, VertexParseError> {
    let mut cycles: Vec<Vec<u16>> = Vec::new();
    let mut seen = vec![false; vertex_count(n)];
    let mut chars = notation.chars().peekable();
    loop {
        // skip separators between cycles
        while matches!(chars.peek(), Some(c) if c.is_whitespace() || *c == ',') {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some('(') => {}
            Some(c) => return Err(VertexParseError::UnexpectedChar(c)),
        }
        let mut cycle: Vec<u16> = Vec::new();
        let mut token = String::new();
        loop {
            let c = chars.next().ok_or(VertexParseError::Unbalanced)?;
            if c == ')' || c.is_whitespace() || c == ',' {
                if !token.is_empty() {
                    let v = Vertex::parse(&token, n)?;
                    let point = v.to_point(n);
                    if seen[point as usize] {
                        return Err(VertexParseError::RepeatedPoint(v.display(n)));
                    }
                    seen[point as usize] = true;
                    cycle.push(point);
                    token.clear();
                }
                if c == ')' {
                    break;
                }
            } else {
                token.push(c);
            }
        }
        match cycle.len() {
            0 => {} // "()" contributes nothing
            1 => {
                let v = Vertex::from_point(cycle[0], n);
                return Err(VertexParseError::TrivialCycle(v.display(n)));
            }
            _ => cycles.push(cycle),
        }
    }
    Ok(Perm::from_cycles(vertex_count(n), &cycles).expect("disjointness already checked"))
}

/// Writes a permutation of the 2n vertices in canonical cycle notation:
/// cycles start at their smallest point and are sorted by it; the identity
/// prints as "()".
pub fn perm_to_cycles(p: &Perm, n: usize) -> String {
    debug_assert_eq!(p.degree(), vertex_count(n));
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        for (i, &point) in cycle.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&Vertex::from_point(point, n).display(n));
        }
        out.push(')');
    }
    out
}

/// Parses a whitespace- or comma-separated list of vertex labels into
/// points, e.g. for the named vertex sets.
pub fn points_from_labels<'a, I>(labels: I, n: usize) -> Result<Vec<u16>, VertexParseError>
where
    I: IntoIterator<Item = &'a str>,
{
    labels
        .into_iter()
        .map(|s| Vertex::parse(s, n).map(|v| v.to_point(n)))
        .collect()
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Outer => write!(f, "outer"),
            Ring::Inner => write!(f, "inner"),
        }
    }
}
