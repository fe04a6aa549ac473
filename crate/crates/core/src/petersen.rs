//! Construction of the generalized Petersen graph P(n,k) and the
//! graph-level predicates the rest of the engine leans on.
//!
//! P(n,k) has an outer cycle u_1..u_n, inner vertices v_1..v_n joined by
//! v_i v_{i+k}, and spokes u_i v_i. It is defined for n >= 3, k >= 1 and
//! 2k < n, which keeps every vertex at degree exactly 3 (the inner "star"
//! may consist of gcd(n,k) separate cycles, as in P(6,2)).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::perm::Perm;
use crate::vertex::{vertex_count, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PetersenError {
    #[error("n must be at least 3, got n={n}")]
    TooFewVertices { n: usize },
    #[error("k must be at least 1, got k={k}")]
    StepTooSmall { k: usize },
    #[error("need 2k < n, got n={n}, k={k}")]
    StepTooLarge { n: usize, k: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeClass {
    Outer,
    Inner,
    Spoke,
}

impl EdgeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::Outer => "outer",
            EdgeClass::Inner => "inner",
            EdgeClass::Spoke => "spoke",
        }
    }
}

/// An unordered edge, stored with endpoints as canonical points (a < b)
/// plus its construction class. Automorphisms may permute the classes;
/// they exist for display and for the spoke-stabilizer subgroup.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub a: u16,
    pub b: u16,
    pub class: EdgeClass,
}

impl Edge {
    fn new(x: u16, y: u16, class: EdgeClass) -> Edge {
        Edge {
            a: x.min(y),
            b: x.max(y),
            class,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PetersenGraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<u16>>,
    adj_bits: Vec<u128>,
}

impl PetersenGraph {
    pub fn build(n: usize, k: usize) -> Result<PetersenGraph, PetersenError> {
        if n < 3 {
            return Err(PetersenError::TooFewVertices { n });
        }
        if k < 1 {
            return Err(PetersenError::StepTooSmall { k });
        }
        if 2 * k >= n {
            return Err(PetersenError::StepTooLarge { n, k });
        }
        let un = |i: usize| (i % n) as u16;
        let vn = |i: usize| (n + i % n) as u16;
        let mut edges = Vec::with_capacity(3 * n);
        for i in 0..n {
            edges.push(Edge::new(un(i), un(i + 1), EdgeClass::Outer));
        }
        for i in 0..n {
            edges.push(Edge::new(vn(i), vn(i + k), EdgeClass::Inner));
        }
        for i in 0..n {
            edges.push(Edge::new(un(i), vn(i), EdgeClass::Spoke));
        }
        let count = vertex_count(n);
        let mut adj = vec![Vec::with_capacity(3); count];
        let mut adj_bits = vec![0u128; count];
        for e in &edges {
            adj[e.a as usize].push(e.b);
            adj[e.b as usize].push(e.a);
            adj_bits[e.a as usize] |= 1 << e.b;
            adj_bits[e.b as usize] |= 1 << e.a;
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        debug_assert!(adj.iter().all(|row| row.len() == 3));
        Ok(PetersenGraph {
            n,
            k,
            edges,
            adj,
            adj_bits,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        vertex_count(self.n)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, point: u16) -> &[u16] {
        &self.adj[point as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u16>] {
        &self.adj
    }

    pub fn are_adjacent(&self, a: u16, b: u16) -> bool {
        self.adj_bits[a as usize] >> b & 1 == 1
    }

    /// The spoke edges as point pairs (a < b), used to define the
    /// spoke-preserving subgroup of the automorphism group.
    pub fn spokes(&self) -> Vec<(u16, u16)> {
        self.edges
            .iter()
            .filter(|e| e.class == EdgeClass::Spoke)
            .map(|e| (e.a, e.b))
            .collect()
    }

    /// True iff `p` maps edges to edges. Classes need not be preserved;
    /// several of the exceptional symmetries swap rings.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        assert_eq!(
            p.degree(),
            self.vertex_count(),
            "permutation degree must match the vertex count"
        );
        self.edges.iter().all(|e| {
            let a = p.apply(e.a);
            let b = p.apply(e.b);
            self.are_adjacent(a, b)
        })
    }

    /// True iff `p` maps the spoke set onto itself.
    pub fn preserves_spokes(&self, p: &Perm) -> bool {
        self.spokes().iter().all(|&(a, b)| {
            let (x, y) = (p.apply(a), p.apply(b));
            let (x, y) = (x.min(y), x.max(y));
            self.edges
                .iter()
                .any(|e| e.class == EdgeClass::Spoke && e.a == x && e.b == y)
        })
    }

    /// True iff some edge {a,b} has the property that no nontrivial
    /// element of `group` fixes both a and b. The scan is direct: 3n edges
    /// by |group| elements.
    pub fn has_free_edge(&self, group: &crate::group::PermGroup) -> Result<bool, PetersenError> {
        for p in group.elements() {
            assert!(
                self.is_automorphism(p),
                "has_free_edge expects a group of automorphisms"
            );
        }
        Ok(self.edges.iter().any(|e| {
            !group
                .elements()
                .iter()
                .any(|p| !p.is_identity() && p.apply(e.a) == e.a && p.apply(e.b) == e.b)
        }))
    }

    /// Graphviz DOT rendering with the construction classes as edge
    /// attributes. Output is byte-stable for a given (n,k).
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph petersen_{}_{} {{", self.n, self.k);
        for point in 0..self.vertex_count() as u16 {
            let _ = writeln!(out, "  {};", Vertex::from_point(point, self.n).display(self.n));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [class={}];",
                Vertex::from_point(e.a, self.n).display(self.n),
                Vertex::from_point(e.b, self.n).display(self.n),
                e.class.as_str()
            );
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: {n, k, vertices: [...], edges: [{a, b, class}]}.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<String> = (0..self.vertex_count() as u16)
            .map(|p| Vertex::from_point(p, self.n).display(self.n))
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "a": Vertex::from_point(e.a, self.n).display(self.n),
                    "b": Vertex::from_point(e.b, self.n).display(self.n),
                    "class": e.class.as_str(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "vertices": vertices,
            "edges": edges,
        })
    }
}

/// p(S) = S as sets of points.
pub fn setwise_invariant(p: &Perm, set: &BTreeSet<u16>) -> bool {
    set.iter().all(|&v| set.contains(&p.apply(v)))
}

/// The rotation i -> i+1 on both rings; an automorphism of every P(n,k).
pub fn rho_map(n: usize) -> Perm {
    let mut images = Vec::with_capacity(vertex_count(n));
    for i in 0..n {
        images.push(((i + 1) % n) as u16);
    }
    for i in 0..n {
        images.push((n + (i + 1) % n) as u16);
    }
    Perm::from_images(images).expect("rotation is a bijection")
}

/// The reflection i -> -i on both rings; an automorphism of every P(n,k).
pub fn sigma_map(n: usize) -> Perm {
    let mut images = Vec::with_capacity(vertex_count(n));
    for i in 0..n {
        images.push(((n - i) % n) as u16);
    }
    for i in 0..n {
        images.push((n + (n - i) % n) as u16);
    }
    Perm::from_images(images).expect("reflection is a bijection")
}

/// The ring exchange u_i -> v_{ti}, v_i -> u_{ti}. It is an automorphism
/// of P(n,k) exactly when t^2 = +-1 and t = +-k-ish conditions hold; the
/// callers that build group models pass a t with t^2 = +-1 mod n.
pub fn exchange_map(n: usize, t: usize) -> Perm {
    let mut images = vec![0u16; vertex_count(n)];
    for i in 0..n {
        images[i] = (n + (t * i) % n) as u16;
        images[n + i] = ((t * i) % n) as u16;
    }
    Perm::from_images(images).expect("ring exchange is a bijection when gcd(t,n)=1")
}

/// gcd helper exposed for parameter arithmetic in callers.
pub fn gcd(a: usize, b: usize) -> usize {
    crate::perm::gcd(a as u64, b as u64) as usize
}
