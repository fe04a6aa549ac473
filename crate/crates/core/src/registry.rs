//! The curated registry of explicit automorphisms: the B(n,k) generator
//! constructors, every named symmetry of the four fully worked exceptional
//! graphs, the special vertex sets, and the exceptional-pair catalog.
//!
//! The named entries live in `registry.json` as cycle-notation strings so
//! they can be audited character by character. Every entry is validated
//! against its graph at load time; a bad entry aborts with its citation,
//! because everything downstream treats the registry as ground truth.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

use crate::labels::GroupLabel;
use crate::perm::Perm;
use crate::petersen::{exchange_map, rho_map, sigma_map, PetersenGraph};
use crate::vertex::{perm_from_cycles, points_from_labels};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("registry JSON is malformed: {0}")]
    Malformed(String),
    #[error("registry entry {name} has unparsable cycles: {detail}")]
    BadCycles { name: String, detail: String },
    #[error("registry entry {name} is not an automorphism of P({n},{k}) [{location}: {quote}]")]
    NotAnAutomorphism {
        name: String,
        n: usize,
        k: usize,
        location: String,
        quote: String,
    },
    #[error("registry entry {name} has a bad vertex set {set}: {detail}")]
    BadVertexSet {
        name: String,
        set: String,
        detail: String,
    },
    #[error("full_group references unknown entry {name} on P({n},{k})")]
    UnknownName { name: String, n: usize, k: usize },
    #[error("no registry data for P({n},{k})")]
    UnknownPair { n: usize, k: usize },
    #[error("parameters are out of range: need n >= 3, k >= 1, 2k < n, got ({n},{k})")]
    Inadmissible { n: usize, k: usize },
}

#[derive(Clone, Debug, Deserialize)]
pub struct Citation {
    pub location: String,
    pub quote: String,
}

#[derive(Clone, Debug)]
pub struct NamedAutomorphism {
    pub name: String,
    pub perm: Perm,
    pub citation: Citation,
    pub notes: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExceptionalStatus {
    FullyClassified,
    ExternalReference,
    Deferred,
}

#[derive(Clone, Debug)]
pub struct ExceptionalRecord {
    pub n: usize,
    pub k: usize,
    /// Isomorphism type of the full automorphism group, when classified.
    pub aut_label: Option<GroupLabel>,
    pub aut_order: usize,
    pub status: ExceptionalStatus,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    cycles: String,
    citation: Citation,
    #[serde(default)]
    notes: Option<String>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    k: usize,
    automorphisms: Vec<RawEntry>,
    #[serde(default)]
    vertex_sets: BTreeMap<String, Vec<String>>,
    full_group: Vec<String>,
}

#[derive(Deserialize)]
struct RawRegistry {
    #[allow(dead_code)]
    version: u32,
    graphs: Vec<RawGraph>,
}

pub struct GraphEntry {
    pub n: usize,
    pub k: usize,
    pub automorphisms: Vec<NamedAutomorphism>,
    pub vertex_sets: BTreeMap<String, BTreeSet<u16>>,
    full_group: Vec<String>,
}

pub struct Registry {
    graphs: BTreeMap<(usize, usize), GraphEntry>,
}

impl Registry {
    /// Parses and fully validates a registry document: cycles must parse,
    /// every permutation must be an automorphism of its graph, vertex
    /// sets must name real vertices, and full_group names must resolve.
    pub fn parse(json: &str) -> Result<Registry, RegistryError> {
        let raw: RawRegistry =
            serde_json::from_str(json).map_err(|e| RegistryError::Malformed(e.to_string()))?;
        let mut graphs = BTreeMap::new();
        for g in raw.graphs {
            let graph = PetersenGraph::build(g.n, g.k)
                .map_err(|_| RegistryError::Inadmissible { n: g.n, k: g.k })?;
            let mut automorphisms = Vec::with_capacity(g.automorphisms.len());
            for entry in g.automorphisms {
                let perm = perm_from_cycles(&entry.cycles, g.n).map_err(|e| {
                    RegistryError::BadCycles {
                        name: entry.name.clone(),
                        detail: e.to_string(),
                    }
                })?;
                if !graph.is_automorphism(&perm) {
                    return Err(RegistryError::NotAnAutomorphism {
                        name: entry.name,
                        n: g.n,
                        k: g.k,
                        location: entry.citation.location,
                        quote: entry.citation.quote,
                    });
                }
                automorphisms.push(NamedAutomorphism {
                    name: entry.name,
                    perm,
                    citation: entry.citation,
                    notes: entry.notes,
                });
            }
            let mut vertex_sets = BTreeMap::new();
            for (set_name, labels) in g.vertex_sets {
                let points = points_from_labels(labels.iter().map(String::as_str), g.n).map_err(|e| {
                    RegistryError::BadVertexSet {
                        name: format!("P({},{})", g.n, g.k),
                        set: set_name.clone(),
                        detail: e.to_string(),
                    }
                })?;
                vertex_sets.insert(set_name, points.into_iter().collect());
            }
            for name in &g.full_group {
                if !automorphisms.iter().any(|a| &a.name == name) {
                    return Err(RegistryError::UnknownName {
                        name: name.clone(),
                        n: g.n,
                        k: g.k,
                    });
                }
            }
            graphs.insert(
                (g.n, g.k),
                GraphEntry {
                    n: g.n,
                    k: g.k,
                    automorphisms,
                    vertex_sets,
                    full_group: g.full_group,
                },
            );
        }
        Ok(Registry { graphs })
    }

    pub fn graph(&self, n: usize, k: usize) -> Result<&GraphEntry, RegistryError> {
        self.graphs
            .get(&(n, k))
            .ok_or(RegistryError::UnknownPair { n, k })
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.graphs.keys().copied().collect()
    }

    pub fn named_automorphisms(
        &self,
        n: usize,
        k: usize,
    ) -> Result<&[NamedAutomorphism], RegistryError> {
        Ok(&self.graph(n, k)?.automorphisms)
    }

    pub fn named(&self, n: usize, k: usize, name: &str) -> Result<&NamedAutomorphism, RegistryError> {
        self.graph(n, k)?
            .automorphisms
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| RegistryError::UnknownName {
                name: name.to_string(),
                n,
                k,
            })
    }

    pub fn special_vertex_sets(
        &self,
        n: usize,
        k: usize,
    ) -> Result<&BTreeMap<String, BTreeSet<u16>>, RegistryError> {
        Ok(&self.graph(n, k)?.vertex_sets)
    }

    /// Generators whose closure is the full automorphism group: the named
    /// full_group entries together with the B(n,k) generators (which are
    /// automorphisms of every P(n,k), so the union generates the same
    /// group the named list does).
    pub fn full_group_generators(&self, n: usize, k: usize) -> Result<Vec<Perm>, RegistryError> {
        let entry = self.graph(n, k)?;
        let mut gens: Vec<Perm> = entry
            .full_group
            .iter()
            .map(|name| self.named(n, k, name).map(|a| a.perm.clone()))
            .collect::<Result<_, _>>()?;
        for named in bnk_generators(n, k)? {
            gens.push(named.perm);
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(gens)
    }
}

static EMBEDDED: OnceLock<Registry> = OnceLock::new();

/// The embedded registry, validated on first access.
pub fn registry() -> &'static Registry {
    EMBEDDED.get_or_init(|| {
        Registry::parse(include_str!("registry.json"))
            .unwrap_or_else(|e| panic!("embedded registry failed validation: {e}"))
    })
}

/// True when (n,k) satisfies n >= 3, k >= 1, 2k < n.
pub fn admissible(n: usize, k: usize) -> bool {
    n >= 3 && k >= 1 && 2 * k < n
}

/// The trichotomy class of k^2 mod n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum K2Class {
    /// k^2 is congruent to neither 1 nor -1.
    Generic,
    /// k^2 = 1 (mod n).
    PlusOne,
    /// k^2 = -1 (mod n).
    MinusOne,
}

pub fn k2_class(n: usize, k: usize) -> K2Class {
    let sq = (k * k) % n;
    if sq == 1 % n {
        K2Class::PlusOne
    } else if sq == (n - 1) % n {
        K2Class::MinusOne
    } else {
        K2Class::Generic
    }
}

pub const EXCEPTIONAL_PAIRS: [(usize, usize); 7] =
    [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)];

pub fn is_exceptional(n: usize, k: usize) -> bool {
    EXCEPTIONAL_PAIRS.contains(&(n, k))
}

/// The seven graphs whose automorphism group is larger than B(n,k),
/// with the isomorphism type and order of the full group. The orders of
/// the two deferred pairs are regression constants confirmed by the
/// brute-force search in the test suite.
pub fn exceptional_catalog() -> Vec<ExceptionalRecord> {
    use ExceptionalStatus::*;
    let rec = |n, k, label: Option<GroupLabel>, order, status| ExceptionalRecord {
        n,
        k,
        aut_label: label,
        aut_order: order,
        status,
    };
    vec![
        rec(
            4,
            1,
            Some(GroupLabel::DirectZ2(Box::new(GroupLabel::Sym(4)))),
            48,
            FullyClassified,
        ),
        rec(5, 2, Some(GroupLabel::Sym(5)), 120, ExternalReference),
        rec(8, 3, Some(GroupLabel::Gl23Z2), 96, FullyClassified),
        rec(
            10,
            2,
            Some(GroupLabel::DirectZ2(Box::new(GroupLabel::Alt(5)))),
            120,
            FullyClassified,
        ),
        rec(
            10,
            3,
            Some(GroupLabel::DirectZ2(Box::new(GroupLabel::Sym(5)))),
            240,
            FullyClassified,
        ),
        rec(12, 5, None, 144, Deferred),
        rec(24, 5, None, 288, Deferred),
    ]
}

/// The generators of B(n,k), the subgroup of automorphisms preserving
/// the spoke set: rho and sigma always, plus the ring exchange alpha
/// when k^2 = +-1 (mod n).
pub fn bnk_generators(n: usize, k: usize) -> Result<Vec<NamedAutomorphism>, RegistryError> {
    if !admissible(n, k) {
        return Err(RegistryError::Inadmissible { n, k });
    }
    let class = k2_class(n, k);
    let location = match class {
        K2Class::Generic => "dn",
        K2Class::PlusOne => "k2eq1",
        K2Class::MinusOne => "k2eqm1",
    };
    let cite = |quote: &str| Citation {
        location: location.to_string(),
        quote: quote.to_string(),
    };
    let mut gens = vec![
        NamedAutomorphism {
            name: "rho".to_string(),
            perm: rho_map(n),
            citation: cite("rotation advancing both rings by one step"),
            notes: None,
        },
        NamedAutomorphism {
            name: "sigma".to_string(),
            perm: sigma_map(n),
            citation: cite("reflection negating the indices of both rings"),
            notes: None,
        },
    ];
    if class != K2Class::Generic {
        gens.push(NamedAutomorphism {
            name: "alpha".to_string(),
            perm: exchange_map(n, k),
            citation: cite("ring exchange sending each outer vertex i to inner vertex ki and back"),
            notes: None,
        });
    }
    Ok(gens)
}
