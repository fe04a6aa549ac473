//! Brute-force automorphism search by simultaneous
//! individualization-refinement.
//!
//! The searcher walks a tree of ordered-partition pairs (source, target).
//! Both partitions are refined to a common equitable fixpoint; any
//! mismatch in cell sizes or neighbor-count signatures prunes the branch,
//! because an automorphism extending the current correspondence would
//! have to preserve those counts. When every cell is a singleton the
//! induced vertex map is checked edge by edge against the adjacency
//! bitrows, so the output is sound regardless of how aggressive the
//! pruning was, and the tree is complete because refinement never
//! discards a consistent assignment.
//!
//! This module is deliberately independent of the generator registry and
//! of every group-theoretic shortcut: it sees only an adjacency list.
//! That independence is what makes the cross-checks elsewhere in the
//! crate meaningful.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::Perm;
use crate::petersen::PetersenGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search exceeded the node budget of {budget} individualizations")]
    BudgetExhausted { budget: u64 },
    #[error("graph has {count} vertices, above the search cap of {cap}")]
    TooManyVertices { count: usize, cap: usize },
    #[error("collected automorphisms failed the group check: {0}")]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Maximum number of individualization steps before giving up.
    pub node_budget: u64,
    /// Hard cap on vertex count; the bitset rows are 128 bits wide.
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            node_budget: 10_000_000,
            max_vertices: 100,
        }
    }
}

type Partition = Vec<Vec<u16>>;

/// Full automorphism group of the graph, found by search alone.
pub fn automorphism_group(
    graph: &PetersenGraph,
    cfg: &SearchConfig,
) -> Result<PermGroup, SearchError> {
    automorphisms_of_adjacency(graph.adjacency(), cfg)
}

/// Automorphism group of an arbitrary undirected graph given as sorted
/// adjacency lists. Exposed separately so tests can relabel vertices and
/// confirm the search result transforms accordingly.
pub fn automorphisms_of_adjacency(
    adj: &[Vec<u16>],
    cfg: &SearchConfig,
) -> Result<PermGroup, SearchError> {
    let count = adj.len();
    if count > cfg.max_vertices || count > 128 {
        return Err(SearchError::TooManyVertices {
            count,
            cap: cfg.max_vertices.min(128),
        });
    }
    let bits = bitrows(adj);
    let mut searcher = Searcher {
        bits: &bits,
        degree: count,
        budget: cfg.node_budget,
        budget_initial: cfg.node_budget,
        found: Vec::new(),
    };
    let unit: Partition = vec![(0..count as u16).collect()];
    searcher.search(unit.clone(), unit)?;
    Ok(PermGroup::from_elements(searcher.found)?)
}

/// Equitable refinement of a single ordered partition: cells are split by
/// neighbor counts into every other cell until nothing changes. Subcells
/// replace their parent in ascending count order, so the result is
/// canonical for the given input order.
pub fn refine_partition(adj: &[Vec<u16>], partition: &[Vec<u16>]) -> Partition {
    let count = adj.len();
    let mut seen = vec![false; count];
    for cell in partition {
        for &v in cell {
            assert!(
                (v as usize) < count && !seen[v as usize],
                "partition must list each vertex exactly once"
            );
            seen[v as usize] = true;
        }
    }
    assert!(seen.iter().all(|&s| s), "partition must cover every vertex");
    let bits = bitrows(adj);
    let mut src: Partition = partition
        .iter()
        .map(|cell| {
            let mut c = cell.clone();
            c.sort_unstable();
            c
        })
        .collect();
    let mut tgt = src.clone();
    let consistent = refine_pair(&bits, &mut src, &mut tgt);
    debug_assert!(consistent, "a partition is always consistent with itself");
    src
}

fn bitrows(adj: &[Vec<u16>]) -> Vec<u128> {
    let mut bits = vec![0u128; adj.len()];
    for (v, row) in adj.iter().enumerate() {
        for &w in row {
            bits[v] |= 1 << w;
        }
    }
    bits
}

fn cell_mask(cell: &[u16]) -> u128 {
    cell.iter().fold(0u128, |m, &v| m | 1 << v)
}

/// Refine source and target partitions in lockstep. Returns false when
/// the pair is inconsistent (the branch cannot contain an automorphism).
fn refine_pair(bits: &[u128], src: &mut Partition, tgt: &mut Partition) -> bool {
    'restart: loop {
        for s in 0..src.len() {
            let src_mask = cell_mask(&src[s]);
            let tgt_mask = cell_mask(&tgt[s]);
            for d in 0..src.len() {
                let src_groups = group_by_count(bits, &src[d], src_mask);
                let tgt_groups = group_by_count(bits, &tgt[d], tgt_mask);
                if src_groups.len() != tgt_groups.len() {
                    return false;
                }
                for ((ks, vs), (kt, vt)) in src_groups.iter().zip(tgt_groups.iter()) {
                    if ks != kt || vs.len() != vt.len() {
                        return false;
                    }
                }
                if src_groups.len() > 1 {
                    splice(src, d, src_groups);
                    splice(tgt, d, tgt_groups);
                    continue 'restart;
                }
            }
        }
        return true;
    }
}

fn group_by_count(bits: &[u128], cell: &[u16], splitter_mask: u128) -> BTreeMap<u32, Vec<u16>> {
    let mut groups: BTreeMap<u32, Vec<u16>> = BTreeMap::new();
    for &v in cell {
        let count = (bits[v as usize] & splitter_mask).count_ones();
        groups.entry(count).or_default().push(v);
    }
    groups
}

fn splice(partition: &mut Partition, at: usize, groups: BTreeMap<u32, Vec<u16>>) {
    let tail = partition.split_off(at + 1);
    partition.pop();
    partition.extend(groups.into_values());
    partition.extend(tail);
}

struct Searcher<'a> {
    bits: &'a [u128],
    degree: usize,
    budget: u64,
    budget_initial: u64,
    found: Vec<Perm>,
}

impl Searcher<'_> {
    fn search(&mut self, mut src: Partition, mut tgt: Partition) -> Result<(), SearchError> {
        if !refine_pair(self.bits, &mut src, &mut tgt) {
            return Ok(());
        }
        let cell = src.iter().position(|c| c.len() > 1);
        let c = match cell {
            None => {
                self.check_leaf(&src, &tgt);
                return Ok(());
            }
            Some(c) => c,
        };
        let v = src[c][0];
        let targets = tgt[c].clone();
        for t in targets {
            if self.budget == 0 {
                return Err(SearchError::BudgetExhausted {
                    budget: self.budget_initial,
                });
            }
            self.budget -= 1;
            let next_src = individualize(&src, c, v);
            let next_tgt = individualize(&tgt, c, t);
            self.search(next_src, next_tgt)?;
        }
        Ok(())
    }

    fn check_leaf(&mut self, src: &Partition, tgt: &Partition) {
        let mut images = vec![0u16; self.degree];
        for (s_cell, t_cell) in src.iter().zip(tgt.iter()) {
            images[s_cell[0] as usize] = t_cell[0];
        }
        for v in 0..self.degree {
            let iv = images[v] as usize;
            let mut row = self.bits[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                if self.bits[iv] >> images[w] & 1 == 0 {
                    return;
                }
            }
        }
        let p = Perm::from_images(images).expect("singleton cells induce a bijection");
        self.found.push(p);
    }
}

fn individualize(partition: &Partition, c: usize, v: u16) -> Partition {
    let mut next = Vec::with_capacity(partition.len() + 1);
    for (i, cell) in partition.iter().enumerate() {
        if i == c {
            next.push(vec![v]);
            let rest: Vec<u16> = cell.iter().copied().filter(|&w| w != v).collect();
            next.push(rest);
        } else {
            next.push(cell.clone());
        }
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency_from_edges(count: usize, edges: &[(u16, u16)]) -> Vec<Vec<u16>> {
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    #[test]
    fn complete_graph_has_full_symmetric_group() {
        let adj = adjacency_from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let g = automorphisms_of_adjacency(&adj, &SearchConfig::default()).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn path_has_one_reflection() {
        let adj = adjacency_from_edges(3, &[(0, 1), (1, 2)]);
        let g = automorphisms_of_adjacency(&adj, &SearchConfig::default()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn five_cycle_is_dihedral() {
        let adj = adjacency_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let g = automorphisms_of_adjacency(&adj, &SearchConfig::default()).unwrap();
        assert_eq!(g.order(), 10);
    }

    #[test]
    fn petersen_graph_proper_has_order_120() {
        let graph = PetersenGraph::build(5, 2).unwrap();
        let g = automorphism_group(&graph, &SearchConfig::default()).unwrap();
        assert_eq!(g.order(), 120);
        for p in g.elements() {
            assert!(graph.is_automorphism(p));
        }
    }

    #[test]
    fn asymmetric_graph_yields_only_identity() {
        // a triangle with pendant paths of different lengths
        let adj = adjacency_from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (4, 5), (5, 6)],
        );
        let g = automorphisms_of_adjacency(&adj, &SearchConfig::default()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let graph = PetersenGraph::build(10, 3).unwrap();
        let cfg = SearchConfig {
            node_budget: 5,
            max_vertices: 100,
        };
        let err = automorphism_group(&graph, &cfg).unwrap_err();
        assert_eq!(err, SearchError::BudgetExhausted { budget: 5 });
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let graph = PetersenGraph::build(51, 2).unwrap();
        let err = automorphism_group(&graph, &SearchConfig::default()).unwrap_err();
        assert!(matches!(err, SearchError::TooManyVertices { count: 102, .. }));
    }

    #[test]
    fn refinement_separates_degrees() {
        // star K_{1,3}: center has degree 3, leaves degree 1
        let adj = adjacency_from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let refined = refine_partition(&adj, &[vec![0, 1, 2, 3]]);
        assert_eq!(refined, vec![vec![1, 2, 3], vec![0]]);
    }

    #[test]
    fn refinement_of_equitable_partition_is_identity() {
        let graph = PetersenGraph::build(6, 2).unwrap();
        let unit: Vec<Vec<u16>> = vec![(0..12).collect()];
        // cubic graph: the unit partition is already equitable
        assert_eq!(refine_partition(graph.adjacency(), &unit), unit);
    }
}
