//! Preprocessing by modular decomposition: the maximal modular partition,
//! quotient graphs, the recursive prime-graph collection, and the reduction
//! of twin-width computation to prime members.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::trigraph::ContractionSequence;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModularError {
    #[error("graph must be connected and co-connected with n >= 2")]
    Precondition,
    #[error("block {0} is not a module")]
    NotAModule(usize),
    #[error("blocks do not partition the vertex set")]
    NotAPartition,
}

/// Is `s` a module of `g`: every outside vertex sees all of `s` or none of
/// it?
pub fn is_module(g: &Graph, s: &VertexSet) -> bool {
    let size = s.len();
    for z in g.vertices() {
        if s.contains(z) {
            continue;
        }
        let hits = g.neighbors(z).intersection(s).len();
        if hits != 0 && hits != size {
            return false;
        }
    }
    true
}

/// Disjoint modules covering the vertex set, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPartition {
    blocks: Vec<VertexSet>,
}

impl ModularPartition {
    /// Wraps caller-supplied blocks, checking the partition and module
    /// properties.
    pub fn new(g: &Graph, mut blocks: Vec<VertexSet>) -> Result<Self, ModularError> {
        let mut cover = VertexSet::empty(g.n());
        let mut total = 0;
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(ModularError::NotAPartition);
            }
            total += b.len();
            cover.union_with(b);
            if !is_module(g, b) {
                return Err(ModularError::NotAModule(i));
            }
        }
        if total != g.n() || cover.len() != g.n() {
            return Err(ModularError::NotAPartition);
        }
        blocks.sort_by_key(|b| b.min().unwrap());
        Ok(ModularPartition { blocks })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn is_all_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}

/// Smallest module containing both `u` and `v`: close under splitters.
fn module_closure(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut s = VertexSet::empty(g.n());
    s.insert(u);
    s.insert(v);
    loop {
        let mut grew = false;
        let size = s.len();
        for z in g.vertices() {
            if s.contains(z) {
                continue;
            }
            let hits = g.neighbors(z).intersection(&s).len();
            if hits != 0 && hits != size {
                s.insert(z);
                grew = true;
            }
        }
        if !grew {
            return s;
        }
    }
}

/// The unique partition of V(G) into maximal proper modules. Requires `g`
/// and its complement to be connected (otherwise the maximal proper modules
/// overlap and no canonical partition exists) and n >= 2.
pub fn maximal_modular_partition(g: &Graph) -> Result<ModularPartition, ModularError> {
    if g.n() < 2 || !g.is_connected() || !g.complement().is_connected() {
        return Err(ModularError::Precondition);
    }
    let mut assigned = VertexSet::empty(g.n());
    let mut blocks: Vec<VertexSet> = Vec::new();
    for u in g.vertices() {
        if assigned.contains(u) {
            continue;
        }
        // union of all proper modules through u; with g and its complement
        // connected this is itself a proper module, the maximal one
        let mut block = VertexSet::empty(g.n());
        block.insert(u);
        for v in g.vertices() {
            if v == u || block.contains(v) {
                continue;
            }
            let m = module_closure(g, u, v);
            if m.len() < g.n() {
                block.union_with(&m);
            }
        }
        debug_assert!(is_module(g, &block));
        assigned.union_with(&block);
        blocks.push(block);
    }
    ModularPartition::new(g, blocks)
}

/// One vertex per block; blocks joined iff their members are. Isomorphic to
/// the induced subgraph on the blocks' minimum representatives.
pub fn quotient(g: &Graph, p: &ModularPartition) -> Graph {
    let reps: Vec<usize> = p.blocks().iter().map(|b| b.min().unwrap()).collect();
    let mut q = Graph::empty(reps.len());
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if g.has_edge(reps[i], reps[j]) {
                q.add_edge(i, j);
            }
        }
    }
    q
}

/// A member of prime(G): the graph, the map from its vertex ids back to the
/// ids of the graph the recursion started from, and a provenance note.
#[derive(Debug, Clone)]
pub struct PrimeMember {
    pub graph: Graph,
    pub vertices: Vec<usize>,
    pub note: String,
}

/// The recursive prime collection: split on components, co-components, and
/// otherwise emit the quotient and recurse into nontrivial maximal modules.
/// Trivial leftovers (single vertices) are retained with a note; members
/// with at least 4 vertices are prime.
pub fn prime_set(g: &Graph) -> Vec<PrimeMember> {
    let mut out = Vec::new();
    let identity: Vec<usize> = g.vertices().collect();
    prime_rec(g, &identity, "input", &mut out);
    out
}

fn prime_rec(g: &Graph, vmap: &[usize], note: &str, out: &mut Vec<PrimeMember>) {
    let n = g.n();
    if n <= 1 {
        out.push(PrimeMember {
            graph: g.clone(),
            vertices: vmap.to_vec(),
            note: format!("{note}: trivial"),
        });
        return;
    }
    let comps = g.components();
    if comps.len() > 1 {
        for (i, c) in comps.iter().enumerate() {
            let (sub, local) = g.induced_subgraph(c).expect("component is nonempty");
            let mapped: Vec<usize> = local.iter().map(|&v| vmap[v]).collect();
            prime_rec(&sub, &mapped, &format!("{note} > component {i}"), out);
        }
        return;
    }
    let co = g.complement();
    let cocomps = co.components();
    if cocomps.len() > 1 {
        for (i, c) in cocomps.iter().enumerate() {
            let (sub, local) = g.induced_subgraph(c).expect("co-component is nonempty");
            let mapped: Vec<usize> = local.iter().map(|&v| vmap[v]).collect();
            prime_rec(&sub, &mapped, &format!("{note} > co-component {i}"), out);
        }
        return;
    }
    let pmax = maximal_modular_partition(g).expect("connected and co-connected");
    let q = quotient(g, &pmax);
    let reps: Vec<usize> = pmax
        .blocks()
        .iter()
        .map(|b| vmap[b.min().unwrap()])
        .collect();
    out.push(PrimeMember {
        graph: q,
        vertices: reps,
        note: format!("{note} > quotient"),
    });
    for (i, b) in pmax.blocks().iter().enumerate() {
        if b.len() >= 2 {
            let (sub, local) = g.induced_subgraph(b).expect("nonempty block");
            let mapped: Vec<usize> = local.iter().map(|&v| vmap[v]).collect();
            prime_rec(&sub, &mapped, &format!("{note} > module {i}"), out);
        }
    }
}

/// Computes tww(G) as the maximum of `solver` over the prime members, and
/// assembles a full contraction sequence for `g` by chaining module-local
/// sequences, quotient sequences, and survivor clean-up contractions.
///
/// `solver` is only ever called on prime graphs with at least 4 vertices.
pub fn tww_via_primes<E>(
    g: &Graph,
    solver: &mut dyn FnMut(&Graph) -> Result<(usize, ContractionSequence), E>,
) -> Result<(usize, ContractionSequence), E> {
    let (width, steps) = solve_rec(g, &g.vertices().collect::<Vec<_>>(), solver)?;
    Ok((width, ContractionSequence::new(steps)))
}

type Steps = Vec<(usize, usize)>;

/// Returns the width and contraction steps (in original ids); the survivor
/// is the last vertex left, derivable by the caller from the steps.
fn solve_rec<E>(
    g: &Graph,
    vmap: &[usize],
    solver: &mut dyn FnMut(&Graph) -> Result<(usize, ContractionSequence), E>,
) -> Result<(usize, Steps), E> {
    let n = g.n();
    if n <= 1 {
        return Ok((0, Vec::new()));
    }
    if n <= 3 {
        return Ok((0, small_graph_steps(g, vmap)));
    }
    let comps = g.components();
    if comps.len() > 1 {
        return split_rec(g, vmap, &comps, solver);
    }
    let cocomps = g.complement().components();
    if cocomps.len() > 1 {
        return split_rec(g, vmap, &cocomps, solver);
    }
    let pmax = maximal_modular_partition(g).expect("connected and co-connected");
    let mut width = 0;
    let mut steps: Steps = Vec::new();
    let mut survivors = Vec::with_capacity(pmax.blocks().len());
    for b in pmax.blocks() {
        if b.len() == 1 {
            survivors.push(vmap[b.min().unwrap()]);
            continue;
        }
        let (sub, local) = g.induced_subgraph(b).expect("nonempty block");
        let mapped: Vec<usize> = local.iter().map(|&v| vmap[v]).collect();
        let (w, s) = solve_rec(&sub, &mapped, solver)?;
        width = width.max(w);
        survivors.push(survivor_of(&mapped, &s));
        steps.extend(s);
    }
    let q = quotient(g, &pmax);
    let (qw, qseq) = if q.n() >= 4 {
        debug_assert!(maximal_modular_partition(&q)
            .map(|p| p.is_all_singletons())
            .unwrap_or(false));
        solver(&q)?
    } else {
        // cannot happen for a valid case-3 quotient, but stay total
        (0, ContractionSequence::new(small_graph_steps(&q, &(0..q.n()).collect::<Vec<_>>())))
    };
    width = width.max(qw);
    for &(c, p) in qseq.steps() {
        steps.push((survivors[c], survivors[p]));
    }
    Ok((width, steps))
}

/// Components or co-components: solve each part, then merge the pairwise
/// non-adjacent (or uniformly adjacent) survivors without new red edges.
fn split_rec<E>(
    g: &Graph,
    vmap: &[usize],
    parts: &[VertexSet],
    solver: &mut dyn FnMut(&Graph) -> Result<(usize, ContractionSequence), E>,
) -> Result<(usize, Steps), E> {
    let mut width = 0;
    let mut steps: Steps = Vec::new();
    let mut survivors = Vec::with_capacity(parts.len());
    for part in parts {
        let (sub, local) = g.induced_subgraph(part).expect("nonempty part");
        let mapped: Vec<usize> = local.iter().map(|&v| vmap[v]).collect();
        let (w, s) = solve_rec(&sub, &mapped, solver)?;
        width = width.max(w);
        survivors.push(survivor_of(&mapped, &s));
        steps.extend(s);
    }
    for w in survivors.windows(2) {
        steps.push((w[0], w[1]));
    }
    Ok((width, steps))
}

fn survivor_of(vertices: &[usize], steps: &[(usize, usize)]) -> usize {
    let mut gone: Vec<usize> = steps.iter().map(|&(c, _)| c).collect();
    gone.sort_unstable();
    *vertices
        .iter()
        .find(|v| gone.binary_search(v).is_err())
        .expect("one survivor remains")
}

/// Any graph on at most 3 vertices contracts to a point with width 0 by
/// merging a twin pair first.
fn small_graph_steps(g: &Graph, vmap: &[usize]) -> Steps {
    let n = g.n();
    match n {
        0 | 1 => Vec::new(),
        2 => alloc::vec![(vmap[0], vmap[1])],
        3 => {
            for u in 0..3 {
                for v in u + 1..3 {
                    if g.symdiff_neighborhood(u, v).is_empty() {
                        let w = (0..3).find(|&x| x != u && x != v).unwrap();
                        return alloc::vec![(vmap[u], vmap[v]), (vmap[v], vmap[w])];
                    }
                }
            }
            unreachable!("every 3-vertex graph has a twin pair")
        }
        _ => unreachable!("small_graph_steps called with n > 3"),
    }
}
