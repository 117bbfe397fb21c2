//! Brute-force twin-width oracle for small graphs: depth-first search over
//! all (child, parent) contraction choices, one decision search per
//! candidate width. Kept independent of the encodings and of the bounds
//! module so it can act as the reference the rest of the crate is tested
//! against.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::Graph;
use crate::trigraph::ContractionSequence;

/// Hard ceiling: the state space beyond 9 vertices is out of desk range.
pub const MAX_ORACLE_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("oracle supports at most {MAX_ORACLE_VERTICES} vertices, got {0}")]
pub struct OracleTooLarge(pub usize);

/// Bit-packed trigraph over at most 16 vertices.
#[derive(Clone)]
struct Mini {
    n: usize,
    live: u16,
    black: [u16; 16],
    red: [u16; 16],
}

impl Mini {
    fn from_graph(g: &Graph) -> Self {
        let mut black = [0u16; 16];
        for (u, v) in g.edges() {
            black[u] |= 1 << v;
            black[v] |= 1 << u;
        }
        Mini {
            n: g.n(),
            live: if g.n() == 16 { u16::MAX } else { (1u16 << g.n()) - 1 },
            black,
            red: [0u16; 16],
        }
    }

    fn contract(&self, child: usize, parent: usize) -> Mini {
        let mut t = self.clone();
        let cb = 1u16 << child;
        let pb = 1u16 << parent;
        let nc = (t.black[child] | t.red[child]) & !pb;
        let np = (t.black[parent] | t.red[parent]) & !cb;
        let new_black = t.black[child] & t.black[parent] & !cb & !pb;
        let new_red = (nc | np) & !new_black;
        let mut touched = nc | np;
        while touched != 0 {
            let x = touched.trailing_zeros() as usize;
            touched &= touched - 1;
            t.black[x] &= !(cb | pb);
            t.red[x] &= !(cb | pb);
            if new_black & (1 << x) != 0 {
                t.black[x] |= pb;
            } else if new_red & (1 << x) != 0 {
                t.red[x] |= pb;
            }
        }
        t.black[parent] = new_black;
        t.red[parent] = new_red;
        t.black[child] = 0;
        t.red[child] = 0;
        t.live &= !cb;
        t
    }

    fn max_red_degree(&self) -> usize {
        let mut live = self.live;
        let mut best = 0;
        while live != 0 {
            let v = live.trailing_zeros() as usize;
            live &= live - 1;
            best = best.max(self.red[v].count_ones() as usize);
        }
        best
    }

    fn key(&self) -> [u16; 33] {
        let mut k = [0u16; 33];
        k[0] = self.live;
        k[1..17].copy_from_slice(&self.black);
        k[17..33].copy_from_slice(&self.red);
        k
    }
}

/// Exact twin-width by iterated decision search.
pub fn twin_width(g: &Graph) -> Result<usize, OracleTooLarge> {
    Ok(twin_width_with_certificate(g)?.0)
}

/// Exact twin-width plus one witnessing contraction sequence.
pub fn twin_width_with_certificate(
    g: &Graph,
) -> Result<(usize, ContractionSequence), OracleTooLarge> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(OracleTooLarge(g.n()));
    }
    if g.n() <= 1 {
        return Ok((0, ContractionSequence::new(Vec::new())));
    }
    let start = Mini::from_graph(g);
    for d in 0..g.n() {
        let mut failed: HashSet<[u16; 33]> = HashSet::new();
        let mut steps = Vec::new();
        if admits(&start, d, &mut failed, &mut steps) {
            steps.reverse();
            return Ok((d, ContractionSequence::new(steps)));
        }
    }
    unreachable!("every graph admits an (n-1)-sequence")
}

/// Can the trigraph be contracted to a point keeping red degrees <= d?
/// By symmetry only pairs with child > parent are explored (the two
/// orientations yield relabel-isomorphic trigraphs). Failed states are
/// memoized; successful steps accumulate in `steps` in reverse.
fn admits(t: &Mini, d: usize, failed: &mut HashSet<[u16; 33]>, steps: &mut Vec<(usize, usize)>) -> bool {
    if t.live.count_ones() <= 1 {
        return true;
    }
    let key = t.key();
    if failed.contains(&key) {
        return false;
    }
    // score moves by the red degree they create, cheapest first
    let mut moves: Vec<(usize, usize, usize, Mini)> = Vec::new();
    let verts: Vec<usize> = (0..t.n).filter(|&v| t.live & (1 << v) != 0).collect();
    for (i, &parent) in verts.iter().enumerate() {
        for &child in &verts[i + 1..] {
            let next = t.contract(child, parent);
            let w = next.max_red_degree();
            if w <= d {
                moves.push((w, child, parent, next));
            }
        }
    }
    moves.sort_by_key(|&(w, c, p, _)| (w, c, p));
    for (_, child, parent, next) in moves {
        if admits(&next, d, failed, steps) {
            steps.push((child, parent));
            return true;
        }
    }
    failed.insert(key);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph;
    use crate::trigraph::{verify_sequence, Trigraph};

    #[test]
    fn mini_contract_agrees_with_trigraph() {
        for seed in 0..20u64 {
            let g = graph::erdos_renyi(7, 0.5, seed);
            let mini = Mini::from_graph(&g).contract(3, 1).contract(5, 0);
            let full = Trigraph::from_graph(&g)
                .contract(3, 1)
                .unwrap()
                .contract(5, 0)
                .unwrap();
            for v in [0usize, 1, 2, 4, 6] {
                let mb: Vec<usize> = (0..7).filter(|&x| mini.black[v] & (1 << x) != 0).collect();
                let fb: Vec<usize> = full.black_neighbors(v).iter().collect();
                assert_eq!(mb, fb, "black of {v} (seed {seed})");
                let mr: Vec<usize> = (0..7).filter(|&x| mini.red[v] & (1 << x) != 0).collect();
                let fr: Vec<usize> = full.red_neighbors(v).iter().collect();
                assert_eq!(mr, fr, "red of {v} (seed {seed})");
            }
        }
    }

    #[test]
    fn known_small_widths() {
        assert_eq!(twin_width(&graph::path(4)).unwrap(), 1);
        assert_eq!(twin_width(&graph::cycle(5)).unwrap(), 2);
        assert_eq!(twin_width(&graph::complete(7)).unwrap(), 0);
        assert_eq!(twin_width(&graph::cycle(4)).unwrap(), 0);
        assert_eq!(twin_width(&Graph::empty(1)).unwrap(), 0);
        assert_eq!(twin_width(&corpus::named("moser").unwrap()).unwrap(), 2);
    }

    #[test]
    fn p4_is_the_smallest_width_1_graph() {
        // every graph on <= 3 vertices has width 0; on 4 vertices only P4
        // reaches 1
        for n in 1..=3usize {
            for mask in 0u32..1 << (n * (n - 1) / 2) {
                let g = graph_from_mask(n, mask);
                assert_eq!(twin_width(&g).unwrap(), 0);
            }
        }
        let mut ones = 0;
        for mask in 0u32..64 {
            let g = graph_from_mask(4, mask);
            let w = twin_width(&g).unwrap();
            assert!(w <= 1);
            if w == 1 {
                ones += 1;
                assert_eq!(g.edges().len(), 3); // P4 up to relabelling
            }
        }
        // 4! / |Aut(P4)| = 12 labelled copies of P4
        assert_eq!(ones, 12);
    }

    pub(crate) fn graph_from_mask(n: usize, mask: u32) -> Graph {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask & (1 << bit) != 0 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    #[test]
    fn certificates_verify_at_oracle_width() {
        for seed in 0..30u64 {
            let g = graph::erdos_renyi(6, 0.5, seed);
            let (w, seq) = twin_width_with_certificate(&g).unwrap();
            assert_eq!(verify_sequence(&g, &seq).unwrap(), w, "seed {seed}");
        }
    }

    #[test]
    fn complement_invariance_sample() {
        for seed in 0..25u64 {
            let g = graph::erdos_renyi(7, 0.4, seed);
            assert_eq!(
                twin_width(&g).unwrap(),
                twin_width(&g.complement()).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn paley9_has_width_4() {
        let g = graph::paley(9).unwrap();
        let (w, seq) = twin_width_with_certificate(&g).unwrap();
        assert_eq!(w, 4);
        assert_eq!(verify_sequence(&g, &seq).unwrap(), 4);
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(twin_width(&Graph::empty(10)).is_err());
    }
}
