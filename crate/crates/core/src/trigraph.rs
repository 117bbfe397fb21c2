//! Trigraphs (black + red edge partition), the contraction operation and
//! replay-based verification of contraction sequences.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("sequence has {got} steps, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("step {step}: {msg}")]
    Step { step: usize, msg: String },
}

/// Graph with its edges split into black (definite) and red (error) sets.
#[derive(Clone, PartialEq, Eq)]
pub struct Trigraph {
    live: VertexSet,
    black: Vec<VertexSet>,
    red: Vec<VertexSet>,
}

impl Trigraph {
    /// An ordinary graph is a trigraph with every edge black.
    pub fn from_graph(g: &Graph) -> Self {
        Trigraph {
            live: VertexSet::full(g.n()),
            black: g.vertices().map(|v| g.neighbors(v).clone()).collect(),
            red: g.vertices().map(|_| VertexSet::empty(g.n())).collect(),
        }
    }

    pub fn live_vertices(&self) -> &VertexSet {
        &self.live
    }

    pub fn live_count(&self) -> usize {
        self.live.len()
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.live.contains(v)
    }

    pub fn black_neighbors(&self, v: usize) -> &VertexSet {
        &self.black[v]
    }

    pub fn red_neighbors(&self, v: usize) -> &VertexSet {
        &self.red[v]
    }

    pub fn red_degree(&self, v: usize) -> usize {
        self.red[v].len()
    }

    pub fn max_red_degree(&self) -> usize {
        self.live.iter().map(|v| self.red[v].len()).max().unwrap_or(0)
    }

    pub fn black_edge_count(&self) -> usize {
        self.live.iter().map(|v| self.black[v].len()).sum::<usize>() / 2
    }

    pub fn red_edge_count(&self) -> usize {
        self.live.iter().map(|v| self.red[v].len()).sum::<usize>() / 2
    }

    /// Merges `child` into `parent` (the parent survives) and returns the
    /// resulting trigraph. Red edges appear on the survivor towards every
    /// vertex seen by exactly one of the pair, and towards common
    /// neighbours unless both incidences were black.
    pub fn contract(&self, child: usize, parent: usize) -> Result<Trigraph, SequenceError> {
        self.check_pair(0, child, parent)?;
        Ok(self.contract_unchecked(child, parent))
    }

    fn check_pair(&self, step: usize, child: usize, parent: usize) -> Result<(), SequenceError> {
        if child == parent {
            return Err(SequenceError::Step {
                step,
                msg: format!("contracting vertex {child} with itself"),
            });
        }
        for v in [child, parent] {
            if !self.is_live(v) {
                return Err(SequenceError::Step {
                    step,
                    msg: format!("vertex {v} is not live"),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn contract_unchecked(&self, child: usize, parent: usize) -> Trigraph {
        let mut t = self.clone();
        let mut nc = t.black[child].union(&t.red[child]);
        let mut np = t.black[parent].union(&t.red[parent]);
        nc.remove(parent);
        np.remove(child);

        // new black neighbourhood: black on both sides
        let mut new_black = t.black[child].intersection(&t.black[parent]);
        new_black.remove(child);
        new_black.remove(parent);
        // everything else seen from either side goes red
        let mut new_red = nc.union(&np);
        new_red.difference_with(&new_black);

        // detach both endpoints everywhere, then reattach the survivor
        for x in nc.union(&np).iter() {
            t.black[x].remove(child);
            t.black[x].remove(parent);
            t.red[x].remove(child);
            t.red[x].remove(parent);
        }
        for x in new_black.iter() {
            t.black[x].insert(parent);
        }
        for x in new_red.iter() {
            t.red[x].insert(parent);
        }
        t.black[parent] = new_black;
        t.red[parent] = new_red;
        t.black[child].clear();
        t.red[child].clear();
        t.live.remove(child);
        t
    }
}

/// Ordered `(child, parent)` contraction steps; the parent survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionSequence {
    steps: Vec<(usize, usize)>,
}

impl ContractionSequence {
    pub fn new(steps: Vec<(usize, usize)>) -> Self {
        ContractionSequence { steps }
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl FromIterator<(usize, usize)> for ContractionSequence {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        ContractionSequence::new(iter.into_iter().collect())
    }
}

/// Replays `seq` on `g` and returns the certified width: the maximum red
/// degree over all intermediate trigraphs. Rejects malformed sequences with
/// the offending step.
pub fn verify_sequence(g: &Graph, seq: &ContractionSequence) -> Result<usize, SequenceError> {
    if g.n() == 0 {
        return if seq.is_empty() {
            Ok(0)
        } else {
            Err(SequenceError::Length {
                expected: 0,
                got: seq.len(),
            })
        };
    }
    if seq.len() != g.n() - 1 {
        return Err(SequenceError::Length {
            expected: g.n() - 1,
            got: seq.len(),
        });
    }
    let mut t = Trigraph::from_graph(g);
    let mut width = 0;
    for (idx, &(child, parent)) in seq.steps().iter().enumerate() {
        t.check_pair(idx, child, parent)?;
        t = t.contract_unchecked(child, parent);
        width = width.max(t.max_red_degree());
    }
    debug_assert_eq!(t.live_count(), 1);
    Ok(width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph;

    /// The Wagner graph with the labels a..h = 0..7 used by its standard
    /// drawing, and its published sequence of 2-contractions.
    pub(crate) fn wagner_figure_sequence() -> (Graph, ContractionSequence) {
        let g = corpus::named("wagner").unwrap();
        let (a, b, c, d, e, f, gg, h) = (0, 1, 2, 3, 4, 5, 6, 7);
        let seq = ContractionSequence::new(alloc::vec![
            (f, c),
            (d, a),
            (e, b),
            (c, b),
            (h, b),
            (gg, a),
            (a, b),
        ]);
        (g, seq)
    }

    #[test]
    fn from_graph_all_black() {
        let k3 = graph::complete(3);
        let t = Trigraph::from_graph(&k3);
        assert_eq!(t.black_edge_count(), 3);
        assert_eq!(t.red_edge_count(), 0);

        let w = corpus::named("wagner").unwrap();
        let t = Trigraph::from_graph(&w);
        assert_eq!(t.black_edge_count(), 12);
        assert_eq!(t.red_edge_count(), 0);

        let e = Graph::empty(4);
        let t = Trigraph::from_graph(&e);
        assert_eq!(t.black_edge_count() + t.red_edge_count(), 0);
    }

    #[test]
    fn contract_wagner_first_step() {
        // merging f into c leaves red edges exactly to d and e, black to b, g
        let g = corpus::named("wagner").unwrap();
        let t = Trigraph::from_graph(&g).contract(5, 2).unwrap();
        assert_eq!(t.red_neighbors(2).iter().collect::<Vec<_>>(), [3, 4]);
        assert_eq!(t.black_neighbors(2).iter().collect::<Vec<_>>(), [1, 6]);
        assert!(!t.is_live(5));
        assert_eq!(t.live_count(), 7);
    }

    #[test]
    fn contract_twins_no_red() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let t = Trigraph::from_graph(&star).contract(2, 1).unwrap();
        assert_eq!(t.red_edge_count(), 0);
        assert_eq!(t.max_red_degree(), 0);
    }

    #[test]
    fn contract_k2_to_point() {
        let k2 = graph::complete(2);
        let t = Trigraph::from_graph(&k2).contract(0, 1).unwrap();
        assert_eq!(t.live_count(), 1);
        assert_eq!(t.black_edge_count() + t.red_edge_count(), 0);
    }

    #[test]
    fn contract_rejects_dead_and_equal() {
        let g = graph::complete(3);
        let t = Trigraph::from_graph(&g);
        assert!(t.contract(1, 1).is_err());
        let t = t.contract(0, 1).unwrap();
        assert!(t.contract(0, 2).is_err());
    }

    #[test]
    fn wagner_figure_sequence_has_width_2() {
        let (g, seq) = wagner_figure_sequence();
        assert_eq!(verify_sequence(&g, &seq).unwrap(), 2);
    }

    #[test]
    fn any_sequence_on_kn_is_width_0() {
        let k5 = graph::complete(5);
        let seq = ContractionSequence::new(alloc::vec![(0, 4), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(verify_sequence(&k5, &seq).unwrap(), 0);
    }

    #[test]
    fn p4_replay() {
        // P4 a-b-c-d: contracting a into c then b into d leaves the optimal
        // width 1; a different pairing pays width 2
        let p4 = graph::path(4);
        let good = ContractionSequence::new(alloc::vec![(0, 2), (1, 3), (2, 3)]);
        assert_eq!(verify_sequence(&p4, &good).unwrap(), 1);
        let bad = ContractionSequence::new(alloc::vec![(0, 3), (1, 2), (2, 3)]);
        assert_eq!(verify_sequence(&p4, &bad).unwrap(), 2);
    }

    #[test]
    fn verify_rejects_malformed() {
        let p4 = graph::path(4);
        let short = ContractionSequence::new(alloc::vec![(0, 1)]);
        assert!(matches!(
            verify_sequence(&p4, &short),
            Err(SequenceError::Length { .. })
        ));
        let repeat = ContractionSequence::new(alloc::vec![(0, 1), (0, 2), (2, 3)]);
        assert!(matches!(
            verify_sequence(&p4, &repeat),
            Err(SequenceError::Step { step: 1, .. })
        ));
    }
}
