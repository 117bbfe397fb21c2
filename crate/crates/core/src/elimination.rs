//! Twin-width decompositions (contraction tree + elimination order), the
//! recursively defined elimination sequence H_0..H_{n-1}, and the two
//! conversions between contraction sequences and decompositions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::graph::Graph;
use crate::trigraph::{ContractionSequence, SequenceError};
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error("order is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("vertex {child}: parent {parent} does not come later in the order")]
    ParentOrder { child: usize, parent: usize },
    #[error("vertex {0} has no parent but is not the last vertex of the order")]
    StrayRoot(usize),
    #[error("certificate line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Elimination order plus contraction-tree parent map. The root is the last
/// vertex of the order; every other vertex has a parent that comes strictly
/// later in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinWidthDecomposition {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl TwinWidthDecomposition {
    pub fn new(
        order: Vec<usize>,
        parent: Vec<Option<usize>>,
    ) -> Result<Self, DecompositionError> {
        let dec = TwinWidthDecomposition { order, parent };
        dec.validate()?;
        Ok(dec)
    }

    fn validate(&self) -> Result<(), DecompositionError> {
        let n = self.order.len();
        if self.parent.len() != n {
            return Err(DecompositionError::NotPermutation(n));
        }
        let mut pos = alloc::vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(DecompositionError::NotPermutation(n));
            }
            pos[v] = i;
        }
        for v in 0..n {
            match self.parent[v] {
                Some(p) => {
                    if p >= n || pos[p] <= pos[v] {
                        return Err(DecompositionError::ParentOrder { child: v, parent: p });
                    }
                }
                None => {
                    if n > 0 && self.order[n - 1] != v {
                        return Err(DecompositionError::StrayRoot(v));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Elimination order, ascending.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn root(&self) -> usize {
        *self.order.last().expect("empty decomposition")
    }
}

/// The red-edge graphs H_0..H_{n-1} produced by a decomposition, and their
/// maximum degree (the width the decomposition certifies).
pub struct EliminationSequence {
    /// Edge sets; `graphs[i]` is E(H_i), over the live vertices after the
    /// first `i` eliminations.
    graphs: Vec<Vec<(usize, usize)>>,
    width: usize,
}

impl EliminationSequence {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn edges(&self, i: usize) -> &[(usize, usize)] {
        &self.graphs[i]
    }
}

/// Runs the recursive definition of E(H_i): edges among survivors are kept,
/// the eliminated vertex's red edges transfer to its parent, and the parent
/// picks up a red edge to every survivor in the symmetric difference of the
/// pair's neighbourhoods in G.
pub fn eliminate(
    g: &Graph,
    dec: &TwinWidthDecomposition,
) -> Result<EliminationSequence, DecompositionError> {
    dec.validate()?;
    if dec.n() != g.n() {
        return Err(DecompositionError::NotPermutation(g.n()));
    }
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::empty(n)).collect();
    let mut alive = VertexSet::full(n);
    let mut graphs = Vec::with_capacity(n.max(1));
    graphs.push(Vec::new());
    let mut width = 0;
    for step in 1..n {
        let child = dec.order()[step - 1];
        let p = dec.parent_of(child).expect("validated non-root");
        alive.remove(child);
        // (1b) transfer, excluding the parent itself
        let mut gained = adj[child].clone();
        gained.remove(p);
        // (1c) + (1d) creation over surviving vertices
        let mut created = g.symdiff_neighborhood(child, p);
        created.intersect_with(&alive);
        gained.union_with(&created);
        // (1a) keep: drop the eliminated vertex's incidences
        for u in adj[child].clone().iter() {
            adj[u].remove(child);
        }
        adj[child].clear();
        for u in gained.iter() {
            adj[p].insert(u);
            adj[u].insert(p);
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in alive.iter() {
            width = width.max(adj[u].len());
            for v in adj[u].iter() {
                if v > u {
                    edges.push((u, v));
                }
            }
        }
        graphs.push(edges);
    }
    Ok(EliminationSequence { graphs, width })
}

/// Reads a decomposition off a contraction sequence: children in contraction
/// order followed by the final survivor, parents as contracted.
pub fn decomposition_from_contractions(
    g: &Graph,
    seq: &ContractionSequence,
) -> Result<TwinWidthDecomposition, DecompositionError> {
    let n = g.n();
    if seq.len() + 1 != n.max(1) {
        return Err(SequenceError::Length {
            expected: n.saturating_sub(1),
            got: seq.len(),
        }
        .into());
    }
    let mut order = Vec::with_capacity(n);
    let mut parent = alloc::vec![None; n];
    let mut live = VertexSet::full(n);
    for (step, &(child, p)) in seq.steps().iter().enumerate() {
        if child == p || !live.contains(child) || !live.contains(p) {
            return Err(SequenceError::Step {
                step,
                msg: format!("invalid contraction ({child}, {p})"),
            }
            .into());
        }
        live.remove(child);
        order.push(child);
        parent[child] = Some(p);
    }
    if let Some(survivor) = live.min() {
        order.push(survivor);
    }
    TwinWidthDecomposition::new(order, parent)
}

/// The inverse direction: eliminate in order, contracting each vertex into
/// its tree parent.
pub fn contractions_from_decomposition(dec: &TwinWidthDecomposition) -> ContractionSequence {
    dec.order()
        .iter()
        .take(dec.n().saturating_sub(1))
        .map(|&v| (v, dec.parent_of(v).expect("non-root")))
        .collect()
}

// ---------------------------------------------------------------------------
// Certificate text format
// ---------------------------------------------------------------------------

/// Serializes a decomposition as a `tww-cert 1` block.
pub fn emit_certificate(dec: &TwinWidthDecomposition, width: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tww-cert 1");
    let _ = writeln!(out, "n {}", dec.n());
    let _ = writeln!(out, "width {width}");
    let _ = write!(out, "order");
    for v in dec.order() {
        let _ = write!(out, " {v}");
    }
    let _ = writeln!(out);
    for &v in dec.order().iter().take(dec.n().saturating_sub(1)) {
        let _ = writeln!(out, "p {} {}", v, dec.parent_of(v).expect("non-root"));
    }
    out
}

/// Parses the `tww-cert 1` format; returns the decomposition and the width
/// declared in the file.
pub fn parse_certificate(
    text: &str,
) -> Result<(TwinWidthDecomposition, usize), DecompositionError> {
    let err = |line: usize, msg: &str| DecompositionError::Parse {
        line,
        msg: msg.into(),
    };
    let mut lines = text.lines().enumerate();
    let mut next_content = |expected: &str| -> Result<(usize, String), DecompositionError> {
        for (idx, raw) in lines.by_ref() {
            let t = raw.trim();
            if !t.is_empty() {
                return Ok((idx + 1, t.into()));
            }
        }
        Err(err(0, expected))
    };

    let (l, magic) = next_content("missing header")?;
    if magic != "tww-cert 1" {
        return Err(err(l, "expected `tww-cert 1`"));
    }
    let (l, nline) = next_content("missing n line")?;
    let n: usize = nline
        .strip_prefix("n ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or(err(l, "expected `n <count>`"))?;
    let (l, wline) = next_content("missing width line")?;
    let width: usize = wline
        .strip_prefix("width ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or(err(l, "expected `width <d>`"))?;
    let (l, oline) = next_content("missing order line")?;
    let order: Vec<usize> = oline
        .strip_prefix("order")
        .map(|s| {
            s.split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()
        .ok()
        .flatten()
        .ok_or(err(l, "expected `order <v1> ... <vn>`"))?;
    if order.len() != n {
        return Err(err(l, "order length does not match n"));
    }
    let mut parent = alloc::vec![None; n];
    for _ in 0..n.saturating_sub(1) {
        let (l, pline) = next_content("missing p line")?;
        let fields: Vec<&str> = pline.split_whitespace().collect();
        match fields.as_slice() {
            ["p", c, p] => {
                let c: usize = c.parse().map_err(|_| err(l, "bad child id"))?;
                let p: usize = p.parse().map_err(|_| err(l, "bad parent id"))?;
                if c >= n || parent[c].is_some() {
                    return Err(err(l, "duplicate or out-of-range child"));
                }
                parent[c] = Some(p);
            }
            _ => return Err(err(l, "expected `p <child> <parent>`")),
        }
    }
    let dec = TwinWidthDecomposition::new(order, parent)?;
    Ok((dec, width))
}
