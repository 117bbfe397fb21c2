//! Simple undirected graphs over dense 0-based vertex ids, with the two file
//! formats used at the tool boundary (DIMACS-edge and graph6) and the
//! generators needed by the experiments.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use rand_core::{RngCore, SeedableRng};

use crate::gf::Field;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, GraphError>;

/// Simple undirected graph. Vertices are `0..n`; adjacency is kept as one
/// bitset per vertex and is always symmetric and loop-free.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the edge `uv`. Panics on self-loops or out-of-range ids;
    /// duplicate insertions are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.n
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Same vertex set, complemented edge set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `(N(u) △ N(v)) \ {u, v}` — the red neighbourhood a contraction of
    /// `u, v` would create.
    pub fn symdiff_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        assert!(u != v, "symmetric difference of a vertex with itself");
        let mut s = self.adj[u].symmetric_difference(&self.adj[v]);
        s.remove(u);
        s.remove(v);
        s
    }

    /// Induced subgraph on `s`, relabelled to `0..|s|` by ascending original
    /// id. Returns the graph and the map from new ids to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(GraphError::Invalid("empty vertex set".into()));
        }
        let map: Vec<usize> = s.iter().collect();
        if *map.last().unwrap() >= self.n {
            return Err(GraphError::Invalid(format!(
                "vertex {} out of range",
                map.last().unwrap()
            )));
        }
        let mut g = Graph::empty(map.len());
        for (iu, &u) in map.iter().enumerate() {
            for (iv, &v) in map.iter().enumerate().skip(iu + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(iu, iv);
                }
            }
        }
        Ok((g, map))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut stack = alloc::vec![0usize];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut seen = VertexSet::empty(self.n);
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = alloc::vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// DIMACS-edge format
// ---------------------------------------------------------------------------

/// Parses DIMACS-edge text: optional `c` comment lines, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based vertex ids.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: "duplicate problem line".into(),
                    });
                }
                let kind = tok.next();
                let n = tok.next().and_then(|s| s.parse::<usize>().ok());
                let m = tok.next().and_then(|s| s.parse::<usize>().ok());
                match (kind, n, m) {
                    (Some("edge"), Some(n), Some(_)) => g = Some(Graph::empty(n)),
                    _ => {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: format!("malformed header `{line}`"),
                        })
                    }
                }
            }
            Some("e") => {
                let g = g.as_mut().ok_or(GraphError::Parse {
                    line: lineno,
                    msg: "edge before problem line".into(),
                })?;
                let u = tok.next().and_then(|s| s.parse::<usize>().ok());
                let v = tok.next().and_then(|s| s.parse::<usize>().ok());
                let (u, v) = match (u, v) {
                    (Some(u), Some(v)) => (u, v),
                    _ => {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: format!("malformed edge line `{line}`"),
                        })
                    }
                };
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("vertex id out of range 1..{}", g.n()),
                    });
                }
                if u == v {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                g.add_edge(u - 1, v - 1);
            }
            _ => {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("unrecognized line `{line}`"),
                })
            }
        }
    }
    g.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })
}

/// Writes the graph in DIMACS-edge format (1-based ids).
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

// ---------------------------------------------------------------------------
// graph6 format
// ---------------------------------------------------------------------------

/// Decodes one standard graph6 line (printable bytes 63..=126, big-endian
/// upper-triangle bit packing).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6("non-printable byte".into()));
    }
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty line".into()));
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    let (n, off) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        ((vals[1] << 12 | vals[2] << 6 | vals[3]) as usize, 4)
    } else if vals.len() >= 8 {
        (
            (vals[2] << 30 | vals[3] << 24 | vals[4] << 18 | vals[5] << 12 | vals[6] << 6
                | vals[7]) as usize,
            8,
        )
    } else {
        return Err(GraphError::Graph6("truncated size field".into()));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if vals.len() - off != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} payload bytes for n={n}, got {}",
            vals.len() - off
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = vals[off + bit / 6];
            if group & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut vals: Vec<u8> = Vec::new();
    if n <= 62 {
        vals.push(n as u8);
    } else if n <= 258_047 {
        vals.push(63);
        vals.push((n >> 12) as u8 & 63);
        vals.push((n >> 6) as u8 & 63);
        vals.push(n as u8 & 63);
    } else {
        vals.push(63);
        vals.push(63);
        for shift in [30, 24, 18, 12, 6, 0] {
            vals.push((n >> shift) as u8 & 63);
        }
    }
    let mut group = 0u8;
    let mut fill = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            fill += 1;
            if fill == 6 {
                vals.push(group);
                group = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        vals.push(group << (6 - fill));
    }
    vals.iter().map(|&v| (v + 63) as char).collect()
}

/// Parses a stream of graph6 lines, one graph per line. Blank lines and
/// nauty's optional `>>graph6<<` header are skipped. Each entry carries its
/// 1-based line number.
pub fn parse_graph6_stream(text: &str) -> Vec<(usize, Result<Graph>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim().strip_prefix(">>graph6<<").unwrap_or(raw.trim());
        if line.is_empty() {
            continue;
        }
        out.push((idx + 1, parse_graph6(line)));
    }
    out
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// G(n, p) with one uniform variate per vertex pair, pairs visited in
/// ascending `(u, v)` order. The variate is the top 53 bits of a ChaCha8
/// output word, so results are reproducible across platforms and releases.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `w x h` grid: vertex `(x, y)` has id `y*w + x`, 4-neighbour lattice edges.
pub fn grid(w: usize, h: usize) -> Graph {
    let mut g = Graph::empty(w * h);
    for y in 0..h {
        for x in 0..w {
            let id = y * w + x;
            if x + 1 < w {
                g.add_edge(id, id + 1);
            }
            if y + 1 < h {
                g.add_edge(id, id + w);
            }
        }
    }
    g
}

/// k x k rook's graph: edge iff same row or same column.
pub fn rook(k: usize) -> Graph {
    let mut g = Graph::empty(k * k);
    for r1 in 0..k {
        for c1 in 0..k {
            for r2 in 0..k {
                for c2 in 0..k {
                    let (a, b) = (r1 * k + c1, r2 * k + c2);
                    if a < b && (r1 == r2 || c1 == c2) {
                        g.add_edge(a, b);
                    }
                }
            }
        }
    }
    g
}

/// Paley graph on GF(q): vertices are field elements, `x ~ y` iff `x - y`
/// is a nonzero square. Requires `q` a prime power with `q ≡ 1 (mod 4)`.
pub fn paley(q: usize) -> Result<Graph> {
    if q % 4 != 1 {
        return Err(GraphError::Invalid(format!(
            "paley({q}): q must satisfy q ≡ 1 (mod 4)"
        )));
    }
    let field = Field::new(q)
        .ok_or_else(|| GraphError::Invalid(format!("paley({q}): q is not a prime power")))?;
    let mut squares = VertexSet::empty(q);
    for x in 1..q {
        squares.insert(field.mul(x, x));
    }
    let mut g = Graph::empty(q);
    for a in 0..q {
        for b in a + 1..q {
            if squares.contains(field.sub(a, b)) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parse_edge_list_k2() {
        let g = parse_edge_list("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_edge_list_edgeless() {
        let g = parse_edge_list("p edge 3 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
    }

    #[test]
    fn parse_edge_list_wagner_file() {
        let text = "c the Wagner graph\n\
                    p edge 8 12\n\
                    e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 8 1\n\
                    e 1 5\ne 2 6\ne 3 7\ne 4 8\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(g, corpus::named("wagner").unwrap());
    }

    #[test]
    fn parse_edge_list_errors_name_line() {
        let err = parse_edge_list("p edge 3 1\ne 1 4\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = parse_edge_list("p edge 3 1\ne 2 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = parse_edge_list("p foo 3 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        // duplicate e-lines collapse
        let g = parse_edge_list("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn graph6_hand_decoded() {
        // "C~": n = 4, payload 111111 -> K4
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        // "A_": n = 2, payload 100000 -> single edge (K2)
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        // "A?": n = 2, payload 000000 -> edgeless
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.n(), e2.m()), (2, 0));
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(emit_graph6(&k2), "A_");
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("C").is_err()); // truncated payload
        assert!(parse_graph6("C~~").is_err()); // extra payload
        assert!(parse_graph6("\u{7}").is_err()); // non-printable
    }

    #[test]
    fn complement_involution() {
        let g = corpus::named("petersen").unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.m() + g.complement().m(), g.n() * (g.n() - 1) / 2);
        let k4 = complete(4);
        assert_eq!(k4.complement().m(), 0);
    }

    #[test]
    fn symdiff_excludes_endpoints() {
        let kn = complete(6);
        assert!(kn.symdiff_neighborhood(0, 5).is_empty());
        // twins: two leaves of a star
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(star.symdiff_neighborhood(1, 2).is_empty());
    }

    #[test]
    fn symdiff_wagner_cf() {
        // contracting c and f in the Wagner graph leaves red edges to d and e
        let g = corpus::named("wagner").unwrap();
        let (c, f, d, e) = (2, 5, 3, 4);
        let s = g.symdiff_neighborhood(c, f);
        assert_eq!(s.iter().collect::<Vec<_>>(), alloc::vec![d, e]);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = corpus::named("petersen").unwrap();
        let all = VertexSet::full(g.n());
        let (h, map) = g.induced_subgraph(&all).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, (0..10).collect::<Vec<_>>());

        let p4 = path(4);
        let mid: VertexSet = [1usize, 2].into_iter().collect();
        let (h, _) = p4.induced_subgraph(&mid).unwrap();
        assert_eq!((h.n(), h.m()), (2, 1));

        let pal = paley(9).unwrap();
        let mut s = VertexSet::full(9);
        s.remove(0);
        let (h, _) = pal.induced_subgraph(&s).unwrap();
        assert_eq!((h.n(), h.m()), (8, 14));

        assert!(p4.induced_subgraph(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn generators_basic() {
        let c5 = paley(5).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let p9 = paley(9).unwrap();
        assert_eq!((p9.n(), p9.m()), (9, 18));
        assert!(p9.vertices().all(|v| p9.degree(v) == 4));

        let r6 = rook(6);
        assert_eq!((r6.n(), r6.m()), (36, 180));

        let g68 = grid(6, 8);
        assert_eq!((g68.n(), g68.m()), (48, 82));

        assert!(paley(7).is_err()); // 7 % 4 != 1
        assert!(paley(21).is_err()); // 21 = 3*7 not a prime power

        assert_eq!(erdos_renyi(6, 0.0, 7).m(), 0);
        assert_eq!(erdos_renyi(6, 1.0, 7).m(), 15);
        // reproducibility
        assert_eq!(erdos_renyi(12, 0.37, 99), erdos_renyi(12, 0.37, 99));
    }

    #[test]
    fn handshake_on_generated() {
        for g in [
            erdos_renyi(9, 0.4, 3),
            paley(13).unwrap(),
            grid(3, 4),
            rook(4),
        ] {
            let degsum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(degsum, 2 * g.m());
        }
    }

    #[test]
    fn paley_self_complementary_edge_count() {
        for q in [5usize, 9, 13, 17, 25] {
            let g = paley(q).unwrap();
            assert_eq!(g.m(), q * (q - 1) / 4);
            assert!(g.vertices().all(|v| g.degree(v) == (q - 1) / 2));
            assert_eq!(g.complement().m(), g.m());
        }
    }

    #[test]
    fn graph6_roundtrip_exhaustive_n4() {
        // all labeled graphs on 4 vertices
        for mask in 0u32..64 {
            let mut g = Graph::empty(4);
            let mut bit = 0;
            for j in 1..4 {
                for i in 0..j {
                    if mask & (1 << bit) != 0 {
                        g.add_edge(i, j);
                    }
                    bit += 1;
                }
            }
            let s = emit_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
