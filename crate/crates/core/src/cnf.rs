//! CNF construction kit: clause storage, named variable registry, totalizer
//! cardinality constraints, and DIMACS text.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use hashbrown::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("dimacs line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A propositional formula in CNF. Variables are 1-based; literals are
/// nonzero signed variable ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new() -> Self {
        CnfFormula::default()
    }

    pub fn new_var(&mut self) -> i32 {
        self.var_count += 1;
        self.var_count as i32
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn add_clause(&mut self, lits: impl IntoIterator<Item = i32>) {
        let clause: Vec<i32> = lits.into_iter().collect();
        debug_assert!(!clause.is_empty(), "encoders never emit empty clauses");
        debug_assert!(
            clause
                .iter()
                .all(|&l| l != 0 && l.unsigned_abs() as usize <= self.var_count),
            "literal out of range in {clause:?}"
        );
        debug_assert!(
            {
                let mut vars: Vec<i32> = clause.iter().map(|l| l.abs()).collect();
                vars.sort_unstable();
                vars.windows(2).all(|w| w[0] != w[1])
            },
            "duplicate literal in {clause:?}"
        );
        self.clauses.push(clause);
    }

    /// `p cnf` header plus one zero-terminated clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        self.emit_dimacs(&mut out).expect("writing to String");
        out
    }

    pub fn emit_dimacs(&self, sink: &mut impl core::fmt::Write) -> core::fmt::Result {
        writeln!(sink, "p cnf {} {}", self.var_count, self.clauses.len())?;
        for clause in &self.clauses {
            for lit in clause {
                write!(sink, "{lit} ")?;
            }
            writeln!(sink, "0")?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF text. Clauses may span lines; `c` comments and a `%`
/// trailer are skipped.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut f = CnfFormula::new();
    let mut declared: Option<(usize, usize)> = None;
    let mut current: Vec<i32> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let mut tok = line.split_whitespace();
            let (_, kind, v, c) = (tok.next(), tok.next(), tok.next(), tok.next());
            match (kind, v.and_then(|s| s.parse().ok()), c.and_then(|s| s.parse().ok())) {
                (Some("cnf"), Some(v), Some(c)) => {
                    declared = Some((v, c));
                    f.var_count = v;
                }
                _ => {
                    return Err(CnfError::Parse {
                        line: idx + 1,
                        msg: format!("malformed header `{line}`"),
                    })
                }
            }
            continue;
        }
        if declared.is_none() {
            return Err(CnfError::Parse {
                line: idx + 1,
                msg: "clause before header".into(),
            });
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| CnfError::Parse {
                line: idx + 1,
                msg: format!("bad literal `{tok}`"),
            })?;
            if lit == 0 {
                f.clauses.push(core::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > f.var_count {
                    f.var_count = lit.unsigned_abs() as usize;
                }
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        return Err(CnfError::Parse {
            line: 0,
            msg: "unterminated clause".into(),
        });
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// Variable registry
// ---------------------------------------------------------------------------

/// Variable families of the two encodings plus totalizer auxiliaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarFamily {
    /// relative: o_{i,j} — v_i comes before v_j
    Order,
    /// relative: p_{i,j} — the parent of v_i is v_j
    Parent,
    /// relative: a_{i,j} — edge {v_i, v_j} appears in some H_k
    EverRed,
    /// relative: r_{i,j,k} — edge {v_j, v_k} in H after eliminating v_i
    Red,
    /// absolute: o'_{i,j} — vertex v_j sits at position i
    Position,
    /// absolute: parent of the vertex at position i is the one at position j
    PosParent,
    /// absolute: the vertices at positions i and j are adjacent in G
    PosAdj,
    /// absolute: r_{i,j,k} over positions i < j < k
    PosRed,
    /// totalizer counter variables
    Aux,
}

impl VarFamily {
    pub fn tag(self) -> &'static str {
        match self {
            VarFamily::Order => "o",
            VarFamily::Parent => "p",
            VarFamily::EverRed => "a",
            VarFamily::Red => "r",
            VarFamily::Position => "opos",
            VarFamily::PosParent => "ppos",
            VarFamily::PosAdj => "gadj",
            VarFamily::PosRed => "rpos",
            VarFamily::Aux => "aux",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "o" => VarFamily::Order,
            "p" => VarFamily::Parent,
            "a" => VarFamily::EverRed,
            "r" => VarFamily::Red,
            "opos" => VarFamily::Position,
            "ppos" => VarFamily::PosParent,
            "gadj" => VarFamily::PosAdj,
            "rpos" => VarFamily::PosRed,
            "aux" => VarFamily::Aux,
            _ => return None,
        })
    }
}

pub type VarKey = (VarFamily, [u32; 3]);

/// Bijection between named (family, indices) keys and CNF variable ids,
/// allocated contiguously in registration order.
#[derive(Debug, Clone, Default)]
pub struct VariableMap {
    forward: HashMap<VarKey, i32>,
    reverse: Vec<VarKey>,
}

impl VariableMap {
    pub fn new() -> Self {
        VariableMap::default()
    }

    pub fn register(&mut self, f: &mut CnfFormula, family: VarFamily, idx: [u32; 3]) -> i32 {
        let var = f.new_var();
        let prev = self.forward.insert((family, idx), var);
        debug_assert!(prev.is_none(), "variable registered twice");
        self.reverse.push((family, idx));
        debug_assert_eq!(self.reverse.len(), var as usize);
        var
    }

    pub fn get(&self, family: VarFamily, idx: [u32; 3]) -> i32 {
        self.forward[&(family, idx)]
    }

    pub fn lookup(&self, var: i32) -> Option<VarKey> {
        self.reverse.get(var as usize - 1).copied()
    }

    pub fn len(&self) -> usize {
        self.reverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reverse.is_empty()
    }

    /// Sidecar text: one `<family> <indices...> <varid>` line per variable.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        for (i, (fam, idx)) in self.reverse.iter().enumerate() {
            let _ = write!(out, "{}", fam.tag());
            let arity = family_arity(*fam);
            for x in idx.iter().take(arity) {
                let _ = write!(out, " {x}");
            }
            let _ = writeln!(out, " {}", i + 1);
        }
        out
    }

    pub fn parse_sidecar(text: &str) -> Result<Self, CnfError> {
        let mut map = VariableMap::new();
        let mut f = CnfFormula::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: &str| CnfError::Parse {
                line: lineno + 1,
                msg: msg.into(),
            };
            let fam = VarFamily::from_tag(toks[0]).ok_or(err("unknown family"))?;
            let arity = family_arity(fam);
            if toks.len() != arity + 2 {
                return Err(err("wrong field count"));
            }
            let mut idx = [0u32; 3];
            for (i, t) in toks[1..=arity].iter().enumerate() {
                idx[i] = t.parse().map_err(|_| err("bad index"))?;
            }
            let var: i32 = toks[arity + 1].parse().map_err(|_| err("bad var id"))?;
            let got = map.register(&mut f, fam, idx);
            if got != var {
                return Err(err("variable ids must be contiguous from 1"));
            }
        }
        Ok(map)
    }
}

fn family_arity(fam: VarFamily) -> usize {
    match fam {
        VarFamily::Red | VarFamily::PosRed => 3,
        VarFamily::Aux => 1,
        _ => 2,
    }
}

// ---------------------------------------------------------------------------
// Totalizer cardinality constraints
// ---------------------------------------------------------------------------

/// Constrains at most `d` of `lits` to be true, using a totalizer tree with
/// counters capped at d+1. Returns the auxiliary variables introduced.
/// No clauses are needed when `d >= lits.len()`.
pub fn at_most_d(f: &mut CnfFormula, map: &mut VariableMap, lits: &[i32], d: usize) -> Vec<i32> {
    if lits.len() <= d {
        return Vec::new();
    }
    let mut aux = Vec::new();
    let root = totalizer_node(f, map, lits, d + 1, &mut aux);
    // the (d+1)-th counter of the root must be false
    f.add_clause([-root[d]]);
    aux
}

/// Builds the counter tree over `lits`; each node exposes at most `cap`
/// unary output variables, output i meaning "at least i+1 inputs are true".
fn totalizer_node(
    f: &mut CnfFormula,
    map: &mut VariableMap,
    lits: &[i32],
    cap: usize,
    aux: &mut Vec<i32>,
) -> Vec<i32> {
    if lits.len() == 1 {
        return alloc::vec![lits[0]];
    }
    let mid = lits.len() / 2;
    let left = totalizer_node(f, map, &lits[..mid], cap, aux);
    let right = totalizer_node(f, map, &lits[mid..], cap, aux);
    let out_len = lits.len().min(cap);
    let out: Vec<i32> = (0..out_len)
        .map(|k| {
            let v = map.register(f, VarFamily::Aux, [aux.len() as u32 + k as u32, 0, 0]);
            v
        })
        .collect();
    aux.extend(&out);
    for i in 0..=left.len() {
        for j in 0..=right.len() {
            if i + j == 0 {
                continue;
            }
            let idx = (i + j).min(out_len);
            let mut clause = Vec::with_capacity(3);
            if i > 0 {
                clause.push(-left[i - 1]);
            }
            if j > 0 {
                clause.push(-right[j - 1]);
            }
            clause.push(out[idx - 1]);
            f.add_clause(clause);
        }
    }
    out
}
