//! Coxeter graphs: labelled simple graphs on 1-based vertices, a text DSL
//! and JSON mirror, the catalog of irreducible spherical and affine types,
//! and component classification.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Edge label: a finite exponent `>= 2` or infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    fn render(self) -> String {
        match self {
            Label::Finite(m) => m.to_string(),
            Label::Infinity => "inf".to_string(),
        }
    }
}

/// A Coxeter graph. Only labels `>= 3` (and infinity) are stored; absent
/// pairs mean label 2 and the diagonal is implicitly 1.
#[derive(Clone, Eq)]
pub struct CoxeterGraph {
    n: usize,
    labels: BTreeMap<(usize, usize), Label>,
    name: Option<String>,
}

impl PartialEq for CoxeterGraph {
    /// Structural equality; the catalog tag is metadata.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels
    }
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "CoxeterGraph({}, n={})", name, self.n),
            None => write!(f, "CoxeterGraph(n={}, {:?})", self.n, self.labels),
        }
    }
}

impl CoxeterGraph {
    /// Graph with `n` vertices and every label 2.
    pub fn discrete(n: usize) -> Self {
        assert!(n >= 1, "a Coxeter graph needs at least one vertex");
        CoxeterGraph {
            n,
            labels: BTreeMap::new(),
            name: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    /// Exponent `m_{i,j}` with 1-based indices; `m_{i,i} = 1`.
    pub fn label(&self, i: usize, j: usize) -> Label {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        if i == j {
            return Label::Finite(1);
        }
        let key = (i.min(j), i.max(j));
        self.labels.get(&key).copied().unwrap_or(Label::Finite(2))
    }

    /// Set a label; entries equal to 2 erase the stored edge.
    pub fn set_label(&mut self, i: usize, j: usize, label: Label) -> Result<()> {
        if i == j {
            return Err(Error::InvalidLabel {
                i,
                j,
                label: label.render(),
            });
        }
        if i < 1 || i > self.n {
            return Err(Error::VertexOutOfRange { index: i, n: self.n });
        }
        if j < 1 || j > self.n {
            return Err(Error::VertexOutOfRange { index: j, n: self.n });
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(Error::InvalidLabel {
                    i,
                    j,
                    label: label.render(),
                });
            }
        }
        let key = (i.min(j), i.max(j));
        if label == Label::Finite(2) {
            self.labels.remove(&key);
        } else {
            self.labels.insert(key, label);
        }
        Ok(())
    }

    /// Stored edges `(i, j, m)` with `i < j` and `m >= 3` or infinity.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.labels.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn is_small(&self) -> bool {
        self.labels
            .values()
            .all(|l| matches!(l, Label::Finite(3) | Label::Infinity))
    }

    pub fn is_right_angled(&self) -> bool {
        self.labels.values().all(|l| matches!(l, Label::Infinity))
    }

    pub fn is_crystallographic(&self) -> bool {
        self.labels
            .values()
            .all(|l| matches!(l, Label::Finite(3) | Label::Finite(4) | Label::Finite(6) | Label::Infinity))
    }

    /// Vertex degree in the underlying simple graph (labels `>= 3`).
    pub fn degree(&self, i: usize) -> usize {
        (1..=self.n)
            .filter(|&j| j != i && self.label(i, j) != Label::Finite(2))
            .count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (1..=self.n).any(|i| self.degree(i) == 0)
    }

    /// Concatenates vertex sets; all cross labels are 2.
    pub fn disjoint_union(&self, other: &CoxeterGraph) -> CoxeterGraph {
        let mut g = CoxeterGraph::discrete(self.n + other.n);
        for (i, j, l) in self.edges() {
            g.set_label(i, j, l).expect("valid edge");
        }
        for (i, j, l) in other.edges() {
            g.set_label(i + self.n, j + self.n, l).expect("valid edge");
        }
        g
    }

    /// Connected components of the underlying simple graph, each sorted,
    /// ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in 1..=self.n {
                    if !seen[u] && u != v && self.label(v, u) != Label::Finite(2) {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `verts` (1-based, ascending), reindexed to
    /// `1..=verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> CoxeterGraph {
        let mut g = CoxeterGraph::discrete(verts.len());
        for (a, &va) in verts.iter().enumerate() {
            for (b, &vb) in verts.iter().enumerate().skip(a + 1) {
                let l = self.label(va, vb);
                if l != Label::Finite(2) {
                    g.set_label(a + 1, b + 1, l).expect("valid edge");
                }
            }
        }
        g
    }

    /// DSL rendering; `parse` of the result reproduces the graph.
    pub fn to_dsl(&self) -> String {
        let mut out = format!("coxeter n={};", self.n);
        for (i, j, l) in self.edges() {
            out.push_str(&format!(" m {} {} = {};", i, j, l.render()));
        }
        out
    }

    /// JSON mirror: `{"n":3,"labels":[[1,2,3],[2,3,"inf"]]}`.
    pub fn to_json(&self) -> Value {
        let labels: Vec<Value> = self
            .edges()
            .map(|(i, j, l)| match l {
                Label::Finite(m) => json!([i, j, m]),
                Label::Infinity => json!([i, j, "inf"]),
            })
            .collect();
        json!({ "n": self.n, "labels": labels })
    }

    pub fn from_json(v: &Value) -> Result<CoxeterGraph> {
        let bad = |msg: &str| Error::Syntax {
            line: 0,
            msg: msg.to_string(),
        };
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing vertex count \"n\""))? as usize;
        if n == 0 {
            return Err(bad("vertex count must be >= 1"));
        }
        let mut g = CoxeterGraph::discrete(n);
        let mut seen = std::collections::BTreeSet::new();
        if let Some(entries) = v.get("labels") {
            let arr = entries.as_array().ok_or_else(|| bad("\"labels\" must be an array"))?;
            for item in arr {
                let triple = item.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                    bad("each label must be a [i, j, m] triple")
                })?;
                let i = triple[0].as_u64().ok_or_else(|| bad("vertex must be an integer"))? as usize;
                let j = triple[1].as_u64().ok_or_else(|| bad("vertex must be an integer"))? as usize;
                let l = match &triple[2] {
                    Value::String(s) if s == "inf" => Label::Infinity,
                    Value::Number(num) => Label::Finite(
                        num.as_u64().ok_or_else(|| bad("label must be a positive integer"))? as u32,
                    ),
                    _ => return Err(bad("label must be an integer or \"inf\"")),
                };
                if !seen.insert((i.min(j), i.max(j))) {
                    return Err(Error::DuplicatePair { i, j });
                }
                g.set_label(i, j, l)?;
            }
        }
        Ok(g)
    }

    /// Parse the graph DSL. `#` starts a line comment; statements are
    /// separated by `;`.
    pub fn parse(text: &str) -> Result<CoxeterGraph> {
        let mut graph: Option<CoxeterGraph> = None;
        let mut seen = std::collections::BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            for stmt in content.split(';') {
                let toks: Vec<&str> = stmt.split_whitespace().collect();
                if toks.is_empty() {
                    continue;
                }
                match toks[0] {
                    "coxeter" => {
                        if graph.is_some() {
                            return Err(Error::Syntax {
                                line,
                                msg: "repeated coxeter header".into(),
                            });
                        }
                        let rest = toks[1..].join("");
                        let n = rest
                            .strip_prefix("n=")
                            .and_then(|s| s.parse::<usize>().ok())
                            .ok_or_else(|| Error::Syntax {
                                line,
                                msg: format!("expected n=<int>, got {:?}", stmt.trim()),
                            })?;
                        if n == 0 {
                            return Err(Error::Syntax {
                                line,
                                msg: "vertex count must be >= 1".into(),
                            });
                        }
                        graph = Some(CoxeterGraph::discrete(n));
                    }
                    "m" => {
                        let g = graph.as_mut().ok_or_else(|| Error::Syntax {
                            line,
                            msg: "label before coxeter header".into(),
                        })?;
                        // grammar: m <i> <j> = <label>
                        if toks.len() != 5 || toks[3] != "=" {
                            return Err(Error::Syntax {
                                line,
                                msg: format!("expected m <i> <j> = <label>, got {:?}", stmt.trim()),
                            });
                        }
                        let i: usize = toks[1].parse().map_err(|_| Error::Syntax {
                            line,
                            msg: format!("bad vertex {:?}", toks[1]),
                        })?;
                        let j: usize = toks[2].parse().map_err(|_| Error::Syntax {
                            line,
                            msg: format!("bad vertex {:?}", toks[2]),
                        })?;
                        let l = if toks[4] == "inf" {
                            Label::Infinity
                        } else {
                            Label::Finite(toks[4].parse().map_err(|_| Error::Syntax {
                                line,
                                msg: format!("bad label {:?}", toks[4]),
                            })?)
                        };
                        if !seen.insert((i.min(j), i.max(j))) {
                            return Err(Error::DuplicatePair { i, j });
                        }
                        g.set_label(i, j, l)?;
                    }
                    other => {
                        return Err(Error::Syntax {
                            line,
                            msg: format!("unknown statement {:?}", other),
                        });
                    }
                }
            }
        }
        graph.ok_or(Error::Syntax {
            line: 0,
            msg: "missing coxeter header".into(),
        })
    }
}

fn chain(n: usize) -> CoxeterGraph {
    let mut g = CoxeterGraph::discrete(n);
    for i in 1..n {
        g.set_label(i, i + 1, Label::Finite(3)).expect("chain edge");
    }
    g
}

/// Builders for the irreducible types. Vertex numbering matches the
/// standard references: `A_n`/`B_n`/`F_4`/`H_n` are chains; `D_n` is the
/// chain `1..n-2` with both `n-1` and `n` joined to `n-2`; `E_n` is the
/// chain `1,3,4,..,n` with `2` joined to `4`. Affine graphs append the
/// extra vertex as index `n+1`.
pub mod families {
    use super::*;

    pub fn type_a(n: usize) -> Result<CoxeterGraph> {
        if n < 1 {
            return Err(Error::RankOutOfRange { family: "A".into(), rank: n });
        }
        Ok(chain(n).with_name(&format!("A{}", n)))
    }

    pub fn type_b(n: usize) -> Result<CoxeterGraph> {
        if n < 2 {
            return Err(Error::RankOutOfRange { family: "B".into(), rank: n });
        }
        let mut g = chain(n);
        g.set_label(n - 1, n, Label::Finite(4))?;
        Ok(g.with_name(&format!("B{}", n)))
    }

    pub fn type_d(n: usize) -> Result<CoxeterGraph> {
        if n < 4 {
            return Err(Error::RankOutOfRange { family: "D".into(), rank: n });
        }
        let mut g = chain(n - 2);
        let mut g2 = CoxeterGraph::discrete(n);
        for (i, j, l) in g.edges() {
            g2.set_label(i, j, l)?;
        }
        g2.set_label(n - 2, n - 1, Label::Finite(3))?;
        g2.set_label(n - 2, n, Label::Finite(3))?;
        g = g2;
        Ok(g.with_name(&format!("D{}", n)))
    }

    pub fn type_e(n: usize) -> Result<CoxeterGraph> {
        if !(6..=8).contains(&n) {
            return Err(Error::RankOutOfRange { family: "E".into(), rank: n });
        }
        let mut g = CoxeterGraph::discrete(n);
        let spine: Vec<usize> = std::iter::once(1).chain(3..=n).collect();
        for w in spine.windows(2) {
            g.set_label(w[0], w[1], Label::Finite(3))?;
        }
        g.set_label(2, 4, Label::Finite(3))?;
        Ok(g.with_name(&format!("E{}", n)))
    }

    pub fn type_f4() -> CoxeterGraph {
        let mut g = chain(4);
        g.set_label(2, 3, Label::Finite(4)).expect("edge");
        g.with_name("F4")
    }

    pub fn type_h(n: usize) -> Result<CoxeterGraph> {
        if !(3..=4).contains(&n) {
            return Err(Error::RankOutOfRange { family: "H".into(), rank: n });
        }
        let mut g = chain(n);
        g.set_label(1, 2, Label::Finite(5))?;
        Ok(g.with_name(&format!("H{}", n)))
    }

    pub fn type_i2(p: u32) -> Result<CoxeterGraph> {
        if p < 3 {
            return Err(Error::RankOutOfRange { family: "I2".into(), rank: p as usize });
        }
        let mut g = CoxeterGraph::discrete(2);
        g.set_label(1, 2, Label::Finite(p))?;
        Ok(g.with_name(&format!("I2({})", p)))
    }

    pub fn affine_a1() -> CoxeterGraph {
        let mut g = CoxeterGraph::discrete(2);
        g.set_label(1, 2, Label::Infinity).expect("edge");
        g.with_name("~A1")
    }

    /// Cycle on `n+1` vertices, `n >= 2`.
    pub fn affine_a(n: usize) -> Result<CoxeterGraph> {
        if n < 2 {
            return Err(Error::RankOutOfRange { family: "~A".into(), rank: n });
        }
        let mut g = CoxeterGraph::discrete(n + 1);
        for i in 1..n {
            g.set_label(i, i + 1, Label::Finite(3))?;
        }
        g.set_label(1, n + 1, Label::Finite(3))?;
        g.set_label(n, n + 1, Label::Finite(3))?;
        Ok(g.with_name(&format!("~A{}", n)))
    }

    pub fn affine_d(n: usize) -> Result<CoxeterGraph> {
        let fin = type_d(n)?;
        let mut g = CoxeterGraph::discrete(n + 1);
        for (i, j, l) in fin.edges() {
            g.set_label(i, j, l)?;
        }
        g.set_label(2, n + 1, Label::Finite(3))?;
        Ok(g.with_name(&format!("~D{}", n)))
    }

    pub fn affine_e(n: usize) -> Result<CoxeterGraph> {
        let fin = type_e(n)?;
        let mut g = CoxeterGraph::discrete(n + 1);
        for (i, j, l) in fin.edges() {
            g.set_label(i, j, l)?;
        }
        let attach = match n {
            6 => 2,
            7 => 1,
            _ => 8,
        };
        g.set_label(attach, n + 1, Label::Finite(3))?;
        Ok(g.with_name(&format!("~E{}", n)))
    }

    // The remaining affine families exist only as classification targets.

    pub(super) fn affine_b(n: usize) -> Result<CoxeterGraph> {
        if n < 3 {
            return Err(Error::RankOutOfRange { family: "~B".into(), rank: n });
        }
        let fin = type_b(n)?;
        let mut g = CoxeterGraph::discrete(n + 1);
        for (i, j, l) in fin.edges() {
            g.set_label(i, j, l)?;
        }
        g.set_label(2, n + 1, Label::Finite(3))?;
        Ok(g.with_name(&format!("~B{}", n)))
    }

    pub(super) fn affine_c(n: usize) -> Result<CoxeterGraph> {
        if n < 2 {
            return Err(Error::RankOutOfRange { family: "~C".into(), rank: n });
        }
        let mut g = CoxeterGraph::discrete(n + 1);
        for i in 1..=n {
            g.set_label(i, i + 1, Label::Finite(3))?;
        }
        g.set_label(1, 2, Label::Finite(4))?;
        g.set_label(n, n + 1, Label::Finite(4))?;
        Ok(g.with_name(&format!("~C{}", n)))
    }

    pub(super) fn affine_f4() -> CoxeterGraph {
        let fin = type_f4();
        let mut g = CoxeterGraph::discrete(5);
        for (i, j, l) in fin.edges() {
            g.set_label(i, j, l).expect("edge");
        }
        g.set_label(1, 5, Label::Finite(3)).expect("edge");
        g.with_name("~F4")
    }

    pub(super) fn affine_g2() -> CoxeterGraph {
        let mut g = CoxeterGraph::discrete(3);
        g.set_label(1, 2, Label::Finite(6)).expect("edge");
        g.set_label(2, 3, Label::Finite(3)).expect("edge");
        g.with_name("~G2")
    }
}

/// Build a catalog graph by name: `A4`, `B3`, `D5`, `E7`, `F4`, `H3`,
/// `I2(7)`, `~A1`, `~A3`, `~D4`, `~E6`, ...
pub fn catalog(name: &str) -> Result<CoxeterGraph> {
    let name = name.trim();
    let unknown = || Error::UnknownName(name.to_string());
    if let Some(rest) = name.strip_prefix("~") {
        let (family, rank) = split_family(rest).ok_or_else(unknown)?;
        return match family {
            "A" if rank == 1 => Ok(families::affine_a1()),
            "A" => families::affine_a(rank),
            "D" => families::affine_d(rank),
            "E" => families::affine_e(rank),
            _ => Err(unknown()),
        };
    }
    if let Some(rest) = name.strip_prefix("I2(") {
        let p: u32 = rest
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(unknown)?;
        return families::type_i2(p);
    }
    let (family, rank) = split_family(name).ok_or_else(unknown)?;
    match family {
        "A" => families::type_a(rank),
        "B" => families::type_b(rank),
        "D" => families::type_d(rank),
        "E" => families::type_e(rank),
        "F" if rank == 4 => Ok(families::type_f4()),
        "H" => families::type_h(rank),
        _ => Err(unknown()),
    }
}

fn split_family(s: &str) -> Option<(&str, usize)> {
    let idx = s.find(|c: char| c.is_ascii_digit())?;
    let (family, digits) = s.split_at(idx);
    let rank: usize = digits.parse().ok()?;
    if family.is_empty() {
        return None;
    }
    Some((family, rank))
}

/// Classification flags plus per-component type recognition.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassificationReport {
    pub is_small: bool,
    pub is_right_angled: bool,
    pub is_crystallographic: bool,
    pub is_spherical: bool,
    pub is_affine: bool,
    pub components: Vec<(Vec<usize>, String)>,
}

/// Classify a graph against the spherical and affine catalogs.
pub fn classify(g: &CoxeterGraph) -> ClassificationReport {
    let comps = g.components();
    let mut named = Vec::with_capacity(comps.len());
    let mut all_spherical = true;
    let mut all_affine = true;
    for comp in comps {
        let sub = g.induced(&comp);
        let name = recognize(&sub);
        let spherical = matches!(kind_of(&name), TypeKind::Spherical);
        let affine = matches!(kind_of(&name), TypeKind::Affine);
        all_spherical &= spherical;
        all_affine &= affine;
        named.push((comp, name));
    }
    ClassificationReport {
        is_small: g.is_small(),
        is_right_angled: g.is_right_angled(),
        is_crystallographic: g.is_crystallographic(),
        is_spherical: all_spherical,
        is_affine: all_affine,
        components: named,
    }
}

enum TypeKind {
    Spherical,
    Affine,
    Unknown,
}

fn kind_of(name: &str) -> TypeKind {
    if name == "unrecognized" {
        TypeKind::Unknown
    } else if name.starts_with('~') {
        TypeKind::Affine
    } else {
        TypeKind::Spherical
    }
}

/// Recognize one connected graph against the catalogs; candidates are
/// filtered by rank, then checked by label-preserving isomorphism search.
fn recognize(g: &CoxeterGraph) -> String {
    let k = g.n();
    if k == 1 {
        return "A1".to_string();
    }
    if k == 2 {
        // one edge; the label decides everything
        return match g.label(1, 2) {
            Label::Finite(2) => "unrecognized".to_string(), // disconnected, not reachable
            Label::Finite(3) => "A2".to_string(),
            Label::Finite(4) => "B2".to_string(),
            Label::Finite(p) => format!("I2({})", p),
            Label::Infinity => "~A1".to_string(),
        };
    }
    let mut candidates: Vec<CoxeterGraph> = Vec::new();
    let mut push = |g: Result<CoxeterGraph>| {
        if let Ok(c) = g {
            candidates.push(c);
        }
    };
    push(families::type_a(k));
    push(families::type_b(k));
    push(families::type_d(k));
    push(families::type_e(k));
    if k == 4 {
        push(Ok(families::type_f4()));
    }
    push(families::type_h(k));
    push(families::affine_a(k - 1));
    push(families::affine_b(k - 1));
    push(families::affine_c(k - 1));
    push(families::affine_d(k - 1));
    if (7..=9).contains(&k) {
        push(families::affine_e(k - 1));
    }
    if k == 5 {
        push(Ok(families::affine_f4()));
    }
    if k == 3 {
        push(Ok(families::affine_g2()));
    }
    for cand in candidates {
        if isomorphic(g, &cand) {
            return cand.name().expect("catalog graphs are named").to_string();
        }
    }
    "unrecognized".to_string()
}

/// Label-preserving graph isomorphism by backtracking. Components here are
/// catalog-sized, so plain search with degree pruning is plenty.
fn isomorphic(a: &CoxeterGraph, b: &CoxeterGraph) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (1..=n).map(|i| a.degree(i)).collect();
    let mut db: Vec<usize> = (1..=n).map(|i| b.degree(i)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut la: Vec<Label> = a.edges().map(|(_, _, l)| l).collect();
    let mut lb: Vec<Label> = b.edges().map(|(_, _, l)| l).collect();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return false;
    }
    let mut map = vec![0usize; n + 1]; // a-vertex -> b-vertex, 0 = unset
    let mut used = vec![false; n + 1];
    backtrack(a, b, &mut map, &mut used, 1)
}

fn backtrack(
    a: &CoxeterGraph,
    b: &CoxeterGraph,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    let n = a.n();
    if v > n {
        return true;
    }
    for w in 1..=n {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (1..v).all(|u| a.label(u, v) == b.label(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(a, b, map, used, v + 1) {
            return true;
        }
        map[v] = 0;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_a3_example() {
        let g = CoxeterGraph::parse("coxeter n=3; m 1 2 = 3; m 2 3 = 3").unwrap();
        assert_eq!(g, catalog("A3").unwrap());
        assert_eq!(g.label(1, 3), Label::Finite(2));
    }

    #[test]
    fn parse_defaults_and_infinity() {
        let g = CoxeterGraph::parse("coxeter n=2").unwrap();
        assert_eq!(g.label(1, 2), Label::Finite(2));
        let h = CoxeterGraph::parse("coxeter n=2; m 1 2 = inf").unwrap();
        assert_eq!(h.label(1, 2), Label::Infinity);
        assert_eq!(h, catalog("~A1").unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            CoxeterGraph::parse("coxeter n=2; m 1 1 = 3"),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            CoxeterGraph::parse("coxeter n=2; m 1 2 = 1"),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            CoxeterGraph::parse("coxeter n=2; m 1 3 = 3"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            CoxeterGraph::parse("coxeter n=3; m 1 2 = 3; m 2 1 = 3"),
            Err(Error::DuplicatePair { .. })
        ));
        assert!(matches!(
            CoxeterGraph::parse("coxeter n=3; q 1 2"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn comments_are_ignored()  {
        let g = CoxeterGraph::parse("# header\ncoxeter n=2; # trailing\nm 1 2 = 3;\n").unwrap();
        assert_eq!(g, catalog("A2").unwrap());
    }

    #[test]
    fn dsl_round_trip() {
        for name in ["A4", "B3", "D5", "E7", "F4", "H4", "I2(7)", "~A1", "~A3", "~D4", "~E8"] {
            let g = catalog(name).unwrap();
            let back = CoxeterGraph::parse(&g.to_dsl()).unwrap();
            assert_eq!(g, back, "{}", name);
        }
    }

    #[test]
    fn json_round_trip() {
        let g = catalog("~D5").unwrap();
        let back = CoxeterGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
        let v: Value = serde_json::from_str(r#"{"n":3,"labels":[[1,2,3],[2,3,3]]}"#).unwrap();
        assert_eq!(CoxeterGraph::from_json(&v).unwrap(), catalog("A3").unwrap());
    }

    #[test]
    fn catalog_shapes() {
        let a2 = catalog("A2").unwrap();
        assert_eq!(a2.label(1, 2), Label::Finite(3));
        let i26 = catalog("I2(6)").unwrap();
        assert_eq!(i26.label(1, 2), Label::Finite(6));
        let aa2 = catalog("~A2").unwrap();
        assert_eq!(aa2.n(), 3);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(aa2.label(i, j), Label::Finite(3));
        }
        assert!(matches!(catalog("D3"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(catalog("Q5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn classify_catalog() {
        let r = classify(&catalog("A4").unwrap());
        assert!(r.is_small && r.is_spherical && r.is_crystallographic && !r.is_affine);
        assert_eq!(r.components, vec![(vec![1, 2, 3, 4], "A4".to_string())]);

        let r = classify(&catalog("H3").unwrap());
        assert!(!r.is_small && r.is_spherical);

        let r = classify(&catalog("~A2").unwrap());
        assert!(r.is_small && r.is_affine && !r.is_spherical);

        // right-angled triangle with two infinite edges
        let mut g = CoxeterGraph::discrete(3);
        g.set_label(1, 2, Label::Infinity).unwrap();
        g.set_label(2, 3, Label::Infinity).unwrap();
        let r = classify(&g);
        assert!(r.is_right_angled && r.is_small && !r.is_spherical && !r.is_affine);
    }

    #[test]
    fn classify_union_concatenates_components() {
        let g = catalog("A2").unwrap().disjoint_union(&catalog("~A1").unwrap());
        let r = classify(&g);
        assert_eq!(
            r.components,
            vec![
                (vec![1, 2], "A2".to_string()),
                (vec![3, 4], "~A1".to_string())
            ]
        );
        assert!(!r.is_spherical && !r.is_affine);
    }

    #[test]
    fn spherical_and_affine_catalogs_are_disjoint() {
        let spherical = ["A1", "A5", "B4", "D6", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)"];
        for name in spherical {
            let r = classify(&catalog(name).unwrap());
            assert!(r.is_spherical && !r.is_affine, "{}", name);
        }
        let affine = ["~A1", "~A4", "~D4", "~D6", "~E6", "~E7", "~E8"];
        for name in affine {
            let r = classify(&catalog(name).unwrap());
            assert!(r.is_affine && !r.is_spherical, "{}", name);
        }
    }

    #[test]
    fn recognizes_nonsmall_affine_families() {
        for (g, want) in [
            (families::affine_c(2).unwrap(), "~C2"),
            (families::affine_b(3).unwrap(), "~B3"),
            (families::affine_f4(), "~F4"),
            (families::affine_g2(), "~G2"),
        ] {
            let r = classify(&g);
            assert_eq!(r.components[0].1, want);
            assert!(r.is_affine);
        }
    }
}
