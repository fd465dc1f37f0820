//! Coxeter graphs and exact arithmetic in finite Coxeter groups.
//!
//! A [`CoxeterGraph`] is a labeled simple graph: vertices are generator
//! names, an edge labeled `m >= 3` records the relation order of the pair,
//! and an absent edge means the pair commutes (`m = 2`). Only the
//! crystallographic labels 3, 4, 6 are accepted, which covers every family
//! this crate classifies (A, B, D, E6, E7, E8, F4, G2) while keeping the
//! reflection representation over the integers.

mod classify;
mod element;

pub use classify::{d_shaped_graph, Family, StandardType};
pub use element::{weak_order_gcd, CoxeterElement};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use element::Mat;

/// Errors from graph construction, parsing, and group computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("duplicate edge `{0}`--`{1}`")]
    DuplicateEdge(String, String),
    #[error("unsupported edge label {0} (crystallographic labels are 3, 4, 6)")]
    BadLabel(u32),
    #[error("graph is not of supported finite type")]
    NotFiniteType,
    #[error("vertex subset is not connected")]
    NotConnected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("chord diagram is malformed: {0}")]
    BadChordDiagram(String),
    #[error("embedded graph is malformed: {0}")]
    BadEmbeddedGraph(String),
}

/// Tables that exist only for finite-type graphs, built once on demand.
pub(crate) struct FiniteTables {
    /// All positive roots of the crystallographic root system.
    pub positive_roots: Vec<Vec<i64>>,
    /// Matrix of the longest element.
    pub w0: Mat,
    /// The permutation `i -> j` with `w0 s_i w0 = s_j`.
    pub tau: Vec<usize>,
    /// Lexicographically least reduced word of `w0` (vertex indices).
    pub w0_word: Vec<usize>,
}

pub(crate) struct GraphData {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Symmetric Coxeter matrix with unit diagonal.
    m: Vec<Vec<u32>>,
    /// Generalized Cartan entries: `cart[i][j] = <alpha_j, alpha_i^v>`.
    cart: Vec<Vec<i64>>,
    gen_mats: Vec<Mat>,
    finite: OnceLock<Option<Arc<FiniteTables>>>,
    classification: OnceLock<Option<(StandardType, Vec<usize>)>>,
}

/// A labeled simple graph encoding a Coxeter matrix.
///
/// Cheap to clone (shared internals). Immutable after construction; the
/// per-graph tables (positive roots, longest element) are built once and
/// shared, so concurrent reads are safe.
#[derive(Clone)]
pub struct CoxeterGraph {
    data: Arc<GraphData>,
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.names == other.data.names && self.data.m == other.data.m)
    }
}
impl Eq for CoxeterGraph {}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGraph({})", self.data.names.join(","))
    }
}

impl CoxeterGraph {
    /// Builds a graph from vertex names and labeled edges. An omitted pair
    /// has `m = 2`; an edge label defaults to 3 elsewhere (see [`parse`]).
    ///
    /// [`parse`]: CoxeterGraph::parse
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(&str, &str, u32)],
    ) -> Result<Self, GraphError> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if index.insert(v.clone(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let l = names.len();
        let mut m = vec![vec![2u32; l]; l];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(a, b, label) in edges {
            let i = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if i == j {
                return Err(GraphError::LoopEdge(a.to_string()));
            }
            if m[i][j] != 2 {
                return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
            }
            if !matches!(label, 3 | 4 | 6) {
                return Err(GraphError::BadLabel(label));
            }
            m[i][j] = label;
            m[j][i] = label;
        }
        Ok(Self::from_matrix(names, index, m))
    }

    fn from_matrix(names: Vec<String>, index: HashMap<String, usize>, m: Vec<Vec<u32>>) -> Self {
        let l = names.len();
        // Crystallographic Cartan entries. For an asymmetric label the root
        // lengths are assigned by vertex order; the Coxeter group does not
        // depend on the choice.
        let mut cart = vec![vec![0i64; l]; l];
        for i in 0..l {
            cart[i][i] = 2;
            for j in 0..l {
                if i == j {
                    continue;
                }
                cart[i][j] = match m[i][j] {
                    2 => 0,
                    3 => -1,
                    4 => {
                        if i < j {
                            -1
                        } else {
                            -2
                        }
                    }
                    6 => {
                        if i < j {
                            -1
                        } else {
                            -3
                        }
                    }
                    other => unreachable!("label {other} rejected at construction"),
                };
            }
        }
        let gen_mats = (0..l).map(|i| Mat::reflection(&cart, i)).collect();
        CoxeterGraph {
            data: Arc::new(GraphData {
                names,
                index,
                m,
                cart,
                gen_mats,
                finite: OnceLock::new(),
                classification: OnceLock::new(),
            }),
        }
    }

    /// Number of vertices (the rank).
    pub fn rank(&self) -> usize {
        self.data.names.len()
    }

    /// Vertex names in declaration order.
    pub fn vertex_names(&self) -> &[String] {
        &self.data.names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, GraphError> {
        self.data
            .index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.data.names[i]
    }

    /// Coxeter matrix entry for a vertex pair.
    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.data.m[i][j]
    }

    pub(crate) fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.data.cart
    }

    pub(crate) fn gen_mat(&self, i: usize) -> &Mat {
        &self.data.gen_mats[i]
    }

    /// Labeled edges `(i, j, m)` with `i < j` and `m >= 3`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let l = self.rank();
        let mut out = Vec::new();
        for i in 0..l {
            for j in i + 1..l {
                if self.data.m[i][j] >= 3 {
                    out.push((i, j, self.data.m[i][j]));
                }
            }
        }
        out
    }

    /// Vertices adjacent to `i` (label >= 3).
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&j| j != i && self.data.m[i][j] >= 3)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let l = self.rank();
        if l == 0 {
            return true;
        }
        let mut seen = vec![false; l];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components as sorted index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let l = self.rank();
        let mut seen = vec![false; l];
        let mut comps = Vec::new();
        for start in 0..l {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The subgraph induced by a vertex subset, with vertex order inherited
    /// from the parent. Returns the subgraph and the parent indices of its
    /// vertices.
    pub fn induced_subgraph(&self, subset: &[usize]) -> (CoxeterGraph, Vec<usize>) {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let names: Vec<String> = idx.iter().map(|&i| self.data.names[i].clone()).collect();
        let mut index = HashMap::new();
        for (k, n) in names.iter().enumerate() {
            index.insert(n.clone(), k);
        }
        let l = idx.len();
        let mut m = vec![vec![2u32; l]; l];
        for a in 0..l {
            m[a][a] = 1;
            for b in 0..l {
                if a != b {
                    m[a][b] = self.data.m[idx[a]][idx[b]];
                }
            }
        }
        (CoxeterGraph::from_matrix(names, index, m), idx)
    }

    /// Classification of a connected graph as a standard finite type.
    ///
    /// Returns the type and the bijection `vertex index -> standard number`
    /// (1-based canonical numbering as documented in `classify`), or `None` when the graph is
    /// disconnected, of infinite type, or of a non-crystallographic type.
    /// Diagram-automorphism ties are broken by taking the lexicographically
    /// least bijection in input vertex order.
    pub fn classify_finite_type(&self) -> Option<(StandardType, Vec<usize>)> {
        self.data
            .classification
            .get_or_init(|| classify::classify(self))
            .clone()
    }

    /// True when every connected component classifies as a finite type.
    pub fn is_finite_type(&self) -> bool {
        self.finite_tables().is_some()
    }

    pub(crate) fn finite_tables(&self) -> Option<Arc<FiniteTables>> {
        self.data
            .finite
            .get_or_init(|| {
                for comp in self.components() {
                    let (sub, _) = self.induced_subgraph(&comp);
                    sub.classify_finite_type()?;
                }
                Some(Arc::new(element::build_finite_tables(self)))
            })
            .clone()
    }

    pub(crate) fn require_finite(&self) -> Result<Arc<FiniteTables>, GraphError> {
        self.finite_tables().ok_or(GraphError::NotFiniteType)
    }

    /// Identity element of `W`.
    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement::identity(self)
    }

    /// The simple reflection for a named vertex.
    pub fn generator(&self, name: &str) -> Result<CoxeterElement, GraphError> {
        Ok(CoxeterElement::generator(self, self.vertex_index(name)?))
    }

    pub fn generator_by_index(&self, i: usize) -> CoxeterElement {
        CoxeterElement::generator(self, i)
    }

    /// The longest element `w_0` of a finite-type graph.
    pub fn longest_element(&self) -> Result<CoxeterElement, GraphError> {
        let t = self.require_finite()?;
        Ok(CoxeterElement::from_mat(self, t.w0.clone()))
    }

    /// Count of positive roots (equals the length of `w_0`).
    pub fn positive_root_count(&self) -> Result<usize, GraphError> {
        Ok(self.require_finite()?.positive_roots.len())
    }

    /// Full enumeration of a finite Coxeter group, breadth-first from the
    /// identity. Intended as a desk-scale test oracle.
    pub fn enumerate_small_group(&self, cap: usize) -> Result<Vec<CoxeterElement>, GraphError> {
        element::enumerate(self, cap)
    }

    /// Parses the graph text format: one record per line, `vertex <name>` or
    /// `edge <a> <b> [m]` (label defaults to 3), `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String, u32)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse_err = |msg: &str| GraphError::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            match it.next() {
                Some("vertex") => {
                    let name = it.next().ok_or_else(|| parse_err("missing vertex name"))?;
                    if it.next().is_some() {
                        return Err(parse_err("trailing tokens after vertex name"));
                    }
                    vertices.push(name.to_string());
                }
                Some("edge") => {
                    let a = it.next().ok_or_else(|| parse_err("missing endpoint"))?;
                    let b = it.next().ok_or_else(|| parse_err("missing endpoint"))?;
                    let label = match it.next() {
                        None => 3,
                        Some(tok) => tok
                            .parse::<u32>()
                            .map_err(|_| parse_err("edge label must be an integer"))?,
                    };
                    if it.next().is_some() {
                        return Err(parse_err("trailing tokens after edge"));
                    }
                    edges.push((a.to_string(), b.to_string(), label));
                }
                Some(other) => {
                    return Err(parse_err(&format!("unknown record `{other}`")));
                }
                None => unreachable!(),
            }
        }
        let edge_refs: Vec<(&str, &str, u32)> = edges
            .iter()
            .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
            .collect();
        CoxeterGraph::new(&vertices, &edge_refs)
    }

    /// Renders the graph text format accepted by [`parse`].
    ///
    /// [`parse`]: CoxeterGraph::parse
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in self.vertex_names() {
            out.push_str(&format!("vertex {name}\n"));
        }
        for (i, j, m) in self.edges() {
            if m == 3 {
                out.push_str(&format!(
                    "edge {} {}\n",
                    self.vertex_name(i),
                    self.vertex_name(j)
                ));
            } else {
                out.push_str(&format!(
                    "edge {} {} {}\n",
                    self.vertex_name(i),
                    self.vertex_name(j),
                    m
                ));
            }
        }
        out
    }
}

/// A chord diagram in the disk: `2l` boundary points in cyclic order,
/// paired off into `l` chords.
#[derive(Debug, Clone)]
pub struct ChordDiagram {
    /// Endpoint positions of each chord, as indices into the cyclic order
    /// `0 .. 2l` of boundary points.
    pub chords: Vec<(usize, usize)>,
}

impl ChordDiagram {
    pub fn new(chords: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let l = chords.len();
        let mut seen = vec![false; 2 * l];
        for &(a, b) in &chords {
            if a == b {
                return Err(GraphError::BadChordDiagram(format!(
                    "chord has equal endpoints {a}"
                )));
            }
            for p in [a, b] {
                if p >= 2 * l {
                    return Err(GraphError::BadChordDiagram(format!(
                        "endpoint {p} out of range 0..{}",
                        2 * l
                    )));
                }
                if seen[p] {
                    return Err(GraphError::BadChordDiagram(format!(
                        "endpoint {p} used twice"
                    )));
                }
                seen[p] = true;
            }
        }
        Ok(ChordDiagram { chords })
    }

    /// True when the two chords interleave in the cyclic order, i.e. the
    /// chords cross inside the disk.
    fn crosses(&self, i: usize, j: usize) -> bool {
        let (a, b) = ordered(self.chords[i]);
        let (c, d) = ordered(self.chords[j]);
        let inside = |x: usize| a < x && x < b;
        inside(c) != inside(d)
    }
}

fn ordered((a, b): (usize, usize)) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The intersection diagram of a chord diagram: one vertex `x_i` per chord,
/// a plain (label 3) edge exactly between crossing chords.
pub fn chord_to_coxeter(d: &ChordDiagram) -> CoxeterGraph {
    let l = d.chords.len();
    let names: Vec<String> = (1..=l).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            if d.crosses(i, j) {
                edges.push((i, j));
            }
        }
    }
    let edge_refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|&(i, j)| (names[i].as_str(), names[j].as_str(), 3))
        .collect();
    CoxeterGraph::new(&names, &edge_refs).expect("intersection diagram is always a simple graph")
}

/// A graph embedded in a surface, recorded combinatorially: vertices are
/// punctures, edges are arcs. No loops and no multiple edges.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EmbeddedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(GraphError::BadEmbeddedGraph(format!("loop at vertex {a}")));
            }
            if a >= vertices || b >= vertices {
                return Err(GraphError::BadEmbeddedGraph(format!(
                    "edge ({a},{b}) out of range"
                )));
            }
            if !seen.insert(ordered((a, b))) {
                return Err(GraphError::BadEmbeddedGraph(format!(
                    "multiple edge ({a},{b})"
                )));
            }
        }
        Ok(EmbeddedGraph { vertices, edges })
    }
}

/// The Coxeter graph of a graph embedded in a surface: one vertex `x_i` per
/// edge `a_i`, with `m = 3` exactly when two edges share an endpoint.
pub fn embedded_graph_to_coxeter(g: &EmbeddedGraph) -> CoxeterGraph {
    let l = g.edges.len();
    let names: Vec<String> = (1..=l).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let (a, b) = g.edges[i];
            let (c, d) = g.edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    let edge_refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|&(i, j)| (names[i].as_str(), names[j].as_str(), 3))
        .collect();
    CoxeterGraph::new(&names, &edge_refs).expect("edge graph is always a simple graph")
}

#[cfg(test)]
mod tests;
