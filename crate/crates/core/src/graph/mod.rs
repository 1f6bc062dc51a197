//! Finite simple graphs plus the one-vertex loop graph `T`.
//!
//! Adjacency is stored as one bitset row per vertex. Every constructor
//! keeps rows symmetric with an empty diagonal, except for `T` whose single
//! vertex is adjacent to itself. `T` is the unit of the tensor product.

mod bits;
mod census;
mod maxclique;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::json;

use crate::error::{Error, Result};

pub use census::{
    count_cliques, extension_profile, extension_profile_containing, for_each_clique,
    CensusOptions, CliqueCensus, ExtensionProfile, DEFAULT_CENSUS_BUDGET,
};
pub use maxclique::{max_clique, max_clique_order};

pub const DEFAULT_VERTEX_BOUND: usize = 20_000;

/// Size ceilings for graph constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_VERTEX_BOUND,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &'static str, n: u128) -> Result<()> {
        if n > self.max_vertices as u128 {
            return Err(Error::BoundExceeded {
                what,
                size: n.to_string(),
                bound: self.max_vertices as u64,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    is_t: bool,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            is_t: false,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// The single vertex with a loop.
    pub fn loop_graph() -> Self {
        let mut g = Self::empty(1);
        g.connect(0, 0);
        g.is_t = true;
        g.labels = Some(vec!["*".into()]);
        g
    }

    /// Builds a simple graph from a symmetric predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.connect(u, v);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self loop at {u}")));
            }
            g.connect(u, v);
        }
        Ok(g)
    }

    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_t(&self) -> bool {
        self.is_t
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|v| self.label(v)).collect()
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Vertex carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        (0..self.n).find(|&v| self.label(v) == label)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::popcount(self.row(v)) as usize
    }

    /// Number of edges; the loop of `T` counts as one.
    pub fn edge_count(&self) -> usize {
        if self.is_t {
            return 1;
        }
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Number of vertices adjacent to both `u` and `v`.
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of vertices adjacent to no member of `set`: the size of the
    /// intersection of the members' closed non-neighbourhoods.
    pub fn joint_non_neighbors(&self, set: &[usize]) -> usize {
        let mut union = vec![0u64; self.words];
        for &s in set {
            for (u, &r) in union.iter_mut().zip(self.row(s)) {
                *u |= r;
            }
        }
        self.n - bits::popcount(&union) as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Pairwise adjacent distinct vertices. In `T` the single vertex is a
    /// clique with itself.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        if self.check_vertices(set).is_err() {
            return false;
        }
        if self.is_t {
            return true;
        }
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Bitset of vertices adjacent to every member of `set`.
    pub(crate) fn common_neighborhood(&self, set: &[usize]) -> Vec<u64> {
        let mut c = bits::full(self.n);
        for &s in set {
            for (x, &r) in c.iter_mut().zip(self.row(s)) {
                *x &= r;
            }
        }
        c
    }

    /// Number of vertices adjacent to every member of the clique `set`.
    pub fn extension_count(&self, set: &[usize]) -> Result<usize> {
        self.check_vertices(set)?;
        if self.is_t {
            return Err(Error::LoopGraph("extension counts"));
        }
        if !self.is_clique(set) {
            return Err(Error::NotAClique);
        }
        Ok(bits::popcount(&self.common_neighborhood(set)) as usize)
    }

    pub fn is_inextensible(&self, set: &[usize]) -> bool {
        self.is_clique(set) && matches!(self.extension_count(set), Ok(0))
    }

    /// Graphviz rendering with construction labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", self.label(v).replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    /// `{"vertices": [labels], "adjacency": [[neighbours]], "loop": bool}`.
    pub fn to_adjacency_json(&self) -> serde_json::Value {
        let adjacency: Vec<Vec<usize>> = (0..self.n).map(|v| self.neighbors(v).collect()).collect();
        json!({
            "vertices": self.labels(),
            "adjacency": adjacency,
            "loop": self.is_t,
        })
    }

    /// Histogram of vertex degrees.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in 0..self.n {
            *h.entry(self.degree(v)).or_insert(0) += 1;
        }
        h
    }
}

/// Tensor (categorical) product. Vertex `(a, b)` has index `a * |B| + b`.
/// `T` is the identity on either side.
pub fn tensor_product(a: &Graph, b: &Graph, limits: &Limits) -> Result<Graph> {
    if a.is_t {
        return Ok(b.clone());
    }
    if b.is_t {
        return Ok(a.clone());
    }
    let n = a.n as u128 * b.n as u128;
    limits.check("tensor product", n)?;
    let nb = b.n;
    let mut g = Graph::empty(n as usize);
    for a1 in 0..a.n {
        for a2 in a.neighbors(a1) {
            for b1 in 0..nb {
                let u = a1 * nb + b1;
                let w = g.words;
                let row = &mut g.adj[u * w..(u + 1) * w];
                for b2 in b.neighbors(b1) {
                    bits::set(row, a2 * nb + b2);
                }
            }
        }
    }
    if a.has_labels() || b.has_labels() {
        let labels = (0..a.n)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
            .collect();
        g.labels = Some(labels);
    }
    Ok(g)
}

/// Replaces each vertex by `t` pairwise non-adjacent copies; copy `c` of
/// vertex `v` has index `v * t + c`.
pub fn blowup(g: &Graph, t: usize, limits: &Limits) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidArgument("blow-up factor must be positive".into()));
    }
    if t == 1 {
        return Ok(g.clone());
    }
    if g.is_t {
        return Err(Error::LoopGraph("blow-up"));
    }
    let n = g.n as u128 * t as u128;
    limits.check("blow-up", n)?;
    let mut out = Graph::empty(n as usize);
    for u in 0..g.n {
        for v in g.neighbors(u) {
            for c in 0..t {
                for d in 0..t {
                    let x = u * t + c;
                    let w = out.words;
                    bits::set(&mut out.adj[x * w..(x + 1) * w], v * t + d);
                }
            }
        }
    }
    if g.has_labels() {
        out.labels = Some(
            (0..g.n)
                .flat_map(|v| (0..t).map(move |c| (v, c)))
                .map(|(v, c)| format!("{}#{c}", g.label(v)))
                .collect(),
        );
    }
    Ok(out)
}

pub fn complement(g: &Graph) -> Result<Graph> {
    if g.is_t {
        return Err(Error::LoopGraph("complement"));
    }
    let mut out = Graph::from_fn(g.n, |u, v| !g.has_edge(u, v));
    out.labels = g.labels.clone();
    Ok(out)
}

/// Disjoint union; vertices of later graphs are numbered after earlier ones.
pub fn disjoint_union(graphs: &[&Graph]) -> Result<Graph> {
    if graphs.iter().any(|g| g.is_t) {
        return Err(Error::LoopGraph("disjoint union"));
    }
    let n = graphs.iter().map(|g| g.n).sum();
    let mut out = Graph::empty(n);
    let mut offset = 0;
    for g in graphs {
        for (u, v) in g.edges() {
            out.connect(offset + u, offset + v);
        }
        offset += g.n;
    }
    Ok(out)
}

/// Checks that `map` (indexed by vertices of `a`) is a bijection onto the
/// vertices of `b` preserving adjacency in both directions.
pub fn verify_isomorphism(a: &Graph, b: &Graph, map: &[usize]) -> Result<bool> {
    if map.len() != a.n {
        return Err(Error::NotABijection(format!(
            "map has {} entries for {} vertices",
            map.len(),
            a.n
        )));
    }
    let mut seen = vec![false; b.n];
    for &x in map {
        if x >= b.n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotABijection(format!("image {x} out of range or repeated")));
        }
    }
    if a.n != b.n {
        return Err(Error::NotABijection("vertex counts differ".into()));
    }
    if a.is_t != b.is_t || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    // with equal edge counts, forward preservation forces the inverse too
    Ok((0..a.n).all(|u| a.neighbors(u).all(|v| b.has_edge(map[u], map[v]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        blowup(&Graph::complete(3), 2, &Limits::default()).unwrap()
    }

    #[test]
    fn loop_graph_is_tensor_unit() {
        let t = Graph::loop_graph();
        let k3 = Graph::complete(3);
        let lim = Limits::default();
        assert_eq!(tensor_product(&t, &k3, &lim).unwrap(), k3);
        assert_eq!(tensor_product(&k3, &t, &lim).unwrap(), k3);
        assert!(tensor_product(&t, &t, &lim).unwrap().is_t());
        assert!(t.has_edge(0, 0));
    }

    #[test]
    fn tensor_examples() {
        let lim = Limits::default();
        let g = tensor_product(&Graph::complete(3), &Graph::complete(4), &lim).unwrap();
        assert_eq!(g.n(), 12);
        // brute force from the definition
        for u in 0..12 {
            for v in 0..12 {
                let (a1, b1, a2, b2) = (u / 4, u % 4, v / 4, v % 4);
                assert_eq!(g.has_edge(u, v), a1 != a2 && b1 != b2);
            }
        }
        let k22 = tensor_product(&Graph::complete(2), &Graph::complete(2), &lim).unwrap();
        assert_eq!(k22.n(), 4);
        assert_eq!(k22.edge_count(), 2);
        assert_eq!(k22.regular_degree(), Some(1));
        let small = Limits { max_vertices: 10 };
        assert!(tensor_product(&Graph::complete(3), &Graph::complete(4), &small).is_err());
    }

    #[test]
    fn blowup_examples() {
        let lim = Limits::default();
        let k4 = Graph::complete(4);
        assert_eq!(blowup(&k4, 1, &lim).unwrap(), k4);
        let oct = octahedron();
        assert_eq!((oct.n(), oct.edge_count()), (6, 12));
        let k33 = blowup(&Graph::complete(2), 3, &lim).unwrap();
        assert_eq!((k33.n(), k33.edge_count(), k33.regular_degree()), (6, 9, Some(3)));
        assert!(blowup(&Graph::loop_graph(), 2, &lim).is_err());
    }

    #[test]
    fn complement_and_union() {
        let k2 = Graph::complete(2);
        let three = disjoint_union(&[&k2, &k2, &k2]).unwrap();
        assert_eq!(complement(&three).unwrap(), octahedron());
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(complement(&complement(&g).unwrap()).unwrap(), g);
        let k1 = Graph::complete(1);
        let two = disjoint_union(&[&k1, &k1]).unwrap();
        assert_eq!((two.n(), two.edge_count()), (2, 0));
        assert!(complement(&Graph::loop_graph()).is_err());
    }

    #[test]
    fn extension_and_inextensible() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.extension_count(&[]).unwrap(), 4);
        assert_eq!(k4.extension_count(&[2]).unwrap(), 3);
        assert!(!k4.is_inextensible(&[0, 1]));
        assert!(k4.is_inextensible(&[0, 1, 2, 3]));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.extension_count(&[0, 2]).unwrap_err(), Error::NotAClique);
        assert!(!g.is_clique(&[0, 0]));
    }

    #[test]
    fn isomorphism_checks() {
        let oct = octahedron();
        let id: Vec<usize> = (0..6).collect();
        assert!(verify_isomorphism(&oct, &oct, &id).unwrap());
        let k6 = Graph::complete(6);
        assert!(!verify_isomorphism(&oct, &k6, &id).unwrap());
        assert!(verify_isomorphism(&oct, &oct, &[0, 0, 1, 2, 3, 4]).is_err());
        // a genuine relabelling of the octahedron: swap two parts
        let perm = [2, 3, 0, 1, 4, 5];
        assert!(verify_isomorphism(&oct, &oct, &perm).unwrap());
        // a non-automorphism permutation
        let bad = [0, 2, 1, 3, 4, 5];
        assert!(!verify_isomorphism(&oct, &oct, &bad).unwrap());
    }

    #[test]
    fn exports() {
        let g = Graph::complete(2).with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  0 -- 1;\n}\n");
        let j = g.to_adjacency_json();
        assert_eq!(j["adjacency"], json!([[1], [0]]));
        assert_eq!(j["vertices"], json!(["a", "b"]));
        assert!(Graph::loop_graph().to_dot().contains("0 -- 0"));
    }
}
