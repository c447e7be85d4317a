//! Graphs as reflexive symmetric relations, and the strip and crown graphs.
//!
//! The strip `B_n` has columns `1..=2n+1`; odd columns carry the vertices
//! `x_j^+`, `x_j^-`, even columns additionally `x_j^0`. For every
//! `i = 1..=n` and `v ∈ {+, -}` its edges are
//!
//! ```text
//! x_{2i-1}^v - x_{2i}^v - x_{2i+1}^v      x_{2i-1}^v - x_{2i}^0 - x_{2i+1}^v
//! ```
//!
//! The crowns `C_n^±` glue column `2n+1` onto column 1, with a sign twist
//! for `C_n^-`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::monoid::{Sign, TriSign, Word};

/// Default upper bound on vertex counts for isomorphism testing.
pub const DEFAULT_GRAPH_CAP: usize = 64;

/// A finite set with a reflexive symmetric relation. Only the off-diagonal
/// part is stored; the diagonal is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

/// JSON form `{vertices: [labels], edges: [[a, b]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl Graph {
    /// Builds a graph from vertex labels and an edge list. The relation is
    /// the diagonal plus the symmetric closure of the edges.
    pub fn new<S, E>(vertices: impl IntoIterator<Item = S>, edges: impl IntoIterator<Item = (E, E)>) -> Result<Self, GraphError>
    where
        S: Into<String>,
        E: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            adj[ia].insert(ib);
            adj[ib].insert(ia);
        }
        Ok(Graph { labels, index, adj })
    }

    /// Builds from labels and index pairs; pairs on the diagonal are ignored.
    pub(crate) fn from_index_edges(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Graph { labels, index, adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `(x, y) ∈ G_2`.
    pub fn related(&self, x: usize, y: usize) -> bool {
        x == y || self.adj[x].contains(&y)
    }

    /// Off-diagonal neighbours.
    pub fn neighbors(&self, x: usize) -> &BTreeSet<usize> {
        &self.adj[x]
    }

    /// Valency: number of edges at `x`.
    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    /// Edges `{x, y}` as pairs with `x < y`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (x, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&y| y > x).map(|&y| (x, y)));
        }
        out
    }

    /// All of `G_2`, diagonal included, sorted.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.num_vertices() {
            let mut row: Vec<usize> = self.adj[x].iter().copied().collect();
            row.push(x);
            row.sort_unstable();
            out.extend(row.into_iter().map(|y| (x, y)));
        }
        out
    }

    /// Full subgraph on `keep` (in the given order) with the inclusion map.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for y in &self.adj[v] {
                if let Some(&j) = pos.get(y) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        (Graph::from_index_edges(labels, edges), keep.to_vec())
    }

    /// The graph with vertex `v` renamed and moved to position `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut labels = vec![String::new(); self.num_vertices()];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = format!("{}'", self.labels[v]);
        }
        let edges = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b]));
        Graph::from_index_edges(labels, edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| [self.labels[a].clone(), self.labels[b].clone()])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph, GraphError> {
        Graph::new(
            json.vertices.iter().cloned(),
            json.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())),
        )
    }

    /// Whether the graph contains three pairwise adjacent vertices.
    pub fn has_triangle(&self) -> bool {
        self.edges()
            .into_iter()
            .any(|(a, b)| self.adj[a].intersection(&self.adj[b]).next().is_some())
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.num_vertices()).map(|v| self.degree(v)).min()
    }
}

/// A structure-preserving vertex map between graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    source: Arc<Graph>,
    target: Arc<Graph>,
    map: Vec<usize>,
}

impl GraphMorphism {
    /// Validates that every related pair maps to a related pair. Edges may
    /// collapse onto a single vertex.
    pub fn new(map: Vec<usize>, source: Arc<Graph>, target: Arc<Graph>) -> Result<Self, GraphError> {
        if map.len() != source.num_vertices() {
            return Err(GraphError::MapLength {
                expected: source.num_vertices(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.num_vertices()) {
            return Err(GraphError::UnknownVertex(format!("#{bad}")));
        }
        for (x, y) in source.edges() {
            if !target.related(map[x], map[y]) {
                return Err(GraphError::NotAMorphism(
                    source.label(x).to_string(),
                    source.label(y).to_string(),
                    target.label(map[x]).to_string(),
                    target.label(map[y]).to_string(),
                ));
            }
        }
        Ok(GraphMorphism { source, target, map })
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let map = (0..g.num_vertices()).collect();
        GraphMorphism {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        if other.target != self.source {
            return Err(GraphError::MismatchedTargets);
        }
        Ok(GraphMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            map: other.map.iter().map(|&y| self.map[y]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &y)| i == y)
    }
}

/// Whether the morphisms jointly hit every vertex and every related pair of
/// their common target.
pub fn is_cover(fs: &[GraphMorphism]) -> Result<bool, GraphError> {
    let first = fs.first().ok_or(GraphError::EmptyFamily)?;
    let target = first.target();
    if fs.iter().any(|f| f.target() != target) {
        return Err(GraphError::MismatchedTargets);
    }
    let mut hit_vertices = vec![false; target.num_vertices()];
    let mut hit_pairs = BTreeSet::new();
    for f in fs {
        for x in 0..f.source().num_vertices() {
            hit_vertices[f.apply(x)] = true;
        }
        for (x, y) in f.source().edges() {
            let (a, b) = (f.apply(x), f.apply(y));
            if a != b {
                hit_pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    // Diagonal pairs are hit exactly when their vertex is.
    Ok(hit_vertices.into_iter().all(|h| h) && hit_pairs.len() == target.num_edges())
}

/// A vertex `x_j^v` of the strip or a crown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrownVertex {
    pub column: usize,
    pub sign: TriSign,
}

impl CrownVertex {
    pub fn new(column: usize, sign: TriSign) -> Self {
        CrownVertex { column, sign }
    }
}

impl fmt::Display for CrownVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^{}", self.column, self.sign.to_char())
    }
}

fn column_signs(j: usize) -> &'static [TriSign] {
    if j % 2 == 1 {
        &[TriSign::Plus, TriSign::Minus]
    } else {
        &TriSign::ALL
    }
}

/// Vertices of the first `columns` columns, in basis order.
fn strip_vertices(columns: usize) -> Vec<CrownVertex> {
    (1..=columns)
        .flat_map(|j| column_signs(j).iter().map(move |&v| CrownVertex::new(j, v)))
        .collect()
}

/// Position of `x_j^v` in the vertex order of `B_n` (and of `C_n^s` for `j <= 2n`).
pub fn strip_index(v: CrownVertex) -> usize {
    let m = v.column - 1;
    let offset = 2 * m.div_ceil(2) + 3 * (m / 2);
    let within = column_signs(v.column)
        .iter()
        .position(|&s| s == v.sign)
        .expect("sign admissible for column");
    offset + within
}

/// Vertices of `B_n` in basis order.
pub fn b_vertices(n: usize) -> Vec<CrownVertex> {
    strip_vertices(2 * n + 1)
}

fn b_edges(n: usize) -> Vec<(CrownVertex, CrownVertex)> {
    let mut out = Vec::with_capacity(8 * n);
    for i in 1..=n {
        for v in [TriSign::Plus, TriSign::Minus] {
            let left = CrownVertex::new(2 * i - 1, v);
            let right = CrownVertex::new(2 * i + 1, v);
            let mid = CrownVertex::new(2 * i, v);
            let hub = CrownVertex::new(2 * i, TriSign::Zero);
            out.extend([(left, mid), (mid, right), (left, hub), (hub, right)]);
        }
    }
    out
}

/// The strip `B_n`: `5n + 2` vertices, `8n` edges.
pub fn build_b(n: usize) -> Graph {
    let verts = b_vertices(n);
    let labels = verts.iter().map(ToString::to_string).collect();
    let edges = b_edges(n)
        .into_iter()
        .map(|(a, b)| (strip_index(a), strip_index(b)));
    Graph::from_index_edges(labels, edges)
}

/// `F_i`, the full subgraph of `B_n` on columns `2i-1, 2i, 2i+1`, and its
/// inclusion `e_i`.
pub fn build_f(b: &Arc<Graph>, n: usize, i: usize) -> Result<GraphMorphism, GraphError> {
    if i == 0 || i > n {
        return Err(GraphError::IndexOutOfRange { n, index: i });
    }
    let keep: Vec<usize> = b_vertices(n)
        .into_iter()
        .filter(|v| v.column + 1 >= 2 * i && v.column <= 2 * i + 1)
        .map(strip_index)
        .collect();
    let (f, incl) = b.induced(&keep);
    GraphMorphism::new(incl, Arc::new(f), b.clone())
}

/// Image of a strip vertex in `C_n^s`.
fn crown_image(n: usize, s: Sign, v: CrownVertex) -> CrownVertex {
    if v.column == 2 * n + 1 {
        CrownVertex::new(1, TriSign::from(s) * v.sign)
    } else {
        v
    }
}

/// The crown `C_n^s` and the projection `f_n^s: B_n → C_n^s`.
pub fn build_c(b: &Arc<Graph>, n: usize, s: Sign) -> Result<GraphMorphism, GraphError> {
    if n < 2 {
        return Err(GraphError::CrownLevel(n));
    }
    let verts = strip_vertices(2 * n);
    let labels = verts.iter().map(ToString::to_string).collect();
    let map: Vec<usize> = b_vertices(n)
        .into_iter()
        .map(|v| strip_index(crown_image(n, s, v)))
        .collect();
    let edges: Vec<(usize, usize)> = b.edges().into_iter().map(|(x, y)| (map[x], map[y])).collect();
    let c = Graph::from_index_edges(labels, edges);
    GraphMorphism::new(map, b.clone(), Arc::new(c))
}

/// The action `x_j^v ↦ x_j^{w_j v}` of `w ∈ W_n` on `B_n`.
pub fn act_on_b(b: &Arc<Graph>, w: &Word) -> Result<GraphMorphism, GraphError> {
    let n = w.level();
    let map = b_vertices(n)
        .into_iter()
        .map(|v| strip_index(CrownVertex::new(v.column, w.at(v.column) * v.sign)))
        .collect();
    GraphMorphism::new(map, b.clone(), b.clone())
}

/// The strip, its pieces and both crowns for one level, built once.
#[derive(Debug, Clone)]
pub struct Crowns {
    n: usize,
    b: Arc<Graph>,
    pieces: Vec<GraphMorphism>,
    plus: GraphMorphism,
    minus: GraphMorphism,
}

impl Crowns {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        let b = Arc::new(build_b(n));
        let pieces = (1..=n).map(|i| build_f(&b, n, i)).collect::<Result<_, _>>()?;
        let plus = build_c(&b, n, Sign::Plus)?;
        let minus = build_c(&b, n, Sign::Minus)?;
        Ok(Crowns {
            n,
            b,
            pieces,
            plus,
            minus,
        })
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn strip(&self) -> &Arc<Graph> {
        &self.b
    }

    /// The inclusions `e_1, …, e_n`.
    pub fn pieces(&self) -> &[GraphMorphism] {
        &self.pieces
    }

    /// `f_n^s`.
    pub fn projection(&self, s: Sign) -> &GraphMorphism {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// `C_n^s`.
    pub fn crown(&self, s: Sign) -> &Arc<Graph> {
        self.projection(s).target()
    }

    pub fn act_on_b(&self, w: &Word) -> Result<GraphMorphism, GraphError> {
        act_on_b(&self.b, w)
    }

    /// The morphism `w_*: C_n^s → C_n^t`, `t = w_1 w_{2n+1} s`, making the
    /// square with `f_n^s` and `f_n^t` commute.
    pub fn act_on_c(&self, w: &Word, s: Sign) -> Result<GraphMorphism, GraphError> {
        let t = w.act_on_sign(s);
        let on_b = self.act_on_b(w)?;
        let fs = self.projection(s);
        let ft = self.projection(t);
        let mut map: Vec<Option<usize>> = vec![None; fs.target().num_vertices()];
        for x in 0..self.b.num_vertices() {
            let img = ft.apply(on_b.apply(x));
            let slot = &mut map[fs.apply(x)];
            match slot {
                Some(prev) if *prev != img => {
                    return Err(GraphError::IllDefinedQuotient(
                        fs.target().label(fs.apply(x)).to_string(),
                    ))
                }
                _ => *slot = Some(img),
            }
        }
        let map = map
            .into_iter()
            .map(|m| m.expect("projection is surjective on vertices"))
            .collect();
        GraphMorphism::new(map, fs.target().clone(), ft.target().clone())
    }

    /// Restriction of `w_*` to the invariant subgraph `F_i`.
    pub fn act_on_piece(&self, w: &Word, i: usize) -> Result<GraphMorphism, GraphError> {
        let e = &self.pieces[i - 1];
        let on_b = self.act_on_b(w)?;
        let back: HashMap<usize, usize> = e.map().iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let map = e
            .map()
            .iter()
            .map(|&v| {
                let img = on_b.apply(v);
                back.get(&img)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex(self.b.label(img).to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GraphMorphism::new(map, e.source().clone(), e.source().clone())
    }
}

/// For all distinct `x, y` some `z` is related to `y` but not to `x`.
pub fn is_admissible(g: &Graph) -> bool {
    let n = g.num_vertices();
    (0..n).all(|x| {
        (0..n)
            .filter(|&y| y != x)
            .all(|y| (0..n).any(|z| !g.related(x, z) && g.related(y, z)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleComponent {
    pub vertices: usize,
    pub edges: usize,
    pub is_cycle: bool,
}

/// Components of the subgraph spanned by edges at valency-2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSummary {
    pub components: Vec<CycleComponent>,
}

impl CycleSummary {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn all_cycles(&self) -> bool {
        self.components.iter().all(|c| c.is_cycle)
    }

    /// Cycle lengths (in edges), sorted.
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.components.iter().map(|c| c.edges).collect();
        v.sort_unstable();
        v
    }
}

/// Collects every edge with an endpoint of valency 2 and splits the result
/// into connected components, flagging the ones that are simple cycles.
pub fn valency2_cycle_count(g: &Graph) -> CycleSummary {
    let n = g.num_vertices();
    let sub_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| g.degree(a) == 2 || g.degree(b) == 2)
        .collect();
    let mut sub_adj = vec![Vec::new(); n];
    for &(a, b) in &sub_edges {
        sub_adj[a].push(b);
        sub_adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] || sub_adj[start].is_empty() {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut verts = Vec::new();
        while let Some(v) = queue.pop_front() {
            verts.push(v);
            for &u in &sub_adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        let degree_sum: usize = verts.iter().map(|&v| sub_adj[v].len()).sum();
        components.push(CycleComponent {
            vertices: verts.len(),
            edges: degree_sum / 2,
            is_cycle: verts.iter().all(|&v| sub_adj[v].len() == 2),
        });
    }
    CycleSummary { components }
}

/// Stable colouring of the disjoint union of `g` and `h` by iterated
/// neighbourhood refinement, starting from degrees.
fn refine_colours(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colours: Vec<Vec<usize>> = graphs
        .iter()
        .map(|gr| (0..gr.num_vertices()).map(|v| gr.degree(v)).collect())
        .collect();
    let mut classes = usize::MAX;
    loop {
        let mut signatures: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
        for (k, gr) in graphs.iter().enumerate() {
            signatures.push(
                (0..gr.num_vertices())
                    .map(|v| {
                        let mut nb: Vec<usize> = gr.neighbors(v).iter().map(|&u| colours[k][u]).collect();
                        nb.sort_unstable();
                        (colours[k][v], nb)
                    })
                    .collect(),
            );
        }
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().flatten().collect();
        let rank: HashMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<Vec<usize>> = signatures
            .iter()
            .map(|sig| sig.iter().map(|s| rank[s]).collect())
            .collect();
        let count = distinct.len();
        colours = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let h_col = colours.pop().unwrap();
    let g_col = colours.pop().unwrap();
    (g_col, h_col)
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>, GraphError> {
    for gr in [g, h] {
        if gr.num_vertices() > cap {
            return Err(GraphError::CapExceeded {
                size: gr.num_vertices(),
                cap,
            });
        }
    }
    let n = g.num_vertices();
    if n != h.num_vertices() || g.num_edges() != h.num_edges() {
        return Ok(None);
    }
    let (gc, hc) = refine_colours(g, h);
    let mut gh = gc.clone();
    let mut hh = hc.clone();
    gh.sort_unstable();
    hh.sort_unstable();
    if gh != hh {
        return Ok(None);
    }
    // Visit vertices of g in BFS order from rarest colours so each new
    // vertex is constrained by already-mapped neighbours.
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &gc {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (class_size[&gc[v]], v))
            .unwrap();
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(g, h, &gc, &hc, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    gc: &[usize],
    hc: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.num_vertices() {
        if used[cand] || hc[cand] != gc[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.related(u, v) == h.related(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend_iso(g, h, gc, hc, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn graphs_isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<bool, GraphError> {
    Ok(find_isomorphism(g, h, cap)?.is_some())
}
