//! Finite simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// A directed edge `(tail, head)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Arc {
        Arc::new(self.head, self.tail)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::MultiEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeated
    /// edges; used for orbit contractions.
    pub fn from_edges_simplified(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| Arc::new(u, v)))
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.regular_degree() == Some(3)
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge `{u, v}` met from root `s`
    /// closes a walk of length `d(u) + d(v) + 1` containing a cycle no
    /// longer than that, and the minimum over roots is attained exactly.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two color classes, or `None` if an odd cycle exists. For
    /// disconnected graphs each component's class containing its least
    /// vertex goes to the first set.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n()];
        for comp in self.components() {
            let s = comp[0];
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let zero = (0..self.n()).filter(|&v| color[v] == 0).collect();
        let one = (0..self.n()).filter(|&v| color[v] == 1).collect();
        Some((zero, one))
    }

    /// The graph with vertex `v` renamed to `images[v]`.
    pub fn relabeled(&self, images: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[images[u]] = list.iter().map(|&v| images[v]).collect();
            adj[images[u]].sort_unstable();
        }
        Graph { adj }
    }

    /// Whether `images` (a bijection of the vertex set) preserves adjacency.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.n()
            && self.edges().all(|(u, v)| self.has_edge(images[u], images[v]))
    }

    /// Contracts each block of a partition to a single vertex; two blocks
    /// are adjacent when some edge joins them. Edges inside a block vanish.
    pub fn contract(&self, blocks: &[Vec<usize>]) -> Graph {
        let mut block_of = vec![0; self.n()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        Graph::from_edges_simplified(
            blocks.len(),
            self.edges().map(|(u, v)| (block_of[u], block_of[v])),
        )
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        decode_graph6(text)
    }
}

/// graph6: a size header followed by the upper triangle of the adjacency
/// matrix in column order, six bits per byte, each byte offset by 63.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let sextet = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(_) => Err(bad(i, "byte outside the printable range 63..=126")),
            None => Err(bad(i, "unexpected end of input")),
        }
    };
    let mut pos = 0;
    if bytes.starts_with(b">>graph6<<") {
        pos = 10;
    }
    let n;
    if bytes.get(pos) == Some(&126) {
        if bytes.get(pos + 1) == Some(&126) {
            let mut v = 0;
            for k in 0..6 {
                v = (v << 6) | sextet(pos + 2 + k)?;
            }
            n = v;
            pos += 8;
        } else {
            let mut v = 0;
            for k in 0..3 {
                v = (v << 6) | sextet(pos + 1 + k)?;
            }
            n = v;
            pos += 4;
        }
    } else {
        n = sextet(pos)?;
        pos += 1;
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(bad(
            bytes.len().min(pos + nbytes),
            &format!("expected {nbytes} adjacency bytes for {n} vertices, found {}", bytes.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(pos + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(pos + nbytes - 1)?;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(bad(pos + nbytes - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Small named graphs used throughout tests and the census.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges).expect("simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        Graph::from_edges(a + b, &edges).expect("simple")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("simple")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("simple")
    }

    /// The 3-cube on bit strings `0..8`.
    pub fn cube() -> Graph {
        let edges: Vec<_> = (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|(u, v)| u < v)
            .collect();
        Graph::from_edges(8, &edges).expect("simple")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("simple")
    }
}
