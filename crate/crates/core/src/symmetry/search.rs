//! Individualization-refinement search for automorphism groups and
//! canonical labelings.
//!
//! Nodes of the search tree are ordered partitions kept equitable by
//! colour refinement. New cells are ranked by (old cell, sorted neighbour
//! cells), so every step commutes with relabeling the input graph. The
//! automorphism group is collected along the leftmost path: for each level
//! and each vertex of the target cell not yet in the orbit of the path
//! vertex, one leaf of the corresponding subtree that matches the first
//! leaf yields a new generator. Canonical labeling then walks the tree
//! keeping the greatest (trace, relabeled edge list) leaf, exploring one
//! child per orbit of the pointwise stabilizer of the current path.

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};

/// Default vertex bound for the search.
pub const DEFAULT_MAX_VERTICES: usize = 512;

#[derive(Clone)]
struct Node {
    color: Vec<u32>,
    cells: usize,
    invariant: u64,
}

impl Node {
    fn is_discrete(&self) -> bool {
        self.cells == self.color.len()
    }

    fn target_cell(&self) -> Vec<usize> {
        let mut size = vec![0usize; self.cells];
        for &c in &self.color {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).expect("non-discrete");
        (0..self.color.len())
            .filter(|&v| self.color[v] as usize == target)
            .collect()
    }
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn word(&mut self, w: u32) {
        for b in w.to_le_bytes() {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x100_0000_01b3);
        }
    }
}

struct Refiner<'a> {
    g: &'a Graph,
}

impl Refiner<'_> {
    fn root(&self) -> Node {
        let mut node = Node {
            color: vec![0; self.g.n()],
            cells: usize::from(self.g.n() > 0),
            invariant: 0,
        };
        self.refine(&mut node);
        node
    }

    fn child(&self, node: &Node, v: usize) -> Node {
        let c = node.color[v];
        let color = node
            .color
            .iter()
            .enumerate()
            .map(|(u, &cu)| if cu > c || (cu == c && u != v) { cu + 1 } else { cu })
            .collect();
        let mut child = Node {
            color,
            cells: node.cells + 1,
            invariant: 0,
        };
        self.refine(&mut child);
        child
    }

    fn refine(&self, node: &mut Node) {
        let n = self.g.n();
        let mut hash = Fnv::new();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut keys: Vec<u32> = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            keys.clear();
            offsets.clear();
            for v in 0..n {
                offsets.push(keys.len());
                keys.push(node.color[v]);
                let start = keys.len();
                keys.extend(self.g.neighbors(v).iter().map(|&u| node.color[u]));
                keys[start..].sort_unstable();
            }
            offsets.push(keys.len());
            let key = |v: usize| &keys[offsets[v]..offsets[v + 1]];
            order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)).then(a.cmp(&b)));
            let mut cells = 0u32;
            let mut new_color = vec![0u32; n];
            let mut run = 0u32;
            for (i, &v) in order.iter().enumerate() {
                if i > 0 && key(order[i - 1]) != key(v) {
                    for &w in key(order[i - 1]) {
                        hash.word(w);
                    }
                    hash.word(run);
                    cells += 1;
                    run = 0;
                }
                new_color[v] = cells;
                run += 1;
            }
            if n > 0 {
                for &w in key(order[n - 1]) {
                    hash.word(w);
                }
                hash.word(run);
                cells += 1;
            }
            let stable = cells as usize == node.cells;
            node.color = new_color;
            node.cells = cells as usize;
            if stable {
                break;
            }
        }
        hash.word(node.cells as u32);
        node.invariant = hash.0;
    }
}

/// Result of a full search: the automorphism group and a canonical labeling.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[v]` is the canonical id of vertex `v`.
    pub labeling: Vec<usize>,
    /// graph6 of the canonically relabeled graph.
    pub certificate: String,
    pub automorphisms: PermGroup,
}

fn check_bound(g: &Graph, max_vertices: usize) -> Result<()> {
    if g.n() > max_vertices {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            bound: max_vertices,
        });
    }
    Ok(())
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_bounded(g, DEFAULT_MAX_VERTICES)
}

pub fn automorphism_group_bounded(g: &Graph, max_vertices: usize) -> Result<PermGroup> {
    check_bound(g, max_vertices)?;
    Ok(AutSearch::run(g).group)
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    canonical_form_bounded(g, DEFAULT_MAX_VERTICES)
}

pub fn canonical_form_bounded(g: &Graph, max_vertices: usize) -> Result<Canonical> {
    check_bound(g, max_vertices)?;
    let aut = AutSearch::run(g);
    let refiner = Refiner { g };
    let mut canon = CanonSearch {
        refiner: &refiner,
        group: &aut.group,
        best: None,
    };
    let root = refiner.root();
    canon.dfs(&root, &mut Vec::new(), &mut Vec::new());
    let (_, _, labeling) = canon.best.expect("at least one leaf");
    let certificate = encode_graph6(&g.relabeled(&labeling));
    Ok(Canonical {
        labeling,
        certificate,
        automorphisms: aut.group,
    })
}

/// Isomorphism test by certificate comparison.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.certificate == canonical_form(b)?.certificate)
}

struct AutSearch {
    group: PermGroup,
}

impl AutSearch {
    fn run(g: &Graph) -> AutSearch {
        let n = g.n();
        let refiner = Refiner { g };
        let mut nodes = vec![refiner.root()];
        let mut path = Vec::new();
        while !nodes.last().expect("root").is_discrete() {
            let node = nodes.last().expect("root");
            let v = node.target_cell()[0];
            path.push(v);
            nodes.push(refiner.child(node, v));
        }
        let first_leaf = &nodes.last().expect("leaf").color;
        let invariants: Vec<u64> = nodes.iter().map(|n| n.invariant).collect();

        let mut gens: Vec<Permutation> = Vec::new();
        for level in (0..path.len()).rev() {
            let cell = nodes[level].target_cell();
            let p = path[level];
            let mut orbit = orbit_under(n, &gens, p);
            for &w in &cell {
                if orbit[w] {
                    continue;
                }
                let child = refiner.child(&nodes[level], w);
                if let Some(aut) = find_automorphism(&refiner, child, level + 1, &invariants, first_leaf) {
                    gens.push(aut);
                    orbit = orbit_under(n, &gens, p);
                }
            }
        }
        let group = PermGroup::new(n, gens).expect("same degree");
        AutSearch { group }
    }
}

fn orbit_under(n: usize, gens: &[Permutation], p: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[p] = true;
    let mut stack = vec![p];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn find_automorphism(
    refiner: &Refiner<'_>,
    node: Node,
    depth: usize,
    invariants: &[u64],
    first_leaf: &[u32],
) -> Option<Permutation> {
    if invariants.get(depth) != Some(&node.invariant) {
        return None;
    }
    if node.is_discrete() {
        let n = first_leaf.len();
        let mut at = vec![0usize; n];
        for (v, &c) in node.color.iter().enumerate() {
            at[c as usize] = v;
        }
        let images: Vec<usize> = first_leaf.iter().map(|&c| at[c as usize]).collect();
        return refiner
            .g
            .is_automorphism(&images)
            .then(|| Permutation::from_images(images).expect("bijection"));
    }
    for w in node.target_cell() {
        let child = refiner.child(&node, w);
        if let Some(aut) = find_automorphism(refiner, child, depth + 1, invariants, first_leaf) {
            return Some(aut);
        }
    }
    None
}

type Leaf = (Vec<u64>, Vec<(u32, u32)>, Vec<usize>);

struct CanonSearch<'a> {
    refiner: &'a Refiner<'a>,
    group: &'a PermGroup,
    best: Option<Leaf>,
}

impl CanonSearch<'_> {
    fn dfs(&mut self, node: &Node, path: &mut Vec<usize>, trace: &mut Vec<u64>) {
        trace.push(node.invariant);
        let prune = match &self.best {
            Some((best, _, _)) => {
                let k = trace.len().min(best.len());
                trace[..k] < best[..k]
            }
            None => false,
        };
        if !prune {
            if node.is_discrete() {
                self.offer_leaf(node, trace);
            } else {
                let cell = node.target_cell();
                let reps = self.orbit_representatives(path, &cell);
                for w in reps {
                    let child = self.refiner.child(node, w);
                    path.push(w);
                    self.dfs(&child, path, trace);
                    path.pop();
                }
            }
        }
        trace.pop();
    }

    fn orbit_representatives(&self, path: &[usize], cell: &[usize]) -> Vec<usize> {
        if self.group.is_trivial() {
            return cell.to_vec();
        }
        let stab = self.group.pointwise_stabilizer(path);
        let mut taken = vec![false; self.group.degree()];
        let mut reps = Vec::new();
        for &w in cell {
            if taken[w] {
                continue;
            }
            reps.push(w);
            for x in stab.orbit(w) {
                taken[x] = true;
            }
        }
        reps
    }

    fn offer_leaf(&mut self, node: &Node, trace: &[u64]) {
        let labeling: Vec<usize> = node.color.iter().map(|&c| c as usize).collect();
        let mut edges: Vec<(u32, u32)> = self
            .refiner
            .g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (labeling[u] as u32, labeling[v] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((bt, be, _)) => (trace, &edges) > (bt.as_slice(), be),
        };
        if better {
            self.best = Some((trace.to_vec(), edges, labeling));
        }
    }
}
