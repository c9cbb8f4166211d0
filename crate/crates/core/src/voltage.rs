//! Voltage assignments over abelian groups and regular covers.
//!
//! A voltage assignment labels each arc `x` of a base graph with `zeta(x)`
//! in an abelian group `K`, with `zeta(x^-1) = zeta(x)^-1`. The derived
//! graph has vertices `(w, k)` and edges `{(w, k), (w', zeta(x) k)}` for
//! every arc `x = (w, w')`. Derived vertex `(w, k)` has id
//! `w * |K| + index(k)`.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::abelian::{AbelianGroup, GroupAutomorphism, GroupElement};
use crate::error::{Error, Result};
use crate::graph::{Arc, Graph};
use crate::symmetry::{PermGroup, Permutation};

/// A T-reduced voltage assignment.
#[derive(Debug, Clone)]
pub struct VoltageAssignment {
    base: Graph,
    group: AbelianGroup,
    /// Voltage of the arc `(u, v)` with `u < v`.
    zeta: BTreeMap<(usize, usize), GroupElement>,
    tree: Vec<(usize, usize)>,
}

/// A directed closed walk through tree edges plus one cotree arc, which
/// comes last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCircuit {
    /// `w_0, ..., w_m`; the walk closes with the arc `(w_m, w_0)`.
    pub vertices: Vec<usize>,
    pub cotree: Arc,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A BFS spanning tree rooted at vertex 0, as edges `(u, v)` with `u < v`.
pub fn spanning_tree(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut tree = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                tree.push(key(u, v));
                queue.push_back(v);
            }
        }
    }
    if tree.len() + 1 != g.n() {
        return Err(Error::Disconnected);
    }
    tree.sort_unstable();
    Ok(tree)
}

fn check_tree(g: &Graph, tree: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    if g.n() > 0 && tree.len() + 1 != g.n() {
        return Err(Error::NotSpanningTree(format!(
            "{} edges for {} vertices",
            tree.len(),
            g.n()
        )));
    }
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in tree {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(Error::NotSpanningTree(format!("({u}, {v}) is not an edge")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let t = Graph::from_edges(g.n(), tree).map_err(|e| Error::NotSpanningTree(e.to_string()))?;
    if !t.is_connected() {
        return Err(Error::NotSpanningTree("not connected".into()));
    }
    Ok(adj)
}

/// Path from `a` to `b` inside the tree.
fn tree_path(adj: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &v in &adj[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().expect("nonempty") != a {
        path.push(parent[*path.last().expect("nonempty")]);
    }
    path.reverse();
    path
}

/// One circuit per cotree edge `{a, b}` (`a < b`): the tree path from `a`
/// to `b`, closed by the cotree arc `(b, a)`. Sorted by cotree edge.
pub fn base_circuits(g: &Graph, tree: &[(usize, usize)]) -> Result<Vec<BaseCircuit>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = check_tree(g, tree)?;
    let mut in_tree: Vec<(usize, usize)> = tree.iter().map(|&(u, v)| key(u, v)).collect();
    in_tree.sort_unstable();
    Ok(g.edges()
        .filter(|e| in_tree.binary_search(e).is_err())
        .map(|(a, b)| BaseCircuit {
            vertices: tree_path(&adj, a, b),
            cotree: Arc::new(b, a),
        })
        .collect())
}

impl VoltageAssignment {
    /// Arcs not listed carry the identity. Listing `(u, v, g)` also sets
    /// `zeta(v, u) = g^-1`.
    pub fn new(
        base: Graph,
        group: AbelianGroup,
        tree: &[(usize, usize)],
        voltages: &[(usize, usize, GroupElement)],
    ) -> Result<Self> {
        check_tree(&base, tree)?;
        let tree: Vec<(usize, usize)> = {
            let mut t: Vec<_> = tree.iter().map(|&(u, v)| key(u, v)).collect();
            t.sort_unstable();
            t
        };
        let mut zeta = BTreeMap::new();
        for (u, v) in base.edges() {
            zeta.insert((u, v), group.identity());
        }
        for (u, v, g) in voltages {
            let (u, v) = (*u, *v);
            group.check(g)?;
            if !base.has_edge(u, v) {
                return Err(Error::NotAWalk(u, v));
            }
            let g = if u < v { g.clone() } else { group.inv(g) };
            if !group.is_identity(&g) && tree.binary_search(&key(u, v)).is_ok() {
                return Err(Error::NotTReduced(u, v));
            }
            zeta.insert(key(u, v), g);
        }
        Ok(VoltageAssignment {
            base,
            group,
            zeta,
            tree,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn tree(&self) -> &[(usize, usize)] {
        &self.tree
    }

    /// `zeta(u, v)`; panics if `{u, v}` is not an edge.
    pub fn voltage(&self, u: usize, v: usize) -> GroupElement {
        let g = &self.zeta[&key(u, v)];
        if u < v {
            g.clone()
        } else {
            self.group.inv(g)
        }
    }

    pub fn base_circuits(&self) -> Vec<BaseCircuit> {
        base_circuits(&self.base, &self.tree).expect("validated at construction")
    }

    /// Product of the arc voltages along `w_0, w_1, ..., w_m`.
    pub fn walk_voltage(&self, walk: &[usize]) -> Result<GroupElement> {
        let mut acc = self.group.identity();
        for pair in walk.windows(2) {
            let (u, v) = (pair[0], pair[1]);
            if u >= self.base.n() || v >= self.base.n() || !self.base.has_edge(u, v) {
                return Err(Error::NotAWalk(u, v));
            }
            acc = self.group.mul(&acc, &self.voltage(u, v));
        }
        Ok(acc)
    }

    /// Voltage of the closed walk `w_0, ..., w_m, w_0`.
    pub fn closed_walk_voltage(&self, cycle: &[usize]) -> Result<GroupElement> {
        let mut walk = cycle.to_vec();
        if let Some(&first) = cycle.first() {
            walk.push(first);
        }
        self.walk_voltage(&walk)
    }

    pub fn derived_vertex(&self, w: usize, k: &GroupElement) -> usize {
        w * self.group.size() + self.group.index_of(k)
    }

    pub fn derived_label(&self, v: usize) -> (usize, GroupElement) {
        let m = self.group.size();
        (v / m, self.group.element_at(v % m))
    }

    /// The derived graph.
    pub fn derive(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.base.edge_count() * self.group.size());
        for (&(u, v), z) in &self.zeta {
            for k in self.group.elements() {
                edges.push((self.derived_vertex(u, &k), self.derived_vertex(v, &self.group.mul(z, &k))));
            }
        }
        Graph::from_edges(self.base.n() * self.group.size(), &edges).expect("base graph is simple")
    }

    /// `l_right : (w, k) -> (w, k l)`.
    pub fn k_right(&self, l: &GroupElement) -> Permutation {
        let images = (0..self.base.n() * self.group.size())
            .map(|v| {
                let (w, k) = self.derived_label(v);
                self.derived_vertex(w, &self.group.mul(&k, l))
            })
            .collect();
        Permutation::from_images(images).expect("translation is a bijection")
    }

    /// The group `K_right` acting on the derived graph.
    pub fn k_right_group(&self) -> PermGroup {
        let gens = self
            .group
            .generators()
            .iter()
            .filter(|g| !self.group.is_identity(g))
            .map(|g| self.k_right(g))
            .collect();
        PermGroup::new(self.base.n() * self.group.size(), gens).expect("same degree")
    }

    fn check_generates(&self) -> Result<()> {
        if !self.base.is_connected() {
            return Err(Error::Disconnected);
        }
        let gens: Vec<GroupElement> = self.zeta.values().cloned().collect();
        if !self.group.subgroup_generated(&gens).is_whole_group() {
            return Err(Error::DisconnectedCover);
        }
        Ok(())
    }

    /// Decides whether `sigma` lifts to the derived graph.
    ///
    /// With `a_j` the voltages of the base circuits and `b_j` those of
    /// their images under `sigma`, a lift exists exactly when
    /// `a_j -> b_j` extends to an automorphism of `K`. The extension is
    /// built by walking the Cayley graph of `K` on the `a_j`; a clash means
    /// no homomorphism exists, a small image means it is not injective.
    pub fn lifts(&self, sigma: &Permutation) -> Result<Option<Lift>> {
        if sigma.degree() != self.base.n() || !self.base.is_automorphism(&sigma.images()) {
            return Err(Error::NotAnAutomorphism("sigma is not an automorphism of the base graph".into()));
        }
        self.check_generates()?;
        let k = &self.group;
        let mut pairs = Vec::new();
        for c in self.base_circuits() {
            let image: Vec<usize> = c.vertices.iter().map(|&w| sigma.apply(w)).collect();
            pairs.push((self.closed_walk_voltage(&c.vertices)?, self.closed_walk_voltage(&image)?));
        }
        let Some(star) = extend_to_automorphism(k, &pairs) else {
            return Ok(None);
        };
        let permutation = self.lift_permutation(sigma, &star);
        if !self.derive().is_automorphism(&permutation.images()) {
            return Err(Error::NotAnAutomorphism("constructed lift".into()));
        }
        Ok(Some(Lift {
            sigma_star: star,
            permutation,
        }))
    }

    /// `(w, k) -> (sigma w, c_w sigma*(k))`, with `c_w` fixed by spreading
    /// along the tree from `c_0 = 1`.
    fn lift_permutation(&self, sigma: &Permutation, star: &GroupAutomorphism) -> Permutation {
        let k = &self.group;
        let n = self.base.n();
        let mut c: Vec<Option<GroupElement>> = vec![None; n];
        c[0] = Some(k.identity());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.tree {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut queue = VecDeque::from([0]);
        while let Some(w) = queue.pop_front() {
            let cw = c[w].clone().expect("visited");
            for &x in &adj[w] {
                if c[x].is_none() {
                    // c_x = c_w zeta(sigma w, sigma x) sigma*(zeta(w, x))^-1
                    let img = self.voltage(sigma.apply(w), sigma.apply(x));
                    let pulled = star.apply(k, &self.voltage(w, x));
                    c[x] = Some(k.mul(&k.mul(&cw, &img), &k.inv(&pulled)));
                    queue.push_back(x);
                }
            }
        }
        let images = (0..n * k.size())
            .map(|v| {
                let (w, l) = self.derived_label(v);
                let cw = c[w].as_ref().expect("tree spans");
                self.derived_vertex(sigma.apply(w), &k.mul(cw, &star.apply(k, &l)))
            })
            .collect();
        Permutation::from_images(images).expect("lift is a bijection")
    }

    /// The base permutation induced by an automorphism of the derived
    /// graph that normalizes `K_right`.
    pub fn projection(&self, g: &Permutation) -> Result<Permutation> {
        let m = self.group.size();
        if g.degree() != self.base.n() * m {
            return Err(Error::DegreeMismatch {
                expected: self.base.n() * m,
                got: g.degree(),
            });
        }
        for l in self.group.generators() {
            let conj = self.k_right(&l).conjugate_by(g);
            let (_, l2) = self.derived_label(conj.apply(0));
            if conj != self.k_right(&l2) {
                return Err(Error::DoesNotNormalize);
            }
        }
        let images = (0..self.base.n()).map(|w| g.apply(w * m) / m).collect();
        Permutation::from_images(images)
    }

    /// `(base graph6, K orders, [(tail, head, exponents)])`, listing only
    /// non-identity voltages.
    pub fn to_record(&self) -> VoltageRecord {
        VoltageRecord {
            base: self.base.to_graph6(),
            orders: self.group.orders().to_vec(),
            voltages: self
                .zeta
                .iter()
                .filter(|(_, g)| !self.group.is_identity(g))
                .map(|(&(u, v), g)| (u, v, g.exponents().to_vec()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VoltageRecord {
    pub base: String,
    pub orders: Vec<usize>,
    pub voltages: Vec<(usize, usize, Vec<usize>)>,
}

/// A lift of a base automorphism.
#[derive(Debug, Clone)]
pub struct Lift {
    pub sigma_star: GroupAutomorphism,
    pub permutation: Permutation,
}

/// The automorphism of `k` sending each `a` to its `b`, if any. The `a`s
/// must generate `k`.
fn extend_to_automorphism(k: &AbelianGroup, pairs: &[(GroupElement, GroupElement)]) -> Option<GroupAutomorphism> {
    let mut map: Vec<Option<usize>> = vec![None; k.size()];
    map[k.index_of(&k.identity())] = Some(k.index_of(&k.identity()));
    let mut queue = VecDeque::from([k.identity()]);
    while let Some(x) = queue.pop_front() {
        let y = k.element_at(map[k.index_of(&x)].expect("assigned"));
        for (a, b) in pairs {
            let xa = k.index_of(&k.mul(&x, a));
            let yb = k.index_of(&k.mul(&y, b));
            match map[xa] {
                None => {
                    map[xa] = Some(yb);
                    queue.push_back(k.element_at(xa));
                }
                Some(prev) if prev != yb => return None,
                Some(_) => {}
            }
        }
    }
    let table: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
    let mut hit = vec![false; table.len()];
    for &t in &table {
        if std::mem::replace(&mut hit[t], true) {
            return None;
        }
    }
    Some(GroupAutomorphism::from_table(table))
}

/// The 8-vertex quotient `BC(Z_2^2, {r}, {s}, {1, rs})`, a cube, with the
/// spanning tree and voltages of the worked example, over `N = Z_n`.
pub mod fig1 {
    use super::*;

    pub const N0: usize = 0;
    pub const NR0: usize = 1;
    pub const NS0: usize = 2;
    pub const NRS0: usize = 3;
    pub const N1: usize = 4;
    pub const NR1: usize = 5;
    pub const NS1: usize = 6;
    pub const NRS1: usize = 7;

    pub const LABELS: [&str; 8] = ["N_0", "(Nr)_0", "(Ns)_0", "(Nrs)_0", "N_1", "(Nr)_1", "(Ns)_1", "(Nrs)_1"];

    pub const EDGES: [(usize, usize); 12] = [
        (N0, NR0),
        (NS0, NRS0),
        (N1, NS1),
        (NR1, NRS1),
        (N0, N1),
        (NR0, NR1),
        (NS0, NS1),
        (NRS0, NRS1),
        (N0, NRS1),
        (NRS0, N1),
        (NR0, NS1),
        (NS0, NR1),
    ];

    /// The dashed path `(Nr)_0, N_0, N_1, (Ns)_1, (Ns)_0, (Nrs)_0, (Nrs)_1, (Nr)_1`.
    pub const TREE: [(usize, usize); 7] = [
        (NR0, N0),
        (N0, N1),
        (N1, NS1),
        (NS1, NS0),
        (NS0, NRS0),
        (NRS0, NRS1),
        (NRS1, NR1),
    ];

    /// Arcs carrying `n_1`; every other arc carries the identity.
    pub const N1_ARCS: [(usize, usize); 4] = [(N0, NRS1), (NRS0, N1), (NR0, NS1), (NS0, NR1)];

    pub fn base() -> Graph {
        Graph::from_edges(8, &EDGES).expect("simple")
    }

    /// The assignment over `Z_n` with `n_1` the generator.
    pub fn assignment(n: usize) -> Result<VoltageAssignment> {
        let group = AbelianGroup::cyclic(n)?;
        let n1 = group.element(&[1])?;
        let voltages: Vec<_> = N1_ARCS.iter().map(|&(u, v)| (u, v, n1.clone())).collect();
        VoltageAssignment::new(base(), group, &TREE, &voltages)
    }

    /// `((Nr)_0, (Nrs)_1, N_1)((Nr)_1, (Nrs)_0, (Ns)_1)`.
    pub fn alpha() -> Permutation {
        Permutation::from_cycles(8, &[&[NR0, NRS1, N1], &[NR1, NRS0, NS1]]).expect("valid cycles")
    }

    /// `C = ((Ns)_0, (Nrs)_0, N_1, (Ns)_1)`.
    pub const C: [usize; 4] = [NS0, NRS0, N1, NS1];
    /// `C' = (N_0, (Nr)_0, (Ns)_1, N_1)`.
    pub const C_PRIME: [usize; 4] = [N0, NR0, NS1, N1];
}
