//! The bi-Cayley construction `BC(H, R, L, S)` over an abelian group `H`.
//!
//! Vertices are two copies `H_0` (ids `0..|H|`) and `H_1` (ids
//! `|H|..2|H|`) of the group, each in lexicographic element order. Edges:
//!
//! * right edges `{h_0, g_0}` with `g h^-1` in `R`,
//! * left edges `{h_1, g_1}` with `g h^-1` in `L`,
//! * spoke edges `{h_0, g_1}` with `g h^-1` in `S`.

use std::collections::BTreeSet;
use std::fmt;

use crate::abelian::{AbelianGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCayleySpec {
    group: AbelianGroup,
    right: Vec<GroupElement>,
    left: Vec<GroupElement>,
    spoke: Vec<GroupElement>,
}

fn normalize(group: &AbelianGroup, set: &[GroupElement]) -> Result<Vec<GroupElement>> {
    for g in set {
        group.check(g)?;
    }
    let s: BTreeSet<GroupElement> = set.iter().cloned().collect();
    Ok(s.into_iter().collect())
}

impl BiCayleySpec {
    /// Validates `R = R^-1`, `L = L^-1` and `1 not in R u L`.
    pub fn new(
        group: AbelianGroup,
        right: &[GroupElement],
        left: &[GroupElement],
        spoke: &[GroupElement],
    ) -> Result<Self> {
        let right = normalize(&group, right)?;
        let left = normalize(&group, left)?;
        let spoke = normalize(&group, spoke)?;
        for (name, set) in [("R", &right), ("L", &left)] {
            if set.iter().any(|g| group.is_identity(g)) {
                return Err(Error::IdentityInConnectionSet { set: name });
            }
            if let Some(g) = set.iter().find(|g| set.binary_search(&group.inv(g)).is_err()) {
                return Err(Error::NotInverseClosed {
                    set: name,
                    element: g.exponents().to_vec(),
                });
            }
        }
        Ok(BiCayleySpec {
            group,
            right,
            left,
            spoke,
        })
    }

    /// The 0-type graph `BC(H, S)`.
    pub fn zero_type(group: AbelianGroup, spoke: &[GroupElement]) -> Result<Self> {
        Self::new(group, &[], &[], spoke)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn right(&self) -> &[GroupElement] {
        &self.right
    }

    pub fn left(&self) -> &[GroupElement] {
        &self.left
    }

    pub fn spoke(&self) -> &[GroupElement] {
        &self.spoke
    }

    /// `s = |R| = |L|`, or `None` when the sizes differ.
    pub fn type_tag(&self) -> Option<usize> {
        (self.right.len() == self.left.len()).then_some(self.right.len())
    }

    pub fn is_zero_type(&self) -> bool {
        self.right.is_empty() && self.left.is_empty()
    }

    /// Parses `H=[6,2]; R={...}; L={...}; S={(0,0),(1,0),(1,1)}`. Missing
    /// `R`/`L` mean empty sets; for cyclic `H` bare integers are accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |m: String| Error::SpecParse(m);
        let mut orders: Option<Vec<usize>> = None;
        let mut sets: [Option<Vec<Vec<i64>>>; 3] = [None, None, None];
        for clause in text.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (key, value) = clause
                .split_once('=')
                .ok_or_else(|| err(format!("clause without '=': {clause}")))?;
            let value = value.trim();
            match key.trim() {
                "H" => {
                    let inner = value
                        .strip_prefix('[')
                        .and_then(|v| v.strip_suffix(']'))
                        .ok_or_else(|| err(format!("H must be a bracketed list: {value}")))?;
                    orders = Some(
                        inner
                            .split(',')
                            .map(|x| x.trim().parse::<usize>().map_err(|e| err(format!("bad order {x:?}: {e}"))))
                            .collect::<Result<_>>()?,
                    );
                }
                k @ ("R" | "L" | "S") => {
                    let idx = ["R", "L", "S"].iter().position(|&n| n == k).expect("matched");
                    sets[idx] = Some(parse_set(value)?);
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let orders = orders.ok_or_else(|| err("missing H".into()))?;
        let group = AbelianGroup::new(&orders)?;
        let convert = |set: &Option<Vec<Vec<i64>>>| -> Result<Vec<GroupElement>> {
            set.iter()
                .flatten()
                .map(|e| group.element(e))
                .collect()
        };
        let (r, l, s) = (convert(&sets[0])?, convert(&sets[1])?, convert(&sets[2])?);
        BiCayleySpec::new(group.clone(), &r, &l, &s)
    }
}

fn parse_set(value: &str) -> Result<Vec<Vec<i64>>> {
    let err = |m: String| Error::SpecParse(m);
    let inner = value
        .strip_prefix('{')
        .and_then(|v| v.strip_suffix('}'))
        .ok_or_else(|| err(format!("set must be braced: {value}")))?
        .trim();
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        rest = rest.trim_start_matches([',', ' ']);
        if rest.is_empty() {
            break;
        }
        if let Some(tail) = rest.strip_prefix('(') {
            let close = tail.find(')').ok_or_else(|| err("unclosed tuple".into()))?;
            let tuple = tail[..close]
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|e| err(format!("bad exponent {x:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            out.push(tuple);
            rest = &tail[close + 1..];
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            let x = rest[..end].trim();
            out.push(vec![x.parse::<i64>().map_err(|e| err(format!("bad exponent {x:?}: {e}")))?]);
            rest = &rest[end..];
        }
    }
    Ok(out)
}

impl fmt::Display for BiCayleySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |xs: &[GroupElement]| {
            xs.iter()
                .map(|x| {
                    let parts: Vec<String> = x.exponents().iter().map(usize::to_string).collect();
                    format!("({})", parts.join(","))
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        let orders: Vec<String> = self.group.orders().iter().map(usize::to_string).collect();
        write!(
            f,
            "H=[{}]; R={{{}}}; L={{{}}}; S={{{}}}",
            orders.join(","),
            set(&self.right),
            set(&self.left),
            set(&self.spoke)
        )
    }
}

/// A built bi-Cayley graph with its vertex labeling.
#[derive(Debug, Clone)]
pub struct BiCayleyGraph {
    spec: BiCayleySpec,
    graph: Graph,
}

impl BiCayleyGraph {
    pub fn build(spec: BiCayleySpec) -> Result<Self> {
        let h = &spec.group;
        let mut edges = Vec::new();
        for x in h.elements() {
            let xi = h.index_of(&x);
            for (set, part) in [(&spec.right, 0usize), (&spec.left, 1)] {
                for r in set {
                    let yi = h.index_of(&h.mul(r, &x));
                    if xi < yi {
                        edges.push((part * h.size() + xi, part * h.size() + yi));
                    }
                }
            }
            for s in &spec.spoke {
                edges.push((xi, h.size() + h.index_of(&h.mul(s, &x))));
            }
        }
        let graph = Graph::from_edges(2 * h.size(), &edges)?;
        Ok(BiCayleyGraph { spec, graph })
    }

    pub fn spec(&self) -> &BiCayleySpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.spec.group
    }

    pub fn vertex_of(&self, h: &GroupElement, part: usize) -> usize {
        part * self.spec.group.size() + self.spec.group.index_of(h)
    }

    pub fn label(&self, v: usize) -> (GroupElement, usize) {
        let n = self.spec.group.size();
        (self.spec.group.element_at(v % n), v / n)
    }

    /// `(H_0, H_1)` as vertex id lists.
    pub fn parts(&self) -> [Vec<usize>; 2] {
        let n = self.spec.group.size();
        [(0..n).collect(), (n..2 * n).collect()]
    }

    /// `R(h) : x_i -> (x h)_i`.
    pub fn right_translation(&self, h: &GroupElement) -> Permutation {
        let group = &self.spec.group;
        let images = (0..self.graph.n())
            .map(|v| {
                let (x, part) = self.label(v);
                self.vertex_of(&group.mul(&x, h), part)
            })
            .collect();
        Permutation::from_images(images).expect("translation is a bijection")
    }

    /// The group `R(H)`, generated by translations by the standard generators.
    pub fn right_translations(&self) -> PermGroup {
        let gens = self
            .spec
            .group
            .generators()
            .iter()
            .filter(|g| !self.spec.group.is_identity(g))
            .map(|g| self.right_translation(g))
            .collect();
        PermGroup::new(self.graph.n(), gens).expect("same degree")
    }

    fn inversion_swap(&self) -> Permutation {
        let group = &self.spec.group;
        let images = (0..self.graph.n())
            .map(|v| {
                let (x, part) = self.label(v);
                self.vertex_of(&group.inv(&x), 1 - part)
            })
            .collect();
        Permutation::from_images(images).expect("inversion swap is a bijection")
    }

    /// `iota : x_0 -> (x^-1)_1, x_1 -> (x^-1)_0`. It preserves spokes for
    /// every abelian `H` and maps right edges to left edges, so it is an
    /// automorphism exactly when `R = L`.
    pub fn iota(&self) -> Result<Permutation> {
        let p = self.inversion_swap();
        if self.graph.is_automorphism(&p.images()) {
            Ok(p)
        } else {
            Err(Error::NotAnAutomorphism("iota requires R = L".into()))
        }
    }

    /// The involution `tau` of a 0-type graph: same formula as `iota`; it
    /// inverts every right translation under conjugation.
    pub fn tau(&self) -> Result<Permutation> {
        if !self.spec.is_zero_type() {
            return Err(Error::NotZeroType);
        }
        Ok(self.inversion_swap())
    }

    /// The bi-Cayley graph `BC(H/K, R/K, L/K, S/K)`, refused when the
    /// contraction by `R(K)`-orbits would create loops or fuse edges.
    pub fn quotient(&self, k: &Subgroup) -> Result<BiCayleyGraph> {
        let h = &self.spec.group;
        if k.parent() != h {
            return Err(Error::NonSimpleQuotient("K is not a subgroup of H".into()));
        }
        for (name, set) in [("R", &self.spec.right), ("L", &self.spec.left)] {
            if let Some(x) = set.iter().find(|x| k.contains(x)) {
                return Err(Error::NonSimpleQuotient(format!(
                    "{name} element {:?} lies in K (loop)",
                    x.exponents()
                )));
            }
        }
        let q = h.quotient(k);
        let mut mapped = Vec::new();
        for (name, set) in [("R", &self.spec.right), ("L", &self.spec.left), ("S", &self.spec.spoke)] {
            let image: Vec<GroupElement> = q.map_set(set.iter()).into_iter().collect();
            if image.len() < set.len() {
                return Err(Error::NonSimpleQuotient(format!(
                    "{name}/K has {} elements but {name} has {} (fused edges)",
                    image.len(),
                    set.len()
                )));
            }
            mapped.push(image);
        }
        let spec = BiCayleySpec::new(q.group().clone(), &mapped[0], &mapped[1], &mapped[2])?;
        BiCayleyGraph::build(spec)
    }

    /// Orbits of `R(K)` on the vertex set.
    pub fn translation_orbits(&self, k: &Subgroup) -> Vec<Vec<usize>> {
        let h = &self.spec.group;
        let mut seen = vec![false; self.graph.n()];
        let mut out = Vec::new();
        for v in 0..self.graph.n() {
            if seen[v] {
                continue;
            }
            let (x, part) = self.label(v);
            let mut orbit: Vec<usize> = k
                .elements()
                .iter()
                .map(|y| self.vertex_of(&h.mul(&x, y), part))
                .collect();
            orbit.sort_unstable();
            for &w in &orbit {
                seen[w] = true;
            }
            out.push(orbit);
        }
        out
    }
}

/// `GP(n, k) = BC(Z_n, {1, -1}, {k, -k}, {0})` for `1 <= k < n/2`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<BiCayleyGraph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::PetersenRange { n, k });
    }
    let z = AbelianGroup::cyclic(n)?;
    let e = |x: i64| z.element(&[x]).expect("cyclic element");
    let spec = BiCayleySpec::new(
        z.clone(),
        &[e(1), e(-1)],
        &[e(k as i64), e(-(k as i64))],
        &[e(0)],
    )?;
    BiCayleyGraph::build(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::symmetry::{are_isomorphic, canonical_form};

    fn cyclic_zero_type(n: usize, s: &[i64]) -> BiCayleyGraph {
        let z = AbelianGroup::cyclic(n).unwrap();
        let s: Vec<_> = s.iter().map(|&x| z.element(&[x]).unwrap()).collect();
        BiCayleyGraph::build(BiCayleySpec::zero_type(z, &s).unwrap()).unwrap()
    }

    #[test]
    fn validation_names_offending_elements() {
        let z = AbelianGroup::cyclic(5).unwrap();
        let e = |x| z.element(&[x]).unwrap();
        assert_eq!(
            BiCayleySpec::new(z.clone(), &[e(1)], &[], &[e(0)]),
            Err(Error::NotInverseClosed { set: "R", element: vec![1] })
        );
        assert_eq!(
            BiCayleySpec::new(z.clone(), &[], &[e(0)], &[e(0)]),
            Err(Error::IdentityInConnectionSet { set: "L" })
        );
    }

    #[test]
    fn small_named_graphs() {
        let k33 = cyclic_zero_type(3, &[0, 1, 2]);
        assert!(are_isomorphic(k33.graph(), &named::complete_bipartite(3, 3)).unwrap());
        let z2sq = AbelianGroup::new(&[2, 2]).unwrap();
        let s: Vec<_> = [[0, 0], [1, 0], [0, 1]].iter().map(|e| z2sq.element(e).unwrap()).collect();
        let q3 = BiCayleyGraph::build(BiCayleySpec::zero_type(z2sq, &s).unwrap()).unwrap();
        assert_eq!(q3.graph().n(), 8);
        assert_eq!(q3.graph().girth(), Some(4));
        assert!(are_isomorphic(q3.graph(), &named::cube()).unwrap());
        let heawood = cyclic_zero_type(7, &[0, 1, 3]);
        assert_eq!(heawood.graph().girth(), Some(6));
        assert!(heawood.graph().is_cubic());
    }

    #[test]
    fn edge_classes_follow_the_definition() {
        let spec = BiCayleySpec::parse("H=[2,10]; R={(1,3),(1,7)}; L={(0,1),(0,9)}; S={(0,0)}").unwrap();
        let b = BiCayleyGraph::build(spec.clone()).unwrap();
        let h = spec.group();
        for x in h.elements() {
            for y in h.elements() {
                let d = h.mul(&y, &h.inv(&x));
                let (x0, x1, y0, y1) = (b.vertex_of(&x, 0), b.vertex_of(&x, 1), b.vertex_of(&y, 0), b.vertex_of(&y, 1));
                assert_eq!(b.graph().has_edge(x0, y0), spec.right().contains(&d));
                assert_eq!(b.graph().has_edge(x1, y1), spec.left().contains(&d));
                assert_eq!(b.graph().has_edge(x0, y1), spec.spoke().contains(&d));
            }
        }
        for v in 0..b.graph().n() {
            let part = v / h.size();
            let expected = if part == 0 { spec.right().len() } else { spec.left().len() } + spec.spoke().len();
            assert_eq!(b.graph().degree(v), expected);
        }
    }

    #[test]
    fn translations_are_semiregular_automorphisms() {
        let b = cyclic_zero_type(3, &[0, 1, 2]);
        let ra = b.right_translation(&b.group().element(&[1]).unwrap());
        assert_eq!(ra.cycles().len(), 2);
        assert!(ra.cycles().iter().all(|c| c.len() == 3));
        let rh = b.right_translations();
        assert_eq!(rh.order(), 3);
        assert!(rh.semiregular_with_orbits(&b.parts()));
        for g in rh.generators() {
            assert!(b.graph().is_automorphism(&g.images()));
        }
    }

    #[test]
    fn iota_and_tau() {
        let b = cyclic_zero_type(7, &[0, 1, 3]);
        let iota = b.iota().unwrap();
        assert!(iota.then(&iota).is_identity());
        let one = b.group().identity();
        assert_eq!(iota.apply(b.vertex_of(&one, 0)), b.vertex_of(&one, 1));
        let mut gens = b.right_translations().generators().to_vec();
        gens.push(iota.clone());
        let regular = PermGroup::new(14, gens).unwrap();
        assert_eq!(regular.order(), 14);
        assert!(regular.is_transitive());
        assert!(regular.is_semiregular());

        let mk = cyclic_zero_type(8, &[0, 2, 3]);
        let tau = mk.tau().unwrap();
        assert_eq!(tau, mk.iota().unwrap());
        let a = mk.group().element(&[1]).unwrap();
        let ra = mk.right_translation(&a);
        let ra_inv = mk.right_translation(&mk.group().inv(&a));
        assert_eq!(ra.conjugate_by(&tau), ra_inv);

        let gp = generalized_petersen(5, 2).unwrap();
        assert_eq!(gp.tau(), Err(Error::NotZeroType));
        assert!(gp.iota().is_err());
    }

    #[test]
    fn petersen_family() {
        let gp41 = generalized_petersen(4, 1).unwrap();
        assert!(are_isomorphic(gp41.graph(), &named::cube()).unwrap());
        let gp52 = generalized_petersen(5, 2).unwrap();
        assert!(gp52.graph().is_cubic());
        assert!(are_isomorphic(gp52.graph(), &named::petersen()).unwrap());
        let gp83 = generalized_petersen(8, 3).unwrap();
        let mk = cyclic_zero_type(8, &[0, 2, 3]);
        assert_eq!(
            canonical_form(gp83.graph()).unwrap().certificate,
            canonical_form(mk.graph()).unwrap().certificate
        );
        assert_eq!(gp83.spec().type_tag(), Some(2));
        assert!(matches!(generalized_petersen(6, 3), Err(Error::PetersenRange { .. })));
        assert!(matches!(generalized_petersen(2, 1), Err(Error::PetersenRange { .. })));
    }

    #[test]
    fn quotients() {
        let b = cyclic_zero_type(7, &[0, 1, 3]);
        let trivial = b.group().subgroup_generated(&[]);
        let q = b.quotient(&trivial).unwrap();
        assert_eq!(q.graph(), b.graph());

        // K meeting S twice fuses spokes
        let c = cyclic_zero_type(6, &[0, 1, 3]);
        let k = c.group().subgroup_generated(&[c.group().element(&[3]).unwrap()]);
        assert!(matches!(c.quotient(&k), Err(Error::NonSimpleQuotient(_))));

        // R meeting K creates loops
        let gp = generalized_petersen(8, 3).unwrap();
        let k = gp.group().subgroup_generated(&[gp.group().element(&[1]).unwrap()]);
        assert!(matches!(gp.quotient(&k), Err(Error::NonSimpleQuotient(_))));
    }

    #[test]
    fn parse_round_trip() {
        let text = "H=[6,2]; R={}; L={}; S={(0,0),(1,0),(1,1)}";
        let spec = BiCayleySpec::parse(text).unwrap();
        assert_eq!(spec.to_string(), text);
        assert_eq!(BiCayleySpec::parse(&spec.to_string()).unwrap(), spec);
        let cyclic = BiCayleySpec::parse("H=[7]; S={0,1,3}").unwrap();
        assert_eq!(cyclic.spoke().len(), 3);
        assert!(BiCayleySpec::parse("H=[7]; Q={0}").is_err());
        assert!(BiCayleySpec::parse("S={0}").is_err());
    }

    #[test]
    fn type_tags() {
        assert_eq!(cyclic_zero_type(7, &[0, 1, 3]).spec().type_tag(), Some(0));
        let z = AbelianGroup::new(&[2, 2]).unwrap();
        let e = |a, b| z.element(&[a, b]).unwrap();
        let one = BiCayleySpec::new(z.clone(), &[e(1, 0)], &[e(0, 1)], &[e(0, 0), e(1, 1)]).unwrap();
        assert_eq!(one.type_tag(), Some(1));
        let untyped = BiCayleySpec::new(z.clone(), &[e(1, 0)], &[], &[e(0, 0)]).unwrap();
        assert_eq!(untyped.type_tag(), None);
    }
}
