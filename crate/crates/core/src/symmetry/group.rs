use std::sync::OnceLock;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default cap on `|G|` for operations that list every element.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 100_000;

/// The element enumeration bound, overridable with `BICAYLEY_MAX_AUT`.
pub fn enumeration_bound() -> u128 {
    static BOUND: OnceLock<u128> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("BICAYLEY_MAX_AUT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_ENUMERATION_BOUND)
    })
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `trans[p] = (u, u^-1)` with `base^u = p`.
    trans: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            trans: vec![None; degree],
        };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let degree = self.trans.len();
        self.trans.iter_mut().for_each(|t| *t = None);
        let id = Permutation::identity(degree);
        self.trans[self.base] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            i += 1;
            for s in &self.gens {
                let q = s.apply(p);
                if self.trans[q].is_none() {
                    let u = self.trans[p].as_ref().expect("orbit point").0.then(s);
                    let inv = u.inverse();
                    self.trans[q] = Some((u, inv));
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// Stabilizer chain with explicit transversals (deterministic Schreier-Sims).
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix`.
    pub fn new(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.fixes(b)) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (i, level) in levels.iter_mut().enumerate() {
            level.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.fixes(b)))
                .cloned()
                .collect();
            level.rebuild();
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.failing_schreier_generator(level) {
                None => i -= 1,
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let b = residue.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in level + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild();
                    }
                    i = j + 1;
                }
            }
        }
    }

    fn failing_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &b in &level.orbit {
            let ub = &level.trans[b].as_ref().expect("orbit point").0;
            for s in &level.gens {
                let c = s.apply(b);
                let uc_inv = &level.trans[c].as_ref().expect("orbit point").1;
                let h = ub.then(s).then(uc_inv);
                if h.is_identity() {
                    continue;
                }
                let (residue, j) = self.sift(h, i + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Strips `g` through levels `from..`, returning the residue and the
    /// level where stripping stopped (`levels.len()` if it went through).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = g.apply(level.base);
            match &level.trans[p] {
                Some((_, inv)) => g = g.then(inv),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Basic orbit sizes along the base.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators of the stabilizer of the first `depth` base points.
    fn stabilizer_gens(&self, depth: usize) -> Vec<Permutation> {
        self.levels.get(depth).map_or_else(Vec::new, |l| l.gens.clone())
    }

    fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &p in &level.orbit {
                    next.push(x.then(&level.trans[p].as_ref().expect("orbit point").0));
                }
            }
            out = next;
        }
        out
    }
}

/// A permutation group given by generators; the stabilizer chain is built
/// on first use.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    /// The subgroup generated by a list of elements, with a generating set
    /// pruned to elements not already generated by their predecessors.
    pub fn generated_by(degree: usize, elements: &[Permutation]) -> Self {
        let mut group = PermGroup::trivial(degree);
        for e in elements {
            if !group.contains(e) {
                let mut gens = group.generators.clone();
                gens.push(e.clone());
                group = PermGroup::new(degree, gens).expect("same degree");
            }
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    /// Every element, refused above the enumeration bound.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_bounded(enumeration_bound())
    }

    pub fn elements_bounded(&self, bound: u128) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > bound {
            return Err(Error::GroupTooLarge { order, bound });
        }
        Ok(self.chain().elements())
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            i += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition of `0..degree`, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if !seen[v] {
                let orbit = self.orbit(v);
                for &p in &orbit {
                    seen[p] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Orbits of the group on the given points (which should form a union
    /// of orbits); each returned orbit is intersected with `points`.
    pub fn orbits_on(&self, points: &[usize]) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.degree];
        for &p in points {
            member[p] = true;
        }
        self.orbits()
            .into_iter()
            .map(|o| o.into_iter().filter(|&p| member[p]).collect::<Vec<_>>())
            .filter(|o| !o.is_empty())
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Whether `points` is a single orbit.
    pub fn is_transitive_on(&self, points: &[usize]) -> bool {
        match points.first() {
            None => true,
            Some(&p) => {
                let mut sorted = points.to_vec();
                sorted.sort_unstable();
                sorted.dedup();
                self.orbit(p) == sorted
            }
        }
    }

    /// Only the identity fixes a point: every orbit has length `|G|`.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    /// Semiregular with exactly the given orbit partition.
    pub fn semiregular_with_orbits(&self, parts: &[Vec<usize>]) -> bool {
        let mut expected: Vec<Vec<usize>> = parts
            .iter()
            .map(|p| {
                let mut p = p.clone();
                p.sort_unstable();
                p
            })
            .collect();
        expected.sort();
        let mut orbits = self.orbits();
        orbits.sort();
        orbits == expected && self.is_semiregular()
    }

    /// Pointwise stabilizer of `points`, via a chain whose base starts
    /// with them.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = StabChain::new(self.degree, &self.generators, points);
        let gens = chain.stabilizer_gens(points.len());
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Whether every generator of `ambient` conjugates `self` into itself.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        ambient.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|g| self.contains(&g.conjugate_by(a)))
        })
    }

    /// Every element commutes with every other (checked on generators).
    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric(n: usize) -> PermGroup {
        let mut gens = vec![];
        if n > 1 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
            gens.push(Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    fn brute_closure(g: &PermGroup) -> std::collections::BTreeSet<Permutation> {
        let mut set = std::collections::BTreeSet::new();
        let id = Permutation::identity(g.degree());
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in g.generators() {
                let y = x.then(s);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn symmetric_group_orders() {
        let mut f = 1u128;
        for n in 1..=8 {
            f *= n as u128;
            assert_eq!(symmetric(n).order(), f);
        }
    }

    #[test]
    fn chain_order_matches_closure() {
        let groups = vec![
            // dihedral of the 5-cycle
            PermGroup::new(
                5,
                vec![
                    Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
                    Permutation::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
            // Z2 x Z2 x Z3 acting on 7 points
            PermGroup::new(
                7,
                vec![
                    Permutation::from_cycles(7, &[&[0, 1]]).unwrap(),
                    Permutation::from_cycles(7, &[&[2, 3]]).unwrap(),
                    Permutation::from_cycles(7, &[&[4, 5, 6]]).unwrap(),
                ],
            )
            .unwrap(),
            // PSL(2,7) on 7 points (order 168)
            PermGroup::new(
                7,
                vec![
                    Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap(),
                    Permutation::from_cycles(7, &[&[1, 2, 4], &[3, 6, 5]]).unwrap(),
                    Permutation::from_cycles(7, &[&[1, 6], &[2, 3]]).unwrap(),
                ],
            )
            .unwrap(),
        ];
        for g in groups {
            let closure = brute_closure(&g);
            assert_eq!(g.order(), closure.len() as u128);
            let els = g.elements().unwrap();
            assert_eq!(els.len(), closure.len());
            for e in &els {
                assert!(closure.contains(e));
                assert!(g.contains(e));
            }
        }
    }

    #[test]
    fn membership_rejects_outsiders() {
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&Permutation::from_cycles(4, &[&[0, 1]]).unwrap()));
        assert!(a4.contains(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn stabilizers_and_orbits() {
        let s5 = symmetric(5);
        let st = s5.pointwise_stabilizer(&[0, 3]);
        assert_eq!(st.order(), 6);
        assert_eq!(st.orbits(), vec![vec![0], vec![1, 2, 4], vec![3]]);
        assert!(s5.is_transitive());
        assert!(!s5.is_semiregular());
        let c = PermGroup::new(6, vec![Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4, 5]]).unwrap()]).unwrap();
        assert!(c.is_semiregular());
        assert!(c.semiregular_with_orbits(&[vec![3, 4, 5], vec![0, 1, 2]]));
        assert!(!c.semiregular_with_orbits(&[vec![0, 1, 2, 3, 4, 5]]));
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        assert!(matches!(
            symmetric(9).elements_bounded(1000),
            Err(Error::GroupTooLarge { order: 362_880, .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn order_and_membership_agree_with_closure(gens in prop::collection::vec(arb_perm(7), 1..3)) {
                let g = PermGroup::new(7, gens).unwrap();
                let closure = brute_closure(&g);
                prop_assume!(closure.len() <= 10_000);
                prop_assert_eq!(g.order(), closure.len() as u128);
                // sifting succeeds exactly on generated elements
                let all = symmetric(7).elements().unwrap();
                for p in all.iter().step_by(37) {
                    prop_assert_eq!(g.contains(p), closure.contains(p));
                }
            }
        }
    }
}
