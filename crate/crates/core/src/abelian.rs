//! Finite abelian groups presented as direct products of cyclic groups.
//!
//! Elements are exponent vectors reduced modulo the factor orders, so two
//! elements are equal exactly when their vectors are equal. The group is
//! written multiplicatively to match the usual bi-Cayley notation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::snf::smith;

/// Default cap on `|H|` for [`AbelianGroup::automorphisms`].
pub const DEFAULT_AUT_BOUND: usize = 64;

/// Hard cap on the number of automorphisms materialized.
const AUT_COUNT_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    orders: Vec<usize>,
    size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<usize>);

impl GroupElement {
    pub fn exponents(&self) -> &[usize] {
        &self.0
    }
}

impl AbelianGroup {
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyPresentation);
        }
        if let Some(&bad) = orders.iter().find(|&&o| o == 0) {
            return Err(Error::BadOrder(bad));
        }
        Ok(AbelianGroup {
            orders: orders.to_vec(),
            size: orders.iter().product(),
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    /// Builds an element, reducing every exponent modulo its factor order.
    pub fn element(&self, exponents: &[i64]) -> Result<GroupElement> {
        if exponents.len() != self.orders.len() {
            return Err(Error::ForeignElement {
                element: exponents.iter().map(|&e| e as usize).collect(),
                orders: self.orders.clone(),
            });
        }
        Ok(GroupElement(
            exponents
                .iter()
                .zip(&self.orders)
                .map(|(&e, &n)| e.rem_euclid(n as i64) as usize)
                .collect(),
        ))
    }

    /// Checks that `g` is a reduced exponent vector of this group.
    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() == self.orders.len() && g.0.iter().zip(&self.orders).all(|(e, n)| e < n) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                element: g.0.clone(),
                orders: self.orders.clone(),
            })
        }
    }

    /// Standard generators, one per cyclic factor.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| {
                let mut e = vec![0; self.rank()];
                e[i] = 1 % self.orders[i];
                GroupElement(e)
            })
            .collect()
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.orders)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
        )
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.orders)
                .map(|(a, n)| (n - a) % n)
                .collect(),
        )
    }

    pub fn pow(&self, g: &GroupElement, k: i64) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.orders)
                .map(|(&a, &n)| ((a as i128 * k as i128).rem_euclid(n as i128)) as usize)
                .collect(),
        )
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        g.0.iter().all(|&e| e == 0)
    }

    pub fn element_order(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.orders)
            .map(|(&e, &n)| n / gcd(e, n))
            .fold(1, lcm)
    }

    /// Position of `g` in lexicographic exponent order.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&e, &n)| acc * n + e)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut e = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            e[i] = index % self.orders[i];
            index /= self.orders[i];
        }
        GroupElement(e)
    }

    /// All elements in lexicographic exponent order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.size).map(|i| self.element_at(i))
    }

    /// Invariant factors in descending order (`d_{i+1} | d_i`), without
    /// trailing ones. The trivial group has none.
    pub fn invariant_factors(&self) -> Vec<usize> {
        let k = self.rank();
        let m = (0..k)
            .map(|i| (0..k).map(|j| if i == j { self.orders[i] as i128 } else { 0 }).collect())
            .collect();
        let mut d: Vec<usize> = smith(m, k)
            .diagonal
            .into_iter()
            .map(|x| x as usize)
            .filter(|&x| x > 1)
            .collect();
        d.reverse();
        d
    }

    pub fn is_isomorphic(&self, other: &AbelianGroup) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for g in self.elements() {
            *h.entry(self.element_order(&g)).or_insert(0) += 1;
        }
        h
    }

    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Subgroup {
        let gens: Vec<GroupElement> = gens.to_vec();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            parent: self.clone(),
            generators: gens,
            elements: seen.into_iter().collect(),
        }
    }

    /// The factor group by `k`, presented by its invariant factors, with an
    /// explicit homomorphism from this group onto it.
    pub fn quotient(&self, k: &Subgroup) -> Quotient {
        let rank = self.rank();
        let mut relations: Vec<Vec<i128>> = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { self.orders[i] as i128 } else { 0 }).collect())
            .collect();
        let kgens = if k.generators.is_empty() { &k.elements } else { &k.generators };
        for g in kgens {
            relations.push(g.0.iter().map(|&e| e as i128).collect());
        }
        let s = smith(relations, rank);
        let kept: Vec<usize> = (0..rank).filter(|&j| s.diagonal[j] != 1).collect();
        let orders: Vec<usize> = if kept.is_empty() {
            vec![1]
        } else {
            kept.iter().map(|&j| s.diagonal[j] as usize).collect()
        };
        let group = AbelianGroup::new(&orders).expect("nonempty positive orders");
        let project = |g: &GroupElement| -> GroupElement {
            if kept.is_empty() {
                return GroupElement(vec![0]);
            }
            GroupElement(
                kept.iter()
                    .map(|&j| {
                        let d = s.diagonal[j];
                        let x: i128 = g.0.iter().enumerate().map(|(i, &e)| e as i128 * s.q[i][j]).sum();
                        x.rem_euclid(d) as usize
                    })
                    .collect(),
            )
        };
        let images = self.elements().map(|g| project(&g)).collect();
        Quotient {
            parent: self.clone(),
            group,
            images,
        }
    }

    /// Every automorphism of the group, listed explicitly.
    ///
    /// Images of the standard generators are chosen one factor at a time;
    /// a partial choice survives only if it is injective on the subgroup
    /// generated by the factors fixed so far.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<GroupAutomorphism>> {
        if self.size > bound {
            return Err(Error::AutTooLarge {
                size: self.size,
                bound,
            });
        }
        let all: Vec<GroupElement> = self.elements().collect();
        let mut out = Vec::new();
        let mut chosen: Vec<GroupElement> = Vec::new();
        self.extend_automorphism(&all, &mut chosen, &mut out, bound)?;
        Ok(out)
    }

    fn extend_automorphism(
        &self,
        all: &[GroupElement],
        chosen: &mut Vec<GroupElement>,
        out: &mut Vec<GroupAutomorphism>,
        bound: usize,
    ) -> Result<()> {
        let i = chosen.len();
        if i == self.rank() {
            out.push(self.hom_from_images(chosen));
            if out.len() > AUT_COUNT_LIMIT {
                return Err(Error::AutTooLarge {
                    size: self.size,
                    bound,
                });
            }
            return Ok(());
        }
        let n = self.orders[i];
        let expected: usize = self.orders[..=i].iter().product();
        for g in all {
            if !n.is_multiple_of(self.element_order(g)) {
                continue;
            }
            chosen.push(g.clone());
            if self.subgroup_generated(chosen).size() == expected {
                self.extend_automorphism(all, chosen, out, bound)?;
            }
            chosen.pop();
        }
        Ok(())
    }

    fn hom_from_images(&self, images: &[GroupElement]) -> GroupAutomorphism {
        let map = self
            .elements()
            .map(|g| {
                let mut acc = self.identity();
                for (e, img) in g.0.iter().zip(images) {
                    acc = self.mul(&acc, &self.pow(img, *e as i64));
                }
                self.index_of(&acc)
            })
            .collect();
        GroupAutomorphism { map }
    }

    /// Image of a subset under `x -> x^sigma * h`.
    pub fn affine_image(
        &self,
        set: &[GroupElement],
        sigma: &GroupAutomorphism,
        h: &GroupElement,
    ) -> BTreeSet<GroupElement> {
        set.iter()
            .map(|x| self.mul(&sigma.apply(self, x), h))
            .collect()
    }
}

/// A subgroup given by generators together with its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: AbelianGroup,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.elements.len() == self.parent.size
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// The subgroup as an abstract group, recognized by invariant factors
    /// of its order statistics.
    pub fn invariant_factors(&self) -> Vec<usize> {
        let hist = {
            let mut h = BTreeMap::new();
            for g in &self.elements {
                *h.entry(self.parent.element_order(g)).or_insert(0) += 1;
            }
            h
        };
        invariant_factors_from_histogram(&hist)
    }
}

/// `H/K` with the projection `H -> H/K`.
#[derive(Debug, Clone)]
pub struct Quotient {
    parent: AbelianGroup,
    group: AbelianGroup,
    images: Vec<GroupElement>,
}

impl Quotient {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn map(&self, g: &GroupElement) -> GroupElement {
        self.images[self.parent.index_of(g)].clone()
    }

    /// `X/K = { Kx : x in X }`.
    pub fn map_set<'a>(&self, xs: impl IntoIterator<Item = &'a GroupElement>) -> BTreeSet<GroupElement> {
        xs.into_iter().map(|x| self.map(x)).collect()
    }
}

/// An automorphism stored as a table over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(group: &AbelianGroup) -> Self {
        GroupAutomorphism {
            map: (0..group.size()).collect(),
        }
    }

    pub fn apply(&self, group: &AbelianGroup, g: &GroupElement) -> GroupElement {
        group.element_at(self.map[group.index_of(g)])
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub(crate) fn from_table(map: Vec<usize>) -> Self {
        GroupAutomorphism { map }
    }
}

/// Invariant factors (descending) of the abelian group with the given
/// element-order statistics. For every prime `p`, the number of elements
/// whose order divides `p^j` is `p^(sum_i min(j, e_i))`, which pins down
/// the exponents `e_i` of the `p`-primary part.
pub fn invariant_factors_from_histogram(hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let size: usize = hist.values().sum();
    let mut per_prime: Vec<(usize, Vec<u32>)> = Vec::new();
    for (p, e) in factorize(size) {
        // c_j = log_p #{g : ord(g) | p^j}
        let mut c = vec![0u32];
        for j in 1..=e {
            let pj = p.pow(j);
            let count: usize = hist
                .iter()
                .filter(|(&o, _)| pj % o == 0)
                .map(|(_, &n)| n)
                .sum();
            c.push(ilog(count, p));
        }
        // number of cyclic factors with exponent >= j is c_j - c_{j-1}
        let mut exps = Vec::new();
        for j in 1..=e as usize {
            let at_least_j = c[j] - c[j - 1];
            let at_least_next = if j < e as usize { c[j + 1] - c[j] } else { 0 };
            for _ in 0..(at_least_j - at_least_next) {
                exps.push(j as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push((p, exps));
    }
    let len = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    (0..len)
        .map(|i| {
            per_prime
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect()
}

/// All abelian groups of order `n` up to isomorphism, each given by its
/// invariant factors in descending order (`[1]` for the trivial group).
pub fn abelian_groups_of_order(n: usize) -> Vec<AbelianGroup> {
    let mut combos: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for part in partitions(e as usize) {
            for base in &combos {
                let len = base.len().max(part.len());
                let merged: Vec<usize> = (0..len)
                    .map(|i| base.get(i).copied().unwrap_or(1) * p.pow(part.get(i).copied().unwrap_or(0) as u32))
                    .collect();
                next.push(merged);
            }
        }
        combos = next;
    }
    let mut groups: Vec<AbelianGroup> = combos
        .into_iter()
        .map(|c| if c.is_empty() { vec![1] } else { c })
        .map(|c| AbelianGroup::new(&c).expect("positive orders"))
        .collect();
    groups.sort_by(|a, b| a.orders.cmp(&b.orders));
    groups
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[usize]) -> AbelianGroup {
        AbelianGroup::new(orders).unwrap()
    }

    /// Brute-force isomorphism between two small abelian groups: search for
    /// a bijective homomorphism by extending images of standard generators.
    fn brute_isomorphic(a: &AbelianGroup, b: &AbelianGroup) -> bool {
        if a.size() != b.size() {
            return false;
        }
        let gens = a.generators();
        let targets: Vec<GroupElement> = b.elements().collect();
        let mut stack = vec![Vec::<GroupElement>::new()];
        while let Some(imgs) = stack.pop() {
            if imgs.len() == gens.len() {
                let mut image = BTreeSet::new();
                let mut ok = true;
                for x in a.elements() {
                    let mut acc = b.identity();
                    for (e, img) in x.exponents().iter().zip(&imgs) {
                        acc = b.mul(&acc, &b.pow(img, *e as i64));
                    }
                    ok &= image.insert(acc);
                }
                if ok {
                    return true;
                }
                continue;
            }
            let n = a.orders()[imgs.len()];
            for t in &targets {
                if n.is_multiple_of(b.element_order(t)) {
                    let mut next = imgs.clone();
                    next.push(t.clone());
                    stack.push(next);
                }
            }
        }
        false
    }

    #[test]
    fn construction_and_sizes() {
        assert_eq!(g(&[2, 2]).size(), 4);
        assert_eq!(g(&[13]).size(), 13);
        assert_eq!(g(&[6, 2]).size(), 12);
        assert_eq!(AbelianGroup::new(&[]), Err(Error::EmptyPresentation));
        assert_eq!(AbelianGroup::new(&[3, 0]), Err(Error::BadOrder(0)));
        assert_eq!(g(&[1]).size(), 1);
    }

    #[test]
    fn canonical_factors_match_brute_force() {
        assert_eq!(g(&[6, 2]).invariant_factors(), vec![6, 2]);
        assert_eq!(g(&[2, 6]).invariant_factors(), vec![6, 2]);
        assert_eq!(g(&[3, 4]).invariant_factors(), vec![12]);
        assert_eq!(g(&[1]).invariant_factors(), Vec::<usize>::new());
        // every presentation of size <= 16 with <= 3 factors: invariant
        // factor equality agrees with brute-force isomorphism
        let mut pres = Vec::new();
        for a in 1..=16usize {
            for b in 1..=16 / a {
                pres.push(vec![a, b]);
                for c in 2..=16 / (a * b) {
                    pres.push(vec![a, b, c]);
                }
            }
        }
        for x in &pres {
            for y in &pres {
                let (gx, gy) = (g(x), g(y));
                if gx.size() != gy.size() || gx.size() > 16 {
                    continue;
                }
                assert_eq!(
                    gx.is_isomorphic(&gy),
                    brute_isomorphic(&gx, &gy),
                    "{x:?} vs {y:?}"
                );
            }
        }
    }

    #[test]
    fn element_orders() {
        let z8 = g(&[8]);
        assert_eq!(z8.element_order(&z8.identity()), 1);
        assert_eq!(z8.element_order(&z8.element(&[1]).unwrap()), 8);
        let h = g(&[6, 2]);
        let x = h.element(&[3, 1]).unwrap();
        // repeated multiplication oracle
        let mut acc = x.clone();
        let mut k = 1;
        while !h.is_identity(&acc) {
            acc = h.mul(&acc, &x);
            k += 1;
        }
        assert_eq!(k, 2);
        assert_eq!(h.element_order(&x), 2);
    }

    #[test]
    fn generated_subgroups() {
        let z5 = g(&[5]);
        assert_eq!(z5.subgroup_generated(&[]).size(), 1);
        let z13 = g(&[13]);
        let a = z13.element(&[1]).unwrap();
        let s = z13.subgroup_generated(&[a.clone(), z13.pow(&a, 4)]);
        assert!(s.is_whole_group());
        let k4 = g(&[2, 2]);
        let s = k4.subgroup_generated(&[k4.element(&[1, 0]).unwrap(), k4.element(&[0, 1]).unwrap()]);
        assert!(s.is_whole_group());
    }

    #[test]
    fn quotients() {
        let z4 = g(&[4]);
        let k = z4.subgroup_generated(&[z4.element(&[2]).unwrap()]);
        assert_eq!(z4.quotient(&k).group().size(), 2);

        let h = g(&[6, 2]);
        let n1 = h.element(&[2, 0]).unwrap();
        let k = h.subgroup_generated(&[n1]);
        assert_eq!(k.size(), 3);
        let q = h.quotient(&k);
        assert_eq!(q.group().invariant_factors(), vec![2, 2]);

        let trivial = h.subgroup_generated(&[]);
        assert!(h.quotient(&trivial).group().is_isomorphic(&h));
    }

    #[test]
    fn quotient_map_is_a_surjective_homomorphism_with_kernel_k() {
        let h = g(&[4, 6, 2]);
        let k = h.subgroup_generated(&[h.element(&[2, 3, 1]).unwrap(), h.element(&[0, 2, 0]).unwrap()]);
        let q = h.quotient(&k);
        assert_eq!(q.group().size() * k.size(), h.size());
        let all: Vec<_> = h.elements().collect();
        for x in &all {
            for y in &all {
                assert_eq!(q.map(&h.mul(x, y)), q.group().mul(&q.map(x), &q.map(y)));
            }
            assert_eq!(q.group().is_identity(&q.map(x)), k.contains(x));
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(g(&[2]).automorphisms(64).unwrap().len(), 1);
        assert_eq!(g(&[7]).automorphisms(64).unwrap().len(), 6);
        assert_eq!(g(&[2, 2]).automorphisms(64).unwrap().len(), 6);
        assert!(matches!(
            g(&[128]).automorphisms(64),
            Err(Error::AutTooLarge { .. })
        ));
    }

    #[test]
    fn klein_automorphisms_match_bijection_filter() {
        // all 4! bijections of Z_2^2, keep homomorphisms
        let k4 = g(&[2, 2]);
        let els: Vec<_> = k4.elements().collect();
        let mut count = 0;
        let mut perm: Vec<usize> = (0..4).collect();
        fn next_perm(p: &mut [usize]) -> bool {
            let n = p.len();
            let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
                return false;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            true
        }
        loop {
            let f = |x: &GroupElement| els[perm[k4.index_of(x)]].clone();
            if els
                .iter()
                .all(|x| els.iter().all(|y| f(&k4.mul(x, y)) == k4.mul(&f(x), &f(y))))
            {
                count += 1;
            }
            if !next_perm(&mut perm) {
                break;
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn automorphisms_form_a_group_fixing_identity() {
        for orders in [vec![8], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![6, 2]] {
            let h = g(&orders);
            let auts = h.automorphisms(64).unwrap();
            let set: BTreeSet<_> = auts.iter().map(|a| a.table().to_vec()).collect();
            assert_eq!(set.len(), auts.len());
            for a in &auts {
                assert_eq!(a.apply(&h, &h.identity()), h.identity());
                for b in &auts {
                    assert!(set.contains(a.then(b).table()));
                }
            }
        }
    }

    #[test]
    fn histogram_recognition() {
        for orders in [vec![12], vec![6, 2], vec![2, 2, 3], vec![9, 3], vec![4, 4], vec![8, 2], vec![1]] {
            let h = g(&orders);
            assert_eq!(invariant_factors_from_histogram(&h.order_histogram()), h.invariant_factors());
        }
    }

    #[test]
    fn groups_of_order() {
        let sizes: Vec<usize> = (1..=24).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5, 1, 2, 1, 2, 1, 1, 1, 3]);
        let g16: Vec<Vec<usize>> = abelian_groups_of_order(16).iter().map(|g| g.invariant_factors()).collect();
        assert!(g16.contains(&vec![2, 2, 2, 2]));
        assert!(g16.contains(&vec![4, 2, 2]));
    }

    #[test]
    fn relator_presentations_match_direct_products() {
        // <a, b | a^{rm} = b^{rm} = 1, b^m = a^{m(u+1)}> is Z_rm x Z_m
        for (r, m, u) in [(13usize, 1usize, 3i64), (7, 2, 2), (7, 1, 4), (21, 1, 4)] {
            let big = g(&[r * m, r * m]);
            let rel = big.element(&[-(m as i64) * (u + 1), m as i64]).unwrap();
            let q = big.quotient(&big.subgroup_generated(&[rel]));
            let target = g(&[r * m, m]);
            assert_eq!(q.group().order_histogram(), target.order_histogram(), "r={r} m={m}");
            assert!(q.group().is_isomorphic(&target));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn abelian_law(orders in prop::collection::vec(1usize..6, 1..4)) {
                let h = g(&orders);
                prop_assume!(h.size() <= 64);
                let all: Vec<_> = h.elements().collect();
                for x in &all {
                    prop_assert_eq!(h.element_at(h.index_of(x)), x.clone());
                    for y in &all {
                        prop_assert_eq!(h.mul(x, y), h.mul(y, x));
                    }
                    prop_assert_eq!(h.size() % h.element_order(x), 0);
                }
            }

            #[test]
            fn quotient_sizes(orders in prop::collection::vec(1usize..7, 1..4), picks in prop::collection::vec(0usize..1000, 0..3)) {
                let h = g(&orders);
                let gens: Vec<_> = picks.iter().map(|&i| h.element_at(i % h.size())).collect();
                let k = h.subgroup_generated(&gens);
                let q = h.quotient(&k);
                prop_assert_eq!(q.group().size() * k.size(), h.size());
            }
        }
    }
}
