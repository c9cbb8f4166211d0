//! Subgroup computations by explicit element enumeration. All of these
//! refuse groups above the enumeration bound.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::group::PermGroup;
use super::perm::Permutation;
use crate::abelian::{invariant_factors_from_histogram, AbelianGroup};
use crate::error::{Error, Result};

fn element_set(group: &PermGroup) -> Result<HashSet<Permutation>> {
    Ok(group.elements()?.into_iter().collect())
}

/// The largest normal subgroup of `ambient` contained in `sub`.
pub fn core_of(sub: &PermGroup, ambient: &PermGroup) -> Result<PermGroup> {
    ambient.elements()?; // bound check on the ambient group
    let mut current = element_set(sub)?;
    let inverses: Vec<Permutation> = ambient.generators().iter().map(Permutation::inverse).collect();
    loop {
        // x in C^s  iff  s x s^-1 in C
        let next: HashSet<Permutation> = current
            .iter()
            .filter(|x| inverses.iter().all(|si| current.contains(&x.conjugate_by(si))))
            .cloned()
            .collect();
        if next.len() == current.len() {
            break;
        }
        current = next;
    }
    let mut els: Vec<Permutation> = current.into_iter().collect();
    els.sort();
    Ok(PermGroup::generated_by(sub.degree(), &els))
}

/// `{ g in ambient : g^-1 sub g = sub }`.
pub fn normalizer(sub: &PermGroup, ambient: &PermGroup) -> Result<PermGroup> {
    let kept: Vec<Permutation> = ambient
        .elements()?
        .into_iter()
        .filter(|g| sub.generators().iter().all(|h| sub.contains(&h.conjugate_by(g))))
        .collect();
    Ok(PermGroup::generated_by(ambient.degree(), &kept))
}

/// `{ g in group : U^g = U }`.
pub fn setwise_stabilizer(group: &PermGroup, set: &[usize]) -> Result<PermGroup> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let kept: Vec<Permutation> = group
        .elements()?
        .into_iter()
        .filter(|g| g.image_of_set(&sorted) == sorted)
        .collect();
    Ok(PermGroup::generated_by(group.degree(), &kept))
}

/// Orbits of an intransitive normal subgroup `normal` of `group`, and the
/// kernel of `group` acting on them.
#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
    pub kernel: PermGroup,
}

impl BlockSystem {
    /// The kernel coincides with `normal`, which acts regularly on each block.
    pub fn kernel_is_regular_normal(&self, normal: &PermGroup) -> bool {
        let order = normal.order();
        self.kernel.same_elements(normal)
            && self.blocks.iter().all(|b| b.len() as u128 == order)
    }
}

pub fn block_system_and_kernel(group: &PermGroup, normal: &PermGroup) -> Result<BlockSystem> {
    if normal.is_transitive() && group.degree() > 1 {
        return Err(Error::TransitiveNormalSubgroup);
    }
    let blocks = normal.orbits();
    let mut block_of = vec![0; group.degree()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let kernel: Vec<Permutation> = group
        .elements()?
        .into_iter()
        .filter(|g| (0..group.degree()).all(|v| block_of[g.apply(v)] == block_of[v]))
        .collect();
    Ok(BlockSystem {
        blocks,
        kernel: PermGroup::generated_by(group.degree(), &kernel),
    })
}

/// Conjugacy classes of a group, as lists of elements.
pub fn conjugacy_classes(group: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    let elements = group.elements()?;
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = &elements[members[i]];
            i += 1;
            for s in group.generators() {
                let y = index[&x.conjugate_by(s)];
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
        }
        let mut class: Vec<Permutation> = members.into_iter().map(|m| elements[m].clone()).collect();
        class.sort();
        classes.push(class);
    }
    Ok(classes)
}

/// All normal subgroups acting regularly on the point set.
///
/// A regular normal subgroup is the identity together with a union of
/// conjugacy classes of fixed-point-free elements totalling `degree - 1`.
pub fn regular_normal_subgroups(group: &PermGroup) -> Result<Vec<PermGroup>> {
    let degree = group.degree();
    let classes: Vec<Vec<Permutation>> = conjugacy_classes(group)?
        .into_iter()
        .filter(|c| (0..degree).all(|v| !c[0].fixes(v)))
        .filter(|c| c.len() < degree)
        .collect();
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    search_class_unions(group, &classes, 0, degree.saturating_sub(1), &mut chosen, &mut found);
    Ok(found)
}

fn search_class_unions(
    group: &PermGroup,
    classes: &[Vec<Permutation>],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<PermGroup>,
) {
    if remaining == 0 {
        let degree = group.degree();
        let mut set: Vec<Permutation> = vec![Permutation::identity(degree)];
        for &c in chosen.iter() {
            set.extend(classes[c].iter().cloned());
        }
        let sub = PermGroup::generated_by(degree, &set);
        if sub.order() == set.len() as u128 && sub.is_transitive() {
            found.push(sub);
        }
        return;
    }
    for c in from..classes.len() {
        if classes[c].len() <= remaining {
            chosen.push(c);
            search_class_unions(group, classes, c + 1, remaining - classes[c].len(), chosen, found);
            chosen.pop();
        }
    }
}

/// The abstract type of an abelian permutation group, or `None` if it is
/// not abelian.
pub fn abelian_type(group: &PermGroup) -> Result<Option<AbelianGroup>> {
    if !group.is_abelian() {
        return Ok(None);
    }
    let mut hist = std::collections::BTreeMap::new();
    for e in group.elements()? {
        *hist.entry(e.order()).or_insert(0usize) += 1;
    }
    let factors = invariant_factors_from_histogram(&hist);
    let orders = if factors.is_empty() { vec![1] } else { factors };
    Ok(Some(AbelianGroup::new(&orders).expect("positive orders")))
}

/// If `group` is a non-abelian generalized dihedral group `Dih(L)`, the
/// abelian index-2 subgroup `L` (as an abstract group) with every element
/// outside it inverting it by conjugation.
///
/// Abelian inputs return `None`: `Dih(L)` is abelian only for elementary
/// abelian 2-groups, where the inverting involution acts trivially.
pub fn generalized_dihedral_base(group: &PermGroup) -> Result<Option<AbelianGroup>> {
    let order = group.order();
    if !order.is_multiple_of(2) || group.is_abelian() {
        return Ok(None);
    }
    let elements = group.elements()?;
    let degree = group.degree();
    let non_involutions: Vec<Permutation> = elements
        .iter()
        .filter(|x| !x.then(x).is_identity())
        .cloned()
        .collect();
    let involutions: Vec<Permutation> = elements
        .iter()
        .filter(|x| !x.is_identity() && x.then(x).is_identity())
        .cloned()
        .collect();
    let half = order / 2;
    let start = PermGroup::generated_by(degree, &non_involutions);
    if start.order() > half {
        return Ok(None);
    }
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut frontier = vec![start];
    while let Some(sub) = frontier.pop() {
        if sub.order() == half {
            if let Some(l) = check_dihedral(&sub, &elements)? {
                return Ok(Some(l));
            }
            continue;
        }
        for x in &involutions {
            if sub.contains(x) {
                continue;
            }
            let mut gens = sub.generators().to_vec();
            gens.push(x.clone());
            let bigger = PermGroup::new(degree, gens).expect("same degree");
            if bigger.order() > half || !half.is_multiple_of(bigger.order()) {
                continue;
            }
            let mut key = bigger.elements()?;
            key.sort();
            if seen.insert(key) {
                frontier.push(bigger);
            }
        }
    }
    Ok(None)
}

fn check_dihedral(sub: &PermGroup, elements: &[Permutation]) -> Result<Option<AbelianGroup>> {
    if !sub.is_abelian() {
        return Ok(None);
    }
    let inverts = elements
        .iter()
        .filter(|x| !sub.contains(x))
        .all(|x| sub.generators().iter().all(|l| l.conjugate_by(x) == l.inverse()));
    if inverts {
        abelian_type(sub)
    } else {
        Ok(None)
    }
}

/// All subgroups of order `m` that are semiregular with orbit partition
/// exactly `parts`, in a deterministic order.
pub fn enumerate_semiregular(group: &PermGroup, parts: &[Vec<usize>], m: usize) -> Result<Vec<PermGroup>> {
    let degree = group.degree();
    let elements = group.elements()?;
    if parts.iter().any(|p| p.len() != m) || parts.iter().map(Vec::len).sum::<usize>() != degree {
        return Ok(Vec::new());
    }
    let mut part_of = vec![usize::MAX; degree];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    let candidates: Vec<Permutation> = elements
        .into_iter()
        .filter(|x| !x.is_identity())
        .filter(|x| (0..degree).all(|v| part_of[x.apply(v)] == part_of[v] && !x.fixes(v)))
        .filter(|x| x.is_semiregular() && m.is_multiple_of(x.order()))
        .collect();
    let allowed: HashSet<&Permutation> = candidates.iter().collect();
    let id = Permutation::identity(degree);

    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut results: Vec<Vec<Permutation>> = Vec::new();
    let mut frontier: Vec<Vec<Permutation>> = vec![vec![id.clone()]];
    while let Some(sub) = frontier.pop() {
        if sub.len() == m {
            results.push(sub);
            continue;
        }
        let members: HashSet<&Permutation> = sub.iter().collect();
        for x in &candidates {
            if members.contains(x) {
                continue;
            }
            let Some(closed) = close(&sub, x, m) else {
                continue;
            };
            if !m.is_multiple_of(closed.len()) || !closed.iter().all(|e| e.is_identity() || allowed.contains(e)) {
                continue;
            }
            if seen.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    results.sort();
    Ok(results
        .into_iter()
        .map(|els| PermGroup::generated_by(degree, &els))
        .filter(|g| g.semiregular_with_orbits(parts))
        .collect())
}

/// `<sub, x>` as a sorted element list, or `None` once it exceeds `limit`.
fn close(sub: &[Permutation], x: &Permutation, limit: usize) -> Option<Vec<Permutation>> {
    let mut set: HashSet<Permutation> = sub.iter().cloned().collect();
    let mut gens: Vec<Permutation> = sub.to_vec();
    gens.push(x.clone());
    let mut queue: Vec<Permutation> = set.iter().cloned().collect();
    while let Some(a) = queue.pop() {
        for g in &gens {
            let b = a.then(g);
            if set.insert(b.clone()) {
                if set.len() > limit {
                    return None;
                }
                queue.push(b);
            }
        }
    }
    let mut out: Vec<Permutation> = set.into_iter().collect();
    out.sort();
    Some(out)
}

/// Some `g` in `group` with `g^-1 a g = b`.
pub fn are_conjugate(group: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<Option<Permutation>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let b_elements = element_set(b)?;
    for g in group.elements()? {
        if a.generators().iter().all(|x| b_elements.contains(&x.conjugate_by(&g))) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn dihedral(n: usize) -> PermGroup {
        let r = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let s = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        PermGroup::new(n, vec![r, s]).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        PermGroup::new(n, vec![perm(n, &[&[0, 1]]), Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()]).unwrap()
    }

    #[test]
    fn cores_and_normalizers() {
        let s4 = symmetric(4);
        let stab = s4.pointwise_stabilizer(&[0]);
        assert_eq!(stab.order(), 6);
        assert!(core_of(&stab, &s4).unwrap().is_trivial());
        let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(core_of(&v4, &s4).unwrap().order(), 4);
        assert_eq!(normalizer(&v4, &s4).unwrap().order(), 24);
        let c4 = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(normalizer(&c4, &s4).unwrap().order(), 8);
        assert_eq!(setwise_stabilizer(&s4, &[0, 1]).unwrap().order(), 4);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let mut sizes: Vec<usize> = conjugacy_classes(&symmetric(4)).unwrap().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn regular_normal_subgroups_of_small_groups() {
        assert_eq!(regular_normal_subgroups(&symmetric(4)).unwrap().len(), 1);
        assert_eq!(regular_normal_subgroups(&dihedral(5)).unwrap().len(), 1);
        // the regular representation of Z2^2 is its own unique regular normal subgroup
        let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(regular_normal_subgroups(&v4).unwrap().len(), 1);
        assert!(regular_normal_subgroups(&symmetric(5)).unwrap().is_empty());
    }

    #[test]
    fn block_systems() {
        let d6 = dihedral(6);
        let r3 = PermGroup::new(6, vec![Permutation::from_images((0..6).map(|i| (i + 2) % 6).collect()).unwrap()]).unwrap();
        let sys = block_system_and_kernel(&d6, &r3).unwrap();
        assert_eq!(sys.blocks, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert_eq!(sys.kernel.order(), 6);
        assert!(!sys.kernel_is_regular_normal(&r3));
        assert_eq!(
            block_system_and_kernel(&d6, &d6).err(),
            Some(Error::TransitiveNormalSubgroup)
        );
    }

    #[test]
    fn abelian_types() {
        let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(abelian_type(&v4).unwrap().unwrap().invariant_factors(), vec![2, 2]);
        let c6 = PermGroup::new(5, vec![perm(5, &[&[0, 1, 2], &[3, 4]])]).unwrap();
        assert_eq!(abelian_type(&c6).unwrap().unwrap().invariant_factors(), vec![6]);
        assert_eq!(abelian_type(&symmetric(3)).unwrap(), None);
    }

    #[test]
    fn generalized_dihedral_recognition() {
        for n in [3, 4, 5, 6] {
            let l = generalized_dihedral_base(&dihedral(n)).unwrap().unwrap();
            assert_eq!(l.invariant_factors(), vec![n]);
        }
        assert_eq!(generalized_dihedral_base(&symmetric(4)).unwrap(), None);
        let v4 = PermGroup::new(4, vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]).unwrap();
        assert_eq!(generalized_dihedral_base(&v4).unwrap(), None);
        let a4 = PermGroup::new(4, vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(generalized_dihedral_base(&a4).unwrap(), None);
        // Dih(Z2 x Z4), acting on 8 points
        let a = perm(8, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]]);
        let b = perm(8, &[&[0, 2, 4, 6], &[1, 3, 5, 7]]);
        let t = Permutation::from_images(vec![0, 1, 6, 7, 4, 5, 2, 3]).unwrap();
        let dih = PermGroup::new(8, vec![a, b, t]).unwrap();
        assert_eq!(dih.order(), 16);
        assert_eq!(generalized_dihedral_base(&dih).unwrap().unwrap().invariant_factors(), vec![4, 2]);
    }

    #[test]
    fn semiregular_enumeration_and_conjugacy() {
        let d6 = dihedral(6);
        let parts = vec![vec![0, 2, 4], vec![1, 3, 5]];
        let subs = enumerate_semiregular(&d6, &parts, 3).unwrap();
        assert_eq!(subs.len(), 1);
        let whole = vec![(0..6).collect::<Vec<_>>()];
        let regular = enumerate_semiregular(&d6, &whole, 6).unwrap();
        // Z6 and one S3 acting regularly
        assert_eq!(regular.len(), 2);
        assert!(are_conjugate(&d6, &regular[0], &regular[1]).unwrap().is_none());
        let s4 = symmetric(4);
        let a = PermGroup::new(4, vec![perm(4, &[&[0, 1]])]).unwrap();
        let b = PermGroup::new(4, vec![perm(4, &[&[2, 3]])]).unwrap();
        let g = are_conjugate(&s4, &a, &b).unwrap().unwrap();
        assert_eq!(perm(4, &[&[0, 1]]).conjugate_by(&g), perm(4, &[&[2, 3]]));
    }
}
