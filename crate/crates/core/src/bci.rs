//! The BCI property of 0-type bi-Cayley graphs.
//!
//! `BC(H, S)` is a BCI-graph when every `BC(H, T)` isomorphic to it has
//! `T = h S^sigma` for some `h` in `H` and automorphism `sigma` of `H`.
//! [`bci_by_criterion`] decides this through the normalizer of `R(H)` and
//! the conjugacy classes of semiregular subgroups; [`bci_oracle`] checks
//! the definition directly over all `T`.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{AbelianGroup, GroupElement, DEFAULT_AUT_BOUND};
use crate::bicayley::{BiCayleyGraph, BiCayleySpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{
    abelian_type, are_conjugate, automorphism_group, canonical_form, enumerate_semiregular, normalizer, PermGroup,
};

/// Largest `|H|` accepted by [`bci_oracle`].
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Criterion,
    Oracle,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BciVerdict {
    pub graph: String,
    #[serde(rename = "H")]
    pub group: Vec<usize>,
    #[serde(rename = "S")]
    pub spoke: Vec<Vec<usize>>,
    pub is_bci: bool,
    pub method: Method,
    /// Conjugacy classes in `Aut` of semiregular subgroups with orbits
    /// `H_0`, `H_1` that are isomorphic to `H`.
    pub classes: Option<usize>,
    pub normalizer_transitive: Option<bool>,
    /// A `T` giving an isomorphic graph that is not of the form `h S^sigma`.
    pub counterexample: Option<Vec<Vec<usize>>>,
}

impl BciVerdict {
    fn new(b: &BiCayleyGraph, method: Method) -> Self {
        BciVerdict {
            graph: b.graph().to_graph6(),
            group: b.group().orders().to_vec(),
            spoke: b.spec().spoke().iter().map(|g| g.exponents().to_vec()).collect(),
            is_bci: false,
            method,
            classes: None,
            normalizer_transitive: None,
            counterexample: None,
        }
    }
}

/// Semiregular subgroups of `aut` with orbits `H_0`, `H_1` isomorphic to
/// `H`, grouped into `aut`-conjugacy classes.
pub fn semiregular_classes(b: &BiCayleyGraph, aut: &PermGroup) -> Result<Vec<Vec<PermGroup>>> {
    let h = b.group();
    let parts = b.parts();
    let mut classes: Vec<Vec<PermGroup>> = Vec::new();
    for x in enumerate_semiregular(aut, &parts, h.size())? {
        // H is abelian, so a non-abelian X is never isomorphic to it
        match abelian_type(&x)? {
            Some(t) if t.is_isomorphic(h) => {}
            _ => continue,
        }
        let mut placed = false;
        for class in &mut classes {
            if are_conjugate(aut, &class[0], &x)?.is_some() {
                class.push(x.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![x]);
        }
    }
    Ok(classes)
}

pub fn bci_by_criterion(b: &BiCayleyGraph) -> Result<BciVerdict> {
    if !b.spec().is_zero_type() {
        return Err(Error::NotZeroType);
    }
    let aut = automorphism_group(b.graph())?;
    let rh = b.right_translations();
    let transitive = normalizer(&rh, &aut)?.is_transitive();
    let classes = semiregular_classes(b, &aut)?;
    let mut verdict = BciVerdict::new(b, Method::Criterion);
    verdict.normalizer_transitive = Some(transitive);
    verdict.classes = Some(classes.len());
    verdict.is_bci = transitive && classes.len() == 1;
    Ok(verdict)
}

/// All sets `h S^sigma`, each sorted.
pub fn affine_orbit(h: &AbelianGroup, s: &[GroupElement]) -> Result<BTreeSet<Vec<GroupElement>>> {
    let auts = h.automorphisms(DEFAULT_AUT_BOUND)?;
    let mut out = BTreeSet::new();
    for sigma in &auts {
        for x in h.elements() {
            out.insert(h.affine_image(s, sigma, &x).into_iter().collect());
        }
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

fn zero_type_graph(h: &AbelianGroup, t: &[GroupElement]) -> Result<Graph> {
    Ok(BiCayleyGraph::build(BiCayleySpec::zero_type(h.clone(), t)?)?.graph().clone())
}

/// Checks the definition over every `T` with `|T| = |S|`.
pub fn bci_oracle(b: &BiCayleyGraph) -> Result<BciVerdict> {
    if !b.spec().is_zero_type() {
        return Err(Error::NotZeroType);
    }
    let h = b.group();
    if h.size() > ORACLE_MAX_ORDER {
        return Err(Error::OracleTooLarge(h.size()));
    }
    let s = b.spec().spoke();
    let orbit = affine_orbit(h, s)?;
    let target = canonical_form(b.graph())?.certificate;
    let (connected, girth) = (b.graph().is_connected(), b.graph().girth());
    let elements: Vec<GroupElement> = h.elements().collect();
    let candidates: Vec<Vec<GroupElement>> = subsets(h.size(), s.len())
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| elements[i].clone()).collect::<Vec<_>>())
        .filter(|t| !orbit.contains(t))
        .collect();
    let counterexamples: Vec<Vec<GroupElement>> = candidates
        .par_iter()
        .map(|t| -> Result<Option<Vec<GroupElement>>> {
            let g = zero_type_graph(h, t)?;
            if g.is_connected() != connected || g.girth() != girth {
                return Ok(None);
            }
            Ok((canonical_form(&g)?.certificate == target).then(|| t.clone()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut verdict = BciVerdict::new(b, Method::Oracle);
    verdict.is_bci = counterexamples.is_empty();
    verdict.counterexample = counterexamples
        .first()
        .map(|t| t.iter().map(|g| g.exponents().to_vec()).collect());
    Ok(verdict)
}

/// Both verdicts, which must agree.
#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub verdict: BciVerdict,
    pub criterion_ms: u128,
    pub oracle_ms: u128,
}

pub fn cross_check(b: &BiCayleyGraph) -> Result<CrossCheck> {
    let start = Instant::now();
    let criterion = bci_by_criterion(b)?;
    let criterion_ms = start.elapsed().as_millis();
    let start = Instant::now();
    let oracle = bci_oracle(b)?;
    let oracle_ms = start.elapsed().as_millis();
    if criterion.is_bci != oracle.is_bci {
        return Err(Error::BciDisagreement(format!(
            "{}: criterion says {}, oracle says {} (counterexample {:?})",
            b.spec(),
            criterion.is_bci,
            oracle.is_bci,
            oracle.counterexample
        )));
    }
    Ok(CrossCheck {
        verdict: BciVerdict {
            method: Method::Both,
            counterexample: oracle.counterexample,
            ..criterion
        },
        criterion_ms,
        oracle_ms,
    })
}
