//! Enumeration of skew braces with a given additive group, and brace
//! isomorphism.
//!
//! A map `λ: G → Aut(G)` with `λ_0 = id` defines a skew brace through
//! `a ∘ b = a + λ_a(b)` exactly when `λ_{a + λ_a(b)} = λ_a λ_b` for all
//! `a, b`. The search assigns `λ` element by element (generators first) and
//! propagates this equation after every choice.

use crate::bounds::Bounds;
use crate::brace::SkewBrace;
use crate::error::Result;
use crate::group::{
    automorphisms, catalog_group, catalog_size, find_isomorphism, for_each_isomorphism, Automorphism, FiniteGroup,
    CATALOG_MAX_ORDER,
};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

const UNSET: usize = usize::MAX;

/// Every skew brace with additive group `group`, as labeled structures on
/// the same index set (no isomorphism reduction).
pub fn enumerate_on_additive(group: &FiniteGroup, bounds: &Bounds) -> Result<Vec<SkewBrace>> {
    let gens = group.generators();
    let rest = (1..group.order()).filter(|a| !gens.contains(a));
    let order: Vec<usize> = gens.iter().copied().chain(rest).collect();
    enumerate_in_order(group, &order, bounds)
}

/// As [`enumerate_on_additive`], assigning `λ` in the given element order
/// (which must list every nonzero element once).
pub fn enumerate_in_order(group: &FiniteGroup, element_order: &[usize], bounds: &Bounds) -> Result<Vec<SkewBrace>> {
    let n = group.order();
    bounds.check_enumeration_order(n)?;
    let auts = automorphisms(group, bounds)?;
    let index: BTreeMap<&[usize], usize> = auts.iter().enumerate().map(|(i, a)| (a.perm(), i)).collect();
    let m = auts.len();
    let mut compose = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            compose[i * m + j] = index[auts[i].compose(&auts[j]).perm()];
        }
    }
    let identity = index[Automorphism::identity(n).perm()];
    let mut search = Search {
        group,
        auts: &auts,
        compose,
        m,
        lambda: vec![UNSET; n],
        assigned: Vec::with_capacity(n),
        found: Vec::new(),
    };
    if search.assign(0, identity) {
        search.run(element_order, 0);
    }
    let mut braces = Vec::with_capacity(search.found.len());
    for lambda in search.found {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            let l = &auts[lambda[a]];
            for b in 0..n {
                mul.push(group.op(a, l.apply(b)));
            }
        }
        braces.push(SkewBrace::from_groups(group.clone(), FiniteGroup::from_flat(n, mul)?)?);
    }
    Ok(braces)
}

struct Search<'a> {
    group: &'a FiniteGroup,
    auts: &'a [Automorphism],
    compose: Vec<usize>,
    m: usize,
    lambda: Vec<usize>,
    /// Assigned elements, in assignment order (doubles as the undo trail).
    assigned: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, order: &[usize], pos: usize) {
        let Some(at) = order[pos..].iter().position(|&a| self.lambda[a] == UNSET) else {
            self.found.push(self.lambda.clone());
            return;
        };
        let a = order[pos + at];
        for k in 0..self.m {
            let mark = self.assigned.len();
            if self.assign(a, k) {
                self.run(order, pos + at + 1);
            }
            self.undo(mark);
        }
    }

    fn undo(&mut self, mark: usize) {
        for a in self.assigned.drain(mark..) {
            self.lambda[a] = UNSET;
        }
    }

    /// Sets `λ_a = auts[k]` and closes under the functional equation;
    /// `false` on a contradiction.
    fn assign(&mut self, a: usize, k: usize) -> bool {
        self.lambda[a] = k;
        self.assigned.push(a);
        let mut next = self.assigned.len() - 1;
        while next < self.assigned.len() {
            let x = self.assigned[next];
            next += 1;
            let mut i = 0;
            while i < self.assigned.len() {
                let y = self.assigned[i];
                i += 1;
                if !self.propagate(x, y) || (x != y && !self.propagate(y, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// `λ_{x + λ_x(y)} = λ_x λ_y`.
    fn propagate(&mut self, x: usize, y: usize) -> bool {
        let (lx, ly) = (self.lambda[x], self.lambda[y]);
        let target = self.group.op(x, self.auts[lx].apply(y));
        let required = self.compose[lx * self.m + ly];
        match self.lambda[target] {
            UNSET => {
                self.lambda[target] = required;
                self.assigned.push(target);
                true
            }
            current => current == required,
        }
    }
}

/// An isomorphism class of braces found by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceClass {
    /// Lexicographically least multiplication table in the class, over the
    /// shared additive table.
    pub brace: SkewBrace,
    /// Catalog index of the additive group, if it is a catalog group.
    pub additive_index: Option<usize>,
    /// Catalog index of the multiplicative group.
    pub multiplicative_index: Option<usize>,
    /// Number of labeled braces in the class on this additive table.
    pub labeled_count: usize,
}

/// Isomorphism classes of the braces with additive group `group`.
///
/// Two braces on the same additive table are isomorphic exactly when an
/// automorphism of that table carries one multiplication to the other, so
/// the least relabeled table over `Aut(G)` is a complete invariant.
pub fn classes_on_additive(group: &FiniteGroup, bounds: &Bounds) -> Result<Vec<BraceClass>> {
    let n = group.order();
    let braces = enumerate_on_additive(group, bounds)?;
    let auts = automorphisms(group, bounds)?;
    let additive_index = identify(group);
    let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut mul_cache: Vec<(FiniteGroup, Option<usize>)> = Vec::new();
    let mut out: Vec<BraceClass> = Vec::new();
    for b in braces {
        let key = canonical_mul(&b, &auts);
        if let Some(&i) = classes.get(&key) {
            out[i].labeled_count += 1;
            continue;
        }
        let brace = SkewBrace::from_groups_unchecked(group.clone(), FiniteGroup::from_trusted(n, key.clone()));
        let mul = brace.multiplicative();
        let multiplicative_index = match mul_cache.iter().find(|(g, _)| g == mul) {
            Some((_, idx)) => *idx,
            None => {
                let idx = identify(mul);
                mul_cache.push((mul.clone(), idx));
                idx
            }
        };
        classes.insert(key, out.len());
        out.push(BraceClass {
            brace,
            additive_index,
            multiplicative_index,
            labeled_count: 1,
        });
    }
    out.sort_by(|a, b| {
        a.multiplicative_index.cmp(&b.multiplicative_index).then_with(|| {
            a.brace
                .multiplicative()
                .flat_table()
                .cmp(b.brace.multiplicative().flat_table())
        })
    });
    Ok(out)
}

fn canonical_mul(b: &SkewBrace, auts: &[Automorphism]) -> Vec<usize> {
    let n = b.order();
    let mut best: Option<Vec<usize>> = None;
    let mut table = vec![0; n * n];
    for phi in auts {
        for a in 0..n {
            for c in 0..n {
                table[phi.apply(a) * n + phi.apply(c)] = phi.apply(b.circ(a, c));
            }
        }
        if best.as_ref().is_none_or(|t| table < *t) {
            best = Some(table.clone());
        }
    }
    best.expect("Aut(G) contains the identity")
}

/// Catalog index of a group of order at most 15.
pub fn identify(group: &FiniteGroup) -> Option<usize> {
    let n = group.order();
    if n > CATALOG_MAX_ORDER {
        return None;
    }
    (0..catalog_size(n)?).find(|&i| {
        let g = catalog_group(n, i).expect("index within the catalog");
        g.is_abelian() == group.is_abelian() && find_isomorphism(&g, group).is_some()
    })
}

/// All isomorphism classes of skew braces of the given order, grouped by
/// additive catalog index.
pub fn enumerate_all(order: usize, bounds: &Bounds) -> Result<Vec<BraceClass>> {
    bounds.check_enumeration_order(order)?;
    let size = catalog_size(order).ok_or(crate::Error::OutOfCatalog { order, index: 0 })?;
    let mut out = Vec::new();
    for i in 0..size {
        out.extend(classes_on_additive(&catalog_group(order, i)?, bounds)?);
    }
    Ok(out)
}

/// Number of classes per (additive, multiplicative) catalog index.
pub fn class_counts(classes: &[BraceClass]) -> BTreeMap<(Option<usize>, Option<usize>), usize> {
    let mut counts = BTreeMap::new();
    for c in classes {
        *counts.entry((c.additive_index, c.multiplicative_index)).or_insert(0) += 1;
    }
    counts
}

/// Outcome of [`are_isomorphic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCertificate {
    /// `map[a]` is the image of `a`; it preserves both operations.
    Isomorphic(Vec<usize>),
    /// The invariant that differs.
    Refuted(String),
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoCertificate::Isomorphic(_))
    }
}

/// Per-element signature: additive order, multiplicative order, order of
/// `λ_a`, and the number of `b` with `a ∗ b = 0`.
fn signature(b: &SkewBrace) -> Vec<(usize, usize, usize, usize)> {
    let n = b.order();
    let mut sig: Vec<_> = (0..n)
        .map(|a| {
            let l = b.lambda_map(a);
            let mut power = l.clone();
            let mut k = 1;
            while !power.is_identity() {
                power = power.compose(&l);
                k += 1;
            }
            (
                b.additive().element_order(a),
                b.multiplicative().element_order(a),
                k,
                (0..n).filter(|&c| b.star(a, c) == 0).count(),
            )
        })
        .collect();
    sig.sort_unstable();
    sig
}

pub fn are_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> IsoCertificate {
    let refute = |what: &str| IsoCertificate::Refuted(String::from(what));
    if b1.order() != b2.order() {
        return refute("orders differ");
    }
    let (s1, s2) = (b1.socle_and_centre(), b2.socle_and_centre());
    if s1.ker_lambda.len() != s2.ker_lambda.len() {
        return refute("Ker λ sizes differ");
    }
    if s1.socle.len() != s2.socle.len() {
        return refute("socle sizes differ");
    }
    if s1.centre.len() != s2.centre.len() {
        return refute("centre sizes differ");
    }
    if signature(b1) != signature(b2) {
        return refute("element signatures (orders, λ orders, star zeros) differ");
    }
    if find_isomorphism(b1.multiplicative(), b2.multiplicative()).is_none() {
        return refute("multiplicative groups are not isomorphic");
    }
    let n = b1.order();
    let mut found = None;
    let mut additive_iso = false;
    for_each_isomorphism(b1.additive(), b2.additive(), |map| {
        additive_iso = true;
        let preserves = (0..n).all(|a| (0..n).all(|c| map[b1.circ(a, c)] == b2.circ(map[a], map[c])));
        if preserves {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match found {
        Some(map) => IsoCertificate::Isomorphic(map),
        None if !additive_iso => refute("additive groups are not isomorphic"),
        None => IsoCertificate::Refuted(format!("no additive isomorphism preserves ∘ (order {n})")),
    }
}
