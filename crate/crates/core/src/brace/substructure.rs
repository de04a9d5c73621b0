//! Sub-skew braces, left ideals, strong left ideals and ideals.

use super::SkewBrace;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::join_closure;
use crate::set::ElementSet;
use alloc::vec;
use alloc::vec::Vec;

/// A subset of a brace with its classification.
///
/// The flags are computed independently from their definitions; for a valid
/// brace they satisfy `ideal ⇒ strong left ideal ⇒ left ideal ⇒ sub-brace`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubStructure {
    pub elements: ElementSet,
    pub is_sub_brace: bool,
    pub is_left_ideal: bool,
    pub is_strong_left_ideal: bool,
    pub is_ideal: bool,
}

impl SubStructure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    /// The flags respect the downward implication chain.
    pub fn flags_consistent(&self) -> bool {
        (!self.is_ideal || self.is_strong_left_ideal)
            && (!self.is_strong_left_ideal || self.is_left_ideal)
            && (!self.is_left_ideal || self.is_sub_brace)
    }
}

/// The raw conditions from which the flags are derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetConditions {
    pub additive_subgroup: bool,
    pub multiplicative_subgroup: bool,
    pub additively_normal: bool,
    pub lambda_invariant: bool,
    pub multiplicatively_normal: bool,
    /// `S ∗ B ⊆ S`.
    pub star_absorbing: bool,
}

/// Result of the "any three of four conditions" ideal test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeOfFour {
    /// Additively normal, λ-invariant, multiplicatively normal, `S ∗ B ⊆ S`.
    pub conditions: [bool; 4],
    /// Whether at least three conditions hold.
    pub holds: bool,
    /// The first triple of conditions (1-based) that holds, if any.
    pub certificate: Option<[u8; 3]>,
    /// The direct classification of the same set.
    pub verified_ideal: bool,
}

impl SkewBrace {
    pub fn conditions(&self, set: &ElementSet) -> SubsetConditions {
        let n = self.order();
        let all = self.all();
        SubsetConditions {
            additive_subgroup: self.additive().is_subgroup(set),
            multiplicative_subgroup: self.multiplicative().is_subgroup(set),
            additively_normal: self.additive().is_normal_subset(set),
            lambda_invariant: (0..n).all(|b| set.iter().all(|s| set.contains(self.lambda(b, s)))),
            multiplicatively_normal: self.multiplicative().is_normal_subset(set),
            star_absorbing: self.star_span(set, &all).is_subset(set),
        }
    }

    /// Classifies `set` from the definitions. Sets that are not closed come
    /// back with every flag false.
    pub fn classify(&self, set: &ElementSet) -> SubStructure {
        let n = self.order();
        let add_sub = self.additive().is_subgroup(set);
        let mul_sub = self.multiplicative().is_subgroup(set);
        let lambda_invariant = add_sub && (0..n).all(|b| set.iter().all(|s| set.contains(self.lambda(b, s))));
        let is_left_ideal = add_sub && lambda_invariant;
        let is_strong_left_ideal = is_left_ideal && self.additive().is_normal_subset(set);
        SubStructure {
            elements: set.clone(),
            is_sub_brace: add_sub && mul_sub,
            is_left_ideal,
            is_strong_left_ideal,
            is_ideal: is_strong_left_ideal && self.multiplicative().is_normal_subset(set),
        }
    }

    pub fn classify_indices(&self, elements: &[usize]) -> SubStructure {
        self.classify(&ElementSet::from_indices(self.order(), elements.iter().copied()))
    }

    /// The sub-skew brace generated by `seed`: closure under both operations.
    pub fn sub_brace_closure(&self, seed: &ElementSet) -> ElementSet {
        let mut set = ElementSet::singleton(self.order(), 0);
        let mut elems = vec![0];
        for x in seed.iter() {
            if set.insert(x) {
                elems.push(x);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for j in 0..=i {
                let y = elems[j];
                for z in [self.sum(x, y), self.sum(y, x), self.circ(x, y), self.circ(y, x)] {
                    if set.insert(z) {
                        elems.push(z);
                    }
                }
            }
            i += 1;
        }
        set
    }

    /// Every sub-skew brace, in canonical order (size, then members).
    ///
    /// Starts from the sub-braces generated by single elements and closes the
    /// family under joins.
    pub fn sub_skew_braces(&self, bounds: &Bounds) -> Result<Vec<SubStructure>> {
        let n = self.order();
        bounds.check_order(n)?;
        let mut atoms: Vec<ElementSet> = Vec::new();
        for a in 0..n {
            let c = self.sub_brace_closure(&ElementSet::singleton(n, a));
            if !atoms.contains(&c) {
                atoms.push(c);
            }
        }
        let all = join_closure(&atoms, |s| self.sub_brace_closure(s));
        Ok(all.iter().map(|s| self.classify(s)).collect())
    }

    /// Ideals among the sub-skew braces, in canonical order.
    pub fn ideals(&self, bounds: &Bounds) -> Result<Vec<SubStructure>> {
        Ok(self
            .sub_skew_braces(bounds)?
            .into_iter()
            .filter(|s| s.is_ideal)
            .collect())
    }

    /// Tests whether at least three of: additively normal, λ-invariant,
    /// multiplicatively normal, `S ∗ B ⊆ S` hold for an additive or
    /// multiplicative subgroup `S`; then `S` is an ideal.
    pub fn three_of_four_ideal(&self, set: &ElementSet) -> Result<ThreeOfFour> {
        let c = self.conditions(set);
        if !c.additive_subgroup && !c.multiplicative_subgroup {
            return Err(Error::NotASubgroup);
        }
        let conditions = [
            c.additively_normal,
            c.lambda_invariant,
            c.multiplicatively_normal,
            c.star_absorbing,
        ];
        const TRIPLES: [[u8; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];
        let certificate = TRIPLES
            .iter()
            .find(|t| t.iter().all(|&k| conditions[k as usize - 1]))
            .copied();
        let verified_ideal = self.classify(set).is_ideal;
        debug_assert!(certificate.is_none() || verified_ideal);
        Ok(ThreeOfFour {
            conditions,
            holds: certificate.is_some(),
            certificate,
            verified_ideal,
        })
    }

    /// The smallest ideal containing `seed`.
    pub fn ideal_generated(&self, seed: &ElementSet) -> SubStructure {
        let n = self.order();
        let mut set = self.sub_brace_closure(seed);
        loop {
            let mut grown = set.clone();
            for s in set.iter() {
                for b in 0..n {
                    grown.insert(self.lambda(b, s));
                    grown.insert(self.additive().conjugate(b, s));
                    grown.insert(self.multiplicative().conjugate(b, s));
                }
            }
            let grown = self.sub_brace_closure(&grown);
            if grown == set {
                break;
            }
            set = grown;
        }
        let s = self.classify(&set);
        debug_assert!(s.is_ideal);
        s
    }

    /// An element of `set` at which one of the ideal conditions fails, or
    /// `0` when `set` does not even contain the identity.
    pub(crate) fn ideal_witness(&self, set: &ElementSet) -> Option<usize> {
        if !set.contains(0) {
            return Some(0);
        }
        let n = self.order();
        set.iter().find(|&s| {
            set.iter()
                .any(|t| !set.contains(self.sum(s, t)) || !set.contains(self.circ(s, t)))
                || (0..n).any(|b| {
                    !set.contains(self.lambda(b, s))
                        || !set.contains(self.additive().conjugate(b, s))
                        || !set.contains(self.multiplicative().conjugate(b, s))
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{almost_trivial_brace, odd_p_cyclic_brace, trivial_brace, two_power_brace};
    use crate::group::{catalog_group, cyclic};
    use std::vec;

    /// Exhaustive subset check: every subset containing 0 that is closed under
    /// both operations.
    fn brute_force_sub_braces(b: &SkewBrace) -> Vec<Vec<usize>> {
        let n = b.order();
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let s = ElementSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let closed = s
                .iter()
                .all(|x| s.iter().all(|y| s.contains(b.sum(x, y)) && s.contains(b.circ(x, y))));
            if closed {
                out.push(s.to_vec());
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn sub_braces_match_exhaustive_check() {
        let bounds = Bounds::default();
        let b4 = two_power_brace(2).unwrap();
        let lattice: Vec<Vec<usize>> = b4
            .sub_skew_braces(&bounds)
            .unwrap()
            .iter()
            .map(|s| s.elements.to_vec())
            .collect();
        assert_eq!(lattice, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(lattice, brute_force_sub_braces(&b4));

        let b8 = two_power_brace(3).unwrap();
        let lattice: Vec<Vec<usize>> = b8
            .sub_skew_braces(&bounds)
            .unwrap()
            .iter()
            .map(|s| s.elements.to_vec())
            .collect();
        assert_eq!(
            lattice,
            vec![vec![0], vec![0, 4], vec![0, 2, 4, 6], (0..8).collect::<Vec<_>>()]
        );
        assert_eq!(lattice, brute_force_sub_braces(&b8));

        let t7 = trivial_brace(&cyclic(7));
        assert_eq!(t7.sub_skew_braces(&bounds).unwrap().len(), 2);

        for i in 0..2 {
            let s3 = catalog_group(6, i).unwrap();
            for b in [trivial_brace(&s3), almost_trivial_brace(&s3)] {
                let lattice: Vec<Vec<usize>> = b
                    .sub_skew_braces(&bounds)
                    .unwrap()
                    .iter()
                    .map(|s| s.elements.to_vec())
                    .collect();
                assert_eq!(lattice, brute_force_sub_braces(&b));
            }
        }
    }

    #[test]
    fn classify_examples() {
        let b4 = two_power_brace(2).unwrap();
        assert!(b4.classify_indices(&[0, 2]).is_ideal);
        for b in [b4.clone(), odd_p_cyclic_brace(3, 2).unwrap()] {
            assert!(b.classify_indices(&[0]).is_ideal);
        }
        let s3 = catalog_group(6, 1).unwrap();
        let at = almost_trivial_brace(&s3);
        let inv = (1..6).find(|&a| s3.element_order(a) == 2).unwrap();
        let h = at.classify_indices(&[0, inv]);
        assert!(h.is_sub_brace && !h.is_ideal);
        let not_closed = b4.classify_indices(&[0, 1]);
        assert!(!not_closed.is_sub_brace && !not_closed.is_left_ideal && !not_closed.is_ideal);
    }

    #[test]
    fn three_of_four_examples() {
        let b4 = two_power_brace(2).unwrap();
        let r = b4.three_of_four_ideal(&ElementSet::from_indices(4, [0, 2])).unwrap();
        assert!(r.holds && r.verified_ideal);
        assert!(r.conditions[0] && r.conditions[1] && r.conditions[3]);
        let all = b4.three_of_four_ideal(&b4.all()).unwrap();
        assert_eq!(all.conditions, [true; 4]);

        let s3 = catalog_group(6, 1).unwrap();
        let at = almost_trivial_brace(&s3);
        let inv = (1..6).find(|&a| s3.element_order(a) == 2).unwrap();
        let r = at.three_of_four_ideal(&ElementSet::from_indices(6, [0, inv])).unwrap();
        assert!(!r.holds && !r.verified_ideal);
        assert_eq!(
            b4.three_of_four_ideal(&ElementSet::from_indices(4, [0, 1, 2])),
            Err(Error::NotASubgroup)
        );
    }

    #[test]
    fn ideal_generated_examples() {
        let b4 = two_power_brace(2).unwrap();
        assert_eq!(b4.ideal_generated(&b4.zero()).elements.to_vec(), vec![0]);
        assert!(b4.ideal_generated(&ElementSet::singleton(4, 1)).elements.is_full());
        let b8 = two_power_brace(3).unwrap();
        assert_eq!(
            b8.ideal_generated(&ElementSet::singleton(8, 2)).elements.to_vec(),
            vec![0, 2, 4, 6]
        );
    }

    #[test]
    fn lattice_bound_is_enforced() {
        let b = two_power_brace(3).unwrap();
        assert!(matches!(
            b.sub_skew_braces(&Bounds::with_max_order(4)),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
