//! Series of ideals: central and socle series, star series, the derived
//! series, supersolubility and the Dedekind property.

use crate::bounds::Bounds;
use crate::brace::{BracePredicates, SkewBrace, SubStructure};
use crate::error::Result;
use crate::set::ElementSet;
use alloc::vec;
use alloc::vec::Vec;

/// A chain of subsets of a brace, listed in the order it was computed.
///
/// Ascending series start at `{0}` and are terminal when they reach `B`;
/// descending series start at `B` and are terminal when they reach `{0}`.
/// The computation stops as soon as a term repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub terms: Vec<ElementSet>,
    pub terminal: bool,
}

impl Series {
    /// Number of steps to the terminal term, or `None` if it is never reached.
    pub fn length(&self) -> Option<usize> {
        self.terminal.then(|| self.terms.len() - 1)
    }

    pub fn last(&self) -> &ElementSet {
        self.terms.last().expect("a series has at least one term")
    }

    fn iterate<F>(start: ElementSet, target: &ElementSet, mut step: F) -> Series
    where
        F: FnMut(&ElementSet) -> ElementSet,
    {
        let mut terms = vec![start];
        loop {
            let current = terms.last().expect("non-empty");
            if current == target {
                return Series { terms, terminal: true };
            }
            let next = step(current);
            if &next == current {
                return Series { terms, terminal: false };
            }
            terms.push(next);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A_{k+1} = B ∗ A_k`.
    Left,
    /// `A_{k+1} = A_k ∗ B`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindCheck {
    pub is_dedekind: bool,
    /// The first sub-skew brace (canonical order) that is not an ideal.
    pub witness: Option<SubStructure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolubleCheck {
    pub is_supersoluble: bool,
    /// Ideals `{0} = B_0 < B_1 < … < B_k = B` of `B` with every factor of
    /// prime order.
    pub certificate: Option<Vec<ElementSet>>,
}

impl SkewBrace {
    /// `Z_0 = {0}`, `Z_{k+1}/Z_k = Z(B/Z_k)`.
    pub fn upper_central_series(&self) -> Series {
        Series::iterate(self.zero(), &self.all(), |z| {
            let (q, proj) = self.quotient(z).expect("central series terms are ideals");
            self.preimage(&proj, &q.centre())
        })
    }

    /// `Soc_0 = {0}`, `Soc_{k+1}/Soc_k = Soc(B/Soc_k)`.
    pub fn upper_socle_series(&self) -> Series {
        Series::iterate(self.zero(), &self.all(), |s| {
            let (q, proj) = self.quotient(s).expect("socle series terms are ideals");
            self.preimage(&proj, &q.socle())
        })
    }

    pub fn central_nilpotency_class(&self) -> Option<usize> {
        self.upper_central_series().length()
    }

    pub fn multipermutation_level(&self) -> Option<usize> {
        self.upper_socle_series().length()
    }

    /// `A_1 = B` and `A_{k+1} = B ∗ A_k` (left) or `A_k ∗ B` (right).
    pub fn star_series(&self, side: Side) -> Series {
        let all = self.all();
        Series::iterate(all.clone(), &self.zero(), |a| match side {
            Side::Left => self.star_span(&all, a),
            Side::Right => self.star_span(a, &all),
        })
    }

    /// `D_0 = B` and `D_{k+1}` the ideal of `B` generated by `D_k ∗ D_k` and
    /// the additive commutators of `D_k`.
    pub fn derived_series(&self) -> Series {
        Series::iterate(self.all(), &self.zero(), |d| self.derived_step(d))
    }

    fn derived_step(&self, d: &ElementSet) -> ElementSet {
        let mut seed = self.star_span(d, d);
        for a in d.iter() {
            for b in d.iter() {
                seed.insert(self.additive().commutator(a, b));
            }
        }
        self.ideal_generated(&seed).elements
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().terminal
    }

    /// Searches for a chain of ideals of `B` with prime-order factors.
    ///
    /// If `B` has such a chain and `I` is any ideal of prime order, the
    /// images of the chain in `B/I` give one for `B/I`. So it is enough to
    /// take the lexicographically least prime-order ideal at each stage.
    pub fn supersoluble_check(&self) -> SupersolubleCheck {
        let mut chain = vec![self.zero()];
        let mut current = self.zero();
        let mut quotient = self.clone();
        let mut projection: Vec<usize> = (0..self.order()).collect();
        while quotient.order() > 1 {
            let Some(ideal) = quotient.least_prime_order_ideal() else {
                return SupersolubleCheck {
                    is_supersoluble: false,
                    certificate: None,
                };
            };
            let (next, proj) = quotient.quotient(&ideal).expect("an ideal");
            current = current.union(&self.preimage(&projection, &ideal));
            chain.push(current.clone());
            projection = projection.iter().map(|&x| proj[x]).collect();
            quotient = next;
        }
        SupersolubleCheck {
            is_supersoluble: true,
            certificate: Some(chain),
        }
    }

    pub fn is_supersoluble(&self) -> bool {
        self.supersoluble_check().is_supersoluble
    }

    fn least_prime_order_ideal(&self) -> Option<ElementSet> {
        self.prime_order_ideals().into_iter().next()
    }

    /// Every ideal of prime order, in canonical order. These are cyclic
    /// additive subgroups.
    pub fn prime_order_ideals(&self) -> Vec<ElementSet> {
        let n = self.order();
        let mut out: Vec<ElementSet> = Vec::new();
        for a in 1..n {
            if !self.additive().primes().contains(&self.additive().element_order(a)) {
                continue;
            }
            let s = self.additive().closure(&ElementSet::singleton(n, a));
            if !out.contains(&s) && self.classify(&s).is_ideal {
                out.push(s);
            }
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// Whether every sub-skew brace is an ideal.
    pub fn dedekind_check(&self, bounds: &Bounds) -> Result<DedekindCheck> {
        let witness = self.sub_skew_braces(bounds)?.into_iter().find(|s| !s.is_ideal);
        Ok(DedekindCheck {
            is_dedekind: witness.is_none(),
            witness,
        })
    }

    pub fn is_dedekind(&self, bounds: &Bounds) -> Result<bool> {
        Ok(self.dedekind_check(bounds)?.is_dedekind)
    }

    pub fn analyze(&self, bounds: &Bounds) -> Result<AnalysisReport> {
        let subs = self.sub_skew_braces(bounds)?;
        let ideal_count = subs.iter().filter(|s| s.is_ideal).count();
        let dedekind_witness = subs.iter().find(|s| !s.is_ideal).map(|s| s.elements.to_vec());
        let sc = self.socle_and_centre();
        let central = self.upper_central_series();
        let socle = self.upper_socle_series();
        let left = self.star_series(Side::Left);
        let right = self.star_series(Side::Right);
        let derived = self.derived_series();
        let supersoluble = self.supersoluble_check();
        let terms = |s: &Series| s.terms.iter().map(ElementSet::to_vec).collect();
        Ok(AnalysisReport {
            order: self.order(),
            predicates: self.predicates().into(),
            ker_lambda: sc.ker_lambda.to_vec(),
            socle: sc.socle.to_vec(),
            centre: sc.centre.to_vec(),
            central_series: terms(&central),
            central_class: central.length(),
            socle_series: terms(&socle),
            multipermutation_level: socle.length(),
            left_star_series: terms(&left),
            left_nilpotent: left.terminal,
            right_star_series: terms(&right),
            right_nilpotent: right.terminal,
            derived_series: terms(&derived),
            soluble: derived.terminal,
            supersoluble: supersoluble.is_supersoluble,
            supersoluble_chain: supersoluble
                .certificate
                .map(|c| c.iter().map(ElementSet::to_vec).collect()),
            dedekind: dedekind_witness.is_none(),
            dedekind_witness,
            sub_brace_count: subs.len(),
            ideal_count,
        })
    }
}

/// Structural predicates in report form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PredicateReport {
    pub trivial: bool,
    pub almost_trivial: bool,
    pub bi_skew: bool,
    pub abelian_type: bool,
}

impl From<BracePredicates> for PredicateReport {
    fn from(p: BracePredicates) -> Self {
        PredicateReport {
            trivial: p.is_trivial,
            almost_trivial: p.is_almost_trivial,
            bi_skew: p.is_bi_skew,
            abelian_type: p.is_abelian_type,
        }
    }
}

/// Everything [`SkewBrace::analyze`] computes, with sets as sorted index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnalysisReport {
    pub order: usize,
    pub predicates: PredicateReport,
    pub ker_lambda: Vec<usize>,
    pub socle: Vec<usize>,
    pub centre: Vec<usize>,
    pub central_series: Vec<Vec<usize>>,
    pub central_class: Option<usize>,
    pub socle_series: Vec<Vec<usize>>,
    pub multipermutation_level: Option<usize>,
    pub left_star_series: Vec<Vec<usize>>,
    pub left_nilpotent: bool,
    pub right_star_series: Vec<Vec<usize>>,
    pub right_nilpotent: bool,
    pub derived_series: Vec<Vec<usize>>,
    pub soluble: bool,
    pub supersoluble: bool,
    pub supersoluble_chain: Option<Vec<Vec<usize>>>,
    pub dedekind: bool,
    pub dedekind_witness: Option<Vec<usize>>,
    pub sub_brace_count: usize,
    pub ideal_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{odd_p_cyclic_brace, odd_p_nonabelian_brace, trivial_brace, two_power_brace};
    use crate::group::{alternating4, catalog_group, cyclic, trivial_group};
    use std::vec;

    fn as_vecs(s: &Series) -> Vec<Vec<usize>> {
        s.terms.iter().map(ElementSet::to_vec).collect()
    }

    /// Iterated centre from the definition, without quotient tables: `x`
    /// lies in `Z_{k+1}` iff `x ∘ y`, `x + y`, `y ∘ x` and `y + x` share one
    /// additive coset of `Z_k` for every `y`.
    fn central_class_oracle(b: &SkewBrace) -> Option<usize> {
        let n = b.order();
        let mut z: Vec<bool> = (0..n).map(|x| x == 0).collect();
        for step in 0..=n {
            if z.iter().all(|&v| v) {
                return Some(step);
            }
            // Same coset of Z_k additively: -a + c ∈ Z_k.
            let same = |a: usize, c: usize, z: &[bool]| z[b.sum(b.neg(a), c)];
            let next: Vec<bool> = (0..n)
                .map(|x| {
                    (0..n).all(|y| {
                        same(b.circ(x, y), b.sum(x, y), &z)
                            && same(b.circ(x, y), b.circ(y, x), &z)
                            && same(b.sum(x, y), b.sum(y, x), &z)
                    })
                })
                .collect();
            if next == z {
                return None;
            }
            z = next;
        }
        None
    }

    #[test]
    fn b8_central_and_socle_series() {
        let b8 = two_power_brace(3).unwrap();
        let central = b8.upper_central_series();
        assert_eq!(
            as_vecs(&central),
            vec![vec![0], vec![0, 4], vec![0, 2, 4, 6], (0..8).collect::<Vec<_>>()]
        );
        assert_eq!(central.length(), Some(3));
        assert_eq!(central_class_oracle(&b8), Some(3));
        let socle = b8.upper_socle_series();
        assert_eq!(socle.length(), Some(2));
        assert!(socle.terms[2].is_full());
    }

    #[test]
    fn b9_series() {
        let b9 = odd_p_cyclic_brace(3, 2).unwrap();
        assert_eq!(
            as_vecs(&b9.upper_central_series()),
            vec![vec![0], vec![0, 3, 6], (0..9).collect::<Vec<_>>()]
        );
        assert_eq!(b9.multipermutation_level(), Some(2));
        for side in [Side::Left, Side::Right] {
            assert_eq!(
                as_vecs(&b9.star_series(side)),
                vec![(0..9).collect::<Vec<_>>(), vec![0, 3, 6], vec![0]]
            );
        }
        assert!(b9.is_soluble());
    }

    #[test]
    fn central_class_matches_oracle() {
        let mut braces = vec![
            two_power_brace(2).unwrap(),
            two_power_brace(4).unwrap(),
            odd_p_cyclic_brace(3, 3).unwrap(),
            odd_p_cyclic_brace(5, 2).unwrap(),
            odd_p_nonabelian_brace(3, 2).unwrap(),
            trivial_brace(&alternating4()),
            trivial_brace(&trivial_group()),
        ];
        for i in 0..5 {
            let g = catalog_group(8, i).unwrap();
            braces.push(trivial_brace(&g));
            braces.push(crate::constructions::almost_trivial_brace(&g));
        }
        for b in &braces {
            assert_eq!(b.central_nilpotency_class(), central_class_oracle(b));
        }
    }

    #[test]
    fn trivial_braces() {
        let t = trivial_brace(&cyclic(5));
        assert_eq!(t.central_nilpotency_class(), Some(1));
        assert_eq!(t.multipermutation_level(), Some(1));
        assert_eq!(t.star_series(Side::Left).length(), Some(1));
        assert_eq!(t.star_series(Side::Right).length(), Some(1));
        assert_eq!(t.derived_series().length(), Some(1));
        let one = trivial_brace(&trivial_group());
        assert_eq!(one.central_nilpotency_class(), Some(0));
        assert_eq!(one.multipermutation_level(), Some(0));
        assert_eq!(one.derived_series().length(), Some(0));

        let s3 = trivial_brace(&catalog_group(6, 1).unwrap());
        let d = s3.derived_series();
        assert_eq!(d.terms[1].len(), 3);
        assert!(d.terminal);
        assert_eq!(s3.central_nilpotency_class(), None);
    }

    #[test]
    fn supersolubility() {
        let b8 = two_power_brace(3).unwrap();
        let check = b8.supersoluble_check();
        let chain = check.certificate.unwrap();
        assert_eq!(chain[1].to_vec(), vec![0, 4]);
        assert_eq!(chain.last().unwrap().len(), 8);
        for w in chain.windows(2) {
            assert!(w[0].is_subset(&w[1]));
            assert!(crate::group::is_prime((w[1].len() / w[0].len()) as u64));
            assert!(b8.classify(&w[1]).is_ideal);
        }
        assert!(!trivial_brace(&alternating4()).is_supersoluble());
        assert!(trivial_brace(&alternating4()).prime_order_ideals().is_empty());
        for i in 0..2 {
            let g = catalog_group(6, i).unwrap();
            assert!(trivial_brace(&g).is_supersoluble());
            assert!(crate::constructions::almost_trivial_brace(&g).is_supersoluble());
        }
    }

    #[test]
    fn dedekind() {
        let bounds = Bounds::default();
        assert!(two_power_brace(3).unwrap().is_dedekind(&bounds).unwrap());
        assert!(trivial_brace(&cyclic(12)).is_dedekind(&bounds).unwrap());
        let s3 = trivial_brace(&catalog_group(6, 1).unwrap());
        let check = s3.dedekind_check(&bounds).unwrap();
        assert!(!check.is_dedekind);
        assert_eq!(check.witness.unwrap().len(), 2);
    }

    #[test]
    fn analysis_reports() {
        let bounds = Bounds::default();
        let r = odd_p_cyclic_brace(3, 2).unwrap().analyze(&bounds).unwrap();
        assert_eq!(r.central_class, Some(2));
        assert_eq!(r.multipermutation_level, Some(2));
        assert!(r.dedekind && r.predicates.bi_skew);
        let r = two_power_brace(2).unwrap().analyze(&bounds).unwrap();
        assert_eq!(
            (r.central_class, r.multipermutation_level, r.dedekind),
            (Some(2), Some(2), true)
        );
        let r = trivial_brace(&trivial_group()).analyze(&bounds).unwrap();
        assert_eq!(r.central_class, Some(0));
        assert_eq!(r.sub_brace_count, 1);
        assert!(r.dedekind && r.soluble && r.supersoluble && r.predicates.trivial);
    }

    #[test]
    fn central_terms_lie_in_socle_terms() {
        for b in [
            two_power_brace(3).unwrap(),
            odd_p_nonabelian_brace(3, 2).unwrap(),
            trivial_brace(&catalog_group(12, 4).unwrap()),
        ] {
            let z = b.upper_central_series();
            let s = b.upper_socle_series();
            for (k, zk) in z.terms.iter().enumerate() {
                let sk = s.terms.get(k).unwrap_or(s.last());
                assert!(zk.is_subset(sk));
            }
        }
    }
}
