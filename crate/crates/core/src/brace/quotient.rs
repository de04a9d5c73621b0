//! Quotients by ideals, the socle and the centre.

use super::SkewBrace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::set::ElementSet;
use alloc::vec::Vec;

/// `Ker λ`, `Soc(B) = Ker λ ∩ Z(B,+)` and `Z(B) = Soc(B) ∩ Z(B,∘)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleCentre {
    pub ker_lambda: ElementSet,
    pub socle: ElementSet,
    pub centre: ElementSet,
}

impl SkewBrace {
    /// `B/I` together with the projection `B → B/I`. Cosets are numbered by
    /// their smallest element.
    pub fn quotient(&self, ideal: &ElementSet) -> Result<(SkewBrace, Vec<usize>)> {
        if let Some(witness) = self.ideal_witness(ideal) {
            return Err(Error::NotAnIdeal { witness });
        }
        let (projection, reps) = self.additive().coset_projection(ideal);
        // a ∘ I must be the additive coset a + I.
        for &a in &reps {
            let coset = projection[a];
            if let Some(x) = ideal.iter().find(|&x| projection[self.circ(a, x)] != coset) {
                return Err(Error::CosetMismatch {
                    element: self.circ(a, x),
                });
            }
        }
        let m = reps.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                add.push(projection[self.sum(a, b)]);
                mul.push(projection[self.circ(a, b)]);
            }
        }
        let q = SkewBrace::from_groups_unchecked(FiniteGroup::from_trusted(m, add), FiniteGroup::from_trusted(m, mul));
        Ok((q, projection))
    }

    pub fn ker_lambda(&self) -> ElementSet {
        let n = self.order();
        ElementSet::from_indices(n, (0..n).filter(|&a| (0..n).all(|b| self.lambda(a, b) == b)))
    }

    pub fn socle(&self) -> ElementSet {
        self.ker_lambda().intersection(&self.additive().centre())
    }

    pub fn centre(&self) -> ElementSet {
        self.socle().intersection(&self.multiplicative().centre())
    }

    pub fn socle_and_centre(&self) -> SocleCentre {
        let ker_lambda = self.ker_lambda();
        let socle = ker_lambda.intersection(&self.additive().centre());
        let centre = socle.intersection(&self.multiplicative().centre());
        SocleCentre {
            ker_lambda,
            socle,
            centre,
        }
    }

    /// The preimage under `projection` of a subset of the quotient.
    pub(crate) fn preimage(&self, projection: &[usize], image: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&a| image.contains(projection[a])),
        )
    }
}
