//! Finite skew braces.
//!
//! A [`SkewBrace`] holds two validated group tables on `0..n` sharing the
//! identity `0`, together with the cached table `λ_a(b) = -a + a ∘ b`.

mod quotient;
mod substructure;

pub use quotient::SocleCentre;
pub use substructure::{SubStructure, SubsetConditions, ThreeOfFour};

use crate::bounds::Bounds;
use crate::error::{Error, Operation, Result};
use crate::group::{find_identity, Automorphism, FiniteGroup};
use crate::set::ElementSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    lambda: Vec<usize>,
    lambda_inv: Vec<usize>,
}

/// Structural predicates of a brace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracePredicates {
    pub is_trivial: bool,
    pub is_almost_trivial: bool,
    pub is_bi_skew: bool,
    pub is_abelian_type: bool,
}

impl SkewBrace {
    /// Validates a pair of tables as a skew brace.
    pub fn from_tables(add_rows: &[Vec<usize>], mul_rows: &[Vec<usize>]) -> Result<Self> {
        if add_rows.len() != mul_rows.len() {
            return Err(Error::OrderMismatch {
                add: add_rows.len(),
                mul: mul_rows.len(),
            });
        }
        if let (Some(a), Some(m)) = (find_identity(add_rows), find_identity(mul_rows)) {
            if a != m {
                return Err(Error::IdentityMismatch { add: a, mul: Some(m) });
            }
        }
        let add = FiniteGroup::from_rows(add_rows).map_err(|e| in_operation(e, Operation::Add))?;
        let mul = FiniteGroup::from_rows(mul_rows).map_err(|e| in_operation(e, Operation::Mul))?;
        Self::from_groups(add, mul)
    }

    /// Checks skew left distributivity and the `λ` identities for two groups
    /// on the same index set.
    pub fn from_groups(add: FiniteGroup, mul: FiniteGroup) -> Result<Self> {
        let n = add.order();
        if mul.order() != n {
            return Err(Error::OrderMismatch {
                add: n,
                mul: mul.order(),
            });
        }
        for a in 0..n {
            let na = add.inverse(a);
            for b in 0..n {
                let ab = mul.op(a, b);
                for c in 0..n {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(ab, na), mul.op(a, c));
                    if lhs != rhs {
                        return Err(Error::DistributivityFailure { a, b, c });
                    }
                }
            }
        }
        let brace = Self::from_groups_unchecked(add, mul);
        brace.check_lambda_identities()?;
        Ok(brace)
    }

    pub(crate) fn from_groups_unchecked(add: FiniteGroup, mul: FiniteGroup) -> Self {
        let n = add.order();
        let mut lambda = vec![0; n * n];
        let mut lambda_inv = vec![0; n * n];
        for a in 0..n {
            let na = add.inverse(a);
            for b in 0..n {
                let v = add.op(na, mul.op(a, b));
                lambda[a * n + b] = v;
                lambda_inv[a * n + v] = b;
            }
        }
        SkewBrace {
            add,
            mul,
            lambda,
            lambda_inv,
        }
    }

    fn check_lambda_identities(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            let mut hit = vec![false; n];
            for b in 0..n {
                let v = self.lambda(a, b);
                if hit[v] {
                    return Err(Error::LambdaFailure(format!("λ_{a} is not a bijection")));
                }
                hit[v] = true;
            }
            for b in 0..n {
                for c in 0..n {
                    if self.lambda(a, self.sum(b, c)) != self.sum(self.lambda(a, b), self.lambda(a, c)) {
                        return Err(Error::LambdaFailure(format!("λ_{a} is not additive at ({b},{c})")));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.circ(a, b);
                for c in 0..n {
                    if self.lambda(ab, c) != self.lambda(a, self.lambda(b, c)) {
                        return Err(Error::LambdaFailure(format!(
                            "λ_(a∘b) ≠ λ_a λ_b at a={a}, b={b}, c={c}"
                        )));
                    }
                }
                if self.sum(a, b) != self.circ(a, self.lambda_inv(a, b)) {
                    return Err(Error::LambdaFailure(format!("a+b ≠ a∘λ_a⁻¹(b) at ({a},{b})")));
                }
                if self.circ(a, b) != self.sum(a, self.lambda(a, b)) {
                    return Err(Error::LambdaFailure(format!("a∘b ≠ a+λ_a(b) at ({a},{b})")));
                }
            }
            if self.neg(a) != self.lambda(a, self.circ_inv(a)) {
                return Err(Error::LambdaFailure(format!("-a ≠ λ_a(a⁻¹) at {a}")));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &FiniteGroup {
        &self.mul
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inverse(a)
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.mul.inverse(a)
    }

    /// `λ_a(b) = -a + a ∘ b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order() + b]
    }

    /// `λ_a⁻¹(b)`.
    #[inline]
    pub fn lambda_inv(&self, a: usize, b: usize) -> usize {
        self.lambda_inv[a * self.order() + b]
    }

    pub fn lambda_map(&self, a: usize) -> Automorphism {
        let n = self.order();
        Automorphism::from_perm_unchecked(self.lambda[a * n..(a + 1) * n].to_vec())
    }

    /// `a ∗ b = λ_a(b) - b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sum(self.lambda(a, b), self.neg(b))
    }

    /// `m b` in the additive group.
    pub fn multiple(&self, b: usize, m: i64) -> usize {
        self.add.power(b, m)
    }

    /// `b^m` in the multiplicative group.
    pub fn power(&self, b: usize, m: i64) -> usize {
        self.mul.power(b, m)
    }

    /// `X ∗ Y = ⟨x ∗ y : x ∈ X, y ∈ Y⟩₊`.
    pub fn star_span(&self, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
        let n = self.order();
        let mut gens = ElementSet::empty(n);
        for x in xs.iter() {
            for y in ys.iter() {
                gens.insert(self.star(x, y));
            }
        }
        self.add.closure(&gens)
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn zero(&self) -> ElementSet {
        ElementSet::singleton(self.order(), 0)
    }

    /// `+` and `∘` coincide.
    pub fn is_trivial(&self) -> bool {
        self.add.flat_table() == self.mul.flat_table()
    }

    /// `a ∘ b = b + a` for all `a, b`.
    pub fn is_almost_trivial(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.circ(a, b) == self.sum(b, a)))
    }

    pub fn is_abelian_type(&self) -> bool {
        self.add.is_abelian()
    }

    /// Whether swapping the roles of the operations gives a skew brace:
    /// `a + (b ∘ c) = (a + b) ∘ a⁻¹ ∘ (a + c)`.
    pub fn is_bi_skew(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            let ai = self.circ_inv(a);
            (0..n).all(|b| {
                let left = self.circ(self.sum(a, b), ai);
                (0..n).all(|c| self.sum(a, self.circ(b, c)) == self.circ(left, self.sum(a, c)))
            })
        })
    }

    pub fn predicates(&self) -> BracePredicates {
        BracePredicates {
            is_trivial: self.is_trivial(),
            is_almost_trivial: self.is_almost_trivial(),
            is_bi_skew: self.is_bi_skew(),
            is_abelian_type: self.is_abelian_type(),
        }
    }

    /// The opposite brace `(B, +ᵒᵖ, ∘)`.
    pub fn opposite(&self) -> SkewBrace {
        Self::from_groups(self.add.opposite(), self.mul.clone()).expect("the opposite of a skew brace is a skew brace")
    }

    pub fn opposite_and_predicates(&self) -> (SkewBrace, BracePredicates) {
        (self.opposite(), self.predicates())
    }

    /// The brace transported along `perm` (old index to new index, fixing 0).
    pub fn relabel(&self, perm: &[usize]) -> SkewBrace {
        Self::from_groups_unchecked(self.add.relabel(perm), self.mul.relabel(perm))
    }

    /// `G = (B,+) ⋊_λ (B,∘)` with `(a,b)·(c,d) = (a + λ_b(c), b ∘ d)`; the pair
    /// `(a, b)` has index `b·n + a`. The commutator identity
    /// `[(0,a),(b,0)] = (a ∗ b, 0)` is checked for all `a, b`.
    pub fn lambda_semidirect(&self, bounds: &Bounds) -> Result<FiniteGroup> {
        let n = self.order();
        bounds.check_group_order(n * n)?;
        let action: Vec<Automorphism> = (0..n).map(|a| self.lambda_map(a)).collect();
        let g = FiniteGroup::semidirect_product(&self.add, &self.mul, &action)?;
        for a in 0..n {
            for b in 0..n {
                if g.commutator(a * n, b) != self.star(a, b) {
                    return Err(Error::LambdaFailure(format!("[(0,{a}),({b},0)] ≠ ({a}∗{b}, 0)")));
                }
            }
        }
        Ok(g)
    }

    /// Flat `λ` table, row `a` holding `λ_a`.
    pub fn lambda_table(&self) -> &[usize] {
        &self.lambda
    }
}

fn in_operation(e: Error, operation: Operation) -> Error {
    match e {
        Error::NotAGroup(violation) => Error::NotAGroupIn { operation, violation },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{odd_p_cyclic_brace, trivial_brace, two_power_brace};
    use crate::group::{catalog_group, cyclic, elementary_abelian};
    use std::vec;

    fn z4_rows() -> Vec<Vec<usize>> {
        cyclic(4).rows()
    }

    #[test]
    fn trivial_brace_from_equal_tables() {
        let b = SkewBrace::from_tables(&z4_rows(), &z4_rows()).unwrap();
        assert!(b.is_trivial());
        for a in 0..4 {
            for c in 0..4 {
                assert_eq!(b.star(a, c), 0);
            }
        }
    }

    #[test]
    fn b8_from_formula_tables() {
        let add = cyclic(8).rows();
        let mul: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| if a % 2 == 0 { (a + b) % 8 } else { (a + 8 - b) % 8 })
                    .collect()
            })
            .collect();
        let b = SkewBrace::from_tables(&add, &mul).unwrap();
        assert_eq!(b.star(1, 1), 6);
    }

    #[test]
    fn identity_mismatch_is_reported() {
        // Z2×Z2 with its identity moved to index 1.
        let v4 = elementary_abelian(2, 2);
        let swap = [1usize, 0, 2, 3];
        let mul: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| swap[v4.op(swap[a], swap[b])]).collect())
            .collect();
        let err = SkewBrace::from_tables(&z4_rows(), &mul).unwrap_err();
        assert_eq!(err, Error::IdentityMismatch { add: 0, mul: Some(1) });
    }

    #[test]
    fn distributivity_failure_is_reported() {
        // Z4 with a second copy of Z4 in which 1 and 2 trade places.
        let mul = cyclic(4).relabel(&[0, 2, 1, 3]).rows();
        let err = SkewBrace::from_tables(&z4_rows(), &mul).unwrap_err();
        assert!(matches!(err, Error::DistributivityFailure { .. }));
    }

    #[test]
    fn non_group_table_names_the_operation() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        let err = SkewBrace::from_tables(&cyclic(2).rows(), &bad).unwrap_err();
        assert!(matches!(
            err,
            Error::NotAGroupIn {
                operation: Operation::Mul,
                ..
            }
        ));
    }

    #[test]
    fn star_examples() {
        let b9 = odd_p_cyclic_brace(3, 2).unwrap();
        assert_eq!(b9.star(1, 1), 3);
        let b8 = two_power_brace(3).unwrap();
        assert_eq!(b8.star(1, 1), 6);
        let all9 = b9.all();
        assert_eq!(b9.star_span(&all9, &all9).to_vec(), vec![0, 3, 6]);
        let all8 = b8.all();
        assert_eq!(b8.star_span(&all8, &all8).to_vec(), vec![0, 2, 4, 6]);
        let t = trivial_brace(&cyclic(5));
        assert_eq!(t.star_span(&t.all(), &t.all()).to_vec(), vec![0]);
    }

    #[test]
    fn star_identities_hold() {
        let braces = [
            two_power_brace(3).unwrap(),
            odd_p_cyclic_brace(3, 2).unwrap(),
            crate::constructions::almost_trivial_brace(&catalog_group(6, 1).unwrap()),
        ];
        for b in &braces {
            let n = b.order();
            for a in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        // a ∗ (x + y) = a ∗ x + x + a ∗ y - x
                        let lhs = b.star(a, b.sum(x, y));
                        let rhs = b.sum(b.sum(b.sum(b.star(a, x), x), b.star(a, y)), b.neg(x));
                        assert_eq!(lhs, rhs);
                        // (a ∘ x) ∗ y = a ∗ (x ∗ y) + x ∗ y + a ∗ y
                        let lhs = b.star(b.circ(a, x), y);
                        let rhs = b.sum(b.sum(b.star(a, b.star(x, y)), b.star(x, y)), b.star(a, y));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn predicates_and_opposite() {
        let t = trivial_brace(&cyclic(6));
        assert_eq!(t.opposite(), t);
        assert!(two_power_brace(3).unwrap().is_bi_skew());
        let b4 = two_power_brace(2).unwrap();
        let p = b4.predicates();
        assert!(p.is_abelian_type && !p.is_trivial && !p.is_almost_trivial);
        let s3 = catalog_group(6, 1).unwrap();
        let at = crate::constructions::almost_trivial_brace(&s3);
        assert!(at.is_almost_trivial() && !at.is_trivial());
        assert!(at.opposite().is_trivial());
    }

    #[test]
    fn semidirect_commutator_identity() {
        let b = Bounds::default();
        let g = trivial_brace(&cyclic(3)).lambda_semidirect(&b).unwrap();
        assert!(g.is_abelian() && g.order() == 9);
        let g = two_power_brace(2).unwrap().lambda_semidirect(&b).unwrap();
        assert_eq!(g.order(), 16);
        let g = odd_p_cyclic_brace(3, 2).unwrap().lambda_semidirect(&b).unwrap();
        assert_eq!(g.order(), 81);
        let small = Bounds {
            max_group_order: 50,
            ..Bounds::default()
        };
        assert!(matches!(
            odd_p_cyclic_brace(3, 2).unwrap().lambda_semidirect(&small),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn powers_and_multiples() {
        let b9 = odd_p_cyclic_brace(3, 2).unwrap();
        assert_eq!(b9.power(1, 2), 5);
        assert_eq!(b9.circ(b9.power(1, -1), 1), 0);
        assert_eq!(b9.multiple(2, -1), 7);
    }
}
