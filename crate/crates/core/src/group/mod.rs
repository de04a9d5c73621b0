//! Finite groups given by Cayley tables on `0..n`, identity at index `0`.

mod catalog;
mod iso;

pub use catalog::{
    alternating4, catalog_group, catalog_name, catalog_size, cyclic, dicyclic12, dihedral, direct_product,
    elementary_abelian, quaternion8, trivial_group, CATALOG_MAX_ORDER,
};
pub use iso::{automorphisms, find_isomorphism, for_each_isomorphism};

use crate::bounds::Bounds;
use crate::error::{Error, GroupViolation, Result};
use crate::set::ElementSet;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// A finite group on the indices `0..order` with identity `0`.
///
/// Derived data (inverses, element orders, the prime set `π(G)`) is computed
/// once at construction. Values are immutable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    primes: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table given as rows.
    ///
    /// Checks, in order: shape, entry range, identity at `0`, that every row
    /// and column is a permutation, associativity and inverses. The error
    /// names the first violation found.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup(GroupViolation::Empty));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(GroupViolation::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                }));
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table)
    }

    /// Validates a row-major flattened table of size `order²`.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        validate_table(order, &table).map_err(Error::NotAGroup)?;
        Ok(Self::from_trusted(order, table))
    }

    /// Builds a group from a table already known to be a group table.
    pub(crate) fn from_trusted(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }
        let element_orders: Vec<usize> = (0..order)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = table[x * order + a];
                    k += 1;
                }
                k
            })
            .collect();
        let mut primes: Vec<usize> = element_orders
            .iter()
            .filter(|&&k| k > 1 && is_prime(k as u64))
            .copied()
            .collect();
        primes.sort_unstable();
        primes.dedup();
        FiniteGroup {
            order,
            table,
            inverse,
            element_orders,
            primes,
        }
    }

    /// Generates the group from `generators` inside an ambient operation,
    /// listing `identity` first. Used for groups that are most naturally
    /// described by matrices or permutations.
    pub fn generated_by<T, F>(identity: T, generators: &[T], op: F) -> Self
    where
        T: Clone + Ord,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index = BTreeMap::new();
        index.insert(identity, 0usize);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let y = op(&elements[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&op(a, b)]);
            }
        }
        Self::from_trusted(n, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    /// The sorted set of primes dividing the group order.
    pub fn primes(&self) -> &[usize] {
        &self.primes
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains(&self.order)
    }

    /// `a^m` for any integer `m`, by repeated multiplication.
    pub fn power(&self, a: usize, m: i64) -> usize {
        let base = if m < 0 { self.inverse(a) } else { a };
        let mut x = 0;
        for _ in 0..m.unsigned_abs() {
            x = self.op(x, base);
        }
        x
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inverse(g))
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.op(self.op(self.op(x, y), self.inverse(x)), self.inverse(y))
    }

    pub fn centre(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a))),
        )
    }

    /// The smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = seed.iter().filter(|&g| g != 0).collect();
        let mut set = ElementSet::singleton(self.order, 0);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.op(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn subgroup_closure(&self, seed: &[usize]) -> Subgroup {
        let seed = ElementSet::from_indices(self.order, seed.iter().copied());
        Subgroup::from_set(&self.closure(&seed))
    }

    /// Whether `set` contains `0` and is closed under the operation (hence a
    /// subgroup, the group being finite).
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(0) && set.iter().all(|a| set.iter().all(|b| set.contains(self.op(a, b))))
    }

    /// A pair `(g, x)` with `x ∈ set` and `g⁻¹ x g ∉ set`, if any.
    pub fn normality_witness(&self, set: &ElementSet) -> Option<(usize, usize)> {
        for g in 0..self.order {
            let gi = self.inverse(g);
            for x in set.iter() {
                if !set.contains(self.op(self.op(gi, x), g)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    /// Normal subset: `g⁻¹ X g ⊆ X` for all `g`.
    pub fn is_normal_subset(&self, set: &ElementSet) -> bool {
        self.normality_witness(set).is_none()
    }

    /// Quotient by a normal subgroup, with the projection onto coset indices.
    ///
    /// Cosets are numbered by their smallest element, so the coset of `0` is
    /// index `0`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let set = normal.to_set(self.order);
        if !self.is_subgroup(&set) {
            return Err(Error::NotASubgroup);
        }
        if let Some((g, x)) = self.normality_witness(&set) {
            return Err(Error::NotNormal { g, x });
        }
        let (projection, reps) = self.coset_projection(&set);
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(projection[self.op(a, b)]);
            }
        }
        Ok((FiniteGroup::from_trusted(m, table), projection))
    }

    /// Left cosets `aN` numbered by smallest element; returns the projection
    /// and the representative (smallest element) of each coset.
    pub(crate) fn coset_projection(&self, set: &ElementSet) -> (Vec<usize>, Vec<usize>) {
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if projection[a] == usize::MAX {
                let idx = reps.len();
                reps.push(a);
                for x in set.iter() {
                    projection[self.op(a, x)] = idx;
                }
            }
        }
        (projection, reps)
    }

    /// Every subgroup, generated as joins of cyclic subgroups, in canonical
    /// order (size, then members).
    pub fn subgroups(&self, bounds: &Bounds) -> Result<Vec<Subgroup>> {
        bounds.check_order(self.order)?;
        let mut cyclic: Vec<ElementSet> = Vec::new();
        for a in 0..self.order {
            let c = self.closure(&ElementSet::singleton(self.order, a));
            if !cyclic.contains(&c) {
                cyclic.push(c);
            }
        }
        let all = join_closure(&cyclic, |s| self.closure(s));
        Ok(all.iter().map(Subgroup::from_set).collect())
    }

    /// The group with the reversed operation `a ·op b = b · a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(b, a);
            }
        }
        FiniteGroup::from_trusted(n, table)
    }

    /// The same group transported along the bijection `perm` (old index to
    /// new index). `perm[0]` must be `0`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        FiniteGroup::from_trusted(n, table)
    }

    /// A small generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by(|&a, &b| self.element_orders[b].cmp(&self.element_orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = ElementSet::singleton(self.order, 0);
        for g in candidates {
            if span.is_full() {
                break;
            }
            if !span.contains(g) {
                gens.push(g);
                span = self.closure(&ElementSet::from_indices(self.order, gens.iter().copied()));
            }
        }
        gens
    }

    /// Semidirect product `N ⋊ H` with `(a, b)·(c, d) = (a · φ_b(c), b d)`.
    ///
    /// The pair `(a, b)` has index `b·|N| + a`. The action is checked to be a
    /// homomorphism `H → Aut(N)`.
    pub fn semidirect_product(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        action: &[Automorphism],
    ) -> Result<FiniteGroup> {
        let (n, h) = (normal.order, acting.order);
        if action.len() != h {
            return Err(Error::NotAnAction(format!(
                "expected {h} automorphisms, got {}",
                action.len()
            )));
        }
        for (b, phi) in action.iter().enumerate() {
            if !phi.is_automorphism_of(normal) {
                return Err(Error::NotAnAction(format!("image of {b} is not an automorphism")));
            }
        }
        for b in 0..h {
            for d in 0..h {
                let composed = action[b].compose(&action[d]);
                if composed != action[acting.op(b, d)] {
                    return Err(Error::NotAnAction(format!("not a homomorphism at ({b},{d})")));
                }
            }
        }
        let order = n * h;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, b) = (x % n, x / n);
            for y in 0..order {
                let (c, d) = (y % n, y / n);
                let first = normal.op(a, action[b].apply(c));
                let second = acting.op(b, d);
                table.push(second * n + first);
            }
        }
        Ok(FiniteGroup::from_trusted(order, table))
    }
}

/// Closes a family of sets under pairwise joins, where a join is the closure
/// of the union. Every member of the result is a join of atoms, and joining
/// with atoms only is enough to reach all of them.
pub(crate) fn join_closure<F>(atoms: &[ElementSet], close: F) -> Vec<ElementSet>
where
    F: Fn(&ElementSet) -> ElementSet,
{
    use alloc::collections::BTreeSet;
    let mut seen: BTreeSet<ElementSet> = atoms.iter().cloned().collect();
    let mut frontier: Vec<ElementSet> = seen.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for atom in atoms {
            if atom.is_subset(&s) {
                continue;
            }
            let j = close(&s.union(atom));
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut all: Vec<ElementSet> = seen.into_iter().collect();
    all.sort_by(|a, b| a.canonical_cmp(b));
    all
}

fn validate_table(n: usize, table: &[usize]) -> core::result::Result<(), GroupViolation> {
    if n == 0 {
        return Err(GroupViolation::Empty);
    }
    if table.len() != n * n {
        return Err(GroupViolation::NotSquare {
            row: table.len() / n,
            len: table.len() % n,
            expected: n,
        });
    }
    for (k, &v) in table.iter().enumerate() {
        if v >= n {
            return Err(GroupViolation::EntryOutOfRange {
                row: k / n,
                column: k % n,
                value: v,
            });
        }
    }
    let at = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        if at(0, a) != a || at(a, 0) != a {
            return Err(GroupViolation::Identity { element: a });
        }
    }
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let v = at(a, b);
            if seen[v] == a {
                return Err(GroupViolation::RowNotPermutation { row: a });
            }
            seen[v] = a;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for b in 0..n {
        for a in 0..n {
            let v = at(a, b);
            if seen[v] == b {
                return Err(GroupViolation::ColumnNotPermutation { column: b });
            }
            seen[v] = b;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(GroupViolation::Associativity { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        let has_inverse = (0..n).any(|b| at(a, b) == 0 && at(b, a) == 0);
        if !has_inverse {
            return Err(GroupViolation::Inverse { element: a });
        }
    }
    Ok(())
}

/// Two-sided identity of a square table, if any (used to report identity
/// mismatches between the two tables of a brace).
pub(crate) fn find_identity(rows: &[Vec<usize>]) -> Option<usize> {
    let n = rows.len();
    (0..n).find(|&e| (0..n).all(|a| rows[e].get(a) == Some(&a) && rows.get(a).and_then(|r| r.get(e)) == Some(&a)))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A subgroup as its sorted element list (always containing `0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn from_set(set: &ElementSet) -> Self {
        Subgroup { elements: set.to_vec() }
    }

    /// Validates that `elements` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let set = ElementSet::from_indices(group.order(), elements.iter().copied());
        if !group.is_subgroup(&set) {
            return Err(Error::NotASubgroup);
        }
        Ok(Self::from_set(&set))
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn to_set(&self, universe: usize) -> ElementSet {
        ElementSet::from_indices(universe, self.elements.iter().copied())
    }
}

/// A bijection of `0..n` fixing `0`, used as an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { perm: (0..n).collect() }
    }

    /// Wraps a permutation, checking it is an automorphism of `group`.
    pub fn new(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        let a = Automorphism { perm };
        if a.perm.len() != group.order() || !a.is_automorphism_of(group) {
            return Err(Error::NotAnAction(format!("{:?} is not an automorphism", a.perm)));
        }
        Ok(a)
    }

    pub(crate) fn from_perm_unchecked(perm: Vec<usize>) -> Self {
        Automorphism { perm }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y] = x;
        }
        Automorphism { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_automorphism_of(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        if self.perm.len() != n || self.perm[0] != 0 {
            return false;
        }
        let mut hit = vec![false; n];
        for &x in &self.perm {
            if x >= n || hit[x] {
                return false;
            }
            hit[x] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.perm[group.op(i, j)] == group.op(self.perm[i], self.perm[j])))
    }
}
