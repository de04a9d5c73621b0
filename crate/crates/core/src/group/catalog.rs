//! Explicit constructors and the catalog of every group of order at most 15.
//!
//! Catalog indices per order list abelian groups first (cyclic first), then
//! the nonabelian ones:
//!
//! | order | classes |
//! |-------|---------|
//! | 4  | `Z4`, `Z2×Z2` |
//! | 6  | `Z6`, `S3` |
//! | 8  | `Z8`, `Z4×Z2`, `Z2×Z2×Z2`, `D8`, `Q8` |
//! | 9  | `Z9`, `Z3×Z3` |
//! | 10 | `Z10`, `D10` |
//! | 12 | `Z12`, `Z6×Z2`, `A4`, `D12`, `Dic12` |
//! | 14 | `Z14`, `D14` |
//!
//! Every other order up to 15 has only the cyclic group.

use super::{Automorphism, FiniteGroup};
use crate::error::{Error, Result};
use alloc::vec::Vec;

pub const CATALOG_MAX_ORDER: usize = 15;

pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::from_trusted(1, alloc::vec![0])
}

/// `Z_n` with `i ↔ i mod n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push((a + b) % n);
        }
    }
    FiniteGroup::from_trusted(n, table)
}

/// `G × H` with `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order(), h.order());
    let n = m * k;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(g.op(x / k, y / k) * k + h.op(x % k, y % k));
        }
    }
    FiniteGroup::from_trusted(n, table)
}

/// `(Z_p)^k`.
pub fn elementary_abelian(p: usize, k: u32) -> FiniteGroup {
    let zp = cyclic(p);
    (1..k).fold(cyclic(if k == 0 { 1 } else { p }), |acc, _| direct_product(&acc, &zp))
}

/// Dihedral group of order `2m`, as `Z_m ⋊ Z_2` with inversion.
pub fn dihedral(m: usize) -> FiniteGroup {
    let zm = cyclic(m);
    let neg = Automorphism::from_perm_unchecked((0..m).map(|x| (m - x) % m).collect());
    FiniteGroup::semidirect_product(&zm, &cyclic(2), &[Automorphism::identity(m), neg])
        .expect("inversion is an automorphism of an abelian group")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion8() -> FiniteGroup {
    // (sign, unit) with units 0 = 1, 1 = i, 2 = j, 3 = k.
    fn unit_mul(u: u8, v: u8) -> (bool, u8) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let mul = |a: &(bool, u8), b: &(bool, u8)| {
        let (s, u) = unit_mul(a.1, b.1);
        (a.0 ^ b.0 ^ s, u)
    };
    FiniteGroup::generated_by((false, 0u8), &[(false, 1), (false, 2)], mul)
}

/// Dicyclic group of order 12, `Z_3 ⋊ Z_4` with the generator inverting.
pub fn dicyclic12() -> FiniteGroup {
    let z3 = cyclic(3);
    let id = Automorphism::identity(3);
    let neg = Automorphism::from_perm_unchecked(alloc::vec![0, 2, 1]);
    FiniteGroup::semidirect_product(&z3, &cyclic(4), &[id.clone(), neg.clone(), id, neg])
        .expect("Z4 acts on Z3 through Z2")
}

/// The alternating group on four points.
pub fn alternating4() -> FiniteGroup {
    // Permutations as image arrays, composed left to right.
    let compose = |p: &[u8; 4], q: &[u8; 4]| {
        let mut r = [0u8; 4];
        for i in 0..4 {
            r[i] = q[p[i] as usize];
        }
        r
    };
    FiniteGroup::generated_by([0, 1, 2, 3], &[[1, 2, 0, 3], [1, 0, 3, 2]], compose)
}

/// Number of isomorphism classes of groups of order `order` in the catalog.
pub fn catalog_size(order: usize) -> Option<usize> {
    match order {
        4 | 6 | 9 | 10 | 14 => Some(2),
        8 | 12 => Some(5),
        1..=CATALOG_MAX_ORDER => Some(1),
        _ => None,
    }
}

pub fn catalog_name(order: usize, index: usize) -> Option<&'static str> {
    let names: &[&str] = match order {
        1 => &["1"],
        2 => &["Z2"],
        3 => &["Z3"],
        4 => &["Z4", "Z2xZ2"],
        5 => &["Z5"],
        6 => &["Z6", "S3"],
        7 => &["Z7"],
        8 => &["Z8", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8"],
        9 => &["Z9", "Z3xZ3"],
        10 => &["Z10", "D10"],
        11 => &["Z11"],
        12 => &["Z12", "Z6xZ2", "A4", "D12", "Dic12"],
        13 => &["Z13"],
        14 => &["Z14", "D14"],
        15 => &["Z15"],
        _ => &[],
    };
    names.get(index).copied()
}

/// The `index`-th isomorphism class of order `order`.
pub fn catalog_group(order: usize, index: usize) -> Result<FiniteGroup> {
    let out = || Error::OutOfCatalog { order, index };
    if index >= catalog_size(order).ok_or_else(out)? {
        return Err(out());
    }
    Ok(match (order, index) {
        (1, 0) => trivial_group(),
        (n, 0) => cyclic(n),
        (4, 1) => elementary_abelian(2, 2),
        (6, 1) => dihedral(3),
        (8, 1) => direct_product(&cyclic(4), &cyclic(2)),
        (8, 2) => elementary_abelian(2, 3),
        (8, 3) => dihedral(4),
        (8, 4) => quaternion8(),
        (9, 1) => elementary_abelian(3, 2),
        (10, 1) => dihedral(5),
        (12, 1) => direct_product(&cyclic(6), &cyclic(2)),
        (12, 2) => alternating4(),
        (12, 3) => dihedral(6),
        (12, 4) => dicyclic12(),
        (14, 1) => dihedral(7),
        _ => return Err(out()),
    })
}
