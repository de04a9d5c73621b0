//! Isomorphism and automorphism search by backtracking on generator images.

use super::{Automorphism, FiniteGroup};
use crate::bounds::Bounds;
use crate::error::Result;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

const UNSET: usize = usize::MAX;

/// Calls `visit` with every isomorphism `g → h` (as an image array), until
/// `visit` breaks. Each map is checked against the full tables before it is
/// passed on.
pub fn for_each_isomorphism<F>(g: &FiniteGroup, h: &FiniteGroup, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if g.order() != h.order() {
        return;
    }
    let mut g_orders = g.element_orders().to_vec();
    let mut h_orders = h.element_orders().to_vec();
    g_orders.sort_unstable();
    h_orders.sort_unstable();
    if g_orders != h_orders {
        return;
    }
    let gens = g.generators();
    if gens.is_empty() {
        let _ = visit(&[0]);
        return;
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..h.order())
                .filter(|&y| h.element_order(y) == g.element_order(x))
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let _ = search(g, h, &gens, &candidates, &mut images, &mut visit);
}

fn search<F>(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let depth = images.len();
    for &y in &candidates[depth] {
        images.push(y);
        if let Some(map) = extend(g, h, &gens[..=depth], images) {
            if depth + 1 == gens.len() {
                if map.iter().all(|&v| v != UNSET) && is_homomorphism(g, h, &map) {
                    visit(&map)?;
                }
            } else {
                search(g, h, gens, candidates, images, visit)?;
            }
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// Extends generator images to the subgroup they generate; `None` when the
/// extension is inconsistent or not injective.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.op(x, s);
            let image = h.op(map[x], t);
            if map[y] == UNSET {
                if used[image] {
                    return None;
                }
                used[image] = true;
                map[y] = image;
                queue.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    Some(map)
}

fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.op(a, b)] == h.op(map[a], map[b])))
}

pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(g, h, |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// The full automorphism group of `g`, identity first.
pub fn automorphisms(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<Automorphism>> {
    bounds.check_order(g.order())?;
    let mut out = Vec::new();
    for_each_isomorphism(g, g, |map| {
        out.push(Automorphism::from_perm_unchecked(map.to_vec()));
        ControlFlow::Continue(())
    });
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating4, catalog_group, cyclic, elementary_abelian, quaternion8};
    use alloc::collections::BTreeSet;

    /// Brute force over all bijections fixing 0.
    fn brute_force_aut_count(g: &FiniteGroup) -> usize {
        fn rec(g: &FiniteGroup, perm: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            let n = g.order();
            if perm.len() == n {
                if is_homomorphism(g, g, perm) {
                    *count += 1;
                }
                return;
            }
            for y in 1..n {
                if !used[y] {
                    used[y] = true;
                    perm.push(y);
                    rec(g, perm, used, count);
                    perm.pop();
                    used[y] = false;
                }
            }
        }
        let mut perm = vec![0];
        let mut used = vec![false; g.order()];
        used[0] = true;
        let mut count = 0;
        rec(g, &mut perm, &mut used, &mut count);
        count
    }

    #[test]
    fn automorphism_counts_match_brute_force() {
        let b = Bounds::default();
        let s3 = catalog_group(6, 1).unwrap();
        assert_eq!(brute_force_aut_count(&s3), 6);
        assert_eq!(automorphisms(&s3, &b).unwrap().len(), 6);
        assert_eq!(automorphisms(&cyclic(2), &b).unwrap().len(), 1);
        assert_eq!(brute_force_aut_count(&cyclic(8)), 4);
        assert_eq!(automorphisms(&cyclic(8), &b).unwrap().len(), 4);
        let v4 = elementary_abelian(2, 2);
        assert_eq!(brute_force_aut_count(&v4), 6);
        assert_eq!(automorphisms(&v4, &b).unwrap().len(), 6);
        for i in 0..5 {
            let g = catalog_group(8, i).unwrap();
            assert_eq!(
                automorphisms(&g, &b).unwrap().len(),
                brute_force_aut_count(&g),
                "order 8 index {i}"
            );
        }
        assert_eq!(automorphisms(&quaternion8(), &b).unwrap().len(), 24);
        assert_eq!(automorphisms(&alternating4(), &b).unwrap().len(), 24);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let b = Bounds::default();
        for (n, i) in [(8, 2), (8, 3), (12, 2), (9, 1)] {
            let g = catalog_group(n, i).unwrap();
            let auts = automorphisms(&g, &b).unwrap();
            let set: BTreeSet<_> = auts.iter().cloned().collect();
            assert!(set.contains(&Automorphism::identity(n)));
            for a in &auts {
                assert!(a.is_automorphism_of(&g));
                assert!(set.contains(&a.inverse()));
                for c in &auts {
                    assert!(set.contains(&a.compose(c)));
                }
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let b = Bounds::with_max_order(4);
        assert!(automorphisms(&cyclic(5), &b).is_err());
    }

    #[test]
    fn relabeled_group_is_isomorphic() {
        let g = catalog_group(12, 4).unwrap();
        let perm: Vec<usize> = core::iter::once(0).chain((1..12).rev()).collect();
        let h = g.relabel(&perm);
        let iso = find_isomorphism(&g, &h).unwrap();
        assert!(is_homomorphism(&g, &h, &iso));
        assert!(find_isomorphism(&g, &catalog_group(12, 3).unwrap()).is_none());
    }
}
