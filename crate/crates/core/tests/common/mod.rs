//! Independent reference computations shared by the integration tests.
//!
//! Everything here works straight from the defining formulas on raw tables,
//! without the library's quotient, lattice or retraction machinery.

#![allow(dead_code)]

use skewbrace::group::{catalog_group, catalog_size};
use skewbrace::SkewBrace;
use std::collections::BTreeSet;

/// Every permutation of `0..n` fixing 0.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for y in 1..used.len() {
            if !used[y] {
                used[y] = true;
                prefix.push(y);
                rec(prefix, used, out);
                prefix.pop();
                used[y] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut out = Vec::new();
    rec(&mut vec![0], &mut used, &mut out);
    out
}

fn relabel_table(table: &[usize], n: usize, perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[table[a * n + b]];
        }
    }
    out
}

/// Isomorphism classes of skew braces of order `n`: every pair of labeled
/// group tables with identity 0 is tested for skew distributivity, and pairs
/// differing by a relabeling are merged.
pub fn brute_force_class_count(n: usize) -> usize {
    let perms = permutations_fixing_zero(n);
    let mut labeled: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..catalog_size(n).unwrap() {
        let g = catalog_group(n, i).unwrap();
        for p in &perms {
            labeled.insert(relabel_table(g.flat_table(), n, p));
        }
    }
    let tables: Vec<Vec<usize>> = labeled.into_iter().collect();
    let inverse = |t: &[usize], a: usize| (0..n).find(|&b| t[a * n + b] == 0).unwrap();
    let mut classes: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for add in &tables {
        for mul in &tables {
            let distributive = (0..n).all(|a| {
                let na = inverse(add, a);
                (0..n).all(|b| {
                    let ab = mul[a * n + b];
                    (0..n).all(|c| {
                        let lhs = mul[a * n + add[b * n + c]];
                        let rhs = add[add[ab * n + na] * n + mul[a * n + c]];
                        lhs == rhs
                    })
                })
            });
            if distributive {
                let key = perms
                    .iter()
                    .map(|p| (relabel_table(add, n, p), relabel_table(mul, n, p)))
                    .min()
                    .unwrap();
                classes.insert(key);
            }
        }
    }
    classes.len()
}

/// Central nilpotency class from the definition: `x` lies in `Z_{k+1}` iff
/// `x ∘ y`, `x + y`, `y ∘ x` and `y + x` share one additive coset of `Z_k`
/// for every `y`.
pub fn central_class_oracle(b: &SkewBrace) -> Option<usize> {
    let n = b.order();
    let mut z: Vec<bool> = (0..n).map(|x| x == 0).collect();
    for step in 0..=n {
        if z.iter().all(|&v| v) {
            return Some(step);
        }
        let same = |u: usize, v: usize, z: &[bool]| z[b.sum(b.neg(u), v)];
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

/// Sizes of the iterated retractions of `r(x, y) = (λ_x(y), ρ_y(x))`, given
/// as raw tables `lambda[x][y]` and `rho[y][x]`, until one point remains or
/// the size stops shrinking.
pub fn retraction_sizes_oracle(lambda: &[Vec<usize>], rho: &[Vec<usize>]) -> Vec<usize> {
    let mut lambda = lambda.to_vec();
    let mut rho = rho.to_vec();
    let mut sizes = vec![lambda.len()];
    loop {
        let n = lambda.len();
        if n == 1 {
            return sizes;
        }
        let keys: Vec<(Vec<usize>, Vec<usize>)> = (0..n).map(|x| (lambda[x].clone(), rho[x].clone())).collect();
        let distinct: Vec<&(Vec<usize>, Vec<usize>)> = {
            let mut d: Vec<_> = Vec::new();
            for k in &keys {
                if !d.contains(&k) {
                    d.push(k);
                }
            }
            d
        };
        let m = distinct.len();
        if m == n {
            return sizes;
        }
        let class: Vec<usize> = keys
            .iter()
            .map(|k| distinct.iter().position(|d| *d == k).unwrap())
            .collect();
        let rep: Vec<usize> = (0..m).map(|c| class.iter().position(|&k| k == c).unwrap()).collect();
        let new_lambda: Vec<Vec<usize>> = (0..m)
            .map(|cx| (0..m).map(|cy| class[lambda[rep[cx]][rep[cy]]]).collect())
            .collect();
        let new_rho: Vec<Vec<usize>> = (0..m)
            .map(|cy| (0..m).map(|cx| class[rho[rep[cy]][rep[cx]]]).collect())
            .collect();
        lambda = new_lambda;
        rho = new_rho;
        sizes.push(m);
    }
}

/// `r_B` as raw tables: `λ_a(b) = -a + a ∘ b`, `ρ_b(a) = λ_a(b)⁻¹ ∘ a ∘ b`.
pub fn brace_solution_tables(b: &SkewBrace) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = b.order();
    let lambda: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|c| b.sum(b.neg(a), b.circ(a, c))).collect())
        .collect();
    let mut rho = vec![vec![0; n]; n];
    for a in 0..n {
        for c in 0..n {
            let l = lambda[a][c];
            let l_inv = (0..n).find(|&t| b.circ(l, t) == 0).unwrap();
            rho[c][a] = b.circ(l_inv, b.circ(a, c));
        }
    }
    (lambda, rho)
}

/// Elements generating a group given by an operation, by direct orbit count.
pub fn generator_set(n: usize, op: impl Fn(usize, usize) -> usize) -> BTreeSet<usize> {
    (0..n)
        .filter(|&g| {
            let mut x = g;
            let mut count = 1;
            while x != 0 {
                x = op(x, g);
                count += 1;
            }
            count == n || (n == 1)
        })
        .collect()
}

/// Subsets of `0..n` containing 0, as bit masks.
fn masks_with_zero(n: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 24, "subset oracle is limited to small orders");
    (0..1u64 << (n - 1)).map(|m| (m << 1) | 1)
}

fn has(mask: u64, x: usize) -> bool {
    mask >> x & 1 == 1
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&x| has(mask, x)).collect()
}

fn closed_under(mask: u64, n: usize, op: impl Fn(usize, usize) -> usize) -> bool {
    let m = members(mask, n);
    m.iter().all(|&a| m.iter().all(|&c| has(mask, op(a, c))))
}

/// Sub-skew braces: subsets closed under `+` and `∘` (finite, so subgroups).
pub fn sub_braces_oracle(b: &SkewBrace) -> Vec<u64> {
    let n = b.order();
    masks_with_zero(n)
        .filter(|&m| closed_under(m, n, |x, y| b.sum(x, y)) && closed_under(m, n, |x, y| b.circ(x, y)))
        .collect()
}

/// Whether a sub-skew brace given by `mask` is an ideal: additively normal,
/// `λ`-invariant and multiplicatively normal.
pub fn is_ideal_oracle(b: &SkewBrace, mask: u64) -> bool {
    let n = b.order();
    members(mask, n).iter().all(|&s| {
        (0..n).all(|a| {
            has(mask, b.sum(b.sum(a, s), b.neg(a)))
                && has(mask, b.lambda(a, s))
                && has(mask, b.circ(b.circ(a, s), b.circ_inv(a)))
        })
    })
}

pub fn ideals_oracle(b: &SkewBrace) -> Vec<u64> {
    sub_braces_oracle(b)
        .into_iter()
        .filter(|&m| is_ideal_oracle(b, m))
        .collect()
}

pub fn is_dedekind_oracle(b: &SkewBrace) -> bool {
    sub_braces_oracle(b).into_iter().all(|m| is_ideal_oracle(b, m))
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
}

/// A chain of ideals `0 = I_0 ⊂ ⋯ ⊂ I_k = B` with prime indices exists.
pub fn is_supersoluble_oracle(b: &SkewBrace) -> bool {
    let ideals = ideals_oracle(b);
    let full = (1u64 << b.order()) - 1;
    let mut stack = vec![1u64];
    let mut seen = BTreeSet::new();
    while let Some(i) = stack.pop() {
        if i == full {
            return true;
        }
        for &j in &ideals {
            if j & i == i
                && j != i
                && j.count_ones() % i.count_ones() == 0
                && is_prime(j.count_ones() / i.count_ones())
                && seen.insert(j)
            {
                stack.push(j);
            }
        }
    }
    false
}

/// The four conditions of the three-of-four ideal test on a subset:
/// additively normal, `λ`-invariant, multiplicatively normal, and the
/// additive span of `S ∗ B` lies in `S`.
pub fn four_conditions_oracle(b: &SkewBrace, mask: u64) -> [bool; 4] {
    let n = b.order();
    let s = members(mask, n);
    let add_normal = s
        .iter()
        .all(|&x| (0..n).all(|a| has(mask, b.sum(b.sum(a, x), b.neg(a)))));
    let lambda_inv = s.iter().all(|&x| (0..n).all(|a| has(mask, b.lambda(a, x))));
    let mul_normal = s
        .iter()
        .all(|&x| (0..n).all(|a| has(mask, b.circ(b.circ(a, x), b.circ_inv(a)))));
    let mut span = 1u64;
    for &x in &s {
        for a in 0..n {
            span |= 1 << b.star(x, a);
        }
    }
    loop {
        let mut grown = span;
        for u in members(span, n) {
            for v in members(span, n) {
                grown |= 1 << b.sum(u, v);
            }
        }
        if grown == span {
            break;
        }
        span = grown;
    }
    [add_normal, lambda_inv, mul_normal, span & mask == span]
}

/// `r² = id` on raw tables.
pub fn is_involutive_oracle(lambda: &[Vec<usize>], rho: &[Vec<usize>]) -> bool {
    let n = lambda.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = (lambda[x][y], rho[y][x]);
            (lambda[u][v], rho[v][u]) == (x, y)
        })
    })
}

/// Masks of an `ElementSet`-like membership test.
pub fn mask_of(n: usize, contains: impl Fn(usize) -> bool) -> u64 {
    (0..n).filter(|&x| contains(x)).fold(0, |m, x| m | 1 << x)
}
