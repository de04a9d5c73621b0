//! Finite set-theoretic solutions of the Yang–Baxter equation.
//!
//! A solution on `{0, …, n-1}` is stored as two families of permutations,
//! `r(x, y) = (λ_x(y), ρ_y(x))`.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSolution {
    size: usize,
    /// `lambda[x·n + y] = λ_x(y)`.
    lambda: Vec<usize>,
    /// `rho[y·n + x] = ρ_y(x)`.
    rho: Vec<usize>,
}

impl SetSolution {
    /// Validates shape, non-degeneracy and the braid relation.
    ///
    /// `lambda[x][y] = λ_x(y)` and `rho[y][x] = ρ_y(x)`.
    pub fn new(lambda: &[Vec<usize>], rho: &[Vec<usize>]) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::MalformedSolution("empty solution".into()));
        }
        if rho.len() != n {
            return Err(Error::MalformedSolution(format!("{n} λ maps but {} ρ maps", rho.len())));
        }
        for (name, rows) in [("lambda", lambda), ("rho", rho)] {
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::MalformedSolution(format!(
                        "{name} row {i} has length {}, expected {n}",
                        row.len()
                    )));
                }
                if let Some(&v) = row.iter().find(|&&v| v >= n) {
                    return Err(Error::MalformedSolution(format!(
                        "{name} row {i} has entry {v} outside 0..{n}"
                    )));
                }
            }
        }
        let s = SetSolution {
            size: n,
            lambda: lambda.concat(),
            rho: rho.concat(),
        };
        s.check_non_degenerate()?;
        s.check_braid()?;
        Ok(s)
    }

    fn check_non_degenerate(&self) -> Result<()> {
        let n = self.size;
        for (side, table) in [("lambda", &self.lambda), ("rho", &self.rho)] {
            for x in 0..n {
                let mut hit = vec![false; n];
                for &v in &table[x * n..(x + 1) * n] {
                    if core::mem::replace(&mut hit[v], true) {
                        return Err(Error::Degenerate { side, x });
                    }
                }
            }
        }
        Ok(())
    }

    /// `r₁₂ r₂₃ r₁₂ = r₂₃ r₁₂ r₂₃` on every triple.
    fn check_braid(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = self.apply(x, y);
                for z in 0..n {
                    // r₁₂ r₂₃ r₁₂
                    let (b2, c2) = self.apply(b1, z);
                    let (a3, b3) = self.apply(a1, b2);
                    let left = (a3, b3, c2);
                    // r₂₃ r₁₂ r₂₃
                    let (y1, z1) = self.apply(y, z);
                    let (x2, y2) = self.apply(x, y1);
                    let (y3, z3) = self.apply(y2, z1);
                    if left != (x2, y3, z3) {
                        return Err(Error::BraidFailure { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// `r(x, y) = (y, x)`.
    pub fn twist(n: usize) -> Self {
        assert!(n >= 1);
        let id: Vec<usize> = (0..n).cycle().take(n * n).collect();
        SetSolution {
            size: n,
            lambda: id.clone(),
            rho: id,
        }
    }

    /// `r_B(a, b) = (λ_a(b), λ_a(b)⁻¹ ∘ a ∘ b)`.
    pub fn from_brace(brace: &SkewBrace) -> Self {
        let n = brace.order();
        let mut rho = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let l = brace.lambda(a, b);
                rho[b * n + a] = brace.circ(brace.circ_inv(l), brace.circ(a, b));
            }
        }
        let s = SetSolution {
            size: n,
            lambda: brace.lambda_table().to_vec(),
            rho,
        };
        debug_assert!(s.check_non_degenerate().is_ok() && s.check_braid().is_ok());
        s
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.lambda[x * self.size + y]
    }

    #[inline]
    pub fn rho(&self, y: usize, x: usize) -> usize {
        self.rho[y * self.size + x]
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lambda(x, y), self.rho(y, x))
    }

    pub fn lambda_rows(&self) -> Vec<Vec<usize>> {
        self.lambda.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn rho_rows(&self) -> Vec<Vec<usize>> {
        self.rho.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// `r² = id`.
    pub fn is_involutive(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = self.apply(x, y);
                self.apply(u, v) == (x, y)
            })
        })
    }

    /// `r(x, x) = (x, x)` for every `x`.
    pub fn is_diagonal_fixing(&self) -> bool {
        (0..self.size).all(|x| self.apply(x, x) == (x, x))
    }

    /// The retraction by `x ∼ y ⇔ (λ_x, ρ_x) = (λ_y, ρ_y)`, with the class of
    /// each point. Classes are numbered in order of their least element.
    pub fn retract(&self) -> Result<(SetSolution, Vec<usize>)> {
        let n = self.size;
        let row = |t: &[usize], x: usize| t[x * n..(x + 1) * n].to_vec();
        let mut class = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if class[x] != usize::MAX {
                continue;
            }
            class[x] = reps.len();
            let (lx, rx) = (row(&self.lambda, x), row(&self.rho, x));
            for (y, c) in class.iter_mut().enumerate().skip(x + 1) {
                if *c == usize::MAX && row(&self.lambda, y) == lx && row(&self.rho, y) == rx {
                    *c = reps.len();
                }
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut lambda = vec![vec![0; m]; m];
        let mut rho = vec![vec![0; m]; m];
        for x in 0..n {
            for y in 0..n {
                let (cx, cy) = (class[x], class[y]);
                let (l, r) = (class[self.lambda(x, y)], class[self.rho(y, x)]);
                if x == reps[cx] && y == reps[cy] {
                    lambda[cx][cy] = l;
                    rho[cy][cx] = r;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (cx, cy) = (class[x], class[y]);
                if lambda[cx][cy] != class[self.lambda(x, y)] || rho[cy][cx] != class[self.rho(y, x)] {
                    return Err(Error::IllDefinedRetraction { x, y });
                }
            }
        }
        Ok((SetSolution::new(&lambda, &rho)?, class))
    }

    /// Sizes of `Ret^k(X, r)` for `k = 0, 1, …` until size 1, a repeat, or
    /// `max_steps` retractions.
    pub fn retraction_sizes(&self, max_steps: usize) -> Result<Vec<usize>> {
        let mut sizes = vec![self.size];
        let mut current = self.clone();
        for _ in 0..max_steps {
            if current.size == 1 {
                break;
            }
            let (next, _) = current.retract()?;
            let stable = next.size == current.size;
            sizes.push(next.size);
            if stable {
                break;
            }
            current = next;
        }
        Ok(sizes)
    }

    /// Least `m` with `|Ret^m(X, r)| = 1`, looking at most `max_steps`
    /// retractions ahead (default `n`).
    pub fn multipermutation_level(&self, max_steps: Option<usize>) -> Result<Option<usize>> {
        let sizes = self.retraction_sizes(max_steps.unwrap_or(self.size))?;
        Ok((sizes.last() == Some(&1)).then(|| sizes.len() - 1))
    }
}
