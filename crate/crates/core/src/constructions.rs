//! Explicit families of finite skew braces.
//!
//! * [`two_power_brace`]: `a ∘ b = a + (-1)^a b` on `Z_{2^n}`.
//! * [`odd_p_cyclic_brace`]: `a ∘ b = a + b + p·a·b` on `Z_{p^n}`, whose
//!   multiplicative group is cyclic, generated by `1`.
//! * [`odd_p_nonabelian_brace`]: a brace of order `p^{n+1}` whose additive
//!   and multiplicative groups are isomorphic and nonabelian.
//! * [`trivial_brace`] and [`almost_trivial_brace`] over any group.
//!
//! Each builder validates the full brace axioms and the family-specific
//! identities before returning.

use crate::bounds::Bounds;
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{cyclic, find_isomorphism, is_prime, Automorphism, FiniteGroup};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Named families accepted by [`FamilyParams::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Family {
    TwoPower,
    OddPCyclic,
    OddPNonabelian,
    Trivial,
    AlmostTrivial,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::TwoPower => "two_power",
            Family::OddPCyclic => "odd_p_cyclic",
            Family::OddPNonabelian => "odd_p_nonabelian",
            Family::Trivial => "trivial",
            Family::AlmostTrivial => "almost_trivial",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        [
            Family::TwoPower,
            Family::OddPCyclic,
            Family::OddPNonabelian,
            Family::Trivial,
            Family::AlmostTrivial,
        ]
        .into_iter()
        .find(|f| f.tag() == tag)
    }
}

/// Parameters of a family member. `p` and `n` are ignored by the trivial
/// and almost trivial families, which need `group` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub p: u64,
    pub n: u32,
    pub group: Option<FiniteGroup>,
}

/// A constructed brace with human-readable element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constructed {
    pub brace: SkewBrace,
    pub labels: Option<Vec<String>>,
}

impl FamilyParams {
    pub fn build(&self, bounds: &Bounds) -> Result<Constructed> {
        let group = || {
            self.group
                .as_ref()
                .ok_or_else(|| Error::BadParams(format!("family {} needs a base group", self.family.tag())))
        };
        Ok(match self.family {
            Family::TwoPower => {
                if self.p != 2 {
                    return Err(Error::BadParams(format!("two_power needs p = 2, got {}", self.p)));
                }
                Constructed {
                    brace: two_power_brace_bounded(self.n, bounds)?,
                    labels: None,
                }
            }
            Family::OddPCyclic => Constructed {
                brace: odd_p_cyclic_brace_bounded(self.p, self.n, bounds)?,
                labels: None,
            },
            Family::OddPNonabelian => Constructed {
                brace: odd_p_nonabelian_brace_bounded(self.p, self.n, bounds)?,
                labels: Some(nonabelian_labels(self.p as usize, self.n)),
            },
            Family::Trivial => Constructed {
                brace: trivial_brace(group()?),
                labels: None,
            },
            Family::AlmostTrivial => Constructed {
                brace: almost_trivial_brace(group()?),
                labels: None,
            },
        })
    }
}

fn prime_power(p: u64, n: u32, bounds: &Bounds) -> Result<usize> {
    let order = p
        .checked_pow(n)
        .and_then(|q| usize::try_from(q).ok())
        .ok_or(Error::BoundExceeded {
            order: usize::MAX,
            bound: bounds.max_order,
        })?;
    bounds.check_order(order)?;
    Ok(order)
}

fn odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::BadParams(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

/// `a ∘ b = a + (-1)^a b` on `Z_{2^n}`, `n ≥ 2`.
pub fn two_power_brace(n: u32) -> Result<SkewBrace> {
    two_power_brace_bounded(n, &Bounds::default())
}

pub fn two_power_brace_bounded(n: u32, bounds: &Bounds) -> Result<SkewBrace> {
    if n < 2 {
        return Err(Error::BadParams(format!("two_power needs n ≥ 2, got {n}")));
    }
    let m = prime_power(2, n, bounds)?;
    let mut mul = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            mul.push(if a % 2 == 0 { (a + b) % m } else { (a + m - b) % m });
        }
    }
    SkewBrace::from_groups(cyclic(m), FiniteGroup::from_flat(m, mul)?)
}

/// `a ∘ b = a + b + p·a·b` on `Z_{p^n}`, `p` odd.
pub fn odd_p_cyclic_brace(p: u64, n: u32) -> Result<SkewBrace> {
    odd_p_cyclic_brace_bounded(p, n, &Bounds::default())
}

pub fn odd_p_cyclic_brace_bounded(p: u64, n: u32, bounds: &Bounds) -> Result<SkewBrace> {
    odd_prime(p)?;
    if n < 1 {
        return Err(Error::BadParams(String::from("odd_p_cyclic needs n ≥ 1")));
    }
    let m = prime_power(p, n, bounds)?;
    let p = p as usize;
    let mut mul = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            mul.push((a + b + p * a % m * b) % m);
        }
    }
    let brace = SkewBrace::from_groups(cyclic(m), FiniteGroup::from_flat(m, mul)?)?;
    // The ∘-powers of 1 are the partial sums 1 + (1+p) + … + (1+p)^{ℓ-1}.
    let (mut power, mut sum, mut term) = (0usize, 0usize, 1usize);
    for l in 0..m {
        if power != sum {
            return Err(Error::ConstructionCheck(format!("1^{l} = {power}, expected {sum}")));
        }
        power = brace.circ(power, 1);
        sum = (sum + term) % m;
        term = term * (1 + p) % m;
    }
    if !brace.multiplicative().is_cyclic() || brace.multiplicative().element_order(1) != m {
        return Err(Error::ConstructionCheck(String::from(
            "the multiplicative group is not generated by 1",
        )));
    }
    Ok(brace)
}

/// Order `p^{n+1}` brace on `(B,+) = ⟨x⟩ ⋊ ⟨y⟩ ≅ Z_{p^n} ⋊ Z_p` with
/// `-y + x + y = (1 + p^{n-1}) x`, `λ_x = id` and `λ_y` conjugation by `x`.
///
/// Element `ix + jy` has index `j·p^n + i`.
pub fn odd_p_nonabelian_brace(p: u64, n: u32) -> Result<SkewBrace> {
    odd_p_nonabelian_brace_bounded(p, n, &Bounds::default())
}

pub fn odd_p_nonabelian_brace_bounded(p: u64, n: u32, bounds: &Bounds) -> Result<SkewBrace> {
    odd_prime(p)?;
    if n < 2 {
        return Err(Error::BadParams(format!("odd_p_nonabelian needs n ≥ 2, got {n}")));
    }
    let order = prime_power(p, n + 1, bounds)?;
    let pn = order / p as usize;
    let p = p as usize;
    let q = pn / p; // p^{n-1}

    // y acts on ⟨x⟩ by multiplication with (1 + p^{n-1})⁻¹ = 1 - p^{n-1}, so
    // that -y + x + y = (1 + p^{n-1}) x.
    let unit = pn - q + 1;
    let mut action = Vec::with_capacity(p);
    let mut factor = 1usize;
    for _ in 0..p {
        action.push(Automorphism::from_perm_unchecked(
            (0..pn).map(|i| i * factor % pn).collect(),
        ));
        factor = factor * unit % pn;
    }
    let add = FiniteGroup::semidirect_product(&cyclic(pn), &cyclic(p), &action)?;
    let x = 1;
    let y = pn;
    let nx = add.inverse(x);
    if add.op(add.op(add.inverse(y), x), y) != add.power(x, (1 + q) as i64) {
        return Err(Error::ConstructionCheck(String::from("-y + x + y ≠ (1 + p^{n-1}) x")));
    }

    // λ_{ix + jy} = ι(x)^j with ι(x)(z) = -x + z + x.
    let iota: Vec<usize> = (0..order).map(|z| add.op(add.op(nx, z), x)).collect();
    let mut iota_powers = Vec::with_capacity(p);
    let mut current: Vec<usize> = (0..order).collect();
    for _ in 0..p {
        iota_powers.push(current.clone());
        current = current.iter().map(|&z| iota[z]).collect();
    }
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for &image in &iota_powers[a / pn] {
            mul.push(add.op(a, image));
        }
    }
    let mul = FiniteGroup::from_flat(order, mul)?;
    let brace = SkewBrace::from_groups(add, mul)?;

    // y^k = ky - C(k,2) p^{n-1} x for 0 ≤ k < p.
    for k in 0..p {
        let expected = brace.sum(
            brace.multiple(y, k as i64),
            brace.multiple(x, -((k * k.saturating_sub(1) / 2 * q) as i64)),
        );
        if brace.power(y, k as i64) != expected {
            return Err(Error::ConstructionCheck(format!("y^{k} ≠ {k}y - C({k},2)p^{{n-1}}x")));
        }
    }
    if brace.additive().is_abelian() || find_isomorphism(brace.additive(), brace.multiplicative()).is_none() {
        return Err(Error::ConstructionCheck(String::from(
            "additive and multiplicative groups are not isomorphic nonabelian groups",
        )));
    }
    if brace.central_nilpotency_class() != Some(2) {
        return Err(Error::ConstructionCheck(String::from(
            "central nilpotency class is not 2",
        )));
    }
    Ok(brace)
}

/// Labels `ix+jy` for the elements of [`odd_p_nonabelian_brace`].
pub fn nonabelian_labels(p: usize, n: u32) -> Vec<String> {
    let pn = p.pow(n);
    (0..pn * p).map(|k| format!("{}x+{}y", k % pn, k / pn)).collect()
}

/// `(G, ·, ·)`.
pub fn trivial_brace(group: &FiniteGroup) -> SkewBrace {
    SkewBrace::from_groups(group.clone(), group.clone()).expect("a group is a trivial brace")
}

/// `(G, ·, ·ᵒᵖ)`.
pub fn almost_trivial_brace(group: &FiniteGroup) -> SkewBrace {
    SkewBrace::from_groups(group.clone(), group.opposite()).expect("a group with its opposite is a brace")
}
