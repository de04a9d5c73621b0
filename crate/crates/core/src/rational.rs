//! Skew braces on localized subgroups `Z_P` of `(Q, +)`, in exact arithmetic.
//!
//! The domain is the set of rationals whose reduced denominators avoid a
//! finite set `S` of forbidden primes. Four families are implemented:
//!
//! | variant | `+` | `∘` | `Ker λ` |
//! |---------|-----|-----|---------|
//! | `A2a` | rational addition | `x ∘ y = x + (-1)^{φ(x)} y` | `2X` |
//! | `A2b` | rational addition | `x ∘ y = x + y - xy + (m1/m2) xy` | `{0}` |
//! | `C1`  | `u + v = u + (-1)^{φ(u)} v` | rational addition | `2X` |
//! | `C2`  | opposite of `C1` | rational addition | `{0}` |
//!
//! Here `φ(x)` is the parity of the reduced numerator of `x`; the domain has
//! odd denominators whenever `2 ∈ S`, so `φ` is the projection `X → X/2X`.

use crate::error::{Error, Result};
use crate::group::is_prime;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    A2a,
    A2b,
    C1,
    C2,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::A2a => "a2a",
            Variant::A2b => "a2b",
            Variant::C1 => "c1",
            Variant::C2 => "c2",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Variant> {
        [Variant::A2a, Variant::A2b, Variant::C1, Variant::C2]
            .into_iter()
            .find(|v| v.tag().eq_ignore_ascii_case(tag))
    }
}

/// `Z_P`: rationals whose reduced denominator has no prime factor in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalizedDomain {
    forbidden: Vec<u64>,
}

impl LocalizedDomain {
    pub fn new(forbidden: &[u64]) -> Result<Self> {
        if let Some(&p) = forbidden.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidSpec(format!("{p} is not a prime")));
        }
        let mut forbidden = forbidden.to_vec();
        forbidden.sort_unstable();
        forbidden.dedup();
        Ok(LocalizedDomain { forbidden })
    }

    pub fn forbidden(&self) -> &[u64] {
        &self.forbidden
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        let d = q.denom();
        self.forbidden.iter().all(|&p| !(d % BigInt::from(p)).is_zero())
    }

    fn allows(&self, p: u64) -> bool {
        self.forbidden.binary_search(&p).is_err()
    }
}

/// A validated member of one of the four families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBrace {
    variant: Variant,
    domain: LocalizedDomain,
    /// `m1/m2` for `A2b`.
    ratio: Option<(i64, i64)>,
    /// The distinguished element for `C1`/`C2`.
    x: Option<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn odd_numerator(a: &BigRational) -> bool {
    a.numer().is_odd()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl RationalBrace {
    pub fn a2a(forbidden: &[u64]) -> Result<Self> {
        let domain = LocalizedDomain::new(forbidden)?;
        Self::require_two(&domain)?;
        Ok(RationalBrace {
            variant: Variant::A2a,
            domain,
            ratio: None,
            x: None,
        })
    }

    /// `x ∘ y = x + y - xy + (m1/m2) xy`.
    pub fn a2b(forbidden: &[u64], m1: i64, m2: i64) -> Result<Self> {
        let domain = LocalizedDomain::new(forbidden)?;
        if m2 <= 0 {
            return Err(Error::InvalidSpec(format!("m2 = {m2} must be positive")));
        }
        if m1.gcd(&m2) != 1 {
            return Err(Error::InvalidSpec(format!("m1 = {m1} and m2 = {m2} are not coprime")));
        }
        let diff = m2 - m1;
        if diff.abs() <= 1 {
            return Err(Error::InvalidSpec(format!("m2 - m1 = {diff} must not be 0 or ±1")));
        }
        if domain.forbidden.is_empty() {
            return Err(Error::InvalidSpec(String::from(
                "the forbidden set must be nonempty, so that the domain is not (m2 - m1)-divisible",
            )));
        }
        let primes = prime_factors(diff.unsigned_abs());
        if let Some(p) = domain.forbidden.iter().find(|p| !primes.contains(p)) {
            return Err(Error::InvalidSpec(format!(
                "forbidden prime {p} does not divide m2 - m1 = {diff}"
            )));
        }
        let ratio = BigRational::new(BigInt::from(m1), BigInt::from(m2));
        if !domain.contains(&ratio) {
            return Err(Error::InvalidSpec(format!("m1/m2 = {ratio} is not in the domain")));
        }
        Ok(RationalBrace {
            variant: Variant::A2b,
            domain,
            ratio: Some((m1, m2)),
            x: None,
        })
    }

    pub fn c1(forbidden: &[u64], x: BigRational) -> Result<Self> {
        Self::c_family(Variant::C1, forbidden, x)
    }

    pub fn c2(forbidden: &[u64], x: BigRational) -> Result<Self> {
        Self::c_family(Variant::C2, forbidden, x)
    }

    fn c_family(variant: Variant, forbidden: &[u64], x: BigRational) -> Result<Self> {
        let domain = LocalizedDomain::new(forbidden)?;
        Self::require_two(&domain)?;
        if !domain.contains(&x) {
            return Err(Error::InvalidSpec(format!("x = {x} is not in the domain")));
        }
        if !odd_numerator(&x) {
            return Err(Error::InvalidSpec(format!("x = {x} is a square in (X, ∘)")));
        }
        Ok(RationalBrace {
            variant,
            domain,
            ratio: None,
            x: Some(x),
        })
    }

    fn require_two(domain: &LocalizedDomain) -> Result<()> {
        if domain.allows(2) {
            return Err(Error::InvalidSpec(String::from(
                "2 must be forbidden, so that the domain is not 2-divisible",
            )));
        }
        Ok(())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn domain(&self) -> &LocalizedDomain {
        &self.domain
    }

    pub fn contains(&self, a: &BigRational) -> bool {
        self.domain.contains(a)
    }

    /// The distinguished element of the `C` families.
    pub fn x(&self) -> Option<&BigRational> {
        self.x.as_ref()
    }

    /// `(m1 - m2)/m2`, so that `x ∘ y = x + y + c·xy` in `A2b`.
    fn a2b_c(&self) -> BigRational {
        let (m1, m2) = self.ratio.expect("A2b carries m1/m2");
        BigRational::new(BigInt::from(m1 - m2), BigInt::from(m2))
    }

    fn check(&self, a: &BigRational) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::DomainViolation(format!("{a}")))
        }
    }

    fn checked(&self, a: BigRational) -> Result<BigRational> {
        self.check(&a)?;
        Ok(a)
    }

    /// `u + (-1)^{φ(u)} v`.
    fn signed_sum(u: &BigRational, v: &BigRational) -> BigRational {
        if odd_numerator(u) {
            u - v
        } else {
            u + v
        }
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        self.check(a)?;
        self.check(b)?;
        self.checked(match self.variant {
            Variant::A2a | Variant::A2b => a + b,
            Variant::C1 => Self::signed_sum(a, b),
            Variant::C2 => Self::signed_sum(b, a),
        })
    }

    pub fn neg(&self, a: &BigRational) -> Result<BigRational> {
        self.check(a)?;
        Ok(match self.variant {
            Variant::C1 | Variant::C2 if odd_numerator(a) => a.clone(),
            _ => -a,
        })
    }

    pub fn circ(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        self.check(a)?;
        self.check(b)?;
        self.checked(match self.variant {
            Variant::A2a => Self::signed_sum(a, b),
            Variant::A2b => a + b + self.a2b_c() * a * b,
            Variant::C1 | Variant::C2 => a + b,
        })
    }

    pub fn circ_inverse(&self, a: &BigRational) -> Result<BigRational> {
        self.check(a)?;
        self.checked(match self.variant {
            Variant::A2a if odd_numerator(a) => a.clone(),
            Variant::A2a => -a,
            // -a / (1 - a + (m1/m2) a)
            Variant::A2b => {
                let scale = BigRational::one() + self.a2b_c() * a;
                if scale.is_zero() {
                    return Err(Error::DomainViolation(format!("{a} has no ∘-inverse")));
                }
                -a / scale
            }
            Variant::C1 | Variant::C2 => -a,
        })
    }

    /// `λ_a(b) = -a + a ∘ b`.
    pub fn lambda(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        self.add(&self.neg(a)?, &self.circ(a, b)?)
    }

    /// `a ∗ b = λ_a(b) - b`.
    pub fn star(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        self.add(&self.lambda(a, b)?, &self.neg(b)?)
    }

    /// Whether `a` lies in the kernel of `λ` as described by the family:
    /// `2X` for `A2a` and `C1`, `{0}` for `A2b` and `C2`.
    pub fn in_expected_kernel(&self, a: &BigRational) -> bool {
        match self.variant {
            Variant::A2a | Variant::C1 => !odd_numerator(a),
            Variant::A2b | Variant::C2 => a.is_zero(),
        }
    }

    /// A seeded sampler over the domain.
    pub fn sampler(&self, seed: u64, numerator_bound: i64) -> Sampler<'_> {
        Sampler {
            domain: &self.domain,
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: numerator_bound,
            primes: (2..=50).filter(|&p| is_prime(p) && self.domain.allows(p)).collect(),
        }
    }

    /// Checks the brace axioms on `count` random triples.
    pub fn axiom_sample_check(&self, seed: u64, count: usize) -> SampleReport {
        let mut sampler = self.sampler(seed, NUMERATOR_BOUND);
        let mut report = SampleReport {
            variant: self.variant,
            samples: 0,
            counterexample: None,
        };
        for _ in 0..count {
            let (a, b, c) = (sampler.sample(), sampler.sample(), sampler.sample());
            if let Err(reason) = self.check_triple(&a, &b, &c) {
                report.counterexample = Some(format!("a = {a}, b = {b}, c = {c}: {reason}"));
                return report;
            }
            report.samples += 1;
        }
        report
    }

    fn check_triple(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> Result<(), String> {
        let e = |e: Error| format!("{e}");
        let zero = BigRational::zero();
        let expect = |ok: bool, what: &str| if ok { Ok(()) } else { Err(String::from(what)) };
        let ab = self.circ(a, b).map_err(e)?;
        let bc = self.circ(b, c).map_err(e)?;
        expect(
            self.circ(&ab, c).map_err(e)? == self.circ(a, &bc).map_err(e)?,
            "∘ is not associative",
        )?;
        expect(
            self.circ(&zero, a).map_err(e)? == *a && self.circ(a, &zero).map_err(e)? == *a,
            "0 is not a ∘-identity",
        )?;
        let ai = self.circ_inverse(a).map_err(e)?;
        expect(
            self.circ(a, &ai).map_err(e)?.is_zero() && self.circ(&ai, a).map_err(e)?.is_zero(),
            "∘-inverse fails",
        )?;
        let sab = self.add(a, b).map_err(e)?;
        let sbc = self.add(b, c).map_err(e)?;
        expect(
            self.add(&sab, c).map_err(e)? == self.add(a, &sbc).map_err(e)?,
            "+ is not associative",
        )?;
        expect(
            self.add(&zero, a).map_err(e)? == *a && self.add(a, &zero).map_err(e)? == *a,
            "0 is not a +-identity",
        )?;
        let na = self.neg(a).map_err(e)?;
        expect(
            self.add(a, &na).map_err(e)?.is_zero() && self.add(&na, a).map_err(e)?.is_zero(),
            "+-inverse fails",
        )?;
        // a ∘ (b + c) = a ∘ b - a + a ∘ c
        let lhs = self.circ(a, &sbc).map_err(e)?;
        let ac = self.circ(a, c).map_err(e)?;
        let rhs = self.add(&self.add(&ab, &na).map_err(e)?, &ac).map_err(e)?;
        expect(lhs == rhs, "skew distributivity fails")?;
        // λ_{a∘b}(c) = λ_a(λ_b(c))
        let l1 = self.lambda(&ab, c).map_err(e)?;
        let l2 = self.lambda(a, &self.lambda(b, c).map_err(e)?).map_err(e)?;
        expect(l1 == l2, "λ is not a homomorphism")?;
        // λ_a(b + c) = λ_a(b) + λ_a(c)
        let l3 = self.lambda(a, &sbc).map_err(e)?;
        let l4 = self
            .add(&self.lambda(a, b).map_err(e)?, &self.lambda(a, c).map_err(e)?)
            .map_err(e)?;
        expect(l3 == l4, "λ_a is not additive")
    }

    /// Checks on `count` sampled `a` that `λ_a` fixes sampled points exactly
    /// when `a` lies in the family's kernel. Nonzero `a` outside the kernel
    /// must move `1` or `2`.
    pub fn kernel_sample_check(&self, seed: u64, count: usize) -> SampleReport {
        let mut sampler = self.sampler(seed, NUMERATOR_BOUND);
        let mut report = SampleReport {
            variant: self.variant,
            samples: 0,
            counterexample: None,
        };
        let probes = [q(1), q(2), q(3)];
        for i in 0..count {
            // Force a few kernel elements into the sample.
            let a = match i % 4 {
                0 => sampler.sample() * q(2),
                _ => sampler.sample(),
            };
            let b = sampler.sample();
            let fixes = probes
                .iter()
                .chain(core::iter::once(&b))
                .filter(|y| self.contains(y))
                .all(|y| self.lambda(&a, y).ok().as_ref() == Some(y));
            let expected = self.in_expected_kernel(&a);
            let fixes_b = self.lambda(&a, &b).ok() == Some(b.clone());
            if fixes != expected || (expected && !fixes_b) {
                report.counterexample = Some(format!(
                    "a = {a}: λ_a fixes the probes: {fixes}, a in the expected kernel: {expected}"
                ));
                return report;
            }
            report.samples += 1;
        }
        report
    }

    /// Exhibits a sub-skew brace of an `A2b` brace that is not an ideal.
    ///
    /// `Y = {a/b ∈ X : p | a, p ∤ b}` is a sub-skew brace, but
    /// `λ_{1/p²}(p) = (p²m2 - m2 + m1)/(m2 p)` leaves it.
    pub fn dedekind_witness(&self, p: u64, seed: u64, samples: usize) -> Result<DedekindWitness> {
        let Some((m1, m2)) = self.ratio else {
            return Err(Error::InvalidSpec(String::from(
                "the non-Dedekind witness is defined for the A2b family",
            )));
        };
        if !is_prime(p) {
            return Err(Error::BadPrime {
                prime: p,
                reason: String::from("not a prime"),
            });
        }
        if !self.domain.allows(p) {
            return Err(Error::BadPrime {
                prime: p,
                reason: String::from("p is a forbidden prime"),
            });
        }
        let pb = BigInt::from(p);
        if (BigInt::from(m2) * BigInt::from(m1 - m2) % &pb).is_zero() {
            return Err(Error::BadPrime {
                prime: p,
                reason: format!("p divides m2(m1 - m2) = {}", m2 as i128 * (m1 - m2) as i128),
            });
        }
        let in_y = |a: &BigRational| self.contains(a) && (a.numer() % &pb).is_zero() && !(a.denom() % &pb).is_zero();
        let pq = BigRational::from_integer(pb.clone());
        let u = BigRational::new(BigInt::one(), &pb * &pb);
        let element = self.lambda(&u, &pq)?;
        let closed_form = BigRational::new(
            &pb * &pb * BigInt::from(m2) - BigInt::from(m2) + BigInt::from(m1),
            BigInt::from(m2) * &pb,
        );
        if element != closed_form {
            return Err(Error::ConstructionCheck(format!(
                "λ_(1/p²)(p) = {element}, expected {closed_form}"
            )));
        }

        // Sample Y as p·(domain elements with denominators prime to p).
        let mut sampler = self.sampler(seed, NUMERATOR_BOUND);
        sampler.primes.retain(|&r| r != p);
        let mut closure_samples = 0;
        let mut closure_failure = None;
        for _ in 0..samples {
            let a = sampler.sample() * &pq;
            let b = sampler.sample() * &pq;
            let results = [
                ("a + b", self.add(&a, &b)?),
                ("-a", self.neg(&a)?),
                ("a ∘ b", self.circ(&a, &b)?),
                ("a⁻¹", self.circ_inverse(&a)?),
            ];
            if let Some((what, v)) = results.iter().find(|(_, v)| !in_y(v)) {
                closure_failure = Some(format!("a = {a}, b = {b}: {what} = {v} leaves Y"));
                break;
            }
            closure_samples += 1;
        }
        Ok(DedekindWitness {
            prime: p,
            u,
            v: pq,
            v_in_y: true,
            in_domain: self.contains(&element),
            in_y: in_y(&element),
            element,
            closure_samples,
            closure_failure,
        })
    }
}

const NUMERATOR_BOUND: i64 = 1000;

/// Random domain elements: numerators uniform in `[-N, N]`, denominators
/// products of at most three allowed primes up to 50.
pub struct Sampler<'a> {
    domain: &'a LocalizedDomain,
    rng: ChaCha8Rng,
    bound: i64,
    primes: Vec<u64>,
}

impl Sampler<'_> {
    pub fn sample(&mut self) -> BigRational {
        let numerator = self.rng.random_range(-self.bound..=self.bound);
        let mut denominator = 1u64;
        if !self.primes.is_empty() {
            for _ in 0..self.rng.random_range(0..=3) {
                denominator *= self.primes[self.rng.random_range(0..self.primes.len())];
            }
        }
        let r = BigRational::new(BigInt::from(numerator), BigInt::from(denominator));
        debug_assert!(self.domain.contains(&r));
        r
    }
}

/// Outcome of a sampled check. Sampling never proves the axioms; a passing
/// report only says how many samples agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub variant: Variant,
    /// Samples that passed before the first failure (all of them on success).
    pub samples: usize,
    pub counterexample: Option<String>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: pass at confidence of {} samples",
                self.variant.tag(),
                self.samples
            ),
            Some(c) => write!(
                f,
                "{}: fail after {} samples; counterexample {c}",
                self.variant.tag(),
                self.samples
            ),
        }
    }
}

/// A sub-skew brace `Y` and an element `λ_u(v)` with `u ∈ X`, `v ∈ Y` that
/// leaves `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindWitness {
    pub prime: u64,
    pub u: BigRational,
    pub v: BigRational,
    pub v_in_y: bool,
    pub element: BigRational,
    pub in_domain: bool,
    pub in_y: bool,
    /// Sampled pairs of `Y` on which `+`, `-`, `∘` and `∘`-inverses stayed in `Y`.
    pub closure_samples: usize,
    pub closure_failure: Option<String>,
}

impl DedekindWitness {
    /// `Y` looked closed on every sample and `λ_u(v) ∉ Y`.
    pub fn certifies(&self) -> bool {
        self.closure_failure.is_none() && self.in_domain && !self.in_y && self.v_in_y
    }
}
