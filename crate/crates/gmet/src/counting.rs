//! Closed-form counting of invariant and bi-invariant metrics.
//!
//! The Bell index of M(G) is k(G) = ½(|G| + k₂(G)) − 1 and the index of
//! M*(G) is k*(G) = ½(c(G) + c₂(G)) − 1. For the classical families these
//! indices have closed forms; this module evaluates them with exact
//! arithmetic, together with product/semidirect rules, partition-function
//! utilities, and the degree invariants b(G) = k*/k and d(G) = c(G)/|G|.
//!
//! Every formula here is cross-checkable against direct computation on the
//! constructed group; the acceptance suite does exactly that.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::group::{Group, GroupError, Sign};
use crate::partitions::{k_bi_invariant, k_invariant};

#[derive(Debug, Error)]
pub enum CountError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("inconsistent parity: order {n} with {s} two-power factors")]
    InconsistentParity { n: usize, s: usize },
    #[error("formula produced a non-integer, which indicates a bug: {0}")]
    NonIntegralResult(String),
    #[error("group is not ambivalent")]
    NotAmbivalent,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("elementary abelian 2-group has no dihedral double")]
    ElementaryAbelianTwoGroup,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// k(G) for an abelian group of order n whose canonical cyclic decomposition
/// has s factors of 2-power order: `n/2 + 2^{s−1} − 1` (s ≥ 1), `(n−1)/2`
/// (s = 0).
pub fn abelian_k(n: usize, s: usize) -> Result<usize, CountError> {
    if n == 0 {
        return Err(CountError::OutOfRange("order 0".into()));
    }
    if (n % 2 == 0) != (s >= 1) {
        return Err(CountError::InconsistentParity { n, s });
    }
    Ok(if s == 0 {
        (n - 1) / 2
    } else {
        n / 2 + (1 << (s - 1)) - 1
    })
}

/// k(D_n): 3k for n = 2k (k ≥ 2), 3k+1 for n = 2k+1 (k ≥ 1).
pub fn dihedral_k(n: usize) -> Result<usize, CountError> {
    if n < 3 {
        return Err(CountError::OutOfRange(format!(
            "dihedral_k needs n >= 3, got {n}"
        )));
    }
    Ok(if n % 2 == 0 {
        3 * n / 2
    } else {
        (3 * n - 1) / 2
    })
}

/// k(Q_{4n}) = 2n for n ≥ 2.
pub fn dicyclic_k(n: usize) -> Result<usize, CountError> {
    if n < 2 {
        return Err(CountError::OutOfRange(format!(
            "dicyclic_k needs n >= 2, got {n}"
        )));
    }
    Ok(2 * n)
}

/// k of the order-2^n quasidihedral groups: 5·2^{n−3} for the minus type,
/// 2^{n−1} + 1 for the plus type (n ≥ 4).
pub fn quasidihedral_k(n: u32, sign: Sign) -> Result<usize, CountError> {
    if n < 4 {
        return Err(CountError::OutOfRange(format!(
            "quasidihedral_k needs n >= 4, got {n}"
        )));
    }
    Ok(match sign {
        Sign::Minus => 5 * (1usize << (n - 3)),
        Sign::Plus => (1usize << (n - 1)) + 1,
    })
}

/// s_n = Σ_k 1/(2^k k! (n−2k)!), the involution count of S_n divided by n!.
pub fn sn_rational(n: usize) -> BigRational {
    let mut total = BigRational::zero();
    for k in 0..=(n / 2) {
        total += term(n, k);
    }
    total
}

/// a_n: the even-k part of the same sum (involutions of A_n over n!).
pub fn an_rational(n: usize) -> BigRational {
    let mut total = BigRational::zero();
    for k in (0..=(n / 2)).step_by(2) {
        total += term(n, k);
    }
    total
}

fn term(n: usize, k: usize) -> BigRational {
    let denom = BigInt::from(2u32).pow(k as u32) * factorial(k) * factorial(n - 2 * k);
    BigRational::new(BigInt::one(), denom)
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// k(S_n) = ½ n!(s_n + 1) − 1 for n ≥ 3.
pub fn symmetric_k(n: usize) -> Result<usize, CountError> {
    if n < 3 {
        return Err(CountError::OutOfRange(format!(
            "symmetric_k needs n >= 3, got {n}"
        )));
    }
    let value = BigRational::from_integer(factorial(n)) * (sn_rational(n) + BigRational::one())
        / BigRational::from_integer(BigInt::from(2))
        - BigRational::one();
    rational_to_usize(&value)
}

/// k(A_n) = ½ n!(a_n + ½) − 1 for n ≥ 4.
pub fn alternating_k(n: usize) -> Result<usize, CountError> {
    if n < 4 {
        return Err(CountError::OutOfRange(format!(
            "alternating_k needs n >= 4, got {n}"
        )));
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let value = BigRational::from_integer(factorial(n)) * (an_rational(n) + &half) * &half
        - BigRational::one();
    rational_to_usize(&value)
}

fn rational_to_usize(value: &BigRational) -> Result<usize, CountError> {
    if !value.is_integer() || value.is_negative() {
        return Err(CountError::NonIntegralResult(value.to_string()));
    }
    value
        .to_integer()
        .to_usize()
        .ok_or_else(|| CountError::NonIntegralResult(value.to_string()))
}

/// k(SL₂(F_q)) = (q³ − q)/2 for odd prime powers q.
pub fn sl2_k(q: u64) -> Result<usize, CountError> {
    if q < 3 || q % 2 == 0 || !is_prime_power(q) {
        return Err(CountError::OutOfRange(format!(
            "sl2_k needs an odd prime power, got {q}"
        )));
    }
    Ok(((q * q * q - q) / 2) as usize)
}

/// k*(SL₂(F_q)) = (q + 3)/2 for prime powers q ≡ 1 (mod 4).
pub fn sl2_kstar(q: u64) -> Result<usize, CountError> {
    if !is_prime_power(q) || q % 4 != 1 {
        return Err(CountError::OutOfRange(format!(
            "sl2_kstar needs a prime power q ≡ 1 (mod 4), got {q}"
        )));
    }
    Ok(((q + 3) / 2) as usize)
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// k*(D_n): (n+1)/2 for n odd, (n+4)/2 for n even (n ≥ 3).
pub fn dihedral_kstar(n: usize) -> Result<usize, CountError> {
    if n < 3 {
        return Err(CountError::OutOfRange(format!(
            "dihedral_kstar needs n >= 3, got {n}"
        )));
    }
    Ok(if n % 2 == 0 {
        (n + 4) / 2
    } else {
        n.div_ceil(2)
    })
}

/// k*(Q_{4n}): n+2 for n even, n+1 for n odd (n ≥ 2).
pub fn dicyclic_kstar(n: usize) -> Result<usize, CountError> {
    if n < 2 {
        return Err(CountError::OutOfRange(format!(
            "dicyclic_kstar needs n >= 2, got {n}"
        )));
    }
    Ok(if n % 2 == 0 { n + 2 } else { n + 1 })
}

/// k* of the order-2^n quasidihedral groups: 3·2^{n−4} + 2 (minus),
/// 5·2^{n−4} + 1 (plus), n ≥ 4.
pub fn quasidihedral_kstar(n: u32, sign: Sign) -> Result<usize, CountError> {
    if n < 4 {
        return Err(CountError::OutOfRange(format!(
            "quasidihedral_kstar needs n >= 4, got {n}"
        )));
    }
    Ok(match sign {
        Sign::Minus => 3 * (1usize << (n - 4)) + 2,
        Sign::Plus => 5 * (1usize << (n - 4)) + 1,
    })
}

/// p(n), the integer partition function, via Euler's pentagonal recurrence.
pub fn partition_number(n: usize) -> BigUint {
    static CACHE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigUint::one()]));
    let mut table = cache.lock().expect("partition cache lock");
    while table.len() <= n {
        let m = table.len();
        let mut total = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            if g1 <= m {
                total += &sign * BigInt::from(table[m - g1].clone());
            }
            if g2 <= m {
                total += &sign * BigInt::from(table[m - g2].clone());
            }
            k += 1;
        }
        table.push(total.to_biguint().expect("p(n) is nonnegative"));
    }
    table[n].clone()
}

/// f_n: partitions of n into distinct odd parts, which equals the number of
/// self-conjugate partitions of n.
pub fn self_conjugate_count(n: usize) -> BigUint {
    // DP over distinct odd parts
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    let mut part = 1;
    while part <= n {
        for total in (part..=n).rev() {
            let add = dp[total - part].clone();
            dp[total] += add;
        }
        part += 2;
    }
    dp[n].clone()
}

/// k*(S_n) = p(n) − 1 (S_n is ambivalent and has p(n) classes).
pub fn symmetric_kstar(n: usize) -> Result<usize, CountError> {
    if n < 1 {
        return Err(CountError::OutOfRange(
            "symmetric_kstar needs n >= 1".into(),
        ));
    }
    let p = partition_number(n);
    Ok(p.to_usize()
        .ok_or_else(|| CountError::NonIntegralResult(p.to_string()))?
        - 1)
}

/// c(A_n) = 2 f_n + (p(n) − f_n)/2.
pub fn alternating_class_count(n: usize) -> BigUint {
    let p = partition_number(n);
    let f = self_conjugate_count(n);
    BigUint::from(2u32) * &f + (p - &f) / BigUint::from(2u32)
}

/// A_n is ambivalent exactly for n ∈ {1, 2, 5, 6, 10, 14}.
pub fn alternating_is_ambivalent(n: usize) -> bool {
    matches!(n, 1 | 2 | 5 | 6 | 10 | 14)
}

/// k(G × K) = ½(|G||K| + k₂(G)k₂(K)) − 1.
pub fn product_k(g: &Group, k: &Group) -> usize {
    (g.order() * k.order() + g.involution_count() * k.involution_count()) / 2 - 1
}

/// k*(G × A) = c(A)(k*(G) + 1) − 1 for ambivalent A, where
/// c(A) = k*(A) + 1. In particular k*(G × Z₂^r) = 2^r(k*(G) + 1) − 1.
pub fn product_kstar_with_ambivalent(g: &Group, a: &Group) -> Result<usize, CountError> {
    if !a.is_ambivalent() {
        return Err(CountError::NotAmbivalent);
    }
    Ok((k_bi_invariant(a) + 1) * (k_bi_invariant(g) + 1) - 1)
}

/// Bounds ½|G|(|H|−1) + k(G) ≤ k(G ⋊_φ H) ≤ k(H)|G| + k(G), valid for every
/// φ; returned as exact rationals (the lower bound may be a half-integer).
pub fn semidirect_k_bounds(g: &Group, h: &Group) -> (BigRational, BigRational) {
    let kg = BigRational::from_integer(BigInt::from(k_invariant(g)));
    let lower = BigRational::new(BigInt::from(g.order() * (h.order() - 1)), BigInt::from(2)) + &kg;
    let upper = BigRational::from_integer(BigInt::from(k_invariant(h) * g.order())) + kg;
    (lower, upper)
}

/// k(G ⋊ H) = ½|G|(|H|−1) + k(G) when |H| is odd (both bounds collapse).
pub fn semidirect_k_odd_h(g: &Group, h: &Group) -> Result<usize, CountError> {
    if h.order() % 2 == 0 {
        return Err(CountError::OutOfRange(format!(
            "semidirect_k_odd_h needs |H| odd, got {}",
            h.order()
        )));
    }
    Ok(g.order() * (h.order() - 1) / 2 + k_invariant(g))
}

/// k(𝔻(G)) = ½(3|G| + k₂(G)) − 1 for abelian G that is not an elementary
/// abelian 2-group.
pub fn generalized_dihedral_k(g: &Group) -> Result<usize, CountError> {
    if !g.is_abelian() {
        return Err(CountError::NotAbelian);
    }
    if g.is_elementary_abelian_2() {
        return Err(CountError::ElementaryAbelianTwoGroup);
    }
    Ok((3 * g.order() + g.involution_count()) / 2 - 1)
}

/// b(G) = k*(G)/k(G), the bi-invariance degree, in (0, 1]. The trivial
/// group has k = k* = 0 and gets b = 1 (its single metric class is
/// bi-invariant).
pub fn bi_invariance_degree(g: &Group) -> BigRational {
    let k = k_invariant(g);
    if k == 0 {
        return BigRational::one();
    }
    BigRational::new(BigInt::from(k_bi_invariant(g)), BigInt::from(k))
}

/// d(G) = c(G)/|G|, the commutativity degree.
pub fn commutativity_degree(g: &Group) -> BigRational {
    BigRational::new(BigInt::from(g.class_count()), BigInt::from(g.order()))
}

/// Whether every invariant metric on G is bi-invariant: k(G) = k*(G).
pub fn all_invariant_are_bi(g: &Group) -> bool {
    k_invariant(g) == k_bi_invariant(g)
}

/// Structural side of the classification of groups with b(G) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B1Class {
    Abelian,
    /// Isomorphic to Q₈ × Z₂^k for some k ≥ 0.
    Q8TimesElementary2,
    Neither,
}

/// Classify G structurally: abelian, Q₈ × Z₂^k, or neither. Agrees with
/// [`all_invariant_are_bi`] on every finite group.
pub fn classify_b1(g: &Group) -> Result<B1Class, CountError> {
    if g.is_abelian() {
        return Ok(B1Class::Abelian);
    }
    let n = g.order();
    if n % 8 == 0 && (n / 8).is_power_of_two() {
        let mut candidate = Group::dicyclic(2)?;
        let z2 = Group::cyclic(2)?;
        let mut m = n / 8;
        while m > 1 {
            candidate = Group::direct_product(&candidate, &z2)?;
            m /= 2;
        }
        if crate::group::is_isomorphic(g, &candidate)? {
            return Ok(B1Class::Q8TimesElementary2);
        }
    }
    Ok(B1Class::Neither)
}
