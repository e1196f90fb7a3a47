//! Weight functions and concrete invariant metrics.
//!
//! A weight `w` on G has `w(e) = 0`, `w(x) > 0` otherwise, `w(x) = w(x⁻¹)`,
//! and `w(xy) ≤ w(x) + w(y)`; it induces the right-invariant metric
//! `d(x,y) = w(xy⁻¹)`. Values are exact rationals throughout.
//!
//! Besides the canonical integral weight of a partition, this module builds
//! the named families: Hamming and product Hamming, poset weights, chain
//! weights, Lee and extended Lee on Z_m, and the homogeneous weight on the
//! ring Z_n. The homogeneous weight is returned as raw data: it does not
//! satisfy the triangle inequality for every n (check with
//! [`verify_weight_axioms`] when it matters).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::group::Group;
use crate::partitions::{is_unitary_symmetric, BlockPartition};

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("partition is not unitary symmetric")]
    NotUnitarySymmetric,
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("scale factor must be positive")]
    ScaleNonPositive,
    #[error("{n} does not divide {m}, or is out of range")]
    NotADivisor { m: usize, n: usize },
    #[error("chain member {0} is not a subgroup")]
    NotASubgroup(usize),
    #[error("chain is not strictly ascending at step {0}")]
    NotAscending(usize),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
}

/// Per-element nonnegative rational weights; index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    values: Vec<BigRational>,
}

impl WeightFunction {
    pub fn from_values(values: Vec<BigRational>) -> Self {
        WeightFunction { values }
    }

    pub fn from_integers(values: &[u64]) -> Self {
        WeightFunction {
            values: values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, x: usize) -> &BigRational {
        &self.values[x]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Witnesses for failed weight axioms; `None` everywhere means the weight is
/// valid. Only the first witness per axiom is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// x with w(x) < 0, w(e) ≠ 0, or w(x) = 0 for x ≠ e.
    pub positivity: Option<usize>,
    /// x with w(x) ≠ w(x⁻¹).
    pub symmetry: Option<usize>,
    /// (x, y) with w(xy) > w(x) + w(y).
    pub triangle: Option<(usize, usize)>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.positivity.is_none() && self.symmetry.is_none() && self.triangle.is_none()
    }
}

/// Exhaustive check of the weight axioms (O(n²) for the triangle part).
pub fn verify_weight_axioms(g: &Group, w: &WeightFunction) -> AxiomReport {
    let n = g.order();
    let mut report = AxiomReport {
        positivity: None,
        symmetry: None,
        triangle: None,
    };
    if w.len() != n {
        report.positivity = Some(0);
        return report;
    }
    for x in 0..n {
        let v = w.value(x);
        let bad = if x == 0 {
            !v.is_zero()
        } else {
            v.is_zero() || v.is_negative()
        };
        if bad {
            report.positivity = Some(x);
            break;
        }
    }
    for x in 0..n {
        if w.value(x) != w.value(g.inv(x)) {
            report.symmetry = Some(x);
            break;
        }
    }
    'outer: for x in 0..n {
        for y in 0..n {
            if w.value(g.mul(x, y)) > &(w.value(x) + w.value(y)) {
                report.triangle = Some((x, y));
                break 'outer;
            }
        }
    }
    report
}

/// The canonical integral weight of a unitary symmetric partition with s
/// non-identity blocks: block i (in canonical order) gets value s + i, so all
/// nonzero values lie in `[s+1, 2s]` and the triangle inequality is automatic.
pub fn weight_from_partition(g: &Group, p: &BlockPartition) -> Result<WeightFunction, MetricError> {
    if !is_unitary_symmetric(g, p) {
        return Err(MetricError::NotUnitarySymmetric);
    }
    let s = p.num_blocks() - 1;
    let values = (0..g.order())
        .map(|x| {
            let b = p.block_of(x);
            let v = if b == 0 { 0 } else { s + b };
            BigRational::from_integer(BigInt::from(v))
        })
        .collect();
    Ok(WeightFunction { values })
}

/// Level sets of a valid weight, canonicalized. Errors if the weight fails
/// the axioms.
pub fn induced_partition(g: &Group, w: &WeightFunction) -> Result<BlockPartition, MetricError> {
    let report = verify_weight_axioms(g, w);
    if !report.all_ok() {
        return Err(MetricError::InvalidWeight(format!("{report:?}")));
    }
    Ok(level_sets(g, w))
}

/// Level sets without the axiom gate (used for raw weights such as the
/// homogeneous family where only the induced partition is of interest).
pub fn level_sets(g: &Group, w: &WeightFunction) -> BlockPartition {
    let mut groups: std::collections::BTreeMap<BigRational, Vec<usize>> = Default::default();
    for x in 0..g.order() {
        groups.entry(w.value(x).clone()).or_default().push(x);
    }
    BlockPartition::new(g.order(), groups.into_values().collect())
        .expect("level sets partition the group")
}

/// Two weights are P-equivalent when they induce the same partition.
pub fn p_equivalent(
    g: &Group,
    w1: &WeightFunction,
    w2: &WeightFunction,
) -> Result<bool, MetricError> {
    Ok(induced_partition(g, w1)? == induced_partition(g, w2)?)
}

/// Full distance table d(x,y) = w(x·y⁻¹).
pub fn distance_table(g: &Group, w: &WeightFunction) -> Vec<Vec<BigRational>> {
    let n = g.order();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| w.value(g.mul(x, g.inv(y))).clone())
                .collect()
        })
        .collect()
}

/// Which translation invariances a distance table satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvarianceClass {
    Bi,
    Right,
    Left,
    None,
}

/// Exhaustive translation-invariance check of an arbitrary distance table.
pub fn invariance_class(g: &Group, d: &[Vec<BigRational>]) -> InvarianceClass {
    let n = g.order();
    let right =
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|h| d[g.mul(x, h)][g.mul(y, h)] == d[x][y])));
    let left =
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|h| d[g.mul(h, x)][g.mul(h, y)] == d[x][y])));
    match (right, left) {
        (true, true) => InvarianceClass::Bi,
        (true, false) => InvarianceClass::Right,
        (false, true) => InvarianceClass::Left,
        (false, false) => InvarianceClass::None,
    }
}

/// Pointwise sum of two weights on the same group.
pub fn add_weights(
    g: &Group,
    w1: &WeightFunction,
    w2: &WeightFunction,
) -> Result<WeightFunction, MetricError> {
    if w1.len() != g.order() || w2.len() != g.order() {
        return Err(MetricError::InvalidWeight("length mismatch".into()));
    }
    Ok(WeightFunction {
        values: w1
            .values
            .iter()
            .zip(&w2.values)
            .map(|(a, b)| a + b)
            .collect(),
    })
}

/// Scale a weight by a positive rational.
pub fn scale_weight(
    g: &Group,
    alpha: &BigRational,
    w: &WeightFunction,
) -> Result<WeightFunction, MetricError> {
    if !alpha.is_positive() {
        return Err(MetricError::ScaleNonPositive);
    }
    if w.len() != g.order() {
        return Err(MetricError::InvalidWeight("length mismatch".into()));
    }
    Ok(WeightFunction {
        values: w.values.iter().map(|v| v * alpha).collect(),
    })
}

/// Hamming weight: 1 on every non-identity element.
pub fn hamming_weight(g: &Group) -> WeightFunction {
    let values = (0..g.order())
        .map(|x| {
            if x == 0 {
                BigRational::zero()
            } else {
                BigRational::one()
            }
        })
        .collect();
    WeightFunction { values }
}

/// Product Hamming weight on the direct product of the factors: the number
/// of non-identity coordinates. Returns the product group together with the
/// weight.
pub fn product_hamming_weight(factors: &[&Group]) -> Result<(Group, WeightFunction), MetricError> {
    let product = Group::direct_product_many(factors)
        .map_err(|e| MetricError::InvalidWeight(e.to_string()))?;
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let values = (0..product.order())
        .map(|idx| {
            let coords = decode_mixed_radix(idx, &orders);
            let count = coords.iter().filter(|&&c| c != 0).count();
            BigRational::from_integer(BigInt::from(count))
        })
        .collect();
    Ok((product, WeightFunction { values }))
}

/// Lee weight on Z_m: `w(x) = min(x, m−x)`.
pub fn lee_weight(m: usize) -> WeightFunction {
    assert!(m >= 1);
    let values = (0..m)
        .map(|x| BigRational::from_integer(BigInt::from(x.min(m - x))))
        .collect();
    WeightFunction { values }
}

/// Extended Lee weight on Z_m for n | m, 1 ≤ n ≤ m/2:
/// `w(x) = min(x, m−x, n)`. For even m, n = m/2 recovers the Lee weight.
pub fn extended_lee_weight(m: usize, n: usize) -> Result<WeightFunction, MetricError> {
    if n == 0 || m % n != 0 || 2 * n > m {
        return Err(MetricError::NotADivisor { m, n });
    }
    let values = (0..m)
        .map(|x| BigRational::from_integer(BigInt::from(x.min(m - x).min(n))))
        .collect();
    Ok(WeightFunction { values })
}

/// Chain weight for an ascending subgroup chain `{e} = H₀ ⊂ … ⊂ H_k = G`:
/// `w(x)` is the least i with `x ∈ H_i`.
pub fn chain_weight(g: &Group, chain: &[Vec<usize>]) -> Result<WeightFunction, MetricError> {
    if chain.is_empty() || chain[0] != vec![0] {
        return Err(MetricError::NotAscending(0));
    }
    let n = g.order();
    if chain.last().map(|h| h.len()) != Some(n) {
        return Err(MetricError::NotAscending(chain.len().saturating_sub(1)));
    }
    let mut level = vec![usize::MAX; n];
    for (i, h) in chain.iter().enumerate() {
        if !g.is_subgroup(h) {
            return Err(MetricError::NotASubgroup(i));
        }
        if i > 0 {
            let prev: std::collections::HashSet<usize> = chain[i - 1].iter().copied().collect();
            if !(chain[i - 1].len() < h.len() && prev.iter().all(|x| h.contains(x))) {
                return Err(MetricError::NotAscending(i));
            }
        }
        for &x in h {
            if level[x] == usize::MAX {
                level[x] = i;
            }
        }
    }
    Ok(WeightFunction {
        values: level
            .into_iter()
            .map(|l| BigRational::from_integer(BigInt::from(l)))
            .collect(),
    })
}

/// Poset weight on a direct product: `w(g) = |⟨supp(g)⟩|`, the size of the
/// smallest down-closed set containing the non-identity coordinates.
/// `leq[a][b]` means `a ⪯ b`; the relation must be a partial order.
pub fn poset_weight(
    factors: &[&Group],
    leq: &[Vec<bool>],
) -> Result<(Group, WeightFunction), MetricError> {
    let n = factors.len();
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(MetricError::NotAPartialOrder(
            "relation matrix is not n×n".into(),
        ));
    }
    for a in 0..n {
        if !leq[a][a] {
            return Err(MetricError::NotAPartialOrder(format!(
                "not reflexive at {a}"
            )));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(MetricError::NotAPartialOrder(format!(
                    "not antisymmetric at ({a}, {b})"
                )));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(MetricError::NotAPartialOrder(format!(
                        "not transitive at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let product = Group::direct_product_many(factors)
        .map_err(|e| MetricError::InvalidWeight(e.to_string()))?;
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let values = (0..product.order())
        .map(|idx| {
            let coords = decode_mixed_radix(idx, &orders);
            let ideal_size = (0..n)
                .filter(|&a| (0..n).any(|b| coords[b] != 0 && leq[a][b]))
                .count();
            BigRational::from_integer(BigInt::from(ideal_size))
        })
        .collect();
    Ok((product, WeightFunction { values }))
}

/// Homogeneous weight on the ring Z_n:
/// `w(x) = λ(1 − μ(0, Rx)/|R^× x|)`, with μ the Möbius function of the
/// poset of principal ideals ordered by inclusion and
/// `R^× x = {y : yZ_n = xZ_n}`.
pub fn homogeneous_weight_zn(n: usize, lambda: &BigRational) -> WeightFunction {
    assert!(n >= 2);
    // principal ideals of Z_n are dZ_n for d | n; dZ_n ⊆ d'Z_n iff d' | d.
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    // mu[i] = μ({0}, d_i Z_n), by recursion over the interval below d_i Z_n.
    let mut mu: Vec<BigInt> = vec![BigInt::zero(); divisors.len()];
    // process ideals from smallest ({0} = nZ_n) upward, i.e. divisors from n down.
    let mut order: Vec<usize> = (0..divisors.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(divisors[i]));
    for &i in &order {
        let d = divisors[i];
        if d == n {
            mu[i] = BigInt::one(); // μ(0, 0) = 1
            continue;
        }
        // sum over ideals strictly between {0} and dZ_n inclusive of {0}:
        // those d' with d | d', d' | n, d' ≠ d
        let mut sum = BigInt::zero();
        for (j, &dj) in divisors.iter().enumerate() {
            if dj != d && dj % d == 0 {
                sum += &mu[j];
            }
        }
        mu[i] = -sum;
    }
    let div_index = |d: usize| divisors.iter().position(|&x| x == d).unwrap();
    let values = (0..n)
        .map(|x| {
            if x == 0 {
                return BigRational::zero();
            }
            let d = gcd(x, n);
            let m = &mu[div_index(d)];
            // |R^× x| = #{y : gcd(y, n) = gcd(x, n)} = φ(n/d)
            let units = euler_phi(n / d);
            let frac = BigRational::new(m.clone(), BigInt::from(units));
            lambda * (BigRational::one() - frac)
        })
        .collect();
    WeightFunction { values }
}

fn decode_mixed_radix(mut idx: usize, orders: &[usize]) -> Vec<usize> {
    let mut coords = vec![0; orders.len()];
    for i in (0..orders.len()).rev() {
        coords[i] = idx % orders[i];
        idx /= orders[i];
    }
    coords
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}
