//! Unitary symmetric (conjugate) partitions of a group and their counts.
//!
//! Equivalence classes of right-invariant metrics on G correspond one-to-one
//! with unitary symmetric partitions of G: `{e}` is a block and every block
//! is closed under inversion. Bi-invariant classes correspond to the
//! partitions whose blocks are unions of conjugacy classes. Both families
//! are exactly the coarsenings of a finest partition (pair blocks
//! `{x, x⁻¹}`, resp. `C_g ∪ C_{g⁻¹}`), so counting them is a Bell number and
//! enumerating them is set-partition enumeration over the finest blocks.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::group::Group;

/// Default cap on k(G) for streaming enumeration (B₁₂ ≈ 4.2M items).
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("enumeration cap exceeded: k = {k} > {cap}")]
    EnumerationCapExceeded { k: usize, cap: usize },
}

/// A partition of `0..n` into disjoint blocks, kept in canonical form:
/// indices sorted inside each block, blocks sorted by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockPartition {
    /// Validate and canonicalize raw blocks.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut block_of = vec![usize::MAX; n];
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(PartitionError::InvalidPartition("empty block".into()));
            }
            let mut b = block;
            b.sort_unstable();
            b.dedup();
            for &x in &b {
                if x >= n {
                    return Err(PartitionError::InvalidPartition(format!(
                        "element {x} out of range 0..{n}"
                    )));
                }
                if block_of[x] != usize::MAX {
                    return Err(PartitionError::InvalidPartition(format!(
                        "element {x} appears in two blocks"
                    )));
                }
                block_of[x] = 0; // provisional
            }
            canon.push(b);
        }
        if block_of.contains(&usize::MAX) {
            return Err(PartitionError::InvalidPartition(
                "blocks do not cover 0..n".into(),
            ));
        }
        canon.sort_by_key(|b| b[0]);
        for (i, b) in canon.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Ok(BlockPartition {
            n,
            blocks: canon,
            block_of,
        })
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// `{0}` is a block (necessarily block 0 in canonical form).
    pub fn is_unitary(&self) -> bool {
        self.blocks.first().is_some_and(|b| b == &[0])
    }
}

/// True iff `{e}` is a block and every block is closed under inversion.
pub fn is_unitary_symmetric(g: &Group, p: &BlockPartition) -> bool {
    p.ground_set_size() == g.order()
        && p.is_unitary()
        && (0..g.order()).all(|x| p.block_of(x) == p.block_of(g.inv(x)))
}

/// True iff every block is a union of conjugacy classes.
pub fn is_conjugate_partition(g: &Group, p: &BlockPartition) -> bool {
    if p.ground_set_size() != g.order() {
        return false;
    }
    let conj = g.conjugacy();
    (0..g.order()).all(|x| {
        let class = &conj.classes[conj.class_of[x]];
        class.iter().all(|&y| p.block_of(y) == p.block_of(x))
    })
}

/// The finest unitary symmetric partition: blocks `{x, x⁻¹}`.
pub fn lee_partition(g: &Group) -> BlockPartition {
    let n = g.order();
    let mut blocks = Vec::new();
    let mut seen = vec![false; n];
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let ix = g.inv(x);
        seen[x] = true;
        if ix == x {
            blocks.push(vec![x]);
        } else {
            seen[ix] = true;
            blocks.push(vec![x, ix]);
        }
    }
    BlockPartition::new(n, blocks).expect("pair blocks partition the group")
}

/// The finest unitary symmetric conjugate partition: blocks `C_g ∪ C_{g⁻¹}`.
pub fn finest_conjugate_partition(g: &Group) -> BlockPartition {
    let n = g.order();
    let conj = g.conjugacy();
    let mut blocks = Vec::new();
    let mut seen = vec![false; conj.classes.len()];
    for (i, class) in conj.classes.iter().enumerate() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let j = conj.class_of[g.inv(class[0])];
        let mut block = class.clone();
        if j != i {
            seen[j] = true;
            block.extend_from_slice(&conj.classes[j]);
        }
        blocks.push(block);
    }
    BlockPartition::new(n, blocks).expect("class unions partition the group")
}

/// k(G) = ½(n + k₂(G)) − 1, the number of non-identity Lee blocks.
pub fn k_invariant(g: &Group) -> usize {
    let k = (g.order() + g.involution_count()) / 2 - 1;
    debug_assert_eq!(k, lee_partition(g).num_blocks() - 1);
    k
}

/// k*(G) = ½(c(G) + c₂(G)) − 1, the number of non-identity blocks of the
/// finest conjugate partition.
pub fn k_bi_invariant(g: &Group) -> usize {
    let k = (g.class_count() + g.real_class_count()) / 2 - 1;
    debug_assert_eq!(k, finest_conjugate_partition(g).num_blocks() - 1);
    k
}

/// Bell number B_k via the Bell triangle, memoized for the process.
pub fn bell(k: usize) -> BigUint {
    static CACHE: OnceLock<Mutex<(Vec<BigUint>, Vec<BigUint>)>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new((vec![BigUint::one()], vec![BigUint::one()])));
    let mut guard = cache.lock().expect("bell cache lock");
    let (bells, row) = &mut *guard;
    while bells.len() <= k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in row.iter() {
            let last = next.last().unwrap().clone();
            next.push(last + v);
        }
        bells.push(next[0].clone());
        *row = next;
    }
    bells[k].clone()
}

/// M(G) = B_{k(G)}, the number of P-classes of invariant metrics.
pub fn count_invariant_metrics(g: &Group) -> BigUint {
    bell(k_invariant(g))
}

/// M*(G) = B_{k*(G)}, the number of classes of bi-invariant metrics.
pub fn count_bi_invariant_metrics(g: &Group) -> BigUint {
    bell(k_bi_invariant(g))
}

/// Streaming enumeration of all coarsenings of a base partition that keep
/// block 0 (= `{0}`) intact: set partitions of the non-identity base blocks,
/// generated as restricted-growth strings in lexicographic order.
pub struct CoarseningIter {
    n: usize,
    base: Vec<Vec<usize>>, // non-identity blocks of the finest partition
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl CoarseningIter {
    fn new(n: usize, base: Vec<Vec<usize>>) -> Self {
        let k = base.len();
        CoarseningIter {
            n,
            base,
            rgs: vec![0; k],
            started: false,
            done: false,
        }
    }

    fn emit(&self) -> BlockPartition {
        let mut merged: Vec<Vec<usize>> = vec![vec![0]];
        let groups = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut by_group: Vec<Vec<usize>> = vec![Vec::new(); groups];
        for (i, &gid) in self.rgs.iter().enumerate() {
            by_group[gid].extend_from_slice(&self.base[i]);
        }
        merged.extend(by_group);
        BlockPartition::new(self.n, merged).expect("coarsening is a partition")
    }

    fn advance(&mut self) -> bool {
        let k = self.rgs.len();
        if k <= 1 {
            return false;
        }
        // prefix maxima
        let mut prefix_max = vec![0usize; k];
        for i in 1..k {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i - 1]);
        }
        for j in (1..k).rev() {
            if self.rgs[j] <= prefix_max[j] {
                self.rgs[j] += 1;
                for v in &mut self.rgs[j + 1..] {
                    *v = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for CoarseningIter {
    type Item = BlockPartition;

    fn next(&mut self) -> Option<BlockPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.emit());
        }
        if self.advance() {
            Some(self.emit())
        } else {
            self.done = true;
            None
        }
    }
}

/// All unitary symmetric partitions of G, exactly once each, in canonical
/// (restricted-growth) order. The count is B_{k(G)}.
pub fn enumerate_unitary_symmetric_partitions(g: &Group) -> Result<CoarseningIter, PartitionError> {
    enumerate_unitary_symmetric_partitions_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_unitary_symmetric_partitions_capped(
    g: &Group,
    cap: usize,
) -> Result<CoarseningIter, PartitionError> {
    let k = k_invariant(g);
    if k > cap {
        return Err(PartitionError::EnumerationCapExceeded { k, cap });
    }
    let base = lee_partition(g).blocks()[1..].to_vec();
    Ok(CoarseningIter::new(g.order(), base))
}

/// All unitary symmetric conjugate partitions of G; the count is B_{k*(G)}.
pub fn enumerate_conjugate_partitions(g: &Group) -> Result<CoarseningIter, PartitionError> {
    enumerate_conjugate_partitions_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_conjugate_partitions_capped(
    g: &Group,
    cap: usize,
) -> Result<CoarseningIter, PartitionError> {
    let k = k_bi_invariant(g);
    if k > cap {
        return Err(PartitionError::EnumerationCapExceeded { k, cap });
    }
    let base = finest_conjugate_partition(g).blocks()[1..].to_vec();
    Ok(CoarseningIter::new(g.order(), base))
}
