//! Finite groups as indexed multiplication tables.
//!
//! A [`Group`] stores a full Cayley table over element indices `0..n` with
//! the identity fixed at index 0. Construction always runs the validator
//! (Latin square, associativity, identity, inverses), so every `Group` value
//! held anywhere in the crate is an actual group.
//!
//! Composition convention for permutation-backed groups: `(σ·τ)(x) = σ(τ(x))`.

mod build;
mod file;
mod iso;
mod spec;

pub use build::{cycle_notation, Limits};
pub use file::{group_from_json, group_to_json, load_cayley_table, CayleyTableFile};
pub use iso::{fingerprint, for_each_isomorphism, is_isomorphic, is_isomorphic_with_cap};
pub use spec::{GroupSpec, PhiTable, Sign};

use std::sync::OnceLock;
use thiserror::Error;

/// Hard bound on table sizes (indices are stored as `u16`).
pub const MAX_ORDER: usize = 65_535;
/// Default cap for synthesized groups.
pub const DEFAULT_ORDER_CAP: usize = 4096;
/// Orders up to this get the exhaustive O(n^3) associativity check;
/// larger tables are checked on sampled triples.
pub const ASSOC_EXHAUSTIVE_LIMIT: usize = 256;
/// Number of sampled triples above [`ASSOC_EXHAUSTIVE_LIMIT`].
const ASSOC_SAMPLES: usize = 1_000_000;
/// Default cap for isomorphism testing.
pub const DEFAULT_ISO_CAP: usize = 128;

/// First failure found by the table validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    /// Table is not n×n.
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    /// An entry is outside `0..n`.
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    /// A row repeats an element.
    NotLatinRow { row: usize },
    /// A column repeats an element.
    NotLatinColumn { col: usize },
    /// No two-sided identity element exists.
    NoIdentity,
    /// First triple with `(ij)k != i(jk)`.
    NotAssociative { triple: (usize, usize, usize) },
    /// Element without a two-sided inverse.
    InverseFailure { element: usize },
}

impl std::fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupDefect::NotSquare { row, len, expected } => {
                write!(f, "row {row} has length {len}, expected {expected}")
            }
            GroupDefect::EntryOutOfRange { row, col, value } => {
                write!(f, "entry [{row}][{col}] = {value} is out of range")
            }
            GroupDefect::NotLatinRow { row } => write!(f, "row {row} is not a permutation"),
            GroupDefect::NotLatinColumn { col } => write!(f, "column {col} is not a permutation"),
            GroupDefect::NoIdentity => write!(f, "no two-sided identity"),
            GroupDefect::NotAssociative { triple: (i, j, k) } => {
                write!(f, "associativity fails at ({i}, {j}, {k})")
            }
            GroupDefect::InverseFailure { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(GroupDefect),
    #[error("order {requested} exceeds cap {cap}")]
    OrderCapExceeded { requested: usize, cap: usize },
    #[error("phi({h}) is not an automorphism (fails at pair ({}, {}))", pair.0, pair.1)]
    NotAnAutomorphism { h: usize, pair: (usize, usize) },
    #[error("phi is not a homomorphism at ({h1}, {h2})")]
    NotAHomomorphism { h1: usize, h2: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("no field table supplied for q = {0}")]
    MissingFieldTable(u64),
    #[error("invalid phi table: {0}")]
    BadPhiTable(String),
    #[error("invalid field table: {0}")]
    BadFieldTable(String),
    #[error("invalid names: {0}")]
    BadNames(String),
    #[error("cannot read group file: {0}")]
    File(String),
}

/// Conjugacy data of a group: the classes in canonical order, the class index
/// of every element, and a reality flag per class (class equals the class of
/// the inverses).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub real_flags: Vec<bool>,
}

impl ConjugacyData {
    /// Number of conjugacy classes, c(G).
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Number of real classes, c₂(G).
    pub fn real_class_count(&self) -> usize {
        self.real_flags.iter().filter(|&&r| r).count()
    }
}

/// A finite group given by its full multiplication table.
///
/// Index 0 is the identity. The table is row-major: `table[i*n + j]` is the
/// index of the product `x_i · x_j`. Inverses are cached at construction.
/// Values are immutable after construction, so a `Group` may be shared and
/// read concurrently.
#[derive(Debug, Clone)]
pub struct Group {
    n: usize,
    names: Vec<String>,
    table: Vec<u16>,
    inv: Vec<u16>,
    conj: OnceLock<ConjugacyData>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table && self.names == other.names
    }
}
impl Eq for Group {}

impl Group {
    /// Validate a raw Cayley table and build a `Group` from it.
    ///
    /// The identity is relocated to index 0 by relabeling when needed; names
    /// are permuted along. Associativity is checked exhaustively for orders
    /// up to [`ASSOC_EXHAUSTIVE_LIMIT`] and on sampled triples above that.
    pub fn from_cayley_table(raw: &[Vec<usize>], names: Vec<String>) -> Result<Group, GroupError> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::NotAGroup(GroupDefect::NoIdentity));
        }
        if n > MAX_ORDER {
            return Err(GroupError::OrderCapExceeded {
                requested: n,
                cap: MAX_ORDER,
            });
        }
        if names.len() != n {
            return Err(GroupError::BadNames(format!(
                "{} names for {} elements",
                names.len(),
                n
            )));
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(GroupDefect::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                }));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotAGroup(GroupDefect::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    }));
                }
            }
        }
        // Latin square.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = raw[i][j];
                if seen[v] {
                    return Err(GroupError::NotAGroup(GroupDefect::NotLatinRow { row: i }));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = raw[i][j];
                if seen[v] {
                    return Err(GroupError::NotAGroup(GroupDefect::NotLatinColumn {
                        col: j,
                    }));
                }
                seen[v] = true;
            }
        }
        // Locate the two-sided identity.
        let mut identity = None;
        'outer: for e in 0..n {
            for i in 0..n {
                if raw[e][i] != i || raw[i][e] != i {
                    continue 'outer;
                }
            }
            identity = Some(e);
            break;
        }
        let e = identity.ok_or(GroupError::NotAGroup(GroupDefect::NoIdentity))?;

        // Relabel so the identity sits at index 0 (swap 0 <-> e).
        let perm: Vec<usize> = (0..n)
            .map(|i| {
                if i == e {
                    0
                } else if i == 0 {
                    e
                } else {
                    i
                }
            })
            .collect();
        let mut table = vec![0u16; n * n];
        let mut new_names = vec![String::new(); n];
        for i in 0..n {
            new_names[perm[i]] = names[i].clone();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[raw[i][j]] as u16;
            }
        }

        // Associativity.
        let mul = |i: usize, j: usize| table[i * n + j] as usize;
        if n <= ASSOC_EXHAUSTIVE_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    let ij = mul(i, j);
                    for k in 0..n {
                        if mul(ij, k) != mul(i, mul(j, k)) {
                            return Err(GroupError::NotAGroup(GroupDefect::NotAssociative {
                                triple: (i, j, k),
                            }));
                        }
                    }
                }
            }
        } else {
            // xorshift with a fixed seed keeps the sample deterministic
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..ASSOC_SAMPLES {
                let i = (next() % n as u64) as usize;
                let j = (next() % n as u64) as usize;
                let k = (next() % n as u64) as usize;
                if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                    return Err(GroupError::NotAGroup(GroupDefect::NotAssociative {
                        triple: (i, j, k),
                    }));
                }
            }
        }

        // Inverses.
        let mut inv = vec![0u16; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if mul(i, j) == 0 {
                    found = Some(j);
                    break;
                }
            }
            match found {
                Some(j) if mul(j, i) == 0 => inv[i] = j as u16,
                _ => {
                    return Err(GroupError::NotAGroup(GroupDefect::InverseFailure {
                        element: perm[i],
                    }))
                }
            }
        }

        Ok(Group {
            n,
            names: new_names,
            table,
            inv,
            conj: OnceLock::new(),
        })
    }

    /// Group order n = |G|.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Product of two elements by index.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j] as usize
    }

    /// Inverse of an element by index.
    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Conjugate `h g h⁻¹`.
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// `x^k` for `k ≥ 0`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the element with the given display name.
    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Multiplicative order of the element at index `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut ord = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            ord += 1;
        }
        ord
    }

    /// k₂(G) = #{x : x² = e}, identity included.
    pub fn involution_count(&self) -> usize {
        (0..self.n).filter(|&x| self.mul(x, x) == 0).count()
    }

    /// Sorted multiset of element orders.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Abelian with every element of order ≤ 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && (0..self.n).all(|x| self.mul(x, x) == 0)
    }

    /// Z(G) as a sorted list of element indices.
    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Conjugacy classes, cached after the first call.
    ///
    /// Classes are in canonical order (sorted by smallest member), so class 0
    /// is always `{0}`.
    pub fn conjugacy(&self) -> &ConjugacyData {
        self.conj.get_or_init(|| {
            let n = self.n;
            let mut class_of = vec![usize::MAX; n];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for g in 0..n {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut class = Vec::new();
                let mut stack = vec![g];
                class_of[g] = id;
                while let Some(x) = stack.pop() {
                    class.push(x);
                    for h in 0..n {
                        let y = self.conjugate(h, x);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            stack.push(y);
                        }
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            let real_flags = classes
                .iter()
                .map(|c| {
                    let mut inv_class: Vec<usize> = c.iter().map(|&x| self.inv(x)).collect();
                    inv_class.sort_unstable();
                    inv_class == *c
                })
                .collect();
            ConjugacyData {
                classes,
                class_of,
                real_flags,
            }
        })
    }

    /// c(G), the number of conjugacy classes.
    pub fn class_count(&self) -> usize {
        self.conjugacy().class_count()
    }

    /// c₂(G), the number of real conjugacy classes.
    pub fn real_class_count(&self) -> usize {
        self.conjugacy().real_class_count()
    }

    /// Every class is real.
    pub fn is_ambivalent(&self) -> bool {
        let c = self.conjugacy();
        c.real_flags.iter().all(|&r| r)
    }

    /// Closure of a set of elements under multiplication, sorted.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            // products with all current members, both sides
            let snapshot: Vec<usize> = members.clone();
            for &m in &snapshot {
                for &p in &[self.mul(x, m), self.mul(m, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                        frontier.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Greedy small generating set: repeatedly add the highest-order element
    /// not yet generated.
    pub fn generating_set(&self) -> Vec<usize> {
        if self.n == 1 {
            return Vec::new();
        }
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&x| std::cmp::Reverse(self.element_order(x)));
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = vec![0usize];
        for &x in &by_order {
            if generated.binary_search(&x).is_err() {
                gens.push(x);
                generated = self.subgroup_closure(&gens);
                if generated.len() == self.n {
                    break;
                }
            }
        }
        gens
    }

    /// Whether `set` (sorted or not) forms a subgroup.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if !set.contains(&0) {
            return false;
        }
        let mut member = vec![false; self.n];
        for &x in set {
            if x >= self.n {
                return false;
            }
            member[x] = true;
        }
        set.iter()
            .all(|&x| member[self.inv(x)] && set.iter().all(|&y| member[self.mul(x, y)]))
    }
}

/// Default display names `g0..g{n-1}`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}
