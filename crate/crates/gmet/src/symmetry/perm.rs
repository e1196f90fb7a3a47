//! Permutation groups with a base-and-strong-generators stabilizer chain.
//!
//! Permutations are one-line image arrays: `p[i]` is the image of point `i`.
//! Composition follows the crate convention `(σ·τ)(x) = σ(τ(x))`.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

pub type Perm = Vec<usize>;

pub fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// `compose(a, b)` applies b first: `(a∘b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &v in p {
        if v >= degree || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// transversal[p] = permutation mapping `base` to `p`, when p is in the orbit
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            i += 1;
            let t_p = self.transversal[p].clone().unwrap();
            for s in &self.gens {
                let q = s[p];
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(compose(s, &t_p));
                    self.orbit.push(q);
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if !is_identity(g) {
                chain.add_generator(0, g.clone());
            }
        }
        chain
    }

    /// Sift from `level` down; returns the residue (identity iff contained).
    fn sift_from(&self, level: usize, mut p: Perm) -> Perm {
        for lvl in &self.levels[level..] {
            if is_identity(&p) {
                return p;
            }
            let q = p[lvl.base];
            match &lvl.transversal[q] {
                None => return p,
                Some(t) => p = compose(&invert(t), &p),
            }
        }
        p
    }

    fn add_generator(&mut self, level: usize, g: Perm) {
        if is_identity(&g) {
            return;
        }
        if level == self.levels.len() {
            let base = g
                .iter()
                .enumerate()
                .find(|(i, &v)| *i != v)
                .map(|(i, _)| i)
                .unwrap();
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[level].gens.push(g);
        self.verify_level(level);
    }

    /// Re-establish the chain condition at `level`: every Schreier generator
    /// must sift to the identity through the lower levels.
    fn verify_level(&mut self, level: usize) {
        'restart: loop {
            self.levels[level].recompute_orbit(self.degree);
            let orbit = self.levels[level].orbit.clone();
            let gens = self.levels[level].gens.clone();
            for &p in &orbit {
                let t_p = self.levels[level].transversal[p].clone().unwrap();
                for s in &gens {
                    let target = self.levels[level].transversal[s[p]].clone().unwrap();
                    let schreier = compose(&invert(&target), &compose(s, &t_p));
                    if is_identity(&schreier) {
                        continue;
                    }
                    let residue = self.sift_from(level + 1, schreier);
                    if !is_identity(&residue) {
                        self.add_generator(level + 1, residue);
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> BigUint {
        let mut ord = BigUint::one();
        for lvl in &self.levels {
            ord *= BigUint::from(lvl.orbit.len());
        }
        ord
    }

    fn contains(&self, p: &[usize]) -> bool {
        if p.len() != self.degree || !is_permutation(p, self.degree) {
            return false;
        }
        is_identity(&self.sift_from(0, p.to_vec()))
    }

    /// All elements, as transversal products, or None when more than `cap`.
    fn elements_capped(&self, cap: usize) -> Option<Vec<Perm>> {
        let mut elems = vec![identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * lvl.orbit.len());
            for &p in &lvl.orbit {
                let t = lvl.transversal[p].as_ref().unwrap();
                for e in &elems {
                    if next.len() >= cap {
                        return None;
                    }
                    next.push(compose(t, e));
                }
            }
            elems = next;
        }
        Some(elems)
    }
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain providing exact order, membership, and element enumeration.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Build from generators; panics if a generator is not a permutation of
    /// the stated degree.
    pub fn new(degree: usize, gens: Vec<Perm>) -> PermGroup {
        for g in &gens {
            assert!(
                is_permutation(g, degree),
                "invalid generator for degree {degree}"
            );
        }
        PermGroup {
            degree,
            gens,
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.gens))
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.chain().contains(p)
    }

    /// All elements if the order is at most `cap`, None otherwise.
    pub fn elements_capped(&self, cap: usize) -> Option<Vec<Perm>> {
        if self.order() > BigUint::from(cap) {
            return None;
        }
        self.chain().elements_capped(cap)
    }
}
