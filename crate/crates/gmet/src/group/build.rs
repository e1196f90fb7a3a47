//! Constructors for the built-in group families and combinators.
//!
//! Every constructor funnels through [`Group::from_cayley_table`], so the
//! validator runs on each constructed table.

use super::{Group, GroupError, DEFAULT_ORDER_CAP};

/// Size limits applied by the builders.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum order for synthesized groups.
    pub order_cap: usize,
    /// Maximum n for `symmetric(n)` (the factorial growth dwarfs the
    /// order cap long before the cap itself is the problem).
    pub symmetric_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_ORDER_CAP,
            symmetric_max_n: 7,
        }
    }
}

impl Limits {
    pub fn check(&self, order: usize) -> Result<(), GroupError> {
        if order > self.order_cap {
            return Err(GroupError::OrderCapExceeded {
                requested: order,
                cap: self.order_cap,
            });
        }
        Ok(())
    }
}

fn build(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Group, GroupError> {
    Group::from_cayley_table(&table, names)
}

impl Group {
    /// Cyclic group Z_n with `table[i][j] = (i+j) mod n`.
    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        Limits::default().check(n)?;
        if n == 0 {
            return Err(GroupError::NotAGroup(super::GroupDefect::NoIdentity));
        }
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        build(table, names)
    }

    /// Direct product with lexicographic element indexing
    /// (`(g,h) ↦ g·|H| + h`).
    pub fn direct_product(g: &Group, h: &Group) -> Result<Group, GroupError> {
        Group::direct_product_many(&[g, h])
    }

    /// Direct product of a list of factors, indexed lexicographically and
    /// named by flat tuples.
    pub fn direct_product_many(factors: &[&Group]) -> Result<Group, GroupError> {
        assert!(!factors.is_empty());
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
        let n: usize = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o))
            .ok_or(GroupError::OrderCapExceeded {
                requested: usize::MAX,
                cap: DEFAULT_ORDER_CAP,
            })?;
        Limits::default().check(n)?;
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut coords = vec![0; orders.len()];
            for i in (0..orders.len()).rev() {
                coords[i] = idx % orders[i];
                idx /= orders[i];
            }
            coords
        };
        let encode = |coords: &[usize]| -> usize {
            coords
                .iter()
                .zip(&orders)
                .fold(0, |acc, (&c, &o)| acc * o + c)
        };
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            let a = decode(i);
            for j in 0..n {
                let b = decode(j);
                let prod: Vec<usize> = a
                    .iter()
                    .zip(&b)
                    .zip(factors)
                    .map(|((&x, &y), g)| g.mul(x, y))
                    .collect();
                table[i][j] = encode(&prod);
            }
        }
        let names = (0..n)
            .map(|i| {
                let coords = decode(i);
                let parts: Vec<&str> = coords
                    .iter()
                    .zip(factors)
                    .map(|(&c, g)| g.name(c))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        build(table, names)
    }

    /// Dihedral group D_n of order 2n: rotations `a^k` at `0..n`, reflections
    /// `a^k b` at `n..2n`. `n ∈ {1,2}` yields Z₂ and Z₂² (degenerate but
    /// allowed).
    pub fn dihedral(n: usize) -> Result<Group, GroupError> {
        assert!(n >= 1, "dihedral(n) needs n >= 1");
        Limits::default().check(2 * n)?;
        let sz = 2 * n;
        let mut table = vec![vec![0usize; sz]; sz];
        for i in 0..sz {
            for j in 0..sz {
                let (ri, fi) = (i % n, i >= n);
                let (rj, fj) = (j % n, j >= n);
                // b a = a^{-1} b
                let r = if fi { (ri + n - rj) % n } else { (ri + rj) % n };
                let f = fi ^ fj;
                table[i][j] = if f { n + r } else { r };
            }
        }
        let mut names = Vec::with_capacity(sz);
        for k in 0..n {
            names.push(rotation_name(k));
        }
        for k in 0..n {
            names.push(reflection_name(k));
        }
        build(table, names)
    }

    /// Dicyclic group Q_{4n} of order 4n (n ≥ 2): `a` of order 2n at
    /// `0..2n`, coset `a^k b` at `2n..4n`, with `b² = aⁿ`, `b⁻¹ab = a⁻¹`.
    pub fn dicyclic(n: usize) -> Result<Group, GroupError> {
        assert!(n >= 2, "dicyclic(n) needs n >= 2");
        Limits::default().check(4 * n)?;
        let m = 2 * n; // order of a
        let sz = 4 * n;
        let mut table = vec![vec![0usize; sz]; sz];
        for i in 0..sz {
            for j in 0..sz {
                let (ri, fi) = (i % m, i >= m);
                let (rj, fj) = (j % m, j >= m);
                table[i][j] = match (fi, fj) {
                    (false, false) => (ri + rj) % m,
                    (false, true) => m + (ri + rj) % m,
                    (true, false) => m + (ri + m - rj) % m,
                    // (a^k b)(a^j b) = a^{k-j+n}
                    (true, true) => (ri + m - rj + n) % m,
                };
            }
        }
        let mut names = Vec::with_capacity(sz);
        for k in 0..m {
            names.push(rotation_name(k));
        }
        for k in 0..m {
            names.push(reflection_name(k));
        }
        build(table, names)
    }

    /// Quasidihedral (semidihedral) group of order 2^n, n ≥ 4, realized as
    /// Z_{2^{n-1}} ⋊ Z₂ with the acting involution `x ↦ x^{2^{n-2} ± 1}`.
    pub fn quasidihedral(n: u32, sign: super::Sign) -> Result<Group, GroupError> {
        assert!(n >= 4, "quasidihedral(n, ±) needs n >= 4");
        let half = 1usize << (n - 1);
        Limits::default().check(2 * half)?;
        let m = match sign {
            super::Sign::Plus => (1usize << (n - 2)) + 1,
            super::Sign::Minus => (1usize << (n - 2)) - 1,
        };
        let cyc = Group::cyclic(half)?;
        let z2 = Group::cyclic(2)?;
        let phi1: Vec<usize> = (0..half).map(|x| (x * m) % half).collect();
        let phi0: Vec<usize> = (0..half).collect();
        Group::semidirect_product(&cyc, &z2, &[phi0, phi1])
    }

    /// Symmetric group S_n on `{0..n-1}`, elements in lexicographic one-line
    /// order, with the composition convention `(σ·τ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Result<Group, GroupError> {
        Group::symmetric_with(n, Limits::default())
    }

    pub fn symmetric_with(n: usize, limits: Limits) -> Result<Group, GroupError> {
        assert!(n >= 1);
        if n > limits.symmetric_max_n {
            return Err(GroupError::OrderCapExceeded {
                requested: n,
                cap: limits.symmetric_max_n,
            });
        }
        let perms = all_permutations(n);
        permutation_group_table(&perms)
    }

    /// Alternating group A_n (even permutations, lexicographic order).
    pub fn alternating(n: usize) -> Result<Group, GroupError> {
        Group::alternating_with(n, Limits::default())
    }

    pub fn alternating_with(n: usize, limits: Limits) -> Result<Group, GroupError> {
        assert!(n >= 1);
        if n > limits.symmetric_max_n {
            return Err(GroupError::OrderCapExceeded {
                requested: n,
                cap: limits.symmetric_max_n,
            });
        }
        let perms: Vec<Vec<usize>> = all_permutations(n)
            .into_iter()
            .filter(|p| perm_is_even(p))
            .collect();
        permutation_group_table(&perms)
    }

    /// SL₂(F_q) for prime q, of order q³ − q. Elements are named as matrix
    /// literals. For prime powers supply explicit field tables via
    /// [`Group::sl2_with_field`].
    pub fn sl2(q: u64) -> Result<Group, GroupError> {
        if q < 2 {
            return Err(GroupError::NotPrimePower(q));
        }
        if !is_prime(q) {
            return if is_prime_power(q) {
                Err(GroupError::MissingFieldTable(q))
            } else {
                Err(GroupError::NotPrimePower(q))
            };
        }
        let qu = q as usize;
        let add: Vec<Vec<usize>> = (0..qu)
            .map(|a| (0..qu).map(|b| (a + b) % qu).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..qu)
            .map(|a| (0..qu).map(|b| (a * b) % qu).collect())
            .collect();
        Group::sl2_with_field(q, &add, &mul)
    }

    /// SL₂ over a field given by explicit addition and multiplication tables
    /// on `0..q` with 0 and 1 the usual constants.
    pub fn sl2_with_field(
        q: u64,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
    ) -> Result<Group, GroupError> {
        let qu = q as usize;
        if add.len() != qu || mul.len() != qu {
            return Err(GroupError::BadFieldTable("table size != q".into()));
        }
        let order = qu * qu * qu - qu;
        Limits::default().check(order)?;
        let neg = |a: usize| (0..qu).find(|&b| add[a][b] == 0).unwrap();
        let sub = |a: usize, b: usize| add[a][neg(b)];
        // enumerate matrices with det 1, identity first
        let mut mats: Vec<[usize; 4]> = Vec::with_capacity(order);
        mats.push([1, 0, 0, 1]);
        for a in 0..qu {
            for b in 0..qu {
                for c in 0..qu {
                    for d in 0..qu {
                        if sub(mul[a][d], mul[b][c]) == 1 && [a, b, c, d] != [1, 0, 0, 1] {
                            mats.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        if mats.len() != order {
            return Err(GroupError::BadFieldTable(format!(
                "found {} unimodular matrices, expected {}",
                mats.len(),
                order
            )));
        }
        let index: std::collections::HashMap<[usize; 4], usize> =
            mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut table = vec![vec![0usize; order]; order];
        for (i, x) in mats.iter().enumerate() {
            for (j, y) in mats.iter().enumerate() {
                let p = [
                    add[mul[x[0]][y[0]]][mul[x[1]][y[2]]],
                    add[mul[x[0]][y[1]]][mul[x[1]][y[3]]],
                    add[mul[x[2]][y[0]]][mul[x[3]][y[2]]],
                    add[mul[x[2]][y[1]]][mul[x[3]][y[3]]],
                ];
                table[i][j] = index[&p];
            }
        }
        let names = mats
            .iter()
            .map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]))
            .collect();
        build(table, names)
    }

    /// Semidirect product G ⋊_φ H on pairs `(g,h)` with lexicographic
    /// indexing and product `(g₁,h₁)(g₂,h₂) = (g₁·φ_{h₁}(g₂), h₁h₂)`.
    ///
    /// `phi[h]` is the permutation of G's indices for the action of `h`.
    /// Each `phi[h]` is checked to be an automorphism of G and `phi` to be a
    /// homomorphism, both exhaustively.
    pub fn semidirect_product(
        g: &Group,
        h: &Group,
        phi: &[Vec<usize>],
    ) -> Result<Group, GroupError> {
        let (ng, nh) = (g.order(), h.order());
        if phi.len() != nh {
            return Err(GroupError::BadPhiTable(format!(
                "phi has {} entries for |H| = {nh}",
                phi.len()
            )));
        }
        for (hid, p) in phi.iter().enumerate() {
            if p.len() != ng {
                return Err(GroupError::BadPhiTable(format!(
                    "phi({hid}) has length {} for |G| = {ng}",
                    p.len()
                )));
            }
            let mut seen = vec![false; ng];
            for &v in p {
                if v >= ng || seen[v] {
                    return Err(GroupError::BadPhiTable(format!(
                        "phi({hid}) is not a permutation"
                    )));
                }
                seen[v] = true;
            }
            // automorphism check
            for x in 0..ng {
                for y in 0..ng {
                    if p[g.mul(x, y)] != g.mul(p[x], p[y]) {
                        return Err(GroupError::NotAnAutomorphism {
                            h: hid,
                            pair: (x, y),
                        });
                    }
                }
            }
        }
        if phi[0] != (0..ng).collect::<Vec<_>>() {
            return Err(GroupError::BadPhiTable("phi(e) is not the identity".into()));
        }
        for h1 in 0..nh {
            for h2 in 0..nh {
                let lhs = &phi[h.mul(h1, h2)];
                for x in 0..ng {
                    if lhs[x] != phi[h1][phi[h2][x]] {
                        return Err(GroupError::NotAHomomorphism { h1, h2 });
                    }
                }
            }
        }
        let n = ng.checked_mul(nh).ok_or(GroupError::OrderCapExceeded {
            requested: usize::MAX,
            cap: DEFAULT_ORDER_CAP,
        })?;
        Limits::default().check(n)?;
        let mut table = vec![vec![0usize; n]; n];
        for g1 in 0..ng {
            for h1 in 0..nh {
                let i = g1 * nh + h1;
                for g2 in 0..ng {
                    for h2 in 0..nh {
                        let j = g2 * nh + h2;
                        table[i][j] = g.mul(g1, phi[h1][g2]) * nh + h.mul(h1, h2);
                    }
                }
            }
        }
        let names = (0..n)
            .map(|i| format!("({},{})", g.name(i / nh), h.name(i % nh)))
            .collect();
        build(table, names)
    }

    /// Generalized dihedral group: abelian G extended by the inversion
    /// automorphism, G ⋊ ⟨inv⟩. The table always has order 2|G|, even when G
    /// is an elementary abelian 2-group and the extension collapses as an
    /// abstract group; use [`is_isomorphic`](super::is_isomorphic) to detect
    /// the collapse.
    pub fn generalized_dihedral(g: &Group) -> Result<Group, GroupError> {
        if !g.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let n = g.order();
        let z2 = Group::cyclic(2)?;
        let phi0: Vec<usize> = (0..n).collect();
        let phi1: Vec<usize> = (0..n).map(|x| g.inv(x)).collect();
        Group::semidirect_product(g, &z2, &[phi0, phi1])
    }

    /// Wreath product G ≀ H = Gᵐ ⋊ H where H ≤ S_m is given by generator
    /// permutations of `{0..m-1}`.
    pub fn wreath_product(
        g: &Group,
        m: usize,
        h_action_gens: &[Vec<usize>],
    ) -> Result<Group, GroupError> {
        assert!(m >= 1);
        for p in h_action_gens {
            assert_eq!(p.len(), m, "action generator degree mismatch");
        }
        // enumerate the acting subgroup of S_m by closure, identity first
        let id: Vec<usize> = (0..m).collect();
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        let mut seen: std::collections::HashSet<Vec<usize>> = elems.iter().cloned().collect();
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for q in h_action_gens {
                let composed: Vec<usize> = (0..m).map(|x| q[p[x]]).collect();
                if seen.insert(composed.clone()) {
                    elems.push(composed.clone());
                    frontier.push(composed);
                }
            }
        }
        elems[1..].sort();
        let index: std::collections::HashMap<Vec<usize>, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let k_table: Vec<Vec<usize>> = elems
            .iter()
            .map(|p| {
                elems
                    .iter()
                    .map(|q| {
                        let composed: Vec<usize> = (0..m).map(|x| p[q[x]]).collect();
                        index[&composed]
                    })
                    .collect()
            })
            .collect();
        let k_names = elems.iter().map(|p| cycle_notation(p)).collect();
        let k = build(k_table, k_names)?;

        let base_factors: Vec<&Group> = vec![g; m];
        let base = Group::direct_product_many(&base_factors)?;
        let ng = g.order();
        // decode/encode a base index as coordinates in G^m
        let decode = |mut idx: usize| -> Vec<usize> {
            let mut coords = vec![0; m];
            for i in (0..m).rev() {
                coords[i] = idx % ng;
                idx /= ng;
            }
            coords
        };
        let encode = |coords: &[usize]| -> usize { coords.iter().fold(0, |acc, &c| acc * ng + c) };
        let phi: Vec<Vec<usize>> = elems
            .iter()
            .map(|p| {
                let pinv: Vec<usize> = {
                    let mut inv = vec![0; m];
                    for (x, &px) in p.iter().enumerate() {
                        inv[px] = x;
                    }
                    inv
                };
                (0..base.order())
                    .map(|idx| {
                        let v = decode(idx);
                        let permuted: Vec<usize> = (0..m).map(|i| v[pinv[i]]).collect();
                        encode(&permuted)
                    })
                    .collect()
            })
            .collect();
        Group::semidirect_product(&base, &k, &phi)
    }
}

fn rotation_name(k: usize) -> String {
    match k {
        0 => "e".into(),
        1 => "a".into(),
        _ => format!("a{k}"),
    }
}

fn reflection_name(k: usize) -> String {
    match k {
        0 => "b".into(),
        1 => "ab".into(),
        _ => format!("a{k}b"),
    }
}

/// Cycle notation (1-based points) for a permutation in one-line form.
pub fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        for (i, c) in cycle.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&(c + 1).to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn perm_is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut parity = false;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            parity = !parity;
        }
    }
    !parity
}

fn permutation_group_table(perms: &[Vec<usize>]) -> Result<Group, GroupError> {
    // governed by symmetric_max_n rather than the order cap: S7 at 5040
    // elements is allowed even though it exceeds the default cap
    let order = perms.len();
    if order > super::MAX_ORDER {
        return Err(GroupError::OrderCapExceeded {
            requested: order,
            cap: super::MAX_ORDER,
        });
    }
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut table = vec![vec![0usize; order]; order];
    for (i, s) in perms.iter().enumerate() {
        for (j, t) in perms.iter().enumerate() {
            // (σ·τ)(x) = σ(τ(x))
            let composed: Vec<usize> = (0..s.len()).map(|x| s[t[x]]).collect();
            table[i][j] = index[composed.as_slice()];
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    build(table, names)
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
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
    true // q itself prime
}

#[cfg(test)]
mod tests {
    use super::super::{is_isomorphic, Group, Sign};

    #[test]
    fn cyclic_basics() {
        let g = Group::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        let z6 = Group::cyclic(6).unwrap();
        assert_eq!(z6.mul(4, 5), 3);
        assert_eq!(z6.inv(2), 4);
    }

    #[test]
    fn products() {
        let z2 = Group::cyclic(2).unwrap();
        let z3 = Group::cyclic(3).unwrap();
        let p = Group::direct_product(&z2, &z3).unwrap();
        assert_eq!(p.order(), 6);
        assert!(is_isomorphic(&p, &Group::cyclic(6).unwrap()).unwrap());
        let klein = Group::direct_product(&z2, &z2).unwrap();
        assert_eq!(klein.involution_count(), 4);
        assert!(!is_isomorphic(&klein, &Group::cyclic(4).unwrap()).unwrap());
    }

    #[test]
    fn dihedral_family() {
        let d3 = Group::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        assert!(is_isomorphic(&d3, &Group::symmetric(3).unwrap()).unwrap());
        assert_eq!(Group::dihedral(4).unwrap().involution_count(), 6);
        assert!(Group::dihedral(2).unwrap().is_abelian());
    }

    #[test]
    fn dicyclic_family() {
        let q8 = Group::dicyclic(2).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.involution_count(), 2);
        let q12 = Group::dicyclic(3).unwrap();
        assert_eq!(q12.class_count(), 6);
        assert_eq!(Group::dicyclic(4).unwrap().order(), 16);
    }

    #[test]
    fn quasidihedral_family() {
        let minus = Group::quasidihedral(4, Sign::Minus).unwrap();
        assert_eq!(minus.order(), 16);
        assert_eq!(minus.involution_count(), 6);
        assert_eq!(minus.class_count(), 7);
        let plus = Group::quasidihedral(4, Sign::Plus).unwrap();
        assert_eq!(plus.involution_count(), 4);
        assert_eq!(plus.class_count(), 10);
    }

    #[test]
    fn symmetric_alternating() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        let s4 = Group::symmetric(4).unwrap();
        assert_eq!(s4.involution_count(), 10);
        let a4 = Group::alternating(4).unwrap();
        assert_eq!(a4.class_count(), 4);
        // composition convention: (σ·τ)(x) = σ(τ(x))
        let t12 = s3.index_of_name("(1 2)").unwrap();
        let t23 = s3.index_of_name("(2 3)").unwrap();
        // (1 2)∘(2 3) maps 3→2→1 … = (1 3 2)? apply right first: 1→1→2, 2→3→3, 3→2→1
        assert_eq!(s3.name(s3.mul(t12, t23)), "(1 2 3)");
    }

    #[test]
    fn sl2_small() {
        let s = Group::sl2(2).unwrap();
        assert_eq!(s.order(), 6);
        assert!(is_isomorphic(&s, &Group::symmetric(3).unwrap()).unwrap());
        let t = Group::sl2(3).unwrap();
        assert_eq!(t.order(), 24);
        assert_eq!(t.involution_count(), 2);
        assert_eq!(t.class_count(), 7);
        assert!(matches!(
            Group::sl2(6),
            Err(super::super::GroupError::NotPrimePower(6))
        ));
        assert!(matches!(
            Group::sl2(9),
            Err(super::super::GroupError::MissingFieldTable(9))
        ));
    }

    #[test]
    fn sl2_with_explicit_field_f4() {
        // F4 = {0, 1, x, x+1} with x² = x + 1
        let add = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let mul = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 3, 1],
            vec![0, 3, 1, 2],
        ];
        let g = Group::sl2_with_field(4, &add, &mul).unwrap();
        assert_eq!(g.order(), 60);
        assert!(is_isomorphic(&g, &Group::alternating(5).unwrap()).unwrap());
    }

    #[test]
    fn semidirect_validation() {
        let z4 = Group::cyclic(4).unwrap();
        let z2 = Group::cyclic(2).unwrap();
        // identity phi gives the direct product
        let phi0: Vec<usize> = (0..4).collect();
        let p = Group::semidirect_product(&z4, &z2, &[phi0.clone(), phi0.clone()]).unwrap();
        assert!(is_isomorphic(&p, &Group::direct_product(&z4, &z2).unwrap()).unwrap());
        // a non-automorphism is rejected
        let bad = vec![0, 2, 1, 3];
        assert!(matches!(
            Group::semidirect_product(&z4, &z2, &[phi0.clone(), bad]),
            Err(super::super::GroupError::NotAnAutomorphism { h: 1, .. })
        ));
        // inversion twice is fine, but a phi that is not a homomorphism fails
        let inv: Vec<usize> = (0..4).map(|x| z4.inv(x)).collect();
        assert!(Group::semidirect_product(&z4, &z2, &[phi0.clone(), inv.clone()]).is_ok());
        let z3 = Group::cyclic(3).unwrap();
        let inv3: Vec<usize> = (0..4).map(|x| z4.inv(x)).collect();
        // phi: Z3 -> Aut(Z4) sending 1 ↦ inversion cannot be a homomorphism
        assert!(matches!(
            Group::semidirect_product(&z4, &z3, &[phi0.clone(), inv3.clone(), phi0.clone()]),
            Err(super::super::GroupError::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn generalized_dihedral_cases() {
        let z3 = Group::cyclic(3).unwrap();
        let gd3 = Group::generalized_dihedral(&z3).unwrap();
        assert!(is_isomorphic(&gd3, &Group::dihedral(3).unwrap()).unwrap());
        let z2 = Group::cyclic(2).unwrap();
        let gd2 = Group::generalized_dihedral(&z2).unwrap();
        assert_eq!(gd2.order(), 4);
        assert!(gd2.is_abelian());
        let z4xz2 =
            Group::direct_product(&Group::cyclic(4).unwrap(), &Group::cyclic(2).unwrap()).unwrap();
        let gd = Group::generalized_dihedral(&z4xz2).unwrap();
        let d4xz2 = Group::direct_product(&Group::dihedral(4).unwrap(), &Group::cyclic(2).unwrap())
            .unwrap();
        assert!(is_isomorphic(&gd, &d4xz2).unwrap());
        assert!(matches!(
            Group::generalized_dihedral(&Group::symmetric(3).unwrap()),
            Err(super::super::GroupError::NotAbelian)
        ));
    }

    #[test]
    fn wreath_products() {
        let z2 = Group::cyclic(2).unwrap();
        let w = Group::wreath_product(&z2, 2, &[vec![1, 0]]).unwrap();
        assert!(is_isomorphic(&w, &Group::dihedral(4).unwrap()).unwrap());
        // S2 ≀ S3 has order 48
        let s3_gens = vec![vec![1, 0, 2], vec![1, 2, 0]];
        let w2 = Group::wreath_product(&z2, 3, &s3_gens).unwrap();
        assert_eq!(w2.order(), 48);
        // Z2 ≀ (Z2×Z2) has order 64
        let klein_gens = vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]];
        let w3 = Group::wreath_product(&z2, 4, &klein_gens).unwrap();
        assert_eq!(w3.order(), 64);
    }
}
