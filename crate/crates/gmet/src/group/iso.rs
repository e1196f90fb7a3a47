//! Isomorphism testing for small groups.
//!
//! A fast fingerprint (order, abelian flag, element-order multiset, |Z(G)|,
//! c(G), c₂(G), k₂(G)) filters most pairs; the rest are decided by mapping a
//! greedy generating set onto candidate images filtered by element order and
//! class size, with backtracking over partial homomorphism closures.

use super::{Group, GroupError, DEFAULT_ISO_CAP};

/// Cheap isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_orders: Vec<usize>,
    pub center_size: usize,
    pub class_count: usize,
    pub real_class_count: usize,
    pub involution_count: usize,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders: g.element_orders(),
        center_size: g.center().len(),
        class_count: g.class_count(),
        real_class_count: g.real_class_count(),
        involution_count: g.involution_count(),
    }
}

pub fn is_isomorphic(g: &Group, h: &Group) -> Result<bool, GroupError> {
    is_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_with_cap(g: &Group, h: &Group, cap: usize) -> Result<bool, GroupError> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > cap {
        return Err(GroupError::OrderCapExceeded {
            requested: g.order(),
            cap,
        });
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(false);
    }
    let mut found = false;
    for_each_isomorphism(g, h, &mut |_map| {
        found = true;
        false // stop at the first one
    });
    Ok(found)
}

/// Invoke `visit` with every isomorphism G → H (as an image array over G's
/// indices). `visit` returns `false` to stop the search early.
///
/// Callers must ensure the orders match; fingerprint filtering is the
/// caller's job when speed matters.
pub fn for_each_isomorphism(g: &Group, h: &Group, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.order();
    if n != h.order() {
        return;
    }
    if n == 1 {
        visit(&[0]);
        return;
    }
    let gens = g.generating_set();
    // per-element invariant: (element order, conjugacy class size)
    let inv_g: Vec<(usize, usize)> = (0..n)
        .map(|x| {
            (
                g.element_order(x),
                g.conjugacy().classes[g.conjugacy().class_of[x]].len(),
            )
        })
        .collect();
    let inv_h: Vec<(usize, usize)> = (0..n)
        .map(|x| {
            (
                h.element_order(x),
                h.conjugacy().classes[h.conjugacy().class_of[x]].len(),
            )
        })
        .collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&ge| (0..n).filter(|&he| inv_h[he] == inv_g[ge]).collect())
        .collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut mapped: Vec<usize> = vec![0]; // g-elements with images, closed under product

    search(
        g,
        h,
        &gens,
        &candidates,
        0,
        &mut map,
        &mut used,
        &mut mapped,
        visit,
    );
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Group,
    h: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    mapped: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == gens.len() {
        debug_assert_eq!(mapped.len(), g.order());
        return visit(map);
    }
    let ge = gens[depth];
    for &he in &candidates[depth] {
        if used[he] {
            continue;
        }
        let mut trail: Vec<usize> = Vec::new();
        if close(g, h, ge, he, map, used, mapped, &mut trail)
            && !search(g, h, gens, candidates, depth + 1, map, used, mapped, visit)
        {
            rollback(map, used, mapped, &trail);
            return false;
        }
        rollback(map, used, mapped, &trail);
    }
    true
}

/// Extend the partial map with `map[ge] = he` and close it under products.
/// Returns false on any conflict (non-homomorphism or non-injectivity);
/// `trail` collects the g-elements assigned during this extension.
#[allow(clippy::too_many_arguments)]
fn close(
    g: &Group,
    h: &Group,
    ge: usize,
    he: usize,
    map: &mut [usize],
    used: &mut [bool],
    mapped: &mut Vec<usize>,
    trail: &mut Vec<usize>,
) -> bool {
    if map[ge] != usize::MAX {
        return map[ge] == he;
    }
    if used[he] {
        return false;
    }
    map[ge] = he;
    used[he] = true;
    mapped.push(ge);
    trail.push(ge);
    let mut queue_idx = mapped.len() - 1;
    while queue_idx < mapped.len() {
        let a = mapped[queue_idx];
        queue_idx += 1;
        // products with every currently mapped element, both sides
        let mut i = 0;
        while i < mapped.len() {
            let b = mapped[i];
            i += 1;
            for (p, q) in [
                (g.mul(a, b), h.mul(map[a], map[b])),
                (g.mul(b, a), h.mul(map[b], map[a])),
            ] {
                if map[p] == usize::MAX {
                    if used[q] {
                        return false;
                    }
                    map[p] = q;
                    used[q] = true;
                    mapped.push(p);
                    trail.push(p);
                } else if map[p] != q {
                    return false;
                }
            }
        }
    }
    true
}

fn rollback(map: &mut [usize], used: &mut [bool], mapped: &mut Vec<usize>, trail: &[usize]) {
    for &x in trail.iter().rev() {
        used[map[x]] = false;
        map[x] = usize::MAX;
        debug_assert_eq!(*mapped.last().unwrap(), x);
        mapped.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::super::Group;
    use super::*;

    #[test]
    fn cyclic_vs_product() {
        let z6 = Group::cyclic(6).unwrap();
        let p =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(3).unwrap()).unwrap();
        assert!(is_isomorphic(&z6, &p).unwrap());
        let z4 = Group::cyclic(4).unwrap();
        let klein =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap();
        assert!(!is_isomorphic(&z4, &klein).unwrap());
    }

    #[test]
    fn d4_vs_q8() {
        let d4 = Group::dihedral(4).unwrap();
        let q8 = Group::dicyclic(2).unwrap();
        assert!(!is_isomorphic(&d4, &q8).unwrap());
        assert!(is_isomorphic(&d4, &d4).unwrap());
    }

    #[test]
    fn automorphism_count_of_klein() {
        let klein =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap();
        let mut count = 0;
        for_each_isomorphism(&klein, &klein, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 6); // |GL(2,2)| = 6
    }

    #[test]
    fn cap_is_enforced() {
        let g = Group::cyclic(129).unwrap();
        assert!(matches!(
            is_isomorphic(&g, &g),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }
}
