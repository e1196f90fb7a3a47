//! Symmetry groups of metric groups via edge-colored graph automorphisms.
//!
//! The distance graph of `(G, d)` is the complete graph on G's elements with
//! the edge `{x, y}` colored by the partition block of `x·y⁻¹`. The symmetry
//! group Γ(G, d) — all permutations of G preserving d — is exactly the
//! color-preserving automorphism group of that graph, and equals the
//! intersection of the Cayley-graph automorphism groups over the nonzero
//! blocks. The search below works directly on the colored complete graph;
//! the Cayley intersection form is kept as a test oracle.

mod perm;

pub use perm::{compose, identity, invert, is_identity, is_permutation, Perm, PermGroup};

use num_bigint::BigUint;
use thiserror::Error;

use crate::group::{cycle_notation, for_each_isomorphism, Group, GroupError};
use crate::partitions::{is_unitary_symmetric, BlockPartition};

/// Default cap on the vertex count for the automorphism search.
pub const DEFAULT_SEARCH_CAP: usize = 24;
/// Default cap on |G| for the full Aut(G) search.
pub const DEFAULT_AUT_CAP: usize = 24;
/// Default cap on |P| for reconstructing an abstract group from a PermGroup.
pub const DEFAULT_IDENTIFY_CAP: usize = 128;

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("search cap exceeded: {n} > {cap} vertices")]
    SearchCapExceeded { n: usize, cap: usize },
    #[error("connection set is not symmetric (element {0})")]
    NotSymmetricSet(usize),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("partition is not unitary symmetric")]
    NotUnitarySymmetric,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("order cap exceeded: {order} > {cap}")]
    OrderCapExceeded { order: BigUint, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Complete graph on `0..n` with symmetric edge colors; the diagonal is the
/// sentinel color 0. For Cayley graphs the colors are `{0, 1}` with 0
/// meaning "no edge".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    color: Vec<u16>,
    num_colors: usize,
}

impl ColoredGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of colors including the sentinel 0.
    pub fn color_count(&self) -> usize {
        self.num_colors
    }

    #[inline]
    pub fn color(&self, x: usize, y: usize) -> usize {
        self.color[x * self.n + y] as usize
    }

    /// Multiset of colors over unordered vertex pairs, indexed by color.
    pub fn edge_color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.num_colors];
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                counts[self.color(x, y)] += 1;
            }
        }
        counts
    }
}

/// The Cayley graph Cay(G, S) as a two-colored complete graph: edge `{g,h}`
/// iff `g·h⁻¹ ∈ S`. Requires `S = S⁻¹` and `e ∉ S`.
pub fn cayley_graph(g: &Group, s: &[usize]) -> Result<ColoredGraph, SymmetryError> {
    let n = g.order();
    let mut in_s = vec![false; n];
    for &x in s {
        if x == 0 {
            return Err(SymmetryError::ContainsIdentity);
        }
        in_s[x] = true;
    }
    for &x in s {
        if !in_s[g.inv(x)] {
            return Err(SymmetryError::NotSymmetricSet(x));
        }
    }
    let mut color = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            if x != y && in_s[g.mul(x, g.inv(y))] {
                color[x * n + y] = 1;
            }
        }
    }
    Ok(ColoredGraph {
        n,
        color,
        num_colors: 2,
    })
}

/// The distance (partition) graph of a unitary symmetric partition: the edge
/// `{x, y}` gets the block index of `x·y⁻¹`.
pub fn distance_graph(g: &Group, p: &BlockPartition) -> Result<ColoredGraph, SymmetryError> {
    if !is_unitary_symmetric(g, p) {
        return Err(SymmetryError::NotUnitarySymmetric);
    }
    let n = g.order();
    let mut color = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            if x != y {
                color[x * n + y] = p.block_of(g.mul(x, g.inv(y))) as u16;
            }
        }
    }
    Ok(ColoredGraph {
        n,
        color,
        num_colors: p.num_blocks(),
    })
}

/// Color-preserving automorphism group of an edge-colored complete graph,
/// with the default search cap.
pub fn colored_automorphism_group(graph: &ColoredGraph) -> Result<PermGroup, SymmetryError> {
    colored_automorphism_group_capped(graph, DEFAULT_SEARCH_CAP)
}

/// As [`colored_automorphism_group`] with an explicit vertex cap.
///
/// The algorithm: iterated color-degree partition refinement fixes the
/// candidate cell of every vertex; the stabilizer chain of the automorphism
/// group over the base `0, 1, …, n−1` is then built by backtracking — for
/// each base vertex, each candidate image is settled by an existence search
/// that extends the partial map vertex by vertex under full pairwise color
/// consistency. Generators are the discovered coset representatives
/// (deterministic), and the order is the product of the orbit sizes.
pub fn colored_automorphism_group_capped(
    graph: &ColoredGraph,
    cap: usize,
) -> Result<PermGroup, SymmetryError> {
    let n = graph.vertex_count();
    if n > cap {
        return Err(SymmetryError::SearchCapExceeded { n, cap });
    }
    if n <= 1 {
        return Ok(PermGroup::trivial(n.max(1)));
    }
    // Hamming shortcut: a monochromatic off-diagonal means the full
    // symmetric group; refinement has nothing to cut there.
    let first = graph.color(0, 1);
    let monochromatic = (0..n).all(|x| (0..n).all(|y| x == y || graph.color(x, y) == first));
    if monochromatic {
        let mut swap = identity(n);
        swap.swap(0, 1);
        let cycle: Perm = (1..n).chain(std::iter::once(0)).collect();
        let gens = if n == 2 {
            vec![swap]
        } else {
            vec![swap, cycle]
        };
        return Ok(PermGroup::new(n, gens));
    }

    let cell_of = stable_refinement_cells(graph);
    let mut generators: Vec<Perm> = Vec::new();

    // Stabilizer chain over the base 0, 1, ..., n-1: at level v, the orbit
    // of v under the stabilizer of 0..v-1 is collected together with coset
    // representatives.
    for v in 0..n {
        for w in 0..n {
            if w == v || cell_of[w] != cell_of[v] {
                continue;
            }
            // look for an automorphism fixing 0..v-1 pointwise, sending v to w
            let mut map: Vec<usize> = vec![usize::MAX; n];
            let mut used = vec![false; n];
            let mut consistent = true;
            for u in 0..v {
                map[u] = u;
                used[u] = true;
            }
            // prefix consistency for v -> w
            for u in 0..v {
                if graph.color(u, v) != graph.color(u, w) {
                    consistent = false;
                    break;
                }
            }
            if !consistent || used[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend_automorphism(graph, &cell_of, &mut map, &mut used, v + 1) {
                generators.push(map);
            }
        }
    }
    Ok(PermGroup::new(n, generators))
}

/// Depth-first existence search: assign images for vertices `from..n` so
/// that all pairwise colors with already-assigned vertices are preserved.
fn extend_automorphism(
    graph: &ColoredGraph,
    cell_of: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    from: usize,
) -> bool {
    let n = graph.vertex_count();
    if from == n {
        return true;
    }
    if map[from] != usize::MAX {
        return extend_automorphism(graph, cell_of, map, used, from + 1);
    }
    for w in 0..n {
        if used[w] || cell_of[w] != cell_of[from] {
            continue;
        }
        let ok =
            (0..n).all(|u| map[u] == usize::MAX || graph.color(u, from) == graph.color(map[u], w));
        if !ok {
            continue;
        }
        map[from] = w;
        used[w] = true;
        if extend_automorphism(graph, cell_of, map, used, from + 1) {
            return true;
        }
        map[from] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Iterated color-degree refinement: vertices are split by the multiset of
/// colors they see into each current cell, until stable. Returns the final
/// cell index per vertex (any automorphism preserves these cells).
fn stable_refinement_cells(graph: &ColoredGraph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut cell_of = vec![0usize; n];
    let mut num_cells = 1;
    loop {
        // signature: for each cell, a count per color
        let mut sigs: Vec<Vec<u32>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut sig = vec![0u32; num_cells * graph.color_count()];
            for u in 0..n {
                if u != v {
                    sig[cell_of[u] * graph.color_count() + graph.color(v, u)] += 1;
                }
            }
            sigs.push(sig);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            cell_of[a]
                .cmp(&cell_of[b])
                .then_with(|| sigs[a].cmp(&sigs[b]))
                .then(a.cmp(&b))
        });
        let mut new_cell = vec![0usize; n];
        let mut cells = 0;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 {
                let prev = order[i - 1];
                if cell_of[prev] != cell_of[v] || sigs[prev] != sigs[v] {
                    cells += 1;
                }
            }
            new_cell[v] = cells;
        }
        cells += 1;
        if cells == num_cells {
            return new_cell;
        }
        cell_of = new_cell;
        num_cells = cells;
    }
}

/// Γ(G, d) for any metric d inducing the partition `p`: the automorphism
/// group of the distance graph.
pub fn symmetry_group(g: &Group, p: &BlockPartition) -> Result<PermGroup, SymmetryError> {
    symmetry_group_capped(g, p, DEFAULT_SEARCH_CAP)
}

pub fn symmetry_group_capped(
    g: &Group,
    p: &BlockPartition,
    cap: usize,
) -> Result<PermGroup, SymmetryError> {
    let graph = distance_graph(g, p)?;
    colored_automorphism_group_capped(&graph, cap)
}

/// G_R ≤ S_G: the right translations `σ_g(x) = x·g`, generated by the images
/// of a generating set of G.
pub fn right_regular_embedding(g: &Group) -> PermGroup {
    let n = g.order();
    let gens = g
        .generating_set()
        .into_iter()
        .map(|h| (0..n).map(|x| g.mul(x, h)).collect())
        .collect();
    PermGroup::new(n, gens)
}

/// 𝔻(G) = ⟨G_R, inversion⟩ for abelian G.
pub fn dihedral_extension(g: &Group) -> Result<PermGroup, SymmetryError> {
    if !g.is_abelian() {
        return Err(SymmetryError::NotAbelian);
    }
    let n = g.order();
    let mut gens: Vec<Perm> = right_regular_embedding(g).generators().to_vec();
    gens.push((0..n).map(|x| g.inv(x)).collect());
    Ok(PermGroup::new(n, gens))
}

/// Aut(G) as permutations of the element indices, by backtracking over
/// generator images. Capped because the search enumerates every
/// automorphism.
pub fn automorphism_group(g: &Group) -> Result<PermGroup, SymmetryError> {
    automorphism_group_capped(g, DEFAULT_AUT_CAP)
}

pub fn automorphism_group_capped(g: &Group, cap: usize) -> Result<PermGroup, SymmetryError> {
    if g.order() > cap {
        return Err(SymmetryError::OrderCapExceeded {
            order: BigUint::from(g.order()),
            cap,
        });
    }
    let mut autos: Vec<Perm> = Vec::new();
    for_each_isomorphism(g, g, &mut |map| {
        autos.push(map.to_vec());
        true
    });
    Ok(PermGroup::new(g.order(), autos))
}

/// Classification of an automorphism relative to the conjugacy structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismClass {
    /// σ = conjugation by some fixed h.
    Inner,
    /// σ(g) ∈ C_g for all g (but not inner).
    ClassPreserving,
    /// σ(g) ∈ C_{g⁻¹} for all g.
    ClassInverting,
    /// σ(g) ∈ C_g ∪ C_{g⁻¹} for all g, mixing both kinds.
    Ecp,
    General,
}

/// Classify a permutation of G's indices that is assumed to be an
/// automorphism of G.
pub fn classify_automorphism(g: &Group, sigma: &[usize]) -> AutomorphismClass {
    let n = g.order();
    let inner = (0..n).any(|h| (0..n).all(|x| sigma[x] == g.conjugate(h, x)));
    if inner {
        return AutomorphismClass::Inner;
    }
    let conj = g.conjugacy();
    let preserves = |x: usize| conj.class_of[sigma[x]] == conj.class_of[x];
    let inverts = |x: usize| conj.class_of[sigma[x]] == conj.class_of[g.inv(x)];
    if (0..n).all(preserves) {
        return AutomorphismClass::ClassPreserving;
    }
    if (0..n).all(inverts) {
        return AutomorphismClass::ClassInverting;
    }
    if (0..n).all(|x| preserves(x) || inverts(x)) {
        return AutomorphismClass::Ecp;
    }
    AutomorphismClass::General
}

/// Reconstruct the abstract group of a PermGroup by enumerating its
/// elements (capped) and building their composition table.
pub fn perm_group_to_group(p: &PermGroup, cap: usize) -> Result<Group, SymmetryError> {
    let order = p.order();
    if order > BigUint::from(cap) {
        return Err(SymmetryError::OrderCapExceeded { order, cap });
    }
    let mut elems = p.elements_capped(cap).expect("order checked above");
    elems.sort();
    let index: std::collections::HashMap<Perm, usize> = elems
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    let names = elems.iter().map(|e| cycle_notation(e)).collect();
    Group::from_cayley_table(&table, names).map_err(SymmetryError::Group)
}

/// First candidate isomorphic to the generated group, if any. Candidates
/// are `(name, group)` pairs; the permutation group is reconstructed through
/// its regular elements (capped at [`DEFAULT_IDENTIFY_CAP`]).
pub fn identify_group(
    p: &PermGroup,
    candidates: &[(String, Group)],
) -> Result<Option<String>, SymmetryError> {
    let abstract_group = perm_group_to_group(p, DEFAULT_IDENTIFY_CAP)?;
    for (name, cand) in candidates {
        if cand.order() != abstract_group.order() {
            continue;
        }
        match crate::group::is_isomorphic(&abstract_group, cand) {
            Ok(true) => return Ok(Some(name.clone())),
            Ok(false) => continue,
            Err(GroupError::OrderCapExceeded { requested, cap }) => {
                return Err(SymmetryError::OrderCapExceeded {
                    order: BigUint::from(requested),
                    cap,
                })
            }
            Err(e) => return Err(SymmetryError::Group(e)),
        }
    }
    Ok(None)
}

/// Graphviz text for a colored graph: one edge per unordered pair with a
/// `color_index` attribute and a deterministic palette; diagonal and
/// 0-colored pairs are omitted.
pub fn export_dot(graph: &ColoredGraph, names: &[String]) -> String {
    const PALETTE: [&str; 12] = [
        "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
        "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6",
    ];
    let n = graph.vertex_count();
    let mut out = String::from("graph distances {\n  node [shape=circle];\n");
    for v in 0..n {
        let label = names.get(v).map(String::as_str).unwrap_or("?");
        out.push_str(&format!(
            "  v{v} [label=\"{}\"];\n",
            label.replace('"', "\\\"")
        ));
    }
    for x in 0..n {
        for y in (x + 1)..n {
            let c = graph.color(x, y);
            if c == 0 {
                continue;
            }
            let rgb = PALETTE[(c - 1) % PALETTE.len()];
            out.push_str(&format!(
                "  v{x} -- v{y} [color_index={c}, color=\"{rgb}\"];\n"
            ));
        }
    }
    out.push_str("}\n");
    out
}
