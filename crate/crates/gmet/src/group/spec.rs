//! Parsed group-construction expressions.
//!
//! A [`GroupSpec`] names one of the built-in families or combines
//! sub-expressions with direct products, semidirect products (with an
//! explicit phi table), generalized dihedral extensions, and wreath
//! products. The text syntax lives in [`crate::io`].

use std::path::PathBuf;

use super::{Group, GroupError, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Source of the phi table of a semidirect product: inline data or a JSON
/// sidecar file `{"phi": [[...], ...]}` mapping each H-index to a
/// permutation of G's indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiTable {
    Inline(Vec<Vec<usize>>),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// D_n, order 2n.
    Dihedral(usize),
    /// Dicyclic of order 4n (so `Dicyclic(2)` is Q₈).
    Dicyclic(usize),
    /// Order 2^n, n ≥ 4.
    Quasidihedral(u32, Sign),
    Symmetric(usize),
    Alternating(usize),
    Sl2(u64),
    FromFile(PathBuf),
    DirectProduct(Vec<GroupSpec>),
    SemidirectProduct {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        phi: PhiTable,
    },
    GeneralizedDihedral(Box<GroupSpec>),
    WreathProduct {
        base: Box<GroupSpec>,
        copies: usize,
        action: Box<GroupSpec>,
    },
}

impl GroupSpec {
    /// Construct the group, enforcing `limits` on synthesized orders.
    pub fn build(&self, limits: &Limits) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => {
                limits.check(*n)?;
                Group::cyclic(*n)
            }
            GroupSpec::Dihedral(n) => {
                limits.check(2 * n)?;
                Group::dihedral(*n)
            }
            GroupSpec::Dicyclic(n) => {
                if *n < 2 {
                    return Err(GroupError::BadNames(format!(
                        "dicyclic parameter {n} < 2 (smallest is Q8)"
                    )));
                }
                limits.check(4 * n)?;
                Group::dicyclic(*n)
            }
            GroupSpec::Quasidihedral(n, sign) => {
                if *n < 4 {
                    return Err(GroupError::BadNames(format!(
                        "quasidihedral needs n >= 4, got {n}"
                    )));
                }
                limits.check(1usize << *n)?;
                Group::quasidihedral(*n, *sign)
            }
            GroupSpec::Symmetric(n) => Group::symmetric_with(*n, *limits),
            GroupSpec::Alternating(n) => Group::alternating_with(*n, *limits),
            GroupSpec::Sl2(q) => Group::sl2(*q),
            GroupSpec::FromFile(path) => super::load_cayley_table(path),
            GroupSpec::DirectProduct(parts) => {
                let groups: Vec<Group> = parts
                    .iter()
                    .map(|p| p.build(limits))
                    .collect::<Result<_, _>>()?;
                let refs: Vec<&Group> = groups.iter().collect();
                let product = Group::direct_product_many(&refs)?;
                limits.check(product.order())?;
                Ok(product)
            }
            GroupSpec::SemidirectProduct {
                normal,
                acting,
                phi,
            } => {
                let g = normal.build(limits)?;
                let h = acting.build(limits)?;
                let table = match phi {
                    PhiTable::Inline(t) => t.clone(),
                    PhiTable::File(path) => load_phi_table(path)?,
                };
                limits.check(g.order().saturating_mul(h.order()))?;
                Group::semidirect_product(&g, &h, &table)
            }
            GroupSpec::GeneralizedDihedral(inner) => {
                let g = inner.build(limits)?;
                limits.check(2 * g.order())?;
                Group::generalized_dihedral(&g)
            }
            GroupSpec::WreathProduct {
                base,
                copies,
                action,
            } => {
                let g = base.build(limits)?;
                let gens = action_generators(action, *copies)?;
                let total =
                    g.order()
                        .checked_pow(*copies as u32)
                        .ok_or(GroupError::OrderCapExceeded {
                            requested: usize::MAX,
                            cap: limits.order_cap,
                        })?;
                limits.check(total)?;
                Group::wreath_product(&g, *copies, &gens)
            }
        }
    }

    /// Display string in the CLI syntax (best effort for file-backed parts).
    pub fn to_spec_string(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Dihedral(n) => format!("D{n}"),
            GroupSpec::Dicyclic(n) => format!("Q{}", 4 * n),
            GroupSpec::Quasidihedral(n, s) => format!("QD{n}{s}"),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Sl2(q) => format!("SL2({q})"),
            GroupSpec::FromFile(p) => format!("file:{}", p.display()),
            GroupSpec::DirectProduct(parts) => parts
                .iter()
                .map(|p| match p {
                    GroupSpec::DirectProduct(_) | GroupSpec::SemidirectProduct { .. } => {
                        format!("({})", p.to_spec_string())
                    }
                    _ => p.to_spec_string(),
                })
                .collect::<Vec<_>>()
                .join("x"),
            GroupSpec::SemidirectProduct {
                normal,
                acting,
                phi,
            } => {
                let phi_str = match phi {
                    PhiTable::Inline(_) => "<inline>".to_string(),
                    PhiTable::File(p) => format!("file:{}", p.display()),
                };
                format!(
                    "SD({},{},{})",
                    normal.to_spec_string(),
                    acting.to_spec_string(),
                    phi_str
                )
            }
            GroupSpec::GeneralizedDihedral(g) => format!("GD({})", g.to_spec_string()),
            GroupSpec::WreathProduct {
                base,
                copies,
                action,
            } => {
                format!(
                    "W({},{},{})",
                    base.to_spec_string(),
                    copies,
                    action.to_spec_string()
                )
            }
        }
    }
}

/// Natural permutation generators on `{0..m-1}` for an atom acting group:
/// S_m and A_m act naturally (the parameter must equal m), C_k as the
/// m-cycle (k = m), D_k as rotation plus reversal (k = m).
fn action_generators(action: &GroupSpec, m: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    let mismatch = |what: &str, k: usize| {
        GroupError::BadPhiTable(format!(
            "wreath action {what}{k} does not act on {m} points"
        ))
    };
    match action {
        GroupSpec::Symmetric(k) => {
            if *k != m {
                return Err(mismatch("S", *k));
            }
            if m <= 1 {
                return Ok(vec![]);
            }
            let mut swap: Vec<usize> = (0..m).collect();
            swap.swap(0, 1);
            let cycle: Vec<usize> = (1..m).chain(std::iter::once(0)).collect();
            Ok(vec![swap, cycle])
        }
        GroupSpec::Alternating(k) => {
            if *k != m {
                return Err(mismatch("A", *k));
            }
            if m <= 2 {
                return Ok(vec![]);
            }
            let mut three: Vec<usize> = (0..m).collect();
            three[0] = 1;
            three[1] = 2;
            three[2] = 0;
            if m <= 3 {
                return Ok(vec![three]);
            }
            // 3-cycle and an even "big" generator
            let big: Vec<usize> = if m % 2 == 1 {
                (1..m).chain(std::iter::once(0)).collect()
            } else {
                let mut p: Vec<usize> = (0..m).collect();
                for i in 1..m - 1 {
                    p[i] = i + 1;
                }
                p[m - 1] = 1;
                p
            };
            Ok(vec![three, big])
        }
        GroupSpec::Cyclic(k) => {
            if *k != m {
                return Err(mismatch("C", *k));
            }
            if m <= 1 {
                return Ok(vec![]);
            }
            Ok(vec![(1..m).chain(std::iter::once(0)).collect()])
        }
        GroupSpec::Dihedral(k) => {
            if *k != m {
                return Err(mismatch("D", *k));
            }
            if m <= 1 {
                return Ok(vec![]);
            }
            let rot: Vec<usize> = (1..m).chain(std::iter::once(0)).collect();
            let rev: Vec<usize> = (0..m).rev().collect();
            Ok(vec![rot, rev])
        }
        other => Err(GroupError::BadPhiTable(format!(
            "unsupported wreath action {:?}",
            other
        ))),
    }
}

fn load_phi_table(path: &std::path::Path) -> Result<Vec<Vec<usize>>, GroupError> {
    #[derive(serde::Deserialize)]
    struct PhiFile {
        phi: Vec<Vec<usize>>,
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::File(format!("{}: {e}", path.display())))?;
    let parsed: PhiFile = serde_json::from_str(&text)
        .map_err(|e| GroupError::BadPhiTable(format!("{}: {e}", path.display())))?;
    Ok(parsed.phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_basics() {
        let limits = Limits::default();
        assert_eq!(GroupSpec::Cyclic(6).build(&limits).unwrap().order(), 6);
        assert_eq!(GroupSpec::Dicyclic(2).build(&limits).unwrap().order(), 8);
        let spec = GroupSpec::DirectProduct(vec![
            GroupSpec::Dicyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
        ]);
        assert_eq!(spec.build(&limits).unwrap().order(), 32);
        assert_eq!(spec.to_spec_string(), "Q8xC2xC2");
    }

    #[test]
    fn wreath_spec() {
        let limits = Limits::default();
        let spec = GroupSpec::WreathProduct {
            base: Box::new(GroupSpec::Symmetric(2)),
            copies: 3,
            action: Box::new(GroupSpec::Symmetric(3)),
        };
        assert_eq!(spec.build(&limits).unwrap().order(), 48);
        assert_eq!(spec.to_spec_string(), "W(S2,3,S3)");
    }
}
