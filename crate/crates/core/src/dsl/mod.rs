//! A small expression language naming groups, e.g. `C(3) x C(9)`,
//! `FAM(6, q=7, p=2, n=2, r=6)` or `PERM(5, '(0 1 2 3 4)', '(0 1 2)')`.
//!
//! `D(m)` is the dihedral group of order `2m`, so `D_{2^n}` is `D(2^(n-1))`.
//! `Q(n)` and `SD(n)` take the group order; `M(n, p)` is `M_n(p)`.

mod eval;
mod parser;

use std::collections::BTreeMap;
use std::fmt;

pub use eval::{evaluate, evaluate_str};
pub use parser::parse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    ElemAb(u64, u32),
    /// Dihedral group of order `2m`.
    Dihedral(u64),
    /// Generalized quaternion group of the given order.
    Quaternion(u64),
    /// Semidihedral group of the given order.
    Semidihedral(u64),
    /// `M_n(p)` as `Modular(n, p)`.
    Modular(u32, u64),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    /// `N : H` with an action spec, see [`evaluate`].
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, String),
    Family(u64, BTreeMap<String, u64>),
    Perm(usize, Vec<String>),
    FromFile(String),
}

fn quoted(s: &str) -> String {
    if s.contains('\'') {
        format!("\"{s}\"")
    } else {
        format!("'{s}'")
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C({n})"),
            GroupExpr::ElemAb(p, r) => write!(f, "EA({p}, {r})"),
            GroupExpr::Dihedral(m) => write!(f, "D({m})"),
            GroupExpr::Quaternion(n) => write!(f, "Q({n})"),
            GroupExpr::Semidihedral(n) => write!(f, "SD({n})"),
            GroupExpr::Modular(n, p) => write!(f, "M({n}, {p})"),
            GroupExpr::Product(a, b) => {
                // products associate to the left
                if matches!(**b, GroupExpr::Product(..)) {
                    write!(f, "{a} x ({b})")
                } else {
                    write!(f, "{a} x {b}")
                }
            }
            GroupExpr::Semidirect(n, h, action) => write!(f, "SEMI({n}, {h}, {})", quoted(action)),
            GroupExpr::Family(k, params) => {
                write!(f, "FAM({k}")?;
                for (name, v) in params {
                    write!(f, ", {name}={v}")?;
                }
                f.write_str(")")
            }
            GroupExpr::Perm(degree, cycles) => {
                write!(f, "PERM({degree}")?;
                for c in cycles {
                    write!(f, ", {}", quoted(c))?;
                }
                f.write_str(")")
            }
            GroupExpr::FromFile(path) => write!(f, "FILE({})", quoted(path)),
        }
    }
}
