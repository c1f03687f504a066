use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{cyclic, dihedral, direct_product, generalized_quaternion, modular_group, semidihedral, Group};
use crate::numbers::log_exact;

use super::is_isomorphic;

/// The types of p-groups with a cyclic maximal subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CyclicMaximalKind {
    Cyclic,
    /// `C_p x C_{p^(n-1)}`
    CpTimesCyclic,
    /// `M_n(p)`
    Modular,
    Quaternion,
    Dihedral,
    Semidihedral,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicMaximalClass {
    pub kind: CyclicMaximalKind,
    pub p: u64,
    /// `|G| = p^n`
    pub n: u32,
}

impl fmt::Display for CyclicMaximalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, n) = (self.p, self.n);
        match self.kind {
            CyclicMaximalKind::Cyclic => write!(f, "C_{{{p}^{n}}}"),
            CyclicMaximalKind::CpTimesCyclic => write!(f, "C_{p} x C_{{{p}^{}}}", n - 1),
            CyclicMaximalKind::Modular => write!(f, "M_{n}({p})"),
            CyclicMaximalKind::Quaternion => write!(f, "Q_{{2^{n}}}"),
            CyclicMaximalKind::Dihedral => write!(f, "D_{{2^{n}}}"),
            CyclicMaximalKind::Semidihedral => write!(f, "SD_{{2^{n}}}"),
            CyclicMaximalKind::NotApplicable => f.write_str("not-applicable"),
        }
    }
}

/// Names the type of a p-group with a cyclic maximal subgroup by testing
/// isomorphism against the parametric builders.
pub fn classify_cyclic_maximal_p_group(g: &Group) -> Result<CyclicMaximalClass> {
    let p = g.is_p_group().ok_or(Error::NotPGroup)?;
    let n = log_exact(g.order() as u64, p).expect("p-group order");
    let class = |kind| CyclicMaximalClass { kind, p, n };
    if g.is_cyclic() {
        return Ok(class(CyclicMaximalKind::Cyclic));
    }
    let maximal_cyclic = g.order() / p as usize;
    if !g.element_orders().contains(&maximal_cyclic) {
        return Ok(class(CyclicMaximalKind::NotApplicable));
    }
    let order = g.order() as u64;
    let mut candidates: Vec<(CyclicMaximalKind, Group)> = vec![(
        CyclicMaximalKind::CpTimesCyclic,
        direct_product(&cyclic(p)?, &cyclic(order / p)?)?,
    )];
    if p == 2 && n >= 3 {
        candidates.push((CyclicMaximalKind::Dihedral, dihedral(order / 2)?));
        candidates.push((CyclicMaximalKind::Quaternion, generalized_quaternion(order)?));
    }
    // M_3(2) is D_8 and SD_8 is C_2 x C_4.
    if n >= 3 && (p != 2 || n >= 4) {
        candidates.push((CyclicMaximalKind::Modular, modular_group(n, p)?));
    }
    if p == 2 && n >= 4 {
        candidates.push((CyclicMaximalKind::Semidihedral, semidihedral(order)?));
    }
    for (kind, model) in candidates {
        if is_isomorphic(g, &model)?.is_some() {
            return Ok(class(kind));
        }
    }
    Err(Error::StructureViolation(format!(
        "p-group of order {order} with a cyclic maximal subgroup matched no known type"
    )))
}
