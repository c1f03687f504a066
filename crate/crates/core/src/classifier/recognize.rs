use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::numbers::{is_prime, log_exact};
use crate::structure::{is_quasi_frobenius, QuasiFrobenius};

use super::family::{least_of_order, FamilyTag};

/// Structural fingerprint match against the seven families; no generic
/// isomorphism search. Fails if more than one family fires.
pub fn recognize_family(g: &Group, limits: &Limits) -> Result<Option<FamilyTag>> {
    let mut quasi: Option<Option<QuasiFrobenius>> = None;
    let mut quasi_frobenius = |g: &Group| -> Result<Option<QuasiFrobenius>> {
        if quasi.is_none() {
            quasi = Some(is_quasi_frobenius(g, limits)?);
        }
        Ok(quasi.clone().flatten())
    };
    let n = g.order();
    let f = g.factorization();
    let pairs = f.pairs().to_vec();
    let abelian = g.is_abelian();
    let exponent = g.exponent() as u64;
    let mut hits = Vec::new();

    if n == 8 && !g.is_cyclic() && g.order_histogram().get(&2) == Some(&1) {
        hits.push(FamilyTag::Quaternion);
    }
    if let [(p, 3)] = pairs[..] {
        if exponent == p * p {
            if abelian {
                hits.push(FamilyTag::CpTimesCp2 { p });
            } else if p != 2 {
                hits.push(FamilyTag::Modular { p });
            }
        }
    }
    if abelian && pairs.len() == 2 {
        for (i, j) in [(0, 1), (1, 0)] {
            let ((p, ep), (q, eq)) = (pairs[i], pairs[j]);
            if ep == 2 && eq == 1 && exponent == p * q {
                hits.push(FamilyTag::CpSquaredTimesCq { p, q });
            }
        }
    }
    let center = g.center();
    if !abelian && pairs.len() == 3 && f.is_squarefree() && is_prime(center.order() as u64) {
        if let Some(qf) = quasi_frobenius(g)? {
            let r = center.order() as u64;
            let fs = &qf.quotient_frobenius;
            let (p, q) = (fs.kernel.order() as u64, fs.complement.order() as u64);
            if is_prime(p) && is_prime(q) && r != p && r != q {
                hits.push(FamilyTag::CrTimesFrobenius { p, q, r });
            }
        }
    }
    if !abelian && pairs.len() == 2 {
        for (i, j) in [(0, 1), (1, 0)] {
            let ((q, eq), (p, ep)) = (pairs[i], pairs[j]);
            // family 6: |G| = q p^n, cyclic Sylows, Z(G) = C_{p^(n-1)}
            if eq == 1 && ep >= 2 {
                let cyclic_sylows = [p, q].iter().all(|&s| {
                    let sy = g.sylow_subgroup(s).expect("prime divides the order");
                    sy.members().iter().any(|x| g.element_order(x) == sy.order())
                });
                let z = center.order() as u64;
                let z_cyclic = center.members().iter().any(|x| g.element_order(x) as u64 == z);
                if cyclic_sylows && z == p.pow(ep - 1) && z_cyclic {
                    if let Some(qf) = quasi_frobenius(g)? {
                        let fs = &qf.quotient_frobenius;
                        if fs.kernel.order() as u64 == q && fs.complement.order() as u64 == p {
                            let r = least_of_order(p, q).expect("p divides q - 1");
                            hits.push(FamilyTag::Metacyclic { q, p, n: ep, r });
                        }
                    }
                }
            }
            // family 7: |G| = q^(alpha+1) p, Z(G) = C_q, Sylow q of exponent q,
            // G/Z minimal Frobenius of order q^alpha p
            if ep == 1 && eq >= 2 && center.order() as u64 == q {
                let sylow = g.sylow_subgroup(q).expect("prime divides the order");
                let exponent_q = sylow.members().iter().all(|x| g.element_order(x) as u64 <= q);
                if exponent_q {
                    if let Some(qf) = quasi_frobenius(g)? {
                        let fs = &qf.quotient_frobenius;
                        let alpha = eq - 1;
                        if fs.is_minimal
                            && log_exact(fs.kernel.order() as u64, q) == Some(alpha)
                            && fs.complement.order() as u64 == p
                        {
                            hits.push(FamilyTag::CentralExtension { q, p, alpha });
                        }
                    }
                }
            }
        }
    }

    match hits.len() {
        0 => Ok(None),
        1 => Ok(hits.pop()),
        _ => Err(Error::StructureViolation(format!(
            "several families fire at once: {}",
            hits.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
        ))),
    }
}
