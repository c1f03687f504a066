use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{
    cyclic, direct_product_capped, elementary_abelian, generalized_quaternion, metacyclic, modular_group,
    semidirect_product_capped, Group, Limits,
};
use crate::numbers::{is_prime, multiplicative_order, pow_mod};

/// One of the seven families of minimal PF-groups, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// `Q8`
    Quaternion,
    /// `C_p x C_{p^2}`
    CpTimesCp2 { p: u64 },
    /// `M_3(p)`, p odd
    Modular { p: u64 },
    /// `C_p^2 x C_q`
    CpSquaredTimesCq { p: u64, q: u64 },
    /// `C_r x (C_p : C_q)` with `q | p - 1`
    CrTimesFrobenius { p: u64, q: u64, r: u64 },
    /// `<x, y | x^q = y^(p^n) = 1, y^-1 x y = x^r>` with `ord_q(r) = p`
    Metacyclic { q: u64, p: u64, n: u32, r: u64 },
    /// `C_q x (C_q^alpha : C_p)` with `alpha = ord_p(q)`
    CentralExtension { q: u64, p: u64, alpha: u32 },
}

impl FamilyTag {
    pub fn number(&self) -> u8 {
        match self {
            FamilyTag::Quaternion => 1,
            FamilyTag::CpTimesCp2 { .. } => 2,
            FamilyTag::Modular { .. } => 3,
            FamilyTag::CpSquaredTimesCq { .. } => 4,
            FamilyTag::CrTimesFrobenius { .. } => 5,
            FamilyTag::Metacyclic { .. } => 6,
            FamilyTag::CentralExtension { .. } => 7,
        }
    }

    /// Parameter names and values in display order.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            FamilyTag::Quaternion => vec![],
            FamilyTag::CpTimesCp2 { p } | FamilyTag::Modular { p } => vec![("p", p)],
            FamilyTag::CpSquaredTimesCq { p, q } => vec![("p", p), ("q", q)],
            FamilyTag::CrTimesFrobenius { p, q, r } => vec![("p", p), ("q", q), ("r", r)],
            FamilyTag::Metacyclic { q, p, n, r } => vec![("q", q), ("p", p), ("n", n as u64), ("r", r)],
            FamilyTag::CentralExtension { q, p, alpha } => vec![("q", q), ("p", p), ("alpha", alpha as u64)],
        }
    }

    /// Builds a tag from a family number and named parameters, then validates it.
    pub fn from_params(family: u64, params: &BTreeMap<String, u64>) -> Result<FamilyTag> {
        let expected: &[&str] = match family {
            1 => &[],
            2 | 3 => &["p"],
            4 => &["p", "q"],
            5 => &["p", "q", "r"],
            6 => &["q", "p", "n", "r"],
            7 => &["q", "p", "alpha"],
            _ => return Err(Error::BadParameters(format!("no family {family}; expected 1..7"))),
        };
        if let Some(extra) = params.keys().find(|k| !expected.contains(&k.as_str())) {
            return Err(Error::BadParameters(format!(
                "family {family} takes no parameter '{extra}' (expects {})",
                expected.join(", ")
            )));
        }
        let get = |name: &str| {
            params
                .get(name)
                .copied()
                .ok_or_else(|| Error::BadParameters(format!("family {family} needs parameter '{name}'")))
        };
        let small = |name: &str| -> Result<u32> {
            u32::try_from(get(name)?).map_err(|_| Error::BadParameters(format!("{name} is too large")))
        };
        let tag = match family {
            1 => FamilyTag::Quaternion,
            2 => FamilyTag::CpTimesCp2 { p: get("p")? },
            3 => FamilyTag::Modular { p: get("p")? },
            4 => FamilyTag::CpSquaredTimesCq {
                p: get("p")?,
                q: get("q")?,
            },
            5 => FamilyTag::CrTimesFrobenius {
                p: get("p")?,
                q: get("q")?,
                r: get("r")?,
            },
            6 => FamilyTag::Metacyclic {
                q: get("q")?,
                p: get("p")?,
                n: small("n")?,
                r: get("r")?,
            },
            _ => FamilyTag::CentralExtension {
                q: get("q")?,
                p: get("p")?,
                alpha: small("alpha")?,
            },
        };
        tag.validate()?;
        Ok(tag)
    }

    /// Checks the parameter constraints, naming the first one violated.
    pub fn validate(&self) -> Result<()> {
        let prime = |name: &str, v: u64| {
            if is_prime(v) {
                Ok(())
            } else {
                Err(Error::BadParameters(format!("{name} = {v} is not prime")))
            }
        };
        let distinct = |a: u64, b: u64, what: &str| {
            if a == b {
                Err(Error::BadParameters(format!("{what} must be distinct")))
            } else {
                Ok(())
            }
        };
        match *self {
            FamilyTag::Quaternion => Ok(()),
            FamilyTag::CpTimesCp2 { p } => prime("p", p),
            FamilyTag::Modular { p } => {
                prime("p", p)?;
                if p == 2 {
                    return Err(Error::BadParameters("p must be odd (M_3(2) is D8)".into()));
                }
                Ok(())
            }
            FamilyTag::CpSquaredTimesCq { p, q } => {
                prime("p", p)?;
                prime("q", q)?;
                distinct(p, q, "p and q")
            }
            FamilyTag::CrTimesFrobenius { p, q, r } => {
                prime("p", p)?;
                prime("q", q)?;
                prime("r", r)?;
                distinct(p, q, "p and q")?;
                distinct(p, r, "p and r")?;
                distinct(q, r, "q and r")?;
                if (p - 1) % q != 0 {
                    return Err(Error::BadParameters(format!(
                        "q = {q} does not divide p - 1 = {}",
                        p - 1
                    )));
                }
                Ok(())
            }
            FamilyTag::Metacyclic { q, p, n, r } => {
                prime("q", q)?;
                prime("p", p)?;
                distinct(p, q, "p and q")?;
                if n < 2 {
                    return Err(Error::BadParameters(format!("n = {n} must be at least 2")));
                }
                if multiplicative_order(r % q, q) != Some(p) {
                    return Err(Error::BadParameters(format!(
                        "r = {r} must have multiplicative order exactly p = {p} modulo q = {q}"
                    )));
                }
                Ok(())
            }
            FamilyTag::CentralExtension { q, p, alpha } => {
                prime("q", q)?;
                prime("p", p)?;
                distinct(p, q, "p and q")?;
                if alpha == 0 {
                    return Err(Error::BadParameters("alpha must be at least 1".into()));
                }
                if pow_mod(q % p, alpha as u64, p) != 1 {
                    return Err(Error::BadParameters(format!("p = {p} does not divide q^alpha - 1")));
                }
                let ord = multiplicative_order(q % p, p).expect("p does not divide q");
                if ord != alpha as u64 {
                    return Err(Error::BadParameters(format!(
                        "alpha = {alpha} must equal the order of q modulo p ({ord}) for the action to be irreducible"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Order of the group the tag describes, if it fits in a `u64`.
    pub fn group_order(&self) -> Option<u64> {
        let pow = |b: u64, e: u32| b.checked_pow(e);
        match *self {
            FamilyTag::Quaternion => Some(8),
            FamilyTag::CpTimesCp2 { p } | FamilyTag::Modular { p } => pow(p, 3),
            FamilyTag::CpSquaredTimesCq { p, q } => pow(p, 2)?.checked_mul(q),
            FamilyTag::CrTimesFrobenius { p, q, r } => p.checked_mul(q)?.checked_mul(r),
            FamilyTag::Metacyclic { q, p, n, .. } => pow(p, n)?.checked_mul(q),
            FamilyTag::CentralExtension { q, p, alpha } => pow(q, alpha.checked_add(1)?)?.checked_mul(p),
        }
    }

    /// Same group, with family 6's `r` replaced by the least valid value.
    /// Every `r` of order `p` modulo `q` gives an isomorphic group.
    pub fn canonical(&self) -> FamilyTag {
        match *self {
            FamilyTag::Metacyclic { q, p, n, .. } => FamilyTag::Metacyclic {
                q,
                p,
                n,
                r: least_of_order(p, q).unwrap_or(0),
            },
            other => other,
        }
    }

    /// For family 6: whether the literal side condition `r ≡ 1 (mod p)` also
    /// holds. It plays no part in the construction.
    pub fn literal_r_condition(&self) -> Option<bool> {
        match *self {
            FamilyTag::Metacyclic { p, r, .. } => Some(r % p == 1 % p),
            _ => None,
        }
    }

    /// Expression-language form, e.g. `FAM(5, p=7, q=3, r=5)`.
    pub fn expression(&self) -> String {
        let mut s = format!("FAM({}", self.number());
        for (k, v) in self.params() {
            s.push_str(&format!(", {k}={v}"));
        }
        s.push(')');
        s
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}", self.number())?;
        let params = self.params();
        if !params.is_empty() {
            let items: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " ({})", items.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let params: BTreeMap<&str, u64> = self.params().into_iter().collect();
        let mut st = serializer.serialize_struct("FamilyTag", 2)?;
        st.serialize_field("family", &self.number())?;
        st.serialize_field("params", &params)?;
        st.end()
    }
}

/// Least `a` in `2..m` with multiplicative order `k` modulo `m`.
pub(crate) fn least_of_order(k: u64, m: u64) -> Option<u64> {
    (2..m).find(|&a| multiplicative_order(a, m) == Some(k))
}

pub fn build_family(tag: &FamilyTag) -> Result<Group> {
    build_family_capped(tag, Limits::default().max_group_order)
}

/// The default realization of a family member.
pub fn build_family_capped(tag: &FamilyTag, cap: usize) -> Result<Group> {
    tag.validate()?;
    match tag.group_order() {
        Some(o) if o <= cap as u64 => {}
        o => {
            return Err(Error::TooLarge {
                order: o.map_or(usize::MAX, |o| o as usize),
                cap,
            })
        }
    }
    let g = match *tag {
        FamilyTag::Quaternion => generalized_quaternion(8)?,
        FamilyTag::CpTimesCp2 { p } => direct_product_capped(&cyclic(p)?, &cyclic(p * p)?, cap)?,
        FamilyTag::Modular { p } => modular_group(3, p)?,
        FamilyTag::CpSquaredTimesCq { p, q } => direct_product_capped(&elementary_abelian(p, 2)?, &cyclic(q)?, cap)?,
        FamilyTag::CrTimesFrobenius { p, q, r } => {
            let a = least_of_order(q, p).expect("q divides p - 1");
            let cp = cyclic(p)?;
            let action: Vec<Vec<usize>> = (0..q)
                .map(|h| {
                    let e = pow_mod(a, h, p) as usize;
                    (0..p as usize).map(|x| cp.pow(x, e)).collect()
                })
                .collect();
            let frob = semidirect_product_capped(&cp, &cyclic(q)?, &action, cap)?;
            direct_product_capped(&cyclic(r)?, &frob, cap)?
        }
        FamilyTag::Metacyclic { q, p, n, r } => metacyclic(q, p.pow(n), 0, r % q)?,
        FamilyTag::CentralExtension { q, p, alpha } => {
            let frob = linear_frobenius(q, p, alpha, cap)?;
            direct_product_capped(&cyclic(q)?, &frob, cap)?
        }
    };
    Ok(g.with_name(tag.expression()))
}

/// `C_q^a : C_p`, with `C_p` acting by the companion matrix of the least
/// monic degree-`a` divisor of `t^p - 1` over `F_q` that has no root 1.
/// When `a = ord_p(q)` that divisor is irreducible, so the action is
/// irreducible and fixed-point-free.
fn linear_frobenius(q: u64, p: u64, a: u32, cap: usize) -> Result<Group> {
    let f = least_cyclotomic_factor(q, p, a as usize)
        .ok_or_else(|| Error::BadParameters(format!("t^{p} - 1 has no suitable degree-{a} factor over F_{q}")))?;
    let n = elementary_abelian(q, a)?;
    let (qs, au) = (q as usize, a as usize);
    let digits = |mut x: usize| {
        let mut v = vec![0usize; au];
        for d in v.iter_mut() {
            *d = x % qs;
            x /= qs;
        }
        v
    };
    let undigits = |v: &[usize]| v.iter().rev().fold(0usize, |acc, &d| acc * qs + d);
    // companion matrix: e_i -> e_{i+1}, e_{a-1} -> -(f_0 e_0 + ... + f_{a-1} e_{a-1})
    let companion = |v: &[usize]| {
        let top = v[au - 1];
        let mut w = vec![0usize; au];
        for i in 0..au {
            let shifted = if i == 0 { 0 } else { v[i - 1] };
            w[i] = (shifted + (qs - f[i]) * top) % qs;
        }
        w
    };
    let mut action: Vec<Vec<usize>> = vec![(0..n.order()).collect()];
    for h in 1..p as usize {
        let prev = &action[h - 1];
        let next: Vec<usize> = (0..n.order()).map(|x| undigits(&companion(&digits(prev[x])))).collect();
        action.push(next);
    }
    semidirect_product_capped(&n, &cyclic(p)?, &action, cap)
}

/// Coefficients `f_0 .. f_{a-1}` of the least monic degree-`a` polynomial
/// over `F_q` dividing `t^p - 1` with `f(1) != 0`.
fn least_cyclotomic_factor(q: u64, p: u64, a: usize) -> Option<Vec<usize>> {
    let qs = q as usize;
    let total = qs.checked_pow(a as u32)?;
    (0..total).find_map(|code| {
        let mut f = Vec::with_capacity(a + 1);
        let mut c = code;
        for _ in 0..a {
            f.push(c % qs);
            c /= qs;
        }
        f.push(1);
        let at_one = f.iter().sum::<usize>() % qs;
        (at_one != 0 && divides_t_pow_minus_one(&f, p as usize, qs)).then(|| f[..a].to_vec())
    })
}

/// Whether monic `f` divides `t^p - 1` over `F_q`: reduce `t^p` modulo `f`.
fn divides_t_pow_minus_one(f: &[usize], p: usize, q: usize) -> bool {
    let a = f.len() - 1;
    // r = t^k mod f as coefficients of 1..t^(a-1)
    let mut r = vec![0usize; a.max(1)];
    if a == 0 {
        return true;
    }
    r[0] = 1;
    for _ in 0..p {
        let top = r[a - 1];
        let mut next = vec![0usize; a];
        for i in 0..a {
            let shifted = if i == 0 { 0 } else { r[i - 1] };
            next[i] = (shifted + (q - f[i]) * top) % q;
        }
        r = next;
    }
    r[0] == 1 % q && r[1..].iter().all(|&c| c == 0)
}

/// Family 7 with a nonabelian Sylow subgroup: `C_p` acting on the Heisenberg
/// group of order `q^3` (q odd) through an order-`p` element of `SL(2, q)`,
/// trivially on the center. Needs `ord_p(q) = 2`, so that the action on the
/// central quotient is irreducible.
pub fn build_family7_extraspecial(q: u64, p: u64, cap: usize) -> Result<Group> {
    if !is_prime(q) || q == 2 || !is_prime(p) || p == q {
        return Err(Error::BadParameters(
            "needs q an odd prime and p a prime other than q".into(),
        ));
    }
    if multiplicative_order(q % p, p) != Some(2) {
        return Err(Error::BadParameters(format!(
            "q = {q} must have order 2 modulo p = {p}"
        )));
    }
    let order = q.pow(3) * p;
    if order > cap as u64 {
        return Err(Error::TooLarge {
            order: order as usize,
            cap,
        });
    }
    let qs = q as usize;
    let n = heisenberg(qs)?;
    let m = sl2_element_of_order(qs, p as usize).expect("SL(2,q) has elements of every order dividing q+1");
    // (a, b, c) has index a + q b + q^2 c; M acts on (a, b) and fixes c
    let apply = |x: usize| {
        let (a, b, c) = (x % qs, (x / qs) % qs, x / (qs * qs));
        let a2 = (m[0] * a + m[1] * b) % qs;
        let b2 = (m[2] * a + m[3] * b) % qs;
        a2 + qs * b2 + qs * qs * c
    };
    let mut action: Vec<Vec<usize>> = vec![(0..n.order()).collect()];
    for h in 1..p as usize {
        let next: Vec<usize> = action[h - 1].iter().map(|&x| apply(x)).collect();
        action.push(next);
    }
    let g = semidirect_product_capped(&n, &cyclic(p)?, &action, cap)?;
    Ok(g.with_name(format!("Heisenberg({q}) : C({p})")))
}

/// Heisenberg group over `F_q` in the symmetric form, so that `SL(2, q)`
/// acts by `(v, c) -> (Mv, c)`.
fn heisenberg(q: usize) -> Result<Group> {
    let n = q * q * q;
    let half = q.div_ceil(2);
    let mut table = vec![vec![0usize; n]; n];
    for (x, row) in table.iter_mut().enumerate() {
        let (a, b, c) = (x % q, (x / q) % q, x / (q * q));
        for (y, cell) in row.iter_mut().enumerate() {
            let (a2, b2, c2) = (y % q, (y / q) % q, y / (q * q));
            let form = (a * b2 % q + q * q - b * a2 % q) % q;
            let cc = (c + c2 + form * half) % q;
            *cell = (a + a2) % q + q * ((b + b2) % q) + q * q * cc;
        }
    }
    Group::from_cayley_table(&table)
}

/// Least (row-major) matrix `[m0 m1; m2 m3]` of determinant 1 and order `p`.
fn sl2_element_of_order(q: usize, p: usize) -> Option<[usize; 4]> {
    let mul = |x: [usize; 4], y: [usize; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % q,
            (x[0] * y[1] + x[1] * y[3]) % q,
            (x[2] * y[0] + x[3] * y[2]) % q,
            (x[2] * y[1] + x[3] * y[3]) % q,
        ]
    };
    let id = [1, 0, 0, 1];
    (0..q.pow(4)).find_map(|code| {
        let m = [code % q, (code / q) % q, (code / (q * q)) % q, code / (q * q * q)];
        if (m[0] * m[3] + q * q - m[1] * m[2] % q) % q != 1 || m == id {
            return None;
        }
        let mut acc = m;
        for _ in 1..p {
            acc = mul(acc, m);
        }
        (acc == id).then_some(m)
    })
}
