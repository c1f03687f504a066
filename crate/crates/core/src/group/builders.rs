//! Parametric constructions: cyclic, metacyclic families, products.

use super::{Group, Limits, Permutation, MAX_REPRESENTABLE_ORDER};
use crate::error::{Error, Result};
use crate::numbers::{is_prime, pow_mod};

fn default_cap() -> usize {
    Limits::default().max_group_order
}

fn check_order(order: u128, cap: usize) -> Result<usize> {
    let cap = cap.min(MAX_REPRESENTABLE_ORDER);
    if order > cap as u128 {
        return Err(Error::ClosureTooLarge { cap });
    }
    Ok(order as usize)
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent `n` with `order == 2^n`, required to be at least 3.
fn two_power_at_least_8(order: u64, what: &str) -> Result<u32> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::bad(format!(
            "{what} needs an order 2^n with n >= 3, got {order}"
        )));
    }
    Ok(order.trailing_zeros())
}

impl Group {
    pub fn from_permutation_generators(degree: usize, generators: &[Permutation]) -> Result<Group> {
        Permutation::generate_group(degree, generators, default_cap())
    }
}

pub fn cyclic(n: u64) -> Result<Group> {
    if n == 0 {
        return Err(Error::bad("cyclic group needs n >= 1"));
    }
    let n = check_order(n as u128, default_cap())?;
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            flat.push(((a + b) % n) as u16);
        }
    }
    Ok(Group::from_flat(n, flat)?.with_name(format!("C({n})")))
}

/// `C_p^rank`; element index = base-p digits, least significant first.
pub fn elementary_abelian(p: u64, rank: u32) -> Result<Group> {
    require_prime(p)?;
    let n = check_order((p as u128).pow(rank), default_cap())?;
    let p = p as usize;
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
            for _ in 0..rank {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            flat.push(out as u16);
        }
    }
    Ok(Group::from_flat(n, flat)?.with_name(format!("EA({p}, {rank})")))
}

/// `<x, y | x^m = 1, y^k = x^t, y^-1 x y = x^r>` of order `m*k`.
///
/// Element `x^i y^j` has index `i + m*j`.
pub fn metacyclic(m: u64, k: u64, t: u64, r: u64) -> Result<Group> {
    if m == 0 || k == 0 {
        return Err(Error::bad("metacyclic group needs m, k >= 1"));
    }
    let order = check_order(m as u128 * k as u128, default_cap())?;
    let r = r % m;
    let t = t % m;
    if num_integer::gcd(r, m) != 1 && m > 1 {
        return Err(Error::bad(format!("r = {r} is not a unit modulo {m}")));
    }
    if pow_mod(r, k, m) != 1 % m {
        return Err(Error::bad(format!("r^k = {r}^{k} is not 1 modulo {m}")));
    }
    if !(t as u128 * ((r + m - 1) % m) as u128).is_multiple_of(m as u128) {
        return Err(Error::bad(format!("x^{t} must commute with y")));
    }
    // s = r^-1 mod m, and its powers s^a for a < k.
    let s = if m == 1 { 0 } else { pow_mod(r, k - 1, m) };
    let mut s_pow = vec![1 % m; k as usize];
    for a in 1..k as usize {
        s_pow[a] = s_pow[a - 1] * s % m;
    }
    let (m_u, k_u) = (m as usize, k as usize);
    let mut flat = Vec::with_capacity(order * order);
    for ea in 0..order {
        let (i, a) = (ea % m_u, ea / m_u);
        for eb in 0..order {
            let (j, b) = (eb % m_u, eb / m_u);
            let mut xi = (i as u64 + j as u64 * s_pow[a]) % m;
            let mut yj = a + b;
            if yj >= k_u {
                yj -= k_u;
                xi = (xi + t) % m;
            }
            flat.push((xi as usize + m_u * yj) as u16);
        }
    }
    Group::from_flat(order, flat)
}

/// Dihedral group of order `2m`.
pub fn dihedral(m: u64) -> Result<Group> {
    if m == 0 {
        return Err(Error::bad("dihedral group needs m >= 1"));
    }
    Ok(metacyclic(m, 2, 0, m.saturating_sub(1))?.with_name(format!("D({m})")))
}

pub fn generalized_quaternion(order: u64) -> Result<Group> {
    two_power_at_least_8(order, "generalized quaternion group")?;
    let m = order / 2;
    Ok(metacyclic(m, 2, m / 2, m - 1)?.with_name(format!("Q({order})")))
}

pub fn semidihedral(order: u64) -> Result<Group> {
    two_power_at_least_8(order, "semidihedral group")?;
    let m = order / 2;
    Ok(metacyclic(m, 2, 0, m / 2 - 1)?.with_name(format!("SD({order})")))
}

/// `M_n(p) = <x, y | x^p = y^(p^(n-1)) = 1, x^-1 y x = y^(1 + p^(n-2))>`.
pub fn modular_group(n: u32, p: u64) -> Result<Group> {
    require_prime(p)?;
    if n < 3 {
        return Err(Error::bad(format!("M_n(p) needs n >= 3, got {n}")));
    }
    check_order((p as u128).pow(n), default_cap())?;
    let m = p.pow(n - 1);
    Ok(metacyclic(m, p, 0, 1 + p.pow(n - 2))?.with_name(format!("M({n}, {p})")))
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    direct_product_capped(a, b, default_cap())
}

/// Element `(x, y)` has index `x*|B| + y`.
pub fn direct_product_capped(a: &Group, b: &Group, cap: usize) -> Result<Group> {
    let n = check_order(a.order() as u128 * b.order() as u128, cap)?;
    let nb = b.order();
    let mut flat = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            flat.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16);
        }
    }
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x} x {y}")),
        _ => None,
    };
    let mut g = Group::from_flat(n, flat)?;
    g.meta_mut().name = name;
    Ok(g)
}

pub fn semidirect_product(n: &Group, h: &Group, action: &[Vec<usize>]) -> Result<Group> {
    semidirect_product_capped(n, h, action, default_cap())
}

/// `N ⋊ H` where `action[h][x]` is the image of `x ∈ N` under `h`.
///
/// Pairs multiply as `(x1, h1)(x2, h2) = (x1 * h1(x2), h1 h2)`, which needs
/// `action[h1 h2] = action[h1] ∘ action[h2]`. Element `(x, h)` has index
/// `x*|H| + h`, so a trivial action reproduces the direct product table.
pub fn semidirect_product_capped(n: &Group, h: &Group, action: &[Vec<usize>], cap: usize) -> Result<Group> {
    let (nn, nh) = (n.order(), h.order());
    if action.len() != nh {
        return Err(Error::bad(format!(
            "action lists {} automorphisms for a group of order {nh}",
            action.len()
        )));
    }
    for (hi, phi) in action.iter().enumerate() {
        check_automorphism(n, phi).map_err(|witness| Error::NotAnAutomorphism { h: hi, witness })?;
    }
    if action[0].iter().enumerate().any(|(x, &y)| x != y) {
        return Err(Error::NotAnAutomorphism {
            h: 0,
            witness: "the identity must act trivially".into(),
        });
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let prod = &action[h.mul(h1, h2)];
            if (0..nn).any(|x| prod[x] != action[h1][action[h2][x]]) {
                return Err(Error::NotAHomomorphism { h1, h2 });
            }
        }
    }
    let total = check_order(nn as u128 * nh as u128, cap)?;
    let mut flat = Vec::with_capacity(total * total);
    for a in 0..total {
        let (x1, h1) = (a / nh, a % nh);
        for b in 0..total {
            let (x2, h2) = (b / nh, b % nh);
            let x = n.mul(x1, action[h1][x2]);
            flat.push((x * nh + h.mul(h1, h2)) as u16);
        }
    }
    let trivial = action.iter().all(|phi| phi.iter().enumerate().all(|(x, &y)| x == y));
    let mut g = Group::from_flat(total, flat)?;
    g.meta_mut().action_trivial = Some(trivial);
    Ok(g)
}

fn check_automorphism(n: &Group, phi: &[usize]) -> Result<(), String> {
    let order = n.order();
    if phi.len() != order {
        return Err(format!("map has {} entries, expected {order}", phi.len()));
    }
    let mut seen = vec![false; order];
    for (x, &y) in phi.iter().enumerate() {
        if y >= order || std::mem::replace(&mut seen[y], true) {
            return Err(format!("not a bijection at {x}"));
        }
    }
    for a in 0..order {
        for b in 0..order {
            if phi[n.mul(a, b)] != n.mul(phi[a], phi[b]) {
                return Err(format!("phi({a}*{b}) != phi({a})*phi({b})"));
            }
        }
    }
    Ok(())
}
