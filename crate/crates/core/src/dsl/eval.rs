use crate::classifier::{build_family_capped, FamilyTag};
use crate::error::{Error, Result};
use crate::group::text::read_group_file;
use crate::group::{
    cyclic, dihedral, direct_product_capped, elementary_abelian, generalized_quaternion, modular_group, parse_cycles,
    semidihedral, semidirect_product_capped, Group, Limits, Permutation,
};
use crate::numbers::{log_exact, pow_mod, PrimeFactorization};

use super::{parse, GroupExpr};

pub fn evaluate_str(text: &str, limits: &Limits) -> Result<Group> {
    evaluate(&parse(text)?, limits)
}

/// Builds the group an expression names; the result is named by the
/// expression's canonical printed form.
///
/// Semidirect action specs:
/// - `trivial`
/// - `pow R`: `H` cyclic; its least generator acts by `x -> x^R`
/// - `mat a b; c d`: `N = EA(p, d)` and `H` cyclic; the least generator of
///   `H` acts by the matrix on coordinate vectors (least significant digit first)
/// - `table i0 i1 ...; ...`: one row per element of `H`, giving the image of
///   every element of `N`
pub fn evaluate(expr: &GroupExpr, limits: &Limits) -> Result<Group> {
    let cap = limits.max_group_order;
    let fits = |order: Option<u64>| -> Result<()> {
        match order {
            Some(o) if o <= cap as u64 => Ok(()),
            _ => Err(Error::ClosureTooLarge { cap }),
        }
    };
    let g = match expr {
        GroupExpr::Cyclic(n) => {
            fits(Some(*n))?;
            cyclic(*n)?
        }
        GroupExpr::ElemAb(p, r) => {
            fits(p.checked_pow(*r))?;
            elementary_abelian(*p, *r)?
        }
        GroupExpr::Dihedral(m) => {
            fits(m.checked_mul(2))?;
            dihedral(*m)?
        }
        GroupExpr::Quaternion(n) => {
            fits(Some(*n))?;
            generalized_quaternion(*n)?
        }
        GroupExpr::Semidihedral(n) => {
            fits(Some(*n))?;
            semidihedral(*n)?
        }
        GroupExpr::Modular(n, p) => {
            fits(p.checked_pow(*n))?;
            modular_group(*n, *p)?
        }
        GroupExpr::Product(a, b) => direct_product_capped(&evaluate(a, limits)?, &evaluate(b, limits)?, cap)?,
        GroupExpr::Semidirect(n, h, spec) => {
            let n = evaluate(n, limits)?;
            let h = evaluate(h, limits)?;
            fits((n.order() as u64).checked_mul(h.order() as u64))?;
            let action = parse_action(&n, &h, spec)?;
            semidirect_product_capped(&n, &h, &action, cap)?
        }
        GroupExpr::Family(k, params) => build_family_capped(&FamilyTag::from_params(*k, params)?, cap)?,
        GroupExpr::Perm(degree, cycles) => {
            let gens = cycles
                .iter()
                .map(|c| parse_cycles(c, *degree))
                .collect::<Result<Vec<_>>>()?;
            Permutation::generate_group(*degree, &gens, cap)?
        }
        GroupExpr::FromFile(path) => read_group_file(std::path::Path::new(path), limits)?,
    };
    Ok(g.with_name(expr.to_string()))
}

/// Exponent `k` with `h = gen^k` for every element of a cyclic group, using
/// its least generator.
fn cyclic_exponents(h: &Group) -> Result<Vec<usize>> {
    let n = h.order();
    let gen = (0..n)
        .find(|&x| h.element_order(x) == n)
        .ok_or_else(|| Error::BadParameters("this action spec needs a cyclic acting group".into()))?;
    let mut exps = vec![0usize; n];
    let mut x = 0;
    for k in 0..n {
        exps[x] = k;
        x = h.mul(x, gen);
    }
    Ok(exps)
}

fn parse_action(n: &Group, h: &Group, spec: &str) -> Result<Vec<Vec<usize>>> {
    let spec = spec.trim();
    let (kind, rest) = spec.split_once(char::is_whitespace).unwrap_or((spec, ""));
    let bad = |msg: String| Error::BadParameters(format!("action '{spec}': {msg}"));
    let ints = |s: &str| -> Result<Vec<u64>> {
        s.split_whitespace()
            .map(|w| w.parse::<u64>().map_err(|_| bad(format!("'{w}' is not an integer"))))
            .collect()
    };
    match kind {
        "trivial" => Ok(vec![(0..n.order()).collect(); h.order()]),
        "pow" => {
            let r = match ints(rest)?[..] {
                [r] => r,
                _ => return Err(bad("expected 'pow R'".into())),
            };
            let exps = cyclic_exponents(h)?;
            let m = n.order() as u64;
            Ok(exps
                .iter()
                .map(|&k| {
                    let e = pow_mod(r % m, k as u64, m) as usize;
                    (0..n.order()).map(|x| n.pow(x, e)).collect()
                })
                .collect())
        }
        "mat" => {
            let rows: Vec<Vec<u64>> = rest.split(';').map(ints).collect::<Result<_>>()?;
            let d = rows.len();
            if d == 0 || rows.iter().any(|r| r.len() != d) {
                return Err(bad("matrix must be square".into()));
            }
            let f = PrimeFactorization::of(n.order() as u64);
            let p = f
                .single_prime()
                .ok_or_else(|| bad("N must be elementary abelian".into()))?;
            if log_exact(n.order() as u64, p) != Some(d as u32) {
                return Err(bad(format!("N must have order p^{d}")));
            }
            let (ps, size) = (p as usize, n.order());
            let apply = |x: usize| {
                let mut v = vec![0usize; d];
                let mut y = x;
                for c in v.iter_mut() {
                    *c = y % ps;
                    y /= ps;
                }
                let w: Vec<usize> = (0..d)
                    .map(|i| (0..d).map(|j| (rows[i][j] % p) as usize * v[j]).sum::<usize>() % ps)
                    .collect();
                w.iter().rev().fold(0usize, |acc, &c| acc * ps + c)
            };
            let step: Vec<usize> = (0..size).map(apply).collect();
            let exps = cyclic_exponents(h)?;
            let mut powers: Vec<Vec<usize>> = vec![(0..size).collect()];
            for k in 1..h.order() {
                powers.push(powers[k - 1].iter().map(|&x| step[x]).collect());
            }
            Ok(exps.iter().map(|&k| powers[k].clone()).collect())
        }
        "table" => {
            let rows: Vec<Vec<usize>> = rest
                .split(';')
                .map(|r| ints(r).map(|v| v.into_iter().map(|x| x as usize).collect()))
                .collect::<Result<_>>()?;
            if rows.len() != h.order()
                || rows
                    .iter()
                    .any(|r| r.len() != n.order() || r.iter().any(|&x| x >= n.order()))
            {
                return Err(bad(format!(
                    "expected {} rows of {} element indices",
                    h.order(),
                    n.order()
                )));
            }
            Ok(rows)
        }
        _ => Err(bad("expected 'trivial', 'pow R', 'mat ...' or 'table ...'".into())),
    }
}
