//! Best-effort names for small abstract groups.

use std::collections::BTreeMap;

use crate::permgroup::{find_isomorphism, GroupTable};
use crate::samples;

/// Invariant factors `d1 | d2 | … | dk` (each > 1) with product `n`.
fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, prev: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in (prev.max(2)..=rest).filter(|d| d % prev == 0 && rest.is_multiple_of(*d)) {
            acc.push(d);
            go(rest / d, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn abelian_profile(factors: &[usize]) -> BTreeMap<usize, usize> {
    let mut profile = BTreeMap::new();
    let total: usize = factors.iter().product();
    for mut code in 0..total {
        let mut order = 1;
        for &d in factors {
            let a = code % d;
            code /= d;
            let o = d / gcd(a, d);
            order = order / gcd(order, o) * o;
        }
        *profile.entry(order).or_insert(0) += 1;
    }
    profile
}

fn abelian_name(factors: &[usize]) -> String {
    match factors {
        [] => "C1".into(),
        [2, 2] => "V4".into(),
        _ => factors.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x "),
    }
}

fn nonabelian_catalog(order: usize) -> Vec<(&'static str, GroupTable)> {
    match order {
        6 => vec![("S3", samples::symmetric_group(3))],
        8 => vec![("D4", samples::dihedral_group(4)), ("Q8", samples::quaternion_group())],
        10 => vec![("D5", samples::dihedral_group(5))],
        12 => vec![("A4", samples::alternating_group(4)), ("D6", samples::dihedral_group(6))],
        14 => vec![("D7", samples::dihedral_group(7))],
        24 => vec![("S4", samples::symmetric_group(4))],
        60 => vec![("A5", samples::alternating_group(5))],
        120 => vec![("S5", samples::symmetric_group(5))],
        _ => Vec::new(),
    }
}

/// `C4`, `V4`, `C2 x C6`, `S3`, `A4`, `S4`, …; `None` when no catalog entry
/// matches. Abelian groups are named for any order up to 5040; non-abelian
/// ones only from a short catalog.
pub fn guess_group_name(g: &GroupTable) -> Option<String> {
    let n = g.order();
    if g.is_abelian() {
        if n > 5040 {
            return None;
        }
        let profile = g.order_profile();
        return invariant_factor_lists(n)
            .into_iter()
            .find(|f| abelian_profile(f) == profile)
            .map(|f| abelian_name(&f));
    }
    nonabelian_catalog(n).into_iter().find_map(|(name, h)| {
        find_isomorphism(g, &h, usize::MAX)
            .ok()
            .flatten()
            .map(|_| name.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_lists() {
        assert_eq!(invariant_factor_lists(12), vec![vec![2, 6], vec![12]]);
        assert_eq!(invariant_factor_lists(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(invariant_factor_lists(7), vec![vec![7]]);
    }

    #[test]
    fn names() {
        let name = |g: &GroupTable| guess_group_name(g).unwrap();
        assert_eq!(name(&GroupTable::cyclic(1)), "C1");
        assert_eq!(name(&GroupTable::cyclic(6)), "C6");
        let c2 = GroupTable::cyclic(2);
        assert_eq!(name(&c2.direct_product(&c2)), "V4");
        assert_eq!(name(&c2.direct_product(&GroupTable::cyclic(4))), "C2 x C4");
        assert_eq!(name(&GroupTable::cyclic(3).direct_product(&GroupTable::cyclic(2))), "C6");
        assert_eq!(name(&samples::symmetric_group(3)), "S3");
        assert_eq!(name(&samples::quaternion_group()), "Q8");
        assert_eq!(name(&samples::dihedral_group(4)), "D4");
        assert_eq!(name(&samples::alternating_group(4)), "A4");
        assert_eq!(name(&samples::symmetric_group(4)), "S4");
        let d4 = samples::dihedral_group(4);
        assert_eq!(guess_group_name(&d4.direct_product(&c2)), None);
    }
}
