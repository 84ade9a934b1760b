//! Exhaustive generation of right loops of small order.
//!
//! Tables live on `{0, …, n-1}` with identity 0. Cells are filled in
//! row-major order, smallest value first, so tables are produced in
//! lexicographic order of their flattened form. Each column must end up a
//! permutation; several predicates are also tested on partial tables.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::innermaps::inner_map;
use crate::limits::Limits;
use crate::permgroup::Perm;
use crate::rightloop::{default_labels, RightLoop};
use crate::twistedaut::{automorphism_law, TwistedGyroAnalysis};
use crate::twistedsub::is_twisted_gyrogroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    UniqueInverses,
    /// `f(x', x) = I` for all `x`.
    InverseInner,
    /// Twisted right gyrogroup.
    Trg,
    /// Every inner mapping is an automorphism.
    Ar,
    TwistedGyrogroup,
    Aip,
    LeftAlternative,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::UniqueInverses,
        Predicate::InverseInner,
        Predicate::Trg,
        Predicate::Ar,
        Predicate::TwistedGyrogroup,
        Predicate::Aip,
        Predicate::LeftAlternative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::UniqueInverses => "unique-inverses",
            Predicate::InverseInner => "inverse-inner",
            Predicate::Trg => "trg",
            Predicate::Ar => "ar",
            Predicate::TwistedGyrogroup => "twisted-gyrogroup",
            Predicate::Aip => "aip",
            Predicate::LeftAlternative => "left-alternative",
        }
    }

    pub fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Evaluates the predicate on a full table.
    pub fn holds(self, t: &RightLoop) -> bool {
        let n = t.order();
        match self {
            Predicate::UniqueInverses => t.has_unique_inverses(),
            Predicate::InverseInner => {
                (0..n).all(|x| inner_map(t, t.left_inverse(x), x).is_identity())
            }
            Predicate::Trg => trg_analysis(t).is_some(),
            Predicate::Ar => {
                (0..n).all(|y| (0..n).all(|z| automorphism_law(t, &inner_map(t, y, z))))
            }
            Predicate::TwistedGyrogroup => trg_analysis(t)
                .is_some_and(|a| is_twisted_gyrogroup(&a).expect("analysis is a TRG")),
            Predicate::Aip => t.has_aip().unwrap_or(false),
            Predicate::LeftAlternative => t.has_left_alternative(),
        }
    }

    fn needs_unique_inverses(self) -> bool {
        !matches!(self, Predicate::Ar | Predicate::LeftAlternative)
    }

    fn needs_inverse_inner(self) -> bool {
        matches!(
            self,
            Predicate::InverseInner | Predicate::Trg | Predicate::TwistedGyrogroup
        )
    }
}

impl std::str::FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown predicate `{s}` (expected one of {})",
                    Predicate::ALL.iter().map(|p| p.name()).join(", ")
                ))
            })
    }
}

fn trg_analysis(t: &RightLoop) -> Option<TwistedGyroAnalysis> {
    TwistedGyroAnalysis::new(t).ok().filter(TwistedGyroAnalysis::is_trg)
}

/// `((n-1)!)^(n-1)`.
pub fn right_loop_count(n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let f: u128 = (1..n as u128).product();
    f.pow(n as u32 - 1)
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::cap("right loop enumeration order", cap, n));
    }
    Ok(())
}

struct Search {
    n: usize,
    op: Vec<u8>,
    col_used: Vec<u32>,
    unique_inverses: bool,
    inverse_inner: bool,
    left_alternative: bool,
}

impl Search {
    fn new(n: usize, filter: &[Predicate]) -> Self {
        let mut op = vec![0u8; n * n];
        let mut col_used = vec![0u32; n];
        for x in 0..n {
            op[x] = x as u8;
            op[x * n] = x as u8;
            col_used[x] |= 1 << x;
        }
        for x in 1..n {
            col_used[0] |= 1 << x;
        }
        Search {
            n,
            op,
            col_used,
            unique_inverses: filter.iter().any(|p| p.needs_unique_inverses()),
            inverse_inner: filter.iter().any(|p| p.needs_inverse_inner()),
            left_alternative: filter.contains(&Predicate::LeftAlternative),
        }
    }

    #[inline]
    fn at(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y] as usize
    }

    /// Checks on a freshly completed row `r`, given rows `0..=r`.
    fn row_ok(&self, r: usize) -> bool {
        let n = self.n;
        if self.left_alternative {
            for a in 0..=r {
                let aa = self.at(a, a);
                if aa <= r && a.max(aa) == r && !(0..n).all(|b| self.at(aa, b) == self.at(a, self.at(a, b))) {
                    return false;
                }
            }
        }
        if self.inverse_inner {
            // (s ∘ x') ∘ x = s whenever all cells involved are known.
            for x in 1..n {
                let Some(xp) = (0..=r).find(|&s| self.at(s, x) == 0) else {
                    continue;
                };
                for s in 0..=r {
                    let u = self.at(s, xp);
                    if u <= r && self.at(u, x) != s {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, visit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let n = self.n;
        if cell == n * n {
            return visit(&self.op);
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            return self.run(cell + 1, visit);
        }
        for v in 0..n {
            if self.col_used[c] & (1 << v) != 0 {
                continue;
            }
            // Inverses are two-sided iff the zero pattern is symmetric.
            if self.unique_inverses && c < r && (v == 0) != (self.at(c, r) == 0) {
                continue;
            }
            self.op[cell] = v as u8;
            self.col_used[c] |= 1 << v;
            let ok = c + 1 < n || self.row_ok(r);
            let go_on = !ok || self.run(cell + 1, visit);
            self.col_used[c] &= !(1 << v);
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn accept(n: usize, flat: &[u8], filter: &[Predicate]) -> Option<RightLoop> {
    let t = RightLoop::from_flat(n, flat.to_vec(), default_labels(n)).expect("generated table is a right loop");
    filter.iter().all(|p| p.holds(&t)).then_some(t)
}

/// Calls `visit` on every right loop of order `n` satisfying `filter`, in
/// lexicographic order; stops early when `visit` returns false.
pub fn for_each_right_loop(
    n: usize,
    filter: &[Predicate],
    mut visit: impl FnMut(RightLoop) -> bool,
) -> Result<()> {
    check_order(n, Limits::default().enumerate_order)?;
    for_each_unchecked(n, filter, None, &mut visit);
    Ok(())
}

/// `prefix` fixes row 1.
fn for_each_unchecked(n: usize, filter: &[Predicate], prefix: Option<&[u8]>, visit: &mut dyn FnMut(RightLoop) -> bool) {
    let mut search = Search::new(n, filter);
    let start = match prefix {
        Some(row) => {
            for (c, &v) in row.iter().enumerate().skip(1) {
                search.op[n + c] = v;
                search.col_used[c] |= 1 << v;
            }
            if !search.row_ok(1) {
                return;
            }
            2 * n
        }
        None => 0,
    };
    search.run(start, &mut |flat| match accept(n, flat, filter) {
        Some(t) => visit(t),
        None => true,
    });
}

/// Every choice of row 1 compatible with the column constraints, in
/// lexicographic order.
fn first_rows(n: usize) -> Vec<Vec<u8>> {
    if n < 2 {
        return Vec::new();
    }
    // Row 1: 1∘0 = 1, and 1∘c ≠ c for c ≥ 1 (c already sits at 0∘c).
    (0..n)
        .map(|_| 0..n as u8)
        .multi_cartesian_product()
        .filter(|row| row[0] == 1 && (1..n).all(|c| row[c] as usize != c))
        .collect()
}

/// All right loops of order `n` satisfying `filter`, in lexicographic order.
pub fn enumerate_right_loops(n: usize, filter: &[Predicate]) -> Result<Vec<RightLoop>> {
    enumerate_right_loops_with_cap(n, filter, Limits::default().enumerate_order)
}

pub fn enumerate_right_loops_with_cap(n: usize, filter: &[Predicate], cap: usize) -> Result<Vec<RightLoop>> {
    sweep_with_cap(n, filter, cap, |t| Some(t.clone()))
}

/// Applies `f` to every right loop satisfying `filter`, searching subtrees
/// (one per choice of row 1) in parallel. Results keep lexicographic order.
pub fn sweep<T: Send>(
    n: usize,
    filter: &[Predicate],
    f: impl Fn(&RightLoop) -> Option<T> + Sync,
) -> Result<Vec<T>> {
    sweep_with_cap(n, filter, Limits::default().enumerate_order, f)
}

pub fn sweep_with_cap<T: Send>(
    n: usize,
    filter: &[Predicate],
    cap: usize,
    f: impl Fn(&RightLoop) -> Option<T> + Sync,
) -> Result<Vec<T>> {
    check_order(n, cap)?;
    if n == 1 {
        let mut out = Vec::new();
        for_each_unchecked(1, filter, None, &mut |t| {
            out.extend(f(&t));
            true
        });
        return Ok(out);
    }
    let parts: Vec<Vec<T>> = first_rows(n)
        .par_iter()
        .map(|row| {
            let mut out = Vec::new();
            for_each_unchecked(n, filter, Some(row), &mut |t| {
                out.extend(f(&t));
                true
            });
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Minimal flattened table over all relabelings fixing the identity.
pub fn canonical_form(t: &RightLoop) -> Vec<u8> {
    let n = t.order();
    let mut best: Option<Vec<u8>> = None;
    for tail in (1..n).permutations(n - 1) {
        let images: Vec<usize> = std::iter::once(0).chain(tail).collect();
        let p = Perm::from_images(&images).expect("permutation");
        let mut op = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                op[p.apply(x) * n + p.apply(y)] = p.apply(t.op(x, y)) as u8;
            }
        }
        if best.as_ref().is_none_or(|b| op < *b) {
            best = Some(op);
        }
    }
    best.unwrap_or_default()
}

/// Bitmask of the predicates a table satisfies.
pub fn predicate_mask(t: &RightLoop) -> u8 {
    let mut mask = 0;
    let ui = t.has_unique_inverses();
    if ui {
        mask |= Predicate::UniqueInverses.bit();
        if t.has_aip().unwrap_or(false) {
            mask |= Predicate::Aip.bit();
        }
    }
    if t.has_left_alternative() {
        mask |= Predicate::LeftAlternative.bit();
    }
    if Predicate::Ar.holds(t) {
        mask |= Predicate::Ar.bit();
    }
    if ui && Predicate::InverseInner.holds(t) {
        mask |= Predicate::InverseInner.bit();
        if let Some(a) = trg_analysis(t) {
            mask |= Predicate::Trg.bit();
            if is_twisted_gyrogroup(&a).expect("analysis is a TRG") {
                mask |= Predicate::TwistedGyrogroup.bit();
            }
        }
    }
    mask
}

pub fn mask_names(mask: u8) -> Vec<&'static str> {
    Predicate::ALL
        .iter()
        .filter(|p| mask & p.bit() != 0)
        .map(|p| p.name())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub mask: u8,
    pub predicates: Vec<&'static str>,
    pub count: u64,
    /// First table of the class in enumeration order, as rows.
    pub witness: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub order: usize,
    pub total: u64,
    /// Counts of isomorphism classes instead of raw tables.
    pub up_to_iso: bool,
    /// Sorted by mask.
    pub classes: Vec<CensusClass>,
}

impl Census {
    /// Number of tables satisfying `p`.
    pub fn count(&self, p: Predicate) -> u64 {
        self.classes
            .iter()
            .filter(|c| c.mask & p.bit() != 0)
            .map(|c| c.count)
            .sum()
    }

    /// Twisted gyrogroup ⇒ TRG ⇒ unique inverses and `f(x',x) = I`.
    pub fn nesting_holds(&self) -> bool {
        let implies = |m: u8, a: Predicate, b: u8| m & a.bit() == 0 || m & b == b;
        self.classes.iter().all(|c| {
            implies(c.mask, Predicate::TwistedGyrogroup, Predicate::Trg.bit())
                && implies(
                    c.mask,
                    Predicate::Trg,
                    Predicate::UniqueInverses.bit() | Predicate::InverseInner.bit(),
                )
                && implies(c.mask, Predicate::InverseInner, Predicate::UniqueInverses.bit())
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "total right loops{}: {}\n",
            if self.up_to_iso { " up to isomorphism" } else { "" },
            self.total
        );
        for c in &self.classes {
            let name = if c.predicates.is_empty() {
                "(none)".to_string()
            } else {
                c.predicates.join(",")
            };
            out.push_str(&format!("{:>10}  {}\n", c.count, name));
        }
        out
    }
}

pub fn census(n: usize, up_to_iso: bool) -> Result<Census> {
    census_with_cap(n, up_to_iso, Limits::default().enumerate_order)
}

pub fn census_with_cap(n: usize, up_to_iso: bool, cap: usize) -> Result<Census> {
    let rows = sweep_with_cap(n, &[], cap, |t| {
        let key = up_to_iso.then(|| canonical_form(t));
        Some((predicate_mask(t), key, t.rows()))
    })?;
    let mut seen = std::collections::HashSet::new();
    let mut classes: BTreeMap<u8, CensusClass> = BTreeMap::new();
    let mut total = 0;
    for (mask, key, table) in rows {
        if let Some(key) = key {
            if !seen.insert(key) {
                continue;
            }
        }
        total += 1;
        classes
            .entry(mask)
            .or_insert_with(|| CensusClass {
                mask,
                predicates: mask_names(mask),
                count: 0,
                witness: table,
            })
            .count += 1;
    }
    Ok(Census {
        order: n,
        total,
        up_to_iso,
        classes: classes.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every table whose non-identity columns are permutations sending 0 to
    /// the column label, in no particular order.
    fn naive(n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let cols: Vec<Vec<Vec<u8>>> = (1..n)
            .map(|c| {
                (0..n as u8)
                    .permutations(n)
                    .filter(|p| p[0] as usize == c)
                    .collect()
            })
            .collect();
        for choice in cols.iter().map(|v| v.iter()).multi_cartesian_product() {
            let mut op = vec![0u8; n * n];
            for x in 0..n {
                op[x * n] = x as u8;
            }
            for (c, col) in choice.iter().enumerate() {
                for x in 0..n {
                    op[x * n + c + 1] = col[x];
                }
            }
            if (0..n).all(|x| op[x] as usize == x) {
                out.push(op);
            }
        }
        out
    }

    #[test]
    fn counts() {
        assert_eq!(right_loop_count(2), 1);
        assert_eq!(right_loop_count(3), 4);
        assert_eq!(right_loop_count(4), 216);
        for n in 1..=4 {
            assert_eq!(enumerate_right_loops(n, &[]).unwrap().len() as u128, right_loop_count(n));
        }
    }

    #[test]
    fn lexicographic_order() {
        let all = enumerate_right_loops(4, &[]).unwrap();
        assert!(all.windows(2).all(|w| w[0].flat() < w[1].flat()));
    }

    #[test]
    fn matches_naive_for_every_predicate() {
        for n in 2..=4 {
            let mut raw = naive(n);
            raw.sort();
            let tables: Vec<RightLoop> = raw
                .iter()
                .map(|op| RightLoop::from_flat(n, op.clone(), default_labels(n)).unwrap())
                .collect();
            for p in Predicate::ALL {
                let expect: Vec<&[u8]> = tables.iter().filter(|t| p.holds(t)).map(|t| t.flat()).collect();
                let got = enumerate_right_loops(n, &[p]).unwrap();
                let got: Vec<&[u8]> = got.iter().map(|t| t.flat()).collect();
                assert_eq!(got, expect, "n={n}, {}", p.name());
            }
        }
    }

    #[test]
    fn cap_and_parse() {
        assert!(matches!(enumerate_right_loops(7, &[]), Err(Error::CapExceeded { .. })));
        assert_eq!("trg".parse::<Predicate>().unwrap(), Predicate::Trg);
        assert!("nope".parse::<Predicate>().is_err());
    }

    #[test]
    fn census_of_order_3() {
        let c = census(3, false).unwrap();
        assert_eq!(c.total, 4);
        assert_eq!(c.classes.iter().map(|k| k.count).sum::<u64>(), 4);
        assert!(c.nesting_holds());
        assert!(c.render().starts_with("total right loops: 4\n"));
        let c2 = census(2, false).unwrap();
        assert_eq!(c2.total, 1);
        assert_eq!(c2.classes.len(), 1);
        assert!(c2.classes[0].count >= 1);
    }

    #[test]
    fn canonical_forms() {
        let z3 = crate::samples::cyclic_loop(3);
        let swapped = z3.transport(&Perm::from_images(&[0, 2, 1]).unwrap()).unwrap();
        assert_eq!(canonical_form(&z3), canonical_form(&swapped));
        let iso = census(3, true).unwrap();
        assert!(iso.total < 4);
    }
}
