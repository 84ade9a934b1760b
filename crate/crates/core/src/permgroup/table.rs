use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// An abstract finite group given by its multiplication table over ids
/// `0..order`. Associativity is verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates a square table of ids with the default associativity cap.
    pub fn new(rows: &[Vec<usize>], labels: Vec<String>) -> Result<Self> {
        Self::with_cap(rows, labels, Limits::default().extension)
    }

    pub fn with_cap(rows: &[Vec<usize>], labels: Vec<String>, cap: usize) -> Result<Self> {
        let m = rows.len();
        let mut mul = Vec::with_capacity(m * m);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::NotSquare {
                    row: r,
                    expected: m,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= m {
                    return Err(Error::EntryOutOfRange { row: r, col: c });
                }
                mul.push(v as u32);
            }
        }
        Self::from_flat(m, mul, labels, cap)
    }

    /// Validates a row-major flat table.
    pub fn from_flat(order: usize, mul: Vec<u32>, labels: Vec<String>, cap: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if order > cap {
            return Err(Error::cap("group associativity check", cap, order));
        }
        if mul.len() != order * order || mul.iter().any(|&v| v as usize >= order) {
            return Err(Error::NotAGroup("malformed table".into()));
        }
        let labels = if labels.is_empty() {
            (0..order).map(|i| i.to_string()).collect()
        } else {
            labels
        };
        if labels.len() != order {
            return Err(Error::NotAGroup(format!(
                "{} labels for {order} elements",
                labels.len()
            )));
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[x])))?;
            inv.push(y as u32);
        }
        let bad = (0..order).into_par_iter().find_map_first(|a| {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        if let Some((a, b, c)) = bad {
            return Err(Error::NotAGroup(format!(
                "not associative at ({}, {}, {})",
                labels[a], labels[b], labels[c]
            )));
        }
        Ok(GroupTable {
            order,
            mul,
            identity,
            inv,
            labels,
        })
    }

    /// For tables produced from an already verified group.
    pub(crate) fn from_trusted(order: usize, mul: Vec<u32>, labels: Vec<String>) -> Self {
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let identity = (0..order).find(|&e| (0..order).all(|x| at(e, x) == x)).unwrap();
        let inv = (0..order)
            .map(|x| (0..order).find(|&y| at(x, y) == identity).unwrap() as u32)
            .collect();
        GroupTable {
            order,
            mul,
            identity,
            inv,
            labels,
        }
    }

    /// The cyclic group `Z_n` on residues `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::from_trusted(n, mul, (0..n).map(|i| i.to_string()).collect())
    }

    /// Direct product; element `(a, b)` has id `a * |other| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let (m1, m2) = (self.order, other.order);
        let m = m1 * m2;
        let mut mul = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                let a = self.mul(x / m2, y / m2);
                let b = other.mul(x % m2, y % m2);
                mul.push((a * m2 + b) as u32);
            }
        }
        let labels = (0..m)
            .map(|x| format!("{}.{}", self.labels[x / m2], other.labels[x % m2]))
            .collect();
        Self::from_trusted(m, mul, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn id_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for a in 0..self.order {
            *out.entry(self.element_order(a)).or_insert(0) += 1;
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Whether `set` is nonempty and closed under products and inverses.
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        !set.is_empty()
            && set.iter().all(|&a| {
                member[self.inv(a)] && set.iter().all(|&b| member[self.mul(a, b)])
            })
    }

    /// Sorted subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// A short generating set, chosen greedily from high-order elements.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in by_order {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&a).is_ok() {
                continue;
            }
            gens.push(a);
            span = self.subgroup_generated(&gens);
        }
        gens
    }

    /// Restriction of the table to a subgroup, with ids renumbered by
    /// position in the sorted `set`.
    pub fn subgroup_table(&self, set: &[usize]) -> Result<GroupTable> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !self.is_subgroup(&sorted) {
            return Err(Error::NotASubgroup("not closed under product and inverse".into()));
        }
        let pos = |x: usize| sorted.binary_search(&x).unwrap() as u32;
        let m = sorted.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &sorted {
            for &b in &sorted {
                mul.push(pos(self.mul(a, b)));
            }
        }
        let labels = sorted.iter().map(|&x| self.labels[x].clone()).collect();
        Ok(GroupTable::from_trusted(m, mul, labels))
    }
}
