//! Symmetric groups of small degree with a precomputed multiplication table.
//! Elements are numbered in lexicographic order of their image lists, so the
//! identity is 0 and index order agrees with [`Perm`]'s `Ord`.

use std::sync::OnceLock;

use itertools::Itertools;

use super::Perm;

pub const MAX_TABLE_DEGREE: usize = 6;

#[derive(Debug)]
pub struct SymTable {
    n: usize,
    count: usize,
    images: Vec<u8>,
    mul: Vec<u16>,
    rank: Vec<u16>,
}

impl SymTable {
    /// Shared table for degree `n`, or `None` above [`MAX_TABLE_DEGREE`].
    pub fn get(n: usize) -> Option<&'static SymTable> {
        static TABLES: [OnceLock<SymTable>; MAX_TABLE_DEGREE + 1] = [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];
        TABLES.get(n).map(|cell| cell.get_or_init(|| SymTable::build(n)))
    }

    fn build(n: usize) -> Self {
        let images: Vec<u8> = (0..n as u8).permutations(n).flatten().collect();
        let count = images.len().checked_div(n).unwrap_or(1);
        let mut rank = vec![u16::MAX; n.pow(n as u32).max(1)];
        for i in 0..count {
            rank[code(&images[i * n..(i + 1) * n], n)] = i as u16;
        }
        let mut table = SymTable {
            n,
            count,
            images,
            mul: Vec::new(),
            rank,
        };
        let mut mul = Vec::with_capacity(count * count);
        for a in 0..count as u16 {
            for b in 0..count as u16 {
                mul.push(table.rank_of(|x| table.apply(b, table.apply(a, x))));
            }
        }
        table.mul = mul;
        table
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn apply(&self, p: u16, x: usize) -> usize {
        self.images[p as usize * self.n + x] as usize
    }

    /// Index of `a` then `b`.
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.count + b as usize]
    }

    /// Index of the map `x ↦ f(x)`, which must be a permutation.
    #[inline]
    pub fn rank_of(&self, f: impl Fn(usize) -> usize) -> u16 {
        let mut c = 0;
        for x in (0..self.n).rev() {
            c = c * self.n + f(x);
        }
        let r = self.rank[c];
        debug_assert!(r != u16::MAX, "not a permutation");
        r
    }

    pub fn to_perm(&self, p: u16) -> Perm {
        Perm::from_fn_unchecked(self.n, |x| self.apply(p, x))
    }
}

/// Base-`n` code of an image list, least significant digit first.
fn code(images: &[u8], n: usize) -> usize {
    images.iter().rev().fold(0, |c, &v| c * n + v as usize)
}
