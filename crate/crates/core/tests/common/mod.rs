//! Brute-force reference implementations on plain `Vec` tables.
//!
//! Everything here works straight from the definitions, without pruning or
//! the library's group machinery. Tables use identity 0; `t[x][y] = x ∘ y`.
//! Permutations are image vectors; `then(p, q)` applies `p` first.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Table = Vec<Vec<usize>>;
pub type P = Vec<usize>;

pub fn from_lib(t: &rloop::RightLoop) -> Table {
    t.rows()
}

pub fn perm_of(p: &rloop::Perm) -> P {
    p.images().collect()
}

pub fn identity(n: usize) -> P {
    (0..n).collect()
}

pub fn then(p: &P, q: &P) -> P {
    p.iter().map(|&x| q[x]).collect()
}

pub fn inverse(p: &P) -> P {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<P> {
    fn go(cur: &mut P, used: &mut Vec<bool>, out: &mut Vec<P>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every table with identity 0 whose columns are permutations, sorted by
/// flattened form.
pub fn all_right_loops(n: usize) -> Vec<Table> {
    let perms = all_perms(n);
    let mut tables = vec![vec![vec![0; n]; n]];
    for x in 0..n {
        tables[0][x][0] = x;
    }
    for c in 1..n {
        let cols: Vec<&P> = perms.iter().filter(|p| p[0] == c).collect();
        let mut next = Vec::new();
        for t in &tables {
            for col in &cols {
                let mut t = t.clone();
                for x in 0..n {
                    t[x][c] = col[x];
                }
                next.push(t);
            }
        }
        tables = next;
    }
    tables.retain(|t| (0..n).all(|y| t[0][y] == y));
    tables.sort();
    tables
}

pub fn left_inverse(t: &Table, x: usize) -> usize {
    (0..t.len()).find(|&w| t[w][x] == 0).unwrap()
}

pub fn unique_inverses(t: &Table) -> bool {
    (0..t.len()).all(|x| t[x][left_inverse(t, x)] == 0)
}

/// `f(y,z)(x) ∘ (y∘z) = (x∘y)∘z`.
pub fn inner(t: &Table, y: usize, z: usize) -> P {
    let n = t.len();
    (0..n)
        .map(|x| {
            let target = t[t[x][y]][z];
            (0..n).find(|&w| t[w][t[y][z]] == target).unwrap()
        })
        .collect()
}

pub fn closure(n: usize, gens: &[P]) -> BTreeSet<P> {
    let mut set = BTreeSet::from([identity(n)]);
    let mut frontier = vec![identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = then(&p, g);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    set
}

pub fn gs(t: &Table) -> BTreeSet<P> {
    let n = t.len();
    let gens: Vec<P> = (0..n).flat_map(|y| (0..n).map(move |z| (y, z))).map(|(y, z)| inner(t, y, z)).collect();
    closure(n, &gens)
}

pub fn is_automorphism(t: &Table, h: &P) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| h[t[x][y]] == t[h[x]][h[y]]))
}

/// `h(x∘y) = (h(x'))' ∘ h(y)` for all `x` and `y ≠ e`.
pub fn is_twisted_automorphism(t: &Table, h: &P) -> bool {
    let n = t.len();
    (0..n).all(|x| {
        let hx = left_inverse(t, h[left_inverse(t, x)]);
        (1..n).all(|y| h[t[x][y]] == t[hx][h[y]])
    })
}

pub fn aut(t: &Table) -> BTreeSet<P> {
    all_perms(t.len()).into_iter().filter(|h| is_automorphism(t, h)).collect()
}

pub fn taut(t: &Table) -> BTreeSet<P> {
    all_perms(t.len()).into_iter().filter(|h| is_twisted_automorphism(t, h)).collect()
}

/// `η(h)(x) = (h(x'))'`.
pub fn eta(t: &Table, h: &P) -> P {
    (0..t.len()).map(|x| left_inverse(t, h[left_inverse(t, x)])).collect()
}

pub fn inverse_inner(t: &Table) -> bool {
    (0..t.len()).all(|y| inner(t, left_inverse(t, y), y) == identity(t.len()))
}

pub fn is_trg(t: &Table) -> bool {
    let n = t.len();
    unique_inverses(t)
        && inverse_inner(t)
        && (0..n).all(|y| (0..n).all(|z| is_twisted_automorphism(t, &inner(t, y, z))))
}

pub fn is_ar(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|y| (0..n).all(|z| is_automorphism(t, &inner(t, y, z))))
}

pub fn is_twisted_gyrogroup(t: &Table) -> bool {
    let n = t.len();
    is_trg(t) && (0..n).all(|x| (0..n).all(|y| inner(t, x, y) == inner(t, x, t[x][y])))
}

pub fn has_aip(t: &Table) -> bool {
    let n = t.len();
    let inv = |x| left_inverse(t, x);
    unique_inverses(t) && (0..n).all(|a| (0..n).all(|b| inv(t[a][b]) == t[inv(a)][inv(b)]))
}

pub fn left_alternative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| t[t[a][a]][b] == t[a][t[a][b]]))
}

pub fn is_associative(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])))
}

pub fn is_abelian(set: &BTreeSet<P>) -> bool {
    set.iter().all(|p| set.iter().all(|q| then(p, q) == then(q, p)))
}

/// Element-order multiset of a permutation group, sorted.
pub fn order_profile(set: &BTreeSet<P>) -> Vec<usize> {
    let mut orders: Vec<usize> = set
        .iter()
        .map(|p| {
            let id = identity(p.len());
            let mut q = p.clone();
            let mut k = 1;
            while q != id {
                q = then(&q, p);
                k += 1;
            }
            k
        })
        .collect();
    orders.sort();
    orders
}
