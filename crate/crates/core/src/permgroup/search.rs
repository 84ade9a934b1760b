//! Backtracking search for isomorphisms between small group tables.
//!
//! A candidate is fixed by the images of a generating set of the source; the
//! rest of the map is forced, so each partial assignment is extended along
//! words in the assigned generators and rejected as soon as it is
//! inconsistent or non-injective.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgroup::GroupTable;

const UNSET: usize = usize::MAX;

/// All automorphisms of `gt` as id permutations, sorted lexicographically.
pub fn automorphisms(gt: &GroupTable) -> Result<Vec<Vec<usize>>> {
    automorphisms_with_cap(gt, Limits::default().aut_search)
}

pub fn automorphisms_with_cap(gt: &GroupTable, cap: usize) -> Result<Vec<Vec<usize>>> {
    if gt.order() > cap {
        return Err(Error::cap("automorphism search", cap, gt.order()));
    }
    let mut out = Vec::new();
    search_isomorphisms(gt, gt, &mut |map| {
        out.push(map);
        true
    });
    out.sort();
    Ok(out)
}

pub fn isomorphic(a: &GroupTable, b: &GroupTable) -> Result<bool> {
    isomorphic_with_cap(a, b, Limits::default().iso_search)
}

pub fn isomorphic_with_cap(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, cap)?.is_some())
}

/// First isomorphism `a → b` found, as a map on ids.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<Option<Vec<usize>>> {
    let need = a.order().max(b.order());
    if need > cap {
        return Err(Error::cap("isomorphism search", cap, need));
    }
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return Ok(None);
    }
    let mut found = None;
    search_isomorphisms(a, b, &mut |map| {
        found = Some(map);
        false
    });
    Ok(found)
}

/// Calls `visit` on every isomorphism `src → dst`; stops when it returns false.
fn search_isomorphisms(src: &GroupTable, dst: &GroupTable, visit: &mut dyn FnMut(Vec<usize>) -> bool) {
    if src.order() != dst.order() {
        return;
    }
    let gens = src.generating_set();
    let gen_orders: Vec<usize> = gens.iter().map(|&g| src.element_order(g)).collect();
    let dst_orders: Vec<usize> = (0..dst.order()).map(|x| dst.element_order(x)).collect();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(src, dst, &gens, &gen_orders, &dst_orders, &mut images, visit);
}

fn backtrack(
    src: &GroupTable,
    dst: &GroupTable,
    gens: &[usize],
    gen_orders: &[usize],
    dst_orders: &[usize],
    images: &mut Vec<usize>,
    visit: &mut dyn FnMut(Vec<usize>) -> bool,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(src, dst, gens, images).expect("checked at previous depth");
        return visit(map);
    }
    for cand in 0..dst.order() {
        if dst_orders[cand] != gen_orders[depth] {
            continue;
        }
        images.push(cand);
        let ok = extend(src, dst, &gens[..=depth], images).is_some();
        if ok && !backtrack(src, dst, gens, gen_orders, dst_orders, images, visit) {
            images.pop();
            return false;
        }
        images.pop();
    }
    true
}

/// Extends generator images to the subgroup they generate. `None` if the
/// assignment is not a well-defined injective homomorphism there.
fn extend(src: &GroupTable, dst: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; src.order()];
    let mut used = vec![false; dst.order()];
    map[src.identity()] = dst.identity();
    used[dst.identity()] = true;
    let mut queue = vec![src.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &im) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let v = dst.mul(map[x], im);
            if map[y] == UNSET {
                if used[v] {
                    return None;
                }
                used[v] = true;
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}
