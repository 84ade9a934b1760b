//! Twisted automorphisms, `Aut(S,∘) ⊆ TAut(S,∘)`, twisted right gyrogroups
//! and the involution `η`.
//!
//! A bijection `h` of a right loop with unique inverses is a twisted
//! automorphism when `h(x ∘ y) = h(x')' ∘ h(y)` for all `x` and all `y ≠ e`.
//! For such loops `η(h) : x ↦ h(x')'` is an involutive automorphism of
//! `Sym(S∖{e})`; on a twisted right gyrogroup it restricts to `G_S` and
//! coincides with every `σ_y`, `y ≠ e`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::innermaps::{sigma_unchecked, InnerMaps};
use crate::limits::Limits;
use crate::permgroup::{GroupTable, Perm, PermGroup};
use crate::report::{Check, Report};
use crate::rightloop::RightLoop;

pub fn is_twisted_automorphism(t: &RightLoop, h: &Perm) -> Result<bool> {
    if !t.has_unique_inverses() {
        return Err(Error::NoUniqueInverses);
    }
    if h.degree() != t.order() {
        return Err(Error::DegreeMismatch(h.degree(), t.order()));
    }
    Ok(twisted_law(t, h))
}

/// Assumes unique inverses.
#[inline]
pub(crate) fn twisted_law(t: &RightLoop, h: &Perm) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        let left = t.left_inverse(h.apply(t.left_inverse(x)));
        (1..n).all(|y| h.apply(t.op(x, y)) == t.op(left, h.apply(y)))
    })
}

#[inline]
pub(crate) fn automorphism_law(t: &RightLoop, h: &Perm) -> bool {
    let n = t.order();
    (0..n).all(|x| (0..n).all(|y| h.apply(t.op(x, y)) == t.op(h.apply(x), h.apply(y))))
}

fn factorial(k: usize) -> usize {
    (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(i)).unwrap_or(usize::MAX)
}

fn check_bruteforce_cap(t: &RightLoop, cap: usize) -> Result<()> {
    let needed = factorial(t.order().saturating_sub(1));
    if needed > cap {
        return Err(Error::cap(
            "TAut/Aut brute force over (n-1)! permutations; use taut_lower_bound",
            cap,
            needed,
        ));
    }
    Ok(())
}

/// Every permutation of `0..n` satisfying `keep`, sorted.
fn filter_permutations(n: usize, fix_identity: bool, keep: impl Fn(&Perm) -> bool + Sync) -> Vec<Perm> {
    let start = usize::from(fix_identity);
    let mut out: Vec<Perm> = (start..n)
        .permutations(n - start)
        .par_bridge()
        .filter_map(|tail| {
            let images: Vec<usize> = (0..start).chain(tail).collect();
            let p = Perm::from_images(&images).expect("permutation");
            keep(&p).then_some(p)
        })
        .collect();
    out.sort();
    out
}

/// `TAut(S,∘)`, by filtering every bijection of `S`.
pub fn taut_group(t: &RightLoop) -> Result<PermGroup> {
    taut_group_with_cap(t, Limits::default().taut_bruteforce)
}

pub fn taut_group_with_cap(t: &RightLoop, cap: usize) -> Result<PermGroup> {
    if !t.has_unique_inverses() {
        return Err(Error::NoUniqueInverses);
    }
    check_bruteforce_cap(t, cap)?;
    // Bijections moving e are scanned too; none may satisfy the law.
    let found = filter_permutations(t.order(), false, |p| twisted_law(t, p));
    if let Some(p) = found.iter().find(|p| !p.fixes(0)) {
        return Err(Error::Internal(format!(
            "twisted automorphism {} moves the identity",
            p.to_cycle_string(t.labels())
        )));
    }
    PermGroup::from_closed_set(t.order(), found)
        .map_err(|e| Error::Internal(format!("TAut is not a group: {e}")))
}

/// `Aut(S,∘)`, by filtering the bijections fixing `e`.
pub fn aut_group(t: &RightLoop) -> Result<PermGroup> {
    aut_group_with_cap(t, Limits::default().taut_bruteforce)
}

pub fn aut_group_with_cap(t: &RightLoop, cap: usize) -> Result<PermGroup> {
    check_bruteforce_cap(t, cap)?;
    let found = filter_permutations(t.order(), true, |p| automorphism_law(t, p));
    PermGroup::from_closed_set(t.order(), found)
        .map_err(|e| Error::Internal(format!("Aut is not a group: {e}")))
}

/// Automorphisms by backtracking over images of `1, 2, …`, checking every
/// product whose operands and result are already mapped.
pub fn aut_group_backtrack(t: &RightLoop) -> Result<PermGroup> {
    let n = t.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut found = Vec::new();
    aut_extend(t, 1, &mut map, &mut used, &mut found);
    PermGroup::from_closed_set(n, found)
}

fn aut_extend(t: &RightLoop, next: usize, map: &mut [usize], used: &mut [bool], out: &mut Vec<Perm>) {
    let n = t.order();
    if next == n {
        out.push(Perm::from_images(map).expect("bijection"));
        return;
    }
    for v in 1..n {
        if used[v] {
            continue;
        }
        map[next] = v;
        used[v] = true;
        let consistent = (0..=next).all(|x| {
            [(x, next), (next, x)].iter().all(|&(a, b)| {
                let ab = t.op(a, b);
                ab > next || map[ab] == t.op(map[a], map[b])
            })
        }) && (0..=next).all(|a| {
            (0..=next).all(|b| {
                let ab = t.op(a, b);
                ab != next || map[ab] == t.op(map[a], map[b])
            })
        });
        if consistent {
            aut_extend(t, next + 1, map, used, out);
        }
        used[v] = false;
        map[next] = usize::MAX;
    }
}

/// A subgroup of `TAut` usable beyond the brute-force cap: the closure of
/// `Aut(S,∘)` and of every inner mapping that is a twisted automorphism.
/// Not exact: the true `TAut` may be larger.
#[derive(Debug, Clone)]
pub struct TautLowerBound {
    pub group: PermGroup,
    pub exact: bool,
}

pub fn taut_lower_bound(t: &RightLoop) -> Result<TautLowerBound> {
    if !t.has_unique_inverses() {
        return Err(Error::NoUniqueInverses);
    }
    let idx = InnerMaps::new(t)?;
    let mut gens: Vec<Perm> = aut_group_backtrack(t)?.elements().to_vec();
    for y in 0..t.order() {
        for z in 0..t.order() {
            if twisted_law(t, idx.f(y, z)) {
                gens.push(idx.f(y, z).clone());
            }
        }
    }
    gens.sort();
    gens.dedup();
    Ok(TautLowerBound {
        group: PermGroup::close(t.order(), &gens)?,
        exact: false,
    })
}

/// Sort key used when displaying permutation sets: moved points, then text.
pub fn display_key(p: &Perm, labels: &[String]) -> (usize, String) {
    (p.support_size(), p.to_compact_string(labels))
}

/// `{I,(2 3),(4 5),(2 3)(4 5)}`-style rendering of a permutation set.
pub fn render_set(perms: &[Perm], labels: &[String]) -> String {
    let mut sorted: Vec<&Perm> = perms.iter().collect();
    sorted.sort_by_key(|p| display_key(p, labels));
    let parts: Vec<String> = sorted.iter().map(|p| p.to_cycle_string(labels)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Result of testing the twisted-right-gyrogroup axioms on a right loop.
#[derive(Debug, Clone)]
pub struct TwistedGyroAnalysis {
    idx: InnerMaps,
    inverse_witness: Option<usize>,
    twisted_witness: Option<(usize, usize)>,
    eta: Option<Vec<usize>>,
    checks: Report,
}

impl TwistedGyroAnalysis {
    pub fn new(t: &RightLoop) -> Result<Self> {
        Ok(Self::from_inner_maps(InnerMaps::new(t)?))
    }

    pub fn from_inner_maps(idx: InnerMaps) -> Self {
        let t = idx.table();
        let n = t.order();
        let inverse_witness = idx.inverse_inner_witness();
        let mut analysis = TwistedGyroAnalysis {
            idx,
            inverse_witness,
            twisted_witness: None,
            eta: None,
            checks: Report::default(),
        };
        if inverse_witness.is_some() {
            return analysis;
        }
        let t = analysis.idx.table();
        if !t.has_unique_inverses() {
            // f(y', y) = I for all y forces unique inverses.
            analysis.checks.push(Check {
                name: "f(y',y) = I implies unique inverses".into(),
                cases: 1,
                witness: Some("inverses not two-sided".into()),
            });
            return analysis;
        }
        analysis.twisted_witness = (0..n)
            .cartesian_product(0..n)
            .find(|&(y, z)| !twisted_law(t, analysis.idx.f(y, z)));
        if analysis.twisted_witness.is_none() {
            analysis.compute_eta();
        }
        analysis
    }

    /// Materializes `η` on `G_S` and records the identities it must satisfy.
    fn compute_eta(&mut self) {
        let t = self.idx.table();
        let n = t.order();
        let labels = t.labels();
        let show = |p: &Perm| p.to_cycle_string(labels);
        let gs = self.idx.gs();
        let m = gs.order();
        let images: Vec<Perm> = gs.elements().iter().map(|h| eta_unchecked(t, h)).collect();

        let mut closed = Check::new("eta(G_S) in G_S");
        let ids: Vec<Option<usize>> = images.iter().map(|p| gs.index_of(p)).collect();
        for (hi, id) in ids.iter().enumerate() {
            closed.case(id.is_some(), || format!("h={}", show(gs.element(hi))));
        }
        let closed_ok = closed.holds();
        self.checks.push(closed);
        if !closed_ok {
            return;
        }
        let eta: Vec<usize> = ids.into_iter().map(Option::unwrap).collect();

        let mut involution = Check::new("eta^2 = id");
        for hi in 0..m {
            involution.case(eta[eta[hi]] == hi, || format!("h={}", show(gs.element(hi))));
        }
        self.checks.push(involution);

        let mul = gs.mul_table();
        let mut hom = Check::new("eta(hk) = eta(h) eta(k)");
        for hi in 0..m {
            for ki in 0..m {
                hom.case(eta[mul[hi * m + ki] as usize] == mul[eta[hi] * m + eta[ki]] as usize, || {
                    format!("h={}, k={}", show(gs.element(hi)), show(gs.element(ki)))
                });
            }
        }
        self.checks.push(hom);

        let mut action = Check::new("(x∘y)h = x eta(h) ∘ yh, y≠e");
        for (hi, h) in gs.elements().iter().enumerate() {
            let eh = gs.element(eta[hi]);
            for x in 0..n {
                for y in 1..n {
                    action.case(h.apply(t.op(x, y)) == t.op(eh.apply(x), h.apply(y)), || {
                        format!("x={}, y={}, h={}", labels[x], labels[y], show(h))
                    });
                }
            }
        }
        self.checks.push(action);

        let mut sigma_eq = Check::new("sigma_y = eta on G_S, y≠e");
        for y in 1..n {
            for (hi, h) in gs.elements().iter().enumerate() {
                sigma_eq.case(sigma_unchecked(t, y, h) == *gs.element(eta[hi]), || {
                    format!("y={}, h={}", labels[y], show(h))
                });
            }
        }
        self.checks.push(sigma_eq);

        let mut in_taut = Check::new("G_S in TAut");
        for h in gs.elements() {
            in_taut.case(twisted_law(t, h), || format!("h={}", show(h)));
        }
        self.checks.push(in_taut);

        let mut involut = Check::new("eta(f(y,z)) = f(y'f(y,z), y∘z)^-1, y,z≠e");
        for y in 1..n {
            for z in 1..n {
                let fyz = self.idx.f(y, z);
                let yprime = t.left_inverse(y);
                let rhs = self.idx.f(fyz.apply(yprime), t.op(y, z)).inverse();
                let lhs = gs.element(eta[gs.index_of(fyz).expect("generator")]);
                involut.case(*lhs == rhs, || format!("y={}, z={}", labels[y], labels[z]));
            }
        }
        self.checks.push(involut);

        let mut fixed = Check::new("h in Aut iff eta(h) = h, h in G_S");
        for (hi, h) in gs.elements().iter().enumerate() {
            fixed.case(automorphism_law(t, h) == (eta[hi] == hi), || format!("h={}", show(h)));
        }
        self.checks.push(fixed);

        self.eta = Some(eta);
    }

    pub fn table(&self) -> &RightLoop {
        self.idx.table()
    }

    pub fn inner_maps(&self) -> &InnerMaps {
        &self.idx
    }

    pub fn gs(&self) -> &PermGroup {
        self.idx.gs()
    }

    /// Both axioms hold and `η` restricts to an automorphism of `G_S`.
    pub fn is_trg(&self) -> bool {
        self.eta.is_some()
    }

    /// Verified identities (empty unless both axioms hold).
    pub fn checks(&self) -> &Report {
        &self.checks
    }

    /// First `y` with `f(y', y) ≠ I`.
    pub fn inverse_witness(&self) -> Option<usize> {
        self.inverse_witness
    }

    /// First `(y, z)` whose inner mapping is not a twisted automorphism.
    pub fn twisted_witness(&self) -> Option<(usize, usize)> {
        self.twisted_witness
    }

    pub fn failure_reason(&self) -> Option<String> {
        let labels = self.table().labels();
        if let Some(y) = self.inverse_witness {
            return Some(format!("f(y',y) != I at y={}", labels[y]));
        }
        if let Some((y, z)) = self.twisted_witness {
            return Some(format!(
                "f({},{}) is not a twisted automorphism",
                labels[y], labels[z]
            ));
        }
        self.checks.violations().next().map(|c| {
            format!("{} fails at {}", c.name, c.witness.as_deref().unwrap_or("?"))
        })
    }

    /// `η` on `G_S` as a map of element indices.
    pub fn eta_on_gs(&self) -> Option<&[usize]> {
        self.eta.as_deref()
    }

    /// `η(h) : x ↦ h(x')'` for any `h` fixing `e`.
    pub fn eta_on_sym(&self, h: &Perm) -> Result<Perm> {
        eta_on_sym(self.table(), h)
    }

    /// Unordered pairs `{h, η(h)}` with `h ≠ η(h)`, as element indices, each
    /// pair and the list sorted by [`display_key`].
    pub fn eta_pairs(&self) -> Vec<(usize, usize)> {
        let Some(eta) = &self.eta else {
            return Vec::new();
        };
        let labels = self.table().labels();
        let key = |i: usize| display_key(self.gs().element(i), labels);
        let mut pairs: Vec<(usize, usize)> = eta
            .iter()
            .enumerate()
            .filter(|&(h, &e)| h != e)
            .map(|(h, &e)| if key(h) <= key(e) { (h, e) } else { (e, h) })
            .collect();
        pairs.sort_by_key(|&(a, _)| key(a));
        pairs.dedup();
        pairs
    }

    /// `((234),(243)) ((235),(253)) …`; `I` for a trivial pairing.
    pub fn render_eta(&self) -> String {
        let labels = self.table().labels();
        let pairs = self.eta_pairs();
        if pairs.is_empty() {
            return "I".into();
        }
        pairs
            .iter()
            .map(|&(a, b)| {
                format!(
                    "({},{})",
                    self.gs().element(a).to_compact_string(labels),
                    self.gs().element(b).to_compact_string(labels)
                )
            })
            .join(" ")
    }
}

/// Alias of [`TwistedGyroAnalysis::new`].
pub fn is_twisted_right_gyrogroup(t: &RightLoop) -> Result<TwistedGyroAnalysis> {
    TwistedGyroAnalysis::new(t)
}

pub fn eta_on_sym(t: &RightLoop, h: &Perm) -> Result<Perm> {
    if !t.has_unique_inverses() {
        return Err(Error::NoUniqueInverses);
    }
    if h.degree() != t.order() {
        return Err(Error::DegreeMismatch(h.degree(), t.order()));
    }
    if !h.fixes(0) {
        return Err(Error::MovesIdentity(h.to_cycle_string(t.labels())));
    }
    Ok(eta_unchecked(t, h))
}

#[inline]
pub(crate) fn eta_unchecked(t: &RightLoop, h: &Perm) -> Perm {
    Perm::from_fn_unchecked(t.order(), |x| t.left_inverse(h.apply(t.left_inverse(x))))
}

/// `TAut = Aut` on a group table.
pub fn check_group_taut_collapse(gt: &GroupTable) -> Result<bool> {
    let t = RightLoop::from_group(gt)?;
    Ok(taut_group(&t)?.elements() == aut_group(&t)?.elements())
}

/// `TAut = Aut` on a right loop with the automorphic inverse property and the
/// left alternative law; fails if either hypothesis does not hold.
pub fn check_aip_la_collapse(t: &RightLoop) -> Result<bool> {
    if !t.has_aip()? {
        return Err(Error::Precondition("automorphic inverse property fails".into()));
    }
    if !t.has_left_alternative() {
        return Err(Error::Precondition("left alternative law fails".into()));
    }
    Ok(taut_group(t)?.elements() == aut_group(t)?.elements())
}

/// The finite odd-order statement: if `G_S ∩ Aut(S,∘) = {I}` then `G_S` is
/// abelian of odd order and `(x∘y)h = x h⁻¹ ∘ yh` for `y ≠ e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddAbelianReport {
    /// `G_S ∩ Aut(S,∘) = {I}`.
    pub applicable: bool,
    pub gs_order: usize,
    pub odd: bool,
    pub abelian: bool,
    /// `η(h) = h⁻¹` on `G_S`.
    pub eta_is_inversion: bool,
    pub inversion_action: Check,
}

impl OddAbelianReport {
    /// Conclusion holds or hypothesis not met.
    pub fn consistent(&self) -> bool {
        !self.applicable
            || (self.odd && self.abelian && self.eta_is_inversion && self.inversion_action.holds())
    }
}

pub fn check_odd_abelian(analysis: &TwistedGyroAnalysis) -> Result<OddAbelianReport> {
    let eta = analysis
        .eta_on_gs()
        .ok_or_else(|| Error::NotTwistedRightGyrogroup(analysis.failure_reason().unwrap_or_default()))?;
    let t = analysis.table();
    let n = t.order();
    let gs = analysis.gs();
    let labels = t.labels();
    let applicable = gs
        .elements()
        .iter()
        .all(|h| h.is_identity() || !automorphism_law(t, h));
    let mut inversion_action = Check::new("(x∘y)h = x h^-1 ∘ yh, y≠e");
    let mut eta_is_inversion = true;
    if applicable {
        for (hi, h) in gs.elements().iter().enumerate() {
            let hinv = h.inverse();
            eta_is_inversion &= *gs.element(eta[hi]) == hinv;
            for x in 0..n {
                for y in 1..n {
                    inversion_action.case(h.apply(t.op(x, y)) == t.op(hinv.apply(x), h.apply(y)), || {
                        format!("x={}, y={}, h={}", labels[x], labels[y], h.to_cycle_string(labels))
                    });
                }
            }
        }
    }
    Ok(OddAbelianReport {
        applicable,
        gs_order: gs.order(),
        odd: gs.order() % 2 == 1,
        abelian: gs.is_abelian(),
        eta_is_inversion,
        inversion_action,
    })
}
