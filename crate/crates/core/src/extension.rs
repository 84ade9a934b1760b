//! The group `G_S·S` built from a twisted right gyrogroup, and the converse
//! analysis of a subgroup with a right transversal inside a finite group.
//!
//! Pairs `(a, x)` with `a ∈ G_S`, `x ∈ S` get id `a·|S| + x`, where `a` is
//! the index of the permutation in the sorted element list of `G_S`. The
//! product is
//!
//! ```text
//! ax · by = a η(b) f(xθb, y) · (xθb ∘ y)   for x ≠ e
//! ae · by = ab · y
//! ```
//!
//! with `xθb = b(x)` and products in `G_S` read left to right.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::innermaps::{inner_map, sigma_unchecked};
use crate::limits::Limits;
use crate::permgroup::{automorphisms_with_cap, GroupTable, Perm};
use crate::report::{Check, Report};
use crate::rightloop::RightLoop;
use crate::twistedaut::TwistedGyroAnalysis;

#[derive(Debug, Clone)]
pub struct ExtensionGroup {
    base: TwistedGyroAnalysis,
    table: GroupTable,
    verification: Report,
}

pub fn build_extension(analysis: &TwistedGyroAnalysis) -> Result<ExtensionGroup> {
    build_extension_with_cap(analysis, Limits::default().extension)
}

pub fn build_extension_with_cap(analysis: &TwistedGyroAnalysis, cap: usize) -> Result<ExtensionGroup> {
    let eta = analysis.eta_on_gs().ok_or_else(|| {
        Error::NotTwistedRightGyrogroup(analysis.failure_reason().unwrap_or_default())
    })?;
    let t = analysis.table();
    let n = t.order();
    let gs = analysis.gs();
    let k = gs.order();
    let m = k * n;
    if m > cap {
        return Err(Error::cap("extension group order", cap, m));
    }
    let gmul = gs.mul_table();
    let gm = |a: usize, b: usize| gmul[a * k + b] as usize;
    let act: Vec<usize> = gs.elements().iter().flat_map(|p| p.images()).collect();
    let idx = analysis.inner_maps();
    let fidx: Vec<usize> = (0..n * n)
        .map(|i| gs.index_of(idx.f(i / n, i % n)).expect("f(y,z) in G_S"))
        .collect();

    let product = |a: usize, x: usize, b: usize, y: usize| -> usize {
        if x == 0 {
            gm(a, b) * n + y
        } else {
            let u = act[b * n + x];
            gm(gm(a, eta[b]), fidx[u * n + y]) * n + t.op(u, y)
        }
    };
    let mut mul = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            mul.push(product(p / n, p % n, q / n, q % n) as u32);
        }
    }
    let labels = pair_labels(analysis);
    let table = GroupTable::from_flat(m, mul, labels, cap).map_err(|e| match e {
        Error::NotAGroup(msg) => Error::Internal(format!("G_S·S is not a group: {msg}")),
        other => other,
    })?;

    let lab = |p: usize| table.label(p).to_string();
    let mut report = Report::default();

    let mut identity = Check::new("identity is I.e");
    identity.case(table.identity() == 0, || lab(table.identity()));
    report.push(identity);

    // The same product with σ_x in place of the two cases (σ_e = I).
    let sig: Vec<usize> = (0..n)
        .flat_map(|x| {
            gs.elements()
                .iter()
                .map(move |b| gs.index_of(&sigma_unchecked(t, x, b)).expect("σ_x(G_S) = G_S"))
        })
        .collect();
    let mut unified = Check::new("ax·by = a σ_x(b) f(xθb,y) (xθb∘y)");
    for p in 0..m {
        let (a, x) = (p / n, p % n);
        for q in 0..m {
            let (b, y) = (q / n, q % n);
            let u = act[b * n + x];
            let expect = gm(gm(a, sig[x * k + b]), fidx[u * n + y]) * n + t.op(u, y);
            unified.case(table.mul(p, q) == expect, || format!("{}·{}", lab(p), lab(q)));
        }
    }
    report.push(unified);

    let mut conj = Check::new("x·h = η(h)·(xθh), x≠e");
    for x in 1..n {
        for h in 0..k {
            conj.case(table.mul(x, h * n) == eta[h] * n + act[h * n + x], || {
                format!("x={}, h={}", lab(x), lab(h * n))
            });
        }
    }
    report.push(conj);

    let mut inverses = Check::new("x^-1 = x' for x in S");
    for x in 0..n {
        inverses.case(table.inv(x) == t.left_inverse(x), || lab(x));
    }
    report.push(inverses);

    let ginv: Vec<usize> = (0..k).map(|a| (0..k).find(|&b| gm(a, b) == 0).unwrap()).collect();
    let mut closed_form = Check::new("(ax)^-1 = f(x',x)^-1 η(a^-1) (x'θa^-1)");
    for p in 0..m {
        let (a, x) = (p / n, p % n);
        let expect = if x == 0 {
            ginv[a] * n
        } else {
            let xp = t.left_inverse(x);
            let c = ginv[fidx[xp * n + x]];
            gm(c, eta[ginv[a]]) * n + act[ginv[a] * n + xp]
        };
        closed_form.case(table.inv(p) == expect, || lab(p));
    }
    report.push(closed_form);

    let mut induced = Check::new("x·y = f(x,y)·(x∘y)");
    for x in 0..n {
        for y in 0..n {
            induced.case(table.mul(x, y) == fidx[x * n + y] * n + t.op(x, y), || {
                format!("x={}, y={}", lab(x), lab(y))
            });
        }
    }
    report.push(induced);

    let verification = report.into_result("extension group")?;
    Ok(ExtensionGroup {
        base: analysis.clone(),
        table,
        verification,
    })
}

/// `a.x` with `a` in compact cycle notation, e.g. `(234).3` or `I.1`.
fn pair_labels(analysis: &TwistedGyroAnalysis) -> Vec<String> {
    let labels = analysis.table().labels();
    let mut out = Vec::new();
    for a in analysis.gs().elements() {
        let a = a.to_compact_string(labels);
        for x in labels {
            out.push(format!("{a}.{x}"));
        }
    }
    out
}

impl ExtensionGroup {
    pub fn base(&self) -> &TwistedGyroAnalysis {
        &self.base
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn verification(&self) -> &Report {
        &self.verification
    }

    /// Id of `a ∈ G_S` (by index) embedded as `a e`.
    pub fn embed_h(&self, a: usize) -> usize {
        a * self.base.table().order()
    }

    /// Id of `x ∈ S` embedded as `I x`.
    pub fn embed_s(&self, x: usize) -> usize {
        x
    }

    pub fn subgroup_ids(&self) -> Vec<usize> {
        (0..self.base.gs().order()).map(|a| self.embed_h(a)).collect()
    }

    pub fn transversal_ids(&self) -> Vec<usize> {
        (0..self.base.table().order()).collect()
    }

    /// The embedded `G_S` and `S` fed back through [`decompose`].
    pub fn decompose(&self) -> Result<TransversalAnalysis> {
        decompose(&self.table, &self.subgroup_ids(), &self.transversal_ids())
    }
}

/// A subgroup `H` with a right transversal `S` in a finite group.
///
/// H-indices are positions in the sorted subgroup; S-indices are positions in
/// the transversal, which starts with the identity.
#[derive(Debug, Clone)]
pub struct TransversalAnalysis {
    group: GroupTable,
    subgroup: Vec<usize>,
    h_table: GroupTable,
    transversal: Vec<usize>,
    s_index: Vec<Option<usize>>,
    decomp: Vec<(usize, usize)>,
    induced: RightLoop,
    cocycle: Vec<usize>,
}

/// Decomposes every `g` as `h·s`. The identity is moved to the front of `s`;
/// the other elements keep their order.
pub fn decompose(group: &GroupTable, h: &[usize], s: &[usize]) -> Result<TransversalAnalysis> {
    let order = group.order();
    let mut subgroup = h.to_vec();
    subgroup.sort_unstable();
    subgroup.dedup();
    if subgroup.iter().any(|&x| x >= order) || !group.is_subgroup(&subgroup) {
        return Err(Error::NotASubgroup("not closed under product and inverse".into()));
    }
    let h_table = group.subgroup_table(&subgroup)?;
    let e = group.identity();
    if !s.contains(&e) {
        return Err(Error::IdentityNotInTransversal);
    }
    let mut transversal = vec![e];
    for &x in s {
        if x >= order {
            return Err(Error::NotATransversal(format!("element id {x} out of range")));
        }
        if x == e {
            continue;
        }
        if transversal.contains(&x) {
            return Err(Error::NotATransversal(format!("{} listed twice", group.label(x))));
        }
        transversal.push(x);
    }
    if subgroup.len() * transversal.len() != order {
        return Err(Error::NotATransversal(format!(
            "|H|·|S| = {}·{} but |G| = {order}",
            subgroup.len(),
            transversal.len()
        )));
    }
    let mut decomp = vec![(usize::MAX, usize::MAX); order];
    for (hi, &hg) in subgroup.iter().enumerate() {
        for (si, &sg) in transversal.iter().enumerate() {
            let g = group.mul(hg, sg);
            if decomp[g].0 != usize::MAX {
                return Err(Error::NotATransversal(format!(
                    "{} and {} lie in the same right coset",
                    group.label(sg),
                    group.label(transversal[decomp[g].1])
                )));
            }
            decomp[g] = (hi, si);
        }
    }
    let mut s_index = vec![None; order];
    for (si, &sg) in transversal.iter().enumerate() {
        s_index[sg] = Some(si);
    }
    let n = transversal.len();
    let mut op = Vec::with_capacity(n);
    let mut cocycle = Vec::with_capacity(n * n);
    for &x in &transversal {
        let mut row = Vec::with_capacity(n);
        for &y in &transversal {
            let (hi, si) = decomp[group.mul(x, y)];
            row.push(si);
            cocycle.push(hi);
        }
        op.push(row);
    }
    let labels = transversal.iter().map(|&x| group.label(x).to_string()).collect();
    let induced = RightLoop::validate_table(&op, 0, labels)
        .map_err(|err| Error::Internal(format!("induced operation is not a right loop: {err}")))?;
    Ok(TransversalAnalysis {
        group: group.clone(),
        subgroup,
        h_table,
        transversal,
        s_index,
        decomp,
        induced,
        cocycle,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransversalKind {
    NotInverseClosed,
    /// Only `η = id` works.
    Gyrotransversal,
    /// Only involutions `η ≠ id` work.
    TwistedOnly,
    Both,
    Neither,
}

impl std::fmt::Display for TransversalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TransversalKind::NotInverseClosed => "not inverse-closed",
            TransversalKind::Gyrotransversal => "gyrotransversal",
            TransversalKind::TwistedOnly => "twisted-only",
            TransversalKind::Both => "both",
            TransversalKind::Neither => "neither",
        })
    }
}

/// Automorphisms `η` of `H` with `η² = id` and `η(h)⁻¹ x h ∈ S` for all
/// `x ∈ S∖{e}`, `h ∈ H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaCandidate {
    /// Images of H-indices.
    pub map: Vec<usize>,
    pub is_identity: bool,
    /// Whether the condition also holds at `x = e`, i.e. `η(h) = h` on `H`.
    pub holds_at_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalClass {
    pub inverse_closed: bool,
    pub candidates: Vec<EtaCandidate>,
    pub kind: TransversalKind,
}

impl TransversalClass {
    /// Twisted gyrotransversal, allowing `η = id`.
    pub fn is_twisted_gyrotransversal(&self) -> bool {
        self.inverse_closed && !self.candidates.is_empty()
    }

    /// Twisted gyrotransversal for some involution `η ≠ id`.
    pub fn is_strictly_twisted(&self) -> bool {
        self.inverse_closed && self.candidates.iter().any(|c| !c.is_identity)
    }

    pub fn is_gyrotransversal(&self) -> bool {
        self.inverse_closed && self.candidates.iter().any(|c| c.is_identity)
    }

    pub fn has_candidate(&self, map: &[usize]) -> bool {
        self.candidates.iter().any(|c| c.map == map)
    }
}

pub fn classify_transversal(ta: &TransversalAnalysis) -> Result<TransversalClass> {
    classify_transversal_with_cap(ta, Limits::default().aut_search)
}

pub fn classify_transversal_with_cap(ta: &TransversalAnalysis, cap: usize) -> Result<TransversalClass> {
    let inverse_closed = ta.transversal.iter().all(|&x| ta.s_index[ta.group.inv(x)].is_some());
    let k = ta.subgroup.len();
    let candidates: Vec<EtaCandidate> = automorphisms_with_cap(&ta.h_table, cap)?
        .into_iter()
        .filter(|map| (0..k).all(|h| map[map[h]] == h) && ta.twisting_condition(map))
        .map(|map| {
            let is_identity = map.iter().enumerate().all(|(h, &e)| h == e);
            EtaCandidate {
                holds_at_identity: is_identity,
                is_identity,
                map,
            }
        })
        .collect();
    let gyro = candidates.iter().any(|c| c.is_identity);
    let twisted = candidates.iter().any(|c| !c.is_identity);
    let kind = match (inverse_closed, gyro, twisted) {
        (false, _, _) => TransversalKind::NotInverseClosed,
        (true, true, true) => TransversalKind::Both,
        (true, true, false) => TransversalKind::Gyrotransversal,
        (true, false, true) => TransversalKind::TwistedOnly,
        (true, false, false) => TransversalKind::Neither,
    };
    Ok(TransversalClass {
        inverse_closed,
        candidates,
        kind,
    })
}

impl TransversalAnalysis {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    /// Sorted group ids of `H`.
    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// `H` as a group in its own right, ids = H-indices.
    pub fn subgroup_table(&self) -> &GroupTable {
        &self.h_table
    }

    /// Group ids of `S`, identity first.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// S-index of a group element, if it lies in `S`.
    pub fn s_index(&self, g: usize) -> Option<usize> {
        self.s_index[g]
    }

    /// `(H-index, S-index)` with `g = h·s`.
    pub fn decompose_element(&self, g: usize) -> (usize, usize) {
        self.decomp[g]
    }

    pub fn induced(&self) -> &RightLoop {
        &self.induced
    }

    /// H-index of `g(x, y)`, where `x·y = g(x,y)·(x∘y)`.
    pub fn cocycle(&self, x: usize, y: usize) -> usize {
        self.cocycle[x * self.transversal.len() + y]
    }

    /// `η(h)⁻¹ x h ∈ S` for every `x ≠ e` and `h`.
    fn twisting_condition(&self, eta: &[usize]) -> bool {
        let g = &self.group;
        self.subgroup.iter().enumerate().all(|(hi, &h)| {
            let left = g.inv(self.subgroup[eta[hi]]);
            self.transversal[1..]
                .iter()
                .all(|&x| self.s_index[g.mul(left, g.mul(x, h))].is_some())
        })
    }

    /// `xθh = η(h)⁻¹ x h` for `x ≠ e`, `eθh = e`; in S-indices. Requires
    /// `η` to satisfy the twisting condition.
    pub fn theta(&self, eta: &[usize], x: usize, h: usize) -> usize {
        if x == 0 {
            return 0;
        }
        let g = &self.group;
        let left = g.inv(self.subgroup[eta[h]]);
        self.s_index[g.mul(left, g.mul(self.transversal[x], self.subgroup[h]))]
            .expect("twisting condition")
    }

    /// `θ(·, h)` as a permutation of S-indices.
    pub fn theta_perm(&self, eta: &[usize], h: usize) -> Perm {
        let images: Vec<usize> = (0..self.transversal.len()).map(|x| self.theta(eta, x, h)).collect();
        Perm::from_images(&images).expect("θ(·,h) is a bijection")
    }
}

/// The induced twisted right gyrogroup together with the verified identities
/// linking it to the group.
#[derive(Debug, Clone)]
pub struct InducedTrg {
    pub analysis: TwistedGyroAnalysis,
    pub bridging: Report,
}

pub fn induce_trg(ta: &TransversalAnalysis, eta: &[usize]) -> Result<InducedTrg> {
    let k = ta.subgroup.len();
    let hm = &ta.h_table;
    let is_aut = eta.len() == k
        && {
            let mut seen = vec![false; k];
            eta.iter().all(|&v| v < k && !std::mem::replace(&mut seen[v], true))
        }
        && (0..k).all(|a| (0..k).all(|b| eta[hm.mul(a, b)] == hm.mul(eta[a], eta[b])));
    if !is_aut || (0..k).any(|h| eta[eta[h]] != h) {
        return Err(Error::Precondition("η is not an involutory automorphism of H".into()));
    }
    if !ta.transversal.iter().all(|&x| ta.s_index[ta.group.inv(x)].is_some()) {
        return Err(Error::Precondition("transversal is not inverse-closed".into()));
    }
    if !ta.twisting_condition(eta) {
        return Err(Error::Precondition("η(h)^-1 x h leaves S".into()));
    }
    let t = &ta.induced;
    let n = t.order();
    let lab = |x: usize| t.label(x).to_string();
    let hlab = |h: usize| hm.label(h).to_string();
    let th = |x: usize, h: usize| ta.theta(eta, x, h);
    let mut report = Report::default();

    // The cocycle identity needs x ≠ e and x∘y ≠ e as well: at x = e both
    // sides reduce to h and η(h).
    let mut cocycle = Check::new("h g(xθη(h), yθh) = g(x,y) η(h), x,y,x∘y≠e");
    let mut action = Check::new("xθη(h) ∘ yθh = (x∘y)θh, y≠e");
    for h in 0..k {
        for x in 0..n {
            for y in 1..n {
                let (u, v) = (th(x, eta[h]), th(y, h));
                if x != 0 && t.op(x, y) != 0 {
                    cocycle.case(hm.mul(h, ta.cocycle(u, v)) == hm.mul(ta.cocycle(x, y), eta[h]), || {
                        format!("x={}, y={}, h={}", lab(x), lab(y), hlab(h))
                    });
                }
                action.case(t.op(u, v) == th(t.op(x, y), h), || {
                    format!("x={}, y={}, h={}", lab(x), lab(y), hlab(h))
                });
            }
        }
    }
    report.push(cocycle);
    report.push(action);

    let mut eta_theta = Check::new("xθη(h) = (x'θh)'");
    for h in 0..k {
        for x in 0..n {
            eta_theta.case(th(x, eta[h]) == t.left_inverse(th(t.left_inverse(x), h)), || {
                format!("x={}, h={}", lab(x), hlab(h))
            });
        }
    }
    report.push(eta_theta);

    let mut inner = Check::new("g(x,y) acts on S as f(x,y)");
    for x in 0..n {
        for y in 0..n {
            inner.case(ta.theta_perm(eta, ta.cocycle(x, y)) == inner_map(t, x, y), || {
                format!("x={}, y={}", lab(x), lab(y))
            });
        }
    }
    report.push(inner);

    let bridging = report.into_result("induced twisted right gyrogroup")?;
    let analysis = TwistedGyroAnalysis::new(t)?;
    if !analysis.is_trg() {
        return Err(Error::Internal(format!(
            "induced right loop is not a twisted right gyrogroup: {}",
            analysis.failure_reason().unwrap_or_default()
        )));
    }
    Ok(InducedTrg { analysis, bridging })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::isomorphic;
    use crate::samples;

    fn s3_parts() -> (GroupTable, Vec<usize>, Vec<usize>) {
        let g = samples::symmetric_group(3);
        let id = |s: &str| g.id_of(s).unwrap();
        let h = vec![g.identity(), id("(12)")];
        let s = vec![g.identity(), id("(123)"), id("(132)")];
        (g, h, s)
    }

    #[test]
    fn s3_over_a_transposition() {
        let (g, h, s) = s3_parts();
        let ta = decompose(&g, &h, &s).unwrap();
        let z3 = samples::cyclic_loop(3);
        assert!(ta.induced().is_associative());
        assert!(isomorphic(
            &crate::permgroup::GroupTable::new(&ta.induced().rows(), vec![]).unwrap(),
            &crate::permgroup::GroupTable::new(&z3.rows(), vec![]).unwrap()
        )
        .unwrap());
        for x in 0..3 {
            for y in 0..3 {
                let lhs = g.mul(ta.transversal()[x], ta.transversal()[y]);
                let rhs = g.mul(ta.subgroup()[ta.cocycle(x, y)], ta.transversal()[ta.induced().op(x, y)]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let (g, h, s) = s3_parts();
        let id = |l: &str| g.id_of(l).unwrap();
        assert!(matches!(
            decompose(&g, &[g.identity(), id("(123)")], &s),
            Err(Error::NotASubgroup(_))
        ));
        assert_eq!(
            decompose(&g, &h, &[id("(123)"), id("(132)"), id("(13)")]).unwrap_err(),
            Error::IdentityNotInTransversal
        );
        // (13) = (12)(123) lies in the coset of (123).
        assert!(matches!(
            decompose(&g, &h, &[g.identity(), id("(123)"), id("(13)")]),
            Err(Error::NotATransversal(_))
        ));
        assert!(matches!(decompose(&g, &h, &[g.identity()]), Err(Error::NotATransversal(_))));
    }

    #[test]
    fn trivial_subgroup() {
        let g = samples::symmetric_group(3);
        let all: Vec<usize> = (0..6).collect();
        let ta = decompose(&g, &[g.identity()], &all).unwrap();
        assert!(ta.induced().is_associative());
        let c = classify_transversal(&ta).unwrap();
        assert_eq!(c.kind, TransversalKind::Gyrotransversal);
        let back = induce_trg(&ta, &[0]).unwrap();
        assert_eq!(back.analysis.render_eta(), "I");
    }

    #[test]
    fn extension_of_the_order5_example() {
        let a = TwistedGyroAnalysis::new(&samples::order5_trg()).unwrap();
        let ext = build_extension(&a).unwrap();
        assert_eq!(ext.order(), 60);
        assert!(ext.verification().all_hold());
        assert_eq!(ext.table().label(ext.embed_h(0)), "I.1");
        let ta = ext.decompose().unwrap();
        assert_eq!(ta.induced().flat(), a.table().flat());
        let class = classify_transversal(&ta).unwrap();
        assert!(class.is_twisted_gyrotransversal());
        assert!(class.has_candidate(a.eta_on_gs().unwrap()));
        assert_eq!(class.kind, TransversalKind::TwistedOnly);
        let back = induce_trg(&ta, a.eta_on_gs().unwrap()).unwrap();
        assert!(back.bridging.all_hold());
        assert_eq!(back.analysis.eta_on_gs(), a.eta_on_gs());
    }

    #[test]
    fn extension_of_a_group_is_the_group() {
        let g = samples::symmetric_group(3);
        let a = TwistedGyroAnalysis::new(&RightLoop::from_group(&g).unwrap()).unwrap();
        let ext = build_extension(&a).unwrap();
        assert_eq!(ext.order(), 6);
        assert!(isomorphic(ext.table(), &g).unwrap());
    }

    #[test]
    fn extension_refuses_non_trg_and_caps() {
        let bad = TwistedGyroAnalysis::new(&samples::one_sided_inverse_loop()).unwrap();
        assert!(matches!(build_extension(&bad), Err(Error::NotTwistedRightGyrogroup(_))));
        let a = TwistedGyroAnalysis::new(&samples::order5_trg()).unwrap();
        assert!(matches!(build_extension_with_cap(&a, 59), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn induce_rejects_bad_eta() {
        let a = TwistedGyroAnalysis::new(&samples::order5_trg()).unwrap();
        let ext = build_extension(&a).unwrap();
        let ta = ext.decompose().unwrap();
        let id: Vec<usize> = (0..12).collect();
        assert!(matches!(induce_trg(&ta, &id), Err(Error::Precondition(_))));
        assert!(matches!(induce_trg(&ta, &[0]), Err(Error::Precondition(_))));
    }
}
