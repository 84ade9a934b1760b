//! Example factories: right gyrogroups, the projection right loop, the
//! `∘_ρ` deformation and the `S_h` transversal.
//!
//! A right gyrogroup is taken to be a right loop with unique inverses,
//! `f(y', y) = I` for all `y`, and every inner mapping an automorphism. A
//! gyrotransversal is an inverse-closed right transversal with `h⁻¹xh ∈ S`
//! for all `h ∈ H`, `x ∈ S`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{classify_transversal, decompose, TransversalAnalysis, TransversalClass};
use crate::innermaps::{inner_map, InnerMaps};
use crate::permgroup::Perm;
use crate::report::{Check, Report};
use crate::rightloop::RightLoop;
use crate::twistedaut::{automorphism_law, twisted_law, TwistedGyroAnalysis};

pub fn is_right_gyrogroup(t: &RightLoop) -> bool {
    let n = t.order();
    t.has_unique_inverses()
        && (0..n).all(|y| inner_map(t, t.left_inverse(y), y).is_identity())
        && (0..n).all(|y| (0..n).all(|z| automorphism_law(t, &inner_map(t, y, z))))
}

/// `{e, x1, …, x(n-1)}` with `xi ∘ xj = xi` for `i ≠ j` and `xi ∘ xi = e`.
pub fn projection_loop(n: usize) -> Result<RightLoop> {
    if n < 2 {
        return Err(Error::Precondition(format!("projection loop needs n >= 2, got {n}")));
    }
    let labels = std::iter::once("e".to_string())
        .chain((1..n).map(|i| format!("x{i}")))
        .collect();
    RightLoop::from_fn(n, |x, y| match (x, y) {
        (x, 0) => x,
        (0, y) => y,
        (x, y) if x == y => 0,
        (x, _) => x,
    })?
    .with_labels(labels)
}

/// `∘_ρ` together with the verified facts about it.
#[derive(Debug, Clone)]
pub struct Deformation {
    pub table: RightLoop,
    pub analysis: TwistedGyroAnalysis,
    pub checks: Report,
}

/// `x ∘_ρ y = ρ(x) ∘ y` for `y ≠ e`, `x ∘_ρ e = x`.
pub fn deform_rho(t: &RightLoop, rho: &Perm) -> Result<Deformation> {
    check_rho(t, rho)?;
    let n = t.order();
    let table = RightLoop::from_fn(n, |x, y| if y == 0 { x } else { t.op(rho.apply(x), y) })?
        .with_labels(t.labels().to_vec())?;
    let lab = |x: usize| t.label(x).to_string();
    let mut checks = Report::default();

    let mut inverse = Check::new("x'_rho = rho(x')");
    for x in 0..n {
        inverse.case(table.inverse(x) == Some(rho.apply(t.left_inverse(x))), || lab(x));
    }
    let inverses_ok = inverse.holds();
    checks.push(inverse);
    if !inverses_ok {
        return Err(Error::Internal(format!(
            "∘_rho: {}",
            checks.violations().next().unwrap().name
        )));
    }

    let deformed = InnerMaps::new(&table)?;
    // At y = e the left side is I and the right side is rho.
    let mut inner = Check::new("f_rho(y,z) = f(rho(y),z) rho, y,z≠e, y≠z'_rho");
    for y in 1..n {
        for z in 1..n {
            if y == table.left_inverse(z) {
                continue;
            }
            let expect = inner_map(t, rho.apply(y), z).then(rho);
            inner.case(*deformed.f(y, z) == expect, || format!("y={}, z={}", lab(y), lab(z)));
        }
    }
    checks.push(inner);

    let mut trivial = Check::new("f_rho(y'_rho, y) = I");
    for y in 0..n {
        trivial.case(deformed.f(table.left_inverse(y), y).is_identity(), || lab(y));
    }
    checks.push(trivial);

    let mut twisted = Check::new("f_rho(y,z) in TAut(∘_rho)");
    for y in 0..n {
        for z in 0..n {
            twisted.case(twisted_law(&table, deformed.f(y, z)), || format!("y={}, z={}", lab(y), lab(z)));
        }
    }
    checks.push(twisted);

    let checks = checks.into_result("∘_rho deformation")?;
    let analysis = TwistedGyroAnalysis::from_inner_maps(deformed);
    if !analysis.is_trg() {
        return Err(Error::Internal(format!(
            "∘_rho is not a twisted right gyrogroup: {}",
            analysis.failure_reason().unwrap_or_default()
        )));
    }
    Ok(Deformation {
        table,
        analysis,
        checks,
    })
}

fn check_rho(t: &RightLoop, rho: &Perm) -> Result<()> {
    if !is_right_gyrogroup(t) {
        return Err(Error::Precondition("table is not a right gyrogroup".into()));
    }
    if rho.degree() != t.order() {
        return Err(Error::DegreeMismatch(rho.degree(), t.order()));
    }
    if !automorphism_law(t, rho) {
        return Err(Error::Precondition(format!(
            "{} is not an automorphism",
            rho.to_cycle_string(t.labels())
        )));
    }
    if !rho.then(rho).is_identity() {
        return Err(Error::Precondition(format!(
            "{} is not an involution",
            rho.to_cycle_string(t.labels())
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AutInTaut {
    pub in_taut: bool,
    pub in_aut: bool,
    pub commutes: bool,
}

/// For `h ∈ Aut(S,∘)`: `h ∈ TAut(S,∘_ρ)`, and `h ∈ Aut(S,∘_ρ)` iff `hρ = ρh`.
/// Either failing is an internal error.
pub fn aut_in_taut_of_deformed(t: &RightLoop, rho: &Perm, h: &Perm) -> Result<AutInTaut> {
    check_rho(t, rho)?;
    if h.degree() != t.order() || !automorphism_law(t, h) {
        return Err(Error::Precondition(format!(
            "{} is not an automorphism",
            h.to_cycle_string(t.labels())
        )));
    }
    let d = deform_rho(t, rho)?;
    let out = AutInTaut {
        in_taut: twisted_law(&d.table, h),
        in_aut: automorphism_law(&d.table, h),
        commutes: h.then(rho) == rho.then(h),
    };
    if !out.in_taut || out.in_aut != out.commutes {
        return Err(Error::Internal(format!(
            "automorphism {} of ∘ behaves unexpectedly on ∘_rho: {out:?}",
            h.to_cycle_string(t.labels())
        )));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ShTransversal {
    pub analysis: TransversalAnalysis,
    pub class: TransversalClass,
    /// `k ↦ hkh` on H-indices.
    pub eta: Vec<usize>,
    pub condition: Check,
}

/// `S_h = {hx | x ∈ S∖{e}} ∪ {e}` for a gyrotransversal `S` and a
/// non-central involution `h ∈ H` (given as a group id).
pub fn s_h_transversal(ta: &TransversalAnalysis, h: usize) -> Result<ShTransversal> {
    let g = ta.group();
    if !classify_transversal(ta)?.is_gyrotransversal() {
        return Err(Error::Precondition("transversal is not a gyrotransversal".into()));
    }
    let hi = ta
        .subgroup()
        .binary_search(&h)
        .map_err(|_| Error::Precondition(format!("{} is not in H", g.label(h))))?;
    if h == g.identity() || g.mul(h, h) != g.identity() {
        return Err(Error::Precondition(format!("{} is not an involution", g.label(h))));
    }
    let ht = ta.subgroup_table();
    if ht.center().contains(&hi) {
        return Err(Error::Precondition(format!("{} is central in H", g.label(h))));
    }
    let mut s_h = vec![g.identity()];
    s_h.extend(ta.transversal()[1..].iter().map(|&x| g.mul(h, x)));
    let analysis = decompose(g, ta.subgroup(), &s_h)?;
    let eta: Vec<usize> = (0..ht.order()).map(|k| ht.mul(ht.mul(hi, k), hi)).collect();

    let mut condition = Check::new("eta(k)^-1 (hx) k in S_h, x≠e");
    for (ki, &k) in ta.subgroup().iter().enumerate() {
        let left = g.inv(ta.subgroup()[eta[ki]]);
        for &x in &s_h[1..] {
            let y = g.mul(left, g.mul(x, k));
            condition.case(analysis.s_index(y).is_some(), || {
                format!("x={}, k={}", g.label(x), g.label(k))
            });
        }
    }
    let class = classify_transversal(&analysis)?;
    if !condition.holds() || !class.has_candidate(&eta) || class.is_gyrotransversal() {
        return Err(Error::Internal(format!(
            "S_h is not a twisted-only gyrotransversal (class {})",
            class.kind
        )));
    }
    Ok(ShTransversal {
        analysis,
        class,
        eta,
        condition,
    })
}
