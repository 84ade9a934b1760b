//! Twisted subgroups of finite groups and twisted gyrogroups: twisted right
//! gyrogroups with the right loop property `f(x, y) = f(x, x∘y)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::build_extension;
use crate::permgroup::GroupTable;
use crate::report::{Check, Report};
use crate::twistedaut::{eta_unchecked, TwistedGyroAnalysis};

/// `1 ∈ S` and `xyx ∈ S` for all `x, y ∈ S`; the witness names the first
/// failure.
pub fn twisted_subgroup_check(group: &GroupTable, subset: &[usize]) -> Check {
    let mut member = vec![false; group.order()];
    for &x in subset.iter().filter(|&&x| x < group.order()) {
        member[x] = true;
    }
    let mut check = Check::new("1 in S, xyx in S");
    if let Some(&x) = subset.iter().find(|&&x| x >= group.order()) {
        check.case(false, || format!("element id {x} out of range"));
        return check;
    }
    check.case(member[group.identity()], || "1 not in S".into());
    for &x in subset {
        for &y in subset {
            let xyx = group.mul(group.mul(x, y), x);
            check.case(member[xyx], || {
                format!("x={}, y={}, xyx={}", group.label(x), group.label(y), group.label(xyx))
            });
        }
    }
    check
}

pub fn is_twisted_subgroup(group: &GroupTable, subset: &[usize]) -> bool {
    twisted_subgroup_check(group, subset).holds()
}

fn require_trg(analysis: &TwistedGyroAnalysis) -> Result<()> {
    if analysis.is_trg() {
        Ok(())
    } else {
        Err(Error::NotTwistedRightGyrogroup(analysis.failure_reason().unwrap_or_default()))
    }
}

/// The right loop property over all `x, y`.
pub fn right_loop_property(analysis: &TwistedGyroAnalysis) -> Result<Check> {
    require_trg(analysis)?;
    let t = analysis.table();
    let idx = analysis.inner_maps();
    let n = t.order();
    let mut check = Check::new("f(x,y) = f(x,x∘y)");
    for x in 0..n {
        for y in 0..n {
            check.case(idx.f(x, y) == idx.f(x, t.op(x, y)), || {
                format!("x={}, y={}", t.label(x), t.label(y))
            });
        }
    }
    Ok(check)
}

pub fn is_twisted_gyrogroup(analysis: &TwistedGyroAnalysis) -> Result<bool> {
    Ok(right_loop_property(analysis)?.holds())
}

/// The five identities of a twisted gyrogroup and `f(x,x)² = I`. A violation
/// is an internal error.
pub fn check_tgg_identities(analysis: &TwistedGyroAnalysis) -> Result<Report> {
    if !is_twisted_gyrogroup(analysis)? {
        return Err(Error::Precondition("not a twisted gyrogroup".into()));
    }
    let t = analysis.table();
    let idx = analysis.inner_maps();
    let n = t.order();
    let f = |x: usize, y: usize| idx.f(x, y);
    let inv = |x: usize| t.left_inverse(x);
    let eta = |x: usize, y: usize| eta_unchecked(t, f(x, y));
    let mut checks = [
        Check::new("f(x,y)^-1 = f(x∘y,y')"),
        Check::new("f(x,y)^-1 = f(x∘y,x)"),
        Check::new("f(x,y)^-1 = eta(f(y',x'))"),
        Check::new("f(x,y) = eta(f(y'∘x',y'))"),
        Check::new("f(x,y)^-1 = f(y,x)"),
    ];
    for x in 0..n {
        for y in 0..n {
            let fi = f(x, y).inverse();
            let xy = t.op(x, y);
            let holds = [
                fi == *f(xy, inv(y)),
                fi == *f(xy, x),
                fi == eta(inv(y), inv(x)),
                *f(x, y) == eta(t.op(inv(y), inv(x)), inv(y)),
                fi == *f(y, x),
            ];
            for (c, ok) in checks.iter_mut().zip(holds) {
                c.case(ok, || format!("x={}, y={}", t.label(x), t.label(y)));
            }
        }
    }
    let mut report = Report::default();
    for c in checks {
        report.push(c);
    }
    let mut square = Check::new("f(x,x)^2 = I");
    for x in 0..n {
        square.case(f(x, x).then(f(x, x)).is_identity(), || format!("x={}", t.label(x)));
    }
    report.push(square);
    report.into_result("twisted gyrogroup identities")
}

/// Both sides of the twisted-subgroup characterization, computed
/// independently inside `G_S·S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// Right loop property.
    pub left: Check,
    /// Embedded `S` is a twisted subgroup of `G_S·S`.
    pub twisted_subgroup: Check,
    pub inverse_symmetric: Check,
    /// Embedded `S` is closed under inverses.
    pub inverse_closed: Check,
    /// `xyx = (x∘y)∘x` in `G_S·S`, checked when the left side holds.
    pub xyx: Option<Check>,
}

impl EquivalenceReport {
    pub fn lhs(&self) -> bool {
        self.left.holds()
    }

    pub fn rhs(&self) -> bool {
        self.twisted_subgroup.holds() && self.inverse_symmetric.holds()
    }

    /// Both sides agree and the side checks hold.
    pub fn consistent(&self) -> bool {
        self.lhs() == self.rhs()
            && self.inverse_closed.holds()
            && self.xyx.as_ref().is_none_or(Check::holds)
    }
}

pub fn check_equivalence_theorem(analysis: &TwistedGyroAnalysis) -> Result<EquivalenceReport> {
    let left = right_loop_property(analysis)?;
    let ext = build_extension(analysis)?;
    let g = ext.table();
    let t = analysis.table();
    let idx = analysis.inner_maps();
    let n = t.order();
    let s: Vec<usize> = (0..n).map(|x| ext.embed_s(x)).collect();

    let mut twisted_subgroup = twisted_subgroup_check(g, &s);
    twisted_subgroup.name = "S twisted subgroup of G_S·S".into();

    let mut inverse_symmetric = Check::new("f(x,y)^-1 = f(y,x)");
    for x in 0..n {
        for y in 0..n {
            inverse_symmetric.case(idx.f(x, y).inverse() == *idx.f(y, x), || {
                format!("x={}, y={}", t.label(x), t.label(y))
            });
        }
    }

    let mut inverse_closed = Check::new("x^-1 in S");
    for &x in &s {
        inverse_closed.case(g.inv(x) < n, || g.label(x).to_string());
    }

    let xyx = left.holds().then(|| {
        let mut c = Check::new("xyx = (x∘y)∘x");
        for x in 0..n {
            for y in 0..n {
                let prod = g.mul(g.mul(s[x], s[y]), s[x]);
                c.case(prod == ext.embed_s(t.op(t.op(x, y), x)), || {
                    format!("x={}, y={}", t.label(x), t.label(y))
                });
            }
        }
        c
    });

    Ok(EquivalenceReport {
        left,
        twisted_subgroup,
        inverse_symmetric,
        inverse_closed,
        xyx,
    })
}
