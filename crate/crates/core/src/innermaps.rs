//! Right inner mappings `f(y, z)`, the inner mapping group `G_S` and the
//! maps `σ_y`.
//!
//! `f(y, z)` is the permutation with `f(y,z)(x) ∘ (y ∘ z) = (x ∘ y) ∘ z`, and
//! `σ_y(h)` the permutation with `h(x ∘ y) = σ_y(h)(x) ∘ h(y)`. Both fix the
//! identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgroup::{Perm, PermGroup, SymTable, MAX_TABLE_DEGREE};
use crate::report::{Check, Report};
use crate::rightloop::RightLoop;

/// `x ↦ ((x ∘ y) ∘ z) / (y ∘ z)`.
pub fn inner_map(t: &RightLoop, y: usize, z: usize) -> Perm {
    let yz = t.op(y, z);
    Perm::from_fn_unchecked(t.order(), |x| t.right_divide(t.op(t.op(x, y), z), yz))
}

/// `σ_y(h) : x ↦ h(x ∘ y) / h(y)`, for `h` fixing the identity.
pub fn sigma(t: &RightLoop, y: usize, h: &Perm) -> Result<Perm> {
    if h.degree() != t.order() {
        return Err(Error::DegreeMismatch(h.degree(), t.order()));
    }
    if !h.fixes(0) {
        return Err(Error::MovesIdentity(h.to_cycle_string(t.labels())));
    }
    Ok(sigma_unchecked(t, y, h))
}

#[inline]
pub(crate) fn sigma_unchecked(t: &RightLoop, y: usize, h: &Perm) -> Perm {
    let hy = h.apply(y);
    Perm::from_fn_unchecked(t.order(), |x| t.right_divide(h.apply(t.op(x, y)), hy))
}

/// Every `f(y, z)` of a right loop together with the group they generate.
#[derive(Debug, Clone)]
pub struct InnerMaps {
    table: RightLoop,
    f: Vec<Perm>,
    gs: PermGroup,
}

impl InnerMaps {
    pub fn new(t: &RightLoop) -> Result<Self> {
        Self::with_cap(t, Limits::default().perm_closure)
    }

    pub fn with_cap(t: &RightLoop, cap: usize) -> Result<Self> {
        let n = t.order();
        let f: Vec<Perm> = (0..n * n).map(|i| inner_map(t, i / n, i % n)).collect();
        let mut gens: Vec<Perm> = f.iter().filter(|p| !p.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        let gs = PermGroup::close_with_cap(n, &gens, cap)?;
        Ok(InnerMaps {
            table: t.clone(),
            f,
            gs,
        })
    }

    pub fn table(&self) -> &RightLoop {
        &self.table
    }

    #[inline]
    pub fn f(&self, y: usize, z: usize) -> &Perm {
        &self.f[y * self.table.order() + z]
    }

    /// The inner mapping group `G_S`.
    pub fn gs(&self) -> &PermGroup {
        &self.gs
    }

    pub fn sigma(&self, y: usize, h: &Perm) -> Result<Perm> {
        sigma(&self.table, y, h)
    }

    /// `σ_y(h)` for every `h ∈ G_S`, in element order.
    pub fn sigma_on_gs(&self, y: usize) -> Vec<Perm> {
        self.gs
            .elements()
            .iter()
            .map(|h| sigma_unchecked(&self.table, y, h))
            .collect()
    }

    /// Whether `f(y', y) = I` for every `y`; returns the first failing `y`.
    pub fn inverse_inner_witness(&self) -> Option<usize> {
        (0..self.table.order()).find(|&y| !self.f(self.table.left_inverse(y), y).is_identity())
    }
}

/// Alias of [`InnerMaps::new`].
pub fn inner_group(t: &RightLoop) -> Result<InnerMaps> {
    InnerMaps::new(t)
}

/// Exhaustive check of the basic identities satisfied by every right loop:
/// `f(x,e) = f(e,x) = I`, `σ_e = id`, `σ_y(I) = I`,
/// `σ_y(hk) = σ_y(h) σ_{h(y)}(k)` for `h, k ∈ G_S`, and
/// `f(x,y) f(x∘y,z) = σ_x(f(y,z)) f(f(y,z)(x), y∘z)`.
pub fn check_prop2_identities(idx: &InnerMaps) -> Report {
    let t = &idx.table;
    let n = t.order();
    let labels = t.labels();
    let lab = |x: usize| labels[x].as_str();
    let show = |p: &Perm| p.to_cycle_string(labels);
    let gs = &idx.gs;
    let m = gs.order();
    let mut report = Report::default();

    let mut fixes = Check::new("f(y,z) fixes e");
    for y in 0..n {
        for z in 0..n {
            fixes.case(idx.f(y, z).fixes(0), || format!("y={}, z={}", lab(y), lab(z)));
        }
    }
    report.push(fixes);

    let mut trivial = Check::new("f(x,e) = f(e,x) = I");
    for x in 0..n {
        trivial.case(idx.f(x, 0).is_identity() && idx.f(0, x).is_identity(), || {
            format!("x={}", lab(x))
        });
    }
    report.push(trivial);

    // σ_y(h) for all y and h ∈ G_S, indexed [y * m + h].
    let sig: Vec<Perm> = (0..n).flat_map(|y| idx.sigma_on_gs(y)).collect();

    let mut sigma_e = Check::new("sigma_e = id");
    for (hi, h) in gs.elements().iter().enumerate() {
        sigma_e.case(&sig[hi] == h, || format!("h={}", show(h)));
    }
    report.push(sigma_e);

    let mut sigma_id = Check::new("sigma_y(I) = I");
    for y in 0..n {
        sigma_id.case(sig[y * m].is_identity(), || format!("y={}", lab(y)));
    }
    report.push(sigma_id);

    let mul = gs.mul_table();
    let mut cocycle = Check::new("sigma_y(hk) = sigma_y(h) sigma_h(y)(k)");
    for y in 0..n {
        for (hi, h) in gs.elements().iter().enumerate() {
            let hy = h.apply(y);
            for ki in 0..m {
                let lhs = &sig[y * m + mul[hi * m + ki] as usize];
                let ok = *lhs == sig[y * m + hi].then(&sig[hy * m + ki]);
                cocycle.case(ok, || {
                    format!("y={}, h={}, k={}", lab(y), show(h), show(gs.element(ki)))
                });
            }
        }
    }
    report.push(cocycle);

    let mut expand = Check::new("f(x,y) f(xy,z) = sigma_x(f(y,z)) f(f(y,z)(x), yz)");
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                let fyz = idx.f(y, z);
                let lhs = idx.f(x, y).then(idx.f(xy, z));
                let rhs = sigma_unchecked(t, x, fyz).then(idx.f(fyz.apply(x), t.op(y, z)));
                expand.case(lhs == rhs, || format!("x={}, y={}, z={}", lab(x), lab(y), lab(z)));
            }
        }
    }
    report.push(expand);
    report
}

/// [`check_prop2_identities`] for tables of order at most
/// [`MAX_TABLE_DEGREE`], on permutation indices instead of [`Perm`] values.
/// Built for sweeps over every table of a given order.
pub fn check_prop2_identities_fast(t: &RightLoop) -> Result<Report> {
    let n = t.order();
    let sym = SymTable::get(n).ok_or_else(|| {
        Error::Precondition(format!("fast identity check needs order <= {MAX_TABLE_DEGREE}"))
    })?;
    let labels = t.labels();
    let lab = |x: usize| labels[x].as_str();
    let show = |p: u16| sym.to_perm(p).to_cycle_string(labels);
    let f: Vec<u16> = (0..n * n)
        .map(|i| {
            let (y, z) = (i / n, i % n);
            let yz = t.op(y, z);
            sym.rank_of(|x| t.right_divide(t.op(t.op(x, y), z), yz))
        })
        .collect();

    let mut member = vec![false; sym.len()];
    member[0] = true;
    let mut frontier = vec![0u16];
    let mut gens: Vec<u16> = f.iter().copied().filter(|&p| p != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    while let Some(p) = frontier.pop() {
        for &g in &gens {
            let q = sym.mul(p, g);
            if !std::mem::replace(&mut member[q as usize], true) {
                frontier.push(q);
            }
        }
    }
    let gs: Vec<u16> = (0..sym.len() as u16).filter(|&p| member[p as usize]).collect();
    let m = gs.len();
    let mut pos = vec![u16::MAX; sym.len()];
    for (i, &p) in gs.iter().enumerate() {
        pos[p as usize] = i as u16;
    }
    let sig: Vec<u16> = (0..n)
        .flat_map(|y| {
            gs.iter().map(move |&h| {
                let hy = sym.apply(h, y);
                sym.rank_of(|x| t.right_divide(sym.apply(h, t.op(x, y)), hy))
            })
        })
        .collect();
    let mut report = Report::default();

    let mut fixes = Check::new("f(y,z) fixes e");
    for y in 0..n {
        for z in 0..n {
            fixes.case(sym.apply(f[y * n + z], 0) == 0, || format!("y={}, z={}", lab(y), lab(z)));
        }
    }
    report.push(fixes);

    let mut trivial = Check::new("f(x,e) = f(e,x) = I");
    for x in 0..n {
        trivial.case(f[x * n] == 0 && f[x] == 0, || format!("x={}", lab(x)));
    }
    report.push(trivial);

    let mut sigma_e = Check::new("sigma_e = id");
    for (hi, &h) in gs.iter().enumerate() {
        sigma_e.case(sig[hi] == h, || format!("h={}", show(h)));
    }
    report.push(sigma_e);

    let mut sigma_id = Check::new("sigma_y(I) = I");
    for y in 0..n {
        sigma_id.case(sig[y * m] == 0, || format!("y={}", lab(y)));
    }
    report.push(sigma_id);

    let mut cocycle = Check::new("sigma_y(hk) = sigma_y(h) sigma_h(y)(k)");
    for y in 0..n {
        for (hi, &h) in gs.iter().enumerate() {
            let hy = sym.apply(h, y);
            for (ki, &k) in gs.iter().enumerate() {
                let lhs = sig[y * m + pos[sym.mul(h, k) as usize] as usize];
                let ok = lhs == sym.mul(sig[y * m + hi], sig[hy * m + ki]);
                cocycle.case(ok, || format!("y={}, h={}, k={}", lab(y), show(h), show(k)));
            }
        }
    }
    report.push(cocycle);

    let mut expand = Check::new("f(x,y) f(xy,z) = sigma_x(f(y,z)) f(f(y,z)(x), yz)");
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                let fyz = f[y * n + z];
                let lhs = sym.mul(f[x * n + y], f[xy * n + z]);
                let sx = sig[x * m + pos[fyz as usize] as usize];
                let rhs = sym.mul(sx, f[sym.apply(fyz, x) * n + t.op(y, z)]);
                expand.case(lhs == rhs, || format!("x={}, y={}, z={}", lab(x), lab(y), lab(z)));
            }
        }
    }
    report.push(expand);
    Ok(report)
}

/// How `σ_y` behaves on `G_S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaMorphism {
    pub y: usize,
    /// `σ_y(G_S) ⊆ G_S`.
    pub maps_into: bool,
    /// Maps into `G_S` and `σ_y(hk) = σ_y(h) σ_y(k)` for all `h, k ∈ G_S`.
    pub homomorphism: bool,
    /// Homomorphism that is bijective on `G_S`.
    pub automorphism: bool,
    /// First failing element or pair.
    pub witness: Option<String>,
}

pub fn sigma_morphism(idx: &InnerMaps, y: usize) -> SigmaMorphism {
    let gs = &idx.gs;
    let labels = idx.table.labels();
    let show = |p: &Perm| p.to_cycle_string(labels);
    let images = idx.sigma_on_gs(y);
    let mut result = SigmaMorphism {
        y,
        maps_into: true,
        homomorphism: true,
        automorphism: true,
        witness: None,
    };
    let ids: Vec<Option<usize>> = images.iter().map(|p| gs.index_of(p)).collect();
    if let Some(hi) = ids.iter().position(Option::is_none) {
        result.maps_into = false;
        result.homomorphism = false;
        result.automorphism = false;
        result.witness = Some(format!("sigma({}) = {} not in G_S", show(gs.element(hi)), show(&images[hi])));
        return result;
    }
    let m = gs.order();
    let mul = gs.mul_table();
    'outer: for hi in 0..m {
        for ki in 0..m {
            let lhs = &images[mul[hi * m + ki] as usize];
            if *lhs != images[hi].then(&images[ki]) {
                result.homomorphism = false;
                result.automorphism = false;
                result.witness = Some(format!(
                    "h={}, k={}",
                    show(gs.element(hi)),
                    show(gs.element(ki))
                ));
                break 'outer;
            }
        }
    }
    if result.homomorphism {
        let mut hit = vec![false; m];
        for id in ids.iter().flatten() {
            hit[*id] = true;
        }
        result.automorphism = hit.iter().all(|&b| b);
        if !result.automorphism {
            result.witness = Some("not surjective on G_S".into());
        }
    }
    result
}

pub fn check_sigma_homomorphism(idx: &InnerMaps, y: usize) -> bool {
    sigma_morphism(idx, y).homomorphism
}

pub fn check_sigma_automorphism(idx: &InnerMaps, y: usize) -> bool {
    sigma_morphism(idx, y).automorphism
}
