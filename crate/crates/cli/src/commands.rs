use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use rloop::constructions::{deform_rho, projection_loop, s_h_transversal};
use rloop::enumerate::{census, for_each_right_loop, Predicate};
use rloop::extension::{build_extension, classify_transversal, decompose, induce_trg, TransversalAnalysis, TransversalClass};
use rloop::format::{parse_table_file, write_group, write_right_loop, TableKind};
use rloop::innermaps::{self, check_prop2_identities, sigma_morphism, InnerMaps};
use rloop::names::guess_group_name;
use rloop::report::{Check, Report};
use rloop::twistedaut::{aut_group, aut_group_backtrack, render_set, taut_group, taut_lower_bound, TwistedGyroAnalysis};
use rloop::twistedsub::{check_equivalence_theorem, twisted_subgroup_check};
use rloop::{Error, GroupTable, Perm, RightLoop};

use crate::output::{CmdResult, Failure, Outcome};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_loop(path: &Path) -> Result<RightLoop, Failure> {
    Ok(parse_table_file(&read(path)?)?.to_right_loop()?)
}

fn load_group(path: &Path) -> Result<GroupTable, Failure> {
    Ok(parse_table_file(&read(path)?)?.to_group()?)
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

/// Element ids for whitespace-separated labels, possibly spread over
/// several arguments.
fn group_ids(g: &GroupTable, args: &[String]) -> Result<Vec<usize>, Failure> {
    let ids = args
        .iter()
        .flat_map(|a| a.split_whitespace())
        .map(|l| g.id_of(l))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ids)
}

fn check_line(c: &Check) -> String {
    match &c.witness {
        None => format!("  ok    {} [{} cases]", c.name, c.cases),
        Some(w) => format!("  FAIL  {} at {w}", c.name),
    }
}

fn render_report(report: &Report) -> String {
    report.checks.iter().map(|c| check_line(c) + "\n").collect()
}

pub fn validate(path: &Path) -> CmdResult {
    let file = parse_table_file(&read(path)?)?;
    let t = file.to_right_loop()?;
    let group = match file.kind {
        TableKind::Group => Some(file.to_group()?),
        TableKind::RightLoop => None,
    };
    let kind = if group.is_some() { "group" } else { "right loop" };
    let text = format!(
        "valid {kind} of order {}, identity {}\nunique inverses: {}\nloop: {}\n",
        t.order(),
        t.label(0),
        yes(t.has_unique_inverses()),
        yes(t.is_loop())
    );
    let json = json!({
        "valid": true,
        "kind": kind,
        "order": t.order(),
        "identity": t.label(0),
        "unique_inverses": t.has_unique_inverses(),
        "loop": t.is_loop(),
    });
    Ok(Outcome::new(text, json))
}

#[derive(Serialize)]
struct GsSummary {
    order: usize,
    generators: Vec<String>,
    name: Option<String>,
    transitive_on_nonidentity: bool,
}

#[derive(Serialize)]
struct AutSummary {
    order: usize,
    elements: String,
}

#[derive(Serialize)]
struct TautSummary {
    order: usize,
    /// False when only a lower bound could be computed.
    exact: bool,
    name: Option<String>,
}

#[derive(Serialize)]
struct SigmaSummary {
    y: String,
    maps_into_gs: bool,
    homomorphism: bool,
    automorphism: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    order: usize,
    identity: String,
    elements: Vec<String>,
    unique_inverses: bool,
    /// `x'` with `x' ∘ x = e`, per element.
    left_inverses: Vec<String>,
    is_loop: bool,
    associative: bool,
    /// `f(y,z)` in cycle notation, row `y`, column `z`.
    inner_mappings: Vec<Vec<String>>,
    gs: GsSummary,
    aut: AutSummary,
    taut: Option<TautSummary>,
    inverse_inner_identity: bool,
    ar_loop: bool,
    sigma: Vec<SigmaSummary>,
    twisted_right_gyrogroup: bool,
    trg_failure: Option<String>,
    eta: Option<String>,
    identities: Report,
}

pub fn analyze(path: &Path) -> CmdResult {
    let t = load_loop(path)?;
    let n = t.order();
    let labels = t.labels();
    let idx = InnerMaps::new(&t)?;
    let gs = idx.gs();
    let gs_table = gs.to_table(labels);
    let generators = gs_table
        .generating_set()
        .into_iter()
        .map(|i| gs.element(i).to_cycle_string(labels))
        .collect();
    let nonidentity: Vec<usize> = (1..n).collect();
    let gs_summary = GsSummary {
        order: gs.order(),
        generators,
        name: guess_group_name(&gs_table),
        transitive_on_nonidentity: n < 2 || gs.is_transitive_on(&nonidentity),
    };
    let aut = match aut_group(&t) {
        Err(Error::CapExceeded { .. }) => aut_group_backtrack(&t)?,
        other => other?,
    };
    let aut_summary = AutSummary {
        order: aut.order(),
        elements: render_set(aut.elements(), labels),
    };
    let taut = if t.has_unique_inverses() {
        let (group, exact) = match taut_group(&t) {
            Err(Error::CapExceeded { .. }) => (taut_lower_bound(&t)?.group, false),
            other => (other?, true),
        };
        Some(TautSummary {
            order: group.order(),
            exact,
            name: guess_group_name(&group.to_table(labels)),
        })
    } else {
        None
    };
    let sigma = (1..n)
        .map(|y| {
            let s = sigma_morphism(&idx, y);
            SigmaSummary {
                y: labels[y].clone(),
                maps_into_gs: s.maps_into,
                homomorphism: s.homomorphism,
                automorphism: s.automorphism,
            }
        })
        .collect();
    let inner_mappings = (0..n)
        .map(|y| (0..n).map(|z| idx.f(y, z).to_cycle_string(labels)).collect())
        .collect();
    let ar_loop = rloop::enumerate::Predicate::Ar.holds(&t);
    let mut identities = check_prop2_identities(&idx);
    let analysis = TwistedGyroAnalysis::from_inner_maps(idx);
    identities.checks.extend(analysis.checks().checks.iter().cloned());
    let report = AnalyzeReport {
        order: n,
        identity: labels[0].clone(),
        elements: labels.to_vec(),
        unique_inverses: t.has_unique_inverses(),
        left_inverses: (0..n).map(|x| labels[t.left_inverse(x)].clone()).collect(),
        is_loop: t.is_loop(),
        associative: t.is_associative(),
        inner_mappings,
        gs: gs_summary,
        aut: aut_summary,
        taut,
        inverse_inner_identity: analysis.inverse_witness().is_none(),
        ar_loop,
        sigma,
        twisted_right_gyrogroup: analysis.is_trg(),
        trg_failure: analysis.failure_reason(),
        eta: analysis.is_trg().then(|| analysis.render_eta()),
        identities,
    };
    let text = render_analysis(&report);
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(Outcome::new(text, json))
}

fn render_analysis(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "order {}, identity {}", r.order, r.identity);
    let _ = writeln!(s, "elements: {}", r.elements.join(" "));
    let inverses: Vec<String> = r
        .elements
        .iter()
        .zip(&r.left_inverses)
        .map(|(x, i)| format!("{x}'={i}"))
        .collect();
    let _ = writeln!(s, "left inverses: {}", inverses.join(" "));
    let _ = writeln!(s, "unique inverses: {}", yes(r.unique_inverses));
    let _ = writeln!(s, "loop: {}", yes(r.is_loop));
    let _ = writeln!(s, "associative: {}", yes(r.associative));
    let _ = writeln!(s, "inner mappings (others are I):");
    let mut any = false;
    for (y, row) in r.inner_mappings.iter().enumerate() {
        for (z, f) in row.iter().enumerate() {
            if f != "I" {
                any = true;
                let _ = writeln!(s, "  f({},{}) = {f}", r.elements[y], r.elements[z]);
            }
        }
    }
    if !any {
        let _ = writeln!(s, "  (none)");
    }
    let _ = writeln!(
        s,
        "G_S order {}, {}, generated by {}",
        r.gs.order,
        match &r.gs.name {
            Some(n) => format!("isomorphic to {n}"),
            None => "no catalog name".into(),
        },
        if r.gs.generators.is_empty() {
            "I".to_string()
        } else {
            r.gs.generators.join(", ")
        }
    );
    let _ = writeln!(s, "G_S transitive on S\\{{e}}: {}", yes(r.gs.transitive_on_nonidentity));
    let _ = writeln!(s, "Aut = {} (order {})", r.aut.elements, r.aut.order);
    match &r.taut {
        Some(t) if t.exact => {
            let _ = writeln!(
                s,
                "TAut order {}{}",
                t.order,
                t.name.as_ref().map(|n| format!(", isomorphic to {n}")).unwrap_or_default()
            );
        }
        Some(t) => {
            let _ = writeln!(s, "TAut order >= {} (lower bound, brute force capped)", t.order);
        }
        None => {
            let _ = writeln!(s, "TAut undefined (no unique inverses)");
        }
    }
    let _ = writeln!(s, "f(y',y) = I for all y: {}", yes(r.inverse_inner_identity));
    let _ = writeln!(s, "A_r-loop (all f(y,z) automorphisms): {}", yes(r.ar_loop));
    for sg in &r.sigma {
        let status = if sg.automorphism {
            "automorphism of G_S"
        } else if sg.homomorphism {
            "endomorphism of G_S"
        } else if sg.maps_into_gs {
            "maps G_S into itself, not a homomorphism"
        } else {
            "leaves G_S"
        };
        let _ = writeln!(s, "sigma_{}: {status}", sg.y);
    }
    match &r.trg_failure {
        None => {
            let _ = writeln!(s, "twisted right gyrogroup: yes");
        }
        Some(why) => {
            let _ = writeln!(s, "twisted right gyrogroup: no ({why})");
        }
    }
    if let Some(eta) = &r.eta {
        let _ = writeln!(s, "eta = {eta}");
    }
    let _ = writeln!(s, "identities:");
    s.push_str(&render_report(&r.identities));
    s
}

pub fn inner(path: &Path, y: &str, z: &str) -> CmdResult {
    let t = load_loop(path)?;
    let (yi, zi) = (t.id_of(y)?, t.id_of(z)?);
    let f = innermaps::inner_map(&t, yi, zi).to_cycle_string(t.labels());
    let text = format!("f({y},{z}) = {f}\n");
    Ok(Outcome::new(text, json!({ "y": y, "z": z, "f": f })))
}

pub fn sigma(path: &Path, y: &str, perm: &str) -> CmdResult {
    let t = load_loop(path)?;
    let yi = t.id_of(y)?;
    let h = Perm::parse_cycles(perm, t.labels())?;
    let image = innermaps::sigma(&t, yi, &h)?.to_cycle_string(t.labels());
    let h_text = h.to_cycle_string(t.labels());
    let text = format!("sigma_{y}({h_text}) = {image}\n");
    Ok(Outcome::new(text, json!({ "y": y, "h": h_text, "sigma": image })))
}

pub fn eta(path: &Path) -> CmdResult {
    let t = load_loop(path)?;
    let a = TwistedGyroAnalysis::new(&t)?;
    if !a.is_trg() {
        let why = a.failure_reason().unwrap_or_default();
        let text = format!("not a twisted right gyrogroup: {why}\n");
        return Ok(Outcome::predicate(text, json!({ "trg": false, "reason": why }), false));
    }
    let labels = t.labels();
    let pairs: Vec<[String; 2]> = a
        .eta_pairs()
        .into_iter()
        .map(|(h, k)| [a.gs().element(h).to_cycle_string(labels), a.gs().element(k).to_cycle_string(labels)])
        .collect();
    let rendered = a.render_eta();
    let text = format!("eta = {rendered}\n");
    Ok(Outcome::new(text, json!({ "trg": true, "eta": rendered, "pairs": pairs })))
}

pub fn extend(path: &Path, output: Option<&Path>) -> CmdResult {
    let t = load_loop(path)?;
    let a = TwistedGyroAnalysis::new(&t)?;
    let ext = build_extension(&a)?;
    let body = write_group(ext.table());
    let header = format!(
        "# G_S·S of order {} = {}·{}; verified: {}\n",
        ext.order(),
        a.gs().order(),
        t.order(),
        ext.verification().checks.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join("; ")
    );
    let mut json = json!({
        "order": ext.order(),
        "gs_order": a.gs().order(),
        "s_order": t.order(),
        "checks": ext.verification(),
    });
    let text = match output {
        Some(p) => {
            std::fs::write(p, format!("{header}{body}"))
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display())))?;
            json["written_to"] = json!(p.display().to_string());
            format!("{header}wrote group of order {} to {}\n", ext.order(), p.display())
        }
        None => {
            json["group_file"] = json!(body);
            format!("{header}{body}")
        }
    };
    Ok(Outcome::new(text, json))
}

/// `(h,η(h))` pairs on H labels, or `I`.
fn render_candidate(ta: &TransversalAnalysis, map: &[usize]) -> String {
    let h = ta.subgroup_table();
    let pairs: Vec<String> = (0..map.len())
        .filter(|&i| map[i] > i)
        .map(|i| format!("({},{})", h.label(i), h.label(map[i])))
        .collect();
    if pairs.is_empty() { "I".into() } else { pairs.join(" ") }
}

fn transversal_outcome(ta: &TransversalAnalysis, class: &TransversalClass, chosen: Option<&[usize]>) -> CmdResult {
    let mut s = String::new();
    let _ = writeln!(s, "classification: {}", class.kind);
    let _ = writeln!(s, "inverse-closed: {}", yes(class.inverse_closed));
    let rendered: Vec<String> = class.candidates.iter().map(|c| render_candidate(ta, &c.map)).collect();
    let _ = writeln!(s, "eta candidates: {}", rendered.len());
    for r in &rendered {
        let _ = writeln!(s, "  {r}");
    }
    let _ = writeln!(s, "induced right loop:");
    s.push_str(&write_right_loop(ta.induced()));
    let mut json = json!({
        "classification": class.kind,
        "inverse_closed": class.inverse_closed,
        "eta_candidates": rendered,
        "induced": ta.induced().rows().iter()
            .map(|r| r.iter().map(|&v| ta.induced().label(v).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let eta = chosen.or_else(|| class.candidates.first().map(|c| c.map.as_slice()));
    if class.inverse_closed {
        if let Some(eta) = eta {
            let induced = induce_trg(ta, eta)?;
            let _ = writeln!(s, "induced with eta = {}: twisted right gyrogroup, eta on G_S = {}", render_candidate(ta, eta), induced.analysis.render_eta());
            s.push_str(&render_report(&induced.bridging));
            json["induced_with"] = json!(render_candidate(ta, eta));
            json["induced_eta"] = json!(induced.analysis.render_eta());
            json["bridging"] = serde_json::to_value(&induced.bridging).expect("serializable");
        }
    }
    Ok(Outcome::predicate(s, json, class.is_twisted_gyrotransversal()))
}

pub fn transversal(path: &Path, subgroup: &[String], transversal: &[String]) -> CmdResult {
    let g = load_group(path)?;
    let ta = decompose(&g, &group_ids(&g, subgroup)?, &group_ids(&g, transversal)?)?;
    let class = classify_transversal(&ta)?;
    transversal_outcome(&ta, &class, None)
}

pub fn twisted_subgroup(path: &Path, subset: &[String]) -> CmdResult {
    let g = load_group(path)?;
    let check = twisted_subgroup_check(&g, &group_ids(&g, subset)?);
    let text = match &check.witness {
        None => "twisted subgroup: yes\n".to_string(),
        Some(w) => format!("twisted subgroup: no ({w})\n"),
    };
    let json = json!({ "twisted_subgroup": check.holds(), "witness": check.witness });
    Ok(Outcome::predicate(text, json, check.holds()))
}

pub fn equivalence(path: &Path) -> CmdResult {
    let t = load_loop(path)?;
    let a = TwistedGyroAnalysis::new(&t)?;
    let r = check_equivalence_theorem(&a)?;
    let mut s = String::new();
    let _ = writeln!(s, "twisted gyrogroup (right loop property): {}", yes(r.lhs()));
    let _ = writeln!(s, "S twisted subgroup of G_S·S with f(x,y)^-1 = f(y,x): {}", yes(r.rhs()));
    let _ = writeln!(s, "sides agree: {}", yes(r.lhs() == r.rhs()));
    for c in [&r.left, &r.twisted_subgroup, &r.inverse_symmetric, &r.inverse_closed] {
        s.push_str(&check_line(c));
        s.push('\n');
    }
    if let Some(c) = &r.xyx {
        s.push_str(&check_line(c));
        s.push('\n');
    }
    let json = json!({
        "lhs": r.lhs(),
        "rhs": r.rhs(),
        "consistent": r.consistent(),
        "report": r,
    });
    Ok(Outcome::predicate(s, json, r.consistent()))
}

pub fn deform(path: &Path, rho: &str) -> CmdResult {
    let t = load_loop(path)?;
    let rho = Perm::parse_cycles(rho, t.labels())?;
    let d = deform_rho(&t, &rho)?;
    let labels = t.labels();
    let aut = aut_group(&d.table)?;
    let taut = taut_group(&d.table)?;
    let mut s = String::new();
    let _ = writeln!(s, "# x o_rho y = rho(x) o y for y != e, rho = {}", rho.to_cycle_string(labels));
    let _ = writeln!(s, "# twisted right gyrogroup: yes, eta = {}", d.analysis.render_eta());
    let _ = writeln!(s, "# Aut = {} (order {})", render_set(aut.elements(), labels), aut.order());
    let _ = writeln!(s, "# TAut order {}", taut.order());
    for c in &d.checks.checks {
        let _ = writeln!(s, "#{}", check_line(c));
    }
    s.push_str(&write_right_loop(&d.table));
    let json = json!({
        "rho": rho.to_cycle_string(labels),
        "eta": d.analysis.render_eta(),
        "aut": render_set(aut.elements(), labels),
        "aut_order": aut.order(),
        "taut_order": taut.order(),
        "checks": d.checks,
        "table": write_right_loop(&d.table),
    });
    Ok(Outcome::new(s, json))
}

pub fn project(n: usize) -> CmdResult {
    let t = projection_loop(n)?;
    let body = write_right_loop(&t);
    let text = format!("# projection right loop of order {n}\n{body}");
    Ok(Outcome::new(text, json!({ "order": n, "table": body })))
}

pub fn sh(path: &Path, subgroup: &[String], transversal: &[String], h: &str) -> CmdResult {
    let g = load_group(path)?;
    let ta = decompose(&g, &group_ids(&g, subgroup)?, &group_ids(&g, transversal)?)?;
    let sh = s_h_transversal(&ta, g.id_of(h)?)?;
    let mut out = transversal_outcome(&sh.analysis, &sh.class, Some(&sh.eta))?;
    let members: Vec<&str> = sh.analysis.transversal().iter().map(|&x| g.label(x)).collect();
    out.text = format!("S_h = {{{}}}\n{}", members.join(","), out.text);
    out.json["s_h"] = json!(members);
    out.json["condition"] = serde_json::to_value(&sh.condition).expect("serializable");
    Ok(out)
}

pub fn enumerate(n: usize, filter: &[String], with_census: bool, up_to_iso: bool, limit: Option<usize>) -> CmdResult {
    let preds = filter
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Predicate>())
        .collect::<Result<Vec<_>, Error>>()?;
    if with_census {
        if !preds.is_empty() {
            return Err(Failure::input("--census counts every predicate combination; drop --filter"));
        }
        let c = census(n, up_to_iso)?;
        let json = serde_json::to_value(&c).expect("serializable");
        return Ok(Outcome::new(c.render(), json));
    }
    if up_to_iso {
        return Err(Failure::input("--up-to-iso needs --census"));
    }
    let mut text = String::new();
    let mut tables: Vec<Value> = Vec::new();
    let mut count = 0usize;
    for_each_right_loop(n, &preds, |t| {
        if limit.is_some_and(|l| count >= l) {
            return false;
        }
        count += 1;
        text.push_str(&write_right_loop(&t));
        text.push('\n');
        tables.push(json!(t.rows()));
        true
    })?;
    let _ = writeln!(text, "count: {count}");
    let names: Vec<&str> = preds.iter().map(|p| p.name()).collect();
    let json = json!({ "order": n, "filter": names, "count": count, "tables": tables });
    Ok(Outcome::new(text, json))
}
