//! Acceptance suite: one line per criterion, then a single assertion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::fmt;

use common as oracle;
use rloop::constructions::{deform_rho, projection_loop};
use rloop::enumerate::{enumerate_right_loops, right_loop_count, sweep, Predicate};
use rloop::extension::{build_extension, classify_transversal, induce_trg};
use rloop::innermaps::{check_prop2_identities, check_prop2_identities_fast, InnerMaps};
use rloop::permgroup::isomorphic;
use rloop::samples;
use rloop::twistedaut::{
    aut_group, check_group_taut_collapse, check_odd_abelian, render_set, taut_group,
    TwistedGyroAnalysis,
};
use rloop::twistedsub::{check_equivalence_theorem, check_tgg_identities, is_twisted_gyrogroup};
use rloop::{GroupTable, PermGroup, RightLoop};

#[derive(PartialEq)]
enum Status {
    Pass,
    /// Everything attainable holds; part of the stated target does not.
    Deviation,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Deviation => "PASS with deviation",
            Status::Fail => "FAIL",
        })
    }
}

struct Outcome {
    status: Status,
    detail: String,
    problems: Vec<String>,
}

/// Collects failed expectations for one criterion.
#[derive(Default)]
struct Tally {
    problems: Vec<String>,
    notes: Vec<String>,
    deviations: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.problems.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn finish(self) -> Outcome {
        let status = if !self.problems.is_empty() {
            Status::Fail
        } else if !self.deviations.is_empty() {
            Status::Deviation
        } else {
            Status::Pass
        };
        let mut parts = self.notes;
        parts.extend(self.deviations.into_iter().map(|d| format!("deviation: {d}")));
        Outcome {
            status,
            detail: parts.join("; "),
            problems: self.problems,
        }
    }
}

fn perm_set(g: &PermGroup) -> BTreeSet<oracle::P> {
    g.elements().iter().map(oracle::perm_of).collect()
}

fn trgs_up_to(max: usize) -> Vec<RightLoop> {
    (1..=max)
        .flat_map(|n| enumerate_right_loops(n, &[Predicate::Trg]).unwrap())
        .collect()
}

fn golden_example() -> Outcome {
    let mut c = Tally::default();
    let t = samples::order5_trg();
    let raw = oracle::from_lib(&t);
    let labels = t.labels();
    let idx = InnerMaps::new(&t).unwrap();
    let f = |y: usize, z: usize| idx.f(y - 1, z - 1).to_cycle_string(labels);

    for (y, z) in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (5, 1)] {
        c.eq(f(y, z), "I".to_string(), &format!("f({y},{z})"));
    }
    let expected = [
        ((2, 2), "I"),
        ((2, 3), "I"),
        ((3, 2), "I"),
        ((3, 3), "I"),
        ((4, 4), "I"),
        ((5, 5), "I"),
        ((2, 4), "(2 3 4)"),
        ((4, 3), "(2 3 4)"),
        ((3, 4), "(2 4 3)"),
        ((4, 2), "(2 4 3)"),
        ((4, 5), "(2 3)(4 5)"),
        ((5, 4), "(2 3)(4 5)"),
        ((3, 5), "(2 5 3)"),
        ((5, 2), "(2 5 3)"),
    ];
    for ((y, z), want) in expected {
        c.eq(f(y, z), want.to_string(), &format!("f({y},{z})"));
    }
    // the reference list also gives (2 5 3) for these two; the table says otherwise
    let mut errata = Vec::new();
    for (y, z) in [(2, 5), (5, 3)] {
        let got = f(y, z);
        c.eq(got.clone(), "(2 3 5)".to_string(), &format!("f({y},{z})"));
        if got != "(2 5 3)" {
            errata.push(format!("f({y},{z}) = {got}"));
        }
    }
    if !errata.is_empty() {
        c.notes.push(format!(
            "erratum flagged: listed (2 5 3) but table gives {}",
            errata.join(", ")
        ));
    }
    for y in 0..5 {
        for z in 0..5 {
            c.eq(oracle::perm_of(idx.f(y, z)), oracle::inner(&raw, y, z), "f vs brute force");
        }
    }

    let gs = idx.gs();
    c.eq(gs.order(), 12, "|G_S|");
    c.eq(perm_set(gs), oracle::gs(&raw), "G_S vs brute-force closure");
    let gs_table = gs.to_table(labels);
    c.expect(
        isomorphic(&gs_table, &samples::alternating_group(4)).unwrap(),
        "G_S not isomorphic to A4",
    );
    c.expect(gs.is_transitive_on(&[1, 2, 3, 4]), "G_S not transitive on S\\{e}");

    let aut = aut_group(&t).unwrap();
    c.eq(
        render_set(aut.elements(), labels),
        "{I,(2 3),(4 5),(2 3)(4 5)}".to_string(),
        "Aut",
    );
    c.eq(perm_set(&aut), oracle::aut(&raw), "Aut vs brute force");

    let taut = taut_group(&t).unwrap();
    c.eq(taut.order(), 24, "|TAut|");
    c.eq(perm_set(&taut), oracle::taut(&raw), "TAut vs brute force");
    c.expect(
        isomorphic(&taut.to_table(labels), &samples::symmetric_group(4)).unwrap(),
        "TAut not isomorphic to S4",
    );
    c.expect(!t.is_loop(), "table is a loop");

    let a = TwistedGyroAnalysis::new(&t).unwrap();
    c.expect(a.is_trg(), "not a twisted right gyrogroup");
    c.eq(
        a.render_eta(),
        "((234),(243)) ((235),(253)) ((245),(345)) ((254),(354)) ((24)(35),(25)(34))".to_string(),
        "eta",
    );
    c.notes.push(format!(
        "|G_S| = 12 ≅ A4, |TAut| = 24 ≅ S4, Aut = {}, eta = {}",
        render_set(aut.elements(), labels),
        a.render_eta()
    ));
    c.finish()
}

fn projection_example() -> Outcome {
    let mut c = Tally::default();
    let t = projection_loop(5).unwrap();
    let raw = oracle::from_lib(&t);
    let labels = t.labels();
    let idx = InnerMaps::new(&t).unwrap();
    let gs = perm_set(idx.gs());
    let sym: BTreeSet<oracle::P> = oracle::all_perms(5).into_iter().filter(|p| p[0] == 0).collect();
    c.eq(gs.len(), 24, "|G_S|");
    c.eq(&gs, &sym, "G_S = Sym(S\\{e})");
    c.eq(perm_set(&aut_group(&t).unwrap()), sym.clone(), "Aut = Sym(S\\{e})");
    c.eq(oracle::aut(&raw), sym.clone(), "brute-force Aut");

    let rho = idx.f(1, 2).clone();
    c.eq(rho.to_cycle_string(labels), "(x1 x2)".to_string(), "rho = f(x1,x2)");
    let d = deform_rho(&t, &rho).unwrap();
    c.expect(d.checks.all_hold(), "deformation checks");
    let rho_raw = oracle::perm_of(&rho);
    let deformed: oracle::Table = (0..5)
        .map(|x| (0..5).map(|y| if y == 0 { x } else { raw[rho_raw[x]][y] }).collect())
        .collect();
    c.eq(oracle::from_lib(&d.table), deformed.clone(), "o_rho table");

    let taut = perm_set(&taut_group(&d.table).unwrap());
    c.eq(&taut, &sym, "TAut(o_rho) = Sym(S\\{e})");
    c.eq(oracle::taut(&deformed), sym.clone(), "brute-force TAut(o_rho)");

    let aut = aut_group(&d.table).unwrap();
    let aut_set = perm_set(&aut);
    c.eq(&aut_set, &oracle::aut(&deformed), "Aut(o_rho) vs brute force");
    let centralizer: BTreeSet<oracle::P> = sym
        .iter()
        .filter(|h| oracle::then(h, &rho_raw) == oracle::then(&rho_raw, h))
        .cloned()
        .collect();
    c.eq(&aut_set, &centralizer, "Aut(o_rho) = centralizer of rho");
    c.eq(aut.order(), 4, "|Aut(o_rho)|");
    c.notes.push(format!(
        "G_S = Aut order 24, TAut(o_rho) order 24, Aut(o_rho) = {}",
        render_set(aut.elements(), labels)
    ));
    let target: BTreeSet<oracle::P> = sym.iter().filter(|h| h[1] == 1 && h[2] == 2).cloned().collect();
    if aut_set != target {
        c.deviations.push(format!(
            "stated Aut(o_rho) = Sym{{x3,x4}} of order {}; computed order {} \
             (rho itself is an automorphism of o_rho)",
            target.len(),
            aut.order()
        ));
    }
    c.finish()
}

fn theorem_suite() -> Outcome {
    let mut c = Tally::default();
    let mut total = 0u128;
    for n in 1..=5 {
        let bad = sweep(n, &[], |t| {
            let r = check_prop2_identities_fast(t).unwrap();
            (!r.all_hold()).then(|| format!("{:?}: {:?}", t.rows(), r.violations().next()))
        })
        .unwrap();
        c.expect(bad.is_empty(), format!("n={n}: {:?}", bad.first()));
        let seen = sweep(n, &[], |_| Some(())).unwrap().len() as u128;
        c.eq(seen, right_loop_count(n), &format!("tables of order {n}"));
        total += seen;
    }
    for n in 1..=4 {
        for t in enumerate_right_loops(n, &[]).unwrap() {
            let r = check_prop2_identities(&InnerMaps::new(&t).unwrap());
            c.expect(r.all_hold(), format!("general check on {:?}", t.rows()));
        }
    }

    let trgs = trgs_up_to(5);
    let brute: BTreeSet<oracle::Table> = (1..=5)
        .flat_map(oracle::all_right_loops)
        .filter(oracle::is_trg)
        .collect();
    let found: BTreeSet<oracle::Table> = trgs.iter().map(oracle::from_lib).collect();
    c.eq(&found, &brute, "TRGs of order <= 5 vs brute force");

    let mut tggs = 0;
    for t in &trgs {
        let raw = oracle::from_lib(t);
        let a = TwistedGyroAnalysis::new(t).unwrap();
        c.expect(a.checks().all_hold(), format!("TRG checks on {raw:?}"));
        let gs = oracle::gs(&raw);
        for h in &gs {
            let e = oracle::eta(&raw, h);
            c.expect(gs.contains(&e), "eta(G_S) in G_S");
            c.expect(oracle::eta(&raw, &e) == *h, "eta^2 = id");
            c.expect(oracle::is_twisted_automorphism(&raw, h), "G_S in TAut");
            for k in &gs {
                c.expect(
                    oracle::eta(&raw, &oracle::then(h, k)) == oracle::then(&e, &oracle::eta(&raw, k)),
                    "eta multiplicative",
                );
            }
        }
        let eq = check_equivalence_theorem(&a).unwrap();
        c.expect(eq.consistent(), format!("equivalence on {raw:?}"));
        let tgg = is_twisted_gyrogroup(&a).unwrap();
        c.eq(tgg, oracle::is_twisted_gyrogroup(&raw), "twisted gyrogroup vs brute force");
        c.eq(eq.lhs(), tgg, "left side of the equivalence");
        if tgg {
            tggs += 1;
            c.expect(check_tgg_identities(&a).is_ok(), format!("gyrogroup identities on {raw:?}"));
        }
    }
    c.notes.push(format!(
        "{total} right loops checked, {} TRGs, {tggs} twisted gyrogroups",
        trgs.len()
    ));
    c.finish()
}

fn round_trip() -> Outcome {
    let mut c = Tally::default();
    let trgs = trgs_up_to(5);
    for t in &trgs {
        let a = TwistedGyroAnalysis::new(t).unwrap();
        let ext = build_extension(&a).unwrap();
        c.expect(ext.verification().all_hold(), format!("verification on {:?}", t.rows()));
        c.eq(ext.order(), a.gs().order() * t.order(), "|G_S·S|");
        c.expect(oracle::is_associative(&ext.table().rows()), "extension associative");
        let ta = ext.decompose().unwrap();
        let class = classify_transversal(&ta).unwrap();
        c.expect(class.is_twisted_gyrotransversal(), format!("classification {}", class.kind));
        let eta = a.eta_on_gs().unwrap();
        c.expect(class.has_candidate(eta), "eta among candidates");
        let back = induce_trg(&ta, eta).unwrap();
        c.expect(back.bridging.all_hold(), "bridging identities");
        c.eq(back.analysis.table().flat(), t.flat(), "induced table");
    }
    let ext = build_extension(&TwistedGyroAnalysis::new(&samples::order5_trg()).unwrap()).unwrap();
    c.eq(ext.order(), 60, "order of the example extension");
    c.notes.push(format!("{} TRGs round-tripped; example extension has order {}", trgs.len(), ext.order()));
    c.finish()
}

fn group_collapse() -> Outcome {
    let mut c = Tally::default();
    let z2 = GroupTable::cyclic(2);
    let groups = [
        ("Z2", z2.clone()),
        ("Z3", GroupTable::cyclic(3)),
        ("Z4", GroupTable::cyclic(4)),
        ("Z2xZ2", z2.direct_product(&z2)),
        ("S3", samples::symmetric_group(3)),
        ("Z6", GroupTable::cyclic(6)),
    ];
    let mut sizes = Vec::new();
    for (name, g) in &groups {
        c.expect(check_group_taut_collapse(g).unwrap(), format!("{name}: TAut != Aut"));
        let t = RightLoop::from_group(g).unwrap();
        let raw = oracle::from_lib(&t);
        let taut = perm_set(&taut_group(&t).unwrap());
        let aut = perm_set(&aut_group(&t).unwrap());
        c.eq(&taut, &aut, name);
        c.eq(&taut, &oracle::taut(&raw), &format!("{name}: TAut vs brute force"));
        c.eq(&aut, &oracle::aut(&raw), &format!("{name}: Aut vs brute force"));
        sizes.push(format!("{name}:{}", aut.len()));
    }
    c.notes.push(format!("|TAut| = |Aut|: {}", sizes.join(" ")));
    c.finish()
}

fn enumeration_oracle() -> Outcome {
    let mut c = Tally::default();
    type Check = fn(&oracle::Table) -> bool;
    let filters: [(Option<Predicate>, Check); 8] = [
        (None, |_| true),
        (Some(Predicate::UniqueInverses), oracle::unique_inverses),
        (Some(Predicate::InverseInner), oracle::inverse_inner),
        (Some(Predicate::Trg), oracle::is_trg),
        (Some(Predicate::Ar), oracle::is_ar),
        (Some(Predicate::TwistedGyrogroup), oracle::is_twisted_gyrogroup),
        (Some(Predicate::Aip), oracle::has_aip),
        (Some(Predicate::LeftAlternative), oracle::left_alternative),
    ];
    for n in 1..=4 {
        let all = oracle::all_right_loops(n);
        for (p, holds) in &filters {
            let filter: Vec<Predicate> = p.iter().copied().collect();
            let got: Vec<oracle::Table> = enumerate_right_loops(n, &filter)
                .unwrap()
                .iter()
                .map(oracle::from_lib)
                .collect();
            let want: Vec<oracle::Table> = all.iter().filter(|t| holds(t)).cloned().collect();
            c.eq(got, want, &format!("n={n}, filter {:?}", p.map(Predicate::name)));
        }
    }
    let count = |n| enumerate_right_loops(n, &[]).unwrap().len();
    c.eq(count(3), 4, "total at n = 3");
    c.eq(count(2), 1, "total at n = 2");
    c.notes.push(format!("n=2: {}, n=3: {}, n=4: {}", count(2), count(3), count(4)));
    c.finish()
}

fn odd_abelian() -> Outcome {
    let mut c = Tally::default();
    let mut applicable = 0;
    let trgs = trgs_up_to(5);
    for t in &trgs {
        let raw = oracle::from_lib(t);
        let n = raw.len();
        let a = TwistedGyroAnalysis::new(t).unwrap();
        let r = check_odd_abelian(&a).unwrap();
        let gs = oracle::gs(&raw);
        let trivial_meet = gs
            .iter()
            .all(|h| *h == oracle::identity(n) || !oracle::is_automorphism(&raw, h));
        c.eq(r.applicable, trivial_meet, "hypothesis vs brute force");
        c.expect(r.consistent(), format!("odd-abelian statement on {raw:?}"));
        if trivial_meet {
            applicable += 1;
            c.expect(gs.len() % 2 == 1, "G_S of odd order");
            c.expect(oracle::is_abelian(&gs), "G_S abelian");
            for h in &gs {
                let hi = oracle::inverse(h);
                for x in 0..n {
                    for y in 1..n {
                        c.expect(h[raw[x][y]] == raw[hi[x]][h[y]], "inversion action");
                    }
                }
            }
        }
    }
    c.notes.push(format!("{applicable} of {} TRGs meet the hypothesis", trgs.len()));
    c.finish()
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("order-5 example reproduced", golden_example),
        ("projection loop and its rho-deformation", projection_example),
        ("identities on all right loops and TRGs of order <= 5", theorem_suite),
        ("extension round trip for every TRG of order <= 5", round_trip),
        ("TAut = Aut on small groups", group_collapse),
        ("pruned enumeration equals generate-and-test", enumeration_oracle),
        ("trivial G_S ∩ Aut forces odd abelian G_S", odd_abelian),
    ];
    let mut failures = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        println!("criterion {}: {} - {name}: {}", i + 1, out.status, out.detail);
        for p in &out.problems {
            println!("    {p}");
        }
        if out.status == Status::Fail {
            failures.push(i + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
