//! Verification suites. Each check compares an expected value with the
//! engine's answer and is tagged with the acceptance criterion it serves.

use std::collections::{HashMap, HashSet};
use std::fmt::Display;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::budget::Budgets;
use crate::catalog::{aut_catalog, aut_psl37_entry, degree10_layer, two_homog_catalog};
use crate::constructors::*;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::integrability::{
    almost_simple_check, check_integral, classify_integrable_subgroups, classify_table, integrable_within,
    thm_b_check, Options, Scope, Status,
};
use crate::normalizer::{normalizer_in, scan_normalizer, Provenance, Strategy};
use crate::perm::Permutation;
use crate::report::Record;
use crate::structure::{derived_subgroup, fingerprint};
use crate::subgroups::all_subgroups;
use crate::table::{Bits, CayleyTable};

pub const SUITES: &[&str] = &[
    "d8",
    "wreath",
    "metacyclic",
    "out-groups",
    "remark45",
    "case1",
    "theorem-a",
    "psl37",
    "case11",
    "theorem-b",
    "properties",
];

#[derive(Clone, Debug)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub flag: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn records(&self) -> Vec<Record> {
        let mut out: Vec<Record> = self
            .checks
            .iter()
            .map(|c| {
                let mut r = Record::new("check")
                    .status(if c.pass { "pass" } else { "fail" })
                    .with("suite", &self.suite)
                    .with("criterion", c.criterion)
                    .with("name", &c.name)
                    .with("expected", &c.expected)
                    .with("computed", &c.computed);
                if let Some(f) = &c.flag {
                    r = r.with("flag", f);
                }
                r
            })
            .collect();
        let failed = self.failures().count();
        out.push(
            Record::new("suite")
                .status(if failed == 0 { "pass" } else { "fail" })
                .with("suite", &self.suite)
                .with("checks", self.checks.len())
                .with("failed", failed),
        );
        out
    }

    pub fn render(&self, json_like: bool) -> String {
        self.records().iter().map(|r| r.render(json_like) + "\n").collect()
    }

    fn eq<T: Display + PartialEq>(&mut self, criterion: u8, name: impl Into<String>, expected: T, computed: T) {
        self.checks.push(Check {
            criterion,
            name: name.into(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
            flag: None,
        });
    }

    fn truth(&mut self, criterion: u8, name: impl Into<String>, computed: bool) {
        self.eq(criterion, name, true, computed);
    }

    fn flag_last(&mut self, flag: &str) {
        if let Some(c) = self.checks.last_mut() {
            c.flag = Some(flag.into());
        }
    }
}

/// Runs one suite, or every suite for `all`, in the fixed suite order.
pub fn run(name: &str, budgets: &Budgets) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.par_iter().map(|s| run_suite(s, budgets)).collect();
    }
    Ok(vec![run_suite(name, budgets)?])
}

pub fn run_suite(name: &str, budgets: &Budgets) -> Result<SuiteReport> {
    let b = budgets;
    match name {
        "d8" => suite_d8(b),
        "wreath" => suite_wreath(b),
        "metacyclic" => suite_metacyclic(b),
        "out-groups" => suite_out_groups(b),
        "remark45" => suite_remark45(b),
        "case1" => suite_case1(b),
        "theorem-a" => suite_theorem_a(b),
        "psl37" => suite_psl37(b),
        "case11" => suite_case11(b),
        "theorem-b" => suite_theorem_b(b),
        "properties" => suite_properties(b),
        _ => Err(Error::InvalidParameter(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", ")))),
    }
}

fn opts(b: &Budgets) -> Options {
    Options { budgets: *b, ..Options::default() }
}

fn direct(b: &Budgets) -> Options {
    Options { budgets: *b, ..Options::no_reductions() }
}

fn gens(g: &PermGroup) -> String {
    g.generator_strings().join(" ")
}

fn suite_d8(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("d8");
    let d8 = dihedral(8)?;
    let dd = derived_subgroup(&d8);
    let order2: Vec<PermGroup> = all_subgroups(&d8, b.subgroups)?.into_iter().filter(|h| h.order() == 2).collect();
    r.eq(1, "order-2 subgroups of D8", 5, order2.len());
    let mut integrable = 0;
    for h in &order2 {
        let v = integrable_within(h, &d8, &direct(b))?;
        let expected = if h.equals(&dd) { Status::Integrable } else { Status::NotIntegrable };
        r.eq(1, format!("<{}> within D8", gens(h)), expected, v.status);
        if v.status == Status::NotIntegrable {
            r.truth(1, format!("<{}> search exhaustive", gens(h)), v.witnesses_complete);
        } else {
            integrable += 1;
        }
    }
    r.eq(1, "integrable order-2 subgroups", 1, integrable);
    let s4 = symmetric(4)?;
    let v = integrable_within(&alternating(4)?, &s4, &direct(b))?;
    r.eq(1, "A4 within S4", Status::Integrable, v.status);
    r.truth(1, "A4 within S4 witnesses are {S4}", v.witnesses.len() == 1 && v.witnesses[0].equals(&s4));
    Ok(r)
}

fn suite_wreath(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("wreath");
    let d8 = dihedral(8)?;
    let c2 = cyclic(2)?;
    let u = wreath_imprimitive(&d8, 2)?;
    let ud = derived_subgroup(&u);
    r.eq(2, "|D8 wr C2|", 128, u.order());
    r.eq(2, "|U'|", 16, ud.order());
    let fp_d8 = fingerprint(&d8, b.elements)?;
    let fp_v4 = fingerprint(&direct_product(&c2, &c2)?, b.elements)?;
    r.eq(2, "U' fingerprint is that of D8 x C2", fingerprint(&direct_product(&d8, &c2)?, b.elements)?, fingerprint(&ud, b.elements)?);
    let cls = classify_integrable_subgroups(&u, Scope::SubgroupsOfDerived, b)?;
    let mut non_d8 = 0;
    let mut non_v4 = 0;
    let mut non_other = 0;
    let mut non_v4_groups = Vec::new();
    for e in cls.entries.iter().filter(|e| !e.integrable) {
        let fp = fingerprint(&e.group, b.elements)?;
        if fp == fp_d8 {
            non_d8 += 1;
        } else if fp == fp_v4 {
            non_v4 += 1;
            non_v4_groups.push(e.group.clone());
        } else {
            non_other += 1;
        }
    }
    r.eq(2, "non-integrable subgroups of U' with D8 fingerprint", 4, non_d8);
    r.eq(2, "non-integrable subgroups of U' with C2 x C2 fingerprint", 3, non_v4);
    r.eq(2, "other non-integrable subgroups of U'", 0, non_other);
    let order8: Vec<&PermGroup> = cls.entries.iter().map(|e| &e.group).filter(|g| g.order() == 8).collect();
    for v in &non_v4_groups {
        let above = order8.iter().filter(|m| v.is_subgroup_of(m)).count();
        r.eq(2, format!("order-8 subgroups of U' above <{}>", gens(v)), 1, above);
    }
    let mut mismatches = 0;
    for e in &cls.entries {
        let v = integrable_within(&e.group, &u, &direct(b))?;
        if (v.status == Status::Integrable) != e.integrable || v.status == Status::Inconclusive {
            mismatches += 1;
        }
    }
    r.eq(2, format!("direct search agrees with the lattice on {} subgroups of U'", cls.entries.len()), 0, mismatches);
    Ok(r)
}

/// The grid `m ≤ 30`, `n ≤ 12`, every `r` with `r^n ≡ 1 mod m`.
pub fn metacyclic_grid() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for m in 1..=30 {
        for n in 1..=12 {
            for r in metacyclic_exponents(m, n) {
                v.push((m, n, r));
            }
        }
    }
    v
}

/// Violations of the metacyclic law for one group: the integrable
/// subgroups by lattice and by direct search must both be the subgroups of
/// `A'`, and each `B = ⟨x^{ct}⟩ ≤ A' = ⟨x^c⟩` must equal `⟨x^t, y⟩'`.
pub fn metacyclic_violations(m: usize, n: usize, r: usize, b: &Budgets) -> Result<(usize, usize)> {
    let a = metacyclic(m, n, r)?;
    let (x, y) = metacyclic_generators(m, n, r)?;
    let t = CayleyTable::new(&a, b.subgroups)?;
    let subs = crate::subgroups::lattice(&t);
    let (entries, ad_order) = classify_table(&t, &subs, Scope::AllSubgroups);
    let ad = t.derived(&t.whole());
    let mut bad = 0;
    for (s, count) in &entries {
        let in_derived = s.bits.is_subset(&ad.bits);
        if (*count > 0) != in_derived {
            bad += 1;
        }
        let v = integrable_within(&t.to_group(s), &a, &direct(b))?;
        let expected = if in_derived { Status::Integrable } else { Status::NotIntegrable };
        if v.status != expected {
            bad += 1;
        }
    }
    let c = m / ad_order;
    for s in 1..=m {
        if m % s != 0 || s % c != 0 {
            continue;
        }
        let bgrp = PermGroup::new(a.degree(), vec![x.pow(s as u64)])?;
        let witness = PermGroup::new(a.degree(), vec![x.pow((s / c) as u64), y.clone()])?;
        if !check_integral(&witness, &bgrp) {
            bad += 1;
        }
    }
    Ok((bad, entries.len()))
}

fn suite_metacyclic(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("metacyclic");
    let grid = metacyclic_grid();
    let results: Vec<((usize, usize, usize), (usize, usize))> = grid
        .par_iter()
        .map(|&(m, n, rr)| metacyclic_violations(m, n, rr, b).map(|v| ((m, n, rr), v)))
        .collect::<Result<_>>()?;
    for m in 1..=30 {
        let rows: Vec<_> = results.iter().filter(|((mm, _, _), _)| *mm == m).collect();
        let bad: usize = rows.iter().map(|(_, (v, _))| v).sum();
        let subs: usize = rows.iter().map(|(_, (_, s))| s).sum();
        r.eq(3, format!("m={m}: {} groups, {subs} subgroups, violations", rows.len()), 0, bad);
    }
    r.eq(3, "grid size", grid.len(), results.len());
    Ok(r)
}

fn suite_out_groups(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("out-groups");
    for p in [2usize, 3, 5, 7] {
        let mut agree = 0;
        let mut total = 0;
        for d in 1..=12 {
            for f in 1..=6 {
                let g = out_group(d, f, p)?;
                let (delta, _, _) = out_group_generators(d, f, p)?;
                let expected = if p == 2 { delta.clone() } else { delta.pow(2) };
                let expected = PermGroup::new(g.degree(), vec![expected])?;
                total += 1;
                if derived_subgroup(&g).equals(&expected) {
                    agree += 1;
                }
            }
        }
        let shape = if p == 2 { "<delta>" } else { "<delta^2>" };
        r.eq(4, format!("p={p}: derived subgroup is {shape}"), format!("{total}/{total}"), format!("{agree}/{total}"));
    }
    let d8 = dihedral(8)?;
    let surrogates = [
        ("S4 x C2", direct_product(&symmetric(4)?, &cyclic(2)?)?),
        ("S4 x C4", direct_product(&symmetric(4)?, &cyclic(4)?)?),
        ("D8 x C3", direct_product(&d8, &cyclic(3)?)?),
    ];
    for (name, u) in &surrogates {
        let t = CayleyTable::new(u, b.subgroups)?;
        let subs = crate::subgroups::lattice(&t);
        let ud = t.derived(&t.whole());
        let (entries, _) = classify_table(&t, &subs, Scope::AllSubgroups);
        let bad = entries.iter().filter(|(s, c)| (*c > 0) != s.bits.is_subset(&ud.bits)).count();
        r.eq(4, format!("{name}: integrable layer is the subgroups of U'"), 0, bad);
        let mut integral_orders: HashMap<Bits, HashSet<usize>> = HashMap::new();
        for h in &subs {
            integral_orders.entry(t.derived(h).bits).or_default().insert(h.order());
        }
        for (order, witness, label) in [(4, 12, "V4 = A4'"), (3, 6, "C3 = S3'"), (2, 8, "C2 = D8'")] {
            let targets: Vec<_> = entries.iter().filter(|(s, _)| s.order() == order && s.bits.is_subset(&ud.bits)).collect();
            if targets.is_empty() {
                continue;
            }
            let ok = targets
                .iter()
                .filter(|(s, _)| integral_orders.get(&s.bits).is_some_and(|o| o.contains(&witness)))
                .count();
            r.eq(4, format!("{name}: order-{order} subgroups of U' with an order-{witness} integral ({label})"), targets.len(), ok);
        }
    }
    Ok(r)
}

fn suite_remark45(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("remark45");
    let w = case5_witnesses()?;
    let s9 = symmetric(9)?;
    let asl23 = asl(2, 3)?;
    let mut full_rows = 0;
    for (name, g) in [("3^2:Q8", &w.q3_q8), ("ASL2(3)", &asl23)] {
        let v = integrable_within(g, &s9, &opts(b))?;
        r.eq(5, format!("{name} within S9"), Status::Integrable, v.status);
        let (nh, prov) = normalizer_in(&s9, g, Strategy::Auto, b)?;
        r.eq(5, format!("{name}: normalizer provenance"), Provenance::Holomorph, prov);
        r.eq(5, format!("{name}: |N_S9(G)|"), 432, nh.order());
        let ns = scan_normalizer(&s9, g, b.scan)?;
        r.truth(5, format!("{name}: holomorph normalizer equals exact scan of S9"), nh.equals(&ns));
        let soundness = v.witnesses.iter().all(|h| check_integral(h, g) && h.is_subgroup_of(&s9));
        r.truth(5, format!("{name}: witnesses satisfy H' = G"), soundness);
        if v.status == Status::Integrable && nh.equals(&ns) && soundness {
            full_rows += 1;
        }
    }
    let agl23 = agl(2, 3)?;
    let mut candidates = 0;
    let mut integrable: Vec<PermGroup> = Vec::new();
    for h in all_subgroups(&agl23, b.subgroups)? {
        if !h.is_k_transitive(2)? {
            continue;
        }
        candidates += 1;
        if integrable_within(&h, &s9, &opts(b))?.status == Status::Integrable {
            integrable.push(h);
        }
    }
    let point_stabilizers = all_subgroups(&gl(2, 3)?, b.subgroups)?.into_iter().filter(|h| h.is_transitive()).count();
    r.eq(5, "2-transitive subgroups of AGL2(3) vs subgroups of GL2(3) transitive on nonzero vectors", point_stabilizers, candidates);
    let exact = integrable.len() == 2 && integrable[0].equals(&w.q3_q8) && integrable[1].equals(&asl23);
    r.truth(5, "integrable ones are exactly 3^2:Q8 and ASL2(3)", exact);

    let s25 = symmetric(25)?;
    let g = &w.q5_sl2_3;
    let v = integrable_within(g, &s25, &opts(b))?;
    r.eq(5, "5^2:SL2(3) within S25", Status::Integrable, v.status);
    let (_, prov) = normalizer_in(&s25, g, Strategy::Auto, b)?;
    r.eq(5, "5^2:SL2(3): normalizer provenance", Provenance::Holomorph, prov);
    let h = &w.q5_normalizer;
    let witness_ok = check_integral(h, g) && h.is_subgroup_of(&s25);
    r.truth(5, "H = 5^2:N_GL2(5)(Q8) has H' = 5^2:SL2(3)", witness_ok);
    let dv = integrable_within(g, &s25, &direct(b))?;
    r.truth(5, "H is among the direct-search witnesses", dv.witnesses.iter().any(|x| x.equals(h)));
    if v.status == Status::Integrable && witness_ok {
        full_rows += 1;
    }

    let d = derived_subgroup(&w.e5_2);
    r.truth(5, "3^4:((E:5).2) has derived subgroup 3^4:(E:5)", d.equals(&w.e5));
    r.flag_last("witness-only");
    r.eq(5, "|3^4:(E:5)|", 81 * 160, w.e5.order());
    r.eq(5, "table rows fully verified", "3 of 4".to_string(), format!("{full_rows} of 4"));
    Ok(r)
}

fn suite_case1(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("case1");
    for q in [7usize, 11] {
        let sq = symmetric(q)?;
        let mut candidates = 0;
        let mut integrable = 0;
        for h in all_subgroups(&agl(1, q)?, b.subgroups)? {
            if h.is_k_homogeneous(2)? && !h.is_k_transitive(2)? {
                candidates += 1;
                let v = integrable_within(&h, &sq, &direct(b))?;
                if v.status != Status::NotIntegrable {
                    integrable += 1;
                }
            }
        }
        r.eq(6, format!("q={q}: 2-homogeneous, not 2-transitive subgroups of AGL1(q)"), 1, candidates);
        r.eq(6, format!("q={q}: of those, integrable within S{q}"), 0, integrable);
    }
    let g = asl1_squares(27)?;
    let top = agammal1(27)?;
    r.truth(6, "27:13 is 2-homogeneous", g.is_k_homogeneous(2)?);
    r.truth(6, "27:13 is not 2-transitive", !g.is_k_transitive(2)?);
    let v = integrable_within(&g, &symmetric(27)?, &opts(b))?;
    r.eq(6, "27:13 within S27", Status::Integrable, v.status);
    r.truth(6, "AΓL1(27) is a witness", v.witnesses.iter().any(|w| w.equals(&top)));
    let d1 = derived_subgroup(&top);
    let d2 = derived_subgroup(&d1);
    r.truth(6, "AΓL1(27)' = 27:13", d1.equals(&g));
    r.truth(6, "AΓL1(27)'' = translations", d2.equals(&asl(1, 27)?) && d2.order() == 27);
    Ok(r)
}

fn suite_theorem_a(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("theorem-a");
    let expected_layers = [("A5", 2), ("A6", 5), ("PSL2(7)", 2), ("PSL2(11)", 2)];
    for (entry, (name, count)) in aut_catalog()?.iter().zip(expected_layers) {
        let rep = almost_simple_check(entry, &opts(b))?;
        r.eq(7, format!("{name}: groups between S and Aut(S)"), count, rep.rows.len());
        r.eq(7, format!("{name}: violations of 'integrable iff G <= Aut(S)''"), 0, rep.violations());
        r.eq(7, format!("{name}: integrable layer orders"), format!("[{}]", entry.socle.order()), format!("{:?}", rep.integrable_orders()));
    }
    Ok(r)
}

fn suite_psl37(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("psl37");
    let s = psl(3, 7)?;
    let g = pgl(3, 7)?;
    let s57 = symmetric(57)?;
    let order = psl_order(3, 7);
    r.eq(8, "|PSL3(7)| by formula", 1_876_896, order);
    r.eq(8, "|PSL3(7)|", order, s.order());
    r.truth(8, "PSL3(7)' = PSL3(7)", derived_subgroup(&s).equals(&s));
    r.truth(8, "PGL3(7)' = PSL3(7)", derived_subgroup(&g).equals(&s));
    let (n, prov) = normalizer_in(&s57, &s, Strategy::Auto, b)?;
    r.eq(8, "N_S57(PSL3(7)) provenance", Provenance::Catalog, prov);
    r.truth(8, "N_S57(PSL3(7)) = PGL3(7)", n.equals(&g));
    for (label, o) in [("direct search", direct(b)), ("with reductions", opts(b))] {
        let v = integrable_within(&g, &s57, &o)?;
        r.eq(8, format!("PGL3(7) within S57 ({label})"), Status::NotIntegrable, v.status);
        r.eq(8, format!("PGL3(7) within S57 ({label}) provenance"), Provenance::Catalog.to_string(), v.normalizer_provenance.map_or("-".to_string(), |p| p.to_string()));
    }
    let entry = aut_psl37_entry()?;
    r.eq(8, "|Aut(PSL3(7))| on 114 points", 6 * order, entry.aut.order());
    let ad = derived_subgroup(&entry.aut);
    r.eq(8, "|Aut(PSL3(7))'|", 5_630_688, ad.order());
    r.eq(8, "|Aut(PSL3(7))'| = 3|PSL3(7)|", 3 * order, ad.order());
    let pl = aut_psl3_on_points_and_lines(7)?;
    r.truth(8, "Aut(PSL3(7))' is the PGL3(7) layer", ad.equals(&pl.pgl));
    let rep = almost_simple_check(&entry, &opts(b))?;
    r.eq(8, "PSL3(7): groups between S and Aut(S)", 6, rep.rows.len());
    r.eq(8, "PSL3(7): violations of 'integrable iff G <= Aut(S)''", 0, rep.violations());
    Ok(r)
}

fn suite_case11(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("case11");
    let s10 = symmetric(10)?;
    let a6 = psl(2, 9)?;
    let top = pgammal(2, 9)?;
    let layer = degree10_layer(b)?;
    r.eq(9, "groups between A6 and PΓL2(9)", 5, layer.len());
    let mut integrable = Vec::new();
    for (name, g) in &layer {
        let v = integrable_within(g, &s10, &opts(b))?;
        let expected = if name == "A6" { Status::Integrable } else { Status::NotIntegrable };
        r.eq(9, format!("{name} within S10"), expected, v.status);
        if v.status == Status::Integrable {
            integrable.push(name.clone());
        }
    }
    r.eq(9, "integrable layer", "A6".to_string(), integrable.join(","));
    r.truth(9, "A6 = PΓL2(9)'", derived_subgroup(&top).equals(&a6));
    let (n, prov) = normalizer_in(&s10, &a6, Strategy::Auto, b)?;
    r.eq(9, "N_S10(A6) provenance", Provenance::Catalog, prov);
    let scanned = scan_normalizer(&s10, &a6, b.scan)?;
    r.truth(9, "catalog normalizer equals exact scan of S10", n.equals(&scanned) && n.equals(&top));
    Ok(r)
}

fn suite_theorem_b(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("theorem-b");
    for e in two_homog_catalog(b)? {
        let criterion = match e.case {
            1 => 6,
            5 => 5,
            _ if e.group.degree() == 57 => 8,
            _ if e.group.degree() == 10 => 9,
            _ => 6,
        };
        let rep = thm_b_check(&e, &opts(b))?;
        r.truth(criterion, format!("{}: 2-homogeneous", e.name), rep.two_homogeneous);
        r.eq(criterion, format!("{}: 2-transitive", e.name), e.case != 1, rep.two_transitive);
        let side = |inside: bool| if inside { "inside" } else { "outside" };
        r.truth(
            criterion,
            format!(
                "{}: verdict {} consistent with the interval (N_Sn(S): {}, overgroup: {})",
                e.name,
                rep.verdict.status,
                side(rep.in_interval),
                side(rep.in_overgroup_interval)
            ),
            rep.consistent(),
        );
        if rep.overgroup_only() {
            r.flag_last("overgroup-only");
        }
    }
    Ok(r)
}

/// Groups up to order 2000 drawn from the suites.
pub fn oracle_corpus() -> Result<Vec<(String, PermGroup)>> {
    let w = case5_witnesses()?;
    let d8 = dihedral(8)?;
    let mut v = vec![
        ("D8".to_string(), d8.clone()),
        ("S4".into(), symmetric(4)?),
        ("A5".into(), alternating(5)?),
        ("D8 wr C2".into(), wreath_imprimitive(&d8, 2)?),
        ("AGL2(3)".into(), agl(2, 3)?),
        ("3^2:Q8".into(), w.q3_q8),
        ("ASL2(3)".into(), asl(2, 3)?),
        ("5^2:SL2(3)".into(), w.q5_sl2_3),
        ("AGL1(27)".into(), agl(1, 27)?),
        ("PGL2(7)".into(), pgl(2, 7)?),
        ("PSL2(11)".into(), psl(2, 11)?),
        ("PGL2(11)".into(), pgl(2, 11)?),
        ("D8 o Q8".into(), central_product_d8_q8()?),
        ("2^{1+6}_+".into(), extraspecial2(3, ExtraspecialType::Plus)?),
        ("S4 x C4".into(), direct_product(&symmetric(4)?, &cyclic(4)?)?),
        ("D8 x C3".into(), direct_product(&d8, &cyclic(3)?)?),
        ("metacyclic(30,12,7)".into(), metacyclic(30, 12, 7)?),
        ("out_group(12,2,5)".into(), out_group(12, 2, 5)?),
    ];
    for (name, g) in degree10_layer(&Budgets::default())? {
        v.push((name, g));
    }
    Ok(v)
}

/// `G'` by closing the set of all commutators of elements under products.
pub fn brute_force_derived(g: &PermGroup, budget: usize) -> Result<HashSet<Permutation>> {
    let elems = g.elements(budget)?;
    let mut comms: Vec<Permutation> = Vec::new();
    let mut seen = HashSet::new();
    for a in &elems {
        for c in &elems {
            let k = a.commutator(c)?;
            if seen.insert(k.clone()) {
                comms.push(k);
            }
        }
    }
    let mut closed: HashSet<Permutation> = HashSet::new();
    let mut stack = vec![Permutation::identity(g.degree())];
    closed.insert(stack[0].clone());
    while let Some(x) = stack.pop() {
        for c in &comms {
            let y = x.mul(c);
            if closed.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    Ok(closed)
}

/// `(name, G, U)` triples from criteria 1 to 9 on which reductions can be
/// compared with direct search.
pub fn coherence_instances(b: &Budgets) -> Result<Vec<(String, PermGroup, PermGroup)>> {
    let mut v = Vec::new();
    let d8 = dihedral(8)?;
    for h in all_subgroups(&d8, b.subgroups)? {
        v.push((format!("D8 <{}>", gens(&h)), h, d8.clone()));
    }
    let u = wreath_imprimitive(&d8, 2)?;
    for h in all_subgroups(&derived_subgroup(&u), b.subgroups)? {
        v.push((format!("D8 wr C2 <{}>", gens(&h)), h, u.clone()));
    }
    for (m, n, r) in [(7, 6, 3), (9, 6, 2), (12, 2, 5), (13, 12, 2), (30, 4, 7)] {
        let a = metacyclic(m, n, r)?;
        for h in all_subgroups(&a, b.subgroups)? {
            v.push((format!("metacyclic({m},{n},{r}) <{}>", gens(&h)), h, a.clone()));
        }
    }
    let s4xc4 = direct_product(&symmetric(4)?, &cyclic(4)?)?;
    for h in all_subgroups(&derived_subgroup(&s4xc4), b.subgroups)? {
        v.push((format!("S4 x C4 <{}>", gens(&h)), h, s4xc4.clone()));
    }
    let w = case5_witnesses()?;
    v.push(("3^2:Q8 in S9".into(), w.q3_q8, symmetric(9)?));
    v.push(("ASL2(3) in S9".into(), asl(2, 3)?, symmetric(9)?));
    v.push(("AGL2(3) in S9".into(), agl(2, 3)?, symmetric(9)?));
    v.push(("5^2:SL2(3) in S25".into(), w.q5_sl2_3, symmetric(25)?));
    for q in [7, 11, 27] {
        v.push((format!("{q}:{} in S{q}", (q - 1) / 2), asl1_squares(q)?, symmetric(q)?));
    }
    for e in aut_catalog()? {
        for g in crate::subgroups::intermediate_subgroups(&e.aut, &e.socle, b)? {
            v.push((format!("{} layer order {}", e.name, g.order()), g, e.aut.clone()));
        }
    }
    v.push(("PGL3(7) in S57".into(), pgl(3, 7)?, symmetric(57)?));
    for (name, g) in degree10_layer(b)? {
        v.push((format!("{name} in S10"), g, symmetric(10)?));
    }
    Ok(v)
}

fn suite_properties(b: &Budgets) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("properties");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut samples = Vec::new();
    for i in 0..200 {
        let n = 2 + i % 6;
        let k = rng.gen_range(1..=3);
        let gens: Vec<Permutation> = (0..k)
            .map(|_| {
                let mut im: Vec<usize> = (0..n).collect();
                im.shuffle(&mut rng);
                Permutation::from_images(im).expect("shuffle is a bijection")
            })
            .collect();
        samples.push(PermGroup::new(n, gens)?);
    }
    let outcomes: Vec<(bool, bool)> = samples
        .par_iter()
        .map(|h| {
            let g = derived_subgroup(h);
            let sn = symmetric(h.degree())?;
            let v = integrable_within(&g, &sn, &opts(b))?;
            let sound = v.witnesses.iter().all(|w| check_integral(w, &g) && w.is_subgroup_of(&sn));
            Ok((v.status == Status::Integrable, sound))
        })
        .collect::<Result<_>>()?;
    r.eq(10, "closure: H' integrable within S_n for random H, n <= 7", 200, outcomes.iter().filter(|o| o.0).count());
    r.eq(10, "closure: witnesses satisfy H' = G and H <= S_n", 200, outcomes.iter().filter(|o| o.1).count());

    let corpus = oracle_corpus()?;
    let mut agree = 0;
    for (_, g) in &corpus {
        let oracle = brute_force_derived(g, b.elements)?;
        let engine: HashSet<Permutation> = derived_subgroup(g).elements(b.elements)?.into_iter().collect();
        if oracle == engine {
            agree += 1;
        }
    }
    r.eq(10, "derived subgroup matches commutator closure on the corpus", corpus.len(), agree);

    let instances = coherence_instances(b)?;
    let variants = [
        Options { budgets: *b, ..Options::no_reductions() },
        Options { socle: true, budgets: *b, ..Options::no_reductions() },
        Options { perfect_core: true, budgets: *b, ..Options::no_reductions() },
        Options { metacyclic: true, budgets: *b, ..Options::no_reductions() },
        opts(b),
    ];
    let statuses: Vec<Vec<Status>> = instances
        .par_iter()
        .map(|(_, g, u)| variants.iter().map(|o| integrable_within(g, u, o).map(|v| v.status)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let compared = statuses.iter().filter(|s| s.iter().all(|x| *x != Status::Inconclusive)).count();
    let incoherent: Vec<&str> = instances
        .iter()
        .zip(&statuses)
        .filter(|(_, s)| {
            let done: Vec<&Status> = s.iter().filter(|x| **x != Status::Inconclusive).collect();
            done.windows(2).any(|w| w[0] != w[1])
        })
        .map(|((name, _, _), _)| name.as_str())
        .collect();
    r.eq(10, format!("reduction coherence over {} instances ({compared} complete every way)", instances.len()), String::new(), incoherent.join(";"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d8_suite_passes() {
        let rep = run_suite("d8", &Budgets::default()).unwrap();
        assert!(rep.passed(), "{}", rep.render(false));
        assert!(rep.render(false).contains("kind=suite status=pass"));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &Budgets::default()).is_err());
    }
}
