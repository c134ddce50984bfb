//! Relative integrability: given `G ≤ U`, find every `H ≤ U` with `H' = G`.
//!
//! Any such `H` normalizes `G`, so the direct search ranges over the
//! subgroups between `G` and `N_U(G)`. Three reductions shrink the search:
//!
//! * metacyclic: if `U = ⟨x, y⟩` with `⟨x⟩ ⊴ U`, the subgroups integrable
//!   within `U` are exactly the subgroups of `U'`;
//! * perfect core: for the last term `K ≠ 1` of the derived series of `G`,
//!   `G` is integrable within `U` iff `G/K` is integrable within `N_U(K)/K`;
//! * socle: the same with `K` the unique minimal normal subgroup of `G`,
//!   unless `G` is cyclic of prime-power order.
//!
//! Witnesses found in a quotient are lifted back and rechecked.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::normalizer::{normalizer_in, Provenance, Strategy};
use crate::quotient::QuotientRep;
use crate::structure::{
    derived_subgroup, fingerprint, is_cyclic_p_group, perfect_core, sorted_groups, unique_minimal_normal, Fingerprint,
};
use crate::subgroups::{intermediate_subgroups, lattice};
use crate::table::{Bits, CayleyTable, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Integrable,
    NotIntegrable,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Integrable => "integrable",
            Status::NotIntegrable => "not-integrable",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Metacyclic,
    Socle,
    PerfectCore,
    DirectSearch,
    /// A known group was checked directly after a budget failure.
    Probe,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::Metacyclic => "metacyclic",
            Step::Socle => "socle",
            Step::PerfectCore => "perfect-core",
            Step::DirectSearch => "direct-search",
            Step::Probe => "probe",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub metacyclic: bool,
    pub socle: bool,
    pub perfect_core: bool,
    /// After a budget failure, test `G`, `N_U(G)`, `U` and the trivial group
    /// as witnesses before giving up.
    pub probes: bool,
    pub strategy: Strategy,
    pub budgets: Budgets,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            metacyclic: true,
            socle: true,
            perfect_core: true,
            probes: true,
            strategy: Strategy::Auto,
            budgets: Budgets::default(),
        }
    }
}

impl Options {
    /// Direct search only.
    pub fn no_reductions() -> Self {
        Options { metacyclic: false, socle: false, perfect_core: false, ..Options::default() }
    }
}

/// Outcome of [`integrable_within`].
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    /// Sorted by order and generators. Complete when `witnesses_complete`.
    pub witnesses: Vec<PermGroup>,
    pub witnesses_complete: bool,
    pub candidates_examined: usize,
    pub trace: Vec<Step>,
    /// Method of the first normalizer computed, if any.
    pub normalizer_provenance: Option<Provenance>,
    pub inconclusive_reason: Option<String>,
}

impl Verdict {
    fn from_witnesses(witnesses: Vec<PermGroup>, complete: bool, candidates: usize, trace: Vec<Step>, prov: Option<Provenance>) -> Self {
        let status = if !witnesses.is_empty() {
            Status::Integrable
        } else if complete {
            Status::NotIntegrable
        } else {
            Status::Inconclusive
        };
        Verdict {
            status,
            witnesses: sorted_groups(witnesses),
            witnesses_complete: complete,
            candidates_examined: candidates,
            trace,
            normalizer_provenance: prov,
            inconclusive_reason: None,
        }
    }
}

/// `H' = G` as subgroups of the same symmetric group.
pub fn check_integral(h: &PermGroup, g: &PermGroup) -> bool {
    h.degree() == g.degree() && derived_subgroup(h).equals(g)
}

/// Decides whether some `H ≤ U` has `H' = G`.
///
/// Fails only when `G ⊄ U`; exhausted budgets give an inconclusive verdict.
pub fn integrable_within(g: &PermGroup, u: &PermGroup, opts: &Options) -> Result<Verdict> {
    if g.degree() != u.degree() {
        return Err(Error::DegreeMismatch(g.degree(), u.degree()));
    }
    if !g.is_subgroup_of(u) {
        return Err(Error::NotSubgroup("G is not contained in U".into()));
    }
    solve(g, u, opts, 0)
}

fn solve(g: &PermGroup, u: &PermGroup, opts: &Options, depth: usize) -> Result<Verdict> {
    let b = &opts.budgets;
    if opts.metacyclic && u.order_big() <= b.subgroups.into() {
        if let Some(v) = metacyclic_path(g, u, b)? {
            return Ok(v);
        }
    }
    if depth < b.depth {
        if opts.perfect_core {
            let k = perfect_core(g);
            if !k.is_trivial() {
                match reduce(g, u, &k, Step::PerfectCore, opts, depth) {
                    Ok(v) if v.status != Status::Inconclusive => return Ok(v),
                    Ok(_) => {}
                    Err(e) if e.is_budget() => {}
                    Err(e) => return Err(e),
                }
            }
        }
        if opts.socle && !g.is_trivial() && g.order_big() <= b.elements.into() && !is_cyclic_p_group(g, b.elements)? {
            if let Some(s) = unique_minimal_normal(g, b.elements)? {
                match reduce(g, u, &s, Step::Socle, opts, depth) {
                    Ok(v) if v.status != Status::Inconclusive => return Ok(v),
                    Ok(_) => {}
                    Err(e) if e.is_budget() => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    match direct_search(g, u, opts) {
        Ok(v) => Ok(v),
        Err(e) if e.is_budget() => Ok(probe(g, u, opts, e)),
        Err(e) => Err(e),
    }
}

/// Recurses on `G/K` within `N_U(K)/K` and lifts the witnesses.
fn reduce(g: &PermGroup, u: &PermGroup, k: &PermGroup, step: Step, opts: &Options, depth: usize) -> Result<Verdict> {
    let b = &opts.budgets;
    let (nk, prov) = normalizer_in(u, k, opts.strategy, b)?;
    let q = QuotientRep::new(&nk, k, b.index)?;
    let gq = q.project_group(g)?;
    let sub = solve(&gq, q.quotient_group(), opts, depth + 1)?;
    let mut witnesses = Vec::new();
    for w in &sub.witnesses {
        let h = q.lift(w)?;
        if check_integral(&h, g) {
            witnesses.push(h);
        }
    }
    let mut trace = vec![step];
    trace.extend(sub.trace.iter().copied());
    let complete = sub.witnesses_complete;
    let mut v = Verdict::from_witnesses(witnesses, complete, sub.candidates_examined, trace, Some(prov));
    if sub.status == Status::Inconclusive && v.status != Status::Integrable {
        v.status = Status::Inconclusive;
        v.inconclusive_reason = sub.inconclusive_reason;
    }
    Ok(v)
}

fn direct_search(g: &PermGroup, u: &PermGroup, opts: &Options) -> Result<Verdict> {
    let b = &opts.budgets;
    let (n, prov) = normalizer_in(u, g, opts.strategy, b)?;
    let index = n.order_big() / g.order_big();
    if index > b.candidates.into() {
        let needed = u128::try_from(index).unwrap_or(u128::MAX);
        return Err(Error::budget("candidate index", needed, b.candidates as u128));
    }
    let candidates = intermediate_subgroups(&n, g, b)?;
    let witnesses: Vec<PermGroup> = candidates.iter().filter(|h| check_integral(h, g)).cloned().collect();
    Ok(Verdict::from_witnesses(witnesses, true, candidates.len(), vec![Step::DirectSearch], Some(prov)))
}

fn probe(g: &PermGroup, u: &PermGroup, opts: &Options, err: Error) -> Verdict {
    let mut pool: Vec<PermGroup> = vec![u.clone(), g.clone(), PermGroup::trivial(g.degree())];
    if let Ok((n, _)) = normalizer_in(u, g, opts.strategy, &opts.budgets) {
        pool.push(n);
    }
    let mut witnesses: Vec<PermGroup> = Vec::new();
    if opts.probes {
        for h in pool {
            if check_integral(&h, g) && !witnesses.iter().any(|w| w.equals(&h)) {
                witnesses.push(h);
            }
        }
    }
    let trace = if opts.probes { vec![Step::Probe] } else { Vec::new() };
    let mut v = Verdict::from_witnesses(witnesses, false, 0, trace, None);
    if v.status == Status::Inconclusive {
        v.inconclusive_reason = Some(err.to_string());
    }
    v
}

/// Recognizes `U = ⟨x, y⟩` with `⟨x⟩ ⊴ U` and answers by `G ≤ U'`, with the
/// witness `⟨x^t, y⟩` when `G = ⟨x^{ct}⟩` and `U' = ⟨x^c⟩`.
fn metacyclic_path(g: &PermGroup, u: &PermGroup, b: &Budgets) -> Result<Option<Verdict>> {
    let t = CayleyTable::new(u, b.subgroups)?;
    let Some((x, y)) = metacyclic_structure(&t) else {
        return Ok(None);
    };
    let trace = vec![Step::Metacyclic];
    let ud = derived_subgroup(u);
    if !g.is_subgroup_of(&ud) {
        return Ok(Some(Verdict::from_witnesses(Vec::new(), true, 0, trace, None)));
    }
    let m = t.order_of(x);
    let s = m / g.order() as usize;
    let c = m / ud.order() as usize;
    let xt = t.element(t.pow(x, s / c)).clone();
    let mut gens = vec![xt];
    if let Some(y) = y {
        gens.push(t.element(y).clone());
    }
    let h = PermGroup::new(u.degree(), gens)?;
    if !check_integral(&h, g) {
        return Ok(None);
    }
    Ok(Some(Verdict::from_witnesses(vec![h], false, 0, trace, None)))
}

/// `(x, y)` with `⟨x⟩ ⊴ U` and `U = ⟨x, y⟩`; `y` is `None` when `U` is cyclic.
pub fn metacyclic_structure(t: &CayleyTable) -> Option<(u32, Option<u32>)> {
    let n = t.len();
    let whole = t.whole();
    let mut by_order: Vec<(usize, u32)> = (0..n as u32).map(|a| (t.order_of(a), a)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut seen: HashSet<Bits> = HashSet::new();
    for &(m, x) in &by_order {
        let cx = t.generate(&[x]);
        if !seen.insert(cx.bits.clone()) || !t.is_normal_in(&cx, &whole) {
            continue;
        }
        if m == n {
            return Some((x, None));
        }
        let need = n / m;
        for y in 0..n as u32 {
            let mut z = y;
            let mut e = 1;
            while !cx.bits.contains(z) {
                z = t.mul(z, y);
                e += 1;
            }
            if e == need {
                return Some((x, Some(y)));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Lattice-wide classification.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Subgroups of `U'`, the only possible derived subgroups.
    SubgroupsOfDerived,
    AllSubgroups,
}

/// One subgroup with its verdict.
#[derive(Clone, Debug)]
pub struct ClassifiedSubgroup {
    pub group: PermGroup,
    pub integrable: bool,
    /// Number of `H ≤ U` with `H' = ` this subgroup.
    pub witness_count: usize,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub ambient_order: u128,
    pub derived_order: u128,
    pub entries: Vec<ClassifiedSubgroup>,
}

impl Classification {
    pub fn integrable_count(&self) -> usize {
        self.entries.iter().filter(|e| e.integrable).count()
    }

    /// `(fingerprint, integrable, count)`, sorted.
    pub fn counts_by_fingerprint(&self, budget: usize) -> Result<Vec<(Fingerprint, bool, usize)>> {
        let mut map: BTreeMap<(Fingerprint, bool), usize> = BTreeMap::new();
        for e in &self.entries {
            *map.entry((fingerprint(&e.group, budget)?, e.integrable)).or_default() += 1;
        }
        Ok(map.into_iter().map(|((f, i), c)| (f, i, c)).collect())
    }
}

/// Every subgroup in scope with its verdict, from the full subgroup lattice
/// of `U`: the integrable subgroups are exactly the derived subgroups
/// `H'` for `H ≤ U`.
pub fn classify_integrable_subgroups(u: &PermGroup, scope: Scope, budgets: &Budgets) -> Result<Classification> {
    let t = CayleyTable::new(u, budgets.subgroups)?;
    let subs = lattice(&t);
    let (entries, derived_order) = classify_table(&t, &subs, scope);
    Ok(Classification {
        ambient_order: u.order(),
        derived_order: derived_order as u128,
        entries: entries.into_iter().map(|(s, count)| ClassifiedSubgroup {
            group: t.to_group(&s),
            integrable: count > 0,
            witness_count: count,
        }).collect(),
    })
}

/// Table-level classification: each subgroup in scope with its number of
/// integrals, and `|U'|`.
pub fn classify_table(t: &CayleyTable, subs: &[Sub], scope: Scope) -> (Vec<(Sub, usize)>, usize) {
    let mut integrals: std::collections::HashMap<Bits, usize> = std::collections::HashMap::new();
    for h in subs {
        *integrals.entry(t.derived(h).bits).or_default() += 1;
    }
    let ud = t.derived(&t.whole());
    let entries = subs
        .iter()
        .filter(|s| scope == Scope::AllSubgroups || s.bits.is_subset(&ud.bits))
        .map(|s| (s.clone(), integrals.get(&s.bits).copied().unwrap_or(0)))
        .collect();
    (entries, ud.order())
}

// ---------------------------------------------------------------------------
// Almost simple groups and 2-homogeneous groups.

/// One row of an almost-simple check.
#[derive(Clone, Debug)]
pub struct AlmostSimpleRow {
    pub group: PermGroup,
    pub in_derived: bool,
    pub verdict: Verdict,
}

impl AlmostSimpleRow {
    /// Integrable exactly when contained in `Aut(S)'`.
    pub fn consistent(&self) -> bool {
        match self.verdict.status {
            Status::Integrable => self.in_derived,
            Status::NotIntegrable => !self.in_derived,
            Status::Inconclusive => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlmostSimpleReport {
    pub name: String,
    pub aut_derived_order: u128,
    pub rows: Vec<AlmostSimpleRow>,
}

impl AlmostSimpleReport {
    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| !r.consistent()).count()
    }

    pub fn integrable_orders(&self) -> Vec<u128> {
        self.rows.iter().filter(|r| r.verdict.status == Status::Integrable).map(|r| r.group.order()).collect()
    }
}

/// A simple group `S` with a permutation representation of `Aut(S)`.
#[derive(Clone, Debug)]
pub struct AutCatalogEntry {
    pub name: String,
    pub socle: PermGroup,
    pub aut: PermGroup,
}

/// For every `S ≤ G ≤ Aut(S)`, checks that `G` is integrable within
/// `Aut(S)` iff `G ≤ Aut(S)'`.
pub fn almost_simple_check(entry: &AutCatalogEntry, opts: &Options) -> Result<AlmostSimpleReport> {
    if !crate::structure::is_normal(&entry.socle, &entry.aut)? {
        return Err(Error::NotNormal);
    }
    let ad = derived_subgroup(&entry.aut);
    let mut rows = Vec::new();
    for g in intermediate_subgroups(&entry.aut, &entry.socle, &opts.budgets)? {
        let verdict = integrable_within(&g, &entry.aut, opts)?;
        rows.push(AlmostSimpleRow { in_derived: g.is_subgroup_of(&ad), group: g, verdict });
    }
    Ok(AlmostSimpleReport { name: entry.name.clone(), aut_derived_order: ad.order(), rows })
}

/// A 2-homogeneous group with its socle and the normalizer of the socle in
/// the symmetric group.
#[derive(Clone, Debug)]
pub struct TwoHomogCatalogEntry {
    pub name: String,
    /// Case number in the classification of 2-homogeneous groups.
    pub case: u32,
    pub group: PermGroup,
    pub socle: PermGroup,
    /// `N_{S_n}(S)`.
    pub normalizer: PermGroup,
    pub provenance: Provenance,
    /// The normalizing overgroup named by the classification, such as
    /// `AΓL1(q)` in case 1. It can be smaller than `N_{S_n}(S)` when the
    /// socle is elementary abelian of non-prime order.
    pub overgroup: PermGroup,
}

#[derive(Clone, Debug)]
pub struct TwoHomogReport {
    pub name: String,
    pub case: u32,
    pub verdict: Verdict,
    pub n_derived_order: u128,
    pub n_second_derived_order: u128,
    /// `N'' ≤ G ≤ N'` with `N = N_{S_n}(S)`.
    pub in_interval: bool,
    pub overgroup_derived_order: u128,
    pub overgroup_second_derived_order: u128,
    /// `M'' ≤ G ≤ M'` with `M` the catalog overgroup.
    pub in_overgroup_interval: bool,
    pub two_homogeneous: bool,
    pub two_transitive: bool,
}

impl TwoHomogReport {
    /// Integrable groups lie in one of the two intervals. Non-integrable
    /// groups lie in neither, except in case 5 where the interval also holds
    /// non-integrable groups.
    pub fn consistent(&self) -> bool {
        let inside = self.in_interval || self.in_overgroup_interval;
        match self.verdict.status {
            Status::Integrable => inside,
            Status::NotIntegrable => !inside || self.case == 5,
            Status::Inconclusive => false,
        }
    }

    /// Integrable, but only inside the overgroup interval.
    pub fn overgroup_only(&self) -> bool {
        self.verdict.status == Status::Integrable && !self.in_interval && self.in_overgroup_interval
    }
}

pub fn thm_b_check(entry: &TwoHomogCatalogEntry, opts: &Options) -> Result<TwoHomogReport> {
    let n = entry.group.degree();
    let sym = PermGroup::symmetric(n);
    let between = |top: &PermGroup| {
        let d = derived_subgroup(top);
        let dd = derived_subgroup(&d);
        let inside = dd.is_subgroup_of(&entry.group) && entry.group.is_subgroup_of(&d);
        (d.order(), dd.order(), inside)
    };
    let (nd, ndd, in_interval) = between(&entry.normalizer);
    let (md, mdd, in_overgroup_interval) = between(&entry.overgroup);
    let verdict = integrable_within(&entry.group, &sym, opts)?;
    Ok(TwoHomogReport {
        name: entry.name.clone(),
        case: entry.case,
        n_derived_order: nd,
        n_second_derived_order: ndd,
        in_interval,
        overgroup_derived_order: md,
        overgroup_second_derived_order: mdd,
        in_overgroup_interval,
        two_homogeneous: entry.group.is_k_homogeneous(2)?,
        two_transitive: entry.group.is_k_transitive(2)?,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use crate::perm::Permutation;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    #[test]
    fn integral_checks() {
        let d8 = dihedral(8).unwrap();
        assert!(check_integral(&d8, &grp(4, &["(1 3)(2 4)"])));
        let a5 = alternating(5).unwrap();
        assert!(check_integral(&a5, &a5));
        assert!(!check_integral(&PermGroup::symmetric(4), &grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"])));
    }

    #[test]
    fn d8_order_two_subgroups() {
        let d8 = dihedral(8).unwrap();
        for opts in [Options::default(), Options::no_reductions()] {
            let z = grp(4, &["(1 3)(2 4)"]);
            assert_eq!(integrable_within(&z, &d8, &opts).unwrap().status, Status::Integrable);
            let s = grp(4, &["(2 4)"]);
            let v = integrable_within(&s, &d8, &opts).unwrap();
            assert_eq!(v.status, Status::NotIntegrable);
        }
    }

    #[test]
    fn a4_in_s4() {
        let s4 = PermGroup::symmetric(4);
        let a4 = alternating(4).unwrap();
        let v = integrable_within(&a4, &s4, &Options::no_reductions()).unwrap();
        assert_eq!(v.status, Status::Integrable);
        assert!(v.witnesses_complete);
        assert_eq!(v.witnesses.len(), 1);
        assert!(v.witnesses[0].equals(&s4));
        let v = integrable_within(&a4, &s4, &Options::default()).unwrap();
        assert_eq!(v.status, Status::Integrable);
        assert!(v.witnesses.iter().all(|w| check_integral(w, &a4)));
    }

    #[test]
    fn not_a_subgroup() {
        let a4 = alternating(4).unwrap();
        let t = grp(4, &["(1 2)"]);
        assert!(matches!(integrable_within(&t, &a4, &Options::default()), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn metacyclic_recognition() {
        let u = metacyclic(7, 6, 3).unwrap();
        let t = CayleyTable::new(&u, 100).unwrap();
        assert!(metacyclic_structure(&t).is_some());
        let s4 = PermGroup::symmetric(4);
        let t = CayleyTable::new(&s4, 100).unwrap();
        assert!(metacyclic_structure(&t).is_none());
    }

    #[test]
    fn abelian_ambient_only_trivial() {
        let u = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        let c = classify_integrable_subgroups(&u, Scope::AllSubgroups, &Budgets::default()).unwrap();
        assert_eq!(c.integrable_count(), 1);
        assert!(c.entries.iter().find(|e| e.integrable).unwrap().group.is_trivial());
    }

    #[test]
    fn d8_classification() {
        let d8 = dihedral(8).unwrap();
        let c = classify_integrable_subgroups(&d8, Scope::AllSubgroups, &Budgets::default()).unwrap();
        let order_two: Vec<_> = c.entries.iter().filter(|e| e.group.order() == 2).collect();
        assert_eq!(order_two.len(), 5);
        assert_eq!(order_two.iter().filter(|e| e.integrable).count(), 1);
    }

    #[test]
    fn theorem_a_small() {
        let entry = AutCatalogEntry { name: "A5".into(), socle: alternating(5).unwrap(), aut: PermGroup::symmetric(5) };
        let r = almost_simple_check(&entry, &Options::default()).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert_eq!(r.violations(), 0);
        assert_eq!(r.integrable_orders(), vec![60]);
    }
}
