//! One line per acceptance criterion. Each criterion reruns the engine suites
//! that carry it, times them against a pinned limit, and checks the claim
//! again with a brute-force oracle built on raw image arrays or matrices.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use derivant_core::constructors::*;
use derivant_core::datafile::load_shipped;
use derivant_core::verify::{self, Check, SuiteReport};
use derivant_core::{Budgets, PermGroup, Permutation};

/// Finite group given by a multiplication table over explicit elements.
struct Brute {
    n: usize,
    elems: Vec<Vec<u16>>,
    table: Vec<u32>,
    inv: Vec<u32>,
}

type Set = Vec<u32>;

impl Brute {
    fn new(gens: Vec<Vec<u16>>, identity: Vec<u16>, op: impl Fn(&[u16], &[u16]) -> Vec<u16>) -> Self {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut k = 0;
        while k < elems.len() {
            for g in &gens {
                let y = op(&elems[k], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
            k += 1;
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&op(&elems[a], &elems[b])];
            }
        }
        let inv = (0..n).map(|a| (0..n as u32).find(|&b| table[a * n + b as usize] == 0).unwrap()).collect();
        Brute { n, elems, table, inv }
    }

    fn perms(g: &PermGroup) -> Self {
        let gens = g.generators().iter().map(|p| p.images().to_vec()).collect();
        let id = (0..g.degree() as u16).collect();
        Brute::new(gens, id, |a, b| a.iter().map(|&x| b[x as usize]).collect())
    }

    fn matrices(p: u16, d: usize, gens: Vec<Vec<u16>>) -> Self {
        let id = (0..d * d).map(|i| u16::from(i % (d + 1) == 0)).collect();
        Brute::new(gens, id, move |a, b| mat_mul(p, d, a, b))
    }

    /// A subset of a permutation group as a `PermGroup`.
    fn group(&self, s: &Set) -> PermGroup {
        let degree = self.elems[0].len();
        let gens = s.iter().map(|&i| Permutation::from_images(self.elems[i as usize].iter().map(|&x| x as usize).collect()).unwrap()).collect();
        PermGroup::new(degree, gens).unwrap()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    fn close(&self, gens: &[u32]) -> Set {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut k = 0;
        while k < out.len() {
            for &g in gens {
                let y = self.mul(out[k], g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    fn whole(&self) -> Set {
        (0..self.n as u32).collect()
    }

    fn derived(&self, s: &Set) -> Set {
        let mut comms = BTreeSet::new();
        for &a in s {
            for &b in s {
                let c = self.mul(self.mul(self.inv[a as usize], self.inv[b as usize]), self.mul(a, b));
                comms.insert(c);
            }
        }
        self.close(&comms.into_iter().collect::<Vec<_>>())
    }

    /// Every subgroup, grown one element at a time from the trivial group.
    fn subgroups(&self) -> Vec<Set> {
        let mut all: HashSet<Set> = HashSet::new();
        let start = vec![0u32];
        all.insert(start.clone());
        let mut queue = vec![start];
        while let Some(s) = queue.pop() {
            let member: HashSet<u32> = s.iter().copied().collect();
            for g in 0..self.n as u32 {
                if member.contains(&g) {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(g);
                let t = self.close(&gens);
                if all.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut v: Vec<Set> = all.into_iter().collect();
        v.sort();
        v
    }

    fn is_abelian(&self, s: &Set) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn exponent(&self, s: &Set) -> usize {
        s.iter()
            .map(|&a| {
                let (mut x, mut k) = (a, 1);
                while x != 0 {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            })
            .fold(1, lcm)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn is_subset(a: &Set, b: &Set) -> bool {
    let bs: HashSet<u32> = b.iter().copied().collect();
    a.iter().all(|x| bs.contains(x))
}

fn mat_mul(p: u16, d: usize, a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut c = vec![0u16; d * d];
    for i in 0..d {
        for j in 0..d {
            c[i * d + j] = (0..d).map(|k| a[i * d + k] * b[k * d + j]).sum::<u16>() % p;
        }
    }
    c
}

fn det(p: i64, d: usize, a: &[u16]) -> i64 {
    let mut m: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    let mut det = 1i64;
    for c in 0..d {
        let Some(r) = (c..d).find(|&r| m[r * d + c] % p != 0) else { return 0 };
        if r != c {
            for k in 0..d {
                m.swap(r * d + k, c * d + k);
            }
            det = -det;
        }
        let piv = m[c * d + c];
        det = det * piv % p;
        let inv = (1..p).find(|x| piv * x % p == 1).unwrap();
        for r in c + 1..d {
            let f = m[r * d + c] * inv % p;
            for k in 0..d {
                m[r * d + k] = (m[r * d + k] - f * m[c * d + k]).rem_euclid(p);
            }
        }
    }
    det.rem_euclid(p)
}

fn shipped(name: &str) -> (u16, usize, Vec<Vec<u16>>) {
    let f = load_shipped(name).unwrap();
    assert_eq!(f.field.q(), f.field.p() as usize, "{name} must be over a prime field");
    let mats = f.matrices.iter().map(|m| m.entries.iter().map(|&x| x as u16).collect()).collect();
    (f.field.p() as u16, f.d, mats)
}

/// Orbit count of a brute-force group on unordered and on ordered pairs.
fn pair_orbits(g: &PermGroup) -> (usize, usize) {
    let n = g.degree();
    let gens: Vec<&[u16]> = g.generators().iter().map(|p| p.images()).collect();
    let count = |ordered: bool| {
        let mut seen = HashSet::new();
        let mut orbits = 0;
        for a in 0..n {
            for b in 0..n {
                if a == b || (!ordered && a > b) {
                    continue;
                }
                let key = |x: usize, y: usize| if ordered || x < y { (x, y) } else { (y, x) };
                if !seen.insert(key(a, b)) {
                    continue;
                }
                orbits += 1;
                let mut stack = vec![key(a, b)];
                while let Some((x, y)) = stack.pop() {
                    for s in &gens {
                        let k = key(s[x] as usize, s[y] as usize);
                        if seen.insert(k) {
                            stack.push(k);
                        }
                    }
                }
            }
        }
        orbits
    };
    (count(false), count(true))
}

struct Outcome {
    oracle_ok: bool,
    detail: String,
}

struct Criterion {
    id: u8,
    suites: &'static [&'static str],
    limit: Duration,
    oracle: fn(&[Check]) -> Outcome,
}

/// Criteria whose statement cannot hold for the group in question. They are
/// still printed as FAIL, and the run only tolerates them when the engine and
/// the oracle agree with each other.
const UNATTAINABLE: &[(u8, &str)] = &[(
    2,
    "exhaustive enumeration gives 8 non-integrable C2 x C2, in 2 conjugacy classes, each inside one (C2)^3; the C2 x C2 of C4 x C2 is Z(U') and lies in all 7 maximal subgroups",
)];

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() {
    let budgets = Budgets::default();
    let criteria = [
        Criterion { id: 1, suites: &["d8"], limit: Duration::from_millis(100), oracle: oracle_d8 },
        Criterion { id: 2, suites: &["wreath"], limit: secs(30), oracle: oracle_wreath },
        Criterion { id: 3, suites: &["metacyclic"], limit: secs(300), oracle: oracle_metacyclic },
        Criterion { id: 4, suites: &["out-groups"], limit: secs(60), oracle: oracle_out_groups },
        Criterion { id: 5, suites: &["remark45", "theorem-b"], limit: secs(120), oracle: oracle_remark45 },
        Criterion { id: 6, suites: &["case1", "theorem-b"], limit: secs(120), oracle: oracle_case1 },
        Criterion { id: 7, suites: &["theorem-a"], limit: secs(60), oracle: oracle_theorem_a },
        Criterion { id: 8, suites: &["psl37", "theorem-b"], limit: secs(120), oracle: oracle_psl37 },
        Criterion { id: 9, suites: &["case11", "theorem-b"], limit: secs(300), oracle: oracle_case11 },
        Criterion { id: 10, suites: &["properties"], limit: secs(600), oracle: |_| Outcome { oracle_ok: true, detail: String::new() } },
    ];

    let mut reports: HashMap<&str, (SuiteReport, Duration)> = HashMap::new();
    for s in verify::SUITES {
        let t = Instant::now();
        let rep = verify::run_suite(s, &budgets).expect("suite runs");
        reports.insert(s, (rep, t.elapsed()));
    }
    let first: String = verify::SUITES.iter().map(|s| reports[s].0.render(false)).collect();
    let t = Instant::now();
    let second: String = verify::run("all", &budgets).expect("verify all").iter().map(|r| r.render(false)).collect();
    let second_time = t.elapsed();

    let mut failed = Vec::new();
    let mut tolerated = Vec::new();
    for c in &criteria {
        let mut checks: Vec<Check> = Vec::new();
        let mut engine_time = Duration::ZERO;
        for s in c.suites {
            let (rep, t) = &reports[s];
            engine_time += *t;
            checks.extend(rep.checks.iter().filter(|k| k.criterion == c.id).cloned());
        }
        let t = Instant::now();
        let mut out = (c.oracle)(&checks);
        let oracle_time = t.elapsed();
        if c.id == 10 {
            let same = first == second;
            out.oracle_ok = same;
            out.detail = format!("determinism: two verify-all runs byte-identical={same} ({} bytes, second run {:.2}s)", first.len(), second_time.as_secs_f64());
        }
        let engine_failures: Vec<&Check> = checks.iter().filter(|k| !k.pass).collect();
        let in_time = engine_time <= c.limit;
        let pass = !checks.is_empty() && engine_failures.is_empty() && out.oracle_ok && in_time;
        println!(
            "criterion {:>2}: {} engine {:.3}s (limit {}s) oracle {:.3}s checks {}/{} {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            engine_time.as_secs_f64(),
            c.limit.as_secs_f64(),
            oracle_time.as_secs_f64(),
            checks.len() - engine_failures.len(),
            checks.len(),
            out.detail
        );
        for k in &engine_failures {
            println!("    failing check: {} expected {} computed {}", k.name, k.expected, k.computed);
        }
        if !pass {
            match UNATTAINABLE.iter().find(|(id, _)| *id == c.id) {
                Some((_, why)) if out.oracle_ok && in_time => {
                    println!("    unattainable as stated: {why}");
                    tolerated.push(c.id);
                }
                _ => failed.push(c.id),
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass; unattainable {:?}; unexpected failures {:?}",
        criteria.len() - failed.len() - tolerated.len(),
        criteria.len(),
        tolerated,
        failed
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}

fn computed(checks: &[Check], prefix: &str) -> String {
    checks.iter().find(|c| c.name.starts_with(prefix)).map(|c| c.computed.clone()).unwrap_or_default()
}

/// Subgroups of `t` whose derived subgroup is some subgroup of `t`.
fn integrals(t: &Brute, subs: &[Set]) -> HashSet<Set> {
    subs.iter().map(|s| t.derived(s)).collect()
}

fn oracle_d8(_: &[Check]) -> Outcome {
    let t = Brute::perms(&dihedral(8).unwrap());
    let subs = t.subgroups();
    let ints = integrals(&t, &subs);
    let order2: Vec<&Set> = subs.iter().filter(|s| s.len() == 2).collect();
    let good: Vec<&&Set> = order2.iter().filter(|s| ints.contains(**s)).collect();
    let ok = order2.len() == 5 && good.len() == 1 && *good[0] == &t.derived(&t.whole());
    Outcome { oracle_ok: ok, detail: format!("oracle: {} order-2 subgroups, {} integrable, equal to D8'", order2.len(), good.len()) }
}

fn oracle_wreath(checks: &[Check]) -> Outcome {
    let t = Brute::perms(&wreath_imprimitive(&dihedral(8).unwrap(), 2).unwrap());
    let subs = t.subgroups();
    let ints = integrals(&t, &subs);
    let ud = t.derived(&t.whole());
    let inside: Vec<&Set> = subs.iter().filter(|s| is_subset(s, &ud)).collect();
    let bad: Vec<&Set> = inside.iter().copied().filter(|s| !ints.contains(*s)).collect();
    let d8 = bad.iter().filter(|s| s.len() == 8 && !t.is_abelian(s) && t.exponent(s) == 4).count();
    let v4: Vec<&&Set> = bad.iter().filter(|s| s.len() == 4 && t.exponent(s) == 2).collect();
    let other = bad.len() - d8 - v4.len();
    let unique_above = v4.iter().all(|v| inside.iter().filter(|m| m.len() == 8 && is_subset(v, m)).count() == 1);
    let engine_v4 = computed(checks, "non-integrable subgroups of U' with C2 x C2");
    let engine_d8 = computed(checks, "non-integrable subgroups of U' with D8");
    let agree = engine_v4 == v4.len().to_string() && engine_d8 == d8.to_string() && other == 0 && unique_above;
    Outcome {
        oracle_ok: agree,
        detail: format!(
            "oracle: |U|={} subgroups {}, in U' {}, non-integrable D8 {d8} C2xC2 {} other {other}, each C2xC2 in one order-8 subgroup={unique_above}; engine D8 {engine_d8} C2xC2 {engine_v4}; stated C2xC2 count 3",
            t.n,
            subs.len(),
            inside.len(),
            v4.len()
        ),
    }
}

fn oracle_metacyclic(_: &[Check]) -> Outcome {
    let grid = verify::metacyclic_grid();
    let sample: Vec<_> = grid.iter().filter(|(m, n, _)| m * n <= 120).step_by(7).collect();
    let mut bad = 0;
    for &&(m, n, r) in &sample {
        let t = Brute::perms(&metacyclic(m, n, r).unwrap());
        let subs = t.subgroups();
        let ints = integrals(&t, &subs);
        let ad = t.derived(&t.whole());
        bad += subs.iter().filter(|s| ints.contains(*s) != is_subset(s, &ad)).count();
    }
    Outcome { oracle_ok: bad == 0, detail: format!("oracle: {} of {} grid groups brute-forced, {bad} violations", sample.len(), grid.len()) }
}

fn oracle_out_groups(_: &[Check]) -> Outcome {
    let mut bad = 0;
    let mut total = 0;
    for p in [2usize, 3, 5, 7] {
        for d in 1..=12 {
            for f in 1..=6 {
                let g = out_group(d, f, p).unwrap();
                let t = Brute::perms(&g);
                let (delta, _, _) = out_group_generators(d, f, p).unwrap();
                let step = if p == 2 { 1 } else { 2 };
                let dt = Brute::perms(&PermGroup::new(g.degree(), vec![delta.pow(step)]).unwrap());
                total += 1;
                if t.derived(&t.whole()).len() != dt.n {
                    bad += 1;
                }
            }
        }
    }
    let mut layer_bad = 0;
    let d8 = dihedral(8).unwrap();
    for u in [
        direct_product(&symmetric(4).unwrap(), &cyclic(2).unwrap()).unwrap(),
        direct_product(&symmetric(4).unwrap(), &cyclic(4).unwrap()).unwrap(),
        direct_product(&d8, &cyclic(3).unwrap()).unwrap(),
    ] {
        let t = Brute::perms(&u);
        let subs = t.subgroups();
        let ints = integrals(&t, &subs);
        let ud = t.derived(&t.whole());
        layer_bad += subs.iter().filter(|s| ints.contains(*s) != is_subset(s, &ud)).count();
    }
    Outcome {
        oracle_ok: bad == 0 && layer_bad == 0,
        detail: format!("oracle: |G'| vs |<delta^k>| mismatches {bad}/{total}, surrogate layer violations {layer_bad}"),
    }
}

fn oracle_remark45(checks: &[Check]) -> Outcome {
    let agl = Brute::perms(&agl(2, 3).unwrap());
    let subs = agl.subgroups();
    let ints = integrals(&agl, &subs);
    let two_trans: Vec<&Set> = subs.iter().filter(|s| pair_orbits(&agl.group(s)).1 == 1).collect();
    let mut integrable: Vec<usize> = two_trans.iter().filter(|s| ints.contains(**s)).map(|s| s.len()).collect();
    integrable.sort_unstable();
    let gl_mats: Vec<Vec<u16>> =
        (0..81u16).map(|x| vec![x / 27, (x / 9) % 3, (x / 3) % 3, x % 3]).filter(|m| det(3, 2, m) != 0).collect();
    let gl = Brute::matrices(3, 2, gl_mats);
    let transitive = gl
        .subgroups()
        .iter()
        .filter(|s| {
            let images: HashSet<[u16; 2]> = s
                .iter()
                .map(|&i| {
                    let a = &gl.elems[i as usize];
                    [a[0], a[1]]
                })
                .collect();
            images.len() == 8
        })
        .count();
    let engine_count = computed(checks, "2-transitive subgroups of AGL2(3)");
    let (p, d, n_gl) = shipped("q5_d2_n_gl");
    let (_, _, sl23) = shipped("q5_d2_sl2_3");
    let n = Brute::matrices(p, d, n_gl);
    let s = Brute::matrices(p, d, sl23);
    let nd = n.derived(&n.whole());
    let q5_ok = nd.len() == s.n && s.n == 24 && n.n == 96 && s.elems.iter().all(|m| n.elems.contains(m));
    let (p, d, e52) = shipped("q3_d4_e5_2");
    let (_, _, e5) = shipped("q3_d4_e5");
    let top = Brute::matrices(p, d, e52);
    let bottom = Brute::matrices(p, d, e5);
    let td = top.derived(&top.whole());
    let fixed_point_free = td.iter().any(|&i| {
        let mut m = top.elems[i as usize].clone();
        for k in 0..d {
            m[k * d + k] = (m[k * d + k] + p - 1) % p;
        }
        det(p as i64, d, &m) != 0
    });
    let q3_ok = td.len() == bottom.n && bottom.n == 160 && top.n == 320 && bottom.elems.iter().all(|m| top.elems.contains(m));
    Outcome {
        oracle_ok: engine_count == transitive.to_string()
            && two_trans.len() == transitive
            && integrable == vec![72, 216]
            && q5_ok
            && q3_ok
            && fixed_point_free,
        detail: format!(
            "oracle: 2-transitive subgroups of AGL2(3) {}, integrable orders {integrable:?}; GL2(3) subgroups transitive on nonzero vectors {transitive} (engine {engine_count}); N_GL2(5)(Q8)' = SL2(3) {q5_ok}; ((E:5).2)' = E:5 as matrices {q3_ok}, acting without fixed vectors {fixed_point_free}",
            two_trans.len()
        ),
    }
}

fn oracle_case1(_: &[Check]) -> Outcome {
    let mut bad = 0;
    let mut found = 0;
    for q in [7usize, 11] {
        let t = Brute::perms(&agl(1, q).unwrap());
        let subs = t.subgroups();
        let ints = integrals(&t, &subs);
        for s in &subs {
            let (homog, trans) = pair_orbits(&t.group(s));
            if homog == 1 && trans > 1 {
                found += 1;
                if ints.contains(s) {
                    bad += 1;
                }
            }
        }
    }
    let top = Brute::perms(&agammal1(27).unwrap());
    let g = asl1_squares(27).unwrap();
    let dd = top.derived(&top.whole());
    let ddd = top.derived(&dd);
    let (homog, trans) = pair_orbits(&g);
    let same = top.group(&dd).equals(&g);
    let ok27 = same && ddd.len() == 27 && homog == 1 && trans == 2;
    Outcome {
        oracle_ok: bad == 0 && found == 2 && ok27,
        detail: format!(
            "oracle: q=7,11 half-transitive groups {found}, integrable {bad}; AΓL1(27)' = 27:13 {same}, |AΓL1(27)''| = {}, 27:13 pair orbits unordered {homog} ordered {trans}",
            ddd.len()
        ),
    }
}

/// `S`, `Aut` and every `⟨S, x⟩`, as brute-force sets inside `Aut`.
fn layer(aut: &PermGroup, socle: &PermGroup) -> (Brute, Vec<Set>) {
    let t = Brute::perms(aut);
    let pos: HashMap<&[u16], u32> = t.elems.iter().enumerate().map(|(i, e)| (e.as_slice(), i as u32)).collect();
    let s_gens: Vec<u32> = socle.generators().iter().map(|p| pos[p.images()]).collect();
    let s = t.close(&s_gens);
    let mut out: BTreeSet<Set> = BTreeSet::new();
    out.insert(s.clone());
    out.insert(t.whole());
    for x in 0..t.n as u32 {
        let mut g = s_gens.clone();
        g.push(x);
        out.insert(t.close(&g));
    }
    (t, out.into_iter().collect())
}

/// Orders of the layer members that are derived subgroups of layer members.
fn integrable_layer(t: &Brute, layer: &[Set]) -> Vec<usize> {
    let ints: HashSet<Set> = layer.iter().map(|h| t.derived(h)).collect();
    let mut v: Vec<usize> = layer.iter().filter(|g| ints.contains(*g)).map(Vec::len).collect();
    v.sort();
    v
}

fn oracle_theorem_a(_: &[Check]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, s, a) in [
        ("A5", alternating(5).unwrap(), symmetric(5).unwrap()),
        ("A6", psl(2, 9).unwrap(), pgammal(2, 9).unwrap()),
        ("PSL2(7)", psl(2, 7).unwrap(), pgl(2, 7).unwrap()),
        ("PSL2(11)", psl(2, 11).unwrap(), pgl(2, 11).unwrap()),
    ] {
        let (t, l) = layer(&a, &s);
        let ints = integrable_layer(&t, &l);
        let ad = t.derived(&t.whole());
        let expected: Vec<usize> = l.iter().filter(|g| is_subset(g, &ad)).map(Vec::len).collect();
        ok &= ints == expected;
        parts.push(format!("{name} layer {} integrable {:?}", l.len(), ints));
    }
    Outcome { oracle_ok: ok, detail: format!("oracle: {}", parts.join("; ")) }
}

fn oracle_psl37(checks: &[Check]) -> Outcome {
    let q: u128 = 7;
    let psl_order = q.pow(3) * (q.pow(3) - 1) * (q.pow(2) - 1) / gcd(3, 6) as u128;
    let engine_aut = computed(checks, "|Aut(PSL3(7))'|");
    let points: Vec<[u16; 3]> = (0..343u16)
        .map(|x| [x / 49, (x / 7) % 7, x % 7])
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let index: HashMap<[u16; 3], usize> = points.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let act = |m: [u16; 9]| -> Vec<usize> {
        points
            .iter()
            .map(|v| {
                let mut w = [0u16; 3];
                for j in 0..3 {
                    w[j] = (0..3).map(|i| v[i] * m[i * 3 + j]).sum::<u16>() % 7;
                }
                let lead = *w.iter().find(|&&c| c != 0).unwrap();
                let inv = (1..7).find(|x| lead * x % 7 == 1).unwrap();
                index[&[w[0] * inv % 7, w[1] * inv % 7, w[2] * inv % 7]]
            })
            .collect()
    };
    let gens = [[3, 0, 0, 0, 1, 0, 0, 0, 1], [1, 1, 0, 0, 1, 0, 0, 0, 1], [0, 1, 0, 0, 0, 1, 1, 0, 0]];
    let perms: Vec<Permutation> = gens.iter().map(|m| Permutation::from_images(act(*m)).unwrap()).collect();
    let mine = PermGroup::new(57, perms).unwrap();
    let same = mine.equals(&pgl(3, 7).unwrap());
    let cubes: HashSet<i64> = (1..7).map(|x: i64| x.pow(3) % 7).collect();
    let non_cube_det = gens.iter().any(|m| !cubes.contains(&det(7, 3, &m.map(|x| x as u16))));
    let ok = psl_order == 1_876_896 && engine_aut == (3 * psl_order).to_string() && same && non_cube_det;
    Outcome {
        oracle_ok: ok,
        detail: format!(
            "oracle: |PSL3(7)| = {psl_order} by formula, 3|PSL3(7)| = {} (engine {engine_aut}); det mod cubes maps PGL3(7) onto C3={non_cube_det}, so PGL3(7) is not perfect",
            3 * psl_order
        ),
    }
}

fn oracle_case11(_: &[Check]) -> Outcome {
    let (t, l) = layer(&pgammal(2, 9).unwrap(), &psl(2, 9).unwrap());
    let ints = integrable_layer(&t, &l);
    let a6 = t.derived(&t.whole());
    let ok = l.len() == 5 && ints == vec![360] && a6.len() == 360;
    Outcome { oracle_ok: ok, detail: format!("oracle: layer {} groups, integrable orders {:?}, |PΓL2(9)'| = {}", l.len(), ints, a6.len()) }
}
