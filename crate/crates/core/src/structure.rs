//! Derived series, normal closures, centers and socles.

use std::collections::HashMap;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::group::{PermGroup, UnionFind};
use crate::perm::Permutation;

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> Result<PermGroup> {
    for s in seeds {
        if !g.contains(s) {
            return Err(Error::NotMember);
        }
    }
    Ok(normal_closure_unchecked(g, seeds))
}

fn normal_closure_unchecked(g: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let n = g.degree();
    let mut chain = StabChain::trivial(n);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut queue: Vec<Permutation> = Vec::new();
    for s in seeds {
        if chain.extend(s) {
            gens.push(s.clone());
            queue.push(s.clone());
        }
    }
    while let Some(k) = queue.pop() {
        for x in g.generators() {
            let c = k.conjugate_by(x);
            if chain.extend(&c) {
                gens.push(c.clone());
                queue.push(c);
            }
        }
    }
    PermGroup::from_chain(n, gens, chain)
}

/// `G' = ⟨[x, y] : x, y ∈ G⟩`, computed as the normal closure of the
/// commutators of generator pairs.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = gens[i].inverse().mul(&gens[i].conjugate_by(&gens[j]));
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure_unchecked(g, &comms)
}

/// Terms `G, G', G'', ...` ending at the first repeated term.
#[derive(Clone, Debug)]
pub struct DerivedSeries {
    pub terms: Vec<PermGroup>,
}

impl DerivedSeries {
    pub fn perfect_core(&self) -> &PermGroup {
        self.terms.last().expect("series is never empty")
    }

    /// Number of strict descents; equals the derived length when solvable.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_solvable(&self) -> bool {
        self.perfect_core().is_trivial()
    }

    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(PermGroup::order).collect()
    }
}

pub fn derived_series(g: &PermGroup) -> DerivedSeries {
    let mut terms = vec![g.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let d = derived_subgroup(last);
        if d.order_big() == last.order_big() {
            break;
        }
        terms.push(d);
    }
    DerivedSeries { terms }
}

pub fn perfect_core(g: &PermGroup) -> PermGroup {
    derived_series(g).perfect_core().clone()
}

pub fn is_perfect(g: &PermGroup) -> bool {
    derived_subgroup(g).order_big() == g.order_big()
}

/// `a ⊴ b`. Requires `a ≤ b`.
pub fn is_normal(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if !a.is_subgroup_of(b) {
        return Err(Error::NotSubgroup("first argument is not contained in the second".into()));
    }
    Ok(normalizes(b.generators(), a))
}

/// Every element of `by` conjugates `sub` into itself.
pub(crate) fn normalizes(by: &[Permutation], sub: &PermGroup) -> bool {
    by.iter().all(|x| sub.generators().iter().all(|s| sub.contains(&s.conjugate_by(x))))
}

/// Elements of `g` commuting with every generator.
pub fn center(g: &PermGroup, budget: usize) -> Result<PermGroup> {
    let elems = g.elements(budget)?;
    let gens = g.generators();
    let central: Vec<Permutation> = elems
        .into_iter()
        .filter(|z| !z.is_identity() && gens.iter().all(|x| z.mul(x) == x.mul(z)))
        .collect();
    Ok(generated_by_filtered(g.degree(), &central))
}

/// Subgroup generated by a list of members, keeping only the generators
/// that enlarge the group.
pub(crate) fn generated_by_filtered(degree: usize, elems: &[Permutation]) -> PermGroup {
    let mut chain = StabChain::trivial(degree);
    let mut gens = Vec::new();
    for e in elems {
        if chain.extend(e) {
            gens.push(e.clone());
        }
    }
    PermGroup::from_chain(degree, gens, chain)
}

/// Representatives of the conjugacy classes of elements of prime order.
pub fn prime_order_class_reps(g: &PermGroup, budget: usize) -> Result<Vec<Permutation>> {
    let elems: Vec<Permutation> = g
        .elements(budget)?
        .into_iter()
        .filter(|x| is_prime(x.order()))
        .collect();
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut uf = UnionFind::new(elems.len());
    for (i, x) in elems.iter().enumerate() {
        for y in g.generators() {
            uf.union(i, index[&x.conjugate_by(y)]);
        }
    }
    let mut reps: Vec<Permutation> = uf
        .classes()
        .into_iter()
        .map(|c| c.iter().map(|&i| elems[i].clone()).min().unwrap())
        .collect();
    reps.sort();
    Ok(reps)
}

/// Inclusion-minimal normal subgroups, sorted by (order, generator images).
///
/// Every minimal normal subgroup is the normal closure of any of its
/// elements of prime order, so the minimal members among the normal
/// closures of prime-order class representatives are exactly the minimal
/// normal subgroups.
pub fn minimal_normal_subgroups(g: &PermGroup, budget: usize) -> Result<Vec<PermGroup>> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    let reps = prime_order_class_reps(g, budget)?;
    let mut closures: Vec<PermGroup> = Vec::new();
    for r in &reps {
        let c = normal_closure_unchecked(g, std::slice::from_ref(r));
        if !closures.iter().any(|d| d.equals(&c)) {
            closures.push(c);
        }
    }
    let minimal: Vec<PermGroup> = closures
        .iter()
        .filter(|c| {
            !closures
                .iter()
                .any(|d| d.order_big() < c.order_big() && d.is_subgroup_of(c))
        })
        .cloned()
        .collect();
    Ok(sorted_groups(minimal))
}

pub fn socle(g: &PermGroup, budget: usize) -> Result<PermGroup> {
    let mins = minimal_normal_subgroups(g, budget)?;
    let gens: Vec<Permutation> = mins.iter().flat_map(|m| m.generators().to_vec()).collect();
    Ok(generated_by_filtered(g.degree(), &gens))
}

/// The unique minimal normal subgroup, if there is exactly one.
pub fn unique_minimal_normal(g: &PermGroup, budget: usize) -> Result<Option<PermGroup>> {
    let mut mins = minimal_normal_subgroups(g, budget)?;
    Ok(if mins.len() == 1 { mins.pop() } else { None })
}

pub fn sorted_groups(mut v: Vec<PermGroup>) -> Vec<PermGroup> {
    v.sort_by_cached_key(PermGroup::sort_key);
    v
}

/// Exponent of the group, via element enumeration.
pub fn exponent(g: &PermGroup, budget: usize) -> Result<u64> {
    Ok(g.elements(budget)?.iter().fold(1, |acc, x| crate::perm::lcm(acc, x.order())))
}

/// `G` is cyclic of prime-power order.
pub fn is_cyclic_p_group(g: &PermGroup, budget: usize) -> Result<bool> {
    let order = g.order();
    if order == 1 {
        return Ok(false);
    }
    if !is_prime_power(order) {
        return Ok(false);
    }
    if !g.is_abelian() {
        return Ok(false);
    }
    Ok(g.elements(budget)?.iter().any(|x| x.order() as u128 == order))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn is_prime_power(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2u128;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Heuristic isomorphism fingerprint used to group report lines.
///
/// Collisions are acceptable: verdicts never depend on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u128,
    pub abelian: bool,
    pub exponent: u64,
    pub derived_length: usize,
    pub center_order: u128,
}

pub fn fingerprint(g: &PermGroup, budget: usize) -> Result<Fingerprint> {
    let series = derived_series(g);
    Ok(Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        exponent: exponent(g, budget)?,
        derived_length: series.length(),
        center_order: center(g, budget)?.order(),
    })
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "order={};abelian={};exponent={};dl={};center={}",
            self.order, self.abelian, self.exponent, self.derived_length, self.center_order
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect()).unwrap()
    }

    /// Closure of the set of all commutators of all element pairs.
    fn brute_derived_order(g: &PermGroup) -> usize {
        let elems = g.elements(100_000).unwrap();
        let mut set: HashSet<Permutation> = HashSet::new();
        for x in &elems {
            for y in &elems {
                set.insert(x.commutator(y).unwrap());
            }
        }
        let mut stack: Vec<Permutation> = set.iter().cloned().collect();
        let gens: Vec<Permutation> = stack.clone();
        while let Some(a) = stack.pop() {
            for b in &gens {
                let c = a.mul(b);
                if set.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        set.len()
    }

    fn d8() -> PermGroup {
        grp(4, &["(1 2 3 4)", "(1 3)"])
    }

    #[test]
    fn derived_examples() {
        let d = derived_subgroup(&d8());
        assert_eq!(d.order(), 2);
        assert!(d.contains(&Permutation::parse_cycles("(1 3)(2 4)", 4).unwrap()));
        let s4 = PermGroup::symmetric(4);
        assert_eq!(derived_subgroup(&s4).order(), 12);
        assert_eq!(brute_derived_order(&s4), 12);
        assert!(derived_subgroup(&grp(5, &["(1 2 3)", "(4 5)"])).is_trivial());
    }

    #[test]
    fn series_and_cores() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(derived_series(&s4).orders(), vec![24, 12, 4, 1]);
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert_eq!(perfect_core(&a5).order(), 60);
        assert!(is_perfect(&a5));
        let agl17 = grp(7, &["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"]);
        assert_eq!(agl17.order(), 42);
        assert_eq!(derived_series(&agl17).orders(), vec![42, 7, 1]);
        assert!(perfect_core(&agl17).is_trivial());
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = PermGroup::symmetric(4);
        let t = Permutation::parse_cycles("(1 2)", 4).unwrap();
        assert_eq!(normal_closure(&s4, &[t]).unwrap().order(), 24);
        let v = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
        assert_eq!(normal_closure(&s4, &[v]).unwrap().order(), 4);
        assert!(normal_closure(&s4, &[Permutation::identity(4)]).unwrap().is_trivial());
        let a4 = grp(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(matches!(
            normal_closure(&a4, &[Permutation::parse_cycles("(1 2)", 4).unwrap()]),
            Err(Error::NotMember)
        ));
    }

    #[test]
    fn center_and_normality() {
        let z = center(&d8(), 1000).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&Permutation::parse_cycles("(1 3)(2 4)", 4).unwrap()));
        for n in 3..7 {
            assert!(center(&PermGroup::symmetric(n), 1000).unwrap().is_trivial());
        }
        let v4 = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(is_normal(&v4, &PermGroup::symmetric(4)).unwrap());
        assert!(!is_normal(&grp(4, &["(1 2)"]), &PermGroup::symmetric(4)).unwrap());
        assert!(center(&PermGroup::symmetric(9), 1000).is_err());
    }

    #[test]
    fn socles() {
        let s4 = PermGroup::symmetric(4);
        let mins = minimal_normal_subgroups(&s4, 1000).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        assert_eq!(socle(&s4, 1000).unwrap().order(), 4);
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert_eq!(socle(&a5, 1000).unwrap().order(), 60);
        let agl17 = grp(7, &["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"]);
        let s = socle(&agl17, 1000).unwrap();
        assert_eq!(s.order(), 7);
        assert!(s.contains(&Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap()));
        // C2 x C2 has three minimal normal subgroups.
        assert_eq!(minimal_normal_subgroups(&grp(4, &["(1 2)", "(3 4)"]), 100).unwrap().len(), 3);
    }

    #[test]
    fn cyclic_p_group_guard() {
        assert!(is_cyclic_p_group(&grp(4, &["(1 2 3 4)"]), 100).unwrap());
        assert!(!is_cyclic_p_group(&grp(4, &["(1 2)", "(3 4)"]), 100).unwrap());
        assert!(!is_cyclic_p_group(&grp(5, &["(1 2)", "(3 4 5)"]), 100).unwrap());
        assert!(!is_cyclic_p_group(&PermGroup::trivial(3), 100).unwrap());
    }
}
