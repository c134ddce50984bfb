//! Subgroup lattices of small groups and subgroups between a normal
//! subgroup and an overgroup.
//!
//! Solvable groups use cyclic extension: every subgroup `H ≠ 1` of a
//! solvable group has a normal subgroup `K` of prime index, and then
//! `H = ⟨K, g⟩` for any `g ∈ H \ K`. Nonsolvable groups are closed under
//! joins with cyclic subgroups of prime-power order instead, since every
//! element is a product of commuting powers of prime-power order.

use std::collections::HashSet;

use crate::budget::Budgets;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::QuotientRep;
use crate::structure::is_prime;
use crate::table::{Bits, CayleyTable, Sub};

/// Every subgroup of a tabled group, sorted by order and then by element set.
pub fn lattice(t: &CayleyTable) -> Vec<Sub> {
    let whole = t.whole();
    let mut subs = if t.is_solvable(&whole) { cyclic_extension(t) } else { join_closure(t) };
    let mut keyed: Vec<(usize, Vec<u32>, Sub)> = subs
        .drain(..)
        .map(|s| (s.order(), s.bits.iter().collect(), s))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, s)| t.reduce_generators(&s)).collect()
}

fn cyclic_extension(t: &CayleyTable) -> Vec<Sub> {
    let n = t.len() as u32;
    let mut subs = vec![t.trivial()];
    let mut seen: HashSet<Bits> = HashSet::new();
    seen.insert(subs[0].bits.clone());
    let mut k = 0;
    while k < subs.len() {
        let base = subs[k].clone();
        let mut done = base.bits.clone();
        for g in 0..n {
            if done.contains(g) {
                continue;
            }
            let mut x = g;
            let mut e = 1;
            while !base.bits.contains(x) {
                x = t.mul(x, g);
                e += 1;
            }
            if !is_prime(e) || !t.normalizes(g, &base) {
                continue;
            }
            let h = t.join_element(&base, g);
            done.union_with(&h.bits);
            if seen.insert(h.bits.clone()) {
                subs.push(h);
            }
        }
        k += 1;
    }
    subs
}

fn join_closure(t: &CayleyTable) -> Vec<Sub> {
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut subs = vec![t.trivial()];
    seen.insert(subs[0].bits.clone());
    let mut cyclic: Vec<Sub> = Vec::new();
    for g in 1..t.len() as u32 {
        let c = t.generate(&[g]);
        if seen.insert(c.bits.clone()) {
            if is_prime_power(c.order()) {
                cyclic.push(c.clone());
            }
            subs.push(c);
        }
    }
    let mut k = 1;
    while k < subs.len() {
        let s = subs[k].clone();
        for c in &cyclic {
            if c.bits.is_subset(&s.bits) {
                continue;
            }
            let j = t.join_element(&s, c.gens[0]);
            if seen.insert(j.bits.clone()) {
                subs.push(j);
            }
        }
        k += 1;
    }
    subs
}

fn is_prime_power(n: usize) -> bool {
    (2..=n).find(|p| n % p == 0).is_some_and(|p| {
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        m == 1
    })
}

/// All subgroups of `g`, refused when `|g| > bound`.
pub fn all_subgroups(g: &PermGroup, bound: usize) -> Result<Vec<PermGroup>> {
    let t = CayleyTable::new(g, bound)?;
    Ok(lattice(&t).iter().map(|s| t.to_group(s)).collect())
}

/// Every `H` with `G ≤ H ≤ N`, for `G ⊴ N`, as lifts of the subgroups of `N/G`.
pub fn intermediate_subgroups(n_amb: &PermGroup, g: &PermGroup, budgets: &Budgets) -> Result<Vec<PermGroup>> {
    let q = QuotientRep::new(n_amb, g, budgets.index)?;
    let qt = CayleyTable::new(q.quotient_group(), budgets.subgroups)?;
    lattice(&qt).iter().map(|s| q.lift(&qt.to_group(s))).collect()
}

/// All elements, refused above `budget`.
pub fn elements(g: &PermGroup, budget: usize) -> Result<Vec<Permutation>> {
    let mut v = g.elements(budget)?;
    v.sort_unstable();
    Ok(v)
}
