//! Cayley tables for small groups, with subgroups stored as bitsets over
//! element indices.
//!
//! Elements are indexed in lexicographic order of their image sequences, so
//! index 0 is always the identity and every derived ordering is reproducible.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.words[i as usize / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.words[i as usize / 64];
        let m = 1u64 << (i % 64);
        let fresh = *w & m == 0;
        *w |= m;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(wi as u32 * 64 + t)
            })
        })
    }
}

/// A subgroup of a tabled group: its element set and a generating set.
#[derive(Clone, Debug)]
pub struct Sub {
    pub bits: Bits,
    pub gens: Vec<u32>,
}

impl Sub {
    pub fn order(&self) -> usize {
        self.bits.count()
    }
}

pub struct CayleyTable {
    degree: usize,
    elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
}

impl CayleyTable {
    /// Full multiplication table of `g`, refused when `|g| > bound`.
    pub fn new(g: &PermGroup, bound: usize) -> Result<Self> {
        let mut elems = g.elements(bound).map_err(|e| match e {
            Error::Budget { needed, .. } => Error::budget("subgroup enumeration", needed, bound as u128),
            other => other,
        })?;
        elems.sort_unstable();
        let n = elems.len();
        let index: HashMap<Permutation, u32> =
            elems.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
        let gens: Vec<u32> = g.generators().iter().map(|x| index[x]).filter(|&i| i != 0).collect();

        // Right multiplication by each generator, then a spanning tree from the identity.
        let right: Vec<Vec<u32>> = g
            .generators()
            .iter()
            .filter(|x| !x.is_identity())
            .map(|x| elems.iter().map(|e| index[&e.mul(x)]).collect())
            .collect();
        let mut parent = vec![(u32::MAX, 0usize); n];
        let mut bfs = vec![0u32];
        parent[0] = (0, 0);
        let mut k = 0;
        while k < bfs.len() {
            let a = bfs[k];
            for (gi, r) in right.iter().enumerate() {
                let b = r[a as usize];
                if parent[b as usize].0 == u32::MAX {
                    parent[b as usize] = (a, gi);
                    bfs.push(b);
                }
            }
            k += 1;
        }
        debug_assert_eq!(bfs.len(), n);

        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut mul[a * n..(a + 1) * n];
            row[0] = a as u32;
            for &b in &bfs[1..] {
                let (p, gi) = parent[b as usize];
                row[b as usize] = right[gi][row[p as usize] as usize];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            let b = row.iter().position(|&c| c == 0).expect("group table has inverses");
            inv[a] = b as u32;
        }
        Ok(CayleyTable { degree: g.degree(), elems, index, mul, inv, gens })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    /// Indices of the generators of the tabled group.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elems.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `b^-1 a b`.
    #[inline]
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mul(self.inv(a), self.conj(a, b))
    }

    pub fn order_of(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: u32, e: usize) -> u32 {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn whole(&self) -> Sub {
        let mut bits = Bits::new(self.len());
        for i in 0..self.len() as u32 {
            bits.insert(i);
        }
        Sub { bits, gens: self.gens.clone() }
    }

    pub fn trivial(&self) -> Sub {
        let mut bits = Bits::new(self.len());
        bits.insert(0);
        Sub { bits, gens: Vec::new() }
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> Sub {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut bits = Bits::new(self.len());
        bits.insert(0);
        let mut queue = vec![0u32];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    queue.push(y);
                }
            }
            k += 1;
        }
        Sub { bits, gens }
    }

    /// `⟨sub, g⟩`.
    pub fn join_element(&self, sub: &Sub, g: u32) -> Sub {
        let mut gens = sub.gens.clone();
        if g == 0 || sub.bits.contains(g) {
            return sub.clone();
        }
        gens.push(g);
        let members: Vec<u32> = sub.bits.iter().collect();
        let mut bits = sub.bits.clone();
        let mut reps = vec![0u32];
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k];
            for &x in &gens {
                let y = self.mul(r, x);
                if !bits.contains(y) {
                    for &h in &members {
                        bits.insert(self.mul(h, y));
                    }
                    reps.push(y);
                }
            }
            k += 1;
        }
        Sub { bits, gens }
    }

    /// `g` normalizes `sub`.
    pub fn normalizes(&self, g: u32, sub: &Sub) -> bool {
        sub.gens.iter().all(|&k| sub.bits.contains(self.conj(k, g)))
    }

    /// `a ⊴ b`, assuming `a ≤ b`.
    pub fn is_normal_in(&self, a: &Sub, b: &Sub) -> bool {
        b.gens.iter().all(|&g| self.normalizes(g, a))
    }

    /// Smallest subgroup normal in `within` and containing `seeds`.
    pub fn normal_closure(&self, within: &Sub, seeds: &[u32]) -> Sub {
        let mut cur = self.generate(seeds);
        loop {
            let mut extra = None;
            'scan: for &d in &cur.gens {
                for &h in &within.gens {
                    let c = self.conj(d, h);
                    if !cur.bits.contains(c) {
                        extra = Some(c);
                        break 'scan;
                    }
                }
            }
            match extra {
                Some(c) => cur = self.join_element(&cur, c),
                None => return cur,
            }
        }
    }

    pub fn derived(&self, sub: &Sub) -> Sub {
        let g = &sub.gens;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = self.comm(g[i], g[j]);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(sub, &comms)
    }

    pub fn is_abelian(&self, sub: &Sub) -> bool {
        let g = &sub.gens;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| self.mul(g[i], g[j]) == self.mul(g[j], g[i])))
    }

    pub fn is_solvable(&self, sub: &Sub) -> bool {
        let mut cur = sub.clone();
        loop {
            if cur.order() == 1 {
                return true;
            }
            let d = self.derived(&cur);
            if d.order() == cur.order() {
                return false;
            }
            cur = d;
        }
    }

    /// A short generating set of `bits`, chosen greedily in index order.
    pub fn reduce_generators(&self, sub: &Sub) -> Sub {
        let mut cur = self.trivial();
        for i in sub.bits.iter() {
            if !cur.bits.contains(i) {
                cur = self.join_element(&cur, i);
            }
        }
        cur
    }

    /// The subgroup as a permutation group on the original points.
    pub fn to_group(&self, sub: &Sub) -> PermGroup {
        let gens = sub.gens.iter().map(|&i| self.elems[i as usize].clone()).collect();
        PermGroup::new(self.degree, gens).expect("tabled elements share the degree")
    }

    /// Tabled subgroup equal to `h`, which must be contained in the tabled group.
    pub fn subgroup_of(&self, h: &PermGroup) -> Result<Sub> {
        let mut gens = Vec::new();
        for g in h.generators() {
            gens.push(self.index_of(g).ok_or(Error::NotMember)?);
        }
        Ok(self.generate(&gens))
    }
}
