//! Base and strong generating set via deterministic Schreier–Sims.
//!
//! Conceptually every point `0..n` is a base point; only levels whose basic
//! orbit is nontrivial are stored. This makes the stored base increasing and
//! each base point the smallest point moved by its stabilizer, so base choice
//! is reproducible and lexicographically minimal coset representatives can be
//! found greedily.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;
/// Orbit transversals are kept as explicit permutations up to this many entries.
const EXPLICIT_LIMIT: usize = 1 << 24;

#[derive(Clone, Debug)]
enum Transversal {
    Explicit { reps: Vec<Permutation>, invs: Vec<Permutation> },
    /// `back[k]` is the generator index whose application reached `orbit[k]`.
    Schreier { back: Vec<u32> },
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    explicit_limit: usize,
    gens: Vec<Permutation>,
    gen_invs: Vec<Permutation>,
    orbit: Vec<u16>,
    slot: Vec<u32>,
    trans: Transversal,
}

impl Level {
    fn new(base: usize, degree: usize, gens: Vec<Permutation>, explicit_limit: usize) -> Self {
        let mut level = Level {
            explicit_limit,
            base,
            gen_invs: gens.iter().map(Permutation::inverse).collect(),
            gens,
            orbit: Vec::new(),
            slot: vec![NONE; degree],
            trans: Transversal::Schreier { back: Vec::new() },
        };
        level.rebuild_orbit();
        level
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gen_invs.push(g.inverse());
        self.gens.push(g);
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.slot.len();
        for &p in &self.orbit {
            self.slot[p as usize] = NONE;
        }
        self.orbit.clear();
        let mut back = Vec::new();
        self.orbit.push(self.base as u16);
        self.slot[self.base] = 0;
        back.push(NONE);
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k] as usize;
            for (gi, g) in self.gens.iter().enumerate() {
                let gamma = g.image(beta);
                if self.slot[gamma] == NONE {
                    self.slot[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma as u16);
                    back.push(gi as u32);
                }
            }
            k += 1;
        }
        if self.orbit.len().saturating_mul(degree) <= self.explicit_limit {
            let mut reps: Vec<Permutation> = Vec::with_capacity(self.orbit.len());
            reps.push(Permutation::identity(degree));
            for k in 1..self.orbit.len() {
                let gamma = self.orbit[k] as usize;
                let g = back[k] as usize;
                let prev = self.gen_invs[g].image(gamma);
                let r = reps[self.slot[prev] as usize].mul(&self.gens[g]);
                reps.push(r);
            }
            let invs = reps.iter().map(Permutation::inverse).collect();
            self.trans = Transversal::Explicit { reps, invs };
        } else {
            self.trans = Transversal::Schreier { back };
        }
    }

    /// Coset representative mapping the base point to `orbit[k]`.
    fn rep(&self, k: usize) -> Permutation {
        match &self.trans {
            Transversal::Explicit { reps, .. } => reps[k].clone(),
            Transversal::Schreier { back } => {
                let mut path = Vec::new();
                let mut gamma = self.orbit[k] as usize;
                while gamma != self.base {
                    let s = back[self.slot[gamma] as usize] as usize;
                    path.push(s);
                    gamma = self.gen_invs[s].image(gamma);
                }
                let mut r = Permutation::identity(self.slot.len());
                for &s in path.iter().rev() {
                    r = r.mul(&self.gens[s]);
                }
                r
            }
        }
    }

    /// Right-multiplies `h` by the inverse of the representative for `orbit[k]`.
    fn strip_rep(&self, h: Permutation, k: usize) -> Permutation {
        match &self.trans {
            Transversal::Explicit { invs, .. } => h.mul(&invs[k]),
            Transversal::Schreier { back } => {
                let mut h = h;
                let mut gamma = self.orbit[k] as usize;
                while gamma != self.base {
                    let s = back[self.slot[gamma] as usize] as usize;
                    h = h.mul(&self.gen_invs[s]);
                    gamma = self.gen_invs[s].image(gamma);
                }
                h
            }
        }
    }
}

/// A stabilizer chain for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    explicit_limit: usize,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain { degree, levels: Vec::new(), explicit_limit: EXPLICIT_LIMIT }
    }

    #[cfg(test)]
    fn with_explicit_limit(degree: usize, limit: usize) -> Self {
        StabChain { degree, levels: Vec::new(), explicit_limit: limit }
    }

    pub fn from_generators<'a>(degree: usize, gens: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut chain = Self::trivial(degree);
        for g in gens {
            chain.extend(g);
        }
        chain
    }

    /// Chain for the full symmetric group, built directly.
    pub fn symmetric(degree: usize) -> Self {
        let mut levels = Vec::new();
        if degree >= 2 {
            let adj: Vec<Permutation> = (0..degree - 1)
                .map(|k| {
                    let mut im: Vec<u16> = (0..degree as u16).collect();
                    im.swap(k, k + 1);
                    Permutation::from_u16_unchecked(im)
                })
                .collect();
            for base in 0..degree - 1 {
                levels.push(Level::new(base, degree, adj[base..].to_vec(), EXPLICIT_LIMIT));
            }
        }
        StabChain { degree, levels, explicit_limit: EXPLICIT_LIMIT }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Basic orbit at level `i`, in breadth-first discovery order.
    pub fn basic_orbit(&self, i: usize) -> Vec<usize> {
        self.levels[i].orbit.iter().map(|&p| p as usize).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Coset representatives of level `i`, aligned with [`Self::basic_orbit`].
    pub fn transversal(&self, i: usize) -> Vec<Permutation> {
        (0..self.levels[i].orbit.len()).map(|k| self.levels[i].rep(k)).collect()
    }

    /// Representative at level `i` mapping the base point to `point`, if in the orbit.
    pub fn rep_for(&self, i: usize, point: usize) -> Option<Permutation> {
        let l = &self.levels[i];
        match l.slot[point] {
            NONE => None,
            k => Some(l.rep(k as usize)),
        }
    }

    pub fn order_big(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Exact order, or `None` when it does not fit in `u128`.
    pub fn order_checked(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Sifts `g` starting at level `start`. Returns the residue and the first
    /// point the residue fails to fix at a trivial level or whose image is
    /// outside the basic orbit. `None` means `g` is a member.
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, Option<usize>) {
        let mut h = g.clone();
        let mut lo = if start == 0 { 0 } else { self.levels[start - 1].base + 1 };
        for level in &self.levels[start..] {
            let b = level.base;
            if let Some(p) = (lo..b).find(|&p| h.image(p) != p) {
                return (h, Some(p));
            }
            let beta = h.image(b);
            let k = level.slot[beta];
            if k == NONE {
                return (h, Some(b));
            }
            if beta != b {
                h = level.strip_rep(h, k as usize);
            }
            lo = b + 1;
        }
        if let Some(p) = (lo..self.degree).find(|&p| h.image(p) != p) {
            return (h, Some(p));
        }
        (h, None)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g, 0).1.is_none()
    }

    /// Adds `g` to the group. Returns `false` if it was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "generator degree mismatch");
        let (h, fail) = self.strip(g, 0);
        match fail {
            None => false,
            Some(j) => {
                let li = self.insert_residue(h, j);
                self.complete_from(li);
                true
            }
        }
    }

    /// Adds `h` (which fixes every point below `j`) as a strong generator at
    /// every level with base at most `j`, creating level `j` if absent.
    fn insert_residue(&mut self, h: Permutation, j: usize) -> usize {
        let pos = self.levels.partition_point(|l| l.base < j);
        if pos == self.levels.len() || self.levels[pos].base != j {
            let mut gens = match self.levels.get(pos) {
                Some(next) => next.gens.clone(),
                None => Vec::new(),
            };
            gens.push(h.clone());
            self.levels.insert(pos, Level::new(j, self.degree, gens, self.explicit_limit));
        } else {
            self.levels[pos].push_gen(h.clone());
            self.levels[pos].rebuild_orbit();
        }
        for l in &mut self.levels[..pos] {
            l.push_gen(h.clone());
            l.rebuild_orbit();
        }
        pos
    }

    /// Schreier–Sims completion from level `top` down to level 0.
    fn complete_from(&mut self, top: usize) {
        let mut i = top as isize;
        'outer: while i >= 0 {
            let li = i as usize;
            let level = &self.levels[li];
            let n_orbit = level.orbit.len();
            for k in 0..n_orbit {
                let beta = level.orbit[k] as usize;
                let u = level.rep(k);
                for s in 0..level.gens.len() {
                    let gamma = level.gens[s].image(beta);
                    let kg = level.slot[gamma] as usize;
                    if let Transversal::Schreier { back } = &level.trans {
                        // tree edges give trivial Schreier generators
                        if back[kg] as usize == s && level.gen_invs[s].image(gamma) == beta {
                            continue;
                        }
                    }
                    let us = u.mul(&level.gens[s]);
                    let sg = level.strip_rep(us, kg);
                    if sg.is_identity() {
                        continue;
                    }
                    let (h, fail) = self.strip(&sg, li + 1);
                    if let Some(j) = fail {
                        i = self.insert_residue(h, j) as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Visits every element exactly once as a product of coset representatives.
    pub fn for_each_element(&self, f: impl FnMut(&Permutation)) {
        self.for_each_element_from(0, &Permutation::identity(self.degree), f);
    }

    /// Visits `s * suffix` for every `s` in the stabilizer of the first
    /// `start` base points.
    pub fn for_each_element_from(&self, start: usize, suffix: &Permutation, mut f: impl FnMut(&Permutation)) {
        let reps: Vec<Vec<Permutation>> = (start..self.levels.len()).map(|i| self.transversal(i)).collect();
        fn rec(reps: &[Vec<Permutation>], i: usize, suffix: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            if i == reps.len() {
                f(suffix);
                return;
            }
            // elements are u_k ... u_1 u_0; deeper levels multiply on the left.
            for r in &reps[i] {
                let next = r.mul(suffix);
                rec(reps, i + 1, &next, f);
            }
        }
        rec(&reps, 0, suffix, &mut f);
    }

    /// Strong generators at level `i`; they generate the stabilizer of the
    /// base points before level `i`.
    pub fn level_generators(&self, i: usize) -> &[Permutation] {
        &self.levels[i].gens
    }

    /// Order of the stabilizer of the first `start` base points.
    pub fn stabilizer_order_big(&self, start: usize) -> BigUint {
        self.levels[start.min(self.levels.len())..]
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Uniformly random element.
    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter() {
            let k = rng.gen_range(0..level.orbit.len());
            g = level.rep(k).mul(&g);
        }
        g
    }

    /// Lexicographically smallest element of the right coset `self * g`,
    /// i.e. the minimum over `n` in the group of `n g`.
    pub fn min_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            // n ranges over the current stabilizer; choose the image of the base
            // point minimizing (point) h.
            let mut best = level.base;
            let mut best_val = h.image(level.base);
            for &p in &level.orbit {
                let v = h.image(p as usize);
                if v < best_val {
                    best_val = v;
                    best = p as usize;
                }
            }
            if best != level.base {
                let k = level.slot[best] as usize;
                h = level.rep(k).mul(&h);
            }
        }
        h
    }
}
