//! Permutation groups given by generators, with a lazily built stabilizer chain.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Refuse k-subset enumerations larger than this.
pub const MAX_K_SUBSETS: u128 = 10_000_000;

/// A subgroup of `Sym(degree)`.
///
/// Immutable once the chain is built, and cheap to clone.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabChain>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// Group generated by `generators`. An empty list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        if degree > crate::perm::MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut generators: Vec<Permutation> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        Ok(PermGroup { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// Full symmetric group with a directly constructed chain.
    pub fn symmetric(degree: usize) -> Self {
        let gens = if degree >= 2 {
            let cyc = Permutation::from_fn(degree, |i| (i + 1) % degree).unwrap();
            let mut t: Vec<usize> = (0..degree).collect();
            t.swap(0, 1);
            vec![cyc, Permutation::from_images(t).unwrap()]
        } else {
            vec![]
        };
        let g = Self::new(degree, gens).expect("valid degree");
        let _ = g.chain.set(Arc::new(StabChain::symmetric(degree)));
        g
    }

    pub(crate) fn from_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let g = Self::new(degree, generators).expect("validated generators");
        let _ = g.chain.set(Arc::new(chain));
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::from_generators(self.degree, &self.generators)))
    }

    /// Exact order.
    ///
    /// # Panics
    /// If the order exceeds `u128` (only symmetric-like groups of degree > 34).
    pub fn order(&self) -> u128 {
        self.chain().order_checked().expect("group order exceeds u128; use order_big")
    }

    pub fn order_big(&self) -> BigUint {
        self.chain().order_big()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn is_symmetric(&self) -> bool {
        let mut f = BigUint::from(1u32);
        for k in 2..=self.degree {
            f *= BigUint::from(k);
        }
        self.order_big() == f
    }

    /// `self ≤ other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn equals(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order_big() == other.order_big()
            && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].mul(&g[j]) == g[j].mul(&g[i])))
    }

    /// Adds generators, reusing the existing chain.
    pub fn with_generators(&self, extra: &[Permutation]) -> PermGroup {
        let mut chain = self.chain().clone();
        let mut gens = self.generators.clone();
        for e in extra {
            if chain.extend(e) {
                gens.push(e.clone());
            }
        }
        PermGroup::from_chain(self.degree, gens, chain)
    }

    /// All elements, refusing when the order exceeds `budget`.
    pub fn elements(&self, budget: usize) -> Result<Vec<Permutation>> {
        let order = self.order_big();
        if order > BigUint::from(budget) {
            return Err(Error::Budget {
                what: "element enumeration",
                needed: u128::try_from(order).unwrap_or(u128::MAX),
                limit: budget as u128,
            });
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Orbits on points, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for p in 0..self.degree {
                uf.union(p, g.image(p));
            }
        }
        uf.classes()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Orbits of the induced action on `k`-subsets, as lists of subset ranks.
    ///
    /// Subsets are ranked in colexicographic order. Refuses when the number of
    /// subsets exceeds [`MAX_K_SUBSETS`].
    pub fn orbits_on_k_sets(&self, k: usize) -> Result<Vec<Vec<u64>>> {
        let n = self.degree;
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, degree: n });
        }
        let total = binomial(n as u128, k as u128);
        if total > MAX_K_SUBSETS {
            return Err(Error::budget("k-subset enumeration", total, MAX_K_SUBSETS));
        }
        let total = total as usize;
        let table = BinomialTable::new(n, k);
        let mut uf = UnionFind::new(total);
        let mut subset: Vec<usize> = (0..k).collect();
        let mut buf = vec![0usize; k];
        for r in 0..total {
            for g in &self.generators {
                for (b, &s) in buf.iter_mut().zip(&subset) {
                    *b = g.image(s);
                }
                buf.sort_unstable();
                uf.union(r, table.rank(&buf));
            }
            next_combination(&mut subset, n);
        }
        Ok(uf
            .classes()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x as u64).collect())
            .collect())
    }

    pub fn is_k_homogeneous(&self, k: usize) -> Result<bool> {
        Ok(self.orbits_on_k_sets(k)?.len() == 1)
    }

    /// Transitivity on ordered `k`-tuples of distinct points, via the
    /// iterated point-stabilizer criterion on the stabilizer chain.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        let n = self.degree;
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, degree: n });
        }
        // G is k-transitive iff |G| is divisible by n(n-1)...(n-k+1) and the
        // chain with base 0..k-1 has full basic orbits. Our chain uses base
        // points in increasing order, so check the first k levels directly.
        let chain = self.chain();
        let base = chain.base();
        let sizes = chain.orbit_sizes();
        for i in 0..k.min(n - 1) {
            if base.get(i) != Some(&i) || sizes[i] != n - i {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical sort key: order, then sorted generator images.
    pub(crate) fn sort_key(&self) -> (BigUint, Vec<Vec<u16>>) {
        let mut gens: Vec<Vec<u16>> = self.generators.iter().map(|g| g.images().to_vec()).collect();
        gens.sort();
        (self.order_big(), gens)
    }

    /// Generators as 1-based cycle strings.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(Permutation::format_cycles).collect()
    }

    /// Multiset of element orders, as a sorted map order -> count.
    pub fn element_order_statistics(&self, budget: usize) -> Result<Vec<(u64, usize)>> {
        let mut counts: HashMap<u64, usize> = HashMap::new();
        for g in self.elements(budget)? {
            *counts.entry(g.order()).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        Ok(v)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            let idx = *by_root.entry(r).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[idx].push(x);
        }
        out
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

struct BinomialTable {
    c: Vec<Vec<usize>>,
}

impl BinomialTable {
    fn new(n: usize, k: usize) -> Self {
        let mut c = vec![vec![0usize; k + 1]; n + 1];
        for i in 0..=n {
            c[i][0] = 1;
            for j in 1..=k.min(i) {
                c[i][j] = c[i - 1][j - 1] + if j <= i - 1 { c[i - 1][j] } else { 0 };
            }
        }
        BinomialTable { c }
    }

    /// Colex rank of a sorted subset.
    fn rank(&self, sorted: &[usize]) -> usize {
        sorted.iter().enumerate().map(|(i, &s)| self.c[s][i + 1]).sum()
    }
}

/// Advances a sorted subset to the next one in colex order.
fn next_combination(s: &mut [usize], n: usize) {
    let k = s.len();
    for i in 0..k {
        let limit = if i + 1 < k { s[i + 1] } else { n };
        if s[i] + 1 < limit {
            s[i] += 1;
            for (j, v) in s.iter_mut().enumerate().take(i) {
                *v = j;
            }
            return;
        }
    }
}
