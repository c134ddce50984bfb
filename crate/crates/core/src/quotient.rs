//! Permutation representations of quotients `H/N`.
//!
//! The default representation is the action of `H` on the right cosets of
//! `N`, each coset named by its lexicographically smallest element. When `N`
//! is regular on the points, `H = N ⋊ H_α` and `H/N` is represented by the
//! point stabilizer `H_α` on the original points instead; this keeps affine
//! quotients such as `AGL_d(q)/q^d` at degree `q^d` rather than `|GL_d(q)|`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::normalizes;

#[derive(Clone, Debug)]
enum Mode {
    Cosets { reps: Vec<Permutation>, index: HashMap<Permutation, usize> },
    /// `N` regular: projection is `h ↦ h n^-1` with `n ∈ N` sending 0 to `0h`.
    Complement,
}

/// `H/N` with projection and lifting maps.
#[derive(Clone, Debug)]
pub struct QuotientRep {
    parent: PermGroup,
    kernel: PermGroup,
    mode: Mode,
    quotient: PermGroup,
}

impl QuotientRep {
    /// Builds `H/N`, verifying `N ⊴ H` and refusing indices above `index_budget`.
    pub fn new(h: &PermGroup, n: &PermGroup, index_budget: usize) -> Result<Self> {
        if h.degree() != n.degree() {
            return Err(Error::DegreeMismatch(h.degree(), n.degree()));
        }
        if !n.is_subgroup_of(h) {
            return Err(Error::NotSubgroup("kernel is not contained in the parent".into()));
        }
        if !normalizes(h.generators(), n) {
            return Err(Error::NotNormal);
        }
        let index = h.order_big() / n.order_big();
        let degree = h.degree();
        if degree > 1 && n.order_big() == num_bigint::BigUint::from(degree) && n.is_transitive() {
            let chain = h.chain();
            let gens = if chain.depth() > 1 { chain.level_generators(1).to_vec() } else { Vec::new() };
            let quotient = PermGroup::new(degree, gens)?;
            return Ok(QuotientRep { parent: h.clone(), kernel: n.clone(), mode: Mode::Complement, quotient });
        }
        let limit = index_budget as u128;
        let idx = u128::try_from(index).unwrap_or(u128::MAX);
        if idx > limit {
            return Err(Error::budget("quotient index", idx, limit));
        }
        let idx = idx as usize;
        let kchain = n.chain();
        let gens = h.generators();
        let mut reps = vec![kchain.min_coset_rep(&Permutation::identity(degree))];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(reps[0].clone(), 0);
        let mut images: Vec<Vec<usize>> = vec![Vec::with_capacity(idx); gens.len()];
        let mut k = 0;
        while k < reps.len() {
            for (gi, g) in gens.iter().enumerate() {
                let c = kchain.min_coset_rep(&reps[k].mul(g));
                let j = match index.get(&c) {
                    Some(&j) => j,
                    None => {
                        let j = reps.len();
                        index.insert(c.clone(), j);
                        reps.push(c);
                        j
                    }
                };
                images[gi].push(j);
            }
            k += 1;
        }
        debug_assert_eq!(reps.len(), idx);
        let qgens = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        let quotient = PermGroup::new(reps.len().max(1), qgens)?;
        Ok(QuotientRep { parent: h.clone(), kernel: n.clone(), mode: Mode::Cosets { reps, index }, quotient })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn quotient_group(&self) -> &PermGroup {
        &self.quotient
    }

    /// Uses the point-stabilizer representation for a regular kernel.
    pub fn is_complement(&self) -> bool {
        matches!(self.mode, Mode::Complement)
    }

    /// One representative per coset of the kernel.
    pub fn transversal(&self, budget: usize) -> Result<Vec<Permutation>> {
        match &self.mode {
            Mode::Cosets { reps, .. } => Ok(reps.clone()),
            Mode::Complement => self.quotient.elements(budget),
        }
    }

    /// Image of a parent element in the quotient.
    pub fn project(&self, h: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(h) {
            return Err(Error::NotMember);
        }
        Ok(self.project_unchecked(h))
    }

    fn project_unchecked(&self, h: &Permutation) -> Permutation {
        match &self.mode {
            Mode::Cosets { reps, index } => {
                let kchain = self.kernel.chain();
                let images: Vec<usize> = reps.iter().map(|r| index[&kchain.min_coset_rep(&r.mul(h))]).collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            }
            Mode::Complement => {
                let n = self.kernel.chain().rep_for(0, h.image(0)).expect("kernel is transitive");
                h.mul(&n.inverse())
            }
        }
    }

    /// The image `KN/N` of a subgroup `K ≤ H`.
    pub fn project_group(&self, k: &PermGroup) -> Result<PermGroup> {
        if !k.is_subgroup_of(&self.parent) {
            return Err(Error::NotSubgroup("group is not contained in the parent".into()));
        }
        let gens = k.generators().iter().map(|g| self.project_unchecked(g)).collect();
        PermGroup::new(self.quotient.degree(), gens)
    }

    /// A parent element projecting to `q`.
    pub fn preimage(&self, q: &Permutation) -> Permutation {
        match &self.mode {
            Mode::Cosets { reps, .. } => reps[q.image(0)].clone(),
            Mode::Complement => q.clone(),
        }
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn lift(&self, q: &PermGroup) -> Result<PermGroup> {
        if !q.is_subgroup_of(&self.quotient) {
            return Err(Error::NotSubgroup("group is not contained in the quotient".into()));
        }
        let extra: Vec<Permutation> = q.generators().iter().map(|g| self.preimage(g)).collect();
        Ok(self.kernel.with_generators(&extra))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::derived_subgroup;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::new(4, vec![p("(1 2 3 4)", 4), p("(1 2)", 4)]).unwrap()
    }

    fn v4() -> PermGroup {
        PermGroup::new(4, vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap()
    }

    fn agl17() -> PermGroup {
        PermGroup::new(7, vec![p("(1 2 3 4 5 6 7)", 7), p("(2 4 3 7 5 6)", 7)]).unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let q = QuotientRep::new(&s4(), &v4(), 1000).unwrap();
        assert_eq!(q.quotient_group().order(), 6);
        assert!(!q.quotient_group().is_abelian());
    }

    #[test]
    fn s4_mod_v4_coset_action_matches() {
        // Kernel A4 is not regular, so this uses the coset action.
        let a4 = derived_subgroup(&s4());
        let q = QuotientRep::new(&s4(), &a4, 1000).unwrap();
        assert!(!q.is_complement());
        assert_eq!(q.quotient_group().order(), 2);
        assert_eq!(q.quotient_group().degree(), 2);
        assert!(q.project(&p("(1 2 3)", 4)).unwrap().is_identity());
        assert!(!q.project(&p("(1 2)", 4)).unwrap().is_identity());
    }

    #[test]
    fn trivial_quotient_and_lifts() {
        let g = s4();
        let q = QuotientRep::new(&g, &g, 10).unwrap();
        assert_eq!(q.quotient_group().order(), 1);
        let q = QuotientRep::new(&g, &v4(), 10).unwrap();
        let t = PermGroup::trivial(q.quotient_group().degree());
        assert!(q.lift(&t).unwrap().equals(&v4()));
        assert!(q.lift(q.quotient_group()).unwrap().equals(&g));
        let three = q.project_group(&PermGroup::new(4, vec![p("(1 2 3)", 4)]).unwrap()).unwrap();
        assert_eq!(three.order(), 3);
        let a4 = q.lift(&three).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.equals(&derived_subgroup(&g)));
    }

    #[test]
    fn agl17_mod_translations_is_cyclic() {
        let c7 = PermGroup::new(7, vec![p("(1 2 3 4 5 6 7)", 7)]).unwrap();
        let q = QuotientRep::new(&agl17(), &c7, 100).unwrap();
        let qg = q.quotient_group();
        assert_eq!(qg.order(), 6);
        assert!(qg.is_abelian());
        assert!(qg.elements(100).unwrap().iter().any(|x| x.order() == 6));
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel() {
        use rand::SeedableRng;
        let g = s4();
        for kernel in [v4(), derived_subgroup(&g)] {
            let q = QuotientRep::new(&g, &kernel, 100).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            for _ in 0..200 {
                let a = g.random_element(&mut rng);
                let b = g.random_element(&mut rng);
                let lhs = q.project(&a.mul(&b)).unwrap();
                let rhs = q.project(&a).unwrap().mul(&q.project(&b).unwrap());
                assert_eq!(lhs, rhs);
                assert_eq!(q.project(&a).unwrap().is_identity(), kernel.contains(&a));
            }
        }
    }

    #[test]
    fn non_normal_kernel_rejected() {
        let t = PermGroup::new(4, vec![p("(1 2)", 4)]).unwrap();
        assert!(matches!(QuotientRep::new(&s4(), &t, 100), Err(Error::NotNormal)));
    }

    #[test]
    fn round_trip_for_intermediate_groups() {
        let g = agl17();
        let c7 = PermGroup::new(7, vec![p("(1 2 3 4 5 6 7)", 7)]).unwrap();
        let q = QuotientRep::new(&g, &c7, 100).unwrap();
        for e in [1u64, 2, 3] {
            let k = c7.with_generators(&[p("(2 4 3 7 5 6)", 7).pow(e)]);
            let back = q.lift(&q.project_group(&k).unwrap()).unwrap();
            assert!(back.equals(&k));
        }
    }
}
