//! Normalizers and centralizers.
//!
//! Exact results come from a scan of the ambient group along its stabilizer
//! chain. Inside a symmetric group two shortcuts avoid the scan: the
//! holomorph of a regular abelian group, and the `PΓL_d(q)` normalizer of a
//! group containing the constructed `PSL_d(q)` on projective points.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::budget::Budgets;
use crate::constructors;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{generated_by_filtered, normalizes, unique_minimal_normal};

/// How a normalizer was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    ExactScan,
    Holomorph,
    Catalog,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ExactScan => "exact-scan",
            Provenance::Holomorph => "holomorph",
            Provenance::Catalog => "catalog",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Cheapest applicable method, falling back to the exact scan.
    Auto,
    ExactScan,
    Holomorph,
    Catalog,
}

/// `N_U(G)`, with the method used.
pub fn normalizer_in(u: &PermGroup, g: &PermGroup, strategy: Strategy, budgets: &Budgets) -> Result<(PermGroup, Provenance)> {
    if !g.is_subgroup_of(u) {
        return Err(Error::NotSubgroup("G is not contained in U".into()));
    }
    match strategy {
        Strategy::ExactScan => Ok((scan_normalizer(u, g, budgets.scan)?, Provenance::ExactScan)),
        Strategy::Holomorph => {
            if !u.is_symmetric() {
                return Err(Error::NoStrategy("holomorph needs a symmetric ambient group".into()));
            }
            match holomorph_route(g, budgets)? {
                Some(n) => Ok((n, Provenance::Holomorph)),
                None => Err(Error::NoStrategy("G has no regular abelian socle".into())),
            }
        }
        Strategy::Catalog => {
            if !u.is_symmetric() {
                return Err(Error::NoStrategy("catalog needs a symmetric ambient group".into()));
            }
            match catalog_normalizer(g, budgets)? {
                Some(n) => Ok((n, Provenance::Catalog)),
                None => Err(Error::NoStrategy("G matches no catalog family".into())),
            }
        }
        Strategy::Auto => {
            if normalizes(u.generators(), g) {
                return Ok((u.clone(), Provenance::ExactScan));
            }
            if u.is_symmetric() {
                if let Some(n) = catalog_normalizer(g, budgets)? {
                    return Ok((n, Provenance::Catalog));
                }
                match holomorph_route(g, budgets) {
                    Ok(Some(n)) => return Ok((n, Provenance::Holomorph)),
                    Ok(None) => {}
                    Err(e) if e.is_budget() => {}
                    Err(e) => return Err(e),
                }
            }
            match scan_normalizer(u, g, budgets.scan) {
                Ok(n) => Ok((n, Provenance::ExactScan)),
                Err(Error::Budget { needed, limit, .. }) => Err(Error::NoStrategy(format!(
                    "no shortcut applies and the exact scan needs {needed} elements (limit {limit})"
                ))),
                Err(e) => Err(e),
            }
        }
    }
}

/// `C_U(G)` by exact scan.
pub fn centralizer_in(u: &PermGroup, g: &PermGroup, budgets: &Budgets) -> Result<PermGroup> {
    let gens = g.generators().to_vec();
    scan(u, budgets.scan, None, move |x| gens.iter().all(|s| x.mul(s) == s.mul(x)))
}

/// `N_U(G)` by scanning every element of `U`, pruned by the orbits of `G`.
pub fn scan_normalizer(u: &PermGroup, g: &PermGroup, budget: u64) -> Result<PermGroup> {
    if normalizes(u.generators(), g) {
        return Ok(u.clone());
    }
    let test = {
        let g = g.clone();
        move |x: &Permutation| g.generators().iter().all(|s| g.contains(&s.conjugate_by(x)))
    };
    scan(u, budget, Some(g), test)
}

/// Subgroup of `u` generated by the elements passing `test`, which must
/// define a subgroup.
///
/// When `orbit_group` is given, elements are required to map its orbits to
/// orbits of the same size, and candidates failing that on the first base
/// point are skipped wholesale.
fn scan(
    u: &PermGroup,
    budget: u64,
    orbit_group: Option<&PermGroup>,
    test: impl Fn(&Permutation) -> bool + Sync,
) -> Result<PermGroup> {
    let order = u.order_big();
    if order > num_bigint::BigUint::from(budget) {
        let needed = u128::try_from(order).unwrap_or(u128::MAX);
        return Err(Error::budget("normalizer scan", needed, budget as u128));
    }
    let n = u.degree();
    let chain = u.chain();
    if chain.depth() == 0 {
        return Ok(PermGroup::trivial(n));
    }
    let orbit_size: Option<Vec<usize>> = orbit_group.map(|h| {
        let mut size = vec![0; n];
        for o in h.orbits() {
            for &p in &o {
                size[p] = o.len();
            }
        }
        size
    });
    let b0 = chain.base()[0];
    let top = chain.transversal(0);
    let found: Vec<Vec<Permutation>> = top
        .par_iter()
        .map(|u0| {
            if let Some(size) = &orbit_size {
                if size[b0] != size[u0.image(b0)] {
                    return Vec::new();
                }
            }
            let mut local = crate::chain::StabChain::trivial(n);
            let mut gens = Vec::new();
            chain.for_each_element_from(1, u0, |x| {
                if !local.contains(x) && test(x) {
                    local.extend(x);
                    gens.push(x.clone());
                }
            });
            gens
        })
        .collect();
    let mut all: Vec<Permutation> = found.into_iter().flatten().collect();
    all.sort();
    Ok(generated_by_filtered(n, &all))
}

/// Socle route for affine groups: if the unique minimal normal subgroup `S`
/// of `G` is regular and elementary abelian or cyclic, then
/// `N_Sym(G) = N_{Hol(S)}(G)`.
fn holomorph_route(g: &PermGroup, budgets: &Budgets) -> Result<Option<PermGroup>> {
    if let Some(h) = regular_abelian_holomorph(g, budgets)? {
        return Ok(Some(h));
    }
    if g.order_big() > num_bigint::BigUint::from(budgets.elements) {
        return Ok(None);
    }
    let Some(s) = unique_minimal_normal(g, budgets.elements)? else {
        return Ok(None);
    };
    let Some(hol) = regular_abelian_holomorph(&s, budgets)? else {
        return Ok(None);
    };
    Ok(Some(scan_normalizer(&hol, g, budgets.scan)?))
}

/// `Hol(G)` on the points of `G`, when `G` is regular and either
/// elementary abelian or cyclic.
pub fn regular_abelian_holomorph(g: &PermGroup, budgets: &Budgets) -> Result<Option<PermGroup>> {
    let n = g.degree();
    if n < 2 || !g.is_abelian() || !g.is_transitive() || g.order_big() != num_bigint::BigUint::from(n) {
        return Ok(None);
    }
    let point_of = |x: &Permutation| x.image(0);
    // Elementary abelian: a filtered generating set is a basis.
    let p = g.generators()[0].order();
    if crate::structure::is_prime(p) && g.generators().iter().all(|x| x.order() == p) {
        let basis = generated_by_filtered(n, g.generators()).generators().to_vec();
        let d = basis.len();
        let hol = constructors::holomorph_elementary(p as usize, d)?;
        let k = crate::field::Field::new(p as u32, 1)?;
        let label: Vec<usize> = constructors::vectors(&k, d)
            .iter()
            .map(|v| {
                let x = v.iter().zip(&basis).fold(Permutation::identity(n), |acc, (&c, b)| acc.mul(&b.pow(c as u64)));
                point_of(&x)
            })
            .collect();
        return Ok(Some(relabel(&hol, &label)));
    }
    let elems = g.elements(budgets.elements)?;
    if let Some(c) = elems.iter().find(|x| x.order() as usize == n) {
        let hol = constructors::holomorph_cyclic(n)?;
        let mut label = vec![0; n];
        let mut x = Permutation::identity(n);
        for l in label.iter_mut() {
            *l = point_of(&x);
            x = x.mul(c);
        }
        return Ok(Some(relabel(&hol, &label)));
    }
    Ok(None)
}

/// Transports `h` along the bijection `i ↦ label[i]`.
fn relabel(h: &PermGroup, label: &[usize]) -> PermGroup {
    let n = label.len();
    let gens = h
        .generators()
        .iter()
        .map(|x| {
            let mut im = vec![0; n];
            for i in 0..n {
                im[label[i]] = label[x.image(i)];
            }
            Permutation::from_images(im).expect("relabelling is a bijection")
        })
        .collect();
    PermGroup::new(n, gens).expect("same degree")
}

/// If `PSL_d(q) ≤ G ≤ PΓL_d(q)` for the constructed groups on
/// `(q^d-1)/(q-1)` projective points, returns `N_{PΓL_d(q)}(G)`, which is
/// the normalizer of `G` in the full symmetric group.
pub fn catalog_normalizer(g: &PermGroup, budgets: &Budgets) -> Result<Option<PermGroup>> {
    let n = g.degree();
    for q in 2..=crate::field::MAX_Q {
        if crate::field::Field::of_order(q).is_err() {
            continue;
        }
        let mut d = 2;
        loop {
            let count = (q.pow(d) - 1) / (q - 1);
            if count > n {
                break;
            }
            if count == n {
                let psl = constructors::psl(d as usize, q)?;
                if psl.is_subgroup_of(g) {
                    let pgammal = constructors::pgammal(d as usize, q)?;
                    if g.is_subgroup_of(&pgammal) {
                        return Ok(Some(scan_normalizer(&pgammal, g, budgets.scan)?));
                    }
                }
            }
            d += 1;
        }
    }
    Ok(None)
}

/// Outcome of the random check of a shortcut normalizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardReport {
    pub sampled: usize,
    /// Samples that fell inside the claimed normalizer.
    pub skipped: usize,
    /// Samples outside the claimed normalizer that nevertheless normalize `G`.
    pub violations: usize,
}

/// Draws `samples` random elements of `U`; each one outside `N` must move
/// some generator of `G` out of `G`.
pub fn monte_carlo_guard(u: &PermGroup, g: &PermGroup, n: &PermGroup, samples: usize, seed: u64) -> GuardReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Permutation> = (0..samples).map(|_| u.random_element(&mut rng)).collect();
    let (skipped, violations) = draws
        .par_iter()
        .map(|x| {
            if n.contains(x) {
                (1, 0)
            } else if g.generators().iter().all(|s| g.contains(&s.conjugate_by(x))) {
                (0, 1)
            } else {
                (0, 0)
            }
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    GuardReport { sampled: samples, skipped, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cyclic_seven_in_s7() {
        let b = Budgets::default();
        let s7 = PermGroup::symmetric(7);
        let c7 = cyclic(7).unwrap();
        let (n, prov) = normalizer_in(&s7, &c7, Strategy::ExactScan, &b).unwrap();
        assert_eq!(n.order(), 42);
        assert_eq!(prov, Provenance::ExactScan);
        let (h, prov) = normalizer_in(&s7, &c7, Strategy::Auto, &b).unwrap();
        assert_eq!(prov, Provenance::Holomorph);
        assert!(h.equals(&n));
        assert!(n.equals(&agl(1, 7).unwrap()));
    }

    #[test]
    fn elementary_nine_in_s9() {
        let b = Budgets::default();
        let s9 = PermGroup::symmetric(9);
        let t = asl(1, 9).unwrap();
        let e = PermGroup::new(9, t.generators().to_vec()).unwrap();
        let (h, prov) = normalizer_in(&s9, &e, Strategy::Holomorph, &b).unwrap();
        assert_eq!(prov, Provenance::Holomorph);
        assert_eq!(h.order(), 432);
        let (x, _) = normalizer_in(&s9, &e, Strategy::ExactScan, &b).unwrap();
        assert!(x.equals(&h));
    }

    #[test]
    fn relabelled_holomorph_contains_group() {
        let b = Budgets::default();
        let g = PermGroup::new(8, vec![p("(1 5)(2 6)(3 7)(4 8)", 8), p("(1 3)(2 4)(5 7)(6 8)", 8), p("(1 2)(3 4)(5 6)(7 8)", 8)]).unwrap();
        let h = regular_abelian_holomorph(&g, &b).unwrap().unwrap();
        assert_eq!(h.order(), 8 * 168);
        assert!(g.is_subgroup_of(&h));
        assert!(normalizes(h.generators(), &g));
    }

    #[test]
    fn trivial_cases() {
        let b = Budgets::default();
        let s4 = PermGroup::symmetric(4);
        let (n, _) = normalizer_in(&s4, &s4, Strategy::Auto, &b).unwrap();
        assert!(n.equals(&s4));
        let d8 = dihedral(8).unwrap();
        let r = PermGroup::new(4, vec![p("(1 2 3 4)", 4)]).unwrap();
        assert!(centralizer_in(&d8, &r, &b).unwrap().equals(&r));
        let a4 = alternating(4).unwrap();
        assert!(centralizer_in(&s4, &a4, &b).unwrap().is_trivial());
        let z = crate::structure::center(&d8, 100).unwrap();
        assert!(centralizer_in(&d8, &z, &b).unwrap().equals(&d8));
    }

    #[test]
    fn catalog_matches_scan_at_degree_ten() {
        let b = Budgets::default();
        let a6 = psl(2, 9).unwrap();
        let n = catalog_normalizer(&a6, &b).unwrap().unwrap();
        assert!(n.equals(&pgammal(2, 9).unwrap()));
        let s10 = PermGroup::symmetric(10);
        let g = PermGroup::new(10, vec![a6.generators()[0].clone()]).unwrap();
        assert!(catalog_normalizer(&g, &b).unwrap().is_none());
        let guard = monte_carlo_guard(&s10, &a6, &n, 2000, 1);
        assert_eq!(guard.violations, 0);
        assert_eq!(guard.sampled, 2000);
    }

    #[test]
    fn budget_is_reported() {
        let b = Budgets { scan: 100, ..Budgets::default() };
        let s7 = PermGroup::symmetric(7);
        let g = PermGroup::new(7, vec![p("(1 2)(3 4)", 7)]).unwrap();
        assert!(matches!(normalizer_in(&s7, &g, Strategy::ExactScan, &b), Err(Error::Budget { .. })));
        assert!(matches!(normalizer_in(&s7, &g, Strategy::Auto, &b), Err(Error::NoStrategy(_))));
    }
}
