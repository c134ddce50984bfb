//! Concrete permutation representations of the groups used by the
//! verification suites.
//!
//! Point labelling is fixed so generator files and witness lists are stable:
//!
//! * vectors of `GF(q)^d` are numbered in base-`q` digit order, the first
//!   coordinate being the most significant digit;
//! * projective points are nonzero vectors whose first nonzero coordinate is
//!   1, numbered in lexicographic order;
//! * nonzero vectors are numbered as vectors, skipping the zero vector.
//!
//! Matrices act on row vectors from the right.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Field, Matrix};
use crate::group::PermGroup;
use crate::perm::{gcd, Permutation};
use crate::quotient::QuotientRep;
use crate::structure::generated_by_filtered;

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructor maps are bijections")
}

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    let mut im: Vec<usize> = (0..degree).collect();
    for k in 0..points.len() {
        im[points[k]] = points[(k + 1) % points.len()];
    }
    perm(im)
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    positive("n", n)?;
    PermGroup::new(n, vec![perm((0..n).map(|i| (i + 1) % n).collect())])
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    positive("n", n)?;
    Ok(PermGroup::symmetric(n))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    positive("n", n)?;
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    PermGroup::new(n, vec![cycle(n, &[0, 1, 2]), cycle(n, &long)])
}

/// Dihedral group of the given order, acting on `order/2` points when
/// `order ≥ 6`. Orders 2 and 4 give `C2` on 2 points and `C2 × C2` on 4.
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order == 0 || order % 2 == 1 {
        return Err(Error::InvalidParameter(format!("dihedral order {order} must be even")));
    }
    match order {
        2 => PermGroup::new(2, vec![cycle(2, &[0, 1])]),
        4 => PermGroup::new(4, vec![cycle(4, &[0, 1]), cycle(4, &[2, 3])]),
        _ => {
            let n = order / 2;
            let rot = perm((0..n).map(|i| (i + 1) % n).collect());
            let refl = perm((0..n).map(|i| (n - i) % n).collect());
            PermGroup::new(n, vec![rot, refl])
        }
    }
}

fn shifted(g: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut im: Vec<usize> = (0..degree).collect();
    for i in 0..g.degree() {
        im[offset + i] = offset + g.image(i);
    }
    perm(im)
}

/// `A × B` on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let n = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| shifted(g, 0, n))
        .chain(b.generators().iter().map(|g| shifted(g, a.degree(), n)))
        .collect();
    PermGroup::new(n, gens)
}

/// `A ≀ S_k` in its imprimitive action on `k` blocks of size `deg A`.
pub fn wreath_imprimitive(a: &PermGroup, k: usize) -> Result<PermGroup> {
    positive("k", k)?;
    let m = a.degree();
    let n = m * k;
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| shifted(g, 0, n)).collect();
    if k >= 2 {
        let block_map = |sigma: &dyn Fn(usize) -> usize| perm((0..n).map(|x| sigma(x / m) * m + x % m).collect());
        gens.push(block_map(&|b| (b + 1) % k));
        gens.push(block_map(&|b| match b {
            0 => 1,
            1 => 0,
            b => b,
        }));
    }
    PermGroup::new(n, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialType {
    Plus,
    Minus,
}

fn d8_with_center() -> (PermGroup, Permutation) {
    let g = dihedral(8).unwrap();
    let z = cycle(4, &[0, 2]).mul(&cycle(4, &[1, 3]));
    (g, z)
}

fn q8_with_center() -> (PermGroup, Permutation) {
    let a = Permutation::parse_cycles("(1 2 3 4)(5 6 7 8)", 8).unwrap();
    let b = Permutation::parse_cycles("(1 5 3 7)(2 8 4 6)", 8).unwrap();
    let z = a.pow(2);
    (PermGroup::new(8, vec![a, b]).unwrap(), z)
}

/// Extraspecial group `2^{1+2m}` of the given type, as a central product of
/// `m` factors (`D8`'s, with one `Q8` for the minus type), acting regularly.
pub fn extraspecial2(m: usize, kind: ExtraspecialType) -> Result<PermGroup> {
    if m == 0 || m > 3 {
        return Err(Error::InvalidParameter(format!("extraspecial rank {m} outside 1..=3")));
    }
    let mut factors: Vec<(PermGroup, Permutation)> = (0..m).map(|_| d8_with_center()).collect();
    if kind == ExtraspecialType::Minus {
        factors[m - 1] = q8_with_center();
    }
    let degree: usize = factors.iter().map(|f| f.0.degree()).sum();
    let mut gens = Vec::new();
    let mut centers = Vec::new();
    let mut offset = 0;
    for (g, z) in &factors {
        gens.extend(g.generators().iter().map(|x| shifted(x, offset, degree)));
        centers.push(shifted(z, offset, degree));
        offset += g.degree();
    }
    let product = PermGroup::new(degree, gens)?;
    let identified: Vec<Permutation> = centers.windows(2).map(|w| w[0].mul(&w[1])).collect();
    let kernel = PermGroup::new(degree, identified)?;
    let q = QuotientRep::new(&product, &kernel, 1 << 12)?;
    Ok(q.quotient_group().clone())
}

/// `D8 ∘ Q8`, the extraspecial group of order 32 and minus type.
pub fn central_product_d8_q8() -> Result<PermGroup> {
    extraspecial2(2, ExtraspecialType::Minus)
}

/// `⟨x, y⟩` with `x^m = y^n = 1` and `x^y = x^r`, on `Z_m × Z_n` with
/// `x: (a, b) ↦ (a+1, b)` and `y: (a, b) ↦ (ra, b+1)`. Point `(a, b)` is
/// numbered `a·n + b`.
pub fn metacyclic(m: usize, n: usize, r: usize) -> Result<PermGroup> {
    let (x, y) = metacyclic_generators(m, n, r)?;
    PermGroup::new(m * n, vec![x, y])
}

/// The generators `x` and `y` of [`metacyclic`], with `⟨x⟩` normal.
pub fn metacyclic_generators(m: usize, n: usize, r: usize) -> Result<(Permutation, Permutation)> {
    positive("m", m)?;
    positive("n", n)?;
    let r = r % m;
    if pow_mod(r, n, m) != 1 % m {
        return Err(Error::InvalidParameter(format!("r = {r} does not satisfy r^{n} ≡ 1 mod {m}")));
    }
    let deg = m * n;
    let at = |a: usize, b: usize| a * n + b;
    let x = perm((0..deg).map(|p| at((p / n + 1) % m, p % n)).collect());
    let y = perm((0..deg).map(|p| at(r * (p / n) % m, (p % n + 1) % n)).collect());
    Ok((x, y))
}

/// The exponents `r` with `r^n ≡ 1 mod m`, ascending.
pub fn metacyclic_exponents(m: usize, n: usize) -> Vec<usize> {
    (0..m.max(1)).filter(|&r| pow_mod(r, n, m) == 1 % m).collect()
}

fn pow_mod(a: usize, e: usize, m: usize) -> usize {
    (0..e).fold(1 % m, |acc, _| acc * a % m)
}

/// `⟨δ, φ, ι | δ^d = φ^f = ι^2 = 1, δ^φ = δ^p, δ^ι = δ^-1, [φ, ι] = 1⟩`
/// on `Z_e × Z_f × Z_2`, where `e = gcd(d, p^f - 1)` is the order the
/// relations leave for `δ`. The order is `2ef`, which is `2df` exactly when
/// `p^f ≡ 1 mod d`.
pub fn out_group(d: usize, f: usize, p: usize) -> Result<PermGroup> {
    let (delta, phi, iota) = out_group_generators(d, f, p)?;
    PermGroup::new(delta.degree(), vec![delta, phi, iota])
}

/// The generators `(δ, φ, ι)` of [`out_group`], with `δ` possibly trivial.
pub fn out_group_generators(d: usize, f: usize, p: usize) -> Result<(Permutation, Permutation, Permutation)> {
    positive("d", d)?;
    positive("f", f)?;
    positive("p", p)?;
    let d = (1..=d).rev().find(|&e| d % e == 0 && pow_mod(p % e, f, e) == 1 % e).unwrap_or(1);
    let deg = 2 * d * f;
    let at = |a: usize, b: usize, c: usize| (a * f + b) * 2 + c;
    let split = |x: usize| (x / (2 * f), (x / 2) % f, x % 2);
    let delta = perm((0..deg).map(|x| { let (a, b, c) = split(x); at((a + 1) % d, b, c) }).collect());
    let phi = perm((0..deg).map(|x| { let (a, b, c) = split(x); at(p * a % d, (b + 1) % f, c) }).collect());
    let iota = perm((0..deg).map(|x| { let (a, b, c) = split(x); at((d - a) % d, b, 1 - c) }).collect());
    Ok((delta, phi, iota))
}

// ---------------------------------------------------------------------------
// Linear and affine groups.

/// All vectors of `GF(q)^d` in base-`q` digit order.
pub fn vectors(k: &Field, d: usize) -> Vec<Vec<u8>> {
    let q = k.q();
    (0..q.pow(d as u32))
        .map(|mut x| {
            let mut v = vec![0u8; d];
            for i in (0..d).rev() {
                v[i] = (x % q) as u8;
                x /= q;
            }
            v
        })
        .collect()
}

fn vector_index(k: &Field, v: &[u8]) -> usize {
    v.iter().fold(0, |acc, &c| acc * k.q() + c as usize)
}

/// Projective points: normalized nonzero vectors in lexicographic order.
pub fn projective_points(k: &Field, d: usize) -> Vec<Vec<u8>> {
    vectors(k, d)
        .into_iter()
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

fn normalize(k: &Field, v: &[u8]) -> Vec<u8> {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
    let s = k.inv(lead);
    v.iter().map(|&c| k.mul(c, s)).collect()
}

fn frobenius_vec(k: &Field, v: &[u8]) -> Vec<u8> {
    v.iter().map(|&c| k.frobenius(c)).collect()
}

fn elementary(k: &Field, d: usize, i: usize, j: usize, t: u8) -> Matrix {
    let mut m = Matrix::identity(d);
    m.entries[i * d + j] = k.add(m.entries[i * d + j], t);
    m
}

/// Generators of `SL_d(q)`: root elements `I + t E_{i,i±1}` with `t`
/// running over `1, ω, .., ω^{f-1}`.
pub fn sl_generators(k: &Field, d: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    let w = k.primitive();
    for i in 0..d.saturating_sub(1) {
        for j in 0..k.f() as u64 {
            let t = k.pow(w, j);
            gens.push(elementary(k, d, i, i + 1, t));
            gens.push(elementary(k, d, i + 1, i, t));
        }
    }
    gens
}

/// Generators of `GL_d(q)`: those of `SL_d(q)` plus `diag(ω, 1, .., 1)`.
pub fn gl_generators(k: &Field, d: usize) -> Vec<Matrix> {
    let mut gens = sl_generators(k, d);
    let mut diag = Matrix::identity(d);
    diag.entries[0] = k.primitive();
    gens.push(diag);
    gens
}

fn check_action_size(n: usize) -> Result<()> {
    if n > 10_000 {
        return Err(Error::InvalidParameter(format!("action on {n} points is too large")));
    }
    Ok(())
}

fn field_for(q: usize) -> Result<Field> {
    Field::of_order(q)
}

/// Affine group generated by the given linear parts and all translations,
/// optionally with the coordinatewise Frobenius map.
pub fn act_affine(k: &Field, d: usize, mats: &[Matrix], frobenius: bool) -> Result<PermGroup> {
    act_affine_with(k, d, mats, frobenius, true)
}

fn act_affine_with(k: &Field, d: usize, mats: &[Matrix], frobenius: bool, translations: bool) -> Result<PermGroup> {
    let pts = vectors(k, d);
    check_action_size(pts.len())?;
    let on = |f: &dyn Fn(&[u8]) -> Vec<u8>| perm(pts.iter().map(|v| vector_index(k, &f(v))).collect());
    let mut gens: Vec<Permutation> = mats.iter().map(|m| on(&|v| m.apply(v, k))).collect();
    if translations {
        let w = k.primitive();
        for i in 0..d {
            for j in 0..k.f() as u64 {
                let t = k.pow(w, j);
                gens.push(on(&|v| {
                    let mut u = v.to_vec();
                    u[i] = k.add(u[i], t);
                    u
                }));
            }
        }
    }
    if frobenius && k.f() > 1 {
        gens.push(on(&|v| frobenius_vec(k, v)));
    }
    PermGroup::new(pts.len(), gens)
}

/// Linear (or semilinear) group on the nonzero vectors.
pub fn act_nonzero_vectors(k: &Field, d: usize, mats: &[Matrix], frobenius: bool) -> Result<PermGroup> {
    let pts: Vec<Vec<u8>> = vectors(k, d).into_iter().skip(1).collect();
    check_action_size(pts.len())?;
    let on = |f: &dyn Fn(&[u8]) -> Vec<u8>| perm(pts.iter().map(|v| vector_index(k, &f(v)) - 1).collect());
    let mut gens: Vec<Permutation> = mats.iter().map(|m| on(&|v| m.apply(v, k))).collect();
    if frobenius && k.f() > 1 {
        gens.push(on(&|v| frobenius_vec(k, v)));
    }
    PermGroup::new(pts.len(), gens)
}

/// Induced action on projective points.
pub fn act_projective(k: &Field, d: usize, mats: &[Matrix], frobenius: bool) -> Result<PermGroup> {
    let pts = projective_points(k, d);
    check_action_size(pts.len())?;
    let index: HashMap<&[u8], usize> = pts.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let on = |f: &dyn Fn(&[u8]) -> Vec<u8>| perm(pts.iter().map(|v| index[normalize(k, &f(v)).as_slice()]).collect());
    let mut gens: Vec<Permutation> = mats.iter().map(|m| on(&|v| m.apply(v, k))).collect();
    if frobenius && k.f() > 1 {
        gens.push(on(&|v| frobenius_vec(k, v)));
    }
    PermGroup::new(pts.len(), gens)
}

fn dim_at_least(d: usize, lo: usize) -> Result<()> {
    if d < lo {
        return Err(Error::InvalidParameter(format!("dimension {d} must be at least {lo}")));
    }
    Ok(())
}

/// `GL_d(q)` on the `q^d - 1` nonzero vectors.
pub fn gl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 1)?;
    let k = field_for(q)?;
    act_nonzero_vectors(&k, d, &gl_generators(&k, d), false)
}

/// `SL_d(q)` on the `q^d - 1` nonzero vectors.
pub fn sl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 1)?;
    let k = field_for(q)?;
    act_nonzero_vectors(&k, d, &sl_generators(&k, d), false)
}

pub fn psl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 2)?;
    let k = field_for(q)?;
    act_projective(&k, d, &sl_generators(&k, d), false)
}

pub fn pgl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 2)?;
    let k = field_for(q)?;
    act_projective(&k, d, &gl_generators(&k, d), false)
}

pub fn pgammal(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 2)?;
    let k = field_for(q)?;
    act_projective(&k, d, &gl_generators(&k, d), true)
}

pub fn agl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 1)?;
    let k = field_for(q)?;
    act_affine(&k, d, &gl_generators(&k, d), false)
}

/// `q^d : SL_d(q)`. For `d = 1` this is the translation group.
pub fn asl(d: usize, q: usize) -> Result<PermGroup> {
    dim_at_least(d, 1)?;
    let k = field_for(q)?;
    act_affine(&k, d, &sl_generators(&k, d), false)
}

/// `AΓL_1(q)`: the maps `x ↦ a x^σ + b`.
pub fn agammal1(q: usize) -> Result<PermGroup> {
    let k = field_for(q)?;
    act_affine(&k, 1, &gl_generators(&k, 1), true)
}

/// `q : ((q-1)/2)`, the maps `x ↦ a x + b` with `a` a nonzero square.
pub fn asl1_squares(q: usize) -> Result<PermGroup> {
    let k = field_for(q)?;
    let w = k.primitive();
    let sq = Matrix { d: 1, entries: vec![k.mul(w, w)] };
    act_affine(&k, 1, &[sq], false)
}

/// `Hol(C_p^d) = AGL_d(p)`.
pub fn holomorph_elementary(p: usize, d: usize) -> Result<PermGroup> {
    if !crate::structure::is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    agl(d, p)
}

/// `Hol(C_n) = Z_n ⋊ Z_n^*` as the maps `x ↦ ux + t` on `Z_n`.
pub fn holomorph_cyclic(n: usize) -> Result<PermGroup> {
    positive("n", n)?;
    let mut gens = vec![perm((0..n).map(|x| (x + 1) % n).collect())];
    for u in 2..n {
        if gcd(u as u64, n as u64) == 1 {
            gens.push(perm((0..n).map(|x| u * x % n).collect()));
        }
    }
    Ok(generated_by_filtered(n, &gens))
}

/// `PSL_d(q) ≤ PGL_d(q) ≤ Aut` acting on points and hyperplanes together.
#[derive(Clone, Debug)]
pub struct PointsAndLines {
    pub socle: PermGroup,
    pub pgl: PermGroup,
    pub aut: PermGroup,
    /// The graph involution swapping point `i` with line `i`.
    pub graph: Permutation,
}

/// `Aut(PSL_3(q))` on the `2(q^2+q+1)` points and lines of the plane.
///
/// Points are numbered first, then lines; line `i` is the kernel of the
/// linear form given by projective point `i`. Matrices move lines by the
/// inverse transpose. Only prime `q` is supported, so `PΓL = PGL`.
pub fn aut_psl3_on_points_and_lines(q: usize) -> Result<PointsAndLines> {
    if q != 7 {
        return Err(Error::InvalidParameter(format!("only q = 7 is supported, got {q}")));
    }
    let k = field_for(q)?;
    let pts = projective_points(&k, 3);
    let n = pts.len();
    let index: HashMap<&[u8], usize> = pts.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let both = |m: &Matrix| {
        let dual = m.inverse(&k).expect("invertible").transpose();
        let mut im = vec![0; 2 * n];
        for (i, v) in pts.iter().enumerate() {
            im[i] = index[normalize(&k, &m.apply(v, &k)).as_slice()];
            im[n + i] = n + index[normalize(&k, &dual.apply(v, &k)).as_slice()];
        }
        perm(im)
    };
    let socle = PermGroup::new(2 * n, sl_generators(&k, 3).iter().map(both).collect())?;
    let pgl = PermGroup::new(2 * n, gl_generators(&k, 3).iter().map(both).collect())?;
    let graph = perm((0..2 * n).map(|i| (i + n) % (2 * n)).collect());
    let aut = pgl.with_generators(std::slice::from_ref(&graph));
    Ok(PointsAndLines { socle, pgl, aut, graph })
}

/// Affine group `q^d:M` for the matrices of a shipped data file.
pub fn shipped_affine(name: &str) -> Result<PermGroup> {
    let file = crate::datafile::load_shipped(name)?;
    act_affine(&file.field, file.d, &file.matrices, false)
}

/// Linear group on the nonzero vectors for the matrices of a shipped data file.
pub fn shipped_linear(name: &str) -> Result<PermGroup> {
    let file = crate::datafile::load_shipped(name)?;
    act_nonzero_vectors(&file.field, file.d, &file.matrices, false)
}

/// The affine groups of the extraspecial case, built from shipped data.
#[derive(Clone, Debug)]
pub struct Case5Witnesses {
    /// `3^2:Q8` on 9 points.
    pub q3_q8: PermGroup,
    /// `5^2:SL2(3)` on 25 points.
    pub q5_sl2_3: PermGroup,
    /// `5^2:N_GL2(5)(Q8)` on 25 points.
    pub q5_normalizer: PermGroup,
    /// `3^4:(E:5)`, `3^4:((E:5).2)` and `3^4:((E:5).4)` on 81 points.
    pub e5: PermGroup,
    pub e5_2: PermGroup,
    pub e5_4: PermGroup,
}

pub fn case5_witnesses() -> Result<Case5Witnesses> {
    Ok(Case5Witnesses {
        q3_q8: shipped_affine("q3_d2_q8")?,
        q5_sl2_3: shipped_affine("q5_d2_sl2_3")?,
        q5_normalizer: shipped_affine("q5_d2_n_gl")?,
        e5: shipped_affine("q3_d4_e5")?,
        e5_2: shipped_affine("q3_d4_e5_2")?,
        e5_4: shipped_affine("q3_d4_e5_4")?,
    })
}

/// `|GL_d(q)|`.
pub fn gl_order(d: u32, q: u128) -> u128 {
    (0..d).map(|i| q.pow(d) - q.pow(i)).product()
}

/// `|PSL_d(q)|`.
pub fn psl_order(d: u32, q: u128) -> u128 {
    gl_order(d, q) / (q - 1) / gcd(d as u64, (q - 1) as u64) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, derived_subgroup, exponent};

    #[test]
    fn small_families() {
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert!(cyclic(1).unwrap().is_trivial());
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert!(dihedral(7).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn products() {
        let d8 = dihedral(8).unwrap();
        let w = wreath_imprimitive(&d8, 2).unwrap();
        assert_eq!(w.degree(), 8);
        assert_eq!(w.order(), 128);
        let w3 = wreath_imprimitive(&cyclic(2).unwrap(), 3).unwrap();
        assert_eq!(w3.order(), 8 * 6);
        let dp = direct_product(&symmetric(4).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(dp.order(), 96);
    }

    #[test]
    fn extraspecial_groups() {
        let e = central_product_d8_q8().unwrap();
        assert_eq!(e.order(), 32);
        assert_eq!(center(&e, 100).unwrap().order(), 2);
        assert_eq!(exponent(&e, 100).unwrap(), 4);
        assert_eq!(derived_subgroup(&e).order(), 2);
        let plus = extraspecial2(2, ExtraspecialType::Plus).unwrap();
        assert_eq!(plus.order(), 32);
        // The two types differ in their number of involutions.
        let inv = |g: &PermGroup| g.elements(100).unwrap().iter().filter(|x| x.order() == 2).count();
        assert_eq!(inv(&plus), 19);
        assert_eq!(inv(&e), 11);
    }

    #[test]
    fn metacyclic_groups() {
        let g = metacyclic(7, 6, 3).unwrap();
        assert_eq!(g.order(), 42);
        assert_eq!(derived_subgroup(&g).order(), 7);
        let a = metacyclic(5, 3, 1).unwrap();
        assert_eq!(a.order(), 15);
        assert!(a.is_abelian());
        assert!(metacyclic(7, 4, 3).is_err());
        assert_eq!(metacyclic_exponents(7, 3), vec![1, 2, 4]);
    }

    #[test]
    fn out_groups() {
        let g = out_group(4, 2, 3).unwrap();
        assert_eq!(g.order(), 16);
        let g = out_group(3, 2, 2).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(derived_subgroup(&g).order(), 3);
        let g = out_group(1, 3, 5).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.order(), 6);
        assert_eq!(out_group(7, 1, 2).unwrap().order(), 2);
        assert_eq!(out_group(12, 2, 5).unwrap().order(), 48);
        assert_eq!(out_group(12, 2, 3).unwrap().order(), 16);
    }

    #[test]
    fn linear_orders() {
        assert_eq!(gl(2, 3).unwrap().order(), 48);
        assert_eq!(sl(2, 3).unwrap().order(), 24);
        assert_eq!(gl(2, 4).unwrap().order(), gl_order(2, 4));
        assert_eq!(psl(2, 9).unwrap().order(), 360);
        assert_eq!(pgl(2, 9).unwrap().order(), 720);
        let pg = pgammal(2, 9).unwrap();
        assert_eq!(pg.order(), 1440);
        assert!(derived_subgroup(&pg).equals(&psl(2, 9).unwrap()));
        assert_eq!(psl(3, 2).unwrap().order(), 168);
        assert_eq!(psl(2, 8).unwrap().order(), psl_order(2, 8));
        assert_eq!(psl(2, 7).unwrap().degree(), 8);
    }

    #[test]
    fn affine_orders() {
        assert_eq!(agl(1, 7).unwrap().order(), 42);
        assert_eq!(agl(2, 3).unwrap().order(), 432);
        assert_eq!(asl(2, 3).unwrap().order(), 216);
        assert_eq!(asl(1, 9).unwrap().order(), 9);
        let a = agammal1(27).unwrap();
        assert_eq!(a.order(), 2106);
        let d = derived_subgroup(&a);
        assert_eq!(d.order(), 351);
        assert_eq!(derived_subgroup(&d).order(), 27);
        assert!(d.equals(&asl1_squares(27).unwrap()));
        assert!(holomorph_elementary(3, 2).unwrap().equals(&agl(2, 3).unwrap()));
        assert!(holomorph_cyclic(7).unwrap().equals(&agl(1, 7).unwrap()));
        assert_eq!(holomorph_cyclic(8).unwrap().order(), 32);
    }

    #[test]
    fn normal_chains() {
        use crate::structure::is_normal;
        assert!(is_normal(&asl(2, 3).unwrap(), &agl(2, 3).unwrap()).unwrap());
        assert!(is_normal(&agl(1, 8).unwrap(), &agammal1(8).unwrap()).unwrap());
        assert!(is_normal(&psl(2, 9).unwrap(), &pgl(2, 9).unwrap()).unwrap());
        assert!(is_normal(&pgl(2, 9).unwrap(), &pgammal(2, 9).unwrap()).unwrap());
    }

    #[test]
    fn squares_group_is_two_homogeneous() {
        let g = asl1_squares(7).unwrap();
        assert_eq!(g.order(), 21);
        assert!(g.is_k_homogeneous(2).unwrap());
        assert!(!g.is_k_transitive(2).unwrap());
        let g = asl1_squares(5).unwrap();
        assert!(!g.is_k_homogeneous(2).unwrap());
    }

    #[test]
    fn case5_orders() {
        let w = case5_witnesses().unwrap();
        assert_eq!(w.q3_q8.order(), 72);
        assert_eq!(w.q5_sl2_3.order(), 600);
        assert_eq!(w.q5_normalizer.order(), 2400);
        assert_eq!(w.e5.order(), 81 * 160);
        assert_eq!(w.e5_2.order(), 81 * 320);
        assert_eq!(w.e5_4.order(), 81 * 640);
        assert!(w.e5.is_subgroup_of(&w.e5_2) && w.e5_2.is_subgroup_of(&w.e5_4));
        assert!(shipped_linear("q5_d2_sl2_3").unwrap().is_transitive());
        let q8 = shipped_linear("q3_d2_q8").unwrap();
        assert!(crate::structure::is_normal(&q8, &sl(2, 3).unwrap()).unwrap());
    }
}
