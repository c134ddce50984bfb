//! Regenerates the shipped matrix groups in `crates/core/data/`.
//!
//! Over GF(3), `E = D8∘Q8` is built as Kronecker products inside GL4(3).
//! A seeded random search over GL4(3) collects matrices normalizing `E` until
//! they generate `N = N_GL4(3)(E)` of order 3840. An element of order 5 then
//! gives `E:5`, its normalizer in `N` is `(E:5).4`, and the index-2 layer
//! between them is `(E:5).2`.
//!
//! In dimension 2, `Q8 ≤ SL2(3)` is written down directly, and over GF(5)
//! the normalizers of `Q8` in SL2(5) and GL2(5) come from an exact scan.
//!
//! Run with `cargo run --release -p derivant-core --example case5_search`.

use std::path::PathBuf;

use derivant_core::constructors::{act_affine, act_nonzero_vectors, gl_generators, sl_generators, vectors};
use derivant_core::datafile::render;
use derivant_core::field::{Field, Matrix};
use derivant_core::normalizer::{normalizer_in, Strategy};
use derivant_core::{Budgets, PermGroup, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn linear(k: &Field, d: usize, mats: &[Matrix]) -> PermGroup {
    act_nonzero_vectors(k, d, mats, false).unwrap()
}

/// Reads a linear map back off its action on the nonzero vectors.
fn to_matrix(k: &Field, d: usize, g: &Permutation) -> Matrix {
    let pts = vectors(k, d);
    let q = k.q();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        let label = q.pow((d - 1 - i) as u32) - 1;
        entries.extend_from_slice(&pts[g.image(label) + 1]);
    }
    Matrix { d, entries }
}

/// A short generating set of `target` that starts from `start`.
fn short_gens(k: &Field, d: usize, start: &[Matrix], target: &PermGroup, rng: &mut ChaCha8Rng) -> Vec<Matrix> {
    let mut mats = start.to_vec();
    while linear(k, d, &mats).order() != target.order() {
        let g = target.random_element(rng);
        let m = to_matrix(k, d, &g);
        let before = linear(k, d, &mats).order();
        mats.push(m);
        if linear(k, d, &mats).order() == before {
            mats.pop();
        }
    }
    mats
}

fn write(dir: &PathBuf, name: &str, k: &Field, d: usize, comment: &str, mats: &[Matrix]) {
    let text = render(k, d, comment, mats);
    std::fs::write(dir.join(format!("{name}.txt")), text).unwrap();
    let affine = act_affine(k, d, mats, false).unwrap();
    println!("{name}: {} matrices, affine order {}", mats.len(), affine.order());
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    let budgets = Budgets::default();

    let k3 = Field::new(3, 1).unwrap();
    let a = Matrix::from_rows(&[&[0, 1], &[2, 0]]);
    let b = Matrix::from_rows(&[&[1, 0], &[0, 2]]);
    let c = Matrix::from_rows(&[&[1, 1], &[1, 2]]);
    let q8_3 = vec![a.clone(), c.clone()];
    assert_eq!(linear(&k3, 2, &q8_3).order(), 8);
    write(&dir, "q3_d2_q8", &k3, 2, "Q8, the Sylow 2-subgroup of SL2(3)", &q8_3);

    let i2 = Matrix::identity(2);
    let e_gens = vec![a.kron(&i2, &k3), b.kron(&i2, &k3), i2.kron(&a, &k3), i2.kron(&c, &k3)];
    let e = linear(&k3, 4, &e_gens);
    assert_eq!(e.order(), 32);

    let mut found: Vec<Matrix> = e_gens.clone();
    let mut n = e.clone();
    let mut tries = 0u64;
    while n.order() < 3840 {
        tries += 1;
        let m = Matrix { d: 4, entries: (0..16).map(|_| rng.gen_range(0..3u8)).collect() };
        if m.det(&k3) == 0 {
            continue;
        }
        let g = linear(&k3, 4, &[m.clone()]).generators()[0].clone();
        if e.generators().iter().all(|x| e.contains(&x.conjugate_by(&g))) && !n.contains(&g) {
            found.push(m);
            n = linear(&k3, 4, &found);
        }
    }
    println!("N_GL4(3)(E) of order {} after {tries} random matrices", n.order());

    let x = loop {
        let g = n.random_element(&mut rng);
        if g.order() == 5 {
            break to_matrix(&k3, 4, &g);
        }
    };
    let mut e5 = e_gens.clone();
    e5.push(x);
    let k160 = linear(&k3, 4, &e5);
    assert_eq!(k160.order(), 160);
    let (m640, _) = normalizer_in(&n, &k160, Strategy::ExactScan, &budgets).unwrap();
    assert_eq!(m640.order(), 640);
    let e5_4 = short_gens(&k3, 4, &e5, &m640, &mut rng);
    let e5_2 = loop {
        let y = to_matrix(&k3, 4, &m640.random_element(&mut rng));
        let mut mats = e5.clone();
        mats.push(y);
        if linear(&k3, 4, &mats).order() == 320 {
            break mats;
        }
    };
    write(&dir, "q3_d4_e5", &k3, 4, "E:5 in GL4(3), E = D8∘Q8 extraspecial of order 32", &e5);
    write(&dir, "q3_d4_e5_2", &k3, 4, "(E:5).2 in GL4(3)", &e5_2);
    write(&dir, "q3_d4_e5_4", &k3, 4, "(E:5).4 = N_N(E:5), N = N_GL4(3)(E)", &e5_4);

    let k5 = Field::new(5, 1).unwrap();
    let q8_5 = vec![Matrix::from_rows(&[&[0, 1], &[4, 0]]), Matrix::from_rows(&[&[0, 2], &[2, 0]])];
    let q8 = linear(&k5, 2, &q8_5);
    assert_eq!(q8.order(), 8);
    let sl25 = linear(&k5, 2, &sl_generators(&k5, 2));
    let gl25 = linear(&k5, 2, &gl_generators(&k5, 2));
    let (nsl, _) = normalizer_in(&sl25, &q8, Strategy::ExactScan, &budgets).unwrap();
    let (ngl, _) = normalizer_in(&gl25, &q8, Strategy::ExactScan, &budgets).unwrap();
    assert_eq!((nsl.order(), ngl.order()), (24, 96));
    let nsl_gens = short_gens(&k5, 2, &q8_5, &nsl, &mut rng);
    let ngl_gens = short_gens(&k5, 2, &nsl_gens, &ngl, &mut rng);
    write(&dir, "q5_d2_sl2_3", &k5, 2, "N_SL2(5)(Q8) = SL2(3)", &nsl_gens);
    write(&dir, "q5_d2_n_gl", &k5, 2, "N_GL2(5)(Q8), order 96", &ngl_gens);
}
