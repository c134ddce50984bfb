//! Finite fields of order at most 49 and small matrices over them.
//!
//! An element of `GF(p^f)` is encoded as the integer `Σ c_i p^i`, where
//! `c_i` is the coefficient of `X^i` in its residue modulo the field's
//! modulus. Prime fields therefore use the usual integers `0..p`.

use crate::error::{Error, Result};
use crate::structure::is_prime;

/// Largest supported field order.
pub const MAX_Q: usize = 49;

/// Monic moduli, lowest coefficient first, for the non-prime fields.
const MODULI: &[(u32, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (7, 2, &[3, 6, 1]),
];

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    f: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

impl Field {
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if !is_prime(p as u64) || f == 0 {
            return Err(Error::InvalidParameter(format!("no field of order {p}^{f}")));
        }
        let q = (p as usize).checked_pow(f).filter(|&q| q <= MAX_Q).ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{f} exceeds {MAX_Q}"))
        })?;
        let modulus: Vec<u8> = if f == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|m| m.0 == p && m.1 == f)
                .map(|m| m.2.to_vec())
                .ok_or_else(|| Error::InvalidParameter(format!("no modulus for {p}^{f}")))?
        };
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(format!("modulus for {p}^{f} is reducible")));
        }
        let pu = p as usize;
        let digits = |x: usize| -> Vec<usize> {
            let mut v = vec![0; f as usize];
            let mut x = x;
            for d in v.iter_mut() {
                *d = x % pu;
                x /= pu;
            }
            v
        };
        let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * pu + c) };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * q + b] = encode(&s) as u8;
                let mut prod = vec![0usize; 2 * f as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % pu;
                    }
                }
                for k in (f as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for (i, &m) in modulus.iter().enumerate() {
                        let idx = k - f as usize + i;
                        prod[idx] = (prod[idx] + pu * pu - c * m as usize % pu) % pu;
                    }
                }
                mul[a * q + b] = encode(&prod[..f as usize]) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| {
                    Error::InvalidParameter(format!("modulus for {p}^{f} does not give a field"))
                })? as u8;
            }
        }
        let mut field = Field { p, f, q, modulus, add, mul, neg, inv, primitive: 0 };
        field.primitive = (1..q as u8)
            .find(|&a| field.mult_order(a) == q - 1)
            .ok_or_else(|| Error::InvalidParameter("multiplicative group is not cyclic".into()))?;
        Ok(field)
    }

    /// The field with `q` elements.
    pub fn of_order(q: usize) -> Result<Self> {
        for p in 2..=q as u32 {
            if q % p as usize == 0 {
                let mut f = 0;
                let mut m = q;
                while m % p as usize == 0 {
                    m /= p as usize;
                    f += 1;
                }
                if m != 1 {
                    break;
                }
                return Self::new(p, f);
            }
        }
        Err(Error::InvalidParameter(format!("{q} is not a prime power")))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, e: u64) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: u8) -> u8 {
        self.pow(a, self.p as u64)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    pub fn mult_order(&self, a: u8) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_square(&self, a: u8) -> bool {
        a == 0 || (0..self.q as u8).any(|b| self.mul(b, b) == a)
    }
}

fn poly_rem_is_zero(num: &[u8], den: &[u8], p: u32) -> bool {
    let p = p as i64;
    let mut r: Vec<i64> = num.iter().map(|&c| c as i64).collect();
    let dl = den.len();
    let lead_inv = (1..p).find(|&x| x * den[dl - 1] as i64 % p == 1).unwrap();
    for k in (dl - 1..r.len()).rev() {
        let c = r[k] * lead_inv % p;
        if c == 0 {
            continue;
        }
        for (i, &d) in den.iter().enumerate() {
            let idx = k + 1 - dl + i;
            r[idx] = ((r[idx] - c * d as i64) % p + p) % p;
        }
    }
    r[..dl - 1].iter().all(|&c| c == 0)
}

/// No monic factor of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u8], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for k in 1..=deg / 2 {
        let count = (p as usize).pow(k as u32);
        for code in 0..count {
            let mut den = Vec::with_capacity(k + 1);
            let mut c = code;
            for _ in 0..k {
                den.push((c % p as usize) as u8);
                c /= p as usize;
            }
            den.push(1);
            if poly_rem_is_zero(modulus, &den, p) {
                return false;
            }
        }
    }
    true
}

/// A `d × d` matrix, row-major. Vectors are rows and act as `v ↦ vA`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    pub d: usize,
    pub entries: Vec<u8>,
}

impl Matrix {
    pub fn identity(d: usize) -> Self {
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = 1;
        }
        Matrix { d, entries }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let d = rows.len();
        Matrix { d, entries: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.d + j]
    }

    pub fn mul(&self, other: &Matrix, k: &Field) -> Matrix {
        let d = self.d;
        let mut entries = vec![0u8; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut s = 0;
                for t in 0..d {
                    s = k.add(s, k.mul(self.at(i, t), other.at(t, j)));
                }
                entries[i * d + j] = s;
            }
        }
        Matrix { d, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.d;
        let mut entries = vec![0u8; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.at(i, j);
            }
        }
        Matrix { d, entries }
    }

    pub fn det(&self, k: &Field) -> u8 {
        let d = self.d;
        let mut a = self.entries.clone();
        let mut det = 1u8;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                }
                det = k.neg(det);
            }
            let pv = a[col * d + col];
            det = k.mul(det, pv);
            let pinv = k.inv(pv);
            for r in col + 1..d {
                let factor = k.mul(a[r * d + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..d {
                    let v = k.mul(factor, a[col * d + j]);
                    a[r * d + j] = k.sub(a[r * d + j], v);
                }
            }
        }
        det
    }

    pub fn inverse(&self, k: &Field) -> Option<Matrix> {
        let d = self.d;
        let mut a = self.entries.clone();
        let mut b = Matrix::identity(d).entries;
        for col in 0..d {
            let piv = (col..d).find(|&r| a[r * d + col] != 0)?;
            for j in 0..d {
                a.swap(piv * d + j, col * d + j);
                b.swap(piv * d + j, col * d + j);
            }
            let pinv = k.inv(a[col * d + col]);
            for j in 0..d {
                a[col * d + j] = k.mul(a[col * d + j], pinv);
                b[col * d + j] = k.mul(b[col * d + j], pinv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = a[r * d + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..d {
                    let va = k.mul(factor, a[col * d + j]);
                    a[r * d + j] = k.sub(a[r * d + j], va);
                    let vb = k.mul(factor, b[col * d + j]);
                    b[r * d + j] = k.sub(b[r * d + j], vb);
                }
            }
        }
        Some(Matrix { d, entries: b })
    }

    /// `vA` for a row vector `v`.
    pub fn apply(&self, v: &[u8], k: &Field) -> Vec<u8> {
        let d = self.d;
        (0..d)
            .map(|j| (0..d).fold(0, |s, i| k.add(s, k.mul(v[i], self.at(i, j)))))
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix, k: &Field) -> Matrix {
        let (a, b) = (self.d, other.d);
        let d = a * b;
        let mut entries = vec![0u8; d * d];
        for i in 0..a {
            for j in 0..a {
                for r in 0..b {
                    for s in 0..b {
                        entries[(i * b + r) * d + j * b + s] = k.mul(self.at(i, j), other.at(r, s));
                    }
                }
            }
        }
        Matrix { d, entries }
    }
}
