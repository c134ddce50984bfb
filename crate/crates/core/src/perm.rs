//! Permutations on `{0, .., n-1}` stored as image sequences.
//!
//! Actions are on the right: `(i)(pq) = ((i)p)q`. All text I/O is 1-based.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree. Image entries are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection of `{0, .., degree-1}`.
///
/// Ordering is lexicographic on the image sequence, which is the order used
/// for canonical coset representatives and subgroup sorting.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::PointOutOfRange { point: i + 1, degree: n });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::RepeatedPoint(i + 1));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub(crate) fn from_u16_unchecked(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation { images: images.into_boxed_slice() }
    }

    /// Builds a permutation from a closure giving the image of every point.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_images((0..degree).map(f).collect())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Unchecked `self` followed by `other`; degrees must agree.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Permutation { images: inv.into_boxed_slice() }
    }

    /// `other^-1 self other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        // (p)other maps to (p self) other.
        let mut out = vec![0u16; self.degree()];
        for (p, &sp) in self.images.iter().enumerate() {
            out[other.images[p] as usize] = other.images[sp as usize];
        }
        Permutation { images: out.into_boxed_slice() }
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.inverse().mul(&self.conjugate_by(other)))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Smallest positive `k` with `self^k = 1`.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// Sorted cycle lengths, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Disjoint cycles in the order of their smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &v)| *i != v as usize).map(|(i, _)| i)
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        parse_cycles_at(text, degree, 1, 1)
    }

    /// 1-based disjoint-cycle notation; the identity is `()`.
    pub fn format_cycles(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            s.push('(');
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

/// Parser entry used by the spec-file reader so errors carry file positions.
pub(crate) fn parse_cycles_at(
    text: &str,
    degree: usize,
    line: usize,
    col0: usize,
) -> Result<Permutation> {
    if degree > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(degree));
    }
    let err = |col: usize, msg: String| Error::Parse { line, column: col0 + col, message: msg };
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut any = false;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c != '(' {
            return Err(err(i, format!("expected '(' but found {c:?}")));
        }
        any = true;
        i += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_whitespace() || bytes[i] == ',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(err(i, "unterminated cycle".into()));
            }
            if bytes[i] == ')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, format!("unexpected character {:?}", bytes[i])));
            }
            let tok: String = bytes[start..i].iter().collect();
            let p: usize = tok.parse().map_err(|_| err(start, format!("bad point {tok:?}")))?;
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
            if used[p - 1] {
                return Err(Error::RepeatedPoint(p));
            }
            used[p - 1] = true;
            cycle.push(p - 1);
        }
        for k in 0..cycle.len() {
            images[cycle[k]] = cycle[(k + 1) % cycle.len()];
        }
    }
    if !any {
        return Err(err(0, "empty permutation text; use () for the identity".into()));
    }
    Permutation::from_images(images)
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
