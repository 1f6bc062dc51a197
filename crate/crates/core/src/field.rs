//! Finite fields `GF(p^r)` and dense matrices over them.
//!
//! Elements are represented by their index in `[0, q)`. For `r = 1` the
//! index is the residue mod `p`. For `r > 1` the index `i` stands for the
//! polynomial `sum c_j x^j` whose coefficients are the base-`p` digits of
//! `i`, reduced modulo the lexicographically smallest monic irreducible
//! polynomial of degree `r` over `GF(p)`. Index 0 is zero and index 1 is one
//! in every construction.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest field order built unless a caller asks for more.
pub const DEFAULT_FIELD_BOUND: u64 = 256;

/// Default ceiling on `q^(m*m)` for exhaustive matrix enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 22;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, r)` with `n = p^r` when `n` is a prime power.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, r)] => Some((*p, *r)),
        _ => None,
    }
}

/// A prime power `q = p^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    p: u32,
    r: u32,
    q: u32,
}

impl PrimePower {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidArgument("exponent must be at least 1".into()));
        }
        let q = p
            .checked_pow(r)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::BoundExceeded {
                what: "prime power",
                size: format!("{p}^{r}"),
                bound: u32::MAX as u64,
            })?;
        Ok(PrimePower {
            p: p as u32,
            r,
            q: q as u32,
        })
    }

    pub fn from_order(q: u64) -> Result<Self> {
        let (p, r) = as_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, r)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }
}

/// A monic or general polynomial over a [`GaloisField`], ascending
/// coefficients, no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldPoly {
    coeffs: Vec<u32>,
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    /// Monic polynomial `x^deg + sum lower[j] x^j`.
    pub fn monic(lower: &[u32]) -> Self {
        let mut coeffs = lower.to_vec();
        coeffs.push(1);
        FieldPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, c) => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Table-driven `GF(q)`.
#[derive(Clone, Debug)]
pub struct GaloisField {
    order: PrimePower,
    /// Defining polynomial over `GF(p)`, ascending, monic. `[0, 1]` (= x) for prime fields.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl GaloisField {
    /// Builds `GF(p^r)` under the default order bound.
    pub fn new(p: u64, r: u32) -> Result<Self> {
        Self::with_bound(p, r, DEFAULT_FIELD_BOUND)
    }

    /// Builds `GF(q)` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let pp = PrimePower::from_order(q)?;
        Self::new(pp.p(), pp.r())
    }

    pub fn with_bound(p: u64, r: u32, bound: u64) -> Result<Self> {
        let order = PrimePower::new(p, r)?;
        let bound = bound.min(u16::MAX as u64 + 1);
        if order.q() > bound {
            return Err(Error::FieldTooLarge {
                q: order.q(),
                bound,
            });
        }
        let prime = Self::prime_field(order.p);
        if r == 1 {
            return Ok(prime);
        }
        let modulus = prime.find_irreducible(r as usize).coeffs;
        Ok(Self::extension(order, &prime, modulus))
    }

    fn prime_field(p: u32) -> Self {
        let q = p as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = ((a + b) % q) as u16;
                mul[a * q + b] = ((a * b) % q) as u16;
            }
        }
        Self::finish(
            PrimePower { p, r: 1, q: p },
            vec![0, 1],
            add,
            mul,
        )
    }

    fn extension(order: PrimePower, prime: &GaloisField, modulus: Vec<u32>) -> Self {
        let q = order.q as usize;
        let p = order.p;
        let r = order.r as usize;
        let digits = |mut i: usize| -> Vec<u32> {
            let mut d = vec![0u32; r];
            for slot in d.iter_mut() {
                *slot = (i % p as usize) as u32;
                i /= p as usize;
            }
            d
        };
        let undigits = |d: &[u32]| -> usize {
            d.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let reps: Vec<Vec<u32>> = (0..q).map(digits).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = reps[a]
                    .iter()
                    .zip(&reps[b])
                    .map(|(&x, &y)| prime.add(x, y))
                    .collect();
                add[a * q + b] = undigits(&s) as u16;
                let prod = prime.poly_mul(&FieldPoly::new(reps[a].clone()), &FieldPoly::new(reps[b].clone()));
                let red = prime.poly_rem(&prod, &FieldPoly { coeffs: modulus.clone() });
                let mut c = red.coeffs;
                c.resize(r, 0);
                mul[a * q + b] = undigits(&c) as u16;
            }
        }
        Self::finish(order, modulus, add, mul)
    }

    fn finish(order: PrimePower, modulus: Vec<u32>, add: Vec<u16>, mul: Vec<u16>) -> Self {
        let q = order.q as usize;
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        GaloisField {
            order,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> PrimePower {
        self.order
    }

    pub fn q(&self) -> u64 {
        self.order.q()
    }

    pub fn characteristic(&self) -> u64 {
        self.order.p()
    }

    /// The defining polynomial over the prime field (`x` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order.q as usize + b as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order.q as usize + b as usize] as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize] as u32)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order.q
    }

    // ---- polynomials over this field ----

    pub fn poly_add(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).copied().unwrap_or(0);
                let y = b.coeffs.get(i).copied().unwrap_or(0);
                self.add(x, y)
            })
            .collect();
        FieldPoly::new(c)
    }

    pub fn poly_mul(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        if a.is_zero() || b.is_zero() {
            return FieldPoly::new(vec![]);
        }
        let mut c = vec![0u32; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                c[i + j] = self.add(c[i + j], self.mul(x, y));
            }
        }
        FieldPoly::new(c)
    }

    /// Remainder of `a` modulo a nonzero `b`.
    pub fn poly_rem(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.inv(b.coeffs[db]).expect("nonzero leading coefficient");
        let mut r = a.coeffs.clone();
        while r.len() > db {
            let top = r.len() - 1;
            let c = self.mul(r[top], lead_inv);
            if c != 0 {
                let shift = top - db;
                for (j, &bj) in b.coeffs.iter().enumerate() {
                    r[shift + j] = self.sub(r[shift + j], self.mul(c, bj));
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        FieldPoly::new(r)
    }

    fn poly_powmod(&self, base: &FieldPoly, mut e: u64, modulus: &FieldPoly) -> FieldPoly {
        let mut acc = FieldPoly::new(vec![1]);
        let mut b = self.poly_rem(base, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), modulus);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), modulus);
            e >>= 1;
        }
        acc
    }

    /// All monic polynomials of degree `m`, in index order of their lower
    /// coefficients `c_0 + c_1 q + ... + c_{m-1} q^{m-1}`.
    pub fn monic_polys(&self, m: usize) -> impl Iterator<Item = FieldPoly> + '_ {
        let q = self.order.q as u64;
        let total = q.checked_pow(m as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut t| {
            let mut lower = vec![0u32; m];
            for c in lower.iter_mut() {
                *c = (t % q) as u32;
                t /= q;
            }
            FieldPoly::monic(&lower)
        })
    }

    pub fn has_root(&self, f: &FieldPoly) -> bool {
        self.elements().any(|x| self.poly_eval(f, x) == 0)
    }

    pub fn poly_eval(&self, f: &FieldPoly, x: u32) -> u32 {
        f.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Monic irreducibles of degree `d`, in the same order as [`Self::monic_polys`].
    pub fn monic_irreducibles(&self, d: usize) -> Vec<FieldPoly> {
        self.monic_polys(d).filter(|f| self.is_irreducible(f)).collect()
    }

    /// Irreducibility by trial division: no roots, and no monic irreducible
    /// factor of degree `2..=deg/2`.
    pub fn is_irreducible(&self, f: &FieldPoly) -> bool {
        let Some(m) = f.degree() else { return false };
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        if self.has_root(f) {
            return false;
        }
        for d in 2..=m / 2 {
            for g in self.monic_irreducibles(d) {
                if self.poly_rem(f, &g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The first monic irreducible polynomial of degree `m` (index order of
    /// the lower coefficients).
    pub fn find_irreducible(&self, m: usize) -> FieldPoly {
        assert!(m >= 1, "degree must be positive");
        self.monic_polys(m)
            .find(|f| self.is_irreducible(f))
            .expect("irreducible polynomials exist in every degree")
    }

    /// Whether `f` is irreducible and `x` has order `q^m - 1` modulo `f`.
    pub fn is_primitive(&self, f: &FieldPoly) -> bool {
        let Some(m) = f.degree() else { return false };
        if m == 0 || !self.is_irreducible(f) {
            return false;
        }
        let Some(group) = self.q().checked_pow(m as u32).map(|n| n - 1) else {
            return false;
        };
        let x = FieldPoly::new(vec![0, 1]);
        if !self.poly_powmod(&x, group, f).is_one() {
            return false;
        }
        factorize(group)
            .iter()
            .all(|&(l, _)| !self.poly_powmod(&x, group / l, f).is_one())
    }

    /// The first primitive polynomial of degree `m`, in the same order as
    /// [`Self::find_irreducible`].
    pub fn find_primitive(&self, m: usize) -> FieldPoly {
        assert!(m >= 1, "degree must be positive");
        self.monic_polys(m)
            .find(|f| self.is_primitive(f))
            .expect("primitive polynomials exist in every degree")
    }

    // ---- matrices ----

    fn check(&self, m: &Matrix) -> Result<()> {
        if let Some(&bad) = m.entries.iter().find(|&&e| e >= self.order.q) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} is not an element of GF({})",
                self.q()
            )));
        }
        Ok(())
    }

    /// Reduced row-echelon form.
    pub fn rref(&self, m: &Matrix) -> Matrix {
        let mut a = m.clone();
        self.rref_in_place(&mut a);
        a
    }

    /// Reduces in place and returns the rank.
    pub fn rref_in_place(&self, a: &mut Matrix) -> usize {
        let (rows, cols) = (a.rows, a.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pivot) = (r..rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            a.swap_rows(r, pivot);
            let inv = self.inv(a.get(r, c)).unwrap();
            for j in c..cols {
                let v = self.mul(a.get(r, j), inv);
                a.set(r, j, v);
            }
            for i in 0..rows {
                let f = a.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = self.sub(a.get(i, j), self.mul(f, a.get(r, j)));
                    a.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    pub fn rank(&self, m: &Matrix) -> usize {
        let mut a = m.clone();
        self.rref_in_place(&mut a)
    }

    pub fn is_invertible(&self, m: &Matrix) -> Result<bool> {
        if m.rows != m.cols {
            return Err(Error::NotSquare {
                rows: m.rows,
                cols: m.cols,
            });
        }
        self.check(m)?;
        Ok(self.rank(m) == m.rows)
    }

    pub fn mat_add(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_shape(b)?;
        Ok(a.zip_with(b, |x, y| self.add(x, y)))
    }

    pub fn mat_sub(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_shape(b)?;
        Ok(a.zip_with(b, |x, y| self.sub(x, y)))
    }

    pub fn mat_scale(&self, c: u32, a: &Matrix) -> Matrix {
        Matrix {
            rows: a.rows,
            cols: a.cols,
            entries: a.entries.iter().map(|&x| self.mul(c, x)).collect(),
        }
    }

    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.cols != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                a.rows, a.cols, b.rows, b.cols
            )));
        }
        let mut out = Matrix::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let v = self.add(out.get(i, j), self.mul(x, b.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mat_pow(&self, a: &Matrix, mut e: u64) -> Result<Matrix> {
        if a.rows != a.cols {
            return Err(Error::NotSquare {
                rows: a.rows,
                cols: a.cols,
            });
        }
        let mut acc = Matrix::identity(a.rows);
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mat_mul(&acc, &base)?;
            }
            base = self.mat_mul(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `f(A)` for a square matrix `A`.
    pub fn poly_at_matrix(&self, f: &FieldPoly, a: &Matrix) -> Result<Matrix> {
        let mut acc = Matrix::zeros(a.rows, a.cols);
        for &c in f.coeffs.iter().rev() {
            acc = self.mat_mul(&acc, a)?;
            acc = self.mat_add(&acc, &self.mat_scale(c, &Matrix::identity(a.rows)))?;
        }
        Ok(acc)
    }

    /// Companion matrix with ones on the superdiagonal and last row
    /// `-c_0, ..., -c_{m-1}`; its characteristic polynomial is `poly`.
    pub fn companion_matrix(&self, poly: &FieldPoly) -> Result<Matrix> {
        let m = match poly.degree() {
            Some(d) if d >= 1 && poly.is_monic() => d,
            _ => return Err(Error::NotMonic),
        };
        let mut out = Matrix::zeros(m, m);
        for i in 0..m - 1 {
            out.set(i, i + 1, 1);
        }
        for j in 0..m {
            out.set(m - 1, j, self.neg(poly.coeffs[j]));
        }
        Ok(out)
    }

    /// Every invertible `m x m` matrix, in lexicographic order of the
    /// row-major entry indices.
    pub fn enumerate_gl(&self, m: usize, bound: u64) -> Result<Vec<Matrix>> {
        let total = self
            .q()
            .checked_pow((m * m) as u32)
            .filter(|&t| t <= bound)
            .ok_or_else(|| Error::BoundExceeded {
                what: "matrix enumeration",
                size: format!("{}^{}", self.q(), m * m),
                bound,
            })?;
        let q = self.order.q;
        let mut out = Vec::new();
        let mut entries = vec![0u32; m * m];
        for _ in 0..total {
            let mat = Matrix {
                rows: m,
                cols: m,
                entries: entries.clone(),
            };
            if self.rank(&mat) == m {
                out.push(mat);
            }
            // odometer increment, last entry fastest
            for e in entries.iter_mut().rev() {
                *e += 1;
                if *e < q {
                    break;
                }
                *e = 0;
            }
        }
        Ok(out)
    }
}

/// `|GL_m(q)| = prod_{k<m} (q^m - q^k)`.
pub fn gl_order(m: usize, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qm = q.pow(m as u32);
    (0..m).fold(BigUint::one(), |acc, k| acc * (&qm - q.pow(k as u32)))
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// Dense row-major matrix of field-element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a square or rectangular matrix from nested rows.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Parses a row-major digit string such as `"2201"` (base 36 digits).
    pub fn from_digits(s: &str, rows: usize, cols: usize) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, entries)
    }

    /// Row-major digit string; entries must be below 36.
    pub fn to_digits(&self) -> String {
        self.entries
            .iter()
            .map(|&e| DIGITS[e as usize] as char)
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Matrix::new(self.rows, self.cols + other.cols, entries)
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(u32, u32) -> u32) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f2 = GaloisField::new(2, 1).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.inv(2), Some(2));
        assert_eq!(f3.inv(0), None);
    }

    #[test]
    fn gf4_multiplicative_group_is_cyclic_of_order_3() {
        let f = GaloisField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // some element has order exactly 3
        let gen = (1..4).find(|&a| f.pow(a, 1) != 1 && f.pow(a, 3) == 1 && a != 1);
        let g = gen.expect("generator");
        let powers: std::collections::BTreeSet<u32> = (0..3).map(|i| f.pow(g, i)).collect();
        assert_eq!(powers, [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(GaloisField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            GaloisField::new(2, 10).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
        assert_eq!(GaloisField::of_order(6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::of_order(q).unwrap();
            let els: Vec<u32> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if q <= 9 {
                        for &c in &els {
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rank_examples() {
        let f2 = GaloisField::new(2, 1).unwrap();
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(f2.rank(&Matrix::zeros(2, 2)), 0);
        assert_eq!(f3.rank(&Matrix::identity(3)), 3);
        assert_eq!(f2.rank(&m(&[&[1, 1], &[1, 1]])), 1);
    }

    #[test]
    fn invertibility_examples() {
        let f5 = GaloisField::new(5, 1).unwrap();
        let f3 = GaloisField::new(3, 1).unwrap();
        assert!(f5.is_invertible(&Matrix::identity(2)).unwrap());
        assert!(!f5.is_invertible(&Matrix::zeros(2, 2)).unwrap());
        assert!(f3.is_invertible(&m(&[&[0, 2], &[1, 0]])).unwrap());
        assert!(matches!(
            f3.is_invertible(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn rref_examples() {
        let f2 = GaloisField::new(2, 1).unwrap();
        assert_eq!(f2.rref(&Matrix::identity(2)), Matrix::identity(2));
        let a = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(f2.rref(&a), a);
        assert_eq!(f2.rref(&m(&[&[1, 1], &[1, 0]])), Matrix::identity(2));
    }

    #[test]
    fn rref_idempotent_and_rank_preserving_2x2() {
        for q in [2u64, 3] {
            let f = GaloisField::of_order(q).unwrap();
            let q = q as u32;
            for code in 0..q.pow(4) {
                let e: Vec<u32> = (0..4).map(|i| (code / q.pow(3 - i)) % q).collect();
                let a = Matrix::new(2, 2, e).unwrap();
                let r = f.rref(&a);
                assert_eq!(f.rref(&r), r);
                assert_eq!(f.rank(&r), f.rank(&a));
                // row space preserved: stacking adds no rank
                assert_eq!(f.rank(&a.vstack(&r).unwrap()), f.rank(&a));
            }
        }
    }

    #[test]
    fn gl_enumeration_matches_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = GaloisField::of_order(q).unwrap();
            let gl = f.enumerate_gl(1, DEFAULT_ENUMERATION_BOUND).unwrap();
            assert_eq!(BigUint::from(gl.len()), gl_order(1, q));
        }
        for (m, q, expect) in [(2usize, 2u64, 6usize), (2, 3, 48), (3, 2, 168)] {
            let f = GaloisField::of_order(q).unwrap();
            let gl = f.enumerate_gl(m, DEFAULT_ENUMERATION_BOUND).unwrap();
            assert_eq!(gl.len(), expect);
            assert_eq!(BigUint::from(expect), gl_order(m, q));
            assert!(gl.windows(2).all(|w| w[0].entries() < w[1].entries()));
        }
        assert_eq!(gl_order(0, 7), BigUint::one());
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(f3.enumerate_gl(1, 100).unwrap().len(), 2);
        assert!(f3.enumerate_gl(3, 1000).is_err());
    }

    #[test]
    fn gl_2_2_is_filter_of_all_16() {
        let f = GaloisField::new(2, 1).unwrap();
        let mut count = 0;
        for code in 0u32..16 {
            let (a, b, c, d) = (code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1);
            if (a * d + b * c) % 2 == 1 {
                count += 1;
            }
        }
        assert_eq!(count, 6);
        assert_eq!(f.enumerate_gl(2, 16).unwrap().len(), count);
    }

    #[test]
    fn irreducible_examples() {
        let f2 = GaloisField::new(2, 1).unwrap();
        assert_eq!(f2.find_irreducible(1).coeffs(), &[0, 1]);
        assert_eq!(f2.find_irreducible(2).coeffs(), &[1, 1, 1]);
        let f3 = GaloisField::new(3, 1).unwrap();
        let g = f3.find_irreducible(2);
        assert_eq!(g.degree(), Some(2));
        assert!((0..3).all(|x| f3.poly_eval(&g, x) != 0));
        assert_eq!(g.coeffs(), &[1, 0, 1]);
        // degree 4 over GF(2): x^4+x+1 is first; x^4+x^2+1 = (x^2+x+1)^2 has no root but is reducible
        assert_eq!(f2.find_irreducible(4).coeffs(), &[1, 1, 0, 0, 1]);
        assert!(!f2.is_irreducible(&FieldPoly::new(vec![1, 0, 1, 0, 1])));
        assert!(!f2.has_root(&FieldPoly::new(vec![1, 0, 1, 0, 1])));
    }

    #[test]
    fn primitive_polynomials() {
        let f3 = GaloisField::new(3, 1).unwrap();
        // x^2+1 is irreducible but x has order 4
        assert!(f3.is_irreducible(&FieldPoly::new(vec![1, 0, 1])));
        assert!(!f3.is_primitive(&FieldPoly::new(vec![1, 0, 1])));
        let p = f3.find_primitive(2);
        assert!(f3.is_primitive(&p));
        let f2 = GaloisField::new(2, 1).unwrap();
        assert_eq!(f2.find_primitive(1).coeffs(), &[1, 1]);
    }

    #[test]
    fn companion_examples() {
        let f2 = GaloisField::new(2, 1).unwrap();
        let c = f2.companion_matrix(&FieldPoly::new(vec![1, 1])).unwrap();
        assert_eq!(c, m(&[&[1]]));
        let c = f2.companion_matrix(&FieldPoly::new(vec![1, 1, 1])).unwrap();
        assert_eq!(c, m(&[&[0, 1], &[1, 1]]));
        let f3 = GaloisField::new(3, 1).unwrap();
        let c = f3.companion_matrix(&FieldPoly::new(vec![1, 0, 1])).unwrap();
        assert_eq!(c, m(&[&[0, 1], &[2, 0]]));
        assert_eq!(
            f3.companion_matrix(&FieldPoly::new(vec![1, 0, 2])).unwrap_err(),
            Error::NotMonic
        );
    }

    #[test]
    fn companion_of_irreducible_has_no_eigenvalue() {
        for q in [2u64, 3, 4, 5] {
            let f = GaloisField::of_order(q).unwrap();
            for m in [2usize, 3] {
                let poly = f.find_irreducible(m);
                let c = f.companion_matrix(&poly).unwrap();
                // Cayley-Hamilton: poly annihilates its companion
                assert_eq!(f.poly_at_matrix(&poly, &c).unwrap(), Matrix::zeros(m, m));
                for lambda in f.elements() {
                    let shifted = f
                        .mat_sub(&c, &f.mat_scale(lambda, &Matrix::identity(m)))
                        .unwrap();
                    assert!(f.is_invertible(&shifted).unwrap(), "q={q} m={m} lambda={lambda}");
                }
            }
        }
    }

    #[test]
    fn digits_roundtrip() {
        let a = Matrix::from_digits("2201", 2, 2).unwrap();
        assert_eq!(a, m(&[&[2, 2], &[0, 1]]));
        assert_eq!(a.to_digits(), "2201");
    }
}
