//! Partitions, 2-distinct partitions, parity counts and truncated
//! q-series, with checks relating them to the coefficients of the
//! extension polynomials `C_{m,k}(q)`.

#![allow(non_snake_case)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::{binomial, c_extension_poly};
use crate::poly::IntPoly;

/// Anything drawn as a Young diagram with a number of rows.
pub trait RowCount {
    fn rows(&self) -> usize;
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl RowCount for Partition {
    fn rows(&self) -> usize {
        self.parts.len()
    }
}

/// A partition whose parts are split into red and white, each strictly
/// decreasing. Either colour may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoDistinctPartition {
    red: Vec<u32>,
    white: Vec<u32>,
}

fn strictly_decreasing_positive(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1]) && v.last().is_none_or(|&x| x > 0)
}

impl TwoDistinctPartition {
    pub fn new(red: Vec<u32>, white: Vec<u32>) -> Result<Self> {
        if !strictly_decreasing_positive(&red) || !strictly_decreasing_positive(&white) {
            return Err(Error::InvalidArgument(format!(
                "red {red:?} and white {white:?} must be strictly decreasing and positive"
            )));
        }
        Ok(TwoDistinctPartition { red, white })
    }

    pub fn red(&self) -> &[u32] {
        &self.red
    }

    pub fn white(&self) -> &[u32] {
        &self.white
    }

    pub fn weight(&self) -> u32 {
        self.red.iter().chain(&self.white).sum()
    }
}

impl RowCount for TwoDistinctPartition {
    fn rows(&self) -> usize {
        self.red.len() + self.white.len()
    }
}

/// Even-row members minus odd-row members. The empty diagram is even.
pub fn parity_count<'a, T: RowCount + 'a>(items: impl IntoIterator<Item = &'a T>) -> i64 {
    items
        .into_iter()
        .map(|x| if x.rows() % 2 == 0 { 1 } else { -1 })
        .sum()
}

fn weakly_decreasing(h: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if h == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(h)).rev() {
        cur.push(p);
        weakly_decreasing(h - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// Partitions of `h` with parts at most `max_part` and at most `max_len`
/// parts, in reverse lexicographic order (`[4], [3,1], [2,2], ...`).
pub fn enumerate_partitions(h: u32, max_part: Option<u32>, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    weakly_decreasing(h, max_part.unwrap_or(h), max_len.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

fn strict(h: u32, max_part: u32, len: Option<usize>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if h == 0 {
        if len.is_none_or(|l| l == cur.len()) {
            out.push(cur.clone());
        }
        return;
    }
    if len.is_some_and(|l| cur.len() >= l) {
        return;
    }
    for p in (1..=max_part.min(h)).rev() {
        cur.push(p);
        strict(h - p, p - 1, len, cur, out);
        cur.pop();
    }
}

/// Strictly decreasing partitions of `h`, optionally with exactly `len` parts.
pub fn enumerate_distinct(h: u32, len: Option<usize>) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    strict(h, h, len, &mut Vec::new(), &mut out);
    out
}

/// `D2(h, k)`: 2-distinct partitions of `h` with exactly `k` red parts.
/// Ordered by decreasing red weight, then reverse lexicographically.
pub fn enumerate_D2(h: u32, k: usize) -> Vec<TwoDistinctPartition> {
    let mut out = Vec::new();
    for r in (0..=h).rev() {
        let reds = enumerate_distinct(r, Some(k));
        if reds.is_empty() {
            continue;
        }
        let whites = enumerate_distinct(h - r, None);
        for red in &reds {
            for white in &whites {
                out.push(TwoDistinctPartition {
                    red: red.clone(),
                    white: white.clone(),
                });
            }
        }
    }
    out
}

/// Removes one cell from every red row; red rows of length 1 vanish.
/// Maps `D2(h, k)` bijectively onto `D2(h-k, k) ∪ D2(h-k, k-1)`.
pub fn dist2p_bijection(x: &TwoDistinctPartition) -> TwoDistinctPartition {
    TwoDistinctPartition {
        red: x.red.iter().map(|&p| p - 1).filter(|&p| p > 0).collect(),
        white: x.white.clone(),
    }
}

/// Inverse of [`dist2p_bijection`] for a source with `k` red parts: adds a
/// cell to every red row and, if one row is missing, a new red row of length 1.
pub fn dist2p_inverse(y: &TwoDistinctPartition, k: usize) -> Result<TwoDistinctPartition> {
    let mut red: Vec<u32> = y.red.iter().map(|&p| p + 1).collect();
    match k.checked_sub(red.len()) {
        Some(0) => {}
        Some(1) => red.push(1),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "{} red parts cannot come from {k}",
                y.red.len()
            )))
        }
    }
    Ok(TwoDistinctPartition {
        red,
        white: y.white.clone(),
    })
}

/// A power series known modulo `q^(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Truncates (or zero-pads) `coeffs` to degree `n`.
    pub fn new(mut coeffs: Vec<BigInt>, n: usize) -> Self {
        coeffs.resize(n + 1, BigInt::zero());
        Series { coeffs }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![BigInt::one()], n)
    }

    /// Highest known degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product known to the smaller of the two orders.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; requires constant term `±1`.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::InvalidArgument("series constant term must be a unit".into()));
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone();
        for d in 1..=n {
            let s: BigInt = (1..=d).map(|i| &self.coeffs[i] * &inv[d - i]).sum();
            inv[d] = -(s * c0);
        }
        Ok(Series { coeffs: inv })
    }

    pub fn pow(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Series::one(self.order()), |acc, _| acc.mul(&base)))
    }
}

/// Coefficients of `Π_{i=1}^{n} (1 - q^i)^e` modulo `q^(n+1)`.
pub fn qseries_product(e: i64, n: usize) -> Vec<BigInt> {
    let base = (1..=n).fold(Series::one(n), |acc, i| {
        let mut f = vec![BigInt::zero(); i + 1];
        f[0] = BigInt::one();
        f[i] = -BigInt::one();
        acc.mul(&Series::new(f, n))
    });
    base.pow(e).expect("constant term is 1").coeffs
}

/// `(-1)^m q^{m(m-1)/2} Π_{j=0}^{m-1-k} (1 - q^{m-j})`.
pub fn distcoeff_poly(m: usize, k: usize) -> IntPoly {
    let prod = (0..m.saturating_sub(k)).fold(IntPoly::one(), |acc, j| {
        acc * (IntPoly::one() - IntPoly::monomial(1, m - j))
    });
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    prod.shift(m * m.saturating_sub(1) / 2).scale(&BigInt::from(sign))
}

/// Coefficient of `q^{m²-h}` in [`distcoeff_poly`] against `PC(D2(h, k))`.
pub fn distcoeff_check(m: usize, k: usize, h: usize) -> Result<bool> {
    if h > m {
        return Err(Error::InvalidArgument(format!("h={h} exceeds m={m}")));
    }
    if k > m {
        return Err(Error::InvalidArgument(format!("k={k} exceeds m={m}")));
    }
    let coeff = distcoeff_poly(m, k).coeff(m * m - h);
    Ok(coeff == BigInt::from(parity_count(&enumerate_D2(h as u32, k))))
}

/// Coefficient of `q^{m²-h}` in `C_{m,k}` equals that of `q^h` in
/// `Π (1 - q^i)^{k-1}`, for every `h <= m`.
pub fn coeffs_theorem_check(m: usize, k: usize) -> Result<bool> {
    let c = c_extension_poly(m, k)?;
    let series = qseries_product(k as i64 - 1, m);
    Ok((0..=m).all(|h| c.coeff(m * m - h) == series[h]))
}

/// Coefficient of `q^{m²-h}` in `C_{m,2}` equals the parity count of distinct
/// partitions of `h` fitting an `m x m` grid, for every `h`.
pub fn distinctp_check(m: usize) -> Result<bool> {
    let c = c_extension_poly(m, 2)?;
    Ok((0..=m * m).all(|h| {
        let pc = parity_count(
            &enumerate_partitions(h as u32, Some(m as u32), Some(m))
                .into_iter()
                .filter(Partition::is_distinct)
                .collect::<Vec<_>>(),
        );
        c.coeff(m * m - h) == BigInt::from(pc)
    }))
}

/// The four sequence tags and their exponents `k - 1`.
pub const OEIS_TAGS: [(&str, i64); 4] = [("A000041", -1), ("A000007", 0), ("A010815", 1), ("A002107", 2)];

/// First 12 terms of the tagged sequence, generated from the product.
pub fn oeis_prefix(tag: &str) -> Result<Vec<BigInt>> {
    let (_, e) = OEIS_TAGS
        .iter()
        .find(|(t, _)| *t == tag)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence tag {tag}")))?;
    Ok(qseries_product(*e, 11))
}

/// Labelled rows of leading coefficients (`q^{m²}, q^{m²-1}, ...`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub rows: Vec<(String, Vec<BigInt>)>,
}

impl CoefficientTable {
    pub fn to_csv(&self) -> String {
        let width = self.rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
        let mut out = String::from("row");
        for h in 0..width {
            out.push_str(&format!(",h{h}"));
        }
        out.push('\n');
        for (label, v) in &self.rows {
            out.push_str(label);
            for c in v {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

fn cap_row(c_rows: &[Vec<BigInt>], k: usize) -> Vec<BigInt> {
    let width = c_rows[0].len();
    (0..width)
        .map(|h| {
            (0..=k)
                .map(|i| {
                    let t = BigInt::from(binomial(k as u64, i as u64)) * &c_rows[i][h];
                    if i % 2 == 0 { t } else { -t }
                })
                .sum()
        })
        .collect()
}

fn table_from_c_rows(c_rows: Vec<Vec<BigInt>>) -> CoefficientTable {
    let mut rows: Vec<(String, Vec<BigInt>)> = c_rows
        .iter()
        .enumerate()
        .map(|(k, r)| (format!("C{k}"), r.clone()))
        .collect();
    for k in 1..=3 {
        rows.push((format!("cap{k}N"), cap_row(&c_rows, k)));
    }
    CoefficientTable { rows }
}

/// Leading coefficients `h = 0..=hmax` of `C_{m,0..3}` and `∩1N..∩3N`,
/// read off the polynomials at `m = hmax`.
pub fn coefficient_table_from_polys(hmax: usize) -> Result<CoefficientTable> {
    let m = hmax;
    let c_rows = (0..=3)
        .map(|k| {
            let p = c_extension_poly(m, k)?;
            Ok((0..=hmax).map(|h| p.coeff(m * m - h)).collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    Ok(table_from_c_rows(c_rows))
}

/// The same table from the q-series `Π (1 - q^i)^{k-1}`.
pub fn coefficient_table_from_series(hmax: usize) -> CoefficientTable {
    table_from_c_rows((0..=3).map(|k| qseries_product(k as i64 - 1, hmax)).collect())
}
