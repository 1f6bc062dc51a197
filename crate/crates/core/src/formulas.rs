//! Closed-form counts: Gaussian binomials, clique and extension counts,
//! and the `∩kN` statistics, both as polynomials in `q` and as exact
//! integers for concrete ring specs.
//!
//! `∩kN` is the number of points distant from none of `k` fixed mutually
//! distant points. From extension counts `E_0..E_k` (where `E_i` is the
//! number of common neighbours of an `i`-clique) it is
//! `Σ_i (-1)^i C(k,i) E_i`, with the summand indexed by `i`.

#![allow(non_snake_case)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rings::{RingSpec, Summand};

/// Gaussian binomial `[n, k]_q` by the q-Pascal rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Zero when `k > n`.
pub fn qbinom(n: usize, k: usize) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    // row[j] = [i, j] for the current i
    let mut row = vec![IntPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(k) {
            let left = if j == 0 { IntPoly::zero() } else { row[j - 1].clone() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// [`qbinom`] with the range checked.
pub fn qbinom_checked(n: usize, k: usize) -> Result<IntPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!("q-binomial [{n},{k}]: k > n")));
    }
    Ok(qbinom(n, k))
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of `k`-cliques of a commutative ring with `s` local factors:
/// `|J|^k (k!)^(s-1) Π_i C(q_i + 1, k)`.
///
/// Ordered `k`-tuples multiply across tensor factors, unordered cliques do
/// not; the `(k!)^(s-1)` factor accounts for this. For `s <= 1` or `k <= 1`
/// it agrees with [`comm_clique_count_unordered_product`].
pub fn comm_clique_count(spec: &RingSpec, k: u64) -> Result<BigUint> {
    let factors = spec.local_factors()?;
    if factors.is_empty() {
        return Ok(BigUint::one());
    }
    let fact: BigUint = (1..=k).map(BigUint::from).product();
    let base = spec.radical_order().pow(k as u32) * fact.pow(factors.len() as u32 - 1);
    Ok(factors
        .iter()
        .fold(base, |acc, &(q, _)| acc * binomial(q + 1, k)))
}

/// `|J|^k Π_i C(q_i + 1, k)`: the product of the per-factor clique counts.
/// Undercounts for `k >= 2` when there are several local factors.
pub fn comm_clique_count_unordered_product(spec: &RingSpec, k: u64) -> Result<BigUint> {
    let factors = spec.local_factors()?;
    let j = spec.radical_order();
    Ok(factors
        .iter()
        .fold(j.pow(k as u32), |acc, &(q, _)| acc * binomial(q + 1, k)))
}

/// `|J| Π_i (q_i + 1 - k)`: common neighbours of any `k`-clique. Only
/// meaningful when a `k`-clique exists (`k <= min q_i + 1`).
pub fn comm_extension_count(spec: &RingSpec, k: u64) -> Result<BigInt> {
    let factors = spec.local_factors()?;
    let j = BigInt::from(spec.radical_order());
    Ok(factors
        .iter()
        .fold(j, |acc, &(q, _)| acc * (BigInt::from(q) + 1 - k)))
}

/// `min_i q_i + 1`.
pub fn comm_max_clique(spec: &RingSpec) -> Result<u64> {
    spec.local_factors()?
        .iter()
        .map(|&(q, _)| q + 1)
        .min()
        .ok_or(Error::LoopGraph("maximum clique of the zero ring"))
}

/// `min q_i^{m_i} + 1` over all summands, a local summand counting as `m = 1`.
pub fn general_max_clique(spec: &RingSpec) -> Result<BigUint> {
    spec.summands
        .iter()
        .filter_map(|s| match *s {
            Summand::Local { r_order, j_order } => Some(BigUint::from(r_order / j_order + 1)),
            Summand::Matrix { m: 0, .. } => None,
            Summand::Matrix { m, q } => Some(BigUint::from(q).pow(m as u32) + 1u32),
        })
        .min()
        .ok_or(Error::LoopGraph("maximum clique of the zero ring"))
}

/// A count that is only meaningful when the underlying clique exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flagged {
    pub value: BigInt,
    pub clique_exists: bool,
}

/// `|J| Σ_k (-1)^k C(n,k) Π_i (q_i + 1 - k)`.
pub fn cap_n_N_comm(spec: &RingSpec, n: u64) -> Result<Flagged> {
    let factors = spec.local_factors()?;
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let term = factors
            .iter()
            .fold(BigInt::from(binomial(n, k)), |acc, &(q, _)| acc * (BigInt::from(q) + 1 - k));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let clique_exists = factors.iter().all(|&(q, _)| n <= q + 1);
    Ok(Flagged {
        value: sum * BigInt::from(spec.radical_order()),
        clique_exists,
    })
}

/// `[2m, m]_q`.
pub fn matrix_point_count(m: usize) -> IntPoly {
    qbinom(2 * m, m)
}

/// `q^{m^2}`.
pub fn matrix_degree(m: usize) -> IntPoly {
    IntPoly::monomial(1, m * m)
}

/// `Π_{k<m} (q^m - q^k)`, which is also `|GL_m(q)|`.
pub fn matrix_codegree(m: usize) -> IntPoly {
    (0..m).fold(IntPoly::one(), |acc, k| {
        acc * (IntPoly::monomial(1, m) - IntPoly::monomial(1, k))
    })
}

pub fn cap1N_matrix(m: usize) -> IntPoly {
    matrix_point_count(m) - matrix_degree(m)
}

pub fn cap2N_matrix(m: usize) -> IntPoly {
    matrix_point_count(m) - matrix_degree(m).scale(&BigInt::from(2)) + matrix_codegree(m)
}

/// `(m, q)` per semisimple summand; local summands must be fields.
fn semisimple_parts(spec: &RingSpec) -> Result<Vec<(usize, u64)>> {
    spec.validate()?;
    spec.summands
        .iter()
        .map(|s| match *s {
            Summand::Local { r_order, j_order: 1 } => Ok((1, r_order)),
            Summand::Local { r_order, j_order } => Err(Error::InvalidArgument(format!(
                "Local({r_order},{j_order}) is not semisimple; use the radical multiplier"
            ))),
            Summand::Matrix { m, q } => Ok((m, q)),
        })
        .collect()
}

fn product_of(parts: &[(usize, u64)], f: fn(usize) -> IntPoly) -> BigInt {
    parts
        .iter()
        .fold(BigInt::one(), |acc, &(m, q)| acc * f(m).eval_u64(q))
}

/// `Π P_i - Π D_i` over the summands, scaled by the radical multiplier.
pub fn cap1N_product(spec: &RingSpec) -> Result<BigInt> {
    let parts = semisimple_parts(spec)?;
    let v = product_of(&parts, matrix_point_count) - product_of(&parts, matrix_degree);
    Ok(radical_scale(&v, spec.radical_multiplier))
}

/// `Π P_i - 2 Π D_i + Π G_i` over the summands, scaled by the radical multiplier.
pub fn cap2N_product(spec: &RingSpec) -> Result<BigInt> {
    let parts = semisimple_parts(spec)?;
    let v = product_of(&parts, matrix_point_count) - 2 * product_of(&parts, matrix_degree)
        + product_of(&parts, matrix_codegree);
    Ok(radical_scale(&v, spec.radical_multiplier))
}

/// `W'_{m,k} = Σ_{i=0}^{m-k} (-1)^i [m-k, i]_q q^{i(i-1)/2} W[k+i]`, where
/// `W[j]` is the weight attached to dimension `j`.
pub fn incexc_Wprime(m: usize, k: usize, w: &[BigInt], q: u64) -> Result<BigInt> {
    if k > m {
        return Err(Error::InvalidArgument(format!("k={k} exceeds m={m}")));
    }
    if w.len() <= m {
        return Err(Error::InvalidArgument(format!(
            "weights cover dimensions 0..{}, need 0..={m}",
            w.len()
        )));
    }
    let qb = BigInt::from(q);
    let mut sum = BigInt::zero();
    for i in 0..=m - k {
        let term = qbinom(m - k, i).eval(&qb) * qb.pow((i * i.saturating_sub(1) / 2) as u32) * &w[k + i];
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `W_{m,i} = q^{m(m-i)}`: endomorphisms killing a fixed `i`-dimensional subspace.
pub fn zero_capture_weights(m: usize, q: u64) -> Vec<BigInt> {
    (0..=m)
        .map(|i| BigInt::from(q).pow((m * (m - i)) as u32))
        .collect()
}

/// `W_{m,k} = q^{k(m-k)} Π_{i<m-k} (q^{m-k} - q^i)`: automorphisms fixing a
/// `k`-dimensional subspace pointwise.
pub fn identity_capture_weights(m: usize, q: u64) -> Vec<BigInt> {
    (0..=m)
        .map(|k| {
            BigInt::from(q).pow((k * (m - k)) as u32) * matrix_codegree(m - k).eval_u64(q)
        })
        .collect()
}

fn sign(m: usize) -> BigInt {
    if m.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(-1)^m q^{m(m-1)/2} Σ_{i=0}^m Π_{j=0}^{m-i-1} (1 - q^{m-j})`.
pub fn c3_sum_form(m: usize) -> IntPoly {
    let mut sum = IntPoly::zero();
    for i in 0..=m {
        let prod = (0..m - i).fold(IntPoly::one(), |acc, j| {
            acc * (IntPoly::one() - IntPoly::monomial(1, m - j))
        });
        sum = sum + prod;
    }
    sum.shift(m * m.saturating_sub(1) / 2).scale(&sign(m))
}

/// `(-1)^m q^{m(m-1)/2} ((1-q^m)((1-q^{m-1}) ... ((1-q)+1) ... +1)+1)`.
pub fn c3_nested_form(m: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for j in 1..=m {
        acc = (IntPoly::one() - IntPoly::monomial(1, j)) * acc + IntPoly::one();
    }
    acc.shift(m * m.saturating_sub(1) / 2).scale(&sign(m))
}

/// `C_{m,k}(q)`: common neighbours of a `k`-clique in the graph of `M_m(q)`.
/// Defined for `k <= 3` only; larger cliques are not equivalent under the
/// group action and need a per-clique profile.
pub fn c_extension_poly(m: usize, k: usize) -> Result<IntPoly> {
    match k {
        0 => Ok(matrix_point_count(m)),
        1 => Ok(matrix_degree(m)),
        2 => Ok(matrix_codegree(m)),
        3 => {
            let p = c3_sum_form(m);
            if p != c3_nested_form(m) {
                return Err(Error::Internal(format!("C_{{{m},3}} forms disagree")));
            }
            Ok(p)
        }
        _ => Err(Error::NoFormula(format!(
            "no general extension formula for {k}-cliques; use an extension profile"
        ))),
    }
}

/// `Σ_{i=0}^k (-1)^i C(k,i) E_i` for extension values `E_0..E_k`.
pub fn cap_k_N_from_extensions(values: &[BigInt], k: usize) -> Result<BigInt> {
    if values.len() <= k {
        return Err(Error::InvalidArgument(format!(
            "need extension values for 0..={k}, got {}",
            values.len()
        )));
    }
    let mut sum = BigInt::zero();
    for (i, v) in values.iter().take(k + 1).enumerate() {
        let term = BigInt::from(binomial(k as u64, i as u64)) * v;
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `∩kN` for `M_m(q)` as a polynomial, `k <= 3`.
pub fn cap_k_N_matrix(m: usize, k: usize) -> Result<IntPoly> {
    let mut sum = IntPoly::zero();
    for i in 0..=k {
        let term = c_extension_poly(m, i)?.scale(&BigInt::from(binomial(k as u64, i as u64)));
        sum = if i % 2 == 0 { sum + term } else { sum - term };
    }
    Ok(sum)
}

/// Multiplies a count on `P(R/J)` by `|J|`.
pub fn radical_scale(value: &BigInt, j_order: u64) -> BigInt {
    value * BigInt::from(j_order)
}

/// Extension count of a `k`-clique for any spec, `k <= 3`: the product
/// over summands of the per-summand counts, times the radical order.
pub fn spec_extension_count(spec: &RingSpec, k: usize) -> Result<BigInt> {
    spec.validate()?;
    let mut acc = BigInt::from(spec.radical_order());
    for s in &spec.summands {
        let v = match *s {
            Summand::Local { r_order, j_order } => BigInt::from(r_order / j_order + 1) - k,
            Summand::Matrix { m, q } => c_extension_poly(m, k)?.eval_u64(q),
        };
        acc *= v;
    }
    Ok(acc)
}

/// Number of `k`-cliques for any spec, `k <= 4`: `N_0 E_0 E_1 ... E_{k-1} / k!`.
/// Valid because `k`-cliques with `k <= 3` are all equivalent, so each
/// extends in the same number of ways.
pub fn spec_clique_count(spec: &RingSpec, k: usize) -> Result<BigUint> {
    if k > 4 {
        return Err(Error::NoFormula(format!(
            "{k}-clique counts need extension counts of {}-cliques",
            k - 1
        )));
    }
    if spec.is_trivial() {
        // T: the looped vertex counts once for every k
        spec.validate()?;
        return Ok(BigUint::one());
    }
    let mut ordered = BigInt::one();
    for i in 0..k {
        let e = spec_extension_count(spec, i)?;
        if !e.is_positive() {
            return Ok(BigUint::zero());
        }
        ordered *= e;
    }
    let fact: u64 = (1..=k as u64).product();
    let (quot, rem) = (&ordered / fact, &ordered % fact);
    if !rem.is_zero() {
        return Err(Error::Internal("ordered clique count not divisible by k!".into()));
    }
    Ok(quot.to_biguint().expect("positive"))
}

/// `∩kN` for any spec with `k <= 3` via the extension counts.
pub fn spec_cap_k_N(spec: &RingSpec, k: usize) -> Result<BigInt> {
    let values = (0..=k)
        .map(|i| spec_extension_count(spec, i))
        .collect::<Result<Vec<_>>>()?;
    cap_k_N_from_extensions(&values, k)
}

/// Convenience: an [`IntPoly`] evaluated at `q` as `i64`, if it fits.
pub fn eval_i64(p: &IntPoly, q: u64) -> Option<i64> {
    p.eval_u64(q).to_i64()
}
