//! Ring descriptions and the distant graphs of their projective lines.
//!
//! A [`RingSpec`] is a direct sum of local rings (given by `|R|` and `|J|`)
//! and matrix rings `M_m(q)`, optionally blown up by a global radical
//! multiplier. Its distant graph is the tensor product of the summand
//! graphs followed by the blow-up.
//!
//! Vertex labels:
//!
//! * `Z/n` points: `"a:b"` for the lexicographically least pair of the
//!   unit-scaling orbit.
//! * `M_m(q)` points: the RREF basis entries, row-major, one base-36 digit
//!   per entry (`"1000"`... for `q <= 36`).
//! * Local-ring points: `"c.j"`, coset `c` in `0..q` for `R(r,1)`, or `"inf.j"`
//!   for `R(1,a)` with `a` in `J`; `j` indexes the radical copy.
//! * `GL_m(q)` matrices: row-major digit strings such as `"0210"`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{as_prime_power, factorize, GaloisField, Matrix, DEFAULT_ENUMERATION_BOUND};
use crate::formulas::qbinom;
use crate::graph::{blowup, tensor_product, Graph, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Summand {
    /// Finite local ring with `|R| = R` and radical `|J| = J`.
    Local {
        #[serde(rename = "R")]
        r_order: u64,
        #[serde(rename = "J")]
        j_order: u64,
    },
    /// The matrix ring `M_m(GF(q))`.
    Matrix { m: usize, q: u64 },
}

impl Summand {
    pub fn local(r_order: u64, j_order: u64) -> Self {
        Summand::Local { r_order, j_order }
    }

    pub fn matrix(m: usize, q: u64) -> Self {
        Summand::Matrix { m, q }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Summand::Local { r_order, j_order } => validate_local(r_order, j_order).map(|_| ()),
            Summand::Matrix { q, .. } => {
                if as_prime_power(q).is_none() {
                    return Err(Error::InvalidSpec(format!("matrix ring over q={q}: not a prime power")));
                }
                Ok(())
            }
        }
    }

    /// Number of points of the summand's projective line.
    pub fn point_count(&self) -> BigUint {
        match *self {
            Summand::Local { r_order, j_order } => {
                BigUint::from(r_order / j_order + 1) * BigUint::from(j_order)
            }
            Summand::Matrix { m, q } => qbinom(2 * m, m)
                .eval_u64(q)
                .to_biguint()
                .expect("q-binomials are positive"),
        }
    }
}

/// Checks that `(R, J)` is the cardinality pair of a finite local ring:
/// `R = p^(nr)`, `J = p^((n-1)r)`. Returns the residue field order `R/J`.
pub fn validate_local(r_order: u64, j_order: u64) -> Result<u64> {
    let bad = |why: &str| Err(Error::InvalidSpec(format!("local ring (R={r_order}, J={j_order}): {why}")));
    if j_order == 0 || r_order == 0 || !r_order.is_multiple_of(j_order) {
        return bad("|J| must divide |R|");
    }
    let q = r_order / j_order;
    if q < 2 || as_prime_power(q).is_none() {
        return bad("|R|/|J| must be a prime power");
    }
    let mut j = j_order;
    while j.is_multiple_of(q) {
        j /= q;
    }
    if j != 1 {
        return bad("|J| must be a power of |R|/|J|");
    }
    Ok(q)
}

fn one() -> u64 {
    1
}

/// A finite ring described structurally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub summands: Vec<Summand>,
    #[serde(rename = "radical", default = "one")]
    pub radical_multiplier: u64,
}

impl RingSpec {
    pub fn new(summands: Vec<Summand>) -> Self {
        RingSpec {
            summands,
            radical_multiplier: 1,
        }
    }

    pub fn with_radical(mut self, radical: u64) -> Self {
        self.radical_multiplier = radical;
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: RingSpec =
            serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring specs serialise")
    }

    /// The local decomposition of `Z/n`: one `Local(p^e, p^(e-1))` per prime power.
    pub fn zn(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("Z/{n} needs n >= 2")));
        }
        Ok(Self::new(
            factorize(n)
                .into_iter()
                .map(|(p, e)| Summand::local(p.pow(e), p.pow(e - 1)))
                .collect(),
        ))
    }

    /// Validates every summand; returns warnings for legal but unusual specs.
    pub fn validate(&self) -> Result<Vec<String>> {
        if self.radical_multiplier == 0 {
            return Err(Error::InvalidSpec("radical multiplier must be at least 1".into()));
        }
        for s in &self.summands {
            s.validate()?;
        }
        let mut warnings = Vec::new();
        let local_radical = self
            .summands
            .iter()
            .any(|s| matches!(s, Summand::Local { j_order, .. } if *j_order > 1));
        if self.radical_multiplier > 1 && local_radical {
            warnings.push(
                "radical multiplier combined with local summands that carry their own radical".into(),
            );
        }
        if self.radical_multiplier > 1 && self.is_trivial() {
            return Err(Error::InvalidSpec("the trivial ring cannot be blown up".into()));
        }
        Ok(warnings)
    }

    /// True when every summand is the zero ring (or there are none): the graph is `T`.
    pub fn is_trivial(&self) -> bool {
        self.summands
            .iter()
            .all(|s| matches!(s, Summand::Matrix { m: 0, .. }))
    }

    /// `(q_i, |J_i|)` per local factor when the ring is commutative.
    /// `M_1(q)` counts as the field `Local(q, 1)` and `M_0` is skipped.
    pub fn local_factors(&self) -> Result<Vec<(u64, u64)>> {
        let mut out = Vec::new();
        for s in &self.summands {
            match *s {
                Summand::Local { r_order, j_order } => {
                    out.push((validate_local(r_order, j_order)?, j_order))
                }
                Summand::Matrix { m: 0, .. } => {}
                Summand::Matrix { m: 1, q } => out.push((q, 1)),
                Summand::Matrix { m, q } => {
                    return Err(Error::NonCommutative(format!("M_{m}({q})")))
                }
            }
        }
        Ok(out)
    }

    pub fn is_commutative(&self) -> bool {
        self.local_factors().is_ok()
    }

    /// `|J|` of the whole ring: product of local radicals times the multiplier.
    pub fn radical_order(&self) -> BigUint {
        self.summands.iter().fold(BigUint::from(self.radical_multiplier), |acc, s| match *s {
            Summand::Local { j_order, .. } => acc * j_order,
            Summand::Matrix { .. } => acc,
        })
    }

    pub fn point_count(&self) -> BigUint {
        self.summands
            .iter()
            .fold(BigUint::from(self.radical_multiplier), |acc, s| acc * s.point_count())
    }
}

/// Complete multipartite graph with `q + 1` parts of size `|J|`.
pub fn local_graph(r_order: u64, j_order: u64, limits: &Limits) -> Result<Graph> {
    let q = validate_local(r_order, j_order)?;
    limits.check("local ring graph", (q as u128 + 1) * j_order as u128)?;
    let g = blowup(&Graph::complete(q as usize + 1), j_order as usize, limits)?;
    let labels = (0..=q)
        .flat_map(|c| (0..j_order).map(move |j| (c, j)))
        .map(|(c, j)| if c == q { format!("inf.{j}") } else { format!("{c}.{j}") })
        .collect();
    g.with_labels(labels)
}

/// Canonical basis of an `m`-dimensional subspace of `GF(q)^(2m)`: an
/// `m x 2m` matrix in reduced row-echelon form of rank `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspacePoint {
    basis: Matrix,
}

impl SubspacePoint {
    /// Row space of `rows` (an `m x 2m` matrix of rank `m`).
    pub fn from_rows(field: &GaloisField, rows: &Matrix) -> Result<Self> {
        if rows.cols() != 2 * rows.rows() {
            return Err(Error::DimensionMismatch(format!(
                "subspace basis must be m x 2m, got {}x{}",
                rows.rows(),
                rows.cols()
            )));
        }
        let mut basis = rows.clone();
        if field.rref_in_place(&mut basis) != rows.rows() {
            return Err(Error::InvalidArgument("rows are linearly dependent".into()));
        }
        Ok(SubspacePoint { basis })
    }

    /// Point generated by the admissible pair `(a, b)`, i.e. the row space of `[a | b]`.
    pub fn from_pair(field: &GaloisField, a: &Matrix, b: &Matrix) -> Result<Self> {
        Self::from_rows(field, &a.hstack(b)?)
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn label(&self) -> String {
        self.basis.to_digits()
    }

    /// Distant iff the two subspaces intersect trivially.
    pub fn is_distant(&self, field: &GaloisField, other: &SubspacePoint) -> bool {
        let stacked = self.basis.vstack(&other.basis).expect("same ambient space");
        field.rank(&stacked) == 2 * self.dim()
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All `m`-dimensional subspaces of `GF(q)^(2m)` as sorted RREF bases.
pub fn enumerate_subspaces(field: &GaloisField, m: usize) -> Vec<SubspacePoint> {
    let q = field.q() as u32;
    let cols = 2 * m;
    let mut out = Vec::new();
    for pivots in combinations(cols, m) {
        let free: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| {
                let pivots = &pivots;
                (pivots[i] + 1..cols)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut basis = Matrix::zeros(m, cols);
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(i, p, 1);
            }
            for (&(i, c), &d) in free.iter().zip(&digits) {
                basis.set(i, c, d);
            }
            out.push(SubspacePoint { basis });
            let mut carry = true;
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < q {
                    carry = false;
                    break;
                }
                *d = 0;
            }
            if carry {
                break;
            }
        }
    }
    out.sort();
    out
}

/// The projective line over `M_m(q)` with its points.
#[derive(Clone, Debug)]
pub struct MatrixLine {
    pub m: usize,
    pub field: GaloisField,
    pub points: Vec<SubspacePoint>,
    pub graph: Graph,
}

impl MatrixLine {
    pub fn index_of(&self, p: &SubspacePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// Vertex of the point generated by the admissible pair `(a, b)`.
    pub fn vertex_of_pair(&self, a: &Matrix, b: &Matrix) -> Result<usize> {
        let p = SubspacePoint::from_pair(&self.field, a, b)?;
        self.index_of(&p)
            .ok_or_else(|| Error::Internal("subspace missing from enumeration".into()))
    }

    /// The vertices `(1,0)`, `(0,1)` and `(1,1)`.
    pub fn standard_triangle(&self) -> Result<[usize; 3]> {
        let i = Matrix::identity(self.m);
        let z = Matrix::zeros(self.m, self.m);
        Ok([
            self.vertex_of_pair(&i, &z)?,
            self.vertex_of_pair(&z, &i)?,
            self.vertex_of_pair(&i, &i)?,
        ])
    }
}

/// Distant graph of `M_m(q)`: subspaces, adjacent when complementary.
/// `m = 0` gives `T`.
pub fn matrix_ring_graph(m: usize, q: u64, limits: &Limits) -> Result<MatrixLine> {
    let field = GaloisField::of_order(q)?;
    if m == 0 {
        return Ok(MatrixLine {
            m,
            field,
            points: vec![SubspacePoint {
                basis: Matrix::zeros(0, 0),
            }],
            graph: Graph::loop_graph(),
        });
    }
    let count = qbinom(2 * m, m).eval_u64(q);
    let count = u128::try_from(count).unwrap_or(u128::MAX);
    limits.check("matrix ring graph", count)?;
    let points = enumerate_subspaces(&field, m);
    let graph = Graph::from_fn(points.len(), |u, v| points[u].is_distant(&field, &points[v]))
        .with_labels(points.iter().map(SubspacePoint::label).collect())?;
    Ok(MatrixLine {
        m,
        field,
        points,
        graph,
    })
}

/// Tensor product of the summand graphs, then the radical blow-up.
pub fn spec_graph(spec: &RingSpec, limits: &Limits) -> Result<Graph> {
    spec.validate()?;
    let total = u128::try_from(spec.point_count()).unwrap_or(u128::MAX);
    limits.check("ring spec graph", total)?;
    let mut g = Graph::loop_graph();
    for s in &spec.summands {
        let part = match *s {
            Summand::Local { r_order, j_order } => local_graph(r_order, j_order, limits)?,
            Summand::Matrix { m, q } => matrix_ring_graph(m, q, limits)?.graph,
        };
        g = tensor_product(&g, &part, limits)?;
    }
    blowup(&g, spec.radical_multiplier as usize, limits)
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(n as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i128) as u64)
}

/// The projective line over `Z/n`.
#[derive(Clone, Debug)]
pub struct ZnLine {
    pub n: u64,
    units: Vec<u64>,
    /// Canonical pairs, sorted.
    pub points: Vec<(u64, u64)>,
    pub graph: Graph,
}

impl ZnLine {
    /// Lexicographically least member of the unit-scaling orbit of an
    /// admissible pair; `None` if `(a, b)` is not admissible.
    pub fn canonical(&self, a: u64, b: u64) -> Option<(u64, u64)> {
        let (a, b) = (a % self.n, b % self.n);
        if gcd(gcd(a, b), self.n) != 1 {
            return None;
        }
        self.units
            .iter()
            .map(|&u| (u * a % self.n, u * b % self.n))
            .min()
    }

    pub fn index_of(&self, a: u64, b: u64) -> Option<usize> {
        let p = self.canonical(a, b)?;
        self.points.binary_search(&p).ok()
    }
}

/// Points of `P(Z/n)` are unimodular pairs modulo units; two points are
/// distant when `ad - bc` is a unit.
pub fn zn_projective_line(n: u64, limits: &Limits) -> Result<ZnLine> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z/{n} needs n >= 2")));
    }
    let predicted: u128 = factorize(n)
        .iter()
        .fold(n as u128, |acc, &(p, _)| acc / p as u128 * (p as u128 + 1));
    limits.check("projective line over Z/n", predicted)?;
    let units: Vec<u64> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    let nn = n as usize;
    let mut seen = vec![false; nn * nn];
    let mut points = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if seen[a as usize * nn + b as usize] || gcd(gcd(a, b), n) != 1 {
                continue;
            }
            // lexicographic scan: the first unseen member is the orbit minimum
            points.push((a, b));
            for &u in &units {
                seen[(u * a % n) as usize * nn + (u * b % n) as usize] = true;
            }
        }
    }
    let graph = Graph::from_fn(points.len(), |i, j| {
        let ((a, b), (c, d)) = (points[i], points[j]);
        let det = (a * d % n + n * n - b * c % n) % n;
        gcd(det, n) == 1
    })
    .with_labels(points.iter().map(|(a, b)| format!("{a}:{b}")).collect())?;
    Ok(ZnLine {
        n,
        units,
        points,
        graph,
    })
}

/// Componentwise CRT: for each vertex of `P(Z/n)`, the tuple of its images
/// in `P(Z/f)` for each factor `f` (as vertex indices of those lines).
pub fn zn_crt_map(line: &ZnLine, factors: &[u64], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    if factors.iter().any(|&f| f < 2) || factors.iter().product::<u64>() != line.n {
        return Err(Error::InvalidArgument(format!(
            "{factors:?} is not a factorisation of {}",
            line.n
        )));
    }
    for (i, &f) in factors.iter().enumerate() {
        if factors[i + 1..].iter().any(|&g| gcd(f, g) != 1) {
            return Err(Error::InvalidArgument(format!("factors {factors:?} are not coprime")));
        }
    }
    let lines = factors
        .iter()
        .map(|&f| zn_projective_line(f, limits))
        .collect::<Result<Vec<_>>>()?;
    line.points
        .iter()
        .map(|&(a, b)| {
            lines
                .iter()
                .map(|l| {
                    l.index_of(a, b)
                        .ok_or_else(|| Error::Internal(format!("({a},{b}) not admissible mod {}", l.n)))
                })
                .collect()
        })
        .collect()
}

/// For `n = p^e`, the map from `P(Z/n)` onto `local_graph(n, n/p)`:
/// `R(r,1)` goes to coset `r mod p`, copy `r div p`; `R(1,s)` with `p | s`
/// goes to the extra part, copy `s / p`.
pub fn local_chart(line: &ZnLine) -> Result<Vec<usize>> {
    let (p, _) = as_prime_power(line.n)
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a prime power", line.n)))?;
    let n = line.n;
    let j = n / p;
    line.points
        .iter()
        .map(|&(a, b)| {
            let (part, member) = match mod_inverse(b, n) {
                Some(binv) => {
                    let r = a * binv % n;
                    (r % p, r / p)
                }
                None => {
                    let ainv = mod_inverse(a, n)
                        .ok_or_else(|| Error::Internal(format!("({a},{b}) has no unit entry")))?;
                    (p, b * ainv % n / p)
                }
            };
            Ok((part * j + member) as usize)
        })
        .collect()
}

/// `P(Z/n)` together with the graph of its local decomposition and the
/// explicit vertex bijection between them.
#[derive(Clone, Debug)]
pub struct ZnDecomposition {
    pub line: ZnLine,
    pub spec: RingSpec,
    pub spec_graph: Graph,
    pub map: Vec<usize>,
}

pub fn zn_decomposition(n: u64, limits: &Limits) -> Result<ZnDecomposition> {
    let line = zn_projective_line(n, limits)?;
    let spec = RingSpec::zn(n)?;
    let spec_graph = spec_graph(&spec, limits)?;
    let factors: Vec<u64> = factorize(n).iter().map(|&(p, e)| p.pow(e)).collect();
    let tuples = zn_crt_map(&line, &factors, limits)?;
    let mut charts = Vec::new();
    let mut sizes = Vec::new();
    for &f in &factors {
        let fl = zn_projective_line(f, limits)?;
        sizes.push(fl.points.len());
        charts.push(local_chart(&fl)?);
    }
    let map = tuples
        .iter()
        .map(|t| {
            t.iter()
                .zip(&charts)
                .zip(&sizes)
                .fold(0usize, |acc, ((&i, chart), &size)| acc * size + chart[i])
        })
        .collect();
    Ok(ZnDecomposition {
        line,
        spec,
        spec_graph,
        map,
    })
}

/// `GL_m(q)` with edges between matrices whose difference is invertible.
#[derive(Clone, Debug)]
pub struct UnitDifferenceGraph {
    pub field: GaloisField,
    pub matrices: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    pub graph: Graph,
}

impl UnitDifferenceGraph {
    pub fn index_of(&self, a: &Matrix) -> Option<usize> {
        self.index.get(a).copied()
    }
}

pub fn unit_difference_graph(m: usize, q: u64, limits: &Limits) -> Result<UnitDifferenceGraph> {
    let field = GaloisField::of_order(q)?;
    let order = u128::try_from(crate::field::gl_order(m, q)).unwrap_or(u128::MAX);
    limits.check("unit-difference graph", order)?;
    let matrices = field.enumerate_gl(m, DEFAULT_ENUMERATION_BOUND)?;
    let graph = Graph::from_fn(matrices.len(), |u, v| {
        let d = field.mat_sub(&matrices[u], &matrices[v]).expect("same shape");
        field.rank(&d) == m
    })
    .with_labels(matrices.iter().map(Matrix::to_digits).collect())?;
    let index = matrices.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    Ok(UnitDifferenceGraph {
        field,
        matrices,
        index,
        graph,
    })
}

/// A clique of `q^m + 1` points: `(1,0)`, `(0,1)` and `(u^i, 1)` for
/// `0 <= i < q^m - 1`, where `u` is the companion matrix of the first
/// primitive polynomial of degree `m`. Every pair is checked before return.
pub fn spread_clique(m: usize, q: u64) -> Result<Vec<SubspacePoint>> {
    if m == 0 {
        return Err(Error::InvalidArgument("spread needs m >= 1".into()));
    }
    let field = GaloisField::of_order(q)?;
    let u = field.companion_matrix(&field.find_primitive(m))?;
    let id = Matrix::identity(m);
    let zero = Matrix::zeros(m, m);
    let mut points = vec![
        SubspacePoint::from_pair(&field, &id, &zero)?,
        SubspacePoint::from_pair(&field, &zero, &id)?,
    ];
    let count = q.pow(m as u32) - 1;
    let mut power = id.clone();
    for _ in 0..count {
        points.push(SubspacePoint::from_pair(&field, &power, &id)?);
        power = field.mat_mul(&power, &u)?;
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if !a.is_distant(&field, b) {
                return Err(Error::Internal(format!(
                    "spread points {} and {} are not distant",
                    a.label(),
                    b.label()
                )));
            }
        }
    }
    Ok(points)
}

/// The `q -> 1` shadow: `m`-subsets of a `2m`-set, adjacent when complementary.
pub fn f1_graph(m: usize, limits: &Limits) -> Result<Graph> {
    let count = crate::formulas::binomial(2 * m as u64, m as u64);
    limits.check("F1 graph", u128::try_from(count).unwrap_or(u128::MAX))?;
    let subsets = combinations(2 * m, m);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &i| acc | 1 << i))
        .collect();
    let full = if m == 0 { 0 } else { (1u64 << (2 * m)) - 1 };
    let g = Graph::from_fn(subsets.len(), |u, v| masks[u] ^ masks[v] == full && masks[u] & masks[v] == 0);
    let labels = masks
        .iter()
        .map(|&x| (0..2 * m).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    g.with_labels(labels)
}

/// Admissible pairs over `Z/n` as top rows of invertible 2x2 matrices.
/// Exhaustive over `n^4` matrices; used to cross-check `gcd(a, b, n) = 1`.
pub fn zn_admissible_by_orbit(n: u64) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            'search: for c in 0..n {
                for d in 0..n {
                    let det = (a * d + n * n - b * c % n) % n;
                    if gcd(det, n) == 1 {
                        out.insert((a, b));
                        break 'search;
                    }
                }
            }
        }
    }
    out
}
