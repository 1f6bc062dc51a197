//! Acceptance gate: thirteen criteria, one PASS/FAIL line each.
//!
//! Expected values come from closed forms evaluated here with plain
//! integer arithmetic, from brute force written in this file, or from
//! literal constants; the library is only the thing being checked.

#![allow(non_snake_case)]

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use ringline::field::{factorize, gl_order};
use ringline::fixtures::{verify_appendix_B, verify_appendix_C};
use ringline::formulas::{
    binomial, c_extension_poly, cap1N_matrix, cap2N_matrix, cap_n_N_comm, comm_clique_count,
    comm_extension_count, comm_max_clique, incexc_Wprime, matrix_point_count, qbinom, zero_capture_weights,
};
use ringline::graph::{count_cliques, for_each_clique, max_clique_order, tensor_product, verify_isomorphism};
use ringline::identities::{capN_divisibility_check, lacunary_identity_check};
use ringline::partitions::{
    coefficient_table_from_polys, coefficient_table_from_series, coeffs_theorem_check, dist2p_bijection,
    dist2p_inverse, distcoeff_check, enumerate_D2,
};
use ringline::rings::{
    f1_graph, local_graph, matrix_ring_graph, spread_clique, zn_decomposition, RingSpec, SubspacePoint, Summand,
};
use ringline::suite::{self, SuiteConfig, ZN_MODULI};
use ringline::{CensusOptions, Graph, Limits};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn opts() -> CensusOptions {
    CensusOptions::with_budget(200_000_000)
}

fn limits() -> Limits {
    Limits::default()
}

fn ipow(b: u64, e: u32) -> u128 {
    (b as u128).pow(e)
}

/// `[2m, m]_q` as the product of `(q^{2m-k}-1)/(q^{k+1}-1)`.
fn gaussian_middle(m: u32, q: u64) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for k in 0..m {
        num *= ipow(q, 2 * m - k) - 1;
        den *= ipow(q, k + 1) - 1;
    }
    num / den
}

/// `|GL_m(q)| = Π (q^m - q^k)`.
fn gl(m: u32, q: u64) -> u128 {
    (0..m).map(|k| ipow(q, m) - ipow(q, k)).product()
}

fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn factorial(k: u64) -> u128 {
    (1..=k as u128).product()
}

/// Rank of a matrix over the prime field `GF(p)`.
fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = (1..p).find(|x| rows[rank][c] * x % p == 1).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn stacked_rank(a: &SubspacePoint, b: &SubspacePoint, p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = [a.basis(), b.basis()]
        .iter()
        .flat_map(|m| (0..m.rows()).map(|i| m.row(i).iter().map(|&x| x as u64).collect::<Vec<_>>()))
        .collect();
    rank_mod_p(&mut rows, p)
}

/// Common non-neighbours of a set, counted one vertex at a time.
fn joint_non_neighbours(g: &Graph, set: &[usize]) -> u64 {
    (0..g.n()).filter(|&w| set.iter().all(|&c| !g.has_edge(w, c))).count() as u64
}

/// `(q_i, |J_i|)` for `Z/n`: `p^e` gives `q = p`, `|J| = p^{e-1}`.
fn zn_local(n: u64) -> Vec<(u64, u64)> {
    factorize(n).into_iter().map(|(p, e)| (p, p.pow(e - 1))).collect()
}

fn c1_points() -> Outcome {
    let mut seen = Vec::new();
    for (m, q) in [(1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (2, 2), (2, 3)] {
        let n = matrix_ring_graph(m, q, &limits()).map_err(e)?.graph.n() as u128;
        let want = gaussian_middle(m as u32, q);
        ensure(n == want, format!("M_{m}({q}): {n} vertices, expected {want}"))?;
        ensure(
            matrix_point_count(m).eval_u64(q) == BigInt::from(want),
            format!("qbinom(2*{m},{m}) at {q}"),
        )?;
        seen.push(n.to_string());
    }
    ensure(seen[5] == "35" && seen[6] == "130", "literal values 35 and 130")?;
    Ok(format!("vertex counts {}", seen.join(",")))
}

fn c2_degrees() -> Outcome {
    let mut detail = Vec::new();
    for q in [2u64, 3] {
        let g = matrix_ring_graph(2, q, &limits()).map_err(e)?.graph;
        let d = q.pow(4) as usize;
        ensure((0..g.n()).all(|v| g.degree(v) == d), format!("M_2({q}) not {d}-regular"))?;
        let want = gl(2, q) as usize;
        ensure(BigUint::from(want) == gl_order(2, q), "gl_order disagrees with the product")?;
        let edges = g.edges();
        for &(u, v) in &edges {
            let common = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            ensure(common == want, format!("M_2({q}) edge ({u},{v}) has {common} common neighbours"))?;
        }
        detail.push(format!("q={q}: degree {d}, {} edges x {want} common", edges.len()));
    }
    Ok(detail.join("; "))
}

fn c3_cap12() -> Outcome {
    let mut detail = Vec::new();
    for q in [2i64, 3] {
        let c1 = q.pow(3) + 2 * q * q + q + 1;
        let c2 = q * q + 2 * q + 1;
        ensure(cap1N_matrix(2).eval_u64(q as u64) == BigInt::from(c1), "cap1N polynomial")?;
        ensure(cap2N_matrix(2).eval_u64(q as u64) == BigInt::from(c2), "cap2N polynomial")?;
        let g = matrix_ring_graph(2, q as u64, &limits()).map_err(e)?.graph;
        for v in 0..g.n() {
            let got = joint_non_neighbours(&g, &[v]);
            ensure(got == c1 as u64, format!("q={q} vertex {v}: cap1N {got} != {c1}"))?;
        }
        for (u, v) in g.edges() {
            let got = joint_non_neighbours(&g, &[u, v]);
            ensure(got == c2 as u64, format!("q={q} edge ({u},{v}): cap2N {got} != {c2}"))?;
        }
        detail.push(format!("q={q}: {c1}/{c2}"));
    }
    Ok(detail.join("; "))
}

/// `2x2` matrices over `GF(p)` with neither 0 nor 1 as an eigenvalue.
fn eigen_oracle(p: i64) -> u64 {
    let mut n = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = (a * d - b * c).rem_euclid(p);
                    let det1 = ((a - 1) * (d - 1) - b * c).rem_euclid(p);
                    n += (det != 0 && det1 != 0) as u64;
                }
            }
        }
    }
    n
}

fn c4_triangle() -> Outcome {
    let mut detail = Vec::new();
    for (q, literal) in [(2u64, 2i64), (3, 27)] {
        let qi = q as i64;
        let poly = qi.pow(4) - 2 * qi.pow(3) - qi * qi + 3 * qi;
        ensure(poly == literal, format!("C_2,3({q}) = {poly}"))?;
        ensure(eigen_oracle(qi) == literal as u64, format!("eigenvalue oracle at {q}"))?;
        ensure(
            c_extension_poly(2, 3).map_err(e)?.eval_u64(q) == BigInt::from(literal),
            "library C_2,3 polynomial",
        )?;
        let line = matrix_ring_graph(2, q, &limits()).map_err(e)?;
        let tri = line.standard_triangle().map_err(e)?;
        let labels: Vec<String> = tri.iter().map(|&v| line.points[v].label()).collect();
        let g = &line.graph;
        ensure(g.is_clique(&tri), "standard triangle is not a clique")?;
        let ext = (0..g.n()).filter(|&w| tri.iter().all(|&t| g.has_edge(w, t))).count() as i64;
        ensure(ext == literal, format!("q={q}: {ext} extensions, expected {literal}"))?;
        detail.push(format!("q={q}: {ext} (triangle {})", labels.join(" ")));
    }
    Ok(detail.join("; "))
}

fn c5_max_clique() -> Outcome {
    let mut detail = Vec::new();
    for q in [2u64, 3] {
        let g = matrix_ring_graph(2, q, &limits()).map_err(e)?.graph;
        let mc = max_clique_order(&g, &opts()).map_err(e)?;
        ensure(mc as u64 == q * q + 1, format!("M_2({q}): maximum clique {mc}"))?;
        detail.push(format!("omega(M_2({q}))={mc}"));
    }
    for (m, q) in [(2usize, 2u64), (2, 3), (2, 5), (3, 2)] {
        let s = spread_clique(m, q).map_err(e)?;
        ensure(s.len() as u64 == q.pow(m as u32) + 1, format!("spread ({m},{q}) has {} points", s.len()))?;
        for (i, a) in s.iter().enumerate() {
            ensure(a.dim() == m && stacked_rank(a, a, q) == m, format!("spread ({m},{q}) point {i} not of rank {m}"))?;
            for b in &s[i + 1..] {
                ensure(stacked_rank(a, b, q) == 2 * m, format!("spread ({m},{q}) has a non-distant pair"))?;
            }
        }
        detail.push(format!("spread({m},{q})={}", s.len()));
    }
    Ok(detail.join(" "))
}

fn c6_commutative() -> Outcome {
    let mut literal_mismatches = Vec::new();
    let mut sizes = Vec::new();
    for n in ZN_MODULI {
        let d = zn_decomposition(n, &limits()).map_err(e)?;
        let g = &d.line.graph;
        let local = zn_local(n);
        let s = local.len() as u64;
        let j: u64 = local.iter().map(|l| l.1).product();
        let qmin = local.iter().map(|l| l.0).min().unwrap();

        // vertices n Π (1 + 1/p); distant iff the determinant is a unit
        let want_n: u64 = local.iter().map(|&(p, jj)| jj * (p + 1)).product();
        ensure(g.n() as u64 == want_n, format!("Z/{n}: {} points", g.n()))?;
        for (a, &(x, y)) in d.line.points.iter().enumerate() {
            for (b, &(z, w)) in d.line.points.iter().enumerate() {
                let det = ((x * w) % n + n - (y * z) % n) % n;
                let unit = num_integer::gcd(det, n) == 1;
                ensure(g.has_edge(a, b) == unit, format!("Z/{n}: edge ({a},{b})"))?;
            }
        }
        ensure(verify_isomorphism(g, &d.spec_graph, &d.map).map_err(e)?, format!("Z/{n}: CRT map"))?;

        let kmax = (qmin + 1) as usize;
        let census = count_cliques(g, kmax + 1, &opts()).map_err(e)?;
        for k in 0..=kmax as u64 + 1 {
            let prod: u128 = local.iter().map(|&(q, _)| choose(q + 1, k)).product();
            let literal = ipow(j, k as u32) * prod;
            let ordered = literal * factorial(k).pow((s - 1) as u32);
            let got = census.counts()[k as usize].to_u128().unwrap();
            ensure(got == ordered, format!("Z/{n}: {got} {k}-cliques, expected {ordered}"))?;
            ensure(
                comm_clique_count(&d.spec, k).map_err(e)? == BigUint::from(ordered),
                format!("Z/{n}: library clique count k={k}"),
            )?;
            if got != literal {
                literal_mismatches.push(format!("Z/{n} k={k}: {got} vs {literal}"));
            }
        }

        for k in 0..=kmax {
            let ext: u64 = j * local.iter().map(|&(q, _)| q + 1 - k as u64).product::<u64>();
            ensure(
                comm_extension_count(&d.spec, k as u64).map_err(e)? == BigInt::from(ext),
                format!("Z/{n}: extension formula k={k}"),
            )?;
            if k >= 1 {
                let mut ok = true;
                for_each_clique(g, &[], k, 50_000_000, |c, _| {
                    ok &= (0..g.n()).filter(|&w| c.iter().all(|&v| g.has_edge(w, v))).count() as u64 == ext;
                })
                .map_err(e)?;
                ensure(ok, format!("Z/{n}: a {k}-clique does not extend {ext} ways"))?;
            }
        }

        for size in 1..=kmax as u64 {
            let mut v = BigInt::zero();
            for k in 0..=size {
                let prod: i128 = local.iter().map(|&(q, _)| q as i128 + 1 - k as i128).product();
                let t = BigInt::from(choose(size, k)) * BigInt::from(prod);
                v += if k % 2 == 0 { t } else { -t };
            }
            v *= j;
            ensure(cap_n_N_comm(&d.spec, size).map_err(e)?.value == v, format!("Z/{n}: cap{size}N formula"))?;
            let mut ok = true;
            for_each_clique(g, &[], size as usize, 50_000_000, |c, _| {
                ok &= BigInt::from(joint_non_neighbours(g, c)) == v;
            })
            .map_err(e)?;
            ensure(ok, format!("Z/{n}: cap{size}N brute force != {v}"))?;
        }

        let mc = max_clique_order(g, &opts()).map_err(e)?;
        ensure(mc == kmax, format!("Z/{n}: maximum clique {mc}, expected {kmax}"))?;
        ensure(comm_max_clique(&d.spec).map_err(e)? as usize == kmax, "library max clique")?;
        sizes.push(g.n().to_string());
    }
    let z6 = literal_mismatches.iter().find(|s| s.starts_with("Z/6 k=2")).cloned().unwrap_or_default();
    Ok(format!(
        "15 moduli ({} points); counts match |J|^k (k!)^(s-1) prod C(q_i+1,k); \
         the same form without (k!)^(s-1) fails in {} cases, e.g. {z6}",
        sizes.join(","),
        literal_mismatches.len()
    ))
}

fn c7_tensor() -> Outcome {
    let lim = limits();
    let factors: Vec<(&str, Graph)> = vec![
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("octahedron", local_graph(4, 2, &lim).map_err(e)?),
        ("P(M_2(2))", matrix_ring_graph(2, 2, &lim).map_err(e)?.graph),
    ];
    ensure(factors[2].1.n() == 6 && factors[2].1.regular_degree() == Some(4), "octahedron shape")?;
    let counts: Vec<Vec<u128>> = factors
        .iter()
        .map(|(_, g)| {
            count_cliques(g, 6, &opts()).map(|c| c.counts().iter().map(|x| x.to_u128().unwrap()).collect())
        })
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let mut refuted = Vec::new();
    let mut pairs = 0;
    for i in 0..factors.len() {
        for j in 0..factors.len() {
            let t = tensor_product(&factors[i].1, &factors[j].1, &lim).map_err(e)?;
            let c = count_cliques(&t, 6, &opts()).map_err(e)?;
            for k in 0..=6u64 {
                let got = c.counts()[k as usize].to_u128().unwrap();
                let (a, b) = (counts[i][k as usize], counts[j][k as usize]);
                let f = factorial(k);
                ensure(
                    f * got == (f * a) * (f * b),
                    format!("{} x {} k={k}: ordered counts {} vs {}", factors[i].0, factors[j].0, f * got, f * a * f * b),
                )?;
                if got != a * b && refuted.is_empty() {
                    refuted.push(format!("{} x {} k={k}: {got} vs {}", factors[i].0, factors[j].0, a * b));
                }
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} ordered pairs, k<=6: ordered k-tuple counts multiply; unordered counts do not ({})",
        refuted.join("")
    ))
}

fn c8_incexc() -> Outcome {
    for m in 0..=4usize {
        for q in [2u64, 3, 4, 5] {
            let got = incexc_Wprime(m, 0, &zero_capture_weights(m, q), q).map_err(e)?;
            let want = BigInt::from(gl(m as u32, q));
            ensure(got == want, format!("m={m} q={q}: {got} vs {want}"))?;
        }
    }
    Ok("m<=4, q in 2..5".into())
}

const C_TABLE: &str = "\
row,h0,h1,h2,h3,h4
C0,1,1,2,3,5
C1,1,0,0,0,0
C2,1,-1,-1,0,0
C3,1,-2,-1,2,1
";

const CAP_TABLE: &str = "\
cap1N,0,1,2,3,5
cap2N,0,0,1,3,5
cap3N,0,0,0,1,4
";

fn c9_partitions() -> Outcome {
    for m in 0..=5 {
        for k in 0..=3 {
            ensure(coeffs_theorem_check(m, k).map_err(e)?, format!("leading coefficients m={m} k={k}"))?;
        }
    }
    for m in 0..=6 {
        for k in 0..=m {
            for h in 0..=m {
                ensure(distcoeff_check(m, k, h).map_err(e)?, format!("distcoeff m={m} k={k} h={h}"))?;
            }
        }
    }
    let mut maps = 0usize;
    for h in 0..=14u32 {
        for k in 1..=h.max(1) as usize {
            let dom = enumerate_D2(h, k);
            let mut img: Vec<_> = dom.iter().map(dist2p_bijection).collect();
            for (x, y) in dom.iter().zip(&img) {
                ensure(y.weight() + k as u32 == x.weight(), "bijection does not remove k cells")?;
                ensure(&dist2p_inverse(y, k).map_err(e)? == x, format!("inverse fails at h={h} k={k}"))?;
            }
            img.sort();
            let n = img.len();
            img.dedup();
            ensure(n == img.len(), format!("not injective at h={h} k={k}"))?;
            let mut target = if h >= k as u32 {
                let mut t = enumerate_D2(h - k as u32, k);
                t.extend(enumerate_D2(h - k as u32, k - 1));
                t
            } else {
                Vec::new()
            };
            target.sort();
            ensure(img == target, format!("not surjective at h={h} k={k}"))?;
            maps += dom.len();
        }
    }
    let t = coefficient_table_from_polys(4).map_err(e)?;
    ensure(t == coefficient_table_from_series(4), "polynomial and series tables differ")?;
    let csv = t.to_csv();
    let (c_part, cap_part) = csv.split_at(csv.find("cap1N").ok_or("no cap rows")?);
    ensure(c_part == C_TABLE, format!("C table differs:\n{c_part}"))?;
    ensure(cap_part == CAP_TABLE, format!("cap table differs:\n{cap_part}"))?;
    Ok(format!("bijection checked on {maps} partitions; both tables byte-exact"))
}

fn c10_identities() -> Outcome {
    ensure(lacunary_identity_check(13, 13), "library lacunary check")?;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in p..=13 {
            for m in 0..p {
                let s: i128 = (m..=n)
                    .step_by(p as usize)
                    .map(|i| if i % 2 == 0 { choose(n, i) as i128 } else { -(choose(n, i) as i128) })
                    .sum();
                ensure(s % p as i128 == 0, format!("lacunary sum n={n} p={p} m={m} is {s}"))?;
            }
        }
    }
    let mut cap5 = Vec::new();
    for n in ZN_MODULI {
        let spec = RingSpec::zn(n).map_err(e)?;
        for k in 1..=7 {
            ensure(capN_divisibility_check(&spec, k).map_err(e)?, format!("Z/{n} n={k}"))?;
        }
        let v = cap_n_N_comm(&spec, 5).map_err(e)?.value;
        ensure((&v % BigInt::from(30)).is_zero(), format!("Z/{n}: cap5N = {v}"))?;
        cap5.push(v);
    }
    // Z/n in the list has at most three prime factors, so cap5N vanishes there;
    // wider products give non-zero values.
    let mut wide = Vec::new();
    for qs in [&[5u64, 7, 8, 9, 11][..], &[4, 5, 7, 8, 9, 11], &[4, 5, 7, 8, 9, 11, 13]] {
        let mut spec = RingSpec::new(qs.iter().map(|&q| Summand::local(q, 1)).collect());
        spec.summands.push(Summand::local(9, 3));
        let mut v = BigInt::zero();
        for k in 0..=5u64 {
            let prod: i128 = qs.iter().chain(&[3]).map(|&q| q as i128 + 1 - k as i128).product();
            let t = BigInt::from(choose(5, k)) * BigInt::from(prod * 3);
            v += if k % 2 == 0 { t } else { -t };
        }
        ensure(cap_n_N_comm(&spec, 5).map_err(e)?.value == v, "wide cap5N formula")?;
        ensure(!v.is_zero() && (&v % BigInt::from(30)).is_zero(), format!("wide cap5N = {v}"))?;
        for k in 1..=7 {
            ensure(capN_divisibility_check(&spec, k).map_err(e)?, "wide divisibility")?;
        }
        wide.push(v.to_string());
    }
    Ok(format!(
        "lacunary n,p<=13; cap5N of Z/n all {}; wider products {}",
        if cap5.iter().all(|v| v.is_zero()) { "0" } else { "divisible by 30" },
        wide.join(",")
    ))
}

fn c11_fixtures() -> Outcome {
    let b = verify_appendix_B().map_err(e)?;
    ensure(b.class_sizes == (4, 4, 1), format!("class sizes {:?}", b.class_sizes))?;
    ensure(b.c_extension_count == 8, format!("C extends {} ways", b.c_extension_count))?;
    ensure(
        b.a_extension_counts.len() == 4
            && b.b_extension_counts.len() == 4
            && b.a_extension_counts.iter().chain(&b.b_extension_counts).all(|&x| x == 4),
        "A/B extension counts",
    )?;
    ensure(b.a_b_distant_pairs == 0, "A-B adjacency")?;
    ensure(b.maximal_clique_sizes == [8, 8], format!("maximal cliques {:?}", b.maximal_clique_sizes))?;
    ensure(b.passed, "GL_2(3) fixture report")?;
    let c = verify_appendix_C().map_err(e)?;
    ensure(c.size == 20 && c.all_invertible, "20 invertible matrices")?;
    ensure(c.distant_pairs == 190 && c.total_pairs == 190, format!("{}/{}", c.distant_pairs, c.total_pairs))?;
    ensure(c.candidates == 480 && c.extending == 0, format!("{} of {}", c.extending, c.candidates))?;
    ensure(c.passed, "GL_2(5) fixture report")?;
    Ok("classes (4,4,1), C->8, A/B->4, no A-B edges, maximal cliques 8,8; 190/190 distant, 0 of 480 extend".into())
}

fn c12_f1() -> Outcome {
    for m in 0..=5usize {
        let g = f1_graph(m, &limits()).map_err(e)?;
        let b = choose(2 * m as u64, m as u64);
        ensure(g.n() as u128 == b, format!("m={m}: {} vertices", g.n()))?;
        ensure(BigUint::from(b) == binomial(2 * m as u64, m as u64), "library binomial")?;
        ensure(m == 0 || (0..g.n()).all(|v| g.degree(v) == 1), format!("m={m}: not 1-regular"))?;
        ensure(qbinom(2 * m, m).eval_u64(1) == BigInt::from(b), format!("qbinom at q=1, m={m}"))?;
    }
    Ok("m<=5".into())
}

fn c13_determinism() -> Outcome {
    let run = |workers| {
        let cfg = SuiteConfig {
            census: CensusOptions::with_budget(suite::SUITE_CENSUS_BUDGET).workers(workers),
            limits: limits(),
        };
        suite::run("all", &cfg)
            .map_err(e)
            .and_then(|c| serde_json::to_string(&c).map_err(e))
    };
    let one = run(1)?;
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    ensure(run(0)? == one, format!("outputs differ between 1 and {cores} workers"))?;
    // a fixed pool wider than the machine still exercises the parallel path
    ensure(run(4)? == one, "outputs differ between 1 and 4 workers")?;
    Ok(format!("{} bytes identical with 1, {cores} and 4 workers", one.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("point counts", c1_points, Some(10)),
        ("degree and codegree", c2_degrees, Some(30)),
        ("cap1N and cap2N", c3_cap12, None),
        ("4-clique extension", c4_triangle, None),
        ("maximal clique", c5_max_clique, Some(120)),
        ("commutative suite", c6_commutative, Some(60)),
        ("tensor multiplicativity", c7_tensor, None),
        ("inclusion-exclusion", c8_incexc, None),
        ("partition coefficients", c9_partitions, Some(30)),
        ("identities", c10_identities, None),
        ("fixtures", c11_fixtures, Some(30)),
        ("F1 limit", c12_f1, None),
        ("determinism", c13_determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = f();
        let took = start.elapsed();
        if let (Ok(_), Some(s)) = (&result, limit) {
            if took > Duration::from_secs(*s) {
                result = Err(format!("took {took:.1?}, limit {s} s"));
            }
        }
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name} [{took:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{took:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
