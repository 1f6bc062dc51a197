//! Verification suites: closed forms against brute-force searches on the
//! constructed graphs, and the rendered count tables.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{gl_order, GaloisField, Matrix};
use crate::fixtures::{verify_appendix_B, verify_appendix_C};
use crate::formulas::{
    binomial, c_extension_poly, cap1N_matrix, cap1N_product, cap2N_matrix, cap2N_product, cap_n_N_comm,
    comm_clique_count, comm_extension_count, comm_max_clique, general_max_clique, incexc_Wprime,
    matrix_codegree, matrix_point_count, qbinom, radical_scale, spec_cap_k_N, spec_clique_count,
    zero_capture_weights,
};
use crate::graph::{
    count_cliques, extension_profile, for_each_clique, max_clique_order, tensor_product, CensusOptions, Graph,
    Limits,
};
use crate::identities::{capN_divisibility_check, lacunary_identity_check};
use crate::partitions::{
    coefficient_table_from_polys, coefficient_table_from_series, coeffs_theorem_check, dist2p_bijection,
    distcoeff_check, enumerate_D2, enumerate_partitions, qseries_product, CoefficientTable,
};
use crate::rings::{
    f1_graph, local_graph, matrix_ring_graph, spec_graph, spread_clique, zn_decomposition, RingSpec, Summand,
};

pub const SUITES: [&str; 5] = ["commutative", "matrix", "partitions", "identities", "fixtures"];

/// The moduli whose projective lines are checked.
pub const ZN_MODULI: [u64; 15] = [4, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 32];

/// Census budget used when the caller does not set one. The largest
/// search (a 1225-vertex tensor square) expands a few million nodes.
pub const SUITE_CENSUS_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub census: CensusOptions,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            census: CensusOptions::with_budget(SUITE_CENSUS_BUDGET),
            limits: Limits::default(),
        }
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder {
            suite,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    match name {
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run(s, cfg)?);
            }
            Ok(out)
        }
        "commutative" => commutative(cfg),
        "matrix" => matrix(cfg),
        "partitions" => partitions(),
        "identities" => identities(),
        "fixtures" => fixtures(),
        _ => Err(Error::InvalidArgument(format!(
            "unknown suite {name:?}; expected one of {} or all",
            SUITES.join(", ")
        ))),
    }
}

fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}

fn commutative(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut r = Recorder::new("commutative");
    for n in ZN_MODULI {
        let d = zn_decomposition(n, &cfg.limits)?;
        let g = &d.line.graph;
        r.check(
            format!("Z/{n}: CRT map is an isomorphism onto the local product"),
            crate::graph::verify_isomorphism(g, &d.spec_graph, &d.map)?,
            format!("{} vertices", g.n()),
        );
        let kmax = comm_max_clique(&d.spec)? as usize;
        let census = count_cliques(g, kmax + 1, &cfg.census)?;
        let expected: Vec<BigUint> = (0..=kmax as u64 + 1)
            .map(|k| comm_clique_count(&d.spec, k))
            .collect::<Result<_>>()?;
        r.check(
            format!("Z/{n}: clique census"),
            census.counts() == expected.as_slice(),
            format!("{:?}", census.counts().iter().map(to_u64).collect::<Vec<_>>()),
        );
        let mut ext_ok = true;
        for k in 0..=kmax {
            let profile = extension_profile(g, k, &cfg.census)?;
            let e = comm_extension_count(&d.spec, k as u64)?;
            ext_ok &= profile.len() == 1 && profile.keys().all(|&v| BigInt::from(v) == e);
        }
        r.check(format!("Z/{n}: extension counts"), ext_ok, "");
        let mut cap_ok = true;
        for size in 1..=kmax {
            let want = cap_n_N_comm(&d.spec, size as u64)?;
            cap_ok &= want.clique_exists;
            for_each_clique(g, &[], size, cfg.census.node_budget, |c, _| {
                cap_ok &= BigInt::from(g.joint_non_neighbors(c)) == want.value;
            })?;
        }
        r.check(format!("Z/{n}: intersections of neighbourhoods"), cap_ok, "");
        let mc = max_clique_order(g, &cfg.census)?;
        r.check(
            format!("Z/{n}: maximum clique"),
            mc == kmax,
            format!("{mc}"),
        );
    }
    Ok(r.checks)
}

/// Number of `m x m` matrices over GF(q) with neither 0 nor 1 as eigenvalue.
pub fn count_without_eigenvalues_0_1(m: usize, q: u64) -> Result<u64> {
    let f = GaloisField::of_order(q)?;
    let id = Matrix::identity(m);
    let total = (q as u128).pow((m * m) as u32);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let entries = (0..m * m)
            .map(|_| {
                let d = (c % q as u128) as u32;
                c /= q as u128;
                d
            })
            .collect();
        let a = Matrix::new(m, m, entries)?;
        if f.rank(&a) == m && f.rank(&f.mat_sub(&a, &id)?) == m {
            count += 1;
        }
    }
    Ok(count)
}

fn matrix(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut r = Recorder::new("matrix");
    let lim = &cfg.limits;
    for (m, q) in [(1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (2, 2), (2, 3)] {
        let n = matrix_ring_graph(m, q, lim)?.graph.n();
        r.check(
            format!("M_{m}({q}): point count"),
            BigInt::from(n) == matrix_point_count(m).eval_u64(q),
            format!("{n}"),
        );
    }
    for q in [2u64, 3] {
        let line = matrix_ring_graph(2, q, lim)?;
        let g = &line.graph;
        let deg = g.regular_degree();
        r.check(format!("M_2({q}): degree q^4"), deg == Some(q.pow(4) as usize), format!("{deg:?}"));
        let gl = gl_order(2, q);
        let edges = g.edges();
        let codeg_ok = edges.iter().all(|&(u, v)| BigUint::from(g.codegree(u, v)) == gl);
        r.check(format!("M_2({q}): codegree |GL_2|"), codeg_ok, format!("{} edges", edges.len()));
        let c1 = cap1N_matrix(2).eval_u64(q);
        let c2 = cap2N_matrix(2).eval_u64(q);
        let one_ok = (0..g.n()).all(|v| BigInt::from(g.joint_non_neighbors(&[v])) == c1);
        let two_ok = edges.iter().all(|&(u, v)| BigInt::from(g.joint_non_neighbors(&[u, v])) == c2);
        r.check(format!("M_2({q}): cap1N"), one_ok, format!("{c1}"));
        r.check(format!("M_2({q}): cap2N"), two_ok, format!("{c2}"));
        let tri = line.standard_triangle()?;
        let ext = g.extension_count(&tri)?;
        let c3 = c_extension_poly(2, 3)?.eval_u64(q);
        r.check(format!("M_2({q}): triangle extensions"), BigInt::from(ext) == c3, format!("{ext}"));
        let profile = extension_profile(g, 3, &cfg.census)?;
        r.check(
            format!("M_2({q}): every triangle extends equally"),
            profile.len() == 1 && profile.keys().all(|&e| BigInt::from(e) == c3),
            format!("{profile:?}"),
        );
        let mc = max_clique_order(g, &cfg.census)?;
        r.check(format!("M_2({q}): maximum clique q^2+1"), mc as u64 == q * q + 1, format!("{mc}"));
    }
    let nev = count_without_eigenvalues_0_1(2, 3)?;
    r.check("GL_2(3): matrices without eigenvalue 0 or 1", nev == 27, format!("{nev}"));
    for (m, q) in [(2, 2), (2, 3), (2, 5), (3, 2)] {
        let s = spread_clique(m, q);
        let ok = s.as_ref().is_ok_and(|s| s.len() as u64 == q.pow(m as u32) + 1);
        r.check(format!("M_{m}({q}): spread clique"), ok, format!("{:?}", s.map(|s| s.len())));
    }
    let mut incexc_ok = true;
    for m in 0..=4 {
        for q in [2u64, 3, 4, 5] {
            incexc_ok &= incexc_Wprime(m, 0, &zero_capture_weights(m, q), q)? == BigInt::from(gl_order(m, q));
        }
    }
    r.check("inclusion-exclusion over subspaces gives |GL_m(q)|", incexc_ok, "");

    let factors: Vec<(&str, Graph)> = vec![
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("octahedron", local_graph(4, 2, lim)?),
        ("P(M_2(2))", matrix_ring_graph(2, 2, lim)?.graph),
    ];
    let counts: Vec<Vec<BigUint>> = factors
        .iter()
        .map(|(_, g)| count_cliques(g, 6, &cfg.census).map(|c| c.counts().to_vec()))
        .collect::<Result<_>>()?;
    for i in 0..factors.len() {
        for j in i..factors.len() {
            let t = tensor_product(&factors[i].1, &factors[j].1, lim)?;
            let c = count_cliques(&t, 6, &cfg.census)?;
            // ordered k-tuples multiply: k! N_k(A x B) = (k! N_k(A)) (k! N_k(B))
            let ok = (0..=6).all(|k| {
                let f = BigUint::from((1..=k as u64).product::<u64>());
                &f * &c.counts()[k] == &f * &counts[i][k] * &f * &counts[j][k]
            });
            r.check(
                format!("{} x {}: ordered clique counts multiply", factors[i].0, factors[j].0),
                ok,
                format!("{:?}", c.counts().iter().map(to_u64).collect::<Vec<_>>()),
            );
        }
    }

    let blown = RingSpec::new(vec![Summand::matrix(2, 2)]).with_radical(2);
    let bg = spec_graph(&blown, lim)?;
    let want = radical_scale(&cap1N_matrix(2).eval_u64(2), 2);
    let ok = (0..bg.n()).all(|v| BigInt::from(bg.joint_non_neighbors(&[v])) == want);
    r.check("M_2(2) blown up by 2: cap1N scales by |J|", ok, format!("{want}"));

    for spec in [
        RingSpec::new(vec![Summand::matrix(2, 2), Summand::local(3, 1)]),
        blown,
        RingSpec::new(vec![Summand::matrix(1, 2), Summand::matrix(2, 2)]),
    ] {
        let g = spec_graph(&spec, lim)?;
        let label = spec.to_json();
        let c = count_cliques(&g, 4, &cfg.census)?;
        let ok = (0..=4).all(|k| spec_clique_count(&spec, k).is_ok_and(|n| n == c.counts()[k]));
        r.check(format!("{label}: clique census"), ok, format!("{:?}", c.counts().iter().map(to_u64).collect::<Vec<_>>()));
        let mut cap_ok = cap1N_product(&spec)? == spec_cap_k_N(&spec, 1)? && cap2N_product(&spec)? == spec_cap_k_N(&spec, 2)?;
        for k in 1..=3 {
            let want = spec_cap_k_N(&spec, k)?;
            for_each_clique(&g, &[], k, cfg.census.node_budget, |cl, _| {
                cap_ok &= BigInt::from(g.joint_non_neighbors(cl)) == want;
            })?;
        }
        r.check(format!("{label}: cap1N..cap3N"), cap_ok, "");
        let mc = max_clique_order(&g, &cfg.census)?;
        r.check(
            format!("{label}: maximum clique"),
            BigUint::from(mc) == general_max_clique(&spec)?,
            format!("{mc}"),
        );
    }

    let mut f1_ok = true;
    for m in 0..=5usize {
        let g = f1_graph(m, lim)?;
        let b = binomial(2 * m as u64, m as u64);
        f1_ok &= BigUint::from(g.n()) == b
            && (m == 0 || g.regular_degree() == Some(1))
            && qbinom(2 * m, m).eval_u64(1) == BigInt::from(b);
    }
    r.check("F1 limit graphs are perfect matchings", f1_ok, "");
    Ok(r.checks)
}

fn partitions() -> Result<Vec<Check>> {
    let mut r = Recorder::new("partitions");
    let mut ok = true;
    for m in 0..=5 {
        for k in 0..=3 {
            ok &= coeffs_theorem_check(m, k)?;
        }
    }
    r.check("leading coefficients of C_{m,k} match the q-series", ok, "m <= 5, k <= 3");
    let mut ok = true;
    for m in 0..=6 {
        for k in 0..=m {
            for h in 0..=m {
                ok &= distcoeff_check(m, k, h)?;
            }
        }
    }
    r.check("partial products count 2-distinct partitions", ok, "h <= m <= 6");
    let mut ok = true;
    for h in 0..=14u32 {
        for k in 1..=5usize {
            let mut img: Vec<_> = enumerate_D2(h, k).iter().map(dist2p_bijection).collect();
            img.sort();
            let before = img.len();
            img.dedup();
            let mut target = Vec::new();
            if h >= k as u32 {
                target = enumerate_D2(h - k as u32, k);
                target.extend(enumerate_D2(h - k as u32, k - 1));
            }
            target.sort();
            ok &= before == img.len() && img == target;
        }
    }
    r.check("cell-removal map is a bijection", ok, "h <= 14, k <= 5");
    let s = qseries_product(-1, 20);
    let ok = (0..=20u32).all(|h| s[h as usize] == BigInt::from(enumerate_partitions(h, None, None).len()));
    r.check("inverse Euler product counts partitions", ok, "h <= 20");
    let t = coefficient_table_from_polys(4)?;
    r.check(
        "coefficient tables agree between polynomials and q-series",
        t == coefficient_table_from_series(4),
        render_coefficient_rows(&t),
    );
    Ok(r.checks)
}

fn identities() -> Result<Vec<Check>> {
    let mut r = Recorder::new("identities");
    r.check("lacunary binomial sums vanish mod p", lacunary_identity_check(13, 13), "n, p <= 13");
    let mut ok = true;
    let mut detail = Vec::new();
    for n in ZN_MODULI {
        let spec = RingSpec::zn(n)?;
        for k in 1..=7 {
            ok &= capN_divisibility_check(&spec, k)?;
        }
        let v5 = cap_n_N_comm(&spec, 5)?.value;
        ok &= (&v5 % BigInt::from(30)).is_zero();
        detail.push(format!("Z/{n}:{v5}"));
    }
    for qs in [&[5u64, 7, 8, 9, 11][..], &[4, 5, 7, 8, 9, 11], &[4, 5, 7, 8, 9, 11, 13]] {
        let mut spec = RingSpec::new(qs.iter().map(|&q| Summand::local(q, 1)).collect());
        spec.summands.push(Summand::local(9, 3));
        for k in 1..=7 {
            ok &= capN_divisibility_check(&spec, k)?;
        }
        let v5 = cap_n_N_comm(&spec, 5)?.value;
        ok &= !v5.is_zero() && (&v5 % BigInt::from(30)).is_zero();
        detail.push(format!("{qs:?}+Local(9,3):{v5}"));
    }
    r.check("every prime p <= n divides capnN", ok, format!("cap5N {}", detail.join(" ")));
    Ok(r.checks)
}

fn fixtures() -> Result<Vec<Check>> {
    let mut r = Recorder::new("fixtures");
    let b = verify_appendix_B()?;
    r.check(
        "GL_2(3): inequivalent 4-cliques",
        b.passed,
        serde_json::to_string(&b).expect("report serialises"),
    );
    let c = verify_appendix_C()?;
    r.check(
        "GL_2(5): inextensible 20-clique",
        c.passed,
        serde_json::to_string(&c).expect("report serialises"),
    );
    Ok(r.checks)
}

fn render_coefficient_rows(t: &CoefficientTable) -> String {
    t.rows
        .iter()
        .map(|(label, v)| {
            let vals: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("{label} {}", vals.join(" "))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Polynomial and coefficient tables as plain text.
pub fn tables_text() -> Result<String> {
    let mut out = String::from("points of P(M_m(q))\n");
    for m in 0..=3 {
        out.push_str(&format!("m={m} {}\n", matrix_point_count(m)));
    }
    out.push_str("\ncap1N and cap2N of M_m(q)\n");
    for m in 0..=3 {
        out.push_str(&format!("m={m} {} | {}\n", cap1N_matrix(m), cap2N_matrix(m)));
    }
    let t = coefficient_table_from_polys(4)?;
    out.push_str("\ncoefficients of q^(m^2), q^(m^2-1), ..., q^(m^2-4)\n");
    for (label, v) in &t.rows {
        let vals: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("{label:<6} {}\n", vals.join(" ")));
    }
    Ok(out)
}

/// The same tables as JSON.
pub fn tables_json() -> Result<serde_json::Value> {
    let t = coefficient_table_from_polys(4)?;
    Ok(serde_json::json!({
        "point_count": (0..=3).map(|m| matrix_point_count(m).to_string()).collect::<Vec<_>>(),
        "cap1N": (0..=3).map(|m| cap1N_matrix(m).to_string()).collect::<Vec<_>>(),
        "cap2N": (0..=3).map(|m| cap2N_matrix(m).to_string()).collect::<Vec<_>>(),
        "codegree": (0..=3).map(|m| matrix_codegree(m).to_string()).collect::<Vec<_>>(),
        "coefficients": t.rows.iter().map(|(l, v)| {
            (l.clone(), v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
        }).collect::<std::collections::BTreeMap<_, _>>(),
    }))
}

/// The coefficient tables as CSV.
pub fn tables_csv() -> Result<String> {
    Ok(coefficient_table_from_polys(4)?.to_csv())
}
