//! Explicit matrix data over small fields and its verification against the
//! unit-difference graph of `GL_2(q)`.
//!
//! Fixtures are JSON files holding named sets of matrices as row-major digit
//! strings (`"0210"` is `[[0,2],[1,0]]`), with a SHA-256 of their canonical
//! text so transcription errors are caught on load.

#![allow(non_snake_case)]

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::graph::Limits;
use crate::rings::{unit_difference_graph, UnitDifferenceGraph};

pub const APPENDIX_B_JSON: &str = include_str!("../fixtures/appendix_b.json");
pub const APPENDIX_C_JSON: &str = include_str!("../fixtures/appendix_c.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFixture {
    pub label: String,
    pub q: u64,
    pub m: usize,
    pub sets: BTreeMap<String, Vec<String>>,
    pub sha256: String,
}

impl MatrixFixture {
    /// Parses, checks the checksum and every matrix string.
    pub fn from_json(s: &str) -> Result<Self> {
        let f: MatrixFixture = serde_json::from_str(s).map_err(|e| Error::Fixture(e.to_string()))?;
        let digest = f.digest();
        if digest != f.sha256 {
            return Err(Error::Fixture(format!(
                "{}: checksum {} does not match contents ({digest})",
                f.label, f.sha256
            )));
        }
        for name in f.sets.keys() {
            for a in f.matrices(name)? {
                if a.entries().iter().any(|&e| e as u64 >= f.q) {
                    return Err(Error::Fixture(format!("{}: entry out of range in set {name}", f.label)));
                }
            }
        }
        Ok(f)
    }

    /// SHA-256 (hex) of the label, field, size and sets, one set per line.
    pub fn digest(&self) -> String {
        let mut text = format!("{}\nq={}\nm={}\n", self.label, self.q, self.m);
        let lines: Vec<String> = self
            .sets
            .iter()
            .map(|(k, v)| format!("{k}={}", v.join(",")))
            .collect();
        text.push_str(&lines.join("\n"));
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn matrices(&self, set: &str) -> Result<Vec<Matrix>> {
        self.sets
            .get(set)
            .ok_or_else(|| Error::Fixture(format!("{}: no set named {set}", self.label)))?
            .iter()
            .map(|s| {
                if s.len() != self.m * self.m {
                    return Err(Error::Fixture(format!("{s:?} is not a {0}x{0} matrix", self.m)));
                }
                Matrix::from_digits(s, self.m, self.m)
            })
            .collect()
    }
}

pub fn appendix_b() -> Result<MatrixFixture> {
    MatrixFixture::from_json(APPENDIX_B_JSON)
}

pub fn appendix_c() -> Result<MatrixFixture> {
    MatrixFixture::from_json(APPENDIX_C_JSON)
}

fn vertices(g: &UnitDifferenceGraph, ms: &[Matrix]) -> Result<Vec<usize>> {
    ms.iter()
        .map(|a| {
            g.index_of(a)
                .ok_or_else(|| Error::Fixture(format!("{} is not invertible", a.to_digits())))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixBReport {
    /// Common neighbours of the 3-clique found by search.
    pub extensions_found: usize,
    pub extensions_equal_classes: bool,
    pub class_sizes: (usize, usize, usize),
    pub a_mutually_distant: bool,
    pub b_mutually_distant: bool,
    pub c_distant_to_a_and_b: bool,
    pub a_b_distant_pairs: usize,
    /// Common neighbours of the 3-clique plus the `C` element.
    pub c_extension_count: usize,
    /// The same for each element of `A`, then `B`.
    pub a_extension_counts: Vec<usize>,
    pub b_extension_counts: Vec<usize>,
    /// Sizes of the maximal cliques containing the 3-clique.
    pub maximal_clique_sizes: Vec<usize>,
    pub passed: bool,
}

/// Maximal cliques of the graph induced on `pool`, by subset search.
fn maximal_subcliques(g: &UnitDifferenceGraph, pool: &[usize]) -> Vec<Vec<usize>> {
    let n = pool.len();
    let cliques: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect::<Vec<_>>())
        .filter(|s| g.graph.is_clique(s))
        .collect();
    cliques
        .iter()
        .filter(|s| !cliques.iter().any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v))))
        .cloned()
        .collect()
}

pub fn verify_appendix_B() -> Result<AppendixBReport> {
    let f = appendix_b()?;
    let g = unit_difference_graph(f.m, f.q, &Limits::default())?;
    let base = vertices(&g, &f.matrices("clique")?)?;
    let a = vertices(&g, &f.matrices("A")?)?;
    let b = vertices(&g, &f.matrices("B")?)?;
    let c = vertices(&g, &f.matrices("C")?)?;
    if !g.graph.is_clique(&base) {
        return Err(Error::NotAClique);
    }
    let mut found: Vec<usize> = (0..g.graph.n())
        .filter(|&v| base.iter().all(|&u| g.graph.has_edge(u, v)))
        .collect();
    found.sort_unstable();
    let mut classes: Vec<usize> = a.iter().chain(&b).chain(&c).copied().collect();
    classes.sort_unstable();
    let distant_pairs = |x: &[usize], y: &[usize]| {
        x.iter()
            .flat_map(|&u| y.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| g.graph.has_edge(u, v))
            .count()
    };
    let ext = |v: usize| -> Result<usize> {
        let mut s = base.clone();
        s.push(v);
        g.graph.extension_count(&s)
    };
    let mut sizes: Vec<usize> = maximal_subcliques(&g, &found)
        .iter()
        .map(|s| s.len() + base.len())
        .collect();
    sizes.sort_unstable();
    let report = AppendixBReport {
        extensions_found: found.len(),
        extensions_equal_classes: found == classes,
        class_sizes: (a.len(), b.len(), c.len()),
        a_mutually_distant: g.graph.is_clique(&a),
        b_mutually_distant: g.graph.is_clique(&b),
        c_distant_to_a_and_b: distant_pairs(&c, &a) + distant_pairs(&c, &b) == c.len() * (a.len() + b.len()),
        a_b_distant_pairs: distant_pairs(&a, &b),
        c_extension_count: ext(c[0])?,
        a_extension_counts: a.iter().map(|&v| ext(v)).collect::<Result<_>>()?,
        b_extension_counts: b.iter().map(|&v| ext(v)).collect::<Result<_>>()?,
        maximal_clique_sizes: sizes,
        passed: false,
    };
    let passed = report.extensions_found == 9
        && report.extensions_equal_classes
        && report.class_sizes == (4, 4, 1)
        && report.a_mutually_distant
        && report.b_mutually_distant
        && report.c_distant_to_a_and_b
        && report.a_b_distant_pairs == 0
        && report.c_extension_count == 8
        && report.a_extension_counts.iter().chain(&report.b_extension_counts).all(|&e| e == 4)
        && report.maximal_clique_sizes == [8, 8];
    Ok(AppendixBReport { passed, ..report })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixCReport {
    pub size: usize,
    pub all_invertible: bool,
    pub distant_pairs: usize,
    pub total_pairs: usize,
    /// Elements of `GL_2(q)` examined as possible extensions.
    pub candidates: usize,
    pub extending: usize,
    /// `q^m - 1`, the largest possible clique in the unit-difference graph.
    pub upper_bound: u64,
    pub passed: bool,
}

pub fn verify_appendix_C() -> Result<AppendixCReport> {
    let f = appendix_c()?;
    let g = unit_difference_graph(f.m, f.q, &Limits::default())?;
    let ms = f.matrices("clique")?;
    let found: Vec<Option<usize>> = ms.iter().map(|a| g.index_of(a)).collect();
    let all_invertible = found.iter().all(Option::is_some);
    let set: Vec<usize> = found.into_iter().flatten().collect();
    let total_pairs = set.len() * (set.len() - 1) / 2;
    let distant_pairs = set
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| set[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.graph.has_edge(u, v))
        .count();
    let candidates = g.graph.n();
    let extending = (0..candidates)
        .filter(|&v| set.iter().all(|&u| g.graph.has_edge(u, v)))
        .count();
    let upper_bound = f.q.pow(f.m as u32) - 1;
    let passed = all_invertible
        && set.len() == 20
        && distant_pairs == total_pairs
        && candidates == 480
        && extending == 0
        && (set.len() as u64) < upper_bound;
    Ok(AppendixCReport {
        size: set.len(),
        all_invertible,
        distant_pairs,
        total_pairs,
        candidates,
        extending,
        upper_bound,
        passed,
    })
}

#[cfg(test)]
mod tests {
    #![allow(non_snake_case)]
    use super::*;

    #[test]
    fn fixtures_load() {
        let b = appendix_b().unwrap();
        assert_eq!(b.matrices("clique").unwrap()[2], Matrix::from_rows(&[&[0, 2], &[1, 0]]).unwrap());
        assert_eq!(appendix_c().unwrap().sets["clique"].len(), 20);
    }

    #[test]
    fn tampering_is_detected() {
        let bad = APPENDIX_B_JSON.replacen("2221", "2220", 1);
        assert!(matches!(MatrixFixture::from_json(&bad), Err(Error::Fixture(_))));
        let mut f = appendix_c().unwrap();
        f.sets.get_mut("clique").unwrap()[0] = "0152".into();
        f.sha256 = f.digest();
        let s = serde_json::to_string(&f).unwrap();
        assert!(MatrixFixture::from_json(&s).is_err());
    }

    #[test]
    fn appendix_b_report() {
        let r = verify_appendix_B().unwrap();
        assert_eq!(r.class_sizes, (4, 4, 1));
        assert_eq!(r.c_extension_count, 8);
        assert_eq!(r.a_b_distant_pairs, 0);
        assert_eq!(r.maximal_clique_sizes, vec![8, 8]);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn appendix_c_report() {
        let r = verify_appendix_C().unwrap();
        assert_eq!((r.distant_pairs, r.total_pairs), (190, 190));
        assert_eq!((r.extending, r.candidates, r.upper_bound), (0, 480, 24));
        assert!(r.passed, "{r:?}");
    }
}
