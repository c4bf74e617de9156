//! Executable checkers for the bound, equality-characterization and
//! transformation claims, plus the extremal scan that locates min-pi1 /
//! max-pi2 trees per (n, k, gamma) cell.
//!
//! Every pass/fail decision is made by exact big-integer comparison.
//! Scans shard over the deterministic tree stream with order-preserving
//! collection, so reports are byte-identical for any worker count.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::domination::{gamma_k, removable_pendants};
use crate::enumeration::free_trees;
use crate::error::{Error, Result};
use crate::families::{closed_form_pi1, closed_form_pi2, corona_decompose, path, star, t_a_nk2, t_nks};
use crate::indices::{f_aux, g_ratio, h_aux, pi1, pi2};
use crate::transforms::{contract_pend, move_pendants};
use crate::tree::{text, Tree};

pub const ALL_CLAIMS: &[&str] = &[
    "lemma21",
    "lemma22",
    "lemma23",
    "lemma24",
    "lemma25",
    "lemma26",
    "lemma_f",
    "lemma_h",
    "lemma_bt",
    "g_monotone",
    "thm_gamma1",
    "thm_gamma2",
    "lemma31",
    "lemma32",
    "thm_main",
];

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    DiscrepancyDocumented,
}

#[derive(Serialize, Clone, Debug)]
pub struct Counterexample {
    /// Canonical code, hex encoded.
    pub code: String,
    /// The tree in the line-oriented text format, re-checkable as is.
    pub tree: String,
    pub observed: BTreeMap<String, String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClaimReport {
    pub id: String,
    pub range: String,
    pub status: ClaimStatus,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub gamma: usize,
    pub class_count: usize,
    pub min_pi1: String,
    pub min_pi1_achievers: Vec<String>,
    pub max_pi2: String,
    pub max_pi2_achievers: Vec<String>,
    pub bound_pi1: String,
    pub bound_pi2: String,
    pub pi1_bound_matches: bool,
    pub pi2_bound_matches: bool,
    pub expected_achievers: Vec<String>,
    pub achievers_match: bool,
    pub notes: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
/// Scan parameters recorded in the report. Deliberately excludes the
/// worker count so the report is byte-identical for any `--jobs` value.
pub struct VerifyParams {
    pub nmax: usize,
    pub kmax: usize,
    pub enumeration_cap: usize,
    pub oracle_cap: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct VerifyReport {
    pub version: String,
    pub params: VerifyParams,
    pub claims: Vec<ClaimReport>,
    pub extremal: Vec<ExtremalReport>,
}

impl VerifyReport {
    /// 1 when any claim failed outright, 0 otherwise (documented
    /// discrepancies do not fail a run).
    pub fn exit_code(&self) -> i32 {
        if self.claims.iter().any(|c| c.status == ClaimStatus::Fail) {
            1
        } else {
            0
        }
    }
}

/// Precomputed per-class invariants for one order.
pub struct TreeStats {
    pub tree: Tree,
    pub code_hex: String,
    pub pi1: Option<BigUint>,
    pub pi2: Option<BigUint>,
    pub f: BigUint,
    pub h: BigUint,
    /// gamma_k for k = 1..=kmax, indexed by k-1.
    pub gamma: Vec<usize>,
}

impl TreeStats {
    fn gamma(&self, k: usize) -> usize {
        self.gamma[k - 1]
    }
}

/// Shared scan state: all free-tree classes up to nmax with their exact
/// invariants.
pub struct ScanCache {
    pub nmax: usize,
    pub kmax: usize,
    by_n: Vec<Vec<TreeStats>>,
}

fn stats_for(t: Tree, kmax: usize) -> TreeStats {
    let code_hex = canonical_code(&t).to_hex();
    let gamma = (1..=kmax)
        .map(|k| gamma_k(&t, k).expect("valid k").gamma)
        .collect();
    TreeStats {
        code_hex,
        pi1: pi1(&t).ok(),
        pi2: pi2(&t).ok(),
        f: f_aux(&t),
        h: h_aux(&t),
        gamma,
        tree: t,
    }
}

impl ScanCache {
    pub fn build(nmax: usize, kmax: usize) -> Result<ScanCache> {
        if kmax < 1 {
            return Err(Error::InvalidK);
        }
        let mut by_n = Vec::with_capacity(nmax);
        for n in 1..=nmax {
            let trees = free_trees(n)?;
            by_n.push(
                trees
                    .into_par_iter()
                    .map(|t| stats_for(t, kmax))
                    .collect(),
            );
        }
        Ok(ScanCache { nmax, kmax, by_n })
    }

    pub fn stats(&self, n: usize) -> &[TreeStats] {
        &self.by_n[n - 1]
    }
}

fn counterexample(t: &Tree, observed: &[(&str, String)]) -> Counterexample {
    Counterexample {
        code: canonical_code(t).to_hex(),
        tree: text::format_line(t),
        observed: observed
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
    }
}

fn report(id: &str, range: String, ces: Vec<Counterexample>, notes: Vec<String>) -> ClaimReport {
    ClaimReport {
        id: id.to_string(),
        range,
        status: if ces.is_empty() {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
        counterexamples: ces,
        notes,
    }
}

fn big4pow(e: usize) -> BigUint {
    BigUint::from(4u32).pow(e as u32)
}

fn star_pi1(n: usize) -> BigUint {
    BigUint::from((n as u64 - 1) * (n as u64 - 1))
}

fn star_pi2(n: usize) -> BigUint {
    BigUint::from(n as u64 - 1).pow((n - 1) as u32)
}

/// Groups a stats slice into gamma cells for one k.
fn cells(stats: &[TreeStats], k: usize) -> BTreeMap<usize, Vec<&TreeStats>> {
    let mut m: BTreeMap<usize, Vec<&TreeStats>> = BTreeMap::new();
    for s in stats {
        m.entry(s.gamma(k)).or_default().push(s);
    }
    m
}

struct CellExtrema {
    min_pi1: BigUint,
    min_pi1_achievers: Vec<String>,
    max_pi2: BigUint,
    max_pi2_achievers: Vec<String>,
}

fn cell_extrema(cell: &[&TreeStats]) -> CellExtrema {
    let min_pi1 = cell.iter().map(|s| s.pi1.as_ref().unwrap()).min().unwrap().clone();
    let max_pi2 = cell.iter().map(|s| s.pi2.as_ref().unwrap()).max().unwrap().clone();
    let mut min_pi1_achievers: Vec<String> = cell
        .iter()
        .filter(|s| *s.pi1.as_ref().unwrap() == min_pi1)
        .map(|s| s.code_hex.clone())
        .collect();
    let mut max_pi2_achievers: Vec<String> = cell
        .iter()
        .filter(|s| *s.pi2.as_ref().unwrap() == max_pi2)
        .map(|s| s.code_hex.clone())
        .collect();
    min_pi1_achievers.sort();
    max_pi2_achievers.sort();
    CellExtrema {
        min_pi1,
        min_pi1_achievers,
        max_pi2,
        max_pi2_achievers,
    }
}

/// Expected bound values and achiever codes for one (n, k, gamma) cell.
fn cell_expectation(n: usize, k: usize, gamma: usize) -> Result<(BigUint, BigUint, Vec<String>, Vec<String>)> {
    match gamma {
        1 => {
            let code = canonical_code(&star(n)?).to_hex();
            Ok((
                star_pi1(n),
                star_pi2(n),
                vec![code],
                vec![
                    "gamma=1 cell checked against star values (n-1)^2 and (n-1)^(n-1); \
                     the printed bound n^2 / n^n is recorded as a documented discrepancy"
                        .into(),
                ],
            ))
        }
        2 => {
            let mut codes: BTreeSet<String> = BTreeSet::new();
            for a in 1..=k {
                codes.insert(canonical_code(&t_a_nk2(n, k, a)?).to_hex());
            }
            Ok((
                big4pow(2 * k - 1) * BigUint::from(((n - 2 * k) * (n - 2 * k)) as u64),
                big4pow(2 * k - 1) * BigUint::from((n - 2 * k) as u64).pow((n - 2 * k) as u32),
                codes.into_iter().collect(),
                Vec::new(),
            ))
        }
        g => {
            let code = canonical_code(&t_nks(n, k, g)?).to_hex();
            Ok((closed_form_pi1(n, k, g)?, closed_form_pi2(n, k, g)?, vec![code], Vec::new()))
        }
    }
}

fn extremal_report(n: usize, k: usize, gamma: usize, cell: &[&TreeStats]) -> Result<ExtremalReport> {
    let ex = cell_extrema(cell);
    let (bound_pi1, bound_pi2, expected, notes) = cell_expectation(n, k, gamma)?;
    let achievers_match = ex.min_pi1_achievers == expected && ex.max_pi2_achievers == expected;
    Ok(ExtremalReport {
        n,
        k,
        gamma,
        class_count: cell.len(),
        pi1_bound_matches: ex.min_pi1 == bound_pi1,
        pi2_bound_matches: ex.max_pi2 == bound_pi2,
        min_pi1: ex.min_pi1.to_string(),
        min_pi1_achievers: ex.min_pi1_achievers,
        max_pi2: ex.max_pi2.to_string(),
        max_pi2_achievers: ex.max_pi2_achievers,
        bound_pi1: bound_pi1.to_string(),
        bound_pi2: bound_pi2.to_string(),
        expected_achievers: expected,
        achievers_match,
        notes,
    })
}

/// Exact extrema over all isomorphism classes of order n per gamma_k cell,
/// compared against the closed-form bounds and expected achiever classes.
pub fn extremal_scan(n: usize, k: usize) -> Result<Vec<ExtremalReport>> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    if n < 2 {
        return Err(Error::SingleVertexIndex);
    }
    let stats: Vec<TreeStats> = free_trees(n)?
        .into_par_iter()
        .map(|t| stats_for(t, k))
        .collect();
    let refs: Vec<&TreeStats> = stats.iter().collect();
    let mut grouped: BTreeMap<usize, Vec<&TreeStats>> = BTreeMap::new();
    for s in refs {
        grouped.entry(s.gamma(k)).or_default().push(s);
    }
    grouped
        .into_iter()
        .map(|(gamma, cell)| extremal_report(n, k, gamma, &cell))
        .collect()
}

fn claim_lemma21(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for n in 6..=cache.nmax {
        let star_hex = canonical_code(&star(n)?).to_hex();
        let path_hex = canonical_code(&path(n)?).to_hex();
        let (s1, p1) = (star_pi1(n), pi1(&path(n)?)?);
        let (s2, p2) = (star_pi2(n), pi2(&path(n)?)?);
        for s in cache.stats(n) {
            if s.code_hex == star_hex || s.code_hex == path_hex {
                continue;
            }
            let t1 = s.pi1.as_ref().unwrap();
            let t2 = s.pi2.as_ref().unwrap();
            if !(&s1 < t1 && t1 < &p1 && &p2 < t2 && t2 < &s2) {
                ces.push(counterexample(
                    &s.tree,
                    &[("pi1", t1.to_string()), ("pi2", t2.to_string())],
                ));
            }
        }
    }
    Ok(report(
        "lemma21",
        format!("6 <= n <= {}", cache.nmax),
        ces,
        vec!["pi1 strictly between star and path, pi2 strictly between path and star".into()],
    ))
}

fn claim_lemma22(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for n in 4..=cache.nmax {
        let per_tree: Vec<Vec<Counterexample>> = cache
            .stats(n)
            .par_iter()
            .map(|s| {
                let mut local = Vec::new();
                let p1 = s.pi1.as_ref().unwrap();
                let p2 = s.pi2.as_ref().unwrap();
                for (u, v) in s.tree.edges() {
                    if s.tree.degree(u) < 2 || s.tree.degree(v) < 2 {
                        continue;
                    }
                    let tuv = contract_pend(&s.tree, u, v).expect("non-pendant edge");
                    let q1 = pi1(&tuv).unwrap();
                    let q2 = pi2(&tuv).unwrap();
                    if !(q1 < *p1 && q2 > *p2) {
                        local.push(counterexample(
                            &s.tree,
                            &[
                                ("edge", format!("({u}, {v})")),
                                ("pi1", p1.to_string()),
                                ("pi1_contracted", q1.to_string()),
                                ("pi2", p2.to_string()),
                                ("pi2_contracted", q2.to_string()),
                            ],
                        ));
                    }
                }
                local
            })
            .collect();
        ces.extend(per_tree.into_iter().flatten());
    }
    Ok(report(
        "lemma22",
        format!("n <= {}, every non-pendant edge", cache.nmax),
        ces,
        Vec::new(),
    ))
}

fn claim_lemma23(cache: &ScanCache) -> Result<ClaimReport> {
    // Checked reading: min pi1 strictly drops and max pi2 strictly rises
    // over the two moves. The printed conclusions (max pi1 drops; the
    // mixed-index min line) are additionally scanned and their violations
    // recorded as a documented discrepancy.
    let mut ces = Vec::new();
    let mut printed_violations = 0usize;
    let mut printed_sample: Option<String> = None;
    for n in 4..=cache.nmax {
        let per_tree: Vec<(Vec<Counterexample>, Vec<String>)> = cache
            .stats(n)
            .par_iter()
            .map(|s| {
                let mut corrected = Vec::new();
                let mut printed = Vec::new();
                let p1 = s.pi1.as_ref().unwrap();
                let p2 = s.pi2.as_ref().unwrap();
                for u in 0..n {
                    for v in u + 1..n {
                        let Ok((gp, gpp)) = move_pendants(&s.tree, u, v) else {
                            continue;
                        };
                        let a1 = pi1(&gp).unwrap();
                        let b1 = pi1(&gpp).unwrap();
                        let a2 = pi2(&gp).unwrap();
                        let b2 = pi2(&gpp).unwrap();
                        let fields = |tag: &'static str| {
                            vec![
                                ("pair", format!("({u}, {v})")),
                                ("violates", tag.to_string()),
                                ("pi1", p1.to_string()),
                                ("pi1_moved", format!("{a1} / {b1}")),
                                ("pi2", p2.to_string()),
                                ("pi2_moved", format!("{a2} / {b2}")),
                            ]
                        };
                        if !(a1.clone().min(b1.clone()) < *p1
                            && a2.clone().max(b2.clone()) > *p2)
                        {
                            corrected.push(counterexample(&s.tree, &fields("corrected reading")));
                        }
                        if !(a1.max(b1) < *p1 && a2.min(b2) > *p2) {
                            printed.push(format!(
                                "tree \"{}\" pair ({u}, {v})",
                                text::format_line(&s.tree)
                            ));
                        }
                    }
                }
                (corrected, printed)
            })
            .collect();
        for (corrected, printed) in per_tree {
            ces.extend(corrected);
            printed_violations += printed.len();
            if printed_sample.is_none() {
                printed_sample = printed.into_iter().next();
            }
        }
    }
    let mut notes = vec![
        "checked reading: min{pi1(G'), pi1(G'')} < pi1(G) and max{pi2(G'), pi2(G'')} > pi2(G), \
         the form the later proofs rely on; the printed mixed-index line \
         min{pi1(G'), pi1(G'')} > pi2(G) is treated as a typo"
            .into(),
    ];
    let discrepancy = printed_violations > 0;
    if discrepancy {
        notes.push(format!(
            "printed strict max{{pi1}} / min{{pi2}} directions are falsified by exact scan: \
             {printed_violations} violating (tree, pair) instances; first: {}",
            printed_sample.as_deref().unwrap_or("-")
        ));
    }
    let mut rep = report(
        "lemma23",
        format!("n <= {}, every pair with pendant neighbors at both", cache.nmax),
        ces,
        notes,
    );
    if rep.status == ClaimStatus::Pass && discrepancy {
        rep.status = ClaimStatus::DiscrepancyDocumented;
    }
    Ok(rep)
}

fn claim_lemma24(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for k in 1..=cache.kmax {
        for n in (k + 1)..=cache.nmax {
            for s in cache.stats(n) {
                let g = s.gamma(k);
                if g > n / (k + 1) {
                    ces.push(counterexample(
                        &s.tree,
                        &[
                            ("k", k.to_string()),
                            ("gamma", g.to_string()),
                            ("floor_bound", (n / (k + 1)).to_string()),
                        ],
                    ));
                }
            }
        }
    }
    Ok(report(
        "lemma24",
        format!("k+1 <= n <= {}, k <= {}", cache.nmax, cache.kmax),
        ces,
        Vec::new(),
    ))
}

fn claim_lemma25(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for k in 1..=cache.kmax {
        for n in 2..=cache.nmax {
            for s in cache.stats(n) {
                let g = s.gamma(k);
                if g >= 2 && s.tree.max_degree() + k * g > n {
                    ces.push(counterexample(
                        &s.tree,
                        &[
                            ("k", k.to_string()),
                            ("gamma", g.to_string()),
                            ("max_degree", s.tree.max_degree().to_string()),
                        ],
                    ));
                }
            }
        }
    }
    Ok(report(
        "lemma25",
        format!("n <= {}, k <= {}, gamma >= 2", cache.nmax, cache.kmax),
        ces,
        Vec::new(),
    ))
}

fn claim_lemma26(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for k in 1..=cache.kmax {
        for m in 1..=cache.nmax / (k + 1) {
            let n = (k + 1) * m;
            for s in cache.stats(n) {
                let lhs = s.gamma(k) == m;
                let rhs = m == 1 || corona_decompose(&s.tree, k)?.is_some();
                if lhs != rhs {
                    ces.push(counterexample(
                        &s.tree,
                        &[
                            ("k", k.to_string()),
                            ("gamma", s.gamma(k).to_string()),
                            ("base_size", m.to_string()),
                            ("corona_decomposable", rhs.to_string()),
                        ],
                    ));
                }
            }
        }
    }
    Ok(report(
        "lemma26",
        format!("n = (k+1)m <= {}, k <= {}", cache.nmax, cache.kmax),
        ces,
        vec!["gamma_k equals the base size exactly for coronas, plus the (k+1)-vertex base case".into()],
    ))
}

fn claim_lemma_f(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for n in 1..=cache.nmax {
        let bound = BigUint::from(2u32).pow((n - 1) as u32) * BigUint::from(n as u64);
        let star_hex = if n >= 2 {
            canonical_code(&star(n)?).to_hex()
        } else {
            cache.stats(1)[0].code_hex.clone()
        };
        for s in cache.stats(n) {
            let is_star = s.code_hex == star_hex;
            let ok = s.f >= bound && ((s.f == bound) == is_star);
            if !ok {
                ces.push(counterexample(
                    &s.tree,
                    &[("f", s.f.to_string()), ("bound", bound.to_string())],
                ));
            }
        }
    }
    Ok(report(
        "lemma_f",
        format!("n <= {}", cache.nmax),
        ces,
        vec!["f(T) >= 2^(n-1) n with equality exactly at the star".into()],
    ))
}

fn claim_lemma_h(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    for n in 1..=cache.nmax {
        let bound = big4pow(n - 1) * BigUint::from(n as u64).pow(n as u32);
        let star_hex = if n >= 2 {
            canonical_code(&star(n)?).to_hex()
        } else {
            cache.stats(1)[0].code_hex.clone()
        };
        for s in cache.stats(n) {
            let is_star = s.code_hex == star_hex;
            let ok = s.h <= bound && ((s.h == bound) == is_star);
            if !ok {
                ces.push(counterexample(
                    &s.tree,
                    &[("h", s.h.to_string()), ("bound", bound.to_string())],
                ));
            }
        }
    }
    Ok(report(
        "lemma_h",
        format!("n <= {}", cache.nmax),
        ces,
        vec!["h(T) <= 4^(n-1) n^n with equality exactly at the star".into()],
    ))
}

fn claim_lemma_bt(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    let mut nonextremal_scanned = 0usize;
    let mut nonextremal_wide = 0usize;
    // n = 2 is excluded: both vertices are pendants supporting each other,
    // so N(B) = V trivially; the lemma's argument needs a non-pendant
    // support vertex.
    for k in 1..=cache.kmax {
        for n in 3..=cache.nmax {
            for (_gamma, cell) in cells(cache.stats(n), k) {
                let ex = cell_extrema(&cell);
                for s in &cell {
                    let extremal = ex.min_pi1_achievers.contains(&s.code_hex)
                        || ex.max_pi2_achievers.contains(&s.code_hex);
                    let (b, nset) = removable_pendants(&s.tree, k)?;
                    let wide = !b.is_empty() && nset.len() > 1;
                    if extremal {
                        if wide {
                            ces.push(counterexample(
                                &s.tree,
                                &[
                                    ("k", k.to_string()),
                                    ("B", format!("{b:?}")),
                                    ("N(B)", format!("{nset:?}")),
                                ],
                            ));
                        }
                    } else {
                        nonextremal_scanned += 1;
                        if wide {
                            nonextremal_wide += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(report(
        "lemma_bt",
        format!("3 <= n <= {}, k <= {}, extremal trees per (n, gamma) cell", cache.nmax, cache.kmax),
        ces,
        vec![
            "n = 2 excluded: both vertices of P_2 are mutually supporting pendants, \
             so N(B) = V(T) degenerately"
                .into(),
            format!(
                "recorded, not asserted: {nonextremal_wide} of {nonextremal_scanned} non-extremal \
                 trees have nonempty B with |N(B)| > 1"
            ),
        ],
    ))
}

fn claim_g_monotone() -> ClaimReport {
    let mut ces = Vec::new();
    for x in 2..=64u64 {
        if !(g_ratio(x + 1).unwrap() > g_ratio(x).unwrap()) {
            ces.push(Counterexample {
                code: String::new(),
                tree: String::new(),
                observed: [("x".to_string(), x.to_string())].into_iter().collect(),
            });
        }
    }
    report(
        "g_monotone",
        "2 <= x <= 64".into(),
        ces,
        vec!["g(x) = x^x/(x-1)^(x-1) strictly increasing, by cross-multiplied exact comparison".into()],
    )
}

/// Shared core of the cell-versus-bound claims: for each selected cell,
/// require the stated bounds and achiever set to hold exactly.
fn check_cells<F>(cache: &ScanCache, select: F, ces: &mut Vec<Counterexample>) -> Result<()>
where
    F: Fn(usize, usize, usize) -> bool,
{
    for k in 2..=cache.kmax {
        for n in 2..=cache.nmax {
            for (gamma, cell) in cells(cache.stats(n), k) {
                if !select(n, k, gamma) {
                    continue;
                }
                let ex = cell_extrema(&cell);
                let (b1, b2, expected, _) = cell_expectation(n, k, gamma)?;
                if ex.min_pi1 != b1
                    || ex.max_pi2 != b2
                    || ex.min_pi1_achievers != expected
                    || ex.max_pi2_achievers != expected
                {
                    let witness = &cell[0].tree;
                    ces.push(counterexample(
                        witness,
                        &[
                            ("n", n.to_string()),
                            ("k", k.to_string()),
                            ("gamma", gamma.to_string()),
                            ("min_pi1", ex.min_pi1.to_string()),
                            ("bound_pi1", b1.to_string()),
                            ("max_pi2", ex.max_pi2.to_string()),
                            ("bound_pi2", b2.to_string()),
                            ("achievers", format!("{:?}", ex.min_pi1_achievers)),
                            ("expected", format!("{expected:?}")),
                        ],
                    ));
                }
            }
        }
    }
    Ok(())
}

fn claim_thm_gamma1(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    check_cells(cache, |_, _, gamma| gamma == 1, &mut ces)?;
    let mut rep = report(
        "thm_gamma1",
        format!("n <= {}, 2 <= k <= {}, gamma = 1", cache.nmax, cache.kmax),
        ces,
        vec![
            "documented discrepancy: the printed bounds n^2 and n^n are not attained by \
             the stated equality case S_n; the cell is checked against the star values (n-1)^2 \
             and (n-1)^(n-1), which the scan confirms"
                .into(),
        ],
    );
    if rep.status == ClaimStatus::Pass {
        rep.status = ClaimStatus::DiscrepancyDocumented;
    }
    Ok(rep)
}

fn claim_thm_gamma2(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    check_cells(cache, |_, _, gamma| gamma == 2, &mut ces)?;
    Ok(report(
        "thm_gamma2",
        format!("n <= {}, 2 <= k <= {}, gamma = 2", cache.nmax, cache.kmax),
        ces,
        vec!["achiever set must equal the distinct classes among t_a_nk2(n, k, a)".into()],
    ))
}

fn claim_lemma31(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    check_cells(
        cache,
        |n, k, gamma| gamma >= 3 && n == (k + 1) * gamma,
        &mut ces,
    )?;
    Ok(report(
        "lemma31",
        format!("n = (k+1)gamma <= {}, 2 <= k <= {}, gamma >= 3", cache.nmax, cache.kmax),
        ces,
        vec!["corona case: bound 4^(k gamma - 1) gamma^2, consistent with the main theorem at n - k gamma = gamma".into()],
    ))
}

fn claim_lemma32(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    check_cells(cache, |_, _, gamma| gamma == 3, &mut ces)?;
    Ok(report(
        "lemma32",
        format!("n <= {}, 2 <= k <= {}, gamma = 3", cache.nmax, cache.kmax),
        ces,
        Vec::new(),
    ))
}

fn claim_thm_main(cache: &ScanCache) -> Result<ClaimReport> {
    let mut ces = Vec::new();
    check_cells(cache, |_, _, gamma| gamma >= 3, &mut ces)?;
    Ok(report(
        "thm_main",
        format!("n <= {}, 2 <= k <= {}, gamma >= 3", cache.nmax, cache.kmax),
        ces,
        vec!["unique achiever must be t_nks(n, k, gamma) for both indices".into()],
    ))
}

/// Runs one claim checker over the cached scan state.
pub fn run_claim(cache: &ScanCache, id: &str) -> Result<ClaimReport> {
    match id {
        "lemma21" => claim_lemma21(cache),
        "lemma22" => claim_lemma22(cache),
        "lemma23" => claim_lemma23(cache),
        "lemma24" => claim_lemma24(cache),
        "lemma25" => claim_lemma25(cache),
        "lemma26" => claim_lemma26(cache),
        "lemma_f" => claim_lemma_f(cache),
        "lemma_h" => claim_lemma_h(cache),
        "lemma_bt" => claim_lemma_bt(cache),
        "g_monotone" => Ok(claim_g_monotone()),
        "thm_gamma1" => claim_thm_gamma1(cache),
        "thm_gamma2" => claim_thm_gamma2(cache),
        "lemma31" => claim_lemma31(cache),
        "lemma32" => claim_lemma32(cache),
        "thm_main" => claim_thm_main(cache),
        _ => Err(Error::UnknownClaim(id.to_string())),
    }
}

/// One-shot claim check with a freshly built cache.
pub fn verify_claim(id: &str, nmax: usize, kmax: usize) -> Result<ClaimReport> {
    let cache = ScanCache::build(nmax, kmax)?;
    run_claim(&cache, id)
}

/// Runs the selected claims plus the full extremal scan inside a worker
/// pool of the requested size. Identical output for any job count.
pub fn run_all(claims: &[String], nmax: usize, kmax: usize, jobs: usize) -> Result<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let cache = ScanCache::build(nmax, kmax)?;
        let mut claim_reports = Vec::new();
        for id in claims {
            claim_reports.push(run_claim(&cache, id)?);
        }
        let mut extremal = Vec::new();
        for k in 2..=kmax {
            for n in 2..=nmax {
                for (gamma, cell) in cells(cache.stats(n), k) {
                    extremal.push(extremal_report(n, k, gamma, &cell)?);
                }
            }
        }
        Ok(VerifyReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            params: VerifyParams {
                nmax,
                kmax,
                enumeration_cap: crate::enumeration::ENUMERATION_CAP,
                oracle_cap: crate::domination::ORACLE_CAP,
            },
            claims: claim_reports,
            extremal,
        })
    })
}

/// Pretty JSON with a trailing newline; byte-identical for equal inputs.
pub fn report_json(report: &VerifyReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable report");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per claim and per extremal cell.
pub fn report_csv(report: &VerifyReport) -> String {
    let mut out = String::from(
        "kind,id,n,k,gamma,status,class_count,min_pi1,bound_pi1,max_pi2,bound_pi2,matches,detail\n",
    );
    for c in &report.claims {
        let status = match c.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::DiscrepancyDocumented => "discrepancy-documented",
        };
        out.push_str(&format!(
            "claim,{},,,,{},,,,,,,{}\n",
            c.id,
            status,
            csv_field(&format!("{} | {}", c.range, c.notes.join("; ")))
        ));
    }
    for e in &report.extremal {
        let matches = e.pi1_bound_matches && e.pi2_bound_matches && e.achievers_match;
        out.push_str(&format!(
            "extremal,cell,{},{},{},,{},{},{},{},{},{},{}\n",
            e.n,
            e.k,
            e.gamma,
            e.class_count,
            e.min_pi1,
            e.bound_pi1,
            e.max_pi2,
            e.bound_pi2,
            matches,
            csv_field(&e.notes.join("; "))
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim_rejected() {
        assert!(matches!(
            verify_claim("lemma99", 6, 2),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn g_monotone_passes() {
        assert_eq!(claim_g_monotone().status, ClaimStatus::Pass);
    }

    #[test]
    fn extremal_scan_10_2() {
        let reports = extremal_scan(10, 2).unwrap();
        let cell2 = reports.iter().find(|r| r.gamma == 2).unwrap();
        assert_eq!(cell2.min_pi1, "2304");
        assert_eq!(cell2.min_pi1_achievers.len(), 2);
        assert!(cell2.pi1_bound_matches && cell2.pi2_bound_matches && cell2.achievers_match);
    }

    #[test]
    fn extremal_scan_9_2_gamma3() {
        let reports = extremal_scan(9, 2).unwrap();
        let cell3 = reports.iter().find(|r| r.gamma == 3).unwrap();
        assert_eq!(cell3.min_pi1, "9216");
        assert_eq!(cell3.min_pi1_achievers.len(), 1);
        assert_eq!(
            cell3.min_pi1_achievers[0],
            canonical_code(&t_nks(9, 2, 3).unwrap()).to_hex()
        );
    }

    #[test]
    fn extremal_scan_7_2_gamma1_star() {
        let reports = extremal_scan(7, 2).unwrap();
        let cell1 = reports.iter().find(|r| r.gamma == 1).unwrap();
        assert_eq!(cell1.min_pi1, "36");
        assert_eq!(
            cell1.min_pi1_achievers,
            vec![canonical_code(&star(7).unwrap()).to_hex()]
        );
    }

    #[test]
    fn small_run_all_is_deterministic_and_clean() {
        let claims: Vec<String> = ALL_CLAIMS.iter().map(|s| s.to_string()).collect();
        let a = run_all(&claims, 8, 2, 1).unwrap();
        let b = run_all(&claims, 8, 2, 4).unwrap();
        assert_eq!(report_json(&a), report_json(&b));
        assert_eq!(a.exit_code(), 0);
        for c in &a.claims {
            // lemma23's printed strict-max direction fails on symmetric
            // pendant swaps; the checker verifies the corrected reading and
            // records the printed one as a documented discrepancy.
            let expected = if c.id == "thm_gamma1" || c.id == "lemma23" {
                ClaimStatus::DiscrepancyDocumented
            } else {
                ClaimStatus::Pass
            };
            assert_eq!(c.status, expected, "claim {}", c.id);
        }
    }
}
