//! The bundled end-to-end verification suite behind `khg verify`.
//!
//! Each check rebuilds its objects through the public API and reports
//! PASS/FAIL with a short detail string. The `fast` suite uses the internal
//! solver only; `full` also needs an external solver for the large
//! colourability instance and the backend-agreement check.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    compute_m_certified, compute_rho, nonprincipality_params, sample_dense_msets, size_condition,
    tail_condition, SampleMode,
};
use crate::checkers::{
    colour, contains_extension_member, embed_fr_recursive, find_embedding, greedy_embed_f2,
    verify_containment, ColourBackend, ColourOutcome, FrOutcome, GreedyOutcome, SearchLimits,
    SearchOutcome,
};
use crate::combinat::{binomial, lex_subsets};
use crate::constructions::{
    extension_family_iter, gen_fr, gen_gabn, gen_ktt, gen_rpartite, FrParams, GabnParams,
};
use crate::hypercore::{min_codegree, parse_khg, verify_embedding, write_khg};
use crate::satgate::{brute_force_coex, coex_exact, Backend};
use crate::{Error, Hypergraph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Full,
}

pub type FrGenerator = fn(usize, usize) -> Result<Hypergraph>;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Generator used for every `F^k_r`; replaceable to test the suite.
    pub fr: FrGenerator,
    /// Required by the full suite.
    pub external: Option<Backend>,
}

impl SuiteConfig {
    pub fn fast() -> Self {
        SuiteConfig {
            suite: Suite::Fast,
            fr: gen_fr,
            external: None,
        }
    }

    pub fn full(external: Backend) -> Self {
        SuiteConfig {
            suite: Suite::Full,
            fr: gen_fr,
            external: Some(external),
        }
    }
}

/// `gen_fr` with the last edge dropped.
pub fn corrupted_fr(k: usize, r: usize) -> Result<Hypergraph> {
    let h = gen_fr(k, r)?;
    let last = h.edges().last().cloned().expect("F^k_r has edges");
    Ok(h.without_edge(&last))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

type Check = fn(&SuiteConfig) -> Result<(bool, String)>;

const CHECKS: [(&str, Check); 10] = [
    ("construction-counts", check_counts),
    ("codegree-bounds", check_codegree),
    ("colourability", check_colourability),
    ("freeness", check_freeness),
    ("extension-blocking", check_extension),
    ("coex-oracle", check_coex),
    ("formulas", check_formulas),
    ("greedy-embedders", check_greedy),
    ("estimator", check_estimator),
    ("round-trip", check_round_trip),
];

/// Runs every check. Errors only when the full suite has no external solver.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    if cfg.suite == Suite::Full && cfg.external.is_none() {
        return Err(Error::Backend(
            "the full suite needs an external solver (KHG_SAT_CMD)".into(),
        ));
    }
    Ok(CHECKS
        .iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(cfg) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name,
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect())
}

fn check_counts(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let expected = [
        ((3, 1), (3, 1)),
        ((3, 2), (12, 12)),
        ((3, 3), (76, 144)),
        ((4, 2), (45, 50)),
    ];
    for ((k, r), (v, e)) in expected {
        let h = (cfg.fr)(k, r)?;
        if (h.n(), h.edge_count()) != (v, e) {
            return Ok((
                false,
                format!(
                    "F({k},{r}) has {} vertices, {} edges; expected {v}, {e}",
                    h.n(),
                    h.edge_count()
                ),
            ));
        }
    }
    for t in 1..=8 {
        let h = gen_ktt(t, 3)?;
        if h.edge_count() as u128 != 2 * t as u128 * binomial(t, 2) {
            return Ok((
                false,
                format!("K(t,t) with t = {t} has {} edges", h.edge_count()),
            ));
        }
    }
    let base = Hypergraph::new(3, 3, [[0, 1, 2]])?;
    for (s, t) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        for m in extension_family_iter(&base, s, t, false)? {
            let r = m.n() - base.n();
            if m.edge_count() != base.edge_count() + r * t {
                return Ok((
                    false,
                    format!("extension member with s={s}, t={t} has wrong size"),
                ));
            }
        }
    }
    Ok((
        true,
        "F sizes, K(t,t) sizes and extension sizes match".into(),
    ))
}

/// Whether the codegree and neighbourhood guarantees of the a-part
/// construction hold for `p`. Returns a description of the first failure.
pub fn gabn_guarantees(p: &GabnParams) -> Result<Option<String>> {
    let h = gen_gabn(p)?;
    let delta = min_codegree(&h)?;
    if (delta as f64) < p.codegree_lower_bound() - 1e-9 {
        return Ok(Some(format!("{p:?}: δ = {delta} below bound")));
    }
    let part = p.parts();
    let members: Vec<Vec<usize>> = (0..p.a)
        .map(|i| (0..p.n).filter(|&v| part[v] == i).collect())
        .collect();
    for s in lex_subsets(p.n, p.k - 1) {
        let nbr = h.neighbourhood(&s)?;
        let covered = |i: usize| members[i].iter().all(|v| s.contains(v) || nbr.contains(v));
        let first = part[s[0]];
        let ok = if s.iter().all(|&v| part[v] == first) {
            p.forward_parts(first).all(covered)
        } else {
            (0..p.a).filter(|&i| covered(i)).count() >= p.b
        };
        if !ok {
            return Ok(Some(format!(
                "{p:?}: neighbourhood of {s:?} misses whole parts"
            )));
        }
    }
    Ok(None)
}

fn check_codegree(_: &SuiteConfig) -> Result<(bool, String)> {
    let mut cases = 0;
    for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 3)] {
        for n in 2 * a..=30 {
            if let Some(why) = gabn_guarantees(&GabnParams::new(a, b, n, 3)?)? {
                return Ok((false, why));
            }
            cases += 1;
        }
    }
    Ok((
        true,
        format!("{cases} constructions meet the codegree bound"),
    ))
}

fn check_colourability(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let f32 = (cfg.fr)(3, 2)?;
    let want = FrParams::new(3, 2)?.edge_count();
    if f32.edge_count() as u128 != want {
        return Ok((
            false,
            format!("F(3,2) has {} edges, expected {want}", f32.edge_count()),
        ));
    }
    let internal = ColourBackend::Sat(Backend::internal());
    for (label, b) in [("exhaustive", &ColourBackend::Brute), ("sat", &internal)] {
        if colour(&f32, 2, b)? != ColourOutcome::NotColourable {
            return Ok((
                false,
                format!("F(3,2) is 2-colourable by the {label} backend"),
            ));
        }
    }
    let brute3 = colour(&f32, 3, &ColourBackend::Brute)?.is_colourable();
    let sat3 = colour(&f32, 3, &internal)?.is_colourable();
    if brute3 != sat3 {
        return Ok((false, "backends disagree on F(3,2) with 3 parts".into()));
    }
    let mut detail = format!("F(3,2) not 2-colourable; 3 parts: {brute3}");
    if let (Suite::Full, Some(ext)) = (cfg.suite, &cfg.external) {
        let f33 = (cfg.fr)(3, 3)?;
        if colour(&f33, 3, &ColourBackend::Sat(ext.clone()))? != ColourOutcome::NotColourable {
            return Ok((
                false,
                "F(3,3) is 3-colourable by the external backend".into(),
            ));
        }
        detail.push_str("; F(3,3) not 3-colourable");
    }
    Ok((true, detail))
}

fn check_freeness(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let f32 = (cfg.fr)(3, 2)?;
    let sizes: &[usize] = match cfg.suite {
        Suite::Fast => &[12],
        Suite::Full => &[12, 13],
    };
    for &n in sizes {
        match find_embedding(&gen_rpartite(n, 2, 3)?, &f32)? {
            SearchOutcome::None => {}
            other => return Ok((false, format!("2-partite host on {n} vertices: {other:?}"))),
        }
    }
    let host = gen_rpartite(8, 2, 3)?;
    let k4 = Hypergraph::complete(3, 4)?;
    match find_embedding(&host, &k4)? {
        SearchOutcome::Found(e) if verify_embedding(&host, &k4, e.map()).is_ok() => {}
        other => return Ok((false, format!("K4 control: {other:?}"))),
    }
    Ok((
        true,
        format!("F(3,2)-free for n in {sizes:?}; K4 control found"),
    ))
}

fn check_extension(_: &SuiteConfig) -> Result<(bool, String)> {
    let host = gen_gabn(&GabnParams::new(2, 1, 12, 3)?)?;
    let k4 = Hypergraph::complete(3, 4)?;
    if !find_embedding(&host, &k4)?.is_found() {
        return Ok((false, "K4 does not embed in the host".into()));
    }
    let lim = SearchLimits::default();
    if contains_extension_member(&host, &k4, 2, 2, &lim)? != SearchOutcome::None {
        return Ok((false, "host contains a (2,2)-extension of K4".into()));
    }
    let complete = Hypergraph::complete(3, 10)?;
    let triple = Hypergraph::new(3, 3, [[0, 1, 2]])?;
    match contains_extension_member(&complete, &triple, 2, 1, &lim)? {
        SearchOutcome::Found(cert) => verify_containment(&complete, &triple, 2, 1, &cert)?,
        other => return Ok((false, format!("complete host: {other:?}"))),
    }
    Ok((
        true,
        "blocked in the 2-part host, certified in the complete host".into(),
    ))
}

/// The three families of the oracle comparison, with display names.
pub fn oracle_families() -> Result<Vec<(&'static str, Vec<Hypergraph>)>> {
    let k4 = Hypergraph::complete(3, 4)?;
    let k4_minus = k4.without_edge(&[1, 2, 3]);
    Ok(vec![
        ("triple", vec![Hypergraph::new(3, 3, [[0, 1, 2]])?]),
        ("K4", vec![k4]),
        ("K4-", vec![k4_minus]),
    ])
}

fn check_coex(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let ns: &[usize] = match cfg.suite {
        Suite::Fast => &[4, 5],
        Suite::Full => &[4, 5, 6],
    };
    let mut backends = vec![Backend::internal()];
    backends.extend(
        cfg.external
            .iter()
            .filter(|_| cfg.suite == Suite::Full)
            .cloned(),
    );
    let mut rows = Vec::new();
    for (name, fam) in oracle_families()? {
        for &n in ns {
            let oracle = brute_force_coex(n, 3, &fam)?;
            for b in &backends {
                let got = coex_exact(n, 3, &fam, b)?.value;
                if got != oracle {
                    return Ok((
                        false,
                        format!("{name}, n = {n}: {} gives {got}, oracle {oracle}", b.name()),
                    ));
                }
            }
            rows.push(format!("{name}/{n}={oracle}"));
        }
    }
    Ok((true, rows.join(" ")))
}

fn check_formulas(_: &SuiteConfig) -> Result<(bool, String)> {
    if (compute_rho(3, 2)? - 2f64.powf(-1.5)).abs() > 1e-12 {
        return Ok((false, "rho(3,2) differs from 2^(-3/2)".into()));
    }
    for k in 3..=5 {
        for ell in k - 1..=10 {
            let p = nonprincipality_params(k, ell)?;
            if p.rho >= 0.5 || p.epsilon <= 0.0 {
                return Ok((false, format!("k = {k}, ell = {ell}: rho = {}", p.rho)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for step in 1..=10 {
        let delta = step as f64 / 10.0;
        let c = compute_m_certified(delta, 3)?;
        let both = |m: u64| size_condition(m, delta, 3) && tail_condition(m, delta, 3);
        if !both(c.m) || both(c.m - 1) {
            return Ok((false, format!("M({delta}) = {} is not the threshold", c.m)));
        }
        for _ in 0..100 {
            let m = c.m + rng.gen_range(1..=10 * c.m);
            if !both(m) {
                return Ok((false, format!("M({delta}): m = {m} fails")));
            }
        }
    }
    Ok((true, "rho, epsilon and M thresholds verified".into()))
}

/// Hosts on at most 15 vertices used to compare the two `F^3_2` deciders.
pub fn embedder_hosts() -> Result<Vec<(String, Hypergraph)>> {
    let mut hosts = Vec::new();
    for n in 12..=15 {
        hosts.push((format!("complete-{n}"), Hypergraph::complete(3, n)?));
        hosts.push((format!("rpartite-{n}-2"), gen_rpartite(n, 2, 3)?));
        hosts.push((format!("rpartite-{n}-3"), gen_rpartite(n, 3, 3)?));
        hosts.push((
            format!("gabn-2-1-{n}"),
            gen_gabn(&GabnParams::new(2, 1, n, 3)?)?,
        ));
        hosts.push((
            format!("gabn-3-2-{n}"),
            gen_gabn(&GabnParams::new(3, 2, n, 3)?)?,
        ));
    }
    Ok(hosts)
}

fn check_greedy(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let k20 = Hypergraph::complete(3, 20)?;
    match greedy_embed_f2(&k20)? {
        GreedyOutcome::Found(e) if verify_embedding(&k20, &(cfg.fr)(3, 2)?, e.map()).is_ok() => {}
        other => return Ok((false, format!("complete host: {other:?}"))),
    }
    if matches!(
        greedy_embed_f2(&gen_rpartite(20, 2, 3)?)?,
        GreedyOutcome::Found(_)
    ) {
        return Ok((
            false,
            "greedy embedded F(3,2) in a 2-colourable host".into(),
        ));
    }
    let f32 = (cfg.fr)(3, 2)?;
    let hosts = embedder_hosts()?;
    let take = match cfg.suite {
        Suite::Fast => 5,
        Suite::Full => hosts.len(),
    };
    for (name, h) in hosts.iter().take(take) {
        let by_search = match find_embedding(h, &f32)? {
            SearchOutcome::Found(_) => true,
            SearchOutcome::None => false,
            SearchOutcome::Budget => return Ok((false, format!("{name}: budget"))),
        };
        let by_induction = match embed_fr_recursive(h, 2, &SearchLimits::default())? {
            FrOutcome::Found(_) => true,
            FrOutcome::Failed(_) => false,
            FrOutcome::Budget => return Ok((false, format!("{name}: budget"))),
        };
        if by_search != by_induction {
            return Ok((
                false,
                format!("{name}: search {by_search}, induction {by_induction}"),
            ));
        }
    }
    Ok((true, format!("greedy controls pass; {take} hosts agree")))
}

/// Graphs on which the exhaustive and sampled estimators are compared,
/// each with its `(m, alpha)`. All have `C(n, m) ≤ 10^4`.
pub fn estimator_corpus() -> Result<Vec<(String, Hypergraph, usize, f64)>> {
    let mut out = Vec::new();
    for (a, b, n, m, alpha) in [
        (2, 1, 8, 5, 0.3),
        (2, 1, 10, 6, 0.3),
        (3, 1, 12, 6, 0.2),
        (3, 2, 12, 7, 0.4),
        (4, 3, 14, 6, 0.5),
        (2, 1, 14, 5, 0.25),
    ] {
        let h = gen_gabn(&GabnParams::new(a, b, n, 3)?)?;
        out.push((format!("gabn-{a}-{b}-{n}"), h, m, alpha));
    }
    out.push(("rpartite-12-2".into(), gen_rpartite(12, 2, 3)?, 6, 0.4));
    out.push(("rpartite-13-3".into(), gen_rpartite(13, 3, 3)?, 7, 0.5));
    out.push(("ktt-5".into(), gen_ktt(5, 3)?, 6, 0.1));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let edges: Vec<Vec<usize>> = lex_subsets(11, 3).filter(|_| rng.gen_bool(0.6)).collect();
    out.push(("random-11".into(), Hypergraph::new(3, 11, edges)?, 6, 0.3));
    Ok(out)
}

fn check_estimator(cfg: &SuiteConfig) -> Result<(bool, String)> {
    let corpus = estimator_corpus()?;
    let (graphs, trials) = match cfg.suite {
        Suite::Fast => (3, 10_000),
        Suite::Full => (corpus.len(), 100_000),
    };
    for (i, (name, h, m, alpha)) in corpus.iter().take(graphs).enumerate() {
        let exact = sample_dense_msets(h, *m, *alpha, 1, 0, SampleMode::Exhaustive)?;
        let est = sample_dense_msets(h, *m, *alpha, trials, 1000 + i as u64, SampleMode::Sampled)?;
        if !within_three_stderr(exact.fraction, est.fraction, est.stderr, trials) {
            return Ok((
                false,
                format!(
                    "{name}: exact {} vs sampled {} ± {}",
                    exact.fraction, est.fraction, est.stderr
                ),
            ));
        }
    }
    Ok((true, format!("{graphs} graphs, {trials} trials each")))
}

/// `|exact − sampled| ≤ 3·stderr`, where a zero standard error (all samples
/// agree) is replaced by the one-sample resolution `1/trials`.
pub fn within_three_stderr(exact: f64, sampled: f64, stderr: f64, trials: u64) -> bool {
    let se = if stderr > 0.0 {
        stderr
    } else {
        1.0 / trials as f64
    };
    (exact - sampled).abs() <= 3.0 * se
}

/// Every construction the suite touches, for round-trip checks.
pub fn generated_corpus() -> Result<Vec<(String, Hypergraph)>> {
    let mut out = Vec::new();
    for (k, r) in [(3, 1), (3, 2), (3, 3), (4, 2)] {
        out.push((format!("fr-{k}-{r}"), gen_fr(k, r)?));
    }
    for t in 1..=6 {
        out.push((format!("ktt-{t}"), gen_ktt(t, 3)?));
    }
    for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 3)] {
        for n in [2 * a, 12, 17] {
            out.push((
                format!("gabn-{a}-{b}-{n}"),
                gen_gabn(&GabnParams::new(a, b, n, 3)?)?,
            ));
        }
    }
    for (n, r) in [(8, 2), (6, 1), (6, 6), (13, 2), (16, 2)] {
        out.push((format!("rpartite-{n}-{r}"), gen_rpartite(n, r, 3)?));
    }
    let base = Hypergraph::new(3, 3, [[0, 1, 2]])?;
    for (i, m) in extension_family_iter(&base, 2, 1, false)?.enumerate() {
        out.push((format!("ext-triple-2-1-{i}"), m));
    }
    out.push(("empty-0".into(), Hypergraph::empty(3, 0)?));
    out.push(("complete-4-6".into(), Hypergraph::complete(4, 6)?));
    Ok(out)
}

fn check_round_trip(_: &SuiteConfig) -> Result<(bool, String)> {
    let corpus = generated_corpus()?;
    for (name, h) in &corpus {
        let text = write_khg(h);
        if &parse_khg(&text)? != h || write_khg(&parse_khg(&text)?) != text {
            return Ok((false, format!("{name} does not round-trip")));
        }
    }
    Ok((true, format!("{} graphs round-trip", corpus.len())))
}
