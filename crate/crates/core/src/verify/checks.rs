//! Exhaustive and randomized sweeps over the theorems' instance spaces.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::enumerate::{for_each_complex_sharded, graph_from_bits, labeled_graph_count, vertex_pairs};
use super::report::{InstanceSpace, RunConfig, VerificationReport};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hull::{check_certificate, HullCertificate, HullInstance, Violation, MAX_ENTRY};
use crate::operators::{
    balance_multipartite, cone_over_link, complex_shift, symmetrize_to_multipartite, zykov_clique_delta,
    zykov_shift,
};
use crate::turan::turan_clique_vector;
use crate::vector::IntVector;

/// Knobs shared by every sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
    /// Unlocks the larger instance spaces.
    pub long_run: bool,
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            workers: 0,
            long_run: false,
            seed: 0x5eed,
        }
    }
}

impl SweepOptions {
    fn config(&self, samples: Option<u64>) -> RunConfig {
        RunConfig {
            seed: self.seed,
            long_run: self.long_run,
            workers: self.workers,
            samples,
        }
    }
}

/// Splits `0..pieces` across a pool of `workers` threads and merges the partial
/// reports. The merge is order independent, so the result is deterministic.
fn run_pieces(
    workers: usize,
    pieces: u64,
    header: &VerificationReport,
    work: impl Fn(u64, &mut VerificationReport) -> Result<()> + Sync,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let merged = pool.install(|| {
        (0..pieces)
            .into_par_iter()
            .map(|piece| {
                let mut part = header.blank();
                work(piece, &mut part)?;
                Ok(part)
            })
            .try_reduce(|| header.blank(), |a, b| Ok(a.merge(b)))
    })?;
    let mut report = merged;
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

fn check_graph_params(n: usize, r: usize, opts: &SweepOptions) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    labeled_graph_count(n)?;
    if n == super::enumerate::MAX_GRAPH_ORDER && !opts.long_run {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap: n - 1,
            hint: " without --long-run",
        });
    }
    Ok(())
}

/// Runs `visit` on every labeled graph on `{1..n}`, split into pieces by the
/// high bits of the graph index.
fn graph_sweep(
    n: usize,
    opts: &SweepOptions,
    header: &VerificationReport,
    visit: impl Fn(&Graph, &mut VerificationReport) + Sync,
) -> Result<VerificationReport> {
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    let piece_bits = pairs.len().min(8);
    let per_piece = total >> piece_bits;
    run_pieces(opts.workers, 1 << piece_bits, header, |piece, part| {
        for bits in piece * per_piece..(piece + 1) * per_piece {
            visit(&graph_from_bits(n, &pairs, bits), part);
        }
        Ok(())
    })
}

fn edges_json(g: &Graph) -> serde_json::Value {
    json!(g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>())
}

/// Ratio chain for graphs with clique number at most `r`: for `2 <= k <= r`
/// with `t_k(n, r) > 0`, `c_k t_{k-1} <= c_{k-1} t_k`, and `c_2 <= t_2`.
pub fn check_theorem_3_1(n: usize, r: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    check_graph_params(n, r, opts)?;
    let t = turan_clique_vector(n, r)?;
    let header = VerificationReport::new(
        "thm31",
        InstanceSpace {
            n,
            r: Some(r),
            k: None,
            mode: "exhaustive labeled graphs".into(),
        },
        opts.config(None),
    );
    graph_sweep(n, opts, &header, |g, report| {
        if g.clique_number() > r {
            report.skipped += 1;
            return;
        }
        report.instances_checked += 1;
        let c = g.clique_vector();
        for k in 2..=r.min(n) {
            let lhs = c.get(k) as u128 * t.get(k - 1) as u128;
            let rhs = c.get(k - 1) as u128 * t.get(k) as u128;
            report.require(lhs <= rhs, || {
                json!({"edges": edges_json(g), "k": k, "c": c, "t": t}).to_string()
            });
        }
        report.require(c.get(2) <= t.get(2), || {
            json!({"edges": edges_json(g), "k": 2, "c": c, "t": t, "bound": "c_2 <= t_2"}).to_string()
        });
    })
}

/// Clique counts of graphs with clique number at most `r` are dominated by
/// those of `T(n, r)`, and the maximum over the class equals the Turán count.
pub fn check_zykov(n: usize, r: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    check_graph_params(n, r, opts)?;
    let t = turan_clique_vector(n, r)?;
    let header = VerificationReport::new(
        "zykov",
        InstanceSpace {
            n,
            r: Some(r),
            k: None,
            mode: "exhaustive labeled graphs".into(),
        },
        opts.config(None),
    );
    let mut report = graph_sweep(n, opts, &header, |g, report| {
        if g.clique_number() > r {
            report.skipped += 1;
            return;
        }
        report.instances_checked += 1;
        let c = g.clique_vector();
        report.observe_maxima(c.entries());
        report.require(c.dominated_by(&t), || {
            json!({"edges": edges_json(g), "c": c, "t": t}).to_string()
        });
    })?;
    let maxima = report.maxima.clone().unwrap_or_default();
    report.require(maxima.as_slice() == t.entries(), || {
        json!({"attainment": "max c_k differs from t_k", "max": maxima, "t": t}).to_string()
    });
    Ok(report)
}

/// `c_k(G_{u->v}) = c_k(G) - c_{k-1}(G[N(u)]) + c_{k-1}(G[N(v)])` for every
/// labeled graph, every ordered non-adjacent pair and every `1 <= k <= n`.
pub fn check_zykov_shift_identity(n: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    check_graph_params(n, 1, opts)?;
    let header = VerificationReport::new(
        "zykov-shift",
        InstanceSpace {
            n,
            r: None,
            k: None,
            mode: "exhaustive labeled graphs x non-adjacent pairs".into(),
        },
        opts.config(None),
    );
    graph_sweep(n, opts, &header, |g, report| {
        let omega = g.clique_number();
        for u in 1..=n {
            for v in 1..=n {
                if u == v || g.has_edge(u, v) {
                    continue;
                }
                report.instances_checked += 1;
                for k in 1..=n {
                    let d = zykov_clique_delta(g, u, v, k).expect("valid shift pair");
                    report.require(d.holds(), || {
                        json!({"edges": edges_json(g), "u": u, "v": v, "k": k,
                               "shifted": d.shifted.to_string(), "predicted": d.predicted.to_string()})
                        .to_string()
                    });
                }
                let shifted = zykov_shift(g, u, v).expect("valid shift pair");
                report.require(shifted.clique_number() <= omega, || {
                    json!({"edges": edges_json(g), "u": u, "v": v, "clique_number_increased": true}).to_string()
                });
            }
        }
    })
}

/// Symmetrization reaches a complete multipartite graph within `n` rounds and
/// `n - 1` shifts without raising the clique number at any step, and balancing
/// it yields the Turán clique vector for its number of parts.
pub fn check_symmetrization(n: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    check_graph_params(n, 1, opts)?;
    let header = VerificationReport::new(
        "symmetrize",
        InstanceSpace {
            n,
            r: None,
            k: None,
            mode: "exhaustive labeled graphs".into(),
        },
        opts.config(None),
    );
    graph_sweep(n, opts, &header, |g, report| {
        report.instances_checked += 1;
        let fail = |what: &str| json!({"edges": edges_json(g), "problem": what}).to_string();
        let sym = symmetrize_to_multipartite(g);
        report.require(sym.rounds <= n, || fail("round bound exceeded"));
        report.require(sym.trace.len() < n.max(1), || fail("shift bound exceeded"));
        let omega = g.clique_number();
        let mut replay = g.clone();
        let mut monotone = true;
        let mut last = omega;
        for step in &sym.trace {
            replay = zykov_shift(&replay, step.u, step.v).expect("traced shifts are valid");
            let w = replay.clique_number();
            monotone &= w <= last;
            last = w;
        }
        report.require(monotone, || fail("clique number increased along the trace"));
        report.require(replay == sym.graph, || fail("trace replay differs from output"));
        let Some(parts) = sym.graph.multipartite_parts() else {
            report.fail(fail("output not complete multipartite"));
            return;
        };
        report.require(sym.graph.clique_number() <= omega, || fail("clique number increased"));
        let balanced = match balance_multipartite(&sym.graph) {
            Ok(b) => b,
            Err(e) => {
                report.fail(fail(&format!("balance failed: {e}")));
                return;
            }
        };
        let sizes: Vec<usize> = balanced
            .multipartite_parts()
            .map(|p| p.iter().map(|f| f.len()).collect())
            .unwrap_or_default();
        let spread = sizes.iter().max().unwrap_or(&0) - sizes.iter().min().unwrap_or(&0);
        report.require(sizes.len() == parts.len() && spread <= 1, || fail("balanced parts uneven"));
        let expected = turan_clique_vector(n, parts.len().max(1)).expect("small n");
        report.require(balanced.clique_vector() == expected, || fail("balanced clique vector is not Turán"));
        report.bump(&format!("parts={}", parts.len()), 1);
    })
}

fn complex_json(c: &SimplicialComplex) -> serde_json::Value {
    json!({"n": c.ground_size(), "facets": c.facets().iter().map(|f| f.to_vec()).collect::<Vec<_>>()})
}

/// Visits every complex on `{1..n}` in pieces.
fn complex_sweep(
    n: usize,
    long_run: bool,
    workers: usize,
    header: &VerificationReport,
    visit: impl Fn(&SimplicialComplex, &mut VerificationReport) + Sync,
) -> Result<VerificationReport> {
    // validate before spawning workers
    for_each_complex_sharded(n, long_run, 0, 1, |_, _| {}).map(|_| ())?;
    let pieces = if n >= 5 { 64 } else { 1 };
    run_pieces(workers, pieces, header, |piece, part| {
        for_each_complex_sharded(n, long_run, piece, pieces, |_, c| visit(&c, part)).map(|_| ())
    })
}

/// Shift identity `f_j(out) = f_j(in) - f_{j-1}(link u) + f_{j-1}(link t)` and
/// color preservation for every complex and valid pair, plus the cone
/// decomposition `f_j(Lambda) = m f_{j-1}(L) + f_j(D)` for every target.
pub fn check_complex_shift_identity(n: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    let header = VerificationReport::new(
        "complex-shift",
        InstanceSpace {
            n,
            r: None,
            k: None,
            mode: "exhaustive complexes x non-adjacent pairs".into(),
        },
        opts.config(None),
    );
    complex_sweep(n, opts.long_run, opts.workers, &header, |delta, report| {
        let verts: Vec<usize> = delta.vertex_set().vertices().collect();
        let f = delta.face_vector();
        let graph = delta.underlying_graph();
        let chromatic = (0..=n).find(|&r| graph.is_r_colorable(r)).unwrap_or(n);
        let fail = |what: String| json!({"complex": complex_json(delta), "problem": what}).to_string();
        for &t in &verts {
            for &u in &verts {
                if u == t || graph.has_edge(u, t) {
                    continue;
                }
                report.instances_checked += 1;
                let out = complex_shift(delta, u, t).expect("valid pair");
                let (lu, lt) = (delta.link(u).unwrap(), delta.link(t).unwrap());
                let g = out.face_vector();
                for j in 1..=n {
                    let predicted = f.get(j) as i128 - lu.face_count(j - 1) as i128 + lt.face_count(j - 1) as i128;
                    report.require(g.get(j) as i128 == predicted, || fail(format!("identity fails for {u}->{t} at j={j}")));
                }
                report.require(out.is_downward_closed(), || fail(format!("{u}->{t} not closed")));
                report.require(out.underlying_graph().is_r_colorable(chromatic.max(1)), || {
                    fail(format!("{u}->{t} lost {chromatic}-colorability"))
                });
            }
            report.bump("cone_decompositions", 1);
            let cone = cone_over_link(delta, t).expect("t is a vertex");
            for j in 1..=n {
                report.require(cone.shifted.face_count(j) == cone.predicted_face_count(j), || {
                    fail(format!("cone decomposition fails at target {t}, j={j}"))
                });
            }
            report.require(cone.shifted.underlying_graph().is_r_colorable(chromatic.max(1)), || {
                fail(format!("cone at {t} lost {chromatic}-colorability"))
            });
        }
    })
}

fn record_certificate(
    report: &mut VerificationReport,
    f: &IntVector,
    g: &IntVector,
    cert: &HullCertificate,
    oracle: &str,
) {
    report.bump("certificates", 1);
    if let Err(why) = check_certificate(f, g, cert) {
        report.bump("unsound_certificates", 1);
        report.fail(json!({"f": f, "g": g, "oracle": oracle, "unsound_certificate": why}).to_string());
    }
}

/// Face vectors of `r`-colorable complexes on `{1..n}` lie in the hull of the
/// truncations of `t(n, r)` (both deciders agree, certificates checked, ratio
/// inequalities checked directly), and every truncation is realized by a
/// skeleton of the clique complex of `T(n, r)`.
pub fn check_theorem_1_1(n: usize, r: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let g = turan_clique_vector(n, r)?;
    let hull = HullInstance::new(g.clone())?;
    let header = VerificationReport::new(
        "thm11",
        InstanceSpace {
            n,
            r: Some(r),
            k: None,
            mode: "exhaustive complexes".into(),
        },
        opts.config(None),
    );
    let mut report = complex_sweep(n, opts.long_run, opts.workers, &header, |delta, report| {
        if !delta.underlying_graph().is_r_colorable(r) {
            report.skipped += 1;
            return;
        }
        report.instances_checked += 1;
        let f = delta.face_vector();
        if f.get(1) < n as u64 {
            report.bump("absent_vertices", 1);
        }
        let fail = |what: &str| json!({"complex": complex_json(delta), "f": f, "g": g, "problem": what}).to_string();
        let by_ineq = hull.by_inequalities(&f).expect("dimensions match");
        let by_coef = hull.by_coefficients(&f).expect("dimensions match");
        report.require(by_ineq.is_inside() == by_coef.is_inside(), || fail("deciders disagree"));
        report.require(by_ineq.is_inside(), || fail("outside by inequalities"));
        report.require(by_coef.is_inside(), || fail("outside by coefficients"));
        record_certificate(report, &f, &g, &by_ineq, "inequalities");
        record_certificate(report, &f, &g, &by_coef, "coefficients");
        report.require(f.get(1) <= g.get(1), || fail("f_1 > t_1"));
        for k in 2..=n {
            let lhs = f.get(k) as u128 * g.get(k - 1) as u128;
            let rhs = f.get(k - 1) as u128 * g.get(k) as u128;
            report.require(lhs <= rhs, || fail(&format!("ratio inequality fails at k={k}")));
        }
    })?;

    let turan_complex = SimplicialComplex::clique_complex(&crate::turan::turan_graph(n, r)?);
    for k in 1..=n {
        report.bump("truncations", 1);
        let skeleton = turan_complex.skeleton(k);
        let gk = g.truncation(k)?;
        let fail = |what: &str| json!({"n": n, "r": r, "k": k, "problem": what}).to_string();
        report.require(skeleton.face_vector() == gk, || fail("skeleton face vector differs from truncation"));
        report.require(skeleton.underlying_graph().is_r_colorable(r), || fail("skeleton not r-colorable"));
        for (oracle, cert) in [("inequalities", hull.by_inequalities(&gk)?), ("coefficients", hull.by_coefficients(&gk)?)] {
            report.require(cert.is_inside(), || fail("truncation outside"));
            record_certificate(&mut report, &gk, &g, &cert, oracle);
        }
    }
    Ok(report)
}

/// What happened on one instance of the cone-and-join step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainOutcome {
    /// All checked inequalities and identities hold.
    Holds {
        /// `f_k(Lambda)` and `f_{k-1}(Lambda)` agree with the counts obtained
        /// by replacing the induced subcomplex with the link.
        link_equals_induced: bool,
    },
    /// The constructed comparison graph does not dominate the link's ratios.
    HypothesisUnmet,
    Fails(String),
}

/// Runs the cone-and-join step on one `r`-colorable complex `delta` with cone
/// point `target`:
///
/// 1. shift every non-neighbor of `target` onto it, giving `Lambda`, link `L`,
///    induced subcomplex `D` and multiplicity `m`;
/// 2. build `H` by symmetrizing and balancing the underlying graph of `L`, and
///    require `f_t(L) c_{t-1}(H) <= f_{t-1}(L) c_t(H)` for `1 <= t <= k` and
///    `omega(H) <= r - 1`;
/// 3. join `H` with `m` independent vertices to get `G`, and check
///    `c_{k-1}(G) (m f_{k-1}(L) + f_k(L)) <= c_k(G) (m f_{k-2}(L) + f_{k-1}(L))`
///    together with the identities and Turán ratio bounds around it.
pub fn section5_instance(delta: &SimplicialComplex, r: usize, k: usize, target: usize) -> Result<ChainOutcome> {
    if r < 2 || k < 2 {
        return Err(Error::InvalidParameter("the chain needs r >= 2 and k >= 2".into()));
    }
    let n = delta.ground_size();
    if !delta.underlying_graph().is_r_colorable(r) {
        return Err(Error::InvalidParameter(format!("complex is not {r}-colorable")));
    }
    let cone = cone_over_link(delta, target)?;
    let m = cone.multiplicity as u128;
    let lambda = &cone.shifted;
    let link = &cone.link;
    let fl = |j: usize| link.face_count(j) as u128;
    let fail = |what: String| Ok(ChainOutcome::Fails(what));

    for j in 1..=n {
        if lambda.face_count(j) != cone.predicted_face_count(j) {
            return fail(format!("cone decomposition fails at j={j}"));
        }
    }
    if !lambda.underlying_graph().is_r_colorable(r) {
        return fail("shifted complex lost r-colorability".into());
    }

    let (link_graph, _) = link.underlying_graph().induced_subgraph(link.vertex_set());
    let sym = symmetrize_to_multipartite(&link_graph);
    let h = balance_multipartite(&sym.graph)?;
    let ch = h.clique_vector();
    let c_h = |j: usize| ch.get_or_unit(j) as u128;
    if h.clique_number() > r - 1 {
        return Ok(ChainOutcome::HypothesisUnmet);
    }
    for t in 1..=k {
        if fl(t) * c_h(t - 1) > fl(t - 1) * c_h(t) {
            return Ok(ChainOutcome::HypothesisUnmet);
        }
    }

    let joined = h.join_with_independent_set(cone.multiplicity)?;
    let cg = joined.clique_vector();
    let c_g = |j: usize| cg.get_or_unit(j) as u128;
    for t in 1..=joined.order() {
        if c_g(t) != m * c_h(t - 1) + c_h(t) {
            return fail(format!("join identity fails at t={t}"));
        }
    }
    if joined.clique_number() > r {
        return fail("joined graph has clique number above r".into());
    }

    let lhs = c_g(k - 1) * (m * fl(k - 1) + fl(k));
    let rhs = c_g(k) * (m * fl(k - 2) + fl(k - 1));
    if lhs > rhs {
        return fail(format!("displayed inequality fails: {lhs} > {rhs}"));
    }

    let t = turan_clique_vector(n, r)?;
    let tu = |j: usize| t.get_or_unit(j) as u128;
    if k <= n && c_g(k) * tu(k - 1) > c_g(k - 1) * tu(k) {
        return fail("joined graph beats the Turán ratio".into());
    }
    let f_lambda = |j: usize| lambda.face_count(j) as u128;
    let f_delta = |j: usize| delta.face_count(j) as u128;
    if f_lambda(k) * tu(k - 1) > f_lambda(k - 1) * tu(k) || f_delta(k) * tu(k - 1) > f_delta(k - 1) * tu(k) {
        return fail("face ratio beats the Turán ratio".into());
    }

    let induced = &cone.induced;
    let link_equals_induced = (k - 1..=k).all(|j| induced.face_count(j) == link.face_count(j));
    if link_equals_induced && c_g(k - 1) * f_lambda(k) > c_g(k) * f_lambda(k - 1) {
        return fail("inequality fails on the shifted complex although D_j = L_j".into());
    }
    Ok(ChainOutcome::Holds { link_equals_induced })
}

/// A random `r`-colorable complex on `{1..n}` containing every vertex: labels
/// get random colors and facets pick at most one vertex per color.
pub fn random_colorable_complex(n: usize, r: usize, rng: &mut impl Rng) -> Result<SimplicialComplex> {
    let colors: Vec<usize> = (0..n).map(|_| rng.random_range(0..r)).collect();
    let mut facets: Vec<Face> = (1..=n).map(Face::singleton).collect();
    let extra = rng.random_range(0..=2 * n);
    for _ in 0..extra {
        let mut facet = Face::EMPTY;
        for color in 0..r {
            let class: Vec<usize> = (1..=n).filter(|&v| colors[v - 1] == color).collect();
            if !class.is_empty() && rng.random_bool(0.6) {
                facet = facet.with(class[rng.random_range(0..class.len())]);
            }
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(n, &facets)
}

/// [`section5_instance`] on `samples` random `r`-colorable complexes with cone
/// point 1. Instances whose comparison graph misses the hypothesis are counted
/// as skipped, not failed.
pub fn check_section5_chain(samples: u64, n: usize, r: usize, k: usize, opts: &SweepOptions) -> Result<VerificationReport> {
    if n == 0 || n > 24 {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap: 24,
            hint: " for randomized complexes",
        });
    }
    if r < 2 || k < 2 {
        return Err(Error::InvalidParameter("the chain needs r >= 2 and k >= 2".into()));
    }
    let header = VerificationReport::new(
        "section5",
        InstanceSpace {
            n,
            r: Some(r),
            k: Some(k),
            mode: "random colorable complexes".into(),
        },
        opts.config(Some(samples)),
    );
    let pieces = samples.clamp(1, 64);
    let seed = opts.seed;
    run_pieces(opts.workers, pieces, &header, |piece, report| {
        // each piece draws from its own stream so results do not depend on scheduling
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(piece);
        let count = samples / pieces + u64::from(piece < samples % pieces);
        for _ in 0..count {
            let delta = random_colorable_complex(n, r, &mut rng)?;
            match section5_instance(&delta, r, k, 1)? {
                ChainOutcome::Holds { link_equals_induced } => {
                    report.instances_checked += 1;
                    if link_equals_induced {
                        report.bump("link_equals_induced", 1);
                    }
                }
                ChainOutcome::HypothesisUnmet => {
                    report.skipped += 1;
                    report.bump("hypothesis_unmet", 1);
                }
                ChainOutcome::Fails(why) => {
                    report.instances_checked += 1;
                    report.fail(json!({"complex": complex_json(&delta), "problem": why}).to_string());
                }
            }
        }
        Ok(())
    })
}

fn compare_deciders(report: &mut VerificationReport, hull: &std::result::Result<HullInstance, Error>, f: &IntVector, g: &IntVector) {
    report.instances_checked += 1;
    let (a, b) = match hull {
        Ok(h) => (h.by_inequalities(f), h.by_coefficients(f)),
        Err(e) => (Err(e.clone()), Err(e.clone())),
    };
    match (&a, &b) {
        (Ok(x), Ok(y)) => {
            report.require(x.is_inside() == y.is_inside(), || {
                json!({"f": f, "g": g, "inequalities": x, "coefficients": y}).to_string()
            });
            report.bump(if x.is_inside() { "inside" } else { "outside" }, 1);
            record_certificate(report, f, g, x, "inequalities");
            record_certificate(report, f, g, y, "coefficients");
            if let HullCertificate::Outside { violation: Violation::Support { .. } } = x {
                report.bump("support_violations", 1);
            }
        }
        (Err(x), Err(y)) => {
            report.require(x == y, || json!({"f": f, "g": g, "errors": [x.to_string(), y.to_string()]}).to_string());
            report.bump("malformed", 1);
        }
        _ => report.fail(json!({"f": f, "g": g, "problem": "one decider errored"}).to_string()),
    }
}

/// Both hull deciders agree on every pair `(f, g)` of vectors of length
/// `1..=max_dim` with entries in `0..=max_entry`, and every certificate they
/// produce checks out. Generators with internal zeros must be rejected by both.
pub fn check_hull_oracles_exhaustive(max_dim: usize, max_entry: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    if max_dim == 0 || max_dim > 8 {
        return Err(Error::InvalidParameter(format!("dimension cap {max_dim} outside 1..=8")));
    }
    let base = max_entry + 1;
    let header = VerificationReport::new(
        "hull-oracles",
        InstanceSpace {
            n: max_dim,
            r: None,
            k: None,
            mode: format!("exhaustive with entries <= {max_entry}"),
        },
        opts.config(None),
    );
    let decode = |mut code: u64, d: usize| -> IntVector {
        let mut v = vec![0u64; d];
        for x in v.iter_mut() {
            *x = code % base;
            code /= base;
        }
        IntVector::new(v)
    };
    let mut total = header.blank();
    for d in 1..=max_dim {
        let count = base
            .checked_pow(d as u32)
            .ok_or(Error::Overflow("hull sweep size"))?;
        let part = run_pieces(opts.workers, count, &header, |gi, report| {
            let g = decode(gi, d);
            let hull = HullInstance::new(g.clone());
            for fi in 0..count {
                compare_deciders(report, &hull, &decode(fi, d), &g);
            }
            Ok(())
        })?;
        total = total.merge(part);
    }
    Ok(total)
}

/// Randomized agreement check on large entries (`<= max_entry`), mixing
/// uniform points with points built near the hull boundary.
pub fn check_hull_oracles_random(samples: u64, max_entry: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    if max_entry == 0 || max_entry > MAX_ENTRY {
        return Err(Error::InvalidParameter(format!("entry cap {max_entry}")));
    }
    let header = VerificationReport::new(
        "hull-oracles-random",
        InstanceSpace {
            n: 6,
            r: None,
            k: None,
            mode: format!("random with entries <= {max_entry}"),
        },
        opts.config(Some(samples)),
    );
    let pieces = samples.clamp(1, 64);
    let seed = opts.seed;
    run_pieces(opts.workers, pieces, &header, |piece, report| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(piece);
        let count = samples / pieces + u64::from(piece < samples % pieces);
        for _ in 0..count {
            let d = rng.random_range(1..=6);
            let support = rng.random_range(0..=d);
            let g: Vec<u64> = (0..d)
                .map(|i| if i < support { rng.random_range(1..=max_entry) } else { 0 })
                .collect();
            let f: Vec<u64> = match rng.random_range(0..4) {
                0 => (0..d).map(|_| rng.random_range(0..=max_entry)).collect(),
                1 => {
                    // nonincreasing ratios f_i / g_i, floored: on or near the boundary
                    let mut s = rng.random_range(0.0..=1.0f64);
                    g.iter()
                        .map(|&gi| {
                            s *= rng.random_range(0.9..=1.02f64);
                            ((gi as f64) * s.min(1.0)).floor() as u64
                        })
                        .collect()
                }
                2 => {
                    let k = rng.random_range(1..=d);
                    g.iter().enumerate().map(|(i, &x)| if i < k { x } else { 0 }).collect()
                }
                _ => {
                    let mut f = g.clone();
                    let i = rng.random_range(0..d);
                    f[i] = f[i].saturating_add(rng.random_range(0..=2)).saturating_sub(1).min(max_entry);
                    f
                }
            };
            let g = IntVector::new(g);
            compare_deciders(report, &HullInstance::new(g.clone()), &IntVector::new(f), &g);
        }
        Ok(())
    })
}
