//! End-to-end acceptance run: eight criteria, one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use harary::connectivity::oracle::{
    brute_force_edge_connectivity, brute_force_vertex_connectivity,
};
use harary::connectivity::{edge_connectivity, vertex_connectivity};
use harary::constructions::{g_nk, join_family, k_n1_r};
use harary::enumeration::{enumerate_connected, SweepOptions};
use harary::graph::{are_isomorphic, parse_graph6};
use harary::metrics::{
    bfs_distances, harary_index, harary_index_pairwise, harary_scale, harary_scaled,
};
use harary::transforms::random::random_graph;
use harary::verify::{
    verify_connectivity_theorems, verify_cut_vertex_theorem, verify_lemma_properties,
    verify_ordering_chain, verify_second_max, VerificationReport,
};
use harary::{ExactRational, Graph};

type Outcome = Result<String, String>;

const LEMMA_SEED: u64 = 20_240_601;
const ORACLE_SEED: u64 = 7;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(report: &VerificationReport) -> Result<(), String> {
    let failed: Vec<String> = report
        .failed_claims()
        .map(|c| format!("{}: {}", c.id, c.failures.join("; ")))
        .collect();
    ensure(failed.is_empty(), || {
        format!("{} failed: {}", report.theorem, failed.join(" | "))
    })
}

fn both_routes(g: &Graph) -> Result<ExactRational, String> {
    let (a, b) = (harary_index(g), harary_index_pairwise(g));
    ensure(a == b, || format!("Harary routes disagree: {a} vs {b}"))?;
    Ok(a)
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!("{what} took {elapsed:.2?}, budget {budget:?}")
    })
}

fn closed_form_bound() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for n in 4..=12usize {
        for r in 1..=n - 2 {
            let h = both_routes(&k_n1_r(n, r).map_err(|e| e.to_string())?)?;
            let expected = ExactRational::new(((n - 1) * (n - 1) + r) as i64, 2);
            ensure(h == expected, || {
                format!("K({},{r}): {h} != {expected}", n - 1)
            })?;
            checked += 1;
        }
    }
    within(started.elapsed(), Duration::from_secs(1), "closed form")?;
    Ok(format!("{checked} (n, r) pairs equal ((n-1)^2+r)/2"))
}

fn cut_vertex_theorem(reports: &mut Vec<String>) -> Outcome {
    let mut times = Vec::new();
    for n in 5..=7 {
        let started = Instant::now();
        let report = verify_cut_vertex_theorem(n, &SweepOptions::with_workers(1))
            .map_err(|e| e.to_string())?;
        passed(&report)?;
        within(
            started.elapsed(),
            Duration::from_secs(120),
            &format!("n={n} sweep"),
        )?;
        times.push(format!("n={n} {:.2?}", started.elapsed()));
        reports.push(report.to_json());
    }
    Ok(format!(
        "unique maximizer g_nk(n,k) for every k; {}",
        times.join(", ")
    ))
}

fn connectivity_theorems() -> Outcome {
    let mut times = Vec::new();
    for n in 5..=7 {
        let started = Instant::now();
        let report =
            verify_connectivity_theorems(n, &SweepOptions::default()).map_err(|e| e.to_string())?;
        passed(&report)?;
        ensure(report.claims.len() == 2 * (n - 2), || {
            format!("n={n}: {} claims", report.claims.len())
        })?;
        within(
            started.elapsed(),
            Duration::from_secs(240),
            &format!("n={n} kappa and lambda sweeps"),
        )?;
        times.push(format!("n={n} {:.2?}", started.elapsed()));
    }
    Ok(format!(
        "unique maximizer K(n-1,r) under kappa and lambda; {}",
        times.join(", ")
    ))
}

fn second_maximum() -> Outcome {
    let n = 7;
    let report = verify_second_max(n, &SweepOptions::default()).map_err(|e| e.to_string())?;
    passed(&report)?;
    let claim = |r: usize| {
        report
            .claims
            .iter()
            .find(|c| c.id == format!("kappa={r}"))
            .ok_or_else(|| format!("no claim for kappa={r}"))
    };
    let seconds = |r: usize| -> Result<Vec<(Graph, ExactRational)>, String> {
        claim(r)?
            .witnesses
            .iter()
            .filter(|w| w.role == "second")
            .map(|w| {
                Ok((
                    parse_graph6(&w.graph6).map_err(|e| e.to_string())?,
                    w.harary.clone(),
                ))
            })
            .collect()
    };
    for r in 1..=5 {
        let expected = ExactRational::new((n * n - 2 * n + r) as i64, 2);
        let found = seconds(r)?;
        ensure(!found.is_empty(), || {
            format!("kappa={r}: no second maximizer")
        })?;
        for (g, h) in &found {
            ensure(*h == expected, || {
                format!("kappa={r}: second value {h}, expected {expected}")
            })?;
            ensure(both_routes(g)? == expected, || {
                format!("kappa={r}: witness recomputes differently")
            })?;
        }
    }
    let tie = seconds(3)?;
    let g223 = join_family(2, 2, 3).map_err(|e| e.to_string())?;
    let has_join = tie
        .iter()
        .any(|(g, _)| are_isomorphic(g, &g223).unwrap_or(false));
    ensure(has_join, || {
        "G_{2,2,3} missing from the kappa=3 second-best set".into()
    })?;
    ensure(
        tie.iter()
            .all(|(_, h)| *h == ExactRational::from_integer(19)),
        || "kappa=3 tie is not at 19".into(),
    )?;
    let k5o2 = Graph::complete(5)
        .and_then(|k| k.join(&Graph::empty(2)?))
        .and_then(|g| g.remove_edge(0, 1))
        .map_err(|e| e.to_string())?;
    let top = seconds(5)?;
    ensure(
        top.len() == 1 && are_isomorphic(&top[0].0, &k5o2).unwrap_or(false),
        || "kappa=5 second maximizer is not K5 v O2 minus an edge".into(),
    )?;
    Ok(format!(
        "n=7 second values (n^2-2n+r)/2 for r=1..5; kappa=3 tie at 19 over {} classes incl. G_{{2,2,3}}",
        tie.len()
    ))
}

fn ordering_chain() -> Outcome {
    let started = Instant::now();
    for n in 3..=12 {
        passed(&verify_ordering_chain(n).map_err(|e| e.to_string())?)?;
    }
    within(started.elapsed(), Duration::from_secs(1), "ordering chains")?;
    Ok("strict chains with K_n and P_n endpoints for n=3..12".into())
}

fn lemma_suite() -> Outcome {
    let started = Instant::now();
    let report = verify_lemma_properties(200, LEMMA_SEED).map_err(|e| e.to_string())?;
    passed(&report)?;
    let ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
    ensure(
        ids == [
            "add-edge",
            "edge-twin-rerouting",
            "two-clique-merge",
            "path-shift",
            "join-transfer",
        ],
        || format!("unexpected claims {ids:?}"),
    )?;
    within(started.elapsed(), Duration::from_secs(30), "lemma suite")?;
    Ok(format!(
        "1000 edge additions, 200 x 3 surgeries, {} join pairs, all strict",
        report.parameters["join_pairs"]
    ))
}

/// `scale · H` from queue-based BFS, independent of the bit-parallel
/// distance counts behind `harary_scaled`.
fn scaled_pairwise(g: &Graph, scale: u64) -> u64 {
    (0..g.order())
        .map(|u| {
            bfs_distances(g, u)
                .expect("vertex in range")
                .iter()
                .skip(u + 1)
                .flatten()
                .map(|&d| scale / d as u64)
                .sum::<u64>()
        })
        .sum()
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    // exhaustive connectivity agreement, and both H routes on every swept graph
    let mut exhaustive = 0u64;
    for n in 2..=7 {
        let scale = harary_scale(n);
        let mut failure = None;
        enumerate_connected(n, &SweepOptions::default(), |mask, g| {
            if failure.is_some() {
                return;
            }
            if harary_scaled(g, scale) != scaled_pairwise(g, scale) {
                failure = Some(format!(
                    "scaled H routes disagree on mask {mask:#x} (n={n})"
                ));
            }
            if n <= 6 {
                exhaustive += 1;
                if harary_index(g) != harary_index_pairwise(g) {
                    failure = Some(format!("exact H routes disagree on mask {mask:#x}"));
                }
                let kappa = (
                    vertex_connectivity(g),
                    brute_force_vertex_connectivity(g).unwrap(),
                );
                let lambda = (
                    edge_connectivity(g),
                    brute_force_edge_connectivity(g).unwrap(),
                );
                if kappa.0 != kappa.1 || lambda.0 != lambda.1 {
                    failure = Some(format!(
                        "mask {mask:#x} (n={n}): kappa {kappa:?}, lambda {lambda:?}"
                    ));
                }
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(f) = failure {
            return Err(f);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    for i in 0..10_000 {
        let g = random_graph(&mut rng, 2, 9);
        let kappa = (
            vertex_connectivity(&g),
            brute_force_vertex_connectivity(&g).map_err(|e| e.to_string())?,
        );
        let lambda = (
            edge_connectivity(&g),
            brute_force_edge_connectivity(&g).map_err(|e| e.to_string())?,
        );
        ensure(kappa.0 == kappa.1 && lambda.0 == lambda.1, || {
            format!("random graph {i}: kappa {kappa:?}, lambda {lambda:?}")
        })?;
        both_routes(&g)?;
    }

    // constructed families of criteria 1 and 5 and the join pairs of 6;
    // sweep certificates and lemma instances are rechecked inside the verifiers
    let mut families = 0;
    for n in 3..=12usize {
        for k in 0..=n - 2 {
            both_routes(&g_nk(n, k).map_err(|e| e.to_string())?)?;
            families += 1;
        }
        for r in 1..n.saturating_sub(1) {
            both_routes(&k_n1_r(n, r).map_err(|e| e.to_string())?)?;
            families += 1;
        }
    }
    for n3 in 1..=8 {
        for n2 in 1..=6 {
            for n1 in n2..=10 {
                if n1 + n2 + n3 <= 12 {
                    both_routes(&join_family(n1, n2, n3).map_err(|e| e.to_string())?)?;
                    families += 1;
                }
            }
        }
    }
    within(started.elapsed(), Duration::from_secs(120), "oracle checks")?;
    Ok(format!(
        "{exhaustive} connected graphs n<=6 and 10000 random graphs n<=9 agree; H routes agree on all sweeps n<=7 and {families} family graphs"
    ))
}

fn determinism(single: &[String]) -> Outcome {
    for (i, n) in (5..=7).enumerate() {
        let four = verify_cut_vertex_theorem(n, &SweepOptions::with_workers(4))
            .map_err(|e| e.to_string())?
            .to_json();
        ensure(single.get(i) == Some(&four), || {
            format!("n={n}: reports differ between 1 and 4 workers")
        })?;
    }
    Ok("cut-vertex reports for n=5..7 byte-identical with 1 and 4 workers".into())
}

fn main() {
    let mut single_worker = Vec::new();
    let run = |id: usize, name: &str, f: &mut dyn FnMut() -> Outcome| -> bool {
        let started = Instant::now();
        let outcome = f();
        let elapsed = started.elapsed();
        match &outcome {
            Ok(detail) => println!("criterion {id} PASS [{elapsed:.2?}] {name}: {detail}"),
            Err(why) => println!("criterion {id} FAIL [{elapsed:.2?}] {name}: {why}"),
        }
        outcome.is_ok()
    };
    let results = [
        run(1, "closed-form connectivity bound", &mut closed_form_bound),
        run(2, "cut-vertex maximizers by sweep", &mut || {
            cut_vertex_theorem(&mut single_worker)
        }),
        run(
            3,
            "connectivity maximizers by sweep",
            &mut connectivity_theorems,
        ),
        run(4, "second maximum for n=7", &mut second_maximum),
        run(5, "cut-vertex ordering chain", &mut ordering_chain),
        run(6, "surgery property suite", &mut lemma_suite),
        run(7, "oracle equivalence", &mut oracle_equivalence),
    ];
    let determinism_ok = run(8, "worker-count determinism", &mut || {
        determinism(&single_worker)
    });
    let failures = results
        .iter()
        .chain([&determinism_ok])
        .filter(|ok| !**ok)
        .count();
    println!("acceptance: {} of 8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
