//! Acceptance suite: one PASS/FAIL line per criterion, each with a time limit.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use linklab::cli::{lemma32_report, parse_pairs, run};
use linklab::complex::{has_k6_minor, k6, Graph, Triangle};
use linklab::geometry::{Point, Point3};
use linklab::invariants::{
    big_lambda, derive_seed, fuzz_invariance, lambda, moment_curve_k6, random_apex_offset, random_generic_k6, sigma6,
    verify_embedding3, LinkReport,
};
use linklab::linking::{lk3, lk3_projection_oracle, lk4, lk4_chain_oracle};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn dual_pair_enumeration() -> Outcome {
    let mut out = Vec::new();
    let code = run(["linklab", "pairs"], &mut &b""[..], &mut out, &mut Vec::new());
    ensure!(code == 0, "exit status {code}");
    let pairs = parse_pairs(&out).map_err(|e| e.to_string())?;
    let covered: BTreeSet<Triangle> = pairs.iter().flat_map(|p| [p.t, p.t_bar]).collect();
    ensure!(pairs.len() == 10, "{} pairs", pairs.len());
    ensure!(covered == Triangle::all().into_iter().collect(), "pairs cover {} triangles", covered.len());
    Ok("10 pairs, 20 triangles".into())
}

fn conway_gordon() -> Outcome {
    let r = lambda(&moment_curve_k6(), 0).map_err(|e| e.to_string())?;
    ensure!(r.value == Some(1), "moment curve lambda {:?}", r.value);
    for seed in 0..200 {
        let e = random_generic_k6(seed, 100).map_err(|e| e.to_string())?;
        let r = lambda(&e, seed).map_err(|e| e.to_string())?;
        ensure!(r.value == Some(1), "seed {seed}: lambda {:?}", r.value);
    }
    Ok("lambda = 1 on moment curve and 200 random embeddings".into())
}

fn omega_abs(r: &LinkReport) -> Vec<i64> {
    r.pairs.iter().map(|p| p.omega.unwrap().abs()).collect()
}

fn sigma6_nontrivial() -> Outcome {
    let s = sigma6(&moment_curve_k6(), &Point3::origin(), &Point3::origin()).map_err(|e| e.to_string())?;
    let r4 = big_lambda(&s, 0).map_err(|e| e.to_string())?;
    let r3 = lambda(&moment_curve_k6(), 0).map_err(|e| e.to_string())?;
    ensure!(r4.value == Some(1), "Lambda {:?}", r4.value);
    for (p4, w) in r4.pairs.iter().zip(omega_abs(&r3)) {
        let (a, b) = (p4.omega_t_s_bar.unwrap().abs(), p4.omega_t_bar_s.unwrap().abs());
        ensure!(a == w && b == w, "pair {:?}: {a}, {b} vs {w}", p4.pair);
    }
    Ok("Lambda = 1; |w(T,S(Tbar))| = |w(Tbar,S(T))| = |w3| on all 10 pairs".into())
}

fn fuzz_trials() -> Outcome {
    let s = fuzz_invariance(100, 2024, Some(8)).map_err(|e| e.to_string())?;
    ensure!(
        s.ok && s.big_lambda_ones == 100 && s.lambda_ones == 100 && s.parity_anomalies == 0,
        "lambda ones {}, Lambda ones {}, anomalies {}, errors {}",
        s.lambda_ones,
        s.big_lambda_ones,
        s.parity_anomalies,
        s.errors
    );
    ensure!(s.pair_agreement_failures == 0, "{} trials with per-pair disagreement", s.pair_agreement_failures);
    Ok(format!("100/100 Lambda = 1, 0 anomalies, {} retries", s.retries))
}

fn disjoint_cycles() -> Outcome {
    let r = lemma32_report().map_err(|e| e.to_string())?;
    ensure!(r.nonzero_two_cycles == 1023, "{} nonzero 2-cycles", r.nonzero_two_cycles);
    ensure!(r.pairs.len() == 20 && r.matches_dual_suspensions, "{} pairs", r.pairs.len());
    Ok(format!(
        "{} 1-cycles, {} surfaces (genera {:?}), 20 pairs = (T, S(Tbar))",
        r.one_cycles, r.surface_two_cycles, r.surface_genera
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut linked = 0;
    for i in 0..100 {
        let (a, b) = random_polygon_pair(&mut rng);
        let v = lk3(&a, &b, i).map_err(|e| e.to_string())?.value;
        let o = lk3_projection_oracle(&a, &b).map_err(|e| e.to_string())?;
        ensure!(v == o, "pair {i}: lk3 {v}, projection {o}");
        linked += (v != 0) as u32;
    }
    let mut compared = 0;
    for seed in 0..10 {
        let base = random_generic_k6(1000 + seed, 100).map_err(|e| e.to_string())?;
        let (a, b) = (random_apex_offset(&mut rng), random_apex_offset(&mut rng));
        let s = sigma6(&base, &a, &b).map_err(|e| e.to_string())?;
        for p in linklab::complex::dual_pairs() {
            for (t, u) in [(p.t, p.t_bar), (p.t_bar, p.t)] {
                let c1 = s.one_cycle(t).map_err(|e| e.to_string())?;
                let c2 = s.two_cycle(u).map_err(|e| e.to_string())?;
                let v = lk4(&c1, &c2, seed).map_err(|e| e.to_string())?.value;
                let o = lk4_chain_oracle(&c1, &c2).map_err(|e| e.to_string())?;
                ensure!(v == o, "base {seed}, {t:?} vs S({u:?}): lk4 {v}, chain {o}");
                compared += 1;
            }
        }
    }
    Ok(format!("100 lk3 pairs ({linked} linked), {compared} lk4 links"))
}

fn property_suite() -> Outcome {
    const N: usize = 50;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..N {
        let (a, b) = random_polygon_pair(&mut rng);
        let v = lk3(&a, &b, 0).map_err(|e| e.to_string())?.value;
        for s in 1..10 {
            ensure!(lk3(&a, &b, s).unwrap().value == v, "lk3 instance {i}: apex {s} differs");
        }
        ensure!(lk3(&a.reversed(), &b, 0).unwrap().value == -v, "lk3 instance {i}: reversal");
        ensure!(lk3(&a.reversed(), &b.reversed(), 0).unwrap().value == v, "lk3 instance {i}: double reversal");
        let k = rng.gen_range(0..b.points().len());
        let b2 = b.with_inserted(k, point_on_segment(&mut rng, &b, k)).unwrap();
        ensure!(lk3(&a, &b2, 0).unwrap().value == v, "lk3 instance {i}: subdivision");
        let (m, sign) = random_matrix::<3, _>(&mut rng);
        let t = random_point::<3, _>(&mut rng, 30).0;
        ensure!(
            lk3(&a.mapped(&m, &t), &b.mapped(&m, &t), 0).unwrap().value == sign as i64 * v,
            "lk3 instance {i}: affine map with det sign {sign}"
        );

        let (c1, c2) = random_sphere_link(&mut rng);
        let w = lk4(&c1, &c2, 0).map_err(|e| e.to_string())?.value;
        for s in 1..10 {
            ensure!(lk4(&c1, &c2, s).unwrap().value == w, "lk4 instance {i}: apex {s} differs");
        }
        ensure!(lk4(&c1, &c2.reversed(), 0).unwrap().value == -w, "lk4 instance {i}: reversal");
        ensure!(lk4(&c1.reversed(), &c2.reversed(), 0).unwrap().value == w, "lk4 instance {i}: double reversal");
        let k = rng.gen_range(0..c2.triangles().len());
        let split = c2.with_split(k, Point::centroid(&c2.triangles()[k].vertices)).unwrap();
        ensure!(lk4(&c1, &split, 0).unwrap().value == w, "lk4 instance {i}: triangle split");
        let (m, sign) = random_matrix::<4, _>(&mut rng);
        let t = random_point::<4, _>(&mut rng, 30).0;
        ensure!(
            lk4(&c1.mapped(&m, &t), &c2.mapped(&m, &t), 0).unwrap().value == sign as i64 * w,
            "lk4 instance {i}: affine map with det sign {sign}"
        );
    }
    let mut rerouted = 0;
    let mut attempts = 0;
    while rerouted < N {
        attempts += 1;
        ensure!(attempts < 20 * N, "only {rerouted} valid reroutes in {attempts} attempts");
        let e = random_generic_k6(derive_seed(8, attempts as u64), 100).map_err(|e| e.to_string())?;
        let u = rng.gen_range(0..6);
        let v = (u + rng.gen_range(1..6)) % 6;
        let mid = Point::centroid(&[e.vertices()[u].clone(), e.vertices()[v].clone()]);
        let bend = mid.translate(&random_point::<3, _>(&mut rng, 60).0);
        let Ok(bent) = e.clone().with_polyline(u, v, vec![bend]) else { continue };
        if !verify_embedding3(&bent).valid {
            continue;
        }
        let r = lambda(&bent, 0).map_err(|e| e.to_string())?;
        ensure!(r.value == Some(1), "rerouted edge {u}-{v}: lambda {:?}", r.value);
        rerouted += 1;
    }
    Ok(format!("{N} lk3 and {N} lk4 instances x 5 properties, {N} reroutes"))
}

/// Subgraph of a 6-vertex triangulation with randomly relabelled vertices.
fn planar_sample<R: Rng>(rng: &mut R) -> Graph {
    const OCTAHEDRON: [(usize, usize); 12] =
        [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
    // Two degree-5 apexes over a path: the other 6-vertex triangulation.
    const DOUBLE_WHEEL: [(usize, usize); 12] =
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)];
    let mut label: Vec<usize> = (0..6).collect();
    label.shuffle(rng);
    let edges = if rng.gen_bool(0.5) { OCTAHEDRON } else { DOUBLE_WHEEL };
    Graph::new(6, edges.iter().filter(|_| rng.gen_bool(0.8)).map(|&(u, v)| (label[u], label[v]))).unwrap()
}

fn minor_detection() -> Outcome {
    let minor = |g: &Graph| has_k6_minor(g).map_err(|e| e.to_string());
    ensure!(minor(&k6())?, "K6");
    ensure!(minor(&Graph::complete(7))?, "K7");
    ensure!(minor(&k6().subdivide_edge(0, 1, 2).unwrap())?, "K6 with a subdivided edge");
    let mut g = k6();
    for (u, v) in [(0, 1), (2, 3), (4, 5)] {
        g = g.subdivide_edge(u, v, 1).unwrap();
    }
    ensure!(minor(&g)?, "K6 with three subdivided edges");
    ensure!(!minor(&Graph::complete(5))?, "K5");
    ensure!(!minor(&Graph::petersen())?, "Petersen");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..50 {
        ensure!(!minor(&planar_sample(&mut rng))?, "planar sample {i}");
    }
    for c in 0..50 {
        let n = rng.gen_range(6..=9);
        let mut missing: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        missing.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        let mut seen_true = false;
        for (u, v) in missing {
            g.add_edge(u, v).unwrap();
            let now = minor(&g)?;
            ensure!(now || !seen_true, "chain {c}: minor lost after adding {u}-{v}");
            seen_true |= now;
        }
        ensure!(seen_true, "chain {c}: complete graph K{n} without K6 minor");
    }
    Ok("positives, negatives, 50 planar samples, 50 monotone chains".into())
}

fn main() {
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    let fuzz_limit = if cores >= 8 { 180 } else { 900 };
    let criteria: [(u32, &str, u64, fn() -> Outcome); 8] = [
        (1, "dual-pair enumeration", 1, dual_pair_enumeration),
        (2, "lambda = 1 at desk scale", 60, conway_gordon),
        (3, "Lambda of the standard suspension embedding", 60, sigma6_nontrivial),
        (4, "Lambda invariance fuzz (100 trials)", fuzz_limit, fuzz_trials),
        (5, "disjoint cycle pairs in S(K6)", 600, disjoint_cycles),
        (6, "oracle equivalence", 300, oracle_equivalence),
        (7, "property suite", 600, property_suite),
        (8, "K6 minor detection", 300, minor_detection),
    ];
    let mut failed = 0;
    for (n, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > Duration::from_secs(limit) => Err(format!("{d}; over the {limit} s limit")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS [{n}] {name}: {detail} ({:.2} s, limit {limit} s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL [{n}] {name}: {why} ({:.2} s, limit {limit} s)", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 8 criteria passed ({cores} core(s) available)", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
