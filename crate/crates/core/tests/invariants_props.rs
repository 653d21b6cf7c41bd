mod common;

use std::collections::BTreeMap;

use common::*;
use linklab::geometry::{ratio, Point, Point3};
use linklab::invariants::{
    big_lambda, lambda, moment_curve_k6, random_apex_offset, random_generic_k6, sigma6, verify_embedding3,
    verify_embedding4, EmbeddedK6, EmbeddedSuspension, InvariantName, LinkReport,
};
use linklab::io::{parse_report, to_json};
use linklab::linking::lk4_chain_oracle;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reroute a random edge through one bend point near its midpoint, if that
/// keeps the embedding valid.
fn reroute<R: Rng>(rng: &mut R, e: &EmbeddedK6) -> Option<EmbeddedK6> {
    let u = rng.gen_range(0..6);
    let v = (u + rng.gen_range(1..6)) % 6;
    let mid = Point::centroid(&[e.vertices()[u].clone(), e.vertices()[v].clone()]);
    let bend = mid.translate(&random_point::<3, _>(rng, 60).0);
    let bent = e.clone().with_polyline(u, v, vec![bend]).ok()?;
    verify_embedding3(&bent).valid.then_some(bent)
}

#[test]
fn random_vertex_placements_in_four_space_usually_fail() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut invalid = 0;
    for _ in 0..20 {
        let points: Vec<_> = (0..8).map(|_| random_point::<4, _>(&mut rng, 20)).collect();
        let e = EmbeddedSuspension::new(points, BTreeMap::new(), BTreeMap::new()).unwrap();
        if !verify_embedding4(&e).valid {
            invalid += 1;
        }
    }
    assert!(invalid >= 15, "{invalid} of 20 random placements invalid");
}

#[test]
fn reports_round_trip_through_json() {
    let r = lambda(&moment_curve_k6(), 9).unwrap();
    let text = to_json(&r);
    assert_eq!(parse_report::<LinkReport>(text.as_bytes()).unwrap(), r);
    let s = sigma6(&moment_curve_k6(), &Point3::origin(), &Point3::origin()).unwrap();
    let r = big_lambda(&s, 9).unwrap();
    assert_eq!(r.invariant, InvariantName::BigLambda);
    let text = to_json(&r);
    assert!(text.contains("\"bigOmega\": \"1/2\"") || text.contains("\"bigOmega\": \"1\""));
    assert_eq!(parse_report::<LinkReport>(text.as_bytes()).unwrap(), r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_is_one_and_seed_independent(seed in any::<u64>()) {
        let e = random_generic_k6(seed, 100).unwrap();
        let r = lambda(&e, seed).unwrap();
        prop_assert_eq!(r.value, Some(1));
        prop_assert!(r.pairs.iter().all(|p| p.omega.unwrap().abs() <= 1));
        prop_assert_eq!(r.diagnostics.abs_sum % 2, 1);
        let other = lambda(&e, seed.wrapping_add(17)).unwrap();
        let omegas = |r: &LinkReport| r.pairs.iter().map(|p| p.omega).collect::<Vec<_>>();
        prop_assert_eq!(omegas(&other), omegas(&r));
    }

    #[test]
    fn lambda_survives_rerouting_an_edge(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_generic_k6(seed, 100).unwrap();
        if let Some(bent) = reroute(&mut rng, &e) {
            prop_assert_eq!(lambda(&bent, seed).unwrap().value, Some(1));
            // The same route survives the suspension.
            let s = sigma6(&bent, &random_apex_offset(&mut rng), &random_apex_offset(&mut rng)).unwrap();
            prop_assert_eq!(big_lambda(&s, seed).unwrap().value, Some(1));
        }
    }

    #[test]
    fn big_lambda_on_random_sigma6(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_generic_k6(seed, 100).unwrap();
        let s = sigma6(&base, &random_apex_offset(&mut rng), &random_apex_offset(&mut rng)).unwrap();
        let r4 = big_lambda(&s, seed).unwrap();
        let r3 = lambda(&base, seed).unwrap();
        prop_assert_eq!(r4.value, Some(1));
        prop_assert!(!r4.diagnostics.parity_anomaly);
        for (p4, p3) in r4.pairs.iter().zip(&r3.pairs) {
            let w = p3.omega.unwrap().abs();
            prop_assert_eq!(p4.omega_t_s_bar.unwrap().abs(), w);
            prop_assert_eq!(p4.omega_t_bar_s.unwrap().abs(), w);
            let oracle = lk4_chain_oracle(&s.one_cycle(p4.pair.t).unwrap(), &s.two_cycle(p4.pair.t_bar).unwrap());
            prop_assert_eq!(oracle.unwrap(), p4.omega_t_s_bar.unwrap());
        }
        prop_assert_eq!(big_lambda(&s, seed ^ 0xff).unwrap().value, Some(1));
    }

    #[test]
    fn small_rational_offsets_keep_sigma6_valid(seed in any::<u64>(), k in 1i64..50) {
        let base = random_generic_k6(seed, 100).unwrap();
        let a = Point([ratio(1, k), ratio(-1, k), ratio(k, 3)]);
        let s = sigma6(&base, &a, &Point3::origin()).unwrap();
        prop_assert!(verify_embedding4(&s).valid);
    }
}
