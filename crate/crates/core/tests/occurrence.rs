//! Certificates from every branch are accepted by the verifier, and the
//! dispatch matches the defining inequalities.

use hwv_core::occurrence::{
    certify, dispatch, hook_block_with, kl_filter, minimal_m, verify_certificate, Branch, Certificate, KlVerdict,
    Outcome, SearchOptions, ASSUMED_LEMMAS,
};
use hwv_core::partition::partitions_of;
use hwv_core::Partition;

#[test]
fn dispatch_matches_inequalities() {
    for n in 1..=6u64 {
        for d in 1..=4u64 {
            for lambda in partitions_of(n * d, (n * d) as usize, n * d) {
                for m in 1..=3u64 {
                    let branch = dispatch(&lambda, n, d, m).unwrap();
                    let pass = kl_filter(&lambda, n, d, m).unwrap() == KlVerdict::Pass;
                    let expected = if !pass {
                        Branch::Filtered
                    } else if n >= m * d * d {
                        Branch::SmallDegree
                    } else if lambda.body_size() < m.pow(10) {
                        Branch::LongFirstRow
                    } else {
                        Branch::Splitting
                    };
                    assert_eq!(branch, expected, "{lambda} n={n} d={d} m={m}");
                }
            }
        }
    }
}

#[test]
fn desk_certificates_verify() {
    let opts = SearchOptions { seed: 11, ..SearchOptions::default() };
    let mut certified = 0;
    for n in 2..=9u64 {
        for d in 1..=3u64 {
            for lambda in partitions_of(n * d, 4, n * d) {
                let m = minimal_m(&lambda, d);
                if let Outcome::Certified { certificate, .. } = certify(&lambda, n, d, m, &opts).unwrap() {
                    assert!(verify_certificate(&certificate, 1_000_000).is_valid(), "{lambda} n={n} d={d}");
                    certified += 1;
                }
            }
        }
    }
    assert!(certified > 20);
}

#[test]
fn hook_surrogate_block_verifies() {
    let hb = hook_block_with(2, 2, 5, 5, 8, 40, &SearchOptions::default()).unwrap();
    assert!(hb.structured.negative == 0u32.into());
    let block = hb.block;
    let cert = Certificate {
        target: block.weight.clone(),
        n: 40,
        d: 8,
        m: 2,
        blocks: vec![block],
        first_row_fill: 0,
        assumed_lemmas: ASSUMED_LEMMAS.iter().map(|s| s.to_string()).collect(),
    };
    assert!(verify_certificate(&cert, 0).is_valid());
    assert_eq!(cert.target.body(), Partition::new(vec![6]).unwrap());
}
