//! Property checks of the tableau contraction against independent
//! computations: explicit vectors, relabeling, torus weights and the
//! assignment-by-assignment definition.

use hwv_core::budget::Budget;
use hwv_core::contraction::{contract_power, contract_rank_one, contract_rank_one_naive};
use hwv_core::oracle::explicit_v_t;
use hwv_core::symtensor::Exponent;
use hwv_core::{BigInt, BigRational, Partition, SymPoly, Tableau};
use proptest::prelude::*;

const SHAPES: [&[u64]; 8] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[4, 2], &[3, 3], &[3, 2, 1], &[2, 2, 2]];

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A shape, a factorization `d·n` of its size and a shuffled filling.
fn tableau() -> impl Strategy<Value = Tableau> {
    (0..SHAPES.len()).prop_flat_map(|i| {
        let shape = Partition::new(SHAPES[i].to_vec()).unwrap();
        let size = shape.size();
        let dims: Vec<(u32, u64)> = (1..=size).filter(|d| size % d == 0).map(|d| (d as u32, size / d)).collect();
        prop::sample::select(dims).prop_flat_map(move |(d, n)| {
            let letters: Vec<u32> = (1..=d).flat_map(|u| std::iter::repeat(u).take(n as usize)).collect();
            let shape = shape.clone();
            Just(letters).prop_shuffle().prop_map(move |word| {
                let mut rows = Vec::new();
                let mut it = word.into_iter();
                for &len in shape.parts() {
                    rows.push(it.by_ref().take(len as usize).collect());
                }
                Tableau::from_rows(d, n, rows).unwrap()
            })
        })
    })
}

/// A dense polynomial of degree `n` in `vars` variables from a coefficient stream.
fn poly(n: u64, vars: u32, coefs: &[i64]) -> SymPoly {
    let mut exps = Vec::new();
    let mut stack = vec![(1u32, n, Vec::new())];
    while let Some((var, left, cur)) = stack.pop() {
        if var == vars {
            let mut e = cur.clone();
            e.push((var, left));
            exps.push(Exponent::new(e));
            continue;
        }
        for k in 0..=left {
            let mut next = cur.clone();
            next.push((var, k));
            stack.push((var + 1, left - k, next));
        }
    }
    let terms = exps.into_iter().enumerate().map(|(i, e)| (e, rat(coefs[i % coefs.len()])));
    SymPoly::from_terms(n, terms).unwrap()
}

fn relabel(t: &Tableau, perm: &[u32]) -> Tableau {
    let rows = t.rows().iter().map(|r| r.iter().map(|&u| perm[u as usize - 1]).collect()).collect();
    Tableau::from_rows(t.d(), t.n(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn grouped_matches_naive(t in tableau(), seed in 0u64..1000) {
        let ell = t.shape().length() as u64;
        let s: Vec<u32> = (0..t.d() as u64 * t.n()).map(|k| ((seed / (k + 1) + k) % ell) as u32 + 1).collect();
        let naive = contract_rank_one_naive(&t, &s).unwrap().value();
        let grouped = contract_rank_one(&t, &s, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(naive, grouped);
    }

    #[test]
    fn letter_relabeling_preserves_values(
        t in tableau(),
        coefs in prop::collection::vec(-4i64..=4, 1..12),
        perm_seed in any::<u64>(),
    ) {
        let mut perm: Vec<u32> = (1..=t.d()).collect();
        let mut x = perm_seed;
        for i in (1..perm.len()).rev() {
            perm.swap(i, (x % (i as u64 + 1)) as usize);
            x /= i as u64 + 1;
        }
        let p = poly(t.n(), t.shape().length() as u32, &coefs);
        let a = contract_power(&t, &p, &mut Budget::unlimited()).unwrap();
        let b = contract_power(&relabel(&t, &perm), &p, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn canonical_form_preserves_values(t in tableau(), coefs in prop::collection::vec(-4i64..=4, 1..12)) {
        let p = poly(t.n(), t.shape().length() as u32, &coefs);
        if t.validate().is_err() {
            // a repeated letter in a column kills v_T
            prop_assert_eq!(contract_power(&t, &p, &mut Budget::unlimited()).unwrap(), rat(0));
            return Ok(());
        }
        let canon = t.canonicalize().unwrap();
        let a = contract_power(&t, &p, &mut Budget::unlimited()).unwrap();
        let b = contract_power(canon.tableau(), &p, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn torus_weight_covariance(
        t in tableau(),
        coefs in prop::collection::vec(-4i64..=4, 1..12),
        alpha in prop::collection::vec(1i64..=3, 3),
    ) {
        let vars = t.shape().length() as u32;
        let p = poly(t.n(), vars, &coefs);
        let scaled = SymPoly::from_terms(
            p.degree(),
            p.terms().map(|(e, c)| {
                let factor = e.entries().iter().fold(rat(1), |acc, &(i, k)| {
                    acc * rat(alpha[(i - 1) as usize % 3]).pow(k as i32)
                });
                (e.clone(), c * factor)
            }),
        ).unwrap();
        let weight = t.shape().parts().iter().enumerate().fold(rat(1), |acc, (i, &l)| {
            acc * rat(alpha[i % 3]).pow(l as i32)
        });
        let a = contract_power(&t, &p, &mut Budget::unlimited()).unwrap();
        let b = contract_power(&t, &scaled, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(b, a * weight);
    }
}

/// The explicit tensor of `v_T` is killed by every raising operator.
#[test]
fn explicit_vectors_are_highest_weight() {
    let cases: [(u32, u64, &[&[u32]]); 5] = [
        (2, 2, &[&[1, 1], &[2, 2]]),
        (2, 3, &[&[1, 1, 1, 2], &[2, 2]]),
        (3, 2, &[&[1, 1, 2], &[2, 3, 3]]),
        (3, 2, &[&[1, 2, 3], &[2, 3], &[1]]),
        (2, 4, &[&[1, 1, 1, 2, 2, 2], &[2, 1]]),
    ];
    for (d, n, rows) in cases {
        let t = Tableau::from_rows(d, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        let v = explicit_v_t(&t).unwrap();
        for i in 1..t.shape().length() {
            assert!(v.raise(i).values().all(|c| *c == rat(0)), "{rows:?} raised at {i}");
        }
    }
}
