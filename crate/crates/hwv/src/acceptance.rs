//! The acceptance suite: ten criteria, each an independent check with its
//! own time limit. Shared by `hwv selftest` and the `acceptance` test target.

use std::time::{Duration, Instant};

use hwv_core::arith::factorial;
use hwv_core::budget::Budget;
use hwv_core::constructions::{
    long_column_params, long_column_tableau, short_column_tableau, structured_witness, sub_row_counts,
};
use hwv_core::contraction::{contract_power, contract_rank_one_counts, kl_vanishes_shape};
use hwv_core::lifting::{lift_identity_sides, HwvCombo};
use hwv_core::occurrence::{
    certify, even_floor, minimal_m, rectangle_value, split_partition, splitting_hypotheses, verify_certificate,
    Outcome, SearchOptions, SplitMode, Verdict,
};
use hwv_core::oracle::{hwv_rank_by_evaluation, plethysm_coeff_sf, plethysm_coeff_tensor};
use hwv_core::partition::partitions_of;
use hwv_core::symtensor::Exponent;
use hwv_core::tableau::{enumerate_classes, row_tableau};
use hwv_core::{BigInt, BigRational, Partition, SymPoly};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::json::CertificateJson;

type Check = std::result::Result<String, String>;

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "criterion {:>2} [{}] {}: {} ({:.1}s)",
            self.id,
            if self.passed { "pass" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "power-sum evaluation", limit: Duration::from_secs(10), run: power_sum_evaluation },
    Criterion { id: 2, title: "oracle triple agreement", limit: Duration::from_secs(300), run: oracle_agreement },
    Criterion { id: 3, title: "classical spot values", limit: Duration::from_secs(60), run: spot_values },
    Criterion { id: 4, title: "lifting identity", limit: Duration::from_secs(120), run: lifting_identity },
    Criterion { id: 5, title: "stability under lifts", limit: Duration::from_secs(300), run: stability },
    Criterion { id: 6, title: "length/first-row vanishing", limit: Duration::from_secs(300), run: kl_vanishing },
    Criterion { id: 7, title: "building blocks at desk scale", limit: Duration::from_secs(300), run: building_blocks },
    Criterion { id: 8, title: "reference instance structure", limit: Duration::from_secs(60), run: reference_instances },
    Criterion { id: 9, title: "splitting arithmetic", limit: Duration::from_secs(120), run: splitting_arithmetic },
    Criterion { id: 10, title: "certificate round trip", limit: Duration::from_secs(300), run: certificate_round_trip },
];

/// Runs the selected criteria (all when `ids` is empty) in parallel and
/// returns their reports in id order.
pub fn run(ids: &[u8]) -> Vec<Report> {
    let selected: Vec<&Criterion> = CRITERIA.iter().filter(|c| ids.is_empty() || ids.contains(&c.id)).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = selected.iter().map(|c| scope.spawn(move || run_one(c))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}

/// Runs a single criterion.
pub fn run_criterion(id: u8) -> Option<Report> {
    CRITERIA.iter().find(|c| c.id == id).map(run_one)
}

fn run_one(c: &Criterion) -> Report {
    let start = Instant::now();
    let result = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".to_string()));
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > c.limit {
        passed = false;
        detail = format!("{detail}; exceeded the {}s limit", c.limit.as_secs());
    }
    Report { id: c.id, title: c.title, passed, detail, elapsed }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: hwv_core::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn random_rational<R: Rng>(rng: &mut R, nonzero: bool) -> BigRational {
    loop {
        let num = rng.gen_range(-9i64..=9);
        if nonzero && num == 0 {
            continue;
        }
        return BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1i64..=6)));
    }
}

/// All exponent vectors of total degree `degree` in variables `1..=nvars`.
fn monomials(degree: u64, nvars: u32) -> Vec<Exponent> {
    fn go(var: u32, nvars: u32, left: u64, cur: &mut Vec<(u32, u64)>, out: &mut Vec<Exponent>) {
        if var == nvars {
            cur.push((var, left));
            out.push(Exponent::new(cur.iter().copied()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push((var, e));
            go(var + 1, nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, nvars.max(1), degree, &mut Vec::new(), &mut out);
    out
}

/// Dense polynomial with small random integer coefficients.
fn random_poly<R: Rng>(rng: &mut R, degree: u64, nvars: u32) -> SymPoly {
    let terms = monomials(degree, nvars).into_iter().map(|a| (a, int(rng.gen_range(-3..=3))));
    SymPoly::from_terms(degree, terms).expect("homogeneous")
}

/// A few random monomials of degree `n` whose `X_1`-degree is below `cap`.
fn random_remainder<R: Rng>(rng: &mut R, n: u64, cap: u64, nvars: u32) -> SymPoly {
    let candidates: Vec<Exponent> = monomials(n, nvars).into_iter().filter(|a| a.get(1) < cap).collect();
    let mut r = SymPoly::zero(n);
    if candidates.is_empty() {
        return r;
    }
    for _ in 0..3 {
        let a = candidates[rng.gen_range(0..candidates.len())].clone();
        r = r.add(&SymPoly::term(a, random_rational(rng, true))).expect("same degree");
    }
    r
}

/// `(d, n)` with `d·n = size`.
fn factorizations(size: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=size).filter(move |d| size % d == 0).map(move |d| (d, size / d))
}

fn all_partitions(size: u64) -> Vec<Partition> {
    partitions_of(size, size as usize, size)
}

fn power_sum_evaluation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases = 0;
    for n in [2u64, 4] {
        for d in 1u32..=3 {
            let t = core(row_tableau(d, n))?;
            for _ in 0..5 {
                let c: Vec<BigRational> = (0..d).map(|_| random_rational(&mut rng, true)).collect();
                let poly = core(SymPoly::from_terms(
                    n,
                    c.iter().enumerate().map(|(j, cj)| (Exponent::power(j as u32 + 1, n), cj.clone())),
                ))?;
                let got = core(contract_power(&t, &poly, &mut Budget::unlimited()))?;
                let want = c.iter().fold(BigRational::from_integer(factorial(d as u64).into()), |acc, x| acc * x);
                ensure(got == want, || format!("d={d} n={n}: got {got}, expected {want}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} exact matches of d!·c_1⋯c_d"))
}

fn oracle_agreement() -> Check {
    let mut checked = 0;
    let mut nonzero = 0;
    for size in 1..=8u64 {
        for (d, n) in factorizations(size) {
            for lambda in all_partitions(size) {
                let sf = core(plethysm_coeff_sf(&lambda, d, n, lambda.length()))?;
                let tensor = core(plethysm_coeff_tensor(&lambda, d, n))?;
                let rank = core(hwv_rank_by_evaluation(&lambda, d, n, 7))? as u64;
                ensure(sf == tensor && tensor == rank, || {
                    format!("λ={lambda} d={d} n={n}: sf {sf}, tensor {tensor}, rank {rank}")
                })?;
                checked += 1;
                nonzero += usize::from(sf > 0);
            }
        }
    }
    Ok(format!("{checked} (λ, d, n) triples agree, {nonzero} with a_λ > 0"))
}

fn spot_values() -> Check {
    let cases: [(&[u64], u64, u64, u64); 6] = [
        (&[4], 2, 2, 1),
        (&[3, 1], 2, 2, 0),
        (&[2, 2], 2, 2, 1),
        (&[6], 3, 2, 1),
        (&[4, 2], 3, 2, 1),
        (&[2, 2, 2], 3, 2, 1),
    ];
    for (parts, d, n, want) in cases {
        let lambda = p(parts);
        let sf = core(plethysm_coeff_sf(&lambda, d, n, lambda.length()))?;
        ensure(sf == want, || format!("a_{lambda}({d}[{n}]) = {sf} by symmetric functions, expected {want}"))?;
        let rank = core(hwv_rank_by_evaluation(&lambda, d, n, 3))? as u64;
        ensure(rank == want, || format!("a_{lambda}({d}[{n}]): tableau rank {rank}, expected {want}"))?;
    }
    Ok("6 values confirmed by symmetric functions, then by tableau rank".into())
}

fn lifting_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut checked, mut nonzero) = (0, 0);
    for size in 1..=8u64 {
        for (d, m) in factorizations(size) {
            for lambda in all_partitions(size) {
                let nvars = lambda.length() as u32;
                for class in enumerate_classes(&lambda, d as u32, m) {
                    let f = HwvCombo::single(class);
                    for n in m + 1..=m + 3 {
                        for _ in 0..5 {
                            let poly = random_poly(&mut rng, m, nvars);
                            let r = random_remainder(&mut rng, n, n - m, nvars.max(2));
                            let (lhs, rhs) =
                                core(lift_identity_sides(&f, &poly, n, &r, &mut Budget::unlimited()))?;
                            ensure(lhs == rhs, || format!("λ={lambda} d={d} m={m} n={n}: {lhs} != {rhs}"))?;
                            checked += 1;
                            nonzero += usize::from(!lhs.is_zero());
                        }
                    }
                }
            }
        }
    }
    ensure(nonzero > 0, || "every evaluation vanished".into())?;
    Ok(format!("{checked} exact identities ({nonzero} nonzero)"))
}

fn stability() -> Check {
    let (mut inner, mut outer) = (0, 0);
    for size in 1..=8u64 {
        for (d, m) in factorizations(size) {
            for mu in all_partitions(size) {
                let vars = mu.length();
                let base = core(plethysm_coeff_sf(&mu, d, m, vars))?;
                if mu.part(2) <= m {
                    for n in m + 1..=m + 2 {
                        let lifted = core(mu.add_first_row((d * (n - m)) as i64))?;
                        let a = core(plethysm_coeff_sf(&lifted, d, n, vars))?;
                        ensure(a == base, || format!("a_{mu}({d}[{m}]) = {base} but a_{lifted}({d}[{n}]) = {a}"))?;
                        inner += 1;
                    }
                }
                if mu.part(2) + mu.body_size() <= d {
                    for e in d + 1..=d + 2 {
                        let lifted = core(mu.add_first_row(((e - d) * m) as i64))?;
                        let a = core(plethysm_coeff_sf(&lifted, e, m, vars))?;
                        ensure(a == base, || format!("a_{mu}({d}[{m}]) = {base} but a_{lifted}({e}[{m}]) = {a}"))?;
                        outer += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{inner} inner and {outer} outer lifts preserve the coefficient"))
}

fn kl_vanishing() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut vanishing, mut witnessed) = (0, 0);
    for size in 1..=8u64 {
        for (d, n) in factorizations(size) {
            for lambda in all_partitions(size) {
                let classes = enumerate_classes(&lambda, d as u32, n);
                for m in 1..=2u64.min(n) {
                    // points of Z_{n,m} are polynomials in m² variables, X_1 among them
                    let points: Vec<SymPoly> =
                        (0..5).map(|_| random_poly(&mut rng, m, (m * m) as u32).pad_multiply(n - m)).collect();
                    let violates = lambda.length() as u64 > m * m || lambda.first() < (n - m) * d;
                    ensure(violates == kl_vanishes_shape(&lambda, n, d, m), || {
                        format!("filter disagreement at λ={lambda} n={n} d={d} m={m}")
                    })?;
                    if violates {
                        for class in &classes {
                            for q in &points {
                                let v = core(contract_power(class.tableau(), q, &mut Budget::unlimited()))?;
                                ensure(v.is_zero(), || format!("λ={lambda} n={n} d={d} m={m}: value {v} != 0"))?;
                            }
                        }
                        vanishing += 1;
                    } else if m == 1 && !classes.is_empty() {
                        let mut found = false;
                        'outer: for class in &classes {
                            for q in &points {
                                if !core(contract_power(class.tableau(), q, &mut Budget::unlimited()))?.is_zero() {
                                    found = true;
                                    break 'outer;
                                }
                            }
                        }
                        ensure(found, || format!("λ={lambda} n={n} d={d}: no nonzero value on padded points"))?;
                        witnessed += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{vanishing} filtered cases vanish exactly, {witnessed} passing cases nonzero"))
}

fn building_blocks() -> Check {
    let short = core(short_column_tableau(1, 1, 5, 5, 8))?;
    let (e, i_prime) = long_column_params(1, 2);
    let long = core(long_column_tableau(1, 2, i_prime, (e + 2) as u64, e + i_prime + 1))?;
    let mut notes = Vec::new();
    // letters 1..=D below the first row must have pairwise distinct counts
    for (name, t, distinct) in [("short", &short, 2usize), ("long", &long, e as usize)] {
        let counts = sub_row_counts(t);
        let mut low: Vec<u64> = counts[1..=distinct].to_vec();
        low.sort_unstable();
        low.dedup();
        ensure(low.len() == distinct, || format!("{name}: sub-row counts of letters 1..={distinct} not distinct"))?;
        let s = structured_witness(t);
        let c = core(contract_rank_one_counts(t, &s, &mut Budget::capped(2_000_000_000)))?;
        ensure(c.negative.is_zero(), || format!("{name}: {} contributions with val = −1", c.negative))?;
        ensure(!c.positive.is_zero(), || format!("{name}: no contributing assignment"))?;
        notes.push(format!("{name} {} {}: {} assignments, all +1", t.shape(), t.n(), c.positive));
    }
    Ok(notes.join("; "))
}

fn reference_instances() -> Check {
    let t = core(short_column_tableau(5, 3, 13, 13, 24))?;
    ensure(t.d() as u64 * t.n() == 312, || "dn != 312".into())?;
    let j = t.shape().first() - 14;
    ensure(j == 230, || format!("j = {j}, expected 230"))?;
    ensure(t.shape().parts() == [244, 14, 14, 14, 13, 13], || format!("shape {}", t.shape()))?;
    let counts = sub_row_counts(&t);
    let below: Vec<u32> = (1..=t.d()).filter(|&u| counts[u as usize] > 0).collect();
    ensure(below == (1..=10).collect::<Vec<_>>(), || format!("sub-row letters {below:?}"))?;
    let mult: Vec<u64> = (1..=10).map(|u| counts[u]).collect();
    ensure(mult == [2, 3, 4, 5, 6, 7, 8, 10, 11, 12], || format!("multiplicities {mult:?}"))?;
    let rows = t.rows();
    let rows_below: [(u32, usize, u32, usize); 5] = [(1, 2, 10, 12), (2, 3, 9, 11), (3, 4, 8, 10), (4, 5, 7, 8), (5, 6, 6, 7)];
    for (k, (a, na, b, nb)) in rows_below.iter().enumerate() {
        let want: Vec<u32> = std::iter::repeat(*a).take(*na).chain(std::iter::repeat(*b).take(*nb)).collect();
        ensure(rows[k + 1] == want, || format!("short instance row {}: {:?}", k + 2, rows[k + 1]))?;
    }
    ensure(rows[0][..14] == (11..=24).collect::<Vec<_>>()[..], || "short instance first row prefix".into())?;

    let (e, i_prime) = long_column_params(2, 8);
    ensure((e, i_prime) == (4, 18), || format!("e = {e}, i' = {i_prime}"))?;
    let t = core(long_column_tableau(2, 8, 18, 10, 27))?;
    let rows = t.rows();
    ensure(rows.len() == 9, || format!("{} rows", rows.len()))?;
    ensure(rows[0][..19] == (9..=27).collect::<Vec<_>>()[..], || "long instance first row prefix".into())?;
    let tail = &rows[0][19..];
    ensure(tail[0] == 1 && tail.windows(2).all(|w| w[0] <= w[1]), || "long instance first row tail".into())?;
    let row2: Vec<u32> = [8, 1, 4, 4, 4, 4, 5, 5, 5, 5, 5].into_iter().chain([8; 8]).collect();
    let row3: Vec<u32> = [7, 2, 2, 3, 3, 3].into_iter().chain([6; 6]).chain([7; 7]).collect();
    ensure(rows[1] == row2, || format!("long instance row 2: {:?}", rows[1]))?;
    ensure(rows[2] == row3, || format!("long instance row 3: {:?}", rows[2]))?;
    for (k, row) in rows.iter().enumerate().skip(3) {
        ensure(row == &[9 - k as u32], || format!("long instance row {}: {row:?}", k + 1))?;
    }
    Ok("short (t,r,i)=(5,3,13): dn=312, j=230, D=10; long (t,r,i)=(2,8,18): e=4; box by box".into())
}

/// A random partition of `n·d` whose body has `rows` rows summing to `body`.
fn synthetic<R: Rng>(rng: &mut R, n: u64, d: u64, rows: usize, body: u64) -> Option<Partition> {
    let mut cuts: Vec<u64> = (0..rows - 1).map(|_| rng.gen_range(0..=body)).collect();
    cuts.push(0);
    cuts.push(body);
    cuts.sort_unstable();
    let mut parts: Vec<u64> = cuts.windows(2).map(|w| w[1] - w[0]).filter(|&x| x > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let first = (n * d).checked_sub(body)?;
    if parts.first().is_some_and(|&x| x > first) {
        return None;
    }
    parts.insert(0, first);
    Partition::new(parts).ok()
}

fn splitting_arithmetic() -> Check {
    ensure(even_floor(7, 1) == 6 && even_floor(8, 1) == 8, || "even floor".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut total, mut strict, mut k_odd) = (0, 0, 0);
    while total < 100 {
        let (lambda, n, d, m) = if total % 2 == 0 {
            let d = rng.gen_range(513..=1200u64);
            let n = rng.gen_range(1536..=4000u64);
            let body = rng.gen_range(1024..=2 * d);
            let rows = rng.gen_range(1..=3);
            let Some(l) = synthetic(&mut rng, n, d, rows, body) else { continue };
            (l, n, d, 2)
        } else {
            let (n, d) = (rng.gen_range(2..=12u64), rng.gen_range(1..=12u64));
            let body = rng.gen_range(0..=n * d / 2);
            let rows = rng.gen_range(1..=5);
            let Some(l) = synthetic(&mut rng, n, d, rows, body) else { continue };
            (l, n, d, rng.gen_range(1..=3u64))
        };
        total += 1;
        let split = core(split_partition(&lambda, n, d, m, SplitMode::Structural))?;
        let ctx = || format!("λ={lambda} n={n} d={d} m={m}");
        ensure(split.recombined_size() == lambda.size() as i64, || format!("{}: sizes", ctx()))?;
        ensure(split.d_k.values().all(|x| x % 2 == 0), || format!("{}: odd d_k", ctx()))?;
        if let Some(rebuilt) = split.recombined() {
            ensure(rebuilt == lambda, || format!("{}: recombination gives {rebuilt}", ctx()))?;
        }
        if let Some(mu) = &split.mu {
            for (k, dk) in &split.d_k {
                let (q, r, w) = (split.q_k[k], split.r_k[k], split.width[k]);
                ensure(r % 2 == 0 && *dk as u64 == q * w + r, || format!("{}: division at k={k}", ctx()))?;
            }
            ensure(mu.body() == lambda.body(), || format!("{}: μ = {mu} differs below the first row", ctx()))?;
        }
        if splitting_hypotheses(&lambda, n, d, m).is_ok() {
            strict += 1;
            let s = core(split_partition(&lambda, n, d, m, SplitMode::Strict))?;
            let kk = s.big_k.ok_or_else(|| format!("{}: no K", ctx()))?;
            k_odd += usize::from(s.odd.contains(&kk));
            ensure(s.d_k[&kk] >= 0, || format!("{}: d_K < 0", ctx()))?;
            let mu = s.mu.as_ref().ok_or_else(|| format!("{}: no μ", ctx()))?;
            ensure(mu.size() <= d * n, || format!("{}: |μ| = {} > dn", ctx(), mu.size()))?;
        }
    }
    ensure(strict >= 40 && k_odd > 0, || format!("only {strict} strict cases, {k_odd} with c_K odd"))?;
    Ok(format!("{total} splittings consistent; {strict} satisfy the hypotheses ({k_odd} with c_K odd), all with |μ| ≤ dn"))
}

fn round_trip(cert: &hwv_core::occurrence::Certificate) -> std::result::Result<(), String> {
    let text = serde_json::to_string(&CertificateJson::new(cert, None)).map_err(|e| e.to_string())?;
    let back: CertificateJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let parsed = back.to_certificate().map_err(|e| e.to_string())?;
    ensure(&parsed == cert, || "json round trip changed the certificate".into())?;
    match verify_certificate(&parsed, 2_000_000) {
        Verdict::Valid { .. } => Ok(()),
        Verdict::Invalid(r) => Err(format!("{} rejected: {r}", cert.target)),
    }
}

fn certificate_round_trip() -> Check {
    let opts = SearchOptions::default();
    let (mut certified, mut refused) = (0, 0);
    let mut inputs: Vec<(Partition, u64, u64, u64)> = Vec::new();
    for n in 1..=8u64 {
        for d in 1..=3u64 {
            for lambda in all_partitions(n * d) {
                let m = minimal_m(&lambda, d);
                inputs.push((lambda, n, d, m));
            }
        }
    }
    inputs.push((p(&[14, 2]), 8, 2, 2));
    inputs.push((p(&[126, 2]), 16, 8, 2));
    inputs.push((p(&[1536 * 512 - 1024, 512, 512]), 1536, 512, 2));
    let mut small = None;
    for (lambda, n, d, m) in &inputs {
        match core(certify(lambda, *n, *d, *m, &opts))? {
            Outcome::Certified { certificate, .. } => {
                round_trip(&certificate)?;
                certified += 1;
                if lambda.parts() == [14, 2] {
                    small = Some(certificate);
                }
            }
            Outcome::Refused(_) => refused += 1,
        }
    }
    let big = inputs.last().expect("nonempty");
    let Outcome::Certified { certificate: rect, .. } = core(certify(&big.0, big.1, big.2, big.3, &opts))? else {
        return Err("rectangle-only splitting refused".into());
    };
    ensure(rect.blocks[0].value == rectangle_value(3, 512, 1536), || "rectangle value".into())?;

    let cert = small.ok_or("no certificate for (14,2)")?;
    let mut zeroed = cert.clone();
    for sm in &mut zeroed.blocks[0].witness.summands {
        sm.coef = BigRational::zero();
    }
    zeroed.blocks[0].value = BigRational::zero();
    let mut weight = cert.clone();
    weight.blocks[0].weight = p(&[13, 3]);
    weight.target = p(&[13, 3]);
    let mut membership = cert.clone();
    let extra = membership.blocks[0].witness.summands[0].clone();
    membership.blocks[0].witness.summands.extend([extra.clone(), extra]);
    for (name, tampered, code) in
        [("zeroed value", zeroed, "zeroValue"), ("weight", weight, "weightMismatch"), ("membership", membership, "membershipViolation")]
    {
        match verify_certificate(&tampered, 0) {
            Verdict::Invalid(r) if r.code() == code => {}
            other => return Err(format!("{name} tampering gave {other:?}")),
        }
    }
    Ok(format!("{certified} certificates verified after json round trip, {refused} refusals; 3 tamperings rejected"))
}
