//! Occurrence certificates for `ℂ[Det_n]_d`.
//!
//! A certificate lists building blocks. Each block is a lifted tableau
//! vector together with a padded power-sum point `X_1^{n−s}(Σ_j c_j v_j^s)`
//! (a point of `Det_n` whenever `n ≥ s·#summands`) at which the vector does
//! not vanish. Block weights add up, by the semigroup property, and the
//! remaining boxes are filled into the first row in multiples of `n`.
//!
//! [`certify`] runs a fixed case distinction: the necessary length/body
//! filter, then small degree, long first row and finally the splitting into
//! rectangles and hooks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::arith::{binomial, factorial, unsigned};
use crate::budget::Budget;
use crate::constructions::{hook_tableau, hook_width, structured_witness};
use crate::contraction::{contract_power, contract_rank_one_counts, RankOneCounts};
use crate::error::{precondition, Error, Result};
use crate::lifting::{evaluate_lifted, inner_unlift_shape, outer_unlift_shape};
use crate::oracle::plethysm_coeff_sf;
use crate::partition::Partition;
use crate::symtensor::{Exponent, PowerSumPoint, Summand, SymPoly};
use crate::tableau::{enumerate_classes, row_tableau, Tableau};

/// Facts the certificate relies on without recomputing them.
pub const ASSUMED_LEMMAS: [&str; 2] = [
    "padded power sums X_1^(n-s)(v_1^s + ... + v_k^s) lie in Det_n whenever n >= s*k",
    "Det_n is irreducible, so products of highest weight functions that are nonzero on Det_n \
     are nonzero on Det_n (semigroup property); (n) occurs in degree 1 via lc(X_1^n) = 1",
];

/// `x^k` with overflow reported.
fn pow_checked(x: u64, k: u32) -> Result<u64> {
    x.checked_pow(k).ok_or(Error::Overflow("power"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlVerdict {
    Pass,
    /// `ℓ(λ) > m²`
    Length { length: u64, bound: u64 },
    /// `|λ̄| > md`
    Body { body: u64, bound: u64 },
}

impl fmt::Display for KlVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pass => f.write_str("pass"),
            Self::Length { length, bound } => write!(f, "fail(length): ℓ(λ) = {length} > m² = {bound}"),
            Self::Body { body, bound } => write!(f, "fail(body): |λ̄| = {body} > md = {bound}"),
        }
    }
}

/// The necessary condition `ℓ(λ) ≤ m²` and `|λ̄| ≤ md` for occurring in
/// the coordinate ring of the padded permanent orbit closure.
pub fn kl_filter(lambda: &Partition, n: u64, d: u64, m: u64) -> Result<KlVerdict> {
    precondition!(lambda.size() == n * d, "|λ| = {} = nd = {}", lambda.size(), n * d);
    let m2 = m.checked_mul(m).ok_or(Error::Overflow("m²"))?;
    if lambda.length() as u64 > m2 {
        return Ok(KlVerdict::Length { length: lambda.length() as u64, bound: m2 });
    }
    if lambda.body_size() > m * d {
        return Ok(KlVerdict::Body { body: lambda.body_size(), bound: m * d });
    }
    Ok(KlVerdict::Pass)
}

/// Smallest `m ≥ 1` passing [`kl_filter`].
pub fn minimal_m(lambda: &Partition, d: u64) -> u64 {
    let mut m = 1;
    while m * m < lambda.length() as u64 {
        m += 1;
    }
    if d > 0 {
        m = m.max(lambda.body_size().div_ceil(d));
    }
    m.max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockKind {
    RectanglePad,
    Hook,
    FirstRow,
    Lifted,
}

impl BlockKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::RectanglePad => "rectanglePad",
            Self::Hook => "hook",
            Self::FirstRow => "firstRow",
            Self::Lifted => "lifted",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "rectanglePad" => Self::RectanglePad,
            "hook" => Self::Hook,
            "firstRow" => Self::FirstRow,
            "lifted" => Self::Lifted,
            _ => return None,
        })
    }
}

/// One building block: the tableau `base` (content `k × s`) lifted to
/// `degree` letters and inner degree `lift_to`, with a witness point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub base: Tableau,
    pub lift_to: u64,
    pub degree: u32,
    pub weight: Partition,
    pub witness: PowerSumPoint,
    pub value: BigRational,
    /// 0 for a structured witness, `t ≥ 1` for the `t`-th seeded random point.
    pub seed_offset: u64,
}

impl Block {
    /// The lifted tableau whose vector the block certifies.
    pub fn lifted_tableau(&self) -> Result<Tableau> {
        self.base.outer_lift(self.degree)?.inner_lift(self.lift_to)
    }
}

/// Expected weight of a lifted block.
fn lifted_weight(base: &Tableau, degree: u32, lift_to: u64) -> Result<Partition> {
    let s = base.n();
    let k = base.d();
    precondition!(degree >= k && lift_to >= s, "degree {degree} >= {k} and liftTo {lift_to} >= {s}");
    let extra = (degree - k) as u64 * s + degree as u64 * (lift_to - s);
    base.shape().add_first_row(extra as i64)
}

/// The inner polynomial `p = S^{-1}_{s,n}(Σ_j c_j v_j^s)` of a witness.
fn witness_inner(witness: &PowerSumPoint) -> Result<SymPoly> {
    witness.expand_inner().scaling_map(witness.s, witness.pad + witness.s, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Partition,
    pub n: u64,
    pub d: u64,
    pub m: u64,
    pub blocks: Vec<Block>,
    pub first_row_fill: u64,
    pub assumed_lemmas: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    ZeroValue { block: usize },
    ValueMismatch { block: usize, recomputed: String },
    DirectMismatch { block: usize },
    WeightMismatch { detail: String },
    DegreeMismatch { detail: String },
    MembershipViolation { block: usize, n: u64, s: u64, k: u64 },
    LiftMismatch { block: usize, detail: String },
    MalformedBlock { block: usize, detail: String },
    FillNotMultiple { fill: u64, n: u64 },
}

impl InvalidReason {
    pub fn code(&self) -> &'static str {
        match self {
            Self::ZeroValue { .. } => "zeroValue",
            Self::ValueMismatch { .. } => "valueMismatch",
            Self::DirectMismatch { .. } => "directMismatch",
            Self::WeightMismatch { .. } => "weightMismatch",
            Self::DegreeMismatch { .. } => "degreeMismatch",
            Self::MembershipViolation { .. } => "membershipViolation",
            Self::LiftMismatch { .. } => "liftMismatch",
            Self::MalformedBlock { .. } => "malformedBlock",
            Self::FillNotMultiple { .. } => "fillNotMultiple",
        }
    }
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Self::ZeroValue { block } => write!(f, "block {block} evaluates to 0"),
            Self::ValueMismatch { block, recomputed } => {
                write!(f, "block {block} recorded value differs from recomputed {recomputed}")
            }
            Self::DirectMismatch { block } => {
                write!(f, "block {block} direct evaluation of the lifted tableau disagrees")
            }
            Self::WeightMismatch { detail } | Self::DegreeMismatch { detail } => f.write_str(detail),
            Self::MembershipViolation { block, n, s, k } => {
                write!(f, "block {block}: n = {n} < s·k = {s}·{k}")
            }
            Self::LiftMismatch { block, detail } | Self::MalformedBlock { block, detail } => {
                write!(f, "block {block}: {detail}")
            }
            Self::FillNotMultiple { fill, n } => write!(f, "firstRowFill {fill} is not a multiple of n = {n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid {
        /// blocks whose lifted tableau was also evaluated directly
        direct_checks: usize,
    },
    Invalid(InvalidReason),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Valid { .. })
    }
}

/// Recomputes every block from scratch and checks the bookkeeping.
///
/// Block values are recomputed through the lift identity. When the lifted
/// tableau is small enough for `direct_cap` enumeration nodes it is also
/// evaluated directly at the padded witness.
pub fn verify_certificate(cert: &Certificate, direct_cap: u64) -> Verdict {
    match verify_inner(cert, direct_cap) {
        Ok(v) => v,
        Err(e) => Verdict::Invalid(InvalidReason::MalformedBlock { block: usize::MAX, detail: e.to_string() }),
    }
}

fn verify_inner(cert: &Certificate, direct_cap: u64) -> Result<Verdict> {
    let n = cert.n;
    let mut weight = Partition::empty();
    let mut degrees = 0u64;
    let mut direct_checks = 0;
    for (idx, b) in cert.blocks.iter().enumerate() {
        let bad = |detail: String| Ok(Verdict::Invalid(InvalidReason::MalformedBlock { block: idx, detail }));
        if let Err(e) = b.base.validate() {
            return bad(e.to_string());
        }
        let s = b.base.n();
        let k = b.base.d();
        if b.witness.s != s || b.witness.pad + s != b.lift_to || b.lift_to != n {
            return Ok(Verdict::Invalid(InvalidReason::LiftMismatch {
                block: idx,
                detail: format!(
                    "witness X_1^{} · (degree {}) does not match base inner degree {s} lifted to n = {n}",
                    b.witness.pad, b.witness.s
                ),
            }));
        }
        if b.degree < k {
            return bad(format!("degree {} < base letters {k}", b.degree));
        }
        let count = b.witness.summands.len() as u64;
        if n < s.saturating_mul(count) {
            return Ok(Verdict::Invalid(InvalidReason::MembershipViolation { block: idx, n, s, k: count }));
        }
        let expect = lifted_weight(&b.base, b.degree, b.lift_to)?;
        if expect != b.weight {
            return Ok(Verdict::Invalid(InvalidReason::WeightMismatch {
                detail: format!("block {idx} weight {} but its lifted tableau has weight {expect}", b.weight),
            }));
        }
        if b.value.is_zero() {
            return Ok(Verdict::Invalid(InvalidReason::ZeroValue { block: idx }));
        }
        let p = witness_inner(&b.witness)?;
        let value = evaluate_lifted(&b.base, b.degree, &p, &mut Budget::unlimited())?;
        if value.is_zero() {
            return Ok(Verdict::Invalid(InvalidReason::ZeroValue { block: idx }));
        }
        if value != b.value {
            return Ok(Verdict::Invalid(InvalidReason::ValueMismatch {
                block: idx,
                recomputed: crate::symtensor::format_rational(&value),
            }));
        }
        if let Some(direct) = direct_value(b, direct_cap)? {
            if direct != value {
                return Ok(Verdict::Invalid(InvalidReason::DirectMismatch { block: idx }));
            }
            direct_checks += 1;
        }
        weight = weight.sum(&b.weight)?;
        degrees += b.degree as u64;
    }
    if cert.first_row_fill % n.max(1) != 0 {
        return Ok(Verdict::Invalid(InvalidReason::FillNotMultiple { fill: cert.first_row_fill, n }));
    }
    let total = weight.add_first_row(cert.first_row_fill as i64)?;
    if total != cert.target {
        return Ok(Verdict::Invalid(InvalidReason::WeightMismatch {
            detail: format!("blocks plus first-row fill give {total}, target is {}", cert.target),
        }));
    }
    let fill_degree = cert.first_row_fill.checked_div(n).unwrap_or(0);
    if degrees + fill_degree != cert.d {
        return Ok(Verdict::Invalid(InvalidReason::DegreeMismatch {
            detail: format!("block degrees {degrees} + fill {fill_degree} != d = {}", cert.d),
        }));
    }
    Ok(Verdict::Valid { direct_checks })
}

/// `⟨v_{lifted}, q^{⊗degree}⟩` at the padded witness itself, or `None` when
/// it would exceed `cap` nodes.
fn direct_value(b: &Block, cap: u64) -> Result<Option<BigRational>> {
    if cap == 0 {
        return Ok(None);
    }
    let lifted = b.lifted_tableau()?;
    if lifted.d() as u64 * lifted.n() > 64 {
        return Ok(None);
    }
    match contract_power(&lifted, &b.witness.expand(), &mut Budget::capped(cap)) {
        Ok(v) => Ok(Some(v)),
        Err(Error::CostCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn unit(j: u32) -> crate::symtensor::SparseVec {
    [(j, BigRational::one())].into_iter().collect()
}

/// The padded rectangle `(k × N)^{♯nk}` in degree `k`.
///
/// Witness `X_1^{n−N}·C(n,N)·(X_1^N + … + X_k^N)`, so that
/// `p = S^{-1}_{N,n}(…) = c_1 X_1^N + X_2^N + … + X_k^N` with `c_1 = C(n,N)`
/// and the value is `k!·c_1`.
pub fn rectangle_block(k: u32, big_n: u64, n: u64) -> Result<Block> {
    precondition!(k >= 1, "k = {k} >= 1");
    precondition!(big_n >= 1 && big_n % 2 == 0, "N = {big_n} is even and positive");
    precondition!(n >= big_n * k as u64, "n = {n} >= N·k = {}", big_n * k as u64);
    let base = row_tableau(k, big_n)?;
    let c1 = unsigned(binomial(n, big_n));
    let witness = PowerSumPoint::new(
        n - big_n,
        big_n,
        (1..=k).map(|j| Summand { coef: c1.clone(), vec: unit(j) }).collect(),
    );
    let value = unsigned(factorial(k as u64)) * &c1;
    let weight = lifted_weight(&base, k, n)?;
    Ok(Block { kind: BlockKind::RectanglePad, base, lift_to: n, degree: k, weight, witness, value, seed_offset: 0 })
}

/// The degree-one block `(n)` witnessed by `lc(X_1^n) = 1`.
pub fn first_row_block(n: u64) -> Result<Block> {
    precondition!(n >= 1, "n = {n} >= 1");
    let base = row_tableau(1, n)?;
    let witness = PowerSumPoint::new(0, n, vec![Summand { coef: BigRational::one(), vec: unit(1) }]);
    let weight = base.shape().clone();
    Ok(Block {
        kind: BlockKind::FirstRow,
        base,
        lift_to: n,
        degree: 1,
        weight,
        witness,
        value: BigRational::one(),
        seed_offset: 0,
    })
}

/// Options for witness searches.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub seed: u64,
    pub max_tries: u32,
    /// node cap per evaluation
    pub cost_cap: u64,
    /// coordinates are drawn from `[−bound, bound]`
    pub bound: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { seed: 0, max_tries: 32, cost_cap: 50_000_000, bound: 5 }
    }
}

/// Random witness number `offset` (1-based) for a given seed.
fn random_witness(opts: &SearchOptions, offset: u64, pad: u64, s: u64, count: usize, nvars: u32) -> PowerSumPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(offset);
    PowerSumPoint::random(&mut rng, pad, s, count, nvars, opts.bound)
}

/// Searches a padded power-sum witness for `base` lifted to `degree` letters
/// and inner degree `n`; `count` summands, variables `1..=nvars`. The
/// optional structured candidate is tried first (offset 0).
#[allow(clippy::too_many_arguments)]
fn search_witness(
    kind: BlockKind,
    base: &Tableau,
    degree: u32,
    n: u64,
    count: usize,
    nvars: u32,
    structured: Option<PowerSumPoint>,
    opts: &SearchOptions,
) -> Result<Block> {
    let s = base.n();
    let weight = lifted_weight(base, degree, n)?;
    let candidates = structured
        .into_iter()
        .map(|w| (0u64, w))
        .chain((1..=opts.max_tries as u64).map(|t| (t, random_witness(opts, t, n - s, s, count, nvars))));
    for (offset, witness) in candidates {
        let p = witness_inner(&witness)?;
        let value = evaluate_lifted(base, degree, &p, &mut Budget::capped(opts.cost_cap))?;
        if !value.is_zero() {
            return Ok(Block {
                kind,
                base: base.clone(),
                lift_to: n,
                degree,
                weight,
                witness,
                value,
                seed_offset: offset,
            });
        }
    }
    Err(Error::WitnessSearchExhausted { tries: opts.max_tries })
}

/// Result of building a hook block.
#[derive(Clone, Debug)]
pub struct HookBlock {
    pub block: Block,
    /// Signed assignment counts of `v_T` against the structured monomial tensor.
    pub structured: RankOneCounts,
}

/// The hook block `b×1 + c×i + (j)` built at inner degree `inner_n` with
/// `degree` letters, lifted to `n`, with explicit parameters.
pub fn hook_block_with(
    b: u32,
    c: u32,
    i: u32,
    inner_n: u64,
    degree: u32,
    n: u64,
    opts: &SearchOptions,
) -> Result<HookBlock> {
    precondition!(n >= inner_n, "n = {n} >= inner degree {inner_n}");
    precondition!(
        n >= inner_n * degree as u64,
        "n = {n} >= inner degree · degree = {}",
        inner_n * degree as u64
    );
    let base = hook_tableau(b, c, i, inner_n, degree)?;
    let s = structured_witness(&base);
    let structured = contract_rank_one_counts(&base, &s, &mut Budget::capped(opts.cost_cap))?;
    let nvars = base.shape().length() as u32;
    let block = search_witness(BlockKind::Hook, &base, degree, n, degree as usize, nvars, None, opts)?;
    Ok(HookBlock { block, structured })
}

/// The hook block at the full-scale parameters:
/// `d = 3m⁴`, inner degree `8m²`, `i` the smallest even admissible width.
pub fn hook_block(b: u32, c: u32, m: u64, n: u64, opts: &SearchOptions) -> Result<HookBlock> {
    let m2 = m * m;
    precondition!(b >= 2 && c >= 2, "b = {b} >= 2 and c = {c} >= 2");
    precondition!(b as u64 <= m2 && c as u64 <= m2, "b = {b} <= m² and c = {c} <= m² = {m2}");
    let m6 = pow_checked(m, 6)?;
    precondition!(n >= 24 * m6, "n = {n} >= 24m⁶ = {}", 24 * m6);
    let i = hook_width(b, c)?;
    let degree = u32::try_from(3 * m2 * m2).map_err(|_| Error::Overflow("3m⁴"))?;
    hook_block_with(b, c, i, 8 * m2, degree, n, opts)
}

/// `⌊⌊a/b⌋⌋ = 2⌊a/(2b)⌋`, the even floor of `a/b`.
pub fn even_floor(a: u64, b: u64) -> u64 {
    2 * (a / (2 * b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Hypotheses are checked and violations are errors.
    Strict,
    /// Any input; only the arithmetic is carried out.
    Structural,
}

/// The splitting `λ = 1×c_1 + Σ_k k×d_k + Σ_{k∈S} ω_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `c_k`: number of columns of length `k`, for `k = 1..=L`.
    pub c: BTreeMap<usize, u64>,
    /// Smallest `k ≥ 2` maximising `c_k`.
    pub big_k: Option<usize>,
    /// `k ≥ 2` with `c_k` odd.
    pub odd: Vec<usize>,
    /// `(k, i_k, ω_k = k×1 + K×i_k)` for `k ∈ S`.
    pub omega: Vec<(usize, u64, Partition)>,
    /// `d_k` for `k = 2..=L` (negative only outside the hypotheses).
    pub d_k: BTreeMap<usize, i64>,
    /// `⌊⌊n/k⌋⌋`
    pub width: BTreeMap<usize, u64>,
    /// `d_k = q_k·⌊⌊n/k⌋⌋ + r_k`
    pub q_k: BTreeMap<usize, u64>,
    pub r_k: BTreeMap<usize, u64>,
    /// `μ`, when every `d_k ≥ 0` and every width is positive.
    pub mu: Option<Partition>,
}

impl Split {
    /// `Σ_k k·d_k + Σ_{k∈S} |ω_k| + c_1`
    pub fn recombined_size(&self) -> i64 {
        let c1 = *self.c.get(&1).unwrap_or(&0) as i64;
        let rect: i64 = self.d_k.iter().map(|(&k, &dk)| k as i64 * dk).sum();
        let hooks: i64 = self.omega.iter().map(|(_, _, w)| w.size() as i64).sum();
        c1 + rect + hooks
    }

    /// `λ` rebuilt from the decomposition (columns of the rectangles plus
    /// hooks and `c_1` single boxes), when all `d_k ≥ 0`.
    pub fn recombined(&self) -> Option<Partition> {
        let mut total = Partition::row(*self.c.get(&1).unwrap_or(&0));
        for (&k, &dk) in &self.d_k {
            if dk < 0 {
                return None;
            }
            total = total.sum(&Partition::rectangle(k as u64, dk as u64)).ok()?;
        }
        for (_, _, w) in &self.omega {
            total = total.sum(w).ok()?;
        }
        Some(total)
    }
}

/// Strict-mode hypotheses of the splitting, each as a checked inequality.
pub fn splitting_hypotheses(lambda: &Partition, n: u64, d: u64, m: u64) -> Result<()> {
    precondition!(m >= 2, "m = {m} >= 2");
    let m2 = m * m;
    precondition!(lambda.length() as u64 <= m2, "ℓ(λ) = {} <= m² = {m2}", lambda.length());
    let m10 = pow_checked(m, 10)?;
    let body = lambda.body_size();
    precondition!(m10 <= body, "m¹⁰ = {m10} <= |λ̄| = {body}");
    precondition!(body <= m * d, "|λ̄| = {body} <= md = {}", m * d);
    let m6 = pow_checked(m, 6)?;
    precondition!(n >= 24 * m6, "n = {n} >= 24m⁶ = {}", 24 * m6);
    precondition!(d > 4 * m6, "d = {d} > 4m⁶ = {}", 4 * m6);
    Ok(())
}

/// Computes the splitting decomposition and `μ`.
pub fn split_partition(lambda: &Partition, n: u64, d: u64, m: u64, mode: SplitMode) -> Result<Split> {
    if mode == SplitMode::Strict {
        precondition!(lambda.size() == n * d, "|λ| = {} = nd = {}", lambda.size(), n * d);
        splitting_hypotheses(lambda, n, d, m)?;
    }
    let counts = lambda.column_counts();
    let len = lambda.length();
    let c: BTreeMap<usize, u64> = (1..=len).map(|k| (k, *counts.get(&k).unwrap_or(&0))).collect();
    let big_k = (2..=len).fold(None, |best: Option<usize>, k| match best {
        Some(b) if c[&b] >= c[&k] => Some(b),
        _ => Some(k),
    });
    let odd: Vec<usize> = (2..=len).filter(|k| c[k] % 2 == 1).collect();
    let mut split = Split {
        c: c.clone(),
        big_k,
        odd: odd.clone(),
        omega: Vec::new(),
        d_k: BTreeMap::new(),
        width: BTreeMap::new(),
        q_k: BTreeMap::new(),
        r_k: BTreeMap::new(),
        mu: None,
    };
    let Some(kk) = big_k else {
        split.mu = Some(Partition::empty());
        return Ok(split);
    };
    let mut i_sum = 0i64;
    for &k in &odd {
        let i = hook_width(k as u32, kk as u32)? as u64;
        let omega = Partition::rectangle(k as u64, 1).sum(&Partition::rectangle(kk as u64, i))?;
        i_sum += i as i64;
        split.omega.push((k, i, omega));
    }
    for k in 2..=len {
        let mut dk = c[&k] as i64 - if odd.contains(&k) { 1 } else { 0 };
        if k == kk {
            dk -= i_sum;
        }
        split.d_k.insert(k, dk);
    }
    if mode == SplitMode::Strict {
        let dkk = split.d_k[&kk];
        precondition!(dkk >= 0, "d_K = {dkk} >= 0");
    }
    let feasible = split.d_k.values().all(|&x| x >= 0) && (2..=len).all(|k| even_floor(n, k as u64) > 0);
    if !feasible {
        return Ok(split);
    }
    let mut mu = Partition::empty();
    for k in 2..=len {
        let w = even_floor(n, k as u64);
        let dk = split.d_k[&k] as u64;
        let (q, r) = (dk / w, dk % w);
        split.width.insert(k, w);
        split.q_k.insert(k, q);
        split.r_k.insert(k, r);
        let nk = n * k as u64;
        let full = Partition::rectangle(k as u64, w).pad_to_size(nk)?;
        for _ in 0..q {
            mu = mu.sum(&full)?;
        }
        mu = mu.sum(&Partition::rectangle(k as u64, r).pad_to_size(nk)?)?;
    }
    let m4 = m.saturating_pow(4);
    for (_, _, omega) in &split.omega {
        let target = 3 * n * m4;
        if target >= omega.size() + omega.part(2).saturating_sub(omega.first()) {
            mu = mu.sum(&omega.pad_to_size(target)?)?;
        } else {
            return Ok(split);
        }
    }
    if mode == SplitMode::Strict {
        precondition!(mu.size() <= d * n, "|μ| = {} <= dn = {}", mu.size(), d * n);
    }
    split.mu = Some(mu);
    Ok(split)
}

/// Which case of the case distinction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `ℓ(λ) > m²` or `|λ̄| > md`
    Filtered,
    /// `n ≥ md²`
    SmallDegree,
    /// `|λ̄| < m¹⁰`
    LongFirstRow,
    /// otherwise
    Splitting,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Self::Filtered => "filtered",
            Self::SmallDegree => "smallDegree",
            Self::LongFirstRow => "longFirstRow",
            Self::Splitting => "splitting",
        }
    }
}

/// The case distinction, as a total function.
pub fn dispatch(lambda: &Partition, n: u64, d: u64, m: u64) -> Result<Branch> {
    if kl_filter(lambda, n, d, m)? != KlVerdict::Pass {
        return Ok(Branch::Filtered);
    }
    let md2 = m.saturating_mul(d).saturating_mul(d);
    if n >= md2 {
        return Ok(Branch::SmallDegree);
    }
    if (lambda.body_size() as u128) < (m as u128).saturating_pow(10) {
        return Ok(Branch::LongFirstRow);
    }
    Ok(Branch::Splitting)
}

/// A block the splitting branch would emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannedBlock {
    pub kind: BlockKind,
    pub count: u64,
    pub base_shape: Partition,
    pub degree: u64,
    pub inner_degree: u64,
    pub weight: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refusal {
    pub branch: Branch,
    pub reason: String,
    /// would-be block list of the splitting branch
    pub plan: Vec<PlannedBlock>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Certified { branch: Branch, certificate: Certificate },
    Refused(Refusal),
}

/// Builds a certificate that `λ ⊢ nd` occurs in `ℂ[Det_n]_d`, or refuses.
pub fn certify(lambda: &Partition, n: u64, d: u64, m: u64, opts: &SearchOptions) -> Result<Outcome> {
    precondition!(lambda.size() == n * d, "|λ| = {} = nd = {}", lambda.size(), n * d);
    precondition!(n >= 1 && d >= 1 && m >= 1, "n, d, m >= 1");
    let branch = dispatch(lambda, n, d, m)?;
    let refuse = |reason: String| Ok(Outcome::Refused(Refusal { branch, reason, plan: Vec::new() }));
    let certificate = |blocks: Vec<Block>| {
        let used: u64 = blocks.iter().map(|b| b.degree as u64).sum();
        Certificate {
            target: lambda.clone(),
            n,
            d,
            m,
            blocks,
            first_row_fill: (d - used) * n,
            assumed_lemmas: ASSUMED_LEMMAS.iter().map(|s| s.to_string()).collect(),
        }
    };
    match branch {
        Branch::Filtered => {
            let verdict = kl_filter(lambda, n, d, m)?;
            refuse(format!("not a candidate for the padded permanent orbit closure: {verdict}"))
        }
        _ if lambda.body().is_empty() => {
            Ok(Outcome::Certified { branch, certificate: certificate(vec![first_row_block(n)?]) })
        }
        Branch::SmallDegree => {
            let s = m * d;
            if d == 1 {
                return refuse(format!("a_λ(1[{n}]) = 0 for λ = {lambda} ≠ ({n})"));
            }
            let mu = match inner_unlift_shape(lambda, d, n, s) {
                Ok(mu) => mu,
                Err(e) => return refuse(e.to_string()),
            };
            lifted_branch(lambda, &mu, d as u32, s, d as u32, n, opts, branch, certificate)
        }
        Branch::LongFirstRow => {
            let s = lambda.part(2).max(1);
            let m2 = m * m;
            let k = m2 * s;
            if m2 * s * s > n {
                return refuse(format!("m²s² = {} <= n = {n} fails for s = λ_2 = {s}", m2 * s * s));
            }
            if k > d {
                return refuse(format!("m²s = {k} <= d = {d} fails for s = λ_2 = {s}"));
            }
            let mu = match inner_unlift_shape(lambda, d, n, s) {
                Ok(mu) => mu,
                Err(e) => return refuse(e.to_string()),
            };
            let nu = match outer_unlift_shape(&mu, d, s, k) {
                Ok(nu) => nu,
                Err(e) => return refuse(e.to_string()),
            };
            lifted_branch(lambda, &nu, k as u32, s, d as u32, n, opts, branch, certificate)
        }
        Branch::Splitting => splitting_branch(lambda, n, d, m, certificate),
    }
}

/// Branches (ii) and (iii): `base_shape` with content `k × s`, lifted to
/// `degree` letters and inner degree `n`.
#[allow(clippy::too_many_arguments)]
fn lifted_branch(
    lambda: &Partition,
    base_shape: &Partition,
    k: u32,
    s: u64,
    degree: u32,
    n: u64,
    opts: &SearchOptions,
    branch: Branch,
    certificate: impl Fn(Vec<Block>) -> Certificate,
) -> Result<Outcome> {
    let refuse = |reason: String| Ok(Outcome::Refused(Refusal { branch, reason, plan: Vec::new() }));
    let vars = lambda.length().max(1);
    if plethysm_coeff_sf(base_shape, k as u64, s, vars)? == 0 {
        return refuse(format!("a_{base_shape}({k}[{s}]) = 0, so {lambda} does not occur in Sym^{degree} Sym^{n}"));
    }
    let classes = enumerate_classes(base_shape, k, s);
    let mut last = Error::WitnessSearchExhausted { tries: opts.max_tries };
    for class in &classes {
        match search_witness(BlockKind::Lifted, class.tableau(), degree, n, k as usize, vars as u32, None, opts) {
            Ok(block) => return Ok(Outcome::Certified { branch, certificate: certificate(vec![block]) }),
            Err(e @ Error::WitnessSearchExhausted { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn splitting_branch(
    lambda: &Partition,
    n: u64,
    d: u64,
    m: u64,
    certificate: impl Fn(Vec<Block>) -> Certificate,
) -> Result<Outcome> {
    let branch = Branch::Splitting;
    let split = match split_partition(lambda, n, d, m, SplitMode::Strict) {
        Ok(s) => s,
        Err(e) => {
            return Ok(Outcome::Refused(Refusal { branch, reason: e.to_string(), plan: Vec::new() }));
        }
    };
    let plan = splitting_plan(&split, n, m)?;
    if !split.omega.is_empty() {
        let m2 = m * m;
        return Ok(Outcome::Refused(Refusal {
            branch,
            reason: format!(
                "beyond desk scale: {} hook block(s) need evaluations of degree 3m⁴ = {} at inner degree 8m² = {}",
                split.omega.len(),
                3 * m2 * m2,
                8 * m2
            ),
            plan,
        }));
    }
    let mut blocks = Vec::new();
    for (&k, &q) in &split.q_k {
        if q > 0 {
            let block = rectangle_block(k as u32, split.width[&k], n)?;
            for _ in 0..q {
                blocks.push(block.clone());
            }
        }
        let r = split.r_k[&k];
        if r > 0 {
            blocks.push(rectangle_block(k as u32, r, n)?);
        }
    }
    Ok(Outcome::Certified { branch, certificate: certificate(blocks) })
}

/// The would-be block list of a splitting.
pub fn splitting_plan(split: &Split, n: u64, m: u64) -> Result<Vec<PlannedBlock>> {
    let mut plan = Vec::new();
    for (&k, &q) in &split.q_k {
        let w = split.width[&k];
        let r = split.r_k[&k];
        for (count, width) in [(q, w), (1, r)] {
            if count == 0 || width == 0 {
                continue;
            }
            let base = Partition::rectangle(k as u64, width);
            plan.push(PlannedBlock {
                kind: BlockKind::RectanglePad,
                count,
                weight: base.pad_to_size(n * k as u64)?,
                base_shape: base,
                degree: k as u64,
                inner_degree: width,
            });
        }
    }
    let m2 = m * m;
    for (_, _, omega) in &split.omega {
        let degree = 3 * m2 * m2;
        let inner = 8 * m2;
        plan.push(PlannedBlock {
            kind: BlockKind::Hook,
            count: 1,
            base_shape: omega.pad_to_size(degree * inner)?,
            degree,
            inner_degree: inner,
            weight: omega.pad_to_size(degree * n)?,
        });
    }
    Ok(plan)
}

/// `⟨v_T, (c_1X_1^N + X_2^N + … + X_k^N)^{⊗k}⟩ = k!·c_1`, the value a
/// rectangle block must carry.
pub fn rectangle_value(k: u32, big_n: u64, n: u64) -> BigRational {
    unsigned(factorial(k as u64)) * unsigned(binomial(n, big_n))
}

/// Leading coefficient `⟨X_1^s, p⟩` of a witness' inner polynomial.
pub fn witness_lead(witness: &PowerSumPoint) -> Result<BigRational> {
    Ok(witness_inner(witness)?.coefficient(&Exponent::power(1, witness.s)))
}

/// Integer `x` as a rational.
pub fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kl_examples() {
        assert_eq!(kl_filter(&p(&[12]), 4, 3, 1).unwrap(), KlVerdict::Pass);
        assert!(matches!(kl_filter(&p(&[2, 1, 1]), 2, 2, 1).unwrap(), KlVerdict::Length { .. }));
        assert!(matches!(kl_filter(&p(&[5, 3]), 8, 1, 2).unwrap(), KlVerdict::Body { body: 3, bound: 2 }));
        assert!(kl_filter(&p(&[5, 3]), 4, 3, 1).is_err());
    }

    #[test]
    fn rectangle_examples() {
        let b = rectangle_block(2, 2, 4).unwrap();
        assert_eq!(b.value, int(12));
        assert_eq!(b.weight, p(&[6, 2]));
        assert_eq!(witness_lead(&b.witness).unwrap(), int(6));
        let b = rectangle_block(1, 2, 2).unwrap();
        assert_eq!(b.weight, p(&[2]));
        assert!(!b.value.is_zero());
        assert!(rectangle_block(2, 3, 8).is_err());
    }

    #[test]
    fn even_floor_examples() {
        assert_eq!(even_floor(7, 1), 6);
        assert_eq!(even_floor(8, 1), 8);
        assert_eq!(even_floor(11, 2), 4);
    }

    #[test]
    fn dispatch_is_total() {
        assert_eq!(dispatch(&p(&[6, 1, 1]), 4, 2, 1).unwrap(), Branch::Filtered);
        assert_eq!(dispatch(&p(&[14, 2]), 8, 2, 2).unwrap(), Branch::SmallDegree);
        assert_eq!(dispatch(&p(&[15, 1]), 4, 4, 2).unwrap(), Branch::LongFirstRow);
    }

    #[test]
    fn hook_surrogate() {
        let opts = SearchOptions::default();
        let hb = hook_block_with(2, 2, 5, 5, 8, 40, &opts).unwrap();
        assert!(hb.structured.negative.is_zero());
        assert!(!hb.structured.positive.is_zero());
        assert!(hook_block(1, 2, 2, 1536, &opts).is_err());
    }

    fn certified(outcome: Outcome) -> (Branch, Certificate) {
        match outcome {
            Outcome::Certified { branch, certificate } => (branch, certificate),
            Outcome::Refused(r) => panic!("refused: {}", r.reason),
        }
    }

    #[test]
    fn certify_small_degree() {
        let (branch, cert) = certified(certify(&p(&[14, 2]), 8, 2, 2, &SearchOptions::default()).unwrap());
        assert_eq!(branch, Branch::SmallDegree);
        assert_eq!(cert.blocks.len(), 1);
        assert_eq!(cert.blocks[0].base.shape(), &p(&[6, 2]));
        assert_eq!(verify_certificate(&cert, 1_000_000), Verdict::Valid { direct_checks: 1 });
    }

    #[test]
    fn certify_first_row() {
        let (_, cert) = certified(certify(&p(&[12]), 4, 3, 1, &SearchOptions::default()).unwrap());
        assert_eq!(cert.blocks[0].kind, BlockKind::FirstRow);
        assert_eq!(cert.first_row_fill, 8);
        assert!(verify_certificate(&cert, 1_000_000).is_valid());
    }

    #[test]
    fn certify_long_first_row() {
        let (branch, cert) = certified(certify(&p(&[126, 2]), 16, 8, 2, &SearchOptions::default()).unwrap());
        assert_eq!(branch, Branch::LongFirstRow);
        assert_eq!(cert.blocks[0].base.d(), 8);
        assert_eq!(cert.blocks[0].base.n(), 2);
        assert!(verify_certificate(&cert, 0).is_valid());
    }

    #[test]
    fn certify_refusals() {
        let opts = SearchOptions::default();
        let Outcome::Refused(r) = certify(&p(&[4, 2, 1, 1]), 2, 4, 1, &opts).unwrap() else { panic!() };
        assert_eq!(r.branch, Branch::Filtered);
        // (2n−1, 1) never occurs in Sym^2 Sym^n
        let Outcome::Refused(r) = certify(&p(&[15, 1]), 8, 2, 2, &opts).unwrap() else { panic!() };
        assert!(r.reason.contains("= 0"), "{}", r.reason);
    }

    #[test]
    fn certify_splitting_rectangles_only() {
        let (n, d) = (1536u64, 512u64);
        let lambda = p(&[n * d - 1024, 512, 512]);
        let (branch, cert) = certified(certify(&lambda, n, d, 2, &SearchOptions::default()).unwrap());
        assert_eq!(branch, Branch::Splitting);
        assert_eq!(cert.blocks.len(), 1);
        assert_eq!(cert.blocks[0].value, rectangle_value(3, 512, n));
        assert!(verify_certificate(&cert, 0).is_valid());
    }

    #[test]
    fn certify_splitting_with_hooks_refuses_with_plan() {
        let (n, d) = (1536u64, 512u64);
        let lambda = p(&[n * d - 1024, 513, 511]);
        let Outcome::Refused(r) = certify(&lambda, n, d, 2, &SearchOptions::default()).unwrap() else {
            panic!()
        };
        assert_eq!(r.branch, Branch::Splitting);
        assert!(r.plan.iter().any(|b| b.kind == BlockKind::Hook));
        let split = split_partition(&lambda, n, d, 2, SplitMode::Strict).unwrap();
        assert_eq!(split.odd, vec![3]);
        assert_eq!(split.omega[0].1, 10);
        assert_eq!(split.recombined().unwrap(), lambda);
    }

    #[test]
    fn tampering_is_detected() {
        let (_, cert) = certified(certify(&p(&[14, 2]), 8, 2, 2, &SearchOptions::default()).unwrap());
        let mut bad = cert.clone();
        bad.blocks[0].value = BigRational::zero();
        assert!(matches!(verify_certificate(&bad, 0), Verdict::Invalid(InvalidReason::ZeroValue { .. })));
        bad.blocks[0].value = int(1);
        assert!(matches!(verify_certificate(&bad, 0), Verdict::Invalid(InvalidReason::ValueMismatch { .. })));
        let mut bad = cert.clone();
        bad.target = p(&[13, 3]);
        assert!(matches!(verify_certificate(&bad, 0), Verdict::Invalid(InvalidReason::WeightMismatch { .. })));
        let mut bad = cert.clone();
        let extra = bad.blocks[0].witness.summands[0].clone();
        bad.blocks[0].witness.summands.extend([extra.clone(), extra]);
        assert!(matches!(
            verify_certificate(&bad, 0),
            Verdict::Invalid(InvalidReason::MembershipViolation { .. })
        ));
        let mut bad = cert;
        for sm in &mut bad.blocks[0].witness.summands {
            sm.coef = BigRational::zero();
        }
        bad.blocks[0].value = int(7);
        assert!(matches!(verify_certificate(&bad, 0), Verdict::Invalid(InvalidReason::ZeroValue { .. })));
    }
}
