//! Inner and outer degree lifting.
//!
//! Lifted vectors are never built as tensors. They are tableau
//! combinations, evaluated through the identity
//! `⟨κ(f), q^{⊗d}⟩ = ⟨f, p^{⊗d}⟩` for `q = X_1^{n−m}·S_{m,n}(p) + r`
//! with `deg_{X_1} r < n − m`.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::budget::Budget;
use crate::contraction::contract_power;
use crate::error::{precondition, Error, Result};
use crate::partition::Partition;
use crate::symtensor::{Exponent, SymPoly};
use crate::tableau::{Tableau, TableauClass};

/// A formal combination `Σ c·v_T` of tableau vectors of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HwvCombo {
    d: u32,
    n: u64,
    terms: Vec<(BigRational, TableauClass)>,
}

impl HwvCombo {
    pub fn new(d: u32, n: u64, terms: Vec<(BigRational, TableauClass)>) -> Result<Self> {
        if let Some((_, first)) = terms.first() {
            let shape = first.tableau().shape();
            for (_, c) in &terms {
                let t = c.tableau();
                precondition!(
                    t.d() == d && t.n() == n && t.shape() == shape,
                    "all terms share shape {shape}, d = {d} and n = {n}"
                );
            }
        }
        Ok(Self { d, n, terms })
    }

    pub fn single(class: TableauClass) -> Self {
        let t = class.tableau();
        Self { d: t.d(), n: t.n(), terms: alloc::vec![(BigRational::from_integer(1.into()), class)] }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn terms(&self) -> &[(BigRational, TableauClass)] {
        &self.terms
    }

    /// The weight, or `None` for the empty combination.
    pub fn weight(&self) -> Option<&Partition> {
        self.terms.first().map(|(_, c)| c.tableau().shape())
    }

    /// `⟨f, p^{⊗d}⟩`
    pub fn evaluate(&self, p: &SymPoly, budget: &mut Budget) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (c, class) in &self.terms {
            acc += c * contract_power(class.tableau(), p, budget)?;
        }
        Ok(acc)
    }
}

fn map_terms(f: &HwvCombo, d: u32, n: u64, g: impl Fn(&Tableau) -> Result<Tableau>) -> Result<HwvCombo> {
    let terms = f
        .terms
        .iter()
        .map(|(c, class)| Ok((c.clone(), g(class.tableau())?.canonicalize()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HwvCombo { d, n, terms })
}

/// `κ^d_{n,n_new}`: lifts every term by adding first-row copies of each letter.
pub fn inner_lift(f: &HwvCombo, n_new: u64) -> Result<HwvCombo> {
    precondition!(n_new >= f.n, "nNew = {n_new} >= n = {}", f.n);
    map_terms(f, f.d, n_new, |t| t.inner_lift(n_new))
}

/// Multiplication by `(X_1^n)^{d_new − d}`: appends fresh letters to the first row.
pub fn outer_lift(f: &HwvCombo, d_new: u32) -> Result<HwvCombo> {
    precondition!(d_new >= f.d, "dNew = {d_new} >= d = {}", f.d);
    map_terms(f, d_new, f.n, |t| t.outer_lift(d_new))
}

/// `q = X_1^{n−m}·S_{m,n}(p) + r`.
pub fn lifted_point(p: &SymPoly, m: u64, n: u64, r: &SymPoly) -> Result<SymPoly> {
    precondition!(n >= m, "n = {n} >= m = {m}");
    if !r.is_zero() {
        if r.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, found: r.degree() });
        }
        let deg = r.deg_in_x1().unwrap_or(0);
        precondition!(deg < n - m, "deg_X1(r) = {deg} < n - m = {}", n - m);
    }
    let main = p.scaling_map(m, n, false)?.pad_multiply(n - m);
    if r.is_zero() {
        Ok(main)
    } else {
        main.add(r)
    }
}

/// Both sides of the lift identity: `(⟨κ(f), q^{⊗d}⟩, ⟨f, p^{⊗d}⟩)`.
pub fn lift_identity_sides(
    f: &HwvCombo,
    p: &SymPoly,
    n_new: u64,
    r: &SymPoly,
    budget: &mut Budget,
) -> Result<(BigRational, BigRational)> {
    let q = lifted_point(p, f.n, n_new, r)?;
    let lifted = inner_lift(f, n_new)?;
    Ok((lifted.evaluate(&q, budget)?, f.evaluate(p, budget)?))
}

/// Whether `⟨κ(f), q^{⊗d}⟩ = ⟨f, p^{⊗d}⟩` holds exactly.
pub fn check_lift_identity(f: &HwvCombo, p: &SymPoly, n_new: u64, r: &SymPoly) -> Result<bool> {
    let (lhs, rhs) = lift_identity_sides(f, p, n_new, r, &mut Budget::unlimited())?;
    Ok(lhs == rhs)
}

/// `⟨v_{T''}, q^{⊗d}⟩` where `T''` is `base` (content `k × s`) lifted to `d`
/// letters and inner degree `n`, and `q = X_1^{n−s}·S_{s,n}(p)`:
/// `⟨v_base, p^{⊗k}⟩ · ⟨X_1^s, p⟩^{d−k}`.
pub fn evaluate_lifted(base: &Tableau, d: u32, p: &SymPoly, budget: &mut Budget) -> Result<BigRational> {
    precondition!(d >= base.d(), "degree d = {d} >= k = {}", base.d());
    let inner = contract_power(base, p, budget)?;
    let lead = p.coefficient(&Exponent::power(1, base.n()));
    Ok(inner * num_traits::pow(lead, (d - base.d()) as usize))
}

/// Shape of the inner un-lift to inner degree `m` when every highest weight
/// vector of weight `λ ⊢ nd` comes from `Sym^d Sym^m`: needs `λ_2 ≤ m` and
/// `λ_2 + |λ̄| ≤ md`.
pub fn inner_unlift_shape(lambda: &Partition, d: u64, n: u64, m: u64) -> Result<Partition> {
    precondition!(lambda.size() == n * d, "|λ| = {} = nd = {}", lambda.size(), n * d);
    precondition!(m <= n, "m = {m} <= n = {n}");
    let l2 = lambda.part(2);
    precondition!(l2 <= m, "λ_2 = {l2} <= m = {m}");
    precondition!(
        l2 + lambda.body_size() <= m * d,
        "λ_2 + |λ̄| = {} <= md = {}",
        l2 + lambda.body_size(),
        m * d
    );
    lambda.pad_to_size(m * d)
}

/// Shape of the outer un-lift to `k` factors of inner degree `m`: needs
/// `μ_2 + |μ̄| ≤ k ≤ d`.
pub fn outer_unlift_shape(mu: &Partition, d: u64, m: u64, k: u64) -> Result<Partition> {
    precondition!(mu.size() == m * d, "|μ| = {} = md = {}", mu.size(), m * d);
    precondition!(k <= d, "k = {k} <= d = {d}");
    let need = mu.part(2) + mu.body_size();
    precondition!(need <= k, "μ_2 + |μ̄| = {need} <= k = {k}");
    mu.pad_to_size(m * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::tableau::row_tableau;

    fn q(n: i64) -> BigRational {
        rational(n)
    }

    fn sq() -> SymPoly {
        SymPoly::var_power(1, 2).add(&SymPoly::var_power(2, 2)).unwrap()
    }

    #[test]
    fn lift_examples() {
        let f = HwvCombo::single(row_tableau(2, 2).unwrap().canonicalize().unwrap());
        let g = inner_lift(&f, 3).unwrap();
        assert_eq!(g.weight().unwrap().parts(), &[4, 2]);
        assert_eq!(inner_lift(&f, 2).unwrap(), f);
        let h = outer_lift(&f, 3).unwrap();
        assert_eq!(h.weight().unwrap().parts(), &[4, 2]);
        assert_eq!(h.terms()[0].1.tableau().d(), 3);
    }

    #[test]
    fn lifted_point_examples() {
        let expect = SymPoly::var_power(1, 4)
            .add(&SymPoly::monomial(Exponent::new([(1, 2), (2, 2)])).scale(&q(6)))
            .unwrap();
        assert_eq!(lifted_point(&sq(), 2, 4, &SymPoly::zero(4)).unwrap(), expect);
        let r = SymPoly::var_power(2, 4);
        assert_eq!(lifted_point(&sq(), 2, 4, &r).unwrap(), expect.add(&r).unwrap());
        let bad = SymPoly::monomial(Exponent::new([(1, 2), (2, 2)]));
        assert!(matches!(lifted_point(&sq(), 2, 4, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn identity_examples() {
        let f = HwvCombo::single(row_tableau(2, 2).unwrap().canonicalize().unwrap());
        let mut b = Budget::unlimited();
        let (l, r) = lift_identity_sides(&f, &sq(), 4, &SymPoly::zero(4), &mut b).unwrap();
        assert_eq!((l, r), (q(2), q(2)));
        assert!(check_lift_identity(&f, &sq(), 4, &SymPoly::var_power(2, 4)).unwrap());
        assert!(check_lift_identity(&f, &sq(), 2, &SymPoly::zero(2)).unwrap());
    }

    #[test]
    fn outer_lift_evaluation() {
        // ⟨v_{T''}, p^{⊗d}⟩ = ⟨v_T, p^{⊗k}⟩ · ⟨X_1^m, p⟩^{d−k}
        let base = Tableau::from_rows(2, 2, alloc::vec![alloc::vec![1, 1], alloc::vec![2, 2]]).unwrap();
        let p = SymPoly::var_power(1, 2)
            .scale(&q(3))
            .add(&SymPoly::var_power(2, 2).scale(&q(-2)))
            .unwrap()
            .add(&SymPoly::monomial(Exponent::new([(1, 1), (2, 1)])).scale(&q(5)))
            .unwrap();
        let mut b = Budget::unlimited();
        let lifted = base.outer_lift(4).unwrap();
        let direct = contract_power(&lifted, &p, &mut b).unwrap();
        assert_eq!(direct, evaluate_lifted(&base, 4, &p, &mut b).unwrap());
    }

    #[test]
    fn unlift_shapes() {
        let lam = Partition::new(alloc::vec![14, 2]).unwrap();
        assert_eq!(inner_unlift_shape(&lam, 2, 8, 4).unwrap().parts(), &[6, 2]);
        assert!(inner_unlift_shape(&lam, 2, 8, 1).is_err());
        let mu = Partition::new(alloc::vec![11, 1]).unwrap();
        assert_eq!(outer_unlift_shape(&mu, 3, 4, 2).unwrap().parts(), &[7, 1]);
        assert!(outer_unlift_shape(&mu, 3, 4, 1).is_err());
    }
}
