//! Symmetric functions over Q(q,t): classical bases, conversions, plethysm,
//! Omega series, and both scalar products.
//!
//! Internally all arithmetic runs in the power-sum basis, where products are
//! concatenation of indexing partitions and both scalar products are
//! diagonal; conversion to m/e/h/s happens at the boundary.

mod alphabet;
mod chars;
mod convert;

pub use alphabet::{
    omega_minus_u_m_closed, omega_series, omega_series_dir, AlphabetExpr, AlphabetTerm,
    ZSeriesSF, ZWindow,
};
pub use chars::character;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::qt::RatQT;

/// Basis tags for [`SymFunc`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    PowerSum,
    Schur,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Homogeneous => 'h',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        Some(match c {
            'm' => Basis::Monomial,
            'e' => Basis::Elementary,
            'h' => Basis::Homogeneous,
            'p' => Basis::PowerSum,
            's' => Basis::Schur,
            _ => return None,
        })
    }
}

/// A symmetric function: basis tag plus partition-indexed coefficients.
/// Inhomogeneous combinations are allowed; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    coeffs: BTreeMap<Partition, RatQT>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(RatQT::one())
    }

    pub fn scalar(c: RatQT) -> Self {
        let mut f = Self::zero(Basis::PowerSum);
        f.set_coeff(Partition::empty(), c);
        f
    }

    pub fn basis_element(basis: Basis, mu: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.set_coeff(mu, RatQT::one());
        f
    }

    pub fn p(mu: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, mu)
    }

    pub fn p_k(k: u32) -> Self {
        Self::p(Partition::single(k))
    }

    pub fn e_k(k: u32) -> Self {
        Self::basis_element(Basis::Elementary, Partition::single(k)).to_p()
    }

    pub fn h_k(k: u32) -> Self {
        Self::basis_element(Basis::Homogeneous, Partition::single(k)).to_p()
    }

    pub fn s(mu: Partition) -> Self {
        Self::basis_element(Basis::Schur, mu).to_p()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatQT> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> RatQT {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn set_coeff(&mut self, mu: Partition, c: RatQT) {
        if c.is_zero() {
            self.coeffs.remove(&mu);
        } else {
            self.coeffs.insert(mu, c);
        }
    }

    pub fn add_coeff(&mut self, mu: Partition, c: &RatQT) {
        let v = self.coeff(&mu) + c;
        self.set_coeff(mu, v);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest degree present (0 for the zero function).
    pub fn max_degree(&self) -> u32 {
        self.coeffs.keys().map(|mu| mu.size()).max().unwrap_or(0)
    }

    /// Some(d) when all terms have degree d (zero counts as homogeneous of
    /// any degree and returns None only when empty-and-nonzero is impossible,
    /// so zero yields Some(0)).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|mu| mu.size());
        let Some(first) = it.next() else {
            return Some(0);
        };
        it.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_component(&self, d: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(mu, _)| mu.size() == d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.coeffs.keys().map(|mu| mu.size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Drop all terms of degree > cap; the flag reports whether anything was
    /// dropped.
    pub fn truncate(&self, cap: u32) -> (SymFunc, bool) {
        let kept: BTreeMap<Partition, RatQT> = self
            .coeffs
            .iter()
            .filter(|(mu, _)| mu.size() <= cap)
            .map(|(mu, c)| (mu.clone(), c.clone()))
            .collect();
        let truncated = kept.len() != self.coeffs.len();
        (
            SymFunc {
                basis: self.basis,
                coeffs: kept,
            },
            truncated,
        )
    }

    pub fn to_p(&self) -> SymFunc {
        convert::to_p(self)
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        convert::convert(self, target)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        if self.basis == other.basis {
            let mut r = self.clone();
            for (mu, c) in &other.coeffs {
                r.add_coeff(mu.clone(), c);
            }
            r
        } else {
            self.to_p().add(&other.to_p())
        }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, c)| (mu.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatQT) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, v)| (mu.clone(), c * v))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_p();
        let b = other.to_p();
        let mut r = SymFunc::zero(Basis::PowerSum);
        for (la, ca) in &a.coeffs {
            for (mu, cb) in &b.coeffs {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(mu.parts());
                r.add_coeff(Partition::from_unsorted(parts), &(ca * cb));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let mut r = SymFunc::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Multiply the coefficient of each p_lambda by prod_i scale(lambda_i).
    /// This is plethysm by a q,t-scaled alphabet X*c with c = scale.
    pub fn p_scale(&self, scale: impl Fn(u32) -> RatQT) -> SymFunc {
        let f = self.to_p();
        let mut r = SymFunc::zero(Basis::PowerSum);
        for (mu, c) in &f.coeffs {
            let mut v = c.clone();
            for &part in mu.parts() {
                v = &v * &scale(part);
            }
            r.add_coeff(mu.clone(), &v);
        }
        r
    }

    /// The omega involution: p_k -> (-1)^{k-1} p_k.
    pub fn omega(&self) -> SymFunc {
        self.p_scale(|k| {
            if k % 2 == 0 {
                RatQT::from_int(-1)
            } else {
                RatQT::one()
            }
        })
    }

    /// p_k^perp, the Hall-adjoint of multiplication by p_k:
    /// p_k^perp p_mu = k * m_k(mu) * p_{mu minus one part k}.
    pub fn p_perp(&self, k: u32) -> SymFunc {
        let f = self.to_p();
        let mut r = SymFunc::zero(Basis::PowerSum);
        for (mu, c) in &f.coeffs {
            let mult = mu.parts().iter().filter(|&&p| p == k).count();
            if mult == 0 {
                continue;
            }
            let mut parts = mu.parts().to_vec();
            let pos = parts.iter().position(|&p| p == k).unwrap();
            parts.remove(pos);
            let factor = RatQT::from_int((k as i64) * (mult as i64));
            r.add_coeff(Partition::from_unsorted(parts), &(c * &factor));
        }
        r
    }

    /// Hall scalar product: <p_lambda, p_mu> = z_mu [lambda = mu].
    pub fn hall_scalar(&self, other: &SymFunc) -> RatQT {
        let a = self.to_p();
        let b = other.to_p();
        let mut s = RatQT::zero();
        for (mu, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(mu) {
                let z = RatQT::from_poly(crate::qt::MPolyQT::constant(mu.z_mu()));
                s = &s + &(&(ca * cb) * &z);
            }
        }
        s
    }

    /// Star scalar product:
    /// <p_lambda, p_mu>_* = (-1)^{|mu|-l(mu)} prod_i (1-t^{mu_i})(1-q^{mu_i})
    ///                      * z_mu [lambda = mu].
    pub fn star_scalar(&self, other: &SymFunc) -> RatQT {
        let a = self.to_p();
        let b = other.to_p();
        let mut s = RatQT::zero();
        for (mu, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(mu) {
                s = &s + &(&(ca * cb) * &star_norm(mu));
            }
        }
        s
    }

    /// Plethysm f[E]; see [`AlphabetExpr`]. Result may carry z-variables.
    pub fn plethysm(&self, e: &AlphabetExpr) -> ZSeriesSF {
        alphabet::plethysm(self, e)
    }

    /// Plethysm with a z-free alphabet, returning a plain SymFunc.
    pub fn plethysm_closed(&self, e: &AlphabetExpr) -> SymFunc {
        assert_eq!(e.arity(), 0, "alphabet mentions z-variables");
        self.plethysm(e).constant_coeff()
    }

    /// Evaluate f at a pure q,t alphabet: p_k is replaced by alpha(k).
    pub fn eval_scalar_alphabet(&self, alpha: impl Fn(u32) -> RatQT) -> RatQT {
        let f = self.to_p();
        let mut s = RatQT::zero();
        for (mu, c) in &f.coeffs {
            let mut v = c.clone();
            for &part in mu.parts() {
                v = &v * &alpha(part);
            }
            s = &s + &v;
        }
        s
    }
}

/// <p_mu, p_mu>_* diagonal entry.
pub fn star_norm(mu: &Partition) -> RatQT {
    let mut v = RatQT::from_poly(crate::qt::MPolyQT::constant(mu.z_mu()));
    if (mu.size() as usize - mu.len()) % 2 == 1 {
        v = -v;
    }
    let one = RatQT::one();
    for &part in mu.parts() {
        let f = &(&one - &RatQT::t().pow(part as i64)) * &(&one - &RatQT::q().pow(part as i64));
        v = &v * &f;
    }
    v
}

/// The h_lambda[X;q,t] basis element
/// (qt/(1-qt))^{l(lambda)} prod_i h_{lambda_i}[X(1/qt - 1)], in the p-basis.
pub fn hqt_element(lambda: &Partition) -> SymFunc {
    let qt = RatQT::qt();
    let one = RatQT::one();
    let prefactor = (&qt / &(&one - &qt)).pow(lambda.len() as i64);
    let mut f = SymFunc::one();
    for &part in lambda.parts() {
        let factor = SymFunc::h_k(part).p_scale(|k| &RatQT::qt().pow(-(k as i64)) - &RatQT::one());
        f = f.mul(&factor);
    }
    f.scale(&prefactor)
}

/// Expand a homogeneous G of degree k over the h_lambda[X;q,t] basis.
pub fn hqt_basis_expand(g: &SymFunc) -> Result<BTreeMap<Partition, RatQT>> {
    let Some(k) = g.homogeneous_degree() else {
        return Err(Error::InvalidArgument(
            "hqt basis expansion needs a homogeneous input".into(),
        ));
    };
    let lambdas = partitions_of(k);
    let mus = lambdas.clone(); // row index: p-basis partitions of degree k
    let gp = g.to_p();
    let matrix: Vec<Vec<RatQT>> = mus
        .iter()
        .map(|mu| {
            lambdas
                .iter()
                .map(|la| hqt_element(la).coeff(mu))
                .collect()
        })
        .collect();
    let rhs: Vec<RatQT> = mus.iter().map(|mu| gp.coeff(mu)).collect();
    let sol = crate::linalg::solve(&matrix, &rhs).ok_or_else(|| {
        Error::InvalidArgument("hqt basis matrix is singular".into())
    })?;
    Ok(lambdas
        .into_iter()
        .zip(sol)
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Terms sorted by (degree, then descending-lex partition).
        let mut keys: Vec<&Partition> = self.coeffs.keys().collect();
        keys.sort_by_key(|mu| (mu.size(), std::cmp::Reverse(*mu)));
        for (i, mu) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}{}", self.coeffs[mu], self.basis.letter(), mu)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn star_scalar_diagonal_values() {
        // <p_1, p_1>_* = (1-t)(1-q) = M; <p_2, p_2>_* = -2(1-t^2)(1-q^2).
        let p1 = SymFunc::p_k(1);
        assert_eq!(p1.star_scalar(&p1), RatQT::big_m());
        let p2 = SymFunc::p_k(2);
        assert_eq!(
            p2.star_scalar(&p2),
            &RatQT::from_int(-2) * &RatQT::big_m().raise(2)
        );
        assert!(p1.star_scalar(&p2).is_zero());
    }

    #[test]
    fn p_perp_is_hall_adjoint() {
        // <p_k^perp f, g> = <f, p_k g> for assorted f, g.
        for k in 1..=3u32 {
            for f in [SymFunc::h_k(4), SymFunc::s(pt(&[2, 2])), SymFunc::p(pt(&[3, 1]))] {
                for g in [SymFunc::e_k(4 - k), SymFunc::h_k(4 - k)] {
                    let lhs = f.p_perp(k).hall_scalar(&g);
                    let rhs = f.hall_scalar(&SymFunc::p_k(k).mul(&g));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn omega_swaps_e_and_h() {
        for n in 0..=5u32 {
            assert_eq!(SymFunc::h_k(n).omega(), SymFunc::e_k(n));
            assert_eq!(SymFunc::e_k(n).omega(), SymFunc::h_k(n));
        }
        // omega s_lambda = s_{lambda'}.
        assert_eq!(SymFunc::s(pt(&[3, 1])).omega(), SymFunc::s(pt(&[2, 1, 1])));
    }

    #[test]
    fn hqt_degree_one_is_p1() {
        // (qt/(1-qt)) h_1[X(1/qt - 1)] = p_1.
        assert_eq!(hqt_element(&pt(&[1])), SymFunc::p_k(1));
    }

    #[test]
    fn hqt_expansion_round_trip() {
        let g = SymFunc::s(pt(&[2, 1]))
            .scale(&RatQT::q())
            .add(&SymFunc::p(pt(&[3])).scale(&RatQT::big_m()));
        let coeffs = hqt_basis_expand(&g).unwrap();
        let mut back = SymFunc::zero(Basis::PowerSum);
        for (la, c) in &coeffs {
            back = back.add(&hqt_element(la).scale(c));
        }
        assert_eq!(back, g.to_p());
        // Inhomogeneous input is rejected.
        assert!(hqt_basis_expand(&SymFunc::p_k(1).add(&SymFunc::p_k(2))).is_err());
    }
}

/// z_mu as a RatQT constant.
pub fn z_mu_ratqt(mu: &Partition) -> RatQT {
    RatQT::from_poly(crate::qt::MPolyQT::constant(mu.z_mu()))
}

/// Convenience: BigInt -> RatQT constant.
pub fn int_ratqt(n: BigInt) -> RatQT {
    RatQT::from_poly(crate::qt::MPolyQT::constant(n))
}
