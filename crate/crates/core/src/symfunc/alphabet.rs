//! Plethystic alphabets and the Omega series.
//!
//! An [`AlphabetExpr`] is a formal sum of terms c(q,t) * z^a * eps^? * X^?,
//! where X is the main alphabet, eps is the sign letter, and z^a is a Laurent
//! monomial in auxiliary variables z_1..z_r. Plethysm acts on power sums
//! term by term:
//!
//!   p_k[ c * z^a * eps * X ] = c(q^k, t^k) * z^{k a} * (-1)^k * p_k[X],
//!
//! with p_k[X] replaced by 1 when the X letter is absent. This covers every
//! substitution the operator calculus needs: X + M/z, X(1/qt - 1),
//! X + M u_1 - Mtilde u_2, -eps X (the omega involution), and scalar
//! alphabets like -uM.
//!
//! Results live in [`ZSeriesSF`]: finitely many Laurent monomials in the
//! z-variables, each with a [`SymFunc`] coefficient.

use std::collections::BTreeMap;

use crate::qt::RatQT;

use super::{Basis, SymFunc};

/// One term of an alphabet expression.
#[derive(Clone, Debug)]
pub struct AlphabetTerm {
    /// q,t-prefactor, interpreted plethystically (q -> q^k, t -> t^k).
    pub coeff: RatQT,
    /// Exponents of z_1..z_r.
    pub zexp: Vec<i64>,
    /// Sign letter: contributes (-1)^k to p_k.
    pub eps: bool,
    /// Whether the term carries the main alphabet X.
    pub has_x: bool,
}

/// A formal alphabet: sum of [`AlphabetTerm`]s over r auxiliary variables.
#[derive(Clone, Debug)]
pub struct AlphabetExpr {
    arity: usize,
    terms: Vec<AlphabetTerm>,
}

impl AlphabetExpr {
    pub fn new(arity: usize) -> Self {
        AlphabetExpr {
            arity,
            terms: Vec::new(),
        }
    }

    /// The plain alphabet X (no auxiliary variables).
    pub fn x() -> Self {
        AlphabetExpr::new(0).with_x_term(RatQT::one(), vec![], false)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[AlphabetTerm] {
        &self.terms
    }

    /// Add a term carrying X: coeff * z^zexp * (eps?) * X.
    pub fn with_x_term(mut self, coeff: RatQT, zexp: Vec<i64>, eps: bool) -> Self {
        assert_eq!(zexp.len(), self.arity, "z-exponent arity mismatch");
        self.terms.push(AlphabetTerm {
            coeff,
            zexp,
            eps,
            has_x: true,
        });
        self
    }

    /// Add a scalar-alphabet term: coeff * z^zexp (no X letter).
    pub fn with_term(mut self, coeff: RatQT, zexp: Vec<i64>) -> Self {
        assert_eq!(zexp.len(), self.arity, "z-exponent arity mismatch");
        self.terms.push(AlphabetTerm {
            coeff,
            zexp,
            eps: false,
            has_x: false,
        });
        self
    }

    /// p_k of this alphabet, as a z-series.
    pub fn p_k(&self, k: u32) -> ZSeriesSF {
        let mut out = ZSeriesSF::zero(self.arity);
        for term in &self.terms {
            let mut c = term.coeff.raise(k);
            if term.eps && k % 2 == 1 {
                c = -&c;
            }
            let zexp: Vec<i64> = term.zexp.iter().map(|&a| a * k as i64).collect();
            let f = if term.has_x {
                SymFunc::p_k(k).scale(&c)
            } else {
                SymFunc::scalar(c)
            };
            out.add_assign_at(zexp, &f);
        }
        out
    }
}

/// Per-variable exponent bounds for truncated z-series.
#[derive(Clone, Debug)]
pub struct ZWindow {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl ZWindow {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        ZWindow { lo, hi }
    }

    pub fn uniform(arity: usize, lo: i64, hi: i64) -> Self {
        ZWindow {
            lo: vec![lo; arity],
            hi: vec![hi; arity],
        }
    }

    pub fn contains(&self, zexp: &[i64]) -> bool {
        zexp.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(&e, (&lo, &hi))| lo <= e && e <= hi)
    }
}

/// A finite Laurent series in z_1..z_r with symmetric-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeriesSF {
    arity: usize,
    terms: BTreeMap<Vec<i64>, SymFunc>,
}

impl ZSeriesSF {
    pub fn zero(arity: usize) -> Self {
        ZSeriesSF {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, f: SymFunc) -> Self {
        let mut s = Self::zero(arity);
        s.add_assign_at(vec![0; arity], &f);
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &SymFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of z^zexp (zero when absent).
    pub fn coeff(&self, zexp: &[i64]) -> SymFunc {
        self.terms
            .get(zexp)
            .cloned()
            .unwrap_or_else(|| SymFunc::zero(Basis::PowerSum))
    }

    /// Coefficient of z^0 (the z-free part).
    pub fn constant_coeff(&self) -> SymFunc {
        self.coeff(&vec![0; self.arity])
    }

    pub fn add_assign_at(&mut self, zexp: Vec<i64>, f: &SymFunc) {
        assert_eq!(zexp.len(), self.arity);
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&zexp) {
            Some(g) => {
                let sum = g.add(f);
                if sum.is_zero() {
                    self.terms.remove(&zexp);
                } else {
                    *g = sum;
                }
            }
            None => {
                self.terms.insert(zexp, f.clone());
            }
        }
    }

    pub fn add(&self, other: &ZSeriesSF) -> ZSeriesSF {
        assert_eq!(self.arity, other.arity);
        let mut r = self.clone();
        for (zexp, f) in &other.terms {
            r.add_assign_at(zexp.clone(), f);
        }
        r
    }

    pub fn scale(&self, c: &RatQT) -> ZSeriesSF {
        let mut r = ZSeriesSF::zero(self.arity);
        for (zexp, f) in &self.terms {
            r.add_assign_at(zexp.clone(), &f.scale(c));
        }
        r
    }

    pub fn mul(&self, other: &ZSeriesSF) -> ZSeriesSF {
        self.mul_clipped(other, None)
    }

    /// Product, dropping any monomial outside the window as it is formed.
    pub fn mul_window(&self, other: &ZSeriesSF, window: &ZWindow) -> ZSeriesSF {
        self.mul_clipped(other, Some(window))
    }

    fn mul_clipped(&self, other: &ZSeriesSF, window: Option<&ZWindow>) -> ZSeriesSF {
        assert_eq!(self.arity, other.arity);
        let mut r = ZSeriesSF::zero(self.arity);
        for (za, fa) in &self.terms {
            for (zb, fb) in &other.terms {
                let zexp: Vec<i64> = za.iter().zip(zb).map(|(a, b)| a + b).collect();
                if window.map_or(true, |w| w.contains(&zexp)) {
                    r.add_assign_at(zexp, &fa.mul(fb));
                }
            }
        }
        r
    }

    /// Keep only monomials whose i-th exponent equals `value` (used to pin a
    /// variable once no further factor can change it).
    pub fn retain_coord(&self, i: usize, value: i64) -> ZSeriesSF {
        let mut r = ZSeriesSF::zero(self.arity);
        for (zexp, f) in &self.terms {
            if zexp[i] == value {
                r.add_assign_at(zexp.clone(), f);
            }
        }
        r
    }

    /// Keep only monomials inside the window.
    pub fn clip(&self, window: &ZWindow) -> ZSeriesSF {
        let mut r = ZSeriesSF::zero(self.arity);
        for (zexp, f) in &self.terms {
            if window.contains(zexp) {
                r.add_assign_at(zexp.clone(), f);
            }
        }
        r
    }
}

/// f[E] for f expanded in power sums.
pub fn plethysm(f: &SymFunc, e: &AlphabetExpr) -> ZSeriesSF {
    let fp = f.to_p();
    let mut out = ZSeriesSF::zero(e.arity());
    for (mu, c) in fp.coeffs() {
        let mut term = ZSeriesSF::constant(e.arity(), SymFunc::scalar(c.clone()));
        for &part in mu.parts() {
            term = term.mul(&e.p_k(part));
        }
        out = out.add(&term);
    }
    out
}

/// Omega[E] = exp(sum_{k>=1} p_k[E]/k), truncated to the window.
///
/// Every term of E must have nonnegative z-exponents with positive total,
/// so that only finitely many k and exponential orders land in the window.
///
/// # Edge cases
/// Panics when a term of E has no positive z-degree (the series would not
/// truncate) or when the window extends below exponent zero.
pub fn omega_series(e: &AlphabetExpr, window: &ZWindow) -> ZSeriesSF {
    assert!(
        e.terms().iter().all(|t| {
            t.zexp.iter().all(|&a| a >= 0) && t.zexp.iter().sum::<i64>() > 0
        }),
        "omega series needs strictly positive z-degrees"
    );
    assert!(window.lo.iter().all(|&l| l >= 0));
    let max_total: i64 = window.hi.iter().sum();
    // log Omega, truncated: p_k[E] has z-degree >= k, so k <= max_total.
    let mut log = ZSeriesSF::zero(e.arity());
    for k in 1..=max_total.max(0) as u32 {
        let pk = e.p_k(k).clip(window);
        log = log.add(&pk.scale(&RatQT::from_ratio(1, k as i64)));
    }
    // exp by powers: log has positive total degree, so orders beyond
    // max_total vanish inside the window.
    let mut out = ZSeriesSF::constant(e.arity(), SymFunc::one());
    let mut power = ZSeriesSF::constant(e.arity(), SymFunc::one());
    let mut factorial = RatQT::one();
    for j in 1..=max_total.max(0) {
        power = power.mul_window(&log, window);
        if power.is_zero() {
            break;
        }
        factorial = &factorial * &RatQT::from_int(j);
        out = out.add(&power.scale(&factorial.inv()));
    }
    out
}

/// Omega[E] for an alphabet whose term exponents are all positive multiples
/// of one primitive direction v (e.g. v = e_i for Omega[-z_i X], or
/// v = e_i - e_j for the ratio kernels Omega[-M z_i/z_j]). The series is
/// supported on n*v for n >= 0, so clipping to the window bounds both the
/// power-sum index and the exponential order by the largest n with n*v in
/// the window.
pub fn omega_series_dir(e: &AlphabetExpr, window: &ZWindow) -> ZSeriesSF {
    let first = e.terms().first().expect("nonempty alphabet");
    let g = first
        .zexp
        .iter()
        .fold(0i64, |acc, &a| num_integer::gcd(acc, a.abs()));
    assert!(g > 0, "zero direction in omega series");
    let dir: Vec<i64> = first.zexp.iter().map(|&a| a / g).collect();
    for term in e.terms() {
        let ratio = term
            .zexp
            .iter()
            .zip(&dir)
            .find_map(|(&a, &d)| (d != 0).then(|| a / d));
        let m = ratio.expect("nonzero direction");
        assert!(
            m > 0 && term.zexp.iter().zip(&dir).all(|(&a, &d)| a == m * d),
            "alphabet terms must be positive multiples of one direction"
        );
    }
    let mut n_max = 0i64;
    loop {
        let next: Vec<i64> = dir.iter().map(|&d| d * (n_max + 1)).collect();
        if !window.contains(&next) {
            break;
        }
        n_max += 1;
    }
    let mut log = ZSeriesSF::zero(e.arity());
    for k in 1..=n_max.max(0) as u32 {
        let pk = e.p_k(k).clip(window);
        log = log.add(&pk.scale(&RatQT::from_ratio(1, k as i64)));
    }
    let mut out = ZSeriesSF::constant(e.arity(), SymFunc::one());
    let mut power = ZSeriesSF::constant(e.arity(), SymFunc::one());
    let mut factorial = RatQT::one();
    for j in 1..=n_max.max(0) {
        power = power.mul_window(&log, window);
        if power.is_zero() {
            break;
        }
        factorial = &factorial * &RatQT::from_int(j);
        out = out.add(&power.scale(&factorial.inv()));
    }
    out
}

/// Omega of a scalar multiple of the main alphabet, -u*M with
/// M = (1-t)(1-q), has the closed form (1-u)(1-qtu)/((1-tu)(1-qu)).
/// Exposed for the specialization checks; see the tests for the series
/// agreement.
pub fn omega_minus_u_m_closed() -> (Vec<RatQT>, Vec<RatQT>) {
    let one = RatQT::one();
    // Numerator (1-u)(1-qtu), denominator (1-tu)(1-qu) as u-polynomials.
    let num = vec![
        one.clone(),
        -&(&one + &RatQT::qt()),
        RatQT::qt(),
    ];
    let den = vec![
        one,
        -&(&RatQT::t() + &RatQT::q()),
        RatQT::qt(),
    ];
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::qt::MPolyQT;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p2_of_x_plus_m_over_z() {
        // p_2[X + M/z] = p_2 + (1-t^2)(1-q^2) z^{-2}.
        let e = AlphabetExpr::new(1)
            .with_x_term(RatQT::one(), vec![0], false)
            .with_term(RatQT::big_m(), vec![-1]);
        let r = SymFunc::p_k(2).plethysm(&e);
        assert_eq!(r.num_terms(), 2);
        assert_eq!(r.coeff(&[0]), SymFunc::p_k(2));
        assert_eq!(
            r.coeff(&[-2]),
            SymFunc::scalar(RatQT::big_m().raise(2))
        );
    }

    #[test]
    fn plethysm_minus_eps_x_is_omega() {
        // f[-eps X] = omega(f).
        let e = AlphabetExpr::new(0).with_x_term(RatQT::from_int(-1), vec![], true);
        for f in [
            SymFunc::h_k(3),
            SymFunc::e_k(4),
            SymFunc::s(pt(&[2, 1])),
            SymFunc::p(pt(&[3, 2, 2])),
        ] {
            assert_eq!(f.plethysm_closed(&e), f.omega());
        }
    }

    #[test]
    fn omega_series_generates_h_and_e() {
        let w = ZWindow::uniform(1, 0, 5);
        // Omega[zX] = sum_m h_m z^m.
        let zx = AlphabetExpr::new(1).with_x_term(RatQT::one(), vec![1], false);
        let s = omega_series(&zx, &w);
        for m in 0..=5u32 {
            assert_eq!(s.coeff(&[m as i64]), SymFunc::h_k(m), "h_{}", m);
        }
        // Omega[-eps zX] = sum_m e_m z^m.
        let mzx = AlphabetExpr::new(1).with_x_term(RatQT::from_int(-1), vec![1], true);
        let s = omega_series(&mzx, &w);
        for m in 0..=5u32 {
            assert_eq!(s.coeff(&[m as i64]), SymFunc::e_k(m), "e_{}", m);
        }
    }

    #[test]
    fn omega_of_minus_u_m_matches_closed_form() {
        // Series of Omega[-uM] against (1-u)(1-qtu)/((1-tu)(1-qu)):
        // multiply the truncated series by the denominator and compare with
        // the numerator through degree N.
        let n_max = 6usize;
        let w = ZWindow::uniform(1, 0, n_max as i64);
        let e = AlphabetExpr::new(1).with_term(-&RatQT::big_m(), vec![1]);
        let s = omega_series(&e, &w);
        let series: Vec<RatQT> = (0..=n_max)
            .map(|n| s.coeff(&[n as i64]).coeff(&Partition::empty()))
            .collect();
        let (num, den) = omega_minus_u_m_closed();
        for n in 0..=n_max {
            let mut lhs = RatQT::zero();
            for (i, d) in den.iter().enumerate() {
                if i <= n {
                    lhs = &lhs + &(d * &series[n - i]);
                }
            }
            let rhs = num.get(n).cloned().unwrap_or_else(RatQT::zero);
            assert_eq!(lhs, rhs, "u^{}", n);
        }
    }

    #[test]
    fn plethysm_is_multiplicative_and_additive() {
        let e = AlphabetExpr::new(1)
            .with_x_term(RatQT::t(), vec![0], false)
            .with_term(RatQT::q(), vec![2]);
        let f = SymFunc::h_k(2);
        let g = SymFunc::e_k(2).add(&SymFunc::p_k(1));
        assert_eq!(
            f.mul(&g).plethysm(&e),
            f.plethysm(&e).mul(&g.plethysm(&e))
        );
        assert_eq!(
            f.add(&g).plethysm(&e),
            f.plethysm(&e).add(&g.plethysm(&e))
        );
    }

    #[test]
    fn x_times_scalar_ratio_alphabet() {
        // h_2[X/(t-1)] = (p_1^2/2)/(t-1)^2 + (p_2/2)/(t^2-1).
        let tm1 = &RatQT::t() - &RatQT::one();
        let e = AlphabetExpr::new(0).with_x_term(tm1.inv(), vec![], false);
        let r = SymFunc::h_k(2).plethysm_closed(&e);
        let t = RatQT::t();
        let half = RatQT::from_ratio(1, 2);
        let c11 = &half * &(&(&t - &RatQT::one()) * &(&t - &RatQT::one())).inv();
        let t2m1 = &RatQT::from_poly(MPolyQT::monomial(0, 2, 1.into())) - &RatQT::one();
        let c2 = &half * &t2m1.inv();
        assert_eq!(r.coeff(&pt(&[1, 1])), c11);
        assert_eq!(r.coeff(&pt(&[2])), c2);
    }
}
