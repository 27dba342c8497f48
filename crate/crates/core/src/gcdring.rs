//! Generic exact polynomial gcd machinery.
//!
//! Univariate polynomials are dense coefficient vectors over any ring that
//! supports gcd and exact division. Stacking `UniPoly` levels gives
//! multivariate gcds via the primitive polynomial remainder sequence:
//! Z[t] = UniPoly<BigInt>, Z[t][q] = UniPoly<UniPoly<BigInt>>, and the
//! z-variable rings used by rational functions are built the same way.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Commutative ring with gcd and exact division, enough for primitive-PRS
/// polynomial gcds one level up.
pub trait GcdRing: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_gcd(&self, other: &Self) -> Self;
    /// Exact division; `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// The unit u such that `self / u` is the canonical associate
    /// (e.g. sign for integers). Must divide exactly.
    fn canonical_unit(&self) -> Self;
}

impl GcdRing for BigInt {
    fn ring_zero() -> Self {
        BigInt::zero()
    }
    fn ring_one() -> Self {
        BigInt::from(1)
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_gcd(&self, other: &Self) -> Self {
        num_integer::Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.ring_is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        if r.ring_is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn canonical_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        }
    }
}

/// Dense univariate polynomial: `coeffs[i]` multiplies x^i; no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<C: GcdRing> {
    pub coeffs: Vec<C>,
}

impl<C: GcdRing> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.ring_is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> &C {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn mul_coeff(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.ring_mul(c)).collect())
    }

    fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![C::ring_zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Gcd of all coefficients (the content).
    pub fn content(&self) -> C {
        let mut g = C::ring_zero();
        for c in &self.coeffs {
            g = g.ring_gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let g = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|c| c.div_exact(&g).expect("content divides coefficients"))
                .collect(),
        )
    }

    /// Pseudo-remainder of self by other (deg other <= deg self assumed ok;
    /// other nonzero).
    fn pseudo_rem(&self, other: &Self) -> Self {
        let db = other.degree().expect("pseudo_rem by zero");
        let lb = other.leading().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().clone();
            r = r.mul_coeff(&lb).ring_sub(&other.mul_coeff(&lr).shift(dr - db));
        }
        r
    }
}

impl<C: GcdRing> GcdRing for UniPoly<C> {
    fn ring_zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn ring_one() -> Self {
        Self::constant(C::ring_one())
    }
    fn ring_is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn ring_add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(C::ring_zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(C::ring_zero);
            v.push(a.ring_add(&b));
        }
        Self::new(v)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.ring_add(&other.ring_neg())
    }
    fn ring_mul(&self, other: &Self) -> Self {
        if self.ring_is_zero() || other.ring_is_zero() {
            return Self::ring_zero();
        }
        let mut v = vec![C::ring_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Self::new(v)
    }
    fn ring_neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.ring_neg()).collect(),
        }
    }

    /// Primitive PRS gcd.
    fn ring_gcd(&self, other: &Self) -> Self {
        if self.ring_is_zero() {
            return other.div_exact(&other.canonical_unit()).unwrap_or_else(|| other.clone());
        }
        if other.ring_is_zero() {
            return self.div_exact(&self.canonical_unit()).unwrap_or_else(|| self.clone());
        }
        let cont = self.content().ring_gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.ring_is_zero() {
                let g = Self::constant(cont).ring_mul(&b.primitive_part());
                return g.div_exact(&g.canonical_unit()).unwrap_or(g);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.ring_is_zero() {
            return None;
        }
        if self.ring_is_zero() {
            return Some(Self::ring_zero());
        }
        let db = other.degree().unwrap();
        let mut r = self.clone();
        let mut q = vec![C::ring_zero(); self.coeffs.len()];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.leading().div_exact(other.leading())?;
            q[dr - db] = c.clone();
            r = r.ring_sub(&other.mul_coeff(&c).shift(dr - db));
        }
        Some(Self::new(q))
    }

    fn canonical_unit(&self) -> Self {
        if self.ring_is_zero() {
            Self::ring_one()
        } else {
            Self::constant(self.leading().canonical_unit())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt(v: &[i64]) -> UniPoly<BigInt> {
        UniPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn integer_gcd_ring() {
        let a = BigInt::from(-12);
        let b = BigInt::from(18);
        assert_eq!(GcdRing::ring_gcd(&a, &b), BigInt::from(6));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::from(3)), Some(BigInt::from(-4)));
    }

    #[test]
    fn unipoly_gcd_common_factor() {
        // (t-1)(t+2) and (t-1)(t-3) share t-1.
        let f = zt(&[-1, 1]).ring_mul(&zt(&[2, 1]));
        let g = zt(&[-1, 1]).ring_mul(&zt(&[-3, 1]));
        assert_eq!(f.ring_gcd(&g), zt(&[-1, 1]));
    }

    #[test]
    fn unipoly_gcd_coprime_is_unit() {
        let f = zt(&[1, 1]);
        let g = zt(&[2, 1]);
        assert_eq!(f.ring_gcd(&g), zt(&[1]));
    }

    #[test]
    fn unipoly_exact_division() {
        let f = zt(&[-1, 0, 1]); // t^2 - 1
        assert_eq!(f.div_exact(&zt(&[-1, 1])), Some(zt(&[1, 1])));
        assert_eq!(f.div_exact(&zt(&[2, 1])), None);
    }

    #[test]
    fn bivariate_gcd_through_stacking() {
        // In Z[t][q]: (q - t)*(q + 1) vs (q - t)*(q + t) have gcd q - t.
        type B = UniPoly<UniPoly<BigInt>>;
        let q_minus_t = B::new(vec![zt(&[0, -1]), zt(&[1])]);
        let q_plus_1 = B::new(vec![zt(&[1]), zt(&[1])]);
        let q_plus_t = B::new(vec![zt(&[0, 1]), zt(&[1])]);
        let f = q_minus_t.ring_mul(&q_plus_1);
        let g = q_minus_t.ring_mul(&q_plus_t);
        assert_eq!(f.ring_gcd(&g), q_minus_t);
    }
}
