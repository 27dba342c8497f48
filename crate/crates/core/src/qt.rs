//! Exact arithmetic in Z[q,t] and its fraction field Q(q,t).
//!
//! - [`MPolyQT`]: sparse polynomial in q,t with arbitrary-precision integer
//!   coefficients.
//! - [`RatQT`]: quotient of two such polynomials kept in canonical reduced
//!   form (gcd removed, denominator's lexicographically leading term positive),
//!   so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gcdring::{GcdRing, UniPoly};

/// Polynomial in q,t over Z; key = (q-exponent, t-exponent), no zero values.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MPolyQT {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl MPolyQT {
    pub fn zero() -> Self {
        MPolyQT::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        MPolyQT { terms }
    }

    pub fn monomial(qe: u32, te: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, te), c);
        }
        MPolyQT { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, key: (u32, u32), val: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if !val.is_zero() {
                    e.insert(val);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (&k, v) in &other.terms {
            r.insert_add(k, v.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (&k, v) in &other.terms {
            r.insert_add(k, -v.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MPolyQT {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = MPolyQT::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                r.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = MPolyQT::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Substitute q -> q^k, t -> t^k.
    pub fn raise(&self, k: u32) -> Self {
        MPolyQT {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a * k, b * k), c.clone()))
                .collect(),
        }
    }

    /// Swap the roles of q and t.
    pub fn swap_qt(&self) -> Self {
        MPolyQT {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for _ in 0..a {
                term *= q;
            }
            for _ in 0..b {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// Leading term in pure lexicographic order with q compared before t.
    fn lex_leading(&self) -> Option<(&(u32, u32), &BigInt)> {
        self.terms.iter().max_by_key(|(&k, _)| k)
    }

    fn to_rec(&self) -> UniPoly<UniPoly<BigInt>> {
        let qdeg = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Vec<BigInt>> = vec![Vec::new(); qdeg + 1];
        for (&(a, b), c) in &self.terms {
            let v = &mut coeffs[a as usize];
            if v.len() <= b as usize {
                v.resize(b as usize + 1, BigInt::zero());
            }
            v[b as usize] = c.clone();
        }
        UniPoly::new(coeffs.into_iter().map(UniPoly::new).collect())
    }

    fn from_rec(p: &UniPoly<UniPoly<BigInt>>) -> Self {
        let mut r = MPolyQT::zero();
        for (a, tp) in p.coeffs.iter().enumerate() {
            for (b, c) in tp.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    r.insert_add((a as u32, b as u32), c.clone());
                }
            }
        }
        r
    }

    fn int_content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_int(&self, d: &BigInt) -> Self {
        MPolyQT {
            terms: self.terms.iter().map(|(&k, c)| (k, c / d)).collect(),
        }
    }

    fn min_exponents(&self) -> (u32, u32) {
        let qa = self.terms.keys().map(|&(a, _)| a).min().unwrap_or(0);
        let tb = self.terms.keys().map(|&(_, b)| b).min().unwrap_or(0);
        (qa, tb)
    }

    fn shift_down(&self, qa: u32, tb: u32) -> Self {
        MPolyQT {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a - qa, b - tb), c.clone()))
                .collect(),
        }
    }

    fn max_norm(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Evaluate t = xi, producing a univariate polynomial in q
    /// (coefficient vector indexed by q-exponent).
    fn eval_t_at(&self, xi: &BigInt) -> Vec<BigInt> {
        let qdeg = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0) as usize;
        let tdeg = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0) as usize;
        let mut pows = Vec::with_capacity(tdeg + 1);
        pows.push(BigInt::one());
        for i in 1..=tdeg {
            let next = &pows[i - 1] * xi;
            pows.push(next);
        }
        let mut out = vec![BigInt::zero(); qdeg + 1];
        for (&(a, b), c) in &self.terms {
            out[a as usize] += c * &pows[b as usize];
        }
        out
    }

    /// Rebuild a bivariate polynomial from a q-polynomial of t(=xi)-adic
    /// values, via balanced base-xi digits.
    fn from_t_digits(gamma: &[BigInt], xi: &BigInt) -> Self {
        let mut r = MPolyQT::zero();
        for (a, e0) in gamma.iter().enumerate() {
            let mut e = e0.clone();
            let mut b = 0u32;
            while !e.is_zero() {
                let mut d = balanced_mod(&e, xi);
                e = (&e - &d) / xi;
                if !d.is_zero() {
                    r.insert_add((a as u32, b), std::mem::take(&mut d));
                }
                b += 1;
            }
        }
        r
    }

    /// Flip the overall sign if the lex-leading coefficient is negative.
    fn sign_normalized(&self) -> Self {
        match self.lex_leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Heuristic gcd of two primitive polynomials: evaluate t at a large
    /// integer, take the gcd of the resulting q-polynomials, reconstruct by
    /// balanced digits, and verify by exact division. None when the attempts
    /// fail (caller falls back to the primitive-remainder-sequence gcd).
    fn gcd_heuristic(&self, other: &Self) -> Option<Self> {
        let two = BigInt::from(2);
        let mut xi = &two * self.max_norm().min(other.max_norm()) + BigInt::from(29);
        for _ in 0..3 {
            let f = self.eval_t_at(&xi);
            let g = other.eval_t_at(&xi);
            let gamma = uni_gcd(&f, &g);
            let mut h = Self::from_t_digits(&gamma, &xi);
            let content = h.int_content();
            if !content.is_one() {
                h = h.div_int(&content);
            }
            h = h.sign_normalized();
            if h.is_one() {
                return Some(h);
            }
            if self.div_exact(&h).is_some() && other.div_exact(&h).is_some() {
                return Some(h);
            }
            xi = &xi * &xi;
        }
        None
    }

    pub fn gcd(&self, other: &Self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return other.sign_normalized();
        }
        if other.is_zero() {
            return self.sign_normalized();
        }
        // Split off the monomial and integer contents.
        let (qa1, tb1) = self.min_exponents();
        let (qa2, tb2) = other.min_exponents();
        let (qa, tb) = (qa1.min(qa2), tb1.min(tb2));
        let f = self.shift_down(qa1, tb1);
        let g = other.shift_down(qa2, tb2);
        let cf = f.int_content();
        let cg = g.int_content();
        let c = cf.gcd(&cg);
        let f = f.div_int(&cf);
        let g = g.div_int(&cg);
        let mono = MPolyQT::monomial(qa, tb, c);
        if f.num_terms() == 1 || g.num_terms() == 1 {
            // Primitive monomial factors beyond the shared shift are trivial.
            return mono;
        }
        if f == g || f == g.neg() {
            return mono.mul(&f.sign_normalized());
        }
        let prim = f
            .gcd_heuristic(&g)
            .unwrap_or_else(|| Self::from_rec(&f.to_rec().ring_gcd(&g.to_rec())));
        mono.mul(&prim.sign_normalized())
    }

    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        self.to_rec().div_exact(&other.to_rec()).map(|p| Self::from_rec(&p))
    }
}

/// Representative of e mod xi in (-xi/2, xi/2].
fn balanced_mod(e: &BigInt, xi: &BigInt) -> BigInt {
    use num_integer::Integer;
    let mut d = e.mod_floor(xi);
    if &d * 2 > *xi {
        d -= xi;
    }
    d
}

fn uni_content(p: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uni_eval(p: &[BigInt], xi: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * xi + c;
    }
    acc
}

fn uni_from_digits(gamma: &BigInt, xi: &BigInt) -> Vec<BigInt> {
    let mut e = gamma.clone();
    let mut out = Vec::new();
    while !e.is_zero() {
        let d = balanced_mod(&e, xi);
        e = (&e - &d) / xi;
        out.push(d);
    }
    out
}

/// Exact gcd in Z[q] of coefficient vectors (including integer content),
/// heuristic first, primitive-remainder-sequence fallback.
fn uni_gcd(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    use num_integer::Integer;
    let fz = f.iter().all(|c| c.is_zero());
    let gz = g.iter().all(|c| c.is_zero());
    if fz {
        return g.to_vec();
    }
    if gz {
        return f.to_vec();
    }
    let cf = uni_content(f);
    let cg = uni_content(g);
    let c = cf.gcd(&cg);
    let f1: Vec<BigInt> = f.iter().map(|x| x / &cf).collect();
    let g1: Vec<BigInt> = g.iter().map(|x| x / &cg).collect();
    let norm = |p: &[BigInt]| p.iter().map(|x| x.abs()).max().unwrap();
    let mut xi = BigInt::from(2) * norm(&f1).min(norm(&g1)) + BigInt::from(29);
    let mut prim: Option<Vec<BigInt>> = None;
    for _ in 0..3 {
        let gamma = uni_eval(&f1, &xi).gcd(&uni_eval(&g1, &xi));
        let mut h = uni_from_digits(&gamma, &xi);
        let hc = uni_content(&h);
        if !hc.is_one() && !hc.is_zero() {
            for x in &mut h {
                *x = &*x / &hc;
            }
        }
        if h.len() == 1 {
            prim = Some(vec![BigInt::one()]);
            break;
        }
        let hp = UniPoly::new(h.clone());
        if UniPoly::new(f1.clone()).div_exact(&hp).is_some()
            && UniPoly::new(g1.clone()).div_exact(&hp).is_some()
        {
            prim = Some(h);
            break;
        }
        xi = &xi * &xi;
    }
    let mut h = prim.unwrap_or_else(|| {
        UniPoly::new(f1.clone()).ring_gcd(&UniPoly::new(g1.clone())).coeffs
    });
    if h.last().map_or(false, |x| x.is_negative()) {
        for x in &mut h {
            *x = -&*x;
        }
    }
    for x in &mut h {
        *x = &*x * &c;
    }
    h
}

impl fmt::Display for MPolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded order, then higher q-power first within a degree.
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        let mut first = true;
        for (a, b) in keys {
            let c = &self.terms[&(a, b)];
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Rational function in q,t in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatQT {
    num: MPolyQT,
    den: MPolyQT,
}

impl RatQT {
    pub fn new(num: MPolyQT, den: MPolyQT) -> Self {
        assert!(!den.is_zero(), "RatQT with zero denominator");
        let mut r = RatQT { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPolyQT::one();
            return;
        }
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                self.den = self.den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // Sign convention: the denominator's lex-leading coefficient is positive.
        if let Some((_, c)) = self.den.lex_leading() {
            if c.is_negative() {
                self.num = self.num.neg();
                self.den = self.den.neg();
            }
        }
    }

    pub fn zero() -> Self {
        RatQT {
            num: MPolyQT::zero(),
            den: MPolyQT::one(),
        }
    }

    pub fn one() -> Self {
        RatQT {
            num: MPolyQT::one(),
            den: MPolyQT::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatQT {
            num: MPolyQT::constant(BigInt::from(n)),
            den: MPolyQT::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(
            MPolyQT::constant(BigInt::from(n)),
            MPolyQT::constant(BigInt::from(d)),
        )
    }

    pub fn from_poly(p: MPolyQT) -> Self {
        RatQT {
            num: p,
            den: MPolyQT::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(MPolyQT::q())
    }

    pub fn t() -> Self {
        Self::from_poly(MPolyQT::t())
    }

    pub fn qt() -> Self {
        Self::from_poly(MPolyQT::monomial(1, 1, BigInt::one()))
    }

    /// M = (1-t)(1-q).
    pub fn big_m() -> Self {
        let one = MPolyQT::one();
        Self::from_poly(one.sub(&MPolyQT::t()).mul(&one.sub(&MPolyQT::q())))
    }

    /// M~ = (1-1/t)(1-1/q) = M/(qt).
    pub fn big_m_tilde() -> Self {
        &Self::big_m() / &Self::qt()
    }

    pub fn numerator(&self) -> &MPolyQT {
        &self.num
    }

    pub fn denominator(&self) -> &MPolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero RatQT");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..k.unsigned_abs() {
            r = &r * &base;
        }
        r
    }

    /// Substitute q -> q^k, t -> t^k.
    pub fn raise(&self, k: u32) -> Self {
        Self::new(self.num.raise(k), self.den.raise(k))
    }

    pub fn swap_qt(&self) -> Self {
        Self::new(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Substitute q <-> 1/q and t <-> 1/t simultaneously (used for
    /// eigenvalues like D_mu(1/q,1/t)).
    pub fn invert_qt(&self) -> Self {
        let flip = |p: &MPolyQT| -> (MPolyQT, u32, u32) {
            // p(1/q,1/t) = sum c q^-a t^-b; clear by q^A t^B.
            let qa = p.terms().map(|(&(a, _), _)| a).max().unwrap_or(0);
            let tb = p.terms().map(|(&(_, b), _)| b).max().unwrap_or(0);
            let mut r = MPolyQT::zero();
            for (&(a, b), c) in p.terms() {
                r.insert_add((qa - a, tb - b), c.clone());
            }
            (r, qa, tb)
        };
        let (n, na, nb) = flip(&self.num);
        let (d, da, db) = flip(&self.den);
        // result = n/d * q^(da-na) t^(db-nb)
        let mut num = n;
        let mut den = d;
        if da >= na {
            num = num.mul(&MPolyQT::monomial(da - na, 0, BigInt::one()));
        } else {
            den = den.mul(&MPolyQT::monomial(na - da, 0, BigInt::one()));
        }
        if db >= nb {
            num = num.mul(&MPolyQT::monomial(0, db - nb, BigInt::one()));
        } else {
            den = den.mul(&MPolyQT::monomial(0, nb - db, BigInt::one()));
        }
        Self::new(num, den)
    }

    /// Substitute t -> 1/q, returning a rational function in q alone.
    pub fn subst_t_qinv(&self) -> Self {
        let laurent = |p: &MPolyQT| -> (BTreeMap<i64, BigInt>, i64) {
            let mut m: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (&(a, b), c) in p.terms() {
                let e = a as i64 - b as i64;
                let v = m.entry(e).or_insert_with(BigInt::zero);
                *v += c.clone();
            }
            m.retain(|_, v| !v.is_zero());
            let min = m.keys().next().cloned().unwrap_or(0);
            (m, min)
        };
        let (n, nmin) = laurent(&self.num);
        let (d, dmin) = laurent(&self.den);
        let shift = 0i64.min(nmin).min(dmin);
        let build = |m: &BTreeMap<i64, BigInt>| -> MPolyQT {
            let mut p = MPolyQT::zero();
            for (&e, c) in m {
                p.insert_add(((e - shift) as u32, 0), c.clone());
            }
            p
        };
        Self::new(build(&n), build(&d))
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q, t) / d)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! ratqt_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&RatQT> for &RatQT {
            type Output = RatQT;
            fn $method(self, rhs: &RatQT) -> RatQT {
                let f: fn(&RatQT, &RatQT) -> RatQT = $body;
                f(self, rhs)
            }
        }
        impl $trait<RatQT> for RatQT {
            type Output = RatQT;
            fn $method(self, rhs: RatQT) -> RatQT {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RatQT> for RatQT {
            type Output = RatQT;
            fn $method(self, rhs: &RatQT) -> RatQT {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<RatQT> for &RatQT {
            type Output = RatQT;
            fn $method(self, rhs: RatQT) -> RatQT {
                $trait::$method(self, &rhs)
            }
        }
    };
}

ratqt_binop!(Add, add, |a, b| {
    RatQT::new(
        a.num.mul(&b.den).add(&b.num.mul(&a.den)),
        a.den.mul(&b.den),
    )
});
ratqt_binop!(Sub, sub, |a, b| {
    RatQT::new(
        a.num.mul(&b.den).sub(&b.num.mul(&a.den)),
        a.den.mul(&b.den),
    )
});
ratqt_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return RatQT::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatQT::from_poly(a.num.mul(&b.num));
    }
    RatQT::new(a.num.mul(&b.num), a.den.mul(&b.den))
});
ratqt_binop!(Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero RatQT");
    RatQT::new(a.num.mul(&b.den), a.den.mul(&b.num))
});

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        -&self
    }
}
