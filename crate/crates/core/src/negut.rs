//! Negut constant-term operators and the symmetrization calculus around them:
//!
//! - the staircase exponents e_i = floor(i n/m) - floor((i-1) n/m) and the
//!   rational kernel Xi_{m,n} in its two equivalent forms;
//! - [`negut_apply`], the windowed constant-term action of N_{u,v} on
//!   symmetric functions, with an internal window-stabilization assertion;
//! - the vanishing criterion for operator words: a bi-homogeneous word in the
//!   D_k acts by zero iff the symmetrization of its z-shadow against the
//!   Omega ratio kernels vanishes, decided exactly by a signed normal form;
//! - [`negut_equivalence_check`], the denominator-cleared symmetrization
//!   identity equivalent to N_{m,n} = Q_{m,n}, and
//!   [`negut_t_inverse_q_check`], its t = 1/q specialization;
//! - the shuffle product and the commutator recursion it satisfies;
//! - [`conjecture_experiments`], reported (never asserted) closed-form
//!   comparisons for the diagonal operators N_{k,k}.

use crate::error::{Error, Result};
use crate::macdonald::Engine;
use crate::ops::{operators_agree, Operator};
use crate::partitions::partitions_of;
use crate::qmn::{pi_shadow, q_general, split, DWord};
use crate::qt::RatQT;
use crate::symfunc::{omega_series_dir, AlphabetExpr, Basis, SymFunc, ZWindow};
use crate::zlaurent::{
    omega_factor, perm_sign, OrbitMode, ZLaurent, ZRat, MAX_ORBIT_VARS,
};
use itertools::Itertools;
use std::sync::Arc;

/// The staircase exponents of the (m, n) lattice diagonal:
/// e_i = floor(i n/m) - floor((i-1) n/m) for i = 1..m.
///
/// Their sum telescopes to n, and each e_i is at most 1 when n < m.
///
/// # Returns
/// The vector (e_1, ..., e_m).
///
/// # Errors
/// [`Error::InvalidArgument`] when m <= 0 or n < 0.
pub fn negut_exponents(m: i64, n: i64) -> Result<Vec<i64>> {
    if m <= 0 {
        return Err(Error::InvalidArgument(format!(
            "staircase exponents need m >= 1, got m = {}",
            m
        )));
    }
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "staircase exponents need n >= 0, got n = {}",
            n
        )));
    }
    Ok((1..=m).map(|i| i * n / m - (i - 1) * n / m).collect())
}

/// The rational kernel of the Negut operator N_{m,n}:
/// Xi_{m,n} = prod_i z_i^{-e_i} * prod_{i=1}^{m-1} 1/(1 - qt z_i/z_{i+1}),
/// together with the staircase exponents it is built from.
#[derive(Clone, Debug)]
pub struct NegutKernel {
    /// Number of auxiliary variables.
    pub m: usize,
    /// The staircase exponents (e_1, ..., e_m).
    pub exponents: Vec<i64>,
    /// The kernel as an exact rational function of z_1..z_m.
    pub xi: ZRat,
}

impl NegutKernel {
    /// Build the kernel for the pair (m, n) in product form.
    ///
    /// # Errors
    /// [`Error::InvalidArgument`] when m = 0.
    pub fn new(m: u32, n: u32) -> Result<NegutKernel> {
        let exponents = negut_exponents(m as i64, n as i64)?;
        let m = m as usize;
        let neg: Vec<i64> = exponents.iter().map(|&e| -e).collect();
        let mut xi = ZRat::from_laurent(ZLaurent::monomial(m, neg, RatQT::one()));
        for i in 0..m.saturating_sub(1) {
            // 1/(1 - qt z_i/z_{i+1}) = z_{i+1}/(z_{i+1} - qt z_i).
            let zi1 = ZLaurent::var(m, i + 1);
            let den = zi1.sub(&ZLaurent::var(m, i).scale(&RatQT::qt()));
            xi = xi.mul(&ZRat::new(zi1, den));
        }
        Ok(NegutKernel { m, exponents, xi })
    }

    /// The kernel in its second displayed form,
    /// z_m^{-n} prod_{i=1}^{m-1} (z_i/z_{i+1})^{-floor(i n/m)}
    /// / (1 - qt z_i/z_{i+1}); equal to the product form as a rational
    /// function.
    ///
    /// # Errors
    /// [`Error::InvalidArgument`] when m = 0.
    pub fn alternate_xi(m: u32, n: u32) -> Result<ZRat> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "the Negut kernel needs m >= 1".into(),
            ));
        }
        let mu = m as usize;
        let mut zexp = vec![0i64; mu];
        zexp[mu - 1] = -(n as i64);
        let mut xi = ZRat::from_laurent(ZLaurent::monomial(mu, zexp, RatQT::one()));
        for i in 1..mu {
            let fl = (i as i64) * (n as i64) / (m as i64);
            let mut zexp = vec![0i64; mu];
            zexp[i - 1] = -fl;
            zexp[i] = fl;
            xi = xi.mul(&ZRat::from_laurent(ZLaurent::monomial(
                mu,
                zexp,
                RatQT::one(),
            )));
            let zi = ZLaurent::var(mu, i);
            let den = zi.sub(&ZLaurent::var(mu, i - 1).scale(&RatQT::qt()));
            xi = xi.mul(&ZRat::new(zi, den));
        }
        Ok(xi)
    }
}

/// Unnormalized orbit sum of a rational function over the symmetric group of
/// the variable block [lo, hi]: sum of sigma(f) (Sym) or the sign-weighted
/// sum (Asym). No 1/|G| factor; vanishing is unaffected.
///
/// Each addition cross-multiplies denominators, so this is only practical
/// for very small blocks; the checks in this module clear denominators into
/// Laurent polynomials first and orbit-sum those instead.
///
/// # Errors
/// [`Error::OrbitTooLarge`] when the block exceeds [`MAX_ORBIT_VARS`].
pub fn sym_group_rat(f: &ZRat, lo: usize, hi: usize, mode: OrbitMode) -> Result<ZRat> {
    assert!(lo <= hi && hi < f.arity());
    let k = hi - lo + 1;
    if k > MAX_ORBIT_VARS {
        return Err(Error::OrbitTooLarge(k, MAX_ORBIT_VARS));
    }
    let mut out = ZRat::zero(f.arity());
    for images in (lo..=hi).permutations(k) {
        let mut perm: Vec<usize> = (0..f.arity()).collect();
        for (offset, &img) in images.iter().enumerate() {
            perm[lo + offset] = img;
        }
        let rel: Vec<usize> = images.iter().map(|&i| i - lo).collect();
        let sigma = f.permute(&perm);
        let term = match mode {
            OrbitMode::Sym => sigma,
            OrbitMode::Asym => {
                if perm_sign(&rel) >= 0 {
                    sigma
                } else {
                    sigma.neg()
                }
            }
        };
        out = out.add(&term);
    }
    Ok(out)
}

/// Apply the Negut operator N_{u,v} to f through the constant-term formula:
/// f[X + sum_i M/z_i] prod_i Omega[-z_i X] Xi_{u,v}
/// prod_{i<j} Omega[-M z_i/z_j], extracted at z^0.
///
/// The geometric factors 1/(1 - qt z_i/z_{i+1}) are expanded only to the
/// order forced by the z-window; the result is recomputed with the window
/// widened by 2 and the two answers compared.
///
/// # Returns
/// N_{u,v} f, a symmetric function of degree deg(f) + v on homogeneous f.
///
/// # Errors
/// [`Error::InvalidArgument`] for u = 0; [`Error::DegreeCapExceeded`] when
/// the output overflows the engine cap; [`Error::WindowUnstable`] when the
/// two window sizes disagree (pad was too small).
pub fn negut_apply(
    engine: &Engine,
    u: u32,
    v: u32,
    f: &SymFunc,
    pad: i64,
) -> Result<SymFunc> {
    let narrow = negut_apply_window(engine, u, v, f, pad)?;
    let wide = negut_apply_window(engine, u, v, f, pad + 2)?;
    if narrow != wide {
        return Err(Error::WindowUnstable(format!(
            "N[{},{}] with pad {} and {} disagree",
            u,
            v,
            pad,
            pad + 2
        )));
    }
    Ok(narrow)
}

fn negut_apply_window(
    engine: &Engine,
    u: u32,
    v: u32,
    f: &SymFunc,
    pad: i64,
) -> Result<SymFunc> {
    let e = negut_exponents(u as i64, v as i64)?;
    let m = u as usize;
    let out_degree = f.max_degree() as i64 + v as i64;
    engine.check_degree(out_degree.max(0) as u32, "negut_apply")?;
    let bound = pad + e.iter().copied().max().unwrap_or(0);
    let window = ZWindow::uniform(m, -bound, bound);
    // f[X + sum_i M/z_i].
    let mut alphabet = AlphabetExpr::new(m).with_x_term(RatQT::one(), vec![0; m], false);
    for i in 0..m {
        let mut zexp = vec![0i64; m];
        zexp[i] = -1;
        alphabet = alphabet.with_term(RatQT::big_m(), zexp);
    }
    let mut product = f.plethysm(&alphabet).clip(&window);
    // Multiply every factor touching z_i (its Omega series, the geometric
    // factor shared with z_{i+1}, and its ratio kernels), then pin z_i to its
    // staircase exponent: no later factor involves z_i again.
    for i in 0..m {
        let mut zexp = vec![0i64; m];
        zexp[i] = 1;
        let factor = omega_series_dir(
            &AlphabetExpr::new(m).with_x_term(RatQT::from_int(-1), zexp, false),
            &window,
        );
        product = product.mul_window(&factor, &window);
        if i + 1 < m {
            // 1/(1 - qt z_i/z_{i+1}) = Omega[qt z_i/z_{i+1}].
            let mut zexp = vec![0i64; m];
            zexp[i] = 1;
            zexp[i + 1] = -1;
            let factor = omega_series_dir(
                &AlphabetExpr::new(m).with_term(RatQT::qt(), zexp),
                &window,
            );
            product = product.mul_window(&factor, &window);
        }
        for j in (i + 1)..m {
            let mut zexp = vec![0i64; m];
            zexp[i] = 1;
            zexp[j] = -1;
            let factor = omega_series_dir(
                &AlphabetExpr::new(m).with_term(-&RatQT::big_m(), zexp),
                &window,
            );
            product = product.mul_window(&factor, &window);
        }
        // z^0 overall means z^{(e_1..e_m)} before dividing by prod z_i^{e_i}.
        product = product.retain_coord(i, e[i]);
    }
    Ok(product.coeff(&e))
}

/// N_{u,v} packaged as an [`Operator`], with a fixed window pad.
pub fn negut_operator(u: u32, v: u32, pad: i64) -> Operator {
    Operator::new(
        format!("N[{},{}]", u, v),
        Arc::new(move |eng: &Engine, f: &SymFunc| negut_apply(eng, u, v, f, pad)),
    )
}

/// The symmetric clearing polynomial used by every vanishing check here:
/// prod_{i<j} (z_j - qt z_i)(z_i - t z_j)(z_i - q z_j).
///
/// Multiplying the ratio kernels prod_{i<j} Omega[-M z_i/z_j] by the
/// symmetric product of all four denominator mirrors leaves exactly the
/// Vandermonde prod_{i<j}(z_j - z_i) times this polynomial, so Sym-vanishing
/// of a shadow against the kernels becomes Asym-vanishing of shadow times
/// this factor, decided by the signed normal form.
fn qt_clearing_factor(m: usize) -> ZLaurent {
    let mut w = ZLaurent::one(m);
    for i in 0..m {
        for j in (i + 1)..m {
            let zi = ZLaurent::var(m, i);
            let zj = ZLaurent::var(m, j);
            w = w.mul(&zj.sub(&zi.scale(&RatQT::qt())));
            w = w.mul(&zi.sub(&zj.scale(&RatQT::t())));
            w = w.mul(&zi.sub(&zj.scale(&RatQT::q())));
        }
    }
    w
}

/// Decide whether the operator with z-shadow `pi` acts by zero on all
/// symmetric functions: true iff the normal form of pi times the cleared
/// kernel polynomial vanishes.
pub fn shadow_symmetrization_vanishes(pi: &ZLaurent) -> bool {
    if pi.arity() == 0 {
        return pi.is_zero();
    }
    pi.mul(&qt_clearing_factor(pi.arity())).normal_form().is_zero()
}

/// Decide whether a sum of bi-homogeneous word components acts by zero on
/// all symmetric functions, one exact symmetrization-vanishing test per
/// component (components of different word lengths cannot cancel).
///
/// # Errors
/// [`Error::InvalidArgument`] when a component mixes bi-degrees.
pub fn sss_operator_vanishes(components: &[DWord]) -> Result<bool> {
    for component in components {
        if component.is_zero() {
            continue;
        }
        if !shadow_symmetrization_vanishes(&component.pi()?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decide whether the word shadow of Q_{m,n} and the Negut kernel Xi_{m,n}
/// define the same operator, by clearing the difference against the ratio
/// kernels and testing the signed normal form.
///
/// The clearing multiplier is the symmetric polynomial
/// prod_{i != j} (z_j - qt z_i) times prod_{i<j} (z_i - t z_j)(z_i - q z_j);
/// the ordered qt-product absorbs the adjacent-pair denominators of Xi.
///
/// # Errors
/// Propagates construction errors; [`Error::NotCoprime`] for gcd(m,n) > 1.
pub fn word_kernel_matches_xi(m: u32, n: u32) -> Result<bool> {
    let pi = pi_shadow(m, n)?;
    let xi = NegutKernel::new(m, n)?.xi;
    let mu = m as usize;
    // diff = pi - xi = (pi * den(xi) - num(xi)) / den(xi).
    let diff_num = pi.mul(xi.denominator()).sub(xi.numerator());
    let mut g = diff_num;
    for i in 0..mu {
        for j in 0..mu {
            if i == j || j == i + 1 {
                // Adjacent ordered pairs are the denominator of the diff and
                // cancel against the ordered qt-product.
                continue;
            }
            let factor = ZLaurent::var(mu, j).sub(&ZLaurent::var(mu, i).scale(&RatQT::qt()));
            g = g.mul(&factor);
        }
    }
    for i in 0..mu {
        for j in (i + 1)..mu {
            let zi = ZLaurent::var(mu, i);
            let zj = ZLaurent::var(mu, j);
            // Numerator of Omega[-M z_i/z_j] minus its Vandermonde part,
            // plus the two mirror factors clearing the Omega denominators.
            g = g.mul(&zj.sub(&zi.scale(&RatQT::qt())));
            g = g.mul(&zi.sub(&zj.scale(&RatQT::t())));
            g = g.mul(&zi.sub(&zj.scale(&RatQT::q())));
        }
    }
    Ok(g.normal_form().is_zero())
}

/// Check the split identities of the Xi kernel as exact rational functions:
/// Xi_{a,b}[Z_{1..a}] Xi_{c,d}[Z_{a+1..m}] = (1 - qt z_a/z_{a+1}) Xi_{m,n}
/// and
/// Xi_{c,d}[Z_{1..c}] Xi_{a,b}[Z_{c+1..m}]
/// = (z_{c+1}/z_c)(1 - qt z_c/z_{c+1}) Xi_{m,n},
/// where (a,b) + (c,d) is the split of (m,n).
///
/// # Errors
/// Propagates split errors; needs a co-prime pair with m >= 2.
pub fn xi_split_identities_hold(m: u32, n: u32) -> Result<bool> {
    let s = split(m, n)?;
    let (a, b) = s.ab;
    let (c, d) = s.cd;
    let mu = m as usize;
    let xi_mn = NegutKernel::new(m, n)?.xi;
    let xi_ab = NegutKernel::new(a, b)?.xi;
    let xi_cd = NegutKernel::new(c, d)?.xi;
    // First ordering: the (a,b) block leads.
    let lhs1 = xi_ab.embed(mu, 0).mul(&xi_cd.embed(mu, a as usize));
    let one = ZLaurent::one(mu);
    let (ai, ci) = (a as usize - 1, c as usize - 1);
    let mut ratio = vec![0i64; mu];
    ratio[ai] = 1;
    ratio[ai + 1] = -1;
    let factor1 = one.sub(&ZLaurent::monomial(mu, ratio, RatQT::qt()));
    if lhs1 != xi_mn.mul(&ZRat::from_laurent(factor1)) {
        return Ok(false);
    }
    // Second ordering: the (c,d) block leads, with the monomial correction.
    let lhs2 = xi_cd.embed(mu, 0).mul(&xi_ab.embed(mu, c as usize));
    let mut ratio = vec![0i64; mu];
    ratio[ci] = 1;
    ratio[ci + 1] = -1;
    let factor2 = one.sub(&ZLaurent::monomial(mu, ratio.clone(), RatQT::qt()));
    let mut shift = vec![0i64; mu];
    shift[ci] = -1;
    shift[ci + 1] = 1;
    let monom = ZLaurent::monomial(mu, shift, RatQT::one());
    Ok(lhs2 == xi_mn.mul(&ZRat::from_laurent(monom.mul(&factor2))))
}

/// Decide the symmetrization identity equivalent to N_{m,n} = Q_{m,n}, in
/// the denominator-cleared normal-form formulation.
///
/// With (a,b) + (c,d) the split of (m,n) and e the staircase exponents, the
/// identity holds iff the normal form of
/// (z_{c+1}/z_c - (t+q) + qt z_a/z_{a+1})
/// * prod_{i=2}^m z_i^{1-e_i}
/// * prod_{j >= i+2} (z_j - qt z_i)
/// * prod_{i<j} (z_i - t z_j)(z_i - q z_j)
/// vanishes: clearing the ratio kernels leaves the Vandermonde, which turns
/// the symmetrization into an antisymmetrization, and the adjacent qt-pairs
/// cancel the geometric denominators of Xi.
///
/// Pairs with n > m reduce to (m, n mod m): the identity for (m,n) forces
/// the identity for (m, n + km).
///
/// # Errors
/// [`Error::NotCoprime`] for gcd(m,n) > 1; [`Error::InvalidArgument`] for
/// m = 0.
pub fn negut_equivalence_check(m: u32, n: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "the equivalence check needs m >= 1".into(),
        ));
    }
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    if m == 1 {
        // N_{1,n} and Q_{1,n} are both D_n by inspection of the kernels.
        return Ok(true);
    }
    let n = n % m;
    let s = split(m, n)?;
    let (a, _) = s.ab;
    let (c, _) = s.cd;
    let e = negut_exponents(m as i64, n as i64)?;
    let mu = m as usize;
    let (ai, ci) = (a as usize - 1, c as usize - 1);
    // Scalar factor z_{c+1}/z_c - (t+q) + qt z_a/z_{a+1}.
    let mut g = ZLaurent::zero(mu);
    let mut zexp = vec![0i64; mu];
    zexp[ci] = -1;
    zexp[ci + 1] = 1;
    g.add_term(zexp, &RatQT::one());
    g.add_term(vec![0i64; mu], &-&(&RatQT::t() + &RatQT::q()));
    let mut zexp = vec![0i64; mu];
    zexp[ai] = 1;
    zexp[ai + 1] = -1;
    g.add_term(zexp, &RatQT::qt());
    // prod_{i=2}^m z_i^{1-e_i}.
    let mut zexp = vec![0i64; mu];
    for i in 1..mu {
        zexp[i] = 1 - e[i];
    }
    g = g.mul(&ZLaurent::monomial(mu, zexp, RatQT::one()));
    // Non-adjacent qt-pairs and the cleared denominator mirrors.
    for i in 0..mu {
        for j in (i + 2)..mu {
            let factor = ZLaurent::var(mu, j).sub(&ZLaurent::var(mu, i).scale(&RatQT::qt()));
            g = g.mul(&factor);
        }
    }
    for i in 0..mu {
        for j in (i + 1)..mu {
            let zi = ZLaurent::var(mu, i);
            let zj = ZLaurent::var(mu, j);
            g = g.mul(&zi.sub(&zj.scale(&RatQT::t())));
            g = g.mul(&zi.sub(&zj.scale(&RatQT::q())));
        }
    }
    Ok(g.normal_form().is_zero())
}

/// Verify N_{m,n} = Q_{m,n} at t = 1/q by the degree-counting route.
///
/// For n <= m-2 the specialized cleared integrand
/// (z_{c+1}/z_c - (q + 1/q) + z_a/z_{a+1}) prod_{i=2}^m z_i^{1-e_i}
/// prod_{j >= i+2} (z_j - z_i)
/// is checked to be a homogeneous polynomial of degree
/// m - 1 - n + C(m-1,2) < C(m,2) (which already forces its
/// antisymmetrization to vanish) and to have zero normal form. For
/// n = m-1 the three displayed antisymmetrizations are checked to vanish
/// separately via normal forms.
///
/// # Errors
/// [`Error::NotCoprime`] for gcd(m,n) > 1; [`Error::InvalidArgument`]
/// unless 1 <= n <= m-1.
pub fn negut_t_inverse_q_check(m: u32, n: u32) -> Result<bool> {
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    if n == 0 || n >= m {
        return Err(Error::InvalidArgument(format!(
            "the t = 1/q check needs 1 <= n <= m-1, got ({}, {})",
            m, n
        )));
    }
    let mu = m as usize;
    // prod over j >= i+2 of (z_j - z_i), shared by both branches.
    let mut gaps = ZLaurent::one(mu);
    for i in 0..mu {
        for j in (i + 2)..mu {
            gaps = gaps.mul(&ZLaurent::var(mu, j).sub(&ZLaurent::var(mu, i)));
        }
    }
    if n == m - 1 {
        // prod_{i=2}^m z_i^{1-e_i} = 1 here; the three scalar-factor pieces
        // antisymmetrize to zero separately (for m = 2 only jointly).
        let mut up = vec![0i64; mu];
        up[0] = -1;
        up[1] = 1;
        let lead = ZLaurent::monomial(mu, up, RatQT::one());
        let mut down = vec![0i64; mu];
        down[mu - 2] = 1;
        down[mu - 1] = -1;
        let trail = ZLaurent::monomial(mu, down, RatQT::one());
        if mu == 2 {
            let scalar = lead
                .add(&trail)
                .sub(&ZLaurent::constant(2, &(&RatQT::q() + &RatQT::q().pow(-1)) * &RatQT::one()));
            return Ok(scalar.mul(&gaps).normal_form().is_zero());
        }
        return Ok(gaps.normal_form().is_zero()
            && lead.mul(&gaps).normal_form().is_zero()
            && trail.mul(&gaps).normal_form().is_zero());
    }
    let s = split(m, n)?;
    let (a, _) = s.ab;
    let (c, _) = s.cd;
    let e = negut_exponents(m as i64, n as i64)?;
    let (ai, ci) = (a as usize - 1, c as usize - 1);
    let mut scalar = ZLaurent::zero(mu);
    let mut zexp = vec![0i64; mu];
    zexp[ci] = -1;
    zexp[ci + 1] = 1;
    scalar.add_term(zexp, &RatQT::one());
    scalar.add_term(vec![0i64; mu], &-&(&RatQT::q() + &RatQT::q().pow(-1)));
    let mut zexp = vec![0i64; mu];
    zexp[ai] = 1;
    zexp[ai + 1] = -1;
    scalar.add_term(zexp, &RatQT::one());
    let mut zexp = vec![0i64; mu];
    for i in 1..mu {
        zexp[i] = 1 - e[i];
    }
    let p = scalar
        .mul(&ZLaurent::monomial(mu, zexp, RatQT::one()))
        .mul(&gaps);
    let binom = |k: i64| k * (k - 1) / 2;
    let expected = (m as i64 - 1 - n as i64) + binom(m as i64 - 1);
    Ok(p.is_polynomial()
        && p.homogeneous_degree() == Some(expected)
        && expected < binom(m as i64)
        && p.normal_form().is_zero())
}

/// The symmetric common denominator of the shuffle layer: both orientations
/// of every Omega denominator pair,
/// prod_{i<j} (z_j - t z_i)(z_j - q z_i)(z_i - t z_j)(z_i - q z_j).
fn mirror_denominator(m: usize) -> ZLaurent {
    let mut d = ZLaurent::one(m);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let zi = ZLaurent::var(m, i);
                let zj = ZLaurent::var(m, j);
                d = d.mul(&zj.sub(&zi.scale(&RatQT::t())));
                d = d.mul(&zj.sub(&zi.scale(&RatQT::q())));
            }
        }
    }
    d
}

/// The shuffle product of F (symmetric in a variables) and G (symmetric in
/// b variables): the idempotent symmetrization over S_{a+b} of
/// F[Z_a] G[Z_{a+1..a+b}] prod_{i <= a < j} Omega[-M z_i/z_j].
///
/// Inputs whose denominator is the symmetric mirror product of their own
/// variables (as produced by [`u_shuffle`] and by this function) are
/// symmetrized on numerators over one shared denominator; other inputs fall
/// back to term-by-term rational addition, practical only for tiny arities.
///
/// # Errors
/// [`Error::OrbitTooLarge`] when a + b exceeds [`MAX_ORBIT_VARS`].
pub fn shuffle_product(f: &ZRat, g: &ZRat) -> Result<ZRat> {
    let a = f.arity();
    let b = g.arity();
    let m = a + b;
    if m > MAX_ORBIT_VARS {
        return Err(Error::OrbitTooLarge(m, MAX_ORBIT_VARS));
    }
    if m == 0 {
        return Ok(f.mul(g));
    }
    if f.denominator() == &mirror_denominator(a).embed(a, 0)
        && g.denominator() == &mirror_denominator(b).embed(b, 0)
    {
        // Fast path: cross-pair numerators and mirrors upgrade the combined
        // denominator to the full symmetric mirror product on a + b
        // variables, so only numerators need symmetrizing.
        let mut num = f.numerator().embed(m, 0).mul(&g.numerator().embed(m, a));
        for i in 0..a {
            for j in a..m {
                let zi = ZLaurent::var(m, i);
                let zj = ZLaurent::var(m, j);
                num = num.mul(&zj.sub(&zi));
                num = num.mul(&zj.sub(&zi.scale(&RatQT::qt())));
                num = num.mul(&zi.sub(&zj.scale(&RatQT::t())));
                num = num.mul(&zi.sub(&zj.scale(&RatQT::q())));
            }
        }
        let sym = crate::zlaurent::sym_group(&num, 0, m - 1, OrbitMode::Sym)?;
        return Ok(ZRat::new(
            sym.scale(&inverse_factorial(m)),
            mirror_denominator(m),
        ));
    }
    let mut h = f.embed(m, 0).mul(&g.embed(m, a));
    for i in 0..a {
        for j in a..m {
            h = h.mul(&omega_factor(m, i, j));
        }
    }
    let sum = sym_group_rat(&h, 0, m - 1, OrbitMode::Sym)?;
    Ok(sum.scale(&inverse_factorial(m)))
}

/// The symmetrized shadow U_{m,n}: the idempotent symmetrization of
/// Pi_{m,n} times the ratio kernels, presented over the symmetric mirror
/// denominator. With z_1 attached to the first-applied letter of a word,
/// the split recursion reads
/// U_{m,n} = (1/M)(U_{a,b} shuffle U_{c,d} - U_{c,d} shuffle U_{a,b}).
///
/// # Errors
/// Propagates shadow errors; [`Error::OrbitTooLarge`] beyond
/// [`MAX_ORBIT_VARS`] variables.
pub fn u_shuffle(m: u32, n: u32) -> Result<ZRat> {
    let mu = m as usize;
    if mu > MAX_ORBIT_VARS {
        return Err(Error::OrbitTooLarge(mu, MAX_ORBIT_VARS));
    }
    let mut num = pi_shadow(m, n)?;
    for i in 0..mu {
        for j in (i + 1)..mu {
            let zi = ZLaurent::var(mu, i);
            let zj = ZLaurent::var(mu, j);
            num = num.mul(&zj.sub(&zi));
            num = num.mul(&zj.sub(&zi.scale(&RatQT::qt())));
            num = num.mul(&zi.sub(&zj.scale(&RatQT::t())));
            num = num.mul(&zi.sub(&zj.scale(&RatQT::q())));
        }
    }
    let sym = crate::zlaurent::sym_group(&num, 0, mu - 1, OrbitMode::Sym)?;
    Ok(ZRat::new(
        sym.scale(&inverse_factorial(mu)),
        mirror_denominator(mu),
    ))
}

/// 1/m! as an exact scalar.
fn inverse_factorial(m: usize) -> RatQT {
    let mut factorial = 1i64;
    for j in 2..=m as i64 {
        factorial *= j;
    }
    RatQT::from_ratio(1, factorial)
}

/// One labeled comparison inside a [`ConjectureReport`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConjectureEntry {
    /// What was compared.
    pub label: String,
    /// Whether the two sides agreed on the sampled basis.
    pub agrees: bool,
}

/// The outcome of [`conjecture_experiments`]: recorded comparisons, never
/// promoted to assertions.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConjectureReport {
    /// Diagonal step k of the N_{k,k} family.
    pub k: u32,
    /// The co-prime direction (m, n) used for the scaled comparison.
    pub pair: (u32, u32),
    /// Basis elements of degree <= this bound were compared.
    pub degree: u32,
    /// The individual comparisons.
    pub entries: Vec<ConjectureEntry>,
}

/// Compare the diagonal Negut operators against their conjectured closed
/// forms on the Schur basis of degree <= `degree`:
///
/// - N_{k,k} against the nabla-conjugated multiplication by e_k, both as
///   printed and with the compensating sign (-1)^k;
/// - N_{km,kn} against the monomial-weighted product expansion
///   (-1)^k sum_lambda m_lambda[qt/(qt-1)] c^l(lambda)
///   prod_i Q_{lambda_i m, lambda_i n}, with c = (1-qt)/qt as printed, with
///   the sign-corrected c = (qt-1)/qt, and with the parity-matched weight
///   (-1)^{k - l(lambda)} that matches the diagonal conjugation identity.
///
/// # Returns
/// A report of agreements; disagreement is recorded, never an error.
///
/// # Errors
/// Degree-cap or window failures while evaluating either side.
pub fn conjecture_experiments(
    k: u32,
    m: u32,
    n: u32,
    degree: u32,
) -> Result<ConjectureReport> {
    let cap = degree + k * n.max(1) + k + 2;
    let eng = Engine::new(cap);
    let pad = degree as i64 + 4;
    let mut entries = Vec::new();

    let diag = negut_operator(k, k, pad);
    let ek = Operator::mul_by(format!("e{}", k), SymFunc::e_k(k)).nabla_conjugate();
    entries.push(ConjectureEntry {
        label: format!("N[{0},{0}] = nabla e_{0} nabla^-1", k),
        agrees: operators_agree(&eng, &diag, &ek, degree)?,
    });
    let sign = if k % 2 == 0 { 1 } else { -1 };
    entries.push(ConjectureEntry {
        label: format!("N[{0},{0}] = (-1)^{0} nabla e_{0} nabla^-1", k),
        agrees: operators_agree(&eng, &diag, &ek.scale(RatQT::from_int(sign)), degree)?,
    });

    let scaled = negut_operator(k * m, k * n, pad);
    for (label, corrected) in [("printed", false), ("sign-corrected", true)] {
        let expansion = monomial_weighted_q_expansion(k, m, n, corrected)?;
        entries.push(ConjectureEntry {
            label: format!(
                "N[{},{}] = monomial-weighted Q-product expansion ({})",
                k * m,
                k * n,
                label
            ),
            agrees: operators_agree(&eng, &scaled, &expansion, degree)?,
        });
    }
    // Parity-matched variant: weight each partition by (-1)^{k - l(lambda)},
    // i.e. drop the global sign from the corrected form. This is the
    // convention consistent with the diagonal conjugation identity.
    let parity = monomial_weighted_q_expansion(k, m, n, true)?.scale(RatQT::from_int(sign));
    entries.push(ConjectureEntry {
        label: format!(
            "N[{},{}] = monomial-weighted Q-product expansion (parity-matched)",
            k * m,
            k * n
        ),
        agrees: operators_agree(&eng, &scaled, &parity, degree)?,
    });
    Ok(ConjectureReport {
        k,
        pair: (m, n),
        degree,
        entries,
    })
}

/// The right side of the diagonal expansion:
/// (-1)^k sum_{lambda |- k} m_lambda[qt/(qt-1)] c^{l(lambda)}
/// prod_i Q_{lambda_i m, lambda_i n}, with c = (1-qt)/qt (printed) or its
/// negative (corrected).
fn monomial_weighted_q_expansion(
    k: u32,
    m: u32,
    n: u32,
    corrected: bool,
) -> Result<Operator> {
    let qt = RatQT::qt();
    let mut c = &(&RatQT::one() - &qt) / &qt;
    if corrected {
        c = -&c;
    }
    let mut out = Operator::scalar(RatQT::zero());
    for la in partitions_of(k) {
        let weight = SymFunc::basis_element(Basis::Monomial, la.clone())
            .eval_scalar_alphabet(|r| {
                let qtr = RatQT::qt().pow(r as i64);
                &qtr / &(&qtr - &RatQT::one())
            });
        let mut prod = Operator::identity();
        for &part in la.parts() {
            prod = prod.compose(&q_general(part * m, part * n, None)?);
        }
        out = out.add(&prod.scale(&weight * &c.pow(la.len() as i64)));
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Ok(out.scale(RatQT::from_int(sign)))
}
