//! The elliptic-Hall operator family Q_{m,n}:
//!
//! - [`split`]: the unique lattice split (m,n) = (a,b) + (c,d) with
//!   n·a - m·b = 1, through the closest lattice point under the diagonal.
//! - [`DWord`]: formal linear combinations of words in the letters D_k, with
//!   exact RatQT coefficients, kept in expanded normal form.
//! - [`q_coprime`]: the commutator recursion Q_{m,n} = (1/M)[Q_{c,d}, Q_{a,b}]
//!   with base case Q_{1,n} = D_n, memoized, producing a bi-homogeneous DWord
//!   of bi-degree (m, n) for m >= 1.
//! - [`pi_shadow`]: the Laurent shadow of Q_{m,n}, built by the same split
//!   recursion on variable blocks.
//! - [`q_general`]: Q_{km,kn} for non-co-prime indices via the k split
//!   choices (all equivalent), and the closed nabla-conjugated form of
//!   Q_{k,k}.
//! - [`ns_action`] / [`matrix_action`]: the modular-group action on words,
//!   with N realized either by letter-wise Q_{1+k,k} substitution or by
//!   nabla conjugation, and S by shifting every letter up by one.
//! - [`g_operator`]: the operator attached to a homogeneous symmetric
//!   function G through its expansion over the h[X(1/qt - 1)] basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::macdonald::Engine;
use crate::ops::Operator;
use crate::qt::RatQT;
use crate::symfunc::{hqt_basis_expand, AlphabetExpr, SymFunc};
use crate::zlaurent::ZLaurent;

/// The split (m,n) = (a,b) + (c,d) through the closest lattice point below
/// the diagonal, with n·a - m·b = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub ab: (u32, u32),
    pub cd: (u32, u32),
}

/// Split a co-prime pair (m, n) with m >= 1: the first 1 <= a <= m with
/// n·a - m·b = 1 where b = ceil(n·a/m) - 1, and (c,d) = (m,n) - (a,b).
///
/// # Errors
/// [`Error::NotCoprime`] when gcd(m,n) != 1, [`Error::InvalidArgument`] when
/// m = 0.
///
/// # Edge cases
/// (1,n) -> (1,n-1) + (0,1) and (m,1) -> (1,0) + (m-1,1).
pub fn split(m: u32, n: u32) -> Result<SplitResult> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "split needs a positive first index".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "split needs a positive second index".into(),
        ));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    for a in 1..=m {
        let b = (n as u64 * a as u64).div_ceil(m as u64) as u32 - 1;
        if (n as i64) * (a as i64) - (m as i64) * (b as i64) == 1 {
            return Ok(SplitResult {
                ab: (a, b),
                cd: (m - a, n - b),
            });
        }
    }
    unreachable!("a co-prime pair always splits");
}

/// A finite formal sum of words in the letters D_k with RatQT coefficients.
///
/// Words are stored in application order: `letters[0]` is the operator that
/// acts first (the rightmost letter of the written product).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DWord {
    terms: BTreeMap<Vec<i64>, RatQT>,
}

impl DWord {
    pub fn zero() -> Self {
        DWord {
            terms: BTreeMap::new(),
        }
    }

    /// The empty word (the identity operator).
    pub fn one() -> Self {
        Self::word(vec![], RatQT::one())
    }

    /// The single letter D_k.
    pub fn d(k: i64) -> Self {
        Self::word(vec![k], RatQT::one())
    }

    /// c times the word with the given letters in application order.
    pub fn word(letters: Vec<i64>, c: RatQT) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(letters, c);
        }
        DWord { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RatQT)> {
        self.terms.iter()
    }

    pub fn coeff(&self, letters: &[i64]) -> RatQT {
        self.terms.get(letters).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn add_word(&mut self, letters: Vec<i64>, c: &RatQT) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(letters.clone()).or_insert_with(RatQT::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&letters);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DWord {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DWord {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Operator product self . other (other acts first).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut letters = wb.clone();
                letters.extend_from_slice(wa);
                out.add_word(letters, &(ca * cb));
            }
        }
        out
    }

    /// [self, other] = self.other - other.self.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// (word length, letter sum) when every word agrees, assigning D_k the
    /// bi-degree (1, k).
    pub fn bi_degree(&self) -> Option<(usize, i64)> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d = (w.len(), w.iter().sum::<i64>());
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// The Laurent shadow: each word D_{a_r}...D_{a_1} contributes
    /// c / (z_1^{a_1} ... z_r^{a_r}). Defined for bi-homogeneous sums
    /// (fixed word length).
    pub fn pi(&self) -> Result<ZLaurent> {
        let (len, _) = self.bi_degree().ok_or_else(|| {
            Error::InvalidArgument("pi shadow needs a bi-homogeneous word sum".into())
        })?;
        let mut out = ZLaurent::zero(len);
        for (w, c) in &self.terms {
            let zexp: Vec<i64> = w.iter().map(|&a| -a).collect();
            out.add_term(zexp, c);
        }
        Ok(out)
    }

    /// Act on a symmetric function, applying `letters[0]` first.
    pub fn apply(&self, engine: &Engine, f: &SymFunc) -> Result<SymFunc> {
        let mut out = SymFunc::zero(crate::symfunc::Basis::PowerSum);
        for (w, c) in &self.terms {
            let mut g = f.clone();
            for &k in w {
                g = Operator::d(k).apply(engine, &g)?;
            }
            out = out.add(&g.scale(c));
        }
        Ok(out)
    }

    /// Package as an [`Operator`].
    pub fn to_operator(&self, name: impl Into<String>) -> Operator {
        let w = self.clone();
        Operator::new(
            name,
            std::sync::Arc::new(move |eng: &Engine, f: &SymFunc| w.apply(eng, f)),
        )
    }
}

impl std::fmt::Display for DWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            // Display order is the reverse of application order.
            for &k in w.iter().rev() {
                write!(f, "*D[{}]", k)?;
            }
        }
        Ok(())
    }
}

fn q_cache() -> &'static Mutex<HashMap<(u32, u32), DWord>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), DWord>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The DWord of Q_{m,n} for a co-prime pair with m >= 1 (bi-degree (m, n)):
/// Q_{1,n} = D_n, otherwise (1/M)[Q_{c,d}, Q_{a,b}] over the split.
///
/// # Errors
/// [`Error::NotCoprime`] for non-co-prime input; [`Error::InvalidArgument`]
/// for m = 0 (Q_{0,1} = -e_1-multiplication is not a word in the D_k; use
/// [`q_general`] for the operator).
pub fn q_coprime(m: u32, n: u32) -> Result<DWord> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "Q_{0,1} is multiplication by -e_1, not a D-word; use q_general".into(),
        ));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    if let Some(w) = q_cache().lock().unwrap().get(&(m, n)) {
        return Ok(w.clone());
    }
    let out = if m == 1 {
        DWord::d(n as i64)
    } else {
        let s = split(m, n)?;
        let qa = q_coprime(s.ab.0, s.ab.1)?;
        let qc = q_coprime(s.cd.0, s.cd.1)?;
        qc.commutator(&qa).scale(&RatQT::big_m().inv())
    };
    q_cache().lock().unwrap().insert((m, n), out.clone());
    Ok(out)
}

/// The Laurent shadow Pi_{m,n}[z_1..z_m] by the split recursion:
/// Pi_{1,n} = 1/z_1^n and
/// Pi_{m,n} = (1/M)(Pi_{a,b}[Z_{1..a}] Pi_{c,d}[Z_{a+1..m}]
///             - Pi_{c,d}[Z_{1..c}] Pi_{a,b}[Z_{c+1..m}]).
pub fn pi_shadow(m: u32, n: u32) -> Result<ZLaurent> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "pi shadow needs a positive first index".into(),
        ));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    if m == 1 {
        return Ok(ZLaurent::monomial(1, vec![-(n as i64)], RatQT::one()));
    }
    let s = split(m, n)?;
    let (a, c) = (s.ab.0 as usize, s.cd.0 as usize);
    let pa = pi_shadow(s.ab.0, s.ab.1)?;
    let pc = pi_shadow(s.cd.0, s.cd.1)?;
    let arity = m as usize;
    let first = pa.embed(arity, 0).mul(&pc.embed(arity, a));
    let second = pc.embed(arity, 0).mul(&pa.embed(arity, c));
    Ok(first.sub(&second).scale(&RatQT::big_m().inv()))
}

/// The operator for an arbitrary pair, handling the m = 0 base case.
fn q_pair_operator(m: u32, n: u32) -> Result<Operator> {
    if (m, n) == (0, 1) {
        return Ok(Operator::e1_mul().neg());
    }
    if m == 0 {
        return Err(Error::InvalidArgument(format!(
            "unsupported index pair ({},{})",
            m, n
        )));
    }
    let w = q_coprime(m, n)?;
    Ok(w.to_operator(format!("Q[{},{}]", m, n)))
}

/// Q_{u,v} as an operator for any positive pair (u,v) = (km,kn) with (m,n)
/// co-prime: the DWord action for k = 1, and for k > 1 the commutator of the
/// chosen diagonal-adjacent split (all 1 <= choice <= k agree; default 1).
///
/// # Errors
/// Zero indices or an out-of-range split choice are invalid arguments.
pub fn q_general(u: u32, v: u32, choice: Option<u32>) -> Result<Operator> {
    if u == 0 || v == 0 {
        return Err(Error::InvalidArgument(
            "q_general needs positive indices".into(),
        ));
    }
    let k = u.gcd(&v);
    let (m, n) = (u / k, v / k);
    if k == 1 {
        if choice.map_or(false, |c| c != 1) {
            return Err(Error::InvalidArgument(
                "split choice applies only to non-co-prime pairs".into(),
            ));
        }
        return q_pair_operator(m, n);
    }
    let uu = choice.unwrap_or(1);
    if uu < 1 || uu > k {
        return Err(Error::InvalidArgument(format!(
            "split choice {} outside 1..{}",
            uu, k
        )));
    }
    let s = split(m, n)?;
    let p1 = ((uu - 1) * m + s.ab.0, (uu - 1) * n + s.ab.1);
    let p2 = ((k - uu) * m + s.cd.0, (k - uu) * n + s.cd.1);
    let op1 = q_pair_operator(p1.0, p1.1)?;
    let op2 = q_pair_operator(p2.0, p2.1)?;
    Ok(Operator::commutator(&op2, &op1).scale(RatQT::big_m().inv()))
}

/// The closed form of Q_{k,k}:
/// (qt/(qt-1)) nabla . h_k[X(1/qt - 1)]-multiplication . nabla^{-1}.
pub fn q_kk_closed(k: u32) -> Operator {
    let alphabet = AlphabetExpr::new(0).with_x_term(
        &RatQT::qt().inv() - &RatQT::one(),
        vec![],
        false,
    );
    let h = SymFunc::h_k(k).plethysm_closed(&alphabet);
    let c = &RatQT::qt() / &(&RatQT::qt() - &RatQT::one());
    Operator::mul_by(format!("h[{}][X(1/qt-1)]", k), h)
        .nabla_conjugate()
        .scale(c)
}

/// A generator of the modular-group action on D-words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NS {
    /// [[1,1],[0,1]]: D_{k} -> Q_{1+k,k}, i.e. conjugation by nabla.
    N,
    /// [[1,0],[1,1]]: D_{k} -> D_{k+1} letter-wise.
    S,
}

/// Act by a generator on a DWord. S shifts every letter up by one; N
/// replaces each letter D_k by the word of Q_{1+k,k}.
///
/// # Errors
/// N needs every letter k >= 0 so that (1+k, k) stays in the supported
/// quadrant.
pub fn ns_action(word: &DWord, generator: NS) -> Result<DWord> {
    let mut out = DWord::zero();
    for (w, c) in word.terms() {
        let mut acc = DWord::one();
        for &k in w {
            // Letters later in application order compose on the left.
            let letter = match generator {
                NS::S => DWord::d(k + 1),
                NS::N => {
                    if k < 0 {
                        return Err(Error::InvalidArgument(
                            "N action needs nonnegative letters".into(),
                        ));
                    }
                    q_coprime(1 + k as u32, k as u32)?
                }
            };
            acc = letter.mul(&acc);
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// Factor a nonnegative SL_2(Z) matrix [[a,c],[b,d]] into N/S generators and
/// push the word through them: [[a,c],[b,d]] maps the operator of a co-prime
/// pair (m,n) to the operator of (am+cn, bm+dn).
///
/// # Errors
/// Matrices with negative entries or determinant != 1 are invalid arguments.
pub fn matrix_action(mat: [[i64; 2]; 2], word: &DWord) -> Result<DWord> {
    let [[a, c], [b, d]] = mat;
    if a < 0 || b < 0 || c < 0 || d < 0 {
        return Err(Error::InvalidArgument(
            "matrix action supports the nonnegative quadrant only".into(),
        ));
    }
    if a * d - b * c != 1 {
        return Err(Error::InvalidArgument("matrix must have determinant 1".into()));
    }
    // Peel generators: M = N * M' subtracts row 2 from row 1, M = S * M'
    // subtracts row 1 from row 2.
    let mut gens = Vec::new();
    let (mut a, mut b, mut c, mut d) = (a, b, c, d);
    while (a, b, c, d) != (1, 0, 0, 1) {
        if a >= b && c >= d && (a, c) != (b, d) {
            gens.push(NS::N);
            a -= b;
            c -= d;
        } else if b >= a && d >= c {
            gens.push(NS::S);
            b -= a;
            d -= c;
        } else {
            return Err(Error::InvalidArgument(
                "matrix does not factor over N and S".into(),
            ));
        }
    }
    let mut out = word.clone();
    for g in gens.into_iter().rev() {
        out = ns_action(&out, g)?;
    }
    Ok(out)
}

/// The operator attached to a homogeneous symmetric function G of degree k
/// and a co-prime pair (m,n): expand G over the basis
/// h_lambda[X;q,t] = (qt/(1-qt))^l prod_i h_{lambda_i}[X(1/qt - 1)] and map
/// each h_lambda to (-1)^{k-l} prod_i Q_{lambda_i m, lambda_i n}.
///
/// The sign makes the two expected normalizations hold simultaneously:
/// conjugating the closed Q_{k,k} form shows
/// nabla h_lambda[X;q,t] nabla^{-1} = (-1)^l prod_i Q_{lambda_i,lambda_i},
/// so this G-operator at (m,n) = (1,1) equals (-1)^k nabla G nabla^{-1};
/// in particular G = e_1 gives exactly Q_{m,n}.
///
/// # Errors
/// Non-homogeneous G or non-co-prime (m,n) are invalid arguments.
pub fn g_operator(g: &SymFunc, m: u32, n: u32) -> Result<Operator> {
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    let k = match g.homogeneous_degree() {
        Some(k) => k,
        None => {
            return Err(Error::InvalidArgument(
                "g_operator needs a homogeneous symmetric function".into(),
            ))
        }
    };
    let coeffs = hqt_basis_expand(g)?;
    let mut out = Operator::scalar(RatQT::zero());
    for (la, c) in coeffs {
        let mut prod = Operator::identity();
        for &part in la.parts() {
            prod = prod.compose(&q_general(part * m, part * n, None)?);
        }
        let sign = if (k as usize + la.len()) % 2 == 0 { 1 } else { -1 };
        out = out.add(&prod.scale(&c * &RatQT::from_int(sign)));
    }
    Ok(out)
}
