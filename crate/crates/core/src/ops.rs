//! The operator calculus: D_k, D_k*, multiplication and skewing operators,
//! nabla conjugation, the Phi_k / Psi_k families, and mechanical checks of
//! the identities relating them.
//!
//! D_k acts exactly (no series truncation):
//!
//!   D_k F = F[X + M/z] sum_i (-z)^i e_i[X] |_{z^k}
//!         = sum_j phi_j(F) (-1)^{k+j} e_{k+j}[X],
//!
//! where phi_j(F) is the z^{-j} coefficient of F[X + M/z] — a finite sum.
//! D_k* is the same with M -> -Mtilde and e -> h. Everything else is built
//! from these by composition, linear combination, and nabla conjugation.

use std::sync::Arc;

use crate::error::Result;
use crate::macdonald::Engine;
use crate::partitions::partitions_of;
use crate::qt::RatQT;
use crate::symfunc::{AlphabetExpr, Basis, SymFunc, ZWindow};

/// The function type backing an [`Operator`].
pub type OpFn = Arc<dyn Fn(&Engine, &SymFunc) -> Result<SymFunc> + Send + Sync>;

/// A linear operator on symmetric functions, evaluated through an [`Engine`].
#[derive(Clone)]
pub struct Operator {
    name: String,
    func: OpFn,
}

impl Operator {
    pub fn new(name: impl Into<String>, func: OpFn) -> Self {
        Operator {
            name: name.into(),
            func,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, engine: &Engine, f: &SymFunc) -> Result<SymFunc> {
        (self.func)(engine, f)
    }

    pub fn identity() -> Self {
        Operator::new("1", Arc::new(|_, f: &SymFunc| Ok(f.clone())))
    }

    pub fn scalar(c: RatQT) -> Self {
        let name = format!("{}", c);
        Operator::new(name, Arc::new(move |_, f: &SymFunc| Ok(f.scale(&c))))
    }

    /// D_k for any integer k.
    pub fn d(k: i64) -> Self {
        Operator::new(
            format!("D[{}]", k),
            Arc::new(move |eng, f| apply_d(eng, f, k, false)),
        )
    }

    /// D_k* for any integer k.
    pub fn d_star(k: i64) -> Self {
        Operator::new(
            format!("Dstar[{}]", k),
            Arc::new(move |eng, f| apply_d(eng, f, k, true)),
        )
    }

    pub fn nabla() -> Self {
        Operator::new("nabla", Arc::new(|eng: &Engine, f: &SymFunc| eng.nabla(f)))
    }

    pub fn nabla_inv() -> Self {
        Operator::new(
            "nabla^-1",
            Arc::new(|eng: &Engine, f: &SymFunc| eng.nabla_inv(f)),
        )
    }

    /// Multiplication by a fixed symmetric function.
    pub fn mul_by(name: impl Into<String>, g: SymFunc) -> Self {
        Operator::new(
            name,
            Arc::new(move |eng: &Engine, f: &SymFunc| {
                let r = f.mul(&g);
                eng.check_degree(r.max_degree(), "multiplication operator")?;
                Ok(r)
            }),
        )
    }

    /// Multiplication by e_1.
    pub fn e1_mul() -> Self {
        Self::mul_by("e[1]", SymFunc::e_k(1))
    }

    /// p_k^perp (equals e_1^perp for k = 1).
    pub fn p_perp(k: u32) -> Self {
        Operator::new(
            format!("pperp[{}]", k),
            Arc::new(move |_, f: &SymFunc| Ok(f.p_perp(k))),
        )
    }

    /// self . other (other acts first).
    pub fn compose(&self, other: &Operator) -> Operator {
        let a = self.clone();
        let b = other.clone();
        Operator::new(
            format!("{}*{}", self.name, other.name),
            Arc::new(move |eng, f| a.apply(eng, &b.apply(eng, f)?)),
        )
    }

    pub fn add(&self, other: &Operator) -> Operator {
        let a = self.clone();
        let b = other.clone();
        Operator::new(
            format!("({}+{})", self.name, other.name),
            Arc::new(move |eng, f| Ok(a.apply(eng, f)?.add(&b.apply(eng, f)?))),
        )
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        let a = self.clone();
        let b = other.clone();
        Operator::new(
            format!("({}-{})", self.name, other.name),
            Arc::new(move |eng, f| Ok(a.apply(eng, f)?.sub(&b.apply(eng, f)?))),
        )
    }

    pub fn neg(&self) -> Operator {
        let a = self.clone();
        Operator::new(
            format!("-{}", self.name),
            Arc::new(move |eng, f| Ok(a.apply(eng, f)?.neg())),
        )
    }

    pub fn scale(&self, c: RatQT) -> Operator {
        let a = self.clone();
        Operator::new(
            format!("{}*{}", c, self.name),
            Arc::new(move |eng, f| Ok(a.apply(eng, f)?.scale(&c))),
        )
    }

    /// [A, B] = AB - BA.
    pub fn commutator(a: &Operator, b: &Operator) -> Operator {
        let r = a.compose(b).sub(&b.compose(a));
        Operator::new(format!("[{},{}]", a.name, b.name), r.func)
    }

    /// nabla . self . nabla^{-1}.
    pub fn nabla_conjugate(&self) -> Operator {
        let r = Operator::nabla()
            .compose(self)
            .compose(&Operator::nabla_inv());
        Operator::new(format!("nabla*{}*nabla^-1", self.name), r.func)
    }

    /// Phi_k: Phi_1 = (1/M)[D_1, D_0], Phi_{k+1} = (1/M)[D_1, Phi_k].
    pub fn phi(k: u32) -> Self {
        assert!(k >= 1);
        let m_inv = RatQT::big_m().inv();
        let mut op = Operator::commutator(&Operator::d(1), &Operator::d(0)).scale(m_inv.clone());
        for _ in 1..k {
            op = Operator::commutator(&Operator::d(1), &op).scale(m_inv.clone());
        }
        Operator::new(format!("Phi[{}]", k), op.func)
    }

    /// Psi_k: Psi_1 = -e[1], Psi_{k+1} = (1/M)[Psi_k, D_1].
    pub fn psi(k: u32) -> Self {
        assert!(k >= 1);
        let m_inv = RatQT::big_m().inv();
        let mut op = Operator::e1_mul().neg();
        for _ in 1..k {
            op = Operator::commutator(&op, &Operator::d(1)).scale(m_inv.clone());
        }
        Operator::new(format!("Psi[{}]", k), op.func)
    }
}

impl std::fmt::Debug for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Operator({})", self.name)
    }
}

/// Exact D_k / D_k* application.
fn apply_d(engine: &Engine, f: &SymFunc, k: i64, star: bool) -> Result<SymFunc> {
    if f.is_zero() {
        return Ok(SymFunc::zero(Basis::PowerSum));
    }
    let out_degree = f.max_degree() as i64 + k;
    if out_degree < 0 {
        // Every term needs an e/h factor of negative index.
        if (f.max_degree() as i64) + k < 0 && f.degrees().iter().all(|&d| (d as i64) + k < 0) {
            return Ok(SymFunc::zero(Basis::PowerSum));
        }
    }
    engine.check_degree(out_degree.max(0) as u32, if star { "Dstar" } else { "D" })?;
    let shift = if star {
        -&RatQT::big_m_tilde()
    } else {
        RatQT::big_m()
    };
    let alphabet = AlphabetExpr::new(1)
        .with_x_term(RatQT::one(), vec![0], false)
        .with_term(shift, vec![-1]);
    let series = f.plethysm(&alphabet);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (zexp, g) in series.terms() {
        let j = -zexp[0];
        debug_assert!(j >= 0);
        let idx = k + j;
        if idx < 0 {
            continue;
        }
        let factor = if star {
            SymFunc::h_k(idx as u32)
        } else {
            let e = SymFunc::e_k(idx as u32);
            if idx % 2 == 0 {
                e
            } else {
                e.neg()
            }
        };
        out = out.add(&g.mul(&factor));
    }
    Ok(out)
}

/// Check A = B by applying both to every Schur function of degree <= max_deg.
pub fn operators_agree(
    engine: &Engine,
    a: &Operator,
    b: &Operator,
    max_deg: u32,
) -> Result<bool> {
    for n in 0..=max_deg {
        for la in partitions_of(n) {
            let f = SymFunc::s(la);
            if a.apply(engine, &f)? != b.apply(engine, &f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check <A f, g>_* = <f, B g>_* on all Schur pairs up to max_deg.
pub fn star_adjoint_agree(
    engine: &Engine,
    a: &Operator,
    b: &Operator,
    max_deg: u32,
) -> Result<bool> {
    for n in 0..=max_deg {
        for la in partitions_of(n) {
            let f = SymFunc::s(la.clone());
            let af = a.apply(engine, &f)?;
            for m in 0..=max_deg {
                for mu in partitions_of(m) {
                    let g = SymFunc::s(mu.clone());
                    let lhs = af.star_scalar(&g);
                    let rhs = f.star_scalar(&b.apply(engine, &g)?);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Multiplication by h_n[X(1-qt)].
pub fn h_mul_one_minus_qt(n: u32) -> Operator {
    let alphabet =
        AlphabetExpr::new(0).with_x_term(&RatQT::one() - &RatQT::qt(), vec![], false);
    let g = SymFunc::h_k(n).plethysm_closed(&alphabet);
    Operator::mul_by(format!("h[{}][X(1-qt)]", n), g)
}

/// The two-parameter extraction P^{(r1,r2)} = P[X + M u1 - Mtilde u2]
/// restricted to u1^{r1} u2^{r2}, summed over r1 + r2 = r.
pub fn two_alphabet_diagonal_sum(f: &SymFunc, r: u32) -> SymFunc {
    let alphabet = AlphabetExpr::new(2)
        .with_x_term(RatQT::one(), vec![0, 0], false)
        .with_term(RatQT::big_m(), vec![1, 0])
        .with_term(-&RatQT::big_m_tilde(), vec![0, 1]);
    let series = f.plethysm(&alphabet);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for r1 in 0..=r {
        let r2 = r - r1;
        out = out.add(&series.coeff(&[r1 as i64, r2 as i64]));
    }
    out
}

/// The exact value of (D_a D_b* - D_b* D_a) f predicted by the three-regime
/// commutator identity.
pub fn dd_star_commutator_predicted(f: &SymFunc, a: i64, b: i64) -> SymFunc {
    let m = RatQT::big_m();
    let pre = &m / &(&RatQT::one() - &RatQT::qt());
    let s = a + b;
    if s > 0 {
        let c = &pre * &(-&RatQT::qt().pow(-a));
        h_mul_one_minus_qt(s as u32)
            .apply(&Engine::new(u32::MAX), f)
            .expect("multiplication cannot fail below cap")
            .scale(&c)
    } else if s == 0 {
        let c = &pre * &(&RatQT::one() - &RatQT::qt().pow(-a));
        f.scale(&c)
    } else {
        two_alphabet_diagonal_sum(f, (-s) as u32).scale(&pre)
    }
}

/// Verify the three-regime commutator identity on f.
pub fn dd_star_commutator_check(engine: &Engine, f: &SymFunc, a: i64, b: i64) -> Result<bool> {
    let lhs = Operator::commutator(&Operator::d(a), &Operator::d_star(b)).apply(engine, f)?;
    Ok(lhs == dd_star_commutator_predicted(f, a, b))
}

/// Windowed constant-term oracle for a product of D operators:
/// D_{a_m} ... D_{a_1} F as the z^0 coefficient of
/// F[X + sum_i M/z_i] prod_i Omega[-z_i X] / prod_i z_i^{a_i}
/// prod_{i<j} Omega[-M z_i/z_j],
/// with all series clipped to |exponent| <= pad. The caller should verify
/// stability under increasing pad.
pub fn d_word_constant_term(
    engine: &Engine,
    word: &[i64],
    f: &SymFunc,
    pad: i64,
) -> Result<SymFunc> {
    let m = word.len();
    let out_degree = f.max_degree() as i64 + word.iter().sum::<i64>();
    engine.check_degree(out_degree.max(0) as u32, "d_word_constant_term")?;
    let window = ZWindow::uniform(m, -pad, pad);
    // F[X + sum M/z_i].
    let mut alphabet = AlphabetExpr::new(m).with_x_term(RatQT::one(), vec![0; m], false);
    for i in 0..m {
        let mut zexp = vec![0i64; m];
        zexp[i] = -1;
        alphabet = alphabet.with_term(RatQT::big_m(), zexp);
    }
    let mut product = f.plethysm(&alphabet).clip(&window);
    // Multiply the factors touching z_i (its Omega series and its ratio
    // kernels), then pin z_i to its target exponent: no later factor
    // involves z_i again, so only those monomials can contribute.
    for i in 0..m {
        let mut zexp = vec![0i64; m];
        zexp[i] = 1;
        // Omega[-z_i X] = sum_r z_i^r h_r[-X] = sum_r (-z_i)^r e_r[X].
        let factor = crate::symfunc::omega_series_dir(
            &AlphabetExpr::new(m).with_x_term(RatQT::from_int(-1), zexp, false),
            &window,
        );
        product = product.mul_window(&factor, &window);
        for j in (i + 1)..m {
            let mut zexp = vec![0i64; m];
            zexp[i] = 1;
            zexp[j] = -1;
            let factor = crate::symfunc::omega_series_dir(
                &AlphabetExpr::new(m).with_term(-&RatQT::big_m(), zexp),
                &window,
            );
            product = product.mul_window(&factor, &window);
        }
        // z^0 overall means z^{(a_1..a_m)} before dividing by prod z_i^{a_i}.
        product = product.retain_coord(i, word[i]);
    }
    Ok(product.coeff(word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn d_on_constants() {
        let eng = Engine::new(6);
        let one = SymFunc::one();
        for k in 0..=4i64 {
            let dk = Operator::d(k).apply(&eng, &one).unwrap();
            let expect = if k % 2 == 0 {
                SymFunc::e_k(k as u32)
            } else {
                SymFunc::e_k(k as u32).neg()
            };
            assert_eq!(dk, expect, "D_{} 1", k);
            assert_eq!(
                Operator::d_star(k).apply(&eng, &one).unwrap(),
                SymFunc::h_k(k as u32),
                "D*_{} 1",
                k
            );
        }
        // Negative k annihilates constants.
        assert!(Operator::d(-1).apply(&eng, &one).unwrap().is_zero());
    }

    #[test]
    fn d0_eigenoperator_on_htilde() {
        let eng = Engine::new(4);
        for n in 1..=4u32 {
            for mu in partitions_of(n) {
                let h = eng.htilde(&mu).unwrap();
                let lhs = Operator::d(0).apply(&eng, &h).unwrap();
                assert_eq!(lhs, h.scale(&-&mu.d_mu()), "D_0 on {}", mu);
                let lhs = Operator::d_star(0).apply(&eng, &h).unwrap();
                assert_eq!(lhs, h.scale(&-&mu.d_mu_inverted()), "D_0^* on {}", mu);
            }
        }
    }

    #[test]
    fn commutation_with_e1_multiplication() {
        // [D_k, e1] = M D_{k+1} and [D_k^*, e1] = -Mtilde D_{k+1}^*.
        let eng = Engine::new(6);
        for k in -1..=2i64 {
            let lhs = Operator::commutator(&Operator::d(k), &Operator::e1_mul());
            let rhs = Operator::d(k + 1).scale(RatQT::big_m());
            assert!(operators_agree(&eng, &lhs, &rhs, 3).unwrap(), "k = {}", k);
            let lhs = Operator::commutator(&Operator::d_star(k), &Operator::e1_mul());
            let rhs = Operator::d_star(k + 1).scale(-&RatQT::big_m_tilde());
            assert!(operators_agree(&eng, &lhs, &rhs, 3).unwrap(), "k = {} star", k);
        }
    }

    #[test]
    fn nabla_conjugation_identities() {
        let eng = Engine::new(5);
        // nabla e1 nabla^-1 = -D_1.
        let lhs = Operator::e1_mul().nabla_conjugate();
        assert!(operators_agree(&eng, &lhs, &Operator::d(1).neg(), 4).unwrap());
        // nabla D_1^* nabla^-1 = e1.
        let lhs = Operator::d_star(1).nabla_conjugate();
        assert!(operators_agree(&eng, &lhs, &Operator::e1_mul(), 4).unwrap());
        // nabla^-1 e_1^perp nabla = (1/M) D_{-1}.
        let lhs = Operator::nabla_inv()
            .compose(&Operator::p_perp(1))
            .compose(&Operator::nabla());
        let rhs = Operator::d(-1).scale(RatQT::big_m().inv());
        assert!(operators_agree(&eng, &lhs, &rhs, 4).unwrap());
        // nabla^-1 D_{-1}^* nabla = -Mtilde e_1^perp.
        let lhs = Operator::nabla_inv()
            .compose(&Operator::d_star(-1))
            .compose(&Operator::nabla());
        let rhs = Operator::p_perp(1).scale(-&RatQT::big_m_tilde());
        assert!(operators_agree(&eng, &lhs, &rhs, 4).unwrap());
    }

    #[test]
    fn star_adjoint_pairs() {
        let eng = Engine::new(5);
        // Self-adjoint: D_0, D_0^*, nabla.
        for op in [Operator::d(0), Operator::d_star(0), Operator::nabla()] {
            assert!(star_adjoint_agree(&eng, &op, &op, 3).unwrap(), "{}", op.name());
        }
        for k in 1..=2i64 {
            // p_k multiplication vs (-1)^{k-1} (1-t^k)(1-q^k) p_k^perp
            // (the M-factor is taken at q^k, t^k; at k = 1 it is plain M).
            let a = Operator::mul_by("p", SymFunc::p_k(k as u32));
            let mk = RatQT::big_m().raise(k as u32);
            let c = if k % 2 == 1 { mk } else { -&mk };
            let b = Operator::p_perp(k as u32).scale(c);
            assert!(star_adjoint_agree(&eng, &a, &b, 3).unwrap(), "p_{}", k);
            // D_k vs (-1)^k D_{-k}.
            let b = if k % 2 == 0 {
                Operator::d(-k)
            } else {
                Operator::d(-k).neg()
            };
            assert!(star_adjoint_agree(&eng, &Operator::d(k), &b, 3).unwrap());
            // D_k^* vs (-qt)^k D_{-k}^*.
            let c = (-&RatQT::qt()).pow(k);
            let b = Operator::d_star(-k).scale(c);
            assert!(star_adjoint_agree(&eng, &Operator::d_star(k), &b, 3).unwrap());
        }
    }

    #[test]
    fn binomial_expansion_of_dk() {
        // D_k = (1/M^k) sum_r C(k,r) (-1)^r e1^r D_0 e1^{k-r} and the
        // D_k^* variant with (-1)^{k-r} and Mtilde.
        let eng = Engine::new(6);
        for k in 1..=2u32 {
            let mut sum_d = Operator::scalar(RatQT::zero());
            let mut sum_ds = Operator::scalar(RatQT::zero());
            for r in 0..=k {
                let binom = (1..=k as u64).product::<u64>()
                    / ((1..=r as u64).product::<u64>() * (1..=(k - r) as u64).product::<u64>());
                let mut term = Operator::identity();
                for _ in 0..r {
                    term = Operator::e1_mul().compose(&term);
                }
                let mut term_s = term.clone();
                term = term.compose(&Operator::d(0));
                term_s = term_s.compose(&Operator::d_star(0));
                for _ in 0..(k - r) {
                    term = term.compose(&Operator::e1_mul());
                    term_s = term_s.compose(&Operator::e1_mul());
                }
                let sign = if r % 2 == 0 { 1 } else { -1 };
                sum_d = sum_d.add(&term.scale(RatQT::from_int(sign * binom as i64)));
                let sign_s = if (k - r) % 2 == 0 { 1 } else { -1 };
                sum_ds = sum_ds.add(&term_s.scale(RatQT::from_int(sign_s * binom as i64)));
            }
            let lhs = sum_d.scale(RatQT::big_m().pow(k as i64).inv());
            assert!(operators_agree(&eng, &lhs, &Operator::d(k as i64), 3).unwrap());
            let lhs = sum_ds.scale(RatQT::big_m_tilde().pow(k as i64).inv());
            assert!(operators_agree(&eng, &lhs, &Operator::d_star(k as i64), 3).unwrap());
        }
    }

    #[test]
    fn phi_psi_match_nabla_conjugates() {
        let eng = Engine::new(6);
        for k in 1..=3u32 {
            let phi = Operator::phi(k);
            let rhs = Operator::d(k as i64).nabla_conjugate();
            assert!(operators_agree(&eng, &phi, &rhs, 3).unwrap(), "Phi_{}", k);
            let psi = Operator::psi(k);
            let c = -&RatQT::qt().pow(1 - k as i64);
            let rhs = Operator::d_star(k as i64).nabla_conjugate().scale(c);
            assert!(operators_agree(&eng, &psi, &rhs, 3).unwrap(), "Psi_{}", k);
        }
    }

    #[test]
    fn commutator_three_regimes() {
        let eng = Engine::new(8);
        let fs = [SymFunc::one(), SymFunc::s(pt(&[2, 1])), SymFunc::h_k(2)];
        for f in &fs {
            // a+b > 0.
            assert!(dd_star_commutator_check(&eng, f, 2, 1).unwrap());
            assert!(dd_star_commutator_check(&eng, f, 1, 1).unwrap());
            assert!(dd_star_commutator_check(&eng, f, 3, -1).unwrap());
            // a+b = 0.
            assert!(dd_star_commutator_check(&eng, f, 1, -1).unwrap());
            assert!(dd_star_commutator_check(&eng, f, -2, 2).unwrap());
            // a+b < 0.
            assert!(dd_star_commutator_check(&eng, f, -1, 0).unwrap());
            assert!(dd_star_commutator_check(&eng, f, -2, 1).unwrap());
        }
    }

    #[test]
    fn psi_b_phi_a_commutator_identity() {
        // (1/M)[Psi_b, Phi_a] = (qt/(qt-1)) nabla hbar_n[X(1/qt-1)] nabla^-1
        // for a, b >= 1, n = a + b.
        let eng = Engine::new(5);
        for (a, b) in [(1u32, 1u32), (2, 1), (1, 2)] {
            let n = a + b;
            let lhs = Operator::commutator(&Operator::psi(b), &Operator::phi(a))
                .scale(RatQT::big_m().inv());
            let alphabet = AlphabetExpr::new(0).with_x_term(
                &RatQT::qt().inv() - &RatQT::one(),
                vec![],
                false,
            );
            let h = SymFunc::h_k(n).plethysm_closed(&alphabet);
            let c = &RatQT::qt() / &(&RatQT::qt() - &RatQT::one());
            let rhs = Operator::mul_by("h", h).nabla_conjugate().scale(c);
            assert!(operators_agree(&eng, &lhs, &rhs, 2).unwrap(), "(a,b)=({},{})", a, b);
        }
    }

    #[test]
    fn constant_term_formula_matches_direct_action() {
        let eng = Engine::new(8);
        let f = SymFunc::s(pt(&[1]));
        for word in [vec![1i64], vec![0, 1], vec![2, 1], vec![1, 1, 1]] {
            // Direct: apply D_{a_1} first (rightmost letter).
            let mut direct = f.clone();
            for &k in &word {
                direct = Operator::d(k).apply(&eng, &direct).unwrap();
            }
            let base = f.max_degree() as i64
                + word.iter().map(|a| a.abs()).sum::<i64>()
                + word.len() as i64;
            for pad in [base, base + 1] {
                let ct = d_word_constant_term(&eng, &word, &f, pad).unwrap();
                assert_eq!(ct, direct, "word {:?} pad {}", word, pad);
            }
        }
    }
}
