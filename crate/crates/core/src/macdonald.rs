//! Modified Macdonald polynomials H~_mu and the nabla operator.
//!
//! - H~_mu is built by Gram-Schmidt under the star scalar product on the
//!   family s_mu[X/(t-1)], processed in ascending lexicographic order of mu,
//!   and normalized so the coefficient of s_{(n)} is 1. The construction
//!   asserts the expected norm <H~_mu, H~_mu>_* = w_mu.
//! - Expansions over the H~ basis use orthogonality:
//!   c_mu = <f, H~_mu>_* / w_mu.
//! - nabla scales the H~ expansion by the eigenvalues T_mu; conjugation by
//!   nabla and its inverse is exact.
//!
//! An [`Engine`] holds the degree cap and the H~ cache; every entry point
//! refuses inputs above the cap with an explicit error.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::qt::RatQT;
use crate::symfunc::{AlphabetExpr, Basis, SymFunc};

/// Exact evaluation context: degree cap plus caches. The H~ cache is global
/// (keyed by partition only — entries do not depend on the cap), so engines
/// with different caps share the expensive Gram-Schmidt work.
pub struct Engine {
    cap: u32,
}

fn htilde_cache() -> &'static Mutex<HashMap<Partition, SymFunc>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<Partition, SymFunc>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Engine {
    pub fn new(cap: u32) -> Self {
        Engine { cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Error out when work at this degree would exceed the cap.
    pub fn check_degree(&self, degree: u32, context: &str) -> Result<()> {
        if degree > self.cap {
            return Err(Error::DegreeCapExceeded {
                cap: self.cap,
                degree,
                context: context.to_string(),
            });
        }
        Ok(())
    }

    /// The modified Macdonald polynomial H~_mu in the p-basis.
    pub fn htilde(&self, mu: &Partition) -> Result<SymFunc> {
        self.check_degree(mu.size(), "htilde")?;
        if let Some(f) = htilde_cache().lock().unwrap().get(mu) {
            return Ok(f.clone());
        }
        // Build the whole degree at once: ascending-lex Gram-Schmidt.
        let n = mu.size();
        let mut order = partitions_of(n);
        order.reverse(); // ascending lex: (1^n) first, (n) last
        let tm1_inv = (&RatQT::t() - &RatQT::one()).inv();
        let seed_alphabet = AlphabetExpr::new(0).with_x_term(tm1_inv, vec![], false);
        let s_row = SymFunc::s(Partition::single(n));
        let mut built: Vec<(Partition, SymFunc)> = Vec::new();
        for la in order {
            let mut g = SymFunc::s(la.clone()).plethysm_closed(&seed_alphabet);
            for (prev, h) in &built {
                let c = &g.star_scalar(h) / &prev.w_mu();
                g = g.sub(&h.scale(&c));
            }
            // Normalize: coefficient of s_{(n)} equals 1.
            let lead = g.hall_scalar(&s_row);
            if lead.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "htilde normalization failed at {}",
                    la
                )));
            }
            g = g.scale(&lead.inv());
            let norm = g.star_scalar(&g);
            if norm != la.w_mu() {
                return Err(Error::InvalidArgument(format!(
                    "htilde norm mismatch at {}: got {}",
                    la, norm
                )));
            }
            built.push((la, g));
        }
        let mut cache = htilde_cache().lock().unwrap();
        for (la, h) in built {
            cache.insert(la, h);
        }
        Ok(cache.get(mu).expect("degree fully built").clone())
    }

    /// Expand f over the H~ basis: f = sum_mu c_mu H~_mu.
    pub fn htilde_expand(&self, f: &SymFunc) -> Result<BTreeMap<Partition, RatQT>> {
        self.check_degree(f.max_degree(), "htilde_expand")?;
        let fp = f.to_p();
        let mut out = BTreeMap::new();
        for d in fp.degrees() {
            let piece = fp.homogeneous_component(d);
            for mu in partitions_of(d) {
                let h = self.htilde(&mu)?;
                let c = &piece.star_scalar(&h) / &mu.w_mu();
                if !c.is_zero() {
                    out.insert(mu, c);
                }
            }
        }
        Ok(out)
    }

    /// Rebuild a symmetric function from an H~ expansion.
    pub fn from_htilde(&self, coeffs: &BTreeMap<Partition, RatQT>) -> Result<SymFunc> {
        let mut f = SymFunc::zero(Basis::PowerSum);
        for (mu, c) in coeffs {
            f = f.add(&self.htilde(mu)?.scale(c));
        }
        Ok(f)
    }

    /// nabla: H~_mu -> T_mu H~_mu, extended linearly.
    pub fn nabla(&self, f: &SymFunc) -> Result<SymFunc> {
        self.nabla_power(f, 1)
    }

    /// nabla^{-1}.
    pub fn nabla_inv(&self, f: &SymFunc) -> Result<SymFunc> {
        self.nabla_power(f, -1)
    }

    /// nabla^k for any integer k (T_mu is invertible).
    pub fn nabla_power(&self, f: &SymFunc, k: i64) -> Result<SymFunc> {
        let coeffs = self.htilde_expand(f)?;
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (mu, c) in coeffs {
            let scaled = &c * &mu.t_mu().pow(k);
            out = out.add(&self.htilde(&mu)?.scale(&scaled));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn htilde_degree_two_closed_forms() {
        let eng = Engine::new(6);
        // H~_{(2)} = s_2 + q s_{1,1}; H~_{(1,1)} = s_2 + t s_{1,1}.
        let h2 = eng.htilde(&pt(&[2])).unwrap();
        let expect2 = SymFunc::s(pt(&[2])).add(&SymFunc::s(pt(&[1, 1])).scale(&RatQT::q()));
        assert_eq!(h2, expect2);
        let h11 = eng.htilde(&pt(&[1, 1])).unwrap();
        let expect11 = SymFunc::s(pt(&[2])).add(&SymFunc::s(pt(&[1, 1])).scale(&RatQT::t()));
        assert_eq!(h11, expect11);
    }

    #[test]
    fn htilde_qt_symmetry() {
        // H~_{mu'}(q,t) = H~_mu(t,q).
        let eng = Engine::new(5);
        for n in 1..=5u32 {
            for mu in partitions_of(n) {
                let a = eng.htilde(&mu).unwrap();
                let b = eng.htilde(&mu.conjugate()).unwrap();
                let mut swapped = SymFunc::zero(Basis::PowerSum);
                for (la, c) in b.to_p().coeffs() {
                    swapped.add_coeff(la.clone(), &c.swap_qt());
                }
                assert_eq!(a, swapped, "mu = {}", mu);
            }
        }
    }

    #[test]
    fn htilde_gram_matrix_is_diagonal_w() {
        let eng = Engine::new(5);
        for n in 1..=5u32 {
            let ps = partitions_of(n);
            for la in &ps {
                for mu in &ps {
                    let v = eng
                        .htilde(la)
                        .unwrap()
                        .star_scalar(&eng.htilde(mu).unwrap());
                    if la == mu {
                        assert_eq!(v, mu.w_mu());
                    } else {
                        assert!(v.is_zero(), "<H{}, H{}>_*", la, mu);
                    }
                }
            }
        }
    }

    #[test]
    fn htilde_specializations() {
        // At q = t = 1 all coefficients sum to n! over ... simplest check:
        // sum of s-basis coefficients of H~_mu at q=t=1 is n! / prod of
        // hook-free... instead use <H~_mu, p_1^n> = |mu|!? Use the clean one:
        // the coefficient of s_{(1^n)} is T_mu.
        let eng = Engine::new(5);
        for n in 1..=5u32 {
            for mu in partitions_of(n) {
                let h = eng.htilde(&mu).unwrap();
                let c = h.hall_scalar(&SymFunc::s(Partition::from_unsorted(vec![1; n as usize])));
                assert_eq!(c, mu.t_mu(), "bottom coefficient at {}", mu);
            }
        }
    }

    #[test]
    fn nabla_eigenvalues_and_inverse() {
        let eng = Engine::new(4);
        for n in 1..=4u32 {
            for mu in partitions_of(n) {
                let h = eng.htilde(&mu).unwrap();
                assert_eq!(eng.nabla(&h).unwrap(), h.scale(&mu.t_mu()));
                assert_eq!(eng.nabla_inv(&eng.nabla(&h).unwrap()).unwrap(), h);
            }
        }
    }

    #[test]
    fn nabla_en_is_qt_catalan_positive() {
        let eng = Engine::new(4);
        let ne2 = eng.nabla(&SymFunc::e_k(2)).unwrap();
        // e_2 = s_{1,1} = (H~_{(2)} - H~_{(1,1)})/(q - t), so
        // nabla e_2 = (q H~_{(2)} - t H~_{(1,1)})/(q - t).
        let h2 = eng.htilde(&pt(&[2])).unwrap();
        let h11 = eng.htilde(&pt(&[1, 1])).unwrap();
        let d = (&RatQT::q() - &RatQT::t()).inv();
        let expect = h2
            .scale(&RatQT::q())
            .sub(&h11.scale(&RatQT::t()))
            .scale(&d);
        assert_eq!(ne2, expect);
        // Schur expansion: nabla e_2 = s_2 + (q + t) s_{1,1}; the s_{1^n}
        // coefficient is the q,t-Catalan number.
        let s = ne2.convert(Basis::Schur);
        assert_eq!(s.coeff(&pt(&[2])), RatQT::one());
        assert_eq!(s.coeff(&pt(&[1, 1])), &RatQT::q() + &RatQT::t());
    }

    #[test]
    fn cap_is_enforced() {
        let eng = Engine::new(3);
        assert!(matches!(
            eng.htilde(&pt(&[4])),
            Err(Error::DegreeCapExceeded { .. })
        ));
        assert!(eng.nabla(&SymFunc::e_k(4)).is_err());
    }
}
