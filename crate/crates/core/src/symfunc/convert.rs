//! Basis conversions. Everything routes through the power-sum basis:
//!
//! - e_n, h_n, s_lambda expand into p by closed formulas (cycle-type sums and
//!   Murnaghan-Nakayama characters);
//! - p_n expands into e/h by Newton's identities, recursively;
//! - the p <-> m transition matrices per degree come from expanding power
//!   sums in n variables and reading off monomial coefficients; m -> p is the
//!   exact inverse matrix.
//!
//! Transition data is cached per degree, write-once.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{self, Matrix};
use crate::partitions::{partitions_of, Partition};
use crate::qt::{MPolyQT, RatQT};

use super::{Basis, SymFunc};

fn ratio(num: BigInt, den: BigInt) -> RatQT {
    RatQT::new(MPolyQT::constant(num), MPolyQT::constant(den))
}

/// h_n = sum_{lambda |- n} p_lambda / z_lambda.
fn h_in_p(n: u32) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum);
    for la in partitions_of(n) {
        let c = ratio(BigInt::from(1), la.z_mu());
        f.set_coeff(la, c);
    }
    f
}

/// e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda.
fn e_in_p(n: u32) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum);
    for la in partitions_of(n) {
        let sign = if (n as usize - la.len()) % 2 == 0 { 1 } else { -1 };
        let c = ratio(BigInt::from(sign), la.z_mu());
        f.set_coeff(la, c);
    }
    f
}

/// s_lambda = sum_{mu |- n} chi^lambda_mu p_mu / z_mu.
fn s_in_p(lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::zero(Basis::PowerSum);
    for mu in partitions_of(lambda.size()) {
        let chi = super::chars::character(lambda, &mu);
        if !chi.is_zero() {
            f.set_coeff(mu.clone(), ratio(chi, mu.z_mu()));
        }
    }
    f
}

/// Multiply two functions whose basis is multiplicative (p, e, h): indexing
/// partitions concatenate.
fn mul_multiplicative(basis: Basis, a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut r = SymFunc::zero(basis);
    for (la, ca) in a.coeffs() {
        for (mu, cb) in b.coeffs() {
            let mut parts = la.parts().to_vec();
            parts.extend_from_slice(mu.parts());
            r.add_coeff(Partition::from_unsorted(parts), &(ca * cb));
        }
    }
    r
}

/// p_n in the h-basis via Newton's identity
/// p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}.
fn p_in_h(n: u32) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<u32, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let mut f = SymFunc::basis_element(Basis::Homogeneous, Partition::single(n))
        .scale(&RatQT::from_int(n as i64));
    for i in 1..n {
        let hi = SymFunc::basis_element(Basis::Homogeneous, Partition::single(i));
        f = f.sub(&mul_multiplicative(Basis::Homogeneous, &hi, &p_in_h(n - i)));
    }
    cache.lock().unwrap().insert(n, f.clone());
    f
}

/// p_n in the e-basis via Newton's identity
/// p_n = (-1)^{n-1} (n e_n - sum_{i=1}^{n-1} (-1)^{i-1} p_i e_{n-i}).
fn p_in_e(n: u32) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<u32, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let mut f = SymFunc::basis_element(Basis::Elementary, Partition::single(n))
        .scale(&RatQT::from_int(n as i64));
    for i in 1..n {
        let ei = SymFunc::basis_element(Basis::Elementary, Partition::single(n - i));
        let term = mul_multiplicative(Basis::Elementary, &p_in_e(i), &ei);
        if i % 2 == 1 {
            f = f.sub(&term);
        } else {
            f = f.add(&term);
        }
    }
    if n % 2 == 0 {
        f = f.neg();
    }
    cache.lock().unwrap().insert(n, f.clone());
    f
}

/// Expand p_lambda in n = |lambda| variables and collect coefficients at the
/// partition-shaped monomials; returns the matrix p_in_m[lambda][mu].
fn p_in_m_matrix(n: u32) -> (Vec<Partition>, Matrix) {
    let parts_list = partitions_of(n);
    let index: HashMap<Partition, usize> = parts_list
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let nv = n.max(1) as usize;
    let mut matrix: Matrix = Vec::with_capacity(parts_list.len());
    for la in &parts_list {
        // Expand prod_i (x_1^{la_i} + ... + x_nv^{la_i}).
        let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::new();
        poly.insert(vec![0; nv], BigInt::from(1));
        for &part in la.parts() {
            let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
            for (exp, c) in &poly {
                for v in 0..nv {
                    let mut e2 = exp.clone();
                    e2[v] += part;
                    *next.entry(e2).or_insert_with(BigInt::zero) += c;
                }
            }
            poly = next;
        }
        let mut row = vec![RatQT::zero(); parts_list.len()];
        for (exp, c) in poly {
            let mut sorted = exp.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted == exp {
                let mu = Partition::from_unsorted(exp);
                row[index[&mu]] = RatQT::from_poly(MPolyQT::constant(c));
            }
        }
        matrix.push(row);
    }
    (parts_list, matrix)
}

struct MTables {
    parts: Vec<Partition>,
    p_in_m: Matrix,
    m_in_p: Matrix,
}

fn m_tables(n: u32) -> &'static MTables {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static MTables>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return t;
    }
    let (parts, p_in_m) = p_in_m_matrix(n);
    let m_in_p = linalg::invert(&p_in_m).expect("p/m transition matrix invertible");
    let tables: &'static MTables = Box::leak(Box::new(MTables {
        parts,
        p_in_m,
        m_in_p,
    }));
    guard.insert(n, tables);
    tables
}

/// Convert a single degree-homogeneous piece between p and m.
fn p_m_apply(f: &SymFunc, to_m: bool) -> SymFunc {
    let mut out = SymFunc::zero(if to_m { Basis::Monomial } else { Basis::PowerSum });
    for d in f.degrees() {
        let t = m_tables(d);
        let matrix = if to_m { &t.p_in_m } else { &t.m_in_p };
        let piece = f.homogeneous_component(d);
        for (mu, c) in piece.coeffs() {
            let i = t.parts.iter().position(|p| p == mu).expect("indexed partition");
            for (j, entry) in matrix[i].iter().enumerate() {
                if !entry.is_zero() {
                    out.add_coeff(t.parts[j].clone(), &(c * entry));
                }
            }
        }
    }
    out
}

pub fn to_p(f: &SymFunc) -> SymFunc {
    match f.basis() {
        Basis::PowerSum => f.clone(),
        Basis::Homogeneous | Basis::Elementary => {
            let single = |k: u32| match f.basis() {
                Basis::Homogeneous => h_in_p(k),
                _ => e_in_p(k),
            };
            let mut out = SymFunc::zero(Basis::PowerSum);
            for (la, c) in f.coeffs() {
                let mut term = SymFunc::one();
                for &part in la.parts() {
                    term = term.mul(&single(part));
                }
                for (mu, v) in term.coeffs() {
                    out.add_coeff(mu.clone(), &(v * c));
                }
            }
            out
        }
        Basis::Schur => {
            let mut out = SymFunc::zero(Basis::PowerSum);
            for (la, c) in f.coeffs() {
                for (mu, v) in s_in_p(la).coeffs() {
                    out.add_coeff(mu.clone(), &(v * c));
                }
            }
            out
        }
        Basis::Monomial => p_m_apply(f, false),
    }
}

pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis() == target {
        return f.clone();
    }
    let p = to_p(f);
    match target {
        Basis::PowerSum => p,
        Basis::Monomial => p_m_apply(&p, true),
        Basis::Schur => {
            // p_mu = sum_lambda chi^lambda_mu s_lambda.
            let mut out = SymFunc::zero(Basis::Schur);
            for (mu, c) in p.coeffs() {
                for la in partitions_of(mu.size()) {
                    let chi = super::chars::character(&la, mu);
                    if !chi.is_zero() {
                        out.add_coeff(la, &(c * &RatQT::from_poly(MPolyQT::constant(chi))));
                    }
                }
            }
            out
        }
        Basis::Homogeneous | Basis::Elementary => {
            let single = |k: u32| match target {
                Basis::Homogeneous => p_in_h(k),
                _ => p_in_e(k),
            };
            let mut out = SymFunc::zero(target);
            for (mu, c) in p.coeffs() {
                let mut term = SymFunc::basis_element(target, Partition::empty());
                for &part in mu.parts() {
                    term = mul_multiplicative(target, &term, &single(part));
                }
                for (la, v) in term.coeffs() {
                    out.add_coeff(la.clone(), &(v * c));
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::SymFunc;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree_one_bases_agree() {
        let p1 = SymFunc::p_k(1);
        for b in [Basis::Monomial, Basis::Elementary, Basis::Homogeneous, Basis::Schur] {
            let conv = p1.convert(b);
            assert_eq!(conv.coeffs().len(), 1);
            assert!(conv.coeff(&pt(&[1])).is_one());
        }
    }

    #[test]
    fn e2_in_p_is_newton() {
        // e_2 = (p_1^2 - p_2)/2.
        let e2 = SymFunc::e_k(2);
        assert_eq!(e2.coeff(&pt(&[1, 1])), RatQT::from_ratio(1, 2));
        assert_eq!(e2.coeff(&pt(&[2])), RatQT::from_ratio(-1, 2));
    }

    #[test]
    fn h2_in_m_basis() {
        // h_2 = m_2 + m_{1,1}.
        let h2 = SymFunc::h_k(2).convert(Basis::Monomial);
        assert!(h2.coeff(&pt(&[2])).is_one());
        assert!(h2.coeff(&pt(&[1, 1])).is_one());
        assert_eq!(h2.num_terms(), 2);
    }

    #[test]
    fn round_trips_to_degree_six() {
        for n in 0..=6u32 {
            for mu in partitions_of(n) {
                for b in [
                    Basis::Monomial,
                    Basis::Elementary,
                    Basis::Homogeneous,
                    Basis::Schur,
                ] {
                    let f = SymFunc::basis_element(b, mu.clone());
                    let back = f.to_p().convert(b);
                    assert_eq!(back, f, "round trip {:?} {}", b, mu);
                }
            }
        }
    }

    #[test]
    fn schur_orthonormal_under_hall() {
        for n in 1..=4u32 {
            for la in partitions_of(n) {
                for mu in partitions_of(n) {
                    let v = SymFunc::s(la.clone()).hall_scalar(&SymFunc::s(mu.clone()));
                    if la == mu {
                        assert!(v.is_one());
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_degree_three_spot_check() {
        // s_{2,1} = h_2 h_1 - h_3.
        let lhs = SymFunc::s(pt(&[2, 1]));
        let rhs = SymFunc::h_k(2).mul(&SymFunc::h_k(1)).sub(&SymFunc::h_k(3));
        assert_eq!(lhs, rhs);
    }
}
