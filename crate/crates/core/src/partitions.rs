//! Integer partitions and the Macdonald statistics attached to them.
//!
//! Diagrams use the French convention: rows are indexed bottom-up, cells are
//! (row, col) with 0-based indices, so for a cell of mu:
//! arm = cells strictly east, leg = cells strictly north,
//! coarm = cells strictly west, coleg = cells strictly south.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qt::{MPolyQT, RatQT};

/// A partition: weakly decreasing list of positive parts.
///
/// The derived `Ord` is lexicographic on the part vector, so sorting a set of
/// partitions of equal size descending gives the descending-lex enumeration
/// order (which refines reverse dominance).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Outcome of a dominance-order comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("zero part in partition".into()));
        }
        Ok(Partition { parts })
    }

    /// Build from any multiset of positive parts (sorts descending, drops 0s).
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (0..max)
            .map(|col| self.parts.iter().filter(|&&p| p > col).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All cells (row, col) of the diagram, row-major from the bottom row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| (0..p as usize).map(move |col| (row, col)))
    }

    /// (arm, leg, coarm, coleg) of a cell.
    pub fn cell_stats(&self, cell: (usize, usize)) -> Result<(u32, u32, u32, u32)> {
        let (row, col) = cell;
        if row >= self.parts.len() || col >= self.parts[row] as usize {
            return Err(Error::CellOutsideDiagram {
                row,
                col,
                partition: self.to_string(),
            });
        }
        let arm = self.parts[row] as usize - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .filter(|&&p| p as usize > col)
            .count();
        Ok((arm as u32, leg as u32, col as u32, row as u32))
    }

    /// n(mu) = sum_i (i-1) mu_i = sum of colegs.
    pub fn n_stat(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    /// T_mu = t^{n(mu)} q^{n(mu')}.
    pub fn t_mu(&self) -> RatQT {
        RatQT::from_poly(MPolyQT::monomial(
            self.conjugate().n_stat(),
            self.n_stat(),
            BigInt::one(),
        ))
    }

    /// B_mu = sum over cells of t^{coleg} q^{coarm}.
    pub fn b_mu(&self) -> RatQT {
        let mut p = MPolyQT::zero();
        for (row, col) in self.cells() {
            p = p.add(&MPolyQT::monomial(col as u32, row as u32, BigInt::one()));
        }
        RatQT::from_poly(p)
    }

    /// w_mu = prod over cells of (q^arm - t^{leg+1})(t^leg - q^{arm+1}).
    pub fn w_mu(&self) -> RatQT {
        let mut p = MPolyQT::one();
        for cell in self.cells() {
            let (a, l, _, _) = self.cell_stats(cell).expect("own cell");
            let f1 = MPolyQT::monomial(a, 0, BigInt::one())
                .sub(&MPolyQT::monomial(0, l + 1, BigInt::one()));
            let f2 = MPolyQT::monomial(0, l, BigInt::one())
                .sub(&MPolyQT::monomial(a + 1, 0, BigInt::one()));
            p = p.mul(&f1).mul(&f2);
        }
        RatQT::from_poly(p)
    }

    /// D_mu = M*B_mu - 1.
    pub fn d_mu(&self) -> RatQT {
        &(&RatQT::big_m() * &self.b_mu()) - &RatQT::one()
    }

    /// D_mu(1/q, 1/t).
    pub fn d_mu_inverted(&self) -> RatQT {
        self.d_mu().invert_qt()
    }

    /// z_mu = prod_i i^{m_i} m_i! where m_i is the multiplicity of i.
    pub fn z_mu(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut run = 0u32;
        let mut prev = 0u32;
        for &p in &self.parts {
            if p == prev {
                run += 1;
            } else {
                prev = p;
                run = 1;
            }
            z *= BigInt::from(p) * BigInt::from(run);
        }
        z
    }

    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::DominanceSizeMismatch(self.size(), other.size()));
        }
        if self == other {
            return Ok(Dominance::Equal);
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut s1, mut s2) = (0i64, 0i64);
        let (mut le, mut ge) = (true, true);
        for i in 0..len {
            s1 += *self.parts.get(i).unwrap_or(&0) as i64;
            s2 += *other.parts.get(i).unwrap_or(&0) as i64;
            if s1 < s2 {
                ge = false;
            }
            if s1 > s2 {
                le = false;
            }
        }
        Ok(match (le, ge) {
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (false, false) => Dominance::Incomparable,
            (true, true) => Dominance::Equal,
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions of n in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size 0..=n, degree by degree.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cell_stats_examples() {
        assert_eq!(pt(&[1]).cell_stats((0, 0)).unwrap(), (0, 0, 0, 0));
        assert_eq!(pt(&[2, 1]).cell_stats((0, 0)).unwrap(), (1, 1, 0, 0));
        assert_eq!(pt(&[3, 2]).cell_stats((0, 1)).unwrap(), (1, 1, 1, 0));
        assert!(pt(&[2, 1]).cell_stats((1, 1)).is_err());
    }

    #[test]
    fn stats_small_cases() {
        let empty = Partition::empty();
        assert!(empty.b_mu().is_zero());
        assert!(empty.t_mu().is_one());
        assert_eq!(empty.d_mu(), RatQT::from_int(-1));

        let one = pt(&[1]);
        assert!(one.b_mu().is_one());
        assert!(one.t_mu().is_one());
        assert_eq!(one.w_mu(), RatQT::big_m());

        let two = pt(&[2]);
        assert_eq!(two.t_mu(), RatQT::q());
        assert_eq!(two.b_mu(), &RatQT::one() + &RatQT::q());
    }

    #[test]
    fn conjugate_involution_and_size() {
        for n in 0..=7 {
            for mu in partitions_of(n) {
                let c = mu.conjugate();
                assert_eq!(c.size(), mu.size());
                assert_eq!(c.conjugate(), mu);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn descending_lex_order() {
        let ps = partitions_of(4);
        let strs: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn w_mu_conjugation_symmetry() {
        // w_mu(q,t) = w_{mu'}(t,q) for |mu| <= 6.
        for n in 0..=6 {
            for mu in partitions_of(n) {
                assert_eq!(mu.w_mu(), mu.conjugate().w_mu().swap_qt());
            }
        }
    }

    #[test]
    fn b_mu_has_size_many_unit_monomials() {
        for n in 0..=6 {
            for mu in partitions_of(n) {
                let b = mu.b_mu();
                assert!(b.is_polynomial());
                assert_eq!(b.numerator().num_terms(), mu.size() as usize);
                assert!(b.numerator().terms().all(|(_, c)| c.is_one()));
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(
            pt(&[2]).dominance(&pt(&[1, 1])).unwrap(),
            Dominance::Greater
        );
        assert_eq!(pt(&[2, 1]).dominance(&pt(&[2, 1])).unwrap(), Dominance::Equal);
        assert_eq!(
            pt(&[3, 1, 1, 1]).dominance(&pt(&[2, 2, 2])).unwrap(),
            Dominance::Incomparable
        );
        assert!(pt(&[2]).dominance(&pt(&[1])).is_err());
    }

    #[test]
    fn z_mu_values() {
        assert_eq!(pt(&[1, 1, 1]).z_mu(), BigInt::from(6));
        assert_eq!(pt(&[2, 1]).z_mu(), BigInt::from(2));
        assert_eq!(pt(&[3]).z_mu(), BigInt::from(3));
        assert_eq!(pt(&[2, 2]).z_mu(), BigInt::from(8));
    }

    #[test]
    fn descending_lex_refines_reverse_dominance() {
        // If lambda dominates mu strictly then lambda comes earlier (is larger).
        for n in 0..=7 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    if a.dominance(b).unwrap() == Dominance::Greater {
                        assert!(a > b);
                    }
                }
            }
        }
    }
}
