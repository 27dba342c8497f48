//! Randomized structural properties: exact-arithmetic axioms, basis
//! conversion round-trips, partition involutions, and symmetry of orbit
//! sums.

use proptest::prelude::*;

use plethys::partitions::Partition;
use plethys::qt::{MPolyQT, RatQT};
use plethys::symfunc::{Basis, SymFunc};
use plethys::zlaurent::{sym_group, OrbitMode, ZLaurent};

fn small_poly() -> impl Strategy<Value = MPolyQT> {
    // Up to three terms c * q^a t^b with small exponents and coefficients.
    proptest::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..3).prop_map(|terms| {
        let mut p = MPolyQT::zero();
        for ((a, b), c) in terms {
            p = p.add(&MPolyQT::monomial(a, b, c.into()));
        }
        p
    })
}

fn small_rat() -> impl Strategy<Value = RatQT> {
    (small_poly(), small_poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatQT::from_poly(n)
        } else {
            RatQT::new(n, d)
        }
    })
}

// Total size stays small: basis conversion cost grows with the number of
// partitions of the degree.
fn small_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=3, 0..3).prop_map(Partition::from_unsorted)
}

fn small_symfunc() -> impl Strategy<Value = SymFunc> {
    proptest::collection::vec((small_partition(), -3i64..=3), 0..4).prop_map(|terms| {
        let mut f = SymFunc::zero(Basis::PowerSum);
        for (mu, c) in terms {
            f.add_coeff(mu, &RatQT::from_int(c));
        }
        f
    })
}

fn small_laurent() -> impl Strategy<Value = ZLaurent> {
    proptest::collection::vec(
        (proptest::collection::vec(-2i64..=2, 3), -3i64..=3),
        0..4,
    )
    .prop_map(|terms| {
        let mut f = ZLaurent::zero(3);
        for (zexp, c) in terms {
            f.add_term(zexp, &RatQT::from_int(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&(&b * &b.inv()) - &RatQT::one()).is_zero());
        }
    }

    #[test]
    fn canonical_form_is_representation_independent(a in small_rat(), s in small_poly()) {
        // Scaling numerator and denominator by the same nonzero polynomial
        // leaves the canonical form untouched.
        prop_assume!(!s.is_zero());
        let scaled = RatQT::new(a.numerator().mul(&s), a.denominator().mul(&s));
        prop_assert_eq!(scaled, a);
    }

    #[test]
    fn conjugation_is_an_involution(mu in small_partition()) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn basis_conversions_round_trip(f in small_symfunc()) {
        for basis in [
            Basis::Monomial,
            Basis::Elementary,
            Basis::Homogeneous,
            Basis::Schur,
        ] {
            prop_assert_eq!(f.convert(basis).to_p(), f.clone());
        }
    }

    #[test]
    fn omega_is_an_involution_and_ring_map(f in small_symfunc(), g in small_symfunc()) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.mul(&g).omega(), f.omega().mul(&g.omega()));
    }

    #[test]
    fn orbit_sums_transform_correctly(f in small_laurent()) {
        // Symmetrization is fixed by a transposition; antisymmetrization
        // flips sign; normal form certifies antisymmetrized vanishing.
        let swap = [1usize, 0, 2];
        let sym = sym_group(&f, 0, 2, OrbitMode::Sym).unwrap();
        prop_assert_eq!(sym.permute(&swap), sym.clone());
        let asym = sym_group(&f, 0, 2, OrbitMode::Asym).unwrap();
        prop_assert_eq!(asym.permute(&swap), asym.neg());
        prop_assert_eq!(asym.is_zero(), f.normal_form().is_zero());
    }
}
