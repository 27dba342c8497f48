//! Symmetric-group characters chi^lambda_mu by the Murnaghan-Nakayama rule,
//! computed on beta-sets: removing a rim hook of length r from lambda is
//! replacing a beta-number b by b-r (when b-r is not already present), with
//! sign (-1)^{number of beta-numbers strictly between b-r and b}.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

fn beta_set(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i) as u32)
        .collect()
}

fn mn_recurse(beta: &mut Vec<u32>, mu: &[u32]) -> BigInt {
    let Some((&r, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    let mut total = BigInt::zero();
    for i in 0..beta.len() {
        let b = beta[i];
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| target < x && x < b).count();
        beta[i] = target;
        let sub = mn_recurse(beta, rest);
        beta[i] = b;
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

/// chi^lambda_mu for |lambda| = |mu|.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), mu.size(), "character needs equal sizes");
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(lambda.clone(), mu.clone())) {
        return v.clone();
    }
    let mut beta = beta_set(lambda);
    let v = mn_recurse(&mut beta, mu.parts());
    cache
        .lock()
        .unwrap()
        .insert((lambda.clone(), mu.clone()), v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn known_small_characters() {
        // Trivial representation: chi^{(n)}_mu = 1.
        for mu in partitions_of(4) {
            assert_eq!(character(&pt(&[4]), &mu), BigInt::one());
        }
        // Sign representation: chi^{(1^n)}_mu = (-1)^{n - l(mu)}.
        for mu in partitions_of(4) {
            let sign = if (4 - mu.len() as u32) % 2 == 0 { 1 } else { -1 };
            assert_eq!(character(&pt(&[1, 1, 1, 1]), &mu), BigInt::from(sign));
        }
        // Standard representation of S_3: chi^{(2,1)} on classes (1^3),(2,1),(3).
        assert_eq!(character(&pt(&[2, 1]), &pt(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(character(&pt(&[2, 1]), &pt(&[2, 1])), BigInt::from(0));
        assert_eq!(character(&pt(&[2, 1]), &pt(&[3])), BigInt::from(-1));
    }

    #[test]
    fn column_orthogonality_degree_5() {
        // sum_lambda chi^lambda_mu chi^lambda_nu = z_mu [mu = nu].
        let ps = partitions_of(5);
        for mu in &ps {
            for nu in &ps {
                let mut s = BigInt::zero();
                for lam in &ps {
                    s += character(lam, mu) * character(lam, nu);
                }
                let expect = if mu == nu { mu.z_mu() } else { BigInt::zero() };
                assert_eq!(s, expect);
            }
        }
    }
}
