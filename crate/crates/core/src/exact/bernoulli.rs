use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use spin::Mutex;

use super::ratio;

static CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_k` with the convention `B_1 = -1/2`.
///
/// Uses the defining recurrence `sum_{j=0}^{k} C(k+1, j) B_j = 0` and keeps
/// every computed value in a process-wide table.
pub fn bernoulli(k: usize) -> BigRational {
    let mut table = CACHE.lock();
    if table.is_empty() {
        table.push(BigRational::one());
    }
    while table.len() <= k {
        let n = table.len();
        // Row n+1 of Pascal's triangle, entries 0..n.
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * &binom;
            }
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        let bn = -acc / BigRational::from_integer(BigInt::from(n + 1));
        table.push(bn);
    }
    table[k].clone()
}

/// `zeta(-k)` for `k >= 0`, exactly: `-1/2` at `k = 0`, `-B_{k+1}/(k+1)` otherwise.
pub fn zeta_neg_int(k: usize) -> BigRational {
    if k == 0 {
        return ratio(-1, 2);
    }
    -bernoulli(k + 1) / BigRational::from_integer(BigInt::from(k + 1))
}

/// Bernoulli numbers `B_0 ..= B_n` as a fresh vector.
#[allow(dead_code)]
pub(crate) fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = bernoulli(k);
    }
    out
}
