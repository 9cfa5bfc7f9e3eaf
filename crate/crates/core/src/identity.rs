//! Exact big-integer evaluation of both sides of the two convolution
//! identities for central binomial coefficients.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

/// Arbitrary-precision count.
pub type BigCount = BigUint;

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is
/// exact.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::default();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(2m, m)` for `m = 0..=max`, each from [`binomial`].
pub fn central_binomials(max: usize) -> Vec<BigCount> {
    (0..=max as u64).map(|m| binomial(2 * m, m)).collect()
}

fn pair_convolution(central: &[BigCount], m: usize) -> BigCount {
    (0..=m).map(|i| &central[i] * &central[m - i]).sum()
}

/// `(4^n, Σ_i C(2i,i) C(2(n-i),n-i))`.
pub fn check_identity_soccer(n: usize) -> (BigCount, BigCount) {
    let central = central_binomials(n);
    (BigCount::one() << (2 * n), pair_convolution(&central, n))
}

/// `((2n+1) C(2n,n), Σ_{i+j+k=n} C(2i,i) C(2j,j) C(2k,k))`.
///
/// The triple sum is evaluated as `Σ_i C(2i,i) Σ_{j+k=n-i} C(2j,j) C(2k,k)`.
pub fn check_identity_hockey(n: usize) -> (BigCount, BigCount) {
    let central = central_binomials(n);
    let pairs: Vec<_> = (0..=n).map(|m| pair_convolution(&central, m)).collect();
    let rhs = (0..=n).map(|i| &central[i] * &pairs[n - i]).sum();
    (binomial(2 * n as u64, n as u64) * (2 * n as u64 + 1), rhs)
}

/// Both identities for every `n` in `0..=max`, sharing the tables of central
/// binomials and pair convolutions.
pub struct IdentitySweep {
    central: Vec<BigCount>,
    pairs: Vec<BigCount>,
}

/// Both sides of both identities at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityValues {
    pub n: usize,
    pub soccer: (BigCount, BigCount),
    pub hockey: (BigCount, BigCount),
}

impl IdentityValues {
    pub fn holds(&self) -> bool {
        self.soccer.0 == self.soccer.1 && self.hockey.0 == self.hockey.1
    }
}

impl IdentitySweep {
    pub fn new(max: usize) -> Self {
        let central = central_binomials(max);
        let pairs = (0..=max).map(|m| pair_convolution(&central, m)).collect();
        IdentitySweep { central, pairs }
    }

    pub fn max(&self) -> usize {
        self.central.len() - 1
    }

    pub fn at(&self, n: usize) -> IdentityValues {
        let triple = (0..=n).map(|i| &self.central[i] * &self.pairs[n - i]).sum();
        IdentityValues {
            n,
            soccer: (BigCount::one() << (2 * n), self.pairs[n].clone()),
            hockey: (&self.central[n] * (2 * n as u64 + 1), triple),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = IdentityValues> + '_ {
        (0..=self.max()).map(|n| self.at(n))
    }
}
