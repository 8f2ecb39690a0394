use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::rational::{big, int};
use crate::algebra::Rational;
use crate::memo::Memo;

static FACTORIAL: LazyLock<Memo<u32, BigInt>> = LazyLock::new(Memo::new);
static BERNOULLI: LazyLock<Memo<u32, Rational>> = LazyLock::new(Memo::new);
static STIRLING1: LazyLock<Memo<(u32, u32), BigInt>> = LazyLock::new(Memo::new);
static STIRLING2: LazyLock<Memo<(u32, u32), BigInt>> = LazyLock::new(Memo::new);

pub fn factorial(n: u32) -> BigInt {
    FACTORIAL.get_or_insert_with(&n, || (1..=n).map(BigInt::from).product())
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bernoulli numbers with `b₁ = -1/2`, from `Σ_{k≤m} binom(m+1, k) b_k = 0`.
pub fn bernoulli(n: u32) -> Rational {
    BERNOULLI.get_or_insert_with(&n, || {
        if n == 0 {
            return int(1);
        }
        if n > 1 && n % 2 == 1 {
            return int(0);
        }
        let sum = (0..n).fold(int(0), |acc, k| acc + big(binomial(n + 1, k)) * bernoulli(k));
        -sum / big(n + 1)
    })
}

/// Unsigned Stirling numbers of the first kind: `x(x+1)…(x+n-1) = Σ_k S₁(n,k) x^k`.
pub fn stirling1(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if k == n {
        return BigInt::one();
    }
    if k == 0 {
        return BigInt::zero();
    }
    STIRLING1.get_or_insert_with(&(n, k), || {
        BigInt::from(n - 1) * stirling1(n - 1, k) + stirling1(n - 1, k - 1)
    })
}

/// Stirling numbers of the second kind, `(1/k!) Σ_i (-1)^i binom(k,i) (k-i)^n`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    STIRLING2.get_or_insert_with(&(n, k), || {
        let sum: BigInt = (0..=k)
            .map(|i| {
                let term = binomial(k, i) * BigInt::from(k - i).pow(n);
                if i % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        sum / factorial(k)
    })
}

/// `S₂(i, j)` recovered from first-kind numbers alone, by inverting the
/// unitriangular matrix `((-1)^{i+j} S₁(i,j))` as a finite Neumann series:
/// every chain `i > t₁ > … > t_k > j` contributes
/// `(-1)^{i+j+k+1} S₁(i,t₁)…S₁(t_k,j)`, and the direct term is
/// `-(-1)^{i+j} S₁(i,j)`.
pub fn stirling2_via_s1(i: u32, j: u32) -> Rational {
    if j > i {
        return int(0);
    }
    if i == j {
        return int(1);
    }
    let sign = |e: u32| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let mut total = -sign(i + j) * stirling1(i, j);
    // chains[t]: signed sum over chains i > t₁ > … > t_k = t, each carrying (-1)^k.
    let mut chains: Vec<BigInt> = vec![BigInt::zero(); i as usize + 1];
    for t in (j + 1..i).rev() {
        let mut acc = -stirling1(i, t);
        for s in t + 1..i {
            acc -= &chains[s as usize] * stirling1(s, t);
        }
        chains[t as usize] = acc;
    }
    for t in j + 1..i {
        // (-1)^{i+j+k+1} = (-1)^{i+j} · (-1)^k · (-1)
        total -= sign(i + j) * &chains[t as usize] * stirling1(t, j);
    }
    big(total)
}

/// Direct chain enumeration, kept as a slow oracle for the dynamic programme.
#[cfg(test)]
fn stirling2_chains_naive(i: u32, j: u32) -> BigInt {
    fn walk(from: u32, j: u32, k: u32, prod: BigInt, out: &mut Vec<(u32, BigInt)>) {
        for t in j + 1..from {
            let p = &prod * stirling1(from, t);
            out.push((k + 1, &p * stirling1(t, j)));
            walk(t, j, k + 1, p, out);
        }
    }
    let mut chains = Vec::new();
    walk(i, j, 0, BigInt::one(), &mut chains);
    let mut total = BigInt::zero();
    for (k, p) in chains {
        if (i + j + k + 1).is_multiple_of(2) {
            total += p;
        } else {
            total -= p;
        }
    }
    let direct = stirling1(i, j);
    if (i + j).is_multiple_of(2) {
        total - direct
    } else {
        total + direct
    }
}
