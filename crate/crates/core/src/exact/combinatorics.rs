use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result, Scalar};

/// `m!`
pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

/// `m!! = m (m-2) (m-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigUint> {
    if m < -1 {
        return Err(Error::InvalidArgument(format!(
            "double factorial is defined for m >= -1, got {m}"
        )));
    }
    let mut acc = BigUint::one();
    let mut k = m;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    Ok(acc)
}

/// Derangement number `D_m` from `D_m = (m-1)(D_{m-1} + D_{m-2})`.
pub fn derangement(m: u64) -> BigUint {
    derangements(m).pop().expect("nonempty")
}

/// `[D_0, ..., D_{m_max}]`
pub fn derangements(m_max: u64) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(m_max as usize + 1);
    out.push(BigUint::one());
    if m_max >= 1 {
        out.push(BigUint::from(0u32));
    }
    for m in 2..=m_max as usize {
        let next = (&out[m - 1] + &out[m - 2]) * (m as u64 - 1);
        out.push(next);
    }
    out
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`, `(x)_0 = 1`.
pub fn pochhammer<S: Scalar>(x: &S, k: u64) -> S {
    let mut acc = S::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + S::one();
    }
    acc
}
