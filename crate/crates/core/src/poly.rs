//! Size-indexed exact polynomials: `p[i]` is the coefficient of `x^i`.

use crate::error::{Error, Result};

pub fn mul(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = x.checked_mul(y).ok_or(Error::Overflow("multiplying polynomials"))?;
            out[i + j] = out[i + j]
                .checked_add(t)
                .ok_or(Error::Overflow("multiplying polynomials"))?;
        }
    }
    Ok(out)
}

/// `acc += x^shift * b`.
pub fn add_shifted(acc: &mut Vec<u64>, b: &[u64], shift: usize) -> Result<()> {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        acc[i + shift] = acc[i + shift]
            .checked_add(y)
            .ok_or(Error::Overflow("adding polynomials"))?;
    }
    Ok(())
}

/// Row `k` of Pascal's triangle, i.e. the coefficients of `(1 + x)^k`.
pub fn binomial_row(k: usize) -> Result<Vec<u64>> {
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1]
                .checked_add(row[i])
                .ok_or(Error::Overflow("building binomial row"))?;
        }
        row = next;
    }
    Ok(row)
}

/// Signed Pascal triangle up to row `n`, `table[a][b] = C(a, b)`.
pub fn pascal(n: usize) -> Result<Vec<Vec<i128>>> {
    let mut table: Vec<Vec<i128>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![1i128; a + 1];
        for b in 1..a {
            row[b] = table[a - 1][b - 1]
                .checked_add(table[a - 1][b])
                .ok_or(Error::Overflow("building Pascal triangle"))?;
        }
        table.push(row);
    }
    Ok(table)
}

pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    // C(n, k) via the multiplicative formula; every prefix product is an
    // exact binomial so the division never truncates.
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("computing a binomial coefficient"));
        }
    }
    Ok(acc as u64)
}
