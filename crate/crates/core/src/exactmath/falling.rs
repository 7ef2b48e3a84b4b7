use num_traits::Zero;

use super::poly::Poly;
use super::rational::{int, Rational};

/// Stirling numbers of the second kind `S2(k, m)` for `0 <= m <= k <= max_k`,
/// as a lower-triangular table indexed `[k][m]`.
pub fn stirling2_table(max_k: usize) -> Vec<Vec<Rational>> {
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(max_k + 1);
    table.push(vec![int(1)]);
    for k in 1..=max_k {
        let prev = &table[k - 1];
        let row: Vec<Rational> = (0..=k)
            .map(|m| {
                if m == 0 {
                    return Rational::zero();
                }
                let carry = prev.get(m - 1).cloned().unwrap_or_else(Rational::zero);
                let stay = prev
                    .get(m)
                    .map(|s| s * int(m as i64))
                    .unwrap_or_else(Rational::zero);
                carry + stay
            })
            .collect();
        table.push(row);
    }
    table
}

/// The falling factorial `n(n−1)···(n−m+1)` as a polynomial in `n`.
pub fn falling_factorial(m: usize) -> Poly {
    (0..m).fold(Poly::one(), |acc, i| {
        acc * Poly::new(vec![int(-(i as i64)), int(1)])
    })
}

/// Coefficients `s_m` with `poly(n) = Σ_m s_m · n(n−1)···(n−m+1)`.
pub fn power_to_falling(poly: &Poly) -> Vec<Rational> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    let s2 = stirling2_table(deg);
    let mut out = vec![Rational::zero(); deg + 1];
    for (k, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (m, s) in s2[k].iter().enumerate() {
            out[m] += c * s;
        }
    }
    out
}

/// Inverse of [`power_to_falling`].
pub fn falling_to_power(coeffs: &[Rational]) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (m, c)| acc + falling_factorial(m).scale(c))
}
