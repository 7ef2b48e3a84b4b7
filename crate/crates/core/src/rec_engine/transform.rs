use num_traits::Zero;

use super::certify::{certify, required_terms, DEFAULT_GUARD};
use super::generate::lattice_terms;
use super::recurrence::residual_at;
use super::{InhomPRecurrence, PRecurrence, RecError};
use crate::exactmath::{factorial, int, nullspace, Poly, Rational};

fn falling_block(j: usize) -> Poly {
    // n(n − 1)···(n − j + 1)
    (0..j).fold(Poly::one(), |acc, i| &acc * &Poly::new(vec![int(-(i as i64)), int(1)]))
}

/// Builds `coeffs` as a recurrence starting at `n_min`. When `src` is certified,
/// its terms mapped through `map` certify the result.
fn carry_over(
    src: &PRecurrence,
    coeffs: Vec<Poly>,
    n_min: usize,
    map: impl Fn(usize, Rational) -> Rational,
) -> Result<PRecurrence, RecError> {
    let out = PRecurrence::uncertified(coeffs, n_min)?;
    if !src.is_certified() {
        return Ok(out);
    }
    let needed = required_terms(&out, DEFAULT_GUARD);
    let terms = lattice_terms(src)?
        .take(needed)
        .enumerate()
        .map(|(n, t)| t.map(|t| map(n, t)))
        .collect::<Result<Vec<_>, _>>()?;
    certify(&out, &terms, DEFAULT_GUARD)
}

/// The recurrence for `b_n = n!·g_n`: coefficient `j` gains the factor `n(n − 1)···(n − j + 1)`.
pub fn to_egf(rec: &PRecurrence) -> Result<PRecurrence, RecError> {
    if !rec.has_trivial_lattice() {
        let flat = rec.flatten_offset().ok_or(RecError::NontrivialStride(rec.stride))?;
        return to_egf(&flat);
    }
    let coeffs = rec.coeffs.iter().enumerate().map(|(j, c)| c * &falling_block(j)).collect();
    carry_over(rec, coeffs, rec.n_min, |n, t| t * Rational::from_integer(factorial(n)))
}

/// The recurrence for `c_n = n·g_n`, so `c_0 = 0`.
///
/// Coefficient `j` is multiplied by `∏_{i ≠ j} (n − i)`, which turns `g_{n−j}` into
/// `c_{n−j}` times the common factor `∏_i (n − i)`; that factor is removed again.
pub fn to_lgf(rec: &PRecurrence) -> Result<PRecurrence, RecError> {
    if !rec.has_trivial_lattice() {
        let flat = rec.flatten_offset().ok_or(RecError::NontrivialStride(rec.stride))?;
        return to_lgf(&flat);
    }
    let span = rec.span();
    let coeffs = rec
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            (0..=span)
                .filter(|&i| i != j)
                .fold(c.clone(), |acc, i| &acc * &Poly::new(vec![int(-(i as i64)), int(1)]))
        })
        .collect();
    carry_over(rec, coeffs, rec.n_min.max(1), |n, t| t * int(n as i64))
}

/// `C_j(n) = I(n−1)·P_j(n) − I(n)·P_{j−1}(n−1)`: the inhomogeneous relation at `n`
/// times `I(n−1)` minus the relation at `n − 1` times `I(n)`.
pub fn homogenize(rec: &InhomPRecurrence) -> Result<PRecurrence, RecError> {
    if rec.inhom.is_zero() {
        return Err(RecError::AlreadyHomogeneous);
    }
    let i_now = &rec.inhom;
    let i_prev = rec.inhom.shift_i64(-1);
    let span = rec.coeffs.len() - 1;
    let coeffs = (0..=span + 1)
        .map(|j| {
            let here = rec.coeffs.get(j).map_or_else(Poly::zero, |p| &i_prev * p);
            let before = match j {
                0 => Poly::zero(),
                _ => i_now * &rec.coeffs[j - 1].shift_i64(-1),
            };
            &here - &before
        })
        .collect();
    PRecurrence::uncertified(coeffs, rec.n_min + 1)
}

/// Cancels the leading terms of two recurrences of equal span: each is multiplied
/// by the other's `C_0` and the two are subtracted, leaving one term fewer.
pub fn shorten(a: &PRecurrence, b: &PRecurrence) -> Result<PRecurrence, RecError> {
    if a.span() != b.span() {
        return Err(RecError::SpanMismatch(a.span(), b.span()));
    }
    if a.span() <= 1 {
        return Err(RecError::AlreadyMinimal(a.span()));
    }
    let coeffs: Vec<Poly> = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .skip(1)
        .map(|(ca, cb)| &(&b.coeffs[0] * ca) - &(&a.coeffs[0] * cb))
        .collect();
    if coeffs.iter().all(Poly::is_zero) {
        return Err(RecError::NoShortening);
    }
    // the relation at n uses g_{n−1}..; reindex so it starts at g_n
    let n_min = a.n_min.max(b.n_min);
    let shifted: Vec<Poly> = coeffs.iter().map(|c| c.shift_i64(1)).collect();
    let out = PRecurrence::uncertified(shifted, n_min.saturating_sub(1))?;
    if out.span() >= a.span() {
        return Err(RecError::NoShortening);
    }
    Ok(out)
}

/// Highest telescoper degree tried by [`telescope`].
const MAX_TELESCOPER_DEGREE: usize = 6;

/// Lowers the span by one by summing `ρ(k)·(relation at k)` over `k ≤ n`.
///
/// `ρ` is a polynomial with `Σ_i ρ(m + i)·C_i(m + i) = 0` identically, so every
/// `g_s` with `s ≤ n − J` drops out of the sum. What remains is
/// `Σ_{j<J} u_j(n)·g_{n−j}` with `u_j(n) = Σ_{i≤j} ρ(n − j + i)·C_i(n − j + i)`.
/// The sum equals a constant once the relation holds, which `terms` determines;
/// a nonzero constant is removed with [`homogenize`].
pub fn telescope(rec: &PRecurrence, terms: &[Rational]) -> Result<PRecurrence, RecError> {
    let span = rec.span();
    if span <= 1 {
        return Err(RecError::AlreadyMinimal(span));
    }
    let rho = find_telescoper(&rec.coeffs).ok_or(RecError::NoTelescoper(MAX_TELESCOPER_DEGREE))?;
    let u: Vec<Poly> = (0..span)
        .map(|j| {
            (0..=j).fold(Poly::zero(), |acc, i| {
                let s = i as i64 - j as i64;
                &acc + &(&rho.shift_i64(s) * &rec.coeffs[i].shift_i64(s))
            })
        })
        .collect();
    let n0 = rec.n_min.max(span);
    let Some(constant) = residual_at(&u, n0, terms) else {
        return Err(RecError::NotEnoughTerms { needed: n0 + 1, got: terms.len() });
    };
    if constant.is_zero() {
        return PRecurrence::uncertified(u, n0);
    }
    homogenize(&InhomPRecurrence { coeffs: u, inhom: Poly::constant(-constant), n_min: n0 })
}

fn find_telescoper(coeffs: &[Poly]) -> Option<Poly> {
    for d in 0..=MAX_TELESCOPER_DEGREE {
        // column e: Σ_i (m + i)^e·C_i(m + i)
        let columns: Vec<Poly> = (0..=d)
            .map(|e| {
                coeffs.iter().enumerate().fold(Poly::zero(), |acc, (i, c)| {
                    let shifted = Poly::monomial(int(1), e).shift_i64(i as i64);
                    &acc + &(&shifted * &c.shift_i64(i as i64))
                })
            })
            .collect();
        let rows = columns.iter().filter_map(Poly::degree).max().map_or(0, |x| x + 1);
        let matrix: Vec<Vec<Rational>> =
            (0..rows).map(|k| columns.iter().map(|c| c.coeff(k)).collect()).collect();
        if let Some(v) = nullspace(&matrix, d + 1).into_iter().next() {
            let rho = Poly::new(v);
            if !rho.is_zero() {
                return Some(rho);
            }
        }
    }
    None
}
