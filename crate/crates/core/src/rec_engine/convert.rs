use num_traits::Zero;

use super::{PRecurrence, RecError};
use crate::exactmath::{falling_factorial, Poly};
use crate::ode_derive::LinearOde;

/// Coefficients `C_j(n) = Σ_k A_{k, j−K+k}·ff(n−j, k)` of the recurrence read off
/// `[x^{n−K}]` of the equation, together with the theoretical starting index.
pub(crate) fn raw_recurrence(ode: &LinearOde) -> (Vec<Poly>, usize) {
    let k_max = ode.order();
    let span = ode
        .coeffs
        .iter()
        .enumerate()
        .filter_map(|(k, a)| a.degree().map(|d| d + k_max - k))
        .max()
        .expect("leading coefficient is nonzero");
    // ff(n − j, k) as a polynomial in n
    let ff = |j: usize, k: usize| falling_factorial(k).shift_i64(-(j as i64));
    let coeffs = (0..=span)
        .map(|j| {
            ode.coeffs.iter().enumerate().fold(Poly::zero(), |acc, (k, a)| {
                let i = j as i64 - k_max as i64 + k as i64;
                if i < 0 {
                    return acc;
                }
                let c = a.coeff(i as usize);
                if c.is_zero() {
                    acc
                } else {
                    &acc + &ff(j, k).scale(&c)
                }
            })
        })
        .collect();
    let n_min = match ode.inhom.degree() {
        Some(d) => span.max(d + k_max + 1),
        None => span,
    };
    (coeffs, n_min)
}

/// The P-finite recurrence of an ODE's power-series solutions, normalized and
/// not yet certified. Inhomogeneous equations give a relation that holds once
/// `n − K` is past the degree of the right-hand side.
pub fn ode_to_recurrence(ode: &LinearOde) -> Result<PRecurrence, RecError> {
    let (coeffs, n_min) = raw_recurrence(ode);
    PRecurrence::uncertified(coeffs, n_min)
}
