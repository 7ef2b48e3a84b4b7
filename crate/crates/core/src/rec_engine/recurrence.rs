use std::fmt;

use num_traits::{Signed, Zero};

use super::RecError;
use crate::exactmath::{poly_gcd_all, primitive_together, Poly, Rational};

/// `Σ_j C_j(n)·g_{n−j} = 0` for `n ≥ n_min`.
///
/// For `stride > 1` the indices run over the lattice `h_m = g_{stride·m + offset}`
/// and every other coefficient of the series is zero. `initial` holds lattice
/// terms `h_0, h_1, …`; it is empty until the recurrence is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRecurrence {
    pub coeffs: Vec<Poly>,
    pub n_min: usize,
    pub initial: Vec<Rational>,
    pub stride: u32,
    pub offset: u32,
}

/// `Σ_j P_j(n)·g_{n−j} + I(n) = 0` for `n ≥ n_min`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InhomPRecurrence {
    pub coeffs: Vec<Poly>,
    pub inhom: Poly,
    pub n_min: usize,
}

impl PRecurrence {
    /// Normalized coefficients with a theoretical starting index and no initial terms.
    pub fn uncertified(coeffs: Vec<Poly>, n_min: usize) -> Result<PRecurrence, RecError> {
        Self::uncertified_lattice(coeffs, n_min, 1, 0)
    }

    pub fn uncertified_lattice(
        coeffs: Vec<Poly>,
        n_min: usize,
        stride: u32,
        offset: u32,
    ) -> Result<PRecurrence, RecError> {
        let norm = normalize_coeffs(&coeffs)?;
        let n_min = n_min.saturating_sub(norm.shift).max(norm.unsafe_from());
        Ok(PRecurrence { coeffs: norm.coeffs, n_min, initial: Vec::new(), stride, offset })
    }

    pub fn span(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_certified(&self) -> bool {
        !self.initial.is_empty()
    }

    pub fn has_trivial_lattice(&self) -> bool {
        self.stride == 1 && self.offset == 0
    }

    /// Rewrites a stride-one recurrence with offset `t` over `g_n` itself:
    /// `C_j(n − t)` as coefficients and `t` leading zeros in the initial terms.
    pub fn flatten_offset(&self) -> Option<PRecurrence> {
        if self.stride != 1 {
            return None;
        }
        let t = self.offset as usize;
        let mut initial = vec![Rational::zero(); if self.is_certified() { t } else { 0 }];
        initial.extend(self.initial.iter().cloned());
        Some(PRecurrence {
            coeffs: self.coeffs.iter().map(|c| c.shift_i64(-(t as i64))).collect(),
            n_min: self.n_min + t,
            initial,
            stride: 1,
            offset: 0,
        })
    }

    /// `Σ_j C_j(n)·t_{n−j}` with `t_{<0} = 0`; `None` if `terms` is too short.
    pub fn residual_at(&self, n: usize, terms: &[Rational]) -> Option<Rational> {
        residual_at(&self.coeffs, n, terms)
    }
}

pub(crate) fn residual_at(coeffs: &[Poly], n: usize, terms: &[Rational]) -> Option<Rational> {
    if n >= terms.len() {
        return None;
    }
    let nn = Rational::from_integer((n as i64).into());
    let mut acc = Rational::zero();
    for (j, c) in coeffs.iter().enumerate().take(n + 1) {
        let t = &terms[n - j];
        if !t.is_zero() && !c.is_zero() {
            acc += c.eval(&nn) * t;
        }
    }
    Some(acc)
}

/// Result of [`normalize_coeffs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub coeffs: Vec<Poly>,
    /// Leading zero coefficients dropped; the new relation at `n` is the old one at `n + shift`.
    pub shift: usize,
    /// Monic common factor divided out, as a polynomial in the new index.
    pub removed: Poly,
}

impl Normalized {
    /// First index from which dividing out `removed` is known to be harmless.
    pub fn unsafe_from(&self) -> usize {
        self.removed
            .nonnegative_integer_roots()
            .last()
            .map_or(0, |&r| r as usize + 1)
    }
}

/// Trims zero coefficients at both ends, removes the common polynomial factor,
/// and scales to primitive integers with a positive leading coefficient of `C_0`.
pub fn normalize_coeffs(coeffs: &[Poly]) -> Result<Normalized, RecError> {
    let last = coeffs.iter().rposition(|c| !c.is_zero()).ok_or(RecError::ZeroRecurrence)?;
    let shift = coeffs.iter().position(|c| !c.is_zero()).expect("some coefficient nonzero");
    let shifted: Vec<Poly> = coeffs[shift..=last]
        .iter()
        .map(|c| c.shift_i64(shift as i64))
        .collect();
    let removed = poly_gcd_all(&shifted).expect("some coefficient nonzero");
    let divided: Vec<Poly> = shifted
        .iter()
        .map(|c| c.exact_div(&removed).expect("gcd divides every coefficient"))
        .collect();
    let mut out = primitive_together(&divided);
    if out[0].leading().is_some_and(Signed::is_negative) {
        out = out.iter().map(|c| -c).collect();
    }
    Ok(Normalized { coeffs: out, shift, removed })
}

/// Whether two coefficient lists agree up to one nonzero rational-function factor.
pub fn proportional(a: &[Poly], b: &[Poly]) -> bool {
    a.len() == b.len()
        && !a[0].is_zero()
        && !b[0].is_zero()
        && a.iter().zip(b).all(|(x, y)| (x * &b[0]) == (y * &a[0]))
}

impl fmt::Display for PRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t) = (self.stride as i64, self.offset as i64);
        let index = |j: usize| -> String {
            let base = if s == 1 { "n".to_string() } else { format!("{s}n") };
            match t - s * j as i64 {
                0 => base,
                c if c > 0 => format!("{base}+{c}"),
                c => format!("{base}{c}"),
            }
        };
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*g({})", c.display_in("n"), index(j))?;
        }
        write!(f, " = 0, n >= {}", self.n_min)
    }
}
