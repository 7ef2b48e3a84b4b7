use num_traits::Zero;

use super::recurrence::residual_at;
use super::{PRecurrence, RecError};
use crate::exactmath::Rational;

/// Extra indices checked past the theoretical starting point.
pub const DEFAULT_GUARD: usize = 10;

fn last_leading_root(rec: &PRecurrence) -> Option<usize> {
    rec.coeffs[0].nonnegative_integer_roots().last().map(|&r| r as usize)
}

/// Number of lattice terms [`certify`] needs.
pub fn required_terms(rec: &PRecurrence, guard: usize) -> usize {
    let root = last_leading_root(rec).map_or(0, |r| r + 1);
    rec.n_min.max(rec.span()).max(root) + guard + 1
}

/// Tightens `n_min` against known lattice terms and attaches the initial segment.
///
/// The relation is probed at every index up to `required_terms − 1`; the new
/// `n_min` is one past the last failure. The initial segment reaches past the
/// largest nonnegative integer root of `C_0`, so forward generation never divides by zero.
pub fn certify(rec: &PRecurrence, terms: &[Rational], guard: usize) -> Result<PRecurrence, RecError> {
    let needed = required_terms(rec, guard);
    if terms.len() < needed {
        return Err(RecError::NotEnoughTerms { needed, got: terms.len() });
    }
    let mut n_min = 0;
    for n in 0..needed {
        let value = residual_at(&rec.coeffs, n, terms).expect("within the probed range");
        if !value.is_zero() {
            if n >= rec.n_min {
                return Err(RecError::NotAnnihilated(n));
            }
            n_min = n + 1;
        }
    }
    let root = last_leading_root(rec).filter(|&r| r >= n_min).map_or(0, |r| r + 1);
    let len = (n_min.max(root) + guard).min(needed).max(1);
    Ok(PRecurrence { n_min, initial: terms[..len].to_vec(), ..rec.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, Poly};

    #[test]
    fn tightens_and_covers_roots() {
        // (n − 3)·g_n − (n − 3)·g_{n−1}: constant sequences, but C_0(3) = 0
        let c0 = Poly::from_i64s(&[-3, 1]);
        let rec = PRecurrence {
            coeffs: vec![c0.clone(), -&c0],
            n_min: 1,
            initial: vec![],
            stride: 1,
            offset: 0,
        };
        let terms = vec![int(5); 20];
        let cert = certify(&rec, &terms, 2).unwrap();
        // zero padding makes n = 0 read −3·5 = 0, which fails
        assert_eq!(cert.n_min, 1);
        assert_eq!(cert.initial.len(), 6);
    }

    #[test]
    fn rejects_wrong_relations() {
        let rec = PRecurrence {
            coeffs: vec![Poly::one(), Poly::constant(int(-2))],
            n_min: 1,
            initial: vec![],
            stride: 1,
            offset: 0,
        };
        let terms: Vec<_> = (0..20).map(int).collect();
        assert_eq!(certify(&rec, &terms, 3), Err(RecError::NotAnnihilated(1)));
        assert!(matches!(certify(&rec, &terms[..2], 3), Err(RecError::NotEnoughTerms { .. })));
    }
}
