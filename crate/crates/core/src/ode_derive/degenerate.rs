use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::OdeError;
use crate::exactmath::{int, rational_pow, Poly, Rational};
use crate::gf_model::GfClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    Regular,
    /// `w² = p`
    SquareCase,
    /// `w·p' = 2w'·p`, equivalently `w² = C·p`
    ProportionalCase,
}

/// Classifies nested-root parameters. `r` does not influence the answer; it is
/// accepted so the call mirrors the class parameters.
pub fn detect_degenerate(w: &Poly, p: &Poly, _r: &Rational) -> Degeneracy {
    if w * w == *p {
        Degeneracy::SquareCase
    } else if w * &p.derivative() == (&w.derivative() * p).scale(&int(2)) {
        Degeneracy::ProportionalCase
    } else {
        Degeneracy::Regular
    }
}

/// For a degenerate nested root, the equivalent inverse-root class.
///
/// With `w² = C·p` the series branch of `sqrt(p)` is `(sqrt(p(0))/w(0))·w`, so
/// `g = (κ·w)^(1/r)` with `κ = 1 + sqrt(p(0))/w(0)`, which is
/// `g(0) / (w/w(0))^(−1/r)`.
pub fn reroute_degenerate(class: &GfClass) -> Result<Option<GfClass>, OdeError> {
    let GfClass::NestedSqrt { w, p, r } = class else {
        return Ok(None);
    };
    if detect_degenerate(w, p, r) == Degeneracy::Regular {
        return Ok(None);
    }
    if w.is_zero() {
        return Ok(Some(GfClass::InverseRoot { p: p.clone(), r: r * int(-2) }));
    }
    let w0 = w.constant_term();
    if w0.is_zero() {
        return Err(OdeError::Reroute("w(0) = 0".into()));
    }
    let half = Rational::new(1.into(), 2.into());
    let sp0 = rational_pow(&p.constant_term(), &half)
        .ok_or_else(|| OdeError::Reroute("p(0) is not a rational square".into()))?;
    let kappa = Rational::one() + sp0 / &w0;
    if kappa.is_zero() {
        return Err(OdeError::Reroute("the function vanishes identically".into()));
    }
    let g0 = rational_pow(&(kappa * &w0), &r.recip())
        .ok_or_else(|| OdeError::Reroute("g(0) is irrational".into()))?;
    Ok(Some(GfClass::GeneralRoot {
        q: Poly::constant(g0),
        v: Poly::one(),
        p: w.scale(&w0.recip()),
        r: -r,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_oracle::oracle_expand;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn detection() {
        let r = int(2);
        assert_eq!(detect_degenerate(&p(&[1, 1]), &p(&[1, 2, 1]), &r), Degeneracy::SquareCase);
        assert_eq!(detect_degenerate(&p(&[1, 1]), &p(&[3, 6, 3]), &r), Degeneracy::ProportionalCase);
        assert_eq!(detect_degenerate(&p(&[3]), &p(&[1, -4]), &r), Degeneracy::Regular);
    }

    #[test]
    fn reroute_preserves_series() {
        let cases = [
            (p(&[2, 2]), p(&[4, 8, 4]), int(2)),
            (p(&[5, -5]), p(&[16, -32, 16]), int(2)),
            (p(&[4, 4, 4]), p(&[25, 50, 75, 50, 25]), int(-2)),
            (Poly::zero(), p(&[1, -4]), int(3)),
        ];
        for (w, pp, r) in &cases {
            let class = GfClass::NestedSqrt { w: w.clone(), p: pp.clone(), r: r.clone() };
            let rerouted = reroute_degenerate(&class).unwrap().expect("degenerate");
            assert_eq!(
                oracle_expand(&class, 30).unwrap(),
                oracle_expand(&rerouted, 30).unwrap(),
                "{class}"
            );
        }
        let regular = GfClass::NestedSqrt { w: p(&[3]), p: p(&[1, -4]), r: int(2) };
        assert_eq!(reroute_degenerate(&regular).unwrap(), None);
    }
}
