//! Rewrites of composite shapes into the rooted-numerator class.


use super::class::GfClass;
use super::GfError;
use crate::exactmath::{int, Poly, Rational};

/// `u/w + q/(v·sqrt(p))` as a single rooted numerator
/// `(u·v·p + w·q·sqrt(p)) / (w·v·p)`.
///
/// Only the square root is supported: for other indices `p^(1 - 1/r)` is not a
/// square-root form.
pub fn rewrite_sum(
    u: &Poly,
    w: &Poly,
    q: &Poly,
    v: &Poly,
    p: &Poly,
    r: &Rational,
) -> Result<GfClass, GfError> {
    if *r != int(2) {
        return Err(GfError::InvalidParameter("rewrite_sum requires r = 2".into()));
    }
    for (name, poly) in [("w", w), ("v", v), ("p", p)] {
        if poly.is_zero() {
            return Err(GfError::InvalidParameter(format!("{name} must be nonzero")));
        }
    }
    if u.is_zero() {
        return Ok(GfClass::GeneralRoot { q: q.clone(), v: v.clone(), p: p.clone(), r: int(2) });
    }
    Ok(GfClass::RootedNumerator {
        w: &(u * v) * p,
        v: w * q,
        p: p.clone(),
        q: &(w * v) * p,
        r: int(2),
    })
}

/// `(u·sqrt(p) + w) / (v·sqrt(p) + q)` by rationalizing the denominator.
pub fn rewrite_moebius_sqrt(
    u: &Poly,
    w: &Poly,
    v: &Poly,
    q: &Poly,
    p: &Poly,
) -> Result<GfClass, GfError> {
    if u.is_zero() && v.is_zero() {
        return Err(GfError::InvalidParameter(
            "no square root in numerator or denominator".into(),
        ));
    }
    if p.is_zero() {
        return Err(GfError::InvalidParameter("p must be nonzero".into()));
    }
    let den = &(&(v * v) * p) - &(q * q);
    if den.is_zero() {
        return Err(GfError::InvalidParameter("degenerate denominator v^2 p = q^2".into()));
    }
    let new_w = &(&(u * v) * p) - &(q * w);
    let new_v = &(w * v) - &(q * u);
    if new_v.is_zero() {
        return Ok(GfClass::GeneralRoot { q: new_w, v: den, p: Poly::one(), r: int(1) });
    }
    if new_w.is_zero() {
        return Ok(GfClass::GeneralRoot { q: new_v, v: den, p: p.clone(), r: int(-2) });
    }
    Ok(GfClass::RootedNumerator { w: new_w, v: new_v, p: p.clone(), q: den, r: int(2) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn sum_rewrites() {
        let one = p(&[1]);
        assert_eq!(
            rewrite_sum(&Poly::zero(), &one, &one, &one, &p(&[1, -4]), &int(2)).unwrap(),
            GfClass::GeneralRoot { q: one.clone(), v: one.clone(), p: p(&[1, -4]), r: int(2) }
        );
        assert_eq!(
            rewrite_sum(&one, &one, &one, &one, &p(&[1, -4]), &int(2)).unwrap(),
            GfClass::RootedNumerator { w: p(&[1, -4]), v: one.clone(), p: p(&[1, -4]), q: p(&[1, -4]), r: int(2) }
        );
        assert!(rewrite_sum(&one, &one, &one, &one, &p(&[1, -4]), &int(3)).is_err());
    }

    #[test]
    fn moebius_guards() {
        let one = p(&[1]);
        assert!(rewrite_moebius_sqrt(&Poly::zero(), &one, &Poly::zero(), &one, &p(&[1, -4])).is_err());
        assert_eq!(
            rewrite_moebius_sqrt(&one, &Poly::zero(), &Poly::zero(), &one, &p(&[1, -4])).unwrap(),
            GfClass::GeneralRoot { q: p(&[-1]), v: p(&[-1]), p: p(&[1, -4]), r: int(-2) }
        );
        // v^2 p = q^2
        assert!(rewrite_moebius_sqrt(&one, &one, &one, &one, &one).is_err());
    }
}
