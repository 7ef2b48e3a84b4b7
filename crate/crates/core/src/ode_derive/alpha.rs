use num_traits::Signed;

use super::OdeError;
use crate::exactmath::{int, primitive_together, Poly, Rational};
use crate::gf_model::Sign;

/// Two orthogonality constraints on `(T, R, Q)`:
/// `T·α1 + R·α2 + Q·α3 = 0` and `T·α4 + R·α5 + Q·α6 = 0`.
///
/// Each triple may be scaled independently; the nested-root and exp-sqrt
/// builders store both triples multiplied by `p` so every entry is polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector {
    pub a: [Poly; 6],
}

/// Alphas of `g = (w + sqrt(p))^(1/r)`, both triples multiplied by `p`.
pub fn nested_alphas(w: &Poly, p: &Poly, r: &Rational) -> AlphaVector {
    let (w1, w2) = (w.derivative(), w.derivative().derivative());
    let (p1, p2) = (p.derivative(), p.derivative().derivative());
    let one_minus_r = int(1) - r;
    let r2 = r * r;
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    // p·[(1−r)w'² + (1/4 − r/2)p'²/p + r·w''·w + r·p''/2]
    let a1 = &(&(&(&w1 * &w1).scale(&one_minus_r) + &(&w2 * w).scale(r)) + &p2.scale(&(r * &half)))
        * p
        + (&p1 * &p1).scale(&(&quarter - r * &half));
    // p·[r·w'·w + r·p'/2]
    let a2 = &(&(&w1 * w).scale(r) + &p1.scale(&(r * &half))) * p;
    // p·[r²w² + r²p]
    let a3 = &(&(w * w) + p).scale(&r2) * p;
    // (1−r)w'p'p + r·w·p''·p/2 − r·w·p'²/4 + r·w''·p²
    let a4 = &(&(&(&(&w1 * &p1) * p).scale(&one_minus_r) + &(&(w * &p2) * p).scale(&(r * &half)))
        - &(&(w * &p1) * &p1).scale(&(r * &quarter)))
        + (&w2 * &(p * p)).scale(r);
    // r·w·p'·p/2 + r·w'·p²
    let a5 = &(&(w * &p1) * p).scale(&(r * &half)) + &(&w1 * &(p * p)).scale(r);
    // 2r²·w·p²
    let a6 = (w * &(p * p)).scale(&(int(2) * &r2));
    AlphaVector { a: [a1, a2, a3, a4, a5, a6] }
}

/// Alphas of `g = exp(w + s·sqrt(p))`, both triples multiplied by `p`.
pub fn exp_sqrt_alphas(w: &Poly, p: &Poly, sign: Sign) -> AlphaVector {
    let s = int(sign.as_i64());
    let (w1, w2) = (w.derivative(), w.derivative().derivative());
    let (p1, p2) = (p.derivative(), p.derivative().derivative());
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    let a1 = &(&(&w2 + &(&w1 * &w1)) * p) + &(&p1 * &p1).scale(&quarter);
    let a2 = &w1 * p;
    let a3 = p.clone();
    let a4 = (&(&(&p2 * p).scale(&half) - &(&p1 * &p1).scale(&quarter)) + &(&(&w1 * &p1) * p)).scale(&s);
    let a5 = (&p1 * p).scale(&(&s * &half));
    let a6 = Poly::zero();
    AlphaVector { a: [a1, a2, a3, a4, a5, a6] }
}

/// `(T, R, Q)` orthogonal to both alpha triples, scaled to coprime integer
/// coefficients with a positive lowest coefficient of the first nonzero entry.
pub fn alpha_cross(alpha: &AlphaVector) -> Result<(Poly, Poly, Poly), OdeError> {
    let [a1, a2, a3, a4, a5, a6] = &alpha.a;
    let t = &(a2 * a6) - &(a3 * a5);
    let r = &(a3 * a4) - &(a1 * a6);
    let q = &(a1 * a5) - &(a2 * a4);
    if t.is_zero() && r.is_zero() && q.is_zero() {
        return Err(OdeError::ZeroCrossProduct);
    }
    let mut v = primitive_together(&[t, r, q]);
    let first = v.iter().find(|p| !p.is_zero()).expect("some entry nonzero");
    if first.coeff(first.valuation().expect("nonzero")).is_negative() {
        v = v.iter().map(|p| -p).collect();
    }
    Ok((v[0].clone(), v[1].clone(), v[2].clone()))
}
