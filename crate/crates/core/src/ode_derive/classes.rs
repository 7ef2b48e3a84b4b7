use super::alpha::{alpha_cross, exp_sqrt_alphas, nested_alphas};
use super::degenerate::{detect_degenerate, Degeneracy};
use super::ode::LinearOde;
use super::OdeError;
use crate::exactmath::{int, Poly, Rational};
use crate::gf_model::GfClass;

/// `r = a/b` as the integer pair `(a, b)` with `b > 0`, each as a rational.
fn split(r: &Rational) -> (Rational, Rational) {
    (Rational::from_integer(r.numer().clone()), Rational::from_integer(r.denom().clone()))
}

/// The class's differential equation before any common-factor reduction.
///
/// A rational `r = a/b` is cleared by multiplying the whole equation by `b`.
pub fn derive_ode(class: &GfClass) -> Result<LinearOde, OdeError> {
    class.validate()?;
    if let Some((r, q, h)) = first_order_parts(class) {
        return LinearOde::first_order(r, q, h);
    }
    match class {
        GfClass::NestedSqrt { w, p, r } => {
            let kind = detect_degenerate(w, p, r);
            if kind != Degeneracy::Regular {
                return Err(OdeError::Degenerate(kind));
            }
            let (t, rr, qq) = alpha_cross(&nested_alphas(w, p, r))?;
            LinearOde::second_order(t, rr, qq)
        }
        GfClass::ExpPolySqrt { w, p, sign } => {
            let (t, rr, qq) = alpha_cross(&exp_sqrt_alphas(w, p, *sign))?;
            LinearOde::second_order(t, rr, qq)
        }
        GfClass::Hypergeometric { .. } => Err(OdeError::NoOde("hypergeometric")),
        _ => unreachable!("first-order classes handled above"),
    }
}

/// `(R, Q, H)` of `R g' + Q g = H` for the classes with a first-order equation.
/// `None` for nested roots, exp of a non-constant square root, and hypergeometric terms.
pub fn first_order_parts(class: &GfClass) -> Option<(Poly, Poly, Poly)> {
    let parts = match class {
        GfClass::InverseRoot { p, r } => {
            // r·p·g' + p'·g = 0
            let (a, b) = split(r);
            (p.scale(&a), p.derivative().scale(&b), Poly::zero())
        }
        GfClass::GeneralRoot { q, v, p, r } => {
            // R = r·q·p·v, Q = r·q·p·v' − r·p·q'·v + q·p'·v
            let (a, b) = split(r);
            let qp = q * p;
            let rr = (&qp * v).scale(&a);
            let qq = &(&(&qp * &v.derivative()) - &(&(p * &q.derivative()) * v)).scale(&a)
                + &(&(q * &p.derivative()) * v).scale(&b);
            (rr, qq, Poly::zero())
        }
        GfClass::SqrtRatio { q, p } => {
            // R = 2qp, Q = qp' − q'p
            let rr = (q * p).scale(&int(2));
            let qq = &(q * &p.derivative()) - &(&q.derivative() * p);
            (rr, qq, Poly::zero())
        }
        GfClass::RootedDenominator { q, w, v, p } => {
            let (w1, v1, p1, q1) = (w.derivative(), v.derivative(), p.derivative(), q.derivative());
            let pv2 = &(p * v) * v;
            let w2 = w * w;
            let pvq = &(p * v) * q;
            // R = 2pvq(v²p − w²)
            let rr = (&pvq * &(&pv2 - &w2)).scale(&int(2));
            // Q = −4pvq·w·w' + 2pq(pv² + w²)v' + vq(pv² + w²)p' − 2pv(pv² − w²)q'
            let sum = &pv2 + &w2;
            let qq = &(&(&(&(&pvq * w) * &w1).scale(&int(-4))
                + &(&(&(p * q) * &sum) * &v1).scale(&int(2)))
                + &(&(&(v * q) * &sum) * &p1))
                - &(&(&(p * v) * &(&pv2 - &w2)) * &q1).scale(&int(2));
            // H = −q²(2p·v·w' − 2w·p·v' − w·v·p')
            let inner = &(&(&(p * v) * &w1).scale(&int(2)) - &(&(w * p) * &v1).scale(&int(2)))
                - &(&(w * v) * &p1);
            let hh = -&(&(q * q) * &inner);
            (rr, qq, hh)
        }
        GfClass::RootedNumerator { w, v, p, q, r } => {
            // R = r·p·q·v, Q = r·p(q'v − qv') − v·p'·q, H = r·p(w'v − wv') − v·p'·w
            let (a, b) = split(r);
            let (w1, v1, p1, q1) = (w.derivative(), v.derivative(), p.derivative(), q.derivative());
            let rr = (&(p * q) * v).scale(&a);
            let qq = &(p * &(&(&q1 * v) - &(q * &v1))).scale(&a) - &(&(v * &p1) * q).scale(&b);
            let hh = &(p * &(&(&w1 * v) - &(w * &v1))).scale(&a) - &(&(v * &p1) * w).scale(&b);
            (rr, qq, hh)
        }
        GfClass::ExpPolySqrt { w, p, .. } if p.is_constant() => {
            // exp(w + const): g' − w'·g = 0
            (Poly::one(), -w.derivative(), Poly::zero())
        }
        GfClass::ExpRationalTimesRoot { q, v, p, r } => {
            // R = r·p·v², Q = v²·p' − r·p(q'v − qv')
            let (a, b) = split(r);
            let v2 = v * v;
            let rr = (p * &v2).scale(&a);
            let wronskian = &(&q.derivative() * v) - &(q * &v.derivative());
            let qq = &(&v2 * &p.derivative()).scale(&b) - &(p * &wronskian).scale(&a);
            (rr, qq, Poly::zero())
        }
        GfClass::LogRational { q, v } => {
            // R = qv, Q = 0, H = vq' − qv'
            let hh = &(v * &q.derivative()) - &(q * &v.derivative());
            (q * v, Poly::zero(), hh)
        }
        GfClass::PowerOfFirstOrder { l, h, r } => {
            // r·L·g' + H·g = 0
            let (a, b) = split(r);
            (l.scale(&a), h.scale(&b), Poly::zero())
        }
        GfClass::NestedSqrt { .. } | GfClass::ExpPolySqrt { .. } | GfClass::Hypergeometric { .. } => {
            return None
        }
    };
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::exactmath::rat;
    use crate::gf_model::Sign;
    use crate::ode_derive::reduce_common_factor;
    use crate::series_oracle::oracle_expand;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn assert_residual_vanishes(class: &GfClass) {
        let ode = derive_ode(class).unwrap_or_else(|e| panic!("{class}: {e}"));
        let g = oracle_expand(class, 62).unwrap();
        let res = ode.residual(&g);
        assert!(res.coeffs().iter().all(Zero::is_zero), "{class}: {ode}");
        let reduced = reduce_common_factor(&ode);
        assert!(reduced.residual(&g).coeffs().iter().all(Zero::is_zero), "{class} reduced");
    }

    #[test]
    fn spec_examples() {
        let ode = derive_ode(&GfClass::InverseRoot { p: p(&[1, -4]), r: int(2) }).unwrap();
        assert_eq!(ode, LinearOde::first_order(p(&[2, -8]), p(&[-4]), Poly::zero()).unwrap());

        let ode = derive_ode(&GfClass::LogRational { q: p(&[1]), v: p(&[1, -1]) }).unwrap();
        assert_eq!(ode, LinearOde::first_order(p(&[1, -1]), Poly::zero(), p(&[1])).unwrap());

        let a122877 = GfClass::RootedNumerator {
            w: p(&[1, -2, -3]),
            v: p(&[-1, 1]),
            p: p(&[1, -2, -7]),
            q: p(&[0, 0, 0, 8]),
            r: int(2),
        };
        let reduced = reduce_common_factor(&derive_ode(&a122877).unwrap());
        let a1 = &(&p(&[0, 1]) * &p(&[1, -1])) * &p(&[1, -2, -7]);
        assert_eq!(reduced, LinearOde::first_order(a1, p(&[3, -7, -11, 7]), p(&[0, 4])).unwrap());
    }

    #[test]
    fn residuals_vanish_for_every_class() {
        let classes = vec![
            GfClass::InverseRoot { p: p(&[1, -2, -3]), r: int(2) },
            GfClass::InverseRoot { p: p(&[1, -3, 1, 2]), r: rat(-3, 5) },
            GfClass::GeneralRoot { q: p(&[1, 2]), v: p(&[1]), p: p(&[1, 0, -4]), r: int(2) },
            GfClass::GeneralRoot { q: p(&[2, -1]), v: p(&[1, 3]), p: p(&[1, -5, 2]), r: rat(3, 2) },
            GfClass::SqrtRatio { q: p(&[1, 1]), p: p(&[1, -3]) },
            GfClass::RootedDenominator { q: p(&[1]), w: p(&[0, -1]), v: p(&[1, 1]), p: p(&[1, -2, -3]) },
            GfClass::RootedDenominator { q: p(&[1, 3]), w: p(&[2, -1]), v: p(&[1, 1, 1]), p: p(&[1, -6, 1]) },
            GfClass::RootedNumerator { w: p(&[1, -2, -3]), v: p(&[-1, 1]), p: p(&[1, -2, -7]), q: p(&[0, 0, 0, 8]), r: int(2) },
            GfClass::RootedNumerator { w: p(&[1, 1]), v: p(&[2]), p: p(&[1, -9]), q: p(&[1, -1]), r: int(3) },
            GfClass::NestedSqrt { w: p(&[3]), p: p(&[1, -4]), r: int(2) },
            GfClass::NestedSqrt { w: p(&[7, 1]), p: p(&[1, 0, -1]), r: int(3) },
            GfClass::NestedSqrt { w: p(&[3, -2, 1]), p: p(&[1, -4, 2]), r: rat(-1, 2) },
            GfClass::ExpPolySqrt { w: p(&[1]), p: p(&[1, -4]), sign: Sign::Minus },
            GfClass::ExpPolySqrt { w: p(&[-1, 2]), p: p(&[1, 3, -1]), sign: Sign::Plus },
            GfClass::ExpPolySqrt { w: p(&[0, 1, 1]), p: Poly::zero(), sign: Sign::Plus },
            GfClass::ExpRationalTimesRoot { q: p(&[0, 1]), v: p(&[1, -1]), p: p(&[1]), r: int(1) },
            GfClass::ExpRationalTimesRoot { q: p(&[0, 2, 1]), v: p(&[1, 1]), p: p(&[1, -3]), r: rat(2, 3) },
            GfClass::LogRational { q: p(&[1, 1]), v: p(&[1, -2]) },
            GfClass::PowerOfFirstOrder { l: p(&[1, -1, -2]), h: p(&[2, 3]), r: int(2) },
        ];
        for class in &classes {
            assert_residual_vanishes(class);
        }
    }

    #[test]
    fn degenerate_nested_root_is_flagged() {
        let class = GfClass::NestedSqrt { w: p(&[2, 2]), p: p(&[4, 8, 4]), r: int(2) };
        assert_eq!(derive_ode(&class), Err(OdeError::Degenerate(Degeneracy::SquareCase)));
        assert!(matches!(
            derive_ode(&GfClass::Hypergeometric { alphas: vec![], betas: vec![], t: 0, r: 1, c: int(1) }),
            Err(OdeError::NoOde(_))
        ));
    }
}
