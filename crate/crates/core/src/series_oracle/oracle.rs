use num_traits::{One, Zero};

use super::series::{
    poly_pow_series, series_div, series_exp, series_log, series_pow_general, TruncatedSeries,
};
use super::OracleError;
use crate::exactmath::{int, Poly, Rational};
use crate::gf_model::{Expr, GfClass};

/// Extra working orders tried in turn when divisions by powers of `x` eat precision.
const MARGINS: [usize; 5] = [0, 8, 32, 128, 512];

fn with_margin(
    n: usize,
    mut f: impl FnMut(usize) -> Result<TruncatedSeries, OracleError>,
) -> Result<TruncatedSeries, OracleError> {
    for m in MARGINS {
        match f(n + m) {
            Ok(s) if s.order() >= n => return Ok(s.truncate(n)),
            Ok(_) | Err(OracleError::PrecisionExhausted) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(OracleError::PrecisionExhausted)
}

fn poly(p: &Poly, m: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(p, m)
}

/// The first `n + 1` coefficients of the class's generating function, exactly.
pub fn oracle_expand(class: &GfClass, n: usize) -> Result<TruncatedSeries, OracleError> {
    class
        .validate()
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    let half = Rational::new(1.into(), 2.into());
    match class {
        GfClass::InverseRoot { p, r } => poly_pow_series(p, &-r.recip(), n),
        GfClass::GeneralRoot { q, v, p, r } => with_margin(n, |m| {
            let root = poly_pow_series(p, &-r.recip(), m)?;
            series_div(&poly(q, m).mul(&root), &poly(v, m))
        }),
        GfClass::SqrtRatio { q, p } => with_margin(n, |m| {
            series_div(&poly_pow_series(q, &half, m)?, &poly_pow_series(p, &half, m)?)
        }),
        GfClass::RootedDenominator { q, w, v, p } => with_margin(n, |m| {
            let den = poly(w, m).add(&poly(v, m).mul(&poly_pow_series(p, &half, m)?));
            series_div(&poly(q, m), &den)
        }),
        GfClass::RootedNumerator { w, v, p, q, r } => with_margin(n, |m| {
            let num = poly(w, m).add(&poly(v, m).mul(&poly_pow_series(p, &r.recip(), m)?));
            series_div(&num, &poly(q, m))
        }),
        GfClass::NestedSqrt { w, p, r } => with_margin(n, |m| {
            let inner = poly(w, m).add(&poly_pow_series(p, &half, m)?);
            series_pow_general(&inner, &r.recip())
        }),
        GfClass::ExpPolySqrt { w, p, sign } => {
            let root = if p.is_zero() {
                TruncatedSeries::zeros(n)
            } else {
                poly_pow_series(p, &half, n)?.scale(&int(sign.as_i64()))
            };
            series_exp(&poly(w, n).add(&root))
        }
        GfClass::ExpRationalTimesRoot { q, v, p, r } => with_margin(n, |m| {
            let arg = series_div(&poly(q, m), &poly(v, m))?;
            let e = series_exp(&arg)?;
            Ok(e.mul(&poly_pow_series(p, &-r.recip(), e.order())?))
        }),
        GfClass::LogRational { q, v } => with_margin(n, |m| {
            series_log(&series_div(&poly(q, m), &poly(v, m))?)
        }),
        GfClass::Hypergeometric { alphas, betas, t, r, c } => {
            let mut out = vec![Rational::zero(); n + 1];
            let mut term = Rational::one();
            let mut m: usize = 0;
            loop {
                let idx = *t as usize + *r as usize * m;
                if idx > n {
                    break;
                }
                out[idx] = term.clone();
                let k = int(m as i64);
                let num: Rational = alphas.iter().map(|a| a + &k).product();
                let den: Rational = betas.iter().map(|b| b + &k).product::<Rational>()
                    * int(m as i64 + 1)
                    * c;
                if num.is_zero() {
                    break;
                }
                term = term * num / den;
                m += 1;
            }
            Ok(TruncatedSeries::new(out))
        }
        GfClass::PowerOfFirstOrder { l, h, r } => {
            let ratio = series_div(&poly(h, n), &poly(l, n))?;
            let log_g = ratio.integral().scale(&-r.recip());
            Ok(series_exp(&log_g)?.truncate(n))
        }
    }
}

/// Direct series evaluation of an expression tree, independent of classification.
pub fn expand_expr(expr: &Expr, n: usize) -> Result<TruncatedSeries, OracleError> {
    with_margin(n, |m| eval(expr, m))
}

fn eval(e: &Expr, m: usize) -> Result<TruncatedSeries, OracleError> {
    let half = Rational::new(1.into(), 2.into());
    Ok(match e {
        Expr::Num(q) => TruncatedSeries::one(m).scale(q),
        Expr::X => poly(&Poly::x(), m),
        Expr::Neg(a) => eval(a, m)?.neg(),
        Expr::Add(a, b) => eval(a, m)?.add(&eval(b, m)?),
        Expr::Sub(a, b) => eval(a, m)?.sub(&eval(b, m)?),
        Expr::Mul(a, b) => eval(a, m)?.mul(&eval(b, m)?),
        Expr::Div(a, b) => series_div(&eval(a, m)?, &eval(b, m)?)?,
        Expr::Pow(a, q) => series_pow_general(&eval(a, m)?, q)?,
        Expr::Sqrt(a) => series_pow_general(&eval(a, m)?, &half)?,
        Expr::Root(a, r) => series_pow_general(&eval(a, m)?, &r.recip())?,
        Expr::Exp(a) => series_exp(&eval(a, m)?)?,
        Expr::Log(a) => series_log(&eval(a, m)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::gf_model::{classify_str, parse_expression, Sign};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn spec_examples() {
        let s = oracle_expand(&GfClass::InverseRoot { p: p(&[1, -6, 1]), r: int(2) }, 4).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 3, 13, 63, 321]).as_slice());
        let s = oracle_expand(&GfClass::LogRational { q: p(&[1]), v: p(&[1, -1]) }, 4).unwrap();
        assert_eq!(s.coeffs(), &[int(0), int(1), rat(1, 2), rat(1, 3), rat(1, 4)]);
        let s = oracle_expand(&GfClass::NestedSqrt { w: p(&[3]), p: p(&[1, -4]), r: int(2) }, 0).unwrap();
        assert_eq!(s.coeffs(), &[int(2)]);
    }

    #[test]
    fn inverse_root_of_order_one_is_rational_division() {
        let q = p(&[1, -3, 2, 5]);
        let s = oracle_expand(&GfClass::InverseRoot { p: q.clone(), r: int(1) }, 30).unwrap();
        let d = series_div(&TruncatedSeries::one(30), &poly(&q, 30)).unwrap();
        assert_eq!(s, d);
    }

    #[test]
    fn hypergeometric_matches_binomial_series() {
        // (1 - x)^a = 1F0(-a;;x)
        for a in [rat(1, 2), rat(-3, 2), int(4)] {
            let h = GfClass::Hypergeometric { alphas: vec![-a.clone()], betas: vec![], t: 0, r: 1, c: int(1) };
            let direct = poly_pow_series(&p(&[1, -1]), &a, 40).unwrap();
            assert_eq!(oracle_expand(&h, 40).unwrap(), direct);
        }
        // log(1 + x) = x 2F1(1, 1; 2; -x)
        let h = GfClass::Hypergeometric { alphas: vec![int(1), int(1)], betas: vec![int(2)], t: 1, r: 1, c: int(-1) };
        let log = oracle_expand(&GfClass::LogRational { q: p(&[1, 1]), v: p(&[1]) }, 30).unwrap();
        assert_eq!(oracle_expand(&h, 30).unwrap(), log);
    }

    #[test]
    fn preconditions_are_hard_errors() {
        assert!(oracle_expand(&GfClass::InverseRoot { p: p(&[2, 1]), r: int(2) }, 5).is_err());
        assert!(oracle_expand(&GfClass::LogRational { q: p(&[2, 1]), v: p(&[1]) }, 5).is_err());
        let e = GfClass::ExpPolySqrt { w: p(&[0, 1]), p: p(&[1, -4]), sign: Sign::Plus };
        assert!(oracle_expand(&e, 5).is_err());
        let e = GfClass::ExpPolySqrt { w: p(&[1, 1]), p: p(&[1, -4]), sign: Sign::Minus };
        assert!(oracle_expand(&e, 5).is_ok());
    }

    #[test]
    fn classified_expressions_match_direct_evaluation() {
        for s in [
            "1/sqrt(1-2*x-3*x^2)",
            "(1+2*x)/sqrt(1-4*x^2)",
            "sqrt((1+x)/(1-3*x))",
            "(1-x)*sqrt(1-4*x)",
            "1/sqrt(4-x)",
            "(1-4*x)^(3/2)",
            "1/(-x+(1+x)*sqrt(1-2*x-3*x^2))",
            "(1-2*x-3*x^2-(1-x)*sqrt(1-2*x-7*x^2))/(8*x^3)",
            "(1-sqrt(1-4*x))/(2*x)",
            "sqrt(3+sqrt(1-4*x))",
            "root(7+x+sqrt(1-x^2), 3)",
            "exp(x/(1-x))",
            "exp(x)/sqrt(1-2*x)",
            "exp(x+x^2/2)",
            "exp(1-sqrt(1-4*x))",
            "log((1)/(1-x))",
            "log((1+x)/(1-2*x))",
            "1/(1-x) + 1/sqrt(1-4*x)",
        ] {
            let class = classify_str(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            let direct = expand_expr(&parse_expression(s).unwrap(), 30).unwrap();
            assert_eq!(oracle_expand(&class, 30).unwrap(), direct, "{s} as {class}");
        }
    }
}
