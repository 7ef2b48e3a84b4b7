use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::GfError;
use crate::exactmath::serde_support::{rational, rationals};
use crate::exactmath::{format_rational, Poly, Rational};

/// Branch of the square root in `exp(w ± sqrt(p))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i64() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

/// The supported generating-function shapes.
///
/// Conventions: `p^(1/r)` denotes the real branch with value 1 at `x = 0` after
/// normalization, and every `r` is a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GfClass {
    /// `1 / p^(1/r)`
    InverseRoot {
        p: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
    /// `q / (v · p^(1/r))`
    GeneralRoot {
        q: Poly,
        v: Poly,
        p: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
    /// `sqrt(q / p)`
    SqrtRatio { q: Poly, p: Poly },
    /// `q / (w + v · sqrt(p))`
    RootedDenominator { q: Poly, w: Poly, v: Poly, p: Poly },
    /// `(w + v · p^(1/r)) / q`
    RootedNumerator {
        w: Poly,
        v: Poly,
        p: Poly,
        q: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
    /// `(w + sqrt(p))^(1/r)`
    NestedSqrt {
        w: Poly,
        p: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
    /// `exp(w ± sqrt(p))`
    ExpPolySqrt { w: Poly, p: Poly, sign: Sign },
    /// `exp(q / v) / p^(1/r)`
    ExpRationalTimesRoot {
        q: Poly,
        v: Poly,
        p: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
    /// `log(q / v)`
    LogRational { q: Poly, v: Poly },
    /// `x^t · pFq(alphas; betas; x^r / c)`
    Hypergeometric {
        #[serde(with = "rationals")]
        alphas: Vec<Rational>,
        #[serde(with = "rationals")]
        betas: Vec<Rational>,
        t: u32,
        r: u32,
        #[serde(with = "rational")]
        c: Rational,
    },
    /// `f^(1/r)` where `L f' + H f = 0` and `f(0) = 1`.
    PowerOfFirstOrder {
        l: Poly,
        h: Poly,
        #[serde(with = "rational")]
        r: Rational,
    },
}

impl GfClass {
    pub fn name(&self) -> &'static str {
        match self {
            GfClass::InverseRoot { .. } => "inverse-root",
            GfClass::GeneralRoot { .. } => "general-root",
            GfClass::SqrtRatio { .. } => "sqrt-ratio",
            GfClass::RootedDenominator { .. } => "rooted-denominator",
            GfClass::RootedNumerator { .. } => "rooted-numerator",
            GfClass::NestedSqrt { .. } => "nested-sqrt",
            GfClass::ExpPolySqrt { .. } => "exp-poly-sqrt",
            GfClass::ExpRationalTimesRoot { .. } => "exp-rational-times-root",
            GfClass::LogRational { .. } => "log-rational",
            GfClass::Hypergeometric { .. } => "hypergeometric",
            GfClass::PowerOfFirstOrder { .. } => "power-of-first-order",
        }
    }

    /// Structural checks that do not need series arithmetic.
    pub fn validate(&self) -> Result<(), GfError> {
        fn nonzero(p: &Poly, what: &str) -> Result<(), GfError> {
            if p.is_zero() {
                Err(GfError::InvalidParameter(format!("{what} must be a nonzero polynomial")))
            } else {
                Ok(())
            }
        }
        fn exponent(r: &Rational) -> Result<(), GfError> {
            if r.is_zero() {
                Err(GfError::InvalidParameter("r must be nonzero".into()))
            } else {
                Ok(())
            }
        }
        match self {
            GfClass::InverseRoot { p, r } => {
                nonzero(p, "p")?;
                exponent(r)
            }
            GfClass::GeneralRoot { q, v, p, r } | GfClass::ExpRationalTimesRoot { q, v, p, r } => {
                if matches!(self, GfClass::GeneralRoot { .. }) {
                    nonzero(q, "q")?;
                }
                nonzero(v, "v")?;
                nonzero(p, "p")?;
                exponent(r)
            }
            GfClass::SqrtRatio { q, p } => {
                nonzero(q, "q")?;
                nonzero(p, "p")
            }
            GfClass::RootedDenominator { q, v, p, .. } => {
                nonzero(q, "q")?;
                nonzero(v, "v")?;
                nonzero(p, "p")
            }
            GfClass::RootedNumerator { v, p, q, r, .. } => {
                nonzero(v, "v")?;
                nonzero(p, "p")?;
                nonzero(q, "q")?;
                exponent(r)
            }
            GfClass::NestedSqrt { p, r, .. } => {
                nonzero(p, "p")?;
                exponent(r)
            }
            GfClass::ExpPolySqrt { .. } => Ok(()),
            GfClass::LogRational { q, v } => {
                nonzero(q, "q")?;
                nonzero(v, "v")
            }
            GfClass::Hypergeometric { betas, r, c, .. } => {
                if *r == 0 {
                    return Err(GfError::InvalidParameter("stride r must be positive".into()));
                }
                if c.is_zero() {
                    return Err(GfError::InvalidParameter("c must be nonzero".into()));
                }
                if let Some(b) = betas.iter().find(|b| b.is_integer() && !b.is_positive()) {
                    return Err(GfError::InvalidParameter(format!(
                        "beta {} is a nonpositive integer",
                        format_rational(b)
                    )));
                }
                Ok(())
            }
            GfClass::PowerOfFirstOrder { l, r, .. } => {
                nonzero(l, "L")?;
                if l.constant_term().is_zero() {
                    return Err(GfError::InvalidParameter("L(0) must be nonzero".into()));
                }
                exponent(r)
            }
        }
    }
}

impl fmt::Display for GfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = format_rational;
        let list = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        write!(f, "{}", self.name())?;
        match self {
            GfClass::InverseRoot { p, r } => write!(f, " p = {p}; r = {}", q(r)),
            GfClass::GeneralRoot { q: qq, v, p, r } => {
                write!(f, " q = {qq}; v = {v}; p = {p}; r = {}", q(r))
            }
            GfClass::SqrtRatio { q: qq, p } => write!(f, " q = {qq}; p = {p}"),
            GfClass::RootedDenominator { q: qq, w, v, p } => {
                write!(f, " q = {qq}; w = {w}; v = {v}; p = {p}")
            }
            GfClass::RootedNumerator { w, v, p, q: qq, r } => {
                write!(f, " w = {w}; v = {v}; p = {p}; q = {qq}; r = {}", q(r))
            }
            GfClass::NestedSqrt { w, p, r } => write!(f, " w = {w}; p = {p}; r = {}", q(r)),
            GfClass::ExpPolySqrt { w, p, sign } => {
                write!(f, " w = {w}; p = {p}; sign = {}", sign.as_i64())
            }
            GfClass::ExpRationalTimesRoot { q: qq, v, p, r } => {
                write!(f, " q = {qq}; v = {v}; p = {p}; r = {}", q(r))
            }
            GfClass::LogRational { q: qq, v } => write!(f, " q = {qq}; v = {v}"),
            GfClass::Hypergeometric { alphas, betas, t, r, c } => write!(
                f,
                " alphas = [{}]; betas = [{}]; t = {t}; r = {r}; c = {}",
                list(alphas),
                list(betas),
                q(c)
            ),
            GfClass::PowerOfFirstOrder { l, h, r } => write!(f, " L = {l}; H = {h}; r = {}", q(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn json_round_trip_keeps_exact_values() {
        let class = GfClass::RootedNumerator {
            w: Poly::from_i64s(&[1, -2, -3]),
            v: Poly::from_i64s(&[-1, 1]),
            p: Poly::new(vec![int(1), rat(-2, 3)]),
            q: Poly::from_i64s(&[0, 0, 0, 8]),
            r: int(2),
        };
        let json = serde_json::to_string(&class).unwrap();
        assert!(json.contains("\"kind\":\"rooted-numerator\""));
        assert!(json.contains("\"-2/3\""));
        assert_eq!(serde_json::from_str::<GfClass>(&json).unwrap(), class);

        let hyper = GfClass::Hypergeometric {
            alphas: vec![int(1), int(1)],
            betas: vec![int(2)],
            t: 1,
            r: 1,
            c: int(-1),
        };
        let json = serde_json::to_string(&hyper).unwrap();
        assert_eq!(serde_json::from_str::<GfClass>(&json).unwrap(), hyper);
    }

    #[test]
    fn validation_guards() {
        let bad = GfClass::InverseRoot { p: Poly::from_i64s(&[1, -4]), r: int(0) };
        assert!(bad.validate().is_err());
        let bad = GfClass::Hypergeometric {
            alphas: vec![],
            betas: vec![int(-2)],
            t: 0,
            r: 1,
            c: int(1),
        };
        assert!(bad.validate().is_err());
        let bad = GfClass::LogRational { q: Poly::zero(), v: Poly::one() };
        assert!(bad.validate().is_err());
    }
}
