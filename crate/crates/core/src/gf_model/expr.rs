use std::fmt;

use num_traits::Signed;

use crate::exactmath::{format_rational, Rational};

/// Abstract syntax tree of a generating-function expression in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
    Sqrt(Box<Expr>),
    /// `root(e, r)` is `e^(1/r)`.
    Root(Box<Expr>, Rational),
    Exp(Box<Expr>),
    Log(Box<Expr>),
}

impl Expr {
    pub fn num(n: i64) -> Expr {
        Expr::Num(crate::exactmath::int(n))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, e: Rational) -> Expr {
        Expr::Pow(Box::new(a), e)
    }
}

/// Fully parenthesized rendering that the parser reads back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) if q.is_negative() => write!(f, "(-{})", format_rational(&-q)),
            Expr::Num(q) if !q.is_integer() => write!(f, "({})", format_rational(q)),
            Expr::Num(q) => write!(f, "{}", format_rational(q)),
            Expr::X => f.write_str("x"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => write!(f, "({a})^({})", format_rational(e)),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Root(a, r) => write!(f, "root({a}, {})", format_rational(r)),
            Expr::Exp(a) => write!(f, "exp({a})"),
            Expr::Log(a) => write!(f, "log({a})"),
        }
    }
}
