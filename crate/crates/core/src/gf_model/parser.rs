//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | factor
//! factor   := atom ('^' exponent)?
//! exponent := integer | '-' integer | '(' rational ')'
//! atom     := integer | 'x' | '(' expr ')'
//!           | ('sqrt' | 'exp' | 'log') '(' expr ')'
//!           | 'root' '(' expr ',' rational ')'
//! rational := '-'? integer ('/' integer)?
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::expr::Expr;
use super::GfError;
use crate::exactmath::{Poly, Rational};

pub fn parse_expression(text: &str) -> Result<Expr, GfError> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.syntax("empty expression"));
    }
    let expr = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(expr)
}

/// Parses an expression that must denote a polynomial in `x`: sums, products,
/// nonnegative integer powers, and division by nonzero constants.
pub fn parse_polynomial(text: &str) -> Result<Poly, GfError> {
    to_poly(&parse_expression(text)?)
}

fn to_poly(e: &Expr) -> Result<Poly, GfError> {
    let not_poly = || GfError::unsupported(format!("'{e}' is not a polynomial"));
    Ok(match e {
        Expr::Num(c) => Poly::constant(c.clone()),
        Expr::X => Poly::x(),
        Expr::Neg(a) => -&to_poly(a)?,
        Expr::Add(a, b) => &to_poly(a)? + &to_poly(b)?,
        Expr::Sub(a, b) => &to_poly(a)? - &to_poly(b)?,
        Expr::Mul(a, b) => &to_poly(a)? * &to_poly(b)?,
        Expr::Div(a, b) => {
            let d = to_poly(b)?;
            if !d.is_constant() || d.is_zero() {
                return Err(not_poly());
            }
            to_poly(a)?.scale(&d.constant_term().recip())
        }
        Expr::Pow(a, k) => {
            let k = k.is_integer().then(|| k.to_integer()).and_then(|k| u32::try_from(k).ok());
            to_poly(a)?.pow(k.ok_or_else(not_poly)?)
        }
        _ => return Err(not_poly()),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), GfError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn syntax(&self, message: &str) -> GfError {
        GfError::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn expr(&mut self) -> Result<Expr, GfError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::add(lhs, self.term()?);
            } else if self.eat(b'-') {
                lhs = Expr::sub(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, GfError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::mul(lhs, self.unary()?);
            } else if self.eat(b'/') {
                lhs = Expr::div(lhs, self.unary()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, GfError> {
        if self.eat(b'-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr, GfError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            Ok(Expr::pow(base, e))
        } else {
            Ok(base)
        }
    }

    fn exponent(&mut self) -> Result<Rational, GfError> {
        let start = self.pos;
        let malformed = |_| GfError::MalformedExponent { offset: start };
        if self.eat(b'(') {
            let q = self.rational().map_err(malformed)?;
            self.expect(b')').map_err(malformed)?;
            Ok(q)
        } else {
            let negative = self.eat(b'-');
            let n = self.integer().map_err(malformed)?;
            Ok(Rational::from_integer(if negative { -n } else { n }))
        }
    }

    fn rational(&mut self) -> Result<Rational, GfError> {
        let negative = self.eat(b'-');
        let num = self.integer()?;
        let den = if self.eat(b'/') { self.integer()? } else { BigInt::from(1) };
        if den.is_zero() {
            return Err(self.syntax("zero denominator"));
        }
        let q = Rational::new(num, den);
        Ok(if negative { -q } else { q })
    }

    fn integer(&mut self) -> Result<BigInt, GfError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn atom(&mut self) -> Result<Expr, GfError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(Rational::from_integer(self.integer()?))),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match name {
                    "x" => Ok(Expr::X),
                    "sqrt" | "exp" | "log" => {
                        self.expect(b'(')?;
                        let arg = Box::new(self.expr()?);
                        self.expect(b')')?;
                        Ok(match name {
                            "sqrt" => Expr::Sqrt(arg),
                            "exp" => Expr::Exp(arg),
                            _ => Expr::Log(arg),
                        })
                    }
                    "root" => {
                        self.expect(b'(')?;
                        let arg = Box::new(self.expr()?);
                        self.expect(b',')?;
                        let r_start = self.pos;
                        let r = self
                            .rational()
                            .map_err(|_| GfError::MalformedExponent { offset: r_start })?;
                        if r.is_zero() {
                            return Err(GfError::MalformedExponent { offset: r_start });
                        }
                        self.expect(b')')?;
                        Ok(Expr::Root(arg, r))
                    }
                    _ => Err(GfError::UnknownIdentifier { offset: start, name: name.to_string() }),
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use proptest::prelude::*;

    fn sub_one(e: Expr) -> Expr {
        Expr::sub(Expr::num(1), e)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse_expression("1/sqrt(1-4*x)").unwrap(),
            Expr::div(Expr::num(1), Expr::Sqrt(Box::new(sub_one(Expr::mul(Expr::num(4), Expr::X)))))
        );
        assert_eq!(
            parse_expression("exp(x/(1-x))").unwrap(),
            Expr::Exp(Box::new(Expr::div(Expr::X, sub_one(Expr::X))))
        );
        let poly = Expr::sub(
            Expr::sub(Expr::num(1), Expr::mul(Expr::num(2), Expr::X)),
            Expr::mul(Expr::num(3), Expr::pow(Expr::X, int(2))),
        );
        assert_eq!(parse_expression("(1-2*x-3*x^2)^(-1/2)").unwrap(), Expr::pow(poly, rat(-1, 2)));
    }

    #[test]
    fn root_and_signed_exponents() {
        assert_eq!(
            parse_expression(" root( x , -3/2 ) ").unwrap(),
            Expr::Root(Box::new(Expr::X), rat(-3, 2))
        );
        assert_eq!(parse_expression("x^-2").unwrap(), Expr::pow(Expr::X, int(-2)));
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            parse_expression("1 + y"),
            Err(GfError::UnknownIdentifier { offset: 4, name: "y".into() })
        );
        assert_eq!(parse_expression("x^(1/0)"), Err(GfError::MalformedExponent { offset: 2 }));
        assert_eq!(parse_expression("x^a"), Err(GfError::MalformedExponent { offset: 2 }));
        assert!(matches!(parse_expression("2x"), Err(GfError::Syntax { offset: 1, .. })));
        assert!(matches!(parse_expression("(1+x"), Err(GfError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_expression("   "), Err(GfError::Syntax { .. })));
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![(0i64..50).prop_map(Expr::num), Just(Expr::X)];
        leaf.prop_recursive(4, 32, 2, |inner| {
            let exponent = (-5i64..5, 1i64..4).prop_map(|(a, b)| rat(a, b));
            prop_oneof![
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::div(a, b)),
                (inner.clone(), exponent.clone()).prop_map(|(a, e)| Expr::pow(a, e)),
                inner.clone().prop_map(|e| Expr::Sqrt(Box::new(e))),
                (inner.clone(), exponent.prop_filter("nonzero", |q| !q.is_zero()))
                    .prop_map(|(a, r)| Expr::Root(Box::new(a), r)),
                inner.clone().prop_map(|e| Expr::Exp(Box::new(e))),
                inner.prop_map(|e| Expr::Log(Box::new(e))),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(e in arb_expr()) {
            let printed = e.to_string();
            prop_assert_eq!(parse_expression(&printed).unwrap(), e);
        }
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("6+x*(3+x)*(6+x)").unwrap();
        assert_eq!(p, Poly::from_i64s(&[6, 18, 9, 1]));
        let p = parse_polynomial("x+x^2-x^3/6").unwrap();
        assert_eq!(p.coeff(3), Rational::new((-1).into(), 6.into()));
        assert!(parse_polynomial("1/(1-x)").is_err());
        assert!(parse_polynomial("sqrt(1-x)").is_err());
        assert!(parse_polynomial("x^(1/2)").is_err());
    }
}
