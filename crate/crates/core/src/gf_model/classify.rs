//! Classification of expression trees into [`GfClass`] shapes.
//!
//! The tree is evaluated bottom-up into a small algebra of normal forms:
//! rational functions, `a + b·R^e` with a single radical `R^e`, nested square
//! roots, exponentials with a radical cofactor, and logarithms of rational
//! functions. The final form is then matched against the class templates,
//! preferring the class with the fewest parameters.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::class::{GfClass, Sign};
use super::expr::Expr;
use super::parser::parse_expression;
use super::GfError;
use crate::exactmath::{int, poly_gcd, primitive_together, rational_pow, Poly, Rational};

pub fn classify_str(text: &str) -> Result<GfClass, GfError> {
    classify(&parse_expression(text)?)
}

/// Maps an expression onto the unique matching class after normalization.
pub fn classify(expr: &Expr) -> Result<GfClass, GfError> {
    if let Expr::Div(num, den) = expr {
        let n = eval(num)?;
        let d = eval(den)?;
        if let (Form::Alg(n), Form::Alg(d)) = (&n, &d) {
            if let Some(class) = rooted_denominator(n, d)? {
                return finish(class);
            }
        }
        return finish(from_form(n.div(d)?)?);
    }
    finish(from_form(eval(expr)?)?)
}

fn finish(class: GfClass) -> Result<GfClass, GfError> {
    class.validate()?;
    Ok(class)
}

/// Reduced quotient `num / den` with the lowest nonzero coefficient of `den` equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    fn new(num: Poly, den: Poly) -> Result<RatFn, GfError> {
        if den.is_zero() {
            return Err(GfError::unsupported("division by zero"));
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = poly_gcd(&num, &den).expect("nonzero operands");
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let low = den.coeff(den.valuation().expect("nonzero")).recip();
        Ok(RatFn { num: num.scale(&low), den: den.scale(&low) })
    }

    fn poly(p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::one() }
    }

    fn constant(c: Rational) -> RatFn {
        RatFn::poly(Poly::constant(c))
    }

    fn zero() -> RatFn {
        RatFn::poly(Poly::zero())
    }

    fn one() -> RatFn {
        RatFn::poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
            .expect("nonzero denominators")
    }

    fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }

    fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }

    fn recip(&self) -> Result<RatFn, GfError> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    fn scale(&self, c: &Rational) -> RatFn {
        RatFn::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    fn powi(&self, k: i64) -> Result<RatFn, GfError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(k.unsigned_abs())
            .map_err(|_| GfError::unsupported("exponent too large"))?;
        RatFn::new(base.num.pow(k), base.den.pow(k))
    }

    fn value_at_zero(&self) -> Result<Rational, GfError> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(GfError::unsupported("pole at x = 0"));
        }
        Ok(self.num.constant_term() / d0)
    }

    /// `x^k` for any integer `k`.
    fn x_pow(k: i64) -> RatFn {
        let m = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFn::poly(m)
        } else {
            RatFn { num: Poly::one(), den: m }
        }
    }
}

/// `base^e` with `base(0) = 1` and `0 < e < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Radical {
    base: RatFn,
    e: Rational,
}

/// Writes `base^e` as `coeff · radical`, pulling out integer powers, powers of
/// `x`, and the constant term.
fn make_radical(base: &RatFn, e: &Rational) -> Result<(RatFn, Option<Radical>), GfError> {
    if base.is_zero() {
        return if e.is_positive() {
            Ok((RatFn::zero(), None))
        } else {
            Err(GfError::unsupported("zero raised to a nonpositive power"))
        };
    }
    let whole = e.floor();
    let frac = e - &whole;
    let mut coeff = base.powi(whole.to_integer().to_i64().ok_or_else(|| {
        GfError::unsupported("exponent too large")
    })?)?;
    if frac.is_zero() {
        return Ok((coeff, None));
    }
    let vn = base.num.valuation().expect("nonzero") as i64;
    let vd = base.den.valuation().expect("nonzero") as i64;
    let xv = Rational::from_integer((vn - vd).into()) * &frac;
    if !xv.is_integer() {
        return Err(GfError::unsupported("fractional power of x at the origin"));
    }
    coeff = coeff.mul(&RatFn::x_pow(xv.to_integer().to_i64().expect("small valuation")));
    let n1 = Poly::new(base.num.coeffs()[vn as usize..].to_vec());
    let d1 = Poly::new(base.den.coeffs()[vd as usize..].to_vec());
    let c = n1.constant_term() / d1.constant_term();
    let c_root = rational_pow(&c, &frac).ok_or_else(|| {
        GfError::unsupported("constant term is not a perfect power of the root index")
    })?;
    coeff = coeff.scale(&c_root);
    let n1 = n1.scale(&n1.constant_term().recip());
    let d1 = d1.scale(&d1.constant_term().recip());
    if n1.is_one() && d1.is_one() {
        return Ok((coeff, None));
    }
    Ok((coeff, Some(Radical { base: RatFn { num: n1, den: d1 }, e: frac })))
}

/// `a + b·rad`; `rad` is `None` exactly when `b` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Alg {
    a: RatFn,
    b: RatFn,
    rad: Option<Radical>,
}

impl Alg {
    fn rational(a: RatFn) -> Alg {
        Alg { a, b: RatFn::zero(), rad: None }
    }

    fn from_parts(a: RatFn, b: RatFn, rad: Option<Radical>) -> Alg {
        if b.is_zero() || rad.is_none() {
            let a = if rad.is_none() { a.add(&b) } else { a };
            Alg::rational(a)
        } else {
            Alg { a, b, rad }
        }
    }

    fn pure(coeff: RatFn, rad: Option<Radical>) -> Alg {
        match rad {
            Some(r) => Alg::from_parts(RatFn::zero(), coeff, Some(r)),
            None => Alg::rational(coeff),
        }
    }

    fn is_pure(&self) -> bool {
        self.rad.is_some() && self.a.is_zero()
    }

    fn half_root(&self) -> bool {
        self.rad.as_ref().is_some_and(|r| r.e == Rational::new(1.into(), 2.into()))
    }

    fn neg(&self) -> Alg {
        Alg { a: self.a.neg(), b: self.b.neg(), rad: self.rad.clone() }
    }

    fn scale(&self, c: &Rational) -> Alg {
        Alg::from_parts(self.a.scale(c), self.b.scale(c), self.rad.clone())
    }

    fn add(&self, o: &Alg) -> Result<Alg, GfError> {
        match (&self.rad, &o.rad) {
            (None, _) => Ok(Alg::from_parts(self.a.add(&o.a), o.b.clone(), o.rad.clone())),
            (_, None) => Ok(Alg::from_parts(self.a.add(&o.a), self.b.clone(), self.rad.clone())),
            (Some(r1), Some(r2)) if r1 == r2 => {
                Ok(Alg::from_parts(self.a.add(&o.a), self.b.add(&o.b), self.rad.clone()))
            }
            _ => Err(GfError::unsupported("sum of distinct radicals")),
        }
    }

    fn mul(&self, o: &Alg) -> Result<Alg, GfError> {
        match (&self.rad, &o.rad) {
            (None, _) => Ok(Alg::from_parts(self.a.mul(&o.a), self.a.mul(&o.b), o.rad.clone())),
            (_, None) => Ok(Alg::from_parts(o.a.mul(&self.a), o.a.mul(&self.b), self.rad.clone())),
            (Some(r1), Some(r2)) => {
                if self.is_pure() && o.is_pure() {
                    let (c, rad) = if r1 == r2 {
                        make_radical(&r1.base, &(&r1.e + &r2.e))?
                    } else {
                        combine_radicals(r1, r2)?
                    };
                    return Ok(Alg::pure(self.b.mul(&o.b).mul(&c), rad));
                }
                if r1 == r2 && self.half_root() {
                    let base = &r1.base;
                    let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(base));
                    let b = self.a.mul(&o.b).add(&o.a.mul(&self.b));
                    return Ok(Alg::from_parts(a, b, self.rad.clone()));
                }
                Err(GfError::unsupported("product of radical sums"))
            }
        }
    }

    fn recip(&self) -> Result<Alg, GfError> {
        match &self.rad {
            None => Ok(Alg::rational(self.a.recip()?)),
            Some(r) if self.a.is_zero() => {
                let (c, rad) = make_radical(&r.base, &-&r.e)?;
                Ok(Alg::pure(c.mul(&self.b.recip()?), rad))
            }
            Some(r) if self.half_root() => {
                let norm = self.a.mul(&self.a).add(&self.b.mul(&self.b).mul(&r.base).neg());
                let inv = norm.recip()?;
                Ok(Alg::from_parts(self.a.mul(&inv), self.b.neg().mul(&inv), self.rad.clone()))
            }
            Some(_) => Err(GfError::unsupported("reciprocal of a radical sum")),
        }
    }

    fn powi(&self, k: i64) -> Result<Alg, GfError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut result = Alg::rational(RatFn::one());
        for _ in 0..k.unsigned_abs() {
            result = result.mul(&base)?;
        }
        Ok(result)
    }
}

/// `r1^e1 · r2^e2` over a common root index.
fn combine_radicals(r1: &Radical, r2: &Radical) -> Result<(RatFn, Option<Radical>), GfError> {
    let m = r1.e.denom().lcm(r2.e.denom());
    let k1 = (&r1.e * Rational::from_integer(m.clone())).to_integer().to_i64();
    let k2 = (&r2.e * Rational::from_integer(m.clone())).to_integer().to_i64();
    let (Some(k1), Some(k2)) = (k1, k2) else {
        return Err(GfError::unsupported("root index too large"));
    };
    let base = r1.base.powi(k1)?.mul(&r2.base.powi(k2)?);
    make_radical(&base, &Rational::new(1.into(), m))
}

#[derive(Clone, Debug)]
enum Form {
    Alg(Alg),
    /// `(w + sqrt(p))^e`
    Nested { w: Poly, p: Poly, e: Rational },
    /// `exp(arg) · factor`
    Exp { arg: Alg, factor: Alg },
    Log(RatFn),
}

impl Form {
    fn add(self, o: Form) -> Result<Form, GfError> {
        match (self, o) {
            (Form::Alg(a), Form::Alg(b)) => Ok(Form::Alg(a.add(&b)?)),
            (Form::Log(a), Form::Log(b)) => Ok(Form::Log(a.mul(&b))),
            _ => Err(GfError::unsupported("sum of incompatible terms")),
        }
    }

    fn neg(self) -> Result<Form, GfError> {
        match self {
            Form::Alg(a) => Ok(Form::Alg(a.neg())),
            Form::Log(a) => Ok(Form::Log(a.recip()?)),
            Form::Exp { arg, factor } => Ok(Form::Exp { arg, factor: factor.neg() }),
            Form::Nested { .. } => Err(GfError::unsupported("negated nested root")),
        }
    }

    fn mul(self, o: Form) -> Result<Form, GfError> {
        match (self, o) {
            (Form::Alg(a), Form::Alg(b)) => Ok(Form::Alg(a.mul(&b)?)),
            (Form::Exp { arg, factor }, Form::Alg(b)) | (Form::Alg(b), Form::Exp { arg, factor }) => {
                Ok(Form::Exp { arg, factor: factor.mul(&b)? })
            }
            (Form::Exp { arg: a1, factor: f1 }, Form::Exp { arg: a2, factor: f2 }) => {
                Ok(Form::Exp { arg: a1.add(&a2)?, factor: f1.mul(&f2)? })
            }
            (Form::Nested { w, p, e }, Form::Alg(b)) | (Form::Alg(b), Form::Nested { w, p, e })
                if b.rad.is_none() && b.a.is_one() =>
            {
                Ok(Form::Nested { w, p, e })
            }
            _ => Err(GfError::unsupported("product of incompatible factors")),
        }
    }

    fn recip(self) -> Result<Form, GfError> {
        match self {
            Form::Alg(a) => Ok(Form::Alg(a.recip()?)),
            Form::Exp { arg, factor } => Ok(Form::Exp { arg: arg.neg(), factor: factor.recip()? }),
            Form::Nested { w, p, e } => Ok(Form::Nested { w, p, e: -e }),
            Form::Log(_) => Err(GfError::unsupported("reciprocal of a logarithm")),
        }
    }

    fn div(self, o: Form) -> Result<Form, GfError> {
        self.mul(o.recip()?)
    }

    fn pow(self, e: &Rational) -> Result<Form, GfError> {
        match self {
            Form::Alg(a) => alg_pow(&a, e),
            Form::Exp { arg, factor } => {
                let Form::Alg(factor) = alg_pow(&factor, e)? else {
                    return Err(GfError::unsupported("power of an exponential product"));
                };
                Ok(Form::Exp { arg: arg.scale(e), factor })
            }
            Form::Nested { w, p, e: inner } => Ok(Form::Nested { w, p, e: inner * e }),
            Form::Log(_) => Err(GfError::unsupported("power of a logarithm")),
        }
    }
}

fn alg_pow(a: &Alg, e: &Rational) -> Result<Form, GfError> {
    if e.is_integer() {
        let k = e.to_integer().to_i64().ok_or_else(|| GfError::unsupported("exponent too large"))?;
        return Ok(Form::Alg(a.powi(k)?));
    }
    match &a.rad {
        None => {
            let (c, rad) = make_radical(&a.a, e)?;
            Ok(Form::Alg(Alg::pure(c, rad)))
        }
        Some(r) if a.a.is_zero() => {
            let (c1, r1) = make_radical(&a.b, e)?;
            let (c2, r2) = make_radical(&r.base, &(&r.e * e))?;
            Ok(Form::Alg(Alg::pure(c1, r1).mul(&Alg::pure(c2, r2))?))
        }
        Some(_) if a.half_root() => {
            let (w, b, p) = sqrt_sum_polys(a)?;
            if !b.coeff(b.valuation().expect("nonzero")).is_positive() {
                return Err(GfError::unsupported("nested root over w - sqrt(p) branch"));
            }
            let p = &(&b * &b) * &p;
            Ok(Form::Nested { w, p, e: e.clone() })
        }
        Some(_) => Err(GfError::unsupported("fractional power of a radical sum")),
    }
}

/// For `a + b·sqrt(N/D)` returns polynomials `(a, b/D, N·D)` so that the form is
/// `a + (b/D)·sqrt(N·D)`.
fn sqrt_sum_polys(f: &Alg) -> Result<(Poly, Poly, Poly), GfError> {
    let r = f.rad.as_ref().expect("radical present");
    let w = f.a.as_poly().ok_or_else(|| GfError::unsupported("non-polynomial term beside a square root"))?;
    let b = f.b.mul(&RatFn { num: Poly::one(), den: r.base.den.clone() });
    let b = b
        .as_poly()
        .ok_or_else(|| GfError::unsupported("non-polynomial square root coefficient"))?;
    Ok((w.clone(), b.clone(), &r.base.num * &r.base.den))
}

fn eval(e: &Expr) -> Result<Form, GfError> {
    match e {
        Expr::Num(q) => Ok(Form::Alg(Alg::rational(RatFn::constant(q.clone())))),
        Expr::X => Ok(Form::Alg(Alg::rational(RatFn::poly(Poly::x())))),
        Expr::Neg(a) => eval(a)?.neg(),
        Expr::Add(a, b) => eval(a)?.add(eval(b)?),
        Expr::Sub(a, b) => eval(a)?.add(eval(b)?.neg()?),
        Expr::Mul(a, b) => eval(a)?.mul(eval(b)?),
        Expr::Div(a, b) => eval(a)?.div(eval(b)?),
        Expr::Pow(a, q) => eval(a)?.pow(q),
        Expr::Sqrt(a) => eval(a)?.pow(&Rational::new(1.into(), 2.into())),
        Expr::Root(a, r) => eval(a)?.pow(&r.recip()),
        Expr::Exp(a) => match eval(a)? {
            Form::Alg(arg) => Ok(Form::Exp { arg, factor: Alg::rational(RatFn::one()) }),
            _ => Err(GfError::unsupported("exponential of a non-algebraic argument")),
        },
        Expr::Log(a) => match eval(a)? {
            Form::Alg(Alg { a, rad: None, .. }) => Ok(Form::Log(a)),
            _ => Err(GfError::unsupported("logarithm of a non-rational argument")),
        },
    }
}

/// Writes `b = c·N^j` for a constant `c` and an integer `j`, when possible.
/// Relies on `N(0) = 1` and on the normalized denominator of `b`.
fn power_of(b: &RatFn, n: &Poly) -> Option<(Rational, i64)> {
    if b.den.is_one() {
        let k = b.num.multiplicity_of(n);
        let c = b.num.constant_term();
        return (b.num == n.pow(k as u32).scale(&c)).then_some((c, k as i64));
    }
    if b.num.is_constant() {
        let k = b.den.multiplicity_of(n);
        return (k > 0 && b.den == n.pow(k as u32)).then(|| (b.num.constant_term(), -(k as i64)));
    }
    None
}

/// Common integer scaling; the last polynomial (a denominator) gets a positive
/// lowest coefficient.
fn int_scaled(polys: &[Poly]) -> Vec<Poly> {
    let out = primitive_together(polys);
    let flip = out
        .last()
        .and_then(|d| d.valuation().map(|v| d.coeff(v).is_negative()))
        .unwrap_or(false);
    if flip {
        out.iter().map(|p| -p).collect()
    } else {
        out
    }
}

fn from_form(form: Form) -> Result<GfClass, GfError> {
    match form {
        Form::Alg(a) => from_alg(a),
        Form::Nested { w, p, e } => Ok(GfClass::NestedSqrt { w, p, r: e.recip() }),
        Form::Exp { arg, factor } => from_exp(arg, factor),
        Form::Log(q) => {
            let v = int_scaled(&[q.num, q.den]);
            Ok(GfClass::LogRational { q: v[0].clone(), v: v[1].clone() })
        }
    }
}

fn from_alg(f: Alg) -> Result<GfClass, GfError> {
    let Some(rad) = f.rad.clone() else {
        let a = f.a;
        if a.is_zero() {
            return Err(GfError::unsupported("identically zero"));
        }
        a.value_at_zero()?;
        if a.num.is_one() {
            return Ok(GfClass::InverseRoot { p: a.den, r: int(1) });
        }
        let v = int_scaled(&[a.num, a.den]);
        return Ok(GfClass::GeneralRoot {
            q: v[0].clone(),
            v: Poly::one(),
            p: v[1].clone(),
            r: int(1),
        });
    };
    let (n, d, e) = (&rad.base.num, &rad.base.den, &rad.e);
    if f.a.is_zero() {
        let b = &f.b;
        // b·N^e = c·N^(j+e) and b·D^(-e) = c·D^(i-e)
        let folded = if d.is_one() {
            power_of(b, n).map(|(c, j)| (c, n.clone(), -(int(j) + e).recip()))
        } else if n.is_one() {
            power_of(b, d).map(|(c, i)| (c, d.clone(), (e - int(i)).recip()))
        } else {
            None
        };
        if let Some((c, p, r)) = folded {
            if c.is_one() {
                return Ok(GfClass::InverseRoot { p, r });
            }
            let c = int_scaled(&[Poly::constant(c), Poly::one()]);
            return Ok(GfClass::GeneralRoot { q: c[0].clone(), v: c[1].clone(), p, r });
        }
        let half = Rational::new(1.into(), 2.into());
        if *e == half && b.is_one() {
            return Ok(GfClass::SqrtRatio { q: n.clone(), p: d.clone() });
        }
        let qv = int_scaled(&[b.num.clone(), b.den.clone()]);
        let (q, v) = (qv[0].clone(), qv[1].clone());
        if d.is_one() {
            if v.is_one() {
                return Ok(GfClass::GeneralRoot { q, v, p: n.clone(), r: -e.recip() });
            }
            // q·N^e / v = (q·N) / (v·N^(1-e)), then cancel common factors.
            let qn = &q * n;
            let g = poly_gcd(&qn, &v).expect("nonzero operands");
            let qv = int_scaled(&[qn.exact_div(&g).expect("gcd divides"), v.exact_div(&g).expect("gcd divides")]);
            return Ok(GfClass::GeneralRoot {
                q: qv[0].clone(),
                v: qv[1].clone(),
                p: n.clone(),
                r: (int(1) - e).recip(),
            });
        }
        if n.is_one() {
            return Ok(GfClass::GeneralRoot { q, v, p: d.clone(), r: e.recip() });
        }
        let k = e.numer().to_u32().expect("small exponent");
        let m = e.denom().to_u32().expect("small root index");
        return Ok(GfClass::GeneralRoot {
            q: &q * n,
            v,
            p: &n.pow(m - k) * &d.pow(k),
            r: int(m as i64),
        });
    }
    // a + b·(N/D)^(k/m) = a + (b/D)·(N^k·D^(m-k))^(1/m)
    let k = e.numer().to_u32().expect("small exponent");
    let m = e.denom().to_u32().expect("small root index");
    let p = &n.pow(k) * &d.pow(m - k);
    let bd = f.b.mul(&RatFn { num: Poly::one(), den: d.clone() });
    let l = poly_lcm(&f.a.den, &bd.den);
    let w = &f.a.num * &l.exact_div(&f.a.den).expect("lcm multiple");
    let v = &bd.num * &l.exact_div(&bd.den).expect("lcm multiple");
    let scaled = int_scaled(&[w, v, l]);
    Ok(GfClass::RootedNumerator {
        w: scaled[0].clone(),
        v: scaled[1].clone(),
        p,
        q: scaled[2].clone(),
        r: int(m as i64),
    })
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    let g = poly_gcd(a, b).expect("nonzero operands");
    (a * b).exact_div(&g).expect("gcd divides")
}

fn from_exp(arg: Alg, factor: Alg) -> Result<GfClass, GfError> {
    if arg.rad.is_some() {
        if !factor.rad.is_none() || !factor.a.is_one() {
            return Err(GfError::unsupported("exp of a square-root sum times a cofactor"));
        }
        if !arg.half_root() {
            return Err(GfError::unsupported("exp of a non-square root"));
        }
        let (w, b, p) = sqrt_sum_polys(&arg)?;
        let lead = b.coeff(b.valuation().expect("nonzero"));
        let sign = if lead.is_positive() { Sign::Plus } else { Sign::Minus };
        return Ok(GfClass::ExpPolySqrt { w, p: &(&b * &b) * &p, sign });
    }
    let qv = int_scaled(&[arg.a.num.clone(), arg.a.den.clone()]);
    let (q, v) = (qv[0].clone(), qv[1].clone());
    let (p, r) = match &factor.rad {
        None if factor.a.num.is_one() => (factor.a.den.clone(), int(1)),
        None if factor.a.den.is_one() && factor.a.num.constant_term().is_one() => {
            (factor.a.num.clone(), int(-1))
        }
        Some(rad) if factor.a.is_zero() => {
            let (n, d, e) = (&rad.base.num, &rad.base.den, &rad.e);
            let unit = |pw: Option<(Rational, i64)>| pw.filter(|(c, _)| c.is_one()).map(|(_, j)| j);
            if let (true, Some(j)) = (d.is_one(), unit(power_of(&factor.b, n))) {
                (n.clone(), -(int(j) + e).recip())
            } else if let (true, Some(i)) = (n.is_one(), unit(power_of(&factor.b, d))) {
                (d.clone(), (e - int(i)).recip())
            } else {
                return Err(GfError::unsupported("exp times a non-root cofactor"));
            }
        }
        _ => return Err(GfError::unsupported("exp times a non-root cofactor")),
    };
    Ok(GfClass::ExpRationalTimesRoot { q, v, p, r })
}

/// `q / (w + v·sqrt(p))` with rational `q` over a mixed square-root denominator.
fn rooted_denominator(num: &Alg, den: &Alg) -> Result<Option<GfClass>, GfError> {
    if num.rad.is_some() || den.a.is_zero() || !den.half_root() {
        return Ok(None);
    }
    let rad = den.rad.as_ref().expect("radical present");
    // den = a + (b/D)·sqrt(N·D); clear every denominator with one common multiple.
    let bd = den.b.mul(&RatFn { num: Poly::one(), den: rad.base.den.clone() });
    let l = poly_lcm(&den.a.den, &bd.den);
    let w = &den.a.num * &l.exact_div(&den.a.den).expect("lcm multiple");
    let v = &bd.num * &l.exact_div(&bd.den).expect("lcm multiple");
    // num / (den_poly / l) = num·l / den_poly, and num = nn/nd.
    let q = &num.a.num * &l;
    let w = &w * &num.a.den;
    let v = &v * &num.a.den;
    let scaled = int_scaled(&[q, w, v]);
    Ok(Some(GfClass::RootedDenominator {
        q: scaled[0].clone(),
        w: scaled[1].clone(),
        v: scaled[2].clone(),
        p: &rad.base.num * &rad.base.den,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn cls(s: &str) -> GfClass {
        classify_str(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn inverse_roots() {
        assert_eq!(cls("1/sqrt(1-2*x-3*x^2)"), GfClass::InverseRoot { p: p(&[1, -2, -3]), r: int(2) });
        assert_eq!(cls("(1-4*x)^(-1/2)"), GfClass::InverseRoot { p: p(&[1, -4]), r: int(2) });
        assert_eq!(cls("root(1-9*x, 3)^(-1)"), GfClass::InverseRoot { p: p(&[1, -9]), r: int(3) });
        assert_eq!(cls("sqrt(1-4*x)"), GfClass::InverseRoot { p: p(&[1, -4]), r: int(-2) });
        assert_eq!(cls("(1-4*x)^(3/2)"), GfClass::InverseRoot { p: p(&[1, -4]), r: rat(-2, 3) });
        assert_eq!(cls("1/(1-x-x^2)"), GfClass::InverseRoot { p: p(&[1, -1, -1]), r: int(1) });
    }

    #[test]
    fn general_roots_and_ratios() {
        assert_eq!(
            cls("(1+2*x)/sqrt(1-4*x^2)"),
            GfClass::GeneralRoot { q: p(&[1, 2]), v: p(&[1]), p: p(&[1, 0, -4]), r: int(2) }
        );
        assert_eq!(
            cls("(1-x)*sqrt(1-4*x)"),
            GfClass::GeneralRoot { q: p(&[1, -1]), v: p(&[1]), p: p(&[1, -4]), r: int(-2) }
        );
        assert_eq!(
            cls("sqrt((1+x)/(1-3*x))"),
            GfClass::SqrtRatio { q: p(&[1, 1]), p: p(&[1, -3]) }
        );
        assert_eq!(
            cls("1/sqrt(4-x)"),
            GfClass::GeneralRoot { q: p(&[1]), v: p(&[2]), p: Poly::new(vec![int(1), rat(-1, 4)]), r: int(2) }
        );
    }

    #[test]
    fn rooted_shapes() {
        assert_eq!(
            cls("1/(-x+(1+x)*sqrt(1-2*x-3*x^2))"),
            GfClass::RootedDenominator { q: p(&[1]), w: p(&[0, -1]), v: p(&[1, 1]), p: p(&[1, -2, -3]) }
        );
        assert_eq!(
            cls("(1-2*x-3*x^2-(1-x)*sqrt(1-2*x-7*x^2))/(8*x^3)"),
            GfClass::RootedNumerator {
                w: p(&[1, -2, -3]),
                v: p(&[-1, 1]),
                p: p(&[1, -2, -7]),
                q: p(&[0, 0, 0, 8]),
                r: int(2),
            }
        );
    }

    #[test]
    fn nested_exp_log() {
        assert_eq!(cls("sqrt(3+sqrt(1-4*x))"), GfClass::NestedSqrt { w: p(&[3]), p: p(&[1, -4]), r: int(2) });
        assert_eq!(
            cls("exp(x/(1-x))"),
            GfClass::ExpRationalTimesRoot { q: p(&[0, 1]), v: p(&[1, -1]), p: p(&[1]), r: int(1) }
        );
        assert_eq!(
            cls("exp(x)/sqrt(1-2*x)"),
            GfClass::ExpRationalTimesRoot { q: p(&[0, 1]), v: p(&[1]), p: p(&[1, -2]), r: int(2) }
        );
        assert_eq!(
            cls("exp(1-sqrt(1-4*x))"),
            GfClass::ExpPolySqrt { w: p(&[1]), p: p(&[1, -4]), sign: Sign::Minus }
        );
        assert_eq!(cls("log((1)/(1-x))"), GfClass::LogRational { q: p(&[1]), v: p(&[1, -1]) });
        assert_eq!(cls("log(1+x)"), GfClass::LogRational { q: p(&[1, 1]), v: p(&[1]) });
    }

    #[test]
    fn rejected_shapes() {
        for s in ["sqrt(x)", "sqrt(2-x)", "sqrt(1+sqrt(1+sqrt(1-x)))", "log(x)*2", "1/x", "sqrt(1-x)+root(1+x,3)"] {
            assert!(
                matches!(classify_str(s), Err(GfError::UnsupportedShape(_))),
                "{s} should be unsupported"
            );
        }
    }
}
