use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{common_denominator, format_rational, int, Rational};
use super::ExactMathError;

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` multiplies `x^i`; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients. The same type holds polynomials in the
/// recurrence index `n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `None` for the zero polynomial (degree −1 by convention).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer, −1 for the zero polynomial.
    pub fn signed_degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficient of `x^i`, zero outside the stored range.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Like [`Poly::coeff`] but tolerates negative indices.
    pub fn coeff_at(&self, i: i64) -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            self.coeff(i as usize)
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// `p(x + k)`.
    pub fn shift(&self, k: &Rational) -> Poly {
        let linear = Poly::new(vec![k.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &linear) + &Poly::constant(c.clone()))
    }

    pub fn shift_i64(&self, k: i64) -> Poly {
        self.shift(&int(k))
    }

    /// Multiplies by `x^k`.
    pub fn mul_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// How many times `factor` divides `self`. Constant factors report zero.
    pub fn multiplicity_of(&self, factor: &Poly) -> usize {
        if self.is_zero() || factor.is_constant() {
            return 0;
        }
        let mut count = 0;
        let mut current = self.clone();
        while let Some(q) = current.exact_div(factor) {
            count += 1;
            current = q;
        }
        count
    }

    /// Splits `self = content · primitive` where the primitive part has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::zero(), Poly::zero());
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let content = Rational::new(g.clone(), den);
        let prim = Poly::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        );
        (content, prim)
    }

    pub fn primitive(&self) -> Poly {
        self.content_and_primitive().1
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Nonnegative integer roots in increasing order.
    ///
    /// Candidates are bounded by the Cauchy root bound and must divide the
    /// lowest nonzero coefficient of the primitive integer form.
    pub fn nonnegative_integer_roots(&self) -> Vec<u64> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let prim = self.primitive();
        let ints = prim.integer_coeffs().expect("primitive part is integral");
        let v = prim.valuation().unwrap_or(0);
        let mut roots = Vec::new();
        if v > 0 {
            roots.push(0);
        }
        let lead = ints[deg].abs();
        let bound = ints[..deg]
            .iter()
            .map(|c| Rational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(Rational::zero)
            + Rational::one();
        let bound = bound.ceil().to_integer();
        let trailing = ints[v].abs();
        let limit = bound.min(trailing.clone());
        let Some(limit) = limit.to_u64() else {
            // Root bound beyond u64: fall back to divisor-free scan is infeasible.
            return roots;
        };
        for candidate in 1..=limit {
            if (&trailing % BigInt::from(candidate)).is_zero()
                && prim.eval(&Rational::from_integer(BigInt::from(candidate))).is_zero()
            {
                roots.push(candidate);
            }
        }
        roots
    }

    /// Renders with the given variable name, ascending powers, e.g. `1 - 2*x - 3*x^2`.
    /// The output is accepted by the expression parser.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), power));
            }
        }
        out
    }
}

/// Monic greatest common divisor over the rationals.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly, ExactMathError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactMathError::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        // Keep remainders monic so coefficient growth stays tame.
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

/// Monic gcd of a list of polynomials, skipping zeros. `None` if all are zero.
pub fn poly_gcd_all<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Option<Poly> {
    let mut acc: Option<Poly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => poly_gcd(&g, p).expect("nonzero operand"),
        });
        if acc.as_ref().is_some_and(Poly::is_one) {
            break;
        }
    }
    acc
}

/// Scales a family of polynomials by one common rational so that together they
/// have coprime integer coefficients. Ratios between them are preserved.
pub fn primitive_together(polys: &[Poly]) -> Vec<Poly> {
    let all: Vec<Rational> = polys.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
    if all.is_empty() {
        return polys.to_vec();
    }
    let den = common_denominator(&all);
    let g = all
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
    let scale = Rational::new(den, g);
    polys.iter().map(|p| p.scale(&scale)).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("x"))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { (&self).$method(&rhs) }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly { (&self).$method(rhs) }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly { self.$method(&rhs) }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(p(&[1, -4]) * p(&[1, 4]), p(&[1, 0, -16]));
        assert!((Poly::zero() * p(&[1, 1])).is_zero());
        let a = p(&[1, -2, -3]);
        assert_eq!(&a * &a, p(&[1, -4, -2, 12, 9]));
        assert_eq!((p(&[1, -4]) * p(&[1, 4])).degree(), Some(2));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, -6, 1]).derivative(), p(&[-6, 2]));
        assert!(p(&[7]).derivative().is_zero());
        assert_eq!(p(&[1, -2, -7]).derivative(), p(&[-2, -14]));
    }

    #[test]
    fn gcd_examples() {
        // x^2(1-x) and x^3
        assert_eq!(poly_gcd(&p(&[0, 0, 1, -1]), &p(&[0, 0, 0, 1])).unwrap(), p(&[0, 0, 1]));
        assert_eq!(poly_gcd(&p(&[1, 0, -1]), &p(&[1, -1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[1, -4]), &p(&[1, 4])).unwrap(), Poly::one());
        assert_eq!(
            poly_gcd(&Poly::zero(), &Poly::zero()),
            Err(ExactMathError::GcdOfZeros)
        );
        assert_eq!(
            poly_gcd(&Poly::zero(), &p(&[2, 4])).unwrap(),
            Poly::new(vec![rat(1, 2), int(1)])
        );
    }

    #[test]
    fn primitive_form() {
        let q = Poly::new(vec![rat(-3, 2), rat(9, 4), int(0), rat(-3, 4)]);
        let (c, prim) = q.content_and_primitive();
        assert_eq!(prim, p(&[2, -3, 0, 1]));
        assert_eq!(prim.scale(&c), q);
    }

    #[test]
    fn shift_and_roots() {
        assert_eq!(p(&[0, 0, 1]).shift_i64(1), p(&[1, 2, 1]));
        // (n-3)(n+2)(n-7) * 2 n
        let f = p(&[-3, 1]) * p(&[2, 1]) * p(&[-7, 1]) * p(&[0, 2]);
        assert_eq!(f.nonnegative_integer_roots(), vec![0, 3, 7]);
        assert!(p(&[5]).nonnegative_integer_roots().is_empty());
    }

    #[test]
    fn display_parses_back_in_shape() {
        let q = Poly::new(vec![int(1), rat(-3, 2), int(0), int(-1)]);
        assert_eq!(q.display_in("n"), "1 - 3/2*n - n^3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-9i64..=9, 0..5).prop_map(|c| Poly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn product_rule(a in small_poly(), b in small_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gcd_divides_and_cofactors_coprime(a in small_poly(), b in small_poly(), c in small_poly()) {
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = poly_gcd(&a, &b).unwrap();
            let qa = a.exact_div(&g);
            let qb = b.exact_div(&g);
            prop_assert!(qa.is_some() && qb.is_some());
            let (qa, qb) = (qa.unwrap(), qb.unwrap());
            if !qa.is_zero() && !qb.is_zero() {
                prop_assert!(poly_gcd(&qa, &qb).unwrap().is_one());
            }
        }

        #[test]
        fn div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.signed_degree() < b.signed_degree());
        }
    }
}
