use num_traits::{One, Zero};

use super::OracleError;
use crate::exactmath::{format_rational, int, rational_pow, Poly, Rational};

/// The first `order + 1` coefficients of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list; a series always knows at least `[x^0]`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn zeros(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec())
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] - &o.coeffs[i]).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// Formal derivative; the order drops by one (never below zero).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zeros(0);
        }
        Self::new(
            (1..self.coeffs.len())
                .map(|i| &self.coeffs[i] * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut out = vec![Rational::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / int(i as i64 + 1)),
        );
        Self::new(out)
    }

    /// Multiplies by `x^k`; the known order grows by `k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut out = vec![Rational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Divides by `x^k`; the first `k` coefficients must vanish.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, OracleError> {
        if k > self.order() {
            return Err(OracleError::PrecisionExhausted);
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(OracleError::Pole);
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }
}

/// `a(x)^alpha` for `a(0) = 1`, from the coefficient recurrence implied by
/// `a·(a^alpha)' = alpha·a'·a^alpha`.
pub fn series_pow(a: &TruncatedSeries, alpha: &Rational) -> Result<TruncatedSeries, OracleError> {
    if !a.coeff(0).is_one() {
        return Err(OracleError::NonUnitConstant(format_rational(a.coeff(0))));
    }
    let n_max = a.order();
    let mut b = vec![Rational::zero(); n_max + 1];
    b[0] = Rational::one();
    let support: Vec<usize> = (1..=n_max).filter(|&k| !a.coeff(k).is_zero()).collect();
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        for &k in support.iter().take_while(|&&k| k <= n) {
            let weight = alpha * int(k as i64) - int((n - k) as i64);
            if !weight.is_zero() {
                acc += weight * a.coeff(k) * &b[n - k];
            }
        }
        b[n] = acc / int(n as i64);
    }
    Ok(TruncatedSeries::new(b))
}

/// `exp(a(x))` for `a(0) = 0`, from `g' = a'·g`.
pub fn series_exp(a: &TruncatedSeries) -> Result<TruncatedSeries, OracleError> {
    if !a.coeff(0).is_zero() {
        return Err(OracleError::NonzeroConstant(format_rational(a.coeff(0))));
    }
    let n_max = a.order();
    let mut b = vec![Rational::zero(); n_max + 1];
    b[0] = Rational::one();
    let support: Vec<usize> = (1..=n_max).filter(|&k| !a.coeff(k).is_zero()).collect();
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        for &k in support.iter().take_while(|&&k| k <= n) {
            acc += int(k as i64) * a.coeff(k) * &b[n - k];
        }
        b[n] = acc / int(n as i64);
    }
    Ok(TruncatedSeries::new(b))
}

/// `log(a(x))` for `a(0) = 1`, from `a·g' = a'`.
pub fn series_log(a: &TruncatedSeries) -> Result<TruncatedSeries, OracleError> {
    if !a.coeff(0).is_one() {
        return Err(OracleError::NonUnitConstant(format_rational(a.coeff(0))));
    }
    let n_max = a.order();
    let mut b = vec![Rational::zero(); n_max + 1];
    for n in 1..=n_max {
        let mut acc = int(n as i64) * a.coeff(n);
        for k in 1..n {
            if !a.coeff(n - k).is_zero() {
                acc -= int(k as i64) * &b[k] * a.coeff(n - k);
            }
        }
        b[n] = acc / int(n as i64);
    }
    Ok(TruncatedSeries::new(b))
}

/// `a / b`. A common power of `x` is cancelled first; the result loses that many
/// orders of precision.
pub fn series_div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, OracleError> {
    let k = b.valuation().ok_or(OracleError::DivisionByZeroSeries)?;
    let a = a.div_x_pow(k)?;
    let b = b.div_x_pow(k)?;
    let n_max = a.order().min(b.order());
    let b0 = b.coeff(0).clone();
    let support: Vec<usize> = (1..=n_max).filter(|&j| !b.coeff(j).is_zero()).collect();
    let mut c: Vec<Rational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = a.coeff(n).clone();
        for &j in support.iter().take_while(|&&j| j <= n) {
            acc -= b.coeff(j) * &c[n - j];
        }
        c.push(acc / &b0);
    }
    Ok(TruncatedSeries::new(c))
}

/// `a^alpha` for any series whose leading term `c·x^v` admits a rational
/// `c^alpha` and an integer `v·alpha`. The result is the real branch with
/// leading coefficient `c^alpha`.
pub fn series_pow_general(
    a: &TruncatedSeries,
    alpha: &Rational,
) -> Result<TruncatedSeries, OracleError> {
    if alpha.is_zero() {
        return Ok(TruncatedSeries::one(a.order()));
    }
    let v = a.valuation().ok_or(OracleError::PrecisionExhausted)?;
    let shift = Rational::from_integer(v.into()) * alpha;
    if !shift.is_integer() || shift < Rational::zero() {
        return Err(OracleError::Precondition(format!(
            "x^{v} raised to {} is not a power series",
            format_rational(alpha)
        )));
    }
    let stripped = a.div_x_pow(v)?;
    let c = stripped.coeff(0).clone();
    let c_alpha = rational_pow(&c, alpha).ok_or_else(|| {
        OracleError::IrrationalConstant(format!(
            "{}^({})",
            format_rational(&c),
            format_rational(alpha)
        ))
    })?;
    let unit = stripped.scale(&c.recip());
    let powered = series_pow(&unit, alpha)?.scale(&c_alpha);
    let s: usize = shift.to_integer().try_into().map_err(|_| OracleError::PrecisionExhausted)?;
    let mut out = vec![Rational::zero(); s];
    out.extend(powered.into_coeffs());
    Ok(TruncatedSeries::new(out))
}

/// `p(x)^alpha` to the given order, computed from the exact polynomial so that
/// stripping a power of `x` costs no precision.
pub fn poly_pow_series(p: &Poly, alpha: &Rational, order: usize) -> Result<TruncatedSeries, OracleError> {
    let v = p.valuation().ok_or(OracleError::Precondition("power of the zero polynomial".into()))?;
    let s = TruncatedSeries::from_poly(p, order + v);
    let r = series_pow_general(&s, alpha)?;
    if r.order() < order {
        return Err(OracleError::PrecisionExhausted);
    }
    Ok(r.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    fn poly_series(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_poly(&Poly::from_i64s(c), order)
    }

    #[test]
    fn pow_examples() {
        let s = series_pow(&poly_series(&[1, -4], 5), &rat(-1, 2)).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 2, 6, 20, 70, 252]).as_slice());
        let s = series_pow(&poly_series(&[1, -2, -3], 5), &rat(-1, 2)).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 1, 3, 7, 19, 51]).as_slice());
        let s = series_pow(&poly_series(&[1, 5, 7], 4), &int(0)).unwrap();
        assert_eq!(s, TruncatedSeries::one(4));
        assert!(series_pow(&poly_series(&[2, 1], 3), &rat(1, 2)).is_err());
    }

    #[test]
    fn exp_examples() {
        assert_eq!(series_exp(&TruncatedSeries::zeros(3)).unwrap(), TruncatedSeries::one(3));
        let e = series_exp(&poly_series(&[0, 1], 4)).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(1, 2), rat(1, 6), rat(1, 24)]);
        let arg = series_div(&poly_series(&[0, 1], 4), &poly_series(&[1, -1], 4)).unwrap();
        let e = series_exp(&arg).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(3, 2), rat(13, 6), rat(73, 24)]);
        assert!(series_exp(&poly_series(&[1, 1], 3)).is_err());
    }

    #[test]
    fn log_examples() {
        assert_eq!(series_log(&TruncatedSeries::one(3)).unwrap(), TruncatedSeries::zeros(3));
        let l = series_log(&poly_series(&[1, 1], 4)).unwrap();
        assert_eq!(l.coeffs(), &[int(0), int(1), rat(-1, 2), rat(1, 3), rat(-1, 4)]);
        let inv = series_div(&TruncatedSeries::one(4), &poly_series(&[1, -1], 4)).unwrap();
        let l = series_log(&inv).unwrap();
        assert_eq!(l.coeffs(), &[int(0), int(1), rat(1, 2), rat(1, 3), rat(1, 4)]);
        assert!(series_log(&poly_series(&[2], 3)).is_err());
    }

    #[test]
    fn general_powers_with_valuation() {
        // sqrt(4x^2 - 4x^3) = 2x·sqrt(1 - x)
        let s = poly_pow_series(&Poly::from_i64s(&[0, 0, 4, -4]), &rat(1, 2), 3).unwrap();
        assert_eq!(s.coeffs(), &[int(0), int(2), int(-1), rat(-1, 4)]);
        assert!(poly_pow_series(&Poly::from_i64s(&[0, 1]), &rat(1, 2), 3).is_err());
        assert!(poly_pow_series(&Poly::from_i64s(&[-4, 1]), &rat(1, 2), 3).is_err());
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(-9i64..=9, 4).prop_map(|mut c| {
            c.insert(0, 1);
            TruncatedSeries::from_poly(&Poly::from_i64s(&c), 50)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn pow_inverse(a in unit_series(), num in -5i64..=5, den in 1i64..=4) {
            let alpha = rat(num, den);
            let prod = series_pow(&a, &alpha).unwrap().mul(&series_pow(&a, &-alpha).unwrap());
            prop_assert_eq!(prod, TruncatedSeries::one(50));
        }

        #[test]
        fn exp_of_log(a in unit_series()) {
            let back = series_exp(&series_log(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
