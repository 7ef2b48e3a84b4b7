use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::OdeError;
use crate::exactmath::{poly_gcd_all, primitive_together, Poly};
use crate::series_oracle::TruncatedSeries;

/// `Σ_k A_k(x)·g^(k)(x) = H(x)` with `coeffs[k] = A_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearOde {
    pub coeffs: Vec<Poly>,
    pub inhom: Poly,
}

impl LinearOde {
    pub fn new(coeffs: Vec<Poly>, inhom: Poly) -> Result<LinearOde, OdeError> {
        match coeffs.last() {
            Some(a) if !a.is_zero() && coeffs.len() >= 2 => Ok(LinearOde { coeffs, inhom }),
            _ => Err(OdeError::ZeroLeading),
        }
    }

    /// `R g' + Q g = H`.
    pub fn first_order(r: Poly, q: Poly, h: Poly) -> Result<LinearOde, OdeError> {
        LinearOde::new(vec![q, r], h)
    }

    /// `T g'' + R g' + Q g = 0`.
    pub fn second_order(t: Poly, r: Poly, q: Poly) -> Result<LinearOde, OdeError> {
        LinearOde::new(vec![q, r, t], Poly::zero())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inhom.is_zero()
    }

    /// `Σ A_k g^(k) − H` on a truncated series; exact up to order `N − K`.
    pub fn residual(&self, g: &TruncatedSeries) -> TruncatedSeries {
        let k_max = self.order();
        let n = g.order().saturating_sub(k_max);
        let mut deriv = g.clone();
        let mut total = TruncatedSeries::from_poly(&self.inhom, n).neg();
        for a in &self.coeffs {
            let term = TruncatedSeries::from_poly(a, n).mul(&deriv.truncate(n.min(deriv.order())));
            total = total.add(&term);
            deriv = deriv.derivative();
        }
        total
    }
}

impl fmt::Display for LinearOde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let d = match k {
                0 => "g".to_string(),
                1 => "g'".to_string(),
                2 => "g''".to_string(),
                _ => format!("g^({k})"),
            };
            write!(f, "({a})*{d}")?;
        }
        write!(f, " = {}", self.inhom)
    }
}

/// Divides out the common polynomial factor of all coefficients (and of `H`
/// when it is nonzero), then scales to coprime integer coefficients with a
/// positive lowest coefficient in the leading `A_K`.
pub fn reduce_common_factor(ode: &LinearOde) -> LinearOde {
    let mut polys: Vec<Poly> = ode.coeffs.clone();
    if !ode.inhom.is_zero() {
        polys.push(ode.inhom.clone());
    }
    let g = poly_gcd_all(polys.iter()).expect("leading coefficient is nonzero");
    let divided: Vec<Poly> = polys
        .iter()
        .map(|p| p.exact_div(&g).expect("gcd divides every coefficient"))
        .collect();
    let mut scaled = primitive_together(&divided);
    let lead = &scaled[ode.coeffs.len() - 1];
    if lead.coeff(lead.valuation().expect("nonzero")).is_negative() {
        scaled = scaled.iter().map(|p| -p).collect();
    }
    let inhom = if ode.inhom.is_zero() {
        Poly::zero()
    } else {
        scaled.pop().expect("inhomogeneous term present")
    };
    LinearOde { coeffs: scaled, inhom }
}

/// `R g' + Q g = H` becomes `R g'' + (R' + Q) g' + Q' g = H'`.
pub fn differentiate_ode(ode: &LinearOde) -> Result<LinearOde, OdeError> {
    if ode.order() != 1 {
        return Err(OdeError::OrderNotOne(ode.order()));
    }
    let (q, r) = (&ode.coeffs[0], &ode.coeffs[1]);
    LinearOde::new(vec![q.derivative(), &r.derivative() + q, r.clone()], ode.inhom.derivative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn a122877_raw() -> LinearOde {
        let x = p(&[0, 1]);
        let a1 = &(&x.pow(3) * &p(&[1, -1])) * &p(&[1, -2, -7]);
        let a0 = &x.pow(2) * &p(&[3, -7, -11, 7]);
        LinearOde::first_order(a1.scale(&int(-16)), a0.scale(&int(-16)), p(&[0, 0, 0, -64])).unwrap()
    }

    fn a122877_reduced() -> LinearOde {
        let a1 = &(&p(&[0, 1]) * &p(&[1, -1])) * &p(&[1, -2, -7]);
        LinearOde::first_order(a1, p(&[3, -7, -11, 7]), p(&[0, 4])).unwrap()
    }

    #[test]
    fn common_factor_removal() {
        assert_eq!(reduce_common_factor(&a122877_raw()), a122877_reduced());
        let reduced = a122877_reduced();
        assert_eq!(reduce_common_factor(&reduced), reduced);
    }

    #[test]
    fn differentiation() {
        let d = differentiate_ode(&a122877_reduced()).unwrap();
        let t = &(&p(&[0, 1]) * &p(&[1, -1])) * &p(&[1, -2, -7]);
        let r = &p(&[1, -1]) * &p(&[4, -9, -35]);
        assert_eq!(d, LinearOde::new(vec![p(&[-7, -22, 21]), r, t], p(&[4])).unwrap());

        let trivial = LinearOde::first_order(p(&[1]), Poly::zero(), Poly::zero()).unwrap();
        let d = differentiate_ode(&trivial).unwrap();
        assert_eq!(d.coeffs, vec![Poly::zero(), Poly::zero(), p(&[1])]);

        let log = LinearOde::first_order(p(&[1, -1]), Poly::zero(), p(&[1])).unwrap();
        let d = differentiate_ode(&log).unwrap();
        assert_eq!(d.coeffs, vec![Poly::zero(), p(&[-1]), p(&[1, -1])]);
        assert!(d.inhom.is_zero());
        assert!(differentiate_ode(&d).is_err());
    }
}
