use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{PRecurrence, RecError};
use crate::exactmath::Rational;

enum Window {
    Int(VecDeque<BigInt>),
    Rat(VecDeque<Rational>),
}

/// Lattice terms `h_0, h_1, …` of a certified recurrence, computed forward with
/// only the last `span` terms kept. Stays in integer arithmetic while every
/// term and coefficient is integral.
pub struct LatticeTerms<'a> {
    rec: &'a PRecurrence,
    int_coeffs: Option<Vec<Vec<BigInt>>>,
    window: Window,
    n: usize,
    failed: bool,
}

/// Iterator over the lattice terms of `rec`.
pub fn lattice_terms(rec: &PRecurrence) -> Result<LatticeTerms<'_>, RecError> {
    if !rec.is_certified() {
        return Err(RecError::Uncertified);
    }
    let int_coeffs: Option<Vec<Vec<BigInt>>> =
        rec.coeffs.iter().map(|c| c.integer_coeffs()).collect();
    let integral = int_coeffs.is_some() && rec.initial.iter().all(Rational::is_integer);
    let window = if integral { Window::Int(VecDeque::new()) } else { Window::Rat(VecDeque::new()) };
    Ok(LatticeTerms { rec, int_coeffs, window, n: 0, failed: false })
}

fn horner_int(c: &[BigInt], n: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * n + a)
}

impl LatticeTerms<'_> {
    fn push(&mut self, value: Rational) {
        let span = self.rec.span();
        match &mut self.window {
            Window::Int(w) if value.is_integer() => {
                w.push_front(value.to_integer());
                w.truncate(span);
            }
            Window::Int(w) => {
                let mut rat: VecDeque<Rational> = w.drain(..).map(Rational::from_integer).collect();
                rat.push_front(value);
                rat.truncate(span);
                self.window = Window::Rat(rat);
            }
            Window::Rat(w) => {
                w.push_front(value);
                w.truncate(span);
            }
        }
    }

    fn next_value(&mut self) -> Result<Rational, RecError> {
        let n = self.n;
        if n < self.rec.initial.len() {
            return Ok(self.rec.initial[n].clone());
        }
        if let (Window::Int(w), Some(ic)) = (&self.window, &self.int_coeffs) {
            let nn = BigInt::from(n);
            let lead = horner_int(&ic[0], &nn);
            if lead.is_zero() {
                return Err(RecError::SingularLeading(n));
            }
            let mut acc = BigInt::zero();
            for (c, g) in ic[1..].iter().zip(w.iter()) {
                if !g.is_zero() {
                    acc += horner_int(c, &nn) * g;
                }
            }
            let (q, r) = (-acc).div_rem(&lead);
            if r.is_zero() {
                return Ok(Rational::from_integer(q));
            }
        }
        let nn = Rational::from_integer(BigInt::from(n));
        let lead = self.rec.coeffs[0].eval(&nn);
        if lead.is_zero() {
            return Err(RecError::SingularLeading(n));
        }
        let acc = match &self.window {
            Window::Int(w) => self.rec.coeffs[1..]
                .iter()
                .zip(w.iter())
                .fold(Rational::zero(), |acc, (c, g)| acc + c.eval(&nn) * Rational::from_integer(g.clone())),
            Window::Rat(w) => self.rec.coeffs[1..]
                .iter()
                .zip(w.iter())
                .fold(Rational::zero(), |acc, (c, g)| acc + c.eval(&nn) * g),
        };
        Ok(-acc / lead)
    }
}

impl Iterator for LatticeTerms<'_> {
    type Item = Result<Rational, RecError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.next_value() {
            Ok(v) => {
                self.push(v.clone());
                self.n += 1;
                Some(Ok(v))
            }
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// Series coefficients `g_0 ..= g_n`, with zeros off the lattice.
pub fn generate_terms(rec: &PRecurrence, n: usize) -> Result<Vec<Rational>, RecError> {
    let (s, t) = (rec.stride as usize, rec.offset as usize);
    let mut out = vec![Rational::zero(); n + 1];
    if n < t {
        return Ok(out);
    }
    let count = (n - t) / s + 1;
    for (m, h) in lattice_terms(rec)?.take(count).enumerate() {
        out[s * m + t] = h?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, Poly};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn certified(coeffs: Vec<Poly>, initial: Vec<Rational>) -> PRecurrence {
        PRecurrence { coeffs, n_min: initial.len(), initial, stride: 1, offset: 0 }
    }

    #[test]
    fn central_binomial() {
        let rec = certified(vec![p(&[0, 1]), p(&[2, -4])], vec![int(1)]);
        let terms = generate_terms(&rec, 6).unwrap();
        let expected: Vec<_> = [1, 2, 6, 20, 70, 252, 924].iter().map(|&v| int(v)).collect();
        assert_eq!(terms, expected);
    }

    #[test]
    fn switches_to_rationals() {
        // n·g_n − (n − 1)·g_{n−1} from g_1 = 1 gives 1/n
        let rec = certified(vec![p(&[0, 1]), p(&[1, -1])], vec![int(0), int(1)]);
        let terms = generate_terms(&rec, 5).unwrap();
        assert_eq!(terms[5], rat(1, 5));
        assert_eq!(terms[4], rat(1, 4));
    }

    #[test]
    fn lattice_expansion() {
        // h_m = h_{m−1} on g_{2m+1}
        let mut rec = certified(vec![p(&[1]), p(&[-1])], vec![int(3)]);
        rec.stride = 2;
        rec.offset = 1;
        let terms = generate_terms(&rec, 6).unwrap();
        assert_eq!(terms, vec![int(0), int(3), int(0), int(3), int(0), int(3), int(0)]);
    }

    #[test]
    fn reports_singular_leading_coefficient() {
        let rec = certified(vec![p(&[-3, 1]), p(&[3, -1])], vec![int(1)]);
        assert_eq!(generate_terms(&rec, 5), Err(RecError::SingularLeading(3)));
        let bare = PRecurrence { initial: vec![], ..rec };
        assert_eq!(generate_terms(&bare, 5).unwrap_err(), RecError::Uncertified);
    }
}
