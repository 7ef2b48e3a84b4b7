use super::{PRecurrence, RecError};
use crate::exactmath::{int, Poly, Rational};
use crate::gf_model::GfClass;
use crate::ode_derive::{detect_degenerate, first_order_parts, Degeneracy, LinearOde, OdeError};

/// `c · r^e · ∏ factors`.
fn mono(c: i64, r: &Rational, e: u32, factors: &[&Poly]) -> Poly {
    let scale = int(c) * num_traits::pow(r.clone(), e as usize);
    factors.iter().fold(Poly::constant(scale), |acc, f| &acc * *f)
}

fn sum(terms: impl IntoIterator<Item = Poly>) -> Poly {
    terms.into_iter().fold(Poly::zero(), |acc, t| &acc + &t)
}

/// `(T, R, Q)` of the nested-root equation `T g'' + R g' + Q g = 0`.
fn nested_trq(w: &Poly, p: &Poly, r: &Rational) -> (Poly, Poly, Poly) {
    let (w1, w2, p1, p2) = (w.derivative(), w.derivative().derivative(), p.derivative(), p.derivative().derivative());
    let t = mono(-4, r, 2, &[p, &(p - &(w * w)), &(&(&w1 * p).scale(&int(2)) - &(&p1 * w))]);
    let rr = sum([
        mono(3, r, 1, &[&p1, &p1, p, w]),
        mono(-2, r, 0, &[&p1, &p1, p, w]),
        mono(-1, r, 1, &[&p1, &p1, w, w, w]),
        mono(-4, r, 1, &[&p1, &w1, p, p]),
        mono(4, r, 0, &[&p1, &w1, p, p]),
        mono(-4, r, 1, &[&p1, &w1, p, w, w]),
        mono(4, r, 0, &[&p1, &w1, p, w, w]),
        mono(-2, r, 1, &[&p2, p, p, w]),
        mono(2, r, 1, &[&p2, p, w, w, w]),
        mono(8, r, 1, &[&w1, &w1, p, p, w]),
        mono(-8, r, 0, &[&w1, &w1, p, p, w]),
        mono(4, r, 1, &[&w2, p, p, p]),
        mono(-4, r, 1, &[&w2, p, p, w, w]),
    ])
    .scale(&(int(2) * r));
    let qq = sum([
        mono(-1, r, 1, &[&p1, &p1, &p1, w]),
        mono(1, r, 0, &[&p1, &p1, &p1, w]),
        mono(-2, r, 0, &[&p1, &p1, &w1, p]),
        mono(2, r, 1, &[&p1, &p1, &w1, w, w]),
        mono(4, r, 1, &[&p1, &w1, &w1, p, w]),
        mono(-4, r, 0, &[&p1, &w1, &w1, p, w]),
        mono(-4, r, 1, &[&p1, &w2, p, p]),
        mono(4, r, 1, &[&p1, &w2, p, w, w]),
        mono(4, r, 1, &[&p2, &w1, p, p]),
        mono(-4, r, 1, &[&p2, &w1, p, w, w]),
        mono(-8, r, 1, &[&w1, &w1, &w1, p, p]),
        mono(8, r, 0, &[&w1, &w1, &w1, p, p]),
    ]);
    (t, rr, qq)
}

/// `(T, R, Q)` for `exp(w ± sqrt(p))`; the same equation serves both signs.
fn exp_sqrt_trq(w: &Poly, p: &Poly) -> (Poly, Poly, Poly) {
    let (w1, w2, p1, p2) = (w.derivative(), w.derivative().derivative(), p.derivative(), p.derivative().derivative());
    let one = Rational::from_integer(1.into());
    let t = mono(-4, &one, 0, &[&p1, p]);
    let rr = sum([
        mono(2, &one, 0, &[&p2, p]),
        mono(-1, &one, 0, &[&p1, &p1]),
        mono(4, &one, 0, &[&w1, &p1, p]),
    ])
    .scale(&int(2));
    let qq = sum([
        mono(4, &one, 0, &[&p1, p, &w2]),
        mono(-4, &one, 0, &[&p1, p, &w1, &w1]),
        mono(1, &one, 0, &[&p1, &p1, &p1]),
        mono(-4, &one, 0, &[&w1, &p2, p]),
        mono(2, &one, 0, &[&w1, &p1, &p1]),
    ]);
    (t, rr, qq)
}

/// The equation given directly by the per-class theorems, without the alpha-vector
/// cross product. Hypergeometric terms have none.
pub fn closed_form_ode(class: &GfClass) -> Result<LinearOde, OdeError> {
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
            let (t, rr, qq) = nested_trq(w, p, r);
            LinearOde::second_order(t, rr, qq)
        }
        GfClass::ExpPolySqrt { w, p, .. } => {
            let (t, rr, qq) = exp_sqrt_trq(w, p);
            LinearOde::second_order(t, rr, qq)
        }
        _ => Err(OdeError::NoOde("hypergeometric")),
    }
}

/// `Σ_t (a·n − a·t + b·t)·p_t·g_{n−t} = 0` for `1/p^(b/a)`.
fn inverse_root_coeffs(p: &Poly, r: &Rational) -> Vec<Poly> {
    let a = Rational::from_integer(r.numer().clone());
    let b = Rational::from_integer(r.denom().clone());
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(t, pt)| {
            let t = int(t as i64);
            Poly::new(vec![(&b - &a) * &t * pt, &a * pt])
        })
        .collect()
}

/// Order-one rule `C_j = (n − j)·R_j + Q_{j−1}` and its order-two extension
/// `C_j = (n − j)(n − j − 1)·T_j + (n − j)·R_{j−1} + Q_{j−2}`.
fn coeffs_from_ode(ode: &LinearOde) -> Vec<Poly> {
    let n = Poly::x();
    let at = |p: &Poly, i: i64| if i < 0 { Rational::from_integer(0.into()) } else { p.coeff(i as usize) };
    let span = ode
        .coeffs
        .iter()
        .enumerate()
        .filter_map(|(k, a)| a.degree().map(|d| d + ode.order() - k))
        .max()
        .expect("leading coefficient is nonzero");
    (0..=span as i64)
        .map(|j| {
            let m = &n - &Poly::constant(int(j));
            match ode.coeffs.as_slice() {
                [q, r] => &m.scale(&at(r, j)) + &Poly::constant(at(q, j - 1)),
                [q, r, t] => {
                    let m1 = &m - &Poly::one();
                    sum([(&m * &m1).scale(&at(t, j)), m.scale(&at(r, j - 1)), Poly::constant(at(q, j - 2))])
                }
                _ => unreachable!("closed forms have order one or two"),
            }
        })
        .collect()
}

/// The recurrence straight from the class theorem, normalized and uncertified.
///
/// Hypergeometric terms use the lattice relation
/// `c·m·∏(β_j + m − 1)·h_m = ∏(α_i + m − 1)·h_{m−1}` with `h_m = g_{r·m + t}`.
pub fn closed_form_recurrence(class: &GfClass) -> Result<PRecurrence, RecError> {
    class.validate().map_err(OdeError::from)?;
    match class {
        GfClass::InverseRoot { p, r } => {
            let coeffs = inverse_root_coeffs(p, r);
            let span = coeffs.len() - 1;
            PRecurrence::uncertified(coeffs, span)
        }
        GfClass::Hypergeometric { alphas, betas, t, r, c } => {
            let shifted = |a: &Rational| Poly::new(vec![a - int(1), int(1)]);
            let c0 = betas.iter().fold(Poly::x().scale(c), |acc, b| &acc * &shifted(b));
            let c1 = alphas.iter().fold(Poly::constant(int(-1)), |acc, a| &acc * &shifted(a));
            PRecurrence::uncertified_lattice(vec![c0, c1], 1, *r, *t)
        }
        _ => {
            let ode = closed_form_ode(class)?;
            let coeffs = coeffs_from_ode(&ode);
            let span = coeffs.len() - 1;
            let n_min = match ode.inhom.degree() {
                Some(d) => span.max(d + ode.order() + 1),
                None => span,
            };
            PRecurrence::uncertified(coeffs, n_min)
        }
    }
}
