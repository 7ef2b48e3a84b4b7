use super::certify::{certify, required_terms, DEFAULT_GUARD};
use super::{closed_form_recurrence, ode_to_recurrence, shorten, telescope, to_egf, to_lgf};
use super::{PRecurrence, RecError};
use crate::exactmath::{factorial, int, Rational};
use crate::gf_model::GfClass;
use crate::ode_derive::{
    derive_ode, differentiate_ode, reduce_common_factor, reroute_degenerate, LinearOde, OdeError,
};
use crate::rec_engine::closed_form_ode;
use crate::series_oracle::oracle_expand;

/// Which derivation produces the recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// ODE from the class, then the generic falling-factorial conversion.
    #[default]
    Generic,
    /// Recurrence straight from the class theorem.
    ClosedForm,
}

/// How series coefficients map to the emitted sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Interpretation {
    /// `g_n` itself.
    #[default]
    Ogf,
    /// `n!·g_n`.
    Egf,
    /// `n·g_n`.
    Lgf,
}

impl Interpretation {
    pub fn apply(self, n: usize, g: Rational) -> Rational {
        match self {
            Interpretation::Ogf => g,
            Interpretation::Egf => g * Rational::from_integer(factorial(n)),
            Interpretation::Lgf => g * int(n as i64),
        }
    }

    pub fn transform(self, rec: &PRecurrence) -> Result<PRecurrence, RecError> {
        match self {
            Interpretation::Ogf => Ok(rec.clone()),
            Interpretation::Egf => to_egf(rec),
            Interpretation::Lgf => to_lgf(rec),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub route: Route,
    pub guard: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { route: Route::Generic, guard: DEFAULT_GUARD }
    }
}

/// A certified recurrence together with what produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    /// The input class.
    pub class: GfClass,
    /// Replacement class for a degenerate nested root.
    pub rerouted: Option<GfClass>,
    /// The reduced differential equation; `None` for hypergeometric terms.
    pub ode: Option<LinearOde>,
    /// Certified recurrence for the series coefficients.
    pub recurrence: PRecurrence,
}

impl Derivation {
    /// The class whose equation was actually used.
    pub fn effective_class(&self) -> &GfClass {
        self.rerouted.as_ref().unwrap_or(&self.class)
    }

    /// The span-reduced recurrence of a first-order equation (see [`shorten_ode`]).
    pub fn shortened(&self, guard: usize) -> Result<PRecurrence, RecError> {
        let ode = self.ode.as_ref().ok_or(OdeError::NoOde("hypergeometric"))?;
        let mut count = required_terms(&self.recurrence, guard).max(32);
        loop {
            let terms = oracle_terms(&self.class, &self.recurrence, count)?;
            match shorten_ode(ode, &terms, guard) {
                Err(RecError::NotEnoughTerms { needed, .. }) if needed > count => count = needed,
                other => return other,
            }
        }
    }
}

/// The first `count` lattice terms of `class` for the lattice of `rec`.
pub fn oracle_terms(class: &GfClass, rec: &PRecurrence, count: usize) -> Result<Vec<Rational>, RecError> {
    let (s, t) = (rec.stride as usize, rec.offset as usize);
    if count == 0 {
        return Ok(Vec::new());
    }
    let series = oracle_expand(class, s * (count - 1) + t)?;
    Ok((0..count).map(|m| series.coeff(s * m + t).clone()).collect())
}

fn certify_with_oracle(class: &GfClass, rec: &PRecurrence, guard: usize) -> Result<PRecurrence, RecError> {
    let terms = oracle_terms(class, rec, required_terms(rec, guard))?;
    certify(rec, &terms, guard)
}

/// Derives and certifies the coefficient recurrence of `class`.
///
/// Degenerate nested roots are replaced by their root form first. Certification
/// always uses the oracle expansion of the input class.
pub fn derive(class: &GfClass, options: &Options) -> Result<Derivation, RecError> {
    class.validate().map_err(OdeError::from)?;
    let rerouted = match class {
        GfClass::NestedSqrt { .. } => reroute_degenerate(class)?,
        _ => None,
    };
    let effective = rerouted.as_ref().unwrap_or(class);
    let (ode, rec) = match (effective, options.route) {
        (GfClass::Hypergeometric { .. }, _) => (None, closed_form_recurrence(effective)?),
        (_, Route::Generic) => {
            let ode = reduce_common_factor(&derive_ode(effective)?);
            let rec = ode_to_recurrence(&ode)?;
            (Some(ode), rec)
        }
        (_, Route::ClosedForm) => {
            let ode = reduce_common_factor(&closed_form_ode(effective)?);
            (Some(ode), closed_form_recurrence(effective)?)
        }
    };
    let recurrence = certify_with_oracle(class, &rec, options.guard)?;
    Ok(Derivation { class: class.clone(), rerouted, ode, recurrence })
}

/// One term shorter than the recurrence of the first-order `ode`.
///
/// Tries the leading-coefficient elimination against the differentiated equation
/// first. When the two recurrences are proportional that yields nothing, and the
/// telescoping reduction is used instead. `terms` are series coefficients used
/// for certification.
pub fn shorten_ode(ode: &LinearOde, terms: &[Rational], guard: usize) -> Result<PRecurrence, RecError> {
    if ode.order() != 1 {
        return Err(OdeError::OrderNotOne(ode.order()).into());
    }
    let first = ode_to_recurrence(ode)?;
    let second = ode_to_recurrence(&differentiate_ode(ode)?)?;
    let candidate = match shorten(&first, &second) {
        Ok(rec) => rec,
        Err(RecError::NoShortening | RecError::SpanMismatch(..)) => telescope(&first, terms)?,
        Err(e) => return Err(e),
    };
    certify(&candidate, terms, guard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Poly;
    use crate::rec_engine::generate_terms;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn a122877() -> GfClass {
        GfClass::RootedNumerator {
            w: p(&[1, -2, -3]),
            v: p(&[-1, 1]),
            p: p(&[1, -2, -7]),
            q: p(&[0, 0, 0, 8]),
            r: int(2),
        }
    }

    #[test]
    fn a122877_shortens_to_three_terms() {
        let d = derive(&a122877(), &Options::default()).unwrap();
        assert_eq!(d.recurrence.span(), 3);
        let short = d.shortened(DEFAULT_GUARD).unwrap();
        // (n − 1)(n + 3)·g_n − n(2n + 1)·g_{n−1} − 7n(n − 1)·g_{n−2}
        assert_eq!(short.coeffs, vec![p(&[-3, 2, 1]), p(&[0, -1, -2]), p(&[0, 7, -7])]);
        let expected = oracle_expand(&a122877(), 60).unwrap();
        assert_eq!(generate_terms(&short, 60).unwrap(), expected.coeffs());
    }

    #[test]
    fn degenerate_nested_root_rerouted() {
        let class = GfClass::NestedSqrt { w: p(&[2, 2]), p: p(&[4, 8, 4]), r: int(2) };
        let d = derive(&class, &Options::default()).unwrap();
        assert!(d.rerouted.is_some());
        let expected = oracle_expand(&class, 50).unwrap();
        assert_eq!(generate_terms(&d.recurrence, 50).unwrap(), expected.coeffs());
    }

    #[test]
    fn both_routes_certify() {
        let class = GfClass::NestedSqrt { w: p(&[3]), p: p(&[1, -4]), r: int(2) };
        for route in [Route::Generic, Route::ClosedForm] {
            let d = derive(&class, &Options { route, ..Options::default() }).unwrap();
            let expected = oracle_expand(&class, 40).unwrap();
            assert_eq!(generate_terms(&d.recurrence, 40).unwrap(), expected.coeffs());
        }
    }

    #[test]
    fn egf_of_exp_rational() {
        // exp(x/(1 − x))
        let class = GfClass::ExpRationalTimesRoot { q: p(&[0, 1]), v: p(&[1, -1]), p: p(&[1]), r: int(1) };
        let d = derive(&class, &Options::default()).unwrap();
        let egf = Interpretation::Egf.transform(&d.recurrence).unwrap();
        let terms = generate_terms(&egf, 5).unwrap();
        let expected: Vec<_> = [1, 1, 3, 13, 73, 501].iter().map(|&v| int(v)).collect();
        assert_eq!(terms, expected);
        // b_n = (2n − 1)·b_{n−1} − (n − 1)(n − 2)·b_{n−2}
        assert_eq!(egf.coeffs, vec![p(&[1]), p(&[1, -2]), p(&[2, -3, 1])]);
    }
}
