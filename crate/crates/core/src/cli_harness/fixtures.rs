//! Example rows from the generating-function tables, each certified end to end.
//!
//! Prefixes are series coefficients computed by an independent computer-algebra
//! expansion, not values copied from the OEIS. Rows whose coefficients are not
//! all integers carry no prefix.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::exactmath::{int, parse_rational, Poly, Rational};
use crate::gf_model::{parse_polynomial, GfClass};
use crate::rec_engine::{derive, generate_terms, oracle_terms, Interpretation, Options, PRecurrence};
use crate::series_oracle::oracle_expand;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub oeis_id: &'static str,
    /// Which example table the row comes from.
    pub table: &'static str,
    pub class: GfClass,
    pub interpretation: Interpretation,
    pub known_prefix: Option<Vec<BigInt>>,
    /// Also certify the one-term-shorter recurrence.
    pub shorten: bool,
}

const INVERSE_SQRT: &[(&str, &str, Option<&str>)] = &[
    ("A002426", "1-2*x-3*x^2", Some("1 1 3 7 19 51 141 393 1107 3139 8953 25653")),
    ("A122868", "1-6*x-3*x^2", Some("1 3 15 81 459 2673 15849 95175 576963 3523257 21640365 133549155")),
    ("A001850", "1-6*x+x^2", Some("1 3 13 63 321 1683 8989 48639 265729 1462563 8097453 45046719")),
    ("A026375", "1-6*x+5*x^2", Some("1 3 11 45 195 873 3989 18483 86515 408105 1936881 9238023")),
    ("A006139", "1-4*x-4*x^2", Some("1 2 8 32 136 592 2624 11776 53344 243392 1116928 5149696")),
    ("A000984", "1-4*x", Some("1 2 6 20 70 252 924 3432 12870 48620 184756 705432")),
    ("A098331", "1-2*x+5*x^2", Some("1 1 -1 -5 -5 11 41 29 -125 -365 -131 1409")),
    ("A126869", "1-4*x^2", Some("1 0 2 0 6 0 20 0 70 0 252 0")),
    ("A115962", "1-4*x^2-4*x^3", Some("1 0 2 2 6 12 26 60 130 300 672 1540")),
    ("A098477", "1-2*x-7*x^2+8*x^3", Some("1 1 5 9 37 89 325 905 3109 9337 31173 97449")),
    ("A026569", "1-2*x-3*x^2+4*x^3", Some("1 1 3 5 13 27 67 153 375 893 2189 5319")),
    ("A191354", "1-2*x-3*x^2-4*x^3", Some("1 1 3 9 25 75 227 693 2139 6645 20757 65139")),
    ("A098479", "1-2*x+x^2-4*x^3", Some("1 1 1 3 7 13 27 61 133 287 633 1407")),
    ("A098480", "1-2*x+x^2-8*x^3", Some("1 1 1 5 13 25 65 181 445 1113 2945 7685")),
    ("A137635", "1-4*x-8*x^2-4*x^3", Some("1 2 10 46 226 1136 5810 30080 157162 826992 4376408 23267332")),
    ("A165431", "1-4*x+8*x^3", Some("1 2 6 16 46 132 388 1152 3462 10492 32036 98400")),
    ("A157004", "1-4*x+4*x^3", Some("1 2 6 18 58 192 650 2232 7746 27096 95376 337404")),
];

const INVERSE_ROOT: &[(&str, &str, &str, Option<&str>)] = &[
    ("A002457", "1-4*x", "2/3", Some("1 6 30 140 630 2772 12012 51480 218790 923780 3879876 16224936")),
    ("A115902", "1-8*x", "2/3", Some("1 12 120 1120 10080 88704 768768 6589440 56010240 472975360 3972993024 33228668928")),
    ("A004998", "1-36*x", "6/11", Some("1 66 3366 154836 6735366 282885372 11598300252 467245810152 18573020953542 730538824172652 28491014142733428 1103379274982221848")),
    ("A298308", "1+9*x+9*x^3", "-3", Some("1 3 -9 48 -288 1917 -13563 99927 -758079 5879754 -46401687 371336886")),
    ("A095776", "1-9*x-27*x^3", "3", Some("1 3 18 135 1053 8505 70470 594135 5073840 43761870 380433024 3328474032")),
];

/// `(id, q, p, v)` with `r = 2`.
const GENERAL_ROOT: &[(&str, &str, &str, &str, Option<&str>)] = &[
    ("A110170", "1-x", "1-6*x+x^2", "1", Some("1 2 10 50 258 1362 7306 39650 217090 1196834 6634890 36949266")),
    ("A241023", "1+x", "1-6*x+x^2", "1", Some("1 4 16 76 384 2004 10672 57628 314368 1728292 9560016 53144172")),
    ("A085362", "1-x", "1-6*x+5*x^2", "1", Some("1 2 8 34 150 678 3116 14494 68032 321590 1528776 7301142")),
    ("A025178", "1-x", "1-2*x-3*x^2", "1", Some("1 0 2 4 12 32 90 252 714 2032 5814 16700")),
    ("A025565", "x*(1+x)", "1-2*x-3*x^2", "1", Some("0 1 2 4 10 26 70 192 534 1500 4246 12092")),
    ("A063886", "1+2*x", "1-4*x^2", "1", Some("1 2 2 4 6 12 20 40 70 140 252 504")),
    ("A128057", "1+x", "1+4*x^2", "1", Some("1 1 -2 -2 6 6 -20 -20 70 70 -252 -252")),
    ("A106188", "1", "1-4*x", "1-x^2", Some("1 2 7 22 77 274 1001 3706 13871 52326 198627 757758")),
    ("A091520", "1", "1+4*x", "1-4*x", Some("1 2 14 36 214 604 3340 9928 52582 161708 831588 2620920")),
];

const EGF_INVERSE_ROOT: &[(&str, &str, &str, Option<&str>)] = &[
    ("A285199", "1-4*x+x^2", "2", Some("1 2 11 102 1329 22290 457155 11083590 310107105 9834291810 348584413275 13657116176550")),
    ("A006438", "1-8*x+x^2", "2", Some("1 4 47 924 25449 901380 39024495 1996824060 117897243345 7889215807620 590030724668175 48773659291364700")),
    ("A182827", "1+2*x+4*x^2", "2", Some("1 -1 -1 21 -111 -345 14895 -143955 -760095 49774095 -699437025 -5221460475")),
    ("A098460", "1-2*x-2*x^2", "2", Some("1 1 5 33 321 3945 59445 1056825 21677985 503799345 13084021125 375524312625")),
    ("A098461", "1-2*x-3*x^2", "2", Some("1 1 6 42 456 6120 101520 1980720 44634240 1139080320 32488646400 1023985670400")),
    ("A144773", "1-10*x", "10", Some("1 1 11 231 7161 293601 14973651 913392711 64850882481 5252921480961 478015854767451 48279601331512551")),
];

/// `(id, p, q, v, r)` for `exp(q/v)/p^(1/r)`.
const EGF_EXP_ROOT: &[(&str, &str, &str, &str, &str, Option<&str>)] = &[
    ("A000262", "1", "x", "1-x", "1", Some("1 1 3 13 73 501 4051 37633 394353 4596553 58941091 824073141")),
    ("A055142", "1-2*x", "x", "1", "-2", Some("1 0 -2 -8 -36 -224 -1880 -19872 -251888 -3712256 -62286624 -1171487360")),
    ("A052143", "1-4*x", "x", "1", "2", Some("1 3 17 163 2241 39971 874513 22652547 677742593 22996109251 872449527441 36595485309923")),
    ("A094935", "1-8*x", "8*x", "1", "8", Some("1 9 89 1073 18321 476473 17484457 813648417 45054110369 2872362067433 206710159889529 16558892507010961")),
    ("A094911", "1-7*x", "7*x", "1", "7", Some("1 8 71 778 12125 284012 9241891 378595022 18409947641 1029827400400 64998958518719 4565303338264082")),
    ("A345075", "1", "x*(1+x)", "1-x-x^2", "1", Some("1 1 5 31 265 2741 33781 479515 7710641 138300265 2736157861 59152265591")),
    ("A335819", "1", "3*x*(2+x)/2", "1", "1", Some("1 3 12 54 270 1458 8424 51516 331452 2230740 15641424 113846472")),
    ("A335595", "1-x", "-x*(2+x)", "1", "1/2", Some("1 0 0 4 12 48 400 3120 25872 251776 2715264 31809600")),
    ("A331725", "1+x", "x", "1-x", "1", Some("1 0 3 4 57 216 2755 18348 247569 2368432 35256771 436248660")),
    ("A318215", "1", "x", "(1+x)^2", "1", Some("1 1 -3 7 1 -219 2581 -22973 162177 -554039 -10506419 343049631")),
    ("A302908", "6+x*(3+x)*(6+x)", "-x", "1", "1", None),
    ("A296660", "1-4*x", "-2*x", "1", "1", Some("1 2 20 232 3728 74528 1788736 50084480 1602703616 57697329664 2307893187584 101547300251648")),
    ("A200380", "1", "x+x^2-x^3/6", "1", "1", Some("1 1 3 6 21 51 201 498 2241 4581 26991 17766")),
];

const A116394_PREFIX: Option<&str> = Some("1 1 4 11 33 100 305 937 2890 8943 27741 86216");
const A122877_PREFIX: Option<&str> = Some("0 1 2 7 20 65 206 679 2248 7569 25690 88055");

fn poly(s: &str) -> Poly {
    parse_polynomial(s).unwrap_or_else(|e| panic!("fixture polynomial {s:?}: {e}"))
}

fn rational(s: &str) -> Rational {
    parse_rational(s).unwrap_or_else(|| panic!("fixture rational {s:?}"))
}

fn prefix(s: Option<&str>) -> Option<Vec<BigInt>> {
    s.map(|s| s.split_whitespace().map(|v| v.parse().expect("fixture prefix")).collect())
}

fn row(
    oeis_id: &'static str,
    table: &'static str,
    class: GfClass,
    interpretation: Interpretation,
    known: Option<&str>,
) -> Fixture {
    Fixture { oeis_id, table, class, interpretation, known_prefix: prefix(known), shorten: false }
}

/// Every transcribed table row.
pub fn fixtures() -> Vec<Fixture> {
    use Interpretation::{Egf, Ogf};
    let mut out = Vec::new();
    for &(id, p, known) in INVERSE_SQRT {
        let table = if poly(p).degree() == Some(3) { "inverse square root, cubic" } else { "inverse square root" };
        out.push(row(id, table, GfClass::InverseRoot { p: poly(p), r: int(2) }, Ogf, known));
    }
    for &(id, p, r, known) in INVERSE_ROOT {
        out.push(row(id, "inverse root", GfClass::InverseRoot { p: poly(p), r: rational(r) }, Ogf, known));
    }
    for &(id, q, p, v, known) in GENERAL_ROOT {
        let class = GfClass::GeneralRoot { q: poly(q), v: poly(v), p: poly(p), r: int(2) };
        out.push(row(id, "rational times root", class, Ogf, known));
    }
    let class = GfClass::RootedDenominator {
        q: Poly::one(),
        w: poly("-x"),
        v: poly("1+x"),
        p: poly("1-2*x-3*x^2"),
    };
    out.push(row("A116394", "rooted denominator", class, Ogf, A116394_PREFIX));
    for &(id, p, r, known) in EGF_INVERSE_ROOT {
        out.push(row(id, "exponential, root", GfClass::InverseRoot { p: poly(p), r: rational(r) }, Egf, known));
    }
    for &(id, p, q, v, r, known) in EGF_EXP_ROOT {
        if out.iter().any(|f| f.oeis_id == id) {
            // the table lists this row twice
            continue;
        }
        let class = GfClass::ExpRationalTimesRoot { q: poly(q), v: poly(v), p: poly(p), r: rational(r) };
        out.push(row(id, "exponential, exp times root", class, Egf, known));
    }
    let class = GfClass::RootedNumerator {
        w: poly("1-2*x-3*x^2"),
        v: poly("-(1-x)"),
        p: poly("1-2*x-7*x^2"),
        q: poly("8*x^3"),
        r: int(2),
    };
    out.push(Fixture { shorten: true, ..row("A122877", "term reduction", class, Ogf, A122877_PREFIX) });
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub oeis_id: &'static str,
    pub recurrence: Option<PRecurrence>,
    pub result: Result<(), String>,
    pub elapsed: Duration,
}

/// Derives the fixture's recurrence, applies its interpretation, and compares
/// `terms + 1` generated values with the oracle and the embedded prefix.
pub fn run_fixture(fixture: &Fixture, terms: usize, options: &Options) -> FixtureOutcome {
    let start = Instant::now();
    let (recurrence, result) = match check(fixture, terms, options) {
        Ok(rec) => (Some(rec), Ok(())),
        Err(e) => (None, Err(e)),
    };
    FixtureOutcome { oeis_id: fixture.oeis_id, recurrence, result, elapsed: start.elapsed() }
}

fn check(fixture: &Fixture, terms: usize, options: &Options) -> Result<PRecurrence, String> {
    let interp = fixture.interpretation;
    let derivation = derive(&fixture.class, options).map_err(|e| e.to_string())?;
    let rec = interp.transform(&derivation.recurrence).map_err(|e| e.to_string())?;
    let got = generate_terms(&rec, terms).map_err(|e| e.to_string())?;
    let series = oracle_expand(&fixture.class, terms).map_err(|e| e.to_string())?;
    let expected: Vec<Rational> =
        series.into_coeffs().into_iter().enumerate().map(|(n, g)| interp.apply(n, g)).collect();
    if let Some(n) = (0..=terms).find(|&n| got[n] != expected[n]) {
        return Err(format!("term {n}: recurrence {} vs oracle {}", got[n], expected[n]));
    }
    if let Some(known) = &fixture.known_prefix {
        if let Some(n) = known.iter().zip(&got).position(|(k, g)| Rational::from_integer(k.clone()) != *g) {
            return Err(format!("term {n}: recurrence {} vs embedded prefix {}", got[n], known[n]));
        }
    }
    if fixture.shorten {
        let short = derivation.shortened(options.guard).map_err(|e| e.to_string())?;
        if short.span() >= derivation.recurrence.span() {
            return Err("shortening did not reduce the span".into());
        }
        let again = generate_terms(&short, terms).map_err(|e| e.to_string())?;
        let lattice = oracle_terms(&fixture.class, &short, terms + 1).map_err(|e| e.to_string())?;
        if again != lattice {
            return Err("shortened recurrence disagrees with the oracle".into());
        }
    }
    Ok(rec)
}

#[derive(Clone, Debug)]
pub struct SuiteSummary {
    pub outcomes: Vec<FixtureOutcome>,
    pub elapsed: Duration,
}

impl SuiteSummary {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.result.is_ok()).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }
}

/// Runs every fixture in parallel.
pub fn run_fixture_suite(terms: usize, options: &Options) -> SuiteSummary {
    let start = Instant::now();
    let outcomes = fixtures().par_iter().map(|f| run_fixture(f, terms, options)).collect();
    SuiteSummary { outcomes, elapsed: start.elapsed() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_are_transcribed() {
        let all = fixtures();
        assert_eq!(all.len(), 52);
        let ids: std::collections::HashSet<_> = all.iter().map(|f| f.oeis_id).collect();
        assert_eq!(ids.len(), all.len());
        assert!(all.iter().all(|f| f.class.validate().is_ok()));
        let rational_rows: Vec<_> = all.iter().filter(|f| f.known_prefix.is_none()).map(|f| f.oeis_id).collect();
        assert_eq!(rational_rows, ["A302908"]);
    }

    #[test]
    fn delannoy_fixture() {
        let f = fixtures().into_iter().find(|f| f.oeis_id == "A001850").unwrap();
        let outcome = run_fixture(&f, 30, &Options::default());
        assert_eq!(outcome.result, Ok(()));
    }

    #[test]
    fn whole_suite_passes() {
        let summary = run_fixture_suite(100, &Options::default());
        for o in &summary.outcomes {
            assert_eq!(o.result, Ok(()), "{}", o.oeis_id);
        }
    }
}
