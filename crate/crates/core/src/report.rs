//! Serialization helpers shared by the JSON and CSV reports.

use serde::Serializer;

use crate::rational::Rational;

/// Rationals serialize as `"p/q"` strings (or `"p"` for integers).
pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn ser_opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

/// A float with 17 significant digits, as used in text and CSV output.
pub fn fmt_float(x: f64) -> String {
    if x.is_finite() {
        format!("{:.16e}", x)
    } else {
        format!("{x}")
    }
}
