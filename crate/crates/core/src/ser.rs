//! Serde helpers: exact rationals and big integers travel as strings.

use num_rational::{BigRational, Rational64};
use serde::Serializer;

pub(crate) fn ratio64<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub(crate) fn big_ratio<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}
