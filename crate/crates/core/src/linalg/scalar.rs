//! Exact rational scalars and their text encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Every computation in this crate happens over the rationals.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Scalar::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Integers print bare, everything else as `p/q` in lowest terms.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Bit-size of numerator plus denominator; the complexity measure used by
/// point reduction.
pub fn bit_size(s: &Scalar) -> u64 {
    s.numer().abs().bits() + s.denom().bits()
}

/// Serde adapter storing a scalar as a `"p/q"` string. Deserialization also
/// accepts plain JSON integers.
pub mod serde_scalar {
    use super::*;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(v))
    }

    struct ScalarVisitor;

    impl Visitor<'_> for ScalarVisitor {
        type Value = Scalar;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a rational as an integer or a \"p/q\" string")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
            parse_scalar(v).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
            Ok(int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
            Ok(Scalar::from_integer(BigInt::from(v)))
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
            Err(E::custom(format!(
                "floating point value {v} is not exact; write it as a \"p/q\" string"
            )))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        d.deserialize_any(ScalarVisitor)
    }

    pub mod vec {
        use super::*;
        use serde::de::Deserialize;
        use serde::ser::SerializeSeq;

        #[derive(serde::Deserialize)]
        struct Wrapped(#[serde(with = "super")] Scalar);

        pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&format_scalar(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
            let raw = Vec::<Wrapped>::deserialize(d)?;
            Ok(raw.into_iter().map(|w| w.0).collect())
        }
    }
}
