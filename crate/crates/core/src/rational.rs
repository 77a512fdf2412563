//! Exact rational helpers and the `{"num": .., "den": ..}` wire encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn recip(n: i64) -> Rational {
    rat(1, n)
}

/// `1 - 1/m`, the coefficient of a branch of multiplicity `m`.
pub fn branch_weight(m: u32) -> Rational {
    Rational::one() - recip(i64::from(m))
}

/// Integer value of `q` if it is integral and fits in an `i64`.
pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Relation symbol of `q` against zero.
pub fn sign_symbol(q: &Rational) -> &'static str {
    if q.is_positive() {
        ">"
    } else if q.is_negative() {
        "<"
    } else {
        "="
    }
}

pub mod serde_rational {
    //! Serializes a rational as `{"num": n, "den": d}` with integer members.
    //! Members that overflow `i64` are written as decimal strings.

    use super::*;
    use serde::de::{self, Deserializer};
    use serde::ser::{SerializeStruct, Serializer};
    use serde::Deserialize;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Wide {
        Small(i64),
        Big(String),
    }

    impl Wide {
        fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
            match self {
                Wide::Small(n) => Ok(BigInt::from(n)),
                Wide::Big(s) => s.parse().map_err(|_| E::custom(format!("bad integer `{s}`"))),
            }
        }
    }

    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Pair {
        num: Wide,
        den: Wide,
    }

    fn put<S: SerializeStruct>(s: &mut S, key: &'static str, v: &BigInt) -> Result<(), S::Error> {
        match v.to_i64() {
            Some(n) => s.serialize_field(key, &n),
            None => s.serialize_field(key, &v.to_string()),
        }
    }

    pub fn serialize<S: Serializer>(q: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("Rational", 2)?;
        put(&mut s, "num", q.numer())?;
        put(&mut s, "den", q.denom())?;
        s.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let pair = Pair::deserialize(de)?;
        let num = pair.num.into_bigint()?;
        let den = pair.den.into_bigint()?;
        if !den.is_positive() {
            return Err(de::Error::custom("rational denominator must be positive"));
        }
        let q = BigRational::new(num.clone(), den.clone());
        if q.numer() != &num || q.denom() != &den {
            return Err(de::Error::custom("rational is not in lowest terms"));
        }
        Ok(q)
    }

    pub mod option {
        use super::*;
        use serde::Serialize;

        #[derive(Serialize)]
        struct Ref<'a>(#[serde(with = "super")] &'a Rational);

        #[derive(Deserialize)]
        struct Own(#[serde(with = "super")] Rational);

        pub fn serialize<S: Serializer>(q: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => ser.serialize_some(&Ref(q)),
                None => ser.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
            Ok(Option::<Own>::deserialize(de)?.map(|o| o.0))
        }
    }
}
