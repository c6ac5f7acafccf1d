//! Serde helpers encoding exact rationals as `{"num": int, "den": int}`.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct Repr {
    num: i64,
    den: i64,
}

fn to_ratio<E: serde::de::Error>(r: Repr) -> Result<Ratio<i64>, E> {
    if r.den == 0 {
        return Err(E::custom("zero denominator"));
    }
    Ok(Ratio::new(r.num, r.den))
}

pub fn serialize<S: Serializer>(x: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    Repr {
        num: *x.numer(),
        den: *x.denom(),
    }
    .serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
    to_ratio(Repr::deserialize(d)?)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
        x.map(|r| Repr {
            num: *r.numer(),
            den: *r.denom(),
        })
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio<i64>>, D::Error> {
        Option::<Repr>::deserialize(d)?.map(to_ratio).transpose()
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Ratio<i64>], s: S) -> Result<S::Ok, S::Error> {
        x.iter()
            .map(|r| Repr {
                num: *r.numer(),
                den: *r.denom(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Ratio<i64>>, D::Error> {
        Vec::<Repr>::deserialize(d)?.into_iter().map(to_ratio).collect()
    }
}

/// Parses `a/b` or a bare integer.
pub fn parse(s: &str) -> Option<Ratio<i64>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().ok()?, b.trim().parse::<i64>().ok()?);
            (b != 0).then(|| Ratio::new(a, b))
        }
        None => s.parse().ok().map(Ratio::from_integer),
    }
}
