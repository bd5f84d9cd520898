//! Coefficient rings: the integers, or Z/pZ for an odd integer p >= 3
//! (not necessarily prime). Residues are canonicalized to 0..p-1.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    ModP { p: u64 },
}

impl RingSpec {
    /// The ring Z/pZ. Fails unless p is odd and at least 3.
    pub fn mod_p(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::BadModulus(p));
        }
        Ok(RingSpec::ModP { p })
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, RingSpec::Integers)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingSpec::Integers => None,
            RingSpec::ModP { p } => Some(*p),
        }
    }

    /// Canonical representative: the integer itself over Z, the residue in
    /// 0..p-1 over Z/pZ.
    pub fn canonicalize(&self, x: &BigInt) -> BigInt {
        match self {
            RingSpec::Integers => x.clone(),
            RingSpec::ModP { p } => x.mod_floor(&BigInt::from(*p)),
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        use num_traits::Zero;
        self.canonicalize(x).is_zero()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::ModP { p } => write!(f, "Z/{p}Z"),
        }
    }
}

// Serialized as "z" or {"zp": p}.
impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RingSpec::Integers => ser.serialize_str("z"),
            RingSpec::ModP { p } => {
                use serde::ser::SerializeMap;
                let mut map = ser.serialize_map(Some(1))?;
                map.serialize_entry("zp", p)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Tag(String),
            Mod { zp: u64 },
        }
        match Raw::deserialize(de)? {
            Raw::Tag(s) if s == "z" => Ok(RingSpec::Integers),
            Raw::Tag(s) => Err(D::Error::custom(format!("unknown ring tag {s:?}"))),
            Raw::Mod { zp } => RingSpec::mod_p(zp).map_err(D::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(RingSpec::mod_p(3).is_ok());
        assert!(RingSpec::mod_p(9).is_ok());
        assert_eq!(RingSpec::mod_p(2), Err(Error::BadModulus(2)));
        assert_eq!(RingSpec::mod_p(4), Err(Error::BadModulus(4)));
        assert_eq!(RingSpec::mod_p(1), Err(Error::BadModulus(1)));
    }

    #[test]
    fn canonical_residues() {
        let r = RingSpec::mod_p(5).unwrap();
        assert_eq!(r.canonicalize(&BigInt::from(-1)), BigInt::from(4));
        assert_eq!(r.canonicalize(&BigInt::from(12)), BigInt::from(2));
        assert!(r.is_zero(&BigInt::from(10)));
    }

    #[test]
    fn serde_round_trip() {
        let z: RingSpec = serde_json::from_str("\"z\"").unwrap();
        assert_eq!(z, RingSpec::Integers);
        let zp: RingSpec = serde_json::from_str("{\"zp\": 9}").unwrap();
        assert_eq!(zp, RingSpec::mod_p(9).unwrap());
        assert_eq!(serde_json::to_string(&z).unwrap(), "\"z\"");
        assert_eq!(serde_json::to_string(&zp).unwrap(), "{\"zp\":9}");
    }
}
