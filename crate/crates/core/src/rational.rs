//! Exact rational scalars. Everything in the mathematical core runs on
//! arbitrary-precision rationals; no floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_is_zero(x: &Rat) -> bool {
    x.is_zero()
}

/// Render as `p/q`, or just `p` for integers (the exchange format used in
/// all JSON files).
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Parse `p`, `p/q`, or `-p/q`. Reduced and sign-normalized on construction.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.contains('/') {
        let mut parts = t.splitn(2, '/');
        let p = parts.next().unwrap_or("");
        let q = parts.next().unwrap_or("");
        let num = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("bad numerator {p:?}: {e}")))?;
        let den = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("bad denominator {q:?}: {e}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        Ok(Rat::new(num, den))
    } else {
        let num = BigInt::from_str(t).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))?;
        Ok(Rat::from_integer(num))
    }
}

/// Least common multiple of the denominators of a slice of rationals;
/// used to clear a row before fraction-free elimination.
pub fn denominator_lcm(row: &[Rat]) -> BigInt {
    let mut acc = BigInt::one();
    for x in row {
        let d = x.denom().abs();
        let g = num::integer::gcd(acc.clone(), d.clone());
        acc = acc / g * d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/3", "4/2"] {
            let x = rat_from_str(s).unwrap();
            let y = rat_from_str(&rat_to_string(&x)).unwrap();
            assert_eq!(x, y);
        }
        assert_eq!(rat_from_str("4/2").unwrap(), rat_int(2));
        assert_eq!(rat_to_string(&rat_int(2)), "2");
        assert_eq!(rat_to_string(&rat_from_str("-1/2").unwrap()), "-1/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn lcm_of_denominators() {
        let row = vec![rat_from_str("1/2").unwrap(), rat_from_str("1/3").unwrap(), rat_int(5)];
        assert_eq!(denominator_lcm(&row), BigInt::from(6));
    }
}
