//! Membership in the convex hull of the origin and the truncations of a vector.
//!
//! For a generator `g` with `s` leading positive entries and zeros after them,
//! the hull `C_g` is spanned by the origin and `g^1, ..., g^s`. Two independent
//! deciders are provided:
//!
//! * [`membership_inequalities`] checks `f_1 <= g_1` and `f_i g_j <= f_j g_i`
//!   for all `j < i` by integer cross multiplication;
//! * [`membership_coefficients`] solves the triangular system
//!   `f_k = (c_k + ... + c_s) g_k` for the barycentric coefficients and reads the
//!   verdict off their signs.
//!
//! Both return a [`HullCertificate`] that [`check_certificate`] can validate
//! with big-integer arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vector::IntVector;

/// Largest entry accepted by the hull deciders; products of two entries then
/// fit in an `i128`.
pub const MAX_ENTRY: u64 = i64::MAX as u64;

/// An exact rational number, serialized as `{"num": .., "den": ..}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub fn new(num: i128, den: i128) -> Rational {
        Rational(Ratio::new(num, den))
    }

    pub fn zero() -> Rational {
        Rational(Ratio::zero())
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.numer()), BigInt::from(self.denom()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.numer())?;
        s.serialize_field("den", &self.denom())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i128,
            den: i128,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(raw.num, raw.den))
    }
}

/// The inequality an outside point violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `f_1 > g_1`.
    FirstCoordinate,
    /// `f_i g_j > f_j g_i` with `j < i` (1-based coordinates).
    Pair { i: usize, j: usize },
    /// `f_index > 0` although `g_index = 0`.
    Support { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FirstCoordinate => f.write_str("f_1 > g_1"),
            Violation::Pair { i, j } => write!(f, "f_{i} g_{j} > f_{j} g_{i}"),
            Violation::Support { index } => write!(f, "f_{index} > 0 = g_{index}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case", try_from = "RawCertificate")]
pub enum HullCertificate {
    /// `f = sum_j c_j g^j` with `c >= 0` and `sum c <= 1`; one coefficient per
    /// coordinate, zero beyond the support of `g`.
    Inside { coefficients: Vec<Rational> },
    Outside { violation: Violation },
}

// Internally tagged enums buffer their content, which loses i128 support;
// reading through a flat struct keeps large coefficients intact.
#[derive(Deserialize)]
struct RawCertificate {
    verdict: String,
    coefficients: Option<Vec<Rational>>,
    violation: Option<Violation>,
}

impl TryFrom<RawCertificate> for HullCertificate {
    type Error = String;

    fn try_from(raw: RawCertificate) -> std::result::Result<Self, String> {
        match (raw.verdict.as_str(), raw.coefficients, raw.violation) {
            ("inside", Some(coefficients), None) => Ok(HullCertificate::Inside { coefficients }),
            ("outside", None, Some(violation)) => Ok(HullCertificate::Outside { violation }),
            (v, _, _) => Err(format!("malformed certificate with verdict {v:?}")),
        }
    }
}

impl HullCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullCertificate::Inside { .. })
    }
}

/// A generator vector in zero-tail normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullInstance {
    g: IntVector,
    support: usize,
}

impl HullInstance {
    /// Rejects generators with an internal zero and entries above [`MAX_ENTRY`].
    pub fn new(g: IntVector) -> Result<HullInstance> {
        check_entries(&g)?;
        if let Some(index) = g.first_internal_zero() {
            return Err(Error::InternalZero(index));
        }
        let support = g.support_len();
        Ok(HullInstance { g, support })
    }

    pub fn generator(&self) -> &IntVector {
        &self.g
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.g.len()
    }

    /// Number of leading positive coordinates.
    pub fn support(&self) -> usize {
        self.support
    }

    fn prepare(&self, f: &IntVector) -> Result<()> {
        if f.len() != self.g.len() {
            return Err(Error::LengthMismatch {
                left: f.len(),
                right: self.g.len(),
            });
        }
        check_entries(f)
    }

    fn support_violation(&self, f: &IntVector) -> Option<Violation> {
        (self.support + 1..=f.len())
            .find(|&k| f.get(k) > 0)
            .map(|index| Violation::Support { index })
    }

    /// Decides membership through the pairwise cross-multiplied inequalities.
    /// An outside verdict names the first violation, trying `f_1 <= g_1` first
    /// and then pairs by smallest `j`, then smallest `i`.
    pub fn by_inequalities(&self, f: &IntVector) -> Result<HullCertificate> {
        self.prepare(f)?;
        if let Some(violation) = self.support_violation(f) {
            return Ok(HullCertificate::Outside { violation });
        }
        if f.get(1) > self.g.get(1) {
            return Ok(HullCertificate::Outside {
                violation: Violation::FirstCoordinate,
            });
        }
        let s = self.support;
        for j in 1..=s {
            for i in j + 1..=s {
                let lhs = f.get(i) as u128 * self.g.get(j) as u128;
                let rhs = f.get(j) as u128 * self.g.get(i) as u128;
                if lhs > rhs {
                    return Ok(HullCertificate::Outside {
                        violation: Violation::Pair { i, j },
                    });
                }
            }
        }
        Ok(HullCertificate::Inside {
            coefficients: self.telescoping_coefficients(f),
        })
    }

    /// Decides membership by solving for the barycentric coefficients:
    /// `s_k = f_k / g_k`, `c_k = s_k - s_{k+1}`; inside iff every `c_k >= 0` and
    /// `s_1 <= 1`.
    pub fn by_coefficients(&self, f: &IntVector) -> Result<HullCertificate> {
        self.prepare(f)?;
        if let Some(violation) = self.support_violation(f) {
            return Ok(HullCertificate::Outside { violation });
        }
        let coefficients = self.telescoping_coefficients(f);
        if let Some(k) = coefficients.iter().position(Rational::is_negative) {
            // c_k < 0 means s_k < s_{k+1}
            return Ok(HullCertificate::Outside {
                violation: Violation::Pair { i: k + 2, j: k + 1 },
            });
        }
        if self.support > 0 && f.get(1) > self.g.get(1) {
            return Ok(HullCertificate::Outside {
                violation: Violation::FirstCoordinate,
            });
        }
        Ok(HullCertificate::Inside { coefficients })
    }

    /// Solves `f = sum_k c_k g^k` exactly over the support of `g`.
    fn telescoping_coefficients(&self, f: &IntVector) -> Vec<Rational> {
        let s = self.support;
        let mut c = vec![Rational::zero(); self.g.len()];
        for k in 1..=s {
            // c_k = f_k/g_k - f_{k+1}/g_{k+1}, with the second term absent at k = s
            let (fk, gk) = (f.get(k) as i128, self.g.get(k) as i128);
            c[k - 1] = if k == s {
                Rational::new(fk, gk)
            } else {
                let (fk1, gk1) = (f.get(k + 1) as i128, self.g.get(k + 1) as i128);
                Rational::new(fk * gk1 - fk1 * gk, gk * gk1)
            };
        }
        c
    }
}

fn check_entries(v: &IntVector) -> Result<()> {
    match v.entries().iter().position(|&x| x > MAX_ENTRY) {
        Some(p) => Err(Error::EntryTooLarge {
            index: p + 1,
            value: v.get(p + 1),
        }),
        None => Ok(()),
    }
}

/// Membership of `f` in `C_g` by the cross-multiplied inequalities.
pub fn membership_inequalities(f: &IntVector, g: &IntVector) -> Result<HullCertificate> {
    HullInstance::new(g.clone())?.by_inequalities(f)
}

/// Membership of `f` in `C_g` by solving for the coefficients.
pub fn membership_coefficients(f: &IntVector, g: &IntVector) -> Result<HullCertificate> {
    HullInstance::new(g.clone())?.by_coefficients(f)
}

/// Validates a certificate for `f` against `g`.
///
/// Inside: every coefficient is nonnegative, they sum to at most one, and
/// `sum_j c_j g^j` equals `f` coordinatewise, all in big rationals. Outside: the
/// named inequality fails in exact integer arithmetic.
pub fn check_certificate(f: &IntVector, g: &IntVector, cert: &HullCertificate) -> Result<(), String> {
    let d = f.len().max(g.len());
    match cert {
        HullCertificate::Inside { coefficients } => {
            if coefficients.len() > d {
                return Err(format!("{} coefficients for dimension {d}", coefficients.len()));
            }
            let c: Vec<BigRational> = coefficients.iter().map(|x| x.to_big()).collect();
            if let Some(k) = c.iter().position(|x| x.is_negative()) {
                return Err(format!("coefficient c_{} is negative", k + 1));
            }
            let total: BigRational = c.iter().cloned().sum();
            if total > BigRational::one() {
                return Err(format!("coefficients sum to {total} > 1"));
            }
            // coordinate i of sum_j c_j g^j is g_i * (c_i + ... + c_d)
            let mut tail = BigRational::zero();
            for i in (1..=d).rev() {
                if let Some(ci) = c.get(i - 1) {
                    tail += ci;
                }
                let value = &tail * BigRational::from_integer(BigInt::from(g.get(i)));
                if value != BigRational::from_integer(BigInt::from(f.get(i))) {
                    return Err(format!("combination gives {value} at coordinate {i}, f has {}", f.get(i)));
                }
            }
            Ok(())
        }
        HullCertificate::Outside { violation } => {
            let holds = match *violation {
                Violation::FirstCoordinate => f.get(1) > g.get(1),
                Violation::Pair { i, j } => {
                    j < i && i <= d && f.get(i) as u128 * g.get(j) as u128 > f.get(j) as u128 * g.get(i) as u128
                }
                Violation::Support { index } => f.get(index) > 0 && g.get(index) == 0,
            };
            if holds {
                Ok(())
            } else {
                Err(format!("claimed violation {violation} does not hold"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[u64]) -> IntVector {
        IntVector::new(x.to_vec())
    }

    fn coeffs(cert: &HullCertificate) -> Vec<(i128, i128)> {
        match cert {
            HullCertificate::Inside { coefficients } => coefficients.iter().map(|c| (c.numer(), c.denom())).collect(),
            _ => panic!("expected inside, got {cert:?}"),
        }
    }

    #[test]
    fn inequality_examples() {
        let cert = membership_inequalities(&v(&[3, 2, 1]), &v(&[3, 3, 1])).unwrap();
        assert_eq!(
            cert,
            HullCertificate::Outside {
                violation: Violation::Pair { i: 3, j: 2 }
            }
        );
        let g = v(&[6, 12, 8]);
        assert_eq!(coeffs(&membership_inequalities(&g, &g).unwrap()), vec![(0, 1), (0, 1), (1, 1)]);
        assert_eq!(coeffs(&membership_inequalities(&v(&[0, 0, 0]), &g).unwrap()), vec![(0, 1); 3]);
        assert!(membership_inequalities(&v(&[3, 3, 0]), &g).unwrap().is_inside());
    }

    #[test]
    fn coefficient_examples() {
        let g = v(&[5, 6, 0]);
        assert_eq!(coeffs(&membership_coefficients(&g, &g).unwrap()), vec![(0, 1), (1, 1), (0, 1)]);
        assert_eq!(
            coeffs(&membership_coefficients(&v(&[5, 3, 0]), &g).unwrap()),
            vec![(1, 2), (1, 2), (0, 1)]
        );
        // s = (2/3, 5/12, 1/4)
        let cert = membership_coefficients(&v(&[4, 5, 2]), &v(&[6, 12, 8])).unwrap();
        assert_eq!(coeffs(&cert), vec![(1, 4), (1, 6), (1, 4)]);
        assert!(membership_inequalities(&v(&[4, 5, 2]), &v(&[6, 12, 8])).unwrap().is_inside());
        let out = membership_coefficients(&v(&[3, 2, 1]), &v(&[3, 3, 1])).unwrap();
        assert_eq!(
            out,
            HullCertificate::Outside {
                violation: Violation::Pair { i: 3, j: 2 }
            }
        );
    }

    #[test]
    fn support_violation() {
        let f = v(&[1, 1, 1]);
        let g = v(&[5, 6, 0]);
        let expected = HullCertificate::Outside {
            violation: Violation::Support { index: 3 },
        };
        assert_eq!(membership_inequalities(&f, &g).unwrap(), expected);
        assert_eq!(membership_coefficients(&f, &g).unwrap(), expected);
        check_certificate(&f, &g, &expected).unwrap();
    }

    #[test]
    fn first_coordinate_violation() {
        let f = v(&[6, 0]);
        let g = v(&[5, 6]);
        for cert in [membership_inequalities(&f, &g).unwrap(), membership_coefficients(&f, &g).unwrap()] {
            assert_eq!(
                cert,
                HullCertificate::Outside {
                    violation: Violation::FirstCoordinate
                }
            );
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(membership_inequalities(&v(&[1, 1, 1]), &v(&[3, 0, 1])), Err(Error::InternalZero(2)));
        assert_eq!(membership_coefficients(&v(&[1, 1, 1]), &v(&[3, 0, 1])), Err(Error::InternalZero(2)));
        assert!(matches!(
            membership_inequalities(&v(&[1, 1]), &v(&[3, 3, 1])),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
        assert!(matches!(
            membership_coefficients(&v(&[1, u64::MAX]), &v(&[3, 3])),
            Err(Error::EntryTooLarge { index: 2, .. })
        ));
    }

    #[test]
    fn zero_generator() {
        let g = v(&[0, 0]);
        assert!(membership_coefficients(&v(&[0, 0]), &g).unwrap().is_inside());
        assert_eq!(
            membership_inequalities(&v(&[1, 0]), &g).unwrap(),
            HullCertificate::Outside {
                violation: Violation::Support { index: 1 }
            }
        );
    }

    #[test]
    fn certificate_checker_catches_forgeries() {
        let f = v(&[5, 3, 0]);
        let g = v(&[5, 6, 0]);
        let forged = HullCertificate::Inside {
            coefficients: vec![Rational::new(1, 3), Rational::new(1, 2), Rational::zero()],
        };
        assert!(check_certificate(&f, &g, &forged).is_err());
        let negative = HullCertificate::Inside {
            coefficients: vec![Rational::new(-1, 2), Rational::new(1, 2), Rational::zero()],
        };
        assert!(check_certificate(&f, &g, &negative).is_err());
        let wrong = HullCertificate::Outside {
            violation: Violation::Pair { i: 2, j: 1 },
        };
        assert!(check_certificate(&f, &g, &wrong).is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let cert = membership_coefficients(&v(&[5, 3, 0]), &v(&[5, 6, 0])).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"inside","coefficients":[{"num":1,"den":2},{"num":1,"den":2},{"num":0,"den":1}]}"#
        );
        let back: HullCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        let out = HullCertificate::Outside {
            violation: Violation::Pair { i: 3, j: 2 },
        };
        assert_eq!(
            serde_json::to_string(&out).unwrap(),
            r#"{"verdict":"outside","violation":{"kind":"pair","i":3,"j":2}}"#
        );
    }

    #[test]
    fn truncations_are_inside_with_unit_certificates() {
        let g = v(&[7, 15, 9, 2]);
        for k in 1..=4 {
            let gk = g.truncation(k).unwrap();
            let c = coeffs(&membership_coefficients(&gk, &g).unwrap());
            let unit: Vec<(i128, i128)> = (1..=4).map(|j| (i128::from(j == k), 1)).collect();
            assert_eq!(c, unit);
        }
    }
}
