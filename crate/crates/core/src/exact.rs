//! Exact arithmetic for certified eigenvalue counts.
//!
//! Eigenvalue counts relative to a threshold `t` come from the inertia of the
//! symmetric matrix `A - tI`, computed by congruent elimination (Sylvester's
//! law of inertia). Thresholds live in `Q(sqrt 2)` so that both the integer
//! thresholds and `±sqrt 2` are handled without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arithmetic needed by the elimination: an ordered field.
pub trait ExactField: Clone + Sized {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> Ordering;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `self / other`; `other` is nonzero.
    fn div(&self, other: &Self) -> Self;
}

impl ExactField for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// `a + b·sqrt 2` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    fn conj(&self) -> Self {
        QSqrt2 { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 - 2 b^2` (rational, nonzero unless the element is zero).
    fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.a) + ratio_to_f64(&self.b) * std::f64::consts::SQRT_2
    }
}

impl ExactField for QSqrt2 {
    fn zero() -> Self {
        QSqrt2 { a: Zero::zero(), b: Zero::zero() }
    }
    fn from_i64(v: i64) -> Self {
        QSqrt2 { a: <BigRational as ExactField>::from_i64(v), b: Zero::zero() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn signum(&self) -> Ordering {
        let sa = ExactField::signum(&self.a);
        let sb = ExactField::signum(&self.b);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a^2 with 2 b^2
            (sa, _) => {
                let lhs = &self.a * &self.a;
                let rhs = BigRational::from_integer(2.into()) * &self.b * &self.b;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => unreachable!("sqrt 2 is irrational"),
                }
            }
        }
    }
    fn add(&self, o: &Self) -> Self {
        QSqrt2 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn sub(&self, o: &Self) -> Self {
        QSqrt2 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn mul(&self, o: &Self) -> Self {
        let two = BigRational::from_integer(2.into());
        QSqrt2 {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn div(&self, o: &Self) -> Self {
        let n = o.norm();
        let num = self.mul(&o.conj());
        QSqrt2 { a: num.a / &n, b: num.b / n }
    }
}

/// Threshold `rational + sqrt2_coeff·sqrt 2` against which eigenvalues are
/// counted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Threshold {
    pub rational: BigRational,
    pub sqrt2_coeff: BigRational,
}

impl Threshold {
    pub fn int(v: i64) -> Self {
        Threshold {
            rational: <BigRational as ExactField>::from_i64(v),
            sqrt2_coeff: Zero::zero(),
        }
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Threshold {
            rational: BigRational::new(numer.into(), denom.into()),
            sqrt2_coeff: Zero::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        Threshold { rational: Zero::zero(), sqrt2_coeff: One::one() }
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.sqrt2_coeff)
    }

    pub fn to_f64(&self) -> f64 {
        self.as_surd().to_f64()
    }

    pub fn as_surd(&self) -> QSqrt2 {
        QSqrt2::new(self.rational.clone(), self.sqrt2_coeff.clone())
    }
}

impl Neg for Threshold {
    type Output = Threshold;
    fn neg(self) -> Threshold {
        Threshold { rational: -self.rational, sqrt2_coeff: -self.sqrt2_coeff }
    }
}

impl Neg for &Threshold {
    type Output = Threshold;
    fn neg(self) -> Threshold {
        -self.clone()
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rational;
        let s = &self.sqrt2_coeff;
        match (Zero::is_zero(r), Zero::is_zero(s)) {
            (_, true) => write!(f, "{r}"),
            (true, false) if s.is_one() => write!(f, "sqrt2"),
            (true, false) if (-s).is_one() => write!(f, "-sqrt2"),
            (true, false) => write!(f, "{s}*sqrt2"),
            (false, false) => write!(f, "{r}+{s}*sqrt2"),
        }
    }
}

impl fmt::Debug for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Threshold({self})")
    }
}

impl Serialize for Threshold {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Threshold {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Threshold {
    type Err = String;

    /// Accepts `p`, `p/q`, `sqrt2` and `-sqrt2`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "sqrt2" => Ok(Threshold::sqrt2()),
            "-sqrt2" => Ok(-Threshold::sqrt2()),
            t => t
                .parse::<BigRational>()
                .map(|rational| Threshold { rational, sqrt2_coeff: Zero::zero() })
                .map_err(|e| format!("bad threshold {t:?}: {e}")),
        }
    }
}

/// Counts of (positive, zero, negative) eigenvalues of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

/// Inertia of a symmetric matrix by congruent elimination with 1x1 and 2x2
/// pivots.
///
/// A nonzero diagonal entry is eliminated as a 1x1 pivot. When the remaining
/// diagonal is entirely zero but some off-diagonal `b` is not, the block
/// `[[0, b], [b, 0]]` is eliminated instead; it contributes one positive and
/// one negative eigenvalue. Once the remaining block is zero, its dimension
/// is the nullity.
pub fn inertia<F: ExactField>(mut m: Vec<Vec<F>>) -> Inertia {
    let mut out = Inertia { positive: 0, zero: 0, negative: 0 };
    loop {
        let k = m.len();
        if k == 0 {
            return out;
        }
        if let Some(p) = (0..k).find(|&i| !m[i][i].is_zero()) {
            let d = m[p][p].clone();
            match d.signum() {
                Ordering::Greater => out.positive += 1,
                _ => out.negative += 1,
            }
            let rest: Vec<usize> = (0..k).filter(|&i| i != p).collect();
            let scaled: Vec<F> = rest.iter().map(|&i| m[i][p].div(&d)).collect();
            let next = rest
                .iter()
                .enumerate()
                .map(|(ri, &i)| {
                    rest.iter()
                        .map(|&j| {
                            if scaled[ri].is_zero() || m[p][j].is_zero() {
                                m[i][j].clone()
                            } else {
                                m[i][j].sub(&scaled[ri].mul(&m[p][j]))
                            }
                        })
                        .collect()
                })
                .collect();
            m = next;
            continue;
        }
        let pivot = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((p, q)) = pivot else {
            out.zero += k;
            return out;
        };
        out.positive += 1;
        out.negative += 1;
        let b = m[p][q].clone();
        let rest: Vec<usize> = (0..k).filter(|&i| i != p && i != q).collect();
        // Schur complement with inverse [[0, 1/b], [1/b, 0]]
        let ip: Vec<F> = rest.iter().map(|&i| m[i][p].div(&b)).collect();
        let iq: Vec<F> = rest.iter().map(|&i| m[i][q].div(&b)).collect();
        let next = rest
            .iter()
            .enumerate()
            .map(|(ri, &i)| {
                rest.iter()
                    .map(|&j| {
                        let mut v = m[i][j].clone();
                        if !ip[ri].is_zero() && !m[q][j].is_zero() {
                            v = v.sub(&ip[ri].mul(&m[q][j]));
                        }
                        if !iq[ri].is_zero() && !m[p][j].is_zero() {
                            v = v.sub(&iq[ri].mul(&m[p][j]));
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        m = next;
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
