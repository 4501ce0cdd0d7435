//! Exact arithmetic in cyclotomic fields Q(ζ_e).
//!
//! An element of order `e` is stored in the power basis `1, ζ, .., ζ^{φ(e)-1}`
//! reduced modulo the cyclotomic polynomial Φ_e. Operands of different orders
//! are lifted to the lcm of the orders before combining.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer polynomial, coefficient `i` is the coefficient of `x^i`.
type Poly = Vec<BigInt>;

struct FieldData {
    phi: usize,
    /// `reduce[k]` holds the coordinates of `ζ^k`, `0 <= k < e`.
    reduce: Vec<Vec<BigInt>>,
}

fn poly_divide_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn cyclotomic_poly(e: usize, memo: &mut HashMap<usize, Poly>) -> Poly {
    if let Some(p) = memo.get(&e) {
        return p.clone();
    }
    let mut p: Poly = vec![BigInt::zero(); e + 1];
    p[0] = -BigInt::one();
    p[e] = BigInt::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let q = cyclotomic_poly(d, memo);
            p = poly_divide_exact(&p, &q);
        }
    }
    memo.insert(e, p.clone());
    p
}

fn build_field(e: usize) -> FieldData {
    let mut memo = HashMap::new();
    let phi_poly = cyclotomic_poly(e, &mut memo);
    let phi = phi_poly.len() - 1;
    let mut reduce = Vec::with_capacity(e);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for k in 0..e {
        if k > 0 {
            // multiply by x, then replace x^phi by -(Φ_e - x^phi)
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    cur[i] -= &top * &phi_poly[i];
                }
            }
        }
        reduce.push(cur.clone());
    }
    FieldData { phi, reduce }
}

fn field(e: usize) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&e) {
        return f.clone();
    }
    let f = Arc::new(build_field(e));
    cache.lock().unwrap().entry(e).or_insert(f).clone()
}

/// Euler's totient.
pub fn totient(e: usize) -> usize {
    (1..=e).filter(|k| k.gcd(&e) == 1).count()
}

/// An element of Q(ζ_order) in canonical reduced form.
#[derive(Clone)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `ζ_e^k`; `k` is taken modulo `e`.
    pub fn root_of_unity(e: usize, k: i64) -> Self {
        assert!(e > 0, "order must be positive");
        let k = k.rem_euclid(e as i64) as usize;
        let f = field(e);
        Cyclotomic {
            order: e,
            coeffs: f.reduce[k]
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    /// Builds `Σ terms[k]·ζ_e^k` for arbitrary exponents `k < e`.
    pub fn from_exponent_coeffs(e: usize, terms: &[Rational]) -> Self {
        let f = field(e);
        let mut coeffs = vec![Rational::zero(); f.phi];
        for (k, c) in terms.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in f.reduce[k % e].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[i] += c * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic { order: e, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// Rational value or an error naming the offending element.
    pub fn expect_rational(&self) -> Result<Rational> {
        self.to_rational()
            .ok_or_else(|| Error::NonRationalCoefficient(self.to_string()))
    }

    /// Re-expresses `self` in Q(ζ_target); `target` must be a multiple of the order.
    pub fn lift(&self, target: usize) -> Cyclotomic {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "lift target must be a multiple"
        );
        let step = target / self.order;
        let mut terms = vec![Rational::zero(); target];
        for (k, c) in self.coeffs.iter().enumerate() {
            terms[k * step] = c.clone();
        }
        Cyclotomic::from_exponent_coeffs(target, &terms)
    }

    fn lifted_pair(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let e = self.order.lcm(&other.order);
        (self.lift(e), other.lift(e))
    }

    /// Rewrites in the smallest field containing the value; used for canonical output.
    pub fn normalized(&self) -> Cyclotomic {
        if self.is_rational() {
            return Cyclotomic::from_rational(self.coeffs[0].clone());
        }
        let mut divs: Vec<usize> = (1..self.order)
            .filter(|d| self.order.is_multiple_of(*d))
            .collect();
        divs.sort_unstable();
        for d in divs {
            let g = self.galois_fixes_subfield(d);
            if let Some(c) = g {
                return c;
            }
        }
        self.clone()
    }

    fn galois_fixes_subfield(&self, d: usize) -> Option<Cyclotomic> {
        // Q(ζ_d) ⊂ Q(ζ_e) is fixed by t ≡ 1 (mod d); test all such t.
        let e = self.order;
        for t in (1..e).filter(|t| t.gcd(&e) == 1 && t % d == 1 % d) {
            if *self != self.galois(t) {
                return None;
            }
        }
        // The value lies in Q(ζ_d): recover it by solving in the power basis of ζ_d.
        let f = field(d);
        let step = e / d;
        // Coordinates of ζ_e^{k·step} for k < φ(d) form a triangular-like system;
        // solve by Gaussian elimination over Q.
        let big = field(e);
        let n = f.phi;
        let m = big.phi;
        let mut rows: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                let mut r: Vec<Rational> = (0..n)
                    .map(|k| Rational::from_integer(big.reduce[k * step][i].clone()))
                    .collect();
                r.push(self.coeffs[i].clone());
                r
            })
            .collect();
        let sol = crate::linalg::solve_rational(&mut rows, n)?;
        let cand = Cyclotomic {
            order: d,
            coeffs: sol,
        };
        (cand == *self).then_some(cand)
    }

    /// Galois action `ζ ↦ ζ^t`, `gcd(t, e) = 1`.
    pub fn galois(&self, t: usize) -> Cyclotomic {
        let e = self.order;
        let mut terms = vec![Rational::zero(); e];
        for (k, c) in self.coeffs.iter().enumerate() {
            terms[(k * t) % e] += c;
        }
        Cyclotomic::from_exponent_coeffs(e, &terms)
    }

    /// Complex conjugation `ζ^k ↦ ζ^{e-k}`.
    pub fn conjugate(&self) -> Cyclotomic {
        self.galois(self.order - 1)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let e = self.order;
        let mut prod = Cyclotomic::one();
        for t in (1..=e).filter(|t| t.gcd(&e) == 1) {
            prod = &prod * &self.galois(t);
        }
        prod.to_rational()
            .expect("norm of a cyclotomic number is rational")
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.order;
        let mut others = Cyclotomic::one();
        for t in (2..e).filter(|t| t.gcd(&e) == 1) {
            others = &others * &self.galois(t);
        }
        let n = (&others * self)
            .to_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(others.scale(&(Rational::one() / n)))
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Cyclotomic {
        (0..k).fold(Cyclotomic::one(), |acc, _| &acc * self)
    }

    /// Floating-point approximation `(re, im)`; display only.
    pub fn to_float_approx(&self) -> (f64, f64) {
        let e = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / e;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.lifted_pair(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.lifted_pair(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = self.lifted_pair(rhs);
        let e = a.order;
        let mut terms = vec![Rational::zero(); e];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    terms[(i + j) % e] += x * y;
                }
            }
        }
        Cyclotomic::from_exponent_coeffs(e, &terms)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        if n.is_rational() {
            return write!(f, "{}", n.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in n.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("E({})", n.order),
                _ => format!("E({})^{}", n.order, k),
            };
            if root.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{abs}*{root}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Schema(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.normalized();
        let mut outer = s.serialize_map(Some(2))?;
        outer.serialize_entry("order", &n.order)?;
        outer.serialize_entry("coeffs", &SparseCoeffs(&n.coeffs))?;
        outer.end()
    }
}

struct SparseCoeffs<'a>(&'a [Rational]);

impl Serialize for SparseCoeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let nz = self.0.iter().filter(|c| !c.is_zero()).count();
        let mut m = s.serialize_map(Some(nz))?;
        for (k, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                m.serialize_entry(&k.to_string(), &c.to_string())?;
            }
        }
        m.end()
    }
}

#[derive(Deserialize)]
struct RawCyclotomic {
    order: usize,
    coeffs: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCyclotomic::deserialize(d)?;
        if raw.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let mut terms = vec![Rational::zero(); raw.order];
        for (k, v) in raw.coeffs {
            let k: usize = k.parse().map_err(D::Error::custom)?;
            if k >= raw.order {
                return Err(D::Error::custom(format!("exponent {k} out of range")));
            }
            terms[k] += parse_rational(&v).map_err(D::Error::custom)?;
        }
        Ok(Cyclotomic::from_exponent_coeffs(raw.order, &terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: usize, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(e, k)
    }

    #[test]
    fn small_identities() {
        assert_eq!(z(4, 1).pow(2), Cyclotomic::from_int(-1));
        let s = &(&Cyclotomic::one() + &z(3, 1)) + &z(3, 2);
        assert!(s.is_zero());
        assert_eq!(z(5, 1).conjugate(), z(5, 4));
        assert_eq!(totient(12), 4);
        assert_eq!(field(12).phi, 4);
    }

    #[test]
    fn cross_order_equality_lifts() {
        assert_eq!(z(2, 1), z(6, 3));
        assert_eq!(z(3, 1), z(12, 4));
        let sum = &z(4, 1) + &z(3, 1);
        assert_eq!(sum.order(), 12);
        assert_eq!(&sum - &z(3, 1), z(4, 1));
    }

    #[test]
    fn inverse_and_norm() {
        let a = &Cyclotomic::from_int(2) + &z(5, 1);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, Cyclotomic::one());
        assert!(Cyclotomic::zero().inv().is_err());
        assert_eq!(z(7, 3).norm(), Rational::one());
    }

    #[test]
    fn normalization_finds_subfield() {
        // ζ_12^4 = ζ_3
        let x = z(12, 4);
        let n = x.normalized();
        assert_eq!(n.order(), 3);
        assert_eq!(n, x);
        // sqrt(-3) = ζ3 - ζ3^2 lives in Q(ζ3)
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.normalized().order(), 3);
    }

    #[test]
    fn json_round_trip() {
        let x = &z(12, 1).scale(&Rational::new(3.into(), 2.into())) - &z(12, 5);
        let js = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        let r: Cyclotomic = serde_json::from_str(r#"{"order":4,"coeffs":{"2":"1"}}"#).unwrap();
        assert_eq!(r, Cyclotomic::from_int(-1));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Cyclotomic::from_int(-3).to_string(), "-3");
        assert_eq!(z(3, 1).to_string(), "E(3)");
    }
}
