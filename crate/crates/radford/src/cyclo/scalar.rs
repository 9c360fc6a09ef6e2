use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};


use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduction data for the cyclotomic field of one order `N`.
struct Table {
    phi: usize,
    /// `powers[k]` holds `x^k mod Phi_N`, for `k < max(N, 2 phi - 1)`.
    powers: Vec<Vec<i64>>,
}

const CACHED: usize = 1024;
static TABLES: [OnceLock<Table>; CACHED] = [const { OnceLock::new() }; CACHED];
static OVERFLOW: OnceLock<Mutex<HashMap<u32, &'static Table>>> = OnceLock::new();

fn table(order: u32) -> &'static Table {
    assert!(order >= 1, "cyclotomic order must be positive");
    if (order as usize) < CACHED {
        return TABLES[order as usize].get_or_init(|| Table::build(order));
    }
    let map = OVERFLOW.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("cyclotomic table cache poisoned");
    guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(Table::build(order))))
}

/// Integer coefficients of the cyclotomic polynomial `Phi_n`, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // (x^n - 1) divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    // b is monic
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= c * bi;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl Table {
    fn build(order: u32) -> Table {
        let poly = cyclotomic_poly(order);
        let phi = poly.len() - 1;
        let len = (order as usize).max(2 * phi).max(1);
        let mut powers = Vec::with_capacity(len);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..len {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(poly[i]).expect("cyclotomic table overflow"))
                        .expect("cyclotomic table overflow");
                }
            }
        }
        Table { phi, powers }
    }
}

/// An exact element of a cyclotomic field `Q(zeta_N)`.
///
/// Stored as `(sum num[k] zeta^k) / den` in the power basis of length
/// `phi(N)`, with trailing zeros trimmed, `den > 0` and no common factor.
/// Values of different orders compare and combine through the lcm field.
#[derive(Clone)]
pub struct CycScalar {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar { order: 1, num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        CycScalar::normalized(1, vec![v], BigInt::one())
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(CycScalar::normalized(1, vec![BigInt::from(n)], BigInt::from(d)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        CycScalar::normalized(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `zeta_N^k` for the primitive root `exp(2 pi i / N)`. `k` may be negative.
    pub fn root(order: u32, k: i64) -> Self {
        let t = table(order);
        let e = k.rem_euclid(order as i64) as usize;
        let num = t.powers[e].iter().map(|&c| BigInt::from(c)).collect();
        CycScalar::normalized(order, num, BigInt::one())
    }

    /// Builds from power-basis coefficients; entries past `phi(N)` are reduced.
    pub fn from_coeffs(order: u32, coeffs: &[BigRational]) -> Self {
        let mut acc = CycScalar::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&CycScalar::root(order, k as i64) * &CycScalar::from_rational(c));
            }
        }
        acc
    }

    fn normalized(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(|c| c.is_zero()) {
            num.pop();
        }
        if num.is_empty() {
            return CycScalar { order, num, den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                den /= &g;
                for c in num.iter_mut() {
                    *c /= &g;
                }
            }
        }
        CycScalar { order, num, den }
    }

    /// The order `N` of the ambient field this value is written in.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Power-basis coefficients in `Q(zeta_N)`, `N` the stored order.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    /// Rewrites the value inside `Q(zeta_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if self.order == target || self.is_rational() {
            return Ok(CycScalar { order: target, num: self.num.clone(), den: self.den.clone() });
        }
        if target % self.order != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot embed order {} into order {}",
                self.order, target
            )));
        }
        let t = table(target);
        let step = (target / self.order) as usize;
        let mut out = vec![BigInt::zero(); t.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &r) in t.powers[k * step].iter().enumerate() {
                if r != 0 {
                    out[i] += c * r;
                }
            }
        }
        Ok(CycScalar::normalized(target, out, self.den.clone()))
    }

    fn aligned<'a>(a: &'a Self, b: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.order == b.order {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        if a.is_rational() {
            return (Cow::Owned(CycScalar { order: b.order, ..a.clone() }), Cow::Borrowed(b));
        }
        if b.is_rational() {
            return (Cow::Borrowed(a), Cow::Owned(CycScalar { order: a.order, ..b.clone() }));
        }
        let l = a.order.lcm(&b.order);
        (Cow::Owned(a.embed(l).unwrap()), Cow::Owned(b.embed(l).unwrap()))
    }

    fn add_aligned(a: &Self, b: &Self, sign: i32) -> Self {
        let len = a.num.len().max(b.num.len());
        let mut out = Vec::with_capacity(len);
        if a.den == b.den {
            for k in 0..len {
                let x = a.num.get(k).cloned().unwrap_or_default();
                let y = b.num.get(k);
                out.push(match (y, sign) {
                    (Some(y), 1) => x + y,
                    (Some(y), _) => x - y,
                    (None, _) => x,
                });
            }
            return CycScalar::normalized(a.order, out, a.den.clone());
        }
        for k in 0..len {
            let x = a.num.get(k).map(|c| c * &b.den).unwrap_or_default();
            let y = b.num.get(k).map(|c| c * &a.den).unwrap_or_default();
            out.push(if sign == 1 { x + y } else { x - y });
        }
        CycScalar::normalized(a.order, out, &a.den * &b.den)
    }

    fn mul_aligned(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return CycScalar::zero();
        }
        let den = &a.den * &b.den;
        if a.num.len() == 1 || b.num.len() == 1 {
            let (s, v) = if a.num.len() == 1 { (&a.num[0], b) } else { (&b.num[0], a) };
            let num = v.num.iter().map(|c| c * s).collect();
            return CycScalar::normalized(v.order, num, den);
        }
        let t = table(a.order);
        let mut prod = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out = vec![BigInt::zero(); t.phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < t.phi {
                out[k] += c;
            } else {
                for (i, &r) in t.powers[k].iter().enumerate() {
                    if r != 0 {
                        out[i] += &c * r;
                    }
                }
            }
        }
        CycScalar::normalized(a.order, out, den)
    }

    /// Returns `(k, c)` with `self = c * zeta_N^k`, if such a pair exists.
    pub fn as_monomial(&self) -> Option<(u32, BigRational)> {
        // prefer a positive coefficient: -zeta^k is also zeta^(k + N/2)
        if self.is_zero() {
            return Some((0, BigRational::zero()));
        }
        let mut fallback = None;
        for k in 0..self.order {
            let t = self * &CycScalar::root(self.order, -(k as i64));
            if let Some(r) = t.to_rational() {
                if r.is_positive() {
                    return Some((k, r));
                }
                fallback.get_or_insert((k, r));
            }
        }
        fallback
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.num.len() == 1 {
            return Ok(CycScalar::normalized(self.order, vec![self.den.clone()], self.num[0].clone()));
        }
        let nonzero: Vec<usize> = (0..self.num.len()).filter(|&k| !self.num[k].is_zero()).collect();
        if nonzero.len() == 1 {
            let k = nonzero[0] as i64;
            let c = BigRational::new(self.den.clone(), self.num[k as usize].clone());
            return Ok(&CycScalar::root(self.order, -k) * &CycScalar::from_rational(&c));
        }
        // Solve self * y = 1 through the multiplication matrix over Q.
        let t = table(self.order);
        let phi = t.phi;
        let mut m = Matrix::<BigRational>::zeros(phi, phi);
        for col in 0..phi {
            let e = CycScalar::root(self.order, col as i64);
            let p = CycScalar::mul_aligned(self, &e);
            for (row, c) in p.coeffs().into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let y = m.solve(&rhs).ok_or(Error::SingularMatrix)?;
        Ok(CycScalar::from_coeffs(self.order, &y))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycScalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Complex value under `zeta_N = exp(2 pi i / N)`; for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }

    pub fn to_decimal(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.6}")
        } else if im < 0.0 {
            format!("{re:.6}-{:.6}i", -im)
        } else {
            format!("{re:.6}+{im:.6}i")
        }
    }

    /// Renders with a named root of the given order, e.g. `xi^5 · 3/2`.
    pub fn fmt_with(&self, symbol: &str, order: u32) -> String {
        if let Some(r) = self.to_rational() {
            return fmt_rat(&r);
        }
        let v = if order % self.order == 0 || self.is_rational() {
            self.embed(order).unwrap()
        } else {
            self.clone()
        };
        let sym = if v.order == order { symbol.to_string() } else { format!("ζ{}", v.order) };
        if let Some((k, c)) = v.as_monomial() {
            if k == 0 {
                return fmt_rat(&c);
            }
            let pow = if k == 1 { sym.clone() } else { format!("{sym}^{k}") };
            return if c.is_one() {
                pow
            } else if c == -BigRational::one() {
                format!("-{pow}")
            } else {
                format!("{pow} · {}", fmt_rat(&c))
            };
        }
        let mut parts = Vec::new();
        for (k, c) in v.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => fmt_rat(&c),
                1 => format!("{}·{sym}", fmt_rat(&c)),
                _ => format!("{}·{sym}^{k}", fmt_rat(&c)),
            });
        }
        format!("({})", parts.join(" + "))
    }

    /// JSON form: the order and the power-basis coefficients as
    /// `[numerator, denominator]` string pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs()
            .iter()
            .map(|c| serde_json::json!([c.numer().to_string(), c.denom().to_string()]))
            .collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs })
    }
}

fn fmt_rat(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order || (self.is_rational() && other.is_rational()) {
            return self.num == other.num && self.den == other.den;
        }
        let (a, b) = CycScalar::aligned(self, other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = format!("ζ{}", self.order);
        write!(f, "{}", self.fmt_with(&sym, self.order))
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b) = CycScalar::aligned(self, rhs);
        CycScalar::add_aligned(&a, &b, 1)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b) = CycScalar::aligned(self, rhs);
        CycScalar::add_aligned(&a, &b, -1)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        let (a, b) = CycScalar::aligned(self, rhs);
        CycScalar::mul_aligned(&a, &b)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: CycScalar) -> CycScalar {
        &self + &rhs
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: CycScalar) -> CycScalar {
        &self - &rhs
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl From<i64> for CycScalar {
    fn from(v: i64) -> Self {
        CycScalar::from_int(v)
    }
}

impl super::field::Field for CycScalar {
    fn zero() -> Self {
        CycScalar::zero()
    }
    fn one() -> Self {
        CycScalar::one()
    }
    fn from_i64(v: i64) -> Self {
        CycScalar::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
}
