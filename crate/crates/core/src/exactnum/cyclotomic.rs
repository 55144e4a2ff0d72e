//! Elements of the cyclotomic fields `Q(ζ_N)`.
//!
//! A value of order `N` is stored as its coordinate vector in the power basis
//! `1, ζ_N, …, ζ_N^{φ(N)-1}`, reduced modulo the `N`-th cyclotomic
//! polynomial. Mixed-order arithmetic promotes both operands to the lcm of
//! the orders; results are never descended to a smaller conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::{Error, Result};

type Coeffs = SmallVec<[Rational; 2]>;

/// Per-order data: `Φ_N` and the reduced powers `ζ_N^k` for `0 <= k < N`.
#[derive(Debug)]
struct FieldData {
    phi: usize,
    /// Low coefficients of the monic `Φ_N` (the leading 1 is implicit).
    poly: Vec<i64>,
    powers: Vec<Vec<Rational>>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Full coefficient list (low to high, monic) of `Φ_n`.
fn cyclotomic_poly(n: u32) -> Vec<i64> {
    if let Some(f) = cache().read().unwrap().get(&n) {
        let mut p = f.poly.clone();
        p.push(1);
        return p;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_poly(d);
            num = poly_exact_div(&num, &den);
        }
    }
    num
}

fn poly_exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (t, &dc) in den.iter().enumerate() {
                rem[i + t] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn field(order: u32) -> Arc<FieldData> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(f) = cache().read().unwrap().get(&order) {
        return f.clone();
    }
    let mut poly = cyclotomic_poly(order);
    poly.pop();
    let phi = poly.len();
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![Rational::ZERO; phi];
    cur[0] = Rational::ONE;
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by x, then reduce the overflow coefficient
        let top = cur[phi - 1].clone();
        for t in (1..phi).rev() {
            cur[t] = cur[t - 1].clone();
        }
        cur[0] = Rational::ZERO;
        if !top.is_zero() {
            for t in 0..phi {
                cur[t] -= &top.mul_int(poly[t]);
            }
        }
    }
    let data = Arc::new(FieldData { phi, poly, powers });
    cache()
        .write()
        .unwrap()
        .entry(order)
        .or_insert(data)
        .clone()
}

/// Euler's totient, i.e. the dimension of `Q(ζ_n)` over `Q`.
pub fn totient(n: u32) -> usize {
    field(n).phi
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Coeffs,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::ZERO)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.push(r);
        Cyclotomic { order: 1, coeffs }
    }

    /// `ζ_n^k`; negative `k` is reduced modulo `n`.
    pub fn root(n: u32, k: i64) -> Self {
        let f = field(n);
        let k = k.rem_euclid(n as i64) as usize;
        Cyclotomic {
            order: n,
            coeffs: f.powers[k].iter().cloned().collect(),
        }
    }

    /// Builds a value from power-basis coordinates; the length must be `φ(order)`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Format("cyclotomic order must be positive".into()));
        }
        let phi = totient(order);
        if coeffs.len() != phi {
            return Err(Error::Format(format!(
                "order {order} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            order,
            coeffs: coeffs.into_iter().collect(),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the order.
    pub fn promote(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "cannot promote order {} to {m}",
            self.order
        );
        if m == self.order {
            return self.clone();
        }
        let f = field(m);
        let mut coeffs: Coeffs = std::iter::repeat_n(Rational::ZERO, f.phi).collect();
        if let Some(r) = self.as_rational() {
            coeffs[0] = r.clone();
        } else {
            let step = (m / self.order) as usize;
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, p) in f.powers[i * step].iter().enumerate() {
                    if !p.is_zero() {
                        coeffs[t] += &(c * p);
                    }
                }
            }
        }
        Cyclotomic { order: m, coeffs }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.order.lcm(&b.order);
        (a.promote(m), b.promote(m))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn mul_same_order(&self, other: &Self) -> Self {
        let f = field(self.order);
        let phi = f.phi;
        let mut prod = vec![Rational::ZERO; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        for deg in (phi..prod.len()).rev() {
            let c = std::mem::take(&mut prod[deg]);
            if c.is_zero() {
                continue;
            }
            for t in 0..phi {
                if f.poly[t] != 0 {
                    prod[deg - phi + t] -= &c.mul_int(f.poly[t]);
                }
            }
        }
        prod.truncate(phi);
        Cyclotomic {
            order: self.order,
            coeffs: prod.into_iter().collect(),
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclotomic {
                order: self.order,
                coeffs: {
                    let mut c = self.coeffs.clone();
                    c[0] = r.recip().expect("nonzero");
                    c
                },
            });
        }
        // Solve (multiplication by self) x = 1 in the power basis.
        let f = field(self.order);
        let phi = f.phi;
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::ZERO; phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul_same_order(&Cyclotomic {
                order: self.order,
                coeffs: f.powers[j].iter().cloned().collect(),
            });
            for i in 0..phi {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m[0][phi] = Rational::ONE;
        for c in 0..phi {
            let p = (c..phi)
                .find(|&r| !m[r][c].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            m.swap(c, p);
            let inv = m[c][c].recip().expect("nonzero pivot");
            for k in c..=phi {
                m[c][k] = &m[c][k] * &inv;
            }
            for r in 0..phi {
                if r != c && !m[r][c].is_zero() {
                    let factor = m[r][c].clone();
                    for k in c..=phi {
                        let d = &factor * &m[c][k];
                        m[r][k] -= &d;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            order: self.order,
            coeffs: m.into_iter().map(|row| row[phi].clone()).collect(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Smallest `t <= 2N` with `self^t = 1`, where `N` is the order of the
    /// ambient field. Every root of unity in `Q(ζ_N)` has order dividing
    /// `lcm(2, N)`, so `None` means the value is not a root of unity.
    pub fn order_of(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = 2 * self.order;
        let mut acc = self.clone();
        for t in 1..=bound {
            if acc.is_one() {
                return Some(t);
            }
            acc = &acc * self;
        }
        None
    }

    /// For a root of unity of order `t`, the pair `(t, k)` with `self = ζ_t^k`.
    pub fn root_exponent(&self) -> Option<(u32, u32)> {
        let t = self.order_of()?;
        (0..t)
            .find(|&k| Cyclotomic::root(t, k as i64) == *self)
            .map(|k| (t, k))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (Some(_), None) | (None, Some(_)) => false,
            (None, None) => {
                let (a, b) = Cyclotomic::common(self, other);
                a.coeffs == b.coeffs
            }
        }
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if self.order == rhs.order {
            return self.mul_same_order(rhs);
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        a.mul_same_order(&b)
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on division by zero; use [`Cyclotomic::checked_div`] otherwise.
    fn div(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("division by zero")
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

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if i == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "z{}^{}", self.order, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(24), 8);
    }

    #[test]
    fn make_root_examples() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_int(-1));
        assert!((z(3, 0) + z(3, 1) + z(3, 2)).is_zero());
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert!(z(7, 0).is_one());
    }

    #[test]
    fn multiply_examples() {
        assert!((&z(8, 1) * &z(8, 7)).is_one());
        let prod = &z(4, 1) * &z(3, 1);
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, z(12, 7));
        assert!(prod.pow(12).is_one());
        assert_eq!(prod.order_of(), Some(12));
        let one = Cyclotomic::one();
        let i = z(4, 1);
        assert_eq!(&(&one + &i) * &(&one - &i), Cyclotomic::from_int(2));
    }

    #[test]
    fn invert_examples() {
        let m1 = Cyclotomic::from_int(-1);
        assert_eq!(m1.inverse().unwrap(), m1);
        assert_eq!(z(4, 1).inverse().unwrap(), -z(4, 1));
        assert_eq!(
            Cyclotomic::from_int(2).inverse().unwrap(),
            Cyclotomic::from_rational(Rational::new(1, 2))
        );
        assert!(matches!(
            Cyclotomic::zero().inverse(),
            Err(Error::DivisionByZero)
        ));
        let a = &Cyclotomic::from_int(3) + &z(5, 2);
        assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn order_of_examples() {
        assert_eq!(Cyclotomic::from_int(-1).order_of(), Some(2));
        assert_eq!(z(6, 1).order_of(), Some(6));
        assert_eq!(Cyclotomic::from_int(2).order_of(), None);
        assert_eq!(Cyclotomic::zero().order_of(), None);
        // -ζ_3 has order 6 inside Q(ζ_3)
        assert_eq!((-z(3, 1)).order_of(), Some(6));
    }

    #[test]
    fn order_of_roots_table() {
        for n in 1..=24u32 {
            for k in 1..n {
                let expected = n / n.gcd(&k);
                assert_eq!(z(n, k as i64).order_of(), Some(expected), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn root_exponent_finds_minimal_form() {
        assert_eq!(Cyclotomic::from_int(-1).root_exponent(), Some((2, 1)));
        assert_eq!(z(12, 3).root_exponent(), Some((4, 1)));
        assert_eq!(Cyclotomic::one().root_exponent(), Some((1, 0)));
        assert_eq!(Cyclotomic::from_int(3).root_exponent(), None);
    }

    #[test]
    fn mixed_order_equality() {
        assert_eq!(z(4, 2), z(8, 4));
        assert_eq!(z(3, 1), z(6, 2));
        assert_ne!(z(4, 1), z(8, 1));
        assert_eq!(Cyclotomic::from_int(-1), z(6, 3));
    }

    #[test]
    fn display() {
        assert_eq!(
            Cyclotomic::from_rational(Rational::new(-3, 4)).to_string(),
            "-3/4"
        );
        assert_eq!(z(4, 1).to_string(), "z4^1");
        assert_eq!((&Cyclotomic::one() - &z(4, 1)).to_string(), "1 - z4^1");
    }
}
