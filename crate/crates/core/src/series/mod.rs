//! Truncated power series in `x` with exact coefficients, and the generating
//! functions of the lattice built on top of them.
//!
//! A [`Series`] of order `N` carries the coefficients of `x^0 .. x^N`; every
//! operation returns the largest order that is still exact given its inputs.

mod coeff;
pub mod gf;

use std::fmt;

use num::{BigInt, BigRational, One};
use serde::Serialize;

use crate::error::{Error, Result};

pub use coeff::{Coeff, Poly2};

pub type Series1 = Series<BigRational>;
pub type Series3 = Series<Poly2>;

#[derive(Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a truncated series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, C::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, C::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// `x^k * self`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        Series::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { C::zero() })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Series::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `self / d`. A common power of `x` is cancelled first, which lowers the
    /// order by the valuation of `d`; the remaining constant term of `d` must
    /// divide exactly in the coefficient ring.
    pub fn div(&self, d: &Self) -> Result<Self> {
        let v = d.valuation().ok_or_else(|| Error::Series(String::from("division by zero series")))?;
        if let Some(bad) = self.coeffs.iter().take(v).position(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "numerator has a nonzero x^{bad} term but the denominator has valuation {v}"
            )));
        }
        let order = self.order().min(d.order()) - v;
        let num = &self.coeffs[v..=v + order];
        let den = &d.coeffs[v..=v + order];
        let mut q: Vec<C> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = num[k].clone();
            for j in 1..=k {
                acc = acc.sub(&den[j].mul(&q[k - j]));
            }
            let qk = acc
                .exact_div(&den[0])
                .ok_or_else(|| Error::Series(format!("coefficient of x^{k} is not divisible by {:?}", den[0])))?;
            q.push(qk);
        }
        Ok(Series { coeffs: q })
    }

    pub fn inv(&self) -> Result<Self> {
        Series::one(self.order()).div(self)
    }

    /// Square root with constant term 1, by Newton iteration `s <- (s + a/s) / 2`
    /// doubling the number of correct coefficients at each step.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::Series(String::from("square root needs constant term 1")));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s = Series::one(0);
        let mut prec = 0;
        while prec < n {
            prec = (2 * prec + 1).min(n);
            let s_ext = Series::from_coeffs(s.coeffs, prec);
            let a = self.truncate(prec);
            s = s_ext.add(&a.div(&s_ext)?).scale(&half);
        }
        Ok(Series::from_coeffs(s.coeffs, n))
    }

    /// `self(g)` for `g` with zero constant term, by Horner's rule.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Series(String::from("inner series must have zero constant term")));
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Series::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&g).add(&Series::constant(c.clone(), n));
        }
        Ok(acc)
    }
}

impl Series1 {
    /// `f(x * m)` for a monomial-free substitution `x -> x * m`, `m` a
    /// polynomial in `y, z`: coefficient `k` becomes `f_k * m^k`.
    pub fn scale_variable(&self, m: &Poly2) -> Series3 {
        let mut power = Poly2::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(power.scale(c));
            power = power.mul(m);
        }
        Series { coeffs: out }
    }

    pub fn lift(&self) -> Series3 {
        self.map(|c| Poly2::from_rational(c.clone()))
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

impl Series3 {
    /// Coefficientwise evaluation at `y = z = 1`.
    pub fn at_y_one(&self) -> Series1 {
        let one = <BigRational as One>::one();
        self.map(|p| p.eval(&one, &one))
    }

    pub fn swap_yz(&self) -> Self {
        self.map(Poly2::swap_yz)
    }

    /// `(F(x, y) - F(x, 1)) / (y - 1)`, computed coefficientwise as an exact
    /// polynomial quotient.
    pub fn divided_difference_y(&self) -> Self {
        self.map(Poly2::divided_difference_y)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Series<C> {
    /// Nonzero terms by increasing power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let x = match k {
                0 => String::new(),
                1 => String::from("*x"),
                _ => format!("*x^{k}"),
            };
            write!(f, "({c}){x}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// Machine form: `{var_orders, coeffs}` with one entry per nonzero monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesJson {
    pub var_orders: Vec<(String, usize)>,
    pub coeffs: Vec<MonomialJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialJson {
    pub x: usize,
    pub y: u32,
    pub z: u32,
    pub c: String,
}

impl Series1 {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            var_orders: vec![(String::from("x"), self.order())],
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !Coeff::is_zero(*c))
                .map(|(k, c)| MonomialJson { x: k, y: 0, z: 0, c: c.to_string() })
                .collect(),
        }
    }
}

impl Series3 {
    pub fn to_json(&self) -> SeriesJson {
        let max = |f: fn((u32, u32)) -> u32| {
            self.coeffs.iter().flat_map(|p| p.terms().map(move |(k, _)| f(k))).max().unwrap_or(0) as usize
        };
        SeriesJson {
            var_orders: vec![
                (String::from("x"), self.order()),
                (String::from("y"), max(|k| k.0)),
                (String::from("z"), max(|k| k.1)),
            ],
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .flat_map(|(k, p)| {
                    p.terms().map(move |((y, z), c)| MonomialJson { x: k, y, z, c: c.to_string() })
                })
                .collect(),
        }
    }
}
