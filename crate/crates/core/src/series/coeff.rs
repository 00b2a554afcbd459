use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Coefficient ring of a truncated series.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
    /// `self / d` when the quotient exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn from_rational(c: BigRational) -> Self {
        Self::one().scale(&c)
    }

    fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
    fn from_rational(c: BigRational) -> Self {
        c
    }
}

/// Polynomial in `y` and `z` with rational coefficients; keys are `(deg_y, deg_z)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl Poly2 {
    pub fn monomial(c: BigRational, dy: u32, dz: u32) -> Self {
        let mut p = Poly2::default();
        p.add_term(dy, dz, c);
        p
    }

    pub fn y() -> Self {
        Self::monomial(<BigRational as One>::one(), 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(<BigRational as One>::one(), 0, 1)
    }

    /// `c * y^dy * z^dz` with integer `c`.
    pub fn term(c: i64, dy: u32, dz: u32) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), dy, dz)
    }

    pub fn add_term(&mut self, dy: u32, dz: u32, c: BigRational) {
        let slot = self.terms.entry((dy, dz)).or_insert_with(<BigRational as Zero>::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&(dy, dz));
        }
    }

    pub fn coeff(&self, dy: u32, dz: u32) -> BigRational {
        self.terms.get(&(dy, dz)).cloned().unwrap_or_else(<BigRational as Zero>::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn eval(&self, y: &BigRational, z: &BigRational) -> BigRational {
        self.terms.iter().fold(<BigRational as Zero>::zero(), |acc, ((dy, dz), c)| {
            acc + c * num::pow(y.clone(), *dy as usize) * num::pow(z.clone(), *dz as usize)
        })
    }

    /// `y <-> z`.
    pub fn swap_yz(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect() }
    }

    /// `(p(y, z) - p(1, z)) / (y - 1)`, term by term: `y^e - 1 = (y - 1)(1 + .. + y^(e-1))`.
    pub fn divided_difference_y(&self) -> Self {
        let mut out = Poly2::default();
        for ((dy, dz), c) in &self.terms {
            for i in 0..*dy {
                out.add_term(i, *dz, c.clone());
            }
        }
        out
    }

    fn leading(&self) -> Option<((u32, u32), &BigRational)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v))
    }
}

impl Coeff for Poly2 {
    fn zero() -> Self {
        Poly2::default()
    }
    fn one() -> Self {
        Self::monomial(<BigRational as One>::one(), 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.0, k.1, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly2::default();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn scale(&self, c: &BigRational) -> Self {
        if Zero::is_zero(c) {
            return Poly2::default();
        }
        Poly2 { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }
    /// Multivariate division with the lexicographic order `y > z`; fails on a
    /// nonzero remainder.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let ((ly, lz), lc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly2::default();
        while let Some(((ry, rz), rc)) = rem.leading() {
            if ry < ly || rz < lz {
                return None;
            }
            let t = Poly2::monomial(rc / lc, ry - ly, rz - lz);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((dy, dz), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let bare = *dy == 0 && *dz == 0;
            if !abs.is_one() || bare {
                write!(f, "{abs}")?;
                if !bare {
                    f.write_str("*")?;
                }
            }
            let mut vars = Vec::new();
            for (name, d) in [("y", *dy), ("z", *dz)] {
                match d {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{d}")),
                }
            }
            f.write_str(&vars.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> Poly2 {
        terms.iter().fold(Poly2::zero(), |acc, &(c, a, b)| acc.add(&Poly2::term(c, a, b)))
    }

    #[test]
    fn exact_division() {
        let a = p(&[(1, 1, 0), (-1, 0, 0)]);
        let b = p(&[(3, 2, 1), (1, 0, 0), (-2, 1, 1)]);
        assert_eq!(a.mul(&b).exact_div(&a), Some(b.clone()));
        assert_eq!(a.mul(&b).exact_div(&b), Some(a.clone()));
        assert_eq!(b.exact_div(&a), None);
        assert_eq!(a.exact_div(&Poly2::zero()), None);
    }

    #[test]
    fn divided_difference() {
        // (y^3 z + 2y - 3 - (z + 2 - 3)) / (y - 1) = (y^2 + y + 1) z + 2
        let q = p(&[(1, 3, 1), (2, 1, 0), (-3, 0, 0)]).divided_difference_y();
        assert_eq!(q, p(&[(1, 2, 1), (1, 1, 1), (1, 0, 1), (2, 0, 0)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1, 1, 0), (-2, 0, 1), (3, 0, 0)]).to_string(), "3 - 2*z + y");
        assert_eq!(p(&[(5, 2, 1)]).to_string(), "5*y^2*z");
        assert_eq!(Poly2::zero().to_string(), "0");
    }
}
