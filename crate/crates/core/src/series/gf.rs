//! Closed forms, functional equations and exhaustive tallies for the
//! generating functions of the lattice.
//!
//! Variables: `x` marks semilength; in `A(x, y, z)` the variables `y` and `z`
//! mark the statistics `s` and `t`; in `I(x, y)` and `J(x, y)` the variable
//! `y` marks the length of the final descent of the upper path of an interval.

use num::{BigInt, BigRational, BigUint, One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{Coeff, Poly2, Series, Series1, Series3};
use crate::error::{Error, Result};
use crate::numbers::{binomial, catalan};
use crate::path::{enumerate_paths, DyckPath, Step};
use crate::stats::{stat_s, stat_t};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn big(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `1 + c x` style polynomials in `x` with rational coefficients.
fn poly1(coeffs: &[i64], order: usize) -> Series1 {
    Series::from_coeffs(coeffs.iter().map(|&c| q(c)).collect(), order)
}

/// Polynomial in `x` whose coefficients are polynomials in `y, z`, given as
/// `(c, deg_x, deg_y, deg_z)` terms.
fn poly3(terms: &[(i64, usize, u32, u32)], order: usize) -> Series3 {
    let mut s = Series::zero(order);
    for &(c, dx, dy, dz) in terms {
        if dx <= order {
            s = s.add(&Series::monomial(Poly2::term(c, dy, dz), dx, order));
        }
    }
    s
}

/// `C(x) = (1 - sqrt(1 - 4x)) / (2x)`.
pub fn catalan_series(order: usize) -> Series1 {
    let root = poly1(&[1, -4], order + 1).sqrt().expect("constant term is 1");
    let num = Series::one(order + 1).sub(&root);
    num.div(&poly1(&[0, 2], order + 1)).expect("numerator vanishes at 0")
}

/// The trivariate generating function of Dyck paths by `(s, t)`, from its
/// closed form
/// `A = (R - sqrt(R^2 + 4x(xyz - xy - xz + 1)(xy + xz - x - 1))) / (2x(xyz - xy - xz + 1))`
/// with `R = x^2yz - x^2y - x^2z + x^2 - xy - xz + x + 1`.
pub fn a_series(order: usize) -> Result<Series3> {
    let m = order + 1;
    let r = poly3(
        &[(1, 2, 1, 1), (-1, 2, 1, 0), (-1, 2, 0, 1), (1, 2, 0, 0), (-1, 1, 1, 0), (-1, 1, 0, 1), (1, 1, 0, 0), (1, 0, 0, 0)],
        m,
    );
    let qf = poly3(&[(1, 1, 1, 1), (-1, 1, 1, 0), (-1, 1, 0, 1), (1, 0, 0, 0)], m);
    let lin = poly3(&[(1, 1, 1, 0), (1, 1, 0, 1), (-1, 1, 0, 0), (-1, 0, 0, 0)], m);
    let disc = r.mul(&r).add(&qf.mul(&lin).shift(1).scale_int(4));
    let num = r.sub(&disc.sqrt()?);
    num.div(&qf.shift(1).scale_int(2))
}

/// Exhaustive tally `sum over paths of x^n y^s z^t`, for `n <= n_max`.
pub fn statistic_tally(n_max: usize) -> Result<Series3> {
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let paths = enumerate_paths(n)?;
        let counts = paths
            .par_iter()
            .fold(std::collections::BTreeMap::new, |mut acc, p| {
                *acc.entry((stat_s(p) as u32, stat_t(p) as u32)).or_insert(0u64) += 1;
                acc
            })
            .reduce(std::collections::BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        let mut poly = Poly2::zero();
        for ((s, t), c) in counts {
            poly.add_term(s, t, q(c as i64));
        }
        coeffs.push(poly);
    }
    Ok(Series::from_coeffs(coeffs, n_max))
}

/// Left minus right side of the six-case functional equation
/// `A = 1 + x + (A-1)xy + w + w(A-1)y + w(A-1)yA + Ax(A - 1 - x - w - x(A-1)y - w(A-1)y)`
/// with `w = x^2 z / (1 - xz)`, evaluated on any candidate series `a`.
pub fn a_functional_equation_residual(a: &Series3) -> Result<Series3> {
    let n = a.order();
    let one = Series::one(n);
    let x = Series::x(n);
    let y = Series::constant(Poly2::y(), n);
    let w = poly3(&[(1, 2, 0, 1)], n).div(&poly3(&[(1, 0, 0, 0), (-1, 1, 0, 1)], n))?;
    let am1 = a.sub(&one);
    let am1y = am1.mul(&y);
    let b = am1.sub(&x).sub(&w).sub(&x.mul(&am1y)).sub(&w.mul(&am1y));
    let rhs = one
        .add(&x)
        .add(&am1y.mul(&x))
        .add(&w)
        .add(&w.mul(&am1y))
        .add(&w.mul(&am1y).mul(a))
        .add(&a.mul(&x).mul(&b));
    Ok(a.sub(&rhs))
}

pub fn verify_a_functional_equation(order: usize) -> Result<bool> {
    Ok(a_functional_equation_residual(&a_series(order)?)?.is_zero())
}

/// Total number of restricted coverings, `E(x) = (-1 + 4x + (1-2x) sqrt(1-4x)) / (2(1-4x)(1-x))`.
pub fn e_series(order: usize) -> Result<Series1> {
    let root = poly1(&[1, -4], order).sqrt()?;
    let num = poly1(&[-1, 4], order).add(&poly1(&[1, -2], order).mul(&root));
    let den = poly1(&[1, -4], order).mul(&poly1(&[1, -1], order)).scale_int(2);
    num.div(&den)
}

/// `sum_{k=0}^{n-2} binom(2k+2, k)`.
pub fn e_coeff(n: usize) -> BigUint {
    (0..n.saturating_sub(1)).map(|k| binomial(2 * k as u64 + 2, k as u64)).sum()
}

/// Meet-irreducible (equivalently join-irreducible) count, `K(x) = x^2 / ((x-1)(2x-1))`.
pub fn k_series(order: usize) -> Result<Series1> {
    poly1(&[0, 0, 1], order).div(&poly1(&[-1, 1], order).mul(&poly1(&[-1, 2], order)))
}

/// `2^(n-1) - 1` for `n >= 1`, and 0 for `n = 0`.
pub fn k_coeff(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    (BigUint::one() << (n - 1)) - 1u32
}

/// Doubly irreducible count, `L(x) = 3x^3 + (x+2)x^4 / (1 - x - x^2)`.
pub fn l_series(order: usize) -> Result<Series1> {
    let tail = poly1(&[0, 0, 0, 0, 2, 1], order).div(&poly1(&[1, -1, -1], order))?;
    Ok(poly1(&[0, 0, 0, 3], order).add(&tail))
}

/// Word over `{0, 1}` for a path with exactly one outgoing and one incoming
/// covering: 1 for each up-step starting a `UDU` factor, 0 for every other
/// up-step, then the last three letters are dropped.
///
/// Under this reading the dropped tail, coming from the forced ending
/// `U UD UD D^l`, is always `010`.
pub fn fibonacci_word(path: &DyckPath) -> Result<String> {
    let n = path.semilength();
    if n < 4 || stat_s(path) != 1 || stat_t(path) != 1 {
        return Err(Error::BadInput(format!("{path} is not a doubly irreducible path of semilength >= 4")));
    }
    let steps: Vec<Step> = path.steps().collect();
    let mut word = String::with_capacity(n);
    for i in 0..steps.len() {
        if steps[i] == Step::U {
            let udu = i + 2 < steps.len() && steps[i + 1] == Step::D && steps[i + 2] == Step::U;
            word.push(if udu { '1' } else { '0' });
        }
    }
    let tail = word.split_off(n - 3);
    if tail != "010" {
        return Err(Error::BadInput(format!("{path} encodes to a word ending in {tail}, expected 010")));
    }
    Ok(word)
}

/// `J(x, 1) = (1 - sqrt(1 - 8x)) / 4`: intervals with a prime upper path.
pub fn j1_series(order: usize) -> Result<Series1> {
    let root = poly1(&[1, -8], order).sqrt()?;
    Ok(Series::one(order).sub(&root).scale(&BigRational::new(BigInt::one(), BigInt::from(4))))
}

/// `I(x, 1) = (1 - 2x - sqrt(1 - 8x)) / (2(x + 1))`: all intervals.
pub fn i1_series(order: usize) -> Result<Series1> {
    let root = poly1(&[1, -8], order).sqrt()?;
    poly1(&[1, -2], order).sub(&root).div(&poly1(&[2, 2], order))
}

/// `2^(n-1) c_(n-1)`.
pub fn j1_coeff(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    (BigUint::one() << (n - 1)) * catalan(n - 1)
}

/// `(1/n) sum_{m=0}^{n-1} (n - m) binom(n+m-1, m) 2^m`.
pub fn i1_coeff(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let total: BigUint = (0..n)
        .map(|m| (n - m) * binomial((n + m - 1) as u64, m as u64) * (BigUint::one() << m))
        .sum();
    total / n
}

/// `C(xy)` as a series in `x` with polynomial coefficients.
fn catalan_xy(order: usize) -> Series3 {
    catalan_series(order).scale_variable(&Poly2::y())
}

/// Closed form of `J(x, y)`:
/// `xy(J1 - 1)(J1 C y - y + 1) / (J1 C x y^2 - C x y^2 - x y^2 - J1 y + x y + J1 + y - 1)`
/// with `J1 = J(x, 1)` and `C = C(xy)`. The denominator has constant term
/// `y - 1`, so each coefficient is an exact polynomial quotient.
pub fn j_series(order: usize) -> Result<Series3> {
    let j1 = j1_series(order)?.lift();
    let c = catalan_xy(order);
    let one = Series::one(order);
    let x = Series::<Poly2>::x(order);
    let y = Series::constant(Poly2::y(), order);
    let y2 = y.mul(&y);
    let num = x.mul(&y).mul(&j1.sub(&one)).mul(&j1.mul(&c).mul(&y).sub(&y).add(&one));
    let xy2c = c.mul(&x).mul(&y2);
    let den = j1
        .mul(&xy2c)
        .sub(&xy2c)
        .sub(&x.mul(&y2))
        .sub(&j1.mul(&y))
        .add(&x.mul(&y))
        .add(&j1)
        .add(&y)
        .sub(&one);
    num.div(&den)
}

/// `(3 - sqrt(1 - 8x)) / (2(x + 1))`, the factor with `I = J * factor`.
fn i_over_j(order: usize) -> Result<Series1> {
    let root = poly1(&[1, -8], order).sqrt()?;
    poly1(&[3], order).sub(&root).div(&poly1(&[2, 2], order))
}

/// `I(x, y) = J(x, y) (3 - sqrt(1 - 8x)) / (2(x + 1))`.
pub fn i_series(order: usize) -> Result<Series3> {
    Ok(j_series(order)?.mul(&i_over_j(order)?.lift()))
}

/// Exhaustive interval tallies as bivariate series, from per-semilength
/// `(by_last_run, prime_by_last_run)` tables where entry `k` counts intervals
/// whose upper path ends with exactly `k` down-steps.
pub fn interval_series(tables: &[(Vec<u64>, Vec<u64>)]) -> (Series3, Series3) {
    let order = tables.len().saturating_sub(1);
    let to_poly = |v: &Vec<u64>| {
        let mut p = Poly2::zero();
        for (k, c) in v.iter().enumerate() {
            if *c > 0 {
                p.add_term(k as u32, 0, q(*c as i64));
            }
        }
        p
    };
    let all = tables.iter().map(|(a, _)| to_poly(a)).collect();
    let prime = tables.iter().map(|(_, b)| to_poly(b)).collect();
    (Series::from_coeffs(all, order), Series::from_coeffs(prime, order))
}

/// Residuals of the identities tying `I`, `J`, `J(x,1)` and `C` together.
/// Every field is identically zero when the closed forms are consistent.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalResiduals {
    /// `I - J - I(x,1) J`
    pub first_return: Series3,
    /// `J - xy - xyI - (J - J(x,1))/(y - 1) C(xy) x y^2`
    pub last_descent: Series3,
    /// `I - J / (1 - J(x,1))`
    pub quotient: Series3,
    /// `J(x,1) - x - 2 J(x,1)^2`
    pub quadratic: Series1,
    /// `J(x,y)` at `y = 1` against the closed form of `J(x,1)`
    pub j_at_one: Series1,
    /// `I(x,y)` at `y = 1` against the closed form of `I(x,1)`
    pub i_at_one: Series1,
}

impl IntervalResiduals {
    pub fn all_zero(&self) -> bool {
        self.first_return.is_zero()
            && self.last_descent.is_zero()
            && self.quotient.is_zero()
            && self.quadratic.is_zero()
            && self.j_at_one.is_zero()
            && self.i_at_one.is_zero()
    }
}

/// Checks the identities on the given `I` and `J` (closed forms or tallies).
pub fn interval_residuals(i: &Series3, j: &Series3) -> Result<IntervalResiduals> {
    let order = i.order().min(j.order());
    let (i, j) = (i.truncate(order), j.truncate(order));
    let j1 = j1_series(order)?;
    let i1 = i1_series(order)?;
    let one = Series::one(order);
    let xy = Series::monomial(Poly2::y(), 1, order);
    let y2 = Series::constant(Poly2::term(1, 2, 0), order);
    let first_return = i.sub(&j).sub(&i1.lift().mul(&j));
    let last_descent = j
        .sub(&xy)
        .sub(&xy.mul(&i))
        .sub(&j.divided_difference_y().mul(&catalan_xy(order)).mul(&Series::x(order)).mul(&y2));
    let quotient = i.sub(&j.div(&one.sub(&j1.lift()))?);
    let quadratic = j1.sub(&Series::x(order)).sub(&j1.mul(&j1).scale_int(2));
    Ok(IntervalResiduals {
        first_return,
        last_descent,
        quotient,
        quadratic,
        j_at_one: j.at_y_one().sub(&j1),
        i_at_one: i.at_y_one().sub(&i1),
    })
}

/// The root `y0 = (1 + 4x - sqrt(1 - 8x)) / (8x)` of the kernel, as a power
/// series: the numerator has no constant term, so the `1/x` cancels.
pub fn kernel_root(order: usize) -> Result<Series1> {
    let num = poly1(&[1, 4], order + 1).sub(&poly1(&[1, -8], order + 1).sqrt()?);
    if !Coeff::is_zero(num.coeff(0)) {
        return Err(Error::Series(String::from("kernel root numerator does not vanish at x = 0")));
    }
    num.div(&poly1(&[0, 8], order + 1))
}

/// Residuals of the two equations obtained by cancelling the coefficient of
/// `J(x, y)` at `y = y0`:
/// `1 - x y0 / (1 - J1) - C(x y0) x y0^2 / (y0 - 1)` and
/// `x y0 - J1 / (y0 - 1) C(x y0) x y0^2`.
pub fn kernel_residuals(order: usize) -> Result<(Series1, Series1)> {
    let m = order + 1;
    let y0 = kernel_root(m)?;
    let j1 = j1_series(m)?;
    let one = Series::one(m);
    let x = Series::x(m);
    let xy0 = x.mul(&y0);
    let c = catalan_series(m).compose(&xy0)?;
    let cxy0sq = c.mul(&xy0).mul(&y0);
    let y0m1 = y0.sub(&one);
    let first = one.sub(&xy0.div(&one.sub(&j1))?).sub(&cxy0sq.div(&y0m1)?);
    let second = xy0.sub(&j1.div(&y0m1)?.mul(&cxy0sq));
    Ok((first.truncate(order), second.truncate(order)))
}

/// Closed-form counts for the Tamari lattice on paths of semilength `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TamariReference {
    pub n: usize,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub intervals: BigUint,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub coverings: BigUint,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub irreducibles: BigUint,
}

pub fn tamari_reference(n: usize) -> TamariReference {
    let intervals = if n == 0 {
        BigUint::one()
    } else {
        2u32 * binomial(4 * n as u64 + 1, n as u64 - 1) / (n * (n + 1))
    };
    TamariReference {
        n,
        intervals,
        coverings: n.saturating_sub(1) * catalan(n) / 2u32,
        irreducibles: BigUint::from(n * n.saturating_sub(1) / 2),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub n: usize,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub restricted_coverings: BigUint,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub tamari_coverings: BigUint,
    pub covering_ratio: String,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub restricted_intervals: BigUint,
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub tamari_intervals: BigUint,
    pub interval_ratio: String,
    /// Decimal value of `interval_ratio`, for side-by-side reading.
    pub interval_ratio_approx: f64,
    /// `2^(5n + 5/2) / (n 3^(3n + 1/2))`.
    pub interval_ratio_asymptotic: f64,
}

/// Tamari-to-restricted ratios of coverings and intervals for `2 <= n <= n_max`.
pub fn ratio_report(n_max: usize) -> Vec<RatioRow> {
    (2..=n_max)
        .map(|n| {
            let t = tamari_reference(n);
            let rc = e_coeff(n);
            let ri = i1_coeff(n);
            let cr = big(&t.coverings) / big(&rc);
            let ir = big(&t.intervals) / big(&ri);
            let nf = n as f64;
            RatioRow {
                n,
                covering_ratio: cr.to_string(),
                interval_ratio: ir.to_string(),
                interval_ratio_approx: ir.to_f64().unwrap_or(f64::NAN),
                interval_ratio_asymptotic: 2f64.powf(5.0 * nf + 2.5) / (nf * 3f64.powf(3.0 * nf + 0.5)),
                restricted_coverings: rc,
                tamari_coverings: t.coverings,
                restricted_intervals: ri,
                tamari_intervals: t.intervals,
            }
        })
        .collect()
}

/// Whether the covering ratios strictly increase along the report.
pub fn covering_ratio_increasing(rows: &[RatioRow]) -> bool {
    let ratios: Vec<BigRational> =
        rows.iter().map(|r| big(&r.tamari_coverings) / big(&r.restricted_coverings)).collect();
    ratios.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::fibonacci;
    use std::collections::BTreeSet;

    fn ints(s: &Series1) -> Vec<i64> {
        s.integer_coeffs().unwrap().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn poly(terms: &[(i64, u32, u32)]) -> Poly2 {
        terms.iter().fold(Poly2::zero(), |acc, &(c, a, b)| acc.add(&Poly2::term(c, a, b)))
    }

    #[test]
    fn catalan_numbers() {
        let c = catalan_series(10);
        assert_eq!(ints(&c)[..5], [1, 1, 2, 5, 14]);
        assert_eq!(ints(&c)[10], 16796);
        let rhs = Series::one(10).add(&c.mul(&c).shift(1));
        assert_eq!(c, rhs);
    }

    #[test]
    fn a_printed_coefficients() {
        let a = a_series(5).unwrap();
        assert_eq!(a.coeff(2), &poly(&[(1, 1, 0), (1, 0, 1)]));
        assert_eq!(a.coeff(3), &poly(&[(1, 2, 0), (3, 1, 1), (1, 0, 2)]));
        assert_eq!(
            a.coeff(5),
            &poly(&[
                (1, 4, 0),
                (7, 3, 1),
                (13, 2, 2),
                (7, 1, 3),
                (1, 0, 4),
                (5, 2, 1),
                (5, 1, 2),
                (3, 1, 1)
            ])
        );
    }

    #[test]
    fn a_matches_tally_and_equation() {
        let a = a_series(8).unwrap();
        let tally = statistic_tally(8).unwrap();
        assert_eq!(a, tally);
        assert_eq!(a.swap_yz(), a);
        assert!(verify_a_functional_equation(2).unwrap());
        assert!(a_functional_equation_residual(&tally).unwrap().is_zero());
        // a perturbed tally is caught
        let mut bad = tally.coeffs().to_vec();
        bad[6] = bad[6].add(&Poly2::term(1, 1, 0));
        assert!(!a_functional_equation_residual(&Series::from_coeffs(bad, 8)).unwrap().is_zero());
    }

    #[test]
    fn coverings_series() {
        let e = e_series(12).unwrap();
        assert_eq!(ints(&e)[2..10], [1, 5, 20, 76, 286, 1078, 4081, 15521]);
        for n in 0..=12 {
            assert_eq!(BigInt::from(e_coeff(n)), e.coeff(n).to_integer(), "n = {n}");
        }
        assert_eq!(e_coeff(2), BigUint::one());
        for n in 1..=9 {
            let sum: usize = enumerate_paths(n).unwrap().iter().map(stat_s).sum();
            assert_eq!(e_coeff(n), BigUint::from(sum));
        }
    }

    #[test]
    fn irreducible_series() {
        let k = k_series(12).unwrap();
        for n in 1..=12 {
            assert_eq!(BigInt::from(k_coeff(n)), k.coeff(n).to_integer());
        }
        assert_eq!(k_coeff(4), BigUint::from(7u32));
        for n in 1..=9 {
            let c = enumerate_paths(n).unwrap().iter().filter(|p| stat_s(p) == 1).count();
            assert_eq!(k_coeff(n), BigUint::from(c));
        }
        let l = l_series(12).unwrap();
        assert_eq!(ints(&l)[..7], [0, 0, 0, 3, 2, 3, 5]);
        for n in 4..=12 {
            assert_eq!(BigInt::from(fibonacci(n - 1)), l.coeff(n).to_integer());
        }
    }

    #[test]
    fn fibonacci_words() {
        for n in 4..=10 {
            let words: Vec<String> = enumerate_paths(n)
                .unwrap()
                .iter()
                .filter(|p| stat_s(p) == 1 && stat_t(p) == 1)
                .map(|p| fibonacci_word(p).unwrap())
                .collect();
            let distinct: BTreeSet<&String> = words.iter().collect();
            assert_eq!(distinct.len(), words.len(), "n = {n}");
            assert!(words.iter().all(|w| w.len() == n - 3 && !w.contains("11")));
            let all_avoiding = (0u32..1 << (n - 3))
                .map(|b| (0..n - 3).map(|i| if b >> (n - 4 - i) & 1 == 1 { '1' } else { '0' }).collect::<String>())
                .filter(|w| !w.contains("11"))
                .count();
            assert_eq!(words.len(), all_avoiding);
        }
        assert!(matches!(fibonacci_word(&"UDUDUDUD".parse().unwrap()), Err(Error::BadInput(_))));
        assert!(matches!(fibonacci_word(&"UUDDUD".parse().unwrap()), Err(Error::BadInput(_))));
    }

    #[test]
    fn univariate_interval_series() {
        let j1 = j1_series(12).unwrap();
        let i1 = i1_series(12).unwrap();
        assert_eq!(ints(&j1)[1..10], [1, 2, 8, 40, 224, 1344, 8448, 54912, 366080]);
        assert_eq!(ints(&i1)[1..10], [1, 3, 13, 67, 381, 2307, 14589, 95235, 636925]);
        for n in 0..=12 {
            assert_eq!(BigInt::from(j1_coeff(n)), j1.coeff(n).to_integer());
            assert_eq!(BigInt::from(i1_coeff(n)), i1.coeff(n).to_integer());
        }
        let quad = j1.sub(&Series::x(12)).sub(&j1.mul(&j1).scale_int(2));
        assert!(quad.is_zero());
    }

    #[test]
    fn bivariate_interval_series() {
        let j = j_series(6).unwrap();
        let i = i_series(5).unwrap();
        let y2 = Poly2::term(1, 2, 0);
        assert_eq!(j.coeff(1), &Poly2::y());
        assert_eq!(j.coeff(4), &poly(&[(14, 2, 0), (15, 1, 0), (11, 0, 0)]).mul(&y2));
        assert_eq!(j.coeff(6), &poly(&[(132, 4, 0), (233, 3, 0), (325, 2, 0), (363, 1, 0), (291, 0, 0)]).mul(&y2));
        assert_eq!(i.coeff(3), &poly(&[(5, 2, 0), (5, 1, 0), (3, 0, 0)]).mul(&Poly2::y()));
        assert_eq!(i.coeff(4), &poly(&[(14, 3, 0), (20, 2, 0), (20, 1, 0), (13, 0, 0)]).mul(&Poly2::y()));
        let res = interval_residuals(&i_series(9).unwrap(), &j_series(9).unwrap()).unwrap();
        assert!(res.all_zero(), "{res:?}");
    }

    #[test]
    fn kernel() {
        let y0 = kernel_root(8).unwrap();
        assert_eq!(y0.coeff(0), &<BigRational as One>::one());
        let (a, b) = kernel_residuals(8).unwrap();
        assert!(a.is_zero() && b.is_zero());
        assert_eq!(a.order(), 8);
    }

    #[test]
    fn tamari_closed_forms() {
        let t = tamari_reference(4);
        assert_eq!(t.coverings, BigUint::from(21u32));
        assert_eq!(t.irreducibles, BigUint::from(6u32));
        assert_eq!(t.intervals, BigUint::from(68u32));
        assert_eq!(tamari_reference(1).intervals, BigUint::one());
    }

    #[test]
    fn ratios() {
        let rows = ratio_report(12);
        assert_eq!(rows[2].covering_ratio, "21/20");
        assert_eq!(rows[2].interval_ratio, "68/67");
        assert!(covering_ratio_increasing(&rows[1..]));
    }
}
