//! Rational cocharacters in reduced common-denominator form.
//!
//! A `RatVec` stores integer numerators over one positive denominator with
//! gcd(numerators, denominator) = 1, so equality, ordering and hashing are
//! structural. All arithmetic is exact.

use crate::intmat::{dot, IntVec};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec {
    pub nums: IntVec,
    pub den: BigInt,
}

impl RatVec {
    pub fn new(nums: IntVec, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut v = RatVec { nums, den };
        v.reduce();
        v
    }

    pub fn from_int(v: &[BigInt]) -> Self {
        RatVec { nums: v.to_vec(), den: BigInt::one() }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RatVec::from_int(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    pub fn zero(dim: usize) -> Self {
        RatVec { nums: vec![BigInt::zero(); dim], den: BigInt::one() }
    }

    pub fn dim(&self) -> usize {
        self.nums.len()
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The integer vector, when the denominator is one.
    pub fn as_int(&self) -> Option<IntVec> {
        if self.is_integral() {
            Some(self.nums.clone())
        } else {
            None
        }
    }

    pub fn component(&self, i: usize) -> BigRational {
        BigRational::new(self.nums[i].clone(), self.den.clone())
    }

    pub fn components(&self) -> Vec<BigRational> {
        (0..self.dim()).map(|i| self.component(i)).collect()
    }

    pub fn from_components(c: &[BigRational]) -> Self {
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        RatVec::new(nums, den)
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for x in self.nums.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut g = self.den.clone();
        for x in &self.nums {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.den = &self.den / &g;
            for x in self.nums.iter_mut() {
                *x = &*x / &g;
            }
        }
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let nums = self
            .nums
            .iter()
            .zip(&other.nums)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        RatVec::new(nums, den)
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatVec {
        RatVec { nums: self.nums.iter().map(|x| -x).collect(), den: self.den.clone() }
    }

    pub fn scale(&self, k: &BigRational) -> RatVec {
        let nums = self.nums.iter().map(|x| x * k.numer()).collect();
        RatVec::new(nums, &self.den * k.denom())
    }

    /// Exact pairing with an integer vector: sum_i chi_i * self_i.
    pub fn pair_int(&self, chi: &[BigInt]) -> BigRational {
        BigRational::new(dot(chi, &self.nums), self.den.clone())
    }

    /// Apply an integer matrix (acting on column vectors).
    pub fn apply(&self, m: &crate::intmat::IntMat) -> RatVec {
        RatVec::new(m.mul_vec(&self.nums), self.den.clone())
    }

    /// Lexicographic comparison by exact component values.
    pub fn lex_cmp(&self, other: &RatVec) -> std::cmp::Ordering {
        assert_eq!(self.dim(), other.dim());
        for i in 0..self.dim() {
            let c = (&self.nums[i] * &other.den).cmp(&(&other.nums[i] * &self.den));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Serialization form: each component as a reduced "a" or "a/b" string.
    pub fn display_components(&self) -> Vec<String> {
        self.components()
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    format!("{}", c.numer())
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }

    /// Parse a comma-separated list of integers or a/b fractions.
    pub fn parse(s: &str) -> Result<RatVec, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RatVec::zero(0));
        }
        let mut comps = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let c = if let Some((a, b)) = part.split_once('/') {
                let n: BigInt =
                    a.trim().parse().map_err(|_| format!("bad numerator: {part}"))?;
                let d: BigInt =
                    b.trim().parse().map_err(|_| format!("bad denominator: {part}"))?;
                if d.is_zero() {
                    return Err(format!("zero denominator: {part}"));
                }
                BigRational::new(n, d)
            } else {
                let n: BigInt = part.parse().map_err(|_| format!("bad integer: {part}"))?;
                BigRational::from(n)
            };
            comps.push(c);
        }
        Ok(RatVec::from_components(&comps))
    }
}

impl std::fmt::Display for RatVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.display_components().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let a = RatVec::new(vec![BigInt::from(2), BigInt::from(4)], BigInt::from(4));
        let b = RatVec::new(vec![BigInt::from(1), BigInt::from(2)], BigInt::from(2));
        assert_eq!(a, b);
        let c = RatVec::new(vec![BigInt::from(-1)], BigInt::from(-2));
        assert_eq!(c, RatVec::new(vec![BigInt::from(1)], BigInt::from(2)));
    }

    #[test]
    fn arithmetic() {
        let a = RatVec::parse("1/2, -1/2").unwrap();
        let b = RatVec::parse("1/2, 1/2").unwrap();
        assert_eq!(a.add(&b), RatVec::from_i64(&[1, 0]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.display_components(), vec!["1/2", "-1/2"]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(RatVec::parse("1, x").is_err());
        assert!(RatVec::parse("1/0").is_err());
        assert_eq!(RatVec::parse("3").unwrap(), RatVec::from_i64(&[3]));
    }
}
