use std::fmt;

use super::{MultiPoly, PolyError, VarTable};
use crate::exactnum::Rational;

/// Quotient of two polynomials. No cancellation is performed; equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        RatFunc { num: p, den }
    }

    pub fn constant(vars: &VarTable, value: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, value))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.den == other.den {
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let num = self
            .num
            .try_mul(&other.den)?
            .try_add(&other.num.try_mul(&self.den)?)?;
        Self::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        Self::new(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, PolyError> {
        Self::new(self.num.try_mul(&other.den)?, self.den.try_mul(&other.num)?)
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RatFunc {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `a/b == c/d` iff `a*d == c*b`.
    pub fn equals(&self, other: &Self) -> Result<bool, PolyError> {
        let lhs = self.num.try_mul(&other.den)?;
        let rhs = other.num.try_mul(&self.den)?;
        Ok(lhs.try_sub(&rhs)?.is_zero())
    }

    pub fn evaluate(&self, point: &[(&str, Rational)]) -> Result<Rational, PolyError> {
        let den = self.den.evaluate(point)?;
        if num_traits::Zero::is_zero(&den) {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.num.evaluate(point)? / den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]({})", self.num.vars(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};
    use crate::multipoly::poly;

    #[test]
    fn arithmetic_and_equality() {
        let v = ["n"];
        let a = RatFunc::new(poly("1", &v), poly("n", &v)).unwrap();
        let b = RatFunc::new(poly("1", &v), poly("n + 1", &v)).unwrap();
        let diff = a.try_sub(&b).unwrap();
        let expected = RatFunc::new(poly("1", &v), poly("n^2 + n", &v)).unwrap();
        assert!(diff.equals(&expected).unwrap());
        assert_eq!(diff.evaluate(&[("n", int(2))]).unwrap(), frac(1, 6));
        assert!(RatFunc::new(poly("1", &v), poly("0", &v)).is_err());
    }
}
