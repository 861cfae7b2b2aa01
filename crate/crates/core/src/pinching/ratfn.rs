use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;
use crate::multipoly::{MultiPoly, UniPoly};

/// Variable name used for the dimension.
pub const N: &str = "n";

/// A rational function of `n`, kept reduced with a monic denominator, so
/// structural equality coincides with equality of functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionN {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunctionN {
    /// `None` when the denominator is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let lead = den.leading().cloned().expect("nonzero denominator");
        let inv = lead.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        Some(RationalFunctionN { num, den })
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunctionN {
            num: UniPoly::constant(c),
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The identity function `n`.
    pub fn n() -> Self {
        Self::poly(UniPoly::from_ints(&[0, 1]))
    }

    pub fn poly(p: UniPoly) -> Self {
        Self::new(p, UniPoly::constant(Rational::one())).expect("unit denominator")
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    /// Monic.
    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of nonzero denominators")
    }

    /// `None` when dividing by the zero function.
    pub fn div(&self, other: &Self) -> Option<Self> {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn neg(&self) -> Self {
        RationalFunctionN {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("same denominator")
    }

    /// `None` at a pole.
    pub fn eval(&self, n: &Rational) -> Option<Rational> {
        let d = self.den.eval(n);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(n) / d)
    }

    /// Cross-multiplied equality `a d == c b`.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Polynomial part and proper remainder: `self = q + r / den`.
    pub fn split(&self) -> (UniPoly, Self) {
        let (q, r) = self.num.div_rem(&self.den);
        let rest = Self::new(r, self.den.clone()).expect("same denominator");
        (q, rest)
    }

    /// `q + r/d` rendered with the polynomial part first, e.g.
    /// `6323/2835 + 784/(513*n)`.
    pub fn split_form(&self) -> String {
        let (q, rest) = self.split();
        if rest.is_zero() {
            return multi(&q).to_string();
        }
        if q.is_zero() {
            return rest.to_string();
        }
        let tail = rest.to_string();
        match tail.strip_prefix('-') {
            Some(t) => format!("{} - {t}", multi(&q)),
            None => format!("{} + {tail}", multi(&q)),
        }
    }
}

fn multi(p: &UniPoly) -> MultiPoly {
    p.to_multi(N)
}

/// `p = k * P` with `P` integral, primitive and with positive leading
/// coefficient.
fn primitive_part(p: &UniPoly) -> (Rational, UniPoly) {
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        return (Rational::zero(), p.clone());
    }
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().unwrap().is_negative() {
        g = -g;
    }
    let prim = UniPoly::new(ints.iter().map(|c| Rational::from_integer(c / &g)).collect());
    (Rational::new(g, lcm), prim)
}

fn wrap(s: String, needs: bool) -> String {
    if needs {
        format!("({s})")
    } else {
        s
    }
}

/// Canonical text: `-(3629*n^2 + 126690*n - 347760)/(1939140*(n + 4))`.
/// Numerator and denominator are primitive integer polynomials and all
/// rational content is written as one leading fraction.
impl fmt::Display for RationalFunctionN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", multi(&self.num));
        }
        let (kn, pn) = primitive_part(&self.num);
        let (kd, pd) = primitive_part(&self.den);
        let k = kn / kd;
        let sign = if k.is_negative() { "-" } else { "" };
        let k = k.abs();
        let (p, q) = (k.numer().clone(), k.denom().clone());
        let n_poly = multi(&pn);
        let d_poly = multi(&pd);
        let n_terms = n_poly.num_terms();
        let top = if pn.degree() == Some(0) {
            p.to_string()
        } else if p.is_one() {
            wrap(n_poly.to_string(), n_terms > 1)
        } else {
            format!("{p}*{}", wrap(n_poly.to_string(), n_terms > 1))
        };
        let d_text = d_poly.to_string();
        let d_multi = d_poly.num_terms() > 1;
        let bottom = if q.is_one() {
            wrap(d_text, d_multi || d_poly.to_string().contains('*'))
        } else {
            format!("({q}*{})", wrap(d_text, d_multi))
        };
        write!(f, "{sign}{top}/{bottom}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};

    fn rf(num: &[i64], den: &[i64]) -> RationalFunctionN {
        RationalFunctionN::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn reduction_and_equality() {
        let a = rf(&[2, 2], &[0, 2, 2]);
        assert_eq!(a, rf(&[1], &[0, 1]));
        assert!(a.equals(&rf(&[3], &[0, 3])));
        assert!(RationalFunctionN::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[])).is_none());
        assert_eq!(a.eval(&int(0)), None);
        assert_eq!(a.eval(&int(4)), Some(frac(1, 4)));
    }

    #[test]
    fn printing() {
        let theta = RationalFunctionN::constant(frac(6323, 2835))
            .add(&RationalFunctionN::constant(frac(784, 513)).div(&RationalFunctionN::n()).unwrap());
        assert_eq!(theta.split_form(), "6323/2835 + 784/(513*n)");
        let sn = theta.neg();
        assert_eq!(sn.split_form(), "-6323/2835 - 784/(513*n)");
        let c = rf(&[-347760, 126690, 3629], &[4, 1]).scale(&frac(-1, 1939140));
        assert_eq!(c.to_string(), "-(3629*n^2 + 126690*n - 347760)/(1939140*(n + 4))");
        assert_eq!(rf(&[1], &[0, 1]).to_string(), "1/n");
        assert_eq!(rf(&[0, 3], &[1]).to_string(), "3*n");
        assert_eq!(rf(&[5, 2], &[4, 1]).to_string(), "(2*n + 5)/(n + 4)");
    }
}
