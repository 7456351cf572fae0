//! Reduced rational generating functions with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `num / den` in lowest terms with `den(0) > 0` and the pair jointly primitive.
///
/// For generating functions of integer sequences the reduced denominator has
/// constant term exactly 1, so equality of series is equality of this pair.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RationalJson", into = "RationalJson")]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::SingularDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).unwrap();
            den = den.div_scalar_exact(&c).unwrap();
        }
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("denominator 1")
    }

    pub fn zero() -> Self {
        RationalFunction { num: IntPolynomial::zero(), den: IntPolynomial::one() }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        RationalFunction { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("product of nonsingular denominators")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("product of nonsingular denominators")
    }

    /// First `terms` Taylor coefficients at 0.
    ///
    /// Panics if a coefficient is not an integer, which cannot happen when
    /// `den(0) = 1`.
    pub fn taylor(&self, terms: usize) -> Vec<BigInt> {
        let d0 = self.den.coeff(0);
        let dens = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = self.num.coeff(k);
            for j in 1..dens.len().min(k + 1) {
                acc -= &dens[j] * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            assert!(r.is_zero(), "non-integral Taylor coefficient");
            out.push(q);
        }
        out
    }

    /// Print with the numerator and denominator split into `t^k`, small
    /// linear factors and any of the `known` factors that divide them.
    pub fn factored(&self, known: &[IntPolynomial]) -> String {
        let num = factor_against(&self.num, known);
        let den = factor_against(&self.den, known);
        if den == "1" {
            num
        } else if is_single_factor(&den) {
            format!("{num} / {den}")
        } else {
            format!("{num} / ({den})")
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// JSON shape `{"num": [...], "den": [...]}`.
#[derive(Serialize, Deserialize)]
pub struct RationalJson {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

impl TryFrom<RationalJson> for RationalFunction {
    type Error = Error;
    fn try_from(j: RationalJson) -> Result<Self> {
        RationalFunction::new(j.num, j.den)
    }
}

impl From<RationalFunction> for RationalJson {
    fn from(r: RationalFunction) -> Self {
        RationalJson { num: r.num, den: r.den }
    }
}

/// True for `(...)` where the outer parentheses enclose the whole string.
fn is_single_factor(s: &str) -> bool {
    // A parenthesised factor may carry a power: `(1 - 2*t)^2`.
    let s = match s.rsplit_once(")^") {
        Some((base, exp)) if !exp.is_empty() && exp.bytes().all(|b| b.is_ascii_digit()) => &s[..base.len() + 1],
        _ => s,
    };
    if !s.starts_with('(') || !s.ends_with(')') {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && i + 1 < s.len() {
            return false;
        }
    }
    true
}

fn small_divisors(c: &BigInt, limit: u32) -> Vec<BigInt> {
    let c = c.abs();
    (1..=limit).map(BigInt::from).filter(|d| (&c % d).is_zero()).collect()
}

/// Factor `p` as far as linear factors with small coefficients and the given
/// candidates allow; whatever is left is printed as one factor.
pub fn factor_against(p: &IntPolynomial, known: &[IntPolynomial]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.clone();
    let mut parts: Vec<String> = Vec::new();

    let zeros = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        rest = IntPolynomial::new(rest.coeffs()[zeros..].to_vec());
        parts.push(if zeros == 1 { "t".into() } else { format!("t^{zeros}") });
    }

    let mut linear: Vec<IntPolynomial> = Vec::new();
    if rest.degree().unwrap_or(0) > 0 {
        for a in small_divisors(&rest.coeff(0), 30) {
            for b in small_divisors(rest.leading().unwrap(), 30) {
                if !a.gcd(&b).is_one() {
                    continue;
                }
                for b in [b.clone(), -b] {
                    let g = IntPolynomial::new(vec![a.clone(), b]);
                    if !linear.contains(&g) {
                        linear.push(g);
                    }
                }
            }
        }
    }
    let pull = |f: &IntPolynomial, rest: &mut IntPolynomial, parts: &mut Vec<String>| {
        if f.degree().unwrap_or(0) == 0 {
            return;
        }
        let mut mult = 0;
        while let Some(q) = rest.div_exact(f) {
            *rest = q;
            mult += 1;
        }
        match mult {
            0 => {}
            1 => parts.push(format!("({f})")),
            m => parts.push(format!("({f})^{m}")),
        }
    };
    for f in &linear {
        pull(f, &mut rest, &mut parts);
    }
    for f in known {
        pull(f, &mut rest, &mut parts);
    }
    if rest != IntPolynomial::one() {
        if rest == -&IntPolynomial::one() {
            parts.insert(0, "-1".into());
        } else if rest.degree() == Some(0) {
            parts.insert(0, rest.to_string());
        } else {
            parts.push(format!("({rest})"));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn reduces_and_normalizes() {
        let r = RationalFunction::new(p(&[-2, -2]), p(&[-2, 2])).unwrap();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1, -1]));
        let common = &p(&[1, 3]) * &p(&[1, 1]);
        let r = RationalFunction::new(common, &p(&[1, 3]) * &p(&[1, -1])).unwrap();
        assert_eq!(r, RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap());
        assert_eq!(RationalFunction::new(p(&[1]), p(&[0, 1])), Err(Error::SingularDenominator));
    }

    #[test]
    fn taylor_of_simple_series() {
        let fib = RationalFunction::new(p(&[1]), p(&[1, -1, -1])).unwrap();
        let got: Vec<i64> = fib.taylor(8).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn arithmetic() {
        let a = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let sum = a.add(&a.shift(1));
        assert_eq!(sum, RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap());
        let sq = a.mul(&a);
        assert_eq!(sq.taylor(4), vec![1, 2, 3, 4].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn json_schema() {
        let r = RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":[1,1],"den":[1,-1]}"#);
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<RationalFunction>(r#"{"num":[1],"den":[0,1]}"#).is_err());
    }

    #[test]
    fn factored_printing() {
        let num = &(&p(&[0, 1]) * &p(&[1, 1])) * &p(&[1, 2, 0, -2, -4, -1]);
        let r = RationalFunction::new(num, p(&[1, -8, -85])).unwrap();
        let s = r.factored(&[p(&[1, 2, 0, -2, -4, -1])]);
        assert_eq!(s, "t*(1 + t)*(1 + 2*t - 2*t^3 - 4*t^4 - t^5) / (1 - 8*t - 85*t^2)");
        let sq = RationalFunction::new(p(&[1, 0, 0, -2]), p(&[1, -4, 4])).unwrap();
        assert_eq!(sq.factored(&[]), "(1 - 2*t^3) / (1 - 2*t)^2");
        let two = RationalFunction::new(p(&[1]), p(&[1, -1, -2])).unwrap();
        assert_eq!(two.factored(&[]), "1 / ((1 + t)*(1 - 2*t))");
    }
}
