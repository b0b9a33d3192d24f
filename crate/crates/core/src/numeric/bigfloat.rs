//! Decimal-digit parameterized big-float evaluation on top of `astro-float`.

use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::algebra::{QuadExt, Rat};

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision and constant cache for one evaluation. Precision is
/// always explicit; nothing is global.
pub struct Ctx {
    bits: usize,
    digits: usize,
    cc: Consts,
}

impl Ctx {
    /// Room for `digits` significant decimals plus guard bits.
    pub fn new(digits: usize) -> Self {
        let digits = digits.max(1);
        let bits = ((digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 96).div_ceil(64) * 64;
        Ctx {
            bits,
            digits,
            cc: Consts::new().expect("astro-float constant cache"),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn rat(&mut self, r: &Rat) -> BigFloat {
        let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        if r.is_integer() {
            return n;
        }
        let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        n.div(&d, self.bits, RM)
    }

    pub fn quad(&mut self, q: &QuadExt) -> BigFloat {
        let a = self.rat(q.real_part());
        match q.radicand() {
            None => a,
            Some(d) => {
                let s = self.sqrt(&BigFloat::from_u64(d, self.bits));
                let b = self.rat(q.sqrt_coeff());
                self.add(&a, &self.mul(&b, &s))
            }
        }
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, RM)
    }

    pub fn atan(&mut self, a: &BigFloat) -> BigFloat {
        a.atan(self.bits, RM, &mut self.cc)
    }

    /// Natural log of `|a|`.
    pub fn ln_abs(&mut self, a: &BigFloat) -> BigFloat {
        a.abs().ln(self.bits, RM, &mut self.cc)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.bits, RM, &mut self.cc)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.bits, RM, &mut self.cc)
    }

    pub fn approx(&mut self, value: BigFloat) -> Approx {
        let text = value.format(Radix::Dec, RM, &mut self.cc).unwrap_or_else(|_| "NaN".into());
        Approx {
            text,
            digits: self.digits,
        }
    }
}

/// A high-precision value rendered to a fixed number of significant digits.
#[derive(Clone, PartialEq)]
pub struct Approx {
    /// Full working-precision scientific notation, `d.ddd...e+N`.
    text: String,
    digits: usize,
}

impl Approx {
    pub fn to_f64(&self) -> f64 {
        self.text.parse().unwrap_or(f64::NAN)
    }

    /// All digits carried by the working precision.
    pub fn full(&self) -> &str {
        &self.text
    }

    /// Same value shown with `digits` significant digits.
    pub fn with_digits(&self, digits: usize) -> Approx {
        Approx {
            text: self.text.clone(),
            digits: digits.max(1),
        }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&round_decimal(&self.text, self.digits))
    }
}

impl fmt::Debug for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Approx({self})")
    }
}

/// Rounds `d.ddd...e[+-]N` to `n` significant digits (half up on the
/// decimal expansion) and prints it positionally when that stays short.
pub(crate) fn round_decimal(text: &str, n: usize) -> String {
    let (neg, body) = match text.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, text),
    };
    let (mant, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let mut digits: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    if digits.is_empty() || !mant.bytes().all(|b| b.is_ascii_digit() || b == b'.') {
        return text.to_string();
    }
    // position of the decimal point relative to the first digit
    let lead = mant.find('.').unwrap_or(mant.len()) as i64;
    let mut exp = exp + lead - 1;
    if digits.iter().all(|&d| d == 0) {
        return "0".into();
    }
    while digits[0] == 0 {
        digits.remove(0);
        exp -= 1;
    }
    let round_up = digits.get(n).is_some_and(|&d| d >= 5);
    digits.truncate(n);
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                digits.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    let s: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
    let body = if (-7..21).contains(&exp) {
        if exp < 0 {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), s)
        } else if (exp as usize) + 1 >= s.len() {
            format!("{}{}", s, "0".repeat(exp as usize + 1 - s.len()))
        } else {
            let (a, b) = s.split_at(exp as usize + 1);
            format!("{a}.{b}")
        }
    } else if s.len() == 1 {
        format!("{s}e{exp}")
    } else {
        format!("{}.{}e{exp}", &s[..1], &s[1..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_decimal("2.819842099193e+0", 7), "2.819842");
        assert_eq!(round_decimal("9.9996e-1", 4), "1");
        assert_eq!(round_decimal("-1.25e-1", 2), "-0.13");
        assert_eq!(round_decimal("5.0e-1", 10), "0.5");
        assert_eq!(round_decimal("1.234e+25", 3), "1.23e25");
        assert_eq!(round_decimal("0.0", 3), "0");
    }

    #[test]
    fn quarter_pi() {
        let mut c = Ctx::new(20);
        let one = c.int(1);
        let v = c.atan(&one);
        assert_eq!(c.approx(v).to_string(), "0.78539816339744830962");
    }

    #[test]
    fn sqrt_coefficient() {
        let mut c = Ctx::new(15);
        let q = QuadExt::new(Rat::new(1, 2), Rat::new(1, 2), 2).unwrap();
        let v = c.quad(&q);
        assert_eq!(c.approx(v).to_string(), "1.20710678118655");
    }
}
