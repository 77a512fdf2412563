//! Laurent polynomials in the scenario parameter `k`, used by `expect` and
//! `claim` lines.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn uses_parameter(&self) -> bool {
        self.terms.keys().any(|&e| e != 0)
    }

    pub fn eval(&self, k: Option<i64>) -> Option<Rational> {
        let mut total = Rational::zero();
        for (&e, c) in &self.terms {
            if e == 0 {
                total += c;
                continue;
            }
            let k = k.filter(|&k| k != 0)?;
            let power = Rational::from_integer(num_traits::pow(BigInt::from(k), e.unsigned_abs() as usize));
            total += if e > 0 { c * power } else { c / power };
        }
        Some(total)
    }

    fn add(mut self, other: &Laurent, sign: i64) -> Self {
        for (&e, c) in &other.terms {
            let entry = self.terms.entry(e).or_insert_with(Rational::zero);
            *entry += c * int(sign);
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &Laurent) -> Self {
        let mut out = Laurent::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out = out.add(&Laurent::monomial(c1 * c2, e1 + e2), 1);
            }
        }
        out
    }

    fn as_monomial(&self) -> Option<(Rational, i32)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((&e, c)), None) => Some((c.clone(), e)),
            _ => None,
        }
    }

    fn pow(&self, n: u32) -> Self {
        (0..n).fold(Laurent::constant(Rational::one()), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            let unit = a.is_one();
            match e {
                0 => write!(f, "{a}")?,
                1 if unit => f.write_str("k")?,
                1 => write!(f, "{a}*k")?,
                e if e > 0 && unit => write!(f, "k^{e}")?,
                e if e > 0 => write!(f, "{a}*k^{e}")?,
                -1 => write!(f, "{a}/k")?,
                e => write!(f, "{a}/k^{}", -e)?,
            }
        }
        Ok(())
    }
}

/// Parses sums and products of rationals, `k`, `^<int>` and parentheses;
/// division is allowed only by monomials. Errors carry a character offset.
pub fn parse_laurent(text: &str) -> Result<Laurent, (usize, String)> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, text };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err((p.offset(), format!("unexpected `{}`", p.chars[p.pos].1)));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Laurent, (usize, String)> {
        let mut acc = if self.eat('-') {
            Laurent::default().add(&self.term()?, -1)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, 1);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Laurent, (usize, String)> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let at = self.offset();
                let divisor = self.power()?;
                let (c, e) =
                    divisor.as_monomial().ok_or((at, "division is only supported by a single term".to_string()))?;
                acc = acc.mul(&Laurent::monomial(c.recip(), -e));
            } else {
                self.skip_ws();
                // implicit product: `4(1-1/k)`, `2k`
                if matches!(self.peek(), Some('(') | Some('k')) {
                    acc = acc.mul(&self.power()?);
                } else {
                    return Ok(acc);
                }
            }
        }
    }

    fn power(&mut self) -> Result<Laurent, (usize, String)> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let at = self.offset();
            let digits = self.digits();
            let n: u32 = digits.parse().map_err(|_| (at, "expected an exponent".to_string()))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<Laurent, (usize, String)> {
        self.skip_ws();
        let at = self.offset();
        match self.peek() {
            Some('k') => {
                self.pos += 1;
                Ok(Laurent::monomial(Rational::one(), 1))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err((self.offset(), "expected `)`".into()));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("digits");
                Ok(Laurent::constant(Rational::from_integer(n)))
            }
            Some(c) => Err((at, format!("unexpected `{c}`"))),
            None => Err((at, "unexpected end of expression".into())),
        }
    }
}
