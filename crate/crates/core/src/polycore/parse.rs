//! Shared reader for the term grammar used by polynomials and Laurent polynomials:
//!
//! ```text
//! sum    := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | name ['^' ['-'] integer]
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ParsedTerm {
    pub coef: BigRational,
    pub factors: Vec<(String, i64)>,
}

pub(crate) fn parse_sum(text: &str) -> Result<Vec<ParsedTerm>, PolyError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let terms = p.sum()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(terms)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Vec<ParsedTerm>, PolyError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("empty expression")),
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coef = -term.coef;
            }
            terms.push(term);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some('-') => {
                    self.pos += 1;
                    negative = true;
                }
                _ => return Ok(terms),
            }
        }
    }

    fn term(&mut self) -> Result<ParsedTerm, PolyError> {
        let mut coef = BigRational::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let q = self.number()?;
                    coef *= &q;
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let name = self.identifier();
                    let exp = if self.peek() == Some('^') {
                        self.pos += 1;
                        let neg = if self.peek() == Some('-') {
                            self.pos += 1;
                            true
                        } else {
                            false
                        };
                        let digits = self.digits();
                        let e: i64 = digits.parse().map_err(|_| self.error("bad exponent"))?;
                        if neg {
                            -e
                        } else {
                            e
                        }
                    } else {
                        1
                    };
                    factors.push((name, exp));
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(ParsedTerm { coef, factors });
            }
        }
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<BigRational, PolyError> {
        let num = BigInt::from_str(&self.digits()).map_err(|_| self.error("bad integer"))?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den =
                BigInt::from_str(&self.digits()).map_err(|_| self.error("bad denominator"))?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_laurent_terms() {
        let terms = parse_sum("3/4*t1^2*t2^-1 - t1 + 2").unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].coef, BigRational::new(3.into(), 4.into()));
        assert_eq!(terms[0].factors, vec![("t1".into(), 2), ("t2".into(), -1)]);
        assert_eq!(terms[1].coef, BigRational::from_integer((-1).into()));
        assert!(terms[2].factors.is_empty());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_sum("").is_err());
        assert!(parse_sum("c1 +").is_err());
        assert!(parse_sum("c1 c2").is_err());
        assert!(parse_sum("1/0*c1").is_err());
    }
}
