//! Rational functions in one variable written as ordinary arithmetic:
//! `+ - * / ^`, parentheses, integer literals and implicit multiplication (`2t`, `t(t-1)`).
//! Exponents are integers and may be negative.

use crate::field::{RatFunc, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Rational),
    Var,
    Op(char),
    Open,
    Close,
}

fn tokenize(text: &str, var: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().map_err(|_| format!("bad number {:?}", digits))?));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word != var {
                return Err(format!("unknown name {:?} (the variable is {:?})", word, var));
            }
            out.push(Token::Var);
        } else if "+-*/^".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '(' {
            out.push(Token::Open);
            i += 1;
        } else if c == ')' {
            out.push(Token::Close);
            i += 1;
        } else {
            return Err(format!("unexpected character {:?}", c));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).map_err(|_| "division by zero".to_string())?;
            } else if matches!(self.peek(), Some(Token::Num(_) | Token::Var | Token::Open)) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, String> {
        if self.eat_op('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, String> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let negative = self.eat_op('-');
        let exp = match self.peek() {
            Some(Token::Num(n)) if n.is_integer() => {
                let e = n.numer().to_string().parse::<u32>().map_err(|_| "exponent too large".to_string())?;
                self.pos += 1;
                e
            }
            _ => return Err("expected an integer exponent".into()),
        };
        let p = base.pow(exp);
        if negative {
            p.inv().map_err(|_| "zero to a negative power".to_string())
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<RatFunc, String> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::constant(n))
            }
            Some(Token::Var) => {
                self.pos += 1;
                Ok(RatFunc::var())
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err("missing ')'".into());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(format!("unexpected {:?}", t)),
            None => Err("unexpected end of expression".into()),
        }
    }
}

/// Parses a rational function of `var`.
pub fn parse_ratfunc(text: &str, var: &str) -> Result<RatFunc, String> {
    let tokens = tokenize(text, var)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { tokens, pos: 0 };
    let f = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input after token {}", p.pos));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s, "t").unwrap()
    }

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(c))
    }

    #[test]
    fn arithmetic_forms() {
        assert_eq!(rf("1"), RatFunc::one());
        assert_eq!(rf("-1/t"), -&RatFunc::var().inv().unwrap());
        assert_eq!(rf("(t-1)/(t+2)").display_in("t"), "(t - 1)/(t + 2)");
        assert_eq!(rf("2t^2 - 2t + 1"), poly(&[1, -2, 2]));
        assert_eq!(rf("t(t-1)"), poly(&[0, -1, 1]));
        assert_eq!(rf("t^-2"), rf("1/(t*t)"));
        assert_eq!(rf("-(1 - 1/t)"), rf("1/t - 1"));
        assert_eq!(rf("3/4"), RatFunc::constant(Rational::new(3, 4)));
        assert_eq!(rf("-t^2"), poly(&[0, 0, -1]));
    }

    #[test]
    fn errors() {
        assert!(parse_ratfunc("", "t").is_err());
        assert!(parse_ratfunc("s + 1", "t").is_err());
        assert!(parse_ratfunc("(t + 1", "t").is_err());
        assert!(parse_ratfunc("1/(t - t)", "t").is_err());
        assert!(parse_ratfunc("t^t", "t").is_err());
        assert!(parse_ratfunc("t 1 )", "t").is_err());
        assert!(parse_ratfunc("s^2", "s").is_ok());
    }
}
