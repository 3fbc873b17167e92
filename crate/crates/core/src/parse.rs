//! A small reader for `Q(λ)` expressions.
//!
//! Accepts both the plain text and the LaTeX renderings: `λ`, `lambda` and
//! `\lambda` all denote the parameter, `\frac{a}{b}` is division, braces act
//! as parentheses, and juxtaposition multiplies. `^` takes a nonnegative
//! integer exponent, optionally braced.

use crate::lrat::LRat;
use crate::rat::BigRat;
use num_bigint::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(BigInt),
    Lambda,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,  // ( or {
    Close, // ) or }
    Frac,
}

fn tokenize(input: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(*c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(digits.parse().unwrap()));
            }
            '\u{3bb}' => {
                chars.next();
                out.push(Token::Lambda);
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' | '\u{2212}' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' | '\u{b7}' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' | '{' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' | '}' => {
                chars.next();
                out.push(Token::Close);
            }
            '\\' => {
                chars.next();
                let mut word = String::new();
                while let Some(c) = chars.peek() {
                    if c.is_ascii_alphabetic() {
                        word.push(*c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                match word.as_str() {
                    "lambda" => out.push(Token::Lambda),
                    "frac" => out.push(Token::Frac),
                    "cdot" => out.push(Token::Star),
                    other => return Err(format!("unknown command \\{other}")),
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(c) = chars.peek() {
                    if c.is_ascii_alphabetic() {
                        word.push(*c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if word == "lambda" {
                    out.push(Token::Lambda);
                } else {
                    return Err(format!("unknown symbol {word:?}"));
                }
            }
            other => return Err(format!("unexpected character {other:?}")),
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

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<(), String> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(format!("expected {t:?}, got {got:?}")),
        }
    }

    fn expr(&mut self) -> Result<LRat, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LRat, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc
                        .checked_div(&d)
                        .map_err(|e| e.to_string())?;
                }
                // juxtaposition
                Some(Token::Lambda) | Some(Token::Open) | Some(Token::Frac) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LRat, String> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<usize, String> {
        let braced = self.peek() == Some(&Token::Open);
        if braced {
            self.pos += 1;
        }
        let e = match self.next() {
            Some(Token::Int(n)) => n
                .try_into()
                .map_err(|_| "exponent out of range".to_string())?,
            got => return Err(format!("expected integer exponent, got {got:?}")),
        };
        if braced {
            self.expect(Token::Close)?;
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<LRat, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(LRat::from_rat(BigRat::from_integer(n))),
            Some(Token::Lambda) => Ok(LRat::lambda()),
            Some(Token::Open) => {
                let e = self.expr()?;
                self.expect(Token::Close)?;
                Ok(e)
            }
            Some(Token::Frac) => {
                let num = self.group()?;
                let den = self.group()?;
                num.checked_div(&den).map_err(|e| e.to_string())
            }
            got => Err(format!("expected a value, got {got:?}")),
        }
    }

    fn group(&mut self) -> Result<LRat, String> {
        self.expect(Token::Open)?;
        let e = self.expr()?;
        self.expect(Token::Close)?;
        Ok(e)
    }
}

/// Read an element of `Q(λ)` from its text or LaTeX form.
pub fn parse_lrat(input: &str) -> Result<LRat, String> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err("empty input".into());
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpoly::LPoly;
    use crate::rat::rat_int;
    use crate::render::{lrat_string, Style};

    fn lr(num: &[i64], den: &[i64]) -> LRat {
        LRat::new(
            LPoly::new(num.iter().map(|&c| rat_int(c)).collect()),
            LPoly::new(den.iter().map(|&c| rat_int(c)).collect()),
        )
    }

    #[test]
    fn parses_plain_text() {
        assert_eq!(parse_lrat("1/(\u{3bb} - 1)").unwrap(), lr(&[1], &[-1, 1]));
        assert_eq!(
            parse_lrat("(lambda + 1)/(lambda^2 - 2*lambda + 1)").unwrap(),
            lr(&[1, 1], &[1, -2, 1])
        );
        assert_eq!(parse_lrat("-3/2").unwrap(), LRat::from_rat(crate::rat::rat(-3, 2)));
        assert_eq!(parse_lrat("2\u{3bb}").unwrap(), lr(&[0, 2], &[1]));
    }

    #[test]
    fn parses_latex() {
        assert_eq!(
            parse_lrat("\\frac{\\lambda + 1}{\\lambda^{2} - 2\\lambda + 1}").unwrap(),
            lr(&[1, 1], &[1, -2, 1])
        );
        assert_eq!(
            parse_lrat("\\frac{1}{2}\\lambda").unwrap(),
            LRat::new(
                LPoly::new(vec![rat_int(0), crate::rat::rat(1, 2)]),
                LPoly::one()
            )
        );
    }

    #[test]
    fn round_trips_both_styles() {
        let samples = [
            lr(&[1], &[-1, 1]),
            lr(&[1, 1], &[1, -2, 1]),
            lr(&[0, -1], &[-1, 1]),
            LRat::from_int(0),
            LRat::from_int(-7),
        ];
        for f in &samples {
            for style in [Style::Text, Style::Latex] {
                let s = lrat_string(f, style);
                assert_eq!(&parse_lrat(&s).unwrap(), f, "style {style:?}: {s}");
            }
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_lrat("").is_err());
        assert!(parse_lrat("1 +").is_err());
        assert!(parse_lrat("x").is_err());
        assert!(parse_lrat("1/0").is_err());
    }
}
