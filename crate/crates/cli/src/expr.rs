//! Expressions over the generators:
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := unary (["*"] unary)*
//! unary  := "-" unary | atom
//! atom   := number | "I" | "S(" word ")" | "S*(" word ")" | "P(" word ";" word ")" | "(" expr ")"
//! number := digits ["/" digits]
//! ```
//!
//! `P(mu;nu)` is `1_{C(mu,nu)}`. Juxtaposition multiplies.

use subshift_core::{BasicSet, Scalar, StarCalculus, StarElement};

use crate::error::{CliError, Result};

enum Value {
    Scalar(Scalar),
    Element(StarElement),
}

struct Parser<'a, 'c> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    calc: &'c StarCalculus<'c>,
}

pub fn parse(calc: &StarCalculus<'_>, input: &str) -> Result<StarElement> {
    let mut p = Parser {
        input,
        chars: input.char_indices().collect(),
        pos: 0,
        calc,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected input"));
    }
    p.element(v)
}

impl<'c> Parser<'_, 'c> {
    fn error(&self, message: &str) -> CliError {
        CliError::Expression {
            message: message.into(),
            input: self.input.into(),
            position: self.pos,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn rest(&self) -> &str {
        self.chars
            .get(self.pos)
            .map_or("", |(i, _)| &self.input[*i..])
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {s:?}")))
        }
    }

    fn element(&self, v: Value) -> Result<StarElement> {
        Ok(match v {
            Value::Element(e) => e,
            Value::Scalar(c) => self.calc.scale(&self.calc.unit()?, c),
        })
    }

    fn add(&self, a: Value, b: Value, sign: i64) -> Result<Value> {
        let neg = |v: Value| match v {
            Value::Scalar(c) => Value::Scalar(-c),
            Value::Element(e) => Value::Element(self.calc.scale(&e, Scalar::int(-1))),
        };
        let b = if sign < 0 { neg(b) } else { b };
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (a, b) => Value::Element(self.calc.add(&self.element(a)?, &self.element(b)?)?),
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(c), Value::Element(e)) | (Value::Element(e), Value::Scalar(c)) => {
                Value::Element(self.calc.scale(&e, c))
            }
            (Value::Element(x), Value::Element(y)) => Value::Element(self.calc.mul(&x, &y)?),
        })
    }

    fn expr(&mut self) -> Result<Value> {
        let negate = self.eat("-");
        let first = self.term()?;
        let mut acc = if negate {
            self.add(Value::Scalar(Scalar::zero()), first, -1)?
        } else {
            first
        };
        loop {
            let sign = if self.eat("+") {
                1
            } else if self.eat("-") {
                -1
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            acc = self.add(acc, t, sign)?;
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, '(' | 'I' | 'S' | 'P' | '-'))
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let explicit = self.eat("*");
            if !explicit && (self.peek() == Some('-') || !self.starts_atom()) {
                return Ok(acc);
            }
            let u = self.unary()?;
            acc = self.mul(acc, u)?;
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat("-") {
            let v = self.unary()?;
            return self.mul(Value::Scalar(Scalar::int(-1)), v);
        }
        self.atom()
    }

    /// Raw text up to one of `stops`.
    fn word(&mut self, stops: &[char]) -> Result<subshift_core::Word> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| !stops.contains(c) && !c.is_whitespace() && *c != '(')
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        self.calc
            .algebra()
            .shift()
            .alphabet()
            .parse_word(&text)
            .map_err(|e| CliError::Expression {
                message: e.to_string(),
                input: self.input.into(),
                position: start,
            })
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected a number")
        })
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                if self.eat("/") {
                    let at = self.pos;
                    let d = self.number()?;
                    if d == 0 {
                        self.pos = at;
                        return Err(self.error("division by zero"));
                    }
                    return Ok(Value::Scalar(Scalar::ratio(n, d)));
                }
                Ok(Value::Scalar(Scalar::int(n)))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(")")?;
                Ok(v)
            }
            Some('I') => {
                self.pos += 1;
                Ok(Value::Element(self.calc.unit()?))
            }
            Some('S') => {
                let adjoint = self.eat("S*(");
                if !adjoint {
                    self.expect("S(")?;
                }
                let w = self.word(&[')'])?;
                self.expect(")")?;
                Ok(Value::Element(if adjoint {
                    self.calc.s_word_adjoint(&w)?
                } else {
                    self.calc.s_word(&w)?
                }))
            }
            Some('P') => {
                self.expect("P(")?;
                let mu = self.word(&[';', ')'])?;
                self.expect(";")?;
                let nu = self.word(&[')'])?;
                self.expect(")")?;
                let f = self.calc.algebra().basic(&BasicSet::new(mu, nu))?;
                Ok(Value::Element(self.calc.diag(&f)?))
            }
            _ => Err(self.error("expected a number, I, S(..), S*(..), P(..;..) or '('")),
        }
    }
}
