//! Exact numeric inputs: integers, decimals, `+ - * / ^`, parentheses, `pi`,
//! `sqrt`, `cbrt` and the curve constants.
//!
//! Decimal literals are read as the exact rational they spell (`0.3` is
//! `3/10`), never through `f64`.

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::curves::{a3, a4, a7};
use crate::error::{Error, Result};
use crate::modeq::{es_solve, ESPair};
use crate::numkernel::PrecisionContext;
use crate::specfun::{ellip_e, ellip_k, weier_half_period, EllipticModulus, WeierstrassInvariants};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' || c == 'π' || c == '√' {
            if c == 'π' || c == '√' {
                out.push(Token::Ident(if c == 'π' { "pi" } else { "sqrt" }.into()));
                i += 1;
                continue;
            }
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '−' {
            out.push(Token::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character {c:?} in {text:?}"
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a PrecisionContext,
}

/// Evaluates an expression at the precision of `ctx`.
pub fn eval(text: &str, ctx: &PrecisionContext) -> Result<Float> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        ctx,
    };
    if p.tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    if !value.is_finite() {
        return Err(Error::domain(format!(
            "{text:?} does not evaluate to a finite number"
        )));
    }
    Ok(value)
}

/// Evaluates an expression that must be an integer.
pub fn eval_integer(text: &str, ctx: &PrecisionContext) -> Result<i64> {
    let v = eval(text, ctx)?;
    integer_value(&v).ok_or_else(|| Error::Parse(format!("{text:?} is not an integer")))
}

fn integer_value(v: &Float) -> Option<i64> {
    if v.is_integer() {
        v.to_integer()?.to_i64()
    } else {
        None
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {op:?}")))
        }
    }

    fn expr(&mut self) -> Result<Float> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Float> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc *= self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(Error::domain("division by zero"));
                }
                acc /= d;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Float> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Float> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = self.unary()?;
        if let Some(e) = integer_value(&exp) {
            if let Ok(e) = i32::try_from(e) {
                return Ok(base.pow(e));
            }
        }
        if base < 0 {
            return Err(Error::domain("non-integer power of a negative number"));
        }
        Ok(base.pow(&exp))
    }

    fn args(&mut self) -> Result<Vec<Float>> {
        self.expect('(')?;
        let mut out = vec![self.expr()?];
        while self.eat(',') {
            out.push(self.expr()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Float> {
        let ctx = self.ctx;
        match self.peek().cloned() {
            Some(Token::Num(s)) => {
                self.pos += 1;
                decimal(&s, ctx)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "pi" => Ok(ctx.pi()),
                    "a3" => a3(ctx),
                    "a4" => a4(ctx),
                    "a7" => a7(ctx),
                    _ => {
                        let args = self.args()?;
                        call(&name, &args, ctx)
                    }
                }
            }
            Some(Token::Op(c)) => Err(Error::Parse(format!("unexpected {c:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

fn arity(name: &str, args: &[Float], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "{name} takes {n} argument(s), got {}",
            args.len()
        )))
    }
}

fn call(name: &str, args: &[Float], ctx: &PrecisionContext) -> Result<Float> {
    match name {
        "sqrt" => {
            arity(name, args, 1)?;
            if args[0] < 0 {
                return Err(Error::domain("sqrt of a negative number"));
            }
            Ok(ctx.real(args[0].sqrt_ref()))
        }
        "cbrt" => {
            arity(name, args, 1)?;
            Ok(ctx.real(args[0].cbrt_ref()))
        }
        "K" | "E" => {
            arity(name, args, 1)?;
            let m = EllipticModulus::new(&args[0], ctx)?;
            if name == "K" {
                ellip_k(&m, ctx)
            } else {
                ellip_e(&m, ctx)
            }
        }
        "kappa" => {
            arity(name, args, 2)?;
            let w = WeierstrassInvariants::new(ctx.real(&args[0]), ctx.real(&args[1]), ctx)?;
            weier_half_period(&w, ctx)
        }
        "chi" => {
            arity(name, args, 2)?;
            let n = integer_value(&args[0]);
            let m = integer_value(&args[1]);
            let (Some(n), Some(m)) = (n, m) else {
                return Err(Error::Parse("chi(n, m) needs integer arguments".into()));
            };
            Ok(es_solve(ESPair::new(n, m)?, ctx)?.chi)
        }
        _ => Err(Error::Parse(format!("unknown function {name:?}"))),
    }
}

fn decimal(s: &str, ctx: &PrecisionContext) -> Result<Float> {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if frac.contains('.') || (int.is_empty() && frac.is_empty()) {
        return Err(Error::Parse(format!("malformed number {s:?}")));
    }
    let digits = format!("{int}{frac}");
    let num: Integer = digits
        .parse()
        .map_err(|_| Error::Parse(format!("malformed number {s:?}")))?;
    let scale = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
    Ok(ctx.real(&num) / ctx.real(&scale))
}
