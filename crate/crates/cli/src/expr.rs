//! Expression grammar shared by every verb.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := rational | symbol | '(' sum ')'
//! ```
//!
//! Products are evaluated left-nested exactly as written. Numeric literals are
//! scalars and act by scalar multiplication.

use std::fmt;

use homore::exactnum::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown symbol `{name}` at column {column}")]
    UnknownSymbol { column: usize, name: String },
    #[error("cannot evaluate at column {column}: {message}")]
    Eval { column: usize, message: String },
}

/// The ring an expression is evaluated in.
pub trait Domain {
    type Elem: Clone;

    fn symbol(&self, name: &str) -> Option<Self::Elem>;

    /// `r·1`, when the domain has a unit.
    fn embed(&self, r: &Rational) -> Result<Self::Elem, String>;

    fn scale(&self, e: &Self::Elem, r: &Rational) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether every product in the domain is associative.
    fn is_associative(&self) -> bool;

    /// Whether `e` associates with everything, so its placement in a product
    /// chain is irrelevant.
    fn is_nuclear(&self, e: &Self::Elem) -> bool;

    fn render(&self, e: &Self::Elem) -> String;
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((column, t));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            let r = lit.parse::<Rational>().map_err(|_| ExprError::Syntax {
                column,
                message: format!("bad number `{lit}`"),
            })?;
            out.push((column, Tok::Num(r)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((column, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            return Err(ExprError::Syntax {
                column,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Parsed expression tree. A `Product` holds an unparenthesized chain.
#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(Rational),
    Symbol { column: usize, name: String },
    Neg(Box<Expr>),
    Sum(Vec<(bool, Expr)>),
    Product { column: usize, factors: Vec<Expr> },
    Power { column: usize, base: Box<Expr>, exp: u32 },
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |(c, _)| *c)
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut terms = vec![(false, self.product()?)];
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            terms.push((negative, self.product()?));
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().expect("one term").1
        } else {
            Expr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        let mut factors = vec![self.unary()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product { column, factors }
        })
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let r = r.clone();
                r.to_string()
                    .parse::<u32>()
                    .map_err(|_| self.error("exponent out of range"))?
            }
            _ => return Err(self.error("expected a nonnegative integer exponent")),
        };
        self.pos += 1;
        Ok(Expr::Power {
            column,
            base: Box::new(base),
            exp,
        })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let column = self.column();
        match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Expr::Num(r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Symbol { column, name })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(self.error(format!("unexpected `{}`", TokDisplay(&t)))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

struct TokDisplay<'a>(&'a Tok);

impl fmt::Display for TokDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Tok::Num(r) => write!(f, "{r}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn parse_tree(text: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

enum Value<E> {
    Scalar(Rational),
    Elem(E),
}

struct Evaluator<'d, D: Domain> {
    domain: &'d D,
    warnings: Vec<String>,
}

impl<D: Domain> Evaluator<'_, D> {
    fn force(&self, v: Value<D::Elem>, column: usize) -> Result<D::Elem, ExprError> {
        match v {
            Value::Elem(e) => Ok(e),
            Value::Scalar(r) => self
                .domain
                .embed(&r)
                .map_err(|message| ExprError::Eval { column, message }),
        }
    }

    fn add(&self, a: Value<D::Elem>, b: Value<D::Elem>, column: usize) -> Result<Value<D::Elem>, ExprError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (a, b) => {
                let (a, b) = (self.force(a, column)?, self.force(b, column)?);
                Value::Elem(self.domain.add(&a, &b))
            }
        })
    }

    fn mul(&self, a: Value<D::Elem>, b: Value<D::Elem>) -> Value<D::Elem> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(r), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(r)) => {
                Value::Elem(self.domain.scale(&e, &r))
            }
            (Value::Elem(x), Value::Elem(y)) => Value::Elem(self.domain.mul(&x, &y)),
        }
    }

    fn eval(&mut self, e: &Expr) -> Result<Value<D::Elem>, ExprError> {
        match e {
            Expr::Num(r) => Ok(Value::Scalar(r.clone())),
            Expr::Symbol { column, name } => self
                .domain
                .symbol(name)
                .map(Value::Elem)
                .ok_or_else(|| ExprError::UnknownSymbol {
                    column: *column,
                    name: name.clone(),
                }),
            Expr::Neg(inner) => Ok(match self.eval(inner)? {
                Value::Scalar(r) => Value::Scalar(-r),
                Value::Elem(x) => Value::Elem(self.domain.neg(&x)),
            }),
            Expr::Sum(terms) => {
                let mut acc = Value::Scalar(Rational::zero());
                for (negative, t) in terms {
                    let mut v = self.eval(t)?;
                    if *negative {
                        v = match v {
                            Value::Scalar(r) => Value::Scalar(-r),
                            Value::Elem(x) => Value::Elem(self.domain.neg(&x)),
                        };
                    }
                    acc = self.add(acc, v, 1)?;
                }
                Ok(acc)
            }
            Expr::Product { column, factors } => {
                let values = factors
                    .iter()
                    .map(|f| self.eval(f))
                    .collect::<Result<Vec<_>, _>>()?;
                if !self.domain.is_associative() {
                    let loose = values
                        .iter()
                        .filter(|v| matches!(v, Value::Elem(x) if !self.domain.is_nuclear(x)))
                        .count();
                    if loose >= 3 {
                        self.warnings.push(format!(
                            "column {column}: unparenthesized product of {loose} non-associating factors \
                             is evaluated left-nested"
                        ));
                    }
                }
                let mut it = values.into_iter();
                let first = it.next().expect("products have factors");
                Ok(it.fold(first, |acc, v| self.mul(acc, v)))
            }
            Expr::Power { column, base, exp } => match self.eval(base)? {
                Value::Scalar(r) => Ok(Value::Scalar(r.pow(*exp))),
                Value::Elem(x) => {
                    if *exp == 0 {
                        return Ok(Value::Elem(self.force(Value::Scalar(Rational::one()), *column)?));
                    }
                    let mut acc = x.clone();
                    for _ in 1..*exp {
                        acc = self.domain.mul(&acc, &x);
                    }
                    Ok(Value::Elem(acc))
                }
            },
        }
    }
}

/// An evaluated expression with any bracketing warnings.
#[derive(Clone, Debug)]
pub struct Parsed<E> {
    pub value: E,
    pub warnings: Vec<String>,
}

/// Parses and evaluates `text` in `domain`.
pub fn parse_expression<D: Domain>(text: &str, domain: &D) -> Result<Parsed<D::Elem>, ExprError> {
    let tree = parse_tree(text)?;
    let mut ev = Evaluator {
        domain,
        warnings: Vec::new(),
    };
    let v = ev.eval(&tree)?;
    let value = ev.force(v, 1)?;
    Ok(Parsed {
        value,
        warnings: ev.warnings,
    })
}
