//! A small expression language in one variable `x`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" unary)?
//! atom   := number | "x" | func "(" expr ")" | "pow" "(" expr "," expr ")" | "(" expr ")"
//! func   := sqrt | exp | log | sin | cos | abs
//! ```
//!
//! `^` binds tighter than unary minus and is right associative, so `-2^2 = -4`
//! and `2^3^2 = 512`. Numbers accept a decimal point and an exponent
//! (`1.5e-3`). Whitespace is ignored.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("domain error: {op}({arg})")]
    Domain { op: &'static str, arg: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sqrt,
    Exp,
    Log,
    Sin,
    Cos,
    Abs,
}

impl Function {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sqrt" => Function::Sqrt,
            "exp" => Function::Exp,
            "log" => Function::Log,
            "sin" => Function::Sin,
            "cos" => Function::Cos,
            "abs" => Function::Abs,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::Sqrt => "sqrt",
            Function::Exp => "exp",
            Function::Log => "log",
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Abs => "abs",
        }
    }
}

/// Parsed expression tree. `pow(a, b)` is stored as `a ^ b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Number(f64),
    X,
    Neg(Box<Expression>),
    Binary(BinaryOp, Box<Expression>, Box<Expression>),
    Call(Function, Box<Expression>),
}

fn finite(op: &'static str, arg: f64, value: f64) -> Result<f64, ExprError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ExprError::Domain { op, arg })
    }
}

impl Expression {
    /// Evaluates at `x`. Any operation that would produce NaN or an infinity
    /// is reported as a domain error naming the operation and its argument.
    pub fn evaluate(&self, x: f64) -> Result<f64, ExprError> {
        match self {
            Expression::Number(v) => Ok(*v),
            Expression::X => Ok(x),
            Expression::Neg(e) => Ok(-e.evaluate(x)?),
            Expression::Binary(op, lhs, rhs) => {
                let (l, r) = (lhs.evaluate(x)?, rhs.evaluate(x)?);
                match op {
                    BinaryOp::Add => finite("add", l, l + r),
                    BinaryOp::Sub => finite("sub", l, l - r),
                    BinaryOp::Mul => finite("mul", l, l * r),
                    BinaryOp::Div if r == 0.0 => Err(ExprError::Domain { op: "div", arg: r }),
                    BinaryOp::Div => finite("div", r, l / r),
                    BinaryOp::Pow => finite("pow", l, l.powf(r)),
                }
            }
            Expression::Call(func, arg) => {
                let v = arg.evaluate(x)?;
                let op = func.name();
                match func {
                    Function::Sqrt if v < 0.0 => Err(ExprError::Domain { op, arg: v }),
                    Function::Sqrt => Ok(v.sqrt()),
                    Function::Log if v <= 0.0 => Err(ExprError::Domain { op, arg: v }),
                    Function::Log => Ok(v.ln()),
                    Function::Exp => finite(op, v, v.exp()),
                    Function::Sin => Ok(v.sin()),
                    Function::Cos => Ok(v.cos()),
                    Function::Abs => Ok(v.abs()),
                }
            }
        }
    }
}

/// Prints a fully parenthesized form that [`parse`] reads back to an
/// equivalent tree.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Number(v) if *v < 0.0 || (*v == 0.0 && v.is_sign_negative()) => {
                write!(f, "(-{:?})", -v)
            }
            Expression::Number(v) => write!(f, "{v:?}"),
            Expression::X => f.write_str("x"),
            Expression::Neg(e) => write!(f, "(-{e})"),
            Expression::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expression::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    Comma,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(v) => format!("number {v}"),
            Token::Ident(s) => format!("`{s}`"),
            Token::Op(c) => format!("`{c}`"),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Comma => "`,`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let literal = &text[start..i];
                let value: f64 = literal
                    .parse()
                    .map_err(|_| syntax(start, format!("malformed number `{literal}`")))?;
                if !value.is_finite() {
                    return Err(syntax(start, format!("number `{literal}` is out of range")));
                }
                tokens.push((Token::Number(value), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((Token::Ident(text[start..i].to_string()), start));
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                tokens.push((Token::Op(c as char), start));
                i += 1;
            }
            b'(' => {
                tokens.push((Token::LParen, start));
                i += 1;
            }
            b')' => {
                tokens.push((Token::RParen, start));
                i += 1;
            }
            b',' => {
                tokens.push((Token::Comma, start));
                i += 1;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
    }
    tokens.push((Token::End, text.len()));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ExprError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.offset(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Token::Op('+') => BinaryOp::Add,
                Token::Op('-') => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expression::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Token::Op('*') => BinaryOp::Mul,
                Token::Op('/') => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expression::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expression, ExprError> {
        if *self.peek() == Token::Op('-') {
            self.bump();
            return Ok(Expression::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression, ExprError> {
        let base = self.atom()?;
        if *self.peek() == Token::Op('^') {
            self.bump();
            let exponent = self.unary()?;
            return Ok(Expression::Binary(
                BinaryOp::Pow,
                Box::new(base),
                Box::new(exponent),
            ));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expression, ExprError> {
        let (token, offset) = self.bump();
        match token {
            Token::Number(v) => Ok(Expression::Number(v)),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name) if name == "x" => Ok(Expression::X),
            Token::Ident(name) if name == "pow" => {
                self.expect(Token::LParen)?;
                let base = self.expr()?;
                self.expect(Token::Comma)?;
                let exponent = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(Expression::Binary(
                    BinaryOp::Pow,
                    Box::new(base),
                    Box::new(exponent),
                ))
            }
            Token::Ident(name) => match Function::from_name(&name) {
                Some(func) => {
                    self.expect(Token::LParen)?;
                    let arg = self.expr()?;
                    if *self.peek() == Token::Comma {
                        return Err(syntax(
                            self.offset(),
                            format!("{} takes exactly one argument", func.name()),
                        ));
                    }
                    self.expect(Token::RParen)?;
                    Ok(Expression::Call(func, Box::new(arg)))
                }
                None => Err(ExprError::UnknownIdentifier { name, offset }),
            },
            other => Err(syntax(offset, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses `text` into an [`Expression`].
pub fn parse(text: &str) -> Result<Expression, ExprError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        Token::End => Ok(expr),
        other => Err(syntax(
            parser.offset(),
            format!("unexpected {} after expression", other.describe()),
        )),
    }
}

pub fn evaluate(expr: &Expression, x: f64) -> Result<f64, ExprError> {
    expr.evaluate(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(text: &str, x: f64) -> f64 {
        parse(text).unwrap().evaluate(x).unwrap()
    }

    #[test]
    fn test_functions() {
        assert_eq!(eval("sqrt(x)", 0.49), 0.7);
        assert_eq!(eval("x^2 - 1", 1.0), 0.0);
        assert_eq!(eval("x^2 - 1", 3.0), 8.0);
        assert!((eval("exp(x)", 1.0) - std::f64::consts::E).abs() <= 1e-15);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(eval("2+3*4", 0.0), 14.0);
        assert_eq!(eval("2^3^2", 0.0), 512.0);
        assert_eq!(eval("-2^2", 0.0), -4.0);
        assert_eq!(eval("2^-1", 0.0), 0.5);
        assert_eq!(eval("(2+3)*4", 0.0), 20.0);
        assert_eq!(eval("8/4/2", 0.0), 1.0);
        assert_eq!(eval("10 - 4 - 3", 0.0), 3.0);
        assert_eq!(eval("--x", 2.0), 2.0);
        assert_eq!(eval("pow(x, 3)", 2.0), 8.0);
        assert_eq!(eval(" abs( -x )\t* 1.5e1 ", 2.0), 30.0);
        assert_eq!(eval(".5 + 2.", 0.0), 2.5);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(
            parse("2 + * 3").unwrap_err(),
            ExprError::Syntax {
                offset: 4,
                message: "unexpected `*`".into()
            }
        );
        assert!(matches!(parse("(x + 1"), Err(ExprError::Syntax { offset: 6, .. })));
        assert!(matches!(parse("x 2"), Err(ExprError::Syntax { offset: 2, .. })));
        assert!(matches!(parse(""), Err(ExprError::Syntax { offset: 0, .. })));
        assert!(matches!(parse("x # 1"), Err(ExprError::Syntax { offset: 2, .. })));
        assert!(matches!(parse("1.2.3"), Err(ExprError::Syntax { offset: 0, .. })));
        assert!(matches!(parse("1e999"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("sqrt(x, 2)"), Err(ExprError::Syntax { offset: 6, .. })));
        assert!(matches!(parse("pow(x)"), Err(ExprError::Syntax { offset: 5, .. })));
    }

    #[test]
    fn unknown_identifiers() {
        assert_eq!(
            parse("tan(x)").unwrap_err(),
            ExprError::UnknownIdentifier {
                name: "tan".into(),
                offset: 0
            }
        );
        assert!(matches!(
            parse("2 * y"),
            Err(ExprError::UnknownIdentifier { offset: 4, .. })
        ));
    }

    #[test]
    fn domain_errors() {
        let e = parse("sqrt(x)").unwrap();
        assert_eq!(e.evaluate(-1.0), Err(ExprError::Domain { op: "sqrt", arg: -1.0 }));
        let e = parse("log(x)").unwrap();
        assert_eq!(e.evaluate(0.0), Err(ExprError::Domain { op: "log", arg: 0.0 }));
        let e = parse("1 / x").unwrap();
        assert!(matches!(e.evaluate(0.0), Err(ExprError::Domain { op: "div", .. })));
        let e = parse("x ^ 0.5").unwrap();
        assert!(matches!(e.evaluate(-2.0), Err(ExprError::Domain { op: "pow", .. })));
        let e = parse("exp(x)").unwrap();
        assert!(matches!(e.evaluate(1000.0), Err(ExprError::Domain { op: "exp", .. })));
    }

    #[test]
    fn display_reparses() {
        for text in ["sqrt(x)", "x^2 - 1", "-2^-x * (3 - x) / abs(x)", "pow(x, 0.1)"] {
            let e = parse(text).unwrap();
            let again = parse(&e.to_string()).unwrap();
            assert_eq!(e, again, "{text} -> {e}");
        }
        let negative = Expression::Binary(
            BinaryOp::Mul,
            Box::new(Expression::Number(-1.25)),
            Box::new(Expression::X),
        );
        assert_eq!(parse(&negative.to_string()).unwrap().evaluate(2.0), Ok(-2.5));
    }
}
