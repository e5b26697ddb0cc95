//! Integer expressions in one parameter `n`, used by parametric records.
//!
//! Grammar: `+ - * /` with parentheses, integer literals and the variable `n`.
//! Division must be exact at the evaluated point.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Lit(i64),
    Var,
    Neg(Box<Node>),
    Bin(Op, Box<Node>, Box<Node>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// A parsed expression that remembers its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    src: String,
    node: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Self> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks: &toks, pos: 0 };
        let node = p.expr()?;
        if p.pos != toks.len() {
            return Err(expr_err(src, "trailing input"));
        }
        Ok(Expr {
            src: src.trim().to_string(),
            node,
        })
    }

    pub fn constant(v: i64) -> Self {
        Expr {
            src: v.to_string(),
            node: Node::Lit(v),
        }
    }

    pub fn source(&self) -> &str {
        &self.src
    }

    pub fn uses_param(&self) -> bool {
        fn walk(n: &Node) -> bool {
            match n {
                Node::Lit(_) => false,
                Node::Var => true,
                Node::Neg(a) => walk(a),
                Node::Bin(_, a, b) => walk(a) || walk(b),
            }
        }
        walk(&self.node)
    }

    /// Evaluate with `n` bound to `param`; fails on inexact division or when
    /// `n` is used without a parameter.
    pub fn eval(&self, param: Option<i64>) -> Result<i64> {
        eval(&self.node, param).map_err(|m| expr_err(&self.src, m))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}

fn expr_err(src: &str, msg: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: format!("expression `{src}`: {msg}"),
    }
}

fn eval(n: &Node, param: Option<i64>) -> std::result::Result<i64, &'static str> {
    Ok(match n {
        Node::Lit(v) => *v,
        Node::Var => param.ok_or("uses n but no parameter was given")?,
        Node::Neg(a) => -eval(a, param)?,
        Node::Bin(op, a, b) => {
            let (x, y) = (eval(a, param)?, eval(b, param)?);
            match op {
                Op::Add => x.checked_add(y).ok_or("overflow")?,
                Op::Sub => x.checked_sub(y).ok_or("overflow")?,
                Op::Mul => x.checked_mul(y).ok_or("overflow")?,
                Op::Div => {
                    if y == 0 {
                        return Err("division by zero");
                    }
                    if x % y != 0 {
                        return Err("inexact division");
                    }
                    x / y
                }
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var,
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut v: i64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(dv) = d.to_digit(10) else { break };
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(dv as i64))
                    .ok_or_else(|| expr_err(src, "literal too large"))?;
                chars.next();
            }
            out.push(Tok::Num(v));
        } else if c == 'n' {
            out.push(Tok::Var);
            chars.next();
        } else if "+-*/()".contains(c) {
            out.push(Tok::Sym(c));
            chars.next();
        } else {
            return Err(expr_err(src, &format!("unexpected character `{c}`")));
        }
    }
    if out.is_empty() {
        return Err(expr_err(src, "empty expression"));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl Parser<'_> {
    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Sym(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.term()?;
            let op = if c == '+' { Op::Add } else { Op::Sub };
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.unary()?;
            let op = if c == '*' { Op::Mul } else { Op::Div };
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek_sym() == Some('-') {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Node> {
        let bad = || Error::Parse {
            line: 0,
            msg: "malformed expression".into(),
        };
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Node::Lit(v))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(Node::Var)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_sym() != Some(')') {
                    return Err(bad());
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(bad()),
        }
    }
}

/// Substitute `{expr}` placeholders in a template string.
pub fn instantiate(template: &str, param: Option<i64>) -> Result<String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| expr_err(template, "unclosed `{`"))?
            + open;
        let e = Expr::parse(&rest[open + 1..close])?;
        out.push_str(&e.eval(param)?.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}
