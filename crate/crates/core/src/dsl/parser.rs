use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::GroupExpr;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Ident(String),
    Int(u64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Equals,
    End,
}

fn parse_error(position: usize, expected: &[&str]) -> Error {
    Error::Parse {
        position,
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b',' => out.push((start, Tok::Comma)),
            b'=' => out.push((start, Tok::Equals)),
            b'\'' | b'"' => {
                let close = text[i + 1..]
                    .find(c as char)
                    .ok_or_else(|| parse_error(start, &["closing quote"]))?;
                out.push((start, Tok::Str(text[i + 1..i + 1 + close].to_string())));
                i += close + 2;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| parse_error(start, &["integer below 2^64"]))?;
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_uppercase() {
                    i += 1;
                }
                out.push((start, Tok::Name(text[start..i].to_string())));
                continue;
            }
            b'a'..=b'z' => {
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => return Err(parse_error(start, &["group expression"])),
        }
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

enum Arg {
    Int(u64),
    Str(String),
    Expr(GroupExpr),
    Named(String, u64),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

const NAMES: &[&str] = &["C", "EA", "D", "Q", "SD", "M", "SEMI", "FAM", "PERM", "FILE"];

/// Parses a group expression:
///
/// ```text
/// expr := atom ('x' atom)*
/// atom := NAME '(' args ')' | '(' expr ')'
/// ```
///
/// Errors carry the byte offset and the set of tokens that would have been
/// accepted there.
pub fn parse(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        _ => Err(parse_error(p.pos(), &["'x'", "end of input"])),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, label: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(parse_error(self.pos(), &[label]))
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut lhs = self.atom()?;
        while matches!(self.peek(), Tok::Ident(s) if s == "x") {
            self.bump();
            let rhs = self.atom()?;
            lhs = GroupExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Name(name) if NAMES.contains(&name.as_str()) => {
                self.expect(Tok::LParen, "'('")?;
                let args = self.args()?;
                build(&name, pos, args)
            }
            _ => {
                let mut expected: Vec<String> = NAMES.iter().map(|n| n.to_string()).collect();
                expected.push("'('".into());
                Err(Error::Parse {
                    position: pos,
                    expected,
                })
            }
        }
    }

    /// Arguments up to and including the closing parenthesis.
    fn args(&mut self) -> Result<Vec<(usize, Arg)>> {
        let mut args = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            let pos = self.pos();
            let arg = match self.peek().clone() {
                Tok::Int(v) => {
                    self.bump();
                    Arg::Int(v)
                }
                Tok::Str(s) => {
                    self.bump();
                    Arg::Str(s)
                }
                Tok::Ident(name) if name != "x" => {
                    self.bump();
                    self.expect(Tok::Equals, "'='")?;
                    match self.bump() {
                        (_, Tok::Int(v)) => Arg::Named(name, v),
                        (at, _) => return Err(parse_error(at, &["integer"])),
                    }
                }
                Tok::Name(_) | Tok::LParen => Arg::Expr(self.expr()?),
                _ => {
                    return Err(parse_error(
                        pos,
                        &["integer", "string", "group expression", "name=value"],
                    ))
                }
            };
            args.push((pos, arg));
            match self.bump() {
                (_, Tok::Comma) => continue,
                (_, Tok::RParen) => return Ok(args),
                (at, _) => return Err(parse_error(at, &["','", "')'"])),
            }
        }
    }
}

fn build(name: &str, pos: usize, args: Vec<(usize, Arg)>) -> Result<GroupExpr> {
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            let at = args.get(n).map_or(pos, |a| a.0);
            Err(Error::Parse {
                position: at,
                expected: vec![format!("{name} with {n} argument(s), got {}", args.len())],
            })
        }
    };
    let int = |i: usize| -> Result<u64> {
        match &args[i] {
            (_, Arg::Int(v)) => Ok(*v),
            (at, _) => Err(parse_error(*at, &["integer"])),
        }
    };
    let small = |i: usize| -> Result<u32> {
        let v = int(i)?;
        u32::try_from(v).map_err(|_| parse_error(args[i].0, &["integer below 2^32"]))
    };
    let string = |i: usize| -> Result<String> {
        match &args[i] {
            (_, Arg::Str(s)) => Ok(s.clone()),
            (at, _) => Err(parse_error(*at, &["quoted string"])),
        }
    };
    let sub = |i: usize| -> Result<Box<GroupExpr>> {
        match &args[i] {
            (_, Arg::Expr(e)) => Ok(Box::new(e.clone())),
            (at, _) => Err(parse_error(*at, &["group expression"])),
        }
    };
    Ok(match name {
        "C" => {
            arity(1)?;
            GroupExpr::Cyclic(int(0)?)
        }
        "EA" => {
            arity(2)?;
            GroupExpr::ElemAb(int(0)?, small(1)?)
        }
        "D" => {
            arity(1)?;
            GroupExpr::Dihedral(int(0)?)
        }
        "Q" => {
            arity(1)?;
            GroupExpr::Quaternion(int(0)?)
        }
        "SD" => {
            arity(1)?;
            GroupExpr::Semidihedral(int(0)?)
        }
        "M" => {
            arity(2)?;
            GroupExpr::Modular(small(0)?, int(1)?)
        }
        "SEMI" => {
            arity(3)?;
            GroupExpr::Semidirect(sub(0)?, sub(1)?, string(2)?)
        }
        "FAM" => {
            if args.is_empty() {
                return Err(parse_error(pos, &["family number"]));
            }
            let family = int(0)?;
            let mut params = BTreeMap::new();
            for (at, arg) in &args[1..] {
                match arg {
                    Arg::Named(k, v) => {
                        if params.insert(k.clone(), *v).is_some() {
                            return Err(parse_error(*at, &["distinct parameter names"]));
                        }
                    }
                    _ => return Err(parse_error(*at, &["name=value"])),
                }
            }
            GroupExpr::Family(family, params)
        }
        "PERM" => {
            if args.is_empty() {
                return Err(parse_error(pos, &["degree"]));
            }
            let degree = usize::try_from(int(0)?).map_err(|_| parse_error(args[0].0, &["smaller degree"]))?;
            let cycles = (1..args.len()).map(string).collect::<Result<Vec<_>>>()?;
            GroupExpr::Perm(degree, cycles)
        }
        "FILE" => {
            arity(1)?;
            GroupExpr::FromFile(string(0)?)
        }
        _ => unreachable!("name checked by the caller"),
    })
}
