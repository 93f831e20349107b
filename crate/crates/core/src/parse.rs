//! Text format for monomial ideals.
//!
//! ```text
//! # optional header; without it the variables are inferred and sorted
//! vars: x, y, z;
//! x^2*y, y^2*z
//! z^2
//! ```
//!
//! Monomials are separated by commas or newlines, factors by `*`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(u64),
    Star,
    Caret,
    Comma,
    Semi,
    Colon,
    Newline,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (lineno, text) in src.lines().enumerate() {
        let line = lineno + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let simple = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                ',' => Some(Tok::Comma),
                ';' => Some(Tok::Semi),
                ':' => Some(Tok::Colon),
                _ => None,
            };
            if let Some(tok) = simple {
                out.push(Spanned { tok, line, column });
                i += 1;
                continue;
            }
            let start = i;
            if c.is_ascii_digit() {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits
                    .parse::<u64>()
                    .map_err(|_| syntax(line, column, "number too large"))?;
                out.push(Spanned {
                    tok: Tok::Number(value),
                    line,
                    column,
                });
            } else if c.is_alphabetic() || c == '_' {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    column,
                });
            } else {
                return Err(syntax(line, column, format!("unexpected character `{c}`")));
            }
        }
        out.push(Spanned {
            tok: Tok::Newline,
            line,
            column: chars.len() + 1,
        });
    }
    Ok(out)
}

struct Factor {
    name: String,
    exp: u32,
    line: usize,
    column: usize,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn eof_error(&self, message: &str) -> Error {
        let (line, column) = self
            .toks
            .last()
            .map(|s| (s.line, s.column))
            .unwrap_or((1, 1));
        syntax(line, column, message)
    }

    fn skip_newlines(&mut self) {
        while matches!(
            self.peek(),
            Some(Spanned {
                tok: Tok::Newline,
                ..
            })
        ) {
            self.pos += 1;
        }
    }

    fn next(&mut self, what: &str) -> Result<Spanned> {
        let s = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.eof_error(&format!("expected {what}")))?;
        self.pos += 1;
        Ok(s)
    }

    fn header(&mut self) -> Result<Option<Vec<String>>> {
        self.skip_newlines();
        let is_header = matches!(
            (self.toks.get(self.pos), self.toks.get(self.pos + 1)),
            (Some(Spanned { tok: Tok::Ident(v), .. }), Some(Spanned { tok: Tok::Colon, .. })) if v == "vars"
        );
        if !is_header {
            return Ok(None);
        }
        self.pos += 2;
        let mut names = Vec::new();
        loop {
            self.skip_newlines();
            let s = self.next("variable name or `;`")?;
            match s.tok {
                Tok::Semi if names.is_empty() => return Ok(Some(names)),
                Tok::Ident(name) => {
                    if names.contains(&name) {
                        return Err(Error::DuplicateVariable(name));
                    }
                    names.push(name);
                }
                _ => return Err(syntax(s.line, s.column, "expected variable name")),
            }
            self.skip_newlines();
            let s = self.next("`,` or `;`")?;
            match s.tok {
                Tok::Comma => {}
                Tok::Semi => return Ok(Some(names)),
                _ => return Err(syntax(s.line, s.column, "expected `,` or `;`")),
            }
        }
    }

    fn factor(&mut self) -> Result<Option<Factor>> {
        self.skip_newlines();
        let s = self.next("factor")?;
        match s.tok {
            Tok::Number(1) => Ok(None),
            Tok::Ident(name) => {
                let mut exp = 1;
                if matches!(
                    self.peek(),
                    Some(Spanned {
                        tok: Tok::Caret,
                        ..
                    })
                ) {
                    self.pos += 1;
                    let e = self.next("exponent")?;
                    exp = match e.tok {
                        Tok::Number(k) if k >= 1 => u32::try_from(k)
                            .map_err(|_| syntax(e.line, e.column, "exponent too large"))?,
                        _ => return Err(syntax(e.line, e.column, "expected a positive exponent")),
                    };
                }
                Ok(Some(Factor {
                    name,
                    exp,
                    line: s.line,
                    column: s.column,
                }))
            }
            _ => Err(syntax(s.line, s.column, "expected a variable")),
        }
    }

    /// One monomial; returns its factors (empty for the literal `1`).
    fn monomial(&mut self) -> Result<Vec<Factor>> {
        let mut factors = Vec::new();
        factors.extend(self.factor()?);
        while matches!(self.peek(), Some(Spanned { tok: Tok::Star, .. })) {
            self.pos += 1;
            factors.extend(self.factor()?);
        }
        Ok(factors)
    }

    fn body(&mut self) -> Result<Vec<Vec<Factor>>> {
        let mut monos = Vec::new();
        loop {
            // separators: any run of commas and newlines
            while matches!(
                self.peek(),
                Some(Spanned {
                    tok: Tok::Comma | Tok::Newline,
                    ..
                })
            ) {
                self.pos += 1;
            }
            let Some(s) = self.peek() else {
                return Ok(monos);
            };
            if !matches!(s.tok, Tok::Ident(_) | Tok::Number(_)) {
                return Err(syntax(s.line, s.column, "expected a monomial"));
            }
            monos.push(self.monomial()?);
            match self.peek() {
                None => return Ok(monos),
                Some(Spanned {
                    tok: Tok::Comma | Tok::Newline,
                    ..
                }) => {}
                Some(s) => {
                    return Err(syntax(s.line, s.column, "expected `,`, `*` or end of line"))
                }
            }
        }
    }
}

/// Parses an ideal in the text format and minimalizes its generators.
pub fn parse_ideal(src: &str) -> Result<MonomialIdeal> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let declared = p.header()?;
    let monos = p.body()?;

    let variables = match declared {
        Some(v) => v,
        None => {
            let mut v: Vec<String> = monos.iter().flatten().map(|f| f.name.clone()).collect();
            v.sort();
            v.dedup();
            v
        }
    };

    let mut gens = Vec::with_capacity(monos.len());
    for factors in monos {
        let mut exps = vec![0u32; variables.len()];
        for f in factors {
            let j = variables.iter().position(|v| *v == f.name).ok_or_else(|| {
                Error::UnknownVariable {
                    name: f.name.clone(),
                    line: f.line,
                    column: f.column,
                }
            })?;
            exps[j] = exps[j]
                .checked_add(f.exp)
                .ok_or_else(|| syntax(f.line, f.column, "exponent too large"))?;
        }
        let m = Monomial::new(exps);
        if m.is_one() {
            return Err(Error::UnitGenerator);
        }
        gens.push(m);
    }
    MonomialIdeal::new(variables, gens)
}
