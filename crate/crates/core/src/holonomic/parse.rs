//! Rational expressions in `n` and `z`, and the recurrence text format.
//!
//! ```text
//! # the e-world mirror recurrence
//! coeff2: n+z
//! coeff1: -(n+z)
//! coeff0: -1
//! init: n0=1; 0, 1
//! ```
//!
//! Expressions support `+ - * / ^`, parentheses, integer or decimal
//! literals and implicit multiplication (`2n`, `3(z+1)`). `m` is accepted as
//! an alias for `z`.

use super::poly::RationalFn;
use super::recurrence::PRecurrence;
use crate::{BigRat, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variables {
    /// `n` and `z`
    NZ,
    /// `z` only
    Z,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRat),
    Var(char),
    Op(char),
    LParen,
    RParen,
    End,
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    vars: Variables,
    src: &'a str,
}

/// Parses an expression. `line` and `col0` (1-based) locate `src` in its file
/// for error messages.
pub fn parse_expr(src: &str, vars: Variables, line: usize, col0: usize) -> Result<RationalFn> {
    let toks = tokenize(src, line, col0)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        vars,
        src,
    };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(p.err(format!("unexpected {t:?} after expression"))),
    }
}

fn tokenize(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            let v: BigRat = lit.parse().map_err(|_| Error::Parse {
                line,
                column: col,
                message: format!("bad number literal {lit:?}"),
            })?;
            out.push((Tok::Num(v), col));
            continue;
        }
        let tok = match c {
            'n' | 'z' => Tok::Var(c),
            'm' => Tok::Var('z'),
            '+' | '-' | '*' | '/' | '^' => Tok::Op(c),
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, col0 + chars.len()));
    Ok(out)
}

impl Parser<'_> {
    fn peek(&self) -> Tok {
        self.toks[self.pos].0.clone()
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col(),
            message,
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn lift(&self, r: Result<RationalFn>, col: usize) -> Result<RationalFn> {
        r.map_err(|e| Error::Parse {
            line: self.line,
            column: col,
            message: e.to_string(),
        })
    }

    fn expr(&mut self) -> Result<RationalFn> {
        let mut acc = self.term()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.lift(acc.try_add(&t), col)?;
                }
                Tok::Op('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.lift(acc.try_sub(&t), col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFn> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    let t = self.unary()?;
                    acc = self.lift(acc.try_mul(&t), col)?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let t = self.unary()?;
                    if t.is_zero() {
                        return Err(Error::Parse {
                            line: self.line,
                            column: col,
                            message: "division by zero".into(),
                        });
                    }
                    acc = self.lift(acc.try_div(&t), col)?;
                }
                // implicit multiplication
                Tok::Num(_) | Tok::Var(_) | Tok::LParen => {
                    let t = self.power()?;
                    acc = self.lift(acc.try_mul(&t), col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFn> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFn> {
        let base = self.atom()?;
        if self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        match self.bump() {
            Tok::Num(e) if e.is_integer() && !e.is_negative() => {
                let e = e.to_i64().filter(|&e| e <= 64).ok_or_else(|| Error::Parse {
                    line: self.line,
                    column: col,
                    message: "exponent too large".into(),
                })?;
                self.lift(base.pow(e as u32), col)
            }
            _ => Err(Error::Parse {
                line: self.line,
                column: col,
                message: "exponent must be a nonnegative integer literal".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<RationalFn> {
        let col = self.col();
        match self.bump() {
            Tok::Num(v) => Ok(RationalFn::constant(v)),
            Tok::Var('n') if self.vars == Variables::Z => Err(Error::Parse {
                line: self.line,
                column: col,
                message: "variable n is not allowed here (expressions in z only)".into(),
            }),
            Tok::Var('n') => Ok(RationalFn::n()),
            Tok::Var(_) => Ok(RationalFn::z()),
            Tok::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    Tok::RParen => Ok(e),
                    _ => Err(Error::Parse {
                        line: self.line,
                        column: col,
                        message: "unclosed parenthesis".into(),
                    }),
                }
            }
            Tok::End => Err(Error::Parse {
                line: self.line,
                column: col,
                message: format!("unexpected end of expression in {:?}", self.src),
            }),
            t => Err(Error::Parse {
                line: self.line,
                column: col,
                message: format!("unexpected {t:?}"),
            }),
        }
    }
}

/// A `key: value` line with 1-based line number and the value's column.
pub(crate) struct KeyLine<'a> {
    pub line: usize,
    pub key: &'a str,
    pub key_col: usize,
    pub value: &'a str,
    pub value_col: usize,
}

/// Splits a file into `key: value` lines, skipping blanks and `#` comments.
pub(crate) fn key_lines(text: &str) -> Result<Vec<KeyLine<'_>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let colon = content.find(':').ok_or(Error::Parse {
            line,
            column: content.len() - content.trim_start().len() + 1,
            message: "expected `key: value`".into(),
        })?;
        let key_part = &content[..colon];
        let key = key_part.trim();
        let key_col = key_part.len() - key_part.trim_start().len() + 1;
        let rest = &content[colon + 1..];
        let lead = rest.len() - rest.trim_start().len();
        out.push(KeyLine {
            line,
            key,
            key_col,
            value: rest.trim(),
            value_col: colon + 2 + lead,
        });
    }
    Ok(out)
}

/// Parses `coeffK:` lines into `(K, RationalFn)` pairs and checks they cover
/// `0..=order` exactly once. Unknown keys are handed to `other`.
pub(crate) fn parse_coeff_lines<'a>(
    lines: &[KeyLine<'a>],
    vars: Variables,
    mut other: impl FnMut(&KeyLine<'a>) -> Result<()>,
) -> Result<Vec<RationalFn>> {
    let mut coeffs: Vec<Option<RationalFn>> = Vec::new();
    let mut last_line = 1;
    for kl in lines {
        last_line = kl.line;
        if let Some(idx) = kl.key.strip_prefix("coeff") {
            let k: usize = idx.parse().map_err(|_| Error::Parse {
                line: kl.line,
                column: kl.key_col + 5,
                message: format!("bad coefficient index {idx:?}"),
            })?;
            if k > 16 {
                return Err(Error::Parse {
                    line: kl.line,
                    column: kl.key_col + 5,
                    message: "order above 16 is not supported".into(),
                });
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, None);
            }
            if coeffs[k].is_some() {
                return Err(Error::Parse {
                    line: kl.line,
                    column: kl.key_col,
                    message: format!("duplicate coeff{k}"),
                });
            }
            coeffs[k] = Some(parse_expr(kl.value, vars, kl.line, kl.value_col)?);
        } else {
            other(kl)?;
        }
    }
    if coeffs.len() < 2 {
        return Err(Error::Parse {
            line: last_line,
            column: 1,
            message: "need at least coeff0 and coeff1".into(),
        });
    }
    coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            c.ok_or(Error::Parse {
                line: last_line,
                column: 1,
                message: format!("missing coeff{k}"),
            })
        })
        .collect()
}

/// Parses the recurrence text format (see the module docs).
pub fn parse_recurrence(text: &str) -> Result<PRecurrence> {
    let lines = key_lines(text)?;
    let mut init: Option<(usize, i64, Vec<BigRat>)> = None;
    let coeffs = parse_coeff_lines(&lines, Variables::NZ, |kl| {
        if kl.key != "init" {
            return Err(Error::Parse {
                line: kl.line,
                column: kl.key_col,
                message: format!("unknown key {:?} (expected coeffK or init)", kl.key),
            });
        }
        init = Some(parse_init(kl)?);
        Ok(())
    })?;
    let (line, n0, values) = init.ok_or(Error::Parse {
        line: lines.last().map_or(1, |l| l.line),
        column: 1,
        message: "missing `init:` line".into(),
    })?;
    let order = coeffs.len() - 1;
    if values.len() != order {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("order {order} needs {order} initial values, got {}", values.len()),
        });
    }
    PRecurrence::new(coeffs, n0, values).map_err(|e| Error::Parse {
        line,
        column: 1,
        message: e.to_string(),
    })
}

/// `init: n0=1; 0, 1`
fn parse_init(kl: &KeyLine<'_>) -> Result<(usize, i64, Vec<BigRat>)> {
    let perr = |column: usize, message: String| Error::Parse {
        line: kl.line,
        column,
        message,
    };
    let (head, tail) = kl
        .value
        .split_once(';')
        .ok_or_else(|| perr(kl.value_col, "expected `n0=<int>; v1, v2, ...`".into()))?;
    let n0 = head
        .trim()
        .strip_prefix("n0")
        .and_then(|s| s.trim_start().strip_prefix('='))
        .and_then(|s| s.trim().parse::<i64>().ok())
        .ok_or_else(|| perr(kl.value_col, format!("expected `n0=<int>`, got {:?}", head.trim())))?;
    let mut values = Vec::new();
    let mut offset = head.len() + 1;
    for piece in tail.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let col = kl.value_col + offset + lead;
        let v: BigRat = piece
            .trim()
            .parse()
            .map_err(|_| perr(col, format!("bad initial value {:?}", piece.trim())))?;
        values.push(v);
        offset += piece.len() + 1;
    }
    Ok((kl.line, n0, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFn {
        parse_expr(s, Variables::NZ, 1, 1).unwrap()
    }

    #[test]
    fn expressions() {
        assert_eq!(rf("n+z").to_string(), "n + z");
        assert_eq!(rf("-(n+z)").to_string(), "-n - z");
        assert_eq!(rf("2n + 3(z-1)").to_string(), "2*n + 3*z - 3");
        assert_eq!(rf("(n+1)^2").to_string(), "n^2 + 2*n + 1");
        assert_eq!(rf("1/(n+m)").to_string(), "1/(n + z)");
        assert_eq!(rf("0.5*z"), rf("z/2"));
        assert_eq!(rf("(n+z)/(n+z)").to_string(), "1");
        assert_eq!(rf("-1").to_string(), "-1");
    }

    #[test]
    fn errors_carry_location() {
        match parse_expr("n + * z", Variables::NZ, 4, 9) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 13)),
            other => panic!("{other:?}"),
        }
        match parse_expr("z + n", Variables::Z, 2, 1) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_expr("(n+1", Variables::NZ, 1, 1).is_err());
        assert!(parse_expr("n/0", Variables::NZ, 1, 1).is_err());
        assert!(parse_expr("z^9*z", Variables::NZ, 1, 1).is_err());
        assert!(parse_expr("n $ z", Variables::NZ, 1, 1).is_err());
    }

    #[test]
    fn recurrence_file() {
        let text = "# e-world\ncoeff2: n+z\ncoeff1: -(n+z)\ncoeff0: -1\ninit: n0=1; 0, 1\n";
        let rec = parse_recurrence(text).unwrap();
        assert_eq!(rec.order(), 2);
        assert_eq!(rec.initial_index(), 1);
        assert_eq!(rec.initial_values(), &[BigRat::zero(), BigRat::one()]);
    }

    #[test]
    fn recurrence_file_errors() {
        let missing = "coeff2: n+z\ncoeff0: -1\ninit: n0=1; 0, 1\n";
        assert!(matches!(parse_recurrence(missing), Err(Error::Parse { .. })));
        let bad = "coeff1: 1\ncoeff0: n +\ninit: n0=0; 1\n";
        match parse_recurrence(bad) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 12)),
            other => panic!("{other:?}"),
        }
        let wrong_count = "coeff1: 1\ncoeff0: -1\ninit: n0=0; 1, 2\n";
        assert!(matches!(
            parse_recurrence(wrong_count),
            Err(Error::Parse { line: 3, .. })
        ));
        let bad_init = "coeff1: 1\ncoeff0: -1\ninit: n0=0; x\n";
        match parse_recurrence(bad_init) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 13)),
            other => panic!("{other:?}"),
        }
        assert!(parse_recurrence("coeff1: 1\ncoeff0: -1\nfoo: 3\ninit: n0=0; 1\n").is_err());
    }
}
