//! Group-file reader/writer and the functorial expression parser.
//!
//! Group files are line oriented:
//!
//! ```text
//! # symmetric group on three points
//! degree: 3
//! gen: (1 2 3)
//! gen: (1 2)
//! ```

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::functorial::{Builtin, FunctorialExpr};
use crate::group::Group;
use crate::perm::{parse_cycles, Permutation};
use crate::radicals::is_prime;

pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            let col = raw.len() - raw.trim_start().len() + 1;
            return Err(Error::parse(
                line_no,
                col,
                "expected `degree: <n>` or `gen: <cycles>`",
            ));
        };
        let value_col = key.len() + 2;
        match key.trim() {
            "degree" => {
                if degree.is_some() {
                    return Err(Error::parse(line_no, 1, "degree given twice"));
                }
                let n: usize = value.trim().parse().map_err(|_| {
                    Error::parse(line_no, value_col, "degree must be a positive integer")
                })?;
                if n == 0 {
                    return Err(Error::parse(
                        line_no,
                        value_col,
                        "degree must be a positive integer",
                    ));
                }
                degree = Some(n);
            }
            "gen" => {
                let Some(n) = degree else {
                    return Err(Error::parse(line_no, 1, "`gen` before `degree`"));
                };
                let cycles = parse_cycles(value)
                    .map_err(|(col, msg)| Error::parse(line_no, value_col + col - 1, msg))?;
                if let Some(p) = cycles.iter().flatten().find(|&&p| p > n) {
                    let col = value
                        .find(&p.to_string())
                        .map_or(value_col, |c| value_col + c);
                    return Err(Error::parse(
                        line_no,
                        col,
                        format!("point {p} exceeds degree {n}"),
                    ));
                }
                gens.push(Permutation::from_cycles(n, &cycles)?);
            }
            other => {
                return Err(Error::parse(line_no, 1, format!("unknown key {other:?}")));
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(1, 1, "missing `degree: <n>` line"))?;
    Group::new(degree, gens)
}

pub fn write_group_file(g: &Group) -> String {
    let mut out = format!("degree: {}\n", g.degree());
    for p in g.generators() {
        out.push_str(&format!("gen: {p}\n"));
    }
    out
}

/// Comma-separated primes, e.g. `2,3`. Duplicates collapse.
pub fn parse_prime_list(text: &str) -> std::result::Result<BTreeSet<u64>, String> {
    if text.trim().is_empty() {
        return Err("empty prime set".into());
    }
    let mut out = BTreeSet::new();
    for part in text.split(',') {
        let part = part.trim();
        let p: u64 = part
            .parse()
            .map_err(|_| format!("expected a prime, found {part:?}"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        out.insert(p);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Int(u64),
    Star,
    Amp,
    Bar,
    Caret,
    Open,
    Close,
    /// `{...}` body, unparsed.
    Braces(String),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        let col = byte + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '*' | '&' | '|' | '^' | '(' | ')' => {
                out.push((
                    match c {
                        '*' => Tok::Star,
                        '&' => Tok::Amp,
                        '|' => Tok::Bar,
                        '^' => Tok::Caret,
                        '(' => Tok::Open,
                        _ => Tok::Close,
                    },
                    col,
                ));
                i += 1;
            }
            '{' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].1 != '}' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(Error::parse(1, col, "unterminated '{'"));
                }
                let body: String = chars[start..j].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Braces(body), col));
                i = j + 1;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                let n = digits
                    .parse()
                    .map_err(|_| Error::parse(1, col, "integer too large"))?;
                out.push((Tok::Int(n), col));
                i = j;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Word(word), col));
                i = j;
            }
            other => {
                return Err(Error::parse(
                    1,
                    col,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    out.push((Tok::End, text.len() + 1));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_circ(&self) -> bool {
        matches!(self.peek(), Tok::Word(w) if w == "o")
    }
}

/// Parses the expression language:
///
/// ```text
/// expr   := meet ('|' meet)*
/// meet   := term ('&' term)*
/// term   := factor (('*' | 'o') factor)*
/// factor := atom ('^' (INT | 'inf'))?
/// atom   := 'F' | 'Fstar' | 'Ftilde' | 'Phi' | 'Phi_pi{' primes '}'
///         | 'Soc' | 'Triv' | 'Id' | '(' expr ')'
/// ```
pub fn parse_functorial(text: &str) -> Result<FunctorialExpr> {
    let mut lx = Lexer {
        toks: lex(text)?,
        pos: 0,
    };
    let e = parse_join(&mut lx)?;
    match lx.peek() {
        Tok::End => Ok(e),
        t => Err(Error::parse(
            1,
            lx.col(),
            format!("unexpected {t:?} after expression"),
        )),
    }
}

fn parse_join(lx: &mut Lexer) -> Result<FunctorialExpr> {
    let mut xs = vec![parse_meet(lx)?];
    while *lx.peek() == Tok::Bar {
        lx.next();
        xs.push(parse_meet(lx)?);
    }
    Ok(if xs.len() == 1 {
        xs.pop().unwrap()
    } else {
        FunctorialExpr::Join(xs)
    })
}

fn parse_meet(lx: &mut Lexer) -> Result<FunctorialExpr> {
    let mut xs = vec![parse_term(lx)?];
    while *lx.peek() == Tok::Amp {
        lx.next();
        xs.push(parse_term(lx)?);
    }
    Ok(if xs.len() == 1 {
        xs.pop().unwrap()
    } else {
        FunctorialExpr::Meet(xs)
    })
}

fn parse_term(lx: &mut Lexer) -> Result<FunctorialExpr> {
    let mut acc = parse_factor(lx)?;
    loop {
        if *lx.peek() == Tok::Star {
            lx.next();
            acc = FunctorialExpr::star(acc, parse_factor(lx)?);
        } else if lx.is_circ() {
            lx.next();
            acc = FunctorialExpr::circ(acc, parse_factor(lx)?);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_factor(lx: &mut Lexer) -> Result<FunctorialExpr> {
    let atom = parse_atom(lx)?;
    if *lx.peek() != Tok::Caret {
        return Ok(atom);
    }
    lx.next();
    let (tok, col) = lx.next();
    match tok {
        Tok::Int(0) => Err(Error::parse(1, col, "exponent must be at least 1")),
        Tok::Int(k) => {
            let k = u32::try_from(k).map_err(|_| Error::parse(1, col, "exponent too large"))?;
            Ok(FunctorialExpr::power(atom, k))
        }
        Tok::Word(w) if w == "inf" => Ok(FunctorialExpr::omega(atom)),
        t => Err(Error::parse(
            1,
            col,
            format!("expected an exponent or `inf`, found {t:?}"),
        )),
    }
}

fn parse_atom(lx: &mut Lexer) -> Result<FunctorialExpr> {
    let (tok, col) = lx.next();
    match tok {
        Tok::Open => {
            let e = parse_join(lx)?;
            let (close, c) = lx.next();
            if close != Tok::Close {
                return Err(Error::parse(1, c, "expected ')'"));
            }
            Ok(e)
        }
        Tok::Word(w) => {
            let b = match w.as_str() {
                "F" => Builtin::F,
                "Fstar" => Builtin::FStar,
                "Ftilde" => Builtin::FTilde,
                "Phi" => Builtin::Phi,
                "Soc" => Builtin::Soc,
                "Triv" => Builtin::Triv,
                "Id" => Builtin::Id,
                "Phi_pi" => {
                    let (body, c) = lx.next();
                    let Tok::Braces(body) = body else {
                        return Err(Error::parse(1, c, "expected `{primes}` after Phi_pi"));
                    };
                    Builtin::PhiPi(parse_prime_list(&body).map_err(|m| Error::parse(1, c + 1, m))?)
                }
                _ => return Err(Error::parse(1, col, format!("unknown atom {w:?}"))),
            };
            Ok(FunctorialExpr::Builtin(b))
        }
        Tok::End => Err(Error::parse(1, col, "unexpected end of expression")),
        t => Err(Error::parse(1, col, format!("unexpected {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use FunctorialExpr as E;

    #[test]
    fn s3_file() {
        let g = parse_group_file("degree: 3\ngen: (1 2 3)\ngen: (1 2)\n").unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn comments_and_identity() {
        let g = parse_group_file("# c\n\ndegree: 4 # four points\ngen: ()\n").unwrap();
        assert!(g.is_trivial());
        assert!(parse_group_file("degree: 1").unwrap().is_trivial());
    }

    #[test]
    fn file_errors() {
        let err = parse_group_file("degree: 3\ngen: (1 2 2)\n").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 11,
                    ..
                }
            ),
            "{err}"
        );
        assert!(matches!(
            parse_group_file("gen: (1 2)").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_group_file("degree: 3\ngen: (1 4)").unwrap_err(),
            Error::Parse {
                line: 2,
                column: 9,
                ..
            }
        ));
        assert!(parse_group_file("degree: x").is_err());
        assert!(parse_group_file("degree: 0").is_err());
        assert!(parse_group_file("degree: 3\ngen: (1 2").is_err());
        assert!(parse_group_file("").is_err());
    }

    #[test]
    fn write_then_read() {
        let g = parse_group_file("degree: 5\ngen: (1 2 3 4 5)\ngen: (1 2)").unwrap();
        let back = parse_group_file(&write_group_file(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn expressions() {
        assert_eq!(
            parse_functorial("Phi_pi{2,3}*Fstar").unwrap(),
            E::star(E::phi_pi([2, 3]), E::f_star())
        );
        assert_eq!(
            parse_functorial("Ftilde^inf").unwrap(),
            E::omega(E::f_tilde())
        );
        assert_eq!(
            parse_functorial("Fstar & Ftilde | Triv").unwrap(),
            E::Join(vec![E::Meet(vec![E::f_star(), E::f_tilde()]), E::triv()])
        );
        assert_eq!(
            parse_functorial("F o Phi * Soc").unwrap(),
            E::star(E::circ(E::fitting(), E::phi()), E::Builtin(Builtin::Soc))
        );
        assert_eq!(
            parse_functorial("(Fstar^2)").unwrap(),
            E::power(E::f_star(), 2)
        );
        assert_eq!(
            parse_functorial("F & (Phi & Id)").unwrap(),
            E::Meet(vec![E::fitting(), E::Meet(vec![E::phi(), E::id()])])
        );
    }

    #[test]
    fn expression_errors() {
        for bad in [
            "Fbogus",
            "Phi_pi{}",
            "Phi_pi{4}",
            "Fstar^0",
            "Fstar^",
            "F *",
            "(F",
            "F)",
            "F F",
            "Phi_pi",
            "F^2^3",
            "",
        ] {
            assert!(
                matches!(parse_functorial(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    fn arb_builtin() -> impl Strategy<Value = E> {
        prop_oneof![
            Just(E::fitting()),
            Just(E::f_star()),
            Just(E::f_tilde()),
            Just(E::phi()),
            Just(E::Builtin(Builtin::Soc)),
            Just(E::triv()),
            Just(E::id()),
            proptest::sample::subsequence(vec![2u64, 3, 5, 7], 1..=3).prop_map(E::phi_pi),
        ]
    }

    fn arb_expr() -> impl Strategy<Value = E> {
        arb_builtin().prop_recursive(4, 32, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| E::star(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| E::circ(a, b)),
                proptest::collection::vec(inner.clone(), 2..=3).prop_map(E::Meet),
                proptest::collection::vec(inner.clone(), 2..=3).prop_map(E::Join),
                (inner.clone(), 1u32..4).prop_map(|(a, k)| E::power(a, k)),
                inner.prop_map(E::omega),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn print_parse_round_trip(e in arb_expr()) {
            prop_assert!(e.depth() <= 5);
            let printed = e.to_string();
            prop_assert_eq!(parse_functorial(&printed).unwrap(), e);
        }
    }
}
