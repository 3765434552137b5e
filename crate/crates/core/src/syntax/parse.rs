//! Recursive-descent parsers for both term languages.
//!
//! ```text
//! disj := 'id' NAT | 'kappa' NAT | 'in1' NAT NAT | 'in2' NAT NAT | 'fold' NAT
//!       | '(' disj ';' disj ')' | '(' disj '+' disj ')' | '[' disj ',' disj ']'
//!
//! obj  := 'I' | 'p'NAT ('*' 'p'NAT)*
//! conj := 'id' obj | 'bang' obj | 'pr1' obj '|' obj | 'pr2' obj '|' obj | 'dup' obj
//!       | '(' conj ';' conj ')' | '(' conj '*' conj ')' | '<' conj ',' conj '>'
//! ```
//!
//! Whitespace is insignificant except inside a word.

use crate::error::{Error, Result};

use super::conj::{ConjObj, ConjTerm};
use super::disj::DisjTerm;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(usize),
    /// `p<NAT>`
    Letter(usize),
    Word(String),
    Punct(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Letter(i) => format!("letter p{i}"),
            Tok::Word(w) => format!("`{w}`"),
            Tok::Punct(c) => format!("`{c}`"),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i]
                .parse()
                .map_err(|_| syntax(start, "number too large"))?;
            toks.push((start, Tok::Nat(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let letter = word
                .strip_prefix('p')
                .filter(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()));
            let tok = match letter {
                Some(digits) => Tok::Letter(
                    digits
                        .parse()
                        .map_err(|_| syntax(start, "letter index too large"))?,
                ),
                None => Tok::Word(word.to_string()),
            };
            toks.push((start, tok));
        } else if b"();+[],*|<>".contains(&c) {
            toks.push((i, Tok::Punct(c as char)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("nonempty remainder");
            return Err(syntax(i, format!("unexpected character `{ch}`")));
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.toks.get(self.pos + ahead).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn next(&mut self, expected: &str) -> Result<(usize, Tok)> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(syntax(self.end, format!("expected {expected}, found end of input"))),
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        match self.peek() {
            Some(t) => syntax(self.offset(), format!("expected {expected}, found {}", t.describe())),
            None => syntax(self.end, format!("expected {expected}, found end of input")),
        }
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn nat(&mut self) -> Result<usize> {
        match self.peek() {
            Some(&Tok::Nat(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(
                self.offset(),
                format!("unexpected {} after the term", t.describe()),
            )),
        }
    }

    fn disj(&mut self) -> Result<DisjTerm> {
        let (at, tok) = self.next("a term")?;
        match tok {
            Tok::Word(w) => match w.as_str() {
                "id" => Ok(DisjTerm::Id(self.nat()?)),
                "kappa" => Ok(DisjTerm::Kappa(self.nat()?)),
                "in1" => Ok(DisjTerm::In1(self.nat()?, self.nat()?)),
                "in2" => Ok(DisjTerm::In2(self.nat()?, self.nat()?)),
                "fold" => Ok(DisjTerm::Fold(self.nat()?)),
                _ => Err(syntax(at, format!("unknown disjunctive constructor `{w}`"))),
            },
            Tok::Punct('(') => {
                let left = self.disj()?;
                let op = match self.peek() {
                    Some(Tok::Punct(c @ (';' | '+'))) => *c,
                    _ => return Err(self.unexpected("`;` or `+`")),
                };
                self.pos += 1;
                let right = self.disj()?;
                self.punct(')')?;
                Ok(if op == ';' {
                    DisjTerm::seq(left, right)
                } else {
                    DisjTerm::sum(left, right)
                })
            }
            Tok::Punct('[') => {
                let left = self.disj()?;
                self.punct(',')?;
                let right = self.disj()?;
                self.punct(']')?;
                Ok(DisjTerm::case(left, right))
            }
            t => Err(syntax(at, format!("expected a term, found {}", t.describe()))),
        }
    }

    fn obj(&mut self) -> Result<ConjObj> {
        let (at, tok) = self.next("an object")?;
        match tok {
            Tok::Word(w) if w == "I" => Ok(ConjObj::unit()),
            Tok::Letter(i) => {
                let mut indices = vec![i];
                while self.peek() == Some(&Tok::Punct('*')) {
                    match self.peek_at(1) {
                        Some(&Tok::Letter(j)) => {
                            indices.push(j);
                            self.pos += 2;
                        }
                        _ => break,
                    }
                }
                ConjObj::new(indices).map_err(|_| syntax(at, "letter indices start at p1"))
            }
            t => Err(syntax(at, format!("expected an object, found {}", t.describe()))),
        }
    }

    fn conj(&mut self) -> Result<ConjTerm> {
        let (at, tok) = self.next("a term")?;
        match tok {
            Tok::Word(w) => match w.as_str() {
                "id" => Ok(ConjTerm::Id(self.obj()?)),
                "bang" => Ok(ConjTerm::Bang(self.obj()?)),
                "dup" => Ok(ConjTerm::Dup(self.obj()?)),
                "pr1" | "pr2" => {
                    let a = self.obj()?;
                    self.punct('|')?;
                    let b = self.obj()?;
                    Ok(if w == "pr1" {
                        ConjTerm::Pr1(a, b)
                    } else {
                        ConjTerm::Pr2(a, b)
                    })
                }
                _ => Err(syntax(at, format!("unknown conjunctive constructor `{w}`"))),
            },
            Tok::Punct('(') => {
                let left = self.conj()?;
                let op = match self.peek() {
                    Some(Tok::Punct(c @ (';' | '*'))) => *c,
                    _ => return Err(self.unexpected("`;` or `*`")),
                };
                self.pos += 1;
                let right = self.conj()?;
                self.punct(')')?;
                Ok(if op == ';' {
                    ConjTerm::seq(left, right)
                } else {
                    ConjTerm::prod(left, right)
                })
            }
            Tok::Punct('<') => {
                let left = self.conj()?;
                self.punct(',')?;
                let right = self.conj()?;
                self.punct('>')?;
                Ok(ConjTerm::pair(left, right))
            }
            t => Err(syntax(at, format!("expected a term, found {}", t.describe()))),
        }
    }
}

pub fn parse_disj(text: &str) -> Result<DisjTerm> {
    let mut p = Parser::new(text)?;
    let t = p.disj()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_conj(text: &str) -> Result<ConjTerm> {
    let mut p = Parser::new(text)?;
    let t = p.conj()?;
    p.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(indices: &[usize]) -> ConjObj {
        ConjObj::new(indices.to_vec()).unwrap()
    }

    #[test]
    fn disjunctive_examples() {
        assert_eq!(parse_disj("in1 2 3").unwrap(), DisjTerm::In1(2, 3));
        assert_eq!(
            parse_disj("(in1 1 1 ; in2 1 2)").unwrap(),
            DisjTerm::seq(DisjTerm::In1(1, 1), DisjTerm::In2(1, 2))
        );
        assert_eq!(
            parse_disj(" [ in1 1 1 ,in2 1 1 ] ").unwrap(),
            DisjTerm::case(DisjTerm::In1(1, 1), DisjTerm::In2(1, 1))
        );
        assert_eq!(
            parse_disj("(fold 1+kappa 0)").unwrap(),
            DisjTerm::sum(DisjTerm::Fold(1), DisjTerm::Kappa(0))
        );
    }

    #[test]
    fn conjunctive_examples() {
        assert_eq!(
            parse_conj("<pr1 p1|p2 , pr2 p1|p2>").unwrap(),
            ConjTerm::pair(
                ConjTerm::Pr1(obj(&[1]), obj(&[2])),
                ConjTerm::Pr2(obj(&[1]), obj(&[2]))
            )
        );
        assert_eq!(
            parse_conj("(id p1*p2 * bang I)").unwrap(),
            ConjTerm::prod(ConjTerm::Id(obj(&[1, 2])), ConjTerm::Bang(ConjObj::unit()))
        );
        assert_eq!(
            parse_conj("(dup p3 ; pr2 p3 | p3)").unwrap(),
            ConjTerm::seq(ConjTerm::Dup(obj(&[3])), ConjTerm::Pr2(obj(&[3]), obj(&[3])))
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_disj("(id 1 ; id 1").unwrap_err() {
            Error::Syntax { position, message } => {
                assert_eq!(position, 12);
                assert!(message.contains("end of input"), "{message}");
            }
            e => panic!("unexpected {e}"),
        }
        match parse_disj("id 1 id 2").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 5),
            e => panic!("unexpected {e}"),
        }
        assert!(matches!(parse_disj("foo 1"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_disj("id p1"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_conj("id p0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_conj("pr1 p1 p2"), Err(Error::Syntax { position: 7, .. })));
        assert!(matches!(parse_conj("id p1 $"), Err(Error::Syntax { position: 6, .. })));
        assert!(parse_conj("").is_err());
    }

    #[test]
    fn canonical_text_reparses() {
        for text in [
            "[(id 1 + kappa 2), (fold 1 ; in2 2 1)]",
            "((in1 1 1 ; fold 1) + id 0)",
        ] {
            let t = parse_disj(text).unwrap();
            assert_eq!(t.to_string(), text);
        }
        for text in [
            "((id p1*p2 * bang I) ; <pr1 p1 | p2, pr2 p1 | p2>)",
            "(dup p1*p1 ; pr1 p1*p1 | p1*p1)",
        ] {
            let t = parse_conj(text).unwrap();
            assert_eq!(t.to_string(), text);
        }
    }
}
