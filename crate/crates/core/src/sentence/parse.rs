//! Recursive-descent parser for the grammar documented in [`super::print`].

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use super::{Sentence, Term, Var};
use crate::error::{Error, Result};

pub fn parse_sentence(text: &str) -> Result<Sentence> {
    let mut p = Parser { text, pos: 0 };
    let s = p.sentence()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(s)
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser { text, pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error(&self, msg: &str) -> Error {
        Error::syntax_at(self.text, self.pos, msg)
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.bump(c);
                Ok(())
            }
            Some(found) => Err(self.error(&format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(&format!("expected '{c}', found end of input"))),
        }
    }

    fn sentence(&mut self) -> Result<Sentence> {
        match self.peek() {
            Some(c @ ('∃' | '∀')) => {
                self.bump(c);
                let mut vars = Vec::new();
                if self.peek() != Some(':') {
                    vars.push(self.var()?);
                    while self.peek() == Some(',') {
                        self.bump(',');
                        vars.push(self.var()?);
                    }
                }
                self.expect(':')?;
                let body = Box::new(self.sentence()?);
                Ok(if c == '∃' {
                    Sentence::Exists(vars, body)
                } else {
                    Sentence::Forall(vars, body)
                })
            }
            Some('¬') => {
                self.bump('¬');
                Ok(Sentence::Not(Box::new(self.sentence()?)))
            }
            Some(c @ ('∧' | '∨')) => {
                self.bump(c);
                self.expect('(')?;
                let mut parts = Vec::new();
                if self.peek() != Some(')') {
                    parts.push(self.sentence()?);
                    while self.peek() == Some(',') {
                        self.bump(',');
                        parts.push(self.sentence()?);
                    }
                }
                self.expect(')')?;
                Ok(if c == '∧' {
                    Sentence::And(parts)
                } else {
                    Sentence::Or(parts)
                })
            }
            Some('(') => {
                self.bump('(');
                let a = self.term()?;
                self.expect('=')?;
                let b = self.term()?;
                self.expect(')')?;
                Ok(Sentence::Equal(a, b))
            }
            Some(c) => Err(self.error(&format!("expected a sentence, found '{c}'"))),
            None => Err(self.error("expected a sentence, found end of input")),
        }
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some('0') => {
                self.bump('0');
                Ok(Term::Zero)
            }
            Some('1') => {
                self.bump('1');
                Ok(Term::One)
            }
            Some('-') => {
                self.bump('-');
                Ok(Term::Neg(Box::new(self.term()?)))
            }
            Some('(') => {
                self.bump('(');
                let a = self.term()?;
                let op = match self.peek() {
                    Some(op @ ('+' | '*')) => {
                        self.bump(op);
                        op
                    }
                    _ => return Err(self.error("expected '+' or '*'")),
                };
                let b = self.term()?;
                self.expect(')')?;
                Ok(if op == '+' {
                    Term::add(a, b)
                } else {
                    Term::mul(a, b)
                })
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Term::Var(self.var()?)),
            Some(c) => Err(self.error(&format!("expected a term, found '{c}'"))),
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn var(&mut self) -> Result<Var> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.error("expected a variable name")),
        }
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !crate::group::is_label_char(c))
            .unwrap_or(rest.len());
        let name = &rest[..len];
        self.pos += len;
        Ok(Var::from_name(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, Subset};
    use crate::sentence::{build_psi_stable, pretty_print, Role};
    use alloc::vec;

    #[test]
    fn round_trip_small_psi() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let psi = build_psi_stable(&g, 1, &Subset::identity(&g)).unwrap();
        assert_eq!(parse_sentence(&pretty_print(&psi)).unwrap(), psi);
    }

    #[test]
    fn truncated_input_is_a_syntax_error() {
        match parse_sentence("∃") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_sentence("(x = )"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_sentence("∧((0 = 1)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_sentence("(0 = 1) junk"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn error_positions_count_lines() {
        match parse_sentence("∧(\n  (0 = 1),\n  (x ? y)\n)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 6)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn hand_written_sentence() {
        let s = parse_sentence("∃ x: ((x * x) = 1)").unwrap();
        let x = Var::Named("x".into());
        assert_eq!(
            s,
            Sentence::exists(
                vec![x.clone()],
                Sentence::eq(Term::mul(Term::Var(x.clone()), Term::Var(x)), Term::One)
            )
        );
        let s = parse_sentence("∀ : ∨()").unwrap();
        assert_eq!(s, Sentence::forall(vec![], Sentence::Or(vec![])));
        let t = parse_term("-(x_1_2_g.e + 1)").unwrap();
        assert_eq!(
            t,
            Term::neg(Term::add(
                Term::Var(Var::indexed(Role::X, 1, 2, "g.e")),
                Term::One
            ))
        );
    }
}
