//! SMT-LIB 2.6 emission over `GF(p)`, `p` prime.
//!
//! Each variable is an `Int` constrained to `0 ≤ v < p`. Ring operations are
//! integer operations, and every atomic equality compares both sides modulo
//! `p`. Leading existential blocks become declared constants; any other
//! quantifier is emitted as a bounded `exists`/`forall`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Sentence, Term, Var};
use crate::error::{Error, Result};
use crate::field::is_prime;

pub fn emit_smtlib(sentence: &Sentence, p: u32) -> Result<String> {
    if !is_prime(p) {
        return Err(Error::Unsupported(format!(
            "the SMT-LIB backend handles prime fields only; {p} is not prime"
        )));
    }
    sentence.validate()?;
    let mut declared: Vec<&Var> = Vec::new();
    let mut body = sentence;
    while let Sentence::Exists(vars, inner) = body {
        declared.extend(vars.iter());
        body = inner;
    }
    let mut out = String::new();
    out.push_str("; existential closure over GF(");
    write!(out, "{p}").unwrap();
    out.push_str("), variables as integer residues\n");
    out.push_str("(set-info :smt-lib-version 2.6)\n");
    let logic = if has_quantifier(body) {
        "NIA"
    } else {
        "QF_NIA"
    };
    writeln!(out, "(set-logic {logic})").unwrap();
    for v in &declared {
        writeln!(out, "(declare-const {} Int)", symbol(v)).unwrap();
    }
    for v in &declared {
        let s = symbol(v);
        writeln!(out, "(assert (and (<= 0 {s}) (< {s} {p})))").unwrap();
    }
    out.push_str("(assert ");
    write_sentence(&mut out, body, p);
    out.push_str(")\n(check-sat)\n");
    Ok(out)
}

fn has_quantifier(s: &Sentence) -> bool {
    match s {
        Sentence::Equal(..) => false,
        Sentence::And(v) | Sentence::Or(v) => v.iter().any(has_quantifier),
        Sentence::Not(s) => has_quantifier(s),
        Sentence::Exists(..) | Sentence::Forall(..) => true,
    }
}

/// A simple symbol when possible, otherwise a `|quoted|` symbol.
pub fn symbol(v: &Var) -> String {
    let name = format!("{v}");
    let simple = |c: char| c.is_ascii_alphanumeric() || "~!@$%^&*_-+=<>.?/".contains(c);
    if name.chars().all(simple) && !name.starts_with(|c: char| c.is_ascii_digit()) {
        name
    } else {
        format!("|{name}|")
    }
}

fn write_connective(out: &mut String, op: &str, empty: &str, parts: &[Sentence], p: u32) {
    match parts {
        [] => out.push_str(empty),
        [only] => write_sentence(out, only, p),
        _ => {
            write!(out, "({op}").unwrap();
            for part in parts {
                out.push(' ');
                write_sentence(out, part, p);
            }
            out.push(')');
        }
    }
}

fn write_sentence(out: &mut String, s: &Sentence, p: u32) {
    match s {
        Sentence::Equal(a, b) => {
            out.push_str("(= (mod ");
            write_term(out, a);
            write!(out, " {p}) (mod ").unwrap();
            write_term(out, b);
            write!(out, " {p}))").unwrap();
        }
        Sentence::And(parts) => write_connective(out, "and", "true", parts, p),
        Sentence::Or(parts) => write_connective(out, "or", "false", parts, p),
        Sentence::Not(inner) => {
            out.push_str("(not ");
            write_sentence(out, inner, p);
            out.push(')');
        }
        Sentence::Exists(vars, body) | Sentence::Forall(vars, body) if vars.is_empty() => {
            write_sentence(out, body, p)
        }
        Sentence::Exists(vars, body) | Sentence::Forall(vars, body) => {
            let exists = matches!(s, Sentence::Exists(..));
            out.push_str(if exists { "(exists (" } else { "(forall (" });
            for (n, v) in vars.iter().enumerate() {
                if n > 0 {
                    out.push(' ');
                }
                write!(out, "({} Int)", symbol(v)).unwrap();
            }
            out.push_str(") ");
            out.push_str(if exists { "(and " } else { "(=> " });
            out.push_str("(and");
            for v in vars {
                let s = symbol(v);
                write!(out, " (<= 0 {s}) (< {s} {p})").unwrap();
            }
            out.push_str(") ");
            write_sentence(out, body, p);
            out.push_str("))");
        }
    }
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(v) => out.push_str(&symbol(v)),
        Term::Neg(a) => {
            out.push_str("(- ");
            write_term(out, a);
            out.push(')');
        }
        Term::Add(a, b) | Term::Mul(a, b) => {
            out.push_str(if matches!(t, Term::Add(..)) {
                "(+ "
            } else {
                "(* "
            });
            write_term(out, a);
            out.push(' ');
            write_term(out, b);
            out.push(')');
        }
    }
}
