//! The text form of sentences.
//!
//! ```text
//! sentence := ("∃" | "∀") [var ("," var)*] ":" sentence
//!           | "¬" sentence
//!           | ("∧" | "∨") "(" [sentence ("," sentence)*] ")"
//!           | "(" term "=" term ")"
//! term     := "0" | "1" | var | "-" term
//!           | "(" term "+" term ")" | "(" term "*" term ")"
//! var      := letter (letter | digit | "_" | "." | "[" | "]")*
//! ```
//!
//! Whitespace between tokens is ignored. Connectives print one operand per
//! line, indented by two spaces per level.

use alloc::string::String;
use core::fmt::Write;

use super::{Sentence, Term};

pub fn pretty_print(s: &Sentence) -> String {
    let mut out = String::new();
    write_sentence(&mut out, s, 0);
    out.push('\n');
    out
}

pub fn term_to_string(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t);
    out
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_sentence(out: &mut String, s: &Sentence, level: usize) {
    match s {
        Sentence::Equal(a, b) => {
            out.push('(');
            write_term(out, a);
            out.push_str(" = ");
            write_term(out, b);
            out.push(')');
        }
        Sentence::Not(inner) => {
            out.push('¬');
            write_sentence(out, inner, level);
        }
        Sentence::And(parts) | Sentence::Or(parts) => {
            out.push(if matches!(s, Sentence::And(_)) {
                '∧'
            } else {
                '∨'
            });
            out.push('(');
            if !parts.is_empty() {
                out.push('\n');
                for (n, part) in parts.iter().enumerate() {
                    indent(out, level + 1);
                    write_sentence(out, part, level + 1);
                    if n + 1 < parts.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                indent(out, level);
            }
            out.push(')');
        }
        Sentence::Exists(vars, body) | Sentence::Forall(vars, body) => {
            out.push(if matches!(s, Sentence::Exists(..)) {
                '∃'
            } else {
                '∀'
            });
            for (n, v) in vars.iter().enumerate() {
                out.push_str(if n == 0 { " " } else { ", " });
                write!(out, "{v}").unwrap();
            }
            out.push_str(":\n");
            indent(out, level);
            write_sentence(out, body, level);
        }
    }
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(v) => write!(out, "{v}").unwrap(),
        Term::Neg(a) => {
            out.push('-');
            write_term(out, a);
        }
        Term::Add(a, b) | Term::Mul(a, b) => {
            out.push('(');
            write_term(out, a);
            out.push_str(if matches!(t, Term::Add(..)) {
                " + "
            } else {
                " * "
            });
            write_term(out, b);
            out.push(')');
        }
    }
}
