//! First-order sentences in the language of rings `(0, 1, -, +, ·, =)`.
//!
//! The builders in [`build`] produce sentences whose truth in a field `K`
//! is equivalent to the existence of a group-ring witness over `K`: a
//! one-sided but not two-sided invertible matrix pair, a non-trivial unit,
//! a zero-divisor pair, or a non-trivial idempotent. Each unknown coefficient
//! becomes an existentially quantified variable.
//!
//! Backends: [`print`] / [`parse`] (a stable, fully parenthesized text form),
//! [`smtlib`] (SMT-LIB 2.6 over integers modulo a prime) and [`eval`]
//! (exhaustive evaluation over any finite field).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub mod build;
pub mod eval;
pub mod parse;
pub mod print;
pub mod smtlib;

pub use build::{build_psi_idempotent, build_psi_stable, build_psi_unit, build_psi_zero_divisor};
pub use eval::{evaluate, Evaluator};
pub use parse::parse_sentence;
pub use print::pretty_print;
pub use smtlib::emit_smtlib;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    /// Coefficients of `A` (or of the single unknown element).
    X,
    /// Coefficients of `B` (or of the second unknown element).
    Y,
}

impl Role {
    fn letter(self) -> char {
        match self {
            Role::X => 'x',
            Role::Y => 'y',
        }
    }
}

/// A variable. Indexed variables stand for the coefficient of `δ_s` in entry
/// `(i, j)` of a matrix and print as `x_i_j_label`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Indexed {
        role: Role,
        i: u32,
        j: u32,
        label: String,
    },
    Named(String),
}

impl Var {
    pub fn indexed(role: Role, i: u32, j: u32, label: &str) -> Var {
        Var::Indexed {
            role,
            i,
            j,
            label: label.to_string(),
        }
    }

    /// Classifies a printed name. Names of the form `x_i_j_label` (with
    /// canonical positive decimals and a valid label) are indexed.
    pub fn from_name(name: &str) -> Var {
        fn canonical_index(s: &str) -> Option<u32> {
            if s.starts_with('0') {
                return None;
            }
            s.parse().ok().filter(|&n: &u32| n > 0)
        }
        let role = match name.as_bytes() {
            [b'x', b'_', ..] => Some(Role::X),
            [b'y', b'_', ..] => Some(Role::Y),
            _ => None,
        };
        if let Some(role) = role {
            let mut parts = name[2..].splitn(3, '_');
            if let (Some(i), Some(j), Some(label)) = (parts.next(), parts.next(), parts.next()) {
                if let (Some(i), Some(j)) = (canonical_index(i), canonical_index(j)) {
                    if crate::group::valid_label(label) {
                        return Var::indexed(role, i, j, label);
                    }
                }
            }
        }
        Var::Named(name.to_string())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Indexed { role, i, j, label } => {
                write!(f, "{}_{i}_{j}_{label}", role.letter())
            }
            Var::Named(name) => f.write_str(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Var(Var),
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

// Constructors named after the connectives they build.
#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(v: Var) -> Term {
        Term::Var(v)
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    /// Left-nested sum in iteration order; the empty sum is `0`.
    pub fn sum(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut iter = terms.into_iter();
        match iter.next() {
            None => Term::Zero,
            Some(first) => iter.fold(first, Term::add),
        }
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<&'a Var>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Var(v) => out.push(v),
            Term::Neg(a) => a.collect_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sentence {
    Equal(Term, Term),
    /// Conjunction; the empty conjunction is true.
    And(Vec<Sentence>),
    /// Disjunction; the empty disjunction is false.
    Or(Vec<Sentence>),
    Not(Box<Sentence>),
    Exists(Vec<Var>, Box<Sentence>),
    Forall(Vec<Var>, Box<Sentence>),
}

#[allow(clippy::should_implement_trait)]
impl Sentence {
    pub fn eq(a: Term, b: Term) -> Sentence {
        Sentence::Equal(a, b)
    }

    /// `t ≠ 0`, written `¬(t = 0)`.
    pub fn nonzero(t: Term) -> Sentence {
        Sentence::not(Sentence::Equal(t, Term::Zero))
    }

    pub fn not(s: Sentence) -> Sentence {
        Sentence::Not(Box::new(s))
    }

    pub fn exists(vars: Vec<Var>, body: Sentence) -> Sentence {
        Sentence::Exists(vars, Box::new(body))
    }

    pub fn forall(vars: Vec<Var>, body: Sentence) -> Sentence {
        Sentence::Forall(vars, Box::new(body))
    }

    /// Number of atomic equalities.
    pub fn atom_count(&self) -> usize {
        match self {
            Sentence::Equal(..) => 1,
            Sentence::And(v) | Sentence::Or(v) => v.iter().map(Sentence::atom_count).sum(),
            Sentence::Not(s) | Sentence::Exists(_, s) | Sentence::Forall(_, s) => s.atom_count(),
        }
    }

    /// All variables bound by quantifiers, in binding order.
    pub fn bound_vars(&self) -> Vec<&Var> {
        let mut out = Vec::new();
        self.walk_bound(&mut out);
        out
    }

    fn walk_bound<'a>(&'a self, out: &mut Vec<&'a Var>) {
        match self {
            Sentence::Equal(..) => {}
            Sentence::And(v) | Sentence::Or(v) => v.iter().for_each(|s| s.walk_bound(out)),
            Sentence::Not(s) => s.walk_bound(out),
            Sentence::Exists(vars, s) | Sentence::Forall(vars, s) => {
                out.extend(vars.iter());
                s.walk_bound(out);
            }
        }
    }

    /// Variables occurring outside the scope of any quantifier binding them.
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut free = BTreeSet::new();
        self.walk_free(&mut Vec::new(), &mut free);
        free
    }

    fn walk_free<'a>(&'a self, scope: &mut Vec<&'a Var>, free: &mut BTreeSet<Var>) {
        match self {
            Sentence::Equal(a, b) => {
                let mut vars = Vec::new();
                a.collect_vars(&mut vars);
                b.collect_vars(&mut vars);
                for v in vars {
                    if !scope.contains(&v) {
                        free.insert(v.clone());
                    }
                }
            }
            Sentence::And(v) | Sentence::Or(v) => v.iter().for_each(|s| s.walk_free(scope, free)),
            Sentence::Not(s) => s.walk_free(scope, free),
            Sentence::Exists(vars, s) | Sentence::Forall(vars, s) => {
                let mark = scope.len();
                scope.extend(vars.iter());
                s.walk_free(scope, free);
                scope.truncate(mark);
            }
        }
    }

    /// Checks that the sentence is closed and that no variable is bound twice.
    pub fn validate(&self) -> Result<()> {
        let bound = self.bound_vars();
        let mut seen = BTreeSet::new();
        for v in bound {
            if !seen.insert(v) {
                return Err(Error::invalid(format!(
                    "variable {v} is bound more than once"
                )));
            }
        }
        if let Some(v) = self.free_vars().into_iter().next() {
            return Err(Error::invalid(format!("variable {v} is free")));
        }
        Ok(())
    }

    pub fn stats(&self) -> SentenceStats {
        SentenceStats::of(self)
    }
}

/// Size measures of a sentence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SentenceStats {
    pub variables: usize,
    pub atoms: usize,
    /// For sentences of the shape `∃ vars. (P ∧ ¬Q)`: atoms in `P` and `Q`.
    pub p_atoms: Option<usize>,
    pub q_atoms: Option<usize>,
}

impl SentenceStats {
    pub fn of(s: &Sentence) -> SentenceStats {
        let (p_atoms, q_atoms) = match s {
            Sentence::Exists(_, body) => match body.as_ref() {
                Sentence::And(parts) => match parts.as_slice() {
                    [p, Sentence::Not(q)] => (Some(p.atom_count()), Some(q.atom_count())),
                    _ => (None, None),
                },
                _ => (None, None),
            },
            _ => (None, None),
        };
        SentenceStats {
            variables: s.bound_vars().len(),
            atoms: s.atom_count(),
            p_atoms,
            q_atoms,
        }
    }
}

impl fmt::Display for SentenceStats {
    /// One `key=value` pair per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variables={}", self.variables)?;
        writeln!(f, "atoms={}", self.atoms)?;
        if let (Some(p), Some(q)) = (self.p_atoms, self.q_atoms) {
            writeln!(f, "p_atoms={p}")?;
            writeln!(f, "q_atoms={q}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn var_names_round_trip() {
        let v = Var::indexed(Role::X, 1, 1, "e");
        assert_eq!(v.to_string(), "x_1_1_e");
        assert_eq!(Var::from_name("x_1_1_e"), v);
        assert_eq!(
            Var::from_name("y_2_10_[e.g].h"),
            Var::indexed(Role::Y, 2, 10, "[e.g].h")
        );
        for name in ["x", "x_0_1_e", "x_01_1_e", "z_1_1_e", "x_1_1_", "x_1_1_9"] {
            assert_eq!(Var::from_name(name), Var::Named(name.into()), "{name}");
        }
    }

    #[test]
    fn closedness() {
        let x = Var::Named("x".into());
        let body = Sentence::eq(
            Term::mul(Term::var(x.clone()), Term::var(x.clone())),
            Term::One,
        );
        assert_eq!(body.free_vars().len(), 1);
        assert!(body.validate().is_err());
        let closed = Sentence::exists(vec![x.clone()], body.clone());
        assert!(closed.validate().is_ok());
        let twice = Sentence::exists(vec![x.clone()], Sentence::exists(vec![x], body));
        assert!(twice.validate().is_err());
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(Term::sum([]), Term::Zero);
        assert_eq!(Term::sum([Term::One]), Term::One);
        assert_eq!(
            Term::sum([Term::One, Term::Zero, Term::One]),
            Term::add(Term::add(Term::One, Term::Zero), Term::One)
        );
    }
}
