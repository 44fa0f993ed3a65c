//! Exhaustive evaluation of a sentence in a finite field.
//!
//! Variables are compiled to slots; quantifiers enumerate their block of
//! slots with short-circuiting. The outermost `∃` block can be evaluated on
//! a sub-range of its assignments, which lets callers split the work and
//! take the smallest satisfying index.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::{Sentence, Term, Var};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

enum CTerm {
    Const(Elem),
    Slot(usize),
    Neg(Box<CTerm>),
    Add(Box<CTerm>, Box<CTerm>),
    Mul(Box<CTerm>, Box<CTerm>),
}

enum CSentence {
    Equal(CTerm, CTerm),
    And(Vec<CSentence>),
    Or(Vec<CSentence>),
    Not(Box<CSentence>),
    Exists(Vec<usize>, Box<CSentence>),
    Forall(Vec<usize>, Box<CSentence>),
}

pub struct Evaluator {
    field: Field,
    /// Variables of the outermost `∃` block, in order (empty if none).
    top_vars: Vec<Var>,
    top_slots: Vec<usize>,
    body: CSentence,
    slots: usize,
    assignments: u64,
}

impl Evaluator {
    /// Fails when the sentence is not closed or `q^(bound variables)` exceeds `budget`.
    pub fn new(sentence: &Sentence, field: &Field, budget: u64) -> Result<Self> {
        sentence.validate()?;
        let bound = sentence.bound_vars().len();
        crate::require_budget(field.order() as u64, bound as u64, budget)?;
        let mut scope: Vec<(&Var, usize)> = Vec::new();
        let mut next = 0;
        let (top_vars, inner) = match sentence {
            Sentence::Exists(vars, body) => (vars.clone(), body.as_ref()),
            other => (Vec::new(), other),
        };
        let mut top_slots = Vec::new();
        for v in &top_vars {
            scope.push((v, next));
            top_slots.push(next);
            next += 1;
        }
        let body = compile(inner, field, &mut scope, &mut next)?;
        let assignments =
            crate::checked_pow(field.order() as u64, top_vars.len() as u64).expect("within budget");
        Ok(Evaluator {
            field: field.clone(),
            top_vars,
            top_slots,
            body,
            slots: next,
            assignments,
        })
    }

    /// Number of assignments of the outermost `∃` block (1 if there is none).
    pub fn assignments(&self) -> u64 {
        self.assignments
    }

    pub fn top_vars(&self) -> &[Var] {
        &self.top_vars
    }

    /// The first assignment index in `range` (clamped) satisfying the body,
    /// with the values of the outermost block. Assignment `n` reads the
    /// variables as base-`q` digits, first variable most significant.
    pub fn first_model(&self, range: Range<u64>) -> Option<(u64, Vec<Elem>)> {
        let range = range.start.min(self.assignments)..range.end.min(self.assignments);
        let q = self.field.order() as u64;
        let mut env = vec![Elem(0); self.slots];
        for index in range {
            let mut rest = index;
            for &slot in self.top_slots.iter().rev() {
                env[slot] = Elem((rest % q) as u32);
                rest /= q;
            }
            if self.eval(&self.body, &mut env) {
                let values = self.top_slots.iter().map(|&s| env[s]).collect();
                return Some((index, values));
            }
        }
        None
    }

    pub fn evaluate_range(&self, range: Range<u64>) -> bool {
        self.first_model(range).is_some()
    }

    pub fn evaluate(&self) -> bool {
        self.evaluate_range(0..self.assignments)
    }

    fn eval_term(&self, t: &CTerm, env: &[Elem]) -> Elem {
        let f = &self.field;
        match t {
            CTerm::Const(c) => *c,
            CTerm::Slot(s) => env[*s],
            CTerm::Neg(a) => f.neg(self.eval_term(a, env)),
            CTerm::Add(a, b) => f.add(self.eval_term(a, env), self.eval_term(b, env)),
            CTerm::Mul(a, b) => {
                let x = self.eval_term(a, env);
                if x == Elem(0) {
                    return x;
                }
                f.mul(x, self.eval_term(b, env))
            }
        }
    }

    fn eval(&self, s: &CSentence, env: &mut [Elem]) -> bool {
        match s {
            CSentence::Equal(a, b) => self.eval_term(a, env) == self.eval_term(b, env),
            CSentence::And(parts) => parts.iter().all(|p| self.eval(p, env)),
            CSentence::Or(parts) => parts.iter().any(|p| self.eval(p, env)),
            CSentence::Not(inner) => !self.eval(inner, env),
            CSentence::Exists(slots, body) => self.quantify(slots, body, env, true),
            CSentence::Forall(slots, body) => self.quantify(slots, body, env, false),
        }
    }

    /// Odometer over the block; stops at the first assignment whose truth
    /// value equals `stop_on`.
    fn quantify(&self, slots: &[usize], body: &CSentence, env: &mut [Elem], stop_on: bool) -> bool {
        let q = self.field.order();
        for &s in slots {
            env[s] = Elem(0);
        }
        loop {
            if self.eval(body, env) == stop_on {
                return stop_on;
            }
            let mut i = slots.len();
            loop {
                if i == 0 {
                    return !stop_on;
                }
                i -= 1;
                let slot = slots[i];
                env[slot].0 += 1;
                if env[slot].0 < q {
                    break;
                }
                env[slot] = Elem(0);
            }
        }
    }
}

fn compile<'a>(
    s: &'a Sentence,
    field: &Field,
    scope: &mut Vec<(&'a Var, usize)>,
    next: &mut usize,
) -> Result<CSentence> {
    Ok(match s {
        Sentence::Equal(a, b) => CSentence::Equal(
            compile_term(a, field, scope)?,
            compile_term(b, field, scope)?,
        ),
        Sentence::And(parts) => CSentence::And(
            parts
                .iter()
                .map(|p| compile(p, field, scope, next))
                .collect::<Result<_>>()?,
        ),
        Sentence::Or(parts) => CSentence::Or(
            parts
                .iter()
                .map(|p| compile(p, field, scope, next))
                .collect::<Result<_>>()?,
        ),
        Sentence::Not(inner) => CSentence::Not(Box::new(compile(inner, field, scope, next)?)),
        Sentence::Exists(vars, body) | Sentence::Forall(vars, body) => {
            let mark = scope.len();
            let mut slots = Vec::with_capacity(vars.len());
            for v in vars {
                scope.push((v, *next));
                slots.push(*next);
                *next += 1;
            }
            let body = Box::new(compile(body, field, scope, next)?);
            scope.truncate(mark);
            if matches!(s, Sentence::Exists(..)) {
                CSentence::Exists(slots, body)
            } else {
                CSentence::Forall(slots, body)
            }
        }
    })
}

fn compile_term(t: &Term, field: &Field, scope: &[(&Var, usize)]) -> Result<CTerm> {
    Ok(match t {
        Term::Zero => CTerm::Const(field.zero()),
        Term::One => CTerm::Const(field.one()),
        Term::Var(v) => {
            let slot = scope
                .iter()
                .rev()
                .find(|(w, _)| *w == v)
                .map(|&(_, s)| s)
                .ok_or_else(|| Error::invalid(format!("variable {v} is free")))?;
            CTerm::Slot(slot)
        }
        Term::Neg(a) => CTerm::Neg(Box::new(compile_term(a, field, scope)?)),
        Term::Add(a, b) => CTerm::Add(
            Box::new(compile_term(a, field, scope)?),
            Box::new(compile_term(b, field, scope)?),
        ),
        Term::Mul(a, b) => CTerm::Mul(
            Box::new(compile_term(a, field, scope)?),
            Box::new(compile_term(b, field, scope)?),
        ),
    })
}

/// Truth of `sentence` in `field`, by exhaustive enumeration.
pub fn evaluate(sentence: &Sentence, field: &Field, budget: u64) -> Result<bool> {
    Ok(Evaluator::new(sentence, field, budget)?.evaluate())
}
