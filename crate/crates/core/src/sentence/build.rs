//! Sentences asserting the existence of group-ring witnesses.
//!
//! For `ψ_{d,S}`, the entries of `A` and `B` are `Σ_{s∈S} x_{i,j,s} δ_s` and
//! `Σ_{s∈S} y_{i,j,s} δ_s`. With
//!
//! ```text
//! P(i,j,g) = Σ_k Σ_{s,t ∈ S, st = g} x_{i,k,s} y_{k,j,t}
//! Q(i,j,g) = Σ_k Σ_{s,t ∈ S, st = g} y_{i,k,s} x_{k,j,t}
//! ```
//!
//! and `D = {(i, i, 1_G)}`, the sentence is `∃ x, y. P ∧ ¬Q` where `P` is
//! `⋀_{D} P(i,i,1_G) = 1 ∧ ⋀_{g ∈ S², (i,j,g) ∉ D} P(i,j,g) = 0` and `Q` is
//! the same with `Q(i,j,g)`.
//!
//! The diagonal equations are emitted even when `1_G ∉ S²`; the sum is then
//! empty and the equation reads `0 = 1`, so the sentence is false in every
//! field.

use alloc::vec;
use alloc::vec::Vec;

use super::{Role, Sentence, Term, Var};
use crate::error::{Error, Result};
use crate::group::{same_group, Group, Subset};

fn check(group: &Group, support: &Subset) -> Result<()> {
    if !same_group(group, support.group()) {
        return Err(Error::invalid("support belongs to a different group"));
    }
    if support.is_empty() {
        return Err(Error::invalid("support must be nonempty"));
    }
    Ok(())
}

/// Builds variable names for one group.
struct Vars<'a> {
    group: &'a Group,
}

impl Vars<'_> {
    fn var(&self, role: Role, i: usize, j: usize, s: usize) -> Var {
        Var::indexed(role, i as u32, j as u32, self.group.label(s))
    }

    fn term(&self, role: Role, i: usize, j: usize, s: usize) -> Term {
        Term::Var(self.var(role, i, j, s))
    }

    /// All `role_{i,j,s}` for `1 ≤ i, j ≤ d`, `s ∈ S`, lexicographically.
    fn block(&self, role: Role, d: usize, support: &Subset) -> Vec<Var> {
        let mut out = Vec::with_capacity(d * d * support.len());
        for i in 1..=d {
            for j in 1..=d {
                for &s in support.elements() {
                    out.push(self.var(role, i, j, s));
                }
            }
        }
        out
    }

    /// `Σ_k Σ_{st = g} left_{i,k,s} right_{k,j,t}`, ordered by `(k, s, t)`.
    fn product_coeff(
        &self,
        left: Role,
        right: Role,
        d: usize,
        support: &Subset,
        (i, j, g): (usize, usize, usize),
    ) -> Term {
        let mut terms = Vec::new();
        for k in 1..=d {
            for &s in support.elements() {
                for &t in support.elements() {
                    if self.group.mul(s, t) == g {
                        terms.push(Term::mul(
                            self.term(left, i, k, s),
                            self.term(right, k, j, t),
                        ));
                    }
                }
            }
        }
        Term::sum(terms)
    }

    /// `LR = 1` coefficientwise: diagonal identity equations first, then every
    /// other `(i, j, g)` with `g ∈ S²`.
    fn product_is_identity(
        &self,
        left: Role,
        right: Role,
        d: usize,
        support: &Subset,
        square: &Subset,
    ) -> Sentence {
        let diagonal = (1..=d)
            .map(|i| {
                Sentence::eq(
                    self.product_coeff(left, right, d, support, (i, i, 0)),
                    Term::One,
                )
            })
            .collect();
        let mut rest = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                for &g in square.elements() {
                    if i == j && g == 0 {
                        continue;
                    }
                    rest.push(Sentence::eq(
                        self.product_coeff(left, right, d, support, (i, j, g)),
                        Term::Zero,
                    ));
                }
            }
        }
        Sentence::And(vec![Sentence::And(diagonal), Sentence::And(rest)])
    }
}

/// `ψ_{d,S}`: there are `A, B ∈ Mat_d(K[G])` with entry supports in `S`,
/// `AB = 1` and `BA ≠ 1`. Uses `2d²|S|` variables.
pub fn build_psi_stable(group: &Group, d: usize, support: &Subset) -> Result<Sentence> {
    check(group, support)?;
    if d == 0 {
        return Err(Error::invalid("matrix dimension must be positive"));
    }
    let vars = Vars { group };
    let square = support.product_set(support)?;
    let mut bound = vars.block(Role::X, d, support);
    bound.extend(vars.block(Role::Y, d, support));
    let p = vars.product_is_identity(Role::X, Role::Y, d, support, &square);
    let q = vars.product_is_identity(Role::Y, Role::X, d, support, &square);
    Ok(Sentence::exists(
        bound,
        Sentence::And(vec![p, Sentence::not(q)]),
    ))
}

/// There is a unit `x` supported in `S`, with inverse `y` supported in `S`,
/// having at least two nonzero coefficients.
pub fn build_psi_unit(group: &Group, support: &Subset) -> Result<Sentence> {
    check(group, support)?;
    let vars = Vars { group };
    let square = support.product_set(support)?;
    let mut bound = vars.block(Role::X, 1, support);
    bound.extend(vars.block(Role::Y, 1, support));
    let right = vars.product_is_identity(Role::X, Role::Y, 1, support, &square);
    let left = vars.product_is_identity(Role::Y, Role::X, 1, support, &square);
    let s = support.elements();
    let mut pairs = Vec::new();
    for (a, &sa) in s.iter().enumerate() {
        for &sb in &s[a + 1..] {
            pairs.push(Sentence::And(vec![
                Sentence::nonzero(vars.term(Role::X, 1, 1, sa)),
                Sentence::nonzero(vars.term(Role::X, 1, 1, sb)),
            ]));
        }
    }
    Ok(Sentence::exists(
        bound,
        Sentence::And(vec![right, left, Sentence::Or(pairs)]),
    ))
}

/// There are nonzero `x, y` supported in `S` with `xy = 0`.
pub fn build_psi_zero_divisor(group: &Group, support: &Subset) -> Result<Sentence> {
    check(group, support)?;
    let vars = Vars { group };
    let square = support.product_set(support)?;
    let mut bound = vars.block(Role::X, 1, support);
    bound.extend(vars.block(Role::Y, 1, support));
    let product_zero = square
        .elements()
        .iter()
        .map(|&g| {
            Sentence::eq(
                vars.product_coeff(Role::X, Role::Y, 1, support, (1, 1, g)),
                Term::Zero,
            )
        })
        .collect();
    let nonzero = |role| {
        Sentence::Or(
            support
                .elements()
                .iter()
                .map(|&s| Sentence::nonzero(vars.term(role, 1, 1, s)))
                .collect(),
        )
    };
    Ok(Sentence::exists(
        bound,
        Sentence::And(vec![
            Sentence::And(product_zero),
            nonzero(Role::X),
            nonzero(Role::Y),
        ]),
    ))
}

/// There is `x` supported in `S` with `x² = x`, `x ≠ 0` and `x ≠ 1`.
/// The square is compared with `x` on every coefficient in `S ∪ S²`.
pub fn build_psi_idempotent(group: &Group, support: &Subset) -> Result<Sentence> {
    check(group, support)?;
    let vars = Vars { group };
    let square = support.product_set(support)?;
    let coeff = |g: usize| {
        if support.contains(g) {
            vars.term(Role::X, 1, 1, g)
        } else {
            Term::Zero
        }
    };
    let idempotent = support
        .union(&square)?
        .elements()
        .iter()
        .map(|&g| {
            Sentence::eq(
                vars.product_coeff(Role::X, Role::X, 1, support, (1, 1, g)),
                coeff(g),
            )
        })
        .collect();
    let is_zero = support
        .elements()
        .iter()
        .map(|&s| Sentence::eq(vars.term(Role::X, 1, 1, s), Term::Zero))
        .collect();
    let mut is_one: Vec<Sentence> = support
        .elements()
        .iter()
        .map(|&s| {
            let target = if s == 0 { Term::One } else { Term::Zero };
            Sentence::eq(vars.term(Role::X, 1, 1, s), target)
        })
        .collect();
    if !support.contains(0) {
        is_one.push(Sentence::eq(Term::Zero, Term::One));
    }
    Ok(Sentence::exists(
        vars.block(Role::X, 1, support),
        Sentence::And(vec![
            Sentence::And(idempotent),
            Sentence::not(Sentence::And(is_zero)),
            Sentence::not(Sentence::And(is_one)),
        ]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn stable_sentence_sizes() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let s = Subset::new(&c4, [0, 1, 2]).unwrap();
        let psi = build_psi_stable(&c4, 2, &s).unwrap();
        assert_eq!(psi.stats().variables, 24);
        psi.validate().unwrap();
    }

    #[test]
    fn stable_sentence_c2_d1() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let psi = build_psi_stable(&c2, 1, &Subset::all(&c2)).unwrap();
        let Sentence::Exists(vars, body) = &psi else {
            panic!()
        };
        assert_eq!(vars.len(), 4);
        let Sentence::And(parts) = body.as_ref() else {
            panic!()
        };
        let Sentence::And(p) = &parts[0] else {
            panic!()
        };
        // One "= 1" equation (D) and one "= 0" equation (g).
        let Sentence::And(diag) = &p[0] else { panic!() };
        let Sentence::And(rest) = &p[1] else { panic!() };
        assert_eq!(diag.len(), 1);
        assert_eq!(rest.len(), 1);
        assert!(matches!(&diag[0], Sentence::Equal(_, Term::One)));
        assert!(matches!(&rest[0], Sentence::Equal(_, Term::Zero)));
        // P(1,1,e) = x_e y_e + x_g y_g, in (k, s, t) order.
        let x = |l| Term::Var(Var::indexed(Role::X, 1, 1, l));
        let y = |l| Term::Var(Var::indexed(Role::Y, 1, 1, l));
        assert_eq!(
            diag[0],
            Sentence::eq(
                Term::add(Term::mul(x("e"), y("e")), Term::mul(x("g"), y("g"))),
                Term::One
            )
        );
    }

    #[test]
    fn single_identity_support_collapses() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let psi = build_psi_stable(&g, 1, &Subset::identity(&g)).unwrap();
        let x = Var::indexed(Role::X, 1, 1, "e");
        let y = Var::indexed(Role::Y, 1, 1, "e");
        let xy = Term::mul(Term::Var(x.clone()), Term::Var(y.clone()));
        let yx = Term::mul(Term::Var(y.clone()), Term::Var(x.clone()));
        let expected = Sentence::exists(
            vec![x, y],
            Sentence::And(vec![
                Sentence::And(vec![
                    Sentence::And(vec![Sentence::eq(xy, Term::One)]),
                    Sentence::And(vec![]),
                ]),
                Sentence::not(Sentence::And(vec![
                    Sentence::And(vec![Sentence::eq(yx, Term::One)]),
                    Sentence::And(vec![]),
                ])),
            ]),
        );
        assert_eq!(psi, expected);
    }

    #[test]
    fn identity_outside_square_gives_zero_equals_one() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let s = Subset::new(&c4, [1]).unwrap();
        let psi = build_psi_stable(&c4, 1, &s).unwrap();
        let stats = psi.stats();
        // S² = {g²}: one diagonal "0 = 1" plus one off-diagonal equation.
        assert_eq!(stats.p_atoms, Some(2));
        assert!(crate::sentence::pretty_print(&psi).contains("(0 = 1)"));
    }

    #[test]
    fn empty_support_rejected() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let empty = Subset::new(&c2, []).unwrap();
        assert!(build_psi_stable(&c2, 1, &empty).is_err());
        assert!(build_psi_unit(&c2, &empty).is_err());
        assert!(build_psi_zero_divisor(&c2, &empty).is_err());
        assert!(build_psi_idempotent(&c2, &empty).is_err());
        assert!(build_psi_stable(&c2, 0, &Subset::all(&c2)).is_err());
    }

    #[test]
    fn variant_sentences_are_closed() {
        let g = FiniteGroup::symmetric(3).unwrap();
        for s in [Subset::all(&g), Subset::new(&g, [1, 3]).unwrap()] {
            build_psi_unit(&g, &s).unwrap().validate().unwrap();
            build_psi_zero_divisor(&g, &s).unwrap().validate().unwrap();
            build_psi_idempotent(&g, &s).unwrap().validate().unwrap();
        }
    }
}
