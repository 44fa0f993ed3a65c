//! Cellular automata over finite groups.
//!
//! A configuration is a map `G → A`, stored in group-element index order.
//! An automaton with memory set `S` and local rule `μ` sends `x` to
//! `g ↦ μ(s ↦ x(gs))`. Translation acts by `(x ∘ L_g)(h) = x(gh)`.
//!
//! A matrix `M` over `K[G]` gives the linear automaton on `(K^d)^G`
//!
//! ```text
//! τ_M(x)(g) = Σ_{s ∈ S} M(s) · x(gs)
//! ```
//!
//! with column-vector values, where `M(s)[a][b]` is the `δ_s` coefficient of
//! `M_ab`. With this convention `τ_{MM'} = τ_M ∘ τ_{M'}` for every finite
//! group, so the global matrix is a ring homomorphism.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::group::{same_group, Group, Subset};
use crate::groupring::GroupRingMatrix;
use crate::linalg::Matrix;

/// Largest configuration space scanned exhaustively by [`GeneralCA`] (`2^20`).
pub const MAX_EXHAUSTIVE_CONFIGURATIONS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration<V> {
    group: Group,
    values: Vec<V>,
}

impl<V: Clone> Configuration<V> {
    pub fn new(group: &Group, values: Vec<V>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::invalid(format!(
                "configuration has {} values, group has order {}",
                values.len(),
                group.order()
            )));
        }
        Ok(Configuration {
            group: group.clone(),
            values,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn at(&self, g: usize) -> &V {
        &self.values[g]
    }

    /// `x ∘ L_g`, i.e. `h ↦ x(gh)`.
    pub fn translate(&self, g: usize) -> Self {
        let values = self
            .group
            .elements()
            .map(|h| self.values[self.group.mul(g, h)].clone())
            .collect();
        Configuration {
            group: self.group.clone(),
            values,
        }
    }
}

pub trait CellularAutomaton {
    type Value: Clone + PartialEq;

    fn group(&self) -> &Group;

    fn apply(&self, x: &Configuration<Self::Value>) -> Result<Configuration<Self::Value>>;
}

/// Checks `τ(x ∘ L_g) = τ(x) ∘ L_g` for every `g` and every sample.
pub fn check_equivariance<T: CellularAutomaton>(
    tau: &T,
    samples: &[Configuration<T::Value>],
) -> Result<bool> {
    for x in samples {
        let image = tau.apply(x)?;
        for g in tau.group().elements() {
            if tau.apply(&x.translate(g))? != image.translate(g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsistencyVerdict {
    pub injective: bool,
    pub surjective: bool,
}

impl ConsistencyVerdict {
    /// False only when the automaton is injective but not surjective.
    pub fn passes(&self) -> bool {
        !self.injective || self.surjective
    }
}

#[derive(Clone, Debug)]
pub struct LinearCA {
    group: Group,
    field: Field,
    d: usize,
    memory: Subset,
    coeffs: Vec<Matrix>,
}

impl LinearCA {
    /// `coeffs[n]` is the `d × d` matrix attached to the `n`-th element of `memory`.
    pub fn new(field: &Field, d: usize, memory: Subset, coeffs: Vec<Matrix>) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if memory.is_empty() {
            return Err(Error::invalid("memory set must be nonempty"));
        }
        if coeffs.len() != memory.len() {
            return Err(Error::invalid("one coefficient matrix per memory element"));
        }
        for m in &coeffs {
            if m.rows() != d || m.cols() != d {
                return Err(Error::invalid(format!(
                    "coefficient matrices must be {d} x {d}"
                )));
            }
            if (0..d).any(|a| m.row(a).iter().any(|&c| !field.contains(c))) {
                return Err(Error::invalid("coefficient outside the field"));
            }
        }
        Ok(LinearCA {
            group: memory.group().clone(),
            field: field.clone(),
            d,
            memory,
            coeffs,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn memory(&self) -> &Subset {
        &self.memory
    }

    pub fn coefficient(&self, s: usize) -> Option<&Matrix> {
        let n = self.memory.elements().binary_search(&s).ok()?;
        Some(&self.coeffs[n])
    }

    /// The `d|G| × d|G|` matrix of `τ`, basis vector `g·d + c` being
    /// coordinate `c` at group element `g`.
    pub fn global_matrix(&self) -> Matrix {
        let (n, d) = (self.group.order(), self.d);
        let f = &self.field;
        let mut t = Matrix::zeros(n * d, n * d);
        for g in self.group.elements() {
            for (&s, m) in self.memory.elements().iter().zip(&self.coeffs) {
                let gs = self.group.mul(g, s);
                for a in 0..d {
                    for b in 0..d {
                        let cell = &mut t[(g * d + a, gs * d + b)];
                        *cell = f.add(*cell, m[(a, b)]);
                    }
                }
            }
        }
        t
    }

    pub fn is_injective(&self) -> bool {
        self.global_matrix().rank(&self.field) == self.group.order() * self.d
    }

    /// The domain and codomain have the same finite dimension, so this is
    /// the same rank test as injectivity.
    pub fn is_surjective(&self) -> bool {
        self.is_injective()
    }

    pub fn check_injective_implies_surjective(&self) -> ConsistencyVerdict {
        let verdict = ConsistencyVerdict {
            injective: self.is_injective(),
            surjective: self.is_surjective(),
        };
        assert!(
            verdict.passes(),
            "injective linear automaton on a finite group is not surjective"
        );
        verdict
    }

    /// A configuration from `d|G|` scalars in global-matrix basis order.
    pub fn configuration_from_flat(&self, flat: &[Elem]) -> Result<Configuration<Vec<Elem>>> {
        if flat.len() != self.group.order() * self.d {
            return Err(Error::invalid(
                "wrong number of scalars for a configuration",
            ));
        }
        Configuration::new(
            &self.group,
            flat.chunks(self.d).map(<[Elem]>::to_vec).collect(),
        )
    }

    pub fn flatten(x: &Configuration<Vec<Elem>>) -> Vec<Elem> {
        x.values.iter().flatten().copied().collect()
    }
}

impl CellularAutomaton for LinearCA {
    type Value = Vec<Elem>;

    fn group(&self) -> &Group {
        &self.group
    }

    fn apply(&self, x: &Configuration<Vec<Elem>>) -> Result<Configuration<Vec<Elem>>> {
        if !same_group(&x.group, &self.group) {
            return Err(Error::invalid("configuration over a different group"));
        }
        if x.values
            .iter()
            .any(|v| v.len() != self.d || v.iter().any(|&c| !self.field.contains(c)))
        {
            return Err(Error::invalid(format!(
                "configuration values must be vectors of length {} over the field",
                self.d
            )));
        }
        let f = &self.field;
        let values = self
            .group
            .elements()
            .map(|g| {
                let mut out = vec![f.zero(); self.d];
                for (&s, m) in self.memory.elements().iter().zip(&self.coeffs) {
                    let v = m.apply(&x.values[self.group.mul(g, s)], f);
                    for (o, c) in out.iter_mut().zip(v) {
                        *o = f.add(*o, c);
                    }
                }
                out
            })
            .collect();
        Ok(Configuration {
            group: self.group.clone(),
            values,
        })
    }
}

/// The linear automaton of `m`; its memory set is the union of the entry
/// supports, or `{e}` with a zero coefficient when `m` is zero.
pub fn lca_from_matrix(m: &GroupRingMatrix) -> LinearCA {
    let (group, field, d) = (m.group(), m.field(), m.dim());
    let mut memory = m.support();
    if memory.is_empty() {
        memory = Subset::identity(group);
    }
    let coeffs = memory
        .elements()
        .iter()
        .map(|&s| {
            let mut c = Matrix::zeros(d, d);
            for a in 0..d {
                for b in 0..d {
                    c[(a, b)] = m.entry(a, b).coeff(s);
                }
            }
            c
        })
        .collect();
    LinearCA::new(field, d, memory, coeffs).expect("built from a valid matrix")
}

/// An automaton over an explicit finite alphabet, with its local rule as a
/// table. Values are alphabet indices.
#[derive(Clone, Debug)]
pub struct GeneralCA {
    group: Group,
    alphabet: Vec<alloc::string::String>,
    memory: Subset,
    table: Vec<usize>,
}

impl GeneralCA {
    /// `table[n]` is the image of pattern `n`, whose digits in base `|A|`
    /// are the values on the memory elements, first element most significant.
    pub fn new(
        alphabet: Vec<alloc::string::String>,
        memory: Subset,
        table: Vec<usize>,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::invalid("alphabet must be nonempty"));
        }
        for (n, a) in alphabet.iter().enumerate() {
            if alphabet[..n].contains(a) {
                return Err(Error::invalid(format!("duplicate alphabet label '{a}'")));
            }
        }
        if memory.is_empty() {
            return Err(Error::invalid("memory set must be nonempty"));
        }
        let patterns = crate::checked_pow(alphabet.len() as u64, memory.len() as u64)
            .filter(|&n| n <= MAX_EXHAUSTIVE_CONFIGURATIONS)
            .ok_or_else(|| Error::invalid("local rule table is too large"))?;
        if table.len() as u64 != patterns {
            return Err(Error::invalid(format!(
                "local rule needs {patterns} entries, got {}",
                table.len()
            )));
        }
        if table.iter().any(|&v| v >= alphabet.len()) {
            return Err(Error::invalid("local rule value outside the alphabet"));
        }
        Ok(GeneralCA {
            group: memory.group().clone(),
            alphabet,
            memory,
            table,
        })
    }

    pub fn alphabet(&self) -> &[alloc::string::String] {
        &self.alphabet
    }

    pub fn memory(&self) -> &Subset {
        &self.memory
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `|A|^|G|`, or an error when it exceeds `min(budget, 2^20)`.
    pub fn configurations(&self, budget: u64) -> Result<u64> {
        crate::require_budget(
            self.alphabet.len() as u64,
            self.group.order() as u64,
            budget.min(MAX_EXHAUSTIVE_CONFIGURATIONS),
        )
    }

    /// Configuration number `index`, value at element 0 most significant.
    pub fn configuration(&self, index: u64) -> Configuration<usize> {
        let a = self.alphabet.len() as u64;
        let mut values = vec![0; self.group.order()];
        let mut rest = index;
        for v in values.iter_mut().rev() {
            *v = (rest % a) as usize;
            rest /= a;
        }
        Configuration {
            group: self.group.clone(),
            values,
        }
    }

    pub fn index_of(&self, x: &Configuration<usize>) -> u64 {
        let a = self.alphabet.len() as u64;
        x.values.iter().fold(0, |acc, &v| acc * a + v as u64)
    }

    fn apply_values(&self, x: &[usize]) -> Vec<usize> {
        let a = self.alphabet.len();
        self.group
            .elements()
            .map(|g| {
                let pattern = self
                    .memory
                    .elements()
                    .iter()
                    .fold(0, |acc, &s| acc * a + x[self.group.mul(g, s)]);
                self.table[pattern]
            })
            .collect()
    }

    /// Image indices of the configurations numbered `range`.
    pub fn images(&self, range: Range<u64>) -> Vec<u64> {
        let a = self.alphabet.len() as u64;
        range
            .map(|i| {
                let x = self.configuration(i);
                self.apply_values(&x.values)
                    .iter()
                    .fold(0, |acc, &v| acc * a + v as u64)
            })
            .collect()
    }

    /// Exhaustive scan of the whole configuration space.
    pub fn analyze(&self, budget: u64) -> Result<ExhaustiveReport> {
        let total = self.configurations(budget)?;
        Ok(ExhaustiveReport::from_images(
            total,
            [self.images(0..total)],
        ))
    }

    pub fn is_injective(&self, budget: u64) -> Result<bool> {
        Ok(self.analyze(budget)?.injective())
    }

    pub fn is_surjective(&self, budget: u64) -> Result<bool> {
        Ok(self.analyze(budget)?.surjective())
    }

    pub fn check_injective_implies_surjective(&self, budget: u64) -> Result<ConsistencyVerdict> {
        let report = self.analyze(budget)?;
        let verdict = ConsistencyVerdict {
            injective: report.injective(),
            surjective: report.surjective(),
        };
        assert!(
            verdict.passes(),
            "injective map of a finite set to itself is not surjective"
        );
        Ok(verdict)
    }
}

impl CellularAutomaton for GeneralCA {
    type Value = usize;

    fn group(&self) -> &Group {
        &self.group
    }

    fn apply(&self, x: &Configuration<usize>) -> Result<Configuration<usize>> {
        if !same_group(&x.group, &self.group) {
            return Err(Error::invalid("configuration over a different group"));
        }
        if x.values.iter().any(|&v| v >= self.alphabet.len()) {
            return Err(Error::invalid("configuration value outside the alphabet"));
        }
        Ok(Configuration {
            group: self.group.clone(),
            values: self.apply_values(&x.values),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub configurations: u64,
    pub image_size: u64,
}

impl ExhaustiveReport {
    /// Combines image chunks covering all configurations, in any order.
    pub fn from_images<I: IntoIterator<Item = Vec<u64>>>(total: u64, chunks: I) -> Self {
        let mut seen = vec![false; total as usize];
        let mut image_size = 0;
        for chunk in chunks {
            for y in chunk {
                if !core::mem::replace(&mut seen[y as usize], true) {
                    image_size += 1;
                }
            }
        }
        ExhaustiveReport {
            configurations: total,
            image_size,
        }
    }

    pub fn injective(&self) -> bool {
        self.image_size == self.configurations
    }

    pub fn surjective(&self) -> bool {
        self.image_size == self.configurations
    }
}
