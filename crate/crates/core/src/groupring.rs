//! The group ring `K[G]`, matrices over it, and exhaustive witness searches.
//!
//! An element of `K[G]` is a finitely supported map `G → K`, stored sparsely.
//! Multiplication is convolution: `(αβ)(g) = Σ_{h₁h₂ = g} α(h₁) β(h₂)`.
//!
//! The probes look for matrices `A, B ∈ Mat_d(K[G])` with entry supports in a
//! given `S ⊂ G` such that `AB = 1` and `BA ≠ 1`. Candidates `A` are enumerated
//! in a fixed order; for each one, `AB = 1` is a linear system in the
//! coefficients of `B`, solved exactly. Over a finite group the search can
//! never succeed (a finite ring is stably finite), which makes the probes a
//! useful end-to-end consistency check.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::group::{same_group, Group, Subset};
use crate::linalg::Matrix;

fn same_field(a: &Field, b: &Field) -> bool {
    alloc::sync::Arc::ptr_eq(a, b) || **a == **b
}

/// An element of `K[G]` with no stored zero coefficients.
#[derive(Clone, Debug)]
pub struct GroupRingElement {
    group: Group,
    field: Field,
    coeffs: BTreeMap<usize, Elem>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
            && same_field(&self.field, &other.field)
            && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn zero(group: &Group, field: &Field) -> Self {
        GroupRingElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Group, field: &Field) -> Self {
        Self::delta(group, field, 0)
    }

    /// The basis element `δ_g`.
    pub fn delta(group: &Group, field: &Field, g: usize) -> Self {
        Self::monomial(group, field, field.one(), g)
    }

    /// `c·δ_g`.
    pub fn monomial(group: &Group, field: &Field, c: Elem, g: usize) -> Self {
        assert!(g < group.order(), "group element index out of range");
        let mut out = Self::zero(group, field);
        if c != field.zero() {
            out.coeffs.insert(g, c);
        }
        out
    }

    /// Sums repeated indices; drops zero coefficients.
    pub fn from_terms(
        group: &Group,
        field: &Field,
        terms: impl IntoIterator<Item = (usize, Elem)>,
    ) -> Result<Self> {
        let mut out = Self::zero(group, field);
        for (g, c) in terms {
            if g >= group.order() || !field.contains(c) {
                return Err(Error::invalid("term outside the group ring"));
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    /// From a coefficient per group element, in index order.
    pub fn from_dense(group: &Group, field: &Field, dense: &[Elem]) -> Self {
        assert_eq!(dense.len(), group.order());
        GroupRingElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != Elem(0))
                .map(|(g, &c)| (g, c))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Elem> {
        let mut out = vec![Elem(0); self.group.order()];
        for (&g, &c) in &self.coeffs {
            out[g] = c;
        }
        out
    }

    fn add_term(&mut self, g: usize, c: Elem) {
        let slot = self.coeffs.entry(g).or_insert(Elem(0));
        *slot = self.field.add(*slot, c);
        if *slot == Elem(0) {
            self.coeffs.remove(&g);
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeff(&self, g: usize) -> Elem {
        self.coeffs.get(&g).copied().unwrap_or(Elem(0))
    }

    /// Nonzero `(g, α(g))` pairs in element order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Elem)> + '_ {
        self.coeffs.iter().map(|(&g, &c)| (g, c))
    }

    pub fn support(&self) -> Subset {
        Subset::new(&self.group, self.coeffs.keys().copied()).expect("indices are in range")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&self.field.one())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::invalid("group ring elements over different groups"));
        }
        if !same_field(&self.field, &other.field) {
            return Err(Error::invalid("group ring elements over different fields"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&g, &c) in &other.coeffs {
            out.add_term(g, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: Elem) -> Self {
        let mut out = Self::zero(&self.group, &self.field);
        if c != Elem(0) {
            for (&g, &a) in &self.coeffs {
                out.coeffs.insert(g, self.field.mul(c, a));
            }
        }
        out
    }

    /// The convolution product `self · other`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.group, &self.field);
        for (&h1, &a) in &self.coeffs {
            for (&h2, &b) in &other.coeffs {
                out.add_term(self.group.mul(h1, h2), self.field.mul(a, b));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElement {
    /// `c1*label1 + c2*label2`, or `0`. Extension-field coefficients are
    /// parenthesized when they contain `+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (&g, &c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let coeff = self.field.format_elem(c);
            if coeff.contains('+') {
                write!(f, "({coeff})*{}", self.group.label(g))?;
            } else {
                write!(f, "{coeff}*{}", self.group.label(g))?;
            }
        }
        Ok(())
    }
}

/// A `d × d` matrix over `K[G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    d: usize,
    group: Group,
    field: Field,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn zero(group: &Group, field: &Field, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("matrix dimension must be positive"));
        }
        Ok(GroupRingMatrix {
            d,
            group: group.clone(),
            field: field.clone(),
            entries: vec![GroupRingElement::zero(group, field); d * d],
        })
    }

    pub fn identity(group: &Group, field: &Field, d: usize) -> Result<Self> {
        let mut m = Self::zero(group, field, d)?;
        for i in 0..d {
            m.entries[i * d + i] = GroupRingElement::one(group, field);
        }
        Ok(m)
    }

    /// Row-major entries; all must share one group and field.
    pub fn from_entries(d: usize, entries: Vec<GroupRingElement>) -> Result<Self> {
        if d == 0 || entries.len() != d * d {
            return Err(Error::invalid(format!(
                "expected {} entries for a {d}×{d} matrix",
                d * d
            )));
        }
        let (group, field) = (entries[0].group.clone(), entries[0].field.clone());
        for e in &entries {
            if !same_group(&e.group, &group) || !same_field(&e.field, &field) {
                return Err(Error::invalid("matrix entries over different rings"));
            }
        }
        Ok(GroupRingMatrix {
            d,
            group,
            field,
            entries,
        })
    }

    /// From a dense coefficient array indexed by `((i*d + j)*|G| + g)`.
    pub fn from_dense(group: &Group, field: &Field, d: usize, dense: &[Elem]) -> Self {
        let n = group.order();
        assert_eq!(dense.len(), d * d * n);
        GroupRingMatrix {
            d,
            group: group.clone(),
            field: field.clone(),
            entries: dense
                .chunks(n)
                .map(|c| GroupRingElement::from_dense(group, field, c))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Elem> {
        self.entries.iter().flat_map(|e| e.to_dense()).collect()
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.d + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: GroupRingElement) -> Result<()> {
        if !same_group(&value.group, &self.group) || !same_field(&value.field, &self.field) {
            return Err(Error::invalid("entry over a different ring"));
        }
        self.entries[i * self.d + j] = value;
        Ok(())
    }

    pub fn entries(&self) -> &[GroupRingElement] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        (0..self.d).all(|i| {
            (0..self.d).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Union of the supports of all entries.
    pub fn support(&self) -> Subset {
        Subset::new(
            &self.group,
            self.entries.iter().flat_map(|e| e.coeffs.keys().copied()),
        )
        .expect("indices are in range")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::invalid("matrix dimensions do not match"));
        }
        if !same_group(&self.group, &other.group) || !same_field(&self.field, &other.field) {
            return Err(Error::invalid("matrices over different rings"));
        }
        let d = self.d;
        let mut out = Self::zero(&self.group, &self.field, d)?;
        for i in 0..d {
            for j in 0..d {
                let mut acc = GroupRingElement::zero(&self.group, &self.field);
                for k in 0..d {
                    acc = acc.add(&self.entry(i, k).convolve(other.entry(k, j))?)?;
                }
                out.entries[i * d + j] = acc;
            }
        }
        Ok(out)
    }

    /// Nonzero coefficients as `(row, col, group label, field element)` with
    /// 1-based row and column.
    pub fn quadruples(&self) -> Vec<(usize, usize, String, String)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            for j in 0..self.d {
                for (g, c) in self.entry(i, j).terms() {
                    out.push((
                        i + 1,
                        j + 1,
                        String::from(self.group.label(g)),
                        self.field.format_elem(c),
                    ));
                }
            }
        }
        out
    }

    /// Inverse of [`quadruples`](Self::quadruples). Repeated positions add up.
    pub fn from_quadruples(
        group: &Group,
        field: &Field,
        d: usize,
        quads: &[(usize, usize, String, String)],
    ) -> Result<Self> {
        let mut m = Self::zero(group, field, d)?;
        for (i, j, label, coeff) in quads {
            if *i == 0 || *j == 0 || *i > d || *j > d {
                return Err(Error::invalid(format!(
                    "position ({i}, {j}) outside a {d}×{d} matrix"
                )));
            }
            let g = group
                .index_of(label)
                .ok_or_else(|| Error::invalid(format!("unknown element label {label:?}")))?;
            let c = field.parse_elem(coeff)?;
            m.entries[(i - 1) * d + (j - 1)].add_term(g, c);
        }
        Ok(m)
    }
}

/// Convolution on dense coefficient vectors.
fn convolve_dense(group: &Group, field: &Field, a: &[Elem], b: &[Elem], out: &mut [Elem]) {
    for (h1, &x) in a.iter().enumerate() {
        if x == Elem(0) {
            continue;
        }
        let row = group.left_translation(h1);
        for (&g, &y) in row.iter().zip(b) {
            if y != Elem(0) {
                out[g] = field.add(out[g], field.mul(x, y));
            }
        }
    }
}

/// Dense matrix product in `Mat_d(K[G])`, layout `((i*d + j)*n + g)`.
fn mat_mul_dense(group: &Group, field: &Field, d: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = group.order();
    let mut out = vec![Elem(0); d * d * n];
    for i in 0..d {
        for j in 0..d {
            let cell = &mut out[(i * d + j) * n..(i * d + j + 1) * n];
            for k in 0..d {
                convolve_dense(
                    group,
                    field,
                    &a[(i * d + k) * n..(i * d + k + 1) * n],
                    &b[(k * d + j) * n..(k * d + j + 1) * n],
                    cell,
                );
            }
        }
    }
    out
}

fn is_identity_dense(d: usize, n: usize, m: &[Elem]) -> bool {
    m.iter().enumerate().all(|(idx, &c)| {
        let (cell, g) = (idx / n, idx % n);
        let diag = cell / d == cell % d && g == 0;
        c == if diag { Elem(1) } else { Elem(0) }
    })
}

/// Solves `AB = 1` for `B` with entry supports in `support`, on dense data.
///
/// The system splits by the column `j` of `B`; all columns share the matrix
/// `C[(i, g), (k, t)] = A_{ik}(g t⁻¹)` and differ only in the right-hand side,
/// so one reduction handles all `d` of them.
fn solve_right_inverse_dense(
    group: &Group,
    field: &Field,
    d: usize,
    a: &[Elem],
    support: &[usize],
) -> Option<Vec<Elem>> {
    let n = group.order();
    let m = support.len();
    let unknowns = d * m;
    let mut aug = Matrix::zeros(d * n, unknowns + d);
    for i in 0..d {
        for g in 0..n {
            let row = i * n + g;
            for k in 0..d {
                let entry = &a[(i * d + k) * n..(i * d + k + 1) * n];
                for (ti, &t) in support.iter().enumerate() {
                    aug[(row, k * m + ti)] = entry[group.mul(g, group.inv(t))];
                }
            }
            if g == 0 {
                aug[(row, unknowns + i)] = Elem(1);
            }
        }
    }
    let pivots = aug.rref(field);
    let rank = pivots.iter().take_while(|&&c| c < unknowns).count();
    // Any pivot in the right-hand block means some column system is inconsistent.
    if rank < pivots.len() {
        return None;
    }
    let mut b = vec![Elem(0); d * d * n];
    for (r, &c) in pivots.iter().enumerate() {
        let (k, ti) = (c / m, c % m);
        for j in 0..d {
            b[(k * d + j) * n + support[ti]] = aug[(r, unknowns + j)];
        }
    }
    Some(b)
}

/// Finds `B` with entry supports in `support_b` and `AB = 1`, if one exists.
///
/// Exact Gaussian elimination; pivots are chosen first-found and free
/// coefficients are set to zero, so the answer is deterministic.
pub fn solve_right_inverse(
    a: &GroupRingMatrix,
    support_b: &Subset,
) -> Result<Option<GroupRingMatrix>> {
    if !same_group(a.group(), support_b.group()) {
        return Err(Error::invalid("support belongs to a different group"));
    }
    let dense = a.to_dense();
    Ok(
        solve_right_inverse_dense(&a.group, &a.field, a.d, &dense, support_b.elements())
            .map(|b| GroupRingMatrix::from_dense(&a.group, &a.field, a.d, &b)),
    )
}

/// A pair with `AB = 1` and `BA ≠ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: GroupRingMatrix,
    pub b: GroupRingMatrix,
}

impl Witness {
    /// Recomputes both products with the sparse arithmetic.
    pub fn verify(&self) -> bool {
        match (self.a.mul(&self.b), self.b.mul(&self.a)) {
            (Ok(ab), Ok(ba)) => ab.is_identity() && !ba.is_identity(),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    WitnessFound(Witness),
    NoneInScope,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ProbeStats {
    /// Candidates `A` examined, up to and including the reported witness.
    pub examined: u64,
    /// Of those, how many had a right inverse supported in `S`.
    pub right_invertible: u64,
}

impl ProbeStats {
    pub fn merge(self, other: ProbeStats) -> ProbeStats {
        ProbeStats {
            examined: self.examined + other.examined,
            right_invertible: self.right_invertible + other.right_invertible,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeVerdict {
    pub outcome: Outcome,
    /// `q^(d²|S|)`.
    pub search_space: u64,
    pub stats: ProbeStats,
    /// Enumeration index of the witness, when one was found.
    pub witness_index: Option<u64>,
}

impl ProbeVerdict {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::WitnessFound(w) => Some(w),
            Outcome::NoneInScope => None,
        }
    }

    pub fn found(&self) -> bool {
        self.witness().is_some()
    }
}

/// Result of scanning one contiguous range of candidates.
#[derive(Clone, Debug)]
pub struct ChunkResult {
    pub range: Range<u64>,
    pub first_witness: Option<(u64, Witness)>,
    pub stats: ProbeStats,
}

/// Enumeration of candidates `A ∈ Mat_d(K[G])` with entry supports in `S`.
///
/// Candidate `n` is read as `d²|S|` base-`q` digits, most significant first,
/// assigned to positions `(row, col, s)` in lexicographic order; digit values
/// are field elements in enumeration order.
#[derive(Clone, Debug)]
pub struct StableFinitenessProbe {
    group: Group,
    field: Field,
    d: usize,
    support: Subset,
    candidates: u64,
}

impl StableFinitenessProbe {
    pub fn new(
        group: &Group,
        field: &Field,
        d: usize,
        support: &Subset,
        budget: u64,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("matrix dimension must be positive"));
        }
        if !same_group(group, support.group()) {
            return Err(Error::invalid("support belongs to a different group"));
        }
        if support.is_empty() {
            return Err(Error::invalid("support must be nonempty"));
        }
        let positions = (d * d * support.len()) as u64;
        let candidates = crate::require_budget(field.order() as u64, positions, budget)?;
        Ok(StableFinitenessProbe {
            group: group.clone(),
            field: field.clone(),
            d,
            support: support.clone(),
            candidates,
        })
    }

    pub fn candidates(&self) -> u64 {
        self.candidates
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    fn candidate_dense(&self, index: u64) -> Vec<Elem> {
        let n = self.group.order();
        let m = self.support.len();
        let q = self.field.order() as u64;
        let mut dense = vec![Elem(0); self.d * self.d * n];
        let mut rest = index;
        // Least significant digit is the last position.
        for pos in (0..self.d * self.d * m).rev() {
            let (cell, si) = (pos / m, pos % m);
            dense[cell * n + self.support.elements()[si]] = Elem((rest % q) as u32);
            rest /= q;
        }
        dense
    }

    pub fn candidate(&self, index: u64) -> GroupRingMatrix {
        GroupRingMatrix::from_dense(
            &self.group,
            &self.field,
            self.d,
            &self.candidate_dense(index),
        )
    }

    /// Scans `range` (clamped to the candidate count) and stops at the first witness.
    pub fn scan(&self, range: Range<u64>) -> ChunkResult {
        let range = range.start.min(self.candidates)..range.end.min(self.candidates);
        let mut stats = ProbeStats::default();
        let (d, n) = (self.d, self.group.order());
        for index in range.clone() {
            stats.examined += 1;
            let a = self.candidate_dense(index);
            let Some(b) =
                solve_right_inverse_dense(&self.group, &self.field, d, &a, self.support.elements())
            else {
                continue;
            };
            stats.right_invertible += 1;
            let ba = mat_mul_dense(&self.group, &self.field, d, &b, &a);
            if !is_identity_dense(d, n, &ba) {
                let witness = Witness {
                    a: GroupRingMatrix::from_dense(&self.group, &self.field, d, &a),
                    b: GroupRingMatrix::from_dense(&self.group, &self.field, d, &b),
                };
                return ChunkResult {
                    range,
                    first_witness: Some((index, witness)),
                    stats,
                };
            }
        }
        ChunkResult {
            range,
            first_witness: None,
            stats,
        }
    }

    /// Reduces chunk results to the verdict a sequential scan would give:
    /// the witness with the smallest index wins, and only chunks at or before
    /// it contribute statistics. Chunks must cover the candidate range.
    pub fn reduce(&self, mut chunks: Vec<ChunkResult>) -> ProbeVerdict {
        chunks.sort_by_key(|c| c.range.start);
        let mut stats = ProbeStats::default();
        for chunk in chunks {
            stats = stats.merge(chunk.stats);
            if let Some((index, witness)) = chunk.first_witness {
                return ProbeVerdict {
                    outcome: Outcome::WitnessFound(witness),
                    search_space: self.candidates,
                    stats,
                    witness_index: Some(index),
                };
            }
        }
        ProbeVerdict {
            outcome: Outcome::NoneInScope,
            search_space: self.candidates,
            stats,
            witness_index: None,
        }
    }

    pub fn run(&self) -> ProbeVerdict {
        let chunk = self.scan(0..self.candidates);
        self.reduce(vec![chunk])
    }
}

/// Searches `Mat_d(K[G])` with supports in `S` for `AB = 1`, `BA ≠ 1`.
pub fn probe_stable_finiteness(
    group: &Group,
    field: &Field,
    d: usize,
    support: &Subset,
    budget: u64,
) -> Result<ProbeVerdict> {
    Ok(StableFinitenessProbe::new(group, field, d, support, budget)?.run())
}

/// The `d = 1` case: `ab = 1`, `ba ≠ 1` in `K[G]`.
pub fn probe_direct_finiteness(
    group: &Group,
    field: &Field,
    support: &Subset,
    budget: u64,
) -> Result<ProbeVerdict> {
    probe_stable_finiteness(group, field, 1, support, budget)
}

/// Both sides of the equivalence "K[G] stably finite ⟺ K[G×H] directly finite
/// for all finite H", each restricted to a finite scope.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub product: Group,
    /// `probe_direct_finiteness` on `K[G×H]` with `S = G×H`.
    pub direct_on_product: ProbeVerdict,
    /// `probe_stable_finiteness` on `K[G]` with `S = G`, for `d = 1..=|H|`.
    pub stable_on_base: Vec<(usize, ProbeVerdict)>,
}

impl CrosscheckReport {
    pub fn direct_witness(&self) -> bool {
        self.direct_on_product.found()
    }

    pub fn stable_witness(&self) -> bool {
        self.stable_on_base.iter().any(|(_, v)| v.found())
    }

    /// True when both sides agree. Disagreement is not a contradiction of the
    /// theorem, which ranges over every `H` and every `d`.
    pub fn consistent(&self) -> bool {
        self.direct_witness() == self.stable_witness()
    }
}

pub fn dykema_juschenko_crosscheck(
    g: &Group,
    h: &Group,
    field: &Field,
    budget: u64,
) -> Result<CrosscheckReport> {
    let product = crate::group::FiniteGroup::direct_product(g, h)?;
    // Validate every scope before running anything.
    let direct = StableFinitenessProbe::new(&product, field, 1, &Subset::all(&product), budget)?;
    let base = Subset::all(g);
    let stable = (1..=h.order())
        .map(|d| StableFinitenessProbe::new(g, field, d, &base, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrosscheckReport {
        direct_on_product: direct.run(),
        stable_on_base: stable.iter().map(|p| (p.dim(), p.run())).collect(),
        product,
    })
}

/// Elements `α ∈ K[G]` with support in `S`, in enumeration order.
fn elements_supported_in<'a>(
    group: &'a Group,
    field: &'a Field,
    support: &'a Subset,
) -> impl Iterator<Item = Vec<Elem>> + 'a {
    let q = field.order() as u64;
    let m = support.len();
    let total = crate::checked_pow(q, m as u64).unwrap_or(u64::MAX);
    (0..total).map(move |mut index| {
        let mut dense = vec![Elem(0); group.order()];
        for si in (0..m).rev() {
            dense[support.elements()[si]] = Elem((index % q) as u32);
            index /= q;
        }
        dense
    })
}

fn check_search(group: &Group, support: &Subset) -> Result<()> {
    if !same_group(group, support.group()) {
        return Err(Error::invalid("support belongs to a different group"));
    }
    if support.is_empty() {
        return Err(Error::invalid("support must be nonempty"));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitWitness {
    pub element: GroupRingElement,
    pub inverse: GroupRingElement,
    /// `c·δ_g` with `c ≠ 0`.
    pub trivial: bool,
}

/// All units supported in `S`. Inverses may have any support in `G`.
pub fn search_units(
    group: &Group,
    field: &Field,
    support: &Subset,
    budget: u64,
) -> Result<Vec<UnitWitness>> {
    check_search(group, support)?;
    crate::require_budget(field.order() as u64, support.len() as u64, budget)?;
    let all = Subset::all(group);
    let n = group.order();
    let mut out = Vec::new();
    for alpha in elements_supported_in(group, field, support) {
        let Some(beta) = solve_right_inverse_dense(group, field, 1, &alpha, all.elements()) else {
            continue;
        };
        let mut left = vec![Elem(0); n];
        convolve_dense(group, field, &beta, &alpha, &mut left);
        if !is_identity_dense(1, n, &left) {
            continue;
        }
        let element = GroupRingElement::from_dense(group, field, &alpha);
        out.push(UnitWitness {
            trivial: element.coeffs.len() == 1,
            element,
            inverse: GroupRingElement::from_dense(group, field, &beta),
        });
    }
    Ok(out)
}

/// All ordered pairs `(α, β)` of nonzero elements supported in `S` with `αβ = 0`.
pub fn search_zero_divisors(
    group: &Group,
    field: &Field,
    support: &Subset,
    budget: u64,
) -> Result<Vec<(GroupRingElement, GroupRingElement)>> {
    check_search(group, support)?;
    crate::require_budget(field.order() as u64, 2 * support.len() as u64, budget)?;
    let n = group.order();
    let nonzero: Vec<Vec<Elem>> = elements_supported_in(group, field, support)
        .filter(|v| v.iter().any(|&c| c != Elem(0)))
        .collect();
    let mut out = Vec::new();
    let mut prod = vec![Elem(0); n];
    for alpha in &nonzero {
        for beta in &nonzero {
            prod.iter_mut().for_each(|c| *c = Elem(0));
            convolve_dense(group, field, alpha, beta, &mut prod);
            if prod.iter().all(|&c| c == Elem(0)) {
                out.push((
                    GroupRingElement::from_dense(group, field, alpha),
                    GroupRingElement::from_dense(group, field, beta),
                ));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentWitness {
    pub element: GroupRingElement,
    /// `0` or `1`.
    pub trivial: bool,
}

/// All `α` supported in `S` with `α² = α`.
pub fn search_idempotents(
    group: &Group,
    field: &Field,
    support: &Subset,
    budget: u64,
) -> Result<Vec<IdempotentWitness>> {
    check_search(group, support)?;
    crate::require_budget(field.order() as u64, support.len() as u64, budget)?;
    let n = group.order();
    let mut out = Vec::new();
    for alpha in elements_supported_in(group, field, support) {
        let mut sq = vec![Elem(0); n];
        convolve_dense(group, field, &alpha, &alpha, &mut sq);
        if sq == alpha {
            let element = GroupRingElement::from_dense(group, field, &alpha);
            out.push(IdempotentWitness {
                trivial: element.is_zero() || element.is_one(),
                element,
            });
        }
    }
    Ok(out)
}
