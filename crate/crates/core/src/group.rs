//! Finite groups given by explicit multiplication tables.
//!
//! Elements are indices `0..n`; index `0` is always the identity. Left
//! translation by `g` is the row `g` of the multiplication table.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Shared handle to an immutable group.
pub type Group = Arc<FiniteGroup>;

/// Largest `n` accepted by [`FiniteGroup::symmetric`].
pub const MAX_SYMMETRIC_DEGREE: usize = 4;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a row-major table and labels, re-indexing so that the identity is `0`.
    fn build(order: usize, mut mul: Vec<usize>, labels: Option<Vec<String>>) -> Result<Group> {
        if order == 0 {
            return Err(Error::invalid("group must have at least one element"));
        }
        if mul.len() != order * order {
            return Err(Error::invalid("multiplication table must be square"));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::invalid(format!(
                "table entry {bad} out of range for order {order}"
            )));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e * order + a] == a && mul[a * order + e] == a))
            .ok_or(Error::InvalidGroup {
                reason: "no two-sided identity",
                triple: first_identity_violation(order, &mul),
            })?;
        if identity != 0 {
            // Swap indices 0 and `identity`.
            let swap = |x: usize| match x {
                0 => identity,
                x if x == identity => 0,
                x => x,
            };
            let old = mul.clone();
            for a in 0..order {
                for b in 0..order {
                    mul[a * order + b] = swap(old[swap(a) * order + swap(b)]);
                }
            }
        }
        let labels = match labels {
            Some(mut labels) => {
                labels.swap(0, identity);
                labels
            }
            None => (0..order)
                .map(|i| {
                    if i == 0 {
                        "e".to_string()
                    } else {
                        format!("a{i}")
                    }
                })
                .collect(),
        };
        for a in 0..order {
            for b in 0..order {
                let ab = mul[a * order + b];
                for c in 0..order {
                    if mul[ab * order + c] != mul[a * order + mul[b * order + c]] {
                        return Err(Error::InvalidGroup {
                            reason: "associativity fails",
                            triple: (a, b, c),
                        });
                    }
                }
            }
        }
        let mut inv = vec![0; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a * order + b] == 0 && mul[b * order + a] == 0) {
                Some(b) => inv[a] = b,
                None => {
                    return Err(Error::InvalidGroup {
                        reason: "element has no two-sided inverse",
                        triple: (a, a, 0),
                    })
                }
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return Err(Error::invalid(format!(
                    "label {l:?} is not a valid element label"
                )));
            }
            if labels[..i].contains(l) {
                return Err(Error::invalid(format!("duplicate label {l:?}")));
            }
        }
        if labels[0] != "e" {
            return Err(Error::invalid("the identity must be labelled \"e\""));
        }
        Ok(Arc::new(FiniteGroup {
            order,
            mul,
            inv,
            labels,
        }))
    }

    /// The cyclic group `C_n` with `mul(i, j) = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::invalid("cyclic group order must be positive"));
        }
        let mul = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        let labels = (0..n).map(power_label).collect();
        Self::build(n, mul, Some(labels))
    }

    /// The dihedral group of order `2n`, elements `r^i s^j` indexed by `i + n*j`.
    pub fn dihedral(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::invalid("dihedral group parameter must be positive"));
        }
        let order = 2 * n;
        let decode = |x: usize| (x % n, x / n);
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                let (i, j) = decode(a);
                let (k, l) = decode(b);
                // r^i s^j r^k s^l = r^(i ± k) s^(j + l), using s r = r^-1 s.
                let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                mul[a * order + b] = rot + n * ((j + l) % 2);
            }
        }
        let labels = (0..order)
            .map(|x| {
                let (i, j) = decode(x);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (i, 0) => rotation_label(i),
                    (0, _) => "s".to_string(),
                    (i, _) => format!("{}s", rotation_label(i)),
                }
            })
            .collect();
        Self::build(order, mul, Some(labels))
    }

    /// The symmetric group on `n ≤ 4` points.
    ///
    /// Permutations are listed in lexicographic order of their one-line notation,
    /// so the identity comes first. Products compose right to left:
    /// `(ab)(x) = a(b(x))`.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n == 0 {
            return Err(Error::invalid("symmetric group degree must be positive"));
        }
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::UnsupportedSpec(format!(
                "symmetric:{n} exceeds the supported degree {MAX_SYMMETRIC_DEGREE}"
            )));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).unwrap();
        let order = perms.len();
        let mut mul = vec![0; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let prod: Vec<usize> = pb.iter().map(|&x| pa[x]).collect();
                mul[a * order + b] = index(&prod);
            }
        }
        let labels = perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == 0 {
                    "e".to_string()
                } else {
                    let mut s = String::from("p");
                    for &x in p {
                        s.push(char::from_digit(x as u32, 10).unwrap());
                    }
                    s
                }
            })
            .collect();
        Self::build(order, mul, Some(labels))
    }

    /// `G × H` with componentwise multiplication; `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Group> {
        let (m, n) = (g.order, h.order);
        let order = m * n;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (a, b) = (x / n, x % n);
                let (c, d) = (y / n, y % n);
                mul[x * order + y] = g.mul(a, c) * n + h.mul(b, d);
            }
        }
        let labels = (0..order)
            .map(|x| {
                if x == 0 {
                    "e".to_string()
                } else {
                    format!(
                        "{}.{}",
                        product_factor_label(g.label(x / n)),
                        product_factor_label(h.label(x % n))
                    )
                }
            })
            .collect();
        Self::build(order, mul, Some(labels))
    }

    /// Builds a group from a raw square table. The identity is moved to index `0`
    /// if needed; elements are labelled `e, a1, a2, ...` after re-indexing.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::invalid("multiplication table must be square"));
        }
        let mul: Vec<usize> = rows.iter().flatten().copied().collect();
        Self::build(order, mul, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Row `g` of the table: `h ↦ g·h`.
    pub fn left_translation(&self, g: usize) -> &[usize] {
        &self.mul[g * self.order..(g + 1) * self.order]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The multiplication table as rows, for display or re-parsing.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}

fn first_identity_violation(order: usize, mul: &[usize]) -> (usize, usize, usize) {
    // Report, for candidate 0, the first element it fails to fix.
    (0..order)
        .find_map(|a| {
            if mul[a] != a {
                Some((0, a, mul[a]))
            } else if mul[a * order] != a {
                Some((a, 0, mul[a * order]))
            } else {
                None
            }
        })
        .unwrap_or((0, 0, 0))
}

fn power_label(i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => "g".to_string(),
        i => format!("g{i}"),
    }
}

fn rotation_label(i: usize) -> String {
    if i == 1 {
        "r".to_string()
    } else {
        format!("r{i}")
    }
}

fn product_factor_label(l: &str) -> String {
    if l.contains('.') {
        format!("[{l}]")
    } else {
        l.to_string()
    }
}

/// Labels are non-empty and built from ASCII alphanumerics and `. [ ] _`,
/// starting with a letter or `[`.
pub(crate) fn valid_label(l: &str) -> bool {
    let mut chars = l.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '[')
        && chars.all(is_label_char)
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '.' | '[' | ']' | '_')
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// True when both handles denote the same group.
pub fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A sorted, duplicate-free set of elements of one group.
#[derive(Clone, Debug)]
pub struct Subset {
    group: Group,
    elems: Vec<usize>,
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.elems == other.elems
    }
}

impl Eq for Subset {}

impl Subset {
    /// Sorts and deduplicates `elems`; fails on out-of-range indices.
    pub fn new(group: &Group, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        if let Some(&bad) = elems.iter().find(|&&x| x >= group.order()) {
            return Err(Error::invalid(format!(
                "element index {bad} out of range for group of order {}",
                group.order()
            )));
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(Subset {
            group: group.clone(),
            elems,
        })
    }

    pub fn all(group: &Group) -> Self {
        Subset {
            group: group.clone(),
            elems: group.elements().collect(),
        }
    }

    pub fn identity(group: &Group) -> Self {
        Subset {
            group: group.clone(),
            elems: vec![0],
        }
    }

    /// Parses a comma-separated list of element labels, or `all`.
    pub fn from_labels(group: &Group, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "all" {
            return Ok(Self::all(group));
        }
        let mut elems = Vec::new();
        for part in text.split(',') {
            let label = part.trim();
            match group.index_of(label) {
                Some(i) => elems.push(i),
                None => return Err(Error::invalid(format!("unknown element label {label:?}"))),
            }
        }
        Self::new(group, elems)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elems.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.elems.iter().all(|&g| other.contains(g))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_same(other)?;
        Subset::new(&self.group, self.elems.iter().chain(&other.elems).copied())
    }

    /// `{s·t : s ∈ self, t ∈ other}`.
    pub fn product_set(&self, other: &Subset) -> Result<Subset> {
        self.check_same(other)?;
        let mut seen = vec![false; self.group.order()];
        for &s in &self.elems {
            for &t in &other.elems {
                seen[self.group.mul(s, t)] = true;
            }
        }
        Ok(Subset {
            group: self.group.clone(),
            elems: (0..seen.len()).filter(|&g| seen[g]).collect(),
        })
    }

    pub fn labels(&self) -> Vec<&str> {
        self.elems.iter().map(|&g| self.group.label(g)).collect()
    }

    fn check_same(&self, other: &Subset) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::invalid("subsets belong to different groups"))
        }
    }
}

/// Parses a group spec:
///
/// ```text
/// spec   := family ":" nat
///         | "product(" spec "," spec ")"
///         | "table:" "[" row ("," row)* "]"
/// row    := "[" nat ("," nat)* "]"
/// family := "cyclic" | "dihedral" | "symmetric"
/// ```
///
/// Whitespace is allowed between tokens.
pub fn parse_group_spec(text: &str) -> Result<Group> {
    let mut p = SpecParser { text, pos: 0 };
    let g = p.spec()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input after group spec"));
    }
    Ok(g)
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn error(&self, msg: &str) -> Error {
        Error::syntax_at(self.text, self.pos, msg)
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..start + len]
    }

    fn nat(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a natural number"));
        }
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += len;
        Ok(n)
    }

    fn spec(&mut self) -> Result<Group> {
        let start = self.pos;
        let word = self.ident().to_string();
        match word.as_str() {
            "product" => {
                self.expect("(")?;
                let g = self.spec()?;
                self.expect(",")?;
                let h = self.spec()?;
                self.expect(")")?;
                FiniteGroup::direct_product(&g, &h)
            }
            "table" => {
                self.expect(":")?;
                self.expect("[")?;
                let mut rows = Vec::new();
                loop {
                    self.expect("[")?;
                    let mut row = vec![self.nat()?];
                    while self.eat(",") {
                        row.push(self.nat()?);
                    }
                    self.expect("]")?;
                    rows.push(row);
                    if !self.eat(",") {
                        break;
                    }
                }
                self.expect("]")?;
                FiniteGroup::from_table(&rows)
            }
            "cyclic" | "dihedral" | "symmetric" => {
                self.expect(":")?;
                let n = self.nat()?;
                match word.as_str() {
                    "cyclic" => FiniteGroup::cyclic(n),
                    "dihedral" => FiniteGroup::dihedral(n),
                    _ => FiniteGroup::symmetric(n),
                }
            }
            "" => {
                self.pos = start;
                Err(self.error("expected a group family"))
            }
            other => Err(Error::UnsupportedSpec(format!(
                "unknown group family {other:?}"
            ))),
        }
    }
}
