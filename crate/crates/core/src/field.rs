//! Exact arithmetic in `GF(p^k) = GF(p)[t] / (m(t))`.
//!
//! An element is its coefficient vector `(c_0, ..., c_{k-1})` over `GF(p)`,
//! stored packed as the base-`p` integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
//! The packed index doubles as the enumeration order of the field.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::error::{Error, Result};

/// Shared handle to an immutable field descriptor.
pub type Field = Arc<FiniteField>;

/// Default upper bound on `p^k` accepted by [`FiniteField::new`].
pub const DEFAULT_FIELD_BUDGET: u64 = 1 << 16;

/// Highest degree supported. Irreducibility is decided by trial division.
pub const MAX_DEGREE: usize = 16;

/// A field element, packed as described in the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: usize,
    q: u32,
    /// Monic, constant term first, length `k + 1`.
    modulus: Vec<u32>,
}

impl FiniteField {
    pub fn new(p: u32, k: usize) -> Result<Field> {
        Self::with_budget(p, k, DEFAULT_FIELD_BUDGET)
    }

    /// `GF(p^k)` with the canonical modulus: the lexicographically smallest
    /// monic irreducible polynomial of degree `k`, compared constant term first.
    /// For `k = 1` this is `t`, so elements are plain residues.
    pub fn with_budget(p: u32, k: usize, budget: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::invalid("extension degree must be positive"));
        }
        if k > MAX_DEGREE {
            return Err(Error::invalid(format!(
                "extension degree {k} exceeds supported maximum {MAX_DEGREE}"
            )));
        }
        let q = crate::require_budget(p as u64, k as u64, budget.min(u32::MAX as u64))? as u32;
        let modulus = canonical_modulus(p, k);
        Ok(Arc::new(FiniteField { p, k, q, modulus }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The class of `t` (for `k = 1`, the residue `0`).
    pub fn generator(&self) -> Elem {
        if self.k == 1 {
            Elem(0)
        } else {
            Elem(self.p)
        }
    }

    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.q
    }

    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let mut out = vec![0; self.k];
        self.unpack(x, &mut out);
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.k || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::invalid(
                "coefficient vector does not describe a field element",
            ));
        }
        Ok(self.pack(coeffs))
    }

    fn unpack(&self, x: Elem, out: &mut [u32]) {
        let mut v = x.0;
        for c in out.iter_mut().take(self.k) {
            *c = v % self.p;
            v /= self.p;
        }
    }

    fn pack(&self, coeffs: &[u32]) -> Elem {
        Elem(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out, mut scale) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * scale;
            x /= self.p;
            y /= self.p;
            scale *= self.p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.k == 1 {
            return Elem((self.p - a.0) % self.p);
        }
        let (mut x, mut out, mut scale) = (a.0, 0, 1);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * scale;
            x /= self.p;
            scale *= self.p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let p = self.p as u64;
        let k = self.k;
        let mut x = [0u32; MAX_DEGREE];
        let mut y = [0u32; MAX_DEGREE];
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let m = self.modulus[i] as u64;
                prod[d - k + i] = (prod[d - k + i] + (p - c) * m) % p;
            }
        }
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..k {
            out[i] = prod[i] as u32;
        }
        self.pack(&out[..k])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    /// `a / b`; `None` when `b` is zero.
    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `x^(p^m)`, the `m`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, x: Elem, m: u64) -> Elem {
        let m = m % self.k as u64;
        let mut y = x;
        for _ in 0..m {
            y = self.pow(y, self.p as u64);
        }
        y
    }

    /// All fixed points of `x ↦ x^(p^m)`, in enumeration order. There are
    /// `p^gcd(m, k)` of them (for `m = 0`, the whole field).
    pub fn fixed_subfield(&self, m: u64) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.frobenius(x, m) == x)
            .collect()
    }

    /// Compares coefficient vectors lexicographically, constant term first.
    pub fn cmp_lex(&self, a: Elem, b: Elem) -> Ordering {
        self.coeffs(a).cmp(&self.coeffs(b))
    }

    /// Residues for `k = 1`; otherwise a polynomial in `t`, ascending degree,
    /// e.g. `1+t^2` or `2t`.
    pub fn format_elem(&self, x: Elem) -> String {
        if self.k == 1 {
            return format!("{}", x.0);
        }
        let coeffs = self.coeffs(x);
        let mut out = String::new();
        for (i, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            if !out.is_empty() {
                out.push('+');
            }
            match (i, c) {
                (0, c) => write!(out, "{c}").unwrap(),
                (i, c) => {
                    if c != 1 {
                        write!(out, "{c}").unwrap();
                    }
                    out.push('t');
                    if i > 1 {
                        write!(out, "^{i}").unwrap();
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Inverse of [`format_elem`](Self::format_elem). Integer coefficients are
    /// reduced mod `p`; `t` is only accepted when `k > 1`.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::invalid("empty field element"));
        }
        let mut coeffs = vec![0u64; self.k];
        for term in text.split('+') {
            let term = term.trim();
            let (coef, exp) = match term.find('t') {
                None => (term, 0usize),
                Some(pos) => {
                    let exp = match term[pos + 1..].trim() {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|e| e.trim().parse().ok())
                            .ok_or_else(|| Error::invalid(format!("bad term {term:?}")))?,
                    };
                    (term[..pos].trim().trim_end_matches('*').trim(), exp)
                }
            };
            let c: u64 = if coef.is_empty() && exp > 0 {
                1
            } else {
                coef.parse()
                    .map_err(|_| Error::invalid(format!("bad coefficient in {term:?}")))?
            };
            if exp >= self.k {
                return Err(Error::invalid(format!(
                    "term {term:?} has degree {exp} but the field has degree {}",
                    self.k
                )));
            }
            coeffs[exp] = (coeffs[exp] + c % self.p as u64) % self.p as u64;
        }
        let coeffs: Vec<u32> = coeffs.into_iter().map(|c| c as u32).collect();
        Ok(self.pack(&coeffs))
    }

    /// Evaluates a polynomial over `GF(p)` (constant term first) at `x`.
    pub fn eval_prime_poly(&self, poly: &[u32], x: Elem) -> Elem {
        poly.iter()
            .rev()
            .fold(self.zero(), |acc, &c| self.add(self.mul(acc, x), Elem(c)))
    }
}

/// Parses `GF(p)` or `GF(p^k)`.
pub fn parse_field_spec(text: &str) -> Result<Field> {
    let t = text.trim();
    let inner = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::syntax_at(text, 0, "expected GF(p) or GF(p^k)"))?;
    let (p, k) = match inner.split_once('^') {
        Some((p, k)) => (p.trim(), k.trim()),
        None => (inner.trim(), "1"),
    };
    let p: u32 = p
        .parse()
        .map_err(|_| Error::syntax_at(text, 3, "expected a prime"))?;
    let k: usize = k
        .parse()
        .map_err(|_| Error::syntax_at(text, 3, "expected an extension degree"))?;
    FiniteField::new(p, k)
}

/// An injective ring homomorphism `GF(p^m) → GF(p^n)`, stored as a lookup table.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    images: Vec<Elem>,
}

impl Embedding {
    /// Sends the generator of `source` to the root of its modulus in `target`
    /// whose coefficient vector is lexicographically smallest.
    pub fn new(source: &Field, target: &Field) -> Result<Self> {
        if source.p != target.p {
            return Err(Error::NoEmbedding(format!(
                "characteristics differ ({} vs {})",
                source.p, target.p
            )));
        }
        if !target.k.is_multiple_of(source.k) {
            return Err(Error::NoEmbedding(format!(
                "degree {} does not divide degree {}",
                source.k, target.k
            )));
        }
        let root = target
            .elements()
            .filter(|&x| target.eval_prime_poly(&source.modulus, x) == target.zero())
            .min_by(|&a, &b| target.cmp_lex(a, b))
            .ok_or_else(|| Error::NoEmbedding("modulus has no root in target".into()))?;
        let mut powers = Vec::with_capacity(source.k);
        let mut acc = target.one();
        for _ in 0..source.k {
            powers.push(acc);
            acc = target.mul(acc, root);
        }
        let images = source
            .elements()
            .map(|x| {
                source
                    .coeffs(x)
                    .iter()
                    .zip(&powers)
                    .fold(target.zero(), |sum, (&c, &pw)| {
                        target.add(sum, target.mul(Elem(c), pw))
                    })
            })
            .collect();
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x.0 as usize]
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    /// Exhaustively checks that the table preserves `0`, `1`, `+`, `·` and is injective.
    pub fn verify(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.zero()) != t.zero() || self.apply(s.one()) != t.one() {
            return false;
        }
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.images.len() {
            return false;
        }
        s.elements().all(|a| {
            s.elements().all(|b| {
                self.apply(s.add(a, b)) == t.add(self.apply(a), self.apply(b))
                    && self.apply(s.mul(a, b)) == t.mul(self.apply(a), self.apply(b))
            })
        })
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn canonical_modulus(p: u32, k: usize) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    // Odometer with c_0 as the most significant digit.
    let mut low = vec![0u32; k];
    loop {
        let mut poly = low.clone();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
        let mut i = k;
        loop {
            // Irreducible polynomials exist in every degree.
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
        }
    }
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let mut div = vec![0u32; d + 1];
        div[d] = 1;
        loop {
            if poly_rem_is_zero(poly, &div, p) {
                return false;
            }
            let mut i = 0;
            while i < d {
                div[i] += 1;
                if div[i] < p {
                    break;
                }
                div[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic `b` over `GF(p)` is zero.
fn poly_rem_is_zero(a: &[u32], b: &[u32], p: u32) -> bool {
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    for top in (db..r.len()).rev() {
        let c = r[top] % p64;
        if c == 0 {
            continue;
        }
        for (x, &y) in r[top - db..=top].iter_mut().zip(b) {
            *x = (*x + (p64 - c) * y as u64) % p64;
        }
    }
    r[..db].iter().all(|&c| c % p64 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn prime_fields() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());
        assert_eq!(f2.modulus(), [0, 1]);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.inv(Elem(2)), Some(Elem(2)));
        assert_eq!(f3.inv(Elem(0)), None);
        assert!(matches!(
            FiniteField::new(4, 1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            FiniteField::new(2, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            FiniteField::with_budget(2, 10, 512),
            Err(Error::BudgetExceeded {
                required: Some(1024),
                budget: 512
            })
        ));
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), [1, 1, 1]);
        // Constant term compared first: 1 + t^2 + t^3 precedes 1 + t + t^3.
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), [1, 0, 1, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), [1, 0, 0, 1, 1]);
        // Over GF(3): t^2 + 1 has no root (−1 is a non-square mod 3).
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), [1, 0, 1]);
    }

    #[test]
    fn irreducibility_matches_root_count_for_low_degree() {
        // For degree 2 and 3, irreducible ⟺ no root in GF(p).
        for p in [2u32, 3, 5] {
            for deg in 2..=3usize {
                let total = p.pow(deg as u32);
                for n in 0..total {
                    let mut poly: Vec<u32> = (0..deg).map(|i| (n / p.pow(i as u32)) % p).collect();
                    poly.push(1);
                    let has_root = (0..p).any(|x| {
                        poly.iter()
                            .rev()
                            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64)
                            == 0
                    });
                    assert_eq!(is_irreducible(&poly, p), !has_root, "{poly:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn gf4_frobenius_of_generator() {
        let f = FiniteField::new(2, 2).unwrap();
        let t = f.generator();
        let t_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.frobenius(t, 1), t_plus_1);
        assert_eq!(f.mul(t, t), t_plus_1);
        for x in f.elements() {
            assert_eq!(f.frobenius(x, 0), x);
            assert_eq!(f.frobenius(x, 2), x);
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 2),
            (5, 1),
            (2, 4),
            (3, 3),
            (7, 2),
        ] {
            let f = FiniteField::new(p, k).unwrap();
            assert_eq!(f.elements().count() as u32, p.pow(k as u32));
            let all: Vec<Elem> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.mul(a, f.one()), a);
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if p.pow(k as u32) <= 27 {
                        for &c in &all {
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_fixing_prime_field() {
        for (p, k) in [(2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b), 1),
                        f.add(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b), 1),
                        f.mul(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                }
            }
            let fixed = f.fixed_subfield(1);
            let prime: Vec<Elem> = (0..p).map(Elem).collect();
            assert_eq!(fixed, prime);
        }
    }

    #[test]
    fn fixed_subfield_sizes() {
        let gf16 = FiniteField::new(2, 4).unwrap();
        assert_eq!(gf16.fixed_subfield(2).len(), 4);
        let gf9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(gf9.fixed_subfield(1), [Elem(0), Elem(1), Elem(2)]);
        for p in [2u32, 3] {
            for k in 1..=4usize {
                let f = FiniteField::new(p, k).unwrap();
                assert_eq!(f.fixed_subfield(k as u64).len() as u32, f.order());
                for m in 1..=6u64 {
                    let expect = p.pow(gcd(m, k as u64) as u32);
                    assert_eq!(
                        f.fixed_subfield(m).len() as u32,
                        expect,
                        "p={p} k={k} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn embeddings() {
        let gf2 = FiniteField::new(2, 1).unwrap();
        let gf4 = FiniteField::new(2, 2).unwrap();
        let gf8 = FiniteField::new(2, 3).unwrap();
        let gf16 = FiniteField::new(2, 4).unwrap();
        let e = Embedding::new(&gf2, &gf4).unwrap();
        assert_eq!(e.images(), [Elem(0), Elem(1)]);
        assert!(e.verify());
        let e = Embedding::new(&gf4, &gf16).unwrap();
        assert!(e.verify());
        let r = e.apply(gf4.generator());
        assert_eq!(gf16.eval_prime_poly(&[1, 1, 1], r), gf16.zero());
        assert!(matches!(
            Embedding::new(&gf4, &gf8),
            Err(Error::NoEmbedding(_))
        ));
        let gf9 = FiniteField::new(3, 2).unwrap();
        assert!(matches!(
            Embedding::new(&gf4, &gf9),
            Err(Error::NoEmbedding(_))
        ));
    }

    #[test]
    fn embedding_tower_agrees_on_prime_field() {
        for (p, m, k) in [(2u32, 2usize, 2usize), (3, 2, 2), (2, 1, 4), (2, 2, 3)] {
            let base = FiniteField::new(p, 1).unwrap();
            let mid = FiniteField::new(p, m).unwrap();
            let top = FiniteField::new(p, m * k).unwrap();
            let lower = Embedding::new(&base, &mid).unwrap();
            let upper = Embedding::new(&mid, &top).unwrap();
            let direct = Embedding::new(&base, &top).unwrap();
            assert!(upper.verify());
            for x in base.elements() {
                assert_eq!(upper.apply(lower.apply(x)), direct.apply(x));
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let f = FiniteField::new(3, 3).unwrap();
        for x in f.elements() {
            let s = f.format_elem(x);
            assert_eq!(f.parse_elem(&s).unwrap(), x, "{s}");
        }
        assert_eq!(f.format_elem(f.from_coeffs(&[1, 0, 2]).unwrap()), "1+2t^2");
        assert_eq!(
            f.parse_elem("2*t").unwrap(),
            f.from_coeffs(&[0, 2]).unwrap()
        );
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.parse_elem("7").unwrap(), Elem(2));
        assert!(f5.parse_elem("t").is_err());
    }

    #[test]
    fn field_spec_parsing() {
        let f = parse_field_spec("GF(3^2)").unwrap();
        assert_eq!((f.characteristic(), f.degree()), (3, 2));
        assert_eq!(parse_field_spec("GF(5)").unwrap().order(), 5);
        assert!(matches!(
            parse_field_spec("F(5)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_field_spec("GF(6)"),
            Err(Error::InvalidParameter(_))
        ));
    }
}
