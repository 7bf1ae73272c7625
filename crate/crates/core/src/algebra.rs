//! The algebras H(lambda, mu) (odd characteristic) and B(V)#kG (characteristic 2),
//! realised on their normal-form bases with products computed by iterated
//! left multiplication by the generators g, a, b.
//!
//! Every basis element is `g^i * w` with `0 <= i < n` and `w` a normal word in
//! a and b: `a^j b^k` (`0 <= j, k < p`) for odd p, or one of the sixteen words
//! of [`CHAR2_WORDS`] in characteristic 2. A word table records `a * w` and
//! `b * w` (computed at `i = 0`); the generator actions on the full basis are
//! then
//!
//! ```text
//! g * g^i w = g^(i+1) w
//! a * g^i w = g^i (a w)
//! b * g^i w = i g^i (a w) + g^i (b w)
//! ```
//!
//! where the last line is the commutation rule `b g^i = i g^i a + g^i b`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};
use crate::linalg::{axpy, Matrix};
use crate::relations::{check_relations, GenAction, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    CharPLifting,
    Char2Nichols,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    G,
    A,
    B,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::G, Gen::A, Gen::B];

    pub fn name(self) -> &'static str {
        match self {
            Gen::G => "g",
            Gen::A => "a",
            Gen::B => "b",
        }
    }
}

/// Deliberate corruption of the rewriting rules, used to exercise failure paths.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Drop the `i g^i a` term of `b g^i`.
    DropGroupCommutator,
}

/// Normal words of B(V) in characteristic 2, in the fixed basis order.
pub const CHAR2_WORDS: [&str; 16] =
    ["", "a", "b", "ab", "ba", "bb", "aba", "abb", "bab", "bbb", "abab", "abbb", "babb", "ababb", "babbb", "ababbb"];

#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub variant: Variant,
    pub p: u32,
    pub s: u32,
    pub t: u32,
    pub n: u32,
    pub lambda: Scalar,
    pub mu: Scalar,
    pub field: FieldCtx,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl AlgebraSpec {
    pub fn new(field: FieldCtx, s: u32, lambda: Scalar, mu: Scalar) -> Result<Self> {
        let p = field.characteristic();
        let t = field.root_order();
        if s == 0 {
            return Err(Error::InvalidSpec("s must be at least 1".into()));
        }
        let variant = if p == 2 {
            if !lambda.is_zero() || !mu.is_zero() {
                return Err(Error::InvalidSpec(
                    "the characteristic 2 algebra has no lifting parameters; lambda = mu = 0".into(),
                ));
            }
            Variant::Char2Nichols
        } else {
            Variant::CharPLifting
        };
        let n = p
            .checked_pow(s)
            .and_then(|ps| ps.checked_mul(t))
            .filter(|&n| n <= 1 << 16)
            .ok_or_else(|| Error::InvalidSpec("n = p^s t is too large".into()))?;
        Ok(AlgebraSpec { variant, p, s, t, n, lambda, mu, field, fault: None })
    }

    /// Convenience constructor with lambda and mu taken from the prime field.
    pub fn from_ints(p: u32, s: u32, t: u32, lambda: i64, mu: i64) -> Result<Self> {
        let field = FieldCtx::new(p, t)?;
        let (l, m) = (field.from_int(lambda), field.from_int(mu));
        Self::new(field, s, l, m)
    }

    /// p^s, the order of the group part of each block.
    pub fn ps(&self) -> u32 {
        self.p.pow(self.s)
    }

    pub fn expected_dim(&self) -> usize {
        let words = match self.variant {
            Variant::CharPLifting => (self.p * self.p) as usize,
            Variant::Char2Nichols => 16,
        };
        words * self.n as usize
    }
}

/// Basis element `g^g * w` where `w` indexes the normal word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub g: u32,
    pub word: u32,
}

/// Sparse vector: (basis position, coefficient), sorted, no zeros.
pub type Sparse = Vec<(u32, Scalar)>;
/// Sparse element of H ⊗ H keyed by pairs of basis indices.
pub type SparseTensor = Vec<((u32, u32), Scalar)>;

/// One term of a word table: `coeff * g^shift * word`.
#[derive(Clone, Copy, Debug)]
struct WordTerm {
    shift: u32,
    word: u32,
    coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(pub Vec<Scalar>);

impl Element {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.0.iter().copied().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

pub struct Algebra {
    spec: AlgebraSpec,
    word_count: usize,
    dim: usize,
    letters: Vec<Vec<Gen>>,
    a_words: Vec<Vec<WordTerm>>,
    b_words: Vec<Vec<WordTerm>>,
    products: OnceLock<Vec<Sparse>>,
    pub(crate) coproducts: OnceLock<Vec<SparseTensor>>,
    pub(crate) antipodes: OnceLock<Vec<Sparse>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("variant", &self.spec.variant)
            .field("p", &self.spec.p)
            .field("s", &self.spec.s)
            .field("t", &self.spec.t)
            .field("dim", &self.dim)
            .finish()
    }
}

impl Algebra {
    /// Enumerate the basis, build the word tables and check every defining
    /// relation in the left regular representation.
    pub fn build(spec: AlgebraSpec) -> Result<Self> {
        let (letters, a_words, b_words) = match spec.variant {
            Variant::CharPLifting => odd_word_tables(&spec),
            Variant::Char2Nichols => char2_word_tables()?,
        };
        let word_count = letters.len();
        let alg = Algebra {
            dim: word_count * spec.n as usize,
            word_count,
            letters,
            a_words,
            b_words,
            spec,
            products: OnceLock::new(),
            coproducts: OnceLock::new(),
            antipodes: OnceLock::new(),
        };
        if alg.dim != alg.spec.expected_dim() {
            return Err(Error::DimensionMismatch { expected: alg.spec.expected_dim(), found: alg.dim });
        }
        check_relations(&alg, &alg.relations()).map_err(Error::RelationCheckFailed)?;
        Ok(alg)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn field(&self) -> &FieldCtx {
        &self.spec.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn variant(&self) -> Variant {
        self.spec.variant
    }

    pub fn word_count(&self) -> usize {
        self.word_count
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn relations(&self) -> Vec<Relation> {
        Relation::defining(&self.spec)
    }

    #[inline]
    pub fn index(&self, b: BasisIndex) -> usize {
        b.g as usize * self.word_count + b.word as usize
    }

    #[inline]
    pub fn basis_index(&self, idx: usize) -> BasisIndex {
        BasisIndex { g: (idx / self.word_count) as u32, word: (idx % self.word_count) as u32 }
    }

    /// Index of `g^i a^j b^k` (odd p).
    pub fn odd_index(&self, i: u32, j: u32, k: u32) -> usize {
        assert_eq!(self.spec.variant, Variant::CharPLifting);
        let p = self.spec.p;
        self.index(BasisIndex { g: i % self.spec.n, word: j * p + k })
    }

    /// Index of `g^i * w` for a word from [`CHAR2_WORDS`] (characteristic 2).
    pub fn char2_index(&self, i: u32, word: &str) -> usize {
        assert_eq!(self.spec.variant, Variant::Char2Nichols);
        let w = CHAR2_WORDS.iter().position(|&x| x == word).expect("normal word");
        self.index(BasisIndex { g: i % self.spec.n, word: w as u32 })
    }

    /// Basis position of a generator.
    pub fn gen_index(&self, gen: Gen) -> usize {
        let word = match (gen, self.spec.variant) {
            (Gen::G, _) => return self.index(BasisIndex { g: 1 % self.spec.n, word: 0 }),
            (Gen::A, Variant::CharPLifting) => self.spec.p,
            (Gen::B, Variant::CharPLifting) => 1,
            (Gen::A, Variant::Char2Nichols) => 1,
            (Gen::B, Variant::Char2Nichols) => 2,
        };
        word as usize
    }

    /// Letters of the normal word, left to right.
    pub fn word_letters(&self, word: u32) -> &[Gen] {
        &self.letters[word as usize]
    }

    /// Degree of a word in a and b.
    pub fn word_degree(&self, word: u32) -> usize {
        self.letters[word as usize].len()
    }

    pub fn format_index(&self, idx: usize) -> String {
        let b = self.basis_index(idx);
        let word = format_word(&self.letters[b.word as usize]);
        match self.spec.variant {
            Variant::CharPLifting => format!("g^{} {}", b.g, word),
            Variant::Char2Nichols => format!("g^{}·{}", b.g, word),
        }
    }

    // ---- elements ----

    pub fn zero(&self) -> Element {
        Element(vec![Scalar::ZERO; self.dim])
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        let mut e = self.zero();
        e.0[0] = c;
        e
    }

    pub fn one(&self) -> Element {
        self.scalar(Scalar::ONE)
    }

    pub fn basis_element(&self, idx: usize) -> Element {
        let mut e = self.zero();
        e.0[idx] = Scalar::ONE;
        e
    }

    pub fn gen(&self, gen: Gen) -> Element {
        self.lmul_gen(gen, &self.one())
    }

    /// g^k for any integer k.
    pub fn g_pow(&self, k: i64) -> Element {
        let i = k.rem_euclid(self.spec.n as i64) as u32;
        self.basis_element(self.index(BasisIndex { g: i, word: 0 }))
    }

    pub fn from_terms(&self, terms: &[(usize, Scalar)]) -> Element {
        let f = self.field();
        let mut e = self.zero();
        for &(i, c) in terms {
            e.0[i] = f.add(e.0[i], c);
        }
        e
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let f = self.field();
        Element(x.0.iter().zip(&y.0).map(|(&a, &b)| f.add(a, b)).collect())
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        let f = self.field();
        Element(x.0.iter().zip(&y.0).map(|(&a, &b)| f.sub(a, b)).collect())
    }

    pub fn scale(&self, c: Scalar, x: &Element) -> Element {
        let f = self.field();
        Element(x.0.iter().map(|&a| f.mul(c, a)).collect())
    }

    pub fn neg(&self, x: &Element) -> Element {
        let f = self.field();
        Element(x.0.iter().map(|&a| f.neg(a)).collect())
    }

    /// x + c (c a scalar multiple of the identity).
    pub fn add_scalar(&self, x: &Element, c: Scalar) -> Element {
        let mut y = x.clone();
        y.0[0] = self.field().add(y.0[0], c);
        y
    }

    /// Visit the terms of `gen * basis[idx]`.
    #[inline]
    fn gen_on_basis(&self, gen: Gen, idx: usize, mut emit: impl FnMut(usize, Scalar)) {
        let f = self.field();
        let n = self.spec.n;
        let b = self.basis_index(idx);
        let place = |shift: u32, word: u32| ((b.g + shift) % n) as usize * self.word_count + word as usize;
        match gen {
            Gen::G => emit(place(1, b.word), Scalar::ONE),
            Gen::A => {
                for t in &self.a_words[b.word as usize] {
                    emit(place(t.shift, t.word), t.coeff);
                }
            }
            Gen::B => {
                let i = f.from_int(b.g as i64);
                if !i.is_zero() && self.spec.fault != Some(Fault::DropGroupCommutator) {
                    for t in &self.a_words[b.word as usize] {
                        emit(place(t.shift, t.word), f.mul(i, t.coeff));
                    }
                }
                for t in &self.b_words[b.word as usize] {
                    emit(place(t.shift, t.word), t.coeff);
                }
            }
        }
    }

    /// gen * v on a dense coefficient vector.
    pub fn apply_gen(&self, gen: Gen, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![Scalar::ZERO; self.dim];
        for (idx, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            self.gen_on_basis(gen, idx, |j, d| out[j] = f.add(out[j], f.mul(c, d)));
        }
        out
    }

    pub fn apply_gen_sparse(&self, gen: Gen, v: &[(u32, Scalar)]) -> Sparse {
        let mut terms: Vec<(u32, Scalar)> = Vec::with_capacity(v.len() * 3);
        for &(idx, c) in v {
            let f = self.field();
            self.gen_on_basis(gen, idx as usize, |j, d| terms.push((j as u32, f.mul(c, d))));
        }
        merge_sparse(self.field(), terms)
    }

    /// Normal form of gen * x.
    pub fn lmul_gen(&self, gen: Gen, x: &Element) -> Element {
        Element(self.apply_gen(gen, &x.0))
    }

    /// Left multiplication by the basis monomial `idx` on a dense vector.
    pub fn apply_monomial(&self, idx: usize, v: &[Scalar]) -> Vec<Scalar> {
        let b = self.basis_index(idx);
        let mut cur = v.to_vec();
        for &gen in self.letters[b.word as usize].iter().rev() {
            cur = self.apply_gen(gen, &cur);
        }
        self.shift_g(b.g, &cur)
    }

    pub fn apply_monomial_sparse(&self, idx: usize, v: &[(u32, Scalar)]) -> Sparse {
        let b = self.basis_index(idx);
        let mut cur = v.to_vec();
        for &gen in self.letters[b.word as usize].iter().rev() {
            cur = self.apply_gen_sparse(gen, &cur);
        }
        let n = self.spec.n;
        let w = self.word_count as u32;
        let mut out: Sparse = cur.into_iter().map(|(j, c)| ((((j / w) + b.g) % n) * w + j % w, c)).collect();
        out.sort_unstable_by_key(|&(j, _)| j);
        out
    }

    /// Multiply by g^k (a permutation of the basis).
    pub fn shift_g(&self, k: u32, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.spec.n as usize;
        let w = self.word_count;
        let k = k as usize % n;
        let mut out = vec![Scalar::ZERO; self.dim];
        for (idx, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[((idx / w + k) % n) * w + idx % w] = c;
            }
        }
        out
    }

    /// Product in normal form: each monomial of x is applied to y generator by generator.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let f = self.field();
        let mut out = vec![Scalar::ZERO; self.dim];
        for (idx, c) in x.support() {
            let term = self.apply_monomial(idx, &y.0);
            axpy(f, &mut out, c, &term);
        }
        Element(out)
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &Element, e: u32) -> Element {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Product of basis monomials, cached as a sparse table of size dim^2.
    pub fn basis_product(&self, u: usize, v: usize) -> &Sparse {
        let table = self.products.get_or_init(|| {
            let d = self.dim;
            let mut table = Vec::with_capacity(d * d);
            for u in 0..d {
                for v in 0..d {
                    table.push(self.apply_monomial_sparse(u, &[(v as u32, Scalar::ONE)]));
                }
            }
            table
        });
        &table[u * self.dim + v]
    }

    /// Product where the right factor is a basis monomial, via the product table.
    pub fn mul_by_basis_right(&self, x: &Element, v: usize) -> Element {
        let f = self.field();
        let mut out = vec![Scalar::ZERO; self.dim];
        for (u, c) in x.support() {
            for &(j, d) in self.basis_product(u, v) {
                out[j as usize] = f.add(out[j as usize], f.mul(c, d));
            }
        }
        Element(out)
    }

    /// Matrix of y -> gen * y (columns indexed by basis).
    pub fn left_gen_matrix(&self, gen: Gen) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for idx in 0..self.dim {
            self.gen_on_basis(gen, idx, |j, c| {
                let f = self.field();
                m.set(j, idx, f.add(m.get(j, idx), c));
            });
        }
        m
    }

    /// Matrix of y -> x * y.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let cols = (0..self.dim).map(|v| self.mul_by_basis_right(x, v).0).collect();
        Matrix::from_columns(self.dim, cols)
    }

    /// Matrix of y -> y * x.
    pub fn right_mul_matrix(&self, x: &Element) -> Matrix {
        let cols = (0..self.dim).map(|u| self.mul(&self.basis_element(u), x).0).collect();
        Matrix::from_columns(self.dim, cols)
    }

    pub fn terms(&self, x: &Element) -> Vec<(String, String)> {
        let f = self.field();
        x.support().map(|(i, c)| (self.format_index(i), f.format_scalar(c))).collect()
    }

    pub fn format_element(&self, x: &Element) -> String {
        let terms = self.terms(x);
        if terms.is_empty() {
            return "0".into();
        }
        terms.into_iter().map(|(b, c)| if c == "1" { b } else { format!("({c}) {b}") }).collect::<Vec<_>>().join(" + ")
    }
}

impl GenAction for Algebra {
    fn field(&self) -> &FieldCtx {
        &self.spec.field
    }

    fn space_dim(&self) -> usize {
        self.dim
    }

    fn act(&self, gen: Gen, v: &[Scalar]) -> Vec<Scalar> {
        self.apply_gen(gen, v)
    }
}

pub(crate) fn merge_sparse(f: &FieldCtx, mut terms: Vec<(u32, Scalar)>) -> Sparse {
    terms.sort_unstable_by_key(|&(j, _)| j);
    let mut out: Sparse = Vec::with_capacity(terms.len());
    for (j, c) in terms {
        match out.last_mut() {
            Some((k, d)) if *k == j => *d = f.add(*d, c),
            _ => out.push((j, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn format_word(letters: &[Gen]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        out.push_str(letters[i].name());
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

type WordTables = (Vec<Vec<Gen>>, Vec<Vec<WordTerm>>, Vec<Vec<WordTerm>>);

/// Word tables for a^j b^k, word index j p + k.
fn odd_word_tables(spec: &AlgebraSpec) -> WordTables {
    let f = &spec.field;
    let p = spec.p;
    let (lambda, mu) = (spec.lambda, spec.mu);
    let word = |j: u32, k: u32| j * p + k;
    let mut letters = Vec::new();
    let mut a_words = Vec::new();
    let mut b_words = Vec::new();
    // coefficient * g^shift terms of the central element c (1 - g^p)
    let one_minus_gp = |c: Scalar, w: u32| -> Vec<WordTerm> {
        if c.is_zero() {
            return Vec::new();
        }
        vec![WordTerm { shift: 0, word: w, coeff: c }, WordTerm { shift: p, word: w, coeff: f.neg(c) }]
    };
    for j in 0..p {
        for k in 0..p {
            let mut l = vec![Gen::A; j as usize];
            l.extend(std::iter::repeat_n(Gen::B, k as usize));
            letters.push(l);

            // a * a^j b^k, with a^p = lambda (1 - g^p)
            let a_terms = if j + 1 < p {
                vec![WordTerm { shift: 0, word: word(j + 1, k), coeff: Scalar::ONE }]
            } else {
                one_minus_gp(lambda, word(0, k))
            };
            // b * a^j b^k = (j/2) a^(j+1) b^k + a^j b^(k+1), with b^p = mu (1 - g^p)
            let half_j = f.frac(j as i64, 2);
            let mut b_terms: Vec<WordTerm> = a_terms
                .iter()
                .filter(|_| !half_j.is_zero())
                .map(|t| WordTerm { coeff: f.mul(half_j, t.coeff), ..*t })
                .collect();
            if k + 1 < p {
                b_terms.push(WordTerm { shift: 0, word: word(j, k + 1), coeff: Scalar::ONE });
            } else {
                b_terms.extend(one_minus_gp(mu, word(j, 0)));
            }
            a_words.push(a_terms);
            b_words.push(b_terms);
        }
    }
    (letters, a_words, b_words)
}

/// Rewrite a GF(2)-linear combination of words to normal form using
/// a^2 -> 0, b^4 -> 0, baba -> abab, b^2 a -> ab^2 + aba.
pub(crate) fn char2_normal_form(word: &str) -> BTreeMap<String, u8> {
    const RULES: [(&str, &[&str]); 4] = [("aa", &[]), ("bbbb", &[]), ("baba", &["abab"]), ("bba", &["abb", "aba"])];
    let mut comb: BTreeMap<String, u8> = BTreeMap::new();
    comb.insert(word.to_string(), 1);
    loop {
        let hit = comb
            .keys()
            .find_map(|w| RULES.iter().find_map(|(lhs, rhs)| w.find(lhs).map(|pos| (w.clone(), pos, *lhs, *rhs))));
        let Some((w, pos, lhs, rhs)) = hit else {
            break;
        };
        comb.remove(&w);
        for r in rhs {
            let new = format!("{}{}{}", &w[..pos], r, &w[pos + lhs.len()..]);
            let e = comb.entry(new).or_insert(0);
            *e ^= 1;
        }
        comb.retain(|_, c| *c != 0);
    }
    comb
}

fn char2_word_tables() -> Result<WordTables> {
    let letters: Vec<Vec<Gen>> =
        CHAR2_WORDS.iter().map(|w| w.chars().map(|c| if c == 'a' { Gen::A } else { Gen::B }).collect()).collect();
    let lookup = |w: &str| CHAR2_WORDS.iter().position(|&x| x == w);
    let mut tables = [Vec::new(), Vec::new()];
    for (table, prefix) in tables.iter_mut().zip(["a", "b"]) {
        for w in CHAR2_WORDS {
            let nf = char2_normal_form(&format!("{prefix}{w}"));
            let mut terms = Vec::new();
            for word in nf.keys() {
                let idx = lookup(word).ok_or_else(|| {
                    Error::RelationCheckFailed(format!("reduction of {prefix}{w} leaves the normal word set ({word})"))
                })?;
                terms.push(WordTerm { shift: 0, word: idx as u32, coeff: Scalar::ONE });
            }
            table.push(terms);
        }
    }
    let [a_words, b_words] = tables;
    Ok((letters, a_words, b_words))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
        Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg(3, 1, 2, 0, 0).dim(), 54);
        assert_eq!(alg(2, 1, 3, 0, 0).dim(), 96);
        assert_eq!(alg(3, 2, 2, 0, 0).dim(), 162);
        assert_eq!(alg(3, 1, 1, 1, 1).dim(), 27);
    }

    #[test]
    fn b_times_ga_at_p3() {
        // coefficient 1 + 1/2 = 3/2 = 0 in GF(3)
        let h = alg(3, 1, 2, 1, 1);
        let x = h.basis_element(h.odd_index(1, 1, 0));
        let y = h.lmul_gen(Gen::B, &x);
        assert_eq!(y, h.basis_element(h.odd_index(1, 1, 1)));
    }

    #[test]
    fn b_times_a_squared_uses_lambda() {
        let h = alg(3, 1, 2, 2, 0);
        let f = h.field();
        let x = h.basis_element(h.odd_index(0, 2, 0));
        let y = h.lmul_gen(Gen::B, &x);
        // lambda (1 - g^3) + a^2 b, lambda = 2
        let expected = h.from_terms(&[
            (h.odd_index(0, 0, 0), f.from_int(2)),
            (h.odd_index(3, 0, 0), f.from_int(-2)),
            (h.odd_index(0, 2, 1), Scalar::ONE),
        ]);
        assert_eq!(y, expected);
    }

    #[test]
    fn b_times_a_is_ab_plus_half_a_squared() {
        let h = alg(3, 1, 2, 0, 0);
        let ba = h.mul(&h.gen(Gen::B), &h.gen(Gen::A));
        let expected = h.from_terms(&[(h.odd_index(0, 1, 1), Scalar::ONE), (h.odd_index(0, 2, 0), Scalar(2))]);
        assert_eq!(ba, expected);
    }

    #[test]
    fn char2_products() {
        let h = alg(2, 1, 3, 0, 0);
        let bab = h.basis_element(h.char2_index(0, "bab"));
        let expected = h.add(&h.basis_element(h.char2_index(0, "abbb")), &h.basis_element(h.char2_index(0, "abab")));
        assert_eq!(h.lmul_gen(Gen::B, &bab), expected);
        let aba = h.basis_element(h.char2_index(0, "aba"));
        assert_eq!(h.mul(&h.gen(Gen::B), &aba), h.basis_element(h.char2_index(0, "abab")));
    }

    #[test]
    fn char2_tables_close_on_normal_words() {
        for w in CHAR2_WORDS {
            for pre in ["a", "b"] {
                for word in char2_normal_form(&format!("{pre}{w}")).keys() {
                    assert!(CHAR2_WORDS.contains(&word.as_str()), "{pre}{w} -> {word}");
                }
            }
        }
    }

    #[test]
    fn fault_is_detected() {
        let mut spec = AlgebraSpec::from_ints(3, 1, 2, 0, 0).unwrap();
        spec.fault = Some(Fault::DropGroupCommutator);
        match Algebra::build(spec) {
            Err(Error::RelationCheckFailed(name)) => assert!(name.contains("bg")),
            other => panic!("expected relation failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_lifting_parameters_in_char2() {
        assert!(AlgebraSpec::from_ints(2, 1, 3, 1, 0).is_err());
        assert!(AlgebraSpec::from_ints(3, 0, 2, 0, 0).is_err());
    }

    #[test]
    fn g_inverse_and_commuting_a() {
        let h = alg(3, 1, 2, 1, 1);
        let n = h.n() as i64;
        assert_eq!(h.mul(&h.g_pow(1), &h.g_pow(n - 1)), h.one());
        let g = h.gen(Gen::G);
        let a = h.gen(Gen::A);
        assert_eq!(h.mul(&a, &g), h.mul(&g, &a));
    }
}
