//! Coproduct, counit, antipode, integrals and the symmetric-algebra verdict.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{merge_sparse, Algebra, Element, Gen, Sparse, SparseTensor, Variant};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel, solve, Matrix, Subspace};
use crate::report::{Report, Status};

/// Element of H ⊗ H, keyed by pairs of basis positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    pub terms: BTreeMap<(usize, usize), Scalar>,
}

impl TensorElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, h: &Algebra, key: (usize, usize), c: Scalar) {
        let f = h.field();
        let e = self.terms.entry(key).or_insert(Scalar::ZERO);
        *e = f.add(*e, c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// x ⊗ y for dense elements.
    pub fn outer(h: &Algebra, x: &Element, y: &Element) -> Self {
        let f = h.field();
        let mut t = TensorElement::default();
        for (u, c) in x.support() {
            for (v, d) in y.support() {
                t.add_term(h, (u, v), f.mul(c, d));
            }
        }
        t
    }

    pub fn add(&self, h: &Algebra, other: &TensorElement) -> Self {
        let mut t = self.clone();
        for (&k, &c) in &other.terms {
            t.add_term(h, k, c);
        }
        t
    }

    pub fn from_pairs(h: &Algebra, pairs: &[((usize, usize), Scalar)]) -> Self {
        let mut t = TensorElement::default();
        for &(k, c) in pairs {
            t.add_term(h, k, c);
        }
        t
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn sparse_times_sparse(h: &Algebra, x: &[(u32, Scalar)], y: &[(u32, Scalar)]) -> Sparse {
    let f = h.field();
    let mut terms = Vec::new();
    for &(u, c) in x {
        for &(v, d) in y {
            let cd = f.mul(c, d);
            for &(j, e) in h.basis_product(u as usize, v as usize) {
                terms.push((j, f.mul(cd, e)));
            }
        }
    }
    merge_sparse(f, terms)
}

fn to_sparse(x: &Element) -> Sparse {
    x.support().map(|(i, c)| (i as u32, c)).collect()
}

fn to_dense(h: &Algebra, x: &[(u32, Scalar)]) -> Element {
    let mut e = h.zero();
    for &(i, c) in x {
        e.0[i as usize] = c;
    }
    e
}

impl Algebra {
    pub fn counit(&self, x: &Element) -> Scalar {
        let f = self.field();
        x.support().filter(|&(i, _)| self.basis_index(i).word == 0).fold(Scalar::ZERO, |acc, (_, c)| f.add(acc, c))
    }

    /// Coproduct of a generator as a list of tensor terms.
    fn gen_coproduct(&self, gen: Gen) -> Vec<((usize, usize), Scalar)> {
        let g = self.gen_index(Gen::G);
        let x = self.gen_index(gen);
        match gen {
            Gen::G => vec![((g, g), Scalar::ONE)],
            _ => vec![((x, 0), Scalar::ONE), ((g, x), Scalar::ONE)],
        }
    }

    fn coproduct_table(&self) -> &Vec<SparseTensor> {
        self.coproducts.get_or_init(|| {
            (0..self.dim())
                .map(|idx| {
                    let b = self.basis_index(idx);
                    let gi = self.g_pow(b.g as i64);
                    let gi = gi.support().next().expect("group-like").0;
                    let mut acc = TensorElement::default();
                    acc.terms.insert((gi, gi), Scalar::ONE);
                    for &letter in self.word_letters(b.word) {
                        let factor = TensorElement::from_pairs(self, &self.gen_coproduct(letter));
                        acc = self.tensor_mul(&acc, &factor);
                    }
                    acc.terms.into_iter().map(|((u, v), c)| ((u as u32, v as u32), c)).collect()
                })
                .collect()
        })
    }

    /// Componentwise product in H ⊗ H.
    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let f = self.field();
        let mut out = TensorElement::default();
        for (&(u1, u2), &c) in &x.terms {
            for (&(v1, v2), &d) in &y.terms {
                let cd = f.mul(c, d);
                for &(j1, e1) in self.basis_product(u1, v1) {
                    for &(j2, e2) in self.basis_product(u2, v2) {
                        out.add_term(self, (j1 as usize, j2 as usize), f.mul(cd, f.mul(e1, e2)));
                    }
                }
            }
        }
        out
    }

    pub fn delta(&self, x: &Element) -> TensorElement {
        let f = self.field();
        let table = self.coproduct_table();
        let mut out = TensorElement::default();
        for (i, c) in x.support() {
            for &((u, v), d) in &table[i] {
                out.add_term(self, (u as usize, v as usize), f.mul(c, d));
            }
        }
        out
    }

    fn antipode_table(&self) -> &Vec<Sparse> {
        self.antipodes.get_or_init(|| {
            let n = self.n() as i64;
            let f = self.field();
            let minus_one = f.neg(Scalar::ONE);
            let g_inv = self.index(crate::algebra::BasisIndex { g: (n - 1) as u32, word: 0 });
            let image = |gen: Gen| -> Sparse {
                match gen {
                    Gen::G => vec![(g_inv as u32, Scalar::ONE)],
                    _ => {
                        let x = self.basis_product(g_inv, self.gen_index(gen)).clone();
                        x.into_iter().map(|(j, c)| (j, f.mul(minus_one, c))).collect()
                    }
                }
            };
            let images = [image(Gen::G), image(Gen::A), image(Gen::B)];
            let pick = |gen: Gen| &images[gen as usize];
            (0..self.dim())
                .map(|idx| {
                    let b = self.basis_index(idx);
                    // S(g^i w1...wk) = S(wk)...S(w1) g^(-i)
                    let mut acc: Sparse = vec![(0, Scalar::ONE)];
                    for &letter in self.word_letters(b.word).iter().rev() {
                        acc = sparse_times_sparse(self, &acc, pick(letter));
                    }
                    let gi = self.g_pow(-(b.g as i64));
                    sparse_times_sparse(self, &acc, &to_sparse(&gi))
                })
                .collect()
        })
    }

    pub fn antipode(&self, x: &Element) -> Element {
        let f = self.field();
        let table = self.antipode_table();
        let mut out = self.zero();
        for (i, c) in x.support() {
            for &(j, d) in &table[i] {
                out.0[j as usize] = f.add(out.0[j as usize], f.mul(c, d));
            }
        }
        out
    }
}

/// Check coassociativity, counit and antipode axioms on every basis element.
pub fn verify_hopf_axioms(h: &Algebra) -> Report {
    let f = h.field();
    let d = h.dim();
    let mut first_fail: [Option<usize>; 3] = [None; 3];
    let table = h.coproduct_table();
    for x in 0..d {
        let dx = &table[x];
        if first_fail[0].is_none() {
            let mut left: BTreeMap<(u32, u32, u32), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(u32, u32, u32), Scalar> = BTreeMap::new();
            let put = |m: &mut BTreeMap<(u32, u32, u32), Scalar>, k, c| {
                let e = m.entry(k).or_insert(Scalar::ZERO);
                *e = f.add(*e, c);
            };
            for &((u, v), c) in dx {
                for &((u1, u2), e) in &table[u as usize] {
                    put(&mut left, (u1, u2, v), f.mul(c, e));
                }
                for &((v1, v2), e) in &table[v as usize] {
                    put(&mut right, (u, v1, v2), f.mul(c, e));
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            if left != right {
                first_fail[0] = Some(x);
            }
        }
        if first_fail[1].is_none() {
            let mut l = h.zero();
            let mut r = h.zero();
            for &((u, v), c) in dx {
                if h.basis_index(u as usize).word == 0 {
                    l.0[v as usize] = f.add(l.0[v as usize], c);
                }
                if h.basis_index(v as usize).word == 0 {
                    r.0[u as usize] = f.add(r.0[u as usize], c);
                }
            }
            let e = h.basis_element(x);
            if l != e || r != e {
                first_fail[1] = Some(x);
            }
        }
        if first_fail[2].is_none() {
            let antipodes = h.antipode_table();
            let mut l: Sparse = Vec::new();
            let mut r: Sparse = Vec::new();
            for &((u, v), c) in dx {
                let su = &antipodes[u as usize];
                let sv = &antipodes[v as usize];
                for (j, e) in sparse_times_sparse(h, su, &[(v, c)]) {
                    l.push((j, e));
                }
                for (j, e) in sparse_times_sparse(h, &[(u, c)], sv) {
                    r.push((j, e));
                }
            }
            let expected = h.scalar(h.counit(&h.basis_element(x)));
            if to_dense(h, &merge_sparse(f, l)) != expected || to_dense(h, &merge_sparse(f, r)) != expected {
                first_fail[2] = Some(x);
            }
        }
    }
    let mut report = Report::new();
    let names = [
        ("coassociativity", "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ"),
        ("counit", "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ"),
        ("antipode", "S(x1)x2 = ε(x)1 = x1 S(x2)"),
    ];
    for ((name, claim), fail) in names.into_iter().zip(first_fail) {
        let observed = match fail {
            None => json!({ "basis_checked": d, "first_failure": null }),
            Some(x) => json!({ "basis_checked": d, "first_failure": h.format_index(x) }),
        };
        report.push(
            name,
            Status::from_bool(fail.is_none()),
            observed,
            json!({ "basis_checked": d, "first_failure": null }),
            claim,
        );
    }
    report
}

/// Matrix of y -> y * basis[v].
fn right_basis_matrix(h: &Algebra, v: usize) -> Matrix {
    let d = h.dim();
    let mut m = Matrix::zeros(d, d);
    for u in 0..d {
        for &(j, c) in h.basis_product(u, v) {
            m.set(j as usize, u, c);
        }
    }
    m
}

/// Solution space of the integral conditions on the generators.
pub fn integral_space_unchecked(h: &Algebra, side: Side) -> Subspace {
    let f = h.field();
    let d = h.dim();
    let mats: Vec<Matrix> = Gen::ALL
        .iter()
        .map(|&gen| match side {
            Side::Left => h.left_gen_matrix(gen),
            Side::Right => right_basis_matrix(h, h.gen_index(gen)),
        })
        .collect();
    let stacked = mats[0].sub(f, &Matrix::identity(d)).vstack(&mats[1]).vstack(&mats[2]);
    kernel(f, &stacked)
}

pub fn integral_space(h: &Algebra, side: Side) -> Result<Subspace> {
    let space = integral_space_unchecked(h, side);
    if space.dim() != 1 {
        return Err(Error::IntegralDimensionAnomaly(space.dim()));
    }
    Ok(space)
}

/// (sum_i g^i) a^(p-1) b^(p-1), or (sum_i g^i) abab^3 in characteristic 2.
pub fn expected_integral(h: &Algebra) -> Element {
    let n = h.n();
    let terms: Vec<(usize, Scalar)> = (0..n)
        .map(|i| {
            let idx = match h.variant() {
                Variant::CharPLifting => h.odd_index(i, h.spec().p - 1, h.spec().p - 1),
                Variant::Char2Nichols => h.char2_index(i, "ababbb"),
            };
            (idx, Scalar::ONE)
        })
        .collect();
    h.from_terms(&terms)
}

#[derive(Clone, Debug)]
pub struct SymmetricVerdict {
    pub unimodular: bool,
    pub s2_inner_witness: Option<Element>,
    pub symmetric: bool,
    /// No invertible element was found among the scanned candidates.
    pub inconclusive: bool,
    pub witness_space_dim: usize,
}

const WITNESS_CANDIDATES: usize = 10_000;

fn is_invertible(h: &Algebra, u: &Element) -> bool {
    let lu = h.left_mul_matrix(u);
    solve(h.field(), &lu, &h.one().0).is_some()
}

/// Unimodularity plus an invertible u with u x = S^2(x) u for all x.
pub fn symmetric_verdict(h: &Algebra, seed: u64) -> SymmetricVerdict {
    let f = h.field();
    let left = integral_space_unchecked(h, Side::Left);
    let right = integral_space_unchecked(h, Side::Right);
    let unimodular = left.dim() == 1 && left == right;

    // u x - S^2(x) u = 0 for x in {g, a, b}; S^2 is an algebra map so generators suffice
    let d = h.dim();
    let mut stacked: Option<Matrix> = None;
    for gen in Gen::ALL {
        let x = h.gen(gen);
        let s2x = h.antipode(&h.antipode(&x));
        let block = right_basis_matrix(h, h.gen_index(gen)).sub(f, &h.left_mul_matrix(&s2x));
        stacked = Some(match stacked {
            None => block,
            Some(m) => m.vstack(&block),
        });
    }
    let space = kernel(f, &stacked.expect("three generators"));

    let basis: Vec<Vec<Scalar>> = space.basis().to_vec();
    let pairs = (0..basis.len()).flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)));
    let mut candidates: Vec<Vec<Scalar>> = basis.clone();
    candidates.extend(pairs.map(|(i, j)| crate::linalg::vec_add(f, &basis[i], &basis[j])));
    candidates.truncate(WITNESS_CANDIDATES);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = f.size();
    let mut witness = None;
    let mut tried = 0;
    while tried < WITNESS_CANDIDATES && !basis.is_empty() {
        let cand = if tried < candidates.len() {
            candidates[tried].clone()
        } else {
            let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| Scalar(rng.gen_range(0..q))).collect();
            space.combination(f, &coeffs)
        };
        tried += 1;
        let u = Element(cand);
        if !u.is_zero() && is_invertible(h, &u) {
            witness = Some(u);
            break;
        }
    }
    // full-basis recheck of the conjugation property
    if let Some(u) = &witness {
        let ok = (0..d).all(|x| {
            let e = h.basis_element(x);
            h.mul(u, &e) == h.mul(&h.antipode(&h.antipode(&e)), u)
        });
        assert!(ok, "witness solves the generator system but fails on the basis");
    }
    let found = witness.is_some();
    SymmetricVerdict {
        unimodular,
        symmetric: unimodular && found,
        inconclusive: !found,
        witness_space_dim: space.dim(),
        s2_inner_witness: witness,
    }
}

pub fn hopf_structure_report(h: &Algebra, seed: u64) -> Report {
    let mut report = Report::new();
    let left = integral_space_unchecked(h, Side::Left);
    let right = integral_space_unchecked(h, Side::Right);
    report.compare("integral_left_dim", left.dim(), 1, "the left integral space is one-dimensional");
    report.compare("integral_right_dim", right.dim(), 1, "the right integral space is one-dimensional");
    let expected = Subspace::from_rows(h.field(), h.dim(), [expected_integral(h).0]);
    let claim = match h.variant() {
        Variant::CharPLifting => "left integrals are spanned by (sum g^i) a^(p-1) b^(p-1)",
        Variant::Char2Nichols => "left integrals are spanned by (sum g^i) abab^3",
    };
    report.assert("integral_left_span", left == expected, json!(left == expected), claim);
    let v = symmetric_verdict(h, seed);
    report.compare("unimodular", v.unimodular, true, "left and right integrals coincide");
    let witness = v.s2_inner_witness.as_ref().map(|u| h.format_element(u));
    let status = if v.symmetric {
        Status::Pass
    } else if v.inconclusive && v.unimodular {
        Status::Unknown
    } else {
        Status::Fail
    };
    report.push(
        "symmetric",
        status,
        json!({ "symmetric": v.symmetric, "s2_inner_witness": witness }),
        json!({ "symmetric": true }),
        "unimodular with inner square of the antipode, hence symmetric",
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
        Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
    }

    #[test]
    fn counit_values() {
        let h = alg(3, 1, 2, 0, 0);
        assert_eq!(h.counit(&h.gen(Gen::G)), Scalar::ONE);
        let gab = h.basis_element(h.odd_index(1, 1, 1));
        assert_eq!(h.counit(&gab), Scalar::ZERO);
    }

    #[test]
    fn coproduct_values() {
        let h = alg(3, 1, 2, 1, 1);
        let g2 = h.index(crate::algebra::BasisIndex { g: 2, word: 0 });
        assert_eq!(h.delta(&h.g_pow(2)), TensorElement::from_pairs(&h, &[((g2, g2), Scalar::ONE)]));
        let (a, g) = (h.gen_index(Gen::A), h.gen_index(Gen::G));
        assert_eq!(
            h.delta(&h.gen(Gen::A)),
            TensorElement::from_pairs(&h, &[((a, 0), Scalar::ONE), ((g, a), Scalar::ONE)])
        );
        let ab = h.odd_index(0, 1, 1);
        let ga = h.odd_index(1, 1, 0);
        let gb = h.odd_index(1, 0, 1);
        let b = h.gen_index(Gen::B);
        let g2 = h.index(crate::algebra::BasisIndex { g: 2, word: 0 });
        let expected = TensorElement::from_pairs(
            &h,
            &[((ab, 0), Scalar::ONE), ((ga, b), Scalar::ONE), ((gb, a), Scalar::ONE), ((g2, ab), Scalar::ONE)],
        );
        assert_eq!(h.delta(&h.basis_element(ab)), expected);
    }

    #[test]
    fn antipode_values() {
        let h = alg(3, 1, 2, 1, 1);
        let n = h.n() as i64;
        assert_eq!(h.antipode(&h.one()), h.one());
        let expected = h.neg(&h.mul(&h.g_pow(n - 1), &h.gen(Gen::A)));
        assert_eq!(h.antipode(&h.gen(Gen::A)), expected);
        let b = h.gen(Gen::B);
        let s2b = h.antipode(&h.antipode(&b));
        assert_eq!(s2b, h.mul_all(&[&h.g_pow(n - 1), &b, &h.gen(Gen::G)]));
    }

    #[test]
    fn hopf_axioms_small() {
        for h in [alg(3, 1, 2, 1, 1), alg(3, 1, 1, 0, 1), alg(2, 1, 1, 0, 0)] {
            let r = verify_hopf_axioms(&h);
            assert!(r.all_pass(), "{:?}", r);
        }
    }

    #[test]
    fn integrals_and_symmetry() {
        for h in [alg(3, 1, 2, 0, 0), alg(3, 1, 2, 1, 1), alg(2, 1, 3, 0, 0)] {
            let r = hopf_structure_report(&h, 1);
            assert!(r.all_pass(), "{:?}", r);
            assert_eq!(integral_space(&h, Side::Left).unwrap(), integral_space(&h, Side::Right).unwrap());
        }
        let h = alg(3, 1, 2, 1, 1);
        let v = symmetric_verdict(&h, 0);
        assert!(v.symmetric);
    }
}
