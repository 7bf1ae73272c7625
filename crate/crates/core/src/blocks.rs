//! Central idempotents e_i and the block decomposition H = ⊕ He_i.
//!
//! Inside a block the elements `g^r w e_i` with `r < p^s` form a basis, since
//! `g^(p^s) e_i = ξ^(i p^s) e_i`. [`BlockAlgebra`] works in these
//! coordinates; block position `r * W + w` coincides with the position of
//! `g^r w` in H.

use serde_json::json;

use crate::algebra::{merge_sparse, Algebra, BasisIndex, Element, Gen, Sparse};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, Subspace};
use crate::report::Report;
use crate::reps::Module;

/// e_i = (1/t) sum_j (ξ^(-i p^s) g^(p^s))^j
pub fn idempotent(h: &Algebra, i: u32) -> Element {
    let f = h.field();
    let spec = h.spec();
    let (t, ps) = (spec.t, spec.ps());
    let inv_t = f.frac(1, t as i64);
    let mut e = h.zero();
    for j in 0..t {
        let c = f.mul(inv_t, f.xi_pow(-((i as i64) * ps as i64 * j as i64)));
        let idx = h.index(BasisIndex { g: (ps * j) % spec.n, word: 0 });
        e.0[idx] = f.add(e.0[idx], c);
    }
    e
}

/// All t idempotents, verified: idempotent, orthogonal, summing to 1,
/// commuting with the generators, and carrying the g^(p^s) eigenvalue.
pub fn central_idempotents(h: &Algebra) -> Result<Vec<Element>> {
    let f = h.field();
    let spec = h.spec();
    let (t, ps) = (spec.t, spec.ps());
    let es: Vec<Element> = (0..t).map(|i| idempotent(h, i)).collect();
    let fail = |what: String| Err(Error::VerificationFailed(what));
    let mut total = h.zero();
    for (i, e) in es.iter().enumerate() {
        total = h.add(&total, e);
        for (j, e2) in es.iter().enumerate() {
            let prod = h.mul(e, e2);
            if i == j && prod != *e {
                return fail(format!("e_{i} is not idempotent"));
            }
            if i != j && !prod.is_zero() {
                return fail(format!("e_{i} e_{j} != 0"));
            }
        }
        for gen in Gen::ALL {
            let x = h.gen(gen);
            if h.mul(&x, e) != h.mul(e, &x) {
                return fail(format!("e_{i} does not commute with {}", gen.name()));
            }
        }
        let lhs = h.mul(&h.g_pow(ps as i64), e);
        let rhs = h.scale(f.xi_pow(i as i64 * ps as i64), e);
        if lhs != rhs {
            return fail(format!("g^(p^s) e_{i} != ξ^(i p^s) e_{i}"));
        }
    }
    if total != h.one() {
        return fail("the idempotents do not sum to 1".into());
    }
    Ok(es)
}

#[derive(Clone, Debug)]
pub struct Block {
    pub index: u32,
    pub idempotent: Element,
    /// Canonical basis of H e_i inside H.
    pub basis: Subspace,
}

pub fn block_basis(h: &Algebra, i: u32) -> Result<Block> {
    let e = idempotent(h, i);
    let rows = (0..h.dim()).map(|u| h.mul(&h.basis_element(u), &e).0);
    let basis = Subspace::from_rows(h.field(), h.dim(), rows);
    let expected = h.dim() / h.spec().t as usize;
    if basis.dim() != expected {
        return Err(Error::DimensionMismatch { expected, found: basis.dim() });
    }
    Ok(Block { index: i, idempotent: e, basis })
}

/// The block H e_i in the coordinates `g^r w e_i`, r < p^s.
pub struct BlockAlgebra<'a> {
    h: &'a Algebra,
    index: u32,
    dim: usize,
    /// ξ^(i p^s q) for q < t
    phases: Vec<Scalar>,
    table: Vec<Sparse>,
}

impl<'a> BlockAlgebra<'a> {
    pub fn new(h: &'a Algebra, index: u32) -> Self {
        let f = h.field();
        let spec = h.spec();
        let ps = spec.ps() as i64;
        let dim = spec.ps() as usize * h.word_count();
        let phases = (0..spec.t as i64).map(|q| f.xi_pow(index as i64 * ps * q)).collect();
        let mut block = BlockAlgebra { h, index, dim, phases, table: Vec::new() };
        let mut table = Vec::with_capacity(dim * dim);
        for u in 0..dim {
            for v in 0..dim {
                table.push(block.project_sparse(h.basis_product(u, v)));
            }
        }
        block.table = table;
        block
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.h
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn project_sparse(&self, x: &[(u32, Scalar)]) -> Sparse {
        let f = self.h.field();
        let terms = x
            .iter()
            .map(|&(j, c)| {
                let (pos, q) = self.fold(j as usize);
                (pos as u32, f.mul(c, self.phases[q]))
            })
            .collect();
        merge_sparse(f, terms)
    }

    /// H position -> (block position, multiple q of p^s in the g exponent).
    fn fold(&self, idx: usize) -> (usize, usize) {
        let w = self.h.word_count();
        let b = self.h.basis_index(idx);
        let ps = self.h.spec().ps();
        ((b.g % ps) as usize * w + b.word as usize, (b.g / ps) as usize)
    }

    /// Coordinates of x e_i.
    pub fn project(&self, x: &Element) -> Vec<Scalar> {
        let f = self.h.field();
        let mut out = vec![Scalar::ZERO; self.dim];
        for (j, c) in x.support() {
            let (pos, q) = self.fold(j);
            out[pos] = f.add(out[pos], f.mul(c, self.phases[q]));
        }
        out
    }

    /// The element of H with the given block coordinates.
    pub fn embed(&self, y: &[Scalar]) -> Element {
        let f = self.h.field();
        let spec = self.h.spec();
        let (t, ps) = (spec.t, spec.ps());
        let w = self.h.word_count();
        let inv_t = f.frac(1, t as i64);
        let mut out = self.h.zero();
        for (pos, &c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (r, word) = ((pos / w) as u32, (pos % w) as u32);
            for q in 0..t {
                let coeff = f.mul(c, f.mul(inv_t, f.inv(self.phases[q as usize]).expect("root of unity")));
                let idx = self.h.index(BasisIndex { g: r + ps * q, word });
                out.0[idx] = f.add(out.0[idx], coeff);
            }
        }
        out
    }

    pub fn basis_product(&self, u: usize, v: usize) -> &Sparse {
        &self.table[u * self.dim + v]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.h.field();
        let mut out = vec![Scalar::ZERO; self.dim];
        for (u, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (v, &d) in y.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let cd = f.mul(c, d);
                for &(j, e) in self.basis_product(u, v) {
                    out[j as usize] = f.add(out[j as usize], f.mul(cd, e));
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut e = vec![Scalar::ZERO; self.dim];
        e[0] = Scalar::ONE;
        e
    }

    pub fn gen(&self, gen: Gen) -> Vec<Scalar> {
        let mut e = vec![Scalar::ZERO; self.dim];
        e[self.h.gen_index(gen)] = Scalar::ONE;
        e
    }

    /// Matrix of y -> x y.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let f = self.h.field();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (u, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for v in 0..self.dim {
                for &(j, e) in self.basis_product(u, v) {
                    m.set(j as usize, v, f.add(m.get(j as usize, v), f.mul(c, e)));
                }
            }
        }
        m
    }

    /// Matrix of y -> y x.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let f = self.h.field();
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (v, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for u in 0..self.dim {
                for &(j, e) in self.basis_product(u, v) {
                    m.set(j as usize, u, f.add(m.get(j as usize, u), f.mul(c, e)));
                }
            }
        }
        m
    }

    /// The block as a left module over itself (hence over H).
    pub fn regular_module(&self) -> Module {
        let mats = Gen::ALL.map(|gen| self.left_mul_matrix(&self.gen(gen)));
        let [g, a, b] = mats;
        Module::from_parts(self.h.spec(), g, a, b)
    }
}

/// Block dimensions, direct-sum check and the unique g-eigenvalue per block.
pub fn verify_block_decomposition(h: &Algebra) -> Result<Report> {
    let f = h.field();
    let t = h.spec().t;
    let mut report = Report::new();
    let blocks: Vec<Block> = (0..t).map(|i| block_basis(h, i)).collect::<Result<_>>()?;
    let dims: Vec<usize> = blocks.iter().map(|b| b.basis.dim()).collect();
    let total = blocks.iter().fold(Subspace::zero(h.dim()), |acc, b| acc.sum(f, &b.basis));
    report.compare(
        "blocks",
        json!(dims),
        json!(vec![h.dim() / t as usize; t as usize]),
        "t blocks H e_i of equal dimension",
    );
    report.compare(
        "block_direct_sum",
        json!({ "sum_dim": total.dim(), "sum_of_dims": dims.iter().sum::<usize>() }),
        json!({ "sum_dim": h.dim(), "sum_of_dims": h.dim() }),
        "H is the direct sum of its blocks",
    );
    let mut nilpotent = Vec::new();
    for i in 0..t {
        let block = BlockAlgebra::new(h, i);
        let shifted =
            block.left_mul_matrix(&block.gen(Gen::G)).sub(f, &Matrix::scalar(block.dim(), f.xi_pow(i as i64)));
        nilpotent.push(shifted.pow(f, block.dim() as u64).is_zero());
    }
    report.compare(
        "block_g_eigenvalue",
        json!(nilpotent),
        json!(vec![true; t as usize]),
        "ξ^i is the only eigenvalue of g on H e_i",
    );
    Ok(report)
}

/// For each block, the simples (by position in `simples`) on which e_i acts as
/// the identity. Fails if some e_i acts by neither 0 nor 1.
pub fn block_census(h: &Algebra, simples: &[Module]) -> Result<Vec<Vec<usize>>> {
    let t = h.spec().t;
    let mut census = vec![Vec::new(); t as usize];
    for (k, s) in simples.iter().enumerate() {
        for i in 0..t {
            let rho = s.act_element(h, &idempotent(h, i));
            if rho == Matrix::identity(s.dim()) {
                census[i as usize].push(k);
            } else if !rho.is_zero() {
                return Err(Error::VerificationFailed(format!("e_{i} acts on simple {k} by neither 0 nor 1")));
            }
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
        Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
    }

    #[test]
    fn idempotents_at_3_1_2() {
        let h = alg(3, 1, 2, 0, 0);
        let f = h.field();
        let es = central_idempotents(&h).unwrap();
        let g3 = h.index(BasisIndex { g: 3, word: 0 });
        assert_eq!(es[0], h.from_terms(&[(0, f.from_int(2)), (g3, f.from_int(2))]));
        assert_eq!(es[1], h.from_terms(&[(0, f.from_int(2)), (g3, f.from_int(1))]));
        assert!(h.mul(&es[0], &es[1]).is_zero());
    }

    #[test]
    fn trivial_t() {
        let h = alg(3, 1, 1, 1, 1);
        assert_eq!(central_idempotents(&h).unwrap(), vec![h.one()]);
        assert_eq!(block_basis(&h, 0).unwrap().basis.dim(), 27);
    }

    #[test]
    fn counit_of_idempotents() {
        let h = alg(2, 1, 3, 0, 0);
        let es = central_idempotents(&h).unwrap();
        assert_eq!(h.counit(&es[0]), Scalar::ONE);
        assert_eq!(h.counit(&es[1]), Scalar::ZERO);
        assert_eq!(h.counit(&es[2]), Scalar::ZERO);
    }

    #[test]
    fn block_dims_and_decomposition() {
        let h = alg(3, 1, 2, 0, 0);
        assert_eq!(block_basis(&h, 0).unwrap().basis.dim(), 27);
        let h2 = alg(2, 1, 3, 0, 0);
        for i in 0..3 {
            assert_eq!(block_basis(&h2, i).unwrap().basis.dim(), 32);
        }
        assert!(verify_block_decomposition(&h).unwrap().all_pass());
        assert!(verify_block_decomposition(&h2).unwrap().all_pass());
    }

    #[test]
    fn block_coordinates_round_trip() {
        let h = alg(3, 1, 2, 1, 1);
        let block = BlockAlgebra::new(&h, 1);
        let e1 = idempotent(&h, 1);
        for u in [0usize, 5, 13, 26] {
            let mut y = vec![Scalar::ZERO; block.dim()];
            y[u] = Scalar::ONE;
            let x = block.embed(&y);
            assert_eq!(h.mul(&x, &e1), x);
            assert_eq!(block.project(&x), y);
        }
        // block product agrees with the product in H
        let x = block.embed(&block.gen(Gen::B));
        let y = block.embed(&block.gen(Gen::A));
        assert_eq!(block.project(&h.mul(&x, &y)), block.mul(&block.gen(Gen::B), &block.gen(Gen::A)));
    }
}
