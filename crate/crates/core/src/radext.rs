//! Jacobson radical, radical filtrations, projective covers, Ext¹ dimensions
//! and the wildness criterion.
//!
//! Per-block work happens in block coordinates (see [`BlockAlgebra`]). The
//! radical of H is the direct sum of the block radicals, so the whole-algebra
//! filtration is assembled block by block.

use crate::algebra::{Algebra, Element, Gen, Variant, CHAR2_WORDS};
use crate::blocks::{block_census, idempotent, BlockAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::identities::{shifted_b_group, SHIFTED_B_PRIMES};
use crate::linalg::{is_zero_vec, kernel, quotient_dim, Matrix, Subspace};
use crate::reps::{
    annihilator, hom_space, iso_test, quotient, semisimple_census, simple_census, submodule, IsoVerdict, Module,
    SimpleModule,
};

/// J = intersection of the kernels of x ↦ ρ_S(x) over the simple census.
pub fn jacobson_radical(h: &Algebra, simples: &[SimpleModule]) -> Subspace {
    let mut rows = Matrix::zeros(0, h.dim());
    for s in simples {
        rows = rows.vstack(&s.module.representation_rows(h));
    }
    kernel(h.field(), &rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Whole,
    Block(u32),
}

#[derive(Clone, Debug)]
pub struct RadicalFiltration {
    pub scope: Scope,
    /// [J, J², …] ending with the zero space.
    pub chain: Vec<Subspace>,
}

impl RadicalFiltration {
    /// dim J^k / J^(k+1) for k = 1, 2, …
    pub fn layer_dims(&self) -> Vec<usize> {
        self.chain.windows(2).map(|w| w[0].dim() - w[1].dim()).collect()
    }

    pub fn power(&self, k: usize) -> &Subspace {
        let last = self.chain.len() - 1;
        &self.chain[(k - 1).min(last)]
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IdealSide {
    Left,
    Right,
}

/// Greedy generating set of a one-sided ideal contained in `space`.
fn ideal_generators(block: &BlockAlgebra, space: &Subspace, side: IdealSide) -> Vec<Vec<Scalar>> {
    let f = block.algebra().field();
    let mats: Vec<Matrix> = Gen::ALL
        .iter()
        .map(|&gen| match side {
            IdealSide::Left => block.left_mul_matrix(&block.gen(gen)),
            IdealSide::Right => block.right_mul_matrix(&block.gen(gen)),
        })
        .collect();
    let mut closure = Subspace::zero(block.dim());
    let mut gens = Vec::new();
    for v in space.basis() {
        if closure.contains(f, v) {
            continue;
        }
        gens.push(v.clone());
        let mut queue = vec![v.clone()];
        closure.insert(f, v.clone());
        while let Some(x) = queue.pop() {
            for m in &mats {
                let y = m.mul_vec(f, &x);
                if closure.insert(f, y.clone()) {
                    queue.push(y);
                }
            }
        }
    }
    gens
}

pub struct BlockData<'a> {
    pub block: BlockAlgebra<'a>,
    pub filtration: RadicalFiltration,
    /// Generators of J_i as a left ideal.
    pub left_generators: Vec<Vec<Scalar>>,
    pub nilpotent: bool,
}

impl<'a> BlockData<'a> {
    fn new(h: &'a Algebra, i: u32, radical: &Subspace) -> Self {
        let f = h.field();
        let block = BlockAlgebra::new(h, i);
        let rows = radical.basis().iter().map(|v| block.project(&Element(v.clone())));
        let j = Subspace::from_rows(f, block.dim(), rows);
        let right = ideal_generators(&block, &j, IdealSide::Right);
        let left_generators = ideal_generators(&block, &j, IdealSide::Left);
        // J^(m+1) = J J^m = sum_r r J^m for right-ideal generators r of J
        let right_mats: Vec<Matrix> = right.iter().map(|r| block.left_mul_matrix(r)).collect();
        let mut chain = vec![j];
        let mut nilpotent = true;
        loop {
            let last = chain.last().expect("nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = Subspace::from_rows(
                f,
                block.dim(),
                right_mats.iter().flat_map(|m| last.basis().iter().map(move |y| m.mul_vec(f, y))),
            );
            if next.dim() == last.dim() {
                nilpotent = false;
                break;
            }
            chain.push(next);
        }
        BlockData { block, filtration: RadicalFiltration { scope: Scope::Block(i), chain }, left_generators, nilpotent }
    }

    pub fn radical(&self) -> &Subspace {
        &self.filtration.chain[0]
    }
}

/// Everything downstream of the simple census, computed once per algebra.
pub struct Analysis<'a> {
    pub h: &'a Algebra,
    pub simples: Vec<SimpleModule>,
    pub radical: Subspace,
    /// Simples (positions in `simples`) belonging to each block.
    pub census: Vec<Vec<usize>>,
    pub blocks: Vec<BlockData<'a>>,
}

impl<'a> Analysis<'a> {
    pub fn new(h: &'a Algebra) -> Result<Self> {
        let simples = match simple_census(h) {
            Ok(s) => s,
            Err(Error::UnsupportedLambda) => return Err(Error::CensusIncomplete),
            Err(e) => return Err(e),
        };
        let radical = jacobson_radical(h, &simples);
        let modules: Vec<Module> = simples.iter().map(|s| s.module.clone()).collect();
        let census = block_census(h, &modules)?;
        let blocks = (0..h.spec().t).map(|i| BlockData::new(h, i, &radical)).collect();
        Ok(Analysis { h, simples, radical, census, blocks })
    }

    pub fn wedderburn_ok(&self) -> bool {
        let semisimple: usize = self.simples.iter().map(|s| s.module.dim().pow(2)).sum();
        self.h.dim() - self.radical.dim() == semisimple
    }

    pub fn radical_is_ideal(&self) -> bool {
        let h = self.h;
        let f = h.field();
        self.radical.basis().iter().all(|v| {
            Gen::ALL.iter().all(|&gen| {
                let left = h.apply_gen(gen, v);
                let right = h.mul_by_basis_right(&Element(v.clone()), h.gen_index(gen));
                self.radical.contains(f, &left) && self.radical.contains(f, &right.0)
            })
        })
    }

    pub fn radical_nilpotent(&self) -> bool {
        self.blocks.iter().all(|b| b.nilpotent) && !self.radical.contains(self.h.field(), &self.h.one().0)
    }

    /// J^k of the whole algebra as the sum of the embedded block powers.
    pub fn whole_filtration(&self) -> RadicalFiltration {
        let f = self.h.field();
        let depth = self.blocks.iter().map(|b| b.filtration.chain.len()).max().unwrap_or(1);
        let chain = (1..=depth)
            .map(|k| {
                let rows =
                    self.blocks.iter().flat_map(|b| b.filtration.power(k).basis().iter().map(|y| b.block.embed(y).0));
                Subspace::from_rows(f, self.h.dim(), rows)
            })
            .collect();
        RadicalFiltration { scope: Scope::Whole, chain }
    }

    pub fn filtration(&self, scope: Scope) -> RadicalFiltration {
        match scope {
            Scope::Whole => self.whole_filtration(),
            Scope::Block(i) => self.blocks[i as usize].filtration.clone(),
        }
    }

    /// Generators of J as a left ideal of H.
    pub fn radical_left_generators(&self) -> Vec<Element> {
        self.blocks.iter().flat_map(|b| b.left_generators.iter().map(|y| b.block.embed(y))).collect()
    }

    /// Socle of a module and its multiplicity census over `simples`.
    pub fn socle(&self, m: &Module) -> Result<(Subspace, Vec<usize>)> {
        let soc = annihilator(self.h, m, &self.radical_left_generators());
        let layer = submodule(m, &soc)?;
        Ok((soc, semisimple_census(&layer, &self.simples)))
    }

    /// Position in `simples` of the simple with label i.
    pub fn simple(&self, i: u32) -> &SimpleModule {
        self.simples.iter().find(|s| s.label.index == i).expect("label in census")
    }

    /// (dim J/J², dim J²/J³) of block i.
    pub fn block_layers(&self, i: u32) -> (usize, usize) {
        let fil = &self.blocks[i as usize].filtration;
        let f = self.h.field();
        let j1 = quotient_dim(f, fil.power(1), fil.power(2)).expect("chain");
        let j2 = quotient_dim(f, fil.power(2), fil.power(3)).expect("chain");
        (j1, j2)
    }
}

/// Claimed spanning sets N (for J²) and M (for J³) of a local block, in block coordinates.
pub fn claimed_layers(an: &Analysis, i: u32) -> Option<(Subspace, Subspace)> {
    let h = an.h;
    let f = h.field();
    let spec = h.spec();
    let block = &an.blocks[i as usize].block;
    let ps = spec.ps();
    let xi_i = f.xi_pow(i as i64);
    let shift = |x: &Element, c: Scalar| h.add_scalar(x, f.neg(c));
    let g_shift = shift(&h.gen(Gen::G), xi_i);
    let a = h.gen(Gen::A);
    let e = idempotent(h, i);
    let g_powers: Vec<Element> = (0..ps).map(|k| h.pow(&g_shift, k)).collect();
    let project = |x: &Element| block.project(&h.mul(x, &e));
    // (element, degree)
    let mut elements: Vec<(Vec<Scalar>, u32)> = Vec::new();
    let extra_n: Vec<Element>;
    let extra_m: Vec<Element>;
    match spec.variant {
        Variant::CharPLifting => {
            let local = spec.lambda.is_zero() || (spec.lambda == Scalar::ONE && i == 0);
            if !local {
                return None;
            }
            let b_shift = shift(&h.gen(Gen::B), f.mul(f.pth_root(spec.mu), f.sub(Scalar::ONE, xi_i)));
            let p = spec.p;
            let a_pows: Vec<Element> = (0..p).map(|k| h.pow(&a, k)).collect();
            let b_pows: Vec<Element> = (0..p).map(|k| h.pow(&b_shift, k)).collect();
            for (i1, gp) in g_powers.iter().enumerate() {
                for (j1, ap) in a_pows.iter().enumerate() {
                    for (k1, bp) in b_pows.iter().enumerate() {
                        let x = h.mul_all(&[gp, ap, bp]);
                        elements.push((project(&x), (i1 + j1 + k1) as u32));
                    }
                }
            }
            extra_n = vec![a.clone()];
            extra_m = vec![h.mul(&g_shift, &a), h.mul(&a, &a), h.mul(&a, &b_shift)];
        }
        Variant::Char2Nichols => {
            for (j, gp) in g_powers.iter().enumerate() {
                for w in CHAR2_WORDS {
                    let x = h.mul(gp, &h.basis_element(h.char2_index(0, w)));
                    elements.push((project(&x), (j + w.len()) as u32));
                }
            }
            let word = |w: &str| h.basis_element(h.char2_index(0, w));
            extra_n = vec![a.clone()];
            extra_m = vec![h.mul(&g_shift, &a), word("ab"), word("ba")];
        }
    }
    let span = |min_deg: u32, extra: &[Element]| {
        let rows =
            elements.iter().filter(|(_, d)| *d >= min_deg).map(|(v, _)| v.clone()).chain(extra.iter().map(&project));
        Subspace::from_rows(f, block.dim(), rows)
    };
    Some((span(2, &extra_n), span(3, &extra_m)))
}

/// Which shifted b is used for the projective cover of S_i, λ = 1, i ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverGenerator {
    /// P = H e_i
    Idempotent,
    /// b (μ = 0)
    Plain,
    /// b + μ^(1/p)(ξ^i - 1) (μ ≠ 0, s = 1)
    ScalarShift,
    /// b + μ^(1/p)(g - 1) (μ ≠ 0, s > 1, b_1^p = 0)
    GroupShift,
}

pub fn cover_generator(h: &Algebra, i: u32) -> Result<CoverGenerator> {
    let spec = h.spec();
    if spec.variant == Variant::Char2Nichols || spec.lambda.is_zero() || i == 0 {
        return Ok(CoverGenerator::Idempotent);
    }
    if spec.lambda != Scalar::ONE {
        return Err(Error::UnsupportedParameterRegion("projective covers are built for lambda in {0, 1}".into()));
    }
    if spec.mu.is_zero() {
        Ok(CoverGenerator::Plain)
    } else if spec.s == 1 {
        Ok(CoverGenerator::ScalarShift)
    } else if SHIFTED_B_PRIMES.contains(&spec.p) && h.pow(&shifted_b_group(h), spec.p).is_zero() {
        Ok(CoverGenerator::GroupShift)
    } else {
        Err(Error::UnsupportedParameterRegion(format!(
            "lambda = 1, mu != 0, s = {} > 1 and p = {} outside {{3, 5, 7, 11}}",
            spec.s, spec.p
        )))
    }
}

fn shifted_b(h: &Algebra, i: u32, kind: CoverGenerator) -> Element {
    let f = h.field();
    let b = h.gen(Gen::B);
    match kind {
        CoverGenerator::Idempotent | CoverGenerator::Plain => b,
        CoverGenerator::ScalarShift => {
            let c = f.mul(f.pth_root(h.spec().mu), f.sub(f.xi_pow(i as i64), Scalar::ONE));
            h.add_scalar(&b, c)
        }
        CoverGenerator::GroupShift => shifted_b_group(h),
    }
}

/// ê_i = α⁻¹ a^(p^s - p + 1) y^(p-1) e_i with α = (p-1)!/2^(p-1) (1 - ξ^(i p^s)),
/// returned with y^(p-1) e_i.
pub fn projective_idempotent(h: &Algebra, i: u32) -> Result<(Element, Element)> {
    let kind = cover_generator(h, i)?;
    let e = idempotent(h, i);
    if kind == CoverGenerator::Idempotent {
        return Ok((e.clone(), e));
    }
    let f = h.field();
    let spec = h.spec();
    let (p, ps) = (spec.p, spec.ps());
    let y = h.mul(&h.pow(&shifted_b(h, i, kind), p - 1), &e);
    let fact: i64 = (1..p as i64).product();
    let alpha = f.mul(f.frac(fact, 1i64 << (p - 1)), f.sub(Scalar::ONE, f.xi_pow(i as i64 * ps as i64)));
    let alpha_inv = f.inv(alpha).ok_or_else(|| Error::VerificationFailed(format!("alpha vanishes for i = {i}")))?;
    let hat = h.scale(alpha_inv, &h.mul(&h.pow(&h.gen(Gen::A), ps - p + 1), &y));
    Ok((hat, y))
}

pub struct ProjectiveCover {
    pub label: u32,
    pub generator: CoverGenerator,
    pub idempotent: Element,
    pub idempotent_ok: bool,
    /// H ê_i = H y^(p-1) e_i
    pub same_left_ideal: bool,
    pub dim: usize,
    /// P and its radical layers, in block coordinates.
    pub space: Subspace,
    pub radical: Subspace,
    pub radical_sq: Subspace,
    pub top_dim: usize,
    pub top: IsoVerdict,
    pub socle_dim: usize,
    pub socle: IsoVerdict,
    /// JP / J²P as a module.
    pub radical_layer: Module,
}

/// Left ideal H x inside block i, in block coordinates.
fn left_ideal(block: &BlockAlgebra, x: &[Scalar]) -> Subspace {
    let f = block.algebra().field();
    let r = block.right_mul_matrix(x);
    Subspace::from_rows(f, block.dim(), (0..block.dim()).map(|u| r.column(u)))
}

pub fn projective_cover(an: &Analysis, i: u32, seed: u64) -> Result<ProjectiveCover> {
    let h = an.h;
    let f = h.field();
    let generator = cover_generator(h, i)?;
    let (hat, y) = projective_idempotent(h, i)?;
    let data = &an.blocks[i as usize];
    let block = &data.block;
    let hat_b = block.project(&hat);
    let y_b = block.project(&y);
    let idempotent_ok = h.mul(&hat, &hat) == hat;
    let space = left_ideal(block, &hat_b);
    let same_left_ideal = space == left_ideal(block, &y_b);

    // JP = J ê, J²P = J² ê
    let r = block.right_mul_matrix(&hat_b);
    let times_hat = |s: &Subspace| Subspace::from_rows(f, block.dim(), s.basis().iter().map(|v| r.mul_vec(f, v)));
    let radical = times_hat(data.filtration.power(1));
    let radical_sq = times_hat(data.filtration.power(2));

    let regular = block.regular_module();
    let p_mod = submodule(&regular, &space)?;
    let in_p = |s: &Subspace| Subspace::from_rows(f, space.dim(), s.basis().iter().map(|v| space.coords(v)));
    let top_mod = quotient(&p_mod, &in_p(&radical))?;
    let simple = &an.simple(i).module;
    let top = iso_test(&top_mod, simple, seed);

    let mut soc = space.clone();
    for l in &data.left_generators {
        let lm = block.left_mul_matrix(l);
        soc = soc.intersect(f, &kernel(f, &lm));
    }
    let soc_mod = submodule(&regular, &soc)?;
    let socle = iso_test(&soc_mod, simple, seed);

    let jp_mod = submodule(&regular, &radical)?;
    let in_jp = Subspace::from_rows(f, radical.dim(), radical_sq.basis().iter().map(|v| radical.coords(v)));
    let radical_layer = quotient(&jp_mod, &in_jp)?;
    Ok(ProjectiveCover {
        label: i,
        generator,
        idempotent: hat,
        idempotent_ok,
        same_left_ideal,
        dim: space.dim(),
        top_dim: top_mod.dim(),
        top,
        socle_dim: soc.dim(),
        socle,
        space,
        radical,
        radical_sq,
        radical_layer,
    })
}

/// dim Ext¹(S_i, S_j) = dim Hom(JP/J²P, S_j) / dim End(S_j).
pub fn ext_dim_from_cover(cover: &ProjectiveCover, target: &SimpleModule) -> usize {
    let end = hom_space(&target.module, &target.module).dim();
    hom_space(&cover.radical_layer, &target.module).dim() / end
}

pub fn ext_dim(an: &Analysis, i: u32, j: u32, seed: u64) -> Result<usize> {
    let cover = projective_cover(an, i, seed)?;
    Ok(ext_dim_from_cover(&cover, an.simple(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Wild,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Wild => "WILD",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockWildness {
    pub block: u32,
    pub local: bool,
    pub symmetric: bool,
    pub j_over_j2: usize,
    pub j2_over_j3: usize,
    pub verdict: Verdict,
}

/// The local-symmetric criterion per block; never claims tameness.
pub fn wildness(an: &Analysis, symmetric: bool) -> Vec<BlockWildness> {
    (0..an.h.spec().t)
        .map(|i| {
            let members = &an.census[i as usize];
            let local = members.len() == 1 && an.simples[members[0]].module.dim() == 1;
            let (j1, j2) = an.block_layers(i);
            let wild = local && symmetric && j1 == 2 && j2 >= 3;
            BlockWildness {
                block: i,
                local,
                symmetric,
                j_over_j2: j1,
                j2_over_j3: j2,
                verdict: if wild { Verdict::Wild } else { Verdict::Unknown },
            }
        })
        .collect()
}

/// Whether every vector of `s` is annihilated by block multiplication with `x`.
pub fn annihilates(block: &BlockAlgebra, x: &[Scalar], s: &Subspace) -> bool {
    let f = block.algebra().field();
    let m = block.left_mul_matrix(x);
    s.basis().iter().all(|v| is_zero_vec(&m.mul_vec(f, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;

    fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
        Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
    }

    #[test]
    fn radical_dimensions() {
        let h = alg(3, 1, 2, 0, 0);
        let an = Analysis::new(&h).unwrap();
        assert_eq!(an.radical.dim(), 52);
        assert!(an.wedderburn_ok() && an.radical_is_ideal() && an.radical_nilpotent());
        let h = alg(3, 1, 2, 1, 0);
        let an = Analysis::new(&h).unwrap();
        assert_eq!(an.radical.dim(), 44);
        assert!(an.wedderburn_ok() && an.radical_is_ideal() && an.radical_nilpotent());
    }

    #[test]
    fn membership_of_a_and_b() {
        let h = alg(3, 1, 1, 1, 1);
        let an = Analysis::new(&h).unwrap();
        let f = h.field();
        assert!(an.radical.contains(f, &h.gen(Gen::A).0));
        assert!(an.radical.contains(f, &h.gen(Gen::B).0));
        let h = alg(3, 1, 2, 1, 1);
        let an = Analysis::new(&h).unwrap();
        let f = h.field();
        assert!(!an.radical.contains(f, &h.gen(Gen::A).0));
        assert!(!an.radical.contains(f, &h.gen(Gen::B).0));
    }

    #[test]
    fn layers_of_local_blocks() {
        let h = alg(3, 1, 2, 0, 1);
        let an = Analysis::new(&h).unwrap();
        for i in 0..2 {
            assert_eq!(an.block_layers(i), (2, 4));
            let (n, m) = claimed_layers(&an, i).unwrap();
            assert_eq!(&n, an.blocks[i as usize].filtration.power(2));
            assert_eq!(&m, an.blocks[i as usize].filtration.power(3));
        }
        let h = alg(2, 1, 3, 0, 0);
        let an = Analysis::new(&h).unwrap();
        for i in 0..3 {
            assert_eq!(an.block_layers(i).1, 3);
        }
    }

    #[test]
    fn covers_at_3_1_2() {
        let h = alg(3, 1, 2, 1, 0);
        let an = Analysis::new(&h).unwrap();
        let p0 = projective_cover(&an, 0, 0).unwrap();
        let p1 = projective_cover(&an, 1, 0).unwrap();
        assert_eq!((p0.dim, p1.dim), (27, 9));
        assert!(p1.idempotent_ok && p1.same_left_ideal);
        assert_eq!((p1.top, p1.socle), (IsoVerdict::Isomorphic, IsoVerdict::Isomorphic));
        // α = 1 here, so ê_1 = a b² e_1
        let e1 = idempotent(&h, 1);
        let expected = h.mul_all(&[&h.gen(Gen::A), &h.pow(&h.gen(Gen::B), 2), &e1]);
        assert_eq!(p1.idempotent, expected);
        assert_eq!(ext_dim_from_cover(&p0, an.simple(0)), 2);
    }

    #[test]
    fn wildness_at_3_1_2() {
        let h = alg(3, 1, 2, 1, 1);
        let an = Analysis::new(&h).unwrap();
        let v: Vec<Verdict> = wildness(&an, true).iter().map(|b| b.verdict).collect();
        assert_eq!(v, vec![Verdict::Wild, Verdict::Unknown]);
    }
}
