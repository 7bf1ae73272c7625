//! Modules given by matrices for g, a, b: simple modules, tensor products,
//! intertwiners, socles, the two-parameter families and isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraSpec, Element, Gen, Variant};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};
use crate::hopf::TensorElement;
use crate::identities::{commutation_coeffs, CoeffKind};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::relations::{check_relations, GenAction, Relation};

#[derive(Clone, Debug)]
pub struct Module {
    spec: AlgebraSpec,
    dim: usize,
    g: Matrix,
    a: Matrix,
    b: Matrix,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.g == other.g && self.a == other.a && self.b == other.b
    }
}

impl GenAction for Module {
    fn field(&self) -> &FieldCtx {
        &self.spec.field
    }

    fn space_dim(&self) -> usize {
        self.dim
    }

    fn act(&self, gen: Gen, v: &[Scalar]) -> Vec<Scalar> {
        self.mat(gen).mul_vec(&self.spec.field, v)
    }
}

/// Build a module, checking the defining relations of `spec` on the matrices.
pub fn module_make(spec: &AlgebraSpec, g: Matrix, a: Matrix, b: Matrix) -> Result<Module> {
    let d = g.rows();
    if [&g, &a, &b].iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::InvalidSpec("module matrices must be square of equal size".into()));
    }
    let m = Module::from_parts(spec, g, a, b);
    check_relations(&m, &Relation::defining(spec)).map_err(Error::RelationViolation)?;
    Ok(m)
}

impl Module {
    /// Unchecked constructor; callers guarantee the relations.
    pub(crate) fn from_parts(spec: &AlgebraSpec, g: Matrix, a: Matrix, b: Matrix) -> Module {
        Module { spec: spec.clone(), dim: g.rows(), g, a, b }
    }

    pub fn one_dim(spec: &AlgebraSpec, g: Scalar, a: Scalar, b: Scalar) -> Result<Module> {
        module_make(spec, Matrix::scalar(1, g), Matrix::scalar(1, a), Matrix::scalar(1, b))
    }

    /// The counit module.
    pub fn trivial(spec: &AlgebraSpec) -> Module {
        Module::one_dim(spec, Scalar::ONE, Scalar::ZERO, Scalar::ZERO).expect("counit module")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FieldCtx {
        &self.spec.field
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn mat(&self, gen: Gen) -> &Matrix {
        match gen {
            Gen::G => &self.g,
            Gen::A => &self.a,
            Gen::B => &self.b,
        }
    }

    /// Matrix of the normal word `w` of `h`.
    fn word_matrix(&self, h: &Algebra, word: u32) -> Matrix {
        let f = self.field();
        h.word_letters(word).iter().fold(Matrix::identity(self.dim), |acc, &gen| acc.mul(f, self.mat(gen)))
    }

    /// ρ(x) for an element of the algebra.
    pub fn act_element(&self, h: &Algebra, x: &Element) -> Matrix {
        let f = self.field();
        let w = h.word_count();
        let words: Vec<Matrix> = (0..w as u32).map(|k| self.word_matrix(h, k)).collect();
        let n = h.n() as usize;
        // ρ(x) = X_0 + G (X_1 + G (X_2 + ...)), X_r = sum_w c_(r,w) ρ(w)
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for r in (0..n).rev() {
            acc = self.g.mul(f, &acc);
            for (word, &c) in words.iter().zip(&x.0[r * w..(r + 1) * w]) {
                if !c.is_zero() {
                    acc.add_scaled(f, c, word);
                }
            }
        }
        acc
    }

    /// ρ of every basis element of `h`, as rows: entry (r, c) of ρ(basis u) at
    /// column u of row r * d + c.
    pub fn representation_rows(&self, h: &Algebra) -> Matrix {
        let f = self.field();
        let d = self.dim;
        let w = h.word_count();
        let words: Vec<Matrix> = (0..w as u32).map(|k| self.word_matrix(h, k)).collect();
        let mut out = Matrix::zeros(d * d, h.dim());
        let mut gpow = Matrix::identity(d);
        for r in 0..h.n() as usize {
            for (k, wm) in words.iter().enumerate() {
                let m = gpow.mul(f, wm);
                for (e, &val) in m.as_slice().iter().enumerate() {
                    out.set(e, r * w + k, val);
                }
            }
            gpow = self.g.mul(f, &gpow);
        }
        out
    }

    /// Pull back along an algebra map given by generator images `g ↦ G, a ↦ ca A, b ↦ cb B`.
    fn rescaled(&self, spec: &AlgebraSpec, ca: Scalar, cb: Scalar) -> Module {
        let f = self.field();
        Module::from_parts(spec, self.g.clone(), self.a.scale(f, ca), self.b.scale(f, cb))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimpleLabel {
    pub index: u32,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub label: SimpleLabel,
    pub module: Module,
}

/// Span of all products of ρ(g), ρ(a), ρ(b). Equals d^2 exactly when the
/// module is absolutely simple.
pub fn generated_matrix_algebra_dim(m: &Module) -> usize {
    let f = m.field();
    let d = m.dim();
    let mut span = Subspace::zero(d * d);
    let mut queue = vec![Matrix::identity(d)];
    span.insert(f, queue[0].as_slice().to_vec());
    while let Some(x) = queue.pop() {
        for gen in Gen::ALL {
            let y = m.mat(gen).mul(f, &x);
            if span.insert(f, y.as_slice().to_vec()) {
                queue.push(y);
            }
        }
    }
    span.dim()
}

/// S_i for λ = 1, i ≥ 1: basis v_m = b^m v with g v = ξ^i v, a v = (1 - ξ^i) v.
pub fn induced_simple(h: &Algebra, i: u32) -> Result<Module> {
    let spec = h.spec();
    let f = h.field();
    if spec.variant != Variant::CharPLifting || spec.lambda != Scalar::ONE || i == 0 || i >= spec.t {
        return Err(Error::OutOfRange(format!("induced simple needs lambda = 1, odd p and 1 <= i < t (i = {i})")));
    }
    let p = spec.p as usize;
    let xi_i = f.xi_pow(i as i64);
    let c = f.sub(Scalar::ONE, xi_i);
    let mut g = Matrix::zeros(p, p);
    let mut a = Matrix::zeros(p, p);
    let mut b = Matrix::zeros(p, p);
    for m in 0..p {
        if m + 1 < p {
            b.set(m + 1, m, Scalar::ONE);
        } else {
            let closing = f.mul(spec.mu, f.sub(Scalar::ONE, f.xi_pow(i as i64 * p as i64)));
            b.set(0, m, closing);
        }
        // g b^m v = sum_r beta_(m,r) ξ^i c^r v_(m-r);  a b^m v = sum_r alpha_(m,r) c^(r+1) v_(m-r)
        let (alpha, beta) = if m == 0 {
            (vec![Scalar::ONE], vec![Scalar::ONE])
        } else {
            (
                commutation_coeffs(f, CoeffKind::AB, m as u32)?.entries,
                commutation_coeffs(f, CoeffKind::GB, m as u32)?.entries,
            )
        };
        for r in 0..=m {
            let cr = f.pow(c, r as u64);
            g.set(m - r, m, f.mul(beta[r], f.mul(xi_i, cr)));
            a.set(m - r, m, f.mul(alpha[r], f.mul(cr, c)));
        }
    }
    module_make(spec, g, a, b)
}

/// The complete list of simple modules for λ ∈ {0, 1}, p = 2, or t = 1.
pub fn simple_modules(h: &Algebra) -> Result<Vec<SimpleModule>> {
    let spec = h.spec();
    let f = h.field();
    let t = spec.t;
    let mut out = Vec::new();
    let one = |i: u32, m: Module| SimpleModule { label: SimpleLabel { index: i, dim: m.dim() }, module: m };
    if t == 1 {
        out.push(one(0, Module::trivial(spec)));
    } else if spec.variant == Variant::Char2Nichols || spec.lambda.is_zero() {
        let root = f.pth_root(spec.mu);
        for i in 0..t {
            let xi_i = f.xi_pow(i as i64);
            let b = f.mul(root, f.sub(Scalar::ONE, xi_i));
            out.push(one(i, Module::one_dim(spec, xi_i, Scalar::ZERO, b)?));
        }
    } else if spec.lambda == Scalar::ONE {
        out.push(one(0, Module::trivial(spec)));
        for i in 1..t {
            out.push(one(i, induced_simple(h, i)?));
        }
    } else {
        return Err(Error::UnsupportedLambda);
    }
    for s in &out {
        let d = s.module.dim();
        if generated_matrix_algebra_dim(&s.module) != d * d {
            return Err(Error::VerificationFailed(format!("simple {} is not simple", s.label.index)));
        }
        if hom_space(&s.module, &s.module).dim() != 1 {
            return Err(Error::VerificationFailed(format!("End of simple {} is not one-dimensional", s.label.index)));
        }
    }
    Ok(out)
}

/// Simple modules for any λ: transported through the normalisation when λ ∉ {0, 1}.
pub fn simple_census(h: &Algebra) -> Result<Vec<SimpleModule>> {
    match simple_modules(h) {
        Err(Error::UnsupportedLambda) => {
            let norm = normalize_parameters(h)?;
            let target_simples = simple_modules(&norm.target)?;
            Ok(target_simples
                .into_iter()
                .map(|s| SimpleModule { label: s.label, module: norm.transport(h.spec(), &s.module) })
                .collect())
        }
        other => other,
    }
}

/// The isomorphism H(λ, μ) → H(1, λ⁻¹μ), g ↦ g, a ↦ λ^(1/p) a, b ↦ λ^(1/p) b,
/// with its certificate.
pub struct Normalization {
    pub target: Algebra,
    pub lambda_root: Scalar,
    pub images: [Element; 3],
    /// Name of the first source relation failing on the images, if any.
    pub relation_failure: Option<String>,
    pub basis_map_rank: usize,
    pub coalgebra_map: bool,
}

impl Normalization {
    pub fn certified(&self, source_dim: usize) -> bool {
        self.relation_failure.is_none() && self.basis_map_rank == source_dim && self.coalgebra_map
    }

    /// A module of the target, viewed as a module of the source.
    pub fn transport(&self, source: &AlgebraSpec, m: &Module) -> Module {
        m.rescaled(source, self.lambda_root, self.lambda_root)
    }
}

struct ImageAction<'a> {
    target: &'a Algebra,
    images: &'a [Element; 3],
}

impl GenAction for ImageAction<'_> {
    fn field(&self) -> &FieldCtx {
        self.target.field()
    }

    fn space_dim(&self) -> usize {
        self.target.dim()
    }

    fn act(&self, gen: Gen, v: &[Scalar]) -> Vec<Scalar> {
        self.target.mul(&self.images[gen as usize], &Element(v.to_vec())).0
    }
}

pub fn normalize_parameters(h: &Algebra) -> Result<Normalization> {
    let spec = h.spec();
    if spec.variant != Variant::CharPLifting {
        return Err(Error::InvalidSpec("normalisation applies to odd characteristic".into()));
    }
    if spec.lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let f = h.field();
    let lambda_inv = f.inv(spec.lambda).expect("nonzero");
    let target_spec = AlgebraSpec::new(f.clone(), spec.s, Scalar::ONE, f.mul(lambda_inv, spec.mu))?;
    let target = Algebra::build(target_spec)?;
    let root = f.pth_root(spec.lambda);
    let images = [target.gen(Gen::G), target.scale(root, &target.gen(Gen::A)), target.scale(root, &target.gen(Gen::B))];
    let relation_failure =
        check_relations(&ImageAction { target: &target, images: &images }, &Relation::defining(spec)).err();

    // image of every source basis element g^r w
    let basis_images: Vec<Element> = (0..h.dim())
        .map(|u| {
            let b = h.basis_index(u);
            let mut x = target.g_pow(b.g as i64);
            for &gen in h.word_letters(b.word) {
                x = target.mul(&x, &images[gen as usize]);
            }
            x
        })
        .collect();
    let basis_map_rank = Matrix::from_rows(basis_images.iter().map(|x| x.0.clone()).collect()).rank(f);

    let coalgebra_map = Gen::ALL.iter().all(|&gen| {
        let lhs = target.delta(&images[gen as usize]);
        let mut rhs = TensorElement::default();
        for (&(u, v), &c) in &h.delta(&h.gen(gen)).terms {
            let term = TensorElement::outer(&target, &target.scale(c, &basis_images[u]), &basis_images[v]);
            rhs = rhs.add(&target, &term);
        }
        lhs == rhs
    });
    Ok(Normalization { target, lambda_root: root, images, relation_failure, basis_map_rank, coalgebra_map })
}

/// M ⊗ N with g ↦ G⊗G, a ↦ A⊗1 + G⊗A, b ↦ B⊗1 + G⊗B.
pub fn tensor_module(m: &Module, n: &Module) -> Result<Module> {
    let f = m.field();
    let id = Matrix::identity(n.dim());
    let g = m.g.kron(f, &n.g);
    let a = m.a.kron(f, &id).add(f, &m.g.kron(f, &n.a));
    let b = m.b.kron(f, &id).add(f, &m.g.kron(f, &n.b));
    module_make(&m.spec, g, a, b)
}

/// Intertwiners F: M → N (d_N × d_M, flattened row-major).
pub fn hom_space(m: &Module, n: &Module) -> Subspace {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let mut eqs = Matrix::zeros(3 * unknowns, unknowns);
    for (block, gen) in Gen::ALL.iter().enumerate() {
        let (rm, rn) = (m.mat(*gen), n.mat(*gen));
        for r in 0..dn {
            for c in 0..dm {
                let row = block * unknowns + r * dm + c;
                // (F ρ_M)[r][c] - (ρ_N F)[r][c]
                for k in 0..dm {
                    let x = rm.get(k, c);
                    if !x.is_zero() {
                        let col = r * dm + k;
                        eqs.set(row, col, f.add(eqs.get(row, col), x));
                    }
                }
                for k in 0..dn {
                    let x = rn.get(r, k);
                    if !x.is_zero() {
                        let col = k * dm + c;
                        eqs.set(row, col, f.sub(eqs.get(row, col), x));
                    }
                }
            }
        }
    }
    kernel(f, &eqs)
}

fn is_stable(m: &Module, u: &Subspace) -> bool {
    let f = m.field();
    u.basis().iter().all(|v| Gen::ALL.iter().all(|&gen| u.contains(f, &m.act(gen, v))))
}

/// The submodule spanned by `u`, in the canonical basis of `u`.
pub fn submodule(m: &Module, u: &Subspace) -> Result<Module> {
    if !is_stable(m, u) {
        return Err(Error::VerificationFailed("subspace is not a submodule".into()));
    }
    let k = u.dim();
    let mats = Gen::ALL.map(|gen| {
        let cols = u.basis().iter().map(|v| u.coords(&m.act(gen, v))).collect();
        Matrix::from_columns(k, cols)
    });
    let [g, a, b] = mats;
    Ok(Module::from_parts(&m.spec, g, a, b))
}

/// M / U, with basis the standard vectors at the non-pivot positions of `u`.
pub fn quotient(m: &Module, u: &Subspace) -> Result<Module> {
    if !is_stable(m, u) {
        return Err(Error::VerificationFailed("subspace is not a submodule".into()));
    }
    let f = m.field();
    let d = m.dim();
    let mut is_pivot = vec![false; d];
    for &p in u.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..d).filter(|&c| !is_pivot[c]).collect();
    let mats = Gen::ALL.map(|gen| {
        let cols = free
            .iter()
            .map(|&c| {
                let mut e = vec![Scalar::ZERO; d];
                e[c] = Scalar::ONE;
                let r = u.reduce(f, &m.act(gen, &e));
                free.iter().map(|&j| r[j]).collect()
            })
            .collect();
        Matrix::from_columns(free.len(), cols)
    });
    let [g, a, b] = mats;
    Ok(Module::from_parts(&m.spec, g, a, b))
}

/// {v : x v = 0 for every x in `annihilated_by`}. With a generating set of
/// the radical as a left ideal this is the socle.
pub fn annihilator(h: &Algebra, m: &Module, annihilated_by: &[Element]) -> Subspace {
    let d = m.dim();
    let mut stacked = Matrix::zeros(0, d);
    for x in annihilated_by {
        stacked = stacked.vstack(&m.act_element(h, x));
    }
    kernel(m.field(), &stacked)
}

/// Multiplicity of each simple in a semisimple module.
pub fn semisimple_census(layer: &Module, simples: &[SimpleModule]) -> Vec<usize> {
    simples
        .iter()
        .map(|s| {
            let end = hom_space(&s.module, &s.module).dim();
            hom_space(&s.module, layer).dim() / end
        })
        .collect()
}

/// (k, generalised multiplicity, eigenspace dimension) of ρ(g) at ξ^k, k < t.
pub fn g_eigen_census(m: &Module) -> Vec<(u32, usize, usize)> {
    let f = m.field();
    let d = m.dim();
    (0..m.spec.t)
        .map(|k| {
            let shifted = m.g.sub(f, &Matrix::scalar(d, f.xi_pow(k as i64)));
            let eigen = d - shifted.rank(f);
            let general = d - shifted.pow(f, d as u64).rank(f);
            (k, general, eigen)
        })
        .collect()
}

/// Jordan blocks of ρ(g) as (k, size) for eigenvalue ξ^k, sorted.
pub fn g_jordan_type(m: &Module) -> Vec<(u32, usize)> {
    let f = m.field();
    let d = m.dim();
    let mut out = Vec::new();
    for k in 0..m.spec.t {
        let shifted = m.g.sub(f, &Matrix::scalar(d, f.xi_pow(k as i64)));
        // ranks[j] = rank (ρ(g) - ξ^k)^j
        let mut ranks = vec![d];
        let mut power = Matrix::identity(d);
        for _ in 0..=d {
            power = power.mul(f, &shifted);
            ranks.push(power.rank(f));
            if ranks[ranks.len() - 1] == ranks[ranks.len() - 2] {
                break;
            }
        }
        let at_least = |j: usize| -> usize {
            if j >= ranks.len() {
                0
            } else {
                ranks[j - 1] - ranks[j]
            }
        };
        for size in 1..ranks.len() {
            let exact = at_least(size) - at_least(size + 1);
            out.extend(std::iter::repeat_n((k, size), exact));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Characteristic 2: b ↦ [[0, γ], [0, 0]].
    M,
    /// Odd p, λ = 0: b ↦ [[δ, γ], [0, δ]] with δ = μ^(1/p)(1 - ξ^i).
    N,
}

/// g ↦ [[ξ^i, β], [0, ξ^i]], a ↦ 0, b as in `family`.
pub fn two_param_module(h: &Algebra, family: Family, i: u32, beta: Scalar, gamma: Scalar) -> Result<Module> {
    let spec = h.spec();
    let f = h.field();
    let delta = match family {
        Family::M if spec.variant == Variant::Char2Nichols => Scalar::ZERO,
        Family::N if spec.variant == Variant::CharPLifting && spec.lambda.is_zero() => {
            f.mul(f.pth_root(spec.mu), f.sub(Scalar::ONE, f.xi_pow(i as i64)))
        }
        _ => return Err(Error::InvalidSpec(format!("family {family:?} does not apply to this algebra"))),
    };
    let xi_i = f.xi_pow(i as i64);
    let g = Matrix::from_rows(vec![vec![xi_i, beta], vec![Scalar::ZERO, xi_i]]);
    let b = Matrix::from_rows(vec![vec![delta, gamma], vec![Scalar::ZERO, delta]]);
    module_make(spec, g, Matrix::zeros(2, 2), b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    /// No invertible intertwiner among the random samples.
    ProbablyNotIsomorphic,
}

const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
const RANDOM_SAMPLES: usize = 200;

pub fn iso_test(m: &Module, n: &Module, seed: u64) -> IsoVerdict {
    if m.dim() != n.dim() {
        return IsoVerdict::NotIsomorphic;
    }
    let f = m.field();
    let d = m.dim();
    let hom = hom_space(m, n);
    let k = hom.dim();
    if k == 0 {
        return IsoVerdict::NotIsomorphic;
    }
    let invertible = |coeffs: &[Scalar]| {
        let v = hom.combination(f, coeffs);
        let rows = v.chunks(d).map(|r| r.to_vec()).collect();
        Matrix::from_rows(rows).rank(f) == d
    };
    let q = f.size() as u64;
    let total = (q as f64).powi(k as i32);
    if total <= EXHAUSTIVE_LIMIT as f64 {
        let mut coeffs = vec![Scalar::ZERO; k];
        for mut code in 1..q.pow(k as u32) {
            for c in coeffs.iter_mut() {
                *c = Scalar((code % q) as u32);
                code /= q;
            }
            if invertible(&coeffs) {
                return IsoVerdict::Isomorphic;
            }
        }
        return IsoVerdict::NotIsomorphic;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        let coeffs: Vec<Scalar> = (0..k).map(|_| Scalar(rng.gen_range(0..q as u32))).collect();
        if invertible(&coeffs) {
            return IsoVerdict::Isomorphic;
        }
    }
    IsoVerdict::ProbablyNotIsomorphic
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
        Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
    }

    #[test]
    fn module_make_examples() {
        let h = alg(3, 1, 2, 0, 1);
        let f = h.field();
        let xi = f.xi();
        let b = f.mul(f.pth_root(Scalar::ONE), f.sub(Scalar::ONE, xi));
        assert!(Module::one_dim(h.spec(), xi, Scalar::ZERO, b).is_ok());
        assert_eq!(Module::trivial(h.spec()).dim(), 1);
        let bad = Module::one_dim(h.spec(), xi, Scalar::ONE, Scalar::ZERO);
        assert!(matches!(bad, Err(Error::RelationViolation(_))));
        // the a^p rule on its own already rejects it
        let lone =
            Module::from_parts(h.spec(), Matrix::scalar(1, xi), Matrix::scalar(1, Scalar::ONE), Matrix::zeros(1, 1));
        let ap: Vec<Relation> =
            Relation::defining(h.spec()).into_iter().filter(|r| r.name.starts_with("a^p")).collect();
        assert!(check_relations(&lone, &ap).is_err());
    }

    #[test]
    fn simple_modules_examples() {
        let h = alg(3, 1, 2, 0, 1);
        let s = simple_modules(&h).unwrap();
        assert_eq!(s.len(), 2);
        let t1 = &s[1].module;
        assert_eq!(t1.mat(Gen::G).get(0, 0), Scalar(2));
        assert_eq!(t1.mat(Gen::B).get(0, 0), Scalar(2));
        let h1 = alg(3, 1, 2, 1, 1);
        let dims: Vec<usize> = simple_modules(&h1).unwrap().iter().map(|s| s.module.dim()).collect();
        assert_eq!(dims, vec![1, 3]);
        let h2 = alg(2, 1, 3, 0, 0);
        let s2 = simple_modules(&h2).unwrap();
        assert_eq!(s2.len(), 3);
        assert!(s2.iter().all(|s| s.module.dim() == 1 && s.module.mat(Gen::B).is_zero()));
        assert_eq!(simple_modules(&alg(3, 1, 2, 2, 1)).unwrap_err(), Error::UnsupportedLambda);
    }

    #[test]
    fn induced_simple_start_data() {
        let h = alg(3, 1, 2, 1, 0);
        let f = h.field();
        let s = induced_simple(&h, 1).unwrap();
        let xi = f.xi();
        assert_eq!(s.mat(Gen::G).column(0), vec![xi, Scalar::ZERO, Scalar::ZERO]);
        assert_eq!(s.mat(Gen::A).column(0), vec![f.sub(Scalar::ONE, xi), Scalar::ZERO, Scalar::ZERO]);
        // μ = 0 closes the b-cycle with 0
        assert!(s.mat(Gen::B).mul(f, s.mat(Gen::B)).mul(f, s.mat(Gen::B)).is_zero());
        // v is the only common eigenvector of g and a up to scale
        let ge = crate::linalg::eigenspace(f, s.mat(Gen::G), xi);
        let ae = crate::linalg::eigenspace(f, s.mat(Gen::A), f.sub(Scalar::ONE, xi));
        assert_eq!(ge.intersect(f, &ae).dim(), 1);
    }

    #[test]
    fn normalization_example() {
        let h = alg(3, 1, 2, 2, 1);
        let norm = normalize_parameters(&h).unwrap();
        assert_eq!(norm.target.spec().mu, Scalar(2));
        assert_eq!(norm.lambda_root, Scalar(2));
        assert_eq!(norm.basis_map_rank, 54);
        assert!(norm.certified(54));
        let id = normalize_parameters(&alg(3, 1, 2, 1, 1)).unwrap();
        assert_eq!(id.images[1], id.target.gen(Gen::A));
        assert_eq!(normalize_parameters(&alg(3, 1, 2, 0, 1)).err(), Some(Error::ZeroLambda));
        let census = simple_census(&h).unwrap();
        assert_eq!(census.iter().map(|s| s.module.dim()).collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn hom_and_tensor() {
        let h = alg(3, 1, 2, 1, 0);
        let s = simple_modules(&h).unwrap();
        let (s0, s1) = (&s[0].module, &s[1].module);
        assert_eq!(hom_space(s1, s1).dim(), 1);
        assert_eq!(hom_space(s0, s1).dim(), 0);
        let t = tensor_module(s1, s1).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(iso_test(&tensor_module(s0, s1).unwrap(), s1, 0), IsoVerdict::Isomorphic);
        assert_eq!(iso_test(s0, s1, 0), IsoVerdict::NotIsomorphic);
        assert_eq!(iso_test(s1, s1, 0), IsoVerdict::Isomorphic);
    }

    #[test]
    fn jordan_types() {
        let h = alg(3, 1, 2, 1, 0);
        let s = simple_modules(&h).unwrap();
        assert_eq!(g_jordan_type(&s[0].module), vec![(0, 1)]);
        assert_eq!(g_jordan_type(&s[1].module), vec![(1, 3)]);
    }

    #[test]
    fn two_parameter_families() {
        let h = alg(2, 1, 3, 0, 0);
        let f = h.field();
        let m = |b: Scalar, c: Scalar| two_param_module(&h, Family::M, 1, b, c).unwrap();
        let s = simple_modules(&h).unwrap();
        let direct = Module::from_parts(h.spec(), Matrix::scalar(2, f.xi()), Matrix::zeros(2, 2), Matrix::zeros(2, 2));
        assert_eq!(iso_test(&m(Scalar::ZERO, Scalar::ZERO), &direct, 0), IsoVerdict::Isomorphic);
        assert_eq!(semisimple_census(&direct, &s), vec![0, 2, 0]);
        assert_eq!(iso_test(&m(Scalar(1), Scalar::ZERO), &m(Scalar(2), Scalar::ZERO), 0), IsoVerdict::Isomorphic);
        assert_eq!(iso_test(&m(Scalar(1), Scalar(1)), &m(Scalar(1), Scalar(2)), 0), IsoVerdict::NotIsomorphic);
        assert!(two_param_module(&h, Family::N, 1, Scalar(1), Scalar(1)).is_err());
    }
}
