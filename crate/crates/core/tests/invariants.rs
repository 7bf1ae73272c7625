//! Property tests for structural invariants.

use std::sync::LazyLock;

use pointed_hopf::blocks::{idempotent, BlockAlgebra};
use pointed_hopf::hopf::{integral_space, Side};
use pointed_hopf::linalg::{kernel, rref};
use pointed_hopf::{Algebra, AlgebraSpec, Element, FieldCtx, Gen, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
    Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
}

static ODD: LazyLock<Algebra> = LazyLock::new(|| alg(3, 1, 2, 1, 1));
static ODD_ZERO: LazyLock<Algebra> = LazyLock::new(|| alg(3, 1, 2, 0, 1));
static CHAR2: LazyLock<Algebra> = LazyLock::new(|| alg(2, 1, 3, 0, 0));

fn algebras() -> [&'static Algebra; 3] {
    [&ODD, &ODD_ZERO, &CHAR2]
}

/// (p, t) pairs with p ∤ t, covering prime fields and extensions.
const FIELDS: [(u32, u32); 7] = [(2, 1), (2, 3), (2, 5), (3, 2), (3, 4), (5, 3), (7, 4)];

fn field_strategy() -> impl Strategy<Value = FieldCtx> {
    (0..FIELDS.len()).prop_map(|k| FieldCtx::new(FIELDS[k].0, FIELDS[k].1).unwrap())
}

fn scalar_in(f: &FieldCtx, raw: u32) -> Scalar {
    Scalar(raw % f.size())
}

fn element(h: &Algebra, raw: &[u32]) -> Element {
    let q = h.field().size();
    Element((0..h.dim()).map(|k| Scalar(raw[k % raw.len()].wrapping_mul(k as u32 + 1) % q)).collect())
}

fn matrix(f: &FieldCtx, rows: usize, cols: usize, raw: &[u32]) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|i| (0..cols).map(|j| scalar_in(f, raw[(i * cols + j) % raw.len()] >> (j % 5))).collect())
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pth_root_inverts_frobenius(f in field_strategy(), raw in any::<u32>()) {
        let x = scalar_in(&f, raw);
        let p = f.characteristic() as u64;
        prop_assert_eq!(f.pow(f.pth_root(x), p), x);
        prop_assert_eq!(f.pth_root(f.pow(x, p)), x);
    }

    #[test]
    fn xi_has_exact_order(f in field_strategy()) {
        let t = f.root_order();
        prop_assert_eq!(f.pow(f.xi(), t as u64), Scalar::ONE);
        for d in 1..t {
            prop_assert_ne!(f.pow(f.xi(), d as u64), Scalar::ONE);
        }
    }

    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (scalar_in(&f, a), scalar_in(&f, b), scalar_in(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Scalar::ONE);
        }
        prop_assert_eq!(f.parse_scalar(&f.format_scalar(a)).unwrap(), a);
    }

    #[test]
    fn rref_is_idempotent_and_rank_nullity(
        f in field_strategy(),
        rows in 1usize..7,
        cols in 1usize..7,
        raw in prop::collection::vec(any::<u32>(), 1..50),
    ) {
        let m = matrix(&f, rows, cols, &raw);
        let (r, rank, _) = rref(&f, &m);
        let (r2, rank2, _) = rref(&f, &r);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank + kernel(&f, &m).dim(), cols);
        for v in kernel(&f, &m).basis() {
            prop_assert!(m.mul_vec(&f, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn subspace_is_canonical(
        f in field_strategy(),
        raw in prop::collection::vec(any::<u32>(), 1..40),
        mix in prop::collection::vec(any::<u32>(), 16),
    ) {
        let m = matrix(&f, 4, 6, &raw);
        let u = Subspace::from_matrix_rows(&f, &m);
        // a different spanning set: the rows plus random combinations, reversed
        let mut rows = m.to_rows();
        for k in 0..4 {
            let mut v = vec![Scalar::ZERO; 6];
            for (i, row) in m.to_rows().iter().enumerate() {
                let c = scalar_in(&f, mix[(k * 4 + i) % mix.len()]);
                pointed_hopf::linalg::axpy(&f, &mut v, c, row);
            }
            rows.push(v);
        }
        rows.reverse();
        prop_assert_eq!(u, Subspace::from_rows(&f, 6, rows));
    }

    #[test]
    fn multiplication_is_associative(which in 0usize..3, x in prop::collection::vec(any::<u32>(), 4), y in prop::collection::vec(any::<u32>(), 4), z in prop::collection::vec(any::<u32>(), 4)) {
        let h = algebras()[which];
        let (x, y, z) = (element(h, &x), element(h, &y), element(h, &z));
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
        prop_assert_eq!(h.mul(&h.one(), &x), x.clone());
        prop_assert_eq!(h.mul(&x, &h.one()), x);
    }

    #[test]
    fn coproduct_is_multiplicative(which in 0usize..3, u in any::<usize>(), v in any::<usize>()) {
        let h = algebras()[which];
        let (u, v) = (h.basis_element(u % h.dim()), h.basis_element(v % h.dim()));
        let lhs = h.delta(&h.mul(&u, &v));
        let rhs = h.tensor_mul(&h.delta(&u), &h.delta(&v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_reverses_products(which in 0usize..3, u in any::<usize>(), v in any::<usize>()) {
        let h = algebras()[which];
        let (u, v) = (h.basis_element(u % h.dim()), h.basis_element(v % h.dim()));
        prop_assert_eq!(h.antipode(&h.mul(&u, &v)), h.mul(&h.antipode(&v), &h.antipode(&u)));
    }

    #[test]
    fn blocks_are_ideals(which in 0usize..3, i in any::<u32>(), x in any::<usize>(), y in any::<usize>()) {
        let h = algebras()[which];
        let f = h.field();
        let spec = h.spec();
        let i = i % spec.t;
        let e = idempotent(h, i);
        let block = BlockAlgebra::new(h, i);
        let (x, y) = (h.basis_element(x % h.dim()), h.basis_element(y % h.dim()));
        // x y e_i and e_i x lie in H e_i: they are fixed by right multiplication with e_i
        let left = h.mul(&h.mul(&x, &y), &e);
        prop_assert_eq!(h.mul(&left, &e), left.clone());
        let right = h.mul(&e, &x);
        prop_assert_eq!(h.mul(&right, &e), right.clone());
        prop_assert_eq!(block.embed(&block.project(&left)), left);
        let shifted = h.add_scalar(&h.g_pow(spec.ps() as i64), f.neg(f.xi_pow(i as i64 * spec.ps() as i64)));
        prop_assert!(h.mul(&shifted, &e).is_zero());
    }
}

#[test]
fn left_integral_absorbs_and_antipode_keeps_the_line() {
    for h in algebras() {
        let f = h.field();
        let tau = Element(integral_space(h, Side::Left).unwrap().basis()[0].clone());
        for x in 0..h.dim() {
            let e = h.basis_element(x);
            assert_eq!(h.mul(&e, &tau), h.scale(h.counit(&e), &tau));
        }
        let s_tau = h.antipode(&tau);
        assert!(!s_tau.is_zero());
        assert_eq!(Subspace::from_rows(f, h.dim(), [s_tau.0, tau.0]).dim(), 1);
    }
}

#[test]
fn group_like_g_and_commuting_a() {
    for h in algebras() {
        let g = h.gen(Gen::G);
        assert_eq!(h.mul(&g, &h.g_pow(h.n() as i64 - 1)), h.one());
        assert_eq!(h.mul(&h.gen(Gen::A), &g), h.mul(&g, &h.gen(Gen::A)));
    }
}

#[test]
fn nilpotency_of_generators_depends_on_t() {
    for (p, s) in [(3, 1), (3, 2), (5, 1)] {
        let h = alg(p, s, 1, 1, 1);
        let n = h.n();
        assert!(h.pow(&h.gen(Gen::A), n).is_zero());
        assert!(h.pow(&h.gen(Gen::B), n).is_zero());
        let h = alg(p, s, 2, 1, 1);
        for m in 0..=s {
            assert!(!h.pow(&h.gen(Gen::A), p.pow(m)).is_zero(), "a^(p^{m}) vanishes at ({p},{s},2)");
        }
    }
    let h = alg(2, 2, 1, 0, 0);
    assert!(h.pow(&h.gen(Gen::A), h.n()).is_zero());
    assert!(h.pow(&h.gen(Gen::B), h.n()).is_zero());
}
