use pointed_hopf::radext::{claimed_layers, ext_dim, projective_cover, Analysis};
use pointed_hopf::reps::{
    g_jordan_type, iso_test, module_make, submodule, tensor_module, two_param_module, Family, IsoVerdict, Module,
};
use pointed_hopf::{Algebra, AlgebraSpec, Error, Gen, Matrix, Scalar, Subspace};

fn alg(p: u32, s: u32, t: u32, l: i64, m: i64) -> Algebra {
    Algebra::build(AlgebraSpec::from_ints(p, s, t, l, m).unwrap()).unwrap()
}

#[test]
fn tensor_socle_law_for_all_labels() {
    for (p, s) in [(3, 1), (3, 2), (5, 1)] {
        for mu in [0, 1] {
            let h = alg(p, s, 2, 1, mu);
            let an = Analysis::new(&h).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    let m = tensor_module(&an.simple(i).module, &an.simple(j).module).unwrap();
                    let (_, census) = an.socle(&m).unwrap();
                    let target = (i + j) % 2;
                    let expected: Vec<usize> =
                        an.simples.iter().map(|s| usize::from(s.label.index == target)).collect();
                    assert_eq!(census, expected, "({p},{s},2) μ={mu}: S_{i}⊗S_{j}");
                }
            }
        }
    }
}

#[test]
fn simples_equal_their_socles() {
    for (p, s, t, l, m) in [(3, 1, 2, 1, 1), (5, 1, 2, 1, 0), (3, 1, 2, 0, 1), (2, 1, 3, 0, 0)] {
        let h = alg(p, s, t, l, m);
        let an = Analysis::new(&h).unwrap();
        for simple in &an.simples {
            let (soc, _) = an.socle(&simple.module).unwrap();
            assert_eq!(soc.dim(), simple.module.dim());
        }
    }
}

#[test]
fn induced_simples_restrict_to_one_jordan_block() {
    for p in [3, 5] {
        let h = alg(p, 1, 2, 1, 1);
        let an = Analysis::new(&h).unwrap();
        assert_eq!(g_jordan_type(&an.simple(1).module), vec![(1, p as usize)]);
        assert_eq!(g_jordan_type(&an.simple(0).module), vec![(0, 1)]);
    }
}

#[test]
fn block_multiplicity_law() {
    for (p, s, l, m) in [(3, 2, 1, 0), (3, 2, 1, 1), (5, 1, 1, 1), (3, 2, 0, 1), (5, 1, 0, 0)] {
        let h = alg(p, s, 2, l, m);
        let an = Analysis::new(&h).unwrap();
        for i in 0..2 {
            let cover = projective_cover(&an, i, 0).unwrap();
            let block_dim = an.blocks[i as usize].block.dim();
            assert_eq!(block_dim, an.simple(i).module.dim() * cover.dim, "({p},{s},2) λ={l} μ={m} i={i}");
            assert_eq!(cover.top, IsoVerdict::Isomorphic);
            assert_eq!(cover.socle, IsoVerdict::Isomorphic);
        }
    }
}

#[test]
fn shifted_b_covers_for_higher_s() {
    // λ = 1, μ ≠ 0, s = 2 goes through b + μ^(1/p)(g - 1)
    let h = alg(3, 2, 2, 1, 2);
    let an = Analysis::new(&h).unwrap();
    let cover = projective_cover(&an, 1, 0).unwrap();
    assert_eq!(cover.dim, 27);
    assert!(cover.idempotent_ok && cover.same_left_ideal);
}

#[test]
fn ext_matches_radical_layer_on_local_blocks() {
    for (p, s, t, l, m) in [(3, 2, 2, 0, 1), (5, 1, 2, 0, 1), (2, 2, 1, 0, 0), (5, 1, 2, 1, 1)] {
        let h = alg(p, s, t, l, m);
        let an = Analysis::new(&h).unwrap();
        let local: Vec<u32> = if l == 0 { (0..t).collect() } else { vec![0] };
        for i in local {
            let e = ext_dim(&an, i, i, 0).unwrap();
            assert_eq!(e, 2);
            assert_eq!(e, an.block_layers(i).0);
        }
    }
}

#[test]
fn spanning_sets_match_powers_beyond_the_smallest_instance() {
    for (p, s, l, m) in [(3, 2, 0, 1), (5, 1, 0, 1), (3, 1, 1, 1), (5, 1, 1, 0)] {
        let h = alg(p, s, 2, l, m);
        let an = Analysis::new(&h).unwrap();
        let labels: Vec<u32> = if l == 0 { vec![0, 1] } else { vec![0] };
        for i in labels {
            let (n, mm) = claimed_layers(&an, i).unwrap();
            let fil = &an.blocks[i as usize].filtration;
            assert_eq!(&n, fil.power(2), "({p},{s},2) λ={l} μ={m} block {i}");
            assert_eq!(&mm, fil.power(3), "({p},{s},2) λ={l} μ={m} block {i}");
        }
        if l == 1 {
            assert!(claimed_layers(&an, 1).is_none());
        }
    }
}

#[test]
fn radical_filtration_is_strict() {
    let h = alg(3, 1, 2, 1, 1);
    let an = Analysis::new(&h).unwrap();
    let f = h.field();
    for scope_fil in [an.whole_filtration(), an.blocks[1].filtration.clone()] {
        let chain = &scope_fil.chain;
        assert_eq!(chain.last().unwrap().dim(), 0);
        for w in chain.windows(2) {
            assert!(w[1].dim() < w[0].dim());
            assert!(w[1].is_subspace_of(f, &w[0]));
        }
    }
}

#[test]
fn one_dim_module_violating_relations_is_rejected() {
    let spec = AlgebraSpec::from_ints(3, 1, 2, 0, 0).unwrap();
    let f = spec.field.clone();
    let xi = f.xi();
    let m = Module::one_dim(&spec, xi, Scalar::ONE, Scalar::ZERO);
    assert!(matches!(m, Err(Error::RelationViolation(_))));
    let ok = module_make(&spec, Matrix::scalar(1, xi), Matrix::zeros(1, 1), Matrix::zeros(1, 1));
    assert!(ok.is_ok());
}

#[test]
fn proportional_pairs_in_characteristic_two() {
    let h = alg(2, 1, 3, 0, 0);
    let f = h.field();
    let two = f.from_coeffs(&[0, 1]);
    for i in 0..3 {
        let m1 = two_param_module(&h, Family::M, i, Scalar::ONE, Scalar::ZERO).unwrap();
        let m2 = two_param_module(&h, Family::M, i, two, Scalar::ZERO).unwrap();
        assert_eq!(iso_test(&m1, &m2, 0), IsoVerdict::Isomorphic);
        let split = two_param_module(&h, Family::M, i, Scalar::ZERO, Scalar::ZERO).unwrap();
        // M(0, 0) is S_i ⊕ S_i: every vector spans a submodule
        let line = Subspace::from_rows(f, 2, [vec![Scalar::ONE, Scalar::ONE]]);
        assert!(submodule(&split, &line).is_ok());
        assert!(two_param_module(&h, Family::N, i, Scalar::ONE, Scalar::ONE).is_err());
    }
    assert_eq!(h.gen(Gen::A), h.basis_element(h.char2_index(0, "a")));
}
