//! Defining relations as noncommutative polynomials in g, a, b, and a checker
//! that evaluates them on any space carrying an action of the generators.

use crate::algebra::{AlgebraSpec, Gen, Variant};
use crate::field::{FieldCtx, Scalar};
use crate::linalg::{axpy, is_zero_vec};

/// Anything on which g, a, b act linearly: the regular representation, a
/// module given by matrices, or an image of generators in another algebra.
pub trait GenAction {
    fn field(&self) -> &FieldCtx;
    fn space_dim(&self) -> usize;
    fn act(&self, gen: Gen, v: &[Scalar]) -> Vec<Scalar>;
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    /// Sum of `coeff * word`; words are read left to right as products.
    pub terms: Vec<(Scalar, Vec<Gen>)>,
}

fn power(gen: Gen, e: u32) -> Vec<Gen> {
    vec![gen; e as usize]
}

impl Relation {
    pub fn new(name: impl Into<String>, terms: Vec<(Scalar, Vec<Gen>)>) -> Self {
        Relation { name: name.into(), terms }
    }

    /// The presentation of the algebra described by `spec`.
    pub fn defining(spec: &AlgebraSpec) -> Vec<Relation> {
        use Gen::*;
        let f = &spec.field;
        let one = Scalar::ONE;
        let m1 = f.neg(one);
        let mut rels = vec![
            Relation::new("g^n = 1", vec![(one, power(G, spec.n)), (m1, vec![])]),
            Relation::new("ag = ga", vec![(one, vec![A, G]), (m1, vec![G, A])]),
            Relation::new("bg = ga + gb", vec![(one, vec![B, G]), (m1, vec![G, A]), (m1, vec![G, B])]),
        ];
        match spec.variant {
            Variant::CharPLifting => {
                let p = spec.p;
                for (gen, c, name) in [(A, spec.lambda, "a^p = lambda(1 - g^p)"), (B, spec.mu, "b^p = mu(1 - g^p)")] {
                    rels.push(Relation::new(name, vec![(one, power(gen, p)), (f.neg(c), vec![]), (c, power(G, p))]));
                }
                rels.push(Relation::new(
                    "ba = ab + 1/2 a^2",
                    vec![(one, vec![B, A]), (m1, vec![A, B]), (f.neg(f.frac(1, 2)), vec![A, A])],
                ));
            }
            Variant::Char2Nichols => {
                rels.push(Relation::new("a^2 = 0", vec![(one, vec![A, A])]));
                rels.push(Relation::new("b^4 = 0", vec![(one, power(B, 4))]));
                rels.push(Relation::new("baba = abab", vec![(one, vec![B, A, B, A]), (m1, vec![A, B, A, B])]));
                rels.push(Relation::new(
                    "b^2a = ab^2 + aba",
                    vec![(one, vec![B, B, A]), (m1, vec![A, B, B]), (m1, vec![A, B, A])],
                ));
            }
        }
        rels
    }
}

/// Apply a word (product of generators, leftmost acting last) to a vector.
pub fn apply_word<T: GenAction + ?Sized>(action: &T, word: &[Gen], v: &[Scalar]) -> Vec<Scalar> {
    let mut cur = v.to_vec();
    for &gen in word.iter().rev() {
        cur = action.act(gen, &cur);
    }
    cur
}

/// Evaluate a relation on a vector.
pub fn eval_relation<T: GenAction + ?Sized>(action: &T, rel: &Relation, v: &[Scalar]) -> Vec<Scalar> {
    let f = action.field();
    let mut out = vec![Scalar::ZERO; v.len()];
    for (c, word) in &rel.terms {
        if !c.is_zero() {
            axpy(f, &mut out, *c, &apply_word(action, word, v));
        }
    }
    out
}

/// Check every relation on every standard basis vector. Returns the name of
/// the first violated relation.
pub fn check_relations<T: GenAction + ?Sized>(action: &T, rels: &[Relation]) -> Result<(), String> {
    let d = action.space_dim();
    for rel in rels {
        for i in 0..d {
            let mut e = vec![Scalar::ZERO; d];
            e[i] = Scalar::ONE;
            if !is_zero_vec(&eval_relation(action, rel, &e)) {
                return Err(rel.name.clone());
            }
        }
    }
    Ok(())
}
