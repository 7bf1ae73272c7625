//! Commutation coefficients and the closed identities checked by normal-form
//! evaluation, plus the associativity oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{Algebra, Element, Gen, Sparse, Variant};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    /// a b^m = sum_i alpha_{m,i} b^(m-i) a^(i+1)
    AB,
    /// g b^m = sum_i beta_{m,i} b^(m-i) g a^i
    GB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub kind: CoeffKind,
    pub m: u32,
    pub entries: Vec<Scalar>,
}

/// Row m of the alpha (AB) or beta (GB) table, 1 <= m <= p-1.
pub fn commutation_coeffs(f: &FieldCtx, kind: CoeffKind, m: u32) -> Result<CoeffTable> {
    let p = f.characteristic();
    if p == 2 || m == 0 || m >= p {
        return Err(Error::OutOfRange(format!("commutation row m = {m} needs 1 <= m <= p - 1 with p odd")));
    }
    let mut row = match kind {
        CoeffKind::AB => vec![Scalar::ONE, f.frac(-1, 2)],
        CoeffKind::GB => vec![Scalar::ONE, f.from_int(-1)],
    };
    for k in 1..m {
        // k is the current row index; build row k + 1
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Scalar::ONE);
        for i in 1..=k as i64 {
            let factor = match kind {
                CoeffKind::AB => f.frac(i, 2),
                CoeffKind::GB => f.frac(i + 1, 2),
            };
            next.push(f.sub(row[i as usize], f.mul(factor, row[i as usize - 1])));
        }
        let last = match kind {
            CoeffKind::AB => f.frac(-(k as i64 + 1), 2),
            CoeffKind::GB => f.frac(-(k as i64 + 2), 2),
        };
        next.push(f.mul(last, row[k as usize]));
        row = next;
    }
    Ok(CoeffTable { kind, m, entries: row })
}

fn product(h: &Algebra, word: &[Gen]) -> Element {
    let mut x = h.one();
    for &gen in word.iter().rev() {
        x = h.lmul_gen(gen, &x);
    }
    x
}

fn word(parts: &[(Gen, u32)]) -> Vec<Gen> {
    parts.iter().flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize)).collect()
}

fn record(report: &mut Report, h: &Algebra, name: String, lhs: &Element, rhs: &Element, claim: &str) {
    let ok = lhs == rhs;
    let observed = if ok {
        json!(h.format_element(lhs))
    } else {
        json!({ "lhs": h.format_element(lhs), "rhs": h.format_element(rhs) })
    };
    report.push(name, Status::from_bool(ok), observed, json!(h.format_element(rhs)), claim);
}

/// b_1 = b + mu^(1/p) (g - 1).
pub fn shifted_b_group(h: &Algebra) -> Element {
    let f = h.field();
    let r = f.pth_root(h.spec().mu);
    let g_minus_one = h.add_scalar(&h.gen(Gen::G), f.neg(Scalar::ONE));
    h.add(&h.gen(Gen::B), &h.scale(r, &g_minus_one))
}

/// Primes for which b_1^p = 0 is asserted and used.
pub const SHIFTED_B_PRIMES: [u32; 4] = [3, 5, 7, 11];

pub fn verify_identities(h: &Algebra) -> Report {
    let mut report = Report::new();
    let f = h.field();
    let spec = h.spec();
    let (p, n) = (spec.p, spec.n);
    let a = h.gen(Gen::A);
    let b = h.gen(Gen::B);

    // b g^i = i g^i a + g^i b
    let mut bad = Vec::new();
    for i in 0..n {
        let gi = h.g_pow(i as i64);
        let lhs = h.mul(&b, &gi);
        let rhs = h.add(&h.scale(f.from_int(i as i64), &h.mul(&gi, &a)), &h.mul(&gi, &b));
        if lhs != rhs {
            bad.push(i);
        }
    }
    report.push(
        "bg^i expansion",
        Status::from_bool(bad.is_empty()),
        json!({ "checked": n, "failing_i": bad }),
        json!({ "checked": n, "failing_i": [] }),
        "b g^i = i g^i a + g^i b for all i < n",
    );

    if spec.variant == Variant::CharPLifting {
        for m in 1..p {
            let alpha = commutation_coeffs(f, CoeffKind::AB, m).expect("row in range");
            let beta = commutation_coeffs(f, CoeffKind::GB, m).expect("row in range");
            let lhs = product(h, &word(&[(Gen::A, 1), (Gen::B, m)]));
            let mut rhs = h.zero();
            for (i, &c) in alpha.entries.iter().enumerate() {
                let w = product(h, &word(&[(Gen::B, m - i as u32), (Gen::A, i as u32 + 1)]));
                rhs = h.add(&rhs, &h.scale(c, &w));
            }
            record(
                &mut report,
                h,
                format!("ab^{m} expansion"),
                &lhs,
                &rhs,
                "a b^m = sum_i alpha_(m,i) b^(m-i) a^(i+1)",
            );
            let lhs = product(h, &word(&[(Gen::G, 1), (Gen::B, m)]));
            let mut rhs = h.zero();
            for (i, &c) in beta.entries.iter().enumerate() {
                let w = product(h, &word(&[(Gen::B, m - i as u32), (Gen::G, 1), (Gen::A, i as u32)]));
                rhs = h.add(&rhs, &h.scale(c, &w));
            }
            record(&mut report, h, format!("gb^{m} expansion"), &lhs, &rhs, "g b^m = sum_i beta_(m,i) b^(m-i) g a^i");
        }
    }

    // g^p central (g^2 in characteristic 2, where p = 2 as well)
    let gp = h.g_pow(p as i64);
    let noncentral = (0..h.dim())
        .filter(|&u| {
            let x = h.basis_element(u);
            h.mul(&gp, &x) != h.mul(&x, &gp)
        })
        .count();
    report.push(
        format!("g^{p} central"),
        Status::from_bool(noncentral == 0),
        json!({ "basis_checked": h.dim(), "noncommuting": noncentral }),
        json!({ "basis_checked": h.dim(), "noncommuting": 0 }),
        format!("g^{p} commutes with every basis element"),
    );

    if spec.variant == Variant::CharPLifting && spec.lambda == Scalar::ONE && spec.mu.is_zero() {
        let tail = product(h, &word(&[(Gen::B, p - 1)]));
        let mut fact = 1i64;
        for m in 0..p {
            if m > 0 {
                fact *= m as i64;
            }
            let lhs = h.mul_all(&[&h.pow(&b, m), &a, &tail]);
            let coeff = f.frac(fact, 1i64 << m);
            let rhs = h.scale(coeff, &h.mul(&h.pow(&a, m + 1), &tail));
            record(
                &mut report,
                h,
                format!("b^{m} a b^(p-1) identity"),
                &lhs,
                &rhs,
                "b^m a b^(p-1) = (m!/2^m) a^(m+1) b^(p-1) in H(1,0)",
            );
        }
    }

    if spec.variant == Variant::CharPLifting
        && spec.lambda == Scalar::ONE
        && !spec.mu.is_zero()
        && SHIFTED_B_PRIMES.contains(&p)
    {
        let b1 = shifted_b_group(h);
        let lhs = h.pow(&b1, p);
        record(&mut report, h, "b_1^p = 0".into(), &lhs, &h.zero(), "[b + mu^(1/p)(g - 1)]^p = 0 for p = 3, 5, 7, 11");
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocMode {
    Full,
    Sampled { seed: u64, triples: usize },
}

fn times_basis(h: &Algebra, x: &Sparse, v: usize) -> Sparse {
    let f = h.field();
    let mut terms = Vec::new();
    for &(u, c) in x {
        for &(j, d) in h.basis_product(u as usize, v) {
            terms.push((j, f.mul(c, d)));
        }
    }
    crate::algebra::merge_sparse(f, terms)
}

fn basis_times(h: &Algebra, u: usize, y: &Sparse) -> Sparse {
    let f = h.field();
    let mut terms = Vec::new();
    for &(v, c) in y {
        for &(j, d) in h.basis_product(u, v as usize) {
            terms.push((j, f.mul(c, d)));
        }
    }
    crate::algebra::merge_sparse(f, terms)
}

/// Check (xy)z = x(yz) on basis triples. Returns the first violating triple.
pub fn associativity_violation(h: &Algebra, mode: AssocMode) -> (usize, Option<(usize, usize, usize)>) {
    let d = h.dim();
    let check = |x: usize, y: usize, z: usize| {
        let left = times_basis(h, h.basis_product(x, y), z);
        let right = basis_times(h, x, h.basis_product(y, z));
        left == right
    };
    match mode {
        AssocMode::Full => {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        if !check(x, y, z) {
                            return (d * d * d, Some((x, y, z)));
                        }
                    }
                }
            }
            (d * d * d, None)
        }
        AssocMode::Sampled { seed, triples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..triples {
                let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                if !check(x, y, z) {
                    return (triples, Some((x, y, z)));
                }
            }
            (triples, None)
        }
    }
}

pub fn verify_associativity(h: &Algebra, mode: AssocMode) -> Report {
    let mut report = Report::new();
    let (count, violation) = associativity_violation(h, mode);
    let mode_name = match mode {
        AssocMode::Full => "full",
        AssocMode::Sampled { .. } => "sampled",
    };
    let observed = match violation {
        None => json!({ "mode": mode_name, "triples": count, "violation": null }),
        Some((x, y, z)) => json!({
            "mode": mode_name,
            "triples": count,
            "violation": [h.format_index(x), h.format_index(y), h.format_index(z)],
        }),
    };
    report.push(
        "associativity",
        Status::from_bool(violation.is_none()),
        observed,
        json!({ "mode": mode_name, "triples": count, "violation": null }),
        "(xy)z = x(yz) on basis triples",
    );
    report
}
