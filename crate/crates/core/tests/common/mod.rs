//! Oracles for the integration tests. Nothing here calls into the code
//! under test beyond reading its public data.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stonework::boolalg::{Presentation, Term};
use stonework::zhomology::IntMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn eval(t: &Term, at: &dyn Fn(&str) -> bool) -> bool {
    match t {
        Term::Zero => false,
        Term::One => true,
        Term::Gen(g) => at(g),
        Term::Not(a) => !eval(a, at),
        Term::And(a, b) => eval(a, at) && eval(b, at),
        Term::Or(a, b) => eval(a, at) || eval(b, at),
    }
}

/// Evaluates with `gens[i] := values[i]`.
pub fn eval_at(t: &Term, gens: &[String], values: &[bool]) -> bool {
    eval(t, &|g| values[gens.iter().position(|x| x == g).expect("generator in scope")])
}

pub fn subst(t: &Term, images: &BTreeMap<String, Term>) -> Term {
    match t {
        Term::Zero | Term::One => t.clone(),
        Term::Gen(g) => images[g].clone(),
        Term::Not(a) => Term::not(subst(a, images)),
        Term::And(a, b) => Term::and(subst(a, images), subst(b, images)),
        Term::Or(a, b) => Term::or(subst(a, images), subst(b, images)),
    }
}

/// All assignments to `n` variables, first variable most significant.
pub fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u64 << n).map(move |k| (0..n).map(|i| (k >> (n - 1 - i)) & 1 == 1).collect())
}

/// Assignments killing every relation, in lexicographic order.
pub fn brute_points(gens: &[String], rels: &[Term]) -> Vec<Vec<bool>> {
    assignments(gens.len()).filter(|a| rels.iter().all(|r| !eval_at(r, gens, a))).collect()
}

pub fn bits(v: &[bool]) -> String {
    v.iter().map(|b| if *b { '1' } else { '0' }).collect()
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

pub fn random_term(r: &mut ChaCha8Rng, gens: &[String], depth: usize) -> Term {
    let leaf = depth == 0 || r.gen_bool(0.3);
    if leaf {
        let k = r.gen_range(0..gens.len() + 2);
        return match k {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::gen(gens[k - 2].clone()),
        };
    }
    match r.gen_range(0..3) {
        0 => Term::not(random_term(r, gens, depth - 1)),
        1 => Term::and(random_term(r, gens, depth - 1), random_term(r, gens, depth - 1)),
        _ => Term::or(random_term(r, gens, depth - 1), random_term(r, gens, depth - 1)),
    }
}

/// Random relations are biased towards meets so the quotient is rarely
/// trivial.
pub fn random_presentation(r: &mut ChaCha8Rng, max_gens: usize, max_rels: usize) -> Presentation {
    let gens = names(r.gen_range(0..=max_gens));
    let rels = (0..r.gen_range(0..=max_rels))
        .map(|_| {
            let t = random_term(r, &gens, 3);
            if gens.is_empty() {
                t
            } else {
                Term::and(Term::gen(gens[r.gen_range(0..gens.len())].clone()), t)
            }
        })
        .collect();
    Presentation::new(gens, rels).expect("terms use declared generators")
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Fraction-free Gaussian elimination: rank and, for square input, the
/// determinant.
fn bareiss(rows: &[Vec<BigInt>]) -> (usize, BigInt) {
    let mut a = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut sign = 1;
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..m {
            for j in c + 1..n {
                let v = (&a[i][j] * &a[r][c] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == m {
            break;
        }
    }
    let det = if m == n && r == n { if n == 0 { BigInt::from(1) } else { prev * sign } } else { BigInt::zero() };
    (r, det)
}

pub fn rank_q(rows: &[Vec<BigInt>]) -> usize {
    bareiss(rows).0
}

pub fn det(rows: &[Vec<BigInt>]) -> BigInt {
    assert!(rows.iter().all(|r| r.len() == rows.len()), "det of a non-square matrix");
    bareiss(rows).1
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.rows() == m.cols() && det(&matrix_rows(m)).abs() == BigInt::from(1)
}

const P: u64 = (1 << 61) - 1;

fn mod_p(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    (((x % &p) + &p) % &p).to_u64().expect("reduced")
}

fn inv_p(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a as u128, P - 2, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % P as u128;
        }
        base = base * base % P as u128;
        e >>= 1;
    }
    acc as u64
}

/// Rank over `F_p` with `p = 2^61 − 1`; never more than the rank over `Q`.
pub fn rank_mod_p(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows()).map(|i| m.row(i).iter().map(mod_p).collect()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(p, r);
        let inv = inv_p(a[r][c]) as u128;
        let pivot_row = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if row[c] == 0 {
                continue;
            }
            let f = row[c] as u128 * inv % P as u128;
            for j in c..cols {
                let sub = f * pivot_row[j] as u128 % P as u128;
                row[j] = ((row[j] as u128 + P as u128 - sub) % P as u128) as u64;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `m · v` for an integer column vector.
pub fn apply(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    (0..m.rows()).map(|i| m.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// `w · m` for an integer row vector.
pub fn apply_row(w: &[BigInt], m: &IntMatrix) -> Vec<BigInt> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| &w[i] * m.get(i, j)).sum()).collect()
}
