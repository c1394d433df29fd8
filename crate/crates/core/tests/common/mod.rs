//! Brute-force oracles and corpus generators shared by the integration
//! tests. Deliberately independent of the library's search code: plain
//! odometer enumeration over machine integers (with bound assertions so the
//! arithmetic cannot overflow) and quadratic dominance filtering.

use num_bigint::BigInt;

use minsol::{Instance, Solution};

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn inst(a: &[i64], b: &[i64]) -> Instance {
    Instance::from_ints(a, b).unwrap()
}

pub fn to_pair(s: &Solution) -> (Vec<i64>, Vec<i64>) {
    let conv = |v: &[BigInt]| {
        v.iter()
            .map(|e| i64::try_from(e).expect("desk scale"))
            .collect()
    };
    (conv(s.x()), conv(s.y()))
}

fn dot(coeffs: &[i64], values: &[i64]) -> i64 {
    coeffs.iter().zip(values).map(|(c, v)| c * v).sum()
}

fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&e| e == 0)
}

/// All nonnegative vectors of the given length with L1 norm at most `cap`.
pub fn vectors_with_norm_at_most(len: usize, cap: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; len];
    fill(&mut out, &mut current, 0, cap);
    out
}

fn fill(out: &mut Vec<Vec<i64>>, current: &mut Vec<i64>, idx: usize, left: i64) {
    if idx == current.len() {
        out.push(current.clone());
        return;
    }
    for v in 0..=left {
        current[idx] = v;
        fill(out, current, idx + 1, left - v);
    }
    current[idx] = 0;
}

/// Full-box Hilbert basis oracle: enumerate every pair in the Lambert box,
/// keep the solutions, and filter by pairwise componentwise dominance.
pub fn oracle_hilbert(a: &[i64], b: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    assert!(
        a.iter().chain(b).all(|&c| (1..=1000).contains(&c)),
        "oracle is desk-scale only"
    );
    let x_cap = *b.iter().max().unwrap();
    let y_cap = *a.iter().max().unwrap();
    let xs = vectors_with_norm_at_most(a.len(), x_cap);
    let ys = vectors_with_norm_at_most(b.len(), y_cap);
    let mut solutions: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for x in &xs {
        let lhs = dot(a, x);
        for y in &ys {
            if lhs == dot(b, y) && !(is_zero(x) && is_zero(y)) {
                solutions.push((x.clone(), y.clone()));
            }
        }
    }
    let dominated = |big: &(Vec<i64>, Vec<i64>), small: &(Vec<i64>, Vec<i64>)| -> bool {
        let le = small.0.iter().zip(&big.0).all(|(s, l)| s <= l)
            && small.1.iter().zip(&big.1).all(|(s, l)| s <= l);
        le && small != big
    };
    let mut minimal: Vec<(Vec<i64>, Vec<i64>)> = solutions
        .iter()
        .filter(|s| !solutions.iter().any(|other| dominated(s, other)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}

/// Brute-force single-row Graver oracle: every nonzero integer vector with
/// entries bounded by max |alpha_j| and alpha.v = 0, filtered to the
/// dominance-minimal elements (componentwise absolute value within a common
/// orthant).
pub fn oracle_graver(alpha: &[i64]) -> Vec<Vec<i64>> {
    assert!(
        alpha.iter().all(|&c| c.abs() <= 1000),
        "oracle is desk-scale only"
    );
    assert!(alpha.len() <= 5, "oracle is desk-scale only");
    let cap = alpha.iter().map(|&c| c.abs()).max().unwrap().max(1);
    let mut kernel: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![-cap; alpha.len()];
    loop {
        if !is_zero(&current) && dot(alpha, &current) == 0 {
            kernel.push(current.clone());
        }
        // odometer over [-cap, cap]^k
        let mut idx = alpha.len();
        loop {
            if idx == 0 {
                let mut minimal: Vec<Vec<i64>> = kernel
                    .iter()
                    .filter(|v| !kernel.iter().any(|w| graver_dominated(v, w)))
                    .cloned()
                    .collect();
                minimal.sort();
                return minimal;
            }
            idx -= 1;
            if current[idx] < cap {
                current[idx] += 1;
                break;
            }
            current[idx] = -cap;
        }
    }
}

fn graver_dominated(big: &[i64], small: &[i64]) -> bool {
    let same_orthant = big.iter().zip(small).all(|(b, s)| b * s >= 0);
    same_orthant && small.iter().zip(big).all(|(s, b)| s.abs() <= b.abs()) && small != big
}

/// Every instance with the given side lengths and coefficients in
/// `1..=max_coeff`, odometer order.
pub fn instances_of_shape(n: usize, m: usize, max_coeff: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    let len = n + m;
    let mut current = vec![1i64; len];
    loop {
        out.push((current[..n].to_vec(), current[n..].to_vec()));
        let mut idx = len;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if current[idx] < max_coeff {
                current[idx] += 1;
                break;
            }
            current[idx] = 1;
        }
    }
}

/// All instances with n + m <= total_cap sides and coefficients <= max_coeff.
pub fn instance_corpus(total_cap: usize, max_coeff: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for n in 1..total_cap {
        for m in 1..=(total_cap - n) {
            out.extend(instances_of_shape(n, m, max_coeff));
        }
    }
    out
}
