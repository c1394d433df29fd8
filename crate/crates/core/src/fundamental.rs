//! Completely fundamental solutions, the generating-function denominator,
//! and the extreme-point check for coprime instances.
//!
//! A solution s is completely fundamental when every decomposition of every
//! multiple k*s into two solutions consists of integer multiples of s. For a
//! single equation these are exactly the scaled generators
//! `(1/d) * g(i, j)` with `d = gcd(a_i, b_j)`, which also index the factors
//! `(1 - z_i^(b_j/d) w_j^(a_i/d))` of the denominator of the
//! solution-counting series.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decompose::{membership, solution_column, Membership};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_basis_with, SearchBox, DEFAULT_NODE_BUDGET};
use crate::instance::{Instance, Solution};
use crate::jsonnum;
use crate::simplex;

/// The set of completely fundamental solutions: all scaled generators
/// `(1/d) * g(i, j)`, deduplicated and canonically sorted.
pub fn completely_fundamental_set(inst: &Instance) -> Vec<Solution> {
    let set: BTreeSet<Solution> = inst
        .generators()
        .iter()
        .map(|g| g.minimal_vector())
        .collect();
    set.into_iter().collect()
}

/// A failed decomposition found by the bounded brute-force check:
/// `k * s = left + right` with neither summand an integer multiple of s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfWitness {
    pub k: u32,
    pub left: Solution,
    pub right: Solution,
}

/// Outcome of the bounded check. No witness means "no counterexample up to
/// k_max", never an unconditional claim; the closed form answers exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfReport {
    pub k_max: u32,
    pub witness: Option<CfWitness>,
}

impl CfReport {
    pub fn no_counterexample(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_cf_bruteforce(inst: &Instance, s: &Solution, k_max: u32) -> Result<CfReport> {
    is_cf_bruteforce_with(inst, s, k_max, DEFAULT_NODE_BUDGET)
}

/// For each k <= k_max, enumerates every solution `left <= k*s` and checks
/// that `left` (hence also `k*s - left`) is an integer multiple of s. The
/// first failure is returned as a witness.
pub fn is_cf_bruteforce_with(
    inst: &Instance,
    s: &Solution,
    k_max: u32,
    hard_cap: u64,
) -> Result<CfReport> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    debug_assert!(inst.is_solution(s.x(), s.y()).unwrap_or(false));
    let mut nodes: u64 = 0;
    for k in 1..=k_max {
        let total = s.scale(&BigInt::from(k));
        let mut x = vec![BigInt::zero(); inst.n()];
        if let Some(left) = find_non_multiple_part(
            inst,
            s,
            &total,
            &mut x,
            0,
            BigInt::zero(),
            &mut nodes,
            hard_cap,
        )? {
            let right = Solution::from_parts_unchecked(
                total.x().iter().zip(left.x()).map(|(t, l)| t - l).collect(),
                total.y().iter().zip(left.y()).map(|(t, l)| t - l).collect(),
            );
            debug_assert!(inst.is_solution(right.x(), right.y()).unwrap_or(false));
            return Ok(CfReport {
                k_max,
                witness: Some(CfWitness { k, left, right }),
            });
        }
    }
    Ok(CfReport {
        k_max,
        witness: None,
    })
}

/// Depth-first over x' <= total.x, then y' <= total.y with b.y' = a.x'.
/// Returns the first enumerated solution that is not a multiple of `s`.
#[allow(clippy::too_many_arguments)]
fn find_non_multiple_part(
    inst: &Instance,
    s: &Solution,
    total: &Solution,
    x: &mut Vec<BigInt>,
    i: usize,
    lhs: BigInt,
    nodes: &mut u64,
    hard_cap: u64,
) -> Result<Option<Solution>> {
    *nodes += 1;
    if *nodes > hard_cap {
        return Err(Error::SearchBudgetExceeded { limit: hard_cap });
    }
    if i == inst.n() {
        let mut y = vec![BigInt::zero(); inst.m()];
        return find_matching_y(inst, s, total, x, &mut y, 0, lhs, nodes, hard_cap);
    }
    let coeff = inst.a()[i].clone();
    let mut v = BigInt::zero();
    let mut new_lhs = lhs;
    while v <= total.x()[i] {
        x[i] = v.clone();
        if let Some(found) =
            find_non_multiple_part(inst, s, total, x, i + 1, new_lhs.clone(), nodes, hard_cap)?
        {
            return Ok(Some(found));
        }
        new_lhs += &coeff;
        v += 1u32;
    }
    x[i] = BigInt::zero();
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn find_matching_y(
    inst: &Instance,
    s: &Solution,
    total: &Solution,
    x: &[BigInt],
    y: &mut Vec<BigInt>,
    j: usize,
    target: BigInt,
    nodes: &mut u64,
    hard_cap: u64,
) -> Result<Option<Solution>> {
    *nodes += 1;
    if *nodes > hard_cap {
        return Err(Error::SearchBudgetExceeded { limit: hard_cap });
    }
    if j == inst.m() {
        if target.is_zero() {
            let candidate = Solution::from_parts_unchecked(x.to_vec(), y.clone());
            if !candidate.is_integer_multiple_of(s) {
                return Ok(Some(candidate));
            }
        }
        return Ok(None);
    }
    let coeff = inst.b()[j].clone();
    let max_take = (&target / &coeff).min(total.y()[j].clone());
    let mut v = BigInt::zero();
    let mut remaining = target;
    while v <= max_take {
        y[j] = v.clone();
        if let Some(found) = find_matching_y(
            inst,
            s,
            total,
            x,
            y,
            j + 1,
            remaining.clone(),
            nodes,
            hard_cap,
        )? {
            return Ok(Some(found));
        }
        remaining -= &coeff;
        v += 1u32;
    }
    y[j] = BigInt::zero();
    Ok(None)
}

/// One factor `(1 - z_i^zx * w_j^wy)` of the series denominator.
/// Indices are 0-based internally, 1-based on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFactor", into = "RawFactor")]
pub struct DenominatorFactor {
    pub i: usize,
    pub j: usize,
    pub zx: BigInt,
    pub wy: BigInt,
}

#[derive(Serialize, Deserialize)]
struct RawFactor {
    i: usize,
    j: usize,
    #[serde(with = "jsonnum")]
    zx: BigInt,
    #[serde(with = "jsonnum")]
    wy: BigInt,
}

impl TryFrom<RawFactor> for DenominatorFactor {
    type Error = Error;
    fn try_from(raw: RawFactor) -> Result<Self> {
        if raw.i == 0 || raw.j == 0 {
            return Err(Error::IndexOutOfRange { index: 0, len: 0 });
        }
        Ok(DenominatorFactor {
            i: raw.i - 1,
            j: raw.j - 1,
            zx: raw.zx,
            wy: raw.wy,
        })
    }
}

impl From<DenominatorFactor> for RawFactor {
    fn from(f: DenominatorFactor) -> Self {
        RawFactor {
            i: f.i + 1,
            j: f.j + 1,
            zx: f.zx,
            wy: f.wy,
        }
    }
}

/// The denominator of the solution-counting generating function: one factor
/// per completely fundamental solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunDenominator {
    pub factors: Vec<DenominatorFactor>,
}

impl GenFunDenominator {
    /// Deterministic text form, e.g. `(1 - z1*w1^3)(1 - z1*w2^2)`.
    pub fn render(&self) -> String {
        let exp = |e: &BigInt| {
            if e.is_one() {
                String::new()
            } else {
                format!("^{e}")
            }
        };
        self.factors
            .iter()
            .map(|f| {
                format!(
                    "(1 - z{}{}*w{}{})",
                    f.i + 1,
                    exp(&f.zx),
                    f.j + 1,
                    exp(&f.wy)
                )
            })
            .collect()
    }
}

/// One factor `(1 - z_i^(b_j/d) w_j^(a_i/d))` per (i, j) pair in row-major
/// order, with identical factors deduplicated.
pub fn genfun_denominator(inst: &Instance) -> GenFunDenominator {
    let mut factors: Vec<DenominatorFactor> = Vec::new();
    for g in inst.generators() {
        let factor = DenominatorFactor {
            i: g.i(),
            j: g.j(),
            zx: &inst.b()[g.j()] / g.d(),
            wy: &inst.a()[g.i()] / g.d(),
        };
        if !factors.contains(&factor) {
            factors.push(factor);
        }
    }
    GenFunDenominator { factors }
}

/// Extreme-point analysis of the hull of the Hilbert basis and the origin,
/// for instances with all gcd(a_i, b_j) = 1.
///
/// The basis itself never contains the origin (minimal solutions are
/// nonzero), so the hull examined is conv(basis U {0}) and the origin is
/// listed among the candidate points explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeReport {
    /// Points of conv(basis U {0}) that are not in the hull of the others.
    pub extreme: Vec<Solution>,
    pub non_extreme: Vec<Solution>,
    /// The predicted extreme set: the origin and every generator.
    pub predicted: Vec<Solution>,
    pub matches: bool,
}

pub fn extreme_points_check(inst: &Instance) -> Result<ExtremeReport> {
    extreme_points_check_with(inst, DEFAULT_NODE_BUDGET)
}

pub fn extreme_points_check_with(inst: &Instance, hard_cap: u64) -> Result<ExtremeReport> {
    for i in 0..inst.n() {
        for j in 0..inst.m() {
            if !inst.generator(i, j)?.is_minimal() {
                return Err(Error::NotCoprime { i, j });
            }
        }
    }
    let search = SearchBox::lambert(inst).with_hard_cap(hard_cap);
    let basis = hilbert_basis_with(inst, &search)?;
    let zero = inst.zero_solution();

    let mut extreme = Vec::new();
    let mut non_extreme = Vec::new();
    // The origin is extreme iff it is not a convex combination (total
    // exactly 1) of basis elements.
    let columns: Vec<Vec<BigInt>> = basis.iter().map(solution_column).collect();
    if simplex::convex_combination(&columns, &solution_column(&zero), false).is_none() {
        extreme.push(zero.clone());
    } else {
        non_extreme.push(zero.clone());
    }
    for v in &basis {
        let rest: Vec<Solution> = basis.iter().filter(|w| *w != v).cloned().collect();
        // conv(rest U {0}): the membership query's implicit origin is the
        // origin candidate point.
        match membership(inst, v, &rest)? {
            Membership::Feasible { .. } => non_extreme.push(v.clone()),
            Membership::Infeasible { .. } => extreme.push(v.clone()),
        }
    }
    extreme.sort();
    non_extreme.sort();

    let mut predicted: BTreeSet<Solution> = inst
        .generators()
        .iter()
        .map(|g| g.vector().clone())
        .collect();
    predicted.insert(zero);
    let predicted: Vec<Solution> = predicted.into_iter().collect();
    let matches = extreme == predicted;
    Ok(ExtremeReport {
        extreme,
        non_extreme,
        predicted,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: &[i64], b: &[i64]) -> Instance {
        Instance::from_ints(a, b).unwrap()
    }

    fn sol(inst: &Instance, x: &[i64], y: &[i64]) -> Solution {
        inst.solution_from_ints(x, y).unwrap()
    }

    #[test]
    fn cf_set_examples() {
        let i = inst(&[6], &[2, 3, 5]);
        assert_eq!(
            completely_fundamental_set(&i),
            vec![
                sol(&i, &[1], &[0, 2, 0]),
                sol(&i, &[1], &[3, 0, 0]),
                sol(&i, &[5], &[0, 0, 6])
            ]
        );

        let unit = inst(&[1], &[1]);
        assert_eq!(
            completely_fundamental_set(&unit),
            vec![sol(&unit, &[1], &[1])]
        );

        let i2 = inst(&[2, 3], &[5]);
        assert_eq!(
            completely_fundamental_set(&i2),
            vec![sol(&i2, &[0, 5], &[3]), sol(&i2, &[5, 0], &[2])]
        );
    }

    #[test]
    fn cf_bruteforce_accepts_minimal_generator() {
        let i = inst(&[6], &[2, 3, 5]);
        let report = is_cf_bruteforce(&i, &sol(&i, &[1], &[3, 0, 0]), 4).unwrap();
        assert!(report.no_counterexample());
    }

    #[test]
    fn cf_bruteforce_finds_witness_for_minimal_non_generator() {
        let i = inst(&[6], &[2, 3, 5]);
        let s = sol(&i, &[2], &[2, 1, 1]);
        let report = is_cf_bruteforce(&i, &s, 2).unwrap();
        let witness = report.witness.expect("counterexample at k = 2");
        assert_eq!(witness.k, 2);
        let total = s.scale(&BigInt::from(2));
        assert_eq!(witness.left.checked_add(&witness.right), total);
        assert!(!witness.left.is_integer_multiple_of(&s));
        assert!(!witness.right.is_integer_multiple_of(&s));

        // The split 2s = ((1),(3,0,0)) + ((3),(1,2,2)) is one valid witness;
        // verify it as data.
        let left = sol(&i, &[1], &[3, 0, 0]);
        let right = sol(&i, &[3], &[1, 2, 2]);
        assert_eq!(left.checked_add(&right), total);
        assert!(!left.is_integer_multiple_of(&s) && !right.is_integer_multiple_of(&s));
    }

    #[test]
    fn cf_bruteforce_rejects_scaled_generator_with_gcd() {
        let i = inst(&[6], &[2, 3, 5]);
        // ((2),(6,0,0)) = 2 * ((1),(3,0,0)): the k = 1 split into two copies
        // of the halved vector is not a multiple of s itself.
        let report = is_cf_bruteforce(&i, &sol(&i, &[2], &[6, 0, 0]), 1).unwrap();
        let witness = report.witness.expect("counterexample at k = 1");
        assert_eq!(witness.k, 1);
    }

    #[test]
    fn cf_zero_rejected_and_budget_guard() {
        let i = inst(&[6], &[2, 3, 5]);
        assert_eq!(
            is_cf_bruteforce(&i, &i.zero_solution(), 2),
            Err(Error::ZeroSolution)
        );
        let s = sol(&i, &[2], &[2, 1, 1]);
        assert_eq!(
            is_cf_bruteforce_with(&i, &s, 4, 3),
            Err(Error::SearchBudgetExceeded { limit: 3 })
        );
    }

    #[test]
    fn genfun_rendering() {
        let i = inst(&[6], &[2, 3, 5]);
        let den = genfun_denominator(&i);
        assert_eq!(den.render(), "(1 - z1*w1^3)(1 - z1*w2^2)(1 - z1^5*w3^6)");
        assert_eq!(den.factors.len(), completely_fundamental_set(&i).len());

        let unit = inst(&[1], &[1]);
        assert_eq!(genfun_denominator(&unit).render(), "(1 - z1*w1)");

        let i2 = inst(&[2, 3], &[5]);
        assert_eq!(
            genfun_denominator(&i2).render(),
            "(1 - z1^5*w1^2)(1 - z2^5*w1^3)"
        );
    }

    #[test]
    fn genfun_json() {
        let i = inst(&[6], &[2, 3, 5]);
        let den = genfun_denominator(&i);
        let text = serde_json::to_string(&den).unwrap();
        assert!(text.starts_with(r#"{"factors":[{"i":1,"j":1,"zx":1,"wy":3}"#));
        let back: GenFunDenominator = serde_json::from_str(&text).unwrap();
        assert_eq!(back, den);
    }

    #[test]
    fn extreme_points_coprime_example() {
        let i = inst(&[2, 3], &[5]);
        let report = extreme_points_check(&i).unwrap();
        assert!(report.matches);
        assert_eq!(
            report.extreme,
            vec![
                i.zero_solution(),
                sol(&i, &[0, 5], &[3]),
                sol(&i, &[5, 0], &[2])
            ]
        );
        assert_eq!(report.non_extreme, vec![sol(&i, &[1, 1], &[1])]);
    }

    #[test]
    fn extreme_points_unit_and_noncoprime() {
        let unit = inst(&[1], &[1]);
        let report = extreme_points_check(&unit).unwrap();
        assert!(report.matches);
        assert_eq!(
            report.extreme,
            vec![unit.zero_solution(), sol(&unit, &[1], &[1])]
        );

        let i = inst(&[6], &[2, 3, 5]);
        assert_eq!(
            extreme_points_check(&i),
            Err(Error::NotCoprime { i: 0, j: 0 })
        );
    }
}
