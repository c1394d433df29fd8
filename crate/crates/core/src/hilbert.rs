//! Hilbert basis enumeration for `a.x = b.y` plus the minimality oracle,
//! norm-bound checks, and the partition-identity rendering of a solution.
//!
//! Every minimal solution satisfies the classical Lambert bounds
//! `||x||_1 <= max_j b_j` and `||y||_1 <= max_i a_i`, so the basis lives in a
//! finite box. Enumeration is a depth-first walk over x then y with running
//! partial sums; minimality filtering is pairwise componentwise dominance
//! over the enumerated set (any dominator of a box member is itself a box
//! member, so the filter is complete).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{dot, Instance, Solution};
use crate::rational::Rational;

/// Default limit on explored search nodes. A clear error, never silent
/// truncation.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// The finite search region for basis enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    /// Bound on ||x||_1 (the largest b coefficient).
    pub x_norm_cap: BigInt,
    /// Bound on ||y||_1 (the largest a coefficient).
    pub y_norm_cap: BigInt,
    /// Limit on the number of explored nodes.
    pub hard_cap: u64,
}

impl SearchBox {
    /// The Lambert box of the instance with the default node budget.
    pub fn lambert(inst: &Instance) -> Self {
        SearchBox {
            x_norm_cap: inst.b().iter().max().expect("nonempty").clone(),
            y_norm_cap: inst.a().iter().max().expect("nonempty").clone(),
            hard_cap: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_hard_cap(mut self, hard_cap: u64) -> Self {
        self.hard_cap = hard_cap;
        self
    }
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::SearchBudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// The Hilbert basis of the instance: all nonzero solutions that are not the
/// sum of two nonzero solutions, canonically sorted.
pub fn hilbert_basis(inst: &Instance) -> Result<Vec<Solution>> {
    hilbert_basis_with(inst, &SearchBox::lambert(inst))
}

/// Same as [`hilbert_basis`] with an explicit search box / node budget.
pub fn hilbert_basis_with(inst: &Instance, search: &SearchBox) -> Result<Vec<Solution>> {
    let all = enumerate_box_solutions(inst, search)?;
    let mut basis = minimal_elements(&all);
    basis.sort();
    Ok(basis)
}

/// All nonzero solutions with `||x||_1 <= x_norm_cap` and
/// `||y||_1 <= y_norm_cap`, in no particular order.
pub(crate) fn enumerate_box_solutions(
    inst: &Instance,
    search: &SearchBox,
) -> Result<Vec<Solution>> {
    let mut walker = BoxWalker::new(inst, search);
    walker.walk_x(0, search.x_norm_cap.clone(), BigInt::zero())?;
    Ok(walker.out)
}

struct BoxWalker<'a> {
    inst: &'a Instance,
    y_cap: BigInt,
    /// y_norm_cap * max_j b_j: the largest value b.y can reach in the box.
    rhs_max: BigInt,
    gcd_b: BigInt,
    /// b_suffix_max[j] = max of b[j..] (0 past the end).
    b_suffix_max: Vec<BigInt>,
    budget: Budget,
    x: Vec<BigInt>,
    y: Vec<BigInt>,
    out: Vec<Solution>,
}

impl<'a> BoxWalker<'a> {
    fn new(inst: &'a Instance, search: &SearchBox) -> Self {
        let m = inst.m();
        let max_b = inst.b().iter().max().expect("nonempty").clone();
        let mut b_suffix_max = vec![BigInt::zero(); m + 1];
        for j in (0..m).rev() {
            b_suffix_max[j] = inst.b()[j].clone().max(b_suffix_max[j + 1].clone());
        }
        let gcd_b = inst.b().iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        BoxWalker {
            inst,
            y_cap: search.y_norm_cap.clone(),
            rhs_max: &search.y_norm_cap * &max_b,
            gcd_b,
            b_suffix_max,
            budget: Budget::new(search.hard_cap),
            x: vec![BigInt::zero(); inst.n()],
            y: vec![BigInt::zero(); m],
            out: Vec::new(),
        }
    }

    fn walk_x(&mut self, i: usize, budget_left: BigInt, lhs: BigInt) -> Result<()> {
        self.budget.tick()?;
        if i == self.inst.n() {
            // x = 0 only pairs with y = 0, which is the excluded zero solution.
            if lhs.is_zero() || !(&lhs % &self.gcd_b).is_zero() {
                return Ok(());
            }
            let y_cap = self.y_cap.clone();
            return self.walk_y(0, y_cap, lhs);
        }
        let coeff = self.inst.a()[i].clone();
        let mut v = BigInt::zero();
        let mut new_lhs = lhs;
        while v <= budget_left && new_lhs <= self.rhs_max {
            self.x[i] = v.clone();
            self.walk_x(i + 1, &budget_left - &v, new_lhs.clone())?;
            new_lhs += &coeff;
            v += 1;
        }
        self.x[i] = BigInt::zero();
        Ok(())
    }

    fn walk_y(&mut self, j: usize, budget_left: BigInt, target: BigInt) -> Result<()> {
        self.budget.tick()?;
        let m = self.inst.m();
        if j == m {
            if target.is_zero() {
                self.out.push(Solution::from_parts_unchecked(
                    self.x.clone(),
                    self.y.clone(),
                ));
            }
            return Ok(());
        }
        let coeff = self.inst.b()[j].clone();
        if j + 1 == m {
            // Last coordinate is forced: b_j * v = target.
            let (q, r) = target.div_rem(&coeff);
            if r.is_zero() && q <= budget_left {
                self.y[j] = q;
                self.walk_y(j + 1, BigInt::zero(), BigInt::zero())?;
                self.y[j] = BigInt::zero();
            }
            return Ok(());
        }
        let suffix_max = self.b_suffix_max[j + 1].clone();
        let max_take = (&target / &coeff).min(budget_left.clone());
        let mut v = BigInt::zero();
        let mut remaining = target;
        while v <= max_take {
            // The rest of the coordinates can contribute at most
            // (budget - v) * suffix_max; skip values of v that fall short.
            if remaining <= (&budget_left - &v) * &suffix_max {
                self.y[j] = v.clone();
                self.walk_y(j + 1, &budget_left - &v, remaining.clone())?;
            }
            remaining -= &coeff;
            v += 1;
        }
        self.y[j] = BigInt::zero();
        Ok(())
    }
}

/// Keeps exactly the solutions not strictly dominated by another solution in
/// the slice. Output order is unspecified.
pub(crate) fn minimal_elements(all: &[Solution]) -> Vec<Solution> {
    let mut by_norm: Vec<(BigInt, &Solution)> =
        all.iter().map(|s| (s.norm_x() + s.norm_y(), s)).collect();
    by_norm.sort_by(|(n1, s1), (n2, s2)| n1.cmp(n2).then_with(|| s1.cmp(s2)));
    let mut kept = Vec::new();
    'outer: for (idx, (norm, s)) in by_norm.iter().enumerate() {
        for (other_norm, other) in &by_norm[..idx] {
            // A strict dominator has strictly smaller total norm.
            if other_norm == norm {
                break;
            }
            if s.properly_contains(other) {
                continue 'outer;
            }
        }
        kept.push((*s).clone());
    }
    kept
}

/// True iff no nonzero solution lies strictly below `s` componentwise.
///
/// Independent of the basis enumeration: this searches the sub-box of `s`
/// directly.
pub fn is_minimal(inst: &Instance, s: &Solution) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    let mut x = vec![BigInt::zero(); inst.n()];
    Ok(!find_sub_solution_x(inst, s, &mut x, 0, BigInt::zero()))
}

/// Looks for x' <= s.x (x' != s.x, x' != 0) admitting y' <= s.y with
/// b.y' = a.x'. Such a pair is a nonzero proper sub-solution.
fn find_sub_solution_x(
    inst: &Instance,
    s: &Solution,
    x: &mut Vec<BigInt>,
    i: usize,
    lhs: BigInt,
) -> bool {
    if i == inst.n() {
        if lhs.is_zero() || x == s.x() {
            // x' = 0 forces y' = 0; x' = x forces y' = y. Neither is proper.
            return false;
        }
        let mut y = vec![BigInt::zero(); inst.m()];
        return find_sub_solution_y(inst, s, &mut y, 0, lhs);
    }
    let coeff = &inst.a()[i];
    let mut v = BigInt::zero();
    let mut new_lhs = lhs;
    while v <= s.x()[i] {
        x[i] = v.clone();
        if find_sub_solution_x(inst, s, x, i + 1, new_lhs.clone()) {
            return true;
        }
        new_lhs += coeff;
        v += 1;
    }
    x[i] = BigInt::zero();
    false
}

fn find_sub_solution_y(
    inst: &Instance,
    s: &Solution,
    y: &mut Vec<BigInt>,
    j: usize,
    target: BigInt,
) -> bool {
    if j == inst.m() {
        return target.is_zero();
    }
    let coeff = &inst.b()[j];
    if j + 1 == inst.m() {
        let (q, r) = target.div_rem(coeff);
        if r.is_zero() && q <= s.y()[j] {
            y[j] = q;
            return true;
        }
        return false;
    }
    let max_take = (&target / coeff).min(s.y()[j].clone());
    let mut v = BigInt::zero();
    let mut remaining = target;
    while v <= max_take {
        y[j] = v.clone();
        if find_sub_solution_y(inst, s, y, j + 1, remaining.clone()) {
            return true;
        }
        remaining -= coeff;
        v += 1;
    }
    y[j] = BigInt::zero();
    false
}

/// The four norm bounds every minimal solution satisfies, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub x_norm: BigInt,
    pub y_norm: BigInt,
    /// max_j b_j
    pub lambert_x_bound: BigInt,
    /// max_i a_i
    pub lambert_y_bound: BigInt,
    /// (y.b) / ||y||_1
    pub refined_x_bound: Rational,
    /// (x.a) / ||x||_1
    pub refined_y_bound: Rational,
    pub lambert_x_ok: bool,
    pub lambert_y_ok: bool,
    pub refined_x_ok: bool,
    pub refined_y_ok: bool,
}

impl BoundsReport {
    pub fn all_ok(&self) -> bool {
        self.lambert_x_ok && self.lambert_y_ok && self.refined_x_ok && self.refined_y_ok
    }
}

/// Evaluates the Lambert bounds and the refined mean-coefficient bounds for a
/// nonzero solution.
pub fn check_bounds(inst: &Instance, s: &Solution) -> Result<BoundsReport> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    let x_norm = s.norm_x();
    let y_norm = s.norm_y();
    let lambert_x_bound = inst.b().iter().max().expect("nonempty").clone();
    let lambert_y_bound = inst.a().iter().max().expect("nonempty").clone();
    // A nonzero solution has both sides nonzero, so the norms are positive.
    let refined_x_bound = Rational::new(dot(inst.b(), s.y()), y_norm.clone());
    let refined_y_bound = Rational::new(dot(inst.a(), s.x()), x_norm.clone());
    Ok(BoundsReport {
        lambert_x_ok: x_norm <= lambert_x_bound,
        lambert_y_ok: y_norm <= lambert_y_bound,
        refined_x_ok: Rational::from_int(x_norm.clone()) <= refined_x_bound,
        refined_y_ok: Rational::from_int(y_norm.clone()) <= refined_y_bound,
        x_norm,
        y_norm,
        lambert_x_bound,
        lambert_y_bound,
        refined_x_bound,
        refined_y_bound,
    })
}

/// Renders a nonzero solution as a partition identity such as
/// `6+6=2+2+3+5`, with x_i copies of a_i and y_j copies of b_j.
pub fn as_partition_identity(inst: &Instance, s: &Solution) -> Result<String> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    let side = |coeffs: &[BigInt], mults: &[BigInt]| -> String {
        let mut terms = Vec::new();
        for (c, mult) in coeffs.iter().zip(mults) {
            let mut k = BigInt::zero();
            while &k < mult {
                terms.push(c.to_string());
                k += 1u32;
            }
        }
        terms.join("+")
    };
    Ok(format!(
        "{}={}",
        side(inst.a(), s.x()),
        side(inst.b(), s.y())
    ))
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
    fn unit_instance_basis() {
        let i = inst(&[1], &[1]);
        let basis = hilbert_basis(&i).unwrap();
        assert_eq!(basis, vec![sol(&i, &[1], &[1])]);
    }

    #[test]
    fn two_three_five_basis() {
        let i = inst(&[2, 3], &[5]);
        let basis = hilbert_basis(&i).unwrap();
        let expected = vec![
            sol(&i, &[0, 5], &[3]),
            sol(&i, &[1, 1], &[1]),
            sol(&i, &[5, 0], &[2]),
        ];
        assert_eq!(basis, expected);
    }

    #[test]
    fn worked_instance_contains_known_minimal() {
        let i = inst(&[6], &[2, 3, 5]);
        let basis = hilbert_basis(&i).unwrap();
        assert!(basis.contains(&sol(&i, &[2], &[2, 1, 1])));
        for s in &basis {
            assert!(is_minimal(&i, s).unwrap());
            assert!(check_bounds(&i, s).unwrap().all_ok());
        }
    }

    #[test]
    fn minimality_oracle() {
        let i = inst(&[6], &[2, 3, 5]);
        assert!(is_minimal(&i, &sol(&i, &[2], &[2, 1, 1])).unwrap());

        // 2+2+3 = 2+5 contains the sub-identity 2+3 = 5.
        let i2 = inst(&[2, 3], &[2, 5]);
        assert!(!is_minimal(&i2, &sol(&i2, &[2, 1], &[1, 1])).unwrap());

        let unit = inst(&[1], &[1]);
        assert!(is_minimal(&unit, &sol(&unit, &[1], &[1])).unwrap());
        assert_eq!(
            is_minimal(&unit, &unit.zero_solution()),
            Err(Error::ZeroSolution)
        );
    }

    #[test]
    fn bounds_on_worked_example() {
        let i = inst(&[6], &[2, 3, 5]);
        let report = check_bounds(&i, &sol(&i, &[2], &[2, 1, 1])).unwrap();
        assert_eq!(report.x_norm, BigInt::from(2));
        assert_eq!(report.lambert_x_bound, BigInt::from(5));
        assert!(report.lambert_x_ok);
        assert_eq!(report.refined_x_bound, Rational::from_int(3));
        assert_eq!(report.refined_y_bound, Rational::from_int(6));
        assert!(report.all_ok());

        let unit = inst(&[1], &[1]);
        let report = check_bounds(&unit, &sol(&unit, &[1], &[1])).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.x_norm, report.lambert_x_bound);
    }

    #[test]
    fn partition_identity_rendering() {
        let i = inst(&[6, 6], &[2, 2, 3, 5]);
        let all_ones = sol(&i, &[1, 1], &[1, 1, 1, 1]);
        assert_eq!(as_partition_identity(&i, &all_ones).unwrap(), "6+6=2+2+3+5");

        let unit = inst(&[1], &[1]);
        assert_eq!(
            as_partition_identity(&unit, &sol(&unit, &[1], &[1])).unwrap(),
            "1=1"
        );

        let i2 = inst(&[2, 3], &[5]);
        assert_eq!(
            as_partition_identity(&i2, &sol(&i2, &[1, 1], &[1])).unwrap(),
            "2+3=5"
        );
        assert_eq!(
            as_partition_identity(&i2, &i2.zero_solution()),
            Err(Error::ZeroSolution)
        );
    }

    #[test]
    fn budget_guard_trips() {
        let i = inst(&[97], &[89, 93]);
        let search = SearchBox::lambert(&i).with_hard_cap(50);
        assert_eq!(
            hilbert_basis_with(&i, &search),
            Err(Error::SearchBudgetExceeded { limit: 50 })
        );
    }

    #[test]
    fn determinism() {
        let i = inst(&[4, 6], &[3, 5]);
        assert_eq!(hilbert_basis(&i).unwrap(), hilbert_basis(&i).unwrap());
    }

    /// Greedy decomposition with backtracking: every box solution must be a
    /// nonnegative integer combination of basis elements.
    fn decomposes_over(basis: &[Solution], s: &Solution) -> bool {
        if s.is_zero() {
            return true;
        }
        for h in basis {
            if h == s || s.properly_contains(h) {
                let rest = Solution::from_parts_unchecked(
                    s.x().iter().zip(h.x()).map(|(a, b)| a - b).collect(),
                    s.y().iter().zip(h.y()).map(|(a, b)| a - b).collect(),
                );
                if decomposes_over(basis, &rest) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn basis_generates_every_box_solution() {
        for (a, b) in [
            (vec![6], vec![2, 3, 5]),
            (vec![2, 3], vec![5]),
            (vec![4, 6], vec![3, 5]),
        ] {
            let i = Instance::from_ints(&a, &b).unwrap();
            let basis = hilbert_basis(&i).unwrap();
            let all = enumerate_box_solutions(&i, &SearchBox::lambert(&i)).unwrap();
            for s in &all {
                assert!(
                    decomposes_over(&basis, s),
                    "{s} not generated for a={a:?} b={b:?}"
                );
            }
        }
    }
}
