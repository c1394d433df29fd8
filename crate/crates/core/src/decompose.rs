//! Convex decomposition of minimal solutions over the generators.
//!
//! Every minimal solution (x, y) admits exact nonnegative rationals
//! `lambda[i][j]` with
//!
//! ```text
//! sum_j lambda[i][j] * b_j = x_i        for all i,
//! sum_i lambda[i][j] * a_i = y_j        for all j,
//! sum lambda <= 1,                      lambda >= 0,
//! ```
//!
//! i.e. (x, y) is a convex combination of the generators g(i, j) and the
//! origin. The construction is recursive: copy coefficients until the
//! solution is all-ones ([`binarize`]), repeatedly cancel the largest
//! coefficient of one side against the largest of the other
//! ([`reduce_step`]) down to a trivial identity `c = c`, then lift the
//! coefficient table back up level by level ([`lift_lambdas`]) and merge
//! copies ([`decompose`]). [`trace`] exposes the whole run, level by level.
//!
//! [`membership`] answers hull queries for arbitrary vertex sets by exact
//! rational feasibility, and [`caratheodory_reduce`] rewrites a certificate
//! to use at most n+m-1 generators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::is_minimal;
use crate::instance::{Instance, LambdaMatrix, Solution};
use crate::jsonnum;
use crate::rational::Rational;
use crate::simplex;

/// A solution rewritten with binary variables: one coefficient copy per unit
/// of multiplicity, so the all-ones pair over the active supports is the
/// solution being decomposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryState {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    origin_row: Vec<usize>,
    origin_col: Vec<usize>,
    active_x: Vec<bool>,
    active_y: Vec<bool>,
}

impl BinaryState {
    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// Source index in the original instance of each a-side copy.
    pub fn origin_row(&self) -> &[usize] {
        &self.origin_row
    }

    pub fn origin_col(&self) -> &[usize] {
        &self.origin_col
    }

    pub fn active_x(&self) -> &[bool] {
        &self.active_x
    }

    pub fn active_y(&self) -> &[bool] {
        &self.active_y
    }

    fn active_x_count(&self) -> usize {
        self.active_x.iter().filter(|&&f| f).count()
    }

    fn active_y_count(&self) -> usize {
        self.active_y.iter().filter(|&&f| f).count()
    }

    /// The partition identity over the active supports, e.g. `6+6=2+2+3+5`.
    pub fn identity(&self) -> String {
        let side = |vals: &[BigInt], active: &[bool]| {
            vals.iter()
                .zip(active)
                .filter(|(_, &f)| f)
                .map(|(v, _)| v.to_string())
                .collect::<Vec<_>>()
                .join("+")
        };
        format!(
            "{}={}",
            side(&self.a, &self.active_x),
            side(&self.b, &self.active_y)
        )
    }

    fn active_sums_balanced(&self) -> bool {
        let lhs: BigInt = self
            .a
            .iter()
            .zip(&self.active_x)
            .filter(|(_, &f)| f)
            .map(|(v, _)| v)
            .sum();
        let rhs: BigInt = self
            .b
            .iter()
            .zip(&self.active_y)
            .filter(|(_, &f)| f)
            .map(|(v, _)| v)
            .sum();
        lhs == rhs
    }
}

/// Creates x_i copies of a_i and y_j copies of b_j, making the all-ones pair
/// an equivalent binary solution.
pub fn binarize(inst: &Instance, s: &Solution) -> Result<BinaryState> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    debug_assert!(inst.is_solution(s.x(), s.y()).unwrap_or(false));
    let mut a = Vec::new();
    let mut origin_row = Vec::new();
    for (i, count) in s.x().iter().enumerate() {
        let mut k = BigInt::zero();
        while &k < count {
            a.push(inst.a()[i].clone());
            origin_row.push(i);
            k += 1u32;
        }
    }
    let mut b = Vec::new();
    let mut origin_col = Vec::new();
    for (j, count) in s.y().iter().enumerate() {
        let mut k = BigInt::zero();
        while &k < count {
            b.push(inst.b()[j].clone());
            origin_col.push(j);
            k += 1u32;
        }
    }
    let active_x = vec![true; a.len()];
    let active_y = vec![true; b.len()];
    Ok(BinaryState {
        a,
        b,
        origin_row,
        origin_col,
        active_x,
        active_y,
    })
}

/// The pivot pair: position of the largest active a-side coefficient and of
/// the largest active b-side coefficient, ties broken toward the largest
/// position index.
pub fn select_pivot(state: &BinaryState) -> Result<(usize, usize)> {
    let pick = |vals: &[BigInt], active: &[bool]| {
        let mut best: Option<usize> = None;
        for (idx, (v, &flag)) in vals.iter().zip(active).enumerate() {
            if flag && best.is_none_or(|b| v >= &vals[b]) {
                best = Some(idx);
            }
        }
        best
    };
    match (
        pick(&state.a, &state.active_x),
        pick(&state.b, &state.active_y),
    ) {
        (Some(s), Some(t)) => Ok((s, t)),
        _ => Err(Error::EmptySupport),
    }
}

/// One forward level of the recursion.
///
/// `s` and `t` are stable 0-based positions into the binary coefficient
/// vectors (serialization renders them 1-based); `a_s` and `b_t` are the
/// pivot values at this level, before any replacement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRecord {
    pub level: usize,
    pub identity: String,
    pub s: usize,
    pub t: usize,
    pub a_s: BigInt,
    pub b_t: BigInt,
}

impl LevelRecord {
    /// Base levels are the trivial identity `c = c`.
    pub fn is_base(&self) -> bool {
        self.a_s == self.b_t
    }

    /// |a_s - b_t|: the coefficient written in place of the larger pivot.
    pub fn replaced_value(&self) -> BigInt {
        (&self.a_s - &self.b_t).abs()
    }
}

/// Cancels the smaller pivot against the larger one: the larger side's pivot
/// coefficient becomes the difference and the smaller side's pivot is
/// deactivated. The all-ones pair over the new active supports is again a
/// solution, with one term fewer.
pub fn reduce_step(state: &BinaryState, level: usize) -> Result<(BinaryState, LevelRecord)> {
    let (s, t) = select_pivot(state)?;
    let a_s = state.a[s].clone();
    let b_t = state.b[t].clone();
    let terms = state.active_x_count() + state.active_y_count();
    if a_s == b_t {
        if terms > 2 {
            // a_s = b_t is a proper sub-identity, so the input was not minimal.
            return Err(Error::NotMinimal);
        }
        return Err(Error::InvariantViolation(
            "reduce_step called on a base-level state".into(),
        ));
    }
    let record = LevelRecord {
        level,
        identity: state.identity(),
        s,
        t,
        a_s: a_s.clone(),
        b_t: b_t.clone(),
    };
    let mut next = state.clone();
    if a_s > b_t {
        next.a[s] = &a_s - &b_t;
        next.active_y[t] = false;
    } else {
        next.b[t] = &b_t - &a_s;
        next.active_x[s] = false;
    }
    if !next.active_sums_balanced() {
        return Err(Error::NotMinimal);
    }
    Ok((next, record))
}

/// Coefficient table over binary positions; entries outside the level's
/// active supports are zero.
pub type LambdaTable = Vec<Vec<Rational>>;

fn zero_table(p: usize, q: usize) -> LambdaTable {
    vec![vec![Rational::zero(); q]; p]
}

/// The table for a base-level state `c = c`: 1/c at the unique active pair.
fn base_table(state: &BinaryState) -> Result<LambdaTable> {
    let (s, t) = select_pivot(state)?;
    if state.active_x_count() != 1 || state.active_y_count() != 1 || state.a[s] != state.b[t] {
        return Err(Error::InvariantViolation("not a base-level state".into()));
    }
    let mut table = zero_table(state.a.len(), state.b.len());
    table[s][t] = Rational::recip_int(state.a[s].clone());
    Ok(table)
}

/// Lifts the coefficient table of the reduced state one level up.
///
/// With the a-side pivot larger: `lambda[s][t] = 1/a_s`,
/// `lambda[s][j] = ((a_s - b_t)/a_s) * inner[s][j]` for j != t,
/// `lambda[i][t] = 0` for i != s, everything else copied. When the b-side
/// pivot was larger the same formulas apply with the roles of the two sides
/// swapped. The output is checked against the level's exact row, column,
/// sign, support, and total-sum constraints.
pub fn lift_lambdas(
    state: &BinaryState,
    record: &LevelRecord,
    inner: &LambdaTable,
) -> Result<LambdaTable> {
    if record.is_base() {
        return Err(Error::InvariantViolation(
            "cannot lift across a base record".into(),
        ));
    }
    let (p, q) = (state.a.len(), state.b.len());
    let (s, t) = (record.s, record.t);
    let mut table = zero_table(p, q);
    if record.a_s > record.b_t {
        let scale = Rational::new(&record.a_s - &record.b_t, record.a_s.clone());
        for i in 0..p {
            for j in 0..q {
                table[i][j] = if (i, j) == (s, t) {
                    Rational::recip_int(record.a_s.clone())
                } else if i == s {
                    &scale * &inner[s][j]
                } else if j == t {
                    Rational::zero()
                } else {
                    inner[i][j].clone()
                };
            }
        }
    } else {
        let scale = Rational::new(&record.b_t - &record.a_s, record.b_t.clone());
        for i in 0..p {
            for j in 0..q {
                table[i][j] = if (i, j) == (s, t) {
                    Rational::recip_int(record.b_t.clone())
                } else if j == t {
                    &scale * &inner[i][t]
                } else if i == s {
                    Rational::zero()
                } else {
                    inner[i][j].clone()
                };
            }
        }
    }
    check_table(state, &table)?;
    Ok(table)
}

/// Exact constraints a level table must satisfy: nonnegative entries, zero
/// outside the active supports, active rows and columns reproducing 1, and
/// total at most 1.
fn check_table(state: &BinaryState, table: &LambdaTable) -> Result<()> {
    let fail = |msg: String| Err(Error::InvariantViolation(msg));
    let mut total = Rational::zero();
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.is_negative() {
                return fail(format!("negative lambda at ({i}, {j})"));
            }
            if !v.is_zero() && !(state.active_x[i] && state.active_y[j]) {
                return fail(format!("lambda outside active support at ({i}, {j})"));
            }
            total += v;
        }
    }
    if total > Rational::one() {
        return fail(format!("lambda total {total} exceeds 1"));
    }
    for (i, row) in table.iter().enumerate() {
        let acc: Rational = row
            .iter()
            .zip(&state.b)
            .map(|(v, b)| v * &Rational::from_int(b.clone()))
            .sum();
        let expect = if state.active_x[i] {
            Rational::one()
        } else {
            Rational::zero()
        };
        if acc != expect {
            return fail(format!("row {i} reproduces {acc}, expected {expect}"));
        }
    }
    for j in 0..state.b.len() {
        let acc: Rational = table
            .iter()
            .zip(&state.a)
            .map(|(row, a)| &row[j] * &Rational::from_int(a.clone()))
            .sum();
        let expect = if state.active_y[j] {
            Rational::one()
        } else {
            Rational::zero()
        };
        if acc != expect {
            return fail(format!("column {j} reproduces {acc}, expected {expect}"));
        }
    }
    Ok(())
}

struct Recursion {
    initial: BinaryState,
    records: Vec<LevelRecord>,
    tables: Vec<LambdaTable>,
}

fn run_recursion(inst: &Instance, s: &Solution) -> Result<Recursion> {
    if s.is_zero() {
        return Err(Error::ZeroSolution);
    }
    if !is_minimal(inst, s)? {
        return Err(Error::NotMinimal);
    }
    let initial = binarize(inst, s)?;
    let mut states = vec![initial.clone()];
    let mut records = Vec::new();
    loop {
        let state = states.last().expect("nonempty");
        let (s_pos, t_pos) = select_pivot(state)?;
        let level = records.len() + 1;
        if state.active_x_count() + state.active_y_count() == 2 {
            if state.a[s_pos] != state.b[t_pos] {
                return Err(Error::InvariantViolation("unbalanced base identity".into()));
            }
            records.push(LevelRecord {
                level,
                identity: state.identity(),
                s: s_pos,
                t: t_pos,
                a_s: state.a[s_pos].clone(),
                b_t: state.b[t_pos].clone(),
            });
            break;
        }
        let (next, record) = reduce_step(state, level)?;
        records.push(record);
        states.push(next);
    }
    let levels = records.len();
    let mut tables = vec![LambdaTable::new(); levels];
    tables[levels - 1] = base_table(states.last().expect("nonempty"))?;
    for k in (0..levels - 1).rev() {
        tables[k] = lift_lambdas(&states[k], &records[k], &tables[k + 1])?;
    }
    Ok(Recursion {
        initial,
        records,
        tables,
    })
}

/// One level of [`trace`] output: the forward record and the exact
/// coefficient table at that level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTraceLevel", into = "RawTraceLevel")]
pub struct TraceLevel {
    pub record: LevelRecord,
    pub lambdas: LambdaTable,
}

#[derive(Serialize, Deserialize)]
struct RawTraceLevel {
    level: usize,
    identity: String,
    s: usize,
    t: usize,
    #[serde(with = "jsonnum")]
    a_s: BigInt,
    #[serde(with = "jsonnum")]
    b_t: BigInt,
    lambdas: LambdaTable,
}

impl TryFrom<RawTraceLevel> for TraceLevel {
    type Error = Error;
    fn try_from(raw: RawTraceLevel) -> Result<Self> {
        if raw.s == 0 || raw.t == 0 {
            return Err(Error::IndexOutOfRange { index: 0, len: 0 });
        }
        Ok(TraceLevel {
            record: LevelRecord {
                level: raw.level,
                identity: raw.identity,
                s: raw.s - 1,
                t: raw.t - 1,
                a_s: raw.a_s,
                b_t: raw.b_t,
            },
            lambdas: raw.lambdas,
        })
    }
}

impl From<TraceLevel> for RawTraceLevel {
    fn from(lvl: TraceLevel) -> Self {
        RawTraceLevel {
            level: lvl.record.level,
            identity: lvl.record.identity,
            s: lvl.record.s + 1,
            t: lvl.record.t + 1,
            a_s: lvl.record.a_s,
            b_t: lvl.record.b_t,
            lambdas: lvl.lambdas,
        }
    }
}

/// The full forward pivot pass and reverse coefficient pass for a minimal
/// solution, in level order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    pub levels: Vec<TraceLevel>,
}

pub fn trace(inst: &Instance, s: &Solution) -> Result<Trace> {
    let rec = run_recursion(inst, s)?;
    let levels = rec
        .records
        .into_iter()
        .zip(rec.tables)
        .map(|(record, lambdas)| TraceLevel { record, lambdas })
        .collect();
    Ok(Trace { levels })
}

/// One generator appearing in a certificate with a nonzero coefficient.
/// Indices are 0-based internally and 1-based on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGeneratorTerm", into = "RawGeneratorTerm")]
pub struct GeneratorTerm {
    pub i: usize,
    pub j: usize,
    pub coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawGeneratorTerm {
    i: usize,
    j: usize,
    coef: Rational,
}

impl TryFrom<RawGeneratorTerm> for GeneratorTerm {
    type Error = Error;
    fn try_from(raw: RawGeneratorTerm) -> Result<Self> {
        if raw.i == 0 || raw.j == 0 {
            return Err(Error::IndexOutOfRange { index: 0, len: 0 });
        }
        Ok(GeneratorTerm {
            i: raw.i - 1,
            j: raw.j - 1,
            coef: raw.coef,
        })
    }
}

impl From<GeneratorTerm> for RawGeneratorTerm {
    fn from(t: GeneratorTerm) -> Self {
        RawGeneratorTerm {
            i: t.i + 1,
            j: t.j + 1,
            coef: t.coef,
        }
    }
}

/// An exact convex-combination certificate: the point equals
/// `sum lambda[i][j] * g(i, j)` with all coefficients nonnegative and total
/// at most 1; `slack` is the coefficient of the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexCertificate {
    lambda: LambdaMatrix,
    slack: Rational,
    generators: Vec<GeneratorTerm>,
}

impl ConvexCertificate {
    /// Wraps a coefficient matrix as a certificate, deriving the slack and
    /// the nonzero generator list, and verifies it against the instance.
    pub fn from_lambda(inst: &Instance, lambda: LambdaMatrix) -> Result<Self> {
        let slack = &Rational::one() - &lambda.sum();
        let generators = lambda
            .support()
            .into_iter()
            .map(|(i, j)| GeneratorTerm {
                i,
                j,
                coef: lambda.get(i, j).clone(),
            })
            .collect();
        let cert = ConvexCertificate {
            lambda,
            slack,
            generators,
        };
        cert.implied_point(inst)?;
        Ok(cert)
    }

    pub fn lambda(&self) -> &LambdaMatrix {
        &self.lambda
    }

    pub fn slack(&self) -> &Rational {
        &self.slack
    }

    pub fn generators(&self) -> &[GeneratorTerm] {
        &self.generators
    }

    pub fn nonzero_count(&self) -> usize {
        self.generators.len()
    }

    /// The point this certificate reproduces, derived from the row and
    /// column identities. Fails if the matrix does not describe a
    /// nonnegative integer solution of the instance.
    pub fn implied_point(&self, inst: &Instance) -> Result<Solution> {
        let fail = |msg: String| Error::InvalidCertificate(msg);
        if self.lambda.n() != inst.n() || self.lambda.m() != inst.m() {
            return Err(fail("lambda dimensions do not match the instance".into()));
        }
        let mut x = Vec::with_capacity(inst.n());
        for i in 0..inst.n() {
            let acc: Rational = (0..inst.m())
                .map(|j| self.lambda.get(i, j) * &Rational::from_int(inst.b()[j].clone()))
                .sum();
            let v = acc
                .to_integer()
                .ok_or_else(|| fail(format!("row {i} sum {acc} is not an integer")))?;
            x.push(v);
        }
        let mut y = Vec::with_capacity(inst.m());
        for j in 0..inst.m() {
            let acc: Rational = (0..inst.n())
                .map(|i| self.lambda.get(i, j) * &Rational::from_int(inst.a()[i].clone()))
                .sum();
            let v = acc
                .to_integer()
                .ok_or_else(|| fail(format!("column {j} sum {acc} is not an integer")))?;
            y.push(v);
        }
        let point = inst
            .solution(x, y)
            .map_err(|e| fail(format!("implied point invalid: {e}")))?;
        self.verify(inst, &point)?;
        Ok(point)
    }

    /// Checks every defining constraint against `point`, exactly.
    pub fn verify(&self, inst: &Instance, point: &Solution) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.lambda.n() != inst.n() || self.lambda.m() != inst.m() {
            return fail("lambda dimensions do not match the instance".into());
        }
        if point.x().len() != inst.n() || point.y().len() != inst.m() {
            return fail("point dimensions do not match the instance".into());
        }
        let supp_x = point.support_x();
        let supp_y = point.support_y();
        let mut total = Rational::zero();
        for i in 0..inst.n() {
            for j in 0..inst.m() {
                let v = self.lambda.get(i, j);
                if v.is_negative() {
                    return fail(format!("negative coefficient at ({}, {})", i + 1, j + 1));
                }
                if !v.is_zero() && (!supp_x.contains(&i) || !supp_y.contains(&j)) {
                    return fail(format!("support violated at ({}, {})", i + 1, j + 1));
                }
                total += v;
            }
        }
        if total > Rational::one() {
            return fail(format!("coefficient total {total} exceeds 1"));
        }
        if &Rational::one() - &total != self.slack || self.slack.is_negative() {
            return fail("slack is not 1 minus the coefficient total".into());
        }
        for i in 0..inst.n() {
            let acc: Rational = (0..inst.m())
                .map(|j| self.lambda.get(i, j) * &Rational::from_int(inst.b()[j].clone()))
                .sum();
            if acc != Rational::from_int(point.x()[i].clone()) {
                return fail(format!(
                    "row {} reproduces {}, expected {}",
                    i + 1,
                    acc,
                    point.x()[i]
                ));
            }
        }
        for j in 0..inst.m() {
            let acc: Rational = (0..inst.n())
                .map(|i| self.lambda.get(i, j) * &Rational::from_int(inst.a()[i].clone()))
                .sum();
            if acc != Rational::from_int(point.y()[j].clone()) {
                return fail(format!(
                    "column {} reproduces {}, expected {}",
                    j + 1,
                    acc,
                    point.y()[j]
                ));
            }
        }
        let mut expected: Vec<GeneratorTerm> = self
            .lambda
            .support()
            .into_iter()
            .map(|(i, j)| GeneratorTerm {
                i,
                j,
                coef: self.lambda.get(i, j).clone(),
            })
            .collect();
        expected.sort_by_key(|t| (t.i, t.j));
        let mut listed = self.generators.clone();
        listed.sort_by_key(|t| (t.i, t.j));
        if expected != listed {
            return fail("generator list does not match the nonzero coefficients".into());
        }
        Ok(())
    }
}

impl fmt::Display for ConvexCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .generators
            .iter()
            .map(|t| format!("{} * g({},{})", t.coef, t.i + 1, t.j + 1))
            .collect();
        write!(f, "{} + {} * 0", terms.join(" + "), self.slack)
    }
}

/// Decomposes a minimal solution into a convex combination of generators and
/// the origin: binarize, reduce to the base identity, lift the coefficient
/// tables back, and merge copy positions onto the original (i, j) pairs.
pub fn decompose(inst: &Instance, s: &Solution) -> Result<ConvexCertificate> {
    let rec = run_recursion(inst, s)?;
    let mut lambda = LambdaMatrix::zero(inst.n(), inst.m());
    for (p_idx, row) in rec.tables[0].iter().enumerate() {
        for (q_idx, v) in row.iter().enumerate() {
            if !v.is_zero() {
                let cell =
                    lambda.get_mut(rec.initial.origin_row[p_idx], rec.initial.origin_col[q_idx]);
                *cell += v;
            }
        }
    }
    let cert = ConvexCertificate::from_lambda(inst, lambda)
        .map_err(|e| Error::InvariantViolation(format!("merged certificate failed: {e}")))?;
    cert.verify(inst, s)
        .map_err(|e| Error::InvariantViolation(format!("merged certificate failed: {e}")))?;
    Ok(cert)
}

/// Rewrites a certificate for the same point using at most n+m-1 nonzero
/// generator coefficients.
///
/// All certified points and generators live in the hyperplane `a.x = b.y`,
/// whose dimension is n+m-1, so any larger active set carries a rational
/// linear dependency; shifting along it (oriented so the coefficient total
/// does not increase) zeroes out at least one coefficient while preserving
/// every constraint.
pub fn caratheodory_reduce(inst: &Instance, cert: &ConvexCertificate) -> Result<ConvexCertificate> {
    let point = cert.implied_point(inst)?;
    let bound = inst.n() + inst.m() - 1;
    let mut lambda = cert.lambda().clone();
    loop {
        let active = lambda.support();
        if active.len() <= bound {
            break;
        }
        let columns: Vec<Vec<BigInt>> = active
            .iter()
            .map(|&(i, j)| {
                let g = inst.generator(i, j).expect("support index in range");
                solution_column(g.vector())
            })
            .collect();
        let gamma = simplex::kernel_vector(&columns).ok_or_else(|| {
            Error::InvariantViolation("active generators unexpectedly independent".into())
        })?;
        let gamma_sum: Rational = gamma.iter().sum();
        let gamma: Vec<Rational> = if gamma_sum.is_negative() {
            gamma.iter().map(|g| -g).collect()
        } else {
            gamma
        };
        // theta = min over positive gamma of lambda / gamma; at least one
        // positive entry exists because the sum is nonnegative and gamma != 0.
        let mut theta: Option<Rational> = None;
        for (&(i, j), g) in active.iter().zip(&gamma) {
            if !g.is_negative() && !g.is_zero() {
                let ratio = lambda.get(i, j) / g;
                if theta.as_ref().is_none_or(|t| ratio < *t) {
                    theta = Some(ratio);
                }
            }
        }
        let theta = theta.ok_or_else(|| {
            Error::InvariantViolation("dependency with no positive coefficient".into())
        })?;
        for (&(i, j), g) in active.iter().zip(&gamma) {
            let delta = &theta * g;
            let cell = lambda.get_mut(i, j);
            *cell = &*cell - &delta;
        }
    }
    let reduced = ConvexCertificate::from_lambda(inst, lambda)
        .map_err(|e| Error::InvalidCertificate(format!("reduction broke the certificate: {e}")))?;
    reduced
        .verify(inst, &point)
        .map_err(|e| Error::InvalidCertificate(format!("reduction moved the point: {e}")))?;
    Ok(reduced)
}

/// The outcome of an exact hull-membership query over a vertex set (the
/// origin is always an implicit vertex, hence the `<= 1` total).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Coefficients over the vertex set, in order, with total at most 1.
    Feasible { lambda: Vec<Rational> },
    /// No valid combination exists. When the equality system alone pins the
    /// coefficients uniquely, that forced solution explains the failure.
    Infeasible { forced: Option<ForcedCombination> },
}

impl Membership {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Membership::Feasible { .. })
    }
}

/// The unique solution of the equality subsystem, reported when membership
/// fails: it shows which constraint (negativity or total above 1) failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedCombination {
    pub lambda: Vec<Rational>,
    pub sum: Rational,
}

/// Decides `point in conv(vertex_set U {0})` exactly: nonnegative rational
/// coefficients with total at most 1 reproducing the point, or a proof of
/// infeasibility. No tolerances are involved anywhere.
pub fn membership(
    inst: &Instance,
    point: &Solution,
    vertex_set: &[Solution],
) -> Result<Membership> {
    let dim = inst.n() + inst.m();
    if point.x().len() != inst.n() || point.y().len() != inst.m() {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: point.x().len() + point.y().len(),
        });
    }
    for v in vertex_set {
        if v.x().len() != inst.n() || v.y().len() != inst.m() {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.x().len() + v.y().len(),
            });
        }
    }
    if vertex_set.is_empty() {
        return Ok(if point.is_zero() {
            Membership::Feasible { lambda: Vec::new() }
        } else {
            Membership::Infeasible { forced: None }
        });
    }
    let columns: Vec<Vec<BigInt>> = vertex_set.iter().map(solution_column).collect();
    let target = solution_column(point);
    match simplex::convex_combination(&columns, &target, true) {
        Some(lambda) => Ok(Membership::Feasible { lambda }),
        None => {
            let forced = simplex::unique_equality_solution(&columns, &target).map(|lambda| {
                let sum = lambda.iter().sum();
                ForcedCombination { lambda, sum }
            });
            Ok(Membership::Infeasible { forced })
        }
    }
}

pub(crate) fn solution_column(s: &Solution) -> Vec<BigInt> {
    s.x().iter().chain(s.y()).cloned().collect()
}
