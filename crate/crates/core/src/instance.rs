//! Domain vocabulary: equation instances, solutions, generators, and the
//! coefficient matrices that certify convex combinations.
//!
//! An [`Instance`] fixes two vectors of positive integers `a` (length n) and
//! `b` (length m) and stands for the equation
//!
//! ```text
//! x_1 a_1 + ... + x_n a_n  =  y_1 b_1 + ... + y_m b_m
//! ```
//!
//! over nonnegative integers. A [`Solution`] is a validated pair (x, y).
//! Everything is immutable after construction and safe to share across
//! threads.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Side};
use crate::jsonnum;
use crate::rational::Rational;

/// The coefficient vectors of a single linear Diophantine equation.
///
/// Invariants: both sides are nonempty and every entry is >= 1.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawInstance", into = "RawInstance")]
pub struct Instance {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    #[serde(with = "jsonnum::vec")]
    a: Vec<BigInt>,
    #[serde(with = "jsonnum::vec")]
    b: Vec<BigInt>,
}

impl TryFrom<RawInstance> for Instance {
    type Error = Error;
    fn try_from(raw: RawInstance) -> Result<Self> {
        Instance::new(raw.a, raw.b)
    }
}

impl From<Instance> for RawInstance {
    fn from(inst: Instance) -> Self {
        RawInstance {
            a: inst.a,
            b: inst.b,
        }
    }
}

impl Instance {
    /// Validates and builds an instance. Every entry must be >= 1 and both
    /// sides nonempty.
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptySide { side: Side::A });
        }
        if b.is_empty() {
            return Err(Error::EmptySide { side: Side::B });
        }
        for (index, v) in a.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositiveCoefficient {
                    side: Side::A,
                    index,
                });
            }
        }
        for (index, v) in b.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositiveCoefficient {
                    side: Side::B,
                    index,
                });
            }
        }
        Ok(Instance { a, b })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(a: &[i64], b: &[i64]) -> Result<Self> {
        Instance::new(
            a.iter().map(|&v| BigInt::from(v)).collect(),
            b.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// True iff `a.x = b.y`. Entries must be nonnegative and lengths must
    /// match the instance.
    pub fn is_solution(&self, x: &[BigInt], y: &[BigInt]) -> Result<bool> {
        self.check_dims(x, y)?;
        Ok(dot(&self.a, x) == dot(&self.b, y))
    }

    /// Validates (x, y) as a solution and takes ownership of it.
    pub fn solution(&self, x: Vec<BigInt>, y: Vec<BigInt>) -> Result<Solution> {
        if !self.is_solution(&x, &y)? {
            return Err(Error::NotASolution);
        }
        Ok(Solution { x, y })
    }

    pub fn solution_from_ints(&self, x: &[i64], y: &[i64]) -> Result<Solution> {
        self.solution(
            x.iter().map(|&v| BigInt::from(v)).collect(),
            y.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    /// The zero solution in this instance's dimensions.
    pub fn zero_solution(&self) -> Solution {
        Solution {
            x: vec![BigInt::zero(); self.n()],
            y: vec![BigInt::zero(); self.m()],
        }
    }

    /// The generator g(i, j): x_i = b_j, y_j = a_i, all other coordinates 0.
    /// Indices are 0-based here; user-facing I/O adds 1.
    pub fn generator(&self, i: usize, j: usize) -> Result<Generator> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n(),
            });
        }
        if j >= self.m() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.m(),
            });
        }
        let mut x = vec![BigInt::zero(); self.n()];
        let mut y = vec![BigInt::zero(); self.m()];
        x[i] = self.b[j].clone();
        y[j] = self.a[i].clone();
        let d = self.a[i].gcd(&self.b[j]);
        Ok(Generator {
            i,
            j,
            vector: Solution { x, y },
            d,
        })
    }

    /// All n*m generators in row-major (i, j) order.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.n() * self.m());
        for i in 0..self.n() {
            for j in 0..self.m() {
                out.push(self.generator(i, j).expect("indices in range"));
            }
        }
        out
    }

    fn check_dims(&self, x: &[BigInt], y: &[BigInt]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: x.len(),
            });
        }
        if y.len() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: y.len(),
            });
        }
        for (index, v) in x.iter().enumerate() {
            if v.is_negative() {
                return Err(Error::NegativeEntry {
                    side: Side::X,
                    index,
                });
            }
        }
        for (index, v) in y.iter().enumerate() {
            if v.is_negative() {
                return Err(Error::NegativeEntry {
                    side: Side::Y,
                    index,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Instance {{ a: {:?}, b: {:?} }}", self.a, self.b)
    }
}

pub(crate) fn dot(coeffs: &[BigInt], values: &[BigInt]) -> BigInt {
    coeffs.iter().zip(values).map(|(c, v)| c * v).sum()
}

/// A validated nonnegative integer solution pair (x, y) with `a.x = b.y`.
///
/// Value-semantic and immutable. The natural order is lexicographic on the
/// concatenation of x and y, which is the canonical output order everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawSolution", into = "RawSolution")]
pub struct Solution {
    x: Vec<BigInt>,
    y: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawSolution {
    #[serde(with = "jsonnum::vec")]
    x: Vec<BigInt>,
    #[serde(with = "jsonnum::vec")]
    y: Vec<BigInt>,
}

// Deserialization of a bare Solution cannot re-check the equation (that needs
// the instance), so callers that read untrusted pairs revalidate with
// `Instance::solution`. The CLI boundary does exactly that.
impl From<RawSolution> for Solution {
    fn from(raw: RawSolution) -> Self {
        Solution { x: raw.x, y: raw.y }
    }
}

impl From<Solution> for RawSolution {
    fn from(s: Solution) -> Self {
        RawSolution { x: s.x, y: s.y }
    }
}

impl Solution {
    pub fn x(&self) -> &[BigInt] {
        &self.x
    }

    pub fn y(&self) -> &[BigInt] {
        &self.y
    }

    /// Builds a pair without checking it against an instance. Internal
    /// callers use this only where the equation holds by construction.
    pub(crate) fn from_parts_unchecked(x: Vec<BigInt>, y: Vec<BigInt>) -> Self {
        Solution { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(Zero::is_zero) && self.y.iter().all(Zero::is_zero)
    }

    /// Indices i with x_i > 0.
    pub fn support_x(&self) -> Vec<usize> {
        support(&self.x)
    }

    /// Indices j with y_j > 0.
    pub fn support_y(&self) -> Vec<usize> {
        support(&self.y)
    }

    /// ||x||_1
    pub fn norm_x(&self) -> BigInt {
        self.x.iter().sum()
    }

    /// ||y||_1
    pub fn norm_y(&self) -> BigInt {
        self.y.iter().sum()
    }

    /// True iff `sub <= self` componentwise and `sub != self`. In the
    /// partition-identity view, `sub` is a proper sub-identity of `self`; a
    /// nonzero solution with a nonzero proper sub-solution is not minimal.
    pub fn properly_contains(&self, sub: &Solution) -> bool {
        debug_assert_eq!(self.x.len(), sub.x.len());
        debug_assert_eq!(self.y.len(), sub.y.len());
        let mut strict = false;
        for (small, large) in sub.x.iter().zip(&self.x).chain(sub.y.iter().zip(&self.y)) {
            match small.cmp(large) {
                Ordering::Greater => return false,
                Ordering::Less => strict = true,
                Ordering::Equal => {}
            }
        }
        strict
    }

    /// Componentwise sum; the sum of two solutions of the same instance is
    /// again a solution.
    pub fn checked_add(&self, other: &Solution) -> Solution {
        Solution {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    /// Scalar multiple k * self.
    pub fn scale(&self, k: &BigInt) -> Solution {
        Solution {
            x: self.x.iter().map(|v| v * k).collect(),
            y: self.y.iter().map(|v| v * k).collect(),
        }
    }

    /// True iff `self = r * other` for some nonnegative integer r.
    pub fn is_integer_multiple_of(&self, other: &Solution) -> bool {
        if self.is_zero() {
            return true;
        }
        if other.is_zero() {
            return false;
        }
        let (num, den) = other
            .x
            .iter()
            .chain(&other.y)
            .zip(self.x.iter().chain(&self.y))
            .find(|(o, _)| !o.is_zero())
            .map(|(o, s)| (s.clone(), o.clone()))
            .expect("nonzero pair has a nonzero coordinate");
        if !(&num % &den).is_zero() {
            return false;
        }
        let r = num / den;
        *self == other.scale(&r)
    }
}

fn support(values: &[BigInt]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_positive())
        .map(|(i, _)| i)
        .collect()
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "(({}),({}))", join(&self.x), join(&self.y))
    }
}

/// The generator g(i, j) together with d = gcd(a_i, b_j).
///
/// The generator itself is a minimal solution iff d = 1; dividing by d always
/// yields a minimal solution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    i: usize,
    j: usize,
    vector: Solution,
    d: BigInt,
}

impl Generator {
    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn vector(&self) -> &Solution {
        &self.vector
    }

    pub fn into_vector(self) -> Solution {
        self.vector
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_minimal(&self) -> bool {
        self.d.is_one()
    }

    /// The scaled generator (1/d) * g(i, j), which is always minimal.
    pub fn minimal_vector(&self) -> Solution {
        Solution {
            x: self.vector.x.iter().map(|v| v / &self.d).collect(),
            y: self.vector.y.iter().map(|v| v / &self.d).collect(),
        }
    }
}

/// An n x m matrix of nonnegative rational coefficients over the generators.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaMatrix {
    entries: Vec<Vec<Rational>>,
}

impl LambdaMatrix {
    pub fn zero(n: usize, m: usize) -> Self {
        LambdaMatrix {
            entries: vec![vec![Rational::zero(); m]; n],
        }
    }

    pub fn from_rows(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let m = entries.first().map(Vec::len).unwrap_or(0);
        if entries.is_empty() || m == 0 {
            return Err(Error::InvalidCertificate("empty lambda matrix".into()));
        }
        if entries.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidCertificate("ragged lambda matrix".into()));
        }
        Ok(LambdaMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn m(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().flatten().sum()
    }

    /// Pairs (i, j) with a nonzero entry, in row-major order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
