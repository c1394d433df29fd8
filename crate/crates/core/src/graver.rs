//! Single-row Graver bases via orthant decomposition.
//!
//! For a row vector `alpha`, the Graver basis consists of the nonzero integer
//! kernel vectors that are minimal under componentwise absolute-value
//! dominance within their orthant. Splitting by sign pattern reduces each
//! orthant to a nonnegative instance `a.x = b.y`: coefficients with
//! `tau_i * alpha_i > 0` form the a-side, the negative ones the b-side, and
//! the orthant's Hilbert basis maps back through the signs. Orientations are
//! processed in +/- pairs since the basis is closed under negation.
//!
//! Coordinates with `alpha_i = 0` are not covered by the sign-split
//! equations; they contribute the unit vectors `+/- e_i` directly and are
//! reported as flagged coordinates.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::decompose::decompose;
use crate::error::{Error, Result, Side};
use crate::hilbert::{hilbert_basis_with, SearchBox, DEFAULT_NODE_BUDGET};
use crate::instance::{Instance, Solution};
use crate::rational::Rational;

/// An integer vector in the alpha-coordinate space.
pub type SignedVector = Vec<BigInt>;

pub fn negated(v: &SignedVector) -> SignedVector {
    v.iter().map(|e| -e).collect()
}

/// True iff `u` and `v` lie in a common closed orthant (no coordinate has
/// strictly opposite signs).
pub fn same_orthant(u: &[BigInt], v: &[BigInt]) -> bool {
    u.iter()
        .zip(v)
        .all(|(a, b)| (a.sign() * b.sign()) != num_bigint::Sign::Minus)
}

/// The componentwise dominance order within a common orthant: `sub` below
/// `sup` in every |coordinate|, and not equal.
pub fn dominates(sup: &[BigInt], sub: &[BigInt]) -> bool {
    same_orthant(sup, sub) && sub.iter().zip(sup).all(|(s, l)| s.abs() <= l.abs()) && sub != sup
}

/// A sign pattern over the k coordinates; entries are +1 or -1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation(Vec<i8>);

impl Orientation {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptySide { side: Side::A });
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvariantViolation(
                "orientation entries must be +1 or -1".into(),
            ));
        }
        Ok(Orientation(signs))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Orientation {
        Orientation(self.0.iter().map(|s| -s).collect())
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .split(',')
            .map(|p| match p.trim() {
                "+" | "+1" | "1" => Ok(1),
                "-" | "-1" => Ok(-1),
                other => Err(Error::InvariantViolation(format!(
                    "bad orientation entry {other:?}"
                ))),
            })
            .collect::<Result<_>>()?;
        Orientation::new(signs)
    }
}

/// The nonnegative instance an orthant reduces to, with the position maps
/// back into the k coordinates.
#[derive(Clone, Debug)]
pub struct OrthantInstance {
    orientation: Orientation,
    instance: Instance,
    a_positions: Vec<usize>,
    b_positions: Vec<usize>,
    equation: String,
}

impl OrthantInstance {
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn a_positions(&self) -> &[usize] {
        &self.a_positions
    }

    pub fn b_positions(&self) -> &[usize] {
        &self.b_positions
    }

    /// `z1 + 2*z2 = 3*z3` style rendering over nonnegative variables.
    pub fn equation(&self) -> &str {
        &self.equation
    }

    /// Maps an instance solution back to the signed k-coordinate vector.
    pub fn signed_vector(&self, s: &Solution) -> SignedVector {
        let mut v = vec![BigInt::zero(); self.orientation.len()];
        for (idx, &pos) in self.a_positions.iter().enumerate() {
            v[pos] = BigInt::from(self.orientation.signs()[pos]) * &s.x()[idx];
        }
        for (idx, &pos) in self.b_positions.iter().enumerate() {
            v[pos] = BigInt::from(self.orientation.signs()[pos]) * &s.y()[idx];
        }
        v
    }
}

/// Result of splitting `alpha . v = 0` along an orthant.
#[derive(Clone, Debug)]
pub enum OrthantSplit {
    Proper(OrthantInstance),
    /// Every active coefficient landed on one side: only the zero solution
    /// exists in this orthant.
    Degenerate {
        orientation: Orientation,
        equation: String,
    },
}

impl OrthantSplit {
    pub fn equation(&self) -> &str {
        match self {
            OrthantSplit::Proper(oi) => oi.equation(),
            OrthantSplit::Degenerate { equation, .. } => equation,
        }
    }
}

fn equation_string(terms_a: &[(usize, BigInt)], terms_b: &[(usize, BigInt)]) -> String {
    let side = |terms: &[(usize, BigInt)]| {
        if terms.is_empty() {
            return "0".to_string();
        }
        terms
            .iter()
            .map(|(pos, c)| {
                if c == &BigInt::from(1) {
                    format!("z{}", pos + 1)
                } else {
                    format!("{}*z{}", c, pos + 1)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    format!("{} = {}", side(terms_a), side(terms_b))
}

/// Splits the kernel equation along the orthant `tau`: coefficients with
/// `tau_i * alpha_i > 0` go to the a-side, negative ones to the b-side
/// (absolute values), zero coefficients are excluded.
pub fn orthant_instance(alpha: &[BigInt], tau: &Orientation) -> Result<OrthantSplit> {
    if alpha.is_empty() {
        return Err(Error::EmptySide { side: Side::A });
    }
    if tau.len() != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: tau.len(),
        });
    }
    let mut terms_a = Vec::new();
    let mut terms_b = Vec::new();
    for (pos, (coeff, &sign)) in alpha.iter().zip(tau.signs()).enumerate() {
        let signed = BigInt::from(sign) * coeff;
        if signed.is_positive() {
            terms_a.push((pos, signed));
        } else if signed.is_negative() {
            terms_b.push((pos, -signed));
        }
    }
    let equation = equation_string(&terms_a, &terms_b);
    if terms_a.is_empty() || terms_b.is_empty() {
        return Ok(OrthantSplit::Degenerate {
            orientation: tau.clone(),
            equation,
        });
    }
    let (a_positions, a): (Vec<usize>, Vec<BigInt>) = terms_a.into_iter().unzip();
    let (b_positions, b): (Vec<usize>, Vec<BigInt>) = terms_b.into_iter().unzip();
    let instance = Instance::new(a, b).expect("positive nonempty sides");
    Ok(OrthantSplit::Proper(OrthantInstance {
        orientation: tau.clone(),
        instance,
        a_positions,
        b_positions,
        equation,
    }))
}

/// The canonical half of the orientations: zero coordinates pinned to `+`
/// and the first nonzero coordinate pinned to `+`; each listed `tau` stands
/// for the pair `{tau, -tau}`. Order flips the last free coordinate fastest.
pub fn canonical_orientations(alpha: &[BigInt]) -> Vec<Orientation> {
    let nonzero: Vec<usize> = alpha
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let free = &nonzero[1..];
    let count: u64 = 1 << free.len();
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0..count {
        let mut signs = vec![1i8; alpha.len()];
        for (bit, &pos) in free.iter().enumerate() {
            if mask >> (free.len() - 1 - bit) & 1 == 1 {
                signs[pos] = -1;
            }
        }
        out.push(Orientation(signs));
    }
    out
}

fn zero_coordinates(alpha: &[BigInt]) -> Vec<usize> {
    alpha
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn unit_vector(k: usize, pos: usize) -> SignedVector {
    let mut v = vec![BigInt::zero(); k];
    v[pos] = BigInt::from(1);
    v
}

fn check_orientation_budget(alpha: &[BigInt], hard_cap: u64) -> Result<()> {
    let nonzero = alpha.iter().filter(|v| !v.is_zero()).count();
    if nonzero >= 64 || (nonzero > 0 && 1u64 << (nonzero - 1) > hard_cap) {
        return Err(Error::SearchBudgetExceeded { limit: hard_cap });
    }
    Ok(())
}

/// The Graver basis of the single row `alpha`, with flagged zero
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraverBasis {
    /// Canonically sorted, closed under negation, zero excluded.
    pub elements: Vec<SignedVector>,
    /// Coordinates with `alpha_i = 0`, covered by `+/- e_i` directly.
    pub zero_coordinates: Vec<usize>,
}

pub fn graver_basis(alpha: &[BigInt]) -> Result<GraverBasis> {
    graver_basis_with(alpha, DEFAULT_NODE_BUDGET)
}

pub fn graver_basis_with(alpha: &[BigInt], hard_cap: u64) -> Result<GraverBasis> {
    if alpha.is_empty() {
        return Err(Error::EmptySide { side: Side::A });
    }
    check_orientation_budget(alpha, hard_cap)?;
    let mut elements: BTreeSet<SignedVector> = BTreeSet::new();
    let zero_coordinates = zero_coordinates(alpha);
    for &pos in &zero_coordinates {
        let e = unit_vector(alpha.len(), pos);
        elements.insert(negated(&e));
        elements.insert(e);
    }
    for tau in canonical_orientations(alpha) {
        let OrthantSplit::Proper(oi) = orthant_instance(alpha, &tau)? else {
            continue;
        };
        let search = SearchBox::lambert(oi.instance()).with_hard_cap(hard_cap);
        for h in hilbert_basis_with(oi.instance(), &search)? {
            let v = oi.signed_vector(&h);
            elements.insert(negated(&v));
            elements.insert(v);
        }
    }
    Ok(GraverBasis {
        elements: elements.into_iter().collect(),
        zero_coordinates,
    })
}

/// The generator sets `F^(tau)` per canonical orientation, and their union
/// over all orientations (negations included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSets {
    pub by_orientation: Vec<(Orientation, Vec<SignedVector>)>,
    pub union: Vec<SignedVector>,
    pub zero_coordinates: Vec<usize>,
}

/// `F^(tau) = {0} u { tau_i |alpha_j| e_i + tau_j |alpha_i| e_j }` over the
/// pairs with `(tau_i alpha_i)(tau_j alpha_j) < 0`.
pub fn f_set(alpha: &[BigInt], tau: &Orientation) -> Result<Vec<SignedVector>> {
    if tau.len() != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: tau.len(),
        });
    }
    let k = alpha.len();
    let mut out: BTreeSet<SignedVector> = BTreeSet::new();
    out.insert(vec![BigInt::zero(); k]);
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let si = BigInt::from(tau.signs()[i]) * &alpha[i];
            let sj = BigInt::from(tau.signs()[j]) * &alpha[j];
            if si.is_positive() && sj.is_negative() {
                let mut v = vec![BigInt::zero(); k];
                v[i] = BigInt::from(tau.signs()[i]) * alpha[j].abs();
                v[j] = BigInt::from(tau.signs()[j]) * alpha[i].abs();
                out.insert(v);
            }
        }
    }
    Ok(out.into_iter().collect())
}

pub fn f_sets(alpha: &[BigInt]) -> Result<FSets> {
    if alpha.is_empty() {
        return Err(Error::EmptySide { side: Side::A });
    }
    check_orientation_budget(alpha, DEFAULT_NODE_BUDGET)?;
    let mut by_orientation = Vec::new();
    let mut union: BTreeSet<SignedVector> = BTreeSet::new();
    union.insert(vec![BigInt::zero(); alpha.len()]);
    for tau in canonical_orientations(alpha) {
        let set = f_set(alpha, &tau)?;
        for v in &set {
            union.insert(negated(v));
            union.insert(v.clone());
        }
        by_orientation.push((tau, set));
    }
    Ok(FSets {
        by_orientation,
        union: union.into_iter().collect(),
        zero_coordinates: zero_coordinates(alpha),
    })
}

/// A convex-combination certificate for one Graver element over its
/// orthant's generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub element: SignedVector,
    pub orientation: Orientation,
    /// Generator vectors (mapped back to signed coordinates) with their
    /// nonzero coefficients.
    pub terms: Vec<(SignedVector, Rational)>,
    pub lambda_sum: Rational,
}

impl Containment {
    /// Re-checks the certificate: coefficients nonnegative, total at most 1,
    /// and the weighted sum reproducing the element exactly.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        let mut sum = Rational::zero();
        let k = self.element.len();
        let mut acc = vec![Rational::zero(); k];
        for (vector, coef) in &self.terms {
            if coef.is_negative() {
                return fail("negative coefficient".into());
            }
            if vector.len() != k {
                return fail("term dimension mismatch".into());
            }
            for (cell, v) in acc.iter_mut().zip(vector) {
                *cell += &(coef * &Rational::from_int(v.clone()));
            }
            sum += coef;
        }
        if sum != self.lambda_sum {
            return fail("recorded coefficient total is wrong".into());
        }
        if sum > Rational::one() {
            return fail("coefficient total exceeds 1".into());
        }
        for (cell, v) in acc.iter().zip(&self.element) {
            if cell != &Rational::from_int(v.clone()) {
                return fail("combination does not reproduce the element".into());
            }
        }
        Ok(())
    }
}

/// Containment certificates for a whole Graver basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    /// One certificate per Graver element, sorted by element.
    pub certificates: Vec<Containment>,
    /// Unit vectors at zero coordinates: no generator pair covers them, so
    /// they are flagged instead of certified.
    pub flagged: Vec<SignedVector>,
}

pub fn verify_containment(alpha: &[BigInt]) -> Result<ContainmentReport> {
    verify_containment_with(alpha, DEFAULT_NODE_BUDGET)
}

/// Certifies every Graver element as a convex combination over its orthant's
/// generator set, by decomposing the corresponding minimal solution of the
/// orthant instance and mapping the generators back through the signs.
pub fn verify_containment_with(alpha: &[BigInt], hard_cap: u64) -> Result<ContainmentReport> {
    if alpha.is_empty() {
        return Err(Error::EmptySide { side: Side::A });
    }
    check_orientation_budget(alpha, hard_cap)?;
    let mut seen: BTreeSet<SignedVector> = BTreeSet::new();
    let mut certificates = Vec::new();
    for tau in canonical_orientations(alpha) {
        let OrthantSplit::Proper(oi) = orthant_instance(alpha, &tau)? else {
            continue;
        };
        let search = SearchBox::lambert(oi.instance()).with_hard_cap(hard_cap);
        for h in hilbert_basis_with(oi.instance(), &search)? {
            let element = oi.signed_vector(&h);
            if seen.contains(&element) {
                continue;
            }
            let cert = decompose(oi.instance(), &h)?;
            let terms: Vec<(SignedVector, Rational)> = cert
                .generators()
                .iter()
                .map(|t| {
                    let g = oi.instance().generator(t.i, t.j).expect("index in range");
                    (oi.signed_vector(g.vector()), t.coef.clone())
                })
                .collect();
            let lambda_sum: Rational = terms.iter().map(|(_, c)| c).sum();
            let mirrored = Containment {
                element: negated(&element),
                orientation: tau.negated(),
                terms: terms.iter().map(|(v, c)| (negated(v), c.clone())).collect(),
                lambda_sum: lambda_sum.clone(),
            };
            seen.insert(element.clone());
            seen.insert(mirrored.element.clone());
            certificates.push(Containment {
                element,
                orientation: tau.clone(),
                terms,
                lambda_sum,
            });
            certificates.push(mirrored);
        }
    }
    certificates.sort_by(|a, b| a.element.cmp(&b.element));
    let flagged = zero_coordinates(alpha)
        .into_iter()
        .flat_map(|pos| {
            let e = unit_vector(alpha.len(), pos);
            [negated(&e), e]
        })
        .collect();
    Ok(ContainmentReport {
        certificates,
        flagged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn tau(s: &str) -> Orientation {
        s.parse().unwrap()
    }

    #[test]
    fn orthant_splits_match_sign_pattern() {
        let alpha = ints(&[1, 2, -3]);
        match orthant_instance(&alpha, &tau("+,+,+")).unwrap() {
            OrthantSplit::Proper(oi) => {
                assert_eq!(oi.instance().a(), &ints(&[1, 2])[..]);
                assert_eq!(oi.instance().b(), &ints(&[3])[..]);
                assert_eq!(oi.a_positions(), &[0, 1]);
                assert_eq!(oi.b_positions(), &[2]);
                assert_eq!(oi.equation(), "z1 + 2*z2 = 3*z3");
            }
            other => panic!("expected proper split, got {other:?}"),
        }
        match orthant_instance(&alpha, &tau("+,+,-")).unwrap() {
            OrthantSplit::Degenerate { equation, .. } => {
                assert_eq!(equation, "z1 + 2*z2 + 3*z3 = 0");
            }
            other => panic!("expected degenerate split, got {other:?}"),
        }
        match orthant_instance(&alpha, &tau("+,-,+")).unwrap() {
            OrthantSplit::Proper(oi) => {
                assert_eq!(oi.equation(), "z1 = 2*z2 + 3*z3");
            }
            other => panic!("expected proper split, got {other:?}"),
        }
    }

    #[test]
    fn signed_vector_round_trip() {
        let alpha = ints(&[1, 2, -3]);
        let OrthantSplit::Proper(oi) = orthant_instance(&alpha, &tau("+,-,-")).unwrap() else {
            panic!("proper");
        };
        // z1 + 3*z3 = 2*z2, solution (1, 2, 1) maps to (1, -2, -1).
        let s = oi.instance().solution_from_ints(&[1, 1], &[2]).unwrap();
        let v = oi.signed_vector(&s);
        assert_eq!(v, ints(&[1, -2, -1]));
        let dot: BigInt = alpha.iter().zip(&v).map(|(a, b)| a * b).sum();
        assert!(dot.is_zero());
    }

    #[test]
    fn canonical_orientation_order() {
        let alpha = ints(&[1, 2, -3]);
        let names: Vec<String> = canonical_orientations(&alpha)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(names, vec!["+,+,+", "+,+,-", "+,-,+", "+,-,-"]);
    }

    #[test]
    fn f_sets_example() {
        let alpha = ints(&[1, 2, -3]);
        let sets = f_sets(&alpha).unwrap();
        let get = |name: &str| -> &Vec<SignedVector> {
            &sets
                .by_orientation
                .iter()
                .find(|(t, _)| t.to_string() == name)
                .unwrap()
                .1
        };
        let zero = ints(&[0, 0, 0]);
        let mut expect = vec![zero.clone(), ints(&[3, 0, 1]), ints(&[0, 3, 2])];
        expect.sort();
        assert_eq!(get("+,+,+"), &expect);
        assert_eq!(get("+,+,-"), &vec![zero.clone()]);
        let mut expect = vec![zero.clone(), ints(&[2, -1, 0]), ints(&[3, 0, 1])];
        expect.sort();
        assert_eq!(get("+,-,+"), &expect);

        let mut union = vec![
            zero,
            ints(&[3, 0, 1]),
            ints(&[-3, 0, -1]),
            ints(&[0, 3, 2]),
            ints(&[0, -3, -2]),
            ints(&[2, -1, 0]),
            ints(&[-2, 1, 0]),
        ];
        union.sort();
        assert_eq!(sets.union, union);
    }

    #[test]
    fn graver_small_cases() {
        let basis = graver_basis(&ints(&[1, -1])).unwrap();
        assert_eq!(basis.elements, vec![ints(&[-1, -1]), ints(&[1, 1])]);

        let basis = graver_basis(&ints(&[2])).unwrap();
        assert!(basis.elements.is_empty());
    }

    #[test]
    fn graver_worked_example() {
        let basis = graver_basis(&ints(&[1, 2, -3])).unwrap();
        let mut expect: Vec<SignedVector> = Vec::new();
        for v in [[1, 1, 1], [3, 0, 1], [0, 3, 2], [2, -1, 0], [1, -2, -1]] {
            expect.push(ints(&v.map(i64::from)));
            expect.push(negated(&ints(&v.map(i64::from))));
        }
        expect.sort();
        assert_eq!(basis.elements, expect);
        assert!(basis.zero_coordinates.is_empty());
    }

    #[test]
    fn negation_closure_and_boundary_dedup() {
        // (2, 0, 1) lies on the boundary of two orthants; it must appear once.
        let basis = graver_basis(&ints(&[1, 1, -2])).unwrap();
        let target = ints(&[2, 0, 1]);
        assert_eq!(basis.elements.iter().filter(|v| **v == target).count(), 1);
        for v in &basis.elements {
            assert!(basis.elements.contains(&negated(v)));
            let dot: BigInt = ints(&[1, 1, -2]).iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn zero_coordinates_are_flagged_units() {
        let basis = graver_basis(&ints(&[0])).unwrap();
        assert_eq!(basis.elements, vec![ints(&[-1]), ints(&[1])]);
        assert_eq!(basis.zero_coordinates, vec![0]);

        let basis = graver_basis(&ints(&[1, 0, -1])).unwrap();
        assert_eq!(basis.zero_coordinates, vec![1]);
        assert!(basis.elements.contains(&ints(&[0, 1, 0])));
        assert!(basis.elements.contains(&ints(&[1, 0, 1])));
        assert_eq!(basis.elements.len(), 4);
    }

    #[test]
    fn budget_guard_covers_orthant_searches() {
        assert_eq!(
            graver_basis_with(&ints(&[97, -89]), 10),
            Err(Error::SearchBudgetExceeded { limit: 10 })
        );
    }

    #[test]
    fn containment_certificates_verify() {
        let alpha = ints(&[1, 2, -3]);
        let report = verify_containment(&alpha).unwrap();
        let basis = graver_basis(&alpha).unwrap();
        assert_eq!(report.certificates.len(), basis.elements.len());
        for cert in &report.certificates {
            cert.verify().unwrap();
        }

        let one_one_one = report
            .certificates
            .iter()
            .find(|c| c.element == ints(&[1, 1, 1]))
            .unwrap();
        let mut terms = one_one_one.terms.clone();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            terms,
            vec![
                (ints(&[0, 3, 2]), Rational::new(1.into(), 3.into())),
                (ints(&[3, 0, 1]), Rational::new(1.into(), 3.into())),
            ]
        );
        assert_eq!(one_one_one.lambda_sum, Rational::new(2.into(), 3.into()));

        let down = report
            .certificates
            .iter()
            .find(|c| c.element == ints(&[1, -2, -1]))
            .unwrap();
        let mut terms = down.terms.clone();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(
            terms,
            vec![
                (ints(&[0, -3, -2]), Rational::new(1.into(), 2.into())),
                (ints(&[2, -1, 0]), Rational::new(1.into(), 2.into())),
            ]
        );
        assert_eq!(down.lambda_sum, Rational::one());
    }
}
