use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlin::{smith_normal_form, IntMatrix};

/// A finitely generated abelian group in invariant-factor normal form.
///
/// Each entry is one cyclic summand: a factor `d > 1` contributes `Z/d`, a
/// factor `0` contributes a copy of `Z`. Canonical form means no factor is
/// `1`, the finite factors form a divisibility chain `d_1 | d_2 | ...`, and
/// zeros trail. The empty list is the zero object, so object equality is
/// literal list equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgGroup {
    factors: Vec<BigInt>,
}

impl FgGroup {
    /// The zero object.
    pub fn zero() -> Self {
        FgGroup {
            factors: Vec::new(),
        }
    }

    /// Builds a group from factors that must already be canonical.
    pub fn from_invariant_factors(factors: &[i64]) -> Result<Self> {
        let big: Vec<BigInt> = factors.iter().map(|&f| BigInt::from(f)).collect();
        if !is_canonical(&big) {
            return Err(Error::InvalidInput(format!(
                "invariant factors {factors:?} are not in canonical form (expected {:?})",
                normalize_object(&big).factors
            )));
        }
        Ok(FgGroup { factors: big })
    }

    /// Canonicalizes an arbitrary factor list; `normalize_object` with `i64`
    /// convenience.
    pub fn normalized(factors: &[i64]) -> Self {
        let big: Vec<BigInt> = factors.iter().map(|&f| BigInt::from(f)).collect();
        normalize_object(&big)
    }

    pub(crate) fn from_canonical_unchecked(factors: Vec<BigInt>) -> Self {
        debug_assert!(is_canonical(&factors), "non-canonical factors {factors:?}");
        FgGroup { factors }
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Number of cyclic summands (generators in the canonical presentation).
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|f| !f.is_zero())
    }

    /// Group order; `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.factors.iter().product())
    }
}

impl std::fmt::Debug for FgGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

fn is_canonical(factors: &[BigInt]) -> bool {
    use num_traits::Signed;
    let mut seen_zero = false;
    let mut prev: Option<&BigInt> = None;
    for f in factors {
        if f.is_negative() || f.is_one() {
            return false;
        }
        if f.is_zero() {
            seen_zero = true;
            continue;
        }
        if seen_zero {
            return false; // finite factor after a Z summand
        }
        if let Some(p) = prev {
            if !(f % p).is_zero() {
                return false;
            }
        }
        prev = Some(f);
    }
    true
}

/// Canonical form of the direct sum of `Z/n` over the input (with `0 = Z`):
/// the Smith normal form of the diagonal relation matrix, unit factors
/// dropped.
pub fn normalize_object(factors: &[BigInt]) -> FgGroup {
    let snf = smith_normal_form(&IntMatrix::diagonal(factors));
    let n = factors.len();
    let canonical: Vec<BigInt> = (0..n)
        .map(|k| snf.d[(k, k)].clone())
        .filter(|d| !d.is_one())
        .collect();
    FgGroup::from_canonical_unchecked(canonical)
}
