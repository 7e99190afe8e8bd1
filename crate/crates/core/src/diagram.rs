//! The bijection between naturals and Ferrers diagrams, and the subfigure order.
//!
//! A row of length `a` stands for one factor `p_a`, so `n = p_1 p_3 = 10` is
//! the diagram with rows `[3, 1]`. Rows are stored nonincreasing, which makes
//! figure equality (same row lengths with the same multiplicities) plain
//! structural equality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{self, Factorization};

/// A Ferrers diagram in canonical form: row lengths, nonincreasing, all `>= 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<u64>,
}

impl Partition {
    /// The empty diagram, `F(1)`.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Accepts rows already in canonical order.
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(
                "row lengths must be at least 1".into(),
            ));
        }
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition("rows must be nonincreasing".into()));
        }
        Ok(Partition { rows })
    }

    /// Sorts rows into canonical order; only zero-length rows are rejected.
    pub fn from_unsorted(mut rows: Vec<u64>) -> Result<Self> {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(rows)
    }

    /// A `height x width` rectangle. Either dimension zero gives the empty diagram.
    pub fn rectangle(height: u64, width: u64) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        let height = usize::try_from(height).expect("rectangle height exceeds address space");
        Partition {
            rows: vec![width; height],
        }
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of squares.
    pub fn size(&self) -> u64 {
        self.rows.iter().sum()
    }

    /// Number of rows.
    pub fn height(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Length of the longest row.
    pub fn width(&self) -> u64 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// `self` fits inside `other` with bottom-left corners aligned.
    pub fn is_subfigure_of(&self, other: &Partition) -> bool {
        self.rows.len() <= other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(f, g)| f <= g)
    }

    /// Collapses runs of equal rows into `(alpha, beta)` terms, alpha ascending.
    pub fn factorization(&self) -> Factorization {
        let mut terms: Vec<(u64, u32)> = Vec::new();
        for &r in self.rows.iter().rev() {
            match terms.last_mut() {
                Some((alpha, beta)) if *alpha == r => *beta += 1,
                _ => terms.push((r, 1)),
            }
        }
        Factorization::new(terms).expect("canonical rows give a valid factorization")
    }

    /// Canonical JSON form, `{"n": ..., "rows": [...]}`, with `n` null on overflow.
    pub fn to_json_value(&self) -> DiagramJson {
        DiagramJson {
            n: from_diagram(self).ok(),
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<u64>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<&Factorization> for Partition {
    fn from(f: &Factorization) -> Self {
        let mut rows = Vec::with_capacity(f.total_multiplicity() as usize);
        for &(alpha, beta) in f.terms().iter().rev() {
            rows.extend(std::iter::repeat_n(alpha, beta as usize));
        }
        Partition { rows }
    }
}

/// Wire form of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: Option<u128>,
    pub rows: Vec<u64>,
}

impl TryFrom<DiagramJson> for Partition {
    type Error = Error;

    /// Rows must be canonical; a non-null `n` must agree with them.
    fn try_from(value: DiagramJson) -> Result<Self> {
        let d = Partition::new(value.rows)?;
        if let Some(n) = value.n {
            let actual = from_diagram(&d)?;
            if actual != n {
                return Err(Error::InvalidPartition(format!(
                    "n = {n} does not match rows (which give {actual})"
                )));
            }
        }
        Ok(d)
    }
}

/// `F(n)`: `beta` rows of length `alpha` for each `p_alpha^beta` dividing `n`.
pub fn to_diagram(n: u64) -> Result<Partition> {
    Ok(Partition::from(&primes::factorize(n)?))
}

/// `F^-1(d)`: the product of `p_r` over the rows `r`.
pub fn from_diagram(d: &Partition) -> Result<u128> {
    d.rows.iter().try_fold(1u128, |acc, &r| {
        acc.checked_mul(u128::from(primes::nth_prime(r)))
            .ok_or(Error::Overflow)
    })
}

pub fn is_subfigure(f: &Partition, g: &Partition) -> bool {
    f.is_subfigure_of(g)
}

pub fn height(d: &Partition) -> u64 {
    d.height()
}

pub fn width(d: &Partition) -> u64 {
    d.width()
}
