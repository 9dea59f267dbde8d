//! The kei family `X_E` and the counting behind the lower bound.
//!
//! For `n` points let `k = ⌊n/2⌋` and `τ_i = (2i−1 2i)`. A `k × k` 0/1
//! matrix `E` with zero diagonal gives `π_i = τ_1^{e_{1i}} ⋯ τ_k^{e_{ki}}`
//! (column `i` of `E`) on the orbit `{2i−1, 2i}`, plus `π = 1` on the fixed
//! point `n` when `n` is odd. Distinct matrices give distinct tables.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::construction::{build_rack, RackBlueprint};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::par::{self, Parallelism};
use crate::perm::Permutation;
use crate::table::{RackTable, Tokens};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EMatrix {
    k: usize,
    entries: Vec<bool>,
}

impl EMatrix {
    pub fn new(rows: &[Vec<u8>]) -> Result<Self> {
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::EMatrix(format!("row {} has {} entries, expected {k}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => entries.push(false),
                    1 if i == j => {
                        return Err(Error::EMatrix(format!("diagonal entry e_{{{0}{0}}} must be 0", i + 1)))
                    }
                    1 => entries.push(true),
                    _ => return Err(Error::EMatrix(format!("entry {v} is not 0 or 1"))),
                }
            }
        }
        Ok(EMatrix { k, entries })
    }

    pub fn zero(k: usize) -> Self {
        EMatrix {
            k,
            entries: vec![false; k * k],
        }
    }

    /// Number of free (off-diagonal) entries, `k(k−1)`.
    pub fn free_bits(k: usize) -> usize {
        k * k.saturating_sub(1)
    }

    /// Matrix whose off-diagonal entries, row-major, are the bits of
    /// `index` (least significant first).
    pub fn from_index(k: usize, index: u64) -> Self {
        assert!(Self::free_bits(k) <= 64, "index too narrow for k = {k}");
        let mut entries = vec![false; k * k];
        let mut bit = 0;
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    entries[i * k + j] = (index >> bit) & 1 == 1;
                    bit += 1;
                }
            }
        }
        EMatrix { k, entries }
    }

    /// Every valid matrix of size `k`, in index order.
    pub fn all(k: usize) -> Vec<EMatrix> {
        let bits = Self::free_bits(k);
        assert!(bits < 32, "2^{bits} matrices is too many to list");
        (0..1u64 << bits).map(|i| Self::from_index(k, i)).collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `e_{ij}`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.k + j]
    }

    /// Text format: `k`, then `k` rows of `k` binary digits.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = Tokens::new(text);
        let (_, k) = toks.next_usize("matrix size k")?;
        let mut rows = vec![Vec::with_capacity(k); k];
        for row in rows.iter_mut() {
            for _ in 0..k {
                let (line, v) = toks.next_usize("binary digit")?;
                if v > 1 {
                    return Err(Error::parse(line, format!("entry {v} is not 0 or 1")));
                }
                row.push(v as u8);
            }
        }
        if let Some((line, tok)) = toks.next() {
            return Err(Error::parse(line, format!("unexpected trailing token {tok:?}")));
        }
        Self::new(&rows)
    }
}

impl fmt::Display for EMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.k)?;
        for i in 0..self.k {
            let row: Vec<&str> = (0..self.k)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for EMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EMatrix({})", self.to_string().replace('\n', ";"))
    }
}

/// `τ_i = (2i−1 2i)` for `i = 1..k`, on `n` points.
pub fn transpositions(n: usize) -> Vec<Permutation> {
    (0..n / 2)
        .map(|i| Permutation::from_cycles(n, &[&[2 * i + 1, 2 * i + 2]]).expect("points in range"))
        .collect()
}

/// `⟨τ_1, …, τ_k⟩`, elementary abelian of order `2^k`.
pub fn xe_group(n: usize) -> Result<PermGroup> {
    PermGroup::generate(n, transpositions(n))
}

/// The `π_i`, one per orbit of [`xe_group`].
pub fn xe_pis(n: usize, e: &EMatrix) -> Result<Vec<Permutation>> {
    let k = n / 2;
    if n < 2 {
        return Err(Error::EMatrix(format!("n = {n} is below 2")));
    }
    if e.k() != k {
        return Err(Error::EMatrix(format!("matrix is {0}×{0}, expected {k}×{k} for n = {n}", e.k())));
    }
    let taus = transpositions(n);
    let mut pis: Vec<Permutation> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| e.get(j, i))
                .fold(Permutation::identity(n), |acc, j| acc.then(&taus[j]))
        })
        .collect();
    if n % 2 == 1 {
        pis.push(Permutation::identity(n));
    }
    Ok(pis)
}

pub fn xe_blueprint(n: usize, e: &EMatrix) -> Result<RackBlueprint> {
    RackBlueprint::new(xe_group(n)?, xe_pis(n, e)?)
}

pub fn build_xe(n: usize, e: &EMatrix) -> Result<RackTable> {
    Ok(build_rack(&xe_blueprint(n, e)?))
}

/// True iff the matrices yield pairwise distinct tables.
pub fn xe_distinctness(n: usize, matrices: &[EMatrix], parallelism: Parallelism) -> Result<bool> {
    let group = xe_group(n)?;
    let tables = par::map(parallelism, matrices, |e| -> Result<RackTable> {
        Ok(build_rack(&RackBlueprint::new(group.clone(), xe_pis(n, e)?)?))
    });
    let mut seen = HashSet::with_capacity(tables.len());
    for t in tables {
        if !seen.insert(t?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "as_decimal")]
    pub matrix_count: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub factorial: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub guaranteed_classes: BigUint,
    pub log2_bound: f64,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `log2(n!)` as a float, summed termwise.
fn log2_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).log2()).sum()
}

pub fn lower_bound_report(n: usize) -> LowerBoundReport {
    let k = n / 2;
    let bits = EMatrix::free_bits(k);
    let matrix_count = BigUint::one() << bits;
    let fact = factorial(n);
    let (q, r) = (&matrix_count / &fact, &matrix_count % &fact);
    let ceil = if r.is_zero() { q } else { q + 1u32 };
    let guaranteed_classes = ceil.max(BigUint::one());
    LowerBoundReport {
        n,
        k,
        matrix_count,
        factorial: fact,
        guaranteed_classes,
        log2_bound: bits as f64 - log2_factorial(n),
    }
}

impl fmt::Display for LowerBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, k = {}", self.n, self.k)?;
        writeln!(f, "matrices E: 2^{} = {}", EMatrix::free_bits(self.k), self.matrix_count)?;
        writeln!(f, "n! = {}", self.factorial)?;
        writeln!(f, "guaranteed kei classes >= {}", self.guaranteed_classes)?;
        write!(f, "log2 bound (k(k-1) - log2 n!) = {:.4}", self.log2_bound)
    }
}

impl LowerBoundReport {
    /// Guaranteed class count as a float, for display next to observed counts.
    pub fn guaranteed_f64(&self) -> f64 {
        self.guaranteed_classes.to_f64().unwrap_or(f64::INFINITY)
    }
}
