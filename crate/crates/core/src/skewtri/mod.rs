//! Skew triangular matrix rings `T_n(R, σ)`.
//!
//! Upper triangular `n × n` matrices over `R` with the twisted product
//! `(AB)_{ij} = Σ_{k=i..j} a_{ik} σ^{k−i}(b_{kj})`. Matrices store their
//! upper triangle row by row; all arithmetic goes through a
//! [`SkewTriRing`], which owns `R`, `σ` and the powers of `σ` needed.

mod decompose;
mod search;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::LrSolver;
use crate::ring::{Elem, Endomorphism, FiniteRing};

pub use decompose::{t3_case, Case5Rhs, Checklist, CleanDecomposition, DecompositionKind};

/// Default cap on the number of matrices a brute-force enumeration may
/// range over.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// An upper triangular matrix; `entries` holds `a_{11}, a_{12}, …, a_{1n},
/// a_{22}, …, a_{nn}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TriMatrix {
    n: usize,
    entries: Vec<Elem>,
}

impl TriMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// Entry `(i, j)`, 0-based; zero below the diagonal.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        if i > j {
            Elem::ZERO
        } else {
            self.entries[pos(self.n, i, j)]
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, x: Elem) {
        let p = pos(self.n, i, j);
        self.entries[p] = x;
    }

    pub fn diagonal(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).map(move |i| self.get(i, i))
    }

    /// The literal form `[a11,a12;a22]` accepted by [`SkewTriRing::parse_literal`].
    pub fn to_literal(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (i..self.n)
                    .map(|j| self.get(i, j).0.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("[{}]", rows.join(";"))
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).0.to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Position of `(i, j)`, `i ≤ j`, in the packed upper triangle. Rows above
/// `i` hold `n + (n−1) + … + (n−i+1) = i·n − i(i−1)/2` entries.
#[inline]
fn pos(n: usize, i: usize, j: usize) -> usize {
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// `T_n(R, σ)` together with its caches.
pub struct SkewTriRing {
    ring: Arc<FiniteRing>,
    sigma: Endomorphism,
    n: usize,
    /// `sigma_pow[k][x] = σ^k(x)` for `k < n`.
    sigma_pow: Vec<Vec<Elem>>,
    budget: u64,
    solver: LrSolver,
    idempotents: OnceLock<Vec<TriMatrix>>,
}

impl fmt::Debug for SkewTriRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewTriRing")
            .field("ring", &self.ring.label())
            .field("sigma", &self.sigma.label())
            .field("n", &self.n)
            .finish()
    }
}

impl SkewTriRing {
    pub fn new(sigma: Endomorphism, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("dimension must be at least 1".into()));
        }
        let ring = Arc::clone(sigma.ring());
        let sigma_pow = (0..n as u32).map(|k| sigma.power(k).image().to_vec()).collect();
        Ok(SkewTriRing {
            solver: LrSolver::new(Arc::clone(&ring)),
            ring,
            sigma,
            n,
            sigma_pow,
            budget: DEFAULT_BUDGET,
            idempotents: OnceLock::new(),
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub(crate) fn solver(&self) -> &LrSolver {
        &self.solver
    }

    /// Number of stored entries, `n(n+1)/2`.
    pub fn entry_count(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    /// `σ^k(x)` for `k < n`.
    #[inline]
    pub fn sigma_pow(&self, k: usize, x: Elem) -> Elem {
        self.sigma_pow[k][x.index()]
    }

    pub fn zero(&self) -> TriMatrix {
        TriMatrix { n: self.n, entries: vec![Elem::ZERO; self.entry_count()] }
    }

    pub fn identity(&self) -> TriMatrix {
        let mut m = self.zero();
        for i in 0..self.n {
            m.set(i, i, self.ring.one());
        }
        m
    }

    /// Builds a matrix from its packed upper triangle.
    pub fn matrix(&self, entries: Vec<Elem>) -> Result<TriMatrix> {
        if entries.len() != self.entry_count() {
            return Err(Error::Shape(format!(
                "expected {} entries for n = {}, got {}",
                self.entry_count(),
                self.n,
                entries.len()
            )));
        }
        for &e in &entries {
            self.ring.elem(e.0 as u64)?;
        }
        Ok(TriMatrix { n: self.n, entries })
    }

    /// Builds a matrix from raw indices, e.g. `&[3, 1, 2]` for `[[3,1],[0,2]]`.
    pub fn matrix_from(&self, entries: &[u32]) -> Result<TriMatrix> {
        self.matrix(entries.iter().map(|&e| Elem(e)).collect())
    }

    /// Parses `[a11,a12,a13;a22,a23;a33]`.
    pub fn parse_literal(&self, literal: &str) -> Result<TriMatrix> {
        let body = literal.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::parse(literal, "matrix literal must be enclosed in [ ]"))?;
        let rows: Vec<&str> = body.split(';').collect();
        if rows.len() != self.n {
            return Err(Error::parse(
                literal,
                format!("expected {} rows separated by `;`, found {}", self.n, rows.len()),
            ));
        }
        let mut entries = Vec::with_capacity(self.entry_count());
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').map(str::trim).collect();
            if cells.len() != self.n - i {
                return Err(Error::parse(
                    literal,
                    format!("row {}: expected {} entries, found {}", i + 1, self.n - i, cells.len()),
                ));
            }
            for (k, cell) in cells.iter().enumerate() {
                let col = i + k + 1;
                let v: u64 = cell.parse().map_err(|_| {
                    Error::parse(literal, format!("row {}, column {col}: `{cell}` is not an element index", i + 1))
                })?;
                if v >= self.ring.order() as u64 {
                    return Err(Error::parse(
                        literal,
                        format!(
                            "row {}, column {col}: element {v} out of range for ring of order {}",
                            i + 1,
                            self.ring.order()
                        ),
                    ));
                }
                entries.push(Elem(v as u32));
            }
        }
        Ok(TriMatrix { n: self.n, entries })
    }

    fn check_shape(&self, a: &TriMatrix) -> Result<()> {
        if a.n != self.n || a.entries.len() != self.entry_count() {
            return Err(Error::Shape(format!("matrix of dimension {} used in T_{}", a.n, self.n)));
        }
        Ok(())
    }

    pub fn add(&self, a: &TriMatrix, b: &TriMatrix) -> TriMatrix {
        self.zip(a, b, |x, y| self.ring.add(x, y))
    }

    pub fn sub(&self, a: &TriMatrix, b: &TriMatrix) -> TriMatrix {
        self.zip(a, b, |x, y| self.ring.sub(x, y))
    }

    pub fn neg(&self, a: &TriMatrix) -> TriMatrix {
        TriMatrix { n: a.n, entries: a.entries.iter().map(|&x| self.ring.neg(x)).collect() }
    }

    fn zip(&self, a: &TriMatrix, b: &TriMatrix, f: impl Fn(Elem, Elem) -> Elem) -> TriMatrix {
        debug_assert_eq!(a.n, b.n);
        TriMatrix {
            n: a.n,
            entries: a.entries.iter().zip(&b.entries).map(|(&x, &y)| f(x, y)).collect(),
        }
    }

    /// The skew product, after checking both shapes.
    pub fn mat_mul(&self, a: &TriMatrix, b: &TriMatrix) -> Result<TriMatrix> {
        self.check_shape(a)?;
        self.check_shape(b)?;
        Ok(self.mul(a, b))
    }

    /// The skew product `c_{ij} = Σ_{k=i..j} a_{ik} σ^{k−i}(b_{kj})`.
    pub fn mul(&self, a: &TriMatrix, b: &TriMatrix) -> TriMatrix {
        let r = &*self.ring;
        let mut c = self.zero();
        for i in 0..self.n {
            for j in i..self.n {
                let mut acc = Elem::ZERO;
                for k in i..=j {
                    acc = r.add(acc, r.mul(a.get(i, k), self.sigma_pow(k - i, b.get(k, j))));
                }
                c.set(i, j, acc);
            }
        }
        c
    }

    /// Whether `A` is invertible, decided by its diagonal over a local ring.
    pub fn is_unit(&self, a: &TriMatrix) -> Result<bool> {
        let analysis = self.ring.require_local()?;
        Ok(a.diagonal().all(|x| analysis.is_unit(x)))
    }

    /// Two-sided inverse by back-substitution, or `None`.
    pub fn invert(&self, a: &TriMatrix) -> Option<TriMatrix> {
        let r = &*self.ring;
        let inv_diag: Vec<Elem> = a.diagonal().map(|x| r.inverse(x)).collect::<Option<_>>()?;
        let mut b = self.zero();
        for j in 0..self.n {
            b.set(j, j, inv_diag[j]);
            for i in (0..j).rev() {
                // a_ii b_ij = −Σ_{k=i+1..j} a_ik σ^{k−i}(b_kj)
                let mut acc = Elem::ZERO;
                for k in i + 1..=j {
                    acc = r.add(acc, r.mul(a.get(i, k), self.sigma_pow(k - i, b.get(k, j))));
                }
                b.set(i, j, r.mul(inv_diag[i], r.neg(acc)));
            }
        }
        let id = self.identity();
        (self.mul(a, &b) == id && self.mul(&b, a) == id).then_some(b)
    }

    /// `|R|^{n(n+1)/2}`.
    pub fn matrix_count(&self) -> u128 {
        (self.ring.order() as u128)
            .checked_pow(self.entry_count() as u32)
            .unwrap_or(u128::MAX)
    }

    /// The matrix with the given position in the lexicographic enumeration
    /// (first stored entry most significant).
    pub fn matrix_at(&self, mut index: u128) -> TriMatrix {
        let q = self.ring.order() as u128;
        let mut entries = vec![Elem::ZERO; self.entry_count()];
        for slot in entries.iter_mut().rev() {
            *slot = Elem((index % q) as u32);
            index /= q;
        }
        TriMatrix { n: self.n, entries }
    }

    pub fn index_of(&self, a: &TriMatrix) -> u128 {
        let q = self.ring.order() as u128;
        a.entries.iter().fold(0, |acc, e| acc * q + e.0 as u128)
    }

    pub(crate) fn check_budget(&self) -> Result<()> {
        let required = self.matrix_count();
        if required > self.budget as u128 {
            return Err(Error::BudgetExceeded { required, budget: self.budget });
        }
        Ok(())
    }
}
