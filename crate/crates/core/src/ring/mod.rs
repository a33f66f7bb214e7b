//! Finite unital rings stored as Cayley tables.
//!
//! Every ring has a canonical enumeration of its elements. Index `0` is
//! always the additive identity; the multiplicative identity is recorded
//! separately. Constructions from ring-spec strings live in [`spec`], the
//! unit/radical analysis in [`analysis`] and ring endomorphisms in [`endo`].

pub mod analysis;
pub mod endo;
pub mod spec;

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use analysis::{analyze, is_bleached, RingAnalysis};
pub use endo::Endomorphism;
pub use spec::ring_from_spec;

/// Largest order accepted by any construction. Tables are `order²` words.
pub const MAX_ORDER: usize = 2048;

/// Rings up to this order get every axiom checked on every triple.
pub const FULL_CHECK_ORDER: usize = 256;

/// Number of random triples checked for rings above [`FULL_CHECK_ORDER`].
pub const SAMPLED_AXIOM_TRIPLES: usize = 10_000;

const AXIOM_SAMPLE_SEED: u64 = 0x5eed_a110;

/// An element of a [`FiniteRing`], identified by its index in the ring's
/// canonical enumeration.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How a ring was built. Used for element display and to decide which
/// builtin endomorphisms make sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `Z/nZ`, element `k` is the residue `k`.
    ZMod { modulus: u32 },
    /// Pairs `(a, b)` with `(a,b)(c,d) = (ac, ad + bc)`, index `n·a + b`.
    Dual { modulus: u32 },
    /// `Z/nZ[C2]`, element `a + bg` has index `n·a + b`.
    GroupRingC2 { modulus: u32 },
    /// `Z/nZ[x]/(f)` for monic `f`; coefficients `(c0, .., c_{d-1})` are
    /// enumerated lexicographically with `c0` most significant.
    Quotient { modulus: u32, poly: Vec<u32> },
    /// Tables read from a file.
    Table,
}

/// A finite unital ring given by its addition and multiplication tables.
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: Elem,
    label: String,
    construction: Construction,
    analysis: OnceLock<RingAnalysis>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("one", &self.one)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from raw tables and validates the ring axioms.
    ///
    /// `add` and `mul` are row-major `order × order` tables. Element `0`
    /// must be the additive identity.
    pub fn from_tables(
        label: impl Into<String>,
        construction: Construction,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: u32,
    ) -> Result<Self> {
        let label = label.into();
        if order < 2 {
            return Err(Error::parse(&label, "a unital ring with 0 ≠ 1 has at least 2 elements"));
        }
        if order > MAX_ORDER {
            return Err(Error::parse(&label, format!("order {order} exceeds the limit {MAX_ORDER}")));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::parse(&label, "tables must have order² entries"));
        }
        if let Some(&bad) = add.iter().chain(mul.iter()).find(|&&v| v as usize >= order) {
            return Err(Error::ElementOutOfRange { index: bad as u64, order });
        }
        if one as usize >= order {
            return Err(Error::ElementOutOfRange { index: one as u64, order });
        }
        if one == 0 {
            return Err(Error::RingAxiom { law: "zero ≠ one", witness: vec![0] });
        }

        let mut neg = vec![u32::MAX; order];
        for x in 0..order {
            match (0..order).find(|&y| add[x * order + y] == 0) {
                Some(y) => neg[x] = y as u32,
                None => {
                    return Err(Error::RingAxiom { law: "additive inverse", witness: vec![x as u32] });
                }
            }
        }

        let ring = FiniteRing {
            order,
            add,
            mul,
            neg,
            one: Elem(one),
            label,
            construction,
            analysis: OnceLock::new(),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Tabulates `add` and `mul` closures over `0..order` and validates.
    pub(crate) fn tabulate(
        label: impl Into<String>,
        construction: Construction,
        order: usize,
        one: u32,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                add_t.push(add(x, y) as u32);
                mul_t.push(mul(x, y) as u32);
            }
        }
        Self::from_tables(label, construction, order, add_t, mul_t, one)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let zero = Elem::ZERO;
        let one = self.one;
        for x in self.elements() {
            if self.add(zero, x) != x || self.add(x, zero) != x {
                return Err(Error::RingAxiom { law: "additive identity", witness: vec![x.0] });
            }
            if self.mul(one, x) != x || self.mul(x, one) != x {
                return Err(Error::RingAxiom { law: "multiplicative identity", witness: vec![x.0] });
            }
            for y in self.elements() {
                if self.add(x, y) != self.add(y, x) {
                    return Err(Error::RingAxiom { law: "additive commutativity", witness: vec![x.0, y.0] });
                }
            }
        }
        if n <= FULL_CHECK_ORDER {
            for x in self.elements() {
                for y in self.elements() {
                    for z in self.elements() {
                        self.check_triple(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AXIOM_SAMPLE_SEED);
            for _ in 0..SAMPLED_AXIOM_TRIPLES {
                let x = Elem(rng.gen_range(0..n as u32));
                let y = Elem(rng.gen_range(0..n as u32));
                let z = Elem(rng.gen_range(0..n as u32));
                self.check_triple(x, y, z)?;
            }
        }
        Ok(())
    }

    fn check_triple(&self, x: Elem, y: Elem, z: Elem) -> Result<()> {
        let law = if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
            "additive associativity"
        } else if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
            "multiplicative associativity"
        } else if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
            "left distributivity"
        } else if self.mul(self.add(x, y), z) != self.add(self.mul(x, z), self.mul(y, z)) {
            "right distributivity"
        } else {
            return Ok(());
        };
        Err(Error::RingAxiom { law, witness: vec![x.0, y.0, z.0] })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.add[x.index() * self.order + y.index()])
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.mul[x.index() * self.order + y.index()])
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.neg[x.index()])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn pow(&self, x: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.order as u32).map(Elem)
    }

    /// Checks that `index` names an element of this ring.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.order as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.order })
        }
    }

    /// The image of the integer `k` under `Z → R`.
    pub fn from_int(&self, k: i64) -> Elem {
        let mut acc = Elem::ZERO;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, self.one);
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// Unit group, radical and friends; computed on first use.
    pub fn analysis(&self) -> &RingAnalysis {
        self.analysis.get_or_init(|| analyze(self))
    }

    #[inline]
    pub fn is_unit(&self, x: Elem) -> bool {
        self.analysis().is_unit(x)
    }

    #[inline]
    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        self.analysis().inverse(x)
    }

    pub fn require_local(&self) -> Result<&RingAnalysis> {
        let a = self.analysis();
        if a.is_local {
            Ok(a)
        } else {
            Err(Error::NotLocal(self.label.clone()))
        }
    }

    /// Human-readable form of an element according to the construction.
    pub fn describe(&self, x: Elem) -> String {
        let i = x.index();
        match &self.construction {
            Construction::ZMod { .. } | Construction::Table => i.to_string(),
            Construction::Dual { modulus } => {
                let n = *modulus as usize;
                format!("({},{})", i / n, i % n)
            }
            Construction::GroupRingC2 { modulus } => {
                let n = *modulus as usize;
                format!("{}+{}g", i / n, i % n)
            }
            Construction::Quotient { modulus, poly } => {
                let coeffs = spec::quotient_coeffs(i, *modulus as usize, poly.len() - 1);
                spec::format_poly(&coeffs)
            }
        }
    }
}
