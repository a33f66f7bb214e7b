//! Unital ring endomorphisms `σ: R → R`.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use super::spec::read_numbers;
use super::{Construction, Elem, FiniteRing};
use crate::error::{Error, Result};

/// A validated unital ring endomorphism, stored as its image table.
#[derive(Clone)]
pub struct Endomorphism {
    ring: Arc<FiniteRing>,
    image: Vec<Elem>,
    label: String,
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Endomorphism")
            .field("ring", &self.ring.label())
            .field("label", &self.label)
            .finish()
    }
}

impl PartialEq for Endomorphism {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.image == other.image
    }
}

impl Endomorphism {
    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        Endomorphism {
            ring: Arc::clone(ring),
            image: ring.elements().collect(),
            label: "id".into(),
        }
    }

    /// Validates `image` exhaustively against unitality, additivity and
    /// multiplicativity.
    pub fn from_image(ring: &Arc<FiniteRing>, image: Vec<Elem>, label: impl Into<String>) -> Result<Self> {
        if image.len() != ring.order() {
            return Err(Error::parse(
                label.into(),
                format!("image table has {} entries, ring has {}", image.len(), ring.order()),
            ));
        }
        if let Some(bad) = image.iter().find(|e| e.index() >= ring.order()) {
            return Err(Error::ElementOutOfRange { index: bad.0 as u64, order: ring.order() });
        }
        let one = ring.one();
        if image[one.index()] != one {
            return Err(Error::Endomorphism { law: "unitality", witness: vec![one.0] });
        }
        let s = |x: Elem| image[x.index()];
        for x in ring.elements() {
            for y in ring.elements() {
                if s(ring.add(x, y)) != ring.add(s(x), s(y)) {
                    return Err(Error::Endomorphism { law: "additivity", witness: vec![x.0, y.0] });
                }
                if s(ring.mul(x, y)) != ring.mul(s(x), s(y)) {
                    return Err(Error::Endomorphism { law: "multiplicativity", witness: vec![x.0, y.0] });
                }
            }
        }
        Ok(Endomorphism {
            ring: Arc::clone(ring),
            image,
            label: label.into(),
        })
    }

    /// Parses an endo-spec: `id`, `negx` (dual rings), `aug` (group rings
    /// over C2) or `table:<path>`.
    pub fn from_spec(ring: &Arc<FiniteRing>, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let incompatible = || Error::IncompatibleEndomorphism {
            name: spec.to_string(),
            ring: ring.label().to_string(),
        };
        match spec {
            "id" => Ok(Self::identity(ring)),
            "negx" => {
                let Construction::Dual { modulus } = *ring.construction() else {
                    return Err(incompatible());
                };
                let n = modulus;
                let image = ring
                    .elements()
                    .map(|x| {
                        let (a, b) = (x.0 / n, x.0 % n);
                        Elem(a * n + (n - b) % n)
                    })
                    .collect();
                Self::from_image(ring, image, "negx")
            }
            "aug" => {
                let Construction::GroupRingC2 { modulus } = *ring.construction() else {
                    return Err(incompatible());
                };
                let n = modulus;
                let image = ring
                    .elements()
                    .map(|x| {
                        let (a, b) = (x.0 / n, x.0 % n);
                        Elem(((a + b) % n) * n)
                    })
                    .collect();
                Self::from_image(ring, image, "aug")
            }
            _ => match spec.strip_prefix("table:") {
                Some(path) => Self::from_table_file(ring, Path::new(path)),
                None => Err(Error::parse(spec, "expected id, negx, aug or table:<path>")),
            },
        }
    }

    fn from_table_file(ring: &Arc<FiniteRing>, path: &Path) -> Result<Self> {
        let label = format!("table:{}", path.display());
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let image = read_numbers(&label, &text)?
            .into_iter()
            .map(|v| ring.elem(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_image(ring, image, label)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x.index()]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            ring: Arc::clone(&self.ring),
            image: other.image.iter().map(|&x| self.apply(x)).collect(),
            label: format!("{}∘{}", self.label, other.label),
        }
    }

    /// The `k`-fold composite; `k = 0` gives the identity.
    pub fn power(&self, k: u32) -> Endomorphism {
        let mut image: Vec<Elem> = self.ring.elements().collect();
        for _ in 0..k {
            for x in image.iter_mut() {
                *x = self.apply(*x);
            }
        }
        let label = match k {
            0 => "id".to_string(),
            1 => self.label.clone(),
            k => format!("{}^{k}", self.label),
        };
        Endomorphism { ring: Arc::clone(&self.ring), image, label }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, x)| x.index() == i)
    }

    /// `σ ∘ σ = σ`.
    pub fn is_idempotent(&self) -> bool {
        self.image.iter().all(|&x| self.apply(x) == x)
    }

    /// `σ(J(R)) ⊆ J(R)`.
    pub fn preserves_radical(&self) -> bool {
        let a = self.ring.analysis();
        a.radical.iter().all(|&x| a.in_radical(self.apply(x)))
    }
}
