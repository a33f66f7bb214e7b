#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use skewclean::ring::ring_from_spec;
use skewclean::{Endomorphism, FiniteRing, SkewTriRing};

/// Local rings (with an endomorphism) used across the integration tests.
pub const CORPUS: &[(&str, &str)] = &[
    ("zmod:2", "id"),
    ("zmod:4", "id"),
    ("zmod:5", "id"),
    ("zmod:8", "id"),
    ("zmod:9", "id"),
    ("dual:zmod:4", "id"),
    ("dual:zmod:4", "negx"),
    ("groupring:zmod:4;C2", "id"),
    ("groupring:zmod:4;C2", "aug"),
    ("quot:zmod:3;x^2+x+1", "id"),
    ("quot:zmod:4;x^2+x+1", "id"),
];

pub struct Fixture {
    pub sigma: Endomorphism,
    pub t2: SkewTriRing,
    pub t3: SkewTriRing,
}

impl std::fmt::Debug for Fixture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} / {}", self.ring().label(), self.sigma.label())
    }
}

impl Fixture {
    pub fn ring(&self) -> &FiniteRing {
        self.sigma.ring()
    }
}

pub fn sigma(ring: &str, sigma: &str) -> Endomorphism {
    let r = Arc::new(ring_from_spec(ring).unwrap());
    Endomorphism::from_spec(&r, sigma).unwrap()
}

/// One fixture per corpus entry, built once so idempotent caches are shared.
pub fn fixtures() -> &'static [Fixture] {
    static ALL: OnceLock<Vec<Fixture>> = OnceLock::new();
    ALL.get_or_init(|| {
        CORPUS
            .iter()
            .map(|&(r, s)| {
                let sigma = sigma(r, s);
                Fixture {
                    t2: SkewTriRing::new(sigma.clone(), 2).unwrap(),
                    t3: SkewTriRing::new(sigma.clone(), 3).unwrap(),
                    sigma,
                }
            })
            .collect()
    })
}
