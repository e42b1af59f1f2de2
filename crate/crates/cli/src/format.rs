//! JSON documents for complexes, cochains and formal sums.
//!
//! ```json
//! {"maximal_simplices": [[0, 1, 2], [2, 3]]}
//! {"degree": 1, "ring": "Zmod", "modulus": 2,
//!  "support": [{"simplex": [0, 1], "coeff": 1}]}
//! {"ring": "Z", "terms": [{"simplex": [0, 1, 2], "coeff": -3}]}
//! ```
//!
//! Coefficients are JSON integers. Values outside the signed 64-bit range
//! are written as decimal strings, and strings are accepted on input.

use std::fmt;
use std::path::Path;

use cupsq::{Cochain, FormalSum, Ring, Simplex, SimplicialComplex};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub maximal_simplices: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingName {
    Z,
    Zmod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub degree: usize,
    pub ring: RingName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub support: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormalSumFile {
    pub ring: RingName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub simplex: Vec<i64>,
    pub coeff: Coefficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficient(pub BigInt);

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Coefficient, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Signed(v) => Ok(Coefficient(v.into())),
            Raw::Unsigned(v) => Ok(Coefficient(v.into())),
            Raw::Text(t) => t
                .trim()
                .parse()
                .map(Coefficient)
                .map_err(|_| serde::de::Error::custom(format!("coefficient {t:?} is not an integer"))),
        }
    }
}

/// Reads and deserializes a JSON document.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

fn show(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn strict_simplex(v: &[i64]) -> CliResult<Simplex> {
    if v.is_empty() {
        return Err(CliError::Invalid("malformed simplex []: no vertices".into()));
    }
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Invalid(format!(
            "malformed simplex {}: vertices must be strictly increasing",
            show(v)
        )));
    }
    Ok(Simplex::new(v.to_vec())?)
}

/// Ring named by a document.
pub fn ring_of(name: RingName, modulus: Option<u64>) -> CliResult<Ring> {
    match (name, modulus) {
        (RingName::Z, None) => Ok(Ring::Integers),
        (RingName::Z, Some(_)) => Err(CliError::Invalid("ring \"Z\" takes no modulus".into())),
        (RingName::Zmod, Some(m)) => Ok(Ring::integers_mod(m)?),
        (RingName::Zmod, None) => Err(CliError::Invalid("ring \"Zmod\" needs a modulus".into())),
    }
}

pub fn ring_name(ring: Ring) -> (RingName, Option<u64>) {
    match ring.modulus() {
        None => (RingName::Z, None),
        Some(m) => (RingName::Zmod, Some(m)),
    }
}

/// A parsed value plus the warnings canonicalization produced.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> CliResult<Loaded<SimplicialComplex>> {
        let simplices = self
            .maximal_simplices
            .iter()
            .map(|v| strict_simplex(v))
            .collect::<CliResult<Vec<_>>>()?;
        let complex = SimplicialComplex::new(simplices.iter().cloned())?;
        let warnings = simplices
            .iter()
            .enumerate()
            .filter(|(i, x)| !complex.maximal().contains(x) || simplices[..*i].contains(x))
            .map(|(_, x)| format!("dropping {x}: not maximal or listed twice"))
            .collect();
        Ok(Loaded { value: complex, warnings })
    }

    pub fn from_complex(k: &SimplicialComplex) -> ComplexFile {
        ComplexFile {
            maximal_simplices: k.maximal().iter().map(|x| x.vertices().to_vec()).collect(),
        }
    }
}

impl CochainFile {
    /// The cochain, with coefficients read in `ring` when given instead of
    /// the ring named in the file.
    pub fn to_cochain(&self, ring: Option<Ring>) -> CliResult<Loaded<Cochain>> {
        let own = ring_of(self.ring, self.modulus)?;
        let ring = ring.unwrap_or(own);
        let mut entries = Vec::with_capacity(self.support.len());
        for t in &self.support {
            let x = strict_simplex(&t.simplex)?;
            if x.dim() != self.degree {
                return Err(CliError::Invalid(format!(
                    "support simplex {x} has dimension {}, expected {}",
                    x.dim(),
                    self.degree
                )));
            }
            entries.push((x, t.coeff.0.clone()));
        }
        let cochain = Cochain::new(self.degree, ring, entries.iter().cloned())?;
        let mut warnings = Vec::new();
        if ring != own {
            warnings.push(format!("reading coefficients in {ring} instead of {own}"));
        }
        for (x, _) in &entries {
            if cochain.evaluate(x).is_zero() {
                warnings.push(format!("coefficient of {x} is zero in {ring}; dropped"));
            }
        }
        warnings.dedup();
        Ok(Loaded { value: cochain, warnings })
    }

    pub fn from_cochain(c: &Cochain) -> CochainFile {
        let (ring, modulus) = ring_name(c.ring());
        CochainFile {
            degree: c.degree(),
            ring,
            modulus,
            support: terms_of(c.support()),
        }
    }
}

fn terms_of<'a>(it: impl IntoIterator<Item = (&'a Simplex, &'a cupsq::RingElement)>) -> Vec<Term> {
    it.into_iter()
        .map(|(x, v)| Term {
            simplex: x.vertices().to_vec(),
            coeff: Coefficient(v.value().clone()),
        })
        .collect()
}

impl FormalSumFile {
    pub fn from_sum(sum: &FormalSum) -> FormalSumFile {
        let (ring, modulus) = ring_name(sum.ring());
        FormalSumFile {
            ring,
            modulus,
            terms: terms_of(sum.terms()),
        }
    }

    pub fn to_sum(&self) -> CliResult<FormalSum> {
        let ring = ring_of(self.ring, self.modulus)?;
        let mut sum = FormalSum::new(ring);
        for t in &self.terms {
            sum.add_term(strict_simplex(&t.simplex)?, &ring.element(t.coeff.0.clone()));
        }
        Ok(sum)
    }
}

/// One term per line: `coeff  [v_0,…,v_m]`.
pub struct SumLines<'a>(pub &'a FormalSum);

impl fmt::Display for SumLines<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, v) in self.0 {
            writeln!(f, "{v}  {x}")?;
        }
        Ok(())
    }
}
