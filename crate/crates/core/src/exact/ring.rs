use std::collections::HashSet;
use std::sync::Arc;

use super::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    /// Weighted degree. Zero only for parameters (symbolic constants such
    /// as the genus), which never trigger truncation.
    pub degree: u32,
}

/// Ordered generator list plus truncation order `D`: monomials of weighted
/// degree `>= D` are identified with zero.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    generators: Vec<Generator>,
    truncation: u32,
}

pub type Ring = Arc<RingSpec>;

impl RingSpec {
    /// Builds a ring from `(name, degree)` pairs. Every degree must be at
    /// least one; use [`RingSpec::with_parameters`] for degree-zero symbols.
    pub fn new<I, S>(generators: I, truncation: i64) -> Result<Ring, ExactError>
    where
        I: IntoIterator<Item = (S, i64)>,
        S: Into<String>,
    {
        Self::with_parameters(generators, std::iter::empty::<String>(), truncation)
    }

    /// Like [`RingSpec::new`], then appends degree-zero parameters after the
    /// graded generators.
    pub fn with_parameters<I, S, P, T>(
        generators: I,
        parameters: P,
        truncation: i64,
    ) -> Result<Ring, ExactError>
    where
        I: IntoIterator<Item = (S, i64)>,
        S: Into<String>,
        P: IntoIterator<Item = T>,
        T: Into<String>,
    {
        if truncation < 1 {
            return Err(ExactError::InvalidTruncation(truncation));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (name, degree) in generators {
            let name = name.into();
            if degree < 1 {
                return Err(ExactError::NonPositiveDegree { name, degree });
            }
            if !seen.insert(name.clone()) {
                return Err(ExactError::DuplicateGenerator(name));
            }
            let degree = u32::try_from(degree).map_err(|_| ExactError::NonPositiveDegree {
                name: name.clone(),
                degree,
            })?;
            out.push(Generator { name, degree });
        }
        for name in parameters {
            let name = name.into();
            if !seen.insert(name.clone()) {
                return Err(ExactError::DuplicateGenerator(name));
            }
            out.push(Generator { name, degree: 0 });
        }
        let truncation =
            u32::try_from(truncation).map_err(|_| ExactError::InvalidTruncation(truncation))?;
        Ok(Arc::new(RingSpec {
            generators: out,
            truncation,
        }))
    }

    /// Same generators, different truncation order.
    pub fn with_truncation(&self, truncation: i64) -> Result<Ring, ExactError> {
        if truncation < 1 {
            return Err(ExactError::InvalidTruncation(truncation));
        }
        Ok(Arc::new(RingSpec {
            generators: self.generators.clone(),
            truncation: truncation as u32,
        }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn weighted_degree(&self, exponents: &[u32]) -> u32 {
        exponents
            .iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Graded generators only (parameters excluded).
    pub fn graded_generators(&self) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(|g| g.degree > 0)
    }

    pub(crate) fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}
