//! Declared parameter sets for exact symbolic coefficients.
//!
//! Every [`Coefficient`](crate::Coefficient) carries the full, ordered set of
//! formal parameters of the computation it belongs to. Declaring the set up
//! front (rather than growing it on demand) makes mixing values from
//! different computations a loud error instead of a silent capture of
//! like-named symbols.

use std::fmt;
use std::sync::Arc;

use crate::error::CoreError;

/// An immutable, alphabetically ordered set of parameter names.
///
/// Cloning is cheap (the name list is shared). Two sets are equal exactly
/// when they declare the same names.
///
/// # Examples
///
/// ```
/// use weylkit_core::Parameters;
///
/// let params = Parameters::new(["q", "alpha"]).unwrap();
/// assert_eq!(params.names(), ["alpha", "q"]);
/// assert_eq!(params.index_of("q"), Some(1));
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Parameters {
    names: Arc<[String]>,
}

impl Parameters {
    /// Declares a parameter set. Names are sorted alphabetically; the sorted
    /// position of a name is its variable index in every coefficient built
    /// over this set.
    ///
    /// # Errors
    ///
    /// Returns [`CoreError::InvalidParameterName`] if a name is not an
    /// identifier, and [`CoreError::DuplicateParameter`] if a name repeats.
    pub fn new<I, S>(names: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut list: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &list {
            if !is_identifier(name) {
                return Err(CoreError::InvalidParameterName(name.clone()));
            }
        }
        list.sort();
        if let Some(dup) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoreError::DuplicateParameter(dup[0].clone()));
        }
        Ok(Self { names: list.into() })
    }

    /// The empty parameter set: coefficients over it are plain rationals.
    pub fn empty() -> Self {
        Self { names: Arc::from([]) }
    }

    /// Declared names in alphabetical order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Number of declared parameters.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Whether no parameters are declared.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Variable index of `name`, if declared.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    /// Whether `name` is declared.
    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Whether every name of `other` is also declared here.
    pub fn is_superset_of(&self, other: &Parameters) -> bool {
        other.names.iter().all(|n| self.contains(n))
    }

    /// Comma-separated name list, used in error messages.
    pub fn describe(&self) -> String {
        self.names.join(", ")
    }
}

impl fmt::Debug for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parameters[{}]", self.describe())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
