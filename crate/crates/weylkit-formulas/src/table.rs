//! A tagged, deterministically ordered table of exact coefficients indexed
//! by integer tuples. Used to collect whole families (triangles, rows,
//! probability tables) for printing and cross-checking.

use std::collections::BTreeMap;
use std::fmt;

use weylkit_core::Coefficient;

/// A family tag plus a map from index tuples to exact coefficients.
///
/// Iteration order is the lexicographic order of the index tuples, so two
/// tables built from the same entries always print identically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientTable {
    family: String,
    entries: BTreeMap<Vec<i64>, Coefficient>,
}

impl CoefficientTable {
    /// An empty table for the given family tag.
    pub fn new(family: impl Into<String>) -> Self {
        CoefficientTable {
            family: family.into(),
            entries: BTreeMap::new(),
        }
    }

    /// Builds a table from an entry iterator.
    pub fn from_entries(
        family: impl Into<String>,
        entries: impl IntoIterator<Item = (Vec<i64>, Coefficient)>,
    ) -> Self {
        CoefficientTable {
            family: family.into(),
            entries: entries.into_iter().collect(),
        }
    }

    /// The family tag.
    pub fn family(&self) -> &str {
        &self.family
    }

    /// Inserts one entry, returning the previous value at that index if any.
    pub fn insert(&mut self, index: impl Into<Vec<i64>>, value: Coefficient) -> Option<Coefficient> {
        self.entries.insert(index.into(), value)
    }

    /// Looks up the value at an index tuple.
    pub fn get(&self, index: &[i64]) -> Option<&Coefficient> {
        self.entries.get(index)
    }

    /// Iterates entries in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (&[i64], &Coefficient)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the table has no entries.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for CoefficientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.family)?;
        for (index, value) in self.iter() {
            let index = index
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            writeln!(f, "  ({index}) = {value}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylkit_core::Parameters;

    #[test]
    fn deterministic_iteration() {
        let params = Parameters::empty();
        let mut table = CoefficientTable::new("demo");
        table.insert(vec![2, 1], Coefficient::from_integer(&params, 21));
        table.insert(vec![1, 2], Coefficient::from_integer(&params, 12));
        table.insert(vec![1, 1], Coefficient::from_integer(&params, 11));
        let indices: Vec<Vec<i64>> = table.iter().map(|(k, _)| k.to_vec()).collect();
        assert_eq!(indices, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(
            table.get(&[1, 2]),
            Some(&Coefficient::from_integer(&params, 12))
        );
        assert_eq!(table.len(), 3);
    }
}
