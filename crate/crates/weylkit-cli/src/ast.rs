//! Syntax tree for operator expressions over raising and lowering letters.

use std::collections::BTreeSet;

use num_rational::BigRational;
use weylkit_core::LetterKind;

/// A parsed operator expression.
///
/// Products are noncommutative, so `Product` keeps its children in source
/// order. Scalars are exact rationals or named parameters; any identifier
/// that is not a raise/lower letter becomes a parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expression {
    /// A sum of subexpressions (subtraction is encoded by a `-1` scalar
    /// factor on the subtracted term).
    Sum(Vec<Expression>),
    /// A noncommutative product, children in source order.
    Product(Vec<Expression>),
    /// An integer power of a subexpression.
    Power(Box<Expression>, u32),
    /// An exact rational scalar.
    Rational(BigRational),
    /// A named scalar parameter.
    Symbol(String),
    /// A raising or lowering letter acting on one mode.
    Letter {
        /// Raise or lower.
        kind: LetterKind,
        /// 0-based mode index.
        mode: u32,
    },
}

impl Expression {
    /// All parameter names appearing in the expression, sorted.
    pub fn symbols(&self) -> BTreeSet<String> {
        let mut names = BTreeSet::new();
        self.collect_symbols(&mut names);
        names
    }

    fn collect_symbols(&self, names: &mut BTreeSet<String>) {
        match self {
            Expression::Sum(children) | Expression::Product(children) => {
                for child in children {
                    child.collect_symbols(names);
                }
            }
            Expression::Power(child, _) => child.collect_symbols(names),
            Expression::Symbol(name) => {
                names.insert(name.clone());
            }
            Expression::Rational(_) | Expression::Letter { .. } => {}
        }
    }

    /// Largest mode index of any letter, if the expression has letters.
    pub fn max_mode(&self) -> Option<u32> {
        match self {
            Expression::Sum(children) | Expression::Product(children) => {
                children.iter().filter_map(Expression::max_mode).max()
            }
            Expression::Power(child, _) => child.max_mode(),
            Expression::Letter { mode, .. } => Some(*mode),
            Expression::Rational(_) | Expression::Symbol(_) => None,
        }
    }
}
