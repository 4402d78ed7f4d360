//! Deformed integers `[n] = 1 + q + ... + q^{n-1}` and their factorials.

use weylkit_core::Coefficient;

/// A deformed integer: the index `n` together with the polynomial value
/// `[n] = 1 + q + ... + q^{n-1}` (the empty sum `0` for `n = 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QInteger {
    index: u32,
    value: Coefficient,
}

impl QInteger {
    /// The deformed integer `[n]` built on the deformation value `q`
    /// (typically a declared parameter, but any coefficient works).
    pub fn new(q: &Coefficient, index: u32) -> Self {
        QInteger {
            index,
            value: q_integer(q, index),
        }
    }

    /// The plain integer index `n`.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// The polynomial value `1 + q + ... + q^{n-1}`.
    pub fn value(&self) -> &Coefficient {
        &self.value
    }

    /// Consumes the wrapper, returning the polynomial value.
    pub fn into_value(self) -> Coefficient {
        self.value
    }
}

/// `[n] = 1 + q + ... + q^{n-1}`, the `n = 0` case being `0`.
pub fn q_integer(q: &Coefficient, n: u32) -> Coefficient {
    let mut acc = Coefficient::zero(q.parameters());
    for i in 0..n {
        acc += &q.pow(i);
    }
    acc
}

/// `[n]! = [1][2]...[n]`, the empty product being `1`.
pub fn q_factorial(q: &Coefficient, n: u32) -> Coefficient {
    let mut acc = Coefficient::one(q.parameters());
    for i in 1..=n {
        acc *= &q_integer(q, i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylkit_core::Parameters;

    #[test]
    fn brackets_and_factorials() {
        let params = Parameters::new(["q"]).unwrap();
        let q = Coefficient::parameter(&params, "q").unwrap();
        assert!(q_integer(&q, 0).is_zero());
        assert_eq!(q_integer(&q, 1), Coefficient::one(&params));
        assert_eq!(q_integer(&q, 3).to_string(), "q^2 + q + 1");
        assert_eq!(q_factorial(&q, 2).to_string(), "q + 1");
        let two = QInteger::new(&q, 2);
        assert_eq!(two.index(), 2);
        assert_eq!(two.value().to_string(), "q + 1");
    }
}
