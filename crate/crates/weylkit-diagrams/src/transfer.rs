//! The grafting transfer recurrence.

use std::collections::BTreeMap;

use num_rational::BigRational;
use weylkit_core::{combinatorics, Coefficient};

use crate::basis::GateBasis;

/// Exponent-pair coefficients of the normally ordered `size`-th power of the
/// basis operator, computed by grafting one gate at a time.
///
/// The state after some gates is the pair `(a, b)`: `a` dangling outputs and
/// `b` free inputs. Grafting a gate with `r` outputs and `s` inputs that
/// binds `t` of its inputs moves `(a, b)` to `(a - t + r, b + s - t)` in
/// `C(s, t) C(a, t) t!` ways — choose which input slots bind, which dangling
/// outputs they take, and in what assignment. Summing gate weights over all
/// grafting histories yields exactly the coefficient of `X^a D^b` in the
/// normal ordering of the `size`-th operator power.
pub fn transfer_coefficients(
    basis: &GateBasis,
    size: usize,
) -> BTreeMap<(u32, u32), Coefficient> {
    let params = basis.parameters();
    let mut states = BTreeMap::from([((0u32, 0u32), Coefficient::one(params))]);
    for _ in 0..size {
        let mut next: BTreeMap<(u32, u32), Coefficient> = BTreeMap::new();
        for (&(a, b), weight) in &states {
            for gate in basis.gates() {
                let (r, s) = gate.shape();
                for t in 0..=s.min(a) {
                    let ways = combinatorics::binomial(u64::from(s), u64::from(t))
                        * combinatorics::binomial(u64::from(a), u64::from(t))
                        * combinatorics::factorial(u64::from(t));
                    let contribution = &(weight * gate.weight())
                        .scale(&BigRational::from_integer(ways));
                    *next
                        .entry((a - t + r, b + s - t))
                        .or_insert_with(|| Coefficient::zero(params)) += contribution;
                }
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
    }
    states
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylkit_core::Parameters;

    #[test]
    fn size_zero_is_the_identity_state() {
        let params = Parameters::empty();
        let basis = GateBasis::unweighted(&params, &[(2, 1), (0, 3)]).unwrap();
        let table = transfer_coefficients(&basis, 0);
        assert_eq!(table.len(), 1);
        assert!(table[&(0, 0)].is_one());
    }

    #[test]
    fn counting_gate_cubed_gives_a_stirling_row() {
        let params = Parameters::empty();
        let basis = GateBasis::unweighted(&params, &[(1, 1)]).unwrap();
        let table = transfer_coefficients(&basis, 3);
        let expected = [((1, 1), 1), ((2, 2), 3), ((3, 3), 1)];
        assert_eq!(table.len(), expected.len());
        for ((a, b), value) in expected {
            assert_eq!(table[&(a, b)], Coefficient::from_integer(&params, value));
        }
    }
}
