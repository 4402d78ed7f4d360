//! The crossing polynomial of perfect matchings (chord diagrams) on
//! `2 * chords` points, by the alternating-binomial quotient formula.

use num_rational::BigRational;
use weylkit_core::combinatorics::binomial;
use weylkit_core::Coefficient;

use crate::error::FormulasError;

/// Sum of `q^{crossings}` over all perfect matchings of `2 * chords`
/// points on a line, computed as
///
/// `(1 - q)^{-chords} * sum_{k=-chords}^{chords} (-1)^k q^{k(k-1)/2}
/// C(2*chords, chords + k)`.
///
/// The division by `(1 - q)^chords` is performed exactly; an inexact
/// division signals an indexing fault and is reported as an error. At
/// `q = 1` the value degenerates to the double factorial
/// `(2*chords - 1)!!`, so `q` is normally a declared parameter.
pub fn touchard_riordan(chords: u32, q: &Coefficient) -> Result<Coefficient, FormulasError> {
    let params = q.parameters();
    let one = Coefficient::one(params);
    if chords == 0 {
        return Ok(one);
    }

    let mut numerator = Coefficient::zero(params);
    for k in -(chords as i64)..=(chords as i64) {
        let exponent = (k * (k - 1) / 2) as u32;
        let count = binomial((2 * chords).into(), (chords as i64 + k) as u64);
        let mut term = q.pow(exponent).scale(&BigRational::from_integer(count));
        if k % 2 != 0 {
            term = -term;
        }
        numerator += &term;
    }

    let denominator = (&one - q).pow(chords);
    numerator.exact_div(&denominator).map_err(FormulasError::from)
}

/// Brute-force crossing polynomial: enumerates every perfect matching of
/// `2 * chords` points and accumulates `q^{#crossing pairs}`. Exponential
/// in `chords`; intended as an independent cross-check for small sizes.
pub fn matching_crossing_polynomial(chords: u32, q: &Coefficient) -> Coefficient {
    let params = q.parameters();
    let points = (2 * chords) as usize;
    let mut result = Coefficient::zero(params);
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(chords as usize);
    let mut used = vec![false; points];

    fn crossings(pairs: &[(usize, usize)]) -> u32 {
        let mut count = 0;
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[idx + 1..] {
                // Chords (a,b) and (c,d) cross iff exactly one endpoint of
                // one lies strictly between the endpoints of the other.
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    count += 1;
                }
            }
        }
        count
    }

    fn recurse(
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        q: &Coefficient,
        result: &mut Coefficient,
    ) {
        let first = match used.iter().position(|&u| !u) {
            Some(i) => i,
            None => {
                *result += &q.pow(crossings(pairs));
                return;
            }
        };
        used[first] = true;
        for second in first + 1..used.len() {
            if used[second] {
                continue;
            }
            used[second] = true;
            pairs.push((first, second));
            recurse(used, pairs, q, result);
            pairs.pop();
            used[second] = false;
        }
        used[first] = false;
    }

    recurse(&mut used, &mut pairs, q, &mut result);
    result
}
