//! Deterministic rendering of results as text tables, JSON documents, and CSV.
//!
//! Every format is reproducible: terms are sorted by total degree and then
//! lexicographically on the concatenated exponent vectors, parameters inside
//! coefficient strings are alphabetical, and the JSON field order is fixed by
//! the document structs below.  Serialising a document, parsing it back, and
//! serialising again yields byte-identical output, so emitted JSON can be
//! consumed and re-emitted by other tooling without drift.

use serde::{Deserialize, Serialize};

use weylkit_core::{Coefficient, NormalForm, NormalMonomial};

/// One normally ordered term: raise exponents, lower exponents, and the
/// coefficient rendered as a canonical polynomial string.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermDoc {
    /// Raise exponents, one per mode.
    pub x: Vec<u32>,
    /// Lower exponents, one per mode.
    pub d: Vec<u32>,
    /// Canonical coefficient string, e.g. `3/2*q^2 - 1`.
    pub coeff: String,
}

/// A normally ordered polynomial as a self-describing document.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NormalFormDoc {
    /// Number of modes; every exponent vector below has this length.
    pub modes: usize,
    /// The commutation weight: `"1"` when undeformed, `"q"` when symbolic,
    /// otherwise the rational value as a string.
    pub q: String,
    /// Terms in graded lexicographic order.
    pub terms: Vec<TermDoc>,
}

/// One power of an operator inside an exponential expansion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PowerDoc {
    /// The power of the expansion variable this entry multiplies.
    pub n: usize,
    /// Number of modes.
    pub modes: usize,
    /// Commutation weight label, as in [`NormalFormDoc`].
    pub q: String,
    /// Terms in graded lexicographic order.
    pub terms: Vec<TermDoc>,
}

/// An exponential expansion: one normally ordered polynomial per power of
/// the expansion variable, with the `1/n!` factors already multiplied in.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExpDoc {
    /// Highest power included.
    pub order: usize,
    /// One entry per power, ascending from zero.
    pub entries: Vec<PowerDoc>,
}

/// A truncated power series in one variable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesDoc {
    /// Highest power included.
    pub order: usize,
    /// Coefficient strings for powers `0..=order`.
    pub coefficients: Vec<String>,
}

/// A single scalar result (a constant term or a named number).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ValueDoc {
    /// Canonical string for the value.
    pub value: String,
}

/// A batch of labelled diagrams.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiagramsDoc {
    /// Number of gates in every diagram.
    pub size: usize,
    /// Number of diagrams listed.
    pub count: usize,
    /// One rendered diagram per entry, gates separated by `; `.
    pub diagrams: Vec<String>,
}

/// Sort key for a term: total degree first, then the concatenated exponent
/// vectors lexicographically.
fn graded_key(x: &[u32], d: &[u32]) -> (u64, Vec<u32>) {
    let total: u64 = x.iter().chain(d.iter()).map(|&e| u64::from(e)).sum();
    let mut concat = Vec::with_capacity(x.len() + d.len());
    concat.extend_from_slice(x);
    concat.extend_from_slice(d);
    (total, concat)
}

/// The terms of a normal form in graded lexicographic order, smallest first.
pub fn ordered_terms(form: &NormalForm) -> Vec<(Vec<u32>, Vec<u32>, Coefficient)> {
    let mut terms: Vec<(Vec<u32>, Vec<u32>, Coefficient)> = form
        .terms()
        .map(|(monomial, coeff)| (monomial.raises().to_vec(), monomial.lowers().to_vec(), coeff.clone()))
        .collect();
    terms.sort_by(|a, b| graded_key(&a.0, &a.1).cmp(&graded_key(&b.0, &b.1)));
    terms
}

/// Sort bare monomials by the same graded lexicographic order as
/// [`ordered_terms`].
pub fn sort_monomials(monomials: &mut Vec<NormalMonomial>) {
    monomials.sort_by(|a, b| graded_key(a.raises(), a.lowers()).cmp(&graded_key(b.raises(), b.lowers())));
}

/// Render a monomial as text: `1` for the identity, `X^2*D` in one mode,
/// and indexed letters such as `X0*D1^2` when there are several modes.
pub fn monomial_text(x: &[u32], d: &[u32]) -> String {
    let single = x.len() == 1;
    let mut parts: Vec<String> = Vec::new();
    let mut letter = |name: char, mode: usize, exponent: u32| {
        if exponent == 0 {
            return;
        }
        let mut part = String::new();
        part.push(name);
        if !single {
            part.push_str(&mode.to_string());
        }
        if exponent > 1 {
            part.push('^');
            part.push_str(&exponent.to_string());
        }
        parts.push(part);
    };
    for (mode, &exponent) in x.iter().enumerate() {
        letter('X', mode, exponent);
    }
    for (mode, &exponent) in d.iter().enumerate() {
        letter('D', mode, exponent);
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Build the JSON document for one normal form.
pub fn normal_form_doc(form: &NormalForm, q: &str) -> NormalFormDoc {
    let terms = ordered_terms(form)
        .into_iter()
        .map(|(x, d, coeff)| TermDoc { x, d, coeff: coeff.to_string() })
        .collect();
    NormalFormDoc { modes: form.modes(), q: q.to_string(), terms }
}

/// Text table for a normal form: one `monomial: coefficient` line per term.
pub fn normal_form_table(form: &NormalForm) -> String {
    let mut out = String::new();
    for (x, d, coeff) in ordered_terms(form) {
        out.push_str(&monomial_text(&x, &d));
        out.push_str(": ");
        out.push_str(&coeff.to_string());
        out.push('\n');
    }
    out
}

/// CSV for a normal form: header `x0,..,d0,..,coeff`, one row per term.
pub fn normal_form_csv(form: &NormalForm) -> String {
    let modes = form.modes();
    let mut out = String::new();
    for mode in 0..modes {
        out.push_str(&format!("x{mode},"));
    }
    for mode in 0..modes {
        out.push_str(&format!("d{mode},"));
    }
    out.push_str("coeff\n");
    for (x, d, coeff) in ordered_terms(form) {
        for e in x.iter().chain(d.iter()) {
            out.push_str(&e.to_string());
            out.push(',');
        }
        out.push_str(&coeff.to_string());
        out.push('\n');
    }
    out
}

/// Build the JSON document for an exponential expansion.
pub fn exp_doc(powers: &[NormalForm], q: &str) -> ExpDoc {
    let entries = powers
        .iter()
        .enumerate()
        .map(|(n, form)| {
            let terms = ordered_terms(form)
                .into_iter()
                .map(|(x, d, coeff)| TermDoc { x, d, coeff: coeff.to_string() })
                .collect();
            PowerDoc { n, modes: form.modes(), q: q.to_string(), terms }
        })
        .collect();
    ExpDoc { order: powers.len().saturating_sub(1), entries }
}

/// Text table for an exponential expansion: a `power n:` heading followed by
/// the term lines for that power, blocks separated by blank lines.
pub fn exp_table(powers: &[NormalForm]) -> String {
    let mut out = String::new();
    for (n, form) in powers.iter().enumerate() {
        if n > 0 {
            out.push('\n');
        }
        out.push_str(&format!("power {n}:\n"));
        out.push_str(&normal_form_table(form));
    }
    out
}

/// CSV for an exponential expansion: the normal-form columns with a leading
/// `n` column for the power.
pub fn exp_csv(powers: &[NormalForm]) -> String {
    let modes = powers.first().map_or(1, NormalForm::modes);
    let mut out = String::from("n,");
    for mode in 0..modes {
        out.push_str(&format!("x{mode},"));
    }
    for mode in 0..modes {
        out.push_str(&format!("d{mode},"));
    }
    out.push_str("coeff\n");
    for (n, form) in powers.iter().enumerate() {
        for (x, d, coeff) in ordered_terms(form) {
            out.push_str(&n.to_string());
            out.push(',');
            for e in x.iter().chain(d.iter()) {
                out.push_str(&e.to_string());
                out.push(',');
            }
            out.push_str(&coeff.to_string());
            out.push('\n');
        }
    }
    out
}

/// Build the JSON document for a truncated series.
pub fn series_doc(order: usize, coefficients: &[Coefficient]) -> SeriesDoc {
    SeriesDoc {
        order,
        coefficients: coefficients.iter().map(Coefficient::to_string).collect(),
    }
}

/// Text table for a series: one `z^n: coefficient` line per power.
pub fn series_table(coefficients: &[Coefficient]) -> String {
    let mut out = String::new();
    for (n, coeff) in coefficients.iter().enumerate() {
        out.push_str(&format!("z^{n}: {coeff}\n"));
    }
    out
}

/// CSV for a series: header `n,coeff`, one row per power.
pub fn series_csv(coefficients: &[Coefficient]) -> String {
    let mut out = String::from("n,coeff\n");
    for (n, coeff) in coefficients.iter().enumerate() {
        out.push_str(&format!("{n},{coeff}\n"));
    }
    out
}

/// Text form of a scalar result.
pub fn value_table(value: &str) -> String {
    format!("{value}\n")
}

/// CSV form of a scalar result: header `value` and one row.
pub fn value_csv(value: &str) -> String {
    format!("value\n{value}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use weylkit_core::{Letter, OperatorPolynomial, Parameters, Word};

    fn counting_cube() -> NormalForm {
        let params = Parameters::empty();
        let word = Word::new(vec![Letter::raise(0), Letter::lower(0)]);
        let op = OperatorPolynomial::from_word(&params, 1, word).expect("valid word");
        op.normal_order().power(3).expect("matching context")
    }

    #[test]
    fn terms_are_listed_in_graded_order() {
        let form = counting_cube();
        let table = normal_form_table(&form);
        assert_eq!(table, "X*D: 1\nX^2*D^2: 3\nX^3*D^3: 1\n");
    }

    #[test]
    fn json_documents_round_trip_byte_for_byte() {
        let form = counting_cube();
        let doc = normal_form_doc(&form, "1");
        let text = serde_json::to_string(&doc).expect("serialisable");
        let reparsed: NormalFormDoc = serde_json::from_str(&text).expect("parseable");
        let again = serde_json::to_string(&reparsed).expect("serialisable");
        assert_eq!(text, again);
        assert_eq!(doc, reparsed);
    }

    #[test]
    fn csv_rows_flatten_the_exponents() {
        let form = counting_cube();
        let csv = normal_form_csv(&form);
        assert_eq!(csv, "x0,d0,coeff\n1,1,1\n2,2,3\n3,3,1\n");
    }

    #[test]
    fn identity_and_indexed_monomials_render_readably() {
        assert_eq!(monomial_text(&[0], &[0]), "1");
        assert_eq!(monomial_text(&[2], &[1]), "X^2*D");
        assert_eq!(monomial_text(&[1, 0], &[0, 2]), "X0*D1^2");
    }

    #[test]
    fn series_output_carries_one_row_per_power() {
        let params = Parameters::empty();
        let coeffs = vec![
            Coefficient::one(&params),
            Coefficient::from_rational(&params, BigRational::new(3.into(), 2.into())),
        ];
        assert_eq!(series_table(&coeffs), "z^0: 1\nz^1: 3/2\n");
        assert_eq!(series_csv(&coeffs), "n,coeff\n0,1\n1,3/2\n");
        let doc = series_doc(1, &coeffs);
        assert_eq!(doc.coefficients, vec!["1".to_string(), "3/2".to_string()]);
    }
}
