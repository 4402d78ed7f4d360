//! Recursive-descent parser for operator expressions.
//!
//! Grammar, with `uint` a decimal integer and `idx` a decimal mode index:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | symbol | 'X' idx? | 'D' idx? | '(' expr ')'
//! ```
//!
//! Juxtaposition is not a product: `X D` is a syntax error, `X*D` is the
//! two-letter word. Identifiers `X`/`D` (either case) with an optional
//! digit suffix are letters; every other identifier is a scalar parameter.
//! Rational literals look like `3` or `3/2`. There is no unary minus;
//! negative scalars arise from subtraction, e.g. `0 - X`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use weylkit_core::LetterKind;

use crate::ast::Expression;
use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    LeftParen,
    RightParen,
    Number(BigRational),
    Ident(String),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Plus => "'+'".to_owned(),
            Token::Minus => "'-'".to_owned(),
            Token::Star => "'*'".to_owned(),
            Token::Caret => "'^'".to_owned(),
            Token::LeftParen => "'('".to_owned(),
            Token::RightParen => "')'".to_owned(),
            Token::Number(value) => format!("number {value}"),
            Token::Ident(name) => format!("identifier {name}"),
        }
    }
}

fn error(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError { offset, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                tokens.push((start, Token::Plus));
                i += 1;
            }
            b'-' => {
                tokens.push((start, Token::Minus));
                i += 1;
            }
            b'*' => {
                tokens.push((start, Token::Star));
                i += 1;
            }
            b'^' => {
                tokens.push((start, Token::Caret));
                i += 1;
            }
            b'(' => {
                tokens.push((start, Token::LeftParen));
                i += 1;
            }
            b')' => {
                tokens.push((start, Token::RightParen));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numerator: BigInt = text[start..i]
                    .parse()
                    .expect("a run of ASCII digits parses as an integer");
                let denominator = if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == den_start {
                        return Err(error(den_start, "expected digits after '/' in a rational"));
                    }
                    let denominator: BigInt = text[den_start..i]
                        .parse()
                        .expect("a run of ASCII digits parses as an integer");
                    if denominator == BigInt::from(0) {
                        return Err(error(den_start, "zero denominator in a rational"));
                    }
                    denominator
                } else {
                    BigInt::from(1)
                };
                tokens.push((start, Token::Number(BigRational::new(numerator, denominator))));
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_owned())));
            }
            other => {
                return Err(error(start, format!("unexpected character '{}'", other as char)));
            }
        }
    }
    Ok(tokens)
}

/// Classifies an identifier: `X`/`D` in either case with an optional digit
/// suffix is a letter on that mode; anything else is a parameter name.
fn classify(name: &str, offset: usize) -> Result<Expression, ParseError> {
    let mut chars = name.chars();
    let head = chars.next().expect("identifiers are non-empty");
    let rest = chars.as_str();
    let kind = match head {
        'X' | 'x' => LetterKind::Raise,
        'D' | 'd' => LetterKind::Lower,
        _ => return Ok(Expression::Symbol(name.to_owned())),
    };
    if rest.is_empty() {
        return Ok(Expression::Letter { kind, mode: 0 });
    }
    if rest.bytes().all(|b| b.is_ascii_digit()) {
        let mode = rest
            .parse::<u32>()
            .map_err(|_| error(offset, format!("mode index too large in '{name}'")))?;
        return Ok(Expression::Letter { kind, mode });
    }
    Ok(Expression::Symbol(name.to_owned()))
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn end_offset(&self) -> usize {
        self.text.len()
    }

    fn take(&mut self) -> Option<(usize, Token)> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let mut terms = vec![self.term()?];
        while let Some((_, token)) = self.peek() {
            let negate = match token {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let term = self.term()?;
            if negate {
                let minus_one = Expression::Rational(BigRational::from_integer((-1).into()));
                terms.push(match term {
                    Expression::Product(mut children) => {
                        children.insert(0, minus_one);
                        Expression::Product(children)
                    }
                    other => Expression::Product(vec![minus_one, other]),
                });
            } else {
                terms.push(term);
            }
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expression::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expression, ParseError> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expression::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expression, ParseError> {
        let atom = self.atom()?;
        if !matches!(self.peek(), Some((_, Token::Caret))) {
            return Ok(atom);
        }
        self.pos += 1;
        let (offset, token) = self
            .take()
            .ok_or_else(|| error(self.end_offset(), "expected an exponent after '^'"))?;
        let Token::Number(value) = token else {
            return Err(error(offset, format!("expected an exponent, found {}", token.describe())));
        };
        if !value.is_integer() {
            return Err(error(offset, "exponent must be a nonnegative integer"));
        }
        let exponent = value
            .to_integer()
            .to_u32()
            .ok_or_else(|| error(offset, "exponent overflow"))?;
        Ok(Expression::Power(Box::new(atom), exponent))
    }

    fn atom(&mut self) -> Result<Expression, ParseError> {
        let (offset, token) = self
            .take()
            .ok_or_else(|| error(self.end_offset(), "expected an operand"))?;
        match token {
            Token::Number(value) => Ok(Expression::Rational(value)),
            Token::Ident(name) => classify(&name, offset),
            Token::LeftParen => {
                let inner = self.expr()?;
                match self.take() {
                    Some((_, Token::RightParen)) => Ok(inner),
                    Some((at, other)) => {
                        Err(error(at, format!("expected ')', found {}", other.describe())))
                    }
                    None => Err(error(self.end_offset(), "expected ')'")),
                }
            }
            other => Err(error(offset, format!("expected an operand, found {}", other.describe()))),
        }
    }
}

/// Parses an operator expression, reporting the first offending byte on
/// failure.
///
/// # Errors
///
/// [`ParseError`] with the 0-based byte offset of the first token that
/// cannot be accepted, including exponent overflow past `u32`.
pub fn parse_expression(text: &str) -> Result<Expression, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { text, tokens, pos: 0 };
    let expression = parser.expr()?;
    if let Some((offset, token)) = parser.peek() {
        return Err(error(*offset, format!("unexpected {} after the expression", token.describe())));
    }
    Ok(expression)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter(kind: LetterKind, mode: u32) -> Expression {
        Expression::Letter { kind, mode }
    }

    #[test]
    fn powers_bind_tighter_than_products() {
        let parsed = parse_expression("X^2*D").unwrap();
        assert_eq!(
            parsed,
            Expression::Product(vec![
                Expression::Power(Box::new(letter(LetterKind::Raise, 0)), 2),
                letter(LetterKind::Lower, 0),
            ])
        );
    }

    #[test]
    fn parenthesized_sums_can_be_raised() {
        let parsed = parse_expression("(X+D)^2").unwrap();
        assert_eq!(
            parsed,
            Expression::Power(
                Box::new(Expression::Sum(vec![
                    letter(LetterKind::Raise, 0),
                    letter(LetterKind::Lower, 0),
                ])),
                2,
            )
        );
    }

    #[test]
    fn unknown_identifiers_become_parameters() {
        let parsed = parse_expression("a*X + b*D").unwrap();
        assert_eq!(
            parsed,
            Expression::Sum(vec![
                Expression::Product(vec![
                    Expression::Symbol("a".to_owned()),
                    letter(LetterKind::Raise, 0),
                ]),
                Expression::Product(vec![
                    Expression::Symbol("b".to_owned()),
                    letter(LetterKind::Lower, 0),
                ]),
            ])
        );
    }

    #[test]
    fn digit_suffixes_select_modes_and_other_tails_do_not() {
        assert_eq!(parse_expression("X1").unwrap(), letter(LetterKind::Raise, 1));
        assert_eq!(parse_expression("d2").unwrap(), letter(LetterKind::Lower, 2));
        assert_eq!(
            parse_expression("delta").unwrap(),
            Expression::Symbol("delta".to_owned())
        );
    }

    #[test]
    fn juxtaposition_is_rejected_with_its_offset() {
        let err = parse_expression("X D").unwrap_err();
        assert_eq!(err.offset, 2);
        let err = parse_expression("2X").unwrap_err();
        assert_eq!(err.offset, 1);
    }

    #[test]
    fn rational_literals_carry_their_value() {
        let parsed = parse_expression("3/2").unwrap();
        assert_eq!(
            parsed,
            Expression::Rational(BigRational::new(3.into(), 2.into()))
        );
        assert_eq!(parse_expression("3 / 2").unwrap_err().offset, 2);
    }

    #[test]
    fn exponent_overflow_is_reported_at_the_exponent() {
        let err = parse_expression("X^4294967296").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.message.contains("overflow"), "{}", err.message);
    }

    #[test]
    fn there_is_no_unary_minus() {
        let err = parse_expression("-X").unwrap_err();
        assert_eq!(err.offset, 0);
    }

    #[test]
    fn subtraction_scales_the_following_term() {
        let parsed = parse_expression("X - 2*D").unwrap();
        let minus_one = Expression::Rational(BigRational::from_integer((-1).into()));
        assert_eq!(
            parsed,
            Expression::Sum(vec![
                letter(LetterKind::Raise, 0),
                Expression::Product(vec![
                    minus_one,
                    Expression::Rational(BigRational::from_integer(2.into())),
                    letter(LetterKind::Lower, 0),
                ]),
            ])
        );
    }
}
