//! Coefficient lists: comma-separated, highest degree first, each entry a
//! real or a complex token such as `1+2i`, `-0.5i` or `3e-2-4i`.

use sextica::{ComplexScalar, Polynomial};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty coefficient list")]
    Empty,
    #[error("cannot parse coefficient {position} ({token:?})")]
    BadToken { position: usize, token: String },
    #[error("coefficient {position} is not finite")]
    NonFinite { position: usize },
    #[error("leading coefficient is zero")]
    LeadingZero,
}

impl ParseError {
    /// 1-based index of the offending entry, when there is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Self::BadToken { position, .. } | Self::NonFinite { position } => Some(*position),
            Self::LeadingZero => Some(1),
            Self::Empty => None,
        }
    }
}

fn parse_real(s: &str) -> Option<f64> {
    // reject the words f64::from_str accepts
    if s.is_empty() || s.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') {
        return None;
    }
    s.parse().ok()
}

fn parse_imag(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => parse_real(s),
    }
}

/// Parses a single entry.
pub fn parse_complex(token: &str) -> Option<ComplexScalar> {
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(&t).map(|re| ComplexScalar::new(re, 0.0));
    };
    // the split is the last sign that is not at the start and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Some(ComplexScalar::new(parse_real(&body[..k])?, parse_imag(&body[k..])?)),
        None => Some(ComplexScalar::new(0.0, parse_imag(body)?)),
    }
}

pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut coeffs = Vec::new();
    for (k, token) in text.split(',').enumerate() {
        let position = k + 1;
        let z = parse_complex(token)
            .ok_or_else(|| ParseError::BadToken { position, token: token.trim().to_string() })?;
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(ParseError::NonFinite { position });
        }
        coeffs.push(z);
    }
    if coeffs[0].re == 0.0 && coeffs[0].im == 0.0 {
        return Err(ParseError::LeadingZero);
    }
    Polynomial::new(coeffs).map_err(|_| ParseError::LeadingZero)
}
