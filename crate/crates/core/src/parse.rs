//! Parser for divisor-class expressions: signed rational combinations of
//! basis labels, e.g. `2L - F̄ + 3/2F′`, with per-lattice ASCII aliases such
//! as `Fb` and `Fp`. A bare `0` denotes the zero class. Errors carry the
//! byte position and what was expected there.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::lattice::{DivisorClass, SurfaceLattice};
use crate::rat::{rat, Rat};

pub fn parse_class(lattice: &SurfaceLattice, input: &str) -> Result<DivisorClass, Error> {
    let coeffs = parse_coefficients(lattice.basis_labels(), lattice.aliases(), input)?;
    lattice.class(coeffs)
}

/// Parses against bare label data; used while a lattice is still being
/// assembled from a configuration file.
pub(crate) fn parse_coefficients(
    labels: &[String],
    aliases: &BTreeMap<String, String>,
    input: &str,
) -> Result<Vec<Rat>, Error> {
    Parser {
        labels,
        aliases,
        input,
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    labels: &'a [String],
    aliases: &'a BTreeMap<String, String>,
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Vec<Rat>, Error> {
        let mut coeffs = vec![Rat::zero(); self.labels.len()];
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.error("expected a class expression"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                break;
            }
            let sign = match self.peek() {
                Some('+') => {
                    self.bump();
                    rat(1)
                }
                Some('-') => {
                    self.bump();
                    rat(-1)
                }
                _ if first => rat(1),
                _ => return Err(self.error("expected `+` or `-` between terms")),
            };
            self.skip_ws();
            self.term(sign, &mut coeffs)?;
            first = false;
        }
        Ok(coeffs)
    }

    fn term(&mut self, sign: Rat, coeffs: &mut [Rat]) -> Result<(), Error> {
        let number = self.number()?;
        self.skip_ws();
        if self.peek() == Some('*') {
            self.bump();
            self.skip_ws();
        }
        match self.label() {
            Some(index) => {
                let coefficient = number.unwrap_or_else(|| rat(1));
                coeffs[index] = &coeffs[index] + &(sign * coefficient);
                Ok(())
            }
            None => match number {
                // a bare rational is only the zero class
                Some(n) if n.is_zero() => Ok(()),
                Some(_) => Err(self.error("expected a basis label after the coefficient")),
                None => Err(self.error(&format!(
                    "expected a coefficient or one of the labels {}",
                    self.labels.join(", ")
                ))),
            },
        }
    }

    /// `digits` or `digits/digits`.
    fn number(&mut self) -> Result<Option<Rat>, Error> {
        let start = self.pos;
        let numerator = self.digits();
        let Some(numerator) = numerator else {
            return Ok(None);
        };
        if self.peek() == Some('/') {
            self.bump();
            let denominator = self
                .digits()
                .ok_or_else(|| self.error("expected digits after `/`"))?;
            if denominator == 0 {
                self.pos = start;
                return Err(self.error("denominator must be nonzero"));
            }
            return Ok(Some(crate::rat::ratio(numerator as i64, denominator as i64)));
        }
        Ok(Some(rat(numerator as i64)))
    }

    fn digits(&mut self) -> Option<u64> {
        let rest = self.rest();
        let len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return None;
        }
        let value = rest[..len].parse::<u64>().ok()?;
        self.pos += len;
        Some(value)
    }

    /// Longest label or alias match at the current position.
    fn label(&mut self) -> Option<usize> {
        let rest = self.rest();
        let mut best: Option<(usize, usize)> = None; // (byte length, basis index)
        for (i, label) in self.labels.iter().enumerate() {
            if rest.starts_with(label.as_str())
                && best.map_or(true, |(len, _)| label.len() > len)
            {
                best = Some((label.len(), i));
            }
        }
        for (alias, target) in self.aliases {
            if rest.starts_with(alias.as_str()) {
                if let Some(i) = self.labels.iter().position(|l| l == target) {
                    if best.map_or(true, |(len, _)| alias.len() > len) {
                        best = Some((alias.len(), i));
                    }
                }
            }
        }
        let (len, index) = best?;
        self.pos += len;
        Some(index)
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }
}
