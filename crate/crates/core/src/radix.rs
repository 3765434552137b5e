//! Mixed-radix positional codes.
//!
//! A tuple `(i_0, …, i_{k-1})` with `i_x < d_x` is sent to its position in the
//! lexicographic order of `d_0 × … × d_{k-1}`, the first digit being the most
//! significant. The binary case `d = (n, m)` is the familiar `i·m + j`.
//!
//! The free functions accept any radices, including 0 and 1, so that products
//! of finite functions can be flattened even when a factor is empty or a
//! singleton. [`Radices`] is the validated form (every entry at least 2) used
//! for representing split equivalences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Product of the radices; the empty product is 1.
pub fn radix_product(radices: &[usize]) -> usize {
    radices.iter().product()
}

/// Position of `digits` in the lexicographic order of the product set.
pub fn mr_encode(radices: &[usize], digits: &[usize]) -> Result<usize> {
    if radices.len() != digits.len() {
        return Err(Error::LengthMismatch(format!(
            "{} digits for {} radices",
            digits.len(),
            radices.len()
        )));
    }
    let mut code = 0;
    for (pos, (&radix, &digit)) in radices.iter().zip(digits).enumerate() {
        if digit >= radix {
            return Err(Error::OutOfRange(format!(
                "digit {digit} at position {pos} is not below radix {radix}"
            )));
        }
        code = code * radix + digit;
    }
    Ok(code)
}

/// Inverse of [`mr_encode`].
pub fn mr_decode(radices: &[usize], code: usize) -> Result<Vec<usize>> {
    let total = radix_product(radices);
    if code >= total {
        return Err(Error::OutOfRange(format!(
            "code {code} is not below the radix product {total}"
        )));
    }
    let mut digits = vec![0; radices.len()];
    let mut rest = code;
    for (slot, &radix) in digits.iter_mut().zip(radices).rev() {
        *slot = rest % radix;
        rest /= radix;
    }
    Ok(digits)
}

/// A sequence of radices, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Radices(Vec<usize>);

impl Radices {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&d| d < 2) {
            return Err(Error::OutOfRange(format!(
                "radix {} at position {pos} is below 2",
                entries[pos]
            )));
        }
        Ok(Radices(entries))
    }

    pub fn constant(radix: usize, len: usize) -> Result<Self> {
        Self::new(vec![radix; len])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> usize {
        radix_product(&self.0)
    }

    pub fn encode(&self, digits: &[usize]) -> Result<usize> {
        mr_encode(&self.0, digits)
    }

    pub fn decode(&self, code: usize) -> Result<Vec<usize>> {
        mr_decode(&self.0, code)
    }

    /// Parses whitespace- or comma-separated radices, e.g. `"3 2 2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let entries = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>().map_err(|_| Error::Syntax {
                    position: 0,
                    message: format!("`{s}` is not a radix"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl TryFrom<Vec<usize>> for Radices {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<Radices> for Vec<usize> {
    fn from(r: Radices) -> Self {
        r.0
    }
}

impl fmt::Display for Radices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}
