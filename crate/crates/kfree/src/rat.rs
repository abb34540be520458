//! Exact rational thresholds. Every hypothesis comparison in the harness and
//! the CLI goes through [`Rat`]; no floating point is involved anywhere.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// Parses `"p/q"`, a plain integer, or the difference form `"a-p/q"`
/// (e.g. `"1-2/5"` is 3/5).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse rational {s:?}"));
    if let Some((whole, frac)) = s.split_once('-') {
        if !whole.is_empty() && !frac.is_empty() {
            let a: i64 = whole.trim().parse().map_err(|_| bad())?;
            let f = parse_simple(frac).ok_or_else(bad)?;
            return Ok(Rat::from_integer(a) - f);
        }
    }
    parse_simple(s).ok_or_else(bad)
}

fn parse_simple(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => s.parse::<i64>().ok().map(Rat::from_integer),
    }
}

/// A threshold either absolute or expressed as a fraction of the graph order
/// (the `"1-2/5 of-n"` form).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub value: Rat,
    pub of_n: bool,
}

impl Threshold {
    pub fn parse(s: &str) -> Result<Threshold> {
        let mut parts = s.split_whitespace();
        let expr = parts
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty threshold".into()))?;
        let of_n = match parts.next() {
            None => false,
            Some("of-n") => true,
            Some(other) => {
                return Err(Error::InvalidParameter(format!(
                    "unexpected threshold suffix {other:?} (expected \"of-n\")"
                )))
            }
        };
        if parts.next().is_some() {
            return Err(Error::InvalidParameter(format!("trailing tokens in threshold {s:?}")));
        }
        Ok(Threshold {
            value: parse_rat(expr)?,
            of_n,
        })
    }

    /// The bound for a graph of order `n`.
    pub fn bound(&self, n: usize) -> Rat {
        if self.of_n {
            self.value * Rat::from_integer(n as i64)
        } else {
            self.value
        }
    }
}

/// Exact strict comparison `delta > thr * n` by cross multiplication.
pub fn exceeds_fraction_of(delta: usize, thr: Rat, n: usize) -> bool {
    Rat::from_integer(delta as i64) > thr * Rat::from_integer(n as i64)
}
