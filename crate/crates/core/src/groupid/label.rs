use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Names of the groups that occur in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Cyclic(usize),
    /// Dihedral group; the field is the order `2n`.
    Dihedral(usize),
    Sym3,
    /// `SG(order, id)`; only `(30,1)`, `(39,1)` and `(150,5)` have references.
    SmallGroup(usize, usize),
    Unknown(usize),
}

impl GroupLabel {
    pub fn order(&self) -> usize {
        match *self {
            GroupLabel::Cyclic(n) | GroupLabel::Dihedral(n) | GroupLabel::Unknown(n) => n,
            GroupLabel::Sym3 => 6,
            GroupLabel::SmallGroup(n, _) => n,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            GroupLabel::Dihedral(n) => write!(f, "D{n}"),
            GroupLabel::Sym3 => write!(f, "S3"),
            GroupLabel::SmallGroup(n, k) => write!(f, "SG({n},{k})"),
            GroupLabel::Unknown(n) => write!(f, "Unknown({n})"),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupLabel, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadLabel(s.to_string());
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        if t == "S3" {
            return Ok(GroupLabel::Sym3);
        }
        if let Some(body) = t.strip_prefix("SG(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = body.split_once(',').ok_or_else(bad)?;
            return Ok(GroupLabel::SmallGroup(num(a)?, num(b)?));
        }
        if let Some(body) = t.strip_prefix("Unknown(").and_then(|r| r.strip_suffix(')')) {
            return Ok(GroupLabel::Unknown(num(body)?));
        }
        if let Some(n) = t.strip_prefix('C') {
            return Ok(GroupLabel::Cyclic(num(n)?));
        }
        if let Some(n) = t.strip_prefix('D') {
            return Ok(GroupLabel::Dihedral(num(n)?));
        }
        Err(bad())
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
