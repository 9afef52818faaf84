use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// Values for named parameters.
pub type Assignment = BTreeMap<String, CycNum>;

/// Product of parameter powers, sorted by name, all exponents positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerProduct(pub Vec<(String, u32)>);

impl PowerProduct {
    pub fn one() -> PowerProduct {
        PowerProduct(Vec::new())
    }

    pub fn var(name: &str) -> PowerProduct {
        PowerProduct(vec![(name.to_string(), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &PowerProduct) -> PowerProduct {
        let mut m: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (n, e) in &o.0 {
            *m.entry(n.clone()).or_insert(0) += e;
        }
        PowerProduct(m.into_iter().collect())
    }

    pub fn exponent_of(&self, name: &str) -> u32 {
        self.0.iter().find(|(n, _)| n == name).map_or(0, |(_, e)| *e)
    }

    fn without(&self, name: &str) -> PowerProduct {
        PowerProduct(self.0.iter().filter(|(n, _)| n != name).cloned().collect())
    }
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial in named parameters with cyclotomic coefficients; no zero
/// terms are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamPoly {
    terms: BTreeMap<PowerProduct, CycNum>,
}

impl ParamPoly {
    pub fn zero() -> ParamPoly {
        ParamPoly::default()
    }

    pub fn constant(c: CycNum) -> ParamPoly {
        let mut p = ParamPoly::zero();
        p.add_term(PowerProduct::one(), c);
        p
    }

    pub fn param(name: &str) -> ParamPoly {
        let mut p = ParamPoly::zero();
        p.add_term(PowerProduct::var(name), CycNum::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PowerProduct, CycNum)>) -> ParamPoly {
        let mut p = ParamPoly::zero();
        for (pp, c) in terms {
            p.add_term(pp, c);
        }
        p
    }

    pub fn add_term(&mut self, pp: PowerProduct, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&pp) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&pp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(pp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerProduct, &CycNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value if no parameter occurs.
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(CycNum::zero()),
            1 => self.terms.get(&PowerProduct::one()).cloned(),
            _ => None,
        }
    }

    pub fn params(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|pp| pp.0.iter().map(|(n, _)| n.clone()))
            .collect()
    }

    pub fn scale(&self, c: &CycNum) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(pp, x)| (pp.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::constant(CycNum::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the assigned parameters, leaving the others symbolic.
    pub fn substitute(&self, assign: &Assignment) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (pp, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (n, e) in &pp.0 {
                match assign.get(n) {
                    Some(v) => coeff = &coeff * &v.pow(*e as u64),
                    None => rest.push((n.clone(), *e)),
                }
            }
            out.add_term(PowerProduct(rest), coeff);
        }
        out
    }

    /// Full evaluation; every parameter must be assigned.
    pub fn evaluate(&self, assign: &Assignment) -> Result<CycNum> {
        if let Some(missing) = self.params().into_iter().find(|p| !assign.contains_key(p)) {
            return Err(Error::MissingParameter(missing));
        }
        Ok(self.substitute(assign).as_constant().expect("all parameters assigned"))
    }

    pub fn degree_in(&self, name: &str) -> Option<u32> {
        self.terms.keys().map(|pp| pp.exponent_of(name)).max()
    }

    /// Coefficients with respect to `name`, ascending; empty for zero.
    pub fn coefficients_in(&self, name: &str) -> Vec<ParamPoly> {
        let Some(d) = self.degree_in(name) else {
            return Vec::new();
        };
        let mut out = vec![ParamPoly::zero(); d as usize + 1];
        for (pp, c) in &self.terms {
            out[pp.exponent_of(name) as usize].add_term(pp.without(name), c.clone());
        }
        out
    }

    /// Whether a nonzero `self` is a scalar times a single power product.
    pub fn single_term(&self) -> Option<(&PowerProduct, &CycNum)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Number of top-level summands `Display` emits.
    pub(crate) fn display_summands(&self) -> usize {
        match self.single_term() {
            Some((pp, c)) if pp.is_one() => c.display_terms(),
            Some(_) => 1,
            None => self.terms.len(),
        }
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (pp, c) in &rhs.terms {
            out.add_term(pp.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (pp, c) in &rhs.terms {
            out.add_term(pp.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &rhs.terms {
                out.add_term(p1.mul(p2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(pp, c)| (pp.clone(), -c)).collect() }
    }
}

fn term_string(pp: &PowerProduct, c: &CycNum) -> String {
    if pp.is_one() {
        return c.to_string();
    }
    if c.is_one() {
        return pp.to_string();
    }
    if (-c).is_one() {
        return format!("-{pp}");
    }
    if c.display_terms() > 1 {
        format!("({c})*{pp}")
    } else {
        format!("{c}*{pp}")
    }
}

pub(crate) fn join_signed(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_signed(self.terms.iter().map(|(pp, c)| term_string(pp, c))))
    }
}
