use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::param::{join_signed, Assignment, ParamPoly};
use super::Monomial3;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::projlinear::ProjMat;

/// Homogeneous polynomial of a fixed degree in `X, Y, Z` with parametric
/// coefficients. Every stored monomial has degree `degree`; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial3, ParamPoly>,
}

type NumForm = HashMap<Monomial3, CycNum>;

fn form_mul(a: &NumForm, b: &NumForm) -> NumForm {
    let mut out: NumForm = HashMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = ma.mul(mb);
            let p = ca * cb;
            match out.get_mut(&m) {
                Some(v) => *v = &*v + &p,
                None => {
                    out.insert(m, p);
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl HomPoly {
    /// The zero form of degree `d`.
    pub fn zero(degree: u32) -> HomPoly {
        HomPoly { degree, terms: BTreeMap::new() }
    }

    /// Builds a form from terms; duplicate monomials are summed.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial3, ParamPoly)>,
    ) -> Result<HomPoly> {
        let mut f = HomPoly::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::NotHomogeneous(degree, m.degree()));
            }
            f.add_term(m, &c);
        }
        Ok(f)
    }

    /// Numeric form with the given monomials and coefficients.
    pub fn from_numeric(degree: u32, terms: impl IntoIterator<Item = (Monomial3, CycNum)>) -> Result<HomPoly> {
        HomPoly::from_terms(degree, terms.into_iter().map(|(m, c)| (m, ParamPoly::constant(c))))
    }

    /// Sum of the given monomials, each with coefficient one.
    pub fn sum_of_monomials(degree: u32, monos: &[Monomial3]) -> Result<HomPoly> {
        HomPoly::from_numeric(degree, monos.iter().map(|m| (*m, CycNum::one())))
    }

    /// Generic form of degree `d` with one parameter per monomial, named
    /// `{prefix}_{i}_{j}_{k}`; monomials containing the `absent` variable
    /// are left out.
    pub fn generic(degree: u32, absent: Option<usize>, prefix: &str) -> HomPoly {
        let mut f = HomPoly::zero(degree);
        for m in Monomial3::all_of_degree(degree) {
            if absent.is_some_and(|v| m.0[v] > 0) {
                continue;
            }
            let [i, j, k] = m.0;
            f.add_term(m, &ParamPoly::param(&format!("{prefix}_{i}_{j}_{k}")));
        }
        f
    }

    pub(crate) fn add_term(&mut self, m: Monomial3, c: &ParamPoly) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial3, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial3) -> Option<&ParamPoly> {
        self.terms.get(m)
    }

    pub fn support(&self) -> BTreeSet<Monomial3> {
        self.terms.keys().copied().collect()
    }

    pub fn params(&self) -> BTreeSet<String> {
        self.terms.values().flat_map(|c| c.params()).collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.terms.values().all(|c| c.as_constant().is_some())
    }

    /// Numeric coefficients; `None` if a parameter occurs.
    pub fn numeric_terms(&self) -> Option<Vec<(Monomial3, CycNum)>> {
        self.terms.iter().map(|(m, c)| Some((*m, c.as_constant()?))).collect()
    }

    /// Smallest conductor over which all numeric coefficients are written.
    pub fn conductor(&self) -> u32 {
        let mut l = 1u32;
        for c in self.terms.values() {
            for (_, x) in c.terms() {
                let n = x.conductor();
                l = l / num_integer::gcd(l, n) * n;
            }
        }
        l
    }

    pub fn scale(&self, c: &ParamPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree);
        for (m, x) in &self.terms {
            out.add_term(*m, &(x * c));
        }
        out
    }

    pub fn scale_num(&self, c: &CycNum) -> HomPoly {
        self.scale(&ParamPoly::constant(c.clone()))
    }

    pub fn add(&self, o: &HomPoly) -> Result<HomPoly> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != o.degree {
            return Err(Error::NotHomogeneous(self.degree, o.degree));
        }
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &HomPoly) -> Result<HomPoly> {
        self.add(&o.scale(&ParamPoly::constant(CycNum::from_int(-1))))
    }

    pub fn mul(&self, o: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + o.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Formal partial derivatives `(F_X, F_Y, F_Z)`.
    pub fn partials(&self) -> [HomPoly; 3] {
        let d = self.degree.saturating_sub(1);
        [0, 1, 2].map(|v| {
            let mut out = HomPoly::zero(d);
            for (m, c) in &self.terms {
                let e = m.0[v];
                if e == 0 {
                    continue;
                }
                let mut q = m.0;
                q[v] -= 1;
                out.add_term(Monomial3(q), &c.scale(&CycNum::from_int(e as i64)));
            }
            out
        })
    }

    /// Sum of the terms whose monomial exponent `max{i, j, k}` is largest.
    pub fn core(&self) -> Result<HomPoly> {
        let top = self.terms.keys().map(Monomial3::exponent).max().ok_or(Error::ZeroPolynomial)?;
        let terms = self.terms.iter().filter(|(m, _)| m.exponent() == top);
        Ok(HomPoly { degree: self.degree, terms: terms.map(|(m, c)| (*m, c.clone())).collect() })
    }

    /// Substitutes every parameter; missing ones are an error.
    pub fn specialize(&self, assign: &Assignment) -> Result<HomPoly> {
        if let Some(p) = self.params().into_iter().find(|p| !assign.contains_key(p)) {
            return Err(Error::MissingParameter(p));
        }
        Ok(self.substitute_params(assign))
    }

    /// Substitutes the assigned parameters only.
    pub fn substitute_params(&self, assign: &Assignment) -> HomPoly {
        let mut out = HomPoly::zero(self.degree);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.substitute(assign));
        }
        out
    }

    /// `F(M·(X, Y, Z)^T)` for a 3x3 array of entries.
    pub fn substitute_rows(&self, rows: &[[CycNum; 3]; 3]) -> HomPoly {
        let linear: Vec<NumForm> = rows
            .iter()
            .map(|row| {
                let mut f = NumForm::new();
                for (v, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        f.insert(Monomial3::pure(v, 1), c.clone());
                    }
                }
                f
            })
            .collect();
        let mut powers: Vec<Vec<NumForm>> = Vec::new();
        for l in &linear {
            let mut ps = vec![NumForm::from([(Monomial3::new(0, 0, 0), CycNum::one())])];
            for e in 1..=self.degree as usize {
                let next = form_mul(&ps[e - 1], l);
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut out = HomPoly::zero(self.degree);
        for (m, c) in &self.terms {
            let [i, j, k] = m.0.map(|e| e as usize);
            let prod = form_mul(&form_mul(&powers[0][i], &powers[1][j]), &powers[2][k]);
            for (pm, pc) in prod {
                out.add_term(pm, &c.scale(&pc));
            }
        }
        out
    }

    /// `F(M·(X, Y, Z)^T)`; composing twice satisfies
    /// `F.substitute_linear(M).substitute_linear(N) = F.substitute_linear(M·N)`.
    pub fn substitute_linear(&self, m: &ProjMat) -> HomPoly {
        self.substitute_rows(m.rows())
    }

    /// `Some(lambda)` when `F∘M = lambda·F` with `lambda` free of parameters.
    pub fn is_invariant(&self, m: &ProjMat) -> Option<CycNum> {
        let g = self.substitute_linear(m);
        self.proportionality(&g)
    }

    /// `Some(lambda)` when `g = lambda·self` with a numeric `lambda`.
    pub fn proportionality(&self, g: &HomPoly) -> Option<CycNum> {
        let Some((m0, f0)) = self.terms.iter().next() else {
            return g.is_zero().then(CycNum::one);
        };
        let (pp, c) = f0.terms().next().unwrap();
        let g0 = g.terms.get(m0)?;
        let gc = g0.terms().find(|(p, _)| *p == pp).map(|(_, c)| c.clone())?;
        let lambda = &gc * &c.inv().ok()?;
        if g.terms.len() != self.terms.len() {
            return None;
        }
        let scaled = self.scale_num(&lambda);
        (scaled == *g).then_some(lambda)
    }

    /// Checks `d·F = X·F_X + Y·F_Y + Z·F_Z`.
    pub fn satisfies_euler_identity(&self) -> bool {
        let [fx, fy, fz] = self.partials();
        let var = |v: usize| {
            HomPoly::sum_of_monomials(1, &[Monomial3::pure(v, 1)]).expect("degree one")
        };
        let lhs = var(0).mul(&fx);
        let lhs = lhs.add(&var(1).mul(&fy)).and_then(|s| s.add(&var(2).mul(&fz)));
        match lhs {
            Ok(s) => s == self.scale_num(&CycNum::from_int(self.degree as i64)),
            Err(_) => false,
        }
    }
}

fn coeff_prefix(c: &ParamPoly) -> String {
    if c.display_summands() > 1 {
        return format!("({c})");
    }
    c.to_string()
}

/// Terms in graded-lex order with `X^d` first; multi-summand coefficients
/// are parenthesized.
impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.terms.iter().rev().map(|(m, c)| {
            let pre = coeff_prefix(c);
            if m.degree() == 0 {
                return pre;
            }
            match pre.as_str() {
                "1" => m.to_string(),
                "-1" => format!("-{m}"),
                _ => format!("{pre}*{m}"),
            }
        });
        write!(f, "{}", join_signed(parts))
    }
}
