//! Sparse trivariate polynomials in `(x, y, t)` graded by Heisenberg degree.
//!
//! A monomial `x^b1 y^b2 t^b3` is homogeneous of degree `b1 + b2 + 2*b3`
//! under the dilations `(x, y, t) -> (r x, r y, r^2 t)`. Terms are kept in a
//! `BTreeMap` ordered graded-lexicographically by that degree, with no zero
//! coefficients stored, so structural equality is polynomial equality.

mod basis;
mod ops;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::{Real, Ring, ToReal};

pub use basis::{
    euclid_harmonic_basis, h_harmonic_basis, kernel_basis, kohn_laplacian_matrix, monomials_of_degree, rational_rank,
    Grading, LinearMap,
};
pub use ops::{
    apply_x, apply_y, commutator_check, euclid_gradient, euclid_laplacian, horizontal_gradient, is_euclid_harmonic,
    is_h_harmonic, kohn_laplacian, q_poly, t_poly, EuclidField, HorizontalField,
};

/// Exponent triple of the monomial `x^b1 y^b2 t^b3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex {
    pub b1: u32,
    pub b2: u32,
    pub b3: u32,
}

impl MultiIndex {
    pub const fn new(b1: u32, b2: u32, b3: u32) -> Self {
        Self { b1, b2, b3 }
    }

    /// Weight under the anisotropic dilations: `b1 + b2 + 2*b3`.
    pub const fn heisenberg_degree(&self) -> u32 {
        self.b1 + self.b2 + 2 * self.b3
    }

    /// Ordinary (isotropic) total degree `b1 + b2 + b3`.
    pub const fn total_degree(&self) -> u32 {
        self.b1 + self.b2 + self.b3
    }

    fn sort_key(&self) -> (u32, u32, u32, u32) {
        (self.heisenberg_degree(), self.b1, self.b2, self.b3)
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic: Heisenberg degree first, then exponents of x, y, t.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl Add for MultiIndex {
    type Output = MultiIndex;
    fn add(self, o: MultiIndex) -> MultiIndex {
        MultiIndex::new(self.b1 + o.b1, self.b2 + o.b2, self.b3 + o.b3)
    }
}

/// Polynomial in `(x, y, t)` with coefficients in `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C> {
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Ring> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Poly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(MultiIndex::default(), c)
    }

    pub fn monomial(idx: MultiIndex, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(idx, c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(MultiIndex::new(1, 0, 0), C::one())
    }

    pub fn y() -> Self {
        Self::monomial(MultiIndex::new(0, 1, 0), C::one())
    }

    pub fn t() -> Self {
        Self::monomial(MultiIndex::new(0, 0, 1), C::one())
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (idx, c) in iter {
            p.add_term(idx, c);
        }
        p
    }

    pub fn add_term(&mut self, idx: MultiIndex, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(idx, s);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: MultiIndex) -> C {
        self.terms.get(&idx).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, a)| (*i, a.clone() * c.clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn heisenberg_degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(MultiIndex::heisenberg_degree).collect()
    }

    pub fn max_heisenberg_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::heisenberg_degree).max()
    }

    pub fn max_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::total_degree).max()
    }

    /// `Some(k)` when every term has Heisenberg degree `k`; the zero
    /// polynomial is homogeneous of every degree and reports `None` here.
    pub fn heisenberg_homogeneous_degree(&self) -> Option<u32> {
        let degs = self.heisenberg_degrees();
        if degs.len() == 1 {
            degs.into_iter().next()
        } else {
            None
        }
    }

    /// Part of Heisenberg degree exactly `k`.
    pub fn h_part(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.heisenberg_degree() == k)
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        }
    }

    /// Splits into Heisenberg-homogeneous parts. Summing the values gives
    /// back `self`; absent degrees are omitted.
    pub fn h_decompose(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (i, c) in &self.terms {
            out.entry(i.heisenberg_degree()).or_default().terms.insert(*i, c.clone());
        }
        out
    }

    /// Splits into parts of equal ordinary total degree.
    pub fn euclid_decompose(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (i, c) in &self.terms {
            out.entry(i.total_degree()).or_default().terms.insert(*i, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn to_real<T: Real>(&self) -> Poly<T>
    where
        C: ToReal<T>,
    {
        self.map_coeffs(|c| c.to_real())
    }

    pub fn d_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(i, _)| i.b1 > 0)
                .map(|(i, c)| (MultiIndex::new(i.b1 - 1, i.b2, i.b3), c.clone() * C::from_u32(i.b1))),
        )
    }

    pub fn d_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(i, _)| i.b2 > 0)
                .map(|(i, c)| (MultiIndex::new(i.b1, i.b2 - 1, i.b3), c.clone() * C::from_u32(i.b2))),
        )
    }

    pub fn d_t(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(i, _)| i.b3 > 0)
                .map(|(i, c)| (MultiIndex::new(i.b1, i.b2, i.b3 - 1), c.clone() * C::from_u32(i.b3))),
        )
    }

    /// Multiplies every term by `x^a y^b t^c`.
    pub fn shift(&self, by: MultiIndex) -> Self {
        Self { terms: self.terms.iter().map(|(i, c)| (*i + by, c.clone())).collect() }
    }

    /// Substitutes `x -> sx`, `y -> sy`, `t -> st`.
    pub fn compose(&self, sx: &Self, sy: &Self, st: &Self) -> Self {
        let (mx, my, mt) = self.max_exponents();
        let px = power_table(sx, mx);
        let py = power_table(sy, my);
        let pt = power_table(st, mt);
        let mut out = Self::zero();
        for (i, c) in &self.terms {
            let m = &(&px[i.b1 as usize] * &py[i.b2 as usize]) * &pt[i.b3 as usize];
            out += m.scale(c);
        }
        out
    }

    /// The polynomial `xi -> p(delta_r xi)` for a fixed scalar `r`.
    pub fn dilate(&self, r: &C) -> Self {
        let mut rp = vec![C::one()];
        Self::from_terms(self.terms.iter().map(|(i, c)| {
            let d = i.heisenberg_degree() as usize;
            while rp.len() <= d {
                let last = rp.last().cloned().expect("nonempty");
                rp.push(last * r.clone());
            }
            (*i, c.clone() * rp[d].clone())
        }))
    }

    /// Evaluates at `(x, y, t)`. Powers are built by repeated
    /// multiplication, so a sign flip of an argument flips odd powers exactly.
    pub fn eval(&self, x: &C, y: &C, t: &C) -> C {
        let (mx, my, mt) = self.max_exponents();
        let px = scalar_powers(x, mx);
        let py = scalar_powers(y, my);
        let pt = scalar_powers(t, mt);
        let mut acc = C::zero();
        for (i, c) in &self.terms {
            acc = acc + c.clone() * px[i.b1 as usize].clone() * py[i.b2 as usize].clone() * pt[i.b3 as usize].clone();
        }
        acc
    }

    fn max_exponents(&self) -> (u32, u32, u32) {
        self.terms.keys().fold((0, 0, 0), |(a, b, c), i| (a.max(i.b1), b.max(i.b2), c.max(i.b3)))
    }
}

fn power_table<C: Ring>(p: &Poly<C>, max: u32) -> Vec<Poly<C>> {
    let mut v = vec![Poly::one()];
    for k in 1..=max as usize {
        let next = &v[k - 1] * p;
        v.push(next);
    }
    v
}

fn scalar_powers<C: Ring>(x: &C, max: u32) -> Vec<C> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(C::one());
    for k in 1..=max as usize {
        let next = v[k - 1].clone() * x.clone();
        v.push(next);
    }
    v
}

/// Flattened floating-point polynomial for hot evaluation loops.
#[derive(Clone, Debug)]
pub struct CompiledPoly<T> {
    terms: Vec<([usize; 3], T)>,
    max: [usize; 3],
}

impl<T: Real> CompiledPoly<T> {
    pub fn new<C: ToReal<T> + Ring>(p: &Poly<C>) -> Self {
        let terms: Vec<_> =
            p.terms().map(|(i, c)| ([i.b1 as usize, i.b2 as usize, i.b3 as usize], c.to_real())).collect();
        let max = terms.iter().fold([0; 3], |m, (e, _)| [m[0].max(e[0]), m[1].max(e[1]), m[2].max(e[2])]);
        Self { terms, max }
    }

    pub fn eval(&self, x: T, y: T, t: T) -> T {
        const N: usize = 17;
        if self.max.iter().all(|&m| m < N) {
            let mut px = [T::one(); N];
            let mut py = [T::one(); N];
            let mut pt = [T::one(); N];
            for k in 1..=self.max[0] {
                px[k] = px[k - 1] * x;
            }
            for k in 1..=self.max[1] {
                py[k] = py[k - 1] * y;
            }
            for k in 1..=self.max[2] {
                pt[k] = pt[k - 1] * t;
            }
            let mut acc = T::zero();
            for (e, c) in &self.terms {
                acc = acc + *c * px[e[0]] * py[e[1]] * pt[e[2]];
            }
            acc
        } else {
            let mut acc = T::zero();
            for (e, c) in &self.terms {
                acc = acc + *c * x.powi(e[0] as i32) * y.powi(e[1] as i32) * t.powi(e[2] as i32);
            }
            acc
        }
    }
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Ring> AddAssign<Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: Poly<C>) {
        for (i, c) in rhs.terms {
            self.add_term(i, c);
        }
    }
}

impl<C: Ring> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (i, c) in &rhs.terms {
            self.add_term(*i, c.clone());
        }
    }
}

impl<C: Ring> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (i, c) in &rhs.terms {
            self.add_term(*i, -c.clone());
        }
    }
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += rhs;
        self
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: self.terms.iter().map(|(i, c)| (*i, -c.clone())).collect() }
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(*i + *j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

/// Canonical rendering; see [`crate::parse::format`].
impl fmt::Display for Poly<crate::Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format(self))
    }
}
