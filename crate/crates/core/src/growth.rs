//! Growth series of automaton languages as exact rational functions.
//!
//! For a start state `e`, a 0/1 acceptance vector `w` and transfer matrix `M`,
//! the series is `sum_r (e^T M^r w) t^r = e^T (I - tM)^{-1} w`. Two routes
//! produce it:
//!
//! * the determinant route takes `det(I - tM)` as the reversed characteristic
//!   polynomial of `M` and recovers the numerator from the first `n` streamed
//!   coefficients;
//! * the Berlekamp–Massey route finds the shortest linear recurrence of
//!   `2n + 10` streamed coefficients over the rationals.
//!
//! Both land on the same canonical [`RationalFunction`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::automaton::{GeodesicAutomaton, TransitionMatrix};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::oracle::{CountTable, COUNT_TABLE_SCHEMA};
use crate::poly::IntPolynomial;
use crate::rational::RationalFunction;
use crate::spectral::char_poly_matrix;

/// Exact counts `f(r) = e_start^T M^r w`, one matrix application per term.
#[derive(Clone, Debug)]
pub struct CoefficientStream {
    successors: Vec<Vec<(usize, u32)>>,
    weights: Vec<bool>,
    current: Vec<BigInt>,
}

impl CoefficientStream {
    pub fn new(m: &TransitionMatrix, start: usize, weights: &[bool]) -> Result<Self> {
        let n = m.dim();
        if weights.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: weights.len() });
        }
        if start >= n {
            return Err(Error::DimensionMismatch { expected: n, got: start });
        }
        let mut current = vec![BigInt::zero(); n];
        current[start] = BigInt::one();
        Ok(CoefficientStream { successors: m.successors(), weights: weights.to_vec(), current })
    }

    pub fn state_count(&self) -> usize {
        self.current.len()
    }

    /// Collect the next `k` terms.
    pub fn take_terms(&mut self, k: usize) -> Vec<BigInt> {
        self.by_ref().take(k).collect()
    }
}

impl Iterator for CoefficientStream {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let value = self
            .current
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w)
            .map(|(c, _)| c)
            .sum();
        let mut next = vec![BigInt::zero(); self.current.len()];
        for (i, c) in self.current.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(j, mult) in &self.successors[i] {
                if mult == 1 {
                    next[j] += c;
                } else {
                    next[j] += c * mult;
                }
            }
        }
        self.current = next;
        Some(value)
    }
}

pub fn stream_coefficients(m: &TransitionMatrix, start: usize, weights: &[bool]) -> Result<CoefficientStream> {
    CoefficientStream::new(m, start, weights)
}

/// `det(I - tM)` as the coefficient reversal of `det(xI - M)`.
pub fn resolvent_denominator(m: &TransitionMatrix) -> IntPolynomial {
    char_poly_matrix(&m.to_int_matrix()).reversed(m.dim())
}

/// Series of `e_start^T (I - tM)^{-1} w` through the determinant.
pub fn rational_by_determinant(m: &TransitionMatrix, start: usize, weights: &[bool]) -> Result<RationalFunction> {
    let n = m.dim();
    let mut stream = CoefficientStream::new(m, start, weights)?;
    let den = resolvent_denominator(m);
    let head = IntPolynomial::new(stream.take_terms(n));
    let num = (&den * &head).truncate(n);
    RationalFunction::new(num, den)
}

/// Shortest linear recurrence of a sequence over the rationals.
///
/// Returns the connection polynomial `C(t) = 1 + c_1 t + ... ` and the linear
/// complexity `L`, so that `sum_{j=0}^{L} c_j s_{i-j} = 0` for every `i >= L`.
pub fn berlekamp_massey(seq: &[BigInt]) -> (Vec<BigRational>, usize) {
    let s: Vec<BigRational> = seq.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last = BigRational::one();
    for i in 0..s.len() {
        let mut d = s[i].clone();
        for j in 1..=l.min(c.len() - 1) {
            d += &c[j] * &s[i - j];
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = &d / &last;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            c[j + shift] -= &coef * bj;
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            last = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    (c, l)
}

fn integer_poly_from_rationals(coeffs: &[BigRational], scale: &BigInt) -> IntPolynomial {
    IntPolynomial::new(
        coeffs
            .iter()
            .map(|c| {
                let v = c * BigRational::from_integer(scale.clone());
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect(),
    )
}

/// Rebuild a rational function from `2n + 10` terms of a stream whose
/// transfer matrix has `state_count` states.
pub fn rational_by_berlekamp_massey(stream: &mut CoefficientStream, state_count: usize) -> Result<RationalFunction> {
    let terms = stream.take_terms(2 * state_count + 10);
    rational_from_terms(&terms, state_count)
}

/// Berlekamp–Massey reconstruction from an explicit coefficient list.
pub fn rational_from_terms(terms: &[BigInt], max_order: usize) -> Result<RationalFunction> {
    let (conn, l) = berlekamp_massey(terms);
    if l > max_order {
        return Err(Error::RecurrenceTooLong { order: l, bound: max_order });
    }
    let scale = conn.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let den = integer_poly_from_rationals(&conn, &scale);
    let series = IntPolynomial::new(terms.to_vec());
    let num = (&den * &series).truncate(l);
    RationalFunction::new(num, den)
}

/// How a series is turned into a rational function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SeriesMethod {
    #[default]
    Determinant,
    BerlekampMassey,
}

fn series_for(m: &TransitionMatrix, start: usize, weights: &[bool], method: SeriesMethod) -> Result<RationalFunction> {
    match method {
        SeriesMethod::Determinant => rational_by_determinant(m, start, weights),
        SeriesMethod::BerlekampMassey => {
            let mut s = CoefficientStream::new(m, start, weights)?;
            rational_by_berlekamp_massey(&mut s, m.dim())
        }
    }
}

fn indicator(n: usize, on: &[usize]) -> Vec<bool> {
    let mut w = vec![false; n];
    for &i in on {
        w[i] = true;
    }
    w
}

/// A built automaton with its transfer matrix, for computing several series.
#[derive(Clone, Debug)]
pub struct GrowthContext {
    automaton: GeodesicAutomaton,
    matrix: TransitionMatrix,
    method: SeriesMethod,
}

impl GrowthContext {
    pub fn new(g: &SimpleGraph) -> Result<Self> {
        Self::with_method(g, SeriesMethod::Determinant)
    }

    pub fn with_method(g: &SimpleGraph, method: SeriesMethod) -> Result<Self> {
        let automaton = GeodesicAutomaton::build(g)?;
        let matrix = automaton.transition_matrix();
        Ok(GrowthContext { automaton, matrix, method })
    }

    pub fn automaton(&self) -> &GeodesicAutomaton {
        &self.automaton
    }

    pub fn matrix(&self) -> &TransitionMatrix {
        &self.matrix
    }

    fn state_of_letter(&self, v: usize) -> Result<usize> {
        if v >= self.automaton.alphabet_size() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.automaton.alphabet_size() });
        }
        Ok(1 + v)
    }

    fn all_ones(&self) -> Vec<bool> {
        vec![true; self.matrix.dim()]
    }

    /// Counts of all geodesics by length.
    pub fn geodesic_stream(&self) -> CoefficientStream {
        CoefficientStream::new(&self.matrix, self.automaton.start(), &self.all_ones()).expect("consistent dimensions")
    }

    /// Counts of the words read after the leading `v` of geodesics starting with `v`.
    pub fn start0_tail_stream(&self, v: usize) -> Result<CoefficientStream> {
        CoefficientStream::new(&self.matrix, self.state_of_letter(v)?, &self.all_ones())
    }

    pub fn geodesic_series(&self) -> Result<RationalFunction> {
        series_for(&self.matrix, self.automaton.start(), &self.all_ones(), self.method)
    }

    /// Geodesics starting with `v`: `t` times the series read from state `{v}`.
    pub fn start0_series(&self, v: usize) -> Result<RationalFunction> {
        let alpha = series_for(&self.matrix, self.state_of_letter(v)?, &self.all_ones(), self.method)?;
        Ok(alpha.shift(1))
    }

    /// Geodesics ending with `v`, counted from the empty state: a word `u` is
    /// followed by `v` exactly when `v` does not fail from the state `u` reaches.
    pub fn end0_series_direct(&self, v: usize) -> Result<RationalFunction> {
        self.state_of_letter(v)?;
        let w = indicator(self.matrix.dim(), &self.automaton.states_accepting_letter(v)?);
        Ok(series_for(&self.matrix, self.automaton.start(), &w, self.method)?.shift(1))
    }

    /// The series of geodesics ending with `v`. Equal to [`start0_series`](Self::start0_series)
    /// by reversal; the two independent computations are compared before returning.
    pub fn end0_series(&self, v: usize) -> Result<RationalFunction> {
        let start = self.start0_series(v)?;
        let end = self.end0_series_direct(v)?;
        if start != end {
            let a = start.taylor(4 * self.matrix.dim() + 2);
            let b = end.taylor(4 * self.matrix.dim() + 2);
            let r = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(a.len());
            return Err(Error::SymmetryViolation(r));
        }
        Ok(start)
    }

    /// `(alpha, beta)`: words from `{v}` returning to `{v}`, and words from `{v}`
    /// ending where a further `v` is legal but does not land on `{v}`.
    pub fn both0_parts(&self, v: usize) -> Result<(RationalFunction, RationalFunction)> {
        let q = self.state_of_letter(v)?;
        let n = self.matrix.dim();
        let alpha = series_for(&self.matrix, q, &indicator(n, &[q]), self.method)?;
        let ends = self.automaton.end_states_for_letter(v)?;
        let beta = series_for(&self.matrix, q, &indicator(n, &ends), self.method)?;
        Ok((alpha, beta))
    }

    /// Geodesics starting and ending with `v`: `t alpha + t^2 beta`.
    pub fn both0_series(&self, v: usize) -> Result<RationalFunction> {
        let (alpha, beta) = self.both0_parts(v)?;
        Ok(alpha.shift(1).add(&beta.shift(2)))
    }
}

pub fn geodesic_growth_series(g: &SimpleGraph) -> Result<RationalFunction> {
    GrowthContext::new(g)?.geodesic_series()
}

pub fn start0_series(g: &SimpleGraph, v: usize) -> Result<RationalFunction> {
    GrowthContext::new(g)?.start0_series(v)
}

pub fn end0_series(g: &SimpleGraph, v: usize) -> Result<RationalFunction> {
    GrowthContext::new(g)?.end0_series(v)
}

pub fn both0_series(g: &SimpleGraph, v: usize) -> Result<RationalFunction> {
    GrowthContext::new(g)?.both0_series(v)
}

/// Counts of lengths `0..=max_len` read off the automaton and the clique
/// polynomial, in the same layout as [`brute_force_counts`](crate::oracle::brute_force_counts).
pub fn automaton_count_table(g: &SimpleGraph, letter: usize, max_len: usize) -> Result<CountTable> {
    let ctx = GrowthContext::new(g)?;
    let to_u64 = |v: Vec<BigInt>| -> Vec<u64> { v.iter().map(|c| c.to_u64().expect("count fits in u64")).collect() };
    let terms = max_len + 1;
    Ok(CountTable {
        schema: COUNT_TABLE_SCHEMA.into(),
        letter,
        geodesics: to_u64(ctx.geodesic_stream().take_terms(terms)),
        start: to_u64(ctx.start0_series(letter)?.taylor(terms)),
        end: to_u64(ctx.end0_series(letter)?.taylor(terms)),
        both: to_u64(ctx.both0_series(letter)?.taylor(terms)),
        elements: to_u64(spherical_growth_series(g).taylor(terms)),
    })
}

/// Spherical growth series from the clique polynomial:
/// `1 / Sigma(t) = sum_i (-1)^i f_i (t / (1 + t))^i`.
pub fn spherical_growth_series(g: &SimpleGraph) -> RationalFunction {
    let f = g.f_polynomial();
    let d = f.degree().unwrap_or(0);
    let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
    let mut den = IntPolynomial::zero();
    for (i, fi) in f.coeffs().iter().enumerate() {
        let sign = if i % 2 == 0 { fi.clone() } else { -fi };
        let term = IntPolynomial::monomial(sign, i) * one_plus_t.pow((d - i) as u32);
        den = &den + &term;
    }
    RationalFunction::new(one_plus_t.pow(d as u32), den).expect("constant term of the denominator is f_0 = 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn streams_of_tiny_groups() {
        let k2 = GrowthContext::new(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(k2.geodesic_stream().take_terms(5), ints(&[1, 2, 2, 0, 0]));
        let pair = GrowthContext::new(&SimpleGraph::empty(2)).unwrap();
        assert_eq!(pair.geodesic_stream().take_terms(5), ints(&[1, 2, 2, 2, 2]));
    }

    #[test]
    fn stream_dimension_errors() {
        let m = GeodesicAutomaton::build(&SimpleGraph::complete(2)).unwrap().transition_matrix();
        assert!(matches!(CoefficientStream::new(&m, 0, &[true; 3]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(CoefficientStream::new(&m, 4, &[true; 4]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn determinant_route_on_small_graphs() {
        assert_eq!(geodesic_growth_series(&SimpleGraph::complete(2)).unwrap(), r(&[1, 2, 2], &[1]));
        assert_eq!(geodesic_growth_series(&SimpleGraph::empty(2)).unwrap(), r(&[1, 1], &[1, -1]));
    }

    #[test]
    fn berlekamp_massey_examples() {
        assert_eq!(rational_from_terms(&ints(&[1, 2, 2, 2, 2, 2, 2, 2]), 4).unwrap(), r(&[1, 1], &[1, -1]));
        assert_eq!(
            rational_from_terms(&ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55]), 4).unwrap(),
            r(&[1], &[1, -1, -1])
        );
        assert_eq!(rational_from_terms(&ints(&[1, 2, 2, 0, 0, 0, 0, 0]), 4).unwrap(), r(&[1, 2, 2], &[1]));
        assert!(matches!(
            rational_from_terms(&ints(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55]), 1),
            Err(Error::RecurrenceTooLong { order: 2, bound: 1 })
        ));
    }

    #[test]
    fn special_series_of_tiny_groups() {
        let k2 = GrowthContext::new(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(k2.start0_series(0).unwrap(), r(&[0, 1, 1], &[1]));
        assert_eq!(k2.end0_series(0).unwrap(), r(&[0, 1, 1], &[1]));
        assert_eq!(k2.both0_series(0).unwrap(), r(&[0, 1], &[1]));
        let pair = GrowthContext::new(&SimpleGraph::empty(2)).unwrap();
        assert_eq!(pair.start0_series(0).unwrap(), r(&[0, 1], &[1, -1]));
        assert_eq!(pair.both0_series(0).unwrap(), r(&[0, 1], &[1, 0, -1]));
        assert!(matches!(k2.start0_series(2), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn spherical_examples() {
        assert_eq!(spherical_growth_series(&SimpleGraph::complete(2)), r(&[1, 2, 1], &[1]));
        assert_eq!(spherical_growth_series(&SimpleGraph::empty(2)), r(&[1, 1], &[1, -1]));
        assert_eq!(spherical_growth_series(&SimpleGraph::path(3)), r(&[1, 2, 1], &[1, -1]));
    }
}
