//! Exact characteristic polynomials of integer matrices and co-spectrality.
//!
//! Polynomials here are in the spectral variable `x`; growth series use `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::{RootedTree, SimpleGraph};
use crate::poly::IntPolynomial;

/// Square matrix of arbitrary-precision integers, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    /// Adjacency matrix of a simple graph.
    pub fn adjacency(g: &SimpleGraph) -> Self {
        let mut m = Self::zeros(g.vertex_count());
        for &(u, v) in g.edges() {
            m.set(u, v, BigInt::one());
            m.set(v, u, BigInt::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn count_nonzero(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    /// Sum of all entries.
    pub fn total(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Matrices up to this size use Faddeev–LeVerrier; larger ones the modular route.
pub const FADDEEV_LIMIT: usize = 64;

/// `det(xI - A)`, monic of degree `n`. The empty matrix gives the constant 1.
pub fn char_poly_matrix(a: &IntMatrix) -> IntPolynomial {
    if a.dim() <= FADDEEV_LIMIT {
        char_poly_faddeev(a)
    } else {
        char_poly_modular(a)
    }
}

/// Characteristic polynomial of the adjacency matrix of `g`.
pub fn char_poly(g: &SimpleGraph) -> IntPolynomial {
    char_poly_matrix(&IntMatrix::adjacency(g))
}

/// Faddeev–LeVerrier over the integers. Each division by `k` is exact.
///
/// `M_0 = 0`, `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
pub fn char_poly_faddeev(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let nz = a.nonzeros();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n);
    for k in 1..=n {
        // m <- A m + c[n-k+1] I
        let mut next = IntMatrix::zeros(n);
        for (i, j, v) in &nz {
            let row_j = m.row(*j);
            let base = i * n;
            for (col, x) in row_j.iter().enumerate() {
                if !x.is_zero() {
                    next.entries[base + col] += v * x;
                }
            }
        }
        for i in 0..n {
            next.entries[i * n + i] += &c[n - k + 1];
        }
        m = next;
        // tr(A m) = sum over nonzeros A[i][j] * m[j][i]
        let tr: BigInt = nz.iter().map(|(i, j, v)| v * m.get(*j, *i)).sum();
        let (q, r) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = q;
    }
    IntPolynomial::new(c)
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det(a: &IntMatrix) -> BigInt {
    let n = a.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `det(xI - A)` at an integer point, by elimination. Independent of the
/// polynomial routes.
pub fn char_poly_at(a: &IntMatrix, x: &BigInt) -> BigInt {
    let n = a.dim();
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut v = -a.get(i, j);
            if i == j {
                v += x;
            }
            m.set(i, j, v);
        }
    }
    bareiss_det(&m)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Characteristic polynomial modulo `p` by reduction to Hessenberg form.
fn char_poly_mod_p(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.dim();
    let pb = BigInt::from(p);
    let mut h: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    let add = |x: u64, y: u64| {
        let s = x + y;
        if s >= p { s - p } else { s }
    };
    // Similarity transform to upper Hessenberg form.
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = pow_mod(h[m][m - 1], p - 2, p);
        for i in m + 1..n {
            if h[i][m - 1] == 0 {
                continue;
            }
            let u = mul_mod(h[i][m - 1], inv, p);
            for j in 0..n {
                let t = mul_mod(u, h[m][j], p);
                h[i][j] = sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = add(row[m], t);
            }
        }
    }
    // Hessenberg recurrence: p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im prod(h_{k,k-1}) p_{i-1}.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add(next[k + 1], c);
            next[k] = sub(next[k], mul_mod(h[m][m], c, p));
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = mul_mod(t, h[i + 1][i], p);
            let coef = mul_mod(t, h[i][m], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub(next[k], mul_mod(coef, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Bits needed to hold every coefficient of the characteristic polynomial in
/// absolute value: `|c| <= prod_i (1 + ||row_i||_2)` by Hadamard's inequality
/// applied to each principal minor.
fn coefficient_bit_bound(a: &IntMatrix) -> u64 {
    let bits: f64 = (0..a.dim())
        .map(|i| {
            let sq: f64 = a.row(i).iter().map(|v| v.to_f64().unwrap_or(f64::MAX).powi(2)).sum();
            (1.0 + sq.sqrt()).log2()
        })
        .sum();
    bits.ceil() as u64 + 2
}

/// Multi-modular characteristic polynomial with Chinese remaindering.
pub fn char_poly_modular(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let needed = coefficient_bit_bound(a) + 1;
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut candidate = (1u64 << 62) - 1;
    while (modulus.bits()) <= needed {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        let residues = char_poly_mod_p(a, p);
        let pb = BigInt::from(p);
        // x = acc + modulus * ((r - acc) * modulus^{-1} mod p)
        let minv = {
            let m_mod = modulus.mod_floor(&pb).to_u64().unwrap();
            BigInt::from(pow_mod(m_mod, p - 2, p))
        };
        for (k, r) in residues.into_iter().enumerate() {
            let diff = (BigInt::from(r) - &acc[k]).mod_floor(&pb);
            let lift = (diff * &minv).mod_floor(&pb);
            acc[k] += &modulus * lift;
        }
        modulus *= pb;
    }
    let half = &modulus >> 1;
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| if c > half { c - &modulus } else { c })
            .collect(),
    )
}

/// Equal characteristic polynomials.
pub fn cospectral(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
    g1.vertex_count() == g2.vertex_count() && char_poly(g1) == char_poly(g2)
}

/// Both sides of the coalescence identity
/// `phi(t.s) = phi(t) phi(s-r) + phi(t-r) phi(s) - x phi(t-r) phi(s-r)`.
pub fn coalescence_identity_sides(tau: &RootedTree, s: &RootedTree) -> (IntPolynomial, IntPolynomial) {
    let lhs = char_poly(tau.coalesce(s).graph());
    let phi_tau = char_poly(tau.graph());
    let phi_s = char_poly(s.graph());
    let phi_tau_r = char_poly(&tau.without_root());
    let phi_s_r = char_poly(&s.without_root());
    let x = IntPolynomial::t();
    let rhs = &(&(&phi_tau * &phi_s_r) + &(&phi_tau_r * &phi_s)) - &(&x * &(&phi_tau_r * &phi_s_r));
    (lhs, rhs)
}

pub fn coalescence_charpoly_identity(tau: &RootedTree, s: &RootedTree) -> bool {
    let (lhs, rhs) = coalescence_identity_sides(tau, s);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_tree;

    fn px(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_characteristic_polynomials() {
        assert_eq!(char_poly(&SimpleGraph::path(2)), px(&[-1, 0, 1]));
        assert_eq!(char_poly(&SimpleGraph::star_graph(3)), px(&[0, 0, -3, 0, 1]));
        assert_eq!(char_poly(&SimpleGraph::empty(0)), px(&[1]));
        assert_eq!(char_poly(&SimpleGraph::path(3)), px(&[0, -2, 0, 1]));
    }

    #[test]
    fn faddeev_agrees_with_modular_route() {
        for g in [SimpleGraph::cycle(7), SimpleGraph::complete(6), builtin_tree("mckay-t1").unwrap().graph().clone()] {
            let a = IntMatrix::adjacency(&g);
            assert_eq!(char_poly_faddeev(&a), char_poly_modular(&a));
        }
        let a = IntMatrix::from_rows(&[vec![3, -7, 2], vec![0, 5, -11], vec![13, 1, -4]]);
        assert_eq!(char_poly_faddeev(&a), char_poly_modular(&a));
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        let a = IntMatrix::from_rows(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]);
        assert_eq!(bareiss_det(&a), BigInt::from(-3));
        assert_eq!(bareiss_det(&IntMatrix::identity(4)), BigInt::one());
    }

    #[test]
    fn mckay_pair_is_cospectral_after_coalescence() {
        let p2 = RootedTree::path_from_end(2);
        let g1 = p2.coalesce(&builtin_tree("mckay-t1").unwrap());
        let g2 = p2.coalesce(&builtin_tree("mckay-t2").unwrap());
        assert!(cospectral(g1.graph(), g2.graph()));
        assert!(cospectral(&g1.graph().complement(), &g2.graph().complement()));
    }

    #[test]
    fn godsil_line_graphs_split() {
        let p2 = RootedTree::path_from_end(2);
        let g1 = p2.coalesce(&builtin_tree("godsil-s1-subdivided").unwrap());
        let g2 = p2.coalesce(&builtin_tree("godsil-s2-subdivided").unwrap());
        assert!(cospectral(g1.graph(), g2.graph()));
        assert!(!cospectral(&g1.graph().line_graph(), &g2.graph().line_graph()));
    }

    #[test]
    fn drawn_godsil_pair_is_not_cospectral_after_coalescence() {
        // The drawn trees are isomorphic, but deleting their roots leaves
        // non-co-spectral forests, so the coalescences differ by
        // t^5 - 3t^3 + 2t.
        let s1 = builtin_tree("godsil-s1").unwrap();
        let s2 = builtin_tree("godsil-s2").unwrap();
        assert!(cospectral(s1.graph(), s2.graph()));
        let p2 = RootedTree::path_from_end(2);
        let d = &char_poly(p2.coalesce(&s1).graph()) - &char_poly(p2.coalesce(&s2).graph());
        assert_eq!(d, px(&[0, 2, 0, -3, 0, 1]));
    }

    #[test]
    fn coalescence_identity_examples() {
        let p2 = RootedTree::path_from_end(2);
        let (lhs, rhs) = coalescence_identity_sides(&p2, &p2);
        assert_eq!(lhs, px(&[0, -2, 0, 1]));
        assert_eq!(rhs, lhs);
        assert!(coalescence_charpoly_identity(&p2, &builtin_tree("godsil-s1").unwrap()));
        assert!(coalescence_charpoly_identity(&RootedTree::singleton(), &builtin_tree("godsil-sigma").unwrap()));
    }
}
