//! Exact linear algebra over the rationals.
//!
//! Small and deliberately boring: dense rational matrices, kernels in a
//! canonical form, fraction-free determinants, and restriction of a matrix
//! to an invariant subspace. Inputs here are signed permutation matrices and
//! their fixed spaces, so entries stay tiny; exactness is the whole point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of the ring `Q(sqrt 2)`, written `a + b*sqrt(2)`.
///
/// This is the scalar field needed for Pin lifts of signed permutations:
/// reflection vectors are either `e_i` or `(e_i - e_j)/sqrt(2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root2Scalar {
    pub a: Rational,
    pub b: Rational,
}

impl Root2Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Root2Scalar { a, b }
    }

    pub fn zero() -> Self {
        Root2Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Root2Scalar::new(Rational::one(), Rational::zero())
    }

    pub fn from_rational(a: Rational) -> Self {
        Root2Scalar::new(a, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Root2Scalar::from_rational(rat(n))
    }

    /// `sqrt(2)/2 = 1/sqrt(2)`.
    pub fn inv_sqrt2() -> Self {
        Root2Scalar::new(Rational::zero(), ratio(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        Root2Scalar::new(-self.a.clone(), -self.b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Root2Scalar::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r  with r^2 = 2
        Root2Scalar::new(
            &self.a * &other.a + rat(2) * &self.b * &other.b,
            &self.a * &other.b + &self.b * &other.a,
        )
    }

    /// Field norm `a^2 - 2 b^2`; zero iff the element is zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rat(2) * &self.b * &self.b
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Root2Scalar::new(&self.a / &n, -&self.b / &n))
    }
}

impl fmt::Display for Root2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt2", self.b)
        } else {
            write!(f, "{} + {}*sqrt2", self.a, self.b)
        }
    }
}

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = &self.data[i] - &other.data[i];
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = &self.data[i] + &other.data[i];
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !self.get(r, c).is_zero() && !v[c].is_zero())
                    .map(|c| self.get(r, c) * &v[c])
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Exact determinant via fraction-free Bareiss elimination on a
    /// denominator-cleared copy. The empty `0x0` matrix has determinant 1
    /// (the empty product), which is what makes a zero-dimensional fixed
    /// space count as oriented.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        // Clear denominators row by row, tracking the accumulated scale.
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = num_integer::lcm(lcm, self.get(r, c).denom().clone());
            }
            scale *= &lcm;
            m.push(
                (0..n)
                    .map(|c| {
                        let e = self.get(r, c);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_int = m[n - 1][n - 1].clone() * BigInt::from(sign);
        Rational::new(det_int, scale)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let piv = match (r..self.rows).find(|&i| !self.get(i, c).is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if piv != r {
                for j in 0..self.cols {
                    let a = self.get(r, j).clone();
                    let b = self.get(piv, j).clone();
                    self.set(r, j, b);
                    self.set(piv, j, a);
                }
            }
            let inv = self.get(r, c).clone();
            for j in 0..self.cols {
                let v = self.get(r, j) / &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the nullspace, in the canonical form induced by the reduced
    /// row echelon form: one vector per free column, with a 1 in that free
    /// coordinate and 0 in all other free coordinates.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                vec[pc] = -m.get(ri, free).clone();
            }
            basis.push(vec);
        }
        Subspace {
            ambient_dim: self.cols,
            basis,
        }
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Matrix of `self` restricted to the invariant subspace spanned by the
    /// given basis. Column `i` of the result expresses `M * b_i` in that
    /// basis. Fails with [`Error::NotInvariant`] if some image leaves the
    /// span.
    pub fn restrict_to(&self, sub: &Subspace) -> Result<Matrix> {
        assert!(self.is_square());
        assert_eq!(self.rows, sub.ambient_dim, "ambient dimension mismatch");
        let d = sub.dim();
        let n = sub.ambient_dim;
        if d == 0 {
            return Ok(Matrix::zero(0, 0));
        }
        // Solve B x = M b_i for every i at once: rref of [B | M b_1 ... M b_d].
        let mut aug = Matrix::zero(n, d + d);
        for (i, b) in sub.basis.iter().enumerate() {
            for r in 0..n {
                aug.set(r, i, b[r].clone());
            }
            let img = self.apply(b);
            for r in 0..n {
                aug.set(r, d + i, img[r].clone());
            }
        }
        let pivots = aug.rref();
        // Basis columns are independent, so there are exactly d pivots and
        // they all lie in the left block unless an image is outside the span.
        if pivots.len() != d || pivots.iter().any(|&c| c >= d) {
            return Err(Error::NotInvariant);
        }
        // After rref the left block is the identity on the pivot rows, so row
        // r of the right block holds the coefficients on basis vector r.
        let mut out = Matrix::zero(d, d);
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, aug.get(r, d + c).clone());
            }
        }
        // Any nonzero row below the pivot rows means an inconsistent system.
        for r in d..n {
            for c in 0..d {
                if !aug.get(r, d + c).is_zero() {
                    return Err(Error::NotInvariant);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Subspace of `Q^n` given by a list of independent column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        assert!(basis.iter().all(|b| b.len() == ambient_dim));
        let sub = Subspace { ambient_dim, basis };
        debug_assert_eq!(sub.matrix_of_basis().rank(), sub.dim(), "dependent basis");
        sub
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn matrix_of_basis(&self) -> Matrix {
        let mut m = Matrix::zero(self.ambient_dim, self.basis.len());
        for (c, b) in self.basis.iter().enumerate() {
            for r in 0..self.ambient_dim {
                m.set(r, c, b[r].clone());
            }
        }
        m
    }

    /// Canonical basis: reduced column echelon form with pivots normalized
    /// to 1. Two subspaces are equal iff their canonical bases are equal.
    pub fn canonical_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.matrix_of_basis().transpose();
        m.rref();
        let mut rows: Vec<Vec<Rational>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
            .filter(|row: &Vec<Rational>| row.iter().any(|x| !x.is_zero()))
            .collect();
        rows.sort_by(|a, b| {
            let fa = a.iter().position(|x| !x.is_zero());
            let fb = b.iter().position(|x| !x.is_zero());
            fa.cmp(&fb)
        });
        rows
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut m = Matrix::zero(self.ambient_dim, self.dim() + 1);
        for (c, b) in self.basis.iter().enumerate() {
            for r in 0..self.ambient_dim {
                m.set(r, c, b[r].clone());
            }
        }
        for r in 0..self.ambient_dim {
            m.set(r, self.dim(), v[r].clone());
        }
        m.rank() == self.dim()
    }
}

/// Parity of `n - dim ker(M - I) - dim ker(M + I)` is even for orthogonal
/// matrices; handy standalone check used by tests.
pub fn real_eigenspace_dims(m: &Matrix) -> (usize, usize) {
    let n = m.rows();
    let id = Matrix::identity(n);
    let plus = m.sub(&id).kernel().dim();
    let minus = m.add(&id).kernel().dim();
    (plus, minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_matrix_12_in_3() -> Matrix {
        // transposition (12) acting on R^3
        let mut m = Matrix::zero(3, 3);
        m.set(0, 1, rat(1));
        m.set(1, 0, rat(1));
        m.set(2, 2, rat(1));
        m
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let z = Matrix::zero(3, 3);
        assert_eq!(z.kernel().dim(), 3);
    }

    #[test]
    fn kernel_of_transposition_fixed_space() {
        let m = perm_matrix_12_in_3();
        let fixed = m.sub(&Matrix::identity(3)).kernel();
        assert_eq!(fixed.dim(), 2);
        // span{e1+e2, e3}
        assert!(fixed.contains(&[rat(1), rat(1), rat(0)]));
        assert!(fixed.contains(&[rat(0), rat(0), rat(1)]));
        assert!(!fixed.contains(&[rat(1), rat(-1), rat(0)]));

        let anti = m.add(&Matrix::identity(3)).kernel();
        assert_eq!(anti.dim(), 1);
        assert!(anti.contains(&[rat(1), rat(-1), rat(0)]));
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::identity(4).det(), rat(1));
        assert_eq!(perm_matrix_12_in_3().det(), rat(-1));
        let mut d = Matrix::zero(2, 2);
        d.set(0, 0, rat(-1));
        d.set(1, 1, rat(1));
        assert_eq!(d.det(), rat(-1));
        assert_eq!(Matrix::zero(0, 0).det(), rat(1));
    }

    #[test]
    fn restrict_to_fixed_space_of_transposition() {
        let m = perm_matrix_12_in_3();
        let fixed = m.sub(&Matrix::identity(3)).kernel();
        let r = m.restrict_to(&fixed).unwrap();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(r.det(), rat(1));
    }

    #[test]
    fn restrict_to_zero_dim_space() {
        let m = perm_matrix_12_in_3();
        let zero = Subspace::new(3, vec![]);
        let r = m.restrict_to(&zero).unwrap();
        assert_eq!(r.rows(), 0);
        assert_eq!(r.det(), rat(1));
    }

    #[test]
    fn restrict_sign_flip() {
        let mut m = Matrix::zero(2, 2);
        m.set(0, 0, rat(1));
        m.set(1, 1, rat(-1));
        let s = Subspace::new(2, vec![vec![rat(0), rat(1)]]);
        let r = m.restrict_to(&s).unwrap();
        assert_eq!(r.det(), rat(-1));
    }

    #[test]
    fn restrict_rejects_non_invariant() {
        // rotation by 90 degrees does not preserve span{e1}
        let mut m = Matrix::zero(2, 2);
        m.set(1, 0, rat(1));
        m.set(0, 1, rat(-1));
        let s = Subspace::new(2, vec![vec![rat(1), rat(0)]]);
        assert_eq!(m.restrict_to(&s), Err(Error::NotInvariant));
    }

    #[test]
    fn kernel_vectors_are_fixed() {
        let m = perm_matrix_12_in_3();
        let fixed = m.sub(&Matrix::identity(3)).kernel();
        for b in &fixed.basis {
            assert_eq!(m.apply(b), *b);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(1), rat(-2), rat(0)],
            vec![rat(1), rat(-3), rat(3)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv.mul(&m), Matrix::identity(3));
    }

    #[test]
    fn root2_arithmetic() {
        let r = Root2Scalar::inv_sqrt2();
        // (1/sqrt2)^2 = 1/2
        assert_eq!(r.mul(&r), Root2Scalar::new(ratio(1, 2), rat(0)));
        let x = Root2Scalar::new(rat(1), rat(1)); // 1 + sqrt2
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv), Root2Scalar::one());
        assert_eq!(x.norm(), rat(-1));
        assert!(Root2Scalar::zero().inverse().is_none());
    }

    // Determinant oracle: cofactor expansion, independent of Bareiss.
    fn det_cofactor(m: &Matrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return rat(1);
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for c in 0..n {
            if m.get(0, c).is_zero() {
                continue;
            }
            let mut minor = Matrix::zero(n - 1, n - 1);
            for r in 1..n {
                let mut cc = 0;
                for col in 0..n {
                    if col == c {
                        continue;
                    }
                    minor.set(r - 1, cc, m.get(r, col).clone());
                    cc += 1;
                }
            }
            let term = m.get(0, c) * det_cofactor(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(entries in proptest::collection::vec(-4i64..=4, 16)) {
            let m = Matrix::from_rows(
                entries.chunks(4).map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
            );
            prop_assert_eq!(m.det(), det_cofactor(&m));
        }

        #[test]
        fn restricted_det_is_basis_independent(seed in 0u64..500) {
            // fixed space of (12) in R^3, random invertible change of basis
            let m = perm_matrix_12_in_3();
            let fixed = m.sub(&Matrix::identity(3)).kernel();
            let d = fixed.dim();
            let mut vals = Vec::new();
            let mut s = seed;
            for _ in 0..(d * d) {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                vals.push(((s >> 33) % 7) as i64 - 3);
            }
            let t = Matrix::from_rows(
                vals.chunks(d).map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
            );
            prop_assume!(!t.det().is_zero());
            // new basis vectors: b'_j = sum_i t[i][j] b_i
            let nb: Vec<Vec<Rational>> = (0..d)
                .map(|j| {
                    let mut v = vec![Rational::zero(); 3];
                    for (i, b) in fixed.basis.iter().enumerate() {
                        for r in 0..3 {
                            v[r] = &v[r] + t.get(i, j) * &b[r];
                        }
                    }
                    v
                })
                .collect();
            let alt = Subspace::new(3, nb);
            prop_assert_eq!(
                m.restrict_to(&fixed).unwrap().det(),
                m.restrict_to(&alt).unwrap().det()
            );
        }
    }
}
