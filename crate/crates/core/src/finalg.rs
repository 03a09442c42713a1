//! Subalgebras of a full matrix algebra: radical, residue algebra and locality.
//!
//! The radical is the kernel of the trace form `(a, b) -> Tr(ab)`, which is
//! exact in characteristic zero and in characteristic `p > n` for `n x n`
//! matrices. Locality asks whether the residue algebra is a division algebra;
//! a negative answer always comes with an idempotent.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{minimal_polynomial, Field, Matrix, Poly, Scalar};

/// Outcome of a locality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locality {
    Local,
    /// An idempotent other than 0 and 1.
    NotLocal(Matrix),
    /// The residue algebra could not be classified; the string says why.
    Undecided(String),
}

/// A subalgebra of `n x n` matrices given by a linearly independent basis
/// whose span contains the identity and is closed under products.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    field: Field,
    n: usize,
    basis: Vec<Matrix>,
    flat: Matrix,
}

struct Residue {
    /// Left-regular matrices of the chosen residue basis.
    left: Vec<Matrix>,
    /// Coordinates of 1 in the residue basis.
    one: Vec<Scalar>,
    /// Basis elements of the algebra lifting the residue basis.
    lifts: Vec<Matrix>,
}

impl MatrixAlgebra {
    pub fn new(field: Field, n: usize, basis: Vec<Matrix>) -> MatrixAlgebra {
        let cols: Vec<Matrix> = basis.iter().map(flat_column).collect();
        let flat = Matrix::hcat(field, n * n, &cols);
        debug_assert_eq!(flat.rank(), basis.len(), "basis must be independent");
        MatrixAlgebra { field, n, basis, flat }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates of `m` in the basis, `None` if `m` lies outside the span.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let x = self.flat.solve(&flat_column(m)).ok()??;
        Some(x.column(0))
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        coords
            .iter()
            .zip(&self.basis)
            .fold(Matrix::zeros(self.field, self.n, self.n), |acc, (c, b)| acc.add(&b.scale(c)))
    }

    fn trace_form_valid(&self) -> bool {
        match self.field {
            Field::Rational => true,
            Field::Prime(p) => p > self.n as u64,
        }
    }

    /// Coordinate vectors (as columns) spanning the radical.
    pub fn radical_coords(&self) -> Result<Matrix> {
        if !self.trace_form_valid() {
            return Err(Error::Undecided(format!(
                "trace-form radical needs characteristic 0 or above {}, field is {}",
                self.n, self.field
            )));
        }
        let d = self.dim();
        let mut gram = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, self.basis[i].mul(&self.basis[j]).trace());
            }
        }
        Ok(gram.kernel_basis())
    }

    /// Basis of the radical as matrices.
    pub fn radical(&self) -> Result<Vec<Matrix>> {
        let k = self.radical_coords()?;
        Ok((0..k.cols()).map(|j| self.element(&k.column(j))).collect())
    }

    fn residue(&self) -> Result<Residue> {
        let rad = self.radical_coords()?;
        let comp = rad.complement_basis();
        let chosen: Vec<usize> = (0..comp.cols())
            .map(|j| (0..comp.rows()).find(|&i| comp.get(i, j).is_one()).expect("standard vector"))
            .collect();
        let change = rad.hstack(&comp).inverse().expect("complement completes a basis");
        let r = rad.cols();
        let m = chosen.len();
        let project = |a: &Matrix| -> Vec<Scalar> {
            let c = self.coords(a).expect("closed under products");
            let full = change.mul(&Matrix::column_vector(self.field, c));
            (r..r + m).map(|i| full.get(i, 0).clone()).collect()
        };
        let lifts: Vec<Matrix> = chosen.iter().map(|&i| self.basis[i].clone()).collect();
        let left = lifts
            .iter()
            .map(|x| {
                let cols: Vec<Matrix> = lifts
                    .iter()
                    .map(|y| Matrix::column_vector(self.field, project(&x.mul(y))))
                    .collect();
                Matrix::hcat(self.field, m, &cols)
            })
            .collect();
        let one = project(&Matrix::identity(self.field, self.n));
        Ok(Residue { left, one, lifts })
    }

    /// Dimension of the residue algebra modulo the radical.
    pub fn residue_dim(&self) -> Result<usize> {
        Ok(self.dim() - self.radical_coords()?.cols())
    }

    /// Decides locality. Basis elements are scanned for idempotents first,
    /// then the residue algebra is split by minimal polynomials of basis and
    /// seeded random elements.
    pub fn locality(&self, seed: u64) -> Result<Locality> {
        let id = Matrix::identity(self.field, self.n);
        let zero = Matrix::zeros(self.field, self.n, self.n);
        for b in &self.basis {
            if b.mul(b) == *b && *b != id && *b != zero {
                return Ok(Locality::NotLocal(b.clone()));
            }
        }
        let res = self.residue()?;
        let m = res.left.len();
        if m == 1 {
            return Ok(Locality::Local);
        }
        let f = self.field;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let to_elem = |v: &[Scalar]| -> Matrix {
            res.left.iter().zip(v).fold(Matrix::zeros(f, m, m), |acc, (l, c)| acc.add(&l.scale(c)))
        };
        let mut candidates: Vec<Matrix> = res.left.clone();
        for _ in 0..24 {
            let v: Vec<Scalar> = (0..m).map(|_| f.random(&mut rng)).collect();
            candidates.push(to_elem(&v));
        }
        for x in &candidates {
            if let Some(e) = split_element(x, &res.left, &mut rng) {
                return Ok(Locality::NotLocal(self.lift_idempotent(&res, &e)));
            }
        }
        let commutative = res.left.iter().all(|a| res.left.iter().all(|b| a.mul(b) == b.mul(a)));
        match f {
            Field::Prime(p) if commutative => {
                let fixed = frobenius_fixed(&res.left, &res.one, p);
                if fixed.cols() == 1 {
                    return Ok(Locality::Local);
                }
                for j in 0..fixed.cols() {
                    let x = to_elem(&fixed.column(j));
                    if let Some(e) = split_element(&x, &res.left, &mut rng) {
                        return Ok(Locality::NotLocal(self.lift_idempotent(&res, &e)));
                    }
                }
                Ok(Locality::Undecided("Frobenius splitting failed to produce an idempotent".into()))
            }
            Field::Prime(_) => Ok(Locality::Undecided(
                "noncommutative residue algebra over a finite field, no idempotent found".into(),
            )),
            Field::Rational if commutative && m <= 3 => {
                for x in &candidates {
                    let mu = minimal_polynomial(x);
                    if mu.degree() == Some(m) && mu.find_root(&mut rng).is_none() {
                        return Ok(Locality::Local);
                    }
                }
                Ok(Locality::Undecided("no primitive element found for the residue field".into()))
            }
            Field::Rational => Ok(Locality::Undecided(format!(
                "residue algebra of dimension {m} over Q could not be split or certified"
            ))),
        }
    }

    /// Lifts a residue idempotent (as a left-regular matrix) to an idempotent of the algebra.
    fn lift_idempotent(&self, res: &Residue, e: &Matrix) -> Matrix {
        let v = e.mul(&Matrix::column_vector(self.field, res.one.clone())).column(0);
        let mut x = v
            .iter()
            .zip(&res.lifts)
            .fold(Matrix::zeros(self.field, self.n, self.n), |acc, (c, b)| acc.add(&b.scale(c)));
        let three = self.field.from_i64(3);
        let two = self.field.from_i64(2);
        while x.mul(&x) != x {
            let sq = x.mul(&x);
            x = sq.scale(&three).sub(&sq.mul(&x).scale(&two));
        }
        x
    }
}

fn flat_column(m: &Matrix) -> Matrix {
    Matrix::column_vector(m.field(), m.data().to_vec())
}

/// An idempotent other than 0, 1 in the algebra generated by `x`, or in
/// `x`'s left ideals when `x - λ` is nilpotent.
fn split_element(x: &Matrix, basis: &[Matrix], rng: &mut ChaCha8Rng) -> Option<Matrix> {
    let mu = minimal_polynomial(x);
    if mu.degree()? <= 1 {
        return None;
    }
    let lambda = mu.find_root(rng)?;
    let k = mu.root_multiplicity(&lambda);
    if Some(k) != mu.degree() {
        return coprime_split(x, &mu, &lambda, k);
    }
    let z = x.sub(&Matrix::identity(x.field(), x.rows()).scale(&lambda));
    for b in basis {
        let y = z.mul(b);
        let mu_y = minimal_polynomial(&y);
        let j = mu_y.root_multiplicity(&x.field().zero());
        if Some(j) != mu_y.degree() {
            return coprime_split(&y, &mu_y, &x.field().zero(), j);
        }
    }
    None
}

/// Given `mu = (t - λ)^k g` with `g` nonconstant and coprime to `t - λ`,
/// returns the idempotent `v(x) g(x)` where `u (t - λ)^k + v g = 1`.
fn coprime_split(x: &Matrix, mu: &Poly, lambda: &Scalar, k: usize) -> Option<Matrix> {
    let f = x.field();
    let mut power = Poly::constant(f.one());
    for _ in 0..k {
        power = power.mul(&Poly::linear(lambda));
    }
    let (g, rem) = mu.divrem(&power);
    debug_assert!(rem.is_zero());
    let (one, _u, v) = power.ext_gcd(&g);
    if one.degree() != Some(0) {
        return None;
    }
    Some(v.mul(&g).rem(mu).eval_matrix(x))
}

/// Kernel of `x -> x^p - x` on a commutative algebra given by left-regular matrices.
fn frobenius_fixed(left: &[Matrix], one: &[Scalar], p: u64) -> Matrix {
    let f = left[0].field();
    let m = left.len();
    let one_col = Matrix::column_vector(f, one.to_vec());
    let mut map = Matrix::zeros(f, m, m);
    for (j, l) in left.iter().enumerate() {
        let image = l.pow(p).mul(&one_col);
        for i in 0..m {
            let own = if i == j { f.one() } else { f.zero() };
            map.set(i, j, image.get(i, 0) - &own);
        }
    }
    map.kernel_basis()
}
