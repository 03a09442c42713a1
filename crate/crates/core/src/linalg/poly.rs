//! Univariate polynomials over a [`Field`], coefficients stored low degree first.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::Rng;

use super::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Poly {
        let f = c.field();
        Poly::new(f, vec![c])
    }

    /// `t - r`.
    pub fn linear(r: &Scalar) -> Poly {
        Poly::new(r.field(), vec![-r, r.field().one()])
    }

    pub fn monomial(field: Field, deg: usize) -> Poly {
        let mut c = vec![field.zero(); deg + 1];
        c[deg] = field.one();
        Poly::new(field, c)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.scale(&-self.field.one()))
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().unwrap().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u, v)` with `u*self + v*rhs = g` and `g` monic.
    pub fn ext_gcd(&self, rhs: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Poly::constant(f.one()), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::constant(self.field.one()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| &f.from_i64(i as i64) * c).collect();
        Poly::new(f, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, x: &Matrix) -> Matrix {
        let n = x.rows();
        let id = Matrix::identity(self.field, n);
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(self.field, n, n), |acc, c| acc.mul(x).add(&id.scale(c)))
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Scalar) -> usize {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// Some root in the ground field; `None` means there is none.
    pub fn find_root<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Scalar> {
        if self.degree()? == 0 {
            return None;
        }
        match self.field {
            Field::Prime(p) => prime_field_root(self, p, rng),
            Field::Rational => rational_root(self),
        }
    }
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial(x: &Matrix) -> Poly {
    let f = x.field();
    let n = x.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(f, n)];
    loop {
        let k = powers.len();
        let cols: Vec<Matrix> = powers.iter().map(flatten_column).collect();
        let basis = Matrix::hcat(f, n * n, &cols);
        let next = powers[k - 1].mul(x);
        if let Some(sol) = basis.solve(&flatten_column(&next)).expect("shapes agree") {
            let mut c: Vec<Scalar> = (0..k).map(|i| -sol.get(i, 0)).collect();
            c.push(f.one());
            return Poly::new(f, c);
        }
        powers.push(next);
    }
}

fn flatten_column(m: &Matrix) -> Matrix {
    Matrix::column_vector(m.field(), m.data().to_vec())
}

fn prime_field_root<R: Rng + ?Sized>(p: &Poly, q: u64, rng: &mut R) -> Option<Scalar> {
    let f = p.field;
    if q <= 256 {
        return f.elements()?.find(|x| p.eval(x).is_zero());
    }
    let t = Poly::monomial(f, 1);
    let frob = t.powmod(q, p).sub(&t);
    let mut g = p.gcd(&frob);
    for _ in 0..200 {
        match g.degree()? {
            0 => return None,
            1 => return Some(-&g.monic().coeffs[0]),
            _ => {}
        }
        let a = f.random(rng);
        let shifted = Poly::new(f, vec![a, f.one()]);
        let h = shifted.powmod((q - 1) / 2, &g).sub(&Poly::constant(f.one()));
        let d = g.gcd(&h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            g = d;
        }
    }
    None
}

/// A rational root, found by locating the integer roots of the monic
/// integer polynomial `a_n^(n-1) p(y / a_n)` with a Sturm sequence.
fn rational_root(p: &Poly) -> Option<Scalar> {
    let p = &p.divrem(&p.gcd(&p.derivative())).0;
    let mut den = BigInt::one();
    for c in &p.coeffs {
        den = den.lcm(c.as_rational()?.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let lowest = ints.iter().position(|c| !c.is_zero())?;
    if lowest > 0 {
        return Some(p.field.zero());
    }
    let n = ints.len() - 1;
    let an = ints[n].clone();
    let mut monic = Vec::with_capacity(n + 1);
    let mut scale = BigInt::one();
    for i in (0..=n).rev() {
        monic.push(&ints[i] * &scale);
        if i < n {
            scale *= &an;
        }
    }
    monic.reverse();
    monic[n] = BigInt::one();
    let q = Poly::new(Field::Rational, monic.iter().map(|c| Scalar::Q(BigRational::from_integer(c.clone()))).collect());
    let bound = monic.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let sturm = sturm_sequence(&q);
    let y = integer_root(&q, &sturm, -&bound - BigInt::one(), bound)?;
    Some(Scalar::Q(BigRational::new(y, an)))
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let k = seq.len();
        let r = seq[k - 2].rem(&seq[k - 1]);
        seq.push(r.scale(&-p.field.one()));
    }
    seq.pop();
    seq
}

/// Number of distinct real roots in `(-inf, x]`, up to a constant shift.
fn sign_changes(sturm: &[Poly], x: &BigInt) -> usize {
    let x = Scalar::Q(BigRational::from_integer(x.clone()));
    let signs: Vec<bool> = sturm.iter().map(|s| s.eval(&x)).filter(|v| !v.is_zero()).map(|v| v.is_negative()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// An integer root of `p` in `(lo, hi]`, bisecting on root counts.
fn integer_root(p: &Poly, sturm: &[Poly], lo: BigInt, hi: BigInt) -> Option<BigInt> {
    let mut stack = vec![(sign_changes(sturm, &lo), lo, sign_changes(sturm, &hi), hi)];
    while let Some((vlo, lo, vhi, hi)) = stack.pop() {
        if vlo == vhi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if p.eval(&Scalar::Q(BigRational::from_integer(hi.clone()))).is_zero() {
                return Some(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let vmid = sign_changes(sturm, &mid);
        stack.push((vmid, mid.clone(), vhi, hi));
        stack.push((vlo, lo, vmid, mid));
    }
    None
}
