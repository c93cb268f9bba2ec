use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{BigRat, Error, Result, Scalar};

/// Largest degree supported in each variable.
pub const MAX_DEGREE: usize = 8;

/// Dense bivariate polynomial with rational coefficients; `c[i][j]` multiplies
/// `n^i z^j`.
#[derive(Clone, Debug)]
pub struct Poly2 {
    c: Vec<Vec<BigRat>>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { c: Vec::new() }
    }

    pub fn constant(v: BigRat) -> Self {
        Poly2 { c: vec![vec![v]] }.trimmed()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn n() -> Self {
        Poly2 {
            c: vec![vec![], vec![BigRat::one()]],
        }
    }

    pub fn z() -> Self {
        Poly2 {
            c: vec![vec![BigRat::zero(), BigRat::one()]],
        }
    }

    /// Builds from `c[i][j]`, the coefficient of `n^i z^j`.
    pub fn from_coeffs(c: Vec<Vec<BigRat>>) -> Result<Self> {
        Poly2 { c }.trimmed().checked()
    }

    fn trimmed(mut self) -> Self {
        for row in &mut self.c {
            while row.last().is_some_and(|v| v.is_zero()) {
                row.pop();
            }
        }
        while self.c.last().is_some_and(|r| r.is_empty()) {
            self.c.pop();
        }
        self
    }

    fn checked(self) -> Result<Self> {
        if self.degree_n() > MAX_DEGREE as i32 || self.degree_z() > MAX_DEGREE as i32 {
            return Err(Error::InvalidArgument(format!(
                "polynomial degree exceeds {MAX_DEGREE} in n or z: {self}"
            )));
        }
        Ok(self)
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRat {
        self.c
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Returns the constant value if the polynomial has no `n` or `z` terms.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.c.len() {
            0 => Some(BigRat::zero()),
            1 if self.c[0].len() == 1 => Some(self.c[0][0].clone()),
            _ => None,
        }
    }

    /// Degree in `n`; `-1` for the zero polynomial.
    pub fn degree_n(&self) -> i32 {
        self.c.len() as i32 - 1
    }

    /// Degree in `z`; `-1` for the zero polynomial.
    pub fn degree_z(&self) -> i32 {
        self.c.iter().map(|r| r.len() as i32 - 1).max().unwrap_or(-1)
    }

    pub fn scale(&self, s: &BigRat) -> Self {
        Poly2 {
            c: self.c.iter().map(|r| r.iter().map(|v| v * s).collect()).collect(),
        }
        .trimmed()
    }

    /// Polynomial in `n` obtained by fixing `z`; index `i` holds the `n^i` term.
    pub fn specialize_z<S: Scalar>(&self, z: &S) -> Vec<S> {
        self.c
            .iter()
            .map(|row| {
                row.iter()
                    .rev()
                    .fold(S::zero(), |acc, v| acc * z.clone() + S::from_rat(v))
            })
            .collect()
    }

    pub fn eval<S: Scalar>(&self, n: &S, z: &S) -> S {
        horner(&self.specialize_z(z), n)
    }

    /// Leading term in lexicographic order (`n` before `z`).
    fn lead(&self) -> Option<(usize, usize, &BigRat)> {
        let i = self.c.len().checked_sub(1)?;
        let j = self.c[i].len() - 1;
        Some((i, j, &self.c[i][j]))
    }

    /// `self / d` when the division is exact, by lexicographic reduction.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (di, dj, dv) = d.lead()?;
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some((i, j, v)) = rem.lead() {
            if i < di || j < dj {
                return None;
            }
            let mut row = vec![BigRat::zero(); j - dj + 1];
            row[j - dj] = v / dv;
            let mut rows = vec![Vec::new(); i - di + 1];
            rows[i - di] = row;
            let t = Poly2 { c: rows };
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        (self * other).checked()
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Poly2::one();
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }
}

/// Evaluates `Σ p[i] x^i`.
pub fn horner<S: Scalar>(p: &[S], x: &S) -> S {
    p.iter().rev().fold(S::zero(), |acc, v| acc * x.clone() + v.clone())
}

impl PartialEq for Poly2 {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for Poly2 {}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&BigRat::from(-1))
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, o: &Poly2) -> Poly2 {
        let rows = self.c.len().max(o.c.len());
        let c = (0..rows)
            .map(|i| {
                let a = self.c.get(i).map(Vec::as_slice).unwrap_or(&[]);
                let b = o.c.get(i).map(Vec::as_slice).unwrap_or(&[]);
                (0..a.len().max(b.len()))
                    .map(|j| match (a.get(j), b.get(j)) {
                        (Some(x), Some(y)) => x + y,
                        (Some(x), None) | (None, Some(x)) => x.clone(),
                        (None, None) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        Poly2 { c }.trimmed()
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, o: &Poly2) -> Poly2 {
        self + &(-o)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, o: &Poly2) -> Poly2 {
        if self.is_zero() || o.is_zero() {
            return Poly2::zero();
        }
        let rows = self.c.len() + o.c.len() - 1;
        let cols = (self.degree_z() + o.degree_z() + 1) as usize;
        let mut c = vec![vec![BigRat::zero(); cols]; rows];
        for (i1, r1) in self.c.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (i2, r2) in o.c.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        c[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        Poly2 { c }.trimmed()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(usize, usize, &BigRat)> = Vec::new();
        for (i, row) in self.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    terms.push((i, j, v));
                }
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        // total degree descending, then n-degree descending
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        for (k, (i, j, v)) in terms.into_iter().enumerate() {
            let neg = v.is_negative();
            let mag = v.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            let monomial = i + j > 0;
            if !monomial || mag != 1 {
                factors.push(mag.to_string());
            }
            for (var, e) in [("n", i), ("z", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Quotient of two [`Poly2`]; the denominator is never the zero polynomial.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: Poly2,
    den: Poly2,
}

impl RationalFn {
    pub fn new(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("rational function with zero denominator".into()));
        }
        Ok(RationalFn { num, den }.normalized())
    }

    pub fn poly(p: Poly2) -> Self {
        RationalFn {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn constant(v: BigRat) -> Self {
        Self::poly(Poly2::constant(v))
    }

    pub fn n() -> Self {
        Self::poly(Poly2::n())
    }

    pub fn z() -> Self {
        Self::poly(Poly2::z())
    }

    /// Folds a constant denominator into the numerator and collapses `p/p`.
    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return Self::poly(Poly2::zero());
        }
        if let Some(c) = self.den.as_constant() {
            let inv = c.recip().expect("nonzero denominator");
            return Self::poly(self.num.scale(&inv));
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return Self::poly(q);
        }
        self
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// `deg_z(num) - deg_z(den)`, the growth order in `z`; `None` for zero.
    pub fn z_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.num.degree_z() - self.den.degree_z())
    }

    pub fn depends_on_n(&self) -> bool {
        self.num.degree_n() > 0 || self.den.degree_n() > 0
    }

    /// Evaluates at `(n, z)`; errors where the denominator vanishes.
    pub fn eval<S: Scalar>(&self, n: &S, z: &S) -> Result<S> {
        let d = self.den.eval(n, z);
        if d.is_zero() {
            return Err(Error::Pole {
                function: "rational function",
                at: format!("n = {n}, z = {z}"),
            });
        }
        Ok(self.num.eval(n, z) / d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("reciprocal of zero rational function".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        let num = &self.num.checked_mul(&o.den)? + &o.num.checked_mul(&self.den)?;
        Self::new(num, self.den.checked_mul(&o.den)?)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?)
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.recip()?)
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        Self::new(self.num.pow(e)?, self.den.pow(e)?)
    }
}

impl PartialEq for RationalFn {
    /// Equality as functions: `a/b = c/d` iff `a d = b c`.
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly2| {
            let s = p.to_string();
            if s.contains(' ') || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRat {
        BigRat::ratio(a, b)
    }

    #[test]
    fn arithmetic_and_display() {
        let n = Poly2::n();
        let z = Poly2::z();
        let s = &n + &z;
        assert_eq!(s.to_string(), "n + z");
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "n^2 + 2*n*z + z^2");
        assert_eq!((&sq - &sq), Poly2::zero());
        assert_eq!((-&s).to_string(), "-n - z");
        assert_eq!(Poly2::constant(r(-3, 2)).to_string(), "-3/2");
        assert_eq!(sq.degree_n(), 2);
        assert_eq!(Poly2::zero().degree_z(), -1);
    }

    #[test]
    fn evaluation() {
        let p = &(&Poly2::n() * &Poly2::z()) + &Poly2::constant(r(1, 2));
        assert_eq!(p.eval(&BigRat::from(3), &BigRat::from(4)), r(25, 2));
        let f = RationalFn::new(Poly2::one(), &Poly2::n() + &Poly2::z()).unwrap();
        assert_eq!(f.eval(&BigRat::from(2), &r(1, 2)).unwrap(), r(2, 5));
        assert!(matches!(
            f.eval(&BigRat::from(1), &BigRat::from(-1)),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn rational_equality_is_functional() {
        let s = RationalFn::poly(&Poly2::n() + &Poly2::z());
        let a = s.try_mul(&s).unwrap().try_div(&s).unwrap();
        assert_eq!(a, s);
        assert_eq!(s.try_div(&s).unwrap().as_constant_poly(), Some(BigRat::one()));
        let g = RationalFn::new(Poly2::one(), &Poly2::z() + &Poly2::one()).unwrap();
        assert_eq!(g.z_degree(), Some(-1));
        assert_eq!(g.to_string(), "1/(z + 1)");
    }

    #[test]
    fn exact_division() {
        let s = &Poly2::n() + &Poly2::z();
        let t = &Poly2::n() - &Poly2::one();
        let p = &s * &t;
        assert_eq!(p.div_exact(&s), Some(t.clone()));
        assert_eq!(p.div_exact(&t), Some(s.clone()));
        assert_eq!(s.div_exact(&t), None);
        let q = RationalFn::new(-&s, s.clone()).unwrap();
        assert_eq!(q.to_string(), "-1");
    }

    #[test]
    fn degree_cap() {
        let z = Poly2::z();
        assert!(z.pow(8).is_ok());
        assert!(z.pow(9).is_err());
    }

    impl RationalFn {
        fn as_constant_poly(&self) -> Option<BigRat> {
            if self.is_polynomial() {
                self.num.as_constant()
            } else {
                None
            }
        }
    }
}
