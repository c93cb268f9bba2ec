use crate::complexfn::{CNum, Dd, Real, C64};
use crate::{BigRat, Error, Result, Scalar};

use super::poly::{horner, Poly2, RationalFn};

/// Beyond this many steps complex iteration runs in double-double.
pub const EXTENDED_ITERATION_THRESHOLD: i64 = 10_000;

/// `Σ_{k=0}^{r} c_k(n, z) u_{n+k} = 0` with initial values
/// `u_{n0}, ..., u_{n0+r-1}`.
#[derive(Clone, Debug)]
pub struct PRecurrence {
    coeffs: Vec<RationalFn>,
    initial_index: i64,
    initial_values: Vec<BigRat>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SequencePoint<S> {
    pub n: i64,
    pub value: S,
}

impl PRecurrence {
    pub fn new(coeffs: Vec<RationalFn>, initial_index: i64, initial_values: Vec<BigRat>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument("recurrence order must be at least 1".into()));
        }
        if coeffs[0].is_zero() || coeffs.last().is_some_and(RationalFn::is_zero) {
            return Err(Error::InvalidArgument(
                "leading and trailing coefficients must not vanish identically".into(),
            ));
        }
        if initial_values.len() != coeffs.len() - 1 {
            return Err(Error::InvalidArgument(format!(
                "order {} needs {} initial values, got {}",
                coeffs.len() - 1,
                coeffs.len() - 1,
                initial_values.len()
            )));
        }
        Ok(PRecurrence {
            coeffs,
            initial_index,
            initial_values,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalFn] {
        &self.coeffs
    }

    pub fn initial_index(&self) -> i64 {
        self.initial_index
    }

    pub fn initial_values(&self) -> &[BigRat] {
        &self.initial_values
    }

    /// The same recurrence multiplied through by the product of all
    /// coefficient denominators, so every coefficient is a polynomial.
    pub fn clear_denominators(&self) -> Result<Self> {
        let mut common = Poly2::one();
        for c in &self.coeffs {
            if !c.is_polynomial() && !divides_trivially(&common, c.denom()) {
                common = common.checked_mul(c.denom())?;
            }
        }
        let lift = RationalFn::poly(common);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.try_mul(&lift))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs, self.initial_index, self.initial_values.clone())
    }

    /// Streams `u_n` for `n = n0, n0+1, ...` at parameter `z`.
    pub fn iter<S: Scalar>(&self, z: &S) -> SequenceIter<S> {
        let split = |p: &Poly2| p.specialize_z(z);
        SequenceIter {
            num: self.coeffs.iter().map(|c| split(c.numer())).collect(),
            den: self.coeffs.iter().map(|c| split(c.denom())).collect(),
            window: self.initial_values.iter().map(S::from_rat).collect(),
            next_n: self.initial_index,
            emitted: 0,
            failed: false,
        }
    }
}

fn divides_trivially(acc: &Poly2, d: &Poly2) -> bool {
    acc == d
}

/// Forward iterator over a recurrence's values. Yields an error and stops
/// at the first coefficient pole.
pub struct SequenceIter<S> {
    num: Vec<Vec<S>>,
    den: Vec<Vec<S>>,
    window: Vec<S>,
    next_n: i64,
    emitted: usize,
    failed: bool,
}

impl<S: Scalar> SequenceIter<S> {
    fn coeff(&self, k: usize, n: &S, at: i64) -> Result<S> {
        let d = horner(&self.den[k], n);
        if d.is_zero() {
            return Err(Error::CoefficientPole {
                n: at,
                which: format!("denominator of coeff{k}"),
            });
        }
        Ok(horner(&self.num[k], n) / d)
    }

    /// Advances the window by one step: computes `u_{n+r}` from
    /// `u_n..u_{n+r-1}` where `n` is the window base.
    fn step(&mut self) -> Result<()> {
        let r = self.window.len();
        let base = self.next_n - r as i64;
        let n = S::from_i64(base);
        let lead = self.coeff(r, &n, base)?;
        if lead.is_zero() {
            return Err(Error::CoefficientPole {
                n: base,
                which: format!("leading coeff{r} vanishes"),
            });
        }
        let mut acc = S::zero();
        for k in 0..r {
            let c = self.coeff(k, &n, base)?;
            if !c.is_zero() {
                acc = acc + c * self.window[k].clone();
            }
        }
        let next = -acc / lead;
        self.window.remove(0);
        self.window.push(next);
        Ok(())
    }
}

impl<S: Scalar> Iterator for SequenceIter<S> {
    type Item = Result<SequencePoint<S>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let r = self.window.len();
        let value = if self.emitted < r {
            self.window[self.emitted].clone()
        } else {
            if let Err(e) = self.step() {
                self.failed = true;
                return Some(Err(e));
            }
            self.window[r - 1].clone()
        };
        let n = self.next_n;
        self.next_n += 1;
        self.emitted += 1;
        Some(Ok(SequencePoint { n, value }))
    }
}

/// `u_{n0}, ..., u_{n_max}` by forward iteration; exact for [`BigRat`].
pub fn eval_sequence<S: Scalar>(rec: &PRecurrence, z: &S, n_max: i64) -> Result<Vec<SequencePoint<S>>> {
    let first = rec.initial_index + rec.order() as i64;
    if n_max < first {
        return Err(Error::InvalidArgument(format!(
            "n_max must be at least {first} (initial index + order), got {n_max}"
        )));
    }
    rec.iter(z).take((n_max - rec.initial_index + 1) as usize).collect()
}

/// Complex-parameter evaluation that switches to double-double accumulation
/// when `n_max` exceeds [`EXTENDED_ITERATION_THRESHOLD`].
pub fn eval_sequence_complex(rec: &PRecurrence, z: C64, n_max: i64) -> Result<Vec<SequencePoint<C64>>> {
    if n_max <= EXTENDED_ITERATION_THRESHOLD {
        return eval_sequence(rec, &z, n_max);
    }
    let zd: CNum<Dd> = z.cast();
    Ok(eval_sequence(rec, &zd, n_max)?
        .into_iter()
        .map(|p| SequencePoint {
            n: p.n,
            value: p.value.to_c64(),
        })
        .collect())
}

/// `u_n` at the requested indices (ascending), without storing the rest.
pub fn sample_sequence<R: Real>(rec: &PRecurrence, z: CNum<R>, ns: &[i64]) -> Result<Vec<CNum<R>>> {
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "sample indices must be strictly increasing".into(),
        ));
    }
    let mut out = Vec::with_capacity(ns.len());
    let mut want = ns.iter().peekable();
    if want.peek().is_some_and(|&&n| n < rec.initial_index) {
        return Err(Error::InvalidArgument("sample index below the initial index".into()));
    }
    for p in rec.iter(&z) {
        let p = p?;
        if want.peek() == Some(&&p.n) {
            out.push(p.value);
            want.next();
            if want.peek().is_none() {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::parse_recurrence;

    #[test]
    fn first_order_factorial() {
        // u_{n+1} = (n+1) u_n, u_0 = 1
        let rec = parse_recurrence("coeff1: 1\ncoeff0: -(n+1)\ninit: n0=0; 1").unwrap();
        let seq = eval_sequence(&rec, &BigRat::zero(), 6).unwrap();
        let vals: Vec<_> = seq.iter().map(|p| p.value.to_string()).collect();
        assert_eq!(vals, ["1", "1", "2", "6", "24", "120", "720"]);
        assert_eq!(seq[3].n, 3);
    }

    #[test]
    fn n_max_precondition() {
        let rec = parse_recurrence("coeff1: 1\ncoeff0: -1\ninit: n0=3; 1").unwrap();
        assert!(eval_sequence(&rec, &BigRat::zero(), 3).is_err());
        assert_eq!(eval_sequence(&rec, &BigRat::zero(), 4).unwrap().len(), 2);
    }

    #[test]
    fn denominator_pole_reported() {
        let rec = parse_recurrence("coeff1: 1\ncoeff0: -1/(n-3)\ninit: n0=0; 1").unwrap();
        match eval_sequence(&rec, &BigRat::zero(), 10) {
            Err(Error::CoefficientPole { n, which }) => {
                assert_eq!(n, 3);
                assert!(which.contains("coeff0"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sampling_matches_full_run() {
        let rec = parse_recurrence("coeff2: n+z\ncoeff1: -(n+z)\ncoeff0: -1\ninit: n0=1; 0, 1").unwrap();
        let z = C64::new(0.3, 0.2);
        let full = eval_sequence(&rec, &z, 50).unwrap();
        let got = sample_sequence(&rec, z, &[1, 7, 50]).unwrap();
        assert_eq!(got, vec![full[0].value, full[6].value, full[49].value]);
        assert!(sample_sequence(&rec, z, &[5, 5]).is_err());
    }
}
