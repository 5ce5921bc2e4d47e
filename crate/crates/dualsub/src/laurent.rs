//! Exact Laurent-polynomial arithmetic over arbitrary-precision rationals,
//! including exact division, extended GCD and multi-term Bezout solving.
//!
//! The zero polynomial is the empty coefficient map; no zero coefficient is
//! ever stored. All operations are pure and exact; there is no tolerance
//! parameter anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{factorial, format_rational, rat_int, Rational};

#[derive(Debug, Error, Clone)]
pub enum LaurentError {
    #[error("evaluation at zero is undefined for Laurent polynomials")]
    EvalAtZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: LaurentPoly },
    #[error("Bezout equation not solvable: gcd {gcd} does not divide the target")]
    NotSolvable { gcd: LaurentPoly },
}

/// Finitely supported map exponent -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `z - 1`.
    pub fn z_minus_one() -> Self {
        Self::from_terms([(1, rat_int(1)), (0, rat_int(-1))])
    }

    /// `1 + z + ... + z^{m-1}`.
    pub fn unit_sum(m: u32) -> Self {
        Self::from_terms((0..m as i64).map(|e| (e, rat_int(1))))
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(min exponent, max exponent)` of the support; `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Number of exponent positions spanned: `max - min + 1`, 0 for zero.
    pub fn span(&self) -> i64 {
        match self.support() {
            Some((lo, hi)) => hi - lo + 1,
            None => 0,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat_int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, v)| (e, v * c))
                .collect(),
        }
    }

    /// Cauchy product; support bounds add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact value `sum c_i x^i`; fails at `x = 0`.
    pub fn eval(&self, x: &Rational) -> Result<Rational, LaurentError> {
        if x.is_zero() {
            return Err(LaurentError::EvalAtZero);
        }
        let mut acc = Rational::zero();
        let inv = Rational::one() / x;
        for (e, c) in self.terms() {
            let mut pw = Rational::one();
            let (base, n) = if e >= 0 { (x, e as u64) } else { (&inv, (-e) as u64) };
            for _ in 0..n {
                pw *= base;
            }
            acc += c * pw;
        }
        Ok(acc)
    }

    /// Value at `z = 1`: the coefficient sum.
    pub fn eval_one(&self) -> Rational {
        self.terms().fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    /// Exact k-th formal derivative; exponents may go negative.
    pub fn derivative(&self, k: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            p = Self {
                coeffs: p
                    .coeffs
                    .iter()
                    .filter(|(&e, _)| e != 0)
                    .map(|(&e, c)| (e - 1, c * rat_int(e)))
                    .collect(),
            };
        }
        p
    }

    /// Returns `p(z^m)`.
    pub fn substitute_power(&self, m: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * m as i64, c.clone()))
                .collect(),
        }
    }

    /// Returns `p(1/z)` (exponent negation).
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Residue-class decomposition `p(z) = sum_i p_i(z^m) z^{sign*i}` into
    /// `m` slices. `sign = +1` is the mask convention, `sign = -1` the
    /// sample-symbol convention.
    pub fn decompose(&self, m: u32, sign: i64) -> Vec<Self> {
        assert!(m >= 2, "decomposition needs m >= 2");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let m_i = m as i64;
        let mut parts = vec![Self::zero(); m as usize];
        for (e, c) in self.terms() {
            // e = m*q + sign*i with 0 <= i < m
            let i = (sign * e).rem_euclid(m_i);
            let q = (e - sign * i) / m_i;
            parts[i as usize].add_term(q, c.clone());
        }
        parts
    }

    /// Inverse of [`LaurentPoly::decompose`].
    pub fn recompose(parts: &[Self], m: u32, sign: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        let mut out = Self::zero();
        for (i, p) in parts.iter().enumerate() {
            out = out.add(&p.substitute_power(m).shift(sign * i as i64));
        }
        out
    }

    /// Coefficients of the expansion in powers of `(z - 1)` up to
    /// `(z-1)^{order-1}`: entry `j` is `p^{(j)}(1)/j!`, exact.
    pub fn taylor_at_one(&self, order: u32) -> Vec<Rational> {
        assert!(order >= 1);
        let mut out = Vec::with_capacity(order as usize);
        for j in 0..order {
            // p^{(j)}(1) = sum_e c_e * e(e-1)...(e-j+1)
            let mut acc = Rational::zero();
            for (e, c) in self.terms() {
                let mut ff = Rational::one();
                for t in 0..j as i64 {
                    ff *= rat_int(e - t);
                }
                acc += c * ff;
            }
            out.push(acc / factorial(j));
        }
        out
    }

    /// Builds `sum_j coeffs[j] (z-1)^j`.
    pub fn from_taylor_at_one(coeffs: &[Rational]) -> Self {
        let zm1 = Self::z_minus_one();
        let mut acc = Self::zero();
        let mut pw = Self::one();
        for c in coeffs {
            acc = acc.add(&pw.scale(c));
            pw = pw.mul(&zm1);
        }
        acc
    }

    /// Strips the lowest power of `z`, returning `(k, q)` with
    /// `self = z^k * q` and `q` an ordinary polynomial with nonzero constant
    /// term. Zero maps to `(0, 0)`.
    fn strip_monomial(&self) -> (i64, Self) {
        match self.support() {
            None => (0, Self::zero()),
            Some((lo, _)) => (lo, self.shift(-lo)),
        }
    }

    /// Exact division in the Laurent ring: returns `r` with `self = q * r`,
    /// or `NotDivisible` carrying the nonzero remainder.
    pub fn divide_exact(&self, q: &Self) -> Result<Self, LaurentError> {
        if q.is_zero() {
            return Err(LaurentError::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (alpha, p_ord) = self.strip_monomial();
        let (beta, q_ord) = q.strip_monomial();
        let (quot, rem) = poly_div_rem(&p_ord, &q_ord);
        if rem.is_zero() {
            Ok(quot.shift(alpha - beta))
        } else {
            Err(LaurentError::NotDivisible {
                remainder: rem.shift(alpha),
            })
        }
    }

    /// Extended GCD in the Laurent ring: `(g, u, v)` with `g = u*p + v*q`.
    /// `g` is normalized to an ordinary polynomial with nonzero constant term
    /// and leading coefficient 1, so coprimality is the predicate `g == 1`.
    pub fn gcd_extended(&self, other: &Self) -> (Self, Self, Self) {
        if self.is_zero() && other.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let (alpha, p_ord) = self.strip_monomial();
        let (beta, q_ord) = other.strip_monomial();

        // classical extended Euclid on ordinary polynomials
        let mut r0 = p_ord;
        let mut r1 = q_ord;
        let mut u0 = Self::one();
        let mut u1 = Self::zero();
        let mut v0 = Self::zero();
        let mut v1 = Self::one();
        while !r1.is_zero() {
            let (quot, rem) = poly_div_rem(&r0, &r1);
            let u2 = u0.sub(&quot.mul(&u1));
            let v2 = v0.sub(&quot.mul(&v1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
            v0 = v1;
            v1 = v2;
        }
        // r0 = u0 * p_ord + v0 * q_ord; normalize to monic with nonzero
        // constant term (units z^k and scalars are divided out)
        let (k, mut g) = r0.strip_monomial();
        let lead = g
            .support()
            .map(|(_, hi)| g.coeff(hi))
            .unwrap_or_else(Rational::one);
        let inv_lead = Rational::one() / lead;
        g = g.scale(&inv_lead);
        let u = u0.scale(&inv_lead).shift(-k - alpha);
        let v = v0.scale(&inv_lead).shift(-k - beta);
        (g, u, v)
    }

    /// Particular solution of `sum_i u_i * gens_i = target`, or `NotSolvable`
    /// when the GCD of the generators does not divide the target.
    pub fn multi_bezout(gens: &[Self], target: &Self) -> Result<Vec<Self>, LaurentError> {
        assert!(!gens.is_empty(), "at least one generator required");
        // fold extended GCDs left to right, tracking cofactors of each gen
        let mut g = gens[0].clone();
        let mut cofactors = vec![Self::one()];
        for gen in &gens[1..] {
            let (g2, u, v) = g.gcd_extended(gen);
            for c in cofactors.iter_mut() {
                *c = c.mul(&u);
            }
            cofactors.push(v);
            g = g2;
        }
        if g.is_zero() {
            if target.is_zero() {
                return Ok(vec![Self::zero(); gens.len()]);
            }
            return Err(LaurentError::NotSolvable { gcd: g });
        }
        let scale = match target.divide_exact(&g) {
            Ok(q) => q,
            Err(LaurentError::NotDivisible { .. }) => {
                return Err(LaurentError::NotSolvable { gcd: g })
            }
            Err(e) => return Err(e),
        };
        Ok(cofactors.into_iter().map(|c| c.mul(&scale)).collect())
    }

    /// Top-down reduction of `self` modulo `b`: returns `(q, r)` with
    /// `self = q*b + r` and `span(r) < span(b)`, killing the highest exponent
    /// of the running remainder at each step. Deterministic.
    pub fn reduce_topdown(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero());
        let (_, b_hi) = b.support().unwrap();
        let b_lead = b.coeff(b_hi);
        let b_span = b.span();
        let mut q = Self::zero();
        let mut r = self.clone();
        while !r.is_zero() && r.span() >= b_span {
            let (_, r_hi) = r.support().unwrap();
            let qc = r.coeff(r_hi) / &b_lead;
            let qe = r_hi - b_hi;
            let term = Self::monomial(qe, qc);
            r = r.sub(&term.mul(b));
            q = q.add(&term);
        }
        (q, r)
    }
}

/// Long division of ordinary polynomials (nonnegative exponents only):
/// `(quotient, remainder)` with `deg rem < deg divisor`.
fn poly_div_rem(p: &LaurentPoly, q: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    debug_assert!(!q.is_zero());
    let (_, q_deg) = q.support().unwrap();
    let q_lead = q.coeff(q_deg);
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero();
    while let Some((_, r_deg)) = rem.support() {
        if r_deg < q_deg {
            break;
        }
        let c = rem.coeff(r_deg) / &q_lead;
        let term = LaurentPoly::monomial(r_deg - q_deg, c);
        rem = rem.sub(&term.mul(q));
        quot = quot.add(&term);
    }
    (quot, rem)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = format_rational(&c.abs());
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lp(terms: &[(i64, (i64, i64))]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, (n, d))| (e, rat(n, d))))
    }

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(0, (1, 1)), (1, (1, 1))]);
        let b = lp(&[(0, (1, 1)), (1, (-1, 1))]);
        assert_eq!(a.mul(&b), lp(&[(0, (1, 1)), (2, (-1, 1))]));
    }

    #[test]
    fn add_identity_and_monomial_shift() {
        let p = lp(&[(-2, (3, 4)), (5, (1, 2))]);
        assert_eq!(p.add(&LaurentPoly::zero()), p);
        let q = lp(&[(-1, (1, 1)), (0, (2, 1))]);
        assert_eq!(q.mul(&LaurentPoly::monomial(1, rat(1, 1))), lp(&[(0, (1, 1)), (1, (2, 1))]));
    }

    #[test]
    fn eval_simple() {
        let p = lp(&[(0, (1, 1)), (1, (1, 1)), (2, (1, 1))]);
        assert_eq!(p.eval(&rat(1, 1)).unwrap(), rat(3, 1));
        assert_eq!(
            LaurentPoly::monomial(-1, rat(1, 1)).eval(&rat(2, 1)).unwrap(),
            rat(1, 2)
        );
        assert!(matches!(
            p.eval(&rat(0, 1)),
            Err(LaurentError::EvalAtZero)
        ));
    }

    #[test]
    fn derivatives() {
        assert_eq!(
            LaurentPoly::monomial(2, rat(1, 1)).derivative(1),
            LaurentPoly::monomial(1, rat(2, 1))
        );
        assert_eq!(
            LaurentPoly::monomial(-1, rat(1, 1)).derivative(1),
            LaurentPoly::monomial(-2, rat(-1, 1))
        );
    }

    #[test]
    fn substitute_and_reflect() {
        let p = lp(&[(0, (1, 1)), (1, (1, 1))]);
        assert_eq!(p.substitute_power(3), lp(&[(0, (1, 1)), (3, (1, 1))]));
        let q = lp(&[(-1, (1, 1)), (1, (2, 1))]);
        assert_eq!(q.reflect(), lp(&[(-1, (2, 1)), (1, (1, 1))]));
        assert_eq!(q.reflect().reflect(), q);
    }

    #[test]
    fn decompose_ones() {
        let p = lp(&[(0, (1, 1)), (1, (1, 1)), (2, (1, 1))]);
        let parts = p.decompose(3, 1);
        for part in &parts {
            assert_eq!(*part, LaurentPoly::one());
        }
        assert_eq!(LaurentPoly::recompose(&parts, 3, 1), p);
    }

    #[test]
    fn taylor_examples() {
        // (1+(z-1))^2
        assert_eq!(
            LaurentPoly::monomial(2, rat(1, 1)).taylor_at_one(3),
            vec![rat(1, 1), rat(2, 1), rat(1, 1)]
        );
        assert_eq!(
            LaurentPoly::monomial(-1, rat(1, 1)).taylor_at_one(2),
            vec![rat(1, 1), rat(-1, 1)]
        );
    }

    #[test]
    fn divide_exact_cases() {
        let num = lp(&[(0, (1, 1)), (2, (-1, 1))]); // 1 - z^2
        let den = lp(&[(0, (1, 1)), (1, (-1, 1))]); // 1 - z
        assert_eq!(num.divide_exact(&den).unwrap(), lp(&[(0, (1, 1)), (1, (1, 1))]));
        let bad = lp(&[(0, (1, 1)), (1, (1, 1))]);
        assert!(matches!(
            bad.divide_exact(&den),
            Err(LaurentError::NotDivisible { .. })
        ));
        assert!(matches!(
            bad.divide_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZeroPoly)
        ));
    }

    #[test]
    fn gcd_of_monomials_is_one() {
        let (g, u, v) = LaurentPoly::monomial(3, rat(1, 1))
            .gcd_extended(&LaurentPoly::monomial(1, rat(1, 1)));
        assert_eq!(g, LaurentPoly::one());
        let combo = u
            .mul(&LaurentPoly::monomial(3, rat(1, 1)))
            .add(&v.mul(&LaurentPoly::monomial(1, rat(1, 1))));
        assert_eq!(combo, g);
    }

    #[test]
    fn gcd_with_common_factor() {
        let p = lp(&[(0, (1, 1)), (2, (-1, 1))]); // 1 - z^2
        let q = lp(&[(0, (1, 1)), (1, (-1, 1))]); // 1 - z
        let (g, u, v) = p.gcd_extended(&q);
        // normalized: monic ordinary polynomial with nonzero constant term
        assert_eq!(g, lp(&[(0, (-1, 1)), (1, (1, 1))])); // z - 1
        assert_eq!(u.mul(&p).add(&v.mul(&q)), g);
        assert!(p.divide_exact(&g).is_ok());
        assert!(q.divide_exact(&g).is_ok());
    }

    #[test]
    fn multi_bezout_cases() {
        let t = lp(&[(0, (7, 3)), (2, (1, 1))]);
        let sol = LaurentPoly::multi_bezout(&[LaurentPoly::one()], &t).unwrap();
        assert_eq!(sol, vec![t.clone()]);

        let gens = [lp(&[(0, (1, 1)), (1, (-1, 1))]), lp(&[(0, (1, 1)), (1, (1, 1))])];
        let target = LaurentPoly::constant(rat(2, 1));
        let sol = LaurentPoly::multi_bezout(&gens, &target).unwrap();
        let combo = sol[0].mul(&gens[0]).add(&sol[1].mul(&gens[1]));
        assert_eq!(combo, target);

        // (1-z) and (1-z) share the root 1; target 1 not reachable
        let shared = [gens[0].clone(), gens[0].clone()];
        assert!(matches!(
            LaurentPoly::multi_bezout(&shared, &LaurentPoly::one()),
            Err(LaurentError::NotSolvable { .. })
        ));
    }

    #[test]
    fn reduce_topdown_invariant() {
        let a = lp(&[(-2, (5, 1)), (0, (1, 3)), (3, (2, 1))]);
        let b = lp(&[(0, (75, 128)), (1, (3, 256))]);
        let (q, r) = a.reduce_topdown(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.span() < b.span());
    }
}
