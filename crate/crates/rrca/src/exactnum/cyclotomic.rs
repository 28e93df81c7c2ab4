//! The cyclotomic field Q(zeta_N) in the power basis modulo the N-th
//! cyclotomic polynomial. Elements are canonical remainders, so equality is
//! coefficient-wise and hashing is well defined.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rational_from_str, rational_to_string, ExactNumError, Integer, Rational};

/// Euler totient by trial-division factorization.
pub fn euler_phi(n: u32) -> usize {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn int_poly_div_exact(num: &[Integer], den: &[Integer]) -> Vec<Integer> {
    // den is monic; the division is known to be exact
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![Integer::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Integer::is_zero), "inexact division");
    quot
}

/// The N-th cyclotomic polynomial with integer coefficients, ascending degree.
///
/// Computed by dividing x^N - 1 by the product of the cyclotomic polynomials
/// of all proper divisors of N.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Integer> {
    assert!(n >= 1, "cyclotomic polynomial is defined for n >= 1");
    let mut known: Vec<(u32, Vec<Integer>)> = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut p = vec![Integer::zero(); d as usize + 1];
        p[0] = -Integer::one();
        p[d as usize] = Integer::one();
        for (e, phi_e) in &known {
            if d % e == 0 {
                p = int_poly_div_exact(&p, phi_e);
            }
        }
        known.push((d, p));
    }
    known.pop().unwrap().1
}

#[derive(Debug)]
struct CycloCtx {
    order: u32,
    phi: usize,
    /// Monic modulus over Q, ascending, length phi + 1.
    modulus: Vec<Rational>,
}

impl CycloCtx {
    fn new(order: u32) -> Self {
        let phi = euler_phi(order);
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        debug_assert_eq!(modulus.len(), phi + 1);
        CycloCtx { order, phi, modulus }
    }
}

/// Handle to a fixed cyclotomic field Q(zeta_N). Cheap to clone; all elements
/// of the field share the context (the reduction modulus is computed once).
#[derive(Clone, Debug)]
pub struct CycloField {
    ctx: Arc<CycloCtx>,
}

/// An element of Q(zeta_N): its canonical remainder modulo the N-th
/// cyclotomic polynomial, with exactly phi(N) rational coefficients.
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<Rational>,
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be >= 1");
        CycloField { ctx: Arc::new(CycloCtx::new(order)) }
    }

    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    /// Degree of the field over Q, i.e. phi(N).
    pub fn degree(&self) -> usize {
        self.ctx.phi
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic { ctx: self.ctx.clone(), coeffs: vec![Rational::zero(); self.ctx.phi] }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_rational(Rational::one())
    }

    pub fn integer(&self, v: i64) -> Cyclotomic {
        self.from_rational(Rational::from_integer(Integer::from(v)))
    }

    pub fn from_rational(&self, r: Rational) -> Cyclotomic {
        let mut c = self.zero();
        c.coeffs[0] = r;
        c
    }

    /// zeta_N itself.
    pub fn zeta(&self) -> Cyclotomic {
        self.zeta_pow(1)
    }

    /// zeta_N^k for any integer k (negative exponents wrap around).
    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        let e = k.rem_euclid(self.ctx.order as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        self.reduce(&raw)
    }

    /// Canonicalizes a raw polynomial in zeta_N of any degree: the remainder
    /// modulo the N-th cyclotomic polynomial. Idempotent on canonical input.
    pub fn reduce(&self, raw: &[Rational]) -> Cyclotomic {
        let mut coeffs = rat_poly_rem(raw, &self.ctx.modulus);
        coeffs.resize(self.ctx.phi, Rational::zero());
        Cyclotomic { ctx: self.ctx.clone(), coeffs }
    }

    /// Builds an element from exactly phi(N) canonical coefficients.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Cyclotomic {
        self.reduce(&coeffs)
    }

    fn same_ctx(&self, other: &CycloField) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.order == other.ctx.order
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.same_ctx(other)
    }
}
impl Eq for CycloField {}

// Plain remainder of `num` by the monic polynomial `modulus` over Q.
fn rat_poly_rem(num: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    let deg_m = modulus.len() - 1;
    let mut rem: Vec<Rational> = num.to_vec();
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    while rem.len() > deg_m {
        let k = rem.len() - 1 - deg_m;
        let c = rem.last().unwrap().clone();
        for (i, m) in modulus.iter().enumerate() {
            rem[k + i] -= &c * m;
        }
        while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
            rem.pop();
        }
    }
    rem
}

fn rat_poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Rational::is_zero)
}

fn rat_poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if rat_poly_is_zero(a) || rat_poly_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), Rational::zero());
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    rat_poly_trim(out)
}

// Quotient and remainder by a nonzero divisor over Q.
fn rat_poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = rat_poly_trim(den.to_vec());
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem = rat_poly_trim(num.to_vec());
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    let mut quot: Vec<Rational> = Vec::new();
    while rem.len() > dd || (dd == 0 && !rem.is_empty()) {
        if rem.len() < den.len() {
            break;
        }
        let k = rem.len() - den.len();
        let c = rem.last().unwrap() / &lead;
        if quot.len() < k + 1 {
            quot.resize(k + 1, Rational::zero());
        }
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        rem = rat_poly_trim(rem);
    }
    (quot, rem)
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field(&self) -> CycloField {
        CycloField { ctx: self.ctx.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value if this element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic modulus.
    pub fn inv(&self) -> Result<Cyclotomic, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::DivisionByZero { order: self.ctx.order });
        }
        // Extended Euclid: s*self + t*modulus = gcd (a nonzero constant).
        let mut r0 = self.ctx.modulus.clone();
        let mut r1 = rat_poly_trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !rat_poly_is_zero(&r1) {
            let (q, r) = rat_poly_divrem(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the gcd; it must be a nonzero constant since the modulus is
        // irreducible and self is nonzero of smaller degree.
        assert_eq!(r0.len(), 1, "cyclotomic modulus is irreducible");
        let g = r0[0].clone();
        let inv_coeffs: Vec<Rational> = s0.iter().map(|c| c / &g).collect();
        Ok(self.field().reduce(&inv_coeffs))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Cyclotomic, ExactNumError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    fn assert_same_order(&self, other: &Cyclotomic) {
        assert_eq!(
            self.ctx.order, other.ctx.order,
            "mixed cyclotomic orders {} and {}",
            self.ctx.order, other.ctx.order
        );
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Lexicographic on (order, coefficient vector): any fixed total order works
// for canonical multiset sorting.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .order
            .cmp(&other.ctx.order)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(N={}, {})", self.ctx.order, self)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.assert_same_order(rhs);
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(rhs.coeffs.iter())
                    .map(|(a, b)| a $op b)
                    .collect();
                Cyclotomic { ctx: self.ctx.clone(), coeffs }
            }
        }
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_order(rhs);
        if self.ctx.phi == 1 {
            // Q(zeta_1) and Q(zeta_2) are just Q
            return Cyclotomic {
                ctx: self.ctx.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let raw = rat_poly_mul(&self.coeffs, &rhs.coeffs);
        self.field().reduce(&raw)
    }
}
impl std::ops::Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        (&self) * (&rhs)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -(&self)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("order", &self.ctx.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct CyclotomicDto {
    order: u32,
    coeffs: Vec<String>,
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = CyclotomicDto::deserialize(deserializer)?;
        if dto.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be >= 1"));
        }
        let field = CycloField::new(dto.order);
        if dto.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for order {}, got {}",
                field.degree(),
                dto.order,
                dto.coeffs.len()
            )));
        }
        let coeffs = dto
            .coeffs
            .iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(field.from_coeffs(coeffs))
    }
}
