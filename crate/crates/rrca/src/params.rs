//! Parameter handling for G(m,1,n): numeric and generic-symbolic parameter
//! specifications, the conversion between the reflection-class values
//! (kappa, c_1..c_{m-1}) and the weight values (H_0..H_{m-1}), and the
//! derived data a_i = H_1 + ... + H_i and C = sum_j (j-m) H_j used by the
//! block criterion.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{CycloField, Cyclotomic, LinearExponent, Rational};

#[derive(Debug, Error)]
pub enum ParamError {
    #[error("m = {m} must divide the cyclotomic order N = {order}")]
    OrderNotMultiple { m: usize, order: u32 },
    #[error("expected {expected} c-values for m = {m}, got {got}")]
    WrongCCount { m: usize, expected: usize, got: usize },
    #[error("all numeric parameter values must share one cyclotomic order")]
    MixedOrders,
    #[error("the H-values must sum to zero")]
    NonZeroSum,
    #[error("scaling by zero is not an isomorphism")]
    ZeroScale,
    #[error("component index {beta} out of range 0..{m}")]
    BetaOutOfRange { beta: usize, m: usize },
}

/// Numeric parameters (kappa, c_1..c_{m-1}) with values in a fixed Q(zeta_N),
/// m | N, housing the primitive m-th root eta = zeta_N^(N/m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericParams {
    m: usize,
    field: CycloField,
    kappa: Cyclotomic,
    c: Vec<Cyclotomic>,
}

/// A parameter specification: exact numeric values, or generic-symbolic mode
/// where kappa and H_1..H_{m-1} are independent formal symbols.
#[derive(Clone, Debug)]
pub enum ParamSpec {
    Numeric(NumericParams),
    Generic { m: usize },
}

impl ParamSpec {
    pub fn m(&self) -> usize {
        match self {
            ParamSpec::Numeric(p) => p.m,
            ParamSpec::Generic { m } => *m,
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, ParamSpec::Generic { .. })
    }
}

impl NumericParams {
    pub fn new(m: usize, kappa: Cyclotomic, c: Vec<Cyclotomic>) -> Result<Self, ParamError> {
        assert!(m >= 1, "m must be >= 1");
        let field = kappa.field();
        if !(field.order() as usize).is_multiple_of(m) {
            return Err(ParamError::OrderNotMultiple { m, order: field.order() });
        }
        if c.len() != m - 1 {
            return Err(ParamError::WrongCCount { m, expected: m - 1, got: c.len() });
        }
        if c.iter().any(|v| v.order() != field.order()) {
            return Err(ParamError::MixedOrders);
        }
        Ok(NumericParams { m, field, kappa, c })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn kappa(&self) -> &Cyclotomic {
        &self.kappa
    }

    pub fn c(&self) -> &[Cyclotomic] {
        &self.c
    }

    /// eta^k where eta = zeta_N^(N/m) is the primitive m-th root of unity.
    pub fn eta_pow(&self, k: i64) -> Cyclotomic {
        let step = (self.field.order() as usize / self.m) as i64;
        self.field.zeta_pow(k.rem_euclid(self.m as i64) * step)
    }

    /// Multiplies kappa and every c_l by a nonzero scalar; the block theory
    /// is invariant under this rescaling.
    pub fn scale(&self, a: &Cyclotomic) -> Result<NumericParams, ParamError> {
        if a.is_zero() {
            return Err(ParamError::ZeroScale);
        }
        Ok(NumericParams {
            m: self.m,
            field: self.field.clone(),
            kappa: &self.kappa * a,
            c: self.c.iter().map(|v| v * a).collect(),
        })
    }

    /// Derived quantities (H_j, a_i, C, h) via discrete Fourier inversion of
    /// -c_l (1 - eta^{-l}) = sum_j eta^{-lj} H_j with the convention H sums
    /// to zero.
    pub fn derive(&self) -> DerivedParams {
        let m = self.m;
        let field = &self.field;
        // b_0 = 0, b_l = -c_l (1 - eta^{-l})
        let mut b = vec![field.zero()];
        for l in 1..m {
            let factor = field.one() - self.eta_pow(-(l as i64));
            b.push(-(&self.c[l - 1] * &factor));
        }
        let inv_m = Rational::new(1.into(), (m as i64).into());
        let mut big_h = Vec::with_capacity(m);
        for j in 0..m {
            let mut sum = field.zero();
            for (l, bl) in b.iter().enumerate() {
                sum = &sum + &(&self.eta_pow((l * j) as i64) * bl);
            }
            big_h.push(sum.scale(&inv_m));
        }
        let mut a = Vec::with_capacity(m);
        let mut acc = field.zero();
        a.push(acc.clone());
        for h_j in big_h.iter().take(m).skip(1) {
            acc = &acc + h_j;
            a.push(acc.clone());
        }
        let mut big_c = field.zero();
        for (j, h_j) in big_h.iter().enumerate().skip(1) {
            big_c = &big_c + &h_j.scale(&Rational::from_integer((j as i64 - m as i64).into()));
        }
        DerivedParams { big_h, a, big_c, h: -&self.kappa }
    }

    /// The identity -sum_l c_l eta^{beta l} = C + m a_beta, which underpins
    /// rewriting baby Verma eigenvalues in terms of (a, C). Must hold exactly
    /// for every beta when the conversion is correct.
    pub fn check_beta_identity(&self, beta: usize) -> bool {
        if beta >= self.m {
            return false;
        }
        let derived = self.derive();
        let field = &self.field;
        let mut lhs = field.zero();
        for l in 1..self.m {
            lhs = &lhs - &(&self.c[l - 1] * &self.eta_pow((beta * l) as i64));
        }
        let m_rat = Rational::from_integer((self.m as i64).into());
        let rhs = &derived.big_c + &derived.a[beta].scale(&m_rat);
        lhs == rhs
    }
}

/// The weight-side parameter data: H_0..H_{m-1} (summing to zero),
/// a = (0, H_1, H_1+H_2, ...), the constant C = sum_{j>=1} (j-m) H_j, and
/// h = -kappa.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedParams {
    pub big_h: Vec<Cyclotomic>,
    pub a: Vec<Cyclotomic>,
    pub big_c: Cyclotomic,
    pub h: Cyclotomic,
}

impl Serialize for DerivedParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DerivedParams", 4)?;
        let show = |v: &[Cyclotomic]|

            v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        st.serialize_field("H", &show(&self.big_h))?;
        st.serialize_field("a", &show(&self.a))?;
        st.serialize_field("C", &self.big_c.to_string())?;
        st.serialize_field("h", &self.h.to_string())?;
        st.end()
    }
}

/// Inverse conversion: recovers (c_1..c_{m-1}) from H-values summing to zero;
/// c_l = -(sum_j eta^{-lj} H_j) / (1 - eta^{-l}).
pub fn h_to_c(m: usize, big_h: &[Cyclotomic]) -> Result<Vec<Cyclotomic>, ParamError> {
    assert!(m >= 1, "m must be >= 1");
    if big_h.len() != m {
        return Err(ParamError::WrongCCount { m, expected: m, got: big_h.len() });
    }
    let field = big_h[0].field();
    if !(field.order() as usize).is_multiple_of(m) {
        return Err(ParamError::OrderNotMultiple { m, order: field.order() });
    }
    if big_h.iter().any(|v| v.order() != field.order()) {
        return Err(ParamError::MixedOrders);
    }
    let mut sum = field.zero();
    for h in big_h {
        sum = &sum + h;
    }
    if !sum.is_zero() {
        return Err(ParamError::NonZeroSum);
    }
    let step = (field.order() as usize / m) as i64;
    let eta_pow = |k: i64| field.zeta_pow(k.rem_euclid(m as i64) * step);
    let mut c = Vec::with_capacity(m.saturating_sub(1));
    for l in 1..m {
        let mut num = field.zero();
        for (j, h) in big_h.iter().enumerate() {
            num = &num + &(&eta_pow(-((l * j) as i64)) * h);
        }
        let den = field.one() - eta_pow(-(l as i64));
        let inv = den.inv().expect("1 - eta^{-l} is nonzero for 1 <= l < m");
        c.push(-&(&num * &inv));
    }
    Ok(c)
}

/// The exponent a_beta - kappa * ct as a formal integer linear form in
/// (kappa, H_1..H_{m-1}): kappa-coefficient -ct, H_j-coefficient 1 for j <= beta.
pub fn generic_exponent(beta: usize, ct: i64, m: usize) -> LinearExponent {
    assert!(beta < m, "component index {beta} out of range for m = {m}");
    let mut h = vec![0i64; m - 1];
    for slot in h.iter_mut().take(beta) {
        *slot = 1;
    }
    LinearExponent { kappa: -ct, h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CycloField;
    use rand::{Rng, SeedableRng};

    fn ints(field: &CycloField, vals: &[i64]) -> Vec<Cyclotomic> {
        vals.iter().map(|&v| field.integer(v)).collect()
    }

    fn random_params(
        rng: &mut rand_chacha::ChaCha8Rng,
        m: usize,
        field: &CycloField,
    ) -> NumericParams {
        let mut val = |rng: &mut rand_chacha::ChaCha8Rng| {
            let coeffs: Vec<Rational> = (0..field.degree())
                .map(|_| {
                    Rational::new(
                        rng.gen_range(-4i64..=4).into(),
                        rng.gen_range(1i64..=3).into(),
                    )
                })
                .collect();
            field.from_coeffs(coeffs)
        };
        let kappa = val(rng);
        let c: Vec<Cyclotomic> = (0..m - 1).map(|_| val(rng)).collect();
        NumericParams::new(m, kappa, c).unwrap()
    }

    #[test]
    fn derive_m2_example() {
        let field = CycloField::new(2);
        let p = NumericParams::new(2, field.integer(1), ints(&field, &[1])).unwrap();
        let d = p.derive();
        assert_eq!(d.big_h, ints(&field, &[-1, 1]));
        assert_eq!(d.a, ints(&field, &[0, 1]));
        assert_eq!(d.big_c, field.integer(-1));
        assert_eq!(d.h, field.integer(-1));
    }

    #[test]
    fn derive_zero_params() {
        for m in 1..=5usize {
            let field = CycloField::new(m as u32);
            let p =
                NumericParams::new(m, field.zero(), vec![field.zero(); m - 1]).unwrap();
            let d = p.derive();
            assert!(d.big_h.iter().all(Cyclotomic::is_zero));
            assert!(d.a.iter().all(Cyclotomic::is_zero));
            assert!(d.big_c.is_zero());
        }
    }

    // Independent oracle for the m = 3 example: solve the linear system
    // sum_j eta^{-lj} H_j = b_l directly by Gaussian elimination.
    #[test]
    fn derive_m3_matches_direct_solve() {
        let m = 3usize;
        let field = CycloField::new(3);
        let p = NumericParams::new(m, field.integer(1), ints(&field, &[1, 1])).unwrap();

        let eta = |k: i64| field.zeta_pow(k);
        let mut b = vec![field.zero()];
        for l in 1..m {
            let factor = field.one() - eta(-(l as i64));
            b.push(-(&p.c()[l - 1] * &factor));
        }
        // build augmented matrix rows [eta^{-lj}]_j | b_l
        let mut rows: Vec<Vec<Cyclotomic>> = (0..m)
            .map(|l| {
                let mut row: Vec<Cyclotomic> =
                    (0..m).map(|j| eta(-((l * j) as i64))).collect();
                row.push(b[l].clone());
                row
            })
            .collect();
        for col in 0..m {
            let pivot = (col..m).find(|&r| !rows[r][col].is_zero()).unwrap();
            rows.swap(col, pivot);
            let inv = rows[col][col].inv().unwrap();
            for x in rows[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..m {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in 0..=m {
                        let delta = &f * &rows[col][j];
                        rows[r][j] = &rows[r][j] - &delta;
                    }
                }
            }
        }
        let solved: Vec<Cyclotomic> = (0..m).map(|r| rows[r][m].clone()).collect();

        let d = p.derive();
        assert_eq!(d.big_h, solved);
        let mut sum = field.zero();
        for h in &d.big_h {
            sum = &sum + h;
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn h_to_c_examples() {
        let field = CycloField::new(2);
        assert_eq!(
            h_to_c(2, &ints(&field, &[0, 0])).unwrap(),
            ints(&field, &[0])
        );
        assert_eq!(
            h_to_c(2, &ints(&field, &[-1, 1])).unwrap(),
            ints(&field, &[1])
        );
        let five_halves = field.one().scale(&Rational::new(5.into(), 2.into()));
        let h = vec![-&five_halves, five_halves.clone()];
        assert_eq!(h_to_c(2, &h).unwrap(), vec![five_halves]);
        assert!(matches!(
            h_to_c(2, &ints(&field, &[1, 1])),
            Err(ParamError::NonZeroSum)
        ));
    }

    #[test]
    fn roundtrip_h_to_c_to_h() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut count = 0;
        while count < 200 {
            let m = rng.gen_range(1usize..=6);
            let field = CycloField::new(m as u32);
            let p = random_params(&mut rng, m, &field);
            let d = p.derive();
            let mut sum = field.zero();
            for h in &d.big_h {
                sum = &sum + h;
            }
            assert!(sum.is_zero(), "H must sum to zero exactly at m={m}");
            let c_back = h_to_c(m, &d.big_h).unwrap();
            assert_eq!(c_back, p.c(), "roundtrip failed at m={m}");
            count += 1;
        }
    }

    #[test]
    fn beta_identity_examples_and_random() {
        let field = CycloField::new(2);
        let p = NumericParams::new(2, field.integer(1), ints(&field, &[1])).unwrap();
        // beta = 1: -c_1 eta = 1 and C + 2 a_1 = -1 + 2
        assert!(p.check_beta_identity(1));
        assert!(p.check_beta_identity(0));

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let m = rng.gen_range(1usize..=6);
            let field = CycloField::new(m as u32);
            let p = random_params(&mut rng, m, &field);
            for beta in 0..m {
                assert!(p.check_beta_identity(beta), "m={m} beta={beta}");
            }
        }
    }

    #[test]
    fn scaling_examples() {
        let field = CycloField::new(2);
        let p = NumericParams::new(2, field.integer(1), ints(&field, &[1])).unwrap();
        assert_eq!(p.scale(&field.one()).unwrap(), p);
        let doubled = p.scale(&field.integer(2)).unwrap();
        assert_eq!(doubled.kappa(), &field.integer(2));
        assert_eq!(doubled.c(), &ints(&field, &[2]));
        let twice_neg = p.scale(&field.integer(-1)).unwrap().scale(&field.integer(-1)).unwrap();
        assert_eq!(twice_neg, p);
        assert!(p.scale(&field.zero()).is_err());
    }

    #[test]
    fn admissible_c_gives_periodic_h() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for m in 1..=8usize {
            for d in 1..=m {
                if m % d != 0 {
                    continue;
                }
                let p_period = m / d;
                let field = CycloField::new(m as u32);
                let mut c = Vec::new();
                for l in 1..m {
                    if l % d == 0 {
                        c.push(field.integer(rng.gen_range(-3i64..=3)));
                    } else {
                        c.push(field.zero());
                    }
                }
                let params = NumericParams::new(m, field.integer(1), c).unwrap();
                let derived = params.derive();
                for j in 0..m {
                    assert_eq!(
                        derived.big_h[(j + p_period) % m],
                        derived.big_h[j],
                        "H periodicity at m={m} d={d} j={j}"
                    );
                }
                for i in 0..m {
                    if i + p_period < m {
                        assert_eq!(derived.a[i + p_period], derived.a[i]);
                    }
                }
            }
        }
    }

    #[test]
    fn generic_exponent_examples() {
        assert_eq!(generic_exponent(0, 0, 1), LinearExponent { kappa: 0, h: vec![] });
        assert_eq!(generic_exponent(1, 0, 2), LinearExponent { kappa: 0, h: vec![1] });
        assert_eq!(generic_exponent(2, -1, 3), LinearExponent { kappa: 1, h: vec![1, 1] });
    }

    #[test]
    fn eta_is_a_primitive_mth_root_in_larger_fields() {
        // m = 2 realised inside Q(zeta_4): eta = zeta_4^2 = -1
        let field = CycloField::new(4);
        let p = NumericParams::new(2, field.integer(1), vec![field.integer(1)]).unwrap();
        assert_eq!(p.eta_pow(1), field.integer(-1));
        assert_eq!(p.eta_pow(2), field.one());
        let d = p.derive();
        assert_eq!(d.big_h, vec![field.integer(-1), field.integer(1)]);
    }

    #[test]
    fn rejects_bad_construction() {
        let field = CycloField::new(3);
        assert!(matches!(
            NumericParams::new(2, field.integer(1), vec![field.integer(1)]),
            Err(ParamError::OrderNotMultiple { .. })
        ));
        let f2 = CycloField::new(2);
        assert!(matches!(
            NumericParams::new(2, f2.integer(1), vec![]),
            Err(ParamError::WrongCCount { .. })
        ));
    }
}
