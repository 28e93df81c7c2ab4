//! Named elements: the Dunkl-Opdam generators z_i (in both defining forms),
//! the gamma and xi group sums, Jucys-Murphy elements, the Euler element,
//! elementary symmetric polynomials in the z_i, and the P / P-tilde sums
//! entering the centrality proof.

use super::element::{CherednikAlgebra, CherednikElement};
use super::welement::WElement;
use super::EngineError;
use crate::exactnum::Rational;

/// Ascending chains lo <= j_1 < ... < j_r <= hi.
pub(crate) fn ascending_chains(lo: usize, hi: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(next: usize, hi: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        for j in next..=hi {
            prefix.push(j);
            rec(j + 1, hi, r, prefix, out);
            prefix.pop();
        }
    }
    rec(lo, hi, r, &mut prefix, &mut out);
    out
}

impl CherednikAlgebra {
    /// z_i in the defining form:
    /// y_i x_i - t/2 + kappa sum_l sum_{j<i} s_ij g_i^l g_j^{-l}
    ///              - sum_{l>=1} c_l eta^{-l} g_i^l.
    pub fn dunkl_opdam_z(&self, i: usize) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        if i < 1 || i > n {
            return Err(EngineError::IndexOutOfRange { i, n });
        }
        let mut alpha = vec![0u32; n];
        let mut beta = vec![0u32; n];
        alpha[i - 1] = 1;
        beta[i - 1] = 1;
        let mut out = self.monomial(alpha, WElement::identity(m, n), beta, self.poly_one());
        out = &out - &self.scalar(self.poly_t().scale_rational(&Rational::new(1.into(), 2.into())));
        let kappa = self.poly_kappa();
        for j in 1..i {
            for l in 0..m as i64 {
                let w = WElement::transposition(m, n, i, j)
                    .mul(&WElement::torus_gen(m, n, i, l))
                    .mul(&WElement::torus_gen(m, n, j, -l));
                out = &out + &self.group(w).scale_poly(&kappa);
            }
        }
        for l in 1..m {
            let coeff = (-&self.poly_c(l)).scale(&self.eta(-(l as i64)));
            out = &out + &self.group(WElement::torus_gen(m, n, i, l as i64)).scale_poly(&coeff);
        }
        Ok(out)
    }

    /// z_i in the alternative form:
    /// x_i y_i + t/2 - kappa sum_l sum_{j>i} s_ij g_i^l g_j^{-l} - sum_{l>=1} c_l g_i^l.
    /// Must agree with `dunkl_opdam_z` after normalization.
    pub fn dunkl_opdam_z_alt(&self, i: usize) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        if i < 1 || i > n {
            return Err(EngineError::IndexOutOfRange { i, n });
        }
        let mut out = self.mul(&self.x(i)?, &self.y(i)?)?;
        out = &out + &self.scalar(self.poly_t().scale_rational(&Rational::new(1.into(), 2.into())));
        let kappa = self.poly_kappa();
        for j in (i + 1)..=n {
            for l in 0..m as i64 {
                let w = WElement::transposition(m, n, i, j)
                    .mul(&WElement::torus_gen(m, n, i, l))
                    .mul(&WElement::torus_gen(m, n, j, -l));
                out = &out - &self.group(w).scale_poly(&kappa);
            }
        }
        for l in 1..m {
            out = &out - &self.group(WElement::torus_gen(m, n, i, l as i64)).scale_poly(&self.poly_c(l));
        }
        Ok(out)
    }

    /// gamma_ij = -kappa sum_l s_ij g_i^{-l} g_j^l.
    pub fn gamma(&self, i: usize, j: usize) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        if i < 1 || i > n {
            return Err(EngineError::IndexOutOfRange { i, n });
        }
        if j < 1 || j > n || i == j {
            return Err(EngineError::IndexOutOfRange { i: j, n });
        }
        let mut out = self.zero();
        let neg_kappa = -&self.poly_kappa();
        for l in 0..m as i64 {
            let w = WElement::transposition(m, n, i, j)
                .mul(&WElement::torus_gen(m, n, i, -l))
                .mul(&WElement::torus_gen(m, n, j, l));
            out = &out + &self.group(w).scale_poly(&neg_kappa);
        }
        Ok(out)
    }

    /// The short name gamma_j = gamma_{1j}, j > 1.
    pub fn gamma1(&self, j: usize) -> Result<CherednikElement, EngineError> {
        self.gamma(1, j)
    }

    /// xi_ij = sum_l g_i^l g_j^{-l}; for m = 1 this is the scalar 1.
    pub fn xi(&self, i: usize, j: usize) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        if i < 1 || i > n {
            return Err(EngineError::IndexOutOfRange { i, n });
        }
        if j < 1 || j > n || i == j {
            return Err(EngineError::IndexOutOfRange { i: j, n });
        }
        let mut out = self.zero();
        for l in 0..m as i64 {
            let w = WElement::torus_gen(m, n, i, l).mul(&WElement::torus_gen(m, n, j, -l));
            out = &out + &self.group(w);
        }
        Ok(out)
    }

    /// Jucys-Murphy element u_i = sum_l sum_{j<i} s_ij g_i^{-l} g_j^l.
    pub fn jucys_murphy_u(&self, i: usize) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        if i < 1 || i > n {
            return Err(EngineError::IndexOutOfRange { i, n });
        }
        let mut out = self.zero();
        for j in 1..i {
            for l in 0..m as i64 {
                let w = WElement::transposition(m, n, i, j)
                    .mul(&WElement::torus_gen(m, n, i, -l))
                    .mul(&WElement::torus_gen(m, n, j, l));
                out = &out + &self.group(w);
            }
        }
        Ok(out)
    }

    /// The Euler element
    /// eu = sum_i x_i y_i + (n/2) t - kappa sum_{i<j} sum_l s_ij g_i^{-l} g_j^l
    ///      - sum_i sum_{l>=1} c_l g_i^l,
    /// with the reflection sum over unordered pairs: the ordered reading
    /// double-counts the kappa term and breaks eu = z_1 + ... + z_n.
    pub fn euler_element(&self) -> Result<CherednikElement, EngineError> {
        let (m, n) = (self.m(), self.n());
        let mut out = self.zero();
        for i in 1..=n {
            out = &out + &self.mul(&self.x(i)?, &self.y(i)?)?;
        }
        let half_n = Rational::new((n as i64).into(), 2.into());
        out = &out + &self.scalar(self.poly_t().scale_rational(&half_n));
        let kappa = self.poly_kappa();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for l in 0..m as i64 {
                    let w = WElement::transposition(m, n, i, j)
                        .mul(&WElement::torus_gen(m, n, i, -l))
                        .mul(&WElement::torus_gen(m, n, j, l));
                    out = &out - &self.group(w).scale_poly(&kappa);
                }
            }
        }
        for i in 1..=n {
            for l in 1..m {
                out = &out - &self.group(WElement::torus_gen(m, n, i, l as i64)).scale_poly(&self.poly_c(l));
            }
        }
        Ok(out)
    }

    /// The r-th elementary symmetric polynomial in the given commuting family.
    pub fn sym_poly_of(
        &self,
        zs: &[CherednikElement],
        r: usize,
    ) -> Result<CherednikElement, EngineError> {
        assert!(r >= 1 && r <= zs.len(), "need 1 <= r <= {}", zs.len());
        let mut out = self.zero();
        for chain in ascending_chains(1, zs.len(), r) {
            let factors: Vec<CherednikElement> =
                chain.iter().map(|&j| zs[j - 1].clone()).collect();
            out = &out + &self.product(&factors)?;
        }
        Ok(out)
    }

    /// The central candidates: the r-th elementary symmetric polynomial in
    /// the Dunkl-Opdam generators z_1..z_n.
    pub fn sym_poly(&self, r: usize) -> Result<CherednikElement, EngineError> {
        let zs: Vec<CherednikElement> =
            (1..=self.n()).map(|i| self.dunkl_opdam_z(i)).collect::<Result<_, _>>()?;
        self.sym_poly_of(&zs, r)
    }

    // P and P-tilde over a chain 1 < j_1 < ... < j_r <= n: sums of
    // z_{k_1}..z_{k_s} gamma_{l_1}..gamma_{l_t} over disjoint decompositions
    // {k's} u {l's} = chain, ascending within each group; P requires t >= 1,
    // P-tilde also allows t = 0.
    fn p_sum(&self, chain: &[usize], allow_empty_gamma: bool) -> Result<CherednikElement, EngineError> {
        for &j in chain {
            if j < 2 || j > self.n() {
                return Err(EngineError::IndexOutOfRange { i: j, n: self.n() });
            }
        }
        debug_assert!(chain.windows(2).all(|w| w[0] < w[1]));
        let r = chain.len();
        let mut out = self.zero();
        let start = if allow_empty_gamma { 0usize } else { 1usize };
        for mask in start..(1usize << r) {
            let mut factors = Vec::with_capacity(r);
            for (idx, &j) in chain.iter().enumerate() {
                if mask & (1 << idx) == 0 {
                    factors.push(self.dunkl_opdam_z(j)?);
                }
            }
            for (idx, &j) in chain.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    factors.push(self.gamma1(j)?);
                }
            }
            out = &out + &self.product(&factors)?;
        }
        Ok(out)
    }

    pub fn p_element(&self, chain: &[usize]) -> Result<CherednikElement, EngineError> {
        self.p_sum(chain, false)
    }

    pub fn p_tilde_element(&self, chain: &[usize]) -> Result<CherednikElement, EngineError> {
        self.p_sum(chain, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_examples_at_m1_n2() {
        let alg = CherednikAlgebra::new(1, 2).unwrap();
        // z_1 = y_1 x_1 - t/2 (empty j<1 sum, no c terms)
        let z1 = alg.dunkl_opdam_z(1).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let mut expect = alg.monomial(vec![1, 0], WElement::identity(1, 2), vec![1, 0], alg.poly_one());
        expect = &expect - &alg.scalar(alg.poly_t().scale_rational(&half));
        assert_eq!(z1, expect);
        // z_2 = y_2 x_2 - t/2 + kappa s_12
        let z2 = alg.dunkl_opdam_z(2).unwrap();
        let mut expect = alg.monomial(vec![0, 1], WElement::identity(1, 2), vec![0, 1], alg.poly_one());
        expect = &expect - &alg.scalar(alg.poly_t().scale_rational(&half));
        expect = &expect + &alg.group(WElement::transposition(1, 2, 1, 2)).scale_poly(&alg.poly_kappa());
        assert_eq!(z2, expect);
    }

    #[test]
    fn do_forms_agree_at_2_2() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        for i in 1..=2 {
            assert_eq!(
                alg.dunkl_opdam_z(i).unwrap(),
                alg.dunkl_opdam_z_alt(i).unwrap(),
                "z_{i} forms disagree"
            );
        }
    }

    #[test]
    fn z_commute_at_2_2() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        let z1 = alg.dunkl_opdam_z(1).unwrap();
        let z2 = alg.dunkl_opdam_z(2).unwrap();
        assert!(alg.commutator(&z1, &z2).unwrap().is_zero());
    }

    #[test]
    fn gamma_is_symmetric_at_2_2() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        assert_eq!(alg.gamma(1, 2).unwrap(), alg.gamma(2, 1).unwrap());
    }

    #[test]
    fn xi_at_m1_is_the_scalar_one() {
        let alg = CherednikAlgebra::new(1, 2).unwrap();
        assert_eq!(alg.xi(1, 2).unwrap(), alg.one());
    }

    #[test]
    fn euler_equals_first_symmetric_polynomial() {
        for (m, n) in [(1usize, 2usize), (2, 2)] {
            let alg = CherednikAlgebra::new(m, n).unwrap();
            assert_eq!(
                alg.sym_poly(1).unwrap(),
                alg.euler_element().unwrap(),
                "(m,n)=({m},{n})"
            );
        }
    }

    #[test]
    fn z_coefficients_read_off_the_defining_form() {
        // the coefficient of g_i^l inside z_i is exactly -c_l eta^{-l}
        let alg = CherednikAlgebra::new(3, 2).unwrap();
        let z1 = alg.dunkl_opdam_z(1).unwrap();
        for l in 1..3usize {
            let mono = super::super::element::PBWMonomial {
                alpha: vec![0, 0],
                w: WElement::torus_gen(3, 2, 1, l as i64),
                beta: vec![0, 0],
            };
            let coeff = z1.coefficient(&mono).expect("g_1^l term present");
            let expect = (-&alg.poly_c(l)).scale(&alg.eta(-(l as i64)));
            assert_eq!(coeff, &expect);
        }
    }

    #[test]
    fn jucys_murphy_part_of_z() {
        // summed over all l mod m, s_ij g_i^l g_j^{-l} = s_ij g_i^{-l} g_j^l,
        // so the kappa part of z_i is exactly kappa * u_i:
        // z_i = y_i x_i - t/2 + kappa u_i - sum_l c_l eta^{-l} g_i^l
        for (m, n) in [(1usize, 3usize), (2, 2), (3, 2)] {
            let alg = CherednikAlgebra::new(m, n).unwrap();
            for i in 1..=n {
                let mut alpha = vec![0u32; n];
                let mut beta = vec![0u32; n];
                alpha[i - 1] = 1;
                beta[i - 1] = 1;
                let mut expect =
                    alg.monomial(alpha, WElement::identity(m, n), beta, alg.poly_one());
                expect = &expect
                    - &alg.scalar(alg.poly_t().scale_rational(&Rational::new(1.into(), 2.into())));
                expect = &expect
                    + &alg.jucys_murphy_u(i).unwrap().scale_poly(&alg.poly_kappa());
                for l in 1..m {
                    let coeff = (-&alg.poly_c(l)).scale(&alg.eta(-(l as i64)));
                    expect = &expect
                        + &alg.group(WElement::torus_gen(m, n, i, l as i64)).scale_poly(&coeff);
                }
                assert_eq!(alg.dunkl_opdam_z(i).unwrap(), expect, "(m,n,i)=({m},{n},{i})");
            }
        }
    }

    #[test]
    fn p_elements_small_cases() {
        let alg = CherednikAlgebra::new(1, 3).unwrap();
        // P_j = gamma_j for a singleton chain
        assert_eq!(alg.p_element(&[2]).unwrap(), alg.gamma1(2).unwrap());
        // P-tilde_j = z_j + gamma_j
        let expect = &alg.dunkl_opdam_z(2).unwrap() + &alg.gamma1(2).unwrap();
        assert_eq!(alg.p_tilde_element(&[2]).unwrap(), expect);
        assert!(alg.p_element(&[1]).is_err());
    }

    #[test]
    fn ascending_chains_enumerate_correctly() {
        assert_eq!(ascending_chains(2, 4, 2), vec![vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(ascending_chains(2, 4, 0), vec![Vec::<usize>::new()]);
        assert!(ascending_chains(3, 2, 1).is_empty());
    }
}
