//! The duality involution: t -> -t, kappa -> -kappa, c_l -> eta^l c_{-l},
//! s_i -> s_{n-i}, g_i -> g_{n-i+1}^{-1}, x_i -> y_{n-i+1}, y_i -> x_{n-i+1}.
//! On a normal-form element the generator substitution lands outside the PBW
//! basis (x-factors on the left, y-factors on the right), so the image is
//! renormalized through the engine product.

use super::element::{CherednikAlgebra, CherednikElement};
use super::perm::Perm;
use super::welement::WElement;
use super::EngineError;
use crate::exactnum::Cyclotomic;

impl CherednikAlgebra {
    /// Image of a group element: g^e sigma -> g^{e'} sigma' with
    /// e'_i = -e_{n+1-i} and sigma'(i) = n+1 - sigma(n+1-i).
    pub fn psi_w(&self, w: &WElement) -> WElement {
        let n = self.n();
        let mut torus = vec![0i64; n];
        for i in 0..n {
            torus[n - 1 - i] = -(w.torus()[i] as i64);
        }
        let mut images = vec![0u8; n];
        for i in 1..=n {
            images[i - 1] = (n - w.sigma().apply(n + 1 - i)) as u8;
        }
        WElement::new(self.m(), torus, Perm::from_images_zero_based(images))
    }

    /// The involution applied to a normal-form element.
    pub fn psi(&self, a: &CherednikElement) -> Result<CherednikElement, EngineError> {
        let n = self.n();
        let m = self.m();
        // parameter substitution: variable i -> scalar * variable target
        let mut map: Vec<(Cyclotomic, usize)> = Vec::with_capacity(self.vars().len());
        map.push((self.field().integer(-1), 0));
        map.push((self.field().integer(-1), 1));
        for l in 1..m {
            map.push((self.eta(l as i64), 1 + (m - l)));
        }
        let rev = |v: &[u32]| {
            let mut r = v.to_vec();
            r.reverse();
            r
        };
        let id = WElement::identity(m, n);
        let mut acc = self.zero();
        for (mono, coeff) in a.terms() {
            let new_coeff = coeff.substitute_linear(&map);
            // psi(y^alpha w x^beta) = x^{rev alpha} psi(w) y^{rev beta}
            let x_part = self.monomial(vec![0; n], id.clone(), rev(&mono.alpha), self.poly_one());
            let w_part = self.group(self.psi_w(&mono.w));
            let y_part = self.monomial(rev(&mono.beta), id.clone(), vec![0; n], self.poly_one());
            let image = self.mul(&self.mul(&x_part, &w_part)?, &y_part)?;
            acc = &acc + &image.scale_poly(&new_coeff);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_w_on_generators() {
        let alg = CherednikAlgebra::new(2, 3).unwrap();
        // s_1 -> s_2
        let s1 = WElement::transposition(2, 3, 1, 2);
        let s2 = WElement::transposition(2, 3, 2, 3);
        assert_eq!(alg.psi_w(&s1), s2);
        // g_1 -> g_3^{-1}
        let g1 = WElement::torus_gen(2, 3, 1, 1);
        let g3_inv = WElement::torus_gen(2, 3, 3, -1);
        assert_eq!(alg.psi_w(&g1), g3_inv);
    }

    #[test]
    fn psi_squares_to_identity_on_a_product() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        let elem = alg.mul(&alg.x(1).unwrap(), &alg.y(2).unwrap()).unwrap();
        let back = alg.psi(&alg.psi(&elem).unwrap()).unwrap();
        assert_eq!(back, elem);
    }

    #[test]
    fn psi_swaps_dunkl_opdam_generators() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        let z1 = alg.dunkl_opdam_z(1).unwrap();
        let z2 = alg.dunkl_opdam_z(2).unwrap();
        assert_eq!(alg.psi(&z1).unwrap(), z2);
        assert_eq!(alg.psi(&z2).unwrap(), z1);
    }

    #[test]
    fn psi_negates_t() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        let t = alg.scalar(alg.poly_t());
        assert_eq!(alg.psi(&t).unwrap(), -&t);
    }

    #[test]
    fn psi_parameter_map_at_m2_sends_c1_to_minus_c1() {
        let alg = CherednikAlgebra::new(2, 2).unwrap();
        let c1 = alg.scalar(alg.poly_c(1));
        assert_eq!(alg.psi(&c1).unwrap(), -&c1);
    }
}
