//! Elements of W = G(m,1,n) in the fixed normal form g^e * sigma: torus
//! exponents on the left, the permutation on the right. With this convention
//! the action on the reflection representation is a single table lookup.

use std::fmt;

use super::perm::Perm;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WElement {
    m: u32,
    /// Torus exponents e_1..e_n, each reduced mod m.
    torus: Vec<u32>,
    sigma: Perm,
}

impl WElement {
    pub fn identity(m: usize, n: usize) -> Self {
        WElement { m: m as u32, torus: vec![0; n], sigma: Perm::identity(n) }
    }

    pub fn new(m: usize, torus: Vec<i64>, sigma: Perm) -> Self {
        let torus = torus
            .into_iter()
            .map(|e| e.rem_euclid(m as i64) as u32)
            .collect();
        WElement { m: m as u32, torus, sigma }
    }

    /// g_i^l (1-based i).
    pub fn torus_gen(m: usize, n: usize, i: usize, l: i64) -> Self {
        assert!(i >= 1 && i <= n);
        let mut torus = vec![0i64; n];
        torus[i - 1] = l;
        WElement::new(m, torus, Perm::identity(n))
    }

    /// The transposition s_ij.
    pub fn transposition(m: usize, n: usize, i: usize, j: usize) -> Self {
        WElement { m: m as u32, torus: vec![0; n], sigma: Perm::transposition(n, i, j) }
    }

    pub fn from_perm(m: usize, sigma: Perm) -> Self {
        WElement { m: m as u32, torus: vec![0; sigma.n()], sigma }
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn n(&self) -> usize {
        self.torus.len()
    }

    pub fn torus(&self) -> &[u32] {
        &self.torus
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.torus.iter().all(|&e| e == 0) && self.sigma.is_identity()
    }

    /// Group law in the fixed normal form:
    /// (g^e sigma)(g^f tau) = g^{e + sigma.f} (sigma tau), (sigma.f)_k = f_{sigma^{-1}(k)}.
    pub fn mul(&self, other: &WElement) -> WElement {
        debug_assert_eq!(self.m, other.m);
        debug_assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut torus = self.torus.clone();
        for j in 0..n {
            let image = self.sigma.apply(j + 1) - 1;
            torus[image] = (torus[image] + other.torus[j]) % self.m;
        }
        WElement { m: self.m, torus, sigma: self.sigma.compose(&other.sigma) }
    }

    /// (g^e sigma)^{-1} = g^{-sigma^{-1}.e} sigma^{-1}.
    pub fn inverse(&self) -> WElement {
        let n = self.n();
        let sigma_inv = self.sigma.inverse();
        let mut torus = vec![0u32; n];
        for (k, slot) in torus.iter_mut().enumerate() {
            let e = self.torus[self.sigma.apply(k + 1) - 1];
            *slot = (self.m - e) % self.m;
        }
        WElement { m: self.m, torus, sigma: sigma_inv }
    }

    /// Action on the basis vector y_j: w(y_j) = eta^{e_{sigma(j)}} y_{sigma(j)}.
    /// Returns the eta exponent and the new 1-based index.
    pub fn act_y(&self, j: usize) -> (i64, usize) {
        let image = self.sigma.apply(j);
        (self.torus[image - 1] as i64, image)
    }

    /// Action on the dual vector x_j: the inverse scalar, same index map.
    pub fn act_x(&self, j: usize) -> (i64, usize) {
        let image = self.sigma.apply(j);
        (-(self.torus[image - 1] as i64), image)
    }

    /// All m^n * n! group elements.
    pub fn enumerate(m: usize, n: usize) -> Vec<WElement> {
        let mut out = Vec::new();
        let mut torus = vec![0u32; n];
        fn rec(m: usize, pos: usize, torus: &mut Vec<u32>, perms: &[Perm], out: &mut Vec<WElement>) {
            if pos == torus.len() {
                for p in perms {
                    out.push(WElement { m: m as u32, torus: torus.clone(), sigma: p.clone() });
                }
                return;
            }
            for e in 0..m as u32 {
                torus[pos] = e;
                rec(m, pos + 1, torus, perms, out);
            }
            torus[pos] = 0;
        }
        let perms = Perm::all(n);
        rec(m, 0, &mut torus, &perms, &mut out);
        out
    }
}

impl fmt::Debug for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut pieces = Vec::new();
        for (i, &e) in self.torus.iter().enumerate() {
            if e > 0 {
                if e == 1 {
                    pieces.push(format!("g{}", i + 1));
                } else {
                    pieces.push(format!("g{}^{}", i + 1, e));
                }
            }
        }
        if !self.sigma.is_identity() {
            pieces.push(format!("{:?}", self.sigma));
        }
        write!(f, "{}", pieces.join("*"))
    }
}
