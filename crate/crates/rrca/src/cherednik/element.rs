//! PBW normal-form elements y^alpha * w * x^beta with coefficients in the
//! formal parameter ring, and the rewriting that multiplies them. Every
//! product is normalized on construction: x-factors move left past y-factors
//! through the defining commutators (producing lower-degree group terms),
//! and group elements push outward by their action on the basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::welement::WElement;
use super::{EngineError, GROUP_ORDER_CAP, TERM_CAP};
use crate::exactnum::{CycloField, Cyclotomic, MultiPoly, Rational, VarSet};

#[derive(Debug)]
pub(crate) struct EngineCtx {
    pub m: usize,
    pub n: usize,
    pub field: CycloField,
    pub vars: Arc<VarSet>,
    pub term_cap: usize,
}

/// The rational Cherednik algebra of G(m,1,n) over
/// Q(zeta_m)[t, kappa, c_1..c_{m-1}], with exact PBW arithmetic.
#[derive(Clone, Debug)]
pub struct CherednikAlgebra {
    pub(crate) ctx: Arc<EngineCtx>,
}

/// A PBW basis monomial y^alpha * w * x^beta.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWMonomial {
    pub alpha: Vec<u32>,
    pub w: WElement,
    pub beta: Vec<u32>,
}

impl PBWMonomial {
    pub fn degree(&self) -> u32 {
        self.alpha.iter().sum::<u32>() + self.beta.iter().sum::<u32>()
    }
}

impl fmt::Debug for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |symbol: &str, expo: &[u32]| -> String {
            expo.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("{symbol}{}", i + 1)
                    } else {
                        format!("{symbol}{}^{}", i + 1, e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let mut pieces = Vec::new();
        let ys = mono("y", &self.alpha);
        if !ys.is_empty() {
            pieces.push(ys);
        }
        if !self.w.is_identity() {
            pieces.push(format!("{:?}", self.w));
        }
        let xs = mono("x", &self.beta);
        if !xs.is_empty() {
            pieces.push(xs);
        }
        if pieces.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", pieces.join("*"))
        }
    }
}

/// An element in PBW normal form: a finite sum of monomials with nonzero
/// polynomial coefficients. The representation is canonical, so equality is
/// structural.
#[derive(Clone)]
pub struct CherednikElement {
    pub(crate) ctx: Arc<EngineCtx>,
    pub(crate) terms: BTreeMap<PBWMonomial, MultiPoly>,
}

/// One letter of a generator word.
#[derive(Clone, Debug)]
pub enum Generator {
    X(usize),
    Y(usize),
    W(WElement),
    Scalar(MultiPoly),
}

impl CherednikElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &PBWMonomial) -> Option<&MultiPoly> {
        self.terms.get(mono)
    }

    /// True iff every coefficient polynomial is divisible by t.
    pub fn is_t_divisible(&self) -> bool {
        self.terms.values().all(MultiPoly::is_t_divisible)
    }

    /// True iff the element lies in the group algebra span (no x or y factors).
    pub fn is_group_algebra(&self) -> bool {
        self.terms.keys().all(|mono| mono.degree() == 0)
    }

    pub(crate) fn add_term(&mut self, mono: PBWMonomial, coeff: MultiPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> CherednikElement {
        let mut out = CherednikElement { ctx: self.ctx.clone(), terms: BTreeMap::new() };
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), coeff * p);
        }
        out
    }

    pub fn scale_cyclo(&self, c: &Cyclotomic) -> CherednikElement {
        let mut out = CherednikElement { ctx: self.ctx.clone(), terms: BTreeMap::new() };
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), coeff.scale(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> CherednikElement {
        let mut out = CherednikElement { ctx: self.ctx.clone(), terms: BTreeMap::new() };
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), coeff.scale_rational(r));
        }
        out
    }
}

impl PartialEq for CherednikElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.m == other.ctx.m && self.ctx.n == other.ctx.n && self.terms == other.terms
    }
}
impl Eq for CherednikElement {}

impl std::ops::Add for &CherednikElement {
    type Output = CherednikElement;
    fn add(self, rhs: &CherednikElement) -> CherednikElement {
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.add_term(mono.clone(), coeff.clone());
        }
        out
    }
}

impl std::ops::Sub for &CherednikElement {
    type Output = CherednikElement;
    fn sub(self, rhs: &CherednikElement) -> CherednikElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &CherednikElement {
    type Output = CherednikElement;
    fn neg(self) -> CherednikElement {
        let mut out = CherednikElement { ctx: self.ctx.clone(), terms: BTreeMap::new() };
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), -coeff);
        }
        out
    }
}

impl fmt::Debug for CherednikElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})*{mono:?}")?;
        }
        Ok(())
    }
}

// x^beta * w = eta^exp * w * x^beta' with beta'_{tau^{-1}(k)} = beta_k.
fn push_x_right(beta: &[u32], w: &WElement) -> (i64, Vec<u32>) {
    let n = beta.len();
    let mut exp = 0i64;
    let mut out = vec![0u32; n];
    let tau_inv = w.sigma().inverse();
    for k in 0..n {
        if beta[k] > 0 {
            exp += w.torus()[k] as i64 * beta[k] as i64;
            out[tau_inv.apply(k + 1) - 1] = beta[k];
        }
    }
    (exp, out)
}

// w * y^alpha = eta^exp * y^alpha' * w with alpha'_{sigma(j)} = alpha_j.
fn push_y_left(w: &WElement, alpha: &[u32]) -> (i64, Vec<u32>) {
    let n = alpha.len();
    let mut exp = 0i64;
    let mut out = vec![0u32; n];
    for (j, &a) in alpha.iter().enumerate() {
        if a > 0 {
            let image = w.sigma().apply(j + 1) - 1;
            exp += w.torus()[image] as i64 * a as i64;
            out[image] = a;
        }
    }
    (exp, out)
}

impl CherednikAlgebra {
    pub fn new(m: usize, n: usize) -> Result<Self, EngineError> {
        Self::with_term_cap(m, n, TERM_CAP)
    }

    /// Same as `new` with a custom PBW term cap (mainly for tests).
    pub fn with_term_cap(m: usize, n: usize, term_cap: usize) -> Result<Self, EngineError> {
        assert!(m >= 1 && n >= 1, "need m >= 1 and n >= 1");
        let mut order: u128 = 1;
        for _ in 0..n {
            order *= m as u128;
        }
        for k in 1..=n {
            order *= k as u128;
        }
        if order > GROUP_ORDER_CAP as u128 {
            return Err(EngineError::GroupTooLarge {
                order: order.min(usize::MAX as u128) as usize,
                cap: GROUP_ORDER_CAP,
            });
        }
        let field = CycloField::new(m as u32);
        let vars = VarSet::cherednik_params(m);
        Ok(CherednikAlgebra {
            ctx: Arc::new(EngineCtx { m, n, field, vars, term_cap }),
        })
    }

    pub fn m(&self) -> usize {
        self.ctx.m
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn field(&self) -> &CycloField {
        &self.ctx.field
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.ctx.vars
    }

    /// eta^k in the coefficient field, eta = zeta_m.
    pub fn eta(&self, k: i64) -> Cyclotomic {
        self.ctx.field.zeta_pow(k)
    }

    // ---- coefficient polynomials ----

    pub fn poly_zero(&self) -> MultiPoly {
        MultiPoly::zero(self.ctx.vars.clone(), self.ctx.field.clone())
    }

    pub fn poly_one(&self) -> MultiPoly {
        MultiPoly::one(self.ctx.vars.clone(), self.ctx.field.clone())
    }

    pub fn poly_const(&self, c: Cyclotomic) -> MultiPoly {
        MultiPoly::constant(self.ctx.vars.clone(), c)
    }

    pub fn poly_t(&self) -> MultiPoly {
        MultiPoly::var(self.ctx.vars.clone(), self.ctx.field.clone(), 0)
    }

    pub fn poly_kappa(&self) -> MultiPoly {
        MultiPoly::var(self.ctx.vars.clone(), self.ctx.field.clone(), 1)
    }

    /// c_l for 1 <= l <= m-1.
    pub fn poly_c(&self, l: usize) -> MultiPoly {
        assert!(l >= 1 && l < self.ctx.m, "c_{l} does not exist for m = {}", self.ctx.m);
        MultiPoly::var(self.ctx.vars.clone(), self.ctx.field.clone(), 1 + l)
    }

    // ---- element constructors ----

    pub fn zero(&self) -> CherednikElement {
        CherednikElement { ctx: self.ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> CherednikElement {
        self.scalar(self.poly_one())
    }

    pub fn scalar(&self, p: MultiPoly) -> CherednikElement {
        self.monomial(vec![0; self.ctx.n], WElement::identity(self.ctx.m, self.ctx.n), vec![0; self.ctx.n], p)
    }

    pub fn monomial(
        &self,
        alpha: Vec<u32>,
        w: WElement,
        beta: Vec<u32>,
        coeff: MultiPoly,
    ) -> CherednikElement {
        debug_assert_eq!(alpha.len(), self.ctx.n);
        debug_assert_eq!(beta.len(), self.ctx.n);
        let mut out = self.zero();
        out.add_term(PBWMonomial { alpha, w, beta }, coeff);
        out
    }

    fn check_index(&self, i: usize) -> Result<(), EngineError> {
        if i >= 1 && i <= self.ctx.n {
            Ok(())
        } else {
            Err(EngineError::IndexOutOfRange { i, n: self.ctx.n })
        }
    }

    pub fn x(&self, i: usize) -> Result<CherednikElement, EngineError> {
        self.check_index(i)?;
        let mut beta = vec![0u32; self.ctx.n];
        beta[i - 1] = 1;
        Ok(self.monomial(vec![0; self.ctx.n], WElement::identity(self.ctx.m, self.ctx.n), beta, self.poly_one()))
    }

    pub fn y(&self, i: usize) -> Result<CherednikElement, EngineError> {
        self.check_index(i)?;
        let mut alpha = vec![0u32; self.ctx.n];
        alpha[i - 1] = 1;
        Ok(self.monomial(alpha, WElement::identity(self.ctx.m, self.ctx.n), vec![0; self.ctx.n], self.poly_one()))
    }

    pub fn group(&self, w: WElement) -> CherednikElement {
        debug_assert_eq!(w.m(), self.ctx.m);
        debug_assert_eq!(w.n(), self.ctx.n);
        self.monomial(vec![0; self.ctx.n], w, vec![0; self.ctx.n], self.poly_one())
    }

    // ---- the defining commutators ----

    /// [x_k, y_j] as a normal-form element (degree-0 group terms plus t).
    pub fn bracket_x_y(&self, k: usize, j: usize) -> Result<CherednikElement, EngineError> {
        self.check_index(k)?;
        self.check_index(j)?;
        let m = self.ctx.m;
        let n = self.ctx.n;
        let mut out = self.zero();
        let id_mono = |w: WElement| PBWMonomial { alpha: vec![0; n], w, beta: vec![0; n] };
        if k == j {
            // [x_k, y_k] = -t + kappa sum_l sum_{i != k} s_{ki} g_k^{-l} g_i^l
            //            + sum_l c_l (1 - eta^{-l}) g_k^l
            out.add_term(
                id_mono(WElement::identity(m, n)),
                -&self.poly_t(),
            );
            let kappa = self.poly_kappa();
            for i in 1..=n {
                if i == k {
                    continue;
                }
                for l in 0..m as i64 {
                    let w = WElement::transposition(m, n, k, i)
                        .mul(&WElement::torus_gen(m, n, k, -l))
                        .mul(&WElement::torus_gen(m, n, i, l));
                    out.add_term(id_mono(w), kappa.clone());
                }
            }
            for l in 1..m {
                let factor = self.field().one() - self.eta(-(l as i64));
                let coeff = self.poly_c(l).scale(&factor);
                out.add_term(id_mono(WElement::torus_gen(m, n, k, l as i64)), coeff);
            }
        } else {
            // [x_k, y_j] = -[y_j, x_k] = -kappa sum_l eta^{-l} s_{jk} g_j^{-l} g_k^l
            for l in 0..m as i64 {
                let w = WElement::transposition(m, n, j, k)
                    .mul(&WElement::torus_gen(m, n, j, -l))
                    .mul(&WElement::torus_gen(m, n, k, l));
                let coeff = (-&self.poly_kappa()).scale(&self.eta(-l));
                out.add_term(id_mono(w), coeff);
            }
        }
        Ok(out)
    }

    // NF(x^beta * y_j): recursion on the degree of beta. Each step peels one
    // x-factor; commutator terms have lower degree, so this terminates.
    fn nf_beta_y(&self, beta: &[u32], j: usize) -> Result<CherednikElement, EngineError> {
        let n = self.ctx.n;
        let Some(k0) = (0..n).rev().find(|&k| beta[k] > 0) else {
            let mut alpha = vec![0u32; n];
            alpha[j - 1] = 1;
            return Ok(self.monomial(alpha, WElement::identity(self.ctx.m, n), vec![0; n], self.poly_one()));
        };
        let k = k0 + 1;
        let mut reduced = beta.to_vec();
        reduced[k0] -= 1;
        // x^beta y_j = x^reduced (y_j x_k + [x_k, y_j])
        let inner = self.nf_beta_y(&reduced, j)?;
        let mut acc = self.right_mul_x(&inner, k);
        let bracket = self.bracket_x_y(k, j)?;
        for (mono, coeff) in &bracket.terms {
            let (exp, new_beta) = push_x_right(&reduced, &mono.w);
            let mut combined_beta = new_beta;
            for (b, extra) in combined_beta.iter_mut().zip(mono.beta.iter()) {
                *b += extra;
            }
            acc.add_term(
                PBWMonomial { alpha: mono.alpha.clone(), w: mono.w.clone(), beta: combined_beta },
                coeff.scale(&self.eta(exp)),
            );
        }
        self.check_cap(&acc)?;
        Ok(acc)
    }

    fn check_cap(&self, elem: &CherednikElement) -> Result<(), EngineError> {
        if elem.terms.len() > self.ctx.term_cap {
            Err(EngineError::TooManyTerms { cap: self.ctx.term_cap })
        } else {
            Ok(())
        }
    }

    // ---- right multiplication by generators ----

    pub fn right_mul_x(&self, elem: &CherednikElement, k: usize) -> CherednikElement {
        let mut out = self.zero();
        for (mono, coeff) in &elem.terms {
            let mut beta = mono.beta.clone();
            beta[k - 1] += 1;
            out.add_term(PBWMonomial { alpha: mono.alpha.clone(), w: mono.w.clone(), beta }, coeff.clone());
        }
        out
    }

    pub fn right_mul_w(&self, elem: &CherednikElement, v: &WElement) -> CherednikElement {
        let mut out = self.zero();
        for (mono, coeff) in &elem.terms {
            let (exp, beta) = push_x_right(&mono.beta, v);
            out.add_term(
                PBWMonomial { alpha: mono.alpha.clone(), w: mono.w.mul(v), beta },
                coeff.scale(&self.eta(exp)),
            );
        }
        out
    }

    pub fn right_mul_y(&self, elem: &CherednikElement, j: usize) -> Result<CherednikElement, EngineError> {
        let mut out = self.zero();
        for (mono, coeff) in &elem.terms {
            let nf = self.nf_beta_y(&mono.beta, j)?;
            for (mono2, coeff2) in &nf.terms {
                let (exp, moved_alpha) = push_y_left(&mono.w, &mono2.alpha);
                let mut alpha = mono.alpha.clone();
                for (a, extra) in alpha.iter_mut().zip(moved_alpha.iter()) {
                    *a += extra;
                }
                out.add_term(
                    PBWMonomial { alpha, w: mono.w.mul(&mono2.w), beta: mono2.beta.clone() },
                    (coeff * coeff2).scale(&self.eta(exp)),
                );
            }
            self.check_cap(&out)?;
        }
        Ok(out)
    }

    // ---- products ----

    /// The algebra product, fully normalized.
    pub fn mul(&self, a: &CherednikElement, b: &CherednikElement) -> Result<CherednikElement, EngineError> {
        let n = self.ctx.n;
        let mut acc = self.zero();
        for (mono, coeff) in &b.terms {
            let mut cur = a.clone();
            for j in 1..=n {
                for _ in 0..mono.alpha[j - 1] {
                    cur = self.right_mul_y(&cur, j)?;
                }
            }
            if !mono.w.is_identity() {
                cur = self.right_mul_w(&cur, &mono.w);
            }
            for k in 1..=n {
                for _ in 0..mono.beta[k - 1] {
                    cur = self.right_mul_x(&cur, k);
                }
            }
            acc = &acc + &cur.scale_poly(coeff);
            self.check_cap(&acc)?;
        }
        Ok(acc)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, factors: &[CherednikElement]) -> Result<CherednikElement, EngineError> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// [a, b] = ab - ba.
    pub fn commutator(&self, a: &CherednikElement, b: &CherednikElement) -> Result<CherednikElement, EngineError> {
        Ok(&self.mul(a, b)? - &self.mul(b, a)?)
    }

    /// Normalizes a formal word of generators into the PBW basis.
    pub fn normal_form(&self, word: &[Generator]) -> Result<CherednikElement, EngineError> {
        let mut acc = self.one();
        for gen in word {
            acc = match gen {
                Generator::X(k) => {
                    self.check_index(*k)?;
                    self.right_mul_x(&acc, *k)
                }
                Generator::Y(j) => {
                    self.check_index(*j)?;
                    self.right_mul_y(&acc, *j)?
                }
                Generator::W(w) => self.right_mul_w(&acc, w),
                Generator::Scalar(p) => acc.scale_poly(p),
            };
            self.check_cap(&acc)?;
        }
        Ok(acc)
    }
}
