//! Sparse multivariate polynomials over a cyclotomic field, used as the
//! coefficient ring R = Q(zeta_m)[t, kappa, c_1..c_{m-1}] of the verification
//! engine. No zero coefficients are stored, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::cyclotomic::{CycloField, Cyclotomic};
use super::Rational;

/// Ordered list of named indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Arc<Self> {
        Arc::new(VarSet { names })
    }

    /// The parameter ring variables for G(m,1,n): t, kappa, c_1..c_{m-1}.
    pub fn cherednik_params(m: usize) -> Arc<Self> {
        let mut names = vec!["t".to_string(), "kappa".to_string()];
        for l in 1..m {
            names.push(format!("c{l}"));
        }
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    field: CycloField,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero(vars: Arc<VarSet>, field: CycloField) -> Self {
        MultiPoly { vars, field, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<VarSet>, value: Cyclotomic) -> Self {
        let field = value.field();
        let mut p = MultiPoly::zero(vars, field);
        p.add_term(vec![0; p.vars.len()], value);
        p
    }

    pub fn one(vars: Arc<VarSet>, field: CycloField) -> Self {
        let one = field.one();
        MultiPoly::constant(vars, one)
    }

    /// The polynomial consisting of the single variable at `idx`.
    pub fn var(vars: Arc<VarSet>, field: CycloField, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut expo = vec![0u32; vars.len()];
        expo[idx] = 1;
        let one = field.one();
        let mut p = MultiPoly::zero(vars, field);
        p.add_term(expo, one);
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    fn add_term(&mut self, expo: Vec<u32>, coeff: Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(expo.len(), self.vars.len());
        match self.terms.entry(expo) {
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

    pub fn scale(&self, c: &Cyclotomic) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone(), self.field.clone());
        }
        let mut out = MultiPoly::zero(self.vars.clone(), self.field.clone());
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> MultiPoly {
        self.scale(&self.field.from_rational(r.clone()))
    }

    /// True iff every stored term has exponent >= 1 in the variable at `idx`.
    /// The zero polynomial qualifies vacuously.
    pub fn divisible_by_var(&self, idx: usize) -> bool {
        assert!(idx < self.vars.len(), "variable index out of range");
        self.terms.keys().all(|e| e[idx] >= 1)
    }

    /// True iff every stored term is divisible by the variable named `t`.
    pub fn is_t_divisible(&self) -> bool {
        let idx = self
            .vars
            .index_of("t")
            .expect("polynomial ring has no variable `t`");
        self.divisible_by_var(idx)
    }

    /// Substitutes the given values for the variables, in order.
    pub fn eval(&self, values: &[Cyclotomic]) -> Cyclotomic {
        assert_eq!(values.len(), self.vars.len(), "wrong number of values");
        let mut acc = self.field.zero();
        for (expo, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (v, &e) in values.iter().zip(expo.iter()) {
                for _ in 0..e {
                    term = &term * v;
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Applies a variable substitution x_i -> scalar_i * x_{target_i}.
    /// Used for parameter involutions such as t -> -t, c_l -> eta^l c_{m-l}.
    pub fn substitute_linear(&self, map: &[(Cyclotomic, usize)]) -> MultiPoly {
        assert_eq!(map.len(), self.vars.len(), "substitution arity mismatch");
        let mut out = MultiPoly::zero(self.vars.clone(), self.field.clone());
        for (expo, coeff) in &self.terms {
            let mut new_expo = vec![0u32; self.vars.len()];
            let mut new_coeff = coeff.clone();
            for (i, &e) in expo.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (scalar, target) = &map[i];
                new_expo[*target] += e;
                for _ in 0..e {
                    new_coeff = &new_coeff * scalar;
                }
            }
            out.add_term(new_expo, new_coeff);
        }
        out
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars.names() == other.vars.names()
            && self.field == other.field
            && self.terms == other.terms
    }
}
impl Eq for MultiPoly {}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars.names(), rhs.vars.names());
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone(), self.field.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars.names(), rhs.vars.names());
        let mut out = MultiPoly::zero(self.vars.clone(), self.field.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let expo: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(expo, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = expo
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars.names()[i].clone()
                    } else {
                        format!("{}^{}", self.vars.names()[i], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({coeff})")?;
            } else {
                write!(f, "({coeff})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn setup(m: usize) -> (Arc<VarSet>, CycloField) {
        (VarSet::cherednik_params(m), CycloField::new(m as u32))
    }

    #[test]
    fn t_divisibility_examples() {
        let (vars, field) = setup(2);
        let t = MultiPoly::var(vars.clone(), field.clone(), 0);
        let kappa = MultiPoly::var(vars.clone(), field.clone(), 1);
        let c1 = MultiPoly::var(vars.clone(), field.clone(), 2);
        // t*kappa + t^2 is t-divisible
        let p = &(&t * &kappa) + &(&t * &t);
        assert!(p.is_t_divisible());
        // t + c1 is not
        let q = &t + &c1;
        assert!(!q.is_t_divisible());
        // zero polynomial has an empty term set
        assert!(MultiPoly::zero(vars, field).is_t_divisible());
    }

    #[test]
    fn eval_is_a_ring_homomorphism() {
        let (vars, field) = setup(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = MultiPoly::zero(vars.clone(), field.clone());
            for _ in 0..4 {
                let expo: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..3)).collect();
                p.add_term(expo, field.integer(rng.gen_range(-3i64..=3)));
            }
            p
        };
        for _ in 0..25 {
            let p = random_poly(&mut rng);
            let q = random_poly(&mut rng);
            let values: Vec<Cyclotomic> = (0..vars.len())
                .map(|_| field.integer(rng.gen_range(-3i64..=3)))
                .collect();
            let lhs = (&p * &q).eval(&values);
            let rhs = &p.eval(&values) * &q.eval(&values);
            assert_eq!(lhs, rhs);
            let lhs = (&p + &q).eval(&values);
            let rhs = &p.eval(&values) + &q.eval(&values);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn no_zero_terms_survive_arithmetic() {
        let (vars, field) = setup(2);
        let t = MultiPoly::var(vars.clone(), field.clone(), 0);
        let diff = &t - &t;
        assert!(diff.is_zero());
        assert_eq!(diff.terms().count(), 0);
        let zero_scaled = t.scale(&field.zero());
        assert!(zero_scaled.is_zero());
    }

    #[test]
    fn substitute_linear_negates_and_relabels() {
        let (vars, field) = setup(2);
        let t = MultiPoly::var(vars.clone(), field.clone(), 0);
        let c1 = MultiPoly::var(vars.clone(), field.clone(), 2);
        let p = &(&t * &t) + &c1;
        // t -> -t, kappa -> -kappa, c1 -> -c1 (eta = -1 at m=2)
        let map = vec![
            (field.integer(-1), 0),
            (field.integer(-1), 1),
            (field.integer(-1), 2),
        ];
        let q = p.substitute_linear(&map);
        let expect = &(&t * &t) - &c1;
        assert_eq!(q, expect);
        assert_eq!(q.substitute_linear(&map), p);
    }
}
