//! Identity-check suites: each evaluates both sides of an identity to PBW
//! normal form and reports per-instance pass/fail. A failed identity is a
//! report entry, never a panic.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::constructors::ascending_chains;
use super::element::{CherednikAlgebra, CherednikElement};
use super::perm::Perm;
use super::welement::WElement;
use super::EngineError;

#[derive(Clone, Debug, Serialize)]
pub struct CheckCase {
    pub id: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: String,
    pub cases: Vec<CheckCase>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), cases: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool) {
        self.cases.push(CheckCase { id: id.into(), pass });
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.cases.extend(other.cases);
        self
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CheckReport", 3)?;
        st.serialize_field("suite", &self.suite)?;
        st.serialize_field("cases", &self.cases)?;
        st.serialize_field("all_pass", &self.all_pass())?;
        st.end()
    }
}

impl CherednikAlgebra {
    fn zs(&self) -> Result<Vec<CherednikElement>, EngineError> {
        (1..=self.n()).map(|i| self.dunkl_opdam_z(i)).collect()
    }

    // sum of gamma_t over lo < t <= hi (gamma_t = gamma_{1t}); empty sum is 0
    fn gamma_range_sum(&self, lo: usize, hi: usize) -> Result<CherednikElement, EngineError> {
        let mut acc = self.zero();
        for t in (lo + 1)..=hi {
            acc = &acc + &self.gamma1(t)?;
        }
        Ok(acc)
    }

    /// The graded-Hecke commutation relations of the z_i with the group and
    /// with each other.
    pub fn hecke_suite(&self) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let m = self.m();
        let zs = self.zs()?;
        let mut report = CheckReport::new("hecke");
        for i in 1..=n {
            for j in (i + 1)..=n {
                let pass = self.commutator(&zs[i - 1], &zs[j - 1])?.is_zero();
                report.push(format!("a:[z{i},z{j}]=0"), pass);
            }
        }
        for i in 1..=n {
            for k in 1..=n {
                for l in 1..m.max(2) {
                    let g = self.group(WElement::torus_gen(m, n, k, l as i64));
                    let pass = self.mul(&zs[i - 1], &g)? == self.mul(&g, &zs[i - 1])?;
                    report.push(format!("b:z{i}*g{k}^{l}"), pass);
                }
            }
        }
        for i in 1..n {
            // z_i s_i = s_i z_{i+1} - kappa xi_{i,i+1}
            let s_i = self.group(WElement::transposition(m, n, i, i + 1));
            let lhs = self.mul(&zs[i - 1], &s_i)?;
            let xi = self.xi(i, i + 1)?.scale_poly(&self.poly_kappa());
            let rhs = &self.mul(&s_i, &zs[i])? - &xi;
            report.push(format!("c:z{i}*s{i}"), lhs == rhs);
        }
        for j in 1..n {
            let s_j = self.group(WElement::transposition(m, n, j, j + 1));
            for i in 1..=n {
                if i == j || i == j + 1 {
                    continue;
                }
                let pass = self.mul(&zs[i - 1], &s_j)? == self.mul(&s_j, &zs[i - 1])?;
                report.push(format!("d:z{i}*s{j}"), pass);
            }
        }
        Ok(report)
    }

    /// The gamma calculus: symmetry, conjugation, the gamma-z exchange rules
    /// and their two corollaries, and the telescoped consequence.
    pub fn gamma_suite(&self) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let zs = self.zs()?;
        let mut report = CheckReport::new("gamma");

        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                report.push(
                    format!("symmetry:g({i},{j})=g({j},{i})"),
                    self.gamma(i, j)? == self.gamma(j, i)?,
                );
            }
        }

        for sigma in Perm::all(n) {
            let w = self.group(WElement::from_perm(self.m(), sigma.clone()));
            let w_inv = self.group(WElement::from_perm(self.m(), sigma.inverse()));
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let lhs = self.mul(&self.mul(&w, &self.gamma(i, j)?)?, &w_inv)?;
                    let rhs = self.gamma(sigma.apply(i), sigma.apply(j))?;
                    report.push(format!("conjugation:{sigma:?}g({i},{j})"), lhs == rhs);
                }
            }
        }

        // gamma_u z_v exchange, by the position of v relative to u
        for u in 2..=n {
            let gu = self.gamma1(u)?;
            for v in 1..=n {
                let lhs = self.mul(&gu, &zs[v - 1])?;
                let rhs = if v == 1 {
                    let mut acc = self.mul(&zs[u - 1], &gu)?;
                    for t in 2..=u {
                        acc = &acc + &self.mul(&gu, &self.gamma1(t)?)?;
                    }
                    acc
                } else if u < v {
                    self.mul(&zs[v - 1], &gu)?
                } else if u == v {
                    let head = &zs[0] - &self.gamma_range_sum(1, u)?;
                    self.mul(&head, &gu)?
                } else {
                    let gv = self.gamma1(v)?;
                    let mut acc = self.mul(&zs[v - 1], &gu)?;
                    acc = &acc + &self.mul(&gv, &gu)?;
                    acc = &acc - &self.mul(&gu, &gv)?;
                    acc
                };
                report.push(format!("gz-exchange:g{u}*z{v}"), lhs == rhs);
            }
        }

        // products with (z_v + gamma_v) on either side, u, v >= 2
        for u in 2..=n {
            let gu = self.gamma1(u)?;
            for v in 2..=n {
                let gv = self.gamma1(v)?;
                let zv_gv = &zs[v - 1] + &gv;
                let lhs5 = self.mul(&gu, &zv_gv)?;
                let lhs6 = self.mul(&zv_gv, &gu)?;
                let (rhs5, rhs6) = if u < v {
                    let zv_guv = &zs[v - 1] + &self.gamma(u, v)?;
                    (self.mul(&zv_guv, &gu)?, self.mul(&gu, &zv_guv)?)
                } else if u == v {
                    let head = &zs[0] - &self.gamma_range_sum(1, u - 1)?;
                    (self.mul(&head, &gu)?, self.mul(&gu, &head)?)
                } else {
                    (self.mul(&zv_gv, &gu)?, self.mul(&gu, &zv_gv)?)
                };
                report.push(format!("gz-exchange-r:g{u}(z{v}+g{v})"), lhs5 == rhs5);
                report.push(format!("gz-exchange-l:(z{v}+g{v})g{u}"), lhs6 == rhs6);
            }
        }

        // telescoped exchange: (z_u + gamma_u)(sum_{k<t<=u} gamma_t)
        //       = gamma_u z_1 - gamma_u sum_{1<t<=k} gamma_t + sum_{k<t<u} gamma_t z_u.
        // Valid for 1 < k < u. At k = u the left side is an empty sum while
        // the right side collapses to z_u gamma_u, so that instance is
        // excluded; the P-sum recursion only ever instantiates k < u.
        for u in 2..=n {
            let gu = self.gamma1(u)?;
            let zu_gu = &zs[u - 1] + &gu;
            for k in 2..u {
                let lhs = self.mul(&zu_gu, &self.gamma_range_sum(k, u)?)?;
                let mut rhs = self.mul(&gu, &zs[0])?;
                rhs = &rhs - &self.mul(&gu, &self.gamma_range_sum(1, k)?)?;
                rhs = &rhs + &self.mul(&self.gamma_range_sum(k, u - 1)?, &zs[u - 1])?;
                report.push(format!("telescope:u={u},k={k}"), lhs == rhs);
            }
        }

        Ok(report)
    }

    /// The commutation relations of x_i and y_i with the z_j.
    pub fn zcomm_suite(&self) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let zs = self.zs()?;
        let mut report = CheckReport::new("zcomm");
        for i in 1..=n {
            let xi = self.x(i)?;
            let yi = self.y(i)?;
            for j in 1..=n {
                let lhs_x = self.commutator(&xi, &zs[j - 1])?;
                let rhs_x = if i == j {
                    let mut acc = -&self.mul(&xi, &self.scalar(self.poly_t()))?;
                    for k in 1..i {
                        acc = &acc - &self.mul(&xi, &self.gamma(k, i)?)?;
                    }
                    for k in (i + 1)..=n {
                        acc = &acc - &self.mul(&self.gamma(i, k)?, &xi)?;
                    }
                    acc
                } else if i < j {
                    self.mul(&self.gamma(i, j)?, &xi)?
                } else {
                    self.mul(&xi, &self.gamma(i, j)?)?
                };
                report.push(format!("zcomm-x:[x{i},z{j}]"), lhs_x == rhs_x);

                let lhs_y = self.commutator(&yi, &zs[j - 1])?;
                let rhs_y = if i == j {
                    let mut acc = self.mul(&yi, &self.scalar(self.poly_t()))?;
                    for k in 1..i {
                        acc = &acc + &self.mul(&self.gamma(k, i)?, &yi)?;
                    }
                    for k in (i + 1)..=n {
                        acc = &acc + &self.mul(&yi, &self.gamma(i, k)?)?;
                    }
                    acc
                } else if i < j {
                    -&self.mul(&yi, &self.gamma(i, j)?)?
                } else {
                    -&self.mul(&self.gamma(i, j)?, &yi)?
                };
                report.push(format!("zcomm-y:[y{i},z{j}]"), lhs_y == rhs_y);
            }
        }
        Ok(report)
    }

    /// Both defining expressions of each z_i normalize identically.
    pub fn do_equality_suite(&self) -> Result<CheckReport, EngineError> {
        let mut report = CheckReport::new("do-equality");
        for i in 1..=self.n() {
            let pass = self.dunkl_opdam_z(i)? == self.dunkl_opdam_z_alt(i)?;
            report.push(format!("z{i}:defining=alternative"), pass);
        }
        Ok(report)
    }

    /// z_1 + ... + z_n equals the Euler element.
    pub fn euler_suite(&self) -> Result<CheckReport, EngineError> {
        let mut report = CheckReport::new("euler");
        report.push(
            "sum(z_i)=eu",
            self.sym_poly(1)? == self.euler_element()?,
        );
        Ok(report)
    }

    /// The involution: square to the identity on generators, swap the z_i,
    /// and commute with products of generators (homomorphism transport of the
    /// defining relations).
    pub fn psi_suite(&self) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let m = self.m();
        let mut report = CheckReport::new("psi");
        let mut gens: Vec<(String, CherednikElement)> = Vec::new();
        for i in 1..=n {
            gens.push((format!("x{i}"), self.x(i)?));
            gens.push((format!("y{i}"), self.y(i)?));
        }
        if m > 1 {
            for i in 1..=n {
                gens.push((format!("g{i}"), self.group(WElement::torus_gen(m, n, i, 1))));
            }
        }
        for i in 1..n {
            gens.push((format!("s{i}"), self.group(WElement::transposition(m, n, i, i + 1))));
        }
        for (name, g) in &gens {
            let back = self.psi(&self.psi(g)?)?;
            report.push(format!("psi^2:{name}"), &back == g);
        }
        let zs = self.zs()?;
        for i in 1..=n {
            let pass = self.psi(&zs[i - 1])? == zs[n - i];
            report.push(format!("psi:z{i}->z{}", n + 1 - i), pass);
        }
        report.push("psi:t->-t", {
            let t = self.scalar(self.poly_t());
            self.psi(&t)? == -&t
        });
        // multiplicativity on the crossing products, which carries each
        // defining relation to its image
        for i in 1..=n {
            for j in 1..=n {
                let prod = self.mul(&self.y(i)?, &self.x(j)?)?;
                let lhs = self.psi(&prod)?;
                let rhs = self.mul(&self.psi(&self.y(i)?)?, &self.psi(&self.x(j)?)?)?;
                report.push(format!("psi-hom:y{i}x{j}"), lhs == rhs);
            }
        }
        // and on group-by-generator products
        for (name, g) in &gens {
            let x1 = self.x(1)?;
            let prod = self.mul(g, &x1)?;
            let lhs = self.psi(&prod)?;
            let rhs = self.mul(&self.psi(g)?, &self.psi(&x1)?)?;
            report.push(format!("psi-hom:{name}*x1"), lhs == rhs);
        }
        Ok(report)
    }

    fn group_generators(&self) -> Vec<CherednikElement> {
        let n = self.n();
        let m = self.m();
        let mut gens = Vec::new();
        for i in 1..n {
            gens.push(self.group(WElement::transposition(m, n, i, i + 1)));
        }
        if m > 1 {
            for i in 1..=n {
                gens.push(self.group(WElement::torus_gen(m, n, i, 1)));
            }
        }
        gens
    }

    // The centrality test at t = 0: exact commutation with the group, and
    // t-divisibility of every commutator with the x_i and y_i.
    fn is_central_at_t0(&self, elem: &CherednikElement) -> Result<bool, EngineError> {
        for g in self.group_generators() {
            if self.mul(&g, elem)? != self.mul(elem, &g)? {
                return Ok(false);
            }
        }
        for i in 1..=self.n() {
            if !self.commutator(&self.x(i)?, elem)?.is_t_divisible() {
                return Ok(false);
            }
            if !self.commutator(&self.y(i)?, elem)?.is_t_divisible() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the r-th symmetric polynomial in the z_i is central at t = 0:
    /// commutators with every x_i and y_i land in t*H, and the group commutes
    /// exactly.
    pub fn check_centrality(&self, r: usize) -> Result<bool, EngineError> {
        self.is_central_at_t0(&self.sym_poly(r)?)
    }

    /// Negative control: perturbing every z_i to z_i + x_1 must break the
    /// centrality test (guards against a vacuously-true checker).
    pub fn check_centrality_perturbed(&self, r: usize) -> Result<bool, EngineError> {
        let x1 = self.x(1)?;
        let zs: Vec<CherednikElement> = (1..=self.n())
            .map(|i| Ok(&self.dunkl_opdam_z(i)? + &x1))
            .collect::<Result<_, EngineError>>()?;
        self.is_central_at_t0(&self.sym_poly_of(&zs, r)?)
    }

    /// Centrality cases for the requested r (or all 1 <= r <= n), plus the
    /// perturbed negative control.
    pub fn central_suite(&self, r: Option<usize>) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let mut report = CheckReport::new("central");
        let rs: Vec<usize> = match r {
            Some(r) => vec![r],
            None => (1..=n).collect(),
        };
        for r in &rs {
            report.push(format!("central:r={r}"), self.check_centrality(*r)?);
        }
        let control_r = *rs.first().expect("at least one r");
        report.push(
            format!("control:perturbed-fails:r={control_r}"),
            !self.check_centrality_perturbed(control_r)?,
        );
        Ok(report)
    }

    /// The P / P-tilde bookkeeping identities for one chain.
    fn p_chain_checks(&self, chain: &[usize], report: &mut CheckReport) -> Result<(), EngineError> {
        let tag: Vec<String> = chain.iter().map(|j| j.to_string()).collect();
        let tag = tag.join(",");
        let p = self.p_element(chain)?;
        let p_tilde = self.p_tilde_element(chain)?;
        let z_chain: Vec<CherednikElement> = chain
            .iter()
            .map(|&j| self.dunkl_opdam_z(j))
            .collect::<Result<_, _>>()?;
        let z_prod = self.product(&z_chain)?;

        report.push(format!("p-split:[{tag}]"), p_tilde == &p + &z_prod);

        let factors: Vec<CherednikElement> = chain
            .iter()
            .map(|&j| Ok(&self.dunkl_opdam_z(j)? + &self.gamma1(j)?))
            .collect::<Result<_, EngineError>>()?;
        report.push(format!("p-product:[{tag}]"), p_tilde == self.product(&factors)?);

        // P_{j1..jr} = (z_{j1} + gamma_{j1}) P_{j2..jr} + gamma_{j1} z_{j2}..z_{jr}
        let head = &self.dunkl_opdam_z(chain[0])? + &self.gamma1(chain[0])?;
        let rest = &chain[1..];
        let p_rest = if rest.is_empty() { self.zero() } else { self.p_element(rest)? };
        let z_rest = self.product(&z_chain[1..])?;
        let rhs = &self.mul(&head, &p_rest)? + &self.mul(&self.gamma1(chain[0])?, &z_rest)?;
        report.push(format!("p-recursion:[{tag}]"), p == rhs);

        // the commutation identity, in commutator form and in product form
        let x1 = self.x(1)?;
        let lhs = self.commutator(&x1, &z_prod)?;
        report.push(
            format!("comm:[x1,z_[{tag}]]"),
            lhs == self.mul(&p, &x1)?,
        );
        let lhs = self.mul(&x1, &z_prod)?;
        report.push(
            format!("comm:x1*z_[{tag}]"),
            lhs == self.mul(&p_tilde, &x1)?,
        );
        Ok(())
    }

    /// The telescoped recursion identity for given (r, k):
    /// sum over chains k < j_1 < ... < j_r <= n of
    /// (z_1 - sum_{k<t<=n} gamma_t) P~_{chain}
    ///   = sum z_1 z_{j1}..z_{jr} - sum P_{(r+1)-chains} + sum_{1<t<=k} gamma_t P_{chain}.
    pub fn check_p_sum_recursion(&self, r: usize, k: usize) -> Result<bool, EngineError> {
        let n = self.n();
        let z1 = self.dunkl_opdam_z(1)?;
        let head = &z1 - &self.gamma_range_sum(k, n)?;
        let mut lhs = self.zero();
        let mut rhs = self.zero();
        for chain in ascending_chains(k + 1, n, r) {
            lhs = &lhs + &self.mul(&head, &self.p_tilde_element(&chain)?)?;
            let z_chain: Vec<CherednikElement> = chain
                .iter()
                .map(|&j| self.dunkl_opdam_z(j))
                .collect::<Result<_, _>>()?;
            rhs = &rhs + &self.mul(&z1, &self.product(&z_chain)?)?;
            let p = self.p_element(&chain)?;
            rhs = &rhs + &self.mul(&self.gamma_range_sum(1, k)?, &p)?;
        }
        for chain in ascending_chains(k + 1, n, r + 1) {
            rhs = &rhs - &self.p_element(&chain)?;
        }
        Ok(lhs == rhs)
    }

    /// Full P-sum verification for one (r, k): the per-chain bookkeeping
    /// identities, the commutation identity, and the telescoped recursion.
    pub fn check_p_lemmas(&self, r: usize, k: usize) -> Result<bool, EngineError> {
        let report = self.p_lemma_suite(Some(r), Some(k))?;
        Ok(report.all_pass())
    }

    /// Suite over the requested r (or 1..=n-1) and k (or 1..=n-1).
    pub fn p_lemma_suite(
        &self,
        r: Option<usize>,
        k: Option<usize>,
    ) -> Result<CheckReport, EngineError> {
        let n = self.n();
        let mut report = CheckReport::new("plemmas");
        let rs: Vec<usize> = match r {
            Some(r) => vec![r],
            None => (1..n).collect(),
        };
        let ks: Vec<usize> = match k {
            Some(k) => vec![k],
            None => (1..n).collect(),
        };
        for &r in &rs {
            for chain in ascending_chains(2, n, r) {
                self.p_chain_checks(&chain, &mut report)?;
            }
            for &k in &ks {
                report.push(
                    format!("p-sum-recursion:r={r},k={k}"),
                    self.check_p_sum_recursion(r, k)?,
                );
            }
        }
        Ok(report)
    }

    /// The combined relation suite: hecke + gamma + zcomm.
    pub fn relation_suite(&self) -> Result<CheckReport, EngineError> {
        let report = CheckReport::new("relations")
            .merge(self.hecke_suite()?)
            .merge(self.gamma_suite()?)
            .merge(self.zcomm_suite()?);
        Ok(report)
    }
}
