//! Exact multivariate polynomials over a generic coefficient field.
//!
//! Monomials are exponent vectors against an ambient variable list owned by
//! the surrounding structure (ideal, rule, window); the polynomial itself
//! only knows the ambient length.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::field::FieldScalar;

/// Exponent vector. Component `i` is the exponent of ambient variable `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Indices of the variables occurring in this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total monomial orders used by the division and basis algorithms.
///
/// `Block { head }` orders the first `head` ambient variables before the
/// rest, degrevlex within each block; it is the elimination order for those
/// leading variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { head: usize },
}

fn degrevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the trailing variable wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::DegRevLex => degrevlex_cmp(&a.0, &b.0),
            MonomialOrder::Lex => {
                for i in 0..a.0.len() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { head } => {
                let h = (*head).min(a.0.len());
                match degrevlex_cmp(&a.0[..h], &b.0[..h]) {
                    Ordering::Equal => degrevlex_cmp(&a.0[h..], &b.0[h..]),
                    ord => ord,
                }
            }
        }
    }
}

/// A polynomial stored as a sorted term map; zero coefficients are never kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<K> {
    nvars: usize,
    terms: BTreeMap<Monomial, K>,
}

impl<K: FieldScalar> Polynomial<K> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: K, nvars: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::var(i, nvars), K::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&K> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Multiply by a single term `k * m`.
    pub fn mul_term(&self, m: &Monomial, k: &K) -> Self {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (mm, c) in &self.terms {
            out.terms.insert(mm.mul(m), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &other.terms {
            for (mm, cc) in &self.terms {
                out.add_term(mm.mul(m), cc.clone() * c.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Polynomial::constant(K::one(), self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &K)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn make_monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv()),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[K]) -> K {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Remaps variable `i` to `map[i]` inside an ambient of `new_nvars`
    /// variables. `map` must be injective on the occurring variables.
    pub fn map_vars(&self, map: &[usize], new_nvars: usize) -> Polynomial<K> {
        debug_assert_eq!(map.len(), self.nvars);
        let mut out = Polynomial::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; new_nvars];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    e[map[i]] += exp;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitutes constants for the given variables, staying in the same
    /// ambient; the substituted variables no longer occur in the result.
    pub fn substitute_values(&self, values: &BTreeMap<usize, K>) -> Polynomial<K> {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (&i, v) in values {
                for _ in 0..e[i] {
                    coeff = coeff * v.clone();
                }
                e[i] = 0;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Keeps only the listed variables (which must be the only ones
    /// occurring) and renumbers them by their position in `keep`.
    pub fn project_vars(&self, keep: &[usize]) -> Polynomial<K> {
        let mut map = vec![usize::MAX; self.nvars];
        for (pos, &i) in keep.iter().enumerate() {
            map[i] = pos;
        }
        let mut out = Polynomial::zero(keep.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; keep.len()];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    assert!(map[i] != usize::MAX, "projected variable still occurs");
                    e[map[i]] = exp;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// True when some variable outside `allowed` occurs.
    pub fn uses_var_outside(&self, allowed: &[bool]) -> bool {
        self.terms
            .keys()
            .any(|m| m.0.iter().enumerate().any(|(i, &e)| e > 0 && !allowed[i]))
    }

    pub fn render(&self, names: &[String], order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Monomial, &K)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut s = String::new();
        for (idx, (m, c)) in ts.iter().enumerate() {
            let cs = format!("{c}");
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.is_one() {
                factors.push(mag);
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, Fp, Rat};

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn degrevlex_classic_order() {
        // degree-3 monomials in x, y, z
        let m = |e: [u32; 3]| Monomial(e.to_vec());
        let order = MonomialOrder::DegRevLex;
        assert_eq!(order.cmp(&m([1, 2, 0]), &m([2, 0, 1])), Ordering::Greater); // xy^2 > x^2 z
        assert_eq!(order.cmp(&m([3, 0, 0]), &m([2, 1, 0])), Ordering::Greater);
        assert_eq!(order.cmp(&m([0, 0, 1]), &m([1, 0, 0])), Ordering::Less);
        assert_eq!(order.cmp(&m([0, 2, 0]), &m([0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_head() {
        // var 0 eliminated: any monomial containing it beats any that does not
        let order = MonomialOrder::Block { head: 1 };
        let a = Monomial(vec![1, 0]);
        let b = Monomial(vec![0, 5]);
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn arithmetic_over_q() {
        let spec = FieldSpec::Rationals;
        let x = Polynomial::<Rat>::var(0, 2);
        let y = Polynomial::<Rat>::var(1, 2);
        let one = Polynomial::constant(Rat::embed_i64(&spec, 1), 2);
        let p = x.mul(&y).sub(&one); // xy - 1
        let q = p.mul(&p);
        assert_eq!(q.num_terms(), 3); // x^2y^2 - 2xy + 1
        assert_eq!(
            q.render(&names(&["x", "y"]), MonomialOrder::Lex),
            "x^2*y^2 - 2*x*y + 1"
        );
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn eval_and_substitute() {
        let spec = FieldSpec::Fp(5);
        let e = |n: i64| Fp::embed_i64(&spec, n);
        let x = Polynomial::<Fp>::var(0, 2);
        let y = Polynomial::<Fp>::var(1, 2);
        let p = x.mul(&x).add(&y.scale(&e(3))); // x^2 + 3y
        assert_eq!(p.eval(&[e(2), e(1)]), e(7));
        let mut vals = BTreeMap::new();
        vals.insert(1usize, e(2));
        let q = p.substitute_values(&vals); // x^2 + 6 = x^2 + 1
        assert_eq!(q.eval(&[e(2), e(0)]), e(0));
        let r = q.project_vars(&[0]);
        assert_eq!(r.nvars(), 1);
        assert_eq!(r.eval(&[e(3)]), e(10));
    }

    #[test]
    fn leading_term_depends_on_order() {
        let spec = FieldSpec::Rationals;
        let x = Polynomial::<Rat>::var(0, 2);
        let y = Polynomial::<Rat>::var(1, 2);
        let p = x.add(&y.mul(&y)); // x + y^2
        let (lm_lex, _) = p.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(lm_lex, &Monomial(vec![1, 0]));
        let (lm_drl, _) = p.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(lm_drl, &Monomial(vec![0, 2]));
        let _ = spec;
    }
}
