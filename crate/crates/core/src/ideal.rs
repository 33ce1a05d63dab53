//! Ideals, Buchberger's algorithm, elimination, and Krull dimension.
//!
//! Dimension is read combinatorially off the leading-term ideal of a
//! degrevlex basis: it is the largest number of variables no leading
//! monomial lives entirely inside. The unit ideal gets the distinguished
//! [`Dim::Empty`], ordered below every finite value.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldScalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal<K> {
    pub vars: Vec<String>,
    pub gens: Vec<Polynomial<K>>,
}

impl<K: FieldScalar> Ideal<K> {
    pub fn new(vars: Vec<String>, gens: Vec<Polynomial<K>>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), vars.len(), "generator ambient mismatch");
        }
        Ideal { vars, gens }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        Ideal { vars, gens: vec![] }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis<K> {
        buchberger(self.vars.clone(), &self.gens, order)
    }

    pub fn member(&self, f: &Polynomial<K>) -> bool {
        let gb = self.groebner(MonomialOrder::DegRevLex);
        normal_form(f, &gb.elements, gb.order).is_zero()
    }

    /// Generators `{f*g}`; cuts out the union of the two zero sets.
    pub fn union_with(&self, other: &Ideal<K>) -> Ideal<K> {
        assert_eq!(self.vars, other.vars, "ambient mismatch");
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(self.vars.clone(), gens)
    }

    /// Concatenates disjoint ambients; cuts out the product of zero sets.
    pub fn product_with(&self, other: &Ideal<K>) -> Ideal<K> {
        let n1 = self.nvars();
        let n2 = other.nvars();
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        let mut gens = Vec::new();
        let id1: Vec<usize> = (0..n1).collect();
        let id2: Vec<usize> = (n1..n1 + n2).collect();
        for f in &self.gens {
            gens.push(f.map_vars(&id1, n1 + n2));
        }
        for g in &other.gens {
            gens.push(g.map_vars(&id2, n1 + n2));
        }
        Ideal::new(vars, gens)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<K> {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial<K>>,
}

impl<K: FieldScalar> GroebnerBasis<K> {
    pub fn contains_one(&self) -> bool {
        self.elements.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn normal_form(&self, f: &Polynomial<K>) -> Polynomial<K> {
        normal_form(f, &self.elements, self.order)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial<K>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn as_ideal(&self) -> Ideal<K> {
        Ideal::new(self.vars.clone(), self.elements.clone())
    }
}

/// Remainder of multivariate division of `f` by `basis`: no remaining term is
/// divisible by any basis leading term, and `f - r` lies in the span.
pub fn normal_form<K: FieldScalar>(
    f: &Polynomial<K>,
    basis: &[Polynomial<K>],
    order: MonomialOrder,
) -> Polynomial<K> {
    let lts: Vec<(Monomial, K)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    let active: Vec<&Polynomial<K>> = basis.iter().filter(|g| !g.is_zero()).collect();

    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (glm, glc)) in lts.iter().enumerate() {
            if glm.divides(&lm) {
                let factor = lc.clone() / glc.clone();
                let shift = glm.div_into(&lm);
                work = work.sub(&active[i].mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        rem.add_term(lm.clone(), lc.clone());
        work.add_term(lm, -lc);
    }
    rem
}

fn s_polynomial<K: FieldScalar>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    order: MonomialOrder,
) -> Polynomial<K> {
    let (flm, flc) = f.leading_term(order).unwrap();
    let (glm, glc) = g.leading_term(order).unwrap();
    let lcm = flm.lcm(glm);
    let a = flm.div_into(&lcm);
    let b = glm.div_into(&lcm);
    f.mul_term(&a, &flc.inv())
        .sub(&g.mul_term(&b, &glc.inv()))
}

/// Computes the reduced Groebner basis of the span of `gens` under `order`.
///
/// Pairs with coprime leading monomials are skipped (Buchberger's product
/// criterion); the result is interreduced, monic, and sorted by leading
/// monomial, so re-running on the output returns it unchanged.
pub fn buchberger<K: FieldScalar>(
    vars: Vec<String>,
    gens: &[Polynomial<K>],
    order: MonomialOrder,
) -> GroebnerBasis<K> {
    let mut basis: Vec<Polynomial<K>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic(order))
        .collect();

    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push_back((i, j));
        }
    }

    while let Some((i, j)) = pairs.pop_front() {
        let (ilm, _) = basis[i].leading_term(order).unwrap();
        let (jlm, _) = basis[j].leading_term(order).unwrap();
        if ilm.coprime(jlm) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                pairs.push_back((t, k));
            }
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_term(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_term(order).unwrap().0;
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial<K>> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // reduced basis: fully reduce each element against the others
    let mut reduced: Vec<Polynomial<K>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial<K>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.make_monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(la, lb)
    });

    GroebnerBasis {
        vars,
        order,
        elements: reduced,
    }
}

/// Checks the defining property directly: every S-polynomial of basis pairs
/// reduces to zero, and no element's tail term is divisible by another's
/// leading term. Used by the test harnesses as the correctness certificate.
pub fn verify_groebner<K: FieldScalar>(gb: &GroebnerBasis<K>) -> bool {
    let order = gb.order;
    for i in 0..gb.elements.len() {
        for j in (i + 1)..gb.elements.len() {
            let s = s_polynomial(&gb.elements[i], &gb.elements[j], order);
            if !normal_form(&s, &gb.elements, order).is_zero() {
                return false;
            }
        }
    }
    for (i, g) in gb.elements.iter().enumerate() {
        if g.leading_term(order).map(|(_, c)| !c.is_one()).unwrap_or(false) {
            return false;
        }
        for (m, _) in g.terms() {
            for (j, h) in gb.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                if h.leading_term(order).unwrap().0.divides(m) {
                    return false;
                }
            }
        }
    }
    true
}

/// Krull dimension of a zero set; `Empty` (unit ideal) sorts below every
/// finite dimension so downstream maxima and comparisons stay total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dim {
    Empty,
    Finite(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Empty => None,
            Dim::Finite(d) => Some(d),
        }
    }

    pub fn plus(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b),
            _ => Dim::Empty,
        }
    }
}

impl PartialOrd for Dim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dim {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Dim::Empty, Dim::Empty) => Ordering::Equal,
            (Dim::Empty, Dim::Finite(_)) => Ordering::Less,
            (Dim::Finite(_), Dim::Empty) => Ordering::Greater,
            (Dim::Finite(a), Dim::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::Empty => write!(f, "empty"),
            Dim::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn krull_dimension<K: FieldScalar>(ideal: &Ideal<K>) -> Dim {
    krull_dimension_of_basis(&ideal.groebner(MonomialOrder::DegRevLex))
}

pub fn krull_dimension_of_basis<K: FieldScalar>(gb: &GroebnerBasis<K>) -> Dim {
    if gb.contains_one() {
        return Dim::Empty;
    }
    let nvars = gb.vars.len();
    let mut supports: Vec<u64> = gb
        .elements
        .iter()
        .map(|g| {
            let (lm, _) = g.leading_term(gb.order).unwrap();
            lm.support().iter().fold(0u64, |acc, &i| acc | (1 << i))
        })
        .collect();
    assert!(nvars <= 63, "dimension search limited to 63 variables");
    supports.sort_by_key(|s| s.count_ones());
    supports.dedup();
    // keep only minimal supports
    let mut minimal: Vec<u64> = Vec::new();
    'outer: for s in supports {
        for m in &minimal {
            if m & s == *m {
                continue 'outer;
            }
        }
        minimal.push(s);
    }
    let mut best = nvars;
    min_hitting_set(&minimal, 0, 0, &mut best);
    Dim::Finite(nvars - best)
}

// Finds the size of a smallest variable set meeting every support mask. The
// complement of an optimal hitting set is a largest independent variable set.
fn min_hitting_set(supports: &[u64], hit: u64, chosen: usize, best: &mut usize) {
    if chosen >= *best {
        return;
    }
    let next = supports.iter().find(|&&s| s & hit == 0);
    match next {
        None => *best = chosen,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits ^= v;
                min_hitting_set(supports, hit | v, chosen + 1, best);
            }
        }
    }
}

pub fn empty_over_closure<K: FieldScalar>(ideal: &Ideal<K>) -> bool {
    ideal.groebner(MonomialOrder::DegRevLex).contains_one()
}

/// Generators of `I ∩ K[remaining vars]` via a block-order basis.
pub fn eliminate<K: FieldScalar>(ideal: &Ideal<K>, vars_out: &[String]) -> Result<Ideal<K>> {
    let nvars = ideal.nvars();
    let mut out_idx: Vec<usize> = Vec::with_capacity(vars_out.len());
    for name in vars_out {
        match ideal.vars.iter().position(|v| v == name) {
            Some(i) => out_idx.push(i),
            None => return Err(Error::UnknownVariable(name.clone())),
        }
    }
    let mut is_out = vec![false; nvars];
    for &i in &out_idx {
        is_out[i] = true;
    }
    let keep_idx: Vec<usize> = (0..nvars).filter(|i| !is_out[*i]).collect();

    // permuted ambient: eliminated block first
    let mut map = vec![0usize; nvars];
    for (pos, &i) in out_idx.iter().enumerate() {
        map[i] = pos;
    }
    for (pos, &i) in keep_idx.iter().enumerate() {
        map[i] = out_idx.len() + pos;
    }
    let mut perm_vars: Vec<String> = Vec::with_capacity(nvars);
    for &i in &out_idx {
        perm_vars.push(ideal.vars[i].clone());
    }
    for &i in &keep_idx {
        perm_vars.push(ideal.vars[i].clone());
    }
    let perm_gens: Vec<Polynomial<K>> =
        ideal.gens.iter().map(|g| g.map_vars(&map, nvars)).collect();

    let gb = buchberger(
        perm_vars,
        &perm_gens,
        MonomialOrder::Block {
            head: out_idx.len(),
        },
    );

    let head = out_idx.len();
    let allowed: Vec<bool> = (0..nvars).map(|i| i >= head).collect();
    let kept_positions: Vec<usize> = (head..nvars).collect();
    let mut out_gens = Vec::new();
    for g in &gb.elements {
        if !g.uses_var_outside(&allowed) {
            out_gens.push(g.project_vars(&kept_positions));
        }
    }
    let out_vars: Vec<String> = keep_idx.iter().map(|&i| ideal.vars[i].clone()).collect();
    Ok(Ideal::new(out_vars, out_gens))
}

/// Vanishing ideal of the closure of the image of a polynomial map defined on
/// the zero set of `domain`. Component `j` of the map lands in target
/// variable `target_names[j]`.
pub fn image_closure<K: FieldScalar>(
    map: &[Polynomial<K>],
    target_names: &[String],
    domain: &Ideal<K>,
) -> Result<Ideal<K>> {
    let n_src = domain.nvars();
    let n_tgt = target_names.len();
    assert_eq!(map.len(), n_tgt, "one component per target variable");
    for g in map {
        assert_eq!(g.nvars(), n_src, "map component ambient mismatch");
    }
    let total = n_src + n_tgt;
    let mut vars = domain.vars.clone();
    vars.extend(target_names.iter().cloned());

    let src_embed: Vec<usize> = (0..n_src).collect();
    let mut gens: Vec<Polynomial<K>> = domain
        .gens
        .iter()
        .map(|g| g.map_vars(&src_embed, total))
        .collect();
    for (j, g) in map.iter().enumerate() {
        let graph = Polynomial::var(n_src + j, total).sub(&g.map_vars(&src_embed, total));
        gens.push(graph);
    }
    let graph = Ideal::new(vars, gens);
    eliminate(&graph, &domain.vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, Fp, Rat};
    use crate::parse::{parse_polynomial, var_table};

    fn q_ideal(var_names: &[&str], gens: &[&str]) -> Ideal<Rat> {
        let vars: Vec<String> = var_names.iter().map(|s| s.to_string()).collect();
        let table = var_table(&vars);
        let gens = gens
            .iter()
            .map(|g| parse_polynomial(g, &table, vars.len(), FieldSpec::Rationals).unwrap())
            .collect();
        Ideal::new(vars, gens)
    }

    fn fp_ideal(p: u64, var_names: &[&str], gens: &[&str]) -> Ideal<Fp> {
        let vars: Vec<String> = var_names.iter().map(|s| s.to_string()).collect();
        let table = var_table(&vars);
        let gens = gens
            .iter()
            .map(|g| parse_polynomial(g, &table, vars.len(), FieldSpec::Fp(p)).unwrap())
            .collect();
        Ideal::new(vars, gens)
    }

    fn q_poly(ideal: &Ideal<Rat>, s: &str) -> Polynomial<Rat> {
        let table = var_table(&ideal.vars);
        parse_polynomial(s, &table, ideal.vars.len(), FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let i = q_ideal(&["x", "y"], &["x"]);
        let x2 = q_poly(&i, "x^2");
        assert!(normal_form(&x2, &i.gens, MonomialOrder::Lex).is_zero());

        let f = q_poly(&i, "x^2*y + x - 3");
        let nf = normal_form(&f, &[], MonomialOrder::Lex);
        assert_eq!(nf, f);

        // hand division: x^2*y = x*(x*y - 1) + x, remainder x
        let i2 = q_ideal(&["x", "y"], &["x*y - 1"]);
        let f = q_poly(&i2, "x^2*y");
        let nf = normal_form(&f, &i2.gens, MonomialOrder::Lex);
        assert_eq!(nf, q_poly(&i2, "x"));
    }

    #[test]
    fn buchberger_small_cases() {
        let i = q_ideal(&["x", "y"], &["x"]);
        let gb = i.groebner(MonomialOrder::DegRevLex);
        assert_eq!(gb.elements.len(), 1);
        assert_eq!(gb.elements[0], q_poly(&i, "x"));

        let i = q_ideal(&["x", "y"], &["x*y"]);
        let gb = i.groebner(MonomialOrder::DegRevLex);
        assert_eq!(gb.elements, vec![q_poly(&i, "x*y")]);
    }

    #[test]
    fn buchberger_twisted_cubic_certificate() {
        let i = q_ideal(&["x", "y", "z"], &["x^2 - y", "x^3 - z"]);
        let gb = i.groebner(MonomialOrder::Lex);
        assert!(verify_groebner(&gb));
        for g in &i.gens {
            assert!(gb.reduces_to_zero(g));
        }
        // idempotence
        let gb2 = buchberger(gb.vars.clone(), &gb.elements, MonomialOrder::Lex);
        assert_eq!(gb2.elements, gb.elements);
    }

    #[test]
    fn membership_examples() {
        let i = q_ideal(&["x"], &["x"]);
        assert!(i.member(&q_poly(&i, "x^2")));

        let i = q_ideal(&["x"], &["x", "x + 1"]);
        assert!(i.member(&q_poly(&i, "1")));

        let i = q_ideal(&["x", "y"], &["x*y"]);
        assert!(!i.member(&q_poly(&i, "y")));
    }

    #[test]
    fn eliminate_examples() {
        let i = q_ideal(&["x", "y"], &["x", "y - 1"]);
        let e = eliminate(&i, &["x".to_string()]).unwrap();
        assert_eq!(e.vars, vec!["y".to_string()]);
        let gb = e.groebner(MonomialOrder::Lex);
        assert_eq!(gb.elements.len(), 1);
        let table = var_table(&e.vars);
        let expect =
            parse_polynomial::<Rat>("y - 1", &table, 1, FieldSpec::Rationals).unwrap();
        assert_eq!(gb.elements[0], expect);

        // parabola: nothing in y alone
        let i = q_ideal(&["x", "y"], &["y - x^2"]);
        let e = eliminate(&i, &["x".to_string()]).unwrap();
        assert!(e.gens.is_empty());

        // unit hidden behind elimination: x*y^2 - y*(x*y - 1) = y, so 1 in I
        let i = q_ideal(&["x", "y"], &["x*y - 1", "y^2"]);
        let e = eliminate(&i, &["x".to_string()]).unwrap();
        assert!(empty_over_closure(&e));
    }

    #[test]
    fn eliminate_soundness_members() {
        let i = q_ideal(&["x", "y", "z"], &["z - x*y", "x^2 - y"]);
        let e = eliminate(&i, &["x".to_string()]).unwrap();
        assert!(!e.gens.is_empty());
        let embed: Vec<usize> = vec![1, 2]; // y, z positions in the original ambient
        for g in &e.gens {
            let lifted = g.map_vars(&embed, 3);
            assert!(i.member(&lifted));
        }
    }

    #[test]
    fn krull_dimension_examples() {
        let i = q_ideal(&["x", "y", "z"], &[]);
        assert_eq!(krull_dimension(&i), Dim::Finite(3));

        let i = q_ideal(&["x", "y"], &["x*y"]);
        assert_eq!(krull_dimension(&i), Dim::Finite(1));

        let i = q_ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(krull_dimension(&i), Dim::Finite(0));

        let i = q_ideal(&["x"], &["1"]);
        assert_eq!(krull_dimension(&i), Dim::Empty);

        assert!(Dim::Empty < Dim::Finite(0));
        assert_eq!(Dim::Finite(1).plus(Dim::Finite(2)), Dim::Finite(3));
    }

    #[test]
    fn image_closure_examples() {
        // squaring on the affine line: dominant, closure is everything
        let dom = q_ideal(&["x"], &[]);
        let f = vec![q_poly(&dom, "x^2")];
        let img = image_closure(&f, &["b".to_string()], &dom).unwrap();
        assert!(img.gens.is_empty());
        assert_eq!(krull_dimension(&img), Dim::Finite(1));

        // (x, y) -> (x, x*y): dominant non-surjective, closure is the plane
        let dom = q_ideal(&["x", "y"], &[]);
        let f = vec![q_poly(&dom, "x"), q_poly(&dom, "x*y")];
        let img =
            image_closure(&f, &["u".to_string(), "v".to_string()], &dom).unwrap();
        assert_eq!(krull_dimension(&img), Dim::Finite(2));
        assert!(img.gens.is_empty());
    }

    #[test]
    fn image_closure_contraction_on_curve_with_point_oracle() {
        // (x, y) -> (x, 0) on the union of the two axes
        let dom = fp_ideal(5, &["x", "y"], &["x*y"]);
        let f = vec![
            {
                let table = var_table(&dom.vars);
                parse_polynomial::<Fp>("x", &table, 2, FieldSpec::Fp(5)).unwrap()
            },
            Polynomial::zero(2),
        ];
        let img =
            image_closure(&f, &["u".to_string(), "v".to_string()], &dom).unwrap();
        assert_eq!(krull_dimension(&img), Dim::Finite(1));

        // point oracle over F5: direct image of the 9 curve points is the u-axis
        let spec = FieldSpec::Fp(5);
        let mut image_points = std::collections::BTreeSet::new();
        for a in 0..5i64 {
            for b in 0..5i64 {
                if a * b % 5 != 0 {
                    continue;
                }
                image_points.insert((a, 0i64));
            }
        }
        // every image point satisfies the closure ideal, and the closure's
        // F5-points are exactly the image points
        let gb = img.groebner(MonomialOrder::DegRevLex);
        for &(a, b) in &image_points {
            let pt = vec![Fp::embed_i64(&spec, a), Fp::embed_i64(&spec, b)];
            for g in &gb.elements {
                assert!(g.eval(&pt).is_zero());
            }
        }
        let mut closure_points = std::collections::BTreeSet::new();
        for a in 0..5i64 {
            for b in 0..5i64 {
                let pt = vec![Fp::embed_i64(&spec, a), Fp::embed_i64(&spec, b)];
                if gb.elements.iter().all(|g| g.eval(&pt).is_zero()) {
                    closure_points.insert((a, b));
                }
            }
        }
        assert_eq!(closure_points, image_points);
    }

    #[test]
    fn emptiness_examples() {
        let i = q_ideal(&["x"], &["x", "x - 1"]);
        assert!(empty_over_closure(&i));

        let i = q_ideal(&["x"], &["x^2 + 1"]);
        assert!(!empty_over_closure(&i));

        // the orphan preimage system for the pair-product rule
        let i = q_ideal(
            &["a", "b", "c", "d"],
            &["a*b - 1", "b*c", "c*d - 1"],
        );
        assert!(empty_over_closure(&i));
    }

    #[test]
    fn union_and_product_dimension() {
        let i = q_ideal(&["x", "y"], &["x"]);
        let j = q_ideal(&["x", "y"], &["x - 1", "y"]);
        let u = i.union_with(&j);
        assert_eq!(krull_dimension(&u), Dim::Finite(1));

        let p = i.product_with(&q_ideal(&["u", "v"], &["u"]));
        assert_eq!(krull_dimension(&p), Dim::Finite(2));
    }
}
