//! Finitely generated universes: integer lattices and free groups.
//!
//! Everything downstream works through finite subsets in a fixed canonical
//! order (lexicographic on lattice vectors, length-then-letter on reduced
//! words), so window enumeration, tiling, and reports are deterministic.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    Zd { d: usize },
    Free { rank: usize },
}

impl GroupSpec {
    pub fn z() -> Self {
        GroupSpec::Zd { d: 1 }
    }

    pub fn is_amenable(&self) -> bool {
        // free groups of rank >= 2 contain free subgroups; rank 1 is Z but we
        // keep the word representation non-amenable-flagged to force the
        // lattice representation for Folner work
        matches!(self, GroupSpec::Zd { .. })
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Zd { d } => GroupElement::Zd(vec![0; *d]),
            GroupSpec::Free { .. } => GroupElement::Free(vec![]),
        }
    }

    pub fn validate(&self, g: &GroupElement) -> Result<()> {
        match (self, g) {
            (GroupSpec::Zd { d }, GroupElement::Zd(v)) if v.len() == *d => Ok(()),
            (GroupSpec::Free { rank }, GroupElement::Free(w)) => {
                if w.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) <= *rank) {
                    Ok(())
                } else {
                    Err(Error::GroupMismatch(format!(
                        "word uses generators outside rank {rank}"
                    )))
                }
            }
            _ => Err(Error::GroupMismatch(format!(
                "element {g} does not belong to {self:?}"
            ))),
        }
    }
}

/// Group element: an integer vector, or a reduced word with letter `+k`
/// meaning generator `k` and `-k` its inverse (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupElement {
    Zd(Vec<i64>),
    Free(Vec<i32>),
}

fn reduce_word(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        if l == 0 {
            continue;
        }
        if out.last().is_some_and(|&t| t == -l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn letter_key(l: i32) -> (u32, u8) {
    (l.unsigned_abs(), u8::from(l < 0))
}

impl GroupElement {
    pub fn zd(coords: Vec<i64>) -> Self {
        GroupElement::Zd(coords)
    }

    pub fn free(letters: impl IntoIterator<Item = i32>) -> Self {
        GroupElement::Free(reduce_word(letters))
    }

    /// Parses a free-group word over `a..z` with capitals for inverses.
    pub fn parse_word(s: &str, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for ch in s.chars() {
            let l = if ch.is_ascii_lowercase() {
                (ch as i32) - ('a' as i32) + 1
            } else if ch.is_ascii_uppercase() {
                -((ch as i32) - ('A' as i32) + 1)
            } else {
                return Err(Error::GroupMismatch(format!(
                    "invalid word character `{ch}`"
                )));
            };
            if l.unsigned_abs() as usize > rank {
                return Err(Error::GroupMismatch(format!(
                    "generator `{ch}` exceeds rank {rank}"
                )));
            }
            letters.push(l);
        }
        Ok(GroupElement::free(letters))
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Zd(a), GroupElement::Zd(b)) if a.len() == b.len() => Ok(
                GroupElement::Zd(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            ),
            (GroupElement::Free(a), GroupElement::Free(b)) => Ok(GroupElement::free(
                a.iter().chain(b.iter()).copied().collect::<Vec<_>>(),
            )),
            _ => Err(Error::GroupMismatch(
                "product of elements from different groups".to_string(),
            )),
        }
    }

    pub fn inv(&self) -> GroupElement {
        match self {
            GroupElement::Zd(a) => GroupElement::Zd(a.iter().map(|x| -x).collect()),
            GroupElement::Free(w) => {
                GroupElement::Free(w.iter().rev().map(|l| -l).collect())
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Zd(a) => a.iter().all(|&x| x == 0),
            GroupElement::Free(w) => w.is_empty(),
        }
    }

    fn canonical_cmp(&self, other: &GroupElement) -> Ordering {
        match (self, other) {
            (GroupElement::Zd(a), GroupElement::Zd(b)) => a.cmp(b),
            (GroupElement::Free(a), GroupElement::Free(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| {
                    for (x, y) in a.iter().zip(b.iter()) {
                        let o = letter_key(*x).cmp(&letter_key(*y));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                    Ordering::Equal
                }),
            (GroupElement::Zd(_), GroupElement::Free(_)) => Ordering::Less,
            (GroupElement::Free(_), GroupElement::Zd(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Zd(a) => {
                if a.len() == 1 {
                    write!(f, "{}", a[0])
                } else {
                    let body: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                    write!(f, "({})", body.join(","))
                }
            }
            GroupElement::Free(w) => {
                if w.is_empty() {
                    return write!(f, "e");
                }
                for &l in w {
                    let base = (l.unsigned_abs() - 1) as u8;
                    let ch = if l > 0 { b'a' + base } else { b'A' + base };
                    write!(f, "{}", ch as char)?;
                }
                Ok(())
            }
        }
    }
}

/// Finite, duplicate-free, canonically ordered subset of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSubset {
    spec: GroupSpec,
    elems: Vec<GroupElement>,
}

impl FiniteSubset {
    pub fn new(spec: GroupSpec, elems: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        let mut v: Vec<GroupElement> = Vec::new();
        for e in elems {
            spec.validate(&e)?;
            v.push(e);
        }
        v.sort();
        v.dedup();
        Ok(FiniteSubset { spec, elems: v })
    }

    pub fn empty(spec: GroupSpec) -> Self {
        FiniteSubset { spec, elems: vec![] }
    }

    pub fn singleton(spec: GroupSpec, g: GroupElement) -> Result<Self> {
        FiniteSubset::new(spec, [g])
    }

    /// Interval `[lo, hi]` of the line.
    pub fn z_range(lo: i64, hi: i64) -> Self {
        FiniteSubset {
            spec: GroupSpec::z(),
            elems: (lo..=hi).map(|n| GroupElement::Zd(vec![n])).collect(),
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.elems.iter()
    }

    pub fn elems(&self) -> &[GroupElement] {
        &self.elems
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elems.binary_search(g).is_ok()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elems.binary_search(g).ok()
    }

    pub fn is_subset_of(&self, other: &FiniteSubset) -> bool {
        self.elems.iter().all(|g| other.contains(g))
    }

    fn same_group(&self, other: &FiniteSubset) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::GroupMismatch(
                "subsets live in different groups".to_string(),
            ))
        }
    }

    pub fn translate(&self, g: &GroupElement) -> Result<FiniteSubset> {
        self.spec.validate(g)?;
        FiniteSubset::new(
            self.spec,
            self.elems
                .iter()
                .map(|h| g.mul(h))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn union_with(&self, other: &FiniteSubset) -> Result<FiniteSubset> {
        self.same_group(other)?;
        FiniteSubset::new(
            self.spec,
            self.elems.iter().chain(other.elems.iter()).cloned(),
        )
    }

    pub fn difference(&self, other: &FiniteSubset) -> Result<FiniteSubset> {
        self.same_group(other)?;
        FiniteSubset::new(
            self.spec,
            self.elems
                .iter()
                .filter(|g| !other.contains(g))
                .cloned(),
        )
    }

    pub fn inverse_set(&self) -> FiniteSubset {
        let mut elems: Vec<GroupElement> = self.elems.iter().map(|g| g.inv()).collect();
        elems.sort();
        elems.dedup();
        FiniteSubset {
            spec: self.spec,
            elems,
        }
    }

    /// Product set `{s t : s in self, t in other}`.
    pub fn product(&self, other: &FiniteSubset) -> Result<FiniteSubset> {
        self.same_group(other)?;
        let mut elems = Vec::with_capacity(self.len() * other.len());
        for s in &self.elems {
            for t in &other.elems {
                elems.push(s.mul(t)?);
            }
        }
        FiniteSubset::new(self.spec, elems)
    }

    /// Elements whose translated reference set stays inside this set.
    pub fn interior(&self, m: &FiniteSubset) -> Result<FiniteSubset> {
        self.same_group(m)?;
        if m.is_empty() {
            return Err(Error::Validation(
                "interior requires a non-empty reference set".to_string(),
            ));
        }
        let candidates = self.product(&m.inverse_set())?;
        FiniteSubset::new(
            self.spec,
            candidates
                .elems
                .into_iter()
                .filter(|g| {
                    m.elems
                        .iter()
                        .all(|h| g.mul(h).map(|gh| self.contains(&gh)).unwrap_or(false))
                }),
        )
    }

    pub fn neighborhood(&self, m: &FiniteSubset) -> Result<FiniteSubset> {
        self.product(m)
    }

    pub fn boundary(&self, m: &FiniteSubset) -> Result<FiniteSubset> {
        self.neighborhood(m)?.difference(&self.interior(m)?)
    }
}

impl fmt::Display for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.elems.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Word-length (free) or sup-norm (lattice) ball of the given radius.
pub fn ball(spec: GroupSpec, radius: usize) -> FiniteSubset {
    match spec {
        GroupSpec::Zd { d } => box_set(d, radius as i64),
        GroupSpec::Free { rank } => {
            let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
            let mut frontier = vec![GroupElement::Free(vec![])];
            seen.insert(frontier[0].clone());
            for _ in 0..radius {
                let mut next = Vec::new();
                for w in frontier {
                    for k in 1..=(rank as i32) {
                        for l in [k, -k] {
                            let ext = w.mul(&GroupElement::Free(vec![l])).unwrap();
                            if seen.insert(ext.clone()) {
                                next.push(ext);
                            }
                        }
                    }
                }
                frontier = next;
            }
            FiniteSubset {
                spec,
                elems: seen.into_iter().collect(),
            }
        }
    }
}

fn box_set(d: usize, m: i64) -> FiniteSubset {
    let mut elems = Vec::new();
    let mut coords = vec![-m; d];
    loop {
        elems.push(GroupElement::Zd(coords.clone()));
        let mut i = d;
        loop {
            if i == 0 {
                return FiniteSubset {
                    spec: GroupSpec::Zd { d },
                    elems: {
                        elems.sort();
                        elems
                    },
                };
            }
            i -= 1;
            if coords[i] < m {
                coords[i] += 1;
                for c in coords.iter_mut().skip(i + 1) {
                    *c = -m;
                }
                break;
            }
        }
    }
}

/// The centered-box Folner sequence of a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FolnerSequence {
    spec: GroupSpec,
}

impl FolnerSequence {
    pub fn boxes(spec: GroupSpec) -> Result<Self> {
        if !spec.is_amenable() {
            return Err(Error::NonAmenableGroup);
        }
        Ok(FolnerSequence { spec })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    /// The box `[-m, m]^d`.
    pub fn set(&self, m: usize) -> FiniteSubset {
        match self.spec {
            GroupSpec::Zd { d } => box_set(d, m as i64),
            GroupSpec::Free { .. } => unreachable!("constructor rejects free groups"),
        }
    }

    /// Exact boundary ratios `|∂F_m| / |F_m|` for `m = 0..=m_max`.
    pub fn boundary_ratio_sequence(
        &self,
        m: &FiniteSubset,
        m_max: usize,
    ) -> Result<Vec<BigRational>> {
        let mut out = Vec::with_capacity(m_max + 1);
        for i in 0..=m_max {
            let f = self.set(i);
            let b = f.boundary(m)?;
            out.push(BigRational::new(
                BigInt::from(b.len()),
                BigInt::from(f.len()),
            ));
        }
        Ok(out)
    }
}

/// Disjoint translates of a tile, greedily packed into a finite window.
#[derive(Debug, Clone)]
pub struct Tiling {
    pub tile: FiniteSubset,
    /// `E E^{-1}`, the covering shape.
    pub cover: FiniteSubset,
    pub centers: FiniteSubset,
    pub window: FiniteSubset,
}

/// Scans the window in canonical order and keeps every center whose tile
/// translate fits inside the window and misses all previously placed tiles.
pub fn make_tiling(tile: &FiniteSubset, window: &FiniteSubset) -> Result<Tiling> {
    if tile.is_empty() {
        return Err(Error::EmptyTile);
    }
    let cover = tile.product(&tile.inverse_set())?;
    let mut occupied: BTreeSet<GroupElement> = BTreeSet::new();
    let mut centers = Vec::new();
    for g in window.iter() {
        let translate = tile.translate(g)?;
        if !translate.is_subset_of(window) {
            continue;
        }
        if translate.iter().any(|x| occupied.contains(x)) {
            continue;
        }
        for x in translate.iter() {
            occupied.insert(x.clone());
        }
        centers.push(g.clone());
    }
    Ok(Tiling {
        tile: tile.clone(),
        cover,
        centers: FiniteSubset::new(window.spec(), centers)?,
        window: window.clone(),
    })
}

impl Tiling {
    /// Number of centers whose tile fits inside `f`; `f` must sit in the
    /// working window.
    pub fn count_in(&self, f: &FiniteSubset) -> Result<usize> {
        if !f.is_subset_of(&self.window) {
            return Err(Error::WindowNotContained);
        }
        let mut count = 0;
        for g in self.centers.iter() {
            if self.tile.translate(g)?.is_subset_of(f) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Region on which coverage by `centers * cover` is guaranteed: the
    /// window elements whose tile and cover translates both stay inside the
    /// window. Whenever the identity lies in the tile this is exactly the
    /// cover-interior of the window.
    pub fn coverage_region(&self) -> Result<FiniteSubset> {
        let a = self.window.interior(&self.cover)?;
        let b = self.window.interior(&self.tile)?;
        a.difference(&a.difference(&b)?)
    }

    /// Checks disjointness of all tile translates and coverage of the
    /// guaranteed region.
    pub fn verify(&self) -> Result<()> {
        let mut occupied: BTreeSet<GroupElement> = BTreeSet::new();
        for g in self.centers.iter() {
            for x in self.tile.translate(g)?.iter() {
                if !occupied.insert(x.clone()) {
                    return Err(Error::Validation(format!(
                        "tile translates overlap at {x}"
                    )));
                }
            }
        }
        let mut covered: BTreeSet<GroupElement> = BTreeSet::new();
        for g in self.centers.iter() {
            for x in self.cover.translate(g)?.iter() {
                covered.insert(x.clone());
            }
        }
        for h in self.coverage_region()?.iter() {
            if !covered.contains(h) {
                return Err(Error::Validation(format!("{h} not covered")));
            }
        }
        Ok(())
    }
}
