//! Two-sided ideals of a finite ring and the ideal lattice.
//!
//! Every additive subgroup is tracked together with a generating set, so
//! closures grow coset by coset and products only multiply generators:
//! `AB` is spanned by `{a b}` for additive generators `a` of A and `b` of B,
//! and `RaR` is spanned by `{g a h}` for additive generators `g, h` of R.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{LabError, Result};
use crate::ring::FiniteRing;

#[derive(Clone, Debug)]
pub struct FIdeal {
    ring_id: u64,
    members: FixedBitSet,
    gens: Vec<usize>,
    size: usize,
}

impl PartialEq for FIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_id == other.ring_id && self.members == other.members
    }
}

impl Eq for FIdeal {}

impl PartialOrd for FIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then the sorted member lists lexicographically.
impl Ord for FIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl FIdeal {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    /// Additive generators, chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_whole(&self, ring: &FiniteRing) -> bool {
        self.size == ring.order()
    }

    pub fn is_subset(&self, other: &FIdeal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn check(&self, ring: &FiniteRing) -> Result<()> {
        if self.ring_id == ring.id() {
            Ok(())
        } else {
            Err(LabError::RingMismatch)
        }
    }

    pub fn display<'a>(&'a self, ring: &'a FiniteRing) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, ring }
    }
}

struct IdealDisplay<'a> {
    ideal: &'a FIdeal,
    ring: &'a FiniteRing,
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut gens: Vec<&str> = self.ideal.gens.iter().map(|&g| self.ring.name(g)).collect();
        if gens.is_empty() {
            gens.push(self.ring.name(self.ring.zero()));
        }
        write!(
            f,
            "size {} generated by {{{}}}",
            self.ideal.size,
            gens.join(", ")
        )
    }
}

/// Growing additive subgroup.
struct Span<'r> {
    ring: &'r FiniteRing,
    members: FixedBitSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'r> Span<'r> {
    fn zero(ring: &'r FiniteRing) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert(ring.zero());
        Span {
            ring,
            members,
            elems: vec![ring.zero()],
            gens: Vec::new(),
        }
    }

    fn of(ring: &'r FiniteRing, ideal: &FIdeal) -> Self {
        Span {
            ring,
            members: ideal.members.clone(),
            elems: ideal.members.ones().collect(),
            gens: ideal.gens.clone(),
        }
    }

    /// Adds `x`: the new group is the union of the cosets `H + m x`.
    fn extend(&mut self, x: usize) {
        if self.members.contains(x) {
            return;
        }
        self.gens.push(x);
        let base_len = self.elems.len();
        let mut cur = x;
        while !self.members.contains(cur) {
            for i in 0..base_len {
                let y = self.ring.add(self.elems[i], cur);
                self.members.insert(y);
                self.elems.push(y);
            }
            cur = self.ring.add(cur, x);
        }
    }

    fn finish(self) -> FIdeal {
        FIdeal {
            ring_id: self.ring.id(),
            size: self.elems.len(),
            members: self.members,
            gens: self.gens,
        }
    }
}

/// Minimal-by-index additive generators of the subgroup spanned by `elems`.
pub(crate) fn greedy_generators(
    ring: &FiniteRing,
    elems: impl IntoIterator<Item = usize>,
) -> Vec<usize> {
    let mut span = Span::zero(ring);
    for x in elems {
        span.extend(x);
    }
    span.gens
}

fn canonical(ring: &FiniteRing, span: Span) -> FIdeal {
    let mut ideal = span.finish();
    ideal.gens = greedy_generators(ring, ideal.members.ones());
    ideal
}

/// The additive closure of `{r x s : x in xs, r, s in R}`.
pub fn ideal_generated_by(ring: &FiniteRing, xs: &[usize]) -> FIdeal {
    let g = ring.additive_generators();
    let mut span = Span::zero(ring);
    for &x in xs {
        for &l in g {
            let lx = ring.mul(l, x);
            for &r in g {
                span.extend(ring.mul(lx, r));
            }
        }
    }
    canonical(ring, span)
}

pub fn principal_ideal(ring: &FiniteRing, a: usize) -> FIdeal {
    ideal_generated_by(ring, &[a])
}

pub fn zero_ideal(ring: &FiniteRing) -> FIdeal {
    canonical(ring, Span::zero(ring))
}

pub fn whole_ring(ring: &FiniteRing) -> FIdeal {
    principal_ideal(ring, ring.one())
}

pub fn fideal_sum(ring: &FiniteRing, a: &FIdeal, b: &FIdeal) -> Result<FIdeal> {
    a.check(ring)?;
    b.check(ring)?;
    let mut span = Span::of(ring, a);
    for &x in &b.gens {
        span.extend(x);
    }
    Ok(canonical(ring, span))
}

/// The additive closure of `{a b : a in A, b in B}`.
pub fn fideal_product(ring: &FiniteRing, a: &FIdeal, b: &FIdeal) -> Result<FIdeal> {
    a.check(ring)?;
    b.check(ring)?;
    let mut span = Span::zero(ring);
    for &x in &a.gens {
        for &y in &b.gens {
            span.extend(ring.mul(x, y));
        }
    }
    Ok(canonical(ring, span))
}

pub fn fideal_intersection(ring: &FiniteRing, a: &FIdeal, b: &FIdeal) -> Result<FIdeal> {
    a.check(ring)?;
    b.check(ring)?;
    let mut members = a.members.clone();
    members.intersect_with(&b.members);
    let size = members.count_ones(..);
    Ok(FIdeal {
        ring_id: ring.id(),
        gens: greedy_generators(ring, members.ones()),
        members,
        size,
    })
}

/// Every two-sided ideal, in size-then-lexicographic order.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ideals: Vec<FIdeal>,
}

impl IdealLattice {
    pub fn ideals(&self) -> &[FIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, a: &FIdeal) -> Option<usize> {
        self.ideals.binary_search(a).ok()
    }

    pub fn get(&self, i: usize) -> &FIdeal {
        &self.ideals[i]
    }

    /// Indices of the ideals other than R.
    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        let whole = self.ideals.len() - 1;
        0..whole
    }
}

/// All ideals as the join-closure of the principal ideals.
pub fn all_ideals(ring: &FiniteRing, cap: usize) -> Result<IdealLattice> {
    if ring.order() > cap {
        return Err(LabError::CapExceeded {
            order: ring.order().to_string(),
            cap,
        });
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut ideals = Vec::new();
    for a in 0..ring.order() {
        let p = principal_ideal(ring, a);
        if seen.insert(p.members.clone()) {
            ideals.push(p);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let s = fideal_sum(ring, &ideals[i], &ideals[j])?;
            if seen.insert(s.members.clone()) {
                ideals.push(s);
            }
        }
        i += 1;
    }
    ideals.sort();
    Ok(IdealLattice { ideals })
}
