//! Exhaustive checks over the ideal lattice of a finite ring.

use std::collections::{HashMap, HashSet};
use std::fmt;

use cirsa_core::rsa::RsaVerdict;
use fixedbitset::FixedBitSet;

use crate::error::{LabError, Result};
use crate::ideal::{fideal_intersection, fideal_product, fideal_sum, FIdeal, IdealLattice};
use crate::ring::{FiniteRing, Verification};

const MAX_MAXIMAL: usize = 16;
const MAX_FAMILIES: usize = 200_000;

pub fn is_commutative(ring: &FiniteRing) -> bool {
    (0..ring.order()).all(|a| (a + 1..ring.order()).all(|b| ring.mul(a, b) == ring.mul(b, a)))
}

/// Elements with a two-sided inverse.
pub fn unit_count(ring: &FiniteRing) -> usize {
    let one = ring.one();
    (0..ring.order())
        .filter(|&a| (0..ring.order()).any(|b| ring.mul(a, b) == one && ring.mul(b, a) == one))
        .count()
}

pub fn is_division_ring(ring: &FiniteRing) -> bool {
    unit_count(ring) == ring.order() - 1
}

/// Coset number of every element; cosets are numbered by least member.
pub fn coset_map(ring: &FiniteRing, a: &FIdeal) -> Vec<u32> {
    let mut map = vec![u32::MAX; ring.order()];
    let mut next = 0;
    for x in 0..ring.order() {
        if map[x] == u32::MAX {
            for m in a.members() {
                map[ring.add(x, m)] = next;
            }
            next += 1;
        }
    }
    map
}

pub fn quotient_ring(ring: &FiniteRing, a: &FIdeal) -> Result<FiniteRing> {
    if a.is_whole(ring) {
        return Err(LabError::ImproperIdeal);
    }
    let map = coset_map(ring, a);
    let k = ring.order() / a.size();
    let mut reps = vec![usize::MAX; k];
    for x in (0..ring.order()).rev() {
        reps[map[x] as usize] = x;
    }
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            add.push(map[ring.add(x, y)]);
            mul.push(map[ring.mul(x, y)]);
        }
    }
    let names = reps
        .iter()
        .map(|&x| format!("{}+A", ring.name(x)))
        .collect();
    let label = format!("{}/A", ring.label());
    // the coset tables inherit every axiom from the ring
    FiniteRing::from_tables(
        label,
        Some(names),
        add,
        mul,
        map[ring.zero()] as usize,
        map[ring.one()] as usize,
        Verification::Sampled,
    )
}

/// A pair of ideals with `AB != BA`, if any.
pub fn ci_witness(ring: &FiniteRing, lattice: &IdealLattice) -> Result<Option<(usize, usize)>> {
    let ideals = lattice.ideals();
    for i in 0..ideals.len() {
        for j in i + 1..ideals.len() {
            if fideal_product(ring, &ideals[i], &ideals[j])?
                != fideal_product(ring, &ideals[j], &ideals[i])?
            {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_ci_ring(ring: &FiniteRing, lattice: &IdealLattice) -> Result<bool> {
    Ok(ci_witness(ring, lattice)?.is_none())
}

pub fn is_maximal(ring: &FiniteRing, lattice: &IdealLattice, a: &FIdeal) -> bool {
    !a.is_whole(ring)
        && !lattice
            .ideals()
            .iter()
            .any(|b| !b.is_whole(ring) && b != a && a.is_subset(b))
}

pub fn maximal_ideals(ring: &FiniteRing, lattice: &IdealLattice) -> Vec<usize> {
    (0..lattice.len())
        .filter(|&i| is_maximal(ring, lattice, lattice.get(i)))
        .collect()
}

/// Decides the RSA property with the single exponent `1 + phi`: every
/// admissible `e d` is `1 + t phi`, and `x^(1+phi) = x` for all x implies
/// `x^(1+t phi) = x` by induction on t.
pub fn is_rsa_ideal_fin(ring: &FiniteRing, a: &FIdeal) -> Result<RsaVerdict> {
    let q = quotient_ring(ring, a)?;
    if q.order() <= 2 {
        return Ok(RsaVerdict::Ineligible);
    }
    let phi = unit_count(&q);
    if phi <= 2 {
        return Ok(RsaVerdict::Ineligible);
    }
    let s = 1 + phi as u64;
    Ok(if (0..q.order()).all(|x| q.pow(x, s) == x) {
        RsaVerdict::RsaIdeal
    } else {
        RsaVerdict::NotRsaIdeal
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: &'static str,
    /// Lattice indices of the ideals involved.
    pub witnesses: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub lines: Vec<String>,
    pub violations: Vec<Violation>,
}

impl Report {
    fn new(title: String) -> Self {
        Report {
            title,
            ..Report::default()
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, kind: &'static str, witnesses: Vec<usize>, detail: String) {
        self.violations.push(Violation {
            kind,
            witnesses,
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {}", v.detail)?;
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let w: Vec<String> = v.witnesses.iter().map(|i| i.to_string()).collect();
            writeln!(f, "VIOLATION {} {}", v.kind, w.join(" "))?;
        }
        Ok(())
    }
}

fn product_of(ring: &FiniteRing, lattice: &IdealLattice, idx: &[usize]) -> Result<FIdeal> {
    let mut acc = lattice.get(idx[0]).clone();
    for &i in &idx[1..] {
        acc = fideal_product(ring, &acc, lattice.get(i))?;
    }
    Ok(acc)
}

fn names(idx: &[usize]) -> String {
    let v: Vec<String> = idx.iter().map(|i| format!("#{i}")).collect();
    v.join(", ")
}

/// For every eligible proper ideal A: A is an RSA-ideal iff A is a product
/// of distinct maximal ideals. Requires a CI-ring.
pub fn theorem5_verify(ring: &FiniteRing, lattice: &IdealLattice) -> Result<Report> {
    if let Some((first, second)) = ci_witness(ring, lattice)? {
        return Err(LabError::NotCIRing { first, second });
    }
    let mut report = Report::new(format!("RSA-ideal characterization over {}", ring.label()));
    let maximal = maximal_ideals(ring, lattice);
    if maximal.len() > MAX_MAXIMAL {
        return Err(LabError::TooManyMaximal(maximal.len()));
    }
    report.lines.push(format!(
        "{} ideals, maximal: {}",
        lattice.len(),
        if maximal.is_empty() {
            "none".into()
        } else {
            names(&maximal)
        }
    ));
    // products over every nonempty subset, remembering one factorization
    let mut products: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
    for mask in 1u32..(1 << maximal.len()) {
        let subset: Vec<usize> = (0..maximal.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| maximal[b])
            .collect();
        let p = product_of(ring, lattice, &subset)?;
        products.entry(p.member_set().clone()).or_insert(subset);
    }
    let (mut eligible, mut rsa) = (0, 0);
    for i in lattice.proper() {
        let a = lattice.get(i);
        let verdict = is_rsa_ideal_fin(ring, a)?;
        let factors = products.get(a.member_set());
        let shape = match factors {
            Some(f) => format!("= product of {}", names(f)),
            None => "not a product of distinct maximal ideals".into(),
        };
        report
            .lines
            .push(format!("#{i} ({}): {verdict:?}, {shape}", a.display(ring)));
        if verdict == RsaVerdict::Ineligible {
            continue;
        }
        eligible += 1;
        rsa += usize::from(verdict == RsaVerdict::RsaIdeal);
        match (verdict == RsaVerdict::RsaIdeal, factors) {
            (true, None) => report.violation(
                "theorem5",
                vec![i],
                format!("#{i} is an RSA-ideal but not a product of distinct maximal ideals"),
            ),
            (false, Some(f)) => {
                let simple: Vec<usize> = f
                    .iter()
                    .copied()
                    .filter(|&m| {
                        !is_division_ring(&quotient_ring(ring, lattice.get(m)).expect("proper"))
                    })
                    .collect();
                let why = if simple.is_empty() {
                    String::new()
                } else {
                    format!(" (R/M is not a division ring for M = {})", names(&simple))
                };
                report.violation(
                    "theorem5",
                    vec![i],
                    format!(
                        "#{i} is a product of distinct maximal ideals but not an RSA-ideal{why}"
                    ),
                );
            }
            _ => {}
        }
    }
    report.lines.push(format!(
        "{eligible} eligible proper ideals, {rsa} RSA-ideals"
    ));
    Ok(report)
}

/// Chinese remaindering for every pairwise-comaximal family of proper
/// ideals; intersection equals product when the ring is CI; and R/A is
/// commutative for every RSA-ideal A.
pub fn crt_cor1_verify(ring: &FiniteRing, lattice: &IdealLattice) -> Result<Report> {
    let ci = is_ci_ring(ring, lattice)?;
    let mut report = Report::new(format!("Chinese remaindering over {}", ring.label()));
    let proper: Vec<usize> = lattice.proper().collect();
    let n = proper.len();
    let mut comax = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = fideal_sum(ring, lattice.get(proper[i]), lattice.get(proper[j]))?;
            comax[i][j] = s.is_whole(ring);
            comax[j][i] = comax[i][j];
        }
    }
    let maps: Vec<Vec<u32>> = proper
        .iter()
        .map(|&i| coset_map(ring, lattice.get(i)))
        .collect();

    let mut families = Vec::new();
    let mut stack = Vec::new();
    collect_families(&comax, 0, &mut stack, &mut families);
    let truncated = families.len() > MAX_FAMILIES;
    families.truncate(MAX_FAMILIES);
    report.lines.push(format!(
        "{} pairwise-comaximal families of two or more proper ideals{}; CI-ring: {}",
        families.len(),
        if truncated { " (truncated)" } else { "" },
        if ci { "yes" } else { "no" }
    ));

    for fam in &families {
        let idx: Vec<usize> = fam.iter().map(|&k| proper[k]).collect();
        let mut inter = lattice.get(idx[0]).clone();
        for &i in &idx[1..] {
            inter = fideal_intersection(ring, &inter, lattice.get(i))?;
        }
        if ci {
            let prod = product_of(ring, lattice, &idx)?;
            if prod != inter {
                report.violation(
                    "corollary1",
                    idx.clone(),
                    format!("intersection differs from product for {}", names(&idx)),
                );
            }
        }
        let target: usize = idx
            .iter()
            .map(|&i| ring.order() / lattice.get(i).size())
            .product();
        let images: HashSet<Vec<u32>> = (0..ring.order())
            .map(|x| fam.iter().map(|&k| maps[k][x]).collect())
            .collect();
        let quotient = ring.order() / inter.size();
        if images.len() != target || quotient != target {
            report.violation(
                "theorem2",
                idx.clone(),
                format!(
                    "{}: |R/cap| = {quotient}, product of |R/A_i| = {target}, image size {}",
                    names(&idx),
                    images.len()
                ),
            );
        }
    }

    for &i in &proper {
        let a = lattice.get(i);
        let commutative = is_commutative(&quotient_ring(ring, a)?);
        match (is_rsa_ideal_fin(ring, a)?, commutative) {
            (RsaVerdict::RsaIdeal, false) => report.violation(
                "theorem4",
                vec![i],
                format!("#{i} is an RSA-ideal with non-commutative quotient"),
            ),
            (_, false) => report.lines.push(format!(
                "note: R/#{i} is not commutative (#{i} is not an RSA-ideal)"
            )),
            _ => {}
        }
    }
    Ok(report)
}

fn collect_families(
    comax: &[Vec<bool>],
    start: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for k in start..comax.len() {
        if out.len() > MAX_FAMILIES {
            return;
        }
        if stack.iter().all(|&s| comax[s][k]) {
            stack.push(k);
            if stack.len() >= 2 {
                out.push(stack.clone());
            }
            collect_families(comax, k + 1, stack, out);
            stack.pop();
        }
    }
}
