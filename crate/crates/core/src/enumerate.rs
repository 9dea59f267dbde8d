//! Isomorphism classes of racks, quandles and kei of small order.
//!
//! Two independent engines:
//!
//! * **brute** assigns the columns `f_0, f_1, …` one at a time from
//!   `Sym(n)`, using `f_{y·f_z} = f_z⁻¹ f_y f_z` both to force later columns
//!   and to reject partial tables, then canonicalizes every complete table.
//! * **structured** walks one subgroup `G` per conjugacy class of subgroups
//!   of `Sym(n)` and every choice of `π_i ∈ G` with `C_G(π_i) ⊇ G_{α_i}`
//!   whose normal closure is `G`; each such choice is exactly one rack with
//!   operator group `G`.
//!
//! Both merge canonical forms into ordered sets, so output does not depend
//! on thread count.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::canon::canonical_form;
use crate::construction::{build_rack, RackBlueprint};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::par::{self, Parallelism};
use crate::perm::Permutation;
use crate::rack::{self, Kind};
use crate::subgroups::{subgroup_classes, DEFAULT_DEGREE_CAP};
use crate::table::RackTable;

pub const DEFAULT_BRUTE_CAP: usize = 4;
/// The brute engine never goes beyond this, whatever the configured cap.
pub const BRUTE_HARD_LIMIT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Brute,
    Structured,
    Both,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Structured => "structured",
            Engine::Both => "both",
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Engine::Brute),
            "structured" => Ok(Engine::Structured),
            "both" => Ok(Engine::Both),
            _ => Err(format!("unknown engine {s:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationRequest {
    pub n: usize,
    pub kind: Kind,
    pub engine: Engine,
    pub emit_tables: bool,
    pub brute_cap: usize,
    pub degree_cap: usize,
    pub parallelism: Parallelism,
}

impl EnumerationRequest {
    pub fn new(n: usize, kind: Kind, engine: Engine) -> Self {
        EnumerationRequest {
            n,
            kind,
            engine,
            emit_tables: true,
            brute_cap: DEFAULT_BRUTE_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
            parallelism: Parallelism::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupBreakdown {
    /// Index into `subgroup_classes(n)` (structured engine only).
    pub subgroup_class: Option<usize>,
    pub group_order: usize,
    pub orbit_sizes: Vec<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub n: usize,
    pub kind: Kind,
    pub engine: Engine,
    pub count: usize,
    /// Sorted canonical tables, present when requested.
    pub representatives: Option<Vec<RackTable>>,
    pub breakdown: Vec<GroupBreakdown>,
}

pub fn enumerate(req: &EnumerationRequest) -> Result<EnumerationResult> {
    match req.engine {
        Engine::Brute => enumerate_brute(req),
        Engine::Structured => enumerate_structured(req),
        Engine::Both => {
            let brute = enumerate_brute(req)?;
            let mut structured = enumerate_structured(req)?;
            let same_sets = match (&brute.representatives, &structured.representatives) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            if brute.count != structured.count || !same_sets {
                return Err(Error::EngineDisagreement {
                    brute: brute.count,
                    structured: structured.count,
                });
            }
            structured.engine = Engine::Both;
            Ok(structured)
        }
    }
}

fn kind_allows(kind: Kind, y: usize, f: &Permutation) -> bool {
    match kind {
        Kind::Rack => true,
        Kind::Quandle => f.apply(y) == y,
        Kind::Kei => f.apply(y) == y && f.then(f).is_identity(),
    }
}

struct Brute<'a> {
    n: usize,
    kind: Kind,
    sym: &'a [Permutation],
}

impl Brute<'_> {
    fn forced(&self, cols: &[Permutation]) -> Option<Option<Permutation>> {
        let c = cols.len();
        let mut forced: Option<Permutation> = None;
        for fz in cols {
            for (y, fy) in cols.iter().enumerate() {
                if fz.apply(y) == c {
                    let need = fy.conjugated_by(fz);
                    match &forced {
                        Some(f) if *f != need => return Some(None),
                        Some(_) => {}
                        None => forced = Some(need),
                    }
                }
            }
        }
        forced.map(Some)
    }

    /// Checks every pair `(y, z)` whose triple `(y, z, y·f_z)` first becomes
    /// fully assigned with the newest column.
    fn consistent(&self, cols: &[Permutation]) -> bool {
        let c = cols.len() - 1;
        for z in 0..=c {
            for y in 0..=c {
                let w = cols[z].apply(y);
                if w > c || (y < c && z < c && w < c) {
                    continue;
                }
                if cols[w] != cols[y].conjugated_by(&cols[z]) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&self, cols: &mut Vec<Permutation>, out: &mut BTreeSet<RackTable>) {
        let c = cols.len();
        if c == self.n {
            let t = RackTable::from_translations(cols).expect("degree n");
            debug_assert!(rack::validate(&t).satisfies(self.kind));
            out.insert(canonical_form(&t));
            return;
        }
        let owned;
        let candidates: &[Permutation] = match self.forced(cols) {
            Some(None) => return,
            Some(Some(f)) => {
                owned = [f];
                &owned
            }
            None => self.sym,
        };
        for f in candidates {
            if !kind_allows(self.kind, c, f) {
                continue;
            }
            cols.push(f.clone());
            if self.consistent(cols) {
                self.search(cols, out);
            }
            cols.pop();
        }
    }
}

fn breakdown_by_operator_group(reps: &BTreeSet<RackTable>) -> Result<Vec<GroupBreakdown>> {
    let mut counts: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for t in reps {
        let g = rack::operator_group(t)?;
        *counts
            .entry((g.order(), g.orbit_data().orbit_sizes()))
            .or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .map(|((group_order, orbit_sizes), count)| GroupBreakdown {
            subgroup_class: None,
            group_order,
            orbit_sizes,
            count,
        })
        .collect())
}

pub fn enumerate_brute(req: &EnumerationRequest) -> Result<EnumerationResult> {
    let cap = req.brute_cap.min(BRUTE_HARD_LIMIT);
    if req.n > cap {
        return Err(Error::DegreeCapExceeded {
            degree: req.n,
            cap,
        });
    }
    let n = req.n;
    let mut reps = BTreeSet::new();
    if n > 0 {
        let sym = PermGroup::symmetric(n)?;
        let engine = Brute {
            n,
            kind: req.kind,
            sym: sym.elements(),
        };
        let first: Vec<&Permutation> = sym
            .elements()
            .iter()
            .filter(|f| kind_allows(req.kind, 0, f))
            .collect();
        let parts = par::map(req.parallelism, &first, |f| {
            let mut cols = vec![(*f).clone()];
            let mut out = BTreeSet::new();
            if engine.consistent(&cols) {
                engine.search(&mut cols, &mut out);
            }
            out
        });
        for part in parts {
            reps.extend(part);
        }
    }
    let breakdown = breakdown_by_operator_group(&reps)?;
    Ok(EnumerationResult {
        n,
        kind: req.kind,
        engine: Engine::Brute,
        count: reps.len(),
        representatives: req.emit_tables.then(|| reps.into_iter().collect()),
        breakdown,
    })
}

/// Predicate used to pre-prune candidates for an orbit of length
/// `orbit_len`: an element whose centralizer contains a subgroup of index
/// `orbit_len` has a conjugacy class of at most that size.
pub fn class_size_filter(g: &PermGroup, orbit_len: usize) -> impl Fn(&Permutation) -> bool + '_ {
    move |p| g.class_size_of(p).is_some_and(|s| s <= orbit_len)
}

/// Element-index arithmetic for a small group, for fast subgroup closure.
struct IndexedGroup {
    order: usize,
    mul: Vec<u16>,
    identity: usize,
}

impl IndexedGroup {
    fn new(g: &PermGroup) -> Self {
        let els = g.elements();
        let order = els.len();
        let mut mul = Vec::with_capacity(order * order);
        for a in els {
            for b in els {
                mul.push(els.binary_search(&a.then(b)).expect("closed") as u16);
            }
        }
        let identity = els.binary_search(&Permutation::identity(g.degree())).unwrap();
        IndexedGroup {
            order,
            mul,
            identity,
        }
    }

    fn closure_len(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul[x * self.order + s] as usize;
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }
}

struct ClassOutcome {
    tables: BTreeSet<RackTable>,
}

fn structured_for_group(g: &PermGroup, kind: Kind) -> Result<ClassOutcome> {
    let od = g.orbit_data();
    let idx = IndexedGroup::new(g);
    let els = g.elements();
    // class members of each element, as indices
    let classes: Vec<Vec<usize>> = g
        .conjugacy_classes()
        .iter()
        .map(|c| c.iter().map(|p| els.binary_search(p).unwrap()).collect())
        .collect();
    let class_of = |i: usize| -> usize {
        let p = &els[i];
        classes
            .iter()
            .position(|c| c.binary_search_by(|&j| els[j].cmp(p)).is_ok())
            .unwrap()
    };

    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(od.orbits.len());
    for (orbit, &alpha) in od.orbits.iter().zip(&od.representatives) {
        let stab = g.stabilizer(alpha)?;
        let small_class = class_size_filter(g, orbit.len());
        let p: Vec<usize> = (0..els.len())
            .filter(|&i| {
                let pi = &els[i];
                kind_allows(kind, alpha, pi)
                    && small_class(pi)
                    && stab.generators().iter().all(|h| h.then(pi) == pi.then(h))
            })
            .collect();
        if p.is_empty() {
            return Ok(ClassOutcome {
                tables: BTreeSet::new(),
            });
        }
        candidates.push(p);
    }
    let element_class: Vec<usize> = (0..els.len()).map(class_of).collect();

    let mut tables = BTreeSet::new();
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let picked: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, p)| p[c]).collect();
        let mut class_ids: Vec<usize> = picked.iter().map(|&i| element_class[i]).collect();
        class_ids.sort_unstable();
        class_ids.dedup();
        let gens: Vec<usize> = class_ids.iter().flat_map(|&c| classes[c].iter().copied()).collect();
        if idx.closure_len(&gens) == g.order() {
            let pis = picked.iter().map(|&i| els[i].clone()).collect();
            let b = RackBlueprint::new_unchecked(g.clone(), pis);
            tables.insert(canonical_form(&build_rack(&b)));
        }
        // odometer, last orbit fastest
        let mut k = choice.len();
        loop {
            if k == 0 {
                return Ok(ClassOutcome { tables });
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

pub fn enumerate_structured(req: &EnumerationRequest) -> Result<EnumerationResult> {
    let n = req.n;
    let classes = subgroup_classes(n, req.degree_cap)?;
    let outcomes = par::map(req.parallelism, &classes[..], |g| {
        structured_for_group(g, req.kind)
    });
    let mut reps = BTreeSet::new();
    let mut breakdown = Vec::new();
    let mut total = 0;
    for (i, (g, outcome)) in classes.iter().zip(outcomes).enumerate() {
        let outcome = outcome?;
        if outcome.tables.is_empty() {
            continue;
        }
        total += outcome.tables.len();
        breakdown.push(GroupBreakdown {
            subgroup_class: Some(i),
            group_order: g.order(),
            orbit_sizes: g.orbit_data().orbit_sizes(),
            count: outcome.tables.len(),
        });
        reps.extend(outcome.tables);
    }
    // operator groups of non-isomorphic classes are never conjugate, so the
    // per-group sets are disjoint
    debug_assert_eq!(total, reps.len());
    Ok(EnumerationResult {
        n,
        kind: req.kind,
        engine: Engine::Structured,
        count: reps.len(),
        representatives: req.emit_tables.then(|| reps.into_iter().collect()),
        breakdown,
    })
}
