//! One representative per `Sym(n)`-conjugacy class of subgroups.
//!
//! Classes are discovered by layering: every known representative `H` is
//! joined with elements `g` of prime-power order, `g` taken up to conjugation
//! by the normalizer of `H`. New subgroups are kept unless they are
//! conjugate to an existing representative. Every subgroup is generated by
//! prime-power-order elements, so this reaches all classes, including the
//! perfect ones that pure cyclic extension never produces.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_DEGREE_CAP: usize = 6;

type ClassKey = (usize, Vec<usize>, Vec<(Vec<usize>, usize)>);

fn class_key(g: &PermGroup) -> ClassKey {
    (g.order(), g.orbit_data().orbit_sizes(), g.cycle_type_profile())
}

/// Whether `a` and `b` are conjugate under some element of `sym`.
pub fn conjugate_in(sym: &PermGroup, a: &PermGroup, b: &PermGroup) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    sym.elements()
        .iter()
        .find(|s| a.generators().iter().all(|x| b.contains(&x.conjugated_by(s))))
        .cloned()
}

fn is_prime_power(mut m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut p = 2;
    while !m.is_multiple_of(p) {
        p += 1;
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn normalizer(sym: &PermGroup, h: &PermGroup) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::new();
    span.insert(Permutation::identity(sym.degree()));
    for s in sym.elements() {
        if span.contains(s) {
            continue;
        }
        if h.generators().iter().all(|x| h.contains(&x.conjugated_by(s))) {
            gens.push(s.clone());
            span = PermGroup::generate(sym.degree(), gens.clone())
                .expect("normalizer inside Sym(n)")
                .elements()
                .iter()
                .cloned()
                .collect();
        }
    }
    gens
}

/// Candidate join elements for `h`: prime-power order, outside `h`, one per
/// normalizer-conjugation orbit.
fn join_candidates(sym: &PermGroup, h: &PermGroup, prime_power: &[Permutation]) -> Vec<Permutation> {
    let norm = normalizer(sym, h);
    let mut visited: HashSet<Permutation> = HashSet::new();
    let mut out = Vec::new();
    for g in prime_power {
        if visited.contains(g) || h.contains(g) {
            continue;
        }
        out.push(g.clone());
        let mut queue = VecDeque::from([g.clone()]);
        visited.insert(g.clone());
        while let Some(x) = queue.pop_front() {
            for s in &norm {
                let y = x.conjugated_by(s);
                if visited.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

fn compute(n: usize) -> Result<Vec<PermGroup>> {
    let sym = PermGroup::symmetric(n)?;
    let prime_power: Vec<Permutation> = sym
        .elements()
        .iter()
        .filter(|g| is_prime_power(g.order()))
        .cloned()
        .collect();

    let mut reps: Vec<PermGroup> = vec![PermGroup::trivial(n)];
    let mut buckets: HashMap<ClassKey, Vec<usize>> = HashMap::new();
    buckets.insert(class_key(&reps[0]), vec![0]);
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    seen.insert(reps[0].elements().to_vec());

    let mut next = 0;
    while next < reps.len() {
        let h = reps[next].clone();
        next += 1;
        for g in join_candidates(&sym, &h, &prime_power) {
            let mut gens = h.generators().to_vec();
            gens.push(g);
            let k = PermGroup::generate(n, gens)?;
            if !seen.insert(k.elements().to_vec()) {
                continue;
            }
            let key = class_key(&k);
            let bucket = buckets.entry(key).or_default();
            if bucket.iter().any(|&i| conjugate_in(&sym, &k, &reps[i]).is_some()) {
                continue;
            }
            bucket.push(reps.len());
            reps.push(k);
        }
    }
    reps.sort();
    Ok(reps)
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<PermGroup>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<PermGroup>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Conjugacy-class representatives of subgroups of `Sym(n)`, sorted by
/// (order, element list). Results are memoized per degree.
pub fn subgroup_classes(n: usize, degree_cap: usize) -> Result<Arc<Vec<PermGroup>>> {
    if n > degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree: n,
            cap: degree_cap,
        });
    }
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let reps = Arc::new(compute(n)?);
    cache().lock().unwrap().entry(n).or_insert_with(|| reps.clone());
    Ok(reps)
}
