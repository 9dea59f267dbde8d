//! Materialized permutation groups.
//!
//! A [`PermGroup`] stores its full element list, sorted by image sequence.
//! That is only sensible for small orders, so closure is bounded by an order
//! cap (10! by default) and fails loudly instead of truncating. Points are
//! 0-based in this API.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 3_628_800;

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    orbits: OnceLock<OrbitData>,
    classes: OnceLock<ClassData>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    /// Orbits as sorted point lists, ordered by their smallest point.
    pub orbits: Vec<Vec<usize>>,
    /// Smallest point of each orbit.
    pub representatives: Vec<usize>,
    /// Orbit id of each point.
    pub orbit_index: Vec<usize>,
    /// `transversal[x]` maps the representative of x's orbit to x.
    pub transversal: Vec<Permutation>,
}

impl OrbitData {
    pub fn representative_of(&self, x: usize) -> usize {
        self.representatives[self.orbit_index[x]]
    }

    pub fn orbit_len_of(&self, x: usize) -> usize {
        self.orbits[self.orbit_index[x]].len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

#[derive(Clone, Debug)]
struct ClassData {
    classes: Vec<Vec<Permutation>>,
    /// Class id of each element, aligned with `elements`.
    class_of: Vec<usize>,
}

fn close(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for s in gens {
            let next = e.then(s);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

impl PermGroup {
    /// The closure of `gens` on `degree` points.
    pub fn generate(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let elements = close(degree, &gens, cap)?;
        Ok(Self::from_parts(degree, gens, elements))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// Full symmetric group, generated by a transposition and an n-cycle.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[1, 2]])?);
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (1..=degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        }
        Self::generate(degree, gens)
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        PermGroup {
            degree,
            generators,
            elements,
            orbits: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    /// Subgroup from a sorted element list already known to be closed.
    fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        // greedy generating set: add each element not yet generated
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for e in &elements {
            if !span.contains(e) {
                gens.push(e.clone());
                span = close(degree, &gens, usize::MAX)
                    .expect("uncapped closure")
                    .into_iter()
                    .collect();
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Self::from_parts(degree, gens, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| {
            self.generators
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|s| self.contains(&s.conjugated_by(g))))
    }

    /// `σ⁻¹ G σ`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.conjugated_by(sigma)).collect();
        let mut elements: Vec<Permutation> =
            self.elements.iter().map(|g| g.conjugated_by(sigma)).collect();
        elements.sort_unstable();
        Self::from_parts(self.degree, gens, elements)
    }

    /// Orbits, minimal representatives and a breadth-first transversal.
    pub fn orbit_data(&self) -> &OrbitData {
        self.orbits.get_or_init(|| {
            let n = self.degree;
            let mut orbit_index = vec![usize::MAX; n];
            let mut transversal: Vec<Option<Permutation>> = vec![None; n];
            let mut orbits = Vec::new();
            let mut representatives = Vec::new();
            for start in 0..n {
                if orbit_index[start] != usize::MAX {
                    continue;
                }
                let id = orbits.len();
                let mut orbit = vec![start];
                orbit_index[start] = id;
                transversal[start] = Some(Permutation::identity(n));
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for s in &self.generators {
                        let y = s.apply(x);
                        if orbit_index[y] == usize::MAX {
                            orbit_index[y] = id;
                            let t = transversal[x].as_ref().unwrap().then(s);
                            transversal[y] = Some(t);
                            orbit.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                orbit.sort_unstable();
                orbits.push(orbit);
                representatives.push(start);
            }
            OrbitData {
                orbits,
                representatives,
                orbit_index,
                transversal: transversal.into_iter().map(Option::unwrap).collect(),
            }
        })
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_data().orbits.len() <= 1
    }

    /// Point stabilizer `G_point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point + 1,
                degree: self.degree,
            });
        }
        let elements = self
            .elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .cloned()
            .collect();
        let stab = Self::from_closed_elements(self.degree, elements);
        debug_assert_eq!(
            self.order(),
            stab.order() * self.orbit_data().orbit_len_of(point)
        );
        Ok(stab)
    }

    /// `C_G(p)`; `p` need not lie in the group.
    pub fn centralizer(&self, p: &Permutation) -> Result<PermGroup> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let elements = self
            .elements
            .iter()
            .filter(|g| g.then(p) == p.then(g))
            .cloned()
            .collect();
        Ok(Self::from_closed_elements(self.degree, elements))
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.elements.len()];
            let mut classes: Vec<Vec<Permutation>> = Vec::new();
            for (i, g) in self.elements.iter().enumerate() {
                if class_of[i] != usize::MAX {
                    continue;
                }
                let mut class: Vec<Permutation> =
                    self.elements.iter().map(|h| g.conjugated_by(h)).collect();
                class.sort_unstable();
                class.dedup();
                let id = classes.len();
                for c in &class {
                    let j = self.elements.binary_search(c).expect("conjugate in group");
                    class_of[j] = id;
                }
                classes.push(class);
            }
            // elements are scanned in sorted order, so classes come out sorted by
            // their smallest member
            debug_assert_eq!(
                classes.iter().map(Vec::len).sum::<usize>(),
                self.elements.len()
            );
            debug_assert!(
                self.degree <= 2 || (classes.len() as f64) <= maroti_bound(self.degree) + 1e-9,
                "class count {} above 3^((n-1)/2) for degree {}",
                classes.len(),
                self.degree
            );
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<Permutation>] {
        &self.class_data().classes
    }

    /// Size of the conjugacy class of `p`, if `p` is in the group.
    pub fn class_size_of(&self, p: &Permutation) -> Option<usize> {
        let data = self.class_data();
        let i = self.elements.binary_search(p).ok()?;
        Some(data.classes[data.class_of[i]].len())
    }

    /// Smallest normal subgroup containing every element of `s`.
    pub fn normal_closure(&self, s: &[Permutation]) -> Result<PermGroup> {
        for p in s {
            if !self.contains(p) {
                return Err(Error::NotInGroup(p.to_string()));
            }
        }
        let mut gens: Vec<Permutation> = s.iter().filter(|p| !p.is_identity()).cloned().collect();
        gens.sort_unstable();
        gens.dedup();
        let mut members: HashSet<Permutation> =
            close(self.degree, &gens, usize::MAX)?.into_iter().collect();
        loop {
            let mut grew = false;
            let snapshot = gens.clone();
            'outer: for x in &snapshot {
                for g in &self.generators {
                    let c = x.conjugated_by(g);
                    if !members.contains(&c) {
                        gens.push(c);
                        members = close(self.degree, &gens, usize::MAX)?.into_iter().collect();
                        grew = true;
                        break 'outer;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut elements: Vec<Permutation> = members.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_parts(self.degree, gens, elements))
    }

    /// Sorted multiset of cycle types over all elements; a conjugacy invariant in Sym(n).
    pub fn cycle_type_profile(&self) -> Vec<(Vec<usize>, usize)> {
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for g in &self.elements {
            *counts.entry(g.cycle_type()).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        v
    }
}

/// `3^((n-1)/2)`, the upper bound on the number of conjugacy classes of a
/// permutation group of degree `n > 2`.
pub fn maroti_bound(degree: usize) -> f64 {
    3f64.powf((degree as f64 - 1.0) / 2.0)
}

/// Checks the class-count bound; vacuous for degree ≤ 2.
pub fn satisfies_maroti_bound(g: &PermGroup) -> bool {
    g.degree() <= 2 || (g.conjugacy_classes().len() as f64) <= maroti_bound(g.degree()) + 1e-9
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, self.order(), &self.elements).cmp(&(other.degree, other.order(), &other.elements))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, <{}>)",
            self.degree,
            self.order(),
            crate::perm::format_list(&self.generators)
        )
    }
}
