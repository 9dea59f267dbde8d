//! Racks from their operator-group data, and back.
//!
//! A [`RackBlueprint`] is a permutation group `G`, its minimal orbit
//! representatives `α_i` and one `π_i ∈ G` per orbit with
//! `C_G(π_i) ⊇ G_{α_i}`. [`build_rack`] sets `f_{α_i·g} = g⁻¹ π_i g`, which
//! is well defined exactly because of that centralizer condition, and the
//! result is a rack whose operator group lies in `G`. [`decompose`] goes the
//! other way, with `G` the operator group and `π_i = f_{α_i}`.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{format_list, Permutation};
use crate::rack::{self, RackClass};
use crate::table::{parse_square, RackTable, Tokens};

pub const DEFAULT_MULT_TABLE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackBlueprint {
    group: PermGroup,
    pis: Vec<Permutation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlueprintFlags {
    /// The normal closure of the `π_i` is all of `G`.
    pub condition_b: bool,
    /// Every `π_i` fixes `α_i`.
    pub quandle_ok: bool,
    /// `quandle_ok` and every `π_i` squares to the identity.
    pub kei_ok: bool,
}

/// First `(orbit, h)` with `h ∈ G_{α_i}` not commuting with `π_i`.
fn centralizer_condition_failure(group: &PermGroup, pis: &[Permutation]) -> Option<(usize, Permutation)> {
    let reps = &group.orbit_data().representatives;
    for (i, (&alpha, pi)) in reps.iter().zip(pis).enumerate() {
        for h in group.elements() {
            if h.apply(alpha) == alpha && h.then(pi) != pi.then(h) {
                return Some((i, h.clone()));
            }
        }
    }
    None
}

impl RackBlueprint {
    /// `pis[i]` belongs to the `i`-th orbit of `group` (orbits ordered by
    /// smallest point). Fails if the centralizer condition does not hold.
    pub fn new(group: PermGroup, pis: Vec<Permutation>) -> Result<Self> {
        let orbits = group.orbit_data().orbits.len();
        if pis.len() != orbits {
            return Err(Error::Blueprint(format!(
                "{} orbit elements given for {orbits} orbits",
                pis.len()
            )));
        }
        for pi in &pis {
            if !group.contains(pi) {
                return Err(Error::NotInGroup(pi.to_string()));
            }
        }
        if let Some((orbit, h)) = centralizer_condition_failure(&group, &pis) {
            return Err(Error::CentralizerCondition {
                orbit: orbit + 1,
                witness: h.to_string(),
            });
        }
        Ok(RackBlueprint { group, pis })
    }

    /// Skips the membership and centralizer checks; for callers that
    /// selected `pis` under those conditions already.
    pub(crate) fn new_unchecked(group: PermGroup, pis: Vec<Permutation>) -> Self {
        debug_assert!(centralizer_condition_failure(&group, &pis).is_none());
        RackBlueprint { group, pis }
    }

    /// As [`RackBlueprint::new`], with explicit representatives that must be
    /// the minimal orbit points.
    pub fn with_reps(group: PermGroup, reps: &[usize], pis: Vec<Permutation>) -> Result<Self> {
        if reps != group.orbit_data().representatives.as_slice() {
            return Err(Error::Blueprint(
                "representatives must be the smallest point of each orbit, in order".into(),
            ));
        }
        Self::new(group, pis)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn reps(&self) -> &[usize] {
        &self.group.orbit_data().representatives
    }

    pub fn pis(&self) -> &[Permutation] {
        &self.pis
    }

    /// Text form: `degree`, `generators`, then one `rep <point> pi <cycles>` line per orbit.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "degree {}\ngenerators {}\n",
            self.degree(),
            format_list(self.group.generators())
        );
        for (&a, pi) in self.reps().iter().zip(&self.pis) {
            out.push_str(&format!("rep {} pi {}\n", a + 1, pi));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut degree: Option<usize> = None;
        let mut gens: Option<Vec<Permutation>> = None;
        let mut entries: Vec<(usize, usize, Permutation)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let at = |e: Error| match e {
                Error::Parse { msg, .. } => Error::Parse { line: line_no, msg },
                other => Error::Parse {
                    line: line_no,
                    msg: other.to_string(),
                },
            };
            match key {
                "degree" => {
                    let n = rest
                        .parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("bad degree {rest:?}")))?;
                    degree = Some(n);
                }
                "generators" => {
                    let n = degree.ok_or_else(|| Error::parse(line_no, "generators before degree"))?;
                    gens = Some(Permutation::parse_list(rest, n).map_err(at)?);
                }
                "rep" => {
                    let n = degree.ok_or_else(|| Error::parse(line_no, "rep before degree"))?;
                    let (point, tail) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| Error::parse(line_no, "expected 'rep <point> pi <cycles>'"))?;
                    let point = point
                        .parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1 && p <= n)
                        .ok_or_else(|| Error::parse(line_no, format!("bad point {point:?}")))?;
                    let cycles = tail
                        .trim()
                        .strip_prefix("pi")
                        .ok_or_else(|| Error::parse(line_no, "expected 'pi'"))?;
                    let pi = Permutation::parse_cycles(cycles, n).map_err(at)?;
                    entries.push((line_no, point - 1, pi));
                }
                other => return Err(Error::parse(line_no, format!("unknown key {other:?}"))),
            }
        }
        let n = degree.ok_or_else(|| Error::parse(1, "missing degree"))?;
        let group = PermGroup::generate(n, gens.unwrap_or_default())?;
        let od = group.orbit_data();
        let mut pis: Vec<Option<Permutation>> = vec![None; od.orbits.len()];
        for (line, point, pi) in entries {
            let orbit = od.orbit_index[point];
            if od.representatives[orbit] != point {
                return Err(Error::parse(
                    line,
                    format!(
                        "rep {} is not the smallest point of its orbit ({})",
                        point + 1,
                        od.representatives[orbit] + 1
                    ),
                ));
            }
            if pis[orbit].replace(pi).is_some() {
                return Err(Error::parse(line, format!("duplicate rep {}", point + 1)));
            }
        }
        let pis = pis
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| {
                    Error::Blueprint(format!("missing rep line for orbit of {}", od.representatives[i] + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, pis)
    }
}

/// Side conditions of a blueprint. The centralizer condition is re-checked
/// and reported as an error.
pub fn check_blueprint(b: &RackBlueprint) -> Result<BlueprintFlags> {
    if let Some((orbit, h)) = centralizer_condition_failure(&b.group, &b.pis) {
        return Err(Error::CentralizerCondition {
            orbit: orbit + 1,
            witness: h.to_string(),
        });
    }
    let condition_b = b.group.normal_closure(&b.pis)? == b.group;
    let quandle_ok = b.reps().iter().zip(&b.pis).all(|(&a, pi)| pi.apply(a) == a);
    let kei_ok = quandle_ok && b.pis.iter().all(|pi| pi.then(pi).is_identity());
    Ok(BlueprintFlags {
        condition_b,
        quandle_ok,
        kei_ok,
    })
}

/// The translation `f_x` for every point, using the orbit transversal.
pub fn augmentation_map(b: &RackBlueprint) -> Vec<Permutation> {
    let od = b.group.orbit_data();
    (0..b.degree())
        .map(|x| b.pis[od.orbit_index[x]].conjugated_by(&od.transversal[x]))
        .collect()
}

/// `x ▷ y = x · f_y` with `f_{α_i g} = g⁻¹ π_i g`.
pub fn build_rack(b: &RackBlueprint) -> RackTable {
    RackTable::from_translations(&augmentation_map(b)).expect("translations share the degree")
}

/// Checks that `g⁻¹ π_i g` depends only on `α_i · g`, over every `g ∈ G`.
pub fn augmentation_is_well_defined(b: &RackBlueprint) -> bool {
    let f = augmentation_map(b);
    let od = b.group.orbit_data();
    b.group.elements().iter().all(|g| {
        od.representatives
            .iter()
            .zip(&b.pis)
            .all(|(&a, pi)| f[g.apply(a)] == pi.conjugated_by(g))
    })
}

/// Blueprint of a rack: operator group, minimal representatives, `π_i = f_{α_i}`.
pub fn decompose(t: &RackTable) -> Result<RackBlueprint> {
    if let RackClass::NotRack(w) = rack::validate(t) {
        return Err(Error::NotRack(w.to_string()));
    }
    let group = rack::operator_group(t)?;
    let pis = group
        .orbit_data()
        .representatives
        .iter()
        .map(|&a| rack::translation(t, a))
        .collect::<Result<Vec<_>>>()?;
    let b = RackBlueprint::new(group, pis).expect("centralizer condition holds for every rack");
    debug_assert!(check_blueprint(&b).map(|f| f.condition_b).unwrap_or(false));
    Ok(b)
}

/// Some `π ∈ G` whose normal closure is `G`, smallest first by conjugacy class.
pub fn full_normal_closure_element(g: &PermGroup) -> Option<Permutation> {
    g.conjugacy_classes().iter().find_map(|class| {
        let pi = &class[0];
        let nc = g.normal_closure(std::slice::from_ref(pi)).expect("class member in group");
        (nc == *g).then(|| pi.clone())
    })
}

/// A transitive group without a full-normal-closure element cannot be the
/// operator group of any rack on its points.
pub fn excluded_as_operator_group(g: &PermGroup) -> bool {
    g.is_transitive() && full_normal_closure_element(g).is_none()
}

/// A finite group given by its multiplication table, elements `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    m: usize,
    data: Vec<u32>,
    identity: usize,
}

impl MultTable {
    pub fn new(m: usize, data: Vec<u32>) -> Result<Self> {
        Self::with_cap(m, data, DEFAULT_MULT_TABLE_CAP)
    }

    /// Checks closure, identity, inverses and associativity.
    pub fn with_cap(m: usize, data: Vec<u32>, cap: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if m > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        if data.len() != m * m || data.iter().any(|&v| v as usize >= m) {
            return Err(Error::NotAGroup("entries out of range".into()));
        }
        let op = |a: usize, b: usize| data[a * m + b] as usize;
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| op(e, x) == x && op(x, e) == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for x in 0..m {
            if !(0..m).any(|y| op(x, y) == identity && op(y, x) == identity) {
                return Err(Error::NotAGroup(format!("element {} has no inverse", x + 1)));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = op(a, b);
                for c in 0..m {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(MultTable { m, data, identity })
    }

    /// Text format: order `m`, then `m` rows of `m` entries in `1..m`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = Tokens::new(text);
        let (m, data) =
            parse_square(&mut toks, "group")?.ok_or_else(|| Error::parse(1, "empty input"))?;
        if let Some((line, tok)) = toks.next() {
            return Err(Error::parse(line, format!("unexpected trailing token {tok:?}")));
        }
        Self::new(m, data)
    }

    /// Multiplication table of a permutation group, elements in sorted order.
    pub fn from_perm_group(g: &PermGroup) -> Result<Self> {
        let els = g.elements();
        let m = els.len();
        let mut data = Vec::with_capacity(m * m);
        for a in els {
            for b in els {
                data.push(els.binary_search(&a.then(b)).expect("closed") as u32);
            }
        }
        Self::with_cap(m, data, usize::MAX)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data[a * self.m + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.m).find(|&b| self.mul(a, b) == self.identity).unwrap()
    }

    fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), a), g)
    }

    /// Elements of order exactly 2.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.m)
            .filter(|&a| a != self.identity && self.mul(a, a) == self.identity)
            .collect()
    }

    fn subgroup_closure(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Normal closure of `seeds`, as an element set.
    pub fn normal_closure(&self, seeds: &[usize]) -> BTreeSet<usize> {
        let conjugates: BTreeSet<usize> = seeds
            .iter()
            .flat_map(|&s| (0..self.m).map(move |g| (s, g)))
            .map(|(s, g)| self.conjugate(s, g))
            .collect();
        self.subgroup_closure(&conjugates)
    }

    pub fn generated_by_involutions(&self) -> bool {
        self.subgroup_closure(&self.involutions().into_iter().collect()).len() == self.m
    }
}

/// Realizes an abstract group as the operator group of a quandle.
///
/// Points: the regular copy of the group first (point `i` is element `i`),
/// then for each non-identity seed `π` the right cosets of `C(π)`, sorted by
/// smallest element. The group acts by right multiplication; the regular
/// block carries `π = 1` and each coset block carries its seed. `seeds`
/// defaults to all non-identity elements and must have full normal closure.
pub fn realize_operator_group(mt: &MultTable, seeds: Option<&[usize]>) -> Result<RackTable> {
    let m = mt.order();
    let e = mt.identity();
    let seeds: Vec<usize> = match seeds {
        Some(s) => {
            if let Some(&bad) = s.iter().find(|&&x| x >= m) {
                return Err(Error::PointOutOfRange {
                    point: bad + 1,
                    degree: m,
                });
            }
            let mut seen = HashSet::new();
            s.iter().copied().filter(|&x| x != e && seen.insert(x)).collect()
        }
        None => (0..m).filter(|&x| x != e).collect(),
    };
    if mt.normal_closure(&seeds).len() != m {
        return Err(Error::ProperNormalClosure);
    }

    // coset_of[block][element] = coset index within the block
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_sizes = Vec::new();
    for &s in &seeds {
        let cent: Vec<usize> = (0..m).filter(|&g| mt.mul(g, s) == mt.mul(s, g)).collect();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut covered = vec![false; m];
        // elements scanned ascending, so cosets appear sorted by smallest element
        for g in 0..m {
            if covered[g] {
                continue;
            }
            let mut coset: Vec<usize> = cent.iter().map(|&c| mt.mul(c, g)).collect();
            coset.sort_unstable();
            for &x in &coset {
                covered[x] = true;
            }
            cosets.push(coset);
        }
        let mut coset_of = vec![0usize; m];
        for (k, coset) in cosets.iter().enumerate() {
            for &x in coset {
                coset_of[x] = k;
            }
        }
        block_sizes.push(cosets.len());
        blocks.push(coset_of);
    }
    let degree = m + block_sizes.iter().sum::<usize>();

    let rho = |h: usize| -> Permutation {
        let mut images = Vec::with_capacity(degree);
        images.extend((0..m).map(|x| mt.mul(x, h) as u32));
        let mut offset = m;
        for (coset_of, &size) in blocks.iter().zip(&block_sizes) {
            for k in 0..size {
                let g = coset_of.iter().position(|&c| c == k).unwrap();
                images.push((offset + coset_of[mt.mul(g, h)]) as u32);
            }
            offset += size;
        }
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    };
    let reps_rho: Vec<Permutation> = (0..m).map(rho).collect();
    let gens: Vec<Permutation> = (0..m).filter(|&h| h != e).map(|h| reps_rho[h].clone()).collect();
    let group = PermGroup::generate(degree, gens)?;
    debug_assert_eq!(group.order(), m);

    // π at the smallest point of each coset block: conjugate the seed by the
    // smallest element g0 of the first coset (C g0 is that point).
    let mut pis = vec![Permutation::identity(degree)];
    for (&s, coset_of) in seeds.iter().zip(&blocks) {
        let g0 = coset_of.iter().position(|&c| c == 0).unwrap();
        pis.push(reps_rho[mt.conjugate(s, g0)].clone());
    }
    let b = RackBlueprint::new(group, pis)?;
    let table = build_rack(&b);
    debug_assert!(rack::validate(&table).satisfies(crate::rack::Kind::Quandle));
    Ok(table)
}

/// The homomorphism check behind [`realize_operator_group`]: right
/// multiplication on the regular block respects the group law.
pub fn regular_action_respects_law(mt: &MultTable, t: &RackTable) -> Result<bool> {
    let m = mt.order();
    let g = rack::operator_group(t)?;
    if g.order() != m {
        return Ok(false);
    }
    // every element restricted to the regular block is right multiplication
    // by its image of the identity point
    let e = mt.identity();
    for p in g.elements() {
        let h = p.apply(e);
        if h >= m || (0..m).any(|x| p.apply(x) != mt.mul(x, h)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::golden_kei;
    use crate::Kind;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn g(gens: &str, n: usize) -> PermGroup {
        PermGroup::generate(n, Permutation::parse_list(gens, n).unwrap()).unwrap()
    }

    fn golden_blueprint() -> RackBlueprint {
        RackBlueprint::new(
            g("(1 2), (3 4), (5 6)", 7),
            vec![p("(3 4)(5 6)", 7), p("(1 2)", 7), p("(3 4)", 7), Permutation::identity(7)],
        )
        .unwrap()
    }

    #[test]
    fn check_examples() {
        let flags = check_blueprint(&golden_blueprint()).unwrap();
        assert!(flags.condition_b && flags.quandle_ok && flags.kei_ok);

        let s3 = g("(1 2), (1 2 3)", 3);
        let ids = RackBlueprint::new(s3.clone(), vec![Permutation::identity(3)]).unwrap();
        assert!(!check_blueprint(&ids).unwrap().condition_b);
        let triv = RackBlueprint::new(PermGroup::trivial(2), vec![Permutation::identity(2); 2]).unwrap();
        assert!(check_blueprint(&triv).unwrap().condition_b);

        let swap = RackBlueprint::new(g("(1 2)", 2), vec![p("(1 2)", 2)]).unwrap();
        assert_eq!(
            check_blueprint(&swap).unwrap(),
            BlueprintFlags {
                condition_b: true,
                quandle_ok: false,
                kei_ok: false
            }
        );
    }

    #[test]
    fn centralizer_condition_violation_has_witness() {
        // Sym(3) on one orbit, π = (1 2 3): stabilizer of 1 is {id, (2 3)}
        let err = RackBlueprint::new(g("(1 2), (1 2 3)", 3), vec![p("(1 2 3)", 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::CentralizerCondition {
                orbit: 1,
                witness: "(2 3)".into()
            }
        );
        assert!(matches!(
            RackBlueprint::new(g("(1 2)", 3), vec![p("(1 3)", 3), Permutation::identity(3)]),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_rack(&golden_blueprint()), golden_kei());
        let triv = RackBlueprint::new(PermGroup::trivial(4), vec![Permutation::identity(4); 4]).unwrap();
        assert_eq!(build_rack(&triv), RackTable::trivial(4));
        let swap = RackBlueprint::new(g("(1 2)", 2), vec![p("(1 2)", 2)]).unwrap();
        assert_eq!(build_rack(&swap), RackTable::permutation_rack(&p("(1 2)", 2)));
        assert!(augmentation_is_well_defined(&golden_blueprint()));
    }

    #[test]
    fn decompose_examples() {
        let b = decompose(&golden_kei()).unwrap();
        assert_eq!(b.group().order(), 8);
        assert_eq!(b.reps(), &[0, 2, 4, 6]);
        assert_eq!(
            b.pis(),
            &[p("(3 4)(5 6)", 7), p("(1 2)", 7), p("(3 4)", 7), Permutation::identity(7)]
        );
        assert_eq!(build_rack(&b), golden_kei());

        let t = decompose(&RackTable::trivial(3)).unwrap();
        assert!(t.group().is_trivial());
        assert_eq!(t.reps(), &[0, 1, 2]);
        assert!(t.pis().iter().all(Permutation::is_identity));

        let bad = RackTable::from_translations(&[Permutation::identity(2), p("(1 2)", 2)]).unwrap();
        assert!(matches!(decompose(&bad), Err(Error::NotRack(_))));
    }

    #[test]
    fn blueprint_text_round_trip() {
        let b = golden_blueprint();
        let text = b.to_text();
        assert_eq!(
            text,
            "degree 7\ngenerators (1 2), (3 4), (5 6)\nrep 1 pi (3 4)(5 6)\nrep 3 pi (1 2)\nrep 5 pi (3 4)\nrep 7 pi ()\n"
        );
        assert_eq!(RackBlueprint::parse(&text).unwrap(), b);
        assert!(matches!(
            RackBlueprint::parse("degree 3\ngenerators (1 2)\nrep 2 pi ()\nrep 3 pi ()\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            RackBlueprint::parse("degree 2\ngenerators\nrep 1 pi ()\n"),
            Err(Error::Blueprint(_))
        ));
        assert!(matches!(
            RackBlueprint::parse("degree 3\ngenerators (1 2), (1 2 3)\nrep 1 pi (1 2 3)\n"),
            Err(Error::CentralizerCondition { .. })
        ));
    }

    fn cyclic(m: usize) -> MultTable {
        let data = (0..m).flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32)).collect();
        MultTable::new(m, data).unwrap()
    }

    #[test]
    fn realize_cyclic_two() {
        let t = realize_operator_group(&cyclic(2), None).unwrap();
        assert_eq!(t.order(), 3);
        let fs = rack::translations(&t).unwrap();
        assert!(fs[0].is_identity() && fs[1].is_identity());
        assert_eq!(fs[2], p("(1 2)", 3));
        assert_eq!(validate_kind(&t), RackClass::Kei);
        assert!(regular_action_respects_law(&cyclic(2), &t).unwrap());
    }

    fn validate_kind(t: &RackTable) -> RackClass {
        rack::validate(t)
    }

    #[test]
    fn realize_trivial_and_sym3() {
        let t = realize_operator_group(&cyclic(1), None).unwrap();
        assert_eq!(t, RackTable::trivial(1));

        let s3 = MultTable::from_perm_group(&g("(1 2), (1 2 3)", 3)).unwrap();
        let inv = s3.involutions();
        assert_eq!(inv.len(), 3);
        let t = realize_operator_group(&s3, Some(&inv)).unwrap();
        // regular block of 6, plus 3 cosets per transposition centralizer
        assert_eq!(t.order(), 6 + 3 * 3);
        assert!(validate_kind(&t).satisfies(Kind::Kei));
        assert_eq!(rack::operator_group(&t).unwrap().order(), 6);
        assert!(regular_action_respects_law(&s3, &t).unwrap());

        let t = realize_operator_group(&s3, None).unwrap();
        assert!(validate_kind(&t).satisfies(Kind::Quandle));
        assert_eq!(rack::operator_group(&t).unwrap().order(), 6);
    }

    #[test]
    fn realize_rejects_bad_input() {
        let s3 = MultTable::from_perm_group(&g("(1 2), (1 2 3)", 3)).unwrap();
        // a 3-cycle generates the proper normal subgroup A3
        let rot = (0..6).find(|&x| x != s3.identity() && s3.mul(s3.mul(x, x), x) == s3.identity()).unwrap();
        assert_eq!(realize_operator_group(&s3, Some(&[rot])), Err(Error::ProperNormalClosure));
        assert!(matches!(
            MultTable::new(2, vec![0, 0, 0, 1]),
            Err(Error::NotAGroup(_))
        ));
        assert!(MultTable::parse("2\n1 2\n2 1\n").is_ok());
        assert!(matches!(MultTable::parse("2\n1 2\n2 3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(!cyclic(3).generated_by_involutions());
        assert!(s3.generated_by_involutions());
    }

    #[test]
    fn normal_closure_obstruction() {
        let klein = g("(1 2)(3 4), (1 3)(2 4)", 4);
        assert_eq!(full_normal_closure_element(&klein), None);
        assert!(excluded_as_operator_group(&klein));
        let s3 = g("(1 2), (1 2 3)", 3);
        let pi = full_normal_closure_element(&s3).unwrap();
        assert_eq!(s3.normal_closure(&[pi]).unwrap(), s3);
        let c3 = g("(1 2 3)", 3);
        assert_eq!(full_normal_closure_element(&c3), Some(p("(1 2 3)", 3)));
    }
}
