//! Rack axioms, translations and the operator group.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::table::RackTable;

/// Why a table fails the rack axioms. Points are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Column `y` (the map `x ↦ x ▷ y`) is not a bijection.
    NonBijectiveColumn(usize),
    /// `(x▷y)▷z ≠ (x▷z)▷(y▷z)`.
    Triple(usize, usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::NonBijectiveColumn(y) => write!(f, "column {} not a bijection", y + 1),
            Witness::Triple(x, y, z) => write!(
                f,
                "self-distributivity fails at (x, y, z) = ({}, {}, {})",
                x + 1,
                y + 1,
                z + 1
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RackClass {
    NotRack(Witness),
    Rack,
    Quandle,
    Kei,
}

impl RackClass {
    pub fn is_rack(self) -> bool {
        !matches!(self, RackClass::NotRack(_))
    }

    pub fn satisfies(self, kind: Kind) -> bool {
        match kind {
            Kind::Rack => self.is_rack(),
            Kind::Quandle => matches!(self, RackClass::Quandle | RackClass::Kei),
            Kind::Kei => self == RackClass::Kei,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RackClass::NotRack(_) => "not_rack",
            RackClass::Rack => "rack",
            RackClass::Quandle => "quandle",
            RackClass::Kei => "kei",
        }
    }
}

/// The three structure kinds, weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Rack,
    Quandle,
    Kei,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Rack, Kind::Quandle, Kind::Kei];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Rack => "rack",
            Kind::Quandle => "quandle",
            Kind::Kei => "kei",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rack" => Ok(Kind::Rack),
            "quandle" => Ok(Kind::Quandle),
            "kei" => Ok(Kind::Kei),
            _ => Err(format!("unknown kind {s:?}")),
        }
    }
}

/// Classifies a table as the strongest applicable structure, or returns
/// the first failing column / lexicographically first failing triple.
pub fn validate(t: &RackTable) -> RackClass {
    let n = t.order();
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let v = t.op(x, y);
            if seen[v] {
                return RackClass::NotRack(Witness::NonBijectiveColumn(y));
            }
            seen[v] = true;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                if t.op(xy, z) != t.op(t.op(x, z), t.op(y, z)) {
                    return RackClass::NotRack(Witness::Triple(x, y, z));
                }
            }
        }
    }
    if !(0..n).all(|x| t.op(x, x) == x) {
        return RackClass::Rack;
    }
    // order dividing 2, identity allowed
    let involutive = (0..n).all(|y| (0..n).all(|x| t.op(t.op(x, y), y) == x));
    if involutive {
        RackClass::Kei
    } else {
        RackClass::Quandle
    }
}

/// The right translation `f_y : x ↦ x ▷ y`.
pub fn translation(t: &RackTable, y: usize) -> Result<Permutation> {
    if y >= t.order() {
        return Err(Error::PointOutOfRange {
            point: y + 1,
            degree: t.order(),
        });
    }
    Permutation::from_images(t.column(y))
        .map_err(|_| Error::NotRack(Witness::NonBijectiveColumn(y).to_string()))
}

/// All translations `f_0, …, f_{n-1}`.
pub fn translations(t: &RackTable) -> Result<Vec<Permutation>> {
    (0..t.order()).map(|y| translation(t, y)).collect()
}

/// Distinct non-identity translations in point order.
pub fn translation_generators(t: &RackTable) -> Result<Vec<Permutation>> {
    let mut gens: Vec<Permutation> = Vec::new();
    for f in translations(t)? {
        if !f.is_identity() && !gens.contains(&f) {
            gens.push(f);
        }
    }
    Ok(gens)
}

/// `⟨f_y : y ∈ X⟩`.
pub fn operator_group(t: &RackTable) -> Result<PermGroup> {
    PermGroup::generate(t.order(), translation_generators(t)?)
}

/// Orbit id of each point under the operator group, computed from the
/// translations alone (no closure).
pub fn operator_orbits(t: &RackTable) -> Vec<usize> {
    let n = t.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for y in 0..n {
        for x in 0..n {
            let a = find(&mut parent, x);
            let b = find(&mut parent, t.op(x, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// Isomorphism-invariant data attached to a single point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointInvariant {
    pub cycle_type: Vec<usize>,
    pub idempotent: bool,
    pub orbit_size: usize,
}

pub fn point_invariants(t: &RackTable) -> Vec<PointInvariant> {
    let n = t.order();
    let orbits = operator_orbits(t);
    let mut orbit_size = vec![0usize; n];
    for &o in &orbits {
        orbit_size[o] += 1;
    }
    (0..n)
        .map(|y| PointInvariant {
            cycle_type: Permutation::from_images_unchecked(t.column(y)).cycle_type(),
            idempotent: t.op(y, y) == y,
            orbit_size: orbit_size[orbits[y]],
        })
        .collect()
}

/// Necessary-condition summary for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub points: Vec<PointInvariant>,
    pub group_order: usize,
    pub orbit_sizes: Vec<usize>,
}

impl Fingerprint {
    /// Names of the fields on which two fingerprints differ.
    pub fn differing_fields(&self, other: &Fingerprint) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.order != other.order {
            out.push("order");
        }
        if self.points != other.points {
            out.push("point_invariants");
        }
        if self.group_order != other.group_order {
            out.push("operator_group_order");
        }
        if self.orbit_sizes != other.orbit_sizes {
            out.push("orbit_sizes");
        }
        out
    }
}

/// Requires a valid rack (translations must be bijections).
pub fn fingerprint(t: &RackTable) -> Result<Fingerprint> {
    let group = operator_group(t)?;
    let mut points = point_invariants(t);
    points.sort();
    Ok(Fingerprint {
        order: t.order(),
        points,
        group_order: group.order(),
        orbit_sizes: group.orbit_data().orbit_sizes(),
    })
}

/// Checks `f_{y·g} = g⁻¹ f_y g` for every point `y` and every `g` in the
/// operator group. Returns the first failing `(y, g)`.
pub fn augmentation_identity_failure(t: &RackTable) -> Result<Option<(usize, Permutation)>> {
    let fs = translations(t)?;
    let group = operator_group(t)?;
    for g in group.elements() {
        for (y, fy) in fs.iter().enumerate() {
            if fs[g.apply(y)] != fy.conjugated_by(g) {
                return Ok(Some((y, g.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::golden_kei;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(&golden_kei()), RackClass::Kei);
        for n in 1..6 {
            assert_eq!(validate(&RackTable::trivial(n)), RackClass::Kei);
        }
        let bad = RackTable::from_translations(&[Permutation::identity(2), p("(1 2)", 2)]).unwrap();
        assert_eq!(validate(&bad), RackClass::NotRack(Witness::Triple(0, 0, 1)));
        let dup = RackTable::from_rows(&[vec![1, 1], vec![2, 1]]).unwrap();
        assert_eq!(validate(&dup), RackClass::NotRack(Witness::NonBijectiveColumn(1)));
        assert_eq!(Witness::NonBijectiveColumn(1).to_string(), "column 2 not a bijection");
    }

    #[test]
    fn classification_chain() {
        // permutation rack with a 3-cycle: rack, not a quandle
        let r = RackTable::permutation_rack(&p("(1 2 3)", 3));
        assert_eq!(validate(&r), RackClass::Rack);
        // dihedral quandle of order 3 is a kei
        let d3 = RackTable::from_rows(&[vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]).unwrap();
        assert_eq!(validate(&d3), RackClass::Kei);
        // x ▷ y = 2x - y mod 5: translations have order 4
        let rows: Vec<Vec<usize>> = (0..5)
            .map(|x| (0..5).map(|y| ((2 * x + 4 * y) % 5) + 1).collect())
            .collect();
        let a5 = RackTable::from_rows(&rows).unwrap();
        assert_eq!(validate(&a5), RackClass::Quandle);
        assert!(RackClass::Kei.satisfies(Kind::Rack));
        assert!(!RackClass::Quandle.satisfies(Kind::Kei));
    }

    #[test]
    fn translation_examples() {
        let t = golden_kei();
        assert_eq!(translation(&t, 2).unwrap(), p("(1 2)", 7));
        assert!(translation(&t, 6).unwrap().is_identity());
        assert!(translation(&RackTable::trivial(3), 1).unwrap().is_identity());
        let dup = RackTable::from_rows(&[vec![1, 1], vec![2, 1]]).unwrap();
        assert!(matches!(translation(&dup, 1), Err(Error::NotRack(_))));
    }

    #[test]
    fn operator_group_examples() {
        let g = operator_group(&golden_kei()).unwrap();
        assert_eq!(
            g.generators(),
            &[p("(3 4)(5 6)", 7), p("(1 2)", 7), p("(3 4)", 7)]
        );
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert!(operator_group(&RackTable::trivial(4)).unwrap().is_trivial());
        let swap = RackTable::permutation_rack(&p("(1 2)", 2));
        assert_eq!(operator_group(&swap).unwrap().order(), 2);
    }

    #[test]
    fn fingerprint_examples() {
        let f = fingerprint(&golden_kei()).unwrap();
        assert_eq!(f.group_order, 8);
        assert_eq!(f.orbit_sizes, vec![1, 2, 2, 2]);
        let a = fingerprint(&RackTable::trivial(2)).unwrap();
        let b = fingerprint(&RackTable::permutation_rack(&p("(1 2)", 2))).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.points[0].cycle_type, vec![1, 1]);
        assert_eq!(b.points[0].cycle_type, vec![2]);
        let sigma = p("(1 7)(2 6)", 7);
        assert_eq!(fingerprint(&golden_kei().relabel(&sigma).unwrap()).unwrap(), f);
    }

    #[test]
    fn augmentation_identity_on_golden_kei() {
        assert_eq!(augmentation_identity_failure(&golden_kei()).unwrap(), None);
    }
}
