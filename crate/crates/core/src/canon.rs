//! Canonical forms and isomorphism testing.
//!
//! The canonical form of a table is the lexicographically smallest
//! row-major table among relabelings that list points in non-decreasing
//! order of an isomorphism-invariant point key. Since the key ordering is
//! itself invariant, two tables share a canonical form iff they are
//! isomorphic. The search assigns labels row by row; a point first met as
//! an entry value is forced onto the smallest free label of its key block,
//! and only the choice of a new row/column point branches.
//!
//! [`is_isomorphic`] is a separate direct backtracking search so that the
//! two routes can be checked against each other.

use crate::error::Result;
use crate::perm::Permutation;
use crate::rack::{self, fingerprint, Fingerprint, PointInvariant};
use crate::table::RackTable;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PointKey {
    inv: PointInvariant,
    row_fixed: usize,
    row_image: usize,
}

fn point_keys(t: &RackTable) -> Vec<PointKey> {
    let n = t.order();
    rack::point_invariants(t)
        .into_iter()
        .enumerate()
        .map(|(y, inv)| {
            let mut hit = vec![false; n];
            let mut row_fixed = 0;
            for x in 0..n {
                let v = t.op(y, x);
                hit[v] = true;
                if v == y {
                    row_fixed += 1;
                }
            }
            PointKey {
                inv,
                row_fixed,
                row_image: hit.iter().filter(|&&b| b).count(),
            }
        })
        .collect()
}

struct CanonSearch<'a> {
    t: &'a RackTable,
    n: usize,
    /// Block (key rank) of each point.
    rank: Vec<usize>,
    /// Block of each label.
    label_block: Vec<usize>,
    next_free: Vec<usize>,
    label_of: Vec<Option<usize>>,
    point_of: Vec<Option<usize>>,
    trail: Vec<usize>,
    cur: Vec<u32>,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl<'a> CanonSearch<'a> {
    fn new(t: &'a RackTable) -> Self {
        let n = t.order();
        let keys = point_keys(t);
        let mut sorted: Vec<&PointKey> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let rank: Vec<usize> = keys
            .iter()
            .map(|k| sorted.binary_search(&k).unwrap())
            .collect();
        let mut block_size = vec![0usize; sorted.len()];
        for &r in &rank {
            block_size[r] += 1;
        }
        let mut next_free = Vec::with_capacity(sorted.len());
        let mut label_block = Vec::with_capacity(n);
        let mut start = 0;
        for (r, &size) in block_size.iter().enumerate() {
            next_free.push(start);
            label_block.extend(std::iter::repeat_n(r, size));
            start += size;
        }
        CanonSearch {
            t,
            n,
            rank,
            label_block,
            next_free,
            label_of: vec![None; n],
            point_of: vec![None; n],
            trail: Vec::new(),
            cur: vec![0; n * n],
            best: None,
        }
    }

    fn assign(&mut self, point: usize) -> usize {
        let r = self.rank[point];
        let label = self.next_free[r];
        self.next_free[r] += 1;
        self.label_of[point] = Some(label);
        self.point_of[label] = Some(point);
        self.trail.push(point);
        label
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let point = self.trail.pop().unwrap();
            let label = self.label_of[point].take().unwrap();
            self.point_of[label] = None;
            self.next_free[self.rank[point]] -= 1;
        }
    }

    /// Fills positions from `pos`; `tied` means the prefix equals `best`.
    /// Returns true if `best` was replaced.
    fn search(&mut self, pos: usize, mut tied: bool) -> bool {
        let n = self.n;
        let mark = self.trail.len();
        let mut pos = pos;
        while pos < n * n {
            let (i, j) = (pos / n, pos % n);
            let need = if self.point_of[i].is_none() {
                Some(i)
            } else if self.point_of[j].is_none() {
                Some(j)
            } else {
                None
            };
            if let Some(label) = need {
                let block = self.label_block[label];
                debug_assert_eq!(self.next_free[block], label);
                let candidates: Vec<usize> = (0..n)
                    .filter(|&p| self.label_of[p].is_none() && self.rank[p] == block)
                    .collect();
                let mut replaced = false;
                for p in candidates {
                    let inner = self.trail.len();
                    self.assign(p);
                    if self.search(pos, tied) {
                        replaced = true;
                        tied = true;
                    }
                    self.undo_to(inner);
                }
                self.undo_to(mark);
                return replaced;
            }
            let (a, b) = (self.point_of[i].unwrap(), self.point_of[j].unwrap());
            let v = self.t.op(a, b);
            let label = match self.label_of[v] {
                Some(l) => l,
                None => self.assign(v),
            } as u32;
            self.cur[pos] = label;
            if tied {
                let best = self.best.as_ref().unwrap().0[pos];
                if label > best {
                    self.undo_to(mark);
                    return false;
                }
                if label < best {
                    tied = false;
                }
            }
            pos += 1;
        }
        let replaced = !tied || self.best.is_none();
        if replaced {
            let labels = (0..n).map(|p| self.label_of[p].unwrap()).collect();
            self.best = Some((self.cur.clone(), labels));
        }
        self.undo_to(mark);
        replaced
    }
}

/// Canonical table together with the relabeling `σ` (point → label) that
/// produces it: `canonical = t.relabel(σ)`.
pub fn canonical_labeling(t: &RackTable) -> (RackTable, Permutation) {
    if t.order() == 0 {
        return (t.clone(), Permutation::identity(0));
    }
    let mut s = CanonSearch::new(t);
    let tied = false;
    s.search(0, tied);
    let (data, labels) = s.best.expect("search visits at least one leaf");
    let sigma = Permutation::from_images(labels.into_iter().map(|l| l as u32).collect())
        .expect("labels form a bijection");
    let table = RackTable::from_data(t.order(), data).expect("labels in range");
    debug_assert_eq!(t.relabel(&sigma).unwrap(), table);
    (table, sigma)
}

pub fn canonical_form(t: &RackTable) -> RackTable {
    canonical_labeling(t).0
}

/// A bijection `θ` with `θ(x) ▷' θ(y) = θ(x ▷ y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism(pub Permutation);

impl Isomorphism {
    pub fn verify(&self, a: &RackTable, b: &RackTable) -> bool {
        let th = &self.0;
        a.order() == b.order()
            && th.degree() == a.order()
            && (0..a.order()).all(|x| {
                (0..a.order()).all(|y| b.op(th.apply(x), th.apply(y)) == th.apply(a.op(x, y)))
            })
    }
}

struct IsoSearch<'a> {
    a: &'a RackTable,
    b: &'a RackTable,
    ka: Vec<PointKey>,
    kb: Vec<PointKey>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn consistent(&self, x: usize) -> bool {
        let tx = self.map[x].unwrap();
        for u in 0..=x {
            let tu = self.map[u].unwrap();
            for (p, q, tp, tq) in [(x, u, tx, tu), (u, x, tu, tx)] {
                let target = self.b.op(tp, tq);
                match self.map[self.a.op(p, q)] {
                    Some(m) if m != target => return false,
                    None if self.used[target] => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn search(&mut self, x: usize) -> bool {
        let n = self.a.order();
        if x == n {
            return true;
        }
        for y in 0..n {
            if self.used[y] || self.ka[x] != self.kb[y] {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.consistent(x) && self.search(x + 1) {
                return true;
            }
            self.map[x] = None;
            self.used[y] = false;
        }
        false
    }
}

/// Searches for an isomorphism `a → b`. Both tables must be racks.
pub fn is_isomorphic(a: &RackTable, b: &RackTable) -> Result<Option<Isomorphism>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if fingerprint(a)? != fingerprint(b)? {
        return Ok(None);
    }
    let mut s = IsoSearch {
        a,
        b,
        ka: point_keys(a),
        kb: point_keys(b),
        map: vec![None; a.order()],
        used: vec![false; a.order()],
    };
    if !s.search(0) {
        return Ok(None);
    }
    let images = s.map.into_iter().map(|m| m.unwrap() as u32).collect();
    let iso = Isomorphism(Permutation::from_images(images).expect("injective map"));
    debug_assert!(iso.verify(a, b));
    Ok(Some(iso))
}

/// Fingerprint fields that separate two racks, empty if none do.
pub fn distinguishing_fields(a: &RackTable, b: &RackTable) -> Result<Vec<&'static str>> {
    let (fa, fb): (Fingerprint, Fingerprint) = (fingerprint(a)?, fingerprint(b)?);
    Ok(fa.differing_fields(&fb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::golden_kei;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
        let mut v: Vec<u32> = (0..n as u32).collect();
        v.shuffle(rng);
        Permutation::from_images(v).unwrap()
    }

    /// Lex-min over relabelings whose labels respect the key ordering, by
    /// exhausting all n! permutations.
    fn brute_canonical(t: &RackTable) -> RackTable {
        let n = t.order();
        let keys = point_keys(t);
        let mut best: Option<RackTable> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |labels: &[usize]| {
            // label order must follow key order
            let mut by_label = vec![0; n];
            for (pt, &l) in labels.iter().enumerate() {
                by_label[l] = pt;
            }
            if by_label.windows(2).any(|w| keys[w[0]] > keys[w[1]]) {
                return;
            }
            let s = Permutation::from_images(labels.iter().map(|&l| l as u32).collect()).unwrap();
            let r = t.relabel(&s).unwrap();
            if best.as_ref().is_none_or(|b| r.data() < b.data()) {
                best = Some(r);
            }
        });
        best.unwrap()
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn trivial_is_already_canonical() {
        for n in 1..7 {
            assert_eq!(canonical_form(&RackTable::trivial(n)), RackTable::trivial(n));
        }
    }

    #[test]
    fn order_two_racks_have_distinct_forms() {
        let a = canonical_form(&RackTable::trivial(2));
        let b = canonical_form(&RackTable::permutation_rack(&p("(1 2)", 2)));
        assert_ne!(a, b);
    }

    #[test]
    fn matches_exhaustive_search() {
        let tables = [
            golden_kei(),
            RackTable::permutation_rack(&p("(1 2 3)(4 5)", 6)),
            RackTable::from_rows(&[vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in &tables {
            let s = random_perm(t.order(), &mut rng);
            let r = t.relabel(&s).unwrap();
            assert_eq!(canonical_form(&r), brute_canonical(&r));
            assert_eq!(canonical_form(t), canonical_form(&r));
        }
    }

    #[test]
    fn invariance_and_idempotence_on_golden_kei() {
        let t = golden_kei();
        let c = canonical_form(&t);
        assert_eq!(canonical_form(&c), c);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let s = random_perm(7, &mut rng);
            assert_eq!(canonical_form(&t.relabel(&s).unwrap()), c);
        }
    }

    #[test]
    fn iso_examples() {
        let t = golden_kei();
        let s = p("(1 7)(2 6)", 7);
        let r = t.relabel(&s).unwrap();
        let w = is_isomorphic(&t, &r).unwrap().expect("isomorphic");
        assert!(w.verify(&t, &r));
        let a = RackTable::trivial(2);
        let b = RackTable::permutation_rack(&p("(1 2)", 2));
        assert_eq!(is_isomorphic(&a, &b).unwrap(), None);
        assert_eq!(distinguishing_fields(&a, &b).unwrap(), vec!["point_invariants", "operator_group_order", "orbit_sizes"]);
        assert_eq!(is_isomorphic(&a, &RackTable::trivial(3)).unwrap(), None);
    }

    #[test]
    fn iso_between_permutation_racks() {
        let a = RackTable::permutation_rack(&p("(1 2)(3 4)", 4));
        let b = RackTable::permutation_rack(&p("(1 3)(2 4)", 4));
        assert!(is_isomorphic(&a, &b).unwrap().is_some());
    }
}
