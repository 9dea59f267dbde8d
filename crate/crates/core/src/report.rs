//! Observed growth of class counts next to the exponent constants.
//!
//! Counts satisfy `2^{c₁n²} ≤ f_kei ≤ f_quandle ≤ f_rack ≤ 2^{c n²}` for
//! large `n`, with `c₁ = 1/4` (minus any ε) and
//! `c = (1/6)·log₂24 + (1/2)·log₂3`. At the orders reachable here the
//! ratios `log₂ f(n) / n²` are observations only, not checks of those limits.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::enumerate::EnumerationResult;
use crate::rack::Kind;

pub const LOWER_EXPONENT: f64 = 0.25;

/// `(1/6)·log₂ 24 + (1/2)·log₂ 3`.
pub fn upper_exponent() -> f64 {
    24f64.log2() / 6.0 + 3f64.log2() / 2.0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: usize,
    pub kind: Kind,
    pub count: usize,
    /// `log₂(count) / n²`.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub c1: f64,
    pub c: f64,
    pub rows: Vec<BoundsRow>,
}

pub fn bounds_report(results: &[EnumerationResult]) -> BoundsReport {
    let mut rows: Vec<BoundsRow> = results
        .iter()
        .map(|r| BoundsRow {
            n: r.n,
            kind: r.kind,
            count: r.count,
            ratio: (r.count as f64).log2() / (r.n * r.n) as f64,
        })
        .collect();
    rows.sort_by_key(|a| (a.n, a.kind));
    rows.dedup_by(|a, b| (a.n, a.kind) == (b.n, b.kind));
    BoundsReport {
        c1: LOWER_EXPONENT,
        c: upper_exponent(),
        rows,
    }
}

/// `f_kei(n) ≤ f_quandle(n) ≤ f_rack(n)` wherever the computed kinds allow
/// a comparison.
pub fn counts_monotone(results: &[EnumerationResult]) -> bool {
    let mut by_n: BTreeMap<usize, BTreeMap<Kind, usize>> = BTreeMap::new();
    for r in results {
        by_n.entry(r.n).or_default().insert(r.kind, r.count);
    }
    by_n.values().all(|m| {
        let get = |k| m.get(&k).copied();
        let ok = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        ok(get(Kind::Kei), get(Kind::Quandle))
            && ok(get(Kind::Quandle), get(Kind::Rack))
            && ok(get(Kind::Kei), get(Kind::Rack))
    })
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "c1 = {:.2} (lower exponent)", self.c1)?;
        writeln!(f, "c = (1/6)log2(24) + (1/2)log2(3) = {:.6} (upper exponent)", self.c)?;
        if !self.rows.is_empty() {
            writeln!(f, "observed log2(f(n))/n^2 (small n, not asymptotic):")?;
        }
        for r in &self.rows {
            writeln!(
                f,
                "  n = {:>2}  {:<7}  f = {:>6}  log2(f)/n^2 = {:.4}",
                r.n,
                r.kind.name(),
                r.count,
                r.ratio
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Engine;

    fn result(n: usize, kind: Kind, count: usize) -> EnumerationResult {
        EnumerationResult {
            n,
            kind,
            engine: Engine::Brute,
            count,
            representatives: None,
            breakdown: vec![],
        }
    }

    #[test]
    fn constant_matches_closed_form() {
        let c = upper_exponent();
        assert!((c - 1.5566).abs() < 5e-5);
        assert_eq!(format!("{c:.6}"), "1.556642");
    }

    #[test]
    fn ratio_for_order_two_racks() {
        let r = bounds_report(&[result(2, Kind::Rack, 2)]);
        assert_eq!(r.rows[0].ratio, 0.25);
        assert!(r.to_string().contains("c1 = 0.25"));
    }

    #[test]
    fn empty_report_has_constants_only() {
        let r = bounds_report(&[]);
        assert!(r.rows.is_empty());
        assert_eq!(r.c1, 0.25);
        assert_eq!(r.to_string().lines().count(), 2);
    }

    #[test]
    fn monotonicity() {
        let ok = [result(3, Kind::Rack, 6), result(3, Kind::Quandle, 3), result(3, Kind::Kei, 3)];
        assert!(counts_monotone(&ok));
        let bad = [result(3, Kind::Rack, 2), result(3, Kind::Kei, 3)];
        assert!(!counts_monotone(&bad));
    }
}
