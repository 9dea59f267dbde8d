//! Permutations of `{1..n}` acting on the right.
//!
//! Internally points are `0..n`; every textual form (cycle notation, tables)
//! is 1-based. `a.then(&b)` is the product `ab`: apply `a`, then `b`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree || seen[x] {
                return Err(Error::NotBijection { degree });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let zero: Vec<u32> = images
            .iter()
            .map(|&x| {
                if x == 0 || x > degree {
                    Err(Error::NotBijection { degree })
                } else {
                    Ok((x - 1) as u32)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_images(zero)
    }

    /// Builds a permutation from disjoint cycles given on 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if touched[p - 1] {
                    return Err(Error::NotBijection { degree });
                }
                touched[p - 1] = true;
                let q = cycle[(i + 1) % cycle.len()];
                if q == 0 || q > degree {
                    return Err(Error::PointOutOfRange { point: q, degree });
                }
                images[p - 1] = (q - 1) as u32;
            }
        }
        Self::from_images(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`, i.e. `x ↦ other(self(x))`. Panics on degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ self g`.
    pub fn conjugated_by(&self, g: &Permutation) -> Permutation {
        // x ↦ g(self(g⁻¹(x))): images[g(i)] = g(self(i))
        assert_eq!(self.degree(), g.degree(), "degree mismatch");
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            images[g.apply(i)] = g.images[self.apply(i)];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles on 0-based points, each starting at its smallest point,
    /// fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lens = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc / gcd(acc, l as u64) * l as u64)
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` or an empty string is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::parse(0, format!("expected '(' in {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::parse(0, format!("unclosed cycle in {s:?}")))?;
            let body = &rest[1..close];
            let cycle = body
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::parse(0, format!("bad point {tok:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    /// Parses a comma-separated list of cycle strings.
    pub fn parse_list(s: &str, degree: usize) -> Result<Vec<Self>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| Self::parse_cycles(t, degree))
            .collect()
    }
}

/// Checked product `pq` (apply `p`, then `q`).
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    check_degrees(p, q)?;
    Ok(p.then(q))
}

/// Checked conjugate `g⁻¹ p g`.
pub fn conjugate(p: &Permutation, g: &Permutation) -> Result<Permutation> {
    check_degrees(p, g)?;
    Ok(p.conjugated_by(g))
}

fn check_degrees(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats a generator list as comma-separated cycle strings.
pub fn format_list(perms: &[Permutation]) -> String {
    perms
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
