//! The `n × n` operation table and its text format.
//!
//! Text format: optional `#` comment lines, the order `n`, then `n` rows of
//! `n` whitespace-separated entries in `1..n`; row `x`, column `y` holds
//! `x ▷ y`. Several tables may be concatenated in one file.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Operation table with 0-based entries, row-major: `entry(x, y) = x ▷ y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RackTable {
    n: usize,
    data: Vec<u32>,
}

impl RackTable {
    /// From 0-based row-major data. Entries must lie in `0..n`.
    pub fn from_data(n: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Malformed(format!(
                "expected {} entries, found {}",
                n * n,
                data.len()
            )));
        }
        if let Some(i) = data.iter().position(|&v| v as usize >= n) {
            return Err(Error::Malformed(format!(
                "entry {} at row {} column {} out of range 1..{n}",
                data[i] + 1,
                i / n + 1,
                i % n + 1
            )));
        }
        Ok(RackTable { n, data })
    }

    /// From 1-based rows, as printed.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::Malformed(format!(
                        "entry {v} at row {} column {} out of range 1..{n}",
                        r + 1,
                        c + 1
                    )));
                }
                data.push((v - 1) as u32);
            }
        }
        Ok(RackTable { n, data })
    }

    /// Builds the table `x ▷ y = x·f_y` from one translation per column.
    pub fn from_translations(cols: &[Permutation]) -> Result<Self> {
        let n = cols.len();
        if let Some(c) = cols.iter().find(|c| c.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: c.degree(),
            });
        }
        let mut data = vec![0u32; n * n];
        for (y, f) in cols.iter().enumerate() {
            for x in 0..n {
                data[x * n + y] = f.apply(x) as u32;
            }
        }
        Ok(RackTable { n, data })
    }

    /// `x ▷ y = x` on `n` points.
    pub fn trivial(n: usize) -> Self {
        let data = (0..n).flat_map(|x| std::iter::repeat_n(x as u32, n)).collect();
        RackTable { n, data }
    }

    /// `x ▷ y = x·pi` for a fixed permutation `pi`.
    pub fn permutation_rack(pi: &Permutation) -> Self {
        Self::from_translations(&vec![pi.clone(); pi.degree()]).expect("matching degrees")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ▷ y` for 0-based points.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y] as usize
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    /// Column `y` as raw 0-based images (not necessarily a bijection).
    pub fn column(&self, y: usize) -> Vec<u32> {
        (0..self.n).map(|x| self.data[x * self.n + y]).collect()
    }

    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// The table transported along `sigma`: `(x·σ) ▷' (y·σ) = (x ▷ y)·σ`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<RackTable> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: sigma.degree(),
            });
        }
        let n = self.n;
        let mut data = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                data[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.op(x, y)) as u32;
            }
        }
        Ok(RackTable { n, data })
    }

    /// Parses exactly one table; trailing content is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = Tokens::new(text);
        let t = parse_one(&mut toks)?.ok_or_else(|| Error::parse(1, "empty input"))?;
        if let Some((line, tok)) = toks.next() {
            return Err(Error::parse(line, format!("unexpected trailing token {tok:?}")));
        }
        Ok(t)
    }

    /// Parses a concatenation of tables.
    pub fn parse_many(text: &str) -> Result<Vec<Self>> {
        let mut toks = Tokens::new(text);
        let mut out = Vec::new();
        while let Some(t) = parse_one(&mut toks)? {
            out.push(t);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

pub(crate) struct Tokens<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last_line: usize,
}

impl<'a> Tokens<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#'))
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));
        Tokens {
            inner: Box::new(inner),
            last_line: 1,
        }
    }

    pub(crate) fn next(&mut self) -> Option<(usize, &'a str)> {
        let t = self.inner.next();
        if let Some((line, _)) = t {
            self.last_line = line;
        }
        t
    }

    pub(crate) fn next_usize(&mut self, what: &str) -> Result<(usize, usize)> {
        match self.next() {
            Some((line, tok)) => tok
                .parse::<usize>()
                .map(|v| (line, v))
                .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}"))),
            None => Err(Error::parse(
                self.last_line,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }
}

/// Reads an order followed by an `n × n` block of entries in `1..n`.
pub(crate) fn parse_square(toks: &mut Tokens<'_>, what: &str) -> Result<Option<(usize, Vec<u32>)>> {
    let (line, n) = match toks.next() {
        None => return Ok(None),
        Some((line, tok)) => (
            line,
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("expected {what} order, found {tok:?}")))?,
        ),
    };
    if n == 0 {
        return Err(Error::parse(line, format!("{what} order must be positive")));
    }
    let mut data = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        let (line, v) = toks.next_usize("entry")?;
        if v == 0 || v > n {
            return Err(Error::parse(line, format!("entry {v} out of range 1..{n}")));
        }
        data.push((v - 1) as u32);
    }
    Ok(Some((n, data)))
}

fn parse_one(toks: &mut Tokens<'_>) -> Result<Option<RackTable>> {
    Ok(parse_square(toks, "table")?.map(|(n, data)| RackTable { n, data }))
}

impl fmt::Display for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows_one_based() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RackTable{:?}", self.rows_one_based())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "# two points\n2\n1 1\n2  2\n";
        let t = RackTable::parse(text).unwrap();
        assert_eq!(t, RackTable::trivial(2));
        assert_eq!(t.to_text(), "2\n1 1\n2 2\n");
        assert_eq!(RackTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = RackTable::parse("2\n1 1\n2 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "entry 3 out of range 1..2".into()
            }
        );
        assert!(matches!(
            RackTable::parse("2\n1 1\n2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(RackTable::parse("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(RackTable::parse("1\n1\n1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_many_tables() {
        let text = "1\n1\n# next\n2\n2 2\n1 1\n";
        let ts = RackTable::parse_many(text).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[1].rows_one_based(), vec![vec![2, 2], vec![1, 1]]);
    }

    #[test]
    fn relabel_is_transport() {
        let swap = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let t = RackTable::permutation_rack(&Permutation::parse_cycles("(1 2)", 3).unwrap());
        let r = t.relabel(&Permutation::parse_cycles("(2 3)", 3).unwrap()).unwrap();
        // (1 2) transported along (2 3) is (1 3)
        assert_eq!(r, RackTable::permutation_rack(&Permutation::parse_cycles("(1 3)", 3).unwrap()));
        assert_eq!(t.relabel(&swap).unwrap(), t);
        assert!(RackTable::from_rows(&[vec![1, 3], vec![1, 1]]).is_err());
    }
}
