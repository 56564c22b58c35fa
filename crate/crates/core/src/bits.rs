//! Dense 0/1 matrices stored as rows of `u64` words.

use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Iterator over the set bit positions of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        Ones { words, idx: 0, cur }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub fn popcount(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::new(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Precondition(format!("row {r} has length {}, expected {cols}", row.len())));
            }
            for (c, &b) in row.iter().enumerate() {
                m.set(r, c, b);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn row_ones(&self, r: usize) -> Ones<'_> {
        Ones::new(self.row(r))
    }

    pub fn row_count(&self, r: usize) -> usize {
        popcount(self.row(r))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Entry `(a, b)` of the result is entry `(row_perm[a], col_perm[b])` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::new(row_perm.len(), col_perm.len());
        for (a, &r) in row_perm.iter().enumerate() {
            for (b, &c) in col_perm.iter().enumerate() {
                if self.get(r, c) {
                    m.set(a, b, true);
                }
            }
        }
        m
    }

    /// Text form: `rows cols` on the first line, then one line of `0`/`1` per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<BitMatrix> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty matrix text".into() })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse { line: hl + 1, msg: format!("bad dimension {s:?}") })
        };
        if dims.len() != 2 {
            return Err(Error::Parse { line: hl + 1, msg: "expected `rows cols`".into() });
        }
        let (rows, cols) = (parse(dims[0])?, parse(dims[1])?);
        let mut m = BitMatrix::new(rows, cols);
        let mut r = 0;
        for (ln, line) in lines {
            let line = line.trim();
            if r >= rows {
                return Err(Error::Parse { line: ln + 1, msg: "too many rows".into() });
            }
            if line.chars().count() != cols {
                return Err(Error::Parse { line: ln + 1, msg: format!("expected {cols} entries") });
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    _ => return Err(Error::Parse { line: ln + 1, msg: format!("bad entry {ch:?}") }),
                }
            }
            r += 1;
        }
        if r != rows {
            return Err(Error::Parse { line: text.lines().count(), msg: format!("expected {rows} rows, got {r}") });
        }
        Ok(m)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_across_words() {
        let w = [1u64 | 1 << 63, 0, 1 << 5];
        assert_eq!(Ones::new(&w).collect::<Vec<_>>(), vec![0, 63, 133]);
        assert_eq!(Ones::new(&[]).count(), 0);
    }

    #[test]
    fn text_round_trip() {
        let m = BitMatrix::from_text("2 3\n101\n011\n").unwrap();
        assert!(m.get(0, 0) && !m.get(0, 1) && m.get(1, 2));
        assert_eq!(m.to_text(), "2 3\n101\n011\n");
        assert!(BitMatrix::from_text("2 2\n10\n").is_err());
        assert!(BitMatrix::from_text("1 2\n1x\n").is_err());
    }

    #[test]
    fn transpose_and_permute() {
        let m = BitMatrix::from_text("2 3\n110\n001\n").unwrap();
        assert_eq!(m.transpose().to_text(), "3 2\n10\n10\n01\n");
        assert_eq!(m.permuted(&[1, 0], &[2, 1, 0]).to_text(), "2 3\n100\n011\n");
    }
}
