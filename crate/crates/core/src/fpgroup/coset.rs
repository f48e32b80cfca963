//! Todd–Coxeter coset enumeration (HLT strategy with lookahead).

use thiserror::Error;

use super::presentation::Presentation;
use super::word::{Letter, Word};

/// Default bound on the number of simultaneously live cosets.
pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("coset enumeration exceeded {0} cosets")]
    Overflow(usize),
}

/// A complete coset table, standardized so that cosets appear in breadth-first order
/// from the subgroup coset, which is row 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: u32,
    width: usize,
    entries: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        if self.width == 0 {
            1
        } else {
            self.entries.len() / self.width
        }
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    /// Image of coset `c` under a letter.
    pub fn act(&self, c: usize, l: Letter) -> usize {
        self.entries[c * self.width + l.col()] as usize
    }

    pub fn act_word(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.act(c, l))
    }

    /// The permutation of cosets induced by generator `g`.
    pub fn generator_perm(&self, g: u32) -> Vec<u32> {
        let col = Letter::new(g, false).col();
        (0..self.index())
            .map(|c| self.entries[c * self.width + col])
            .collect()
    }
}

struct Enumerator<'a> {
    width: usize,
    relators: Vec<Vec<usize>>,
    subgroup: &'a [Word],
    table: Vec<u32>,
    /// `parent[c] == c` for live cosets.
    parent: Vec<u32>,
    live: usize,
    limit: usize,
    queue: Vec<u32>,
}

struct Full;

impl<'a> Enumerator<'a> {
    fn new(pres: &Presentation, subgroup: &'a [Word], limit: usize) -> Self {
        let width = 2 * pres.generators() as usize;
        let mut relators: Vec<Vec<usize>> = pres
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|l| l.col()).collect())
            .collect();
        relators.sort_by_key(|r| r.len());
        let mut e = Enumerator {
            width,
            relators,
            subgroup,
            // row 0 is a dummy so that 0 can mean "undefined"
            table: vec![0; 2 * width],
            parent: vec![0, 1],
            live: 1,
            limit,
            queue: Vec::new(),
        };
        e.table.shrink_to_fit();
        e
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.width + x] = v;
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Full> {
        if self.rows() - 1 >= self.limit {
            return Err(Full);
        }
        let n = self.rows() as u32;
        self.parent.push(n);
        self.table.extend(std::iter::repeat(0).take(self.width));
        self.live += 1;
        self.set(c, x, n);
        self.set(n, x ^ 1, c);
        Ok(n)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.width {
                let f = self.get(e, x);
                if f == 0 {
                    continue;
                }
                self.set(f, x ^ 1, 0);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                let fx = self.get(f1, x ^ 1);
                if ex != 0 {
                    self.merge(f1, ex);
                } else if fx != 0 {
                    self.merge(e1, fx);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x ^ 1, e1);
                }
            }
        }
    }

    /// Scans `w` at `c`, defining cosets for the gap when `fill` is set.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while i as isize <= j && self.get(f, w[i]) != 0 {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != 0 {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = w[i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Scans every relator at every live coset without defining anything, then
    /// discards dead rows. Returns the new position of `cursor`.
    fn lookahead(&mut self, cursor: u32) -> u32 {
        let mut c = 1;
        while (c as usize) < self.rows() {
            if self.alive(c) {
                for r in 0..self.relators.len() {
                    if !self.alive(c) {
                        break;
                    }
                    let w = std::mem::take(&mut self.relators[r]);
                    let _ = self.scan(c, &w, false);
                    self.relators[r] = w;
                }
            }
            c += 1;
        }
        self.compact(cursor)
    }

    fn compact(&mut self, cursor: u32) -> u32 {
        let rows = self.rows();
        let mut map = vec![0u32; rows];
        let mut next = 1u32;
        for c in 1..rows as u32 {
            if self.alive(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut new_cursor = next;
        for c in (cursor as usize)..rows {
            if self.alive(c as u32) {
                new_cursor = map[c];
                break;
            }
        }
        let mut table = vec![0u32; next as usize * self.width];
        for c in 1..rows {
            let m = map[c] as usize;
            if m == 0 {
                continue;
            }
            for x in 0..self.width {
                let v = self.table[c * self.width + x];
                table[m * self.width + x] = if v == 0 { 0 } else { map[v as usize] };
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        new_cursor
    }

    fn run(&mut self) -> Result<(), EnumerationError> {
        let overflow = EnumerationError::Overflow(self.limit);
        let subgroup: Vec<Vec<usize>> = self
            .subgroup
            .iter()
            .map(|h| h.letters().iter().map(|l| l.col()).collect())
            .collect();
        for h in &subgroup {
            loop {
                match self.scan(1, h, true) {
                    Ok(()) => break,
                    Err(Full) => {
                        let before = self.rows();
                        self.lookahead(1);
                        if self.rows() == before {
                            return Err(overflow);
                        }
                    }
                }
            }
        }
        let mut c = 1u32;
        while (c as usize) < self.rows() {
            if self.alive(c) {
                match self.process(c) {
                    Ok(()) => {}
                    Err(Full) => {
                        let before = self.rows();
                        c = self.lookahead(c);
                        if self.rows() == before {
                            return Err(overflow);
                        }
                        continue;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn process(&mut self, c: u32) -> Result<(), Full> {
        for r in 0..self.relators.len() {
            if !self.alive(c) {
                return Ok(());
            }
            let w = std::mem::take(&mut self.relators[r]);
            let res = self.scan(c, &w, true);
            self.relators[r] = w;
            res?;
        }
        for x in 0..self.width {
            if !self.alive(c) {
                return Ok(());
            }
            if self.get(c, x) == 0 {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    /// Breadth-first renumbering of the live cosets starting at the subgroup coset.
    fn standardize(mut self) -> Vec<u32> {
        let rows = self.rows();
        let mut order = vec![u32::MAX; rows];
        let mut seq = vec![1u32];
        order[1] = 0;
        let mut i = 0;
        while i < seq.len() {
            let c = seq[i];
            i += 1;
            for x in 0..self.width {
                let d = self.rep(self.get(c, x));
                if order[d as usize] == u32::MAX {
                    order[d as usize] = seq.len() as u32;
                    seq.push(d);
                }
            }
        }
        let mut out = vec![0u32; seq.len() * self.width];
        for (k, &c) in seq.iter().enumerate() {
            for x in 0..self.width {
                let d = self.rep(self.get(c, x));
                out[k * self.width + x] = order[d as usize];
            }
        }
        out
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `pres`. At most `limit` cosets are kept alive at any time.
pub fn coset_enumerate(
    pres: &Presentation,
    subgroup: &[Word],
    limit: usize,
) -> Result<CosetTable, EnumerationError> {
    let mut e = Enumerator::new(pres, subgroup, limit.max(1));
    e.run()?;
    let width = e.width;
    Ok(CosetTable {
        generators: pres.generators(),
        width,
        entries: e.standardize(),
    })
}

/// Order of the group, by enumerating cosets of the trivial subgroup.
pub fn group_order(pres: &Presentation, limit: usize) -> Result<usize, EnumerationError> {
    coset_enumerate(pres, &[], limit).map(|t| t.index())
}
