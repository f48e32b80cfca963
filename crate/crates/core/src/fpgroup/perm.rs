//! Permutation groups with a Schreier–Sims stabilizer chain.
//!
//! Permutations act on the right: `x^g = g[x]`, and `g * h` applies `g` first.

use std::fmt;

use thiserror::Error;

use super::coset::CosetTable;
use super::word::Word;

/// Largest degree accepted by [`PermGroup::new`].
pub const MAX_DEGREE: usize = 10_000;

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Panics if `images` is not a permutation.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(
                (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true),
                "not a permutation"
            );
        }
        Perm(images)
    }

    /// Builds a permutation from disjoint cycles on points `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut p: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                p[x as usize] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&a, &b)| other.0[a as usize] == self.0[b as usize])
    }

    fn first_moved(&self) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[x]` maps the base point to `x`, for orbit points.
    transversal: Vec<Option<Perm>>,
}

/// A finite permutation group together with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: Vec<Level>,
}

/// Structure tags reported by [`PermGroup::identify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum StructureTag {
    Cyclic(u64),
    SL25,
    Unknown,
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureTag::Cyclic(n) => write!(f, "C{n}"),
            StructureTag::SL25 => f.write_str("SL(2,5)"),
            StructureTag::Unknown => f.write_str("unknown"),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, PermError> {
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(degree));
        }
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut grp = PermGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
        };
        for g in generators {
            grp.add_generator(g);
        }
        Ok(grp)
    }

    /// The group generated by the permutations a complete coset table induces.
    /// On the trivial subgroup this is the regular representation.
    pub fn from_coset_table(table: &CosetTable) -> Result<Self, PermError> {
        let n = table.index();
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        let gens = (0..table.generators())
            .map(|g| Perm::from_images(table.generator_perm(g)))
            .collect();
        PermGroup::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn add_generator(&mut self, g: Perm) {
        if !g.is_identity() {
            self.extend(0, g.clone());
        }
        self.generators.push(g);
    }

    /// Strips `g` through the chain from `level`; returns the residue and the level at
    /// which it dropped out (`chain.len()` when it passed every level).
    fn sift(&self, level: usize, g: &Perm) -> (Perm, usize) {
        let mut g = g.clone();
        for (i, lv) in self.chain.iter().enumerate().skip(level) {
            let b = g.image(lv.base);
            match &lv.transversal[b as usize] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.chain.len())
    }

    fn extend(&mut self, level: usize, g: Perm) {
        let (h, _) = self.sift(level, &g);
        if h.is_identity() {
            return;
        }
        if level == self.chain.len() {
            let base = g.first_moved().expect("non-identity");
            let mut transversal = vec![None; self.degree];
            transversal[base as usize] = Some(Perm::identity(self.degree));
            self.chain.push(Level {
                base,
                gens: Vec::new(),
                orbit: vec![base],
                transversal,
            });
        }
        self.chain[level].gens.push(g.clone());
        let old = self.chain[level].orbit.clone();
        for b in old {
            self.process(level, b, &g);
        }
    }

    fn process(&mut self, level: usize, b: u32, s: &Perm) {
        let mut queue = vec![(b, s.clone())];
        while let Some((b, s)) = queue.pop() {
            let c = s.image(b);
            let ub = self.chain[level].transversal[b as usize].clone().unwrap();
            let ubs = ub.then(&s);
            match &self.chain[level].transversal[c as usize] {
                Some(uc) => {
                    let schreier = ubs.then(&uc.inverse());
                    if !schreier.is_identity() {
                        self.extend(level + 1, schreier);
                    }
                }
                None => {
                    self.chain[level].transversal[c as usize] = Some(ubs);
                    self.chain[level].orbit.push(c);
                    for t in self.chain[level].gens.clone() {
                        queue.push((c, t));
                    }
                }
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.chain.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(0, g).0.is_identity()
    }

    /// Evaluates a word in the group generators.
    pub fn eval(&self, w: &Word) -> Perm {
        let inverses: Vec<Perm> = self.generators.iter().map(|g| g.inverse()).collect();
        w.letters().iter().fold(self.identity(), |acc, l| {
            let g = if l.inverse {
                &inverses[l.gen as usize]
            } else {
                &self.generators[l.gen as usize]
            };
            acc.then(g)
        })
    }

    /// All elements, in the order given by the stabilizer chain.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![self.identity()];
        for lv in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lv.orbit.len());
            for x in &lv.orbit {
                let u = lv.transversal[*x as usize].as_ref().unwrap();
                for e in &out {
                    next.push(e.then(u));
                }
            }
            out = next;
        }
        out
    }

    pub fn subgroup(&self, gens: Vec<Perm>) -> PermGroup {
        PermGroup::new(self.degree, gens).expect("degree already checked")
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_abelian()
            && self
                .elements()
                .iter()
                .any(|e| e.order() as u128 == self.order())
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: Vec<Perm>) -> PermGroup {
        let mut h = self.subgroup(Vec::new());
        let mut pending = gens;
        while let Some(x) = pending.pop() {
            if h.contains(&x) {
                continue;
            }
            h.add_generator(x.clone());
            for g in &self.generators {
                pending.push(g.inverse().then(&x).then(g));
            }
        }
        h
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = g[i].inverse().then(&g[j].inverse()).then(&g[i]).then(&g[j]);
                comms.push(c);
            }
        }
        self.normal_closure(comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Order of the element a word in the generators represents.
    pub fn element_order(&self, w: &Word) -> u64 {
        self.eval(w).order()
    }

    /// Elements of `self` commuting with every generator of `h`, by element scan.
    pub fn centralizer(&self, h: &PermGroup) -> PermGroup {
        let mut c = self.subgroup(Vec::new());
        for e in self.elements() {
            if !c.contains(&e) && h.generators.iter().all(|x| x.commutes_with(&e)) {
                c.add_generator(e);
            }
        }
        c
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = self.subgroup(Vec::new());
        for e in small.elements() {
            if !out.contains(&e) && big.contains(&e) {
                out.add_generator(e);
            }
        }
        out
    }

    /// Index of the subgroup generated by the given words.
    pub fn subgroup_index(&self, gens: &[Word]) -> u128 {
        let h = self.subgroup(gens.iter().map(|w| self.eval(w)).collect());
        self.order() / h.order()
    }

    pub fn involution_count(&self) -> usize {
        self.elements().iter().filter(|e| e.order() == 2).count()
    }

    /// Cyclic groups and SL(2,5) (the only perfect group of order 120); everything else
    /// is reported as unknown.
    pub fn identify(&self) -> StructureTag {
        if self.is_cyclic() {
            StructureTag::Cyclic(self.order() as u64)
        } else if self.order() == 120 && self.is_perfect() {
            StructureTag::SL25
        } else {
            StructureTag::Unknown
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        PermGroup::new(4, vec![a, b]).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements().len(), 24);
        assert_eq!(g.derived_subgroup().order(), 12);
        assert_eq!(g.identify(), StructureTag::Unknown);
        assert_eq!(g.involution_count(), 9);
    }

    #[test]
    fn a5_from_explicit_model() {
        let a = Perm::from_cycles(5, &[&[0, 1], &[2, 3]]);
        let b = Perm::from_cycles(5, &[&[0, 2, 4]]);
        let g = PermGroup::new(5, vec![a, b]).unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.is_perfect());
    }

    #[test]
    fn cyclic_identification() {
        let c = Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]);
        let g = PermGroup::new(6, vec![c]).unwrap();
        assert_eq!(g.identify(), StructureTag::Cyclic(6));
        let centre = g.centralizer(&s4_like_trivial(6));
        assert_eq!(centre.order(), 6);
    }

    fn s4_like_trivial(n: usize) -> PermGroup {
        PermGroup::new(n, vec![]).unwrap()
    }

    #[test]
    fn centre_of_dihedral_group() {
        let r = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]);
        let s = Perm::from_cycles(8, &[&[0, 4], &[1, 7], &[2, 6], &[3, 5]]);
        let g = PermGroup::new(8, vec![r, s]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.centralizer(&g).order(), 2);
    }

    #[test]
    fn degree_limit() {
        assert_eq!(
            PermGroup::new(MAX_DEGREE + 1, vec![]).unwrap_err(),
            PermError::DegreeTooLarge(MAX_DEGREE + 1)
        );
    }
}
