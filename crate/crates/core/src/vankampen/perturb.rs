//! Local groups of perturbed E8 and D_m points, and their effect on the global groups.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::analyze::{analyze, GroupReport};
use super::groups::{alpha, alpha_t, standard_group, SexticGroupSpec};
use crate::fpgroup::{
    abelian_invariants, abelianization_order, artin_action, braid_bracket, braid_power,
    group_order, EnumerationError, Perm, Presentation, Word, SIGMA1,
};

fn c(i: u32) -> Word {
    Word::gen(i - 1)
}

/// `c1 c2 c3` (or `b1 b2 b3`).
fn rho3() -> Word {
    &(&c(1) * &c(2)) * &c(3)
}

/// `x = y` as the relator `x y^-1`.
fn eq(x: &Word, y: &Word) -> Word {
    x * &y.inverse()
}

/// The local group of an E8 point: `c1 r^2 = r^2 c2`, `c2 r^2 = r^2 c3`, `c3 r = r c1`.
pub fn local_e8_group() -> Presentation {
    let r = rho3();
    let r2 = r.pow(2);
    Presentation::new(
        3,
        [
            eq(&(&c(1) * &r2), &(&r2 * &c(2))),
            eq(&(&c(2) * &r2), &(&r2 * &c(3))),
            eq(&(&c(3) * &r), &(&r * &c(1))),
        ],
    )
}

/// The eight maximal perturbations of an E8 point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum E8Perturbation {
    A4A3,
    A4A2A1,
    D5A2,
    A7,
    A6A1,
    D7,
    E6A1,
    E7,
}

impl E8Perturbation {
    pub const ALL: [E8Perturbation; 8] = [
        E8Perturbation::A4A3,
        E8Perturbation::A4A2A1,
        E8Perturbation::D5A2,
        E8Perturbation::A7,
        E8Perturbation::A6A1,
        E8Perturbation::D7,
        E8Perturbation::E6A1,
        E8Perturbation::E7,
    ];

    pub const NONABELIAN: [E8Perturbation; 3] = [
        E8Perturbation::A4A3,
        E8Perturbation::A4A2A1,
        E8Perturbation::D5A2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            E8Perturbation::A4A3 => "A4+A3",
            E8Perturbation::A4A2A1 => "A4+A2+A1",
            E8Perturbation::D5A2 => "D5+A2",
            E8Perturbation::A7 => "A7",
            E8Perturbation::A6A1 => "A6+A1",
            E8Perturbation::D7 => "D7",
            E8Perturbation::E6A1 => "E6+A1",
            E8Perturbation::E7 => "E7",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn is_nonabelian(self) -> bool {
        Self::NONABELIAN.contains(&self)
    }
}

/// Relations of the perturbed local group in the basis `b1, b2, b3` of the fiber over
/// the trivalent vertex next to the cut-off fiber.
pub fn e8_perturbation_group(kind: E8Perturbation) -> Presentation {
    let (b1, b2, b3) = (c(1), c(2), c(3));
    let r = rho3();
    let rels = match kind {
        E8Perturbation::A4A3 => vec![
            braid_bracket(&b1, &b2, 4),
            braid_bracket(&b2, &b3, 5),
            eq(&b2, &b1.conjugate_by(&b3)),
        ],
        E8Perturbation::A4A2A1 => vec![
            braid_bracket(&b1, &b2, 5),
            braid_bracket(&b2, &b3, 3),
            Word::commutator(&b1, &b3),
        ],
        E8Perturbation::D5A2 => vec![
            braid_bracket(&b1, &b2, 3),
            Word::commutator(&b1, &(&b2 * &b3)),
            eq(&b3, &b2.conjugate_by(&r)),
        ],
        E8Perturbation::A7 => vec![
            eq(&b1, &b3),
            eq(&b2, &b1.conjugate_by(&(&b2 * &b3).inverse())),
            braid_bracket(&b1, &b2, 8),
        ],
        E8Perturbation::A6A1 => vec![
            Word::commutator(&b2, &b3),
            braid_bracket(&b1, &b2, 7),
            eq(&b3, &b2.conjugate_by(&b1)),
        ],
        E8Perturbation::D7 => vec![eq(&b2, &b3), Word::commutator(&b3, &(&b1 * &b2))],
        E8Perturbation::E6A1 => vec![
            Word::commutator(&b2, &b3),
            eq(&b2, &b1.conjugate_by(&r)),
            eq(&b3, &b2.conjugate_by(&r)),
        ],
        E8Perturbation::E7 => vec![
            eq(&b1, &b2),
            Word::commutator(&b2, &(&(&b1 * &b2) * &(&b3 * &b1))),
        ],
    };
    Presentation::new(3, rels)
}

/// Relations of the nonabelian perturbations in the basis `c1, c2, c3` of a line
/// close to the E8 point.
pub fn e8_perturbation_group_c(kind: E8Perturbation) -> Option<Presentation> {
    let (c1, c2, c3) = (c(1), c(2), c(3));
    let rels = match kind {
        E8Perturbation::A4A3 => vec![
            braid_bracket(&c1, &c2, 4),
            braid_bracket(&c1, &c3, 5),
            eq(&c1, &c2.conjugate_by(&c1).conjugate_by(&c3)),
        ],
        E8Perturbation::A4A2A1 => vec![
            braid_bracket(&c1, &c2, 5),
            braid_bracket(&c1, &c3, 3),
            Word::commutator(&c2.conjugate_by(&c1), &c3),
        ],
        E8Perturbation::D5A2 => vec![
            braid_bracket(&c1, &c2, 3),
            Word::commutator(&c2, &(&c3 * &c1)),
            eq(&c3, &c1.conjugate_by(&rho3())),
        ],
        _ => return None,
    };
    Some(Presentation::new(3, rels))
}

/// `b1, b2, b3` as words in `c1, c2, c3`.
pub fn b_in_c() -> [Word; 3] {
    [c(2).conjugate_by(&c(1)), c(1), c(3)]
}

/// Images of `c1, c2, c3` in the global group: `(a1 a2) a3 (a1 a2)^-1`, `a1`, `a3`.
pub fn c_in_alpha() -> [Word; 3] {
    [alpha_t(), alpha(1), alpha(3)]
}

/// Whether the quotient by the `n`-th powers of all generators is finite and equal to
/// its abelianization. `None` when the enumeration overflows.
pub fn abelian_power_quotient(pres: &Presentation, n: i64, limit: usize) -> Option<bool> {
    let q = pres
        .clone()
        .with((0..pres.generators()).map(|g| Word::gen(g).pow(n)));
    let order = group_order(&q, limit).ok()?;
    Some(abelianization_order(&abelian_invariants(&q)) == Some(order as u64))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PerturbationError {
    #[error("invalid perturbation of D{m}: {reason}")]
    InvalidPerturbation { m: u32, reason: String },
}

/// `D_m -> D_p + A_{s_1} + ... + A_{s_k}` together with its local group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmPerturbation {
    pub m: u32,
    pub p: u32,
    pub s_list: Vec<u32>,
    /// `m - p - sum(s_i + 1)`
    pub d: u32,
    pub s: u32,
    pub abelian: bool,
    pub presentation: Presentation,
}

impl DmPerturbation {
    /// `D2 = 2A1` and `D3 = A3` are kept in D-notation.
    pub fn name(&self) -> String {
        let mut parts = vec![format!("D{}", self.p)];
        let mut s = self.s_list.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let mut i = 0;
        while i < s.len() {
            let j = s[i..].iter().take_while(|&&x| x == s[i]).count();
            parts.push(if j > 1 {
                format!("{j}A{}", s[i])
            } else {
                format!("A{}", s[i])
            });
            i += j;
        }
        parts.join("+")
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Generators `c1, c2, c3`; relators `{c1,c2}_s` and `c3^-1 c_i c3 = sigma1^(m-2)(c_i)`.
pub fn dm_perturbation_group(
    m: u32,
    p: u32,
    s_list: &[u32],
) -> Result<DmPerturbation, PerturbationError> {
    let bad = |reason: &str| PerturbationError::InvalidPerturbation {
        m,
        reason: reason.to_string(),
    };
    if m < 5 {
        return Err(bad("m must be at least 5"));
    }
    if p < 2 || p >= m {
        return Err(bad("p must satisfy 2 <= p < m"));
    }
    if s_list.iter().any(|&s| s == 0) {
        return Err(bad("A-type summands need s_i >= 1"));
    }
    let used = p + s_list.iter().map(|s| s + 1).sum::<u32>();
    if used > m {
        return Err(bad("m - p - sum(s_i + 1) is negative"));
    }
    let d = m - used;
    let s = if d == 0 {
        s_list.iter().fold(0, |g, &x| gcd(g, x + 1))
    } else {
        1
    };
    let mut rels = vec![braid_bracket(&c(1), &c(2), s)];
    let twist = braid_power(SIGMA1, (m - 2) as i64);
    for i in 1..=2 {
        let lhs = c(i).conjugate_by(&c(3).inverse());
        rels.push(eq(&lhs, &artin_action(&twist, &c(i))));
    }
    Ok(DmPerturbation {
        m,
        p,
        s_list: s_list.to_vec(),
        d,
        s,
        abelian: s == 1 || (s == 2 && m % 2 == 0),
        presentation: Presentation::new(3, rels),
    })
}

/// All perturbations `D_m -> D_p + sum A_{s_i}` with `2 <= p < m`, maximal or not.
pub fn dm_perturbations(m: u32) -> Vec<DmPerturbation> {
    fn parts(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for s in (1..=max.min(rest.saturating_sub(1))).rev() {
            if s + 1 <= rest {
                cur.push(s);
                parts(rest - s - 1, s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for p in 2..m {
        let mut lists = Vec::new();
        parts(m - p, m, &mut Vec::new(), &mut lists);
        for l in lists {
            out.push(dm_perturbation_group(m, p, &l).expect("enumerated data is valid"));
        }
    }
    out
}

/// A homomorphism onto a nonabelian subgroup of the symmetric group of the smallest
/// degree `k <= max_degree` for which one exists: the images of the generators.
pub fn nonabelian_image(pres: &Presentation, max_degree: usize) -> Option<(usize, Vec<Perm>)> {
    for k in 3..=max_degree {
        if let Some(imgs) = search_images(pres, k) {
            return Some((k, imgs));
        }
    }
    None
}

fn all_perms(k: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(Perm::from_images(cur.clone()));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i as u32);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn eval(w: &Word, imgs: &[Perm], invs: &[Perm], k: usize) -> Perm {
    w.letters().iter().fold(Perm::identity(k), |acc, l| {
        let g = if l.inverse {
            &invs[l.gen as usize]
        } else {
            &imgs[l.gen as usize]
        };
        acc.then(g)
    })
}

fn search_images(pres: &Presentation, k: usize) -> Option<Vec<Perm>> {
    let n = pres.generators() as usize;
    let perms = all_perms(k);
    let mut imgs: Vec<Perm> = Vec::with_capacity(n);
    let mut invs: Vec<Perm> = Vec::with_capacity(n);
    // relators are checked as soon as all their generators are assigned
    let rels: Vec<(usize, &Word)> = pres
        .relators()
        .iter()
        .map(|r| (r.rank_hint() as usize, r))
        .collect();
    fn rec(
        depth: usize,
        n: usize,
        k: usize,
        perms: &[Perm],
        rels: &[(usize, &Word)],
        imgs: &mut Vec<Perm>,
        invs: &mut Vec<Perm>,
    ) -> bool {
        if depth == n {
            return (0..n).any(|i| (i + 1..n).any(|j| !imgs[i].commutes_with(&imgs[j])));
        }
        for g in perms {
            imgs.push(g.clone());
            invs.push(g.inverse());
            let ok = rels
                .iter()
                .filter(|(r, _)| *r == depth + 1)
                .all(|(_, w)| eval(w, imgs, invs, k).is_identity());
            if ok && rec(depth + 1, n, k, perms, rels, imgs, invs) {
                return true;
            }
            imgs.pop();
            invs.pop();
        }
        false
    }
    rec(0, n, k, &perms, &rels, &mut imgs, &mut invs).then_some(imgs)
}

/// The two sextics whose groups are nonabelian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlobalBase {
    /// `E8+A4+A3+2A2`, parameters `(5,4,3)`.
    G6,
    /// `E8+D6+A3+A2`, parameters `(4,3,-)`, studied modulo a central power.
    Ginf,
}

impl GlobalBase {
    pub fn lmn(self) -> (u32, u32, u32) {
        match self {
            GlobalBase::G6 => (5, 4, 3),
            GlobalBase::Ginf => (4, 3, 0),
        }
    }

    pub fn unperturbed_order(self, limit: usize) -> Result<usize, EnumerationError> {
        let (l, m, n) = self.lmn();
        let p = standard_group(&SexticGroupSpec::lmn(l, m, n));
        match self {
            GlobalBase::G6 => group_order(&p, limit),
            GlobalBase::Ginf => group_order(&p.with([alpha(2).pow(3)]), limit),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocalChange {
    E8(E8Perturbation),
    Lmn(u32, u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalPerturbation {
    pub base_order: u64,
    pub report: GroupReport,
    /// Equal (quotient) orders and, for `Ginf`, equal abelianizations.
    pub order_preserved: bool,
    /// For `Ginf` with an E8 perturbation: order of the quotient by `a1^3` instead of
    /// `a2^3`, or `None` when that enumeration overflows.
    pub alpha1_cubed_order: Option<u64>,
}

/// The global group after a local change: extra relators pulled back along
/// `c -> alpha`, or modified region parameters.
pub fn global_perturbation_presentation(base: GlobalBase, change: &LocalChange) -> Presentation {
    let (l, m, n) = base.lmn();
    match change {
        LocalChange::Lmn(l, m, n) => standard_group(&SexticGroupSpec::lmn(*l, *m, *n)),
        LocalChange::E8(kind) => {
            let local = e8_perturbation_group_c(*kind)
                .unwrap_or_else(|| substitute_all(&e8_perturbation_group(*kind), &b_in_c()));
            let images = c_in_alpha();
            let extra: Vec<Word> = local
                .relators()
                .iter()
                .map(|r| r.substitute(&images))
                .collect();
            standard_group(&SexticGroupSpec::lmn(l, m, n).with_extra(extra))
        }
    }
}

fn substitute_all(p: &Presentation, images: &[Word]) -> Presentation {
    Presentation::new(
        images.iter().map(|w| w.rank_hint()).max().unwrap_or(0),
        p.relators().iter().map(|r| r.substitute(images)),
    )
}

pub fn global_perturbation(
    base: GlobalBase,
    change: &LocalChange,
    limit: usize,
) -> Result<GlobalPerturbation, EnumerationError> {
    let pres = global_perturbation_presentation(base, change);
    let base_order = base.unperturbed_order(limit)? as u64;
    match base {
        GlobalBase::G6 => {
            let report = analyze(&pres, None, limit)?;
            Ok(GlobalPerturbation {
                base_order,
                order_preserved: report.order == base_order,
                report,
                alpha1_cubed_order: None,
            })
        }
        GlobalBase::Ginf => {
            let report = analyze(&pres, Some(&alpha(2).pow(3)), limit)?;
            let (l, m, n) = base.lmn();
            let base_inv = abelian_invariants(&standard_group(&SexticGroupSpec::lmn(l, m, n)));
            let alpha1_cubed_order = match change {
                LocalChange::E8(_) => group_order(&pres.clone().with([alpha(1).pow(3)]), limit)
                    .ok()
                    .map(|o| o as u64),
                LocalChange::Lmn(..) => None,
            };
            Ok(GlobalPerturbation {
                base_order,
                order_preserved: report.order == base_order
                    && abelian_invariants(&pres) == base_inv,
                report,
                alpha1_cubed_order,
            })
        }
    }
}
