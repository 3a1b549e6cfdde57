//! Finite signed-permutation subgroups of `O(n)`.
//!
//! Group elements are signed permutations only: maps `e_j -> s_j e_{p(j)}`
//! with `s_j = +-1` and `p` a bijection. This keeps every matrix entry in
//! `{0, +-1}`, all linear algebra exact over `Q`, and Pin-lift reflection
//! vectors in closed form. General orthogonal matrices are rejected at
//! parse time.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::linalg::{rat, Matrix};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Default cap on the size of a generated group.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;
/// Size guard for the symmetric-group constructor.
pub const MAX_SYMMETRIC_N: usize = 9;

/// A signed permutation of `{0, .., n-1}`: `e_j -> sign(j) * e_{perm(j)}`.
///
/// The derived ordering (permutation images first, then signs, with `+`
/// before `-`) is the canonical total order used for class representatives
/// and all deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    perm: Vec<usize>,
    neg: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            neg: vec![false; n],
        }
    }

    /// Builds from 0-indexed images and signs (`+1`/`-1`).
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::InvalidInput(format!(
                "perm has {n} entries but signs has {}",
                signs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &img in &perm {
            if img >= n || seen[img] {
                return Err(Error::InvalidInput("perm is not a bijection".into()));
            }
            seen[img] = true;
        }
        let mut neg = Vec::with_capacity(n);
        for &s in &signs {
            match s {
                1 => neg.push(false),
                -1 => neg.push(true),
                _ => return Err(Error::InvalidInput("signs must be +1 or -1".into())),
            }
        }
        Ok(SignedPerm { perm, neg })
    }

    /// Pure permutation (all signs `+1`) from 0-indexed images.
    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        SignedPerm::new(perm, vec![1; n])
    }

    /// Sign flip of a single coordinate.
    pub fn coordinate_flip(n: usize, coord: usize) -> Self {
        let mut e = SignedPerm::identity(n);
        e.neg[coord] = true;
        e
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, j: usize) -> usize {
        self.perm[j]
    }

    pub fn sign(&self, j: usize) -> i8 {
        if self.neg[j] {
            -1
        } else {
            1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &img)| img == j) && self.neg.iter().all(|&s| !s)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.dim(), other.dim());
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut neg = vec![false; n];
        for j in 0..n {
            let mid = other.perm[j];
            perm[j] = self.perm[mid];
            neg[j] = other.neg[j] ^ self.neg[mid];
        }
        SignedPerm { perm, neg }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut neg = vec![false; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            neg[self.perm[j]] = self.neg[j];
        }
        SignedPerm { perm, neg }
    }

    pub fn conjugate_by(&self, x: &SignedPerm) -> SignedPerm {
        x.compose(self).compose(&x.inverse())
    }

    pub fn commutes_with(&self, other: &SignedPerm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// The orthogonal matrix: column `j` holds `sign(j)` at row `perm(j)`.
    pub fn matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for j in 0..n {
            m.set(self.perm[j], j, rat(self.sign(j) as i64));
        }
        m
    }

    /// Determinant: permutation sign times the product of the signs.
    pub fn det(&self) -> i8 {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        for &s in &self.neg {
            if s {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycles of the underlying permutation, each starting at its minimal
    /// element, listed by increasing minimal element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.perm[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle type as a partition; `None` unless all signs are `+1`.
    pub fn cycle_type(&self) -> Option<Partition> {
        if self.neg.iter().any(|&s| s) {
            return None;
        }
        Some(Partition::from_parts(
            self.cycles().iter().map(|c| c.len() as u32).collect(),
        ))
    }

    /// Extends to dimension `n+1`, fixing the new coordinate up to `sign`.
    pub fn extended(&self, flip_last: bool) -> SignedPerm {
        let n = self.dim();
        let mut perm = self.perm.clone();
        perm.push(n);
        let mut neg = self.neg.clone();
        neg.push(flip_last);
        SignedPerm { perm, neg }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = (0..self.dim())
            .map(|j| format!("{}{}", if self.neg[j] { "-" } else { "" }, self.perm[j] + 1))
            .collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// On-disk form of one element, 1-indexed: `e_j -> signs[j] * e_{perm[j]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedPermJson {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermJson {
    pub fn to_element(&self) -> Result<SignedPerm> {
        let perm0: Vec<usize> = self
            .perm
            .iter()
            .map(|&p| {
                p.checked_sub(1)
                    .ok_or_else(|| Error::InvalidInput("perm entries are 1-indexed".into()))
            })
            .collect::<Result<_>>()?;
        SignedPerm::new(perm0, self.signs.clone())
    }

    pub fn from_element(g: &SignedPerm) -> Self {
        SignedPermJson {
            perm: (0..g.dim()).map(|j| g.image(j) + 1).collect(),
            signs: (0..g.dim()).map(|j| g.sign(j)).collect(),
        }
    }
}

/// Group definition file: `{"n": 4, "generators": [{"perm": .., "signs": ..}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub n: usize,
    pub generators: Vec<SignedPermJson>,
}

/// A finite signed-permutation group, fully enumerated.
///
/// `elements` is sorted in the canonical total order and is closed under
/// products and inverses; immutable once built.
#[derive(Debug, Clone)]
pub struct Group {
    n: usize,
    elements: Vec<SignedPerm>,
    generators: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
}

/// One conjugacy class: the canonical (minimal) representative and its size.
#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: SignedPerm,
    pub size: usize,
    pub cycle_type: Option<Partition>,
}

impl Group {
    /// Breadth-first closure of the generators, with a size cap.
    pub fn from_generators_capped(
        n: usize,
        generators: Vec<SignedPerm>,
        cap: usize,
    ) -> Result<Group> {
        for g in &generators {
            if g.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.dim(),
                });
            }
        }
        let id = SignedPerm::identity(n);
        let mut seen: HashSet<SignedPerm> = HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &generators {
                    let y = g.compose(x);
                    if !seen.contains(&y) {
                        if seen.len() >= cap {
                            return Err(Error::SizeLimit {
                                what: "group closure",
                                limit: cap,
                                requested: seen.len() + 1,
                            });
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<SignedPerm> = seen.into_iter().collect();
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(Group {
            n,
            elements,
            generators,
            index,
        })
    }

    pub fn from_generators(n: usize, generators: Vec<SignedPerm>) -> Result<Group> {
        Group::from_generators_capped(n, generators, DEFAULT_GROUP_CAP)
    }

    /// The symmetric group on `n` letters as permutation matrices.
    pub fn symmetric(n: usize) -> Result<Group> {
        if n == 0 || n > MAX_SYMMETRIC_N {
            return Err(Error::SizeLimit {
                what: "symmetric group degree",
                limit: MAX_SYMMETRIC_N,
                requested: n,
            });
        }
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(SignedPerm::from_perm(t)?);
            let cycle: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
            gens.push(SignedPerm::from_perm(cycle)?);
        }
        Group::from_generators(n, gens)
    }

    /// The trivial group in dimension `n`.
    pub fn trivial(n: usize) -> Group {
        Group::from_generators(n, Vec::new()).expect("trivial group fits any cap")
    }

    /// The direct product `Z/2 x G` inside `O(n+1)`: `G` on the first `n`
    /// coordinates, the new factor acting by `+-1` on the last.
    pub fn extend_with_reflection(&self) -> Result<Group> {
        let new_order = 2 * self.order();
        if new_order > DEFAULT_GROUP_CAP {
            return Err(Error::SizeLimit {
                what: "extended group order",
                limit: DEFAULT_GROUP_CAP,
                requested: new_order,
            });
        }
        let mut elements = Vec::with_capacity(new_order);
        for g in &self.elements {
            elements.push(g.extended(false));
            elements.push(g.extended(true));
        }
        elements.sort();
        let mut generators: Vec<SignedPerm> =
            self.generators.iter().map(|g| g.extended(false)).collect();
        generators.push(SignedPerm::coordinate_flip(self.n + 1, self.n));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(Group {
            n: self.n + 1,
            elements,
            generators,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    pub fn contains(&self, g: &SignedPerm) -> bool {
        self.index.contains_key(g)
    }

    pub fn element_index(&self, g: &SignedPerm) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// True when every element has determinant `+1`.
    pub fn is_special_orthogonal(&self) -> bool {
        self.elements.iter().all(|g| g.det() == 1)
    }

    /// Conjugacy classes, sorted by canonical representative. Orbits are
    /// closed under conjugation by generators, which suffices since the
    /// conjugation action of a product composes the generator actions.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut assigned: HashSet<SignedPerm> = HashSet::with_capacity(self.order());
        let mut classes = Vec::new();
        for start in &self.elements {
            if assigned.contains(start) {
                continue;
            }
            let mut orbit: HashSet<SignedPerm> = HashSet::new();
            orbit.insert(start.clone());
            let mut frontier = vec![start.clone()];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for x in &frontier {
                    for g in &self.generators {
                        let y = x.conjugate_by(g);
                        if orbit.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
                frontier = next;
            }
            // `elements` is sorted, so the first element we meet is minimal.
            let rep = start.clone();
            let size = orbit.len();
            for e in orbit {
                assigned.insert(e);
            }
            let cycle_type = rep.cycle_type();
            classes.push(ConjClass {
                rep,
                size,
                cycle_type,
            });
        }
        classes
    }

    /// All elements commuting with `g`, by full scan, in canonical order.
    pub fn centralizer(&self, g: &SignedPerm) -> Vec<SignedPerm> {
        debug_assert!(self.contains(g), "centralizer of a non-member");
        self.elements
            .iter()
            .filter(|h| h.commutes_with(g))
            .cloned()
            .collect()
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            n: self.n,
            generators: self
                .generators
                .iter()
                .map(SignedPermJson::from_element)
                .collect(),
        }
    }

    pub fn from_file(file: &GroupFile) -> Result<Group> {
        Group::from_file_capped(file, DEFAULT_GROUP_CAP)
    }

    pub fn from_file_capped(file: &GroupFile, cap: usize) -> Result<Group> {
        let gens: Vec<SignedPerm> = file
            .generators
            .iter()
            .map(|g| {
                let e = g.to_element()?;
                if e.dim() != file.n {
                    return Err(Error::InvalidInput(format!(
                        "generator has dimension {} but file says n = {}",
                        e.dim(),
                        file.n
                    )));
                }
                Ok(e)
            })
            .collect::<Result<_>>()?;
        Group::from_generators_capped(file.n, gens, cap)
    }
}

/// Built-in groups used by the verification battery and the examples.
pub mod builtins {
    use super::*;

    /// The full diagonal sign group `{+-1}^n`.
    pub fn sign_group(n: usize) -> Group {
        let gens = (0..n).map(|i| SignedPerm::coordinate_flip(n, i)).collect();
        Group::from_generators(n, gens).expect("2^n signs fit the cap for small n")
    }

    /// Cyclic group of order 4 generated by a rotation by 90 degrees in
    /// `SO(2)`: `e1 -> e2 -> -e1`.
    pub fn rotation4() -> Group {
        let r = SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap();
        Group::from_generators(2, vec![r]).unwrap()
    }

    /// Dihedral group of order 8 (symmetries of the square) in `O(2)`.
    pub fn dihedral8() -> Group {
        let r = SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap();
        let s = SignedPerm::new(vec![0, 1], vec![1, -1]).unwrap();
        Group::from_generators(2, vec![r, s]).unwrap()
    }

    /// Quaternion group of order 8 acting on `R^4` by left multiplication
    /// on the basis `(1, i, j, k)`; a non-abelian subgroup of `SO(4)`.
    pub fn quaternion8() -> Group {
        let i = SignedPerm::new(vec![1, 0, 3, 2], vec![1, -1, 1, -1]).unwrap();
        let j = SignedPerm::new(vec![2, 3, 0, 1], vec![1, -1, -1, 1]).unwrap();
        Group::from_generators(4, vec![i, j]).unwrap()
    }

    /// Alternating group `A_4` as even permutation matrices in `SO(4)`.
    pub fn alternating4() -> Group {
        let three_cycle = SignedPerm::from_perm(vec![1, 2, 0, 3]).unwrap();
        let double_swap = SignedPerm::from_perm(vec![1, 0, 3, 2]).unwrap();
        Group::from_generators(4, vec![three_cycle, double_swap]).unwrap()
    }

    /// The full hyperoctahedral group `B_n` (all signed permutations),
    /// order `2^n n!`.
    pub fn hyperoctahedral(n: usize) -> Result<Group> {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(SignedPerm::from_perm(t)?);
            let cycle: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
            gens.push(SignedPerm::from_perm(cycle)?);
        }
        gens.push(SignedPerm::coordinate_flip(n, 0));
        Group::from_generators(n, gens)
    }
}
