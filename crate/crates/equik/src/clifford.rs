//! Exact Clifford algebra `C(R^n)` over `Q(sqrt 2)` and Pin lifts.
//!
//! Basis blades are indexed by subsets of `{0..n-1}` as bitmasks, with
//! `e_i^2 = +1` and `e_i e_j = -e_j e_i`. A signed permutation decomposes
//! into reflections in the vectors `e_i` and `(e_i - e_j)/sqrt(2)`, whose
//! Clifford product is the Pin lift of the element, defined up to a global
//! sign. Conjugation follows the twisted covering rule
//! `u x u^-1 = det(g) * (g x)` for vectors `x`, and the commutator of two
//! commuting lifts is a central `+-1` independent of the sign choices --
//! the brute-force ground truth for which conjugacy classes split in the
//! double cover.

use std::collections::{HashMap, HashSet};

use crate::groups::{Group, SignedPerm};
use crate::linalg::Root2Scalar;
use crate::{Error, Result};

/// Hard cap from the bitmask representation.
pub const MAX_CLIFFORD_DIM: usize = 63;
/// Guards for the cover-class enumeration.
pub const MAX_COVER_DIM: usize = 10;
pub const MAX_COVER_ORDER: usize = 10_000;

type Blade = u64;

/// Sparse element of `C(R^n)` with `Q(sqrt 2)` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    n: usize,
    terms: std::collections::BTreeMap<Blade, Root2Scalar>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        CliffordElement {
            n,
            terms: Default::default(),
        }
    }

    pub fn scalar(n: usize, c: Root2Scalar) -> Self {
        let mut e = CliffordElement::zero(n);
        if !c.is_zero() {
            e.terms.insert(0, c);
        }
        e
    }

    pub fn one(n: usize) -> Self {
        CliffordElement::scalar(n, Root2Scalar::one())
    }

    /// The basis vector `e_i` (0-indexed).
    pub fn basis_vector(n: usize, i: usize) -> Self {
        assert!(i < n && n <= MAX_CLIFFORD_DIM);
        let mut e = CliffordElement::zero(n);
        e.terms.insert(1 << i, Root2Scalar::one());
        e
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient on the scalar blade, if the element is a scalar.
    pub fn as_scalar(&self) -> Option<Root2Scalar> {
        match self.terms.len() {
            0 => Some(Root2Scalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, c.neg()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            let entry = terms.entry(*b).or_insert_with(Root2Scalar::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(b);
            }
        }
        CliffordElement { n: self.n, terms }
    }

    pub fn scale(&self, c: &Root2Scalar) -> Self {
        if c.is_zero() {
            return CliffordElement::zero(self.n);
        }
        CliffordElement {
            n: self.n,
            terms: self.terms.iter().map(|(b, v)| (*b, v.mul(c))).collect(),
        }
    }

    /// Exact product. The sign of a blade product counts the transpositions
    /// needed to interleave the index sets; repeated indices square to `+1`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut terms: std::collections::BTreeMap<Blade, Root2Scalar> = Default::default();
        for (&s, cs) in &self.terms {
            for (&t, ct) in &other.terms {
                let sign = blade_mul_sign(s, t);
                let mut coeff = cs.mul(ct);
                if sign < 0 {
                    coeff = coeff.neg();
                }
                let blade = s ^ t;
                let entry = terms.entry(blade).or_insert_with(Root2Scalar::zero);
                *entry = entry.add(&coeff);
                if entry.is_zero() {
                    terms.remove(&blade);
                }
            }
        }
        Ok(CliffordElement { n: self.n, terms })
    }
}

/// Sign of `e_S * e_T` relative to `e_{S xor T}`: for each index in `T`,
/// count the indices of `S` above it that it must move past.
fn blade_mul_sign(s: Blade, t: Blade) -> i8 {
    let mut sign = 1i8;
    let mut tt = t;
    while tt != 0 {
        let i = tt.trailing_zeros();
        let above = (s >> (i + 1)).count_ones();
        if above % 2 == 1 {
            sign = -sign;
        }
        tt &= tt - 1;
    }
    sign
}

/// A lift of a signed permutation to the Clifford algebra, together with
/// the element it covers. The other lift is the negation.
#[derive(Debug, Clone)]
pub struct PinLift {
    pub element: CliffordElement,
    pub base: SignedPerm,
}

impl PinLift {
    /// The reversed-factor product, which is the inverse since every
    /// reflection factor squares to `+1`.
    pub fn inverse_element(&self) -> CliffordElement {
        let n = self.base.dim();
        let mut acc = CliffordElement::one(n);
        for v in reflection_factors(&self.base).iter().rev() {
            acc = acc.mul(v).expect("same dimension");
        }
        acc
    }
}

/// Ordered reflection vectors composing to `g`: the underlying permutation
/// is split into transpositions along its cycles (vectors
/// `(e_a - e_b)/sqrt(2)`), then one `e_i` per sign flip, in increasing
/// coordinate order. The list length is even iff `det(g) = +1`.
///
/// The composition convention: the returned list `[v1, .., vk]` satisfies
/// `g = r_{v1} . r_{v2} .. r_{vk}` with the rightmost reflection applied
/// first.
pub fn reflection_factors(g: &SignedPerm) -> Vec<CliffordElement> {
    let n = g.dim();
    let mut out = Vec::new();
    for cycle in g.cycles() {
        // c0 -> c1 -> .. -> cm-1 -> c0 becomes (c0 cm-1)(c0 cm-2)..(c0 c1).
        for t in (1..cycle.len()).rev() {
            let (a, b) = (cycle[0], cycle[t]);
            let mut v = CliffordElement::zero(n);
            let half = Root2Scalar::inv_sqrt2();
            v = v.add(&CliffordElement::basis_vector(n, a).scale(&half));
            v = v.add(&CliffordElement::basis_vector(n, b).scale(&half.neg()));
            out.push(v);
        }
    }
    for j in 0..n {
        if g.sign(j) < 0 {
            out.push(CliffordElement::basis_vector(n, j));
        }
    }
    out
}

/// The Clifford product of the reflection factors of `g`.
pub fn pin_lift(g: &SignedPerm) -> PinLift {
    let n = g.dim();
    let mut acc = CliffordElement::one(n);
    for v in reflection_factors(g) {
        acc = acc.mul(&v).expect("same dimension");
    }
    PinLift {
        element: acc,
        base: g.clone(),
    }
}

/// The commutator `[g~, h~] = g~ h~ g~^-1 h~^-1` of the two lifts, which is
/// a central `+-1` whenever `g` and `h` commute in the group, independent
/// of the sign choice in either lift.
pub fn commutator_sign(g: &SignedPerm, h: &SignedPerm) -> Result<i8> {
    if g.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: h.dim(),
        });
    }
    if !g.commutes_with(h) {
        return Err(Error::NotCommuting);
    }
    let lg = pin_lift(g);
    let lh = pin_lift(h);
    let prod = lg
        .element
        .mul(&lh.element)?
        .mul(&lg.inverse_element())?
        .mul(&lh.inverse_element())?;
    let scalar = prod
        .as_scalar()
        .expect("commutator of commuting lifts is central");
    if scalar == Root2Scalar::one() {
        Ok(1)
    } else {
        debug_assert_eq!(scalar, Root2Scalar::one().neg());
        Ok(-1)
    }
}

/// Number of conjugacy classes of the double cover `G~ = {+- lift(g)}`,
/// by explicit orbit enumeration inside the Clifford algebra.
///
/// Orbits are taken under conjugation by lifts of the group's generators;
/// that reaches the full conjugation action because the central `-1` acts
/// trivially and conjugations compose.
pub fn schur_cover_class_count(group: &Group) -> Result<usize> {
    if group.dim() > MAX_COVER_DIM {
        return Err(Error::SizeLimit {
            what: "cover class enumeration dimension",
            limit: MAX_COVER_DIM,
            requested: group.dim(),
        });
    }
    if group.order() > MAX_COVER_ORDER {
        return Err(Error::SizeLimit {
            what: "cover class enumeration order",
            limit: MAX_COVER_ORDER,
            requested: group.order(),
        });
    }
    let n = group.dim();
    let mut cover: Vec<CliffordElement> = Vec::with_capacity(2 * group.order());
    for g in group.elements() {
        let lift = pin_lift(g).element;
        cover.push(lift.neg());
        cover.push(lift);
    }
    {
        let distinct: HashSet<&CliffordElement> = cover.iter().collect();
        assert_eq!(distinct.len(), 2 * group.order(), "lifts must be distinct");
    }
    let conjugators: Vec<(CliffordElement, CliffordElement)> = group
        .generators()
        .iter()
        .map(|g| {
            let l = pin_lift(g);
            let inv = l.inverse_element();
            (l.element, inv)
        })
        .collect();
    let mut assigned: HashSet<CliffordElement> = HashSet::with_capacity(cover.len());
    let mut classes = 0usize;
    for x in &cover {
        if assigned.contains(x) {
            continue;
        }
        classes += 1;
        let mut frontier = vec![x.clone()];
        assigned.insert(x.clone());
        while let Some(y) = frontier.pop() {
            for (u, uinv) in &conjugators {
                let z = u.mul(&y)?.mul(uinv)?;
                debug_assert_eq!(z.dim(), n);
                if assigned.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
    }
    Ok(classes)
}

/// Expected commutator sign for an involution `g` from its geometry, per
/// the four-case table: as a function of `det(h)`, `det(h|V+)` and the
/// parity of `n- = dim V-`. Used by tests and the verification battery.
pub fn involution_table_sign(det_h: i8, det_h_on_fixed: i8, n_minus: usize) -> i8 {
    let parity = if n_minus.is_multiple_of(2) { 1i8 } else { -1i8 };
    match (det_h, det_h_on_fixed) {
        (1, 1) => 1,
        (-1, -1) => parity,
        (-1, 1) => -parity,
        (1, -1) => -1,
        _ => unreachable!("determinants are +-1"),
    }
}

/// Cached commutator signs of one element against many, reusing the lift.
pub fn commutator_signs_against(
    g: &SignedPerm,
    others: &[SignedPerm],
) -> Result<Vec<i8>> {
    let lg = pin_lift(g);
    let lg_inv = lg.inverse_element();
    let mut lift_cache: HashMap<SignedPerm, (CliffordElement, CliffordElement)> = HashMap::new();
    let mut out = Vec::with_capacity(others.len());
    for h in others {
        if !g.commutes_with(h) {
            return Err(Error::NotCommuting);
        }
        let (lh, lh_inv) = lift_cache.entry(h.clone()).or_insert_with(|| {
            let l = pin_lift(h);
            let inv = l.inverse_element();
            (l.element, inv)
        });
        let prod = lg.element.mul(lh)?.mul(&lg_inv)?.mul(lh_inv)?;
        let scalar = prod.as_scalar().expect("central commutator");
        out.push(if scalar == Root2Scalar::one() { 1 } else { -1 });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::builtins;
    use crate::linalg::{rat, ratio, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn e(n: usize, i: usize) -> CliffordElement {
        CliffordElement::basis_vector(n, i)
    }

    #[test]
    fn generators_square_to_one_and_anticommute() {
        let e1 = e(2, 0);
        let e2 = e(2, 1);
        assert_eq!(e1.mul(&e1).unwrap(), CliffordElement::one(2));
        let e12 = e1.mul(&e2).unwrap();
        let e21 = e2.mul(&e1).unwrap();
        assert_eq!(e21, e12.neg());
    }

    #[test]
    fn normalized_transposition_vector_squares_to_one() {
        // ((e1 - e2)/sqrt2)^2 = 1
        let half = Root2Scalar::inv_sqrt2();
        let v = e(2, 0).scale(&half).add(&e(2, 1).scale(&half.neg()));
        assert_eq!(v.mul(&v).unwrap(), CliffordElement::one(2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(e(2, 0).mul(&e(3, 0)).is_err());
    }

    #[test]
    fn reflection_factor_shapes() {
        let id = SignedPerm::identity(3);
        assert!(reflection_factors(&id).is_empty());
        assert!(pin_lift(&id).element == CliffordElement::one(3));

        let flip = SignedPerm::new(vec![0, 1], vec![-1, 1]).unwrap();
        let facs = reflection_factors(&flip);
        assert_eq!(facs.len(), 1);
        assert_eq!(facs[0], e(2, 0));
        assert_eq!(pin_lift(&flip).element, e(2, 0));

        let swap = SignedPerm::from_perm(vec![1, 0]).unwrap();
        let facs = reflection_factors(&swap);
        assert_eq!(facs.len(), 1);
        let sq = facs[0].mul(&facs[0]).unwrap();
        assert_eq!(sq, CliffordElement::one(2));

        // factor count parity equals the determinant
        let g = SignedPerm::new(vec![2, 0, 1], vec![-1, 1, -1]).unwrap();
        let k = reflection_factors(&g).len();
        assert_eq!(g.det() == 1, k % 2 == 0);
    }

    #[test]
    fn twisted_covering_property_dim3() {
        // u x u^-1 = det(g) (g x) on basis vectors, for all 48 elements of B_3
        let b3 = builtins::hyperoctahedral(3).unwrap();
        for g in b3.elements() {
            let lift = pin_lift(g);
            let inv = lift.inverse_element();
            let d = g.det();
            for j in 0..3 {
                let x = e(3, j);
                let conj = lift.element.mul(&x).unwrap().mul(&inv).unwrap();
                let mut expected = CliffordElement::basis_vector(3, g.image(j));
                let c = rat((d * g.sign(j)) as i64);
                expected = expected.scale(&Root2Scalar::from_rational(c));
                assert_eq!(conj, expected, "g = {g}");
            }
        }
    }

    #[test]
    fn lift_times_reverse_is_unit() {
        let b3 = builtins::hyperoctahedral(3).unwrap();
        for g in b3.elements() {
            let lift = pin_lift(g);
            let prod = lift.element.mul(&lift.inverse_element()).unwrap();
            assert_eq!(prod, CliffordElement::one(3), "g = {g}");
        }
    }

    #[test]
    fn commutator_examples() {
        let d1 = SignedPerm::new(vec![0, 1], vec![-1, 1]).unwrap();
        let d2 = SignedPerm::new(vec![0, 1], vec![1, -1]).unwrap();
        assert_eq!(commutator_sign(&d1, &d2).unwrap(), -1);
        assert_eq!(commutator_sign(&d1, &d1).unwrap(), 1);
        let id = SignedPerm::identity(2);
        assert_eq!(commutator_sign(&d1, &id).unwrap(), 1);

        let swap = SignedPerm::from_perm(vec![1, 0]).unwrap();
        assert_eq!(commutator_sign(&swap, &d1), Err(Error::NotCommuting));
    }

    #[test]
    fn commutator_is_symmetric_and_sign_choice_invariant() {
        let s4 = crate::groups::Group::symmetric(4).unwrap();
        for class in s4.conjugacy_classes() {
            let g = class.rep;
            for h in s4.centralizer(&g) {
                let s1 = commutator_sign(&g, &h).unwrap();
                let s2 = commutator_sign(&h, &g).unwrap();
                assert_eq!(s1, s2);
                // replacing a lift by its negation cancels in the commutator
                let lg = pin_lift(&g);
                let lh = pin_lift(&h);
                let alt = lg
                    .element
                    .neg()
                    .mul(&lh.element)
                    .unwrap()
                    .mul(&lg.inverse_element().neg())
                    .unwrap()
                    .mul(&lh.inverse_element())
                    .unwrap();
                let sc = alt.as_scalar().unwrap();
                let expect = if s1 == 1 {
                    Root2Scalar::one()
                } else {
                    Root2Scalar::one().neg()
                };
                assert_eq!(sc, expect);
            }
        }
    }

    #[test]
    fn commutator_multiplicative_in_second_slot() {
        // sign(g, h1 h2) = sign(g, h1) sign(g, h2) on the abelian sign group
        let sg = builtins::sign_group(3);
        let elems = sg.elements();
        for g in elems {
            for h1 in elems {
                for h2 in elems {
                    let lhs = commutator_sign(g, &h1.compose(h2)).unwrap();
                    let rhs =
                        commutator_sign(g, h1).unwrap() * commutator_sign(g, h2).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn cover_class_counts_for_small_groups() {
        // Frozen against an independent implementation of the same cover.
        let trivial = crate::groups::Group::trivial(2);
        assert_eq!(schur_cover_class_count(&trivial).unwrap(), 2);
        assert_eq!(schur_cover_class_count(&builtins::sign_group(2)).unwrap(), 5);
        assert_eq!(schur_cover_class_count(&builtins::sign_group(3)).unwrap(), 10);
        assert_eq!(schur_cover_class_count(&builtins::rotation4()).unwrap(), 8);
        assert_eq!(schur_cover_class_count(&builtins::dihedral8()).unwrap(), 7);
        assert_eq!(schur_cover_class_count(&builtins::quaternion8()).unwrap(), 10);
        assert_eq!(schur_cover_class_count(&builtins::alternating4()).unwrap(), 7);
        let s4 = crate::groups::Group::symmetric(4).unwrap();
        assert_eq!(schur_cover_class_count(&s4).unwrap(), 8);
    }

    #[test]
    fn involution_table_row_values() {
        assert_eq!(involution_table_sign(1, 1, 0), 1);
        assert_eq!(involution_table_sign(1, 1, 1), 1);
        assert_eq!(involution_table_sign(-1, -1, 1), -1);
        assert_eq!(involution_table_sign(-1, -1, 2), 1);
        assert_eq!(involution_table_sign(-1, 1, 1), 1);
        assert_eq!(involution_table_sign(-1, 1, 2), -1);
        assert_eq!(involution_table_sign(1, -1, 0), -1);
        assert_eq!(involution_table_sign(1, -1, 1), -1);
    }

    #[test]
    fn scalar_coefficients_stay_dyadic() {
        // lift coefficients are +- 2^{-k/2}: a or b part is a dyadic rational
        let g = SignedPerm::from_perm(vec![1, 2, 3, 0]).unwrap();
        let lift = pin_lift(&g);
        for (_, c) in lift.element.terms.iter() {
            let denom_a = c.a.denom();
            let denom_b = c.b.denom();
            for d in [denom_a, denom_b] {
                let mut d = d.clone();
                while (&d % 2u32).is_zero() {
                    d /= 2u32;
                }
                assert_eq!(d, 1u32.into());
            }
        }
        let q: Rational = ratio(1, 2);
        assert_eq!(q.denom(), &2u32.into());
    }

    proptest! {
        #[test]
        fn clifford_product_is_associative(
            s1 in 0u64..16, s2 in 0u64..16, s3 in 0u64..16,
            c1 in -3i64..=3, c2 in -3i64..=3, c3 in -3i64..=3,
        ) {
            let n = 4;
            let mk = |s: u64, c: i64| {
                let mut e = CliffordElement::one(n);
                e.terms.clear();
                e.terms.insert(s, Root2Scalar::from_int(1));
                e.add(&CliffordElement::scalar(n, Root2Scalar::from_int(c)))
            };
            let a = mk(s1, c1);
            let b = mk(s2, c2);
            let c = mk(s3, c3);
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
