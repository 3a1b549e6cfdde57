//! Rank formulas for the K-theory of real representation spaces and their
//! projective spaces, computed by classifying conjugacy classes
//! geometrically.
//!
//! For each class with representative `g`, the data that matters is the
//! pair of eigenspaces `V+ = ker(rho(g) - 1)` and `V- = ker(rho(g) + 1)`,
//! their dimensions and whether the centralizer acts on them by
//! orientation-preserving maps. A zero-dimensional eigenspace counts as
//! even and (vacuously) oriented, but not as strictly positive/negative.
//!
//! - Thom-space ranks count oriented classes by the parity of `dim V+`.
//! - Projective-space ranks count strictly positive/negative classes (a
//!   class that is both counts twice), and on each side the even oriented
//!   ones.
//!
//! For the symmetric group everything collapses to partition counting;
//! [`symmetric_closed_forms`] provides those expected values without any
//! group enumeration, which is what the verification battery compares
//! against.

use serde::Serialize;

use crate::groups::{Group, SignedPerm};
use crate::linalg::{rat, Matrix, Subspace};
use crate::schur;
use crate::{partitions, Result};
use num_traits::ToPrimitive;

/// Geometry of a single conjugacy class.
#[derive(Debug, Clone, Serialize)]
pub struct ClassGeometry {
    #[serde(serialize_with = "crate::schur::serialize_rep")]
    pub rep: SignedPerm,
    pub dim_pos: usize,
    pub dim_neg: usize,
    pub even: bool,
    pub oriented_pos: bool,
    pub oriented_neg: bool,
    pub positive: bool,
    pub negative: bool,
}

/// Thom-space ranks `(rank K^0, rank K^1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThomRanks {
    #[serde(rename = "K0")]
    pub k0: usize,
    #[serde(rename = "K1")]
    pub k1: usize,
}

/// Projective-space ranks `(rank K^0, rank K^1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProjectiveRanks {
    #[serde(rename = "K0")]
    pub k0: usize,
    #[serde(rename = "K1")]
    pub k1: usize,
}

/// Everything the counting formulas produce for one group, plus the
/// consistency equations tying the three independent computations together.
#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    /// Number of conjugacy classes.
    #[serde(rename = "C")]
    pub class_count: usize,
    /// Strictly positive classes plus strictly negative classes.
    #[serde(rename = "A")]
    pub a: usize,
    /// Even oriented ones among them, counted on each side separately.
    #[serde(rename = "O")]
    pub o: usize,
    /// Strictly positive oriented classes with `dim V+` even.
    #[serde(rename = "P")]
    pub p: usize,
    /// Strictly positive oriented classes with `dim V+` odd.
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "K0_thom")]
    pub k0_thom: usize,
    #[serde(rename = "K1_thom")]
    pub k1_thom: usize,
    #[serde(rename = "K0_proj")]
    pub k0_proj: usize,
    #[serde(rename = "K1_proj")]
    pub k1_proj: usize,
    #[serde(rename = "R_V")]
    pub r_v: usize,
    #[serde(rename = "R_V1")]
    pub r_v1: usize,
    /// `R_V1 - 2C = O - A` (always expected to hold).
    pub consistency_projective: bool,
    /// `R_V1 - R_V = K0_thom - K1_thom` (always expected to hold).
    pub consistency_euler: bool,
    /// Whether `R_V1 - R_V = P - N` is expected to hold: it can fail only
    /// when some class has a zero-dimensional fixed space, which
    /// contributes to `K0_thom` but is not strictly positive.
    pub positive_difference_applicable: bool,
    /// Whether `R_V1 - R_V = P - N` actually holds.
    pub positive_difference_holds: bool,
}

/// Closed-form expected ranks for the symmetric group on `n` letters,
/// derived purely from partition counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForms {
    pub n: u32,
    #[serde(rename = "K0_thom")]
    pub k0_thom: usize,
    #[serde(rename = "K1_thom")]
    pub k1_thom: usize,
    #[serde(rename = "K0_proj")]
    pub k0_proj: usize,
    #[serde(rename = "K1_proj")]
    pub k1_proj: usize,
    #[serde(rename = "R_V")]
    pub r_v: usize,
    #[serde(rename = "R_V1")]
    pub r_v1: usize,
}

fn eigenspace(g: &SignedPerm, eigenvalue: i64) -> Subspace {
    let n = g.dim();
    let shift = {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, rat(eigenvalue));
        }
        m
    };
    g.matrix().sub(&shift).kernel()
}

fn oriented_on(group: &Group, g: &SignedPerm, space: &Subspace) -> bool {
    if space.dim() == 0 {
        return true;
    }
    for h in group.elements() {
        if !h.commutes_with(g) {
            continue;
        }
        let det = h
            .matrix()
            .restrict_to(space)
            .expect("centralizer preserves the eigenspace")
            .det();
        if det != rat(1) {
            return false;
        }
    }
    true
}

/// Computes the class geometry of `g` inside `group`. The result only
/// depends on the conjugacy class of `g`.
pub fn analyze_class(group: &Group, g: &SignedPerm) -> ClassGeometry {
    let plus = eigenspace(g, 1);
    let minus = eigenspace(g, -1);
    ClassGeometry {
        rep: g.clone(),
        dim_pos: plus.dim(),
        dim_neg: minus.dim(),
        even: plus.dim().is_multiple_of(2),
        oriented_pos: oriented_on(group, g, &plus),
        oriented_neg: oriented_on(group, g, &minus),
        positive: plus.dim() > 0,
        negative: minus.dim() > 0,
    }
}

/// Geometry of every conjugacy class, in canonical class order.
pub fn analyze_all_classes(group: &Group) -> Vec<ClassGeometry> {
    group
        .conjugacy_classes()
        .iter()
        .map(|c| analyze_class(group, &c.rep))
        .collect()
}

/// Thom-space ranks: oriented classes split by the parity of `dim V+`.
pub fn thom_ranks(group: &Group) -> ThomRanks {
    let mut k0 = 0;
    let mut k1 = 0;
    for geo in analyze_all_classes(group) {
        if geo.oriented_pos {
            if geo.dim_pos % 2 == 0 {
                k0 += 1;
            } else {
                k1 += 1;
            }
        }
    }
    ThomRanks { k0, k1 }
}

/// Projective-space ranks: `K0` counts strictly positive and strictly
/// negative classes (both sides independently), `K1` the even oriented
/// ones among them.
pub fn projective_ranks(group: &Group) -> ProjectiveRanks {
    let mut a = 0;
    let mut o = 0;
    for geo in analyze_all_classes(group) {
        if geo.positive {
            a += 1;
            if geo.dim_pos % 2 == 0 && geo.oriented_pos {
                o += 1;
            }
        }
        if geo.negative {
            a += 1;
            if geo.dim_neg % 2 == 0 && geo.oriented_neg {
                o += 1;
            }
        }
    }
    ProjectiveRanks { k0: a, k1: o }
}

/// The full report: all counting quantities plus the consistency equations.
/// Failures of the always-expected equations are reported as data, not
/// panics.
pub fn count_report(group: &Group) -> Result<RankReport> {
    let geos = analyze_all_classes(group);
    let class_count = geos.len();
    let mut a = 0;
    let mut o = 0;
    let mut p = 0;
    let mut n = 0;
    let mut k0_thom = 0;
    let mut k1_thom = 0;
    let mut any_zero_fixed = false;
    for geo in &geos {
        if geo.dim_pos == 0 {
            any_zero_fixed = true;
        }
        if geo.oriented_pos {
            if geo.dim_pos % 2 == 0 {
                k0_thom += 1;
            } else {
                k1_thom += 1;
            }
        }
        if geo.positive {
            a += 1;
            if geo.dim_pos % 2 == 0 && geo.oriented_pos {
                o += 1;
            }
            if geo.oriented_pos {
                if geo.dim_pos % 2 == 0 {
                    p += 1;
                } else {
                    n += 1;
                }
            }
        }
        if geo.negative {
            a += 1;
            if geo.dim_neg % 2 == 0 && geo.oriented_neg {
                o += 1;
            }
        }
    }
    let ranks = schur::crossed_product_ranks(group)?;
    let r_v = ranks.r_v;
    let r_v1 = ranks.r_v1;
    let consistency_projective = r_v1 as i64 - 2 * class_count as i64 == o as i64 - a as i64;
    let consistency_euler = r_v1 as i64 - r_v as i64 == k0_thom as i64 - k1_thom as i64;
    let positive_difference_holds = r_v1 as i64 - r_v as i64 == p as i64 - n as i64;
    Ok(RankReport {
        class_count,
        a,
        o,
        p,
        n,
        k0_thom,
        k1_thom,
        k0_proj: a,
        k1_proj: o,
        r_v,
        r_v1,
        consistency_projective,
        consistency_euler,
        positive_difference_applicable: !any_zero_fixed,
        positive_difference_holds,
    })
}

/// Expected values for the symmetric group on `n` letters from partition
/// counts alone: Thom ranks `(p_n, i_n)`, projective ranks
/// `(2P(n) - j_n, p_n)` and crossed-product ranks
/// `(p_n + 2 i_n, 2 p_n + i_n)`.
pub fn symmetric_closed_forms(n: u32) -> ClosedForms {
    let st = partitions::stats(n);
    let total = st.total.to_usize().expect("desk-scale count");
    let p = st.distinct_even.to_usize().expect("desk-scale count");
    let i = st.distinct_odd.to_usize().expect("desk-scale count");
    let j = st.odd_parts.to_usize().expect("desk-scale count");
    ClosedForms {
        n,
        k0_thom: p,
        k1_thom: i,
        k0_proj: 2 * total - j,
        k1_proj: p,
        r_v: p + 2 * i,
        r_v1: 2 * p + i,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::builtins;
    use crate::groups::Group;

    fn s3_class_rep(cycle: &[usize]) -> SignedPerm {
        SignedPerm::from_perm(cycle.to_vec()).unwrap()
    }

    #[test]
    fn s3_class_geometries() {
        let s3 = Group::symmetric(3).unwrap();

        let id = analyze_class(&s3, &SignedPerm::identity(3));
        assert_eq!((id.dim_pos, id.dim_neg), (3, 0));
        assert!(!id.even);
        assert!(!id.oriented_pos); // transpositions act with det -1 on R^3
        assert!(id.positive && !id.negative);

        let swap = analyze_class(&s3, &s3_class_rep(&[1, 0, 2]));
        assert_eq!((swap.dim_pos, swap.dim_neg), (2, 1));
        assert!(swap.even && swap.oriented_pos);
        assert!(swap.negative);
        assert!(!swap.oriented_neg);

        let cycle = analyze_class(&s3, &s3_class_rep(&[1, 2, 0]));
        assert_eq!((cycle.dim_pos, cycle.dim_neg), (1, 0));
        assert!(!cycle.even && cycle.oriented_pos);
    }

    #[test]
    fn class_geometry_is_conjugation_invariant() {
        let groups = [
            Group::symmetric(4).unwrap(),
            builtins::dihedral8(),
            builtins::quaternion8(),
        ];
        for g in &groups {
            for class in g.conjugacy_classes() {
                let base = analyze_class(g, &class.rep);
                for x in g.generators() {
                    let conj = class.rep.conjugate_by(x);
                    let other = analyze_class(g, &conj);
                    assert_eq!(base.dim_pos, other.dim_pos);
                    assert_eq!(base.dim_neg, other.dim_neg);
                    assert_eq!(base.oriented_pos, other.oriented_pos);
                    assert_eq!(base.oriented_neg, other.oriented_neg);
                }
            }
        }
    }

    #[test]
    fn thom_ranks_examples() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(thom_ranks(&s3), ThomRanks { k0: 1, k1: 1 });
        let s4 = Group::symmetric(4).unwrap();
        assert_eq!(thom_ranks(&s4), ThomRanks { k0: 1, k1: 1 });
        let trivial2 = Group::trivial(2);
        assert_eq!(thom_ranks(&trivial2), ThomRanks { k0: 1, k1: 0 });
    }

    #[test]
    fn oriented_classes_of_symmetric_groups_have_distinct_cycle_lengths() {
        for n in 1..=7 {
            let g = Group::symmetric(n).unwrap();
            for class in g.conjugacy_classes() {
                let geo = analyze_class(&g, &class.rep);
                let t = class.cycle_type.unwrap();
                assert_eq!(geo.oriented_pos, t.is_distinct(), "S_{n} type {t}");
            }
        }
    }

    #[test]
    fn projective_ranks_examples() {
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(projective_ranks(&s3), ProjectiveRanks { k0: 4, k1: 1 });
        let s4 = Group::symmetric(4).unwrap();
        assert_eq!(projective_ranks(&s4), ProjectiveRanks { k0: 8, k1: 1 });
        let trivial1 = Group::trivial(1);
        assert_eq!(projective_ranks(&trivial1), ProjectiveRanks { k0: 1, k1: 0 });
    }

    #[test]
    fn exotic_group_ranks_frozen() {
        // Frozen from an independent implementation of the same counting.
        assert_eq!(thom_ranks(&builtins::quaternion8()), ThomRanks { k0: 5, k1: 0 });
        assert_eq!(thom_ranks(&builtins::alternating4()), ThomRanks { k0: 3, k1: 0 });
        assert_eq!(thom_ranks(&builtins::rotation4()), ThomRanks { k0: 4, k1: 0 });
        assert_eq!(thom_ranks(&builtins::dihedral8()), ThomRanks { k0: 2, k1: 0 });
        assert_eq!(
            thom_ranks(&builtins::hyperoctahedral(3).unwrap()),
            ThomRanks { k0: 3, k1: 0 }
        );
        assert_eq!(
            projective_ranks(&builtins::quaternion8()),
            ProjectiveRanks { k0: 2, k1: 2 }
        );
        assert_eq!(
            projective_ranks(&builtins::alternating4()),
            ProjectiveRanks { k0: 5, k1: 3 }
        );
        assert_eq!(
            projective_ranks(&builtins::hyperoctahedral(3).unwrap()),
            ProjectiveRanks { k0: 14, k1: 0 }
        );
    }

    #[test]
    fn s3_count_report() {
        let s3 = Group::symmetric(3).unwrap();
        let r = count_report(&s3).unwrap();
        assert_eq!((r.class_count, r.a, r.o, r.p, r.n), (3, 4, 1, 1, 1));
        assert_eq!((r.r_v, r.r_v1), (3, 3));
        assert!(r.consistency_projective);
        assert!(r.consistency_euler);
        assert!(r.positive_difference_applicable);
        assert!(r.positive_difference_holds);
    }

    #[test]
    fn consistency_equations_hold_on_the_battery() {
        let groups = vec![
            Group::symmetric(4).unwrap(),
            builtins::sign_group(2),
            builtins::sign_group(3),
            builtins::rotation4(),
            builtins::dihedral8(),
            builtins::quaternion8(),
            builtins::alternating4(),
            Group::symmetric(2).unwrap().extend_with_reflection().unwrap(),
        ];
        for g in groups {
            let r = count_report(&g).unwrap();
            assert!(r.consistency_projective, "projective equation: {r:?}");
            assert!(r.consistency_euler, "euler equation: {r:?}");
            if r.positive_difference_applicable {
                assert!(r.positive_difference_holds, "positive-difference: {r:?}");
            }
        }
    }

    #[test]
    fn sign_group_2_report_shows_inapplicable_positive_difference() {
        // -I has a zero-dimensional fixed space: it contributes to K0_thom
        // but is not strictly positive, so the positive-difference equation
        // is out of scope for this group.
        let r = count_report(&builtins::sign_group(2)).unwrap();
        assert!(!r.positive_difference_applicable);
        assert!(!r.positive_difference_holds);
        assert!(r.consistency_projective && r.consistency_euler);
        assert_eq!((r.r_v, r.r_v1), (1, 2));
        assert_eq!((r.k0_thom, r.k1_thom), (1, 0));
    }

    #[test]
    fn special_orthogonal_even_dimension_has_no_odd_part() {
        for g in [
            builtins::rotation4(),
            builtins::quaternion8(),
            builtins::alternating4(),
        ] {
            assert!(g.is_special_orthogonal());
            assert_eq!(g.dim() % 2, 0);
            let ranks = thom_ranks(&g);
            assert_eq!(ranks.k1, 0);
            for geo in analyze_all_classes(&g) {
                assert_eq!(geo.dim_pos % 2, 0);
            }
        }
    }

    #[test]
    fn closed_forms_match_geometric_computation() {
        for n in 1..=5u32 {
            let forms = symmetric_closed_forms(n);
            let g = Group::symmetric(n as usize).unwrap();
            let thom = thom_ranks(&g);
            let proj = projective_ranks(&g);
            let ranks = schur::crossed_product_ranks(&g).unwrap();
            assert_eq!((thom.k0, thom.k1), (forms.k0_thom, forms.k1_thom), "S_{n}");
            assert_eq!((proj.k0, proj.k1), (forms.k0_proj, forms.k1_proj), "S_{n}");
            assert_eq!((ranks.r_v, ranks.r_v1), (forms.r_v, forms.r_v1), "S_{n}");
        }
    }

    #[test]
    fn closed_forms_small_values() {
        assert_eq!(
            symmetric_closed_forms(1),
            ClosedForms { n: 1, k0_thom: 0, k1_thom: 1, k0_proj: 1, k1_proj: 0, r_v: 2, r_v1: 1 }
        );
        assert_eq!(
            symmetric_closed_forms(3),
            ClosedForms { n: 3, k0_thom: 1, k1_thom: 1, k0_proj: 4, k1_proj: 1, r_v: 3, r_v1: 3 }
        );
        assert_eq!(
            symmetric_closed_forms(6),
            ClosedForms { n: 6, k0_thom: 2, k1_thom: 2, k0_proj: 18, k1_proj: 2, r_v: 6, r_v1: 6 }
        );
    }
}
