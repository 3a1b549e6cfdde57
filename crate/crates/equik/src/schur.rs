//! Which conjugacy classes split ("are decomposed") in the Pin-induced
//! double cover, and the crossed-product ranks that count them.
//!
//! A class is decomposed when the lift of a representative is not conjugate
//! to its negative, equivalently when no centralizer element has commutator
//! sign `-1` against it. Two independent routes decide this:
//!
//! - [`is_decomposed_oracle`]: brute force in the Clifford algebra, and
//! - [`is_decomposed_criterion`]: the determinant test on the fixed space
//!   `V+ = ker(rho(g) - 1)`, split on `det(g)`.
//!
//! The two must agree class by class; the verification battery asserts it.

use serde::Serialize;

use crate::clifford;
use crate::groups::{Group, SignedPerm};
use crate::linalg::{rat, Matrix};
use crate::Result;

/// Per-class decomposition verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct ClassDecomposition {
    #[serde(serialize_with = "crate::schur::serialize_rep")]
    pub rep: SignedPerm,
    pub size: usize,
    pub det: i8,
    pub criterion: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

pub(crate) fn serialize_rep<S>(rep: &SignedPerm, s: S) -> std::result::Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    crate::groups::SignedPermJson::from_element(rep).serialize(s)
}

/// Full report over the conjugacy classes of a group.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub order: usize,
    pub class_count: usize,
    pub decomposed_count: usize,
    pub classes: Vec<ClassDecomposition>,
}

/// Crossed-product ranks: the number of simple factors of the twisted
/// algebras built on `R^n` and `R^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossedProductRanks {
    #[serde(rename = "R_V")]
    pub r_v: usize,
    #[serde(rename = "R_V1")]
    pub r_v1: usize,
}

/// Brute-force verdict: decomposed iff every centralizer element has
/// commutator sign `+1` against `g` in the Clifford algebra.
pub fn is_decomposed_oracle(group: &Group, g: &SignedPerm) -> Result<bool> {
    let centralizer = group.centralizer(g);
    let signs = clifford::commutator_signs_against(g, &centralizer)?;
    Ok(signs.iter().all(|&s| s == 1))
}

/// Determinant criterion: for `det(g) = +1` require `det(h) = det(h|V+)`
/// for every centralizer element `h`; for `det(g) = -1` require
/// `det(h|V+) = +1` instead. Short-circuits on the first violation.
pub fn is_decomposed_criterion(group: &Group, g: &SignedPerm) -> bool {
    let n = group.dim();
    let fixed = g.matrix().sub(&Matrix::identity(n)).kernel();
    let even_branch = g.det() == 1;
    for h in group.elements() {
        if !h.commutes_with(g) {
            continue;
        }
        let restricted_det = h
            .matrix()
            .restrict_to(&fixed)
            .expect("centralizer preserves the fixed space")
            .det();
        let ok = if even_branch {
            restricted_det == rat(h.det() as i64)
        } else {
            restricted_det == rat(1)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Number of decomposed classes, by the determinant criterion.
pub fn decomposed_count(group: &Group) -> usize {
    group
        .conjugacy_classes()
        .iter()
        .filter(|c| is_decomposed_criterion(group, &c.rep))
        .count()
}

/// Per-class report; the Clifford oracle is included when `with_oracle`.
pub fn decomposition_report(group: &Group, with_oracle: bool) -> Result<DecompositionReport> {
    let classes = group.conjugacy_classes();
    let mut rows = Vec::with_capacity(classes.len());
    let mut decomposed = 0;
    for class in &classes {
        let criterion = is_decomposed_criterion(group, &class.rep);
        let oracle = if with_oracle {
            Some(is_decomposed_oracle(group, &class.rep)?)
        } else {
            None
        };
        let agreement = oracle.map(|o| o == criterion);
        if criterion {
            decomposed += 1;
        }
        rows.push(ClassDecomposition {
            rep: class.rep.clone(),
            size: class.size,
            det: class.rep.det(),
            criterion,
            oracle,
            agreement,
        });
    }
    Ok(DecompositionReport {
        order: group.order(),
        class_count: classes.len(),
        decomposed_count: decomposed,
        classes: rows,
    })
}

/// The pair of crossed-product ranks for `G` acting on `R^n`.
///
/// For `n` even the rank over `R^n` counts the decomposed classes of `G`
/// itself and the rank over `R^{n+1}` counts those of `Z/2 x G` in
/// `O(n+1)`; for `n` odd the two swap roles.
pub fn crossed_product_ranks(group: &Group) -> Result<CrossedProductRanks> {
    let own = decomposed_count(group);
    let extended = decomposed_count(&group.extend_with_reflection()?);
    if group.dim().is_multiple_of(2) {
        Ok(CrossedProductRanks {
            r_v: own,
            r_v1: extended,
        })
    } else {
        Ok(CrossedProductRanks {
            r_v: extended,
            r_v1: own,
        })
    }
}
