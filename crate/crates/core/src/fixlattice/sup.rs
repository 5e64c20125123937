use serde::Serialize;

use super::report::fixed_space_of_family;
use crate::conegeom::{least_element_above, least_upper_bound_in};
use crate::error::{Error, Result};
use crate::exactnum::{sup_all, QVector};
use crate::opcore::{contraction_check, super_fixed_check, OperatorFamily};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupInFix {
    pub g_f: QVector,
    pub g_e: QVector,
}

fn require_contractive(family: &OperatorFamily) -> Result<()> {
    match family.members().iter().position(|t| !contraction_check(t)) {
        Some(i) => Err(Error::Precondition(format!("member {i} is not contractive"))),
        None => Ok(()),
    }
}

/// Supremum of `G` inside the common fixed space, together with the
/// ambient supremum. For a commuting family of positive contractions the
/// former always exists, dominates the latter and has the same norm when
/// `g_E >= 0`; any failure is a defect.
pub fn sup_in_fixspace(family: &OperatorFamily, g: &[QVector]) -> Result<SupInFix> {
    require_contractive(family)?;
    let f = fixed_space_of_family(family)?;
    let g_f = least_upper_bound_in(&f, g)?.ok_or_else(|| {
        Error::TheoremViolation("family of positive contractions without a supremum in its fixed space".into())
    })?;
    let g_e = sup_all(g).expect("nonempty family checked above");
    if !g_f.dominates(&g_e) {
        return Err(Error::TheoremViolation(format!("g_F = {g_f} does not dominate g_E = {g_e}")));
    }
    let norm = family.norm_tag();
    if g_e.is_nonnegative() && norm.vector_norm(&g_f) != norm.vector_norm(&g_e) {
        return Err(Error::TheoremViolation(format!(
            "‖g_F‖ = {} differs from ‖g_E‖ = {}",
            norm.vector_norm(&g_f),
            norm.vector_norm(&g_e)
        )));
    }
    Ok(SupInFix { g_f, g_e })
}

/// Smallest common fixed vector above a super-fixed vector `g`.
pub fn least_fixed_above(family: &OperatorFamily, g: &QVector) -> Result<QVector> {
    require_contractive(family)?;
    for (i, t) in family.members().iter().enumerate() {
        if !super_fixed_check(t, g)? {
            return Err(Error::NotSuperFixed(i));
        }
    }
    let f = fixed_space_of_family(family)?;
    let out = least_element_above(&f, g)?.ok_or_else(|| {
        Error::TheoremViolation("no fixed vector above a super-fixed vector".into())
    })?;
    let norm = family.norm_tag();
    if g.is_nonnegative() && norm.vector_norm(&out) != norm.vector_norm(g) {
        return Err(Error::TheoremViolation(format!(
            "least fixed vector above {g} has norm {} instead of {}",
            norm.vector_norm(&out),
            norm.vector_norm(g)
        )));
    }
    Ok(out)
}
