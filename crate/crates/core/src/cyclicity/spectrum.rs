use serde::Serialize;

use crate::error::Result;
use crate::exactnum::cyclotomic::{cyclotomic, euler_phi, orders_up_to_degree, power_order};
use crate::exactnum::{char_poly, unit_circle_root_count, QPolynomial};
use crate::opcore::{contraction_check, PositiveMatrixOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

/// Eigenvalue data for the primitive `order`-th roots of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderMultiplicity {
    pub order: u64,
    /// Geometric multiplicity of each primitive root of this order.
    pub multiplicity: usize,
    /// Algebraic multiplicity of each primitive root of this order.
    pub algebraic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootOfUnitySpectrum {
    pub orders: Vec<OrderMultiplicity>,
    /// Unimodular eigenvalues that are not roots of unity.
    pub non_cyclotomic_boundary: bool,
    pub char_poly: QPolynomial,
}

impl RootOfUnitySpectrum {
    pub fn multiplicity(&self, order: u64) -> usize {
        self.orders
            .iter()
            .find(|o| o.order == order)
            .map_or(0, |o| o.multiplicity)
    }
}

pub fn root_of_unity_spectrum(t: &PositiveMatrixOperator) -> Result<RootOfUnitySpectrum> {
    let m = t.matrix();
    let n = m.nrows();
    let cp = char_poly(m)?;
    let mut orders = vec![];
    let mut on_circle = 0usize;
    for order in orders_up_to_degree(n) {
        let phi = cyclotomic(order);
        let mut algebraic = 0;
        let mut rest = cp.clone();
        while let Some(q) = rest.exact_div(&phi) {
            algebraic += 1;
            rest = q;
        }
        if algebraic == 0 {
            continue;
        }
        let kernel_dim = n - m.eval_poly(phi.coeffs()).rank();
        let deg = euler_phi(order) as usize;
        debug_assert_eq!(kernel_dim % deg, 0);
        on_circle += algebraic * deg;
        orders.push(OrderMultiplicity {
            order,
            multiplicity: kernel_dim / deg,
            algebraic,
        });
    }
    let boundary = unit_circle_root_count(&cp)?;
    Ok(RootOfUnitySpectrum {
        orders,
        non_cyclotomic_boundary: boundary.count != on_circle || !boundary.inseparable.is_empty(),
        char_poly: cp,
    })
}

/// `mult(order n) <= mult(order n / gcd(n, k))`, i.e. the eigenvalue
/// `λ^k` is at least as large as `λ` for a primitive `n`-th root `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionEstimate {
    pub n: u64,
    pub k: u64,
    pub mult_at_n: usize,
    pub power_order: u64,
    pub mult_at_power_order: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicityReport {
    pub contractive: bool,
    pub spectrum: RootOfUnitySpectrum,
    pub estimates: Vec<DimensionEstimate>,
    pub verdict: Verdict,
}

/// Checks the dimension estimate for every root-of-unity eigenvalue and
/// every power. `Fail` on a positive contraction is a defect.
pub fn verify_dimension_cyclicity(t: &PositiveMatrixOperator) -> Result<CyclicityReport> {
    let spectrum = root_of_unity_spectrum(t)?;
    let contractive = contraction_check(t);
    let mut estimates = vec![];
    for o in &spectrum.orders {
        for k in 0..o.order {
            let p = power_order(o.order, k);
            let mult_p = spectrum.multiplicity(p);
            estimates.push(DimensionEstimate {
                n: o.order,
                k,
                mult_at_n: o.multiplicity,
                power_order: p,
                mult_at_power_order: mult_p,
                holds: mult_p >= o.multiplicity,
            });
        }
    }
    let verdict = if !contractive {
        Verdict::Inapplicable
    } else if estimates.iter().all(|e| e.holds) && !spectrum.non_cyclotomic_boundary {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CyclicityReport {
        contractive,
        spectrum,
        estimates,
        verdict,
    })
}
