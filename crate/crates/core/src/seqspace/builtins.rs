//! The three sequence-space operators used as worked examples.

use super::operator::{CoordRef, GridSource, LinearFunctionalSpec, ShiftInsertOperator};
use super::vector::{ChainSpec, ChainValue, IndexSchema, SpaceTag, SymbolicVector};
use crate::exactnum::{q, qi, QMatrix};

pub const BUILTIN_NAMES: [&str; 3] = ["e41", "e42", "e43"];

pub fn builtin(name: &str) -> Option<ShiftInsertOperator> {
    match name {
        "e41" => Some(e41()),
        "e42" => Some(e42()),
        "e43" => Some(e43()),
        _ => None,
    }
}

fn chain(name: &str, space: SpaceTag) -> ChainSpec {
    ChainSpec {
        name: name.into(),
        space,
    }
}

fn average_of_finite() -> LinearFunctionalSpec {
    LinearFunctionalSpec::new(vec![(CoordRef::Finite(0), q(1, 2)), (CoordRef::Finite(1), q(1, 2))])
}

/// Contraction on `c0({-2,-1} ∪ N0)`: `-2` and `-1` are fixed, the chain
/// shifts and position 0 receives the average of `f(-1)` and `f(-2)`.
pub fn e41() -> ShiftInsertOperator {
    let schema = IndexSchema {
        finite_coords: vec!["-2".into(), "-1".into()],
        chains: vec![chain("k", SpaceTag::CZero)],
        grid: None,
    };
    ShiftInsertOperator::new(schema, QMatrix::identity(2), vec![average_of_finite()], None)
        .expect("valid built-in")
}

/// Operator on `R^3 x l∞ x l∞`: the Markov matrix on `R^3`, the `g` chain
/// fed by `(f1 + f3)/2` and the `h` chain fed by the limit of `g`.
pub fn e42() -> ShiftInsertOperator {
    let schema = IndexSchema {
        finite_coords: vec!["f1".into(), "f2".into(), "f3".into()],
        chains: vec![chain("g", SpaceTag::LInfty), chain("h", SpaceTag::LInfty)],
        grid: None,
    };
    let s = QMatrix::from_rows(vec![
        vec![qi(1), qi(0), qi(0)],
        vec![q(1, 3), q(1, 3), q(1, 3)],
        vec![qi(0), qi(0), qi(1)],
    ])
    .expect("square");
    let g_src = LinearFunctionalSpec::new(vec![(CoordRef::Finite(0), q(1, 2)), (CoordRef::Finite(2), q(1, 2))]);
    let h_src = LinearFunctionalSpec::new(vec![(CoordRef::ChainTail(0), qi(1))]);
    ShiftInsertOperator::new(schema, s, vec![g_src, h_src], None).expect("valid built-in")
}

/// Power-bounded operator on `l∞({-2,-1} ∪ N0 x N0)` of norm 2: swaps `-2`
/// and `-1`, feeds row 0 with their average and row `k` with twice the
/// limit of row `k - 1`.
pub fn e43() -> ShiftInsertOperator {
    let schema = IndexSchema {
        finite_coords: vec!["-2".into(), "-1".into()],
        chains: vec![],
        grid: Some(chain("grid", SpaceTag::LInfty)),
    };
    let swap = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
    let grid = GridSource {
        row0: average_of_finite(),
        gain: qi(2),
    };
    ShiftInsertOperator::new(schema, swap, vec![], Some(grid)).expect("valid built-in")
}

/// `(|f̂|, 0, 0)` with `f̂ = (1, 0, -1)`.
pub fn e42_start() -> SymbolicVector {
    SymbolicVector::new(vec![qi(1), qi(0), qi(1)], vec![ChainValue::zero(), ChainValue::zero()], vec![])
}

/// `f(-2) = 1`, `f(-1) = -1`, zero grid.
pub fn e43_f() -> SymbolicVector {
    SymbolicVector::new(vec![qi(1), qi(-1)], vec![], vec![])
}
