//! JSON response shapes. Field order is declaration order, which keeps
//! the emitted bytes deterministic for a given input.

use serde::Serialize;
use serde_json::Value;

use ushift_core::io::{
    BlockSequenceJson, FactorialSeriesJson, ScalarJson, SeriesJson, VectorJson,
};

#[derive(Serialize)]
pub struct VectorOut {
    pub vector: VectorJson,
    pub norm: Value,
}

#[derive(Serialize)]
pub struct CyclicStepOut {
    pub k: usize,
    pub error: Value,
}

#[derive(Serialize)]
pub struct CyclicOut {
    pub kind: &'static str,
    pub k0: usize,
    pub vector: VectorJson,
    pub errors: Vec<CyclicStepOut>,
}

#[derive(Serialize)]
pub struct DensifyOut {
    pub k0: usize,
    pub distance: Value,
    pub vector: VectorJson,
}

#[derive(Serialize)]
pub struct NormOut {
    pub norm: Value,
    pub tail_bound: Value,
}

#[derive(Serialize)]
pub struct ReduceOut {
    pub quotient: SeriesJson,
    pub remainder: SeriesJson,
}

#[derive(Serialize)]
pub struct MemberOut {
    pub member: bool,
    pub remainder_norm: Value,
}

#[derive(Serialize)]
pub struct DividesOut {
    pub divides: bool,
}

#[derive(Serialize)]
pub struct CommutantOut {
    pub cutoff: usize,
    pub error: Value,
    pub symbol: SeriesJson,
}

#[derive(Serialize)]
pub struct ScalarOut {
    pub scalar: ScalarJson,
}

#[derive(Serialize)]
pub struct T3Out {
    pub series: FactorialSeriesJson,
    pub norm: Value,
}

#[derive(Serialize)]
pub struct EmbedOut {
    pub sequence: BlockSequenceJson,
    pub norm: Value,
    pub isometry: bool,
}

#[derive(Serialize)]
pub struct UniversalOut {
    pub conjugacy_holds: bool,
    pub first_mismatch: Option<(usize, usize)>,
    pub isometry_holds: bool,
    pub vector_norm: Value,
    pub embedded_norm: Value,
    pub range_invariant: bool,
    pub blocks_checked: usize,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct DemoReport {
    pub demo: &'static str,
    pub p: u64,
    pub prec: u32,
    pub len: usize,
    pub trials: usize,
    pub seed: u64,
    pub report: Vec<String>,
    pub pass: bool,
}
