//! Motion planning for hybrid dynamical systems.
//!
//! A hybrid system combines continuous evolution (flow, `x' = f(x, u)` on a
//! flow set `C`) with discrete transitions (jumps, `x+ = g(x, u)` on a jump
//! set `D`). Solutions are parameterized by hybrid time `(t, j)`: elapsed
//! ordinary time `t` and jump count `j`.
//!
//! The crate provides:
//!
//! - [`hybrid_time`]: hybrid time domains, sampled hybrid arcs, hybrid
//!   inputs, solution pairs, and the concatenation/reversal algebra on them.
//! - [`hybrid_system`]: system definitions `(C, f, D, g)`, construction of
//!   the backward-in-time system, a solution-pair validator, and
//!   sampling-based Lipschitz-constant estimation.
//! - [`propagation`]: fixed-step RK4 flow integration with flow-set exit
//!   localization, jump application, single-extension primitives for tree
//!   growth, and the input-replay reconstruction simulator.
//! - [`planner`]: search trees, the bidirectional planning loop, overlap
//!   detection between the forward and backward trees (state matching in
//!   the flow set, and connection via a solved jump input), and motion-plan
//!   assembly.
//! - [`systems`]: the built-in system catalog (actuated bouncing ball and a
//!   jump-free integrator fixture).
//! - [`serialize`]: the canonical JSON wire format for solution pairs and
//!   plan files.

pub mod hybrid_system;
pub mod hybrid_time;
pub mod planner;
pub mod propagation;
pub mod serialize;
pub mod systems;
pub(crate) mod vecn;

pub use hybrid_system::{
    make_backward_system, validate_solution_pair, Direction, HybridSystemDef, ProblemDef,
    ValidationReport, ValidationTolerances,
};
pub use hybrid_time::{HybridArc, HybridInput, HybridTimeDomain, SolutionPair};
pub use planner::{plan, MotionPlan, PlanMode, PlannerConfig, Provenance, RunStats};
