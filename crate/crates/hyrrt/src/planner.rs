//! Placeholder.
pub fn plan() {}
pub struct MotionPlan;
pub struct PlannerConfig;
pub struct RunStats;
pub enum PlanMode {}
pub enum Provenance {}
