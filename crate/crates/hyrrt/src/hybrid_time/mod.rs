//! Hybrid time domains and functions defined on them.
//!
//! A hybrid time domain is a finite union of intervals
//! `[t_j, t_{j+1}] x {j}`: ordinary time advances within a segment, the
//! jump index `j` advances between segments. Segments may be instantaneous
//! (`t_start == t_end`), which represents several jumps at one time.
//!
//! [`HybridArc`] is a state trajectory sampled on such a domain,
//! [`HybridInput`] an input signal (piecewise-constant during flow, one
//! value per jump), and [`SolutionPair`] an arc and input sharing one
//! domain. The pair supports the two operations the planner is built on:
//! concatenation (gluing a pair onto the end of another) and reversal
//! (mirroring in hybrid time).

mod arc;
mod input;
mod pair;

pub use arc::{ArcSegment, HybridArc};
pub use input::{FlowPiece, HybridInput};
pub use pair::{ConcatError, SolutionPair, DEFAULT_GLUE_TOL};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HybridTimeError {
    #[error("empty domain")]
    EmptyDomain,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hybrid time ({t}, {j}) out of domain")]
    OutOfDomain { t: f64, j: usize },
    #[error("arc and input domains differ")]
    DomainMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// One interval `[t_start, t_end] x {jump_index}` of a hybrid time domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSegment {
    pub jump_index: usize,
    pub t_start: f64,
    pub t_end: f64,
}

impl TimeSegment {
    /// Whether the interval has zero length.
    pub fn is_instantaneous(&self) -> bool {
        self.t_start == self.t_end
    }

    /// Whether the interval has positive length (nonempty interior).
    pub fn has_interior(&self) -> bool {
        self.t_end > self.t_start
    }
}

/// A compact hybrid time domain: finitely many ordered segments, starting
/// at hybrid time `(0, 0)`, with consecutive jump indices and matching
/// interval endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct HybridTimeDomain {
    segments: Vec<TimeSegment>,
}

impl HybridTimeDomain {
    pub fn new(segments: Vec<TimeSegment>) -> Result<Self, HybridTimeError> {
        if segments.is_empty() {
            return Err(HybridTimeError::EmptyDomain);
        }
        if segments[0].t_start != 0.0 {
            return Err(HybridTimeError::InvalidDomain(format!(
                "first segment must start at t = 0, got {}",
                segments[0].t_start
            )));
        }
        for (k, seg) in segments.iter().enumerate() {
            if seg.jump_index != k {
                return Err(HybridTimeError::InvalidDomain(format!(
                    "jump indices must be consecutive from 0: segment {k} has index {}",
                    seg.jump_index
                )));
            }
            if !(seg.t_start.is_finite() && seg.t_end.is_finite()) {
                return Err(HybridTimeError::InvalidDomain(
                    "segment endpoints must be finite".into(),
                ));
            }
            if !(0.0 <= seg.t_start && seg.t_start <= seg.t_end) {
                return Err(HybridTimeError::InvalidDomain(format!(
                    "segment {k} has invalid interval [{}, {}]",
                    seg.t_start, seg.t_end
                )));
            }
            if k > 0 && segments[k - 1].t_end != seg.t_start {
                return Err(HybridTimeError::InvalidDomain(format!(
                    "segment {k} starts at {} but segment {} ends at {}",
                    seg.t_start,
                    k - 1,
                    segments[k - 1].t_end
                )));
            }
        }
        Ok(Self { segments })
    }

    /// The domain `[0, t_end] x {0}`.
    pub fn single_interval(t_end: f64) -> Self {
        Self::new(vec![TimeSegment {
            jump_index: 0,
            t_start: 0.0,
            t_end,
        }])
        .expect("single interval is a valid domain")
    }

    /// The single-point domain `{(0, 0)}`.
    pub fn single_point() -> Self {
        Self::single_interval(0.0)
    }

    pub fn segments(&self) -> &[TimeSegment] {
        &self.segments
    }

    /// Maximum hybrid time `(T, J)` of the domain.
    pub fn max_hybrid_time(&self) -> (f64, usize) {
        let last = self.segments.last().expect("domain is nonempty");
        (last.t_end, last.jump_index)
    }

    /// Total flow time `T`.
    pub fn total_flow_time(&self) -> f64 {
        self.max_hybrid_time().0
    }

    /// Total number of jumps `J`.
    pub fn jump_count(&self) -> usize {
        self.max_hybrid_time().1
    }

    pub fn contains(&self, t: f64, j: usize) -> bool {
        self.segments
            .get(j)
            .is_some_and(|seg| seg.t_start <= t && t <= seg.t_end)
    }

    /// Whether `(t, j)` is a jump instant, i.e. `(t, j + 1)` also lies in
    /// the domain.
    pub fn is_jump_instant(&self, t: f64, j: usize) -> bool {
        j < self.jump_count() && t == self.segments[j].t_end
    }

    /// The mirrored domain `{(T, J)} - dom`: segment `j` maps to segment
    /// `J - j` with interval `[T - t_end, T - t_start]`.
    pub fn reversed(&self) -> Self {
        let (total_t, total_j) = self.max_hybrid_time();
        let segments = self
            .segments
            .iter()
            .rev()
            .enumerate()
            .map(|(k, seg)| TimeSegment {
                jump_index: k,
                // The first reversed segment starts at T - T, which is an
                // exact 0.0, so the constructor's checks round-trip.
                t_start: total_t - seg.t_end,
                t_end: total_t - seg.t_start,
            })
            .collect();
        let reversed = Self::new(segments).expect("reversal of a valid domain is valid");
        debug_assert_eq!(reversed.jump_count(), total_j);
        reversed
    }
}
