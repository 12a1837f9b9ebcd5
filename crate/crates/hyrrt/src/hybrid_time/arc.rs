//! Sampled hybrid arcs.

use super::{HybridTimeDomain, HybridTimeError};
use crate::vecn;

/// Sample grid of one domain segment. States are stored flat, `state_dim`
/// values per node, in node order.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSegment {
    times: Vec<f64>,
    states: Vec<f64>,
}

impl ArcSegment {
    pub fn new(times: Vec<f64>, states: Vec<f64>) -> Self {
        Self { times, states }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn state(&self, node: usize, state_dim: usize) -> &[f64] {
        &self.states[node * state_dim..(node + 1) * state_dim]
    }
}

/// A state trajectory on a hybrid time domain, represented by per-segment
/// sample grids. Evaluation between nodes is linear interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct HybridArc {
    domain: HybridTimeDomain,
    segments: Vec<ArcSegment>,
    state_dim: usize,
}

impl HybridArc {
    pub fn new(
        domain: HybridTimeDomain,
        segments: Vec<ArcSegment>,
        state_dim: usize,
    ) -> Result<Self, HybridTimeError> {
        if state_dim == 0 {
            return Err(HybridTimeError::InvalidArc("state dimension is zero".into()));
        }
        if segments.len() != domain.segments().len() {
            return Err(HybridTimeError::InvalidArc(format!(
                "{} sample segments for {} domain segments",
                segments.len(),
                domain.segments().len()
            )));
        }
        for (seg, dom_seg) in segments.iter().zip(domain.segments()) {
            let j = dom_seg.jump_index;
            if seg.is_empty() {
                return Err(HybridTimeError::InvalidArc(format!(
                    "segment {j} has no samples"
                )));
            }
            if seg.states.len() != seg.times.len() * state_dim {
                return Err(HybridTimeError::InvalidArc(format!(
                    "segment {j}: {} state values for {} nodes of dimension {state_dim}",
                    seg.states.len(),
                    seg.times.len()
                )));
            }
            if seg.times[0] != dom_seg.t_start || *seg.times.last().unwrap() != dom_seg.t_end {
                return Err(HybridTimeError::InvalidArc(format!(
                    "segment {j}: sample times span [{}, {}] but the interval is [{}, {}]",
                    seg.times[0],
                    seg.times.last().unwrap(),
                    dom_seg.t_start,
                    dom_seg.t_end
                )));
            }
            if seg.times.windows(2).any(|w| w[0] >= w[1]) {
                return Err(HybridTimeError::InvalidArc(format!(
                    "segment {j}: sample times must strictly increase"
                )));
            }
            if !vecn::all_finite(&seg.states) || !vecn::all_finite(&seg.times) {
                return Err(HybridTimeError::InvalidArc(format!(
                    "segment {j}: non-finite sample"
                )));
            }
        }
        Ok(Self {
            domain,
            segments,
            state_dim,
        })
    }

    /// The arc consisting of the single point `x` at hybrid time `(0, 0)`.
    pub fn point(x: &[f64]) -> Self {
        Self::new(
            HybridTimeDomain::single_point(),
            vec![ArcSegment::new(vec![0.0], x.to_vec())],
            x.len(),
        )
        .expect("point arc is valid")
    }

    pub fn domain(&self) -> &HybridTimeDomain {
        &self.domain
    }

    pub fn state_dim(&self) -> usize {
        self.state_dim
    }

    pub fn segments(&self) -> &[ArcSegment] {
        &self.segments
    }

    /// Value at `(0, 0)`.
    pub fn start_state(&self) -> &[f64] {
        self.segments[0].state(0, self.state_dim)
    }

    /// Value at `(T, J)`.
    pub fn end_state(&self) -> &[f64] {
        let seg = self.segments.last().expect("domain is nonempty");
        seg.state(seg.len() - 1, self.state_dim)
    }

    /// Evaluate at `(t, j)` by linear interpolation between the bracketing
    /// sample nodes of segment `j`. Exact at sample nodes.
    pub fn sample_at(&self, t: f64, j: usize) -> Result<Vec<f64>, HybridTimeError> {
        if !self.domain.contains(t, j) {
            return Err(HybridTimeError::OutOfDomain { t, j });
        }
        let seg = &self.segments[j];
        let n = self.state_dim;
        match seg.times.binary_search_by(|probe| probe.total_cmp(&t)) {
            Ok(node) => Ok(seg.state(node, n).to_vec()),
            Err(after) => {
                // `t` lies strictly between nodes `after - 1` and `after`.
                let (lo, hi) = (after - 1, after);
                let (t0, t1) = (seg.times[lo], seg.times[hi]);
                let alpha = (t - t0) / (t1 - t0);
                let x0 = seg.state(lo, n);
                let x1 = seg.state(hi, n);
                Ok(x0
                    .iter()
                    .zip(x1)
                    .map(|(a, b)| a + alpha * (b - a))
                    .collect())
            }
        }
    }

    /// The mirrored arc: value at `(t, j)` of the result equals the value
    /// at `(T - t, J - j)` of the original. State samples are copied, so
    /// reversing twice reproduces them bit for bit; node times go through
    /// `T - (T - t)` and can move by one unit in the last place.
    pub fn reversed(&self) -> Self {
        let (total_t, _) = self.domain.max_hybrid_time();
        let n = self.state_dim;
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|seg| {
                let times: Vec<f64> = seg.times.iter().rev().map(|t| total_t - t).collect();
                let mut states = Vec::with_capacity(seg.states.len());
                for node in (0..seg.len()).rev() {
                    states.extend_from_slice(seg.state(node, n));
                }
                ArcSegment::new(times, states)
            })
            .collect();
        Self::new(self.domain.reversed(), segments, n).expect("reversal of a valid arc is valid")
    }
}
