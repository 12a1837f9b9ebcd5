//! Solution pairs and the concatenation/reversal operations on them.

use thiserror::Error;

use super::{
    ArcSegment, FlowPiece, HybridArc, HybridInput, HybridTimeDomain, HybridTimeError, TimeSegment,
};
use crate::vecn;

/// Default tolerance on `|end of first - start of second|` when gluing two
/// pairs. Callers that deliberately tolerate a gap (the planner's
/// state-matching distance) pass their own value.
pub const DEFAULT_GLUE_TOL: f64 = 1e-9;

/// Why two pairs cannot be concatenated. Each variant names the violated
/// precondition.
#[derive(Debug, Error)]
pub enum ConcatError {
    #[error("seam endpoint mismatch: distance {distance:.3e} exceeds glue tolerance {tolerance:.3e}")]
    EndpointMismatch { distance: f64, tolerance: f64 },
    #[error("seam state/input not in the flow set although both adjoining intervals flow")]
    SeamOutsideFlowSet,
    #[error("state or input dimensions differ")]
    DimensionMismatch,
}

/// A hybrid arc and a hybrid input on one shared domain.
///
/// `filled_inputs` lists the hybrid times at which a reversal filled an
/// otherwise-unconstrained boundary input value with the adjacent interior
/// value. It is diagnostic metadata and does not take part in equality or
/// serialization.
#[derive(Debug, Clone)]
pub struct SolutionPair {
    arc: HybridArc,
    input: HybridInput,
    filled_inputs: Vec<(f64, usize)>,
}

impl PartialEq for SolutionPair {
    fn eq(&self, other: &Self) -> bool {
        self.arc == other.arc && self.input == other.input
    }
}

impl SolutionPair {
    pub fn new(arc: HybridArc, input: HybridInput) -> Result<Self, HybridTimeError> {
        if arc.domain() != input.domain() {
            return Err(HybridTimeError::DomainMismatch);
        }
        Ok(Self {
            arc,
            input,
            filled_inputs: Vec::new(),
        })
    }

    /// The pair consisting of the single point `x` with input value `u` at
    /// hybrid time `(0, 0)`.
    pub fn point(x: &[f64], u: &[f64]) -> Self {
        let arc = HybridArc::point(x);
        let input = HybridInput::new(
            HybridTimeDomain::single_point(),
            vec![vec![FlowPiece {
                t_from: 0.0,
                t_to: 0.0,
                value: u.to_vec(),
            }]],
            vec![],
            u.len(),
        )
        .expect("point input is valid");
        Self::new(arc, input).expect("point pair is valid")
    }

    /// A purely continuous pair on `[0, T] x {0}` with one constant input.
    /// `times` must start at 0; `states` is flat, `state_dim` per node.
    pub fn single_flow(
        times: Vec<f64>,
        states: Vec<f64>,
        state_dim: usize,
        u: &[f64],
    ) -> Result<Self, HybridTimeError> {
        let t_end = *times.last().ok_or(HybridTimeError::EmptyDomain)?;
        let domain = HybridTimeDomain::single_interval(t_end);
        let arc = HybridArc::new(domain.clone(), vec![ArcSegment::new(times, states)], state_dim)?;
        let pieces = if t_end > 0.0 {
            vec![FlowPiece {
                t_from: 0.0,
                t_to: t_end,
                value: u.to_vec(),
            }]
        } else {
            vec![FlowPiece {
                t_from: 0.0,
                t_to: 0.0,
                value: u.to_vec(),
            }]
        };
        let input = HybridInput::new(domain, vec![pieces], vec![], u.len())?;
        Self::new(arc, input)
    }

    /// A single-jump pair on `{0} x {0, 1}`: state `x_from` before, `x_to`
    /// after, jump input `u`.
    pub fn single_jump(x_from: &[f64], x_to: &[f64], u: &[f64]) -> Result<Self, HybridTimeError> {
        if x_from.len() != x_to.len() {
            return Err(HybridTimeError::DimensionMismatch {
                expected: x_from.len(),
                got: x_to.len(),
            });
        }
        let domain = HybridTimeDomain::new(vec![
            TimeSegment {
                jump_index: 0,
                t_start: 0.0,
                t_end: 0.0,
            },
            TimeSegment {
                jump_index: 1,
                t_start: 0.0,
                t_end: 0.0,
            },
        ])?;
        let arc = HybridArc::new(
            domain.clone(),
            vec![
                ArcSegment::new(vec![0.0], x_from.to_vec()),
                ArcSegment::new(vec![0.0], x_to.to_vec()),
            ],
            x_from.len(),
        )?;
        let input = HybridInput::new(domain, vec![vec![], vec![]], vec![u.to_vec()], u.len())?;
        Self::new(arc, input)
    }

    pub fn arc(&self) -> &HybridArc {
        &self.arc
    }

    pub fn input(&self) -> &HybridInput {
        &self.input
    }

    pub fn domain(&self) -> &HybridTimeDomain {
        self.arc.domain()
    }

    pub fn state_dim(&self) -> usize {
        self.arc.state_dim()
    }

    pub fn input_dim(&self) -> usize {
        self.input.input_dim()
    }

    pub fn start_state(&self) -> &[f64] {
        self.arc.start_state()
    }

    pub fn end_state(&self) -> &[f64] {
        self.arc.end_state()
    }

    pub fn max_hybrid_time(&self) -> (f64, usize) {
        self.domain().max_hybrid_time()
    }

    /// Whether the pair is a single flow interval with no jumps.
    pub fn is_purely_continuous(&self) -> bool {
        self.domain().jump_count() == 0
    }

    /// Boundary instants whose input value was filled during a reversal.
    pub fn filled_inputs(&self) -> &[(f64, usize)] {
        &self.filled_inputs
    }

    /// Glue `other` onto the end of this pair.
    ///
    /// Preconditions checked: the end state of `self` and the start state of
    /// `other` agree within `glue_tol`; and when the seam joins two
    /// intervals of positive length (so the seam point becomes interior to
    /// a flow interval), the start of `other` must satisfy `flow_set`.
    ///
    /// The result's domain is `dom self` united with `dom other` shifted by
    /// `(T, J)`; its values are `self`'s before the seam and `other`'s from
    /// the seam on.
    pub fn concatenate<F>(
        &self,
        other: &Self,
        flow_set: F,
        glue_tol: f64,
    ) -> Result<Self, ConcatError>
    where
        F: Fn(&[f64], &[f64]) -> bool,
    {
        if self.state_dim() != other.state_dim() || self.input_dim() != other.input_dim() {
            return Err(ConcatError::DimensionMismatch);
        }
        let distance = vecn::dist(self.end_state(), other.start_state());
        if !(distance <= glue_tol) {
            return Err(ConcatError::EndpointMismatch {
                distance,
                tolerance: glue_tol,
            });
        }
        let (t1, j1) = self.max_hybrid_time();
        let self_last = self.domain().segments().last().expect("nonempty");
        let other_first = &other.domain().segments()[0];
        if self_last.has_interior() && other_first.has_interior() {
            let u0 = other
                .input
                .value_at(0.0, 0)
                .expect("interval with interior has a first flow value");
            if !flow_set(other.start_state(), u0) {
                return Err(ConcatError::SeamOutsideFlowSet);
            }
        }

        let n = self.state_dim();

        // Domain: self's segments, with the last one extended to absorb
        // other's first, then other's remaining segments shifted.
        let mut dom_segs: Vec<TimeSegment> = self.domain().segments().to_vec();
        {
            let last = dom_segs.last_mut().unwrap();
            last.t_end = t1 + other_first.t_end;
        }
        for seg in &other.domain().segments()[1..] {
            dom_segs.push(TimeSegment {
                jump_index: j1 + seg.jump_index,
                t_start: t1 + seg.t_start,
                t_end: t1 + seg.t_end,
            });
        }
        let domain = HybridTimeDomain::new(dom_segs).expect("concatenated domain is valid");

        // Arc: drop self's seam node, take other's values from the seam on.
        let mut arc_segs: Vec<ArcSegment> = self.arc.segments()[..j1].to_vec();
        {
            let self_seam = &self.arc.segments()[j1];
            let other_seam = &other.arc.segments()[0];
            let mut times: Vec<f64> = self_seam.times()[..self_seam.len() - 1].to_vec();
            let mut states: Vec<f64> = Vec::with_capacity((self_seam.len() + other_seam.len()) * n);
            for node in 0..self_seam.len() - 1 {
                states.extend_from_slice(self_seam.state(node, n));
            }
            for node in 0..other_seam.len() {
                times.push(t1 + other_seam.times()[node]);
                states.extend_from_slice(other_seam.state(node, n));
            }
            arc_segs.push(ArcSegment::new(times, states));
        }
        for seg in &other.arc.segments()[1..] {
            let times: Vec<f64> = seg.times().iter().map(|t| t1 + t).collect();
            let mut states = Vec::with_capacity(seg.len() * n);
            for node in 0..seg.len() {
                states.extend_from_slice(seg.state(node, n));
            }
            arc_segs.push(ArcSegment::new(times, states));
        }
        let arc = HybridArc::new(domain.clone(), arc_segs, n).expect("concatenated arc is valid");

        // Input: merge the seam segment's pieces, keep everything else.
        let shift_pieces = |pieces: &[FlowPiece]| -> Vec<FlowPiece> {
            pieces
                .iter()
                .map(|p| FlowPiece {
                    t_from: t1 + p.t_from,
                    t_to: t1 + p.t_to,
                    value: p.value.clone(),
                })
                .collect()
        };
        let mut flow: Vec<Vec<FlowPiece>> = self.input.flow_pieces_all()[..j1].to_vec();
        {
            let merged_has_interior = self_last.has_interior() || other_first.has_interior();
            let mut pieces = Vec::new();
            if self_last.has_interior() {
                pieces.extend_from_slice(self.input.flow_pieces(j1));
            }
            if other_first.has_interior() {
                pieces.extend(shift_pieces(other.input.flow_pieces(0)));
            }
            if !merged_has_interior {
                // Both sides instantaneous: the seam value belongs to
                // `other` when it has one.
                pieces.extend(shift_pieces(other.input.flow_pieces(0)));
            }
            flow.push(pieces);
        }
        for pieces in &other.input.flow_pieces_all()[1..] {
            flow.push(shift_pieces(pieces));
        }
        let mut jumps: Vec<Vec<f64>> = self.input.jump_values().to_vec();
        jumps.extend(other.input.jump_values().iter().cloned());
        let input = HybridInput::new(domain, flow, jumps, self.input_dim())
            .expect("concatenated input is valid");

        let mut filled = self.filled_inputs.clone();
        filled.extend(
            other
                .filled_inputs
                .iter()
                .map(|(t, j)| (t1 + t, j1 + j)),
        );
        Ok(Self {
            arc,
            input,
            filled_inputs: filled,
        })
    }

    /// The mirrored pair: value at `(t, j)` equals the original's value at
    /// `(T - t, J - j)`; jump inputs reverse order; free boundary input
    /// values take the adjacent interior value and are recorded in
    /// [`SolutionPair::filled_inputs`].
    pub fn reversed(&self) -> Self {
        let arc = self.arc.reversed();
        let (input, filled) = self.input.reversed();
        Self {
            arc,
            input,
            filled_inputs: filled,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn const_flow(t_end: f64, x0: f64, slope: f64, u: f64) -> SolutionPair {
        // x(t) = x0 + slope * t sampled at the endpoints.
        SolutionPair::single_flow(
            vec![0.0, t_end],
            vec![x0, x0 + slope * t_end],
            1,
            &[u],
        )
        .unwrap()
    }

    #[test]
    fn concat_of_two_flows_adds_durations() {
        let a = const_flow(1.0, 0.0, 1.0, 5.0);
        let b = const_flow(2.0, 1.0, 1.0, 6.0);
        let c = a.concatenate(&b, |_, _| true, DEFAULT_GLUE_TOL).unwrap();
        assert_eq!(c.max_hybrid_time(), (3.0, 0));
        assert_eq!(c.domain().segments().len(), 1);
        assert_eq!(c.start_state(), &[0.0]);
        assert_eq!(c.end_state(), &[3.0]);
        // Values before the seam come from the first pair, after from the
        // second.
        assert_eq!(c.input().value_at(0.5, 0).unwrap(), &[5.0]);
        assert_eq!(c.input().value_at(1.5, 0).unwrap(), &[6.0]);
        // The seam instant itself belongs to the second pair.
        assert_eq!(c.input().value_at(1.0, 0).unwrap(), &[6.0]);
    }

    #[test]
    fn concat_rejects_mismatched_endpoints() {
        let a = const_flow(1.0, 14.0, 0.0, 1.0);
        let b = const_flow(1.0, 10.0, 0.0, 1.0);
        match a.concatenate(&b, |_, _| true, DEFAULT_GLUE_TOL) {
            Err(ConcatError::EndpointMismatch { distance, .. }) => {
                assert!((distance - 4.0).abs() < 1e-12);
            }
            other => panic!("expected endpoint mismatch, got {other:?}"),
        }
    }

    #[test]
    fn concat_rejects_seam_outside_flow_set() {
        let a = const_flow(1.0, 0.0, 1.0, 5.0);
        let b = const_flow(1.0, 1.0, 1.0, 6.0);
        assert!(matches!(
            a.concatenate(&b, |_, _| false, DEFAULT_GLUE_TOL),
            Err(ConcatError::SeamOutsideFlowSet)
        ));
        // A jump on either side of the seam makes the condition vacuous.
        let j = SolutionPair::single_jump(&[1.0], &[2.0], &[0.5]).unwrap();
        assert!(a.concatenate(&j, |_, _| false, DEFAULT_GLUE_TOL).is_ok());
    }

    #[test]
    fn concat_across_jump_counts_jumps() {
        let a = const_flow(1.0, 0.0, 1.0, 5.0);
        let j = SolutionPair::single_jump(&[1.0], &[7.0], &[0.5]).unwrap();
        let b = const_flow(1.0, 7.0, -1.0, 6.0);
        let plan = a
            .concatenate(&j, |_, _| true, DEFAULT_GLUE_TOL)
            .unwrap()
            .concatenate(&b, |_, _| true, DEFAULT_GLUE_TOL)
            .unwrap();
        assert_eq!(plan.max_hybrid_time(), (2.0, 1));
        assert_eq!(plan.domain().segments().len(), 2);
        // Jump value sits at the jump instant.
        assert_eq!(plan.input().value_at(1.0, 0).unwrap(), &[0.5]);
        assert_eq!(plan.arc().sample_at(1.0, 1).unwrap(), vec![7.0]);
        assert_eq!(plan.end_state(), &[6.0]);
    }

    #[test]
    fn point_pair_reverses_to_itself() {
        let p = SolutionPair::point(&[1.0, 2.0], &[0.5]);
        assert_eq!(p.reversed(), p);
    }

    #[test]
    fn reversal_maps_endpoints() {
        let a = const_flow(1.0, 0.0, 2.0, 5.0);
        let r = a.reversed();
        assert_eq!(r.start_state(), &[2.0]);
        assert_eq!(r.end_state(), &[0.0]);
        assert_eq!(r.reversed(), a);
    }

    #[test]
    fn reversal_swaps_jump_inputs() {
        // flow | jump(a) | flow | jump(b) | flow, then reverse.
        let f1 = const_flow(1.0, 0.0, 0.0, 1.0);
        let ja = SolutionPair::single_jump(&[0.0], &[1.0], &[11.0]).unwrap();
        let f2 = const_flow(1.0, 1.0, 0.0, 1.0);
        let jb = SolutionPair::single_jump(&[1.0], &[2.0], &[22.0]).unwrap();
        let f3 = const_flow(1.0, 2.0, 0.0, 1.0);
        let tol = DEFAULT_GLUE_TOL;
        let all = f1
            .concatenate(&ja, |_, _| true, tol)
            .unwrap()
            .concatenate(&f2, |_, _| true, tol)
            .unwrap()
            .concatenate(&jb, |_, _| true, tol)
            .unwrap()
            .concatenate(&f3, |_, _| true, tol)
            .unwrap();
        assert_eq!(all.input().jump_values(), &[vec![11.0], vec![22.0]]);
        let r = all.reversed();
        assert_eq!(r.input().jump_values(), &[vec![22.0], vec![11.0]]);
    }
}
