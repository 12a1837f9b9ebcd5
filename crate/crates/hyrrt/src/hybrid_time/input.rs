//! Hybrid inputs: piecewise-constant flow signals plus one value per jump.

use super::{HybridTimeDomain, HybridTimeError};
use crate::vecn;

/// One constant piece of a flow input signal on `[t_from, t_to)`. The last
/// piece of a segment is closed on the right. An instantaneous domain
/// segment may carry a single zero-length piece so the input still has a
/// value there.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowPiece {
    pub t_from: f64,
    pub t_to: f64,
    pub value: Vec<f64>,
}

/// An input signal on a hybrid time domain: per-segment piecewise-constant
/// flow pieces tiling each interval, and one input value per jump instant.
#[derive(Debug, Clone, PartialEq)]
pub struct HybridInput {
    domain: HybridTimeDomain,
    flow: Vec<Vec<FlowPiece>>,
    jumps: Vec<Vec<f64>>,
    input_dim: usize,
}

impl HybridInput {
    pub fn new(
        domain: HybridTimeDomain,
        flow: Vec<Vec<FlowPiece>>,
        jumps: Vec<Vec<f64>>,
        input_dim: usize,
    ) -> Result<Self, HybridTimeError> {
        if input_dim == 0 {
            return Err(HybridTimeError::InvalidInput("input dimension is zero".into()));
        }
        if flow.len() != domain.segments().len() {
            return Err(HybridTimeError::InvalidInput(format!(
                "{} flow-piece segments for {} domain segments",
                flow.len(),
                domain.segments().len()
            )));
        }
        if jumps.len() != domain.jump_count() {
            return Err(HybridTimeError::InvalidInput(format!(
                "{} jump values for {} jumps",
                jumps.len(),
                domain.jump_count()
            )));
        }
        for (pieces, dom_seg) in flow.iter().zip(domain.segments()) {
            let j = dom_seg.jump_index;
            if dom_seg.is_instantaneous() {
                // At most one zero-length piece to give the point a value.
                if pieces.len() > 1
                    || pieces
                        .iter()
                        .any(|p| p.t_from != dom_seg.t_start || p.t_to != dom_seg.t_end)
                {
                    return Err(HybridTimeError::InvalidInput(format!(
                        "segment {j} is instantaneous but carries flow pieces"
                    )));
                }
            } else {
                if pieces.is_empty() {
                    return Err(HybridTimeError::InvalidInput(format!(
                        "segment {j} has no flow pieces"
                    )));
                }
                if pieces[0].t_from != dom_seg.t_start
                    || pieces.last().unwrap().t_to != dom_seg.t_end
                {
                    return Err(HybridTimeError::InvalidInput(format!(
                        "segment {j}: flow pieces do not span the interval"
                    )));
                }
                for (k, p) in pieces.iter().enumerate() {
                    if p.t_from >= p.t_to {
                        return Err(HybridTimeError::InvalidInput(format!(
                            "segment {j}: piece {k} is empty"
                        )));
                    }
                    if k > 0 && pieces[k - 1].t_to != p.t_from {
                        return Err(HybridTimeError::InvalidInput(format!(
                            "segment {j}: gap before piece {k}"
                        )));
                    }
                }
            }
            for p in pieces {
                if p.value.len() != input_dim {
                    return Err(HybridTimeError::DimensionMismatch {
                        expected: input_dim,
                        got: p.value.len(),
                    });
                }
                if !vecn::all_finite(&p.value) {
                    return Err(HybridTimeError::InvalidInput(format!(
                        "segment {j}: non-finite flow value"
                    )));
                }
            }
        }
        for u in &jumps {
            if u.len() != input_dim {
                return Err(HybridTimeError::DimensionMismatch {
                    expected: input_dim,
                    got: u.len(),
                });
            }
            if !vecn::all_finite(u) {
                return Err(HybridTimeError::InvalidInput("non-finite jump value".into()));
            }
        }
        Ok(Self {
            domain,
            flow,
            jumps,
            input_dim,
        })
    }

    pub fn domain(&self) -> &HybridTimeDomain {
        &self.domain
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn flow_pieces(&self, j: usize) -> &[FlowPiece] {
        &self.flow[j]
    }

    pub fn flow_pieces_all(&self) -> &[Vec<FlowPiece>] {
        &self.flow
    }

    /// Input value applied at the jump from segment `j` to `j + 1`.
    pub fn jump_value(&self, j: usize) -> &[f64] {
        &self.jumps[j]
    }

    pub fn jump_values(&self) -> &[Vec<f64>] {
        &self.jumps
    }

    /// Value at `(t, j)`. At a jump instant this is the jump value;
    /// otherwise it is the covering flow piece's value. `None` when `(t, j)`
    /// lies outside the domain or at a valueless terminal point (an
    /// instantaneous final segment without a piece).
    pub fn value_at(&self, t: f64, j: usize) -> Option<&[f64]> {
        if !self.domain.contains(t, j) {
            return None;
        }
        if self.domain.is_jump_instant(t, j) {
            return Some(&self.jumps[j]);
        }
        let pieces = &self.flow[j];
        if pieces.is_empty() {
            return None;
        }
        // Pieces are half-open on the right except the last one.
        let found = pieces
            .iter()
            .find(|p| p.t_from <= t && t < p.t_to)
            .or_else(|| pieces.last().filter(|p| t <= p.t_to));
        found.map(|p| p.value.as_slice())
    }

    /// The mirrored input. Flow pieces map onto `[T - t_to, T - t_from)` in
    /// reversed order, jump values reverse their order. With
    /// piecewise-constant pieces the free boundary values (the value at
    /// `(0, 0)` and at post-jump interval starts) automatically take the
    /// adjacent interior value; the instants so filled are returned
    /// alongside the input.
    pub fn reversed(&self) -> (Self, Vec<(f64, usize)>) {
        let (total_t, total_j) = self.domain.max_hybrid_time();
        let domain = self.domain.reversed();
        let flow: Vec<Vec<FlowPiece>> = self
            .flow
            .iter()
            .rev()
            .map(|pieces| {
                pieces
                    .iter()
                    .rev()
                    .map(|p| FlowPiece {
                        t_from: total_t - p.t_to,
                        t_to: total_t - p.t_from,
                        value: p.value.clone(),
                    })
                    .collect()
            })
            .collect();
        let jumps: Vec<Vec<f64>> = self.jumps.iter().rev().cloned().collect();

        let mut filled = Vec::new();
        for seg in domain.segments() {
            if !seg.has_interior() {
                continue;
            }
            let j = seg.jump_index;
            if j == 0 {
                // Start-of-domain value is free; the first piece supplies
                // the interior-limit value.
                filled.push((0.0, 0));
            } else {
                // Post-jump interval start.
                filled.push((seg.t_start, j));
            }
            if !domain.is_jump_instant(seg.t_end, j) {
                // Terminal point of the domain (or of a segment followed by
                // nothing), only reachable for the last segment.
                filled.push((seg.t_end, j));
            }
        }
        let reversed = Self::new(domain, flow, jumps, self.input_dim)
            .expect("reversal of a valid input is valid");
        debug_assert_eq!(reversed.domain.jump_count(), total_j);
        (reversed, filled)
    }
}

#[cfg(test)]
mod tests {
    use super::super::TimeSegment;
    use super::*;

    fn two_jump_input() -> HybridInput {
        // [0,1]x{0} u [1,1]x{1} u [1,2]x{2}: flow, double-ish jump, flow.
        let domain = HybridTimeDomain::new(vec![
            TimeSegment {
                jump_index: 0,
                t_start: 0.0,
                t_end: 1.0,
            },
            TimeSegment {
                jump_index: 1,
                t_start: 1.0,
                t_end: 1.0,
            },
            TimeSegment {
                jump_index: 2,
                t_start: 1.0,
                t_end: 2.0,
            },
        ])
        .unwrap();
        HybridInput::new(
            domain,
            vec![
                vec![FlowPiece {
                    t_from: 0.0,
                    t_to: 1.0,
                    value: vec![3.0],
                }],
                vec![],
                vec![FlowPiece {
                    t_from: 1.0,
                    t_to: 2.0,
                    value: vec![4.0],
                }],
            ],
            vec![vec![10.0], vec![20.0]],
            1,
        )
        .unwrap()
    }

    #[test]
    fn values_flow_and_jump() {
        let v = two_jump_input();
        assert_eq!(v.value_at(0.5, 0).unwrap(), &[3.0]);
        // At the jump instant the jump value wins over the flow piece.
        assert_eq!(v.value_at(1.0, 0).unwrap(), &[10.0]);
        assert_eq!(v.value_at(1.0, 1).unwrap(), &[20.0]);
        assert_eq!(v.value_at(1.5, 2).unwrap(), &[4.0]);
        assert_eq!(v.value_at(2.0, 2).unwrap(), &[4.0]);
        assert!(v.value_at(0.5, 1).is_none());
    }

    #[test]
    fn reversal_swaps_jump_order() {
        let v = two_jump_input();
        let (r, _) = v.reversed();
        assert_eq!(r.jump_value(0), &[20.0]);
        assert_eq!(r.jump_value(1), &[10.0]);
        // Interior values mirror: 0.5 in the reversed domain sits in the
        // piece that was [1, 2] originally.
        assert_eq!(r.value_at(0.5, 0).unwrap(), &[4.0]);
        assert_eq!(r.value_at(1.5, 2).unwrap(), &[3.0]);
    }

    #[test]
    fn reversal_involutive_on_interiors_and_jumps() {
        let v = two_jump_input();
        let (rr, _) = v.reversed().0.reversed();
        assert_eq!(rr.jump_values(), v.jump_values());
        for (t, j) in [(0.25, 0usize), (0.75, 0), (1.25, 2), (1.75, 2)] {
            assert_eq!(rr.value_at(t, j), v.value_at(t, j));
        }
    }

    #[test]
    fn tiling_violations_rejected() {
        let domain = HybridTimeDomain::single_interval(1.0);
        // Gap in the middle.
        assert!(HybridInput::new(
            domain.clone(),
            vec![vec![
                FlowPiece {
                    t_from: 0.0,
                    t_to: 0.4,
                    value: vec![1.0]
                },
                FlowPiece {
                    t_from: 0.5,
                    t_to: 1.0,
                    value: vec![1.0]
                },
            ]],
            vec![],
            1,
        )
        .is_err());
        // Missing coverage at the end.
        assert!(HybridInput::new(
            domain.clone(),
            vec![vec![FlowPiece {
                t_from: 0.0,
                t_to: 0.9,
                value: vec![1.0]
            }]],
            vec![],
            1,
        )
        .is_err());
        // Wrong jump-value count.
        assert!(HybridInput::new(
            domain,
            vec![vec![FlowPiece {
                t_from: 0.0,
                t_to: 1.0,
                value: vec![1.0]
            }]],
            vec![vec![1.0]],
            1,
        )
        .is_err());
    }

    #[test]
    fn filled_instants_reported() {
        let v = two_jump_input();
        let (_, filled) = v.reversed();
        // Reversed domain: [0,1]x{0} u [1,1]x{1} u [1,2]x{2}. Free values:
        // the start of segment 0, the start of segment 2 (post-jump), and
        // the terminal point (2, 2).
        assert_eq!(filled, vec![(0.0, 0), (1.0, 2), (2.0, 2)]);
    }
}
