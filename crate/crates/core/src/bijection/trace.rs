//! Recorded operator sequences with JSON and text renderings.

use serde::Serialize;

use super::ops::OpStep;
use crate::triangle::{Ranking, Triangle};

/// A starting triangle and the operator steps applied to it in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    initial: Triangle,
    steps: Vec<OpStep>,
}

#[derive(Serialize)]
struct StepJson<'a> {
    op: String,
    d: usize,
    ranks_after: &'a [u32],
    triangle_after: &'a Triangle,
}

#[derive(Serialize)]
struct TraceJson<'a> {
    steps: Vec<StepJson<'a>>,
}

impl Trace {
    pub fn new(initial: Triangle) -> Self {
        Trace {
            initial,
            steps: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, step: OpStep) {
        debug_assert_eq!(&step.before, self.last());
        self.steps.push(step);
    }

    pub fn initial(&self) -> &Triangle {
        &self.initial
    }

    pub fn steps(&self) -> &[OpStep] {
        &self.steps
    }

    /// The triangle after the last step.
    pub fn last(&self) -> &Triangle {
        self.steps.last().map_or(&self.initial, |s| &s.after)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(op, d)` pairs, e.g. `("R", 1)`.
    pub fn ops(&self) -> Vec<(String, usize)> {
        self.steps.iter().map(|s| (s.kind.to_string(), s.d)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = TraceJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    op: s.kind.to_string(),
                    d: s.d,
                    ranks_after: s.ranks_after.as_slice(),
                    triangle_after: &s.after,
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("trace serializes")
    }

    /// Every triangle with its ranks, each block headed by `initial` or the
    /// operator name and separated by a blank line. All blocks share one
    /// slot width.
    pub fn to_text(&self) -> String {
        let width = std::iter::once(&self.initial)
            .chain(self.steps.iter().map(|s| &s.after))
            .map(Triangle::label_width)
            .max()
            .unwrap_or(1);
        let mut blocks = Vec::with_capacity(self.steps.len() + 1);
        let rk = self.initial.ranking().ok();
        blocks.push(block("initial", &self.initial, rk.as_ref(), width));
        for s in &self.steps {
            let label = format!("{}_{}", s.kind, s.d);
            blocks.push(block(&label, &s.after, Some(&s.ranks_after), width));
        }
        blocks.join("\n")
    }
}

fn block(label: &str, t: &Triangle, rk: Option<&Ranking>, width: usize) -> String {
    format!("{label}\n{}", t.render(rk, width))
}
