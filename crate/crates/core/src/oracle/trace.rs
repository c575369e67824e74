use std::fmt::{self, Write};

/// One elimination step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PivotStep {
    pub step: usize,
    pub pivot_row: usize,
    pub swapped: bool,
}

/// Pivot diagnostics of an elimination run.
///
/// A completed elimination records `n - 1` steps; an early exit on a zero
/// column records fewer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub pivot_sequence: Vec<PivotStep>,
    pub sign: i8,
    pub max_scalar_bits: u64,
    pub singular_at: Option<usize>,
}

impl EliminationTrace {
    pub(crate) fn new() -> Self {
        EliminationTrace { sign: 1, ..Default::default() }
    }

    pub(crate) fn record(&mut self, step: usize, pivot_row: usize) {
        let swapped = pivot_row != step;
        if swapped {
            self.sign = -self.sign;
        }
        self.pivot_sequence.push(PivotStep { step, pivot_row, swapped });
    }

    pub(crate) fn observe_bits(&mut self, bits: u64) {
        self.max_scalar_bits = self.max_scalar_bits.max(bits);
    }

    pub fn swaps(&self) -> usize {
        self.pivot_sequence.iter().filter(|s| s.swapped).count()
    }

    /// Multi-line diagnostic block.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "steps={} swaps={} sign={} max_bits={}",
            self.pivot_sequence.len(),
            self.swaps(),
            self.sign,
            self.max_scalar_bits
        );
        if let Some(k) = self.singular_at {
            let _ = writeln!(out, "zero column at step {k}");
        }
        for s in self.pivot_sequence.iter().filter(|s| s.swapped) {
            let _ = writeln!(out, "  step {}: swap with row {}", s.step, s.pivot_row);
        }
        out
    }
}

impl fmt::Display for EliminationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
