//! Signature-change planning: which vee/tilt steps turn one signature's
//! product into another's.
//!
//! On generator squares, `vee(μ)` flips everything except `μ` and `tilt`
//! flips everything. As flip masks these commute and are involutions, so a
//! plan is determined by the set `S` of preserved indices used and whether a
//! tilt occurs. With `D` the set of generators whose square must change,
//! either `S = D` (with a tilt iff `|D|` is odd) or `S` is the complement of
//! `D` (with a tilt iff `n - |D|` is even). The shorter of the two is optimal;
//! their lengths have opposite parity, so there is never a tie.

use std::fmt;

use crate::error::MorphError;
use crate::signature::Signature;

use super::table::ProductTable;
use super::tilt::tilt_table;
use super::vee::vee_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorphStep {
    Vee { preserved: usize },
    Tilt,
}

impl MorphStep {
    /// Bitmask of generators whose square this step flips.
    pub fn flip_mask(self, dim: usize) -> u32 {
        let all = (1u32 << dim) - 1;
        match self {
            MorphStep::Vee { preserved } => all & !(1 << preserved),
            MorphStep::Tilt => all,
        }
    }
}

impl fmt::Display for MorphStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphStep::Vee { preserved } => write!(f, "vee({preserved})"),
            MorphStep::Tilt => f.write_str("tilt"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphPlan {
    pub source: Signature,
    pub target: Signature,
    pub steps: Vec<MorphStep>,
}

impl MorphPlan {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MorphPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{} -> {}: [{}]", self.source.pattern(), self.target.pattern(), steps.join(", "))
    }
}

/// Shortest vee/tilt sequence taking `src` squares to `dst` squares. Vee
/// steps come in increasing preserved index, a tilt (if any) last.
pub fn plan_signature_change(src: &Signature, dst: &Signature) -> Result<MorphPlan, MorphError> {
    let n = src.dim();
    if n != dst.dim() {
        return Err(MorphError::DimensionMismatch { left: n, right: dst.dim() });
    }
    let all = (1u32 << n) - 1;
    let differ = src.negative_mask() ^ dst.negative_mask();
    let d = differ.count_ones() as usize;

    let direct = (differ, d % 2 == 1);
    let complement = (all & !differ, (n - d) % 2 == 0);
    let cost = |(set, tilt): (u32, bool)| set.count_ones() as usize + usize::from(tilt);
    let (set, tilt) = if cost(direct) <= cost(complement) { direct } else { complement };

    let mut steps: Vec<MorphStep> =
        (0..n).filter(|i| set >> i & 1 == 1).map(|preserved| MorphStep::Vee { preserved }).collect();
    if tilt {
        steps.push(MorphStep::Tilt);
    }
    let plan = MorphPlan { source: src.clone(), target: dst.clone(), steps };
    debug_assert_eq!(
        plan.steps.iter().fold(src.negative_mask(), |m, s| m ^ s.flip_mask(n)),
        dst.negative_mask()
    );
    Ok(plan)
}

/// Folds the plan's steps left to right, each consuming the previous table.
pub fn apply_plan(base: &ProductTable, plan: &MorphPlan) -> Result<ProductTable, MorphError> {
    if base.generator_squares() != plan.source.squares() {
        return Err(MorphError::PlanSourceMismatch {
            plan: plan.source.pattern(),
            table: base.signature().pattern(),
        });
    }
    plan.steps.iter().try_fold(base.clone(), |table, step| match step {
        MorphStep::Vee { preserved } => vee_table(&table, *preserved),
        MorphStep::Tilt => Ok(tilt_table(&table)),
    })
}
