//! The augmentation experiment design: factor levels, the L18 orthogonal
//! schedule, and the 20-configuration run grid.
//!
//! The factor space is noise (2 levels) × brightness × rotation × flip
//! (3 levels each), 54 combinations in total. The L18 schedule covers that
//! space with 18 runs whose factor columns are pairwise balanced, and the
//! grid adds two baselines: `Run_orig` (no balancing at all) and `Run_0`
//! (duplication-only oversampling).
//!
//! The schedule is transcribed as a fixed table rather than generated by a
//! mixed-level array constructor; [`verify_orthogonality`] guards the
//! transcription.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Noise factor levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum NoiseLevel {
    /// No noise injection.
    None,
    /// Additive Gaussian noise.
    AddNoise,
}

/// Brightness factor levels (applied in the HSV V channel).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BrightnessLevel {
    /// Brightness unchanged.
    Same,
    /// V channel scaled up by 50%.
    Increase,
    /// V channel scaled down by 50%.
    Decrease,
}

/// Rotation factor levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RotationLevel {
    /// No rotation.
    None,
    /// 45° counter-clockwise.
    Left,
    /// 45° clockwise.
    Right,
}

/// Flip factor levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FlipLevel {
    /// No flip.
    None,
    /// Left-right mirror.
    Horizontal,
    /// Top-bottom mirror.
    Vertical,
}

/// One point of the augmentation factor space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FactorLevels {
    pub noise: NoiseLevel,
    pub brightness: BrightnessLevel,
    pub rotation: RotationLevel,
    pub flip: FlipLevel,
}

impl FactorLevels {
    /// Identity configuration: every factor at its neutral level.
    pub const IDENTITY: FactorLevels = FactorLevels {
        noise: NoiseLevel::None,
        brightness: BrightnessLevel::Same,
        rotation: RotationLevel::None,
        flip: FlipLevel::None,
    };

    /// Zero-based level index of this row in the given factor column.
    pub fn level_index(&self, factor: Factor) -> usize {
        match factor {
            Factor::Noise => self.noise as usize,
            Factor::Brightness => self.brightness as usize,
            Factor::Rotation => self.rotation as usize,
            Factor::Flip => self.flip as usize,
        }
    }
}

/// The four factor columns of the design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Factor {
    Noise,
    Brightness,
    Rotation,
    Flip,
}

impl Factor {
    pub const ALL: [Factor; 4] = [Factor::Noise, Factor::Brightness, Factor::Rotation, Factor::Flip];

    /// Number of declared levels in this column.
    pub fn level_count(self) -> usize {
        match self {
            Factor::Noise => 2,
            Factor::Brightness | Factor::Rotation | Factor::Flip => 3,
        }
    }

    /// Display name of a level index in this column.
    pub fn level_name(self, index: usize) -> &'static str {
        match self {
            Factor::Noise => ["None", "AddNoise"][index],
            Factor::Brightness => ["Same", "Increase", "Decrease"][index],
            Factor::Rotation => ["None", "Left", "Right"][index],
            Factor::Flip => ["None", "Horizontal", "Vertical"][index],
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Factor::Noise => "Noise",
            Factor::Brightness => "Brightness",
            Factor::Rotation => "Rotation",
            Factor::Flip => "Flip",
        };
        f.write_str(name)
    }
}

/// Total number of factor combinations (2·3·3·3).
pub const COMBINATION_COUNT: usize = 54;

/// Number of rows in the L18 schedule.
pub const L18_ROWS: usize = 18;

/// Number of run plans in the full grid (L18 plus two baselines).
pub const RUN_COUNT: usize = 20;

const fn row(
    noise: NoiseLevel,
    brightness: BrightnessLevel,
    rotation: RotationLevel,
    flip: FlipLevel,
) -> FactorLevels {
    FactorLevels { noise, brightness, rotation, flip }
}

#[rustfmt::skip]
const L18: [FactorLevels; L18_ROWS] = {
    use BrightnessLevel::{Decrease, Increase, Same};
    use FlipLevel::{Horizontal, Vertical};
    use NoiseLevel::AddNoise;
    use RotationLevel::{Left, Right};
    [
        row(NoiseLevel::None, Increase, Left,                 Horizontal),      // R1
        row(NoiseLevel::None, Increase, Right,                Vertical),        // R2
        row(NoiseLevel::None, Increase, RotationLevel::None,  FlipLevel::None), // R3
        row(NoiseLevel::None, Decrease, Left,                 Vertical),        // R4
        row(NoiseLevel::None, Decrease, Right,                FlipLevel::None), // R5
        row(NoiseLevel::None, Decrease, RotationLevel::None,  Horizontal),      // R6
        row(NoiseLevel::None, Same,     Left,                 FlipLevel::None), // R7
        row(NoiseLevel::None, Same,     Right,                Horizontal),      // R8
        row(NoiseLevel::None, Same,     RotationLevel::None,  Vertical),        // R9
        row(AddNoise,         Increase, Left,                 FlipLevel::None), // R10
        row(AddNoise,         Increase, Right,                Horizontal),      // R11
        row(AddNoise,         Increase, RotationLevel::None,  Vertical),        // R12
        row(AddNoise,         Decrease, Left,                 Horizontal),      // R13
        row(AddNoise,         Decrease, Right,                Vertical),        // R14
        row(AddNoise,         Decrease, RotationLevel::None,  FlipLevel::None), // R15
        row(AddNoise,         Same,     Left,                 Vertical),        // R16
        row(AddNoise,         Same,     Right,                FlipLevel::None), // R17
        row(AddNoise,         Same,     RotationLevel::None,  Horizontal),      // R18
    ]
};

/// An 18-row mixed-level array over the four factor columns.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TaguchiArray {
    rows: Vec<FactorLevels>,
}

/// Design-level validation errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignError {
    #[error("a Taguchi array must have {L18_ROWS} rows, got {0}")]
    WrongRowCount(usize),
    #[error("unknown run id `{0}` (expected Run_orig, Run_0, or R1..R18)")]
    UnknownRunId(alloc::string::String),
}

impl TaguchiArray {
    /// Wraps explicit rows; fails unless there are exactly 18.
    pub fn from_rows(rows: Vec<FactorLevels>) -> Result<Self, DesignError> {
        if rows.len() != L18_ROWS {
            return Err(DesignError::WrongRowCount(rows.len()));
        }
        Ok(Self { rows })
    }

    /// Rows in schedule order R1..R18.
    pub fn rows(&self) -> &[FactorLevels] {
        &self.rows
    }

    /// Row for the 1-based run number R1..R18.
    pub fn run(&self, number: usize) -> FactorLevels {
        self.rows[number - 1]
    }
}

/// Builds the L18 schedule.
pub fn build_l18() -> TaguchiArray {
    TaguchiArray { rows: L18.to_vec() }
}

/// Joint level counts for one pair of factor columns.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairCounts {
    pub factors: (Factor, Factor),
    /// `counts[i][j]` = number of rows at level i of the first factor and
    /// level j of the second.
    pub counts: Vec<Vec<usize>>,
    /// Count every cell must hold for the pair to be balanced.
    pub expected: usize,
}

impl PairCounts {
    pub fn is_uniform(&self) -> bool {
        self.counts.iter().flatten().all(|&c| c == self.expected)
    }
}

/// Pairwise balance report for a Taguchi array.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BalanceReport {
    pub pass: bool,
    pub pairs: Vec<PairCounts>,
}

/// Tallies joint level counts for every pair of factor columns.
///
/// The array is pairwise balanced iff every joint combination occurs equally
/// often: 3 times for the 2-level×3-level pairs and 2 times for the
/// 3-level×3-level pairs. Imbalance is reported, not an error.
pub fn verify_orthogonality(array: &TaguchiArray) -> BalanceReport {
    let mut pairs = Vec::new();
    for (i, &fa) in Factor::ALL.iter().enumerate() {
        for &fb in &Factor::ALL[i + 1..] {
            let (la, lb) = (fa.level_count(), fb.level_count());
            let mut counts = alloc::vec![alloc::vec![0usize; lb]; la];
            for row in array.rows() {
                counts[row.level_index(fa)][row.level_index(fb)] += 1;
            }
            pairs.push(PairCounts { factors: (fa, fb), counts, expected: L18_ROWS / (la * lb) });
        }
    }
    BalanceReport { pass: pairs.iter().all(PairCounts::is_uniform), pairs }
}

/// Identity of one experimental run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunId {
    /// Original imbalanced data, no augmentation or resampling.
    RunOrig,
    /// Duplication-only oversampling baseline.
    Run0,
    /// L18 schedule row, 1-based (R1..R18).
    Taguchi(u8),
}

impl RunId {
    /// Canonical position in the grid: Run_orig, Run_0, R1..R18.
    pub fn grid_index(self) -> usize {
        match self {
            RunId::RunOrig => 0,
            RunId::Run0 => 1,
            RunId::Taguchi(n) => 1 + n as usize,
        }
    }
}

impl PartialOrd for RunId {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RunId {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.grid_index().cmp(&other.grid_index())
    }
}

impl fmt::Display for RunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunId::RunOrig => f.write_str("Run_orig"),
            RunId::Run0 => f.write_str("Run_0"),
            RunId::Taguchi(n) => write!(f, "R{n}"),
        }
    }
}

impl FromStr for RunId {
    type Err = DesignError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Run_orig" => Ok(RunId::RunOrig),
            "Run_0" => Ok(RunId::Run0),
            _ => s
                .strip_prefix('R')
                .and_then(|n| n.parse::<u8>().ok())
                .filter(|n| (1..=18).contains(n))
                .map(RunId::Taguchi)
                .ok_or_else(|| DesignError::UnknownRunId(s.into())),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for RunId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for RunId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <alloc::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How the training portion of a fold is rebalanced for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Balancing {
    /// Training set used as-is.
    NoBalancing,
    /// Minority originals re-listed until classes balance.
    DuplicateOnly,
    /// Minority clips synthesized by augmentation until classes balance.
    AugmentToBalance,
}

/// One experimental configuration of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunPlan {
    pub run_id: RunId,
    /// Augmentation levels; absent for the two baselines.
    pub levels: Option<FactorLevels>,
    pub balancing: Balancing,
}

impl RunPlan {
    /// The plan for a single run id.
    pub fn for_run(run_id: RunId) -> RunPlan {
        match run_id {
            RunId::RunOrig => {
                RunPlan { run_id, levels: None, balancing: Balancing::NoBalancing }
            }
            RunId::Run0 => RunPlan { run_id, levels: None, balancing: Balancing::DuplicateOnly },
            RunId::Taguchi(n) => RunPlan {
                run_id,
                levels: Some(L18[n as usize - 1]),
                balancing: Balancing::AugmentToBalance,
            },
        }
    }
}

/// The full 20-run grid in canonical order: Run_orig, Run_0, R1..R18.
pub fn enumerate_runs() -> Vec<RunPlan> {
    let mut plans = Vec::with_capacity(RUN_COUNT);
    plans.push(RunPlan::for_run(RunId::RunOrig));
    plans.push(RunPlan::for_run(RunId::Run0));
    for n in 1..=L18_ROWS as u8 {
        plans.push(RunPlan::for_run(RunId::Taguchi(n)));
    }
    plans
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    #[test]
    fn l18_matches_published_rows() {
        let array = build_l18();
        assert_eq!(array.rows().len(), 18);
        assert_eq!(
            array.run(1),
            row(NoiseLevel::None, BrightnessLevel::Increase, RotationLevel::Left, FlipLevel::Horizontal)
        );
        assert_eq!(
            array.run(15),
            row(NoiseLevel::AddNoise, BrightnessLevel::Decrease, RotationLevel::None, FlipLevel::None)
        );
        assert_eq!(
            array.run(18),
            row(NoiseLevel::AddNoise, BrightnessLevel::Same, RotationLevel::None, FlipLevel::Horizontal)
        );
    }

    #[test]
    fn l18_is_orthogonal() {
        let report = verify_orthogonality(&build_l18());
        assert!(report.pass);
        assert_eq!(report.pairs.len(), 6);
        for pair in &report.pairs {
            assert!(pair.is_uniform(), "pair {:?} not balanced: {:?}", pair.factors, pair.counts);
        }
    }

    #[test]
    fn noise_brightness_joint_counts_are_three() {
        let report = verify_orthogonality(&build_l18());
        let pair = &report.pairs[0];
        assert_eq!(pair.factors, (Factor::Noise, Factor::Brightness));
        assert_eq!(pair.expected, 3);
        assert!(pair.counts.iter().flatten().all(|&c| c == 3));
    }

    #[test]
    fn rotation_flip_joint_counts_are_two() {
        let report = verify_orthogonality(&build_l18());
        let pair = report
            .pairs
            .iter()
            .find(|p| p.factors == (Factor::Rotation, Factor::Flip))
            .unwrap();
        assert_eq!(pair.expected, 2);
        assert!(pair.counts.iter().flatten().all(|&c| c == 2));
    }

    #[test]
    fn duplicated_row_breaks_balance() {
        let mut rows = build_l18().rows().to_vec();
        rows[1] = rows[0];
        let broken = TaguchiArray::from_rows(rows).unwrap();
        assert!(!verify_orthogonality(&broken).pass);
    }

    #[test]
    fn rows_are_distinct() {
        let array = build_l18();
        let distinct: BTreeSet<_> = array.rows().iter().map(|r| {
            (r.level_index(Factor::Noise), r.level_index(Factor::Brightness),
             r.level_index(Factor::Rotation), r.level_index(Factor::Flip))
        }).collect();
        assert_eq!(distinct.len(), 18);
    }

    #[test]
    fn per_column_level_counts_balance() {
        let array = build_l18();
        for factor in Factor::ALL {
            let mut counts = alloc::vec![0usize; factor.level_count()];
            for row in array.rows() {
                counts[row.level_index(factor)] += 1;
            }
            let expected = 18 / factor.level_count();
            assert!(counts.iter().all(|&c| c == expected), "{factor}: {counts:?}");
        }
    }

    #[test]
    fn grid_has_twenty_canonical_runs() {
        let runs = enumerate_runs();
        assert_eq!(runs.len(), RUN_COUNT);
        assert_eq!(runs[0].run_id, RunId::RunOrig);
        assert_eq!(runs[0].balancing, Balancing::NoBalancing);
        assert_eq!(runs[0].levels, None);
        assert_eq!(runs[1].run_id, RunId::Run0);
        assert_eq!(runs[1].balancing, Balancing::DuplicateOnly);
        let r15 = &runs[2 + 14];
        assert_eq!(r15.run_id, RunId::Taguchi(15));
        assert_eq!(r15.balancing, Balancing::AugmentToBalance);
        assert_eq!(r15.levels, Some(build_l18().run(15)));
    }

    #[test]
    fn run_id_round_trips_through_strings() {
        for plan in enumerate_runs() {
            let text = plan.run_id.to_string();
            assert_eq!(text.parse::<RunId>().unwrap(), plan.run_id);
        }
        assert!("R19".parse::<RunId>().is_err());
        assert!("R0".parse::<RunId>().is_err());
        assert!("bogus".parse::<RunId>().is_err());
    }

    #[test]
    fn wrong_row_count_is_rejected() {
        let rows = build_l18().rows()[..17].to_vec();
        assert_eq!(TaguchiArray::from_rows(rows), Err(DesignError::WrongRowCount(17)));
    }
}
