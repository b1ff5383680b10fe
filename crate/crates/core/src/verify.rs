//! Residuals, matching against the oracle, and per-run classification.
//!
//! A candidate is verified by its own backward residual only. Oracle
//! distances are reported next to it but never change the verdict.

use sextica_oracle::OracleReport;
use sextica_poly::{ComplexScalar, Polynomial};

use crate::sextic::{S56Mode, SexticIntermediates, ShiftCrossCheck};
use crate::DegeneracyKind;

/// `|p(x)| / max(Σ|aₖ||x|^k, f64::MIN_POSITIVE)`.
pub fn residual_rel(p: &Polynomial, x: ComplexScalar) -> f64 {
    p.backward_residual(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub residual_tol: f64,
    pub dup_tol: f64,
    pub match_tol: f64,
    /// Match tolerance for oracle roots flagged as part of a cluster.
    pub cluster_match_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { residual_tol: 1e-6, dup_tol: 1e-7, match_tol: 1e-6, cluster_match_tol: 1e-4 }
    }
}

/// Optimal pairing between two short lists.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    /// `(index in left, index in right)`.
    pub pairs: Vec<(usize, usize)>,
    pub max_distance: f64,
    pub total_distance: f64,
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
}

impl Matching {
    pub fn partner_of_left(&self, i: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == i).map(|p| p.1)
    }
}

/// Pairs every entry of the shorter list with a distinct entry of the longer
/// one, minimizing the largest distance and then the total. Exhaustive, so
/// meant for lists of at most about eight entries.
pub fn match_roots(left: &[ComplexScalar], right: &[ComplexScalar]) -> Matching {
    let swapped = left.len() > right.len();
    let (small, large) = if swapped { (right, left) } else { (left, right) };

    let mut best: Option<(f64, f64, Vec<usize>)> = None;
    let mut current = Vec::with_capacity(small.len());
    let mut used = vec![false; large.len()];
    search(small, large, &mut current, &mut used, 0.0, 0.0, &mut best);

    let assignment = best.map(|b| b.2).unwrap_or_default();
    let mut pairs: Vec<(usize, usize)> =
        assignment.iter().enumerate().map(|(i, &j)| if swapped { (j, i) } else { (i, j) }).collect();
    pairs.sort_unstable();
    let dists: Vec<f64> = pairs.iter().map(|&(i, j)| (left[i] - right[j]).norm()).collect();
    let unmatched_left = (0..left.len()).filter(|i| !pairs.iter().any(|p| p.0 == *i)).collect();
    let unmatched_right = (0..right.len()).filter(|j| !pairs.iter().any(|p| p.1 == *j)).collect();
    Matching {
        pairs,
        max_distance: dists.iter().copied().fold(0.0, f64::max),
        total_distance: dists.iter().sum(),
        unmatched_left,
        unmatched_right,
    }
}

fn search(
    small: &[ComplexScalar],
    large: &[ComplexScalar],
    current: &mut Vec<usize>,
    used: &mut [bool],
    max: f64,
    total: f64,
    best: &mut Option<(f64, f64, Vec<usize>)>,
) {
    if let Some((bm, bt, _)) = best {
        if max > *bm || (max == *bm && total >= *bt) {
            return;
        }
    }
    let i = current.len();
    if i == small.len() {
        *best = Some((max, total, current.clone()));
        return;
    }
    for j in 0..large.len() {
        if used[j] {
            continue;
        }
        let d = (small[i] - large[j]).norm();
        // NaN distances sort last
        let d = if d.is_nan() { f64::INFINITY } else { d };
        used[j] = true;
        current.push(j);
        search(small, large, current, used, max.max(d), total + d, best);
        current.pop();
        used[j] = false;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootStatus {
    Verified,
    Spurious,
    /// The candidate is not a finite number, so it has no residual.
    Unmatched,
}

impl RootStatus {
    pub fn name(self) -> &'static str {
        match self {
            Self::Verified => "verified",
            Self::Spurious => "spurious",
            Self::Unmatched => "unmatched",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootVerdict {
    pub value: ComplexScalar,
    pub residual_rel: f64,
    pub matched_oracle: Option<ComplexScalar>,
    pub distance: Option<f64>,
    /// Whether `distance` is within the match tolerance.
    pub oracle_agrees: Option<bool>,
    pub status: RootStatus,
}

/// Everything a pipeline hands to [`classify`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PipelineOutput {
    pub method_path: String,
    pub branch_flags: Vec<String>,
    pub candidates: Vec<ComplexScalar>,
    pub degeneracy: Option<DegeneracyKind>,
    pub s56_mode: Option<S56Mode>,
    pub t3_crosscheck: Option<ShiftCrossCheck>,
    pub intermediates: Option<SexticIntermediates>,
    pub seats: Vec<SeatSummary>,
}

/// An extra `Γ₄` seat run in all-seats mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SeatSummary {
    pub label: &'static str,
    pub gamma4: ComplexScalar,
    /// Why the seat stopped, if it did.
    pub degeneracy: Option<DegeneracyKind>,
    /// Largest distance to the primary candidates under the optimal pairing.
    pub distance_to_primary: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub input: Polynomial,
    pub method_path: String,
    pub branch_flags: Vec<String>,
    pub verdicts: Vec<RootVerdict>,
    pub degeneracy: Option<DegeneracyKind>,
    pub verified_count: usize,
    pub spurious_count: usize,
    pub unmatched_count: usize,
    /// Index pairs of candidates closer than `dup_tol`.
    pub duplicates: Vec<(usize, usize)>,
    pub s56_mode: Option<S56Mode>,
    pub t3_crosscheck: Option<ShiftCrossCheck>,
    pub intermediates: Option<SexticIntermediates>,
    pub seats: Vec<SeatSummary>,
    pub oracle: Option<OracleReport>,
    /// Largest candidate-to-oracle distance under the optimal pairing.
    pub oracle_max_distance: Option<f64>,
}

impl RunReport {
    pub fn has_duplicates(&self) -> bool {
        !self.duplicates.is_empty()
    }

    pub fn all_verified(&self) -> bool {
        self.degeneracy.is_none() && self.verified_count == self.verdicts.len()
    }

    pub fn max_residual(&self) -> Option<f64> {
        self.verdicts.iter().map(|v| v.residual_rel).reduce(f64::max)
    }
}

pub fn classify(
    input: &Polynomial,
    run: PipelineOutput,
    oracle: Option<&OracleReport>,
    tol: &Tolerances,
) -> RunReport {
    let matching = oracle.map(|o| match_roots(&run.candidates, &o.roots));
    let verdicts: Vec<RootVerdict> = run
        .candidates
        .iter()
        .enumerate()
        .map(|(i, &value)| {
            let residual_rel = residual_rel(input, value);
            let status = if !(value.re.is_finite() && value.im.is_finite()) {
                RootStatus::Unmatched
            } else if residual_rel <= tol.residual_tol {
                RootStatus::Verified
            } else {
                RootStatus::Spurious
            };
            let partner = matching.as_ref().and_then(|m| m.partner_of_left(i));
            let (matched_oracle, distance, oracle_agrees) = match (partner, oracle) {
                (Some(j), Some(o)) => {
                    let d = (value - o.roots[j]).norm();
                    let limit = if o.in_cluster(j) { tol.cluster_match_tol } else { tol.match_tol };
                    (Some(o.roots[j]), Some(d), Some(d <= limit))
                }
                _ => (None, None, None),
            };
            RootVerdict { value, residual_rel, matched_oracle, distance, oracle_agrees, status }
        })
        .collect();

    let count = |s| verdicts.iter().filter(|v| v.status == s).count();
    let mut duplicates = Vec::new();
    for i in 0..run.candidates.len() {
        for j in i + 1..run.candidates.len() {
            if (run.candidates[i] - run.candidates[j]).norm() < tol.dup_tol {
                duplicates.push((i, j));
            }
        }
    }

    RunReport {
        input: input.clone(),
        method_path: run.method_path,
        branch_flags: run.branch_flags,
        verified_count: count(RootStatus::Verified),
        spurious_count: count(RootStatus::Spurious),
        unmatched_count: count(RootStatus::Unmatched),
        verdicts,
        degeneracy: run.degeneracy,
        duplicates,
        s56_mode: run.s56_mode,
        t3_crosscheck: run.t3_crosscheck,
        intermediates: run.intermediates,
        seats: run.seats,
        oracle: oracle.cloned(),
        oracle_max_distance: matching.map(|m| m.max_distance),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sextica_oracle::{find_roots, OracleConfig};
    use sextica_poly::c64;

    fn p(c: &[f64]) -> Polynomial {
        Polynomial::from_real(c).unwrap()
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual_rel(&p(&[1.0, 0.0, -1.0]), c64(1.0, 0.0)), 0.0);
        let r = residual_rel(&p(&[1.0, 0.0, -1.0]), c64(1.0 + 1e-8, 0.0));
        assert!(r > 3e-9 && r < 3e-8, "{r:e}");
        assert_eq!(residual_rel(&p(&[1.0, 0.0, 0.0]), c64(0.0, 0.0)), 0.0);
    }

    #[test]
    fn matching_examples() {
        let a = [c64(1.0, 0.0), c64(2.0, 1.0), c64(-3.0, 0.5)];
        assert_eq!(match_roots(&a, &a).max_distance, 0.0);
        let b = [a[2], a[0], a[1]];
        let m = match_roots(&a, &b);
        assert_eq!(m.max_distance, 0.0);
        assert_eq!(m.pairs, vec![(0, 1), (1, 2), (2, 0)]);

        let shifted: Vec<_> = a.iter().map(|z| z + c64(1e-7, 0.0)).collect();
        let d = match_roots(&shifted, &a).max_distance;
        assert!((0.5e-7..=2e-7).contains(&d));
    }

    #[test]
    fn matching_reports_unmatched_and_is_symmetric() {
        let a = [c64(0.0, 0.0), c64(5.0, 0.0)];
        let b = [c64(5.1, 0.0), c64(9.0, 0.0), c64(0.2, 0.0)];
        let ab = match_roots(&a, &b);
        let ba = match_roots(&b, &a);
        assert_eq!(ab.unmatched_right, vec![1]);
        assert!(ab.unmatched_left.is_empty());
        assert_eq!(ba.unmatched_left, vec![1]);
        assert_eq!(ab.max_distance, ba.max_distance);
    }

    #[test]
    fn matching_prefers_min_max_over_greedy() {
        // greedy nearest-first pairs 0.0 with 0.1 and leaves 1.0 with -1.0
        let a = [c64(0.0, 0.0), c64(1.0, 0.0)];
        let b = [c64(0.1, 0.0), c64(-1.0, 0.0)];
        let m = match_roots(&a, &b);
        assert_eq!(m.pairs, vec![(0, 1), (1, 0)]);
        assert!((m.max_distance - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quartic_run_is_all_verified() {
        let input = p(&[1.0, -10.0, 35.0, -50.0, 24.0]);
        let roots = crate::quartic::solve_quartic(&input).unwrap().roots.to_vec();
        let oracle = find_roots(&input, &OracleConfig::default()).unwrap();
        let run = PipelineOutput { method_path: "t1".into(), candidates: roots, ..Default::default() };
        let report = classify(&input, run, Some(&oracle), &Tolerances::default());
        assert_eq!(report.verified_count, 4);
        assert_eq!(report.spurious_count, 0);
        assert!(report.oracle_max_distance.unwrap() <= 1e-9);
        assert!(report.verdicts.iter().all(|v| v.oracle_agrees == Some(true)));
    }

    #[test]
    fn degenerate_run_has_no_verdicts() {
        let input = p(&[1.0, 2.0, 1.0, 0.0, 1.0, 0.0, 0.0]);
        let run = PipelineOutput {
            method_path: "t2".into(),
            degeneracy: Some(DegeneracyKind::DegenerateV),
            ..Default::default()
        };
        let report = classify(&input, run, None, &Tolerances::default());
        assert!(report.verdicts.is_empty());
        assert_eq!(report.degeneracy, Some(DegeneracyKind::DegenerateV));
        assert!(!report.all_verified());
    }

    #[test]
    fn mixed_candidates() {
        let input = Polynomial::from_roots(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0].map(|x| c64(x, 0.0))).unwrap();
        let cands =
            vec![c64(3.0, 0.0), c64(0.5, 0.5), c64(-7.0, 0.0), c64(10.0, 2.0), c64(2.5, 0.0), c64(0.0, 1.0)];
        let run = PipelineOutput { candidates: cands, ..Default::default() };
        let report = classify(&input, run, None, &Tolerances::default());
        assert_eq!(report.verified_count, 1);
        assert_eq!(report.spurious_count, 5);
    }

    #[test]
    fn non_finite_candidate_is_unmatched() {
        let input = p(&[1.0, 0.0, -1.0]);
        let run =
            PipelineOutput { candidates: vec![c64(f64::NAN, 0.0), c64(1.0, 0.0)], ..Default::default() };
        let report = classify(&input, run, None, &Tolerances::default());
        assert_eq!(report.verdicts[0].status, RootStatus::Unmatched);
        assert_eq!(report.verified_count, 1);
    }

    #[test]
    fn duplicates_are_flagged() {
        let input = p(&[1.0, -2.0, 1.0]);
        let run =
            PipelineOutput { candidates: vec![c64(1.0, 0.0), c64(1.0 + 1e-9, 0.0)], ..Default::default() };
        let report = classify(&input, run, None, &Tolerances::default());
        assert_eq!(report.duplicates, vec![(0, 1)]);
    }
}
