//! Splitting a membership vector into its humps.

use crate::error::{Error, Result};
use crate::fuzzyset::FuzzySet;

/// Splits `target` at interior strict local minima, including zero plateaus
/// between humps. Each segment keeps its memberships in place and is zero
/// elsewhere; a valley run goes to the segment on its left. A unimodal
/// input yields one segment equal to the input.
pub fn segment(target: &FuzzySet) -> Result<Vec<FuzzySet>> {
    if target.sigma_count() == 0.0 {
        return Err(Error::EmptyFuzzySet);
    }
    let mu = target.memberships();
    let n = mu.len();

    // end indices of maximal constant runs that are strictly below both neighbors
    let mut split_after = Vec::new();
    let mut run_start = 0;
    for i in 1..=n {
        if i == n || mu[i] != mu[run_start] {
            let run_end = i - 1;
            if run_start > 0 && run_end < n - 1 && mu[run_start - 1] > mu[run_start] {
                // i < n here, so mu[run_end + 1] exists and differs from the run value
                if mu[run_end + 1] > mu[run_end] {
                    split_after.push(run_end);
                }
            }
            run_start = i;
        }
    }

    let mut segments = Vec::with_capacity(split_after.len() + 1);
    let mut start = 0;
    for &end in split_after.iter().chain(std::iter::once(&(n - 1))) {
        let mut values = vec![0.0; n];
        values[start..=end].copy_from_slice(&mu[start..=end]);
        segments.push(target.with_memberships(values));
        start = end + 1;
    }
    Ok(segments)
}
