//! Wall-clock scaling of the carve on prisms.

use std::time::{Duration, Instant};

use crate::carve::{carve, outer_edges, CarveStatus};
use crate::corpus::generate_prism;

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub k: usize,
    pub n: usize,
    pub status: CarveStatus,
    /// Fastest observed single carve.
    pub time: Duration,
    pub nanos_per_vertex: f64,
}

/// Repeats each carve until `min_total` has elapsed (at least `min_runs`
/// times) and keeps the fastest run. Graph construction is not timed.
pub fn bench_scaling(sizes: &[usize], min_runs: usize, min_total: Duration) -> Vec<ScalingRow> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &k in sizes {
        let Ok(g) = generate_prism(k) else { continue };
        let emb = g.embedding;
        let entrance = outer_edges(&emb)[0];
        let mut best = Duration::MAX;
        let mut status = CarveStatus::Failure;
        let mut runs = 0;
        let start = Instant::now();
        while runs < min_runs.max(1) || start.elapsed() < min_total {
            let t = Instant::now();
            let r = carve(&emb, entrance).expect("prism entrance is an outer edge");
            best = best.min(t.elapsed());
            status = r.status;
            runs += 1;
        }
        let n = emb.vertex_count();
        rows.push(ScalingRow {
            k,
            n,
            status,
            time: best,
            nanos_per_vertex: best.as_nanos() as f64 / n as f64,
        });
    }
    rows
}

/// Time per vertex of the last row over that of the first.
pub fn per_vertex_ratio(rows: &[ScalingRow]) -> Option<f64> {
    let (first, last) = (rows.first()?, rows.last()?);
    Some(last.nanos_per_vertex / first.nanos_per_vertex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_follow_sizes() {
        let rows = bench_scaling(&[2, 5], 1, Duration::ZERO);
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![8, 20]);
        assert!(rows.iter().all(|r| r.status == CarveStatus::HamiltonianCycle));
        assert!(bench_scaling(&[], 1, Duration::ZERO).is_empty());
        assert_eq!(per_vertex_ratio(&[]), None);
    }
}
