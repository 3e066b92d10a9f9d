//! Command implementations behind the `co-cycles` binary. Each command
//! writes to the provided streams and returns its exit code, so the
//! integration tests can drive them directly.
//!
//! Exit codes: 0 for CO (or a completed report), 1 for NOT_CO (or an
//! oracle disagreement), 2 for input errors.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::generator::{gen_co_graph, gen_co_graph_with_size, gen_non_co_graph, GenParams, RNG_ALGORITHM};
use crate::graph::Graph;
use crate::oracle::{brute_chordless_cycles, brute_is_co, decompose_is_co, DEFAULT_ORIENTATION_CAP};
use crate::reducer::{enumerate_with_options, Enumeration, NotCoReason, ReduceOptions, Verdict};

/// Largest input the oracle command accepts for cycle enumeration.
pub const ORACLE_VERTEX_CAP: usize = 25;

/// Summary of one enumeration run.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub co: bool,
    pub reason: Option<NotCoReason>,
    pub failed_component: Option<usize>,
    pub n: usize,
    pub m: usize,
    pub component_count: usize,
    pub component_cycles: Vec<usize>,
    pub total_cycles: usize,
    pub duration_ms: f64,
}

impl RunReport {
    pub fn new(g: &Graph, e: &Enumeration, duration_ms: f64) -> RunReport {
        let component_cycles: Vec<usize> = e.components.iter().map(|c| c.cycle_count).collect();
        let total_cycles = match &e.verdict {
            Verdict::Co(cycles) => cycles.len(),
            Verdict::NotCo { .. } => 0,
        };
        let (co, reason, failed_component) = match &e.verdict {
            Verdict::Co(_) => (true, None, None),
            Verdict::NotCo { reason, component } => (false, Some(*reason), *component),
        };
        if co {
            debug_assert_eq!(component_cycles.iter().sum::<usize>(), total_cycles);
        }
        RunReport {
            co,
            reason,
            failed_component,
            n: g.n(),
            m: g.m(),
            component_count: e.components.len(),
            component_cycles,
            total_cycles,
            duration_ms,
        }
    }

    pub fn verdict_line(&self) -> String {
        match self.reason {
            None => "CO".to_string(),
            Some(reason) => format!("NOT_CO {reason}"),
        }
    }
}

#[derive(Serialize)]
struct JsonReport {
    co: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    n: usize,
    m: usize,
    cycles: Vec<Vec<u32>>,
    components: usize,
    duration_ms: f64,
}

fn load_graph(input: &Path, err: &mut dyn Write) -> Result<Graph, i32> {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", input.display());
            return Err(2);
        }
    };
    match Graph::parse(&text) {
        Ok(g) => Ok(g),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", input.display());
            Err(2)
        }
    }
}

fn run_enumerate(g: &Graph, threads: usize) -> Enumeration {
    let opts = ReduceOptions {
        parallel: threads > 1,
        ..Default::default()
    };
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| enumerate_with_options(g, &opts))
    } else {
        enumerate_with_options(g, &opts)
    }
}

pub fn cmd_check(input: &Path, threads: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_graph(input, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let start = Instant::now();
    let e = run_enumerate(&g, threads);
    let report = RunReport::new(&g, &e, start.elapsed().as_secs_f64() * 1e3);
    let _ = writeln!(out, "{}", report.verdict_line());
    if report.co {
        0
    } else {
        1
    }
}

pub fn cmd_enum(
    input: &Path,
    json: bool,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let g = match load_graph(input, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let start = Instant::now();
    let e = run_enumerate(&g, threads);
    let report = RunReport::new(&g, &e, start.elapsed().as_secs_f64() * 1e3);
    let cycles: Vec<Vec<u32>> = match &e.verdict {
        Verdict::Co(set) => set
            .iter()
            .map(|c| c.vertices().iter().map(|&v| g.label(v)).collect())
            .collect(),
        Verdict::NotCo { .. } => Vec::new(),
    };
    if json {
        let j = JsonReport {
            co: report.co,
            reason: report.reason.map(|r| r.to_string()),
            n: report.n,
            m: report.m,
            cycles,
            components: report.component_count,
            duration_ms: report.duration_ms,
        };
        let _ = writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"));
    } else {
        let _ = writeln!(out, "{}", report.verdict_line());
        for c in &cycles {
            let line: Vec<String> = c.iter().map(|l| l.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }
    if report.co {
        0
    } else {
        1
    }
}

pub fn cmd_gen(
    params: &GenParams,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let result = if params.want_co {
        gen_co_graph(params)
    } else {
        gen_non_co_graph(params)
    };
    let g = match result {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut text = String::new();
    text.push_str(&format!(
        "c co-cycles gen seed={} attachments={} min_len={} max_len={} non_co={} rng={}\n",
        params.seed,
        params.attachments,
        params.min_len,
        params.max_len,
        !params.want_co,
        RNG_ALGORITHM
    ));
    text.push_str(&g.to_edge_list());
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = write!(out, "{text}");
        }
    }
    0
}

pub fn cmd_oracle(input: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_graph(input, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if g.n() > ORACLE_VERTEX_CAP {
        let _ = writeln!(
            err,
            "error: oracle out of range: {} vertices exceeds the {}-vertex cap",
            g.n(),
            ORACLE_VERTEX_CAP
        );
        return 2;
    }
    let brute_set = brute_chordless_cycles(&g);
    let decompose = decompose_is_co(&g);
    let _ = writeln!(out, "cycles:");
    for c in &brute_set {
        let line: Vec<String> = c.vertices().iter().map(|&v| g.label(v).to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    let _ = writeln!(out, "decompose_is_co: {decompose}");
    let mut disagreement = false;
    match brute_is_co(&g, DEFAULT_ORIENTATION_CAP) {
        Ok(b) => {
            let _ = writeln!(out, "brute_is_co: {b}");
            if b != decompose {
                disagreement = true;
                let _ = writeln!(err, "error: orientation and decomposition oracles disagree");
            }
        }
        Err(e) => {
            let _ = writeln!(out, "brute_is_co: out of range ({e})");
        }
    }
    let e = run_enumerate(&g, 1);
    match &e.verdict {
        Verdict::Co(set) => {
            if !decompose {
                disagreement = true;
                let _ = writeln!(err, "error: reducer says CO but decompose_is_co is false");
            } else if *set != brute_set {
                disagreement = true;
                let _ = writeln!(err, "error: reducer cycle set differs from brute force");
            }
        }
        Verdict::NotCo { .. } => {
            if decompose {
                disagreement = true;
                let _ = writeln!(err, "error: reducer says NOT_CO but decompose_is_co is true");
            }
        }
    }
    if disagreement {
        let _ = writeln!(out, "reducer: MISMATCH");
        1
    } else {
        let _ = writeln!(out, "reducer: agree");
        0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub cycles: usize,
    pub duration_ms: f64,
}

/// Generate a CO graph per size, enumerate, and time it. With
/// `repeats > 1` the fastest run per size is kept.
pub fn run_bench(sizes: &[usize], seed: u64, repeats: usize, threads: usize) -> Vec<BenchRow> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let g = gen_co_graph_with_size(n, seed.wrapping_add(i as u64));
        let mut best = f64::INFINITY;
        let mut cycles = 0usize;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let e = run_enumerate(&g, threads);
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            cycles = match &e.verdict {
                Verdict::Co(set) => set.len(),
                Verdict::NotCo { .. } => panic!("benchmark generator must produce CO graphs"),
            };
            best = best.min(elapsed);
        }
        rows.push(BenchRow {
            n: g.n(),
            m: g.m(),
            cycles,
            duration_ms: best,
        });
    }
    rows
}

/// Least-squares slope of ln(duration) against ln(n).
pub fn log_log_slope(rows: &[BenchRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.duration_ms.max(1e-4).ln()))
        .collect();
    let k = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (k * sxy - sx * sy) / (k * sxx - sx * sx)
}

pub fn cmd_bench(
    sizes: &[usize],
    seed: u64,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if sizes.is_empty() {
        let _ = writeln!(err, "error: --sizes must list at least one size");
        return 2;
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        let _ = writeln!(err, "error: sizes must be strictly ascending");
        return 2;
    }
    let rows = run_bench(sizes, seed, 1, threads);
    let _ = writeln!(out, "n,m,cycles,duration_ms");
    for r in &rows {
        let _ = writeln!(out, "{},{},{},{:.3}", r.n, r.m, r.cycles, r.duration_ms);
    }
    if rows.len() >= 2 {
        let _ = writeln!(err, "log-log slope: {:.3}", log_log_slope(&rows));
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_invariant_holds() {
        let g = crate::fixtures::pentagon_two_triangles();
        let e = enumerate_with_options(&g, &ReduceOptions::default());
        let report = RunReport::new(&g, &e, 0.0);
        assert!(report.co);
        assert_eq!(report.component_cycles.iter().sum::<usize>(), report.total_cycles);
        assert_eq!(report.total_cycles, 3);
        assert_eq!(report.verdict_line(), "CO");
    }

    #[test]
    fn slope_of_linear_data_is_one() {
        let rows: Vec<BenchRow> = [(100usize, 1.0f64), (1000, 10.0), (10000, 100.0)]
            .iter()
            .map(|&(n, d)| BenchRow {
                n,
                m: n,
                cycles: 0,
                duration_ms: d,
            })
            .collect();
        assert!((log_log_slope(&rows) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bench_rows_carry_count_identity() {
        let rows = run_bench(&[50, 100], 3, 1, 1);
        for r in &rows {
            assert_eq!(r.cycles, r.m - r.n + 1);
        }
    }
}
