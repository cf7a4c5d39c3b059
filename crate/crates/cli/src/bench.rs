//! Parameter sweeps over random instances.

use std::io::Write;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::ValueEnum;
use serde::Deserialize;

use speccon::io::{gen_random, GenParams};
use speccon::solvers::{solve_auto_with, solve_with};
use speccon::{SolverConfig, SolverError};

use crate::SolverArg;

fn one() -> u64 {
    1
}

/// Every combination of `n`, `k`, `beta`, `p`, `q` is generated `repeats` times with seeds
/// `seed, seed + 1, ...`; combinations with `beta > k` are skipped. Each case runs every solver.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub beta: Vec<usize>,
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub seed: u64,
    #[serde(default = "one")]
    pub repeats: u64,
    pub solvers: Vec<String>,
    pub time_limit_secs: f64,
}

impl BenchConfig {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let cfg: BenchConfig = serde_json::from_str(text)?;
        for (name, empty) in [
            ("n", cfg.n.is_empty()),
            ("k", cfg.k.is_empty()),
            ("beta", cfg.beta.is_empty()),
            ("p", cfg.p.is_empty()),
            ("q", cfg.q.is_empty()),
            ("solvers", cfg.solvers.is_empty()),
        ] {
            if empty {
                bail!("'{name}' must not be empty");
            }
        }
        if cfg.repeats == 0 {
            bail!("'repeats' must be at least 1");
        }
        if !cfg.time_limit_secs.is_finite() || cfg.time_limit_secs <= 0.0 {
            bail!("'time_limit_secs' must be positive");
        }
        cfg.solver_args()?;
        Ok(cfg)
    }

    fn solver_args(&self) -> anyhow::Result<Vec<SolverArg>> {
        self.solvers
            .iter()
            .map(|s| SolverArg::from_str(s, true).map_err(|_| anyhow::anyhow!("unknown solver '{s}'")))
            .collect()
    }
}

const HEADER: [&str; 13] = [
    "n",
    "k",
    "beta",
    "p",
    "q",
    "seed",
    "solver",
    "connectable",
    "millis",
    "nodes_explored",
    "trees_enumerated",
    "dp_entries",
    "families_examined",
];

/// Writes the header and one row per (case, solver), in sweep order. The `connectable` column
/// is `true`, `false`, `timeout` or `refused`.
pub fn run(cfg: &BenchConfig, out: impl Write) -> anyhow::Result<()> {
    let solvers = cfg.solver_args()?;
    let limit = Duration::from_secs_f64(cfg.time_limit_secs);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for &n in &cfg.n {
        for &k in &cfg.k {
            for &beta in &cfg.beta {
                if beta > k {
                    continue;
                }
                for &p in &cfg.p {
                    for &q in &cfg.q {
                        for r in 0..cfg.repeats {
                            let seed = cfg.seed + r;
                            let params = GenParams { n, k, beta, p, q, seed };
                            let net = gen_random(params)
                                .map_err(|e| anyhow::anyhow!(e))
                                .with_context(|| format!("generating {params:?}"))?;
                            for &solver in &solvers {
                                let config = SolverConfig::default().with_time_limit(limit);
                                let start = Instant::now();
                                let result = match solver.kind() {
                                    None => solve_auto_with(&net, &config),
                                    Some(kind) => solve_with(kind, &net, &config),
                                };
                                let millis = start.elapsed().as_secs_f64() * 1000.0;
                                let name = solver
                                    .to_possible_value()
                                    .map(|v| v.get_name().to_string())
                                    .unwrap_or_default();
                                let mut row = vec![
                                    n.to_string(),
                                    k.to_string(),
                                    beta.to_string(),
                                    p.to_string(),
                                    q.to_string(),
                                    seed.to_string(),
                                    name,
                                ];
                                match result {
                                    Ok(v) => {
                                        let s = v.stats;
                                        row.push(v.connectable.to_string());
                                        row.push(format!("{millis:.3}"));
                                        row.extend(
                                            [
                                                s.nodes_explored,
                                                s.trees_enumerated,
                                                s.dp_entries,
                                                s.families_examined,
                                            ]
                                            .map(|c| c.to_string()),
                                        );
                                    }
                                    Err(e) => {
                                        let status = match e {
                                            SolverError::Timeout => "timeout",
                                            _ => "refused",
                                        };
                                        row.push(status.to_string());
                                        row.push(format!("{millis:.3}"));
                                        row.extend(std::iter::repeat_n(String::new(), 4));
                                    }
                                }
                                w.write_record(&row)?;
                            }
                        }
                    }
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CONFIG: &str = r#"{"n": [4, 5], "k": [2], "beta": [1, 2, 3], "p": [0.6], "q": [0.6],
        "seed": 3, "repeats": 2, "solvers": ["auto", "brute", "beta-one"], "time_limit_secs": 5}"#;

    fn rows(cfg: &BenchConfig) -> Vec<Vec<String>> {
        let mut buf = Vec::new();
        run(cfg, &mut buf).unwrap();
        let mut r = csv::Reader::from_reader(buf.as_slice());
        r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect()
    }

    #[test]
    fn sweep_shape() {
        let cfg = BenchConfig::parse(CONFIG).unwrap();
        let rows = rows(&cfg);
        // 2 sizes, 2 usable budgets, 2 repeats, 3 solvers
        assert_eq!(rows.len(), 24);
        assert!(rows.iter().all(|r| r.len() == HEADER.len()));
        let beta_one_on_two: Vec<&Vec<String>> =
            rows.iter().filter(|r| r[6] == "beta-one" && r[2] == "2").collect();
        assert!(beta_one_on_two.iter().all(|r| r[7] == "refused"));
    }

    #[test]
    fn reproducible_apart_from_time() {
        let cfg = BenchConfig::parse(CONFIG).unwrap();
        let strip = |rows: Vec<Vec<String>>| -> Vec<Vec<String>> {
            rows.into_iter()
                .map(|mut r| {
                    r[8].clear();
                    r
                })
                .collect()
        };
        assert_eq!(strip(rows(&cfg)), strip(rows(&cfg)));
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(BenchConfig::parse(&CONFIG.replace("[4, 5]", "[]")).is_err());
        assert!(BenchConfig::parse(&CONFIG.replace("\"time_limit_secs\": 5", "\"time_limit_secs\": 0")).is_err());
        assert!(BenchConfig::parse(&CONFIG.replace("\"brute\"", "\"magic\"")).is_err());
    }
}
