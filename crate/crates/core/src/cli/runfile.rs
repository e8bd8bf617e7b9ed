//! Flat `key = value` run files.
//!
//! ```text
//! # test problem 2 at the coarse level
//! problem = 2
//! nu = 1
//! sigma = 2
//! J = 2
//! dt = 0.001
//! T = 0.01
//! snapshots = 0.005, 0.01
//! ```

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::problems::{make_test_problem, ProblemParams, ProblemSpec};

const KNOWN_KEYS: &[&str] = &[
    "problem",
    "nu",
    "c0",
    "sigma",
    "J",
    "dt",
    "T",
    "snapshots",
    "output",
    "J_list",
    "accuracy_target",
];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunFile {
    pub problem: Option<u8>,
    pub nu: Option<f64>,
    pub c0: Option<f64>,
    pub sigma: Option<f64>,
    pub level: Option<u32>,
    pub dt: Option<f64>,
    pub t_end: Option<f64>,
    pub snapshots: Vec<f64>,
    pub output: Option<PathBuf>,
    pub levels: Vec<u32>,
    pub accuracy_target: Option<f64>,
}

fn parse_value<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T> {
    raw.parse()
        .map_err(|_| Error::Config(format!("cannot parse value `{raw}` for key `{key}`")))
}

fn parse_list<T: std::str::FromStr>(key: &str, raw: &str) -> Result<Vec<T>> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_value(key, s))
        .collect()
}

impl RunFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rf = RunFile::default();
        let mut seen: Vec<String> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            if !KNOWN_KEYS.contains(&key) {
                return Err(Error::Config(format!("line {}: unknown key `{key}`", lineno + 1)));
            }
            if seen.iter().any(|k| k == key) {
                return Err(Error::Config(format!("line {}: duplicate key `{key}`", lineno + 1)));
            }
            seen.push(key.to_string());
            match key {
                "problem" => rf.problem = Some(parse_value(key, value)?),
                "nu" => rf.nu = Some(parse_value(key, value)?),
                "c0" => rf.c0 = Some(parse_value(key, value)?),
                "sigma" => rf.sigma = Some(parse_value(key, value)?),
                "J" => rf.level = Some(parse_value(key, value)?),
                "dt" => rf.dt = Some(parse_value(key, value)?),
                "T" => rf.t_end = Some(parse_value(key, value)?),
                "snapshots" => rf.snapshots = parse_list(key, value)?,
                "output" => rf.output = Some(PathBuf::from(value)),
                "J_list" => rf.levels = parse_list(key, value)?,
                "accuracy_target" => rf.accuracy_target = Some(parse_value(key, value)?),
                _ => unreachable!("key list checked above"),
            }
        }
        Ok(rf)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn problem_spec(&self) -> Result<ProblemSpec> {
        let id = required(self.problem, "problem")?;
        let nu = required(self.nu, "nu")?;
        let params = ProblemParams {
            c0: self.c0,
            sigma: self.sigma,
        };
        make_test_problem(id, nu, params)
    }

    pub fn require_level(&self) -> Result<u32> {
        required(self.level, "J")
    }

    pub fn require_dt(&self) -> Result<f64> {
        required(self.dt, "dt")
    }

    pub fn require_t_end(&self) -> Result<f64> {
        required(self.t_end, "T")
    }

    pub fn require_levels(&self) -> Result<&[u32]> {
        if self.levels.is_empty() {
            Err(Error::MissingKey("J_list".into()))
        } else {
            Ok(&self.levels)
        }
    }
}

fn required<T>(value: Option<T>, key: &str) -> Result<T> {
    value.ok_or_else(|| Error::MissingKey(key.into()))
}
