//! Flat `key = value` sweep configuration.
//!
//! A config file is UTF-8 text, one `key = value` per line, `#` starting a
//! comment, blank lines ignored. The keys `interaction`, `strength`,
//! `operator_convention` and `cut` accept comma-separated lists; the
//! manifest expands to their cross product. Unknown keys and malformed
//! values are rejected with the offending line number.
//!
//! Keys and defaults:
//!
//! | key                  | values                          | default            |
//! |----------------------|---------------------------------|--------------------|
//! | interaction          | heisenberg, blbq, dm (list ok)  | heisenberg         |
//! | strength             | real (list ok)                  | 0.5                |
//! | operator_convention  | spin1, gellmann (list ok)       | spin1              |
//! | aux                  | 3 reals or 6 reals (re, im ...) | uniform (1,1,1)/sqrt(3) |
//! | t_start              | real                            | 0                  |
//! | t_end                | real                            | 20                 |
//! | steps                | positive integer                | 801                |
//! | reduce               | subset of ABC or `none`         | C                  |
//! | cut                  | e.g. A|B, A|BC (list ok)        | A|B                |
//! | pt_side              | left, right                     | right              |

use std::path::{Path, PathBuf};

use boundsim_core::{
    AuxAmplitudes, C64, Cut, Error, HamiltonianSpec, InteractionKind, MeasurementConfig,
    OperatorConvention, PtSide, Result, Subsystem, SweepConfig,
};

/// Expanded, validated run plan: one entry per output file.
#[derive(Debug)]
pub struct RunManifest {
    pub sweeps: Vec<SweepConfig>,
    pub out_dir: PathBuf,
    pub emit_plots: bool,
}

impl RunManifest {
    pub fn from_config_text(text: &str, out_dir: &Path, emit_plots: bool) -> Result<Self> {
        Ok(Self {
            sweeps: parse_sweep_configs(text)?,
            out_dir: out_dir.to_path_buf(),
            emit_plots,
        })
    }
}

/// File stem encoding interaction, strength, convention, reduce and cut;
/// unique within a manifest.
pub fn file_stem(cfg: &SweepConfig) -> String {
    let reduce = if cfg.measurement.reduce.is_empty() {
        "none".to_string()
    } else {
        cfg.measurement
            .reduce
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    let cut = cfg.measurement.cut.to_string().replace('|', "-");
    format!(
        "{}_s{}_{}_red{}_cut{}",
        cfg.hamiltonian.kind, cfg.hamiltonian.strength, cfg.hamiltonian.convention, reduce, cut
    )
}

struct RawConfig {
    interactions: Vec<InteractionKind>,
    strengths: Vec<f64>,
    conventions: Vec<OperatorConvention>,
    aux: AuxAmplitudes,
    t_start: f64,
    t_end: f64,
    steps: usize,
    reduce: Vec<Subsystem>,
    cuts: Vec<Cut>,
    pt_side: PtSide,
}

impl Default for RawConfig {
    fn default() -> Self {
        Self {
            interactions: vec![InteractionKind::HeisenbergZz],
            strengths: vec![0.5],
            conventions: vec![OperatorConvention::Spin1],
            aux: AuxAmplitudes::uniform(),
            t_start: 0.0,
            t_end: 20.0,
            steps: 801,
            reduce: vec![Subsystem::C],
            cuts: vec![Cut::new(vec![Subsystem::A], vec![Subsystem::B]).unwrap()],
            pt_side: PtSide::Right,
        }
    }
}

fn line_err(line_no: usize, key: &str, msg: impl std::fmt::Display) -> Error {
    Error::config(format!("line {line_no}, key `{key}`: {msg}"))
}

fn inner_message(e: &Error) -> &str {
    match e {
        Error::Config(m) | Error::Precondition(m) => m,
    }
}

fn parse_list<T>(value: &str, parse_one: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let items: Vec<&str> = value.split(',').map(str::trim).collect();
    if items.iter().any(|s| s.is_empty()) {
        return Err(Error::config("empty list entry".to_string()));
    }
    items.into_iter().map(parse_one).collect()
}

fn parse_real(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::config(format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(Error::config(format!("`{s}` is not finite")));
    }
    Ok(v)
}

fn parse_aux(value: &str) -> Result<AuxAmplitudes> {
    let reals = parse_list(value, parse_real)?;
    let (a, b, g) = match reals.as_slice() {
        [a, b, g] => (C64::new(*a, 0.0), C64::new(*b, 0.0), C64::new(*g, 0.0)),
        [ar, ai, br, bi, gr, gi] => (
            C64::new(*ar, *ai),
            C64::new(*br, *bi),
            C64::new(*gr, *gi),
        ),
        other => {
            return Err(Error::config(format!(
                "aux takes 3 reals or 6 reals (re, im pairs); got {} values",
                other.len()
            )));
        }
    };
    AuxAmplitudes::new(a, b, g)
}

fn parse_reduce(value: &str) -> Result<Vec<Subsystem>> {
    let v = value.trim();
    if v.eq_ignore_ascii_case("none") || v.is_empty() {
        return Ok(vec![]);
    }
    v.chars()
        .map(|ch| match ch.to_ascii_uppercase() {
            'A' => Ok(Subsystem::A),
            'B' => Ok(Subsystem::B),
            'C' => Ok(Subsystem::C),
            other => Err(Error::config(format!(
                "unknown subsystem `{other}` in reduce set"
            ))),
        })
        .collect()
}

/// Parse config text and expand the cross product of interactions,
/// strengths, conventions and cuts into individual sweep configs.
pub fn parse_sweep_configs(text: &str) -> Result<Vec<SweepConfig>> {
    let mut raw = RawConfig::default();

    for (idx, line_raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match line_raw.find('#') {
            Some(pos) => &line_raw[..pos],
            None => line_raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::config(format!("line {line_no}: expected `key = value`, got `{line}`"))
        })?;
        let key = key.trim();
        let value = value.trim();
        let err = |e: Error| line_err(line_no, key, inner_message(&e));

        match key {
            "interaction" => {
                raw.interactions = parse_list(value, |s| s.parse()).map_err(err)?;
            }
            "strength" => {
                raw.strengths = parse_list(value, parse_real).map_err(err)?;
            }
            "operator_convention" => {
                raw.conventions = parse_list(value, |s| s.parse()).map_err(err)?;
            }
            "aux" => {
                raw.aux = parse_aux(value).map_err(err)?;
            }
            "t_start" => {
                raw.t_start = parse_real(value).map_err(err)?;
            }
            "t_end" => {
                raw.t_end = parse_real(value).map_err(err)?;
            }
            "steps" => {
                raw.steps = value
                    .parse()
                    .map_err(|_| line_err(line_no, key, format!("`{value}` is not a positive integer")))?;
                if raw.steps == 0 {
                    return Err(line_err(line_no, key, "steps must be at least 1"));
                }
            }
            "reduce" => {
                raw.reduce = parse_reduce(value).map_err(err)?;
            }
            "cut" => {
                raw.cuts = parse_list(value, |s| s.parse()).map_err(err)?;
            }
            "pt_side" => {
                raw.pt_side = value.parse().map_err(err)?;
            }
            unknown => {
                return Err(Error::config(format!(
                    "line {line_no}: unknown key `{unknown}`"
                )));
            }
        }
    }

    expand(&raw)
}

fn expand(raw: &RawConfig) -> Result<Vec<SweepConfig>> {
    let mut sweeps = Vec::new();
    for &kind in &raw.interactions {
        for &strength in &raw.strengths {
            for &convention in &raw.conventions {
                for cut in &raw.cuts {
                    let keys_ctx = "keys `reduce`/`cut`";
                    let measurement =
                        MeasurementConfig::new(raw.reduce.clone(), cut.clone(), raw.pt_side)
                            .map_err(|e| e.with_context(keys_ctx))?;
                    measurement
                        .validate_for(3)
                        .map_err(|e| e.with_context(keys_ctx))?;
                    let cfg = SweepConfig {
                        hamiltonian: HamiltonianSpec::new(kind, strength, convention)?,
                        aux: raw.aux,
                        t_start: raw.t_start,
                        t_end: raw.t_end,
                        steps: raw.steps,
                        measurement,
                    };
                    cfg.validate()?;
                    // Identical repeats (e.g. a duplicated strength) collapse.
                    if !sweeps
                        .iter()
                        .any(|existing| file_stem(existing) == file_stem(&cfg))
                    {
                        sweeps.push(cfg);
                    }
                }
            }
        }
    }
    Ok(sweeps)
}
