use std::fmt::Display;

use anyhow::{bail, Result};
use formation_core::rigidity::OracleConfig;
use formation_core::Dim;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Format};

pub struct Outcome {
    pub text: String,
    pub holds: bool,
}

/// Collects a command's verdict and renders it in the requested format.
pub struct Report {
    format: Format,
    cfg: OracleConfig,
    dim: Option<Dim>,
    holds: bool,
    criterion: Option<String>,
    lines: Vec<(String, String)>,
    dot: Option<String>,
}

impl Report {
    pub fn new(cli: &Cli, cfg: OracleConfig) -> Self {
        Report { format: cli.format, cfg, dim: None, holds: false, criterion: None, lines: Vec::new(), dot: None }
    }

    pub fn dim(&mut self, d: Dim) -> &mut Self {
        self.dim = Some(d);
        self
    }

    pub fn holds(&mut self, h: bool) -> &mut Self {
        self.holds = h;
        self
    }

    pub fn criterion(&mut self, c: &str) -> &mut Self {
        self.criterion = Some(c.to_string());
        self
    }

    pub fn dot(&mut self, d: String) -> &mut Self {
        self.dot = Some(d);
        self
    }

    pub fn line(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    pub fn witness<W: Serialize>(&mut self, w: &Option<W>) -> &mut Self {
        if let Some(w) = w {
            let s = serde_json::to_string(w).expect("witness serializes");
            self.line("witness", s);
        }
        self
    }

    fn text(&self, command: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = command {
            out += &format!("command: {c}\n");
        }
        if let Some(d) = self.dim {
            out += &format!("dim: {}\n", d.value());
        }
        out += &format!("seed: {}\ntrials: {}\n", self.cfg.seed, self.cfg.trials);
        if let Some(c) = &self.criterion {
            out += &format!("criterion: {c}\n");
        }
        for (k, v) in &self.lines {
            out += &format!("{k}: {v}\n");
        }
        out
    }

    fn dot_text(&self) -> Result<String> {
        match &self.dot {
            Some(d) => Ok(d.clone()),
            None => bail!("no DOT rendering for this command"),
        }
    }

    /// Wraps `body` in an envelope echoing the oracle settings.
    pub fn finish<T: Serialize>(&self, command: &str, body: &T) -> Result<Outcome> {
        let text = match self.format {
            Format::Json => {
                let doc = json!({
                    "command": command,
                    "dim": self.dim,
                    "seed": self.cfg.seed,
                    "trials": self.cfg.trials,
                    "holds": self.holds,
                    "criterion": self.criterion,
                    "report": body,
                });
                serde_json::to_string_pretty(&doc)? + "\n"
            }
            Format::Text => self.text(Some(command)),
            Format::Dot => self.dot_text()?,
        };
        Ok(Outcome { text, holds: self.holds })
    }

    /// Emits a document verbatim so it can be fed back as input.
    pub fn raw_or_text(&self, value: Value) -> Outcome {
        let text = match self.format {
            Format::Json => serde_json::to_string_pretty(&value).expect("value serializes") + "\n",
            Format::Text => self.text(None),
            Format::Dot => self.dot.clone().unwrap_or_default(),
        };
        Outcome { text, holds: self.holds }
    }
}
