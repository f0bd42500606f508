use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use formation_core::graph::{Formation, MetaFormation};
use serde_json::Value;

/// A parsed input document of any supported shape.
pub struct Input {
    path: PathBuf,
    text: String,
    value: Value,
}

impl Input {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let value: Value = serde_json::from_str(&text).with_context(|| format!("{}: invalid JSON", path.display()))?;
        Ok(Input { path: path.to_path_buf(), text, value })
    }

    fn at(&self) -> String {
        self.path.display().to_string()
    }

    fn merged_value(&self) -> Option<&Value> {
        self.value.get("report").and_then(|r| r.get("merged")).or_else(|| self.value.get("merged"))
    }

    /// The document as a meta-formation, if it is one or is a plan-merge
    /// report carrying one.
    pub fn as_meta(&self) -> Result<Option<MetaFormation>> {
        if let Some(m) = self.merged_value() {
            return Ok(Some(MetaFormation::parse(&m.to_string()).with_context(|| format!("{}: merged", self.at()))?));
        }
        if self.value.get("metaVertices").is_some() {
            Ok(Some(MetaFormation::parse(&self.text).with_context(|| self.at())?))
        } else {
            Ok(None)
        }
    }

    /// A formation, flattening meta-formations.
    pub fn formation(&self) -> Result<Formation> {
        match self.as_meta()? {
            Some(m) => Ok(m.flatten()),
            None => Formation::parse(&self.text).with_context(|| self.at()),
        }
    }

    pub fn meta(&self) -> Result<MetaFormation> {
        match self.as_meta()? {
            Some(m) => Ok(m),
            None => bail!("{}: expected a meta-formation with metaVertices and interEdges", self.at()),
        }
    }

    /// Members to merge: a formation, a list of formations, or the
    /// meta-vertices of a meta-formation.
    pub fn collection(&self) -> Result<Vec<Formation>> {
        if let Value::Array(items) = &self.value {
            return items
                .iter()
                .enumerate()
                .map(|(i, v)| Formation::parse(&v.to_string()).with_context(|| format!("{}[{i}]", self.at())))
                .collect();
        }
        match self.as_meta()? {
            Some(m) => Ok(m.meta_vertices().to_vec()),
            None => Ok(vec![self.formation()?]),
        }
    }
}
