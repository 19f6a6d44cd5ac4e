//! JSON file formats.
//!
//! A coloring is `{"n": 5, "k": 2, "edges": [[u, v, c], ...]}` with `u < v`,
//! every pair of `0..n` listed once and colors in `1..=k`.

use anyhow::{bail, ensure, Context, Result};
use polychrome_core::constructions::SeedColoring;
use polychrome_core::numbers::NumberResult;
use polychrome_core::search::SearchReport;
use polychrome_core::structure::ZShape;
use polychrome_core::{BlockSequence, Color, EdgeColoring, Subgraph, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub n: usize,
    pub k: Color,
    pub edges: Vec<(usize, usize, Color)>,
    /// Block lengths and colors, when the coloring is simply ordered by construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<(Color, usize)>>,
}

impl ColoringFile {
    pub fn new(c: &EdgeColoring) -> Self {
        Self { n: c.n(), k: c.k(), edges: c.edges().collect(), blocks: None }
    }

    pub fn with_blocks(c: &EdgeColoring, blocks: &BlockSequence) -> Self {
        Self { blocks: Some(blocks.blocks().to_vec()), ..Self::new(c) }
    }

    pub fn to_coloring(&self) -> Result<EdgeColoring> {
        let n = self.n;
        ensure!(n >= 2, "a coloring needs n >= 2, got {n}");
        let pairs = n * (n - 1) / 2;
        ensure!(self.edges.len() == pairs, "expected {pairs} edges for n = {n}, got {}", self.edges.len());
        let mut colors: Vec<Option<Color>> = vec![None; pairs];
        for &(u, v, c) in &self.edges {
            ensure!(u < v && v < n, "edge [{u}, {v}] must satisfy u < v < n");
            ensure!((1..=self.k).contains(&c), "edge [{u}, {v}] has color {c} outside 1..={}", self.k);
            let i = u * (2 * n - u - 1) / 2 + v - u - 1;
            ensure!(colors[i].replace(c).is_none(), "edge [{u}, {v}] is listed twice");
        }
        let colors: Vec<Color> = colors.into_iter().map(|c| c.expect("all pairs present")).collect();
        let coloring = EdgeColoring::from_upper_triangle(n, colors)?;
        ensure!(coloring.k() == self.k, "k = {} but {} colors are used", self.k, coloring.k());
        Ok(coloring)
    }
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let file: ColoringFile = serde_json::from_str(text).context("malformed coloring JSON")?;
    file.to_coloring()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub edges: Vec<(usize, usize)>,
}

impl WitnessFile {
    pub fn new(h: &Subgraph) -> Self {
        Self { edges: h.edges().to_vec() }
    }

    pub fn to_subgraph(&self) -> Result<Subgraph> {
        Ok(Subgraph::new(self.edges.iter().copied())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingColor {
    pub color: Color,
    pub witness: WitnessFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictFile {
    pub polychromatic: bool,
    pub k: Color,
    pub missing: Vec<MissingColor>,
}

impl VerdictFile {
    pub fn new(v: &Verdict, k: Color) -> Self {
        Self {
            polychromatic: v.polychromatic,
            k,
            missing: v.missing.iter().map(|(c, w)| MissingColor { color: *c, witness: WitnessFile::new(w) }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberFile {
    pub value: usize,
    pub provenance: String,
}

impl From<NumberResult> for NumberFile {
    fn from(r: NumberResult) -> Self {
        Self { value: r.value, provenance: r.provenance.name().to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeFile {
    pub shape: String,
    pub mains: Vec<Color>,
}

impl ShapeFile {
    pub fn new(shape: &ZShape) -> Self {
        let name = match shape {
            ZShape::Triangle(_) => "triangle",
            ZShape::Square(_) => "square",
        };
        Self { shape: name.into(), mains: shape.mains() }
    }

    pub fn to_shape(&self) -> Result<ZShape> {
        Ok(match (self.shape.as_str(), self.mains.as_slice()) {
            ("triangle", &[a, b, c]) => ZShape::Triangle([a, b, c]),
            ("square", &[i, _, j, _]) => ZShape::Square([i, j]),
            _ => bail!("unknown seed shape {:?} with mains {:?}", self.shape, self.mains),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksFile {
    pub blocks: Vec<(Color, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReportFile {
    pub best_k: usize,
    pub mode: String,
    pub explored: u64,
    pub best_structure: Option<BlocksFile>,
    pub seed: Option<ShapeFile>,
    pub coloring: ColoringFile,
}

impl SearchReportFile {
    pub fn new(r: &SearchReport) -> Self {
        Self {
            best_k: r.best_k,
            mode: r.mode.name().into(),
            explored: r.explored,
            best_structure: r.best_structure.as_ref().map(|b| BlocksFile { blocks: b.blocks().to_vec() }),
            seed: r.seed.as_ref().map(ShapeFile::new),
            coloring: ColoringFile::new(&r.coloring),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedFile {
    pub r: usize,
    pub q: usize,
    pub k: usize,
    pub z: usize,
    pub parts: Vec<Vec<usize>>,
    pub coloring: ColoringFile,
    /// Class sizes by color after extending to `n` vertices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<usize>>,
}

impl SeedFile {
    pub fn new(seed: &SeedColoring) -> Self {
        Self {
            r: seed.r,
            q: seed.q,
            k: seed.k(),
            z: seed.z(),
            parts: seed.parts.clone(),
            coloring: ColoringFile::new(&seed.internal),
            classes: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_round_trip() {
        let c = EdgeColoring::from_fn(4, |u, v| if u == 0 { 1 } else if v == 3 { 2 } else { 3 }).unwrap();
        let text = serde_json::to_string(&ColoringFile::new(&c)).unwrap();
        assert!(text.starts_with(r#"{"n":4,"k":3,"edges":[[0,1,1],"#));
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_coloring(r#"{"n":3,"k":1,"edges":[[0,1,1],[0,2,1]]}"#).is_err());
        assert!(parse_coloring(r#"{"n":3,"k":1,"edges":[[0,1,1],[0,1,1],[1,2,1]]}"#).is_err());
        assert!(parse_coloring(r#"{"n":3,"k":2,"edges":[[0,1,1],[0,2,1],[1,2,1]]}"#).is_err());
        assert!(parse_coloring(r#"{"n":3,"k":1,"edges":[[1,0,1],[0,2,1],[1,2,1]]}"#).is_err());
        assert!(parse_coloring(r#"{"n":3,"k":1,"edges":[[0,1,2],[0,2,1],[1,2,1]]}"#).is_err());
        assert!(parse_coloring("not json").is_err());
    }

    #[test]
    fn shapes_round_trip() {
        for shape in [ZShape::Triangle([1, 2, 3]), ZShape::Square([2, 1])] {
            assert_eq!(ShapeFile::new(&shape).to_shape().unwrap(), shape);
        }
    }
}
