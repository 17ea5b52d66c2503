//! Input documents: a group, a complex with an action, and options.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use equihom::fingroup::{build_group, FiniteGroup, GroupSpec, DEFAULT_MAX_ORDER};
use equihom::gcomplex::{GComplex, GComplexError, SComplex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("input: {0}")]
    Syntax(String),
    #[error("input: {field}: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Engine(#[from] equihom::Error),
}

fn field(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    pub group: GroupDoc,
    pub complex: ComplexDoc,
    /// one vertex permutation per group generator
    #[serde(default)]
    pub action: Vec<Vec<usize>>,
    /// second space for bivariant commands
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetDoc>,
    #[serde(default)]
    pub options: OptionsDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupDoc {
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        generators: Option<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Vertices {
    Count(usize),
    Labels(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub vertices: Vertices,
    pub maximal_simplices: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetDoc {
    pub complex: ComplexDoc,
    #[serde(default)]
    pub action: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// functions on the (0-dimensional) complex
    #[default]
    Functions,
    BaseField,
    /// the matrix algebra `K_G`
    Compact,
    /// functions tensored with `K_G`
    FunctionsStabilized,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    #[serde(default)]
    pub subdivide: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default)]
    pub algebra: AlgebraKind,
    #[serde(default)]
    pub stabilize: bool,
}

pub fn parse_input(text: &str) -> Result<InputDocument, InputError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(field(
            "schema_version",
            format!("unsupported version {}, expected {SCHEMA_VERSION}", doc.schema_version),
        ));
    }
    Ok(doc)
}

impl InputDocument {
    /// Sorted-key JSON of the document.
    pub fn canonical(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string(&v).expect("serializable")
    }

    pub fn digest(&self) -> String {
        let h = Sha256::digest(self.canonical().as_bytes());
        h.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn group(&self) -> Result<FiniteGroup, InputError> {
        let spec = match &self.group {
            GroupDoc::Permutations { degree, generators } => GroupSpec::Permutations {
                degree: *degree,
                generators: generators.clone(),
            },
            GroupDoc::Table { table, generators } => GroupSpec::Table {
                table: table.clone(),
                generators: generators.clone(),
            },
        };
        build_group(&spec, DEFAULT_MAX_ORDER).map_err(|e| field("group", e.to_string()))
    }

    /// The source space, subdivided when the action is not type-preserving
    /// and the subdivide option is set.
    pub fn space(&self, group: &FiniteGroup) -> Result<GComplex, InputError> {
        build_space("complex", &self.complex, &self.action, group, self.options.subdivide)
    }

    pub fn target_space(&self, group: &FiniteGroup) -> Result<Option<GComplex>, InputError> {
        self.target
            .as_ref()
            .map(|t| build_space("target.complex", &t.complex, &t.action, group, self.options.subdivide))
            .transpose()
    }
}

fn build_space(name: &str, c: &ComplexDoc, action: &[Vec<usize>], group: &FiniteGroup, subdivide: bool) -> Result<GComplex, InputError> {
    let (n, labels) = match &c.vertices {
        Vertices::Count(n) => (*n, (0..*n).map(|i| i.to_string()).collect()),
        Vertices::Labels(l) => (l.len(), l.clone()),
    };
    for (i, s) in c.maximal_simplices.iter().enumerate() {
        if let Some(v) = s.iter().find(|&&v| v >= n) {
            return Err(field(
                format!("{name}.maximal_simplices[{i}]"),
                format!("vertex {v} out of range 0..{n}"),
            ));
        }
    }
    let k = SComplex::from_maximal(labels, &c.maximal_simplices).map_err(|e| field(format!("{name}.maximal_simplices"), e.to_string()))?;
    let gens = group.generators().len();
    if action.len() != gens {
        return Err(field(
            action_field(name),
            format!("expected one vertex permutation per generator ({gens}), got {}", action.len()),
        ));
    }
    for (i, p) in action.iter().enumerate() {
        if p.len() != n {
            return Err(field(
                format!("{}[{i}]", action_field(name)),
                format!("expected {n} entries, got {}", p.len()),
            ));
        }
    }
    let x = GComplex::new(k, group.clone(), action).map_err(|e| field(action_field(name), e.to_string()))?;
    if x.is_type_preserving() {
        return Ok(x);
    }
    if subdivide {
        return Ok(x.subdivide());
    }
    let err: GComplexError = x.require_type_preserving().expect_err("not type-preserving");
    Err(InputError::Engine(err.into()))
}

fn action_field(name: &str) -> String {
    match name.strip_suffix(".complex") {
        Some(prefix) => format!("{prefix}.action"),
        None => "action".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const POINT: &str = r#"{"schema_version": 1, "group": {"permutations": {"degree": 1, "generators": []}},
        "complex": {"vertices": 1, "maximal_simplices": [[0]]}}"#;

    const EDGE: &str = r#"{"schema_version": 1, "group": {"permutations": {"degree": 2, "generators": [[1, 0]]}},
        "complex": {"vertices": ["a", "b"], "maximal_simplices": [[0, 1]]}, "action": [[1, 0]]}"#;

    #[test]
    fn minimal_document_parses() {
        let d = parse_input(POINT).unwrap();
        let g = d.group().unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(d.space(&g).unwrap().complex().counts(), vec![1]);
    }

    #[test]
    fn canonical_form_round_trips() {
        for text in [POINT, EDGE] {
            let d = parse_input(text).unwrap();
            let again = parse_input(&d.canonical()).unwrap();
            assert_eq!(again, d);
            assert_eq!(again.canonical(), d.canonical());
            assert_eq!(again.digest(), d.digest());
        }
    }

    #[test]
    fn swapped_edge_needs_the_flag() {
        let mut d = parse_input(EDGE).unwrap();
        let g = d.group().unwrap();
        let err = d.space(&g).unwrap_err().to_string();
        assert!(err.contains("gcomplex") && (err.contains("{0,1}") || err.contains("{a,b}")), "{err}");
        d.options.subdivide = true;
        assert_eq!(d.space(&g).unwrap().complex().count(0), 3);
    }

    #[test]
    fn field_diagnostics() {
        let bad = EDGE.replace("\"action\": [[1, 0]]", "\"action\": [[1, 0, 2]]");
        let d = parse_input(&bad).unwrap();
        let err = d.space(&d.group().unwrap()).unwrap_err().to_string();
        assert!(err.starts_with("input: action[0]"), "{err}");
        let unknown = POINT.replace("\"schema_version\": 1", "\"schema_version\": 1, \"colour\": 3");
        assert!(matches!(parse_input(&unknown), Err(InputError::Syntax(m)) if m.contains("colour")));
    }
}
