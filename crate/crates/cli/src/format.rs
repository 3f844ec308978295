//! JSON structure files: sparse rational tensors keyed by name.
//!
//! ```json
//! {
//!   "kind": "algebra",
//!   "dims": { "A": 2 },
//!   "tensors": { "product": [ { "indices": [0, 0, 1], "value": "1" } ] }
//! }
//! ```
//!
//! Every tensor lists its input indices first and the output index last.
//! Linear maps `U → W` are tensors of shape `(U, W)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use zinbiel::scalar::{format_rational, parse_rational};
use zinbiel::tensor::{input_tuples, Tensor};
use zinbiel::{QMatrix, QTensor, Q};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {message}")]
    Syntax { path: String, message: String },
    #[error("{path}: {field}: {message}")]
    Field { path: String, field: String, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Algebra,
    Bimodule,
    Zinf,
    Crossed,
    Extension,
    Ainf,
    Dend,
    Rb,
    Cochain,
    Morphism,
    Zinbiel2,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("kinds serialize");
        write!(f, "{}", s.as_str().unwrap_or("?"))
    }
}

/// An exact rational written as `"p/q"` or `"p"`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rational(pub Q);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map(Rational).map_err(|_| de::Error::custom(format!("malformed rational {text:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: Kind,
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub tensors: BTreeMap<String, Vec<Entry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Dimension names of each kind.
fn dim_names(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Algebra => &["A"],
        Kind::Bimodule => &["A", "V"],
        Kind::Zinf | Kind::Ainf | Kind::Dend | Kind::Rb => &["V0", "V1"],
        Kind::Crossed | Kind::Extension => &["G", "H"],
        Kind::Cochain => &["Z", "M"],
        Kind::Morphism => &["V0", "V1", "W0", "W1"],
        Kind::Zinbiel2 => &["objects", "morphisms"],
    }
}

const TWO_TERM: [(&str, &[&str]); 5] = [
    ("d", &["V1", "V0"]),
    ("l2_00", &["V0", "V0", "V0"]),
    ("l2_01", &["V0", "V1", "V1"]),
    ("l2_10", &["V1", "V0", "V1"]),
    ("l3", &["V0", "V0", "V0", "V1"]),
];

const AINF: [(&str, &[&str]); 5] = [
    ("d", &["V1", "V0"]),
    ("m2_00", &["V0", "V0", "V0"]),
    ("m2_01", &["V0", "V1", "V1"]),
    ("m2_10", &["V1", "V0", "V1"]),
    ("m3", &["V0", "V0", "V0", "V1"]),
];

/// Tensor names and their shapes, as lists of dimension names.
fn tensor_schema(kind: Kind) -> Vec<(&'static str, &'static [&'static str])> {
    match kind {
        Kind::Algebra => vec![("product", &["A", "A", "A"])],
        Kind::Bimodule => vec![("product", &["A", "A", "A"]), ("left", &["A", "V", "V"]), ("right", &["V", "A", "V"])],
        Kind::Zinf => TWO_TERM.to_vec(),
        Kind::Ainf => AINF.to_vec(),
        Kind::Rb => {
            let mut v = AINF.to_vec();
            v.push(("r0", &["V0", "V0"]));
            v.push(("r1", &["V1", "V1"]));
            v
        }
        Kind::Dend => vec![
            ("d", &["V1", "V0"]),
            ("prec_00", &["V0", "V0", "V0"]),
            ("prec_01", &["V0", "V1", "V1"]),
            ("prec_10", &["V1", "V0", "V1"]),
            ("succ_00", &["V0", "V0", "V0"]),
            ("succ_01", &["V0", "V1", "V1"]),
            ("succ_10", &["V1", "V0", "V1"]),
            ("mu3_1", &["V0", "V0", "V0", "V1"]),
            ("mu3_2", &["V0", "V0", "V0", "V1"]),
            ("mu3_3", &["V0", "V0", "V0", "V1"]),
        ],
        Kind::Crossed | Kind::Extension => vec![
            ("g_product", &["G", "G", "G"]),
            ("h_product", &["H", "H", "H"]),
            ("phi", &["H", "G"]),
            ("left", &["G", "H", "H"]),
            ("right", &["H", "G", "H"]),
        ],
        Kind::Cochain => vec![("map", &[])],
        Kind::Morphism => vec![("f0", &["V0", "W0"]), ("f1", &["V1", "W1"]), ("f2", &["V0", "V0", "W1"])],
        Kind::Zinbiel2 => vec![
            ("source", &["morphisms", "objects"]),
            ("target", &["morphisms", "objects"]),
            ("unit", &["objects", "morphisms"]),
            ("object_product", &["objects", "objects", "objects"]),
            ("morphism_product", &["morphisms", "morphisms", "morphisms"]),
            ("zinbielator", &["objects", "objects", "objects", "morphisms"]),
        ],
    }
}

/// A validated structure file with dense tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct Structure {
    pub kind: Kind,
    pub dims: BTreeMap<String, usize>,
    pub degree: Option<usize>,
    pub tensors: BTreeMap<String, QTensor>,
    pub labels: BTreeMap<String, Vec<String>>,
    pub seed: Option<u64>,
}

impl Structure {
    pub fn new(kind: Kind) -> Self {
        Self { kind, dims: BTreeMap::new(), degree: None, tensors: BTreeMap::new(), labels: BTreeMap::new(), seed: None }
    }

    pub fn tensor(&self, name: &str) -> &QTensor {
        &self.tensors[name]
    }

    /// The linear map stored under `name`.
    pub fn matrix(&self, name: &str) -> QMatrix {
        self.tensors[name].to_matrix().transpose()
    }

    pub fn with_dim(mut self, name: &str, n: usize) -> Self {
        self.dims.insert(name.to_string(), n);
        self
    }

    pub fn with_tensor(mut self, name: &str, t: QTensor) -> Self {
        self.tensors.insert(name.to_string(), t);
        self
    }

    pub fn with_matrix(self, name: &str, m: &QMatrix) -> Self {
        let t = Tensor::from_vec(&[m.cols(), m.rows()], m.transpose().entries().to_vec());
        self.with_tensor(name, t)
    }

    pub fn with_labels(mut self, dim: &str, labels: &[String]) -> Self {
        let default: Vec<String> = (1..=labels.len()).map(|i| format!("e{i}")).collect();
        if labels != default.as_slice() {
            self.labels.insert(dim.to_string(), labels.to_vec());
        }
        self
    }

    /// Basis labels for `dim`, defaulting to `e1, e2, …`.
    pub fn labels_for(&self, dim: &str) -> Vec<String> {
        self.labels.get(dim).cloned().unwrap_or_else(|| (1..=self.dims[dim]).map(|i| format!("e{i}")).collect())
    }

    fn shape_of(&self, spec: &[&str]) -> Vec<usize> {
        if self.kind == Kind::Cochain {
            let mut s = vec![self.dims["Z"]; self.degree.unwrap_or(0)];
            s.push(self.dims["M"]);
            return s;
        }
        spec.iter().map(|d| self.dims[*d]).collect()
    }

    pub fn to_file(&self) -> StructureFile {
        let tensors = self
            .tensors
            .iter()
            .map(|(name, t)| {
                let shape = t.shape().to_vec();
                let entries = input_tuples(&shape)
                    .filter_map(|idx| {
                        let v = t.get(&idx);
                        (!v.is_zero()).then(|| Entry { indices: idx.clone(), value: Rational(v.clone()) })
                    })
                    .collect();
                (name.clone(), entries)
            })
            .collect();
        StructureFile {
            kind: self.kind,
            dims: self.dims.clone(),
            degree: self.degree,
            tensors,
            labels: self.labels.clone(),
            seed: self.seed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("structure files serialize");
        s.push('\n');
        s
    }
}

fn field(path: &str, field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field { path: path.to_string(), field: field.into(), message: message.into() }
}

/// Validates a deserialized file and densifies its tensors.
pub fn validate(path: &str, file: StructureFile) -> Result<Structure, InputError> {
    let kind = file.kind;
    let names = dim_names(kind);
    for name in file.dims.keys() {
        if !names.contains(&name.as_str()) {
            return Err(field(path, format!("dims.{name}"), format!("unknown dimension for kind {kind}")));
        }
    }
    for name in names {
        if !file.dims.contains_key(*name) {
            return Err(field(path, "dims", format!("missing dimension {name}")));
        }
    }
    match (kind, file.degree) {
        (Kind::Cochain, None) => return Err(field(path, "degree", "missing degree")),
        (Kind::Cochain, Some(0)) => return Err(field(path, "degree", "degree must be positive")),
        (Kind::Cochain, Some(_)) => {}
        (_, Some(_)) => return Err(field(path, "degree", format!("not used by kind {kind}"))),
        (_, None) => {}
    }
    let mut s = Structure::new(kind);
    s.dims = file.dims;
    s.degree = file.degree;
    s.seed = file.seed;
    for (dim, labels) in &file.labels {
        let n = *s.dims.get(dim).ok_or_else(|| field(path, format!("labels.{dim}"), "unknown dimension"))?;
        if labels.len() != n {
            return Err(field(path, format!("labels.{dim}"), format!("{} labels for dimension {n}", labels.len())));
        }
    }
    s.labels = file.labels;

    let schema = tensor_schema(kind);
    for name in file.tensors.keys() {
        if !schema.iter().any(|(n, _)| n == name) {
            return Err(field(path, format!("tensors.{name}"), format!("unknown tensor for kind {kind}")));
        }
    }
    let mut tensors = file.tensors;
    for (name, spec) in schema {
        let entries =
            tensors.remove(name).ok_or_else(|| field(path, format!("tensors.{name}"), "missing tensor"))?;
        let shape = s.shape_of(spec);
        let mut t = Tensor::zeros(&shape);
        let mut seen = std::collections::BTreeSet::new();
        for (k, e) in entries.into_iter().enumerate() {
            let at = format!("tensors.{name}[{k}]");
            if e.indices.len() != shape.len() {
                return Err(field(path, at, format!("expected {} indices, got {}", shape.len(), e.indices.len())));
            }
            if let Some(p) = e.indices.iter().zip(&shape).position(|(i, n)| i >= n) {
                return Err(field(
                    path,
                    at,
                    format!("index out of range: position {p} is {} but the dimension is {}", e.indices[p], shape[p]),
                ));
            }
            if !seen.insert(e.indices.clone()) {
                return Err(field(path, at, format!("duplicate entry at {:?}", e.indices)));
            }
            t.set(&e.indices, e.value.0);
        }
        s.tensors.insert(name.to_string(), t);
    }
    Ok(s)
}

pub fn parse_str(path: &str, text: &str) -> Result<Structure, InputError> {
    let file: StructureFile =
        serde_json::from_str(text).map_err(|e| InputError::Syntax { path: path.to_string(), message: e.to_string() })?;
    validate(path, file)
}

pub fn read(path: &str) -> Result<Structure, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io { path: path.to_string(), message: e.to_string() })?;
    parse_str(path, &text)
}
