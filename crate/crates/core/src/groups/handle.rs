use std::sync::OnceLock;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::finfield::{Field, FieldSpec, DEFAULT_FIELD_CAP};

use super::{
    FieldMatrix, FiniteGroup, GroupElement, GroupError, MatrixAutElement, Permutation,
    DEFAULT_GROUP_CAP,
};

/// An element of either backend.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    Perm(Permutation),
    Matrix(MatrixAutElement),
}

impl GroupElement for Element {
    fn compose(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Element::Perm(a), Element::Perm(b)) => Element::Perm(a.compose(b)),
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a.compose(b)),
            _ => panic!("cannot multiply elements of different backends"),
        }
    }

    fn inverse(&self) -> Self {
        match self {
            Element::Perm(a) => Element::Perm(a.inverse()),
            Element::Matrix(a) => Element::Matrix(a.inverse()),
        }
    }

    fn identity_like(&self) -> Self {
        match self {
            Element::Perm(a) => Element::Perm(a.identity_like()),
            Element::Matrix(a) => Element::Matrix(a.identity_like()),
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            Element::Perm(a) => a.is_identity(),
            Element::Matrix(a) => a.is_identity(),
        }
    }
}

impl Element {
    /// Canonical JSON form: image array for permutations, `{"matrix", "twist"}`
    /// for matrix elements.
    pub fn to_json(&self) -> Value {
        match self {
            Element::Perm(p) => json!(p.images()),
            Element::Matrix(m) => {
                let rows: Vec<Vec<Value>> = m
                    .matrix()
                    .rows()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| {
                                if e.field().degree() == 1 {
                                    json!(e.raw())
                                } else {
                                    json!(e.coeffs())
                                }
                            })
                            .collect()
                    })
                    .collect();
                json!({"matrix": rows, "twist": m.twist()})
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Ambient space shared by all generators of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Permutation { degree: usize },
    Matrix { field: Field, dim: usize },
}

/// A matrix entry in a group file: the base-p encoding of the element, or
/// its coefficient list with the constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Int(i64),
    Coeffs(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixGenerator {
    #[serde(default)]
    pub twist: i64,
    pub matrix: Vec<Vec<MatrixEntry>>,
}

/// On-disk group description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupFile {
    Permutation {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Matrix {
        field: FieldSpec,
        dim: usize,
        aut_order: usize,
        generators: Vec<MatrixGenerator>,
    },
}

/// Generators plus a lazily enumerated element list, bounded by a cap.
#[derive(Debug)]
pub struct GroupHandle {
    backend: Backend,
    gens: Vec<Element>,
    cap: usize,
    group: OnceLock<Result<FiniteGroup<Element>, GroupError>>,
}

impl Clone for GroupHandle {
    fn clone(&self) -> Self {
        let group = OnceLock::new();
        if let Some(g) = self.group.get() {
            let _ = group.set(g.clone());
        }
        GroupHandle {
            backend: self.backend.clone(),
            gens: self.gens.clone(),
            cap: self.cap,
            group,
        }
    }
}

impl GroupHandle {
    pub fn from_permutations(gens: Vec<Permutation>) -> Result<Self, GroupError> {
        let degree = gens.first().ok_or(GroupError::NoGenerators)?.degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::BackendMismatch);
        }
        Ok(Self::new_unchecked(
            Backend::Permutation { degree },
            gens.into_iter().map(Element::Perm).collect(),
        ))
    }

    pub fn from_matrices(gens: Vec<MatrixAutElement>) -> Result<Self, GroupError> {
        let first = gens.first().ok_or(GroupError::NoGenerators)?;
        let field = first.field().clone();
        let dim = first.matrix().dim();
        if gens
            .iter()
            .any(|g| g.field() != &field || g.matrix().dim() != dim)
        {
            return Err(GroupError::BackendMismatch);
        }
        Ok(Self::new_unchecked(
            Backend::Matrix { field, dim },
            gens.into_iter().map(Element::Matrix).collect(),
        ))
    }

    fn new_unchecked(backend: Backend, gens: Vec<Element>) -> Self {
        GroupHandle {
            backend,
            gens,
            cap: DEFAULT_GROUP_CAP,
            group: OnceLock::new(),
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.group = OnceLock::new();
        self
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let file: GroupFile =
            serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &GroupFile) -> Result<Self, GroupError> {
        match file {
            GroupFile::Permutation { degree, generators } => {
                if generators.is_empty() {
                    return Err(GroupError::NoGenerators);
                }
                let perms = generators
                    .iter()
                    .map(|images| {
                        if images.len() != *degree {
                            return Err(GroupError::InvalidPermutation(format!(
                                "generator has {} images, degree is {degree}",
                                images.len()
                            )));
                        }
                        Permutation::new(images.clone())
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_permutations(perms)
            }
            GroupFile::Matrix {
                field,
                dim,
                aut_order,
                generators,
            } => {
                if generators.is_empty() {
                    return Err(GroupError::NoGenerators);
                }
                let field = Field::from_spec(field, DEFAULT_FIELD_CAP)?;
                if *aut_order != field.degree() {
                    return Err(GroupError::Parse(format!(
                        "aut_order {aut_order} differs from the field degree {}",
                        field.degree()
                    )));
                }
                let mats = generators
                    .iter()
                    .map(|g| parse_matrix_generator(&field, *dim, g))
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_matrices(mats)
            }
        }
    }

    /// The group file describing this handle's generators.
    pub fn to_file(&self) -> GroupFile {
        match &self.backend {
            Backend::Permutation { degree } => GroupFile::Permutation {
                degree: *degree,
                generators: self
                    .gens
                    .iter()
                    .map(|g| match g {
                        Element::Perm(p) => p.images().to_vec(),
                        Element::Matrix(_) => unreachable!("backend is permutation"),
                    })
                    .collect(),
            },
            Backend::Matrix { field, dim } => GroupFile::Matrix {
                field: field.spec().clone(),
                dim: *dim,
                aut_order: field.degree(),
                generators: self
                    .gens
                    .iter()
                    .map(|g| match g {
                        Element::Matrix(m) => MatrixGenerator {
                            twist: m.twist() as i64,
                            matrix: m
                                .matrix()
                                .rows()
                                .iter()
                                .map(|row| {
                                    row.iter()
                                        .map(|e| {
                                            if field.degree() == 1 {
                                                MatrixEntry::Int(e.raw() as i64)
                                            } else {
                                                MatrixEntry::Coeffs(
                                                    e.coeffs().iter().map(|&c| c as u64).collect(),
                                                )
                                            }
                                        })
                                        .collect()
                                })
                                .collect(),
                        },
                        Element::Perm(_) => unreachable!("backend is matrix"),
                    })
                    .collect(),
            },
        }
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_materialized(&self) -> bool {
        self.group.get().is_some()
    }

    /// Enumerate the group once; later calls return the cached result.
    pub fn materialize(&self) -> Result<&FiniteGroup<Element>, GroupError> {
        self.group
            .get_or_init(|| FiniteGroup::generate(&self.gens, self.cap))
            .as_ref()
            .map_err(Clone::clone)
    }
}

fn parse_matrix_generator(
    field: &Field,
    dim: usize,
    g: &MatrixGenerator,
) -> Result<MatrixAutElement, GroupError> {
    if g.matrix.len() != dim {
        return Err(GroupError::InvalidMatrix(format!(
            "expected {dim} rows, found {}",
            g.matrix.len()
        )));
    }
    let q = field.order() as i64;
    let rows = g
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| match entry {
                    MatrixEntry::Int(v) if field.degree() == 1 => Ok(field.from_int(*v)),
                    MatrixEntry::Int(v) if (0..q).contains(v) => Ok(field.element(*v as u64)?),
                    MatrixEntry::Int(v) => Err(GroupError::InvalidMatrix(format!(
                        "entry {v} is not the encoding of an element of a field of order {q}"
                    ))),
                    MatrixEntry::Coeffs(c) => Ok(field.from_coeffs(c)?),
                })
                .collect::<Result<Vec<_>, GroupError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = FieldMatrix::from_rows(field, &rows)?;
    MatrixAutElement::new(m, g.twist)
}
