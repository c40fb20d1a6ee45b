//! JSON records for descriptors and decompositions.

use eqsurf_core::module::ModuleError;
use eqsurf_core::surface::{Character, Descriptor, FreeType};
use eqsurf_core::{Decomposition, Graded, ModuleTag, StandardModule, Summand, Window};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SerialError {
    #[error("unknown module name {0:?}")]
    UnknownModule(String),
    #[error("unknown {field} value {value:?}")]
    UnknownValue { field: &'static str, value: String },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorRecord {
    pub free: bool,
    pub orientable: bool,
    pub beta: u32,
    pub f: u32,
    pub c_plus: u32,
    pub c_minus: u32,
    pub character: Option<String>,
    pub free_type: Option<String>,
}

impl From<&Descriptor> for DescriptorRecord {
    fn from(d: &Descriptor) -> Self {
        DescriptorRecord {
            free: d.free,
            orientable: d.orientable,
            beta: d.beta,
            f: d.f,
            c_plus: d.c_plus,
            c_minus: d.c_minus,
            character: d.character.map(|c| match c {
                Character::Preserving => "preserving".into(),
                Character::Reversing => "reversing".into(),
            }),
            free_type: d.free_type.map(|t| match t {
                FreeType::Sphere => "sphere".into(),
                FreeType::Torus => "torus".into(),
            }),
        }
    }
}

impl DescriptorRecord {
    pub fn descriptor(&self) -> Result<Descriptor, SerialError> {
        let character = match self.character.as_deref() {
            None => None,
            Some("preserving") => Some(Character::Preserving),
            Some("reversing") => Some(Character::Reversing),
            Some(v) => {
                return Err(SerialError::UnknownValue {
                    field: "character",
                    value: v.into(),
                })
            }
        };
        let free_type = match self.free_type.as_deref() {
            None => None,
            Some("sphere") => Some(FreeType::Sphere),
            Some("torus") => Some(FreeType::Torus),
            Some(v) => {
                return Err(SerialError::UnknownValue {
                    field: "free_type",
                    value: v.into(),
                })
            }
        };
        Ok(Descriptor {
            free: self.free,
            orientable: self.orientable,
            beta: self.beta,
            f: self.f,
            c_plus: self.c_plus,
            c_minus: self.c_minus,
            character,
            free_type,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRecord {
    pub shift: [i64; 2],
    pub module: String,
    pub param: Option<u32>,
    pub multiplicity: u32,
}

/// Nonzero group at `(p, q)`: `[p, q, rank, [torsion...]]`.
pub type GroupEntry = (i64, i64, usize, Vec<u64>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub expression: String,
    pub descriptor: Option<DescriptorRecord>,
    pub summands: Vec<SummandRecord>,
    /// `[p0, p1, q0, q1]`, inclusive.
    pub window: [i64; 4],
    pub groups: Vec<GroupEntry>,
}

impl DecompositionRecord {
    pub fn new(
        expression: &str,
        descriptor: Option<&Descriptor>,
        d: &Decomposition,
        window: &Window,
    ) -> Self {
        let summands = d
            .summands()
            .iter()
            .map(|s| SummandRecord {
                shift: [s.shift.p, s.shift.q],
                module: s.module.tag().name().to_string(),
                param: s.module.tag().has_parameter().then(|| s.module.param()),
                multiplicity: s.multiplicity,
            })
            .collect();
        let groups = window
            .iter()
            .filter_map(|at| {
                let g = d.group_at(at.p, at.q);
                (!g.is_zero()).then(|| (at.p, at.q, g.rank(), g.torsion().to_vec()))
            })
            .collect();
        let (p0, p1, q0, q1) = window.bounds();
        DecompositionRecord {
            expression: expression.to_string(),
            descriptor: descriptor.map(DescriptorRecord::from),
            summands,
            window: [p0, p1, q0, q1],
            groups,
        }
    }

    pub fn decomposition(&self) -> Result<Decomposition, SerialError> {
        let mut items = Vec::new();
        for s in &self.summands {
            let tag = ModuleTag::from_name(&s.module)
                .ok_or_else(|| SerialError::UnknownModule(s.module.clone()))?;
            let module = StandardModule::from_parts(tag, s.param.unwrap_or(0))?;
            items.push(Summand::new(s.shift[0], s.shift[1], module, s.multiplicity));
        }
        Ok(Decomposition::from_summands(items))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, SerialError> {
        Ok(serde_json::from_str(s)?)
    }
}
