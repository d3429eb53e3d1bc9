//! JSON code descriptions.

use anyhow::{bail, Context, Result};
use ratdec::goppa::GoppaCode;
use ratdec::grs::GrsCode;
use ratdec::{Elem, Field, FieldSpec, Poly};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum CodeSpecFile {
    Grs {
        field: FieldJson,
        n: usize,
        k: usize,
        alphas: Vec<u32>,
        multipliers: Vec<u32>,
    },
    Goppa {
        field: FieldJson,
        goppa_poly: Vec<u32>,
        support: Vec<u32>,
    },
}

pub enum Code {
    Grs(GrsCode),
    Goppa(GoppaCode),
}

impl Code {
    pub fn field(&self) -> &Field {
        match self {
            Code::Grs(c) => c.field(),
            Code::Goppa(c) => c.field(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Code::Grs(c) => c.n(),
            Code::Goppa(c) => c.n(),
        }
    }

    pub fn is_codeword(&self, w: &[Elem]) -> Result<bool> {
        Ok(match self {
            Code::Grs(c) => c.is_codeword(w)?,
            Code::Goppa(c) => c.is_member(w)?,
        })
    }
}

pub fn field_json(field: &Field) -> FieldJson {
    let spec = field.spec();
    FieldJson {
        p: spec.characteristic(),
        m: spec.degree(),
        modulus: (spec.degree() > 1).then(|| spec.modulus().to_vec()),
    }
}

fn build_field(f: &FieldJson) -> Result<Field> {
    if f.m == 1 && f.modulus.is_some() {
        bail!("a prime field takes no modulus");
    }
    Ok(Field::new(FieldSpec::new(f.p, f.m, f.modulus.clone())?))
}

pub fn elems(field: &Field, values: &[u32]) -> Result<Vec<Elem>> {
    values.iter().map(|&v| Ok(field.elem(v)?)).collect()
}

impl CodeSpecFile {
    pub fn from_grs(code: &GrsCode) -> Self {
        CodeSpecFile::Grs {
            field: field_json(code.field()),
            n: code.n(),
            k: code.k(),
            alphas: code.alphas().iter().map(|a| a.value()).collect(),
            multipliers: code.multipliers().iter().map(|a| a.value()).collect(),
        }
    }

    pub fn from_goppa(code: &GoppaCode) -> Self {
        CodeSpecFile::Goppa {
            field: field_json(code.field()),
            goppa_poly: code.goppa_poly().coeffs().iter().map(|a| a.value()).collect(),
            support: code.support().iter().map(|a| a.value()).collect(),
        }
    }

    /// Rebuilds the code, re-running every constructor check.
    pub fn build(&self) -> Result<Code> {
        match self {
            CodeSpecFile::Grs { field, n, k, alphas, multipliers } => {
                let f = build_field(field)?;
                if alphas.len() != *n {
                    bail!("n = {n} but {} evaluation points", alphas.len());
                }
                let code = GrsCode::new(&f, *k, elems(&f, alphas)?, elems(&f, multipliers)?)?;
                Ok(Code::Grs(code))
            }
            CodeSpecFile::Goppa { field, goppa_poly, support } => {
                let f = build_field(field)?;
                let g = Poly::new(&f, elems(&f, goppa_poly)?);
                if g.lc().value() != 1 {
                    bail!("Goppa polynomial must be monic");
                }
                Ok(Code::Goppa(GoppaCode::new(&f, g, elems(&f, support)?)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }
}

pub fn load(path: &Path) -> Result<Code> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec: CodeSpecFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    spec.build()
}
