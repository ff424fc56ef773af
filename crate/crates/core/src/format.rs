//! JSON workspaces of named structures.
//!
//! ```json
//! {"field": "Q", "structures": [
//!   {"name": "H", "kind": "hopf", "basis": ["1", "g"],
//!    "mult": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
//!    "unit": ["1", "0"],
//!    "comult": [[0,0,0,"1"], [1,1,1,"1"]],
//!    "counit": ["1", "1"]}
//! ]}
//! ```
//!
//! Tensors are sparse lists `[i, j, k, "c"]` in the library's index
//! layout; coefficients may be strings (`"-1/2"`) or integers. An antipode
//! is a list `[i, j, "c"]` meaning `S(e_i)` has coefficient `c` on `e_j`;
//! when it is missing it is solved for. Structures may only refer to names
//! defined earlier in the list. A file holding one bare structure object is
//! also accepted.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::{BicomoduleAlgebra, LeftComoduleAlgebra, ModComodule, RightModule, RightModuleCoalgebra};
use crate::dk::DkDatum;
use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Scalar, Tensor};
use crate::structures::{solve_antipode, Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use crate::yd::YdDatum;

/// One named structure. Data and modules remember the names of their parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Hopf(HopfAlgebra),
    ComoduleAlgebra { over: String, value: LeftComoduleAlgebra },
    ModuleCoalgebra { over: String, value: RightModuleCoalgebra },
    BicomoduleAlgebra { over: String, value: BicomoduleAlgebra },
    DkDatum { hopf: String, algebra: String, coalgebra: String, value: DkDatum },
    YdDatum { hopf: String, algebra: String, value: YdDatum },
    Module { over: String, value: RightModule },
    DkModule { datum: String, value: ModComodule },
    YdModule { datum: String, value: ModComodule },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Hopf(_) => "hopf",
            Structure::ComoduleAlgebra { .. } => "comodule_algebra",
            Structure::ModuleCoalgebra { .. } => "module_coalgebra",
            Structure::BicomoduleAlgebra { .. } => "bicomodule_algebra",
            Structure::DkDatum { .. } => "dk_datum",
            Structure::YdDatum { .. } => "yd_datum",
            Structure::Module { .. } => "module",
            Structure::DkModule { .. } => "dk_module",
            Structure::YdModule { .. } => "yd_module",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub field: Field,
    pub items: Vec<(String, Structure)>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Raw {
    name: Option<String>,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<Field>,
    #[serde(skip_serializing_if = "Option::is_none")]
    over: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hopf: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coalgebra: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    datum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comult: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coaction: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left_coaction: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right_coaction: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    action: Option<Vec<Vec<Value>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    field: Field,
    structures: Vec<Raw>,
}

fn parse_raw(text: &str) -> Result<(Field, Vec<Raw>)> {
    let v: Value = serde_json::from_str(text)?;
    if v.get("structures").is_some() {
        let w: RawWorkspace = serde_json::from_value(v).map_err(|e| ferr("workspace", e.to_string()))?;
        Ok((w.field, w.structures))
    } else {
        let r: Raw = serde_json::from_value(v).map_err(|e| ferr("structure", e.to_string()))?;
        Ok((r.field.unwrap_or(Field::Rationals), vec![r]))
    }
}

fn ferr(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Format { location: location.into(), message: message.into() }
}

fn scalar(field: Field, v: &Value, loc: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s).map_err(|_| ferr(loc, format!("bad coefficient `{s}`"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => Err(ferr(loc, format!("coefficient {n} is not an integer; quote fractions"))),
        },
        _ => Err(ferr(loc, "coefficient must be a string or an integer")),
    }
}

fn dense(field: Field, v: &[Value], len: usize, loc: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(ferr(loc, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, x)| scalar(field, x, &format!("{loc}[{i}]"))).collect()
}

fn sparse(field: Field, entries: &[Vec<Value>], shape: &[usize], loc: &str) -> Result<Tensor> {
    let mut t = Tensor::zeros(field, shape);
    for (n, e) in entries.iter().enumerate() {
        let here = format!("{loc}[{n}]");
        if e.len() != shape.len() + 1 {
            return Err(ferr(&here, format!("expected {} indices and a coefficient", shape.len())));
        }
        let mut idx = Vec::with_capacity(shape.len());
        for (k, bound) in shape.iter().enumerate() {
            match e[k].as_u64() {
                Some(i) if (i as usize) < *bound => idx.push(i as usize),
                _ => return Err(ferr(&here, format!("index {} out of range 0..{bound}", e[k]))),
            }
        }
        let c = scalar(field, &e[shape.len()], &here)?;
        t.add_to(&idx, &c);
    }
    Ok(t)
}

fn to_sparse(t: &Tensor) -> Vec<Vec<Value>> {
    t.nonzeros()
        .map(|(idx, c)| {
            let mut row: Vec<Value> = idx.into_iter().map(Value::from).collect();
            row.push(Value::from(c.to_string()));
            row
        })
        .collect()
}

fn to_dense(v: &[Scalar]) -> Vec<Value> {
    v.iter().map(|c| Value::from(c.to_string())).collect()
}

fn need<'a, T>(x: &'a Option<T>, key: &str, loc: &str) -> Result<&'a T> {
    x.as_ref().ok_or_else(|| ferr(loc, format!("missing `{key}`")))
}

impl Workspace {
    pub fn new(field: Field) -> Workspace {
        Workspace { field, items: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, s: Structure) {
        self.items.push((name.into(), s));
    }

    pub fn get(&self, name: &str) -> Option<&Structure> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// The structure called `name`, or with no name the last one of `kind`.
    pub fn select(&self, name: Option<&str>, kinds: &[&str]) -> Result<(&str, &Structure)> {
        let found = match name {
            Some(n) => self.items.iter().find(|(m, _)| m == n),
            None => self.items.iter().rev().find(|(_, s)| kinds.contains(&s.kind())),
        };
        match found {
            Some((n, s)) if kinds.contains(&s.kind()) => Ok((n.as_str(), s)),
            Some((n, s)) => Err(ferr(n.clone(), format!("is a {}, expected one of {}", s.kind(), kinds.join(", ")))),
            None => Err(Error::UnknownReference(name.map_or_else(|| kinds.join("/"), str::to_string))),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<&HopfAlgebra> {
        match self.get(name) {
            Some(Structure::Hopf(h)) => Ok(h),
            Some(s) => Err(ferr(name, format!("is a {}, expected hopf", s.kind()))),
            None => Err(Error::UnknownReference(name.to_string())),
        }
    }

    pub fn dk_datum(&self, name: &str) -> Result<&DkDatum> {
        match self.get(name) {
            Some(Structure::DkDatum { value, .. }) => Ok(value),
            Some(s) => Err(ferr(name, format!("is a {}, expected dk_datum", s.kind()))),
            None => Err(Error::UnknownReference(name.to_string())),
        }
    }

    pub fn yd_datum(&self, name: &str) -> Result<&YdDatum> {
        match self.get(name) {
            Some(Structure::YdDatum { value, .. }) => Ok(value),
            Some(s) => Err(ferr(name, format!("is a {}, expected yd_datum", s.kind()))),
            None => Err(Error::UnknownReference(name.to_string())),
        }
    }

    /// Parses a workspace. Coefficients are read in `field` when given,
    /// otherwise in the field the file declares (default `Q`).
    pub fn load(text: &str, field: Option<Field>) -> Result<Workspace> {
        let (file_field, raws) = parse_raw(text)?;
        let mut w = Workspace::new(field.unwrap_or(file_field));
        w.add_raw(raws)?;
        Ok(w)
    }

    /// Loads more structures into this workspace, in its field; they may
    /// refer to anything already present.
    pub fn extend(&mut self, text: &str) -> Result<()> {
        let (_, raws) = parse_raw(text)?;
        self.add_raw(raws)
    }

    fn add_raw(&mut self, raws: Vec<Raw>) -> Result<()> {
        let offset = self.items.len();
        for (i, r) in raws.iter().enumerate() {
            let name = r.name.clone().unwrap_or_else(|| format!("#{}", offset + i));
            let s = self.build(r, &name)?;
            self.push(name, s);
        }
        Ok(())
    }

    fn build(&self, r: &Raw, loc: &str) -> Result<Structure> {
        let f = self.field;
        let basis = || need(&r.basis, "basis", loc).cloned();
        let algebra = |basis: Vec<String>| -> Result<Algebra> {
            let d = basis.len();
            let mult = sparse(f, need(&r.mult, "mult", loc)?, &[d, d, d], &format!("{loc}.mult"))?;
            let unit = dense(f, need(&r.unit, "unit", loc)?, d, &format!("{loc}.unit"))?;
            Algebra::new_unchecked(basis, mult, unit)
        };
        let coalgebra = |basis: Vec<String>| -> Result<Coalgebra> {
            let d = basis.len();
            let comult = sparse(f, need(&r.comult, "comult", loc)?, &[d, d, d], &format!("{loc}.comult"))?;
            let counit = dense(f, need(&r.counit, "counit", loc)?, d, &format!("{loc}.counit"))?;
            Coalgebra::new_unchecked(basis, comult, counit)
        };
        let over = || -> Result<(String, &HopfAlgebra)> {
            let n = need(&r.over, "over", loc)?;
            Ok((n.clone(), self.hopf(n)?))
        };
        Ok(match r.kind.as_str() {
            "algebra" => Structure::Algebra(algebra(basis()?)?),
            "coalgebra" => Structure::Coalgebra(coalgebra(basis()?)?),
            "hopf" => {
                let b = basis()?;
                let d = b.len();
                let bi = Bialgebra::new_unchecked(algebra(b.clone())?, coalgebra(b)?)?;
                let s = match &r.antipode {
                    Some(entries) => {
                        let t = sparse(f, entries, &[d, d], &format!("{loc}.antipode"))?;
                        t.to_matrix()?.transpose()
                    }
                    None => solve_antipode(&bi).ok_or_else(|| Error::AxiomViolation {
                        what: "Hopf algebra".into(),
                        detail: format!("{loc}: the bialgebra has no antipode"),
                    })?,
                };
                Structure::Hopf(HopfAlgebra::new_unchecked(bi, s)?)
            }
            "comodule_algebra" => {
                let (on, h) = over()?;
                let b = basis()?;
                let d = b.len();
                let co = sparse(f, need(&r.coaction, "coaction", loc)?, &[d, h.dim(), d], &format!("{loc}.coaction"))?;
                Structure::ComoduleAlgebra { over: on, value: LeftComoduleAlgebra { algebra: algebra(b)?, coaction: co } }
            }
            "module_coalgebra" => {
                let (on, h) = over()?;
                let b = basis()?;
                let d = b.len();
                let act = sparse(f, need(&r.action, "action", loc)?, &[d, h.dim(), d], &format!("{loc}.action"))?;
                Structure::ModuleCoalgebra { over: on, value: RightModuleCoalgebra { coalgebra: coalgebra(b)?, action: act } }
            }
            "bicomodule_algebra" => {
                let (on, h) = over()?;
                let b = basis()?;
                let (d, hd) = (b.len(), h.dim());
                let left = sparse(f, need(&r.left_coaction, "left_coaction", loc)?, &[d, hd, d], &format!("{loc}.left_coaction"))?;
                let right = sparse(f, need(&r.right_coaction, "right_coaction", loc)?, &[d, d, hd], &format!("{loc}.right_coaction"))?;
                Structure::BicomoduleAlgebra { over: on, value: BicomoduleAlgebra { algebra: algebra(b)?, left, right } }
            }
            "dk_datum" => {
                let hn = need(&r.hopf, "hopf", loc)?;
                let an = need(&r.algebra, "algebra", loc)?;
                let cn = need(&r.coalgebra, "coalgebra", loc)?;
                let h = self.hopf(hn)?;
                let a = match self.get(an) {
                    Some(Structure::ComoduleAlgebra { value, .. }) => value,
                    _ => return Err(ferr(loc, format!("`{an}` is not a comodule_algebra"))),
                };
                let c = match self.get(cn) {
                    Some(Structure::ModuleCoalgebra { value, .. }) => value,
                    _ => return Err(ferr(loc, format!("`{cn}` is not a module_coalgebra"))),
                };
                let value = DkDatum::new_unchecked(h.clone(), a.clone(), c.clone())?;
                Structure::DkDatum { hopf: hn.clone(), algebra: an.clone(), coalgebra: cn.clone(), value }
            }
            "yd_datum" => {
                let hn = need(&r.hopf, "hopf", loc)?;
                let an = need(&r.algebra, "algebra", loc)?;
                let h = self.hopf(hn)?;
                let a = match self.get(an) {
                    Some(Structure::BicomoduleAlgebra { value, .. }) => value,
                    _ => return Err(ferr(loc, format!("`{an}` is not a bicomodule_algebra"))),
                };
                let value = YdDatum::new_unchecked(h.clone(), a.clone())?;
                Structure::YdDatum { hopf: hn.clone(), algebra: an.clone(), value }
            }
            "module" => {
                let on = need(&r.over, "over", loc)?;
                let ad = match self.get(on) {
                    Some(Structure::Algebra(a)) => a.dim(),
                    Some(Structure::Hopf(h)) => h.dim(),
                    Some(Structure::ComoduleAlgebra { value, .. }) => value.dim(),
                    Some(Structure::BicomoduleAlgebra { value, .. }) => value.dim(),
                    Some(_) => return Err(ferr(loc, format!("`{on}` is not an algebra"))),
                    None => return Err(Error::UnknownReference(on.clone())),
                };
                let b = basis()?;
                let d = b.len();
                let act = sparse(f, need(&r.action, "action", loc)?, &[d, ad, d], &format!("{loc}.action"))?;
                Structure::Module { over: on.clone(), value: RightModule::new(b, act, ad)? }
            }
            kind @ ("dk_module" | "yd_module") => {
                let dn = need(&r.datum, "datum", loc)?;
                let (ad, hd) = match (kind, self.get(dn)) {
                    ("dk_module", Some(Structure::DkDatum { value, .. })) => (value.a_dim(), value.c_dim()),
                    ("yd_module", Some(Structure::YdDatum { value, .. })) => (value.a_dim(), value.h_dim()),
                    (_, None) => return Err(Error::UnknownReference(dn.clone())),
                    _ => return Err(ferr(loc, format!("`{dn}` is not a datum of the right kind"))),
                };
                let b = basis()?;
                let d = b.len();
                let act = sparse(f, need(&r.action, "action", loc)?, &[d, ad, d], &format!("{loc}.action"))?;
                let co = sparse(f, need(&r.coaction, "coaction", loc)?, &[d, hd, d], &format!("{loc}.coaction"))?;
                let value = ModComodule::new(b, act, co)?;
                if kind == "dk_module" {
                    Structure::DkModule { datum: dn.clone(), value }
                } else {
                    Structure::YdModule { datum: dn.clone(), value }
                }
            }
            other => return Err(ferr(loc, format!("unknown kind `{other}`"))),
        })
    }

    pub fn to_json(&self) -> String {
        let structures = self.items.iter().map(|(n, s)| raw_of(n, s)).collect();
        let w = RawWorkspace { field: self.field, structures };
        serde_json::to_string_pretty(&w).expect("serializable")
    }
}

fn raw_algebra(r: &mut Raw, a: &Algebra) {
    r.basis = Some(a.basis().to_vec());
    r.mult = Some(to_sparse(a.mult()));
    r.unit = Some(to_dense(a.unit()));
}

fn raw_coalgebra(r: &mut Raw, c: &Coalgebra) {
    r.basis = Some(c.basis().to_vec());
    r.comult = Some(to_sparse(c.comult()));
    r.counit = Some(to_dense(c.counit()));
}

fn raw_of(name: &str, s: &Structure) -> Raw {
    let mut r = Raw { name: Some(name.to_string()), kind: s.kind().to_string(), ..Raw::default() };
    match s {
        Structure::Algebra(a) => raw_algebra(&mut r, a),
        Structure::Coalgebra(c) => raw_coalgebra(&mut r, c),
        Structure::Hopf(h) => {
            raw_algebra(&mut r, h.algebra());
            raw_coalgebra(&mut r, h.coalgebra());
            r.antipode = Some(to_sparse(&Tensor::from_matrix(&h.antipode().transpose())));
        }
        Structure::ComoduleAlgebra { over, value } => {
            r.over = Some(over.clone());
            raw_algebra(&mut r, &value.algebra);
            r.coaction = Some(to_sparse(&value.coaction));
        }
        Structure::ModuleCoalgebra { over, value } => {
            r.over = Some(over.clone());
            raw_coalgebra(&mut r, &value.coalgebra);
            r.action = Some(to_sparse(&value.action));
        }
        Structure::BicomoduleAlgebra { over, value } => {
            r.over = Some(over.clone());
            raw_algebra(&mut r, &value.algebra);
            r.left_coaction = Some(to_sparse(&value.left));
            r.right_coaction = Some(to_sparse(&value.right));
        }
        Structure::DkDatum { hopf, algebra, coalgebra, .. } => {
            r.hopf = Some(hopf.clone());
            r.algebra = Some(algebra.clone());
            r.coalgebra = Some(coalgebra.clone());
        }
        Structure::YdDatum { hopf, algebra, .. } => {
            r.hopf = Some(hopf.clone());
            r.algebra = Some(algebra.clone());
        }
        Structure::Module { over, value } => {
            r.over = Some(over.clone());
            r.basis = Some(value.basis.clone());
            r.action = Some(to_sparse(&value.action));
        }
        Structure::DkModule { datum, value } | Structure::YdModule { datum, value } => {
            r.datum = Some(datum.clone());
            r.basis = Some(value.basis.clone());
            r.action = Some(to_sparse(&value.action));
            r.coaction = Some(to_sparse(&value.coaction));
        }
    }
    r
}

/// A matrix as its rows of coefficient strings.
pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
}
