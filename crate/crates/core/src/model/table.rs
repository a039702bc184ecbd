//! Finite models given by explicit tables, and the model file format.
//!
//! All references inside a file are by name. Composites with an identity and
//! actions of the unit object may be omitted; every other table must be total.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Assignment, Cell1, Cell2, Model, Obj};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("cannot read model file: {0}")]
    Syntax(String),
    #[error("unknown model kind `{0}`")]
    UnknownKind(String),
    #[error("{section}: unknown name `{name}`")]
    UnknownName { section: &'static str, name: String },
    #[error("{section}: duplicate name `{name}`")]
    Duplicate { section: &'static str, name: String },
    #[error("{section}: entry {entry} is ill-typed")]
    IllTyped { section: &'static str, entry: String },
    #[error("{section}: no entry for {key}")]
    Missing { section: &'static str, key: String },
    #[error("{0}")]
    Malformed(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectsSection {
    pub names: Vec<String>,
    pub unit: String,
    /// `[a, b, a⊗b]`
    #[serde(default)]
    pub tensor: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell1Entry {
    pub name: String,
    pub dom: String,
    pub cod: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell2Entry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub src: String,
    pub tgt: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub identity: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiskerSection {
    /// `[h, alpha, result]`: `alpha` after `h`.
    #[serde(default)]
    pub pre: Vec<[String; 3]>,
    /// `[alpha, k, result]`: `k` after `alpha`.
    #[serde(default)]
    pub post: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSection {
    /// `[object, cell, result]` for the left action, `[cell, object, result]`
    /// for the right one.
    #[serde(default)]
    pub cells1: Vec<[String; 3]>,
    #[serde(default)]
    pub cells2: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiEntry {
    pub f: String,
    pub g: String,
    pub cell: String,
    pub inverse: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentSection {
    #[serde(default)]
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub gens1: BTreeMap<String, String>,
    #[serde(default)]
    pub gens2: BTreeMap<String, String>,
}

/// The on-disk form of a model.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    /// `table` or `sphere-q`.
    pub kind: String,
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    /// `[f, g, f-then-g]`
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compose1: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compose2: Vec<[String; 3]>,
    /// `[a, b, beta_{a,b}]`
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub beta: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<ObjectsSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells1: Vec<Cell1Entry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells2: Vec<Cell2Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub whisker: Option<WhiskerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ltensor: Option<ActionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rtensor: Option<ActionSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phi: Vec<PhiEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<AssignmentSection>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        toml::from_str(text).map_err(|e| TableError::Syntax(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("model files always serialize")
    }

    /// Resolves the `assignment` section against `m`.
    pub fn assignment(&self, m: &dyn Model) -> Result<Assignment, TableError> {
        let mut out = Assignment::default();
        let Some(sec) = &self.assignment else { return Ok(out) };
        for (k, v) in &sec.objects {
            let o = m.parse_obj(v).ok_or_else(|| TableError::UnknownName { section: "assignment", name: v.clone() })?;
            out.objects.insert(k.as_str().into(), o);
        }
        for (k, v) in &sec.gens1 {
            let c = m.parse_cell1(v).ok_or_else(|| TableError::UnknownName { section: "assignment", name: v.clone() })?;
            out.gens1.insert(k.as_str().into(), c);
        }
        for (k, v) in &sec.gens2 {
            let c = m.parse_cell2(v).ok_or_else(|| TableError::UnknownName { section: "assignment", name: v.clone() })?;
            out.gens2.insert(k.as_str().into(), c);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct C1 {
    name: String,
    dom: Obj,
    cod: Obj,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct C2 {
    name: String,
    label: Option<String>,
    src: Cell1,
    tgt: Cell1,
}

/// A model with finitely many cells, stored as lookup tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableModel {
    name: String,
    objects: Vec<String>,
    unit: Obj,
    tensor: BTreeMap<(Obj, Obj), Obj>,
    cells1: Vec<C1>,
    ids1: BTreeMap<Obj, Cell1>,
    compose1: BTreeMap<(Cell1, Cell1), Cell1>,
    cells2: Vec<C2>,
    ids2: BTreeMap<Cell1, Cell2>,
    inverse: BTreeMap<Cell2, Cell2>,
    compose2: BTreeMap<(Cell2, Cell2), Cell2>,
    pre: BTreeMap<(Cell1, Cell2), Cell2>,
    post: BTreeMap<(Cell2, Cell1), Cell2>,
    l1: BTreeMap<(Obj, Cell1), Cell1>,
    r1: BTreeMap<(Cell1, Obj), Cell1>,
    l2: BTreeMap<(Obj, Cell2), Cell2>,
    r2: BTreeMap<(Cell2, Obj), Cell2>,
    phi: BTreeMap<(Cell1, Cell1), (Cell2, Cell2)>,
    beta: BTreeMap<(Obj, Obj), Cell1>,
}

struct Names<'a> {
    objs: BTreeMap<&'a str, Obj>,
    c1: BTreeMap<&'a str, Cell1>,
    c2: BTreeMap<&'a str, Cell2>,
}

impl<'a> Names<'a> {
    fn obj(&self, section: &'static str, n: &str) -> Result<Obj, TableError> {
        self.objs.get(n).copied().ok_or_else(|| TableError::UnknownName { section, name: n.into() })
    }
    fn c1(&self, section: &'static str, n: &str) -> Result<Cell1, TableError> {
        self.c1.get(n).copied().ok_or_else(|| TableError::UnknownName { section, name: n.into() })
    }
    fn c2(&self, section: &'static str, n: &str) -> Result<Cell2, TableError> {
        self.c2.get(n).copied().ok_or_else(|| TableError::UnknownName { section, name: n.into() })
    }
}

fn index<'a, I: Iterator<Item = &'a str>, T>(section: &'static str, it: I, mk: impl Fn(u32) -> T) -> Result<BTreeMap<&'a str, T>, TableError> {
    let mut out = BTreeMap::new();
    for (i, n) in it.enumerate() {
        if out.insert(n, mk(i as u32)).is_some() {
            return Err(TableError::Duplicate { section, name: n.into() });
        }
    }
    Ok(out)
}

impl TableModel {
    pub fn from_file(f: &ModelFile) -> Result<Self, TableError> {
        if f.kind != "table" {
            return Err(TableError::UnknownKind(f.kind.clone()));
        }
        let objs = f.objects.clone().ok_or_else(|| TableError::Malformed("missing [objects] section".into()))?;
        let names = Names {
            objs: index("objects", objs.names.iter().map(String::as_str), Obj)?,
            c1: index("cells1", f.cells1.iter().map(|c| c.name.as_str()), Cell1)?,
            c2: index("cells2", f.cells2.iter().map(|c| c.name.as_str()), Cell2)?,
        };
        let mut m = TableModel {
            name: f.name.clone(),
            objects: objs.names.clone(),
            unit: names.obj("objects", &objs.unit)?,
            tensor: BTreeMap::new(),
            cells1: Vec::new(),
            ids1: BTreeMap::new(),
            compose1: BTreeMap::new(),
            cells2: Vec::new(),
            ids2: BTreeMap::new(),
            inverse: BTreeMap::new(),
            compose2: BTreeMap::new(),
            pre: BTreeMap::new(),
            post: BTreeMap::new(),
            l1: BTreeMap::new(),
            r1: BTreeMap::new(),
            l2: BTreeMap::new(),
            r2: BTreeMap::new(),
            phi: BTreeMap::new(),
            beta: BTreeMap::new(),
        };
        for [a, b, c] in &objs.tensor {
            let key = (names.obj("objects.tensor", a)?, names.obj("objects.tensor", b)?);
            m.tensor.insert(key, names.obj("objects.tensor", c)?);
        }
        for c in &f.cells1 {
            let (dom, cod) = (names.obj("cells1", &c.dom)?, names.obj("cells1", &c.cod)?);
            let h = Cell1(m.cells1.len() as u32);
            if c.identity {
                if dom != cod || m.ids1.insert(dom, h).is_some() {
                    return Err(TableError::IllTyped { section: "cells1", entry: c.name.clone() });
                }
            }
            m.cells1.push(C1 { name: c.name.clone(), dom, cod });
        }
        for c in &f.cells2 {
            let (src, tgt) = (names.c1("cells2", &c.src)?, names.c1("cells2", &c.tgt)?);
            let h = Cell2(m.cells2.len() as u32);
            if c.identity && (src != tgt || m.ids2.insert(src, h).is_some()) {
                return Err(TableError::IllTyped { section: "cells2", entry: c.name.clone() });
            }
            m.cells2.push(C2 { name: c.name.clone(), label: c.label.clone(), src, tgt });
        }
        for c in &f.cells2 {
            if let Some(inv) = &c.inverse {
                m.inverse.insert(names.c2("cells2", &c.name)?, names.c2("cells2", inv)?);
            }
        }
        for [a, b, c] in &f.compose1 {
            m.compose1.insert((names.c1("compose1", a)?, names.c1("compose1", b)?), names.c1("compose1", c)?);
        }
        for [a, b, c] in &f.compose2 {
            m.compose2.insert((names.c2("compose2", a)?, names.c2("compose2", b)?), names.c2("compose2", c)?);
        }
        if let Some(w) = &f.whisker {
            for [h, a, r] in &w.pre {
                m.pre.insert((names.c1("whisker.pre", h)?, names.c2("whisker.pre", a)?), names.c2("whisker.pre", r)?);
            }
            for [a, k, r] in &w.post {
                m.post.insert((names.c2("whisker.post", a)?, names.c1("whisker.post", k)?), names.c2("whisker.post", r)?);
            }
        }
        if let Some(l) = &f.ltensor {
            for [a, x, r] in &l.cells1 {
                m.l1.insert((names.obj("ltensor", a)?, names.c1("ltensor", x)?), names.c1("ltensor", r)?);
            }
            for [a, x, r] in &l.cells2 {
                m.l2.insert((names.obj("ltensor", a)?, names.c2("ltensor", x)?), names.c2("ltensor", r)?);
            }
        }
        if let Some(r) = &f.rtensor {
            for [x, a, v] in &r.cells1 {
                m.r1.insert((names.c1("rtensor", x)?, names.obj("rtensor", a)?), names.c1("rtensor", v)?);
            }
            for [x, a, v] in &r.cells2 {
                m.r2.insert((names.c2("rtensor", x)?, names.obj("rtensor", a)?), names.c2("rtensor", v)?);
            }
        }
        for p in &f.phi {
            let key = (names.c1("phi", &p.f)?, names.c1("phi", &p.g)?);
            m.phi.insert(key, (names.c2("phi", &p.cell)?, names.c2("phi", &p.inverse)?));
        }
        for [a, b, c] in &f.beta {
            m.beta.insert((names.obj("beta", a)?, names.obj("beta", b)?), names.c1("beta", c)?);
        }
        m.validate()?;
        Ok(m)
    }

    /// Totality and typing of every table.
    fn validate(&self) -> Result<(), TableError> {
        let objs: Vec<Obj> = (0..self.objects.len() as u32).map(Obj).collect();
        let missing = |section: &'static str, key: String| TableError::Missing { section, key };
        for &a in &objs {
            for &b in &objs {
                if a != self.unit && b != self.unit && !self.tensor.contains_key(&(a, b)) {
                    return Err(missing("objects.tensor", format!("({}, {})", self.objects[a.0 as usize], self.objects[b.0 as usize])));
                }
            }
            if !self.ids1.contains_key(&a) {
                return Err(missing("cells1", format!("identity on {}", self.objects[a.0 as usize])));
            }
        }
        for (i, c) in self.cells1.iter().enumerate() {
            let f = Cell1(i as u32);
            if !self.ids2.contains_key(&f) {
                return Err(missing("cells2", format!("identity on {}", c.name)));
            }
            for (j, d) in self.cells1.iter().enumerate() {
                let g = Cell1(j as u32);
                if c.cod == d.dom && self.then1(f, g).is_none() {
                    return Err(missing("compose1", format!("({}, {})", c.name, d.name)));
                }
                if !self.phi.contains_key(&(f, g)) {
                    return Err(missing("phi", format!("({}, {})", c.name, d.name)));
                }
            }
            for &a in &objs {
                if a != self.unit && !(self.l1.contains_key(&(a, f)) && self.r1.contains_key(&(f, a))) {
                    return Err(missing("ltensor/rtensor", format!("({}, {})", self.objects[a.0 as usize], c.name)));
                }
            }
        }
        for (i, c) in self.cells2.iter().enumerate() {
            let x = Cell2(i as u32);
            for (j, d) in self.cells2.iter().enumerate() {
                if c.tgt == d.src && self.then2(x, Cell2(j as u32)).is_none() {
                    return Err(missing("compose2", format!("({}, {})", c.name, d.name)));
                }
            }
            for &a in &objs {
                if a != self.unit && !(self.l2.contains_key(&(a, x)) && self.r2.contains_key(&(x, a))) {
                    return Err(missing("ltensor/rtensor", format!("({}, {})", self.objects[a.0 as usize], c.name)));
                }
            }
        }
        for &a in &objs {
            for &b in &objs {
                if !self.beta.contains_key(&(a, b)) {
                    return Err(missing("beta", format!("({}, {})", self.objects[a.0 as usize], self.objects[b.0 as usize])));
                }
            }
        }
        for (&(a, b), &c) in &self.compose1 {
            let (ca, cb, cc) = (&self.cells1[a.0 as usize], &self.cells1[b.0 as usize], &self.cells1[c.0 as usize]);
            if ca.cod != cb.dom || cc.dom != ca.dom || cc.cod != cb.cod {
                return Err(TableError::IllTyped { section: "compose1", entry: format!("({}, {})", ca.name, cb.name) });
            }
        }
        for (&(a, b), &c) in &self.compose2 {
            let (ca, cb, cc) = (&self.cells2[a.0 as usize], &self.cells2[b.0 as usize], &self.cells2[c.0 as usize]);
            if ca.tgt != cb.src || cc.src != ca.src || cc.tgt != cb.tgt {
                return Err(TableError::IllTyped { section: "compose2", entry: format!("({}, {})", ca.name, cb.name) });
            }
        }
        for (&(f, g), &(p, q)) in &self.phi {
            if self.then2(p, q) != Some(self.id2(self.src(p))) || self.then2(q, p) != Some(self.id2(self.tgt(p))) {
                return Err(TableError::IllTyped {
                    section: "phi",
                    entry: format!("({}, {}): inverse does not cancel", self.cells1[f.0 as usize].name, self.cells1[g.0 as usize].name),
                });
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> ModelFile {
        let on = |o: Obj| self.objects[o.0 as usize].clone();
        let c1 = |c: Cell1| self.cells1[c.0 as usize].name.clone();
        let c2 = |c: Cell2| self.cells2[c.0 as usize].name.clone();
        let identity1: BTreeMap<Cell1, Obj> = self.ids1.iter().map(|(&o, &c)| (c, o)).collect();
        let identity2: BTreeMap<Cell2, Cell1> = self.ids2.iter().map(|(&f, &c)| (c, f)).collect();
        ModelFile {
            kind: "table".into(),
            name: self.name.clone(),
            window: None,
            variant: None,
            compose1: self.compose1.iter().map(|(&(a, b), &c)| [c1(a), c1(b), c1(c)]).collect(),
            compose2: self.compose2.iter().map(|(&(a, b), &c)| [c2(a), c2(b), c2(c)]).collect(),
            beta: self.beta.iter().map(|(&(a, b), &c)| [on(a), on(b), c1(c)]).collect(),
            objects: Some(ObjectsSection {
                names: self.objects.clone(),
                unit: on(self.unit),
                tensor: self.tensor.iter().map(|(&(a, b), &c)| [on(a), on(b), on(c)]).collect(),
            }),
            cells1: self
                .cells1
                .iter()
                .enumerate()
                .map(|(i, c)| Cell1Entry {
                    name: c.name.clone(),
                    dom: on(c.dom),
                    cod: on(c.cod),
                    identity: identity1.contains_key(&Cell1(i as u32)),
                })
                .collect(),
            cells2: self
                .cells2
                .iter()
                .enumerate()
                .map(|(i, c)| Cell2Entry {
                    name: c.name.clone(),
                    label: c.label.clone(),
                    src: c1(c.src),
                    tgt: c1(c.tgt),
                    identity: identity2.contains_key(&Cell2(i as u32)),
                    inverse: self.inverse.get(&Cell2(i as u32)).map(|&x| c2(x)),
                })
                .collect(),
            whisker: Some(WhiskerSection {
                pre: self.pre.iter().map(|(&(h, a), &r)| [c1(h), c2(a), c2(r)]).collect(),
                post: self.post.iter().map(|(&(a, k), &r)| [c2(a), c1(k), c2(r)]).collect(),
            }),
            ltensor: Some(ActionSection {
                cells1: self.l1.iter().map(|(&(a, f), &r)| [on(a), c1(f), c1(r)]).collect(),
                cells2: self.l2.iter().map(|(&(a, x), &r)| [on(a), c2(x), c2(r)]).collect(),
            }),
            rtensor: Some(ActionSection {
                cells1: self.r1.iter().map(|(&(f, a), &r)| [c1(f), on(a), c1(r)]).collect(),
                cells2: self.r2.iter().map(|(&(x, a), &r)| [c2(x), on(a), c2(r)]).collect(),
            }),
            phi: self
                .phi
                .iter()
                .map(|(&(f, g), &(p, q))| PhiEntry { f: c1(f), g: c1(g), cell: c2(p), inverse: c2(q) })
                .collect(),
            assignment: None,
        }
    }
}

impl Model for TableModel {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn objects(&self) -> Vec<Obj> {
        (0..self.objects.len() as u32).map(Obj).collect()
    }

    fn unit(&self) -> Obj {
        self.unit
    }

    fn tensor(&self, a: Obj, b: Obj) -> Obj {
        if a == self.unit {
            return b;
        }
        if b == self.unit {
            return a;
        }
        self.tensor[&(a, b)]
    }

    fn hom(&self, a: Obj, b: Obj) -> Vec<Cell1> {
        (0..self.cells1.len() as u32)
            .map(Cell1)
            .filter(|&f| self.dom(f) == a && self.cod(f) == b)
            .collect()
    }

    fn dom(&self, f: Cell1) -> Obj {
        self.cells1[f.0 as usize].dom
    }

    fn cod(&self, f: Cell1) -> Obj {
        self.cells1[f.0 as usize].cod
    }

    fn id1(&self, a: Obj) -> Cell1 {
        self.ids1[&a]
    }

    fn then1(&self, f: Cell1, g: Cell1) -> Option<Cell1> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        if self.is_id1(f) {
            return Some(g);
        }
        if self.is_id1(g) {
            return Some(f);
        }
        self.compose1.get(&(f, g)).copied()
    }

    fn hom2(&self, f: Cell1, g: Cell1) -> Vec<Cell2> {
        (0..self.cells2.len() as u32)
            .map(Cell2)
            .filter(|&x| self.src(x) == f && self.tgt(x) == g)
            .collect()
    }

    fn src(&self, a: Cell2) -> Cell1 {
        self.cells2[a.0 as usize].src
    }

    fn tgt(&self, a: Cell2) -> Cell1 {
        self.cells2[a.0 as usize].tgt
    }

    fn id2(&self, f: Cell1) -> Cell2 {
        self.ids2[&f]
    }

    fn then2(&self, a: Cell2, b: Cell2) -> Option<Cell2> {
        if self.tgt(a) != self.src(b) {
            return None;
        }
        if self.is_id2(a) {
            return Some(b);
        }
        if self.is_id2(b) {
            return Some(a);
        }
        self.compose2.get(&(a, b)).copied()
    }

    fn inverse(&self, a: Cell2) -> Option<Cell2> {
        if self.is_id2(a) {
            return Some(a);
        }
        self.inverse.get(&a).copied()
    }

    fn whisker(&self, below: Cell1, a: Cell2, above: Cell1) -> Option<Cell2> {
        let x = self.src(a);
        if self.cod(below) != self.dom(x) || self.dom(above) != self.cod(x) {
            return None;
        }
        let a = if self.is_id1(below) { a } else { *self.pre.get(&(below, a))? };
        if self.is_id1(above) {
            Some(a)
        } else {
            self.post.get(&(a, above)).copied()
        }
    }

    fn ltensor1(&self, a: Obj, f: Cell1) -> Cell1 {
        if a == self.unit {
            f
        } else {
            self.l1[&(a, f)]
        }
    }

    fn rtensor1(&self, f: Cell1, b: Obj) -> Cell1 {
        if b == self.unit {
            f
        } else {
            self.r1[&(f, b)]
        }
    }

    fn ltensor2(&self, a: Obj, x: Cell2) -> Cell2 {
        if a == self.unit {
            x
        } else {
            self.l2[&(a, x)]
        }
    }

    fn rtensor2(&self, x: Cell2, b: Obj) -> Cell2 {
        if b == self.unit {
            x
        } else {
            self.r2[&(x, b)]
        }
    }

    fn phi(&self, f: Cell1, g: Cell1) -> Cell2 {
        self.phi[&(f, g)].0
    }

    fn phi_inv(&self, f: Cell1, g: Cell1) -> Cell2 {
        self.phi[&(f, g)].1
    }

    fn beta(&self, a: Obj, b: Obj) -> Cell1 {
        self.beta[&(a, b)]
    }

    fn obj_name(&self, a: Obj) -> String {
        self.objects[a.0 as usize].clone()
    }

    fn cell1_name(&self, f: Cell1) -> String {
        self.cells1[f.0 as usize].name.clone()
    }

    fn cell2_name(&self, a: Cell2) -> String {
        self.cells2[a.0 as usize].name.clone()
    }

    fn cell2_label(&self, a: Cell2) -> String {
        let c = &self.cells2[a.0 as usize];
        c.label.clone().unwrap_or_else(|| c.name.clone())
    }

    fn parse_obj(&self, s: &str) -> Option<Obj> {
        self.objects.iter().position(|n| n == s).map(|i| Obj(i as u32))
    }

    fn parse_cell1(&self, s: &str) -> Option<Cell1> {
        self.cells1.iter().position(|c| c.name == s).map(|i| Cell1(i as u32))
    }

    fn parse_cell2(&self, s: &str) -> Option<Cell2> {
        self.cells2.iter().position(|c| c.name == s).map(|i| Cell2(i as u32))
    }
}
