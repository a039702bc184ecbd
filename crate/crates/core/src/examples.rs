//! The shipped models: the Picard category P of ℤ/2-graded lines and its
//! delooping, and the truncated sphere model Q in two variants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::table::{Cell1Entry, Cell2Entry, ObjectsSection, PhiEntry, TableError, WhiskerSection};
use crate::model::{Cell1, Cell2, Model, ModelFile, Obj, TableModel};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error("malformed monoidal category tables: {0}")]
    MalformedTables(String),
    #[error("expected a model with exactly one object, found {0}")]
    NotOneObject(usize),
    #[error("window must be at least 1, got {0}")]
    BadWindow(i64),
    #[error("unknown variant `{0}` (expected literal or braid-trivial)")]
    UnknownVariant(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub label: Option<String>,
    pub dom: String,
    pub cod: String,
    pub inverse: Option<String>,
}

/// A symmetric monoidal category given by total tables. Composition is
/// diagrammatic: `compose[(f, g)]` is `g ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmcTables {
    pub name: String,
    pub objects: Vec<String>,
    pub unit: String,
    pub tensor: BTreeMap<(String, String), String>,
    pub morphisms: Vec<Morphism>,
    pub identity: BTreeMap<String, String>,
    pub compose: BTreeMap<(String, String), String>,
    /// `A ⊗ f`
    pub left: BTreeMap<(String, String), String>,
    /// `f ⊗ A`
    pub right: BTreeMap<(String, String), String>,
    /// `σ_{A,B}: A⊗B → B⊗A`
    pub braiding: BTreeMap<(String, String), String>,
}

fn key(a: &str, b: &str) -> (String, String) {
    (a.to_string(), b.to_string())
}

/// P: objects 0, 1 under addition mod 2, each with automorphisms ±I, and
/// the Koszul symmetry `b_{1,1} = −I`.
pub fn picard() -> SmcTables {
    let objs = ["0", "1"];
    let mut s = SmcTables {
        name: "P".into(),
        objects: objs.iter().map(|o| o.to_string()).collect(),
        unit: "0".into(),
        tensor: BTreeMap::new(),
        morphisms: Vec::new(),
        identity: BTreeMap::new(),
        compose: BTreeMap::new(),
        left: BTreeMap::new(),
        right: BTreeMap::new(),
        braiding: BTreeMap::new(),
    };
    let sign = |neg: bool| if neg { "-I" } else { "I" };
    let mor = |neg: bool, o: usize| format!("{}@{}", sign(neg), o);
    for (i, &o) in objs.iter().enumerate() {
        s.identity.insert(o.into(), mor(false, i));
        for neg in [false, true] {
            s.morphisms.push(Morphism {
                name: mor(neg, i),
                label: Some(sign(neg).into()),
                dom: o.into(),
                cod: o.into(),
                inverse: neg.then(|| mor(true, i)),
            });
        }
        for (j, &p) in objs.iter().enumerate() {
            s.tensor.insert(key(o, p), objs[i ^ j].into());
            s.braiding.insert(key(o, p), mor(i == 1 && j == 1, i ^ j));
            for n in [false, true] {
                s.left.insert(key(o, &mor(n, j)), mor(n, i ^ j));
                s.right.insert(key(&mor(n, j), o), mor(n, i ^ j));
            }
        }
        for a in [false, true] {
            for b in [false, true] {
                s.compose.insert(key(&mor(a, i), &mor(b, i)), mor(a ^ b, i));
            }
        }
    }
    s
}

/// The one-object, one-morphism symmetric monoidal category.
pub fn trivial_smc() -> SmcTables {
    let one = |x: &str| x.to_string();
    SmcTables {
        name: "trivial".into(),
        objects: vec![one("u")],
        unit: one("u"),
        tensor: [(key("u", "u"), one("u"))].into(),
        morphisms: vec![Morphism { name: one("id@u"), label: None, dom: one("u"), cod: one("u"), inverse: None }],
        identity: [(one("u"), one("id@u"))].into(),
        compose: [(key("id@u", "id@u"), one("id@u"))].into(),
        left: [(key("u", "id@u"), one("id@u"))].into(),
        right: [(key("id@u", "u"), one("id@u"))].into(),
        braiding: [(key("u", "u"), one("id@u"))].into(),
    }
}

/// The one-object monoidal 2-category whose 1-cells are the objects of `s`
/// composed by `⊗`, with interchangor `φ_{f,g} = σ_{g,f}`.
pub fn deloop(s: &SmcTables) -> Result<TableModel, ExampleError> {
    let bad = |what: String| ExampleError::MalformedTables(what);
    let look = |t: &BTreeMap<(String, String), String>, what: &str, a: &str, b: &str| {
        t.get(&key(a, b)).cloned().ok_or_else(|| bad(format!("{what} has no entry for ({a}, {b})")))
    };
    let star = "*".to_string();
    let mut f = ModelFile {
        kind: "table".into(),
        name: format!("deloop({})", s.name),
        objects: Some(ObjectsSection { names: vec![star.clone()], unit: star.clone(), tensor: Vec::new() }),
        beta: vec![[star.clone(), star.clone(), s.unit.clone()]],
        whisker: Some(WhiskerSection::default()),
        ..ModelFile::default()
    };
    for a in &s.objects {
        f.cells1.push(Cell1Entry { name: a.clone(), dom: star.clone(), cod: star.clone(), identity: *a == s.unit });
        for b in &s.objects {
            f.compose1.push([a.clone(), b.clone(), look(&s.tensor, "tensor", a, b)?]);
            f.phi.push(PhiEntry {
                f: a.clone(),
                g: b.clone(),
                cell: look(&s.braiding, "braiding", b, a)?,
                inverse: look(&s.braiding, "braiding", a, b)?,
            });
        }
    }
    let w = f.whisker.as_mut().unwrap();
    for m in &s.morphisms {
        let is_id = s.identity.get(&m.dom) == Some(&m.name);
        f.cells2.push(Cell2Entry {
            name: m.name.clone(),
            label: m.label.clone(),
            src: m.dom.clone(),
            tgt: m.cod.clone(),
            identity: is_id,
            inverse: m.inverse.clone(),
        });
        for n in &s.morphisms {
            if m.cod == n.dom {
                f.compose2.push([m.name.clone(), n.name.clone(), look(&s.compose, "compose", &m.name, &n.name)?]);
            }
        }
        for a in &s.objects {
            w.pre.push([a.clone(), m.name.clone(), look(&s.left, "left", a, &m.name)?]);
            w.post.push([m.name.clone(), a.clone(), look(&s.right, "right", &m.name, a)?]);
        }
    }
    Ok(TableModel::from_file(&f)?)
}

/// The symmetric monoidal category of a one-object model, with
/// `σ_{A,B} = φ_{B,A}`.
pub fn loop_smc(m: &dyn Model) -> Result<SmcTables, ExampleError> {
    let objs = m.objects();
    if objs.len() != 1 {
        return Err(ExampleError::NotOneObject(objs.len()));
    }
    let star = objs[0];
    let c1 = m.hom(star, star);
    let c2 = m.cells2();
    let n1 = |f: Cell1| m.cell1_name(f);
    let n2 = |x: Cell2| m.cell2_name(x);
    let undefined = |what: String| ExampleError::MalformedTables(what);
    let mut s = SmcTables {
        name: m.name().strip_prefix("deloop(").and_then(|n| n.strip_suffix(')')).unwrap_or(&m.name()).to_string(),
        objects: c1.iter().map(|&f| n1(f)).collect(),
        unit: n1(m.id1(star)),
        tensor: BTreeMap::new(),
        morphisms: Vec::new(),
        identity: c1.iter().map(|&f| (n1(f), n2(m.id2(f)))).collect(),
        compose: BTreeMap::new(),
        left: BTreeMap::new(),
        right: BTreeMap::new(),
        braiding: BTreeMap::new(),
    };
    for &a in &c1 {
        for &b in &c1 {
            let ab = m.then1(a, b).ok_or_else(|| undefined(format!("{} then {}", n1(a), n1(b))))?;
            s.tensor.insert((n1(a), n1(b)), n1(ab));
            s.braiding.insert((n1(a), n1(b)), n2(m.phi(b, a)));
        }
    }
    for &x in &c2 {
        s.morphisms.push(Morphism {
            name: n2(x),
            label: Some(m.cell2_label(x)).filter(|l| *l != n2(x)),
            dom: n1(m.src(x)),
            cod: n1(m.tgt(x)),
            inverse: if m.is_id2(x) { None } else { m.inverse(x).map(n2) },
        });
        for &y in &c2 {
            if let Some(z) = m.then2(x, y) {
                s.compose.insert((n2(x), n2(y)), n2(z));
            }
        }
        for &a in &c1 {
            let l = m.whisker(a, x, m.id1(star)).ok_or_else(|| undefined(format!("{} after {}", n2(x), n1(a))))?;
            let r = m.whisker(m.id1(star), x, a).ok_or_else(|| undefined(format!("{} before {}", n2(x), n1(a))))?;
            s.left.insert((n1(a), n2(x)), n2(l));
            s.right.insert((n2(x), n1(a)), n2(r));
        }
    }
    Ok(s)
}

/// The delooped Picard category.
pub fn deloop_p() -> TableModel {
    deloop(&picard()).expect("the Picard tables are total")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `φ_{(m,i),(n,j)} = b_{i,j}` everywhere.
    Literal,
    /// As literal, except `φ` is the identity when an argument has the
    /// degree of a braiding on its object.
    BraidTrivial,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Literal => "literal",
            Variant::BraidTrivial => "braid-trivial",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = ExampleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "literal" => Ok(Variant::Literal),
            "braid-trivial" | "braid-trivial-phi" => Ok(Variant::BraidTrivial),
            _ => Err(ExampleError::UnknownVariant(s.into())),
        }
    }
}

/// Q: objects ℤ under addition, `hom(m, m) = P`, no other 1-cells, and
/// `β_{m,n} = (m+n, m+n mod 2)`. The 1-cell `(m, i)` is written `m:i`; the
/// 2-cells on it are `I@m:i` and `-I@m:i`. Checkers see the objects
/// `[−window, window]`; every other integer is still a valid object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SphereQ {
    pub window: i64,
    pub variant: Variant,
}

fn zig(m: i64) -> u32 {
    if m >= 0 {
        (2 * m) as u32
    } else {
        (-2 * m - 1) as u32
    }
}

fn zag(z: u32) -> i64 {
    let z = z as i64;
    if z % 2 == 0 {
        z / 2
    } else {
        -(z + 1) / 2
    }
}

impl SphereQ {
    pub fn new(window: i64, variant: Variant) -> Result<Self, ExampleError> {
        if window < 1 {
            return Err(ExampleError::BadWindow(window));
        }
        Ok(SphereQ { window, variant })
    }

    pub fn obj(m: i64) -> Obj {
        Obj(zig(m))
    }

    pub fn int(a: Obj) -> i64 {
        zag(a.0)
    }

    pub fn cell1(m: i64, deg: u32) -> Cell1 {
        Cell1(zig(m) * 2 + (deg & 1))
    }

    /// `(object, degree)`
    pub fn parts1(f: Cell1) -> (i64, u32) {
        (zag(f.0 / 2), f.0 % 2)
    }

    pub fn cell2(f: Cell1, negative: bool) -> Cell2 {
        Cell2(f.0 * 2 + negative as u32)
    }

    /// `(1-cell, is −I)`
    pub fn parts2(x: Cell2) -> (Cell1, bool) {
        (Cell1(x.0 / 2), x.0 % 2 == 1)
    }

    fn sign(&self, f: Cell1, g: Cell1) -> bool {
        let ((m, i), (n, j)) = (Self::parts1(f), Self::parts1(g));
        let braid_like = |o: i64, d: u32| o.rem_euclid(2) as u32 == d;
        match self.variant {
            Variant::Literal => i == 1 && j == 1,
            Variant::BraidTrivial => i == 1 && j == 1 && !braid_like(m, i) && !braid_like(n, j),
        }
    }

    pub fn to_file(&self) -> ModelFile {
        ModelFile {
            kind: "sphere-q".into(),
            name: self.name(),
            window: Some(self.window),
            variant: Some(self.variant.as_str().into()),
            ..ModelFile::default()
        }
    }

    pub fn from_file(f: &ModelFile) -> Result<Self, ExampleError> {
        if f.kind != "sphere-q" {
            return Err(TableError::UnknownKind(f.kind.clone()).into());
        }
        let variant = f.variant.as_deref().unwrap_or("literal").parse()?;
        SphereQ::new(f.window.unwrap_or(2), variant)
    }
}

impl Model for SphereQ {
    fn name(&self) -> String {
        format!("Q[{}, window {}]", self.variant, self.window)
    }
    fn objects(&self) -> Vec<Obj> {
        (-self.window..=self.window).map(Self::obj).collect()
    }
    fn unit(&self) -> Obj {
        Self::obj(0)
    }
    fn tensor(&self, a: Obj, b: Obj) -> Obj {
        Self::obj(Self::int(a) + Self::int(b))
    }
    fn hom(&self, a: Obj, b: Obj) -> Vec<Cell1> {
        if a != b {
            return Vec::new();
        }
        let m = Self::int(a);
        vec![Self::cell1(m, 0), Self::cell1(m, 1)]
    }
    fn dom(&self, f: Cell1) -> Obj {
        Self::obj(Self::parts1(f).0)
    }
    fn cod(&self, f: Cell1) -> Obj {
        self.dom(f)
    }
    fn id1(&self, a: Obj) -> Cell1 {
        Self::cell1(Self::int(a), 0)
    }
    fn then1(&self, f: Cell1, g: Cell1) -> Option<Cell1> {
        let ((m, i), (n, j)) = (Self::parts1(f), Self::parts1(g));
        (m == n).then(|| Self::cell1(m, i ^ j))
    }
    fn hom2(&self, f: Cell1, g: Cell1) -> Vec<Cell2> {
        if f != g {
            return Vec::new();
        }
        vec![Self::cell2(f, false), Self::cell2(f, true)]
    }
    fn src(&self, a: Cell2) -> Cell1 {
        Self::parts2(a).0
    }
    fn tgt(&self, a: Cell2) -> Cell1 {
        Self::parts2(a).0
    }
    fn id2(&self, f: Cell1) -> Cell2 {
        Self::cell2(f, false)
    }
    fn then2(&self, a: Cell2, b: Cell2) -> Option<Cell2> {
        let ((f, s), (g, t)) = (Self::parts2(a), Self::parts2(b));
        (f == g).then(|| Self::cell2(f, s ^ t))
    }
    fn inverse(&self, a: Cell2) -> Option<Cell2> {
        Some(a)
    }
    fn whisker(&self, below: Cell1, a: Cell2, above: Cell1) -> Option<Cell2> {
        let (f, s) = Self::parts2(a);
        let h = self.then1(below, f)?;
        Some(Self::cell2(self.then1(h, above)?, s))
    }
    fn ltensor1(&self, a: Obj, f: Cell1) -> Cell1 {
        let (m, i) = Self::parts1(f);
        Self::cell1(Self::int(a) + m, i)
    }
    fn rtensor1(&self, f: Cell1, b: Obj) -> Cell1 {
        self.ltensor1(b, f)
    }
    fn ltensor2(&self, a: Obj, x: Cell2) -> Cell2 {
        let (f, s) = Self::parts2(x);
        Self::cell2(self.ltensor1(a, f), s)
    }
    fn rtensor2(&self, x: Cell2, b: Obj) -> Cell2 {
        self.ltensor2(b, x)
    }
    fn phi(&self, f: Cell1, g: Cell1) -> Cell2 {
        let src = self.then1(self.ltensor1(self.dom(f), g), self.rtensor1(f, self.cod(g))).expect("endomorphisms compose");
        Self::cell2(src, self.sign(f, g))
    }
    fn beta(&self, a: Obj, b: Obj) -> Cell1 {
        let s = Self::int(a) + Self::int(b);
        Self::cell1(s, s.rem_euclid(2) as u32)
    }
    fn obj_name(&self, a: Obj) -> String {
        Self::int(a).to_string()
    }
    fn cell1_name(&self, f: Cell1) -> String {
        let (m, i) = Self::parts1(f);
        format!("{m}:{i}")
    }
    fn cell2_name(&self, a: Cell2) -> String {
        format!("{}@{}", self.cell2_label(a), self.cell1_name(Self::parts2(a).0))
    }
    fn cell2_label(&self, a: Cell2) -> String {
        if Self::parts2(a).1 { "-I" } else { "I" }.into()
    }
    fn parse_obj(&self, s: &str) -> Option<Obj> {
        s.trim().parse().ok().map(Self::obj)
    }
    fn parse_cell1(&self, s: &str) -> Option<Cell1> {
        let (m, i) = s.trim().split_once(':')?;
        let i: u32 = i.parse().ok()?;
        (i < 2).then_some(())?;
        Some(Self::cell1(m.parse().ok()?, i))
    }
    fn parse_cell2(&self, s: &str) -> Option<Cell2> {
        let (sign, f) = s.trim().split_once('@')?;
        let neg = match sign {
            "I" => false,
            "-I" => true,
            _ => return None,
        };
        Some(Self::cell2(self.parse_cell1(f)?, neg))
    }
}

/// Loads a model file of either kind.
pub fn load(f: &ModelFile) -> Result<Box<dyn Model>, ExampleError> {
    match f.kind.as_str() {
        "table" => Ok(Box::new(TableModel::from_file(f)?)),
        "sphere-q" => Ok(Box::new(SphereQ::from_file(f)?)),
        other => Err(TableError::UnknownKind(other.into()).into()),
    }
}
