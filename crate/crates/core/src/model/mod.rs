//! Concrete stringent symmetric monoidal 2-categories and evaluation of
//! diagrams and scripts in them.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{Diagram, Slice, SliceBody};
use crate::signature::{Name, Word};
use crate::twocell::{interchange_site, Cell, Script, TwoCellError};

pub mod check;
pub mod present;
pub mod quasi;
pub mod table;

pub use check::{check_quasistrict, check_stringent, check_symmetric, AxiomResult, Report, Status, Witness};
pub use present::Presentation;
pub use quasi::{from_quasistrict, to_quasistrict, DerivedModel, QuasistrictData};
pub use table::{ModelFile, TableModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell1(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell2(pub u32);

/// A stringent symmetric monoidal 2-category with decidable equality on
/// handles. Composites return `None` when the arguments do not compose.
pub trait Model {
    fn name(&self) -> String;
    /// The objects enumerated by the checkers.
    fn objects(&self) -> Vec<Obj>;
    fn unit(&self) -> Obj;
    fn tensor(&self, a: Obj, b: Obj) -> Obj;

    fn hom(&self, a: Obj, b: Obj) -> Vec<Cell1>;
    fn dom(&self, f: Cell1) -> Obj;
    fn cod(&self, f: Cell1) -> Obj;
    fn id1(&self, a: Obj) -> Cell1;
    /// `f` then `g`.
    fn then1(&self, f: Cell1, g: Cell1) -> Option<Cell1>;

    fn hom2(&self, f: Cell1, g: Cell1) -> Vec<Cell2>;
    fn src(&self, a: Cell2) -> Cell1;
    fn tgt(&self, a: Cell2) -> Cell1;
    fn id2(&self, f: Cell1) -> Cell2;
    /// `a` then `b`.
    fn then2(&self, a: Cell2, b: Cell2) -> Option<Cell2>;
    fn inverse(&self, a: Cell2) -> Option<Cell2>;
    /// `id_above ∘ a ∘ id_below`.
    fn whisker(&self, below: Cell1, a: Cell2, above: Cell1) -> Option<Cell2>;

    fn ltensor1(&self, a: Obj, f: Cell1) -> Cell1;
    fn rtensor1(&self, f: Cell1, b: Obj) -> Cell1;
    fn ltensor2(&self, a: Obj, x: Cell2) -> Cell2;
    fn rtensor2(&self, x: Cell2, b: Obj) -> Cell2;

    /// `φ_{f,g}: (f ⊗ id) ∘ (id ⊗ g) ⇒ (id ⊗ g) ∘ (f ⊗ id)`.
    fn phi(&self, f: Cell1, g: Cell1) -> Cell2;
    fn phi_inv(&self, f: Cell1, g: Cell1) -> Cell2 {
        self.inverse(self.phi(f, g)).expect("interchangors are invertible")
    }
    fn beta(&self, a: Obj, b: Obj) -> Cell1;

    fn obj_name(&self, a: Obj) -> String;
    fn cell1_name(&self, f: Cell1) -> String;
    fn cell2_name(&self, a: Cell2) -> String;
    /// Short display form; need not be unique.
    fn cell2_label(&self, a: Cell2) -> String {
        self.cell2_name(a)
    }
    fn parse_obj(&self, s: &str) -> Option<Obj>;
    fn parse_cell1(&self, s: &str) -> Option<Cell1>;
    fn parse_cell2(&self, s: &str) -> Option<Cell2>;

    /// Every 1-cell between enumerated objects.
    fn cells1(&self) -> Vec<Cell1> {
        let objs = self.objects();
        let mut out = Vec::new();
        for &a in &objs {
            for &b in &objs {
                out.extend(self.hom(a, b));
            }
        }
        out
    }

    /// Every 2-cell between enumerated 1-cells.
    fn cells2(&self) -> Vec<Cell2> {
        let objs = self.objects();
        let mut out = Vec::new();
        for &a in &objs {
            for &b in &objs {
                let h = self.hom(a, b);
                for &f in &h {
                    for &g in &h {
                        out.extend(self.hom2(f, g));
                    }
                }
            }
        }
        out
    }

    fn is_id1(&self, f: Cell1) -> bool {
        f == self.id1(self.dom(f))
    }

    fn is_id2(&self, a: Cell2) -> bool {
        a == self.id2(self.src(a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("generator `{0}` has no value in the model")]
    UnassignedGenerator(Name),
    #[error("`{name}` is assigned a value of the wrong type: {reason}")]
    IllTyped { name: Name, reason: String },
    #[error("composite undefined in the model: {0}")]
    Undefined(String),
    #[error("structural move {index} changes the evaluated 1-cell ({before} vs {after})")]
    UnsoundMove { index: usize, before: String, after: String },
    #[error(transparent)]
    Script(#[from] TwoCellError),
    #[error("{0}")]
    Unsupported(String),
}

/// Values of signature generators in a model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub objects: BTreeMap<Name, Obj>,
    pub gens1: BTreeMap<Name, Cell1>,
    pub gens2: BTreeMap<Name, Cell2>,
}

impl Assignment {
    pub fn is_empty(&self) -> bool {
        self.objects.is_empty() && self.gens1.is_empty() && self.gens2.is_empty()
    }
}

pub fn eval_word(m: &dyn Model, asg: &Assignment, w: &Word) -> Result<Obj, ModelError> {
    let mut acc = m.unit();
    for l in w.letters() {
        let o = *asg.objects.get(l).ok_or_else(|| ModelError::UnassignedGenerator(l.clone()))?;
        acc = m.tensor(acc, o);
    }
    Ok(acc)
}

/// The value of a slice body, before whiskering.
pub fn eval_body(m: &dyn Model, asg: &Assignment, b: &SliceBody) -> Result<Cell1, ModelError> {
    match b {
        SliceBody::Gen { id, dom, cod } => {
            let f = *asg.gens1.get(id).ok_or_else(|| ModelError::UnassignedGenerator(id.clone()))?;
            let (a, b) = (eval_word(m, asg, dom)?, eval_word(m, asg, cod)?);
            if m.dom(f) != a || m.cod(f) != b {
                return Err(ModelError::IllTyped {
                    name: id.clone(),
                    reason: format!(
                        "{} goes {} -> {}, expected {} -> {}",
                        m.cell1_name(f),
                        m.obj_name(m.dom(f)),
                        m.obj_name(m.cod(f)),
                        m.obj_name(a),
                        m.obj_name(b)
                    ),
                });
            }
            Ok(f)
        }
        SliceBody::Braid(x, y) => {
            let x = eval_word(m, asg, &Word::new(vec![x.clone()]))?;
            let y = eval_word(m, asg, &Word::new(vec![y.clone()]))?;
            Ok(m.beta(x, y))
        }
    }
}

/// "Tensor first, then compose": `L_left R_right (body)`.
pub fn eval_slice(m: &dyn Model, asg: &Assignment, s: &Slice) -> Result<Cell1, ModelError> {
    let body = eval_body(m, asg, &s.body)?;
    let l = eval_word(m, asg, &s.left)?;
    let r = eval_word(m, asg, &s.right)?;
    Ok(m.ltensor1(l, m.rtensor1(body, r)))
}

fn then1(m: &dyn Model, f: Cell1, g: Cell1) -> Result<Cell1, ModelError> {
    m.then1(f, g)
        .ok_or_else(|| ModelError::Undefined(format!("{} then {}", m.cell1_name(f), m.cell1_name(g))))
}

fn then2(m: &dyn Model, a: Cell2, b: Cell2) -> Result<Cell2, ModelError> {
    m.then2(a, b)
        .ok_or_else(|| ModelError::Undefined(format!("{} then {}", m.cell2_name(a), m.cell2_name(b))))
}

pub fn eval1(m: &dyn Model, asg: &Assignment, d: &Diagram) -> Result<Cell1, ModelError> {
    let mut acc = m.id1(eval_word(m, asg, &d.src)?);
    for s in d.slices() {
        acc = then1(m, acc, eval_slice(m, asg, s)?)?;
    }
    Ok(acc)
}

fn whiskered(m: &dyn Model, below: Cell1, x: Cell2, above: Cell1) -> Result<Cell2, ModelError> {
    m.whisker(below, x, above).ok_or_else(|| {
        ModelError::Undefined(format!(
            "whiskering {} by {} and {}",
            m.cell2_name(x),
            m.cell1_name(below),
            m.cell1_name(above)
        ))
    })
}

/// The value of cell `index` of a script, applied to `d`.
fn eval_cell(m: &dyn Model, asg: &Assignment, d: &Diagram, next: &Diagram, index: usize, c: &Cell) -> Result<Cell2, ModelError> {
    match c {
        Cell::StructMove(_) => {
            let (before, after) = (eval1(m, asg, d)?, eval1(m, asg, next)?);
            if before != after {
                return Err(ModelError::UnsoundMove { index, before: m.cell1_name(before), after: m.cell1_name(after) });
            }
            Ok(m.id2(before))
        }
        Cell::Interchange { at, back } => {
            let (site, _, _) = interchange_site(d, *at, *back)
                .map_err(|reason| TwoCellError::CellMisapplied { index, reason })?;
            let f = eval_body(m, asg, &site.f)?;
            let g = m.ltensor1(eval_word(m, asg, &site.gap)?, eval_body(m, asg, &site.g)?);
            let core = if *back { m.phi_inv(f, g) } else { m.phi(f, g) };
            let x = m.ltensor2(eval_word(m, asg, &site.left)?, m.rtensor2(core, eval_word(m, asg, &site.right)?));
            let below = eval1(m, asg, &d.section(0, *at))?;
            let above = eval1(m, asg, &d.section(at + 2, d.len()))?;
            whiskered(m, below, x, above)
        }
        Cell::GenCell { gen, at, left, right, back } => {
            let v = *asg.gens2.get(&gen.id).ok_or_else(|| ModelError::UnassignedGenerator(gen.id.clone()))?;
            let expected = (eval1(m, asg, &gen.src)?, eval1(m, asg, &gen.tgt)?);
            if (m.src(v), m.tgt(v)) != expected {
                return Err(ModelError::IllTyped {
                    name: gen.id.clone(),
                    reason: format!("{} does not match its declared endpoints", m.cell2_name(v)),
                });
            }
            let v = if *back {
                m.inverse(v).ok_or_else(|| ModelError::Undefined(format!("inverse of {}", m.cell2_name(v))))?
            } else {
                v
            };
            let x = m.ltensor2(eval_word(m, asg, left)?, m.rtensor2(v, eval_word(m, asg, right)?));
            let n = if *back { gen.tgt.len() } else { gen.src.len() };
            let below = eval1(m, asg, &d.section(0, *at))?;
            let above = eval1(m, asg, &d.section(at + n, d.len()))?;
            whiskered(m, below, x, above)
        }
    }
}

pub fn eval2(m: &dyn Model, asg: &Assignment, s: &Script) -> Result<Cell2, ModelError> {
    let traj = s.trajectory()?;
    let mut acc = m.id2(eval1(m, asg, &s.src)?);
    for (index, c) in s.cells.iter().enumerate() {
        let x = eval_cell(m, asg, &traj[index], &traj[index + 1], index, c)?;
        acc = then2(m, acc, x)?;
    }
    Ok(acc)
}

/// Displays a handle by name.
pub struct Shown<'a, T>(pub &'a dyn Model, pub T);

impl fmt::Display for Shown<'_, Obj> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.obj_name(self.1))
    }
}

impl fmt::Display for Shown<'_, Cell1> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.cell1_name(self.1))
    }
}

impl fmt::Display for Shown<'_, Cell2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.cell2_name(self.1))
    }
}
