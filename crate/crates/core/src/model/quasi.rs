//! Passage between stringent and quasistrict data. The quasistrict side
//! carries the layer-merging cells Φ and the braiding naturality cells
//! β_{f,g}; both are computed by evaluating canonical scripts.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::twocell::{build_beta_fg, build_phi, TwoCellError};

use super::check::{check_stringent, check_symmetric};
use super::{eval2, Cell1, Cell2, Model, ModelError, Obj, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuasiError {
    #[error("the model fails axioms required for the conversion: {}", .0.join(", "))]
    PrereqFailed(Vec<String>),
    #[error("building {what}: {source}")]
    Script { what: String, source: TwoCellError },
    #[error("evaluating {what}: {source}")]
    Eval { what: String, source: ModelError },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasistrictData {
    /// `Φ_{(f′,g′),(f,g)}: (f′ ⊗ g′) ∘ (f ⊗ g) ⇒ (f′∘f) ⊗ (g′∘g)`, keyed `(f′, g′, f, g)`.
    pub big_phi: BTreeMap<(Cell1, Cell1, Cell1, Cell1), Cell2>,
    /// `β_{f,g}: (g ⊗ f) ∘ β_{A,B} ⇒ β_{A′,B′} ∘ (f ⊗ g)`.
    pub beta2: BTreeMap<(Cell1, Cell1), Cell2>,
    /// `None` where the underlying equation fails strictly.
    pub sigma: BTreeMap<(Obj, Obj), Option<Cell2>>,
    pub r: BTreeMap<(Obj, Obj, Obj), Option<Cell2>>,
    pub s: BTreeMap<(Obj, Obj, Obj), Option<Cell2>>,
}

/// Derives quasistrict data from a stringent model. Unless `force` is set,
/// the stringent and symmetric axioms must hold first.
pub fn to_quasistrict(m: &dyn Model, force: bool) -> Result<QuasistrictData, QuasiError> {
    if !force {
        let rep = check_stringent(m).merge(check_symmetric(m));
        if !rep.passed() {
            return Err(QuasiError::PrereqFailed(rep.failing().into_iter().map(String::from).collect()));
        }
    }
    let p = Presentation::of(m);
    let objs = m.objects();
    let c1 = m.cells1();
    let mut q = QuasistrictData::default();

    let pairs: Vec<(Cell1, Cell1)> =
        c1.iter().flat_map(|&f| c1.iter().map(move |&g| (f, g))).filter(|&(f, g)| m.cod(f) == m.dom(g)).collect();
    for &(f, fp) in &pairs {
        for &(g, gp) in &pairs {
            let what = || {
                format!("Φ for f={} f′={} g={} g′={}", m.cell1_name(f), m.cell1_name(fp), m.cell1_name(g), m.cell1_name(gp))
            };
            let s = build_phi(p.diagram(fp), p.diagram(gp), p.diagram(f), p.diagram(g))
                .map_err(|source| QuasiError::Script { what: what(), source })?;
            let v = eval2(m, &p.asg, &s).map_err(|source| QuasiError::Eval { what: what(), source })?;
            q.big_phi.insert((fp, gp, f, g), v);
        }
    }

    for &f in &c1 {
        for &g in &c1 {
            let what = || format!("β for f={} g={}", m.cell1_name(f), m.cell1_name(g));
            let s = build_beta_fg(p.diagram(f), p.diagram(g)).map_err(|source| QuasiError::Script { what: what(), source })?;
            let v = eval2(m, &p.asg, &s).map_err(|source| QuasiError::Eval { what: what(), source })?;
            q.beta2.insert((f, g), v);
        }
    }

    for &a in &objs {
        for &b in &objs {
            let ab = m.tensor(a, b);
            let holds = m.then1(m.beta(a, b), m.beta(b, a)) == Some(m.id1(ab));
            q.sigma.insert((a, b), holds.then(|| m.id2(m.id1(ab))));
            for &c in &objs {
                let lhs = m.beta(ab, c);
                let rhs = m.then1(m.ltensor1(a, m.beta(b, c)), m.rtensor1(m.beta(a, c), b));
                q.r.insert((a, b, c), (rhs == Some(lhs)).then(|| m.id2(lhs)));
                let lhs = m.beta(a, m.tensor(b, c));
                let rhs = m.then1(m.rtensor1(m.beta(a, b), c), m.ltensor1(b, m.beta(a, c)));
                q.s.insert((a, b, c), (rhs == Some(lhs)).then(|| m.id2(lhs)));
            }
        }
    }
    Ok(q)
}

/// A stringent model whose interchangor is read off quasistrict data as
/// `φ_{f,g} = Φ_{(f, id), (id, g)}`.
pub struct DerivedModel<'a> {
    pub base: &'a dyn Model,
    pub data: &'a QuasistrictData,
}

pub fn from_quasistrict<'a>(base: &'a dyn Model, data: &'a QuasistrictData) -> DerivedModel<'a> {
    DerivedModel { base, data }
}

impl Model for DerivedModel<'_> {
    fn name(&self) -> String {
        format!("{} (from quasistrict data)", self.base.name())
    }
    fn objects(&self) -> Vec<Obj> {
        self.base.objects()
    }
    fn unit(&self) -> Obj {
        self.base.unit()
    }
    fn tensor(&self, a: Obj, b: Obj) -> Obj {
        self.base.tensor(a, b)
    }
    fn hom(&self, a: Obj, b: Obj) -> Vec<Cell1> {
        self.base.hom(a, b)
    }
    fn dom(&self, f: Cell1) -> Obj {
        self.base.dom(f)
    }
    fn cod(&self, f: Cell1) -> Obj {
        self.base.cod(f)
    }
    fn id1(&self, a: Obj) -> Cell1 {
        self.base.id1(a)
    }
    fn then1(&self, f: Cell1, g: Cell1) -> Option<Cell1> {
        self.base.then1(f, g)
    }
    fn hom2(&self, f: Cell1, g: Cell1) -> Vec<Cell2> {
        self.base.hom2(f, g)
    }
    fn src(&self, a: Cell2) -> Cell1 {
        self.base.src(a)
    }
    fn tgt(&self, a: Cell2) -> Cell1 {
        self.base.tgt(a)
    }
    fn id2(&self, f: Cell1) -> Cell2 {
        self.base.id2(f)
    }
    fn then2(&self, a: Cell2, b: Cell2) -> Option<Cell2> {
        self.base.then2(a, b)
    }
    fn inverse(&self, a: Cell2) -> Option<Cell2> {
        self.base.inverse(a)
    }
    fn whisker(&self, below: Cell1, a: Cell2, above: Cell1) -> Option<Cell2> {
        self.base.whisker(below, a, above)
    }
    fn ltensor1(&self, a: Obj, f: Cell1) -> Cell1 {
        self.base.ltensor1(a, f)
    }
    fn rtensor1(&self, f: Cell1, b: Obj) -> Cell1 {
        self.base.rtensor1(f, b)
    }
    fn ltensor2(&self, a: Obj, x: Cell2) -> Cell2 {
        self.base.ltensor2(a, x)
    }
    fn rtensor2(&self, x: Cell2, b: Obj) -> Cell2 {
        self.base.rtensor2(x, b)
    }
    fn phi(&self, f: Cell1, g: Cell1) -> Cell2 {
        let key = (f, self.id1(self.cod(g)), self.id1(self.dom(f)), g);
        self.data.big_phi.get(&key).copied().unwrap_or_else(|| self.base.phi(f, g))
    }
    fn beta(&self, a: Obj, b: Obj) -> Cell1 {
        self.base.beta(a, b)
    }
    fn obj_name(&self, a: Obj) -> String {
        self.base.obj_name(a)
    }
    fn cell1_name(&self, f: Cell1) -> String {
        self.base.cell1_name(f)
    }
    fn cell2_name(&self, a: Cell2) -> String {
        self.base.cell2_name(a)
    }
    fn cell2_label(&self, a: Cell2) -> String {
        self.base.cell2_label(a)
    }
    fn parse_obj(&self, s: &str) -> Option<Obj> {
        self.base.parse_obj(s)
    }
    fn parse_cell1(&self, s: &str) -> Option<Cell1> {
        self.base.parse_cell1(s)
    }
    fn parse_cell2(&self, s: &str) -> Option<Cell2> {
        self.base.parse_cell2(s)
    }
    fn cells1(&self) -> Vec<Cell1> {
        self.base.cells1()
    }
    fn cells2(&self) -> Vec<Cell2> {
        self.base.cells2()
    }
}
