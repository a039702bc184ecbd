//! Exhaustive axiom checkers. Every instance over the model's enumerated
//! carriers is evaluated; nothing is sampled.

use std::fmt;

use super::quasi::QuasistrictData;
use super::{Cell1, Cell2, Model, Obj};

const MAX_WITNESSES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

/// One failing instance, with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub id: String,
    pub statement: String,
    pub instances: usize,
    pub failures: usize,
    pub status: Status,
    /// The first failures, in enumeration order.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub model: String,
    pub objects: Vec<String>,
    pub results: Vec<AxiomResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.results.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect()
    }

    pub fn instances(&self) -> usize {
        self.results.iter().map(|r| r.instances).sum()
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.results.extend(other.results);
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {} over objects [{}]", self.model, self.objects.join(", "))?;
        for r in &self.results {
            writeln!(f, "{:<24} {:>6} instances  {}  {}", r.id, r.instances, r.status, r.statement)?;
            for w in &r.witnesses {
                writeln!(f, "    {}: {} vs {}", w.instance, w.lhs, w.rhs)?;
            }
            if r.failures > r.witnesses.len() {
                writeln!(f, "    ... {} more", r.failures - r.witnesses.len())?;
            }
        }
        writeln!(f, "{}", if self.passed() { "all axioms hold" } else { "some axioms fail" })
    }
}

struct Checker<'a> {
    m: &'a dyn Model,
    results: Vec<AxiomResult>,
}

impl<'a> Checker<'a> {
    fn new(m: &'a dyn Model) -> Self {
        Checker { m, results: Vec::new() }
    }

    fn axiom(&mut self, id: &str, statement: &str) -> &mut AxiomResult {
        self.results.push(AxiomResult {
            id: id.into(),
            statement: statement.into(),
            instances: 0,
            failures: 0,
            status: Status::Skip,
            witnesses: Vec::new(),
        });
        self.results.last_mut().unwrap()
    }

    fn report(self) -> Report {
        Report {
            model: self.m.name(),
            objects: self.m.objects().into_iter().map(|o| self.m.obj_name(o)).collect(),
            results: self.results,
        }
    }
}

impl AxiomResult {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if ok {
            if self.status == Status::Skip {
                self.status = Status::Pass;
            }
        } else {
            self.status = Status::Fail;
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

fn s1(m: &dyn Model, f: Option<Cell1>) -> String {
    f.map(|f| m.cell1_name(f)).unwrap_or_else(|| "undefined".into())
}

fn s2(m: &dyn Model, a: Option<Cell2>) -> String {
    a.map(|a| m.cell2_name(a)).unwrap_or_else(|| "undefined".into())
}

fn eq1(ax: &mut AxiomResult, m: &dyn Model, instance: impl FnOnce() -> String, l: Option<Cell1>, r: Option<Cell1>) {
    ax.record(l.is_some() && l == r, || Witness { instance: instance(), lhs: s1(m, l), rhs: s1(m, r) });
}

fn eq2(ax: &mut AxiomResult, m: &dyn Model, instance: impl FnOnce() -> String, l: Option<Cell2>, r: Option<Cell2>) {
    ax.record(l.is_some() && l == r, || Witness { instance: instance(), lhs: s2(m, l), rhs: s2(m, r) });
}

fn eqo(ax: &mut AxiomResult, m: &dyn Model, instance: impl FnOnce() -> String, l: Obj, r: Obj) {
    ax.record(l == r, || Witness { instance: instance(), lhs: m.obj_name(l), rhs: m.obj_name(r) });
}

/// The nudged tensor `f ⊗ g = (id_{A′} ⊗ g) ∘ (f ⊗ id_B)`.
pub fn tensor1(m: &dyn Model, f: Cell1, g: Cell1) -> Option<Cell1> {
    m.then1(m.rtensor1(f, m.dom(g)), m.ltensor1(m.cod(f), g))
}

fn composable(m: &dyn Model, cs: &[Cell1]) -> Vec<(Cell1, Cell1)> {
    let mut out = Vec::new();
    for &f in cs {
        for &g in cs {
            if m.cod(f) == m.dom(g) {
                out.push((f, g));
            }
        }
    }
    out
}

fn composable2(m: &dyn Model, cs: &[Cell2]) -> Vec<(Cell2, Cell2)> {
    let mut out = Vec::new();
    for &a in cs {
        for &b in cs {
            if m.tgt(a) == m.src(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Axioms of a stringent monoidal 2-category.
pub fn check_stringent(m: &dyn Model) -> Report {
    let objs = m.objects();
    let c1 = m.cells1();
    let c2 = m.cells2();
    let pairs1 = composable(m, &c1);
    let pairs2 = composable2(m, &c2);
    let on = |a: Obj| m.obj_name(a);
    let n1 = |f: Cell1| m.cell1_name(f);
    let n2 = |a: Cell2| m.cell2_name(a);
    let mut ck = Checker::new(m);

    let ax = ck.axiom("stringent.objects", "tensor of objects is associative and unital");
    for &a in &objs {
        eqo(ax, m, || format!("A={}", on(a)), m.tensor(m.unit(), a), a);
        eqo(ax, m, || format!("A={}", on(a)), m.tensor(a, m.unit()), a);
        for &b in &objs {
            for &c in &objs {
                eqo(ax, m, || format!("A={} B={} C={}", on(a), on(b), on(c)), m.tensor(m.tensor(a, b), c), m.tensor(a, m.tensor(b, c)));
            }
        }
    }

    let ax = ck.axiom("stringent.iii.typing", "L_A and R_A act on endpoints by tensoring");
    for &a in &objs {
        for &f in &c1 {
            let (l, r) = (m.ltensor1(a, f), m.rtensor1(f, a));
            let inst = || format!("A={} f={}", on(a), n1(f));
            eqo(ax, m, inst, m.dom(l), m.tensor(a, m.dom(f)));
            eqo(ax, m, inst, m.cod(l), m.tensor(a, m.cod(f)));
            eqo(ax, m, inst, m.dom(r), m.tensor(m.dom(f), a));
            eqo(ax, m, inst, m.cod(r), m.tensor(m.cod(f), a));
        }
        for &x in &c2 {
            let inst = || format!("A={} alpha={}", on(a), n2(x));
            eq1(ax, m, inst, Some(m.src(m.ltensor2(a, x))), Some(m.ltensor1(a, m.src(x))));
            eq1(ax, m, inst, Some(m.tgt(m.ltensor2(a, x))), Some(m.ltensor1(a, m.tgt(x))));
            eq1(ax, m, inst, Some(m.src(m.rtensor2(x, a))), Some(m.rtensor1(m.src(x), a)));
            eq1(ax, m, inst, Some(m.tgt(m.rtensor2(x, a))), Some(m.rtensor1(m.tgt(x), a)));
        }
    }

    let ax = ck.axiom("stringent.iii.functor", "L_A and R_A are strict 2-functors");
    for &a in &objs {
        for &b in &objs {
            let inst = || format!("A={} X={}", on(a), on(b));
            eq1(ax, m, inst, Some(m.ltensor1(a, m.id1(b))), Some(m.id1(m.tensor(a, b))));
            eq1(ax, m, inst, Some(m.rtensor1(m.id1(b), a)), Some(m.id1(m.tensor(b, a))));
        }
        for &(f, g) in &pairs1 {
            let inst = || format!("A={} f={} g={}", on(a), n1(f), n1(g));
            eq1(ax, m, inst, m.then1(f, g).map(|h| m.ltensor1(a, h)), m.then1(m.ltensor1(a, f), m.ltensor1(a, g)));
            eq1(ax, m, inst, m.then1(f, g).map(|h| m.rtensor1(h, a)), m.then1(m.rtensor1(f, a), m.rtensor1(g, a)));
        }
        for &f in &c1 {
            let inst = || format!("A={} f={}", on(a), n1(f));
            eq2(ax, m, inst, Some(m.ltensor2(a, m.id2(f))), Some(m.id2(m.ltensor1(a, f))));
            eq2(ax, m, inst, Some(m.rtensor2(m.id2(f), a)), Some(m.id2(m.rtensor1(f, a))));
        }
        for &(x, y) in &pairs2 {
            let inst = || format!("A={} alpha={} beta={}", on(a), n2(x), n2(y));
            eq2(ax, m, inst, m.then2(x, y).map(|z| m.ltensor2(a, z)), m.then2(m.ltensor2(a, x), m.ltensor2(a, y)));
            eq2(ax, m, inst, m.then2(x, y).map(|z| m.rtensor2(z, a)), m.then2(m.rtensor2(x, a), m.rtensor2(y, a)));
        }
        for &x in &c2 {
            let (f, g) = (m.src(x), m.tgt(x));
            for &h in &c1 {
                for &k in &c1 {
                    if m.cod(h) != m.dom(f) || m.dom(k) != m.cod(f) {
                        continue;
                    }
                    let _ = g;
                    let inst = || format!("A={} h={} alpha={} k={}", on(a), n1(h), n2(x), n1(k));
                    eq2(
                        ax,
                        m,
                        inst,
                        m.whisker(h, x, k).map(|z| m.ltensor2(a, z)),
                        m.whisker(m.ltensor1(a, h), m.ltensor2(a, x), m.ltensor1(a, k)),
                    );
                    eq2(
                        ax,
                        m,
                        inst,
                        m.whisker(h, x, k).map(|z| m.rtensor2(z, a)),
                        m.whisker(m.rtensor1(h, a), m.rtensor2(x, a), m.rtensor1(k, a)),
                    );
                }
            }
        }
    }

    let ax = ck.axiom("stringent.iii.compat", "L_A L_B = L_{A⊗B}, R_B R_A = R_{A⊗B}, L_A R_B = R_B L_A, L_1 = R_1 = id");
    for &f in &c1 {
        let inst = || format!("f={}", n1(f));
        eq1(ax, m, inst, Some(m.ltensor1(m.unit(), f)), Some(f));
        eq1(ax, m, inst, Some(m.rtensor1(f, m.unit())), Some(f));
    }
    for &x in &c2 {
        let inst = || format!("alpha={}", n2(x));
        eq2(ax, m, inst, Some(m.ltensor2(m.unit(), x)), Some(x));
        eq2(ax, m, inst, Some(m.rtensor2(x, m.unit())), Some(x));
    }
    for &a in &objs {
        for &b in &objs {
            let ab = m.tensor(a, b);
            for &f in &c1 {
                let inst = || format!("A={} B={} f={}", on(a), on(b), n1(f));
                eq1(ax, m, inst, Some(m.ltensor1(a, m.ltensor1(b, f))), Some(m.ltensor1(ab, f)));
                eq1(ax, m, inst, Some(m.rtensor1(m.rtensor1(f, a), b)), Some(m.rtensor1(f, ab)));
                eq1(ax, m, inst, Some(m.ltensor1(a, m.rtensor1(f, b))), Some(m.rtensor1(m.ltensor1(a, f), b)));
            }
            for &x in &c2 {
                let inst = || format!("A={} B={} alpha={}", on(a), on(b), n2(x));
                eq2(ax, m, inst, Some(m.ltensor2(a, m.ltensor2(b, x))), Some(m.ltensor2(ab, x)));
                eq2(ax, m, inst, Some(m.rtensor2(m.rtensor2(x, a), b)), Some(m.rtensor2(x, ab)));
                eq2(ax, m, inst, Some(m.ltensor2(a, m.rtensor2(x, b))), Some(m.rtensor2(m.ltensor2(a, x), b)));
            }
        }
    }

    let ax = ck.axiom("stringent.iv", "φ_{f,g} is a 2-isomorphism between the two nudgings");
    for &f in &c1 {
        for &g in &c1 {
            let (a, a2, b, b2) = (m.dom(f), m.cod(f), m.dom(g), m.cod(g));
            let p = m.phi(f, g);
            let q = m.phi_inv(f, g);
            let inst = || format!("f={} g={}", n1(f), n1(g));
            eq1(ax, m, inst, Some(m.src(p)), m.then1(m.ltensor1(a, g), m.rtensor1(f, b2)));
            eq1(ax, m, inst, Some(m.tgt(p)), m.then1(m.rtensor1(f, b), m.ltensor1(a2, g)));
            eq2(ax, m, inst, m.then2(p, q), Some(m.id2(m.src(p))));
            eq2(ax, m, inst, m.then2(q, p), Some(m.id2(m.tgt(p))));
        }
    }

    let ax = ck.axiom("stringent.v", "the nudged tensor of 1-cells is associative and unital");
    let unit_id = m.id1(m.unit());
    for &f in &c1 {
        let inst = || format!("f={}", n1(f));
        eq1(ax, m, inst, tensor1(m, f, unit_id), Some(f));
        eq1(ax, m, inst, tensor1(m, unit_id, f), Some(f));
        for &g in &c1 {
            for &h in &c1 {
                let inst = || format!("f={} g={} h={}", n1(f), n1(g), n1(h));
                let l = tensor1(m, f, g).and_then(|fg| tensor1(m, fg, h));
                let r = tensor1(m, g, h).and_then(|gh| tensor1(m, f, gh));
                eq1(ax, m, inst, l, r);
            }
        }
    }

    let ax = ck.axiom("stringent.vi.a", "φ_{id_A⊗g, h} = id_A ⊗ φ_{g,h}");
    for &a in &objs {
        for &g in &c1 {
            for &h in &c1 {
                let inst = || format!("A={} g={} h={}", on(a), n1(g), n1(h));
                eq2(ax, m, inst, Some(m.phi(m.ltensor1(a, g), h)), Some(m.ltensor2(a, m.phi(g, h))));
            }
        }
    }
    let ax = ck.axiom("stringent.vi.b", "φ_{f⊗id_B, h} = φ_{f, id_B⊗h}");
    for &b in &objs {
        for &f in &c1 {
            for &h in &c1 {
                let inst = || format!("B={} f={} h={}", on(b), n1(f), n1(h));
                eq2(ax, m, inst, Some(m.phi(m.rtensor1(f, b), h)), Some(m.phi(f, m.ltensor1(b, h))));
            }
        }
    }
    let ax = ck.axiom("stringent.vi.c", "φ_{f, g⊗id_C} = φ_{f,g} ⊗ id_C");
    for &c in &objs {
        for &f in &c1 {
            for &g in &c1 {
                let inst = || format!("C={} f={} g={}", on(c), n1(f), n1(g));
                eq2(ax, m, inst, Some(m.phi(f, m.rtensor1(g, c))), Some(m.rtensor2(m.phi(f, g), c)));
            }
        }
    }

    let ax = ck.axiom("stringent.vii", "φ_{f,id} = id and φ_{id,g} = id");
    for &f in &c1 {
        for &b in &objs {
            let inst = || format!("f={} B={}", n1(f), on(b));
            let p = m.phi(f, m.id1(b));
            eq2(ax, m, inst, Some(p), Some(m.id2(m.src(p))));
            let p = m.phi(m.id1(b), f);
            eq2(ax, m, inst, Some(p), Some(m.id2(m.src(p))));
        }
    }

    let ax = ck.axiom("stringent.viii.a", "φ is natural in its first argument");
    for &x in &c2 {
        let (f, fp) = (m.src(x), m.tgt(x));
        let (a, a2) = (m.dom(f), m.cod(f));
        for &g in &c1 {
            let (b, b2) = (m.dom(g), m.cod(g));
            let inst = || format!("alpha={} g={}", n2(x), n1(g));
            let l = m
                .whisker(m.ltensor1(a, g), m.rtensor2(x, b2), m.id1(m.tensor(a2, b2)))
                .and_then(|w| m.then2(w, m.phi(fp, g)));
            let r = m
                .whisker(m.id1(m.tensor(a, b)), m.rtensor2(x, b), m.ltensor1(a2, g))
                .and_then(|w| m.then2(m.phi(f, g), w));
            eq2(ax, m, inst, l, r);
        }
    }
    let ax = ck.axiom("stringent.viii.b", "φ is natural in its second argument");
    for &y in &c2 {
        let (g, gp) = (m.src(y), m.tgt(y));
        let (b, b2) = (m.dom(g), m.cod(g));
        for &f in &c1 {
            let (a, a2) = (m.dom(f), m.cod(f));
            let inst = || format!("f={} beta={}", n1(f), n2(y));
            let l = m
                .whisker(m.id1(m.tensor(a, b)), m.ltensor2(a, y), m.rtensor1(f, b2))
                .and_then(|w| m.then2(w, m.phi(f, gp)));
            let r = m
                .whisker(m.rtensor1(f, b), m.ltensor2(a2, y), m.id1(m.tensor(a2, b2)))
                .and_then(|w| m.then2(m.phi(f, g), w));
            eq2(ax, m, inst, l, r);
        }
    }

    let ax = ck.axiom("stringent.ix.a", "φ_{f, g′∘g} = (φ_{f,g} ⊗ g′) ∘ (g ⊗ φ_{f,g′})");
    for &f in &c1 {
        let (a, a2) = (m.dom(f), m.cod(f));
        for &(g, gp) in &pairs1 {
            let inst = || format!("f={} g={} g′={}", n1(f), n1(g), n1(gp));
            let l = m.then1(g, gp).map(|h| m.phi(f, h));
            let r = m.whisker(m.ltensor1(a, g), m.phi(f, gp), m.id1(m.tensor(a2, m.cod(gp)))).and_then(|x| {
                m.whisker(m.id1(m.tensor(a, m.dom(g))), m.phi(f, g), m.ltensor1(a2, gp)).and_then(|y| m.then2(x, y))
            });
            eq2(ax, m, inst, l, r);
        }
    }
    let ax = ck.axiom("stringent.ix.b", "φ_{f′∘f, g} = (φ_{f′,g} after f) ∘ (φ_{f,g} before f′)");
    for &g in &c1 {
        let (b, b2) = (m.dom(g), m.cod(g));
        for &(f, fp) in &pairs1 {
            let inst = || format!("f={} f′={} g={}", n1(f), n1(fp), n1(g));
            let l = m.then1(f, fp).map(|h| m.phi(h, g));
            let r = m.whisker(m.id1(m.tensor(m.dom(f), b)), m.phi(f, g), m.rtensor1(fp, b2)).and_then(|x| {
                m.whisker(m.rtensor1(f, b), m.phi(fp, g), m.id1(m.tensor(m.cod(fp), b2))).and_then(|y| m.then2(x, y))
            });
            eq2(ax, m, inst, l, r);
        }
    }

    ck.report()
}

/// Axioms (i)–(iv) of the symmetric structure.
pub fn check_symmetric(m: &dyn Model) -> Report {
    let objs = m.objects();
    let c1 = m.cells1();
    let on = |a: Obj| m.obj_name(a);
    let n1 = |f: Cell1| m.cell1_name(f);
    let mut ck = Checker::new(m);

    let ax = ck.axiom("symmetric.typing", "β_{A,B}: A⊗B → B⊗A");
    for &a in &objs {
        for &b in &objs {
            let inst = || format!("A={} B={}", on(a), on(b));
            eqo(ax, m, inst, m.dom(m.beta(a, b)), m.tensor(a, b));
            eqo(ax, m, inst, m.cod(m.beta(a, b)), m.tensor(b, a));
        }
    }

    let ax = ck.axiom("symmetric.i", "β_{B,A} ∘ β_{A,B} = id");
    for &a in &objs {
        for &b in &objs {
            let inst = || format!("A={} B={}", on(a), on(b));
            eq1(ax, m, inst, m.then1(m.beta(a, b), m.beta(b, a)), Some(m.id1(m.tensor(a, b))));
        }
    }

    let ax = ck.axiom("symmetric.ii.a", "β_{A⊗B,C} = (β_{A,C} ⊗ id_B) ∘ (id_A ⊗ β_{B,C})");
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                let inst = || format!("A={} B={} C={}", on(a), on(b), on(c));
                let r = m.then1(m.ltensor1(a, m.beta(b, c)), m.rtensor1(m.beta(a, c), b));
                eq1(ax, m, inst, Some(m.beta(m.tensor(a, b), c)), r);
            }
        }
    }
    let ax = ck.axiom("symmetric.ii.b", "β_{A,B⊗C} = (id_B ⊗ β_{A,C}) ∘ (β_{A,B} ⊗ id_C)");
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                let inst = || format!("A={} B={} C={}", on(a), on(b), on(c));
                let r = m.then1(m.rtensor1(m.beta(a, b), c), m.ltensor1(b, m.beta(a, c)));
                eq1(ax, m, inst, Some(m.beta(a, m.tensor(b, c))), r);
            }
        }
    }

    let ax = ck.axiom("symmetric.iii.a", "β_{A′,B} ∘ (f ⊗ id_B) = (id_B ⊗ f) ∘ β_{A,B}");
    for &f in &c1 {
        for &b in &objs {
            let (a, a2) = (m.dom(f), m.cod(f));
            let inst = || format!("f={} B={}", n1(f), on(b));
            eq1(ax, m, inst, m.then1(m.rtensor1(f, b), m.beta(a2, b)), m.then1(m.beta(a, b), m.ltensor1(b, f)));
        }
    }
    let ax = ck.axiom("symmetric.iii.b", "β_{A,B′} ∘ (id_A ⊗ g) = (g ⊗ id_A) ∘ β_{A,B}");
    for &g in &c1 {
        for &a in &objs {
            let (b, b2) = (m.dom(g), m.cod(g));
            let inst = || format!("A={} g={}", on(a), n1(g));
            eq1(ax, m, inst, m.then1(m.ltensor1(a, g), m.beta(a, b2)), m.then1(m.beta(a, b), m.rtensor1(g, a)));
        }
    }

    let ax = ck.axiom("symmetric.iv.a", "φ_{f, β_{B,C}} = id");
    for &f in &c1 {
        for &b in &objs {
            for &c in &objs {
                let inst = || format!("f={} B={} C={}", n1(f), on(b), on(c));
                let p = m.phi(f, m.beta(b, c));
                eq2(ax, m, inst, Some(p), Some(m.id2(m.src(p))));
            }
        }
    }
    let ax = ck.axiom("symmetric.iv.b", "φ_{β_{B,C}, g} = id");
    for &g in &c1 {
        for &b in &objs {
            for &c in &objs {
                let inst = || format!("B={} C={} g={}", on(b), on(c), n1(g));
                let p = m.phi(m.beta(b, c), g);
                eq2(ax, m, inst, Some(p), Some(m.id2(m.src(p))));
            }
        }
    }

    ck.report()
}

/// The quasistrict normalisation conditions on derived data, plus the
/// coherence equations of Φ and β_{f,g}.
pub fn check_quasistrict(m: &dyn Model, q: &QuasistrictData) -> Report {
    let objs = m.objects();
    let c1 = m.cells1();
    let on = |a: Obj| m.obj_name(a);
    let n1 = |f: Cell1| m.cell1_name(f);
    let mut ck = Checker::new(m);
    let is_id = |x: Option<Cell2>| x.map(|x| m.is_id2(x)).unwrap_or(false);

    let ax = ck.axiom("QS.1.sigma", "σ_{A,B}: id ⇒ β_{B,A} ∘ β_{A,B} is an identity");
    for &a in &objs {
        for &b in &objs {
            let x = q.sigma.get(&(a, b)).copied().flatten();
            ax.record(is_id(x) && x.map(|x| m.src(x)) == Some(m.id1(m.tensor(a, b))), || Witness {
                instance: format!("A={} B={}", on(a), on(b)),
                lhs: s2(m, x),
                rhs: "identity on id".into(),
            });
        }
    }
    for (id, table, what) in [("QS.1.R", &q.r, "R_{A,B|C}"), ("QS.1.S", &q.s, "S_{A|B,C}")] {
        let ax = ck.axiom(id, &format!("{what} is an identity"));
        for &a in &objs {
            for &b in &objs {
                for &c in &objs {
                    let x = table.get(&(a, b, c)).copied().flatten();
                    ax.record(is_id(x), || Witness {
                        instance: format!("A={} B={} C={}", on(a), on(b), on(c)),
                        lhs: s2(m, x),
                        rhs: "identity".into(),
                    });
                }
            }
        }
    }

    let ax = ck.axiom("QS.2", "β_{f,g} is an identity when f or g is");
    for (&(f, g), &x) in &q.beta2 {
        if m.is_id1(f) || m.is_id1(g) {
            ax.record(m.is_id2(x), || Witness {
                instance: format!("f={} g={}", n1(f), n1(g)),
                lhs: m.cell2_name(x),
                rhs: "identity".into(),
            });
        }
    }

    let betas: Vec<Cell1> = objs.iter().flat_map(|&a| objs.iter().map(move |&b| (a, b))).map(|(a, b)| m.beta(a, b)).collect();
    let ax = ck.axiom("QS.3", "Φ_{(f′,g′),(f,g)} is an identity when f′ or g is a braiding");
    for (&(fp, gp, f, g), &x) in &q.big_phi {
        if betas.contains(&fp) || betas.contains(&g) {
            ax.record(m.is_id2(x), || Witness {
                instance: format!("f′={} g′={} f={} g={}", n1(fp), n1(gp), n1(f), n1(g)),
                lhs: m.cell2_name(x),
                rhs: "identity".into(),
            });
        }
    }

    let ax = ck.axiom("cubical", "Φ_{(f′,g′),(f,g)} is an identity when f′ or g is");
    for (&(fp, gp, f, g), &x) in &q.big_phi {
        if m.is_id1(fp) || m.is_id1(g) {
            ax.record(m.is_id2(x), || Witness {
                instance: format!("f′={} g′={} f={} g={}", n1(fp), n1(gp), n1(f), n1(g)),
                lhs: m.cell2_name(x),
                rhs: "identity".into(),
            });
        }
    }

    let ax = ck.axiom("CSS.2.a", "β_{1,A} and β_{A,1} are identities");
    for &a in &objs {
        let inst = || format!("A={}", on(a));
        eq1(ax, m, inst, Some(m.beta(m.unit(), a)), Some(m.id1(a)));
        eq1(ax, m, inst, Some(m.beta(a, m.unit())), Some(m.id1(a)));
    }
    let u = m.unit();
    let ax = ck.axiom("CSS.2.b", "R_{1,A|B}, R_{A,1|B}, S_{A|1,B}, S_{A|B,1} are the identity of β_{A,B}");
    for &a in &objs {
        for &b in &objs {
            let want = Some(m.id2(m.beta(a, b)));
            let inst = || format!("A={} B={}", on(a), on(b));
            eq2(ax, m, inst, q.r.get(&(u, a, b)).copied().flatten(), want);
            eq2(ax, m, inst, q.r.get(&(a, u, b)).copied().flatten(), want);
            eq2(ax, m, inst, q.s.get(&(a, u, b)).copied().flatten(), want);
            eq2(ax, m, inst, q.s.get(&(a, b, u)).copied().flatten(), want);
        }
    }
    let ax = ck.axiom("CSS.2.c", "R_{A,B|1} and S_{1|A,B} are the identity of id_{A⊗B}");
    for &a in &objs {
        for &b in &objs {
            let want = Some(m.id2(m.id1(m.tensor(a, b))));
            let inst = || format!("A={} B={}", on(a), on(b));
            eq2(ax, m, inst, q.r.get(&(a, b, u)).copied().flatten(), want);
            eq2(ax, m, inst, q.s.get(&(u, a, b)).copied().flatten(), want);
        }
    }

    let pairs = composable(m, &c1);
    let ax = ck.axiom("coherence", "the two ways of merging three layers with Φ agree");
    for &(f, fp) in &pairs {
        for &fpp in &c1 {
            if m.cod(fp) != m.dom(fpp) {
                continue;
            }
            for &(g, gp) in &pairs {
                for &gpp in &c1 {
                    if m.cod(gp) != m.dom(gpp) {
                        continue;
                    }
                    let inst = || {
                        format!("f={} f′={} f″={} g={} g′={} g″={}", n1(f), n1(fp), n1(fpp), n1(g), n1(gp), n1(gpp))
                    };
                    let (l, r) = coherence_sides(m, q, [f, fp, fpp], [g, gp, gpp]);
                    eq2(ax, m, inst, l, r);
                }
            }
        }
    }

    let ax = ck.axiom("trans_cohere", "β_{f,g} is compatible with Φ");
    for &(f, fp) in &pairs {
        for &(g, gp) in &pairs {
            let inst = || format!("f={} f′={} g={} g′={}", n1(f), n1(fp), n1(g), n1(gp));
            let (l, r) = trans_cohere_sides(m, q, [f, fp], [g, gp]);
            eq2(ax, m, inst, l, r);
        }
    }

    ck.report()
}

fn big_phi(q: &QuasistrictData, fp: Cell1, gp: Cell1, f: Cell1, g: Cell1) -> Option<Cell2> {
    q.big_phi.get(&(fp, gp, f, g)).copied()
}

/// Both sides of the coherence square for three stacked layers.
pub fn coherence_sides(m: &dyn Model, q: &QuasistrictData, f: [Cell1; 3], g: [Cell1; 3]) -> (Option<Cell2>, Option<Cell2>) {
    let (ff, gg) = (m.then1(f[0], f[1]), m.then1(g[0], g[1]));
    let (ff2, gg2) = (m.then1(f[1], f[2]), m.then1(g[1], g[2]));
    let l = (|| {
        let x = big_phi(q, f[1], g[1], f[0], g[0])?;
        let top = tensor1(m, f[2], g[2])?;
        let x = m.whisker(m.id1(m.tensor(m.dom(f[0]), m.dom(g[0]))), x, top)?;
        let y = big_phi(q, f[2], g[2], ff?, gg?)?;
        m.then2(x, y)
    })();
    let r = (|| {
        let x = big_phi(q, f[2], g[2], f[1], g[1])?;
        let bottom = tensor1(m, f[0], g[0])?;
        let x = m.whisker(bottom, x, m.id1(m.tensor(m.cod(f[2]), m.cod(g[2]))))?;
        let y = big_phi(q, ff2?, gg2?, f[0], g[0])?;
        m.then2(x, y)
    })();
    (l, r)
}

/// Both sides of the compatibility of β_{f,g} with Φ, starting from
/// `(g′ ⊗ f′) ∘ (g ⊗ f) ∘ β_{A,B}`.
pub fn trans_cohere_sides(m: &dyn Model, q: &QuasistrictData, f: [Cell1; 2], g: [Cell1; 2]) -> (Option<Cell2>, Option<Cell2>) {
    let (a, b) = (m.dom(f[0]), m.dom(g[0]));
    let (a2, b2) = (m.cod(f[1]), m.cod(g[1]));
    let top = (|| {
        let x = big_phi(q, g[1], f[1], g[0], f[0])?;
        let x = m.whisker(m.beta(a, b), x, m.id1(m.tensor(b2, a2)))?;
        let y = *q.beta2.get(&(m.then1(f[0], f[1])?, m.then1(g[0], g[1])?))?;
        m.then2(x, y)
    })();
    let bottom = (|| {
        let x = *q.beta2.get(&(f[0], g[0]))?;
        let x = m.whisker(m.id1(m.tensor(a, b)), x, tensor1(m, g[1], f[1])?)?;
        let y = *q.beta2.get(&(f[1], g[1]))?;
        let y = m.whisker(tensor1(m, f[0], g[0])?, y, m.id1(m.tensor(b2, a2)))?;
        let z = big_phi(q, f[1], g[1], f[0], g[0])?;
        let z = m.whisker(m.id1(m.tensor(a, b)), z, m.beta(a2, b2))?;
        m.then2(m.then2(x, y)?, z)
    })();
    (top, bottom)
}
