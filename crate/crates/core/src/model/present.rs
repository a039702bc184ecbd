//! A free presentation of a model's enumerated cells: every object (the unit
//! included) becomes a letter, every non-identity 1-cell a generator, every
//! 2-cell a generator 2-cell, with the tautological assignment.

use std::collections::BTreeMap;

use crate::diagram::{compose, Diagram};
use crate::signature::{Gen1, Gen2, Name, Signature, Word};

use super::{Assignment, Cell1, Cell2, Model, Obj};

pub struct Presentation {
    pub sig: Signature,
    pub asg: Assignment,
    words: BTreeMap<Obj, Word>,
    diagrams: BTreeMap<Cell1, Diagram>,
    gens2: BTreeMap<Cell2, Gen2>,
}

impl Presentation {
    pub fn of(m: &dyn Model) -> Self {
        let mut p = Presentation {
            sig: Signature::new(),
            asg: Assignment::default(),
            words: BTreeMap::new(),
            diagrams: BTreeMap::new(),
            gens2: BTreeMap::new(),
        };
        for a in m.objects() {
            let id: Name = format!("o{}", a.0).into();
            p.sig.add_object(&id);
            p.asg.objects.insert(id.clone(), a);
            p.words.insert(a, Word::new(vec![id]));
        }
        for f in m.cells1() {
            let d = if m.is_id1(f) {
                Diagram::identity(p.words[&m.dom(f)].clone())
            } else {
                let g = Gen1 { id: format!("c{}", f.0).into(), dom: p.words[&m.dom(f)].clone(), cod: p.words[&m.cod(f)].clone() };
                p.sig.gens1.push(g.clone());
                p.asg.gens1.insert(g.id.clone(), f);
                Diagram::generator(&g)
            };
            p.diagrams.insert(f, d);
        }
        for x in m.cells2() {
            let g = Gen2 {
                id: format!("a{}", x.0).into(),
                src: p.diagrams[&m.src(x)].clone(),
                tgt: p.diagrams[&m.tgt(x)].clone(),
                invertible: m.inverse(x).is_some(),
            };
            p.sig.gens2.push(g.clone());
            p.asg.gens2.insert(g.id.clone(), x);
            p.gens2.insert(x, g);
        }
        p
    }

    pub fn word(&self, a: Obj) -> &Word {
        &self.words[&a]
    }

    /// The one-slice diagram of `f`, or an identity.
    pub fn diagram(&self, f: Cell1) -> &Diagram {
        &self.diagrams[&f]
    }

    /// `f` then `g` as a two-slice diagram.
    pub fn path(&self, f: Cell1, g: Cell1) -> Diagram {
        compose(&self.diagrams[&f], &self.diagrams[&g]).expect("composable cells give chaining diagrams")
    }

    pub fn gen2(&self, x: Cell2) -> &Gen2 {
        &self.gens2[&x]
    }
}
