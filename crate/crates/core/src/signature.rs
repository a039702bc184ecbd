//! Presentations: object generators, 1-morphism generators and 2-morphism
//! generators, plus the strict tensor of objects (word concatenation).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::diagram::{Diagram, SliceBody};

/// Interned identifier. Cheap to clone, compared by content.
pub type Name = Arc<str>;

/// A tensor word of object generators. The empty word is the unit object.
/// Shared storage, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Arc<[Name]>);

impl Default for Word {
    fn default() -> Self {
        Word::unit()
    }
}

impl From<Vec<Name>> for Word {
    fn from(v: Vec<Name>) -> Self {
        if v.is_empty() {
            Word::unit()
        } else {
            Word(v.into())
        }
    }
}

impl Word {
    pub fn unit() -> Self {
        static UNIT: OnceLock<Arc<[Name]>> = OnceLock::new();
        Word(UNIT.get_or_init(|| Arc::from(Vec::new())).clone())
    }

    pub fn new(letters: Vec<Name>) -> Self {
        letters.into()
    }

    pub fn from_letters<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        letters.into_iter().map(|s| Name::from(s.as_ref())).collect::<Vec<_>>().into()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Name] {
        &self.0
    }

    /// `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        word_concat(self, other)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        if from == 0 && to == self.len() {
            return self.clone();
        }
        self.0[from..to].to_vec().into()
    }

    /// `left · self · right`
    pub fn surround(&self, left: &Word, right: &Word) -> Word {
        if left.is_empty() && right.is_empty() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        v.into()
    }
}

/// Concatenation of object words; strictly associative with the empty word as
/// two-sided unit.
pub fn word_concat(u: &Word, v: &Word) -> Word {
    if v.is_empty() {
        return u.clone();
    }
    if u.is_empty() {
        return v.clone();
    }
    let mut out = u.0.to_vec();
    out.extend_from_slice(&v.0);
    out.into()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjGen {
    pub id: Name,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen1 {
    pub id: Name,
    pub dom: Word,
    pub cod: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen2 {
    pub id: Name,
    pub src: Diagram,
    pub tgt: Diagram,
    pub invertible: bool,
}

/// A presentation. Declaration order is preserved so printing is stable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub objects: Vec<ObjGen>,
    pub gens1: Vec<Gen1>,
    pub gens2: Vec<Gen2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(Name),
    #[error("`{decl}` refers to undeclared `{name}`")]
    UnknownReference { decl: Name, name: Name },
    #[error("2-cell `{decl}`: source and target endpoints differ ({src} vs {tgt})")]
    EndpointMismatch { decl: Name, src: String, tgt: String },
    #[error("`{decl}`: {reason}")]
    IllFormed { decl: Name, reason: String },
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&self, id: &str) -> Option<&ObjGen> {
        self.objects.iter().find(|o| &*o.id == id)
    }

    pub fn gen1(&self, id: &str) -> Option<&Gen1> {
        self.gens1.iter().find(|g| &*g.id == id)
    }

    pub fn gen2(&self, id: &str) -> Option<&Gen2> {
        self.gens2.iter().find(|g| &*g.id == id)
    }

    pub fn add_object(&mut self, id: &str) -> &mut Self {
        self.objects.push(ObjGen { id: id.into() });
        self
    }

    pub fn add_gen1(&mut self, id: &str, dom: Word, cod: Word) -> &mut Self {
        self.gens1.push(Gen1 { id: id.into(), dom, cod });
        self
    }

    pub fn add_gen2(&mut self, id: &str, src: Diagram, tgt: Diagram, invertible: bool) -> &mut Self {
        self.gens2.push(Gen2 { id: id.into(), src, tgt, invertible });
        self
    }

    /// Checks uniqueness, referential integrity and 2-cell endpoints.
    /// Returns every problem found, not just the first.
    pub fn validate(&self) -> Result<(), Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let all_ids = self
            .objects
            .iter()
            .map(|o| &o.id)
            .chain(self.gens1.iter().map(|g| &g.id))
            .chain(self.gens2.iter().map(|g| &g.id));
        for id in all_ids {
            if id.is_empty() {
                diags.push(Diagnostic::IllFormed { decl: id.clone(), reason: "empty identifier".into() });
            }
            if !seen.insert(id) {
                diags.push(Diagnostic::DuplicateId(id.clone()));
            }
        }

        let objects: BTreeSet<&str> = self.objects.iter().map(|o| &*o.id).collect();
        let check_word = |decl: &Name, w: &Word, diags: &mut Vec<Diagnostic>| {
            for l in w.letters() {
                if !objects.contains(&**l) {
                    diags.push(Diagnostic::UnknownReference { decl: decl.clone(), name: l.clone() });
                }
            }
        };

        for g in &self.gens1 {
            check_word(&g.id, &g.dom, &mut diags);
            check_word(&g.id, &g.cod, &mut diags);
        }

        let gens1: BTreeMap<&str, &Gen1> = self.gens1.iter().map(|g| (&*g.id, g)).collect();
        for g in &self.gens2 {
            for d in [&g.src, &g.tgt] {
                check_word(&g.id, &d.src, &mut diags);
                for s in d.slices() {
                    check_word(&g.id, &s.left, &mut diags);
                    check_word(&g.id, &s.right, &mut diags);
                    match &s.body {
                        SliceBody::Gen { id, dom, cod } => match gens1.get(&**id) {
                            None => diags.push(Diagnostic::UnknownReference { decl: g.id.clone(), name: id.clone() }),
                            Some(decl) if decl.dom != *dom || decl.cod != *cod => {
                                diags.push(Diagnostic::IllFormed {
                                    decl: g.id.clone(),
                                    reason: format!("slice uses `{id}` with a stale type"),
                                })
                            }
                            Some(_) => {}
                        },
                        SliceBody::Braid(x, y) => {
                            for l in [x, y] {
                                if !objects.contains(&**l) {
                                    diags.push(Diagnostic::UnknownReference { decl: g.id.clone(), name: l.clone() });
                                }
                            }
                        }
                    }
                }
                if let Err(e) = d.check() {
                    diags.push(Diagnostic::IllFormed { decl: g.id.clone(), reason: e.to_string() });
                }
            }
            if g.src.src != g.tgt.src || g.src.tgt() != g.tgt.tgt() {
                diags.push(Diagnostic::EndpointMismatch {
                    decl: g.id.clone(),
                    src: format!("{} -> {}", g.src.src, g.src.tgt()),
                    tgt: format!("{} -> {}", g.tgt.src, g.tgt.tgt()),
                });
            }
        }

        if diags.is_empty() {
            Ok(())
        } else {
            Err(diags)
        }
    }
}
