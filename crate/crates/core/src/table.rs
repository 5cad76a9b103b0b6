//! Categories stored as explicit composition and involution tables.
//!
//! Any [`FiniteCategory`] can be compiled into a [`TableCategory`], after
//! which every structure map is an array lookup. The tables can also be
//! edited in place, which is how defective instances are seeded for
//! mutation testing.

use std::borrow::Cow;
use std::collections::HashMap;

use crate::category::{FiniteCategory, ObjectId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub u32);

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct TableCategory {
    name: String,
    objects: Vec<ObjectId>,
    object_handles: Vec<Obj>,
    zero_object: Option<Obj>,
    labels: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    homs: Vec<Vec<Mor>>,
    identities: Vec<Mor>,
    involution: Vec<Mor>,
    // dense morphism-count squared; UNSET where not composable
    compose: Vec<u32>,
    zeros: Vec<Option<Mor>>,
}

impl TableCategory {
    pub fn object(&self, name: &str) -> Option<Obj> {
        self.objects
            .iter()
            .position(|o| o.as_str() == name)
            .map(|i| Obj(i as u32))
    }

    /// Morphism by rendered label.
    pub fn morphism(&self, label: &str) -> Option<Mor> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Mor(i as u32))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, f: Mor) -> &str {
        &self.labels[f.0 as usize]
    }

    fn n_obj(&self) -> usize {
        self.objects.len()
    }

    /// Replaces `f*` by `g*` and `g*` by `f*`. Both must share a type.
    pub fn swap_involution(&mut self, f: Mor, g: Mor) -> Result<()> {
        let (fi, gi) = (f.0 as usize, g.0 as usize);
        if self.dom[fi] != self.dom[gi] || self.cod[fi] != self.cod[gi] {
            return Err(Error::ShapeMismatch(format!(
                "cannot swap involution entries of {} and {}: different types",
                self.labels[fi], self.labels[gi]
            )));
        }
        self.involution.swap(fi, gi);
        Ok(())
    }

    /// Sets the composite `f ∘ g` to `h`, which must have the right type.
    pub fn override_composite(&mut self, f: Mor, g: Mor, h: Mor) -> Result<()> {
        let (fi, gi, hi) = (f.0 as usize, g.0 as usize, h.0 as usize);
        if self.cod[gi] != self.dom[fi] {
            return Err(Error::DomainMismatch {
                f: self.labels[fi].clone(),
                g: self.labels[gi].clone(),
                f_dom: self.objects[self.dom[fi].0 as usize].to_string(),
                g_cod: self.objects[self.cod[gi].0 as usize].to_string(),
            });
        }
        if self.dom[hi] != self.dom[gi] || self.cod[hi] != self.cod[fi] {
            return Err(Error::ShapeMismatch(format!(
                "{} cannot be the composite of {} after {}",
                self.labels[hi], self.labels[fi], self.labels[gi]
            )));
        }
        let n = self.len();
        self.compose[fi * n + gi] = h.0;
        self.recompute_zeros();
        Ok(())
    }

    pub fn rename(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    fn recompute_zeros(&mut self) {
        let n = self.n_obj();
        let mut zeros = vec![None; n * n];
        if let Some(z) = self.zero_object {
            for a in 0..n {
                for b in 0..n {
                    let to = &self.homs[a * n + z.0 as usize];
                    let from = &self.homs[z.0 as usize * n + b];
                    if let ([t], [s]) = (&to[..], &from[..]) {
                        let m = self.len();
                        let c = self.compose[s.0 as usize * m + t.0 as usize];
                        zeros[a * n + b] = (c != UNSET).then_some(Mor(c));
                    }
                }
            }
        }
        self.zeros = zeros;
    }
}

impl FiniteCategory for TableCategory {
    type Object = Obj;
    type Morphism = Mor;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn objects(&self) -> Cow<'_, [Obj]> {
        Cow::Borrowed(&self.object_handles)
    }

    fn object_id(&self, a: &Obj) -> ObjectId {
        self.objects[a.0 as usize].clone()
    }

    fn hom(&self, dom: &Obj, cod: &Obj) -> Cow<'_, [Mor]> {
        Cow::Borrowed(&self.homs[dom.0 as usize * self.n_obj() + cod.0 as usize])
    }

    fn dom(&self, f: &Mor) -> Obj {
        self.dom[f.0 as usize]
    }

    fn cod(&self, f: &Mor) -> Obj {
        self.cod[f.0 as usize]
    }

    fn identity(&self, a: &Obj) -> Mor {
        self.identities[a.0 as usize]
    }

    fn compose_unchecked(&self, f: &Mor, g: &Mor) -> Mor {
        let c = self.compose[f.0 as usize * self.len() + g.0 as usize];
        debug_assert!(
            c != UNSET,
            "{} after {} is not composable",
            self.label(*f),
            self.label(*g)
        );
        Mor(c)
    }

    fn involution(&self, f: &Mor) -> Mor {
        self.involution[f.0 as usize]
    }

    fn zero_object(&self) -> Option<Obj> {
        self.zero_object
    }

    fn render(&self, f: &Mor) -> String {
        self.labels[f.0 as usize].clone()
    }

    fn zero(&self, a: &Obj, b: &Obj) -> Option<Mor> {
        self.zeros[a.0 as usize * self.n_obj() + b.0 as usize]
    }
}

/// Incremental construction of a [`TableCategory`].
///
/// Morphisms enter their hom-set in insertion order. `build` rejects
/// missing identities, composites, involution entries and ill-typed ones.
#[derive(Debug, Default)]
pub struct TableBuilder {
    name: String,
    objects: Vec<ObjectId>,
    zero_object: Option<Obj>,
    labels: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    identities: HashMap<Obj, Mor>,
    involution: HashMap<Mor, Mor>,
    compose: HashMap<(Mor, Mor), Mor>,
}

impl TableBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        TableBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn object(&mut self, id: ObjectId) -> Result<Obj> {
        if self.objects.contains(&id) {
            return Err(Error::MalformedTable(format!("duplicate object {id}")));
        }
        self.objects.push(id);
        Ok(Obj(self.objects.len() as u32 - 1))
    }

    pub fn zero_object(&mut self, z: Obj) {
        self.zero_object = Some(z);
    }

    pub fn morphism(&mut self, label: impl Into<String>, dom: Obj, cod: Obj) -> Mor {
        self.labels.push(label.into());
        self.dom.push(dom);
        self.cod.push(cod);
        Mor(self.labels.len() as u32 - 1)
    }

    pub fn identity(&mut self, a: Obj, f: Mor) {
        self.identities.insert(a, f);
    }

    pub fn composite(&mut self, f: Mor, g: Mor, h: Mor) {
        self.compose.insert((f, g), h);
    }

    pub fn involution(&mut self, f: Mor, g: Mor) {
        self.involution.insert(f, g);
    }

    pub fn build(self) -> Result<TableCategory> {
        let n_obj = self.objects.len();
        let n = self.labels.len();
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for i in 0..n {
            homs[self.dom[i].0 as usize * n_obj + self.cod[i].0 as usize].push(Mor(i as u32));
        }
        let mut identities = Vec::with_capacity(n_obj);
        for a in 0..n_obj {
            let id = *self.identities.get(&Obj(a as u32)).ok_or_else(|| {
                Error::MalformedTable(format!("no identity on {}", self.objects[a]))
            })?;
            if self.dom[id.0 as usize].0 as usize != a || self.cod[id.0 as usize].0 as usize != a {
                return Err(Error::MalformedTable(format!(
                    "identity of {} has the wrong type",
                    self.objects[a]
                )));
            }
            identities.push(id);
        }
        let mut involution = Vec::with_capacity(n);
        for i in 0..n {
            let g = *self.involution.get(&Mor(i as u32)).ok_or_else(|| {
                Error::MalformedTable(format!("no involution entry for {}", self.labels[i]))
            })?;
            if self.dom[g.0 as usize] != self.cod[i] || self.cod[g.0 as usize] != self.dom[i] {
                return Err(Error::MalformedTable(format!(
                    "involution of {} has the wrong type",
                    self.labels[i]
                )));
            }
            involution.push(g);
        }
        let mut compose = vec![UNSET; n * n];
        for f in 0..n {
            for g in 0..n {
                if self.cod[g] != self.dom[f] {
                    continue;
                }
                let h = *self
                    .compose
                    .get(&(Mor(f as u32), Mor(g as u32)))
                    .ok_or_else(|| {
                        Error::MalformedTable(format!(
                            "no composite for {} after {}",
                            self.labels[f], self.labels[g]
                        ))
                    })?;
                if self.dom[h.0 as usize] != self.dom[g] || self.cod[h.0 as usize] != self.cod[f] {
                    return Err(Error::MalformedTable(format!(
                        "composite of {} after {} has the wrong type",
                        self.labels[f], self.labels[g]
                    )));
                }
                compose[f * n + g] = h.0;
            }
        }
        let mut cat = TableCategory {
            name: self.name,
            object_handles: (0..n_obj as u32).map(Obj).collect(),
            objects: self.objects,
            zero_object: self.zero_object,
            labels: self.labels,
            dom: self.dom,
            cod: self.cod,
            homs,
            identities,
            involution,
            compose,
            zeros: Vec::new(),
        };
        cat.recompute_zeros();
        Ok(cat)
    }
}

/// A table compiled from another category, with the payload of every
/// morphism kept for translating answers back.
#[derive(Debug, Clone)]
pub struct Compiled<O, M> {
    pub table: TableCategory,
    pub objects: Vec<O>,
    pub payloads: Vec<M>,
    index: HashMap<M, Mor>,
}

impl<O: Eq, M: Eq + std::hash::Hash> Compiled<O, M> {
    pub fn mor(&self, m: &M) -> Option<Mor> {
        self.index.get(m).copied()
    }

    pub fn obj(&self, o: &O) -> Option<Obj> {
        self.objects
            .iter()
            .position(|x| x == o)
            .map(|i| Obj(i as u32))
    }

    pub fn payload(&self, f: Mor) -> &M {
        &self.payloads[f.0 as usize]
    }
}

/// Enumerates `cat` once and stores its structure maps as tables.
pub fn compile<C: FiniteCategory>(cat: &C) -> Result<Compiled<C::Object, C::Morphism>> {
    let objects = cat.objects().into_owned();
    let mut b = TableBuilder::new(cat.name());
    let mut handles = Vec::with_capacity(objects.len());
    for o in &objects {
        handles.push(b.object(cat.object_id(o))?);
    }
    if let Some(z) = cat.zero_object() {
        let i = objects
            .iter()
            .position(|o| *o == z)
            .ok_or_else(|| Error::MalformedTable("zero object is not listed".into()))?;
        b.zero_object(handles[i]);
    }
    let mut payloads = Vec::new();
    let mut index = HashMap::new();
    let mut by_obj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); objects.len()];
    for (i, a) in objects.iter().enumerate() {
        for (j, c) in objects.iter().enumerate() {
            for f in cat.hom(a, c).iter() {
                let m = b.morphism(cat.render(f), handles[i], handles[j]);
                index.insert(f.clone(), m);
                payloads.push(f.clone());
                by_obj[j].push((i, m.0 as usize));
            }
        }
    }
    let lookup = |f: &C::Morphism| {
        index.get(f).copied().ok_or_else(|| {
            Error::MalformedTable(format!(
                "{} is not in any enumerated hom-set",
                cat.render(f)
            ))
        })
    };
    for (i, a) in objects.iter().enumerate() {
        b.identity(handles[i], lookup(&cat.identity(a))?);
    }
    for (fi, f) in payloads.iter().enumerate() {
        b.involution(Mor(fi as u32), lookup(&cat.involution(f))?);
        let f_dom = objects
            .iter()
            .position(|o| *o == cat.dom(f))
            .expect("enumerated object");
        for &(_, gi) in &by_obj[f_dom] {
            let h = cat.compose_unchecked(f, &payloads[gi]);
            b.composite(Mor(fi as u32), Mor(gi as u32), lookup(&h)?);
        }
    }
    Ok(Compiled {
        table: b.build()?,
        objects,
        payloads,
        index,
    })
}
