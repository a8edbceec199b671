//! The workspace file format: a single JSON document with top-level maps
//! `rings`, `modules`, `bimodules`, `maps`, `contexts`. Every object is
//! validated on load; axiom failures are reported with the owning object's
//! name and the witnessing generator tuple.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use morita_kit::abelian::{Elem, FinAbGroup};
use morita_kit::algebra::{Bimodule, FinRing, ModuleStructure, Side};
use morita_kit::morita::{
    build_datum, build_semi_context, BalancedMap, MoritaDatum, MoritaSemiContext,
};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WorkspaceDoc {
    pub schema: u32,
    /// Optional capacity limits; command-line flags take precedence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapsDoc>,
    /// Optional default seed for corpus-style checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub rings: BTreeMap<String, RingDoc>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDoc>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleDoc>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapDoc>,
    #[serde(default)]
    pub contexts: BTreeMap<String, ContextDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapsDoc {
    pub max_group_order: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pair_count: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingDoc {
    pub moduli: Vec<i64>,
    pub one: Option<Elem>,
    /// k×k array of tuples: the product of generator i by generator j.
    pub mult: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDoc {
    pub moduli: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub group: GroupDoc,
    pub ring: String,
    pub side: String,
    /// (ring generator × module generator) table of module elements.
    pub action: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BimoduleDoc {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapDoc {
    pub p: String,
    pub q: String,
    /// k_P × k_Q array of T-tuples.
    pub table: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContextDoc {
    pub t: String,
    pub s: String,
    pub p: String,
    pub q: String,
    pub beta_t: String,
    /// Present for a datum, absent for a bare semi-context.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_s: Option<String>,
}

/// A fully validated object graph.
pub struct Workspace {
    pub rings: BTreeMap<String, FinRing>,
    pub modules: BTreeMap<String, ModuleStructure>,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub maps: BTreeMap<String, BalancedMap>,
    pub semi_contexts: BTreeMap<String, MoritaSemiContext>,
    pub data: BTreeMap<String, MoritaDatum>,
}

#[derive(Debug)]
pub enum LoadError {
    /// Syntax error with serde's line/column diagnostics.
    Parse(String),
    /// A name that does not resolve.
    Unresolved(String),
    /// An object failed validation (axiom failures carry witnesses).
    Invalid(String),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Parse(d) => write!(f, "parse error: {d}"),
            LoadError::Unresolved(d) => write!(f, "unresolved reference: {d}"),
            LoadError::Invalid(d) => write!(f, "invalid object: {d}"),
        }
    }
}

impl std::error::Error for LoadError {}

pub fn parse_workspace(text: &str) -> Result<Workspace, LoadError> {
    let doc: WorkspaceDoc =
        serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    if doc.schema != 1 {
        return Err(LoadError::Parse(format!("unsupported schema {}", doc.schema)));
    }
    build_workspace(&doc)
}

pub fn build_workspace(doc: &WorkspaceDoc) -> Result<Workspace, LoadError> {
    let cap = morita_kit::caps().max_group_order;
    let check_cap = |what: &str, name: &str, group: &FinAbGroup| {
        if group.order() > cap {
            Err(LoadError::Invalid(format!(
                "{what} {name}: group order {} exceeds the capacity limit {cap}",
                group.order()
            )))
        } else {
            Ok(())
        }
    };
    let mut rings = BTreeMap::new();
    for (name, rd) in &doc.rings {
        let group = FinAbGroup::new(rd.moduli.clone())
            .map_err(|e| LoadError::Invalid(format!("ring {name}: {e}")))?;
        check_cap("ring", name, &group)?;
        let ring = FinRing::new(group, rd.mult.clone(), rd.one.clone())
            .map_err(|e| LoadError::Invalid(format!("ring {name}: {e}")))?;
        let report = ring.validate();
        if !report.is_valid() {
            return Err(LoadError::Invalid(format!("ring {name}: {report}")));
        }
        rings.insert(name.clone(), ring);
    }

    let mut modules = BTreeMap::new();
    for (name, md) in &doc.modules {
        let ring = rings
            .get(&md.ring)
            .ok_or_else(|| LoadError::Unresolved(format!("module {name}: ring {}", md.ring)))?;
        let side = match md.side.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            other => {
                return Err(LoadError::Invalid(format!(
                    "module {name}: side must be \"left\" or \"right\", got {other:?}"
                )))
            }
        };
        let group = FinAbGroup::new(md.group.moduli.clone())
            .map_err(|e| LoadError::Invalid(format!("module {name}: {e}")))?;
        check_cap("module", name, &group)?;
        let module = ModuleStructure::new(ring.clone(), group, side, md.action.clone())
            .map_err(|e| LoadError::Invalid(format!("module {name}: {e}")))?;
        let report = module.validate();
        if !report.is_valid() {
            return Err(LoadError::Invalid(format!("module {name}: {report}")));
        }
        modules.insert(name.clone(), module);
    }

    let mut bimodules = BTreeMap::new();
    for (name, bd) in &doc.bimodules {
        let left = modules
            .get(&bd.left)
            .ok_or_else(|| LoadError::Unresolved(format!("bimodule {name}: module {}", bd.left)))?;
        let right = modules.get(&bd.right).ok_or_else(|| {
            LoadError::Unresolved(format!("bimodule {name}: module {}", bd.right))
        })?;
        let bimodule = Bimodule::new(left.clone(), right.clone())
            .map_err(|e| LoadError::Invalid(format!("bimodule {name}: {e}")))?;
        let report = bimodule.validate();
        if !report.is_valid() {
            return Err(LoadError::Invalid(format!("bimodule {name}: {report}")));
        }
        bimodules.insert(name.clone(), bimodule);
    }

    let mut maps = BTreeMap::new();
    for (name, md) in &doc.maps {
        let p = bimodules
            .get(&md.p)
            .ok_or_else(|| LoadError::Unresolved(format!("map {name}: bimodule {}", md.p)))?;
        let q = bimodules
            .get(&md.q)
            .ok_or_else(|| LoadError::Unresolved(format!("map {name}: bimodule {}", md.q)))?;
        let map = BalancedMap::new(p.clone(), q.clone(), md.table.clone())
            .map_err(|e| LoadError::Invalid(format!("map {name}: {e}")))?;
        let report = map.validate();
        if !report.is_valid() {
            return Err(LoadError::Invalid(format!("map {name}: {report}")));
        }
        maps.insert(name.clone(), map);
    }

    let mut semi_contexts = BTreeMap::new();
    let mut data = BTreeMap::new();
    for (name, cd) in &doc.contexts {
        for (label, ring_name) in [("t", &cd.t), ("s", &cd.s)] {
            if !rings.contains_key(ring_name) {
                return Err(LoadError::Unresolved(format!(
                    "context {name}: ring {ring_name} (field {label})"
                )));
            }
        }
        let beta_t = maps
            .get(&cd.beta_t)
            .ok_or_else(|| LoadError::Unresolved(format!("context {name}: map {}", cd.beta_t)))?;
        check_context_shape(name, cd, beta_t, &rings, &bimodules)?;
        let m_t = build_semi_context(beta_t.clone())
            .map_err(|e| LoadError::Invalid(format!("context {name}: {e}")))?;
        match &cd.beta_s {
            None => {
                semi_contexts.insert(name.clone(), m_t);
            }
            Some(beta_s_name) => {
                let beta_s = maps.get(beta_s_name).ok_or_else(|| {
                    LoadError::Unresolved(format!("context {name}: map {beta_s_name}"))
                })?;
                let m_s = build_semi_context(beta_s.clone())
                    .map_err(|e| LoadError::Invalid(format!("context {name}: {e}")))?;
                let datum = build_datum(m_t, m_s)
                    .map_err(|e| LoadError::Invalid(format!("context {name}: {e}")))?;
                data.insert(name.clone(), datum);
            }
        }
    }

    Ok(Workspace { rings, modules, bimodules, maps, semi_contexts, data })
}

fn check_context_shape(
    name: &str,
    cd: &ContextDoc,
    beta_t: &BalancedMap,
    rings: &BTreeMap<String, FinRing>,
    bimodules: &BTreeMap<String, Bimodule>,
) -> Result<(), LoadError> {
    let p = bimodules
        .get(&cd.p)
        .ok_or_else(|| LoadError::Unresolved(format!("context {name}: bimodule {}", cd.p)))?;
    let q = bimodules
        .get(&cd.q)
        .ok_or_else(|| LoadError::Unresolved(format!("context {name}: bimodule {}", cd.q)))?;
    if beta_t.p() != p || beta_t.q() != q {
        return Err(LoadError::Invalid(format!(
            "context {name}: map {} does not connect bimodules {} and {}",
            cd.beta_t, cd.p, cd.q
        )));
    }
    let t = &rings[&cd.t];
    let s = &rings[&cd.s];
    if beta_t.outer_ring() != t || beta_t.inner_ring() != s {
        return Err(LoadError::Invalid(format!(
            "context {name}: map {} is not ({}, {})-bilinear",
            cd.beta_t, cd.t, cd.s
        )));
    }
    Ok(())
}

// --- exporting built objects back into documents ----------------------------

pub fn ring_doc(ring: &FinRing) -> RingDoc {
    RingDoc {
        moduli: ring.group().moduli().to_vec(),
        one: ring.one().cloned(),
        mult: ring.mult_table().to_vec(),
    }
}

pub fn module_doc(name_of_ring: &str, module: &ModuleStructure) -> ModuleDoc {
    ModuleDoc {
        group: GroupDoc { moduli: module.group().moduli().to_vec() },
        ring: name_of_ring.to_string(),
        side: match module.side() {
            Side::Left => "left".to_string(),
            Side::Right => "right".to_string(),
        },
        action: module.action_table().to_vec(),
    }
}

/// Serialize a datum as a complete workspace document.
pub fn datum_doc(name: &str, datum: &MoritaDatum) -> WorkspaceDoc {
    let mut doc = WorkspaceDoc {
        schema: 1,
        caps: None,
        seed: None,
        rings: BTreeMap::new(),
        modules: BTreeMap::new(),
        bimodules: BTreeMap::new(),
        maps: BTreeMap::new(),
        contexts: BTreeMap::new(),
    };
    doc.rings.insert("T".into(), ring_doc(datum.t()));
    doc.rings.insert("S".into(), ring_doc(datum.s()));
    doc.modules.insert("P_left".into(), module_doc("T", datum.p().left()));
    doc.modules.insert("P_right".into(), module_doc("S", datum.p().right()));
    doc.modules.insert("Q_left".into(), module_doc("S", datum.q().left()));
    doc.modules.insert("Q_right".into(), module_doc("T", datum.q().right()));
    doc.bimodules.insert(
        "P".into(),
        BimoduleDoc { left: "P_left".into(), right: "P_right".into() },
    );
    doc.bimodules.insert(
        "Q".into(),
        BimoduleDoc { left: "Q_left".into(), right: "Q_right".into() },
    );
    doc.maps.insert(
        "betaT".into(),
        MapDoc { p: "P".into(), q: "Q".into(), table: datum.m_t().beta().table().to_vec() },
    );
    doc.maps.insert(
        "betaS".into(),
        MapDoc { p: "Q".into(), q: "P".into(), table: datum.m_s().beta().table().to_vec() },
    );
    doc.contexts.insert(
        name.into(),
        ContextDoc {
            t: "T".into(),
            s: "S".into(),
            p: "P".into(),
            q: "Q".into(),
            beta_t: "betaT".into(),
            beta_s: Some("betaS".into()),
        },
    );
    doc
}
