//! Deterministic sweep over a list of groups.

use std::path::{Path, PathBuf};

use artinchar::classfun::VirtualCharacter;
use artinchar::heilbronn::huppert_predicts_m_group;
use artinchar::monomial::{cone_membership, decompose_uvdw, is_m_group, monomial_family};
use artinchar::supercharacter::{enumerate_scts, DEFAULT_CLASS_CAP};
use artinchar::{corpus, Group, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::input::{read_json, resolve_group, Context};

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
pub struct Caps {
    #[serde(default)]
    pub max_order: Option<usize>,
    /// Largest order for which every subgroup is decomposed.
    #[serde(default)]
    pub decompose_max_order: Option<usize>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    /// Group file; the name is looked up in the built-in corpus when absent.
    #[serde(default)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CorpusSpec {
    pub entries: Vec<CorpusEntry>,
    #[serde(default)]
    pub caps: Caps,
}

impl CorpusSpec {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    fn groups(&self, base: Option<&Path>) -> Result<Vec<Group>> {
        self.entries
            .iter()
            .map(|e| match &e.file {
                Some(f) => {
                    let f = match base {
                        Some(b) if f.is_relative() => b.join(f),
                        _ => f.clone(),
                    };
                    Ok(resolve_group(&f.to_string_lossy())?.with_name(&e.name))
                }
                None => resolve_group(&e.name),
            })
            .collect()
    }
}

fn group_report(ctx: &Context, g: &Group, caps: &Caps) -> Result<Value> {
    let t = ctx.table(g)?;
    t.verify()?;
    let solvable = g.is_solvable();
    let degrees = t.degrees();
    let m = is_m_group(g, ctx.strategy)?;
    let huppert = huppert_predicts_m_group(g)?;
    let mut reg_minus_one = degrees.clone();
    reg_minus_one[0] -= 1;
    let fam = monomial_family(g, ctx.strategy)?;
    let cone = cone_membership(&VirtualCharacter::from_ints(&reg_minus_one), &fam)?;
    let uvdw = if solvable && g.order() <= caps.decompose_max_order.unwrap_or(24) {
        let subs = g.subgroups()?;
        let mut verified = 0;
        for h in &subs {
            decompose_uvdw(g, h)?.verify()?;
            verified += 1;
        }
        json!(verified)
    } else {
        Value::Null
    };
    let scts = if g.num_classes() <= DEFAULT_CLASS_CAP {
        json!(enumerate_scts(g, ctx.strategy)?.len())
    } else {
        Value::Null
    };
    Ok(json!({
        "group": g.name(),
        "order": g.order(),
        "num_classes": g.num_classes(),
        "solvable": solvable,
        "derived_length": g.derived_length(),
        "degrees": degrees,
        "table_verified": true,
        "m_group": m.is_m_group,
        "non_monomial": m.non_monomial,
        "huppert_predicts": huppert,
        "regular_minus_trivial_in_cone": cone.is_member(),
        "monomial_family_size": fam.members.len(),
        "uvdw_subgroups_verified": uvdw,
        "supercharacter_theories": scts,
    }))
}

/// Runs the sweep over a corpus list file, or the built-in corpus when none is given.
pub fn run(ctx: &Context, spec: Option<&Path>, max_order: Option<usize>) -> Result<(Value, bool)> {
    let (groups, caps) = match spec {
        Some(p) => {
            let s = CorpusSpec::load(p)?;
            (s.groups(p.parent())?, s.caps)
        }
        None => (corpus::standard(), Caps::default()),
    };
    let limit = max_order.or(caps.max_order).unwrap_or(usize::MAX);
    let mut reports = Vec::new();
    let mut ok = true;
    for g in groups.iter().filter(|g| g.order() <= limit) {
        let r = group_report(ctx, g, &caps)?;
        ok &= r["regular_minus_trivial_in_cone"] == json!(true);
        ok &= r["huppert_predicts"] == json!(false) || r["m_group"] == json!(true);
        reports.push(r);
    }
    let count = reports.len();
    Ok((
        json!({"groups": reports, "count": count, "all_checks_hold": ok}),
        ok,
    ))
}
