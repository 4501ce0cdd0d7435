//! Subcommand bodies. Each returns a JSON value, a one-line summary and
//! whether every checked property held.

use std::path::Path;
use std::sync::Arc;

use artinchar::certify::{
    artin_takagi, certify_level, certify_quotient_uvdw, certify_rr2, dedekind_symbol,
    HolomorphyCertificate,
};
use artinchar::chartab::io::{load_table, TableFile};
use artinchar::classfun::VirtualCharacter;
use artinchar::heilbronn::{
    aramata_brauer, check_stark_restriction, foote_murty_gap, gap_not_one_check,
    huppert_predicts_m_group, is_supersolvable, level_inequality, search_admissible,
    stark_lemma_check, theta_split, truncated_inequality, uvdw_gap, AssignmentFile, HeilbronnData,
    Mode, OrderAssignment,
};
use artinchar::monomial::{
    cone_membership, decompose_uvdw, decompose_uvdw_level, dual_check, irreducible_levels,
    is_m_group, monomial_family, pairing_levels,
};
use artinchar::supercharacter::{
    enumerate_scts, hendrickson_product, super_frobenius_check, superinduce, verify_sct,
    SuperclassFunction, TheoryFile,
};
use artinchar::{ClassFunction, Error, Group, Result};
use serde_json::{json, Value};

use crate::input::{character, read_json, resolve_group, resolve_theory, Context};

pub struct Outcome {
    pub value: Value,
    pub summary: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(value: Value, summary: String) -> Self {
        Outcome {
            value,
            summary,
            ok: true,
        }
    }

    fn checked(value: Value, summary: String, ok: bool) -> Self {
        Outcome { value, summary, ok }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn gens(h: &Group) -> Vec<Vec<usize>> {
    h.generators().iter().map(|p| p.one_based()).collect()
}

fn decomposition(ctx: &Context, f: &ClassFunction) -> Result<VirtualCharacter> {
    let t = ctx.table(f.group())?;
    f.rehome(t.group())?.decompose(&t)
}

fn class_function_value(ctx: &Context, f: &ClassFunction) -> Result<Value> {
    Ok(json!({
        "class_function": to_value(f)?,
        "decomposition": to_value(&decomposition(ctx, f)?)?,
    }))
}

pub fn grp_info(g: &Group) -> Result<Outcome> {
    let series = g.derived_series();
    let classes: Vec<Value> = g
        .conjugacy_classes()
        .iter()
        .map(|c| json!({"rep": c.representative.one_based(), "size": c.size()}))
        .collect();
    let value = json!({
        "group": g.name(),
        "degree": g.degree(),
        "generators": gens(g),
        "order": g.order(),
        "num_classes": g.num_classes(),
        "classes": classes,
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "solvable": g.is_solvable(),
        "supersolvable": g.is_solvable() && is_supersolvable(g),
        "derived_length": g.derived_length(),
        "derived_series_orders": series.iter().map(|h| h.order()).collect::<Vec<_>>(),
        "center_order": g.center().order(),
    });
    let summary = format!(
        "{}: order {}, {} classes, {}",
        g.name(),
        g.order(),
        g.num_classes(),
        if g.is_solvable() {
            "solvable"
        } else {
            "not solvable"
        }
    );
    Ok(Outcome::ok(value, summary))
}

pub fn grp_subgroups(g: &Group, max_order: Option<usize>) -> Result<Outcome> {
    let subs = g.subgroups()?;
    let list: Vec<Value> = subs
        .iter()
        .filter(|h| max_order.is_none_or(|m| h.order() <= m))
        .map(|h| {
            json!({
                "order": h.order(),
                "generators": gens(h),
                "normal": g.is_normal(h),
                "abelian": h.is_abelian(),
                "cyclic": h.exponent() as usize == h.order(),
            })
        })
        .collect();
    let summary = format!("{}: {} subgroups listed", g.name(), list.len());
    Ok(Outcome::ok(
        json!({"group": g.name(), "subgroups": list}),
        summary,
    ))
}

pub fn chartab_compute(ctx: &Context, g: &Group) -> Result<Outcome> {
    let t = ctx.table(g)?;
    t.verify()?;
    let summary = format!(
        "{}: {} irreducibles, degrees {:?}",
        g.name(),
        t.len(),
        t.degrees()
    );
    let mut value = to_value(&TableFile::from_table(&t))?;
    value["degrees"] = json!(t.degrees());
    Ok(Outcome::ok(value, summary))
}

pub fn chartab_verify(path: &Path) -> Result<Outcome> {
    let t = load_table(path)?;
    let verdict = t.verify();
    let ok = verdict.is_ok();
    let value = json!({
        "group": t.group().name(),
        "irreducibles": t.len(),
        "valid": ok,
        "error": verdict.err().map(|e| e.to_string()),
    });
    Ok(Outcome::checked(
        value,
        format!("{}: table valid = {ok}", t.group().name()),
        ok,
    ))
}

pub fn cf_induce(ctx: &Context, g: &Group, h: &Group, phi: &ClassFunction) -> Result<Outcome> {
    let ind = phi.induce(g)?;
    let mut value = class_function_value(ctx, &ind)?;
    value["subgroup_order"] = json!(h.order());
    Ok(Outcome::ok(
        value,
        format!("induced degree {}", ind.degree()),
    ))
}

pub fn cf_restrict(ctx: &Context, h: &Group, chi: &ClassFunction) -> Result<Outcome> {
    let res = chi.restrict(h)?;
    let summary = format!("restricted to a subgroup of order {}", h.order());
    Ok(Outcome::ok(class_function_value(ctx, &res)?, summary))
}

pub fn cf_inflate(
    ctx: &Context,
    g: &Group,
    n: &Group,
    chi: Option<usize>,
    coeffs: Option<&str>,
) -> Result<Outcome> {
    let q = g.quotient(n)?;
    let f = character(ctx, &q.group, chi, coeffs)?;
    let inf = f.inflate(g, &q)?;
    let summary = format!("inflated from a quotient of order {}", q.group.order());
    Ok(Outcome::ok(class_function_value(ctx, &inf)?, summary))
}

pub fn cf_twist(ctx: &Context, a: &ClassFunction, b: &ClassFunction) -> Result<Outcome> {
    let t = a.twist(b)?;
    Ok(Outcome::ok(
        class_function_value(ctx, &t)?,
        format!("twist of degree {}", t.degree()),
    ))
}

pub fn cf_decompose(ctx: &Context, f: &ClassFunction) -> Result<Outcome> {
    let d = decomposition(ctx, f)?;
    let t = ctx.table(f.group())?;
    let rebuilt = d.to_class_function(&t).rehome(f.group())?;
    let ok = rebuilt == *f;
    let mut value = class_function_value(ctx, f)?;
    value["reconstructs"] = json!(ok);
    value["character"] = json!(d.is_character());
    Ok(Outcome::checked(
        value,
        format!("decomposition reconstructs = {ok}"),
        ok,
    ))
}

pub fn cf_level(g: &Group, f: Option<&ClassFunction>) -> Result<Outcome> {
    let series = g.derived_series();
    let value = match f {
        Some(f) => json!({"group": g.name(), "level": f.level(&series)?}),
        None => json!({"group": g.name(), "levels": irreducible_levels(g)?}),
    };
    Ok(Outcome::ok(value, format!("{}: levels computed", g.name())))
}

pub fn mono_uvdw(g: &Group, h: &Group) -> Result<Outcome> {
    let d = decompose_uvdw(g, h)?;
    let summary = format!(
        "{} monomial terms, 1_G coefficient {}",
        d.terms.len(),
        d.residual_trivial_coeff
    );
    Ok(Outcome::ok(to_value(&d)?, summary))
}

pub fn mono_level(g: &Group, h: &Group, i: usize) -> Result<Outcome> {
    let d = decompose_uvdw_level(g, h, i)?;
    let pairing = pairing_levels(g, h, &ClassFunction::trivial(h), i)?;
    let value =
        json!({"decomposition": to_value(&d)?, "pairings": to_value(&pairing)?, "level": i});
    Ok(Outcome::ok(
        value,
        format!("level {i}: {} monomial terms", d.terms.len()),
    ))
}

pub fn mono_mgroup(ctx: &Context, g: &Group) -> Result<Outcome> {
    let r = is_m_group(g, ctx.strategy)?;
    let huppert = huppert_predicts_m_group(g)?;
    let consistent = !huppert || r.is_m_group;
    let mut value = to_value(&r)?;
    value["group"] = json!(g.name());
    value["huppert_predicts"] = json!(huppert);
    value["consistent"] = json!(consistent);
    let summary = format!("{}: M-group = {}", g.name(), r.is_m_group);
    Ok(Outcome::checked(value, summary, consistent))
}

pub fn mono_cone(ctx: &Context, g: &Group, psi: Option<&ClassFunction>) -> Result<Outcome> {
    let t = ctx.table(g)?;
    let v = match psi {
        Some(f) => decomposition(ctx, f)?,
        None => {
            let mut d = t.degrees();
            d[0] -= 1;
            VirtualCharacter::from_ints(&d)
        }
    };
    let fam = monomial_family(g, ctx.strategy)?;
    let outcome = cone_membership(&v, &fam)?;
    let dual = dual_check(&v, &fam);
    let family: Vec<Value> = fam
        .members
        .iter()
        .map(|m| json!({"subgroup_order": m.term.subgroup.order(), "multiplicities": m.multiplicities}))
        .collect();
    let value = json!({
        "group": g.name(),
        "psi": to_value(&v)?,
        "outcome": to_value(&outcome)?,
        "dual_nonnegative": dual,
        "family": family,
    });
    let summary = format!(
        "{}: member = {}, dual check = {dual}",
        g.name(),
        outcome.is_member()
    );
    Ok(Outcome::ok(value, summary))
}

fn assignment(ctx: &Context, path: &Path) -> Result<OrderAssignment> {
    let file: AssignmentFile = read_json(path)?;
    let g = resolve_group(&file.group)?;
    let t = ctx.table(&g)?;
    let base = file.base_vector(t.len())?;
    let mut a = OrderAssignment::with_data(HeilbronnData::new(&g)?, base, file.mode)?;
    a.label = file.label;
    Ok(a)
}

pub fn heilbronn_verify(ctx: &Context, path: &Path) -> Result<Outcome> {
    let a = assignment(ctx, path)?;
    let g = a.group().clone();
    let fm = foote_murty_gap(&a);
    let ab = aramata_brauer(&a);
    let stark = stark_lemma_check(&a);
    let restriction = check_stark_restriction(&a)?;
    let mut ok = restriction.holds;
    if a.weak {
        ok &= fm.holds && ab.holds && stark.holds;
    }
    let mut value = json!({
        "assignment": to_value(&a)?,
        "foote_murty": to_value(&fm)?,
        "aramata_brauer": to_value(&ab)?,
        "stark_lemma": to_value(&stark)?,
        "stark_restriction": to_value(&restriction)?,
    });
    if a.mode == Mode::Arithmetic && g.is_solvable() {
        let truncated = a
            .data
            .linear
            .iter()
            .map(|&c| {
                Ok(json!({"chi0": c, "inequality": to_value(&truncated_inequality(&a, c)?)?}))
            })
            .collect::<Result<Vec<_>>>()?;
        let dl = g.derived_length().unwrap_or(0).max(1);
        let levels = (1..=dl)
            .map(|i| {
                let li = level_inequality(&a, i)?;
                let gap = gap_not_one_check(&a, i)?;
                if a.ach3 {
                    ok &= li.holds && gap.not_one && gap.divisible;
                }
                Ok(json!({"level": i, "inequality": to_value(&li)?, "gap": to_value(&gap)?}))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut min_gap = i64::MAX;
        for h in &a.data.subgroups {
            min_gap = min_gap.min(uvdw_gap(&a, h)?);
        }
        if a.ach3 {
            ok &= min_gap >= 0;
            ok &= truncated
                .iter()
                .all(|t| t["inequality"]["holds"] == json!(true));
        }
        value["truncated"] = json!(truncated);
        value["levels"] = json!(levels);
        value["min_uvdw_gap"] = json!(min_gap);
    }
    let summary = format!(
        "{}: weak = {}, ach3 = {}, all checks hold = {ok}",
        g.name(),
        a.weak,
        a.ach3
    );
    Ok(Outcome::checked(value, summary, ok))
}

pub fn heilbronn_search(ctx: &Context, g: &Group, bound: i64, mode: Mode) -> Result<Outcome> {
    let t = ctx.table(g)?;
    let r = search_admissible(&t, bound, mode, ctx.strategy)?;
    let summary = format!(
        "{}: {} candidates, {} admissible, {} violations",
        g.name(),
        r.candidates,
        r.admissible,
        r.total_violations
    );
    let ok = r.total_violations == 0;
    let mut value = to_value(&r)?;
    value["violations"] = json!(r.total_violations);
    Ok(Outcome::checked(value, summary, ok))
}

pub fn heilbronn_split(ctx: &Context, path: &Path) -> Result<Outcome> {
    let a = assignment(ctx, path)?;
    let s = theta_split(&a);
    let ok = s.reconstructs;
    let value = json!({"assignment": to_value(&a)?, "split": to_value(&s)?});
    Ok(Outcome::checked(
        value,
        format!("split reconstructs = {ok}"),
        ok,
    ))
}

pub fn sct_verify(path: &Path) -> Result<Outcome> {
    let file: TheoryFile = read_json(path)?;
    let g = resolve_group(&file.group)?;
    let r = verify_sct(&g, &file.x, &file.k)?;
    let value = json!({"group": g.name(), "report": to_value(&r)?});
    Ok(Outcome::checked(
        value,
        format!("{}: theory valid = {}", g.name(), r.valid),
        r.valid,
    ))
}

pub fn sct_enumerate(ctx: &Context, g: &Group) -> Result<Outcome> {
    let all = enumerate_scts(g, ctx.strategy)?;
    let value = json!({"group": g.name(), "count": all.len(), "theories": to_value(&all)?});
    Ok(Outcome::ok(
        value,
        format!("{}: {} supercharacter theories", g.name(), all.len()),
    ))
}

pub fn sct_product(
    g: &Group,
    n: &Group,
    normal_theory: &str,
    quotient_theory: &str,
) -> Result<Outcome> {
    let q = g.quotient(n)?;
    let th_n = resolve_theory(n, normal_theory)?;
    let th_q = resolve_theory(&q.group, quotient_theory)?;
    let th = hendrickson_product(g, &th_n, &th_q, &q)?;
    let f = th.to_file();
    let report = verify_sct(g, &f.x, &f.k)?;
    let value = json!({"theory": to_value(&th)?, "report": to_value(&report)?});
    let summary = format!(
        "{}: product with {} parts, valid = {}",
        g.name(),
        th.len(),
        report.valid
    );
    Ok(Outcome::checked(value, summary, report.valid))
}

pub fn sct_superinduce(g: &Group, h: &Group, theory_g: &str, theory_h: &str) -> Result<Outcome> {
    let th_g = Arc::new(resolve_theory(g, theory_g)?);
    let th_h = Arc::new(resolve_theory(h, theory_h)?);
    let induced = th_h
        .supercharacters()
        .iter()
        .map(|tau| {
            let s = superinduce(&SuperclassFunction::from_class_function(&th_h, tau)?, &th_g)?;
            to_value(&s)
        })
        .collect::<Result<Vec<_>>>()?;
    let reciprocity = super_frobenius_check(&th_h, &th_g)?;
    let value = json!({
        "group": g.name(),
        "subgroup_order": h.order(),
        "superinduced": induced,
        "reciprocity": reciprocity,
    });
    Ok(Outcome::checked(
        value,
        format!("super Frobenius reciprocity = {reciprocity}"),
        reciprocity,
    ))
}

fn certificate(c: HolomorphyCertificate) -> Result<Outcome> {
    c.verify()?;
    let summary = format!(
        "status {:?}, {} monomial terms",
        c.status,
        c.decomposition.terms.len()
    );
    Ok(Outcome::ok(to_value(&c)?, summary))
}

pub fn certify_uvdw(g: &Group, h: &Group) -> Result<Outcome> {
    certificate(certify_quotient_uvdw(g, h)?)
}

pub fn certify_rr2_cmd(g: &Group, h: &Group, psi: &ClassFunction) -> Result<Outcome> {
    certificate(certify_rr2(g, h, psi)?)
}

pub fn certify_level_cmd(g: &Group, h: &Group, psi: &ClassFunction, i: usize) -> Result<Outcome> {
    certificate(certify_level(g, h, psi, i)?)
}

pub fn certify_takagi(g: &Group, h: Option<&Group>) -> Result<Outcome> {
    let zeta_k = artin_takagi(g)?;
    let mut value = json!({"group": g.name(), "zeta_K": to_value(&zeta_k)?});
    if let Some(h) = h {
        value["subgroup_order"] = json!(h.order());
        value["zeta_fixed_field"] = to_value(&dedekind_symbol(g, h)?)?;
    }
    let ok = zeta_k.to_class_function()? == ClassFunction::regular(g);
    Ok(Outcome::checked(
        value,
        format!("{}: zeta_K symbol equals Reg = {ok}", g.name()),
        ok,
    ))
}

/// Error categories for the exit code.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_verification_failure() {
        1
    } else {
        2
    }
}
