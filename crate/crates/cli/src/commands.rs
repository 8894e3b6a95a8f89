use std::path::Path;
use std::sync::Arc;

use bicrossed::classify::{
    aut_group_profile, brute_force_automorphisms, brute_force_isomorphism, build_h4n,
    enumerate_matched_pairs_h4_cn, exponent_label, h4n_pair, iso_classes, iso_criterion, iso_witness,
    klein_pair, klein_survey, partition_matrix, root_of_pair, H4nSpec, KLEIN_SIGNS,
};
use bicrossed::hopf::{dual_hopf, group_algebra, sweedler_h4, tensor_hopf, verify_hopf_axioms};
use bicrossed::linmap::{coz1_group, format_vector, unitary_cocentral_maps, Budget, LinMap};
use bicrossed::morphisms::{check_double_morphism_data, enumerate_morphisms, DoubleMorphismData};
use bicrossed::products::{
    bicrossed_product, drinfeld_double, drinfeld_double_group, factorize, MatchedPair,
};
use bicrossed::{FieldSpec, FiniteGroupTable, HopfAlgebra, Matrix};
use serde_json::{json, Value as Json};

use crate::io::{read_hopf, read_json, read_pair, same_field, write_json};
use crate::report::{CliError, CliResult, Report};

fn describe(h: &HopfAlgebra) -> String {
    format!("dim = {}, field = {}, hash = {}", h.dim(), h.field(), h.structure_hash())
}

fn axiom_report(h: &HopfAlgebra, rep: &mut Report) {
    let r = verify_hopf_axioms(h);
    rep.line(r.to_string());
    let part = |f: &Option<bicrossed::hopf::Failure>| match f {
        None => json!("ok"),
        Some(f) => json!(f.to_string()),
    };
    rep.json["axioms"] = json!({
        "algebra": part(&r.algebra),
        "coalgebra": part(&r.coalgebra),
        "bialgebra": part(&r.bialgebra),
        "antipode": part(&r.antipode),
    });
    if let Some((name, f)) = r.first_failure() {
        rep.failure = Some(format!("{name}: {f}"));
    }
}

fn write_out(out: Option<&Path>, v: &Json, rep: &mut Report) -> CliResult<()> {
    if let Some(path) = out {
        write_json(path, v)?;
        rep.line(format!("wrote {}", path.display()));
    }
    Ok(())
}

pub fn verify(file: &Path) -> CliResult<Report> {
    let h = read_hopf(file)?;
    let mut rep = Report::new(json!({"dim": h.dim(), "hash": h.structure_hash()}));
    axiom_report(&h, &mut rep);
    Ok(rep)
}

fn built(h: &HopfAlgebra, out: Option<&Path>) -> CliResult<Report> {
    let mut rep = Report::new(json!({"dim": h.dim(), "hash": h.structure_hash()}));
    rep.line(describe(h));
    axiom_report(h, &mut rep);
    write_out(out, &h.to_json(), &mut rep)?;
    Ok(rep)
}

pub fn build_h4n_cmd(n: u64, t: u64, field: FieldSpec, out: Option<&Path>, pair_out: Option<&Path>) -> CliResult<Report> {
    let spec = H4nSpec::new(n, t, field)?;
    let mut rep = built(&build_h4n(&spec)?, out)?;
    write_out(pair_out, &h4n_pair(&spec)?.to_json(), &mut rep)?;
    Ok(rep)
}

pub fn build_tensor(a: &Path, b: &Path, out: Option<&Path>) -> CliResult<Report> {
    let (a, b) = (read_hopf(a)?, read_hopf(b)?);
    same_field(a.field(), b.field())?;
    built(&tensor_hopf(&a, &b)?, out)
}

pub fn build_dual(h: &Path, out: Option<&Path>) -> CliResult<Report> {
    built(&dual_hopf(&*read_hopf(h)?), out)
}

pub fn build_group(g: &FiniteGroupTable, field: FieldSpec, out: Option<&Path>) -> CliResult<Report> {
    built(&group_algebra(g, field), out)
}

fn pair_check(mp: &MatchedPair, rep: &mut Report) -> bool {
    let r = mp.verify();
    rep.json["matched_pair"] = json!(r.to_string());
    match r.first_failure() {
        None => {
            rep.line("matched pair: ok");
            true
        }
        Some((axiom, idx)) => {
            rep.line(format!("matched pair: {r}"));
            rep.failure = Some(format!("matched pair: {axiom} fails at {idx:?}"));
            false
        }
    }
}

pub fn bicrossed(pair: &Path, out: Option<&Path>) -> CliResult<Report> {
    let mp = read_pair(pair)?;
    let mut rep = Report::new(json!({}));
    if !pair_check(&mp, &mut rep) {
        return Ok(rep);
    }
    let e = bicrossed_product(&mp)?;
    rep.json["dim"] = json!(e.dim());
    rep.json["hash"] = json!(e.structure_hash());
    rep.line(format!("product: {}", describe(&e)));
    axiom_report(&e, &mut rep);
    write_out(out, &e.to_json(), &mut rep)?;
    Ok(rep)
}

fn doubled(mp: &MatchedPair, d: &HopfAlgebra, out: Option<&Path>, pair_out: Option<&Path>) -> CliResult<Report> {
    let mut rep = Report::new(json!({"dim": d.dim(), "hash": d.structure_hash()}));
    rep.line(format!("double: {}", describe(d)));
    pair_check(mp, &mut rep);
    axiom_report(d, &mut rep);
    write_out(out, &d.to_json(), &mut rep)?;
    write_out(pair_out, &mp.to_json(), &mut rep)?;
    Ok(rep)
}

pub fn double_group(g: &FiniteGroupTable, field: FieldSpec, out: Option<&Path>, pair_out: Option<&Path>) -> CliResult<Report> {
    let (mp, d) = drinfeld_double_group(g, field)?;
    doubled(&mp, &d, out, pair_out)
}

pub fn double_hopf(h: &Path, out: Option<&Path>, pair_out: Option<&Path>) -> CliResult<Report> {
    let (mp, d) = drinfeld_double(&*read_hopf(h)?)?;
    doubled(&mp, &d, out, pair_out)
}

/// An image file holds the source algebra under `dom` and the matrix of
/// the embedding into `E` under `matrix`.
fn read_image(path: &Path, e: &Arc<HopfAlgebra>) -> CliResult<LinMap> {
    let v = read_json(path)?;
    let bad = |m: String| CliError::Usage(format!("{}: {m}", path.display()));
    let dom = v
        .get("dom")
        .ok_or_else(|| bad("missing \"dom\" algebra".into()))?;
    let dom = Arc::new(HopfAlgebra::from_json(dom).map_err(|e| bad(e.to_string()))?);
    same_field(dom.field(), e.field())?;
    LinMap::from_json(&v, dom, e.clone()).map_err(|e| bad(e.to_string()))
}

/// Lines `h |> a = ...` for the entries where the action differs from the
/// trivial one.
fn action_lines(mp: &MatchedPair) -> (Vec<String>, Vec<String>) {
    let (a, h) = (mp.a(), mp.h());
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..h.dim() {
        for j in 0..a.dim() {
            let triv_l = bicrossed::linalg::scale(&h.counit()[i], &a.basis(j));
            if mp.left(i, j) != triv_l.as_slice() {
                left.push(format!("{} |> {} = {}", h.labels()[i], a.labels()[j], format_vector(a, mp.left(i, j))));
            }
            let triv_r = bicrossed::linalg::scale(&a.counit()[j], &h.basis(i));
            if mp.right(i, j) != triv_r.as_slice() {
                right.push(format!("{} <| {} = {}", h.labels()[i], a.labels()[j], format_vector(h, mp.right(i, j))));
            }
        }
    }
    (left, right)
}

fn push_actions(mp: &MatchedPair, rep: &mut Report) {
    let (left, right) = action_lines(mp);
    for (name, lines) in [("left action |>", &left), ("right action <|", &right)] {
        if lines.is_empty() {
            rep.line(format!("{name}: trivial"));
        } else {
            rep.line(format!("{name}:"));
            for l in lines.iter() {
                rep.line(format!("  {l}"));
            }
        }
    }
    rep.json["left_nontrivial"] = json!(left);
    rep.json["right_nontrivial"] = json!(right);
}

pub fn factorize_cmd(e: &Path, a_image: &Path, h_image: &Path, out: Option<&Path>) -> CliResult<Report> {
    let e = read_hopf(e)?;
    let i = read_image(a_image, &e)?;
    let j = read_image(h_image, &e)?;
    let mp = factorize(&e, &i, &j)?;
    let mut rep = Report::new(json!({"dim_a": mp.a().dim(), "dim_h": mp.h().dim()}));
    rep.line(format!("E = A H with dim A = {}, dim H = {}", mp.a().dim(), mp.h().dim()));
    pair_check(&mp, &mut rep);
    push_actions(&mp, &mut rep);
    write_out(out, &mp.to_json(), &mut rep)?;
    Ok(rep)
}

pub fn morphisms(source: &Path, target: &Path, stabilize_a: bool, isomorphisms: bool) -> CliResult<Report> {
    let mp = read_pair(source)?;
    let mp2 = read_pair(target)?;
    same_field(mp.a().field(), mp2.a().field())?;
    if stabilize_a && !mp.a().same_structure(mp2.a()) {
        return Err(CliError::Usage("--stabilize-a needs the same A on both sides".into()));
    }
    let budget = Budget::from_env();
    let all = enumerate_morphisms(&mp, &mp2, &budget)?;
    let total = all.len();
    let id_a = Matrix::identity(mp.a().field(), mp.a().dim());
    let kept: Vec<_> = all
        .into_iter()
        .filter(|m| !isomorphisms || m.psi.is_bijective())
        .filter(|m| {
            !stabilize_a
                || (m.quadruple.u.matrix() == &id_a
                    && m.quadruple.p.matrix() == LinMap::trivial(mp.a().clone(), mp2.h().clone()).expect("same field").matrix())
        })
        .collect();
    let mut rep = Report::new(json!({"total": total, "selected": kept.len()}));
    rep.line(format!("hopf maps = {total}, selected = {}", kept.len()));
    let dom = kept.first().map(|m| m.psi.dom().clone());
    let (da, dh) = (mp.a().dim(), mp.h().dim());
    let (ua, uh) = (mp.a().unit_index(), mp.h().unit_index());
    let mut listed = Vec::new();
    for (k, m) in kept.iter().enumerate() {
        let dom = dom.as_ref().expect("nonempty");
        let mut gens: Vec<usize> = Vec::new();
        if let Some(uh) = uh {
            gens.extend((0..da).map(|i| i * dh + uh));
        }
        if let Some(ua) = ua {
            for g in (0..dh).map(|j| ua * dh + j) {
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
        }
        let images: Vec<String> = gens
            .iter()
            .map(|&g| format!("{} -> {}", dom.labels()[g], format_vector(m.psi.cod(), &m.psi.column(g))))
            .collect();
        let bij = if m.psi.is_bijective() { "iso" } else { "map" };
        rep.line(format!("psi{k} ({bij}): {}", images.join(", ")));
        listed.push(json!({"bijective": m.psi.is_bijective(), "quadruple": m.quadruple.to_json(), "psi": m.psi.to_json()}));
    }
    rep.json["morphisms"] = json!(listed);
    Ok(rep)
}

pub fn coz1(h: &Path, a: &Path) -> CliResult<Report> {
    let (h, a) = (read_hopf(h)?, read_hopf(a)?);
    same_field(h.field(), a.field())?;
    let budget = Budget::from_env();
    let maps = unitary_cocentral_maps(&h, &a, &budget)?;
    let g = coz1_group(&h, &a, maps)?;
    let mut rep = Report::new(g.to_json());
    rep.line(format!("order = {}, abelian = {}", g.order(), if g.is_abelian() { "yes" } else { "no" }));
    rep.line("table:");
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(|k| format!("r{k}")).collect();
        rep.line(format!("  {}", cells.join(" ")));
    }
    for l in g.describe() {
        rep.line(l);
    }
    Ok(rep)
}

pub fn classify_h4n(n: u64, field: FieldSpec) -> CliResult<Report> {
    bicrossed::classify::H4nSpec::new(n, 0, field)?;
    let classes = iso_classes(n, field)?;
    let matrix = partition_matrix(n, field)?;
    let mut rep = Report::new(json!({
        "n": n,
        "nu": classes.nu,
        "classes": classes.count,
        "representatives": classes.representative_labels(),
        "class_of": classes.class_of.iter().map(|&e| exponent_label(e)).collect::<Vec<_>>(),
        "partition": matrix,
    }));
    rep.line(classes.to_string());
    let labels: Vec<String> = (0..classes.nu).map(exponent_label).collect();
    let w = labels.iter().map(String::len).max().unwrap_or(1).max(1);
    rep.line(format!("{:w$}  {}", "", labels.iter().map(|l| format!("{l:>w$}")).collect::<Vec<_>>().join(" ")));
    for (l, row) in matrix.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|&b| format!("{:>w$}", if b { "*" } else { "." })).collect();
        rep.line(format!("{:>w$}  {}", labels[l], cells.join(" ")));
    }
    rep.line(format!(
        "class of each exponent: {}",
        classes
            .class_of
            .iter()
            .enumerate()
            .map(|(t, &c)| format!("{} -> {}", labels[t], exponent_label(c)))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(rep)
}

pub fn classify_pairs(n: u64, field: FieldSpec) -> CliResult<Report> {
    let pairs = enumerate_matched_pairs_h4_cn(n, field)?;
    let mut rep = Report::new(json!({"n": n, "pairs": pairs.len()}));
    rep.line(format!("matched pairs (H4, k[C{n}]) over {field}: {}", pairs.len()));
    let mut roots = Vec::new();
    for (k, mp) in pairs.iter().enumerate() {
        let root = root_of_pair(mp);
        let shape = match &root {
            Some(w) if mp.is_right_trivial() => format!("<| trivial, c |> x = {w} x"),
            _ => "not of diagonal shape".to_string(),
        };
        rep.line(format!("pair {k}: {shape}"));
        roots.push(root.map(|w| w.to_string()));
    }
    rep.json["roots"] = json!(roots);
    Ok(rep)
}

pub fn classify_iso(l: u64, t: u64, n: u64, field: FieldSpec, brute: bool) -> CliResult<Report> {
    let v = iso_criterion(l, t, n, field)?;
    let (a, b) = (exponent_label(l), exponent_label(t));
    let mut rep = Report::new(json!({"l": l, "t": t, "n": n, "isomorphic": v.isomorphic, "s": v.witness_s, "twisted": v.twisted}));
    let how = match v.witness_s {
        Some(s) if v.twisted => format!(" (s = {s}, c -> c^s g)"),
        Some(s) => format!(" (s = {s})"),
        None => String::new(),
    };
    let verdict = if v.isomorphic { "isomorphic" } else { "not isomorphic" };
    rep.line(format!("H(n={n}, {a}) vs H(n={n}, {b}): {verdict}{how}"));
    if v.isomorphic {
        match iso_witness(l, t, n, field)? {
            Some(_) => {
                rep.line("witness: verified Hopf isomorphism");
            }
            None => {
                rep.failure = Some("the criterion's witness is not a Hopf isomorphism".into());
            }
        }
    }
    if brute {
        let b = brute_force_isomorphism(l, t, n, field, &Budget::from_env())?;
        rep.line(format!(
            "search: {} ({} Hopf maps examined)",
            if b.iso.is_some() { "isomorphic" } else { "not isomorphic" },
            b.morphisms_examined
        ));
        rep.json["search_isomorphic"] = json!(b.iso.is_some());
        if b.iso.is_some() != v.isomorphic {
            rep.failure = Some("search and criterion disagree".into());
        }
    }
    Ok(rep)
}

pub fn aut_h4n(n: u64, t: u64, field: FieldSpec, brute: bool) -> CliResult<Report> {
    H4nSpec::new(n, t, field)?;
    let p = aut_group_profile(n, t, field)?;
    let set = if p.profile.uses_tilde() { &p.profile.u_tilde } else { &p.profile.u_t };
    let mut rep = Report::new(json!({"structure": p.structure, "order": p.order, "units": set}));
    rep.line(p.to_string());
    let list: Vec<String> = set.iter().map(u64::to_string).collect();
    rep.line(format!("units = {{{}}}", list.join(", ")));
    if brute {
        let found = brute_force_automorphisms(n, t, field, &Budget::from_env())?;
        rep.line(format!("search: {} automorphisms", found.len()));
        rep.json["search_order"] = json!(found.len());
        if p.order != Some(found.len() as u64) {
            rep.failure = Some("searched automorphism count differs from the predicted order".into());
        }
    }
    Ok(rep)
}

pub fn klein(field: FieldSpec) -> CliResult<Report> {
    let s = klein_survey(field, &Budget::from_env())?;
    let mut rep = Report::new(json!({"pairs": s.pairs.len()}));
    rep.line(format!("matched pairs (H4, k[C2 x C2]) over {field}: {}", s.pairs.len()));
    let mut rows = Vec::new();
    for (k, mp) in s.pairs.iter().enumerate() {
        let table = match s.table_match[k] {
            Some(m) => {
                let (x, y) = KLEIN_SIGNS[m];
                format!("table {} (a |> x = {x} x, b |> x = {y} x)", m + 1)
            }
            None if mp.is_left_trivial() && mp.is_right_trivial() => "trivial actions".to_string(),
            None => "no listed table".to_string(),
        };
        let iso = s.witnesses[k].is_some();
        rep.line(format!(
            "pair {k}: {table}; product isomorphic to H4 (x) k[C2 x C2]: {}",
            if iso { "yes" } else { "no" }
        ));
        rows.push(json!({"table": s.table_match[k].map(|m| m + 1), "isomorphic_to_tensor": iso}));
    }
    rep.json["survey"] = json!(rows);
    if !s.all_products_trivial {
        rep.failure = Some("some product has no isomorphism onto the tensor product".into());
    }
    Ok(rep)
}

pub fn double_hom(g: &FiniteGroupTable, h: &FiniteGroupTable, field: FieldSpec, data: Option<&Path>) -> CliResult<Report> {
    let d = match data {
        Some(path) => DoubleMorphismData::from_json(&read_json(path)?, g, h, field)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => {
            if g != h {
                return Err(CliError::Usage("the identity data need the same group on both sides".into()));
            }
            DoubleMorphismData::identity(g, field)
        }
    };
    let r = check_double_morphism_data(&d, g, h)?;
    let mut rep = Report::new(json!({"valid": r.is_valid()}));
    match (&r.failure, &r.psi) {
        (Some((c, idx)), _) => {
            rep.line(format!("condition {c:?} fails at {idx:?}: {c}"));
            rep.failure = Some(format!("{c:?} fails at {idx:?}"));
        }
        (None, Some(psi)) => {
            rep.line("conditions: all hold");
            rep.line(format!("psi: verified Hopf map, bijective = {}", if psi.is_bijective() { "yes" } else { "no" }));
            rep.json["psi"] = psi.to_json();
        }
        (None, None) => unreachable!("valid data always carry psi"),
    }
    Ok(rep)
}

/// Writes a fixture, reads it back and re-verifies it.
fn export(h: &HopfAlgebra, out: &Path) -> CliResult<Report> {
    write_json(out, &h.to_json())?;
    let back = read_hopf(out)?;
    let mut rep = Report::new(json!({"dim": back.dim(), "hash": back.structure_hash()}));
    rep.line(format!("wrote {}: {}", out.display(), describe(&back)));
    axiom_report(&back, &mut rep);
    if !back.same_structure(h) || back.labels() != h.labels() {
        rep.failure = Some("re-read fixture differs from the exported one".into());
    }
    Ok(rep)
}

pub fn export_h4(field: FieldSpec, out: &Path) -> CliResult<Report> {
    if field.characteristic() == 2 {
        return Err(CliError::Usage("H4 needs odd characteristic".into()));
    }
    export(&sweedler_h4(field), out)
}

pub fn export_h4n(n: u64, t: u64, field: FieldSpec, out: &Path) -> CliResult<Report> {
    export(&build_h4n(&H4nSpec::new(n, t, field)?)?, out)
}

pub fn export_double_group(g: &FiniteGroupTable, field: FieldSpec, out: &Path) -> CliResult<Report> {
    export(&drinfeld_double_group(g, field)?.1, out)
}

/// Pair 0 has trivial actions; pairs 1 to 3 follow the sign tables.
pub fn export_klein(pair: usize, field: FieldSpec, out: &Path) -> CliResult<Report> {
    let mp = match pair {
        0 => {
            let a = Arc::new(sweedler_h4(field));
            let kg = Arc::new(group_algebra(&FiniteGroupTable::klein(), field));
            MatchedPair::trivial(a, kg)?
        }
        1..=3 => klein_pair(KLEIN_SIGNS[pair - 1], field)?,
        _ => return Err(CliError::Usage("--pair must be 0, 1, 2 or 3".into())),
    };
    export(&bicrossed_product(&mp)?, out)
}
