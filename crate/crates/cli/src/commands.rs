use std::fmt::Write as _;

use anyhow::{bail, Result};
use bicross_core::hopf::{check_hopf_axioms, AxiomReport};
use bicross_core::json::{hopf_to_json, pair_to_json};
use bicross_core::matched_pair::{enumerate_matched_pairs_h4h4, PairLabel};
use bicross_core::morphism::{GroupReport, MorphismSolver};
use bicross_core::probe::{group_likes, integrals, is_semisimple, skew_primitives};
use bicross_core::{
    bicrossed_product, canonical_double_actions, canonical_pair, check_matched_pair, trivial_pair, Field, HopfAlgebra,
    MatchedPair, Matrix, Report, Side, Vector,
};
use serde::Serialize;

use crate::specs::{self, Ctx};
use crate::UsageError;

/// What a command produced: a JSON document, a human summary, and whether
/// every mathematical check passed.
pub struct Outcome {
    pub json: String,
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, text: String, passed: bool) -> Self {
        let json = serde_json::to_string_pretty(value).expect("serializable");
        Outcome { json, text, passed }
    }
}

fn progress(msg: &str) {
    eprintln!("[bicross] {msg}");
}

#[derive(Serialize)]
struct AxiomsJson<'a> {
    algebra: &'a str,
    field: String,
    dim: usize,
    passed: bool,
    report: &'a AxiomReport,
}

pub fn verify(ctx: &Ctx, spec: &str) -> Result<Outcome> {
    let h = specs::algebra(ctx, spec)?;
    let report = check_hopf_axioms(&h);
    let passed = report.passed();
    let mut text = format!("{spec} over {} (dim {})\n{report}", h.field(), h.dim());
    text.push_str(if passed { "all Hopf axioms hold\n" } else { "Hopf axioms FAILED\n" });
    let json = AxiomsJson { algebra: spec, field: h.field().to_string(), dim: h.dim(), passed, report: &report };
    Ok(Outcome::new(&json, text, passed))
}

#[derive(Serialize)]
struct SkewJson {
    a: String,
    b: String,
    dim: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct IntegralJson {
    side: Side,
    generator: String,
}

#[derive(Serialize)]
struct ProbeJson {
    algebra: String,
    field: String,
    dim: usize,
    /// `exhaustive` over a finite field, `basis` when only basis elements
    /// were tried.
    group_like_search: &'static str,
    group_likes: Vec<String>,
    skew_primitives: Vec<SkewJson>,
    integrals: Vec<IntegralJson>,
    unimodular: bool,
    semisimple: bool,
}

pub fn probe(ctx: &Ctx, spec: &str) -> Result<Outcome> {
    let h = specs::algebra(ctx, spec)?.verified()?;
    let (gl, search) = match h.field() {
        Field::Prime(_) => (group_likes(&h, None)?, "exhaustive"),
        Field::Rational => {
            let basis: Vec<_> = (0..h.dim()).map(|i| h.basis_vector(i)).collect();
            (group_likes(&h, Some(&basis))?, "basis")
        }
    };
    let fmt = |v: &Vector| h.format_vector(v);
    let mut skew = Vec::new();
    for a in &gl {
        for b in &gl {
            let space = skew_primitives(&h, a, b)?;
            if space.dim() > 0 {
                skew.push(SkewJson {
                    a: fmt(a),
                    b: fmt(b),
                    dim: space.dim(),
                    basis: space.vectors().iter().map(fmt).collect(),
                });
            }
        }
    }
    let left = integrals(&h, Side::Left)?;
    let right = integrals(&h, Side::Right)?;
    let semisimple = is_semisimple(&h)?;
    let json = ProbeJson {
        algebra: spec.into(),
        field: h.field().to_string(),
        dim: h.dim(),
        group_like_search: search,
        group_likes: gl.iter().map(fmt).collect(),
        skew_primitives: skew,
        integrals: vec![
            IntegralJson { side: Side::Left, generator: fmt(left.generator()) },
            IntegralJson { side: Side::Right, generator: fmt(right.generator()) },
        ],
        unimodular: left.unimodular,
        semisimple,
    };

    let mut text = format!("{spec} over {} (dim {})\n", json.field, json.dim);
    let _ = writeln!(text, "group-likes ({search}): {}", json.group_likes.join(", "));
    for s in &json.skew_primitives {
        let _ = writeln!(text, "P[{}, {}] (dim {}): {}", s.a, s.b, s.dim, s.basis.join(", "));
    }
    for i in &json.integrals {
        let _ = writeln!(text, "{:?} integral: {}", i.side, i.generator);
    }
    let _ = writeln!(text, "unimodular: {}\nsemisimple: {}", json.unimodular, json.semisimple);
    Ok(Outcome::new(&json, text, true))
}

/// Action values that differ from the trivial actions, one line each.
fn action_lines(pair: &MatchedPair) -> Vec<String> {
    let (a, h) = (pair.a(), pair.h());
    let mut lines = Vec::new();
    for i in 1..h.dim() {
        for j in 1..a.dim() {
            let (hv, av) = (h.basis_vector(i), a.basis_vector(j));
            let eps = h.counit_of(&hv);
            let l = pair.left().apply(&hv, &av);
            if l != av.scale(&eps) {
                lines.push(format!("{} ⊳ {} = {}", h.basis_names()[i], a.basis_names()[j], a.format_vector(&l)));
            }
            let r = pair.right().apply(&hv, &av);
            if r != hv.scale(&a.counit_of(&av)) {
                lines.push(format!("{} ⊲ {} = {}", h.basis_names()[i], a.basis_names()[j], h.format_vector(&r)));
            }
        }
    }
    lines
}

#[derive(Serialize)]
struct PairCheckJson<'a> {
    pair: &'a str,
    field: String,
    passed: bool,
    report: &'a Report,
}

pub fn mp_check(ctx: &Ctx, spec: &str) -> Result<Outcome> {
    let pair = specs::pair(ctx, spec)?;
    let report = check_matched_pair(&pair);
    let passed = report.passed();
    let mut text = format!("{spec} over {}\n{report}", pair.field());
    text.push_str(if passed { "matched pair axioms hold\n" } else { "matched pair axioms FAILED\n" });
    let json = PairCheckJson { pair: spec, field: pair.field().to_string(), passed, report: &report };
    Ok(Outcome::new(&json, text, passed))
}

pub fn mp_canonical(ctx: &Ctx) -> Result<Outcome> {
    let Some(l) = &ctx.lambda else {
        bail!(UsageError("mp canonical needs --lambda".into()));
    };
    let pair = specs::pair(ctx, &format!("canonical:{l}"))?;
    let mut text = format!("canonical pair, λ = {l} over {}\n", pair.field());
    for line in action_lines(&pair) {
        let _ = writeln!(text, "  {line}");
    }
    Ok(Outcome::new(&pair_to_json(&pair), text, true))
}

#[derive(Serialize)]
struct CensusJson {
    prime: u64,
    left_actions: usize,
    right_actions: usize,
    matched_pairs: usize,
    pairs: Vec<String>,
}

pub fn mp_census(prime: u64) -> Result<Outcome> {
    progress(&format!("enumerating matched pairs on (H4, H4) over F{prime}"));
    let c = enumerate_matched_pairs_h4h4(prime)?;
    let labels: Vec<String> = c.pairs.iter().map(|(l, _)| l.to_string()).collect();
    let passed = c.pairs.iter().all(|(l, _)| *l != PairLabel::Other);
    let json = CensusJson {
        prime,
        left_actions: c.left_actions.len(),
        right_actions: c.right_actions.len(),
        matched_pairs: c.pairs.len(),
        pairs: labels,
    };
    let text = format!(
        "F{prime}: {} left actions, {} right actions, {} matched pairs\n  {}\n",
        json.left_actions,
        json.right_actions,
        json.matched_pairs,
        json.pairs.join("\n  ")
    );
    Ok(Outcome::new(&json, text, passed))
}

fn verified(pair: MatchedPair) -> Result<MatchedPair> {
    Ok(if pair.is_verified() { pair } else { pair.verify()? })
}

pub fn bicross(ctx: &Ctx, spec: &str) -> Result<Outcome> {
    let pair = verified(specs::pair(ctx, spec)?)?;
    let e = bicrossed_product(&pair)?;
    let text = summary(&format!("bicrossed product of {spec}"), &e);
    Ok(Outcome::new(&hopf_to_json(&e), text, true))
}

fn summary(title: &str, h: &HopfAlgebra) -> String {
    let report = check_hopf_axioms(h);
    format!("{title} over {} (dim {})\nbasis: {}\n{report}", h.field(), h.dim(), h.basis_names().join(" "))
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

#[derive(Serialize)]
struct IsoJson {
    source: String,
    target: String,
    field: String,
    quadruples: usize,
    isomorphic: bool,
    /// Matrix rows of a bijective bialgebra map, when one exists.
    witness: Option<Vec<Vec<String>>>,
}

pub fn iso(ctx: &Ctx, src: &str, dst: &str) -> Result<Outcome> {
    let (s, d) = (verified(specs::pair(ctx, src)?)?, verified(specs::pair(ctx, dst)?)?);
    progress(&format!("solving morphism conditions {src} → {dst}"));
    let r = MorphismSolver::new().are_isomorphic(&s, &d)?;
    let json = IsoJson {
        source: src.into(),
        target: dst.into(),
        field: s.field().to_string(),
        quadruples: r.quadruples,
        isomorphic: r.isomorphic,
        witness: r.witness.as_ref().map(|(_, m)| matrix_rows(m)),
    };
    let verdict = if r.isomorphic { "isomorphic" } else { "not isomorphic" };
    let text = format!("{src} ⋈ vs {dst} ⋈ over {}: {verdict} ({} solved quadruples)\n", json.field, r.quadruples);
    Ok(Outcome::new(&json, text, true))
}

#[derive(Serialize)]
struct AutJson<'a> {
    pair: &'a str,
    field: String,
    group: &'a GroupReport,
}

pub fn aut(ctx: &Ctx, spec: &str) -> Result<Outcome> {
    let pair = verified(specs::pair(ctx, spec)?)?;
    progress(&format!("solving automorphisms of {spec}"));
    let g = MorphismSolver::new().automorphism_group(&pair)?;
    let mut text = format!(
        "Aut({spec} ⋈) over {}: order {}, {}, {} involution(s), {:?}\n",
        pair.field(),
        g.order,
        if g.abelian { "abelian" } else { "nonabelian" },
        g.involutions,
        g.parametrization
    );
    let _ = writeln!(
        text,
        "composition rules: {}/{} products {}",
        g.relations_checked,
        g.order * g.order,
        if g.relations_verified { "verified" } else { "FAILED" }
    );
    for e in &g.elements {
        let _ = writeln!(text, "  {} (order {})", e.label, e.order);
    }
    let json = AutJson { pair: spec, field: pair.field().to_string(), group: &g };
    Ok(Outcome::new(&json, text, g.relations_verified))
}

pub fn double(ctx: &Ctx, spec: &str, against: Option<&str>) -> Result<Outcome> {
    let h = specs::algebra(ctx, spec)?.verified()?;
    let pair = canonical_double_actions(&h)?;
    let d = bicrossed_product(&pair)?;
    let mut text = summary(&format!("D({spec})"), &d);
    for line in action_lines(&pair) {
        let _ = writeln!(text, "  {line}");
    }
    if let Some(other) = against {
        let target = verified(specs::pair(ctx, other)?)?;
        progress(&format!("comparing D({spec}) with {other} ⋈"));
        let r = MorphismSolver::new().are_isomorphic(&pair, &target)?;
        let _ = writeln!(text, "D({spec}) ≅ {other} ⋈: {}", r.isomorphic);
    }
    Ok(Outcome::new(&hopf_to_json(&d), text, true))
}

#[derive(Serialize)]
struct AutOrders {
    tensor: usize,
    h16_0: usize,
    h16_1: usize,
}

#[derive(Serialize)]
struct ReproduceJson {
    prime: u64,
    matched_pairs: usize,
    pairs: Vec<String>,
    bicrossed_products_verified: bool,
    iso_classes: usize,
    classes: Vec<Vec<String>>,
    aut_orders: AutOrders,
    automorphism_relations_verified: bool,
    double_is_h16_1: bool,
}

pub fn reproduce(prime: u64) -> Result<Outcome> {
    let f = Field::prime(prime)?;
    progress(&format!("census over F{prime}"));
    let census = enumerate_matched_pairs_h4h4(prime)?;
    let labels: Vec<String> = census.pairs.iter().map(|(l, _)| l.to_string()).collect();
    let pairs: Vec<MatchedPair> = census.pairs.iter().map(|(_, p)| p.clone()).collect();

    progress("building bicrossed products");
    let mut products_ok = census.pairs.iter().all(|(l, _)| *l != PairLabel::Other);
    for p in &pairs {
        products_ok &= check_hopf_axioms(&bicrossed_product(p)?).passed();
    }

    let mut solver = MorphismSolver::new();
    progress("partitioning into isomorphism classes");
    let classes = solver.iso_classes(&pairs)?;

    progress("computing automorphism groups");
    let groups = [trivial_pair(f)?, canonical_pair(f, &f.zero())?, canonical_pair(f, &f.one())?]
        .iter()
        .map(|p| solver.automorphism_group(p))
        .collect::<bicross_core::Result<Vec<_>>>()?;

    progress("identifying D(H4)");
    let double = canonical_double_actions(&bicross_core::presets::sweedler_h4(f)?)?;
    let double_is_h16_1 = solver.are_isomorphic(&double, &canonical_pair(f, &f.one())?)?.isomorphic;

    let relations_ok = groups.iter().all(|g| g.relations_verified);
    let json = ReproduceJson {
        prime,
        matched_pairs: pairs.len(),
        pairs: labels.clone(),
        bicrossed_products_verified: products_ok,
        iso_classes: classes.len(),
        classes: classes.iter().map(|c| c.iter().map(|&i| labels[i].clone()).collect()).collect(),
        aut_orders: AutOrders { tensor: groups[0].order, h16_0: groups[1].order, h16_1: groups[2].order },
        automorphism_relations_verified: relations_ok,
        double_is_h16_1,
    };
    let mut text = format!("F{prime}: {} matched pairs: {}\n", json.matched_pairs, labels.join(", "));
    let _ = writeln!(text, "bicrossed products pass the Hopf axioms: {products_ok}");
    let _ = writeln!(text, "{} isomorphism classes:", json.iso_classes);
    for c in &json.classes {
        let _ = writeln!(text, "  {{{}}}", c.join(", "));
    }
    let o = &json.aut_orders;
    let _ = writeln!(text, "|Aut|: tensor {}, H16,0 {}, H16,1 {}", o.tensor, o.h16_0, o.h16_1);
    let _ = writeln!(text, "automorphism composition rules verified: {relations_ok}");
    let _ = writeln!(text, "D(H4) ≅ H16,1: {double_is_h16_1}");
    Ok(Outcome::new(&json, text, products_ok && relations_ok))
}
