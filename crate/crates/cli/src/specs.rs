//! Algebra and matched-pair specifiers accepted on the command line.

use std::path::Path;

use anyhow::{bail, Context, Result};
use bicross_core::hopf::{dual, tensor_product};
use bicross_core::json::{hopf_from_str, pair_from_str};
use bicross_core::presets::{group_algebra_c2, h16_lambda, sweedler_h4, sweedler_h4_capital};
use bicross_core::{canonical_double_actions, canonical_pair, drinfeld_double, trivial_pair};
use bicross_core::{Field, HopfAlgebra, MatchedPair, Scalar};

use crate::UsageError;

pub const ALGEBRA_HELP: &str = "h4, H4, kc2, h4xh4, h16:<λ>, double, dual:<spec>, or a JSON file";
pub const PAIR_HELP: &str = "trivial, canonical:<λ> (alias h16:<λ>), double, double:<spec>, or a JSON file";

pub struct Ctx {
    pub field: Field,
    pub lambda: Option<String>,
}

impl Ctx {
    fn lambda(&self, inline: Option<&str>) -> Result<Scalar> {
        let text = match (inline, &self.lambda) {
            (Some(s), _) => s,
            (None, Some(s)) => s.as_str(),
            (None, None) => return Err(UsageError("λ missing: use h16:<λ> or --lambda".into()).into()),
        };
        self.field.parse(text).map_err(|e| UsageError(format!("bad λ {text:?} over {}: {e}", self.field)).into())
    }
}

fn split(spec: &str) -> (&str, Option<&str>) {
    match spec.split_once(':') {
        Some((head, rest)) => (head, Some(rest)),
        None => (spec, None),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

/// Resolves an algebra specifier. Algebras loaded from files are returned
/// unchecked so `verify` can report on broken input.
pub fn algebra(ctx: &Ctx, spec: &str) -> Result<HopfAlgebra> {
    let f = ctx.field;
    let h = match split(spec) {
        ("h4", None) => sweedler_h4(f)?,
        ("H4", None) => sweedler_h4_capital(f)?,
        ("kc2", None) => group_algebra_c2(f)?,
        ("h4xh4", None) => tensor_product(&sweedler_h4(f)?, &sweedler_h4(f)?)?,
        ("h16", l) => h16_lambda(f, &ctx.lambda(l)?)?,
        ("double", None) => drinfeld_double(&sweedler_h4(f)?)?,
        ("dual", Some(inner)) => dual(&algebra(ctx, inner)?.verified()?)?,
        _ if Path::new(spec).is_file() => {
            hopf_from_str(&read(spec)?).map_err(|e| UsageError(format!("{spec}: {e}")))?
        }
        _ => bail!(UsageError(format!("unknown algebra {spec:?}; expected {ALGEBRA_HELP}"))),
    };
    Ok(h)
}

/// Resolves a pair specifier. Pairs loaded from files are returned
/// unverified.
pub fn pair(ctx: &Ctx, spec: &str) -> Result<MatchedPair> {
    let f = ctx.field;
    let p = match split(spec) {
        ("trivial" | "tensor", None) => trivial_pair(f)?,
        ("canonical" | "h16", l) => canonical_pair(f, &ctx.lambda(l)?)?,
        ("double", None) => canonical_double_actions(&sweedler_h4(f)?)?,
        ("double", Some(inner)) => canonical_double_actions(&algebra(ctx, inner)?.verified()?)?,
        _ if Path::new(spec).is_file() => {
            pair_from_str(&read(spec)?).map_err(|e| UsageError(format!("{spec}: {e}")))?
        }
        _ => bail!(UsageError(format!("unknown pair {spec:?}; expected {PAIR_HELP}"))),
    };
    Ok(p)
}
