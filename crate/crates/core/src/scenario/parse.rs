use std::collections::{BTreeMap, HashMap};

use crate::defect::SpecialFiber;
use crate::error::{Error, Result};
use crate::invariants::{BranchComponent, OrbifoldConfig, SingularPointSpec};
use crate::rational::parse_rational;
use crate::singularity::AdeType;
use crate::surface::{BaseSurface, ClassCoords, DivisorClass};

use super::laurent::parse_laurent;
use super::{Analysis, Contraction, Directives, Expectation, Quantity, Request, ScenarioInstance};

#[derive(Debug, Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    col: usize,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, column, message: message.into() })
}

/// Splits on whitespace, keeping bracketed groups such as `(1, -2)` whole.
fn words(content: &str) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut depth = 0i32;
    for (col, (i, ch)) in content.char_indices().enumerate() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() && depth <= 0 {
            if let Some((s, c)) = start.take() {
                out.push(Word { text: &content[s..i], col: c + 1 });
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
    }
    if let Some((s, c)) = start {
        out.push(Word { text: &content[s..], col: c + 1 });
    }
    out
}

/// Column of `needle` inside `w`, assuming it is a byte slice of `w.text`.
fn col_within(w: Word<'_>, offset: usize) -> usize {
    w.col + w.text[..offset].chars().count()
}

struct KeyValue<'a> {
    key: &'a str,
    value: &'a str,
    word: Word<'a>,
    value_col: usize,
}

fn key_values<'a>(line: usize, ws: &[Word<'a>], allowed: &[&str], repeatable: &[&str]) -> Result<Vec<KeyValue<'a>>> {
    let mut out: Vec<KeyValue<'a>> = Vec::new();
    for &w in ws {
        let Some((key, value)) = w.text.split_once('=') else {
            return fail(line, w.col, format!("expected key=value, found `{}`", w.text));
        };
        if !allowed.contains(&key) {
            return fail(line, w.col, format!("unknown key `{key}`"));
        }
        if value.is_empty() {
            return fail(line, w.col, format!("missing value for `{key}`"));
        }
        if !repeatable.contains(&key) && out.iter().any(|kv| kv.key == key) {
            return fail(line, w.col, format!("duplicate key `{key}`"));
        }
        out.push(KeyValue { key, value, word: w, value_col: col_within(w, key.len() + 1) });
    }
    Ok(out)
}

fn find<'a, 'b>(kvs: &'b [KeyValue<'a>], key: &str) -> Option<&'b KeyValue<'a>> {
    kvs.iter().find(|kv| kv.key == key)
}

fn require<'a, 'b>(line: usize, at: Word<'_>, kvs: &'b [KeyValue<'a>], key: &str) -> Result<&'b KeyValue<'a>> {
    match find(kvs, key) {
        Some(kv) => Ok(kv),
        None => fail(line, at.col, format!("`{}` needs `{key}=`", at.text)),
    }
}

fn number<T: std::str::FromStr>(line: usize, kv: &KeyValue<'_>) -> Result<T> {
    kv.value.parse().or_else(|_| fail(line, kv.value_col, format!("invalid value `{}` for `{}`", kv.value, kv.key)))
}

fn int_list(line: usize, kv: &KeyValue<'_>) -> Result<Vec<u32>> {
    kv.value
        .split(',')
        .map(|x| {
            x.trim().parse().or_else(|_| fail(line, kv.value_col, format!("invalid list entry `{x}` in `{}`", kv.key)))
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
enum Mult {
    Fixed(u32),
    Param,
}

struct PendingComponent {
    id: String,
    class: DivisorClass,
    mult: Mult,
    genus: u32,
    removed: u32,
}

struct PendingPoint {
    id: String,
    ade: AdeType,
    branches: Vec<(String, usize)>,
    branches_col: usize,
    line: usize,
}

struct ParamDecl {
    values: Vec<i64>,
}

fn parse_param(line: usize, ws: &[Word<'_>]) -> Result<ParamDecl> {
    let sym = ws.get(1).map_or_else(|| fail(line, ws[0].col, "`param` needs a symbol"), Ok)?;
    if sym.text != "k" {
        return fail(line, sym.col, format!("unsupported parameter symbol `{}` (only `k`)", sym.text));
    }
    match ws.get(2) {
        Some(w) if w.text == "in" => {}
        Some(w) => return fail(line, w.col, format!("expected `in`, found `{}`", w.text)),
        None => return fail(line, sym.col, "expected `in {..}` after the symbol"),
    }
    let Some(&set) = ws.get(3) else {
        return fail(line, ws[2].col, "expected a value set `{..}`");
    };
    if let Some(extra) = ws.get(4) {
        return fail(line, extra.col, format!("unexpected `{}`", extra.text));
    }
    let inner = set
        .text
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .map_or_else(|| fail(line, set.col, format!("expected `{{..}}`, found `{}`", set.text)), Ok)?;
    let items: Vec<&str> = inner.split(',').map(str::trim).collect();
    let mut values: Vec<i64> = Vec::new();
    let bad = |item: &str| Error::Parse { line, column: set.col, message: format!("invalid parameter value `{item}`") };
    for (i, &item) in items.iter().enumerate() {
        if item == "..." {
            let prev = *values.last().ok_or_else(|| bad(item))?;
            let next: i64 = items.get(i + 1).and_then(|n| n.parse().ok()).ok_or_else(|| bad(item))?;
            values.extend(prev + 1..next);
        } else if let Some((lo, hi)) = item.split_once("..") {
            match (lo.trim().parse::<i64>(), hi.trim().parse::<i64>()) {
                (Ok(lo), Ok(hi)) if lo <= hi => values.extend(lo..=hi),
                _ => return Err(bad(item)),
            }
        } else {
            values.push(item.parse().map_err(|_| bad(item))?);
        }
    }
    if values.is_empty() {
        return fail(line, set.col, "empty parameter set");
    }
    let mut sorted = values.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != values.len() {
        return fail(line, set.col, "repeated parameter value");
    }
    if let Some(v) = values.iter().find(|&&v| v < 1) {
        return fail(line, set.col, format!("parameter value {v} must be positive"));
    }
    Ok(ParamDecl { values })
}

fn parse_class(line: usize, kv: &KeyValue<'_>, surface: BaseSurface) -> Result<DivisorClass> {
    let v = kv.value.trim();
    let coords = if let Some(inner) = v.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(a), Ok(b)) => ClassCoords::Pair(a, b),
                _ => return fail(line, kv.value_col, format!("invalid class `{v}`")),
            },
            _ => return fail(line, kv.value_col, format!("invalid class `{v}`")),
        }
    } else {
        match v.parse() {
            Ok(d) => ClassCoords::Degree(d),
            Err(_) => return fail(line, kv.value_col, format!("invalid class `{v}`")),
        }
    };
    DivisorClass::on(surface, coords).or_else(|e| fail(line, kv.value_col, format!("class `{v}` on {surface}: {e}")))
}

fn parse_expectation(line: usize, ws: &[Word<'_>], content: &str, has_param: bool) -> Result<Expectation> {
    let head = ws[0];
    let rest_start =
        content.char_indices().nth(head.col - 1 + head.text.chars().count()).map_or(content.len(), |(i, _)| i);
    let rest = &content[rest_start..];
    let rest_col = head.col + head.text.chars().count();
    let Some((lhs, rhs)) = rest.split_once('=') else {
        return fail(line, head.col, format!("`{}` needs `<quantity> = <value>`", head.text));
    };
    let q_text = lhs.trim();
    let q_col = rest_col + lhs.chars().take_while(|c| c.is_whitespace()).count();
    let quantity: Quantity = q_text.parse().or_else(|_| fail(line, q_col, format!("unknown quantity `{q_text}`")))?;
    let rhs_col = rest_col + lhs.chars().count() + 1;
    let expr = parse_laurent(rhs).or_else(|(off, msg)| {
        fail(line, rhs_col + rhs[..off].chars().count(), format!("in `{}`: {msg}", rhs.trim()))
    })?;
    if expr.uses_parameter() && !has_param {
        return fail(line, rhs_col, "`k` used without a preceding `param` line");
    }
    Ok(Expectation { quantity, expr })
}

fn parse_contract(line: usize, ws: &[Word<'_>]) -> Result<Contraction> {
    let mut c1sq = None;
    let mut c2 = None;
    let mut counts = BTreeMap::new();
    for &w in &ws[1..] {
        let Some((key, value)) = w.text.split_once('=') else {
            return fail(line, w.col, format!("expected key=value, found `{}`", w.text));
        };
        let value_col = col_within(w, key.len() + 1);
        let rational =
            || parse_rational(value).map_or_else(|| fail(line, value_col, format!("invalid rational `{value}`")), Ok);
        match key {
            "c1sq" if c1sq.is_none() => c1sq = Some(rational()?),
            "c2" if c2.is_none() => c2 = Some(rational()?),
            "c1sq" | "c2" => return fail(line, w.col, format!("duplicate key `{key}`")),
            _ => {
                let t: AdeType = key.parse().or_else(|_| fail(line, w.col, format!("unknown key `{key}`")))?;
                let n: u64 = value.parse().or_else(|_| fail(line, value_col, format!("invalid count `{value}`")))?;
                if counts.insert(t, n).is_some() {
                    return fail(line, w.col, format!("duplicate key `{key}`"));
                }
            }
        }
    }
    match (c1sq, c2) {
        (Some(c1sq), Some(c2)) => Ok(Contraction { c1sq, c2, counts }),
        _ => fail(line, ws[0].col, "`contract` needs `c1sq=` and `c2=`"),
    }
}

fn parse_request(line: usize, ws: &[Word<'_>]) -> Result<Request> {
    let head = ws[0];
    let Some(&kind) = ws.get(1) else {
        return fail(line, head.col, "`request` needs a kind");
    };
    let sub = |n: usize| ws.get(n).copied();
    let two_word = matches!(kind.text, "genus-bound" | "defect");
    let (name, rest_from, at) = if two_word {
        let Some(s) = sub(2) else {
            return fail(line, kind.col, format!("`{}` needs a variant", kind.text));
        };
        (format!("{} {}", kind.text, s.text), 3, s)
    } else {
        (kind.text.to_string(), 2, kind)
    };
    let rest = &ws[rest_from.min(ws.len())..];
    let kvs = |allowed: &[&str], repeatable: &[&str]| key_values(line, rest, allowed, repeatable);
    let req = match name.as_str() {
        "cover" => {
            let kv = kvs(&["d", "n"], &[])?;
            Request::Cover {
                d: number(line, require(line, at, &kv, "d")?)?,
                n: number(line, require(line, at, &kv, "n")?)?,
            }
        }
        "genus-bound plane" => {
            let kv = kvs(&["d", "n", "degC"], &[])?;
            Request::GenusBoundPlane {
                d: number(line, require(line, at, &kv, "d")?)?,
                n: number(line, require(line, at, &kv, "n")?)?,
                deg_c: find(&kv, "degC").map(|v| number(line, v)).transpose()?,
            }
        }
        "genus-bound hypersurface" => {
            let kv = kvs(&["d", "n", "ambient"], &[])?;
            Request::GenusBoundHypersurface {
                d: number(line, require(line, at, &kv, "d")?)?,
                n: number(line, require(line, at, &kv, "n")?)?,
                ambient: number(line, require(line, at, &kv, "ambient")?)?,
            }
        }
        "genus-bound hirzebruch" => {
            let kv = kvs(&["N", "a", "b", "n", "c", "dd"], &[])?;
            let get = |k: &str| -> Result<i64> { number(line, require(line, at, &kv, k)?) };
            Request::GenusBoundHirzebruch {
                big_n: get("N")?,
                a: get("a")?,
                b: get("b")?,
                n: get("n")?,
                c: get("c")?,
                dd: get("dd")?,
            }
        }
        "defect cover" => {
            let kv = kvs(&["dim", "q", "m"], &[])?;
            let get = |k: &str| -> Result<u32> { number(line, require(line, at, &kv, k)?) };
            Request::DefectCover { dim: get("dim")?, q: get("q")?, m: get("m")? }
        }
        "defect product" => {
            let kv = kvs(&["fibers1", "fibers2", "special"], &["special"])?;
            let mut special = Vec::new();
            for s in kv.iter().filter(|kv| kv.key == "special") {
                let Some((name, marks)) = s.value.split_once(':') else {
                    return fail(line, s.value_col, format!("expected `<name>:<marks>`, found `{}`", s.value));
                };
                let marks = if marks.is_empty() {
                    Vec::new()
                } else {
                    let sub = KeyValue {
                        key: s.key,
                        value: marks,
                        word: s.word,
                        value_col: s.value_col + name.chars().count() + 1,
                    };
                    int_list(line, &sub)?
                };
                special.push(SpecialFiber { name: name.to_string(), marks });
            }
            Request::DefectProduct {
                fibers1: int_list(line, require(line, at, &kv, "fibers1")?)?,
                fibers2: int_list(line, require(line, at, &kv, "fibers2")?)?,
                special,
            }
        }
        "gate" => {
            let kv = kvs(&["dim", "targets"], &[])?;
            let t = require(line, at, &kv, "targets")?;
            let targets = t
                .value
                .split(',')
                .map(|item| {
                    let parsed = item.split_once(':').and_then(|(d, m)| Some((d.parse().ok()?, m.parse().ok()?)));
                    parsed.map_or_else(
                        || fail(line, t.value_col, format!("expected `<degree>:<mult>`, found `{item}`")),
                        Ok,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            Request::Gate { dim: number(line, require(line, at, &kv, "dim")?)?, targets }
        }
        "nodal" => {
            let kv = kvs(&["d", "l"], &[])?;
            Request::Nodal {
                d: number(line, require(line, at, &kv, "d")?)?,
                l: number(line, require(line, at, &kv, "l")?)?,
            }
        }
        "obstruction" => {
            let kv = kvs(&["n"], &[])?;
            Request::Obstruction { n: number(line, require(line, at, &kv, "n")?)? }
        }
        _ => return fail(line, at.col, format!("unknown request `{name}`")),
    };
    Ok(req)
}

/// Parses a scenario document into one instance per parameter value.
pub fn parse_scenario(text: &str) -> Result<Vec<ScenarioInstance>> {
    parse_inner(text, None)
}

/// Parses a parameterised scenario at a single value of `k`, which need
/// not belong to the declared set.
pub fn parse_scenario_at(text: &str, k: i64) -> Result<ScenarioInstance> {
    let mut v = parse_inner(text, Some(k))?;
    Ok(v.remove(0))
}

fn parse_inner(text: &str, k_override: Option<i64>) -> Result<Vec<ScenarioInstance>> {
    let mut surface: Option<(BaseSurface, usize)> = None;
    let mut param: Option<ParamDecl> = None;
    let mut components: Vec<PendingComponent> = Vec::new();
    let mut component_ids: HashMap<String, usize> = HashMap::new();
    let mut points: Vec<PendingPoint> = Vec::new();
    let mut point_ids: HashMap<String, usize> = HashMap::new();
    let mut directives = Directives::default();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let ws = words(content);
        let Some(&head) = ws.first() else { continue };
        let need_surface = |what: &str| -> Result<BaseSurface> {
            surface
                .map(|(s, _)| s)
                .map_or_else(|| fail(line, head.col, format!("`{what}` before the `surface` line")), Ok)
        };
        match head.text {
            "surface" => {
                if surface.is_some() {
                    return fail(line, head.col, "duplicate `surface` line");
                }
                let Some(&w) = ws.get(1) else {
                    return fail(line, head.col, "`surface` needs P2 or F<N>");
                };
                if let Some(extra) = ws.get(2) {
                    return fail(line, extra.col, format!("unexpected `{}`", extra.text));
                }
                let s: BaseSurface = w
                    .text
                    .parse()
                    .or_else(|_| fail(line, w.col, format!("unknown surface `{}` (expected P2 or F<N>)", w.text)))?;
                surface = Some((s, line));
            }
            "param" => {
                if param.is_some() {
                    return fail(line, head.col, "only one `param` line is allowed");
                }
                param = Some(parse_param(line, &ws)?);
            }
            "component" => {
                let s = need_surface("component")?;
                let Some(&id) = ws.get(1).filter(|w| !w.text.contains('=')) else {
                    return fail(line, head.col, "`component` needs an id");
                };
                if component_ids.insert(id.text.to_string(), line).is_some() {
                    return fail(line, id.col, format!("duplicate component id `{}`", id.text));
                }
                let kv = key_values(line, &ws[2..], &["class", "mult", "genus", "removed"], &[])?;
                let class = parse_class(line, require(line, head, &kv, "class")?, s)?;
                let mkv = require(line, head, &kv, "mult")?;
                let mult = if mkv.value == "k" {
                    if param.is_none() {
                        return fail(line, mkv.value_col, "`k` used without a preceding `param` line");
                    }
                    Mult::Param
                } else {
                    let m: u32 = number(line, mkv)?;
                    if m == 0 {
                        return fail(line, mkv.value_col, "multiplicity must be positive");
                    }
                    Mult::Fixed(m)
                };
                let genus = find(&kv, "genus").map(|v| number(line, v)).transpose()?.unwrap_or(0);
                let removed = find(&kv, "removed").map(|v| number(line, v)).transpose()?.unwrap_or(0);
                components.push(PendingComponent { id: id.text.to_string(), class, mult, genus, removed });
            }
            "singular" => {
                need_surface("singular")?;
                let Some(&id) = ws.get(1).filter(|w| !w.text.contains('=')) else {
                    return fail(line, head.col, "`singular` needs an id");
                };
                if point_ids.insert(id.text.to_string(), line).is_some() {
                    return fail(line, id.col, format!("duplicate singular point id `{}`", id.text));
                }
                let kv = key_values(line, &ws[2..], &["type", "branches"], &[])?;
                let tkv = require(line, head, &kv, "type")?;
                let ade: AdeType = tkv
                    .value
                    .parse()
                    .or_else(|_| fail(line, tkv.value_col, format!("unsupported singularity type `{}`", tkv.value)))?;
                let bkv = require(line, head, &kv, "branches")?;
                let mut branches = Vec::new();
                let mut offset = 0;
                for b in bkv.value.split(',') {
                    branches.push((b.to_string(), bkv.value_col + bkv.value[..offset].chars().count()));
                    offset += b.len() + 1;
                }
                points.push(PendingPoint { id: id.text.to_string(), ade, branches, branches_col: bkv.value_col, line });
            }
            "analyze" => {
                if ws.len() == 1 {
                    return fail(
                        line,
                        head.col,
                        "`analyze` needs at least one of chern, segre, jet2, geography, horikawa",
                    );
                }
                for w in &ws[1..] {
                    let a: Analysis =
                        w.text.parse().or_else(|_| fail(line, w.col, format!("unknown analysis `{}`", w.text)))?;
                    if !directives.analyses.contains(&a) {
                        directives.analyses.push(a);
                    }
                }
            }
            "cover" => {
                if directives.cover.is_some() {
                    return fail(line, head.col, "duplicate `cover` line");
                }
                let kv = key_values(line, &ws[1..], &["degree"], &[])?;
                let dkv = require(line, head, &kv, "degree")?;
                let deg: u32 = number(line, dkv)?;
                if deg == 0 {
                    return fail(line, dkv.value_col, "covering degree must be positive");
                }
                directives.cover = Some(deg);
            }
            "contract" => {
                if directives.contract.is_some() {
                    return fail(line, head.col, "duplicate `contract` line");
                }
                directives.contract = Some(parse_contract(line, &ws)?);
            }
            "expect" => directives.expectations.push(parse_expectation(line, &ws, content, param.is_some())?),
            "claim" => directives.claims.push(parse_expectation(line, &ws, content, param.is_some())?),
            "request" => directives.requests.push(parse_request(line, &ws)?),
            other => return fail(line, head.col, format!("unknown directive `{other}`")),
        }
    }

    let Some((surface, surface_line)) = surface else {
        return fail(1, 1, "missing `surface` line");
    };

    for p in &points {
        if p.branches.len() != p.ade.branch_count() {
            return fail(
                p.line,
                p.branches_col,
                format!(
                    "singular point `{}` of type {} needs {} branch(es), got {}",
                    p.id,
                    p.ade,
                    p.ade.branch_count(),
                    p.branches.len()
                ),
            );
        }
        if let Some((b, col)) = p.branches.iter().find(|(b, _)| !component_ids.contains_key(b)) {
            return fail(p.line, *col, format!("unknown component `{b}`"));
        }
    }
    for e in directives.expectations.iter().chain(&directives.claims) {
        use super::Scope;
        let missing = match e.quantity.scope {
            Scope::Cover => directives.cover.is_none().then_some("cover"),
            Scope::Contract => directives.contract.is_none().then_some("contract"),
            Scope::Base => None,
        };
        if let Some(what) = missing {
            return fail(surface_line, 1, format!("`{}` refers to a missing `{what}` line", e.quantity));
        }
    }

    let values: Vec<Option<i64>> = match (&param, k_override) {
        (Some(_), Some(k)) if k < 1 => return Err(Error::usage(format!("parameter value {k} must be positive"))),
        (Some(_), Some(k)) => vec![Some(k)],
        (None, Some(_)) => return Err(Error::usage("the scenario declares no parameter")),
        (Some(p), None) => p.values.iter().copied().map(Some).collect(),
        (None, None) => vec![None],
    };
    let mut out = Vec::with_capacity(values.len());
    for k in values {
        let comps = components
            .iter()
            .map(|c| {
                let mult = match c.mult {
                    Mult::Fixed(m) => m,
                    Mult::Param => u32::try_from(k.expect("param checked")).or_else(|_| {
                        fail(
                            surface_line,
                            1,
                            format!("parameter value {} is too large for a multiplicity", k.unwrap_or(0)),
                        )
                    })?,
                };
                Ok(BranchComponent::new(c.id.clone(), c.class, mult, c.genus, c.removed))
            })
            .collect::<Result<Vec<_>>>()?;
        let pts = points
            .iter()
            .map(|p| SingularPointSpec::new(p.id.clone(), p.ade, p.branches.iter().map(|(b, _)| b.clone())))
            .collect();
        let config = OrbifoldConfig::new(surface, comps, pts).or_else(|e| fail(surface_line, 1, e.to_string()))?;
        out.push(ScenarioInstance { param: k, config, directives: directives.clone() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_scenario(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn bare_plane() {
        let v = parse_scenario("surface P2\n").unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].config.components().is_empty());
    }

    #[test]
    fn param_expansion() {
        let text = "surface F0\nparam k in {2,3,...,5}\ncomponent F class=(0,1) mult=k\n";
        let v = parse_scenario(text).unwrap();
        let ks: Vec<_> = v.iter().map(|i| i.param.unwrap()).collect();
        assert_eq!(ks, [2, 3, 4, 5]);
        assert_eq!(v[2].config.components()[0].mult, 4);
        assert_eq!(parse_scenario("surface F0\nparam k in {2..4, 7}\n").unwrap().len(), 4);
    }

    #[test]
    fn errors_name_the_token() {
        let (l, c, m) = parse_err("surface P2\ncomponent L class=1 mult=2\nsingular p type=E9 branches=L");
        assert_eq!((l, c), (3, 17));
        assert!(m.contains("`E9`"), "{m}");
        let (l, _, m) = parse_err("surface P2\ncomponent L class=1 mult=2 colour=red");
        assert_eq!(l, 2);
        assert!(m.contains("`colour`"));
        let (_, c, m) = parse_err("surface P2\ncomponent L class=1 mult=2\nsingular p type=A1 branches=L,M");
        assert_eq!(c, 31);
        assert!(m.contains("`M`"));
        let (_, _, m) = parse_err("surface P2\ncomponent L class=1 mult=2\nsingular p type=A1 branches=L");
        assert!(m.contains("needs 2 branch"));
        let (_, _, m) = parse_err("surface P2\ncomponent L class=1 mult=2\ncomponent L class=1 mult=2");
        assert!(m.contains("duplicate component id `L`"));
        let (_, _, m) = parse_err("surface F2\ncomponent L class=1 mult=2");
        assert!(m.contains("class `1`"));
        let (_, _, m) = parse_err("surface P2\ncomponent L class=1 mult=k");
        assert!(m.contains("param"));
        parse_err("component L class=1 mult=2\nsurface P2");
        parse_err("surface P2\nexpect c2 = 1/(k+1)\nparam k in {2}");
        parse_err("surface P2\nexpect cover.c2 = 1");
        parse_err("surface P3");
    }

    #[test]
    fn requests_parse_and_echo() {
        for line in [
            "cover d=8 n=2",
            "genus-bound plane d=12 n=3 degC=2",
            "genus-bound hypersurface d=6 n=2 ambient=2",
            "genus-bound hirzebruch N=1 a=6 b=6 n=2 c=0 dd=3",
            "defect cover dim=2 q=6 m=6",
            "defect product fibers1=2,2,2,2,2 fibers2=2,2,2,2,2 special=G1:2,2",
            "gate dim=2 targets=1:5,1:5",
            "nodal d=5 l=31",
            "obstruction n=5",
        ] {
            let v = parse_scenario(&format!("surface P2\nrequest {line}\n")).unwrap();
            assert_eq!(v[0].directives.requests[0].to_string(), line);
        }
    }

    #[test]
    fn grouped_words() {
        let ws = words("component C class=(1, -2) mult=2");
        assert_eq!(ws[2].text, "class=(1, -2)");
        assert_eq!(ws[3].col, 27);
    }
}
