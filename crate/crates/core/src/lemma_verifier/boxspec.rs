//! Box grammar: `t=4..20,k=4..t,steps=10`.
//!
//! Items are comma separated. `name=lo..hi` ranges inclusively, `name=expr`
//! pins a value, and `steps=N` is shorthand for `u=0..N-1`. Bounds are sums
//! and differences of integers and earlier variables. Unset variables take the
//! lemma's defaults.

use num_traits::{One, ToPrimitive, Zero};

use super::{LemmaSpec, Tuple};
use crate::error::{usage, Result};
use crate::Big;

/// Upper limit on enumerated tuples.
pub const MAX_TUPLES: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Term {
    Lit(Big),
    Var(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Expr(Vec<(bool, Term)>);

#[derive(Clone, Debug, PartialEq, Eq)]
struct Item {
    name: String,
    lo: Expr,
    hi: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxSpec {
    source: String,
    items: Vec<Item>,
}

fn parse_literal(s: &str) -> Option<Big> {
    let clean: String = s.chars().filter(|c| *c != '_').collect();
    if let Some((m, e)) = clean.split_once(['e', 'E']) {
        let m: Big = m.parse().ok()?;
        let e: u32 = e.parse().ok()?;
        return Some(m * num_traits::pow(Big::from(10), e as usize));
    }
    clean.parse().ok()
}

fn parse_expr(s: &str) -> Result<Expr> {
    let s = s.trim();
    if s.is_empty() {
        return Err(usage("empty bound in box"));
    }
    let mut terms = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let push = |tok: &str, negative: bool, terms: &mut Vec<(bool, Term)>| -> Result<()> {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(usage(format!("dangling sign in bound `{s}`")));
        }
        let term = if tok.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            Term::Lit(parse_literal(tok).ok_or_else(|| usage(format!("bad integer `{tok}`")))?)
        } else if tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Term::Var(tok.to_string())
        } else {
            return Err(usage(format!("bad token `{tok}`")));
        };
        terms.push((negative, term));
        Ok(())
    };
    for (i, c) in s.char_indices() {
        if c == '+' || c == '-' {
            if current.trim().is_empty() && terms.is_empty() && i == 0 {
                negative = c == '-';
                continue;
            }
            push(&current, negative, &mut terms)?;
            current.clear();
            negative = c == '-';
        } else {
            current.push(c);
        }
    }
    push(&current, negative, &mut terms)?;
    Ok(Expr(terms))
}

impl Expr {
    fn eval(&self, env: &Tuple) -> Result<Big> {
        let mut acc = Big::zero();
        for (neg, term) in &self.0 {
            let v = match term {
                Term::Lit(v) => v.clone(),
                Term::Var(name) => env
                    .iter()
                    .find(|(k, _)| **k == name.as_str())
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| usage(format!("variable `{name}` used before it is bound")))?,
            };
            if *neg {
                acc -= v;
            } else {
                acc += v;
            }
        }
        Ok(acc)
    }
}

impl BoxSpec {
    pub fn parse(source: &str) -> Result<Self> {
        let mut items = Vec::new();
        for raw in source.split(',') {
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let (name, rhs) = raw.split_once('=').ok_or_else(|| usage(format!("box item `{raw}` lacks `=`")))?;
            let name = name.trim();
            let (lo, hi) = match rhs.split_once("..") {
                Some((lo, hi)) => (parse_expr(lo)?, parse_expr(hi)?),
                None => {
                    let e = parse_expr(rhs)?;
                    (e.clone(), e)
                }
            };
            if name == "steps" {
                let mut hi = hi;
                hi.0.push((true, Term::Lit(Big::one())));
                items.push(Item { name: "u".into(), lo: Expr(vec![(false, Term::Lit(Big::zero()))]), hi });
            } else {
                items.push(Item { name: name.to_string(), lo, hi });
            }
        }
        if items.is_empty() {
            return Err(usage("empty box"));
        }
        Ok(BoxSpec { source: source.to_string(), items })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// All tuples of the box in lexicographic order of the items.
    pub fn enumerate(&self, spec: &LemmaSpec) -> Result<Vec<Tuple>> {
        let mut resolved: Vec<(&'static str, &Item)> = Vec::new();
        for item in &self.items {
            let name = spec
                .box_vars
                .iter()
                .find(|v| **v == item.name)
                .ok_or_else(|| usage(format!("{} has no box variable `{}`; expected one of {:?}", spec.id, item.name, spec.box_vars)))?;
            if resolved.iter().any(|(n, _)| n == name) {
                return Err(usage(format!("box variable `{name}` given twice")));
            }
            resolved.push((name, item));
        }
        let mut base = Tuple::new();
        for (name, value) in spec.defaults {
            if !resolved.iter().any(|(n, _)| n == name) {
                base.insert(name, Big::from(*value));
            }
        }
        for var in spec.box_vars {
            if !base.contains_key(var) && !resolved.iter().any(|(n, _)| n == var) {
                return Err(usage(format!("box for {} must set `{var}`", spec.id)));
            }
        }
        let mut out = Vec::new();
        walk(&resolved, 0, &mut base, &mut out)?;
        Ok(out)
    }
}

fn walk(items: &[(&'static str, &Item)], depth: usize, env: &mut Tuple, out: &mut Vec<Tuple>) -> Result<()> {
    if depth == items.len() {
        if out.len() as u64 >= MAX_TUPLES {
            return Err(usage(format!("box exceeds {MAX_TUPLES} tuples")));
        }
        out.push(env.clone());
        return Ok(());
    }
    let (name, item) = items[depth];
    let lo = item.lo.eval(env)?;
    let hi = item.hi.eval(env)?;
    if (&hi - &lo).to_i64().map_or(hi > lo, |w| w as u64 >= MAX_TUPLES) {
        return Err(usage(format!("range of `{name}` is too wide")));
    }
    let mut v = lo;
    while v <= hi {
        env.insert(name, v.clone());
        walk(items, depth + 1, env, out)?;
        v += 1;
    }
    env.remove(name);
    Ok(())
}
