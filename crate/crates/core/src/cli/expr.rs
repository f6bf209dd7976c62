//! Module expressions for `orbits`:
//!
//! ```text
//! perm(G, p)  deleted(G, p)  natural(G)
//! dual(M)  tensor(M, M)  factor(M, d)
//! ```
//!
//! `G` is a group reference (`catalog:NAME` or a `.grp` path); `factor` takes the first
//! composition factor of dimension `d`; `natural` is the matrix action of `GL(4,2)` or of
//! the `SL(2,3)` complement of an affine catalog group. A bare `.grp` path with `kind mat` is a module.

use crate::catalog::{self, CatalogError};
use crate::ctformat::{parse_group_spec, GroupBody};
use crate::modfp::{chop, deleted_perm_module, dual, perm_module, tensor, FpModuleAction, ModError};
use crate::perm::{Permutation, PermutationGroup};

#[derive(Debug, thiserror::Error)]
pub enum ExprError {
    #[error("at column {col}: {message}")]
    Syntax { col: usize, message: String },
    #[error("{0}")]
    Bad(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Module(#[from] ModError),
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Atom(String),
    Call(String, Vec<Node>),
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ExprError {
        ExprError::Syntax { col: self.pos + 1, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// An atom runs to the next top-level `,` or `)`, so `catalog:GL(4,2)` stays whole.
    fn atom(&mut self) -> String {
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.s[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    self.pos = start + i;
                    return self.s[start..self.pos].trim().to_string();
                }
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    self.pos = start + i;
                    return self.s[start..self.pos].trim().to_string();
                }
                _ => {}
            }
        }
        self.pos = self.s.len();
        self.s[start..].trim().to_string()
    }

    fn node(&mut self) -> Result<Node, ExprError> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let name_len = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
        let name = &rest[..name_len];
        let is_call = FUNCTIONS.contains(&name) && rest[name_len..].trim_start().starts_with('(');
        if !is_call {
            let a = self.atom();
            if a.is_empty() {
                return Err(self.err("expected an argument"));
            }
            return Ok(Node::Atom(a));
        }
        self.pos += name_len;
        self.skip_ws();
        self.pos += 1;
        let mut args = Vec::new();
        loop {
            args.push(self.node()?);
            self.skip_ws();
            match self.s[self.pos..].chars().next() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(Node::Call(name.to_string(), args));
                }
                _ => return Err(self.err("expected `,` or `)`")),
            }
        }
    }
}

const FUNCTIONS: [&str; 6] = ["perm", "deleted", "natural", "dual", "tensor", "factor"];

fn parse(s: &str) -> Result<Node, ExprError> {
    let mut p = Parser { s, pos: 0 };
    let n = p.node()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(n)
}

/// Resolve `catalog:NAME` or a `.grp` path to a permutation group.
pub fn resolve_group(r: &str) -> Result<PermutationGroup, CatalogError> {
    match r.strip_prefix("catalog:") {
        Some(name) => catalog::build(name),
        None => catalog::load_group_file(std::path::Path::new(r)),
    }
}

fn number(n: &Node) -> Result<u64, ExprError> {
    match n {
        Node::Atom(a) => a.parse().map_err(|_| ExprError::Bad(format!("expected a number, found {a:?}"))),
        Node::Call(f, _) => Err(ExprError::Bad(format!("expected a number, found {f}(...)"))),
    }
}

fn group_arg(n: &Node) -> Result<PermutationGroup, ExprError> {
    match n {
        Node::Atom(a) => Ok(resolve_group(a)?),
        Node::Call(f, _) => Err(ExprError::Bad(format!("expected a group, found {f}(...)"))),
    }
}

fn arity(f: &str, args: &[Node], k: usize) -> Result<(), ExprError> {
    if args.len() != k {
        return Err(ExprError::Bad(format!("{f} takes {k} argument(s), found {}", args.len())));
    }
    Ok(())
}

/// Module given by a `.grp` file with `kind mat`; the group order comes from the action
/// on all vectors.
fn matrix_file(path: &str) -> Result<FpModuleAction, ExprError> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io { path: path.into(), message: e.to_string() })?;
    let spec = parse_group_spec(&text).map_err(|source| CatalogError::Format { path: path.into(), source })?;
    let GroupBody::Mat { prime, dim, gens } = spec.body else {
        return Err(ExprError::Bad(format!("{path} is a permutation group; wrap it in perm(...) or deleted(...)")));
    };
    let size = prime.checked_pow(dim as u32).filter(|&s| s <= 1 << 20).ok_or_else(|| ExprError::Bad(format!("{prime}^{dim} vectors are too many to determine the group order")))?;
    let index = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &x| acc * prime + x);
    let perms = gens
        .iter()
        .map(|g| {
            let images = (0..size)
                .map(|i| {
                    let v: Vec<u64> = (0..dim).map(|j| i / prime.pow(j as u32) % prime).collect();
                    index(&g.vec_mul(&v)) as u32
                })
                .collect();
            Permutation::from_images(images).map_err(CatalogError::from)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let order = PermutationGroup::new(size as usize, perms).map_err(CatalogError::from)?.order_u64();
    if let Some(expected) = spec.expected_order {
        if expected != order {
            return Err(CatalogError::OrderMismatch { name: spec.name, expected, found: order.to_string() }.into());
        }
    }
    Ok(FpModuleAction::new(prime, dim, gens, order)?)
}

fn eval(n: &Node, seed: u64) -> Result<FpModuleAction, ExprError> {
    let (f, args) = match n {
        Node::Atom(a) if a.ends_with(".grp") => return matrix_file(a),
        Node::Atom(a) => return Err(ExprError::Bad(format!("{a:?} is not a module; try perm({a}, p)"))),
        Node::Call(f, args) => (f.as_str(), args.as_slice()),
    };
    match f {
        "perm" | "deleted" => {
            arity(f, args, 2)?;
            let g = group_arg(&args[0])?;
            let p = number(&args[1])?;
            if !crate::ff::is_prime(p) {
                return Err(ExprError::Bad(format!("{p} is not prime")));
            }
            Ok(if f == "perm" { perm_module(&g, p) } else { deleted_perm_module(&g, p) })
        }
        "natural" => {
            arity(f, args, 1)?;
            match &args[0] {
                Node::Atom(a) if catalog::lookup(a.trim_start_matches("catalog:")).ok().map(|e| e.name) == Some("GL(4,2)") => Ok(catalog::gl42_module()),
                Node::Atom(a) => Ok(catalog::affine_complement(a.trim_start_matches("catalog:"))?),
                _ => Err(ExprError::Bad("natural(...) takes a catalog group".into())),
            }
        }
        "dual" => {
            arity(f, args, 1)?;
            Ok(dual(&eval(&args[0], seed)?))
        }
        "tensor" => {
            arity(f, args, 2)?;
            Ok(tensor(&eval(&args[0], seed)?, &eval(&args[1], seed)?)?)
        }
        "factor" => {
            arity(f, args, 2)?;
            let m = eval(&args[0], seed)?;
            let d = number(&args[1])? as usize;
            let factors = chop(&m, seed)?;
            let dims: Vec<String> = factors.iter().map(|f| format!("{}^{}", f.module.n, f.multiplicity)).collect();
            factors
                .into_iter()
                .find(|f| f.module.n == d)
                .map(|f| f.module)
                .ok_or_else(|| ExprError::Bad(format!("no composition factor of dimension {d} (factors {})", dims.join(" "))))
        }
        _ => unreachable!("parser only accepts known functions"),
    }
}

/// Parse and build a module expression; `seed` drives composition-factor search.
pub fn module_from_expr(s: &str, seed: u64) -> Result<FpModuleAction, ExprError> {
    eval(&parse(s)?, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_calls() {
        let n = parse("factor(perm(catalog:GL(4,2), 3), 13)").unwrap();
        let Node::Call(f, args) = n else { panic!() };
        assert_eq!(f, "factor");
        assert_eq!(args[0], Node::Call("perm".into(), vec![Node::Atom("catalog:GL(4,2)".into()), Node::Atom("3".into())]));
        assert!(parse("perm(catalog:A8, 7").is_err());
        assert!(parse("dual(x) y").is_err());
    }

    #[test]
    fn builds_modules() {
        let m = module_from_expr("deleted(catalog:A8, 7)", 0).unwrap();
        assert_eq!((m.p, m.n, m.group_order), (7, 7, 20160));
        let m = module_from_expr("dual(natural(catalog:G2_600))", 0).unwrap();
        assert_eq!((m.p, m.n, m.group_order), (5, 2, 24));
        assert_eq!(module_from_expr("tensor(perm(catalog:C3,5), perm(catalog:C3,5))", 0).unwrap().n, 9);
        assert!(module_from_expr("perm(catalog:A8, 8)", 0).is_err());
        assert!(module_from_expr("catalog:A8", 0).is_err());
    }
}
