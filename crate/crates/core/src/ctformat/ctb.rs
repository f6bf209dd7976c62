//! `.ctb` character-table files.
//!
//! ```text
//! name C3
//! order 3
//! classes 3
//! sizes 1 1 1
//! orders 1 3 3
//! powermap 3 1 1 1
//! conductor 3
//! char 1 1 1
//! char 1 1*z^1 1*z^2
//! char 1 1*z^2 1*z^1
//! indicators + o o
//! ```
//!
//! Power-map indices are 1-based; `powermap -1` may give the inverse map explicitly.

use std::collections::{BTreeMap, HashMap};

use super::{lines, parse_u64, FormatError, FormatErrorKind as K, Line};
use crate::chartab::{CharacterTable, ChartabError};
use crate::cyclo::{parse_value, Cyclotomic};
use crate::ff::{factorize, gcd};
use crate::perm::{class_names, ClassData};

#[derive(Clone, Debug, PartialEq)]
pub struct TableFile {
    /// Leading comment lines (provenance).
    pub header: Vec<String>,
    pub name: String,
    pub order: u64,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    pub classnames: Option<Vec<String>>,
    /// Power maps keyed by exponent, 0-based class indices.
    pub powermaps: BTreeMap<i64, Vec<usize>>,
    pub conductor: u64,
    pub rows: Vec<Vec<Cyclotomic>>,
    pub indicators: Option<Vec<i8>>,
}

pub fn parse_table(text: &str) -> Result<TableFile, FormatError> {
    let (header, lines) = lines(text);
    let mut by_kw: HashMap<&str, &Line> = HashMap::new();
    let mut powermap_lines: Vec<&Line> = Vec::new();
    let mut char_lines: Vec<&Line> = Vec::new();
    for line in &lines {
        match line.keyword {
            "powermap" => powermap_lines.push(line),
            "char" => char_lines.push(line),
            kw @ ("name" | "order" | "classes" | "classnames" | "sizes" | "orders" | "conductor" | "indicators") => {
                if by_kw.insert(kw, line).is_some() {
                    return Err(line.err(line.keyword_col, K::DuplicateField(kw.to_string())));
                }
            }
            kw => return Err(line.err(line.keyword_col, K::UnknownKeyword(kw.to_string()))),
        }
    }
    let last = lines.last().map_or(1, |l| l.number);
    let need = |kw: &str| by_kw.get(kw).copied().ok_or(FormatError { line: last, col: 1, kind: K::MissingField(kw.into()) });
    let single_u64 = |line: &Line| -> Result<u64, FormatError> {
        match line.tokens().as_slice() {
            [(c, t)] => parse_u64(t, line, *c),
            _ => Err(line.err(line.rest_col, K::BadValue(format!("`{}` takes one number", line.keyword)))),
        }
    };
    let name = need("name")?.rest.to_string();
    let order_line = need("order")?;
    let order = single_u64(order_line)?;
    let k = single_u64(need("classes")?)? as usize;
    let list = |line: &Line, what: &str| -> Result<Vec<u64>, FormatError> {
        let toks = line.tokens();
        if toks.len() != k {
            return Err(line.err(line.keyword_col, K::Arity { what: what.into(), found: toks.len(), expected: k }));
        }
        toks.iter().map(|(c, t)| parse_u64(t, line, *c)).collect()
    };
    let sizes_line = need("sizes")?;
    let sizes = list(sizes_line, "sizes")?;
    let sum: u128 = sizes.iter().map(|&s| s as u128).sum();
    if sum != order as u128 {
        return Err(sizes_line.err(sizes_line.keyword_col, K::SizeSum { sum: sum.to_string(), order }));
    }
    let orders_line = need("orders")?;
    let orders = list(orders_line, "orders")?;
    if let Some(i) = orders.iter().position(|&o| o == 0) {
        return Err(orders_line.err(orders_line.tokens()[i].0, K::BadValue("element order 0".into())));
    }
    let classnames = match by_kw.get("classnames") {
        Some(line) => {
            let toks = line.tokens();
            if toks.len() != k {
                return Err(line.err(line.keyword_col, K::Arity { what: "classnames".into(), found: toks.len(), expected: k }));
            }
            Some(toks.iter().map(|(_, t)| t.to_string()).collect())
        }
        None => None,
    };
    let mut powermaps = BTreeMap::new();
    for line in powermap_lines {
        let toks = line.tokens();
        let Some(&(c0, t0)) = toks.first() else {
            return Err(line.err(line.rest_col, K::MissingField("powermap exponent".into())));
        };
        let m: i64 = t0.parse().map_err(|_| line.err(c0, K::BadNumber(t0.into())))?;
        if m == 0 {
            return Err(line.err(c0, K::BadValue("power map exponent 0".into())));
        }
        if toks.len() - 1 != k {
            return Err(line.err(line.keyword_col, K::Arity { what: format!("powermap {m}"), found: toks.len() - 1, expected: k }));
        }
        let mut map = Vec::with_capacity(k);
        for &(c, t) in &toks[1..] {
            let idx: i64 = t.parse().map_err(|_| line.err(c, K::BadNumber(t.into())))?;
            if idx < 1 || idx as usize > k {
                return Err(line.err(c, K::IndexOutOfRange { index: idx, classes: k }));
            }
            map.push(idx as usize - 1);
        }
        if powermaps.insert(m, map).is_some() {
            return Err(line.err(c0, K::DuplicateField(format!("powermap {m}"))));
        }
    }
    let conductor = single_u64(need("conductor")?)?;
    if conductor == 0 {
        let l = need("conductor")?;
        return Err(l.err(l.rest_col, K::BadValue("conductor must be positive".into())));
    }
    let mut rows = Vec::with_capacity(char_lines.len());
    for (r, line) in char_lines.iter().enumerate() {
        let toks = line.tokens();
        if toks.len() != k {
            return Err(line.err(line.keyword_col, K::Arity { what: format!("row {}", r + 1), found: toks.len(), expected: k }));
        }
        let row = toks
            .iter()
            .map(|(c, t)| parse_value(t, conductor).map_err(|e| line.err(c + e.offset, K::BadValue(e.to_string()))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let indicators = match by_kw.get("indicators") {
        Some(line) => {
            let toks = line.tokens();
            if toks.len() != rows.len() {
                return Err(line.err(
                    line.keyword_col,
                    K::Arity { what: "indicators".into(), found: toks.len(), expected: rows.len() },
                ));
            }
            Some(
                toks.iter()
                    .map(|(c, t)| match *t {
                        "+" => Ok(1),
                        "-" => Ok(-1),
                        "o" => Ok(0),
                        _ => Err(line.err(*c, K::BadIndicator(t.to_string()))),
                    })
                    .collect::<Result<Vec<i8>, _>>()?,
            )
        }
        None => None,
    };
    Ok(TableFile { header, name, order, sizes, orders, classnames, powermaps, conductor, rows, indicators })
}

pub fn emit_table(t: &TableFile) -> String {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    for h in &t.header {
        out.push_str(h);
        out.push('\n');
    }
    out.push_str(&format!("name {}\n", t.name));
    out.push_str(&format!("order {}\n", t.order));
    out.push_str(&format!("classes {}\n", t.sizes.len()));
    if let Some(names) = &t.classnames {
        out.push_str(&format!("classnames {}\n", names.join(" ")));
    }
    out.push_str(&format!("sizes {}\n", join(&mut t.sizes.iter().map(|s| s.to_string()))));
    out.push_str(&format!("orders {}\n", join(&mut t.orders.iter().map(|s| s.to_string()))));
    for (m, map) in &t.powermaps {
        out.push_str(&format!("powermap {} {}\n", m, join(&mut map.iter().map(|i| (i + 1).to_string()))));
    }
    out.push_str(&format!("conductor {}\n", t.conductor));
    for row in &t.rows {
        out.push_str(&format!("char {}\n", join(&mut row.iter().map(|v| v.to_text(t.conductor)))));
    }
    if let Some(ind) = &t.indicators {
        let s = ind.iter().map(|&i| match i {
            1 => "+".to_string(),
            -1 => "-".to_string(),
            _ => "o".to_string(),
        });
        out.push_str(&format!("indicators {}\n", join(&mut s.into_iter())));
    }
    out
}

impl TableFile {
    pub fn from_table(t: &CharacterTable) -> Self {
        let powermaps = if t.classes.has_power_maps() {
            t.classes.prime_power_maps().into_iter().map(|(p, m)| (p as i64, m)).collect()
        } else {
            BTreeMap::new()
        };
        TableFile {
            header: Vec::new(),
            name: t.name.clone(),
            order: t.group_order(),
            sizes: t.classes.sizes.clone(),
            orders: t.classes.element_orders.clone(),
            classnames: Some(t.classes.names.clone()),
            powermaps,
            conductor: t.conductor,
            rows: t.rows.clone(),
            indicators: t.indicators.clone(),
        }
    }

    /// Build and validate the character table. Power maps are completed from the stored
    /// prime maps and the Galois action on columns; stored indicators are checked against
    /// the recomputed ones when the squaring map is available.
    pub fn to_table(&self) -> Result<CharacterTable, ChartabError> {
        let invalid = |reason: String| ChartabError::Invalid { name: self.name.clone(), reason };
        let names = self.classnames.clone().unwrap_or_else(|| class_names(&self.orders));
        let power_rows = derive_power_rows(&self.orders, &self.powermaps, &self.rows).map_err(invalid)?;
        let cd = ClassData::from_power_rows(
            Vec::new(),
            self.sizes.clone(),
            self.orders.clone(),
            names,
            self.order,
            power_rows.unwrap_or_default(),
        );
        let mut t = CharacterTable::new(self.name.clone(), cd, self.rows.clone());
        t.indicators = self.indicators.clone();
        t.validate()?;
        if let Some(inv) = self.powermaps.get(&-1) {
            if t.classes.has_power_maps() && t.classes.inverse_map() != *inv {
                return Err(ChartabError::Invalid { name: self.name.clone(), reason: "powermap -1 disagrees".into() });
            }
        }
        if t.classes.has_power_maps() {
            t.compute_indicators()?;
        }
        Ok(t)
    }
}

/// Complete `power_rows[k][l]` for all `l < o(k)`; `Ok(None)` when a needed prime map is absent.
fn derive_power_rows(
    orders: &[u64],
    maps: &BTreeMap<i64, Vec<usize>>,
    rows: &[Vec<Cyclotomic>],
) -> Result<Option<Vec<Vec<usize>>>, String> {
    let k = orders.len();
    let Some(id) = orders.iter().position(|&o| o == 1) else {
        return Err("no class of element order 1".into());
    };
    let mut primes: Vec<u64> = orders.iter().flat_map(|&o| factorize(o).into_iter().map(|(p, _)| p)).collect();
    primes.sort_unstable();
    primes.dedup();
    if primes.iter().any(|&p| !maps.contains_key(&(p as i64))) {
        return Ok(None);
    }
    for &p in &primes {
        let map = &maps[&(p as i64)];
        for c in 0..k {
            let expect = orders[c] / gcd(orders[c], p);
            if orders[map[c]] != expect {
                return Err(format!("powermap {p} sends class {} to an element of order {}", c + 1, orders[map[c]]));
            }
        }
    }
    let columns: Vec<Vec<Cyclotomic>> = (0..k).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect();
    let index: HashMap<&Vec<Cyclotomic>, usize> = columns.iter().enumerate().map(|(c, col)| (col, c)).collect();
    let mut unit_cache: HashMap<(usize, u64), usize> = HashMap::new();
    let mut out = Vec::with_capacity(k);
    for c in 0..k {
        let o = orders[c];
        let mut row = Vec::with_capacity(o as usize);
        for l in 0..o {
            if l == 0 {
                row.push(id);
                continue;
            }
            let d = gcd(l, o);
            let mut cls = c;
            for (p, e) in factorize(d) {
                for _ in 0..e {
                    cls = maps[&(p as i64)][cls];
                }
            }
            let oc = orders[cls];
            let u = (l / d) % oc;
            if oc == 1 || u == 1 {
                row.push(cls);
                continue;
            }
            let target = match unit_cache.get(&(cls, u)) {
                Some(&t) => t,
                None => {
                    let image: Vec<Cyclotomic> = columns[cls].iter().map(|v| v.galois_mod(u as i64, oc)).collect();
                    let t = *index
                        .get(&image)
                        .ok_or_else(|| format!("no class matches the Galois image of class {} under {}", cls + 1, u))?;
                    unit_cache.insert((cls, u), t);
                    t
                }
            };
            row.push(target);
        }
        out.push(row);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3: &str = "name C3\norder 3\nclasses 3\nsizes 1 1 1\norders 1 3 3\npowermap 3 1 1 1\nconductor 3\nchar 1 1 1\nchar 1 1*z^1 1*z^2\nchar 1 1*z^2 1*z^1\nindicators + o o\n";

    #[test]
    fn c1_roundtrip() {
        let text = "name C1\norder 1\nclasses 1\nsizes 1\norders 1\nconductor 1\nchar 1\n";
        let t = parse_table(text).unwrap();
        assert_eq!(emit_table(&t), text);
        let tab = t.to_table().unwrap();
        assert_eq!(tab.degrees(), vec![1]);
    }

    #[test]
    fn c3_roundtrip_and_table() {
        let t = parse_table(C3).unwrap();
        assert_eq!(emit_table(&t), C3);
        let tab = t.to_table().unwrap();
        assert_eq!(tab.classes.inverse_map(), vec![0, 2, 1]);
        assert_eq!(tab.indicators.as_deref(), Some(&[1, 0, 0][..]));
    }

    #[test]
    fn short_row_names_the_row() {
        let bad = C3.replace("char 1 1*z^1 1*z^2\n", "char 1 1*z^1\n");
        let e = parse_table(&bad).unwrap_err();
        assert!(matches!(&e.kind, K::Arity { what, found: 2, expected: 3 } if what == "row 2"));
        assert_eq!(e.line, 9);
    }

    #[test]
    fn validation_errors() {
        let e = parse_table(&C3.replace("sizes 1 1 1", "sizes 1 1 2")).unwrap_err();
        assert!(matches!(e.kind, K::SizeSum { .. }));
        let e = parse_table(&C3.replace("powermap 3 1 1 1", "powermap 3 1 1 4")).unwrap_err();
        assert!(matches!(e.kind, K::IndexOutOfRange { index: 4, classes: 3 }));
        let e = parse_table(&C3.replace("1*z^2 1*z^1\n", "1*z^2 1*q^1\n")).unwrap_err();
        assert!(matches!(e.kind, K::BadValue(_)));
        let e = parse_table(&C3.replace("+ o o", "+ o x")).unwrap_err();
        assert!(matches!(e.kind, K::BadIndicator(_)));
    }

    #[test]
    fn wrong_indicator_is_rejected() {
        let t = parse_table(&C3.replace("+ o o", "- o o")).unwrap();
        assert!(matches!(t.to_table(), Err(ChartabError::IndicatorMismatch { row: 0, .. })));
    }
}
