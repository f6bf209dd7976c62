//! Line-oriented data files: exceptional `r(g)` values and maximal subgroup indices.

use super::BoundError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct REntry {
    pub group: String,
    pub class: String,
    pub order: u64,
    /// `None` when the entry names no class of the group and only feeds `r(G)`.
    pub size: Option<u64>,
    pub r: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RTable {
    pub entries: Vec<REntry>,
}

fn data_err(line: usize, message: impl Into<String>) -> BoundError {
    BoundError::Data { line, message: message.into() }
}

fn number(tok: &str, line: usize, what: &str) -> Result<u64, BoundError> {
    tok.parse().map_err(|_| data_err(line, format!("bad {what} {tok:?}")))
}

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

impl RTable {
    /// Rows `group class order size r`, with `-` for a missing size.
    pub fn parse(text: &str) -> Result<Self, BoundError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks: Vec<&str> = content(raw).split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let [group, class, order, size, r] = toks[..] else {
                return Err(data_err(line, format!("expected 5 fields, found {}", toks.len())));
            };
            let r = number(r, line, "r")?;
            if r < 2 {
                return Err(BoundError::SmallR(r));
            }
            let size = if size == "-" { None } else { Some(number(size, line, "class size")?) };
            entries.push(REntry { group: group.into(), class: class.into(), order: number(order, line, "order")?, size, r });
        }
        Ok(RTable { entries })
    }

    pub fn default_r(order: u64) -> u64 {
        if order == 2 {
            3
        } else {
            2
        }
    }

    /// `r(g)` for a class of `group` given by element order and class size.
    pub fn r_of(&self, group: &str, order: u64, size: u64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.group == group && e.order == order && e.size == Some(size))
            .map_or(Self::default_r(order), |e| e.r)
    }

    /// `r(G)` over the non-identity classes `(order, size)`, including size-less entries.
    pub fn r_max(&self, group: &str, classes: &[(u64, u64)]) -> u64 {
        let by_class = classes.iter().filter(|&&(o, _)| o > 1).map(|&(o, s)| self.r_of(group, o, s));
        let loose = self.entries.iter().filter(|e| e.group == group && e.size.is_none()).map(|e| e.r);
        by_class.chain(loose).max().unwrap_or(2)
    }

    pub fn groups(&self) -> Vec<&str> {
        let mut g: Vec<&str> = self.entries.iter().map(|e| e.group.as_str()).collect();
        g.dedup();
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSubgroup {
    pub index: u64,
    /// Smallest index of a proper subgroup of `L`.
    pub min_index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalTable {
    pub name: String,
    pub order: u64,
    /// Core-free classes of maximal subgroups, with structure labels.
    pub maxes: Vec<(MaximalSubgroup, String)>,
    /// Normal maximal subgroups, listed for completeness and excluded from `N_1`.
    pub normal: Vec<(MaximalSubgroup, String)>,
}

impl MaximalTable {
    pub fn core_free(&self) -> Vec<MaximalSubgroup> {
        self.maxes.iter().map(|(m, _)| m.clone()).collect()
    }
}

/// Blocks `group NAME ORDER` followed by rows `[normal] INDEX MIN_INDEX STRUCTURE`.
pub fn parse_maximal_indices(text: &str) -> Result<Vec<MaximalTable>, BoundError> {
    let mut out: Vec<MaximalTable> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks: Vec<&str> = content(raw).split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0] == "group" {
            let [_, name, order] = toks[..] else {
                return Err(data_err(line, "expected `group NAME ORDER`"));
            };
            out.push(MaximalTable { name: name.into(), order: number(order, line, "order")?, maxes: Vec::new(), normal: Vec::new() });
            continue;
        }
        let normal = toks[0] == "normal";
        if normal {
            toks.remove(0);
        }
        let [index, min_index, structure] = toks[..] else {
            return Err(data_err(line, "expected `INDEX MIN_INDEX STRUCTURE`"));
        };
        let Some(table) = out.last_mut() else {
            return Err(data_err(line, "row before any `group` line"));
        };
        let m = MaximalSubgroup { index: number(index, line, "index")?, min_index: number(min_index, line, "min index")? };
        if m.index < 2 || table.order % m.index != 0 {
            return Err(data_err(line, format!("index {} does not divide {}", m.index, table.order)));
        }
        if normal {
            table.normal.push((m, structure.into()));
        } else {
            table.maxes.push((m, structure.into()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rtable_lookup() {
        let t = RTable::parse("# c\nA8 2A 2 105 4\nX 2B 2 - 5\n").unwrap();
        assert_eq!(t.r_of("A8", 2, 105), 4);
        assert_eq!(t.r_of("A8", 2, 210), 3);
        assert_eq!(t.r_of("A8", 5, 1344), 2);
        assert_eq!(t.r_max("A8", &[(1, 1), (2, 105), (3, 112)]), 4);
        assert_eq!(t.r_max("X", &[(2, 1)]), 5);
        assert!(matches!(RTable::parse("A8 2A 2 105"), Err(BoundError::Data { line: 1, .. })));
    }

    #[test]
    fn maximal_blocks() {
        let t = parse_maximal_indices("group G 12\n 3 2 C4\nnormal 2 3 C6\n").unwrap();
        assert_eq!(t[0].core_free(), vec![MaximalSubgroup { index: 3, min_index: 2 }]);
        assert_eq!(t[0].normal.len(), 1);
        assert!(parse_maximal_indices("5 2 X").is_err());
        assert!(parse_maximal_indices("group G 12\n5 2 X").is_err());
    }
}
