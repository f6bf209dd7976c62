//! `.grp` group specifications.
//!
//! ```text
//! name C3
//! kind perm
//! degree 3
//! gen (1,2,3)
//! ```
//!
//! Matrix groups use `kind mat`, `prime`, `dim`, and generators written row by row with `;`
//! between rows. An optional `order` line records the expected group order.

use super::{lines, parse_u64, FormatError, FormatErrorKind as K, Line};
use crate::ff::{is_prime, Matrix};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub enum GroupBody {
    Perm { degree: usize, gens: Vec<Permutation> },
    Mat { prime: u64, dim: usize, gens: Vec<Matrix> },
}

#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub body: GroupBody,
    pub expected_order: Option<u64>,
    /// Leading comment lines (provenance).
    pub header: Vec<String>,
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, FormatError> {
    let (header, lines) = lines(text);
    let mut name: Option<String> = None;
    let mut kind: Option<(&Line, bool)> = None;
    let mut degree: Option<usize> = None;
    let mut prime: Option<u64> = None;
    let mut dim: Option<usize> = None;
    let mut order: Option<u64> = None;
    let mut gens: Vec<&Line> = Vec::new();
    let mut seen: Vec<&str> = Vec::new();
    for line in &lines {
        let kw = line.keyword;
        if kw != "gen" {
            if seen.contains(&kw) {
                return Err(line.err(line.keyword_col, K::DuplicateField(kw.to_string())));
            }
            seen.push(kw);
        }
        let single = || -> Result<(usize, &str), FormatError> {
            match line.tokens().as_slice() {
                [t] => Ok(*t),
                [] => Err(line.err(line.rest_col, K::MissingField(format!("{kw} value")))),
                [_, (c, t), ..] => Err(line.err(*c, K::BadValue(format!("unexpected `{t}`")))),
            }
        };
        match kw {
            "name" => name = Some(line.rest.to_string()),
            "kind" => {
                let (c, t) = single()?;
                kind = Some((
                    line,
                    match t {
                        "perm" => true,
                        "mat" => false,
                        _ => return Err(line.err(c, K::UnknownKind(t.to_string()))),
                    },
                ));
            }
            "degree" => {
                let (c, t) = single()?;
                let d = parse_u64(t, line, c)?;
                if d == 0 {
                    return Err(line.err(c, K::BadValue("degree must be positive".into())));
                }
                degree = Some(d as usize);
            }
            "prime" => {
                let (c, t) = single()?;
                let p = parse_u64(t, line, c)?;
                if !is_prime(p) {
                    return Err(line.err(c, K::BadValue(format!("{p} is not prime"))));
                }
                prime = Some(p);
            }
            "dim" => {
                let (c, t) = single()?;
                let d = parse_u64(t, line, c)?;
                if d == 0 {
                    return Err(line.err(c, K::BadValue("dimension must be positive".into())));
                }
                dim = Some(d as usize);
            }
            "order" => {
                let (c, t) = single()?;
                order = Some(parse_u64(t, line, c)?);
            }
            "gen" => gens.push(line),
            _ => return Err(line.err(line.keyword_col, K::UnknownKeyword(kw.to_string()))),
        }
    }
    let missing = |f: &str| FormatError { line: lines.last().map_or(1, |l| l.number), col: 1, kind: K::MissingField(f.into()) };
    let name = name.ok_or_else(|| missing("name"))?;
    let (_, is_perm) = kind.ok_or_else(|| missing("kind"))?;
    let body = if is_perm {
        let degree = degree.ok_or_else(|| missing("degree"))?;
        let gens = gens.iter().map(|l| parse_cycles(l, degree)).collect::<Result<_, _>>()?;
        GroupBody::Perm { degree, gens }
    } else {
        let prime = prime.ok_or_else(|| missing("prime"))?;
        let dim = dim.ok_or_else(|| missing("dim"))?;
        let gens = gens.iter().map(|l| parse_matrix(l, prime, dim)).collect::<Result<_, _>>()?;
        GroupBody::Mat { prime, dim, gens }
    };
    Ok(GroupSpec { name, body, expected_order: order, header })
}

fn parse_cycles(line: &Line, degree: usize) -> Result<Permutation, FormatError> {
    let s = line.rest.as_bytes();
    let col = |i: usize| line.rest_col + i;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut used = vec![false; degree + 1];
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < s.len() && s[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == s.len() {
        return Err(line.err(col(i), K::BadCycle("empty generator".into())));
    }
    while i < s.len() {
        if s[i] != b'(' {
            return Err(line.err(col(i), K::BadCycle(format!("expected `(`, found `{}`", s[i] as char))));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i < s.len() && s[i] == b')' && cycle.is_empty() {
                i += 1;
                break;
            }
            let start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(line.err(col(i), K::BadCycle("expected a point".into())));
            }
            let tok = &line.rest[start..i];
            let point: usize = tok.parse().map_err(|_| line.err(col(start), K::BadNumber(tok.into())))?;
            if point == 0 || point > degree {
                return Err(line.err(col(start), K::PointOutOfRange { point, degree }));
            }
            if used[point] {
                return Err(line.err(col(start), K::BadCycle(format!("point {point} repeated"))));
            }
            used[point] = true;
            cycle.push(point);
            skip_ws(&mut i);
            match s.get(i) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(c) => return Err(line.err(col(i), K::BadCycle(format!("unexpected `{}`", *c as char)))),
                None => return Err(line.err(col(i), K::BadCycle("unterminated cycle".into()))),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Ok(Permutation::from_cycles(degree, &cycles).expect("points validated"))
}

fn parse_matrix(line: &Line, p: u64, dim: usize) -> Result<Matrix, FormatError> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut row = Vec::new();
    for (c, tok) in line.tokens() {
        for (k, piece) in tok.split(';').enumerate() {
            if k > 0 {
                rows.push(std::mem::take(&mut row));
            }
            if piece.is_empty() {
                continue;
            }
            let v: i64 = piece.parse().map_err(|_| line.err(c, K::BadNumber(piece.into())))?;
            row.push(v.rem_euclid(p as i64) as u64);
        }
    }
    if !row.is_empty() {
        rows.push(row);
    }
    if rows.len() != dim {
        return Err(line.err(line.rest_col, K::MatrixShape(format!("{} rows, expected {}", rows.len(), dim))));
    }
    if let Some(r) = rows.iter().position(|r| r.len() != dim) {
        return Err(line.err(
            line.rest_col,
            K::MatrixShape(format!("row {} has {} entries, expected {}", r + 1, rows[r].len(), dim)),
        ));
    }
    let m = Matrix::from_rows(p, &rows);
    if m.rank() != dim {
        return Err(line.err(line.rest_col, K::NotInvertible));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermutationGroup;

    #[test]
    fn c3_spec() {
        let g = parse_group_spec("kind perm\nname C3\ndegree 3\ngen (1,2,3)\n").unwrap();
        let GroupBody::Perm { degree, gens } = g.body else { panic!() };
        assert_eq!(PermutationGroup::new(degree, gens).unwrap().order_u64(), 3);
    }

    #[test]
    fn gl32_spec() {
        let text = "# natural module\nname GL(3,2)\nkind mat\nprime 2\ndim 3\ngen 1 1 0 ; 0 1 0 ; 0 0 1\ngen 0 0 1 ; 1 0 0 ; 0 1 0\n";
        let g = parse_group_spec(text).unwrap();
        assert_eq!(g.header, vec!["# natural module"]);
        let GroupBody::Mat { gens, .. } = g.body else { panic!() };
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn point_out_of_range() {
        let e = parse_group_spec("name X\nkind perm\ndegree 8\ngen (1,2,9)\n").unwrap_err();
        assert_eq!(e.kind, K::PointOutOfRange { point: 9, degree: 8 });
        assert_eq!((e.line, e.col), (4, 10));
    }

    #[test]
    fn other_errors() {
        let e = parse_group_spec("name X\nkind graph\n").unwrap_err();
        assert!(matches!(e.kind, K::UnknownKind(_)));
        let e = parse_group_spec("name X\nname Y\n").unwrap_err();
        assert!(matches!(e.kind, K::DuplicateField(_)));
        let e = parse_group_spec("name X\nkind mat\nprime 3\ndim 2\ngen 1 1 ; 1 1\n").unwrap_err();
        assert_eq!(e.kind, K::NotInvertible);
        let e = parse_group_spec("name X\nkind perm\ndegree 3\ngen (1,2\n").unwrap_err();
        assert!(matches!(e.kind, K::BadCycle(_)));
        let e = parse_group_spec("name X\nkind perm\n").unwrap_err();
        assert!(matches!(e.kind, K::MissingField(_)));
    }
}
