//! Named groups: constructions for the ones small enough to build, and the shipped
//! character-table and group data for the rest.

mod recipes;

pub use recipes::{affine_group, gl42_matrices, gl42_points, mat2_to_matrix, sl23_classes, Mat2};

use std::path::{Path, PathBuf};

use crate::bounds::{parse_maximal_indices, BoundError, MaximalTable, RTable};
use crate::chartab::{dixon_schneider, CharacterTable, ChartabError};
use crate::ctformat::{parse_group_spec, parse_table, FormatError, GroupBody};
use crate::modfp::{FpModuleAction, MatFp};
use crate::perm::{PermError, PermutationGroup};
use recipes::{cycles, group};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown group {0:?}")]
    Unknown(String),
    #[error("{name}: constructed order {found}, expected {expected}")]
    OrderMismatch { name: String, expected: u64, found: String },
    #[error("{0} is only available as a character table")]
    TableOnly(String),
    #[error("{0} has no shipped character table")]
    NoTable(String),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}:{source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Data { path: PathBuf, source: BoundError },
    #[error("expected {expected} classes of SL2(3) in GL2({p}), found {found}")]
    Embeddings { p: u64, expected: usize, found: usize },
    #[error(transparent)]
    Table(#[from] ChartabError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Built in code.
    Construct,
    /// Generators from `data/groups/<file>`.
    GroupFile(&'static str),
    /// No group; character table only.
    TableOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSource {
    Compute,
    /// `data/tables/<file>`.
    DataFile(&'static str),
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub order: u64,
    pub description: &'static str,
    /// Member of the almost simple list.
    pub almost_simple_list: bool,
    pub recipe: Recipe,
    pub table: TableSource,
    /// Shipped table file, when there is one besides the computed table.
    pub table_file: Option<&'static str>,
    pub expect_hypc: Option<bool>,
    pub expect_corb: Option<bool>,
}

impl CatalogEntry {
    pub fn source_tag(&self) -> &'static str {
        match self.table {
            TableSource::Compute => "compute",
            TableSource::DataFile(_) => "data-file",
        }
    }
}

const fn entry(name: &'static str, order: u64, description: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        aliases: &[],
        order,
        description,
        almost_simple_list: false,
        recipe: Recipe::Construct,
        table: TableSource::Compute,
        table_file: None,
        expect_hypc: None,
        expect_corb: None,
    }
}

const fn verdicts(mut e: CatalogEntry, hypc: bool, corb: bool) -> CatalogEntry {
    e.expect_hypc = Some(hypc);
    e.expect_corb = Some(corb);
    e
}

const fn listed(mut e: CatalogEntry, table_file: &'static str) -> CatalogEntry {
    e.almost_simple_list = true;
    e.table_file = Some(table_file);
    e
}

const fn data_table(mut e: CatalogEntry, file: &'static str) -> CatalogEntry {
    e.table = TableSource::DataFile(file);
    e.table_file = Some(file);
    e
}

const fn aliased(mut e: CatalogEntry, aliases: &'static [&'static str]) -> CatalogEntry {
    e.aliases = aliases;
    e
}

const fn from_file(mut e: CatalogEntry, file: &'static str) -> CatalogEntry {
    e.recipe = Recipe::GroupFile(file);
    e
}

const fn table_only(mut e: CatalogEntry) -> CatalogEntry {
    e.recipe = Recipe::TableOnly;
    e
}

static ENTRIES: &[CatalogEntry] = &[
    verdicts(entry("C2", 2, "cyclic group of order 2"), false, false),
    verdicts(entry("C3", 3, "cyclic group of order 3"), true, true),
    verdicts(entry("Q8", 8, "quaternion group, regular representation"), false, false),
    verdicts(entry("A4", 12, "alternating group on 4 points"), true, true),
    verdicts(entry("S4", 24, "symmetric group on 4 points"), false, false),
    verdicts(entry("C7xC3", 21, "cyclic group of order 21 on 10 points"), false, false),
    verdicts(aliased(entry("C7:C3", 21, "x -> x+1, x -> 2x on F_7"), &["C7xlC3"]), true, true),
    verdicts(entry("SL2(3)", 24, "SL(2,3) on the 8 nonzero vectors of F_3^2"), true, false),
    verdicts(aliased(entry("AGammaL(1,8)", 168, "x -> a x^s + b on F_8, i.e. 2^3:(7:3)"), &["AGamma(2^3)"]), true, true),
    verdicts(entry("G1_216", 216, "(C3 x C3):SL(2,3) inside the affine group of F_3^2"), true, false),
    verdicts(entry("G2_600", 600, "(C5 x C5):SL(2,3) inside the affine group of F_5^2"), true, false),
    verdicts(entry("G1176a", 1176, "(C7 x C7):SL(2,3) with SL(2,3) inside SL(2,7)"), false, false),
    verdicts(entry("G1176b", 1176, "(C7 x C7):SL(2,3) with SL(2,3) twisted by a linear character"), false, false),
    verdicts(listed(entry("A8", 20160, "alternating group on 8 points"), "A8.ctb"), true, true),
    verdicts(listed(aliased(entry("SL3(2)", 168, "PSL(2,7) on the projective line of F_7"), &["PSL(2,7)", "L3(2)"]), "SL3_2.ctb"), true, false),
    verdicts(listed(from_file(entry("M11", 7920, "Mathieu group on 11 points"), "M11.grp"), "M11.ctb"), true, true),
    verdicts(listed(data_table(from_file(entry("M22", 443520, "Mathieu group on 22 points"), "M22.grp"), "M22.ctb"), "M22.ctb"), true, true),
    verdicts(listed(data_table(table_only(entry("M23", 10200960, "Mathieu group M23")), "M23.ctb"), "M23.ctb"), true, true),
    verdicts(listed(data_table(table_only(entry("M24", 244823040, "Mathieu group M24")), "M24.ctb"), "M24.ctb"), true, true),
    verdicts(listed(aliased(from_file(entry("SU3(3)", 6048, "PSU(3,3) on 28 points"), "SU3_3.grp"), &["U3(3)"]), "SU3_3.ctb"), true, false),
    verdicts(listed(data_table(table_only(entry("McL", 898128000, "McLaughlin group")), "McL.ctb"), "McL.ctb"), true, true),
    verdicts(listed(data_table(table_only(entry("Th", 90745943887872000, "Thompson group")), "Th.ctb"), "Th.ctb"), true, true),
    verdicts(
        listed(aliased(entry("SL2(8).3", 1512, "PGammaL(2,8) on the projective line of F_8"), &["PGammaL(2,8)", "L2(8).3"]), "SL2_8_3.ctb"),
        true,
        true,
    ),
    verdicts(listed(data_table(table_only(entry("O8+(2).3", 522547200, "O8+(2) extended by triality")), "O8p_2_3.ctb"), "O8p_2_3.ctb"), true, false),
    entry("GL(4,2)", 20160, "GL(4,2) on the 15 nonzero vectors of F_2^4"),
    data_table(table_only(entry("Sp6(2)", 1451520, "symplectic group Sp(6,2)")), "Sp6_2.ctb"),
    data_table(table_only(entry("O8+(2)", 174182400, "orthogonal group O8+(2)")), "O8p_2.ctb"),
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

/// `REPCHECK_DATA`, or the `data` directory of this crate.
pub fn data_dir() -> PathBuf {
    std::env::var_os("REPCHECK_DATA").map(PathBuf::from).unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data")))
}

fn read(path: &Path) -> Result<String, CatalogError> {
    std::fs::read_to_string(path).map_err(|e| CatalogError::Io { path: path.to_path_buf(), message: e.to_string() })
}

/// Build the group of a catalog entry as a permutation group of the expected order.
pub fn build(name: &str) -> Result<PermutationGroup, CatalogError> {
    let e = lookup(name)?;
    let g = match e.recipe {
        Recipe::TableOnly => return Err(CatalogError::TableOnly(e.name.to_string())),
        Recipe::GroupFile(file) => load_group_file(&data_dir().join("groups").join(file))?,
        Recipe::Construct => construct(e.name)?,
    };
    if g.order_u64() != e.order {
        return Err(CatalogError::OrderMismatch { name: e.name.to_string(), expected: e.order, found: g.order().to_string() });
    }
    Ok(g)
}

fn construct(name: &str) -> Result<PermutationGroup, CatalogError> {
    Ok(match name {
        "C2" => group(2, vec![cycles(2, &[&[1, 2]])]),
        "C3" => group(3, vec![cycles(3, &[&[1, 2, 3]])]),
        "Q8" => recipes::q8(),
        "A4" => group(4, vec![cycles(4, &[&[1, 2, 3]]), cycles(4, &[&[2, 3, 4]])]),
        "S4" => group(4, vec![cycles(4, &[&[1, 2, 3, 4]]), cycles(4, &[&[1, 2]])]),
        "C7xC3" => group(10, vec![cycles(10, &[&[1, 2, 3, 4, 5, 6, 7], &[8, 9, 10]])]),
        "C7:C3" => recipes::c7_c3(),
        "SL2(3)" => {
            let [a, b] = sl23_classes(3, true)[0];
            let g = affine_group(3, &[a, b]);
            // Drop the translation and the zero vector.
            let gens = g.generators()[..2].iter().map(|x| crate::perm::Permutation::from_images(x.images()[1..].iter().map(|&i| i - 1).collect())).collect::<Result<Vec<_>, _>>()?;
            PermutationGroup::new(8, gens)?
        }
        "AGammaL(1,8)" => recipes::agammal_1_8(),
        "G1_216" => affine_group(3, &sl23_class(3, true, 1)?[0]),
        "G2_600" => affine_group(5, &sl23_class(5, true, 1)?[0]),
        "G1176a" => affine_group(7, &sl23_class(7, false, 2)?[0]),
        "G1176b" => affine_group(7, &sl23_class(7, false, 2)?[1]),
        "A8" => group(8, vec![cycles(8, &[&[1, 2, 3]]), cycles(8, &[&[2, 3, 4, 5, 6, 7, 8]])]),
        "SL3(2)" => recipes::psl_2_7(),
        "SL2(8).3" => recipes::pgammal_2_8(),
        "GL(4,2)" => gl42_points(),
        _ => return Err(CatalogError::Unknown(name.to_string())),
    })
}

fn sl23_class(p: u64, special: bool, expected: usize) -> Result<Vec<[Mat2; 2]>, CatalogError> {
    let found = sl23_classes(p, special);
    if found.len() != expected {
        return Err(CatalogError::Embeddings { p, expected, found: found.len() });
    }
    Ok(found)
}

/// The `SL(2,3)` complement of an affine entry (`G1_216`, `G2_600`, `G1176a`, `G1176b`)
/// acting on its natural module.
pub fn affine_complement(name: &str) -> Result<FpModuleAction, CatalogError> {
    let e = lookup(name)?;
    let (p, special, expected, k) = match e.name {
        "G1_216" => (3, true, 1, 0),
        "G2_600" => (5, true, 1, 0),
        "G1176a" => (7, false, 2, 0),
        "G1176b" => (7, false, 2, 1),
        other => return Err(CatalogError::Unknown(format!("{other} is not an affine entry"))),
    };
    let gens: Vec<MatFp> = sl23_class(p, special, expected)?[k].iter().map(|m| mat2_to_matrix(m, p)).collect();
    Ok(FpModuleAction { p, n: 2, generators: gens, group_order: 24 })
}

/// Natural module of `GL(4,2)`, with generators matching [`gl42_points`].
pub fn gl42_module() -> FpModuleAction {
    FpModuleAction { p: 2, n: 4, generators: gl42_matrices(), group_order: 20160 }
}

pub fn load_group_file(path: &Path) -> Result<PermutationGroup, CatalogError> {
    let text = read(path)?;
    let spec = parse_group_spec(&text).map_err(|source| CatalogError::Format { path: path.to_path_buf(), source })?;
    let g = match spec.body {
        GroupBody::Perm { degree, gens } => PermutationGroup::new(degree, gens)?,
        GroupBody::Mat { .. } => return Err(CatalogError::TableOnly(spec.name)),
    };
    if let Some(expected) = spec.expected_order {
        if g.order_u64() != expected {
            return Err(CatalogError::OrderMismatch { name: spec.name, expected, found: g.order().to_string() });
        }
    }
    Ok(g)
}

pub fn load_table_file(path: &Path) -> Result<CharacterTable, CatalogError> {
    let text = read(path)?;
    let file = parse_table(&text).map_err(|source| CatalogError::Format { path: path.to_path_buf(), source })?;
    let t = file.to_table()?;
    t.validate()?;
    Ok(t)
}

/// The shipped table of an entry, or a file `<name>.ctb` in the tables directory.
pub fn load_table(name: &str) -> Result<CharacterTable, CatalogError> {
    let file = match lookup(name) {
        Ok(e) => e.table_file.ok_or_else(|| CatalogError::NoTable(e.name.to_string()))?.to_string(),
        Err(_) => format!("{name}.ctb"),
    };
    load_table_file(&data_dir().join("tables").join(file))
}

/// Computed table for constructible entries, shipped table otherwise.
pub fn table(name: &str, seed: u64) -> Result<CharacterTable, CatalogError> {
    let e = lookup(name)?;
    match e.table {
        TableSource::DataFile(_) => load_table(e.name),
        TableSource::Compute => {
            let mut t = dixon_schneider(&build(e.name)?, seed)?;
            t.name = e.name.to_string();
            Ok(t)
        }
    }
}

pub fn rtable() -> Result<RTable, CatalogError> {
    let path = data_dir().join("rtable.dat");
    RTable::parse(&read(&path)?).map_err(|source| CatalogError::Data { path, source })
}

pub fn maximal_indices() -> Result<Vec<MaximalTable>, CatalogError> {
    let path = data_dir().join("maximal_indices.dat");
    parse_maximal_indices(&read(&path)?).map_err(|source| CatalogError::Data { path, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructible_orders() {
        for e in list().iter().filter(|e| e.recipe == Recipe::Construct && e.order <= 2000) {
            assert_eq!(build(e.name).unwrap().order_u64(), e.order, "{}", e.name);
        }
        assert_eq!(build("PGammaL(2,8)").unwrap().degree(), 9);
        assert_eq!(build("AGammaL(1,8)").unwrap().degree(), 8);
        assert!(matches!(build("Th"), Err(CatalogError::TableOnly(_))));
        assert!(matches!(build("nope"), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn list_tags() {
        assert_eq!(list().iter().filter(|e| e.almost_simple_list).count(), 11);
        let data: Vec<&str> = list().iter().filter(|e| e.almost_simple_list && e.source_tag() == "data-file").map(|e| e.name).collect();
        assert_eq!(data, ["M22", "M23", "M24", "McL", "Th", "O8+(2).3"]);
        assert_eq!(lookup("G1176b").unwrap().expect_hypc, Some(false));
    }

    #[test]
    fn tables_load() {
        let m11 = load_table("M11").unwrap();
        assert_eq!(m11.degrees().iter().filter(|&&d| d == 11).count(), 1);
        assert!(matches!(load_table("nonexistent"), Err(CatalogError::Io { .. })));
    }

    #[test]
    fn data_files_parse() {
        let r = rtable().unwrap();
        assert_eq!(r.entries.len(), 13);
        let m = maximal_indices().unwrap();
        assert_eq!(m.len(), 7);
    }
}
