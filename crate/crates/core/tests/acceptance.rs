//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! The report goes straight to stdout, so it shows even under the test harness's capture.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repcheck::bounds::{self, b_of, dimension_threshold, distinct_sum_feasible, n1_of, nh_wh, prime_order_cyclic_count_from, splitting_partition};
use repcheck::catalog::{self, Recipe, TableSource};
use repcheck::chartab::{conjugate_pairs, dixon_schneider, field_degree, CharacterTable};
use repcheck::ff::Matrix;
use repcheck::hypc::{check_hypothesis_c, complex_degree_uniqueness, indicators, real_degree_profile};
use repcheck::modfp::{chop, deleted_perm_module, dual, fixed_dim_from_brauer, fixed_space_dim, orbit_census, perm_module, tensor, FpModuleAction};
use repcheck::perm::{classes_with_elements, subgroup_lattice, Permutation, PermutationGroup};

/// Criteria known to fail, with the reason printed in the report.
const KNOWN_FAILURES: &[usize] = &[4];

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

const HYPC_PASS: [&str; 10] = ["C3", "C7:C3", "A4", "SL2(3)", "AGammaL(1,8)", "G1_216", "G2_600", "SL3(2)", "A8", "M11"];
const HYPC_FAIL: [&str; 6] = ["C2", "Q8", "S4", "C7xC3", "G1176a", "G1176b"];

fn computed_table(name: &str) -> CharacterTable {
    assert_eq!(catalog::lookup(name).unwrap().table, TableSource::Compute, "{name}");
    catalog::table(name, 0).unwrap()
}

fn criterion_1(o: &mut Outcome) {
    for (names, expect) in [(&HYPC_PASS[..], true), (&HYPC_FAIL[..], false)] {
        for &name in names {
            let start = Instant::now();
            let t = computed_table(name);
            let v = check_hypothesis_c(&t).unwrap();
            let took = start.elapsed();
            o.check(v.pass == expect, format!("{name}: hypc {}", v.pass));
            o.check(expect || !v.witnesses.is_empty(), format!("{name}: no witnesses"));
            o.check(took < Duration::from_secs(60), format!("{name}: {took:?}"));
            if !expect {
                o.note(format!("{name}: {}", v.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("; ")));
            }
        }
    }
}

fn criterion_2(o: &mut Outcome) {
    let expected: BTreeSet<&str> = ["C3", "A4", "C7:C3", "AGammaL(1,8)", "A8", "M11"].into();
    let mut passing = BTreeSet::new();
    for name in HYPC_PASS.iter().chain(&HYPC_FAIL) {
        if real_degree_profile(&computed_table(name)).unwrap().verdict.pass {
            passing.insert(*name);
        }
    }
    o.check(passing == expected, format!("real-degree passes {passing:?}"));
    for name in ["SL2(3)", "G1_216", "G2_600"] {
        o.check(!passing.contains(name), format!("{name} passes"));
    }
}

fn criterion_3(o: &mut Outcome) {
    for name in ["M22", "M23", "M24", "McL", "Th", "SL2(8).3", "SU3(3)", "O8+(2).3"] {
        let t = catalog::load_table(name).unwrap();
        o.check(check_hypothesis_c(&t).unwrap().pass, format!("{name}: hypc fails"));
    }
    let mcl = catalog::load_table("McL").unwrap();
    let ind = indicators(&mcl).unwrap();
    let big: Vec<i8> = (0..mcl.rows.len()).filter(|&i| mcl.degree(i) == 3520).map(|i| ind[i]).collect();
    o.check(big.len() == 2 && big.contains(&1) && big.contains(&-1), format!("McL degree-3520 indicators {big:?}"));
    for name in ["Sp6(2)", "O8+(2)"] {
        let v = complex_degree_uniqueness(&catalog::load_table(name).unwrap());
        o.check(!v.pass, format!("{name}: complex degrees distinct"));
    }
}

fn criterion_4(o: &mut Outcome) {
    let printed: [(&str, &[u64], &[u64]); 6] = [
        ("C7:C3", &[7], &[7, 21]),
        ("AGammaL(1,8)", &[8, 14, 56], &[8, 14, 56, 168]),
        ("A4", &[4], &[4, 12]),
        ("SL2(3)", &[8], &[8, 24]),
        ("G1_216", &[9, 72], &[9, 72, 216]),
        ("G2_600", &[25, 200], &[25, 200, 600]),
    ];
    for (name, n_exp, w_exp) in printed {
        let g = catalog::build(name).unwrap();
        let (n, w) = nh_wh(&g).unwrap();
        let n_exp: BTreeSet<u64> = n_exp.iter().copied().collect();
        let w_exp: BTreeSet<u64> = w_exp.iter().copied().collect();
        o.check(n == n_exp, format!("{name}: N = {n:?}"));
        if w != w_exp {
            let extra: Vec<u64> = w.difference(&w_exp).copied().collect();
            let missing: Vec<u64> = w_exp.difference(&w).copied().collect();
            // Name the subgroups behind any extra index so the report is checkable.
            let witnesses: Vec<String> = subgroup_lattice(&g)
                .unwrap()
                .iter()
                .filter(|s| extra.contains(&s.index) && s.abelianization_order == 3)
                .map(|s| format!("|T| = {}, |T/T'| = 3, index {}", s.order, s.index))
                .collect();
            o.check(false, format!("{name}: W = {w:?}, extra {extra:?} ({}), missing {missing:?}", witnesses.join(", ")));
        }
        let c7: BTreeSet<u64> = [7, 21].into();
        if name == "C7:C3" {
            o.check(!distinct_sum_feasible(35, &c7), "C(7,3) = 35 is a sum over {7, 21}");
        } else {
            for &m in &n {
                let pairs = m * (m - 1) / 2;
                o.check(!distinct_sum_feasible(pairs, &w), format!("{name}: C({m},2) is a sum over W"));
            }
        }
    }
}

fn criterion_5(o: &mut Outcome) {
    let printed: [(&str, u64, &[u64]); 7] = [
        ("A8", 18, &[8, 15]),
        ("SL3(2)", 8, &[7, 8]),
        ("M11", 16, &[11, 12]),
        ("M22", 22, &[22]),
        ("M23", 28, &[23]),
        ("M24", 32, &[24]),
        ("SL2(8).3", 14, &[9]),
    ];
    let tables = catalog::maximal_indices().unwrap();
    for (name, b, n1) in printed {
        let t = tables.iter().find(|t| t.name == name).unwrap_or_else(|| panic!("{name} missing"));
        o.check(b_of(t.order).unwrap() == b, format!("{name}: b = {}", b_of(t.order).unwrap()));
        let got = n1_of(t.order, &t.core_free()).unwrap();
        o.check(got.refined == n1.iter().copied().collect(), format!("{name}: N1 = {:?}", got.refined));
        if got.raw != got.refined {
            o.note(format!("{name}: raw {:?} refined {:?}", got.raw, got.refined));
        }
    }
    let a8 = tables.iter().find(|t| t.name == "A8").unwrap();
    let got = n1_of(a8.order, &a8.core_free()).unwrap();
    o.check(got.raw == [8, 15, 16].into(), format!("A8 raw {:?}", got.raw));
}

fn criterion_6(o: &mut Outcome) {
    let rt = catalog::rtable().unwrap();
    for (name, d) in [("A8", 45), ("SL3(2)", 18), ("M11", 30), ("SL2(8).3", 24)] {
        let g = catalog::build(name).unwrap();
        let cd = repcheck::perm::conjugacy_data(&g).unwrap();
        let p = prime_order_cyclic_count_from(&cd.element_orders, &cd.sizes);
        let census = common::prime_cyclic_census(&g);
        o.check(p == census, format!("{name}: |P| {p} vs census {census}"));
        let classes: Vec<(u64, u64)> = cd.element_orders.iter().copied().zip(cd.sizes.iter().copied()).collect();
        let r = rt.r_max(name, &classes);
        let got = dimension_threshold(cd.group_order, p, r).unwrap();
        o.check(got == d, format!("{name}: D = {got} (|P| = {p}, r = {r})"));
    }
    let th = catalog::load_table("Th").unwrap();
    let classes: Vec<(u64, u64)> = th.classes.element_orders.iter().copied().zip(th.classes.sizes.iter().copied()).collect();
    let r = rt.r_max("Th", &classes);
    let got = dimension_threshold(th.group_order(), 675_176_077_846_831, r).unwrap();
    o.check(got == 148, format!("Th: D = {got}"));
}

fn criterion_7(o: &mut Outcome) {
    let a8 = catalog::build("A8").unwrap();
    let start = Instant::now();
    for (p, regular) in [(11, 240), (13, 1122)] {
        let c = orbit_census(&deleted_perm_module(&a8, p)).unwrap();
        o.check(c.regular_count == regular, format!("A8 over F{p}: {} regular orbits", c.regular_count));
    }
    let f13 = start.elapsed();
    o.check(f13 < Duration::from_secs(300), format!("A8 censuses took {f13:?}"));
    let c = orbit_census(&deleted_perm_module(&a8, 7)).unwrap();
    o.check(c.half_regular_count == 15, format!("A8 over F7: {} orbits of length |G|/2", c.half_regular_count));

    let gl = catalog::build("GL(4,2)").unwrap();
    let factors = chop(&perm_module(&gl, 3), 0).unwrap();
    match factors.iter().find(|f| f.module.n == 13) {
        Some(f) => {
            let c = orbit_census(&f.module).unwrap();
            o.check(c.regular_count == 23, format!("GL(4,2) 13-dim over F3: {} regular orbits", c.regular_count));
        }
        None => o.check(false, "GL(4,2) over F3 has no 13-dimensional factor"),
    }

    let m = dual(&catalog::affine_complement("G2_600").unwrap());
    let c = orbit_census(&m).unwrap();
    o.check(c.histogram == [(1, 1), (24, 1)], format!("G2 dual: {:?}", c.histogram));
}

fn table_properties(name: &str, t: &CharacterTable, listed: bool, o: &mut Outcome) {
    if let Err(e) = t.validate() {
        o.check(false, format!("{name}: {e}"));
        return;
    }
    let ind = indicators(t).unwrap();
    let fs: i64 = ind.iter().zip(t.degrees()).map(|(&i, d)| i as i64 * d as i64).sum();
    o.check(fs == t.square_roots_of_one() as i64, format!("{name}: indicator sum {fs}"));
    let pairs = conjugate_pairs(t).unwrap();
    for (i, &j) in pairs.iter().enumerate() {
        o.check(t.degree(i) == t.degree(j) && ind[i] == ind[j], format!("{name}: rows {} and {} pair badly", i + 1, j + 1));
    }
    if listed {
        let worst = (0..t.rows.len()).map(|i| field_degree(t, i)).max().unwrap();
        o.check(worst <= 2, format!("{name}: field degree {worst}"));
    }
    if check_hypothesis_c(t).unwrap().pass {
        let mut mult: BTreeMap<u64, usize> = BTreeMap::new();
        for d in t.degrees() {
            *mult.entry(d).or_insert(0) += 1;
        }
        let most = mult.values().max().copied().unwrap_or(0);
        o.check(most <= 4, format!("{name}: a degree occurs {most} times"));
    }
}

fn criterion_8(o: &mut Outcome) {
    let mut count = 0;
    for e in catalog::list() {
        if e.table == TableSource::Compute {
            table_properties(e.name, &catalog::table(e.name, 0).unwrap(), e.almost_simple_list, o);
            count += 1;
        }
        if e.table_file.is_some() {
            table_properties(&format!("{} (file)", e.name), &catalog::load_table(e.name).unwrap(), e.almost_simple_list, o);
            count += 1;
        }
    }
    o.note(format!("{count} tables"));
}

fn criterion_9(o: &mut Outcome) {
    for n in 13..=1000u64 {
        let p = match splitting_partition(n) {
            Ok(p) => p.parts,
            Err(e) => {
                o.check(false, format!("n = {n}: {e}"));
                continue;
            }
        };
        let conj: Vec<u64> = (1..=p[0]).map(|i| p.iter().filter(|&&x| x >= i).count() as u64).collect();
        let diag = p.iter().enumerate().filter(|&(i, &x)| x > i as u64).count() as u64;
        let ok = p.iter().sum::<u64>() == n && p.windows(2).all(|w| w[0] >= w[1]) && conj == p && diag % 4 == n % 4;
        o.check(ok, format!("n = {n}: {p:?}"));
    }
}

struct Sample {
    label: String,
    rgroup: &'static str,
    group: PermutationGroup,
    module: FpModuleAction,
    brauer: Box<dyn Fn(&Permutation) -> i64>,
}

fn fixed_by_all(m: &FpModuleAction) -> usize {
    let rows: Vec<Vec<u64>> = (0..m.n).map(|i| m.generators.iter().flat_map(|g| g.sub_scalar(1).row(i).to_vec()).collect()).collect();
    Matrix::from_rows(m.p, &rows).left_nullspace().rows
}

fn samples() -> Vec<Sample> {
    let mut out = Vec::new();
    let fix = |g: &Permutation| g.fixed_points() as i64;
    let a8 = catalog::build("A8").unwrap();
    for p in [2, 3, 5, 7, 11] {
        let shift = if p == 2 { 2 } else { 1 };
        out.push(Sample { label: format!("deleted A8 F{p}"), rgroup: "A8", group: a8.clone(), module: deleted_perm_module(&a8, p), brauer: Box::new(move |g| fix(g) - shift) });
    }
    let d5 = deleted_perm_module(&a8, 5);
    out.push(Sample { label: "dual deleted A8 F5".into(), rgroup: "A8", group: a8.clone(), module: dual(&d5), brauer: Box::new(move |g| fix(&g.inverse()) - 1) });
    out.push(Sample { label: "deleted A8 F5 squared".into(), rgroup: "A8", group: a8.clone(), module: tensor(&d5, &d5).unwrap(), brauer: Box::new(move |g| (fix(g) - 1).pow(2)) });
    let gl = catalog::build("GL(4,2)").unwrap();
    let f13 = chop(&perm_module(&gl, 3), 0).unwrap().into_iter().find(|f| f.module.n == 13).expect("13-dimensional factor").module;
    out.push(Sample { label: "GL(4,2) 13 over F3".into(), rgroup: "A8", group: gl, module: f13, brauer: Box::new(move |g| fix(g) - 2) });
    let m11 = catalog::build("M11").unwrap();
    out.push(Sample { label: "deleted M11 F2".into(), rgroup: "M11", group: m11.clone(), module: deleted_perm_module(&m11, 2), brauer: Box::new(move |g| fix(g) - 1) });
    out.push(Sample { label: "deleted M11 F3".into(), rgroup: "M11", group: m11.clone(), module: deleted_perm_module(&m11, 3), brauer: Box::new(move |g| fix(g) - 1) });
    let l = catalog::build("SL3(2)").unwrap();
    out.push(Sample { label: "deleted SL3(2) F3".into(), rgroup: "SL3(2)", group: l.clone(), module: deleted_perm_module(&l, 3), brauer: Box::new(move |g| fix(g) - 1) });
    out
}

fn criterion_10(o: &mut Outcome) {
    let rt = catalog::rtable().unwrap();
    let modules = samples();
    let classes: Vec<_> = modules.iter().map(|s| classes_with_elements(&s.group, 1 << 20).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut checked, mut bounded) = (0, 0);
    while checked < 100 {
        let k = checked % modules.len();
        let s = &modules[k];
        let gens = s.group.generators();
        let letters: Vec<usize> = (0..rng.gen_range(1..24)).map(|_| rng.gen_range(0..gens.len())).collect();
        let mut x = letters.iter().fold(Permutation::identity(s.group.degree()), |acc, &i| acc.mul(&gens[i]));
        let mut m = s.module.word(&letters);
        let mut o_x = x.order();
        while o_x % s.module.p == 0 {
            x = x.pow(s.module.p as i64);
            m = m.pow(s.module.p);
            o_x /= s.module.p;
        }
        if x.is_identity() {
            continue;
        }
        let values: Vec<_> = (0..o_x).map(|i| repcheck::cyclo::Cyclotomic::from_integer((s.brauer)(&x.pow(i as i64)))).collect();
        let from_brauer = fixed_dim_from_brauer(&values).unwrap();
        let rank = fixed_space_dim(&m) as u64;
        o.check(from_brauer == rank, format!("{}: element of order {o_x}: Brauer {from_brauer}, rank {rank}", s.label));
        if fixed_by_all(&s.module) == 0 {
            let (cd, ec) = &classes[k];
            let class = ec.class_of[ec.elements.index_of_perm(&x).unwrap()] as usize;
            let r = rt.r_of(s.rgroup, cd.element_orders[class], cd.sizes[class]);
            let cap = bounds::fix_dim_upper(s.module.n as u64, r).unwrap();
            o.check(rank <= cap, format!("{}: fixed dim {rank} > {cap} (r = {r})", s.label));
            bounded += 1;
        }
        checked += 1;
    }
    o.note(format!("{checked} samples over {} modules, {bounded} bound checks", modules.len()));
}

fn criterion_11(o: &mut Outcome) {
    let mut groups = 0;
    for e in catalog::list().iter().filter(|e| e.recipe == Recipe::Construct) {
        let g = catalog::build(e.name).unwrap();
        if e.order <= 100 {
            let t = dixon_schneider(&g, 0).unwrap();
            if let Err(m) = common::regular_decomposition_oracle(&g, &t) {
                o.check(false, format!("{}: {m}", e.name));
            }
            groups += 1;
        }
        if e.order <= 200 {
            let mut ours: Vec<(u64, u64, u64)> = subgroup_lattice(&g).unwrap().iter().map(|n| (n.order, n.class_size, n.abelianization_order)).collect();
            ours.sort_unstable();
            o.check(ours == common::lattice_oracle(&g), format!("{}: lattice differs", e.name));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let len = rng.gen_range(0..=20);
        let pool: BTreeSet<u64> = (0..len).map(|_| rng.gen_range(1..80)).collect();
        let target = rng.gen_range(0..500);
        let v: Vec<u64> = pool.iter().copied().collect();
        o.check(distinct_sum_feasible(target, &pool) == common::subset_sum_brute(target, &v), format!("subset sum {target} over {v:?}"));
    }
    o.note(format!("{groups} groups against the regular-decomposition oracle"));
}

#[test]
fn acceptance() {
    let criteria: [(usize, &str, fn(&mut Outcome)); 11] = [
        (1, "Hypothesis C verdicts on computed tables", criterion_1),
        (2, "real-degree verdicts on computed tables", criterion_2),
        (3, "shipped tables", criterion_3),
        (4, "N(H), W(H) and the subset-sum obstructions", criterion_4),
        (5, "b and N1", criterion_5),
        (6, "dimension thresholds", criterion_6),
        (7, "orbit censuses", criterion_7),
        (8, "table properties", criterion_8),
        (9, "splitting partitions", criterion_9),
        (10, "Brauer characters against ranks", criterion_10),
        (11, "oracle equivalence", criterion_11),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (k, title, f) in criteria {
        let start = Instant::now();
        let mut o = Outcome::new();
        f(&mut o);
        let pass = o.failures.is_empty();
        writeln!(out, "criterion {k:>2}: {}  {title} ({:.1?})", if pass { "PASS" } else { "FAIL" }, start.elapsed()).unwrap();
        for n in &o.notes {
            writeln!(out, "      {n}").unwrap();
        }
        for m in &o.failures {
            writeln!(out, "    ! {m}").unwrap();
        }
        out.flush().unwrap();
        if !pass {
            failed.push(k);
        }
    }
    assert_eq!(failed, KNOWN_FAILURES, "unexpected set of failing criteria");
}
