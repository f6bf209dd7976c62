//! Hypothesis C and the real-degree check over every catalog group with recorded verdicts.

use repcheck::catalog;
use repcheck::hypc::{check_hypothesis_c, real_degree_profile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog::list().iter().filter(|e| e.expect_hypc.is_some()) {
        let t = catalog::table(e.name, 0)?;
        let h = check_hypothesis_c(&t)?;
        let real = real_degree_profile(&t)?;
        let mark = |got: bool, want: Option<bool>| if Some(got) == want { "" } else { " (unexpected)" };
        println!(
            "{:<14} {:<9} hypc {}{}  real degrees {}{}",
            e.name,
            e.source_tag(),
            if h.pass { "PASS" } else { "FAIL" },
            mark(h.pass, e.expect_hypc),
            if real.verdict.pass { "distinct" } else { "repeated" },
            mark(real.verdict.pass, e.expect_corb),
        );
        for w in &h.witnesses {
            println!("{:16}{w}", "");
        }
    }
    Ok(())
}
