//! Compute a character table from generators and print it with indicators.
//!
//! cargo run --example character_table -- "SL2(3)"

use repcheck::catalog;
use repcheck::chartab::dixon_schneider;
use repcheck::ctformat::{emit_table, TableFile};
use repcheck::hypc::{indicator_symbol, indicators};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let g = catalog::build(&name)?;
    let mut t = dixon_schneider(&g, 0)?;
    t.name = name;
    t.validate()?;
    let ind = indicators(&t)?;
    for (i, d) in t.degrees().iter().enumerate() {
        println!("X.{:<3} degree {d:>4}  indicator {}", i + 1, indicator_symbol(ind[i]));
    }
    println!();
    print!("{}", emit_table(&TableFile::from_table(&t)));
    Ok(())
}
