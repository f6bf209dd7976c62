//! Orbit lengths of A8 on its deleted permutation module over F_p.
//!
//! cargo run --release --example orbit_census -- 11

use repcheck::catalog;
use repcheck::modfp::{deleted_perm_module, orbit_census};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map_or(Ok(11), |s| s.parse())?;
    let a8 = catalog::build("A8")?;
    let m = deleted_perm_module(&a8, p);
    let c = orbit_census(&m)?;
    println!("A8 on F_{p}^{}: {} orbits", m.n, c.orbit_count());
    for (len, count) in &c.histogram {
        println!("{len:>8} x {count}");
    }
    println!("regular {}, of length |G|/2 {}", c.regular_count, c.half_regular_count);
    Ok(())
}
