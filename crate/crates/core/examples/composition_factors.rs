//! Chop the 15-point permutation module of GL(4,2) over F_3 and census the large factor.

use repcheck::catalog;
use repcheck::modfp::{chop, orbit_census, perm_module};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::build("GL(4,2)")?;
    let factors = chop(&perm_module(&g, 3), 0)?;
    for f in &factors {
        println!("factor of dimension {} with multiplicity {}", f.module.n, f.multiplicity);
    }
    if let Some(f) = factors.iter().max_by_key(|f| f.module.n) {
        let c = orbit_census(&f.module)?;
        println!("{}-dimensional factor: {} regular orbits out of {}", f.module.n, c.regular_count, c.orbit_count());
    }
    Ok(())
}
