//! D(G) from class data: |P| from the table, r(G) from the shipped exceptions.

use repcheck::bounds::{dimension_threshold, prime_order_cyclic_count_from};
use repcheck::catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rt = catalog::rtable()?;
    for name in ["SL3(2)", "A8", "M11", "SL2(8).3", "SU3(3)", "M22", "M23", "M24", "McL"] {
        let t = catalog::load_table(name)?;
        let cd = &t.classes;
        let pcount = prime_order_cyclic_count_from(&cd.element_orders, &cd.sizes);
        let classes: Vec<(u64, u64)> = cd.element_orders.iter().copied().zip(cd.sizes.iter().copied()).collect();
        let r = rt.r_max(name, &classes);
        println!("{name:<10} |G| = {:<12} |P| = {pcount:<10} r = {r}  D = {}", t.group_order(), dimension_threshold(t.group_order(), pcount, r)?);
    }
    Ok(())
}
