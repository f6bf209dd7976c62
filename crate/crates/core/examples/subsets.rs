//! Orbits on k-subsets, the sets N(H) and W(H), and the subset-sum obstruction.
//!
//! cargo run --example subsets -- "C7:C3" 3

use repcheck::bounds::{distinct_sum_feasible, nh_wh, subset_orbit_profile, SUBSET_BOUND};
use repcheck::catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "C7:C3".into());
    let k: usize = args.next().map_or(Ok(3), |s| s.parse())?;
    let h = catalog::build(&name)?;
    let (n, w) = nh_wh(&h)?;
    println!("N(H) = {n:?}\nW(H) = {w:?}");

    let profile = subset_orbit_profile(&h, k, SUBSET_BOUND, 0)?;
    for o in &profile.orbits {
        println!("orbit of size {:>4}, stabilizer order {}, |S/S'| = {}", o.size, o.stabilizer_order, o.stabilizer_abelianization);
    }
    let total: u64 = profile.orbits.iter().map(|o| o.size).sum();
    println!("{total} subsets; sum of distinct elements of W(H): {}", distinct_sum_feasible(total, &w));
    Ok(())
}
