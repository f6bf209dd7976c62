//! Self-associate partitions with a prescribed number of diagonal nodes.

use repcheck::bounds::splitting_partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 13..=24 {
        let p = splitting_partition(n)?;
        let parts: Vec<String> = p.parts.iter().map(|x| x.to_string()).collect();
        println!("n = {n:>2}: ({}) diagonal {}", parts.join(","), p.diagonal);
    }
    Ok(())
}
