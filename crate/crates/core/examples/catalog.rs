//! Every catalog group, its order, and where its character table comes from.

use repcheck::catalog::{self, Recipe};

fn main() {
    for e in catalog::list() {
        let build = match e.recipe {
            Recipe::Construct => "constructed",
            Recipe::GroupFile(_) => "generators file",
            Recipe::TableOnly => "table only",
        };
        println!("{:<14} {:>18}  {:<15} table {:<9} {}", e.name, e.order, build, e.source_tag(), e.description);
    }
}
