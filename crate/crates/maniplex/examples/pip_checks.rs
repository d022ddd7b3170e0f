//! Polytopality checking: the direct intersection-property scan with its
//! witness, the recursive variants, and the equivalent string C-group
//! condition on the connection involutions of a regular maniplex.

use maniplex::catalog::{cube, torus_44};
use maniplex::polytopality::{is_string_c_group, pip_check_recursive, pip_check_witness, PipMode};

fn main() -> maniplex::Result<()> {
    for (name, p) in [("cube", cube(3)?), ("torus (1,1)", torus_44(1, 1)?), ("torus (2,1)", torus_44(2, 1)?)] {
        match pip_check_witness(&p)? {
            None => println!("{name}: polytopal"),
            Some(w) => println!(
                "{name}: not polytopal — flags {} and {} share both end sections but not the [{}, {}] one",
                w.flag_a, w.flag_b, w.lo, w.hi
            ),
        }
    }

    let big = cube(4)?;
    for mode in [PipMode::FacetOnly, PipMode::FacetAndVertex, PipMode::MedialTransitive] {
        println!("4-cube via {mode:?}: {}", pip_check_recursive(&big, mode)?);
    }

    for (name, p) in [("cube", cube(3)?), ("torus (1,1)", torus_44(1, 1)?)] {
        println!(
            "connection involutions of the {name} form a string C-group: {}",
            is_string_c_group(p.connections())?
        );
    }
    Ok(())
}
