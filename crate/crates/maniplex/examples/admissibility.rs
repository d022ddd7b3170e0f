//! T-admissibility and the polytopality of a mix. Two premaniplexes sharing
//! a symmetry type T can be mixed, the mix is T-admissible again, and for a
//! polytopal first factor the polytopality of the mix is decided by section
//! and variance conditions instead of a direct scan of the mix.

use maniplex::catalog::{point, simplex, torus_44, two_orbit_stg};
use maniplex::mixing::mix;
use maniplex::polytopality::{mix_polytopality, pip_check};
use maniplex::symmetry::is_admissible;
use maniplex::{ColorSet, Rooted};

fn demonstrate(name: &str, p1: &Rooted, p2: &Rooted, t: &Rooted) -> maniplex::Result<()> {
    assert!(is_admissible(p1, t)? && is_admissible(p2, t)?);
    let mixed = mix(p1, p2)?.mix;
    assert!(is_admissible(&mixed, t)?);
    let report = mix_polytopality(p1, p2, t)?;
    let direct = pip_check(&mixed)?;
    println!(
        "{name}: mix has {} flags and stays admissible; certificate: {}, direct: {direct}",
        mixed.flag_count(),
        report.verdict
    );
    if let Some(witness) = report.witness {
        println!("  failure witness: {witness:?}");
    }
    Ok(())
}

fn main() -> maniplex::Result<()> {
    let chiral_type = two_orbit_stg(3, ColorSet::empty())?;
    demonstrate("torus (1,2) ◊ torus (2,1) over 2_{}", &torus_44(1, 2)?, &torus_44(2, 1)?, &chiral_type)?;
    demonstrate("torus (1,2) ◊ torus (1,3) over 2_{}", &torus_44(1, 2)?, &torus_44(1, 3)?, &chiral_type)?;
    demonstrate(
        "tetrahedron ◊ 2_{1} over a point",
        &simplex(3)?,
        &two_orbit_stg(3, ColorSet::single(1))?,
        &point(3)?,
    )?;
    Ok(())
}
