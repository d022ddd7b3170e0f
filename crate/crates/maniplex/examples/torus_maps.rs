//! The {4,4} torus maps: 8(b² + c²) flags each, regular when bc(b − c) = 0
//! and chiral otherwise, polytopal except for the three smallest.

use maniplex::catalog::torus_44;
use maniplex::polytopality::pip_check;
use maniplex::symmetry::{two_orbit_class, TwoOrbitClass};

fn main() -> maniplex::Result<()> {
    println!("{:>8} {:>6} {:>10} {:>10}", "(b,c)", "flags", "class", "polytopal");
    for b in 0..=3i64 {
        for c in 0..=3i64 {
            if (b, c) == (0, 0) || b + c > 3 {
                continue;
            }
            let t = torus_44(b, c)?;
            let class = match two_orbit_class(&t) {
                TwoOrbitClass::Regular => "regular".to_string(),
                TwoOrbitClass::Class(colors) => format!("2_{colors}"),
                TwoOrbitClass::KOrbit(k) => format!("{k}-orbit"),
            };
            println!("{:>8} {:>6} {:>10} {:>10}", format!("({b},{c})"), t.flag_count(), class, pip_check(&t)?);
        }
    }
    Ok(())
}
