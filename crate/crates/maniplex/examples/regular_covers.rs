//! Smallest regular covers. For a chiral map the cover is |X| times larger,
//! where X is the chirality group; for any two-orbit polytope its
//! polytopality is decided by a variance-group certificate without running
//! the intersection check on the (much larger) cover itself.

use maniplex::catalog::{cube, medial, torus_44};
use maniplex::mixing::smallest_regular_cover;
use maniplex::polytopality::{chirality_group_order, pip_check, regular_cover_polytopality};
use maniplex::Rooted;

fn report(name: &str, p: &Rooted) -> maniplex::Result<()> {
    let cover = smallest_regular_cover(p)?;
    let certificate = regular_cover_polytopality(p)?;
    let direct = pip_check(&cover)?;
    println!(
        "{name}: {} flags, cover {} flags; certificate: {}, direct check of the cover: {direct}",
        p.flag_count(),
        cover.flag_count(),
        certificate.verdict
    );
    Ok(())
}

fn main() -> maniplex::Result<()> {
    let chiral = torus_44(1, 2)?;
    println!("chirality group of torus (1,2) has order {}", chirality_group_order(&chiral)?);
    report("torus (1,2)", &chiral)?;
    report("cuboctahedron", &medial(&cube(3)?)?)?;
    report("rhombic dodecahedron", &medial(&cube(3)?)?.dual())?;
    Ok(())
}
