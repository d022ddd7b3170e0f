//! Automorphism groups, flag orbits, and symmetry type graphs: a regular
//! polyhedron, a chiral torus map, a two-orbit polyhedron in class 2_{0,1},
//! and a three-orbit premaniplex.

use maniplex::catalog::{cube, medial, three_orbit_pair, torus_44};
use maniplex::symmetry::{automorphisms, full_symmetry_type_graph, two_orbit_class, TwoOrbitClass};
use maniplex::Rooted;

fn describe(name: &str, p: &Rooted) {
    let group = automorphisms(p);
    let class = match two_orbit_class(p) {
        TwoOrbitClass::Regular => "regular".to_string(),
        TwoOrbitClass::Class(colors) => format!("class 2_{colors}"),
        TwoOrbitClass::KOrbit(k) => format!("{k} orbits"),
    };
    let stg = full_symmetry_type_graph(p);
    let plural = if stg.flag_count() == 1 { "" } else { "s" };
    println!(
        "{name}: {} flags, |Γ| = {}, {class}; symmetry type graph has {} flag{plural}",
        p.flag_count(),
        group.order(),
        stg.flag_count()
    );
}

fn main() -> maniplex::Result<()> {
    describe("cube", &cube(3)?);
    describe("torus (1,2)", &torus_44(1, 2)?);
    describe("cuboctahedron", &medial(&cube(3)?)?);
    let (a, b) = three_orbit_pair();
    describe("three-orbit premaniplex A", &a);
    describe("three-orbit premaniplex B", &b);
    Ok(())
}
